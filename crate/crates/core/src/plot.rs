//! Minimal SVG rendering of planar orbits, fixed view box [-30, 30]^2.

use crate::dynamics::Orbit;

const PALETTE: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

/// Renders each orbit as one polyline. Points are decimated by `stride`
/// (every `stride`-th sample) to keep files small; the CSV keeps everything.
pub fn orbits_svg(orbits: &[Orbit], stride: usize) -> String {
    let stride = stride.max(1);
    let mut svg = String::new();
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-30 -30 60 60\" width=\"720\" height=\"720\">\n",
    );
    svg.push_str("<rect x=\"-30\" y=\"-30\" width=\"60\" height=\"60\" fill=\"white\"/>\n");
    svg.push_str("<line x1=\"-30\" y1=\"0\" x2=\"30\" y2=\"0\" stroke=\"#cccccc\" stroke-width=\"0.05\"/>\n");
    svg.push_str("<line x1=\"0\" y1=\"-30\" x2=\"0\" y2=\"30\" stroke=\"#cccccc\" stroke-width=\"0.05\"/>\n");
    for (i, orbit) in orbits.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut points = String::new();
        for (k, (_, p)) in orbit.samples.iter().enumerate() {
            if k % stride != 0 && k + 1 != orbit.samples.len() {
                continue;
            }
            // SVG y axis points down
            points.push_str(&format!("{},{} ", p[0], -p[1]));
        }
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"0.06\"/>\n",
            points.trim_end(),
            color
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
