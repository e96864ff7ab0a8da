use lambent::calculus::{curl, div, laplacian};
use lambent::fields::*;
use lambent::groups::{icosa_group, is_invariant};

fn main() {
    let seed = icosa_seed_even();
    let induced = induce_icosahedral(&seed).unwrap();
    let fixture = icosa_induced_closed_form();

    println!("induced(seed) == fixture: {}", induced == fixture);
    println!("induced terms: {}", induced.component(0).num_terms());
    println!("fixture terms: {}", fixture.component(0).num_terms());

    let belt_seed = beltramize(&seed).unwrap();
    let induced_belt = induce_icosahedral(&belt_seed).unwrap();
    println!("induced(beltramize(seed)) == fixture: {}", induced_belt == fixture);
    println!("even part of induced_belt == fixture: {}", induced_belt.even_part() == fixture);

    // commutation: beltramize(induce(seed)) == induce(beltramize(seed))
    let belt_induced = beltramize(&induced).unwrap();
    println!("beltramize . induce == induce . beltramize: {}", belt_induced == induced_belt);

    // fixture properties
    println!("fixture solenoidal: {}", div(&fixture).is_zero());
    println!("fixture helmholtz: {}", (&laplacian(&fixture) + &fixture).is_zero());
    println!("fixture curl-eigen: {}", curl(&fixture).unwrap() == fixture);
    println!("induced_belt curl-eigen: {}", curl(&induced_belt).unwrap() == induced_belt);
    let inv = is_invariant(&induced_belt, &icosa_group()).unwrap();
    println!("induced_belt icosa-invariant: {}", inv.invariant);
    let invf = is_invariant(&fixture, &icosa_group()).unwrap();
    println!("fixture icosa-invariant: {}", invf.invariant);
}
