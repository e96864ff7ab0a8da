//! Finite orthogonal matrix groups: generators, closure enumeration, and the
//! conjugation action on vector fields.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::exact::{rat, Disc, ExactMatrix, QuadExt};
use crate::symfun::{SymFun, VecField};

/// An exactly orthogonal matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    matrix: ExactMatrix,
}

impl GroupElement {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if !matrix.is_orthogonal() {
            return Err(Error::NotOrthogonal);
        }
        Ok(GroupElement { matrix })
    }

    pub fn identity(dim: usize, disc: Disc) -> Self {
        GroupElement { matrix: ExactMatrix::identity(dim, disc).expect("valid dim") }
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn disc(&self) -> Disc {
        self.matrix.disc()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(GroupElement { matrix: self.matrix.mul(&other.matrix)? })
    }

    /// Inverse of an orthogonal matrix is its transpose.
    pub fn inverse(&self) -> Self {
        GroupElement { matrix: self.matrix.transpose() }
    }

    pub fn pow(&self, k: u32) -> Self {
        GroupElement { matrix: self.matrix.pow(k) }
    }

    pub fn det(&self) -> QuadExt {
        self.matrix.det()
    }
}

/// A finite set of orthogonal matrices closed under multiplication.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<GroupElement>,
    index: HashSet<ExactMatrix>,
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains(g.matrix())
    }

    pub fn is_subset_of(&self, other: &FiniteGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn dim(&self) -> usize {
        self.elements[0].dim()
    }

    pub fn disc(&self) -> Disc {
        self.elements[0].disc()
    }
}

pub const DEFAULT_CLOSURE_CAP: usize = 240;

/// Breadth-first closure of the generator set under exact multiplication.
/// Exceeding `cap` signals wrong generator entry rather than a big group.
pub fn generate_closure(name: &str, generators: &[GroupElement], cap: usize) -> Result<FiniteGroup> {
    assert!(!generators.is_empty(), "at least one generator");
    let dim = generators[0].dim();
    let disc = generators[0].disc();
    for g in generators {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch(g.dim(), dim));
        }
        if g.disc() != disc {
            return Err(Error::DiscMismatch(disc.radicand(), g.disc().radicand()));
        }
    }

    let identity = GroupElement::identity(dim, disc);
    let mut elements = vec![identity.clone()];
    let mut index: HashSet<ExactMatrix> = HashSet::from([identity.matrix().clone()]);
    let mut queue: VecDeque<GroupElement> = VecDeque::from([identity]);

    while let Some(g) = queue.pop_front() {
        for gen in generators {
            let h = g.mul(gen)?;
            if index.insert(h.matrix().clone()) {
                if index.len() > cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }

    Ok(FiniteGroup { name: name.to_owned(), elements, index })
}

fn quad(a: (i64, i64), b: (i64, i64), d: Disc) -> QuadExt {
    QuadExt::new(rat(a.0, a.1), rat(b.0, b.1), d)
}

/// Generator `diag(1, -1, -1)`.
pub fn alpha() -> GroupElement {
    GroupElement::new(
        ExactMatrix::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]], Disc::Sqrt5).expect("valid"),
    )
    .expect("orthogonal")
}

/// Generator swapping x and y.
pub fn beta() -> GroupElement {
    GroupElement::new(
        ExactMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]], Disc::Sqrt5).expect("valid"),
    )
    .expect("orthogonal")
}

/// Cyclic coordinate permutation (x, y, z) -> (y, z, x).
pub fn gamma() -> GroupElement {
    GroupElement::new(
        ExactMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]], Disc::Sqrt5).expect("valid"),
    )
    .expect("orthogonal")
}

/// Generator swapping x and y with a z sign flip.
pub fn delta() -> GroupElement {
    GroupElement::new(
        ExactMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]], Disc::Sqrt5).expect("valid"),
    )
    .expect("orthogonal")
}

/// The order-5 rotation with golden-ratio entries extending the tetrahedral
/// group to the icosahedral one.
pub fn eta() -> GroupElement {
    let d = Disc::Sqrt5;
    // phi/2 = 1/4 + sqrt(5)/4, 1/(2 phi) = -1/4 + sqrt(5)/4
    let half = quad((1, 2), (0, 1), d);
    let phi_half = quad((1, 4), (1, 4), d);
    let inv_two_phi = quad((-1, 4), (1, 4), d);
    let m = ExactMatrix::from_rows(vec![
        vec![half.clone(), -&phi_half, inv_two_phi.clone()],
        vec![phi_half.clone(), inv_two_phi.clone(), -&half],
        vec![inv_two_phi, half.clone(), phi_half],
    ])
    .expect("valid");
    GroupElement::new(m).expect("orthogonal")
}

/// 2-D rotation by 2*pi/3 over Q(sqrt(3)).
pub fn dihedral_alpha() -> GroupElement {
    let d = Disc::Sqrt3;
    let m = ExactMatrix::from_rows(vec![
        vec![quad((-1, 2), (0, 1), d), quad((0, 1), (-1, 2), d)],
        vec![quad((0, 1), (1, 2), d), quad((-1, 2), (0, 1), d)],
    ])
    .expect("valid");
    GroupElement::new(m).expect("orthogonal")
}

/// 2-D coordinate swap.
pub fn dihedral_beta() -> GroupElement {
    GroupElement::new(ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]], Disc::Sqrt3).expect("valid"))
        .expect("orthogonal")
}

pub fn tetra_group() -> FiniteGroup {
    generate_closure("T", &[alpha(), gamma()], DEFAULT_CLOSURE_CAP).expect("closes at 12")
}

pub fn full_tetra_group() -> FiniteGroup {
    generate_closure("That", &[alpha(), beta(), gamma()], DEFAULT_CLOSURE_CAP).expect("closes at 24")
}

pub fn octa_group() -> FiniteGroup {
    generate_closure("O", &[alpha(), gamma(), delta()], DEFAULT_CLOSURE_CAP).expect("closes at 24")
}

pub fn icosa_group() -> FiniteGroup {
    generate_closure("I", &[alpha(), gamma(), eta()], DEFAULT_CLOSURE_CAP).expect("closes at 60")
}

pub fn klein_group() -> FiniteGroup {
    let a = alpha();
    let b = GroupElement::new(
        ExactMatrix::from_int_rows(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, -1]], Disc::Sqrt5).expect("valid"),
    )
    .expect("orthogonal");
    generate_closure("K", &[a, b], DEFAULT_CLOSURE_CAP).expect("closes at 4")
}

pub fn dihedral3_group() -> FiniteGroup {
    generate_closure("D3", &[dihedral_alpha(), dihedral_beta()], DEFAULT_CLOSURE_CAP).expect("closes at 6")
}

/// Looks up one of the named groups of the standard suite.
pub fn group_by_name(name: &str) -> Option<FiniteGroup> {
    match name {
        "T" | "tetra" => Some(tetra_group()),
        "That" | "full-tetra" => Some(full_tetra_group()),
        "O" | "octa" => Some(octa_group()),
        "I" | "icosa" => Some(icosa_group()),
        "K" | "klein" => Some(klein_group()),
        "D3" | "dihedral" => Some(dihedral3_group()),
        _ => None,
    }
}

/// The conjugated field `eps^{-1} . F(eps x)`, computed exactly.
pub fn conjugate_field(field: &VecField, eps: &GroupElement) -> Result<VecField> {
    if eps.dim() != field.dim() {
        return Err(Error::DimensionMismatch(eps.dim(), field.dim()));
    }
    let n = field.dim();
    let composed: Vec<SymFun> = field
        .components()
        .iter()
        .map(|f| f.substitute_matrix(eps.matrix()))
        .collect::<Result<Vec<_>>>()?;
    let inv = eps.matrix().transpose();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = SymFun::zero(n, field.disc());
        for (i, g) in composed.iter().enumerate() {
            acc = acc.try_add(&g.scale(inv.entry(j, i)))?;
        }
        out.push(acc);
    }
    VecField::new(out)
}

#[derive(Clone, Debug)]
pub struct InvarianceCheck {
    pub invariant: bool,
    /// Indices (into `group.elements()`) of all violating elements.
    pub violations: Vec<usize>,
}

/// Checks `conjugate_field(F, eps) = F` exactly for every element.
pub fn is_invariant(field: &VecField, group: &FiniteGroup) -> Result<InvarianceCheck> {
    let mut violations = Vec::new();
    for (i, g) in group.elements().iter().enumerate() {
        if &conjugate_field(field, g)? != field {
            violations.push(i);
        }
    }
    Ok(InvarianceCheck { invariant: violations.is_empty(), violations })
}

/// Permutation matrix sending coordinate `i` to coordinate `perm[i]`,
/// as a group element over the given discriminant.
pub fn permutation_element(perm: &[usize], disc: Disc) -> GroupElement {
    let n = perm.len();
    let mut rows = vec![vec![QuadExt::zero(disc); n]; n];
    for (i, &p) in perm.iter().enumerate() {
        rows[i][p] = QuadExt::one(disc);
    }
    GroupElement::new(ExactMatrix::from_rows(rows).expect("valid")).expect("orthogonal")
}

/// Applies the Galois automorphism to all coefficients and then the given
/// coordinate permutation, i.e. the conjugated field of the conjugated
/// coefficients. Used for the sqrt(5) symmetry checks of the seed scalars.
pub fn galois_map_field(field: &VecField, perm: &[usize]) -> Result<VecField> {
    let swapped = permutation_element(perm, field.disc());
    conjugate_field(&field.galois_conj(), &swapped)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(tetra_group().len(), 12);
        assert_eq!(full_tetra_group().len(), 24);
        assert_eq!(octa_group().len(), 24);
        assert_eq!(icosa_group().len(), 60);
        assert_eq!(klein_group().len(), 4);
        assert_eq!(dihedral3_group().len(), 6);
    }

    #[test]
    fn subgroup_inclusions() {
        let t = tetra_group();
        assert!(klein_group().is_subset_of(&t));
        assert!(t.is_subset_of(&octa_group()));
        assert!(t.is_subset_of(&icosa_group()));
        assert!(!octa_group().is_subset_of(&icosa_group()));
    }

    #[test]
    fn eta_relations() {
        let e = eta();
        assert!(e.matrix().is_orthogonal());
        assert_eq!(e.det(), QuadExt::one(Disc::Sqrt5));
        let id = GroupElement::identity(3, Disc::Sqrt5);
        assert_eq!(e.pow(5), id);
        let t = tetra_group();
        // eta alpha eta^2 and eta gamma eta^3 land back in the tetrahedral group
        let a_hat = e.mul(&alpha()).unwrap().mul(&e.pow(2)).unwrap();
        let g_hat = e.mul(&gamma()).unwrap().mul(&e.pow(3)).unwrap();
        assert!(t.contains(&a_hat));
        assert!(t.contains(&g_hat));
    }

    #[test]
    fn closure_cap_rejects_runaway_generators() {
        let result = generate_closure("bad", &[alpha(), gamma(), eta()], 30);
        assert!(matches!(result, Err(Error::ClosureCapExceeded(30))));
    }

    #[test]
    fn deterministic_element_order() {
        let a = icosa_group();
        let b = icosa_group();
        assert_eq!(a.elements(), b.elements());
    }
}
