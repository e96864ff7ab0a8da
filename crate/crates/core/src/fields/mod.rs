//! Constructors for every field family of the suite.

pub mod closed;
pub mod dihedral;
pub mod polyhedral;

pub use closed::{
    dihedral_q_closed_form, dihedral_v_closed_form, icosa_induced_closed_form, octa_closed_form,
    tetra_closed_form,
};
pub use dihedral::{
    ansatz_basis, companion_tuple, dihedral_constraint_system, dihedral_q, dihedral_v, hex_forms,
    order0_tuple, quadratic_pair, solve_dihedral_constraints, swap_lift, DihedralAnsatz,
    DihedralFamily,
};
pub use polyhedral::{
    beltramize, cyclic_lift, harmonic, harmonic_at, helmholtz_scalar, icosa_seed_even,
    icosa_seed_golden, induce_icosahedral, octa_precurl, octa_precurl_capped, tetra_precurl,
    tetra_precurl_capped, HarmonicKind, OctaFamilySpec, TetraFamilySpec, Variant, DEFAULT_ELL_CAP,
};
