//! Shift-orbit machinery: discrete residues, additive and multiplicative
//! telescoping, dispersion and rational solutions of linear difference
//! equations.

mod abramov;
mod dispersion;
mod multiplicative;
mod orbit;
mod relation;
mod residues;
mod telescoper;

pub use abramov::{
    abramov_rational_solutions, abramov_rational_solutions_with, apply_operator,
    polynomial_solutions, universal_denominator, AffineSolutions,
};
pub use dispersion::{dispersion, shift_resultant};
pub use multiplicative::solve_multiplicative;
pub use orbit::{shift_equivalent, OrbitClass};
pub use relation::{integer_residue_relation, normalize_pair, IntRelation};
pub use residues::{
    discrete_residues, discrete_residues_step, discrete_residues_with, is_summable,
    is_summable_with, ResidueEntry, ResidueTable,
};
pub use telescoper::{poly_antidifference, solve_telescoper, solve_telescoper_step, solve_telescoper_with};
