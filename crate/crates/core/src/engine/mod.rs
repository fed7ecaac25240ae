//! Parameter vectors, their sequences and the polynomial systems they generate.

mod params;
mod system;

pub use params::{CheckReport, CheckedParameters, ParameterVector, SeqKind, SequenceView};
pub use system::{
    a0_coeff, apply_l, dual_normalized_u, duality_check, duality_table, expansion, finite_cutoff, monic_by_recurrence,
    monic_poly, newton_basis, normalized_u, recurrence_check, recurrence_coeffs, NewtonExpansion, PolySystem,
};
