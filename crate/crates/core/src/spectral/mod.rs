//! Sombor matrix, its spectrum by dense eigensolve and by equitable quotient,
//! and Sombor energy.

mod eigen;
mod energy;
mod matrix;
mod quotient;
mod spectrum;

pub use eigen::{eig_sym, eig_sym_with, eigenvalues, EigenSolver, JACOBI_MAX_SWEEPS};
pub use energy::{
    energy, energy_bounds, energy_lower_bound, energy_report, printed_energy_closed_form, ClosedFormCase, EnergyReport,
};
pub use matrix::{sombor_matrix, SymMatrix, DENSE_EIG_MAX_ORDER};
pub use quotient::{
    quotient_matrix, spectrum_full, spectrum_theoretical, theoretical_eigenvalues, QuotientCell, QuotientMatrix,
};
pub use spectrum::{Spectrum, DEFAULT_CLUSTER_TOL};
