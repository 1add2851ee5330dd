//! Burau representations, the Squier form and the target-group conditions.

mod diag;
mod gamma;
mod rep;

pub use diag::{
    conj_m, d_matrix, evaluation_criteria, evaluation_predicates, is_laurent, m_matrix, ConjDirection, DiagData,
    EvaluationReport,
};
pub use gamma::{embed_trivial, gamma_membership, gamma_prime_membership, GammaPrimeReport, GammaReport};
pub use rep::{burau_generator, burau_matrix, salter_vectors, squier_form, BurauKind};
