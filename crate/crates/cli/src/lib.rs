//! Campaign logic behind the `dompack` binary: graph input, per-instance
//! records, bound-verification campaigns, extremal search and lemma checks.

pub mod campaign;
pub mod input;
pub mod lemma;
pub mod output;
pub mod record;
pub mod search;
