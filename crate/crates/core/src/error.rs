use thiserror::Error;

use crate::semiring::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A table is not total over the carrier or names an index out of range.
    #[error("malformed structure: {0}")]
    Structural(String),

    /// Tables are well formed but some axiom fails.
    #[error("axiom check failed for {label}: {report}")]
    Axioms { label: String, report: AxiomReport },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{what} needs {needed} but the configured cap is {cap}")]
    Resource { what: String, needed: u128, cap: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The subsemimodule handed to a routine requiring subtractivity is not
    /// subtractive: `element + ell = ell_prime` with `ell, ell_prime` inside
    /// but `element` outside.
    #[error(
        "subsemimodule is not subtractive: {element} + {ell} = {ell_prime} with {ell}, {ell_prime} inside but {element} outside"
    )]
    NotSubtractive {
        element: usize,
        ell: usize,
        ell_prime: usize,
    },

    /// Same failure for an infinite ideal family given by a predicate.
    #[error("{family} is not subtractive: {element} + {ell} = {ell_prime} with {ell}, {ell_prime} inside but {element} outside")]
    NotSubtractiveFamily {
        family: String,
        element: String,
        ell: String,
        ell_prime: String,
    },

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn resource(what: impl Into<String>, needed: u128, cap: u128) -> Self {
        Error::Resource {
            what: what.into(),
            needed,
            cap,
        }
    }
}
