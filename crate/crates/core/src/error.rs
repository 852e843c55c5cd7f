use thiserror::Error;

/// Axiom of a partial order, used when reporting why a pair set was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl std::fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OrderAxiom::Reflexivity => "reflexivity",
            OrderAxiom::Antisymmetry => "antisymmetry",
            OrderAxiom::Transitivity => "transitivity",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GotasError {
    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("index {index} out of range for universe of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("subsets belong to different universes")]
    MixedUniverse,

    #[error("order violates {axiom}: {witness}")]
    OrderViolation { axiom: OrderAxiom, witness: String },

    #[error("universe of size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("oracle found no unique {extremum} among {candidates}")]
    NoUniqueExtremum {
        extremum: &'static str,
        candidates: String,
    },

    #[error("invalid space document: {0}")]
    Document(String),
}

pub type Result<T, E = GotasError> = std::result::Result<T, E>;
