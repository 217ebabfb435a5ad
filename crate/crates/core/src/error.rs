use thiserror::Error;

/// Errors produced by the library.
///
/// Checked failures (an invalid grading, a witness that does not verify, a
/// decomposition that is not compatible) are ordinary values of this type;
/// they are distinct from panics, which indicate internal bugs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("minimal polynomial is not monic of degree >= 2")]
    BadMinimalPolynomial,
    #[error("minimal polynomial is reducible: it has the factor {0}")]
    ReduciblePolynomial(String),
    #[error("unsupported exact computation: {0}")]
    Unsupported(String),
    #[error("zero input where a nonzero value is required")]
    ZeroInput,
    #[error("zero generator in a multiplicative subgroup")]
    ZeroGenerator,
    #[error("value is not a member of the generated subgroup")]
    NotInSubgroup,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("group elements belong to different groups")]
    GroupMismatch,
    #[error("relation {relation:?} is not killed: maps to {image:?}")]
    RelationNotKilled {
        relation: Vec<String>,
        image: Vec<String>,
    },
    #[error("subspaces belong to different ambient algebras")]
    AmbientMismatch,
    #[error("components do not form a direct sum: dimensions sum to {total} in ambient dimension {ambient}")]
    NotDirectSum { total: usize, ambient: usize },
    #[error("grading axiom violated at degrees {g:?} * {h:?}")]
    AxiomViolated {
        g: Vec<String>,
        h: Vec<String>,
        witness: Vec<String>,
    },
    #[error("the grading is not a realization of the universal one: component sets differ")]
    NotARealization,
    #[error("decompositions are not compatible: intersections lose {deficit} dimensions")]
    NotCompatible { deficit: usize },
    #[error("linear map is not an automorphism")]
    NotAnAutomorphism,
    #[error("automorphism does not preserve the component at degree {degree:?}")]
    ComponentNotPreserved { degree: Vec<String> },
    #[error("characteristic polynomial does not split over the field; irreducible factor degrees {degrees:?}")]
    NotSplitOverField { degrees: Vec<usize> },
    #[error("map is not diagonalizable: eigenspaces span {found} of {ambient} dimensions")]
    NotDiagonalizable { found: usize, ambient: usize },
    #[error("group homomorphism is not an isomorphism")]
    NotAnIsomorphism,
    #[error("the comodule map is not a generic automorphism: {0}")]
    NotAGenericAutomorphism(String),
    #[error("no primitive root of unity of order {order} in the field")]
    CharacterValueUnavailable { order: String },
    #[error("invalid character value at generator {index}")]
    InvalidCharacterValue { index: usize },
    #[error("component at degree {degree:?} is not defined over the base field")]
    NotDefinedOverBase { degree: Vec<String> },
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
