use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    CharTwo,
    #[error("field size {0} exceeds the supported table range")]
    FieldTooLarge(u64),
    #[error("supplied modulus is reducible: it has an irreducible factor of degree {factor_degree}")]
    ReducibleModulus { factor_degree: usize },
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    BadModulusShape { expected: usize, got: usize },
    #[error("no embedding F_{{{p}^{m}}} -> F_{{{p}^{n}}}: {m} does not divide {n}")]
    NoEmbedding { p: u64, m: u32, n: u32 },
    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("curve has zero discriminant over F_{q}")]
    BadReduction { q: u64 },
    #[error("point ({x}, {y}) does not lie on the curve")]
    OffCurve { x: u64, y: u64 },

    #[error("invalid surface parameters: {0}")]
    BadParams(String),
    #[error("fiber over a 2-torsion base point; use the special-fiber equation")]
    SpecialFiber,
    #[error("base point must not be 2-torsion")]
    TwoTorsionBase,
    #[error("fiber sextic vanishes identically at base point with x = {x_code}")]
    DegenerateFiber { x_code: u64 },
    #[error("special-fiber expansion mismatch in section {section}: coefficient of t^{order} Z0'^{z0_pow} differs")]
    ExpansionMismatch {
        section: usize,
        order: usize,
        z0_pow: usize,
    },

    #[error("power sum s_{n} = {value} violates the Weil bound {bound}; a point count is corrupt")]
    CorruptCount { n: usize, value: i128, bound: i128 },
    #[error("Newton coefficient b_{k} is not integral; input power sums are inconsistent")]
    NonIntegralNewton { k: usize },
    #[error("functional-equation sign is ambiguous: both completions admit a half-degree rational factor")]
    AmbiguousSign,
    #[error("functional-equation sign unresolvable: neither completion admits a half-degree rational factor")]
    NoSign,
    #[error("no splitting of the middle factor passes the Weil checks")]
    NoCandidateSplitting,
    #[error("quotient census total {census} matches {matches} candidate(s); expected exactly one")]
    CandidateSelection { census: i128, matches: usize },

    #[error("polynomials live in incompatible rings (arity or coefficient field differ)")]
    RingMismatch,
    #[error("invalid ideal JSON: {0}")]
    IdealFormat(String),

    #[error("pipeline stage `{stage}` failed: {detail}")]
    Stage { stage: String, detail: String },

    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
