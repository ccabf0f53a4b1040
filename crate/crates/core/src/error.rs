use thiserror::Error;

/// Errors shared across the library.
///
/// Domain violations carry enough text to be actionable from the CLI; they
/// are distinct from usage errors (bad flags, unparsable input), which the
/// CLI layer maps to a different exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation that requires a nonzero polynomial received zero.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// Critical-value extraction needs degree at least 2.
    #[error("no critical values: degree {0} polynomial")]
    NoCriticalValues(usize),

    /// The curve parameter collides with one of the fixed branch points.
    #[error("singular curve: parameter {0} lies in the fixed branch locus")]
    SingularCurve(String),

    /// The isomorphism criterion is only a theorem from genus 6 on.
    #[error("criterion proven only for g >= 6 (got g = {0})")]
    GenusTooSmall(u32),

    /// A minimal polynomial input was not monic/squarefree/irreducible.
    #[error("invalid minimal polynomial: {0}")]
    BadMinimalPolynomial(String),

    /// The factored-map verification identity failed.
    #[error("Lagrange identity violated")]
    LagrangeIdentity,

    /// A Belyi-chain verification found a tracked value it cannot image.
    #[error("belyi chain invalid: {0}")]
    BadChain(String),

    /// Permutations of mismatched degree were combined.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    /// A permutation-group operation exceeded the supported degree.
    #[error("degree {0} exceeds supported bound {1}")]
    DegreeTooLarge(usize, usize),

    /// Group element enumeration exceeded the supported order.
    #[error("group order {0} exceeds enumeration bound {1}")]
    OrderTooLarge(String, String),

    /// A triple failed the spherical-system conditions.
    #[error("not a spherical system: {0}")]
    NotSpherical(String),

    /// Cycle-type data inconsistent with a polynomial covering.
    #[error("type count violates Riemann–Hurwitz for polynomials")]
    PolynomialTypeCount,

    /// The triangle-genus formula did not produce an integer.
    #[error("orders do not divide group order consistently")]
    BadTriangleGenus,

    /// The monodromy action is not transitive.
    #[error("monodromy not transitive")]
    NotTransitive,

    /// A degenerate monodromy entry (identity) was supplied where a genuine
    /// branch point is required.
    #[error("degenerate monodromy: {0}")]
    DegenerateMonodromy(String),

    /// The two triples of a would-be Beauville structure share nontrivial
    /// stabilizer conjugates.
    #[error("action not free")]
    ActionNotFree,

    /// Marked generator images fail to generate the target group.
    #[error("markings do not generate")]
    MarkingsDoNotGenerate,

    /// A presentation/word referenced a generator that does not exist.
    #[error("bad word: generator index {0} out of range")]
    BadWord(i32),

    /// Input data failed validation for the stated reason.
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
