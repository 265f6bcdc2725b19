//! Error type shared by the evaluation and chamber modules.

/// Errors raised when inputs leave the domain of the invariants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The ramification degree must be a positive integer.
    #[error("degree y must be at least 1 (got {0})")]
    InvalidDegree(u32),

    /// Evaluation points must satisfy `1 + sum(x) >= y`.
    #[error("point lies outside the parameter space: 1 + sum(x) = {bound} < y = {y}")]
    OutsideParameterSpace { bound: u64, y: u32 },

    /// The invariants are defined for at least two marked insertions.
    #[error("need at least two marked insertions (got {0})")]
    TooFewMarks(usize),

    /// A subset referenced a mark index outside `1..=m`.
    #[error("mark index {index} outside 1..={m}")]
    MarkIndexOutOfRange { index: usize, m: usize },

    /// Resonance subsets must satisfy `1 <= |I| <= m - 2`.
    #[error("subset of size {size} is not a resonance for m = {m} (need 1 <= |I| <= m-2)")]
    NotAResonance { size: usize, m: usize },

    /// `chamber_poly` and `r_i_poly` accept subsets with `|I| <= m - 2` only.
    #[error("subset of size {size} exceeds the limit m-2 = {limit}")]
    SubsetTooLarge { size: usize, limit: i64 },
}
