use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid defect count s={s} for n={n}")]
    InvalidDefectCount { n: usize, s: usize },
    #[error("denominator vanishes at this root of unity")]
    DenominatorVanishes,
    #[error("root-of-unity obstruction: size {n} needs n < p̄(q) = {pbar}")]
    RootOfUnityObstruction { n: usize, pbar: String },
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("inadmissible triple ({0}, {1}, {2})")]
    InadmissibleTriple(usize, usize, usize),
    #[error("singular Gram matrix")]
    SingularGram,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
