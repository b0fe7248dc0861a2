use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("derivative d_{k} is not available (sequence supplies d_1..d_{available})")]
    MissingDerivative { k: usize, available: usize },
    #[error("perturbation degree must be at least 1")]
    ZeroDegree,
    #[error("duplicate perturbation degree {0}")]
    DuplicateDegree(usize),
    #[error("perturbation degree {degree} exceeds expansion order {order}")]
    DegreeExceedsOrder { degree: usize, order: usize },
    #[error("partition part {0} is not in the perturbation support")]
    PartOutsideSupport(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("closed-form index must be at least 1")]
    ZeroClosedFormIndex,
}
