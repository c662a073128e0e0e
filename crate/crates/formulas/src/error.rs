use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the asymptotic law is stated for k >= 1")]
    AsymptoteAtZero,
    #[error("{digits} digits requested; at least {min} are required")]
    TooFewDigits { digits: u32, min: u32 },
    #[error("unknown formula `{0}`")]
    UnknownFormula(String),
    #[error("formula `{name}` expects parameters {expected}")]
    BadParameters { name: String, expected: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
