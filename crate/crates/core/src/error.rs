use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("degenerate head: station moves radially (h_min = 0 at t = {t_min})")]
    DegenerateHead { t_min: f64 },

    #[error("position has zero norm, polar angle undefined")]
    ZeroPosition,

    #[error("coincident birds: identical heads ({t}, {h})")]
    CoincidentBirds { t: f64, h: f64 },

    #[error("quadrature did not reach tolerance: best estimate {value} with error {err}")]
    Quadrature { value: f64, err: f64 },

    #[error("fewer than two stations below the cutoff at t = {time}")]
    TooFewCrossings { time: f64 },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
