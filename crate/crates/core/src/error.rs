use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A computation whose input exceeds a configured size limit.
    #[error("capacity exceeded: {what} {size} > limit {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// No closed form exists for the family of `n`.
    #[error("no closed form for n = {0}: family not covered")]
    UnsupportedFamily(u64),
}
