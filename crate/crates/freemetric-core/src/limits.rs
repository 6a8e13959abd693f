/// Safety limits for the operations that can blow up exponentially or
/// quadratically. Defaults are sized for desk-scale runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum radius accepted by ball enumeration.
    pub ball_radius: usize,
    /// Maximum number of words a single ball enumeration may produce.
    pub ball_words: u64,
    /// Maximum word length for the matching DP.
    pub dp_len: usize,
    /// Maximum word length for the exhaustive matching oracle.
    pub oracle_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            ball_radius: 12,
            ball_words: 5_000_000,
            dp_len: 512,
            oracle_len: 12,
        }
    }
}
