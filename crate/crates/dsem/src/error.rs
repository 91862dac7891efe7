use thiserror::Error;

/// Errors across the toolkit. Variant names follow the per-operation error
/// contracts of the modules that raise them.
#[derive(Error, Debug)]
pub enum DsemError {
    #[error("invalid face-sequence: {0}")]
    InvalidFaceSeq(String),
    #[error("invalid link word: {0}")]
    InvalidLinkSeq(String),
    #[error("non-manifold input: edge {0:?} lies in {1} face boundaries (need exactly 2)")]
    NonManifold((u32, u32), usize),
    #[error("map is disconnected")]
    DisconnectedMap,
    #[error("inconsistent rotation at vertex {0}: incident corners do not chain into one cycle")]
    InconsistentRotation(u32),
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("map does not have exactly two vertex face-sequences")]
    NotTwoClasses,
    #[error("inadmissible parameters {0}")]
    InadmissibleParams(String),
    #[error("type verification failed for {0}: {1}")]
    TypeVerificationFailed(String, String),
    #[error("local link does not match any {0} rule case at step {1}")]
    RuleMismatch(String, usize),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("invalid search radius {0} (need ≥ 1)")]
    InvalidRadius(u32),
    #[error("bad tiling spec {0}: {1}")]
    BadSpec(String, String),
    #[error("bad strip word: {0}")]
    BadWord(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}
