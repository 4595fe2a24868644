use std::path::PathBuf;

/// Repository data directory: env override first, then the workspace copy.
pub fn data_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("G2RM_DATA_DIR") {
        return PathBuf::from(dir);
    }
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("..")
        .join("..")
        .join("data")
}
