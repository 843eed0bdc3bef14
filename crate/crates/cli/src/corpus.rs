//! The bundled fixture corpus.

use std::path::Path;

/// `(file name, document text)` for every bundled fixture.
pub const CORPUS: &[(&str, &str)] = &[
    (
        "cl1_trivial.json",
        include_str!("../fixtures/cl1_trivial.json"),
    ),
    (
        "cyclic_cubic.json",
        include_str!("../fixtures/cyclic_cubic.json"),
    ),
    (
        "dualnumbers.json",
        include_str!("../fixtures/dualnumbers.json"),
    ),
    ("ground.json", include_str!("../fixtures/ground.json")),
    (
        "grouplike2.json",
        include_str!("../fixtures/grouplike2.json"),
    ),
    ("m2.json", include_str!("../fixtures/m2.json")),
    (
        "m2_comatrix.json",
        include_str!("../fixtures/m2_comatrix.json"),
    ),
    (
        "quaternions.json",
        include_str!("../fixtures/quaternions.json"),
    ),
    ("qxq.json", include_str!("../fixtures/qxq.json")),
    ("supercl1.json", include_str!("../fixtures/supercl1.json")),
    ("zero.json", include_str!("../fixtures/zero.json")),
];

/// Writes every fixture into `dir`, creating it if needed.
pub fn write_corpus(dir: &Path) -> std::io::Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    CORPUS
        .iter()
        .map(|(name, text)| {
            let path = dir.join(name);
            std::fs::write(&path, text)?;
            Ok(path)
        })
        .collect()
}
