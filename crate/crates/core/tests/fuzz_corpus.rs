//! Replays the checked-in fuzz corpus through the decoders on stable.

use std::path::PathBuf;

use dkk_core::fuzzing::{run, TARGETS};

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus")
}

#[test]
fn corpus_seeds_decode_without_panicking() {
    for target in TARGETS {
        let dir = corpus().join(target);
        let mut seen = 0;
        for entry in std::fs::read_dir(&dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())) {
            let path = entry.unwrap().path();
            let data = std::fs::read(&path).unwrap();
            let expect_ok = !path.file_name().unwrap().to_string_lossy().starts_with("bad");
            assert_eq!(run(target, &data), expect_ok, "{}", path.display());
            seen += 1;
        }
        assert!(seen > 0, "no seeds for {target}");
    }
}

#[test]
fn mangled_seeds_are_rejected_cleanly() {
    for target in TARGETS {
        for entry in std::fs::read_dir(corpus().join(target)).unwrap() {
            let data = std::fs::read(entry.unwrap().path()).unwrap();
            for cut in [0, 1, data.len() / 2, data.len().saturating_sub(1)] {
                let _ = run(target, &data[..cut]);
            }
            let mut flipped = data.clone();
            for i in (0..flipped.len()).step_by(7) {
                flipped[i] = flipped[i].wrapping_add(1);
                let _ = run(target, &flipped);
            }
        }
    }
}
