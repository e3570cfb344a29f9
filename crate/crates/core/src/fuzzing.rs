//! Decoder harness shared by the fuzz targets and the corpus replay test.
//! Inputs that decode must re-encode to text that decodes to the same
//! encoding; anything else must be rejected with an error, never a panic.

use serde_json::Value;

use crate::abgrp::{AbHom, FpAbelianGroup};
use crate::doldkan::ChainComplexFp;
use crate::groth::CatValuedFunctor;
use crate::intlin::IntMatrix;
use crate::k0bridge::{K0Simplex, RankTriangle};
use crate::sabgrp::SimplicialAbGroup;
use crate::simplexcat::MonotoneMap;
use crate::twocat::PosetEnriched2Cat;

pub const TARGETS: [&str; 10] =
    ["matrix", "group", "hom", "simplicial_group", "complex", "category", "functor", "k0_simplex", "triangle", "monotone_map"];

fn stable<T>(text: &str, decode: impl Fn(&str) -> crate::Result<T>, encode: impl Fn(&T) -> String) -> bool {
    let Ok(x) = decode(text) else { return false };
    let once = encode(&x);
    let again = decode(&once).unwrap_or_else(|e| panic!("re-encoded value does not decode: {e}\n{once}"));
    assert_eq!(once, encode(&again), "encoding is not stable");
    true
}

/// `{"complex": B, key: payload}` split into its two texts.
fn with_complex(text: &str, key: &str) -> Option<(ChainComplexFp, String)> {
    let v: Value = serde_json::from_str(text).ok()?;
    let b = ChainComplexFp::from_json(&v.get("complex")?.to_string()).ok()?;
    Some((b, v.get(key)?.to_string()))
}

/// Runs one input through the named decoder; `true` if it decoded.
pub fn run(target: &str, data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else { return false };
    match target {
        "matrix" => stable(text, IntMatrix::from_json, IntMatrix::to_json),
        "group" => stable(text, FpAbelianGroup::from_json, FpAbelianGroup::to_json),
        "hom" => stable(text, AbHom::from_json, AbHom::to_json),
        "simplicial_group" => stable(text, SimplicialAbGroup::from_json, SimplicialAbGroup::to_json),
        "complex" => stable(text, ChainComplexFp::from_json, ChainComplexFp::to_json),
        "category" => stable(text, PosetEnriched2Cat::from_json, PosetEnriched2Cat::to_json),
        "functor" => stable(text, CatValuedFunctor::from_json, CatValuedFunctor::to_json),
        "k0_simplex" => with_complex(text, "simplex").is_some_and(|(b, s)| stable(&s, |t| K0Simplex::from_json(t, &b), K0Simplex::to_json)),
        "triangle" => with_complex(text, "triangle").is_some_and(|(b, t)| stable(&t, |x| RankTriangle::from_json(x, &b), RankTriangle::to_json)),
        "monotone_map" => stable(text, MonotoneMap::parse, |f| f.to_string()),
        other => panic!("unknown fuzz target {other:?}"),
    }
}
