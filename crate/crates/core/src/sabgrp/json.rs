use serde::{Deserialize, Serialize};

use super::SimplicialAbGroup;
use crate::abgrp::{AbHom, FpAbelianGroup};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// `{"truncation": M, "levels": [...], "faces": [[...]], "degeneracies": [[...]]}`
/// with one matrix per structure map.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialGroupWire {
    pub truncation: usize,
    pub levels: Vec<FpAbelianGroup>,
    pub faces: Vec<Vec<IntMatrix>>,
    pub degeneracies: Vec<Vec<IntMatrix>>,
}

impl From<&SimplicialAbGroup> for SimplicialGroupWire {
    fn from(a: &SimplicialAbGroup) -> Self {
        let mats = |v: &[Vec<AbHom>]| v.iter().map(|lv| lv.iter().map(|h| h.matrix().clone()).collect()).collect();
        SimplicialGroupWire { truncation: a.truncation(), levels: a.levels.clone(), faces: mats(&a.faces), degeneracies: mats(&a.degeneracies) }
    }
}

impl TryFrom<SimplicialGroupWire> for SimplicialAbGroup {
    type Error = Error;

    fn try_from(w: SimplicialGroupWire) -> Result<Self> {
        let m = w.truncation;
        if w.levels.len() != m + 1 || w.faces.len() != m + 1 || w.degeneracies.len() != m + 1 {
            return Err(Error::Shape(format!("truncation {m} needs {} levels", m + 1)));
        }
        let hom = |s: usize, t: usize, mat: &IntMatrix| AbHom::new(w.levels[s].clone(), w.levels[t].clone(), mat.clone());
        let mut faces = Vec::with_capacity(m + 1);
        let mut degeneracies = Vec::with_capacity(m + 1);
        for n in 0..=m {
            if (n == 0 && !w.faces[0].is_empty()) || (n == m && !w.degeneracies[m].is_empty()) {
                return Err(Error::Shape(format!("unexpected structure maps at level {n}")));
            }
            faces.push(w.faces[n].iter().map(|mat| hom(n, n - 1, mat)).collect::<Result<Vec<_>>>()?);
            degeneracies.push(w.degeneracies[n].iter().map(|mat| hom(n, n + 1, mat)).collect::<Result<Vec<_>>>()?);
        }
        SimplicialAbGroup::new(w.levels, faces, degeneracies)
    }
}

impl Serialize for SimplicialAbGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SimplicialGroupWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialAbGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SimplicialAbGroup::try_from(SimplicialGroupWire::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl SimplicialAbGroup {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("simplicial group serializes")
    }
}
