use serde::{Deserialize, Serialize};

use super::{AbHom, FpAbelianGroup};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// `{"generators": g, "relations": <matrix>}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupWire {
    pub generators: usize,
    pub relations: IntMatrix,
}

/// `{"source": <group>, "target": <group>, "matrix": <matrix>}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomWire {
    pub source: GroupWire,
    pub target: GroupWire,
    pub matrix: IntMatrix,
}

impl From<&FpAbelianGroup> for GroupWire {
    fn from(g: &FpAbelianGroup) -> Self {
        GroupWire { generators: g.generators(), relations: g.relations().clone() }
    }
}

impl TryFrom<GroupWire> for FpAbelianGroup {
    type Error = Error;
    fn try_from(w: GroupWire) -> Result<Self> {
        FpAbelianGroup::new(w.generators, w.relations)
    }
}

impl From<&AbHom> for HomWire {
    fn from(h: &AbHom) -> Self {
        HomWire { source: h.source().into(), target: h.target().into(), matrix: h.matrix().clone() }
    }
}

impl TryFrom<HomWire> for AbHom {
    type Error = Error;
    fn try_from(w: HomWire) -> Result<Self> {
        AbHom::new(w.source.try_into()?, w.target.try_into()?, w.matrix)
    }
}

impl Serialize for FpAbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FpAbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FpAbelianGroup::try_from(GroupWire::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for AbHom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HomWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbHom {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        AbHom::try_from(HomWire::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl FpAbelianGroup {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group serializes")
    }
}

impl AbHom {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hom serializes")
    }
}
