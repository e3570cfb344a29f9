use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::functor::{name_index, CatValuedFunctor, FunctorData};
use crate::error::{Error, Result};
use crate::twocat::{CategoryWire, PosetEnriched2Cat, TwoCategory};

/// `F(f)` by name. Identity morphisms may be left out.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorWire {
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

/// Components of `F(upper) ⇒ F(lower)` by object name of `F(target)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellWire {
    pub lower: String,
    pub upper: String,
    pub components: BTreeMap<String, String>,
}

/// `{"base": …, "fibers": {"c": …}, "transitions": {"f": …}, "cells": [...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorWireFile {
    pub base: CategoryWire,
    pub fibers: BTreeMap<String, CategoryWire>,
    #[serde(default)]
    pub transitions: BTreeMap<String, FunctorWire>,
    #[serde(default)]
    pub cells: Vec<CellWire>,
}

fn lookup(map: &std::collections::HashMap<String, usize>, name: &str, what: &str) -> Result<usize> {
    map.get(name).copied().ok_or_else(|| Error::Parse(format!("unknown {what} {name:?}")))
}

fn decode_functor(w: &FunctorWire, source: &PosetEnriched2Cat, target: &PosetEnriched2Cat, label: &str) -> Result<FunctorData> {
    let (sobj, smor) = name_index(source);
    let (tobj, tmor) = name_index(target);
    let mut objects = vec![None; source.object_count()];
    for (a, b) in &w.objects {
        objects[lookup(&sobj, a, "object")?] = Some(lookup(&tobj, b, "object")?);
    }
    let objects = objects
        .into_iter()
        .enumerate()
        .map(|(x, y)| y.ok_or_else(|| Error::Parse(format!("F({label}) does not say where {} goes", source.object_names()[x]))))
        .collect::<Result<Vec<_>>>()?;
    let mut morphisms: Vec<Option<usize>> = vec![None; source.morphisms().len()];
    for (x, &y) in objects.iter().enumerate() {
        morphisms[x] = Some(y);
    }
    for (a, b) in &w.morphisms {
        morphisms[lookup(&smor, a, "morphism")?] = Some(lookup(&tmor, b, "morphism")?);
    }
    let morphisms = morphisms
        .into_iter()
        .enumerate()
        .map(|(f, g)| g.ok_or_else(|| Error::Parse(format!("F({label}) does not say where {} goes", source.morphisms()[f].name))))
        .collect::<Result<Vec<_>>>()?;
    Ok(FunctorData { objects, morphisms })
}

impl TryFrom<FunctorWireFile> for CatValuedFunctor {
    type Error = Error;

    fn try_from(w: FunctorWireFile) -> Result<Self> {
        let base = PosetEnriched2Cat::try_from(w.base)?;
        let mut fibers = Vec::with_capacity(base.object_count());
        let mut wires = w.fibers;
        for name in base.object_names() {
            let fw = wires.remove(name).ok_or_else(|| Error::Parse(format!("no fiber given over {name:?}")))?;
            fibers.push(PosetEnriched2Cat::try_from(fw)?);
        }
        if let Some(extra) = wires.keys().next() {
            return Err(Error::Parse(format!("fiber given over unknown object {extra:?}")));
        }
        let (_, bmor) = name_index(&base);
        let n = base.object_count();
        let mut transitions = Vec::with_capacity(base.morphisms().len() - n);
        for f in n..base.morphisms().len() {
            let name = &base.morphisms()[f].name;
            let fw = w.transitions.get(name).ok_or_else(|| Error::Parse(format!("no transition functor for {name:?}")))?;
            transitions.push(decode_functor(fw, &fibers[base.target(&f)], &fibers[base.source(&f)], name)?);
        }
        for name in w.transitions.keys() {
            if lookup(&bmor, name, "morphism")? < n {
                return Err(Error::Parse(format!("transition for identity {name:?} is implicit")));
            }
        }
        let mut cells = BTreeMap::new();
        for cw in &w.cells {
            let (lo, up) = (lookup(&bmor, &cw.lower, "morphism")?, lookup(&bmor, &cw.upper, "morphism")?);
            let (x, y) = (base.source(&lo), base.target(&lo));
            let (sobj, _) = name_index(&fibers[y]);
            let (_, tmor) = name_index(&fibers[x]);
            let mut comps = vec![None; fibers[y].object_count()];
            for (z, m) in &cw.components {
                comps[lookup(&sobj, z, "object")?] = Some(lookup(&tmor, m, "morphism")?);
            }
            let comps = comps
                .into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Parse(format!("2-cell {} ≤ {} lacks components", cw.lower, cw.upper)))?;
            if cells.insert((lo, up), comps).is_some() {
                return Err(Error::Parse(format!("2-cell {} ≤ {} given twice", cw.lower, cw.upper)));
            }
        }
        CatValuedFunctor::new(base, fibers, transitions, cells)
    }
}

impl From<&CatValuedFunctor> for FunctorWireFile {
    fn from(f: &CatValuedFunctor) -> Self {
        let base = f.base();
        let n = base.object_count();
        let fibers = base.object_names().iter().zip(f.fibers()).map(|(o, c)| (o.clone(), CategoryWire::from(c))).collect();
        let mut transitions = BTreeMap::new();
        for g in n..base.morphisms().len() {
            let (src, tgt) = (f.fiber(base.target(&g)), f.fiber(base.source(&g)));
            let t = f.transition(g);
            let objects = src.object_names().iter().zip(&t.objects).map(|(a, &b)| (a.clone(), tgt.object_names()[b].clone())).collect();
            let morphisms = (src.object_count()..src.morphisms().len())
                .map(|m| (src.morphisms()[m].name.clone(), tgt.morphisms()[t.morphisms[m]].name.clone()))
                .collect();
            transitions.insert(base.morphisms()[g].name.clone(), FunctorWire { objects, morphisms });
        }
        let cells = f
            .cells()
            .iter()
            .map(|(&(lo, up), comps)| {
                let (src, tgt) = (f.fiber(base.target(&lo)), f.fiber(base.source(&lo)));
                CellWire {
                    lower: base.morphisms()[lo].name.clone(),
                    upper: base.morphisms()[up].name.clone(),
                    components: comps.iter().enumerate().map(|(z, &m)| (src.object_names()[z].clone(), tgt.morphisms()[m].name.clone())).collect(),
                }
            })
            .collect();
        FunctorWireFile { base: CategoryWire::from(base), fibers, transitions, cells }
    }
}

impl CatValuedFunctor {
    pub fn from_json(text: &str) -> Result<Self> {
        let w: FunctorWireFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        w.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&FunctorWireFile::from(self)).expect("functor serializes")
    }
}
