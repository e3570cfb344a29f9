use serde::{Deserialize, Serialize};

use super::{MorphismRecord, PosetEnriched2Cat};
use crate::error::{Error, Result};

/// `{"name": "f", "source": "a", "target": "b"}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismWire {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// Morphisms, composites and 2-cells refer to morphisms by name; identities
/// are implicit and named `id_<object>`. `compositions` holds `[f, g, f;g]`
/// triples, `order` holds `[f, g]` pairs meaning a 2-cell `f ⇒ g`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryWire {
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<MorphismWire>,
    #[serde(default)]
    pub compositions: Vec<[String; 3]>,
    #[serde(default)]
    pub order: Vec<[String; 2]>,
}

impl TryFrom<CategoryWire> for PosetEnriched2Cat {
    type Error = Error;

    fn try_from(w: CategoryWire) -> Result<Self> {
        let obj = |name: &str| w.objects.iter().position(|o| o == name).ok_or_else(|| Error::Parse(format!("unknown object {name:?}")));
        let mut records = Vec::with_capacity(w.morphisms.len());
        for m in &w.morphisms {
            records.push(MorphismRecord { name: m.name.clone(), source: obj(&m.source)?, target: obj(&m.target)? });
        }
        let mut names: Vec<String> = w.objects.iter().map(|o| format!("id_{o}")).collect();
        names.extend(records.iter().map(|m| m.name.clone()));
        let mor = |name: &str| names.iter().position(|m| m == name).ok_or_else(|| Error::Parse(format!("unknown morphism {name:?}")));
        let comps = w.compositions.iter().map(|[f, g, h]| Ok((mor(f)?, mor(g)?, mor(h)?))).collect::<Result<Vec<_>>>()?;
        let order = w.order.iter().map(|[f, g]| Ok((mor(f)?, mor(g)?))).collect::<Result<Vec<_>>>()?;
        PosetEnriched2Cat::new(w.objects.clone(), records, &comps, &order)
    }
}

impl From<&PosetEnriched2Cat> for CategoryWire {
    fn from(c: &PosetEnriched2Cat) -> Self {
        let objects = c.object_names().to_vec();
        let mors = c.morphisms();
        let name = |f: usize| mors[f].name.clone();
        CategoryWire {
            morphisms: mors[objects.len()..]
                .iter()
                .map(|m| MorphismWire { name: m.name.clone(), source: objects[m.source].clone(), target: objects[m.target].clone() })
                .collect(),
            compositions: c.composition_table().into_iter().map(|(f, g, h)| [name(f), name(g), name(h)]).collect(),
            order: c.order_pairs().into_iter().map(|(f, g)| [name(f), name(g)]).collect(),
            objects,
        }
    }
}

impl PosetEnriched2Cat {
    pub fn from_json(text: &str) -> Result<Self> {
        let w: CategoryWire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        w.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CategoryWire::from(self)).expect("category serializes")
    }
}
