use std::fmt::Write;

use dkk_core::groth::{check_comparison, check_eta_ev, chi, chi_simplex_json, compare_chi_lax, gamma, lax_chi, lax_simplex_json, CatValuedFunctor};
use dkk_core::sset::{Budget, TruncSimplicialSet};
use dkk_core::twocat::{cube_b, cube_f, cube_q, materialize, nerve_condition_report, scaled_nerve, sigma, LaxOver, LaxUnder, PosetEnriched2Cat};
use dkk_core::Error;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{CubeKind, Format, Global, Groth, Side, Twocat};
use crate::report::{CliResult, Output, RunReport};

fn category_output(c: &PosetEnriched2Cat, name: &str, format: Format) -> Output {
    match format {
        Format::Dot => Output::Dot(c.to_dot(name)),
        Format::Json => Output::Json(serde_json::from_str(&c.to_json()).expect("category json")),
    }
}

fn set_summary(x: &TruncSimplicialSet) -> Value {
    let labels: Vec<&[String]> = (0..=x.truncation()).map(|n| x.labels(n)).collect();
    json!({
        "counts": x.counts(),
        "labels": labels,
        "marked_edges": x.marked_edges().iter().map(|&e| x.label(1, e)).collect::<Vec<_>>(),
    })
}

fn set_output(x: &TruncSimplicialSet, name: &str, format: Format) -> Output {
    match format {
        Format::Dot => Output::Dot(x.to_dot(name)),
        Format::Json => Output::Json(set_summary(x)),
    }
}

pub fn twocat(cmd: &Twocat, g: &Global, read: impl FnOnce() -> CliResult<String>) -> CliResult<Output> {
    let mut budget = Budget::new(g.budget);
    match cmd {
        Twocat::Sigma { elements } => Ok(category_output(&sigma(elements)?, "sigma", g.format)),
        Twocat::Nerve => {
            let c = PosetEnriched2Cat::from_json(&read()?)?;
            let x = scaled_nerve(&c, g.max_dim.unwrap_or(2), &mut budget)?;
            Ok(set_output(&x, "nerve", g.format))
        }
        Twocat::Slice { object, side } => {
            let c = PosetEnriched2Cat::from_json(&read()?)?;
            let o = c.object_index(object).ok_or_else(|| Error::Parse(format!("unknown object {object:?}")))?;
            let slice = match side {
                Side::Over => materialize(&LaxOver::new(c, o))?,
                Side::Under => materialize(&LaxUnder::new(c, o))?,
            };
            Ok(category_output(&slice, "slice", g.format))
        }
        Twocat::Cube { k, which } => {
            if *k > 10 {
                return Err(Error::Index(format!("cube dimension {k} is too large")).into());
            }
            let cube = match which {
                CubeKind::F => cube_f(*k)?,
                CubeKind::B => cube_b(*k)?,
                CubeKind::Q => cube_q(*k)?,
            };
            let labels = cube.labels();
            let bits: Vec<String> = dkk_core::simplexcat::BitVector::all(cube.k).iter().map(|j| j.label()).collect();
            Ok(match g.format {
                Format::Json => {
                    let vertices: Vec<Value> = bits.iter().zip(&labels).map(|(j, l)| json!({"j": j, "map": l})).collect();
                    Output::Json(json!({"k": k, "which": format!("{which:?}").to_lowercase(), "vertices": vertices}))
                }
                Format::Dot => {
                    let mut out = String::from("digraph cube {\n");
                    for (i, (j, l)) in bits.iter().zip(&labels).enumerate() {
                        writeln!(out, "  v{i} [label=\"{j}: {l}\"];").unwrap();
                    }
                    for (a, b, dir) in cube.edges() {
                        writeln!(out, "  v{a} -> v{b} [label=\"{dir}\"];").unwrap();
                    }
                    out.push_str("}\n");
                    Output::Dot(out)
                }
            })
        }
        Twocat::Obligations { n, max_obj } => {
            if *n > 6 {
                return Err(Error::Index(format!("obligations are tabulated up to n = 6, not {n}")).into());
            }
            Ok(Output::Json(json!(nerve_condition_report(*n, *max_obj)?)))
        }
    }
}

fn object(f: &CatValuedFunctor, name: &str) -> CliResult<usize> {
    f.base().object_index(name).ok_or_else(|| Error::Parse(format!("unknown base object {name:?}")).into())
}

pub fn groth(cmd: &Groth, g: &Global, text: &str) -> CliResult<Output> {
    let f = CatValuedFunctor::from_json(text)?;
    let mut budget = Budget::new(g.budget);
    let m = g.max_dim.unwrap_or(2);
    match cmd {
        Groth::Chi => {
            let x = chi(&f, m, &mut budget)?;
            Ok(match g.format {
                Format::Dot => Output::Dot(x.fibered.total.to_dot("chi")),
                Format::Json => {
                    let simplices: Vec<Vec<Value>> = x.model.simplices.iter().map(|lv| lv.iter().map(|s| chi_simplex_json(&f, s)).collect()).collect();
                    Output::Json(json!({"counts": x.fibered.total.counts(), "marked_edges": marked(&x.fibered.total), "simplices": simplices}))
                }
            })
        }
        Groth::Lax => {
            let x = lax_chi(&f, m, &mut budget)?;
            Ok(match g.format {
                Format::Dot => Output::Dot(x.fibered.total.to_dot("lax")),
                Format::Json => {
                    let simplices: Vec<Vec<Value>> = x.model.simplices.iter().map(|lv| lv.iter().map(|s| lax_simplex_json(&f, s)).collect()).collect();
                    Output::Json(json!({"counts": x.fibered.total.counts(), "marked_edges": marked(&x.fibered.total), "simplices": simplices}))
                }
            })
        }
        Groth::Gamma { object: name } => {
            let c = object(&f, name)?;
            let x = chi(&f, m.max(2), &mut budget)?;
            let gm = gamma(&x.fibered, c, m, &mut budget)?;
            Ok(set_output(gm.set(), "gamma", g.format))
        }
        Groth::EtaCheck { object: name } => {
            let objects = match name {
                Some(n) => vec![object(&f, n)?],
                None => (0..f.base().object_count()).collect(),
            };
            let run = |&c: &usize| check_eta_ev(&f, c, m, &mut Budget::new(g.budget));
            let checks = if g.parallel {
                objects.par_iter().map(run).collect::<Result<Vec<_>, _>>()?
            } else {
                objects.iter().map(run).collect::<Result<Vec<_>, _>>()?
            };
            let names = f.base().object_names();
            let failure = checks
                .iter()
                .find(|c| !c.passed())
                .map(|c| json!({"object": names[c.c], "simplices": c.failures}));
            let details: Vec<Value> = checks
                .iter()
                .map(|c| json!({"object": names[c.c], "gamma_counts": c.gamma_counts, "nerve_counts": c.nerve_counts}))
                .collect();
            Ok(Output::Report(RunReport::new("groth eta-check", json!({"max_dim": m}), json!(details), failure)))
        }
        Groth::Compare => {
            let x = chi(&f, m, &mut budget)?;
            let lax = lax_chi(&f, m, &mut budget)?;
            let map = compare_chi_lax(&f, &x, &lax)?;
            let report = check_comparison(&f, &x, &lax, &map);
            let failure = (!report.passed()).then(|| json!({"failures": report.failures, "injective": report.injective}));
            Ok(Output::Report(RunReport::new("groth compare", json!({"max_dim": m}), json!(report), failure)))
        }
    }
}

fn marked(x: &TruncSimplicialSet) -> Vec<&str> {
    x.marked_edges().iter().map(|&e| x.label(1, e)).collect()
}
