use dkk_core::abgrp::{AbHom, FpAbelianGroup};
use dkk_core::doldkan::{conservativity_check, counit, dold_kan_nerve, normalized_chains, omega_compat_check, unit, ChainComplexFp};
use dkk_core::intlin::{smith_normal_form, solve, IntMatrix, WireInt};
use dkk_core::k0bridge::{decategorify_relative_s, euler_totalization, nerve_violations, relative_s_violations, ClassCube, K0SimplexWire, RankTriangleWire};
use dkk_core::sabgrp::{SimplicialAbGroup, SimplicialMap};
use dkk_core::simplexcat::BitVector;
use dkk_core::Error;
use serde::Deserialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

use crate::args::{Dk, Global, K0};
use crate::report::{parse, CliResult, Output, RunReport};

pub fn snf(text: &str) -> CliResult<Output> {
    let m: IntMatrix = parse(text)?;
    let f = smith_normal_form(&m);
    Ok(Output::Json(json!({"s": f.s, "u": f.u, "v": f.v, "rank": f.rank})))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SolveInput {
    matrix: IntMatrix,
    rhs: Vec<WireInt>,
}

pub fn solve_cmd(text: &str) -> CliResult<Output> {
    let input: SolveInput = parse(text)?;
    let rhs = input.rhs.iter().map(WireInt::parse).collect::<Result<Vec<_>, _>>()?;
    let x = solve(&input.matrix, &rhs)?;
    let solution = x.map(|v| v.iter().map(|e| e.to_string()).collect::<Vec<_>>());
    Ok(Output::Json(json!({"solution": solution})))
}

pub fn normal_form(text: &str) -> CliResult<Output> {
    let g = FpAbelianGroup::from_json(text)?;
    Ok(Output::Json(json!(g.normal_form())))
}

fn normal_forms(levels: &[FpAbelianGroup]) -> Value {
    json!(levels.iter().map(FpAbelianGroup::normal_form).collect::<Vec<_>>())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConservativityInput {
    source: SimplicialAbGroup,
    target: SimplicialAbGroup,
    map: Vec<AbHom>,
}

pub fn dk(cmd: &Dk, g: &Global, text: &str) -> CliResult<Output> {
    match cmd {
        Dk::Normalize => {
            let a = SimplicialAbGroup::from_json(text)?;
            Ok(Output::Json(json!(normalized_chains(&a)?.complex)))
        }
        Dk::Nerve => {
            let b = ChainComplexFp::from_json(text)?;
            let m = g.max_dim.unwrap_or(b.truncation());
            let nerve = dold_kan_nerve(&b, m)?;
            Ok(Output::Json(json!({"normal_forms": normal_forms(nerve.group.levels()), "nerve": nerve.group})))
        }
        Dk::Counit => {
            let b = ChainComplexFp::from_json(text)?;
            let m = g.max_dim.unwrap_or(b.truncation());
            let (_, chains, eps) = counit(&b, m)?;
            let failure = eps.first_non_iso()?.map(|n| {
                json!({"level": n, "source": chains.complex.level(n).normal_form(), "target": b.resize(m).level(n).normal_form()})
            });
            let details = json!({"levels": normal_forms(chains.complex.levels())});
            Ok(Output::Report(RunReport::new("dk counit", json!({"max_dim": m}), details, failure)))
        }
        Dk::Unit => {
            let mut a = SimplicialAbGroup::from_json(text)?;
            if let Some(m) = g.max_dim {
                a = a.truncate(m)?;
            }
            let (_, nerve, eta) = unit(&a)?;
            let failure = eta.first_non_iso()?.map(|n| {
                json!({"level": n, "source": a.level(n).normal_form(), "target": nerve.group.level(n).normal_form()})
            });
            let details = json!({"levels": normal_forms(a.levels())});
            Ok(Output::Report(RunReport::new("dk unit", json!({"max_dim": a.truncation()}), details, failure)))
        }
        Dk::OmegaCheck => {
            let a = SimplicialAbGroup::from_json(text)?;
            let ok = omega_compat_check(&a)?;
            let failure = (!ok).then(|| json!({"truncation": a.truncation()}));
            Ok(Output::Report(RunReport::new("dk omega-check", json!({"max_dim": a.truncation()}), json!({}), failure)))
        }
        Dk::Conservativity => {
            let input: ConservativityInput = parse(text)?;
            let f = SimplicialMap { levels: input.map };
            if let Err(e) = f.check(&input.source, &input.target)? {
                return Err(Error::Invalid(format!("not a simplicial map: {e}")).into());
            }
            let m = g.max_dim.unwrap_or(f.truncation());
            let report = conservativity_check(&f, &input.source, &input.target, m)?;
            let failure = (!report.verdict).then(|| {
                let level = report.direct.iter().position(|&ok| !ok);
                let rung = report.ladder.iter().find(|r| !(r.rows_exact && r.omega_iso && r.base_iso && r.path_iso));
                json!({"non_iso_level": level, "rung": rung})
            });
            Ok(Output::Report(RunReport::new("dk conservativity", json!({"max_dim": m}), json!(report), failure)))
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NerveInput {
    complex: ChainComplexFp,
    simplex: K0SimplexWire,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangleInput {
    complex: ChainComplexFp,
    triangle: RankTriangleWire,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CubeInput {
    k: usize,
    values: BTreeMap<String, Vec<WireInt>>,
}

pub fn k0(cmd: &K0, text: &str) -> CliResult<Output> {
    match cmd {
        K0::CheckNerve => {
            let input: NerveInput = parse(text)?;
            let s = input.simplex.decode(&input.complex)?;
            let bad = nerve_violations(&input.complex, &s)?;
            let failure = (!bad.is_empty()).then(|| json!({"subsets": bad.iter().map(|&m| dkk_core::twocat::mask_label(m)).collect::<Vec<_>>()}));
            Ok(Output::Report(RunReport::new("k0 check-nerve", json!({"n": s.n()}), json!({}), failure)))
        }
        K0::CheckS => {
            let input: TriangleInput = parse(text)?;
            let t = input.triangle.decode(&input.complex)?;
            let bad = relative_s_violations(&input.complex, &t)?;
            let failure = (!bad.is_empty()).then(|| json!({"relations": bad}));
            Ok(Output::Report(RunReport::new("k0 check-s", json!({"n": t.n}), json!({}), failure)))
        }
        K0::Decat => {
            let input: TriangleInput = parse(text)?;
            let t = input.triangle.decode(&input.complex)?;
            let s = decategorify_relative_s(&t, &input.complex)?;
            Ok(Output::Json(json!(K0SimplexWire::from(&s))))
        }
        K0::Tot => {
            let input: CubeInput = parse(text)?;
            if input.k > 16 {
                return Err(Error::Index(format!("cube dimension {} is too large", input.k)).into());
            }
            let mut values = Vec::with_capacity(1 << input.k);
            for j in BitVector::all(input.k) {
                let label = j.label();
                let v = input.values.get(&label).ok_or_else(|| Error::Parse(format!("missing cube vertex {label:?}")))?;
                values.push(v.iter().map(WireInt::parse).collect::<Result<Vec<_>, _>>()?);
            }
            if input.values.len() != values.len() {
                return Err(Error::Parse("cube vertices must be 0/1 strings of length k".into()).into());
            }
            let total = euler_totalization(&ClassCube::new(input.k, values)?)?;
            Ok(Output::Json(json!({"total": total.iter().map(WireInt::compact).collect::<Vec<_>>()})))
        }
    }
}
