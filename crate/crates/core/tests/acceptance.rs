//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dkk_core::abgrp::FpAbelianGroup;
use dkk_core::doldkan::{conservativity_check, counit, dold_kan_nerve, nerve_map, omega_compat_check, split_decomposition, unit, ChainComplexFp};
use dkk_core::groth::fixtures::{interval_example, point_base_example, terminal_over_interval};
use dkk_core::groth::{check_comparison, check_eta_ev, chi, compare_chi_lax, fiber_comparison, lax_chi};
use dkk_core::k0bridge::{check_nerve_simplex, decategorify_relative_s, euler_totalization, nerve_rank_table, padded, random_relative_s, ClassCube};
use dkk_core::random::{random_complex, random_simplicial_group, scramble};
use dkk_core::simplexcat::MonotoneMap;
use dkk_core::sset::Budget;
use dkk_core::twocat::{check_two_category, cube_b, cube_f, cube_q, materialize, delta_prime, nerve_condition_report, scaled_nerve, sigma, MorphismRecord, PosetEnriched2Cat, Sigma, TwoCategory};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(started: Instant, limit: Duration) -> Outcome {
    let t = started.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:.1?}, limit {limit:?}"))
    }
}

fn pi_suite() -> Outcome {
    let started = Instant::now();
    for i in 0..50 {
        let a = random_simplicial_group(&mut rng(1, i), 4, 3).map_err(err)?;
        for n in 0..=4 {
            a.check_pi(n).map_err(err)?.map_err(|e| format!("instance {i}: {e}"))?;
        }
        split_decomposition(&a).map_err(err)?.verify().map_err(err)?.map_err(|e| format!("instance {i}: {e}"))?;
    }
    within(started, Duration::from_secs(60))
}

fn counit_suite() -> Outcome {
    let started = Instant::now();
    for i in 0..50 {
        let b = random_complex(&mut rng(2, i), 5, 3).map_err(err)?.complex;
        let (_, _, eps) = counit(&b, 5).map_err(err)?;
        if let Some(n) = eps.first_non_iso().map_err(err)? {
            return Err(format!("instance {i}: counit not iso in degree {n}"));
        }
    }
    within(started, Duration::from_secs(120))
}

fn unit_suite() -> Outcome {
    let started = Instant::now();
    for i in 0..30 {
        let a = random_simplicial_group(&mut rng(3, i), 4, 2).map_err(err)?;
        let (_, _, eta) = unit(&a).map_err(err)?;
        if let Some(n) = eta.first_non_iso().map_err(err)? {
            return Err(format!("instance {i}: unit not iso at level {n}"));
        }
    }
    within(started, Duration::from_secs(120))
}

fn omega_suite() -> Outcome {
    for i in 0..20 {
        let mut r = rng(4, i);
        let a = random_simplicial_group(&mut r, 3, 2).map_err(err)?;
        let b = random_complex(&mut r, 3, 2).map_err(err)?.complex;
        let n = dold_kan_nerve(&b, 3).map_err(err)?.group;
        for (what, x) in [("group", &a), ("nerve", &n)] {
            if !omega_compat_check(x).map_err(err)? {
                return Err(format!("instance {i} ({what})"));
            }
        }
    }
    Ok(())
}

fn conservativity_suite() -> Outcome {
    for i in 0..10 {
        let mut r = rng(5, i);
        let a = random_simplicial_group(&mut r, 3, 2).map_err(err)?;
        let (_, nerve, eta) = unit(&a).map_err(err)?;
        let (a2, phi) = scramble(&mut r, &a).map_err(err)?;
        let rc = random_complex(&mut r, 3, 2).map_err(err)?;
        let n = dold_kan_nerve(&rc.complex, 3).map_err(err)?;
        let g = nerve_map(&rc.automorphism, &n, &n).map_err(err)?;
        let cases = [("unit", &eta, &a, &nerve.group), ("rebase", &phi, &a, &a2), ("nerve automorphism", &g, &n.group, &n.group)];
        for (what, f, s, t) in cases {
            let report = conservativity_check(f, s, t, 3).map_err(err)?;
            if !report.verdict {
                return Err(format!("instance {i} ({what}): {:?}", report.ladder));
            }
        }
    }
    Ok(())
}

/// Alternating sum straight from the definition, for one integer per vertex.
fn alternating(k: usize, values: &[i64]) -> i64 {
    (0..1usize << k).map(|j| if (k - j.count_ones() as usize) % 2 == 0 { values[j] } else { -values[j] }).sum()
}

fn cube_suite() -> Outcome {
    for k in 1..=6 {
        let f = cube_f(k).map_err(err)?;
        if f.precompose(&MonotoneMap::face(0, k).map_err(err)?).map_err(err)? != cube_b(k).map_err(err)? {
            return Err(format!("b != d0^* f for k = {k}"));
        }
    }
    let labels: BTreeSet<String> = cube_q(2).map_err(err)?.labels().into_iter().collect();
    let expected: BTreeSet<String> = ["01", "02", "11", "12", "001", "002", "011", "012"].map(String::from).into();
    if labels != expected || cube_q(2).map_err(err)?.labels().len() != 8 {
        return Err(format!("cube_q(2) labels {labels:?}"));
    }
    let mut r = rng(6, 0);
    for _ in 0..20 {
        for k in 1..=5 {
            let raw: Vec<i64> = (0..1 << k).map(|_| r.gen_range(-50..=50)).collect();
            let cube = ClassCube::new(k, raw.iter().map(|&v| vec![BigInt::from(v)]).collect()).map_err(err)?;
            let total = euler_totalization(&cube).map_err(err)?;
            if total != vec![BigInt::from(alternating(k, &raw))] {
                return Err(format!("k = {k}: totalization disagrees with direct expansion"));
            }
            // 0-cubes have no totalization; for k = 1 the faces are the two values.
            let faces = if k == 1 {
                vec![BigInt::from(raw[1] - raw[0])]
            } else {
                let top = euler_totalization(&cube.face(1, true).map_err(err)?).map_err(err)?;
                let bottom = euler_totalization(&cube.face(1, false).map_err(err)?).map_err(err)?;
                vec![&top[0] - &bottom[0]]
            };
            if total != faces {
                return Err(format!("k = {k}: face identity fails on {raw:?}"));
            }
        }
    }
    Ok(())
}

fn idempotent_with_cell() -> PosetEnriched2Cat {
    let e = MorphismRecord { name: "e".into(), source: 0, target: 0 };
    PosetEnriched2Cat::new(vec!["*".into()], vec![e], &[(1, 1, 1)], &[(0, 1)]).expect("valid fixture")
}

fn sigma_suite() -> Outcome {
    for mask in 1u64..1 << 6 {
        let elements: Vec<usize> = (0..6).filter(|b| mask >> b & 1 == 1).collect();
        if elements.len() <= 5 {
            check_two_category(&Sigma::new(&elements).map_err(err)?).map_err(|e| format!("{elements:?}: {e}"))?;
        }
    }
    let fixtures = [sigma(&[0, 1, 2]).map_err(err)?, idempotent_with_cell(), materialize(&delta_prime(1)).map_err(err)?];
    for (i, c) in fixtures.iter().enumerate() {
        let n = scaled_nerve(c, 3, &mut Budget::unlimited()).map_err(err)?;
        n.check_identities().map_err(|e| format!("fixture {i}: {e}"))?;
        n.check_markings().map_err(|e| format!("fixture {i}: {e}"))?;
    }
    for n in 1..=6 {
        let got = Sigma::standard(n).map_err(err)?.hom(&0, &n).len();
        if got != 1 << (n - 1) {
            return Err(format!("|hom(0,{n})| = {got}"));
        }
    }
    Ok(())
}

fn grothendieck_suite() -> Outcome {
    let started = Instant::now();
    let mut b = Budget::new(2_000_000);
    for (name, f) in [("point", point_base_example()), ("interval", interval_example()), ("terminal", terminal_over_interval())] {
        let x = chi(&f, 2, &mut b).map_err(err)?;
        let lax = lax_chi(&f, 2, &mut b).map_err(err)?;
        for c in 0..f.base().object_count() {
            let report = check_eta_ev(&f, c, 2, &mut b).map_err(err)?;
            if !report.passed() {
                return Err(format!("{name} over {c}: ev∘η fails on {:?}", report.failures));
            }
            fiber_comparison(&f, &x, c, &mut b).map_err(err)?.check().map_err(|e| format!("{name} over {c}: {e}"))?;
        }
        let map = compare_chi_lax(&f, &x, &lax).map_err(err)?;
        let report = check_comparison(&f, &x, &lax, &map);
        if !report.passed() {
            return Err(format!("{name}: comparison {:?}", report.failures));
        }
    }
    within(started, Duration::from_secs(60))
}

fn k0_suite() -> Outcome {
    let table = nerve_rank_table(&ChainComplexFp::concentrated(&FpAbelianGroup::cyclic(0), 1, 5), 5).map_err(err)?;
    for (n, nf) in table.iter().enumerate() {
        if nf.free_rank != n || !nf.invariant_factors.is_empty() {
            return Err(format!("level {n}: {nf:?}"));
        }
    }
    for i in 0..100 {
        let mut r = rng(9, i);
        let b = random_complex(&mut r, 1, 3).map_err(err)?.complex;
        let t = random_relative_s(&mut r, &b, 2, 5).map_err(err)?;
        let s = decategorify_relative_s(&t, &b).map_err(err)?;
        if !check_nerve_simplex(&padded(&b, 2), &s).map_err(err)? {
            return Err(format!("triangle {i} does not give a nerve simplex"));
        }
    }
    Ok(())
}

fn golden_suite() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/nerve_condition_report_2.json");
    let golden = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let current = nerve_condition_report(2, 2).map_err(err)?.to_json_pretty();
    if current == golden {
        Ok(())
    } else {
        Err("report differs from the reviewed golden file".into())
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("pi idempotent splitting, 50 groups", pi_suite),
        ("counit iso, 50 complexes", counit_suite),
        ("unit iso, 30 groups", unit_suite),
        ("normalized chains commute with loops", omega_suite),
        ("conservativity ladder", conservativity_suite),
        ("cube calculus", cube_suite),
        ("sigma categories and scaled nerves", sigma_suite),
        ("grothendieck constructions", grothendieck_suite),
        ("K0 nerve ranks and relative triangles", k0_suite),
        ("obligation report golden file", golden_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let t = started.elapsed();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({t:.2?})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({t:.2?}): {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
