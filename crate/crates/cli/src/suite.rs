use dkk_core::doldkan::{counit, omega_compat_check, split_decomposition, unit};
use dkk_core::k0bridge::{check_nerve_simplex, decategorify_relative_s, padded, random_relative_s, RankTriangleWire};
use dkk_core::random::{random_complex, random_simplicial_group};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{Global, SuiteArgs, SuiteName};
use crate::report::{CliResult, Output, RunReport};

/// `Ok(None)` on success, `Ok(Some(payload))` for a counterexample.
type Trial = dkk_core::Result<Option<Value>>;

fn trial(name: SuiteName, rng: &mut ChaCha8Rng) -> Trial {
    match name {
        SuiteName::Pi => {
            let a = random_simplicial_group(rng, 4, 3)?;
            for n in 0..=4 {
                if let Err(reason) = a.check_pi(n)? {
                    return Ok(Some(json!({"reason": reason, "group": a})));
                }
            }
            Ok(split_decomposition(&a)?.verify()?.err().map(|reason| json!({"reason": reason, "group": a})))
        }
        SuiteName::Counit => {
            let b = random_complex(rng, 5, 3)?.complex;
            let (_, _, eps) = counit(&b, 5)?;
            Ok(eps.first_non_iso()?.map(|n| json!({"level": n, "complex": b})))
        }
        SuiteName::Unit => {
            let a = random_simplicial_group(rng, 4, 2)?;
            let (_, _, eta) = unit(&a)?;
            Ok(eta.first_non_iso()?.map(|n| json!({"level": n, "group": a})))
        }
        SuiteName::Omega => {
            let a = random_simplicial_group(rng, 3, 2)?;
            Ok((!omega_compat_check(&a)?).then(|| json!({"group": a})))
        }
        SuiteName::K0 => {
            let b = random_complex(rng, 1, 3)?.complex;
            let t = random_relative_s(rng, &b, 2, 5)?;
            let s = decategorify_relative_s(&t, &b)?;
            Ok((!check_nerve_simplex(&padded(&b, 2), &s)?).then(|| json!({"complex": b, "triangle": RankTriangleWire::from(&t)})))
        }
    }
}

pub fn suite(args: &SuiteArgs, g: &Global) -> CliResult<Output> {
    let run = |i: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
        rng.set_stream(i as u64);
        trial(args.name, &mut rng).map(|r| r.map(|payload| json!({"instance": i, "payload": payload})))
    };
    let results: Vec<Option<Value>> = if g.parallel {
        (0..args.count).into_par_iter().map(run).collect::<Result<_, _>>()?
    } else {
        (0..args.count).map(run).collect::<Result<_, _>>()?
    };
    let failures = results.iter().filter(|r| r.is_some()).count();
    let first = results.into_iter().flatten().next();
    let name = format!("{:?}", args.name).to_lowercase();
    let parameters = json!({"suite": name, "count": args.count, "seed": g.seed});
    Ok(Output::Report(RunReport::new("suite", parameters, json!({"failures": failures}), first)))
}
