//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p macwilliams --test acceptance`.

mod common;

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use clap::Parser;
use macwilliams::cli::{self, Cli, DEMOS};
use macwilliams::identities::{
    macwilliams_substitution, sample_derivatives, Anchor, Transform, Variable,
};
use macwilliams::poly::rat;
use macwilliams::{
    lemma1_expand, lemma2_reconstruct, transform_eq1, transform_eq2, DistributionPair, FiniteField,
    HomoPoly, LinearCode, WeightDistribution, DEFAULT_ENUM_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {:.2?}, limit {:.0?}", elapsed, limit)
    })
}

fn hamming_simplex_golden_pair() -> Outcome {
    let start = Instant::now();
    let hamming = LinearCode::hamming74();
    let simplex = hamming.dual();
    let h_words = hamming.codewords(DEFAULT_ENUM_CAP).unwrap().count();
    let s_words = simplex.codewords(DEFAULT_ENUM_CAP).unwrap().count();
    ensure(h_words == 16 && s_words == 8, || {
        format!("{h_words} / {s_words} codewords")
    })?;

    let w_h = hamming.weight_distribution(DEFAULT_ENUM_CAP).unwrap();
    let w_s = simplex.weight_distribution(DEFAULT_ENUM_CAP).unwrap();
    ensure(
        w_h == WeightDistribution::from_counts(&[1, 0, 0, 7, 7, 0, 0, 1]),
        || format!("Hamming weights {w_h}"),
    )?;
    ensure(
        w_s == WeightDistribution::from_counts(&[1, 0, 0, 0, 7, 0, 0, 0]),
        || format!("simplex weights {w_s}"),
    )?;

    let transforms: [(&str, Transform); 2] = [("eq1", transform_eq1), ("eq2", transform_eq2)];
    for (name, transform) in transforms {
        let to_h = transform(&w_s, 4, 2).map_err(|e| format!("{name}: {e}"))?;
        let to_s = transform(&w_h, 3, 2).map_err(|e| format!("{name}: {e}"))?;
        ensure(to_h == w_h && to_s == w_s, || {
            format!("{name} gave {to_h} / {to_s}")
        })?;
    }

    let pair = DistributionPair::new(w_h, w_s, 4, 2).unwrap();
    let mut rows = 0;
    for report in pair.check_all() {
        ensure(report.passed(), || format!("{}", report))?;
        rows += report.rows.len();
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "{rows} rows all zero, both transforms exact, {:.2?}",
        start.elapsed()
    ))
}

struct Instance {
    code: LinearCode,
    pair: DistributionPair,
}

/// The randomized corpus, fixed by seed; built once and shared.
fn random_instances() -> &'static (Vec<Instance>, Duration) {
    static CELL: OnceLock<(Vec<Instance>, Duration)> = OnceLock::new();
    CELL.get_or_init(|| {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_6377);
        let mut out = Vec::new();
        // Cycle q so that every field order is represented.
        for i in 0..240 {
            let (mut q, mut n, mut k) = common::random_parameters(&mut rng);
            while q != common::FIELD_ORDERS[i % common::FIELD_ORDERS.len()] {
                (q, n, k) = common::random_parameters(&mut rng);
            }
            let field = FiniteField::with_order(q).unwrap();
            let code = common::random_code(&mut rng, &field, n, k);
            let w = code.weight_distribution(DEFAULT_ENUM_CAP).unwrap();
            let w_dual = code.dual().weight_distribution(DEFAULT_ENUM_CAP).unwrap();
            let pair = DistributionPair::new(w, w_dual, k, q).unwrap();
            out.push(Instance { code, pair });
        }
        (out, start.elapsed())
    })
}

fn randomized_identity_suite() -> Outcome {
    let (instances, build_time) = random_instances();
    let start = Instant::now();
    ensure(instances.len() >= 200, || {
        format!("only {} instances", instances.len())
    })?;
    for (idx, Instance { code, pair }) in instances.iter().enumerate() {
        let ctx = || format!("instance {idx}: q={} n={} k={}", pair.q, code.n(), code.k());
        for report in pair.check_all() {
            ensure(report.passed(), || format!("{}: {}", ctx(), report))?;
        }
        let (n, k, q) = (code.n(), code.k(), pair.q);
        let via1 = transform_eq1(&pair.dual, k, q).map_err(|e| format!("{}: {e}", ctx()))?;
        let via2 = transform_eq2(&pair.dual, k, q).map_err(|e| format!("{}: {e}", ctx()))?;
        ensure(via1 == pair.code && via2 == pair.code, || {
            format!("{}: transform mismatch", ctx())
        })?;
        let back = transform_eq1(&via1, n - k, q).map_err(|e| format!("{}: {e}", ctx()))?;
        ensure(back == pair.dual, || {
            format!("{}: involution failed", ctx())
        })?;
    }
    let total = *build_time + start.elapsed();
    within(total, Duration::from_secs(60))?;
    let mut orders: Vec<u64> = instances.iter().map(|i| i.pair.q).collect();
    orders.sort_unstable();
    orders.dedup();
    ensure(orders == common::FIELD_ORDERS, || {
        format!("field orders covered: {orders:?}")
    })?;
    Ok(format!(
        "{} random codes over q in {:?}, all checks and involution exact, {:.2?}",
        instances.len(),
        orders,
        total
    ))
}

fn lemma1_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for q in [2u64, 3, 4] {
        let (sx, sy) = macwilliams_substitution(q);
        for s in 0..=6u32 {
            for t in 0..=6u32 {
                let base = HomoPoly::monomial(s + t, t, rat(1))
                    .substitute_linear(&sx, &sy)
                    .to_poly();
                for wrt in [Variable::X, Variable::Y] {
                    let mut oracle = base.clone();
                    for order in 0..=6u32 {
                        let closed = lemma1_expand(s, t, order, wrt, q).expand_to_xy();
                        ensure(closed == oracle, || {
                            format!("mismatch at s={s} t={t} order={order} {wrt:?} q={q}")
                        })?;
                        cases += 1;
                        oracle = match wrt {
                            Variable::X => oracle.partial_x(),
                            Variable::Y => oracle.partial_y(),
                        };
                    }
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!(
        "{cases} cases, 0 mismatches, {:.2?}",
        start.elapsed()
    ))
}

fn lemma2_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c32);
    let mut degrees = [0usize; 13];
    for i in 0..100 {
        let p = common::random_homo_poly(&mut rng, 12);
        degrees[p.degree() as usize] += 1;
        for anchor in Anchor::ALL {
            let values = anchor.sample(&p);
            let back =
                lemma2_reconstruct(p.degree(), anchor, &values).map_err(|e| e.to_string())?;
            ensure(back.coeffs() == p.coeffs(), || {
                format!("polynomial {i} ({p}) at {anchor:?} came back as {back}")
            })?;
        }
        // Sampling uses the y-derivative at (1,0) and (1,1) as stated.
        ensure(
            Anchor::OneOne.sample(&p) == sample_derivatives(&p, Variable::Y, Anchor::OneOne),
            || "sampling variable".into(),
        )?;
    }
    Ok(format!(
        "100 polynomials x 3 anchors exact (degree histogram {degrees:?})"
    ))
}

fn eq5_reduction_claims() -> Outcome {
    let (instances, _) = random_instances();
    let mut rows = 0;
    for (idx, inst) in instances.iter().enumerate() {
        let mismatches = inst.pair.eq5_reduction_mismatches();
        ensure(mismatches.is_empty(), || {
            format!("instance {idx}: {mismatches:?}")
        })?;
        rows += 2 * (inst.pair.n() + 1);
    }
    Ok(format!(
        "{rows} reduced rows equal value-for-value on {} instances",
        instances.len()
    ))
}

fn run_cli(args: &[&str]) -> cli::Outcome {
    let parsed = Cli::try_parse_from(std::iter::once("macw").chain(args.iter().copied()))
        .unwrap_or_else(|e| panic!("bad args {args:?}: {e}"));
    cli::run(&parsed)
}

fn soundness() -> Outcome {
    let mut cases = 0;
    for (name, _) in DEMOS {
        let clean = run_cli(&["demo", name]);
        ensure(clean.code == 0, || {
            format!("{name} fails unperturbed:\n{}", clean.stdout)
        })?;
        let code = cli::demo_code(name).unwrap();
        let w = code.weight_distribution(DEFAULT_ENUM_CAP).unwrap();
        let w_dual = code.dual().weight_distribution(DEFAULT_ENUM_CAP).unwrap();
        for side in ["code", "dual"] {
            for weight in 0..=code.n() {
                let (mut a, mut b) = (w.clone(), w_dual.clone());
                if side == "code" {
                    a.bump(weight);
                } else {
                    b.bump(weight);
                }
                let pair = DistributionPair::new(a, b, code.k(), code.q() as u64).unwrap();
                ensure(pair.check_all().iter().any(|r| !r.passed()), || {
                    format!("{name} {side}:{weight} undetected by every checker")
                })?;
                let spec = format!("{side}:{weight}");
                let out = run_cli(&["demo", name, "--perturb", &spec]);
                ensure(out.code == cli::EXIT_IDENTITY_FAILURE, || {
                    format!("{name} {spec}: exit {}", out.code)
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{cases} single-count perturbations over {} corpus entries all rejected",
        DEMOS.len()
    ))
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_macw");
    let mut names: Vec<&str> = DEMOS.iter().map(|(n, _)| *n).collect();
    names.push("all");
    for name in &names {
        let runs: Vec<_> = (0..2)
            .map(|_| {
                Command::new(bin)
                    .args(["demo", name])
                    .output()
                    .expect("spawn macw")
            })
            .collect();
        ensure(runs[0].status.code() == Some(0), || {
            format!("demo {name} exit {:?}", runs[0].status)
        })?;
        ensure(
            runs[0].stdout == runs[1].stdout && runs[0].status == runs[1].status,
            || format!("demo {name} differs between runs"),
        )?;
    }
    Ok(format!(
        "{} demo reports byte-identical across two runs",
        names.len()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        (
            "AC1",
            "Hamming/simplex golden pair",
            hamming_simplex_golden_pair,
        ),
        (
            "AC2",
            "randomized identity suite",
            randomized_identity_suite,
        ),
        (
            "AC3",
            "closed-form derivatives vs symbolic oracle",
            lemma1_oracle_equivalence,
        ),
        (
            "AC4",
            "derivative-value reconstruction round trip",
            lemma2_round_trip,
        ),
        (
            "AC5",
            "two-parameter identity reductions",
            eq5_reduction_claims,
        ),
        (
            "AC6",
            "soundness under single-count perturbation",
            soundness,
        ),
        ("AC7", "CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {why}");
            }
        }
    }
    println!("acceptance: {} of 7 criteria passed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
