//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grs_cli::record::{check, CheckStatus, KnotRecord};
use grs_core::diagram::{build_faces, checkerboard, goeritz_matrix};
use grs_core::dinv::{all_correction_terms, box_max_char_square};
use grs_core::intlat::{determinant, smith_normal_form, Matrix};
use grs_core::{obstruction, GoeritzForm, Int, IntMatrix, KnotInput, Rational, Verdict};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/knots.jsonl");

type Outcome = Result<String, String>;

fn records() -> Vec<(KnotRecord, serde_json::Value)> {
    std::fs::read_to_string(FIXTURES)
        .expect("fixture file")
        .lines()
        .map(|l| (serde_json::from_str(l).unwrap(), serde_json::from_str(l).unwrap()))
        .collect()
}

fn group(name: &str) -> Vec<KnotRecord> {
    records().into_iter().filter(|(_, v)| v["meta"]["group"] == name).map(|(r, _)| r).collect()
}

/// Computes every record and checks det exactly and nonzero D up to sign.
fn reproduce(recs: &[KnotRecord], required: &[&str], min: usize, budget: Option<Duration>) -> Outcome {
    let names: BTreeSet<&str> = recs.iter().map(|r| r.name.as_str()).collect();
    let missing: Vec<&&str> = required.iter().filter(|n| !names.contains(**n)).collect();
    if recs.len() < min || !missing.is_empty() {
        return Err(format!("{} fixtures, missing {missing:?}", recs.len()));
    }
    let start = Instant::now();
    let mut failures = Vec::new();
    for r in recs {
        let report = match r.input().and_then(|i| obstruction(&i, &r.name)) {
            Ok(rep) => rep,
            Err(e) => {
                failures.push(format!("{}: {e}", r.name));
                continue;
            }
        };
        let c = check(&report, r.expected.as_ref().expect("expected values"));
        if c.status != CheckStatus::Match {
            failures.push(format!("{}: {}", r.name, c.problems.join("; ")));
        }
        if report.verdict != Verdict::InfiniteOrder {
            failures.push(format!("{}: verdict {}", r.name, report.verdict.as_str()));
        }
    }
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        if elapsed > b {
            failures.push(format!("took {elapsed:.2?}, budget {b:?}"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{}/{} knots match, {elapsed:.2?}", recs.len(), recs.len()))
    } else {
        Err(failures.join(" | "))
    }
}

fn alternating() -> Outcome {
    let required = ["9_30", "9_33", "10_58", "11a_4", "11a_67", "11a_126", "11a_288"];
    reproduce(&group("alternating"), &required, 10, Some(Duration::from_secs(5)))
}

fn nonalternating() -> Outcome {
    reproduce(&group("nonalternating"), &["9_44", "11n_12"], 2, None)
}

fn figure_eight() -> Outcome {
    let rec = records().into_iter().map(|(r, _)| r).find(|r| r.name == "4_1").ok_or("no 4_1 fixture")?;
    let report = obstruction(&rec.input().map_err(|e| e.to_string())?, "4_1").map_err(|e| e.to_string())?;
    let ds: Vec<(String, String)> =
        report.d_values.iter().map(|d| (d.q().to_string(), grs_core::dinv::format_rational(&d.value))).collect();
    let want = vec![("1".to_string(), "0".to_string()), ("5".to_string(), "0".to_string())];
    let mut values = report.table.values();
    values.sort();
    let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let want_table = vec![q(-2, 5), q(-2, 5), q(0, 1), q(2, 5), q(2, 5)];
    if ds == want && values == want_table && report.verdict == Verdict::NoObstruction {
        Ok("D_1 = D_5 = 0, d = {0, ±2/5, ±2/5}".into())
    } else {
        Err(format!("D = {ds:?}, d = {values:?}"))
    }
}

/// `-(BᵀB + diag)`, negative definite by construction.
fn random_form(rng: &mut ChaCha8Rng, max_rank: usize, max_det: i64) -> GoeritzForm {
    loop {
        let n = rng.gen_range(1..=max_rank);
        let b = IntMatrix::from_fn(n, n, |_, _| Int::from(rng.gen_range(-2i64..=2)));
        let mut a = &b.transpose() * &b;
        for i in 0..n {
            a[(i, i)] += Int::from(rng.gen_range(1i64..=4));
        }
        let det = determinant(&a).unwrap();
        if det <= Int::from(max_det) {
            if let Ok(f) = GoeritzForm::from_matrix(a.neg()) {
                return f;
            }
        }
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..rng.gen_range(1..=10) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            u.negate_row(i);
        } else {
            u.add_row_multiple(i, j, &Int::from(rng.gen_range(-2i64..=2)));
        }
    }
    u
}

fn oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6752_5301);
    let start = Instant::now();
    let mut classes = 0;
    for k in 0..200 {
        let f = random_form(&mut rng, 3, 60);
        let g: Matrix<i64> = f.matrix().map(|x| x.to_i64().unwrap());
        let t = all_correction_terms(&f).map_err(|e| e.to_string())?;
        for e in t.entries() {
            let start = t.labeling().representative(&e.spinc.label);
            let rep: Vec<i64> = start.coords().iter().map(|x| x.to_i64().unwrap()).collect();
            let boxed = box_max_char_square(&g, &rep, 8).map_err(|e| e.to_string())?;
            let (n, d) = (e.max_square.numer().to_i64().unwrap(), e.max_square.denom().to_i64().unwrap());
            if (n, d) != (*boxed.numer(), *boxed.denom()) {
                return Err(format!("matrix {k} {} class {:?}: enumerated {n}/{d}, box {boxed}", f.matrix(), e.spinc.label));
            }
            classes += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:.2?}"));
    }
    Ok(format!("200 matrices, {classes} classes agree, {elapsed:.2?}"))
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6752_5302);
    let mut counts = [0usize; 7];
    let fail = |what: &str, m: &IntMatrix| Err(format!("{what} fails on {m}"));

    for _ in 0..100 {
        let f = random_form(&mut rng, 4, 150);
        let t = all_correction_terms(&f).map_err(|e| e.to_string())?;
        // conjugation symmetry
        for e in t.entries() {
            if t.get(&t.cokernel().negate(&e.spinc.label)) != Some(&e.d) {
                return fail("conjugation symmetry", f.matrix());
            }
        }
        counts[0] += 1;
        // label bijectivity
        let labels: BTreeSet<_> = t.entries().iter().map(|e| e.spinc.label.clone()).collect();
        let canonical = t.entries().iter().filter(|e| e.spinc.is_canonical).count();
        if Int::from(labels.len()) != f.knot_determinant() || canonical != 1 {
            return fail("label bijectivity", f.matrix());
        }
        counts[1] += 1;
        // denominators
        let scale = Rational::from_integer(Int::from(4) * f.knot_determinant());
        if !t.values().into_iter().all(|d| (d * scale.clone()).is_integer()) {
            return fail("4·|det|·d integrality", f.matrix());
        }
        counts[2] += 1;
        // congruence invariance
        let u = random_unimodular(&mut rng, f.rank());
        let c = GoeritzForm::from_matrix(&(&u.transpose() * f.matrix()) * &u).map_err(|e| e.to_string())?;
        if all_correction_terms(&c).map_err(|e| e.to_string())?.values() != t.values() {
            return fail("congruence invariance", f.matrix());
        }
        counts[3] += 1;
    }
    for _ in 0..40 {
        let (a, b) = (random_form(&mut rng, 2, 25), random_form(&mut rng, 2, 25));
        let s = GoeritzForm::from_matrix(a.matrix().direct_sum(b.matrix())).unwrap();
        let (ta, tb) = (all_correction_terms(&a).unwrap(), all_correction_terms(&b).unwrap());
        let mut pairwise: Vec<Rational> =
            ta.values().iter().flat_map(|x| tb.values().into_iter().map(move |y| x.clone() + y)).collect();
        pairwise.sort();
        if all_correction_terms(&s).unwrap().values() != pairwise {
            return fail("block additivity", s.matrix());
        }
        counts[4] += 1;
    }
    for _ in 0..100 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let m = IntMatrix::from_fn(r, c, |_, _| Int::from(rng.gen_range(-20i64..=20)));
        if !smith_normal_form(&m).verify(&m) {
            return fail("Smith round trip", &m);
        }
        counts[5] += 1;
    }
    for (r, _) in records() {
        let Ok(KnotInput::Diagram(d)) = r.input() else { continue };
        let f = build_faces(&d).map_err(|e| e.to_string())?;
        let (a, b) = checkerboard(&f).map_err(|e| e.to_string())?;
        let det = |c: &grs_core::diagram::Coloring| {
            determinant(&goeritz_matrix(&f, c, *c.white.iter().next().unwrap()).unwrap()).unwrap().abs()
        };
        if det(&a) != det(&b) || det(&a).is_zero() {
            return Err(format!("{}: colorings disagree on |det|", r.name));
        }
        counts[6] += 1;
    }
    Ok(format!(
        "conjugation {}, bijectivity {}, denominators {}, congruence {}, block sums {}, Smith {}, colorings {}",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5], counts[6]
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for jobs in ["1", "4"] {
        let out = dir.path().join(format!("jobs{jobs}.jsonl"));
        let status = Command::new(env!("CARGO_BIN_EXE_grs"))
            .args(["batch", "--input", FIXTURES, "--jobs", jobs, "--output"])
            .arg(&out)
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("batch --jobs {jobs} exited with {status}"));
        }
        outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    if outputs[0] == outputs[1] {
        Ok(format!("--jobs 1 and --jobs 4 outputs identical ({} bytes)", outputs[0].len()))
    } else {
        Err("batch outputs differ".into())
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("1 alternating knots reproduce", alternating),
        ("2 non-alternating knots reproduce", nonalternating),
        ("3 figure-eight vanishing", figure_eight),
        ("4 enumeration vs box oracle", oracle),
        ("5 property suites", properties),
        ("6 batch determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
