//! Acceptance run: one `criterion N: PASS|FAIL` line per criterion, exit
//! status nonzero when any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pathsum::exact::{int, ratio, Rational};
use pathsum::identities::{
    apply_reversal, eval_identity, identity, mutated, points_for, reversal_target, sweep, CheckReport, IdentityId,
    Point,
};
use pathsum::prove::{verify_induction, verify_polynomial};
use pathsum::render::{figure_one, figure_two, render_walk};
use pathsum::walks::{
    avoiding_any, check_decomposition, check_recursion, closed_form_t, count_avoiding, count_paths, count_touching,
    oracle_count, simulate, valid_grid, Backend, DecompParams, Decomposition, PathConstraint,
};
use pathsum::{Limit, Status};

use IdentityId::*;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn rational_set() -> Vec<Rational> {
    vec![ratio(1, 2), ratio(-1, 2), ratio(1, 3), ratio(7, 5), ratio(-3, 2), ratio(9, 7)]
}

fn show_point(r: &CheckReport) -> String {
    let mut s = format!("{} n={}", r.identity, r.n);
    if let Some(m) = &r.m {
        s += &format!(" m={m}");
    }
    if let Some(v) = &r.r {
        s += &format!(" r={v}");
    }
    format!("{s} ({} vs {})", r.lhs, r.rhs)
}

/// Tally of a sweep; failures listed up to `show`.
fn tally(reports: &[CheckReport], show: usize) -> (usize, usize, usize, Vec<String>) {
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    let bad: Vec<String> =
        reports.iter().filter(|r| r.status == Status::Unequal).take(show).map(show_point).collect();
    (count(Status::Equal), count(Status::Pole), count(Status::Unequal), bad)
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    out.detail += &format!(" [{:.1}s]", took.as_secs_f64());
    if let Some(limit) = limit {
        if took > limit {
            out.pass = false;
            out.detail += &format!(" over the {}s budget", limit.as_secs());
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let ints: Vec<Rational> = (-10..=10).map(int).collect();
    let mut parts = Vec::new();
    let mut failing = Vec::new();
    let mut pass = true;
    for id in [I1, I2, I3, I4, I5, I6, I7, I8] {
        let def = identity(id);
        let reports = match sweep(def, 25, &points_for(def, &ints, &ints)) {
            Ok(r) => r,
            Err(e) => return Outcome::new(false, format!("{id}: {e}")),
        };
        let (eq, pole, ne, bad) = tally(&reports, 3);
        parts.push(format!("{id} {eq} equal/{pole} pole/{ne} unequal"));
        if ne > 0 {
            pass = false;
            let ms: BTreeSet<&Rational> =
                reports.iter().filter(|r| r.status == Status::Unequal).filter_map(|r| r.m.as_ref()).collect();
            let ms: Vec<String> = ms.into_iter().map(|m| m.to_string()).collect();
            failing.push(format!("{id} unequal at m in {{{}}}, e.g. {}", ms.join(","), bad.join("; ")));
        }
    }
    let mut detail = parts.join(", ");
    if !failing.is_empty() {
        detail += &format!(" | {}", failing.join(" | "));
    }
    Outcome::new(pass, detail)
}

fn criterion_2() -> Outcome {
    let set = rational_set();
    let mut total = 0;
    let mut bad = Vec::new();
    for id in [I1, I2, I3, I4, I7, I8] {
        let def = identity(id);
        let reports = match sweep(def, 15, &points_for(def, &set, &set)) {
            Ok(r) => r,
            Err(e) => return Outcome::new(false, format!("{id}: {e}")),
        };
        total += reports.len();
        bad.extend(reports.iter().filter(|r| r.status != Status::Equal).take(3).map(show_point));
    }
    Outcome::new(bad.is_empty(), format!("{total} points, {} not equal {}", bad.len(), bad.join("; ")))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for id in [I7, I8] {
        let def = identity(id);
        for n in 0..=20 {
            count += 1;
            match eval_identity(def, n, &Point::m(int(-1))) {
                Ok(r) if r.status == Status::Equal => {}
                Ok(r) => bad.push(show_point(&r)),
                Err(e) => bad.push(format!("{id} n={n}: {e}")),
            }
        }
    }
    // the worked example: I7, n=1, m=-1 gives 2 + 2 = 4
    let terms = identity(I7).eval_terms(1, &Point::m(int(-1))).unwrap();
    let example = terms == vec![Limit::Value(int(2)), Limit::Value(int(2))]
        && identity(I7).eval_rhs(1, &Point::m(int(-1))).unwrap() == Limit::Value(int(4));
    if !example {
        bad.push(format!("I7 n=1 m=-1 terms {terms:?}"));
    }
    for id in [I9, I10] {
        let def = identity(id);
        for n in 0..=30 {
            count += 1;
            match eval_identity(def, n, &Point::default()) {
                Ok(r) if r.status == Status::Equal => {}
                Ok(r) => bad.push(show_point(&r)),
                Err(e) => bad.push(format!("{id} n={n}: {e}")),
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{count} evaluations, I7 n=1 m=-1 terms 2+2=4: {example}; {}", bad.join("; ")))
}

fn criterion_4() -> Outcome {
    use PathConstraint::*;
    let mut checks = 0usize;
    let mut bad: Vec<String> = Vec::new();
    let mut expect = |what: String, got: Result<BigInt, String>, want: &BigInt| {
        checks += 1;
        match got {
            Ok(v) if &v == want => {}
            Ok(v) => bad.push(format!("{what}: {v} != {want}")),
            Err(e) => bad.push(format!("{what}: {e}")),
        }
    };
    for n in 0..=14i64 {
        let oracle = |c: &[PathConstraint]| oracle_count(Backend::Exhaustive, n, c).unwrap();
        let dp = |c: &[PathConstraint]| oracle_count(Backend::DynamicProgramming, n, c).unwrap();
        for m in (-n..=n).step_by(2) {
            let p = oracle(&[EndAt(m)]);
            expect(format!("P({n},{m})"), Ok(count_paths(n, m)), &p);
            expect(format!("dp P({n},{m})"), Ok(dp(&[EndAt(m)])), &p);
            for r in -n..=n {
                let touch = oracle(&[EndAt(m), Touches(r)]);
                let avoid = oracle(&[EndAt(m), Avoids(r)]);
                expect(format!("dp S({n},{m},{r})"), Ok(dp(&[EndAt(m), Touches(r)])), &touch);
                expect(format!("dp T({n},{m},{r})"), Ok(dp(&[EndAt(m), Avoids(r)])), &avoid);
                if m >= 0 {
                    expect(format!("S({n},{m},{r})"), count_touching(n, m, r).map_err(|e| e.to_string()), &touch);
                }
                if r < 0 {
                    if m >= 0 {
                        expect(format!("T({n},{m},{r})"), count_avoiding(n, m, r).map_err(|e| e.to_string()), &avoid);
                    }
                    expect(format!("T*({n},{m},{r})"), avoiding_any(n, m, r).map_err(|e| e.to_string()), &avoid);
                    if m >= 0 && r >= -4 {
                        let closed = closed_form_t(n, m, (-r) as u32).map_err(|e| e.to_string()).and_then(|q| {
                            if q.is_integer() {
                                Ok(q.to_integer())
                            } else {
                                Err(format!("non-integer {q}"))
                            }
                        });
                        expect(format!("closed T({n},{m},{r})"), closed, &avoid);
                    }
                }
            }
        }
    }
    let shown: Vec<_> = bad.iter().take(5).cloned().collect();
    Outcome::new(bad.is_empty(), format!("{checks} comparisons, {} mismatches {}", bad.len(), shown.join("; ")))
}

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for d in Decomposition::ALL {
        let grid = valid_grid(d, 14);
        let reports: Vec<_> = grid.iter().map(|p| check_decomposition(d, *p)).collect();
        let equal = reports.iter().filter(|r| r.status == Status::Equal).count();
        if equal != reports.len() || reports.is_empty() {
            pass = false;
            let first = reports.iter().find(|r| r.status != Status::Equal).map(|r| format!(" first {:?} {:?}", r.params, r.status));
            parts.push(format!("{d} {equal}/{}{}", reports.len(), first.unwrap_or_default()));
        } else {
            parts.push(format!("{d} {equal}/{}", reports.len()));
        }
    }
    let spot = |d: Decomposition, steps, end, split, lhs: i64, terms: &[i64]| {
        let r = check_decomposition(d, DecompParams { steps, end, split });
        r.status == Status::Equal
            && r.lhs == BigInt::from(lhs)
            && r.terms == terms.iter().map(|&t| BigInt::from(t)).collect::<Vec<_>>()
    };
    let spots = [
        ("6=1+2+3", spot(Decomposition::StepLineLeft, 4, 0, Some(1), 6, &[1, 2, 3])),
        ("3=2+1", spot(Decomposition::BarrierBand, 4, 0, Some(-1), 3, &[2, 1])),
        ("4=2+2", spot(Decomposition::AvoidFirstThree, 5, 3, None, 4, &[2, 2])),
    ];
    for (name, ok) in spots {
        pass &= ok;
        parts.push(format!("spot {name}: {}", if ok { "ok" } else { "wrong" }));
    }
    Outcome::new(pass, parts.join(", "))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=20i64 {
        for m in 0..=n {
            for r in -n..=n {
                match check_recursion(n, m, r) {
                    Ok(rep) => {
                        checked += 1;
                        if rep.status != Status::Equal {
                            failures.push((n, m, r, rep));
                        }
                    }
                    Err(e) => return Outcome::new(false, format!("N={n} m={m} r={r}: {e}")),
                }
            }
        }
    }
    let all_at_m_plus_one = failures.iter().all(|(_, m, r, _)| *r == m + 1);
    let examples: Vec<String> = failures
        .iter()
        .take(4)
        .map(|(n, m, r, rep)| format!("(N={n},m={m},r={r}) {} != {}+{}", rep.lhs, rep.terms[0], rep.terms[1]))
        .collect();
    Outcome::new(
        failures.is_empty(),
        format!(
            "{checked} points, {} unequal (all at r=m+1: {all_at_m_plus_one}) {}",
            failures.len(),
            examples.join("; ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let ids = [I1, I2, I3, I4, I7, I8];
    let mut evaluations = 0;
    let mut bad = Vec::new();
    for id in ids {
        for n in 0..=8 {
            match verify_polynomial(identity(id), n) {
                Ok(c) if c.is_verified() => evaluations += c.evaluations,
                Ok(c) => bad.push(format!("{id} n={n}: {c}")),
                Err(e) => bad.push(format!("{id} n={n}: {e}")),
            }
        }
        let mutant = mutated(id).expect("mutant registered");
        match verify_polynomial(&mutant, 2) {
            Ok(c) if !c.is_verified() => {}
            Ok(c) => bad.push(format!("{} n=2 not refuted: {c}", mutant.name)),
            Err(e) => bad.push(format!("{} n=2: {e}", mutant.name)),
        }
    }
    Outcome::new(bad.is_empty(), format!("{evaluations} grid evaluations, 6 mutants checked {}", bad.join("; ")))
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let mut certs = 0;
    for id in [I7, I8] {
        match verify_induction(identity(id), 20) {
            Ok(cs) => {
                certs += cs.len();
                bad.extend(cs.iter().filter(|c| !c.is_verified()).map(|c| format!("{id} n={}: {c}", c.n)));
            }
            Err(e) => bad.push(format!("{id}: {e}")),
        }
    }
    Outcome::new(bad.is_empty() && certs == 42, format!("{certs} certificates {}", bad.join("; ")))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let sample = |rng: &mut ChaCha8Rng| {
        // denominators 2..=9 keep every form away from zero for small n
        ratio(rng.gen_range(-40..=40), rng.gen_range(2..=9))
    };
    let mut bad = Vec::new();
    let mut checked = 0;
    for id in [I1, I2, I3, I4] {
        let target = identity(reversal_target(id).expect("reversal defined"));
        let rev = match apply_reversal(identity(id)) {
            Ok(r) => r,
            Err(e) => return Outcome::new(false, format!("{id}: {e}")),
        };
        for _ in 0..50 {
            let n = rng.gen_range(0..=6);
            let p = Point::mr(sample(&mut rng), sample(&mut rng));
            checked += 1;
            let same = (0..=n).all(|k| rev.eval_term(k, n, &p).ok() == target.eval_term(k, n, &p).ok())
                && rev.eval_rhs(n, &p).ok() == target.eval_rhs(n, &p).ok();
            if !same {
                bad.push(format!("{id} n={n} {p}"));
            }
        }
    }
    let fixed = reversal_target(I1) == Some(I1)
        && reversal_target(I4) == Some(I4)
        && reversal_target(I2) == Some(I3)
        && reversal_target(I3) == Some(I2);
    Outcome::new(bad.is_empty() && fixed, format!("{checked} assignments, I2<->I3 and I1, I4 fixed: {fixed} {}", bad.join("; ")))
}

fn criterion_10() -> Outcome {
    const SAMPLES: u64 = 1_000_000;
    const SEED: u64 = 20_240_601;
    let a = simulate(8, SAMPLES, SEED).unwrap();
    let b = simulate(8, SAMPLES, SEED).unwrap();
    let p = 56.0 / 256.0;
    let band = 5.0 * (p * (1.0 - p) / SAMPLES as f64).sqrt();
    let freq = a.frequency(2);
    let within = (freq - p).abs() <= band;
    let counts: BTreeMap<_, _> = a.ends.clone();
    Outcome::new(
        within && a == b,
        format!("seed {SEED}: freq(2) = {freq:.6}, p = {p:.6}, band ±{band:.6}, reproducible: {}, ends {counts:?}", a == b),
    )
}

fn criterion_11() -> Outcome {
    let golden = [include_str!("golden/fig1.txt"), include_str!("golden/fig2.txt")];
    let mut bad = Vec::new();
    for (i, (scene, want)) in [figure_one(), figure_two()].iter().zip(golden).enumerate() {
        let first = render_walk(scene).unwrap();
        let second = render_walk(scene).unwrap();
        if first != second {
            bad.push(format!("figure {} differs between runs", i + 1));
        }
        if first != want {
            bad.push(format!("figure {} differs from golden file", i + 1));
        }
    }
    let path_ok = figure_one().path.map(|p| p.to_string()) == Some("LRRLLLRL".to_string());
    if !path_ok {
        bad.push("figure 1 path is not LRRLLLRL".into());
    }
    Outcome::new(bad.is_empty(), if bad.is_empty() { "both figures byte-identical".to_string() } else { bad.join("; ") })
}

fn main() {
    let budget = Some(Duration::from_secs(60));
    let criteria: Vec<(u32, Box<dyn FnOnce() -> Outcome>)> = vec![
        (1, Box::new(move || timed(budget, criterion_1))),
        (2, Box::new(|| timed(None, criterion_2))),
        (3, Box::new(|| timed(None, criterion_3))),
        (4, Box::new(move || timed(budget, criterion_4))),
        (5, Box::new(|| timed(None, criterion_5))),
        (6, Box::new(|| timed(None, criterion_6))),
        (7, Box::new(|| timed(None, criterion_7))),
        (8, Box::new(|| timed(None, criterion_8))),
        (9, Box::new(|| timed(None, criterion_9))),
        (10, Box::new(|| timed(None, criterion_10))),
        (11, Box::new(|| timed(None, criterion_11))),
    ];
    let mut failed = Vec::new();
    for (n, run) in criteria {
        let out = run();
        println!("criterion {n}: {} — {}", if out.pass { "PASS" } else { "FAIL" }, out.detail);
        if !out.pass {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
