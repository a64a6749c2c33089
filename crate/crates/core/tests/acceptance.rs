//! Acceptance criteria 1–9. Each prints one PASS/FAIL line with its runtime.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

use spinor_core::arith::{binomial, rat};
use spinor_core::catalog::{
    known_aspinorial_witness, make_group, summary_check, summary_families, type_d_dim_casimir, GroupSpec, TypeDRow,
    TypeDWeight,
};
use spinor_core::repcalc::{freudenthal_multiplicities, weyl_dim, DEFAULT_GUARD};
use spinor_core::spinor::{
    adjoint_spinorial, descent_check, descent_check_sl, is_spinorial, oracle_compare, oracle_points,
    orthogonal_weights_by_labels, orthogonal_weights_in_box, q_rep, scan_periodicity, DEFAULT_WEYL_BOUND,
};
use spinor_core::{Family, LieType, OrthRep, RootDatum};

type Outcome = Result<String, String>;

/// The smallest multiple of `λ + λ*` that is an orthogonal character.
fn orthogonal_multiple(rd: &RootDatum, labels: &[i64]) -> OrthRep {
    let w = rd.weight_from_labels(labels);
    let w = w.plus(&rd.dominant_conjugate(&w.neg()).weight);
    (1..=24)
        .find_map(|c| OrthRep::irreducible(rd, w.scaled(&rat(c))).ok())
        .expect("some multiple is orthogonal")
}

fn lt(s: &str) -> LieType {
    LieType::parse(s).unwrap()
}

fn all_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for (f, lo, hi) in [(Family::A, 1, 8), (Family::B, 2, 8), (Family::C, 3, 8), (Family::D, 4, 8)] {
        for r in lo..=hi.min(max_rank) {
            out.push(LieType::new(f, r).unwrap());
        }
    }
    for s in ["E6", "E7", "E8", "F4", "G2"] {
        let t = lt(s);
        if t.rank <= max_rank {
            out.push(t);
        }
    }
    out
}

/// Every catalog group with torus rank at most `max_rank`.
fn catalog_groups(max_rank: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 2..=max_rank + 1 {
        for d in 1..=n {
            if n % d == 0 {
                out.push(GroupSpec::SlQuot { n, d });
            }
        }
        out.push(GroupSpec::Pgl { n });
    }
    for n in 2..=max_rank {
        out.push(GroupSpec::Gl { n });
    }
    for n in 1..=max_rank {
        out.push(GroupSpec::Sp { n });
        out.push(GroupSpec::SpQuot { n });
    }
    for m in 3..=2 * max_rank + 1 {
        out.push(GroupSpec::So { m });
        out.push(GroupSpec::Spin { m });
    }
    for n in 2..=max_rank {
        out.push(GroupSpec::Pso { n });
    }
    for n in (4..=max_rank).step_by(2) {
        out.push(GroupSpec::Gplus { n });
        out.push(GroupSpec::Gminus { n });
    }
    for t in all_types(max_rank) {
        out.push(GroupSpec::SimplyConnected(t));
        out.push(GroupSpec::Adjoint(t));
    }
    out
}

fn c1_pgl2() -> Outcome {
    let (rd, fg) = make_group(&GroupSpec::Pgl { n: 2 }).unwrap();
    for j in 0..=100i64 {
        let rep = OrthRep::irreducible(&rd, rd.weight_int(&[j]).unwrap()).unwrap();
        let v = is_spinorial(&rd, &fg, &rep).unwrap();
        if v.spinorial != (j % 4 == 0 || j % 4 == 3) {
            return Err(format!("j = {j}: engine says {}", v.spinorial));
        }
    }
    Ok("101 weights".into())
}

fn c2_so4() -> Outcome {
    let (rd, fg) = make_group(&GroupSpec::So { m: 4 }).unwrap();
    let mut n = 0;
    for a in 0..=20i64 {
        for b in (a % 2..=20).step_by(2) {
            let f = BigInt::from(b + 1) * binomial(a as u64 + 2, 3) + BigInt::from(a + 1) * binomial(b as u64 + 2, 3);
            let w = rd.weight_from_labels(&[a, b]);
            let v = is_spinorial(&rd, &fg, &OrthRep::irreducible(&rd, w).unwrap()).unwrap();
            if v.spinorial != (f % 8 == BigInt::from(0)) {
                return Err(format!("(a, b) = ({a}, {b})"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} weights"))
}

fn c3_gl2() -> Outcome {
    let (rd, fg) = make_group(&GroupSpec::Gl { n: 2 }).unwrap();
    let mut n = 0;
    for m in 0..=15i64 {
        for k in 0..=m {
            let rep = OrthRep::hyperbolic(&rd, rd.weight_int(&[m, k]).unwrap()).unwrap();
            let v = is_spinorial(&rd, &fg, &rep).unwrap();
            let expected = ((m + k) * (m - k + 1) / 2) % 2 == 0;
            if v.spinorial != expected {
                return Err(format!("(m, n) = ({m}, {k})"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} hyperbolic reps"))
}

fn c4_tables() -> Outcome {
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for n in [4usize, 6, 8, 10] {
        for row in TypeDRow::ALL {
            let spec = row.spec(n);
            let (_, fg) = make_group(&spec).unwrap();
            checked += 1;
            if fg.p_value != Some(row.tabulated_p(n)) {
                mismatches.push(format!("{spec}: p = {:?}, table {}", fg.p_value, row.tabulated_p(n)));
            }
        }
        let mut weights: Vec<TypeDWeight> = (1..=n).map(TypeDWeight::Fundamental).collect();
        weights.extend([TypeDWeight::HalfSpin, TypeDWeight::HalfSpinMinus, TypeDWeight::Minus]);
        for w in weights {
            let (dim, chi) = type_d_dim_casimir(n, w).unwrap();
            let (tdim, tchi) = w.tabulated(n);
            checked += 1;
            if dim != tdim || chi != tchi {
                mismatches.push(format!("D{n} {}: computed ({dim}, {chi}), table ({tdim}, {tchi})", w.label()));
            }
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{checked} rows"))
    } else {
        Err(format!("{}/{checked} rows differ: {}", mismatches.len(), mismatches.join("; ")))
    }
}

fn c5_oracles() -> Outcome {
    let groups = catalog_groups(4);
    let results: Vec<(usize, usize, Vec<String>)> = groups
        .par_iter()
        .map(|spec| {
            let (rd, fg) = make_group(spec).unwrap();
            let points = oracle_points(&rd, &fg);
            let mut count = 0;
            let mut weyl = 0;
            let mut bad = Vec::new();
            for w in orthogonal_weights_by_labels(&rd, 3) {
                if weyl_dim(&rd, &w).unwrap() > BigInt::from(100_000) {
                    continue;
                }
                for nu in &points {
                    count += 1;
                    match oracle_compare(&rd, &w, nu, 100_000, DEFAULT_WEYL_BOUND) {
                        Ok(r) if r.pass => weyl += usize::from(r.weyl.is_some()),
                        Ok(r) => bad.push(format!("{spec} λ={w} ν={nu}: L={} q={} weyl={:?}", r.l, r.q, r.weyl)),
                        Err(e) => bad.push(format!("{spec} λ={w}: {e}")),
                    }
                }
            }
            (count, weyl, bad)
        })
        .collect();
    let total: usize = results.iter().map(|r| r.0).sum();
    let weyl: usize = results.iter().map(|r| r.1).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.2).collect();
    if bad.is_empty() {
        Ok(format!("{} groups, {total} comparisons, {weyl} with the Weyl sum", groups.len()))
    } else {
        Err(format!("{} mismatches, first: {}", bad.len(), bad[0]))
    }
}

fn c6_summary() -> Outcome {
    let families = summary_families();
    let results: Vec<std::result::Result<usize, String>> = families
        .par_iter()
        .map(|spec| {
            let (rd, fg) = make_group(spec).unwrap();
            if summary_check(spec) {
                let weights = orthogonal_weights_in_box(&rd, 2);
                for w in &weights {
                    let v = is_spinorial(&rd, &fg, &OrthRep::irreducible(&rd, w.clone()).unwrap()).unwrap();
                    if !v.spinorial {
                        return Err(format!("{spec}: {w} is aspinorial"));
                    }
                }
                Ok(weights.len())
            } else {
                let (w, kind) = known_aspinorial_witness(spec).unwrap().expect("witness");
                let v = is_spinorial(&rd, &fg, &kind.rep(&rd, w.clone()).unwrap()).unwrap();
                if v.spinorial {
                    return Err(format!("{spec}: witness {w} is spinorial"));
                }
                Ok(1)
            }
        })
        .collect();
    let mut n = 0;
    for r in results {
        n += r?;
    }
    Ok(format!("{} groups, {n} reps", families.len()))
}

fn c7_descent() -> Outcome {
    for n in 2..=12usize {
        let rd = RootDatum::build(&[LieType::new(Family::A, n - 1).unwrap()], 0).unwrap();
        let mut v = vec![rat(1); n];
        v[n - 1] = rat(1 - n as i64);
        let nu0 = rd.tangent(v).unwrap();
        let t = freudenthal_multiplicities(&rd, &rd.highest_root(0), DEFAULT_GUARD).unwrap();
        let l = t.pairing_sums(&rd, &nu0).l;
        if l != rat((n * (n - 1)) as i64) {
            return Err(format!("SL{n}: L = {l}"));
        }
    }
    let mut aspinorial = Vec::new();
    for n in (4..=16usize).step_by(4) {
        let d = n / 2;
        let sl = RootDatum::build(&[LieType::new(Family::A, n - 1).unwrap()], 0).unwrap();
        let mut v = vec![rat(1); n];
        v[n - 1] = rat(1 - n as i64);
        let nu0 = sl.tangent(v).unwrap();
        let labels: Vec<i64> = (1..n).map(|i| i64::from(i == d)).collect();
        let w = sl.weight_from_labels(&labels);
        let fast = descent_check_sl(&sl, &w, d as i64).map_err(|e| e.to_string())?;
        let slow = descent_check(&sl, &w, &nu0, d as i64, DEFAULT_GUARD).map_err(|e| e.to_string())?;
        let (rd, fg) = make_group(&GroupSpec::SlQuot { n, d }).unwrap();
        let lambda = rd.character(w.coords().to_vec()).map_err(|e| e.to_string())?;
        let closed = is_spinorial(&rd, &fg, &OrthRep::irreducible(&rd, lambda).unwrap()).unwrap().spinorial;
        if fast != slow || fast != closed {
            return Err(format!("n = {n}: routes disagree (sl {fast}, table {slow}, closed form {closed})"));
        }
        if !closed {
            aspinorial.push(n);
        }
    }
    if aspinorial != [4, 8, 16] {
        return Err(format!("ϖ_(n/2) aspinorial at n ∈ {aspinorial:?}"));
    }
    Ok("L_ad = n(n−1) for n ≤ 12; ϖ_(n/2) aspinorial at n ∈ {4, 8, 16}".into())
}

fn c8_periodicity() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (spec, bound, k) in [(GroupSpec::Pgl { n: 2 }, 64, 2), (GroupSpec::So { m: 4 }, 16, 3)] {
        let (rd, fg) = make_group(&spec).unwrap();
        let at = scan_periodicity(&rd, &fg, bound, k).unwrap();
        let below = scan_periodicity(&rd, &fg, bound, k - 1).unwrap();
        let good = !at.vacuous() && at.violations.is_empty() && !below.violations.is_empty();
        ok &= good;
        notes.push(format!(
            "{spec} box {bound}: {} violations at k = {k} over {} pairs, {} at k = {}, minimal k = {}",
            at.violations.len(),
            at.checked_pairs,
            below.violations.len(),
            k - 1,
            at.minimal_k
        ));
    }
    if ok {
        Ok(notes.join("; "))
    } else {
        Err(notes.join("; "))
    }
}

fn c9_structure() -> Outcome {
    let groups = catalog_groups(8);
    for spec in &groups {
        let (rd, fg) = make_group(spec).unwrap();
        let eight_delta = rd.character(rd.delta().scaled(&rat(8)).into_coords()).map_err(|e| format!("{spec}: {e}"))?;
        let v = is_spinorial(&rd, &fg, &OrthRep::irreducible(&rd, eight_delta).unwrap()).unwrap();
        if !v.spinorial {
            return Err(format!("{spec}: 8δ aspinorial"));
        }
        let adj = is_spinorial(&rd, &fg, &OrthRep::adjoint(&rd)).unwrap();
        if adj.spinorial != adjoint_spinorial(&rd) {
            return Err(format!("{spec}: adjoint verdict {} but δ integral = {}", adj.spinorial, adjoint_spinorial(&rd)));
        }
    }

    let cases: Vec<GroupSpec> = catalog_groups(4).into_iter().filter(|g| !matches!(g, GroupSpec::Gl { .. })).collect();
    let config = Config { cases: 200, failure_persistence: None, ..Config::default() };

    let mut runner = TestRunner::new(config.clone());
    let homomorphism = (0..cases.len(), prop::collection::vec(0i64..3, 4), prop::collection::vec(0i64..3, 4));
    runner
        .run(&homomorphism, |(g, a, b)| {
            let (rd, fg) = make_group(&cases[g]).unwrap();
            let r = rd.semisimple_rank();
            let x = orthogonal_multiple(&rd, &a[..r]);
            let y = orthogonal_multiple(&rd, &b[..r]);
            for nu in &fg.generators {
                let qs = q_rep(&rd, &x.sum(&y), nu).unwrap();
                let vx = is_spinorial(&rd, &fg, &x).unwrap();
                let vy = is_spinorial(&rd, &fg, &y).unwrap();
                let parts = q_rep(&rd, &x, nu).unwrap() + q_rep(&rd, &y, nu).unwrap();
                prop_assert_eq!(&qs, &parts);
                if vx.spinorial && vy.spinorial {
                    prop_assert!(qs.is_even());
                }
            }
            Ok(())
        })
        .map_err(|e| format!("parity homomorphism: {e}"))?;

    let mut runner = TestRunner::new(config);
    let invariance = (0..cases.len(), prop::collection::vec(0i64..3, 4), prop::collection::vec(-3i64..4, 4));
    runner
        .run(&invariance, |(g, a, c)| {
            let (rd, fg) = make_group(&cases[g]).unwrap();
            let r = rd.semisimple_rank();
            let rep = orthogonal_multiple(&rd, &a[..r]);
            let mut shift = rd.tangent(vec![rat(0); rd.ambient_dim()]).unwrap();
            for (i, coroot) in rd.simple_coroots().iter().enumerate() {
                shift = shift.plus(&coroot.scaled(&rat(c[i % c.len()])));
            }
            for nu in &fg.generators {
                let q0 = q_rep(&rd, &rep, nu).unwrap();
                let q1 = q_rep(&rd, &rep, &nu.plus(&shift)).unwrap();
                prop_assert_eq!(q0.is_even(), q1.is_even());
            }
            Ok(())
        })
        .map_err(|e| format!("Q(T)-invariance: {e}"))?;
    Ok(format!("8δ and adjoint over {} groups; 2 × 200 property cases", groups.len()))
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 9] = [
        (1, "PGL2 pattern", c1_pgl2, Some(Duration::from_secs(1))),
        (2, "SO4 pattern", c2_so4, Some(Duration::from_secs(1))),
        (3, "GL2 hyperbolic", c3_gl2, Some(Duration::from_secs(1))),
        (4, "type D tables", c4_tables, Some(Duration::from_secs(1))),
        (5, "three-way oracle agreement", c5_oracles, Some(Duration::from_secs(300))),
        (6, "summary families", c6_summary, Some(Duration::from_secs(600))),
        (7, "descent criterion", c7_descent, None),
        (8, "periodicity", c8_periodicity, Some(Duration::from_secs(60))),
        (9, "structural properties", c9_structure, None),
    ];
    let mut failed = Vec::new();
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let slow = limit.is_some_and(|l| elapsed > l);
        let (status, detail) = match (&outcome, slow) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {:?} bound", limit.unwrap())),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        println!("criterion {id} ({name}): {status} in {:.3}s: {detail}", elapsed.as_secs_f64());
        if status == "FAIL" {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
