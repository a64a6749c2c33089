use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde_json::Value;

use spinor_core::arith::{fmt_rat, rat};
use spinor_core::catalog::{known_aspinorial_witness, summary_check, TypeDRow, TypeDWeight};
use spinor_core::repcalc::{casimir_total, guard_from_env, weyl_dim};
use spinor_core::spinor::{
    l_oracle_verdict, oracle_compare, oracle_points, orthogonal_weights_in_box, scan_periodicity, OracleReport,
    DEFAULT_WEYL_BOUND,
};
use spinor_core::{is_spinorial, Error, Family, OrthRep, Result, SummandKind, Verdict, Weight};

use crate::group::{parse_weight, Group};
use crate::output::{self, object};
use crate::{Common, Format, MethodArg};

fn guard(c: &Common) -> u64 {
    c.guard.unwrap_or_else(guard_from_env)
}

fn kind_name(k: SummandKind) -> &'static str {
    match k {
        SummandKind::Orthogonal => "orth",
        SummandKind::Hyperbolic => "S",
    }
}

fn weights(g: &Group, c: &Common) -> Result<Vec<(Weight, SummandKind)>> {
    c.weights.iter().map(|w| parse_weight(g, w, c.labels)).collect()
}

fn build_rep(g: &Group, summands: &[(Weight, SummandKind)]) -> Result<OrthRep> {
    let mut irr = Vec::new();
    let mut hyp = Vec::new();
    for (w, k) in summands {
        match k {
            SummandKind::Orthogonal => irr.push(w.clone()),
            SummandKind::Hyperbolic => hyp.push(w.clone()),
        }
    }
    OrthRep::new(&g.rd, irr, hyp)
}

fn describe(summands: &[(Weight, SummandKind)]) -> String {
    let parts: Vec<String> = summands
        .iter()
        .map(|(w, k)| match k {
            SummandKind::Orthogonal => w.to_string(),
            SummandKind::Hyperbolic => format!("S{w}"),
        })
        .collect();
    parts.join(" + ")
}

pub fn check(c: &Common, sum: bool, method: MethodArg) -> Result<String> {
    let g = Group::load(&c.group)?;
    let ws = weights(&g, c)?;
    if ws.is_empty() {
        return Err(Error::Parse("check needs at least one --weight".into()));
    }
    let jobs: Vec<Vec<(Weight, SummandKind)>> = if sum { vec![ws] } else { ws.into_iter().map(|w| vec![w]).collect() };
    let guard = guard(c);
    let results: Vec<(Vec<(Weight, SummandKind)>, OrthRep, Verdict)> = jobs
        .into_par_iter()
        .map(|job| {
            let rep = build_rep(&g, &job)?;
            let v = match method {
                MethodArg::ClosedForm => is_spinorial(&g.rd, &g.fg, &rep)?,
                MethodArg::LOracle => l_oracle_verdict(&g.rd, &g.fg, &rep, guard)?,
            };
            Ok((job, rep, v))
        })
        .collect::<Result<_>>()?;

    if c.format == Format::Json {
        let rows: Vec<Value> = results
            .iter()
            .map(|(job, rep, v)| {
                let summands = job
                    .iter()
                    .map(|(w, k)| object([("kind", Value::from(kind_name(*k))), ("weight", output::vec(w.coords()))]))
                    .collect();
                let cert = v
                    .certificate
                    .iter()
                    .map(|(nu, q)| object([("nu", output::vec(nu.coords())), ("value", output::int(q))]))
                    .collect();
                object([
                    ("summands", Value::Array(summands)),
                    ("dim", output::int(&rep.dim(&g.rd))),
                    ("spinorial", Value::Bool(v.spinorial)),
                    ("method", Value::from(v.method.as_str())),
                    ("certificate", Value::Array(cert)),
                ])
            })
            .collect();
        let doc = object([
            ("command", Value::from("check")),
            ("group", Value::from(g.name.clone())),
            ("results", Value::Array(rows)),
        ]);
        return Ok(output::render(&doc));
    }
    let mut out = String::new();
    for (job, rep, v) in &results {
        let verdict = if v.spinorial { "spinorial" } else { "aspinorial" };
        let cert = if v.certificate.is_empty() {
            "π₁ trivial".to_string()
        } else {
            let name = if v.method == spinor_core::Method::LOracle { "L" } else { "q" };
            v.certificate.iter().map(|(nu, q)| format!("{name}{nu} = {q}")).collect::<Vec<_>>().join(", ")
        };
        writeln!(out, "{} {}: {verdict} (dim {}; {cert}) [{}]", g.name, describe(job), rep.dim(&g.rd), v.method.as_str())
            .unwrap();
    }
    Ok(out)
}

struct TableRow {
    label: String,
    dim: String,
    chi: String,
    tabulated: Option<(String, String)>,
}

pub fn table(c: &Common) -> Result<String> {
    let g = Group::load(&c.group)?;
    let rd = &g.rd;
    let type_d = rd.is_simple() && rd.central_rank() == 0 && {
        let t = rd.lie_types()[0];
        t.family == Family::D && t.rank % 2 == 0 && t.rank >= 4
    };

    let mut p_rows: Vec<(String, String, Option<String>)> = Vec::new();
    let mut rows = Vec::new();
    let row_for = |label: String, w: &Weight| -> Result<TableRow> {
        Ok(TableRow {
            label,
            dim: weyl_dim(rd, w)?.to_string(),
            chi: fmt_rat(&casimir_total(rd, w)?),
            tabulated: None,
        })
    };
    rows.push(row_for("0".into(), &rd.weight(vec![rat(0); rd.ambient_dim()])?)?);

    if type_d {
        let n = rd.rank();
        for row in TypeDRow::ALL {
            let other = Group::from_spec(row.spec(n))?;
            let p = other.fg.p_value.as_ref().map_or("-".into(), fmt_rat);
            p_rows.push((other.name, p, Some(fmt_rat(&row.tabulated_p(n)))));
        }
        let mut ws: Vec<TypeDWeight> = (1..=n).map(TypeDWeight::Fundamental).collect();
        ws.extend([TypeDWeight::HalfSpin, TypeDWeight::HalfSpinMinus, TypeDWeight::Minus]);
        for w in ws {
            let mut r = row_for(w.label(), &rd.weight(w.coords(n))?)?;
            let (td, tc) = w.tabulated(n);
            r.tabulated = Some((td.to_string(), fmt_rat(&tc)));
            rows.push(r);
        }
    } else {
        let p = g.fg.p_value.as_ref().map_or("-".into(), fmt_rat);
        p_rows.push((g.name.clone(), p, None));
        for (i, w) in rd.fundamental_weights().iter().enumerate() {
            rows.push(row_for(format!("w{}", i + 1), w)?);
        }
    }
    for (w, _) in weights(&g, c)? {
        rows.push(row_for(w.to_string(), &w)?);
    }

    if c.format == Format::Json {
        let p_json = p_rows
            .iter()
            .map(|(name, p, t)| {
                object([
                    ("group", Value::from(name.clone())),
                    ("p", Value::from(p.clone())),
                    ("tabulated", t.clone().map_or(Value::Null, Value::from)),
                ])
            })
            .collect();
        let r_json = rows
            .iter()
            .map(|r| {
                let tab = r.tabulated.as_ref().map_or(Value::Null, |(d, x)| {
                    object([("dim", Value::from(d.clone())), ("chi", Value::from(x.clone()))])
                });
                object([
                    ("weight", Value::from(r.label.clone())),
                    ("dim", Value::from(r.dim.clone())),
                    ("chi", Value::from(r.chi.clone())),
                    ("tabulated", tab),
                ])
            })
            .collect();
        let gens = g.fg.generators.iter().map(|nu| output::vec(nu.coords())).collect();
        let doc = object([
            ("command", Value::from("table")),
            ("group", Value::from(g.name.clone())),
            ("generators", Value::Array(gens)),
            ("p", Value::Array(p_json)),
            ("weights", Value::Array(r_json)),
        ]);
        return Ok(output::render(&doc));
    }

    let mut out = String::new();
    let gens: Vec<String> = g.fg.generators.iter().map(|nu| nu.to_string()).collect();
    writeln!(out, "{}: generators {}", g.name, if gens.is_empty() { "none".into() } else { gens.join(", ") }).unwrap();
    for (name, p, t) in &p_rows {
        match t {
            Some(t) => writeln!(out, "p {name} = {p} (tabulated {t}{})", if p == t { "" } else { ", MISMATCH" }),
            None => writeln!(out, "p {name} = {p}"),
        }
        .unwrap();
    }
    for r in &rows {
        write!(out, "{:>8}  dim {:>12}  chi {:>8}", r.label, r.dim, r.chi).unwrap();
        if let Some((d, x)) = &r.tabulated {
            let flag = if *d == r.dim && *x == r.chi { "" } else { "  MISMATCH" };
            write!(out, "  tabulated dim {d}, chi {x}{flag}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn oracle(c: &Common, box_bound: u64) -> Result<String> {
    let g = Group::load(&c.group)?;
    let guard = guard(c);
    let ws: Vec<Weight> = if c.weights.is_empty() {
        orthogonal_weights_in_box(&g.rd, box_bound)
    } else {
        weights(&g, c)?.into_iter().map(|(w, _)| w).collect()
    };
    let points = oracle_points(&g.rd, &g.fg);
    let jobs: Vec<(Weight, usize)> = ws.iter().flat_map(|w| (0..points.len()).map(move |i| (w.clone(), i))).collect();
    let reports: Vec<std::result::Result<OracleReport, (Weight, Error)>> = jobs
        .into_par_iter()
        .map(|(w, i)| oracle_compare(&g.rd, &w, &points[i], guard, DEFAULT_WEYL_BOUND).map_err(|e| (w, e)))
        .collect();

    let mut skipped = Vec::new();
    let mut done = Vec::new();
    for r in reports {
        match r {
            Ok(rep) => done.push(rep),
            Err((w, e @ Error::GuardExceeded { .. })) => skipped.push((w, e)),
            Err((_, e)) => return Err(e),
        }
    }
    let agree = done.iter().filter(|r| r.pass).count();
    let vacuous = done.is_empty();

    if c.format == Format::Json {
        let rows = done
            .iter()
            .map(|r| {
                let weyl = r.weyl.as_ref().map_or(Value::Null, |w| {
                    object([
                        ("point", output::vec(w.point.coords())),
                        ("weylSum", output::rat(&w.weyl_sum)),
                        ("closedForm", output::rat(&w.closed_form)),
                    ])
                });
                object([
                    ("lambda", output::vec(r.lambda.coords())),
                    ("nu", output::vec(r.nu.coords())),
                    ("dim", output::int(&r.dim)),
                    ("L", output::int(&r.l)),
                    ("q", output::int(&r.q)),
                    ("halfSq", output::rat(&r.half_sq)),
                    ("weyl", weyl),
                    ("pass", Value::Bool(r.pass)),
                ])
            })
            .collect();
        let skipped_json = skipped.iter().map(|(w, _)| output::vec(w.coords())).collect();
        let doc = object([
            ("command", Value::from("oracle")),
            ("group", Value::from(g.name.clone())),
            ("box", Value::from(box_bound.to_string())),
            ("agree", output::count(agree)),
            ("total", output::count(done.len())),
            ("vacuous", Value::Bool(vacuous)),
            ("skipped", Value::Array(skipped_json)),
            ("reports", Value::Array(rows)),
        ]);
        return Ok(output::render(&doc));
    }
    let mut out = String::new();
    for r in &done {
        let weyl = r.weyl.as_ref().map_or("weyl sum n/a".to_string(), |w| {
            format!("weyl sum {} at {} vs closed form {}", fmt_rat(&w.weyl_sum), w.point, fmt_rat(&w.closed_form))
        });
        writeln!(
            out,
            "{} ν={}: dim {}, L = {}, q = {}, ½Σm⟨μ,ν⟩² = {}, {weyl}: {}",
            r.lambda,
            r.nu,
            r.dim,
            r.l,
            r.q,
            fmt_rat(&r.half_sq),
            if r.pass { "agree" } else { "MISMATCH" }
        )
        .unwrap();
    }
    for (w, e) in &skipped {
        writeln!(out, "{w}: skipped ({e})").unwrap();
    }
    if vacuous {
        writeln!(out, "{}: no weights in box {box_bound}; vacuous pass", g.name).unwrap();
    } else {
        writeln!(out, "{}: {agree}/{} agree, {} skipped", g.name, done.len(), skipped.len()).unwrap();
    }
    Ok(out)
}

pub fn atlas(c: &Common, box_bound: u64, k: u32, plot: Option<&Path>) -> Result<String> {
    let g = Group::load(&c.group)?;
    let r = scan_periodicity(&g.rd, &g.fg, box_bound, k)?;
    if let Some(path) = plot {
        let mut csv = String::new();
        let dims: Vec<String> = (1..=g.rd.ambient_dim()).map(|i| format!("x{i}")).collect();
        writeln!(csv, "{},spinorial", dims.join(",")).unwrap();
        for (w, v) in &r.grid {
            let coords: Vec<String> = w.coords().iter().map(fmt_rat).collect();
            writeln!(csv, "{},{}", coords.join(","), u8::from(*v)).unwrap();
        }
        std::fs::write(path, csv).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    let cell = r.cell_density.as_ref().map_or(Value::Null, output::rat);

    if c.format == Format::Json {
        let violations = r
            .violations
            .iter()
            .map(|v| {
                object([
                    ("base", output::vec(v.base.coords())),
                    ("shift", output::vec(v.shift.coords())),
                    ("baseSpinorial", Value::Bool(v.base_spinorial)),
                ])
            })
            .collect();
        let doc = object([
            ("command", Value::from("atlas")),
            ("group", Value::from(g.name.clone())),
            ("k", Value::from(k.to_string())),
            ("box", Value::from(box_bound.to_string())),
            ("weights", output::count(r.grid.len())),
            ("checkedPairs", output::count(r.checked_pairs)),
            ("vacuous", Value::Bool(r.vacuous())),
            ("violations", Value::Array(violations)),
            ("minimalK", Value::from(r.minimal_k.to_string())),
            ("density", output::rat(&r.density)),
            ("cellDensity", cell),
        ]);
        return Ok(output::render(&doc));
    }
    let mut out = String::new();
    writeln!(out, "{} box {box_bound}, k = {k}: {} weights, {} pairs checked", g.name, r.grid.len(), r.checked_pairs)
        .unwrap();
    if r.vacuous() {
        writeln!(out, "no pair fits in the box; vacuous pass").unwrap();
    }
    writeln!(out, "violations: {}", r.violations.len()).unwrap();
    for v in r.violations.iter().take(20) {
        writeln!(out, "  {} vs {} + 2^{k}·{}", v.base, v.base, v.shift).unwrap();
    }
    if r.violations.len() > 20 {
        writeln!(out, "  … {} more", r.violations.len() - 20).unwrap();
    }
    writeln!(out, "minimal k in box: {}", r.minimal_k).unwrap();
    writeln!(out, "spinorial density: {} (box), {} (cell [0,2^{k}))", fmt_rat(&r.density), r.cell_density.as_ref().map_or("-".into(), fmt_rat))
        .unwrap();
    Ok(out)
}

pub fn summary(c: &Common, box_bound: u64) -> Result<String> {
    let g = Group::load(&c.group)?;
    let spec = g.spec.ok_or_else(|| Error::InvalidParameters("summary needs a catalog group".into()))?;
    let expected = summary_check(&spec);
    let (pass, detail, found): (bool, String, Vec<Weight>) = if expected {
        let ws = orthogonal_weights_in_box(&g.rd, box_bound);
        let bad: Vec<Weight> = ws
            .par_iter()
            .map(|w| Ok((w, is_spinorial(&g.rd, &g.fg, &OrthRep::irreducible(&g.rd, w.clone())?)?.spinorial)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, s)| !s)
            .map(|(w, _)| w.clone())
            .collect();
        let detail = format!("{} orthogonal weights in box {box_bound}, {} aspinorial", ws.len(), bad.len());
        (bad.is_empty(), detail, bad)
    } else {
        let (w, kind) = known_aspinorial_witness(&spec)?.ok_or_else(|| Error::InvalidParameters("no witness".into()))?;
        let v = is_spinorial(&g.rd, &g.fg, &kind.rep(&g.rd, w.clone())?)?;
        let shown = if kind == SummandKind::Hyperbolic { format!("S{w}") } else { w.to_string() };
        let detail = format!("witness {shown} is {}", if v.spinorial { "spinorial" } else { "aspinorial" });
        (!v.spinorial, detail, vec![w])
    };

    if c.format == Format::Json {
        let doc = object([
            ("command", Value::from("summary")),
            ("group", Value::from(g.name.clone())),
            ("expectedAllSpinorial", Value::Bool(expected)),
            ("pass", Value::Bool(pass)),
            ("detail", Value::from(detail)),
            ("weights", Value::Array(found.iter().map(|w| output::vec(w.coords())).collect())),
        ]);
        return Ok(output::render(&doc));
    }
    let claim = if expected { "every orthogonal representation spinorial" } else { "some orthogonal representation aspinorial" };
    Ok(format!("{}: expected {claim}; {detail}: {}\n", g.name, if pass { "PASS" } else { "FAIL" }))
}
