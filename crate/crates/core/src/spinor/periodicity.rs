//! Empirical check of the 2-power periodicity of spinorial highest weights
//! inside a coordinate box.

use std::collections::HashMap;

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{abs_sum, rat, Rat};
use crate::error::Result;
use crate::fundgroup::FundGroupData;
use crate::repcalc::classify;
use crate::rootdata::{RootDatum, Weight};

use super::{is_spinorial, OrthRep};

/// `φ_{base}` and `φ_{base + 2^k·shift}` have different verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub base: Weight,
    pub shift: Weight,
    pub base_spinorial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub k: u32,
    pub box_bound: u64,
    /// Dominant orthogonal weights in the box with their verdicts.
    pub grid: Vec<(Weight, bool)>,
    /// Pairs `(λ₀, λ)` with `λ ≠ 0` and `λ₀ + 2^k λ` in the box.
    pub checked_pairs: usize,
    pub violations: Vec<Violation>,
    /// Smallest `k'` with no violations in the box.
    pub minimal_k: u32,
    /// Fraction of spinorial weights in the box.
    pub density: Rat,
    /// Fraction of spinorial weights with every coordinate in `[0, 2^k)`.
    pub cell_density: Option<Rat>,
}

impl PeriodicityReport {
    /// No pair was testable, so the absence of violations says nothing.
    pub fn vacuous(&self) -> bool {
        self.checked_pairs == 0
    }
}

/// Label tuples `a` with `a_i ≤ caps[i]` and `Σ_i c_i a_i ≤ bound` for every
/// `(c, bound)` constraint (all `c_i ≥ 0`).
fn bounded_labels(caps: &[i64], constraints: &[(Vec<i64>, i64)]) -> Vec<Vec<i64>> {
    fn go(i: usize, caps: &[i64], cons: &[(Vec<i64>, i64)], used: &mut [i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == caps.len() {
            out.push(cur.clone());
            return;
        }
        let mut x = 0;
        while x <= caps[i] && cons.iter().zip(used.iter()).all(|((c, b), u)| u + c[i] * x <= *b) {
            for ((c, _), u) in cons.iter().zip(used.iter_mut()) {
                *u += c[i] * x;
            }
            cur.push(x);
            go(i + 1, caps, cons, used, cur, out);
            cur.pop();
            for ((c, _), u) in cons.iter().zip(used.iter_mut()) {
                *u -= c[i] * x;
            }
            x += 1;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![0; constraints.len()];
    go(0, caps, constraints, &mut used, &mut Vec::new(), &mut out);
    out
}

/// Dominant orthogonal characters with every ambient coordinate in
/// `[-box, box]`, ordered by Dynkin labels.
pub fn orthogonal_weights_in_box(rd: &RootDatum, box_bound: u64) -> Vec<Weight> {
    let bound = rat(box_bound as i64);
    let cap = |c: &[Rat]| (abs_sum(c) * &bound).floor().to_integer().to_i64().unwrap_or(i64::MAX);
    let caps: Vec<i64> = rd.simple_coroots().iter().map(|c| cap(c.coords())).collect();
    // ⟨λ, β∨⟩ ≤ box·‖β∨‖₁ for the positive coroot of each factor with the
    // largest coefficients; this keeps the enumeration near the box size.
    let constraints: Vec<(Vec<i64>, i64)> = (0..rd.factors().len())
        .filter_map(|f| {
            rd.positive_root_data()
                .iter()
                .filter(|p| p.factor == f)
                .max_by_key(|p| p.coroot_coeffs.iter().sum::<i64>())
                .map(|p| (p.coroot_coeffs.clone(), cap(p.coroot.coords())))
        })
        .collect();
    bounded_labels(&caps, &constraints)
        .into_par_iter()
        .filter_map(|labels| {
            let w = rd.weight_from_labels(&labels);
            let inside = w.coords().iter().all(|x| x.abs() <= bound);
            (inside && rd.in_character_lattice(&w) && classify(rd, &w).ok()?.orthogonal).then_some(w)
        })
        .collect()
}

/// Dominant orthogonal characters with every Dynkin label at most `max_label`.
pub fn orthogonal_weights_by_labels(rd: &RootDatum, max_label: i64) -> Vec<Weight> {
    let caps = vec![max_label; rd.semisimple_rank()];
    bounded_labels(&caps, &[])
        .into_par_iter()
        .filter_map(|labels| {
            let w = rd.weight_from_labels(&labels);
            (rd.in_character_lattice(&w) && classify(rd, &w).ok()?.orthogonal).then_some(w)
        })
        .collect()
}

fn violations_at(
    labels: &[Vec<i64>],
    verdicts: &[bool],
    index: &HashMap<Vec<i64>, usize>,
    k: u32,
) -> (usize, Vec<(usize, usize)>) {
    let factor = 1i64 << k;
    let mut checked = 0;
    let mut bad = Vec::new();
    for (i, base) in labels.iter().enumerate() {
        for (j, shift) in labels.iter().enumerate() {
            if shift.iter().all(|&x| x == 0) {
                continue;
            }
            let target: Vec<i64> = base.iter().zip(shift).map(|(a, b)| a + factor * b).collect();
            if let Some(&t) = index.get(&target) {
                checked += 1;
                if verdicts[t] != verdicts[i] {
                    bad.push((i, j));
                }
            }
        }
    }
    (checked, bad)
}

/// Test "`φ_{λ₀}` spinorial ⟺ `φ_{λ₀+2^k λ}` spinorial" over all dominant
/// orthogonal `λ₀, λ` in the box.
pub fn scan_periodicity(rd: &RootDatum, fg: &FundGroupData, box_bound: u64, k: u32) -> Result<PeriodicityReport> {
    let weights = orthogonal_weights_in_box(rd, box_bound);
    let verdicts: Vec<bool> = weights
        .par_iter()
        .map(|w| Ok(is_spinorial(rd, fg, &OrthRep::irreducible(rd, w.clone())?)?.spinorial))
        .collect::<Result<Vec<_>>>()?;
    let labels: Vec<Vec<i64>> = weights.iter().map(|w| rd.int_labels(w).expect("dominant")).collect();
    let index: HashMap<Vec<i64>, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();

    let (checked_pairs, bad) = violations_at(&labels, &verdicts, &index, k);
    let violations = bad
        .into_iter()
        .map(|(i, j)| Violation { base: weights[i].clone(), shift: weights[j].clone(), base_spinorial: verdicts[i] })
        .collect();

    let mut minimal_k = 0;
    loop {
        let (checked, bad) = violations_at(&labels, &verdicts, &index, minimal_k);
        if bad.is_empty() || checked == 0 {
            break;
        }
        minimal_k += 1;
    }

    let total = weights.len();
    let spin = verdicts.iter().filter(|&&v| v).count();
    let density = if total == 0 { Rat::zero() } else { Rat::new((spin as i64).into(), (total as i64).into()) };
    let cell = rat(1i64 << k.min(62));
    let in_cell: Vec<bool> = weights
        .iter()
        .zip(&verdicts)
        .filter(|(w, _)| w.coords().iter().all(|x| !x.is_negative() && *x < cell))
        .map(|(_, &v)| v)
        .collect();
    let cell_density = (!in_cell.is_empty()).then(|| {
        let s = in_cell.iter().filter(|&&v| v).count() as i64;
        Rat::new(s.into(), (in_cell.len() as i64).into())
    });

    Ok(PeriodicityReport {
        k,
        box_bound,
        grid: weights.into_iter().zip(verdicts).collect(),
        checked_pairs,
        violations,
        minimal_k,
        density,
        cell_density,
    })
}
