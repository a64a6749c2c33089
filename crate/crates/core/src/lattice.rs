//! Integer lattices inside a rational ambient space: Hermite basis, membership,
//! and Smith normal form for quotient computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{common_denominator, dot, is_integral, solve_in_span, Rat};

/// A full-rank sublattice of a rational subspace, stored by a ℤ-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<Rat>>,
}

impl Lattice {
    /// Lattice spanned over ℤ by `gens` (vectors of length `dim`).
    pub fn from_generators(gens: &[Vec<Rat>], dim: usize) -> Self {
        let d = common_denominator(gens.iter().flatten());
        let dr = Rat::from_integer(d.clone());
        let rows: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| g.iter().map(|x| (x * &dr).to_integer()).collect())
            .collect();
        let h = hermite_rows(rows, dim);
        let basis = h
            .into_iter()
            .map(|r| r.into_iter().map(|x| Rat::new(x, d.clone())).collect())
            .collect();
        Lattice { dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Integer coordinates of `v` in the stored basis, if `v` is a lattice point.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<BigInt>> {
        let c = solve_in_span(&self.basis, v)?;
        c.iter()
            .all(is_integral)
            .then(|| c.into_iter().map(|x| x.to_integer()).collect())
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Whether `w` pairs integrally with every lattice vector.
    pub fn in_dual(&self, w: &[Rat]) -> bool {
        self.basis.iter().all(|b| is_integral(&dot(w, b)))
    }
}

/// Row Hermite normal form of an integer matrix; returns the nonzero rows.
pub fn hermite_rows(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut start = 0;
    for c in 0..cols {
        loop {
            // pick the row with smallest nonzero |entry| in column c
            let pick = (start..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(p) = pick else { break };
            rows.swap(start, p);
            let mut done = true;
            for i in start + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[start][c]);
                let pivot = rows[start].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                if rows[start][c].is_negative() {
                    for x in rows[start].iter_mut() {
                        *x = -x.clone();
                    }
                }
                start += 1;
                break;
            }
        }
        if start == rows.len() {
            break;
        }
    }
    rows.truncate(start);
    // reduce entries above pivots
    let pivots: Vec<usize> = rows
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    for (k, &c) in pivots.iter().enumerate() {
        for i in 0..k {
            let q = rows[i][c].div_floor(&rows[k][c]);
            if !q.is_zero() {
                let pivot = rows[k].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
            }
        }
    }
    out.extend(rows);
    out
}

/// Smith normal form `U * m * V = diag(d)`.
///
/// Returns the diagonal (length `min(rows, cols)`, trailing zeros for rank
/// deficiency) together with `V` and `V^{-1}`; `U` is not needed by callers.
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub v: Vec<Vec<BigInt>>,
    pub v_inv: Vec<Vec<BigInt>>,
}

pub fn smith_normal_form(m: &[Vec<BigInt>], cols: usize) -> Smith {
    let rows = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let ident = |n: usize| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect()
    };
    let mut v = ident(cols);
    let mut v_inv = ident(cols);

    // column operations, mirrored on V and V^{-1}
    let swap_cols = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, vi: &mut Vec<Vec<BigInt>>, x: usize, y: usize| {
        if x == y {
            return;
        }
        for r in a.iter_mut() {
            r.swap(x, y);
        }
        for r in v.iter_mut() {
            r.swap(x, y);
        }
        vi.swap(x, y);
    };
    // col_y -= q * col_x
    let sub_col = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, vi: &mut Vec<Vec<BigInt>>, x: usize, y: usize, q: &BigInt| {
        for r in a.iter_mut() {
            let t = &r[x] * q;
            r[y] -= t;
        }
        for r in v.iter_mut() {
            let t = &r[x] * q;
            r[y] -= t;
        }
        let row_y = vi[y].clone();
        for (e, f) in vi[x].iter_mut().zip(&row_y) {
            *e += q * f;
        }
    };

    let n = rows.min(cols);
    let mut diagonal = Vec::with_capacity(n);
    for t in 0..n {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            diagonal.extend(std::iter::repeat(BigInt::zero()).take(n - t));
            break;
        };
        a.swap(t, bi);
        swap_cols(&mut a, &mut v, &mut v_inv, t, bj);

        loop {
            let mut changed = false;
            // clear column t
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let pivot = a[t].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            // clear row t
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                sub_col(&mut a, &mut v, &mut v_inv, t, j, &q);
                if !a[t][j].is_zero() {
                    swap_cols(&mut a, &mut v, &mut v_inv, t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let row_i = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&row_i) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for r in a.iter_mut() {
                r[t] = -r[t].clone();
            }
            for r in v.iter_mut() {
                r[t] = -r[t].clone();
            }
            for e in v_inv[t].iter_mut() {
                *e = -e.clone();
            }
        }
        diagonal.push(a[t][t].clone());
    }
    Smith { diagonal, v, v_inv }
}
