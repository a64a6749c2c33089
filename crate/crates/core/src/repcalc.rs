//! Numerics of a single irreducible representation: dimension, Casimir
//! eigenvalue, orthogonality, weight multiplicities and the weight sums built
//! from them.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{common_denominator, is_integral, rat, Rat};
use crate::error::{Error, Result};
use crate::rootdata::{dominant_labels, Cocharacter, RootDatum, Weight};

pub const DEFAULT_GUARD: u64 = 1_000_000;

/// Freudenthal dimension guard: `SPINOR_GUARD` if set, else 10⁶.
pub fn guard_from_env() -> u64 {
    std::env::var("SPINOR_GUARD")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_GUARD)
}

/// Dynkin labels of a dominant weight, or `NotDominant`.
pub fn dominant_int_labels(rd: &RootDatum, lambda: &Weight) -> Result<Vec<i64>> {
    match rd.int_labels(lambda) {
        Some(l) if l.iter().all(|&x| x >= 0) => Ok(l),
        _ => Err(Error::NotDominant(lambda.to_string())),
    }
}

/// Weyl dimension formula `∏_{α>0} ⟨λ+δ, α∨⟩ / ⟨δ, α∨⟩`.
pub fn weyl_dim(rd: &RootDatum, lambda: &Weight) -> Result<BigInt> {
    let a = dominant_int_labels(rd, lambda)?;
    Ok(weyl_dim_labels(rd, &a))
}

pub(crate) fn weyl_dim_labels(rd: &RootDatum, a: &[i64]) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for p in rd.positive_root_data() {
        let (mut x, mut y) = (0i64, 0i64);
        for (j, &g) in p.coroot_coeffs.iter().enumerate() {
            x += g * (a[j] + 1);
            y += g;
        }
        num *= x;
        den *= y;
    }
    num / den
}

/// `χ_{λ^i}(C^i) = (λ^i, λ^i + 2δ^i)` on one simple factor.
pub fn casimir_value(rd: &RootDatum, lambda: &Weight, factor: usize) -> Result<Rat> {
    let a = dominant_int_labels(rd, lambda)?;
    if factor >= rd.factors().len() {
        return Err(Error::NotSimple(format!("no simple factor with index {factor}")));
    }
    Ok(casimir_labels(rd, &a, factor))
}

pub(crate) fn casimir_labels(rd: &RootDatum, a: &[i64], factor: usize) -> Rat {
    let la: Vec<Rat> = a.iter().map(|&x| rat(x)).collect();
    let shifted: Vec<Rat> = a.iter().map(|&x| rat(x + 2)).collect();
    rd.label_inner_q(&la, &shifted, Some(factor))
}

/// Sum of the Casimir eigenvalues over all simple factors.
pub fn casimir_total(rd: &RootDatum, lambda: &Weight) -> Result<Rat> {
    let a = dominant_int_labels(rd, lambda)?;
    Ok((0..rd.factors().len()).map(|f| casimir_labels(rd, &a, f)).sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepClassification {
    pub self_dual: bool,
    pub orthogonal: bool,
    /// Parity of `⟨λ, 2δ∨⟩` (true when even).
    pub two_delta_even: bool,
}

/// `⟨λ, 2δ∨⟩ = Σ_{α>0} ⟨λ, α∨⟩`.
pub fn pairing_two_delta_check(rd: &RootDatum, lambda: &Weight) -> Rat {
    rd.positive_root_data()
        .iter()
        .map(|p| rd.pair(lambda, &p.coroot))
        .sum()
}

pub fn classify(rd: &RootDatum, lambda: &Weight) -> Result<RepClassification> {
    dominant_int_labels(rd, lambda)?;
    let dual = rd.dominant_conjugate(&lambda.neg()).weight;
    let self_dual = &dual == lambda;
    let t = pairing_two_delta_check(rd, lambda);
    let two_delta_even = is_integral(&t) && t.to_integer().is_even();
    Ok(RepClassification { self_dual, orthogonal: self_dual && two_delta_even, two_delta_even })
}

/// Dynkin index `2ȟ · dim V · χ_λ(C) / dim g` of an irreducible representation of a simple `g`.
pub fn dynkin_index(rd: &RootDatum, lambda: &Weight) -> Result<Rat> {
    if !rd.is_simple() {
        return Err(Error::NotSimple(rd.lie_types().iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")));
    }
    let h = rd.dual_coxeter_number(0)?;
    let dim = weyl_dim(rd, lambda)?;
    let chi = casimir_value(rd, lambda, 0)?;
    Ok(rat(2 * h) * Rat::from_integer(dim) * chi / rat(rd.dim_g() as i64))
}

/// Orthogonal Dynkin index `dyn/2`, defined when `so(V)` is simple.
pub fn dynkin_index_orthogonal(rd: &RootDatum, lambda: &Weight) -> Result<Rat> {
    let d = dynkin_index(rd, lambda)?;
    if !classify(rd, lambda)?.orthogonal {
        return Err(Error::NotOrthogonal(lambda.to_string()));
    }
    let dim = weyl_dim(rd, lambda)?;
    if dim <= BigInt::from(4) && dim != BigInt::from(3) {
        return Err(Error::OrthogonalNotSimple(dim.to_string()));
    }
    Ok(d / rat(2))
}

/// A dominant weight of `V_λ` with its multiplicity and Weyl orbit size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantWeight {
    pub labels: Vec<i64>,
    /// Coordinates of `λ − μ` in the simple roots.
    pub depth: Vec<i64>,
    pub multiplicity: u64,
    pub orbit_size: u64,
}

/// All weight multiplicities of `V_λ`, stored as dominant representatives
/// together with their expanded orbits.
#[derive(Clone, Debug)]
pub struct WeightMultiplicityTable {
    highest: Weight,
    rank: usize,
    dominant: Vec<DominantWeight>,
    /// Flattened `λ − μ` root coordinates for every weight.
    coeffs: Vec<i64>,
    mults: Vec<u64>,
}

/// Sums of `⟨μ, ν⟩` over the weights of a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingSums {
    /// `L_φ(ν) = Σ_{⟨μ,ν⟩>0} m(μ)⟨μ,ν⟩`.
    pub l: Rat,
    /// `s_φ(ν) = Σ m(μ)⟨μ,ν⟩`.
    pub s: Rat,
    /// `Σ m(μ)⟨μ,ν⟩²`.
    pub sq: Rat,
}

impl PairingSums {
    pub fn zero() -> Self {
        PairingSums { l: Rat::zero(), s: Rat::zero(), sq: Rat::zero() }
    }

    pub fn add(&self, other: &PairingSums) -> PairingSums {
        PairingSums { l: &self.l + &other.l, s: &self.s + &other.s, sq: &self.sq + &other.sq }
    }

    /// `½ Σ m⟨μ,ν⟩²`, which is `q_φ(ν)` whenever `φ` is self-dual.
    pub fn half_sq(&self) -> Rat {
        &self.sq / rat(2)
    }
}

impl WeightMultiplicityTable {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn dominant(&self) -> &[DominantWeight] {
        &self.dominant
    }

    /// Number of distinct weights.
    pub fn num_weights(&self) -> usize {
        self.mults.len()
    }

    pub fn dim(&self) -> u64 {
        self.mults.iter().sum()
    }

    /// Every weight with its multiplicity, in ambient coordinates.
    pub fn weights(&self, rd: &RootDatum) -> Vec<(Weight, u64)> {
        let roots = rd.simple_roots();
        self.mults
            .iter()
            .enumerate()
            .map(|(k, &m)| {
                let c = &self.coeffs[k * self.rank..(k + 1) * self.rank];
                let mut w = self.highest.clone();
                for (i, &ci) in c.iter().enumerate() {
                    if ci != 0 {
                        w = w.minus(&roots[i].scaled(&rat(ci)));
                    }
                }
                (w, m)
            })
            .collect()
    }

    /// Multiplicity of the weight with the given Dynkin labels (0 if absent).
    pub fn multiplicity(&self, rd: &RootDatum, labels: &[i64]) -> u64 {
        let dom = rd.dominant_labels(labels);
        self.dominant
            .iter()
            .find(|d| d.labels == dom)
            .map_or(0, |d| d.multiplicity)
    }

    /// `⟨μ, ν⟩` with multiplicity for every weight μ.
    pub fn pairing_values(&self, rd: &RootDatum, nu: &Cocharacter) -> Vec<(Rat, u64)> {
        let top = rd.pair(&self.highest, nu);
        let b = rd.simple_pairings(nu);
        self.mults
            .iter()
            .enumerate()
            .map(|(k, &m)| {
                let c = &self.coeffs[k * self.rank..(k + 1) * self.rank];
                let p = c.iter().zip(&b).fold(top.clone(), |acc, (&ci, bi)| acc - rat(ci) * bi);
                (p, m)
            })
            .collect()
    }

    /// `L`, `s` and `Σ m⟨μ,ν⟩²` for one cocharacter (or any element of `t`).
    pub fn pairing_sums(&self, rd: &RootDatum, nu: &Cocharacter) -> PairingSums {
        let top = rd.pair(&self.highest, nu);
        let b = rd.simple_pairings(nu);
        let den = common_denominator(b.iter().chain(std::iter::once(&top)));
        let scale = Rat::from_integer(den.clone());
        let to_int = |x: &Rat| (x * &scale).to_integer();
        let top_i = to_int(&top);
        let b_i: Vec<BigInt> = b.iter().map(to_int).collect();

        let small = top_i.to_i128().is_some() && b_i.iter().all(|x| x.to_i64().is_some_and(|v| v.abs() < 1 << 40));
        let (mut l, mut s, mut sq) = (BigInt::zero(), BigInt::zero(), BigInt::zero());
        if small {
            let top = top_i.to_i128().unwrap();
            let b: Vec<i128> = b_i.iter().map(|x| x.to_i128().unwrap()).collect();
            let (mut li, mut si, mut qi) = (0i128, 0i128, BigInt::zero());
            for (k, &m) in self.mults.iter().enumerate() {
                let c = &self.coeffs[k * self.rank..(k + 1) * self.rank];
                let p = top - c.iter().zip(&b).map(|(&ci, bi)| ci as i128 * bi).sum::<i128>();
                let m = m as i128;
                if p > 0 {
                    li += m * p;
                }
                si += m * p;
                qi += BigInt::from(m * p) * BigInt::from(p);
            }
            l = li.into();
            s = si.into();
            sq = qi;
        } else {
            for (k, &m) in self.mults.iter().enumerate() {
                let c = &self.coeffs[k * self.rank..(k + 1) * self.rank];
                let mut p = top_i.clone();
                for (ci, bi) in c.iter().zip(&b_i) {
                    p -= bi * ci;
                }
                let mp = &p * BigInt::from(m);
                if p > BigInt::zero() {
                    l += &mp;
                }
                sq += &mp * &p;
                s += mp;
            }
        }
        let d = Rat::from_integer(den.clone());
        PairingSums {
            l: Rat::from_integer(l) / &d,
            s: Rat::from_integer(s) / &d,
            sq: Rat::from_integer(sq) / (&d * &d),
        }
    }
}

/// Weyl orbit of a dominant weight given by labels: each element as
/// `(labels, root coordinates of start − element)`.
pub(crate) fn orbit(cartan: &[Vec<i64>], start: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let r = start.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back((start.to_vec(), vec![0i64; r]));
    while let Some((lab, c)) = queue.pop_front() {
        for i in 0..r {
            let x = lab[i];
            if x <= 0 {
                continue;
            }
            let nl: Vec<i64> = (0..r).map(|j| lab[j] - x * cartan[i][j]).collect();
            if seen.insert(nl.clone()) {
                let mut nc = c.clone();
                nc[i] += x;
                queue.push_back((nl, nc));
            }
        }
        out.push((lab, c));
    }
    out
}

/// Freudenthal's recursion over the dominant weights of `V_λ`.
pub fn freudenthal_multiplicities(rd: &RootDatum, lambda: &Weight, guard: u64) -> Result<WeightMultiplicityTable> {
    let a = dominant_int_labels(rd, lambda)?;
    let dim = weyl_dim_labels(rd, &a);
    if dim > BigInt::from(guard) {
        return Err(Error::GuardExceeded { dim: dim.to_string(), guard });
    }
    let r = a.len();
    let cartan = rd.cartan();
    let pos = rd.positive_root_data();

    // dominant weights μ ≤ λ: close under subtracting positive roots within the chamber
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut dom: Vec<(Vec<i64>, Vec<i64>)> = vec![(a.clone(), vec![0; r])];
    index.insert(a.clone(), 0);
    let mut k = 0;
    while k < dom.len() {
        let (lab, depth) = dom[k].clone();
        for p in pos {
            let nl: Vec<i64> = lab.iter().zip(&p.labels).map(|(x, y)| x - y).collect();
            if nl.iter().any(|&x| x < 0) || index.contains_key(&nl) {
                continue;
            }
            let nd: Vec<i64> = depth.iter().zip(&p.root_coeffs).map(|(x, y)| x + y).collect();
            index.insert(nl.clone(), dom.len());
            dom.push((nl, nd));
        }
        k += 1;
    }
    let mut order: Vec<usize> = (0..dom.len()).collect();
    order.sort_by_key(|&i| (dom[i].1.iter().sum::<i64>(), dom[i].0.clone()));

    // inverse Killing form in labels, scaled to integers
    let form: Vec<Vec<Rat>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut ei = vec![Rat::zero(); r];
                    let mut ej = vec![Rat::zero(); r];
                    ei[i] = Rat::one();
                    ej[j] = Rat::one();
                    rd.label_inner_q(&ei, &ej, None)
                })
                .collect()
        })
        .collect();
    let fden = common_denominator(form.iter().flatten());
    let fscale = Rat::from_integer(fden);
    let fi: Vec<Vec<i128>> = form
        .iter()
        .map(|row| row.iter().map(|x| (x * &fscale).to_integer().to_i128().unwrap()).collect())
        .collect();
    let inner = |x: &[i64], y: &[i64]| -> i128 {
        let mut acc = 0i128;
        for i in 0..r {
            if x[i] == 0 {
                continue;
            }
            for j in 0..r {
                acc += x[i] as i128 * fi[i][j] * y[j] as i128;
            }
        }
        acc
    };
    let shift = |x: &[i64]| -> Vec<i64> { x.iter().map(|v| v + 1).collect() };
    let top = {
        let s = shift(&a);
        inner(&s, &s)
    };

    let mut mult = vec![0u64; dom.len()];
    mult[0] = 1;
    for &i in order.iter().skip(1) {
        let mu = &dom[i].0;
        let mut num: i128 = 0;
        for p in pos {
            let mut kk = 1i64;
            loop {
                let lab: Vec<i64> = mu.iter().zip(&p.labels).map(|(x, y)| x + kk * y).collect();
                let d = dominant_labels(cartan, &lab);
                let Some(&j) = index.get(&d) else { break };
                num += mult[j] as i128 * inner(&lab, &p.labels);
                kk += 1;
            }
        }
        let s = shift(mu);
        let den = top - inner(&s, &s);
        let m = 2 * num / den;
        debug_assert_eq!(2 * num % den, 0, "Freudenthal recursion must be exact");
        mult[i] = m as u64;
    }

    let mut dominant = Vec::with_capacity(dom.len());
    let mut coeffs = Vec::new();
    let mut mults = Vec::new();
    for &i in &order {
        let (lab, depth) = &dom[i];
        let orb = orbit(cartan, lab);
        for (_, c) in &orb {
            coeffs.extend(c.iter().zip(depth).map(|(x, y)| x + y));
            mults.push(mult[i]);
        }
        dominant.push(DominantWeight {
            labels: lab.clone(),
            depth: depth.clone(),
            multiplicity: mult[i],
            orbit_size: orb.len() as u64,
        });
    }
    Ok(WeightMultiplicityTable { highest: lambda.clone(), rank: r, dominant, coeffs, mults })
}

fn integral(x: Rat, what: &str) -> Result<BigInt> {
    if !is_integral(&x) {
        return Err(Error::Integrality(format!("{what} = {x}")));
    }
    Ok(x.to_integer())
}

/// `L_φ(ν)` for the sum of the given representations.
pub fn l_phi(rd: &RootDatum, tables: &[&WeightMultiplicityTable], nu: &Cocharacter) -> Result<BigInt> {
    let l: Rat = tables.iter().map(|t| t.pairing_sums(rd, nu).l).sum();
    integral(l, "L")
}

/// `s_φ(ν) = Σ m(μ)⟨μ,ν⟩`, the exponent of `det φ(ν(t))`.
pub fn s_phi(rd: &RootDatum, tables: &[&WeightMultiplicityTable], nu: &Cocharacter) -> Result<BigInt> {
    let s: Rat = tables.iter().map(|t| t.pairing_sums(rd, nu).s).sum();
    integral(s, "s")
}
