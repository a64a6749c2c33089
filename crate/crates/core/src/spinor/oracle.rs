//! Independent routes to `q` and to spinoriality: weight sums over
//! Freudenthal tables, the alternating Weyl-group sum, and descent through a
//! central quotient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{common_denominator, factorial, is_integral, rat, Rat};
use crate::error::{Error, Result};
use crate::fundgroup::FundGroupData;
use crate::repcalc::{classify, dominant_int_labels, freudenthal_multiplicities, orbit, weyl_dim_labels};
use crate::rootdata::{Cocharacter, RootDatum, Weight};

use super::{q_irreducible, Method, OrthRep, Verdict};

pub const DEFAULT_WEYL_BOUND: u64 = 100_000;

/// `d_ν = ∏_{α>0} ⟨α, ν⟩ ≠ 0`.
pub fn is_regular(rd: &RootDatum, nu: &Cocharacter) -> bool {
    rd.positive_root_data().iter().all(|p| !rd.pair(&p.root, nu).is_zero())
}

/// `ν` itself when regular, else the first regular `ν + t·2ρ∨`, `t = 1, 2, …`.
pub fn regular_point(rd: &RootDatum, nu: &Cocharacter) -> Cocharacter {
    if is_regular(rd, nu) {
        return nu.clone();
    }
    let step = rd.two_rho_check();
    let mut t = 1i64;
    loop {
        let cand = nu.plus(&step.scaled(&rat(t)));
        if is_regular(rd, &cand) {
            return cand;
        }
        t += 1;
    }
}

/// `q_λ(ν) = Σ_w sgn(w)⟨w(λ+δ),ν⟩^{N+2} / ((N+2)! d_ν) − dim V_λ |ν|²/48`
/// for simple `g` and regular ν.
pub fn q_via_weyl_sum(rd: &RootDatum, lambda: &Weight, nu: &Cocharacter, weyl_bound: u64) -> Result<Rat> {
    if !rd.is_simple() {
        let types: Vec<String> = rd.lie_types().iter().map(|t| t.to_string()).collect();
        return Err(Error::NotSimple(format!("{} with central rank {}", types.join("x"), rd.central_rank())));
    }
    let a = dominant_int_labels(rd, lambda)?;
    let pos = rd.positive_root_data();
    let d_nu: Rat = pos.iter().map(|p| rd.pair(&p.root, nu)).product();
    if d_nu.is_zero() {
        return Err(Error::NotRegular(nu.to_string()));
    }
    let order = rd.weyl_order();
    if order > BigInt::from(weyl_bound) {
        return Err(Error::WeylGroupTooLarge { order: order.to_string(), bound: weyl_bound });
    }

    let n = pos.len();
    let start: Vec<i64> = a.iter().map(|x| x + 1).collect();
    let top = rd.pair(&lambda.plus(rd.delta()), nu);
    let b = rd.simple_pairings(nu);
    let den = common_denominator(b.iter().chain(std::iter::once(&top)));
    let scale = Rat::from_integer(den.clone());
    let top_i = (&top * &scale).to_integer();
    let b_i: Vec<BigInt> = b.iter().map(|x| (x * &scale).to_integer()).collect();

    let mut acc = BigInt::zero();
    for (labels, c) in orbit(rd.cartan(), &start) {
        // ℓ(w) = #{α > 0 : ⟨w(λ+δ), α∨⟩ < 0}
        let len = pos
            .iter()
            .filter(|p| p.coroot_coeffs.iter().zip(&labels).map(|(g, x)| g * x).sum::<i64>() < 0)
            .count();
        let mut p = top_i.clone();
        for (ci, bi) in c.iter().zip(&b_i) {
            p -= bi * ci;
        }
        let term = num_traits::pow(p, n + 2);
        if len % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let denom = Rat::from_integer(num_traits::pow(den, n + 2) * factorial(n as u64 + 2)) * d_nu;
    let dim = Rat::from_integer(weyl_dim_labels(rd, &a));
    Ok(Rat::from_integer(acc) / denom - dim * rd.cochar_norm_sq(nu) / rat(48))
}

/// Closed form and Weyl sum at a shared regular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylCheck {
    pub point: Cocharacter,
    pub weyl_sum: Rat,
    pub closed_form: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub lambda: Weight,
    pub nu: Cocharacter,
    pub dim: BigInt,
    /// `L_φ(ν)` from the Freudenthal table.
    pub l: BigInt,
    /// Closed-form `q_φ(ν)`.
    pub q: BigInt,
    /// `½ Σ m⟨μ,ν⟩²` from the Freudenthal table.
    pub half_sq: Rat,
    pub weyl: Option<WeylCheck>,
    pub pass: bool,
}

/// Cocharacters at which to compare oracles: the π₁ generators, or the
/// first simple coroot when π₁ is trivial.
pub fn oracle_points(rd: &RootDatum, fg: &FundGroupData) -> Vec<Cocharacter> {
    if !fg.generators.is_empty() {
        return fg.generators.clone();
    }
    rd.simple_coroots().iter().take(1).cloned().collect()
}

/// Compare `L mod 2`, the direct weight sum and the closed form (and the
/// Weyl sum when `g` is simple and `|W|` is within `weyl_bound`).
pub fn oracle_compare(
    rd: &RootDatum,
    lambda: &Weight,
    nu: &Cocharacter,
    guard: u64,
    weyl_bound: u64,
) -> Result<OracleReport> {
    if !rd.in_cochar_lattice(nu) {
        return Err(Error::CocharNotInLattice(nu.to_string()));
    }
    if !classify(rd, lambda)?.orthogonal {
        return Err(Error::NotOrthogonal(lambda.to_string()));
    }
    let table = freudenthal_multiplicities(rd, lambda, guard)?;
    let sums = table.pairing_sums(rd, nu);
    let q_rat = q_irreducible(rd, lambda, nu)?;
    let q = q_rat.to_integer();
    let l = sums.l.to_integer();
    let half_sq = sums.half_sq();

    let weyl = if rd.is_simple() && rd.weyl_order() <= BigInt::from(weyl_bound) {
        let point = regular_point(rd, nu);
        let weyl_sum = q_via_weyl_sum(rd, lambda, &point, weyl_bound)?;
        let closed_form = q_irreducible(rd, lambda, &point)?;
        Some(WeylCheck { point, weyl_sum, closed_form })
    } else {
        None
    };
    let pass = is_integral(&sums.l)
        && l.is_even() == q.is_even()
        && half_sq == q_rat
        && weyl.as_ref().map_or(true, |w| w.weyl_sum == w.closed_form);
    Ok(OracleReport {
        lambda: lambda.clone(),
        nu: nu.clone(),
        dim: BigInt::from(table.dim()),
        l,
        q,
        half_sq,
        weyl,
        pass,
    })
}

/// Verdict from the parity of `L_φ(ν)` at each generator, computed from
/// Freudenthal tables. A hyperbolic block contributes `Σ_μ m(μ)|⟨μ,ν⟩|`.
pub fn l_oracle_verdict(rd: &RootDatum, fg: &FundGroupData, rep: &OrthRep, guard: u64) -> Result<Verdict> {
    let irr = rep
        .irreducible_summands()
        .iter()
        .map(|w| freudenthal_multiplicities(rd, w, guard))
        .collect::<Result<Vec<_>>>()?;
    let hyp = rep
        .hyperbolic_summands()
        .iter()
        .map(|w| freudenthal_multiplicities(rd, w, guard))
        .collect::<Result<Vec<_>>>()?;
    let mut certificate = Vec::new();
    for nu in &fg.generators {
        let mut total = Rat::zero();
        for t in &irr {
            total += t.pairing_sums(rd, nu).l;
        }
        for t in &hyp {
            let s = t.pairing_sums(rd, nu);
            total += &s.l * rat(2) - &s.s;
        }
        if !is_integral(&total) {
            return Err(Error::Integrality(format!("L({nu}) = {total}")));
        }
        certificate.push((nu.clone(), total.to_integer()));
    }
    Ok(Verdict {
        spinorial: certificate.iter().all(|(_, l)| l.is_even()),
        certificate,
        method: Method::LOracle,
    })
}

fn check_even_modulus(d: i64) -> Result<()> {
    if d <= 0 || d % 2 != 0 {
        return Err(Error::InvalidParameters(format!("descent modulus must be a positive even integer, got {d}")));
    }
    Ok(())
}

/// Whether the irreducible `φ_λ` of a semisimple group descends through the
/// central subgroup generated by `ν(ζ_d)` to a spinorial representation:
/// `2d | L_φ(ν)`, with `L` computed exactly from the weight table.
pub fn descent_check(rd: &RootDatum, lambda: &Weight, nu: &Cocharacter, d: i64, guard: u64) -> Result<bool> {
    check_even_modulus(d)?;
    let table = freudenthal_multiplicities(rd, lambda, guard)?;
    let dq = rat(d);
    let mut l = Rat::zero();
    for (p, m) in table.pairing_values(rd, nu) {
        let r = &p / &dq;
        if !is_integral(&r) {
            return Err(Error::DoesNotDescend(format!("⟨μ,ν⟩ = {p} is not divisible by {d}")));
        }
        if p.is_positive() {
            l += p * rat(m as i64);
        }
    }
    let l = l.to_integer();
    Ok((l % BigInt::from(2 * d)).is_zero())
}

/// The same decision for `SL_n` in ε-coordinates with `ν₀ = (1,…,1,1−n)` and
/// `2d | n`, using `L ≡ ⟨λ,ν₀⟩ · #{μ : ⟨μ,ν₀⟩ > 0} mod n` instead of the table.
pub fn descent_check_sl(rd: &RootDatum, lambda: &Weight, d: i64) -> Result<bool> {
    check_even_modulus(d)?;
    let n = rd.ambient_dim() as i64;
    let is_sl = rd.null_dirs().len() == 1
        && rd.factors().len() == 1
        && rd.lie_types()[0].to_string() == format!("A{}", n - 1);
    if !is_sl || n % (2 * d) != 0 {
        return Err(Error::InvalidParameters(format!("expected SL_n with 2d | n (n = {n}, d = {d})")));
    }
    if !classify(rd, lambda)?.orthogonal {
        return Err(Error::NotOrthogonal(lambda.to_string()));
    }
    let mut v = vec![1i64; n as usize];
    v[n as usize - 1] = 1 - n;
    let nu0 = rd.tangent(v.iter().map(|&x| rat(x)).collect())?;
    let p = rd.pair(lambda, &nu0).to_integer();
    if !(&p % BigInt::from(d)).is_zero() {
        return Err(Error::DoesNotDescend(format!("⟨λ,ν₀⟩ = {p} is not divisible by {d}")));
    }
    let dim = weyl_dim_labels(rd, &dominant_int_labels(rd, lambda)?);
    if dim.is_odd() || (&p % BigInt::from(n)).is_zero() {
        return Ok(true);
    }
    let half: BigInt = dim / 2;
    let prod: BigInt = half * p;
    Ok((prod % BigInt::from(2 * d)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcalc::DEFAULT_GUARD;
    use crate::rootdata::LieType;

    fn sc(s: &str) -> RootDatum {
        RootDatum::build(&[LieType::parse(s).unwrap()], 0).unwrap()
    }

    #[test]
    fn weyl_sum_trivial_rep_vanishes() {
        let rd = sc("B2");
        let nu = regular_point(&rd, &rd.simple_coroots()[0]);
        let zero = rd.weight_from_labels(&[0, 0]);
        assert_eq!(q_via_weyl_sum(&rd, &zero, &nu, DEFAULT_WEYL_BOUND).unwrap(), rat(0));
    }

    #[test]
    fn weyl_sum_matches_closed_form_c2() {
        let rd = sc("C2");
        let w2 = rd.weight_from_labels(&[0, 1]);
        let nu = regular_point(&rd, &rd.simple_coroots()[0]);
        assert!(is_regular(&rd, &nu));
        assert_eq!(
            q_via_weyl_sum(&rd, &w2, &nu, DEFAULT_WEYL_BOUND).unwrap(),
            q_irreducible(&rd, &w2, &nu).unwrap()
        );
    }

    #[test]
    fn weyl_sum_errors() {
        let rd = sc("A2");
        let w = rd.weight_from_labels(&[1, 1]);
        let irregular = rd.simple_coroots()[0].clone().plus(&rd.simple_coroots()[1].scaled(&rat(2)));
        // ⟨α₁, α₁∨ + 2α₂∨⟩ = 0
        assert!(matches!(q_via_weyl_sum(&rd, &w, &irregular, DEFAULT_WEYL_BOUND), Err(Error::NotRegular(_))));
        let e8 = sc("E8");
        let nu = e8.two_rho_check();
        let theta = e8.highest_root(0);
        assert!(matches!(
            q_via_weyl_sum(&e8, &theta, &nu, DEFAULT_WEYL_BOUND),
            Err(Error::WeylGroupTooLarge { .. })
        ));
    }

    #[test]
    fn sl_adjoint_l_value() {
        for n in 2..=8usize {
            let rd = sc(&format!("A{}", n - 1));
            let mut v = vec![rat(1); n];
            v[n - 1] = rat(1 - n as i64);
            let nu0 = rd.tangent(v).unwrap();
            let t = freudenthal_multiplicities(&rd, &rd.highest_root(0), DEFAULT_GUARD).unwrap();
            assert_eq!(t.pairing_sums(&rd, &nu0).l, rat((n * (n - 1)) as i64));
        }
    }

    #[test]
    fn descent_routes_agree_on_sl8() {
        let rd = sc("A7");
        let nu0 = rd.tangent([1, 1, 1, 1, 1, 1, 1, -7].iter().map(|&x| rat(x)).collect()).unwrap();
        for labels in [[1, 0, 0, 0, 0, 0, 1], [0, 0, 0, 1, 0, 0, 0], [0, 1, 0, 0, 0, 1, 0], [2, 0, 0, 0, 0, 0, 2]] {
            let w = rd.weight_from_labels(&labels);
            for d in [2, 4] {
                let slow = descent_check(&rd, &w, &nu0, d, DEFAULT_GUARD);
                let fast = descent_check_sl(&rd, &w, d);
                match (slow, fast) {
                    (Ok(a), Ok(b)) => assert_eq!(a, b, "{labels:?} d={d}"),
                    (Err(Error::DoesNotDescend(_)), Err(Error::DoesNotDescend(_))) => {}
                    other => panic!("{labels:?} d={d}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn descent_rejects_odd_modulus() {
        let rd = sc("A3");
        let w = rd.highest_root(0);
        assert!(matches!(descent_check_sl(&rd, &w, 3), Err(Error::InvalidParameters(_))));
    }
}
