//! The algebraic fundamental group `π₁(G) = X_*(T)/Q(T)`.

use std::cmp::Reverse;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{abs_sum, axpy, rat, rational_gcd, Rat};
use crate::error::{Error, Result};
use crate::lattice::smith_normal_form;
use crate::rootdata::{Cocharacter, RootDatum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundGroupData {
    /// Invariant factors of `X_*/Q(T)` other than 1; a 0 stands for a free ℤ.
    pub invariant_factors: Vec<BigInt>,
    /// Cocharacters whose images generate `π₁(G)`.
    pub generators: Vec<Cocharacter>,
    /// `½ gcd(|ν_i|²)` over the generators, `None` when π₁ is trivial.
    pub p_value: Option<Rat>,
}

impl FundGroupData {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// `|π₁(G)|`, or `None` when it is infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.invariant_factors.iter().any(Zero::is_zero) {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }
}

fn invariant_factors_and_lifts(rd: &RootDatum) -> (Vec<BigInt>, Vec<Cocharacter>) {
    let basis = rd.lattice().basis();
    let k = basis.len();
    let m: Vec<Vec<BigInt>> = rd
        .simple_coroots()
        .iter()
        .map(|c| rd.lattice().coords(c.coords()).expect("coroots lie in X_*"))
        .collect();
    let smith = smith_normal_form(&m, k);
    let mut diag = smith.diagonal.clone();
    diag.resize(k, BigInt::zero());
    let mut factors = Vec::new();
    let mut lifts = Vec::new();
    for (j, d) in diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        let mut v = vec![Rat::zero(); rd.ambient_dim()];
        for (t, b) in basis.iter().enumerate() {
            let c = &smith.v_inv[j][t];
            if !c.is_zero() {
                v = axpy(&v, &Rat::from_integer(c.clone()), b);
            }
        }
        factors.push(d.clone());
        lifts.push(rd.tangent(v).expect("ambient dimension"));
    }
    (factors, lifts)
}

/// Shorten `ν` modulo the coroot lattice by greedy coordinate descent,
/// minimizing the ℓ¹ norm and then preferring the lexicographically largest.
fn reduce_mod_coroots(rd: &RootDatum, v: &Cocharacter) -> Cocharacter {
    let key = |x: &Cocharacter| (abs_sum(x.coords()), Reverse(x.coords().to_vec()));
    let mut best = v.clone();
    let mut best_key = key(&best);
    loop {
        let mut improved = false;
        for c in rd.simple_coroots() {
            for cand in [best.plus(c), best.minus(c)] {
                let k = key(&cand);
                if k < best_key {
                    best = cand;
                    best_key = k;
                    improved = true;
                }
            }
        }
        if !improved {
            return best;
        }
    }
}

/// `π₁` of the datum, with generators chosen canonically from the Smith form.
pub fn fundamental_group(rd: &RootDatum) -> FundGroupData {
    let (invariant_factors, lifts) = invariant_factors_and_lifts(rd);
    let generators: Vec<Cocharacter> = lifts.iter().map(|v| reduce_mod_coroots(rd, v)).collect();
    let p_value = p_value(rd, &generators).ok();
    FundGroupData { invariant_factors, generators, p_value }
}

/// `π₁` of `rd` re-targeted at the cocharacter lattice spanned by the
/// coroots and `cochar_gens`.
pub fn fundamental_group_of_lattice(rd: &RootDatum, cochar_gens: &[Cocharacter]) -> Result<(RootDatum, FundGroupData)> {
    let mut gens: Vec<Cocharacter> = rd.simple_coroots().to_vec();
    gens.extend(cochar_gens.iter().cloned());
    let rd = rd.with_cochar_lattice(&gens)?;
    let fg = fundamental_group(&rd);
    Ok((rd, fg))
}

/// `π₁` with a caller-chosen generating set, which must generate `X_*/Q(T)`.
pub fn with_generators(rd: &RootDatum, generators: Vec<Cocharacter>) -> Result<FundGroupData> {
    for g in &generators {
        if !rd.in_cochar_lattice(g) {
            return Err(Error::CocharNotInLattice(g.to_string()));
        }
    }
    let mut span: Vec<Cocharacter> = rd.simple_coroots().to_vec();
    span.extend(generators.iter().cloned());
    let sub = rd.with_cochar_lattice(&span)?;
    if !sub.lattice().contains_lattice(rd.lattice()) {
        return Err(Error::InvalidParameters("generators do not generate the fundamental group".into()));
    }
    let (invariant_factors, _) = invariant_factors_and_lifts(rd);
    let p_value = p_value(rd, &generators).ok();
    Ok(FundGroupData { invariant_factors, generators, p_value })
}

/// `p(ν̲) = ½ gcd(|ν₁|², …, |ν_r|²)`.
pub fn p_value(rd: &RootDatum, gens: &[Cocharacter]) -> Result<Rat> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let norms: Vec<Rat> = gens.iter().map(|g| rd.cochar_norm_sq(g)).collect();
    Ok(rational_gcd(&norms) / rat(2))
}

/// 2-adic valuation of a nonzero rational.
pub fn ord2(x: &Rat) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let v = |n: &BigInt| n.abs().trailing_zeros().and_then(|t| t.to_i64()).unwrap_or(0);
    Some(v(x.numer()) - v(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::rootdata::LieType;

    fn a(n: usize) -> RootDatum {
        RootDatum::build(&[LieType::parse(&format!("A{}", n - 1)).unwrap()], 0).unwrap()
    }

    #[test]
    fn simply_connected_is_trivial() {
        let fg = fundamental_group(&a(4));
        assert!(fg.is_trivial());
        assert!(fg.generators.is_empty());
        assert_eq!(fg.p_value, None);
        assert_eq!(fg.order(), Some(BigInt::one()));
    }

    #[test]
    fn sl_quotient_is_cyclic() {
        let rd = a(8);
        let mut v = vec![rat(0); 8];
        v[0] = rat(2);
        let nu = rd.tangent(v).unwrap();
        let (rd4, fg) = fundamental_group_of_lattice(&rd, &[nu.clone()]).unwrap();
        assert_eq!(fg.invariant_factors, vec![BigInt::from(4)]);
        assert_eq!(fg.generators.len(), 1);
        let fixed = with_generators(&rd4, vec![nu]).unwrap();
        assert_eq!(fixed.p_value, Some(rat(28)));
    }

    #[test]
    fn generators_must_generate() {
        let rd = a(4);
        let mut v = vec![rat(0); 4];
        v[0] = rat(1);
        let nu = rd.tangent(v).unwrap();
        let (pgl, _) = fundamental_group_of_lattice(&rd, &[nu.clone()]).unwrap();
        // 2ν only reaches the index-2 subgroup of ℤ/4
        assert!(with_generators(&pgl, vec![nu.scaled(&rat(2))]).is_err());
        assert!(with_generators(&pgl, vec![nu]).is_ok());
    }

    #[test]
    fn empty_generators_error() {
        assert_eq!(p_value(&a(2), &[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn two_adic_valuation() {
        assert_eq!(ord2(&rat(12)), Some(2));
        assert_eq!(ord2(&ratio(3, 8)), Some(-3));
        assert_eq!(ord2(&rat(0)), None);
    }
}
