//! The spinoriality decision: closed-form `q` values, verdicts, the
//! weight-sum and Weyl-sum oracles, descent to central quotients, and the
//! periodicity scan.

mod oracle;
mod periodicity;

pub use oracle::{
    descent_check, descent_check_sl, is_regular, l_oracle_verdict, oracle_compare, oracle_points, q_via_weyl_sum,
    regular_point, OracleReport, WeylCheck, DEFAULT_WEYL_BOUND,
};
pub use periodicity::{orthogonal_weights_by_labels, orthogonal_weights_in_box, scan_periodicity, PeriodicityReport, Violation};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{is_integral, rat, Rat};
use crate::error::{Error, Result};
use crate::fundgroup::FundGroupData;
use crate::repcalc::{casimir_labels, classify, dominant_int_labels, weyl_dim_labels};
use crate::rootdata::{Cocharacter, RootDatum, Weight};

/// An orthogonal representation in normal form: irreducible orthogonal
/// summands plus hyperbolic blocks `S(σ_γ) = σ_γ ⊕ σ_γ∨`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrthRep {
    irreducible: Vec<Weight>,
    hyperbolic: Vec<Weight>,
}

impl OrthRep {
    pub fn new(rd: &RootDatum, irreducible: Vec<Weight>, hyperbolic: Vec<Weight>) -> Result<Self> {
        for w in irreducible.iter().chain(&hyperbolic) {
            if !rd.in_character_lattice(w) {
                return Err(Error::WeightNotInLattice(w.to_string()));
            }
            dominant_int_labels(rd, w)?;
        }
        for w in &irreducible {
            if rd.center_basis().iter().any(|z| !crate::arith::dot(w.coords(), z).is_zero()) {
                return Err(Error::CentralCharacter(w.to_string()));
            }
            if !classify(rd, w)?.orthogonal {
                return Err(Error::NotOrthogonal(w.to_string()));
            }
        }
        Ok(OrthRep { irreducible, hyperbolic })
    }

    pub fn irreducible(rd: &RootDatum, lambda: Weight) -> Result<Self> {
        Self::new(rd, vec![lambda], Vec::new())
    }

    pub fn hyperbolic(rd: &RootDatum, gamma: Weight) -> Result<Self> {
        Self::new(rd, Vec::new(), vec![gamma])
    }

    /// The adjoint representation (trivial central summands omitted).
    pub fn adjoint(rd: &RootDatum) -> Self {
        OrthRep {
            irreducible: (0..rd.factors().len()).map(|f| rd.highest_root(f)).collect(),
            hyperbolic: Vec::new(),
        }
    }

    pub fn irreducible_summands(&self) -> &[Weight] {
        &self.irreducible
    }

    pub fn hyperbolic_summands(&self) -> &[Weight] {
        &self.hyperbolic
    }

    pub fn is_empty(&self) -> bool {
        self.irreducible.is_empty() && self.hyperbolic.is_empty()
    }

    pub fn sum(&self, other: &OrthRep) -> OrthRep {
        let mut out = self.clone();
        out.irreducible.extend(other.irreducible.iter().cloned());
        out.hyperbolic.extend(other.hyperbolic.iter().cloned());
        out
    }

    pub fn dim(&self, rd: &RootDatum) -> BigInt {
        let irr: BigInt = self.irreducible.iter().map(|w| dim_of(rd, w)).sum();
        let hyp: BigInt = self.hyperbolic.iter().map(|w| dim_of(rd, w)).sum();
        irr + hyp * 2
    }
}

fn dim_of(rd: &RootDatum, w: &Weight) -> BigInt {
    weyl_dim_labels(rd, &rd.int_labels(w).expect("validated weight"))
}

/// How a highest weight enters an orthogonal representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SummandKind {
    /// `φ_λ` itself, for orthogonal `λ`.
    Orthogonal,
    /// `S(σ_γ) = σ_γ ⊕ σ_γ∨`.
    Hyperbolic,
}

impl SummandKind {
    pub fn rep(self, rd: &RootDatum, w: Weight) -> Result<OrthRep> {
        match self {
            SummandKind::Orthogonal => OrthRep::irreducible(rd, w),
            SummandKind::Hyperbolic => OrthRep::hyperbolic(rd, w),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    LOracle,
    WeylSumOracle,
    DescentMod2d,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::LOracle => "L-oracle",
            Method::WeylSumOracle => "weyl-sum-oracle",
            Method::DescentMod2d => "descent-mod-2d",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub spinorial: bool,
    /// The integer whose parity decides the question, for each generator of π₁.
    pub certificate: Vec<(Cocharacter, BigInt)>,
    pub method: Method,
}

impl Verdict {
    fn from_certificate(certificate: Vec<(Cocharacter, BigInt)>, method: Method) -> Self {
        let spinorial = certificate.iter().all(|(_, q)| q.is_even());
        Verdict { spinorial, certificate, method }
    }
}

fn closed_form(rd: &RootDatum, a: &[i64], lambda: &Weight, nu: &Cocharacter) -> Rat {
    let dim = Rat::from_integer(weyl_dim_labels(rd, a));
    let b = rd.simple_pairings(nu);
    let mut acc = Rat::zero();
    for f in 0..rd.factors().len() {
        let norm = rd.norm_sq_from_pairings(&b, Some(f));
        if norm.is_zero() {
            continue;
        }
        acc += norm * casimir_labels(rd, a, f) / rat(rd.factor_dim(f) as i64);
    }
    let z = rd.pair(lambda, &rd.center_component(nu));
    dim * (acc + &z * &z) / rat(2)
}

/// `q_λ(ν) = ½ Σ_μ m_λ(μ)⟨μ,ν⟩²` in closed form:
/// `½ dim V_λ (Σ_i |ν^i|² χ_{λ^i}(C^i)/dim g^i + ⟨λ,ν^z⟩²)`.
///
/// For orthogonal λ and lattice ν the value must be an integer; anything
/// else is reported as an integrality error.
pub fn q_irreducible(rd: &RootDatum, lambda: &Weight, nu: &Cocharacter) -> Result<Rat> {
    let a = dominant_int_labels(rd, lambda)?;
    let q = closed_form(rd, &a, lambda, nu);
    if !is_integral(&q) && rd.in_cochar_lattice(nu) && classify(rd, lambda)?.orthogonal {
        return Err(Error::Integrality(format!("q_{lambda}({nu}) = {q}")));
    }
    Ok(q)
}

/// The parity certificate
/// `Σ_k ⟨γ_k, ν^z⟩ dim V_{γ_k} + Σ_j q_{λ_j}(ν)` of an orthogonal representation.
pub fn q_rep(rd: &RootDatum, rep: &OrthRep, nu: &Cocharacter) -> Result<BigInt> {
    let nz = rd.center_component(nu);
    let mut total = Rat::zero();
    for g in &rep.hyperbolic {
        total += rd.pair(g, &nz) * Rat::from_integer(dim_of(rd, g));
    }
    for l in &rep.irreducible {
        let a = rd.int_labels(l).expect("validated weight");
        total += closed_form(rd, &a, l, nu);
    }
    if !is_integral(&total) {
        return Err(Error::Integrality(format!("q({nu}) = {total}")));
    }
    Ok(total.to_integer())
}

/// `q` of a tensor product from the dimensions and `q` values of its factors.
pub fn q_tensor(dim1: &BigInt, q1: &BigInt, dim2: &BigInt, q2: &BigInt) -> BigInt {
    dim1 * q2 + dim2 * q1
}

/// Spinorial iff the certificate is even at every generator of `π₁(G)`.
pub fn is_spinorial(rd: &RootDatum, fg: &FundGroupData, rep: &OrthRep) -> Result<Verdict> {
    let certificate = fg
        .generators
        .iter()
        .map(|nu| Ok((nu.clone(), q_rep(rd, rep, nu)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Verdict::from_certificate(certificate, Method::ClosedForm))
}

/// The adjoint representation is spinorial iff `δ ∈ X^*(T)`.
pub fn adjoint_spinorial(rd: &RootDatum) -> bool {
    rd.in_character_lattice(rd.delta())
}
