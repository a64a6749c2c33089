//! Named group families with their cocharacter lattices, canonical
//! generators of `π₁`, and the known answers to "is every orthogonal
//! representation spinorial?".

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::{binomial, factorial, rat, ratio, Rat};
use crate::error::{Error, Result};
use crate::fundgroup::{fundamental_group, with_generators, FundGroupData};
use crate::repcalc::{casimir_value, weyl_dim};
use crate::rootdata::{CartanBasis, Cocharacter, Family, LieType, RootDatum, Weight};
use crate::spinor::SummandKind;

/// A group from the catalog. For `SpQuot`, `Pso`, `Gplus` and `Gminus` the
/// parameter is `n` in `2n`; for `So` and `Spin` it is the dimension `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    SlQuot { n: usize, d: usize },
    Gl { n: usize },
    Pgl { n: usize },
    Sp { n: usize },
    SpQuot { n: usize },
    So { m: usize },
    Spin { m: usize },
    Pso { n: usize },
    Gplus { n: usize },
    Gminus { n: usize },
    SimplyConnected(LieType),
    Adjoint(LieType),
}

fn e(n: usize, i: usize) -> Vec<Rat> {
    (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect()
}

fn half_ones(n: usize, last_sign: i64) -> Vec<Rat> {
    let mut v = vec![ratio(1, 2); n];
    v[n - 1] = ratio(last_sign, 2);
    v
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn lie(f: Family, r: usize) -> Result<LieType> {
    LieType::new(f, r)
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupSpec::SlQuot { n, d } => {
                if n < 2 || d == 0 || n % d != 0 {
                    return Err(invalid(format!("SL_{n}/μ_{d} needs n ≥ 2 and d | n")));
                }
            }
            GroupSpec::Gl { n } | GroupSpec::Pgl { n } => {
                if n < 2 {
                    return Err(invalid("n must be at least 2"));
                }
            }
            GroupSpec::Sp { n } | GroupSpec::SpQuot { n } => {
                if n < 1 {
                    return Err(invalid("n must be at least 1"));
                }
            }
            GroupSpec::So { m } | GroupSpec::Spin { m } => {
                if m < 3 {
                    return Err(invalid(format!("orthogonal groups need m ≥ 3, got {m}")));
                }
            }
            GroupSpec::Pso { n } => {
                if n < 2 {
                    return Err(invalid("PSO_{2n} needs n ≥ 2"));
                }
            }
            GroupSpec::Gplus { n } | GroupSpec::Gminus { n } => {
                if n <= 2 || n % 2 != 0 {
                    return Err(invalid(format!("G±_{{2n}} needs n even and > 2, got n = {n}")));
                }
            }
            GroupSpec::SimplyConnected(_) | GroupSpec::Adjoint(_) => {}
        }
        Ok(())
    }

    /// Whether `g` is simple.
    pub fn is_simple(&self) -> bool {
        !matches!(self, GroupSpec::Gl { .. } | GroupSpec::So { m: 4 } | GroupSpec::Spin { m: 4 } | GroupSpec::Pso { n: 2 })
            && !matches!(self, GroupSpec::SimplyConnected(t) | GroupSpec::Adjoint(t) if t.family == Family::D && t.rank == 2)
    }

    /// Lie type of the derived algebra (`None` for `GL_n`, which also has a center).
    pub fn lie_type(&self) -> Option<LieType> {
        let t = match *self {
            GroupSpec::SlQuot { n, .. } | GroupSpec::Pgl { n } => LieType { family: Family::A, rank: n - 1 },
            GroupSpec::Gl { .. } => return None,
            GroupSpec::Sp { n } | GroupSpec::SpQuot { n } => LieType { family: Family::C, rank: n },
            GroupSpec::So { m } | GroupSpec::Spin { m } => {
                if m % 2 == 1 {
                    LieType { family: Family::B, rank: (m - 1) / 2 }
                } else {
                    LieType { family: Family::D, rank: m / 2 }
                }
            }
            GroupSpec::Pso { n } | GroupSpec::Gplus { n } | GroupSpec::Gminus { n } => {
                LieType { family: Family::D, rank: n }
            }
            GroupSpec::SimplyConnected(t) | GroupSpec::Adjoint(t) => t,
        };
        Some(t)
    }

    /// Rank of the maximal torus.
    pub fn rank(&self) -> usize {
        match *self {
            GroupSpec::Gl { n } => n,
            _ => self.lie_type().map_or(0, |t| t.rank),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::SlQuot { n, d: 1 } => write!(f, "SL{n}"),
            GroupSpec::SlQuot { n, d } => write!(f, "SL{n}/{d}"),
            GroupSpec::Gl { n } => write!(f, "GL{n}"),
            GroupSpec::Pgl { n } => write!(f, "PGL{n}"),
            GroupSpec::Sp { n } => write!(f, "Sp{}", 2 * n),
            GroupSpec::SpQuot { n } => write!(f, "Sp{}/2", 2 * n),
            GroupSpec::So { m } => write!(f, "SO{m}"),
            GroupSpec::Spin { m } => write!(f, "Spin{m}"),
            GroupSpec::Pso { n } => write!(f, "PSO{}", 2 * n),
            GroupSpec::Gplus { n } => write!(f, "G+{}", 2 * n),
            GroupSpec::Gminus { n } => write!(f, "G-{}", 2 * n),
            GroupSpec::SimplyConnected(t) => write!(f, "{t}sc"),
            GroupSpec::Adjoint(t) => write!(f, "{t}ad"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Names such as `SL8/4`, `PGL2`, `GL2`, `Sp16/2`, `SO7`, `Spin8`,
    /// `PSO12`, `G+16`, `E7ad`, `F4sc`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |t: &str| -> Result<usize> { t.parse().map_err(|_| Error::Parse(format!("bad group name `{s}`"))) };
        let even_half = |t: &str| -> Result<usize> {
            let m = num(t)?;
            if m % 2 != 0 {
                return Err(Error::Parse(format!("`{s}` needs an even dimension")));
            }
            Ok(m / 2)
        };
        let spec = if let Some(t) = s.strip_suffix("sc") {
            GroupSpec::SimplyConnected(LieType::parse(t)?)
        } else if let Some(t) = s.strip_suffix("ad") {
            GroupSpec::Adjoint(LieType::parse(t)?)
        } else if let Some(t) = s.strip_prefix("PGL") {
            GroupSpec::Pgl { n: num(t)? }
        } else if let Some(t) = s.strip_prefix("PSO") {
            GroupSpec::Pso { n: even_half(t)? }
        } else if let Some(t) = s.strip_prefix("GL") {
            GroupSpec::Gl { n: num(t)? }
        } else if let Some(t) = s.strip_prefix("SL") {
            match t.split_once('/') {
                Some((n, d)) => GroupSpec::SlQuot { n: num(n)?, d: num(d)? },
                None => GroupSpec::SlQuot { n: num(t)?, d: 1 },
            }
        } else if let Some(t) = s.strip_prefix("Spin") {
            GroupSpec::Spin { m: num(t)? }
        } else if let Some(t) = s.strip_prefix("Sp") {
            match t.split_once('/') {
                Some((m, "2")) => GroupSpec::SpQuot { n: even_half(m)? },
                Some(_) => return Err(Error::Parse(format!("only Sp2n/2 quotients exist, got `{s}`"))),
                None => GroupSpec::Sp { n: even_half(t)? },
            }
        } else if let Some(t) = s.strip_prefix("SO") {
            GroupSpec::So { m: num(t)? }
        } else if let Some(t) = s.strip_prefix("G+") {
            GroupSpec::Gplus { n: even_half(t)? }
        } else if let Some(t) = s.strip_prefix("G-") {
            GroupSpec::Gminus { n: even_half(t)? }
        } else {
            return Err(Error::UnknownFamily(s.to_string()));
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Root datum and `π₁` data, with the classical generators where they exist.
pub fn make_group(spec: &GroupSpec) -> Result<(RootDatum, FundGroupData)> {
    spec.validate()?;
    let with = |rd: RootDatum, gens: Vec<Vec<Rat>>| -> Result<(RootDatum, FundGroupData)> {
        let nus: Vec<Cocharacter> = gens.iter().map(|g| rd.tangent(g.clone())).collect::<Result<_>>()?;
        let mut span = rd.simple_coroots().to_vec();
        span.extend(nus.iter().cloned());
        let rd = rd.with_cochar_lattice(&span)?;
        let fg = with_generators(&rd, nus)?;
        Ok((rd, fg))
    };
    match *spec {
        GroupSpec::SlQuot { n, d } => {
            let rd = RootDatum::build(&[lie(Family::A, n - 1)?], 0)?;
            if d == 1 {
                let fg = fundamental_group(&rd);
                return Ok((rd, fg));
            }
            let mut g = vec![rat(0); n];
            g[0] = rat((n / d) as i64);
            with(rd, vec![g])
        }
        GroupSpec::Pgl { n } => {
            let t = lie(Family::A, n - 1)?;
            adjoint_datum(t)
        }
        GroupSpec::Gl { n } => {
            let roots: Vec<Vec<Rat>> = (0..n - 1).map(|i| crate::arith::sub(&e(n, i), &e(n, i + 1))).collect();
            let gens: Vec<Vec<Rat>> = (0..n).map(|i| e(n, i)).collect();
            let rd = RootDatum::from_realization(n, roots.clone(), roots, Vec::new(), gens)?;
            let nu0 = rd.cocharacter(e(n, 0))?;
            let fg = with_generators(&rd, vec![nu0])?;
            Ok((rd, fg))
        }
        GroupSpec::Sp { n } => {
            let rd = RootDatum::build(&[lie(Family::C, n)?], 0)?;
            let fg = fundamental_group(&rd);
            Ok((rd, fg))
        }
        GroupSpec::SpQuot { n } => with(RootDatum::build(&[lie(Family::C, n)?], 0)?, vec![half_ones(n, 1)]),
        GroupSpec::So { .. } => {
            let t = spec.lie_type().unwrap();
            with(RootDatum::build(&[t], 0)?, vec![e(t.rank, 0)])
        }
        GroupSpec::Spin { .. } => {
            let rd = RootDatum::build(&[spec.lie_type().unwrap()], 0)?;
            let fg = fundamental_group(&rd);
            Ok((rd, fg))
        }
        GroupSpec::Pso { n } => with(RootDatum::build(&[lie(Family::D, n)?], 0)?, vec![e(n, 0), half_ones(n, 1)]),
        GroupSpec::Gplus { n } => with(RootDatum::build(&[lie(Family::D, n)?], 0)?, vec![half_ones(n, 1)]),
        GroupSpec::Gminus { n } => with(RootDatum::build(&[lie(Family::D, n)?], 0)?, vec![half_ones(n, -1)]),
        GroupSpec::SimplyConnected(t) => {
            let rd = RootDatum::build(&[t], 0)?;
            let fg = fundamental_group(&rd);
            Ok((rd, fg))
        }
        GroupSpec::Adjoint(t) => adjoint_datum(t),
    }
}

/// Adjoint group in root coordinates: `X^*` is the root lattice and `X_*`
/// the coweight lattice `ℤ^r`.
fn adjoint_datum(t: LieType) -> Result<(RootDatum, FundGroupData)> {
    let r = t.rank;
    let coweights: Vec<Vec<Rat>> = (0..r).map(|i| e(r, i)).collect();
    let rd = RootDatum::from_cartan(&t.cartan(), CartanBasis::Root, 0, &coweights)?;
    let fg = fundamental_group(&rd);
    Ok((rd, fg))
}

fn power_of_two(n: usize) -> bool {
    n.is_power_of_two()
}

/// The known answer to "is every orthogonal representation of this group
/// spinorial?".
pub fn summary_check(spec: &GroupSpec) -> bool {
    match *spec {
        GroupSpec::SlQuot { n, d } => sl_quot_all_spinorial(n, d),
        GroupSpec::Pgl { n } => sl_quot_all_spinorial(n, n),
        GroupSpec::Gl { .. } => false,
        GroupSpec::Sp { .. } | GroupSpec::Spin { .. } | GroupSpec::SimplyConnected(_) => true,
        GroupSpec::SpQuot { n } => n % 4 == 0,
        GroupSpec::So { .. } => false,
        GroupSpec::Pso { n } => n % 4 == 0,
        GroupSpec::Gplus { n } | GroupSpec::Gminus { n } => n > 4 && n % 4 == 0,
        GroupSpec::Adjoint(t) => match t.family {
            Family::A => sl_quot_all_spinorial(t.rank + 1, t.rank + 1),
            Family::B => false,
            Family::C => t.rank % 4 == 0,
            Family::D => t.rank % 4 == 0,
            Family::E => t.rank != 7,
            Family::F | Family::G => true,
        },
    }
}

fn sl_quot_all_spinorial(n: usize, d: usize) -> bool {
    if n % 2 == 1 {
        return true;
    }
    let exceptional = power_of_two(n) && n >= 4 && d == n / 2;
    (n / d) % 2 == 0 && !exceptional
}

/// A highest weight known to give an aspinorial representation, for groups
/// where `summary_check` is false.
pub fn known_aspinorial_witness(spec: &GroupSpec) -> Result<Option<(Weight, SummandKind)>> {
    if summary_check(spec) {
        return Ok(None);
    }
    let (rd, _) = make_group(spec)?;
    let orth = |v: Vec<Rat>| -> Result<Option<(Weight, SummandKind)>> {
        Ok(Some((rd.character(v)?, SummandKind::Orthogonal)))
    };
    let eps = |ones: &[(usize, i64)], n: usize| {
        let mut v = vec![rat(0); n];
        for &(i, c) in ones {
            v[i] = rat(c);
        }
        v
    };
    match *spec {
        GroupSpec::SlQuot { n, d } => {
            if (n / d) % 2 == 1 {
                orth(eps(&[(0, 1), (n - 1, -1)], n))
            } else {
                orth((0..n).map(|i| rat(i64::from(i < n / 2))).collect())
            }
        }
        GroupSpec::Pgl { .. } => Ok(Some((rd.highest_root(0), SummandKind::Orthogonal))),
        GroupSpec::Gl { n } => Ok(Some((rd.character(vec![rat(1); n])?, SummandKind::Hyperbolic))),
        GroupSpec::SpQuot { n } => match n % 4 {
            3 => orth(eps(&[(0, 1), (1, 1)], n)),
            _ => orth(eps(&[(0, 2)], n)),
        },
        GroupSpec::So { m } => orth(eps(&[(0, 1)], m / 2)),
        // for n ≡ 1 mod 4 the adjoint representation is spinorial (δ lies in
        // the root lattice), but Sym²₀ of the standard representation is not
        GroupSpec::Pso { n } if n % 4 == 1 => orth(eps(&[(0, 2)], n)),
        GroupSpec::Pso { n } => orth(eps(&[(0, 1), (1, 1)], n)),
        GroupSpec::Gplus { n } | GroupSpec::Gminus { n } => {
            if n == 4 {
                let sign = if matches!(spec, GroupSpec::Gplus { .. }) { 1 } else { -1 };
                orth(half_ones(4, sign))
            } else {
                orth(eps(&[(0, 1), (1, 1)], n))
            }
        }
        GroupSpec::Adjoint(t) => match t.family {
            Family::B => Ok(Some((rd.fundamental_weights()[0].clone(), SummandKind::Orthogonal))),
            Family::C if t.rank % 4 == 3 => Ok(Some((rd.fundamental_weights()[1].clone(), SummandKind::Orthogonal))),
            _ => Ok(Some((rd.highest_root(0), SummandKind::Orthogonal))),
        },
        GroupSpec::Sp { .. } | GroupSpec::Spin { .. } | GroupSpec::SimplyConnected(_) => Ok(None),
    }
}

/// Families with parameters used by the summary sweeps.
pub fn summary_families() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 2..=12 {
        for d in 1..=n {
            if n % d == 0 {
                out.push(GroupSpec::SlQuot { n, d });
            }
        }
    }
    for n in 1..=8 {
        out.push(GroupSpec::SpQuot { n });
    }
    for m in 3..=16 {
        out.push(GroupSpec::So { m });
        out.push(GroupSpec::Spin { m });
    }
    for n in 2..=8 {
        out.push(GroupSpec::Pso { n });
    }
    for n in [4, 6, 8] {
        out.push(GroupSpec::Gplus { n });
        out.push(GroupSpec::Gminus { n });
    }
    out.push(GroupSpec::Adjoint(LieType { family: Family::E, rank: 6 }));
    out.push(GroupSpec::Adjoint(LieType { family: Family::E, rank: 7 }));
    out
}

/// Isogeny classes of `D_n` with their canonical generators of `π₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeDRow {
    So,
    Pso,
    Gplus,
    Gminus,
}

impl TypeDRow {
    pub const ALL: [TypeDRow; 4] = [TypeDRow::So, TypeDRow::Pso, TypeDRow::Gplus, TypeDRow::Gminus];

    pub fn spec(self, n: usize) -> GroupSpec {
        match self {
            TypeDRow::So => GroupSpec::So { m: 2 * n },
            TypeDRow::Pso => GroupSpec::Pso { n },
            TypeDRow::Gplus => GroupSpec::Gplus { n },
            TypeDRow::Gminus => GroupSpec::Gminus { n },
        }
    }

    /// The tabulated `p(ν̲)`.
    pub fn tabulated_p(self, n: usize) -> Rat {
        let n = n as i64;
        match self {
            TypeDRow::So => rat(2 * n - 2),
            TypeDRow::Pso if n % 4 == 0 => rat(2 * n - 2),
            TypeDRow::Pso => rat(n - 1),
            TypeDRow::Gplus | TypeDRow::Gminus => rat(n * (n - 1) / 2),
        }
    }
}

/// Highest weights of `D_n` (n even) that appear in the dimension/Casimir table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeDWeight {
    /// `ϖ_k = ε_1 + … + ε_k`.
    Fundamental(usize),
    /// `½ϖ_n = ½(1,…,1)`.
    HalfSpin,
    /// `½ϖ_− = ½(1,…,1,−1)`.
    HalfSpinMinus,
    /// `ϖ_− = (1,…,1,−1)`.
    Minus,
}

impl TypeDWeight {
    pub fn coords(self, n: usize) -> Vec<Rat> {
        match self {
            TypeDWeight::Fundamental(k) => (0..n).map(|i| rat(i64::from(i < k))).collect(),
            TypeDWeight::HalfSpin => half_ones(n, 1),
            TypeDWeight::HalfSpinMinus => half_ones(n, -1),
            TypeDWeight::Minus => {
                let mut v = vec![rat(1); n];
                v[n - 1] = rat(-1);
                v
            }
        }
    }

    /// The tabulated `(dim V_λ, χ_λ(C))`.
    pub fn tabulated(self, n: usize) -> (BigInt, Rat) {
        let nn = n as i64;
        match self {
            TypeDWeight::Fundamental(k) => {
                let k = k as i64;
                (binomial(2 * n as u64, k as u64), ratio(k * (2 * nn - k), 4 * nn - 4))
            }
            TypeDWeight::HalfSpin | TypeDWeight::HalfSpinMinus => {
                (BigInt::from(2).pow(n as u32 - 1), ratio(nn * (2 * nn - 1), 16 * (nn - 1)))
            }
            TypeDWeight::Minus => {
                (factorial(2 * n as u64 - 1) / BigInt::from(2).pow(n as u32), ratio(nn * nn, 4 * nn - 4))
            }
        }
    }

    pub fn label(self) -> String {
        match self {
            TypeDWeight::Fundamental(k) => format!("w{k}"),
            TypeDWeight::HalfSpin => "w_n/2".into(),
            TypeDWeight::HalfSpinMinus => "w_-/2".into(),
            TypeDWeight::Minus => "w_-".into(),
        }
    }
}

/// `(dim V_λ, χ_λ(C))` computed for `Spin_{2n}`.
pub fn type_d_dim_casimir(n: usize, w: TypeDWeight) -> Result<(BigInt, Rat)> {
    let rd = RootDatum::build(&[lie(Family::D, n)?], 0)?;
    let lambda = rd.weight(w.coords(n))?;
    Ok((weyl_dim(&rd, &lambda)?, casimir_value(&rd, &lambda, 0)?))
}

/// `q_{ϖ_−}((1,0,…,0))` in closed form from the tabulated dimension and Casimir value.
pub fn tabulated_q_minus(n: usize) -> BigInt {
    factorial(2 * n as u64 - 2) * BigInt::from(n) / BigInt::from(2).pow(n as u32 + 1)
}

/// `q_{½ϖ_n} = q_{½ϖ_−} = n·2^{n−6}` at the generator of `G^±_{2n}`.
pub fn tabulated_q_half_spin(n: usize) -> Rat {
    rat(n as i64) * Rat::from_integer(BigInt::from(2).pow(n as u32)) / rat(64)
}
