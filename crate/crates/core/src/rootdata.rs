//! Root data of connected reductive groups.
//!
//! Characters and cocharacters are rational vectors in dual copies of an
//! ambient `ℚ^m` paired by the dot product. Type-A blocks written in
//! ε-coordinates carry a null direction `(1,…,1)` which is projected away, so
//! the torus is the orthogonal complement of the null directions. The
//! cocharacter lattice `X_*` is any full-rank lattice in the torus containing
//! the coroots; `X^*` is its dual.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{
    add, axpy, dot, fmt_vec, inverse, is_integral, null_space, rat, rank, scale, solve_in_span,
    sub, Rat,
};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple Lie type such as `A3` or `E7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::RankOutOfRange { family: family.letter(), rank });
        }
        Ok(LieType { family, rank })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownFamily(s.to_string()))?;
        LieType::new(family, rank)
    }

    /// Cartan matrix with entries `⟨α_i, α_j∨⟩`, Bourbaki numbering.
    pub fn cartan(self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>, nodes: &[usize]| {
            for w in nodes.windows(2) {
                a[w[0]][w[1]] = -1;
                a[w[1]][w[0]] = -1;
            }
        };
        match self.family {
            Family::A => chain(&mut a, &(0..r).collect::<Vec<_>>()),
            Family::B => {
                chain(&mut a, &(0..r).collect::<Vec<_>>());
                if r >= 2 {
                    // α_r short: ⟨α_{r-1}, α_r∨⟩ = -2
                    a[r - 2][r - 1] = -2;
                }
            }
            Family::C => {
                chain(&mut a, &(0..r).collect::<Vec<_>>());
                if r >= 2 {
                    a[r - 1][r - 2] = -2;
                }
            }
            Family::D => {
                if r >= 3 {
                    chain(&mut a, &(0..r - 1).collect::<Vec<_>>());
                    a[r - 3][r - 1] = -1;
                    a[r - 1][r - 3] = -1;
                }
            }
            Family::E => {
                // 1-3-4-5-…, with 2 attached to 4
                let mut tail = vec![0, 2, 3];
                tail.extend(4..r);
                chain(&mut a, &tail);
                a[1][3] = -1;
                a[3][1] = -1;
            }
            Family::F => {
                chain(&mut a, &[0, 1, 2, 3]);
                a[1][2] = -2;
            }
            Family::G => {
                a[0][1] = -1;
                a[1][0] = -3;
            }
        }
        a
    }

    pub fn num_positive_roots(self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::E => [36, 63, 120][r - 6],
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn dim(self) -> usize {
        self.rank + 2 * self.num_positive_roots()
    }

    pub fn weyl_order(self) -> BigInt {
        let r = self.rank as u64;
        let fact = |n: u64| (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i));
        match self.family {
            Family::A => fact(r + 1),
            Family::B | Family::C => fact(r) * (BigInt::one() << r),
            Family::D => fact(r) * (BigInt::one() << (r - 1)),
            Family::E => BigInt::from([51840u64, 2903040, 696729600][self.rank - 6]),
            Family::F => BigInt::from(1152),
            Family::G => BigInt::from(12),
        }
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LieType::parse(s)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A character (or any element of `t^*`) in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rat>);

/// A cocharacter (or any element of `t`) in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cocharacter(Vec<Rat>);

macro_rules! vector_newtype {
    ($t:ident) => {
        impl $t {
            /// Raw coordinates with no projection or lattice check; prefer
            /// the `RootDatum` constructors, which validate.
            pub fn from_coords(v: Vec<Rat>) -> Self {
                $t(v)
            }

            pub fn from_ints(v: &[i64]) -> Self {
                $t(v.iter().map(|&x| rat(x)).collect())
            }

            pub fn coords(&self) -> &[Rat] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<Rat> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            pub fn scaled(&self, c: &Rat) -> Self {
                $t(scale(&self.0, c))
            }

            pub fn plus(&self, other: &Self) -> Self {
                $t(add(&self.0, &other.0))
            }

            pub fn minus(&self, other: &Self) -> Self {
                $t(sub(&self.0, &other.0))
            }

            pub fn neg(&self) -> Self {
                $t(self.0.iter().map(|x| -x).collect())
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&fmt_vec(&self.0))
            }
        }
    };
}

vector_newtype!(Weight);
vector_newtype!(Cocharacter);

/// One simple factor `g^i` of the derived algebra.
#[derive(Clone, Debug)]
pub struct SimpleFactor {
    pub lie_type: LieType,
    /// Indices of this factor's simple roots in the datum's ordering.
    pub simple: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PositiveRoot {
    pub root: Weight,
    pub coroot: Cocharacter,
    /// Coefficients in the simple roots.
    pub root_coeffs: Vec<i64>,
    /// Coefficients of the coroot in the simple coroots.
    pub coroot_coeffs: Vec<i64>,
    /// `⟨β, α_j∨⟩` for every simple coroot.
    pub labels: Vec<i64>,
    pub factor: usize,
}

/// How a Cartan matrix is realized in coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanBasis {
    /// Simple coroots are the standard basis; weights are read in Dynkin labels.
    Coroot,
    /// Simple roots are the standard basis; weights are read in root coordinates.
    Root,
}

#[derive(Clone, Debug)]
pub struct DominantConjugate {
    pub weight: Weight,
    /// `sgn(w)` of the Weyl element used.
    pub sign: i8,
    /// Whether `w₀λ = −λ` for the dominant representative λ.
    pub w0_neg_self: bool,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    ambient_dim: usize,
    null_dirs: Vec<Vec<Rat>>,
    simple_roots: Vec<Weight>,
    simple_coroots: Vec<Cocharacter>,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rat>>,
    factors: Vec<SimpleFactor>,
    positive: Vec<PositiveRoot>,
    delta: Weight,
    center: Vec<Vec<Rat>>,
    /// Inverse Killing form in Dynkin-label coordinates.
    inv_form: Vec<Vec<Rat>>,
    lattice: Lattice,
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()
}

fn classical_block(t: LieType) -> (usize, Vec<Vec<Rat>>, Vec<Vec<Rat>>, Option<Vec<Rat>>) {
    let r = t.rank;
    let e = |m: usize, i: usize| unit(m, i);
    match t.family {
        Family::A => {
            let m = r + 1;
            let s: Vec<Vec<Rat>> = (0..r).map(|i| sub(&e(m, i), &e(m, i + 1))).collect();
            (m, s.clone(), s, Some(vec![Rat::one(); m]))
        }
        Family::B | Family::C | Family::D => {
            let m = r;
            let mut roots: Vec<Vec<Rat>> = (0..r.saturating_sub(1)).map(|i| sub(&e(m, i), &e(m, i + 1))).collect();
            let mut coroots = roots.clone();
            match t.family {
                Family::B => {
                    roots.push(e(m, r - 1));
                    coroots.push(scale(&e(m, r - 1), &rat(2)));
                }
                Family::C => {
                    roots.push(scale(&e(m, r - 1), &rat(2)));
                    coroots.push(e(m, r - 1));
                }
                _ => {
                    let last = add(&e(m, r - 2), &e(m, r - 1));
                    roots.push(last.clone());
                    coroots.push(last);
                }
            }
            (m, roots, coroots, None)
        }
        _ => {
            let a = t.cartan();
            let roots = a.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect();
            let coroots = (0..r).map(|i| e(r, i)).collect();
            (r, roots, coroots, None)
        }
    }
}

impl RootDatum {
    /// Simply connected (times a split torus of rank `central_rank`) group of
    /// the given simple types; classical types use ε-coordinates, exceptional
    /// types the simple-coroot basis.
    pub fn build(types: &[LieType], central_rank: usize) -> Result<Self> {
        let mut ambient = 0;
        let mut blocks = Vec::new();
        for &t in types {
            let b = classical_block(t);
            blocks.push((ambient, b));
            ambient += blocks.last().unwrap().1 .0;
        }
        let m = ambient + central_rank;
        let pad = |off: usize, v: &[Rat]| {
            let mut x = vec![Rat::zero(); m];
            x[off..off + v.len()].clone_from_slice(v);
            x
        };
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut nulls = Vec::new();
        for (off, (_, r, c, null)) in &blocks {
            roots.extend(r.iter().map(|v| pad(*off, v)));
            coroots.extend(c.iter().map(|v| pad(*off, v)));
            if let Some(n) = null {
                nulls.push(pad(*off, n));
            }
        }
        let mut gens = coroots.clone();
        gens.extend((ambient..m).map(|i| unit(m, i)));
        Self::from_realization(m, roots, coroots, nulls, gens)
    }

    /// Realize a Cartan matrix in the coroot or root basis of `ℚ^r`, with the
    /// cocharacter lattice spanned by the coroots and `extra_cochar` (both in
    /// ambient coordinates), plus a central torus of rank `central_rank`.
    pub fn from_cartan(
        cartan: &[Vec<i64>],
        basis: CartanBasis,
        central_rank: usize,
        extra_cochar: &[Vec<Rat>],
    ) -> Result<Self> {
        let r = cartan.len();
        if cartan.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidParameters("Cartan matrix must be square".into()));
        }
        let m = r + central_rank;
        let (roots, coroots): (Vec<Vec<Rat>>, Vec<Vec<Rat>>) = match basis {
            CartanBasis::Coroot => (
                (0..r)
                    .map(|i| {
                        let mut v: Vec<Rat> = cartan[i].iter().map(|&x| rat(x)).collect();
                        v.resize(m, Rat::zero());
                        v
                    })
                    .collect(),
                (0..r).map(|i| unit(m, i)).collect(),
            ),
            CartanBasis::Root => (
                (0..r).map(|i| unit(m, i)).collect(),
                (0..r)
                    .map(|j| {
                        let mut v: Vec<Rat> = (0..r).map(|i| rat(cartan[i][j])).collect();
                        v.resize(m, Rat::zero());
                        v
                    })
                    .collect(),
            ),
        };
        let mut gens = coroots.clone();
        gens.extend((r..m).map(|i| unit(m, i)));
        gens.extend(extra_cochar.iter().cloned());
        Self::from_realization(m, roots, coroots, Vec::new(), gens)
    }

    /// General constructor. `cochar_gens` span `X_*` and must contain the coroots.
    pub fn from_realization(
        ambient_dim: usize,
        simple_roots: Vec<Vec<Rat>>,
        simple_coroots: Vec<Vec<Rat>>,
        null_dirs: Vec<Vec<Rat>>,
        cochar_gens: Vec<Vec<Rat>>,
    ) -> Result<Self> {
        let r = simple_roots.len();
        if simple_coroots.len() != r {
            return Err(Error::InvalidParameters("roots and coroots differ in number".into()));
        }
        for v in simple_roots.iter().chain(&simple_coroots).chain(&null_dirs).chain(&cochar_gens) {
            if v.len() != ambient_dim {
                return Err(Error::Dimension { expected: ambient_dim, got: v.len() });
            }
        }
        for (i, a) in null_dirs.iter().enumerate() {
            for b in &null_dirs[i + 1..] {
                if !dot(a, b).is_zero() {
                    return Err(Error::InvalidParameters("null directions must be orthogonal".into()));
                }
            }
            if simple_roots.iter().chain(&simple_coroots).any(|v| !dot(v, a).is_zero()) {
                return Err(Error::InvalidParameters("null direction pairs with a root".into()));
            }
        }

        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let x = dot(&simple_roots[i], &simple_coroots[j]);
                if !is_integral(&x) {
                    return Err(Error::InvalidParameters("non-integral Cartan entry".into()));
                }
                cartan[i][j] = x.to_integer().to_i64().unwrap();
            }
        }
        let cartan_q: Vec<Vec<Rat>> = cartan.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect();
        let cartan_inv = if r == 0 {
            Vec::new()
        } else {
            inverse(&cartan_q).ok_or_else(|| Error::InvalidParameters("singular Cartan matrix".into()))?
        };

        // connected components of the Dynkin diagram
        let mut comp = vec![usize::MAX; r];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for s in 0..r {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..r {
                    if comp[j] == usize::MAX && (cartan[i][j] != 0 || cartan[j][i] != 0) {
                        comp[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }

        let positive_coeffs = positive_root_system(&cartan)?;
        let mut positive: Vec<PositiveRoot> = positive_coeffs
            .into_iter()
            .map(|(rc, cc)| {
                let mut root = vec![Rat::zero(); ambient_dim];
                let mut coroot = vec![Rat::zero(); ambient_dim];
                for (k, &c) in rc.iter().enumerate() {
                    if c != 0 {
                        root = axpy(&root, &rat(c), &simple_roots[k]);
                    }
                }
                for (k, &c) in cc.iter().enumerate() {
                    if c != 0 {
                        coroot = axpy(&coroot, &rat(c), &simple_coroots[k]);
                    }
                }
                let labels = (0..r).map(|j| (0..r).map(|k| rc[k] * cartan[k][j]).sum()).collect();
                let factor = comp[rc.iter().position(|&c| c != 0).unwrap()];
                PositiveRoot {
                    root: Weight(root),
                    coroot: Cocharacter(coroot),
                    root_coeffs: rc,
                    coroot_coeffs: cc,
                    labels,
                    factor,
                }
            })
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.root_coeffs.iter().sum();
            let hb: i64 = b.root_coeffs.iter().sum();
            ha.cmp(&hb).then_with(|| b.root_coeffs.cmp(&a.root_coeffs))
        });

        let mut delta = vec![Rat::zero(); ambient_dim];
        for p in &positive {
            delta = add(&delta, &p.root.0);
        }
        let delta = scale(&delta, &Rat::new(BigInt::one(), BigInt::from(2)));

        // Killing form on the coroot span: K_ij = Σ_{α∈R} ⟨α,α_i∨⟩⟨α,α_j∨⟩
        let mut kill = vec![vec![Rat::zero(); r]; r];
        for p in &positive {
            for i in 0..r {
                for j in 0..r {
                    kill[i][j] += rat(2 * p.labels[i] * p.labels[j]);
                }
            }
        }
        let inv_form = if r == 0 {
            Vec::new()
        } else {
            inverse(&kill).ok_or_else(|| Error::InvalidParameters("degenerate Killing form".into()))?
        };

        // center z ⊂ t: annihilated by all roots, orthogonal to null directions
        let mut constraints: Vec<Vec<Rat>> = simple_roots.clone();
        constraints.extend(null_dirs.iter().cloned());
        let center = null_space(&constraints, ambient_dim);

        let torus_rank = ambient_dim - null_dirs.len();
        let project = |v: &[Rat]| project_out(v, &null_dirs);
        let gens: Vec<Vec<Rat>> = cochar_gens.iter().map(|g| project(g)).collect();
        let lattice = Lattice::from_generators(&gens, ambient_dim);
        if lattice.rank() != torus_rank {
            return Err(Error::LatticeRank { got: lattice.rank(), expected: torus_rank });
        }
        for c in &simple_coroots {
            if !lattice.contains(c) {
                return Err(Error::LatticeMissingCoroots(fmt_vec(c)));
            }
        }

        let mut rd = RootDatum {
            ambient_dim,
            null_dirs,
            simple_roots: simple_roots.into_iter().map(Weight).collect(),
            simple_coroots: simple_coroots.into_iter().map(Cocharacter).collect(),
            cartan,
            cartan_inv,
            factors: Vec::new(),
            positive,
            delta: Weight(delta),
            center,
            inv_form,
            lattice,
        };
        rd.factors = groups
            .into_iter()
            .enumerate()
            .map(|(id, simple)| {
                let lie_type = rd.identify_factor(id, simple.len());
                SimpleFactor { lie_type, simple }
            })
            .collect();
        Ok(rd)
    }

    /// The same root system with a different cocharacter lattice.
    pub fn with_cochar_lattice(&self, gens: &[Cocharacter]) -> Result<Self> {
        let torus_rank = self.rank();
        let gens: Vec<Vec<Rat>> = gens.iter().map(|g| self.project(&g.0)).collect();
        for g in &gens {
            if g.len() != self.ambient_dim {
                return Err(Error::Dimension { expected: self.ambient_dim, got: g.len() });
            }
        }
        let lattice = Lattice::from_generators(&gens, self.ambient_dim);
        if lattice.rank() != torus_rank {
            return Err(Error::LatticeRank { got: lattice.rank(), expected: torus_rank });
        }
        for c in &self.simple_coroots {
            if !lattice.contains(&c.0) {
                return Err(Error::LatticeMissingCoroots(c.to_string()));
            }
        }
        let mut rd = self.clone();
        rd.lattice = lattice;
        Ok(rd)
    }

    fn identify_factor(&self, id: usize, rank: usize) -> LieType {
        let roots: Vec<&PositiveRoot> = self.positive.iter().filter(|p| p.factor == id).collect();
        let n = roots.len();
        let lengths: Vec<Rat> = roots.iter().map(|p| self.label_inner(&p.labels, &p.labels)).collect();
        let max = lengths.iter().max().cloned().unwrap_or_else(Rat::zero);
        let short = lengths.iter().filter(|l| **l != max).count();
        let fam = if short == 0 {
            if n == rank * (rank + 1) / 2 {
                Family::A
            } else if n == rank * (rank - 1) {
                Family::D
            } else {
                Family::E
            }
        } else if rank == 2 && n == 6 {
            Family::G
        } else if rank == 4 && n == 24 {
            Family::F
        } else if rank > 2 && short == rank * (rank - 1) {
            Family::C
        } else {
            Family::B
        };
        LieType { family: fam, rank }
    }

    // ---------------------------------------------------------------- queries

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Rank of the maximal torus.
    pub fn rank(&self) -> usize {
        self.ambient_dim - self.null_dirs.len()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn central_rank(&self) -> usize {
        self.center.len()
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn lie_types(&self) -> Vec<LieType> {
        self.factors.iter().map(|f| f.lie_type).collect()
    }

    /// Whether `g` is simple (one simple factor, no center).
    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1 && self.center.is_empty()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Cocharacter] {
        &self.simple_coroots
    }

    pub fn positive_root_data(&self) -> &[PositiveRoot] {
        &self.positive
    }

    pub fn positive_roots(&self) -> Vec<Weight> {
        self.positive.iter().map(|p| p.root.clone()).collect()
    }

    pub fn roots(&self) -> Vec<Weight> {
        self.positive
            .iter()
            .flat_map(|p| [p.root.clone(), p.root.neg()])
            .collect()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn delta(&self) -> &Weight {
        &self.delta
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn null_dirs(&self) -> &[Vec<Rat>] {
        &self.null_dirs
    }

    /// Basis of the Lie algebra of the connected center.
    pub fn center_basis(&self) -> &[Vec<Rat>] {
        &self.center
    }

    pub fn dim_g(&self) -> usize {
        self.rank() + self.num_roots()
    }

    pub fn factor_dim(&self, factor: usize) -> usize {
        self.factors[factor].lie_type.dim()
    }

    pub fn weyl_order(&self) -> BigInt {
        self.factors.iter().map(|f| f.lie_type.weyl_order()).product()
    }

    // ------------------------------------------------------------ coordinates

    fn project(&self, v: &[Rat]) -> Vec<Rat> {
        project_out(v, &self.null_dirs)
    }

    fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::Dimension { expected: self.ambient_dim, got: v.len() });
        }
        Ok(())
    }

    /// An element of `t^*` (projected onto the torus); no lattice check.
    pub fn weight(&self, coords: Vec<Rat>) -> Result<Weight> {
        self.check_len(&coords)?;
        Ok(Weight(self.project(&coords)))
    }

    pub fn weight_int(&self, coords: &[i64]) -> Result<Weight> {
        self.weight(coords.iter().map(|&x| rat(x)).collect())
    }

    /// A character: an element of `X^*(T)`.
    pub fn character(&self, coords: Vec<Rat>) -> Result<Weight> {
        let w = self.weight(coords)?;
        if !self.in_character_lattice(&w) {
            return Err(Error::WeightNotInLattice(w.to_string()));
        }
        Ok(w)
    }

    pub fn in_character_lattice(&self, w: &Weight) -> bool {
        self.lattice.in_dual(&w.0)
    }

    /// A cocharacter: an element of `X_*(T)`.
    pub fn cocharacter(&self, coords: Vec<Rat>) -> Result<Cocharacter> {
        let v = self.tangent(coords)?;
        if !self.lattice.contains(&v.0) {
            return Err(Error::CocharNotInLattice(v.to_string()));
        }
        Ok(v)
    }

    pub fn cocharacter_int(&self, coords: &[i64]) -> Result<Cocharacter> {
        self.cocharacter(coords.iter().map(|&x| rat(x)).collect())
    }

    /// An arbitrary element of `t` (no lattice check), used for regular points.
    pub fn tangent(&self, coords: Vec<Rat>) -> Result<Cocharacter> {
        self.check_len(&coords)?;
        Ok(Cocharacter(self.project(&coords)))
    }

    pub fn in_cochar_lattice(&self, v: &Cocharacter) -> bool {
        self.lattice.contains(&v.0)
    }

    pub fn pair(&self, w: &Weight, v: &Cocharacter) -> Rat {
        dot(&w.0, &v.0)
    }

    /// `⟨μ, α_i∨⟩` for each simple coroot.
    pub fn labels(&self, w: &Weight) -> Vec<Rat> {
        self.simple_coroots.iter().map(|c| dot(&w.0, &c.0)).collect()
    }

    pub fn int_labels(&self, w: &Weight) -> Option<Vec<i64>> {
        self.labels(w)
            .into_iter()
            .map(|x| if is_integral(&x) { x.to_integer().to_i64() } else { None })
            .collect()
    }

    /// `⟨α_i, ν⟩` for each simple root.
    pub fn simple_pairings(&self, v: &Cocharacter) -> Vec<Rat> {
        self.simple_roots.iter().map(|a| dot(&a.0, &v.0)).collect()
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.labels(w).iter().all(|x| !x.is_negative())
    }

    /// The element of `span(R)` with the given Dynkin labels.
    pub fn weight_from_labels(&self, labels: &[i64]) -> Weight {
        let r = self.semisimple_rank();
        let mut v = vec![Rat::zero(); self.ambient_dim];
        for k in 0..r {
            // c = A^{-T} a
            let c: Rat = (0..r).fold(Rat::zero(), |acc, j| acc + &self.cartan_inv[j][k] * rat(labels[j]));
            if !c.is_zero() {
                v = axpy(&v, &c, &self.simple_roots[k].0);
            }
        }
        Weight(v)
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let r = self.semisimple_rank();
        (0..r)
            .map(|i| {
                let mut l = vec![0; r];
                l[i] = 1;
                self.weight_from_labels(&l)
            })
            .collect()
    }

    /// Highest root of a simple factor (the highest weight of its adjoint action).
    pub fn highest_root(&self, factor: usize) -> Weight {
        self.positive
            .iter()
            .filter(|p| p.factor == factor)
            .max_by_key(|p| p.root_coeffs.iter().sum::<i64>())
            .map(|p| p.root.clone())
            .expect("factor has roots")
    }

    /// `Σ_{α>0} α∨`, a regular element of `t`.
    pub fn two_rho_check(&self) -> Cocharacter {
        let mut v = vec![Rat::zero(); self.ambient_dim];
        for p in &self.positive {
            v = add(&v, &p.coroot.0);
        }
        Cocharacter(v)
    }

    /// `ν = ν^z + ν'` with `ν'` in the coroot span; returns `ν^z`.
    pub fn center_component(&self, v: &Cocharacter) -> Cocharacter {
        let r = self.semisimple_rank();
        if r == 0 {
            return v.clone();
        }
        let b = self.simple_pairings(v);
        // A c = b with (A c)_j = Σ_i ⟨α_j, α_i∨⟩ c_i
        let mut out = v.0.clone();
        for i in 0..r {
            let c: Rat = (0..r).fold(Rat::zero(), |acc, j| acc + &self.cartan_inv[i][j] * &b[j]);
            if !c.is_zero() {
                out = axpy(&out, &-c, &self.simple_coroots[i].0);
            }
        }
        Cocharacter(out)
    }

    // ----------------------------------------------------------------- forms

    /// Killing norm `|ν|² = Σ_{α∈R} ⟨α,ν⟩²`.
    pub fn cochar_norm_sq(&self, v: &Cocharacter) -> Rat {
        let b = self.simple_pairings(v);
        self.norm_sq_from_pairings(&b, None)
    }

    /// `|ν^i|²`, the Killing norm restricted to one simple factor.
    pub fn factor_norm_sq(&self, v: &Cocharacter, factor: usize) -> Rat {
        let b = self.simple_pairings(v);
        self.norm_sq_from_pairings(&b, Some(factor))
    }

    pub(crate) fn norm_sq_from_pairings(&self, b: &[Rat], factor: Option<usize>) -> Rat {
        let mut acc = Rat::zero();
        for p in &self.positive {
            if factor.is_some_and(|f| f != p.factor) {
                continue;
            }
            let x = p.root_coeffs.iter().zip(b).fold(Rat::zero(), |a, (&c, y)| a + rat(c) * y);
            acc += &x * &x;
        }
        acc * rat(2)
    }

    pub(crate) fn label_inner(&self, a: &[i64], b: &[i64]) -> Rat {
        let r = a.len();
        let mut acc = Rat::zero();
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                if b[j] != 0 {
                    acc += &self.inv_form[i][j] * rat(a[i] * b[j]);
                }
            }
        }
        acc
    }

    pub(crate) fn label_inner_q(&self, a: &[Rat], b: &[Rat], factor: Option<usize>) -> Rat {
        let idx: Vec<usize> = match factor {
            Some(f) => self.factors[f].simple.clone(),
            None => (0..a.len()).collect(),
        };
        let mut acc = Rat::zero();
        for &i in &idx {
            if a[i].is_zero() {
                continue;
            }
            for &j in &idx {
                if !b[j].is_zero() {
                    acc += &self.inv_form[i][j] * &a[i] * &b[j];
                }
            }
        }
        acc
    }

    /// Inverse Killing form on `(t')^*`; the central part of each weight is ignored.
    pub fn weight_inner(&self, a: &Weight, b: &Weight) -> Rat {
        self.label_inner_q(&self.labels(a), &self.labels(b), None)
    }

    pub fn factor_weight_inner(&self, a: &Weight, b: &Weight, factor: usize) -> Rat {
        self.label_inner_q(&self.labels(a), &self.labels(b), Some(factor))
    }

    /// Dual Coxeter number `1/|θ|²` of a simple factor, θ a long root.
    pub fn dual_coxeter_number(&self, factor: usize) -> Result<i64> {
        if factor >= self.factors.len() {
            return Err(Error::NotSimple(format!("no simple factor with index {factor}")));
        }
        let long = self
            .positive
            .iter()
            .filter(|p| p.factor == factor)
            .map(|p| self.label_inner(&p.labels, &p.labels))
            .max()
            .unwrap();
        let h = long.recip();
        if !is_integral(&h) {
            return Err(Error::Integrality(format!("dual Coxeter number {h}")));
        }
        Ok(h.to_integer().to_i64().unwrap())
    }

    // ------------------------------------------------------------------ Weyl

    /// Dominant Weyl conjugate by repeated simple reflections.
    pub fn dominant_conjugate(&self, w: &Weight) -> DominantConjugate {
        let (weight, steps) = self.reflect_to_dominant(w);
        let (neg_dom, _) = self.reflect_to_dominant(&weight.neg());
        DominantConjugate {
            w0_neg_self: neg_dom == weight,
            weight,
            sign: if steps % 2 == 0 { 1 } else { -1 },
        }
    }

    fn reflect_to_dominant(&self, w: &Weight) -> (Weight, usize) {
        let mut v = w.0.clone();
        let mut labels = self.labels(w);
        let mut steps = 0;
        while let Some(i) = labels.iter().position(|x| x.is_negative()) {
            let c = labels[i].clone();
            v = axpy(&v, &-c.clone(), &self.simple_roots[i].0);
            for (j, l) in labels.iter_mut().enumerate() {
                *l -= &c * rat(self.cartan[i][j]);
            }
            steps += 1;
        }
        (Weight(v), steps)
    }

    /// Dominant conjugate of integral Dynkin labels.
    pub fn dominant_labels(&self, labels: &[i64]) -> Vec<i64> {
        dominant_labels(&self.cartan, labels)
    }
}

pub(crate) fn dominant_labels(cartan: &[Vec<i64>], labels: &[i64]) -> Vec<i64> {
    let mut l = labels.to_vec();
    while let Some(i) = l.iter().position(|&x| x < 0) {
        let c = l[i];
        for (j, x) in l.iter_mut().enumerate() {
            *x -= c * cartan[i][j];
        }
    }
    l
}

fn project_out(v: &[Rat], nulls: &[Vec<Rat>]) -> Vec<Rat> {
    let mut out = v.to_vec();
    for n in nulls {
        let c = dot(&out, n) / dot(n, n);
        if !c.is_zero() {
            out = axpy(&out, &-c, n);
        }
    }
    out
}

/// Positive roots and their coroots in simple (co)root coordinates, generated
/// by simple reflections from the simple roots.
fn positive_root_system(cartan: &[Vec<i64>]) -> Result<Vec<(Vec<i64>, Vec<i64>)>> {
    let r = cartan.len();
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0i64; r];
        e[i] = 1;
        seen.insert(e.clone(), e.clone());
        order.push(e.clone());
        queue.push_back(e);
    }
    const LIMIT: usize = 1 << 16;
    while let Some(beta) = queue.pop_front() {
        let gamma = seen[&beta].clone();
        for i in 0..r {
            let p: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
            let pc: i64 = (0..r).map(|j| gamma[j] * cartan[i][j]).sum();
            let mut nb = beta.clone();
            nb[i] -= p;
            if nb.iter().any(|&c| c < 0) || seen.contains_key(&nb) {
                continue;
            }
            let mut ng = gamma.clone();
            ng[i] -= pc;
            seen.insert(nb.clone(), ng);
            order.push(nb.clone());
            queue.push_back(nb);
            if order.len() > LIMIT {
                return Err(Error::InvalidParameters("Cartan matrix is not of finite type".into()));
            }
        }
    }
    Ok(order.into_iter().map(|b| {
        let g = seen[&b].clone();
        (b, g)
    }).collect())
}

/// Rank of a list of vectors; exposed for sanity checks in tests.
pub fn vector_rank(vs: &[Vec<Rat>]) -> usize {
    rank(vs)
}

/// Solve for coordinates of `v` in the span of `basis`.
pub fn coordinates_in(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    solve_in_span(basis, v)
}
