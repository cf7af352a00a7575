//! Root data for the classical families and G2.
//!
//! Classical systems live in the usual ε-basis and use the Euclidean dot
//! product. G2 is written in simple-root coordinates with Gram matrix
//! `[[2, -3], [-3, 6]]` (short root squared length 2).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i64>;

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

/// A (family, rank) pair that has passed range validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SystemId {
    family: Family,
    rank: usize,
}

impl SystemId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        // Positive roots must fit the 64-bit subset representation.
        let ok = match family {
            Family::A => (1..=10).contains(&rank),
            Family::B | Family::C => (1..=8).contains(&rank),
            Family::D => (2..=8).contains(&rank),
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(SystemId { family, rank })
        } else {
            Err(Error::UnsupportedSystem(format!("{family:?}{rank}")))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G2 => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn group_order(self) -> usize {
        let n = self.rank;
        let fact = |m: usize| (1..=m).product::<usize>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1usize << n) * fact(n),
            Family::D => (1usize << (n - 1)) * fact(n),
            Family::G2 => 12,
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::G2 => f.write_str("G2"),
            fam => write!(f, "{fam:?}{}", self.rank),
        }
    }
}

impl FromStr for SystemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("G2") {
            return SystemId::new(Family::G2, 2);
        }
        let unsupported = || Error::UnsupportedSystem(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(unsupported()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        SystemId::new(family, rank).map_err(|_| unsupported())
    }
}

/// A vector in the ambient space (ε-basis, or simple-root basis for G2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| q(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    /// The basis vector with a one in position `i` (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut w = Weight::zero(dim);
        w.0[i] = Rational::one();
        w
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Rational) -> Weight {
        Weight(self.0.iter().map(|x| *x * c).collect())
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(Rational, Rational) -> Rational) -> Weight {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| f(*a, *b)).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -*x).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A root written as ± a positive root, by positive-root index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedRoot {
    pub index: u16,
    pub negative: bool,
}

impl SignedRoot {
    pub fn positive(index: usize) -> Self {
        SignedRoot { index: index as u16, negative: false }
    }

    pub fn flip(self) -> Self {
        SignedRoot { negative: !self.negative, ..self }
    }

    /// `self` composed with a sign.
    pub fn with_sign(self, negative: bool) -> Self {
        SignedRoot { negative: self.negative ^ negative, ..self }
    }
}

/// Immutable root data. Positive roots are indexed in ascending
/// lexicographic order of their coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    id: SystemId,
    ambient_dim: usize,
    /// Gram matrix of the invariant form in the ambient basis.
    gram: Vec<Vec<Rational>>,
    euclidean: bool,
    positive: Vec<Weight>,
    /// Simple-root coordinates of each positive root.
    positive_simple: Vec<Vec<i64>>,
    heights: Vec<i64>,
    /// `simple[i]` is the positive-root index of α_{i+1}.
    simple: Vec<usize>,
    fundamental: Vec<Weight>,
    rho: Weight,
    lookup: BTreeMap<Weight, SignedRoot>,
    /// Inverse Gram matrix of the simple roots, for coordinate recovery.
    simple_gram_inv: Vec<Vec<Rational>>,
    /// `simple_action[i][j]` = s_{i+1}(β_j).
    simple_action: Vec<Vec<SignedRoot>>,
    /// All (i, j, k) with i < j and β_i + β_j = β_k.
    sums: Vec<(usize, usize, usize)>,
}

impl RootSystem {
    pub fn new(id: SystemId) -> Self {
        let n = id.rank;
        let (ambient_dim, roots, simple_roots, fundamental, gram) = match id.family {
            Family::A => type_a(n),
            Family::B => type_bc(n, false),
            Family::C => type_bc(n, true),
            Family::D => type_d(n),
            Family::G2 => type_g2(),
        };
        let euclidean = id.family != Family::G2;
        let mut positive: Vec<Weight> = roots;
        positive.sort();
        positive.dedup();
        assert_eq!(positive.len(), id.num_positive_roots());

        let mut lookup = BTreeMap::new();
        for (i, r) in positive.iter().enumerate() {
            lookup.insert(r.clone(), SignedRoot::positive(i));
            lookup.insert(-r, SignedRoot::positive(i).flip());
        }
        let simple: Vec<usize> = simple_roots
            .iter()
            .map(|a| lookup[a].index as usize)
            .collect();

        let mut rho = Weight::zero(ambient_dim);
        for r in &positive {
            rho = &rho + r;
        }
        rho = rho.scale(half());

        let mut rs = RootSystem {
            id,
            ambient_dim,
            gram,
            euclidean,
            positive,
            positive_simple: Vec::new(),
            heights: Vec::new(),
            simple,
            fundamental,
            rho,
            lookup,
            simple_gram_inv: Vec::new(),
            simple_action: Vec::new(),
            sums: Vec::new(),
        };

        let g: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| rs.pairing_unchecked(rs.simple_root(i), rs.simple_root(j))).collect())
            .collect();
        rs.simple_gram_inv = invert(g);

        rs.positive_simple = rs
            .positive
            .iter()
            .map(|r| rs.simple_root_coords(r).expect("positive root outside root lattice"))
            .collect();
        rs.heights = rs.positive_simple.iter().map(|c| c.iter().sum()).collect();
        debug_assert!(rs.positive_simple.iter().all(|c| c.iter().all(|&m| m >= 0)));

        rs.simple_action = (0..n)
            .map(|i| {
                let a = rs.simple_root(i).clone();
                rs.positive
                    .iter()
                    .map(|b| {
                        let img = rs.reflect(&a, b);
                        rs.lookup[&img]
                    })
                    .collect()
            })
            .collect();

        let m = rs.positive.len();
        for i in 0..m {
            for j in (i + 1)..m {
                let s = &rs.positive[i] + &rs.positive[j];
                if let Some(sr) = rs.lookup.get(&s) {
                    if !sr.negative {
                        rs.sums.push((i, j, sr.index as usize));
                    }
                }
            }
        }
        rs
    }

    pub fn id(&self) -> SystemId {
        self.id
    }

    pub fn family(&self) -> Family {
        self.id.family
    }

    pub fn rank(&self) -> usize {
        self.id.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_root(&self, i: usize) -> &Weight {
        &self.positive[i]
    }

    /// Simple-root coordinates of positive root `i`.
    pub fn positive_root_simple_coords(&self, i: usize) -> &[i64] {
        &self.positive_simple[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.heights[i]
    }

    /// Positive-root index of the simple root α_{i+1} (0-based `i`).
    pub fn simple_index(&self, i: usize) -> usize {
        self.simple[i]
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.positive[self.simple[i]]
    }

    /// Fundamental weight χ_{p+1} (0-based `p`).
    pub fn fundamental_weight(&self, p: usize) -> &Weight {
        &self.fundamental[p]
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Signed index of a root, or `None` if `v` is not a root.
    pub fn root_index(&self, v: &Weight) -> Option<SignedRoot> {
        self.lookup.get(v).copied()
    }

    pub fn signed_root(&self, r: SignedRoot) -> Weight {
        let b = &self.positive[r.index as usize];
        if r.negative {
            -b
        } else {
            b.clone()
        }
    }

    pub fn simple_reflection_action(&self, i: usize) -> &[SignedRoot] {
        &self.simple_action[i]
    }

    pub(crate) fn root_sums(&self) -> &[(usize, usize, usize)] {
        &self.sums
    }

    fn check_dim(&self, x: &Weight) -> Result<()> {
        if x.dim() == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.ambient_dim, found: x.dim() })
        }
    }

    /// The W-invariant form.
    pub fn pairing(&self, x: &Weight, y: &Weight) -> Result<Rational> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.pairing_unchecked(x, y))
    }

    pub(crate) fn pairing_unchecked(&self, x: &Weight, y: &Weight) -> Rational {
        if self.euclidean {
            x.0.iter().zip(&y.0).map(|(a, b)| *a * *b).sum()
        } else {
            let mut acc = Rational::zero();
            for (i, a) in x.0.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in y.0.iter().enumerate() {
                    acc += *a * self.gram[i][j] * *b;
                }
            }
            acc
        }
    }

    /// ⟨λ, α^∨⟩ with α^∨ = 2α/⟨α,α⟩.
    pub fn coroot_pairing(&self, lambda: &Weight, alpha: &Weight) -> Rational {
        q(2) * self.pairing_unchecked(lambda, alpha) / self.pairing_unchecked(alpha, alpha)
    }

    /// Reflection of `lambda` in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &Weight, lambda: &Weight) -> Weight {
        let c = self.coroot_pairing(lambda, alpha);
        lambda - &alpha.scale(c)
    }

    /// Integer coordinates of γ in the simple-root basis.
    pub fn simple_root_coords(&self, gamma: &Weight) -> Result<Vec<i64>> {
        self.check_dim(gamma)?;
        let n = self.rank();
        let b: Vec<Rational> = (0..n)
            .map(|i| self.pairing_unchecked(gamma, self.simple_root(i)))
            .collect();
        let m: Vec<Rational> = (0..n)
            .map(|i| (0..n).map(|j| self.simple_gram_inv[i][j] * b[j]).sum())
            .collect();
        let mut back = Weight::zero(self.ambient_dim);
        for (i, c) in m.iter().enumerate() {
            back = &back + &self.simple_root(i).scale(*c);
        }
        if &back != gamma || m.iter().any(|c| !c.is_integer()) {
            return Err(Error::NotInRootLattice);
        }
        Ok(m.iter().map(|c| c.to_integer()).collect())
    }

    /// Whether `v` is a root or a nonzero rational multiple of one.
    pub fn is_root_multiple(&self, v: &Weight) -> bool {
        if v.is_zero() {
            return false;
        }
        self.positive.iter().any(|r| {
            // v = c r with c ≠ 0 iff the first nonzero ratio matches everywhere
            let pivot = r.0.iter().position(|x| !x.is_zero()).unwrap();
            let c = v.0[pivot] / r.0[pivot];
            !c.is_zero() && &r.scale(c) == v
        })
    }

    /// A copy of the form scaled by `c`, for normalization-independence checks.
    pub fn scaled_pairing(&self, x: &Weight, y: &Weight, c: Rational) -> Rational {
        self.pairing_unchecked(x, y) * c
    }
}

/// Whether all simple-root coordinates are nonnegative.
pub fn is_nonnegative_combination(coords: &[i64]) -> bool {
    coords.iter().all(|&c| c >= 0)
}

fn invert(mut a: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular Gram matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

type Construction = (usize, Vec<Weight>, Vec<Weight>, Vec<Weight>, Vec<Vec<Rational>>);

fn identity(dim: usize) -> Vec<Vec<Rational>> {
    (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

fn eps_combo(dim: usize, terms: &[(usize, i64)]) -> Weight {
    let mut w = Weight::zero(dim);
    for &(i, c) in terms {
        w.0[i] += q(c);
    }
    w
}

fn partial_sum(dim: usize, p: usize) -> Weight {
    let mut w = Weight::zero(dim);
    for i in 0..p {
        w.0[i] = Rational::one();
    }
    w
}

fn type_a(n: usize) -> Construction {
    let dim = n + 1;
    let mut roots = Vec::new();
    for p in 0..dim {
        for r in (p + 1)..dim {
            roots.push(eps_combo(dim, &[(p, 1), (r, -1)]));
        }
    }
    let simple = (0..n).map(|i| eps_combo(dim, &[(i, 1), (i + 1, -1)])).collect();
    let fundamental = (1..=n).map(|p| partial_sum(dim, p)).collect();
    (dim, roots, simple, fundamental, identity(dim))
}

fn type_bc(n: usize, c: bool) -> Construction {
    let dim = n;
    let short = if c { 2 } else { 1 };
    let mut roots = Vec::new();
    for p in 0..n {
        roots.push(eps_combo(dim, &[(p, short)]));
        for r in (p + 1)..n {
            roots.push(eps_combo(dim, &[(p, 1), (r, -1)]));
            roots.push(eps_combo(dim, &[(p, 1), (r, 1)]));
        }
    }
    let mut simple: Vec<Weight> =
        (0..n - 1).map(|i| eps_combo(dim, &[(i, 1), (i + 1, -1)])).collect();
    simple.push(eps_combo(dim, &[(n - 1, short)]));
    let mut fundamental: Vec<Weight> = (1..n).map(|p| partial_sum(dim, p)).collect();
    let last = partial_sum(dim, n);
    fundamental.push(if c { last } else { last.scale(half()) });
    (dim, roots, simple, fundamental, identity(dim))
}

fn type_d(n: usize) -> Construction {
    let dim = n;
    let mut roots = Vec::new();
    for p in 0..n {
        for r in (p + 1)..n {
            roots.push(eps_combo(dim, &[(p, 1), (r, -1)]));
            roots.push(eps_combo(dim, &[(p, 1), (r, 1)]));
        }
    }
    let mut simple: Vec<Weight> =
        (0..n - 1).map(|i| eps_combo(dim, &[(i, 1), (i + 1, -1)])).collect();
    simple.push(eps_combo(dim, &[(n - 2, 1), (n - 1, 1)]));
    let mut fundamental: Vec<Weight> = (1..n - 1).map(|p| partial_sum(dim, p)).collect();
    let mut spin_minus = partial_sum(dim, n - 1);
    spin_minus.0[n - 1] = q(-1);
    fundamental.push(spin_minus.scale(half()));
    fundamental.push(partial_sum(dim, n).scale(half()));
    (dim, roots, simple, fundamental, identity(dim))
}

fn type_g2() -> Construction {
    let roots = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
        .iter()
        .map(|c| Weight::from_integers(c))
        .collect();
    let simple = vec![Weight::from_integers(&[1, 0]), Weight::from_integers(&[0, 1])];
    let fundamental = vec![Weight::from_integers(&[2, 1]), Weight::from_integers(&[3, 2])];
    let gram = vec![vec![q(2), q(-3)], vec![q(-3), q(6)]];
    (2, roots, simple, fundamental, gram)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn root_counts() {
        for (name, count) in [("A1", 1), ("A2", 3), ("A4", 10), ("B3", 9), ("C4", 16), ("D4", 12), ("D2", 2), ("G2", 6)] {
            assert_eq!(sys(name).num_positive(), count, "{name}");
        }
    }

    #[test]
    fn a2_roots_and_rho() {
        let rs = sys("A2");
        let expect = [[0, 1, -1], [1, -1, 0], [1, 0, -1]];
        for (r, e) in rs.positive_roots().iter().zip(expect) {
            assert_eq!(r, &Weight::from_integers(&e));
        }
        assert_eq!(rs.rho(), &Weight::from_integers(&[1, 0, -1]));
        let a1 = rs.simple_root(0).clone();
        let a2 = rs.simple_root(1).clone();
        assert_eq!(rs.pairing(rs.rho(), &a1).unwrap(), q(1));
        assert_eq!(rs.pairing(rs.rho(), &(&a1 + &a2)).unwrap(), q(2));
        assert_eq!(rs.pairing(rs.rho(), &Weight::zero(3)).unwrap(), q(0));
    }

    #[test]
    fn spin_weights() {
        let b3 = sys("B3");
        let h = half();
        assert_eq!(b3.fundamental_weight(2), &Weight::new(vec![h, h, h]));
        let d4 = sys("D4");
        assert_eq!(d4.num_positive(), 12);
        assert_eq!(d4.fundamental_weight(3), &Weight::new(vec![h, h, h, h]));
        assert_eq!(d4.fundamental_weight(2), &Weight::new(vec![h, h, h, -h]));
    }

    #[test]
    fn simple_coords_examples() {
        let rs = sys("A2");
        assert_eq!(rs.simple_root_coords(rs.simple_root(1)).unwrap(), vec![0, 1]);
        assert_eq!(rs.simple_root_coords(&rs.rho().scale(q(2))).unwrap(), vec![2, 2]);
        assert_eq!(
            rs.simple_root_coords(&Weight::from_integers(&[1, 0, -1])).unwrap(),
            vec![1, 1]
        );
        // ε1 is not in the A2 root lattice
        assert_eq!(
            rs.simple_root_coords(&Weight::from_integers(&[1, 0, 0])),
            Err(Error::NotInRootLattice)
        );
        let b2 = sys("B2");
        assert_eq!(
            b2.simple_root_coords(&Weight::new(vec![h2(), h2()])),
            Err(Error::NotInRootLattice)
        );
    }

    fn h2() -> Rational {
        half()
    }

    #[test]
    fn fundamental_weights_dual_to_coroots() {
        for name in ["A1", "A3", "B1", "B3", "C3", "D2", "D3", "D5", "G2"] {
            let rs = sys(name);
            for p in 0..rs.rank() {
                for i in 0..rs.rank() {
                    let v = rs.coroot_pairing(rs.fundamental_weight(p), rs.simple_root(i));
                    assert_eq!(v, q((p == i) as i64), "{name} p={p} i={i}");
                }
            }
        }
    }

    #[test]
    fn simple_reflections_permute_other_positive_roots() {
        for name in ["A3", "B3", "C3", "D4", "G2"] {
            let rs = sys(name);
            for i in 0..rs.rank() {
                let act = rs.simple_reflection_action(i);
                for (j, img) in act.iter().enumerate() {
                    if j == rs.simple_index(i) {
                        assert_eq!(*img, SignedRoot::positive(j).flip());
                    } else {
                        assert!(!img.negative);
                    }
                }
                // invariance of the form
                let a = rs.simple_root(i);
                for x in rs.positive_roots() {
                    for y in rs.positive_roots() {
                        assert_eq!(
                            rs.pairing_unchecked(&rs.reflect(a, x), &rs.reflect(a, y)),
                            rs.pairing_unchecked(x, y)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn g2_short_root_norm() {
        let rs = sys("G2");
        assert_eq!(rs.pairing(rs.simple_root(0), rs.simple_root(0)).unwrap(), q(2));
        assert_eq!(rs.pairing(rs.simple_root(1), rs.simple_root(1)).unwrap(), q(6));
        assert_eq!(rs.rho(), &Weight::from_integers(&[5, 3]));
    }

    #[test]
    fn parse_names() {
        assert!("E6".parse::<SystemId>().is_err());
        assert!("D1".parse::<SystemId>().is_err());
        assert!("A0".parse::<SystemId>().is_err());
        assert_eq!("b3".parse::<SystemId>().unwrap().to_string(), "B3");
        assert_eq!("G2".parse::<SystemId>().unwrap().group_order(), 12);
        assert_eq!("D4".parse::<SystemId>().unwrap().group_order(), 192);
    }

    #[test]
    fn dimension_mismatch() {
        let rs = sys("A2");
        assert!(matches!(
            rs.pairing(&Weight::zero(2), rs.rho()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn root_multiples() {
        let b2 = sys("B2");
        assert!(b2.is_root_multiple(&Weight::from_integers(&[2, 0])));
        assert!(!b2.is_root_multiple(&Weight::zero(2)));
        let d3 = sys("D3");
        assert!(!d3.is_root_multiple(&Weight::from_integers(&[2, 0, 0])));
    }
}
