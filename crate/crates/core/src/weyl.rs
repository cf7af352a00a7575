//! Weyl group elements as signed permutations of the positive roots, and
//! the fully enumerated group with its Bruhat order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::{Rational, RootSystem, SignedRoot, SystemId, Weight};
use crate::subset::RootSubset;

/// Enumeration cap matching the largest group among the supported ranks (B5/C5).
pub const DEFAULT_GROUP_CAP: usize = 3840;

/// A Weyl group element, stored as its action on the positive roots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    system: SystemId,
    action: Vec<SignedRoot>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            system: rs.id(),
            action: (0..rs.num_positive()).map(SignedRoot::positive).collect(),
        }
    }

    /// s_{i+1} for 0-based `i`.
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        WeylElement { system: rs.id(), action: rs.simple_reflection_action(i).to_vec() }
    }

    /// The reflection s_β in positive root `beta`.
    pub fn reflection(rs: &RootSystem, beta: usize) -> Self {
        let b = rs.positive_root(beta);
        let action = rs
            .positive_roots()
            .iter()
            .map(|r| rs.root_index(&rs.reflect(b, r)).expect("reflection permutes roots"))
            .collect();
        WeylElement { system: rs.id(), action }
    }

    /// Product of simple reflections `s_{w[0]} ⋯ s_{w[l-1]}`.
    pub fn from_word(rs: &RootSystem, word: &ReducedWord) -> Result<Self> {
        let mut w = WeylElement::identity(rs);
        for &i in word.letters() {
            if i >= rs.rank() {
                return Err(Error::MalformedWord(word.to_string()));
            }
            w = w.compose(&WeylElement::simple_reflection(rs, i))?;
        }
        Ok(w)
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn root_action(&self) -> &[SignedRoot] {
        &self.action
    }

    /// Image of a signed root.
    pub fn image(&self, r: SignedRoot) -> SignedRoot {
        self.action[r.index as usize].with_sign(r.negative)
    }

    /// `self ∘ other`: act by `other` first.
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.system != other.system {
            return Err(Error::SystemMismatch { left: self.system, right: other.system });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &WeylElement) -> WeylElement {
        let action = other.action.iter().map(|&r| self.image(r)).collect();
        WeylElement { system: self.system, action }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut action = vec![SignedRoot::positive(0); self.action.len()];
        for (i, r) in self.action.iter().enumerate() {
            action[r.index as usize] = SignedRoot::positive(i).with_sign(r.negative);
        }
        WeylElement { system: self.system, action }
    }

    /// Φ_w = {α > 0 : wα < 0}.
    pub fn inversion_set(&self) -> RootSubset {
        RootSubset::from_indices(
            self.action.len(),
            self.action.iter().enumerate().filter(|(_, r)| r.negative).map(|(i, _)| i),
        )
    }

    pub fn length(&self) -> usize {
        self.action.iter().filter(|r| r.negative).count()
    }

    pub fn is_identity(&self) -> bool {
        self.action.iter().enumerate().all(|(i, r)| !r.negative && r.index as usize == i)
    }

    /// Whether s_{i+1} is a right descent, i.e. w(α_{i+1}) < 0.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        self.action[rs.simple_index(i)].negative
    }

    /// Reduced word obtained by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> ReducedWord {
        let mut cur = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = (0..rs.rank()).find(|&i| cur.has_right_descent(rs, i)) {
            letters.push(i);
            cur = cur.compose_unchecked(&WeylElement::simple_reflection(rs, i));
        }
        letters.reverse();
        ReducedWord(letters)
    }

    /// Action on the ambient space, through a reduced word.
    pub fn apply(&self, rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
        if self.system != rs.id() {
            return Err(Error::SystemMismatch { left: self.system, right: rs.id() });
        }
        if lambda.dim() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: rs.ambient_dim(), found: lambda.dim() });
        }
        let mut v = lambda.clone();
        for &i in self.reduced_word(rs).letters().iter().rev() {
            v = rs.reflect(rs.simple_root(i), &v);
        }
        Ok(v)
    }

    /// Builds an element of a classical group from its action on ε_1..ε_n:
    /// `perm[j] = (k, negative)` means ε_{j+1} ↦ ±ε_{k+1}. Fails unless the
    /// result is a Weyl group element (in particular, D needs an even number
    /// of sign changes).
    pub fn from_signed_permutation(rs: &RootSystem, perm: &[(usize, bool)]) -> Result<Self> {
        let dim = rs.ambient_dim();
        if perm.len() != dim || rs.family() == crate::root_system::Family::G2 {
            return Err(Error::NotASignedPermutation);
        }
        let mut seen = vec![false; dim];
        for &(k, _) in perm {
            if k >= dim || seen[k] {
                return Err(Error::NotASignedPermutation);
            }
            seen[k] = true;
        }
        let mut action = Vec::with_capacity(rs.num_positive());
        for r in rs.positive_roots() {
            let mut coords = vec![Rational::zero(); dim];
            for (&c, &(k, neg)) in r.coords().iter().zip(perm) {
                coords[k] += if neg { -c } else { c };
            }
            action.push(rs.root_index(&Weight::new(coords)).ok_or(Error::NotASignedPermutation)?);
        }
        let w = WeylElement { system: rs.id(), action };
        // Diagram automorphisms also permute the roots; only W elements are
        // recovered from their inversion set.
        let k = crate::inversion::kostant_element(rs, w.inversion_set())
            .map_err(|_| Error::NotASignedPermutation)?;
        if k != w {
            return Err(Error::NotASignedPermutation);
        }
        Ok(w)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({}, ", self.system)?;
        f.debug_list()
            .entries(self.action.iter().map(|r| {
                let i = r.index as i32 + 1;
                if r.negative {
                    -i
                } else {
                    i
                }
            }))
            .finish()?;
        f.write_str(")")
    }
}

/// A word in the simple reflections (0-based letters). Serialized as
/// 1-based, comma-separated indices; the empty string is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses `"1,2,1"`; letters must lie in `1..=rank`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ReducedWord(Vec::new()));
        }
        s.split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
                _ => Err(Error::MalformedWord(String::from(s))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ReducedWord)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

/// The enumerated Weyl group. Elements are indexed breadth-first by length,
/// ties broken by the lexicographic order of their root action.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    system: RootSystem,
    elements: Vec<WeylElement>,
    lengths: Vec<usize>,
    inversions: Vec<RootSubset>,
    by_inversion: BTreeMap<u64, usize>,
    words: Vec<ReducedWord>,
    right_simple: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    reflections: Vec<usize>,
    /// Images of the ambient basis vectors, per element.
    matrices: Vec<Vec<Weight>>,
    /// Bit `u` of row `w` is set iff u ≤ w.
    bruhat: Vec<u64>,
    stride: usize,
    longest: usize,
}

impl WeylGroup {
    pub fn new(system: RootSystem) -> Result<Self> {
        Self::with_cap(system, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(system: RootSystem, cap: usize) -> Result<Self> {
        let order = system.id().group_order();
        if order > cap {
            return Err(Error::GroupTooLarge { order, cap });
        }
        let rank = system.rank();
        let simple: Vec<WeylElement> =
            (0..rank).map(|i| WeylElement::simple_reflection(&system, i)).collect();

        let mut elements = vec![WeylElement::identity(&system)];
        let mut level = elements.clone();
        while !level.is_empty() {
            let mut next = BTreeSet::new();
            for w in &level {
                for (i, s) in simple.iter().enumerate() {
                    if !w.has_right_descent(&system, i) {
                        next.insert(w.compose_unchecked(s));
                    }
                }
            }
            level = next.into_iter().collect();
            elements.extend(level.iter().cloned());
        }
        assert_eq!(elements.len(), order, "enumeration incomplete");

        let lengths: Vec<usize> = elements.iter().map(WeylElement::length).collect();
        let inversions: Vec<RootSubset> = elements.iter().map(WeylElement::inversion_set).collect();
        let by_inversion: BTreeMap<u64, usize> =
            inversions.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
        let find = |w: &WeylElement| by_inversion[&w.inversion_set().bits()];

        let words = elements.iter().map(|w| w.reduced_word(&system)).collect();
        let right_simple: Vec<Vec<usize>> = elements
            .iter()
            .map(|w| simple.iter().map(|s| find(&w.compose_unchecked(s))).collect())
            .collect();
        let inverse = elements.iter().map(|w| find(&w.inverse())).collect();
        let refl_elems: Vec<WeylElement> = (0..system.num_positive())
            .map(|b| WeylElement::reflection(&system, b))
            .collect();
        let reflections = refl_elems.iter().map(find).collect();

        // Ambient matrices, built along the BFS: (w s_i)(e_j) = w(s_i e_j).
        let dim = system.ambient_dim();
        let mut matrices: Vec<Vec<Weight>> = vec![Vec::new(); elements.len()];
        matrices[0] = (0..dim).map(|j| Weight::basis(dim, j)).collect();
        let reflected_basis: Vec<Vec<Weight>> = (0..rank)
            .map(|i| (0..dim).map(|j| system.reflect(system.simple_root(i), &Weight::basis(dim, j))).collect())
            .collect();
        for w in 0..elements.len() {
            for i in 0..rank {
                let u = right_simple[w][i];
                if lengths[u] == lengths[w] + 1 && matrices[u].is_empty() {
                    let m: Vec<Weight> = reflected_basis[i]
                        .iter()
                        .map(|v| apply_matrix(&matrices[w], v))
                        .collect();
                    matrices[u] = m;
                }
            }
        }

        let n = elements.len();
        let stride = n.div_ceil(64);
        let mut bruhat = vec![0u64; n * stride];
        for w in 0..n {
            bruhat[w * stride + w / 64] |= 1 << (w % 64);
        }
        for w in 0..n {
            for t in &refl_elems {
                let u = find(&elements[w].compose_unchecked(t));
                if lengths[u] == lengths[w] + 1 {
                    for k in 0..stride {
                        let b = bruhat[w * stride + k];
                        bruhat[u * stride + k] |= b;
                    }
                }
            }
        }

        let longest = n - 1;
        debug_assert_eq!(lengths[longest], system.num_positive());
        Ok(WeylGroup {
            system,
            elements,
            lengths,
            inversions,
            by_inversion,
            words,
            right_simple,
            inverse,
            reflections,
            matrices,
            bruhat,
            stride,
            longest,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn id(&self) -> SystemId {
        self.system.id()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, ix: usize) -> &WeylElement {
        &self.elements[ix]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn length(&self, ix: usize) -> usize {
        self.lengths[ix]
    }

    pub fn inversion_set(&self, ix: usize) -> RootSubset {
        self.inversions[ix]
    }

    pub fn word(&self, ix: usize) -> &ReducedWord {
        &self.words[ix]
    }

    pub fn inverse(&self, ix: usize) -> usize {
        self.inverse[ix]
    }

    /// Index of w·s_{i+1}.
    pub fn right_mul_simple(&self, ix: usize, i: usize) -> usize {
        self.right_simple[ix][i]
    }

    /// Index of the reflection in positive root `beta`.
    pub fn reflection(&self, beta: usize) -> usize {
        self.reflections[beta]
    }

    /// Element with the given inversion set, if any.
    pub fn by_inversion_set(&self, s: RootSubset) -> Option<usize> {
        self.by_inversion.get(&s.bits()).copied()
    }

    pub fn index_of(&self, w: &WeylElement) -> Result<usize> {
        if w.system() != self.id() {
            return Err(Error::SystemMismatch { left: w.system(), right: self.id() });
        }
        Ok(self.by_inversion[&w.inversion_set().bits()])
    }

    pub fn index_of_word(&self, word: &ReducedWord) -> Result<usize> {
        self.index_of(&WeylElement::from_word(&self.system, word)?)
    }

    pub fn parse_word(&self, s: &str) -> Result<usize> {
        self.index_of_word(&ReducedWord::parse(s, self.system.rank())?)
    }

    pub fn compose(&self, u: usize, w: usize) -> usize {
        self.by_inversion[&self.elements[u].compose_unchecked(&self.elements[w]).inversion_set().bits()]
    }

    pub fn bruhat_leq(&self, u: usize, w: usize) -> bool {
        self.bruhat[w * self.stride + u / 64] >> (u % 64) & 1 == 1
    }

    /// Element-level Bruhat comparison.
    pub fn bruhat_leq_elements(&self, u: &WeylElement, w: &WeylElement) -> Result<bool> {
        Ok(self.bruhat_leq(self.index_of(u)?, self.index_of(w)?))
    }

    /// Action on the ambient space.
    pub fn apply(&self, ix: usize, lambda: &Weight) -> Weight {
        apply_matrix(&self.matrices[ix], lambda)
    }

    /// For classical types, the signed permutation of ε_1..ε_n induced by the
    /// element: entry j is `(k, negative)` with ε_{j+1} ↦ ±ε_{k+1}.
    pub fn signed_permutation(&self, ix: usize) -> Option<Vec<(usize, bool)>> {
        if self.system.family() == crate::root_system::Family::G2 {
            return None;
        }
        self.matrices[ix]
            .iter()
            .map(|col| {
                let nz: Vec<(usize, &Rational)> =
                    col.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                match nz.as_slice() {
                    [(k, c)] if c.abs() == Rational::one() => Some((*k, **c < Rational::zero())),
                    _ => None,
                }
            })
            .collect()
    }

    /// Every reduced word of an element.
    pub fn all_reduced_words(&self, ix: usize) -> Vec<ReducedWord> {
        if ix == 0 {
            return vec![ReducedWord::default()];
        }
        let mut out = Vec::new();
        for i in 0..self.system.rank() {
            if self.elements[ix].has_right_descent(&self.system, i) {
                for mut w in self.all_reduced_words(self.right_simple[ix][i]) {
                    w.0.push(i);
                    out.push(w);
                }
            }
        }
        out
    }

    /// Indices of all elements of a given length.
    pub fn of_length(&self, l: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&i| self.lengths[i] == l)
    }
}

fn apply_matrix(m: &[Weight], lambda: &Weight) -> Weight {
    let mut out = Weight::zero(lambda.dim());
    for (c, col) in lambda.coords().iter().zip(m) {
        if !c.is_zero() {
            out = &out + &col.scale(*c);
        }
    }
    out
}
