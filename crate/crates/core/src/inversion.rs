//! Closed/coclosed root subsets, recovery of an element from its inversion
//! set, and decompositions of the positive roots into inversion sets.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem, Weight};
use crate::subset::RootSubset;
use crate::weyl::{ReducedWord, WeylElement, WeylGroup};

/// Closed under root addition: α, β ∈ S and α+β a root imply α+β ∈ S.
pub fn is_closed(rs: &RootSystem, s: RootSubset) -> bool {
    rs.root_sums()
        .iter()
        .all(|&(i, j, k)| !(s.contains(i) && s.contains(j)) || s.contains(k))
}

pub fn is_coclosed(rs: &RootSystem, s: RootSubset) -> bool {
    is_closed(rs, s.complement())
}

/// The unique w with Φ_w = S.
///
/// Peels off a simple root α_i ∈ S, replaces S by s_i(S \ {α_i}) and
/// recurses; the letters collected this way spell w from right to left.
pub fn kostant_element(rs: &RootSystem, s: RootSubset) -> Result<WeylElement> {
    if s.width() != rs.num_positive() {
        return Err(Error::DimensionMismatch { expected: rs.num_positive(), found: s.width() });
    }
    if !is_closed(rs, s) {
        return Err(Error::NotClosed);
    }
    if !is_coclosed(rs, s) {
        return Err(Error::NotCoclosed);
    }
    let mut cur = s;
    let mut letters = Vec::new();
    while !cur.is_empty() {
        let i = (0..rs.rank())
            .find(|&i| cur.contains(rs.simple_index(i)))
            .ok_or(Error::NotClosed)?;
        let act = rs.simple_reflection_action(i);
        let mut next = RootSubset::empty(cur.width());
        for j in cur.iter().filter(|&j| j != rs.simple_index(i)) {
            next.insert(act[j].index as usize);
        }
        letters.push(i);
        cur = next;
    }
    letters.reverse();
    let w = WeylElement::from_word(rs, &ReducedWord::new(letters))?;
    if w.inversion_set() != s {
        return Err(Error::NotClosed);
    }
    Ok(w)
}

/// An ordered tuple of group elements whose inversion sets partition Δ⁺.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    parts: Vec<usize>,
}

impl Decomposition {
    /// Validates Δ⁺ = ⊔ Φ_{w_i}.
    pub fn new(group: &WeylGroup, parts: Vec<usize>) -> Result<Self> {
        let mut covered = RootSubset::empty(group.system().num_positive());
        for &w in &parts {
            let inv = group.inversion_set(w);
            if !covered.is_disjoint(inv) {
                return Err(Error::Precondition("inversion sets are not disjoint"));
            }
            covered = covered.union(inv);
        }
        if covered != RootSubset::full(covered.width()) {
            return Err(Error::Precondition("inversion sets do not cover the positive roots"));
        }
        Ok(Decomposition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        Decomposition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn nonidentity_parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().copied().filter(|&w| w != 0)
    }
}

/// Depth-first search for unordered decompositions. Each branch takes a part
/// whose inversion set contains the lowest uncovered root, so every set of
/// parts is produced once, sorted by lowest root.
pub struct DecompositionSearch<'g> {
    group: &'g WeylGroup,
    /// Non-identity elements bucketed by the lowest root of their inversion set.
    by_lowest: Vec<Vec<usize>>,
}

impl<'g> DecompositionSearch<'g> {
    pub fn new(group: &'g WeylGroup) -> Self {
        let mut by_lowest = vec![Vec::new(); group.system().num_positive()];
        for w in 1..group.order() {
            let r = group.inversion_set(w).first().expect("non-identity element");
            by_lowest[r].push(w);
        }
        DecompositionSearch { group, by_lowest }
    }

    /// Candidates for the part containing root 0; the search partitions on these.
    pub fn first_parts(&self) -> &[usize] {
        &self.by_lowest[0]
    }

    /// Every set of at most `max_parts` non-identity elements partitioning Δ⁺.
    pub fn for_each_set(&self, max_parts: usize, mut f: impl FnMut(&[usize])) {
        let full = RootSubset::full(self.group.system().num_positive());
        let mut chosen = Vec::new();
        self.dfs(full, max_parts, &mut chosen, &mut f);
    }

    /// The sets whose first part is `first`.
    pub fn for_each_set_with_first(&self, first: usize, max_parts: usize, mut f: impl FnMut(&[usize])) {
        if max_parts == 0 || !self.by_lowest[0].contains(&first) {
            return;
        }
        let full = RootSubset::full(self.group.system().num_positive());
        let mut chosen = vec![first];
        self.dfs(full.difference(self.group.inversion_set(first)), max_parts - 1, &mut chosen, &mut f);
    }

    pub fn sets(&self, max_parts: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_set(max_parts, |s| out.push(s.to_vec()));
        out
    }

    fn dfs(&self, uncovered: RootSubset, parts_left: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if uncovered.is_empty() {
            f(chosen);
            return;
        }
        match parts_left {
            0 => {}
            // A single remaining part is forced: the remainder must itself be an inversion set.
            1 => {
                if let Some(w) = self.group.by_inversion_set(uncovered) {
                    chosen.push(w);
                    f(chosen);
                    chosen.pop();
                }
            }
            _ => {
                let r = uncovered.first().unwrap();
                for &w in &self.by_lowest[r] {
                    let inv = self.group.inversion_set(w);
                    if inv.is_subset(uncovered) {
                        chosen.push(w);
                        self.dfs(uncovered.difference(inv), parts_left - 1, chosen, f);
                        chosen.pop();
                    }
                }
            }
        }
    }
}

/// Streams every ordered k-tuple satisfying Δ⁺ = ⊔ Φ_{w_i}, each once.
/// Identity parts appear only when `allow_identity_parts` is set.
pub fn enumerate_decompositions(
    group: &WeylGroup,
    k: usize,
    allow_identity_parts: bool,
    mut f: impl FnMut(&Decomposition),
) {
    let search = DecompositionSearch::new(group);
    search.for_each_set(k, |set| {
        if set.len() == k || allow_identity_parts {
            for_each_arrangement(set, k, &mut f);
        }
    });
}

pub fn decompositions(group: &WeylGroup, k: usize, allow_identity_parts: bool) -> Vec<Decomposition> {
    let mut out = Vec::new();
    enumerate_decompositions(group, k, allow_identity_parts, |d| out.push(d.clone()));
    out
}

/// All orderings of `set` padded with identities to `k` slots.
pub fn for_each_arrangement(set: &[usize], k: usize, f: &mut impl FnMut(&Decomposition)) {
    fn go(
        set: &[usize],
        used: &mut Vec<bool>,
        identities_left: usize,
        slots: &mut Vec<usize>,
        k: usize,
        f: &mut impl FnMut(&Decomposition),
    ) {
        if slots.len() == k {
            f(&Decomposition::from_parts_unchecked(slots.clone()));
            return;
        }
        if identities_left > 0 {
            slots.push(0);
            go(set, used, identities_left - 1, slots, k, f);
            slots.pop();
        }
        let mut order: Vec<usize> = (0..set.len()).filter(|&i| !used[i]).collect();
        order.sort_by_key(|&i| set[i]);
        for i in order {
            used[i] = true;
            slots.push(set[i]);
            go(set, used, identities_left, slots, k, f);
            slots.pop();
            used[i] = false;
        }
    }
    if set.len() > k {
        return;
    }
    let mut used = vec![false; set.len()];
    go(set, &mut used, k - set.len(), &mut Vec::with_capacity(k), k, f);
}

/// At most rank-many parts differ from e.
pub fn nonidentity_count_bound(group: &WeylGroup, d: &Decomposition) -> bool {
    d.nonidentity_parts().count() <= group.system().rank()
}

/// Every sub-union of the parts' inversion sets is again an inversion set.
pub fn subfamily_unions_are_inversion_sets(group: &WeylGroup, d: &Decomposition) -> bool {
    let rs = group.system();
    let k = d.len();
    (0u32..(1 << k)).all(|mask| {
        let mut s = RootSubset::empty(rs.num_positive());
        for (i, &w) in d.parts().iter().enumerate() {
            if mask >> i & 1 == 1 {
                s = s.union(group.inversion_set(w));
            }
        }
        kostant_element(rs, s).is_ok()
    })
}

fn require_d(group: &WeylGroup) -> Result<()> {
    if group.system().family() == Family::D {
        Ok(())
    } else {
        Err(Error::WrongType { expected: "D", found: group.id() })
    }
}

/// For each root of `src` not involving ε_p, its index in `target` after
/// dropping coordinate p (1-based).
pub fn deletion_root_map(src: &RootSystem, target: &RootSystem, p: usize) -> Vec<Option<usize>> {
    src.positive_roots()
        .iter()
        .map(|r| {
            let c = r.coords();
            if !c[p - 1].is_zero() {
                return None;
            }
            let dropped: Vec<_> = c.iter().enumerate().filter(|(j, _)| *j != p - 1).map(|(_, x)| *x).collect();
            let s = target.root_index(&Weight::new(dropped)).expect("sub-root system");
            debug_assert!(!s.negative);
            Some(s.index as usize)
        })
        .collect()
}

fn check_deletion_pair(src: &WeylGroup, target: &WeylGroup, p: usize) -> Result<usize> {
    require_d(src)?;
    require_d(target)?;
    let n = src.system().rank();
    if target.system().rank() + 1 != n {
        return Err(Error::SystemMismatch { left: src.id(), right: target.id() });
    }
    if !(1..=n).contains(&p) {
        return Err(Error::InvalidCoordinate { index: p, dim: n });
    }
    Ok(n)
}

/// The element of D_{n-1} whose inversion set is Φ_w ∩ Δ⁺_p, re-indexed;
/// computed through [`kostant_element`].
pub fn restrict_by_deletion(src: &WeylGroup, target: &WeylGroup, w: usize, p: usize) -> Result<usize> {
    check_deletion_pair(src, target, p)?;
    let map = deletion_root_map(src.system(), target.system(), p);
    let mut s = RootSubset::empty(target.system().num_positive());
    for i in src.inversion_set(w).iter() {
        if let Some(j) = map[i] {
            s.insert(j);
        }
    }
    target.index_of(&kostant_element(target.system(), s)?)
}

/// Deletes ε_p (p ≥ 2) from an element of W(D_n) by the explicit
/// signed-permutation rule: keep the relative order and signs of the images
/// of the remaining basis vectors, then flip ε̄_{n-1} if w(ε_p) is negative.
pub fn delete_coordinate(src: &WeylGroup, target: &WeylGroup, w: usize, p: usize) -> Result<usize> {
    let n = check_deletion_pair(src, target, p)?;
    if p == 1 {
        return Err(Error::InvalidCoordinate { index: p, dim: n });
    }
    let perm = src.signed_permutation(w).expect("classical type");
    let (p_img, p_neg) = perm[p - 1];
    let mut out: Vec<(usize, bool)> = (0..n - 1)
        .map(|q| {
            let source = if q < p - 1 { q } else { q + 1 };
            let (img, neg) = perm[source];
            let img = if img < p_img { img } else { img - 1 };
            (img, neg)
        })
        .collect();
    if p_neg {
        for entry in out.iter_mut() {
            if entry.0 == n - 2 {
                entry.1 = !entry.1;
            }
        }
    }
    target.index_of(&WeylElement::from_signed_permutation(target.system(), &out)?)
}

/// The index of a part with w_i(ε_1) ∈ {-ε_1, …, -ε_n, ε_n}, if any.
pub fn dn_witness(group: &WeylGroup, d: &Decomposition) -> Result<Option<usize>> {
    require_d(group)?;
    let n = group.system().rank();
    Ok(d.parts().iter().position(|&w| {
        let (img, neg) = group.signed_permutation(w).expect("classical type")[0];
        neg || img == n - 1
    }))
}
