//! Structure constants of H*(G/B, ℤ) in the Schubert basis.
//!
//! Products are computed by localization: every class is determined by its
//! restrictions ξ_u(x) to the torus-fixed points, and the product expands
//! by a triangular solve along the Bruhat order. The restrictions are
//! evaluated at the point where each simple-root variable equals 1, so a
//! root contributes its height and all arithmetic stays in exact integers.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::root_system::{Family, SystemId};
use crate::weyl::{ReducedWord, WeylGroup};

/// Σ c_w [Ω_w], keyed by group index. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    system: SystemId,
    terms: BTreeMap<usize, i64>,
}

impl CohomologyClass {
    pub fn zero(system: SystemId) -> Self {
        CohomologyClass { system, terms: BTreeMap::new() }
    }

    /// The basis class [Ω_w].
    pub fn basis(system: SystemId, w: usize) -> Self {
        let mut c = Self::zero(system);
        c.add_term(w, 1);
        c
    }

    pub fn from_terms(system: SystemId, terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut c = Self::zero(system);
        for (w, k) in terms {
            c.add_term(w, k);
        }
        c
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn add_term(&mut self, w: usize, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn coefficient(&self, w: usize) -> i64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.terms.iter().map(|(w, c)| (*w, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }
}

/// Localization data for one enumerated group.
#[derive(Clone, Debug)]
pub struct SchubertEngine {
    group: WeylGroup,
    /// Column x: the nonzero ξ_u(x) at the height point, sorted by u.
    cols: Vec<Vec<(u32, i128)>>,
}

impl SchubertEngine {
    pub fn new(group: WeylGroup) -> Result<Self> {
        let n = group.order();
        let rs = group.system();
        let mut cols: Vec<Vec<(u32, i128)>> = Vec::with_capacity(n);
        cols.push(vec![(0, 1)]);
        let mut scratch = vec![0i128; n];
        for x in 1..n {
            // x = y s_i with ℓ(y) < ℓ(x); the last root of the word is y(α_i).
            let i = (0..rs.rank())
                .find(|&i| group.element(x).has_right_descent(rs, i))
                .expect("non-identity element has a descent");
            let y = group.right_mul_simple(x, i);
            let beta = group.element(y).image(crate::SignedRoot::positive(rs.simple_index(i)));
            debug_assert!(!beta.negative);
            let h = rs.height(beta.index as usize) as i128;
            let mut touched = Vec::new();
            for &(u, val) in &cols[y] {
                let u = u as usize;
                if scratch[u] == 0 {
                    touched.push(u);
                }
                scratch[u] = scratch[u].checked_add(val).ok_or(Error::Overflow)?;
                let us = group.right_mul_simple(u, i);
                if group.length(us) > group.length(u) {
                    if scratch[us] == 0 {
                        touched.push(us);
                    }
                    let add = val.checked_mul(h).ok_or(Error::Overflow)?;
                    scratch[us] = scratch[us].checked_add(add).ok_or(Error::Overflow)?;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let col: Vec<(u32, i128)> = touched
                .iter()
                .map(|&u| (u as u32, core::mem::take(&mut scratch[u])))
                .filter(|&(_, v)| v != 0)
                .collect();
            cols.push(col);
        }
        Ok(SchubertEngine { group, cols })
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn system(&self) -> SystemId {
        self.group.id()
    }

    /// ξ_u(x) with every simple-root variable set to 1.
    pub fn restriction(&self, u: usize, x: usize) -> i128 {
        let col = &self.cols[x];
        match col.binary_search_by_key(&(u as u32), |&(k, _)| k) {
            Ok(p) => col[p].1,
            Err(_) => 0,
        }
    }

    /// ξ_u(v) as a polynomial in the simple-root variables, from the
    /// canonical reduced word of `v`.
    pub fn billey_restriction(&self, u: usize, v: usize) -> Poly {
        self.billey_restriction_with_word(u, self.group.word(v))
            .expect("canonical words are reduced")
    }

    /// ξ_u evaluated at the element spelled by `word`, summing over reduced
    /// subwords. Fails if `word` is not reduced.
    pub fn billey_restriction_with_word(&self, u: usize, word: &ReducedWord) -> Result<Poly> {
        let g = &self.group;
        let rs = g.system();
        let nv = rs.rank();
        let mut states: BTreeMap<usize, Poly> = BTreeMap::new();
        states.insert(0, Poly::one(nv));
        let mut prefix = 0usize;
        for &i in word.letters() {
            if i >= nv {
                return Err(Error::MalformedWord(word.to_string()));
            }
            let beta = g.element(prefix).image(crate::SignedRoot::positive(rs.simple_index(i)));
            if beta.negative {
                return Err(Error::MalformedWord(word.to_string()));
            }
            let lin = Poly::linear(rs.positive_root_simple_coords(beta.index as usize));
            let mut next = states.clone();
            for (&y, p) in &states {
                let ys = g.right_mul_simple(y, i);
                if g.length(ys) > g.length(y) {
                    let term = p.mul(&lin);
                    let slot = next.entry(ys).or_insert_with(|| Poly::zero(nv));
                    *slot = slot.add(&term);
                }
            }
            states = next;
            prefix = g.right_mul_simple(prefix, i);
        }
        Ok(states.remove(&u).unwrap_or_else(|| Poly::zero(nv)))
    }

    fn check(&self, w: usize) -> Result<()> {
        if w < self.group.order() {
            Ok(())
        } else {
            Err(Error::Precondition("element index out of range"))
        }
    }

    /// Top-degree part of Π [Ω_{w_i}] by the triangular solve.
    pub fn product_expand(&self, parts: &[usize]) -> Result<CohomologyClass> {
        for &w in parts {
            self.check(w)?;
        }
        let g = &self.group;
        let degree: usize = parts.iter().map(|&w| g.length(w)).sum();
        let mut out = CohomologyClass::zero(self.system());
        if degree > g.length(g.longest()) {
            return Ok(out);
        }
        let candidates: Vec<usize> = (0..g.order())
            .filter(|&x| g.length(x) <= degree && parts.iter().all(|&w| g.bruhat_leq(w, x)))
            .collect();
        let mut solved: Vec<(usize, i128)> = Vec::new();
        for &x in &candidates {
            let mut rhs: i128 = 1;
            for &w in parts {
                rhs = rhs.checked_mul(self.restriction(w, x)).ok_or(Error::Overflow)?;
            }
            for &(y, p) in &solved {
                let r = self.restriction(y, x);
                if r != 0 {
                    rhs = rhs.checked_sub(p.checked_mul(r).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                }
            }
            if rhs == 0 {
                continue;
            }
            let d = self.restriction(x, x);
            if rhs % d != 0 {
                return Err(Error::NonIntegralSolution);
            }
            let p = rhs / d;
            if g.length(x) == degree {
                out.add_term(x, i64::try_from(p).map_err(|_| Error::Overflow)?);
            }
            solved.push((x, p));
        }
        Ok(out)
    }

    /// [Ω_u]·[Ω_v] = Σ c^w_{u,v} [Ω_w].
    pub fn cup_expand(&self, u: usize, v: usize) -> Result<CohomologyClass> {
        self.product_expand(&[u, v])
    }

    /// Single structure constant c^w_{u,v}.
    pub fn structure_constant(&self, u: usize, v: usize, w: usize) -> Result<i64> {
        let g = &self.group;
        self.check(w)?;
        if g.length(w) != g.length(u) + g.length(v) || !g.bruhat_leq(u, w) || !g.bruhat_leq(v, w) {
            return Ok(0);
        }
        Ok(self.cup_expand(u, v)?.coefficient(w))
    }

    /// Coefficient of [Ω_{w₀}] in Π [Ω_{w_i}]; the codimensions must add up
    /// to the number of positive roots.
    pub fn intersection_number(&self, parts: &[usize]) -> Result<i64> {
        let g = &self.group;
        for &w in parts {
            self.check(w)?;
        }
        let expected = g.length(g.longest());
        let found: usize = parts.iter().map(|&w| g.length(w)).sum();
        if found != expected {
            return Err(Error::DegreeMismatch { expected, found });
        }
        Ok(self.product_expand(parts)?.coefficient(g.longest()))
    }

    /// Product of two classes, bilinearly.
    pub fn multiply(&self, a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
        for c in [a, b] {
            if c.system() != self.system() {
                return Err(Error::SystemMismatch { left: c.system(), right: self.system() });
            }
        }
        let mut out = CohomologyClass::zero(self.system());
        for (u, cu) in a.terms() {
            for (v, cv) in b.terms() {
                for (w, c) in self.cup_expand(u, v)?.terms() {
                    out.add_term(w, cu * cv * c);
                }
            }
        }
        Ok(out)
    }

    /// Chevalley's formula for [Ω_{s_{p+1}}]·[Ω_w].
    pub fn chevalley_multiply(&self, p: usize, w: usize) -> Result<CohomologyClass> {
        let g = &self.group;
        let rs = g.system();
        if p >= rs.rank() {
            return Err(Error::Precondition("fundamental weight index out of range"));
        }
        self.check(w)?;
        let chi = rs.fundamental_weight(p);
        let mut out = CohomologyClass::zero(self.system());
        for beta in 0..rs.num_positive() {
            let ws = g.compose(w, g.reflection(beta));
            if g.length(ws) == g.length(w) + 1 {
                let c = rs.coroot_pairing(chi, rs.positive_root(beta));
                debug_assert!(c.is_integer());
                out.add_term(ws, c.to_integer());
            }
        }
        Ok(out)
    }

    /// Equivariant expansion ξ_u ξ_v = Σ p_w ξ_w with polynomial p_w, by the
    /// same triangular solve carried out over ℤ[x_1..x_n].
    pub fn equivariant_expand(&self, u: usize, v: usize) -> Result<BTreeMap<usize, Poly>> {
        self.check(u)?;
        self.check(v)?;
        let g = &self.group;
        let degree = g.length(u) + g.length(v);
        let mut solved: BTreeMap<usize, Poly> = BTreeMap::new();
        for x in 0..g.order() {
            if g.length(x) > degree || !g.bruhat_leq(u, x) || !g.bruhat_leq(v, x) {
                continue;
            }
            let mut rhs = self.billey_restriction(u, x).mul(&self.billey_restriction(v, x));
            for (&y, p) in &solved {
                if g.bruhat_leq(y, x) {
                    rhs = rhs.sub(&p.mul(&self.billey_restriction(y, x)));
                }
            }
            if rhs.is_zero() {
                continue;
            }
            let q = rhs.div_exact(&self.billey_restriction(x, x))?;
            solved.insert(x, q);
        }
        Ok(solved)
    }
}

/// Type-A Schubert polynomials, used as an independent check on products.
#[derive(Clone, Debug)]
pub struct SchubertPolynomials<'g> {
    group: &'g WeylGroup,
    polys: Vec<Poly>,
}

impl<'g> SchubertPolynomials<'g> {
    pub fn new(group: &'g WeylGroup) -> Result<Self> {
        let rs = group.system();
        if rs.family() != Family::A {
            return Err(Error::WrongType { expected: "A", found: rs.id() });
        }
        let r = rs.rank();
        let nv = r + 1;
        let mut top = vec![0u32; nv];
        for (k, e) in top.iter_mut().enumerate().take(r) {
            *e = (r - k) as u32;
        }
        let n = group.order();
        let mut polys = vec![Poly::zero(nv); n];
        polys[group.longest()] = Poly::monomial(top, 1);
        // 𝔖_w = ∂_i 𝔖_{w s_i} whenever w s_i is longer
        for w in (0..n).rev() {
            if w == group.longest() {
                continue;
            }
            let i = (0..r)
                .find(|&i| !group.element(w).has_right_descent(rs, i))
                .expect("only w0 lacks ascents");
            polys[w] = polys[group.right_mul_simple(w, i)].divided_difference(i);
        }
        Ok(SchubertPolynomials { group, polys })
    }

    pub fn polynomial(&self, w: usize) -> &Poly {
        &self.polys[w]
    }

    /// Expansion of 𝔖_u 𝔖_v read off with ∂_w for every w of the right length.
    pub fn product(&self, u: usize, v: usize) -> CohomologyClass {
        let g = self.group;
        let f = self.polys[u].mul(&self.polys[v]);
        let deg = g.length(u) + g.length(v);
        let mut out = CohomologyClass::zero(g.id());
        for w in g.of_length(deg) {
            let mut h = f.clone();
            for &i in g.word(w).letters().iter().rev() {
                h = h.divided_difference(i);
            }
            let c = h.constant_term();
            out.add_term(w, c as i64);
        }
        out
    }
}

/// Memo of computed products keyed by (u, v) group indices.
#[derive(Clone, Debug)]
pub struct StructureTable {
    system: SystemId,
    entries: BTreeMap<(usize, usize), CohomologyClass>,
}

impl StructureTable {
    /// Bumped whenever the element indexing scheme changes.
    pub const VERSION: u32 = 1;

    pub fn new(system: SystemId) -> Self {
        StructureTable { system, entries: BTreeMap::new() }
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        if u <= v {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<&CohomologyClass> {
        self.entries.get(&Self::key(u, v))
    }

    pub fn insert(&mut self, u: usize, v: usize, c: CohomologyClass) {
        self.entries.insert(Self::key(u, v), c);
    }

    /// Looks up or computes [Ω_u]·[Ω_v].
    pub fn cup(&mut self, engine: &SchubertEngine, u: usize, v: usize) -> Result<CohomologyClass> {
        if let Some(c) = self.get(u, v) {
            return Ok(c.clone());
        }
        let c = engine.cup_expand(u, v)?;
        self.insert(u, v, c.clone());
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &CohomologyClass)> + '_ {
        self.entries.iter().map(|(k, c)| (*k, c))
    }
}
