//! The τ-deformed product ⊙, its specialization ⊙₀ and Levi-movability.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::inversion::Decomposition;
use crate::root_system::{Rational, SystemId, Weight};
use crate::schubert::{CohomologyClass, SchubertEngine};
use crate::weyl::WeylGroup;

/// χ_w = Σ_{α ∈ Φ_w} α.
pub fn chi(group: &WeylGroup, w: usize) -> Weight {
    let rs = group.system();
    let mut acc = Weight::zero(rs.ambient_dim());
    for a in group.inversion_set(w).iter() {
        acc = &acc + rs.positive_root(a);
    }
    acc
}

/// χ_w in simple-root coordinates.
pub fn chi_simple(group: &WeylGroup, w: usize) -> Vec<i64> {
    let rs = group.system();
    let mut acc = vec![0i64; rs.rank()];
    for a in group.inversion_set(w).iter() {
        for (x, c) in acc.iter_mut().zip(rs.positive_root_simple_coords(a)) {
            *x += c;
        }
    }
    acc
}

/// Exponents of τ_1..τ_n.
pub type TauExponent = Vec<i64>;

/// Σ c · τ^γ [Ω_w], keyed by (w, γ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedClass {
    system: SystemId,
    terms: BTreeMap<(usize, TauExponent), i64>,
}

impl DeformedClass {
    pub fn zero(system: SystemId) -> Self {
        DeformedClass { system, terms: BTreeMap::new() }
    }

    /// [Ω_w] with exponent zero.
    pub fn basis(group: &WeylGroup, w: usize) -> Self {
        let mut c = Self::zero(group.id());
        c.add_term(w, vec![0; group.system().rank()], 1);
        c
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn add_term(&mut self, w: usize, gamma: TauExponent, c: i64) {
        if c == 0 {
            return;
        }
        let key = (w, gamma);
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &[i64], i64)> + '_ {
        self.terms.iter().map(|((w, g), c)| (*w, g.as_slice(), *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// All τ_i = 1: the ordinary cup product.
    pub fn at_tau_one(&self) -> CohomologyClass {
        CohomologyClass::from_terms(self.system, self.terms().map(|(w, _, c)| (w, c)))
    }

    /// All τ_i = 0: only exponent-zero terms survive.
    pub fn at_tau_zero(&self) -> CohomologyClass {
        CohomologyClass::from_terms(
            self.system,
            self.terms().filter(|(_, g, _)| g.iter().all(|&x| x == 0)).map(|(w, _, c)| (w, c)),
        )
    }
}

fn shift(group: &WeylGroup, w: usize, parts: &[usize]) -> Result<TauExponent> {
    let mut gamma = chi_simple(group, w);
    for &u in parts {
        for (g, c) in gamma.iter_mut().zip(chi_simple(group, u)) {
            *g -= c;
        }
    }
    if gamma.iter().any(|&g| g < 0) {
        return Err(Error::NegativeTauExponent);
    }
    Ok(gamma)
}

/// [Ω_u] ⊙ [Ω_v] = Σ τ^{χ_w − χ_u − χ_v} c^w_{u,v} [Ω_w].
pub fn deformed_product(engine: &SchubertEngine, u: usize, v: usize) -> Result<DeformedClass> {
    deform(engine.group(), &[u, v], &engine.cup_expand(u, v)?)
}

/// Attaches τ^{χ_w − Σχ_{w_i}} to every term of a product of the `parts`.
pub fn deform(group: &WeylGroup, parts: &[usize], product: &CohomologyClass) -> Result<DeformedClass> {
    let mut out = DeformedClass::zero(group.id());
    for (w, c) in product.terms() {
        out.add_term(w, shift(group, w, parts)?, c);
    }
    Ok(out)
}

/// ⊙ extended ℤ[τ]-bilinearly.
pub fn deformed_multiply(engine: &SchubertEngine, a: &DeformedClass, b: &DeformedClass) -> Result<DeformedClass> {
    let mut out = DeformedClass::zero(engine.system());
    for (u, ga, ca) in a.terms() {
        for (v, gb, cb) in b.terms() {
            for (w, gw, c) in deformed_product(engine, u, v)?.terms() {
                let gamma: Vec<i64> = ga.iter().zip(gb).zip(gw).map(|((x, y), z)| x + y + z).collect();
                out.add_term(w, gamma, ca * cb * c);
            }
        }
    }
    Ok(out)
}

/// Σ τ^{χ_w − Σχ_{w_i}} c^w_{w_1..w_k} [Ω_w], the closed form of an iterated ⊙.
pub fn deformed_kfold(engine: &SchubertEngine, parts: &[usize]) -> Result<DeformedClass> {
    deform(engine.group(), parts, &engine.product_expand(parts)?)
}

/// Φ_w = Φ_u ⊔ Φ_v.
pub fn levi_movable(group: &WeylGroup, u: usize, v: usize, w: usize) -> bool {
    let (pu, pv) = (group.inversion_set(u), group.inversion_set(v));
    pu.is_disjoint(pv) && pu.union(pv) == group.inversion_set(w)
}

/// The only w that can make (u, v, w) Levi-movable.
pub fn levi_target(group: &WeylGroup, u: usize, v: usize) -> Option<usize> {
    let (pu, pv) = (group.inversion_set(u), group.inversion_set(v));
    if !pu.is_disjoint(pv) {
        return None;
    }
    group.by_inversion_set(pu.union(pv))
}

/// d^w_{u,v}: c^w_{u,v} on Levi-movable triples, zero otherwise.
pub fn bk_zero_constant(engine: &SchubertEngine, u: usize, v: usize, w: usize) -> Result<i64> {
    if levi_movable(engine.group(), u, v, w) {
        engine.structure_constant(u, v, w)
    } else {
        Ok(0)
    }
}

/// [Ω_u] ⊙₀ [Ω_v].
pub fn bk_zero_product(engine: &SchubertEngine, u: usize, v: usize) -> Result<CohomologyClass> {
    let mut out = CohomologyClass::zero(engine.system());
    if let Some(w) = levi_target(engine.group(), u, v) {
        out.add_term(w, engine.structure_constant(u, v, w)?);
    }
    Ok(out)
}

/// ⊙₀ extended bilinearly.
pub fn bk_zero_multiply(engine: &SchubertEngine, a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
    let mut out = CohomologyClass::zero(engine.system());
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            for (w, c) in bk_zero_product(engine, u, v)?.terms() {
                out.add_term(w, cu * cv * c);
            }
        }
    }
    Ok(out)
}

/// Left-to-right ⊙₀ product of basis classes.
pub fn bk_zero_chain(engine: &SchubertEngine, parts: &[usize]) -> Result<CohomologyClass> {
    let mut acc = CohomologyClass::basis(engine.system(), engine.group().identity());
    for &w in parts {
        acc = bk_zero_multiply(engine, &acc, &CohomologyClass::basis(engine.system(), w))?;
    }
    Ok(acc)
}

/// Π_{α ∈ Φ_{w⁻¹}} c⟨ρ, α⟩.
pub fn rho_product(group: &WeylGroup, w: usize, scale: Rational) -> Rational {
    let rs = group.system();
    group
        .inversion_set(group.inverse(w))
        .iter()
        .map(|a| rs.scaled_pairing(rs.rho(), rs.positive_root(a), scale))
        .fold(Rational::one(), |acc, x| acc * x)
}

/// The factorization Π_{Φ_{w⁻¹}}⟨ρ,α⟩ = Π_{Φ_{u⁻¹}}⟨ρ,α⟩ · Π_{Φ_{v⁻¹}}⟨ρ,α⟩ for a
/// Levi-movable triple, with the form scaled by `scale`.
pub fn rho_factorization_check(group: &WeylGroup, u: usize, v: usize, w: usize, scale: Rational) -> Result<bool> {
    if !levi_movable(group, u, v, w) {
        return Err(Error::Precondition("triple is not Levi-movable"));
    }
    Ok(rho_product(group, w, scale) == rho_product(group, u, scale) * rho_product(group, v, scale))
}

/// Replays the pairwise merge of the last two parts down to a single part,
/// checking at each step that the last pair ⊙₀-multiplies to exactly
/// [Ω_u] and that the full ⊙₀ product is unchanged. Returns the sequence
/// of part lists visited.
pub fn merge_reduction(engine: &SchubertEngine, d: &Decomposition) -> Result<Option<Vec<Vec<usize>>>> {
    let g = engine.group();
    let mut parts = d.parts().to_vec();
    let target = bk_zero_chain(engine, &parts)?;
    let mut trail = vec![parts.clone()];
    while parts.len() > 1 {
        let b = parts.pop().unwrap();
        let a = parts.pop().unwrap();
        let u = match levi_target(g, a, b) {
            Some(u) => u,
            None => return Ok(None),
        };
        if bk_zero_product(engine, a, b)? != CohomologyClass::basis(g.id(), u) {
            return Ok(None);
        }
        parts.push(u);
        if bk_zero_chain(engine, &parts)? != target {
            return Ok(None);
        }
        trail.push(parts.clone());
    }
    Ok(Some(trail))
}
