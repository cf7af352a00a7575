//! The exhaustive multiplicity-one check, split into independent units of
//! work (one per first part of a decomposition, one per left factor of a
//! pair) so callers can schedule them in parallel and merge the results.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bk::{levi_target, rho_factorization_check};
use crate::error::Result;
use crate::fibration::{fibration_check, torus_fixed_solutions};
use crate::inversion::{dn_witness, subfamily_unions_are_inversion_sets, Decomposition, DecompositionSearch};
use crate::root_system::{Family, Rational, RootSystem, SystemId};
use crate::schubert::{CohomologyClass, SchubertEngine};
use crate::weyl::WeylGroup;

/// What went wrong in a [`Violation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    IntersectionNumber,
    TorusFixedPoints,
    RankBound,
    SubfamilyUnion,
    DnWitness,
    Fibration,
    LeviConstant,
    RhoIdentity,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::IntersectionNumber => "intersection_number",
            ViolationKind::TorusFixedPoints => "torus_fixed_points",
            ViolationKind::RankBound => "rank_bound",
            ViolationKind::SubfamilyUnion => "subfamily_union",
            ViolationKind::DnWitness => "dn_witness",
            ViolationKind::Fibration => "fibration",
            ViolationKind::LeviConstant => "levi_constant",
            ViolationKind::RhoIdentity => "rho_identity",
        }
    }
}

/// A failed check together with the group elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub kind: ViolationKind,
    pub parts: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub system: SystemId,
    pub k_max: usize,
    /// Ordered tuples with no identity parts and at most `k_max` parts.
    pub decomposition_count: u64,
    /// The same decompositions up to order.
    pub decomposition_sets: u64,
    /// Largest number of parts in any decomposition, regardless of `k_max`.
    pub max_parts_seen: usize,
    /// Ordered triples (u, v, w) with Φ_w = Φ_u ⊔ Φ_v.
    pub levi_movable_count: u64,
    /// Ordered pairs (u, v) with Φ_u ⊔ Φ_v = Δ⁺.
    pub dual_pair_count: u64,
    pub max_bk_constant: i64,
    pub max_structure_constant: i64,
    pub rho_checks: u64,
    pub torus_fixed_checks: u64,
    pub fibration_checks: u64,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(system: SystemId, k_max: usize) -> Self {
        Report {
            system,
            k_max,
            decomposition_count: 0,
            decomposition_sets: 0,
            max_parts_seen: 0,
            levi_movable_count: 0,
            dual_pair_count: 0,
            max_bk_constant: 0,
            max_structure_constant: 0,
            rho_checks: 0,
            torus_fixed_checks: 0,
            fibration_checks: 0,
            violations: Vec::new(),
        }
    }

    /// Folds in a partial report over a disjoint slice of the work.
    pub fn merge(&mut self, o: Report) {
        self.decomposition_count += o.decomposition_count;
        self.decomposition_sets += o.decomposition_sets;
        self.max_parts_seen = self.max_parts_seen.max(o.max_parts_seen);
        self.levi_movable_count += o.levi_movable_count;
        self.dual_pair_count += o.dual_pair_count;
        self.max_bk_constant = self.max_bk_constant.max(o.max_bk_constant);
        self.max_structure_constant = self.max_structure_constant.max(o.max_structure_constant);
        self.rho_checks += o.rho_checks;
        self.torus_fixed_checks += o.torus_fixed_checks;
        self.fibration_checks += o.fibration_checks;
        self.violations.extend(o.violations);
    }

    /// Puts violations in a canonical order.
    pub fn finish(&mut self) {
        self.violations.sort();
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Two normalizations of the invariant form used for the ρ check.
pub const FORM_SCALES: [(i64, i64); 2] = [(1, 1), (7, 3)];

/// Everything the checks need for one system.
pub struct VerifyContext {
    engine: SchubertEngine,
    /// D_{n−1} engine for the fibration identity (type D, n ≥ 3).
    fiber: Option<SchubertEngine>,
}

impl VerifyContext {
    pub fn new(group: WeylGroup) -> Result<Self> {
        let id = group.id();
        let fiber = if id.family() == Family::D && id.rank() >= 3 {
            let sub = SystemId::new(Family::D, id.rank() - 1)?;
            Some(SchubertEngine::new(WeylGroup::new(RootSystem::new(sub))?)?)
        } else {
            None
        };
        Ok(VerifyContext { engine: SchubertEngine::new(group)?, fiber })
    }

    pub fn for_system(id: SystemId, cap: usize) -> Result<Self> {
        Self::new(WeylGroup::with_cap(RootSystem::new(id), cap)?)
    }

    pub fn engine(&self) -> &SchubertEngine {
        &self.engine
    }

    pub fn group(&self) -> &WeylGroup {
        self.engine.group()
    }

    pub fn fiber(&self) -> Option<&SchubertEngine> {
        self.fiber.as_ref()
    }

    /// Candidates for the first part; each is an independent unit of work.
    pub fn first_parts(&self) -> Vec<usize> {
        DecompositionSearch::new(self.group()).first_parts().to_vec()
    }

    /// Checks every decomposition whose part through the lowest root is `first`.
    pub fn check_decompositions_from(&self, first: usize, k_max: usize) -> Result<Report> {
        let g = self.group();
        let mut report = Report::new(g.id(), k_max);
        let search = DecompositionSearch::new(g);
        let mut sets = Vec::new();
        search.for_each_set_with_first(first, g.system().num_positive(), |s| sets.push(s.to_vec()));
        for set in sets {
            report.max_parts_seen = report.max_parts_seen.max(set.len());
            if set.len() > g.system().rank() {
                report.violations.push(Violation {
                    kind: ViolationKind::RankBound,
                    parts: set.clone(),
                    detail: format!("{} non-identity parts", set.len()),
                });
            }
            if set.len() <= k_max {
                self.check_set(&set, &mut report)?;
            }
        }
        Ok(report)
    }

    fn check_set(&self, set: &[usize], report: &mut Report) -> Result<()> {
        let g = self.group();
        report.decomposition_sets += 1;
        report.decomposition_count += (1..=set.len() as u64).product::<u64>();
        let mut flag = |kind, detail: String| {
            report.violations.push(Violation { kind, parts: set.to_vec(), detail });
        };

        let c = self.engine.intersection_number(set)?;
        if c != 1 {
            flag(ViolationKind::IntersectionNumber, format!("intersection number {c}"));
        }
        let fixed = torus_fixed_solutions(g, set);
        if fixed != [g.identity()] {
            flag(ViolationKind::TorusFixedPoints, format!("{} torus-fixed solutions", fixed.len()));
        }
        let d = Decomposition::new(g, set.to_vec())?;
        if !subfamily_unions_are_inversion_sets(g, &d) {
            flag(ViolationKind::SubfamilyUnion, String::from("a sub-union is not an inversion set"));
        }
        if g.id().family() == Family::D {
            if dn_witness(g, &d)?.is_none() {
                flag(ViolationKind::DnWitness, String::from("no part moves ε1 to -ε_p or ε_n"));
            }
            if let Some(fiber) = &self.fiber {
                let f = fibration_check(&self.engine, fiber, set)?;
                if !f.identity_holds() || f.quadric_factor != 1 || !f.witness_codim_ok {
                    flag(
                        ViolationKind::Fibration,
                        format!(
                            "total {} quadric {} fiber {}",
                            f.total, f.quadric_factor, f.fiber_factor
                        ),
                    );
                }
                report.fibration_checks += 1;
            }
        }
        report.torus_fixed_checks += 1;
        Ok(())
    }

    /// Scans all pairs (u, v) for one `u`: Levi-movable constants, the ρ
    /// identity, and the largest structure constant overall.
    pub fn scan_pairs_from(&self, u: usize) -> Result<Report> {
        self.scan_pairs_with(u, &|a, b| self.engine.cup_expand(a, b))
    }

    /// As [`Self::scan_pairs_from`], taking products from `cup` (for
    /// instance a memo in front of the engine).
    pub fn scan_pairs_with(
        &self,
        u: usize,
        cup: &dyn Fn(usize, usize) -> Result<CohomologyClass>,
    ) -> Result<Report> {
        let g = self.group();
        let mut report = Report::new(g.id(), 0);
        let scales = FORM_SCALES.map(|(a, b)| Rational::new(a, b));
        for v in 0..g.order() {
            let target = levi_target(g, u, v);
            if u > v && target.is_none() {
                continue;
            }
            let product = cup(u, v)?;
            if u <= v {
                for (_, c) in product.terms() {
                    report.max_structure_constant = report.max_structure_constant.max(c);
                }
            }
            let Some(w) = target else { continue };
            report.levi_movable_count += 1;
            if w == g.longest() {
                report.dual_pair_count += 1;
            }
            let c = product.coefficient(w);
            report.max_bk_constant = report.max_bk_constant.max(c);
            if c != 1 {
                report.violations.push(Violation {
                    kind: ViolationKind::LeviConstant,
                    parts: vec![u, v, w],
                    detail: format!("c = {c}"),
                });
            }
            let results = scales
                .iter()
                .map(|&s| rho_factorization_check(g, u, v, w, s))
                .collect::<Result<Vec<bool>>>()?;
            report.rho_checks += 1;
            if results.iter().any(|ok| !ok) {
                report.violations.push(Violation {
                    kind: ViolationKind::RhoIdentity,
                    parts: vec![u, v, w],
                    detail: format!("results per normalization {results:?}"),
                });
            }
        }
        Ok(report)
    }

    /// Runs every unit sequentially.
    pub fn verify(&self, k_max: usize) -> Result<Report> {
        let mut report = Report::new(self.group().id(), k_max);
        for first in self.first_parts() {
            report.merge(self.check_decompositions_from(first, k_max)?);
        }
        for u in 0..self.group().order() {
            report.merge(self.scan_pairs_from(u)?);
        }
        report.finish();
        Ok(report)
    }
}

/// Sequential entry point: every decomposition with at most `k_max`
/// non-identity parts, and every Levi-movable triple.
pub fn verify_multiplicity_one(group: WeylGroup, k_max: usize) -> Result<Report> {
    VerifyContext::new(group)?.verify(k_max)
}
