use bkmult_core::verify::Report;
use bkmult_core::WeylGroup;
use serde::Serialize;

#[derive(Serialize)]
pub struct ViolationJson {
    pub kind: &'static str,
    /// Reduced words of the witness elements.
    pub parts: Vec<String>,
    pub detail: String,
}

/// The verify report as written to disk.
#[derive(Serialize)]
pub struct ReportJson {
    pub system: String,
    pub k_max: usize,
    pub decomposition_count: u64,
    pub decomposition_sets: u64,
    pub max_parts_seen: usize,
    pub levi_movable_count: u64,
    pub dual_pair_count: u64,
    pub max_bk_constant: i64,
    pub max_structure_constant: i64,
    pub rho_checks: u64,
    pub torus_fixed_checks: u64,
    pub fibration_checks: u64,
    pub passed: bool,
    pub violations: Vec<ViolationJson>,
    pub elapsed_ms: u64,
}

impl ReportJson {
    pub fn new(group: &WeylGroup, r: &Report, elapsed_ms: u64) -> Self {
        ReportJson {
            system: r.system.to_string(),
            k_max: r.k_max,
            decomposition_count: r.decomposition_count,
            decomposition_sets: r.decomposition_sets,
            max_parts_seen: r.max_parts_seen,
            levi_movable_count: r.levi_movable_count,
            dual_pair_count: r.dual_pair_count,
            max_bk_constant: r.max_bk_constant,
            max_structure_constant: r.max_structure_constant,
            rho_checks: r.rho_checks,
            torus_fixed_checks: r.torus_fixed_checks,
            fibration_checks: r.fibration_checks,
            passed: r.passed(),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationJson {
                    kind: v.kind.as_str(),
                    parts: v.parts.iter().map(|&p| group.word(p).to_string()).collect(),
                    detail: v.detail.clone(),
                })
                .collect(),
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
