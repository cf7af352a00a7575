//! The commands. Each writes its textual output to a caller-supplied sink
//! and returns the process exit code.

use std::fs;
use std::io::Write;
use std::time::Instant;

use bkmult_core::bk::{deform, levi_target, DeformedClass};
use bkmult_core::fibration::{phi_order_survey, Parabolic};
use bkmult_core::inversion::enumerate_decompositions;
use bkmult_core::schubert::{CohomologyClass, SchubertEngine, SchubertPolynomials};
use bkmult_core::verify::{Report, VerifyContext};
use bkmult_core::{Family, WeylGroup};
use rayon::prelude::*;

use crate::cache::Cache;
use crate::config::{Command, RunConfig};
use crate::error::{exit, CliError, Result};
use crate::report::ReportJson;

pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    cfg.validate()?;
    match &cfg.command {
        Command::Verify => cmd_verify(cfg, out),
        Command::Constant { u, v } => cmd_constant(cfg, u, v, out),
        Command::Decompositions { count_only, allow_identity } => {
            cmd_decompositions(cfg, *count_only, *allow_identity, out)
        }
        Command::Crosscheck => cmd_crosscheck(cfg, out),
    }
}

fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))
}

fn open_cache(cfg: &RunConfig, group: &WeylGroup) -> Result<Option<Cache>> {
    cfg.cache.as_deref().map(|p| Cache::open(p, group)).transpose()
}

/// Runs every check for `cfg.system` on `cfg.threads` workers. Partial
/// reports are merged in unit order, so the result does not depend on
/// scheduling.
pub fn verify_report(cfg: &RunConfig) -> Result<(VerifyContext, Report)> {
    cfg.validate()?;
    let ctx = VerifyContext::for_system(cfg.system, cfg.group_cap)?;
    let cache = open_cache(cfg, ctx.group())?;
    let k_max = cfg.k_max;
    let parts = pool(cfg.threads)?.install(|| -> bkmult_core::Result<Vec<Report>> {
        let mut parts: Vec<Report> = ctx
            .first_parts()
            .par_iter()
            .map(|&f| ctx.check_decompositions_from(f, k_max))
            .collect::<bkmult_core::Result<_>>()?;
        let order = ctx.group().order();
        let pairs: Vec<Report> = match &cache {
            Some(c) => (0..order)
                .into_par_iter()
                .map(|u| ctx.scan_pairs_with(u, &|a, b| c.cup(ctx.engine(), a, b)))
                .collect::<bkmult_core::Result<_>>()?,
            None => (0..order).into_par_iter().map(|u| ctx.scan_pairs_from(u)).collect::<bkmult_core::Result<_>>()?,
        };
        parts.extend(pairs);
        Ok(parts)
    })?;
    let mut report = Report::new(cfg.system, k_max);
    for p in parts {
        report.merge(p);
    }
    report.finish();
    if let Some(c) = &cache {
        c.save(ctx.group())?;
    }
    Ok((ctx, report))
}

pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let (ctx, report) = verify_report(cfg)?;
    let elapsed_ms = if cfg.deterministic { 0 } else { start.elapsed().as_millis() as u64 };
    let json = ReportJson::new(ctx.group(), &report, elapsed_ms).to_json();
    let io = |e| CliError::io("<stdout>", e);
    match &cfg.out {
        Some(path) => {
            fs::write(path, &json).map_err(|e| CliError::io(path, e))?;
            let verdict = if report.passed() { "pass" } else { "FAIL" };
            writeln!(out, "{}: {verdict}, {} violations", cfg.system, report.violations.len()).map_err(io)?;
        }
        None => out.write_all(json.as_bytes()).map_err(io)?,
    }
    Ok(if report.passed() { exit::PASS } else { exit::VIOLATION })
}

fn label(group: &WeylGroup, w: usize) -> String {
    if w == group.identity() {
        "[e]".into()
    } else {
        format!("[{}]", group.word(w))
    }
}

fn coeff(c: i64) -> String {
    if c == 1 {
        String::new()
    } else {
        c.to_string()
    }
}

fn join(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn format_class(group: &WeylGroup, c: &CohomologyClass) -> String {
    join(c.terms().map(|(w, k)| format!("{}{}", coeff(k), label(group, w))).collect())
}

pub fn format_deformed(group: &WeylGroup, c: &DeformedClass) -> String {
    join(
        c.terms()
            .map(|(w, gamma, k)| {
                let exps: Vec<String> = gamma.iter().map(i64::to_string).collect();
                format!("{}t^({}){}", coeff(k), exps.join(","), label(group, w))
            })
            .collect(),
    )
}

pub fn cmd_constant(cfg: &RunConfig, u: &str, v: &str, out: &mut dyn Write) -> Result<i32> {
    let group = WeylGroup::with_cap(bkmult_core::RootSystem::new(cfg.system), cfg.group_cap)?;
    let (u, v) = (group.parse_word(u)?, group.parse_word(v)?);
    let engine = SchubertEngine::new(group)?;
    let g = engine.group();
    let cache = match open_cache(cfg, g)? {
        Some(c) => c,
        None => Cache::in_memory(g),
    };
    let cup = cache.cup(&engine, u, v)?;
    let odot = deform(g, &[u, v], &cup)?;
    let mut odot0 = CohomologyClass::zero(g.id());
    if let Some(w) = levi_target(g, u, v) {
        odot0.add_term(w, cup.coefficient(w));
    }
    cache.save(g)?;
    if cfg.cache.is_some() {
        eprintln!("cache: {} hit(s), {} miss(es)", cache.hits(), cache.misses());
    }
    let text = format!(
        "system: {}\nu: {}\nv: {}\ncup: {}\nodot: {}\nodot0: {}\n",
        cfg.system,
        label(g, u),
        label(g, v),
        format_class(g, &cup),
        format_deformed(g, &odot),
        format_class(g, &odot0),
    );
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))?;
    Ok(exit::PASS)
}

pub fn cmd_decompositions(cfg: &RunConfig, count_only: bool, allow_identity: bool, out: &mut dyn Write) -> Result<i32> {
    let group = WeylGroup::with_cap(bkmult_core::RootSystem::new(cfg.system), cfg.group_cap)?;
    let mut lines = Vec::new();
    let mut count = 0u64;
    enumerate_decompositions(&group, cfg.k_max, allow_identity, |d| {
        count += 1;
        if !count_only {
            let words: Vec<String> = d.parts().iter().map(|&w| group.word(w).to_string()).collect();
            lines.push(serde_json::to_string(&words).expect("strings serialize"));
        }
    });
    let io = |e| CliError::io("<stdout>", e);
    if count_only {
        writeln!(out, "{count}").map_err(io)?;
    } else {
        for l in lines {
            writeln!(out, "{l}").map_err(io)?;
        }
    }
    Ok(exit::PASS)
}

/// Elements of length one, in simple-root order.
fn simple_reflections(group: &WeylGroup) -> Vec<usize> {
    (1..=group.system().rank())
        .map(|i| group.parse_word(&i.to_string()).expect("simple reflection"))
        .collect()
}

pub fn cmd_crosscheck(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let group = WeylGroup::with_cap(bkmult_core::RootSystem::new(cfg.system), cfg.group_cap)?;
    let engine = SchubertEngine::new(group)?;
    let g = engine.group();
    let mut lines: Vec<(String, usize, usize)> = Vec::new();

    let (mut n, mut bad) = (0, 0);
    for (p, s) in simple_reflections(g).into_iter().enumerate() {
        for w in 0..g.order() {
            n += 1;
            bad += usize::from(engine.cup_expand(s, w)? != engine.chevalley_multiply(p, w)?);
        }
    }
    lines.push(("chevalley".into(), n, bad));

    let (mut n, mut bad) = (0, 0);
    for w in 0..g.order() {
        n += 1;
        bad += usize::from(engine.intersection_number(&[w, g.compose(g.longest(), w)])? != 1);
    }
    lines.push(("duality".into(), n, bad));

    if g.id().family() == Family::A {
        let polys = SchubertPolynomials::new(g)?;
        let (mut n, mut bad) = (0, 0);
        for u in 0..g.order() {
            for v in u..g.order() {
                n += 1;
                bad += usize::from(engine.cup_expand(u, v)? != polys.product(u, v));
            }
        }
        lines.push(("schubert_polynomials".into(), n, bad));
    }

    if g.order() <= 48 {
        let (mut n, mut bad) = (0, 0);
        for u in 0..g.order() {
            for v in u..g.order() {
                n += 1;
                let degree = g.length(u) + g.length(v);
                let mut top = CohomologyClass::zero(g.id());
                for (w, p) in engine.equivariant_expand(u, v)? {
                    if g.length(w) == degree {
                        top.add_term(w, p.constant_term() as i64);
                    }
                }
                bad += usize::from(top != engine.cup_expand(u, v)?);
            }
        }
        lines.push(("equivariant".into(), n, bad));
    }

    let io = |e| CliError::io("<stdout>", e);
    let mut failed = false;
    for (name, n, bad) in lines {
        failed |= bad > 0;
        writeln!(out, "{name}: {n} checked, {bad} mismatches").map_err(io)?;
    }
    if g.id().family() == Family::D && g.system().rank() >= 3 {
        // informational only: reported, never a failure
        let (checked, held) = phi_order_survey(g, &Parabolic::p1(g)?)?;
        writeln!(out, "phi_order_survey: {held} of {checked} pairs satisfy phi(w) <= phi(w)phi(u)").map_err(io)?;
    }
    Ok(if failed { exit::VIOLATION } else { exit::PASS })
}
