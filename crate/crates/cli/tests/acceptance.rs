//! One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bkmult::{Command as Cmd, RunConfig};
use bkmult_core::bk::{
    deformed_kfold, deformed_multiply, levi_target, merge_reduction, rho_factorization_check, DeformedClass,
};
use bkmult_core::fibration::{dichotomy_scan, first_moved_coordinate, mu_witness, quadric_relations, QuadricClass};
use bkmult_core::inversion::{
    delete_coordinate, dn_witness, enumerate_decompositions, restrict_by_deletion, subfamily_unions_are_inversion_sets,
    Decomposition, DecompositionSearch,
};
use bkmult_core::schubert::{SchubertEngine, SchubertPolynomials};
use bkmult_core::verify::{Report, ViolationKind, FORM_SCALES};
use bkmult_core::{Family, Rational, RootSystem, SystemId, WeylGroup};

const SYSTEMS: [&str; 10] = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "D4", "G2"];

type Outcome = Result<String, String>;

fn group(name: &str) -> WeylGroup {
    WeylGroup::new(RootSystem::new(name.parse().unwrap())).unwrap()
}

fn engine(name: &str) -> SchubertEngine {
    SchubertEngine::new(group(name)).unwrap()
}

/// Every set {w_i} with Δ⁺ = ⊔ Φ_{w_i}, identities excluded.
fn sets(g: &WeylGroup) -> Vec<Vec<usize>> {
    DecompositionSearch::new(g).sets(g.system().num_positive())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn kinds(r: &Report, kind: ViolationKind) -> usize {
    r.violations.iter().filter(|v| v.kind == kind).count()
}

fn multiplicity_one(reports: &BTreeMap<&str, Report>, elapsed: Duration) -> Outcome {
    let mut levi = 0;
    let mut decs = 0;
    for (name, r) in reports {
        ensure(kinds(r, ViolationKind::LeviConstant) == 0 && r.max_bk_constant == 1, || {
            format!("{name}: Levi-movable constant != 1: {:?}", r.violations)
        })?;
        ensure(kinds(r, ViolationKind::IntersectionNumber) == 0, || format!("{name}: intersection number != 1"))?;
        levi += r.levi_movable_count;
        decs += r.decomposition_count;
    }
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{levi} Levi-movable triples, {decs} ordered decompositions, {elapsed:.2?}"))
}

fn rho_identity() -> Outcome {
    let scales = FORM_SCALES.map(|(a, b)| Rational::new(a, b));
    let mut n = 0;
    for name in SYSTEMS {
        let g = group(name);
        for u in 0..g.order() {
            for v in 0..g.order() {
                let Some(w) = levi_target(&g, u, v) else { continue };
                let r: Vec<bool> = scales.iter().map(|&s| rho_factorization_check(&g, u, v, w, s).unwrap()).collect();
                ensure(r.iter().all(|&b| b), || format!("{name}: ({u},{v},{w}) gives {r:?}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} triples, both normalizations"))
}

fn duality() -> Outcome {
    let mut n = 0;
    for name in SYSTEMS {
        let e = engine(name);
        let g = e.group();
        for w in 0..g.order() {
            let dual = g.compose(g.longest(), w);
            let c = e.intersection_number(&[w, dual]).map_err(|x| x.to_string())?;
            ensure(c == 1, || format!("{name}: <{w}, w0 {w}> = {c}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} elements"))
}

fn oracles() -> Outcome {
    let mut schub = 0;
    for name in ["A1", "A2", "A3"] {
        let e = engine(name);
        let g = e.group();
        let polys = SchubertPolynomials::new(g).unwrap();
        for u in 0..g.order() {
            for v in 0..g.order() {
                let ours = e.cup_expand(u, v).unwrap();
                ensure(ours == polys.product(u, v), || format!("{name}: ({u},{v}) disagrees with polynomials"))?;
                schub += 1;
            }
        }
    }
    let mut chev = 0;
    for name in SYSTEMS {
        let e = engine(name);
        let g = e.group();
        for p in 0..g.system().rank() {
            let s = g.parse_word(&(p + 1).to_string()).unwrap();
            for w in 0..g.order() {
                ensure(e.cup_expand(s, w).unwrap() == e.chevalley_multiply(p, w).unwrap(), || {
                    format!("{name}: Chevalley mismatch at (s{}, {w})", p + 1)
                })?;
                chev += 1;
            }
        }
    }
    Ok(format!("{schub} polynomial pairs, {chev} Chevalley pairs"))
}

fn tuples(order: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(order: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for w in 0..order {
            acc.push(w);
            go(order, k, acc, f);
            acc.pop();
        }
    }
    go(order, k, &mut Vec::new(), f)
}

fn appendix() -> Outcome {
    let mut kfold = 0;
    for name in ["A2", "B2", "G2"] {
        let e = engine(name);
        let g = e.group();
        let dim = g.length(g.longest());
        for k in 1..=4 {
            let mut err = None;
            tuples(g.order(), k, &mut |parts| {
                if err.is_some() || parts.iter().map(|&w| g.length(w)).sum::<usize>() > dim {
                    return;
                }
                let mut acc = DeformedClass::basis(g, g.identity());
                for &w in parts {
                    acc = deformed_multiply(&e, &acc, &DeformedClass::basis(g, w)).unwrap();
                }
                if acc != deformed_kfold(&e, parts).unwrap() {
                    err = Some(format!("{name}: k-fold formula fails at {parts:?}"));
                }
                kfold += 1;
            });
            if let Some(m) = err {
                return Err(m);
            }
        }
    }
    let mut merges = 0;
    for name in ["A2", "A3", "B2"] {
        let e = engine(name);
        let g = e.group();
        for k in 1..=g.system().rank() {
            let mut err = None;
            enumerate_decompositions(g, k, false, |d| {
                match merge_reduction(&e, d) {
                    Ok(Some(_)) => merges += 1,
                    other => err = Some(format!("{name}: merge fails at {:?}: {other:?}", d.parts())),
                }
            });
            if let Some(m) = err {
                return Err(m);
            }
        }
    }
    let mut unions = 0;
    for name in SYSTEMS {
        let g = group(name);
        if g.system().rank() > 3 {
            continue;
        }
        for s in sets(&g) {
            let d = Decomposition::new(&g, s.clone()).unwrap();
            ensure(subfamily_unions_are_inversion_sets(&g, &d), || format!("{name}: sub-union fails for {s:?}"))?;
            unions += 1;
        }
    }
    Ok(format!("{kfold} k-fold products, {merges} merge reductions, {unions} sub-union families"))
}

fn torus_fixed(reports: &BTreeMap<&str, Report>) -> Outcome {
    let mut fixed = 0;
    for (name, r) in reports {
        ensure(kinds(r, ViolationKind::TorusFixedPoints) == 0, || format!("{name}: extra torus-fixed solutions"))?;
        ensure(r.torus_fixed_checks == r.decomposition_sets, || format!("{name}: not every set checked"))?;
        fixed += r.torus_fixed_checks;
    }
    let mut witnesses = 0;
    for name in SYSTEMS {
        let g = group(name);
        if !matches!(g.id().family(), Family::A | Family::B | Family::C) {
            continue;
        }
        for s in sets(&g) {
            for u in 1..g.order() {
                let d = mu_witness(&g, u, &s).unwrap();
                ensure(d.violated_part.is_some(), || format!("{name}: no contradiction for u={u}, parts {s:?}"))?;
                let p = first_moved_coordinate(&g, u);
                ensure(d.failing_weight_index.is_some() && d.failing_weight_index <= p, || {
                    format!("{name}: u={u} fails at {:?}, first moved {p:?}", d.failing_weight_index)
                })?;
                witnesses += 1;
            }
        }
    }
    Ok(format!("{fixed} decompositions with solution set {{e}}, {witnesses} mu witnesses"))
}

fn dn_machinery(reports: &BTreeMap<&str, Report>) -> Outcome {
    let mut witnessed = 0;
    for name in ["D2", "D3", "D4"] {
        let g = group(name);
        for s in sets(&g) {
            let d = Decomposition::new(&g, s.clone()).unwrap();
            ensure(dn_witness(&g, &d).unwrap().is_some(), || format!("{name}: no witness part in {s:?}"))?;
            witnessed += 1;
        }
    }
    let mut deletions = 0;
    for (src, dst) in [("D3", "D2"), ("D4", "D3")] {
        let (gs, gt) = (group(src), group(dst));
        for w in 0..gs.order() {
            for p in 2..=gs.system().rank() {
                let a = delete_coordinate(&gs, &gt, w, p).unwrap();
                let b = restrict_by_deletion(&gs, &gt, w, p).unwrap();
                ensure(a == b, || format!("{src}: deletion of coordinate {p} differs at w={w}"))?;
                deletions += 1;
            }
        }
    }
    let d4 = &reports["D4"];
    ensure(kinds(d4, ViolationKind::Fibration) == 0, || format!("D4 fibration: {:?}", d4.violations))?;
    ensure(d4.fibration_checks == d4.decomposition_sets, || "D4: not every set checked".into())?;
    Ok(format!(
        "{witnessed} witness sets, {deletions} deletions, {} D4 fibrations",
        d4.fibration_checks
    ))
}

fn quadric() -> Outcome {
    let mut anomalies = Vec::new();
    for n in 2..=6 {
        for (rel, ok) in quadric_relations(n) {
            ensure(ok, || format!("n={n}: {rel}"))?;
        }
        let scan = dichotomy_scan(n).map_err(|e| e.to_string())?;
        let got: Vec<&[QuadricClass]> = scan.anomalies.iter().map(|(m, _, _)| m.as_slice()).collect();
        let expected: &[&[QuadricClass]] = if n % 2 == 0 {
            &[&[QuadricClass::A, QuadricClass::A], &[QuadricClass::B, QuadricClass::B]]
        } else {
            &[&[QuadricClass::A, QuadricClass::B]]
        };
        ensure(got == expected, || format!("n={n}: anomalies {got:?}"))?;
        ensure(scan.agreeing + scan.anomalies.len() == scan.checked, || format!("n={n}: miscount"))?;
        anomalies.push(format!("n={n}: {}/{} agree", scan.agreeing, scan.checked));
    }
    Ok(format!("relations hold; dichotomy {}; a*a and b*b vanish for even n", anomalies.join(", ")))
}

fn rank_bound(reports: &BTreeMap<&str, Report>) -> Outcome {
    for (name, r) in reports {
        let rank = name[1..].parse::<usize>().unwrap();
        ensure(kinds(r, ViolationKind::RankBound) == 0 && r.max_parts_seen <= rank, || {
            format!("{name}: {} parts", r.max_parts_seen)
        })?;
    }
    Ok("max parts <= rank in every listed system".into())
}

fn determinism() -> Outcome {
    let mut cfg = RunConfig::new("B3", Cmd::Verify).unwrap();
    cfg.deterministic = true;
    let start = Instant::now();
    let mut single = Vec::new();
    let code = bkmult::run::run(&cfg, &mut single).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(code == 0, || format!("B3 exit {code}"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("B3 took {elapsed:?}"))?;
    for threads in [2, 4, 8] {
        let out = Command::new(env!("CARGO_BIN_EXE_bkmult"))
            .args(["verify", "--system", "B3", "--deterministic", "--threads", &threads.to_string()])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.stdout == single, || format!("{threads} threads: report differs"))?;
    }
    Ok(format!("B3 single-threaded in {elapsed:.2?}; 2, 4, 8 threads byte-identical"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut reports = BTreeMap::new();
    for name in SYSTEMS {
        let id: SystemId = name.parse().unwrap();
        let mut cfg = RunConfig::new(name, Cmd::Verify).unwrap();
        cfg.k_max = id.rank();
        let (_, r) = bkmult::run::verify_report(&cfg).expect("verify runs");
        reports.insert(name, r);
    }
    let elapsed = start.elapsed();

    let results: Vec<(&str, Outcome)> = vec![
        ("multiplicity one", multiplicity_one(&reports, elapsed)),
        ("rho identity", rho_identity()),
        ("duality", duality()),
        ("oracle equivalence", oracles()),
        ("appendix identities", appendix()),
        ("torus-fixed uniqueness", torus_fixed(&reports)),
        ("D_n machinery", dn_machinery(&reports)),
        ("quadric ring", quadric()),
        ("rank bound", rank_bound(&reports)),
        ("determinism and performance", determinism()),
    ];
    let mut failed = false;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(d) => println!("PASS {:>2} {name}: {d}", i + 1),
            Err(d) => {
                failed = true;
                println!("FAIL {:>2} {name}: {d}", i + 1);
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
