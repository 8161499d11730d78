//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nucleon::algebra::{Elem, Table};
use nucleon::chain::{ChainDescriptor, ChainElement};
use nucleon::nucleus::{
    self, brute_force_nuclei, enumerate_nuclei, is_term_nucleus, meet_nuclei, term_map,
};
use nucleon::term::{check_identity, eval, Env, NamedTerm, Term};
use nucleon::variety::{
    self, decomposition_rhs, glivenko_lhs, CaseId, CheckKind, CheckStatus, VarietyDescriptor,
};
use nucleon::zoo;
use nucleon::FiniteResiduatedLattice;

use common::{axiom_corpus, chain, finite_corpus, glivenko_consistent, nucleus_laws};

/// Window for every check on infinite chains.
const WINDOW: u64 = 16;
const MUTATIONS: usize = 100;
const LIMIT_AXIOMS: Duration = Duration::from_secs(5);
const LIMIT_ORACLE: Duration = Duration::from_secs(30);
const LIMIT_VARIETY: Duration = Duration::from_secs(10);
const ORACLE_MAX_SIZE: usize = 6;
const RANDOM_TERMS: usize = 200;
const SEED: u64 = 0x6e75_636c;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn mutate(a: &FiniteResiduatedLattice, rng: &mut ChaCha8Rng) -> (FiniteResiduatedLattice, String) {
    let n = a.size();
    let (row, col) = (rng.gen_range(0..n), rng.gen_range(0..n));
    match rng.gen_range(0..3) {
        0 => {
            let v = !a.leq(row, col);
            (a.with_entry(Table::Leq, row, col, v as Elem), format!("leq[{row}][{col}]"))
        }
        t => {
            let (table, old) = if t == 1 {
                (Table::Mul, a.mul(row, col))
            } else {
                (Table::Imp, a.imp(row, col))
            };
            let v = (old + rng.gen_range(1..n)) % n;
            (a.with_entry(table, row, col, v), format!("{table:?}[{row}][{col}] = {v}"))
        }
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let corpus = axiom_corpus();
    for (name, a) in &corpus {
        let r = a.validate_axioms();
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
        for _ in 0..MUTATIONS {
            let (m, what) = mutate(a, &mut rng);
            let r = m.validate_axioms();
            let first = r.failures.first();
            ensure(first.is_some_and(|f| !f.witness.is_empty()), || {
                format!("{name}: mutation {what} not rejected with a witness")
            })?;
        }
    }
    let took = within(LIMIT_AXIOMS, start)?;
    Ok(format!(
        "{} algebras valid, {} mutations rejected ({took:.1?})",
        corpus.len(),
        corpus.len() * MUTATIONS
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (name, a) in finite_corpus() {
        if a.size() > ORACLE_MAX_SIZE {
            continue;
        }
        let fast = enumerate_nuclei(&a).map_err(|e| e.to_string())?;
        let slow = brute_force_nuclei(&a).map_err(|e| e.to_string())?;
        let fast: BTreeSet<_> = fast.iter().map(|g| g.values().to_vec()).collect();
        let slow: BTreeSet<_> = slow.iter().map(|g| g.values().to_vec()).collect();
        ensure(fast == slow, || format!("{name}: {fast:?} vs {slow:?}"))?;
        checked += 1;
    }
    for (a, expected, name) in [
        (zoo::mv_chain(2), 3, "S2+"),
        (zoo::mv_chain(3), 4, "S3+"),
        (zoo::godel_chain(3), 4, "G3"),
    ] {
        let n = enumerate_nuclei(&a).map_err(|e| e.to_string())?.len();
        ensure(n == expected, || format!("{name}: {n} nuclei, expected {expected}"))?;
    }
    let took = within(LIMIT_ORACLE, start)?;
    Ok(format!("{checked} algebras agree with the brute-force oracle ({took:.1?})"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for (name, a) in finite_corpus() {
        if !a.classify().is_mv {
            continue;
        }
        for g in enumerate_nuclei(&a).map_err(|e| e.to_string())? {
            let gb = g.apply(a.bot());
            for x in a.elements() {
                ensure(g.apply(x) == a.join(x, gb), || {
                    format!("{name}: {:?} differs from x v g(bot) at {x}", g.values())
                })?;
            }
            checked += 1;
        }
    }
    ensure(checked > 0, || "no MV algebra in the corpus".into())?;
    Ok(format!("{checked} nuclei on MV algebras are joins with a constant"))
}

fn criterion_4() -> Outcome {
    let t = NamedTerm::ExampleT.term();
    for n in 3..=6 {
        let a = zoo::a_n_chain(n);
        let out = is_term_nucleus(&a, &t, WINDOW, &Env::new()).map_err(|e| e.to_string())?;
        ensure(out.is_nucleus(), || format!("A{n}: {out:?}"))?;
        let vals = term_map(&a, &t, &Env::new()).map_err(|e| e.to_string())?;
        ensure(vals[a.bot()] == a.bot(), || format!("A{n}: t(bot) != bot"))?;
        // indices: a_i = i, top = n + 1
        let (a2, an, top) = (2, n, a.top());
        ensure(
            a.lt(a2, vals[a2]) && vals[a2] == an && a.lt(an, top) && a.neg(a.neg(a2)) == top,
            || format!("A{n}: witness chain broken, t(a_2) = {}", vals[a2]),
        )?;
    }
    Ok("(x -> x^2) -> x^2 is a nontrivial nucleus on A3..A6".into())
}

fn v(gens: &[&str]) -> VarietyDescriptor {
    VarietyDescriptor::parse_generators(gens).unwrap()
}

/// Varieties of criterion 5 with their expected cases.
fn case_varieties() -> Vec<(VarietyDescriptor, CaseId)> {
    vec![
        (v(&["S1 + S1 + Sw"]), CaseId::II),
        (v(&["S1 + Sw + S1"]), CaseId::III),
        (v(&["S1 + S1", "S1 + Sw"]), CaseId::IV),
        (v(&["S1 + S1w"]), CaseId::I),
        (v(&["S1 + S3", "S1 + S2 + Sw"]), CaseId::II),
    ]
}

fn all_status(recs: &[&variety::CheckRecord], ok: &[CheckStatus]) -> bool {
    !recs.is_empty() && recs.iter().all(|r| ok.contains(&r.status))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let good = [CheckStatus::Ok, CheckStatus::OkOnWindow];
    let refuted_somewhere = |r: &variety::VarietyReport, t: &str| {
        r.find(t, CheckKind::Refutation)
            .iter()
            .any(|c| c.status == CheckStatus::Refuted && c.witness.is_some())
    };
    for (var, case) in case_varieties() {
        let r = variety::verify_classification(&var, WINDOW).map_err(|e| e.to_string())?;
        ensure(r.catalog.case == case, || format!("{var}: case {} not {case}", r.catalog.case))?;
        ensure(r.warnings.is_empty(), || format!("{var}: warnings {:?}", r.warnings))?;
        ensure(r.failures().next().is_none(), || {
            format!("{var}: failed checks {:?}", r.failures().collect::<Vec<_>>())
        })?;
        let ok = |t: &str| all_status(&r.find(t, CheckKind::Nucleus), &good);
        let gens = var.generators().len();
        match case {
            CaseId::II if r.catalog.m == Some(1) => {
                ensure(ok("s(1)"), || "s(1) not verified".into())?;
                ensure(refuted_somewhere(&r, "t(1)"), || "t(1) not refuted".into())?;
            }
            CaseId::III => {
                ensure(ok("t(1)"), || "t(1) not verified".into())?;
                ensure(refuted_somewhere(&r, "s(1)"), || "s(1) not refuted".into())?;
            }
            CaseId::IV => {
                for t in ["s(1)", "t(1)"] {
                    let recs = r.find(t, CheckKind::Nucleus);
                    ensure(recs.len() == gens && ok(t), || format!("{t}: {recs:?}"))?;
                }
            }
            CaseId::I => {
                for t in ["s(1)", "t(1)"] {
                    ensure(refuted_somewhere(&r, t), || format!("{t} not refuted on {var}"))?;
                }
            }
            CaseId::II => {
                ensure(r.catalog.m == Some(3), || format!("m = {:?}", r.catalog.m))?;
                let recs = r.find("s(3)", CheckKind::Nucleus);
                ensure(recs.len() == gens && ok("s(3)"), || format!("s(3): {recs:?}"))?;
                let s1 = r.find("s(1)", CheckKind::Refutation);
                ensure(
                    s1.iter().any(|c| c.generator == "S1 + S3" && c.status == CheckStatus::Refuted),
                    || format!("s(1) on [S1 + S3]: {s1:?}"),
                )?;
            }
        }
    }
    // the pair showing that m = 3 is needed on [S1 + S3]
    let d: ChainDescriptor = "S1 + S3".parse().unwrap();
    let s1 = NamedTerm::S(1).term();
    let (a, b) = (ChainElement::pow(1, 1), ChainElement::pow(1, 3));
    let at = |x| eval(&s1, &d, &[("x".to_string(), x)].into()).unwrap();
    let lhs = d.imp(a, at(b)).unwrap();
    let rhs = d.imp(at(a), at(b)).unwrap();
    ensure(lhs == ChainElement::pow(1, 2) && rhs == ChainElement::pow(1, 3), || {
        format!("s(1) at ((1,1),(1,3)) gives {lhs} and {rhs}")
    })?;
    let took = within(LIMIT_VARIETY, start)?;
    Ok(format!("five varieties classified and cross-checked on window {WINDOW} ({took:.1?})"))
}

fn criterion_6() -> Outcome {
    let x = Term::var("x");
    let mut checks = 0;
    for (var, _) in case_varieties() {
        let cat = variety::classify(&var);
        for t in &cat.terms {
            let term = t.term();
            for g in var.generators() {
                let gl = check_identity(g, &glivenko_lhs(&term), &Term::Top, WINDOW)
                    .map_err(|e| e.to_string())?;
                ensure(gl.holds(), || format!("{t} on [{g}]: t(t(x) -> x) != 1: {gl:?}"))?;
                checks += 1;
                let at_bot = eval(&term, g, &[("x".to_string(), g.bot())].into()).unwrap();
                if at_bot == g.bot() {
                    let dec = check_identity(g, &x, &decomposition_rhs(&term), WINDOW)
                        .map_err(|e| e.to_string())?;
                    ensure(dec.holds(), || format!("{t} on [{g}]: decomposition {dec:?}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} identity checks on window {WINDOW}"))
}

fn criterion_7() -> Outcome {
    let x = Term::var("x");
    let dn = NamedTerm::DoubleNeg.term();
    let mut checks = 0;
    for (var, _) in case_varieties() {
        let m = variety::compute_flags(&var).m.ok_or("variety without m")?;
        let (s, t) = (NamedTerm::S(m).term(), NamedTerm::T(m).term());
        let identities = [
            (Term::meet(s.clone(), t.clone()), x.clone(), "s /\\ t = x"),
            (Term::join(s.clone(), t.clone()), dn.clone(), "s \\/ t = ~~x"),
            (s.clone(), Term::meet(dn.clone(), Term::imp(t.clone(), x.clone())), "s = ~~x /\\ (t -> x)"),
        ];
        for g in var.generators() {
            for (l, r, what) in &identities {
                let out = check_identity(g, l, r, WINDOW).map_err(|e| e.to_string())?;
                ensure(out.holds(), || format!("{what} with m = {m} on [{g}]: {out:?}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} lattice identities between s(m) and t(m) hold"))
}

fn criterion_8() -> Outcome {
    let mut nuclei = 0;
    for (name, a) in finite_corpus() {
        let all = enumerate_nuclei(&a).map_err(|e| e.to_string())?;
        let set: BTreeSet<_> = all.iter().collect();
        for g in &all {
            nucleus_laws(&a, g).map_err(|e| format!("{name} {:?}: {e}", g.values()))?;
            let img = nucleus::nuclear_image(&a, g);
            let r = img.algebra.validate_axioms();
            ensure(r.is_valid(), || format!("{name} {:?}: image {r}", g.values()))?;
            let dense = nucleus::dense_filter(&a, g);
            ensure(a.is_filter(&dense.members), || format!("{name}: dense set not a filter"))?;
            glivenko_consistent(&a, g).map_err(|e| format!("{name} {:?}: {e}", g.values()))?;
            for h in &all {
                let m = meet_nuclei(&a, g, h);
                ensure(set.contains(&m), || format!("{name}: meet {:?} not enumerated", m.values()))?;
            }
            nuclei += 1;
        }
    }
    // local values on finite chains: γ(a) = a ∨ γ(⊥_i)
    for desc in ["S1 + S3", "S2 + S2", "S1 + S1 + S1", "S1 + S2 + S1", "S3 + S1 + S2"] {
        let d: ChainDescriptor = desc.parse().unwrap();
        let (a, elems) = d.materialize_finite().unwrap();
        for g in enumerate_nuclei(&a).map_err(|e| e.to_string())? {
            for (x, e) in elems.iter().enumerate() {
                let Some(comp) = e.component() else { continue };
                let bi = d.component_bottom(comp).unwrap();
                let bi = elems.iter().position(|&y| y == bi).unwrap();
                ensure(g.apply(x) == a.join(x, g.apply(bi)), || {
                    format!("[{desc}] {:?}: local value at {e}", g.values())
                })?;
            }
        }
    }
    Ok(format!("{nuclei} nuclei satisfy the nucleus laws, images and Glivenko checks"))
}

fn criterion_9() -> Outcome {
    let x = Term::var("x");
    let dn = NamedTerm::DoubleNeg.term();
    for n in 2..=6 {
        let g = zoo::godel_chain(n);
        for m in 1..=3 {
            let s = check_identity(&g, &NamedTerm::S(m).term(), &x, WINDOW).map_err(|e| e.to_string())?;
            ensure(s.holds(), || format!("G{n}: s({m}) != x: {s:?}"))?;
            let t = check_identity(&g, &NamedTerm::T(m).term(), &dn, WINDOW).map_err(|e| e.to_string())?;
            ensure(t.holds(), || format!("G{n}: t({m}) != ~~x: {t:?}"))?;
        }
    }
    Ok("s(m) = x and t(m) = ~~x on Goedel chains of size 2..6".into())
}

fn random_term(rng: &mut ChaCha8Rng, depth: u32) -> Term {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..5) {
            0 => Term::Bot,
            1 | 2 => Term::var("x"),
            _ => Term::var("y"),
        };
    }
    let l = random_term(rng, depth - 1);
    let r = random_term(rng, depth - 1);
    if rng.gen_bool(0.5) {
        Term::fuse(l, r)
    } else {
        Term::imp(l, r)
    }
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let dn = NamedTerm::DoubleNeg.term();
    let terms: Vec<Term> = (0..RANDOM_TERMS).map(|_| random_term(&mut rng, 4)).collect();
    for desc in ["S1 + S2", "S1 + S1"] {
        let a = chain(desc);
        let t = term_map(&a, &dn, &Env::new()).map_err(|e| e.to_string())?;
        for phi in &terms {
            for x in a.elements() {
                for y in a.elements() {
                    let env = |p: Elem, q: Elem| -> Env<Elem> {
                        [("x".to_string(), p), ("y".to_string(), q)].into()
                    };
                    let direct = eval(phi, &a, &env(x, y)).map_err(|e| e.to_string())?;
                    let inner = eval(phi, &a, &env(t[x], t[y])).map_err(|e| e.to_string())?;
                    ensure(t[direct] == t[inner], || {
                        format!("[{desc}] {phi} at ({x},{y}): {} vs {}", t[direct], t[inner])
                    })?;
                }
            }
        }
    }
    Ok(format!("~~ commutes with {RANDOM_TERMS} random terms on [S1 + S2] and [S1 + S1]"))
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "axiom suite", criterion_1),
        (2, "oracle equivalence", criterion_2),
        (3, "MV nuclei", criterion_3),
        (4, "A_n example term", criterion_4),
        (5, "variety classification", criterion_5),
        (6, "Glivenko and decomposition identities", criterion_6),
        (7, "s/t lattice identities", criterion_7),
        (8, "nucleus property suite", criterion_8),
        (9, "idempotent collapse", criterion_9),
        (10, "homomorphism identity", criterion_10),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(Ok(msg)) => println!("PASS criterion {n} ({name}): {msg}"),
            Ok(Err(msg)) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {msg}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): panicked");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
