//! Which unary terms define nuclei on a variety of BL-algebras generated by
//! finitely many symbolic chains.
//!
//! Membership of the five test chains `S_{1,1}`, `S_{1,ω}`, `S_{1,1^ω}`,
//! `S_{1,1,ω}` and `S_{1,ω,1}` is decided by embeddings at the level of
//! descriptors: a test chain counts as present when it embeds into one of the
//! generators. Homomorphic images and ultraproducts are not explored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::chain::{ChainDescriptor, ChainElement, ChainError, ComponentKind};
use crate::nucleus::{is_term_nucleus, TermNucleusOutcome};
use crate::term::{check_identity, eval, Carrier, Env, EvalError, IdentityOutcome, NamedTerm, Term};

#[derive(Debug, Error)]
pub enum VarietyError {
    #[error("a variety needs at least one generator")]
    Empty,
    #[error("generator {index}: {source}")]
    Generator { index: usize, source: ChainError },
    #[error("malformed variety JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyDescriptor {
    generators: Vec<ChainDescriptor>,
}

#[derive(Deserialize)]
struct VarietyFile {
    generators: Vec<String>,
}

impl VarietyDescriptor {
    pub fn new(generators: Vec<ChainDescriptor>) -> Result<Self, VarietyError> {
        if generators.is_empty() {
            return Err(VarietyError::Empty);
        }
        Ok(Self { generators })
    }

    pub fn parse_generators<S: AsRef<str>>(gens: &[S]) -> Result<Self, VarietyError> {
        let generators = gens
            .iter()
            .enumerate()
            .map(|(index, g)| {
                g.as_ref()
                    .parse()
                    .map_err(|source| VarietyError::Generator { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(generators)
    }

    /// Reads `{"generators": ["S1 + S1 + Sw", ...]}`.
    pub fn from_json(text: &str) -> Result<Self, VarietyError> {
        let file: VarietyFile = serde_json::from_str(text)?;
        Self::parse_generators(&file.generators)
    }

    pub fn generators(&self) -> &[ChainDescriptor] {
        &self.generators
    }
}

impl fmt::Display for VarietyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| format!("[{g}]")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct VarietyFlags {
    pub has_s11: bool,
    pub has_s1w: bool,
    /// property (T): an element of infinite order in a bounded upper component
    pub has_s1_1w: bool,
    pub has_s11w: bool,
    pub has_s1w1: bool,
    pub p: BTreeSet<u32>,
    pub m: Option<u32>,
}

fn bounded(k: ComponentKind) -> bool {
    k.is_bounded()
}

/// Components containing an element of infinite order.
fn infinite_order(k: ComponentKind) -> bool {
    matches!(k, ComponentKind::Omega | ComponentKind::Chang)
}

/// Stabilisation exponents of the elements of one upper component.
fn exponents(k: ComponentKind) -> Vec<u32> {
    match k {
        ComponentKind::FiniteMv(k) => (1..=k).map(|i| k.div_ceil(i)).collect(),
        // (0,0) is idempotent, (0,k) squares to (0,0)
        ComponentKind::Chang => vec![1, 2],
        ComponentKind::Omega => vec![],
    }
}

pub fn compute_flags(v: &VarietyDescriptor) -> VarietyFlags {
    let mut f = VarietyFlags::default();
    for g in v.generators() {
        let upper = &g.components()[1..];
        f.has_s11 |= upper.iter().any(|&k| bounded(k));
        f.has_s1w |= upper.iter().any(|&k| infinite_order(k));
        f.has_s1_1w |= upper.contains(&ComponentKind::Chang);
        for (i, &a) in upper.iter().enumerate() {
            for &b in &upper[i + 1..] {
                f.has_s11w |= bounded(a) && infinite_order(b);
                f.has_s1w1 |= infinite_order(a) && bounded(b);
            }
            f.p.extend(exponents(a));
        }
    }
    f.m = f.p.iter().max().copied();
    f
}

/// Which of the mutually exclusive conditions on the flags holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// neither `S_{1,1}` nor `S_{1,ω}`
    Neither,
    /// `S_{1,1}` without `S_{1,ω}`
    OnlyS11,
    /// `S_{1,ω}` without `S_{1,1}`
    OnlyS1w,
    /// `S_{1,1^ω}`
    PropertyT,
    /// `S_{1,1,ω}` and `S_{1,ω,1}` without `S_{1,1^ω}`
    BothOrders,
    /// `S_{1,1,ω}` alone
    #[serde(rename = "case_ii")]
    CaseII,
    /// `S_{1,ω,1}` alone
    #[serde(rename = "case_iii")]
    CaseIII,
    /// `S_{1,1}` and `S_{1,ω}`, none of the three above
    #[serde(rename = "case_iv")]
    CaseIV,
}

/// All conditions satisfied by the flags; exactly one for consistent flags.
pub fn conditions(f: &VarietyFlags) -> Vec<Condition> {
    let mut out = Vec::new();
    let rest = !f.has_s1_1w;
    if !f.has_s11 && !f.has_s1w {
        out.push(Condition::Neither);
    }
    if f.has_s11 && !f.has_s1w {
        out.push(Condition::OnlyS11);
    }
    if f.has_s1w && !f.has_s11 {
        out.push(Condition::OnlyS1w);
    }
    if f.has_s1_1w {
        out.push(Condition::PropertyT);
    }
    if f.has_s11w && f.has_s1w1 && rest {
        out.push(Condition::BothOrders);
    }
    if f.has_s11w && rest && !f.has_s1w1 {
        out.push(Condition::CaseII);
    }
    if f.has_s1w1 && rest && !f.has_s11w {
        out.push(Condition::CaseIII);
    }
    if f.has_s11 && f.has_s1w && rest && !f.has_s11w && !f.has_s1w1 {
        out.push(Condition::CaseIV);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseId {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseId::I => "i",
            CaseId::II => "ii",
            CaseId::III => "iii",
            CaseId::IV => "iv",
        })
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NucleusCatalog {
    pub case: CaseId,
    pub condition: Condition,
    pub m: Option<u32>,
    /// Every nucleus term on the variety is equivalent to one of these.
    pub terms: Vec<NamedTerm>,
    /// `¬¬x ≈ x` holds, so `x` and `¬¬x` name the same nucleus.
    pub double_neg_is_identity: bool,
}

impl NucleusCatalog {
    pub fn nontrivial(&self) -> impl Iterator<Item = NamedTerm> + '_ {
        self.terms
            .iter()
            .copied()
            .filter(|t| matches!(t, NamedTerm::S(_) | NamedTerm::T(_)))
    }
}

pub fn classify(v: &VarietyDescriptor) -> NucleusCatalog {
    catalog_for(&compute_flags(v), v)
}

fn catalog_for(f: &VarietyFlags, v: &VarietyDescriptor) -> NucleusCatalog {
    let condition = conditions(f)[0];
    let mut terms = vec![NamedTerm::Identity, NamedTerm::DoubleNeg, NamedTerm::Top];
    let case = match condition {
        Condition::CaseII => CaseId::II,
        Condition::CaseIII => CaseId::III,
        Condition::CaseIV => CaseId::IV,
        _ => CaseId::I,
    };
    // cases (ii)-(iv) need S_{1,1}, so m exists there
    if let Some(m) = f.m {
        if matches!(case, CaseId::II | CaseId::IV) {
            terms.push(NamedTerm::S(m));
        }
        if matches!(case, CaseId::III | CaseId::IV) {
            terms.push(NamedTerm::T(m));
        }
    }
    NucleusCatalog {
        case,
        condition,
        m: f.m,
        terms,
        double_neg_is_identity: v.generators().iter().all(|g| g.len() == 1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// the term is expected to be a nucleus
    Nucleus,
    /// the term is expected not to be a nucleus on the variety
    Refutation,
    /// the term differs from `x`, `¬¬x` and `⊤`
    Nontrivial,
    /// the term is a nucleus but coincides with `x` or `¬¬x`
    Collapse,
    /// `t(t(x) → x) ≈ ⊤`
    Glivenko,
    /// `x ≈ ¬¬x · (¬¬x → t(x)) · (t(x) → x)`
    Decomposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    /// holds on the whole (finite) generator
    Ok,
    /// holds on the window of an infinite generator
    OkOnWindow,
    /// a counterexample was found where one was expected
    Refuted,
    /// no counterexample on this generator; another one may still refute
    NotRefutedHere,
    /// the expected witnesses were found
    Witnessed,
    /// the check contradicts the classification
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub generator: String,
    pub term: String,
    pub check: CheckKind,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub kind: &'static str,
    pub term: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarietyReport {
    pub variety: Vec<String>,
    pub window: u64,
    pub flags: VarietyFlags,
    pub catalog: NucleusCatalog,
    pub checks: Vec<CheckRecord>,
    pub warnings: Vec<Warning>,
}

impl VarietyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Failed)
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none() && self.warnings.is_empty()
    }

    /// Records for one term and check kind, in generator order.
    pub fn find(&self, term: &str, check: CheckKind) -> Vec<&CheckRecord> {
        self.checks
            .iter()
            .filter(|c| c.term == term && c.check == check)
            .collect()
    }
}

fn witness(pairs: &[(&str, ChainElement)]) -> Option<BTreeMap<String, String>> {
    Some(pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect())
}

fn ok_status(g: &ChainDescriptor) -> CheckStatus {
    if g.is_finite() {
        CheckStatus::Ok
    } else {
        CheckStatus::OkOnWindow
    }
}

/// Candidate terms whose status is predicted by the flags: `s(k)`, `t(k)`
/// for `k ≤ m`. Returns each with whether it should be a nucleus.
pub fn candidates(f: &VarietyFlags) -> Vec<(NamedTerm, bool)> {
    let Some(m) = f.m else { return vec![] };
    let s_ok = !f.has_s1_1w && !f.has_s1w1;
    let t_ok = !f.has_s1_1w && !f.has_s11w;
    let mut out = Vec::new();
    for k in 1..=m {
        out.push((NamedTerm::S(k), k == m && s_ok));
        out.push((NamedTerm::T(k), k == m && t_ok));
    }
    out
}

/// Cross-checks [`classify`] by evaluating on the generators, with infinite
/// components cut off at `window`.
pub fn verify_classification(v: &VarietyDescriptor, window: u64) -> Result<VarietyReport, VarietyError> {
    let flags = compute_flags(v);
    let catalog = catalog_for(&flags, v);
    let mut checks = Vec::new();
    let mut warnings = Vec::new();
    let none = Env::new();
    let win = |g: &ChainDescriptor| (!g.is_finite()).then_some(window);

    for t in &catalog.terms {
        let term = t.term();
        for g in v.generators() {
            checks.push(nucleus_check(g, *t, &term, window, CheckKind::Nucleus)?);
            let gl = check_identity(g, &glivenko_lhs(&term), &Term::Top, window)?;
            checks.push(identity_record(g, *t, CheckKind::Glivenko, gl, win(g)));
            if eval(&term, g, &[("x".to_string(), g.bot())].into())? == g.bot() {
                let dec = check_identity(g, &Term::var("x"), &decomposition_rhs(&term), window)?;
                checks.push(identity_record(g, *t, CheckKind::Decomposition, dec, win(g)));
            }
        }
    }

    for t in catalog.nontrivial() {
        checks.push(nontrivial_check(v, t, window, &mut warnings)?);
    }

    for (t, expect_nucleus) in candidates(&flags) {
        if catalog.terms.contains(&t) {
            continue;
        }
        let term = t.term();
        if expect_nucleus {
            // outside the catalog, so it must coincide with a trivial term
            let trivial = match t {
                NamedTerm::S(_) => NamedTerm::Identity,
                _ => NamedTerm::DoubleNeg,
            };
            for g in v.generators() {
                checks.push(nucleus_check(g, t, &term, window, CheckKind::Nucleus)?);
                let same = check_identity(g, &term, &trivial.term(), window)?;
                checks.push(identity_record(g, t, CheckKind::Collapse, same, win(g)));
            }
            continue;
        }
        let mut refuted = false;
        for g in v.generators() {
            let out = is_term_nucleus(g, &term, window, &none)?;
            let (status, w) = match out {
                TermNucleusOutcome::Counterexample { a, b, lhs, rhs } => {
                    refuted = true;
                    (
                        CheckStatus::Refuted,
                        witness(&[("a", a), ("b", b), ("a -> t(b)", lhs), ("t(a) -> t(b)", rhs)]),
                    )
                }
                TermNucleusOutcome::Nucleus { .. } => (CheckStatus::NotRefutedHere, None),
            };
            checks.push(CheckRecord {
                generator: g.to_string(),
                term: t.to_string(),
                check: CheckKind::Refutation,
                status,
                window: win(g),
                witness: w,
            });
        }
        if !refuted {
            warnings.push(Warning {
                kind: "inconclusive_window",
                term: t.to_string(),
                message: format!("expected a counterexample, none found on window {window}"),
            });
        }
    }

    Ok(VarietyReport {
        variety: v.generators().iter().map(ToString::to_string).collect(),
        window,
        flags,
        catalog,
        checks,
        warnings,
    })
}

fn nucleus_check(
    g: &ChainDescriptor,
    t: NamedTerm,
    term: &Term,
    window: u64,
    check: CheckKind,
) -> Result<CheckRecord, VarietyError> {
    let out = is_term_nucleus(g, term, window, &Env::new())?;
    let (status, w) = match out {
        TermNucleusOutcome::Nucleus { .. } => (ok_status(g), None),
        TermNucleusOutcome::Counterexample { a, b, lhs, rhs } => (
            CheckStatus::Failed,
            witness(&[("a", a), ("b", b), ("a -> t(b)", lhs), ("t(a) -> t(b)", rhs)]),
        ),
    };
    Ok(CheckRecord {
        generator: g.to_string(),
        term: t.to_string(),
        check,
        status,
        window: (!g.is_finite()).then_some(window),
        witness: w,
    })
}

fn identity_record(
    g: &ChainDescriptor,
    t: NamedTerm,
    check: CheckKind,
    out: IdentityOutcome<ChainElement>,
    window: Option<u64>,
) -> CheckRecord {
    let (status, w) = match out {
        IdentityOutcome::Holds { .. } => (ok_status(g), None),
        IdentityOutcome::Counterexample { env, left, right } => {
            let mut pairs: Vec<(&str, ChainElement)> =
                env.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            pairs.push(("left", left));
            pairs.push(("right", right));
            (CheckStatus::Failed, witness(&pairs))
        }
    };
    CheckRecord {
        generator: g.to_string(),
        term: t.to_string(),
        check,
        status,
        window,
        witness: w,
    }
}

/// `t(t(x) → x)`
pub fn glivenko_lhs(t: &Term) -> Term {
    t.substitute("x", &Term::imp(t.clone(), Term::var("x")))
}

/// `¬¬x · (¬¬x → t(x)) · (t(x) → x)`
pub fn decomposition_rhs(t: &Term) -> Term {
    let dn = NamedTerm::DoubleNeg.term();
    let x = Term::var("x");
    Term::fuse(
        Term::fuse(dn.clone(), Term::imp(dn, t.clone())),
        Term::imp(t.clone(), x),
    )
}

/// Looks for `a < t(a)` and `t(a') < ¬¬a'` on any generator.
fn nontrivial_check(
    v: &VarietyDescriptor,
    t: NamedTerm,
    window: u64,
    warnings: &mut Vec<Warning>,
) -> Result<CheckRecord, VarietyError> {
    let term = t.term();
    let dn = NamedTerm::DoubleNeg.term();
    let mut above: Option<(String, ChainElement, ChainElement)> = None;
    let mut below: Option<(String, ChainElement, ChainElement, ChainElement)> = None;
    for g in v.generators() {
        for a in g.window(window) {
            let env: Env<ChainElement> = [("x".to_string(), a)].into();
            let ta = eval(&term, g, &env)?;
            let da = eval(&dn, g, &env)?;
            if above.is_none() && a < ta {
                above = Some((g.to_string(), a, ta));
            }
            if below.is_none() && ta < da {
                below = Some((g.to_string(), a, ta, da));
            }
        }
    }
    let mut w = BTreeMap::new();
    if let Some((g, a, ta)) = &above {
        w.insert("above.generator".to_string(), g.clone());
        w.insert("above.x".to_string(), a.to_string());
        w.insert("above.t(x)".to_string(), ta.to_string());
    }
    if let Some((g, a, ta, da)) = &below {
        w.insert("below.generator".to_string(), g.clone());
        w.insert("below.x".to_string(), a.to_string());
        w.insert("below.t(x)".to_string(), ta.to_string());
        w.insert("below.~~x".to_string(), da.to_string());
    }
    let status = if above.is_some() && below.is_some() {
        CheckStatus::Witnessed
    } else {
        warnings.push(Warning {
            kind: "inconclusive_window",
            term: t.to_string(),
            message: format!("no nontriviality witness on window {window}"),
        });
        CheckStatus::NotRefutedHere
    };
    Ok(CheckRecord {
        generator: v.to_string(),
        term: t.to_string(),
        check: CheckKind::Nontrivial,
        status,
        window: Some(window),
        witness: Some(w),
    })
}

impl FromStr for VarietyDescriptor {
    type Err = VarietyError;

    /// Generators separated by `;`, e.g. `S1 + S1; S1 + Sw`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let gens: Vec<&str> = s.split(';').map(str::trim).collect();
        Self::parse_generators(&gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(gens: &[&str]) -> VarietyDescriptor {
        VarietyDescriptor::parse_generators(gens).unwrap()
    }

    #[test]
    fn condition_names() {
        let names: Vec<String> = [Condition::OnlyS1w, Condition::CaseII, Condition::CaseIII, Condition::CaseIV]
            .iter()
            .map(|c| serde_json::to_value(c).unwrap().as_str().unwrap().to_string())
            .collect();
        assert_eq!(names, ["only_s1w", "case_ii", "case_iii", "case_iv"]);
    }

    #[test]
    fn flags_of_s11_and_s1w() {
        let f = compute_flags(&v(&["S1 + S1", "S1 + Sw"]));
        assert!(f.has_s11 && f.has_s1w);
        assert!(!f.has_s11w && !f.has_s1w1 && !f.has_s1_1w);
        assert_eq!(f.p, BTreeSet::from([1]));
        assert_eq!(f.m, Some(1));
    }

    #[test]
    fn chang_component_has_property_t() {
        let f = compute_flags(&v(&["S1 + S1w"]));
        assert!(f.has_s1_1w && f.has_s11 && f.has_s1w);
        assert_eq!(classify(&v(&["S1 + S1w"])).case, CaseId::I);
    }

    #[test]
    fn exponent_set() {
        let f = compute_flags(&v(&["S1 + S3", "S1 + S2 + Sw"]));
        assert_eq!(f.p, BTreeSet::from([1, 2, 3]));
        assert_eq!(f.m, Some(3));
        assert!(f.has_s11w && !f.has_s1w1);
        let f = compute_flags(&v(&["S2 + S5"]));
        assert_eq!(f.p, BTreeSet::from([1, 2, 3, 5]));
    }

    #[test]
    fn catalogues() {
        let c = classify(&v(&["S1 + S1 + Sw"]));
        assert_eq!(c.case, CaseId::II);
        assert_eq!(
            c.terms,
            vec![NamedTerm::Identity, NamedTerm::DoubleNeg, NamedTerm::Top, NamedTerm::S(1)]
        );
        let c = classify(&v(&["S1 + Sw + S1"]));
        assert_eq!(c.case, CaseId::III);
        assert_eq!(c.terms.last(), Some(&NamedTerm::T(1)));
        let c = classify(&v(&["S3"]));
        assert_eq!(c.case, CaseId::I);
        assert_eq!(c.terms.len(), 3);
        assert!(c.double_neg_is_identity);
        let c = classify(&v(&["S1 + S1", "S1 + Sw"]));
        assert_eq!(c.case, CaseId::IV);
        assert_eq!(c.nontrivial().collect::<Vec<_>>(), vec![NamedTerm::S(1), NamedTerm::T(1)]);
        assert!(!c.double_neg_is_identity);
    }

    #[test]
    fn exactly_one_condition_fires() {
        for bits in 0u32..32 {
            let b = |i: u32| bits & (1 << i) != 0;
            let f = VarietyFlags {
                has_s11: b(0),
                has_s1w: b(1),
                has_s1_1w: b(2),
                has_s11w: b(3),
                has_s1w1: b(4),
                p: if b(0) { BTreeSet::from([1]) } else { BTreeSet::new() },
                m: b(0).then_some(1),
            };
            let both = f.has_s11 && f.has_s1w;
            let consistent =
                (!f.has_s1_1w || both) && (!f.has_s11w || both) && (!f.has_s1w1 || both);
            if consistent {
                assert_eq!(conditions(&f).len(), 1, "{f:?}");
            }
        }
    }

    #[test]
    fn variety_file() {
        let d = VarietyDescriptor::from_json(r#"{"generators": ["S1 + S1", "S1 + Sw"]}"#).unwrap();
        assert_eq!(d.generators().len(), 2);
        assert!(matches!(
            VarietyDescriptor::from_json(r#"{"generators": []}"#),
            Err(VarietyError::Empty)
        ));
        assert!(matches!(
            VarietyDescriptor::from_json(r#"{"generators": ["Sw"]}"#),
            Err(VarietyError::Generator { index: 0, .. })
        ));
        assert_eq!("S1 + S1; S1 + Sw".parse::<VarietyDescriptor>().unwrap(), d);
    }

    #[test]
    fn verification_of_case_ii() {
        let r = verify_classification(&v(&["S1 + S1 + Sw"]), 16).unwrap();
        assert!(r.is_clean(), "{:?}", r.failures().collect::<Vec<_>>());
        let s1 = r.find("s(1)", CheckKind::Nucleus);
        assert_eq!(s1[0].status, CheckStatus::OkOnWindow);
        assert_eq!(s1[0].window, Some(16));
        let t1 = r.find("t(1)", CheckKind::Refutation);
        let w = t1[0].witness.as_ref().unwrap();
        assert_eq!(w["a"], "(1,1)");
        assert_eq!(w["b"], "(2,1)");
    }

    #[test]
    fn verification_of_chang_variety() {
        let r = verify_classification(&v(&["S1 + S1w"]), 16).unwrap();
        assert!(r.is_clean());
        for t in ["s(1)", "t(1)", "s(2)", "t(2)"] {
            assert_eq!(r.find(t, CheckKind::Refutation)[0].status, CheckStatus::Refuted, "{t}");
        }
    }

    #[test]
    fn pure_s11_candidates_collapse() {
        let r = verify_classification(&v(&["S1 + S2"]), 16).unwrap();
        assert!(r.is_clean(), "{r:#?}");
        assert_eq!(r.catalog.case, CaseId::I);
        assert_eq!(r.find("s(2)", CheckKind::Collapse)[0].status, CheckStatus::Ok);
        assert_eq!(r.find("t(2)", CheckKind::Collapse)[0].status, CheckStatus::Ok);
        assert_eq!(r.find("s(1)", CheckKind::Refutation)[0].status, CheckStatus::Refuted);
    }
}
