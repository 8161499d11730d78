//! Nuclei on finite algebras: checking, enumeration, nuclear images,
//! dense filters and the Glivenko property. Term-defined nuclei on chains
//! live in [`term`].

mod term;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Elem, FiniteResiduatedLattice, ImplicativeFilter};

pub use term::{is_term_nucleus, term_map, TermNucleusOutcome};

/// Default size cap for [`enumerate_nuclei`]; `NUCLEON_MAX_SIZE` overrides it.
pub const DEFAULT_MAX_SIZE: usize = 20;
/// Largest algebra [`brute_force_nuclei`] accepts.
pub const BRUTE_FORCE_MAX_SIZE: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NucleusError {
    #[error("algebra has {size} elements, above the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NucleusLaw {
    /// the value vector has the wrong length
    Length,
    /// a value is not an element
    OutOfRange,
    /// `a ≤ γ(a)`
    Extensive,
    /// `a ≤ b ⇒ γ(a) ≤ γ(b)`
    Monotone,
    /// `γ(γ(a)) = γ(a)`
    Idempotent,
    /// `γ(a)·γ(b) ≤ γ(a·b)`
    Multiplicative,
    /// `a → γ(b) = γ(a) → γ(b)`
    Equation,
}

impl fmt::Display for NucleusLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NucleusLaw::Length => "wrong number of values",
            NucleusLaw::OutOfRange => "value outside the algebra",
            NucleusLaw::Extensive => "a <= g(a)",
            NucleusLaw::Monotone => "a <= b implies g(a) <= g(b)",
            NucleusLaw::Idempotent => "g(g(a)) = g(a)",
            NucleusLaw::Multiplicative => "g(a) * g(b) <= g(a * b)",
            NucleusLaw::Equation => "a -> g(b) = g(a) -> g(b)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("not a nucleus: {law} fails at {witness:?}")]
pub struct Violation {
    pub law: NucleusLaw,
    pub witness: Vec<Elem>,
}

/// A self-map of a finite algebra given by its values, `γ(i) = values[i]`.
///
/// Only [`NucleusMap::verify`] and the constructors in this module produce
/// one, so a value of this type is always a nucleus of the algebra it was
/// checked against.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NucleusMap {
    values: Vec<Elem>,
}

impl NucleusMap {
    pub fn verify(alg: &FiniteResiduatedLattice, values: Vec<Elem>) -> Result<Self, Violation> {
        is_nucleus_map(alg, &values)?;
        Ok(NucleusMap { values })
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.values[a]
    }

    /// `γ(A)`, sorted.
    pub fn image(&self) -> Vec<Elem> {
        let set: BTreeSet<Elem> = self.values.iter().copied().collect();
        set.into_iter().collect()
    }
}

/// Checks the closure-operator laws and then the nucleus equation, reporting
/// the first law that fails with the first witness in index order.
pub fn is_nucleus_map(alg: &FiniteResiduatedLattice, g: &[Elem]) -> Result<(), Violation> {
    let fail = |law, witness: Vec<Elem>| Err(Violation { law, witness });
    if g.len() != alg.size() {
        return fail(NucleusLaw::Length, vec![]);
    }
    if let Some(a) = alg.elements().find(|&a| g[a] >= alg.size()) {
        return fail(NucleusLaw::OutOfRange, vec![a]);
    }
    if let Some(a) = alg.elements().find(|&a| !alg.leq(a, g[a])) {
        return fail(NucleusLaw::Extensive, vec![a]);
    }
    for a in alg.elements() {
        for b in alg.elements() {
            if alg.leq(a, b) && !alg.leq(g[a], g[b]) {
                return fail(NucleusLaw::Monotone, vec![a, b]);
            }
        }
    }
    if let Some(a) = alg.elements().find(|&a| g[g[a]] != g[a]) {
        return fail(NucleusLaw::Idempotent, vec![a]);
    }
    for a in alg.elements() {
        for b in alg.elements() {
            if !alg.leq(alg.mul(g[a], g[b]), g[alg.mul(a, b)]) {
                return fail(NucleusLaw::Multiplicative, vec![a, b]);
            }
        }
    }
    for a in alg.elements() {
        for b in alg.elements() {
            if alg.imp(a, g[b]) != alg.imp(g[a], g[b]) {
                return fail(NucleusLaw::Equation, vec![a, b]);
            }
        }
    }
    Ok(())
}

/// `x ↦ (x → b) → b`
fn rel_double_neg(alg: &FiniteResiduatedLattice, b: Elem) -> Vec<Elem> {
    alg.elements().map(|x| alg.imp(alg.imp(x, b), b)).collect()
}

fn pointwise_meet(alg: &FiniteResiduatedLattice, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    f.iter().zip(g).map(|(&x, &y)| alg.meet(x, y)).collect()
}

/// `γ(x) = ⋀ { (x → b) → b : b ∈ B }`; the empty meet is constantly `⊤`.
///
/// Panics if `alg` is not a residuated lattice.
pub fn nucleus_from_subset(alg: &FiniteResiduatedLattice, subset: &[Elem]) -> NucleusMap {
    let mut acc = vec![alg.top(); alg.size()];
    for &b in subset {
        acc = pointwise_meet(alg, &acc, &rel_double_neg(alg, b));
    }
    NucleusMap::verify(alg, acc).expect("meets of relative double negations are nuclei")
}

/// Pointwise meet of two nuclei.
pub fn meet_nuclei(alg: &FiniteResiduatedLattice, f: &NucleusMap, g: &NucleusMap) -> NucleusMap {
    NucleusMap::verify(alg, pointwise_meet(alg, &f.values, &g.values))
        .expect("the meet of two nuclei is a nucleus")
}

/// Size cap for enumeration, from `NUCLEON_MAX_SIZE` if set.
pub fn max_size() -> usize {
    std::env::var("NUCLEON_MAX_SIZE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_SIZE)
}

/// All nuclei, as the maps induced by subsets of the algebra, sorted by value
/// vector. The cap comes from [`max_size`].
pub fn enumerate_nuclei(alg: &FiniteResiduatedLattice) -> Result<Vec<NucleusMap>, NucleusError> {
    enumerate_nuclei_capped(alg, max_size())
}

pub fn enumerate_nuclei_capped(
    alg: &FiniteResiduatedLattice,
    cap: usize,
) -> Result<Vec<NucleusMap>, NucleusError> {
    if alg.size() > cap {
        return Err(NucleusError::TooLarge {
            size: alg.size(),
            cap,
        });
    }
    let generators: Vec<Vec<Elem>> = alg.elements().map(|b| rel_double_neg(alg, b)).collect();
    let mut found = BTreeSet::new();
    let start = vec![alg.top(); alg.size()];
    subsets(alg, &generators, 0, start, &mut found);
    found
        .into_iter()
        .map(|v| Ok(NucleusMap::verify(alg, v)?))
        .collect()
}

fn subsets(
    alg: &FiniteResiduatedLattice,
    generators: &[Vec<Elem>],
    next: usize,
    acc: Vec<Elem>,
    found: &mut BTreeSet<Vec<Elem>>,
) {
    if next == generators.len() {
        found.insert(acc);
        return;
    }
    let with = pointwise_meet(alg, &acc, &generators[next]);
    // when b is already fixed by acc, taking it changes nothing
    if with != acc {
        subsets(alg, generators, next + 1, with, found);
    }
    subsets(alg, generators, next + 1, acc, found);
}

/// Every self-map that passes [`is_nucleus_map`], found by backtracking over
/// extensive, monotone partial maps. Independent of the subset description.
pub fn brute_force_nuclei(alg: &FiniteResiduatedLattice) -> Result<Vec<NucleusMap>, NucleusError> {
    if alg.size() > BRUTE_FORCE_MAX_SIZE {
        return Err(NucleusError::TooLarge {
            size: alg.size(),
            cap: BRUTE_FORCE_MAX_SIZE,
        });
    }
    let mut out = Vec::new();
    let mut partial = Vec::with_capacity(alg.size());
    brute(alg, &mut partial, &mut out);
    Ok(out)
}

fn brute(alg: &FiniteResiduatedLattice, partial: &mut Vec<Elem>, out: &mut Vec<NucleusMap>) {
    let a = partial.len();
    if a == alg.size() {
        if is_nucleus_map(alg, partial).is_ok() {
            out.push(NucleusMap {
                values: partial.clone(),
            });
        }
        return;
    }
    for v in alg.elements() {
        if !alg.leq(a, v) {
            continue;
        }
        let monotone = partial.iter().enumerate().all(|(b, &w)| {
            (!alg.leq(a, b) || alg.leq(v, w)) && (!alg.leq(b, a) || alg.leq(w, v))
        });
        if monotone {
            partial.push(v);
            brute(alg, partial, out);
            partial.pop();
        }
    }
}

/// `A_γ` with its inclusion into the base algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuclearImage {
    pub algebra: FiniteResiduatedLattice,
    /// `inclusion[i]` is the base element behind index `i` of `algebra`.
    pub inclusion: Vec<Elem>,
    pub gamma_bot: Elem,
}

/// The algebra on `γ(A)` with product `γ(a·b)`, join `γ(a ∨ b)`, and the
/// inherited meet and residuum.
pub fn nuclear_image(alg: &FiniteResiduatedLattice, g: &NucleusMap) -> NuclearImage {
    let inclusion = g.image();
    let algebra = alg
        .induced(&inclusion, |a, b| g.apply(alg.mul(a, b)))
        .expect("the nuclear image of a nucleus is a residuated lattice");
    NuclearImage {
        algebra,
        inclusion,
        gamma_bot: g.apply(alg.bot()),
    }
}

/// `{a : γ(a) = ⊤}`
pub fn dense_filter(alg: &FiniteResiduatedLattice, g: &NucleusMap) -> ImplicativeFilter {
    ImplicativeFilter {
        members: alg.elements().filter(|&a| g.apply(a) == alg.top()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlivenkoReport {
    /// `γ(γ(a) → a) = ⊤` for every `a`.
    pub holds: bool,
    /// First `a` where it fails.
    pub witness: Option<Elem>,
    /// `γ` is a homomorphism onto `A_γ`; only checked when `holds`.
    pub homomorphism: Option<bool>,
    /// Class of each element in the quotient by the dense filter.
    pub projection: Option<Vec<Elem>>,
    /// Isomorphism from the quotient onto `A_γ`, as base elements.
    pub iso: Option<Vec<Elem>>,
}

pub fn glivenko_check(alg: &FiniteResiduatedLattice, g: &NucleusMap) -> GlivenkoReport {
    let top = alg.top();
    let witness = alg
        .elements()
        .find(|&a| g.apply(alg.imp(g.apply(a), a)) != top);
    if witness.is_some() {
        return GlivenkoReport {
            holds: false,
            witness,
            homomorphism: None,
            projection: None,
            iso: None,
        };
    }
    let image = nuclear_image(alg, g);
    let pos = |x: Elem| image.inclusion.binary_search(&x).expect("value in image");
    let ga = |a: Elem| pos(g.apply(a));
    let img = &image.algebra;
    let homomorphism = ga(alg.bot()) == img.bot()
        && ga(top) == img.top()
        && alg.elements().all(|a| {
            alg.elements().all(|b| {
                ga(alg.mul(a, b)) == img.mul(ga(a), ga(b))
                    && ga(alg.imp(a, b)) == img.imp(ga(a), ga(b))
                    && ga(alg.meet(a, b)) == img.meet(ga(a), ga(b))
                    && ga(alg.join(a, b)) == img.join(ga(a), ga(b))
            })
        });
    let dense = dense_filter(alg, g);
    let (quotient, projection) = alg
        .quotient(&dense.members)
        .expect("the dense set of a nucleus is a filter");
    let iso = quotient
        .find_isomorphism(img)
        .map(|f| f.into_iter().map(|i| image.inclusion[i]).collect());
    GlivenkoReport {
        holds: true,
        witness: None,
        homomorphism: Some(homomorphism),
        projection: Some(projection),
        iso,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NucleusKind {
    Id,
    DoubleNeg,
    JoinConst,
    Other,
}

/// Names the map when it is the identity, `¬¬`, or `x ∨ γ(⊥)`, in that order.
pub fn kind(alg: &FiniteResiduatedLattice, g: &NucleusMap) -> NucleusKind {
    let gb = g.apply(alg.bot());
    if alg.elements().all(|a| g.apply(a) == a) {
        NucleusKind::Id
    } else if alg.elements().all(|a| g.apply(a) == alg.neg(alg.neg(a))) {
        NucleusKind::DoubleNeg
    } else if alg.elements().all(|a| g.apply(a) == alg.join(a, gb)) {
        NucleusKind::JoinConst
    } else {
        NucleusKind::Other
    }
}

/// Everything known about one nucleus, in the JSON output shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NucleusReport {
    pub values: Vec<Elem>,
    pub image: Vec<Elem>,
    pub dense: Vec<Elem>,
    pub glivenko: bool,
    pub kind: NucleusKind,
}

pub fn report(alg: &FiniteResiduatedLattice, g: &NucleusMap) -> NucleusReport {
    NucleusReport {
        values: g.values.clone(),
        image: g.image(),
        dense: dense_filter(alg, g).members,
        glivenko: glivenko_check(alg, g).holds,
        kind: kind(alg, g),
    }
}
