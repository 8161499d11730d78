//! BL-chains built as ordinal sums of `S_k`, `S_ω` and `S_1^ω` components,
//! with exact integer arithmetic on their elements.
//!
//! Local tops are not coded: every component shares the single global
//! [`ChainElement::Top`], so two elements are equal iff their codes are.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::FiniteResiduatedLattice;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("descriptor has no components")]
    Empty,
    #[error("bad component token `{0}` (expected S<k> with k >= 1, Sw or S1w)")]
    BadToken(String),
    #[error("the first component must be bounded, found Sw")]
    FirstUnbounded,
    #[error("component {comp} does not exist in a chain with {len} components")]
    NoSuchComponent { comp: usize, len: usize },
    #[error("code {code} is not an element of component {comp} ({kind})")]
    BadCode {
        comp: usize,
        code: LocalCode,
        kind: ComponentKind,
    },
    #[error("cannot parse chain element `{0}`")]
    BadElement(String),
    #[error("exponent overflow in component {comp}")]
    Overflow { comp: usize },
    #[error("component {comp} ({kind}) is infinite")]
    NotFinite { comp: usize, kind: ComponentKind },
    #[error("generator {elem}: {reason}")]
    UnsupportedGenerator { elem: ChainElement, reason: &'static str },
}

/// One summand of the ordinal sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    /// `S_k`: `a^0 = top > a > ... > a^k`, with `a^i a^j = a^min(i+j, k)`.
    FiniteMv(u32),
    /// `S_ω`: all powers of `a`, cancellative and unbounded.
    Omega,
    /// `S_1^ω`: two limbs `(0,k)` and `(1,-k)`, first element `(0,0)`.
    Chang,
}

impl ComponentKind {
    pub fn is_bounded(self) -> bool {
        !matches!(self, ComponentKind::Omega)
    }

    /// Least element of the component, if it has one.
    pub fn bottom(self) -> Option<LocalCode> {
        match self {
            ComponentKind::FiniteMv(k) => Some(LocalCode::Pow(u64::from(k))),
            ComponentKind::Omega => None,
            ComponentKind::Chang => Some(LocalCode::Low(0)),
        }
    }

    fn admits(self, code: LocalCode) -> bool {
        match (self, code) {
            (ComponentKind::FiniteMv(k), LocalCode::Pow(i)) => i >= 1 && i <= u64::from(k),
            (ComponentKind::Omega, LocalCode::Pow(i)) => i >= 1,
            (ComponentKind::Chang, LocalCode::Low(_)) => true,
            (ComponentKind::Chang, LocalCode::High(k)) => k >= 1,
            _ => false,
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::FiniteMv(k) => write!(f, "S{k}"),
            ComponentKind::Omega => write!(f, "Sw"),
            ComponentKind::Chang => write!(f, "S1w"),
        }
    }
}

impl FromStr for ComponentKind {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ChainError::BadToken(s.to_string());
        let rest = s.strip_prefix('S').ok_or_else(bad)?;
        match rest {
            "w" => Ok(ComponentKind::Omega),
            "1w" => Ok(ComponentKind::Chang),
            digits if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
                match digits.parse::<u32>() {
                    Ok(k) if k >= 1 => Ok(ComponentKind::FiniteMv(k)),
                    _ => Err(bad()),
                }
            }
            _ => Err(bad()),
        }
    }
}

/// Code of a non-top element inside its component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalCode {
    /// `a^i`, `i >= 1` (components `S_k` and `S_ω`).
    Pow(u64),
    /// `(0, k)` in `S_1^ω`.
    Low(u64),
    /// `(1, -k)` in `S_1^ω`, `k >= 1`.
    High(u64),
}

impl fmt::Display for LocalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalCode::Pow(i) => write!(f, "{i}"),
            LocalCode::Low(k) => write!(f, "(0,{k})"),
            LocalCode::High(k) => write!(f, "(1,-{k})"),
        }
    }
}

impl LocalCode {
    /// Order inside one component. Codes of different shapes never share a
    /// component; they are ordered `Pow < Low < High` only to make this total.
    fn local_cmp(self, other: LocalCode) -> Ordering {
        use LocalCode::*;
        match (self, other) {
            (Pow(i), Pow(j)) => j.cmp(&i),
            (Low(j), Low(k)) => j.cmp(&k),
            (High(j), High(k)) => k.cmp(&j),
            (Low(_), High(_)) | (Pow(_), _) => Ordering::Less,
            (High(_), Low(_)) | (_, Pow(_)) => Ordering::Greater,
        }
    }
}

/// An element of a symbolic chain: the shared top, or a non-top element of
/// one component.
///
/// `Ord` is the chain order: component index first, then the local order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainElement {
    Top,
    At { comp: usize, code: LocalCode },
}

impl ChainElement {
    pub fn pow(comp: usize, i: u64) -> Self {
        ChainElement::At {
            comp,
            code: LocalCode::Pow(i),
        }
    }

    pub fn low(comp: usize, k: u64) -> Self {
        ChainElement::At {
            comp,
            code: LocalCode::Low(k),
        }
    }

    pub fn high(comp: usize, k: u64) -> Self {
        ChainElement::At {
            comp,
            code: LocalCode::High(k),
        }
    }

    pub fn component(self) -> Option<usize> {
        match self {
            ChainElement::Top => None,
            ChainElement::At { comp, .. } => Some(comp),
        }
    }
}

impl Ord for ChainElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ChainElement::Top, ChainElement::Top) => Ordering::Equal,
            (ChainElement::Top, _) => Ordering::Greater,
            (_, ChainElement::Top) => Ordering::Less,
            (ChainElement::At { comp: c, code: x }, ChainElement::At { comp: d, code: y }) => {
                c.cmp(d).then_with(|| x.local_cmp(*y))
            }
        }
    }
}

impl PartialOrd for ChainElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ChainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainElement::Top => write!(f, "T"),
            ChainElement::At { comp, code } => write!(f, "({comp},{code})"),
        }
    }
}

impl Serialize for ChainElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ChainElement {
    type Err = ChainError;

    /// Accepts `T`, `(c,i)`, `(c,(0,k))` and `(c,(1,-k))`, ignoring spaces.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ChainError::BadElement(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "T" || t.eq_ignore_ascii_case("top") {
            return Ok(ChainElement::Top);
        }
        let inner = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
        let (comp, code) = inner.split_once(',').ok_or_else(bad)?;
        let comp: usize = comp.parse().map_err(|_| bad())?;
        let code = if let Some(pair) = code.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            let (limb, k) = pair.split_once(',').ok_or_else(bad)?;
            match limb {
                "0" => LocalCode::Low(k.parse().map_err(|_| bad())?),
                "1" => {
                    let k = k.strip_prefix('-').unwrap_or(k);
                    LocalCode::High(k.parse().map_err(|_| bad())?)
                }
                _ => return Err(bad()),
            }
        } else {
            LocalCode::Pow(code.parse().map_err(|_| bad())?)
        };
        Ok(ChainElement::At { comp, code })
    }
}

/// An ordinal sum `(A_0 ⊕ A_1 ⊕ ... )^+` with a bounded first component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainDescriptor {
    components: Vec<ComponentKind>,
}

impl FromStr for ChainDescriptor {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let components = s
            .split('+')
            .map(|tok| tok.trim().parse())
            .collect::<Result<Vec<_>, _>>()?;
        ChainDescriptor::new(components)
    }
}

impl fmt::Display for ChainDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for ChainDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Local value with the component's top made explicit (`Pow(0)` / `High(0)`).
type Local = LocalCode;

fn is_local_top(x: Local) -> bool {
    matches!(x, LocalCode::Pow(0) | LocalCode::High(0))
}

impl ChainDescriptor {
    pub fn new(components: Vec<ComponentKind>) -> Result<Self, ChainError> {
        match components.first() {
            None => Err(ChainError::Empty),
            Some(ComponentKind::Omega) => Err(ChainError::FirstUnbounded),
            Some(_) => Ok(Self { components }),
        }
    }

    pub fn components(&self) -> &[ComponentKind] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.components
            .iter()
            .all(|k| matches!(k, ComponentKind::FiniteMv(_)))
    }

    pub fn top(&self) -> ChainElement {
        ChainElement::Top
    }

    pub fn bot(&self) -> ChainElement {
        let code = self.components[0].bottom().expect("first component is bounded");
        ChainElement::At { comp: 0, code }
    }

    /// Least element of component `comp`, when that component is bounded.
    pub fn component_bottom(&self, comp: usize) -> Option<ChainElement> {
        let code = self.components.get(comp)?.bottom()?;
        Some(ChainElement::At { comp, code })
    }

    pub fn check(&self, e: ChainElement) -> Result<ChainElement, ChainError> {
        if let ChainElement::At { comp, code } = e {
            let kind = *self.components.get(comp).ok_or(ChainError::NoSuchComponent {
                comp,
                len: self.components.len(),
            })?;
            if !kind.admits(code) {
                return Err(ChainError::BadCode { comp, code, kind });
            }
        }
        Ok(e)
    }

    /// Parses an element and checks that it belongs to this chain. `bot` is
    /// accepted as a name for the least element.
    pub fn parse_element(&self, s: &str) -> Result<ChainElement, ChainError> {
        if s.trim().eq_ignore_ascii_case("bot") {
            return Ok(self.bot());
        }
        self.check(s.parse()?)
    }

    pub fn leq(&self, a: ChainElement, b: ChainElement) -> Result<bool, ChainError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a <= b)
    }

    pub fn meet(&self, a: ChainElement, b: ChainElement) -> Result<ChainElement, ChainError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.min(b))
    }

    pub fn join(&self, a: ChainElement, b: ChainElement) -> Result<ChainElement, ChainError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.max(b))
    }

    pub fn mul(&self, a: ChainElement, b: ChainElement) -> Result<ChainElement, ChainError> {
        self.check(a)?;
        self.check(b)?;
        match (a, b) {
            (ChainElement::Top, x) | (x, ChainElement::Top) => Ok(x),
            (ChainElement::At { comp: c, code: x }, ChainElement::At { comp: d, code: y }) => {
                match c.cmp(&d) {
                    Ordering::Less => Ok(a),
                    Ordering::Greater => Ok(b),
                    Ordering::Equal => self.lift(c, self.local_mul(c, x, y)?),
                }
            }
        }
    }

    pub fn imp(&self, a: ChainElement, b: ChainElement) -> Result<ChainElement, ChainError> {
        self.check(a)?;
        self.check(b)?;
        if a <= b {
            return Ok(ChainElement::Top);
        }
        match (a, b) {
            (ChainElement::Top, x) => Ok(x),
            (_, ChainElement::Top) => Ok(ChainElement::Top),
            (ChainElement::At { comp: c, code: x }, ChainElement::At { comp: d, code: y }) => {
                if c == d {
                    self.lift(c, self.local_imp(c, x, y)?)
                } else {
                    // a > b with a in a higher component
                    Ok(b)
                }
            }
        }
    }

    pub fn neg(&self, a: ChainElement) -> Result<ChainElement, ChainError> {
        self.imp(a, self.bot())
    }

    /// `a^n` with `a^0 = top`.
    pub fn pow(&self, a: ChainElement, n: u64) -> Result<ChainElement, ChainError> {
        let mut acc = ChainElement::Top;
        let mut base = a;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(base, base)?;
            }
        }
        self.check(a)?;
        Ok(acc)
    }

    fn lift(&self, comp: usize, x: Local) -> Result<ChainElement, ChainError> {
        if is_local_top(x) {
            Ok(ChainElement::Top)
        } else {
            Ok(ChainElement::At { comp, code: x })
        }
    }

    fn local_mul(&self, comp: usize, x: Local, y: Local) -> Result<Local, ChainError> {
        use LocalCode::*;
        let overflow = ChainError::Overflow { comp };
        Ok(match (self.components[comp], x, y) {
            (ComponentKind::FiniteMv(k), Pow(i), Pow(j)) => Pow(i.saturating_add(j).min(u64::from(k))),
            (ComponentKind::Omega, Pow(i), Pow(j)) => Pow(i.checked_add(j).ok_or(overflow)?),
            (ComponentKind::Chang, Low(_), Low(_)) => Low(0),
            (ComponentKind::Chang, High(j), High(k)) => High(j.checked_add(k).ok_or(overflow)?),
            (ComponentKind::Chang, Low(j), High(k)) | (ComponentKind::Chang, High(k), Low(j)) => {
                Low(j.saturating_sub(k))
            }
            (kind, code, _) => return Err(ChainError::BadCode { comp, code, kind }),
        })
    }

    /// Residuum inside one component, for `x > y`.
    fn local_imp(&self, comp: usize, x: Local, y: Local) -> Result<Local, ChainError> {
        use LocalCode::*;
        let overflow = ChainError::Overflow { comp };
        Ok(match (self.components[comp], x, y) {
            (ComponentKind::FiniteMv(_) | ComponentKind::Omega, Pow(i), Pow(j)) => Pow(j.saturating_sub(i)),
            (ComponentKind::Chang, Low(j), Low(k)) => High(j.saturating_sub(k)),
            (ComponentKind::Chang, High(j), Low(k)) => Low(j.checked_add(k).ok_or(overflow)?),
            (ComponentKind::Chang, High(j), High(k)) => High(k.saturating_sub(j)),
            (kind, code, _) => return Err(ChainError::BadCode { comp, code, kind }),
        })
    }

    /// All elements of the chain, with infinite components cut off at
    /// codes up to `window`. Ordered by component, then code, with `Top` last.
    pub fn enumerate_window(&self, window: u64) -> Vec<ChainElement> {
        let mut out = Vec::new();
        for (comp, kind) in self.components.iter().enumerate() {
            match *kind {
                ComponentKind::FiniteMv(k) => {
                    out.extend((1..=u64::from(k)).map(|i| ChainElement::pow(comp, i)));
                }
                ComponentKind::Omega => {
                    out.extend((1..=window).map(|i| ChainElement::pow(comp, i)));
                }
                ComponentKind::Chang => {
                    out.extend((0..=window).map(|k| ChainElement::low(comp, k)));
                    out.extend((1..=window).map(|k| ChainElement::high(comp, k)));
                }
            }
        }
        out.push(ChainElement::Top);
        out
    }

    /// Table form of a chain whose components are all finite. The second
    /// component lists the element behind each index, in increasing order.
    ///
    /// The product comes from the element operations; the residuum is
    /// recomputed from the product table, so agreement of the two is a check.
    pub fn materialize_finite(
        &self,
    ) -> Result<(FiniteResiduatedLattice, Vec<ChainElement>), ChainError> {
        if let Some((comp, &kind)) = self
            .components
            .iter()
            .enumerate()
            .find(|(_, k)| !matches!(k, ComponentKind::FiniteMv(_)))
        {
            return Err(ChainError::NotFinite { comp, kind });
        }
        let mut elems = self.enumerate_window(0);
        elems.sort();
        let index = |e: ChainElement| elems.binary_search(&e).expect("closed under operations");
        let mut mul = Vec::with_capacity(elems.len());
        for &a in &elems {
            let mut row = Vec::with_capacity(elems.len());
            for &b in &elems {
                row.push(index(self.mul(a, b)?));
            }
            mul.push(row);
        }
        let alg = FiniteResiduatedLattice::chain_from_mul(mul)
            .expect("finite ordinal sums of MV chains are BL-chains");
        Ok((alg, elems))
    }

    /// Subalgebra generated by one element from each of some non-first
    /// components, each idempotent or of infinite order.
    ///
    /// The result is `S_1` followed by `S_1` (idempotent generator) or `S_ω`
    /// (infinite-order generator) for each generator, in component order.
    pub fn generated_subalgebra_descriptor(
        &self,
        gens: &[ChainElement],
    ) -> Result<SubchainEmbedding, ChainError> {
        let mut picked: Vec<(usize, ChainElement, ComponentKind)> = Vec::new();
        for &g in gens {
            self.check(g)?;
            let unsupported = |reason| ChainError::UnsupportedGenerator { elem: g, reason };
            let ChainElement::At { comp, code } = g else {
                return Err(unsupported("top is not a generator of a component"));
            };
            if comp == 0 {
                return Err(unsupported("generator lies in the first component"));
            }
            if picked.iter().any(|(c, _, _)| *c == comp) {
                return Err(unsupported("two generators in one component"));
            }
            let infinite_order = matches!(
                (self.components[comp], code),
                (ComponentKind::Omega, _) | (ComponentKind::Chang, LocalCode::High(_))
            );
            let kind = if self.mul(g, g)? == g {
                ComponentKind::FiniteMv(1)
            } else if infinite_order {
                ComponentKind::Omega
            } else {
                return Err(unsupported("finite order but not idempotent"));
            };
            picked.push((comp, g, kind));
        }
        picked.sort_by_key(|(c, _, _)| *c);
        let mut components = vec![ComponentKind::FiniteMv(1)];
        components.extend(picked.iter().map(|(_, _, k)| *k));
        Ok(SubchainEmbedding {
            source: self.clone(),
            descriptor: ChainDescriptor::new(components)?,
            generators: picked.iter().map(|(_, g, _)| *g).collect(),
        })
    }
}

/// Result of [`ChainDescriptor::generated_subalgebra_descriptor`]: the
/// generated subchain as a descriptor of its own, with the way back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubchainEmbedding {
    source: ChainDescriptor,
    pub descriptor: ChainDescriptor,
    /// Generators sorted by component; generator `j` is `a` in component `j + 1`.
    pub generators: Vec<ChainElement>,
}

impl SubchainEmbedding {
    /// The element of the new descriptor that a generator corresponds to.
    pub fn translate(&self, gen: ChainElement) -> Option<ChainElement> {
        let j = self.generators.iter().position(|&g| g == gen)?;
        Some(ChainElement::pow(j + 1, 1))
    }

    /// Maps an element of the generated subchain into the source chain.
    pub fn embed(&self, e: ChainElement) -> Result<ChainElement, ChainError> {
        match self.descriptor.check(e)? {
            ChainElement::Top => Ok(ChainElement::Top),
            ChainElement::At { comp: 0, .. } => Ok(self.source.bot()),
            ChainElement::At { comp, code } => {
                let LocalCode::Pow(n) = code else {
                    unreachable!("generated subchains only have power codes")
                };
                self.source.pow(self.generators[comp - 1], n)
            }
        }
    }
}
