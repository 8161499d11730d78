use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{parse::ParseError, Term};

/// Unary terms that come up repeatedly. Parameterized ones use the extra
/// variable [`NamedTerm::PARAM`], to be bound to an element of the carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedTerm {
    Identity,
    Top,
    DoubleNeg,
    /// `¬¬x ∧ ((x^m → x^{m+1}) → x)`
    S(u32),
    /// `¬¬x ∧ (x^m → x^{m+1})`
    T(u32),
    /// `(x → a) → a`
    RelDoubleNeg,
    /// `x ∨ a`
    JoinConst,
    /// `(x → x²) → x²`
    ExampleT,
}

impl NamedTerm {
    pub const VAR: &'static str = "x";
    pub const PARAM: &'static str = "a";

    pub fn term(self) -> Term {
        let x = || Term::var(Self::VAR);
        let a = || Term::var(Self::PARAM);
        let dn = || Term::neg(Term::neg(x()));
        let step = |m: u32| Term::imp(Term::pow(x(), m), Term::pow(x(), m + 1));
        match self {
            NamedTerm::Identity => x(),
            NamedTerm::Top => Term::Top,
            NamedTerm::DoubleNeg => dn(),
            NamedTerm::S(m) => Term::meet(dn(), Term::imp(step(m), x())),
            NamedTerm::T(m) => Term::meet(dn(), step(m)),
            NamedTerm::RelDoubleNeg => Term::imp(Term::imp(x(), a()), a()),
            NamedTerm::JoinConst => Term::join(x(), a()),
            NamedTerm::ExampleT => Term::imp(Term::imp(x(), Term::pow(x(), 2)), Term::pow(x(), 2)),
        }
    }

    pub fn has_param(self) -> bool {
        matches!(self, NamedTerm::RelDoubleNeg | NamedTerm::JoinConst)
    }
}

impl fmt::Display for NamedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedTerm::Identity => write!(f, "x"),
            NamedTerm::Top => write!(f, "1"),
            NamedTerm::DoubleNeg => write!(f, "~~x"),
            NamedTerm::S(m) => write!(f, "s({m})"),
            NamedTerm::T(m) => write!(f, "t({m})"),
            NamedTerm::RelDoubleNeg => write!(f, "(x -> a) -> a"),
            NamedTerm::JoinConst => write!(f, "x \\/ a"),
            NamedTerm::ExampleT => write!(f, "(x -> x^2) -> x^2"),
        }
    }
}

impl Serialize for NamedTerm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `s(m)` and `t(m)`, which are not valid term syntax, so a string is
/// read either as one of these or as a term, never both.
impl FromStr for NamedTerm {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let arg = |p: &str| -> Option<u32> {
            s.strip_prefix(p)?.strip_suffix(')')?.trim().parse().ok()
        };
        if let Some(m) = arg("s(") {
            Ok(NamedTerm::S(m))
        } else if let Some(m) = arg("t(") {
            Ok(NamedTerm::T(m))
        } else {
            Err(())
        }
    }
}

/// Reads `s(m)` / `t(m)` shorthands or ordinary term syntax.
pub fn parse_term_or_name(src: &str) -> Result<Term, ParseError> {
    match src.parse::<NamedTerm>() {
        Ok(n) => Ok(n.term()),
        Err(()) => src.parse(),
    }
}
