//! Terms in the language `∧, ∨, ·, →, ⊥, ⊤` and their evaluation.

mod eval;
mod named;
mod parse;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use eval::{
    check_identity, eval, for_each_assignment, Carrier, Env, EvalError, IdentityOutcome,
    DEFAULT_WINDOW, MAX_ASSIGNMENTS,
};
pub use named::{parse_term_or_name, NamedTerm};
pub use parse::{parse, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Bot,
    Top,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Fuse(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
    /// `t^n`; `t^0` is `⊤`.
    Pow(Box<Term>, u32),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::Meet(Box::new(l), Box::new(r))
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::Join(Box::new(l), Box::new(r))
    }

    pub fn fuse(l: Term, r: Term) -> Term {
        Term::Fuse(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Term, r: Term) -> Term {
        Term::Imp(Box::new(l), Box::new(r))
    }

    /// `¬t`, i.e. `t → ⊥`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::imp(t, Term::Bot)
    }

    pub fn pow(t: Term, n: u32) -> Term {
        Term::Pow(Box::new(t), n)
    }

    /// Free variables, sorted.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Bot | Term::Top => {}
            Term::Pow(t, _) => t.collect_vars(out),
            Term::Meet(l, r) | Term::Join(l, r) | Term::Fuse(l, r) | Term::Imp(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Replaces every occurrence of the variable `name` by `by`.
    pub fn substitute(&self, name: &str, by: &Term) -> Term {
        let sub = |t: &Term| Box::new(t.substitute(name, by));
        match self {
            Term::Var(v) if v == name => by.clone(),
            Term::Var(_) | Term::Bot | Term::Top => self.clone(),
            Term::Pow(t, n) => Term::Pow(sub(t), *n),
            Term::Meet(l, r) => Term::Meet(sub(l), sub(r)),
            Term::Join(l, r) => Term::Join(sub(l), sub(r)),
            Term::Fuse(l, r) => Term::Fuse(sub(l), sub(r)),
            Term::Imp(l, r) => Term::Imp(sub(l), sub(r)),
        }
    }

    fn level(&self) -> u8 {
        match self {
            Term::Imp(_, r) if **r == Term::Bot => 4,
            Term::Imp(..) => 0,
            Term::Join(..) => 1,
            Term::Meet(..) => 2,
            Term::Fuse(..) => 3,
            Term::Pow(..) => 4,
            Term::Var(_) | Term::Bot | Term::Top => 5,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Bot => write!(f, "0"),
            Term::Top => write!(f, "1"),
            Term::Imp(l, r) if **r == Term::Bot => {
                write!(f, "~")?;
                l.fmt_at(f, 4)
            }
            Term::Imp(l, r) => {
                l.fmt_at(f, 1)?;
                write!(f, " -> ")?;
                r.fmt_at(f, 0)
            }
            Term::Join(l, r) => {
                l.fmt_at(f, 1)?;
                write!(f, " \\/ ")?;
                r.fmt_at(f, 2)
            }
            Term::Meet(l, r) => {
                l.fmt_at(f, 2)?;
                write!(f, " /\\ ")?;
                r.fmt_at(f, 3)
            }
            Term::Fuse(l, r) => {
                l.fmt_at(f, 3)?;
                write!(f, " * ")?;
                r.fmt_at(f, 4)
            }
            Term::Pow(t, n) => {
                t.fmt_at(f, 5)?;
                write!(f, "^{n}")
            }
        }
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printer_uses_minimal_parentheses() {
        let x = || Term::var("x");
        let s2 = Term::meet(
            Term::neg(Term::neg(x())),
            Term::imp(Term::imp(Term::pow(x(), 2), Term::pow(x(), 3)), x()),
        );
        assert_eq!(s2.to_string(), "~~x /\\ ((x^2 -> x^3) -> x)");
        let t = Term::imp(x(), Term::imp(Term::var("y"), Term::var("z")));
        assert_eq!(t.to_string(), "x -> y -> z");
        let t = Term::imp(Term::imp(x(), Term::var("y")), Term::var("z"));
        assert_eq!(t.to_string(), "(x -> y) -> z");
        assert_eq!(Term::pow(Term::neg(x()), 2).to_string(), "(~x)^2");
        assert_eq!(Term::neg(Term::pow(x(), 2)).to_string(), "~x^2");
        assert_eq!(Term::pow(Term::pow(x(), 2), 3).to_string(), "(x^2)^3");
        let t = Term::join(x(), Term::join(x(), x()));
        assert_eq!(t.to_string(), "x \\/ (x \\/ x)");
        assert_eq!(Term::neg(Term::fuse(x(), x())).to_string(), "~(x * x)");
    }

    #[test]
    fn substitution_and_vars() {
        let t: Term = "x -> a".parse().unwrap();
        assert_eq!(t.vars().into_iter().collect::<Vec<_>>(), vec!["a", "x"]);
        let u = t.substitute("a", &Term::Bot);
        assert_eq!(u, Term::neg(Term::var("x")));
    }
}
