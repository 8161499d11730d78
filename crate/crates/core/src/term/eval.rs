use std::collections::BTreeMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use super::Term;
use crate::algebra::{Elem, FiniteResiduatedLattice};
use crate::chain::{ChainDescriptor, ChainElement, ChainError};

/// Window used for quantifying over infinite chains unless told otherwise.
pub const DEFAULT_WINDOW: u64 = 16;
/// Upper bound on the number of assignments an identity check may visit.
pub const MAX_ASSIGNMENTS: u128 = 10_000_000;

pub type Env<E> = BTreeMap<String, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` is not bound")]
    Unbound(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("{op} of {a} and {b} does not exist")]
    MissingLattice { op: &'static str, a: Elem, b: Elem },
    #[error("{count} assignments exceed the cap of {cap}")]
    TooManyAssignments { count: u128, cap: u128 },
    #[error("expected at most {expected} free variable(s), found {found:?}")]
    Arity { expected: usize, found: Vec<String> },
}

/// Anything terms can be evaluated in.
pub trait Carrier {
    type Elem: Copy + Eq + Ord + Hash + Debug + Display + Serialize;

    fn bot(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn leq(&self, a: Self::Elem, b: Self::Elem) -> Result<bool, EvalError>;
    fn meet(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem, EvalError>;
    fn join(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem, EvalError>;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem, EvalError>;
    fn imp(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem, EvalError>;
    /// Every element when finite, otherwise the elements with codes up to `window`.
    fn window(&self, window: u64) -> Vec<Self::Elem>;
    fn is_finite(&self) -> bool;

    fn neg(&self, a: Self::Elem) -> Result<Self::Elem, EvalError> {
        self.imp(a, self.bot())
    }

    fn pow(&self, a: Self::Elem, n: u32) -> Result<Self::Elem, EvalError> {
        let mut acc = self.top();
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
        Ok(acc)
    }
}

impl Carrier for FiniteResiduatedLattice {
    type Elem = Elem;

    fn bot(&self) -> Elem {
        FiniteResiduatedLattice::bot(self)
    }

    fn top(&self) -> Elem {
        FiniteResiduatedLattice::top(self)
    }

    fn leq(&self, a: Elem, b: Elem) -> Result<bool, EvalError> {
        Ok(FiniteResiduatedLattice::leq(self, a, b))
    }

    fn meet(&self, a: Elem, b: Elem) -> Result<Elem, EvalError> {
        self.try_meet(a, b)
            .ok_or(EvalError::MissingLattice { op: "meet", a, b })
    }

    fn join(&self, a: Elem, b: Elem) -> Result<Elem, EvalError> {
        self.try_join(a, b)
            .ok_or(EvalError::MissingLattice { op: "join", a, b })
    }

    fn mul(&self, a: Elem, b: Elem) -> Result<Elem, EvalError> {
        Ok(FiniteResiduatedLattice::mul(self, a, b))
    }

    fn imp(&self, a: Elem, b: Elem) -> Result<Elem, EvalError> {
        Ok(FiniteResiduatedLattice::imp(self, a, b))
    }

    fn window(&self, _window: u64) -> Vec<Elem> {
        self.elements().collect()
    }

    fn is_finite(&self) -> bool {
        true
    }
}

impl Carrier for ChainDescriptor {
    type Elem = ChainElement;

    fn bot(&self) -> ChainElement {
        ChainDescriptor::bot(self)
    }

    fn top(&self) -> ChainElement {
        ChainElement::Top
    }

    fn leq(&self, a: ChainElement, b: ChainElement) -> Result<bool, EvalError> {
        Ok(ChainDescriptor::leq(self, a, b)?)
    }

    fn meet(&self, a: ChainElement, b: ChainElement) -> Result<ChainElement, EvalError> {
        Ok(ChainDescriptor::meet(self, a, b)?)
    }

    fn join(&self, a: ChainElement, b: ChainElement) -> Result<ChainElement, EvalError> {
        Ok(ChainDescriptor::join(self, a, b)?)
    }

    fn mul(&self, a: ChainElement, b: ChainElement) -> Result<ChainElement, EvalError> {
        Ok(ChainDescriptor::mul(self, a, b)?)
    }

    fn imp(&self, a: ChainElement, b: ChainElement) -> Result<ChainElement, EvalError> {
        Ok(ChainDescriptor::imp(self, a, b)?)
    }

    fn window(&self, window: u64) -> Vec<ChainElement> {
        self.enumerate_window(window)
    }

    fn is_finite(&self) -> bool {
        ChainDescriptor::is_finite(self)
    }
}

pub fn eval<C: Carrier + ?Sized>(
    t: &Term,
    c: &C,
    env: &Env<C::Elem>,
) -> Result<C::Elem, EvalError> {
    Ok(match t {
        Term::Var(v) => *env.get(v).ok_or_else(|| EvalError::Unbound(v.clone()))?,
        Term::Bot => c.bot(),
        Term::Top => c.top(),
        Term::Meet(l, r) => c.meet(eval(l, c, env)?, eval(r, c, env)?)?,
        Term::Join(l, r) => c.join(eval(l, c, env)?, eval(r, c, env)?)?,
        Term::Fuse(l, r) => c.mul(eval(l, c, env)?, eval(r, c, env)?)?,
        Term::Imp(l, r) => c.imp(eval(l, c, env)?, eval(r, c, env)?)?,
        Term::Pow(b, n) => c.pow(eval(b, c, env)?, *n)?,
    })
}

/// Runs `f` on every assignment of `elems` to `vars`, first variable slowest,
/// stopping at the first `Break`.
pub fn for_each_assignment<E: Copy, R>(
    vars: &[String],
    elems: &[E],
    mut f: impl FnMut(&Env<E>) -> Result<ControlFlow<R>, EvalError>,
) -> Result<Option<R>, EvalError> {
    let count = (elems.len() as u128)
        .checked_pow(vars.len() as u32)
        .unwrap_or(u128::MAX);
    if count > MAX_ASSIGNMENTS {
        return Err(EvalError::TooManyAssignments {
            count,
            cap: MAX_ASSIGNMENTS,
        });
    }
    if count == 0 {
        return Ok(None);
    }
    let mut idx = vec![0usize; vars.len()];
    let mut env: Env<E> = vars.iter().map(|v| (v.clone(), elems[0])).collect();
    loop {
        if let ControlFlow::Break(r) = f(&env)? {
            return Ok(Some(r));
        }
        let mut k = vars.len();
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < elems.len() {
                env.insert(vars[k].clone(), elems[idx[k]]);
                break;
            }
            idx[k] = 0;
            env.insert(vars[k].clone(), elems[0]);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum IdentityOutcome<E> {
    /// No counterexample. `window` is set when the carrier is infinite and
    /// only a window of it was searched.
    Holds { assignments: u128, window: Option<u64> },
    Counterexample {
        env: Env<E>,
        left: E,
        right: E,
    },
}

impl<E> IdentityOutcome<E> {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityOutcome::Holds { .. })
    }
}

/// Searches for an assignment on which `t1` and `t2` differ; on infinite
/// chains only elements inside `window` are tried.
pub fn check_identity<C: Carrier + ?Sized>(
    c: &C,
    t1: &Term,
    t2: &Term,
    window: u64,
) -> Result<IdentityOutcome<C::Elem>, EvalError> {
    let mut vars = t1.vars();
    vars.extend(t2.vars());
    let vars: Vec<String> = vars.into_iter().collect();
    let elems = c.window(window);
    let mut visited: u128 = 0;
    let found = for_each_assignment(&vars, &elems, |env| {
        visited += 1;
        let (l, r) = (eval(t1, c, env)?, eval(t2, c, env)?);
        Ok(if l == r {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(IdentityOutcome::Counterexample {
                env: env.clone(),
                left: l,
                right: r,
            })
        })
    })?;
    Ok(found.unwrap_or(IdentityOutcome::Holds {
        assignments: visited,
        window: (!c.is_finite()).then_some(window),
    }))
}
