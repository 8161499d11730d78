use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{Elem, FiniteResiduatedLattice};
use crate::term::{eval, Carrier, Env, EvalError, Term};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum TermNucleusOutcome<E> {
    /// `t(a) → t(b) = a → t(b)` on every pair tried. `window` is set when
    /// only a window of an infinite chain was searched.
    Nucleus { pairs: u64, window: Option<u64> },
    Counterexample {
        a: E,
        b: E,
        /// `a → t(b)`
        lhs: E,
        /// `t(a) → t(b)`
        rhs: E,
    },
}

impl<E> TermNucleusOutcome<E> {
    pub fn is_nucleus(&self) -> bool {
        matches!(self, TermNucleusOutcome::Nucleus { .. })
    }
}

/// The single variable left in `t` once `params` are bound, if any.
fn free_variable<E>(t: &Term, params: &Env<E>) -> Result<Option<String>, EvalError> {
    let free: Vec<String> = t
        .vars()
        .into_iter()
        .filter(|v| !params.contains_key(v))
        .collect();
    match free.len() {
        0 => Ok(None),
        1 => Ok(free.into_iter().next()),
        _ => Err(EvalError::Arity {
            expected: 1,
            found: free,
        }),
    }
}

fn evaluator<'c, C: Carrier + ?Sized>(
    c: &'c C,
    t: &'c Term,
    params: &'c Env<C::Elem>,
) -> Result<impl FnMut(C::Elem) -> Result<C::Elem, EvalError> + 'c, EvalError> {
    let var = free_variable(t, params)?;
    let mut env = params.clone();
    let mut cache: HashMap<C::Elem, C::Elem> = HashMap::new();
    Ok(move |a: C::Elem| {
        if let Some(&v) = cache.get(&a) {
            return Ok(v);
        }
        if let Some(var) = &var {
            env.insert(var.clone(), a);
        }
        let v = eval(t, c, &env)?;
        cache.insert(a, v);
        Ok(v)
    })
}

/// Checks `a → t(b) = t(a) → t(b)` for all pairs, `a` varying slowest. On
/// infinite chains both range over the window; values of `t` may leave it.
///
/// `params` binds extra variables to elements; exactly one variable may
/// stay free. A term with no free variable is read as a constant map.
pub fn is_term_nucleus<C: Carrier + ?Sized>(
    c: &C,
    t: &Term,
    window: u64,
    params: &Env<C::Elem>,
) -> Result<TermNucleusOutcome<C::Elem>, EvalError> {
    let mut tv = evaluator(c, t, params)?;
    let elems = c.window(window);
    let mut pairs = 0u64;
    for &a in &elems {
        let ta = tv(a)?;
        for &b in &elems {
            let tb = tv(b)?;
            let lhs = c.imp(a, tb)?;
            let rhs = c.imp(ta, tb)?;
            pairs += 1;
            if lhs != rhs {
                return Ok(TermNucleusOutcome::Counterexample { a, b, lhs, rhs });
            }
        }
    }
    Ok(TermNucleusOutcome::Nucleus {
        pairs,
        window: (!c.is_finite()).then_some(window),
    })
}

/// Values of a unary term on every element of a finite algebra.
pub fn term_map(
    alg: &FiniteResiduatedLattice,
    t: &Term,
    params: &Env<Elem>,
) -> Result<Vec<Elem>, EvalError> {
    let mut tv = evaluator(alg, t, params)?;
    alg.elements().map(&mut tv).collect()
}
