//! Named finite algebras used throughout the crate and its tests.

use crate::algebra::FiniteResiduatedLattice;

/// `S_n^+`: the `(n+1)`-element MV chain. Index `i` is `a^(n-i)`, so `0` is
/// `bot = a^n` and `n` is `top = a^0`.
pub fn mv_chain(n: usize) -> FiniteResiduatedLattice {
    assert!(n >= 1, "S_n needs n >= 1");
    let mul = (0..=n)
        .map(|i| (0..=n).map(|j| (i + j).saturating_sub(n)).collect())
        .collect();
    FiniteResiduatedLattice::chain_from_mul(mul).expect("S_n^+ is a residuated lattice")
}

/// The Gödel chain with `size` elements (product is minimum).
pub fn godel_chain(size: usize) -> FiniteResiduatedLattice {
    assert!(size >= 1);
    let mul = (0..size)
        .map(|i| (0..size).map(|j| i.min(j)).collect())
        .collect();
    FiniteResiduatedLattice::chain_from_mul(mul).expect("Gödel chain is a residuated lattice")
}

/// The chain `bot < a_1 < ... < a_n < top` where any two elements strictly
/// between the bounds multiply to `a_1`. Index `i` is `a_i`, `0` is `bot` and
/// `n + 1` is `top`. Residuated but not divisible for `n > 2`.
pub fn a_n_chain(n: usize) -> FiniteResiduatedLattice {
    assert!(n >= 3, "A_n is defined for n > 2");
    let top = n + 1;
    let inner = |x: usize| x != 0 && x != top;
    let mul = (0..=top)
        .map(|x| {
            (0..=top)
                .map(|y| if inner(x) && inner(y) { 1 } else { x.min(y) })
                .collect()
        })
        .collect();
    FiniteResiduatedLattice::chain_from_mul(mul).expect("A_n is a residuated lattice")
}
