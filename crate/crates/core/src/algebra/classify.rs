use serde::Serialize;

use super::FiniteResiduatedLattice;

/// Which standard subvarieties a finite algebra belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgebraClassFlags {
    pub is_bl: bool,
    pub is_mv: bool,
    /// `x * x = x`, i.e. a Heyting algebra.
    pub is_idempotent: bool,
    pub is_prelinear: bool,
    pub is_divisible: bool,
    pub is_involutive: bool,
    pub is_chain: bool,
}

impl FiniteResiduatedLattice {
    /// Decides each class by checking its defining identity on all elements.
    /// Assumes the algebra is valid.
    pub fn classify(&self) -> AlgebraClassFlags {
        let els = || self.elements();
        let all_pairs = |p: &dyn Fn(usize, usize) -> bool| els().all(|a| els().all(|b| p(a, b)));

        let is_prelinear = all_pairs(&|a, b| self.join(self.imp(a, b), self.imp(b, a)) == self.top());
        let is_divisible = all_pairs(&|a, b| self.meet(a, b) == self.mul(a, self.imp(a, b)));
        let is_involutive = els().all(|a| self.neg(self.neg(a)) == a);
        let is_idempotent = els().all(|a| self.mul(a, a) == a);
        let is_chain = all_pairs(&|a, b| self.leq(a, b) || self.leq(b, a));
        let is_bl = is_prelinear && is_divisible;
        AlgebraClassFlags {
            is_bl,
            is_mv: is_bl && is_involutive,
            is_idempotent,
            is_prelinear,
            is_divisible,
            is_involutive,
            is_chain,
        }
    }

    /// First pair `(x, y)` where `x /\ y != x * (x -> y)`, if any.
    pub fn divisibility_witness(&self) -> Option<(usize, usize)> {
        self.elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .find(|&(a, b)| self.meet(a, b) != self.mul(a, self.imp(a, b)))
    }
}
