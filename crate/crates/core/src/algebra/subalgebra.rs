use std::collections::BTreeSet;

use super::{AlgebraError, Elem, FiniteResiduatedLattice};

impl FiniteResiduatedLattice {
    /// Smallest subuniverse containing `gens`, `bot` and `top`, returned as an
    /// algebra together with its embedding (new index -> old index).
    ///
    /// The embedding is increasing in the old indices.
    pub fn generated_subalgebra(
        &self,
        gens: impl IntoIterator<Item = Elem>,
    ) -> (FiniteResiduatedLattice, Vec<Elem>) {
        let members = self.closure(gens);
        let sub = self
            .induced(&members, |a, b| self.mul(a, b))
            .expect("a closed subset of a valid algebra is a valid algebra");
        (sub, members)
    }

    /// Elements of the subuniverse generated by `gens`, sorted.
    pub fn closure(&self, gens: impl IntoIterator<Item = Elem>) -> Vec<Elem> {
        let mut set: BTreeSet<Elem> = gens.into_iter().collect();
        set.insert(self.bot);
        set.insert(self.top);
        loop {
            let cur: Vec<Elem> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                for &b in &cur {
                    set.insert(self.mul(a, b));
                    set.insert(self.imp(a, b));
                    set.insert(self.meet(a, b));
                    set.insert(self.join(a, b));
                }
            }
            if set.len() == before {
                return cur;
            }
        }
    }

    /// Algebra on `members` (sorted, without duplicates) with the inherited
    /// order and residuum and the given product. Bottom is the least member.
    pub(crate) fn induced(
        &self,
        members: &[Elem],
        mul: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<FiniteResiduatedLattice, AlgebraError> {
        let pos = |x: Elem| {
            members
                .binary_search(&x)
                .map_err(|_| AlgebraError::NotClosed(x))
        };
        let k = members.len();
        let mut leq = vec![vec![false; k]; k];
        let mut mul_t = vec![vec![0; k]; k];
        let mut imp_t = vec![vec![0; k]; k];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                leq[i][j] = self.leq(a, b);
                mul_t[i][j] = pos(mul(a, b))?;
                imp_t[i][j] = pos(self.imp(a, b))?;
            }
        }
        let bot = (0..k)
            .find(|&i| members.iter().all(|&b| self.leq(members[i], b)))
            .unwrap_or(0);
        let top = pos(self.top)?;
        FiniteResiduatedLattice::new(leq, mul_t, imp_t, bot, top)
    }
}
