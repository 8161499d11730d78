use std::collections::BTreeSet;

use serde::Serialize;

use super::{AlgebraError, Elem, FiniteResiduatedLattice, MAX_FILTER_SIZE};

/// An implicative filter, stored as the sorted list of its members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ImplicativeFilter {
    pub members: Vec<Elem>,
}

impl ImplicativeFilter {
    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

impl FiniteResiduatedLattice {
    /// Whether `set` contains `top`, is upward closed and closed under `*`.
    pub fn is_filter(&self, set: &[Elem]) -> bool {
        let inside: BTreeSet<Elem> = set.iter().copied().collect();
        inside.contains(&self.top)
            && inside.iter().all(|&a| {
                self.elements().all(|b| !self.leq(a, b) || inside.contains(&b))
                    && inside.iter().all(|&b| inside.contains(&self.mul(a, b)))
            })
    }

    /// Modus-ponens form of the filter condition: `top` in F and
    /// `a, a -> b` in F imply `b` in F.
    pub fn is_mp_closed(&self, set: &[Elem]) -> bool {
        let inside: BTreeSet<Elem> = set.iter().copied().collect();
        inside.contains(&self.top)
            && inside.iter().all(|&a| {
                self.elements()
                    .all(|b| !inside.contains(&self.imp(a, b)) || inside.contains(&b))
            })
    }

    /// All implicative filters, ordered by size and then members.
    ///
    /// In a finite integral algebra every filter is the up-set of its least
    /// element, which is idempotent, so filters correspond to idempotents.
    pub fn filters(&self) -> Result<Vec<ImplicativeFilter>, AlgebraError> {
        if self.size > MAX_FILTER_SIZE {
            return Err(AlgebraError::TooLarge {
                size: self.size,
                cap: MAX_FILTER_SIZE,
            });
        }
        let mut out: Vec<ImplicativeFilter> = self
            .elements()
            .filter(|&p| self.mul(p, p) == p)
            .map(|p| ImplicativeFilter {
                members: self.elements().filter(|&b| self.leq(p, b)).collect(),
            })
            .collect();
        out.sort_by(|a, b| (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members)));
        out.dedup();
        Ok(out)
    }

    /// Quotient by the congruence `a ~ b` iff `a -> b` and `b -> a` lie in `filter`.
    ///
    /// Classes are numbered by their least index; the second component maps
    /// each element to its class.
    pub fn quotient(
        &self,
        filter: &[Elem],
    ) -> Result<(FiniteResiduatedLattice, Vec<Elem>), AlgebraError> {
        if !self.is_filter(filter) {
            return Err(AlgebraError::NotAFilter(format!("{filter:?}")));
        }
        let inside: BTreeSet<Elem> = filter.iter().copied().collect();
        let below = |a: Elem, b: Elem| inside.contains(&self.imp(a, b));

        let mut reps: Vec<Elem> = Vec::new();
        let mut class_of = vec![0; self.size];
        for a in self.elements() {
            match reps.iter().position(|&r| below(a, r) && below(r, a)) {
                Some(k) => class_of[a] = k,
                None => {
                    class_of[a] = reps.len();
                    reps.push(a);
                }
            }
        }
        let table = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
            reps.iter()
                .map(|&a| reps.iter().map(|&b| class_of[op(a, b)]).collect())
                .collect()
        };
        let leq = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| below(a, b)).collect())
            .collect();
        let mul = table(&|a, b| self.mul(a, b));
        let imp = table(&|a, b| self.imp(a, b));
        let q = FiniteResiduatedLattice::new(leq, mul, imp, class_of[self.bot], class_of[self.top])?;
        Ok((q, class_of))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn mv_chain_has_two_filters() {
        let s2 = zoo::mv_chain(2);
        let fs = s2.filters().unwrap();
        assert_eq!(
            fs,
            vec![
                ImplicativeFilter { members: vec![2] },
                ImplicativeFilter {
                    members: vec![0, 1, 2]
                }
            ]
        );
    }

    #[test]
    fn filters_agree_with_both_definitions() {
        for alg in [zoo::godel_chain(4), zoo::a_n_chain(4), zoo::mv_chain(3)] {
            for f in alg.filters().unwrap() {
                assert!(alg.is_filter(&f.members));
                assert!(alg.is_mp_closed(&f.members));
            }
            // brute force over all subsets
            let n = alg.size();
            let count = (0u32..1 << n)
                .filter(|mask| {
                    let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                    alg.is_filter(&set)
                })
                .count();
            assert_eq!(count, alg.filters().unwrap().len());
        }
    }

    #[test]
    fn quotient_by_top_is_identity() {
        let a = zoo::a_n_chain(4);
        let (q, proj) = a.quotient(&[a.top()]).unwrap();
        assert_eq!(q.size(), a.size());
        assert_eq!(proj, (0..a.size()).collect::<Vec<_>>());
        assert!(q.find_isomorphism(&a).is_some());
    }

    #[test]
    fn godel_quotient_by_upper_filter_is_boolean() {
        let g = zoo::godel_chain(3);
        let (q, proj) = g.quotient(&[1, 2]).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(proj, vec![0, 1, 1]);
        assert!(q.find_isomorphism(&zoo::mv_chain(1)).is_some());
    }

    #[test]
    fn quotient_rejects_non_filter() {
        let g = zoo::godel_chain(3);
        assert!(matches!(g.quotient(&[1]), Err(AlgebraError::NotAFilter(_))));
        assert!(matches!(g.quotient(&[0, 2]), Err(AlgebraError::NotAFilter(_))));
    }
}
