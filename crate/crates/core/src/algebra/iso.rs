use super::{Elem, FiniteResiduatedLattice};

/// Cheap isomorphism invariants of a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Signature {
    below: usize,
    above: usize,
    idempotent: bool,
    /// Number of distinct powers `a^1, a^2, ...` before they stabilise.
    orbit: usize,
}

fn signature(alg: &FiniteResiduatedLattice, a: Elem) -> Signature {
    let mut seen = vec![a];
    let mut cur = a;
    loop {
        let next = alg.mul(cur, a);
        if seen.contains(&next) {
            break;
        }
        seen.push(next);
        cur = next;
    }
    Signature {
        below: alg.elements().filter(|&b| alg.lt(b, a)).count(),
        above: alg.elements().filter(|&b| alg.lt(a, b)).count(),
        idempotent: alg.mul(a, a) == a,
        orbit: seen.len(),
    }
}

impl FiniteResiduatedLattice {
    /// Searches for a bijection `f: self -> other` preserving order, product,
    /// residuum and both constants. Returns `f` as a vector indexed by `self`.
    pub fn find_isomorphism(&self, other: &FiniteResiduatedLattice) -> Option<Vec<Elem>> {
        if self.size != other.size {
            return None;
        }
        let sig_a: Vec<Signature> = self.elements().map(|a| signature(self, a)).collect();
        let sig_b: Vec<Signature> = other.elements().map(|b| signature(other, b)).collect();
        let mut candidates: Vec<Vec<Elem>> = self
            .elements()
            .map(|a| other.elements().filter(|&b| sig_a[a] == sig_b[b]).collect())
            .collect();
        candidates[self.bot].retain(|&b| b == other.bot);
        candidates[self.top].retain(|&b| b == other.top);
        if candidates.iter().any(Vec::is_empty) {
            return None;
        }
        let mut order: Vec<Elem> = self.elements().collect();
        order.sort_by_key(|&a| (candidates[a].len(), a));

        let mut map: Vec<Option<Elem>> = vec![None; self.size];
        let mut used = vec![false; other.size];
        if self.extend(other, &order, 0, &candidates, &mut map, &mut used) {
            let f: Vec<Elem> = map.into_iter().map(|x| x.expect("complete map")).collect();
            debug_assert!(self.is_isomorphism(other, &f));
            Some(f)
        } else {
            None
        }
    }

    fn extend(
        &self,
        other: &FiniteResiduatedLattice,
        order: &[Elem],
        depth: usize,
        candidates: &[Vec<Elem>],
        map: &mut Vec<Option<Elem>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&a) = order.get(depth) else {
            return true;
        };
        for &b in &candidates[a] {
            if used[b] {
                continue;
            }
            map[a] = Some(b);
            used[b] = true;
            if self.consistent(other, a, map)
                && self.extend(other, order, depth + 1, candidates, map, used)
            {
                return true;
            }
            map[a] = None;
            used[b] = false;
        }
        false
    }

    /// Checks every constraint involving `a` whose other elements are mapped.
    fn consistent(&self, other: &FiniteResiduatedLattice, a: Elem, map: &[Option<Elem>]) -> bool {
        let fa = map[a].expect("a is mapped");
        for x in self.elements() {
            let Some(fx) = map[x] else { continue };
            if self.leq(a, x) != other.leq(fa, fx) || self.leq(x, a) != other.leq(fx, fa) {
                return false;
            }
            for (p, q) in [(a, x), (x, a)] {
                let (fp, fq) = (map[p].unwrap(), map[q].unwrap());
                if let Some(fm) = map[self.mul(p, q)] {
                    if fm != other.mul(fp, fq) {
                        return false;
                    }
                }
                if let Some(fi) = map[self.imp(p, q)] {
                    if fi != other.imp(fp, fq) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether `f` is a bijective homomorphism onto `other` that also
    /// reflects the order.
    pub fn is_isomorphism(&self, other: &FiniteResiduatedLattice, f: &[Elem]) -> bool {
        if f.len() != self.size || self.size != other.size {
            return false;
        }
        let mut hit = vec![false; other.size];
        for &y in f {
            if y >= other.size || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        f[self.bot] == other.bot
            && f[self.top] == other.top
            && self.elements().all(|a| {
                self.elements().all(|b| {
                    self.leq(a, b) == other.leq(f[a], f[b])
                        && f[self.mul(a, b)] == other.mul(f[a], f[b])
                        && f[self.imp(a, b)] == other.imp(f[a], f[b])
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use crate::zoo;

    #[test]
    fn identity_on_s3() {
        let s3 = zoo::mv_chain(3);
        assert_eq!(s3.find_isomorphism(&s3), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn s2_is_not_godel() {
        assert!(zoo::mv_chain(2).find_isomorphism(&zoo::godel_chain(3)).is_none());
    }

    #[test]
    fn finds_nontrivial_permutation() {
        // B2 x B2 with the two atoms swapped in the second copy.
        let b = zoo::mv_chain(1);
        let p = b.product(&b).unwrap();
        let swap = [0usize, 2, 1, 3];
        let inv = |x: usize| swap[x];
        let leq = (0..4).map(|a| (0..4).map(|c| p.leq(inv(a), inv(c))).collect()).collect();
        let mul = (0..4)
            .map(|a| (0..4).map(|c| swap[p.mul(inv(a), inv(c))]).collect())
            .collect();
        let imp = (0..4)
            .map(|a| (0..4).map(|c| swap[p.imp(inv(a), inv(c))]).collect())
            .collect();
        let q = crate::FiniteResiduatedLattice::new(leq, mul, imp, 0, 3).unwrap();
        let f = p.find_isomorphism(&q).unwrap();
        assert!(p.is_isomorphism(&q, &f));
    }
}
