use std::fmt;

use serde::Serialize;

use super::{Elem, FiniteResiduatedLattice};

/// A law a finite residuated lattice is expected to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
    MeetExists,
    JoinExists,
    BotIsLeast,
    TopIsGreatest,
    MulCommutative,
    MulAssociative,
    MulUnit,
    Adjunction,
    ImpIsMaximum,
    /// `top -> a = a`
    TopImp,
    /// `a <= b` iff `a -> b = top`
    OrderByImp,
    /// `*` and `->` are monotone / antitone in the expected arguments
    Monotonicity,
    /// `a * b <= a /\ b`
    MulBelowMeet,
    /// `b <= a -> (a * b) <= a -> b`
    ImpOfProduct,
    /// `a -> (b -> c) = (a * b) -> c = b -> (a -> c)`
    Currying,
    /// `a * (a -> b) <= a /\ b`
    ModusPonens,
    /// `a \/ b <= (a -> b) -> b`
    JoinBelowDoubleImp,
    /// `((a -> b) -> b) -> b = a -> b`
    TripleImp,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::MeetExists => "meet exists",
            Axiom::JoinExists => "join exists",
            Axiom::BotIsLeast => "bot is least",
            Axiom::TopIsGreatest => "top is greatest",
            Axiom::MulCommutative => "mul commutative",
            Axiom::MulAssociative => "mul associative",
            Axiom::MulUnit => "top is mul unit",
            Axiom::Adjunction => "adjunction",
            Axiom::ImpIsMaximum => "imp is max residual",
            Axiom::TopImp => "top -> a = a",
            Axiom::OrderByImp => "a <= b iff a -> b = top",
            Axiom::Monotonicity => "monotonicity of * and ->",
            Axiom::MulBelowMeet => "a * b <= a /\\ b",
            Axiom::ImpOfProduct => "b <= a -> ab <= a -> b",
            Axiom::Currying => "a -> (b -> c) = ab -> c",
            Axiom::ModusPonens => "a * (a -> b) <= a /\\ b",
            Axiom::JoinBelowDoubleImp => "a \\/ b <= (a -> b) -> b",
            Axiom::TripleImp => "((a -> b) -> b) -> b = a -> b",
        }
    }
}

/// One failed law together with the first tuple violating it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

/// Outcome of [`FiniteResiduatedLattice::validate_axioms`]; empty iff valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self
            .failures
            .iter()
            .map(|x| format!("{} at {:?}", x.axiom.name(), x.witness))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

struct Collector {
    failures: Vec<AxiomFailure>,
}

impl Collector {
    fn check<I>(&mut self, axiom: Axiom, tuples: I, holds: impl Fn(&[Elem]) -> bool)
    where
        I: IntoIterator<Item = Vec<Elem>>,
    {
        if let Some(witness) = tuples.into_iter().find(|t| !holds(t)) {
            self.failures.push(AxiomFailure { axiom, witness });
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    (0..n).flat_map(move |a| (0..n).map(move |b| vec![a, b]))
}

fn triples(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| vec![a, b, c])))
}

fn singles(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    (0..n).map(|a| vec![a])
}

impl FiniteResiduatedLattice {
    /// Checks every residuated-lattice axiom exhaustively.
    ///
    /// Each failed law is reported once, with the first violating tuple in
    /// index order. The derived properties (`top -> a = a`, currying, ...) are
    /// only checked when the defining axioms all hold.
    pub fn validate_axioms(&self) -> ValidationReport {
        let n = self.size;
        let mut c = Collector {
            failures: Vec::new(),
        };

        c.check(Axiom::Reflexivity, singles(n), |t| self.leq(t[0], t[0]));
        c.check(Axiom::Antisymmetry, pairs(n), |t| {
            !(self.leq(t[0], t[1]) && self.leq(t[1], t[0])) || t[0] == t[1]
        });
        c.check(Axiom::Transitivity, triples(n), |t| {
            !(self.leq(t[0], t[1]) && self.leq(t[1], t[2])) || self.leq(t[0], t[2])
        });
        c.check(Axiom::MeetExists, pairs(n), |t| self.try_meet(t[0], t[1]).is_some());
        c.check(Axiom::JoinExists, pairs(n), |t| self.try_join(t[0], t[1]).is_some());
        c.check(Axiom::BotIsLeast, singles(n), |t| self.leq(self.bot, t[0]));
        c.check(Axiom::TopIsGreatest, singles(n), |t| self.leq(t[0], self.top));
        c.check(Axiom::MulCommutative, pairs(n), |t| {
            self.mul(t[0], t[1]) == self.mul(t[1], t[0])
        });
        c.check(Axiom::MulAssociative, triples(n), |t| {
            self.mul(self.mul(t[0], t[1]), t[2]) == self.mul(t[0], self.mul(t[1], t[2]))
        });
        c.check(Axiom::MulUnit, singles(n), |t| {
            self.mul(t[0], self.top) == t[0] && self.mul(self.top, t[0]) == t[0]
        });
        c.check(Axiom::Adjunction, triples(n), |t| {
            let (a, b, z) = (t[0], t[1], t[2]);
            self.leq(self.mul(a, b), z) == self.leq(a, self.imp(b, z))
        });
        c.check(Axiom::ImpIsMaximum, pairs(n), |t| {
            let (b, z) = (t[0], t[1]);
            let r = self.imp(b, z);
            self.leq(self.mul(b, r), z)
                && (0..n).all(|y| !self.leq(self.mul(b, y), z) || self.leq(y, r))
        });

        if !c.failures.is_empty() {
            return ValidationReport {
                failures: c.failures,
            };
        }

        c.check(Axiom::TopImp, singles(n), |t| self.imp(self.top, t[0]) == t[0]);
        c.check(Axiom::OrderByImp, pairs(n), |t| {
            self.leq(t[0], t[1]) == (self.imp(t[0], t[1]) == self.top)
        });
        c.check(Axiom::Monotonicity, triples(n), |t| {
            let (a, b, z) = (t[0], t[1], t[2]);
            !self.leq(a, b)
                || (self.leq(self.mul(a, z), self.mul(b, z))
                    && self.leq(self.imp(b, z), self.imp(a, z))
                    && self.leq(self.imp(z, a), self.imp(z, b)))
        });
        c.check(Axiom::MulBelowMeet, pairs(n), |t| {
            self.leq(self.mul(t[0], t[1]), self.meet(t[0], t[1]))
        });
        c.check(Axiom::ImpOfProduct, pairs(n), |t| {
            let (a, b) = (t[0], t[1]);
            let mid = self.imp(a, self.mul(a, b));
            self.leq(b, mid) && self.leq(mid, self.imp(a, b))
        });
        c.check(Axiom::Currying, triples(n), |t| {
            let (a, b, z) = (t[0], t[1], t[2]);
            let lhs = self.imp(a, self.imp(b, z));
            lhs == self.imp(self.mul(a, b), z) && lhs == self.imp(b, self.imp(a, z))
        });
        c.check(Axiom::ModusPonens, pairs(n), |t| {
            let (a, b) = (t[0], t[1]);
            self.leq(self.mul(a, self.imp(a, b)), self.meet(a, b))
        });
        c.check(Axiom::JoinBelowDoubleImp, pairs(n), |t| {
            let (a, b) = (t[0], t[1]);
            self.leq(self.join(a, b), self.imp(self.imp(a, b), b))
        });
        c.check(Axiom::TripleImp, pairs(n), |t| {
            let (a, b) = (t[0], t[1]);
            self.imp(self.imp(self.imp(a, b), b), b) == self.imp(a, b)
        });

        ValidationReport {
            failures: c.failures,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Table;
    use crate::zoo;

    #[test]
    fn s2_plus_is_valid() {
        assert!(zoo::mv_chain(2).validate_axioms().is_valid());
    }

    #[test]
    fn trivial_algebra_is_valid() {
        let one = FiniteResiduatedLattice::from_tables(
            vec![vec![true]],
            vec![vec![0]],
            vec![vec![0]],
            0,
            0,
        )
        .unwrap();
        assert!(one.validate_axioms().is_valid());
    }

    #[test]
    fn mutating_a_squared_is_caught_by_adjunction() {
        // S_2^+: 0 = a^2 = bot, 1 = a, 2 = top. Set a * a := a.
        let s2 = zoo::mv_chain(2);
        let broken = s2.with_entry(Table::Mul, 1, 1, 1);
        let report = broken.validate_axioms();
        assert!(!report.is_valid());
        let adj = report.failure(Axiom::Adjunction).expect("adjunction reported");
        assert_eq!(adj.witness, vec![1, 1, 0]);
    }

    #[test]
    fn missing_meet_is_reported_not_panicking() {
        // Two incomparable atoms with no bottom: {0, 1} below 2 only.
        let leq = vec![
            vec![true, false, true],
            vec![false, true, true],
            vec![false, false, true],
        ];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]];
        let imp = vec![vec![2, 1, 2], vec![0, 2, 2], vec![0, 1, 2]];
        let a = FiniteResiduatedLattice::from_tables(leq, mul, imp, 0, 2).unwrap();
        let report = a.validate_axioms();
        assert!(report.failure(Axiom::MeetExists).is_some());
        assert!(report.failure(Axiom::BotIsLeast).is_some());
    }

    #[test]
    fn imp_mutation_is_caught() {
        let g = zoo::godel_chain(3);
        let broken = g.with_entry(Table::Imp, 2, 1, 2);
        assert!(!broken.validate_axioms().is_valid());
    }
}
