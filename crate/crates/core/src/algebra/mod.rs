//! Finite bounded commutative integral residuated lattices given by tables.
//!
//! Elements are dense indices `0..n`. The order, the monoid operation and the
//! residuum are stored explicitly; meets and joins are derived from the order
//! once at construction. Construction only checks the *shape* of the tables
//! (square, in range); the residuated-lattice axioms are checked by
//! [`FiniteResiduatedLattice::validate_axioms`], so a broken table can still be
//! loaded and diagnosed.

mod classify;
mod filter;
mod iso;
mod json;
mod subalgebra;
mod validate;

pub use classify::AlgebraClassFlags;
pub use filter::ImplicativeFilter;
pub use json::{AlgebraFile, JsonLoadError};
pub use validate::{Axiom, AxiomFailure, ValidationReport};

use thiserror::Error;

/// Index of an element in a finite algebra.
pub type Elem = usize;

/// Largest carrier on which filter enumeration is attempted.
pub const MAX_FILTER_SIZE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra must have at least one element")]
    Empty,
    #[error("table `{table}` has wrong shape: expected {expected}x{expected}")]
    Shape { table: &'static str, expected: usize },
    #[error("table `{table}` entry at ({row}, {col}) is {value}, outside 0..{size}")]
    OutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("constant `{name}` is {value}, outside 0..{size}")]
    ConstantOutOfRange {
        name: &'static str,
        value: usize,
        size: usize,
    },
    #[error("order entry at ({row}, {col}) must be 0 or 1, found {value}")]
    NotBoolean { row: usize, col: usize, value: u64 },
    #[error("not residuated: {{z : {b} * z <= {c}}} has no maximum forming a down-set")]
    NotResiduated { b: Elem, c: Elem },
    #[error("residuated lattice axioms fail: {0}")]
    Axioms(ValidationReport),
    #[error("carrier of size {size} exceeds the enumeration cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("subset is not closed under the operations: {0} is missing")]
    NotClosed(Elem),
    #[error("set is not an implicative filter: {0}")]
    NotAFilter(String),
}

/// A bounded commutative integral residuated lattice on `{0..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteResiduatedLattice {
    size: usize,
    leq: Vec<bool>,
    mul: Vec<Elem>,
    imp: Vec<Elem>,
    meet: Vec<Option<Elem>>,
    join: Vec<Option<Elem>>,
    bot: Elem,
    top: Elem,
}

impl FiniteResiduatedLattice {
    /// Builds an algebra from tables without checking the axioms.
    ///
    /// Only structural problems (shape, out-of-range entries) are errors here.
    pub fn from_tables(
        leq: Vec<Vec<bool>>,
        mul: Vec<Vec<Elem>>,
        imp: Vec<Vec<Elem>>,
        bot: Elem,
        top: Elem,
    ) -> Result<Self, AlgebraError> {
        let size = leq.len();
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        let leq = flatten("leq", leq, size)?;
        let mul = flatten("mul", mul, size)?;
        let imp = flatten("imp", imp, size)?;
        for (table, data) in [("mul", &mul), ("imp", &imp)] {
            if let Some((idx, &value)) = data.iter().enumerate().find(|(_, &v)| v >= size) {
                return Err(AlgebraError::OutOfRange {
                    table,
                    row: idx / size,
                    col: idx % size,
                    value,
                    size,
                });
            }
        }
        for (name, value) in [("bot", bot), ("top", top)] {
            if value >= size {
                return Err(AlgebraError::ConstantOutOfRange { name, value, size });
            }
        }
        let (meet, join) = derive_lattice(size, &leq);
        Ok(Self {
            size,
            leq,
            mul,
            imp,
            meet,
            join,
            bot,
            top,
        })
    }

    /// Builds an algebra and rejects it unless every axiom holds.
    pub fn new(
        leq: Vec<Vec<bool>>,
        mul: Vec<Vec<Elem>>,
        imp: Vec<Vec<Elem>>,
        bot: Elem,
        top: Elem,
    ) -> Result<Self, AlgebraError> {
        Self::from_tables(leq, mul, imp, bot, top)?.validated()
    }

    /// Builds an algebra from order and product, deriving the residuum.
    pub fn from_mul(
        leq: Vec<Vec<bool>>,
        mul: Vec<Vec<Elem>>,
        bot: Elem,
        top: Elem,
    ) -> Result<Self, AlgebraError> {
        let imp = residuum_from_mul(&leq, &mul, bot, top)?;
        Self::new(leq, mul, imp, bot, top)
    }

    /// A totally ordered algebra on `0 < 1 < ... < n-1` given its product.
    pub fn chain_from_mul(mul: Vec<Vec<Elem>>) -> Result<Self, AlgebraError> {
        let n = mul.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        let leq = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
        Self::from_mul(leq, mul, 0, n - 1)
    }

    pub fn validated(self) -> Result<Self, AlgebraError> {
        let report = self.validate_axioms();
        if report.is_valid() {
            Ok(self)
        } else {
            Err(AlgebraError::Axioms(report))
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bot(&self) -> Elem {
        self.bot
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size + b]
    }

    #[inline]
    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.size + b]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.imp(a, self.bot)
    }

    /// Meet of `a` and `b`. Panics if the order has no such meet, which
    /// cannot happen for an algebra that passed validation.
    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size + b].expect("meet exists in a validated lattice")
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size + b].expect("join exists in a validated lattice")
    }

    pub fn try_meet(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.meet[a * self.size + b]
    }

    pub fn try_join(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.join[a * self.size + b]
    }

    /// `a^n`, with `a^0 = top`.
    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        let mut acc = self.top;
        let mut base = a;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Meet of an arbitrary family; the empty meet is `top`.
    pub fn meet_all(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items.into_iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    /// Number of elements strictly below `a`.
    pub fn rank(&self, a: Elem) -> usize {
        self.elements().filter(|&b| self.lt(b, a)).count()
    }

    pub fn leq_table(&self) -> Vec<Vec<bool>> {
        self.rows(&self.leq)
    }

    pub fn mul_table(&self) -> Vec<Vec<Elem>> {
        self.rows(&self.mul)
    }

    pub fn imp_table(&self) -> Vec<Vec<Elem>> {
        self.rows(&self.imp)
    }

    fn rows<T: Copy>(&self, data: &[T]) -> Vec<Vec<T>> {
        data.chunks(self.size).map(<[T]>::to_vec).collect()
    }

    /// Direct product, with pairs `(a, b)` encoded as `a * |other| + b`.
    pub fn product(&self, other: &Self) -> Result<Self, AlgebraError> {
        let m = other.size;
        let n = self.size * m;
        let split = |x: Elem| (x / m, x % m);
        let mut leq = vec![vec![false; n]; n];
        let mut mul = vec![vec![0; n]; n];
        let mut imp = vec![vec![0; n]; n];
        for x in 0..n {
            let (a, b) = split(x);
            for y in 0..n {
                let (c, d) = split(y);
                leq[x][y] = self.leq(a, c) && other.leq(b, d);
                mul[x][y] = self.mul(a, c) * m + other.mul(b, d);
                imp[x][y] = self.imp(a, c) * m + other.imp(b, d);
            }
        }
        Self::new(leq, mul, imp, self.bot * m + other.bot, self.top * m + other.top)
    }

    /// Replaces one entry of a table. Used to build deliberately broken
    /// algebras for testing the validator.
    pub fn with_entry(&self, table: Table, row: Elem, col: Elem, value: Elem) -> Self {
        let mut out = self.clone();
        let idx = row * self.size + col;
        match table {
            Table::Leq => out.leq[idx] = value != 0,
            Table::Mul => out.mul[idx] = value,
            Table::Imp => out.imp[idx] = value,
        }
        if table == Table::Leq {
            let (meet, join) = derive_lattice(out.size, &out.leq);
            out.meet = meet;
            out.join = join;
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    Leq,
    Mul,
    Imp,
}

fn flatten<T>(table: &'static str, rows: Vec<Vec<T>>, size: usize) -> Result<Vec<T>, AlgebraError> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(AlgebraError::Shape {
            table,
            expected: size,
        });
    }
    Ok(rows.into_iter().flatten().collect())
}

/// Greatest lower / least upper bounds read off the order, where they exist.
fn derive_lattice(n: usize, leq: &[bool]) -> (Vec<Option<Elem>>, Vec<Option<Elem>>) {
    let le = |a: Elem, b: Elem| leq[a * n + b];
    let mut meet = vec![None; n * n];
    let mut join = vec![None; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<Elem> = (0..n).filter(|&z| le(z, a) && le(z, b)).collect();
            meet[a * n + b] = lower.iter().copied().find(|&g| lower.iter().all(|&z| le(z, g)));
            let upper: Vec<Elem> = (0..n).filter(|&z| le(a, z) && le(b, z)).collect();
            join[a * n + b] = upper.iter().copied().find(|&l| upper.iter().all(|&z| le(l, z)));
        }
    }
    (meet, join)
}

/// Computes the residuum `b -> c = max{z : b * z <= c}` of a product table.
///
/// Fails with [`AlgebraError::NotResiduated`] when for some `(b, c)` the set
/// `{z : b * z <= c}` has no maximum, or has one but is not the whole
/// down-set of it (so adjunction could not hold).
pub fn residuum_from_mul(
    leq: &[Vec<bool>],
    mul: &[Vec<Elem>],
    bot: Elem,
    top: Elem,
) -> Result<Vec<Vec<Elem>>, AlgebraError> {
    let n = leq.len();
    if n == 0 {
        return Err(AlgebraError::Empty);
    }
    let _ = flatten("leq", leq.to_vec(), n)?;
    let _ = flatten("mul", mul.to_vec(), n)?;
    for (name, value) in [("bot", bot), ("top", top)] {
        if value >= n {
            return Err(AlgebraError::ConstantOutOfRange { name, value, size: n });
        }
    }
    let mut imp = vec![vec![0; n]; n];
    for b in 0..n {
        for c in 0..n {
            let mut below = Vec::new();
            for (z, &p) in mul[b].iter().enumerate() {
                if p >= n {
                    return Err(AlgebraError::OutOfRange {
                        table: "mul",
                        row: b,
                        col: z,
                        value: p,
                        size: n,
                    });
                }
                if leq[p][c] {
                    below.push(z);
                }
            }
            let max = below
                .iter()
                .copied()
                .find(|&m| below.iter().all(|&z| leq[z][m]))
                .ok_or(AlgebraError::NotResiduated { b, c })?;
            if (0..n).any(|z| leq[z][max] && !below.contains(&z)) {
                return Err(AlgebraError::NotResiduated { b, c });
            }
            imp[b][c] = max;
        }
    }
    Ok(imp)
}
