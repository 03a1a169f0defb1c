//! Sparse multivariate polynomials over `Q` and a Buchberger Gröbner engine.
//!
//! Variables are plain indices; [`PolyRing`] attaches names for parsing and
//! printing. Polynomials are stored order-free; a [`MonomialOrder`] is only
//! consulted by the Gröbner routines.

mod groebner;
pub mod identities;
mod matrix;
mod text;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use crate::exactmath::Scalar;

pub use groebner::{divide_exact, groebner, ideal_is_trivial, reduce, s_polynomial};
pub use matrix::PolyMatrix;
pub use text::{ParsePolyError, PolyRing};

pub type Var = u32;

/// A power product, stored as `(variable, exponent)` pairs sorted by
/// variable with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m = m.mul(&Monomial(if e == 0 {
                Vec::new()
            } else {
                alloc::vec![(v, e)]
            }));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }
}

/// A polynomial with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Scalar::one(), Monomial::var(v))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Monomial)>) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant polynomial.
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(Monomial::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn add_term(&mut self, c: Scalar, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, k: &Scalar) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Var, value: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = Monomial(m.0.iter().copied().filter(|&(w, _)| w != v).collect());
            let piece = &Polynomial::term(c.clone(), rest) * &value.pow(e);
            out = &out + &piece;
        }
        out
    }

    pub fn evaluate(&self, assignment: &dyn Fn(Var) -> Scalar) -> Scalar {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .fold(c.clone(), |acc, &(v, e)| acc * assignment(v).pow(e))
            })
            .sum()
    }
}

impl From<Scalar> for Polynomial {
    fn from(c: Scalar) -> Self {
        Polynomial::constant(c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(c1 * c2, m1.mul(m2));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Scalar::from_int(-1))
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegRevLex,
    Lex,
}

/// A monomial order: a kind plus variable priority, highest first.
/// Variables missing from `priority` rank below every listed variable,
/// in increasing index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<Var>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<Var>) -> Self {
        MonomialOrder { kind, priority }
    }

    pub fn degrevlex(priority: Vec<Var>) -> Self {
        MonomialOrder::new(OrderKind::DegRevLex, priority)
    }

    pub fn lex(priority: Vec<Var>) -> Self {
        MonomialOrder::new(OrderKind::Lex, priority)
    }

    /// Full variable ranking (highest first) covering `extra`.
    pub(crate) fn ranking(&self, extra: &[Var]) -> Vec<Var> {
        let mut ranking = self.priority.clone();
        let mut rest: Vec<Var> = extra
            .iter()
            .copied()
            .filter(|v| !self.priority.contains(v))
            .collect();
        rest.sort_unstable();
        rest.dedup();
        ranking.extend(rest);
        ranking
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let mut vars: Vec<Var> = a.0.iter().chain(b.0.iter()).map(|&(v, _)| v).collect();
        vars.sort_unstable();
        vars.dedup();
        let ranking = self.ranking(&vars);
        let ea: Vec<u32> = ranking.iter().map(|&v| a.exponent(v)).collect();
        let eb: Vec<u32> = ranking.iter().map(|&v| b.exponent(v)).collect();
        compare_dense(self.kind, &ea, &eb)
    }
}

pub(crate) fn compare_dense(kind: OrderKind, a: &[u32], b: &[u32]) -> Ordering {
    match kind {
        OrderKind::Lex => a.cmp(b),
        OrderKind::DegRevLex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
        }
    }
}
