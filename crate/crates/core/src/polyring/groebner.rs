//! Buchberger's algorithm with the normal selection strategy and both of
//! Buchberger's criteria for discarding pairs.
//!
//! Internally every polynomial is converted to a list of terms with dense
//! exponent vectors laid out in the order's variable ranking and sorted
//! from the leading term down.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{compare_dense, Monomial, MonomialOrder, OrderKind, Polynomial, Var};
use crate::exactmath::Scalar;

type Exps = Vec<u32>;

#[derive(Clone)]
struct Ctx {
    kind: OrderKind,
    ranking: Vec<Var>,
}

#[derive(Clone, Debug)]
struct Dense {
    terms: Vec<(Exps, Scalar)>,
}

impl Ctx {
    fn new(ord: &MonomialOrder, polys: &[&Polynomial]) -> Self {
        let vars: Vec<Var> = polys.iter().flat_map(|p| p.variables()).collect();
        Ctx {
            kind: ord.kind,
            ranking: ord.ranking(&vars),
        }
    }

    fn cmp(&self, a: &Exps, b: &Exps) -> Ordering {
        compare_dense(self.kind, a, b)
    }

    fn to_dense(&self, p: &Polynomial) -> Dense {
        let mut terms: Vec<(Exps, Scalar)> = p
            .terms()
            .map(|(m, c)| {
                let e = self.ranking.iter().map(|&v| m.exponent(v)).collect();
                (e, c.clone())
            })
            .collect();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        Dense { terms }
    }

    fn to_poly(&self, d: &Dense) -> Polynomial {
        Polynomial::from_terms(d.terms.iter().map(|(e, c)| {
            let pairs: Vec<(Var, u32)> = self
                .ranking
                .iter()
                .zip(e)
                .filter(|(_, &x)| x > 0)
                .map(|(&v, &x)| (v, x))
                .collect();
            (c.clone(), Monomial::from_pairs(&pairs))
        }))
    }

    /// `a - k * x^shift * b`, merging sorted term lists.
    fn sub_mul(&self, a: &Dense, k: &Scalar, shift: &Exps, b: &Dense) -> Dense {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let shifted = b.terms.iter().map(|(e, c)| {
            let e: Exps = e.iter().zip(shift).map(|(x, y)| x + y).collect();
            (e, c * k)
        });
        let mut left = a.terms.iter().cloned().peekable();
        let mut right = shifted.peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(left.next().unwrap()),
                (None, Some(_)) => {
                    let (e, c) = right.next().unwrap();
                    out.push((e, -c));
                }
                (Some(l), Some(r)) => match self.cmp(&l.0, &r.0) {
                    Ordering::Greater => out.push(left.next().unwrap()),
                    Ordering::Less => {
                        let (e, c) = right.next().unwrap();
                        out.push((e, -c));
                    }
                    Ordering::Equal => {
                        let (e, c1) = left.next().unwrap();
                        let (_, c2) = right.next().unwrap();
                        let c = c1 - c2;
                        if !c.is_zero() {
                            out.push((e, c));
                        }
                    }
                },
            }
        }
        Dense { terms: out }
    }
}

impl Dense {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Exps, Scalar) {
        &self.terms[0]
    }

    fn monic(mut self) -> Dense {
        if let Some(inv) = self.terms.first().and_then(|t| t.1.inv()) {
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
        self
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &Exps, b: &Exps) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn diff(a: &Exps, b: &Exps) -> Exps {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn coprime(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Full reduction: no term of the result is divisible by a leading monomial of `basis`.
fn normal_form(ctx: &Ctx, f: &Dense, basis: &[Dense]) -> Dense {
    let mut p = f.clone();
    let mut rem: Vec<(Exps, Scalar)> = Vec::new();
    while !p.is_zero() {
        let (lm, lc) = p.lead().clone();
        match basis.iter().find(|g| divides(&g.lead().0, &lm)) {
            Some(g) => {
                let (glm, glc) = g.lead();
                let k = &lc / glc;
                p = ctx.sub_mul(&p, &k, &diff(&lm, glm), g);
            }
            None => {
                rem.push((lm, lc));
                p.terms.remove(0);
            }
        }
    }
    Dense { terms: rem }
}

fn s_poly_dense(ctx: &Ctx, f: &Dense, g: &Dense) -> Dense {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let l = lcm(fm, gm);
    let zero = Dense { terms: Vec::new() };
    let left = ctx.sub_mul(&zero, &-(fc.inv().expect("nonzero lead")), &diff(&l, fm), f);
    ctx.sub_mul(&left, &gc.inv().expect("nonzero lead"), &diff(&l, gm), g)
}

/// `S(f, g)` under `ord`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let ctx = Ctx::new(ord, &[f, g]);
    if f.is_zero() || g.is_zero() {
        return Polynomial::zero();
    }
    ctx.to_poly(&s_poly_dense(&ctx, &ctx.to_dense(f), &ctx.to_dense(g)))
}

/// Normal form of `f` modulo `basis`. Unique when `basis` is a Gröbner basis for `ord`.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let mut all: Vec<&Polynomial> = basis.iter().collect();
    all.push(f);
    let ctx = Ctx::new(ord, &all);
    let dense: Vec<Dense> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ctx.to_dense(g))
        .collect();
    ctx.to_poly(&normal_form(&ctx, &ctx.to_dense(f), &dense))
}

/// Exact quotient `f / g`, or `None` if `g` does not divide `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    let ctx = Ctx::new(ord, &[f, g]);
    let gd = ctx.to_dense(g);
    let (glm, glc) = gd.lead().clone();
    let mut p = ctx.to_dense(f);
    let mut quotient = Dense { terms: Vec::new() };
    while !p.is_zero() {
        let (lm, lc) = p.lead().clone();
        if !divides(&glm, &lm) {
            return None;
        }
        let k = &lc / &glc;
        let shift = diff(&lm, &glm);
        p = ctx.sub_mul(&p, &k, &shift, &gd);
        quotient.terms.push((shift, k));
    }
    Some(ctx.to_poly(&quotient))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exps,
}

/// Reduced Gröbner basis of the ideal generated by `gens`: monic, with no
/// term of any element divisible by another element's leading monomial.
/// Sorted by leading monomial, smallest first. The zero ideal gives an
/// empty basis.
pub fn groebner(gens: &[Polynomial], ord: &MonomialOrder) -> Vec<Polynomial> {
    let refs: Vec<&Polynomial> = gens.iter().collect();
    let ctx = Ctx::new(ord, &refs);
    let mut basis: Vec<Dense> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |basis: &mut Vec<Dense>, pairs: &mut Vec<Pair>, g: Dense| {
        let j = basis.len();
        for (i, h) in basis.iter().enumerate() {
            pairs.push(Pair {
                i,
                j,
                lcm: lcm(&h.lead().0, &g.lead().0),
            });
        }
        basis.push(g);
    };

    for g in gens.iter().filter(|g| !g.is_zero()) {
        let nf = normal_form(&ctx, &ctx.to_dense(g), &basis);
        if !nf.is_zero() {
            push(&mut basis, &mut pairs, nf.monic());
        }
    }

    while !basis.iter().any(Dense::is_constant) {
        // Normal strategy: smallest lcm first.
        let Some(best) = (0..pairs.len()).min_by(|&x, &y| {
            ctx.cmp(&pairs[x].lcm, &pairs[y].lcm)
                .then((pairs[x].i, pairs[x].j).cmp(&(pairs[y].i, pairs[y].j)))
        }) else {
            break;
        };
        let Pair { i, j, lcm: l } = pairs.swap_remove(best);
        done.insert((i, j));

        if coprime(&basis[i].lead().0, &basis[j].lead().0) {
            continue;
        }
        let pending = |a: usize, b: usize| {
            let key = (a.min(b), a.max(b));
            !done.contains(&key)
        };
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && divides(&basis[k].lead().0, &l) && !pending(i, k) && !pending(j, k)
        });
        if chain {
            continue;
        }
        let s = s_poly_dense(&ctx, &basis[i], &basis[j]);
        let h = normal_form(&ctx, &s, &basis);
        if !h.is_zero() {
            push(&mut basis, &mut pairs, h.monic());
        }
    }

    if let Some(c) = basis.iter().find(|g| g.is_constant()) {
        return alloc::vec![ctx.to_poly(&c.clone().monic())];
    }

    // Minimal basis: drop elements whose leading monomial is a multiple of another's.
    let mut keep: Vec<Dense> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && divides(&h.lead().0, &g.lead().0) && (h.lead().0 != g.lead().0 || k < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // Interreduce tails.
    let mut reduced: Vec<Dense> = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Dense> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &keep[idx];
        let head = Dense {
            terms: alloc::vec![g.lead().clone()],
        };
        let tail = Dense {
            terms: g.terms[1..].to_vec(),
        };
        let tail = normal_form(&ctx, &tail, &others);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        reduced.push(Dense { terms }.monic());
    }
    reduced.sort_by(|a, b| ctx.cmp(&a.lead().0, &b.lead().0));
    reduced.iter().map(|d| ctx.to_poly(d)).collect()
}

/// Whether `1 ∈ ⟨gens⟩`, decided with the default degrevlex order.
pub fn ideal_is_trivial(gens: &[Polynomial]) -> bool {
    let ord = super::identities::default_order();
    let gb = groebner(gens, &ord);
    gb.len() == 1 && gb[0] == Polynomial::one()
}
