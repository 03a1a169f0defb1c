//! The arity-3 component of the free operad on a two-dimensional space of
//! binary operations `V(2) = span(μ, μ')`, `μ' = (12)μ`.
//!
//! `F(3) = kS3 ⊗_{kS2} (V(2) ⊗ V(2))` is 12-dimensional. Basis vector
//! `e_{4k+i+1}` is `r_k ⊗ w_i`, where the coset representatives are
//! `r = (1, (13), (23))` and the inner basis is
//! `w = (μ⊗μ, μ⊗μ', μ'⊗μ, μ'⊗μ')`. The subgroup `S2 = {1, (12)}` acts on
//! the inner factor as `id ⊗ (12)`, i.e. it swaps `w_0 ↔ w_1` and `w_2 ↔ w_3`.
//!
//! Permutations compose as functions: `(g∘h)(x) = g(h(x))`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::exactmath::{Matrix, Scalar, ShapeError};

pub const DIM: usize = 12;

/// A permutation of `{1, 2, 3}`, stored as the images of 1, 2, 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([1, 2, 3]);
    pub const T12: Perm3 = Perm3([2, 1, 3]);
    pub const T13: Perm3 = Perm3([3, 2, 1]);
    pub const T23: Perm3 = Perm3([1, 3, 2]);
    pub const C123: Perm3 = Perm3([2, 3, 1]);
    pub const C132: Perm3 = Perm3([3, 1, 2]);

    /// The three transpositions, which generate S3.
    pub const GENERATORS: [Perm3; 3] = [Perm3::T12, Perm3::T13, Perm3::T23];

    pub fn new(images: [u8; 3]) -> Option<Perm3> {
        let mut seen = [false; 3];
        for &i in &images {
            if !(1..=3).contains(&i) || seen[(i - 1) as usize] {
                return None;
            }
            seen[(i - 1) as usize] = true;
        }
        Some(Perm3(images))
    }

    pub fn all() -> [Perm3; 6] {
        [
            Perm3::IDENTITY,
            Perm3::T12,
            Perm3::T13,
            Perm3::T23,
            Perm3::C123,
            Perm3::C132,
        ]
    }

    pub fn images(self) -> [u8; 3] {
        self.0
    }

    pub fn apply(self, x: u8) -> u8 {
        self.0[(x - 1) as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3([
            self.apply(other.apply(1)),
            self.apply(other.apply(2)),
            self.apply(other.apply(3)),
        ])
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0u8; 3];
        for x in 1..=3u8 {
            inv[(self.apply(x) - 1) as usize] = x;
        }
        Perm3(inv)
    }

    pub fn fixed_points(self) -> usize {
        (1..=3u8).filter(|&x| self.apply(x) == x).count()
    }

    pub fn conjugacy_class(self) -> ConjugacyClass {
        match self.fixed_points() {
            3 => ConjugacyClass::Identity,
            1 => ConjugacyClass::Transposition,
            _ => ConjugacyClass::ThreeCycle,
        }
    }

    pub fn sign(self) -> i64 {
        match self.conjugacy_class() {
            ConjugacyClass::Transposition => -1,
            _ => 1,
        }
    }
}

impl fmt::Debug for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Perm3::IDENTITY => write!(f, "()"),
            Perm3::T12 => write!(f, "(12)"),
            Perm3::T13 => write!(f, "(13)"),
            Perm3::T23 => write!(f, "(23)"),
            Perm3::C123 => write!(f, "(123)"),
            _ => write!(f, "(132)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjugacyClass {
    Identity,
    Transposition,
    ThreeCycle,
}

/// An element of `F(3)` in the `e1..e12` basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector12(pub [Scalar; DIM]);

impl Vector12 {
    pub fn zero() -> Self {
        Vector12(core::array::from_fn(|_| Scalar::zero()))
    }

    /// The `k`-th basis vector, zero-indexed (`unit(0)` is `e1`).
    pub fn unit(k: usize) -> Self {
        let mut v = Self::zero();
        v.0[k] = Scalar::one();
        v
    }

    pub fn from_i64(c: [i64; DIM]) -> Self {
        Vector12(c.map(Scalar::from_int))
    }

    pub fn from_slice(s: &[Scalar]) -> Option<Self> {
        if s.len() != DIM {
            return None;
        }
        Some(Vector12(core::array::from_fn(|i| s[i].clone())))
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector12) -> Vector12 {
        Vector12(core::array::from_fn(|i| &self.0[i] + &other.0[i]))
    }

    pub fn scale(&self, k: &Scalar) -> Vector12 {
        Vector12(core::array::from_fn(|i| &self.0[i] * k))
    }

    /// `ρ(g)·vᵀ`, returned as a row vector.
    pub fn act(&self, g: Perm3) -> Vector12 {
        let rho = action_matrix(g);
        let out = rho.apply(&self.0).expect("12 columns");
        Vector12::from_slice(&out).expect("length 12")
    }
}

impl Index<usize> for Vector12 {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Debug for Vector12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperadError {
    Shape(ShapeError),
    /// `a² = b²`: `g(a,b)` is not an isomorphism.
    SingularParams,
    /// Self-duality needs `dim U = dim U⊥ = 6`.
    WrongDimension(usize),
}

impl fmt::Display for OperadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperadError::Shape(e) => write!(f, "{e}"),
            OperadError::SingularParams => write!(f, "parameters satisfy a^2 = b^2"),
            OperadError::WrongDimension(d) => {
                write!(f, "relation space has dimension {d}, expected 6")
            }
        }
    }
}

impl core::error::Error for OperadError {}

impl From<ShapeError> for OperadError {
    fn from(e: ShapeError) -> Self {
        OperadError::Shape(e)
    }
}

/// A subspace of `F(3)` (or, for Koszul complements, of `F(3)∨` in the
/// `f`-basis). Always held as its canonical basis: the nonzero rows of the
/// reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RelationSpace {
    basis: Matrix,
}

impl RelationSpace {
    pub fn from_matrix(m: &Matrix) -> Result<Self, OperadError> {
        if m.cols() != DIM {
            return Err(ShapeError::RowLength {
                expected: DIM,
                found: m.cols(),
            }
            .into());
        }
        Ok(RelationSpace {
            basis: m.row_basis(),
        })
    }

    pub fn from_vectors(vs: &[Vector12]) -> Self {
        let rows = vs.iter().map(|v| v.0.to_vec()).collect();
        let m = Matrix::from_rows(DIM, rows).expect("rows of length 12");
        RelationSpace {
            basis: m.row_basis(),
        }
    }

    pub fn zero() -> Self {
        RelationSpace {
            basis: Matrix::zeros(0, DIM),
        }
    }

    /// All of `F(3)`.
    pub fn full() -> Self {
        RelationSpace {
            basis: Matrix::identity(DIM),
        }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn vectors(&self) -> Vec<Vector12> {
        self.basis
            .row_iter()
            .map(|r| Vector12::from_slice(r).expect("12 columns"))
            .collect()
    }

    pub fn contains(&self, v: &Vector12) -> bool {
        let row = Matrix::from_rows(DIM, alloc::vec![v.0.to_vec()]).expect("12 columns");
        row.rowspace_contained_in(&self.basis)
            .expect("matching widths")
    }

    pub fn contains_space(&self, other: &RelationSpace) -> bool {
        other
            .basis
            .rowspace_contained_in(&self.basis)
            .expect("matching widths")
    }

    /// Image under `ρ(g)`: rows `u ↦ u ρ(g)ᵀ`.
    pub fn act(&self, g: Perm3) -> RelationSpace {
        let moved = &self.basis * &action_matrix(g).transpose();
        RelationSpace {
            basis: moved.row_basis(),
        }
    }

    /// Smallest S3-invariant subspace containing `self`.
    pub fn s3_closure(&self) -> RelationSpace {
        let mut current = self.clone();
        loop {
            let mut stacked = current.basis.clone();
            for g in Perm3::GENERATORS {
                let moved = &current.basis * &action_matrix(g).transpose();
                stacked = stacked.vstack(&moved).expect("12 columns");
            }
            let next = RelationSpace {
                basis: stacked.row_basis(),
            };
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }
}

/// Parameters of the generator map `g(a,b): μ ↦ aν + bν'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualityParams {
    pub a: Scalar,
    pub b: Scalar,
}

impl DualityParams {
    pub fn new(a: Scalar, b: Scalar) -> Self {
        DualityParams { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        DualityParams::new(Scalar::from_int(a), Scalar::from_int(b))
    }

    /// `a² ≠ b²`, the condition for `g(a,b)` to be an isomorphism.
    pub fn is_invertible(&self) -> bool {
        self.a.square() != self.b.square()
    }
}

const SIGMA_DIAG: [i64; DIM] = [1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1];

/// The pairing matrix `Σ_ij = ⟨f_i, e_j⟩`.
pub fn sigma() -> Matrix {
    Matrix::diagonal(&SIGMA_DIAG.map(Scalar::from_int))
}

/// The 4x4 block of `Γ(a,b)`: `g(a,b) ⊗ g(a,b)` on the inner factor.
pub fn gamma_block(p: &DualityParams) -> Matrix {
    let a2 = p.a.square();
    let b2 = p.b.square();
    let ab = &p.a * &p.b;
    let rows = [
        [&a2, &ab, &ab, &b2],
        [&ab, &a2, &b2, &ab],
        [&ab, &b2, &a2, &ab],
        [&b2, &ab, &ab, &a2],
    ];
    let data = rows.iter().flatten().map(|&x| x.clone()).collect();
    Matrix::from_vec(4, 4, data).expect("4x4")
}

/// `Γ(a,b) = diag(A, A, A)`, the matrix of `id ⊗ (g(a,b) ⊗ g(a,b))`.
pub fn gamma(p: &DualityParams) -> Matrix {
    let block = gamma_block(p);
    let mut m = Matrix::zeros(DIM, DIM);
    for k in 0..3 {
        for i in 0..4 {
            for j in 0..4 {
                m[(4 * k + i, 4 * k + j)] = block[(i, j)].clone();
            }
        }
    }
    m
}

const COSET_REPS: [Perm3; 3] = [Perm3::IDENTITY, Perm3::T13, Perm3::T23];

// id ⊗ (12) on the inner basis (μ⊗μ, μ⊗μ', μ'⊗μ, μ'⊗μ').
const INNER_SWAP: [usize; 4] = [1, 0, 3, 2];

/// Writes `h = r_k ∘ s` with `s ∈ {1, (12)}`; returns `(k, s == (12))`.
fn coset_factor(h: Perm3) -> (usize, bool) {
    for (k, r) in COSET_REPS.iter().enumerate() {
        let s = r.inverse().compose(h);
        if s == Perm3::IDENTITY {
            return (k, false);
        }
        if s == Perm3::T12 {
            return (k, true);
        }
    }
    unreachable!("coset representatives cover S3")
}

/// `ρ(g)`, acting on column coordinate vectors: `ρ(g) e_j = e_{π(j)}`.
pub fn action_matrix(g: Perm3) -> Matrix {
    let mut m = Matrix::zeros(DIM, DIM);
    for (k, r) in COSET_REPS.iter().enumerate() {
        let (k2, swapped) = coset_factor(g.compose(*r));
        for i in 0..4 {
            let i2 = if swapped { INNER_SWAP[i] } else { i };
            m[(4 * k2 + i2, 4 * k + i)] = Scalar::one();
        }
    }
    m
}

/// `⟨u, v⟩_{a,b} = u Γ(a,b) Σ vᵀ`.
pub fn pairing(u: &Vector12, v: &Vector12, p: &DualityParams) -> Scalar {
    pairing_with_sigma(u, v, p, &sigma())
}

pub fn pairing_with_sigma(u: &Vector12, v: &Vector12, p: &DualityParams, sigma: &Matrix) -> Scalar {
    let left = gamma(p).left_apply(&u.0).expect("12 columns");
    let left = sigma.left_apply(&left).expect("12 columns");
    left.iter().zip(v.0.iter()).map(|(x, y)| x * y).sum()
}

/// `U⊥ = {c : c Σ Uᵀ = 0}`, in `f`-basis coordinates.
pub fn koszul_complement(u: &RelationSpace) -> RelationSpace {
    koszul_complement_with_sigma(u, &sigma())
}

pub fn koszul_complement_with_sigma(u: &RelationSpace, sigma: &Matrix) -> RelationSpace {
    // c Σ Uᵀ = 0  <=>  (U Σᵀ) cᵀ = 0
    let constraints = u.basis() * &sigma.transpose();
    RelationSpace {
        basis: constraints.kernel().row_basis(),
    }
}

/// First transposition that moves `U` out of itself, if any.
pub fn invariance_violation(u: &RelationSpace) -> Option<Perm3> {
    Perm3::GENERATORS
        .into_iter()
        .find(|&g| !u.contains_space(&u.act(g)))
}

pub fn is_invariant(u: &RelationSpace) -> bool {
    invariance_violation(u).is_none()
}

/// `U Γ(a,b) Σ Uᵀ`.
pub fn gram_matrix(u: &RelationSpace, p: &DualityParams) -> Matrix {
    let left = &(u.basis() * &gamma(p)) * &sigma();
    &left * &u.basis().transpose()
}

fn check_duality_inputs(u: &RelationSpace, p: &DualityParams) -> Result<(), OperadError> {
    if !p.is_invertible() {
        return Err(OperadError::SingularParams);
    }
    if u.dim() != 6 {
        return Err(OperadError::WrongDimension(u.dim()));
    }
    Ok(())
}

/// Decides `Γ(a,b) U = U⊥` by comparing row spaces.
pub fn verify_duality(u: &RelationSpace, p: &DualityParams) -> Result<bool, OperadError> {
    check_duality_inputs(u, p)?;
    let image = u.basis() * &gamma(p);
    let complement = koszul_complement(u);
    Ok(image.rowspace_equal(complement.basis())?)
}

/// The same decision through `U Γ(a,b) Σ Uᵀ = 0`.
pub fn gram_condition(u: &RelationSpace, p: &DualityParams) -> Result<bool, OperadError> {
    check_duality_inputs(u, p)?;
    Ok(gram_matrix(u, p).is_zero())
}
