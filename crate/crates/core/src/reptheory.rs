//! Isotypic decomposition of S3-submodules of `F(3)` and the explicit
//! embeddings of the irreducibles `M+`, `M-`, `M2`.
//!
//! `F(3) ≅ 2M+ ⊕ 2M- ⊕ 4M2`. Copies of `M±` are spanned by `u±(x1, x2)`,
//! copies of `M2` by the pairs `u2¹(x̄), u2²(x̄)` with `x̄ ∈ k⁴`; the maps
//! `x̄ ↦ u2ⁱ(x̄)` are the 4x12 matrices `T_i`.

use alloc::vec::Vec;
use core::fmt;

use crate::exactmath::{Matrix, Scalar};
use crate::freeoperad::{
    action_matrix, gamma, is_invariant, sigma, ConjugacyClass, DualityParams, Perm3, RelationSpace,
    Vector12, DIM,
};

/// The irreducible representations of S3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Irrep {
    /// `M+`
    Trivial,
    /// `M-`
    Sign,
    /// `M2`, the standard representation of partition (2,1)
    Standard,
}

impl Irrep {
    pub const ALL: [Irrep; 3] = [Irrep::Trivial, Irrep::Sign, Irrep::Standard];

    pub fn dim(self) -> i64 {
        match self {
            Irrep::Standard => 2,
            _ => 1,
        }
    }

    /// Character value on a conjugacy class.
    pub fn character(self, class: ConjugacyClass) -> i64 {
        use ConjugacyClass::*;
        match (self, class) {
            (Irrep::Trivial, _) => 1,
            (Irrep::Sign, Transposition) => -1,
            (Irrep::Sign, _) => 1,
            (Irrep::Standard, Identity) => 2,
            (Irrep::Standard, Transposition) => 0,
            (Irrep::Standard, ThreeCycle) => -1,
        }
    }
}

/// Which of the two vectors spanning a copy of `M2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum M2Slot {
    First,
    Second,
}

pub fn u_plus(x1: &Scalar, x2: &Scalar) -> Vector12 {
    u_signed(x1, x2, false)
}

pub fn u_minus(x1: &Scalar, x2: &Scalar) -> Vector12 {
    u_signed(x1, x2, true)
}

fn u_signed(x1: &Scalar, x2: &Scalar, minus: bool) -> Vector12 {
    let (sx1, sx2) = if minus {
        (-x1, -x2)
    } else {
        (x1.clone(), x2.clone())
    };
    Vector12([
        x1.clone(),
        sx1.clone(),
        x2.clone(),
        sx2.clone(),
        sx1.clone(),
        x1.clone(),
        sx2.clone(),
        x2.clone(),
        sx1,
        x1.clone(),
        sx2,
        x2.clone(),
    ])
}

pub fn u2(slot: M2Slot, x: &[Scalar; 4]) -> Vector12 {
    let [x1, x2, x3, x4] = x;
    match slot {
        M2Slot::First => Vector12([
            x1.clone(),
            -x1,
            x2.clone(),
            -x2,
            x3.clone(),
            x3 - x1,
            x4.clone(),
            x4 - x2,
            x1 - x3,
            -x3,
            x2 - x4,
            -x4,
        ]),
        M2Slot::Second => Vector12([
            x1 - x3,
            -x3,
            x2 - x4,
            -x4,
            x3 - x1,
            x3.clone(),
            x4 - x2,
            x4.clone(),
            x1.clone(),
            -x1,
            x2.clone(),
            -x2,
        ]),
    }
}

/// `T_i` with `x̄ T_i = u2ⁱ(x̄)`.
pub fn t_matrix(slot: M2Slot) -> Matrix {
    let rows = (0..4)
        .map(|k| {
            let x: [Scalar; 4] = core::array::from_fn(|j| {
                if j == k {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            });
            u2(slot, &x).0.to_vec()
        })
        .collect();
    Matrix::from_rows(DIM, rows).expect("rows of length 12")
}

/// `A_ij(a,b) = T_i Γ(a,b) Σ T_jᵀ`, the Gram block between the two `M2` slots.
pub fn a_matrix(i: M2Slot, j: M2Slot, p: &DualityParams) -> Matrix {
    let left = &(&t_matrix(i) * &gamma(p)) * &sigma();
    &left * &t_matrix(j).transpose()
}

/// Central idempotent `π_λ = (dim λ / 6) Σ_g χ_λ(g⁻¹) ρ(g)`.
pub fn projector(irrep: Irrep) -> Matrix {
    let mut sum = Matrix::zeros(DIM, DIM);
    for g in Perm3::all() {
        let chi = irrep.character(g.inverse().conjugacy_class());
        if chi == 0 {
            continue;
        }
        sum = sum
            .try_add(&action_matrix(g).scale(&Scalar::from_int(chi)))
            .expect("12x12");
    }
    sum.scale(&Scalar::ratio(irrep.dim(), 6).expect("nonzero"))
}

/// Character of the representation on `U`, indexed by
/// (identity, transpositions, 3-cycles).
pub fn character(u: &RelationSpace) -> [Scalar; 3] {
    let pivots = u.basis().rref().pivots;
    let trace_of = |g: Perm3| -> Scalar {
        // Coordinates in the rref basis are the entries at the pivot columns.
        let moved = u.basis() * &action_matrix(g).transpose();
        pivots
            .iter()
            .enumerate()
            .map(|(r, &p)| moved[(r, p)].clone())
            .sum()
    };
    [
        trace_of(Perm3::IDENTITY),
        trace_of(Perm3::T12),
        trace_of(Perm3::C123),
    ]
}

/// Multiplicities `(m+, m-, m2)` from the character inner product.
pub fn multiplicities_from_character(chi: &[Scalar; 3]) -> [Scalar; 3] {
    let sizes = [1, 3, 2];
    let classes = [
        ConjugacyClass::Identity,
        ConjugacyClass::Transposition,
        ConjugacyClass::ThreeCycle,
    ];
    Irrep::ALL.map(|irrep| {
        let total: Scalar = (0..3)
            .map(|c| &chi[c] * &Scalar::from_int(sizes[c] * irrep.character(classes[c])))
            .sum();
        total * Scalar::ratio(1, 6).expect("nonzero")
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicDecomposition {
    pub m_plus: usize,
    pub m_minus: usize,
    pub m_two: usize,
    pub comp_plus: RelationSpace,
    pub comp_minus: RelationSpace,
    pub comp_two: RelationSpace,
}

impl IsotypicDecomposition {
    pub fn multiplicities(&self) -> (usize, usize, usize) {
        (self.m_plus, self.m_minus, self.m_two)
    }
}

/// Row basis of `Û ⊆ k⁴`, the parameters of the `M2` copies inside `U`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterPlane {
    basis: Matrix,
}

impl ParameterPlane {
    pub fn new(m: &Matrix) -> Option<Self> {
        if m.cols() != 4 || m.rank() != m.rows() || m.rows() == 0 {
            return None;
        }
        Some(ParameterPlane { basis: m.clone() })
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The `M2`-part of a relation space: `span{u2ⁱ(x̄) : x̄ ∈ Û, i = 1, 2}`.
    pub fn m2_span(&self) -> Vec<Vector12> {
        let mut out = Vec::new();
        for row in self.basis.row_iter() {
            let x: [Scalar; 4] = core::array::from_fn(|i| row[i].clone());
            out.push(u2(M2Slot::First, &x));
            out.push(u2(M2Slot::Second, &x));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    NotInvariant,
    /// The operation needs different multiplicities than the input has.
    Multiplicities {
        m_plus: usize,
        m_minus: usize,
        m_two: usize,
    },
    /// The isotypic component does not have the expected shape.
    Inconsistent(&'static str),
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::NotInvariant => write!(f, "subspace is not S3-invariant"),
            RepError::Multiplicities {
                m_plus,
                m_minus,
                m_two,
            } => write!(
                f,
                "unsupported multiplicities (m+, m-, m2) = ({m_plus}, {m_minus}, {m_two})"
            ),
            RepError::Inconsistent(what) => write!(f, "inconsistent isotypic component: {what}"),
        }
    }
}

impl core::error::Error for RepError {}

pub fn decompose(u: &RelationSpace) -> Result<IsotypicDecomposition, RepError> {
    if !is_invariant(u) {
        return Err(RepError::NotInvariant);
    }
    let component = |irrep: Irrep| -> RelationSpace {
        let image = u.basis() * &projector(irrep).transpose();
        RelationSpace::from_matrix(&image).expect("12 columns")
    };
    let comp_plus = component(Irrep::Trivial);
    let comp_minus = component(Irrep::Sign);
    let comp_two = component(Irrep::Standard);
    if comp_two.dim() % 2 != 0 {
        return Err(RepError::Inconsistent("odd-dimensional M2 component"));
    }
    Ok(IsotypicDecomposition {
        m_plus: comp_plus.dim(),
        m_minus: comp_minus.dim(),
        m_two: comp_two.dim() / 2,
        comp_plus,
        comp_minus,
        comp_two,
    })
}

/// Recovers `Û = {x̄ : x̄ T₁ ∈ comp_two}`.
pub fn extract_parameter_plane(d: &IsotypicDecomposition) -> Result<ParameterPlane, RepError> {
    if !(2..=3).contains(&d.m_two) {
        return Err(RepError::Multiplicities {
            m_plus: d.m_plus,
            m_minus: d.m_minus,
            m_two: d.m_two,
        });
    }
    let plane = Matrix::preimage_rowspace(&t_matrix(M2Slot::First), d.comp_two.basis())
        .expect("both have 12 columns");
    if plane.rows() != d.m_two {
        return Err(RepError::Inconsistent(
            "parameter space rank differs from m2",
        ));
    }
    let plane = ParameterPlane { basis: plane };
    if RelationSpace::from_vectors(&plane.m2_span()) != d.comp_two {
        return Err(RepError::Inconsistent(
            "parameters do not regenerate the M2 component",
        ));
    }
    Ok(plane)
}

fn normalize_pair(x1: Scalar, x2: Scalar) -> [Scalar; 2] {
    let lead = if x1.is_zero() { x2.clone() } else { x1.clone() };
    let inv = lead.inv().expect("nonzero line");
    [x1 * &inv, x2 * &inv]
}

/// Lines `(s, t)` with `comp_plus = span{u+(s)}` and `comp_minus = span{u-(t)}`,
/// each scaled so the first nonzero coordinate is 1.
pub fn extract_segre_lines(
    d: &IsotypicDecomposition,
) -> Result<([Scalar; 2], [Scalar; 2]), RepError> {
    if d.m_plus != 1 || d.m_minus != 1 {
        return Err(RepError::Multiplicities {
            m_plus: d.m_plus,
            m_minus: d.m_minus,
            m_two: d.m_two,
        });
    }
    let read = |comp: &RelationSpace, minus: bool| -> Result<[Scalar; 2], RepError> {
        let v = comp.basis().row(0);
        let (x1, x2) = (v[0].clone(), v[2].clone());
        let rebuilt = u_signed(&x1, &x2, minus);
        if rebuilt.0[..] != *v {
            return Err(RepError::Inconsistent("component is not spanned by u+/u-"));
        }
        Ok(normalize_pair(x1, x2))
    };
    Ok((read(&d.comp_plus, false)?, read(&d.comp_minus, true)?))
}
