//! The self-duality decision for a relation space `U ⊆ F(3)`.
//!
//! `classify_selfdual` decomposes `U`, reads off the parameter plane (and
//! the `u±` lines for type R5), tests the class equations in Plücker and
//! Segre coordinates, and confirms a candidate witness `(a, b)` with the
//! row-space check `Γ(a,b)U = U⊥`.
//!
//! Segre coordinates are the products `z_kl = s_k·t_l` of the `u+` line
//! `s` and the `u−` line `t`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exactmath::{Matrix, Scalar};
use crate::freeoperad::{
    invariance_violation, sigma, verify_duality, DualityParams, OperadError, RelationSpace,
};
use crate::polyring::identities::{nondegeneracy, sym_gamma, v, A, B};
use crate::polyring::{ideal_is_trivial, PolyMatrix};
use crate::reptheory::{
    a_matrix, decompose, extract_parameter_plane, extract_segre_lines, u_minus, u_plus, M2Slot,
    ParameterPlane, RepError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    /// The parameter plane does not have rank 2.
    PlaneRank(usize),
    /// The `u±` line data give the zero Segre point.
    DegenerateSegre,
    EmptyClasses,
    Operad(OperadError),
    Rep(RepError),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::PlaneRank(r) => write!(f, "parameter plane has rank {r}, expected 2"),
            ClassifyError::DegenerateSegre => f.write_str("degenerate Segre point"),
            ClassifyError::EmptyClasses => f.write_str("no class to build a witness from"),
            ClassifyError::Operad(e) => write!(f, "{e}"),
            ClassifyError::Rep(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ClassifyError {}

impl From<OperadError> for ClassifyError {
    fn from(e: OperadError) -> Self {
        ClassifyError::Operad(e)
    }
}

impl From<RepError> for ClassifyError {
    fn from(e: RepError) -> Self {
        ClassifyError::Rep(e)
    }
}

/// Scales so the first nonzero entry is 1; `None` for the zero tuple.
fn canonical<const N: usize>(c: [Scalar; N]) -> Option<[Scalar; N]> {
    let inv = c.iter().find(|x| !x.is_zero())?.inv()?;
    Some(c.map(|x| x * &inv))
}

/// A point of `G(2,4)` as `(p12, p13, p14, p23, p24, p34)`, first nonzero coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PluckerPoint([Scalar; 6]);

impl PluckerPoint {
    /// Canonicalizes; `None` if all zero or off the Plücker quadric.
    pub fn new(coords: [Scalar; 6]) -> Option<Self> {
        let c = canonical(coords)?;
        let [p12, p13, p14, p23, p24, p34] = &c;
        let rel = &(&(p12 * p34) - &(p13 * p24)) + &(p14 * p23);
        rel.is_zero().then_some(PluckerPoint(c))
    }

    pub fn from_i64(c: [i64; 6]) -> Option<Self> {
        PluckerPoint::new(c.map(Scalar::from_int))
    }

    pub fn coords(&self) -> &[Scalar; 6] {
        &self.0
    }

    pub fn p12(&self) -> &Scalar {
        &self.0[0]
    }
    pub fn p13(&self) -> &Scalar {
        &self.0[1]
    }
    pub fn p14(&self) -> &Scalar {
        &self.0[2]
    }
    pub fn p23(&self) -> &Scalar {
        &self.0[3]
    }
    pub fn p24(&self) -> &Scalar {
        &self.0[4]
    }
    pub fn p34(&self) -> &Scalar {
        &self.0[5]
    }
}

/// A point of `S(1,1) ⊂ P³` as `(z11, z12, z21, z22)`, first nonzero coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegrePoint([Scalar; 4]);

impl SegrePoint {
    /// Canonicalizes; `None` if all zero or off the quadric `z11z22 = z12z21`.
    pub fn new(coords: [Scalar; 4]) -> Option<Self> {
        let c = canonical(coords)?;
        let [z11, z12, z21, z22] = &c;
        (z11 * z22 == z12 * z21).then_some(SegrePoint(c))
    }

    pub fn from_i64(c: [i64; 4]) -> Option<Self> {
        SegrePoint::new(c.map(Scalar::from_int))
    }

    pub fn coords(&self) -> &[Scalar; 4] {
        &self.0
    }

    pub fn z11(&self) -> &Scalar {
        &self.0[0]
    }
    pub fn z12(&self) -> &Scalar {
        &self.0[1]
    }
    pub fn z21(&self) -> &Scalar {
        &self.0[2]
    }
    pub fn z22(&self) -> &Scalar {
        &self.0[3]
    }

    fn off_quadric(&self) -> bool {
        let sq = |x: &Scalar| x.square();
        &sq(self.z11()) + &sq(self.z22()) != &sq(self.z12()) + &sq(self.z21())
    }
}

fn fmt_tuple(f: &mut fmt::Formatter<'_>, c: &[Scalar]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in c.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for PluckerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl fmt::Display for SegrePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

/// Plücker coordinates `p_ij = x_i y_j − x_j y_i` of a rank-2 plane.
pub fn plucker(plane: &ParameterPlane) -> Result<PluckerPoint, ClassifyError> {
    let m = plane.basis();
    if m.rows() != 2 {
        return Err(ClassifyError::PlaneRank(m.rank()));
    }
    let p = |i: usize, j: usize| &(&m[(0, i)] * &m[(1, j)]) - &(&m[(0, j)] * &m[(1, i)]);
    let c = [p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)];
    PluckerPoint::new(c).ok_or(ClassifyError::PlaneRank(1))
}

/// `z_kl = s_k·t_l`.
pub fn segre(s: &[Scalar; 2], t: &[Scalar; 2]) -> Result<SegrePoint, ClassifyError> {
    let c = [&s[0] * &t[0], &s[0] * &t[1], &s[1] * &t[0], &s[1] * &t[1]];
    SegrePoint::new(c).ok_or(ClassifyError::DegenerateSegre)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReprTag {
    R1,
    R2,
    R3,
    R4,
    R5,
    Other,
}

impl fmt::Display for ReprTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReprTag::R1 => "R1",
            ReprTag::R2 => "R2",
            ReprTag::R3 => "R3",
            ReprTag::R4 => "R4",
            ReprTag::R5 => "R5",
            ReprTag::Other => "other",
        };
        f.write_str(s)
    }
}

/// Representation type. R3 and R4 are read as `2M± ⊕ 2M2`, the only
/// reading compatible with `dim U = 6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReprType {
    pub tag: ReprTag,
    /// `(m+, m−, m2)`.
    pub multiplicities: (usize, usize, usize),
}

impl ReprType {
    pub fn from_multiplicities(m: (usize, usize, usize)) -> Self {
        let tag = match m {
            (2, 2, 1) => ReprTag::R1,
            (0, 0, 3) => ReprTag::R2,
            (2, 0, 2) => ReprTag::R3,
            (0, 2, 2) => ReprTag::R4,
            (1, 1, 2) => ReprTag::R5,
            _ => ReprTag::Other,
        };
        ReprType {
            tag,
            multiplicities: m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SelfDualClass {
    Y1,
    Y2,
    X1,
    X2,
    X3,
    X4,
}

impl SelfDualClass {
    pub const ALL: [SelfDualClass; 6] = [
        SelfDualClass::Y1,
        SelfDualClass::Y2,
        SelfDualClass::X1,
        SelfDualClass::X2,
        SelfDualClass::X3,
        SelfDualClass::X4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SelfDualClass::Y1 => "Y1",
            SelfDualClass::Y2 => "Y2",
            SelfDualClass::X1 => "X1",
            SelfDualClass::X2 => "X2",
            SelfDualClass::X3 => "X3",
            SelfDualClass::X4 => "X4",
        }
    }

    /// Lower is tried first when picking a witness.
    fn preference(self) -> u8 {
        match self {
            SelfDualClass::Y1 | SelfDualClass::X3 => 0,
            SelfDualClass::Y2 | SelfDualClass::X4 => 1,
            SelfDualClass::X1 | SelfDualClass::X2 => 2,
        }
    }
}

impl fmt::Display for SelfDualClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn y1(p: &PluckerPoint) -> bool {
    p.p13() == p.p24()
}

fn y2(p: &PluckerPoint) -> bool {
    *p.p14() == p.p12() + p.p23()
}

fn u1_plane(p: &PluckerPoint) -> bool {
    p.p12().is_zero() && p.p13() == p.p14() && p.p14() == p.p23() && p.p23() == p.p24()
}

fn u2_plane(p: &PluckerPoint) -> bool {
    let two = Scalar::from_int(2);
    let four = Scalar::from_int(4);
    p.p13() == p.p24()
        && (&(p.p14() + p.p23()) + &(&two * p.p13())).is_zero()
        && *p.p12() == &four * p.p34()
        && y2(p)
}

/// The classes whose defining equations `p` (and `z`) satisfy, sorted.
/// Without `z` only `Y1`, `Y2` are tested; with `z` only `X1`–`X4`.
pub fn membership(p: &PluckerPoint, z: Option<&SegrePoint>) -> Vec<SelfDualClass> {
    let mut out = Vec::new();
    match z {
        None => {
            if y1(p) {
                out.push(SelfDualClass::Y1);
            }
            if y2(p) {
                out.push(SelfDualClass::Y2);
            }
        }
        Some(z) => {
            if u1_plane(p) && z.off_quadric() {
                out.push(SelfDualClass::X1);
            }
            if u2_plane(p) && z.off_quadric() {
                out.push(SelfDualClass::X2);
            }
            if y1(p) && z.z11() == z.z22() {
                out.push(SelfDualClass::X3);
            }
            if y2(p) && z.z12() == z.z21() {
                out.push(SelfDualClass::X4);
            }
        }
    }
    out
}

fn witness_for(class: SelfDualClass, z: Option<&SegrePoint>) -> DualityParams {
    match class {
        SelfDualClass::Y1 | SelfDualClass::X3 => DualityParams::from_i64(1, 0),
        SelfDualClass::Y2 | SelfDualClass::X4 => DualityParams::from_i64(0, 1),
        SelfDualClass::X1 | SelfDualClass::X2 => match z {
            Some(z) => {
                let d1 = z.z11() - z.z22();
                let d2 = z.z12() - z.z21();
                if d1.is_zero() && d2.is_zero() {
                    DualityParams::from_i64(1, 0)
                } else {
                    DualityParams::new(d2, d1)
                }
            }
            None => DualityParams::from_i64(1, 0),
        },
    }
}

/// Candidate `(a, b)` for the most preferred class:
/// `Y1`/`X3` → `(1,0)`, `Y2`/`X4` → `(0,1)`, `X1`/`X2` → `(z12 − z21, z11 − z22)`
/// or `(1,0)` when both differences vanish.
pub fn witness(
    classes: &[SelfDualClass],
    z: Option<&SegrePoint>,
) -> Result<DualityParams, ClassifyError> {
    let best = classes
        .iter()
        .min_by_key(|c| (c.preference(), **c))
        .ok_or(ClassifyError::EmptyClasses)?;
    Ok(witness_for(*best, z))
}

/// Every distinct class-derived candidate, in preference order.
fn witness_candidates(classes: &[SelfDualClass], z: Option<&SegrePoint>) -> Vec<DualityParams> {
    let mut sorted = classes.to_vec();
    sorted.sort_by_key(|c| (c.preference(), *c));
    let mut out: Vec<DualityParams> = Vec::new();
    for c in sorted {
        let w = witness_for(c, z);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// `Û·A12(a,b)·Ûᵀ`.
pub fn sdu_residual(plane: &ParameterPlane, p: &DualityParams) -> Matrix {
    let u = plane.basis();
    let a12 = a_matrix(M2Slot::First, M2Slot::Second, p);
    &(u * &a12) * &u.transpose()
}

/// `span{u±(1,0), u±(0,1)} ⊕ span{u2ⁱ(x̄) : x̄ ∈ Û}`: type R4 when `minus`, R3 otherwise.
pub fn assemble_r34(minus: bool, plane: &ParameterPlane) -> RelationSpace {
    let (one, zero) = (Scalar::one(), Scalar::zero());
    let u = if minus { u_minus } else { u_plus };
    let mut vs = alloc::vec![u(&one, &zero), u(&zero, &one)];
    vs.extend(plane.m2_span());
    RelationSpace::from_vectors(&vs)
}

/// `span{u+(s), u−(t)} ⊕ span{u2ⁱ(x̄) : x̄ ∈ Û}`.
pub fn assemble_r5(s: &[Scalar; 2], t: &[Scalar; 2], plane: &ParameterPlane) -> RelationSpace {
    let mut vs = alloc::vec![u_plus(&s[0], &s[1]), u_minus(&t[0], &t[1])];
    vs.extend(plane.m2_span());
    RelationSpace::from_vectors(&vs)
}

/// Outcome of [`classify_selfdual`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub self_dual: bool,
    pub repr_type: Option<ReprType>,
    pub plane: Option<ParameterPlane>,
    /// `(s, t)`: `u+(s)` and `u−(t)` span the one-dimensional components.
    pub lines: Option<([Scalar; 2], [Scalar; 2])>,
    pub plucker: Option<PluckerPoint>,
    pub segre: Option<SegrePoint>,
    pub classes: Vec<SelfDualClass>,
    pub witness: Option<DualityParams>,
    pub verified: bool,
    pub reason: Option<String>,
}

impl Certificate {
    fn rejected(reason: String) -> Self {
        Certificate {
            self_dual: false,
            repr_type: None,
            plane: None,
            lines: None,
            plucker: None,
            segre: None,
            classes: Vec::new(),
            witness: None,
            verified: false,
            reason: Some(reason),
        }
    }
}

/// Decides whether `Γ(a,b)U = U⊥` for some `(a, b)` of the form the class
/// equations predict.
///
/// A positive answer always carries a witness that passed
/// [`verify_duality`]. If `U` satisfies some class equations but none of
/// the derived witnesses passes, the certificate lists the classes and is
/// negative with a reason saying so.
pub fn classify_selfdual(u: &RelationSpace) -> Result<Certificate, ClassifyError> {
    if u.dim() != 6 {
        return Ok(Certificate::rejected(format!(
            "dim U⊥ mismatch: dim U = {}, self-duality needs dim U = dim U⊥ = 6",
            u.dim()
        )));
    }
    if let Some(g) = invariance_violation(u) {
        return Ok(Certificate::rejected(format!(
            "not S3-invariant: fails under {g}"
        )));
    }
    let d = decompose(u)?;
    let repr = ReprType::from_multiplicities(d.multiplicities());
    let mut cert = Certificate::rejected(String::new());
    cert.repr_type = Some(repr);

    let z = match repr.tag {
        ReprTag::R1 => {
            cert.reason =
                Some("representation type R1: u+ and u- lines cannot be orthogonal".into());
            return Ok(cert);
        }
        ReprTag::R2 => {
            cert.reason =
                Some("representation type R2: the 3x4 parameter systems are inconsistent".into());
            return Ok(cert);
        }
        ReprTag::Other => {
            cert.reason = Some(format!(
                "representation type {:?} is not of type R1-R5",
                repr.multiplicities
            ));
            return Ok(cert);
        }
        ReprTag::R3 | ReprTag::R4 => None,
        ReprTag::R5 => {
            let (s, t) = extract_segre_lines(&d)?;
            let z = segre(&s, &t);
            cert.lines = Some((s, t));
            match z {
                Ok(z) => Some(z),
                Err(_) => {
                    cert.reason = Some("degenerate Segre point".into());
                    return Ok(cert);
                }
            }
        }
    };
    let plane = extract_parameter_plane(&d)?;
    let p = plucker(&plane)?;
    cert.plane = Some(plane);
    cert.classes = membership(&p, z.as_ref());
    cert.plucker = Some(p);
    cert.segre = z;

    if cert.classes.is_empty() {
        cert.reason = Some(match repr.tag {
            ReprTag::R5 => "q(U) lies in none of X1, X2, X3, X4".into(),
            _ => "p(U) lies in neither Y1 nor Y2".into(),
        });
        return Ok(cert);
    }
    for w in witness_candidates(&cert.classes, cert.segre.as_ref()) {
        if w.is_invertible() && verify_duality(u, &w)? {
            cert.self_dual = true;
            cert.verified = true;
            cert.witness = Some(w);
            cert.reason = None;
            return Ok(cert);
        }
    }
    let names: Vec<&str> = cert.classes.iter().map(|c| c.name()).collect();
    cert.reason = Some(format!(
        "class equations {{{}}} hold but no derived witness satisfies Γ(a,b)U = U⊥",
        names.join(", ")
    ));
    Ok(cert)
}

/// Whether some `(a, b)` with `a² ≠ b²` over the algebraic closure makes
/// `U Γ(a,b) Σ Uᵀ` vanish. Decided by a Gröbner basis of the Gram
/// entries together with `(a² − b²)c − 1`, independently of the class
/// equations.
pub fn admits_duality(u: &RelationSpace) -> Result<bool, ClassifyError> {
    if u.dim() != 6 {
        return Err(OperadError::WrongDimension(u.dim()).into());
    }
    let um = PolyMatrix::from_matrix(u.basis());
    let gram = um
        .mul(&sym_gamma(&v(A), &v(B)))
        .and_then(|m| m.mul(&PolyMatrix::from_matrix(&sigma())))
        .and_then(|m| m.mul(&um.transpose()))
        .expect("6x12 shapes");
    let mut gens: Vec<_> = gram
        .entries()
        .iter()
        .filter(|e| !e.is_zero())
        .cloned()
        .collect();
    gens.push(nondegeneracy());
    Ok(!ideal_is_trivial(&gens))
}
