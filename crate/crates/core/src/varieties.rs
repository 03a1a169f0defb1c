//! Multilinear degree-3 identities in one binary operation, encoded as
//! relation spaces.
//!
//! Monomial dictionary (`σ` acts on variables by `x_i ↦ x_σ(i)`):
//!
//! | e1 `(x1x2)x3` | e2 `(x2x1)x3` | e3 `x3(x1x2)` | e4 `x3(x2x1)` |
//! | e5 `(x3x2)x1` | e6 `(x2x3)x1` | e7 `x1(x3x2)` | e8 `x1(x2x3)` |
//! | e9 `(x1x3)x2` | e10 `(x3x1)x2` | e11 `x2(x1x3)` | e12 `x2(x3x1)` |
//!
//! This is the first dictionary consistent with the basis construction
//! (`e1` the left comb, `(12)` twisting the inner product, `e5`, `e9` the
//! images of `e1` under `(13)`, `(23)`). It reproduces the Plücker and
//! Segre data of the Novikov and associative presets without adjustment.
//!
//! The Novikov preset uses right-symmetry plus left commutativity. The
//! mirror convention (left-symmetric, right commutative) lands on a
//! different point of `G(2,4)`, so the calibration selects this one.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::classify::{PluckerPoint, ReprTag, SegrePoint, SelfDualClass};
use crate::exactmath::Scalar;
use crate::freeoperad::{DualityParams, Perm3, RelationSpace, Vector12};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// `(x_i x_j) x_k`
    Left,
    /// `x_i (x_j x_k)`
    Right,
}

/// A multilinear monomial. `vars` lists the variables left to right, so
/// `vars.images() = [i, j, k]` reads `(x_i x_j) x_k` or `x_i (x_j x_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial3 {
    pub shape: Shape,
    pub vars: Perm3,
}

const DICTIONARY: [(Shape, [u8; 3]); 12] = [
    (Shape::Left, [1, 2, 3]),
    (Shape::Left, [2, 1, 3]),
    (Shape::Right, [3, 1, 2]),
    (Shape::Right, [3, 2, 1]),
    (Shape::Left, [3, 2, 1]),
    (Shape::Left, [2, 3, 1]),
    (Shape::Right, [1, 3, 2]),
    (Shape::Right, [1, 2, 3]),
    (Shape::Left, [1, 3, 2]),
    (Shape::Left, [3, 1, 2]),
    (Shape::Right, [2, 1, 3]),
    (Shape::Right, [2, 3, 1]),
];

impl Monomial3 {
    pub fn new(shape: Shape, vars: [u8; 3]) -> Option<Self> {
        Some(Monomial3 {
            shape,
            vars: Perm3::new(vars)?,
        })
    }

    /// Index `0..12` of the basis vector this monomial maps to.
    pub fn basis_index(self) -> usize {
        let images = self.vars.images();
        DICTIONARY
            .iter()
            .position(|&(s, v)| s == self.shape && v == images)
            .expect("the dictionary covers all 12 monomials")
    }

    pub fn from_basis_index(k: usize) -> Option<Self> {
        let (shape, vars) = *DICTIONARY.get(k)?;
        Monomial3::new(shape, vars)
    }

    pub fn encode(self) -> Vector12 {
        Vector12::unit(self.basis_index())
    }

    /// All twelve monomials in basis order.
    pub fn all() -> Vec<Monomial3> {
        (0..12).filter_map(Monomial3::from_basis_index).collect()
    }
}

impl fmt::Display for Monomial3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.vars.images();
        match self.shape {
            Shape::Left => write!(f, "(x{i} x{j})x{k}"),
            Shape::Right => write!(f, "x{i}(x{j} x{k})"),
        }
    }
}

/// A linear combination of monomials, read as `Σ c·m = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySpec {
    pub terms: Vec<(Scalar, Monomial3)>,
}

impl IdentitySpec {
    pub fn encode(&self) -> Vector12 {
        let mut v = Vector12::zero();
        for (c, m) in &self.terms {
            v = v.add(&m.encode().scale(c));
        }
        v
    }
}

impl fmt::Display for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (idx, neg) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if !abs.is_one() {
                write!(f, "({abs})")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseIdentityError {
    /// Byte offset in the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseIdentityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseIdentityError {}

impl FromStr for IdentitySpec {
    type Err = ParseIdentityError;

    /// Terms such as `+(1/2)(x1 x2)x3`, `-x1(x2 x3)`, `1/3 x2(x3 x1)`.
    /// Whitespace is ignored. A trailing `= 0` is accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<(usize, u8)> = s
            .bytes()
            .enumerate()
            .filter(|(_, c)| !c.is_ascii_whitespace())
            .collect();
        let mut p = IdParser {
            chars: &chars,
            pos: 0,
            end: s.len(),
        };
        let terms = p.identity()?;
        Ok(IdentitySpec { terms })
    }
}

struct IdParser<'a> {
    chars: &'a [(usize, u8)],
    pos: usize,
    end: usize,
}

impl IdParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn peek_at(&self, k: usize) -> Option<u8> {
        self.chars.get(self.pos + k).map(|c| c.1)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |c| c.0)
    }

    fn err(&self, message: &str) -> ParseIdentityError {
        ParseIdentityError {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseIdentityError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn identity(&mut self) -> Result<Vec<(Scalar, Monomial3)>, ParseIdentityError> {
        let mut terms = Vec::new();
        loop {
            match self.peek() {
                None => break,
                Some(b'=') => {
                    self.pos += 1;
                    if self.peek() != Some(b'0') || self.peek_at(1).is_some() {
                        return Err(self.err("only '= 0' may follow the terms"));
                    }
                    self.pos += 1;
                    break;
                }
                _ => {}
            }
            let first = terms.is_empty();
            terms.push(self.term(first)?);
        }
        if terms.is_empty() {
            return Err(self.err("empty identity"));
        }
        Ok(terms)
    }

    fn term(&mut self, first: bool) -> Result<(Scalar, Monomial3), ParseIdentityError> {
        let mut coeff = Scalar::one();
        match self.peek() {
            Some(b'+') => self.pos += 1,
            Some(b'-') => {
                self.pos += 1;
                coeff = -coeff;
            }
            _ if !first => return Err(self.err("expected '+' or '-' between terms")),
            _ => {}
        }
        match self.peek() {
            Some(b'(') if matches!(self.peek_at(1), Some(c) if c.is_ascii_digit() || c == b'-') => {
                self.pos += 1;
                coeff = coeff * self.scalar()?;
                self.expect(b')')?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
            }
            Some(c) if c.is_ascii_digit() => {
                coeff = coeff * self.scalar()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
            }
            _ => {}
        }
        Ok((coeff, self.monomial()?))
    }

    fn scalar(&mut self) -> Result<Scalar, ParseIdentityError> {
        let start = self.pos;
        let at = self.offset();
        let mut text = String::new();
        if self.peek() == Some(b'-') {
            text.push('-');
            self.pos += 1;
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() || c == b'/' {
                text.push(c as char);
                self.pos += 1;
            } else {
                break;
            }
        }
        text.parse::<Scalar>().map_err(|e| {
            self.pos = start;
            ParseIdentityError {
                position: at,
                message: format!("bad coefficient: {}", e.message),
            }
        })
    }

    fn var(&mut self) -> Result<u8, ParseIdentityError> {
        if self.peek() != Some(b'x') {
            return Err(self.err("expected a variable x1, x2 or x3"));
        }
        self.pos += 1;
        match self.peek() {
            Some(c @ b'1'..=b'3') => {
                self.pos += 1;
                Ok(c - b'0')
            }
            _ => Err(self.err("variables are x1, x2, x3")),
        }
    }

    fn monomial(&mut self) -> Result<Monomial3, ParseIdentityError> {
        let at = self.offset();
        let (shape, vars) = if self.peek() == Some(b'(') {
            self.pos += 1;
            let i = self.var()?;
            let j = self.var()?;
            self.expect(b')')?;
            (Shape::Left, [i, j, self.var()?])
        } else {
            let i = self.var()?;
            self.expect(b'(')?;
            let j = self.var()?;
            let k = self.var()?;
            self.expect(b')')?;
            (Shape::Right, [i, j, k])
        };
        Monomial3::new(shape, vars).ok_or(ParseIdentityError {
            position: at,
            message: "each of x1, x2, x3 must appear exactly once".to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EncodeError {
    NoIdentities,
    /// Every identity has all coefficients cancelling.
    AllZero,
}

impl fmt::Display for EncodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EncodeError::NoIdentities => f.write_str("no identities given"),
            EncodeError::AllZero => f.write_str("all identities encode to zero"),
        }
    }
}

impl core::error::Error for EncodeError {}

/// The S3-submodule generated by the encoded identities.
pub fn encode(ids: &[IdentitySpec]) -> Result<RelationSpace, EncodeError> {
    if ids.is_empty() {
        return Err(EncodeError::NoIdentities);
    }
    let vs: Vec<Vector12> = ids.iter().map(IdentitySpec::encode).collect();
    if vs.iter().all(Vector12::is_zero) {
        return Err(EncodeError::AllZero);
    }
    Ok(RelationSpace::from_vectors(&vs).s3_closure())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresetName {
    Novikov,
    Associative,
    Poisson,
}

impl PresetName {
    pub const ALL: [PresetName; 3] = [
        PresetName::Novikov,
        PresetName::Associative,
        PresetName::Poisson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresetName::Novikov => "novikov",
            PresetName::Associative => "associative",
            PresetName::Poisson => "poisson",
        }
    }

    /// Defining identities in the text syntax.
    pub fn identities_text(self) -> &'static [&'static str] {
        match self {
            PresetName::Novikov => &[
                "(x1 x2)x3 - x1(x2 x3) - (x1 x3)x2 + x1(x3 x2)",
                "x1(x2 x3) - x2(x1 x3)",
            ],
            PresetName::Associative => &["(x1 x2)x3 - x1(x2 x3)"],
            // Poisson algebras through the single product x·y + {x, y}.
            PresetName::Poisson => &[
                "(x1 x2)x3 - x1(x2 x3) + (1/3)(x2 x1)x3 - (1/3)(x2 x3)x1 - (1/3)(x1 x3)x2 + (1/3)(x3 x1)x2",
            ],
        }
    }

    pub fn identities(self) -> Vec<IdentitySpec> {
        self.identities_text()
            .iter()
            .map(|s| s.parse().expect("preset identities parse"))
            .collect()
    }

    pub fn space(self) -> RelationSpace {
        encode(&self.identities()).expect("preset identities are nonzero")
    }

    pub fn expected(self) -> Expected {
        use SelfDualClass::*;
        let z = SegrePoint::from_i64([1, -1, -1, 1]);
        let (repr, classes, p, segre, w) = match self {
            PresetName::Novikov => (
                ReprTag::R4,
                alloc::vec![Y2],
                [-1, 0, 1, 2, 3, 2],
                None,
                (0, 1),
            ),
            PresetName::Associative => (
                ReprTag::R5,
                alloc::vec![X3, X4],
                [1, 1, 1, 0, 1, 1],
                z,
                (1, 0),
            ),
            PresetName::Poisson => (
                ReprTag::R5,
                alloc::vec![X3, X4],
                [0, 1, 1, 1, 1, 1],
                z,
                (1, 0),
            ),
        };
        Expected {
            repr,
            classes,
            plucker: PluckerPoint::from_i64(p).expect("valid Plücker point"),
            segre,
            witness: DualityParams::from_i64(w.0, w.1),
        }
    }
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownPreset(pub String);

impl fmt::Display for UnknownPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown preset '{}' (known: novikov, associative, poisson)",
            self.0
        )
    }
}

impl core::error::Error for UnknownPreset {}

impl FromStr for PresetName {
    type Err = UnknownPreset;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PresetName::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownPreset(s.to_string()))
    }
}

/// Published classification data of a preset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub repr: ReprTag,
    pub classes: Vec<SelfDualClass>,
    pub plucker: PluckerPoint,
    pub segre: Option<SegrePoint>,
    pub witness: DualityParams,
}

/// `(space, expected)` for a preset name.
pub fn preset(name: &str) -> Result<(RelationSpace, Expected), UnknownPreset> {
    let p: PresetName = name.parse()?;
    Ok((p.space(), p.expected()))
}
