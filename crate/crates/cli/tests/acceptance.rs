//! Acceptance suite: one line per criterion, then a summary.
//!
//! Runs without the libtest harness so the scorecard is always printed.
//! Every derived value is recomputed here from first principles (literal
//! matrices, hand-built symbolic expansions, independent samplers) and
//! compared with what the library reports.
//!
//! Some criteria are refuted by exact computation. They are run as stated
//! and expected to fail; each such failure must have exactly the shape
//! recorded in `KNOWN_UNATTAINABLE`, otherwise the run is an error.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use selfdual_core::classify::{
    assemble_r34, assemble_r5, classify_selfdual, Certificate, SelfDualClass,
};
use selfdual_core::freeoperad::{action_matrix, koszul_complement, sigma};
use selfdual_core::polyring::identities::{
    self, case1_listed_polynomials, elimination_order, r2_system, verify_identity, IdentityTag,
    PlaneCase,
};
use selfdual_core::polyring::{
    divide_exact, groebner, ideal_is_trivial, reduce, MonomialOrder, PolyRing, Polynomial,
};
use selfdual_core::reptheory::{decompose, t_matrix, u2, u_minus, u_plus, M2Slot, ParameterPlane};
use selfdual_core::varieties::PresetName;
use selfdual_core::{DualityParams, Matrix, Perm3, RelationSpace, Scalar, Vector12};

/// Criteria refuted by the engine, with the failure each must show.
const KNOWN_UNATTAINABLE: [(usize, &str); 4] = [
    (5, "the pairing quotient is 6a + 6b, not a constant"),
    (6, "A12 + A12ᵀ has a nonzero ab-part; every other identity holds"),
    (11, "X1 and X2 samples meet their class equations but admit no duality; all other families pass"),
    (13, "verify-paper fails exactly the five refuted claims"),
];

const REFUTED_CLAIMS: [&str; 5] = [
    "pairing-pm-factor",
    "pairing-pm-equivalence",
    "a12-skew",
    "x1-sufficient",
    "x2-sufficient",
];

type Outcome = Result<String, String>;

/// What a criterion produced, plus whether a failure matched its documented shape.
struct Verdict {
    outcome: Outcome,
    documented: bool,
}

impl From<Outcome> for Verdict {
    fn from(outcome: Outcome) -> Self {
        Verdict {
            outcome,
            documented: false,
        }
    }
}

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn scalar(r: &mut impl Rng) -> Scalar {
    if r.gen_range(0..6) == 0 {
        return Scalar::zero();
    }
    Scalar::ratio(r.gen_range(-12..=12), r.gen_range(1..=7)).unwrap()
}

fn nonzero_pair(r: &mut impl Rng) -> [Scalar; 2] {
    loop {
        let p = [scalar(r), scalar(r)];
        if !(p[0].is_zero() && p[1].is_zero()) {
            return p;
        }
    }
}

fn random_matrix(r: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_vec(rows, cols, (0..rows * cols).map(|_| scalar(r)).collect()).unwrap()
}

fn full_rank(r: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    loop {
        let m = random_matrix(r, rows, cols);
        if m.rank() == rows {
            return m;
        }
    }
}

// ---------------------------------------------------------------------------
// Literal data and oracles

const SIGMA_LITERAL: [i64; 12] = [1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1];

fn sigma_literal() -> Matrix {
    Matrix::diagonal(&SIGMA_LITERAL.map(q))
}

/// Γ(a,b) written out entry by entry.
fn gamma_literal(a: &Scalar, b: &Scalar) -> Matrix {
    let (aa, bb, ab) = (a * a, b * b, a * b);
    let block = [
        [&aa, &ab, &ab, &bb],
        [&ab, &aa, &bb, &ab],
        [&ab, &bb, &aa, &ab],
        [&bb, &ab, &ab, &aa],
    ];
    let mut m = Matrix::zeros(12, 12);
    for k in 0..3 {
        for i in 0..4 {
            for j in 0..4 {
                m[(4 * k + i, 4 * k + j)] = block[i][j].clone();
            }
        }
    }
    m
}

/// Γ(a,b)U = U⊥, with U⊥ the kernel of `U Σ` and both sides compared as row spaces.
fn gold_check(u: &RelationSpace, p: &DualityParams) -> bool {
    if (&p.a * &p.a) == (&p.b * &p.b) || u.dim() != 6 {
        return false;
    }
    let image = u.basis() * &gamma_literal(&p.a, &p.b);
    let perp = (u.basis() * &sigma_literal()).kernel();
    perp.rows() == 6 && image.rowspace_equal(&perp).unwrap()
}

fn sub(x: &Matrix, y: &Matrix) -> Matrix {
    x.try_add(&y.neg()).unwrap()
}

fn plucker_coords(m: &Matrix) -> [Scalar; 6] {
    let (x, y) = (m.row(0), m.row(1));
    let p = |i: usize, j: usize| &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
    [p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)]
}

fn projectively_equal(p: &[Scalar], q: &[Scalar]) -> bool {
    p.len() == q.len()
        && p.iter().any(|x| !x.is_zero())
        && (0..p.len()).all(|i| (0..p.len()).all(|j| &p[i] * &q[j] == &p[j] * &q[i]))
}

fn in_y1(p: &[Scalar; 6]) -> bool {
    p[1] == p[4]
}

fn in_y2(p: &[Scalar; 6]) -> bool {
    p[2] == &p[0] + &p[3]
}

/// `A_ij(a,b) = T_i Γ(a,b) Σ T_jᵀ` from the literal matrices.
fn a_block(i: M2Slot, j: M2Slot, a: &Scalar, b: &Scalar) -> Matrix {
    &(&(&t_matrix(i) * &gamma_literal(a, b)) * &sigma_literal()) * &t_matrix(j).transpose()
}

/// The entries of `A_ij` are quadratic forms in `(a,b)`: returns the
/// coefficient matrices of `a²`, `ab`, `b²`.
fn a_block_coefficients(i: M2Slot, j: M2Slot) -> [Matrix; 3] {
    let aa = a_block(i, j, &q(1), &q(0));
    let bb = a_block(i, j, &q(0), &q(1));
    let sum = a_block(i, j, &q(1), &q(1));
    let ab = sub(&sub(&sum, &aa), &bb);
    [aa, ab, bb]
}

fn residual(plane: &Matrix, a: &Scalar, b: &Scalar) -> Matrix {
    &(plane * &a_block(M2Slot::First, M2Slot::Second, a, b)) * &plane.transpose()
}

/// A random 2×4 plane whose second row lies in the kernel of `form(first row)`.
fn plane_on(r: &mut impl Rng, form: impl Fn(&[Scalar]) -> [Scalar; 4]) -> Matrix {
    loop {
        let x: Vec<Scalar> = (0..4).map(|_| scalar(r)).collect();
        let k = Matrix::from_rows(4, vec![form(&x).to_vec()])
            .unwrap()
            .kernel();
        let y = &random_matrix(r, 1, k.rows()) * &k;
        let m = Matrix::from_rows(4, vec![x, y.row(0).to_vec()]).unwrap();
        if m.rank() == 2 {
            return m;
        }
    }
}

// p13 = p24 is linear in y once x is fixed.
fn y1_plane(r: &mut impl Rng) -> Matrix {
    plane_on(r, |x| [-&x[2], x[3].clone(), x[0].clone(), -&x[1]])
}

// p14 = p12 + p23, likewise.
fn y2_plane(r: &mut impl Rng) -> Matrix {
    plane_on(r, |x| [&x[1] - &x[3], &x[2] - &x[0], -&x[1], x[0].clone()])
}

fn u1_family(gamma: &Scalar, generic: bool) -> Matrix {
    let g = gamma.clone();
    if generic {
        Matrix::from_rows(
            4,
            vec![
                vec![g.clone(), g.clone(), q(0), q(1)],
                vec![-&g, -&g, q(1), q(0)],
            ],
        )
        .unwrap()
    } else {
        Matrix::from_i64(&[&[0, 0, 1, 1], &[1, 1, 0, 0]])
    }
}

fn u2_family(gamma: &Scalar, generic: bool) -> Matrix {
    let g = gamma.clone();
    if generic {
        Matrix::from_rows(
            4,
            vec![
                vec![-&g, &g + &q(2), q(0), q(1)],
                vec![&q(2) - &g, g.clone(), q(1), q(0)],
            ],
        )
        .unwrap()
    } else {
        Matrix::from_i64(&[&[0, 0, -1, 1], &[-1, 1, 0, 0]])
    }
}

fn plane(m: &Matrix) -> ParameterPlane {
    ParameterPlane::new(m).expect("rank 2")
}

/// `z_kl = s_k t_l`; the candidate witness `(z12 − z21, z11 − z22)` must be admissible.
fn admissible_lines(s: &[Scalar; 2], t: &[Scalar; 2]) -> bool {
    let d1 = &(&s[0] * &t[0]) - &(&s[1] * &t[1]);
    let d2 = &(&s[0] * &t[1]) - &(&s[1] * &t[0]);
    &d1 * &d1 != &d2 * &d2
}

fn certified(u: &RelationSpace) -> (Certificate, bool) {
    let cert = classify_selfdual(u).expect("classification runs");
    let gold =
        cert.self_dual && cert.verified && cert.witness.as_ref().is_some_and(|w| gold_check(u, w));
    (cert, gold)
}

// ---------------------------------------------------------------------------
// Criteria

fn criterion_1() -> Outcome {
    let s = sigma();
    if s == sigma_literal() {
        Ok("Σ = diag(1,-1,-1,1,-1,1,1,-1,-1,1,1,-1)".into())
    } else {
        Err(format!("Σ differs from the literal diagonal: {s:?}"))
    }
}

fn criterion_2() -> Outcome {
    let m = decompose(&RelationSpace::full())
        .map_err(|e| format!("{e:?}"))?
        .multiplicities();
    // Independent count through characters of the permutation representation.
    let traces: Vec<Scalar> = [Perm3::IDENTITY, Perm3::T12, Perm3::C123]
        .iter()
        .map(|&g| action_matrix(g).trace())
        .collect();
    let (e, t, c) = (&traces[0], &traces[1], &traces[2]);
    let six = q(6);
    let m_plus = &(&(e + &(&q(3) * t)) + &(&q(2) * c)) / &six;
    let m_minus = &(&(e - &(&q(3) * t)) + &(&q(2) * c)) / &six;
    let m_two = &(&(&q(2) * e) - &(&q(2) * c)) / &six;
    let oracle = [m_plus, m_minus, m_two];
    let expected = [q(2), q(2), q(4)];
    let got = [q(m.0 as i64), q(m.1 as i64), q(m.2 as i64)];
    if got == expected && oracle == expected {
        Ok("F(3) = 2M+ ⊕ 2M- ⊕ 4M2".into())
    } else {
        Err(format!("decompose gives {m:?}, characters give {oracle:?}"))
    }
}

type M2 = [[Scalar; 2]; 2];

fn m2_mul(x: &M2, y: &M2) -> M2 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]))
    })
}

/// Row `i` is the image of `u_i` in the basis `(u1, u2)`. The table is
/// generated from the two transpositions: `M(s∘g) = M(g)·M(s)`.
fn m2_table() -> Vec<(Perm3, M2)> {
    let gens = [
        (Perm3::T13, [[q(1), q(-1)], [q(0), q(-1)]]),
        (Perm3::T23, [[q(0), q(1)], [q(1), q(0)]]),
    ];
    let mut table = vec![(Perm3::IDENTITY, [[q(1), q(0)], [q(0), q(1)]])];
    let mut i = 0;
    while i < table.len() {
        let (g, mg) = table[i].clone();
        for (s, ms) in &gens {
            let h = s.compose(g);
            if table.iter().all(|(k, _)| *k != h) {
                table.push((h, m2_mul(&mg, ms)));
            }
        }
        i += 1;
    }
    table
}

fn act(g: Perm3, v: &Vector12) -> Vector12 {
    Vector12::from_slice(&action_matrix(g).apply(v.coords()).unwrap()).unwrap()
}

fn criterion_3() -> Outcome {
    let table = m2_table();
    if table.len() != 6 {
        return Err(format!("generators produced {} elements", table.len()));
    }
    let mut r = rng(3);
    for trial in 0..100 {
        let x = nonzero_pair(&mut r);
        let xbar: [Scalar; 4] = std::array::from_fn(|_| scalar(&mut r));
        let up = u_plus(&x[0], &x[1]);
        let um = u_minus(&x[0], &x[1]);
        let pair = [u2(M2Slot::First, &xbar), u2(M2Slot::Second, &xbar)];
        for (g, m) in &table {
            if act(*g, &up) != up {
                return Err(format!("trial {trial}: u+ moved by {g}"));
            }
            if act(*g, &um) != um.scale(&q(g.sign())) {
                return Err(format!("trial {trial}: u- not sign-twisted by {g}"));
            }
            for i in 0..2 {
                let expected = pair[0].scale(&m[i][0]).add(&pair[1].scale(&m[i][1]));
                if act(*g, &pair[i]) != expected {
                    return Err(format!(
                        "trial {trial}: u2^{} under {g} disagrees with the table",
                        i + 1
                    ));
                }
            }
            if act(*g, &up) != up.act(*g) || act(*g, &pair[0]) != pair[0].act(*g) {
                return Err(format!("Vector12::act disagrees with ρ({g})"));
            }
        }
    }
    Ok("100 samples x 6 group elements: trivial, sign and M2 actions exact".into())
}

fn criterion_4() -> Outcome {
    let tags = [
        IdentityTag::Lemma3_1,
        IdentityTag::Lemma3_2,
        IdentityTag::Lemma3_3,
        IdentityTag::Lemma3_4,
        IdentityTag::Lemma3_5,
    ];
    let failing: Vec<_> = tags.iter().filter(|&&t| !verify_identity(t)).collect();
    // Spot the same vanishing on exact numeric samples.
    let mut r = rng(4);
    for _ in 0..30 {
        let (x, y) = (nonzero_pair(&mut r), nonzero_pair(&mut r));
        let xb: [Scalar; 4] = std::array::from_fn(|_| scalar(&mut r));
        let yb: [Scalar; 4] = std::array::from_fn(|_| scalar(&mut r));
        let (a, b) = (scalar(&mut r), scalar(&mut r));
        let m = &gamma_literal(&a, &b) * &sigma_literal();
        let pair = |u: &Vector12, v: &Vector12| -> Scalar {
            let left = m.left_apply(u.coords()).unwrap();
            left.iter().zip(v.coords()).map(|(p, q)| p * q).sum()
        };
        let upx = u_plus(&x[0], &x[1]);
        let umx = u_minus(&x[0], &x[1]);
        let upy = u_plus(&y[0], &y[1]);
        let umy = u_minus(&y[0], &y[1]);
        let ux = [u2(M2Slot::First, &xb), u2(M2Slot::Second, &xb)];
        let uy = [u2(M2Slot::First, &yb), u2(M2Slot::Second, &yb)];
        let mut zeros = vec![pair(&upx, &upy), pair(&umx, &umy)];
        for i in 0..2 {
            zeros.extend([
                pair(&upx, &uy[i]),
                pair(&umx, &uy[i]),
                pair(&ux[i], &upy),
                pair(&ux[i], &umy),
            ]);
            zeros.push(pair(&ux[i], &uy[i]));
        }
        if zeros.iter().any(|z| !z.is_zero()) {
            return Err("a vanishing pairing is nonzero at an exact sample".into());
        }
    }
    if failing.is_empty() {
        Ok("all 12 pairing families vanish identically".into())
    } else {
        Err(format!("identities fail: {failing:?}"))
    }
}

/// Builds `⟨u+(x), u−(y)⟩` by expanding in `a, b, x, y` by hand.
fn criterion_5() -> Verdict {
    let ring = PolyRing::new(&["a", "b", "x1", "x2", "y1", "y2"]);
    let p = |s: &str| ring.parse(s).unwrap();
    let ord = MonomialOrder::degrevlex(vec![0, 1, 2, 3, 4, 5]);
    let coeff = |v: &Vector12, c: &Polynomial| -> Vec<Polynomial> {
        v.coords().iter().map(|e| c.scale(e)).collect()
    };
    let add = |u: Vec<Polynomial>, v: Vec<Polynomial>| -> Vec<Polynomial> {
        u.iter().zip(&v).map(|(x, y)| x + y).collect()
    };
    let (one, zero) = (q(1), q(0));
    let up = add(
        coeff(&u_plus(&one, &zero), &p("x1")),
        coeff(&u_plus(&zero, &one), &p("x2")),
    );
    let um = add(
        coeff(&u_minus(&one, &zero), &p("y1")),
        coeff(&u_minus(&zero, &one), &p("y2")),
    );
    let parts = [
        (gamma_literal(&one, &zero), p("a^2")),
        (gamma_literal(&zero, &one), p("b^2")),
    ];
    let g11 = gamma_literal(&one, &one);
    let gab = sub(&sub(&g11, &parts[0].0), &parts[1].0);
    let mut value = Polynomial::zero();
    for i in 0..12 {
        for j in 0..12 {
            let mut entry = Polynomial::zero();
            for (m, mono) in parts
                .iter()
                .chain(std::iter::once(&(gab.clone(), p("a*b"))))
            {
                entry = &entry + &mono.scale(&m[(i, j)]);
            }
            let term = &(&up[i] * &entry) * &um[j];
            value = &value + &term.scale(&q(SIGMA_LITERAL[j]));
        }
    }
    let form = p("a*(x1*y1 - x2*y2) + b*(x2*y1 - x1*y2)");
    let outcome = match divide_exact(&value, &form, &ord) {
        Some(c) if c.is_nonzero_constant() => {
            Ok(format!("⟨u+(x),u-(y)⟩ = ({})·L", ring.format(&c)))
        }
        Some(c) => Err(format!(
            "⟨u+(x),u-(y)⟩ = ({})·L: the cofactor is not constant",
            ring.format(&c)
        )),
        None => Err(format!(
            "⟨u+(x),u-(y)⟩ = {} is not a multiple of L",
            ring.format(&value)
        )),
    };
    let quotient = divide_exact(&value, &form, &ord);
    let documented = quotient == Some(p("6*a + 6*b")) && !verify_identity(IdentityTag::Lemma4);
    Verdict {
        outcome,
        documented,
    }
}

fn criterion_6() -> Verdict {
    use M2Slot::{First, Second};
    let zero = |ms: &[Matrix; 3]| ms.iter().all(Matrix::is_zero);
    let sum = |x: &[Matrix; 3], y: &[Matrix; 3]| -> [Matrix; 3] {
        std::array::from_fn(|k| x[k].try_add(&y[k]).unwrap())
    };
    let a11 = a_block_coefficients(First, First);
    let a22 = a_block_coefficients(Second, Second);
    let a12 = a_block_coefficients(First, Second);
    let a21 = a_block_coefficients(Second, First);
    let a12t: [Matrix; 3] = std::array::from_fn(|k| a12[k].transpose());
    let skew = sum(&a12, &a12t);
    let checks = [
        ("A11 = 0", zero(&a11)),
        ("A22 = 0", zero(&a22)),
        ("A12 = -A21", zero(&sum(&a12, &a21))),
        ("A12 + A12ᵀ = 0", zero(&skew)),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let outcome = if failed.is_empty() {
        Ok("A11 = A22 = 0, A12 = -A21, A12 + A12ᵀ = 0".into())
    } else {
        Err(format!(
            "fails: {}; ab-coefficient of A12 + A12ᵀ has first row {:?}",
            failed.join(", "),
            skew[1].row(0)
        ))
    };
    let documented = failed == ["A12 + A12ᵀ = 0"]
        && skew[0].is_zero()
        && skew[2].is_zero()
        && !skew[1].is_zero();
    Verdict {
        outcome,
        documented,
    }
}

fn criterion_7() -> Outcome {
    let mut times = Vec::new();
    for i in 0..4 {
        let start = Instant::now();
        let trivial = ideal_is_trivial(&r2_system(i));
        let took = start.elapsed();
        if !trivial {
            return Err(format!("shape {} ideal is proper", i + 1));
        }
        if took > Duration::from_secs(10) {
            return Err(format!("shape {} took {:.1} s", i + 1, took.as_secs_f64()));
        }
        times.push(format!("{:.2}s", took.as_secs_f64()));
    }
    Ok(format!(
        "all four shape ideals contain 1 ({})",
        times.join(", ")
    ))
}

fn criterion_8() -> Outcome {
    let ord = elimination_order();
    let basis = groebner(&PlaneCase::Case1.system(), &ord);
    let stuck: Vec<String> = case1_listed_polynomials()
        .iter()
        .filter(|f| !reduce(f, &basis, &ord).is_zero())
        .map(|f| identities::standard_ring().format(f))
        .collect();
    if !stuck.is_empty() {
        return Err(format!("not in the Case 1 ideal: {}", stuck.join("; ")));
    }
    for tag in [
        IdentityTag::U1_annihilates,
        IdentityTag::U2_annihilates,
        IdentityTag::U3_b0,
        IdentityTag::U4_a0,
    ] {
        if !verify_identity(tag) {
            return Err(format!("{tag} fails symbolically"));
        }
    }
    // Exact samples of each family against the literal A12.
    let mut r = rng(8);
    for _ in 0..40 {
        let (g, a, b) = (scalar(&mut r), scalar(&mut r), scalar(&mut r));
        for generic in [true, false] {
            if !residual(&u1_family(&g, generic), &a, &b).is_zero() {
                return Err(format!("U1 member γ = {g} not annihilated at ({a}, {b})"));
            }
            if !residual(&u2_family(&g, generic), &a, &b).is_zero() {
                return Err(format!("U2 member γ = {g} not annihilated at ({a}, {b})"));
            }
        }
        if !residual(&y1_plane(&mut r), &a, &q(0)).is_zero() {
            return Err("U3 plane not annihilated at b = 0".into());
        }
        if !residual(&y2_plane(&mut r), &q(0), &b).is_zero() {
            return Err("U4 plane not annihilated at a = 0".into());
        }
    }
    Ok("five Case 1 polynomials reduce to 0; U1, U2, U3 (b=0), U4 (a=0) annihilate A12".into())
}

fn preset_check(
    name: PresetName,
    classes: &[SelfDualClass],
    plucker: [i64; 6],
    segre: Option<[i64; 4]>,
    witness: (i64, i64),
) -> Result<(), String> {
    let u = name.space();
    let (cert, gold) = certified(&u);
    if !gold {
        return Err(format!(
            "{name}: not certified self-dual ({:?})",
            cert.reason
        ));
    }
    if cert.classes != classes {
        return Err(format!("{name}: classes {:?}", cert.classes));
    }
    let plane_m = cert.plane.as_ref().ok_or("no plane")?.basis().clone();
    let own = plucker_coords(&plane_m);
    let literal = plucker.map(q);
    if !projectively_equal(&own, &literal)
        || !projectively_equal(cert.plucker.as_ref().unwrap().coords(), &literal)
    {
        return Err(format!("{name}: Plücker point {own:?}"));
    }
    match (segre, &cert.lines, &cert.segre) {
        (None, None, None) => {}
        (Some(z), Some((s, t)), Some(reported)) => {
            let own = [&s[0] * &t[0], &s[0] * &t[1], &s[1] * &t[0], &s[1] * &t[1]];
            let literal = z.map(q);
            if !projectively_equal(&own, &literal)
                || !projectively_equal(reported.coords(), &literal)
            {
                return Err(format!("{name}: Segre point {own:?}"));
            }
        }
        other => return Err(format!("{name}: unexpected Segre data {other:?}")),
    }
    let w = DualityParams::from_i64(witness.0, witness.1);
    if cert.witness.as_ref() != Some(&w) || !gold_check(&u, &w) {
        return Err(format!("{name}: witness {:?}", cert.witness));
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    preset_check(
        PresetName::Novikov,
        &[SelfDualClass::Y2],
        [-1, 0, 1, 2, 3, 2],
        None,
        (0, 1),
    )?;
    Ok("Novikov: Y2, p = (-1,0,1,2,3,2), witness (0,1), Γ(0,1)U = U⊥".into())
}

fn criterion_10() -> Outcome {
    let x34 = [SelfDualClass::X3, SelfDualClass::X4];
    preset_check(
        PresetName::Associative,
        &x34,
        [1, 1, 1, 0, 1, 1],
        Some([1, -1, -1, 1]),
        (1, 0),
    )?;
    preset_check(
        PresetName::Poisson,
        &x34,
        [0, 1, 1, 1, 1, 1],
        Some([1, -1, -1, 1]),
        (1, 0),
    )?;
    Ok("associative and Poisson: X3, X4, z = (1,-1,-1,1), witness (1,0), gold check".into())
}

#[derive(Default)]
struct Tally {
    passed: usize,
    /// Failures whose certificate still lists the sampled class.
    class_listed: usize,
}

fn criterion_11() -> Verdict {
    let mut r = rng(11);
    let families = [
        SelfDualClass::Y1,
        SelfDualClass::Y2,
        SelfDualClass::X1,
        SelfDualClass::X2,
        SelfDualClass::X3,
        SelfDualClass::X4,
    ];
    let mut tallies: Vec<(SelfDualClass, Tally)> = Vec::new();
    for class in families {
        let mut tally = Tally::default();
        for i in 0..100 {
            let u = match class {
                SelfDualClass::Y1 => assemble_r34(i % 2 == 1, &plane(&y1_plane(&mut r))),
                SelfDualClass::Y2 => assemble_r34(i % 2 == 1, &plane(&y2_plane(&mut r))),
                SelfDualClass::X1 | SelfDualClass::X2 => {
                    let gamma = scalar(&mut r);
                    let generic = i % 4 != 0;
                    let m = if class == SelfDualClass::X1 {
                        u1_family(&gamma, generic)
                    } else {
                        u2_family(&gamma, generic)
                    };
                    let (s, t) = loop {
                        let (s, t) = (nonzero_pair(&mut r), nonzero_pair(&mut r));
                        if admissible_lines(&s, &t) {
                            break (s, t);
                        }
                    };
                    assemble_r5(&s, &t, &plane(&m))
                }
                SelfDualClass::X3 => {
                    let s = nonzero_pair(&mut r);
                    // z11 = z22 with t = (s2, s1).
                    assemble_r5(&s, &[s[1].clone(), s[0].clone()], &plane(&y1_plane(&mut r)))
                }
                SelfDualClass::X4 => {
                    let s = nonzero_pair(&mut r);
                    let k = loop {
                        let k = scalar(&mut r);
                        if !k.is_zero() {
                            break k;
                        }
                    };
                    // z12 = z21 with t ∝ s.
                    assemble_r5(&s, &[&s[0] * &k, &s[1] * &k], &plane(&y2_plane(&mut r)))
                }
            };
            let (cert, gold) = certified(&u);
            if gold {
                tally.passed += 1;
            } else if cert.classes.contains(&class) {
                tally.class_listed += 1;
            }
        }
        tallies.push((class, tally));
    }

    let mut r1_rejected = 0;
    for _ in 0..100 {
        let (one, zero) = (q(1), q(0));
        let xbar = loop {
            let x: [Scalar; 4] = std::array::from_fn(|_| scalar(&mut r));
            if x.iter().any(|c| !c.is_zero()) {
                break x;
            }
        };
        let u = RelationSpace::from_vectors(&[
            u_plus(&one, &zero),
            u_plus(&zero, &one),
            u_minus(&one, &zero),
            u_minus(&zero, &one),
            u2(M2Slot::First, &xbar),
            u2(M2Slot::Second, &xbar),
        ]);
        let cert = classify_selfdual(&u).unwrap();
        if u.dim() == 6 && !cert.self_dual {
            r1_rejected += 1;
        }
    }
    let mut r34_rejected = 0;
    for i in 0..100 {
        let m = loop {
            let m = full_rank(&mut r, 2, 4);
            let p = plucker_coords(&m);
            if !in_y1(&p) && !in_y2(&p) {
                break m;
            }
        };
        let cert = classify_selfdual(&assemble_r34(i % 2 == 1, &plane(&m))).unwrap();
        if !cert.self_dual {
            r34_rejected += 1;
        }
    }

    let summary: Vec<String> = tallies
        .iter()
        .map(|(c, t)| format!("{c} {}/100", t.passed))
        .collect();
    let detail = format!(
        "{}; R1 rejected {r1_rejected}/100; non-member R3/R4 rejected {r34_rejected}/100",
        summary.join(", ")
    );
    let all_pass =
        tallies.iter().all(|(_, t)| t.passed == 100) && r1_rejected == 100 && r34_rejected == 100;
    let outcome = if all_pass { Ok(detail) } else { Err(detail) };
    let documented = r1_rejected == 100
        && r34_rejected == 100
        && tallies.iter().all(|(c, t)| match c {
            SelfDualClass::X1 | SelfDualClass::X2 => {
                t.passed + t.class_listed == 100 && t.passed < 100
            }
            _ => t.passed == 100,
        });
    Verdict {
        outcome,
        documented,
    }
}

fn criterion_12() -> Outcome {
    let mut r = rng(12);
    for d in 1..=11 {
        for _ in 0..100 {
            let u = RelationSpace::from_matrix(&full_rank(&mut r, d, 12)).unwrap();
            let perp = koszul_complement(&u);
            if perp.dim() != 12 - d {
                return Err(format!("dim U⊥ = {} for dim U = {d}", perp.dim()));
            }
            let product = &(u.basis() * &sigma_literal()) * &perp.basis().transpose();
            if !product.is_zero() {
                return Err(format!("U⊥ not orthogonal to U for dim {d}"));
            }
            if koszul_complement(&perp) != u {
                return Err(format!("(U⊥)⊥ ≠ U for dim {d}"));
            }
        }
    }
    Ok("(U⊥)⊥ = U on 100 subspaces of each dimension 1-11".into())
}

fn criterion_13() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_selfdual"))
        .args(["verify-paper", "--format", "structured"])
        .output()
        .expect("runs the binary");
    let took = start.elapsed();
    let doc: serde_json::Value = match serde_json::from_slice(&out.stdout) {
        Ok(v) => v,
        Err(e) => return Verdict::from(Err(format!("unreadable scorecard: {e}"))),
    };
    let failing: Vec<String> = doc["failing"]
        .as_array()
        .map(|a| {
            a.iter()
                .filter_map(|v| v.as_str().map(String::from))
                .collect()
        })
        .unwrap_or_default();
    let code = out.status.code();
    let detail = format!(
        "exit {code:?}, {}/{} claims pass in {:.1} s",
        doc["passed"],
        doc["total"],
        took.as_secs_f64()
    );
    let in_time = took < Duration::from_secs(120);
    let outcome = if code == Some(0) && failing.is_empty() && in_time {
        Ok(detail)
    } else {
        Err(format!("{detail}; failing: {}", failing.join(", ")))
    };
    let documented = code == Some(1) && in_time && failing == REFUTED_CLAIMS;
    Verdict {
        outcome,
        documented,
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(usize, fn() -> Verdict)> = vec![
        (1, || criterion_1().into()),
        (2, || criterion_2().into()),
        (3, || criterion_3().into()),
        (4, || criterion_4().into()),
        (5, criterion_5),
        (6, criterion_6),
        (7, || criterion_7().into()),
        (8, || criterion_8().into()),
        (9, || criterion_9().into()),
        (10, || criterion_10().into()),
        (11, criterion_11),
        (12, || criterion_12().into()),
        (13, criterion_13),
    ];
    let start = Instant::now();
    let mut failed = BTreeSet::new();
    let mut undocumented = Vec::new();
    for (n, run) in criteria {
        let t = Instant::now();
        let v = run();
        let secs = t.elapsed().as_secs_f64();
        match &v.outcome {
            Ok(detail) => println!("criterion {n:>2}: PASS  {detail} [{secs:.1}s]"),
            Err(detail) => {
                println!("criterion {n:>2}: FAIL  {detail} [{secs:.1}s]");
                failed.insert(n);
                let known = KNOWN_UNATTAINABLE.iter().any(|(k, _)| *k == n);
                if !(known && v.documented) {
                    undocumented.push(n);
                }
            }
        }
    }
    let known: BTreeSet<usize> = KNOWN_UNATTAINABLE.iter().map(|(k, _)| *k).collect();
    println!(
        "acceptance: {} of 13 criteria pass, {:.1} s total",
        13 - failed.len(),
        start.elapsed().as_secs_f64()
    );
    for (n, why) in KNOWN_UNATTAINABLE {
        println!("  known failure {n}: {why}");
    }
    if failed == known && undocumented.is_empty() {
        ExitCode::SUCCESS
    } else {
        let unexpected_pass: Vec<_> = known.difference(&failed).collect();
        println!("acceptance: unexpected failures {undocumented:?}, unexpected passes {unexpected_pass:?}");
        ExitCode::FAILURE
    }
}
