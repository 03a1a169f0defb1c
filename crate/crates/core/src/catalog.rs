//! A fixed list of reproducible claims, each with an exact check.
//!
//! Checks that involve the pairing use the catalog's `Σ`, so a corrupted
//! matrix can be injected with [`Catalog::with_sigma`] to see which
//! claims depend on it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classify::{
    admits_duality, assemble_r34, assemble_r5, classify_selfdual, plucker, Certificate,
    SelfDualClass,
};
use crate::exactmath::{Matrix, Scalar};
use crate::freeoperad::{action_matrix, sigma, Perm3, RelationSpace};
use crate::polyring::identities::{
    a12_plus_transpose, case1_listed_polynomials, case_solutions_in_u1_u2, case_t_ideal,
    default_order, nondegeneracy, pm_form, pm_pairings, pm_quotient, r2_system, radical_contains,
    same_ideal, standard_ring, sym_plucker, u1_planes, u2_planes, u3_constraint, u4_constraint,
    verify_identity_with_sigma, IdentityTag, PlaneCase,
};
use crate::polyring::{groebner, ideal_is_trivial, reduce, Polynomial};
use crate::reptheory::{decompose, u2, u_minus, u_plus, M2Slot, ParameterPlane};
use crate::varieties::PresetName;

/// Result of one claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&Catalog) -> (bool, String);

struct Claim {
    id: &'static str,
    statement: &'static str,
    check: Check,
}

/// The claim list, run against a given `Σ`.
#[derive(Clone, Debug)]
pub struct Catalog {
    sigma: Matrix,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::new()
    }
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d).expect("nonzero denominator")
}

fn ok(pass: bool, detail: String) -> (bool, String) {
    (pass, detail)
}

fn plane(rows: &[&[i64]]) -> ParameterPlane {
    ParameterPlane::new(&Matrix::from_i64(rows)).expect("rank-2 fixture")
}

/// Sample parameters shared by the pointwise checks.
fn samples2() -> Vec<[Scalar; 2]> {
    alloc::vec![
        [s(1), s(0)],
        [s(0), s(1)],
        [s(2), q(-1, 3)],
        [q(5, 7), s(4)]
    ]
}

fn samples4() -> Vec<[Scalar; 4]> {
    alloc::vec![
        [s(1), s(0), s(0), s(0)],
        [s(0), s(0), s(1), s(-1)],
        [s(2), q(-1, 3), s(5), q(7, 2)],
        [q(5, 7), s(4), s(-3), s(1)],
    ]
}

/// Checks the S3 action on `u+(x)`, `u−(x)` and on the pair `u2¹(x̄)`, `u2²(x̄)`
/// for all six permutations. The `M2` matrices for non-generators are
/// obtained from the generator table by the homomorphism rule.
pub fn embedding_action_holds(x: &[Scalar; 2], xbar: &[Scalar; 4]) -> bool {
    let up = u_plus(&x[0], &x[1]);
    let um = u_minus(&x[0], &x[1]);
    for g in Perm3::all() {
        if up.act(g) != up {
            return false;
        }
        if um.act(g) != um.scale(&s(g.sign())) {
            return false;
        }
    }
    let u = [u2(M2Slot::First, xbar), u2(M2Slot::Second, xbar)];
    // Row i lists the image of u_i in the basis (u1, u2).
    type M = [[i64; 2]; 2];
    let gen: [(Perm3, M); 2] = [
        (Perm3::T13, [[1, -1], [0, -1]]),
        (Perm3::T23, [[0, 1], [1, 0]]),
    ];
    let mul = |m: &M, n: &M| -> M {
        let mut out = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = m[i][0] * n[0][j] + m[i][1] * n[1][j];
            }
        }
        out
    };
    let mut table: Vec<(Perm3, M)> = alloc::vec![(Perm3::IDENTITY, [[1, 0], [0, 1]])];
    let mut k = 0;
    while k < table.len() {
        let (g, m) = table[k];
        for (sg, sm) in gen {
            // ρ(s∘g) u_i = ρ(s) Σ_j m[i][j] u_j, so M(s∘g) = M(g)·M(s).
            let h = sg.compose(g);
            let hm = mul(&m, &sm);
            match table.iter().find(|(p, _)| *p == h) {
                Some((_, existing)) if *existing != hm => return false,
                Some(_) => {}
                None => table.push((h, hm)),
            }
        }
        k += 1;
    }
    table.iter().all(|(g, m)| {
        (0..2).all(|i| {
            let expected = u[0].scale(&s(m[i][0])).add(&u[1].scale(&s(m[i][1])));
            u[i].act(*g) == expected
        })
    })
}

fn cert_summary(c: &Certificate) -> String {
    let classes: Vec<&str> = c.classes.iter().map(|c| c.name()).collect();
    let mut out = format!(
        "self_dual={} classes={{{}}}",
        c.self_dual,
        classes.join(",")
    );
    if let Some(r) = &c.repr_type {
        out.push_str(&format!(" type={}", r.tag));
    }
    if let Some(p) = &c.plucker {
        out.push_str(&format!(" p={p}"));
    }
    if let Some(z) = &c.segre {
        out.push_str(&format!(" z={z}"));
    }
    if let Some(w) = &c.witness {
        out.push_str(&format!(" witness=({},{})", w.a, w.b));
    }
    if let Some(r) = &c.reason {
        out.push_str(&format!(" reason: {r}"));
    }
    out
}

fn example(p: PresetName) -> (bool, String) {
    let u = p.space();
    let e = p.expected();
    match classify_selfdual(&u) {
        Ok(c) => {
            let pass = c.self_dual
                && c.verified
                && c.repr_type.map(|r| r.tag) == Some(e.repr)
                && c.classes == e.classes
                && c.plucker.as_ref() == Some(&e.plucker)
                && c.segre == e.segre
                && c.witness.as_ref() == Some(&e.witness);
            ok(pass, cert_summary(&c))
        }
        Err(err) => ok(false, format!("classification failed: {err}")),
    }
}

fn expect_self_dual(u: &RelationSpace, class: SelfDualClass) -> (bool, String) {
    match classify_selfdual(u) {
        Ok(c) => {
            let pass = c.self_dual && c.verified && c.classes.contains(&class);
            let mut detail = cert_summary(&c);
            if !pass {
                let exists = admits_duality(u).unwrap_or(false);
                detail.push_str(&format!("; some admissible (a,b) exists: {exists}"));
            }
            ok(pass, detail)
        }
        Err(err) => ok(false, format!("classification failed: {err}")),
    }
}

fn expect_not_self_dual(u: &RelationSpace) -> (bool, String) {
    match (classify_selfdual(u), admits_duality(u)) {
        (Ok(c), Ok(exists)) => ok(
            !c.self_dual && !exists,
            format!(
                "{}; some admissible (a,b) exists: {exists}",
                cert_summary(&c)
            ),
        ),
        (Err(e), _) | (_, Err(e)) => ok(false, format!("classification failed: {e}")),
    }
}

fn identity(c: &Catalog, tag: IdentityTag) -> (bool, String) {
    let pass = verify_identity_with_sigma(tag, &c.sigma);
    ok(
        pass,
        format!(
            "{tag}: {}",
            if pass {
                "identity holds"
            } else {
                "identity fails"
            }
        ),
    )
}

fn plane_case(case: PlaneCase) -> (bool, String) {
    let t = case_t_ideal(case);
    let ring = standard_ring();
    let shown: Vec<String> = t.iter().map(|p| ring.format(p)).collect();
    ok(
        case_solutions_in_u1_u2(case),
        format!("{}: t-ideal [{}]", case.name(), shown.join(", ")),
    )
}

fn check_sigma(c: &Catalog) -> (bool, String) {
    let expected = [1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1].map(s);
    let pass = c.sigma == Matrix::diagonal(&expected);
    ok(
        pass,
        String::from("Σ = diag(1,-1,-1,1,-1,1,1,-1,-1,1,1,-1)"),
    )
}

fn check_decomposition(_: &Catalog) -> (bool, String) {
    match decompose(&RelationSpace::full()) {
        Ok(d) => {
            let m = d.multiplicities();
            ok(m == (2, 2, 4), format!("(m+, m-, m2) = {m:?}"))
        }
        Err(e) => ok(false, format!("{e}")),
    }
}

fn check_embedding_action(_: &Catalog) -> (bool, String) {
    let mut n = 0;
    for x in samples2() {
        for xbar in samples4() {
            if !embedding_action_holds(&x, &xbar) {
                return ok(false, format!("action mismatch at x={x:?}, x̄={xbar:?}"));
            }
            n += 1;
        }
    }
    ok(true, format!("{n} parameter samples, all six permutations"))
}

fn check_homomorphism(_: &Catalog) -> (bool, String) {
    let all = Perm3::all();
    let pass = all.iter().all(|&g| {
        all.iter()
            .all(|&h| &action_matrix(g) * &action_matrix(h) == action_matrix(g.compose(h)))
    });
    ok(pass, String::from("ρ(g)ρ(h) = ρ(g∘h) on all 36 pairs"))
}

fn check_pm_factor(c: &Catalog) -> (bool, String) {
    let ring = standard_ring();
    match pm_quotient(&c.sigma) {
        Some(quot) => ok(
            quot.is_nonzero_constant(),
            format!(
                "<u+(x),u-(y)> = ({}) * ({})",
                ring.format(&quot),
                ring.format(&pm_form())
            ),
        ),
        None => ok(
            false,
            String::from("<u+(x),u-(y)> is not a multiple of the linear form"),
        ),
    }
}

fn check_pm_equivalence(c: &Catalog) -> (bool, String) {
    // With a² ≠ b², both pairings vanish iff the form vanishes.
    let (p1, p2) = pm_pairings(&c.sigma);
    let l = pm_form();
    let forward = radical_contains(&[p1.clone(), p2.clone(), nondegeneracy()], &l);
    let backward = radical_contains(&[l.clone(), nondegeneracy()], &p1)
        && radical_contains(&[l, nondegeneracy()], &p2);
    let ring = standard_ring();
    ok(
        forward && backward,
        format!(
            "pairings vanish => form vanishes: {forward}; form vanishes => pairings vanish: {backward}; <u-(y),u+(x)> = {}",
            ring.format(&p2)
        ),
    )
}

fn check_a12_skew(c: &Catalog) -> (bool, String) {
    let m = a12_plus_transpose(&c.sigma);
    let ring = standard_ring();
    let first = m.entries().iter().find(|e| !e.is_zero());
    match first {
        None => ok(true, String::from("A12 + A12ᵀ = 0")),
        Some(e) => ok(
            false,
            format!("A12 + A12ᵀ has nonzero entries, e.g. {}", ring.format(e)),
        ),
    }
}

fn check_r1(_: &Catalog) -> (bool, String) {
    let (one, zero) = (s(1), s(0));
    let mut vs = alloc::vec![
        u_plus(&one, &zero),
        u_plus(&zero, &one),
        u_minus(&one, &zero),
        u_minus(&zero, &one),
    ];
    let x = [s(1), s(0), s(0), s(0)];
    vs.push(u2(M2Slot::First, &x));
    vs.push(u2(M2Slot::Second, &x));
    expect_not_self_dual(&RelationSpace::from_vectors(&vs))
}

fn check_r2(i: usize) -> (bool, String) {
    ok(
        ideal_is_trivial(&r2_system(i)),
        format!("shape {}: ideal contains 1", i + 1),
    )
}

fn check_case1_basis(_: &Catalog) -> (bool, String) {
    let ord = default_order();
    let gb = groebner(&PlaneCase::Case1.system(), &ord);
    let listed = case1_listed_polynomials();
    let reduced = listed
        .iter()
        .filter(|p| reduce(p, &gb, &ord).is_zero())
        .count();
    let same = same_ideal(&case_t_ideal(PlaneCase::Case1), &listed);
    ok(
        reduced == listed.len() && same,
        format!(
            "{reduced}/{} listed polynomials reduce to 0; t-part generates the same ideal: {same}",
            listed.len()
        ),
    )
}

fn check_plane_coordinates(_: &Catalog) -> (bool, String) {
    use crate::polyring::identities::{u1_equations, u2_equations};
    let u1 = u1_planes().iter().all(|m| {
        u1_equations(&sym_plucker(m))
            .iter()
            .all(Polynomial::is_zero)
    });
    let u2ok = u2_planes().iter().all(|m| {
        u2_equations(&sym_plucker(m))
            .iter()
            .all(Polynomial::is_zero)
    });
    // (U3)/(U4) constraints are the Y1/Y2 equations in Plücker form.
    let x = crate::polyring::identities::X.map(crate::polyring::identities::v);
    let y = crate::polyring::identities::Y.map(crate::polyring::identities::v);
    let generic = crate::polyring::PolyMatrix::from_fn(2, 4, |r, c| {
        if r == 0 {
            x[c].clone()
        } else {
            y[c].clone()
        }
    });
    let p = sym_plucker(&generic);
    let u3 = u3_constraint() == &p[1] - &p[4];
    let u4 = u4_constraint() == &(&p[2] - &p[0]) - &p[3];
    ok(
        u1 && u2ok && u3 && u4,
        format!("U1 {u1}, U2 {u2ok}, U3 {u3}, U4 {u4}"),
    )
}

fn check_novikov_plucker(_: &Catalog) -> (bool, String) {
    let d = decompose(&PresetName::Novikov.space());
    let p = d
        .ok()
        .and_then(|d| crate::reptheory::extract_parameter_plane(&d).ok())
        .and_then(|pl| plucker(&pl).ok());
    match p {
        Some(p) => ok(
            p == PresetName::Novikov.expected().plucker,
            format!("p = {p}"),
        ),
        None => ok(false, String::from("no parameter plane")),
    }
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "sigma",
        statement: "Σ is the stated diagonal sign matrix",
        check: check_sigma,
    },
    Claim {
        id: "action-homomorphism",
        statement: "the S3 action on F(3) is a homomorphism",
        check: check_homomorphism,
    },
    Claim {
        id: "decomposition-f3",
        statement: "F(3) = 2M+ + 2M- + 4M2",
        check: check_decomposition,
    },
    Claim {
        id: "embeddings-action",
        statement: "u+, u-, u2 transform by the trivial, sign and M2 tables",
        check: check_embedding_action,
    },
    Claim {
        id: "pairing-plus-plus",
        statement: "<u+, u+> = 0",
        check: |c| identity(c, IdentityTag::Lemma3_1),
    },
    Claim {
        id: "pairing-minus-minus",
        statement: "<u-, u-> = 0",
        check: |c| identity(c, IdentityTag::Lemma3_2),
    },
    Claim {
        id: "pairing-pm-m2",
        statement: "<u±, u2^i> = 0",
        check: |c| identity(c, IdentityTag::Lemma3_3),
    },
    Claim {
        id: "pairing-m2-pm",
        statement: "<u2^i, u±> = 0",
        check: |c| identity(c, IdentityTag::Lemma3_4),
    },
    Claim {
        id: "pairing-m2-same",
        statement: "<u2^i, u2^i> = 0",
        check: |c| identity(c, IdentityTag::Lemma3_5),
    },
    Claim {
        id: "pairing-pm-factor",
        statement: "<u+(x),u-(y)> = c (a(x1y1-x2y2) + b(x2y1-x1y2)) with c a nonzero constant",
        check: check_pm_factor,
    },
    Claim {
        id: "pairing-pm-equivalence",
        statement: "for a^2 != b^2 both u+/u- pairings vanish iff a(x1y1-x2y2) + b(x2y1-x1y2) = 0",
        check: check_pm_equivalence,
    },
    Claim {
        id: "a-antisymmetry",
        statement: "A_ij = -A_ji",
        check: |c| identity(c, IdentityTag::A_antisym),
    },
    Claim {
        id: "a12-skew",
        statement: "A12 + A12^T = 0",
        check: check_a12_skew,
    },
    Claim {
        id: "r1-excluded",
        statement: "type R1 is never self-dual",
        check: check_r1,
    },
    Claim {
        id: "r2-shape-1",
        statement: "R2 system, shape 1, is inconsistent with a^2 != b^2",
        check: |_| check_r2(0),
    },
    Claim {
        id: "r2-shape-2",
        statement: "R2 system, shape 2, is inconsistent with a^2 != b^2",
        check: |_| check_r2(1),
    },
    Claim {
        id: "r2-shape-3",
        statement: "R2 system, shape 3, is inconsistent with a^2 != b^2",
        check: |_| check_r2(2),
    },
    Claim {
        id: "r2-shape-4",
        statement: "R2 system, shape 4, is inconsistent with a^2 != b^2",
        check: |_| check_r2(3),
    },
    Claim {
        id: "case1-basis",
        statement: "the five listed t-polynomials lie in the case 1 ideal and generate its t-part",
        check: check_case1_basis,
    },
    Claim {
        id: "case1-planes",
        statement: "case 1 solutions are (U1) or (U2) planes",
        check: |_| plane_case(PlaneCase::Case1),
    },
    Claim {
        id: "case2-planes",
        statement: "case 2 (t4 = 0) solutions are (U1) or (U2) planes",
        check: |_| plane_case(PlaneCase::Case2),
    },
    Claim {
        id: "case3a-planes",
        statement: "case 3, first shape, adds no planes",
        check: |_| plane_case(PlaneCase::Case3a),
    },
    Claim {
        id: "case3b-planes",
        statement: "case 3, second shape, adds no planes",
        check: |_| plane_case(PlaneCase::Case3b),
    },
    Claim {
        id: "case3c-planes",
        statement: "case 3, third shape, adds no planes",
        check: |_| plane_case(PlaneCase::Case3c),
    },
    Claim {
        id: "case4-empty",
        statement: "case 4 has no solutions",
        check: |_| {
            ok(
                ideal_is_trivial(&PlaneCase::Case4.system()),
                String::from("ideal contains 1"),
            )
        },
    },
    Claim {
        id: "u1-annihilates",
        statement: "(U1) planes satisfy the condition for all a, b",
        check: |c| identity(c, IdentityTag::U1_annihilates),
    },
    Claim {
        id: "u2-annihilates",
        statement: "(U2) planes satisfy the condition for all a, b",
        check: |c| identity(c, IdentityTag::U2_annihilates),
    },
    Claim {
        id: "u3-b0",
        statement: "at b = 0 the condition is x1y3 - x3y1 + x4y2 - x2y4 = 0",
        check: |c| identity(c, IdentityTag::U3_b0),
    },
    Claim {
        id: "u4-a0",
        statement: "at a = 0 the condition is x2y1 - x1y2 + x3y2 - x2y3 + x1y4 - x4y1 = 0",
        check: |c| identity(c, IdentityTag::U4_a0),
    },
    Claim {
        id: "plane-coordinates",
        statement: "(U1)-(U4) in Plücker coordinates",
        check: check_plane_coordinates,
    },
    Claim {
        id: "y1-sufficient",
        statement: "R3/R4 spaces with p in Y1 are self-dual",
        check: |_| {
            let pl = plane(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
            let (a, da) = expect_self_dual(&assemble_r34(false, &pl), SelfDualClass::Y1);
            let (b, db) = expect_self_dual(&assemble_r34(true, &pl), SelfDualClass::Y1);
            ok(a && b, format!("R3: {da}; R4: {db}"))
        },
    },
    Claim {
        id: "y2-sufficient",
        statement: "R3/R4 spaces with p in Y2 are self-dual",
        check: |_| {
            let pl = plane(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
            let (a, da) = expect_self_dual(&assemble_r34(false, &pl), SelfDualClass::Y2);
            let (b, db) = expect_self_dual(&assemble_r34(true, &pl), SelfDualClass::Y2);
            ok(a && b, format!("R3: {da}; R4: {db}"))
        },
    },
    Claim {
        id: "y-necessary",
        statement: "R3/R4 spaces with p outside Y1 and Y2 are not self-dual",
        check: |_| {
            let pl = plane(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
            let (a, da) = expect_not_self_dual(&assemble_r34(false, &pl));
            let (b, db) = expect_not_self_dual(&assemble_r34(true, &pl));
            ok(a && b, format!("R3: {da}; R4: {db}"))
        },
    },
    Claim {
        id: "x1-sufficient",
        statement: "R5 spaces with q in X1 are self-dual",
        check: |_| {
            let pl = plane(&[&[1, 1, 0, 1], &[-1, -1, 1, 0]]);
            expect_self_dual(
                &assemble_r5(&[s(1), s(0)], &[s(1), s(2)], &pl),
                SelfDualClass::X1,
            )
        },
    },
    Claim {
        id: "x2-sufficient",
        statement: "R5 spaces with q in X2 are self-dual",
        check: |_| {
            let pl = plane(&[&[0, 2, 0, 1], &[2, 0, 1, 0]]);
            expect_self_dual(
                &assemble_r5(&[s(1), s(0)], &[s(1), s(2)], &pl),
                SelfDualClass::X2,
            )
        },
    },
    Claim {
        id: "x3-sufficient",
        statement: "R5 spaces with q in X3 are self-dual",
        check: |_| {
            let pl = plane(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
            expect_self_dual(
                &assemble_r5(&[s(1), s(1)], &[s(1), s(1)], &pl),
                SelfDualClass::X3,
            )
        },
    },
    Claim {
        id: "x4-sufficient",
        statement: "R5 spaces with q in X4 are self-dual",
        check: |_| {
            let pl = plane(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
            expect_self_dual(
                &assemble_r5(&[s(1), s(2)], &[s(1), s(2)], &pl),
                SelfDualClass::X4,
            )
        },
    },
    Claim {
        id: "x-necessary",
        statement: "R5 spaces with q outside X1-X4 are not self-dual",
        check: |_| {
            let pl = plane(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
            expect_not_self_dual(&assemble_r5(&[s(1), s(0)], &[s(1), s(1)], &pl))
        },
    },
    Claim {
        id: "novikov-plucker",
        statement: "the Novikov plane has p = (-1,0,1,2,3,2)",
        check: check_novikov_plucker,
    },
    Claim {
        id: "example-novikov",
        statement: "Novikov: type R4, class Y2, self-dual",
        check: |_| example(PresetName::Novikov),
    },
    Claim {
        id: "example-associative",
        statement: "associative: type R5, classes X3, X4, self-dual",
        check: |_| example(PresetName::Associative),
    },
    Claim {
        id: "example-poisson",
        statement: "Poisson: type R5, classes X3, X4, self-dual",
        check: |_| example(PresetName::Poisson),
    },
];

/// Number of claims in the catalog.
pub const CLAIM_COUNT: usize = 42;

impl Catalog {
    pub fn new() -> Self {
        Catalog { sigma: sigma() }
    }

    /// Runs the pairing-dependent claims against `sigma` instead.
    pub fn with_sigma(sigma: Matrix) -> Self {
        Catalog { sigma }
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    /// `(id, statement)` for every claim, in run order.
    pub fn claims() -> Vec<(&'static str, &'static str)> {
        CLAIMS.iter().map(|c| (c.id, c.statement)).collect()
    }

    pub fn run_claim(&self, id: &str) -> Option<ClaimResult> {
        CLAIMS.iter().find(|c| c.id == id).map(|c| self.exec(c))
    }

    pub fn run(&self) -> Vec<ClaimResult> {
        CLAIMS.iter().map(|c| self.exec(c)).collect()
    }

    fn exec(&self, c: &Claim) -> ClaimResult {
        let (passed, detail) = (c.check)(self);
        ClaimResult {
            id: c.id,
            statement: c.statement,
            passed,
            detail,
        }
    }
}
