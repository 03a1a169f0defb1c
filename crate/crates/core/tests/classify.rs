mod common;

use rand::Rng;
use selfdual_core::classify::{
    admits_duality, assemble_r34, assemble_r5, classify_selfdual, membership, plucker,
    sdu_residual, segre, PluckerPoint, ReprTag, SegrePoint, SelfDualClass,
};
use selfdual_core::freeoperad::verify_duality;
use selfdual_core::polyring::{groebner, reduce, MonomialOrder, PolyRing};
use selfdual_core::reptheory::ParameterPlane;
use selfdual_core::varieties::PresetName;
use selfdual_core::{DualityParams, Matrix, RelationSpace, Scalar};

/// A random plane whose second row `y` satisfies `form(x)·y = 0`.
fn plane_on(r: &mut impl Rng, form: impl Fn(&[Scalar]) -> [Scalar; 4]) -> ParameterPlane {
    loop {
        let x: Vec<Scalar> = (0..4).map(|_| common::scalar(r)).collect();
        let f = Matrix::from_rows(4, vec![form(&x).to_vec()]).unwrap();
        let k = f.kernel();
        let y = &common::matrix(r, 1, k.rows()) * &k;
        let m = Matrix::from_rows(4, vec![x.clone(), y.row(0).to_vec()]).unwrap();
        if let Some(p) = ParameterPlane::new(&m) {
            return p;
        }
    }
}

fn y1_plane(r: &mut impl Rng) -> ParameterPlane {
    plane_on(r, |x| [-&x[2], x[3].clone(), x[0].clone(), -&x[1]])
}

fn y2_plane(r: &mut impl Rng) -> ParameterPlane {
    plane_on(r, |x| [&x[1] - &x[3], &x[2] - &x[0], -&x[1], x[0].clone()])
}

// Independent restatement of the class equations.
fn in_y1(p: &[Scalar; 6]) -> bool {
    p[1] == p[4]
}

fn in_y2(p: &[Scalar; 6]) -> bool {
    p[2] == &p[0] + &p[3]
}

fn plucker_coords(plane: &ParameterPlane) -> [Scalar; 6] {
    let (x, y) = (plane.basis().row(0), plane.basis().row(1));
    let pij = |i: usize, j: usize| &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
    [
        pij(0, 1),
        pij(0, 2),
        pij(0, 3),
        pij(1, 2),
        pij(1, 3),
        pij(2, 3),
    ]
}

#[test]
fn presets_match_published_data() {
    for name in PresetName::ALL {
        let cert = classify_selfdual(&name.space()).unwrap();
        let exp = name.expected();
        assert!(cert.self_dual && cert.verified, "{name}: {:?}", cert.reason);
        assert_eq!(cert.repr_type.unwrap().tag, exp.repr, "{name}");
        assert_eq!(cert.classes, exp.classes, "{name}");
        assert_eq!(cert.plucker.as_ref(), Some(&exp.plucker), "{name}");
        assert_eq!(cert.segre, exp.segre, "{name}");
        assert_eq!(cert.witness.as_ref(), Some(&exp.witness), "{name}");
        assert_eq!(verify_duality(&name.space(), &exp.witness), Ok(true));
    }
}

#[test]
fn random_y_points_are_self_dual() {
    let mut r = common::rng(40);
    for i in 0..12 {
        let (plane, class) = if i % 2 == 0 {
            (y1_plane(&mut r), SelfDualClass::Y1)
        } else {
            (y2_plane(&mut r), SelfDualClass::Y2)
        };
        let coords = plucker_coords(&plane);
        assert!(if class == SelfDualClass::Y1 {
            in_y1(&coords)
        } else {
            in_y2(&coords)
        });
        for minus in [false, true] {
            let u = assemble_r34(minus, &plane);
            let cert = classify_selfdual(&u).unwrap();
            assert_eq!(
                cert.repr_type.unwrap().tag,
                if minus { ReprTag::R4 } else { ReprTag::R3 }
            );
            assert!(cert.classes.contains(&class));
            assert!(cert.self_dual, "{:?}", cert.reason);
            assert_eq!(verify_duality(&u, cert.witness.as_ref().unwrap()), Ok(true));
        }
    }
}

#[test]
fn random_x3_x4_points_are_self_dual() {
    let mut r = common::rng(41);
    for i in 0..12 {
        let s = common::pair(&mut r);
        let (plane, t, class) = if i % 2 == 0 {
            // z11 = z22 for t = (s2, s1).
            (
                y1_plane(&mut r),
                [s[1].clone(), s[0].clone()],
                SelfDualClass::X3,
            )
        } else {
            // z12 = z21 for t ∝ s.
            (y2_plane(&mut r), s.clone(), SelfDualClass::X4)
        };
        let u = assemble_r5(&s, &t, &plane);
        let cert = classify_selfdual(&u).unwrap();
        assert_eq!(cert.repr_type.unwrap().tag, ReprTag::R5);
        assert!(cert.classes.contains(&class));
        assert!(cert.self_dual, "{:?}", cert.reason);
        assert_eq!(verify_duality(&u, cert.witness.as_ref().unwrap()), Ok(true));
    }
}

#[test]
fn certificate_is_basis_independent() {
    let mut r = common::rng(42);
    for name in PresetName::ALL {
        let u = name.space();
        let g = common::invertible(&mut r, 6);
        let moved = RelationSpace::from_matrix(&(&g * u.basis())).unwrap();
        assert_eq!(
            classify_selfdual(&moved).unwrap(),
            classify_selfdual(&u).unwrap()
        );
    }
}

#[test]
fn plucker_and_segre_are_projective() {
    let mut r = common::rng(43);
    for _ in 0..20 {
        let plane = common::plane(&mut r);
        let g = common::invertible(&mut r, 2);
        let moved = ParameterPlane::new(&(&g * plane.basis())).unwrap();
        assert_eq!(plucker(&plane).unwrap(), plucker(&moved).unwrap());
        let (s, t) = (common::pair(&mut r), common::pair(&mut r));
        let k = common::nonzero(&mut r);
        let s2 = [&s[0] * &k, &s[1] * &k];
        assert_eq!(segre(&s, &t).unwrap(), segre(&s2, &t).unwrap());
        // Canonical form: first nonzero coordinate is 1.
        let p = plucker(&plane).unwrap();
        assert!(p.coords().iter().find(|c| !c.is_zero()).unwrap().is_one());
    }
}

#[test]
fn residual_examples() {
    // A (U1) plane: annihilated for every (a, b).
    let u1 = ParameterPlane::new(&Matrix::from_i64(&[&[1, 1, 0, 1], &[-1, -1, 1, 0]])).unwrap();
    let mut r = common::rng(44);
    for _ in 0..5 {
        assert!(sdu_residual(&u1, &common::params(&mut r)).is_zero());
    }
    let d = selfdual_core::reptheory::decompose(&PresetName::Novikov.space()).unwrap();
    let nov = selfdual_core::reptheory::extract_parameter_plane(&d).unwrap();
    assert!(sdu_residual(&nov, &DualityParams::from_i64(0, 1)).is_zero());
    assert!(!sdu_residual(&nov, &DualityParams::from_i64(1, 0)).is_zero());
}

#[test]
fn quadric_difference_identity() {
    // (z12 − z21)² − (z11 − z22)² ≡ (z12² + z21²) − (z11² + z22²) modulo the Segre relation.
    let ring = PolyRing::new(&["z11", "z12", "z21", "z22"]);
    let p = |s: &str| ring.parse(s).unwrap();
    let ord = MonomialOrder::degrevlex(vec![0, 1, 2, 3]);
    let rel = groebner(&[p("z11*z22 - z12*z21")], &ord);
    let lhs = p("(z12 - z21)^2 - (z11 - z22)^2");
    let rhs = p("z12^2 + z21^2 - z11^2 - z22^2");
    assert!(reduce(&(&lhs - &rhs), &rel, &ord).is_zero());
    assert!(!(&lhs - &rhs).is_zero());
}

#[test]
fn admits_duality_agrees_with_classification() {
    let mut r = common::rng(45);
    let mut cases: Vec<RelationSpace> = PresetName::ALL.iter().map(|p| p.space()).collect();
    cases.push(assemble_r34(false, &y1_plane(&mut r)));
    cases.push(assemble_r34(true, &y2_plane(&mut r)));
    // Generic planes and lines: no class equations hold.
    for _ in 0..3 {
        cases.push(assemble_r34(false, &common::plane(&mut r)));
        let (s, t) = (common::pair(&mut r), common::pair(&mut r));
        cases.push(assemble_r5(&s, &t, &common::plane(&mut r)));
    }
    for u in cases {
        let cert = classify_selfdual(&u).unwrap();
        assert_eq!(
            admits_duality(&u).unwrap(),
            cert.self_dual,
            "{:?}",
            cert.classes
        );
    }
}

#[test]
fn x1_sample_meets_class_equations_without_a_duality() {
    let plane = ParameterPlane::new(&Matrix::from_i64(&[&[1, 1, 0, 1], &[-1, -1, 1, 0]])).unwrap();
    let (s, t) = (
        [Scalar::one(), Scalar::zero()],
        [Scalar::one(), Scalar::from_int(2)],
    );
    let z = segre(&s, &t).unwrap();
    assert_eq!(
        membership(&plucker(&plane).unwrap(), Some(&z)),
        [SelfDualClass::X1]
    );
    let u = assemble_r5(&s, &t, &plane);
    let cert = classify_selfdual(&u).unwrap();
    assert_eq!(cert.classes, [SelfDualClass::X1]);
    assert!(!cert.self_dual);
    assert!(cert.reason.unwrap().contains("no derived witness"));
    assert_eq!(admits_duality(&u), Ok(false));
}

#[test]
fn rejections_name_their_cause() {
    let cert = classify_selfdual(&RelationSpace::full()).unwrap();
    assert!(cert.reason.unwrap().starts_with("dim U⊥ mismatch"));
    let e1 =
        RelationSpace::from_matrix(&Matrix::identity(12).select_rows(&[0, 1, 2, 3, 4, 5])).unwrap();
    assert!(classify_selfdual(&e1)
        .unwrap()
        .reason
        .unwrap()
        .starts_with("not S3-invariant"));
    let plane = ParameterPlane::new(&Matrix::from_i64(&[&[1, 0, 0, 1], &[0, 1, 1, 0]])).unwrap();
    let cert = classify_selfdual(&assemble_r34(false, &plane)).unwrap();
    assert!(!cert.self_dual && cert.classes.is_empty());
    assert!(PluckerPoint::from_i64([1, 0, 0, 0, 0, 1]).is_none());
    assert!(SegrePoint::from_i64([0, 0, 0, 0]).is_none());
}
