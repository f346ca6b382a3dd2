//! Acceptance suite: one test per criterion, exact integer assertions
//! throughout (tolerance zero). Each test name carries its criterion number,
//! so the harness output is one pass/fail line per criterion.
//!
//! Criterion 3 encodes a worked eight-element interval exactly as listed in
//! its source; exact computation shows the interval holds six of the eight
//! candidates (two listed covers of the bottom element do not lie below the
//! top element), so that single check fails by design. The verified
//! six-element structure is pinned in the library's unit tests.

use std::collections::BTreeSet;
use std::sync::Arc;

use daws::oracle;
use daws::sampling;
use daws::*;

fn a1() -> Arc<RootSystem> {
    RootSystem::new(TypeLabel::A, 1).unwrap()
}

fn a2() -> Arc<RootSystem> {
    RootSystem::new(TypeLabel::A, 2).unwrap()
}

fn wt(sys: &Arc<RootSystem>, mu_root_coords: &[i64], m: i64, l: i64) -> AffineWeight {
    let mu = Weight::new(sys, sys.root_to_weight_coords(mu_root_coords));
    AffineWeight::new(mu, m, l)
}

fn root(sys: &Arc<RootSystem>, coords: &[i64]) -> Root {
    Root::new(sys, coords.to_vec()).unwrap()
}

fn daroot(sys: &Arc<RootSystem>, coords: &[i64], r: i64, j: i64) -> DoubleAffineRoot {
    DoubleAffineRoot::new(root(sys, coords), r, j)
}

/// x = X^{alpha_1 + alpha_2 + delta + Lambda_0} Y^{alpha_2} over affine A2.
fn golden_x(sys: &Arc<RootSystem>) -> SemigroupElement {
    SemigroupElement::from_parts(
        wt(sys, &[1, 1], 1, 1),
        AffineWeylElement::translation(sys, vec![0, 1]),
    )
    .unwrap()
}

fn elem(sys: &Arc<RootSystem>, lambda: Vec<i64>, word: &[usize]) -> SemigroupElement {
    let mut w = AffineWeylElement::translation(sys, lambda);
    for &i in word {
        w = w.compose(&AffineWeylElement::simple(sys, i).unwrap());
    }
    SemigroupElement::from_parts(wt(sys, &[1, 1], 1, 1), w).unwrap()
}

#[test]
fn criterion_01_a2_golden_lengths_and_difference_set() {
    let s = a2();
    let x = golden_x(&s);
    let alpha = daroot(&s, &[1, 0], -2, 1);
    let y = apply_reflection_left(&alpha, &x).unwrap();
    assert_eq!(x.length(), 12);
    assert_eq!(y.length(), 9);

    let lds = length_diff_set(&x, &alpha).unwrap();
    let expect: BTreeSet<DoubleAffineRoot> = [
        alpha.clone(),
        daroot(&s, &[1, 1], -3, 1),
        daroot(&s, &[0, -1], 1, 0),
    ]
    .into_iter()
    .collect();
    assert_eq!(lds.members, expect);
}

#[test]
fn criterion_02_a1_golden_cocover_and_classification() {
    let s = a1();
    let x = SemigroupElement::from_parts(wt(&s, &[14], -23, 8), AffineWeylElement::identity(&s))
        .unwrap();
    let y = SemigroupElement::from_parts(
        wt(&s, &[-6], -3, 8),
        AffineWeylElement::new(vec![1], WeylElement::simple(&s, 0).unwrap()),
    )
    .unwrap();
    assert_eq!(x.length(), 8);
    assert_eq!(y.length(), 7);

    let alpha0 = daroot(&s, &[-1], 1, 0);
    assert!(is_cocover(&x, &alpha0).unwrap());

    let descs = classify_cocovers_qbg(&x, 1).unwrap();
    let found = descs
        .iter()
        .find(|d| d.y == y)
        .expect("classification reproduces y");
    assert_eq!(found.case_id, 1);
    assert_eq!(found.j, 0);
    assert_eq!(found.alpha_tilde, AffineRoot::new(root(&s, &[-1]), 3));
    assert_eq!(found.alpha, alpha0);
}

#[test]
fn criterion_03_interval_golden_example() {
    let s = a2();
    let x = golden_x(&s);
    let alpha = daroot(&s, &[1, 0], -2, 1);
    let y = apply_reflection_left(&alpha, &x).unwrap();

    // The eight listed elements.
    let item2 = elem(&s, vec![2, 3], &[1, 2, 1]);
    let item3 = elem(&s, vec![0, 0], &[2]);
    let item4 = elem(&s, vec![3, 1], &[1, 2]);
    let item5 = elem(&s, vec![2, 0], &[1, 2]);
    let item6 = elem(&s, vec![3, 3], &[2, 1]);
    let item7 = elem(&s, vec![3, 2], &[2, 1]);

    // Items 2 and 3 are cocovers of x.
    let cocs: BTreeSet<SemigroupElement> =
        cocovers(&x).unwrap().into_iter().map(|c| c.y).collect();
    assert!(cocs.contains(&item2));
    assert!(cocs.contains(&item3));

    // Items 4 through 7 are covers of y.
    let covs: BTreeSet<SemigroupElement> =
        covers(&y).unwrap().into_iter().map(|(_, z)| z).collect();
    for it in [&item4, &item5, &item6, &item7] {
        assert!(covs.contains(it));
    }

    // The chains-through-covers oracle agrees with the cocover descent.
    let got = interval(&y, &x).unwrap();
    let chains = oracle::interval_chains(&y, &x, 3).unwrap();
    assert_eq!(got, chains);

    // The listed eight-element interval. Exact computation yields six of
    // the eight (items 4 and 7 are not below x), so this final assertion
    // records the discrepancy as a failure rather than weakening the check.
    let listed: BTreeSet<SemigroupElement> = [
        x.clone(),
        item2,
        item3,
        item4,
        item5,
        item6,
        item7,
        y.clone(),
    ]
    .into_iter()
    .collect();
    assert_eq!(
        got, listed,
        "computed interval differs from the listed eight elements"
    );
}

#[test]
fn criterion_04_length_laws() {
    // Exhaustive: l(X^0 w~) equals BFS word length for all w~ of length <= 5.
    for sys in [a1(), a2()] {
        for (w, depth) in oracle::affine_ball(&sys, 5) {
            let x = SemigroupElement::from_parts(AffineWeight::zero(&sys), w.clone()).unwrap();
            assert_eq!(x.length(), depth as i64, "{:?}", w);
            assert_eq!(w.length(), depth as i64);
        }
    }
    // Product identity on 200 seeded pairs of length <= 6.
    let mut rng = sampling::rng(0xAC04);
    for sys in [a1(), a2()] {
        for _ in 0..100 {
            let x = sampling::random_affine(&mut rng, &sys, 6);
            let y = sampling::random_affine(&mut rng, &sys, 6);
            assert!(length_product_identity_holds(&x, &y));
        }
    }
}

#[test]
fn criterion_05_length_splitting() {
    let mut rng = sampling::rng(0xAC05);
    for sys in [a1(), a2()] {
        for _ in 0..100 {
            let zeta = sampling::random_regular_dominant(&mut rng, &sys, 1);
            let v = sampling::random_affine(&mut rng, &sys, 4);
            let w = sampling::random_affine(&mut rng, &sys, 4);
            let x = assemble(&zeta, &v, &w).unwrap();
            assert_eq!(length_split(&zeta, &v, &w).unwrap(), x.length());
        }
    }
}

#[test]
fn criterion_06_length_difference_counting_laws() {
    let mut rng = sampling::rng(0xAC06);
    for sys in [a1(), a2()] {
        for _ in 0..50 {
            let (x, alpha) = sampling::random_downward_pair(&mut rng, &sys);
            let lds = length_diff_set(&x, &alpha).unwrap();
            let y = apply_reflection_left(&alpha, &x).unwrap();
            assert_eq!(lds.members.len() as i64, x.length() - y.length());
        }
        for _ in 0..50 {
            let (x, beta) = sampling::random_upward_pair(&mut rng, &sys);
            let u = cover_diff_set(&x, &beta).unwrap();
            let y = apply_reflection_left(&beta, &x).unwrap();
            assert_eq!(u.members.len() as i64, y.length() - x.length());
        }
    }
}

#[test]
fn criterion_07_classification_matches_corner_fallback() {
    let mut rng = sampling::rng(0xAC07);
    let mut count = 0;
    for sys in [a1(), a2()] {
        let runs = if sys.rank() == 1 { 13 } else { 12 };
        for _ in 0..runs {
            let x = sampling::random_deep_dominant(&mut rng, &sys, 3, 2, 2);
            count += 1;
            let descs = cocovers_via_classification(&x).unwrap();
            let fast: BTreeSet<DoubleAffineRoot> =
                descs.iter().map(|d| d.alpha.clone()).collect();
            let fast_y: BTreeSet<SemigroupElement> =
                descs.iter().map(|d| d.y.clone()).collect();
            let slow = cocovers_via_corners(&x).unwrap();
            let slow_roots: BTreeSet<DoubleAffineRoot> =
                slow.iter().map(|c| c.alpha.clone()).collect();
            let slow_y: BTreeSet<SemigroupElement> = slow.iter().map(|c| c.y.clone()).collect();
            assert_eq!(fast, slow_roots, "x = {:?}", x);
            assert_eq!(fast_y, slow_y);

            // Each descriptor satisfies its case's (j, length condition)
            // verbatim.
            let d = decompose(&x).unwrap();
            let v = d.v;
            let u = d.w.inverse().compose(&v);
            for desc in &descs {
                let refl = AffineWeylElement::reflection(&desc.alpha_tilde);
                let p2rho = desc.alpha_tilde.pairing_2rho();
                let pz = d.zeta_plus.pairing_affine_root(&desc.alpha_tilde).unwrap();
                match desc.case_id {
                    1 => {
                        assert_eq!(desc.j, 0);
                        assert_eq!(v.length(), v.compose(&refl).length() + 1);
                    }
                    2 => {
                        assert_eq!(desc.j, 1);
                        assert_eq!(v.length(), v.compose(&refl).length() + 1 - p2rho);
                    }
                    3 => {
                        assert_eq!(desc.j, pz);
                        assert_eq!(u.compose(&refl).length(), u.length() + 1);
                    }
                    4 => {
                        assert_eq!(desc.j, pz - 1);
                        assert_eq!(u.compose(&refl).length(), u.length() + 1 - p2rho);
                    }
                    other => panic!("unknown case {}", other),
                }
            }
        }
    }
    assert_eq!(count, 25);
}

#[test]
fn criterion_08_bounded_classification_gate() {
    let mut rng = sampling::rng(0xAC08);
    for sys in [a1(), a2()] {
        let mut done = 0;
        while done < 8 {
            // Candidate families depend only on the group data, so probe
            // them on a provisionally deep element, derive the bound M the
            // candidates need, and re-check the depth gate.
            let x = sampling::random_deep_dominant(&mut rng, &sys, 40, 2, 1);
            let d = decompose(&x).unwrap();
            let probe = cocovers_via_classification(&x).unwrap();
            let mut m = d.w.length();
            for desc in &probe {
                let va = d.v.act_affine_root(&desc.alpha_tilde).unwrap();
                let svw = AffineWeylElement::reflection(&va).compose(&d.w);
                m = m.max(svw.length());
            }
            let deep_enough =
                (0..=sys.rank()).all(|i| d.zeta_plus.pairing_simple(i).unwrap() >= 2 * (m + 1));
            if !deep_enough {
                continue;
            }
            done += 1;

            let classified = classify_cocovers_qbg(&x, m).unwrap();
            let fast_y: BTreeSet<SemigroupElement> =
                classified.iter().map(|d| d.y.clone()).collect();
            let all_y: BTreeSet<SemigroupElement> = cocovers(&x)
                .unwrap()
                .into_iter()
                .map(|c| c.y)
                .collect();
            assert_eq!(fast_y, all_y, "x = {:?}, M = {}", x, m);

            // The pi-coefficient window: 0 <= j <= M or
            // <zeta, alpha~> - M <= j <= <zeta, alpha~>.
            for desc in &classified {
                let pz = d.zeta_plus.pairing_affine_root(&desc.alpha_tilde).unwrap();
                assert!(
                    (0..=m).contains(&desc.j) || (pz - m..=pz).contains(&desc.j),
                    "j = {} outside the window for M = {}, <zeta, a~> = {}",
                    desc.j,
                    m,
                    pz
                );
            }
        }
    }
}

#[test]
fn criterion_09_graph_geometry() {
    let mut rng = sampling::rng(0xAC09);

    // rotate180 agrees with the negated reflection on 500 same-finite-part
    // pairs.
    let s = a2();
    for _ in 0..500 {
        let nu = sampling::random_root(&mut rng, &s);
        let alpha = DoubleAffineRoot::new(
            nu.clone(),
            sampling::range(&mut rng, -5, 5),
            sampling::range(&mut rng, -5, 5),
        );
        let beta = DoubleAffineRoot::new(
            nu,
            sampling::range(&mut rng, -5, 5),
            sampling::range(&mut rng, -5, 5),
        );
        assert_eq!(
            rotate180(&beta, &alpha).unwrap(),
            alpha.reflect(&beta).unwrap().negated()
        );
    }

    for sys in [a1(), a2()] {
        for _ in 0..20 {
            let x = sampling::random_semigroup(&mut rng, &sys, 2, 3);

            // Corner necessity for enumerated cocovers, and the four
            // admissible pi-levels for corners.
            for c in cocovers(&x).unwrap() {
                assert!(is_corner(&x, &c.alpha).unwrap());
            }
            for nu in daws::root_system::all_roots(&sys) {
                let boundary =
                    |r: i64| -> i64 { -x.zeta().mu().pairing_root(&nu).unwrap() - x.level() * r };
                for corner in corners(&x, &nu).unwrap() {
                    let b = boundary(corner.r());
                    let j = corner.j();
                    assert!(
                        j == 0 || j == 1 || j == b || j == b - 1,
                        "corner {:?} off the four lines (boundary {})",
                        corner,
                        b
                    );
                }

                // Shape parameters agree with pointwise membership on the
                // boundary lattice points.
                let shape = gamma_shape(&x, &nu).unwrap();
                let (lo, hi) = shape.lower_edge().unwrap_or((1, 0));
                for r in lo - 3..=hi + 3 {
                    assert_eq!(
                        gamma_contains(&x, &nu, r, 0).unwrap(),
                        lo <= hi && (lo..=hi).contains(&r)
                    );
                }
                let um = shape.upper_max_r();
                for r in um - 3..=um + 3 {
                    let j = shape.boundary_j(r);
                    if j >= 0 {
                        assert_eq!(gamma_contains(&x, &nu, r, j).unwrap(), r <= um);
                    }
                }
            }
        }
    }

    // Convexity and symmetry of the translation length profile on 50 seeded
    // (zeta, v~, alpha~) triples.
    for sys in [a1(), a2()] {
        for _ in 0..25 {
            let zeta = sampling::random_regular_dominant(&mut rng, &sys, 2);
            let v = sampling::random_affine(&mut rng, &sys, 3);
            let alpha = {
                let mut a = sampling::random_affine_root(&mut rng, &sys, 2);
                if !a.is_positive() {
                    a = a.negated();
                }
                a
            };
            let n = zeta.pairing_affine_root(&alpha).unwrap();
            let f = |j: i64| -> i64 {
                let shifted = zeta.minus_root_multiple(&alpha, j);
                SemigroupElement::from_parts(
                    v.act_weight(&shifted).unwrap(),
                    AffineWeylElement::identity(&sys),
                )
                .unwrap()
                .length()
            };
            for j in 0..=n {
                assert_eq!(f(j), f(n - j));
            }
            for j in 1..n {
                assert!(f(j - 1) + f(j + 1) >= 2 * f(j));
            }
        }
    }
}

#[test]
fn criterion_10_duality_and_finiteness() {
    let mut rng = sampling::rng(0xAC10);
    for sys in [a1(), a2()] {
        for _ in 0..25 {
            let x = sampling::random_semigroup(&mut rng, &sys, 2, 3);

            // Enumerations terminate without tripping safety caps.
            let ups = covers(&x).expect("covers terminates");
            let downs = cocovers(&x).expect("cocovers terminates");

            // Duality in both directions on the enumerated edges.
            for (_, y) in &ups {
                let back: Vec<SemigroupElement> =
                    cocovers(y).unwrap().into_iter().map(|c| c.y).collect();
                assert!(back.contains(&x));
            }
            for c in &downs {
                let fore: Vec<SemigroupElement> =
                    covers(&c.y).unwrap().into_iter().map(|(_, z)| z).collect();
                assert!(fore.contains(&x));
            }

            // Intervals are finite with member lengths inside the bracket.
            if let Some(c) = downs.first() {
                let deeper = cocovers(&c.y).unwrap();
                let bottom = deeper.first().map(|d| d.y.clone()).unwrap_or(c.y.clone());
                let iv = interval(&bottom, &x).unwrap();
                assert!(iv.contains(&bottom) && iv.contains(&x));
                for z in &iv {
                    assert!((bottom.length()..=x.length()).contains(&z.length()));
                }
            }
        }
    }
}
