//! Oracle agreement suites behind the `selftest` subcommand. Each suite
//! cross-checks a closed-form path against an independent brute-force one;
//! any mismatch is reported and the command exits nonzero.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use daws::{oracle, sampling, *};

pub struct Report {
    pub output: String,
    pub failures: usize,
}

fn systems() -> Vec<Arc<RootSystem>> {
    vec![
        RootSystem::new(TypeLabel::A, 1).unwrap(),
        RootSystem::new(TypeLabel::A, 2).unwrap(),
    ]
}

pub fn run(seed: u64) -> Report {
    let mut out = String::new();
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool, detail: String| {
        if ok {
            writeln!(out, "ok   {}", name).unwrap();
        } else {
            failures += 1;
            writeln!(out, "FAIL {}: {}", name, detail).unwrap();
        }
    };

    // Lengths against the word oracle, exhaustive to length 4.
    {
        let mut bad = String::new();
        for sys in systems() {
            for (w, depth) in oracle::affine_ball(&sys, 4) {
                if w.length() != depth as i64 {
                    let _ = write!(bad, "{:?} ", w);
                }
            }
        }
        check("affine length vs word BFS", bad.is_empty(), bad);
    }

    // Product length identity on seeded pairs.
    {
        let mut rng = sampling::rng(seed ^ 0x1);
        let mut bad = String::new();
        for sys in systems() {
            for _ in 0..40 {
                let x = sampling::random_affine(&mut rng, &sys, 6);
                let y = sampling::random_affine(&mut rng, &sys, 6);
                if !length_product_identity_holds(&x, &y) {
                    let _ = write!(bad, "{:?}*{:?} ", x, y);
                }
            }
        }
        check("product length identity", bad.is_empty(), bad);
    }

    // Split length against the direct definition.
    {
        let mut rng = sampling::rng(seed ^ 0x2);
        let mut bad = String::new();
        for sys in systems() {
            for _ in 0..40 {
                let zeta = sampling::random_regular_dominant(&mut rng, &sys, 1);
                let v = sampling::random_affine(&mut rng, &sys, 4);
                let w = sampling::random_affine(&mut rng, &sys, 4);
                let x = assemble(&zeta, &v, &w).unwrap();
                if length_split(&zeta, &v, &w).unwrap() != x.length() {
                    let _ = write!(bad, "{:?} ", x);
                }
            }
        }
        check("split length vs direct length", bad.is_empty(), bad);
    }

    // Length difference sets count the drop / raise, and the windowed scan
    // agrees with the closed-form enumeration.
    {
        let mut rng = sampling::rng(seed ^ 0x3);
        let mut bad = String::new();
        for sys in systems() {
            for _ in 0..20 {
                let (x, alpha) = sampling::random_downward_pair(&mut rng, &sys);
                let lds = length_diff_set(&x, &alpha).unwrap();
                let y = apply_reflection_left(&alpha, &x).unwrap();
                if lds.members.len() as i64 != x.length() - y.length() {
                    let _ = write!(bad, "L size {:?} ", x);
                }
                let window = oracle::ScanWindow {
                    r_min: -12,
                    r_max: 12,
                    j_min: 0,
                    j_max: 12,
                    cap: 500_000,
                };
                let scanned = oracle::length_diff_scan(&x, &alpha, &window).unwrap();
                let within: BTreeSet<DoubleAffineRoot> = lds
                    .members
                    .iter()
                    .filter(|b| window.contains(b.r(), b.j()))
                    .cloned()
                    .collect();
                if scanned != within {
                    let _ = write!(bad, "L scan {:?} ", x);
                }
            }
            for _ in 0..20 {
                let (x, beta) = sampling::random_upward_pair(&mut rng, &sys);
                let u = cover_diff_set(&x, &beta).unwrap();
                let y = apply_reflection_left(&beta, &x).unwrap();
                if u.members.len() as i64 != y.length() - x.length() {
                    let _ = write!(bad, "U size {:?} ", x);
                }
            }
        }
        check("length difference sets", bad.is_empty(), bad);
    }

    // Deep-dominant classification equals the corner fallback.
    {
        let mut rng = sampling::rng(seed ^ 0x4);
        let mut bad = String::new();
        for sys in systems() {
            for _ in 0..4 {
                let x = sampling::random_deep_dominant(&mut rng, &sys, 3, 2, 2);
                let fast: BTreeSet<DoubleAffineRoot> = cocovers_via_classification(&x)
                    .unwrap()
                    .into_iter()
                    .map(|d| d.alpha)
                    .collect();
                let slow: BTreeSet<DoubleAffineRoot> = cocovers_via_corners(&x)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.alpha)
                    .collect();
                if fast != slow {
                    let _ = write!(bad, "{:?} ", x);
                }
            }
        }
        check("classification vs corner fallback", bad.is_empty(), bad);
    }

    // Cover/cocover duality.
    {
        let mut rng = sampling::rng(seed ^ 0x5);
        let mut bad = String::new();
        for sys in systems() {
            for _ in 0..10 {
                let x = sampling::random_semigroup(&mut rng, &sys, 2, 3);
                for (_, y) in covers(&x).unwrap() {
                    let back: Vec<SemigroupElement> =
                        cocovers(&y).unwrap().into_iter().map(|c| c.y).collect();
                    if !back.contains(&x) {
                        let _ = write!(bad, "{:?}->{:?} ", x, y);
                    }
                }
            }
        }
        check("cover/cocover duality", bad.is_empty(), bad);
    }

    // Rotation formula against the reflection action.
    {
        let mut rng = sampling::rng(seed ^ 0x6);
        let mut bad = 0usize;
        for sys in systems() {
            for _ in 0..100 {
                let nu = sampling::random_root(&mut rng, &sys);
                let a = DoubleAffineRoot::new(
                    nu.clone(),
                    sampling::range(&mut rng, -5, 5),
                    sampling::range(&mut rng, -5, 5),
                );
                let b = DoubleAffineRoot::new(
                    nu,
                    sampling::range(&mut rng, -5, 5),
                    sampling::range(&mut rng, -5, 5),
                );
                if rotate180(&b, &a).unwrap() != a.reflect(&b).unwrap().negated() {
                    bad += 1;
                }
            }
        }
        check("rotation vs reflection", bad == 0, format!("{} mismatches", bad));
    }

    // Interval by cocover descent vs saturated chains through covers.
    {
        let mut rng = sampling::rng(seed ^ 0x7);
        let mut bad = String::new();
        for sys in systems() {
            for _ in 0..5 {
                let x = sampling::random_semigroup(&mut rng, &sys, 2, 2);
                let Some(c1) = cocovers(&x).unwrap().into_iter().next() else {
                    continue;
                };
                let Some(c2) = cocovers(&c1.y).unwrap().into_iter().next() else {
                    continue;
                };
                let bottom = c2.y;
                let via_descent = interval(&bottom, &x).unwrap();
                let via_chains = oracle::interval_chains(&bottom, &x, 2).unwrap();
                if via_descent != via_chains {
                    let _ = write!(bad, "{:?} ", x);
                }
            }
        }
        check("interval vs cover chains", bad.is_empty(), bad);
    }

    Report {
        output: out,
        failures,
    }
}
