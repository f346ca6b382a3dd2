//! Seeded random generators for the randomized agreement suites (tests and
//! the CLI selftest). Everything is driven by an explicit ChaCha stream so
//! suites are reproducible from a single seed.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::affine::{AffineRoot, AffineWeight, AffineWeylElement};
use crate::double_affine::{DoubleAffineRoot, SemigroupElement};
use crate::root_system::{positive_roots, Root, RootSystem, Weight};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn range(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    rng.gen_range(lo..=hi)
}

pub fn random_word(rng: &mut ChaCha8Rng, sys: &Arc<RootSystem>, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..=sys.rank())).collect()
}

pub fn random_affine(
    rng: &mut ChaCha8Rng,
    sys: &Arc<RootSystem>,
    max_len: usize,
) -> AffineWeylElement {
    let word = random_word(rng, sys, max_len);
    AffineWeylElement::from_word(sys, &word).expect("indices in range")
}

pub fn random_root(rng: &mut ChaCha8Rng, sys: &Arc<RootSystem>) -> Root {
    let pos = positive_roots(sys);
    let nu = pos[rng.gen_range(0..pos.len())].clone();
    if rng.gen_bool(0.5) {
        nu
    } else {
        nu.negated()
    }
}

pub fn random_affine_root(rng: &mut ChaCha8Rng, sys: &Arc<RootSystem>, max_r: i64) -> AffineRoot {
    AffineRoot::new(random_root(rng, sys), range(rng, -max_r, max_r))
}

pub fn random_double_affine_root(
    rng: &mut ChaCha8Rng,
    sys: &Arc<RootSystem>,
    max_r: i64,
    max_j: i64,
) -> DoubleAffineRoot {
    DoubleAffineRoot::new(
        random_root(rng, sys),
        range(rng, -max_r, max_r),
        range(rng, -max_j, max_j),
    )
}

/// A positive-level affine weight with small coordinates.
pub fn random_tits_weight(
    rng: &mut ChaCha8Rng,
    sys: &Arc<RootSystem>,
    spread: i64,
) -> AffineWeight {
    let mu = Weight::new(
        sys,
        (0..sys.rank()).map(|_| range(rng, -spread, spread)).collect(),
    );
    AffineWeight::new(mu, range(rng, -spread, spread), range(rng, 1, 3))
}

pub fn random_semigroup(
    rng: &mut ChaCha8Rng,
    sys: &Arc<RootSystem>,
    spread: i64,
    word_len: usize,
) -> SemigroupElement {
    let zeta = random_tits_weight(rng, sys, spread);
    let w = random_affine(rng, sys, word_len);
    SemigroupElement::from_parts(zeta, w).expect("positive level")
}

/// A regular dominant weight with every simple pairing at least `min`.
pub fn random_regular_dominant(
    rng: &mut ChaCha8Rng,
    sys: &Arc<RootSystem>,
    min: i64,
) -> AffineWeight {
    let mu = Weight::new(
        sys,
        (0..sys.rank()).map(|_| range(rng, min, min + 3)).collect(),
    );
    let theta = Root::theta(sys);
    let l = mu.pairing_root(&theta).unwrap() + min + range(rng, 0, 3);
    AffineWeight::new(mu, range(rng, -2, 2), l)
}

/// x = X^{v~(zeta)} w~ with zeta regular dominant and every simple pairing
/// strictly above `min_pairing`.
pub fn random_deep_dominant(
    rng: &mut ChaCha8Rng,
    sys: &Arc<RootSystem>,
    min_pairing: i64,
    v_len: usize,
    w_len: usize,
) -> SemigroupElement {
    let zeta = random_regular_dominant(rng, sys, min_pairing);
    let v = random_affine(rng, sys, v_len);
    let w = random_affine(rng, sys, w_len);
    SemigroupElement::from_parts(v.act_weight(&zeta).unwrap(), w).expect("positive level")
}

/// (x, alpha) with alpha positive and x^-1(alpha) negative.
pub fn random_downward_pair(
    rng: &mut ChaCha8Rng,
    sys: &Arc<RootSystem>,
) -> (SemigroupElement, DoubleAffineRoot) {
    loop {
        let x = random_semigroup(rng, sys, 2, 3);
        let xinv = x.inverse_extended();
        for _ in 0..40 {
            let alpha = DoubleAffineRoot::new(
                random_root(rng, sys),
                range(rng, -6, 3),
                range(rng, 0, 6),
            );
            if alpha.is_positive() && !xinv.act_root(&alpha).unwrap().is_positive() {
                return (x, alpha);
            }
        }
    }
}

/// (x, beta) with beta positive and x^-1(beta) positive.
pub fn random_upward_pair(
    rng: &mut ChaCha8Rng,
    sys: &Arc<RootSystem>,
) -> (SemigroupElement, DoubleAffineRoot) {
    loop {
        let x = random_semigroup(rng, sys, 2, 3);
        let xinv = x.inverse_extended();
        for _ in 0..40 {
            let beta = DoubleAffineRoot::new(
                random_root(rng, sys),
                range(rng, -3, 6),
                range(rng, 0, 6),
            );
            if beta.is_positive() && xinv.act_root(&beta).unwrap().is_positive() {
                return (x, beta);
            }
        }
    }
}
