//! Independent brute-force implementations used for cross-validation in
//! tests and the CLI selftest: word-BFS lengths, windowed scans for
//! inversion sets, graph membership, length difference sets and corners,
//! and saturated-chain interval search through `covers` only.
//!
//! Oracles prefer transparency over speed: direct condition evaluation, no
//! closed forms. Windows are explicit arguments so each test documents its
//! own completeness assumptions, and every scan fails loudly at its cap.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use crate::affine::{AffineRoot, AffineWeylElement};
use crate::bruhat::{self, rotate180};
use crate::double_affine::{apply_reflection_left, DoubleAffineRoot, SemigroupElement};
use crate::error::{Error, Result};
use crate::root_system::{all_roots, Root, RootSystem};

/// Rectangular scan window with a hard cap on visited points.
#[derive(Clone, Copy, Debug)]
pub struct ScanWindow {
    pub r_min: i64,
    pub r_max: i64,
    pub j_min: i64,
    pub j_max: i64,
    pub cap: usize,
}

impl ScanWindow {
    pub fn contains(&self, r: i64, j: i64) -> bool {
        (self.r_min..=self.r_max).contains(&r) && (self.j_min..=self.j_max).contains(&j)
    }
}

/// Shortest word over s_0..s_n equal to the target, or None beyond max_len.
pub fn aff_length_bfs(target: &AffineWeylElement, max_len: usize) -> Option<usize> {
    let sys = Arc::clone(target.system());
    let gens: Vec<AffineWeylElement> = (0..=sys.rank())
        .map(|i| AffineWeylElement::simple(&sys, i).unwrap())
        .collect();
    let mut seen: BTreeSet<AffineWeylElement> = BTreeSet::new();
    let mut frontier = vec![AffineWeylElement::identity(&sys)];
    seen.insert(frontier[0].clone());
    if target.is_identity() {
        return Some(0);
    }
    for depth in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let cand = w.compose(g);
                if seen.insert(cand.clone()) {
                    if &cand == target {
                        return Some(depth);
                    }
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    None
}

/// All elements of word length at most `radius`, with their word lengths.
pub fn affine_ball(sys: &Arc<RootSystem>, radius: usize) -> Vec<(AffineWeylElement, usize)> {
    let gens: Vec<AffineWeylElement> = (0..=sys.rank())
        .map(|i| AffineWeylElement::simple(sys, i).unwrap())
        .collect();
    let mut seen: BTreeMap<AffineWeylElement, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let id = AffineWeylElement::identity(sys);
    seen.insert(id.clone(), 0);
    queue.push_back((id, 0usize));
    while let Some((w, d)) = queue.pop_front() {
        if d == radius {
            continue;
        }
        for g in &gens {
            let cand = w.compose(g);
            if !seen.contains_key(&cand) {
                seen.insert(cand.clone(), d + 1);
                queue.push_back((cand, d + 1));
            }
        }
    }
    seen.into_iter().collect()
}

/// Windowed inversion scan: positive roots with |delta coefficient| bounded
/// that the element sends negative.
pub fn inversions_scan(w: &AffineWeylElement, r_bound: i64) -> BTreeSet<AffineRoot> {
    let sys = Arc::clone(w.system());
    let mut out = BTreeSet::new();
    for nu in all_roots(&sys) {
        for r in -r_bound..=r_bound {
            let alpha = AffineRoot::new(nu.clone(), r);
            if alpha.is_positive() && !w.act_affine_root(&alpha).unwrap().is_positive() {
                out.insert(alpha);
            }
        }
    }
    out
}

/// Windowed evaluation of the four length-difference conditions.
pub fn length_diff_scan(
    x: &SemigroupElement,
    alpha: &DoubleAffineRoot,
    window: &ScanWindow,
) -> Result<BTreeSet<DoubleAffineRoot>> {
    if x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    let xinv = x.inverse_extended();
    let sys = Arc::clone(x.system());
    let mut out = BTreeSet::new();
    let mut scanned = 0usize;
    for gamma in all_roots(&sys) {
        for p in window.r_min..=window.r_max {
            for q in window.j_min..=window.j_max {
                scanned += 1;
                if scanned > window.cap {
                    return Err(Error::CapExceeded {
                        what: "length_diff_scan",
                        cap: window.cap,
                    });
                }
                let beta = DoubleAffineRoot::new(gamma.clone(), p, q);
                if !beta.is_positive() || xinv.act_root(&beta)?.is_positive() {
                    continue;
                }
                let refl = alpha.reflect(&beta)?;
                if !refl.is_positive() && xinv.act_root(&refl)?.is_positive() {
                    out.insert(beta);
                }
            }
        }
    }
    Ok(out)
}

/// Lattice points of the lower graph inside the window.
pub fn gamma_scan(
    x: &SemigroupElement,
    nu: &Root,
    window: &ScanWindow,
) -> Result<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    let mut scanned = 0usize;
    for r in window.r_min..=window.r_max {
        for j in window.j_min..=window.j_max {
            scanned += 1;
            if scanned > window.cap {
                return Err(Error::CapExceeded {
                    what: "gamma_scan",
                    cap: window.cap,
                });
            }
            if bruhat::gamma_contains(x, nu, r, j)? {
                out.push((r, j));
            }
        }
    }
    Ok(out)
}

/// Corners of the lower graph found by scanning graph points in the window
/// and checking every same-window witness pair; exact whenever the window
/// contains the witness region of each reported point.
pub fn corner_scan(
    x: &SemigroupElement,
    nu: &Root,
    window: &ScanWindow,
) -> Result<Vec<DoubleAffineRoot>> {
    let pts = gamma_scan(x, nu, window)?;
    let mut out = Vec::new();
    for &(r, j) in &pts {
        let alpha = DoubleAffineRoot::new(nu.clone(), r, j);
        let mut corner = true;
        for &(p, q) in &pts {
            if (p, q) == (r, j) {
                continue;
            }
            let beta = DoubleAffineRoot::new(nu.clone(), p, q);
            let rot = rotate180(&beta, &alpha)?;
            if bruhat::gamma_contains(x, nu, rot.r(), rot.j())? {
                corner = false;
                break;
            }
        }
        if corner {
            out.push(alpha);
        }
    }
    Ok(out)
}

/// Cover roots found inside a window by the raw length criterion.
pub fn covers_scan(
    x: &SemigroupElement,
    window: &ScanWindow,
) -> Result<Vec<DoubleAffineRoot>> {
    if x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    let xinv = x.inverse_extended();
    let sys = Arc::clone(x.system());
    let lx = x.length();
    let mut out = Vec::new();
    let mut scanned = 0usize;
    for nu in all_roots(&sys) {
        for r in window.r_min..=window.r_max {
            for j in window.j_min..=window.j_max {
                scanned += 1;
                if scanned > window.cap {
                    return Err(Error::CapExceeded {
                        what: "covers_scan",
                        cap: window.cap,
                    });
                }
                let beta = DoubleAffineRoot::new(nu.clone(), r, j);
                if !beta.is_positive() || !xinv.act_root(&beta)?.is_positive() {
                    continue;
                }
                let y = apply_reflection_left(&beta, x)?;
                if y.length() - lx == 1 {
                    out.push(beta);
                }
            }
        }
    }
    Ok(out)
}

/// Every element on a saturated cover chain from y to x, built through
/// `covers` only; an independent path from the cocover descent used by
/// `interval`.
pub fn interval_chains(
    y: &SemigroupElement,
    x: &SemigroupElement,
    max_depth: usize,
) -> Result<BTreeSet<SemigroupElement>> {
    if y.level() <= 0 || x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    let depth = x.length() - y.length();
    let mut out = BTreeSet::new();
    if depth < 0 {
        return Ok(out);
    }
    if depth as usize > max_depth {
        return Err(Error::DepthExceeded);
    }
    if depth == 0 {
        if y == x {
            out.insert(x.clone());
        }
        return Ok(out);
    }

    let mut covers_memo: HashMap<SemigroupElement, Vec<SemigroupElement>> = HashMap::new();
    let mut covers_of = |z: &SemigroupElement| -> Result<Vec<SemigroupElement>> {
        if let Some(v) = covers_memo.get(z) {
            return Ok(v.clone());
        }
        let v: Vec<SemigroupElement> = bruhat::covers(z)?.into_iter().map(|(_, e)| e).collect();
        covers_memo.insert(z.clone(), v.clone());
        Ok(v)
    };

    // Forward layers from y, then prune backward from x.
    let mut layers: Vec<BTreeSet<SemigroupElement>> = vec![[y.clone()].into_iter().collect()];
    for d in 1..=depth as usize {
        let mut layer = BTreeSet::new();
        for z in &layers[d - 1] {
            for c in covers_of(z)? {
                layer.insert(c);
            }
        }
        layers.push(layer);
    }
    if !layers[depth as usize].contains(x) {
        return Ok(out);
    }
    let mut marked: BTreeSet<SemigroupElement> = [x.clone()].into_iter().collect();
    out.extend(marked.iter().cloned());
    for d in (0..depth as usize).rev() {
        let mut next_marked = BTreeSet::new();
        for z in &layers[d] {
            if covers_of(z)?.iter().any(|c| marked.contains(c)) {
                next_marked.insert(z.clone());
            }
        }
        out.extend(next_marked.iter().cloned());
        marked = next_marked;
    }
    Ok(out)
}
