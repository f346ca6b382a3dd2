//! The double affine Bruhat order: lower graphs and their corners, length
//! difference sets, cocover and cover enumeration, order comparison, and
//! finite interval enumeration.
//!
//! Boundary tiebreaks in graph membership follow the closed-form
//! characterization: the j = 0 segment needs r >= 0 (and nu > 0 at r = 0),
//! the boundary ray needs the affine part of x^-1(alpha) to be negative.
//! All membership tests evaluate the definition directly (alpha > 0 and
//! x^-1(alpha) < 0); closed forms are used only to bound enumeration
//! windows, which level > 0 keeps finite.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::affine::{AffineRoot, AffineWeylElement};
use crate::double_affine::{
    apply_reflection_left, decompose, DoubleAffineRoot, ExtendedElement, SemigroupElement,
};
use crate::error::{Error, Result};
use crate::root_system::{all_roots, div_ceil, div_floor, positive_roots, Root, RootSystem};

/// Default safety cap on enumeration scans. Reaching it is an error, never
/// silent truncation; finiteness of the scanned sets is a theorem.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Membership context for the graphs of one element: x^-1 is fixed once.
struct GammaCtx {
    xinv: ExtendedElement,
}

impl GammaCtx {
    fn new(x: &SemigroupElement) -> Result<GammaCtx> {
        if x.level() <= 0 {
            return Err(Error::LevelZero);
        }
        Ok(GammaCtx {
            xinv: x.inverse_extended(),
        })
    }

    /// alpha > 0 and x^-1(alpha) < 0.
    fn lower(&self, alpha: &DoubleAffineRoot) -> bool {
        alpha.is_positive() && {
            let img = self.xinv.act_root(alpha).expect("same system");
            !img.is_positive()
        }
    }

    /// alpha > 0 and x^-1(alpha) > 0.
    fn upper(&self, alpha: &DoubleAffineRoot) -> bool {
        alpha.is_positive() && {
            let img = self.xinv.act_root(alpha).expect("same system");
            img.is_positive()
        }
    }

    fn lower_at(&self, nu: &Root, r: i64, j: i64) -> bool {
        self.lower(&DoubleAffineRoot::new(nu.clone(), r, j))
    }

    fn upper_at(&self, nu: &Root, r: i64, j: i64) -> bool {
        self.upper(&DoubleAffineRoot::new(nu.clone(), r, j))
    }
}

/// Per-nu boundary parameters of the graphs of x: the outer boundary line is
/// j = -k - level * r, and the j = -<zeta', alpha~> ray is cut by the affine
/// tiebreak at r = -a.
struct NuParams {
    k: i64,
    level: i64,
    a: i64,
    w_inv_nu_neg: bool,
    nu_positive: bool,
}

fn nu_params(x: &SemigroupElement, nu: &Root) -> Result<NuParams> {
    if x.system().key() != nu.system().key() {
        return Err(Error::SystemMismatch);
    }
    let k = x.zeta().mu().pairing_root(nu)?;
    let lambda = x.group_part().lambda();
    let a = x.system().pair_rr(lambda, nu.coords());
    let w_inv_nu = x
        .group_part()
        .finite_part()
        .inverse()
        .act_root(nu)
        .expect("same system");
    Ok(NuParams {
        k,
        level: x.level(),
        a,
        w_inv_nu_neg: !w_inv_nu.is_positive(),
        nu_positive: nu.is_positive(),
    })
}

impl NuParams {
    fn c(&self, r: i64) -> i64 {
        -self.k - self.level * r
    }
}

/// Whether nu + r delta + j pi corresponds to a point of the lower graph
/// of x for nu: positive and sent negative by x^-1.
pub fn gamma_contains(x: &SemigroupElement, nu: &Root, r: i64, j: i64) -> Result<bool> {
    let ctx = GammaCtx::new(x)?;
    if x.system().key() != nu.system().key() {
        return Err(Error::SystemMismatch);
    }
    Ok(ctx.lower_at(nu, r, j))
}

/// Lower outer edge forms: endpoints of the j = 0 segment open or closed,
/// starred when no interior lattice point is present.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerEdgeKind {
    L1,
    L1Star,
    L2,
    L3,
    L4,
    L4Star,
}

/// Upper outer edge forms: U4 is the only one containing the intersection
/// point of the two boundary lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpperEdgeKind {
    U1,
    U2,
    U3,
    U4,
}

/// Shape of a lower graph: the realized outer edges of the region
/// `{(r, j) : alpha = nu + r delta + j pi > 0, x^-1(alpha) < 0}` together
/// with its boundary parameters.
#[derive(Clone, Debug)]
pub struct LowerGraph {
    nu: Root,
    level: i64,
    k: i64,
    a: i64,
    w_inv_nu_neg: bool,
    lower: Option<(i64, i64)>,
    upper_max_r: i64,
    intersection_included: bool,
    lower_kind: LowerEdgeKind,
    upper_kind: UpperEdgeKind,
}

impl LowerGraph {
    pub fn nu(&self) -> &Root {
        &self.nu
    }

    /// The boundary line j = -<zeta', nu + r delta> = -k - level * r.
    pub fn boundary_j(&self, r: i64) -> i64 {
        -self.k - self.level * r
    }

    /// Inclusive r-range of the included part of the j = 0 edge, if any.
    pub fn lower_edge(&self) -> Option<(i64, i64)> {
        self.lower
    }

    /// Largest r whose boundary-line point lies in the graph; every smaller
    /// r on the visible part of the ray also does.
    pub fn upper_max_r(&self) -> i64 {
        self.upper_max_r
    }

    /// The affine tiebreak: whether points at r = -<lambda, nu> on the
    /// boundary line are included (w^-1(nu) < 0).
    pub fn upper_cut_included(&self) -> bool {
        self.w_inv_nu_neg
    }

    pub fn upper_cut_r(&self) -> i64 {
        -self.a
    }

    pub fn intersection_included(&self) -> bool {
        self.intersection_included
    }

    pub fn shape(&self) -> (LowerEdgeKind, UpperEdgeKind) {
        (self.lower_kind, self.upper_kind)
    }
}

/// Classifies the outer edges of the lower graph of x for nu.
pub fn gamma_shape(x: &SemigroupElement, nu: &Root) -> Result<LowerGraph> {
    let ctx = GammaCtx::new(x)?;
    let p = nu_params(x, nu)?;
    let l = p.level;

    // Largest r with boundary value >= 1, i.e. the last lattice column where
    // the strict part of the boundary ray is visible.
    let r_strict_hi = div_floor(-p.k - 1, l);
    // Largest r passing the affine tiebreak on the boundary line.
    let a_hi = -p.a - 1 + i64::from(p.w_inv_nu_neg);

    // Intersection point of j = 0 with the boundary line, when integral.
    let intersection = if p.k % l == 0 { Some(-p.k / l) } else { None };
    let intersection_included =
        intersection.is_some_and(|rb| ctx.lower_at(nu, rb, 0));

    let lo0 = i64::from(!p.nu_positive);
    let hi0 = if intersection_included {
        // The intersection point extends the strict segment by one column.
        r_strict_hi + 1
    } else {
        r_strict_hi
    };
    let lower = if lo0 <= hi0 { Some((lo0, hi0)) } else { None };

    let upper_strict_max = r_strict_hi.min(a_hi);
    let upper_max_r = match (intersection_included, intersection) {
        (true, Some(rb)) => rb,
        _ => upper_strict_max,
    };

    let left_closed = ctx.lower_at(nu, 0, 0);
    let interior = r_strict_hi >= 1;
    let lower_kind = match (left_closed, intersection_included) {
        (true, false) => LowerEdgeKind::L2,
        (false, true) => LowerEdgeKind::L3,
        (true, true) => {
            if interior {
                LowerEdgeKind::L4
            } else {
                LowerEdgeKind::L4Star
            }
        }
        (false, false) => {
            if interior {
                LowerEdgeKind::L1
            } else {
                LowerEdgeKind::L1Star
            }
        }
    };
    let upper_kind = if intersection_included {
        UpperEdgeKind::U4
    } else if a_hi < r_strict_hi {
        if p.w_inv_nu_neg {
            UpperEdgeKind::U2
        } else {
            UpperEdgeKind::U1
        }
    } else {
        UpperEdgeKind::U3
    };

    Ok(LowerGraph {
        nu: nu.clone(),
        level: l,
        k: p.k,
        a: p.a,
        w_inv_nu_neg: p.w_inv_nu_neg,
        lower,
        upper_max_r,
        intersection_included,
        lower_kind,
        upper_kind,
    })
}

/// Rotates beta 180 degrees about alpha in the (delta, pi) plane; requires
/// equal finite parts, and then equals -s_alpha(beta).
pub fn rotate180(beta: &DoubleAffineRoot, alpha: &DoubleAffineRoot) -> Result<DoubleAffineRoot> {
    if beta.fin() != alpha.fin() {
        return Err(Error::FinitePartMismatch);
    }
    Ok(DoubleAffineRoot::new(
        alpha.fin().clone(),
        2 * alpha.r() - beta.r(),
        2 * alpha.j() - beta.j(),
    ))
}

/// Whether alpha is a corner of the lower graph of x for fin(alpha): no
/// other same-finite-part graph point rotates through alpha into the graph.
pub fn is_corner(x: &SemigroupElement, alpha: &DoubleAffineRoot) -> Result<bool> {
    is_corner_with_cap(x, alpha, DEFAULT_CAP)
}

pub fn is_corner_with_cap(
    x: &SemigroupElement,
    alpha: &DoubleAffineRoot,
    cap: usize,
) -> Result<bool> {
    let ctx = GammaCtx::new(x)?;
    if !ctx.lower(alpha) {
        return Err(Error::NotInGraph);
    }
    let nu = alpha.fin();
    let p = nu_params(x, nu)?;
    let (r, j) = (alpha.r(), alpha.j());
    let mut scanned = 0usize;
    // A witness pair (beta, rotation) needs both pi-parts in [0, boundary],
    // which pins q to [0, 2j] and p to a closed interval per q.
    for q in 0..=2 * j {
        let phi = div_floor(-p.k - q, p.level);
        let plo = div_ceil(2 * j - q + p.k + 2 * p.level * r, p.level);
        for pp in plo..=phi {
            if (pp, q) == (r, j) {
                continue;
            }
            scanned += 1;
            if scanned > cap {
                return Err(Error::CapExceeded {
                    what: "is_corner",
                    cap,
                });
            }
            if ctx.lower_at(nu, pp, q) && ctx.lower_at(nu, 2 * r - pp, 2 * j - q) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Corner candidates: the whole j = 0 segment, plus the maximal graph point
/// on each of the boundary ray, the shifted boundary ray, and the j = 1 ray.
/// Corners can live nowhere else.
fn corner_candidates(x: &SemigroupElement, nu: &Root) -> Result<Vec<DoubleAffineRoot>> {
    let ctx = GammaCtx::new(x)?;
    let p = nu_params(x, nu)?;
    let shape = gamma_shape(x, nu)?;
    let l = p.level;
    let mut out: BTreeSet<DoubleAffineRoot> = BTreeSet::new();

    if let Some((lo, hi)) = shape.lower_edge() {
        for r in lo..=hi {
            out.insert(DoubleAffineRoot::new(nu.clone(), r, 0));
        }
    }

    // Maximal point of the boundary ray (the intersection point when it is
    // included).
    let um = shape.upper_max_r();
    let upper_pt = DoubleAffineRoot::new(nu.clone(), um, shape.boundary_j(um));
    if ctx.lower(&upper_pt) {
        out.insert(upper_pt);
    }

    // Maximal point of the shifted ray j = boundary - 1; always interior.
    let r_inner = div_floor(-p.k - 2, l);
    let inner_pt = DoubleAffineRoot::new(nu.clone(), r_inner, p.c(r_inner) - 1);
    if inner_pt.j() >= 1 {
        debug_assert!(ctx.lower(&inner_pt));
        out.insert(inner_pt);
    }

    // Maximal point of the j = 1 ray: the boundary point when it is a
    // lattice point of the graph, else the last strict-strip column.
    let r1 = if (p.k + 1) % l == 0 && ctx.lower_at(nu, (-p.k - 1) / l, 1) {
        (-p.k - 1) / l
    } else {
        r_inner
    };
    let pt = DoubleAffineRoot::new(nu.clone(), r1, 1);
    if ctx.lower(&pt) {
        out.insert(pt);
    }

    Ok(out.into_iter().collect())
}

/// All corners of the lower graph of x for nu, in canonical order.
pub fn corners(x: &SemigroupElement, nu: &Root) -> Result<Vec<DoubleAffineRoot>> {
    let mut out = Vec::new();
    for cand in corner_candidates(x, nu)? {
        if is_corner(x, &cand)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// The length difference set L_{x, alpha} = { beta > 0 : x^-1(beta) < 0,
/// s_alpha(beta) < 0, x^-1 s_alpha(beta) > 0 }; its size is
/// l(x) - l(s_alpha x).
#[derive(Clone, Debug)]
pub struct LengthDiffSet {
    pub alpha: DoubleAffineRoot,
    pub members: BTreeSet<DoubleAffineRoot>,
}

pub fn length_diff_set(x: &SemigroupElement, alpha: &DoubleAffineRoot) -> Result<LengthDiffSet> {
    length_diff_set_with_cap(x, alpha, DEFAULT_CAP)
}

pub fn length_diff_set_with_cap(
    x: &SemigroupElement,
    alpha: &DoubleAffineRoot,
    cap: usize,
) -> Result<LengthDiffSet> {
    let ctx = GammaCtx::new(x)?;
    if !alpha.is_positive() {
        return Err(Error::NotPositive);
    }
    if ctx.xinv.act_root(alpha)?.is_positive() {
        return Err(Error::NotDownward);
    }
    let sys = Arc::clone(x.system());
    let nu = alpha.fin();
    let ca = x.zeta().pairing_affine_root(&alpha.affine_part())?;
    let l = x.level();
    let mut members = BTreeSet::new();
    let mut scanned = 0usize;
    // Both beta and -s_alpha(beta) lie in lower graphs, so for each finite
    // part gamma the pi-parts satisfy 0 <= q and 0 <= k*j - q, and the
    // delta-parts fall in an interval cut out by the two boundary lines.
    for gamma in all_roots(&sys) {
        let k = nu.pairing(&gamma)?;
        let kk = x.zeta().mu().pairing_root(&gamma)?;
        let plo = div_ceil(k * ca - kk, l);
        let phi = div_floor(-kk, l);
        for pp in plo..=phi {
            let qhi = (-kk - l * pp).min(k * alpha.j());
            for q in 0..=qhi {
                scanned += 1;
                if scanned > cap {
                    return Err(Error::CapExceeded {
                        what: "length_diff_set",
                        cap,
                    });
                }
                let beta = DoubleAffineRoot::new(gamma.clone(), pp, q);
                if !ctx.lower(&beta) {
                    continue;
                }
                let reflected = alpha.reflect(&beta)?;
                if !reflected.is_positive() && ctx.xinv.act_root(&reflected)?.is_positive() {
                    members.insert(beta);
                }
            }
        }
    }
    debug_assert!(members.contains(alpha));
    Ok(LengthDiffSet {
        alpha: alpha.clone(),
        members,
    })
}

/// The mirrored set U_{x, beta} = { gamma > 0 : x^-1(gamma) > 0,
/// s_beta(gamma) < 0, x^-1 s_beta(gamma) < 0 }; its size is
/// l(s_beta x) - l(x).
#[derive(Clone, Debug)]
pub struct CoverDiffSet {
    pub beta: DoubleAffineRoot,
    pub members: BTreeSet<DoubleAffineRoot>,
}

pub fn cover_diff_set(x: &SemigroupElement, beta: &DoubleAffineRoot) -> Result<CoverDiffSet> {
    cover_diff_set_with_cap(x, beta, DEFAULT_CAP)
}

pub fn cover_diff_set_with_cap(
    x: &SemigroupElement,
    beta: &DoubleAffineRoot,
    cap: usize,
) -> Result<CoverDiffSet> {
    let ctx = GammaCtx::new(x)?;
    if !beta.is_positive() {
        return Err(Error::NotPositive);
    }
    if !ctx.xinv.act_root(beta)?.is_positive() {
        return Err(Error::NotUpward);
    }
    let sys = Arc::clone(x.system());
    let nu = beta.fin();
    let cb = x.zeta().pairing_affine_root(&beta.affine_part())?;
    let l = x.level();
    let mut members = BTreeSet::new();
    let mut scanned = 0usize;
    for gamma in all_roots(&sys) {
        let k = nu.pairing(&gamma)?;
        let qhi = k * beta.j();
        if qhi < 0 {
            continue;
        }
        let kk = x.zeta().mu().pairing_root(&gamma)?;
        let plo = div_ceil(-kk - qhi, l);
        let phi = div_floor(k * beta.j() - kk + k * cb, l);
        for pp in plo..=phi {
            for q in 0..=qhi {
                scanned += 1;
                if scanned > cap {
                    return Err(Error::CapExceeded {
                        what: "cover_diff_set",
                        cap,
                    });
                }
                let g = DoubleAffineRoot::new(gamma.clone(), pp, q);
                if !ctx.upper(&g) {
                    continue;
                }
                let reflected = beta.reflect(&g)?;
                if !reflected.is_positive() && !ctx.xinv.act_root(&reflected)?.is_positive() {
                    members.insert(g);
                }
            }
        }
    }
    debug_assert!(members.contains(beta));
    Ok(CoverDiffSet {
        beta: beta.clone(),
        members,
    })
}

/// Whether s_alpha x is a cocover of x, by the length criterion
/// l(x) = l(s_alpha x) + 1 (equivalently |L_{x, alpha}| = 1).
pub fn is_cocover(x: &SemigroupElement, alpha: &DoubleAffineRoot) -> Result<bool> {
    let ctx = GammaCtx::new(x)?;
    if !alpha.is_positive() {
        return Err(Error::NotPositive);
    }
    if ctx.xinv.act_root(alpha)?.is_positive() {
        return Err(Error::NotDownward);
    }
    let y = apply_reflection_left(alpha, x)?;
    Ok(x.length() - y.length() == 1)
}

fn is_cover_root(x: &SemigroupElement, beta: &DoubleAffineRoot) -> Result<bool> {
    let y = apply_reflection_left(beta, x)?;
    Ok(y.length() - x.length() == 1)
}

/// One entry of Theorem-style cocover classification: which of the four
/// families applies, the affine root behind it, the pi-coefficient, and the
/// resulting element.
#[derive(Clone, Debug)]
pub struct CocoverDescriptor {
    pub case_id: u8,
    pub alpha_tilde: AffineRoot,
    pub j: i64,
    pub alpha: DoubleAffineRoot,
    pub y: SemigroupElement,
}

/// A cocover s_alpha x of x, with the classification descriptor when the
/// fast path produced it.
#[derive(Clone, Debug)]
pub struct Cocover {
    pub alpha: DoubleAffineRoot,
    pub y: SemigroupElement,
    pub descriptor: Option<CocoverDescriptor>,
}

/// Affine quantum roots: positive alpha~ with l(s_alpha~) = <alpha~, 2rho> - 1.
/// For nu > 0 only r = 0 is possible and for nu < 0 only r <= 2 ht(-nu),
/// because l(Y^{-r nu}) = |r| (2h - 2) while the target grows as 2rh.
pub(crate) fn quantum_roots(sys: &Arc<RootSystem>) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    for nu in positive_roots(sys) {
        let finite = AffineRoot::new(nu.clone(), 0);
        if AffineWeylElement::reflection(&finite).length() == finite.pairing_2rho() - 1 {
            out.push(finite);
        }
        let neg = nu.negated();
        for r in 1..=2 * nu.height() {
            let alpha = AffineRoot::new(neg.clone(), r);
            if AffineWeylElement::reflection(&alpha).length() == alpha.pairing_2rho() - 1 {
                out.push(alpha);
            }
        }
    }
    out
}

/// Positive affine roots that can satisfy l(u s_alpha~) = l(u) + 1: the
/// reflection length is at most 2 l(u) + 1, which bounds the delta
/// coefficient by l(u)/(h-1) + 1.
fn bruhat_up_candidates(u: &AffineWeylElement) -> Vec<AffineRoot> {
    let sys = u.system();
    let h = sys.coxeter_number();
    let w = div_floor(u.length(), h - 1) + 2;
    let mut out = Vec::new();
    for nu in all_roots(sys) {
        let lo = i64::from(!nu.is_positive());
        for r in lo..=w {
            out.push(AffineRoot::new(nu.clone(), r));
        }
    }
    out
}

struct FamilyContext {
    v: AffineWeylElement,
    u: AffineWeylElement,
    w: AffineWeylElement,
    zeta_plus: crate::affine::AffineWeight,
}

fn family_context(x: &SemigroupElement) -> Result<FamilyContext> {
    let d = decompose(x)?;
    if !d.regular {
        return Err(Error::NotRegular);
    }
    let u = d.w.inverse().compose(&d.v);
    Ok(FamilyContext {
        v: d.v,
        u,
        w: d.w,
        zeta_plus: d.zeta_plus,
    })
}

/// The four coclassification families at x = X^{v~ zeta} w~, as (case, alpha~, j)
/// candidates passing their length conditions.
fn classification_families(x: &SemigroupElement, fx: &FamilyContext) -> Result<Vec<CocoverDescriptor>> {
    let sys = Arc::clone(x.system());
    let lv = fx.v.length();
    let lu = fx.u.length();
    let mut out: BTreeMap<DoubleAffineRoot, CocoverDescriptor> = BTreeMap::new();
    let mut push = |case_id: u8, alpha_tilde: AffineRoot, j: i64| -> Result<()> {
        let av = fx.v.act_affine_root(&alpha_tilde)?;
        let alpha = DoubleAffineRoot::new(av.nu().negated(), -av.r(), j);
        debug_assert!(alpha.is_positive(), "case {} produced {:?}", case_id, alpha);
        let y = apply_reflection_left(&alpha, x)?;
        let desc = CocoverDescriptor {
            case_id,
            alpha_tilde,
            j,
            alpha: alpha.clone(),
            y,
        };
        let prev = out.insert(alpha, desc);
        debug_assert!(prev.is_none(), "duplicate classification root");
        Ok(())
    };

    // (1) j = 0 and l(v~) = l(v~ s_alpha~) + 1.
    for alpha in fx.v.inversions() {
        let vs = fx.v.compose(&AffineWeylElement::reflection(&alpha));
        if vs.length() == lv - 1 {
            push(1, alpha, 0)?;
        }
    }
    // (2) j = 1 and l(v~) = l(v~ s_alpha~) + 1 - <alpha~, 2rho>.
    for alpha in quantum_roots(&sys) {
        let vs = fx.v.compose(&AffineWeylElement::reflection(&alpha));
        if vs.length() == lv + alpha.pairing_2rho() - 1 {
            push(2, alpha, 1)?;
        }
    }
    // (3) j = <zeta, alpha~> and l(w~^-1 v~ s_alpha~) = l(w~^-1 v~) + 1.
    for alpha in bruhat_up_candidates(&fx.u) {
        let us = fx.u.compose(&AffineWeylElement::reflection(&alpha));
        if us.length() == lu + 1 {
            let j = fx.zeta_plus.pairing_affine_root(&alpha)?;
            push(3, alpha, j)?;
        }
    }
    // (4) j = <zeta, alpha~> - 1 and
    //     l(w~^-1 v~ s_alpha~) = l(w~^-1 v~) + 1 - <alpha~, 2rho>.
    for alpha in quantum_roots(&sys) {
        let us = fx.u.compose(&AffineWeylElement::reflection(&alpha));
        if us.length() == lu + 1 - alpha.pairing_2rho() {
            let j = fx.zeta_plus.pairing_affine_root(&alpha)? - 1;
            push(4, alpha, j)?;
        }
    }
    Ok(out.into_values().collect())
}

/// Cocover enumeration by the deep-dominant classification; requires a
/// regular decomposition with <zeta, alpha_i> > 2 for every affine simple
/// root.
pub fn cocovers_via_classification(x: &SemigroupElement) -> Result<Vec<CocoverDescriptor>> {
    let fx = family_context(x)?;
    for i in 0..=x.system().rank() {
        let p = fx.zeta_plus.pairing_simple(i)?;
        if p <= 2 {
            return Err(Error::DepthBoundViolated {
                index: i,
                pairing: p,
                required: 3,
            });
        }
    }
    classification_families(x, &fx)
}

/// Cocover enumeration through corner candidates and the exact length
/// criterion; always applicable for level > 0, and the ground truth the
/// fast path is checked against.
pub fn cocovers_via_corners(x: &SemigroupElement) -> Result<Vec<Cocover>> {
    if x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    let sys = Arc::clone(x.system());
    let mut out: BTreeMap<DoubleAffineRoot, Cocover> = BTreeMap::new();
    for nu in all_roots(&sys) {
        for cand in corner_candidates(x, &nu)? {
            if out.contains_key(&cand) {
                continue;
            }
            if is_cocover(x, &cand)? {
                let y = apply_reflection_left(&cand, x)?;
                out.insert(
                    cand.clone(),
                    Cocover {
                        alpha: cand,
                        y,
                        descriptor: None,
                    },
                );
            }
        }
    }
    Ok(out.into_values().collect())
}

/// All cocovers of x: the classification fast path when its hypotheses
/// hold, otherwise the corner fallback.
pub fn cocovers(x: &SemigroupElement) -> Result<Vec<Cocover>> {
    if x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    let applicable = {
        let d = decompose(x)?;
        d.regular && (0..=x.system().rank()).all(|i| d.zeta_plus.pairing_simple(i).unwrap() > 2)
    };
    if applicable {
        let descs = cocovers_via_classification(x)?;
        Ok(descs
            .into_iter()
            .map(|d| Cocover {
                alpha: d.alpha.clone(),
                y: d.y.clone(),
                descriptor: Some(d),
            })
            .collect())
    } else {
        cocovers_via_corners(x)
    }
}

/// The bounded-QBG cocover classification: verifies the stated bounds
/// (regular decomposition, l(w~) <= M, <zeta, alpha_i> >= 2(M+1)) and
/// classifies the candidates whose reflected group part also satisfies
/// l(s_{v~ alpha~} w~) <= M; candidates outside that bound are beyond the
/// theorem's scope and are skipped.
pub fn classify_cocovers_qbg(x: &SemigroupElement, m: i64) -> Result<Vec<CocoverDescriptor>> {
    let fx = family_context(x)?;
    let lw = fx.w.length();
    if lw > m {
        return Err(Error::GroupBoundExceeded { len: lw, bound: m });
    }
    for i in 0..=x.system().rank() {
        let p = fx.zeta_plus.pairing_simple(i)?;
        if p < 2 * (m + 1) {
            return Err(Error::DepthBoundViolated {
                index: i,
                pairing: p,
                required: 2 * (m + 1),
            });
        }
    }
    let all = classification_families(x, &fx)?;
    let mut out = Vec::new();
    for desc in all {
        let va = fx.v.act_affine_root(&desc.alpha_tilde)?;
        let svw = AffineWeylElement::reflection(&va).compose(&fx.w);
        if svw.length() <= m {
            out.push(desc);
        }
    }
    Ok(out)
}

/// All covers of x: candidates are generated by the corner argument applied
/// to the region { beta > 0 : x^-1(beta) > 0 } (inequalities reversed, so
/// extremal points sit at minimal r on the horizontal rays and maximal r on
/// the boundary rays), each verified by the exact length criterion.
pub fn covers(x: &SemigroupElement) -> Result<Vec<(DoubleAffineRoot, SemigroupElement)>> {
    let ctx = GammaCtx::new(x)?;
    let sys = Arc::clone(x.system());
    let mut out: BTreeMap<DoubleAffineRoot, SemigroupElement> = BTreeMap::new();
    for nu in all_roots(&sys) {
        let p = nu_params(x, &nu)?;
        let l = p.level;
        let mut cands: BTreeSet<DoubleAffineRoot> = BTreeSet::new();

        // Minimal member of the j = 0 ray; the member set is contiguous, so
        // it lies within two columns of the boundary crossing.
        let lo0 = 0i64.max(div_floor(-p.k, l));
        for r in lo0..=lo0 + 2 {
            if ctx.upper_at(&nu, r, 0) {
                cands.insert(DoubleAffineRoot::new(nu.clone(), r, 0));
                break;
            }
        }
        // Minimal member of the j = 1 ray.
        let lo1 = div_floor(-p.k - 1, l);
        for r in lo1..=lo1 + 2 {
            if ctx.upper_at(&nu, r, 1) {
                cands.insert(DoubleAffineRoot::new(nu.clone(), r, 1));
                break;
            }
        }
        // The whole segment of the boundary line inside the region.
        let a_lo = -p.a + i64::from(p.w_inv_nu_neg);
        let p_hi = div_floor(-p.k, l);
        for r in a_lo..=p_hi {
            let pt = DoubleAffineRoot::new(nu.clone(), r, p.c(r));
            if ctx.upper(&pt) {
                cands.insert(pt);
            }
        }
        // Maximal point of the shifted boundary line.
        let pt = DoubleAffineRoot::new(nu.clone(), p_hi, p.c(p_hi) + 1);
        if ctx.upper(&pt) {
            cands.insert(pt);
        }

        for cand in cands {
            if out.contains_key(&cand) {
                continue;
            }
            if is_cover_root(x, &cand)? {
                let y = apply_reflection_left(&cand, x)?;
                out.insert(cand, y);
            }
        }
    }
    Ok(out.into_iter().collect())
}

struct OrderCache {
    cocovers: HashMap<SemigroupElement, Vec<(DoubleAffineRoot, SemigroupElement)>>,
    lengths: HashMap<SemigroupElement, i64>,
}

impl OrderCache {
    fn new() -> OrderCache {
        OrderCache {
            cocovers: HashMap::new(),
            lengths: HashMap::new(),
        }
    }

    fn length(&mut self, z: &SemigroupElement) -> i64 {
        if let Some(&l) = self.lengths.get(z) {
            return l;
        }
        let l = z.length();
        self.lengths.insert(z.clone(), l);
        l
    }

    fn cocovers_of(
        &mut self,
        z: &SemigroupElement,
    ) -> Result<Vec<(DoubleAffineRoot, SemigroupElement)>> {
        if let Some(v) = self.cocovers.get(z) {
            return Ok(v.clone());
        }
        let v: Vec<(DoubleAffineRoot, SemigroupElement)> = cocovers(z)?
            .into_iter()
            .map(|c| (c.alpha, c.y))
            .collect();
        self.cocovers.insert(z.clone(), v.clone());
        Ok(v)
    }
}

fn leq_inner(
    y: &SemigroupElement,
    x: &SemigroupElement,
    ly: i64,
    cache: &mut OrderCache,
    memo: &mut HashMap<SemigroupElement, bool>,
) -> Result<bool> {
    if y == x {
        return Ok(true);
    }
    if cache.length(x) <= ly {
        return Ok(false);
    }
    if let Some(&b) = memo.get(x) {
        return Ok(b);
    }
    let mut found = false;
    for (_, z) in cache.cocovers_of(x)? {
        if cache.length(&z) >= ly && leq_inner(y, &z, ly, cache, memo)? {
            found = true;
            break;
        }
    }
    memo.insert(x.clone(), found);
    Ok(found)
}

/// y <= x in the double affine Bruhat order, decided by memoized cocover
/// descent from x pruned by length.
pub fn is_leq(y: &SemigroupElement, x: &SemigroupElement) -> Result<bool> {
    if y.level() <= 0 || x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    if y.length() > x.length() {
        return Ok(false);
    }
    let mut cache = OrderCache::new();
    let mut memo = HashMap::new();
    leq_inner(y, x, y.length(), &mut cache, &mut memo)
}

/// The interval [y, x] = { z : y <= z <= x }, finite because every element
/// sits on a saturated cover chain and each cover step raises the length by
/// exactly one.
pub fn interval(y: &SemigroupElement, x: &SemigroupElement) -> Result<BTreeSet<SemigroupElement>> {
    if y.level() <= 0 || x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    let ly = y.length();
    let lx = x.length();
    let mut out = BTreeSet::new();
    if ly > lx {
        return Ok(out);
    }
    let mut cache = OrderCache::new();
    let mut memo = HashMap::new();

    // Down-set of x through cocover steps, kept above length l(y).
    let mut reachable: BTreeSet<SemigroupElement> = BTreeSet::new();
    let mut frontier: BTreeSet<SemigroupElement> = BTreeSet::new();
    reachable.insert(x.clone());
    frontier.insert(x.clone());
    for _ in 0..(lx - ly) {
        let mut next = BTreeSet::new();
        for z in &frontier {
            for (_, c) in cache.cocovers_of(z)? {
                if cache.length(&c) >= ly && !reachable.contains(&c) {
                    next.insert(c);
                }
            }
        }
        reachable.extend(next.iter().cloned());
        frontier = next;
    }

    for z in reachable {
        if leq_inner(y, &z, ly, &mut cache, &mut memo)? {
            out.insert(z);
        }
    }
    Ok(out)
}

/// Cover edges inside a finite set of elements: (lower, upper, root) with
/// lower = s_root(upper).
pub fn hasse_edges(
    members: &BTreeSet<SemigroupElement>,
) -> Result<Vec<(SemigroupElement, SemigroupElement, DoubleAffineRoot)>> {
    let mut out = Vec::new();
    for z in members {
        for c in cocovers(z)? {
            if members.contains(&c.y) {
                out.push((c.y, z.clone(), c.alpha));
            }
        }
    }
    Ok(out)
}
