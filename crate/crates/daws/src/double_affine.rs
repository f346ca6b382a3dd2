//! Double affine roots and reflections, the semigroup W = T x| W_aff inside
//! its ambient group X x| W_aff, the action on the double affine root set,
//! and the length function with its translation/affine splitting.
//!
//! pi is stored as a third integer coordinate exactly parallel to delta; it
//! contributes nothing to the root-root pairing.

use std::fmt;
use std::sync::Arc;

use crate::affine::{dominantize, AffineRoot, AffineWeight, AffineWeylElement};
use crate::error::{Error, Result};
use crate::root_system::{div_floor, Root, RootSystem};

/// A double affine root nu + r*delta + j*pi.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleAffineRoot {
    nu: Root,
    r: i64,
    j: i64,
}

impl fmt::Debug for DoubleAffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}+{}d+{}p", self.nu, self.r, self.j)
    }
}

impl DoubleAffineRoot {
    pub fn new(nu: Root, r: i64, j: i64) -> DoubleAffineRoot {
        DoubleAffineRoot { nu, r, j }
    }

    pub fn from_affine(alpha: &AffineRoot, j: i64) -> DoubleAffineRoot {
        DoubleAffineRoot {
            nu: alpha.nu().clone(),
            r: alpha.r(),
            j,
        }
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        self.nu.system()
    }

    /// The finite part fin(alpha) = nu.
    pub fn fin(&self) -> &Root {
        &self.nu
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn affine_part(&self) -> AffineRoot {
        AffineRoot::new(self.nu.clone(), self.r)
    }

    /// Positive iff (nu + r delta > 0 and j >= 0) or (nu + r delta < 0 and
    /// j > 0); exactly one of alpha, -alpha is positive.
    pub fn is_positive(&self) -> bool {
        if self.affine_part().is_positive() {
            self.j >= 0
        } else {
            self.j > 0
        }
    }

    pub fn negated(&self) -> DoubleAffineRoot {
        DoubleAffineRoot {
            nu: self.nu.negated(),
            r: -self.r,
            j: -self.j,
        }
    }

    /// s_alpha(beta) = beta - <nu, gamma> alpha, the finite-part pairing.
    pub fn reflect(&self, beta: &DoubleAffineRoot) -> Result<DoubleAffineRoot> {
        let k = self.nu.pairing(&beta.nu)?;
        let coords: Vec<i64> = beta
            .nu
            .coords()
            .iter()
            .zip(self.nu.coords())
            .map(|(b, a)| b - k * a)
            .collect();
        Ok(DoubleAffineRoot {
            nu: Root::new_unchecked(self.system(), coords),
            r: beta.r - k * self.r,
            j: beta.j - k * self.j,
        })
    }

    /// The associated reflection s_alpha = X^{-j alpha~} Y^{-r nu} s_nu,
    /// an involution of level zero in X x| W_aff; it lies in W iff j = 0.
    pub fn reflection_element(&self) -> ExtendedElement {
        let zeta = self.affine_part().to_weight().scaled(-self.j);
        ExtendedElement {
            zeta,
            w: AffineWeylElement::reflection(&self.affine_part()),
        }
    }
}

/// An element X^zeta w~ of the ambient group X x| W_aff.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedElement {
    zeta: AffineWeight,
    w: AffineWeylElement,
}

impl fmt::Debug for ExtendedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X[{:?}]{:?}", self.zeta, self.w)
    }
}

impl ExtendedElement {
    pub fn new(zeta: AffineWeight, w: AffineWeylElement) -> ExtendedElement {
        assert_eq!(zeta.system().key(), w.system().key(), "system mismatch");
        ExtendedElement { zeta, w }
    }

    pub fn identity(sys: &Arc<RootSystem>) -> ExtendedElement {
        ExtendedElement {
            zeta: AffineWeight::zero(sys),
            w: AffineWeylElement::identity(sys),
        }
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        self.zeta.system()
    }

    pub fn zeta(&self) -> &AffineWeight {
        &self.zeta
    }

    pub fn group_part(&self) -> &AffineWeylElement {
        &self.w
    }

    pub fn level(&self) -> i64 {
        self.zeta.level()
    }

    /// (zeta, w~)(eta, u~) = (zeta + w~ eta, w~ u~).
    pub fn compose(&self, other: &ExtendedElement) -> ExtendedElement {
        let moved = self
            .w
            .act_weight(&other.zeta)
            .expect("same system by construction");
        ExtendedElement {
            zeta: self.zeta.add(&moved),
            w: self.w.compose(&other.w),
        }
    }

    pub fn inverse(&self) -> ExtendedElement {
        let winv = self.w.inverse();
        let zeta = winv
            .act_weight(&self.zeta)
            .expect("same system")
            .negated();
        ExtendedElement { zeta, w: winv }
    }

    /// X^zeta w~ (alpha~ + j pi) = w~(alpha~) + (j - <zeta, w~(alpha~)>) pi.
    pub fn act_root(&self, alpha: &DoubleAffineRoot) -> Result<DoubleAffineRoot> {
        let img = self.w.act_affine_root(&alpha.affine_part())?;
        let j = alpha.j - self.zeta.pairing_affine_root(&img)?;
        Ok(DoubleAffineRoot::from_affine(&img, j))
    }

    pub fn is_identity(&self) -> bool {
        self.zeta == AffineWeight::zero(self.system()) && self.w.is_identity()
    }
}

/// An element of the double affine Weyl semigroup: an `ExtendedElement`
/// whose X-weight is certified to lie in the Tits cone at construction, so
/// downstream operations never re-check.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemigroupElement {
    inner: ExtendedElement,
}

impl fmt::Debug for SemigroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

/// The two summands of the length of X^zeta w~.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthBreakdown {
    /// `<zeta_plus, 2 rho>`.
    pub big: i64,
    /// Signed inversion count of the group part against the original zeta.
    pub small: i64,
}

impl LengthBreakdown {
    pub fn total(&self) -> i64 {
        self.big + self.small
    }
}

impl SemigroupElement {
    pub fn new(inner: ExtendedElement) -> Result<SemigroupElement> {
        if !inner.zeta.in_tits_cone() {
            return Err(Error::OutsideTitsCone);
        }
        Ok(SemigroupElement { inner })
    }

    pub fn from_parts(zeta: AffineWeight, w: AffineWeylElement) -> Result<SemigroupElement> {
        SemigroupElement::new(ExtendedElement::new(zeta, w))
    }

    pub fn identity(sys: &Arc<RootSystem>) -> SemigroupElement {
        SemigroupElement {
            inner: ExtendedElement::identity(sys),
        }
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        self.inner.system()
    }

    pub fn zeta(&self) -> &AffineWeight {
        &self.inner.zeta
    }

    pub fn group_part(&self) -> &AffineWeylElement {
        &self.inner.w
    }

    pub fn level(&self) -> i64 {
        self.inner.level()
    }

    pub fn extended(&self) -> &ExtendedElement {
        &self.inner
    }

    /// The inverse, which generally leaves the semigroup.
    pub fn inverse_extended(&self) -> ExtendedElement {
        self.inner.inverse()
    }

    /// The semigroup is closed under products: levels add, and level-zero
    /// weights are multiples of delta, which every group part fixes.
    pub fn compose(&self, other: &SemigroupElement) -> SemigroupElement {
        let inner = self.inner.compose(&other.inner);
        debug_assert!(inner.zeta.in_tits_cone());
        SemigroupElement { inner }
    }

    pub fn act_root(&self, alpha: &DoubleAffineRoot) -> Result<DoubleAffineRoot> {
        self.inner.act_root(alpha)
    }

    /// l(x) = <zeta_plus, 2 rho>
    ///        + #{alpha~ in Inv(w~^-1) : <zeta, alpha~> <= 0}
    ///        - #{alpha~ in Inv(w~^-1) : <zeta, alpha~> > 0},
    /// split into its big and small parts. The small part uses the original
    /// (possibly non-dominant) zeta.
    pub fn length_breakdown(&self) -> LengthBreakdown {
        let (plus, _) = dominantize(&self.inner.zeta).expect("certified Tits cone weight");
        let big = plus.pairing_2rho();
        let l = self.inner.zeta.level();
        let mu = self.inner.zeta.mu();
        let mut small = 0i64;
        for (nu, lo, hi) in self.inner.w.inverse().inversion_intervals() {
            let k = mu.pairing_root(&nu).expect("same system");
            let total = hi - lo + 1;
            // Count r in [lo, hi] with k + l*r > 0.
            let positive = if l == 0 {
                if k > 0 {
                    total
                } else {
                    0
                }
            } else {
                let first = div_floor(-k, l) + 1;
                (hi - first.max(lo) + 1).max(0)
            };
            small += (total - positive) - positive;
        }
        LengthBreakdown { big, small }
    }

    pub fn length(&self) -> i64 {
        self.length_breakdown().total()
    }
}

/// The standing decomposition x = X^{v~ zeta_plus} w~ with zeta_plus dominant
/// and v~ the minimal-length element moving it onto the X-weight of x.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub zeta_plus: AffineWeight,
    pub v: AffineWeylElement,
    pub w: AffineWeylElement,
    pub regular: bool,
}

/// Decomposes a positive-level element; rejects level zero, which the
/// classification theorems exclude.
pub fn decompose(x: &SemigroupElement) -> Result<Decomposition> {
    if x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    let (zeta_plus, v) = dominantize(x.zeta())?;
    Ok(Decomposition {
        regular: zeta_plus.is_regular(),
        zeta_plus,
        v,
        w: x.group_part().clone(),
    })
}

/// l(X^{v~ zeta} w~) = <zeta, 2 rho> - l(w~^-1 v~) + l(v~) for zeta regular
/// dominant; must equal the direct length of the assembled element.
pub fn length_split(
    zeta_plus: &AffineWeight,
    v: &AffineWeylElement,
    w: &AffineWeylElement,
) -> Result<i64> {
    if !zeta_plus.is_dominant() {
        return Err(Error::NotDominant);
    }
    if !zeta_plus.is_regular() {
        return Err(Error::NotRegular);
    }
    let u = w.inverse().compose(v);
    Ok(zeta_plus.pairing_2rho() - u.length() + v.length())
}

/// Builds x = X^{v~(zeta_plus)} w~.
pub fn assemble(
    zeta_plus: &AffineWeight,
    v: &AffineWeylElement,
    w: &AffineWeylElement,
) -> Result<SemigroupElement> {
    let zeta = v.act_weight(zeta_plus)?;
    SemigroupElement::from_parts(zeta, w.clone())
}

/// s_alpha * x for a positive double affine root alpha; stays in W because
/// lev(x) > 0.
pub fn apply_reflection_left(
    alpha: &DoubleAffineRoot,
    x: &SemigroupElement,
) -> Result<SemigroupElement> {
    if !alpha.is_positive() {
        return Err(Error::NotPositive);
    }
    if x.level() <= 0 {
        return Err(Error::LevelZero);
    }
    let product = alpha.reflection_element().compose(x.extended());
    if !product.zeta().in_tits_cone() {
        return Err(Error::IterationGuard("reflection left Tits cone"));
    }
    SemigroupElement::new(product)
}
