//! Exact data for an irreducible simply-laced finite root system and its
//! Weyl group.
//!
//! Roots are always stored in simple-root coordinates and weights in
//! fundamental-weight coordinates, so every pairing reduces to integer
//! matrix arithmetic; the inverse Cartan matrix (and with it all rational
//! arithmetic) never appears. Under the simply-laced normalization
//! `<alpha, alpha> = 2` roots and coroots are identified, so one pairing
//! serves for everything.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Simply-laced Dynkin types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    A,
    D,
    E,
}

impl TypeLabel {
    pub fn letter(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
        }
    }
}

/// Identity of a system, used for cheap compatibility checks.
pub type SystemKey = (TypeLabel, usize);

// b > 0 in both helpers.
pub(crate) fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// An irreducible simply-laced finite root system together with derived data.
///
/// Positive roots are generated by reflection closure from the simple roots
/// and ordered by (height, lexicographic coordinates) so all downstream
/// output is reproducible.
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_set: BTreeSet<Vec<i64>>,
    theta: Vec<i64>,
    two_rho: Vec<i64>,
    coxeter_number: i64,
    simple_mats: Vec<Vec<i64>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}{})", self.label.letter(), self.rank)
    }
}

fn cartan_matrix(label: TypeLabel, rank: usize) -> Result<Vec<Vec<i64>>> {
    let n = rank;
    let valid = match label {
        TypeLabel::A => n >= 1,
        TypeLabel::D => n >= 4,
        TypeLabel::E => (6..=8).contains(&n),
    };
    if !valid {
        return Err(Error::InvalidSystem {
            label: label.letter(),
            rank,
        });
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match label {
        TypeLabel::A => {
            for i in 0..n.saturating_sub(1) {
                edges.push((i, i + 1));
            }
        }
        TypeLabel::D => {
            // Chain 0..n-2 with the fork node n-3 also attached to n-1.
            for i in 0..n - 2 {
                edges.push((i, i + 1));
            }
            edges.push((n - 3, n - 1));
        }
        TypeLabel::E => {
            // Bourbaki numbering, zero-indexed: chain 0-2-3-4-..., node 1 on node 3.
            edges.push((0, 2));
            for i in 2..n - 1 {
                edges.push((i, i + 1));
            }
            edges.push((1, 3));
        }
    }
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        c[i][j] = -1;
        c[j][i] = -1;
    }
    Ok(c)
}

impl RootSystem {
    /// Builds the system for a valid simply-laced type. All derived data
    /// (positive roots, highest root, Coxeter number, 2*rho) is computed by
    /// reflection closure, never tabulated.
    pub fn new(label: TypeLabel, rank: usize) -> Result<Arc<RootSystem>> {
        let cartan = cartan_matrix(label, rank)?;
        let n = rank;

        let mut simple_mats = Vec::with_capacity(n);
        for i in 0..n {
            // s_i in simple-root coordinates: identity except row i, where
            // entry (i, j) is delta_ij - C[i][j].
            let mut m = vec![0i64; n * n];
            for k in 0..n {
                m[k * n + k] = 1;
            }
            for j in 0..n {
                m[i * n + j] = if i == j { -1 } else { -cartan[i][j] };
            }
            simple_mats.push(m);
        }

        // Reflection closure from the simple roots.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push(e);
        }
        while let Some(v) = queue.pop() {
            for m in &simple_mats {
                let img = mat_vec(n, m, &v);
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }

        let mut positive_roots: Vec<Vec<i64>> = seen
            .iter()
            .filter(|v| coords_sign(v) > 0)
            .cloned()
            .collect();
        positive_roots.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));

        let theta = positive_roots
            .last()
            .expect("nonempty root system")
            .clone();
        let theta_ht: i64 = theta.iter().sum();
        debug_assert!(
            positive_roots
                .iter()
                .filter(|v| v.iter().sum::<i64>() == theta_ht)
                .count()
                == 1,
            "highest root must be unique"
        );
        let coxeter_number = theta_ht + 1;
        debug_assert_eq!(
            positive_roots.len() as i64 * 2,
            rank as i64 * coxeter_number
        );

        let mut two_rho = vec![0i64; n];
        for v in &positive_roots {
            for (t, c) in two_rho.iter_mut().zip(v.iter()) {
                *t += c;
            }
        }

        let positive_set = positive_roots.iter().cloned().collect();
        Ok(Arc::new(RootSystem {
            label,
            rank,
            cartan,
            positive_roots,
            positive_set,
            theta,
            two_rho,
            coxeter_number,
            simple_mats,
        }))
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn key(&self) -> SystemKey {
        (self.label, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Coxeter number h = ht(theta) + 1.
    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// Highest root in simple-root coordinates.
    pub fn theta_coords(&self) -> &[i64] {
        &self.theta
    }

    /// Sum of the positive roots, simple-root coordinates.
    pub fn two_rho_coords(&self) -> &[i64] {
        &self.two_rho
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub(crate) fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn is_root_coords(&self, v: &[i64]) -> bool {
        match coords_sign(v) {
            1 => self.positive_set.contains(v),
            -1 => {
                let neg: Vec<i64> = v.iter().map(|c| -c).collect();
                self.positive_set.contains(&neg)
            }
            _ => false,
        }
    }

    /// Root-root pairing on simple-root coordinates: a^T C b.
    pub fn pair_rr(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank;
        let mut acc = 0;
        for (ai, row) in a.iter().take(n).zip(&self.cartan) {
            if *ai == 0 {
                continue;
            }
            let dot: i64 = row.iter().zip(b).map(|(c, bv)| c * bv).sum();
            acc += ai * dot;
        }
        acc
    }

    /// Weight-root pairing: weight coordinates dot root coordinates, since
    /// `<omega_i, alpha_j> = delta_ij`.
    pub fn pair_wr(&self, w: &[i64], r: &[i64]) -> i64 {
        w.iter().zip(r.iter()).map(|(a, b)| a * b).sum()
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates
    /// (multiplication by the Cartan matrix).
    pub fn root_to_weight_coords(&self, v: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|i| self.cartan[i].iter().zip(v).map(|(c, vj)| c * vj).sum())
            .collect()
    }

    /// Exact inverse of `root_to_weight_coords`; `None` when the weight does
    /// not lie in the root lattice Q. Fraction-free elimination over i128.
    pub fn weight_to_root_coords(&self, m: &[i64]) -> Option<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i128; n + 1]; n];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().take(n).enumerate() {
                *entry = self.cartan[i][j] as i128;
            }
            row[n] = m[i] as i128;
        }
        // Bareiss elimination.
        let mut denom: i128 = 1;
        for k in 0..n {
            let pivot_row = (k..n).find(|&r| a[r][k] != 0)?;
            a.swap(k, pivot_row);
            for i in 0..n {
                if i == k {
                    continue;
                }
                for j in 0..=n {
                    if j == k {
                        continue;
                    }
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
                }
                a[i][k] = 0;
            }
            denom = a[k][k];
        }
        let mut out = Vec::with_capacity(n);
        for (i, row) in a.iter().enumerate() {
            if row[n] % row[i] != 0 {
                return None;
            }
            out.push(i64::try_from(row[n] / row[i]).ok()?);
        }
        Some(out)
    }

    pub(crate) fn simple_mat(&self, i: usize) -> &[i64] {
        &self.simple_mats[i]
    }
}

/// Sign of a root coordinate vector: all nonzero coordinates of a root share
/// one sign, so the first nonzero coordinate decides. Returns 0 for the zero
/// vector.
pub(crate) fn coords_sign(v: &[i64]) -> i64 {
    for &c in v {
        if c != 0 {
            return c.signum();
        }
    }
    0
}

pub(crate) fn mat_vec(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
        .collect()
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// A root, held in simple-root coordinates.
#[derive(Clone)]
pub struct Root {
    sys: Arc<RootSystem>,
    coords: Vec<i64>,
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root{:?}", self.coords)
    }
}

impl Root {
    pub fn new(sys: &Arc<RootSystem>, coords: Vec<i64>) -> Result<Root> {
        if !sys.is_root_coords(&coords) {
            return Err(Error::NotARoot(coords));
        }
        Ok(Root {
            sys: Arc::clone(sys),
            coords,
        })
    }

    pub(crate) fn new_unchecked(sys: &Arc<RootSystem>, coords: Vec<i64>) -> Root {
        debug_assert!(sys.is_root_coords(&coords));
        Root {
            sys: Arc::clone(sys),
            coords,
        }
    }

    pub fn simple(sys: &Arc<RootSystem>, i: usize) -> Result<Root> {
        if i >= sys.rank() {
            return Err(Error::BadGeneratorIndex(i));
        }
        let mut coords = vec![0i64; sys.rank()];
        coords[i] = 1;
        Ok(Root {
            sys: Arc::clone(sys),
            coords,
        })
    }

    pub fn theta(sys: &Arc<RootSystem>) -> Root {
        Root {
            sys: Arc::clone(sys),
            coords: sys.theta_coords().to_vec(),
        }
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.sys
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_positive(&self) -> bool {
        coords_sign(&self.coords) > 0
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root {
            sys: Arc::clone(&self.sys),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// `<self, other>`; symmetric, and in [-2, 2] on roots.
    pub fn pairing(&self, other: &Root) -> Result<i64> {
        if self.sys.key() != other.sys.key() {
            return Err(Error::SystemMismatch);
        }
        Ok(self.sys.pair_rr(&self.coords, &other.coords))
    }

    /// The root's image in fundamental-weight coordinates.
    pub fn to_weight(&self) -> Weight {
        Weight {
            sys: Arc::clone(&self.sys),
            coords: self.sys.root_to_weight_coords(&self.coords),
        }
    }
}

impl PartialEq for Root {
    fn eq(&self, other: &Self) -> bool {
        self.sys.key() == other.sys.key() && self.coords == other.coords
    }
}
impl Eq for Root {}
impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sys
            .key()
            .cmp(&other.sys.key())
            .then_with(|| self.coords.cmp(&other.coords))
    }
}
impl std::hash::Hash for Root {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.sys.key().hash(state);
        self.coords.hash(state);
    }
}

/// An element of the finite weight lattice, fundamental-weight coordinates.
#[derive(Clone)]
pub struct Weight {
    sys: Arc<RootSystem>,
    coords: Vec<i64>,
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{:?}", self.coords)
    }
}

impl Weight {
    pub fn new(sys: &Arc<RootSystem>, coords: Vec<i64>) -> Weight {
        assert_eq!(coords.len(), sys.rank());
        Weight {
            sys: Arc::clone(sys),
            coords,
        }
    }

    pub fn zero(sys: &Arc<RootSystem>) -> Weight {
        Weight {
            sys: Arc::clone(sys),
            coords: vec![0; sys.rank()],
        }
    }

    pub fn fundamental(sys: &Arc<RootSystem>, i: usize) -> Result<Weight> {
        if i >= sys.rank() {
            return Err(Error::BadGeneratorIndex(i));
        }
        let mut coords = vec![0i64; sys.rank()];
        coords[i] = 1;
        Ok(Weight {
            sys: Arc::clone(sys),
            coords,
        })
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.sys
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `<mu, nu>` for a root nu.
    pub fn pairing_root(&self, nu: &Root) -> Result<i64> {
        if self.sys.key() != nu.sys.key() {
            return Err(Error::SystemMismatch);
        }
        Ok(self.sys.pair_wr(&self.coords, &nu.coords))
    }

    /// Root-lattice coordinates, when the weight lies in Q.
    pub fn root_coords(&self) -> Option<Vec<i64>> {
        self.sys.weight_to_root_coords(&self.coords)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.sys.key(), other.sys.key());
        Weight {
            sys: Arc::clone(&self.sys),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            sys: Arc::clone(&self.sys),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.sys.key() == other.sys.key() && self.coords == other.coords
    }
}
impl Eq for Weight {}
impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Weight {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sys
            .key()
            .cmp(&other.sys.key())
            .then_with(|| self.coords.cmp(&other.coords))
    }
}
impl std::hash::Hash for Weight {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.sys.key().hash(state);
        self.coords.hash(state);
    }
}

/// An element of the finite Weyl group, stored as its action matrix on
/// simple-root coordinates together with the matrix of the inverse (also
/// integral), which gives the weight-coordinate action without rationals.
#[derive(Clone)]
pub struct WeylElement {
    sys: Arc<RootSystem>,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "W(e)")
        } else {
            write!(
                f,
                "W({})",
                self.canonical_word()
                    .iter()
                    .map(|i| format!("s{}", i + 1))
                    .collect::<String>()
            )
        }
    }
}

impl WeylElement {
    pub fn identity(sys: &Arc<RootSystem>) -> WeylElement {
        let n = sys.rank();
        let mut m = vec![0i64; n * n];
        for k in 0..n {
            m[k * n + k] = 1;
        }
        WeylElement {
            sys: Arc::clone(sys),
            mat: m.clone(),
            inv: m,
        }
    }

    /// Simple reflection s_{i+...}: index is 0-based over the finite nodes.
    pub fn simple(sys: &Arc<RootSystem>, i: usize) -> Result<WeylElement> {
        if i >= sys.rank() {
            return Err(Error::BadGeneratorIndex(i));
        }
        let m = sys.simple_mat(i).to_vec();
        Ok(WeylElement {
            sys: Arc::clone(sys),
            mat: m.clone(),
            inv: m,
        })
    }

    /// Reflection in an arbitrary root: s_nu(b) = b - <nu, b> nu.
    pub fn reflection(nu: &Root) -> WeylElement {
        let sys = Arc::clone(&nu.sys);
        let n = sys.rank();
        let cnu: Vec<i64> = (0..n)
            .map(|i| (0..n).map(|j| sys.cartan()[i][j] * nu.coords[j]).sum())
            .collect();
        let mut m = vec![0i64; n * n];
        for k in 0..n {
            for j in 0..n {
                m[k * n + j] = if k == j { 1 } else { 0 } - nu.coords[k] * cnu[j];
            }
        }
        WeylElement {
            sys,
            mat: m.clone(),
            inv: m,
        }
    }

    pub fn from_word(sys: &Arc<RootSystem>, word: &[usize]) -> Result<WeylElement> {
        let mut w = WeylElement::identity(sys);
        for &i in word {
            w = w.compose(&WeylElement::simple(sys, i)?);
        }
        Ok(w)
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.sys
    }

    pub fn is_identity(&self) -> bool {
        let n = self.sys.rank();
        (0..n).all(|i| (0..n).all(|j| self.mat[i * n + j] == i64::from(i == j)))
    }

    /// Composition: (self * other)(v) = self(other(v)).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.sys.key(), other.sys.key(), "system mismatch");
        let n = self.sys.rank();
        WeylElement {
            sys: Arc::clone(&self.sys),
            mat: mat_mul(n, &self.mat, &other.mat),
            inv: mat_mul(n, &other.inv, &self.inv),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            sys: Arc::clone(&self.sys),
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    pub(crate) fn apply_root_coords(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(self.sys.rank(), &self.mat, v)
    }

    pub(crate) fn apply_weight_coords(&self, m: &[i64]) -> Vec<i64> {
        // Weight action is (inverse matrix) transposed, forced by pairing
        // invariance <w mu, w nu> = <mu, nu>.
        let n = self.sys.rank();
        (0..n)
            .map(|i| (0..n).map(|k| self.inv[k * n + i] * m[k]).sum())
            .collect()
    }

    pub fn act_root(&self, nu: &Root) -> Result<Root> {
        if self.sys.key() != nu.sys.key() {
            return Err(Error::SystemMismatch);
        }
        Ok(Root {
            sys: Arc::clone(&self.sys),
            coords: self.apply_root_coords(&nu.coords),
        })
    }

    pub fn act_weight(&self, mu: &Weight) -> Result<Weight> {
        if self.sys.key() != mu.sys.key() {
            return Err(Error::SystemMismatch);
        }
        Ok(Weight {
            sys: Arc::clone(&self.sys),
            coords: self.apply_weight_coords(&mu.coords),
        })
    }

    /// Coxeter length in the finite group: number of positive roots sent
    /// negative.
    pub fn finite_length(&self) -> usize {
        self.sys
            .positive_root_coords()
            .iter()
            .filter(|v| coords_sign(&self.apply_root_coords(v)) < 0)
            .count()
    }

    /// Lexicographically smallest reduced word, by greedy left descents.
    pub fn canonical_word(&self) -> Vec<usize> {
        let n = self.sys.rank();
        let mut w = self.clone();
        let mut word = Vec::new();
        loop {
            // Left descent at i <=> w^-1(alpha_i) < 0 <=> column i of the
            // inverse matrix is a negative root.
            let mut descent = None;
            for i in 0..n {
                let col: Vec<i64> = (0..n).map(|k| w.inv[k * n + i]).collect();
                if coords_sign(&col) < 0 {
                    descent = Some(i);
                    break;
                }
            }
            match descent {
                Some(i) => {
                    word.push(i);
                    let si = WeylElement::simple(&w.sys, i).expect("valid index");
                    w = si.compose(&w);
                }
                None => break,
            }
        }
        debug_assert!(w.is_identity());
        word
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.sys.key() == other.sys.key() && self.mat == other.mat
    }
}
impl Eq for WeylElement {}
impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sys
            .key()
            .cmp(&other.sys.key())
            .then_with(|| self.mat.cmp(&other.mat))
    }
}
impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.sys.key().hash(state);
        self.mat.hash(state);
    }
}

/// All positive roots as typed values, in the canonical order.
pub fn positive_roots(sys: &Arc<RootSystem>) -> Vec<Root> {
    sys.positive_root_coords()
        .iter()
        .map(|v| Root::new_unchecked(sys, v.clone()))
        .collect()
}

/// All roots: positives in canonical order, then their negatives.
pub fn all_roots(sys: &Arc<RootSystem>) -> Vec<Root> {
    let mut out = positive_roots(sys);
    let negs: Vec<Root> = out.iter().map(Root::negated).collect();
    out.extend(negs);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(label: TypeLabel, rank: usize) -> Arc<RootSystem> {
        RootSystem::new(label, rank).unwrap()
    }

    #[test]
    fn a1_data() {
        let s = sys(TypeLabel::A, 1);
        assert_eq!(s.num_positive_roots(), 1);
        assert_eq!(s.theta_coords(), &[1]);
        assert_eq!(s.coxeter_number(), 2);
        assert_eq!(s.two_rho_coords(), &[1]);
    }

    #[test]
    fn a2_positive_roots_match_hand_enumeration() {
        let s = sys(TypeLabel::A, 2);
        let expected: BTreeSet<Vec<i64>> =
            [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        let got: BTreeSet<Vec<i64>> = s.positive_root_coords().iter().cloned().collect();
        assert_eq!(got, expected);
        assert_eq!(s.theta_coords(), &[1, 1]);
        assert_eq!(s.coxeter_number(), 3);
    }

    #[test]
    fn d4_counts() {
        let s = sys(TypeLabel::D, 4);
        assert_eq!(s.num_positive_roots(), 12);
        assert_eq!(s.theta_coords().iter().sum::<i64>(), 5);
        assert_eq!(s.coxeter_number(), 6);
        assert_eq!(s.num_positive_roots() as i64 * 2, 4 * s.coxeter_number());
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystem::new(TypeLabel::A, 0).is_err());
        assert!(RootSystem::new(TypeLabel::D, 3).is_err());
        assert!(RootSystem::new(TypeLabel::E, 5).is_err());
        assert!(RootSystem::new(TypeLabel::E, 9).is_err());
    }

    #[test]
    fn coxeter_number_is_theta_height_plus_one_at_all_built_ranks() {
        for (label, rank) in [
            (TypeLabel::A, 1),
            (TypeLabel::A, 2),
            (TypeLabel::A, 3),
            (TypeLabel::A, 4),
            (TypeLabel::D, 4),
            (TypeLabel::D, 5),
            (TypeLabel::E, 6),
            (TypeLabel::E, 7),
            (TypeLabel::E, 8),
        ] {
            let s = sys(label, rank);
            let ht: i64 = s.theta_coords().iter().sum();
            assert_eq!(s.coxeter_number(), ht + 1, "{:?}{}", label, rank);
            assert_eq!(
                s.num_positive_roots() as i64 * 2,
                rank as i64 * s.coxeter_number()
            );
            let mut sum = vec![0i64; rank];
            for v in s.positive_root_coords() {
                for (t, c) in sum.iter_mut().zip(v) {
                    *t += c;
                }
            }
            assert_eq!(&sum, s.two_rho_coords());
        }
    }

    #[test]
    fn pairing_examples() {
        let s = sys(TypeLabel::A, 2);
        let a1 = Root::simple(&s, 0).unwrap();
        let a2 = Root::simple(&s, 1).unwrap();
        let th = Root::theta(&s);
        assert_eq!(a1.pairing(&a1).unwrap(), 2);
        assert_eq!(a1.pairing(&a2).unwrap(), -1);
        assert_eq!(a2.pairing(&th).unwrap(), 1);
    }

    #[test]
    fn pairing_rejects_mismatched_systems() {
        let s2 = sys(TypeLabel::A, 2);
        let s3 = sys(TypeLabel::A, 3);
        let a = Root::simple(&s2, 0).unwrap();
        let b = Root::simple(&s3, 0).unwrap();
        assert_eq!(a.pairing(&b), Err(Error::SystemMismatch));
    }

    #[test]
    fn weight_root_pairing() {
        let s = sys(TypeLabel::A, 2);
        let w1 = Weight::fundamental(&s, 0).unwrap();
        let a1 = Root::simple(&s, 0).unwrap();
        assert_eq!(w1.pairing_root(&a1).unwrap(), 1);
        // mu = alpha_1 + alpha_2 has weight coordinates (1, 1).
        let mu = Weight::new(&s, vec![1, 1]);
        assert_eq!(mu.pairing_root(&Root::theta(&s)).unwrap(), 2);
        assert_eq!(Weight::zero(&s).pairing_root(&a1).unwrap(), 0);
    }

    #[test]
    fn weight_root_coordinate_round_trip() {
        let s = sys(TypeLabel::A, 2);
        let th = Root::theta(&s);
        let w = th.to_weight();
        assert_eq!(w.coords(), &[1, 1]);
        assert_eq!(w.root_coords().unwrap(), vec![1, 1]);
        // omega_1 is not in Q for A2.
        let w1 = Weight::fundamental(&s, 0).unwrap();
        assert!(w1.root_coords().is_none());
    }

    #[test]
    fn simple_reflection_action() {
        let s = sys(TypeLabel::A, 2);
        let s1 = WeylElement::simple(&s, 0).unwrap();
        let a1 = Root::simple(&s, 0).unwrap();
        let a2 = Root::simple(&s, 1).unwrap();
        assert_eq!(s1.act_root(&a1).unwrap(), a1.negated());
        assert_eq!(s1.act_root(&a2).unwrap(), Root::theta(&s));
        let id = WeylElement::identity(&s);
        let mu = Weight::new(&s, vec![2, -1]);
        assert_eq!(id.act_weight(&mu).unwrap(), mu);
    }

    #[test]
    fn action_matches_reflection_formula_on_weights() {
        // s_i(mu) = mu - <mu, alpha_i> alpha_i, with alpha_i in weight
        // coordinates being the i-th Cartan column.
        for (label, rank) in [(TypeLabel::A, 3), (TypeLabel::D, 4)] {
            let s = sys(label, rank);
            for i in 0..rank {
                let si = WeylElement::simple(&s, i).unwrap();
                let ai = Root::simple(&s, i).unwrap();
                let mu = Weight::new(&s, (0..rank as i64).map(|k| k - 1).collect());
                let p = mu.pairing_root(&ai).unwrap();
                let expected = mu.add(&ai.to_weight().scaled(-p));
                assert_eq!(si.act_weight(&mu).unwrap(), expected);
            }
        }
    }

    fn enumerate_weyl(sys: &Arc<RootSystem>) -> Vec<WeylElement> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = vec![WeylElement::identity(sys)];
        seen.insert(WeylElement::identity(sys));
        while let Some(w) = queue.pop() {
            out.push(w.clone());
            for i in 0..sys.rank() {
                let next = w.compose(&WeylElement::simple(sys, i).unwrap());
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        out
    }

    #[test]
    fn exhaustive_pairing_bounds_small_ranks() {
        for (label, rank) in [(TypeLabel::A, 2), (TypeLabel::A, 3), (TypeLabel::D, 4)] {
            let s = sys(label, rank);
            let roots = all_roots(&s);
            for a in &roots {
                for b in &roots {
                    let p = a.pairing(b).unwrap();
                    assert_eq!(p, b.pairing(a).unwrap());
                    assert!((-2..=2).contains(&p));
                    assert_eq!(p == 2, a == b);
                    assert_eq!(p == -2, *a == b.negated());
                }
            }
        }
    }

    #[test]
    fn group_elements_permute_roots_small_ranks() {
        for (label, rank) in [(TypeLabel::A, 2), (TypeLabel::A, 3), (TypeLabel::D, 4)] {
            let s = sys(label, rank);
            let roots = all_roots(&s);
            for w in enumerate_weyl(&s) {
                for r in &roots {
                    let img = w.act_root(r).unwrap();
                    assert!(s.is_root_coords(img.coords()));
                }
            }
        }
    }

    #[test]
    fn pairing_invariance_exhaustive_a2() {
        let s = sys(TypeLabel::A, 2);
        let roots = all_roots(&s);
        for w in enumerate_weyl(&s) {
            for a in &roots {
                for b in &roots {
                    let lhs = w
                        .act_root(a)
                        .unwrap()
                        .pairing(&w.act_root(b).unwrap())
                        .unwrap();
                    assert_eq!(lhs, a.pairing(b).unwrap());
                    let wt = a.to_weight();
                    let lhs_w = w
                        .act_weight(&wt)
                        .unwrap()
                        .pairing_root(&w.act_root(b).unwrap())
                        .unwrap();
                    assert_eq!(lhs_w, wt.pairing_root(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn canonical_word_round_trip() {
        let s = sys(TypeLabel::A, 3);
        for w in enumerate_weyl(&s) {
            let word = w.canonical_word();
            assert_eq!(WeylElement::from_word(&s, &word).unwrap(), w);
            assert_eq!(word.len(), w.finite_length());
        }
    }
}
