//! Canonical text forms. `parse(format(e)) == e`, and formatting a parsed
//! string canonicalizes it.

use daws::{AffineWeylElement, DoubleAffineRoot, SemigroupElement};
use serde_json::{json, Value};

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Canonical element text: the X part always present (simple-root
/// coordinates when the finite part lies in the root lattice, else the
/// `w:` form), the Y part when nonzero, the finite word when nontrivial.
pub fn element(x: &SemigroupElement) -> String {
    let zeta = x.zeta();
    let mut out = match zeta.mu().root_coords() {
        Some(rc) => format!("X[{};{};{}]", join(&rc), zeta.m(), zeta.level()),
        None => format!(
            "X[w:{};{};{}]",
            join(zeta.mu().coords()),
            zeta.m(),
            zeta.level()
        ),
    };
    let w = x.group_part();
    if w.lambda().iter().any(|&c| c != 0) {
        out.push_str(&format!(" Y[{}]", join(w.lambda())));
    }
    if !w.finite_part().is_identity() {
        out.push(' ');
        for i in w.finite_part().canonical_word() {
            out.push_str(&format!("s{}", i + 1));
        }
    }
    out
}

pub fn root(alpha: &DoubleAffineRoot) -> String {
    format!("{};{};{}", join(alpha.fin().coords()), alpha.r(), alpha.j())
}

/// Reduced word over the affine generators s0..sn by greedy left descents;
/// "e" for the identity.
pub fn affine_word(w: &AffineWeylElement) -> String {
    let sys = w.system().clone();
    let mut cur = w.clone();
    let mut out = String::new();
    while !cur.is_identity() {
        let len = cur.length();
        let mut step = None;
        for i in 0..=sys.rank() {
            let si = AffineWeylElement::simple(&sys, i).unwrap();
            if si.compose(&cur).length() < len {
                step = Some((i, si));
                break;
            }
        }
        let (i, si) = step.expect("non-identity element has a descent");
        out.push_str(&format!("s{}", i));
        cur = si.compose(&cur);
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

pub fn root_json(alpha: &DoubleAffineRoot) -> Value {
    json!([alpha.fin().coords(), alpha.r(), alpha.j()])
}

pub fn quote(s: &str) -> String {
    format!("\"{}\"", s)
}
