//! Growth constants of hyperbolic censuses.
//!
//! For `V = P/Q` with `Q(0) = 1`, `v(n) ~ A z0^(-n)` where `z0` is the
//! smallest positive root of `Q` and `A = -P(z0) / (z0 Q'(z0))`. The root is
//! isolated with a Sturm sequence and bisected on dyadic points, with every
//! sign decided in exact integer arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::genfunc::{FaceDegree, Geometry, Schlafli, SymbolError};
use crate::polyarith::{bigint_to_f64, IntPoly, RationalGF};
use crate::recurrence::{rec_eval, LinRec};

/// Bisection depth: intervals of width `2^-42 < 2.3e-13`.
pub const ROOT_BITS: u32 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthClass {
    Hyperbolic,
    Euclidean,
    Tree,
}

impl GrowthClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            GrowthClass::Hyperbolic => "HYPERBOLIC",
            GrowthClass::Euclidean => "EUCLIDEAN",
            GrowthClass::Tree => "TREE",
        }
    }
}

/// The closed dyadic interval `[lo / 2^bits, hi / 2^bits]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u32,
}

impl RootEnclosure {
    pub fn lo_f64(&self) -> f64 {
        bigint_to_f64(&self.lo) / 2f64.powi(self.bits as i32)
    }

    pub fn hi_f64(&self) -> f64 {
        bigint_to_f64(&self.hi) / 2f64.powi(self.bits as i32)
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo_f64() + self.hi_f64())
    }

    pub fn width(&self) -> f64 {
        bigint_to_f64(&(&self.hi - &self.lo)) / 2f64.powi(self.bits as i32)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthInfo {
    pub class: GrowthClass,
    /// Enclosure of the smallest positive root of the denominator; absent
    /// for Euclidean symbols.
    pub root: Option<RootEnclosure>,
    pub z0: Option<f64>,
    pub lambda: f64,
    pub amplitude: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("denominator {0} has no root in (0, 1)")]
    NoRootFound(IntPoly),
    #[error("smallest root of {0} is not simple")]
    MultipleRoot(IntPoly),
}

/// Sturm sequence of a squarefree-or-not integer polynomial, each member
/// scaled by a positive constant to stay integral.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let b = &chain[n - 1];
        let b_pos = if b.leading_coeff().unwrap().is_negative() {
            -b
        } else {
            b.clone()
        };
        let r = chain[n - 2].pseudo_rem(&b_pos);
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let next = -(r.div_exact(&IntPoly::constant(c)).expect("content divides"));
        chain.push(next);
    }
    chain
}

fn sign_changes_at(chain: &[IntPoly], m: &BigInt, bits: u32) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = p.eval_dyadic_scaled(m, bits);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Number of distinct real roots of `chain[0]` in `(a, b]`, with both ends
/// given as numerators over `2^bits`.
fn roots_between(chain: &[IntPoly], a: &BigInt, b: &BigInt, bits: u32) -> usize {
    sign_changes_at(chain, a, bits).saturating_sub(sign_changes_at(chain, b, bits))
}

/// Certified enclosure of the smallest root of `q` in `(0, 1]`.
pub fn smallest_positive_root(q: &IntPoly) -> Result<RootEnclosure, GrowthError> {
    let chain = sturm_chain(q);
    let zero = BigInt::zero();
    if roots_between(&chain, &zero, &BigInt::one(), 0) == 0 {
        return Err(GrowthError::NoRootFound(q.clone()));
    }
    // Invariant: no root in (0, lo], at least one in (lo, hi].
    let mut lo = BigInt::zero();
    let mut hi = BigInt::one();
    for bits in 1..=ROOT_BITS {
        lo <<= 1;
        hi <<= 1;
        let mid = (&lo + &hi) >> 1;
        if roots_between(&chain, &zero, &mid, bits) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let enclosure = RootEnclosure {
        lo,
        hi,
        bits: ROOT_BITS,
    };

    // Simple root: Q' has no zero on the closed interval.
    let dq = q.derivative();
    let dchain = sturm_chain(&dq);
    let dq_lo = dq.eval_dyadic_scaled(&enclosure.lo, ROOT_BITS);
    if dq_lo.is_zero() || roots_between(&dchain, &enclosure.lo, &enclosure.hi, ROOT_BITS) > 0 {
        return Err(GrowthError::MultipleRoot(q.clone()));
    }
    Ok(enclosure)
}

/// True when `q` has opposite signs at the two ends of `root` (or vanishes
/// at the upper end, where a dyadic root lands).
pub fn sign_change_certified(q: &IntPoly, root: &RootEnclosure) -> bool {
    let a = q.eval_dyadic_scaled(&root.lo, root.bits);
    let b = q.eval_dyadic_scaled(&root.hi, root.bits);
    b.is_zero() || (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive())
}

/// Best double inside the enclosure: the upper end when it is an exact
/// root, otherwise a few Newton steps from the midpoint, kept only while
/// they stay inside.
fn polish(q: &IntPoly, root: &RootEnclosure) -> f64 {
    if q.eval_dyadic_scaled(&root.hi, root.bits).is_zero() {
        return root.hi_f64();
    }
    let (lo, hi) = (root.lo_f64(), root.hi_f64());
    let dq = q.derivative();
    let mut z = root.midpoint();
    for _ in 0..4 {
        let next = z - q.eval_f64(z) / dq.eval_f64(z);
        if !(lo..=hi).contains(&next) {
            break;
        }
        z = next;
    }
    z
}

pub fn growth(gf: &RationalGF, s: &Schlafli) -> Result<GrowthInfo, GrowthError> {
    match s.geometry() {
        Geometry::Spherical => return Err(SymbolError::SphericalOutOfScope(*s).into()),
        Geometry::Euclidean => {
            return Ok(GrowthInfo {
                class: GrowthClass::Euclidean,
                root: None,
                z0: None,
                lambda: 1.0,
                amplitude: None,
            })
        }
        Geometry::Hyperbolic => {}
    }
    let q = gf.den();
    let root = smallest_positive_root(q)?;
    let z0 = polish(q, &root);
    let amplitude = -gf.num().eval_f64(z0) / (z0 * q.derivative().eval_f64(z0));
    let (class, lambda) = match s.p {
        FaceDegree::Infinite => (GrowthClass::Tree, f64::from(s.q - 1)),
        FaceDegree::Finite(_) => (GrowthClass::Hyperbolic, 1.0 / z0),
    };
    Ok(GrowthInfo {
        class,
        root: Some(root),
        z0: Some(z0),
        lambda,
        amplitude: Some(amplitude),
    })
}

/// Symmetry of a coefficient sequence under `z -> 1/z` (and `z -> -1/z`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reciprocity {
    /// `z^d Q(1/z) = Q(z)`
    Palindromic,
    /// `z^d Q(1/z) = -Q(z)`
    AntiPalindromic,
    /// `z^d Q(-1/z) = ±Q(z)`: roots pair as `z, -1/z`.
    SkewPalindromic,
    None,
}

impl Reciprocity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reciprocity::Palindromic => "palindromic",
            Reciprocity::AntiPalindromic => "anti-palindromic",
            Reciprocity::SkewPalindromic => "skew-palindromic",
            Reciprocity::None => "none",
        }
    }
}

pub fn palindrome_check(q: &IntPoly) -> bool {
    q.is_palindromic()
}

pub fn reciprocity(q: &IntPoly) -> Reciprocity {
    let c = q.coeffs();
    let d = c.len().saturating_sub(1);
    if q.is_palindromic() {
        return Reciprocity::Palindromic;
    }
    if (0..=d).all(|i| c[i] == -&c[d - i]) {
        return Reciprocity::AntiPalindromic;
    }
    // z^d Q(-1/z) has coefficient (-1)^(d-i) c[d-i] at z^i
    let flipped = |i: usize| {
        if (d - i).is_multiple_of(2) {
            c[d - i].clone()
        } else {
            -&c[d - i]
        }
    };
    if (0..=d).all(|i| c[i] == flipped(i)) || (0..=d).all(|i| c[i] == -flipped(i)) {
        return Reciprocity::SkewPalindromic;
    }
    Reciprocity::None
}

/// `v(n) / v(n-1)` from exact recurrence terms.
pub fn ratio_probe(rec: &LinRec, n: usize) -> f64 {
    assert!(n >= 1, "ratio_probe needs n >= 1");
    let v = rec_eval(rec, n);
    big_ratio(&v[n], &v[n - 1])
}

/// `a / b` to double precision, for integers of any size.
pub fn big_ratio(a: &BigInt, b: &BigInt) -> f64 {
    let bits = a.bits().max(b.bits());
    let shift = bits.saturating_sub(900);
    bigint_to_f64(&(a >> shift)) / bigint_to_f64(&(b >> shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfunc::derive;
    use crate::recurrence::rec_from_gf;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn sturm_counts_roots() {
        // (z - 1/4)(z - 1/2)(z - 3)  scaled: (4z-1)(2z-1)(z-3)
        let q = &(&p(&[-1, 4]) * &p(&[-1, 2])) * &p(&[-3, 1]);
        let chain = sturm_chain(&q);
        assert_eq!(roots_between(&chain, &BigInt::zero(), &BigInt::one(), 0), 2);
        assert_eq!(
            roots_between(&chain, &BigInt::zero(), &BigInt::from(4), 0),
            3
        );
        // (0, 3/8]
        assert_eq!(
            roots_between(&chain, &BigInt::zero(), &BigInt::from(3), 3),
            1
        );
    }

    #[test]
    fn root_of_square_tiling_five() {
        let root = smallest_positive_root(&p(&[1, -3, 1])).unwrap();
        let exact = (3.0 - 5f64.sqrt()) / 2.0;
        assert!(root.width() <= 1e-12);
        assert!(root.lo_f64() <= exact && exact <= root.hi_f64());
        assert!(sign_change_certified(&p(&[1, -3, 1]), &root));
    }

    #[test]
    fn dyadic_root_is_captured() {
        // 1 - 2z has its root exactly at 1/2
        let root = smallest_positive_root(&p(&[1, -2])).unwrap();
        assert!(root.lo_f64() < 0.5 && root.hi_f64() == 0.5);
        assert!(sign_change_certified(&p(&[1, -2]), &root));
    }

    #[test]
    fn double_root_and_missing_root_are_errors() {
        assert!(matches!(
            smallest_positive_root(&p(&[1, -2, 1])),
            Err(GrowthError::MultipleRoot(_))
        ));
        assert!(matches!(
            smallest_positive_root(&p(&[1, 1])),
            Err(GrowthError::NoRootFound(_))
        ));
    }

    #[test]
    fn growth_examples() {
        let s = Schlafli::finite(4, 5).unwrap();
        let g = growth(&derive(s).unwrap().v, &s).unwrap();
        assert_eq!(g.class, GrowthClass::Hyperbolic);
        assert!((g.lambda - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);

        let s = Schlafli::tree(4).unwrap();
        let g = growth(&derive(s).unwrap().v, &s).unwrap();
        assert_eq!(g.class, GrowthClass::Tree);
        assert_eq!(g.lambda, 3.0);
        // v(n) = (4/3) 3^n for n >= 1
        assert!((g.amplitude.unwrap() - 4.0 / 3.0).abs() < 1e-9);

        let s = Schlafli::finite(4, 4).unwrap();
        let g = growth(&derive(s).unwrap().v, &s).unwrap();
        assert_eq!(g.class, GrowthClass::Euclidean);
        assert!(g.z0.is_none() && g.amplitude.is_none());
    }

    #[test]
    fn palindromes() {
        assert!(palindrome_check(&p(&[1, -3, 1])));
        assert!(!palindrome_check(&p(&[1, -2, -1])));
        assert!(!palindrome_check(&p(&[1, -3, -1])));
        assert!(palindrome_check(&p(&[1, 1])));
        assert_eq!(reciprocity(&p(&[1, -3, -1])), Reciprocity::SkewPalindromic);
        assert_eq!(reciprocity(&p(&[1, 0, -1])), Reciprocity::AntiPalindromic);
        assert_eq!(reciprocity(&p(&[1, 2, 5])), Reciprocity::None);
    }

    #[test]
    fn finite_face_denominators_are_palindromic() {
        for p in 3..=12 {
            for q in 3..=12 {
                let s = Schlafli::finite(p, q).unwrap();
                if let Ok(gf) = derive(s) {
                    assert_eq!(reciprocity(gf.v.den()), Reciprocity::Palindromic, "{s}");
                }
            }
        }
        let tree = derive(Schlafli::tree(3).unwrap()).unwrap();
        assert_eq!(reciprocity(tree.v.den()), Reciprocity::None);
    }

    #[test]
    fn ratio_probe_examples() {
        let s = Schlafli::tree(3).unwrap();
        let rec = rec_from_gf(&derive(s).unwrap().v);
        assert_eq!(ratio_probe(&rec, 10), 2.0);

        for s in [
            Schlafli::finite(4, 5).unwrap(),
            Schlafli::finite(3, 7).unwrap(),
        ] {
            let gf = derive(s).unwrap();
            let lambda = growth(&gf.v, &s).unwrap().lambda;
            let r = ratio_probe(&rec_from_gf(&gf.v), 60);
            assert!((r - lambda).abs() <= 1e-9, "{s}: {r} vs {lambda}");
        }
    }
}
