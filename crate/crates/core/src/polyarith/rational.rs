use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, PolyError};

/// A rational function `P(z)/Q(z)` in canonical form: `P` and `Q` share no
/// factor of positive degree, no integer content is shared either, and
/// `Q(0) = 1`.
///
/// Canonical form is unique, so two `RationalGF` values denote the same
/// rational function exactly when they compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalGF {
    num: IntPoly,
    den: IntPoly,
}

impl RationalGF {
    /// Reduce `num/den` to canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, PolyError> {
        if den.constant_term().is_zero() {
            return Err(PolyError::ZeroDenominatorConstant);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() > 0 {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        } else {
            (num, den)
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact(&IntPoly::constant(c.clone()))?;
            den = den.div_exact(&IntPoly::constant(c))?;
        }
        let d0 = den.constant_term();
        if d0.is_negative() {
            num = -num;
            den = -den;
        }
        let d0 = den.constant_term();
        if !d0.is_one() {
            return Err(PolyError::NonUnitDenominatorConstant(d0));
        }
        Ok(RationalGF { num, den })
    }

    /// Wrap a pair without reducing it. The denominator must have constant
    /// term 1 so that the power series is integral.
    pub fn unreduced(num: IntPoly, den: IntPoly) -> Result<Self, PolyError> {
        match den.constant_term() {
            c if c.is_one() => Ok(RationalGF { num, den }),
            c if c.is_zero() => Err(PolyError::ZeroDenominatorConstant),
            c => Err(PolyError::NonUnitDenominatorConstant(c)),
        }
    }

    pub fn zero() -> Self {
        RationalGF {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalGF {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Re-reduce. A value built by [`RationalGF::new`] is returned unchanged.
    pub fn normalized(&self) -> Result<Self, PolyError> {
        Self::new(self.num.clone(), self.den.clone())
    }

    /// First `n_max + 1` power-series coefficients.
    pub fn series(&self, n_max: usize) -> Vec<BigInt> {
        series_coeffs(self, n_max)
    }

    /// Cross-multiplied equality; does not rely on either side being reduced.
    pub fn same_function(&self, other: &RationalGF) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// First `n_max + 1` Taylor coefficients of `P/Q` by long division.
///
/// Since `Q(0) = 1` every coefficient is an integer:
/// `s[n] = P[n] - sum_{i=1..d} Q[i] s[n-i]`.
pub fn series_coeffs(gf: &RationalGF, n_max: usize) -> Vec<BigInt> {
    let den = gf.den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut s = gf.num.coeff(n);
        for (i, qi) in den.iter().enumerate().skip(1).take(n) {
            if !qi.is_zero() {
                s -= qi * &out[n - i];
            }
        }
        out.push(s);
    }
    out
}

impl Add for &RationalGF {
    type Output = RationalGF;

    fn add(self, rhs: &RationalGF) -> RationalGF {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        // Both denominators have constant term 1, so the product does too
        // and reduction cannot fail.
        RationalGF::new(num, den).expect("sum of normalized series is normalizable")
    }
}

impl Add for RationalGF {
    type Output = RationalGF;

    fn add(self, rhs: RationalGF) -> RationalGF {
        &self + &rhs
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGF[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn normalize_reduces_six_four_pre_form() {
        // (1+z)(1-z^3) over 1 - 3z + 3z^3 - z^4
        let num = &p(&[1, 1]) * &p(&[1, 0, 0, -1]);
        let gf = RationalGF::new(num, p(&[1, -3, 0, 3, -1])).unwrap();
        assert_eq!(gf.num(), &p(&[1, 1, 1]));
        assert_eq!(gf.den(), &p(&[1, -3, 1]));
    }

    #[test]
    fn normalize_content_and_full_cancellation() {
        let gf = RationalGF::new(p(&[2, 2]), p(&[2, -2])).unwrap();
        assert_eq!((gf.num(), gf.den()), (&p(&[1, 1]), &p(&[1, -1])));

        let num = &p(&[1, 1]) * &p(&[1, 0, -1]);
        let gf = RationalGF::new(num, p(&[1, -1])).unwrap();
        assert_eq!(gf.num(), &p(&[1, 2, 1]));
        assert_eq!(gf.den(), &p(&[1]));
    }

    #[test]
    fn normalize_rejects_bad_denominators() {
        assert_eq!(
            RationalGF::new(p(&[1]), p(&[0, 1])),
            Err(PolyError::ZeroDenominatorConstant)
        );
        assert!(matches!(
            RationalGF::new(p(&[1]), p(&[2, 1])),
            Err(PolyError::NonUnitDenominatorConstant(_))
        ));
    }

    #[test]
    fn normalize_flips_negative_constant() {
        let gf = RationalGF::new(p(&[1, 1]), p(&[-1, 2])).unwrap();
        assert_eq!(gf.num(), &p(&[-1, -1]));
        assert_eq!(gf.den(), &p(&[1, -2]));
    }

    #[test]
    fn series_examples() {
        let gf = RationalGF::new(p(&[1, 1]), p(&[1, -2])).unwrap();
        assert_eq!(series_coeffs(&gf, 3), ints(&[1, 3, 6, 12]));

        let gf = RationalGF::new(p(&[1, 2, 1]), p(&[1, -3, 1])).unwrap();
        assert_eq!(series_coeffs(&gf, 4), ints(&[1, 5, 15, 40, 105]));

        let gf = RationalGF::new(p(&[1, 4, 1]), p(&[1, -3, 1])).unwrap();
        assert_eq!(series_coeffs(&gf, 4), ints(&[1, 7, 21, 56, 147]));

        assert_eq!(series_coeffs(&RationalGF::zero(), 2), ints(&[0, 0, 0]));
    }

    #[test]
    fn addition_is_exact() {
        let a = RationalGF::new(p(&[0, 1]), p(&[1, -1])).unwrap();
        let b = RationalGF::one();
        // 1 + z/(1-z) = 1/(1-z)
        assert_eq!(&a + &b, RationalGF::new(p(&[1]), p(&[1, -1])).unwrap());
        assert!(
            (&a + &b).same_function(&RationalGF::unreduced(p(&[1, 1]), p(&[1, 0, -1])).unwrap())
        );
    }
}
