use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order: `coeffs[i]` is the
/// coefficient of `z^i`. The zero polynomial is the empty vector, and a
/// nonzero polynomial never carries a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            c = -c;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// `2^(k*d) * self(m / 2^k)` where `d` is the degree: the exact value at
    /// a dyadic point, cleared of denominators. Its sign is the sign of the
    /// polynomial at `m / 2^k`.
    pub fn eval_dyadic_scaled(&self, m: &BigInt, k: u32) -> BigInt {
        let Some((lead, rest)) = self.coeffs.split_last() else {
            return BigInt::zero();
        };
        let step = BigInt::one() << k;
        let mut scale = BigInt::one();
        let mut acc = lead.clone();
        for c in rest.iter().rev() {
            scale *= &step;
            acc = acc * m + c * &scale;
        }
        acc
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + bigint_to_f64(c))
    }

    /// Exact quotient `self / divisor`, failing unless the division leaves
    /// no remainder and the quotient has integer coefficients.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.degree() < divisor.degree() {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(PolyError::NotDivisible)
            };
        }
        let lead = divisor.leading_coeff().unwrap();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// Pseudo-remainder: the remainder of `lc(b)^k * a` divided by `b`, for
    /// the smallest `k` that keeps every coefficient integral. When `lc(b)`
    /// is positive the result is a positive multiple of the remainder over
    /// the rationals.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo-remainder by zero polynomial");
        let lead = b.leading_coeff().unwrap();
        let db = b.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > db {
            let top = rem.pop().unwrap();
            let k = rem.len() - db;
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (j, d) in b.coeffs[..db].iter().enumerate() {
                rem[k + j] -= &top * d;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Greatest common divisor over the rationals, returned as a primitive
    /// integer polynomial with positive leading coefficient.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// True if the coefficient sequence reads the same reversed.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

impl From<Vec<i64>> for IntPoly {
    fn from(v: Vec<i64>) -> Self {
        IntPoly::from_i64s(&v)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "z")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
