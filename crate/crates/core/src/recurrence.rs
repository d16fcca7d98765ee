//! Linear recurrences read off a rational generating function.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::genfunc::{derive, Schlafli};
use crate::polyarith::{series_coeffs, RationalGF};

/// `v(n) = sum_{i=1..d} c_i v(n-i)` for `n > deg P`, seeded with the
/// series terms `v(0..=max(deg P, d-1))`.
///
/// The terms with `n <= deg P` are exactly where the numerator adds an
/// inhomogeneous contribution, so they come from series division rather
/// than from the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinRec {
    /// `c_1..c_d`, with `c_i = -Q_i`.
    pub coeffs: Vec<BigInt>,
    pub initial: Vec<BigInt>,
    /// Degree of the numerator; `-1` when it is zero.
    pub numerator_degree: isize,
}

impl LinRec {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// First index at which the homogeneous recurrence takes over.
    pub fn homogeneous_from(&self) -> usize {
        (self.numerator_degree + 1).max(0) as usize
    }
}

pub fn rec_from_gf(gf: &RationalGF) -> LinRec {
    let den = gf.den().coeffs();
    let coeffs: Vec<BigInt> = den.iter().skip(1).map(|c| -c).collect();
    let numerator_degree = gf.num().degree();
    let seed_len = ((numerator_degree + 1).max(0) as usize).max(coeffs.len());
    let initial = if seed_len == 0 {
        Vec::new()
    } else {
        series_coeffs(gf, seed_len - 1)
    };
    LinRec {
        coeffs,
        initial,
        numerator_degree,
    }
}

/// `v(0..=n_max)` exactly, keeping only the last `d` terms in the working
/// window.
pub fn rec_eval(rec: &LinRec, n_max: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = rec.initial.iter().take(n_max + 1).cloned().collect();
    if out.len() > n_max {
        return out;
    }
    let d = rec.order();
    if d == 0 {
        out.resize(n_max + 1, BigInt::zero());
        return out;
    }
    // window[0] = v(n-d), ..., window[d-1] = v(n-1)
    let mut window: VecDeque<BigInt> = out[out.len() - d..].iter().cloned().collect();
    for _ in out.len()..=n_max {
        let next = rec
            .coeffs
            .iter()
            .zip(window.iter().rev())
            .filter(|(c, _)| !c.is_zero())
            .fold(BigInt::zero(), |acc, (c, v)| acc + c * v);
        window.pop_front();
        window.push_back(next.clone());
        out.push(next);
    }
    out
}

/// The three tessellations whose census is a multiple of every other
/// Fibonacci number: `v(n) = k F(2n)` for `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibonacciFamily {
    /// `{4,5}`, `k = 5`
    Square,
    /// `{6,4}`, `k = 4`
    Hexagon,
    /// `{3,7}`, `k = 7`
    Triangle,
}

impl FibonacciFamily {
    pub const ALL: [FibonacciFamily; 3] = [Self::Square, Self::Hexagon, Self::Triangle];

    pub fn from_multiplier(k: u32) -> Option<Self> {
        match k {
            5 => Some(Self::Square),
            4 => Some(Self::Hexagon),
            7 => Some(Self::Triangle),
            _ => None,
        }
    }

    pub fn multiplier(&self) -> u32 {
        match self {
            Self::Square => 5,
            Self::Hexagon => 4,
            Self::Triangle => 7,
        }
    }

    pub fn symbol(&self) -> Schlafli {
        let (p, q) = match self {
            Self::Square => (4, 5),
            Self::Hexagon => (6, 4),
            Self::Triangle => (3, 7),
        };
        Schlafli::finite(p, q).expect("fixed admissible symbol")
    }
}

/// `F(0..=m)` straight from `F(m) = F(m-1) + F(m-2)`.
pub fn fibonacci(m: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(), BigInt::from(1)];
    while f.len() <= m {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f.truncate(m + 1);
    f
}

/// True iff `v(n) = k F(2n)` for `n = 1..=n_max`, with `v` taken from the
/// recurrence of the derived generating function.
pub fn fibonacci_check(family: FibonacciFamily, n_max: usize) -> bool {
    let gf = derive(family.symbol()).expect("fixed admissible symbol");
    let v = rec_eval(&rec_from_gf(&gf.v), n_max);
    let fib = fibonacci(2 * n_max);
    let k = BigInt::from(family.multiplier());
    (1..=n_max).all(|n| v[n] == &k * &fib[2 * n])
}
