//! Generating functions for the vertex census of `{p,q}`.
//!
//! Each case sets up the type-count generating functions `A`, `B`, `C`
//! from their solved closed forms and assembles `V = 1 + A + B + C`; the
//! reduced form of `V` comes out of [`RationalGF::new`] rather than being
//! written down by hand.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::polyarith::{IntPoly, PolyError, RationalGF};

/// Face degree of a tessellation; `Infinite` gives the `q`-regular tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceDegree {
    Finite(u32),
    Infinite,
}

impl fmt::Display for FaceDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceDegree::Finite(p) => write!(f, "{p}"),
            FaceDegree::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for FaceDegree {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(FaceDegree::Infinite),
            t => t
                .parse::<u32>()
                .map(FaceDegree::Finite)
                .map_err(|_| SymbolError::Unparseable(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// Schläfli symbol `{p,q}`: `p`-gon faces, `q` faces at every vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Schlafli {
    pub p: FaceDegree,
    pub q: u32,
}

impl Schlafli {
    /// Validates only the degree bounds `p >= 3`, `q >= 3`; spherical
    /// symbols are representable.
    pub fn new(p: FaceDegree, q: u32) -> Result<Self, SymbolError> {
        if let FaceDegree::Finite(pp) = p {
            if pp < 3 {
                return Err(SymbolError::BadFaceDegree(pp));
            }
        }
        if q < 3 {
            return Err(SymbolError::BadDegree(q));
        }
        Ok(Schlafli { p, q })
    }

    pub fn finite(p: u32, q: u32) -> Result<Self, SymbolError> {
        Self::new(FaceDegree::Finite(p), q)
    }

    pub fn tree(q: u32) -> Result<Self, SymbolError> {
        Self::new(FaceDegree::Infinite, q)
    }

    pub fn finite_p(&self) -> Option<u32> {
        match self.p {
            FaceDegree::Finite(p) => Some(p),
            FaceDegree::Infinite => None,
        }
    }

    /// Sign of `1/p + 1/q - 1/2`, in integers: compares `2(p+q)` with `pq`.
    pub fn geometry(&self) -> Geometry {
        let q = u64::from(self.q);
        match self.p {
            FaceDegree::Infinite => Geometry::Hyperbolic,
            FaceDegree::Finite(p) => {
                let p = u64::from(p);
                match (2 * (p + q)).cmp(&(p * q)) {
                    std::cmp::Ordering::Greater => Geometry::Spherical,
                    std::cmp::Ordering::Equal => Geometry::Euclidean,
                    std::cmp::Ordering::Less => Geometry::Hyperbolic,
                }
            }
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.geometry() != Geometry::Spherical
    }

    pub fn is_euclidean(&self) -> bool {
        self.geometry() == Geometry::Euclidean
    }

    fn require_admissible(&self) -> Result<(), SymbolError> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(SymbolError::SphericalOutOfScope(*self))
        }
    }
}

impl fmt::Display for Schlafli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("vertex degree q = {0} is below 3")]
    BadDegree(u32),
    #[error("face degree p = {0} is below 3")]
    BadFaceDegree(u32),
    #[error("{0} is spherical (1/p + 1/q > 1/2) and out of scope")]
    SphericalOutOfScope(Schlafli),
    #[error("{symbol} does not fit the {case} derivation")]
    BadShape { symbol: Schlafli, case: CaseTag },
    #[error("cannot parse face degree {0:?}")]
    Unparseable(String),
    #[error("polynomial arithmetic failed: {0}")]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Tree,
    Even,
    Triangle,
    Odd,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Tree => "TREE",
            CaseTag::Even => "EVEN",
            CaseTag::Triangle => "TRIANGLE",
            CaseTag::Odd => "ODD",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The census generating functions of one tessellation.
///
/// `a`, `b`, `c` count type-A, type-B and type-C vertices per generation.
/// For the `TRIANGLE` case they refer to the graph with all
/// same-generation edges deleted, where every face is a quadrilateral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusGF {
    pub symbol: Schlafli,
    pub case: CaseTag,
    pub v: RationalGF,
    pub a: RationalGF,
    pub b: RationalGF,
    pub c: RationalGF,
}

impl CensusGF {
    fn assemble(
        symbol: Schlafli,
        case: CaseTag,
        a: RationalGF,
        b: RationalGF,
        c: RationalGF,
    ) -> Self {
        let v = &(&(&RationalGF::one() + &a) + &b) + &c;
        CensusGF {
            symbol,
            case,
            v,
            a,
            b,
            c,
        }
    }

    /// The type-count generating functions in `(A, B, C)` order.
    pub fn types(&self) -> [&RationalGF; 3] {
        [&self.a, &self.b, &self.c]
    }
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn mono(c: i64, k: usize) -> IntPoly {
    IntPoly::monomial(int(c), k)
}

fn sum(terms: &[IntPoly]) -> IntPoly {
    terms.iter().fold(IntPoly::zero(), |acc, t| &acc + t)
}

/// `{∞,q}`: the `q`-regular tree.
pub fn gf_infinite(q: u32) -> Result<CensusGF, SymbolError> {
    let symbol = Schlafli::tree(q)?;
    let q = i64::from(q);
    let den = sum(&[mono(1, 0), mono(-(q - 1), 1)]);
    let a = RationalGF::new(mono(q, 1), den)?;
    Ok(CensusGF::assemble(
        symbol,
        CaseTag::Tree,
        a,
        RationalGF::zero(),
        RationalGF::zero(),
    ))
}

/// `{2r,q}`: every edge joins consecutive generations; vertices have one
/// parent (type A) or two (type B).
pub fn gf_even(p: u32, q: u32) -> Result<CensusGF, SymbolError> {
    let symbol = Schlafli::finite(p, q)?;
    if !p.is_multiple_of(2) || p < 4 {
        return Err(SymbolError::BadShape {
            symbol,
            case: CaseTag::Even,
        });
    }
    symbol.require_admissible()?;
    let r = (p / 2) as usize;
    let q = i64::from(q);

    // D = 1 - (q-1)z + (q-1)z^r - z^(r+1)
    let den = sum(&[
        mono(1, 0),
        mono(-(q - 1), 1),
        mono(q - 1, r),
        mono(-1, r + 1),
    ]);
    // A = qz(1 - 2z^(r-1) + z^r) / D
    let a_num = sum(&[mono(1, 0), mono(-2, r - 1), mono(1, r)])
        .shift(1)
        .scale(&int(q));
    // B = qz^r(1 - z) / D
    let b_num = sum(&[mono(1, 0), mono(-1, 1)]).shift(r).scale(&int(q));

    let a = RationalGF::new(a_num, den.clone())?;
    let b = RationalGF::new(b_num, den)?;
    Ok(CensusGF::assemble(
        symbol,
        CaseTag::Even,
        a,
        b,
        RationalGF::zero(),
    ))
}

/// `{3,q}`, counted through the quadrilateral graph obtained by deleting
/// the same-generation (fraternal) edges: every non-origin vertex there has
/// degree `q - 2`.
pub fn gf_triangle(q: u32) -> Result<CensusGF, SymbolError> {
    let symbol = Schlafli::finite(3, q)?;
    symbol.require_admissible()?;
    let q = i64::from(q);

    // D = 1 - (q-4)z + z^2
    let den = sum(&[mono(1, 0), mono(-(q - 4), 1), mono(1, 2)]);
    let a_num = sum(&[mono(1, 0), mono(-1, 1)]).shift(1).scale(&int(q));
    let b_num = mono(q, 2);

    let a = RationalGF::new(a_num, den.clone())?;
    let b = RationalGF::new(b_num, den)?;
    Ok(CensusGF::assemble(
        symbol,
        CaseTag::Triangle,
        a,
        b,
        RationalGF::zero(),
    ))
}

/// `{2r+1,q}` with `r >= 2`: besides type A and B there are type-C
/// vertices, joined to one same-generation cousin.
pub fn gf_odd(p: u32, q: u32) -> Result<CensusGF, SymbolError> {
    let symbol = Schlafli::finite(p, q)?;
    if p.is_multiple_of(2) || p < 5 {
        return Err(SymbolError::BadShape {
            symbol,
            case: CaseTag::Odd,
        });
    }
    symbol.require_admissible()?;
    let r = ((p - 1) / 2) as usize;
    let q = i64::from(q);

    // D = 1 - (q-1)z + 2z^r - 2z^(r+1) + (q-1)z^(2r) - z^(2r+1)
    let den = sum(&[
        mono(1, 0),
        mono(-(q - 1), 1),
        mono(2, r),
        mono(-2, r + 1),
        mono(q - 1, 2 * r),
        mono(-1, 2 * r + 1),
    ]);
    // A = qz(1 + z^r)(1 - 2z^(r-1) + z^r) / D
    let a_num = &sum(&[mono(1, 0), mono(1, r)]) * &sum(&[mono(1, 0), mono(-2, r - 1), mono(1, r)]);
    let a_num = a_num.shift(1).scale(&int(q));
    let one_minus_z = sum(&[mono(1, 0), mono(-1, 1)]);
    // B = qz^(2r)(1 - z) / D,  C = 2qz^r(1 - z) / D
    let b_num = one_minus_z.shift(2 * r).scale(&int(q));
    let c_num = one_minus_z.shift(r).scale(&int(2 * q));

    let a = RationalGF::new(a_num, den.clone())?;
    let b = RationalGF::new(b_num, den.clone())?;
    let c = RationalGF::new(c_num, den)?;
    Ok(CensusGF::assemble(symbol, CaseTag::Odd, a, b, c))
}

/// Route a symbol to its derivation.
pub fn derive(s: Schlafli) -> Result<CensusGF, SymbolError> {
    s.require_admissible()?;
    match s.p {
        FaceDegree::Infinite => gf_infinite(s.q),
        FaceDegree::Finite(3) => gf_triangle(s.q),
        FaceDegree::Finite(p) if p % 2 == 0 => gf_even(p, s.q),
        FaceDegree::Finite(p) => gf_odd(p, s.q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn gf(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::new(p(num), p(den)).unwrap()
    }

    fn series(g: &RationalGF, n: usize) -> Vec<i64> {
        g.series(n)
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn admissibility_is_exact_at_the_euclidean_boundary() {
        for (pp, q) in [(4, 4), (3, 6), (6, 3)] {
            assert_eq!(
                Schlafli::finite(pp, q).unwrap().geometry(),
                Geometry::Euclidean
            );
        }
        for (pp, q) in [(3, 3), (4, 3), (3, 4), (5, 3), (3, 5)] {
            assert_eq!(
                Schlafli::finite(pp, q).unwrap().geometry(),
                Geometry::Spherical
            );
        }
        assert_eq!(
            Schlafli::finite(7, 3).unwrap().geometry(),
            Geometry::Hyperbolic
        );
        assert_eq!(Schlafli::tree(3).unwrap().geometry(), Geometry::Hyperbolic);
        assert_eq!(Schlafli::finite(2, 5), Err(SymbolError::BadFaceDegree(2)));
        assert_eq!(Schlafli::tree(2), Err(SymbolError::BadDegree(2)));
    }

    #[test]
    fn tree_case() {
        let g = gf_infinite(3).unwrap();
        assert_eq!(g.v, gf(&[1, 1], &[1, -2]));
        assert_eq!(series(&g.v, 4), vec![1, 3, 6, 12, 24]);
        assert_eq!(series(&gf_infinite(4).unwrap().v, 5)[5], 324);
        assert_eq!(gf_infinite(2), Err(SymbolError::BadDegree(2)));
    }

    #[test]
    fn even_case_reduced_forms() {
        assert_eq!(gf_even(4, 4).unwrap().v, gf(&[1, 2, 1], &[1, -2, 1]));
        assert_eq!(gf_even(4, 5).unwrap().v, gf(&[1, 2, 1], &[1, -3, 1]));
        assert_eq!(gf_even(6, 3).unwrap().v, gf(&[1, 1, 1], &[1, -2, 1]));
        assert_eq!(gf_even(6, 4).unwrap().v, gf(&[1, 1, 1], &[1, -3, 1]));
        assert_eq!(series(&gf_even(4, 4).unwrap().v, 4), vec![1, 4, 8, 12, 16]);
        assert_eq!(series(&gf_even(6, 3).unwrap().v, 4), vec![1, 3, 6, 9, 12]);
    }

    #[test]
    fn even_case_rejects_wrong_shapes() {
        assert!(matches!(gf_even(5, 4), Err(SymbolError::BadShape { .. })));
        assert!(matches!(
            gf_even(4, 3),
            Err(SymbolError::SphericalOutOfScope(_))
        ));
    }

    #[test]
    fn triangle_case() {
        assert_eq!(gf_triangle(6).unwrap().v, gf(&[1, 4, 1], &[1, -2, 1]));
        assert_eq!(gf_triangle(7).unwrap().v, gf(&[1, 4, 1], &[1, -3, 1]));
        assert_eq!(
            series(&gf_triangle(6).unwrap().v, 4),
            vec![1, 6, 12, 18, 24]
        );
        assert!(matches!(
            gf_triangle(5),
            Err(SymbolError::SphericalOutOfScope(_))
        ));
    }

    #[test]
    fn odd_case_matches_reduced_form() {
        // r = 2, q = 4
        let g = gf_odd(5, 4).unwrap();
        assert_eq!(g.v, gf(&[1, 2, 4, 2, 1], &[1, -2, 0, -2, 1]));
        assert_eq!(series(&g.v, 1), vec![1, 4]);
        assert!(matches!(
            gf_odd(5, 3),
            Err(SymbolError::SphericalOutOfScope(_))
        ));
        assert!(matches!(gf_odd(3, 7), Err(SymbolError::BadShape { .. })));
        assert!(matches!(gf_odd(6, 4), Err(SymbolError::BadShape { .. })));
    }

    #[test]
    fn odd_case_general_reduced_form() {
        // numerator 1 + 2z + ... + 2z^(r-1) + 4z^r + 2z^(r+1) + ... + 2z^(2r-1) + z^(2r)
        // denominator 1 - (q-2)(z + ... + z^(r-1)) - (q-4)z^r - (q-2)(z^(r+1) + ... + z^(2r-1)) + z^(2r)
        for r in 2..=5usize {
            for q in 3..=9i64 {
                let pp = 2 * r as u32 + 1;
                let Ok(g) = gf_odd(pp, q as u32) else {
                    continue;
                };
                let mut num = vec![2i64; 2 * r + 1];
                num[0] = 1;
                num[r] = 4;
                num[2 * r] = 1;
                let mut den = vec![-(q - 2); 2 * r + 1];
                den[0] = 1;
                den[r] = -(q - 4);
                den[2 * r] = 1;
                assert_eq!(g.v, gf(&num, &den), "{{{pp},{q}}}");
            }
        }
    }

    #[test]
    fn dispatch() {
        let s = |pp: u32, q| Schlafli::finite(pp, q).unwrap();
        assert_eq!(derive(s(4, 4)).unwrap().case, CaseTag::Even);
        assert_eq!(derive(s(3, 6)).unwrap().case, CaseTag::Triangle);
        assert_eq!(derive(s(7, 3)).unwrap().case, CaseTag::Odd);
        assert_eq!(
            derive(Schlafli::tree(3).unwrap()).unwrap().case,
            CaseTag::Tree
        );
        assert_eq!(
            derive(s(3, 5)),
            Err(SymbolError::SphericalOutOfScope(s(3, 5)))
        );
    }

    #[test]
    fn face_degree_parsing() {
        assert_eq!("inf".parse::<FaceDegree>().unwrap(), FaceDegree::Infinite);
        assert_eq!("7".parse::<FaceDegree>().unwrap(), FaceDegree::Finite(7));
        assert!("seven".parse::<FaceDegree>().is_err());
    }
}
