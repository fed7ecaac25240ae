//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficient `i` multiplies `x^i`. The zero polynomial has no coefficients
/// and a nonzero polynomial never carries a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> DensePoly {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> DensePoly {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> DensePoly {
        DensePoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> DensePoly {
        DensePoly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> DensePoly {
        DensePoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x - root`.
    pub fn linear_root(root: &Rational) -> DensePoly {
        DensePoly::new(vec![-root, Rational::one()])
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: Rational, c1: Rational) -> DensePoly {
        DensePoly::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    pub fn scale(&self, c: &Rational) -> DensePoly {
        if c.is_zero() {
            return DensePoly::zero();
        }
        DensePoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((DensePoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((DensePoly::new(quot), DensePoly::new(rem)))
    }

    /// Divide by the monic linear factor `x - root`; returns quotient and the
    /// remainder `self(root)`.
    pub fn div_linear(&self, root: &Rational) -> (DensePoly, Rational) {
        if self.coeffs.is_empty() {
            return (DensePoly::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let cur = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (DensePoly::new(quot), cur);
            }
            quot[i - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }

    /// `p(alpha * x + beta)`.
    pub fn compose_affine(&self, alpha: &Rational, beta: &Rational) -> DensePoly {
        let inner = DensePoly::linear(beta.clone(), alpha.clone());
        let mut acc = DensePoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &DensePoly::constant(c.clone());
        }
        acc
    }

    /// Product of `(x - r)` over the given roots.
    pub fn from_roots<'a, I: IntoIterator<Item = &'a Rational>>(roots: I) -> DensePoly {
        roots.into_iter().fold(DensePoly::one(), |acc, r| &acc * &DensePoly::linear_root(r))
    }

    /// Human-readable form, highest degree first: `x^2 - 3/2 x + 1/2`.
    pub fn pretty(&self) -> String {
        self.pretty_in("x")
    }

    pub fn pretty_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag} {mono}"));
            }
        }
        out
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePoly({})", self.pretty())
    }
}

impl<'b> Add<&'b DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &'b DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: DensePoly) -> DensePoly {
        &self + &rhs
    }
}

impl<'b> Sub<&'b DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &'b DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: DensePoly) -> DensePoly {
        &self - &rhs
    }
}

impl<'b> Mul<&'b DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &'b DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }
}

impl Mul for DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: DensePoly) -> DensePoly {
        &self * &rhs
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn p(cs: &[(i64, i64)]) -> DensePoly {
        DensePoly::new(cs.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn product_of_linear_factors() {
        let got = &DensePoly::linear_root(&rat(1, 1)) * &DensePoly::linear_root(&rat(1, 2));
        assert_eq!(got, p(&[(1, 2), (-3, 2), (1, 1)]));
        assert_eq!(got.pretty(), "x^2 - 3/2 x + 1/2");
    }

    #[test]
    fn multiplicative_identity() {
        let q = p(&[(3, 1), (0, 1), (-2, 5)]);
        assert_eq!(&q * &DensePoly::one(), q);
        assert!((&q * &DensePoly::zero()).is_zero());
    }

    #[test]
    fn eval_by_substitution() {
        let q = p(&[(1, 2), (-3, 2), (1, 1)]);
        assert_eq!(q.eval(&rat(2, 1)), rat(3, 2));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let q = p(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(q.degree(), Some(0));
        assert_eq!(DensePoly::new(vec![Rational::zero()]).degree(), None);
        assert_eq!((&q - &q).degree(), None);
    }

    #[test]
    fn divrem_by_zero_fails() {
        assert_eq!(DensePoly::x().divrem(&DensePoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn divrem_low_degree_dividend() {
        let a = p(&[(2, 1)]);
        let b = p(&[(1, 1), (1, 1)]);
        let (q, rem) = a.divrem(&b).unwrap();
        assert!(q.is_zero());
        assert_eq!(rem, a);
    }

    #[test]
    fn div_linear_matches_divrem() {
        let a = p(&[(5, 1), (-1, 3), (2, 7), (1, 1)]);
        let root = rat(-3, 4);
        let (q1, r1) = a.div_linear(&root);
        let (q2, r2) = a.divrem(&DensePoly::linear_root(&root)).unwrap();
        assert_eq!(q1, q2);
        assert_eq!(DensePoly::constant(r1.clone()), r2);
        assert_eq!(r1, a.eval(&root));
    }

    #[test]
    fn affine_composition() {
        // (x^2)(2x + 1) = 4x^2 + 4x + 1
        let sq = p(&[(0, 1), (0, 1), (1, 1)]);
        assert_eq!(sq.compose_affine(&rat(2, 1), &rat(1, 1)), p(&[(1, 1), (4, 1), (4, 1)]));
    }

    #[test]
    fn pretty_edge_cases() {
        assert_eq!(DensePoly::one().pretty(), "1");
        assert_eq!(DensePoly::zero().pretty(), "0");
        assert_eq!(p(&[(0, 1), (-1, 1)]).pretty(), "-x");
        assert_eq!(p(&[(-1, 2), (0, 1), (-3, 1)]).pretty(), "-3 x^2 - 1/2");
    }
}
