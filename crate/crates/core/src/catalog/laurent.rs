//! Laurent polynomials in `Q = q^k`, used to expand the printed product
//! formulas for `x_k`, `h_k`, `g_k` into their coefficients.

use std::collections::BTreeMap;

use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, Rational>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent::default()
    }

    /// `c Q^e`.
    pub fn mono(c: Rational, e: i32) -> Laurent {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: Rational) -> Laurent {
        Laurent::mono(c, 0)
    }

    /// `1 - c Q^e`.
    pub fn one_minus(c: Rational, e: i32) -> Laurent {
        Laurent::constant(Rational::one()).add(&Laurent::mono(-c, e))
    }

    pub fn coeff(&self, e: i32) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exponent range of the nonzero terms.
    pub fn support(&self) -> Option<(i32, i32)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let v = terms.remove(e).unwrap_or_else(Rational::zero) + c;
            if !v.is_zero() {
                terms.insert(*e, v);
            }
        }
        Laurent { terms }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out = out.add(&Laurent::mono(c1 * c2, e1 + e2));
            }
        }
        out
    }

    pub fn product(factors: &[Laurent]) -> Laurent {
        factors.iter().fold(Laurent::constant(Rational::one()), |acc, f| acc.mul(f))
    }

    /// Value at `Q`; `Q` must be nonzero when negative exponents occur.
    pub fn eval(&self, big_q: &Rational) -> Rational {
        self.terms.iter().map(|(e, c)| c * big_q.powi(*e as i64)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn expand_product() {
        // Q^-1 (1 - Q)(1 - 2Q) = Q^-1 - 3 + 2Q
        let p = Laurent::product(&[
            Laurent::mono(rat(1, 1), -1),
            Laurent::one_minus(rat(1, 1), 1),
            Laurent::one_minus(rat(2, 1), 1),
        ]);
        assert_eq!(p.coeff(-1), rat(1, 1));
        assert_eq!(p.coeff(0), rat(-3, 1));
        assert_eq!(p.coeff(1), rat(2, 1));
        assert_eq!(p.support(), Some((-1, 1)));
        assert_eq!(p.eval(&rat(1, 2)), rat(0, 1));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = Laurent::mono(rat(3, 1), 2).add(&Laurent::mono(rat(-3, 1), 2));
        assert_eq!(p.support(), None);
    }
}
