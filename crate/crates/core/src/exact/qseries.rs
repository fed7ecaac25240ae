//! q-shifted factorials and terminating basic hypergeometric series.
//!
//! ```text
//! r phi s (q^-n, a_2..a_r; b_1..b_s; q, z)
//!   = sum_{k=0}^{n} (q^-n;q)_k/(q;q)_k * (a_2..a_r;q)_k/(b_1..b_s;q)_k
//!                   * ((-1)^k q^{k(k-1)/2})^{s-r+1} * z^k
//! ```
//!
//! Two evaluators live here. [`qhyper`] works on scalar parameters.
//! [`qhyper_poly`] lets some upper parameters depend on the polynomial
//! variable `x` and returns the whole series as a [`DensePoly`]; this is how
//! the family representations with `x^{-1}` or `z +- 1/z` arguments are
//! evaluated without leaving rational arithmetic.

use serde::{Deserialize, Serialize};

use super::poly::DensePoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `(b;q)_k = (1-b)(1-qb)...(1-q^{k-1}b)`; the empty product is 1.
pub fn qpoch(b: &Rational, q: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut qj_b = b.clone();
    for _ in 0..k {
        acc *= Rational::one() - &qj_b;
        qj_b *= q;
    }
    acc
}

/// `(b_1,...,b_m;q)_k`.
pub fn qpoch_multi(bs: &[Rational], q: &Rational, k: usize) -> Rational {
    bs.iter().map(|b| qpoch(b, q, k)).product()
}

/// `(az, az^{-1}; q)_k` written in `x = z + z^{-1}`:
/// `prod_{j<k} a q^j (x_j - x)` with `x_j = a q^j + a^{-1} q^{-j}`.
pub fn joukowski_poch(a: &Rational, q: &Rational, x: &Rational, k: usize) -> Result<Rational> {
    let mut acc = Rational::one();
    let mut aqj = a.clone();
    for _ in 0..k {
        let node = &aqj + aqj.recip()?;
        acc *= &aqj * (node - x);
        aqj *= q;
    }
    Ok(acc)
}

/// If `b = q^{-m}` for some `0 <= m <= limit`, return `m`.
fn neg_q_power(b: &Rational, q: &Rational, limit: usize) -> Option<usize> {
    let mut qm = Rational::one();
    for m in 0..=limit {
        if *b == qm {
            return Some(m);
        }
        qm = qm.checked_div(q).ok()?;
    }
    None
}

/// Sign and power correction `((-1)^k q^{k(k-1)/2})^{e}`.
fn gauge_factor(q: &Rational, k: usize, exponent: i64) -> Rational {
    if exponent == 0 {
        return Rational::one();
    }
    let k = k as i64;
    let sign = if (k * exponent).rem_euclid(2) == 1 { -1 } else { 1 };
    q.powi(exponent * k * (k - 1) / 2) * Rational::from_int(sign)
}

/// Parameters of a terminating `r phi s`. `upper[0]` must be `q^{-n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSeriesParams {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub q: Rational,
    pub z: Rational,
    pub n: usize,
}

impl QSeriesParams {
    /// Builds the parameter list with `a_1 = q^{-n}` prepended to `rest`.
    pub fn terminating(n: usize, rest: &[Rational], lower: &[Rational], q: &Rational, z: &Rational) -> QSeriesParams {
        let mut upper = Vec::with_capacity(rest.len() + 1);
        upper.push(q.powi(-(n as i64)));
        upper.extend_from_slice(rest);
        QSeriesParams { upper, lower: lower.to_vec(), q: q.clone(), z: z.clone(), n }
    }
}

fn check_q(q: &Rational) -> Result<()> {
    if q.is_zero() || *q == 1 || *q == -1 {
        return Err(Error::InvalidParameters(format!("q = {q} is not admissible")));
    }
    Ok(())
}

/// Exact value of a terminating basic hypergeometric series.
///
/// The sum stops early when another upper parameter equals `q^{-m}` with
/// `m < n`; a lower parameter whose q-shifted factorial vanishes inside the
/// summation range is reported as [`Error::DivisionByZero`].
pub fn qhyper(params: &QSeriesParams) -> Result<Rational> {
    check_q(&params.q)?;
    let q = &params.q;
    let n = params.n;
    let head = params.upper.first().ok_or_else(|| Error::InvalidParameters("empty upper list".into()))?;
    if *head != q.powi(-(n as i64)) {
        return Err(Error::InvalidParameters(format!("first upper parameter {head} is not q^-{n}")));
    }
    let last = params.upper[1..].iter().filter_map(|a| neg_q_power(a, q, n)).fold(n, usize::min);
    let exponent = params.lower.len() as i64 - params.upper.len() as i64 + 1;

    let mut total = Rational::zero();
    for k in 0..=last {
        let num = qpoch_multi(&params.upper, q, k);
        let den = qpoch_multi(&params.lower, q, k) * qpoch(q, q, k);
        let term = num.checked_div(&den)? * gauge_factor(q, k, exponent) * params.z.powi(k as i64);
        total += term;
    }
    Ok(total)
}

/// An upper parameter of a series whose value may involve the variable `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesParam {
    /// A constant `c`.
    Const(Rational),
    /// `c x`.
    Scaled(Rational),
    /// `c x^{-1}`. Each one absorbs one power of `x` from the argument `z`.
    Reciprocal(Rational),
    /// The pair `a z, a z^{-1}` with `x = z + z^{-1}`; counts as two upper
    /// parameters.
    Joukowski(Rational),
}

impl SeriesParam {
    fn arity(&self) -> i64 {
        match self {
            SeriesParam::Joukowski(_) => 2,
            _ => 1,
        }
    }
}

/// Series argument `z = coeff * x^power` with `power` 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesArg {
    pub coeff: Rational,
    pub x_power: u32,
}

impl SeriesArg {
    pub fn constant(c: Rational) -> SeriesArg {
        SeriesArg { coeff: c, x_power: 0 }
    }

    pub fn times_x(c: Rational) -> SeriesArg {
        SeriesArg { coeff: c, x_power: 1 }
    }
}

/// Polynomial-valued terminating series in the variable `x`.
///
/// `rest` are the upper parameters after the implicit leading `q^{-n}`.
pub fn qhyper_poly(
    n: usize,
    rest: &[SeriesParam],
    lower: &[Rational],
    q: &Rational,
    z: &SeriesArg,
) -> Result<DensePoly> {
    check_q(q)?;
    if z.x_power > 1 {
        return Err(Error::InvalidParameters("argument may carry at most one power of x".into()));
    }
    let reciprocals = rest.iter().filter(|p| matches!(p, SeriesParam::Reciprocal(_))).count() as u32;
    if reciprocals > z.x_power {
        return Err(Error::InvalidParameters("each reciprocal parameter needs a power of x in the argument".into()));
    }
    let free_x_power = (z.x_power - reciprocals) as usize;
    let r = 1 + rest.iter().map(SeriesParam::arity).sum::<i64>();
    let exponent = lower.len() as i64 - r + 1;

    let mut last = n;
    for p in rest {
        if let SeriesParam::Const(c) = p {
            if let Some(m) = neg_q_power(c, q, n) {
                last = last.min(m);
            }
        }
        if let SeriesParam::Joukowski(a) = p {
            if a.is_zero() {
                return Err(Error::InvalidParameters("Joukowski parameter must be nonzero".into()));
            }
        }
    }

    let q_neg_n = q.powi(-(n as i64));
    let mut scalar = Rational::one();
    let mut factor = DensePoly::one();
    let mut total = DensePoly::zero();
    let mut qj = Rational::one();
    for k in 0..=last {
        if k > 0 {
            // advance every running product from index k - 1 to k
            let mut num = Rational::one() - &q_neg_n * &qj;
            let mut den = Rational::one() - &qj * q;
            for b in lower {
                den *= Rational::one() - b * &qj;
            }
            let mut step = DensePoly::one();
            for p in rest {
                match p {
                    SeriesParam::Const(c) => num *= Rational::one() - c * &qj,
                    SeriesParam::Scaled(c) => {
                        step = &step * &DensePoly::linear(Rational::one(), -(c * &qj));
                    }
                    SeriesParam::Reciprocal(c) => {
                        step = &step * &DensePoly::linear_root(&(c * &qj));
                    }
                    SeriesParam::Joukowski(a) => {
                        let aqj = a * &qj;
                        let node = &aqj + aqj.recip()?;
                        step = &step * &DensePoly::linear(&aqj * node, -aqj);
                    }
                }
            }
            scalar = (scalar * num).checked_div(&den)?;
            factor = &factor * &step;
            qj *= q;
        }
        let coeff = &scalar * gauge_factor(q, k, exponent) * z.coeff.powi(k as i64);
        if coeff.is_zero() {
            continue;
        }
        let mut term = factor.scale(&coeff);
        if free_x_power > 0 && k > 0 {
            let mut shifted = vec![Rational::zero(); k * free_x_power];
            shifted.extend(term.into_coeffs());
            term = DensePoly::new(shifted);
        }
        total = &total + &term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn qpoch_examples() {
        assert_eq!(qpoch(&rat(3, 7), &rat(2, 5), 0), Rational::one());
        assert_eq!(qpoch(&rat(1, 2), &rat(1, 2), 2), rat(3, 8));
        assert!(qpoch(&Rational::one(), &rat(2, 3), 4).is_zero());
    }

    #[test]
    fn two_phi_one_gives_x_to_the_n() {
        // 2phi1(q^-1, x; 0; q, q) at x = 3, q = 1/2
        let q = rat(1, 2);
        let params = QSeriesParams::terminating(1, &[rat(3, 1)], &[Rational::zero()], &q, &q);
        assert_eq!(qhyper(&params).unwrap(), rat(3, 1));
    }

    #[test]
    fn one_phi_zero_brute_force() {
        // 1 - 6 + 8
        let q = rat(1, 2);
        let params = QSeriesParams::terminating(2, &[], &[], &q, &Rational::one());
        assert_eq!(qhyper(&params).unwrap(), rat(3, 1));
    }

    #[test]
    fn order_zero_is_one() {
        let q = rat(2, 3);
        let params = QSeriesParams::terminating(0, &[rat(5, 1), rat(-1, 3)], &[rat(7, 2)], &q, &rat(9, 1));
        assert_eq!(qhyper(&params).unwrap(), Rational::one());
    }

    #[test]
    fn vanishing_lower_parameter_is_an_error() {
        // lower parameter q^{-1} makes (b;q)_2 vanish
        let q = rat(1, 2);
        let params = QSeriesParams::terminating(3, &[rat(1, 3)], &[rat(2, 1)], &q, &q);
        assert_eq!(qhyper(&params), Err(Error::DivisionByZero));
    }

    #[test]
    fn matching_upper_parameter_cancels() {
        // upper q^{-1} stops the sum at k = 1; the lower (q^{-2};q)_k only vanishes from k = 3
        let q = rat(1, 2);
        let params = QSeriesParams::terminating(4, &[rat(2, 1)], &[rat(4, 1)], &q, &q);
        let direct = Rational::one()
            + (Rational::one() - q.powi(-4)) * (Rational::one() - rat(2, 1))
                / ((Rational::one() - q.clone()) * (Rational::one() - rat(4, 1)))
                * q.clone();
        assert_eq!(qhyper(&params).unwrap(), direct);
    }

    #[test]
    fn head_must_be_q_power() {
        let mut params = QSeriesParams::terminating(2, &[], &[], &rat(1, 2), &Rational::one());
        params.upper[0] = rat(3, 1);
        assert!(qhyper(&params).is_err());
    }

    #[test]
    fn polynomial_series_matches_scalar() {
        let q = rat(2, 3);
        let x = rat(-5, 4);
        // 2phi1(q^-n, c x; b; q, q)
        for n in 0..6 {
            let poly =
                qhyper_poly(n, &[SeriesParam::Scaled(rat(1, 5))], &[rat(3, 7)], &q, &SeriesArg::constant(q.clone()))
                    .unwrap();
            let scalar = qhyper(&QSeriesParams::terminating(n, &[rat(1, 5) * &x], &[rat(3, 7)], &q, &q)).unwrap();
            assert_eq!(poly.eval(&x), scalar);
        }
    }

    #[test]
    fn reciprocal_parameter_matches_scalar() {
        let q = rat(1, 3);
        let x = rat(7, 2);
        for n in 0..6 {
            let poly = qhyper_poly(
                n,
                &[SeriesParam::Reciprocal(rat(2, 1))],
                &[rat(-1, 2)],
                &q,
                &SeriesArg::times_x(rat(3, 5)),
            )
            .unwrap();
            let scalar =
                qhyper(&QSeriesParams::terminating(n, &[rat(2, 1) / &x], &[rat(-1, 2)], &q, &(rat(3, 5) * &x)))
                    .unwrap();
            assert_eq!(poly.eval(&x), scalar);
        }
    }

    #[test]
    fn joukowski_pair_is_a_product_of_node_differences() {
        // z = 2 gives x = 5/2; (az;q)_k (a/z;q)_k directly
        let (a, q, z) = (rat(3, 7), rat(1, 2), rat(2, 1));
        let x = &z + z.recip().unwrap();
        for k in 0..6 {
            let direct = qpoch(&(&a * &z), &q, k) * qpoch(&(&a / &z), &q, k);
            assert_eq!(joukowski_poch(&a, &q, &x, k).unwrap(), direct);
        }
    }

    #[test]
    fn bad_q_rejected() {
        let params = QSeriesParams::terminating(1, &[], &[], &Rational::one(), &Rational::one());
        assert!(qhyper(&params).is_err());
    }
}
