//! Newton-basis expansion of the monic polynomials `u_n` and everything
//! derived from it: the operator `L`, recurrence coefficients, the
//! renormalized `U_n` and the duality relation.

use serde::Serialize;

use super::params::ParameterVector;
use crate::error::{Error, Result};
use crate::exact::{DensePoly, Rational};

/// Lower-triangular coefficients `c[n][k]` of `u_n = sum_k c[n][k] v_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonExpansion {
    pub order: usize,
    pub c: Vec<Vec<Rational>>,
}

impl NewtonExpansion {
    pub fn get(&self, n: usize, k: usize) -> &Rational {
        &self.c[n][k]
    }
}

/// `v_k(x) = (x - x_0)...(x - x_{k-1})`.
pub fn newton_basis(pv: &ParameterVector, k: usize) -> DensePoly {
    let nodes: Vec<Rational> = (0..k as i64).map(|j| pv.x(j)).collect();
    DensePoly::from_roots(&nodes)
}

/// `c[n][k] = prod_{j=k}^{n-1} g_{j+1} / (h_n - h_j)` for `n <= order`.
pub fn expansion(pv: &ParameterVector, order: usize) -> Result<NewtonExpansion> {
    pv.check_h_separation(order)?;
    let h: Vec<Rational> = (0..=order as i64).map(|k| pv.h(k)).collect();
    let g: Vec<Rational> = (0..=order as i64).map(|k| pv.g(k)).collect();
    let mut c = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut row = vec![Rational::zero(); n + 1];
        row[n] = Rational::one();
        for k in (0..n).rev() {
            row[k] = &row[k + 1] * &g[k + 1] / (&h[n] - &h[k]);
        }
        c.push(row);
    }
    Ok(NewtonExpansion { order, c })
}

/// Smallest `N <= n_max` with `g_{N+1} = 0`.
pub fn finite_cutoff(pv: &ParameterVector, n_max: usize) -> Option<usize> {
    (0..=n_max).find(|&n| pv.g(n as i64 + 1).is_zero())
}

/// `A_0 = x_0 - g_1 / (h_1 - h_0)`.
pub fn a0_coeff(pv: &ParameterVector) -> Result<Rational> {
    let dh = pv.h(1) - pv.h(0);
    if dh.is_zero() {
        return Err(Error::HSeparationViolated { n: 1, j: 0 });
    }
    Ok(pv.x(0) - pv.g(1) / dh)
}

fn ratio(num: Rational, den: Rational, n: usize, j: usize) -> Result<Rational> {
    if num.is_zero() {
        return Ok(num);
    }
    if den.is_zero() {
        return Err(Error::HSeparationViolated { n, j });
    }
    Ok(num / den)
}

/// `(A_n, B_n)` of `x u_n = u_{n+1} + A_n u_n + B_n u_{n-1}` for `n >= 1`.
pub fn recurrence_coeffs(pv: &ParameterVector, n: usize) -> Result<(Rational, Rational)> {
    if n == 0 {
        return Err(Error::InvalidParameters("recurrence_coeffs needs n >= 1; use a0_coeff".into()));
    }
    let n_i = n as i64;
    let (h, g, x) = (|k: i64| pv.h(k), |k: i64| pv.g(k), |k: i64| pv.x(k));
    let lower = ratio(g(n_i), h(n_i - 1) - h(n_i), n, n - 1)?;
    let upper = ratio(g(n_i + 1), h(n_i) - h(n_i + 1), n + 1, n)?;
    let a_n = x(n_i) + &upper - &lower;
    // g_{n-1} vanishes at n = 1, which also covers the h_{-1} lookup
    let far = ratio(g(n_i - 1), h(n_i - 2) - h(n_i), n, n.saturating_sub(2))?;
    let cross = ratio(g(n_i + 1), h(n_i - 1) - h(n_i + 1), n + 1, n - 1)?;
    let b_n = &lower * (far - &lower + cross + x(n_i) - x(n_i - 1));
    Ok((a_n, b_n))
}

/// Precomputed sequences, expansion and polynomials up to a fixed order.
///
/// Building one of these is the expensive step; every query afterwards is a
/// lookup or a short polynomial computation.
#[derive(Clone, Debug)]
pub struct PolySystem {
    pv: ParameterVector,
    order: usize,
    xs: Vec<Rational>,
    hs: Vec<Rational>,
    gs: Vec<Rational>,
    expansion: NewtonExpansion,
    v: Vec<DensePoly>,
    u: Vec<DensePoly>,
}

impl PolySystem {
    pub fn new(pv: &ParameterVector, order: usize) -> Result<PolySystem> {
        let expansion = expansion(pv, order)?;
        let xs: Vec<Rational> = (0..=order as i64).map(|k| pv.x(k)).collect();
        let hs: Vec<Rational> = (0..=order as i64).map(|k| pv.h(k)).collect();
        let gs: Vec<Rational> = (0..=order as i64 + 1).map(|k| pv.g(k)).collect();
        let mut v = Vec::with_capacity(order + 1);
        v.push(DensePoly::one());
        for k in 1..=order {
            let next = &v[k - 1] * &DensePoly::linear_root(&xs[k - 1]);
            v.push(next);
        }
        let u = (0..=order)
            .map(|n| (0..=n).fold(DensePoly::zero(), |acc, k| &acc + &v[k].scale(expansion.get(n, k))))
            .collect();
        Ok(PolySystem { pv: pv.clone(), order, xs, hs, gs, expansion, v, u })
    }

    pub fn params(&self) -> &ParameterVector {
        &self.pv
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn expansion(&self) -> &NewtonExpansion {
        &self.expansion
    }

    pub fn u(&self, n: usize) -> &DensePoly {
        &self.u[n]
    }

    pub fn v(&self, k: usize) -> &DensePoly {
        &self.v[k]
    }

    pub fn x(&self, k: usize) -> &Rational {
        &self.xs[k]
    }

    pub fn h(&self, k: usize) -> &Rational {
        &self.hs[k]
    }

    pub fn g(&self, k: usize) -> &Rational {
        &self.gs[k]
    }

    /// Coordinates of `p` in the Newton basis `v_0..v_deg`.
    pub fn to_newton(&self, p: &DensePoly) -> Result<Vec<Rational>> {
        let deg = p.degree().unwrap_or(0);
        if deg > self.order {
            return Err(Error::InvalidParameters(format!("degree {deg} exceeds the system order {}", self.order)));
        }
        let mut out = Vec::with_capacity(deg + 1);
        let mut rest = p.clone();
        for k in 0..=deg {
            let (quot, rem) = rest.div_linear(&self.xs[k]);
            out.push(rem);
            rest = quot;
        }
        Ok(out)
    }

    pub fn from_newton(&self, coords: &[Rational]) -> DensePoly {
        coords.iter().enumerate().fold(DensePoly::zero(), |acc, (k, c)| &acc + &self.v[k].scale(c))
    }

    /// `L` acting through `L v_0 = h_0 v_0`, `L v_k = h_k v_k + g_k v_{k-1}`.
    pub fn apply_l(&self, p: &DensePoly) -> Result<DensePoly> {
        let coords = self.to_newton(p)?;
        let mut image = vec![Rational::zero(); coords.len()];
        for (k, c) in coords.iter().enumerate() {
            image[k] += c * &self.hs[k];
            if k > 0 {
                image[k - 1] += c * &self.gs[k];
            }
        }
        Ok(self.from_newton(&image))
    }

    /// `L u_n == h_n u_n`.
    pub fn eigen_check(&self, n: usize) -> Result<bool> {
        Ok(self.apply_l(&self.u[n])? == self.u[n].scale(&self.hs[n]))
    }

    /// `x u_n - u_{n+1} - A_n u_n - B_n u_{n-1} == 0`; at `n = 0` only `A_0`.
    pub fn recurrence_check(&self, n: usize) -> Result<bool> {
        if n + 1 > self.order {
            return Err(Error::InvalidParameters(format!("need order {} for n = {n}", n + 1)));
        }
        let xu = &DensePoly::x() * &self.u[n];
        let residual = if n == 0 {
            let a0 = a0_coeff(&self.pv)?;
            &(&xu - &self.u[1]) - &self.u[0].scale(&a0)
        } else {
            let (a_n, b_n) = recurrence_coeffs(&self.pv, n)?;
            &(&(&xu - &self.u[n + 1]) - &self.u[n].scale(&a_n)) - &self.u[n - 1].scale(&b_n)
        };
        Ok(residual.is_zero())
    }

    /// Coordinates of `x u_n` in the basis `u_0..u_{n+1}`.
    pub fn multiply_by_x_in_u_basis(&self, n: usize) -> Result<Vec<Rational>> {
        if n + 1 > self.order {
            return Err(Error::InvalidParameters(format!("need order {} for n = {n}", n + 1)));
        }
        let mut rest = &DensePoly::x() * &self.u[n];
        let mut coords = vec![Rational::zero(); n + 2];
        for j in (0..=n + 1).rev() {
            let c = rest.coeff(j);
            if !c.is_zero() {
                rest = &rest - &self.u[j].scale(&c);
            }
            coords[j] = c;
        }
        debug_assert!(rest.is_zero());
        Ok(coords)
    }

    /// True when `x u_n` has a component on some `u_j` with `j < n - 1`,
    /// i.e. the three-term form breaks at `n`.
    pub fn breaks_three_term(&self, n: usize) -> Result<bool> {
        let coords = self.multiply_by_x_in_u_basis(n)?;
        Ok(n >= 2 && coords[..n - 1].iter().any(|c| !c.is_zero()))
    }

    /// `U_n = prod_{j<n} (h_n - h_j)/g_{j+1} * u_n`.
    pub fn normalized_u(&self, n: usize) -> Result<DensePoly> {
        let mut scale = Rational::one();
        for j in 0..n {
            let g = &self.gs[j + 1];
            if g.is_zero() {
                return Err(Error::ZeroG(j + 1));
            }
            scale = scale * (&self.hs[n] - &self.hs[j]) / g;
        }
        Ok(self.u[n].scale(&scale))
    }

    /// `U_n` straight from its sum formula
    /// `sum_k prod_{j<k}(h_n - h_j) prod_{j<k}(x - x_j) / prod_{j=1}^k g_j`.
    pub fn normalized_u_by_sum(&self, n: usize) -> Result<DensePoly> {
        let mut total = DensePoly::zero();
        let mut coeff = Rational::one();
        for k in 0..=n {
            if k > 0 {
                let g = &self.gs[k];
                if g.is_zero() {
                    return Err(Error::ZeroG(k));
                }
                coeff = coeff * (&self.hs[n] - &self.hs[k - 1]) / g;
            }
            total = &total + &self.v[k].scale(&coeff);
        }
        Ok(total)
    }
}

/// Monic `u_n`.
pub fn monic_poly(pv: &ParameterVector, n: usize) -> Result<DensePoly> {
    Ok(PolySystem::new(pv, n)?.u(n).clone())
}

/// `L p` in the monomial basis.
pub fn apply_l(pv: &ParameterVector, p: &DensePoly) -> Result<DensePoly> {
    PolySystem::new(pv, p.degree().unwrap_or(0))?.apply_l(p)
}

pub fn recurrence_check(pv: &ParameterVector, n: usize) -> Result<bool> {
    PolySystem::new(pv, n + 1)?.recurrence_check(n)
}

pub fn normalized_u(pv: &ParameterVector, n: usize) -> Result<DensePoly> {
    PolySystem::new(pv, n)?.normalized_u(n)
}

/// `~U_m`, built as `U_m` of the `a <-> b` swapped vector.
pub fn dual_normalized_u(pv: &ParameterVector, m: usize) -> Result<DensePoly> {
    pv.check_x_separation(m)?;
    let dual = pv.swap_ab();
    PolySystem::new(&dual, m)?.normalized_u(m)
}

/// `U_n(x_m) == ~U_m(h_n)`.
pub fn duality_check(pv: &ParameterVector, n: usize, m: usize) -> Result<bool> {
    let lhs = normalized_u(pv, n)?.eval(&pv.x(m as i64));
    let rhs = dual_normalized_u(pv, m)?.eval(&pv.h(n as i64));
    Ok(lhs == rhs)
}

/// Checks `U_n(x_m) == ~U_m(h_n)` for every `n, m <= depth`, sharing the
/// two polynomial systems.
pub fn duality_table(pv: &ParameterVector, depth: usize) -> Result<Vec<(usize, usize, bool)>> {
    pv.check_x_separation(depth)?;
    let sys = PolySystem::new(pv, depth)?;
    let dual = PolySystem::new(&pv.swap_ab(), depth)?;
    let big_u: Vec<DensePoly> = (0..=depth).map(|n| sys.normalized_u(n)).collect::<Result<_>>()?;
    let big_v: Vec<DensePoly> = (0..=depth).map(|m| dual.normalized_u(m)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (n, un) in big_u.iter().enumerate() {
        for (m, vm) in big_v.iter().enumerate() {
            out.push((n, m, un.eval(sys.x(m)) == vm.eval(sys.h(n))));
        }
    }
    Ok(out)
}

/// Runs the recurrence with `A_n`, `B_n` from their closed forms, starting
/// from `u_0 = 1` and `u_1 = x - A_0`.
pub fn monic_by_recurrence(pv: &ParameterVector, order: usize) -> Result<Vec<DensePoly>> {
    pv.check_h_separation(order + 1)?;
    let mut out = vec![DensePoly::one()];
    if order == 0 {
        return Ok(out);
    }
    out.push(DensePoly::linear(-a0_coeff(pv)?, Rational::one()));
    for n in 1..order {
        let (a_n, b_n) = recurrence_coeffs(pv, n)?;
        let next = &(&(&DensePoly::x() * &out[n]) - &out[n].scale(&a_n)) - &out[n - 1].scale(&b_n);
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// Al-Salam–Chihara data with q = 1/2, a = 2, b = 1/4:
    /// x_k = 2 q^k + q^-k / 2, h_k = q^-k - 1, g_k = q^{1-2k} (1 - q^{k-1}/2)(1 - q^k) / 2.
    fn asc() -> ParameterVector {
        asc_with(rat(2, 1))
    }

    /// Same family with x_k = a q^k + q^-k / a; a = 2 has x_0 = x_2.
    fn asc_with(a: Rational) -> ParameterVector {
        let q = rat(1, 2);
        // g_k = q/(a) Q^-2 (1 - ab/q Q)(1 - Q), with a b = 1/2
        // = (1/4) Q^-2 - (1/4 + 1/4 * 1) Q^-1 ... expanded below
        let ab = rat(1, 2);
        let pre = &q / &a;
        let c = &ab / &q;
        // pre Q^-2 (1 - cQ)(1 - Q) = pre Q^-2 - pre (1 + c) Q^-1 + pre c
        let d4 = pre.clone();
        let d2 = -(&pre * (Rational::one() + &c));
        let d0 = &pre * &c;
        ParameterVector::new(
            q,
            [rat(-1, 1), Rational::zero(), Rational::one()],
            [Rational::zero(), a.clone(), a.recip().unwrap()],
            [d0, Rational::zero(), d2, Rational::zero(), d4],
        )
        .unwrap()
    }

    /// x_k = 0, h_k = q^-k - 1, g_k = 1 - q^-k.
    fn bottom_5b() -> ParameterVector {
        ParameterVector::new(
            rat(1, 2),
            [rat(-1, 1), Rational::zero(), Rational::one()],
            [Rational::zero(), Rational::zero(), Rational::zero()],
            [Rational::one(), Rational::zero(), rat(-1, 1), Rational::zero(), Rational::zero()],
        )
        .unwrap()
    }

    #[test]
    fn sequences_of_asc_instance() {
        let pv = asc();
        assert_eq!(pv.x(0), rat(5, 2));
        assert_eq!(pv.x(1), rat(2, 1));
        assert_eq!(pv.h(2), rat(3, 1));
        assert_eq!(pv.g(1), rat(1, 4));
        assert!(pv.g(0).is_zero());
    }

    #[test]
    fn newton_basis_examples() {
        let pv = asc();
        assert_eq!(newton_basis(&pv, 0), DensePoly::one());
        assert_eq!(newton_basis(&pv, 2), DensePoly::new(vec![rat(5, 1), rat(-9, 2), rat(1, 1)]));
        // constant nodes give powers of (x - b0)
        let flat = bottom_5b();
        assert_eq!(newton_basis(&flat, 3), DensePoly::new(vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]));
    }

    #[test]
    fn expansion_examples() {
        let e = expansion(&asc(), 3).unwrap();
        assert_eq!(*e.get(1, 0), rat(1, 4));
        for n in 0..=3 {
            assert!(e.get(n, n).is_one());
        }
        let e = expansion(&bottom_5b(), 2).unwrap();
        assert_eq!(*e.get(2, 0), rat(1, 2));
        assert_eq!(*e.get(2, 1), rat(-3, 2));
    }

    #[test]
    fn monic_poly_examples() {
        assert_eq!(monic_poly(&asc(), 0).unwrap(), DensePoly::one());
        assert_eq!(monic_poly(&bottom_5b(), 2).unwrap().pretty(), "x^2 - 3/2 x + 1/2");
    }

    #[test]
    fn a0_examples() {
        assert_eq!(a0_coeff(&asc()).unwrap(), rat(9, 4));
        assert_eq!(monic_poly(&asc(), 1).unwrap(), DensePoly::linear(rat(-9, 4), rat(1, 1)));
    }

    #[test]
    fn operator_on_basis() {
        let sys = PolySystem::new(&bottom_5b(), 3).unwrap();
        assert_eq!(sys.apply_l(sys.v(0)).unwrap(), sys.v(0).scale(sys.h(0)));
        let got = sys.apply_l(sys.v(2)).unwrap();
        assert_eq!(*sys.h(2), rat(3, 1));
        assert_eq!(*sys.g(2), rat(-3, 1));
        assert_eq!(got, &sys.v(2).scale(&rat(3, 1)) + &sys.v(1).scale(&rat(-3, 1)));
    }

    #[test]
    fn eigen_and_recurrence_for_asc() {
        let sys = PolySystem::new(&asc(), 9).unwrap();
        for n in 0..=6 {
            assert!(sys.eigen_check(n).unwrap(), "eigen n={n}");
        }
        for n in 0..=8 {
            assert!(sys.recurrence_check(n).unwrap(), "recurrence n={n}");
        }
    }

    #[test]
    fn recurrence_coefficients_when_g_vanishes() {
        // the formula level: g = 0 forces B_n = 0 and A_n = x_n
        let pv = asc();
        let (q, a, b, _) = pv.into_parts();
        let flat = ParameterVector::new_unchecked(q, a, b, std::array::from_fn(|_| Rational::zero()));
        for n in 1..5 {
            let (a_n, b_n) = recurrence_coeffs(&flat, n).unwrap();
            assert_eq!(a_n, flat.x(n as i64));
            assert!(b_n.is_zero());
        }
    }

    #[test]
    fn perturbed_d3_breaks_recurrence() {
        let (q, a, b, mut d) = asc().into_parts();
        d[3] += rat(1, 3);
        d[0] -= rat(1, 3);
        let bad = ParameterVector::new_unchecked(q, a, b, d);
        let sys = PolySystem::new(&bad, 7).unwrap();
        assert!((1..=6).any(|n| !sys.recurrence_check(n).unwrap()));
        assert!((2..=6).any(|n| sys.breaks_three_term(n).unwrap()));
    }

    #[test]
    fn cutoff_cases() {
        assert_eq!(finite_cutoff(&asc(), 50), None);
        // g_k = d2 q^-k + d0 + d1 q^k vanishes at k = 2 when d1 = d2 / q^2
        let pv = ParameterVector::from_free(
            rat(1, 2),
            [Rational::zero(), Rational::zero(), Rational::one()],
            [Rational::zero(), Rational::zero(), Rational::zero()],
            rat(4, 1),
            rat(1, 1),
        )
        .unwrap();
        assert_eq!(finite_cutoff(&pv, 10), Some(1));
        let e = expansion(&pv, 4).unwrap();
        for n in 2..=4 {
            for k in 0..=1 {
                assert!(e.get(n, k).is_zero(), "c[{n}][{k}]");
            }
        }
    }

    #[test]
    fn two_routes_to_u_agree() {
        let sys = PolySystem::new(&asc(), 8).unwrap();
        let rec = monic_by_recurrence(&asc(), 8).unwrap();
        for (n, u) in rec.iter().enumerate() {
            assert_eq!(u, sys.u(n));
        }
    }

    #[test]
    fn normalized_forms_agree() {
        let sys = PolySystem::new(&asc(), 6).unwrap();
        assert_eq!(sys.normalized_u(0).unwrap(), DensePoly::one());
        for n in 0..=6 {
            assert_eq!(sys.normalized_u(n).unwrap(), sys.normalized_u_by_sum(n).unwrap());
        }
        // U_1 = (h_1 - h_0)/g_1 u_1 = 4 (x - 9/4)
        assert_eq!(sys.normalized_u(1).unwrap(), DensePoly::linear(rat(-9, 1), rat(4, 1)));
    }

    #[test]
    fn zero_g_blocks_normalization() {
        assert_eq!(dual_normalized_u(&bottom_5b(), 0).unwrap(), DensePoly::one());
        let sys = PolySystem::new(&bottom_5b(), 2).unwrap();
        assert!(sys.normalized_u(2).is_ok());
    }

    #[test]
    fn duality_small() {
        let pv = asc_with(rat(3, 1));
        for m in 0..4 {
            assert!(duality_check(&pv, 0, m).unwrap());
        }
        assert!(duality_table(&pv, 5).unwrap().iter().all(|t| t.2));
        assert_eq!(duality_check(&asc(), 1, 2), Err(Error::XSeparationViolated { n: 2, j: 0 }));
    }
}
