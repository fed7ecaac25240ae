//! Gauge invariances, the `q <-> 1/q` exchange, `x <-> h` duality and the
//! four-coordinate charts around the bottom-row families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::ParameterVector;
use crate::error::{Error, Result};
use crate::exact::{DensePoly, Rational};

/// Shift/scale action on the `h` side (`tau`, `mu`) and the `x` side
/// (`sigma`, `rho`). Shifts act before scales.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeAction {
    pub tau: Rational,
    pub mu: Rational,
    pub sigma: Rational,
    pub rho: Rational,
}

impl GaugeAction {
    pub fn new(tau: Rational, mu: Rational, sigma: Rational, rho: Rational) -> Result<GaugeAction> {
        if mu.is_zero() || rho.is_zero() {
            return Err(Error::InvalidParameters("gauge scales mu and rho must be nonzero".into()));
        }
        Ok(GaugeAction { tau, mu, sigma, rho })
    }

    pub fn identity() -> GaugeAction {
        GaugeAction { tau: Rational::zero(), mu: Rational::one(), sigma: Rational::zero(), rho: Rational::one() }
    }

    /// Pure `h` scaling.
    pub fn scale_h(mu: Rational) -> Result<GaugeAction> {
        GaugeAction::new(Rational::zero(), mu, Rational::zero(), Rational::one())
    }

    /// Pure `x` scaling.
    pub fn scale_x(rho: Rational) -> Result<GaugeAction> {
        GaugeAction::new(Rational::zero(), Rational::one(), Rational::zero(), rho)
    }

    /// The single action equal to applying `self` and then `next`.
    ///
    /// Scales multiply; the second shift is pulled back through the first
    /// scale (`tau = tau1 + tau2 / mu1`), which reduces to adding shifts when
    /// `mu1 = 1`.
    pub fn then(&self, next: &GaugeAction) -> GaugeAction {
        GaugeAction {
            tau: &self.tau + &next.tau / &self.mu,
            mu: &self.mu * &next.mu,
            sigma: &self.sigma + &next.sigma / &self.rho,
            rho: &self.rho * &next.rho,
        }
    }

    pub fn inverse(&self) -> GaugeAction {
        GaugeAction {
            tau: -(&self.tau * &self.mu),
            mu: self.mu.recip().expect("mu is nonzero"),
            sigma: -(&self.sigma * &self.rho),
            rho: self.rho.recip().expect("rho is nonzero"),
        }
    }

    /// `u_n(y) -> rho^n u_n(y / rho - sigma)`, the induced map on monic
    /// polynomials.
    pub fn transform_poly(&self, u: &DensePoly) -> DensePoly {
        let n = u.degree().unwrap_or(0) as i64;
        let rho_inv = self.rho.recip().expect("rho is nonzero");
        u.compose_affine(&rho_inv, &-&self.sigma).scale(&self.rho.powi(n))
    }
}

pub fn apply_gauge(pv: &ParameterVector, g: &GaugeAction) -> ParameterVector {
    let (q, [a0, a1, a2], [b0, b1, b2], d) = pv.clone().into_parts();
    let mu_rho = &g.mu * &g.rho;
    ParameterVector::new(
        q,
        [&g.mu * (a0 + &g.tau), &g.mu * a1, &g.mu * a2],
        [&g.rho * (b0 + &g.sigma), &g.rho * b1, &g.rho * b2],
        d.map(|di| &mu_rho * di),
    )
    .expect("gauge actions preserve the constraints")
}

/// `q -> 1/q` with `a1 <-> a2`, `b1 <-> b2`, `d1 <-> d2`, `d3 <-> d4`.
pub fn q_invert(pv: &ParameterVector) -> ParameterVector {
    let (q, [a0, a1, a2], [b0, b1, b2], [d0, d1, d2, d3, d4]) = pv.clone().into_parts();
    ParameterVector::new(q.recip().expect("q is nonzero"), [a0, a2, a1], [b0, b2, b1], [d0, d2, d1, d4, d3])
        .expect("q-inversion preserves the constraints")
}

/// Swaps the `a` and `b` coefficients. The nodes must stay distinct to
/// `depth` so the dual eigenvalues are separated there.
pub fn dualize(pv: &ParameterVector, depth: usize) -> Result<ParameterVector> {
    pv.check_x_separation(depth.max(1))?;
    let (q, a, b, d) = pv.clone().into_parts();
    ParameterVector::new(q, b, a, d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChartId {
    /// `a2 = b2 = 1`; coordinates `(a1, b1, d0, d1)`.
    A2B2,
    /// `a2 = d0 = 1`; coordinates `(a1, b1, b2, d1)`.
    A2D0D1,
    /// `a2 = d0 = 1`; coordinates `(a1, b1, b2, d2)`.
    A2D0D2,
}

impl ChartId {
    pub const ALL: [ChartId; 3] = [ChartId::A2B2, ChartId::A2D0D1, ChartId::A2D0D2];

    pub fn coordinate_names(self) -> [&'static str; 4] {
        match self {
            ChartId::A2B2 => ["a1", "b1", "d0", "d1"],
            ChartId::A2D0D1 => ["a1", "b1", "b2", "d1"],
            ChartId::A2D0D2 => ["a1", "b1", "b2", "d2"],
        }
    }

    pub fn pinned_names(self) -> [&'static str; 2] {
        match self {
            ChartId::A2B2 => ["a2", "b2"],
            _ => ["a2", "d0"],
        }
    }
}

impl fmt::Display for ChartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChartId::A2B2 => "a2=b2=1",
            ChartId::A2D0D1 => "a2=d0=1;d1",
            ChartId::A2D0D2 => "a2=d0=1;d2",
        })
    }
}

impl FromStr for ChartId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ChartId> {
        match s.to_ascii_lowercase().as_str() {
            "a2b2" | "a2=b2=1" => Ok(ChartId::A2B2),
            "a2d0_d1" | "a2d0d1" | "a2=d0=1;d1" => Ok(ChartId::A2D0D1),
            "a2d0_d2" | "a2d0d2" | "a2=d0=1;d2" => Ok(ChartId::A2D0D2),
            _ => Err(Error::Parse(format!("unknown chart {s:?}"))),
        }
    }
}

/// The gauge that moves `pv` into `chart`: `a0 = b0 = 0` and the two pinned
/// coordinates equal to 1.
pub fn chart_gauge(pv: &ParameterVector, chart: ChartId) -> Result<GaugeAction> {
    let [a0, _, a2] = pv.a();
    let [b0, _, b2] = pv.b();
    let d0 = &pv.d()[0];
    let unreachable =
        |coordinate: &str| Error::ChartUnreachable { chart: chart.to_string(), coordinate: coordinate.into() };
    if a2.is_zero() {
        return Err(unreachable("a2"));
    }
    let mu = a2.recip()?;
    let rho = match chart {
        ChartId::A2B2 => b2.recip().map_err(|_| unreachable("b2"))?,
        ChartId::A2D0D1 | ChartId::A2D0D2 => {
            if d0.is_zero() {
                return Err(unreachable("d0"));
            }
            a2 / d0
        }
    };
    GaugeAction::new(-a0, mu, -b0, rho)
}

/// The vector moved into `chart`.
pub fn canonical_vector(pv: &ParameterVector, chart: ChartId) -> Result<ParameterVector> {
    Ok(apply_gauge(pv, &chart_gauge(pv, chart)?))
}

/// The four local coordinates of `pv` in `chart`.
pub fn canonicalize(pv: &ParameterVector, chart: ChartId) -> Result<[Rational; 4]> {
    let c = canonical_vector(pv, chart)?;
    let (a, b, d) = (c.a(), c.b(), c.d());
    Ok(match chart {
        ChartId::A2B2 => [a[1].clone(), b[1].clone(), d[0].clone(), d[1].clone()],
        ChartId::A2D0D1 => [a[1].clone(), b[1].clone(), b[2].clone(), d[1].clone()],
        ChartId::A2D0D2 => [a[1].clone(), b[1].clone(), b[2].clone(), d[2].clone()],
    })
}

/// A printed row that does not match its family as labelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RowCorrection {
    /// Node whose instance is canonicalized instead of the printed label.
    pub instance: &'static str,
    /// Signature the instance actually has.
    pub signature: &'static str,
    pub reason: &'static str,
}

/// One row of a chart table: a node and the black/white signature of its
/// four local coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChartRow {
    pub chart: ChartId,
    pub label: &'static str,
    pub printed: &'static str,
    pub correction: Option<RowCorrection>,
}

const fn row(chart: ChartId, label: &'static str, printed: &'static str) -> ChartRow {
    ChartRow { chart, label, printed, correction: None }
}

pub const CHART_ROWS: [ChartRow; 35] = [
    row(ChartId::A2B2, "1a", "BBBB"),
    row(ChartId::A2B2, "2a", "WBBB"),
    row(ChartId::A2B2, "2b", "BWBB"),
    row(ChartId::A2B2, "3a", "WBBW"),
    row(ChartId::A2B2, "3c", "WWBB"),
    ChartRow {
        chart: ChartId::A2B2,
        label: "3d",
        printed: "WBWB",
        correction: Some(RowCorrection {
            instance: "3d",
            signature: "BWBW",
            reason: "3d has a1 != 0, b1 = 0, d1 = 0; the printed row transposes the a1/b1 and d0/d1 cells",
        }),
    },
    row(ChartId::A2B2, "4a", "WBWW"),
    row(ChartId::A2B2, "4b", "WWBW"),
    row(ChartId::A2B2, "4f", "BWWW"),
    row(ChartId::A2B2, "5a", "WWWW"),
    row(ChartId::A2D0D1, "1a", "BBBB"),
    row(ChartId::A2D0D1, "2a", "WBBB"),
    row(ChartId::A2D0D1, "2b", "BWBB"),
    row(ChartId::A2D0D1, "2b′", "BBWB"),
    row(ChartId::A2D0D1, "3a", "WBBW"),
    row(ChartId::A2D0D1, "3b", "WBWB"),
    row(ChartId::A2D0D1, "3c", "WWBB"),
    row(ChartId::A2D0D1, "3e", "BWWB"),
    row(ChartId::A2D0D1, "4b", "WWBW"),
    row(ChartId::A2D0D1, "4c", "WBWW"),
    row(ChartId::A2D0D1, "4e", "WWWB"),
    row(ChartId::A2D0D1, "4g", "BWWW"),
    row(ChartId::A2D0D1, "5b", "WWWW"),
    row(ChartId::A2D0D2, "1a", "BBBB"),
    row(ChartId::A2D0D2, "2a", "WBBB"),
    row(ChartId::A2D0D2, "2b", "BWBB"),
    row(ChartId::A2D0D2, "2b′", "BBWB"),
    row(ChartId::A2D0D2, "3b", "WBWB"),
    row(ChartId::A2D0D2, "3c", "WWBB"),
    row(ChartId::A2D0D2, "3e", "BWWB"),
    ChartRow {
        chart: ChartId::A2D0D2,
        label: "3d′",
        printed: "BWBW",
        correction: Some(RowCorrection {
            instance: "3d′",
            signature: "BBWW",
            reason: "3d′ has b1 != 0 and b2 = 0; the printed row swaps the b1 and b2 cells",
        }),
    },
    row(ChartId::A2D0D2, "4d", "WBWW"),
    row(ChartId::A2D0D2, "4e", "WWWB"),
    row(ChartId::A2D0D2, "4g′", "BWWW"),
    ChartRow {
        chart: ChartId::A2D0D2,
        label: "5e",
        printed: "WWWW",
        correction: Some(RowCorrection {
            instance: "5c",
            signature: "WWWW",
            reason: "no node 5e exists; 5c is the bottom node with a2 != 0 and d0 != 0 (5c′ has a2 = 0)",
        }),
    },
];

/// `B`/`W` string for nonzero/zero coordinates.
pub fn signature(coords: &[Rational]) -> String {
    coords.iter().map(|c| if c.is_zero() { 'W' } else { 'B' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{monic_poly, SeqKind};
    use crate::exact::rat;

    /// h_k = q^-k - 1 with a1 = d1 = 0 and generic nodes.
    fn sample() -> ParameterVector {
        ParameterVector::from_free(
            rat(1, 2),
            [rat(-1, 1), Rational::zero(), Rational::one()],
            [rat(1, 3), rat(2, 1), rat(1, 5)],
            rat(0, 1),
            rat(3, 7),
        )
        .unwrap()
    }

    #[test]
    fn identity_gauge() {
        let pv = sample();
        assert_eq!(apply_gauge(&pv, &GaugeAction::identity()), pv);
    }

    #[test]
    fn h_scaling_keeps_polynomials() {
        let pv = sample();
        let g = GaugeAction::scale_h(rat(3, 1)).unwrap();
        let scaled = apply_gauge(&pv, &g);
        for k in 0..6 {
            assert_eq!(scaled.h(k), pv.h(k) * rat(3, 1));
            assert_eq!(scaled.g(k), pv.g(k) * rat(3, 1));
        }
        for n in 0..5 {
            assert_eq!(monic_poly(&scaled, n).unwrap(), monic_poly(&pv, n).unwrap());
        }
    }

    #[test]
    fn x_scaling_rescales_polynomials() {
        let pv = sample();
        let g = GaugeAction::scale_x(rat(2, 1)).unwrap();
        let scaled = apply_gauge(&pv, &g);
        for n in 0..5 {
            let u = monic_poly(&pv, n).unwrap();
            let expected = u.compose_affine(&rat(1, 2), &Rational::zero()).scale(&rat(2, 1).powi(n as i64));
            assert_eq!(monic_poly(&scaled, n).unwrap(), expected);
        }
    }

    #[test]
    fn composition_and_inverse() {
        let pv = sample();
        let g1 = GaugeAction::new(rat(1, 2), rat(-3, 1), rat(2, 1), rat(5, 4)).unwrap();
        let g2 = GaugeAction::new(rat(-7, 3), rat(2, 5), rat(1, 1), rat(-1, 2)).unwrap();
        assert_eq!(apply_gauge(&apply_gauge(&pv, &g1), &g2), apply_gauge(&pv, &g1.then(&g2)));
        assert_eq!(apply_gauge(&apply_gauge(&pv, &g1), &g1.inverse()), pv);
    }

    #[test]
    fn q_inversion_keeps_sequences() {
        let pv = sample();
        let inv = q_invert(&pv);
        assert_eq!(q_invert(&inv), pv);
        for kind in [SeqKind::X, SeqKind::H, SeqKind::G] {
            for k in 0..=10 {
                assert_eq!(inv.seq(kind, k), pv.seq(kind, k));
            }
        }
    }

    #[test]
    fn dualize_is_an_involution() {
        let pv = sample();
        let d = dualize(&pv, 6).unwrap();
        assert_eq!(d.x(3), pv.h(3));
        assert_eq!(dualize(&d, 6).unwrap(), pv);
    }

    #[test]
    fn dualize_rejects_constant_nodes() {
        let pv = ParameterVector::from_free(
            rat(1, 2),
            [Rational::zero(), Rational::zero(), Rational::one()],
            [rat(4, 1), Rational::zero(), Rational::zero()],
            rat(1, 1),
            rat(1, 1),
        )
        .unwrap();
        assert_eq!(dualize(&pv, 3), Err(Error::XSeparationViolated { n: 1, j: 0 }));
    }

    #[test]
    fn charts() {
        let pv = sample();
        let coords = canonicalize(&pv, ChartId::A2B2).unwrap();
        let c = canonical_vector(&pv, ChartId::A2B2).unwrap();
        assert!(c.a()[0].is_zero() && c.b()[0].is_zero());
        assert!(c.a()[2].is_one() && c.b()[2].is_one());
        assert_eq!(signature(&coords), "WBBW");
        // canonical vectors are fixed points
        assert_eq!(canonical_vector(&c, ChartId::A2B2).unwrap(), c);
        let c2 = canonical_vector(&pv, ChartId::A2D0D2).unwrap();
        assert!(c2.d()[0].is_one());
    }

    #[test]
    fn chart_unreachable() {
        let pv = ParameterVector::from_free(
            rat(1, 2),
            [rat(-1, 1), Rational::zero(), Rational::one()],
            [rat(1, 3), rat(2, 1), Rational::zero()],
            rat(1, 1),
            rat(3, 7),
        )
        .unwrap();
        assert!(matches!(
            canonicalize(&pv, ChartId::A2B2),
            Err(Error::ChartUnreachable { coordinate, .. }) if coordinate == "b2"
        ));
    }

    #[test]
    fn chart_names_parse() {
        for chart in ChartId::ALL {
            assert_eq!(chart.to_string().parse::<ChartId>().unwrap(), chart);
        }
    }
}
