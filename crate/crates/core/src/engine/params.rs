//! The 11 Laurent coefficients and the sequences they generate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Which of the three Laurent sequences to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqKind {
    /// Nodes `x_k = b2 q^-k + b0 + b1 q^k`.
    X,
    /// Eigenvalues `h_k = a2 q^-k + a0 + a1 q^k`.
    H,
    /// Lowering coefficients `g_k = d4 q^-2k + d2 q^-k + d0 + d1 q^k + d3 q^2k`.
    G,
}

/// `q` together with `(a0,a1,a2)`, `(b0,b1,b2)` and `(d0,d1,d2,d3,d4)`.
///
/// Values built with [`ParameterVector::new`] satisfy
/// `d0+d1+d2+d3+d4 = 0`, `d3 = a1 b1 / q`, `d4 = q a2 b2`,
/// `(a1, a2) != (0, 0)` and have some nonzero `d_i`. Separation of the
/// eigenvalues `h_k` depends on how deep the sequences are used and is
/// checked on demand by [`ParameterVector::check_h_separation`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParameterVector", into = "RawParameterVector")]
pub struct ParameterVector {
    q: Rational,
    a: [Rational; 3],
    b: [Rational; 3],
    d: [Rational; 5],
}

#[derive(Clone, Serialize, Deserialize)]
struct RawParameterVector {
    q: Rational,
    a: [Rational; 3],
    b: [Rational; 3],
    d: [Rational; 5],
}

impl TryFrom<RawParameterVector> for ParameterVector {
    type Error = Error;
    fn try_from(raw: RawParameterVector) -> Result<Self> {
        ParameterVector::new(raw.q, raw.a, raw.b, raw.d)
    }
}

impl From<ParameterVector> for RawParameterVector {
    fn from(pv: ParameterVector) -> Self {
        RawParameterVector { q: pv.q, a: pv.a, b: pv.b, d: pv.d }
    }
}

/// Which invariants a vector satisfies. Reported next to every vector the
/// CLI emits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub q_admissible: bool,
    pub d_sum_zero: bool,
    pub d3_relation: bool,
    pub d4_relation: bool,
    pub h_nondegenerate: bool,
    pub g_nonzero: bool,
    /// Depth to which `h_n != h_j` was verified, if it held there.
    pub h_separated_to: Option<usize>,
}

impl CheckReport {
    pub fn structural_ok(&self) -> bool {
        self.q_admissible
            && self.d_sum_zero
            && self.d3_relation
            && self.d4_relation
            && self.h_nondegenerate
            && self.g_nonzero
    }
}

/// A vector paired with its check report, as serialized by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct CheckedParameters {
    #[serde(flatten)]
    pub params: ParameterVector,
    pub check: CheckReport,
}

fn q_is_admissible(q: &Rational) -> bool {
    !(q.is_zero() || *q == 1 || *q == -1)
}

impl ParameterVector {
    /// Validated constructor.
    pub fn new(q: Rational, a: [Rational; 3], b: [Rational; 3], d: [Rational; 5]) -> Result<Self> {
        let pv = ParameterVector { q, a, b, d };
        let report = pv.structural_report();
        if !report.q_admissible {
            return Err(Error::InvalidParameters(format!("q = {} must avoid 0, 1 and -1", pv.q)));
        }
        if !report.d_sum_zero {
            return Err(Error::InvalidParameters("d0+d1+d2+d3+d4 must vanish".into()));
        }
        if !report.d3_relation {
            return Err(Error::InvalidParameters("d3 must equal a1*b1/q".into()));
        }
        if !report.d4_relation {
            return Err(Error::InvalidParameters("d4 must equal q*a2*b2".into()));
        }
        if !report.h_nondegenerate {
            return Err(Error::InvalidParameters("a1 and a2 are both zero".into()));
        }
        if !report.g_nonzero {
            return Err(Error::InvalidParameters("all d_i vanish (g_k identically zero)".into()));
        }
        Ok(pv)
    }

    /// No invariant is enforced. Used for perturbed vectors in negative tests.
    pub fn new_unchecked(q: Rational, a: [Rational; 3], b: [Rational; 3], d: [Rational; 5]) -> Self {
        ParameterVector { q, a, b, d }
    }

    /// Fills `d3`, `d4` from their constraints and `d0` from the zero sum.
    pub fn from_free(q: Rational, a: [Rational; 3], b: [Rational; 3], d1: Rational, d2: Rational) -> Result<Self> {
        if !q_is_admissible(&q) {
            return Err(Error::InvalidParameters(format!("q = {q} must avoid 0, 1 and -1")));
        }
        let d3 = &a[1] * &b[1] / &q;
        let d4 = &q * &a[2] * &b[2];
        let d0 = -(&d1 + &d2 + &d3 + &d4);
        ParameterVector::new(q, a, b, [d0, d1, d2, d3, d4])
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// `(a0, a1, a2)`.
    pub fn a(&self) -> &[Rational; 3] {
        &self.a
    }

    /// `(b0, b1, b2)`.
    pub fn b(&self) -> &[Rational; 3] {
        &self.b
    }

    /// `(d0, d1, d2, d3, d4)`.
    pub fn d(&self) -> &[Rational; 5] {
        &self.d
    }

    pub fn into_parts(self) -> (Rational, [Rational; 3], [Rational; 3], [Rational; 5]) {
        (self.q, self.a, self.b, self.d)
    }

    pub fn structural_report(&self) -> CheckReport {
        let q_admissible = q_is_admissible(&self.q);
        let [_, a1, a2] = &self.a;
        let [_, b1, b2] = &self.b;
        let d_sum_zero = self.d.iter().sum::<Rational>().is_zero();
        let d3_relation = q_admissible && self.d[3] == a1 * b1 / &self.q;
        let d4_relation = self.d[4] == &self.q * a2 * b2;
        CheckReport {
            q_admissible,
            d_sum_zero,
            d3_relation,
            d4_relation,
            h_nondegenerate: !(a1.is_zero() && a2.is_zero()),
            g_nonzero: self.d.iter().any(|d| !d.is_zero()),
            h_separated_to: None,
        }
    }

    /// Structural report plus the h-separation check to `depth`.
    pub fn check(&self, depth: usize) -> CheckReport {
        let mut report = self.structural_report();
        if report.q_admissible && self.check_h_separation(depth).is_ok() {
            report.h_separated_to = Some(depth);
        }
        report
    }

    pub fn checked(&self, depth: usize) -> CheckedParameters {
        CheckedParameters { params: self.clone(), check: self.check(depth) }
    }

    fn laurent1(&self, c: &[Rational; 3], k: i64) -> Rational {
        let qk = self.q.powi(k);
        let qmk = self.q.powi(-k);
        &c[2] * qmk + &c[0] + &c[1] * qk
    }

    /// `x_k`.
    pub fn x(&self, k: i64) -> Rational {
        self.laurent1(&self.b, k)
    }

    /// `h_k`.
    pub fn h(&self, k: i64) -> Rational {
        self.laurent1(&self.a, k)
    }

    /// `g_k`.
    pub fn g(&self, k: i64) -> Rational {
        let d = &self.d;
        let q = &self.q;
        &d[4] * q.powi(-2 * k) + &d[2] * q.powi(-k) + &d[0] + &d[1] * q.powi(k) + &d[3] * q.powi(2 * k)
    }

    pub fn seq(&self, kind: SeqKind, k: i64) -> Rational {
        match kind {
            SeqKind::X => self.x(k),
            SeqKind::H => self.h(k),
            SeqKind::G => self.g(k),
        }
    }

    pub fn view(&self, kind: SeqKind) -> SequenceView<'_> {
        SequenceView { owner: self, kind }
    }

    /// `h_n != h_j` for `0 <= j < n <= depth`.
    pub fn check_h_separation(&self, depth: usize) -> Result<()> {
        separated(&(0..=depth).map(|k| self.h(k as i64)).collect::<Vec<_>>())
            .map_err(|(n, j)| Error::HSeparationViolated { n, j })
    }

    /// `x_n != x_j` for `0 <= j < n <= depth`; the condition for dualizing.
    pub fn check_x_separation(&self, depth: usize) -> Result<()> {
        separated(&(0..=depth).map(|k| self.x(k as i64)).collect::<Vec<_>>())
            .map_err(|(n, j)| Error::XSeparationViolated { n, j })
    }

    /// The `a <-> b` swap at the parameter level, without validation.
    pub(crate) fn swap_ab(&self) -> ParameterVector {
        ParameterVector { q: self.q.clone(), a: self.b.clone(), b: self.a.clone(), d: self.d.clone() }
    }
}

fn separated(values: &[Rational]) -> std::result::Result<(), (usize, usize)> {
    for n in 1..values.len() {
        for j in 0..n {
            if values[n] == values[j] {
                return Err((n, j));
            }
        }
    }
    Ok(())
}

impl fmt::Debug for ParameterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ParameterVector {{ q: {}, a: [{}, {}, {}], b: [{}, {}, {}], d: [{}, {}, {}, {}, {}] }}",
            self.q,
            self.a[0],
            self.a[1],
            self.a[2],
            self.b[0],
            self.b[1],
            self.b[2],
            self.d[0],
            self.d[1],
            self.d[2],
            self.d[3],
            self.d[4]
        )
    }
}

/// One of the three sequences of a vector, evaluated lazily.
#[derive(Clone, Copy, Debug)]
pub struct SequenceView<'a> {
    pub owner: &'a ParameterVector,
    pub kind: SeqKind,
}

impl SequenceView<'_> {
    pub fn get(&self, k: i64) -> Rational {
        self.owner.seq(self.kind, k)
    }

    pub fn take(&self, n: usize) -> Vec<Rational> {
        (0..n as i64).map(|k| self.get(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rational};

    fn sample() -> ParameterVector {
        ParameterVector::from_free(
            rat(1, 2),
            [rat(1, 3), rat(2, 1), rat(-1, 1)],
            [rat(0, 1), rat(3, 1), rat(1, 5)],
            rat(1, 7),
            rat(-2, 1),
        )
        .unwrap()
    }

    #[test]
    fn g_zero_vanishes() {
        assert!(sample().g(0).is_zero());
    }

    #[test]
    fn rejects_broken_constraints() {
        let pv = sample();
        let (q, a, b, mut d) = pv.into_parts();
        d[3] += Rational::one();
        d[0] -= Rational::one();
        let err = ParameterVector::new(q.clone(), a.clone(), b.clone(), d).unwrap_err();
        assert!(err.to_string().contains("d3"));

        let zero = [Rational::zero(), Rational::zero(), Rational::zero()];
        assert!(ParameterVector::from_free(q.clone(), zero.clone(), b.clone(), rat(1, 1), rat(-1, 1)).is_err());
        let zero_d = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        assert!(ParameterVector::new(q, a, [rat(1, 1), Rational::zero(), Rational::zero()], zero_d).is_err());
        assert!(ParameterVector::from_free(
            Rational::one(),
            sample().a().clone(),
            sample().b().clone(),
            rat(1, 1),
            rat(1, 1)
        )
        .is_err());
    }

    #[test]
    fn h_separation_detects_collision() {
        // h_k = q^-k + 2 q^k with q = 1/2: h_1 = 2 + 1 = 3, h_0 = 3
        let pv = ParameterVector::from_free(
            rat(1, 2),
            [Rational::zero(), rat(2, 1), rat(1, 1)],
            [Rational::zero(), rat(1, 1), Rational::zero()],
            rat(1, 1),
            Rational::zero(),
        )
        .unwrap();
        assert_eq!(pv.check_h_separation(3), Err(Error::HSeparationViolated { n: 1, j: 0 }));
        assert_eq!(pv.check(3).h_separated_to, None);
    }

    #[test]
    fn json_round_trip_validates() {
        let pv = sample();
        let s = serde_json::to_string(&pv).unwrap();
        assert!(s.starts_with(r#"{"q":"1/2","a":["1/3","2","-1"]"#));
        let back: ParameterVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, pv);
        let broken = s.replace(r#""d":[""#, r#""d":["1"#);
        assert!(serde_json::from_str::<ParameterVector>(&broken).is_err());
    }

    #[test]
    fn view_matches_direct_evaluation() {
        let pv = sample();
        let xs = pv.view(SeqKind::X).take(4);
        assert_eq!(xs[3], pv.x(3));
        assert_eq!(pv.seq(SeqKind::H, 2), pv.h(2));
    }
}
