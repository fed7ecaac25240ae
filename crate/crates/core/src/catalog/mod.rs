//! Executable family table.
//!
//! Each [`FamilySpec`] carries the printed product formulas for `x_k`, `h_k`,
//! `g_k` and one terminating-series representation. [`crosscheck`] compares
//! three independent routes to the monic polynomial `u_n`:
//!
//! * the Newton-basis expansion of the engine, fed by the expanded
//!   coefficients of the sequences;
//! * the series as a polynomial in `x` (`qhyper_poly`);
//! * the series summed at a rational point with `x` substituted.

mod families;
pub mod laurent;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classifier::{label_of, normalize_label, pattern_of};
use crate::engine::{finite_cutoff, ParameterVector, PolySystem};
use crate::error::{Error, Result};
use crate::exact::{joukowski_poch, qhyper_poly, qpoch, rat, DensePoly, Rational, SeriesArg, SeriesParam};
use crate::par::Exec;
use laurent::Laurent;

/// Base used when no `q` is given.
pub fn default_q() -> Rational {
    rat(1, 2)
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSlot {
    pub name: &'static str,
    pub default: (i64, i64),
    pub constraint: &'static str,
}

/// Sequences as products of Laurent factors in `Q = q^k`.
#[derive(Clone, Debug)]
pub struct Seqs {
    pub x: Vec<Laurent>,
    pub h: Vec<Laurent>,
    pub g: Vec<Laurent>,
}

/// `standard_n(x) = pre * r phi s (q^-n, rest; lower; q, z)` and the
/// monic polynomial is `standard_n / kn`.
#[derive(Clone, Debug)]
pub struct Rep {
    pub pre: Rational,
    pub rest: Vec<SeriesParam>,
    pub lower: Vec<Rational>,
    pub z: SeriesArg,
    pub kn: Rational,
}

pub struct FamilySpec {
    /// Unique key: the entry label, or a slug for finite specializations.
    pub id: &'static str,
    pub name: &'static str,
    pub kls_section: Option<u32>,
    pub node_label: &'static str,
    pub slots: &'static [ParamSlot],
    pub basis: &'static str,
    /// Parameter ranges for orthogonality; metadata only.
    pub ranges: &'static str,
    /// Name of the integer slot `N` for families with `g_{N+1} = 0`.
    pub finite: Option<&'static str>,
    seqs: fn(&Ctx) -> Result<Seqs>,
    rep: fn(&Ctx, usize) -> Result<Rep>,
    closed: Option<fn(&Ctx, usize) -> DensePoly>,
}

impl std::fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FamilySpec").field("id", &self.id).field("name", &self.name).finish()
    }
}

/// Parameter values for one instance: defaults overridden by the caller.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub family: &'static str,
    pub q: Rational,
    values: BTreeMap<String, Rational>,
}

impl Ctx {
    pub fn new(spec: &FamilySpec, q: &Rational, overrides: &BTreeMap<String, Rational>) -> Result<Ctx> {
        if q.is_zero() || *q == 1 || *q == -1 {
            return Err(inadmissible(spec.id, format!("q = {q} must avoid 0, 1 and -1")));
        }
        let mut values: BTreeMap<String, Rational> =
            spec.slots.iter().map(|s| (s.name.to_string(), rat(s.default.0, s.default.1))).collect();
        for (k, v) in overrides {
            if !values.contains_key(k) {
                return Err(inadmissible(spec.id, format!("unknown parameter {k:?}")));
            }
            values.insert(k.clone(), v.clone());
        }
        Ok(Ctx { family: spec.id, q: q.clone(), values })
    }

    pub fn p(&self, name: &str) -> Rational {
        self.values.get(name).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> &BTreeMap<String, Rational> {
        &self.values
    }

    fn nonzero(&self, name: &str) -> Result<Rational> {
        let v = self.p(name);
        if v.is_zero() {
            return Err(inadmissible(self.family, format!("{name} must be nonzero")));
        }
        Ok(v)
    }

    fn integer(&self, name: &str) -> Result<i64> {
        let v = self.p(name);
        if !v.is_integer() || v.is_negative() {
            return Err(inadmissible(self.family, format!("{name} = {v} must be a nonnegative integer")));
        }
        v.to_string().parse().map_err(|_| inadmissible(self.family, format!("{name} = {v} is too large")))
    }

    fn with(&self, name: &str, value: Rational) -> Ctx {
        let mut out = self.clone();
        out.values.insert(name.to_string(), value);
        out
    }
}

fn inadmissible(family: &str, reason: String) -> Error {
    Error::InadmissibleParams { family: family.to_string(), reason }
}

pub fn families() -> &'static [FamilySpec] {
    families::FAMILIES
}

/// Lookup by id; `'` is accepted for `′`.
pub fn family(id: &str) -> Result<&'static FamilySpec> {
    let key = normalize_label(id).to_ascii_lowercase();
    families().iter().find(|f| f.id.to_ascii_lowercase() == key).ok_or_else(|| Error::UnknownFamily(id.to_string()))
}

/// Expands the product formulas and reads off the 11 coefficients.
fn vector_from_seqs(family: &str, q: &Rational, s: &Seqs) -> Result<ParameterVector> {
    let x = Laurent::product(&s.x);
    let h = Laurent::product(&s.h);
    let g = Laurent::product(&s.g);
    let within = |l: &Laurent, lo: i32, hi: i32| l.support().is_none_or(|(a, b)| a >= lo && b <= hi);
    if !within(&x, -1, 1) || !within(&h, -1, 1) || !within(&g, -2, 2) {
        return Err(inadmissible(family, "sequence degrees leave the allowed range".into()));
    }
    let abc = |l: &Laurent| [l.coeff(0), l.coeff(1), l.coeff(-1)];
    let d = [g.coeff(0), g.coeff(1), g.coeff(-1), g.coeff(2), g.coeff(-2)];
    ParameterVector::new(q.clone(), abc(&h), abc(&x), d).map_err(|e| inadmissible(family, e.to_string()))
}

impl FamilySpec {
    pub fn ctx(&self, q: &Rational, overrides: &BTreeMap<String, Rational>) -> Result<Ctx> {
        Ctx::new(self, q, overrides)
    }

    pub fn default_ctx(&self) -> Ctx {
        Ctx::new(self, &default_q(), &BTreeMap::new()).expect("defaults are admissible")
    }

    pub fn vector(&self, c: &Ctx) -> Result<ParameterVector> {
        vector_from_seqs(self.id, &c.q, &(self.seqs)(c)?)
    }

    pub fn representation(&self, c: &Ctx, n: usize) -> Result<Rep> {
        (self.rep)(c, n)
    }

    /// The printed products evaluated at `Q = q^k`, bypassing expansion.
    pub fn sequences_at(&self, c: &Ctx, k: i64) -> Result<[Rational; 3]> {
        let s = (self.seqs)(c)?;
        let big_q = c.q.powi(k);
        let ev = |fs: &[Laurent]| fs.iter().map(|f| f.eval(&big_q)).product::<Rational>();
        Ok([ev(&s.x), ev(&s.h), ev(&s.g)])
    }

    /// Degree cap imposed by a finite cutoff.
    pub fn max_degree(&self, c: &Ctx) -> Result<Option<usize>> {
        match self.finite {
            Some(name) => Ok(Some(c.integer(name)? as usize)),
            None => Ok(None),
        }
    }

    /// Monic `u_n` from the polynomial-valued series.
    pub fn hyper_poly(&self, c: &Ctx, n: usize) -> Result<DensePoly> {
        let rep = self.representation(c, n)?;
        if rep.kn.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let series = qhyper_poly(n, &rep.rest, &rep.lower, &c.q, &rep.z)?;
        Ok(series.scale(&(rep.pre / rep.kn)))
    }

    /// `pre * series` without the `1/kn` normalization.
    pub fn standard_poly(&self, c: &Ctx, n: usize) -> Result<DensePoly> {
        let rep = self.representation(c, n)?;
        Ok(qhyper_poly(n, &rep.rest, &rep.lower, &c.q, &rep.z)?.scale(&rep.pre))
    }

    /// Monic `u_n(x)` summed at the point `x`. At `x = 0` with a reciprocal
    /// parameter the polynomial route is used.
    pub fn hyper_eval(&self, c: &Ctx, n: usize, x: &Rational) -> Result<Rational> {
        let rep = self.representation(c, n)?;
        if rep.kn.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if x.is_zero() && rep.rest.iter().any(|p| matches!(p, SeriesParam::Reciprocal(_))) {
            return Ok(self.hyper_poly(c, n)?.eval(x));
        }
        Ok(&rep.pre * series_at(&rep, &c.q, n, x)? / &rep.kn)
    }

    pub fn closed_form(&self, c: &Ctx, n: usize) -> Option<DensePoly> {
        self.closed.map(|f| f(c, n))
    }
}

/// Term-by-term sum with `x` substituted into every parameter.
fn series_at(rep: &Rep, q: &Rational, n: usize, x: &Rational) -> Result<Rational> {
    let arity: i64 = rep.rest.iter().map(|p| if matches!(p, SeriesParam::Joukowski(_)) { 2 } else { 1 }).sum();
    let exponent = rep.lower.len() as i64 - (1 + arity) + 1;
    let z = &rep.z.coeff * x.powi(rep.z.x_power as i64);
    let q_neg_n = q.powi(-(n as i64));
    let mut total = Rational::zero();
    for k in 0..=n {
        let mut num = qpoch(&q_neg_n, q, k);
        for p in &rep.rest {
            num *= match p {
                SeriesParam::Const(c) => qpoch(c, q, k),
                SeriesParam::Scaled(c) => qpoch(&(c * x), q, k),
                SeriesParam::Reciprocal(c) => qpoch(&x.recip().map(|r| c * r)?, q, k),
                SeriesParam::Joukowski(a) => joukowski_poch(a, q, x, k)?,
            };
        }
        if num.is_zero() {
            continue;
        }
        let den: Rational = rep.lower.iter().map(|b| qpoch(b, q, k)).product::<Rational>() * qpoch(q, q, k);
        let kk = k as i64;
        let sign = if (kk * exponent).rem_euclid(2) == 1 { -Rational::one() } else { Rational::one() };
        let gauge = sign * q.powi(exponent * kk * (kk - 1) / 2);
        total += num.checked_div(&den)? * gauge * z.powi(kk);
    }
    Ok(total)
}

/// Instance of a family as a parameter vector.
pub fn instantiate(id: &str, params: &BTreeMap<String, Rational>, q: &Rational) -> Result<ParameterVector> {
    let spec = family(id)?;
    spec.vector(&spec.ctx(q, params)?)
}

pub fn hyper_eval(
    id: &str,
    params: &BTreeMap<String, Rational>,
    q: &Rational,
    n: usize,
    x: &Rational,
) -> Result<Rational> {
    let spec = family(id)?;
    spec.hyper_eval(&spec.ctx(q, params)?, n, x)
}

/// Distinct nonzero sample points `(-1)^i (2i+3)/(i+2)`.
pub fn sample_points(count: usize) -> Vec<Rational> {
    (0..count as i64)
        .map(|i| {
            let v = rat(2 * i + 3, i + 2);
            if i % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub family: String,
    pub name: String,
    pub node_label: String,
    pub pattern: String,
    pub pattern_label: Option<String>,
    pub pattern_ok: bool,
    /// Expanded coefficients reproduce the printed products at `k = 0..`.
    pub sequences_ok: bool,
    /// Leading coefficient of the representation equals the printed `k_n`.
    pub kn_consistent: bool,
    pub polynomials_equal: bool,
    pub closed_form_ok: Option<bool>,
    pub cutoff_ok: Option<bool>,
    pub max_degree: usize,
    pub points_checked: usize,
    pub pass: bool,
}

/// Compares the engine's `u_n` with the family's representation for
/// `n <= n_max` (or the finite cutoff). A value mismatch at a sample point
/// is returned as [`Error::Mismatch`].
pub fn crosscheck(
    id: &str,
    params: &BTreeMap<String, Rational>,
    q: &Rational,
    n_max: usize,
) -> Result<CrosscheckReport> {
    let spec = family(id)?;
    crosscheck_ctx(spec, &spec.ctx(q, params)?, n_max)
}

pub fn crosscheck_ctx(spec: &FamilySpec, c: &Ctx, n_max: usize) -> Result<CrosscheckReport> {
    let pv = spec.vector(c)?;
    let pattern = pattern_of(&pv)?;
    let pattern_label = label_of(&pattern);
    let pattern_ok = pattern_label.as_deref() == Some(spec.node_label);

    let mut sequences_ok = true;
    for k in 0..=(n_max as i64 + 1) {
        let [x, h, g] = spec.sequences_at(c, k)?;
        sequences_ok &= x == pv.x(k) && h == pv.h(k) && g == pv.g(k);
    }

    let cap = spec.max_degree(c)?;
    let top = cap.map_or(n_max, |cap| cap.min(n_max));
    let cutoff_ok = cap.map(|cap| finite_cutoff(&pv, cap + 1) == Some(cap));
    let sys = PolySystem::new(&pv, top)?;

    let mut kn_consistent = true;
    let mut polynomials_equal = true;
    let mut closed_form_ok = spec.closed.map(|_| true);
    let mut points_checked = 0;
    for n in 0..=top {
        let u = sys.u(n);
        let rep = spec.representation(c, n)?;
        let standard = spec.standard_poly(c, n)?;
        kn_consistent &= standard.leading() == Some(&rep.kn);
        polynomials_equal &= spec.hyper_poly(c, n)? == *u;
        if let (Some(ok), Some(closed)) = (closed_form_ok.as_mut(), spec.closed_form(c, n)) {
            *ok &= closed == *u;
        }
        for x in sample_points(n + 1) {
            let lhs = u.eval(&x);
            let rhs = spec.hyper_eval(c, n, &x)?;
            if lhs != rhs {
                return Err(Error::Mismatch { n, x: x.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() });
            }
            points_checked += 1;
        }
    }
    let pass = pattern_ok
        && sequences_ok
        && kn_consistent
        && polynomials_equal
        && closed_form_ok.unwrap_or(true)
        && cutoff_ok.unwrap_or(true);
    Ok(CrosscheckReport {
        family: spec.id.to_string(),
        name: spec.name.to_string(),
        node_label: spec.node_label.to_string(),
        pattern: pattern.to_string(),
        pattern_label,
        pattern_ok,
        sequences_ok,
        kn_consistent,
        polynomials_equal,
        closed_form_ok,
        cutoff_ok,
        max_degree: top,
        points_checked,
        pass,
    })
}

/// Default-parameter crosschecks of every family, in table order.
pub fn crosscheck_all(exec: Exec, n_max: usize) -> Vec<(String, Result<CrosscheckReport>)> {
    let specs: Vec<&'static FamilySpec> = families().iter().collect();
    exec.map(specs, |spec| (spec.id.to_string(), crosscheck_ctx(spec, &spec.default_ctx(), n_max)))
}

#[derive(Clone, Debug, Serialize)]
pub struct RegistrySlot {
    pub name: String,
    pub default: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub constraint: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegistryEntry {
    pub id: String,
    pub name: String,
    pub kls_section: Option<u32>,
    pub node_label: String,
    pub params: Vec<RegistrySlot>,
    pub default_q: String,
    pub basis: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub ranges: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finite_param: Option<String>,
}

pub fn registry() -> Vec<RegistryEntry> {
    families()
        .iter()
        .map(|f| RegistryEntry {
            id: f.id.to_string(),
            name: f.name.to_string(),
            kls_section: f.kls_section,
            node_label: f.node_label.to_string(),
            params: f
                .slots
                .iter()
                .map(|s| RegistrySlot {
                    name: s.name.to_string(),
                    default: rat(s.default.0, s.default.1).to_string(),
                    constraint: s.constraint.to_string(),
                })
                .collect(),
            default_q: default_q().to_string(),
            basis: f.basis.to_string(),
            ranges: f.ranges.to_string(),
            finite_param: f.finite.map(str::to_string),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::monic_poly;

    fn none() -> BTreeMap<String, Rational> {
        BTreeMap::new()
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = families().iter().map(|f| f.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), families().len());
    }

    #[test]
    fn askey_wilson_with_vanishing_parameters() {
        let params: BTreeMap<String, Rational> =
            [("a", rat(2, 1)), ("b", Rational::zero()), ("c", Rational::zero()), ("d", Rational::zero())]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
        let pv = instantiate("1a", &params, &rat(1, 2)).unwrap();
        assert_eq!(pv.x(0), rat(5, 2));
        assert_eq!(pv.h(3), rat(7, 1));
        assert_eq!(pv.g(1), rat(1, 2));
        assert_eq!(monic_poly(&pv, 1).unwrap(), DensePoly::linear(rat(-2, 1), rat(1, 1)));
    }

    #[test]
    fn big_q_jacobi_node() {
        assert_eq!(instantiate("2b", &none(), &rat(1, 2)).unwrap().x(2), rat(4, 1));
    }

    #[test]
    fn stieltjes_wigert_nodes_vanish() {
        let pv = instantiate("5c'", &none(), &rat(1, 2)).unwrap();
        assert!((0..6).all(|k| pv.x(k).is_zero()));
    }

    #[test]
    fn newton_one_value() {
        assert_eq!(hyper_eval("5b", &none(), &rat(1, 2), 2, &rat(2, 1)).unwrap(), rat(3, 2));
        assert_eq!(hyper_eval("5b", &none(), &rat(1, 2), 0, &rat(7, 1)).unwrap(), rat(1, 1));
    }

    #[test]
    fn al_salam_carlitz_at_zero() {
        let pv = instantiate("4c", &none(), &rat(1, 2)).unwrap();
        let a0 = crate::engine::a0_coeff(&pv).unwrap();
        assert_eq!(hyper_eval("4c", &none(), &rat(1, 2), 1, &Rational::zero()).unwrap(), -a0);
    }

    #[test]
    fn unknown_inputs() {
        assert_eq!(family("9z").unwrap_err(), Error::UnknownFamily("9z".into()));
        let bad: BTreeMap<String, Rational> = [("zz".to_string(), rat(1, 1))].into_iter().collect();
        assert!(matches!(instantiate("1a", &bad, &rat(1, 2)), Err(Error::InadmissibleParams { .. })));
        let zero_a: BTreeMap<String, Rational> = [("a".to_string(), Rational::zero())].into_iter().collect();
        assert!(matches!(instantiate("4c", &zero_a, &rat(1, 2)), Err(Error::InadmissibleParams { .. })));
    }

    #[test]
    fn every_default_crosschecks() {
        for (id, report) in crosscheck_all(Exec::Sequential, 5) {
            let report = report.unwrap_or_else(|e| panic!("{id}: {e}"));
            assert!(report.pass, "{id}: {report:?}");
        }
    }
}
