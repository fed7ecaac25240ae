//! Limit transitions between families, certified by exact evaluation along
//! a shrinking sequence `eps_t = eps_0 / 2^t`, plus the identities that hold
//! without a limit.
//!
//! A case passes when every consecutive gap ratio is at most the bound and
//! the last gap is below the threshold. Both comparisons are exact.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{qhyper_poly, qpoch, rat, DensePoly, Rational, SeriesArg, SeriesParam};
use crate::par::Exec;

/// `{-2, -1/3, 0, 1/2, 3}`.
pub fn default_sample_xs() -> Vec<Rational> {
    vec![rat(-2, 1), rat(-1, 3), rat(0, 1), rat(1, 2), rat(3, 1)]
}

/// `10^-9`.
pub fn default_threshold() -> Rational {
    rat(1, 1_000_000_000)
}

pub fn default_ratio_bound() -> Rational {
    rat(3, 4)
}

/// `2^-32`.
pub fn default_eps0() -> Rational {
    rat(1, 1 << 32)
}

/// A polynomial read at `x_scale * x`.
#[derive(Clone, Debug)]
pub struct Side {
    pub poly: DensePoly,
    pub x_scale: Rational,
}

impl Side {
    fn plain(poly: DensePoly) -> Side {
        Side { poly, x_scale: Rational::one() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.poly.eval(&(&self.x_scale * x))
    }
}

/// Named parameter values with `q`.
#[derive(Clone, Debug)]
pub struct LimitParams {
    pub q: Rational,
    values: BTreeMap<String, Rational>,
}

impl LimitParams {
    pub fn p(&self, name: &str) -> Rational {
        self.values.get(name).cloned().unwrap_or_else(Rational::zero)
    }
}

pub struct LimitCase {
    /// `source→target` in node labels.
    pub id: &'static str,
    pub source_node: &'static str,
    pub target_node: &'static str,
    pub description: &'static str,
    /// How the source parameters and `x` depend on `eps`.
    pub mapping: &'static str,
    pub defaults: &'static [(&'static str, (i64, i64))],
    source: fn(&LimitParams, &Rational, usize) -> Result<Side>,
    target: fn(&LimitParams, usize) -> Result<Side>,
}

impl std::fmt::Debug for LimitCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LimitCase").field("id", &self.id).finish()
    }
}

fn series(
    pre: Rational,
    rest: Vec<SeriesParam>,
    lower: Vec<Rational>,
    z: SeriesArg,
    q: &Rational,
    n: usize,
) -> Result<DensePoly> {
    Ok(qhyper_poly(n, &rest, &lower, q, &z)?.scale(&pre))
}

fn one() -> Rational {
    Rational::one()
}

fn zero() -> Rational {
    Rational::zero()
}

fn ni(n: usize) -> i64 {
    n as i64
}

fn sign(n: usize) -> Rational {
    if n % 2 == 1 {
        -one()
    } else {
        one()
    }
}

fn need_nonzero(v: &Rational, what: &str) -> Result<()> {
    if v.is_zero() {
        return Err(Error::InadmissibleParams { family: "limit".into(), reason: format!("{what} must be nonzero") });
    }
    Ok(())
}

// continuous dual q-Hahn in the form symmetric around its second parameter
fn cdqh_b_form(a: &Rational, b: &Rational, c: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(b, "b")?;
    let (ab, bc) = (a * b, b * c);
    series(
        qpoch(&ab, q, n) * qpoch(&bc, q, n) / b.powi(ni(n)),
        vec![SeriesParam::Joukowski(b.clone())],
        vec![ab, bc],
        SeriesArg::constant(q.clone()),
        q,
        n,
    )
}

fn cdqh_a_form(a: &Rational, b: &Rational, c: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(a, "a")?;
    let (ab, ac) = (a * b, a * c);
    series(
        qpoch(&ab, q, n) * qpoch(&ac, q, n) / a.powi(ni(n)),
        vec![SeriesParam::Joukowski(a.clone())],
        vec![ab, ac],
        SeriesArg::constant(q.clone()),
        q,
        n,
    )
}

/// `(bq, cq; q)_n P_n(x; b, c; q)` as a `2 phi 1` in `x / c`.
fn bql_scaled_2phi1(b: &Rational, c: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(c, "c")?;
    let bq = b * q;
    let nn = ni(n);
    series(
        (-c).powi(nn) * q.powi(nn * (nn + 1) / 2) * qpoch(&bq, q, n),
        vec![SeriesParam::Reciprocal(bq.clone())],
        vec![bq],
        SeriesArg::times_x(c.recip()?),
        q,
        n,
    )
}

/// `(bq, cq; q)_n P_n(x; b, c; q)` as a `3 phi 2` with a zero upper parameter.
fn bql_scaled_3phi2(b: &Rational, c: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    let (bq, cq) = (b * q, c * q);
    series(
        qpoch(&bq, q, n) * qpoch(&cq, q, n),
        vec![SeriesParam::Const(zero()), SeriesParam::Scaled(one())],
        vec![bq, cq],
        SeriesArg::constant(q.clone()),
        q,
        n,
    )
}

/// Al-Salam-Chihara `Q_n(x/2; a, b | q)`.
fn asc_poly(a: &Rational, b: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(a, "a")?;
    let ab = a * b;
    series(
        qpoch(&ab, q, n) / a.powi(ni(n)),
        vec![SeriesParam::Joukowski(a.clone())],
        vec![ab, zero()],
        SeriesArg::constant(q.clone()),
        q,
        n,
    )
}

/// Al-Salam-Carlitz `U_n^{(b)}(x; q)`.
fn asc1_poly(b: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(b, "b")?;
    let nn = ni(n);
    series(
        (-b).powi(nn) * q.powi(nn * (nn - 1) / 2),
        vec![SeriesParam::Reciprocal(one())],
        vec![zero()],
        SeriesArg::times_x(q / b),
        q,
        n,
    )
}

/// `(b; q)_n 2 phi 1 (q^-n, x; b; q, q)`.
fn newton_b_series(b: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    series(qpoch(b, q, n), vec![SeriesParam::Scaled(one())], vec![b.clone()], SeriesArg::constant(q.clone()), q, n)
}

fn newton_roots(scale: &Rational, q: &Rational, n: usize) -> DensePoly {
    let roots: Vec<Rational> = (0..ni(n)).map(|j| scale * q.powi(j)).collect();
    DensePoly::from_roots(&roots)
}

/// Big q-Jacobi `P_n(x; a, b, 1, d; q)` with the `qax` upper parameter.
fn bqj_first_form(a: &Rational, b: &Rational, d: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    let qa = q * a;
    series(
        one(),
        vec![SeriesParam::Const(a * b * q.powi(ni(n) + 1)), SeriesParam::Scaled(qa.clone())],
        vec![qa.clone(), -(&qa * d)],
        SeriesArg::constant(q.clone()),
        q,
        n,
    )
}

/// Big q-Jacobi `P_n(x; a, b, 1, d; q)` with the `-qbx/d` upper parameter.
fn bqj_second_form(a: &Rational, b: &Rational, d: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(b, "b")?;
    need_nonzero(d, "d")?;
    let (qa, qb) = (q * a, q * b);
    let nn = ni(n);
    let pre = (-(a * d) / b).powi(nn) * qpoch(&qb, q, n) * qpoch(&(-(&qb / d)), q, n)
        / (qpoch(&qa, q, n) * qpoch(&(-(&qa * d)), q, n));
    series(
        pre,
        vec![SeriesParam::Const(a * b * q.powi(nn + 1)), SeriesParam::Scaled(-(&qb / d))],
        vec![qb.clone(), -(&qb / d)],
        SeriesArg::constant(q.clone()),
        q,
        n,
    )
}

/// Little q-Jacobi `p_n(x; a, b; q)` with the `qbx` upper parameter.
fn lqj_scaled_form(a: &Rational, b: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(b, "b")?;
    let qb = q * b;
    let nn = ni(n);
    series(
        (-&qb).powi(-nn) * q.powi(-nn * (nn - 1) / 2) * qpoch(&qb, q, n) / qpoch(&(q * a), q, n),
        vec![SeriesParam::Const(a * b * q.powi(nn + 1)), SeriesParam::Scaled(qb.clone())],
        vec![qb, zero()],
        SeriesArg::constant(q.clone()),
        q,
        n,
    )
}

/// Little q-Jacobi `p_n(x; a, b; q)` as a `2 phi 1` in `qx`.
fn lqj_2phi1(a: &Rational, b: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    series(one(), vec![SeriesParam::Const(a * b * q.powi(ni(n) + 1))], vec![q * a], SeriesArg::times_x(q.clone()), q, n)
}

/// Little q-Jacobi `p_n(x; a, b; q)` as a `3 phi 1` in `x / a`.
fn lqj_3phi1(a: &Rational, b: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(a, "a")?;
    let nn = ni(n);
    series(
        sign(n) * q.powi(nn * (nn + 1) / 2) * a.powi(nn) * qpoch(&(b * q), q, n) / qpoch(&(a * q), q, n),
        vec![SeriesParam::Const(a * b * q.powi(nn + 1)), SeriesParam::Reciprocal(one())],
        vec![q * b],
        SeriesArg::times_x(a.recip()?),
        q,
        n,
    )
}

/// q-Bessel `y_n(x; a; q)` as a `2 phi 1` in `qx`.
fn bessel_2phi1(a: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    series(one(), vec![SeriesParam::Const(-(a * q.powi(ni(n))))], vec![zero()], SeriesArg::times_x(q.clone()), q, n)
}

/// q-Bessel `y_n(x; a; q)` as a `3 phi 0` in `-x / a`.
fn bessel_3phi0(a: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(a, "a")?;
    let nn = ni(n);
    series(
        sign(n) * q.powi(nn * nn) * a.powi(nn),
        vec![SeriesParam::Const(-(a * q.powi(nn))), SeriesParam::Reciprocal(one())],
        vec![],
        SeriesArg::times_x(-a.recip()?),
        q,
        n,
    )
}

/// Continuous big q-Hermite `H_n(x/2; a | q)`.
fn cbqh_poly(a: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    need_nonzero(a, "a")?;
    series(
        a.powi(-ni(n)),
        vec![SeriesParam::Joukowski(a.clone())],
        vec![zero(), zero()],
        SeriesArg::constant(q.clone()),
        q,
        n,
    )
}

/// `2 phi 1 (q^-n, x; 0; q, q)`.
fn power_series(q: &Rational, n: usize) -> Result<DensePoly> {
    series(one(), vec![SeriesParam::Scaled(one())], vec![zero()], SeriesArg::constant(q.clone()), q, n)
}

/// Little q-Laguerre `p_n(x; a; q)`.
fn lql_poly(a: &Rational, q: &Rational, n: usize) -> Result<DensePoly> {
    series(one(), vec![SeriesParam::Const(zero())], vec![q * a], SeriesArg::times_x(q.clone()), q, n)
}

/// `(-1)^n q^{n(n-1)/2} 1 phi 0 (q^-n; -; q, qx)`.
fn newton_one_series(q: &Rational, n: usize) -> Result<DensePoly> {
    let nn = ni(n);
    series(sign(n) * q.powi(nn * (nn - 1) / 2), vec![], vec![], SeriesArg::times_x(q.clone()), q, n)
}

fn src_2a_3b(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let q = &p.q;
    let poly = cdqh_b_form(e, &(p.p("b") * q / e), &(p.p("c") * q / e), q, n)?;
    Ok(Side { poly: poly.scale(&e.powi(ni(n))), x_scale: e.recip()? })
}

fn tgt_2a_3b(p: &LimitParams, n: usize) -> Result<Side> {
    Ok(Side::plain(bql_scaled_2phi1(&p.p("b"), &p.p("c"), &p.q, n)?))
}

fn src_2a_3c(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let q = &p.q;
    let poly = cdqh_a_form(e, &(p.p("b") * q / e), &(p.p("c") * q / e), q, n)?;
    Ok(Side { poly: poly.scale(&e.powi(ni(n))), x_scale: e.recip()? })
}

fn tgt_2a_3c(p: &LimitParams, n: usize) -> Result<Side> {
    Ok(Side::plain(bql_scaled_3phi2(&p.p("b"), &p.p("c"), &p.q, n)?))
}

/// `a = 1/eps`, second parameter `a b`, read at `a x`, times `a^-n`.
fn src_3a_4c(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let a = e.recip()?;
    let poly = asc_poly(&a, &(&a * p.p("b")), &p.q, n)?;
    Ok(Side { poly: poly.scale(&e.powi(ni(n))), x_scale: a })
}

fn tgt_3a_4c(p: &LimitParams, n: usize) -> Result<Side> {
    Ok(Side::plain(asc1_poly(&p.p("b"), &p.q, n)?))
}

fn src_3a_4b(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let poly = asc_poly(e, &(p.p("b") / e), &p.q, n)?;
    Ok(Side { poly: poly.scale(&e.powi(ni(n))), x_scale: e.recip()? })
}

fn tgt_3a_4b(p: &LimitParams, n: usize) -> Result<Side> {
    Ok(Side::plain(newton_b_series(&p.p("b"), &p.q, n)?))
}

/// `(qa)^-n (qa; q)_n (-qad; q)_n / (q^{n+1} ab; q)_n`.
fn bqj_limit_prefactor(a: &Rational, b: &Rational, d: &Rational, q: &Rational, n: usize) -> Rational {
    let qa = q * a;
    qa.powi(-ni(n)) * qpoch(&qa, q, n) * qpoch(&(-(&qa * d)), q, n) / qpoch(&(a * b * q.powi(ni(n) + 1)), q, n)
}

/// `(-1)^n q^{n(n-1)/2} (qb; q)_n / (q^{n+1} ab; q)_n`.
fn lqj_limit_prefactor(a: &Rational, b: &Rational, q: &Rational, n: usize) -> Rational {
    let nn = ni(n);
    sign(n) * q.powi(nn * (nn - 1) / 2) * qpoch(&(q * b), q, n) / qpoch(&(a * b * q.powi(nn + 1)), q, n)
}

fn src_2b_3d(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let (a, b, q) = (p.p("a"), p.p("b"), &p.q);
    let pre = bqj_limit_prefactor(&a, &b, e, q, n);
    Ok(Side::plain(bqj_first_form(&a, &b, e, q, n)?.scale(&pre)))
}

fn tgt_2b_3d(p: &LimitParams, n: usize) -> Result<Side> {
    let (a, b, q) = (p.p("a"), p.p("b"), &p.q);
    // little q-Jacobi with its two parameters exchanged
    Ok(Side::plain(lqj_scaled_form(&b, &a, q, n)?.scale(&lqj_limit_prefactor(&a, &b, q, n))))
}

fn src_2b_3e(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let (a, b, q) = (p.p("a"), p.p("b"), &p.q);
    let pre = bqj_limit_prefactor(&a, &b, e, q, n);
    Ok(Side::plain(bqj_second_form(&a, &b, e, q, n)?.scale(&pre)))
}

fn tgt_2b_3e(p: &LimitParams, n: usize) -> Result<Side> {
    let (a, b, q) = (p.p("a"), p.p("b"), &p.q);
    Ok(Side::plain(lqj_2phi1(&b, &a, q, n)?.scale(&lqj_limit_prefactor(&a, &b, q, n))))
}

/// Little q-Jacobi parameters `(aq^-1 eps, -1/eps)`, i.e. `b = -1/eps`.
fn lqj_bessel_params(p: &LimitParams, e: &Rational) -> Result<(Rational, Rational)> {
    Ok((p.p("a") * e / &p.q, -e.recip()?))
}

fn src_3e_4g(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let (alpha, beta) = lqj_bessel_params(p, e)?;
    Ok(Side::plain(lqj_2phi1(&alpha, &beta, &p.q, n)?))
}

fn tgt_3e_4g(p: &LimitParams, n: usize) -> Result<Side> {
    Ok(Side::plain(bessel_2phi1(&p.p("a"), &p.q, n)?))
}

fn src_3d_4f(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let (alpha, beta) = lqj_bessel_params(p, e)?;
    Ok(Side::plain(lqj_3phi1(&alpha, &beta, &p.q, n)?))
}

fn tgt_3d_4f(p: &LimitParams, n: usize) -> Result<Side> {
    Ok(Side::plain(bessel_3phi0(&p.p("a"), &p.q, n)?))
}

fn src_4a_5a(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let poly = cbqh_poly(e, &p.q, n)?;
    Ok(Side { poly: poly.scale(&e.powi(ni(n))), x_scale: e.recip()? })
}

fn tgt_4a_5a(p: &LimitParams, n: usize) -> Result<Side> {
    Ok(Side::plain(power_series(&p.q, n)?))
}

fn src_4e_5b(p: &LimitParams, e: &Rational, n: usize) -> Result<Side> {
    let q = &p.q;
    let nn = ni(n);
    let pre = sign(n) * q.powi(nn * (nn - 1) / 2) * qpoch(&(e * q), q, n);
    Ok(Side::plain(lql_poly(e, q, n)?.scale(&pre)))
}

fn tgt_4e_5b(p: &LimitParams, n: usize) -> Result<Side> {
    Ok(Side::plain(newton_one_series(&p.q, n)?))
}

static CASES: &[LimitCase] = &[
    LimitCase {
        id: "2a→3b",
        source_node: "2a",
        target_node: "3b",
        description: "continuous dual q-Hahn to big q-Laguerre, series in x/c",
        mapping: "eps^n p_n(x/(2 eps); eps, bq/eps, cq/eps | q)",
        defaults: &[("b", (1, 3)), ("c", (-1, 2))],
        source: src_2a_3b,
        target: tgt_2a_3b,
    },
    LimitCase {
        id: "2a→3c",
        source_node: "2a",
        target_node: "3c",
        description: "continuous dual q-Hahn to big q-Laguerre, series with upper x",
        mapping: "eps^n p_n(x/(2 eps); eps, bq/eps, cq/eps | q)",
        defaults: &[("b", (1, 3)), ("c", (-1, 2))],
        source: src_2a_3c,
        target: tgt_2a_3c,
    },
    LimitCase {
        id: "3a→4c",
        source_node: "3a",
        target_node: "4c",
        description: "Al-Salam-Chihara to Al-Salam-Carlitz I",
        mapping: "a = 1/eps: a^-n Q_n(a x/2; a, ab | q)",
        defaults: &[("b", (-1, 2))],
        source: src_3a_4c,
        target: tgt_3a_4c,
    },
    LimitCase {
        id: "3a→4b",
        source_node: "3a",
        target_node: "4b",
        description: "Al-Salam-Chihara to x^n (b/x;q)_n",
        mapping: "eps^n Q_n(x/(2 eps); eps, b/eps | q)",
        defaults: &[("b", (1, 3))],
        source: src_3a_4b,
        target: tgt_3a_4b,
    },
    LimitCase {
        id: "2b→3d",
        source_node: "2b",
        target_node: "3d",
        description: "big q-Jacobi to little q-Jacobi, series with upper qax",
        mapping: "d = eps: (qa)^-n (qa, -qad; q)_n / (q^{n+1}ab; q)_n P_n(x; a, b, 1, d; q)",
        defaults: &[("a", (1, 2)), ("b", (1, 3))],
        source: src_2b_3d,
        target: tgt_2b_3d,
    },
    LimitCase {
        id: "2b→3e",
        source_node: "2b",
        target_node: "3e",
        description: "big q-Jacobi to little q-Jacobi, series with upper -qbx/d",
        mapping: "d = eps: (qa)^-n (qa, -qad; q)_n / (q^{n+1}ab; q)_n P_n(x; a, b, 1, d; q)",
        defaults: &[("a", (1, 2)), ("b", (1, 3))],
        source: src_2b_3e,
        target: tgt_2b_3e,
    },
    LimitCase {
        id: "3e→4g",
        source_node: "3e",
        target_node: "4g",
        description: "little q-Jacobi to q-Bessel, series in qx",
        mapping: "b = -1/eps: p_n(x; -a/(qb), b; q)",
        defaults: &[("a", (1, 3))],
        source: src_3e_4g,
        target: tgt_3e_4g,
    },
    LimitCase {
        id: "3d′→4f′",
        source_node: "3d′",
        target_node: "4f′",
        description: "little q-Jacobi to q-Bessel, series in x/a",
        mapping: "b = -1/eps: p_n(x; -a/(qb), b; q)",
        defaults: &[("a", (1, 3))],
        source: src_3d_4f,
        target: tgt_3d_4f,
    },
    LimitCase {
        id: "4a→5a",
        source_node: "4a",
        target_node: "5a",
        description: "continuous big q-Hermite to x^n",
        mapping: "eps^n H_n(x/(2 eps); eps | q)",
        defaults: &[],
        source: src_4a_5a,
        target: tgt_4a_5a,
    },
    LimitCase {
        id: "4e→5b",
        source_node: "4e",
        target_node: "5b",
        description: "little q-Laguerre to x^n (1/x;q)_n",
        mapping: "a = eps: (-1)^n q^{n(n-1)/2} (aq; q)_n p_n(x; a; q)",
        defaults: &[],
        source: src_4e_5b,
        target: tgt_4e_5b,
    },
];

pub fn cases() -> &'static [LimitCase] {
    CASES
}

/// Lookup by id; `->` and `'` are accepted for `→` and `′`.
pub fn case(id: &str) -> Result<&'static LimitCase> {
    let key = id.trim().replace("->", "→").replace('\'', "′");
    CASES.iter().find(|c| c.id == key).ok_or_else(|| Error::UnknownLimit(id.to_string()))
}

impl LimitCase {
    pub fn params(&self, q: &Rational, overrides: &BTreeMap<String, Rational>) -> Result<LimitParams> {
        let mut values: BTreeMap<String, Rational> =
            self.defaults.iter().map(|(k, (a, b))| (k.to_string(), rat(*a, *b))).collect();
        for (k, v) in overrides {
            if !values.contains_key(k) {
                return Err(Error::InadmissibleParams {
                    family: self.id.to_string(),
                    reason: format!("unknown parameter {k:?}"),
                });
            }
            values.insert(k.clone(), v.clone());
        }
        Ok(LimitParams { q: q.clone(), values })
    }

    pub fn default_params(&self) -> LimitParams {
        self.params(&rat(1, 2), &BTreeMap::new()).expect("defaults are admissible")
    }

    pub fn source(&self, p: &LimitParams, eps: &Rational, n: usize) -> Result<Side> {
        if eps.is_zero() {
            return Err(Error::InadmissibleParams {
                family: self.id.to_string(),
                reason: "eps must be nonzero".into(),
            });
        }
        (self.source)(p, eps, n)
    }

    pub fn target(&self, p: &LimitParams, n: usize) -> Result<Side> {
        (self.target)(p, n)
    }
}

/// `max_x |source(eps) - target|` over `xs`, exact.
pub fn gap(case: &LimitCase, p: &LimitParams, eps: &Rational, n: usize, xs: &[Rational]) -> Result<Rational> {
    let src = case.source(p, eps, n)?;
    let tgt = case.target(p, n)?;
    Ok(xs.iter().map(|x| (src.eval(x) - tgt.eval(x)).abs()).max().unwrap_or_else(Rational::zero))
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub t_max: u32,
    pub eps0: Rational,
    pub ratio_bound: Rational,
    pub threshold: Rational,
    pub xs: Vec<Rational>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 4,
            t_max: 12,
            eps0: default_eps0(),
            ratio_bound: default_ratio_bound(),
            threshold: default_threshold(),
            xs: default_sample_xs(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LimitReport {
    pub case: String,
    pub n: usize,
    /// Gaps at `t = 1..t_max`, as exact rationals.
    pub gap_trace: Vec<String>,
    /// `gap(t+1) / gap(t)`; a step between two zero gaps counts as 0.
    pub ratios: Vec<String>,
    pub pass: bool,
}

/// One report per degree `n <= n_max`.
pub fn run(case: &LimitCase, p: &LimitParams, opts: &VerifyOptions) -> Result<Vec<LimitReport>> {
    let mut out = Vec::new();
    for n in 0..=opts.n_max {
        let tgt = case.target(p, n)?;
        let target_values: Vec<Rational> = opts.xs.iter().map(|x| tgt.eval(x)).collect();
        let mut gaps = Vec::new();
        for t in 1..=opts.t_max {
            let eps = &opts.eps0 / Rational::from_int(1i64 << t);
            let src = case.source(p, &eps, n)?;
            let g = opts
                .xs
                .iter()
                .zip(&target_values)
                .map(|(x, tv)| (src.eval(x) - tv).abs())
                .max()
                .unwrap_or_else(Rational::zero);
            gaps.push(g);
        }
        let mut pass = true;
        let mut ratios = Vec::new();
        for w in gaps.windows(2) {
            let ratio = if w[1].is_zero() {
                Rational::zero()
            } else if w[0].is_zero() {
                pass = false;
                w[1].clone()
            } else {
                &w[1] / &w[0]
            };
            pass &= ratio <= opts.ratio_bound;
            ratios.push(ratio);
        }
        let last = gaps.last().cloned().unwrap_or_else(Rational::zero);
        pass &= last < opts.threshold;
        out.push(LimitReport {
            case: case.id.to_string(),
            n,
            gap_trace: gaps.iter().map(Rational::to_string).collect(),
            ratios: ratios.iter().map(Rational::to_string).collect(),
            pass,
        });
    }
    Ok(out)
}

/// Like [`run`], failing with [`Error::ConvergenceFailure`] on the first
/// degree that does not converge.
pub fn verify(case: &LimitCase, p: &LimitParams, opts: &VerifyOptions) -> Result<Vec<LimitReport>> {
    let reports = run(case, p, opts)?;
    if let Some(bad) = reports.iter().find(|r| !r.pass) {
        return Err(Error::ConvergenceFailure {
            case: case.id.to_string(),
            n: bad.n,
            detail: format!("gaps [{}], ratios [{}]", bad.gap_trace.join(", "), bad.ratios.join(", ")),
        });
    }
    Ok(reports)
}

/// Every case at its defaults.
pub fn run_all(exec: Exec, opts: &VerifyOptions) -> Vec<(String, Result<Vec<LimitReport>>)> {
    let cases: Vec<&'static LimitCase> = CASES.iter().collect();
    exec.map(cases, |c| (c.id.to_string(), run(c, &c.default_params(), opts)))
}

/// Two polynomial expressions that agree exactly.
pub struct ExactIdentity {
    pub id: &'static str,
    pub description: &'static str,
    lhs: fn(&Rational, usize) -> Result<DensePoly>,
    rhs: fn(&Rational, usize) -> Result<DensePoly>,
}

impl std::fmt::Debug for ExactIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExactIdentity").field("id", &self.id).finish()
    }
}

fn third() -> Rational {
    rat(1, 3)
}

static IDENTITIES: &[ExactIdentity] = &[
    ExactIdentity {
        id: "3a→4b limit value",
        description: "(b;q)_n 2phi1(q^-n, x; b; q, q) = x^n (b/x;q)_n at b = 1/3",
        lhs: |q, n| newton_b_series(&third(), q, n),
        rhs: |q, n| Ok(newton_roots(&third(), q, n)),
    },
    ExactIdentity {
        id: "4a→5a limit value",
        description: "2phi1(q^-n, x; 0; q, q) = x^n",
        lhs: |q, n| power_series(q, n),
        rhs: |_, n| {
            let mut c = vec![Rational::zero(); n + 1];
            c[n] = Rational::one();
            Ok(DensePoly::new(c))
        },
    },
    ExactIdentity {
        id: "4e→5b limit value",
        description: "(-1)^n q^{n(n-1)/2} 1phi0(q^-n; -; q, qx) = x^n (1/x;q)_n",
        lhs: newton_one_series,
        rhs: |q, n| Ok(newton_roots(&Rational::one(), q, n)),
    },
    ExactIdentity {
        id: "continuous dual q-Hahn forms",
        description: "series around a vs around b at a = 3, b = 1/5, c = 1/7",
        lhs: |q, n| cdqh_b_form(&rat(3, 1), &rat(1, 5), &rat(1, 7), q, n),
        rhs: |q, n| cdqh_a_form(&rat(3, 1), &rat(1, 5), &rat(1, 7), q, n),
    },
    ExactIdentity {
        id: "big q-Laguerre forms",
        description: "2phi1 in x/c vs 3phi2 with upper 0, x at b = 1/3, c = -1/2",
        lhs: |q, n| bql_scaled_2phi1(&third(), &rat(-1, 2), q, n),
        rhs: |q, n| bql_scaled_3phi2(&third(), &rat(-1, 2), q, n),
    },
    ExactIdentity {
        id: "little q-Jacobi 2phi1 vs 3phi1",
        description: "2phi1 in qx vs 3phi1 in x/a at a = 1/3, b = 1/5",
        lhs: |q, n| lqj_2phi1(&third(), &rat(1, 5), q, n),
        rhs: |q, n| lqj_3phi1(&third(), &rat(1, 5), q, n),
    },
    ExactIdentity {
        id: "little q-Jacobi 2phi1 vs 3phi2",
        description: "2phi1 in qx vs 3phi2 with upper qbx at a = 1/3, b = 1/5",
        lhs: |q, n| lqj_2phi1(&third(), &rat(1, 5), q, n),
        rhs: |q, n| lqj_scaled_form(&third(), &rat(1, 5), q, n),
    },
    ExactIdentity {
        id: "q-Bessel forms",
        description: "2phi1 in qx vs 3phi0 in -x/a at a = 1/3",
        lhs: |q, n| bessel_2phi1(&third(), q, n),
        rhs: |q, n| bessel_3phi0(&third(), q, n),
    },
    ExactIdentity {
        id: "big q-Jacobi forms",
        description: "upper qax vs upper -qbx/d at a = 1/2, b = 1/3, d = 2/5",
        lhs: |q, n| bqj_first_form(&rat(1, 2), &third(), &rat(2, 5), q, n),
        rhs: |q, n| bqj_second_form(&rat(1, 2), &third(), &rat(2, 5), q, n),
    },
];

pub fn identities() -> &'static [ExactIdentity] {
    IDENTITIES
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub n_max: usize,
    /// Largest `|lhs - rhs|` over the sample points; zero when the identity holds.
    pub max_gap: String,
    pub polynomials_equal: bool,
    pub pass: bool,
}

pub fn check_identity(id: &ExactIdentity, q: &Rational, n_max: usize, xs: &[Rational]) -> Result<IdentityReport> {
    let mut max_gap = Rational::zero();
    let mut equal = true;
    for n in 0..=n_max {
        let (l, r) = ((id.lhs)(q, n)?, (id.rhs)(q, n)?);
        equal &= l == r;
        for x in xs {
            max_gap = max_gap.max((l.eval(x) - r.eval(x)).abs());
        }
    }
    Ok(IdentityReport {
        id: id.id.to_string(),
        n_max,
        pass: equal && max_gap.is_zero(),
        max_gap: max_gap.to_string(),
        polynomials_equal: equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_gap_vanishes() {
        let c = case("2a->3b").unwrap();
        let p = c.default_params();
        for t in 1..5 {
            let eps = rat(1, 1 << t);
            assert!(gap(c, &p, &eps, 0, &default_sample_xs()).unwrap().is_zero());
        }
    }

    #[test]
    fn hermite_gap_decreases() {
        let c = case("4a→5a").unwrap();
        let p = c.default_params();
        for n in 1..=4 {
            let gaps: Vec<Rational> =
                (1..=12).map(|t| gap(c, &p, &rat(1, 1 << t), n, &default_sample_xs()).unwrap()).collect();
            assert!(gaps.windows(2).all(|w| w[1] < w[0]), "n={n}");
        }
    }

    #[test]
    fn identities_hold() {
        for id in identities() {
            let report = check_identity(id, &rat(1, 2), 6, &default_sample_xs()).unwrap();
            assert!(report.pass, "{}: {}", id.id, report.max_gap);
        }
    }

    #[test]
    fn unknown_case() {
        assert_eq!(case("9z→1a").unwrap_err(), Error::UnknownLimit("9z→1a".into()));
    }

    #[test]
    fn every_case_converges() {
        for (id, reports) in run_all(Exec::Sequential, &VerifyOptions::default()) {
            for r in reports.unwrap() {
                assert!(r.pass, "{id} n={}: {:?} {:?}", r.n, r.gap_trace, r.ratios);
            }
        }
    }
}
