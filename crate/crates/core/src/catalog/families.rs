//! The family table: sequences as printed products in `Q = q^k` and one
//! terminating-series representation per family.

use super::laurent::Laurent;
use super::{Ctx, FamilySpec, ParamSlot, Rep, Seqs};
use crate::error::Result;
use crate::exact::{qpoch, DensePoly, Rational, SeriesArg, SeriesParam};

fn m(c: Rational, e: i32) -> Laurent {
    Laurent::mono(c, e)
}

fn om(c: Rational, e: i32) -> Laurent {
    Laurent::one_minus(c, e)
}

fn one() -> Rational {
    Rational::one()
}

fn zero() -> Rational {
    Rational::zero()
}

/// `q^-k - 1`.
fn h_standard() -> Laurent {
    m(one(), -1).add(&m(-one(), 0))
}

/// `a Q + a^-1 Q^-1`.
fn x_joukowski(a: &Rational) -> Result<Laurent> {
    Ok(m(a.clone(), 1).add(&m(a.recip()?, -1)))
}

/// `(-1)^n q^{e n(n-1)/2}`.
fn sign_q_tri(q: &Rational, n: usize, e: i64) -> Rational {
    let n = n as i64;
    let s = if n % 2 == 1 { -one() } else { one() };
    s * q.powi(e * n * (n - 1) / 2)
}

fn n_i(n: usize) -> i64 {
    n as i64
}

const fn slot(name: &'static str, default: (i64, i64), constraint: &'static str) -> ParamSlot {
    ParamSlot { name, default, constraint }
}

// 1a

fn aw_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, a, b, cc, d) = (&c.q, c.nonzero("a")?, c.p("b"), c.p("c"), c.p("d"));
    let abcd = &a * &b * &cc * &d;
    Ok(Seqs {
        x: vec![x_joukowski(&a)?],
        h: vec![m(one(), -1), om(one(), 1), om(&abcd / q, 1)],
        g: vec![m(q / &a, -2), om(&a * &b / q, 1), om(&a * &cc / q, 1), om(&a * &d / q, 1), om(one(), 1)],
    })
}

fn aw_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a, b, cc, d) = (&c.q, c.nonzero("a")?, c.p("b"), c.p("c"), c.p("d"));
    let (ab, ac, ad) = (&a * &b, &a * &cc, &a * &d);
    let top = &ab * &cc * &d * q.powi(n_i(n) - 1);
    Ok(Rep {
        pre: a.powi(-n_i(n)) * qpoch(&ab, q, n) * qpoch(&ac, q, n) * qpoch(&ad, q, n),
        rest: vec![SeriesParam::Const(top.clone()), SeriesParam::Joukowski(a)],
        lower: vec![ab, ac, ad],
        z: SeriesArg::constant(q.clone()),
        kn: qpoch(&top, q, n),
    })
}

/// `b = q^-N / a`, so `ab = q^-N`.
fn racah_ctx(c: &Ctx) -> Result<Ctx> {
    let big_n = c.integer("N")?;
    let b = c.q.powi(-big_n) / c.nonzero("a")?;
    Ok(c.with("b", b))
}

fn racah_seqs(c: &Ctx) -> Result<Seqs> {
    aw_seqs(&racah_ctx(c)?)
}

fn racah_rep(c: &Ctx, n: usize) -> Result<Rep> {
    aw_rep(&racah_ctx(c)?, n)
}

// 2a

fn cdqh_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, a, b, cc) = (&c.q, c.nonzero("a")?, c.p("b"), c.p("c"));
    Ok(Seqs {
        x: vec![x_joukowski(&a)?],
        h: vec![h_standard()],
        g: vec![m(q / &a, -2), om(&a * &b / q, 1), om(&a * &cc / q, 1), om(one(), 1)],
    })
}

fn cdqh_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a, b, cc) = (&c.q, c.nonzero("a")?, c.p("b"), c.p("c"));
    let (ab, ac) = (&a * &b, &a * &cc);
    Ok(Rep {
        pre: a.powi(-n_i(n)) * qpoch(&ab, q, n) * qpoch(&ac, q, n),
        rest: vec![SeriesParam::Joukowski(a)],
        lower: vec![ab, ac],
        z: SeriesArg::constant(q.clone()),
        kn: one(),
    })
}

/// `c = q^-N / a`, so `ac = q^-N`.
fn dual_hahn_ctx(c: &Ctx) -> Result<Ctx> {
    let big_n = c.integer("N")?;
    let cc = c.q.powi(-big_n) / c.nonzero("a")?;
    Ok(c.with("c", cc))
}

fn dual_hahn_seqs(c: &Ctx) -> Result<Seqs> {
    cdqh_seqs(&dual_hahn_ctx(c)?)
}

fn dual_hahn_rep(c: &Ctx, n: usize) -> Result<Rep> {
    cdqh_rep(&dual_hahn_ctx(c)?, n)
}

// 2b

fn bqj_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, a, b, cc) = (&c.q, c.p("a"), c.p("b"), c.p("c"));
    Ok(Seqs {
        x: vec![m(one(), -1)],
        h: vec![om(one(), -1), m(-one(), 0).add(&m(q * &a * &b, 1))],
        g: vec![m(q.clone(), -2), om(a, 1), om(cc, 1), om(one(), 1)],
    })
}

fn bqj_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a, b, cc) = (&c.q, c.p("a"), c.p("b"), c.p("c"));
    let top = &a * &b * q.powi(n_i(n) + 1);
    let (aq, cq) = (&a * q, &cc * q);
    Ok(Rep {
        pre: one(),
        kn: qpoch(&top, q, n) / (qpoch(&aq, q, n) * qpoch(&cq, q, n)),
        rest: vec![SeriesParam::Const(top), SeriesParam::Scaled(one())],
        lower: vec![aq, cq],
        z: SeriesArg::constant(q.clone()),
    })
}

/// `c = q^{-N-1}`, so the lower parameter `cq` is `q^-N`.
fn qhahn_ctx(c: &Ctx) -> Result<Ctx> {
    let big_n = c.integer("N")?;
    Ok(c.with("c", c.q.powi(-big_n - 1)))
}

fn qhahn_seqs(c: &Ctx) -> Result<Seqs> {
    bqj_seqs(&qhahn_ctx(c)?)
}

fn qhahn_rep(c: &Ctx, n: usize) -> Result<Rep> {
    bqj_rep(&qhahn_ctx(c)?, n)
}

// 3a

fn asc_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, a, b) = (&c.q, c.nonzero("a")?, c.p("b"));
    Ok(Seqs {
        x: vec![x_joukowski(&a)?],
        h: vec![h_standard()],
        g: vec![m(q / &a, -2), om(&a * &b / q, 1), om(one(), 1)],
    })
}

fn asc_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a, b) = (&c.q, c.nonzero("a")?, c.p("b"));
    let ab = &a * &b;
    Ok(Rep {
        pre: a.powi(-n_i(n)) * qpoch(&ab, q, n),
        rest: vec![SeriesParam::Joukowski(a)],
        lower: vec![ab, zero()],
        z: SeriesArg::constant(q.clone()),
        kn: one(),
    })
}

/// `b = q^-N / a`, so `ab = q^-N`.
fn dual_kraw_ctx(c: &Ctx) -> Result<Ctx> {
    let big_n = c.integer("N")?;
    let b = c.q.powi(-big_n) / c.nonzero("a")?;
    Ok(c.with("b", b))
}

fn dual_kraw_seqs(c: &Ctx) -> Result<Seqs> {
    asc_seqs(&dual_kraw_ctx(c)?)
}

fn dual_kraw_rep(c: &Ctx, n: usize) -> Result<Rep> {
    asc_rep(&dual_kraw_ctx(c)?, n)
}

// 3b, 3c

fn bql_kn(c: &Ctx, n: usize) -> Rational {
    let (q, a, b) = (&c.q, c.p("a"), c.p("b"));
    (qpoch(&(&a * q), q, n) * qpoch(&(&b * q), q, n)).recip().unwrap_or_else(|_| zero())
}

fn bql_nodes_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, a, b) = (&c.q, c.p("a"), c.nonzero("b")?);
    Ok(Seqs { x: vec![m(&a * q, 1)], h: vec![h_standard()], g: vec![m(-(q * &b), -1), om(a, 1), om(one(), 1)] })
}

/// The `2 phi 1` form with argument `x / b`.
fn bql_nodes_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a, b) = (&c.q, c.p("a"), c.nonzero("b")?);
    let aq = &a * q;
    let nn = n_i(n);
    Ok(Rep {
        pre: (-&b).powi(nn) * q.powi(nn * (nn + 1) / 2) / qpoch(&(&b * q), q, n),
        rest: vec![SeriesParam::Reciprocal(aq.clone())],
        lower: vec![aq],
        z: SeriesArg::times_x(b.recip()?),
        kn: bql_kn(c, n),
    })
}

fn bql_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, a, b) = (&c.q, c.p("a"), c.p("b"));
    Ok(Seqs {
        x: vec![m(one(), -1)],
        h: vec![h_standard()],
        g: vec![m(q.clone(), -2), om(a, 1), om(b, 1), om(one(), 1)],
    })
}

fn bql_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a, b) = (&c.q, c.p("a"), c.p("b"));
    Ok(Rep {
        pre: one(),
        rest: vec![SeriesParam::Const(zero()), SeriesParam::Scaled(one())],
        lower: vec![&a * q, &b * q],
        z: SeriesArg::constant(q.clone()),
        kn: bql_kn(c, n),
    })
}

// 3d, 3e

fn lqj_h(c: &Ctx) -> Laurent {
    let (q, a, b) = (&c.q, c.p("a"), c.p("b"));
    om(one(), -1).mul(&m(-one(), 0).add(&m(q * &a * &b, 1)))
}

fn lqj_kn(c: &Ctx, n: usize) -> Rational {
    let (q, a, b) = (&c.q, c.p("a"), c.p("b"));
    let top = &a * &b * q.powi(n_i(n) + 1);
    sign_q_tri(q, n, -1) * qpoch(&top, q, n) / qpoch(&(&a * q), q, n)
}

fn lqj_nodes_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, b) = (&c.q, c.nonzero("b")?);
    let inv_b = b.recip()?;
    Ok(Seqs { x: vec![m(&inv_b / q, -1)], h: vec![lqj_h(c)], g: vec![om(one(), -1), om(inv_b, -1)] })
}

fn lqj_nodes_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a, b) = (&c.q, c.p("a"), c.nonzero("b")?);
    let qb = q * &b;
    let nn = n_i(n);
    Ok(Rep {
        pre: (-&qb).powi(-nn) * q.powi(-nn * (nn - 1) / 2) * qpoch(&qb, q, n) / qpoch(&(&a * q), q, n),
        rest: vec![SeriesParam::Const(&a * &b * q.powi(nn + 1)), SeriesParam::Scaled(qb.clone())],
        lower: vec![qb, zero()],
        z: SeriesArg::constant(q.clone()),
        kn: lqj_kn(c, n),
    })
}

fn lqj_seqs(c: &Ctx) -> Result<Seqs> {
    let a = c.p("a");
    Ok(Seqs { x: vec![Laurent::zero()], h: vec![lqj_h(c)], g: vec![om(one(), -1), om(a, 1)] })
}

fn lqj_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a, b) = (&c.q, c.p("a"), c.p("b"));
    Ok(Rep {
        pre: one(),
        rest: vec![SeriesParam::Const(&a * &b * q.powi(n_i(n) + 1))],
        lower: vec![&a * q],
        z: SeriesArg::times_x(q.clone()),
        kn: lqj_kn(c, n),
    })
}

// 4a

fn cbqh_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, a) = (&c.q, c.nonzero("a")?);
    Ok(Seqs { x: vec![x_joukowski(&a)?], h: vec![h_standard()], g: vec![m(q / &a, -2), om(one(), 1)] })
}

fn cbqh_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a) = (&c.q, c.nonzero("a")?);
    Ok(Rep {
        pre: a.powi(-n_i(n)),
        rest: vec![SeriesParam::Joukowski(a)],
        lower: vec![zero(), zero()],
        z: SeriesArg::constant(q.clone()),
        kn: one(),
    })
}

// 4b

fn newton_b_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, b) = (&c.q, c.p("b"));
    Ok(Seqs { x: vec![m(one(), -1)], h: vec![h_standard()], g: vec![om(one(), -1), m(b, 0).add(&m(-q.clone(), -1))] })
}

fn newton_b_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, b) = (&c.q, c.p("b"));
    Ok(Rep {
        pre: qpoch(&b, q, n),
        rest: vec![SeriesParam::Scaled(one())],
        lower: vec![b],
        z: SeriesArg::constant(q.clone()),
        kn: one(),
    })
}

/// `x^n (b/x; q)_n = prod_{j<n} (x - b q^j)`.
fn newton_b_closed(c: &Ctx, n: usize) -> DensePoly {
    let roots: Vec<Rational> = (0..n_i(n)).map(|j| c.p("b") * c.q.powi(j)).collect();
    DensePoly::from_roots(&roots)
}

// 4c

fn asc1_seqs(c: &Ctx) -> Result<Seqs> {
    let a = c.nonzero("a")?;
    Ok(Seqs { x: vec![m(one(), 1)], h: vec![h_standard()], g: vec![m(a, 0), om(one(), -1)] })
}

fn asc1_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a) = (&c.q, c.nonzero("a")?);
    let nn = n_i(n);
    Ok(Rep {
        pre: (-&a).powi(nn) * q.powi(nn * (nn - 1) / 2),
        rest: vec![SeriesParam::Reciprocal(one())],
        lower: vec![zero()],
        z: SeriesArg::times_x(q / &a),
        kn: one(),
    })
}

// 4d, 4e

fn lql_kn(c: &Ctx, n: usize) -> Rational {
    let (q, a) = (&c.q, c.p("a"));
    sign_q_tri(q, n, -1) / qpoch(&(&a * q), q, n)
}

fn lql_nodes_seqs(c: &Ctx) -> Result<Seqs> {
    let a = c.nonzero("a")?;
    Ok(Seqs { x: vec![m(one(), 1)], h: vec![om(one(), -1)], g: vec![m(a, 0), m(one(), 1).add(&m(-one(), 0))] })
}

/// The `2 phi 0` form with argument `x / a`.
fn lql_nodes_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a) = (&c.q, c.nonzero("a")?);
    let start = q.powi(-n_i(n)) / &a;
    Ok(Rep {
        pre: qpoch(&start, q, n).recip()?,
        rest: vec![SeriesParam::Reciprocal(one())],
        lower: vec![],
        z: SeriesArg::times_x(a.recip()?),
        kn: lql_kn(c, n),
    })
}

fn lql_seqs(c: &Ctx) -> Result<Seqs> {
    let a = c.p("a");
    Ok(Seqs { x: vec![Laurent::zero()], h: vec![om(one(), -1)], g: vec![m(one(), -1), om(a, 1), om(one(), 1)] })
}

fn lql_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a) = (&c.q, c.p("a"));
    Ok(Rep {
        pre: one(),
        rest: vec![SeriesParam::Const(zero())],
        lower: vec![&a * q],
        z: SeriesArg::times_x(q.clone()),
        kn: lql_kn(c, n),
    })
}

// 4f', 4g

fn bessel_h(c: &Ctx) -> Laurent {
    om(one(), -1).mul(&om(-c.p("a"), 1))
}

fn bessel_kn(c: &Ctx, n: usize) -> Rational {
    let (q, a) = (&c.q, c.p("a"));
    sign_q_tri(q, n, -1) * qpoch(&(-(&a * q.powi(n_i(n)))), q, n)
}

fn bessel_nodes_seqs(c: &Ctx) -> Result<Seqs> {
    let (q, a) = (&c.q, c.nonzero("a")?);
    Ok(Seqs { x: vec![m(one(), 1)], h: vec![bessel_h(c)], g: vec![m(&a / q, 1), m(one(), 1).add(&m(-one(), 0))] })
}

/// The `3 phi 0` form with argument `-x / a`.
fn bessel_nodes_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a) = (&c.q, c.nonzero("a")?);
    let nn = n_i(n);
    let sign = if n % 2 == 1 { -one() } else { one() };
    Ok(Rep {
        pre: sign * q.powi(nn * nn) * a.powi(nn),
        rest: vec![SeriesParam::Const(-(&a * q.powi(nn))), SeriesParam::Reciprocal(one())],
        lower: vec![],
        z: SeriesArg::times_x(-a.recip()?),
        kn: bessel_kn(c, n),
    })
}

fn bessel_seqs(c: &Ctx) -> Result<Seqs> {
    Ok(Seqs { x: vec![Laurent::zero()], h: vec![bessel_h(c)], g: vec![h_standard()] })
}

fn bessel_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let (q, a) = (&c.q, c.p("a"));
    Ok(Rep {
        pre: one(),
        rest: vec![SeriesParam::Const(-(&a * q.powi(n_i(n))))],
        lower: vec![zero()],
        z: SeriesArg::times_x(q.clone()),
        kn: bessel_kn(c, n),
    })
}

// 5a, 5b, 5c'

fn power_seqs(c: &Ctx) -> Result<Seqs> {
    Ok(Seqs { x: vec![m(one(), -1)], h: vec![h_standard()], g: vec![m(c.q.clone(), -2), om(one(), 1)] })
}

fn power_rep(c: &Ctx, _n: usize) -> Result<Rep> {
    Ok(Rep {
        pre: one(),
        rest: vec![SeriesParam::Scaled(one())],
        lower: vec![zero()],
        z: SeriesArg::constant(c.q.clone()),
        kn: one(),
    })
}

fn power_closed(_c: &Ctx, n: usize) -> DensePoly {
    let mut coeffs = vec![zero(); n + 1];
    coeffs[n] = one();
    DensePoly::new(coeffs)
}

fn newton_one_seqs(_c: &Ctx) -> Result<Seqs> {
    Ok(Seqs { x: vec![Laurent::zero()], h: vec![h_standard()], g: vec![om(one(), -1)] })
}

fn newton_one_rep(c: &Ctx, n: usize) -> Result<Rep> {
    Ok(Rep { pre: one(), rest: vec![], lower: vec![], z: SeriesArg::times_x(c.q.clone()), kn: sign_q_tri(&c.q, n, -1) })
}

/// `x^n (1/x; q)_n = prod_{j<n} (x - q^j)`.
fn newton_one_closed(c: &Ctx, n: usize) -> DensePoly {
    let roots: Vec<Rational> = (0..n_i(n)).map(|j| c.q.powi(j)).collect();
    DensePoly::from_roots(&roots)
}

fn sw_seqs(_c: &Ctx) -> Result<Seqs> {
    Ok(Seqs { x: vec![Laurent::zero()], h: vec![m(one(), 1).add(&m(-one(), 0))], g: vec![h_standard()] })
}

fn sw_rep(c: &Ctx, n: usize) -> Result<Rep> {
    let q = &c.q;
    let nn = n_i(n);
    let qq = qpoch(q, q, n);
    Ok(Rep {
        pre: qq.recip()?,
        rest: vec![],
        lower: vec![zero()],
        z: SeriesArg::times_x(-q.powi(nn + 1)),
        kn: sign_q_tri(q, n, 0) * q.powi(nn * nn) / qq,
    })
}

const A_NONZERO: &str = "a != 0";

pub(super) static FAMILIES: &[FamilySpec] = &[
    FamilySpec {
        id: "1a",
        name: "Askey-Wilson",
        kls_section: Some(1),
        node_label: "1a",
        slots: &[slot("a", (3, 1), A_NONZERO), slot("b", (1, 5), ""), slot("c", (1, 7), ""), slot("d", (1, 11), "")],
        basis: "v_k(x) = prod_{j<k} (x - x_j), x = z + 1/z",
        ranges: "ab, ac, ad, bc, bd, cd < 1 for real parameters",
        finite: None,
        seqs: aw_seqs,
        rep: aw_rep,
        closed: None,
    },
    FamilySpec {
        id: "q-racah",
        name: "q-Racah",
        kls_section: Some(2),
        node_label: "1a",
        slots: &[
            slot("a", (3, 1), A_NONZERO),
            slot("c", (1, 7), ""),
            slot("d", (1, 11), ""),
            slot("N", (4, 1), "nonnegative integer; b = q^-N / a"),
        ],
        basis: "Askey-Wilson data with ab = q^-N",
        ranges: "degrees n <= N",
        finite: Some("N"),
        seqs: racah_seqs,
        rep: racah_rep,
        closed: None,
    },
    FamilySpec {
        id: "2a",
        name: "continuous dual q-Hahn",
        kls_section: Some(3),
        node_label: "2a",
        slots: &[slot("a", (3, 1), A_NONZERO), slot("b", (1, 5), ""), slot("c", (1, 7), "")],
        basis: "v_k(x) = prod_{j<k} (x - x_j), x = z + 1/z",
        ranges: "ab, ac, bc < 1",
        finite: None,
        seqs: cdqh_seqs,
        rep: cdqh_rep,
        closed: None,
    },
    FamilySpec {
        id: "dual-q-hahn",
        name: "dual q-Hahn",
        kls_section: Some(7),
        node_label: "2a",
        slots: &[
            slot("a", (3, 1), A_NONZERO),
            slot("b", (1, 5), ""),
            slot("N", (4, 1), "nonnegative integer; c = q^-N / a"),
        ],
        basis: "continuous dual q-Hahn data with ac = q^-N",
        ranges: "degrees n <= N",
        finite: Some("N"),
        seqs: dual_hahn_seqs,
        rep: dual_hahn_rep,
        closed: None,
    },
    FamilySpec {
        id: "2b",
        name: "big q-Jacobi",
        kls_section: Some(5),
        node_label: "2b",
        slots: &[slot("a", (1, 3), ""), slot("b", (1, 5), ""), slot("c", (-1, 2), "")],
        basis: "v_k(x) = prod_{j<k} (x - q^-j)",
        ranges: "0 < aq < 1, 0 <= bq < 1, c < 0",
        finite: None,
        seqs: bqj_seqs,
        rep: bqj_rep,
        closed: None,
    },
    FamilySpec {
        id: "q-hahn",
        name: "q-Hahn",
        kls_section: Some(6),
        node_label: "2b",
        slots: &[slot("a", (1, 3), ""), slot("b", (1, 5), ""), slot("N", (4, 1), "nonnegative integer; c = q^{-N-1}")],
        basis: "big q-Jacobi data with cq = q^-N",
        ranges: "degrees n <= N",
        finite: Some("N"),
        seqs: qhahn_seqs,
        rep: qhahn_rep,
        closed: None,
    },
    FamilySpec {
        id: "3a",
        name: "Al-Salam-Chihara",
        kls_section: Some(8),
        node_label: "3a",
        slots: &[slot("a", (3, 1), A_NONZERO), slot("b", (1, 5), "")],
        basis: "v_k(x) = prod_{j<k} (x - x_j), x = z + 1/z",
        ranges: "ab < 1",
        finite: None,
        seqs: asc_seqs,
        rep: asc_rep,
        closed: None,
    },
    FamilySpec {
        id: "dual-q-krawtchouk",
        name: "dual q-Krawtchouk",
        kls_section: Some(17),
        node_label: "3a",
        slots: &[slot("a", (3, 1), A_NONZERO), slot("N", (4, 1), "nonnegative integer; b = q^-N / a")],
        basis: "Al-Salam-Chihara data with ab = q^-N",
        ranges: "degrees n <= N",
        finite: Some("N"),
        seqs: dual_kraw_seqs,
        rep: dual_kraw_rep,
        closed: None,
    },
    FamilySpec {
        id: "3b",
        name: "big q-Laguerre",
        kls_section: Some(11),
        node_label: "3b",
        slots: &[slot("a", (1, 3), ""), slot("b", (-1, 2), "b != 0")],
        basis: "v_k(x) = x^k (qa/x; q)_k",
        ranges: "0 < aq < 1, b < 0",
        finite: None,
        seqs: bql_nodes_seqs,
        rep: bql_nodes_rep,
        closed: None,
    },
    FamilySpec {
        id: "3c",
        name: "big q-Laguerre",
        kls_section: Some(11),
        node_label: "3c",
        slots: &[slot("a", (1, 3), ""), slot("b", (-1, 2), "")],
        basis: "v_k(x) = (-1)^k q^{-k(k-1)/2} (x; q)_k",
        ranges: "0 < aq < 1, b < 0",
        finite: None,
        seqs: bql_seqs,
        rep: bql_rep,
        closed: None,
    },
    FamilySpec {
        id: "3d",
        name: "little q-Jacobi",
        kls_section: Some(12),
        node_label: "3d",
        slots: &[slot("a", (1, 3), ""), slot("b", (1, 5), "b != 0")],
        basis: "v_k(x) = (-b)^-k q^{-k(k+1)/2} (qbx; q)_k",
        ranges: "0 < aq < 1, bq < 1",
        finite: None,
        seqs: lqj_nodes_seqs,
        rep: lqj_nodes_rep,
        closed: None,
    },
    FamilySpec {
        id: "3e",
        name: "little q-Jacobi",
        kls_section: Some(12),
        node_label: "3e",
        slots: &[slot("a", (1, 3), ""), slot("b", (1, 5), "")],
        basis: "v_k(x) = x^k",
        ranges: "0 < aq < 1, bq < 1",
        finite: None,
        seqs: lqj_seqs,
        rep: lqj_rep,
        closed: None,
    },
    FamilySpec {
        id: "4a",
        name: "continuous big q-Hermite",
        kls_section: Some(18),
        node_label: "4a",
        slots: &[slot("a", (3, 1), A_NONZERO)],
        basis: "v_k(x) = prod_{j<k} (x - x_j), x = z + 1/z",
        ranges: "a real",
        finite: None,
        seqs: cbqh_seqs,
        rep: cbqh_rep,
        closed: None,
    },
    FamilySpec {
        id: "4b",
        name: "x^n (b/x;q)_n",
        kls_section: None,
        node_label: "4b",
        slots: &[slot("b", (1, 3), "")],
        basis: "v_k(x) = (-1)^k q^{k(k-1)/2} (x; q)_k",
        ranges: "",
        finite: None,
        seqs: newton_b_seqs,
        rep: newton_b_rep,
        closed: Some(newton_b_closed),
    },
    FamilySpec {
        id: "4c",
        name: "Al-Salam-Carlitz I",
        kls_section: Some(24),
        node_label: "4c",
        slots: &[slot("a", (-1, 1), "a != 0")],
        basis: "v_k(x) = prod_{j<k} (x - q^j)",
        ranges: "a < 0",
        finite: None,
        seqs: asc1_seqs,
        rep: asc1_rep,
        closed: None,
    },
    FamilySpec {
        id: "4d",
        name: "little q-Laguerre",
        kls_section: Some(20),
        node_label: "4d",
        slots: &[slot("a", (1, 3), "a != 0")],
        basis: "v_k(x) = x^k (1/x; q)_k",
        ranges: "0 < aq < 1",
        finite: None,
        seqs: lql_nodes_seqs,
        rep: lql_nodes_rep,
        closed: None,
    },
    FamilySpec {
        id: "4e",
        name: "little q-Laguerre",
        kls_section: Some(20),
        node_label: "4e",
        slots: &[slot("a", (1, 3), "")],
        basis: "v_k(x) = x^k",
        ranges: "0 < aq < 1",
        finite: None,
        seqs: lql_seqs,
        rep: lql_rep,
        closed: None,
    },
    FamilySpec {
        id: "4f′",
        name: "q-Bessel",
        kls_section: Some(22),
        node_label: "4f′",
        slots: &[slot("a", (1, 3), "a != 0")],
        basis: "v_k(x) = x^k (1/x; q)_k",
        ranges: "a > 0",
        finite: None,
        seqs: bessel_nodes_seqs,
        rep: bessel_nodes_rep,
        closed: None,
    },
    FamilySpec {
        id: "4g",
        name: "q-Bessel",
        kls_section: Some(22),
        node_label: "4g",
        slots: &[slot("a", (1, 3), "")],
        basis: "v_k(x) = x^k",
        ranges: "a > 0",
        finite: None,
        seqs: bessel_seqs,
        rep: bessel_rep,
        closed: None,
    },
    FamilySpec {
        id: "5a",
        name: "x^n",
        kls_section: None,
        node_label: "5a",
        slots: &[],
        basis: "v_k(x) = (-1)^k q^{k(k-1)/2} (x; q)_k",
        ranges: "",
        finite: None,
        seqs: power_seqs,
        rep: power_rep,
        closed: Some(power_closed),
    },
    FamilySpec {
        id: "5b",
        name: "x^n (1/x;q)_n",
        kls_section: None,
        node_label: "5b",
        slots: &[],
        basis: "v_k(x) = x^k",
        ranges: "",
        finite: None,
        seqs: newton_one_seqs,
        rep: newton_one_rep,
        closed: Some(newton_one_closed),
    },
    FamilySpec {
        id: "5c′",
        name: "Stieltjes-Wigert",
        kls_section: Some(27),
        node_label: "5c′",
        slots: &[],
        basis: "v_k(x) = x^k",
        ranges: "0 < q < 1",
        finite: None,
        seqs: sw_seqs,
        rep: sw_rep,
        closed: None,
    },
];
