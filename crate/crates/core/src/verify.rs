//! Verification suites that run the module invariants over catalog
//! instances and seeded random vectors and return JSON-ready reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, crosscheck_all, families};
use crate::classifier::{
    build_graph, emit, label_of, pattern_for_label, pattern_of, GraphFormat, CROSS_ARROWS, DRAWN_ARROWS, DUAL_PAIRS,
};
use crate::engine::{duality_table, monic_poly, ParameterVector, PolySystem};
use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::limits::{self, VerifyOptions};
use crate::par::Exec;
use crate::symmetry::{apply_gauge, canonicalize, dualize, q_invert, signature, GaugeAction, CHART_ROWS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Constraints,
    Recurrence,
    Eigen,
    Duality,
    Catalog,
    Limits,
    Charts,
    Symmetry,
    Graph,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Constraints,
        Suite::Recurrence,
        Suite::Eigen,
        Suite::Duality,
        Suite::Catalog,
        Suite::Limits,
        Suite::Charts,
        Suite::Symmetry,
        Suite::Graph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Constraints => "constraints",
            Suite::Recurrence => "recurrence",
            Suite::Eigen => "eigen",
            Suite::Duality => "duality",
            Suite::Catalog => "catalog",
            Suite::Limits => "limits",
            Suite::Charts => "charts",
            Suite::Symmetry => "symmetry",
            Suite::Graph => "graph",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Degree bound; each suite has its own default.
    pub n_max: Option<usize>,
    /// Duality depth, or the number of halvings for limits.
    pub depth: Option<usize>,
    pub random_vectors: usize,
    pub perturbed_vectors: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n_max: None,
            depth: None,
            random_vectors: 200,
            perturbed_vectors: 50,
            seed: 0x5eed,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Known discrepancies that do not fail the suite.
    pub warnings: Vec<String>,
    pub details: Value,
}

impl SuiteReport {
    fn new(suite: Suite, checks: usize, failures: Vec<String>, warnings: Vec<String>, details: Value) -> SuiteReport {
        SuiteReport { suite, pass: failures.is_empty(), checks, failures, warnings, details }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    match suite {
        Suite::Constraints => constraints(opts),
        Suite::Recurrence => recurrence(opts),
        Suite::Eigen => eigen(opts),
        Suite::Duality => duality(opts),
        Suite::Catalog => catalog_suite(opts),
        Suite::Limits => limits_suite(opts),
        Suite::Charts => charts(),
        Suite::Symmetry => symmetry(opts),
        Suite::Graph => graph(),
    }
}

pub fn run_all(opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    Suite::ALL.into_iter().map(|s| run_suite(s, opts)).collect()
}

/// Values of `q` used for random vectors.
pub const Q_CHOICES: [(i64, i64); 12] =
    [(1, 2), (-1, 2), (2, 3), (-2, 3), (3, 1), (-3, 1), (3, 2), (-3, 2), (2, 1), (-2, 1), (1, 3), (-1, 3)];

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let v = small_rational(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Zero with probability 1/4, so lower-dimensional patterns are sampled.
fn sparse_rational<R: Rng>(rng: &mut R) -> Rational {
    if rng.gen_ratio(1, 4) {
        Rational::zero()
    } else {
        nonzero_rational(rng)
    }
}

/// An admissible vector whose system exists to `order`: the constraints
/// hold, `h` is separated and `g_1..g_{order+1}` are nonzero.
pub fn random_vector<R: Rng>(rng: &mut R, order: usize) -> ParameterVector {
    loop {
        let (qn, qd) = *Q_CHOICES.choose(rng).expect("nonempty");
        let q = rat(qn, qd);
        let a = [small_rational(rng), sparse_rational(rng), sparse_rational(rng)];
        let b = [small_rational(rng), sparse_rational(rng), sparse_rational(rng)];
        let Ok(pv) = ParameterVector::from_free(q, a, b, sparse_rational(rng), sparse_rational(rng)) else {
            continue;
        };
        if pv.check_h_separation(order + 1).is_err() {
            continue;
        }
        if (1..=order as i64 + 1).any(|k| pv.g(k).is_zero()) {
            continue;
        }
        return pv;
    }
}

/// Which constraint a perturbation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Broken {
    D3,
    D4,
}

/// Moves `d3` or `d4` off its constraint and compensates in `d0`, so the
/// zero sum still holds and exactly one relation fails.
pub fn perturb(pv: &ParameterVector, which: Broken, delta: &Rational) -> ParameterVector {
    let (q, a, b, mut d) = pv.clone().into_parts();
    let slot = match which {
        Broken::D3 => 3,
        Broken::D4 => 4,
    };
    d[slot] += delta;
    d[0] -= delta;
    ParameterVector::new_unchecked(q, a, b, d)
}

/// Perturbed vectors whose `g_1..g_{order+1}` stay nonzero.
pub fn perturbed_vectors<R: Rng>(rng: &mut R, count: usize, order: usize) -> Vec<(ParameterVector, Broken)> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let base = random_vector(rng, order);
        let which = if out.len() % 2 == 0 { Broken::D3 } else { Broken::D4 };
        let p = perturb(&base, which, &nonzero_rational(rng));
        if (1..=order as i64 + 1).any(|k| p.g(k).is_zero()) {
            continue;
        }
        out.push((p, which));
    }
    out
}

pub fn random_vectors(seed: u64, count: usize, order: usize) -> Vec<ParameterVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_vector(&mut rng, order)).collect()
}

fn describe(pv: &ParameterVector) -> String {
    let (q, a, b, d) = (pv.q(), pv.a(), pv.b(), pv.d());
    let join = |v: &[Rational]| v.iter().map(Rational::to_string).collect::<Vec<_>>().join(",");
    format!("q={q} a=[{}] b=[{}] d=[{}]", join(a), join(b), join(d))
}

/// Default instance of every catalog entry, with its degree bound.
fn catalog_instances() -> Vec<(String, ParameterVector, Option<usize>)> {
    families()
        .iter()
        .map(|f| {
            let c = f.default_ctx();
            let pv = f.vector(&c).expect("catalog defaults are admissible");
            (f.id.to_string(), pv, f.max_degree(&c).expect("defaults are admissible"))
        })
        .collect()
}

fn constraints(opts: &SuiteOptions) -> Result<SuiteReport> {
    let depth = opts.depth.unwrap_or(10);
    let mut subjects: Vec<(String, ParameterVector)> =
        catalog_instances().into_iter().map(|(id, pv, _)| (id, pv)).collect();
    for (i, pv) in random_vectors(opts.seed, opts.random_vectors, depth).into_iter().enumerate() {
        subjects.push((format!("random#{i}"), pv));
    }
    let gauge = GaugeAction::new(rat(2, 3), rat(-5, 2), rat(-1, 4), rat(3, 1))?;
    let results = opts.exec.map(subjects, |(id, pv)| {
        let mut fails = Vec::new();
        if !pv.structural_report().structural_ok() {
            fails.push(format!("{id}: constraints fail"));
        }
        if !pv.g(0).is_zero() {
            fails.push(format!("{id}: g_0 != 0"));
        }
        for (name, image) in [("gauge", apply_gauge(&pv, &gauge)), ("q_invert", q_invert(&pv))] {
            if !image.structural_report().structural_ok() {
                fails.push(format!("{id}: {name} breaks the constraints"));
            }
        }
        if let Ok(dual) = dualize(&pv, depth) {
            if !dual.structural_report().structural_ok() {
                fails.push(format!("{id}: dualize breaks the constraints"));
            }
        }
        fails
    });
    let checks = results.len();
    let mut failures: Vec<String> = results.into_iter().flatten().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xd3d4);
    let perturbed = perturbed_vectors(&mut rng, opts.perturbed_vectors, 2);
    for (pv, which) in &perturbed {
        let (q, a, b, d) = pv.clone().into_parts();
        if ParameterVector::new(q, a, b, d).is_ok() {
            failures.push(format!("perturbed {which:?} accepted: {}", describe(pv)));
        }
    }
    Ok(SuiteReport::new(
        Suite::Constraints,
        checks + perturbed.len(),
        failures,
        vec![],
        json!({ "depth": depth, "vectors": checks, "perturbed_rejected": perturbed.len() }),
    ))
}

/// Degree bound for an instance: `n_max`, clipped to the family's last degree.
fn clip(n_max: usize, max_degree: Option<usize>) -> usize {
    max_degree.map_or(n_max, |m| m.min(n_max))
}

/// Recurrence with closed-form `A_n`, `B_n` for `n <= n_max`, and for
/// perturbed vectors a break of the three-term form for some `n <= 6`.
fn recurrence(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(10);
    let mut subjects: Vec<(String, ParameterVector, usize)> = catalog_instances()
        .into_iter()
        .filter_map(|(id, pv, m)| {
            // the last recurrence step needs u_{n+1}
            let top = clip(n_max, m.map(|m| m.saturating_sub(1)));
            (m != Some(0)).then_some((id, pv, top))
        })
        .collect();
    for (i, pv) in random_vectors(opts.seed, opts.random_vectors, n_max + 1).into_iter().enumerate() {
        subjects.push((format!("random#{i}"), pv, n_max));
    }
    let checks = subjects.len();
    let results = opts.exec.map(subjects, |(id, pv, top)| -> Option<String> {
        let sys = match PolySystem::new(&pv, top + 1) {
            Ok(s) => s,
            Err(e) => return Some(format!("{id}: {e}")),
        };
        for n in 0..=top {
            match sys.recurrence_check(n) {
                Ok(true) => {}
                Ok(false) => return Some(format!("{id}: recurrence fails at n={n}: {}", describe(&pv))),
                Err(e) => return Some(format!("{id}: n={n}: {e}")),
            }
        }
        None
    });
    let mut failures: Vec<String> = results.into_iter().flatten().collect();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xd3d4);
    let perturbed = perturbed_vectors(&mut rng, opts.perturbed_vectors, 6);
    let broken_at = opts.exec.map(perturbed.clone(), |(pv, _)| -> Result<Option<usize>> {
        let sys = PolySystem::new(&pv, 7)?;
        for n in 2..=6 {
            if sys.breaks_three_term(n)? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    });
    let mut first_breaks = Vec::new();
    for ((pv, which), r) in perturbed.iter().zip(broken_at) {
        match r {
            Ok(Some(n)) => first_breaks.push(n),
            Ok(None) => failures.push(format!("perturbed {which:?} keeps three terms to n=6: {}", describe(pv))),
            Err(e) => failures.push(format!("perturbed {which:?}: {e}")),
        }
    }
    Ok(SuiteReport::new(
        Suite::Recurrence,
        checks + perturbed.len(),
        failures,
        vec![],
        json!({
            "n_max": n_max,
            "instances": checks,
            "perturbed": perturbed.len(),
            "first_break_degrees": first_breaks,
        }),
    ))
}

fn eigen(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(10);
    let mut subjects: Vec<(String, ParameterVector, usize)> =
        catalog_instances().into_iter().map(|(id, pv, m)| (id, pv, clip(n_max, m))).collect();
    for (i, pv) in random_vectors(opts.seed, opts.random_vectors, n_max).into_iter().enumerate() {
        subjects.push((format!("random#{i}"), pv, n_max));
    }
    let checks = subjects.len();
    let results = opts.exec.map(subjects, |(id, pv, top)| -> Option<String> {
        let sys = match PolySystem::new(&pv, top) {
            Ok(s) => s,
            Err(e) => return Some(format!("{id}: {e}")),
        };
        (0..=top).find_map(|n| match sys.eigen_check(n) {
            Ok(true) => None,
            Ok(false) => Some(format!("{id}: L u_{n} != h_{n} u_{n}")),
            Err(e) => Some(format!("{id}: n={n}: {e}")),
        })
    });
    let failures: Vec<String> = results.into_iter().flatten().collect();
    Ok(SuiteReport::new(Suite::Eigen, checks, failures, vec![], json!({ "n_max": n_max, "instances": checks })))
}

/// Pairs checked for duality: `1a` with itself, then each listed pair.
pub const DUALITY_SUBJECTS: [(&str, &str); 6] =
    [("1a", "1a"), ("2a", "2b"), ("3a", "3d"), ("3b", "3b′"), ("4a", "4f"), ("4c", "4d′")];

/// Default catalog instance for a node label; primed labels not in the
/// catalog come from `q_invert` of their mirror.
pub fn instance_for_label(label: &str) -> Result<ParameterVector> {
    let label = crate::classifier::normalize_label(label);
    if let Ok(f) = catalog::family(&label) {
        if f.node_label == label {
            return f.vector(&f.default_ctx());
        }
    }
    let mirror = crate::classifier::mirror_label(&label);
    let f = catalog::family(&mirror)?;
    if f.node_label != mirror {
        return Err(Error::UnknownFamily(label));
    }
    Ok(q_invert(&f.vector(&f.default_ctx())?))
}

fn duality(opts: &SuiteOptions) -> Result<SuiteReport> {
    let depth = opts.depth.or(opts.n_max).unwrap_or(8);
    let mut failures = Vec::new();
    let mut details = Vec::new();
    let mut checks = 0;
    for (from, to) in DUALITY_SUBJECTS {
        let pv = instance_for_label(from)?;
        let expected = pattern_for_label(to)?;
        let dual_pattern = pattern_of(&dualize(&pv, depth)?)?;
        checks += 1;
        if dual_pattern != expected {
            failures
                .push(format!("{from}: dual lands on {}, expected {to}", label_of(&dual_pattern).unwrap_or_default()));
        }
        let table = duality_table(&pv, depth)?;
        checks += table.len();
        let bad: Vec<(usize, usize)> = table.iter().filter(|t| !t.2).map(|t| (t.0, t.1)).collect();
        if !bad.is_empty() {
            failures.push(format!("{from}: U_n(x_m) != ~U_m(h_n) at {bad:?}"));
        }
        details.push(json!({ "family": from, "dual": to, "entries": table.len(), "failed": bad.len() }));
    }
    for (a, b) in DUAL_PAIRS {
        checks += 1;
        let pa = pattern_for_label(a)?;
        if pa.dual() != Some(pattern_for_label(b)?) {
            failures.push(format!("pattern dual of {a} is not {b}"));
        }
    }
    for label in ["1a", "3c", "4b", "5a"] {
        checks += 1;
        let p = pattern_for_label(label)?;
        if p.dual() != Some(p) {
            failures.push(format!("{label} is not self-dual"));
        }
    }
    Ok(SuiteReport::new(Suite::Duality, checks, failures, vec![], json!({ "depth": depth, "pairs": details })))
}

fn catalog_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(8);
    let mut failures = Vec::new();
    let mut reports = Vec::new();
    for (id, r) in crosscheck_all(opts.exec, n_max) {
        match r {
            Ok(rep) => {
                if !rep.pass {
                    failures.push(format!("{id}: crosscheck failed"));
                }
                reports.push(serde_json::to_value(&rep).expect("serializable"));
            }
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    Ok(SuiteReport::new(
        Suite::Catalog,
        reports.len(),
        failures,
        vec![],
        json!({ "n_max": n_max, "families": reports }),
    ))
}

fn limits_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let vopts = VerifyOptions {
        n_max: opts.n_max.unwrap_or(4),
        t_max: opts.depth.unwrap_or(12) as u32,
        ..VerifyOptions::default()
    };
    let graph = build_graph();
    let mut failures = Vec::new();
    let mut cases = Vec::new();
    let mut checks = 0;
    for (id, r) in limits::run_all(opts.exec, &vopts) {
        checks += 1;
        match r {
            Ok(reports) => {
                if let Some(bad) = reports.iter().find(|r| !r.pass) {
                    failures.push(format!("{id}: no convergence at n={}", bad.n));
                }
                cases.push(serde_json::to_value(&reports).expect("serializable"));
            }
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    for c in limits::cases() {
        checks += 1;
        if !graph.reachable(c.source_node).contains(c.target_node) {
            failures.push(format!("{}: no path {} -> {} in the scheme graph", c.id, c.source_node, c.target_node));
        }
    }
    let mut identities = Vec::new();
    for id in limits::identities() {
        checks += 1;
        let rep = limits::check_identity(id, &rat(1, 2), 8, &limits::default_sample_xs())?;
        if !rep.pass {
            failures.push(format!("identity {}: gap {}", rep.id, rep.max_gap));
        }
        identities.push(rep);
    }
    Ok(SuiteReport::new(
        Suite::Limits,
        checks,
        failures,
        vec![],
        json!({
            "n_max": vopts.n_max,
            "t_max": vopts.t_max,
            "eps0": vopts.eps0.to_string(),
            "cases": cases,
            "identities": identities,
        }),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartOutcome {
    pub chart: String,
    pub label: String,
    pub instance: String,
    pub printed: String,
    pub computed: String,
    pub coordinates: Vec<String>,
    /// `match`, `documented` or `mismatch`.
    pub status: &'static str,
}

pub fn chart_outcomes() -> Result<Vec<ChartOutcome>> {
    CHART_ROWS
        .iter()
        .map(|row| {
            let instance = row.correction.map_or(row.label, |c| c.instance);
            let pv = instance_for_label(instance)?;
            let coords = canonicalize(&pv, row.chart)?;
            let computed = signature(&coords);
            let status = match row.correction {
                None if computed == row.printed => "match",
                Some(c) if computed == c.signature => "documented",
                _ => "mismatch",
            };
            Ok(ChartOutcome {
                chart: row.chart.to_string(),
                label: row.label.to_string(),
                instance: instance.to_string(),
                printed: row.printed.to_string(),
                computed,
                coordinates: coords.iter().map(Rational::to_string).collect(),
                status,
            })
        })
        .collect()
}

fn charts() -> Result<SuiteReport> {
    let outcomes = chart_outcomes()?;
    let mut failures = Vec::new();
    let mut warnings = Vec::new();
    for (o, row) in outcomes.iter().zip(CHART_ROWS.iter()) {
        match o.status {
            "match" => {}
            "documented" => warnings.push(format!(
                "{} row {}: printed {}, computed {} from {} ({})",
                o.chart,
                o.label,
                o.printed,
                o.computed,
                o.instance,
                row.correction.map_or("", |c| c.reason)
            )),
            _ => failures.push(format!("{} row {}: printed {}, computed {}", o.chart, o.label, o.printed, o.computed)),
        }
    }
    Ok(SuiteReport::new(Suite::Charts, outcomes.len(), failures, warnings, json!({ "rows": outcomes })))
}

fn symmetry(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(8);
    let mut subjects: Vec<(String, ParameterVector, usize)> =
        catalog_instances().into_iter().map(|(id, pv, m)| (id, pv, clip(n_max, m))).collect();
    let count = opts.random_vectors.min(50);
    for (i, pv) in random_vectors(opts.seed ^ 0x5a, count, n_max).into_iter().enumerate() {
        subjects.push((format!("random#{i}"), pv, n_max));
    }
    let gauges = [
        ("h shift", GaugeAction::new(rat(7, 3), Rational::one(), Rational::zero(), Rational::one())?),
        ("h scale", GaugeAction::scale_h(rat(-3, 2))?),
        ("x shift", GaugeAction::new(Rational::zero(), Rational::one(), rat(-5, 4), Rational::one())?),
        ("x scale", GaugeAction::scale_x(rat(2, 5))?),
        ("combined", GaugeAction::new(rat(1, 2), rat(3, 1), rat(2, 3), rat(-4, 3))?),
    ];
    let checks = subjects.len();
    let results = opts.exec.map(subjects, |(id, pv, top)| -> Vec<String> {
        let mut fails = Vec::new();
        let inv = q_invert(&pv);
        if q_invert(&inv) != pv {
            fails.push(format!("{id}: q_invert is not an involution"));
        }
        if !inv.structural_report().structural_ok() {
            fails.push(format!("{id}: q_invert breaks the constraints"));
        }
        for k in -2..=10 {
            if inv.x(k) != pv.x(k) || inv.h(k) != pv.h(k) || inv.g(k) != pv.g(k) {
                fails.push(format!("{id}: q_invert changes the sequences at k={k}"));
                break;
            }
        }
        if let Ok(dual) = dualize(&pv, top) {
            if dualize(&dual, top).as_ref() != Ok(&pv) {
                fails.push(format!("{id}: dualize is not an involution"));
            }
            if !dual.structural_report().structural_ok() {
                fails.push(format!("{id}: dualize breaks the constraints"));
            }
        }
        let base: Vec<_> = match (0..=top).map(|n| monic_poly(&pv, n)).collect::<Result<Vec<_>>>() {
            Ok(b) => b,
            Err(e) => return vec![format!("{id}: {e}")],
        };
        match (0..=top).map(|n| monic_poly(&inv, n)).collect::<Result<Vec<_>>>() {
            Ok(p) if p == base => {}
            Ok(_) => fails.push(format!("{id}: q_invert changes u_n")),
            Err(e) => fails.push(format!("{id}: q_invert: {e}")),
        }
        for (name, g) in &gauges {
            let moved = apply_gauge(&pv, g);
            for (n, u) in base.iter().enumerate() {
                let expected = g.transform_poly(u);
                match monic_poly(&moved, n) {
                    Ok(p) if p == expected => {}
                    Ok(_) => {
                        fails.push(format!("{id}: {name} gauge mismatch at n={n}"));
                        break;
                    }
                    Err(e) => {
                        fails.push(format!("{id}: {name} gauge: {e}"));
                        break;
                    }
                }
            }
        }
        fails
    });
    let failures: Vec<String> = results.into_iter().flatten().collect();
    Ok(SuiteReport::new(
        Suite::Symmetry,
        checks,
        failures,
        vec![],
        json!({ "n_max": n_max, "instances": checks, "gauges": gauges.iter().map(|g| g.0).collect::<Vec<_>>() }),
    ))
}

fn graph() -> Result<SuiteReport> {
    let g = build_graph();
    let mut failures = Vec::new();
    let mut checks = 0;
    let mut expect = |ok: bool, msg: String| {
        checks += 1;
        if !ok {
            failures.push(msg);
        }
    };
    expect(g.nodes.len() == 34, format!("{} nodes, expected 34", g.nodes.len()));
    for label in ["1a", "3e"] {
        let p = pattern_for_label(label)?;
        expect(p.mirror() == p, format!("{label} is not self-mirrored"));
    }
    for (from, to) in DRAWN_ARROWS.iter().chain(CROSS_ARROWS.iter()) {
        expect(g.has_arrow(from, to), format!("missing arrow {from} -> {to}"));
        let (mf, mt) = (crate::classifier::mirror_label(from), crate::classifier::mirror_label(to));
        expect(g.has_arrow(&mf, &mt), format!("missing arrow {mf} -> {mt}"));
    }
    for fmt in [GraphFormat::Dot, GraphFormat::Json] {
        expect(emit(&g, fmt) == emit(&build_graph(), fmt), format!("{fmt:?} output differs between runs"));
    }
    let counts: BTreeMap<&str, usize> =
        [("nodes", g.nodes.len()), ("arrows", g.arrows.len()), ("unlisted", g.unlisted.len())].into();
    Ok(SuiteReport::new(Suite::Graph, checks, failures, vec![], json!(counts)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteOptions {
        SuiteOptions { random_vectors: 12, perturbed_vectors: 6, ..SuiteOptions::default() }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn random_vectors_are_seeded() {
        assert_eq!(random_vectors(7, 5, 6), random_vectors(7, 5, 6));
        assert_ne!(random_vectors(7, 5, 6), random_vectors(8, 5, 6));
    }

    #[test]
    fn perturbation_breaks_one_relation() {
        let pv = random_vectors(1, 1, 4).remove(0);
        let r = perturb(&pv, Broken::D3, &rat(1, 2)).structural_report();
        assert!(r.d_sum_zero && !r.d3_relation && r.d4_relation);
        let r = perturb(&pv, Broken::D4, &rat(1, 2)).structural_report();
        assert!(r.d_sum_zero && r.d3_relation && !r.d4_relation);
    }

    #[test]
    fn instances_for_primed_labels() {
        let pv = instance_for_label("2b'").unwrap();
        assert_eq!(label_of(&pattern_of(&pv).unwrap()).unwrap(), "2b′");
        assert!(instance_for_label("9z").is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for s in [Suite::Constraints, Suite::Recurrence, Suite::Eigen, Suite::Charts, Suite::Graph] {
            let r = run_suite(s, &quick()).unwrap();
            assert!(r.pass, "{s}: {:?}", r.failures);
        }
    }

    #[test]
    fn chart_discrepancies_are_warnings() {
        let r = run_suite(Suite::Charts, &quick()).unwrap();
        assert_eq!(r.warnings.len(), 3, "{:?}", r.warnings);
    }
}
