//! Exhaustive property sweeps over the graph atlas: each one checks a
//! structural statement on every graph in scope and reports violations as
//! findings (graph6 plus the violated inequality), never as errors.

use super::enumerate::{enumerate, OracleError};
use super::{ramsey_number, RamseySearch};
use crate::containment::{contains_path, has_path_between};
use crate::graph::Graph;
use crate::graph6;
use crate::reduction::dichotomy_reduce;
use crate::structure::{leaf_bounds, profile, Rational};
use crate::target::Target;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRow {
    pub instance: String,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub instances_checked: u64,
    pub violations: Vec<Violation>,
    /// Per-instance rows, populated only on request.
    pub rows: Option<Vec<InstanceRow>>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone)]
struct Recorder {
    record: bool,
    instances: u64,
    violations: Vec<Violation>,
    rows: Vec<InstanceRow>,
}

impl Recorder {
    fn new(record: bool) -> Self {
        Recorder {
            record,
            instances: 0,
            violations: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn check(&mut self, instance: impl Fn() -> String, ok: bool, detail: impl Fn() -> String) {
        self.instances += 1;
        if !ok {
            self.violations.push(Violation {
                instance: instance(),
                detail: detail(),
            });
        }
        if self.record {
            self.rows.push(InstanceRow {
                instance: instance(),
                outcome: if ok { "pass".into() } else { "FAIL".into() },
            });
        }
    }

    fn merge(mut self, other: Recorder) -> Recorder {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self.rows.extend(other.rows);
        self
    }

    fn into_report(self, name: &str, params: Vec<(String, String)>) -> SweepReport {
        SweepReport {
            name: name.into(),
            params,
            instances_checked: self.instances,
            violations: self.violations,
            rows: if self.record { Some(self.rows) } else { None },
        }
    }
}

fn sweep_levels<F>(max_n: usize, record: bool, per_graph: F) -> Result<Recorder, OracleError>
where
    F: Fn(&Graph, &mut Recorder) + Sync,
{
    let mut acc = Recorder::new(record);
    for n in 1..=max_n {
        let graphs = enumerate(n)?.small_graphs();
        let partials: Vec<Recorder> = graphs
            .par_iter()
            .fold_with(Recorder::new(record), |mut rec, sg| {
                per_graph(&sg.to_graph(), &mut rec);
                rec
            })
            .collect();
        // fold_with yields one recorder per rayon chunk; merge in order.
        acc = partials.into_iter().fold(acc, Recorder::merge);
    }
    Ok(acc)
}

// ============================================================================
// Dichotomy sweep
// ============================================================================

/// For every connected non-star graph up to `max_n` vertices satisfying the
/// suspended-path premise for some `s` in `s_values` (no suspended path on
/// more than `s` vertices, `n >= s + 1`, not a bare cycle), checks the two
/// leaf lower bounds, the support-count bound, and the reduction trace
/// identities `e(G2) = |A| + |B| + t`, `|B| <= |A| + 2t`, replay fidelity,
/// and the reconstruction bound `|G1| <= (s-1) e(G2) + 1`.
pub fn dichotomy_sweep(
    max_n: usize,
    s_values: &[usize],
    record: bool,
) -> Result<SweepReport, OracleError> {
    let rec = sweep_levels(max_n, record, |g, rec| {
        if !g.is_connected() || g.is_star() || g.n() < 3 {
            return;
        }
        if g.vertices().all(|v| g.degree(v) == 2) {
            return; // degenerate whole-cycle case: premise fails
        }
        let prof = profile(g);
        for &s in s_values {
            if prof.n < s + 1 || prof.max_susp > s {
                continue;
            }
            let instance = || format!("{},s={s}", graph6::encode(g));
            let trace = match dichotomy_reduce(g) {
                Ok(t) => t,
                Err(e) => {
                    rec.check(instance, false, || format!("reduction rejected premise graph: {e}"));
                    continue;
                }
            };
            let (b1, b2) = leaf_bounds(&prof, s);
            let leaves = prof.leaf_count as i64;
            let ok = leaves >= b1
                && Rational::from_integer(leaves as i128) >= b2
                && prof.leaf_count >= prof.p
                && trace.edge_identity_holds()
                && trace.b_bound_holds()
                && trace.reconstruction_bound_holds(s)
                && trace.replay_matches();
            rec.check(instance, ok, || {
                format!(
                    "leaves={leaves} bound1={b1} bound2={b2} p={} e(G2)={} |A|={} |B|={} t={}",
                    prof.p,
                    trace.g2.edge_count(),
                    trace.a.len(),
                    trace.b.len(),
                    trace.excess()
                )
            });
        }
    })?;
    Ok(rec.into_report(
        "dichotomy",
        vec![
            ("max_n".into(), max_n.to_string()),
            ("s".into(), format!("{s_values:?}")),
        ],
    ))
}

// ============================================================================
// Component/min-degree dichotomy for path-free graphs
// ============================================================================

/// Every `P_k`-free graph is either a disjoint union of components on fewer
/// than `k` vertices, or has a vertex of degree at most `k/2 - 1`.
pub fn strucf_sweep(
    max_n: usize,
    k_values: &[usize],
    record: bool,
) -> Result<SweepReport, OracleError> {
    let rec = sweep_levels(max_n, record, |g, rec| {
        for &k in k_values {
            if contains_path(g, k) {
                continue;
            }
            let small_components = g.max_component_size() < k;
            let min_degree = g.vertices().map(|v| g.degree(v)).min().unwrap_or(0);
            let low_degree = 2 * min_degree <= k.saturating_sub(2);
            rec.check(
                || format!("{},k={k}", graph6::encode(g)),
                small_components || low_degree,
                || {
                    format!(
                        "P_{k}-free but max component {} >= {k} and min degree {min_degree} > {k}/2 - 1",
                        g.max_component_size()
                    )
                },
            );
        }
    })?;
    Ok(rec.into_report(
        "strucf",
        vec![
            ("max_n".into(), max_n.to_string()),
            ("k".into(), format!("{k_values:?}")),
        ],
    ))
}

// ============================================================================
// Path-extension sweep
// ============================================================================

/// For `s = 2` and each `t` in `t_values` (`t >= 2s`), over all graphs on
/// `s + t` vertices and all vertex pairs: if there is a `t`-vertex path
/// joining `u` and `v` but no `(t+1)`-vertex one, the complement contains
/// `P_3` (the `2*ceil(s/2)+1` case).
pub fn findpath_sweep(t_values: &[usize], record: bool) -> Result<SweepReport, OracleError> {
    const S: usize = 2;
    let mut acc = Recorder::new(record);
    for &t in t_values {
        assert!(t >= 2 * S, "premise needs t >= 2s");
        let n = S + t;
        let graphs = enumerate(n)?.small_graphs();
        let partials: Vec<Recorder> = graphs
            .par_iter()
            .fold_with(Recorder::new(record), |mut rec, sg| {
                let g = sg.to_graph();
                let comp = g.complement();
                for u in 0..n {
                    for v in u + 1..n {
                        if !has_path_between(&g, u, v, t) || has_path_between(&g, u, v, t + 1) {
                            continue;
                        }
                        rec.check(
                            || format!("{},u={u},v={v},t={t}", graph6::encode(&g)),
                            contains_path(&comp, 2 * S.div_ceil(2) + 1),
                            || "complement lacks the promised path".into(),
                        );
                    }
                }
                rec
            })
            .collect();
        acc = partials.into_iter().fold(acc, Recorder::merge);
    }
    Ok(acc.into_report(
        "findpath",
        vec![
            ("s".into(), S.to_string()),
            ("t".into(), format!("{t_values:?}")),
        ],
    ))
}

// ============================================================================
// Edge-addition sweep
// ============================================================================

/// For every connected graph up to `max_n` vertices, every non-edge `e`,
/// and every `k` in `k_values`: `r(G + e, P_k) <= r(G, P_k) + k - 1`,
/// both sides computed exactly by the oracle.
pub fn addedge_sweep(
    max_n: usize,
    k_values: &[usize],
    record: bool,
) -> Result<SweepReport, OracleError> {
    let mut acc = Recorder::new(record);
    for n in 2..=max_n {
        for sg in enumerate(n)?.small_graphs().iter() {
            let g = sg.to_graph();
            if !g.is_connected() {
                continue;
            }
            for &k in k_values {
                let base = match ramsey_number(&g, Target::Path(k), super::ENUM_CAP)? {
                    RamseySearch::Determined(c) => c.value,
                    RamseySearch::BudgetExhausted { .. } => {
                        acc.check(
                            || format!("{},k={k}", graph6::encode(&g)),
                            false,
                            || "oracle budget exhausted on the base graph".into(),
                        );
                        continue;
                    }
                };
                for u in 0..n {
                    for v in u + 1..n {
                        if g.has_edge(u, v) {
                            continue;
                        }
                        let mut ge = g.clone();
                        ge.add_edge(u, v);
                        let augmented = match ramsey_number(&ge, Target::Path(k), super::ENUM_CAP)? {
                            RamseySearch::Determined(c) => c.value,
                            RamseySearch::BudgetExhausted { .. } => {
                                acc.check(
                                    || format!("{}+{u}{v},k={k}", graph6::encode(&g)),
                                    false,
                                    || "oracle budget exhausted on the augmented graph".into(),
                                );
                                continue;
                            }
                        };
                        rec_check_addedge(&mut acc, &g, u, v, k, augmented, base);
                    }
                }
            }
        }
    }
    Ok(acc.into_report(
        "addedge",
        vec![
            ("max_n".into(), max_n.to_string()),
            ("k".into(), format!("{k_values:?}")),
        ],
    ))
}

fn rec_check_addedge(
    acc: &mut Recorder,
    g: &Graph,
    u: usize,
    v: usize,
    k: usize,
    augmented: usize,
    base: usize,
) {
    acc.check(
        || format!("{},e=({u},{v}),k={k}", graph6::encode(g)),
        augmented <= base + k - 1,
        || format!("r(G+e) = {augmented} > r(G) + k - 1 = {}", base + k - 1),
    );
}

// ============================================================================
// Turán bound sweep
// ============================================================================

/// Exact `ex(n, P_k) <= (k-2) n / 2` for all `n <= max_n`, `k <= k_max`.
/// Returns the exact values alongside the bound in the instance rows.
pub fn erdos_gallai_sweep(
    max_n: usize,
    k_max: usize,
    record: bool,
) -> Result<SweepReport, OracleError> {
    let mut acc = Recorder::new(record);
    for n in 1..=max_n {
        for k in 2..=k_max {
            let ex = super::turan_number(n, k)?;
            acc.check(
                || format!("n={n},k={k},ex={ex}"),
                2 * ex <= (k - 2) * n,
                || format!("ex({n}, P_{k}) = {ex} exceeds (k-2)n/2 = {}", (k - 2) * n / 2),
            );
        }
    }
    Ok(acc.into_report(
        "erdos_gallai",
        vec![
            ("max_n".into(), max_n.to_string()),
            ("k_max".into(), k_max.to_string()),
        ],
    ))
}

// ============================================================================
// Degree-peeling sweep
// ============================================================================

/// Seeded random graph with independent edge probability `edge_prob`.
pub fn random_graph(n: usize, edge_prob: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Checks the peeling postconditions (`Delta(G[S]) < D` and
/// `steps <= e(G)/D`) on `per_size` random graphs for each size, across a
/// spread of densities and thresholds. Deterministic for a fixed seed.
pub fn peel_sweep(sizes: &[usize], per_size: usize, seed: u64, record: bool) -> SweepReport {
    let thresholds: [Rational; 5] = [
        Rational::from_integer(1),
        Rational::new(3, 2),
        Rational::from_integer(2),
        Rational::from_integer(3),
        Rational::from_integer(5),
    ];
    let mut rec = Recorder::new(record);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &n in sizes {
        for i in 0..per_size {
            let p = 0.1 + 0.8 * (i % 9) as f64 / 8.0;
            let g = random_graph(n, p, &mut rng);
            let e = g.edge_count();
            for d in thresholds {
                let (s, steps) = crate::structure::peel_high_degree(&g, d);
                let induced_max = s
                    .iter()
                    .map(|v| g.neighbors(v).intersect(s).len())
                    .max()
                    .unwrap_or(0);
                let ok = Rational::from_integer(induced_max as i128) < d
                    && steps == n - s.len()
                    && Rational::from_integer(steps as i128)
                        <= Rational::from_integer(e as i128) / d;
                rec.check(
                    || format!("n={n},p={p:.2},i={i},D={d}"),
                    ok,
                    || {
                        format!(
                            "survivor max degree {induced_max}, steps {steps}, edges {e}, D={d}"
                        )
                    },
                );
            }
        }
    }
    rec.into_report(
        "peel",
        vec![
            ("sizes".into(), format!("{sizes:?}")),
            ("per_size".into(), per_size.to_string()),
            ("seed".into(), seed.to_string()),
        ],
    )
}

/// All five lemma sweeps at their stated scales.
pub fn lemma_sweeps() -> Result<Vec<SweepReport>, OracleError> {
    Ok(vec![
        dichotomy_sweep(9, &[2, 3, 4], false)?,
        strucf_sweep(9, &[2, 3, 4, 5, 6], false)?,
        findpath_sweep(&[4, 5, 6], false)?,
        addedge_sweep(4, &[3, 4], false)?,
        erdos_gallai_sweep(9, 7, false)?,
    ])
}
