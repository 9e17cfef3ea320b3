use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::{closed_form_counts, dynkin_type, enumerated_counts, CatalogError, E_TABLE};
use crate::engine::{Engine, MutationQuiver, Pair, Summand, Verdict};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{direct_sum, hom_dim, tau_inverse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Enumerated counts against the closed forms.
    Counts,
    /// Tilting-quiver arrows against `(n a_n - a_{n-1}) / 2`, and the
    /// exceptional table under the same identity.
    ArrowIdentity,
    /// Connected, `n`-regular, acyclic, unique source and sink.
    Structure,
    /// Hasse diagram of the torsion order equals the mutation quiver.
    Hasse,
    /// Tilting quiver built from Ext-exchanges equals the induced
    /// subquiver on tilting vertices.
    Embedding,
    /// Both Bongartz completions agree on every partial tilting module.
    BongartzAgreement,
    /// One or two complements, two exactly for faithful modules, with a
    /// certified exchange sequence.
    Complements,
    /// Degree saturation against the dimension criterion.
    Saturation,
    /// Every tilting component has a non-saturated vertex.
    Components,
    /// Counts do not depend on the orientation.
    Orientation,
    /// The mutation ball of the Kronecker quiver.
    Kronecker,
    /// Coxeter matrix of `W4` and tau against it.
    Coxeter,
    /// Euler form, Auslander-Reiten duality, Hom routes and decomposition
    /// round trips on the pool.
    Oracles,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Counts,
        Check::ArrowIdentity,
        Check::Structure,
        Check::Hasse,
        Check::Embedding,
        Check::BongartzAgreement,
        Check::Complements,
        Check::Saturation,
        Check::Components,
        Check::Orientation,
        Check::Kronecker,
        Check::Coxeter,
        Check::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Counts => "counts",
            Check::ArrowIdentity => "arrow-identity",
            Check::Structure => "structure",
            Check::Hasse => "hasse",
            Check::Embedding => "embedding",
            Check::BongartzAgreement => "bongartz-agreement",
            Check::Complements => "complements",
            Check::Saturation => "saturation",
            Check::Components => "components",
            Check::Orientation => "orientation",
            Check::Kronecker => "kronecker",
            Check::Coxeter => "coxeter",
            Check::Oracles => "oracles",
        }
    }

    /// Checks that make sense for a quiver.
    pub fn applicable(q: &Quiver) -> Vec<Check> {
        if dynkin_type(q).is_some() {
            return Check::ALL.into_iter().filter(|c| !matches!(c, Check::Kronecker | Check::Coxeter)).collect();
        }
        let mut out = Vec::new();
        if q.kronecker_arrows() == Some(2) {
            out.push(Check::Kronecker);
        }
        if is_w4(q) {
            out.push(Check::Coxeter);
        }
        out.push(Check::Oracles);
        out
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown check `{s}`"))
    }
}

fn is_w4(q: &Quiver) -> bool {
    q.clone().with_name("W4") == crate::quiver::presets::w4()
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    pub detail: Value,
    /// First failing instance, when there is one.
    pub counterwitness: Option<Value>,
    /// Wall time, kept out of the JSON so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub algebra: String,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn get(&self, check: Check) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check == check)
    }

    pub fn to_json(&self) -> Value {
        json!({ "algebra": self.algebra, "passed": self.passed(), "results": self.results })
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let mark = if r.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("{mark} {} {} {} ({:.2?})\n", self.algebra, r.check, r.detail, r.elapsed));
            if let Some(w) = &r.counterwitness {
                s.push_str(&format!("     witness: {w}\n"));
            }
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Pool depth for bounded quivers; [`default_depth`] when unset.
    pub depth: Option<usize>,
    pub workers: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { depth: None, workers: None, seed: 0x5eed }
    }
}

/// Pool depth used when none is given: tau-orbits on `W4` grow
/// exponentially, so its pool stays shallow.
pub fn default_depth(q: &Quiver) -> usize {
    if is_w4(q) {
        3
    } else {
        KRONECKER_DEPTH
    }
}

fn outcome(check: Check, passed: bool, detail: Value, witness: Option<Value>) -> CheckResult {
    CheckResult { check, passed, detail, counterwitness: if passed { None } else { witness }, elapsed: Duration::ZERO }
}

fn pair_json(e: &Engine, p: &Pair) -> Value {
    let dims: Vec<&DimVector> = p.modules.iter().map(|&m| &e.pool().module(m).dims).collect();
    let support: Vec<&str> = p.projectives.iter().map(|&v| e.quiver().vertex_id(v)).collect();
    json!({ "modules": dims, "support_projectives": support })
}

/// Runs the selected checks. Checks that do not apply to the quiver are an
/// error.
pub fn verify(quiver: Arc<Quiver>, checks: &[Check], opts: &VerifyOptions) -> Result<Report, CatalogError> {
    let applicable = Check::applicable(&quiver);
    if let Some(c) = checks.iter().find(|c| !applicable.contains(c)) {
        return Err(CatalogError::NotApplicable { check: c.to_string(), algebra: quiver.name().to_string() });
    }
    let depth = opts.depth.unwrap_or_else(|| default_depth(&quiver));
    let mut engine = Engine::for_quiver(quiver.clone(), depth)?;
    if let Some(w) = opts.workers {
        engine = engine.with_workers(w);
    }
    let needs_quiver = checks.iter().any(|c| !matches!(c, Check::Kronecker | Check::Coxeter | Check::Oracles));
    let mq = if needs_quiver { Some(engine.mutation_quiver()?) } else { None };
    let mut results = Vec::new();
    for &check in checks {
        let start = Instant::now();
        let mut r = match check {
            Check::Counts => counts(&engine, mq.as_ref().expect("exhaustive"))?,
            Check::ArrowIdentity => arrow_identity(&engine, mq.as_ref().expect("exhaustive")),
            Check::Structure => structure(&engine, mq.as_ref().expect("exhaustive"))?,
            Check::Hasse => hasse(&engine, mq.as_ref().expect("exhaustive")),
            Check::Embedding => embedding(&engine, mq.as_ref().expect("exhaustive")),
            Check::BongartzAgreement => bongartz_agreement(&engine)?,
            Check::Complements => complements(&engine)?,
            Check::Saturation => saturation(&engine, mq.as_ref().expect("exhaustive"))?,
            Check::Components => components(&engine, mq.as_ref().expect("exhaustive"))?,
            Check::Orientation => orientation(&engine, mq.as_ref().expect("exhaustive"))?,
            Check::Kronecker => kronecker(&quiver, depth)?,
            Check::Coxeter => coxeter(&engine, opts),
            Check::Oracles => oracles(&engine, opts),
        };
        r.elapsed = start.elapsed();
        results.push(r);
    }
    Ok(Report { algebra: quiver.name().to_string(), results })
}

fn counts(e: &Engine, mq: &MutationQuiver) -> Result<CheckResult, CatalogError> {
    let q = e.quiver();
    let (ty, n) = dynkin_type(q).ok_or_else(|| CatalogError::NotDynkin(q.name().to_string()))?;
    let closed = closed_form_counts(ty, n)?;
    let found = enumerated_counts(q.name(), n, mq);
    let ok = closed.same_counts(&found);
    let detail = json!({ "closed_form": [closed.a_n, closed.a_n_minus_1, closed.arrows], "enumerated": [found.a_n, found.a_n_minus_1, found.arrows], "pairs": mq.len() });
    Ok(outcome(Check::Counts, ok, detail.clone(), Some(detail)))
}

fn arrow_identity(e: &Engine, mq: &MutationQuiver) -> CheckResult {
    let found = enumerated_counts(e.quiver().name(), e.rank(), mq);
    let table_bad: Vec<Value> = E_TABLE
        .iter()
        .filter(|(n, a, b, arrows)| (*n as u64 * a - b) != 2 * arrows)
        .map(|r| json!(r))
        .collect();
    let ok = found.satisfies_identity() && table_bad.is_empty();
    let detail = json!({ "arrows": found.arrows, "identity": found.arrows_from_identity(), "exceptional_table_consistent": table_bad.is_empty() });
    outcome(Check::ArrowIdentity, ok, detail.clone(), Some(json!({ "counts": detail, "table_rows": table_bad })))
}

fn structure(e: &Engine, mq: &MutationQuiver) -> Result<CheckResult, CatalogError> {
    let n = e.rank();
    let degrees = mq.degrees();
    let bad_degree = degrees.iter().position(|d| d.0 + d.1 != n);
    let a = mq.index_of(&e.regular_pair()?);
    let z = mq.index_of(&e.zero_pair());
    let sources = mq.sources();
    let sinks = mq.sinks();
    let connected = mq.is_connected();
    let acyclic = mq.is_acyclic();
    let ok = bad_degree.is_none() && connected && acyclic && a.is_some() && sources == vec![a.unwrap()] && z.is_some() && sinks == vec![z.unwrap()];
    let detail = json!({ "vertices": mq.len(), "edges": mq.edges.len(), "connected": connected, "acyclic": acyclic, "sources": sources.len(), "sinks": sinks.len() });
    let witness = match bad_degree {
        Some(v) => json!({ "vertex": pair_json(e, &mq.vertices[v]), "degree": degrees[v].0 + degrees[v].1 }),
        None => json!({ "sources": sources.iter().map(|&v| pair_json(e, &mq.vertices[v])).collect::<Vec<_>>(), "sinks": sinks.iter().map(|&v| pair_json(e, &mq.vertices[v])).collect::<Vec<_>>() }),
    };
    Ok(outcome(Check::Structure, ok, detail, Some(witness)))
}

fn hasse(e: &Engine, mq: &MutationQuiver) -> CheckResult {
    let h: BTreeSet<(usize, usize)> = e.hasse_edges(&mq.vertices).into_iter().collect();
    let m: BTreeSet<(usize, usize)> = mq.edge_pairs().into_iter().collect();
    let diff: Vec<&(usize, usize)> = h.symmetric_difference(&m).collect();
    let witness = diff.first().map(|&&(a, b)| {
        json!({ "from": pair_json(e, &mq.vertices[a]), "to": pair_json(e, &mq.vertices[b]), "in_hasse": h.contains(&(a, b)) })
    });
    outcome(Check::Hasse, diff.is_empty(), json!({ "hasse_edges": h.len(), "mutation_edges": m.len() }), witness)
}

/// The tilting quiver from Ext alone: tilting modules are `n` summands
/// without self-extensions, and `M + X -> M + Y` when `Ext^1(Y, X) != 0`.
fn embedding(e: &Engine, mq: &MutationQuiver) -> CheckResult {
    let n = e.rank();
    let pool = e.pool();
    let is_ext_tilting = |p: &Pair| {
        p.projectives.is_empty() && p.modules.len() == n && p.modules.iter().all(|&x| p.modules.iter().all(|&y| pool.ext(x, y) == 0))
    };
    let tilt: Vec<usize> = (0..mq.len()).filter(|&v| is_ext_tilting(&mq.vertices[v])).collect();
    let flagged: Vec<usize> = (0..mq.len()).filter(|&v| mq.is_tilting[v]).collect();
    if tilt != flagged {
        let v = tilt.iter().chain(&flagged).find(|v| tilt.contains(v) != flagged.contains(v)).copied().unwrap_or(0);
        return outcome(
            Check::Embedding,
            false,
            json!({ "ext_tilting": tilt.len(), "flagged_tilting": flagged.len() }),
            Some(pair_json(e, &mq.vertices[v])),
        );
    }
    let mut groups: HashMap<Pair, Vec<(usize, usize)>> = HashMap::new();
    for &v in &tilt {
        for &x in &mq.vertices[v].modules {
            groups.entry(mq.vertices[v].without(Summand::Module(x))).or_default().push((v, x));
        }
    }
    let mut ext_edges = BTreeSet::new();
    for g in groups.values() {
        if let [(t, x), (u, y)] = g.as_slice() {
            if pool.ext(*y, *x) != 0 {
                ext_edges.insert((*t, *u));
            } else if pool.ext(*x, *y) != 0 {
                ext_edges.insert((*u, *t));
            }
        }
    }
    let induced: BTreeSet<(usize, usize)> =
        mq.edges.iter().filter(|ed| mq.is_tilting[ed.from] && mq.is_tilting[ed.to]).map(|ed| (ed.from, ed.to)).collect();
    let diff: Vec<&(usize, usize)> = ext_edges.symmetric_difference(&induced).collect();
    let witness = diff.first().map(|&&(a, b)| json!({ "from": pair_json(e, &mq.vertices[a]), "to": pair_json(e, &mq.vertices[b]) }));
    outcome(
        Check::Embedding,
        diff.is_empty(),
        json!({ "tilting_vertices": tilt.len(), "ext_edges": ext_edges.len(), "induced_edges": induced.len() }),
        witness,
    )
}

/// Partial tilting modules: tau-rigid pairs without support projectives.
fn partial_tilting(e: &Engine) -> Vec<Vec<usize>> {
    e.enumerate_rigid().into_iter().filter(|p| p.projectives.is_empty()).map(|p| p.modules).collect()
}

fn bongartz_agreement(e: &Engine) -> Result<CheckResult, CatalogError> {
    let inputs = partial_tilting(e);
    let outcomes: Vec<Result<Option<Value>, CatalogError>> = e.run(|| {
        inputs
            .par_iter()
            .map(|m| {
                let a = e.bongartz_completion_torsion(m)?;
                let b = e.bongartz_completion_extension(m)?;
                Ok((a != b).then(|| {
                    json!({ "module": pair_json(e, &Pair::new(m.clone(), vec![])), "torsion": pair_json(e, &a), "extension": pair_json(e, &b) })
                }))
            })
            .collect()
    });
    let mut mismatch = None;
    for o in outcomes {
        if let Some(w) = o? {
            mismatch.get_or_insert(w);
        }
    }
    Ok(outcome(Check::BongartzAgreement, mismatch.is_none(), json!({ "partial_tilting_modules": inputs.len() }), mismatch))
}

fn complements(e: &Engine) -> Result<CheckResult, CatalogError> {
    let n = e.rank();
    let almost: Vec<Vec<usize>> = partial_tilting(e).into_iter().filter(|m| m.len() + 1 == n).collect();
    // Per input: (has two complements, witness on failure).
    let outcomes: Vec<Result<(bool, Option<Value>), CatalogError>> = e.run(|| {
        almost
            .par_iter()
            .map(|m| {
                let c = e.complements_of_almost_complete(m)?;
                let count_ok = match c.complements.len() {
                    1 => !c.faithful,
                    2 => c.faithful && c.bongartz.is_some_and(|b| c.complements.contains(&b)),
                    _ => false,
                };
                let two = c.complements.len() == 2;
                let seq_ok = !two || e.exchange_sequence(c.complements[0], c.complements[1], m)?.is_valid();
                let witness = (!(count_ok && seq_ok)).then(|| {
                    let labels: Vec<&DimVector> = c.complements.iter().map(|&x| &e.pool().module(x).dims).collect();
                    json!({ "module": pair_json(e, &Pair::new(m.clone(), vec![])), "complements": labels, "faithful": c.faithful, "sequence_ok": seq_ok })
                });
                Ok((two, witness))
            })
            .collect()
    });
    let mut two = 0;
    let mut witness = None;
    for o in outcomes {
        let (t, w) = o?;
        two += t as usize;
        if let Some(w) = w {
            witness.get_or_insert(w);
        }
    }
    let detail = json!({ "almost_complete": almost.len(), "with_two_complements": two, "exchange_sequences": two });
    Ok(outcome(Check::Complements, witness.is_none(), detail, witness))
}

fn saturation(e: &Engine, mq: &MutationQuiver) -> Result<CheckResult, CatalogError> {
    let report = e.saturation_report(mq)?;
    let bad = report.iter().find(|r| !r.consistent() || r.verdict == Verdict::Indeterminate);
    let verdict_of = |p: Pair| mq.index_of(&p).and_then(|v| report.iter().find(|r| r.vertex == v)).map(|r| r.verdict);
    let a = verdict_of(e.regular_pair()?);
    let da = verdict_of(e.coregular_pair()?);
    let remark = a == Some(Verdict::NotSaturated) && da == Some(Verdict::NotSaturated);
    let saturated = report.iter().filter(|r| r.verdict == Verdict::Saturated).count();
    let detail = json!({ "tilting_vertices": report.len(), "saturated": saturated, "regular_non_saturated": a == Some(Verdict::NotSaturated), "coregular_non_saturated": da == Some(Verdict::NotSaturated) });
    let witness = bad.map(|r| json!({ "vertex": pair_json(e, &mq.vertices[r.vertex]), "starts": r.starts, "ends": r.ends, "dims": r.dims }));
    Ok(outcome(Check::Saturation, bad.is_none() && remark, detail, witness.or(Some(json!({ "regular": a, "coregular": da })))))
}

fn components(e: &Engine, mq: &MutationQuiver) -> Result<CheckResult, CatalogError> {
    let report = e.saturation_report(mq)?;
    let comps = e.component_analysis(mq, &report);
    let bad = comps.iter().find(|c| c.non_saturated.is_empty());
    let census: Vec<Value> = comps.iter().map(|c| json!({ "vertices": c.vertices.len(), "non_saturated": c.non_saturated.len() })).collect();
    let witness = bad.map(|c| pair_json(e, &mq.vertices[c.vertices[0]]));
    Ok(outcome(Check::Components, bad.is_none(), json!({ "components": census }), witness))
}

fn orientation(e: &Engine, mq: &MutationQuiver) -> Result<CheckResult, CatalogError> {
    let q = e.quiver();
    let base = enumerated_counts(q.name(), q.n(), mq);
    let alternating: Vec<usize> = (0..q.arrows().len()).step_by(2).collect();
    let variants = vec![("opposite", q.opposite()), ("alternating", q.reorient(&alternating)?)];
    let mut rows = Vec::new();
    let mut witness = None;
    for (label, v) in variants {
        let other = Engine::for_quiver(Arc::new(v), 1)?;
        let c = enumerated_counts(label, q.n(), &other.mutation_quiver()?);
        if !c.same_counts(&base) && witness.is_none() {
            witness = Some(json!({ "orientation": label, "counts": [c.a_n, c.a_n_minus_1, c.arrows] }));
        }
        rows.push(json!({ "orientation": label, "counts": [c.a_n, c.a_n_minus_1, c.arrows] }));
    }
    Ok(outcome(Check::Orientation, witness.is_none(), json!({ "base": [base.a_n, base.a_n_minus_1, base.arrows], "variants": rows }), witness))
}

/// Radius of the Kronecker mutation ball.
pub const KRONECKER_DEPTH: usize = 5;

/// Vertices of the radius-5 ball around `(A, 0)`: summand dims and
/// support vertices (1-based ids).
fn kronecker_ball() -> Vec<(Vec<[usize; 2]>, Vec<&'static str>)> {
    let mut v: Vec<(Vec<[usize; 2]>, Vec<&'static str>)> = (0..6).map(|k| (vec![[k + 1, k], [k + 2, k + 1]], vec![])).collect();
    v[0].0 = vec![[1, 0], [2, 1]];
    v.push((vec![[1, 0]], vec!["2"]));
    v.push((vec![], vec!["1", "2"]));
    v.push((vec![[0, 1]], vec!["1"]));
    v.push((vec![[0, 1], [1, 2]], vec![]));
    v.push((vec![[1, 2], [2, 3]], vec![]));
    v
}

/// Edges of the ball as indices into [`kronecker_ball`].
const KRONECKER_EDGES: [(usize, usize); 10] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 6), (6, 7), (9, 8), (8, 7), (10, 9)];

fn kronecker(q: &Arc<Quiver>, depth: usize) -> Result<CheckResult, CatalogError> {
    let depth = depth.max(KRONECKER_DEPTH);
    let e = Engine::for_quiver(q.clone(), depth)?;
    let ball = e.mutation_ball(&e.regular_pair()?, KRONECKER_DEPTH)?;
    let key = |p: &Pair| -> (Vec<DimVector>, Vec<String>) {
        let mut d: Vec<DimVector> = p.modules.iter().map(|&m| e.pool().module(m).dims.clone()).collect();
        d.sort();
        (d, p.projectives.iter().map(|&v| e.quiver().vertex_id(v).to_string()).collect())
    };
    let expected: Vec<(Vec<DimVector>, Vec<String>)> = kronecker_ball()
        .into_iter()
        .map(|(m, p)| {
            let mut d: Vec<DimVector> = m.iter().map(|x| DimVector(x.to_vec())).collect();
            d.sort();
            (d, p.into_iter().map(String::from).collect())
        })
        .collect();
    let found: Vec<_> = ball.vertices.iter().map(key).collect();
    let vertices_ok = found.len() == expected.len() && expected.iter().all(|x| found.contains(x));
    let expected_edges: BTreeSet<_> = KRONECKER_EDGES.iter().map(|&(a, b)| (expected[a].clone(), expected[b].clone())).collect();
    let found_edges: BTreeSet<_> = ball.edges.iter().map(|ed| (found[ed.from].clone(), found[ed.to].clone())).collect();
    let edges_ok = expected_edges == found_edges;
    let report = e.saturation_report(&ball)?;
    let comps = e.component_analysis(&ball, &report);
    let sub = ball.tilting_subquiver();
    let paths_ok = comps.len() == 2
        && sub.degrees().iter().all(|&(o, i)| o <= 1 && i <= 1)
        && sub.components().iter().all(|c| sub.edges.iter().filter(|ed| c.contains(&ed.from)).count() + 1 == c.len());
    let a = ball.index_of(&e.regular_pair()?);
    let da = ball.index_of(&e.coregular_pair()?);
    let rays_ok = comps.iter().all(|c| c.non_saturated.len() == 1 && c.indeterminate == 0)
        && {
            let ns: BTreeSet<usize> = comps.iter().flat_map(|c| c.non_saturated.clone()).collect();
            a.is_some() && da.is_some() && ns == [a.unwrap(), da.unwrap()].into_iter().collect()
        };
    let chain: Vec<String> = ball.vertices.iter().map(|p| e.pair_label(p)).collect();
    let detail = json!({
        "vertices": ball.len(),
        "edges": ball.edges.len(),
        "chain_matches": vertices_ok && edges_ok,
        "tilting_components": comps.iter().map(|c| c.vertices.len()).collect::<Vec<_>>(),
        "non_saturated_per_component": comps.iter().map(|c| c.non_saturated.len()).collect::<Vec<_>>(),
    });
    let ok = vertices_ok && edges_ok && paths_ok && rays_ok;
    Ok(outcome(Check::Kronecker, ok, detail, Some(json!({ "ball": chain }))))
}

/// The Coxeter matrix of `1 <= 2 <- 3 -> 4`.
pub const W4_COXETER: [[i64; 4]; 4] = [[-1, 2, 0, 0], [-2, 3, 1, 0], [-2, 3, 1, -1], [0, 0, 1, -1]];

fn coxeter(e: &Engine, opts: &VerifyOptions) -> CheckResult {
    let q = e.quiver();
    let phi = q.coxeter_matrix();
    let matrix_ok = phi.rows.iter().zip(W4_COXETER.iter()).all(|(r, s)| r.as_slice() == s.as_slice());
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let mut fourth_bad = None;
    for _ in 0..20 {
        let d = vec![rng.gen_range(0..50i64), rng.gen_range(0..50i64), 0, 0];
        let image = phi.apply(&d);
        if image[3] != 0 {
            fourth_bad = Some(json!({ "d": d, "phi_d": image }));
            break;
        }
    }
    let inv = q.inverse_coxeter_matrix();
    let pool = e.pool();
    let mut tau_bad = None;
    let mut compared = 0;
    for (i, m) in pool.modules().iter().enumerate() {
        let d = m.dims.to_i64();
        let expect_tau = if m.projective_at.is_some() { vec![0; q.n()] } else { phi.apply(&d) };
        let got_tau = pool.tau_dims(i).to_i64();
        let expect_inv = if m.injective_at.is_some() { vec![0; q.n()] } else { inv.apply(&d) };
        let got_inv = tau_inverse(&m.rep).dim_vector().to_i64();
        compared += 1;
        if (got_tau != expect_tau || got_inv != expect_inv) && tau_bad.is_none() {
            tau_bad = Some(json!({ "module": m.dims, "tau": got_tau, "phi": expect_tau, "tau_inverse": got_inv, "phi_inverse": expect_inv }));
        }
    }
    let ok = matrix_ok && fourth_bad.is_none() && tau_bad.is_none();
    let detail = json!({ "matrix": phi.rows, "matrix_matches": matrix_ok, "random_vectors": 20, "orbit_modules": compared });
    outcome(Check::Coxeter, ok, detail, fourth_bad.or(tau_bad).or(Some(json!({ "matrix": phi.rows }))))
}

fn oracles(e: &Engine, opts: &VerifyOptions) -> CheckResult {
    let pool = e.pool();
    let q = e.quiver();
    let len = pool.len();
    let mut witness: Option<Value> = None;
    let mut note = |w: Value| {
        if witness.is_none() {
            witness = Some(w);
        }
    };
    for x in 0..len {
        for y in 0..len {
            let (dx, dy) = (&pool.module(x).dims, &pool.module(y).dims);
            let euler = q.euler_form_dims(dx, dy).expect("same quiver");
            if euler != pool.hom(x, y) as i64 - pool.ext(x, y) as i64 {
                note(json!({ "euler": [dx, dy], "form": euler, "hom": pool.hom(x, y), "ext": pool.ext(x, y) }));
            }
            if hom_dim(e.module_rep(x), e.module_rep(y)) != pool.hom(x, y) {
                note(json!({ "hom_routes": [dx, dy] }));
            }
        }
        if pool.hom_tau(x, x) != pool.ext(x, x) {
            note(json!({ "ar_duality": pool.module(x).dims, "hom_tau": pool.hom_tau(x, x), "ext": pool.ext(x, x) }));
        }
        if let Some(t) = pool.tau(x) {
            if pool.tau_inverse(t) != Some(x) {
                note(json!({ "tau_inverse_tau": pool.module(x).dims }));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(opts.seed);
    for _ in 0..100 {
        let k = rng.gen_range(1..=4);
        let picks: Vec<usize> = (0..k).map(|_| rng.gen_range(0..len)).collect();
        let sum = direct_sum(&picks.iter().map(|&i| e.module_rep(i)).collect::<Vec<_>>()).module;
        let mut expect = vec![0usize; len];
        for &i in &picks {
            expect[i] += 1;
        }
        match pool.decompose(&sum) {
            Ok(m) if m == expect => {}
            other => note(json!({ "round_trip": picks.iter().map(|&i| &pool.module(i).dims).collect::<Vec<_>>(), "got": other.ok() })),
        }
    }
    let detail = json!({ "modules": len, "pairs": len * len, "round_trips": 100 });
    outcome(Check::Oracles, witness.is_none(), detail, witness)
}
