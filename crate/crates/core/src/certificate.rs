//! Instance files, property checks and their certificates.
//!
//! Instances are JSON objects tagged by `kind`:
//!
//! ```text
//! {"kind":"graph","n":5,"edges":[[0,1],…]}
//! {"kind":"clutter","n":3,"edges":[[0,1],…]}
//! {"kind":"system","columns":[[1,0],…],"w":[1,…]}
//! ```
//!
//! A certificate is a pretty-printed JSON object whose bytes depend only on the
//! canonical instance, the command and the library version; wall-clock timing
//! is recorded only on request.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::combinat::{
    clique_clutter, covering_number, has_konig, is_meyniel, is_perfect_small, is_uniform,
    is_unmixed, max_disjoint_edges, minimal_covers, Clutter, SimpleGraph,
};
use crate::ehrhart::{
    a_invariant_interior, analyze, check_theorem22, is_ehrhart_clutter, EhrhartAnalysis,
};
use crate::error::{usage, Error, Result};
use crate::families::{Family, Instance};
use crate::ideals::{is_normal_upto, is_ntf_upto, UptoVerdict};
use crate::kernel::{IntVec, Rational};
use crate::limits::Limits;
use crate::tdi::{
    covering_system, is_ideal_clutter, is_mfmc, is_tdi, stab_system, LinearSystem, TdiCertificate,
    TdiVerdict,
};

pub const SCHEMA_VERSION: u32 = 1;

/// The on-disk form of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InstanceFile {
    Graph { n: usize, edges: Vec<[usize; 2]> },
    Clutter { n: usize, edges: Vec<Vec<usize>> },
    System { columns: Vec<Vec<i64>>, w: Vec<i64> },
}

impl InstanceFile {
    /// Parses and validates; syntax and type errors carry their line and column.
    pub fn parse(text: &str) -> Result<InstanceFile> {
        // a flat struct keeps serde_json's positions, which a tagged enum loses
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            kind: String,
            n: Option<usize>,
            edges: Option<Vec<Vec<usize>>>,
            columns: Option<Vec<Vec<i64>>>,
            w: Option<Vec<i64>>,
        }
        let raw: Raw = serde_json::from_str(text)
            .map_err(|e| Error::Usage(format!("line {} column {}: {e}", e.line(), e.column())))?;
        let missing = |what: &str| Error::Usage(format!("{} file without \"{what}\"", raw.kind));
        let file = match raw.kind.as_str() {
            "graph" | "clutter" => {
                if raw.columns.is_some() || raw.w.is_some() {
                    return usage(format!("{} files take only \"n\" and \"edges\"", raw.kind));
                }
                let n = raw.n.ok_or_else(|| missing("n"))?;
                let edges = raw.edges.clone().ok_or_else(|| missing("edges"))?;
                if raw.kind == "graph" {
                    let pairs = edges
                        .iter()
                        .enumerate()
                        .map(|(i, e)| match e[..] {
                            [a, b] => Ok([a, b]),
                            _ => usage(format!("graph edge {i} does not have two endpoints")),
                        })
                        .collect::<Result<_>>()?;
                    InstanceFile::Graph { n, edges: pairs }
                } else {
                    InstanceFile::Clutter { n, edges }
                }
            }
            "system" => {
                if raw.n.is_some() || raw.edges.is_some() {
                    return usage("system files take only \"columns\" and \"w\"");
                }
                InstanceFile::System {
                    columns: raw.columns.clone().ok_or_else(|| missing("columns"))?,
                    w: raw.w.clone().ok_or_else(|| missing("w"))?,
                }
            }
            other => {
                return usage(format!(
                    "unknown kind {other:?}; expected graph, clutter or system"
                ))
            }
        };
        file.to_instance()?;
        Ok(file.canonical())
    }

    /// Sorted edges (and edge members); systems are kept in column order.
    pub fn canonical(&self) -> InstanceFile {
        match self {
            InstanceFile::Graph { n, edges } => {
                let mut e: Vec<[usize; 2]> =
                    edges.iter().map(|&[a, b]| [a.min(b), a.max(b)]).collect();
                e.sort();
                InstanceFile::Graph { n: *n, edges: e }
            }
            InstanceFile::Clutter { n, edges } => {
                let mut e: Vec<Vec<usize>> = edges
                    .iter()
                    .map(|x| {
                        let mut x = x.clone();
                        x.sort();
                        x
                    })
                    .collect();
                e.sort();
                InstanceFile::Clutter { n: *n, edges: e }
            }
            s => s.clone(),
        }
    }

    pub fn to_instance(&self) -> Result<Instance> {
        Ok(match self {
            InstanceFile::Graph { n, edges } => Instance::Graph(SimpleGraph::new(
                *n,
                edges.iter().map(|&[a, b]| (a, b)).collect(),
            )?),
            InstanceFile::Clutter { n, edges } => {
                Instance::Clutter(Clutter::raw(*n, edges.clone())?)
            }
            InstanceFile::System { columns, w } => Instance::System(LinearSystem::new(
                columns
                    .iter()
                    .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                    .collect(),
                w.iter().map(|&x| BigInt::from(x)).collect(),
            )?),
        })
    }

    pub fn from_instance(inst: &Instance) -> Result<InstanceFile> {
        let small = |x: &BigInt| {
            x.to_i64()
                .ok_or_else(|| Error::Usage(format!("entry {x} does not fit the file format")))
        };
        Ok(match inst {
            Instance::Graph(g) => InstanceFile::Graph {
                n: g.n(),
                edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            },
            Instance::Clutter(c) => InstanceFile::Clutter {
                n: c.n(),
                edges: c.edges().to_vec(),
            },
            Instance::System(s) => InstanceFile::System {
                columns: s
                    .columns
                    .iter()
                    .map(|c| c.iter().map(small).collect())
                    .collect::<Result<_>>()?,
                w: s.w.iter().map(small).collect::<Result<_>>()?,
            },
        }
        .canonical())
    }

    /// Compact canonical JSON, one line.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.canonical()).expect("instances serialize")
    }

    /// Hex SHA-256 of [`InstanceFile::to_json`].
    pub fn digest(&self) -> String {
        Sha256::digest(self.to_json().as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Undecided,
}

impl Verdict {
    /// `0`, `1` or `2`.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Holds => 0,
            Verdict::Fails => 1,
            Verdict::Undecided => 2,
        }
    }

    fn of(b: bool) -> Verdict {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetFlags {
    pub exhausted: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub command: String,
    pub instance_digest: String,
    pub verdict: Verdict,
    pub witnesses: BTreeMap<String, Value>,
    pub invariants: BTreeMap<String, Value>,
    pub budget: BudgetFlags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Certificate {
    fn new(command: String, digest: String) -> Self {
        Certificate {
            schema_version: SCHEMA_VERSION,
            command,
            instance_digest: digest,
            verdict: Verdict::Undecided,
            witnesses: BTreeMap::new(),
            invariants: BTreeMap::new(),
            budget: BudgetFlags::default(),
            seed: None,
            timing_ms: None,
        }
    }

    /// Pretty JSON with a trailing newline; identical inputs give identical bytes.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| {
            Error::Usage(format!(
                "certificate, line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    fn witness(&mut self, key: &str, v: Value) {
        self.witnesses.insert(key.into(), v);
    }

    fn invariant(&mut self, key: &str, v: Value) {
        self.invariants.insert(key.into(), v);
    }

    fn exhausted(&mut self, e: &Error) {
        self.verdict = Verdict::Undecided;
        self.budget.exhausted = true;
        self.budget.notes.push(e.to_string());
    }
}

/// Integers as JSON numbers when they fit `i64`, strings otherwise.
pub fn int_json(x: &BigInt) -> Value {
    x.to_i64()
        .map_or_else(|| Value::String(x.to_string()), Value::from)
}

pub fn ivec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

/// Integral rationals as numbers, the rest as `"p/q"`.
pub fn rat_json(x: &Rational) -> Value {
    if x.denom().is_one() {
        int_json(x.numer())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn rvec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

fn tdi_json(t: &TdiCertificate) -> Value {
    Value::Array(
        t.faces
            .iter()
            .map(|f| {
                let mut o = serde_json::Map::new();
                o.insert("active".into(), json!(f.active));
                o.insert("point".into(), rvec_json(&f.point));
                o.insert("hilbert_basis".into(), json!(f.hilbert_basis));
                if let Some(w) = &f.witness {
                    o.insert("witness".into(), ivec_json(w));
                }
                if let Some(n) = &f.note {
                    o.insert("note".into(), json!(n));
                }
                Value::Object(o)
            })
            .collect(),
    )
}

fn upto_json(v: &UptoVerdict) -> Value {
    match v {
        UptoVerdict::HoldsUpTo { r } => json!({ "holds_up_to": r }),
        UptoVerdict::FailsAt { i, witness } => json!({ "fails_at": i, "witness": witness }),
    }
}

/// The properties of the `check` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Ehrhart,
    Ideal,
    Mfmc,
    Tdi,
    Meyniel,
    Perfect,
    Unmixed,
    Uniform,
    Konig,
    Ntf,
    Normal,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Ehrhart,
        Property::Ideal,
        Property::Mfmc,
        Property::Tdi,
        Property::Meyniel,
        Property::Perfect,
        Property::Unmixed,
        Property::Uniform,
        Property::Konig,
        Property::Ntf,
        Property::Normal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Ehrhart => "ehrhart",
            Property::Ideal => "ideal",
            Property::Mfmc => "mfmc",
            Property::Tdi => "tdi",
            Property::Meyniel => "meyniel",
            Property::Perfect => "perfect",
            Property::Unmixed => "unmixed",
            Property::Uniform => "uniform",
            Property::Konig => "konig",
            Property::Ntf => "ntf",
            Property::Normal => "normal",
        }
    }

    pub fn parse(s: &str) -> Result<Property> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown property {s:?}")))
    }
}

/// The clutter a clutter property is evaluated on: a clutter file as given,
/// a graph through its clique clutter.
pub fn as_clutter(inst: &Instance, limits: &Limits) -> Result<Clutter> {
    match inst {
        Instance::Clutter(c) => Ok(c.clone()),
        Instance::Graph(g) => clique_clutter(g, limits),
        Instance::System(_) => usage("this property needs a graph or a clutter"),
    }
}

fn as_graph(inst: &Instance) -> Result<&SimpleGraph> {
    match inst {
        Instance::Graph(g) => Ok(g),
        _ => usage("this property needs a graph"),
    }
}

/// Power bound for `ntf` and `normal`.
pub const DEFAULT_POWER_BOUND: u32 = crate::ideals::DEFAULT_POWER_BOUND;

/// Evaluates one property. Budget exhaustion yields an undecided
/// certificate; invalid requests are usage errors.
pub fn check(prop: Property, inst: &Instance, r: u32, limits: &Limits) -> Result<Certificate> {
    let file = InstanceFile::from_instance(inst)?;
    let mut cert = Certificate::new(format!("check {}", prop.name()), file.digest());
    if matches!(prop, Property::Ntf | Property::Normal) {
        cert.invariant("power_bound", json!(r));
    }
    match evaluate(prop, inst, r, limits, &mut cert) {
        Ok(()) => Ok(cert),
        Err(e) if e.is_budget() => {
            cert.exhausted(&e);
            Ok(cert)
        }
        Err(e) => Err(e),
    }
}

fn evaluate(
    prop: Property,
    inst: &Instance,
    r: u32,
    limits: &Limits,
    cert: &mut Certificate,
) -> Result<()> {
    match prop {
        Property::Ehrhart => {
            let c = as_clutter(inst, limits)?;
            let v = is_ehrhart_clutter(&c, limits)?;
            cert.verdict = Verdict::of(v.is_ehrhart);
            if let Some(w) = v.witness {
                cert.witness("hilbert_basis_gap", ivec_json(&w));
            }
        }
        Property::Ideal => {
            let c = as_clutter(inst, limits)?;
            let rep = is_ideal_clutter(&c, limits)?;
            cert.verdict = Verdict::of(rep.integral);
            if let Some(w) = rep.witness {
                cert.witness("fractional_vertex", rvec_json(&w));
            }
        }
        Property::Mfmc | Property::Tdi => {
            let t = match (prop, inst) {
                (Property::Tdi, Instance::System(s)) => is_tdi(s, limits)?,
                (Property::Tdi, Instance::Graph(g)) => is_tdi(&stab_system(g, limits)?, limits)?,
                _ => is_mfmc(&as_clutter(inst, limits)?, limits)?,
            };
            if prop == Property::Mfmc || !matches!(inst, Instance::System(_)) {
                let s = match inst {
                    Instance::Graph(g) if prop == Property::Tdi => stab_system(g, limits)?,
                    _ => covering_system(&as_clutter(inst, limits)?),
                };
                cert.invariant("system_columns", json!(s.columns.len()));
            }
            cert.invariant("tdi_verdict", json!(t.verdict));
            cert.witness("faces", tdi_json(&t));
            cert.verdict = match t.verdict {
                TdiVerdict::Tdi | TdiVerdict::Vacuous => Verdict::Holds,
                TdiVerdict::NotTdi => Verdict::Fails,
                TdiVerdict::Undecided => {
                    cert.budget.exhausted = true;
                    cert.budget.notes.push("a face ran out of budget".into());
                    Verdict::Undecided
                }
            };
            if let Some(w) = t.witness() {
                cert.witness("semigroup_gap", ivec_json(w));
            }
        }
        Property::Meyniel => {
            let rep = is_meyniel(as_graph(inst)?, limits)?;
            cert.verdict = Verdict::of(rep.meyniel);
            if let Some(w) = rep.witness {
                cert.witness(
                    "odd_cycle",
                    json!({"vertices": w.vertices, "chords": w.chords}),
                );
            }
        }
        Property::Perfect => {
            let rep = is_perfect_small(as_graph(inst)?, limits)?;
            cert.verdict = Verdict::of(rep.perfect);
            if let Some(w) = rep.witness {
                cert.witness(
                    "odd_hole",
                    json!({"vertices": w.vertices, "antihole": w.antihole}),
                );
            }
        }
        Property::Unmixed => {
            let c = as_clutter(inst, limits)?;
            let covers = minimal_covers(&c).covers;
            cert.verdict = Verdict::of(is_unmixed(&c));
            let small = covers.iter().min_by_key(|x| x.len());
            let large = covers.iter().max_by_key(|x| x.len());
            if let (false, Some(s), Some(l)) = (is_unmixed(&c), small, large) {
                cert.witness("covers_of_different_size", json!([s, l]));
            }
            cert.invariant("minimal_covers", json!(covers.len()));
        }
        Property::Uniform => {
            let c = as_clutter(inst, limits)?;
            match is_uniform(&c) {
                Some(d) => {
                    cert.verdict = Verdict::Holds;
                    cert.invariant("d", json!(d));
                }
                None => {
                    cert.verdict = Verdict::Fails;
                    let s = c.edges().iter().min_by_key(|e| e.len());
                    let l = c.edges().iter().max_by_key(|e| e.len());
                    cert.witness("edges_of_different_size", json!([s, l]));
                }
            }
        }
        Property::Konig => {
            let c = as_clutter(inst, limits)?;
            cert.verdict = Verdict::of(has_konig(&c));
            cert.invariant("g", json!(covering_number(&c)));
            cert.invariant("max_disjoint_edges", json!(max_disjoint_edges(&c)));
        }
        Property::Ntf => {
            let c = as_clutter(inst, limits)?;
            let v = is_ntf_upto(&c, r, limits)?;
            cert.verdict = Verdict::of(v.holds());
            cert.witness("power_equals_symbolic", upto_json(&v));
        }
        Property::Normal => {
            let c = as_clutter(inst, limits)?;
            let rep = is_normal_upto(&c, r, limits)?;
            cert.verdict = Verdict::of(rep.normal.holds());
            cert.witness("closure_equals_power", upto_json(&rep.normal));
            cert.witness(
                "closure_equals_symbolic",
                upto_json(&rep.closure_is_symbolic),
            );
        }
    }
    Ok(())
}

fn analysis_json(a: &EhrhartAnalysis, cert: &mut Certificate) {
    cert.invariant("dim", json!(a.dim));
    cert.invariant("ehrhart_values", json!(a.values));
    cert.invariant("h_vector", json!(a.hvector));
    cert.invariant("ehrhart_polynomial", rvec_json(&a.polynomial));
    cert.invariant("a_invariant", json!(a.a_invariant));
    cert.invariant("regularity", json!(a.regularity));
    cert.invariant("is_ehrhart", json!(a.is_ehrhart));
    if let Some(w) = &a.witness {
        cert.witness("hilbert_basis_gap", ivec_json(w));
    }
}

/// h-vector, a-invariant by both routes, regularity, `g`, `d` and the
/// uniform/unmixed/MFMC bounds. The verdict is whether the bounds hold
/// (vacuously when their hypotheses fail).
pub fn invariants(inst: &Instance, limits: &Limits) -> Result<Certificate> {
    let file = InstanceFile::from_instance(inst)?;
    let mut cert = Certificate::new("invariants".into(), file.digest());
    let c = as_clutter(inst, limits)?;
    let run = |cert: &mut Certificate| -> Result<()> {
        let a = analyze(&c, limits)?;
        analysis_json(&a, cert);
        cert.invariant(
            "a_invariant_interior",
            json!(a_invariant_interior(&c, limits)?),
        );
        cert.invariant("g", json!(covering_number(&c)));
        if let Some(d) = is_uniform(&c) {
            cert.invariant("d", json!(d));
        }
        let t = check_theorem22(&c, limits)?;
        let mut section = json!({
            "hypotheses_met": t.hypotheses_met,
            "uniform": t.uniform,
            "unmixed": t.unmixed,
            "mfmc": t.mfmc,
        });
        if t.hypotheses_met {
            let o = section.as_object_mut().expect("object");
            o.insert("a_bound".into(), json!(t.a_bound));
            o.insert("a_within_bound".into(), json!(t.a_within_bound));
            o.insert("a_tight".into(), json!(t.a_tight));
            o.insert("reg_bound".into(), json!(t.reg_bound));
            o.insert("reg_within_bound".into(), json!(t.reg_within_bound));
            o.insert("reg_tight".into(), json!(t.reg_tight));
        }
        cert.invariant("bounds", section);
        cert.verdict = Verdict::of(t.holds);
        Ok(())
    };
    match run(&mut cert) {
        Ok(()) => Ok(cert),
        Err(e) if e.is_budget() => {
            cert.exhausted(&e);
            Ok(cert)
        }
        Err(e) => Err(e),
    }
}

/// One row of a conjecture batch: if `cl(G)` is ideal it must be MFMC.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub family: String,
    pub index: u64,
    pub instance: InstanceFile,
    pub certificate: Certificate,
}

impl ConjectureRow {
    pub fn is_counterexample(&self) -> bool {
        self.certificate.verdict == Verdict::Fails
    }
}

/// Checks "ideal ⇒ MFMC" on `count` seeded members of each family, rows
/// ordered by instance digest.
pub fn conjecture_batch(
    families: &[Family],
    max_n: usize,
    seed: u64,
    count: u64,
    limits: &Limits,
) -> Result<Vec<ConjectureRow>> {
    if max_n > 9 {
        return usage("conjecture batches are limited to 9 vertices");
    }
    use rayon::prelude::*;
    let jobs: Vec<(Family, u64)> = families
        .iter()
        .flat_map(|&f| (0..count).map(move |k| (f, k)))
        .collect();
    let mut rows: Vec<ConjectureRow> = jobs
        .par_iter()
        .map(|&(f, k)| -> Result<ConjectureRow> {
            let g = f.member(max_n, seed, k)?;
            let inst = Instance::Graph(g.clone());
            let file = InstanceFile::from_instance(&inst)?;
            let mut cert = Certificate::new("conjecture".into(), file.digest());
            cert.seed = Some(seed);
            cert.invariant("family", json!(f.name()));
            let run = |cert: &mut Certificate| -> Result<()> {
                let c = clique_clutter(&g, limits)?;
                let ideal = is_ideal_clutter(&c, limits)?;
                cert.invariant("ideal", json!(ideal.integral));
                if !ideal.integral {
                    cert.verdict = Verdict::Holds;
                    return Ok(());
                }
                let m = is_mfmc(&c, limits)?;
                cert.invariant("mfmc", json!(m.verdict));
                cert.verdict = match m.verdict {
                    TdiVerdict::Tdi | TdiVerdict::Vacuous => Verdict::Holds,
                    TdiVerdict::NotTdi => {
                        cert.witness("faces", tdi_json(&m));
                        Verdict::Fails
                    }
                    TdiVerdict::Undecided => Verdict::Undecided,
                };
                Ok(())
            };
            if let Err(e) = run(&mut cert) {
                if !e.is_budget() {
                    return Err(e);
                }
                cert.exhausted(&e);
            }
            Ok(ConjectureRow {
                family: f.name().into(),
                index: k,
                instance: file,
                certificate: cert,
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| {
        (&a.certificate.instance_digest, &a.family, a.index).cmp(&(
            &b.certificate.instance_digest,
            &b.family,
            b.index,
        ))
    });
    Ok(rows)
}

/// Instance files of a registered example.
pub fn example_instances(name: &str) -> Result<Vec<(String, Instance)>> {
    use crate::families::{complete, cycle, example_3_9, sharpness_clutter};
    let cl = |n: usize, e: &[&[usize]]| Clutter::new(n, e.iter().map(|x| x.to_vec()).collect());
    Ok(match name {
        "line-k24" => {
            let (g, c) = example_3_9();
            vec![
                ("line-k24.graph".into(), Instance::Graph(g)),
                ("line-k24.clutter".into(), Instance::Clutter(c)),
            ]
        }
        "triangle" => vec![(
            "triangle".into(),
            Instance::Clutter(cl(3, &[&[0, 1], &[1, 2], &[0, 2]])?),
        )],
        "four-cycle" => vec![(
            "four-cycle".into(),
            Instance::Clutter(cl(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])?),
        )],
        "c5" => vec![("c5".into(), Instance::Graph(cycle(5)?))],
        "k4" => vec![("k4".into(), Instance::Graph(complete(4)?))],
        "example-3-10" => vec![("example-3-10".into(), Instance::Graph(example_3_10_graph()))],
        other => {
            if let Some(rest) = other.strip_prefix("sharpness-") {
                let parts: Vec<usize> = rest
                    .split('-')
                    .map(|p| p.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Usage(format!("unknown example {other:?}")))?;
                if let [d, g] = parts[..] {
                    return Ok(vec![(
                        other.into(),
                        Instance::Clutter(sharpness_clutter(d, g)?),
                    )]);
                }
            }
            return usage(format!(
                "unknown example {other:?}; known: {}",
                EXAMPLE_NAMES.join(", ")
            ));
        }
    })
}

pub const EXAMPLE_NAMES: [&str; 7] = [
    "line-k24",
    "triangle",
    "four-cycle",
    "c5",
    "k4",
    "example-3-10",
    "sharpness-D-G",
];

/// The 13-vertex chordal graph: two triangulated hexagons (each a triangle
/// with an ear on every side) joined through one middle vertex.
pub fn example_3_10_graph() -> SimpleGraph {
    // a b c d e f = 0..6, middle m = 6, g h i j k l = 7..13
    let hexagon = |o: usize| {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (o + i, o + (i + 1) % 6)).collect();
        e.extend([(o + 1, o + 3), (o + 3, o + 5), (o + 5, o + 1)]);
        e
    };
    let mut e = hexagon(0);
    e.extend(hexagon(7).into_iter().map(|(a, b)| {
        // right hexagon starts at g = 7 with its inner triangle on g, i, k
        let r = |v: usize| 7 + (v - 7 + 5) % 6;
        (r(a), r(b))
    }));
    e.push((3, 6));
    e.push((6, 7));
    SimpleGraph::new(13, e).expect("valid graph")
}

/// The default certificate written next to an example instance: invariants
/// for clutters, perfection for graphs.
pub fn example_certificate(inst: &Instance, limits: &Limits) -> Result<Certificate> {
    match inst {
        Instance::Clutter(_) => invariants(inst, limits),
        Instance::Graph(_) => check(Property::Perfect, inst, DEFAULT_POWER_BOUND, limits),
        Instance::System(_) => check(Property::Tdi, inst, DEFAULT_POWER_BOUND, limits),
    }
}

/// For tests and certificates: a vector as plain `i64`s.
pub fn small_vec(v: &IntVec) -> Option<Vec<i64>> {
    v.iter().map(ToPrimitive::to_i64).collect()
}
