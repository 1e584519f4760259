//! Acceptance criteria 1–10, one line each.
//!
//! Runs as a plain binary (`harness = false`) so the lines are always shown:
//!
//! ```text
//! cargo test -p clutterlab --test acceptance            # all criteria
//! cargo test -p clutterlab --test acceptance -- 2 7b    # a selection
//! CLUTTERLAB_BLESS=1 cargo test … --test acceptance     # rewrite golden files
//! ```

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clutterlab::certificate::{check, conjecture_batch, Property, Verdict};
use clutterlab::combinat::iso::graphs_up_to_iso;
use clutterlab::combinat::{
    blocker, clique_clutter, has_konig, is_meyniel, is_meyniel_via_hoang, is_perfect_small,
    Clutter, SimpleGraph,
};
use clutterlab::ehrhart::{a_invariant_interior, analyze, is_ehrhart_clutter};
use clutterlab::families::{
    enumerate_unmixed_bipartite, example_3_9, graph_clutter, meyniel_batch,
    search_nonnormal_chordal, sharpness_clutter, Family, Instance, NonNormalHit,
    DEFAULT_SEARCH_BUDGET,
};
use clutterlab::ideals::{
    closure_power, edge_ideal, is_normal_upto, is_ntf_upto, power, symbolic_power,
    NewtonPolyhedron, UptoVerdict,
};
use clutterlab::kernel::ivec;
use clutterlab::tdi::{
    is_ideal_clutter, is_mfmc, prop42_check, thm41_check, wpgt_crosscheck, LinearSystem, TdiVerdict,
};
use clutterlab::Limits;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lim() -> Limits {
    Limits::default()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("golden")
        .join(name)
}

/// Compares against a frozen file, or writes it under `CLUTTERLAB_BLESS=1`.
fn against_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden(name);
    if std::env::var_os("CLUTTERLAB_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).map_err(|e| e.to_string())?;
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let frozen = std::fs::read_to_string(&path)
        .map_err(|e| format!("golden file {}: {e}", path.display()))?;
    ensure!(
        frozen == actual,
        "output differs from golden file {}",
        path.display()
    );
    Ok(())
}

fn cl(n: usize, edges: &[&[usize]]) -> Clutter {
    Clutter::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    ensure!(
        e <= limit,
        "{what} took {:.1}s, limit {}s",
        e.as_secs_f64(),
        limit.as_secs()
    );
    Ok(())
}

fn c1() -> Outcome {
    let t = Instant::now();
    let (g, c) = example_3_9();
    ensure!(
        is_perfect_small(&g, &lim()).unwrap().perfect,
        "L(K_2,4) not perfect"
    );
    ensure!(is_ideal_clutter(&c, &lim()).unwrap().integral, "not ideal");
    ensure!(
        is_mfmc(&c, &lim()).unwrap().verdict == TdiVerdict::Tdi,
        "not MFMC"
    );
    let e = is_ehrhart_clutter(&c, &lim()).unwrap();
    ensure!(!e.is_ehrhart, "reported Ehrhart");
    let w = e.witness.ok_or("no witness")?;
    ensure!(w == ivec(&[1, 1, 1, 1, 1, 1, 1, 1, 3]), "witness {w:?}");
    within(t, Duration::from_secs(10), "example")?;
    Ok(format!(
        "perfect, ideal, MFMC, not Ehrhart; gap (1,…,1,3) with 9 entries; {:.2}s",
        t.elapsed().as_secs_f64()
    ))
}

fn c2() -> Outcome {
    let t = Instant::now();
    let mut seen = Vec::new();
    for (d, g) in [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)] {
        let c = sharpness_clutter(d, g).unwrap();
        let a = analyze(&c, &lim()).unwrap();
        let interior = a_invariant_interior(&c, &lim()).unwrap();
        ensure!(a.is_ehrhart, "({d},{g}) not Ehrhart");
        ensure!(
            a.a_invariant == -(g as i64),
            "({d},{g}) a = {}",
            a.a_invariant
        );
        ensure!(
            interior == a.a_invariant,
            "({d},{g}) routes {} vs {interior}",
            a.a_invariant
        );
        let reg = ((d - 1) * (g - 1)) as i64;
        ensure!(
            a.regularity == reg,
            "({d},{g}) reg = {} ≠ {reg}",
            a.regularity
        );
        seen.push(format!(
            "({d},{g}):a={},reg={}",
            a.a_invariant, a.regularity
        ));
    }
    within(t, Duration::from_secs(60), "sharpness family")?;
    Ok(format!(
        "{}; {:.2}s",
        seen.join(" "),
        t.elapsed().as_secs_f64()
    ))
}

fn c3() -> Outcome {
    let t = Instant::now();
    let graphs = enumerate_unmixed_bipartite(8).unwrap();
    let mut worst = i64::MIN;
    for g in &graphs {
        let b = blocker(&graph_clutter(g).unwrap());
        let a = analyze(&b, &lim()).unwrap();
        ensure!(a.is_ehrhart, "blocker of {g:?} not Ehrhart");
        let n = g.n() as i64;
        ensure!(
            2 * a.regularity <= n - 2,
            "{g:?}: reg {} > n/2 − 1",
            a.regularity
        );
        worst = worst.max(2 * a.regularity - (n - 2));
    }
    within(t, Duration::from_secs(600), "bipartite sweep")?;
    Ok(format!(
        "{} connected unmixed bipartite graphs (n ≤ 8), 0 violations, max 2·reg − (n−2) = {worst}; {:.2}s",
        graphs.len(),
        t.elapsed().as_secs_f64()
    ))
}

fn c4() -> Outcome {
    let t = Instant::now();
    let batch = meyniel_batch(200, 8, 2024).unwrap();
    let (mut meyniel, mut ideal_count, mut failures) = (0, 0, 0);
    for g in &batch {
        if !is_meyniel(g, &lim()).unwrap().meyniel {
            continue;
        }
        meyniel += 1;
        let c = clique_clutter(g, &lim()).unwrap();
        ensure!(
            is_ehrhart_clutter(&c, &lim()).unwrap().is_ehrhart,
            "{g:?}: clique clutter not Ehrhart"
        );
        let ideal = is_ideal_clutter(&c, &lim()).unwrap().integral;
        let mfmc = is_mfmc(&c, &lim()).unwrap();
        ensure!(
            mfmc.verdict != TdiVerdict::Undecided,
            "{g:?}: MFMC undecided"
        );
        let mfmc = mfmc.verdict == TdiVerdict::Tdi;
        let ntf = is_ntf_upto(&c, 3, &lim()).unwrap();
        let closure = is_normal_upto(&c, 3, &lim()).unwrap().closure_is_symbolic;
        ensure!(ideal == mfmc, "{g:?}: ideal {ideal} but MFMC {mfmc}");
        if ideal {
            ideal_count += 1;
            ensure!(
                ntf.holds() && closure.holds(),
                "{g:?}: ideal but {ntf:?} / {closure:?}"
            );
        } else {
            failures += usize::from(!ntf.holds()) + usize::from(!closure.holds());
        }
    }
    ensure!(
        meyniel == batch.len(),
        "only {meyniel} of {} batch members are Meyniel",
        batch.len()
    );
    Ok(format!(
        "{meyniel} Meyniel graphs, all clique clutters Ehrhart, {ideal_count} ideal ⇔ MFMC, {failures} power failures all on non-ideal; {:.2}s",
        t.elapsed().as_secs_f64()
    ))
}

fn c5() -> Outcome {
    let t = Instant::now();
    let mut total = 0;
    for n in 1..=6 {
        for g in graphs_up_to_iso(n) {
            let r = wpgt_crosscheck(&g, &lim()).unwrap();
            ensure!(r.agree, "disagreement on {g:?}: {r:?}");
            total += 1;
        }
    }
    within(t, Duration::from_secs(900), "perfect-graph sweep")?;
    Ok(format!(
        "{total} graphs (n ≤ 6), perfect ⇔ Stab integral ⇔ TDI; {:.2}s",
        t.elapsed().as_secs_f64()
    ))
}

fn c6() -> Outcome {
    let t = Instant::now();
    let (mut total, mut yes) = (0, 0);
    for n in 1..=7 {
        for g in graphs_up_to_iso(n) {
            let a = is_meyniel(&g, &lim()).unwrap().meyniel;
            let b = is_meyniel_via_hoang(&g).unwrap();
            ensure!(a == b, "disagreement on {g:?}: cycles {a}, Hoàng {b}");
            total += 1;
            yes += usize::from(a);
        }
    }
    Ok(format!(
        "{total} graphs (n ≤ 7), {yes} Meyniel, 0 disagreements; {:.2}s",
        t.elapsed().as_secs_f64()
    ))
}

/// `n ≤ 4` rows, `q ≤ 6` nonzero columns, entries in `lo..=hi`.
fn random_system(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> LinearSystem {
    let n = rng.gen_range(1..=4usize);
    let q = rng.gen_range(1..=6usize);
    let mut cols = Vec::new();
    while cols.len() < q {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        if c.iter().any(|&x| x != 0) {
            cols.push(ivec(&c));
        }
    }
    let w = ivec(&(0..q).map(|_| rng.gen_range(lo..=hi)).collect::<Vec<_>>());
    LinearSystem::new(cols, w).unwrap()
}

const SYSTEMS: usize = 500;

fn c7a() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let (mut tdi, mut both, mut undecided) = (0, 0, 0);
    // TDI with integral P but H(A,w) not a Hilbert basis: the converse failing
    let mut converse: Vec<LinearSystem> = Vec::new();
    for k in 0..2 * SYSTEMS {
        let lo = if k < SYSTEMS { -3 } else { 0 };
        let s = random_system(&mut rng, lo, 3);
        let r = thm41_check(&s, &lim()).unwrap();
        ensure!(
            r.implication_respected,
            "system {k}: integral, Hilbert basis, not TDI: {s:?}"
        );
        if r.tdi == TdiVerdict::Tdi {
            tdi += 1;
            ensure!(
                r.integral != Some(false),
                "system {k}: TDI but not integral: {s:?}"
            );
            if r.integral == Some(true) && !r.lifted_hilbert_basis {
                converse.push(s);
            }
        }
        undecided += usize::from(r.tdi == TdiVerdict::Undecided);
        both += usize::from(r.integral == Some(true) && r.lifted_hilbert_basis);
    }
    ensure!(undecided == 0, "{undecided} systems undecided");
    let smallest = converse
        .iter()
        .min_by_key(|s| (s.n(), s.columns.len(), format!("{:?}", (&s.columns, &s.w))))
        .map(|s| {
            let cols: Vec<String> = s.columns.iter().map(|c| format!("{c:?}")).collect();
            format!(" (smallest: columns {}, w {:?})", cols.join(" "), s.w)
        })
        .unwrap_or_default();
    Ok(format!(
        "{} systems ([−3,3] and [0,3]): {both} with both hypotheses, all TDI; {tdi} TDI, all integral; \
         converse fails on {}{smallest}; {:.2}s",
        2 * SYSTEMS,
        converse.len(),
        t.elapsed().as_secs_f64()
    ))
}

fn c7b() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut disagreements = Vec::new();
    for k in 0..SYSTEMS {
        let s = random_system(&mut rng, 0, 3);
        let r = prop42_check(&s, &lim()).unwrap();
        ensure!(r.tdi != TdiVerdict::Undecided, "system {k} undecided");
        if !r.agree {
            disagreements.push((k, s, r));
        }
    }
    // the smallest instance of the failure mode seen above
    let tiny = prop42_check(
        &LinearSystem::new(vec![ivec(&[1])], ivec(&[2])).unwrap(),
        &lim(),
    )
    .unwrap();
    ensure!(
        disagreements.is_empty(),
        "{} of {SYSTEMS} nonnegative systems disagree, e.g. system {}: TDI={:?}, integral={}, Hilbert basis={} (gap {:?}); \
         already A=(1), w=(2): TDI={:?}, integral={}, H Hilbert basis={} (gap {:?})",
        disagreements.len(),
        disagreements[0].0,
        disagreements[0].2.tdi,
        disagreements[0].2.integral,
        disagreements[0].2.hilbert_basis,
        disagreements[0].2.witness,
        tiny.tdi,
        tiny.integral,
        tiny.hilbert_basis,
        tiny.witness
    );
    Ok(format!(
        "{SYSTEMS} nonnegative systems, two-sided agreement; {:.2}s",
        t.elapsed().as_secs_f64()
    ))
}

fn c8() -> Outcome {
    let tri = cl(3, &[&[0, 1], &[1, 2], &[0, 2]]);
    let i = edge_ideal(&tri);
    ensure!(
        symbolic_power(&tri, 2, &lim())
            .unwrap()
            .contains(&[1, 1, 1])
            .unwrap(),
        "(1,1,1) ∉ I^(2)"
    );
    ensure!(
        !power(&i, 2).unwrap().contains(&[1, 1, 1]).unwrap(),
        "(1,1,1) ∈ I²"
    );
    ensure!(
        closure_power(&i, 2, &lim()).unwrap() == power(&i, 2).unwrap(),
        "closure(I²) ≠ I²"
    );
    ensure!(
        !is_ideal_clutter(&tri, &lim()).unwrap().integral,
        "triangle ideal"
    );
    ensure!(
        is_mfmc(&tri, &lim()).unwrap().verdict == TdiVerdict::NotTdi,
        "triangle MFMC"
    );
    ensure!(!has_konig(&tri), "triangle König");
    let c4 = cl(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
    ensure!(
        is_ntf_upto(&c4, 3, &lim()).unwrap() == UptoVerdict::HoldsUpTo { r: 3 },
        "4-cycle not NTF"
    );
    ensure!(
        is_ideal_clutter(&c4, &lim()).unwrap().integral,
        "4-cycle not ideal"
    );
    ensure!(
        is_mfmc(&c4, &lim()).unwrap().verdict == TdiVerdict::Tdi,
        "4-cycle not MFMC"
    );
    ensure!(has_konig(&c4), "4-cycle not König");
    Ok("triangle: xyz ∈ I^(2) \\ I², closure(I²) = I², not ideal/MFMC/König; 4-cycle: NTF ≤ 3, ideal, MFMC, König".into())
}

/// The search is the slowest step, so criteria 9 and 10 share one run.
fn search_hit() -> &'static NonNormalHit {
    static HIT: OnceLock<NonNormalHit> = OnceLock::new();
    HIT.get_or_init(|| {
        search_nonnormal_chordal(13, DEFAULT_SEARCH_BUDGET, 0, &lim())
            .unwrap()
            .expect("search found no instance within budget")
    })
}

fn c9() -> Outcome {
    let t = Instant::now();
    let hit = search_hit();
    let g: &SimpleGraph = &hit.graph;
    ensure!(g.is_chordal(), "hit not chordal");
    ensure!(is_meyniel(g, &lim()).unwrap().meyniel, "hit not Meyniel");
    ensure!(
        is_perfect_small(g, &lim()).unwrap().perfect,
        "hit not perfect"
    );
    let c = clique_clutter(g, &lim()).unwrap();
    let i = edge_ideal(&c);
    let newton = NewtonPolyhedron::of(&i, &lim()).unwrap();
    ensure!(
        newton.contains(&hit.witness, hit.power),
        "witness outside the closure"
    );
    ensure!(
        !power(&i, hit.power)
            .unwrap()
            .contains(&hit.witness)
            .unwrap(),
        "witness inside I^i"
    );
    let frozen = serde_json::to_string_pretty(hit).unwrap() + "\n";
    against_golden("example-3-10-search.json", &frozen)?;
    Ok(format!(
        "{}-vertex chordal graph ({} cliques) after {} candidates, fails normality at i={} with {:?}; golden file matches; {:.2}s",
        g.n(),
        c.edges().len(),
        hit.examined,
        hit.power,
        hit.witness,
        t.elapsed().as_secs_f64()
    ))
}

fn c10() -> Outcome {
    let run = || -> Vec<String> {
        let mut out = Vec::new();
        let rows =
            conjecture_batch(&[Family::Chordal, Family::Bipartite], 7, 5, 10, &lim()).unwrap();
        out.extend(rows.iter().map(|r| r.certificate.emit()));
        let (_, c) = example_3_9();
        let cert = check(Property::Ehrhart, &Instance::Clutter(c), 3, &lim()).unwrap();
        out.push(cert.emit());
        out.extend(
            meyniel_batch(20, 8, 2024)
                .unwrap()
                .iter()
                .map(|g| format!("{g:?}")),
        );
        out
    };
    let a = run();
    let b = run();
    ensure!(a == b, "certificates differ between runs");
    ensure!(
        a.iter().all(|c| !c.contains("timing")),
        "timing leaked into a certificate"
    );
    let k24 = a.iter().find(|c| c.contains("check ehrhart")).unwrap();
    against_golden("line-k24.ehrhart.cert.json", k24)?;
    let hit = serde_json::to_string_pretty(search_hit()).unwrap() + "\n";
    against_golden("example-3-10-search.json", &hit)?;
    ensure!(
        check(
            Property::Ehrhart,
            &Instance::Clutter(example_3_9().1),
            3,
            &lim()
        )
        .unwrap()
        .verdict
            == Verdict::Fails,
        "verdict changed"
    );
    Ok(format!(
        "{} certificates byte-identical across runs and with golden files",
        a.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1", "line graph of K_2,4 reproduction", c1),
        ("2", "sharpness family exactness", c2),
        ("3", "unmixed bipartite regularity sweep", c3),
        ("4", "Meyniel equivalence suite", c4),
        ("5", "weak perfect graph cross-check", c5),
        ("6", "Meyniel characterization differential", c6),
        ("7a", "integral + Hilbert basis ⇒ TDI; TDI ⇒ integral", c7a),
        ("7b", "nonnegative-system two-sided equivalence", c7b),
        ("8", "classical witnesses", c8),
        ("9", "non-normal chordal clique clutter", c9),
        ("10", "determinism", c10),
    ];
    let selected: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = Vec::new();
    for (id, name, f) in criteria {
        if !selected.is_empty() && !selected.iter().any(|s| s == id) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {id:>3} PASS  {name}: {detail}"),
            Err(why) => {
                println!("criterion {id:>3} FAIL  {name}: {why}");
                failed.push(id);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {}", failed.join(", "));
        std::process::exit(1);
    }
}
