mod cache;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use cache::Cache;
use tables::Format;
use tqd_core::classify::{aut_orbits, automorphism_edges, certify, extension_edges, index_two_sweep, Catalog, DoubleLabel, Entry, Order8, Provenance};
use tqd_core::cohomology::{h3_group, is_dependent, support};
use tqd_core::double::{DoubleTensors, Report};
use tqd_core::groups::parse_group;
use tqd_core::invariants::{fingerprint, float_fingerprint, fs_exponent_cocycle, Fingerprint};
use tqd_core::representations::{characters, decompose_with};
use tqd_core::Cyc;

const VERIFICATION_FAILED: u8 = 2;
const INCONSISTENT: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    FloatSnap,
}

#[derive(Parser)]
#[command(name = "tqd", version, about = "Twisted quantum doubles of groups of order 8")]
struct Cli {
    #[arg(long, value_enum, default_value = "exact", global = true)]
    mode: Mode,
    /// Snapping tolerance in float-snap mode.
    #[arg(long, default_value_t = 1e-6, global = true)]
    tol: f64,
    /// Worker threads (0 uses every core).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 41, global = true)]
    seed: u64,
    /// Largest n tried when searching for the Frobenius-Schur exponent.
    #[arg(long, default_value_t = 64, global = true)]
    max_n: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one double and check every axiom.
    Build { label: String },
    /// Check the axioms on every double in scope.
    Verify {
        #[arg(default_value = "all")]
        scope: String,
        /// Also check the explicit equivalence maps (extension twists and a seeded index-2 sweep).
        #[arg(long)]
        maps: bool,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Indicator tables grouped by Frobenius-Schur exponent.
    Tables {
        #[arg(default_value = "all")]
        scope: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gauge classification certificate.
    Classify {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant factors of H^3(G, C^×).
    Cohomology { group: String },
    /// Frobenius-Schur exponents from the cocycle side.
    Fsexp {
        #[arg(default_value = "all")]
        scope: String,
    },
    /// Fingerprint of one double as JSON.
    Fingerprint { label: String },
}

struct Ctx {
    mode: Mode,
    tol: f64,
    max_n: usize,
    cache: Cache,
}

fn select<'a>(cat: &'a Catalog, scope: &str) -> Result<Vec<&'a Entry>> {
    if scope == "all" {
        return Ok(cat.entries.iter().collect());
    }
    if let Ok(o) = scope.parse::<Order8>() {
        return Ok(cat.entries.iter().filter(|e| e.label.group == o).collect());
    }
    let label: DoubleLabel = scope.parse().with_context(|| format!("unknown label {scope:?}"))?;
    let hits: Vec<&Entry> = cat.entries.iter().filter(|e| e.label == label || e.label.family() == label.to_string()).collect();
    ensure!(!hits.is_empty(), "unknown label {scope:?}");
    Ok(hits)
}

fn compute_fingerprint(ctx: &Ctx, e: &Entry) -> Result<Fingerprint> {
    let d = DoubleTensors::build(&e.cocycle)?;
    Ok(match ctx.mode {
        Mode::Exact => {
            let q = d.quasi_hopf::<Cyc>();
            fingerprint(&d, &characters(&decompose_with(&d, &q)?), ctx.max_n)?
        }
        Mode::FloatSnap => float_fingerprint(&d, ctx.max_n, ctx.tol)?.0,
    })
}

fn kind(ctx: &Ctx) -> String {
    match ctx.mode {
        Mode::Exact => format!("fingerprint/exact/{}", ctx.max_n),
        Mode::FloatSnap => format!("fingerprint/float/{}/{:e}", ctx.max_n, ctx.tol),
    }
}

/// Fingerprints in parallel; cache reads happen in workers, writes afterwards on this thread.
fn fingerprints(ctx: &Ctx, entries: &[&Entry]) -> Result<Vec<Fingerprint>> {
    let kind = kind(ctx);
    let computed: Vec<(Fingerprint, bool)> = entries
        .par_iter()
        .map(|e| match ctx.cache.get(&cache::key(&e.cocycle, &kind)) {
            Some(f) => Ok((f, false)),
            None => compute_fingerprint(ctx, e).map(|f| (f, true)),
        })
        .collect::<Result<_>>()?;
    for (e, (f, fresh)) in entries.iter().zip(&computed) {
        if *fresh {
            ctx.cache.put(&cache::key(&e.cocycle, &kind), &e.label.to_string(), &kind, f)?;
        }
    }
    Ok(computed.into_iter().map(|(f, _)| f).collect())
}

fn report_of(e: &Entry, mode: Mode) -> Result<Report> {
    let d = DoubleTensors::build(&e.cocycle)?;
    Ok(match mode {
        Mode::Exact => d.quasi_hopf::<Cyc>().verify(),
        Mode::FloatSnap => d.quasi_hopf::<Complex64>().verify(),
    })
}

fn print_report(label: &DoubleLabel, r: &Report) {
    println!("{label}");
    for a in &r.results {
        match &a.witness {
            None => println!("  {:<32} pass", a.axiom),
            Some(w) => println!("  {:<32} FAIL at {w:?}", a.axiom),
        }
    }
}

fn cmd_build(ctx: &Ctx, cat: &Catalog, label: &str) -> Result<u8> {
    ensure!(label.contains(':'), "malformed label {label:?} (expected GROUP:CLASS, e.g. Q8:g)");
    let entries = select(cat, label)?;
    ensure!(entries.len() == 1, "{label} names {} doubles; give a single class", entries.len());
    let entry = entries[0];
    let r = report_of(entry, ctx.mode)?;
    print_report(&entry.label, &r);
    Ok(if r.all_pass() { 0 } else { VERIFICATION_FAILED })
}

fn cmd_verify(ctx: &Ctx, cat: &Catalog, scope: &str, maps: bool, trials: usize, seed: u64) -> Result<u8> {
    let entries = select(cat, scope)?;
    let reports: Vec<Report> = entries.par_iter().map(|e| report_of(e, ctx.mode)).collect::<Result<_>>()?;
    let mut ok = true;
    for (e, r) in entries.iter().zip(&reports) {
        if !r.all_pass() {
            print_report(&e.label, r);
            ok = false;
        }
    }
    println!("{}/{} doubles pass every axiom", reports.iter().filter(|r| r.all_pass()).count(), reports.len());
    if maps {
        let edges = extension_edges(cat, true)?;
        let verified = edges.iter().filter(|e| e.provenance == Provenance::ExtensionVerified).count();
        println!("extension maps verified as quasi-Hopf isomorphisms: {verified}");
        let sweep = index_two_sweep(cat, trials, &mut StdRng::seed_from_u64(seed))?;
        for s in &sweep {
            println!("index-2 subgroup {:?}: {}/{} bialgebra maps pass", s.subgroup, s.passed, s.trials);
            ok &= s.passed == s.trials;
        }
    }
    Ok(if ok { 0 } else { VERIFICATION_FAILED })
}

fn cmd_tables(ctx: &Ctx, cat: &Catalog, scope: &str, format: Format, out: Option<PathBuf>) -> Result<u8> {
    let entries = select(cat, scope)?;
    let fps = fingerprints(ctx, &entries)?;
    let items: Vec<(String, Fingerprint)> = entries.iter().map(|e| e.label.family()).zip(fps).collect();
    let text = tables::render(&tables::sections(&items), format);
    match out {
        Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_classify(ctx: &Ctx, cat: &Catalog, out: Option<PathBuf>) -> Result<u8> {
    let entries: Vec<&Entry> = cat.entries.iter().collect();
    let exact = Ctx { mode: Mode::Exact, tol: ctx.tol, max_n: ctx.max_n, cache: Cache::new(None)? };
    let fps = fingerprints(if ctx.mode == Mode::Exact { ctx } else { &exact }, &entries)?;
    let profiles: Vec<tqd_core::classify::Profile> = entries
        .par_iter()
        .zip(fps.clone())
        .map(|(e, fingerprint)| {
            Ok(tqd_core::classify::Profile { label: e.label.clone(), fingerprint, fs_exponent_cocycle: fs_exponent_cocycle(&e.cocycle)? })
        })
        .collect::<Result<_>>()?;
    let mut code = 0;
    if ctx.mode == Mode::FloatSnap {
        let float = fingerprints(ctx, &entries)?;
        let bad: Vec<String> = entries.iter().zip(fps.iter().zip(&float)).filter(|(_, (a, b))| a != b).map(|(e, _)| e.label.to_string()).collect();
        if !bad.is_empty() {
            eprintln!("float-snapped fingerprints disagree with exact ones on {bad:?}");
            code = INCONSISTENT;
        }
    }
    let mut edges = extension_edges(cat, true)?;
    edges.extend(automorphism_edges(cat)?);
    let cert = certify(cat, &profiles, edges);
    let json = serde_json::to_string_pretty(&cert)?;
    match out {
        Some(p) => std::fs::write(&p, json).with_context(|| format!("writing {}", p.display()))?,
        None => println!("{json}"),
    }
    eprintln!(
        "{} doubles, {} edge classes, {} fingerprint classes, partitions coincide: {}, indicator-only groups: {}",
        cert.doubles,
        cert.edge_class_count,
        cert.fingerprint_class_count,
        cert.partitions_coincide,
        cert.indicator_groups.len()
    );
    for c in &cert.classes {
        eprintln!("  f={:<2} {}", c.fs_exponent, c.families.join(" "));
    }
    if !cert.ok() {
        eprintln!("certificate checks failed");
        code = INCONSISTENT;
    }
    Ok(code)
}

fn cmd_cohomology(spec: &str) -> Result<u8> {
    let g = match spec.parse::<Order8>() {
        Ok(o) => o.group(),
        Err(_) => parse_group(spec).with_context(|| format!("unsupported group {spec:?}"))?,
    };
    let h = h3_group(&g)?;
    println!("H^3({}) invariant factors {:?}, order {}", g.name(), h.invariants, h.order());
    if g.is_elementary_abelian_2() && g.order() <= 32 {
        let mut census = vec![0usize; g.order()];
        let (mut dep, mut ind) = (0, 0);
        for c in h.all_classes() {
            let s = support(&h.element(&c))?;
            census[s.len()] += 1;
            if s.len() == 3 {
                if is_dependent(&g, &s) {
                    dep += 1;
                } else {
                    ind += 1;
                }
            }
        }
        for (k, n) in census.iter().enumerate().filter(|(_, n)| **n > 0) {
            println!("weight {k}: {n}");
        }
        println!("weight 3 split: {dep} dependent, {ind} independent");
        if g.order() == 8 {
            let cat = Catalog::new()?;
            let sizes: Vec<usize> = aut_orbits(&cat, Order8::E8)?.iter().map(Vec::len).collect();
            println!("automorphism orbits on odd-weight classes: {sizes:?}");
        }
    }
    Ok(0)
}

fn cmd_fsexp(cat: &Catalog, scope: &str) -> Result<u8> {
    let entries = select(cat, scope)?;
    let exps: Vec<u32> = entries.par_iter().map(|e| fs_exponent_cocycle(&e.cocycle)).collect::<Result<_, _>>()?;
    let mut by_family: Vec<(String, u32)> = Vec::new();
    for (e, &f) in entries.iter().zip(&exps) {
        let fam = e.label.family();
        match by_family.iter().find(|(l, _)| *l == fam) {
            Some((_, g)) if *g != f => bail!("exponent differs inside family {fam}: {g} vs {f}"),
            Some(_) => {}
            None => by_family.push((fam, f)),
        }
    }
    for f in [16, 8, 4, 2] {
        let fams: Vec<&str> = by_family.iter().filter(|(_, g)| *g == f).map(|(l, _)| l.as_str()).collect();
        if !fams.is_empty() {
            println!("{f:>2}: {}", fams.join(" "));
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    ensure!(cli.tol > 0.0, "--tol must be positive");
    ensure!(cli.max_n >= 2, "--max-n must be at least 2");
    let ctx = Ctx { mode: cli.mode, tol: cli.tol, max_n: cli.max_n, cache: Cache::new(cli.cache_dir.as_deref())? };
    let jobs = if cli.jobs == 0 { rayon::current_num_threads() } else { cli.jobs };
    let seed = cli.seed;
    tqd_core::classify::with_jobs(jobs, move || {
        if let Cmd::Cohomology { group } = &cli.cmd {
            return cmd_cohomology(group);
        }
        let cat = Catalog::new()?;
        match cli.cmd {
            Cmd::Build { label } => cmd_build(&ctx, &cat, &label),
            Cmd::Verify { scope, maps, trials } => cmd_verify(&ctx, &cat, &scope, maps, trials, seed),
            Cmd::Tables { scope, format, out } => cmd_tables(&ctx, &cat, &scope, format, out),
            Cmd::Classify { out } => cmd_classify(&ctx, &cat, out),
            Cmd::Fsexp { scope } => cmd_fsexp(&cat, &scope),
            Cmd::Fingerprint { label } => {
                let entries = select(&cat, &label)?;
                ensure!(entries.len() == 1, "{label} names {} doubles; give a single class", entries.len());
                println!("{}", serde_json::to_string_pretty(&fingerprints(&ctx, &entries)?[0])?);
                Ok(0)
            }
            Cmd::Cohomology { .. } => unreachable!(),
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
