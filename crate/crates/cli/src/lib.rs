//! The `gqchar` command line: catalog, roots, weyl, classify, char, verify.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use gqchar_core::catalog::{build_catalog, family_rank, standard_entries, CatalogParams};
use gqchar_core::characters::{typical_character, weyl_orbit_report, DimTable, Region};
use gqchar_core::config::{load_config, load_weight, Config};
use gqchar_core::highestweight::{classify_pibar, is_finite_dim, is_typical, C10Reading, WeightCharacter};
use gqchar_core::oracle::{rank_walk, Gram, SpanMode};
use gqchar_core::rootsystem::compute_roots;
use gqchar_core::sampling::sample_characters;
use gqchar_core::weyl::generate_weyl_group;
use gqchar_core::{Error, MonomialScalar, RootSystemData};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "gqchar", version, about = "Characters of generalized quantum groups of diagonal type")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for rank computations.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Cyclotomic order `N` for reading and printing `z`.
    #[arg(long, global = true)]
    order: Option<u32>,
    #[arg(long, default_value_t = gqchar_core::rootsystem::DEFAULT_OBJECT_CAP, global = true)]
    object_cap: usize,
    #[arg(long, default_value_t = gqchar_core::highestweight::DEFAULT_STATE_CAP, global = true)]
    state_cap: usize,
    #[arg(long, default_value_t = gqchar_core::oracle::DEFAULT_WORD_CAP, global = true)]
    word_cap: usize,
    #[arg(long, default_value_t = gqchar_core::weyl::DEFAULT_WEYL_CAP, global = true)]
    weyl_cap: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List the built-in catalog entries.
    Catalog {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
    },
    /// Positive roots with `q_β`, `c_β` and real/null type.
    Roots(ConfigArg),
    /// Weyl group of the real roots; with `--weight`, the dot orbit of 0.
    Weyl {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long)]
        weight: Option<PathBuf>,
    },
    /// Finite-dimensionality verdict for a catalog entry.
    Classify {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, required_unless_present = "sample")]
        weight: Option<PathBuf>,
        /// `verbatim` or a pair such as `3,4`.
        #[arg(long, default_value = "verbatim")]
        c10_reading: String,
        /// Instead of one weight, compare the verdict with the search on this
        /// many sampled characters.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Weight-space dimensions of `L(Λ)` down to height `H`.
    Char {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Formula against oracle on the region; exit 1 on any mismatch.
    Verify {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        emit_gram: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct ConfigArg {
    #[arg(long)]
    config: PathBuf,
}

#[derive(Args, Debug)]
struct RegionArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    weight: PathBuf,
    #[arg(long)]
    height: i64,
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

enum Failure {
    Core(Error),
    Mismatch(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Res = std::result::Result<(), Failure>;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Internal(_) | Error::DuplicateOrbitPoint(_) => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "InvalidInput",
        Error::Parse(_) => "Parse",
        Error::InfiniteType(_) => "InfiniteType",
        Error::CapExceeded { .. } => "CapExceeded",
        Error::NoDiscreteLog { .. } => "NoDiscreteLog",
        Error::NoIntegerExponent { .. } => "NoIntegerExponent",
        Error::AmbiguousLog => "AmbiguousLog",
        Error::DegenerateFunctional(_) => "DegenerateFunctional",
        Error::NotTypical(_) => "NotTypical",
        Error::NotFiniteDim => "NotFiniteDim",
        Error::NotCatalogObject(_) => "NotCatalogObject",
        Error::DuplicateOrbitPoint(_) => "DuplicateOrbitPoint",
        Error::Internal(_) => "Internal",
    }
}

/// Runs the tool on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    if let Some(j) = cli.jobs {
        // only the first call in a process can set the global pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let mut ctx = Ctx { cli: &cli, out };
    match dispatch(&mut ctx) {
        Ok(()) => EXIT_OK,
        Err(Failure::Core(e)) => {
            if cli.format == Format::Json {
                let v = serde_json::json!({"error": error_kind(&e), "message": e.to_string()});
                let _ = writeln!(err, "{v}");
            } else {
                let _ = writeln!(err, "error [{}]: {e}", error_kind(&e));
            }
            exit_code(&e)
        }
        Err(Failure::Mismatch(m)) => {
            let _ = writeln!(err, "mismatch: {m}");
            EXIT_MISMATCH
        }
        Err(Failure::Io(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INVALID
        }
    }
}

pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn dispatch(ctx: &mut Ctx) -> Res {
    match &ctx.cli.cmd {
        Cmd::Catalog { max_rank } => cmd_catalog(ctx, *max_rank),
        Cmd::Roots(c) => cmd_roots(ctx, &c.config),
        Cmd::Weyl { config, weight } => cmd_weyl(ctx, &config.config, weight.as_deref()),
        Cmd::Classify { config, weight, c10_reading, sample, seed } => {
            let reading = parse_reading(c10_reading)?;
            match sample {
                Some(n) => cmd_classify_sample(ctx, &config.config, reading, *n, *seed),
                None => cmd_classify(ctx, &config.config, weight.as_deref().expect("clap"), reading),
            }
        }
        Cmd::Char { region, method } => cmd_char(ctx, region, *method),
        Cmd::Verify { region, emit_gram } => cmd_verify(ctx, region, emit_gram.as_deref()),
    }
}

fn parse_reading(s: &str) -> std::result::Result<C10Reading, Failure> {
    if s == "verbatim" {
        return Ok(C10Reading::Verbatim);
    }
    let bad = || Failure::Core(Error::InvalidInput(format!("--c10-reading {s:?}: expected verbatim or i,j")));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if !(1..=4).contains(&a) || !(1..=4).contains(&b) {
        return Err(bad());
    }
    Ok(C10Reading::Pair(a, b))
}

impl Ctx<'_> {
    fn order(&self, cfg: &Config) -> u32 {
        self.cli.order.unwrap_or(cfg.order)
    }

    fn config(&self, p: &Path) -> std::result::Result<Config, Failure> {
        Ok(load_config(p, self.cli.order)?)
    }

    fn roots(&self, cfg: &Config) -> std::result::Result<RootSystemData, Failure> {
        Ok(compute_roots(&cfg.bichar, self.cli.object_cap)?)
    }

    fn json<T: Serialize>(&mut self, v: &T) -> Res {
        writeln!(self.out, "{}", serde_json::to_string_pretty(v)?)?;
        Ok(())
    }
}

fn fm(x: MonomialScalar, order: u32) -> String {
    x.format_with_order(order).unwrap_or_else(|| x.to_string())
}

fn coords(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

#[derive(Serialize)]
struct CatalogRow {
    entry: String,
    tag: String,
    rank: usize,
    alpha0: Vec<i64>,
    c_pibar: u32,
    kbar: i64,
}

fn cmd_catalog(ctx: &mut Ctx, max_rank: usize) -> Res {
    let mut rows = Vec::new();
    for f in standard_entries(max_rank) {
        let c = build_catalog(f, CatalogParams::default())?;
        rows.push(CatalogRow {
            entry: f.to_string(),
            tag: f.tag(),
            rank: family_rank(&f),
            alpha0: c.alpha0.pi_part(c.ell()).to_vec(),
            c_pibar: c.c_pibar,
            kbar: c.kbar,
        });
    }
    if ctx.cli.format == Format::Json {
        return ctx.json(&rows);
    }
    writeln!(ctx.out, "{:<24} {:>4} {:>14} {:>3} {:>6}", "entry", "rank", "alpha0", "c", "kbar")?;
    for r in rows {
        writeln!(ctx.out, "{:<24} {:>4} {:>14} {:>3} {:>6}", r.entry, r.rank, coords(&r.alpha0), r.c_pibar, r.kbar)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct RootRow {
    root: Vec<i64>,
    q_beta: String,
    c_beta: u32,
    kind: &'static str,
}

fn cmd_roots(ctx: &mut Ctx, path: &Path) -> Res {
    let cfg = ctx.config(path)?;
    let rs = ctx.roots(&cfg)?;
    let n = ctx.order(&cfg);
    let rows: Vec<RootRow> = rs
        .roots
        .iter()
        .map(|r| RootRow {
            root: r.root.pi_part(rs.ell).to_vec(),
            q_beta: fm(r.q, n),
            c_beta: r.c,
            kind: if r.real { "real" } else { "null" },
        })
        .collect();
    if ctx.cli.format == Format::Json {
        return ctx.json(&rows);
    }
    writeln!(ctx.out, "{:<16} {:>12} {:>3}  type", "root", "q_beta", "c")?;
    for r in rows {
        writeln!(ctx.out, "{:<16} {:>12} {:>3}  {}", coords(&r.root), r.q_beta, r.c_beta, r.kind)?;
    }
    writeln!(ctx.out, "{} positive roots, {} objects", rs.roots.len(), rs.objects.len())?;
    Ok(())
}

#[derive(Serialize)]
struct WeylOut {
    order: usize,
    generators: Vec<Vec<i64>>,
    elements: Vec<WeylRow>,
}

#[derive(Serialize)]
struct WeylRow {
    word: Vec<usize>,
    sign: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    dot_zero: Option<Vec<i64>>,
}

fn cmd_weyl(ctx: &mut Ctx, path: &Path, weight: Option<&Path>) -> Res {
    let cfg = ctx.config(path)?;
    let rs = ctx.roots(&cfg)?;
    let g = generate_weyl_group(&cfg.bichar, &rs, ctx.cli.weyl_cap)?;
    let ell = rs.ell;
    let elements = match weight {
        Some(w) => {
            let l = load_weight(w, &cfg.bichar, ctx.order(&cfg))?;
            weyl_orbit_report(&cfg.bichar, &rs, &l)?
                .into_iter()
                .map(|e| WeylRow { word: e.word, sign: e.sign, dot_zero: Some(e.point.pi_part(ell).to_vec()) })
                .collect()
        }
        None => g.elements.iter().map(|e| WeylRow { word: e.word.clone(), sign: e.sign, dot_zero: None }).collect(),
    };
    let out = WeylOut { order: g.order(), generators: g.generators.iter().map(|b| b.pi_part(ell).to_vec()).collect(), elements };
    if ctx.cli.format == Format::Json {
        return ctx.json(&out);
    }
    writeln!(ctx.out, "|W| = {}", out.order)?;
    for (i, b) in out.generators.iter().enumerate() {
        writeln!(ctx.out, "s{i} = reflection at {}", coords(b))?;
    }
    for e in &out.elements {
        let word: Vec<String> = e.word.iter().map(|i| format!("s{i}")).collect();
        let word = if word.is_empty() { "e".to_string() } else { word.join(" ") };
        match &e.dot_zero {
            Some(p) => writeln!(ctx.out, "{:>2}  {:<28} w.0 = {}", e.sign, word, coords(p))?,
            None => writeln!(ctx.out, "{:>2}  {}", e.sign, word)?,
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerdictOut {
    family: String,
    passes_integrality: bool,
    t_values: Vec<TOut>,
    t_alpha0: Option<i64>,
    c_pibar: u32,
    finite: bool,
    matched_condition: String,
    search_finite: bool,
    typical: bool,
}

#[derive(Serialize)]
struct TOut {
    beta: Vec<i64>,
    lambda: String,
    q_beta: String,
    t: Option<i64>,
}

fn cmd_classify(ctx: &mut Ctx, path: &Path, weight: &Path, reading: C10Reading) -> Res {
    let cfg = ctx.config(path)?;
    let cat = cfg.catalog.as_ref().ok_or_else(|| Error::NotCatalogObject(path.display().to_string()))?;
    let n = ctx.order(&cfg);
    let l = load_weight(weight, &cfg.bichar, n)?;
    let v = classify_pibar(cat, &l, reading)?;
    let rs = ctx.roots(&cfg)?;
    let search = is_finite_dim(&cfg.bichar, &rs, &l, ctx.cli.state_cap)?;
    let ell = rs.ell;
    let out = VerdictOut {
        family: v.family,
        passes_integrality: v.passes_integrality,
        t_values: v
            .t_values
            .iter()
            .map(|t| TOut { beta: t.beta.pi_part(ell).to_vec(), lambda: fm(t.lambda, n), q_beta: fm(t.q_beta, n), t: t.t })
            .collect(),
        t_alpha0: v.t_alpha0,
        c_pibar: v.c_pibar,
        finite: v.finite,
        matched_condition: v.matched_condition,
        search_finite: search,
        typical: is_typical(&cfg.bichar, &rs, &l),
    };
    if ctx.cli.format == Format::Json {
        ctx.json(&out)?;
    } else {
        writeln!(ctx.out, "family             {}", out.family)?;
        for t in &out.t_values {
            let tv = t.t.map_or("none".to_string(), |x| x.to_string());
            writeln!(ctx.out, "  beta {:<14} lambda {:<12} q_beta {:<10} t {}", coords(&t.beta), t.lambda, t.q_beta, tv)?;
        }
        writeln!(ctx.out, "integrality        {}", out.passes_integrality)?;
        writeln!(ctx.out, "t_alpha0 / c       {} / {}", out.t_alpha0.map_or("none".into(), |x| x.to_string()), out.c_pibar)?;
        writeln!(ctx.out, "finite             {} ({})", out.finite, out.matched_condition)?;
        writeln!(ctx.out, "search             {}", out.search_finite)?;
        writeln!(ctx.out, "typical            {}", out.typical)?;
    }
    if out.finite != out.search_finite {
        return Err(Failure::Mismatch(format!("verdict {} but search {}", out.finite, out.search_finite)));
    }
    Ok(())
}

#[derive(Serialize)]
struct SampleOut {
    samples: usize,
    integral: usize,
    agree: usize,
    branches: std::collections::BTreeMap<String, usize>,
}

fn cmd_classify_sample(ctx: &mut Ctx, path: &Path, reading: C10Reading, n: usize, seed: u64) -> Res {
    let cfg = ctx.config(path)?;
    let cat = cfg.catalog.as_ref().ok_or_else(|| Error::NotCatalogObject(path.display().to_string()))?;
    let rs = ctx.roots(&cfg)?;
    let samples = sample_characters(cat, n.div_ceil(2), seed);
    let mut out = SampleOut { samples: samples.len(), integral: 0, agree: 0, branches: Default::default() };
    let mut first_bad = None;
    for l in &samples {
        let v = classify_pibar(cat, l, reading)?;
        let s = is_finite_dim(&cfg.bichar, &rs, l, ctx.cli.state_cap)?;
        out.integral += usize::from(v.passes_integrality);
        if v.finite == s {
            out.agree += 1;
        } else if first_bad.is_none() {
            let lam: Vec<String> = l.pi_lambdas(rs.ell).iter().map(|x| fm(*x, cfg.order)).collect();
            first_bad = Some(format!("lambda ({}): verdict {} search {s}", lam.join(", "), v.finite));
        }
        *out.branches.entry(v.matched_condition).or_default() += 1;
    }
    if ctx.cli.format == Format::Json {
        ctx.json(&out)?;
    } else {
        writeln!(ctx.out, "samples {} integral {} agree {}", out.samples, out.integral, out.agree)?;
        for (k, v) in &out.branches {
            writeln!(ctx.out, "  {k:<8} {v}")?;
        }
    }
    match first_bad {
        Some(m) => Err(Failure::Mismatch(m)),
        None => Ok(()),
    }
}

/// One row of a `char` table; `weight` is the depth `ν` of `Λ - ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharRow {
    pub weight: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r#match: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTable {
    pub height: i64,
    pub rows: Vec<CharRow>,
}

struct Tables {
    formula: Option<DimTable>,
    oracle: Option<DimTable>,
    grams: Vec<gqchar_core::oracle::GramMatrix>,
}

fn compute(ctx: &Ctx, r: &RegionArgs, formula: bool, oracle: bool, keep: bool) -> std::result::Result<(Config, Tables), Failure> {
    if r.height < 0 {
        return Err(Error::InvalidInput("--height must be nonnegative".into()).into());
    }
    let cfg = ctx.config(&r.config)?;
    let l: WeightCharacter = load_weight(&r.weight, &cfg.bichar, ctx.order(&cfg))?;
    let region = Region::new(cfg.bichar.ell, r.height);
    let mut t = Tables { formula: None, oracle: None, grams: vec![] };
    if formula {
        let rs = ctx.roots(&cfg)?;
        t.formula = Some(typical_character(&cfg.bichar, &rs, &l, &region)?);
    }
    if oracle {
        let run = rank_walk(&mut Gram::new(&cfg.bichar, &l), &region, SpanMode::Reduced, ctx.cli.word_cap, keep)?;
        t.oracle = Some(run.table);
        t.grams = run.matrices;
    }
    Ok((cfg, t))
}

fn rows_of(t: &Tables) -> Vec<CharRow> {
    let keys = t.formula.as_ref().or(t.oracle.as_ref()).map(|d| d.entries.keys().cloned().collect::<Vec<_>>()).unwrap_or_default();
    keys.into_iter()
        .map(|k| {
            let f = t.formula.as_ref().map(|d| d.get(&k.0));
            let o = t.oracle.as_ref().map(|d| d.get(&k.0));
            let m = match (f, o) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            CharRow { weight: k.0, formula: f, oracle: o, r#match: m }
        })
        .collect()
}

fn emit_table(ctx: &mut Ctx, height: i64, rows: &[CharRow]) -> Res {
    if ctx.cli.format == Format::Json {
        return ctx.json(&CharTable { height, rows: rows.to_vec() });
    }
    let (f, o) = (rows.first().and_then(|r| r.formula).is_some(), rows.first().and_then(|r| r.oracle).is_some());
    let mut head = format!("{:<16}", "depth");
    if f {
        head.push_str(&format!(" {:>8}", "formula"));
    }
    if o {
        head.push_str(&format!(" {:>8}", "oracle"));
    }
    if f && o {
        head.push_str("  match");
    }
    writeln!(ctx.out, "{head}")?;
    for r in rows {
        let mut line = format!("{:<16}", coords(&r.weight));
        if let Some(v) = r.formula {
            line.push_str(&format!(" {v:>8}"));
        }
        if let Some(v) = r.oracle {
            line.push_str(&format!(" {v:>8}"));
        }
        if let Some(m) = r.r#match {
            line.push_str(if m { "  yes" } else { "  NO" });
        }
        writeln!(ctx.out, "{line}")?;
    }
    Ok(())
}

fn cmd_char(ctx: &mut Ctx, r: &RegionArgs, method: Method) -> Res {
    let (_, t) = compute(ctx, r, method != Method::Oracle, method != Method::Formula, false)?;
    let rows = rows_of(&t);
    emit_table(ctx, r.height, &rows)?;
    if rows.iter().any(|r| r.r#match == Some(false)) {
        return Err(Failure::Mismatch("formula and oracle differ".into()));
    }
    Ok(())
}

fn cmd_verify(ctx: &mut Ctx, r: &RegionArgs, emit: Option<&Path>) -> Res {
    let (cfg, t) = compute(ctx, r, true, true, emit.is_some())?;
    if let Some(dir) = emit {
        fs::create_dir_all(dir)?;
        for g in &t.grams {
            let name = format!("gram_{}.json", g.weight.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_"));
            fs::write(dir.join(name), serde_json::to_string_pretty(g)?)?;
        }
    }
    let rows = rows_of(&t);
    let bad: Vec<&CharRow> = rows.iter().filter(|r| r.r#match != Some(true)).collect();
    if ctx.cli.format == Format::Json {
        ctx.json(&CharTable { height: r.height, rows: rows.clone() })?;
    } else {
        writeln!(ctx.out, "{} weights checked down to height {}, {} mismatches", rows.len(), r.height, bad.len())?;
        for b in &bad {
            writeln!(ctx.out, "  {}: formula {:?} oracle {:?}", coords(&b.weight), b.formula, b.oracle)?;
        }
    }
    let _ = cfg;
    match bad.first() {
        Some(b) => Err(Failure::Mismatch(format!("first at depth {}", coords(&b.weight)))),
        None => Ok(()),
    }
}
