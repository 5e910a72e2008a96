//! Command-line front end for the stacklab crate: exact counts, coefficient
//! tables, identity verification, bijection demonstrations, and asymptotic
//! diagnostics, with text, CSV, and JSON output and an on-disk series cache.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use stacklab::asym::{
    self, a_from_h, contour_a, eval_genfun, golden_ratio, hs_over_h, LogReal,
};
use stacklab::combinat::{
    self, partitions, FrobeniusSymbol, MarkedStack, Partition, StackVariant,
    ENUMERATION_BOUND,
};
use stacklab::genfun::{self, IdentityTag, Variant};
use stacklab::series::PowerSeries;

#[derive(Parser)]
#[command(
    name = "stacklab",
    version,
    about = "Exact and numerical laboratory for unimodal sequence enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count, optionally checked against brute force.
    Count {
        /// Enumeration function: s, ss, g, gs, h, hs, d, dm, fphi, f0, p, l.
        variant: String,
        /// Size to count.
        n: usize,
        /// Also count by exhaustive enumeration and report agreement.
        #[arg(long)]
        oracle: bool,
        /// Allow brute-force sizes above the safety bound.
        #[arg(long)]
        unsafe_large: bool,
        /// Recompute the cached series even when a cached one suffices.
        #[arg(long)]
        force_recompute: bool,
    },
    /// Emit a table of counts for n = 0..=max.
    Table {
        /// Comma-separated variants; defaults to every counting variant.
        #[arg(long, value_delimiter = ',')]
        variants: Vec<String>,
        /// Largest size row.
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recompute the cached series even when a cached one suffices.
        #[arg(long)]
        force_recompute: bool,
    },
    /// Check one generating-function identity, or all of them.
    Verify {
        /// Identity tag, or `all`.
        tag: String,
        /// Truncation order for the comparison.
        #[arg(short = 'N', long, default_value_t = 200)]
        order: usize,
    },
    /// Walk partitions of n through the Frobenius symbol and the
    /// receding-stack-with-summit bijection.
    Bijection {
        /// Size whose partitions are listed.
        n: usize,
        /// Use this single partition (comma-separated parts) instead of
        /// sampling partitions of n.
        #[arg(long, value_delimiter = ',')]
        partition: Option<Vec<usize>>,
        /// List every partition of n, not just the leading sample.
        #[arg(long)]
        all: bool,
        /// Verify round trips and the zero-top-row correspondence.
        #[arg(long)]
        check: bool,
        /// Allow sizes above the safety bound.
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Compare exact coefficients against their asymptotic main term, or
    /// dump the main-term catalog as JSON.
    Asym {
        /// Enumeration function with a known main term.
        variant: Option<String>,
        /// Comma-separated sizes to evaluate.
        #[arg(long, value_delimiter = ',')]
        n: Vec<u64>,
        /// Emit the whole main-term catalog as a JSON document.
        #[arg(long)]
        catalog: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recompute the cached series even when a cached one suffices.
        #[arg(long)]
        force_recompute: bool,
    },
    /// Evaluate a series numerically at q = e^-eps against its reference
    /// asymptotic; targets `saddle` and `hsratio` compare the contour
    /// integral and the shifted-stack ratio instead.
    Eval {
        /// Variant with an eps-asymptotic (s, ss, dm, h, hs), `saddle`,
        /// or `hsratio`.
        target: String,
        /// Comma-separated eps values.
        #[arg(long, value_delimiter = ',', required = true)]
        eps: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

/// A failure with its process exit code: 1 verification, 2 usage,
/// 3 safety bound, 4 I/O.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn verification(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn bound(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into() }
    }
}

impl From<stacklab::Error> for Failure {
    fn from(e: stacklab::Error) -> Self {
        match e {
            stacklab::Error::SizeBound { n, bound } => Failure::bound(format!(
                "size {n} exceeds the enumeration bound {bound}; \
                 pass --unsafe-large to proceed"
            )),
            stacklab::Error::NoConvergence(_) => Failure::verification(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("stacklab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Count { variant, n, oracle, unsafe_large, force_recompute } => {
            cmd_count(&variant, n, oracle, unsafe_large, force_recompute)
        }
        Command::Table { variants, max, format, out, force_recompute } => {
            cmd_table(&variants, max, format, out.as_deref(), force_recompute)
        }
        Command::Verify { tag, order } => cmd_verify(&tag, order),
        Command::Bijection { n, partition, all, check, unsafe_large } => {
            cmd_bijection(n, partition.as_deref(), all, check, unsafe_large)
        }
        Command::Asym { variant, n, catalog, format, out, force_recompute } => {
            cmd_asym(variant.as_deref(), &n, catalog, format, out.as_deref(), force_recompute)
        }
        Command::Eval { target, eps, format, out } => {
            cmd_eval(&target, &eps, format, out.as_deref())
        }
    }
}

fn parse_variant(s: &str) -> Result<Variant, Failure> {
    Variant::from_str(s).map_err(|e| Failure::usage(e.to_string()))
}

// ---------------------------------------------------------------------------
// Series cache

/// Resolves the cache directory: `STACKLAB_CACHE`, else the platform cache
/// directory, else the system temp directory.
fn cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("STACKLAB_CACHE") {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("stacklab");
    }
    if let Some(home) = std::env::var_os("HOME") {
        return PathBuf::from(home).join(".cache").join("stacklab");
    }
    std::env::temp_dir().join("stacklab")
}

/// Returns the series for `v` to at least `order`, reading and maintaining
/// the per-variant cache file.  Higher-order entries supersede lower ones;
/// a cache that cannot be read or written degrades to plain recomputation.
fn cached_series(v: Variant, order: usize, force: bool) -> PowerSeries {
    let dir = cache_dir();
    if std::fs::create_dir_all(&dir).is_err() {
        return genfun::series(v, order);
    }
    let path = dir.join(format!("{v}.json"));
    let stored: Option<PowerSeries> = std::fs::read_to_string(&path)
        .ok()
        .and_then(|text| serde_json::from_str(&text).ok());
    if !force {
        if let Some(s) = &stored {
            if s.order() >= order {
                return s.truncated(order);
            }
        }
    }
    let fresh = genfun::series(v, order);
    let supersedes = stored.is_none_or(|s| order >= s.order());
    if supersedes {
        if let Err(e) = write_atomic(&dir, &path, &fresh) {
            eprintln!("stacklab: warning: cache write failed: {e}");
        }
    }
    fresh
}

/// Writes the serialized series to `path` via a temporary file in the same
/// directory followed by a rename.
fn write_atomic(
    dir: &std::path::Path,
    path: &std::path::Path,
    series: &PowerSeries,
) -> std::io::Result<()> {
    let text = serde_json::to_string(series).expect("series serializes");
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Table emission

/// One table cell; the variants fix how each value renders per format.
enum Cell {
    /// Integer index column.
    Int(u64),
    /// Plain float, shortest display; a JSON number.
    Num(f64),
    /// Ratio-style float, six decimals in text and CSV; a JSON number.
    F6(f64),
    /// Exact count as a decimal string; a JSON string for losslessness.
    Big(String),
    /// Preformatted text; a JSON string.
    Str(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Num(x) => x.to_string(),
            Cell::F6(x) => format!("{x:.6}"),
            Cell::Big(s) | Cell::Str(s) => s.clone(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(n) => serde_json::Value::from(*n),
            Cell::Num(x) | Cell::F6(x) => serde_json::Value::from(*x),
            Cell::Big(s) | Cell::Str(s) => serde_json::Value::from(s.as_str()),
        }
    }
}

struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => self.emit_text(),
            Format::Csv => self.emit_csv(),
            Format::Json => self.emit_json(),
        }
    }

    fn emit_text(&self) -> String {
        let rendered: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
        let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in &rendered {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let joined: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", joined.join("  "));
        };
        line(&self.columns);
        for row in &rendered {
            line(row);
        }
        out
    }

    fn emit_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    fn emit_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    obj.insert(name.clone(), cell.json());
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&rows).expect("rows serialize");
        text.push('\n');
        text
    }
}

/// Prints to stdout or writes to `out` when given.
fn deliver(text: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
    }
}

// ---------------------------------------------------------------------------
// count

fn cmd_count(
    variant: &str,
    n: usize,
    oracle: bool,
    unsafe_large: bool,
    force: bool,
) -> Result<(), Failure> {
    let v = parse_variant(variant)?;
    if n == 0 {
        return Err(Failure::usage("count requires n >= 1"));
    }
    let exact = cached_series(v, n, force).coeff(n).clone();
    if !oracle {
        println!("{v}({n}) = {exact}");
        return Ok(());
    }
    let brute = oracle_count(v, n, unsafe_large)?;
    let agree = exact == BigInt::from(brute);
    let word = if agree { "match" } else { "MISMATCH" };
    println!("{v}({n}) = {exact}, oracle = {brute}, {word}");
    if agree {
        Ok(())
    } else {
        Err(Failure::verification(format!(
            "oracle disagrees with series coefficient for {v}({n})"
        )))
    }
}

/// Brute-force count for one variant: exhaustive stack enumeration, or a
/// direct walk over partitions and Frobenius symbols.
fn oracle_count(v: Variant, n: usize, force: bool) -> Result<u64, Failure> {
    let bounded_partitions = |n: usize| -> Result<Vec<Partition>, Failure> {
        if n > ENUMERATION_BOUND && !force {
            return Err(Failure::bound(format!(
                "size {n} exceeds the enumeration bound {ENUMERATION_BOUND}; \
                 pass --unsafe-large to proceed"
            )));
        }
        Ok(partitions(n))
    };
    let count = match v {
        Variant::S => combinat::count_by_enumeration(StackVariant::Stack, n, force)?,
        Variant::Ss => combinat::count_with_summits(StackVariant::Stack, n, force)?,
        Variant::G => combinat::count_by_enumeration(StackVariant::Receding, n, force)?,
        Variant::Gs => combinat::count_with_summits(StackVariant::Receding, n, force)?,
        Variant::H => combinat::count_by_enumeration(StackVariant::Shifted, n, force)?,
        Variant::Hs => combinat::count_with_summits(StackVariant::Shifted, n, force)?,
        Variant::D => combinat::count_by_enumeration(StackVariant::Strict, n, force)?,
        Variant::Dm => combinat::count_by_enumeration(StackVariant::SemiStrict, n, force)?,
        Variant::P => bounded_partitions(n)?.len() as u64,
        Variant::FPhi => frobenius_split(&bounded_partitions(n)?)?.1,
        Variant::F0 => frobenius_split(&bounded_partitions(n)?)?.0,
        Variant::L => {
            return Err(Failure::usage(
                "the false theta function has no brute-force oracle",
            ))
        }
    };
    Ok(count)
}

/// Counts partitions whose Frobenius symbol has a zero in the top row, and
/// those whose symbol does not.
fn frobenius_split(parts: &[Partition]) -> Result<(u64, u64), Failure> {
    let mut with_zero = 0u64;
    let mut without = 0u64;
    for p in parts {
        if p.to_frobenius()?.has_zero_in_top_row() {
            with_zero += 1;
        } else {
            without += 1;
        }
    }
    Ok((with_zero, without))
}

// ---------------------------------------------------------------------------
// table

/// Fixed column order for count tables.
const TABLE_ORDER: [Variant; 11] = [
    Variant::S,
    Variant::Ss,
    Variant::G,
    Variant::Gs,
    Variant::H,
    Variant::Hs,
    Variant::D,
    Variant::Dm,
    Variant::FPhi,
    Variant::F0,
    Variant::P,
];

fn cmd_table(
    variants: &[String],
    max: usize,
    format: Format,
    out: Option<&std::path::Path>,
    force: bool,
) -> Result<(), Failure> {
    let selected: Vec<Variant> = if variants.is_empty() {
        TABLE_ORDER.to_vec()
    } else {
        let mut chosen = Vec::new();
        for s in variants {
            let v = parse_variant(s)?;
            if v == Variant::L {
                return Err(Failure::usage(
                    "the false theta function has no count column",
                ));
            }
            if !chosen.contains(&v) {
                chosen.push(v);
            }
        }
        TABLE_ORDER.into_iter().filter(|v| chosen.contains(v)).collect()
    };
    let series: Vec<PowerSeries> =
        selected.iter().map(|&v| cached_series(v, max, force)).collect();
    let mut columns = vec!["n".to_string()];
    columns.extend(selected.iter().map(Variant::to_string));
    let rows = (0..=max)
        .map(|n| {
            let mut row = vec![Cell::Int(n as u64)];
            row.extend(series.iter().map(|s| Cell::Big(s.coeff(n).to_string())));
            row
        })
        .collect();
    deliver(&Table { columns, rows }.emit(format), out)
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(tag: &str, order: usize) -> Result<(), Failure> {
    let tags: Vec<IdentityTag> = if tag.eq_ignore_ascii_case("all") {
        IdentityTag::ALL.to_vec()
    } else {
        vec![IdentityTag::from_str(tag).map_err(|e| Failure::usage(e.to_string()))?]
    };
    let mut failures = 0usize;
    for t in tags {
        let report = genfun::verify_identity(t, order);
        println!("{report}");
        if !report.pass {
            failures += 1;
        }
    }
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::verification(format!("{failures} identity check(s) failed")))
    }
}

// ---------------------------------------------------------------------------
// bijection

fn cmd_bijection(
    n: usize,
    partition: Option<&[usize]>,
    all: bool,
    check: bool,
    unsafe_large: bool,
) -> Result<(), Failure> {
    if let Some(parts) = partition {
        let p = Partition::new(parts.to_vec())?;
        let (fs, ms) = bijection_images(&p)?;
        println!("{}", bijection_line(&p, &fs, &ms));
        if check {
            check_one(&p, &fs, &ms)?;
            println!("round trip OK");
        }
        return Ok(());
    }
    if n == 0 {
        return Err(Failure::usage("bijection requires n >= 1"));
    }
    if n > ENUMERATION_BOUND && !unsafe_large {
        return Err(Failure::bound(format!(
            "size {n} exceeds the enumeration bound {ENUMERATION_BOUND}; \
             pass --unsafe-large to proceed"
        )));
    }
    let parts = partitions(n);
    let shown = if all {
        parts.len()
    } else if check {
        0
    } else {
        parts.len().min(5)
    };
    for p in &parts[..shown] {
        let (fs, ms) = bijection_images(p)?;
        println!("{}", bijection_line(p, &fs, &ms));
    }
    if !all && !check && shown < parts.len() {
        println!("... {} more partitions of {n}", parts.len() - shown);
    }
    if check {
        for p in &parts {
            let (fs, ms) = bijection_images(p)?;
            check_one(p, &fs, &ms)?;
        }
        check_counts(n, &parts)?;
    }
    Ok(())
}

fn bijection_images(p: &Partition) -> Result<(FrobeniusSymbol, MarkedStack), Failure> {
    let fs = p.to_frobenius()?;
    let ms = combinat::receding_summit_from_partition(p)?;
    Ok((fs, ms))
}

fn bijection_line(p: &Partition, fs: &FrobeniusSymbol, ms: &MarkedStack) -> String {
    format!("{p}  ->  ({fs})  ->  {ms}")
}

/// Round trips one partition through both encodings and checks that a zero
/// in the top row corresponds to a summit that dominates the descent.
fn check_one(p: &Partition, fs: &FrobeniusSymbol, ms: &MarkedStack) -> Result<(), Failure> {
    if &fs.to_partition() != p {
        return Err(Failure::verification(format!(
            "Frobenius round trip failed for {p}"
        )));
    }
    if &combinat::partition_from_receding_summit(ms)? != p {
        return Err(Failure::verification(format!(
            "receding-stack round trip failed for {p}"
        )));
    }
    let zero = fs.has_zero_in_top_row();
    let dominates = ms.mark == ms.seq.max_multiplicity() - 1;
    if zero != dominates {
        return Err(Failure::verification(format!(
            "zero-top-row correspondence failed for {p}: zero row {zero}, \
             summit dominates descent {dominates}"
        )));
    }
    Ok(())
}

/// Checks that the zero-top-row split of the partitions of `n` reproduces
/// the receding-stack counts g(n) and gs(n) - g(n).
fn check_counts(n: usize, parts: &[Partition]) -> Result<(), Failure> {
    let (with_zero, without) = frobenius_split(parts)?;
    let g = cached_series(Variant::G, n, false).coeff(n).clone();
    let gs = cached_series(Variant::Gs, n, false).coeff(n).clone();
    if BigInt::from(with_zero) != g {
        return Err(Failure::verification(format!(
            "zero-top-row count {with_zero} does not equal g({n}) = {g}"
        )));
    }
    if BigInt::from(without) != &gs - &g {
        return Err(Failure::verification(format!(
            "no-zero count {without} does not equal gs({n}) - g({n}) = {}",
            &gs - &g
        )));
    }
    println!(
        "round trips OK for {} partitions of {n}; zero-top-row count {with_zero} = g({n}), \
         no-zero count {without} = gs({n}) - g({n})",
        parts.len()
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// asym

fn cmd_asym(
    variant: Option<&str>,
    ns: &[u64],
    catalog: bool,
    format: Format,
    out: Option<&std::path::Path>,
    force: bool,
) -> Result<(), Failure> {
    if catalog {
        return deliver(&catalog_json(), out);
    }
    let Some(variant) = variant else {
        return Err(Failure::usage("asym needs a variant, or --catalog"));
    };
    let v = parse_variant(variant)?;
    if ns.is_empty() {
        return Err(Failure::usage("asym needs --n with at least one size"));
    }
    if ns.contains(&0) {
        return Err(Failure::usage("asym sizes must be >= 1"));
    }
    let mt = asym::main_term(v)?;
    let order = *ns.iter().max().expect("nonempty") as usize;
    let series = cached_series(v, order, force);
    let rows = ns
        .iter()
        .map(|&n| {
            let ratio = asym::coeff_ratio(v, n, &series)?;
            Ok(vec![
                Cell::Int(n),
                Cell::Big(series.coeff(n as usize).to_string()),
                Cell::Str(asym::main_term_value(&mt, n).to_string()),
                Cell::F6(ratio),
            ])
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let columns = ["n", "exact", "mainterm", "ratio"].map(String::from).to_vec();
    deliver(&Table { columns, rows }.emit(format), out)
}

/// The main-term catalog as a JSON array, one entry per variant with a
/// known coefficient asymptotic.
fn catalog_json() -> String {
    let entries: Vec<serde_json::Value> = TABLE_ORDER
        .iter()
        .filter_map(|&v| {
            let mt = asym::main_term(v).ok()?;
            let mut obj = serde_json::Map::new();
            obj.insert("variant".into(), serde_json::Value::from(v.to_string()));
            obj.insert("c".into(), serde_json::Value::from(mt.c));
            obj.insert("alpha".into(), serde_json::Value::from(mt.alpha));
            obj.insert("beta".into(), serde_json::Value::from(mt.beta));
            Some(serde_json::Value::Object(obj))
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&entries).expect("catalog serializes");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// eval

fn cmd_eval(
    target: &str,
    eps_list: &[f64],
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let rows = match target {
        "saddle" => eval_saddle_rows(eps_list)?,
        "hsratio" => eval_hsratio_rows(eps_list)?,
        _ => eval_variant_rows(parse_variant(target)?, eps_list)?,
    };
    let columns = ["eps", "value", "reference", "ratio"].map(String::from).to_vec();
    deliver(&Table { columns, rows }.emit(format), out)
}

fn require_eps_range(eps_list: &[f64], hi: f64) -> Result<(), Failure> {
    for &eps in eps_list {
        if !(eps > 0.0 && eps <= hi) {
            return Err(Failure::usage(format!("eps {eps} outside (0, {hi}]")));
        }
    }
    Ok(())
}

/// Series value at q = e^-eps against the eps-asymptotic
/// `lambda eps^alpha e^(A/eps)`.
fn eval_variant_rows(v: Variant, eps_list: &[f64]) -> Result<Vec<Vec<Cell>>, Failure> {
    let e = asym::eps_asym(v)?;
    require_eps_range(eps_list, 1.0)?;
    Ok(eps_list
        .iter()
        .map(|&eps| {
            let value = eval_genfun(v, eps);
            let reference =
                LogReal::from_ln(1, e.lambda.ln() + e.alpha * eps.ln() + e.a / eps);
            let ratio = value.ratio(&reference);
            vec![
                Cell::Num(eps),
                Cell::Str(value.to_string()),
                Cell::Str(reference.to_string()),
                Cell::F6(ratio),
            ]
        })
        .collect())
}

/// Contour quadrature of the shifted-stack integral against the same value
/// recovered from the series side.
fn eval_saddle_rows(eps_list: &[f64]) -> Result<Vec<Vec<Cell>>, Failure> {
    require_eps_range(eps_list, 0.2)?;
    eps_list
        .iter()
        .map(|&eps| {
            let contour = contour_a(eps)?;
            let reference = a_from_h(eps);
            Ok(vec![
                Cell::Num(eps),
                Cell::Str(LogReal::from_f64(contour).to_string()),
                Cell::Str(LogReal::from_f64(reference).to_string()),
                Cell::F6(contour / reference),
            ])
        })
        .collect()
}

/// Ratio of the summit and summit-free shifted-stack series against the
/// golden ratio it approaches.
fn eval_hsratio_rows(eps_list: &[f64]) -> Result<Vec<Vec<Cell>>, Failure> {
    require_eps_range(eps_list, 0.2)?;
    let phi = golden_ratio();
    Ok(eps_list
        .iter()
        .map(|&eps| {
            let value = hs_over_h(eps);
            vec![
                Cell::Num(eps),
                Cell::Str(LogReal::from_f64(value).to_string()),
                Cell::Str(LogReal::from_f64(phi).to_string()),
                Cell::F6(value / phi),
            ]
        })
        .collect())
}
