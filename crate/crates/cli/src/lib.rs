//! Command-line front end: counts, enumerations, extremal queries, coordinate
//! conversions and formula-versus-oracle sweeps.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 on usage or
//! precondition errors.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::Ratio;
use serde_json::{json, Value};

use simcore::abacus::{c_to_partition, c_to_x, partition_to_c, x_to_partition};
use simcore::counting;
use simcore::extremal;
use simcore::oracle::{self, EnumerationBudget};
use simcore::verify::{self, Check, Limits, SweepRow};
use simcore::zcoords::{x_to_z, z_to_x};
use simcore::{CCoords, CoreSpec, Error, Partition, ZCoords};

#[derive(Parser, Debug)]
#[command(name = "simcore", version, about = "Simultaneous core partitions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count simultaneous cores, or evaluate one of the closed-form counts.
    Count(CountArgs),
    /// List the cores of a family.
    Enumerate(EnumerateArgs),
    /// Largest sizes of (s,s+1,s+2)-cores or (a,b)-cores.
    Largest(LargestArgs),
    /// Mean size of an (a,b)-core.
    Average(PairArgs),
    /// Convert between partitions and abacus coordinates.
    Biject(BijectArgs),
    /// Compare closed forms with brute-force enumeration.
    Verify(VerifyArgs),
    /// Print a sequence for s = 1..n.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Catalan,
    Largest,
    LargestExact,
    LargestSecond,
    Ssd,
    Ssd3,
    Firstcor,
    Abc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Lattice points in z-coordinates.
    Lattice,
    /// Brute-force enumeration.
    Oracle,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    /// Comma-separated moduli, e.g. 3,4,5.
    #[arg(long, value_delimiter = ',', conflicts_with = "formula")]
    pub moduli: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Method::Lattice)]
    pub method: Method,
    /// Evaluate a closed form instead of counting a family.
    #[arg(long, value_enum)]
    pub formula: Option<Formula>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
    #[arg(long)]
    pub c: Option<u64>,
    #[arg(long)]
    pub s: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    #[arg(long)]
    pub x: Option<u64>,
    #[arg(long)]
    pub y: Option<u64>,
    #[arg(long)]
    pub i: Option<u64>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Comma-separated moduli.
    #[arg(long, value_delimiter = ',', required_unless_present = "largest_part")]
    pub moduli: Option<Vec<u64>>,
    /// Explicit inclusive size bound; needed when no two moduli are coprime.
    #[arg(long)]
    pub max_size: Option<u64>,
    /// List a-cores with this largest part instead (requires --a).
    #[arg(long, requires = "a", conflicts_with = "moduli")]
    pub largest_part: Option<u64>,
    #[arg(long)]
    pub a: Option<u64>,
    /// Second largest part, with --largest-part.
    #[arg(long, requires = "largest_part")]
    pub second: Option<u64>,
    /// Multiplicity of the largest part, with --largest-part.
    #[arg(long, requires = "largest_part")]
    pub multiplicity: Option<usize>,
}

#[derive(Args, Debug)]
pub struct LargestArgs {
    /// (s, s+1, s+2)-cores.
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub s: Option<u64>,
    /// Restrict to self-conjugate partitions and construct the maximizer.
    #[arg(long, requires = "s")]
    pub selfconj: bool,
    #[arg(long, requires = "b")]
    pub a: Option<u64>,
    #[arg(long, requires = "a")]
    pub b: Option<u64>,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    C,
    X,
    Z,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    /// Abacus size.
    #[arg(long)]
    pub a: Option<u64>,
    /// Partition to encode, e.g. 9,6,3,1,1,1 (use "" for the empty partition).
    #[arg(long, requires = "a", conflicts_with_all = ["c", "z"])]
    pub partition: Option<String>,
    /// Coordinates to encode into: c, x or z (z needs --b0).
    #[arg(long, value_enum, default_value_t = Target::C)]
    pub to: Target,
    /// c-coordinates to decode, e.g. 1,2,0,-3.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "z")]
    pub c: Option<String>,
    /// z-coordinates to decode (needs --b0).
    #[arg(long, requires = "b0")]
    pub z: Option<String>,
    #[arg(long)]
    pub b0: Option<u64>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of catalan, average, tripathi, sss, largest-part, lattice,
    /// progressions, abc, or all.
    #[arg(long, default_value = "all")]
    pub check: String,
    #[arg(long)]
    pub max_sum: Option<u64>,
    #[arg(long)]
    pub max_s: Option<u64>,
    #[arg(long)]
    pub max_a: Option<u64>,
    #[arg(long)]
    pub max_x: Option<u64>,
    #[arg(long)]
    pub max_b: Option<u64>,
    #[arg(long)]
    pub max_c: Option<u64>,
    /// Largest enumeration size bound a sweep may request.
    #[arg(long)]
    pub ceiling: Option<u64>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// One of sss-count, sss-largest, sss-selfconj-largest, ssd3-count, catalan.
    #[arg(long)]
    pub sequence: String,
    #[arg(long, default_value_t = 10)]
    pub n: u64,
}

/// Failure modes of a command.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Library(Error),
    /// `verify` found a disagreement.
    Mismatch(SweepRow),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "{msg}"),
            Failure::Library(e) => write!(f, "{e}"),
            Failure::Mismatch(row) => write!(
                f,
                "counterexample: {} {}: formula {} != oracle {}",
                row.check, row.params, row.formula, row.oracle
            ),
        }
    }
}

type Outcome = Result<String, Failure>;

fn need(value: Option<u64>, flag: &str) -> Result<u64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn parse_list<T: std::str::FromStr>(raw: &str, flag: &str) -> Result<Vec<T>, Failure>
where
    T::Err: fmt::Display,
{
    let raw = raw.trim();
    if raw.is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| Failure::Usage(format!("--{flag}: bad integer {t:?}: {e}")))
        })
        .collect()
}

fn usize_of(v: u64) -> usize {
    v as usize
}

fn ratio_string(r: &Ratio<BigInt>) -> String {
    r.to_string()
}

fn render(format: Format, json: Value, plain: String, csv: String) -> String {
    match format {
        Format::Json => format!("{json}\n"),
        Format::Plain => format!("{plain}\n"),
        Format::Csv => csv,
    }
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

/// Runs the CLI with `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // a global pool can only be installed once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match dispatch(&cli) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(Failure::Mismatch(row)) => {
            let _ = writeln!(err, "{}", Failure::Mismatch(row));
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Count(args) => count(cli.format, args),
        Command::Enumerate(args) => enumerate(cli.format, args),
        Command::Largest(args) => largest(cli.format, args),
        Command::Average(args) => average(cli.format, args),
        Command::Biject(args) => biject(cli.format, args),
        Command::Verify(args) => verify_cmd(cli.format, args),
        Command::Table(args) => table(cli.format, args),
    }
}

fn count(format: Format, args: &CountArgs) -> Outcome {
    let (query, value) = if let Some(formula) = args.formula {
        formula_count(formula, args)?
    } else {
        let moduli = args
            .moduli
            .clone()
            .ok_or_else(|| Failure::Usage("count needs --moduli or --formula".into()))?;
        let spec = CoreSpec::new(moduli)?;
        let value = match args.method {
            Method::Lattice => counting::count_cores(&spec)?,
            Method::Oracle => oracle::enumerate_all_cores(&spec)?.len().into(),
        };
        (json!({ "moduli": spec.moduli() }), value)
    };
    let csv = format!("count\n{value}\n");
    Ok(render(
        format,
        json!({ "query": query, "count": value.to_string() }),
        value.to_string(),
        csv,
    ))
}

fn formula_count(formula: Formula, args: &CountArgs) -> Result<(Value, num_bigint::BigUint), Failure> {
    Ok(match formula {
        Formula::Catalan => {
            let (a, b) = (need(args.a, "a")?, need(args.b, "b")?);
            (json!({"formula": "catalan", "a": a, "b": b}), counting::cat(a, b)?)
        }
        Formula::Largest => {
            let (a, x) = (need(args.a, "a")?, need(args.x, "x")?);
            (json!({"formula": "largest", "a": a, "x": x}), counting::count_largest(a, x)?)
        }
        Formula::LargestExact => {
            let (a, x, i) = (need(args.a, "a")?, need(args.x, "x")?, need(args.i, "i")?);
            (
                json!({"formula": "largest-exact", "a": a, "x": x, "i": i}),
                counting::count_largest_exact(a, x, i)?,
            )
        }
        Formula::LargestSecond => {
            let (a, x, y) = (need(args.a, "a")?, need(args.x, "x")?, need(args.y, "y")?);
            (
                json!({"formula": "largest-second", "a": a, "x": x, "y": y}),
                counting::count_largest_second(a, x, y)?,
            )
        }
        Formula::Ssd => {
            let (s, d) = (need(args.s, "s")?, need(args.d, "d")?);
            (json!({"formula": "ssd", "s": s, "d": d}), counting::count_ssd(s, d)?)
        }
        Formula::Ssd3 => {
            let (s, d) = (need(args.s, "s")?, need(args.d, "d")?);
            (json!({"formula": "ssd3", "s": s, "d": d}), counting::count_ssd3(s, d)?)
        }
        Formula::Firstcor => {
            let (a, b, c) = (need(args.a, "a")?, need(args.b, "b")?, need(args.c, "c")?);
            (
                json!({"formula": "firstcor", "a": a, "b0": b, "b1": c}),
                counting::count_firstcor(a, b, c)?,
            )
        }
        Formula::Abc => {
            let (a, b, c) = (need(args.a, "a")?, need(args.b, "b")?, need(args.c, "c")?);
            (json!({"formula": "abc", "a": a, "b": b, "c": c}), counting::count_abc(a, b, c)?)
        }
    })
}

fn enumerate(format: Format, args: &EnumerateArgs) -> Outcome {
    let cores = if let Some(x) = args.largest_part {
        let a = need(args.a, "a")?;
        oracle::enumerate_cores_by_largest_part(a, x, args.second, args.multiplicity)?
    } else {
        let spec = CoreSpec::new(args.moduli.clone().unwrap_or_default())?;
        let budget = match args.max_size {
            Some(n) => EnumerationBudget::explicit(n),
            None => EnumerationBudget::tripathi(&spec)?,
        };
        oracle::enumerate_cores(&spec, &budget)?
    };
    let mut buf = Vec::new();
    match format {
        Format::Json => oracle::write_json_lines(&mut buf, &cores),
        Format::Csv => oracle::write_csv(&mut buf, &cores),
        Format::Plain => cores.iter().try_for_each(|p| writeln!(buf, "{p}")),
    }
    .expect("writing to memory");
    Ok(String::from_utf8(buf).expect("ascii output"))
}

fn largest(format: Format, args: &LargestArgs) -> Outcome {
    if let Some(s) = args.s {
        if args.selfconj {
            let (p, size) = extremal::construct_largest_selfconj_sss(s)?;
            let json = json!({
                "s": s,
                "size": size.to_string(),
                "partition": partition_json(&p),
                "self_conjugate": true,
            });
            let csv = format!("s,size,partition\n{s},{size},{}\n", p.parts().iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
            return Ok(render(format, json, format!("{size} {p}"), csv));
        }
        let size = extremal::largest_size_sss(s)?;
        return Ok(render(
            format,
            json!({ "s": s, "size": size.to_string() }),
            size.to_string(),
            format!("s,size\n{s},{size}\n"),
        ));
    }
    let (a, b) = (need(args.a, "a")?, need(args.b, "b")?);
    let size = extremal::largest_size_ab(a, b)?;
    Ok(render(
        format,
        json!({ "a": a, "b": b, "size": size.to_string() }),
        size.to_string(),
        format!("a,b,size\n{a},{b},{size}\n"),
    ))
}

fn average(format: Format, args: &PairArgs) -> Outcome {
    let mean = counting::average_size_formula(args.a, args.b)?;
    let text = ratio_string(&mean);
    Ok(render(
        format,
        json!({ "a": args.a, "b": args.b, "average": text }),
        text.clone(),
        format!("a,b,average\n{},{},{}\n", args.a, args.b, text),
    ))
}

fn biject(format: Format, args: &BijectArgs) -> Outcome {
    let (json, plain) = if let Some(raw) = &args.partition {
        let p: Partition = raw.parse().map_err(Failure::Usage)?;
        let a = usize_of(need(args.a, "a")?);
        let c = partition_to_c(&p, a)?;
        match args.to {
            Target::C => (json!({ "a": a, "c": c.values() }), join(c.values())),
            Target::X => {
                let x = c_to_x(&c);
                let shown: Vec<String> = x.values().iter().map(|r| r.to_string()).collect();
                (json!({ "a": a, "num2a": x.numerators() }), shown.join(","))
            }
            Target::Z => {
                let b0 = need(args.b0, "b0")?;
                let z = x_to_z(&c_to_x(&c), b0)?;
                (json!({ "a": a, "b0": b0, "z": z.values() }), join(z.values()))
            }
        }
    } else if let Some(raw) = &args.c {
        let values: Vec<i64> = parse_list(raw, "c")?;
        let c = CCoords::new(values.len(), values)?;
        let p = c_to_partition(&c);
        (partition_json(&p), p.to_string())
    } else if let Some(raw) = &args.z {
        let values: Vec<u64> = parse_list(raw, "z")?;
        let b0 = need(args.b0, "b0")?;
        let z = ZCoords::new(values.len(), b0, values)?;
        let p = x_to_partition(&z_to_x(&z)?);
        (partition_json(&p), p.to_string())
    } else {
        return Err(Failure::Usage("biject needs --partition, --c or --z".into()));
    };
    let csv = format!("value\n{plain}\n");
    Ok(render(format, json, plain, csv))
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn verify_cmd(format: Format, args: &VerifyArgs) -> Outcome {
    let checks: Vec<Check> = if args.check == "all" {
        Check::ALL.to_vec()
    } else {
        vec![Check::from_name(&args.check)
            .ok_or_else(|| Failure::Usage(format!("unknown check {:?}", args.check)))?]
    };
    let mut limits = Limits::default();
    if let Some(n) = args.max_sum {
        limits.max_sum = n;
        limits.max_sum_sizes = n;
        limits.max_progression = n;
    }
    if let Some(n) = args.max_s {
        limits.max_s = n;
    }
    if let Some(n) = args.max_a {
        limits.max_a_parts = n;
        limits.max_a_lattice = n;
        limits.abc_a.1 = n;
    }
    if let Some(n) = args.max_x {
        limits.max_x = n;
    }
    if let Some(n) = args.max_b {
        limits.max_b_lattice = n;
        limits.max_b_abc = n;
    }
    if let Some(n) = args.max_c {
        limits.max_c_abc = n;
    }
    if let Some(n) = args.ceiling {
        limits.ceiling = n;
    }
    let mut rows = Vec::new();
    for check in checks {
        rows.extend(verify::run_check(check, &limits)?);
    }
    let text = match format {
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "check": r.check,
                        "params": r.params,
                        "formula": r.formula,
                        "oracle": r.oracle,
                        "match": r.matches,
                    })
                })
                .collect();
            format!("{}\n", json!({ "rows": list, "mismatches": rows.iter().filter(|r| !r.matches).count() }))
        }
        Format::Plain => rows.iter().map(|r| format!("{r}\n")).collect(),
        Format::Csv => {
            let mut s = String::from("check,params,formula,oracle,match\n");
            for r in &rows {
                s.push_str(&format!(
                    "{},\"{}\",{},{},{}\n",
                    r.check, r.params, r.formula, r.oracle, r.matches
                ));
            }
            s
        }
    };
    match verify::first_mismatch(&rows) {
        Some(row) => Err(Failure::Mismatch(row.clone())),
        None => Ok(text),
    }
}

fn table(format: Format, args: &TableArgs) -> Outcome {
    if !verify::SEQUENCES.contains(&args.sequence.as_str()) {
        return Err(Failure::Usage(format!(
            "unknown sequence {:?}; expected one of {}",
            args.sequence,
            verify::SEQUENCES.join(", ")
        )));
    }
    let values = verify::sequence(&args.sequence, args.n)?;
    let strings: Vec<String> = values.iter().map(ToString::to_string).collect();
    let mut csv = String::from("n,value\n");
    for (n, v) in strings.iter().enumerate() {
        csv.push_str(&format!("{},{v}\n", n + 1));
    }
    Ok(render(
        format,
        json!({ "sequence": args.sequence, "values": strings }),
        strings.join(", "),
        csv,
    ))
}
