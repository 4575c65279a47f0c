//! Command-line front end for the twisted Hurwitz toolkit.
//!
//! [`run`] parses arguments and returns the text to print together with the
//! process exit code, so the binary is a thin wrapper and tests can drive
//! every command in-process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use hurwitz_core::enumerate::{enumerate_with, EnumOptions};
use hurwitz_core::jack::{verify_cauchy, zonal_exponential_form};
use hurwitz_core::partition::{parse_rational, partitions_of};
use hurwitz_core::surgery::{analyze, boundary_permutation_cover, xi};
use hurwitz_core::symfunc::{cj_matrix, cutjoin_iterates, generating_table};
use hurwitz_core::{
    hurwitz_by_zonal, jack_polynomial, zonal, Budget, Error, PSeries, Partition, Rational, RibbonDecomposition,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Degrees above this are refused by the cut-and-join commands before any
/// work starts.
pub const MAX_CUTJOIN_WEIGHT: usize = 40;

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Twisted Hurwitz numbers, Jack polynomials and ribbon surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enumerate,
    Cutjoin,
    Zonal,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute h~_{m,λ} by one or all models.
    Hurwitz {
        #[arg(long)]
        m: usize,
        /// Partition as comma-separated parts, e.g. "2,1".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Work budget, in product words, for enumeration and cut-and-join.
        #[arg(long, default_value_t = Budget::DEFAULT_MAX_WORK)]
        max_work: u128,
        /// Worker threads for enumeration.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// h~_{m,λ} for all 1 ≤ |λ| ≤ n and m' ≤ m.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_MAX_WORK)]
        max_work: u128,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Jack polynomial J_λ^(α) in the power-sum basis.
    Jack {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Positive rational, e.g. "2" or "1/2".
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Zonal polynomial Z_λ with its hook product and Hurwitz exponential form.
    Zonal {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Analyze a ribbon-decomposition word such as "G[1,2]^{++};G[1,3]^{+-}".
    Surface {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Nonzero entries of the twisted cut-and-join matrix at degree n.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Re-run the built-in reference checks.
    Selfcheck {
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
    },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(err: &Error) -> Self {
        let (code, hint) = match err {
            Error::Resource { .. } => (EXIT_RESOURCE, "raise --max-work or reduce n, m"),
            Error::Degeneracy { .. } => (EXIT_INVALID, "choose a different alpha"),
            Error::Parse { .. } | Error::Domain(_) => (EXIT_INVALID, "check the arguments"),
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\nhint: {hint}\n"),
            code,
        }
    }
}

/// A rational as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for JsonRational {
    fn from(r: &Rational) -> Self {
        JsonRational {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl JsonRational {
    pub fn to_rational(&self) -> Option<Rational> {
        let num = self.num.parse().ok()?;
        let den: num_bigint::BigInt = self.den.parse().ok()?;
        (!num_traits::Zero::is_zero(&den)).then(|| Rational::new(num, den))
    }
}

/// One row of `table --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTableRow {
    pub n: usize,
    pub m: usize,
    pub lambda: Vec<usize>,
    pub value: JsonRational,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_INVALID,
                }
            } else {
                Outcome::ok(rendered)
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Hurwitz {
            m,
            lambda,
            method,
            max_work,
            threads,
            format,
        } => cmd_hurwitz(m, &lambda, method, Budget::new(max_work), threads, format),
        Command::Table { n, m, max_work, format } => cmd_table(n, m, Budget::new(max_work), format),
        Command::Jack { lambda, alpha, format } => cmd_jack(&lambda, &alpha, format),
        Command::Zonal { lambda, format } => cmd_zonal(&lambda, format),
        Command::Surface { n, word, format } => cmd_surface(n, &word, format),
        Command::Matrix { n, format } => cmd_matrix(n, format),
        Command::Selfcheck { level } => Ok(cmd_selfcheck(level)),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    text.parse::<Partition>()
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn check_cutjoin_budget(n: usize, m: usize, budget: Budget) -> Result<(), Error> {
    if n > MAX_CUTJOIN_WEIGHT {
        return Err(Error::Resource {
            what: "cut-and-join degree",
            workload: n as u128,
            budget: MAX_CUTJOIN_WEIGHT as u128,
        });
    }
    // Each application touches at most every (source, target) pair once.
    let dim = partitions_of(n).len() as u128;
    budget.check(
        "cut-and-join: m applications on the degree-n basis",
        dim * dim * m as u128,
    )
}

fn series_terms_json(series: &PSeries) -> Value {
    Value::Array(
        series
            .terms()
            .map(|(mu, c)| json!({ "mu": mu.parts(), "coeff": JsonRational::from(c) }))
            .collect(),
    )
}

pub fn cmd_hurwitz(
    m: usize,
    lambda: &str,
    method: Method,
    budget: Budget,
    threads: usize,
    format: Format,
) -> Result<Outcome, Error> {
    let lambda = parse_partition(lambda)?;
    let n = lambda.weight();
    if n == 0 {
        return Err(Error::Domain("λ must have at least one part".into()));
    }
    if threads == 0 {
        return Err(Error::Domain("--threads must be at least 1".into()));
    }
    let wanted: Vec<Method> = match method {
        Method::All => vec![Method::Enumerate, Method::Cutjoin, Method::Zonal],
        single => vec![single],
    };
    // Validate every budget before computing anything.
    for method in &wanted {
        match method {
            Method::Enumerate => {
                let work = hurwitz_core::enumerate::workload(n, m).unwrap_or(u128::MAX);
                budget.check("enumerate: (2n(n-1))^m product words", work)?;
            }
            Method::Cutjoin => check_cutjoin_budget(n, m, budget)?,
            Method::Zonal => {
                if n > hurwitz_core::jack::MAX_JACK_WEIGHT {
                    return Err(Error::Resource {
                        what: "zonal polynomial weight",
                        workload: n as u128,
                        budget: hurwitz_core::jack::MAX_JACK_WEIGHT as u128,
                    });
                }
            }
            Method::All => unreachable!(),
        }
    }

    let mut values: Vec<(&'static str, Rational)> = Vec::new();
    for method in wanted {
        let (name, value) = match method {
            Method::Enumerate => {
                let counts = enumerate_with(n, m, EnumOptions { budget, threads })?;
                ("enumerate", counts.values[&lambda].clone())
            }
            Method::Cutjoin => ("cutjoin", cutjoin_iterates(n, m)[m].coeff(&lambda)),
            Method::Zonal => ("zonal", hurwitz_by_zonal(m, &lambda)?),
            Method::All => unreachable!(),
        };
        values.push((name, value));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let compared = values.len() > 1;

    let stdout = match format {
        Format::Text => {
            let mut out = format!("h~_{{{m},{lambda}}}\n");
            for (name, value) in &values {
                writeln!(out, "{name:<10} {value}").unwrap();
            }
            if compared {
                out.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
            }
            out
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (name, value) in &values {
                obj.insert(name.to_string(), json!(JsonRational::from(value)));
            }
            let mut doc = json!({ "m": m, "lambda": lambda.parts(), "values": obj });
            if compared {
                doc["agree"] = json!(agree);
            }
            pretty(&doc)
        }
    };
    Ok(Outcome::with_code(stdout, if agree { EXIT_OK } else { EXIT_MISMATCH }))
}

pub fn table_rows(n_max: usize, m_max: usize) -> Vec<JsonTableRow> {
    generating_table(n_max, m_max)
        .into_iter()
        .map(|row| JsonTableRow {
            n: row.lambda.weight(),
            m: row.m,
            lambda: row.lambda.parts().to_vec(),
            value: JsonRational::from(&row.value),
        })
        .collect()
}

pub fn cmd_table(n_max: usize, m_max: usize, budget: Budget, format: Format) -> Result<Outcome, Error> {
    check_cutjoin_budget(n_max, m_max, budget)?;
    let rows = table_rows(n_max, m_max);
    let stdout = match format {
        Format::Text => {
            let mut out = String::from("n\tm\tlambda\tvalue\n");
            for row in generating_table(n_max, m_max) {
                writeln!(out, "{}\t{}\t{}\t{}", row.lambda.weight(), row.m, row.lambda, row.value).unwrap();
            }
            out
        }
        // Serialized from the struct so keys keep the schema order.
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_jack(lambda: &str, alpha: &str, format: Format) -> Result<Outcome, Error> {
    let lambda = parse_partition(lambda)?;
    let alpha = parse_rational(alpha)?;
    let jack = jack_polynomial(&lambda, &alpha)?;
    let stdout = match format {
        Format::Text => format!(
            "J_{lambda}^({alpha}) = {}\neigenvalue {}\n",
            jack.expansion,
            jack.eigenvalue()
        ),
        Format::Json => pretty(&json!({
            "lambda": lambda.parts(),
            "alpha": JsonRational::from(&alpha),
            "eigenvalue": JsonRational::from(&jack.eigenvalue()),
            "expansion": series_terms_json(&jack.expansion),
        })),
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_zonal(lambda: &str, format: Format) -> Result<Outcome, Error> {
    let lambda = parse_partition(lambda)?;
    let z = zonal(&lambda)?;
    let two = hurwitz_core::partition::integer(2);
    let hooks = lambda.hook_product(&two);
    let form = if lambda.is_empty() {
        Vec::new()
    } else {
        zonal_exponential_form(&lambda)?
    };
    let stdout = match format {
        Format::Text => {
            let mut out = format!("Z_{lambda} = {}\nH*H' = {hooks}\n", z.expansion);
            if !form.is_empty() {
                let terms: Vec<String> = form.iter().map(|(rate, c)| format!("{c} * exp({rate} b)")).collect();
                writeln!(out, "sum_m h~_{{m,{lambda}}} b^m/m! = {}", terms.join(" + ")).unwrap();
            }
            out
        }
        Format::Json => pretty(&json!({
            "lambda": lambda.parts(),
            "expansion": series_terms_json(&z.expansion),
            "hook_product": JsonRational::from(&hooks),
            "exponential_form": form
                .iter()
                .map(|(rate, c)| json!({ "rate": JsonRational::from(rate), "coeff": JsonRational::from(c) }))
                .collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_surface(n: usize, word: &str, format: Format) -> Result<Outcome, Error> {
    let rd = RibbonDecomposition::parse(n, word)?;
    let report = analyze(&rd);
    let sigmas: Vec<String> = xi(&rd).sigmas().iter().map(|s| s.to_string()).collect();
    let boundary = boundary_permutation_cover(&rd);
    let stdout = match format {
        Format::Text => {
            let mut out = format!(
                "word: {}\nxi: {}\n",
                if rd.is_empty() {
                    "(empty)".to_string()
                } else {
                    rd.to_string()
                },
                sigmas.join(" ")
            );
            writeln!(out, "cover boundary: {boundary}").unwrap();
            writeln!(out, "boundary type: {}", report.boundary_type).unwrap();
            for c in &report.components {
                let disks: Vec<String> = c.disks.iter().map(|d| d.to_string()).collect();
                writeln!(
                    out,
                    "component {{{}}}: chi={} {} boundary {}: {}",
                    disks.join(","),
                    c.euler_characteristic,
                    if c.orientable { "orientable" } else { "non-orientable" },
                    c.boundary_partition,
                    c.classification
                )
                .unwrap();
            }
            out
        }
        Format::Json => pretty(&json!({
            "word": rd.to_string(),
            "xi": sigmas,
            "cover_boundary": boundary.to_string(),
            "report": serde_json::to_value(&report).expect("report serializes"),
        })),
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_matrix(n: usize, format: Format) -> Result<Outcome, Error> {
    if n == 0 {
        return Err(Error::Domain("matrix needs n ≥ 1".into()));
    }
    check_cutjoin_budget(n, 1, Budget::default())?;
    let entries = cj_matrix(n);
    let stdout = match format {
        Format::Text => {
            let mut out = String::new();
            for e in &entries {
                writeln!(out, "{} -> {}\t{}", e.source, e.target, e.value).unwrap();
            }
            out
        }
        Format::Json => pretty(&Value::Array(
            entries
                .iter()
                .map(|e| json!({ "source": e.source.parts(), "target": e.target.parts(), "value": e.value }))
                .collect(),
        )),
    };
    Ok(Outcome::ok(stdout))
}

type CheckResult = Result<(), String>;
type NamedCheck = (&'static str, fn() -> CheckResult);

fn golden_zonal() -> CheckResult {
    let rows: [(&str, &str, i64); 6] = [
        ("1", "1 * p[1]", 2),
        ("1,1", "-1 * p[2] + 1 * p[1,1]", 12),
        ("2", "2 * p[2] + 1 * p[1,1]", 24),
        ("1,1,1", "2 * p[3] + -3 * p[2,1] + 1 * p[1,1,1]", 144),
        ("2,1", "-2 * p[3] + 1 * p[2,1] + 1 * p[1,1,1]", 80),
        ("3", "8 * p[3] + 6 * p[2,1] + 1 * p[1,1,1]", 720),
    ];
    let two = hurwitz_core::partition::integer(2);
    for (lambda, expansion, hooks) in rows {
        let lambda: Partition = lambda.parse().map_err(|e: Error| e.to_string())?;
        let z = zonal(&lambda).map_err(|e| e.to_string())?;
        if z.expansion.to_string() != expansion || lambda.hook_product(&two) != hurwitz_core::partition::integer(hooks)
        {
            return Err(format!("Z_{lambda} = {}", z.expansion));
        }
    }
    Ok(())
}

fn golden_values() -> CheckResult {
    let cases: [(usize, &str, i64); 7] = [
        (1, "2", 2),
        (1, "2,1", 2),
        (2, "1,1", 4),
        (2, "2", 4),
        (2, "1,1,1", 4),
        (2, "2,1", 4),
        (2, "3", 16),
    ];
    for (m, lambda, value) in cases {
        agree_three_ways(m, &lambda.parse().map_err(|e: Error| e.to_string())?, Some(value))?;
    }
    Ok(())
}

fn agree_three_ways(m: usize, lambda: &Partition, expected: Option<i64>) -> CheckResult {
    let e = hurwitz_core::hurwitz_enumerated(m, lambda).map_err(|e| e.to_string())?;
    let c = hurwitz_core::hurwitz_by_cutjoin(m, lambda);
    let z = hurwitz_by_zonal(m, lambda).map_err(|e| e.to_string())?;
    let target = expected
        .map(hurwitz_core::partition::integer)
        .unwrap_or_else(|| c.clone());
    if e == target && c == target && z == target {
        Ok(())
    } else {
        Err(format!("h~_{{{m},{lambda}}}: enumerate {e}, cutjoin {c}, zonal {z}"))
    }
}

fn golden_moebius() -> CheckResult {
    let rd = RibbonDecomposition::parse(3, "G[1,2]^{++};G[2,3]^{++};G[1,3]^{+-}").map_err(|e| e.to_string())?;
    let report = analyze(&rd);
    let ok = report.components.len() == 1
        && !report.components[0].orientable
        && report.components[0].euler_characteristic == 0
        && report.boundary_type.parts() == [3];
    ok.then_some(()).ok_or_else(|| format!("{report:?}"))
}

fn sweep() -> CheckResult {
    for n in 1..=4 {
        for m in 0..=3 {
            for lambda in partitions_of(n) {
                agree_three_ways(m, &lambda, None)?;
            }
        }
    }
    Ok(())
}

fn cauchy() -> CheckResult {
    for alpha in [hurwitz_core::partition::integer(1), hurwitz_core::partition::integer(2)] {
        for n in 1..=5 {
            if !verify_cauchy(n, &alpha).map_err(|e| e.to_string())? {
                return Err(format!("n={n}, alpha={alpha}"));
            }
        }
    }
    Ok(())
}

pub fn cmd_selfcheck(level: Level) -> Outcome {
    let mut checks: Vec<NamedCheck> = vec![
        ("zonal table", golden_zonal),
        ("worked Hurwitz values", golden_values),
        ("Moebius band", golden_moebius),
    ];
    if level == Level::Full {
        checks.push(("three-model sweep n<=4 m<=3", sweep));
        checks.push(("Cauchy identity n<=5", cauchy));
    }
    let mut out = String::new();
    let mut failed = false;
    for (name, check) in checks {
        match check() {
            Ok(()) => writeln!(out, "PASS {name}").unwrap(),
            Err(detail) => {
                failed = true;
                writeln!(out, "FAIL {name}: {detail}").unwrap();
            }
        }
    }
    Outcome::with_code(out, if failed { EXIT_MISMATCH } else { EXIT_OK })
}
