//! The `twgr` command-line front end.
//!
//! Exit codes: `0` success, `1` a verification mismatch, `2` a usage error or
//! an enumeration cap.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::braidchar::{braiding_character, CharacterTable};
use crate::chromatic::{
    bz2_cardinality, chromatic_character, chromatic_decision, integral_bz2_sq, loop_bz2_integral,
    no_truncated_unit_check, transchromatic_table, truncated_units, StemGroup,
};
use crate::coeffring::{bigint_to_json, Ring, Sign, SignedUnitValue};
use crate::error::Error;
use crate::extalg::{ext_series, verify_sym_ext_identity};
use crate::graded::{count_twists, FiniteAbelianGroup, Twist};
use crate::oracle::trace_at_class;
use crate::symgroup::partitions;
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TwistArg {
    Trivial,
    Koszul,
    /// The parity twist `ε = u` over `Z[u]/(u² - 1)`.
    Parity,
}

#[derive(Debug, Parser)]
#[command(name = "twgr", version, about = "Braiding characters and dimensions in twisted graded categories")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "plain", global = true)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes of Σ_m: cycle counts, centralizer orders, class sizes.
    Classes { m: u32 },

    /// Braiding character of the m-th tensor power.
    Character {
        #[arg(long, value_enum)]
        twist: TwistArg,
        #[arg(long, allow_hyphen_values = true)]
        dim: i64,
        /// Coefficient of u in the dimension (parity twist only).
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        odd_dim: i64,
        #[arg(long)]
        m: u32,
        /// Recompute every row as an explicit trace on (Q^dim)^{⊗m}.
        #[arg(long)]
        verify_oracle: bool,
    },

    /// Generating functions of exterior-power dimensions.
    Extseries {
        #[arg(long, value_enum)]
        twist: TwistArg,
        #[arg(long, allow_hyphen_values = true)]
        dim: i64,
        #[arg(long)]
        order: u32,
        /// Check that the Sym series times the Koszul series at -t is 1.
        #[arg(long)]
        check_identity: bool,
    },

    /// Sign decision and braiding character for E_n with a twist α.
    Chromatic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        /// Cyclic orders presenting the dual stem; defaults to the reference table.
        #[arg(long, num_args = 0..)]
        stem_orders: Option<Vec<u64>>,
        /// Residues of α, one per cyclic factor.
        #[arg(long, num_args = 0..)]
        alpha: Vec<u64>,
        #[arg(long, default_value_t = 2)]
        m: u32,
    },

    /// Number of twisted graded Z-structures, from the cyclic orders of the unit group.
    CountTwists {
        #[arg(long, num_args = 0..)]
        units: Vec<u64>,
    },

    /// Component values of the transchromatic character on L^j BZ/2^k.
    Transchromatic {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
        #[arg(long, allow_hyphen_values = true)]
        omega: i64,
    },

    /// Semiadditive integrals over BZ/2 at height n.
    Integrals {
        #[arg(long)]
        n: u32,
    },

    /// Run every cross-module check and report one line per check.
    Verify,
}

/// What a CLI invocation printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput::ok(text)
            } else {
                CliOutput::usage(text)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => CliOutput::usage(format!("error: {e}\n")),
    }
}

fn execute(cli: &Cli) -> Result<CliOutput, Error> {
    let fmt = cli.format;
    match &cli.command {
        Command::Classes { m } => classes(*m, fmt),
        Command::Character {
            twist,
            dim,
            odd_dim,
            m,
            verify_oracle,
        } => character(*twist, *dim, *odd_dim, *m, *verify_oracle, fmt),
        Command::Extseries {
            twist,
            dim,
            order,
            check_identity,
        } => extseries(*twist, *dim, *order, *check_identity, fmt),
        Command::Chromatic {
            p,
            n,
            stem_orders,
            alpha,
            m,
        } => chromatic(*p, *n, stem_orders.clone(), alpha, *m, fmt),
        Command::CountTwists { units } => {
            let group = FiniteAbelianGroup::new(units.clone())?;
            let count = count_twists(&group);
            Ok(CliOutput::ok(match fmt {
                OutputFormat::Json => json!({ "units": units, "count": count }).to_string() + "\n",
                OutputFormat::Csv => format!("count\n{count}\n"),
                OutputFormat::Plain => format!("{count}\n"),
            }))
        }
        Command::Transchromatic { k, j, omega } => transchromatic(*k, *j, *omega, fmt),
        Command::Integrals { n } => integrals(*n, fmt),
        Command::Verify => {
            let report = verify::run_all();
            let mut out = String::new();
            for check in &report {
                let _ = writeln!(out, "{} {}: {}", if check.passed { "PASS" } else { "FAIL" }, check.name, check.detail);
            }
            let failed = report.iter().any(|c| !c.passed);
            Ok(CliOutput {
                code: if failed { 1 } else { 0 },
                stdout: out,
                stderr: String::new(),
            })
        }
    }
}

fn render_rows(fmt: OutputFormat, header: &[&str], rows: &[Vec<String>]) -> String {
    let sep = match fmt {
        OutputFormat::Csv => ",",
        _ => "\t",
    };
    let mut out = header.join(sep);
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = if fmt == OutputFormat::Csv {
            row.iter()
                .map(|c| if c.contains(',') { format!("\"{c}\"") } else { c.clone() })
                .collect()
        } else {
            row.clone()
        };
        out.push_str(&cells.join(sep));
        out.push('\n');
    }
    out
}

fn classes(m: u32, fmt: OutputFormat) -> Result<CliOutput, Error> {
    let parts = partitions(m)?;
    if fmt == OutputFormat::Json {
        let rows: Vec<Value> = parts
            .iter()
            .map(|l| {
                let counts: serde_json::Map<String, Value> = l
                    .cycle_counts()
                    .into_iter()
                    .map(|(k, n)| (k.to_string(), json!(n)))
                    .collect();
                json!({
                    "partition": l.to_json(),
                    "cycles": l.num_cycles(),
                    "cycle_counts": counts,
                    "centralizer_order": bigint_to_json(&l.centralizer_order().into()),
                    "class_size": bigint_to_json(&l.class_size().into()),
                })
            })
            .collect();
        return Ok(CliOutput::ok(json!({ "m": m, "classes": rows }).to_string() + "\n"));
    }
    let rows: Vec<Vec<String>> = parts
        .iter()
        .map(|l| {
            let counts: Vec<String> = l
                .cycle_counts()
                .into_iter()
                .rev()
                .map(|(k, n)| format!("{k}:{n}"))
                .collect();
            vec![
                l.to_string(),
                l.num_cycles().to_string(),
                counts.join(" "),
                l.centralizer_order().to_string(),
                l.class_size().to_string(),
            ]
        })
        .collect();
    Ok(CliOutput::ok(render_rows(
        fmt,
        &["partition", "cycles", "cycle_counts", "centralizer_order", "class_size"],
        &rows,
    )))
}

fn render_table<R: Ring>(table: &CharacterTable<R>, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => table.to_json().to_string() + "\n",
        _ => {
            let rows: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.partition.to_string(),
                        r.cycles.to_string(),
                        r.class_size.to_string(),
                        r.value.to_string(),
                        r.degree.to_string(),
                        r.action.as_str().to_string(),
                    ]
                })
                .collect();
            render_rows(
                fmt,
                &["partition", "cycles", "class_size", "value", "degree", "action"],
                &rows,
            )
        }
    }
}

fn integer_twist(twist: TwistArg) -> Option<Twist<BigInt>> {
    match twist {
        TwistArg::Trivial => Some(Twist::Trivial),
        TwistArg::Koszul => Some(Twist::Koszul),
        TwistArg::Parity => None,
    }
}

fn character(
    twist: TwistArg,
    dim: i64,
    odd_dim: i64,
    m: u32,
    verify_oracle: bool,
    fmt: OutputFormat,
) -> Result<CliOutput, Error> {
    let Some(tw) = integer_twist(twist) else {
        if verify_oracle {
            return Err(Error::Invalid("--verify-oracle needs an integer twist".into()));
        }
        let tw = Twist::unit(SignedUnitValue::u())?;
        let table = braiding_character(&tw, &SignedUnitValue::new(dim, odd_dim), m)?;
        return Ok(CliOutput::ok(render_table(&table, fmt)));
    };
    if odd_dim != 0 {
        return Err(Error::Invalid("--odd-dim only applies to the parity twist".into()));
    }
    let table = braiding_character(&tw, &BigInt::from(dim), m)?;
    let mut out = render_table(&table, fmt);
    if !verify_oracle {
        return Ok(CliOutput::ok(out));
    }
    let d = usize::try_from(dim)
        .map_err(|_| Error::Invalid("--verify-oracle needs a non-negative dimension".into()))?;
    let mut mismatches = Vec::new();
    for row in &table.rows {
        let trace = trace_at_class(&row.partition, d, &tw)?;
        if trace != row.value {
            mismatches.push(format!("{}: table {} oracle {}", row.partition, row.value, trace));
        }
    }
    let code = if mismatches.is_empty() { 0 } else { 1 };
    if fmt == OutputFormat::Json {
        let mut obj = table.to_json();
        obj["oracle"] = json!(if code == 0 { "match" } else { "mismatch" });
        out = obj.to_string() + "\n";
    } else if code == 0 {
        out.push_str("oracle: match\n");
    } else {
        let _ = writeln!(out, "oracle: mismatch ({})", mismatches.join("; "));
    }
    Ok(CliOutput {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

fn extseries(twist: TwistArg, dim: i64, order: u32, check: bool, fmt: OutputFormat) -> Result<CliOutput, Error> {
    let tw = integer_twist(twist)
        .ok_or_else(|| Error::Invalid("extseries takes --twist trivial or koszul".into()))?;
    let series = ext_series(&tw, &BigInt::from(dim), order)?;
    let identity = if check {
        let d = u64::try_from(dim)
            .map_err(|_| Error::Invalid("--check-identity needs a non-negative dimension".into()))?;
        Some(verify_sym_ext_identity(d, order)?)
    } else {
        None
    };
    let code = match &identity {
        Some(c) if !c.holds => 1,
        _ => 0,
    };
    let out = match fmt {
        OutputFormat::Json => {
            let mut obj = series.to_json();
            if let Some(c) = &identity {
                obj["identity"] = json!({ "holds": c.holds, "witness": c.witness.to_json() });
            }
            obj.to_string() + "\n"
        }
        _ => {
            let rows: Vec<Vec<String>> = (0..=order as usize)
                .map(|n| {
                    vec![
                        n.to_string(),
                        series.categorical.coeff(n).to_string(),
                        series.underlying.coeff(n).to_string(),
                    ]
                })
                .collect();
            let mut out = render_rows(fmt, &["n", "categorical", "underlying"], &rows);
            if let Some(c) = &identity {
                if c.holds {
                    out.push_str("identity holds\n");
                } else {
                    let _ = writeln!(out, "identity fails: product = {}", c.witness);
                }
            }
            out
        }
    };
    Ok(CliOutput {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

fn chromatic(
    p: u64,
    n: u32,
    stem_orders: Option<Vec<u64>>,
    alpha: &[u64],
    m: u32,
    fmt: OutputFormat,
) -> Result<CliOutput, Error> {
    let group = match stem_orders {
        Some(orders) => StemGroup::new(p, n, orders)?,
        None => StemGroup::reference(p, n)?,
    };
    let alpha = if alpha.is_empty() { group.zero() } else { alpha.to_vec() };
    let decision = chromatic_decision(&group, &alpha)?;
    let table = chromatic_character(&group, &alpha, m)?;
    let units: Vec<i64> = truncated_units(p, n).into_iter().map(Sign::to_i64).collect();
    let out = match fmt {
        OutputFormat::Json => json!({
            "p": p,
            "n": n,
            "stem_orders": group.orders(),
            "alpha": alpha,
            "truncated_units": units,
            "decision": decision.to_json(),
            "character": table.to_json(),
        })
        .to_string()
            + "\n",
        _ => {
            let mut out = format!("{}\nomega: {}\n", decision.label.as_str(), decision.omega);
            out.push_str(&render_table(&table, fmt));
            out
        }
    };
    Ok(CliOutput::ok(out))
}

fn transchromatic(k: u32, j: u32, omega: i64, fmt: OutputFormat) -> Result<CliOutput, Error> {
    let omega = Sign::from_i64(omega).ok_or_else(|| Error::Invalid("--omega must be 1 or -1".into()))?;
    let rows = transchromatic_table(k, j, omega)?;
    let out = match fmt {
        OutputFormat::Json => {
            json!({ "k": k, "j": j, "omega": omega.to_i64(), "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>() })
                .to_string()
                + "\n"
        }
        _ => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let coords: Vec<String> = r.component.coords.iter().map(u64::to_string).collect();
                    vec![
                        format!("({})", coords.join(",")),
                        r.component.valuation.to_string(),
                        r.value.to_i64().to_string(),
                        r.action.as_str().to_string(),
                    ]
                })
                .collect();
            render_rows(fmt, &["component", "valuation", "value", "action"], &rows)
        }
    };
    Ok(CliOutput::ok(out))
}

fn integrals(n: u32, fmt: OutputFormat) -> Result<CliOutput, Error> {
    let card = bz2_cardinality(n)?;
    let minus = integral_bz2_sq(n, Sign::Minus)?;
    let looped = loop_bz2_integral(n)?;
    let distinct = no_truncated_unit_check(n)?;
    debug_assert!(!card.is_zero());
    let out = match fmt {
        OutputFormat::Json => json!({
            "n": n,
            "cardinality": bigint_to_json(&card),
            "integral_minus_one_squared": bigint_to_json(&minus),
            "loop_integral": bigint_to_json(&looped),
            "obstruction": distinct,
        })
        .to_string()
            + "\n",
        _ => render_rows(
            fmt,
            &["n", "cardinality", "integral_minus_one_squared", "loop_integral", "obstruction"],
            &[vec![
                n.to_string(),
                card.to_string(),
                minus.to_string(),
                looped.to_string(),
                distinct.to_string(),
            ]],
        ),
    };
    Ok(CliOutput::ok(out))
}
