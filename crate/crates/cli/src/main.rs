//! `census`: exact counts of numerical semigroups by genus, as CSV tables.
//!
//! Every number printed is computed in exact integer or quadratic-field
//! arithmetic and rounded once at output time, so the bytes of a table are
//! identical across platforms and across worker-thread counts.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use semigroup_census::census::{
    baselines, bound_table, relaxed_closure_series, t_exact, t_lower, t_upper,
};
use semigroup_census::construction::{build_typed, count_typed_g};
use semigroup_census::tree_oracle;
use semigroup_census::type_space::{count_ak, enumerate_ak};
use semigroup_census::{Error, Limits, TypeDescriptor, CENSUS_CSV_HEADER};

#[derive(Parser)]
#[command(
    name = "census",
    version,
    about = "Exact census of numerical semigroups by genus"
)]
struct Cli {
    /// Worker threads (0 = all cores). The CENSUS_THREADS variable, if set,
    /// overrides this flag. Thread count never changes any output byte.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Decimal places for ratio columns.
    #[arg(long, global = true, default_value_t = 5,
          value_parser = clap::value_parser!(u32).range(1..=50))]
    places: u32,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Lift the built-in resource ceilings (runs may take very long).
    #[arg(long, global = true)]
    resource_override: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Walk the tree of all numerical semigroups and print the census
    /// table: genus, full count n_g, the f < 3m count t_g, both scaled by
    /// phi^(-g), and t_g/n_g.
    Tree {
        /// Deepest genus to count (each level costs ~phi times the last).
        #[arg(long)]
        max_genus: u32,
        /// Print per-genus Frobenius-class totals instead of the census.
        #[arg(long)]
        buckets: bool,
    },

    /// Evaluate the exact type-sum count t_g together with its Fibonacci
    /// lower and upper bounds, without walking the tree.
    FormulaT {
        /// Largest genus to evaluate.
        #[arg(long)]
        max_genus: u32,
    },

    /// Partial sums of the limiting constant for t_g/phi^g: row k_M adds
    /// the weight phi^(-c)/sqrt(5) of every type with level k <= k_M.
    Bound {
        /// Last level folded into the partial sum.
        #[arg(long)]
        kmax: u32,
    },

    /// Count the prefix sets at level k: subsets A of [0, k-1] containing 0
    /// with k not in A + A. These are the types of the 2m < f < 3m class.
    Types {
        /// Level k >= 1.
        #[arg(long)]
        k: u32,
        /// Also list the sets, in increasing bit-mask order.
        #[arg(long)]
        list: bool,
    },

    /// Build the semigroup with multiplicity m, type (A; k) and free subset
    /// B, and print its members (or gaps with --gaps).
    Construct {
        /// Multiplicity; must exceed k.
        #[arg(long)]
        m: u64,
        /// Level of the type.
        #[arg(long)]
        k: u32,
        /// Elements of A, comma separated, e.g. "0,2".
        #[arg(long)]
        a: String,
        /// Elements of the free subset B, comma separated.
        #[arg(long)]
        b: Option<String>,
        /// Print the gap set instead of the member list.
        #[arg(long)]
        gaps: bool,
    },

    /// Exact number of genus-g semigroups of one type, with the Fibonacci
    /// closed form and whether the two agree.
    CountType {
        /// Genus to count at.
        #[arg(long)]
        g: u64,
        /// Level of the type.
        #[arg(long)]
        k: u32,
        /// Elements of A, comma separated, e.g. "0,2".
        #[arg(long)]
        a: String,
    },

    /// Closed-form comparison counts per genus: the doubling lower bound
    /// 2 F_g, the coordinate upper bound 1 + 3*2^(g-3), the Dyck-path bound
    /// C(2g,g)/(g+1), and the relaxed-closure series.
    Baselines {
        /// Largest genus to print.
        #[arg(long)]
        max_genus: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    let threads = match std::env::var("CENSUS_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .context("CENSUS_THREADS must be a thread count")?,
        Err(_) => cli.threads,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("building the thread pool")?;
    let limits = if cli.resource_override {
        Limits::lifted()
    } else {
        Limits::default()
    };
    let output = pool.install(|| render(&cli.command, cli.places, &limits))?;
    match &cli.out {
        Some(path) => {
            std::fs::write(path, output).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{output}"),
    }
    Ok(())
}

fn render(cmd: &Command, places: u32, limits: &Limits) -> Result<String> {
    let mut out = String::new();
    match cmd {
        Command::Tree {
            max_genus,
            buckets: false,
        } => {
            out.push_str(CENSUS_CSV_HEADER);
            out.push('\n');
            for row in tree_oracle::census_table(*max_genus, places, limits)? {
                writeln!(out, "{}", row.csv_line())?;
            }
        }
        Command::Tree {
            max_genus,
            buckets: true,
        } => {
            let totals = tree_oracle::class_totals(*max_genus, limits)?;
            out.push_str("g,f_lt_2m,f_between_2m_3m,f_gt_3m,n_g\n");
            for (g, c) in totals.iter().enumerate().skip(1) {
                writeln!(
                    out,
                    "{g},{},{},{},{}",
                    c.f_lt_2m, c.f_between_2m_3m, c.f_gt_3m, c.all
                )?;
            }
        }
        Command::FormulaT { max_genus } => {
            out.push_str("g,t_lower,t_exact,t_upper\n");
            for g in 1..=*max_genus as u64 {
                writeln!(
                    out,
                    "{g},{},{},{}",
                    t_lower(g, limits)?,
                    t_exact(g, limits)?,
                    t_upper(g, limits)?
                )?;
            }
        }
        Command::Bound { kmax } => {
            out.push_str("k_M,partial_sum\n");
            for (k, v) in bound_table(*kmax, limits)? {
                writeln!(out, "{k},{}", v.to_decimal(places))?;
            }
        }
        Command::Types { k, list } => {
            writeln!(out, "{}", count_ak(*k)?)?;
            if *list {
                let ceiling = limits.histogram_k;
                if *k > ceiling {
                    return Err(Error::EnumerationTooLarge {
                        what: "type listing level",
                        requested: *k as u64,
                        ceiling: ceiling as u64,
                    }
                    .into());
                }
                let sets: Vec<String> = enumerate_ak(*k)?.map(|t| t.to_string()).collect();
                writeln!(out, "{}", sets.join(" "))?;
            }
        }
        Command::Construct { m, k, a, b, gaps } => {
            let t = TypeDescriptor::from_elements(*k, &parse_set(a)?)?;
            let b = match b {
                Some(s) => parse_set(s)?,
                None => Vec::new(),
            };
            let sg = build_typed(*m, &t, &b)?;
            let line = if *gaps {
                sg.gaps_string()
            } else {
                sg.members_string()
            };
            writeln!(out, "{line}")?;
        }
        Command::CountType { g, k, a } => {
            let t = TypeDescriptor::from_elements(*k, &parse_set(a)?)?;
            let c = count_typed_g(*g, &t);
            writeln!(out, "sum {}", c.sum)?;
            writeln!(out, "fibonacci_bound {}", c.fibonacci_form)?;
            writeln!(out, "exact {}", c.is_exact())?;
            writeln!(out, "condition_holds {}", c.condition_holds)?;
        }
        Command::Baselines { max_genus } => {
            let series = relaxed_closure_series(*max_genus as u64);
            out.push_str("g,doubling_lower,coordinate_upper,dyck_upper,relaxed_closure\n");
            for g in 1..=*max_genus as u64 {
                let b = baselines(g);
                writeln!(
                    out,
                    "{g},{},{},{},{}",
                    b.doubling_lower, b.coordinate_upper, b.dyck_upper, series[g as usize]
                )?;
            }
        }
    }
    Ok(out)
}

/// Parse "0,2" (optionally wrapped in braces) into a sorted element list.
fn parse_set(s: &str) -> Result<Vec<u64>> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| anyhow!("invalid set element {:?}", p.trim()))
        })
        .collect()
}
