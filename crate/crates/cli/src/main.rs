use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfcalc::expr::{parse_expression, print_expression};
use hopfcalc::hpf::load_presentation;
use hopfcalc::suite::{run_file_checks, run_suite};
use hopfcalc_core::coeff::FieldSpec;
use hopfcalc_core::hopf::catalog::{self, AlgebraName, PqPreset};
use hopfcalc_core::hopf::HopfPresentation;
use hopfcalc_core::nichols;
use hopfcalc_core::primitives::solve_skew_primitives;
use hopfcalc_core::Word;
use serde_json::json;

#[derive(Parser)]
#[command(name = "hopfcalc", version, about = "Exact Hopf-algebra verification engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Qr,
    Q,
    F7,
    F13,
}

impl FieldArg {
    fn spec(self) -> FieldSpec {
        match self {
            FieldArg::Qr => FieldSpec::Cyclotomic3,
            FieldArg::Q => FieldSpec::Rational,
            FieldArg::F7 => FieldSpec::f7(),
            FieldArg::F13 => FieldSpec::f13(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            FieldArg::Qr => "Qr",
            FieldArg::Q => "Q",
            FieldArg::F7 => "F7",
            FieldArg::F13 => "F13",
        }
    }
}

#[derive(Args)]
struct AlgebraOpts {
    /// Built-in algebra: Atilde, A, Agen, D, B, Atilde-rfree
    #[arg(long, default_value = "Atilde")]
    algebra: String,
    #[arg(long, value_enum, default_value = "qr")]
    field: FieldArg,
    /// Parameter preset p,q
    #[arg(long, default_value = "0,0")]
    pq: String,
    /// Load the presentation from a .hpf file instead of the catalog
    #[arg(long)]
    presentation: Option<PathBuf>,
}

impl AlgebraOpts {
    fn build(&self) -> Result<HopfPresentation, String> {
        if let Some(path) = &self.presentation {
            return load_presentation(path).map_err(|e| e.to_string());
        }
        let name = AlgebraName::parse(&self.algebra)
            .ok_or_else(|| format!("unknown algebra `{}`", self.algebra))?;
        let preset = PqPreset::parse(&self.pq)
            .ok_or_else(|| format!("unknown preset `{}` (use 0,0 or 6,3)", self.pq))?;
        catalog::build(name, &self.field.spec(), preset).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an expression to its normal form
    Reduce {
        #[command(flatten)]
        opts: AlgebraOpts,
        /// Expression over the generators and aliases
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Run structural checks (confluence, bialgebra, antipode) for one algebra
    Verify {
        #[command(flatten)]
        opts: AlgebraOpts,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate irreducible basis words up to a truncation weight
    Basis {
        #[command(flatten)]
        opts: AlgebraOpts,
        #[arg(long, default_value_t = 8)]
        max_weight: u64,
        #[arg(long)]
        json: bool,
    },
    /// Skew-primitive census over the six group-likes
    Primitives {
        #[command(flatten)]
        opts: AlgebraOpts,
        #[arg(long, default_value_t = 10)]
        max_weight: u64,
        #[arg(long)]
        json: bool,
    },
    /// Nichols-algebra ranks of a braided component
    Nichols {
        #[arg(long, value_enum, default_value = "qr")]
        field: FieldArg,
        /// Component: V1, Va, Vb, Va-derived
        #[arg(long, default_value = "Va")]
        space: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Cleft-extension checks for the quotient coalgebra
    Cleft {
        #[command(flatten)]
        opts: AlgebraOpts,
        #[arg(long)]
        json: bool,
    },
    /// Run the registered verification suite
    Suite {
        /// Check-id glob, '*' wildcard
        #[arg(default_value = "*")]
        filter: String,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        /// Run structural checks on a presentation file instead
        #[arg(long)]
        presentation: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Reduce { opts, expr, json } => {
            let h = match opts.build() {
                Ok(h) => h,
                Err(e) => return usage_error(&e),
            };
            match parse_expression(&h, &expr) {
                Ok(p) => {
                    let rendered = print_expression(&h, &p);
                    if json {
                        println!("{}", json!({"input": expr, "normal_form": rendered}));
                    } else {
                        println!("{rendered}");
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&format!("{e}")),
            }
        }
        Command::Verify { opts, json } => {
            let h = match opts.build() {
                Ok(h) => h,
                Err(e) => return usage_error(&e),
            };
            let conf = h.system().check_confluence();
            let mut failures: Vec<String> = conf
                .failures
                .iter()
                .map(|f| format!("confluence: {}", h.render_word(&f.witness)))
                .collect();
            if h.has_coalgebra() {
                match h.check_bialgebra() {
                    Ok(rep) => failures.extend(rep.failures),
                    Err(e) => failures.push(format!("bialgebra: {e}")),
                }
                match h.check_antipode() {
                    Ok(rep) => failures.extend(rep.failures),
                    Err(e) => failures.push(format!("antipode: {e}")),
                }
            }
            if json {
                println!(
                    "{}",
                    json!({
                        "rules": h.system().rules().len(),
                        "ambiguities": conf.ambiguities,
                        "failures": failures,
                    })
                );
            } else {
                println!(
                    "{} rules, {} ambiguities, {} failures",
                    h.system().rules().len(),
                    conf.ambiguities,
                    failures.len()
                );
                for f in &failures {
                    println!("  {f}");
                }
            }
            if failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Basis { opts, max_weight, json } => {
            let h = match opts.build() {
                Ok(h) => h,
                Err(e) => return usage_error(&e),
            };
            let basis = h.basis_words(max_weight);
            if json {
                let words: Vec<String> =
                    basis.words.iter().map(|w| h.render_word(w)).collect();
                println!(
                    "{}",
                    json!({"max_weight": max_weight, "count": words.len(),
                           "exact": basis.exact, "words": words})
                );
            } else {
                for w in &basis.words {
                    println!("{}", h.render_word(w));
                }
                println!(
                    "{} words up to weight {max_weight}{}",
                    basis.words.len(),
                    if basis.exact { " (complete basis)" } else { "" }
                );
            }
            ExitCode::SUCCESS
        }
        Command::Primitives { opts, max_weight, json } => {
            let h = match opts.build() {
                Ok(h) => h,
                Err(e) => return usage_error(&e),
            };
            let grouplikes = [
                Word::empty(),
                Word::from_letters(&[0]),
                Word::from_letters(&[1]),
                Word::from_letters(&[0, 0]),
                Word::from_letters(&[0, 1]),
                Word::from_letters(&[0, 0, 1]),
            ];
            let mut rows = Vec::new();
            for g in &grouplikes {
                match solve_skew_primitives(&h, g, max_weight) {
                    Ok(sol) => rows.push((h.render_word(g), sol.dim())),
                    Err(e) => return usage_error(&format!("{e:?}")),
                }
            }
            if json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(g, d)| json!({"grouplike": g, "dim": d}))
                    .collect();
                println!("{}", json!({"max_weight": max_weight, "components": items}));
            } else {
                for (g, d) in &rows {
                    println!("V_{g}: dim {d}");
                }
            }
            ExitCode::SUCCESS
        }
        Command::Nichols { field, space, max_degree, json } => {
            let spec = field.spec();
            let v = match space.as_str() {
                "Vb" | "V1" | "Va" | "Va-derived" => {
                    if spec.root().is_err() {
                        return usage_error("this component needs a cube root of unity");
                    }
                    let h = catalog::build(AlgebraName::Atilde, &spec, PqPreset::Zero)
                        .expect("catalog");
                    let built = match space.as_str() {
                        "Vb" => nichols::space_vb(&h),
                        "V1" => nichols::space_v1(&h),
                        "Va" => Ok(nichols::space_va_closed_form(&spec)),
                        _ => nichols::space_va_derived(&h),
                    };
                    match built {
                        Ok(v) => v,
                        Err(e) => return usage_error(&format!("{e}")),
                    }
                }
                other => return usage_error(&format!("unknown space `{other}`")),
            };
            match v.nichols_dims(max_degree) {
                Ok(rep) => {
                    if json {
                        println!(
                            "{}",
                            json!({
                                "space": space, "field": field.name(),
                                "ranks": rep.ranks, "kernel_dims": rep.kernel_dims,
                                "total": rep.total, "terminated": rep.terminated,
                                "char_caveat": rep.char_caveat,
                            })
                        );
                    } else {
                        println!("ranks: {:?}", rep.ranks);
                        println!(
                            "total: {}{}",
                            rep.total,
                            if rep.terminated { " (series terminated)" } else { "" }
                        );
                        if rep.char_caveat {
                            println!(
                                "warning: positive characteristic, the symmetrizer degenerates"
                            );
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&format!("{e}")),
            }
        }
        Command::Cleft { opts, json } => {
            use hopfcalc_core::cleft::QuotientCoalgebra;
            let name = match AlgebraName::parse(&opts.algebra) {
                Some(n) => n,
                None => return usage_error(&format!("unknown algebra `{}`", opts.algebra)),
            };
            let q = match QuotientCoalgebra::for_algebra(name, &opts.field.spec()) {
                Ok(q) => q,
                Err(e) => return usage_error(&format!("{e}")),
            };
            let mut failures = Vec::new();
            for (label, rep) in [
                ("section", q.check_section()),
                ("colinearity", q.check_colinearity()),
                ("coradical_inverse", q.check_coradical_inverse()),
            ] {
                match rep {
                    Ok(rep) if rep.pass() => {}
                    Ok(rep) => {
                        failures.extend(rep.failures.iter().map(|f| format!("{label}: {f}")))
                    }
                    Err(e) => failures.push(format!("{label}: {e}")),
                }
            }
            if json {
                println!("{}", json!({"algebra": opts.algebra, "failures": failures}));
            } else if failures.is_empty() {
                println!("section, colinearity, coradical inverses: all pass");
            } else {
                for f in &failures {
                    println!("FAIL {f}");
                }
            }
            if failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Suite { filter, algebra, field, presentation, json } => {
            let report = if let Some(path) = presentation {
                match run_file_checks(&path) {
                    Ok(r) => r,
                    Err(e) => return usage_error(&format!("{e}")),
                }
            } else {
                run_suite(&filter, algebra.as_deref(), field.map(FieldArg::name))
            };
            if report.summary.total == 0 {
                return usage_error("no checks matched the filter");
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
            } else {
                print!("{}", report.render_human());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
