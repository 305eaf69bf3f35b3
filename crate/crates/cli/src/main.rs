//! Command-line surface: exact series, factorizations, Witt vectors, and
//! the verification suite.
//!
//! Exit codes: 0 on success, 1 on a semantic or verification failure
//! (non-code input, failed check), 2 on usage errors.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wittcode::codes::{
    builtin_code, right_length_factorization, witt_code_series, GradedCode,
};
use wittcode::combi::dyck::dyck_primes;
use wittcode::combi::lattice::{
    lambda_series, lattice_count, lattice_paths, path_alphabet, phi_series, s_series, LatticeSpec,
};
use wittcode::freealg::NcSeries;
use wittcode::ncsf::{
    lambda_on_q, ribbon_positivity_check, witt_q_sequence, Basis, SymElement,
};
use wittcode::verify::{run_all, run_checks, run_suite, CheckOutcome, Suite};
use wittcode::witt::{
    d_log, e_map, ghost, iota, star_factorial, star_multinomial, unghost,
    verify_star_binomial_product, GhostVector, WittVector,
};
use wittcode::{Error, Result};

const ORDER_CAP: u32 = 16;

#[derive(Parser)]
#[command(
    name = "wittcode",
    version,
    about = "Noncommutative Witt symmetric functions, code factorizations, and Witt vectors — exact arithmetic"
)]
struct Cli {
    /// Truncation order (degree bound) for graded computations.
    #[arg(long, global = true, default_value_t = 8)]
    order: u32,

    /// Output format.
    #[arg(long, global = true, value_enum, ignore_case = true, default_value_t = Format::Text)]
    format: Format,

    /// Code name (fib, ba-star, dyck-len, dyck-rho, integers,
    /// lambda-letters) or `@path.json` for a custom finite code.
    #[arg(long, global = true)]
    code: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    S,
    Lambda,
    Phi,
    Q,
}

#[derive(Subcommand)]
enum Command {
    /// Specialized series of a code: S_n, Λ_n, Φ_n, or Q_n.
    Series(SeriesArgs),
    /// Right length factorization of a code, reported degree by degree.
    Factorize,
    /// Decompose a word of C* into factorization blocks.
    Decompose(DecomposeArgs),
    /// Symbolic computations in Sym (Q-table, conversions, ribbons).
    Ncsf(NcsfArgs),
    /// Witt vector arithmetic through ghost components.
    Witt(WittArgs),
    /// Star-multinomials and star-factorials.
    Star(StarArgs),
    /// Combinatorial enumerators (Dyck words, lattice paths).
    Combi(CombiArgs),
    /// Run verification checks; exits 1 if any fails.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SeriesArgs {
    /// Which statistic to specialize.
    #[arg(long, value_enum, ignore_case = true)]
    stat: Stat,
    /// Degree to compute.
    #[arg(long, conflicts_with = "all")]
    n: Option<u32>,
    /// Print every degree up to the order.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct DecomposeArgs {
    /// The word to decompose (letter string, `.`-separated if needed).
    #[arg(long)]
    word: String,
}

#[derive(Args)]
struct NcsfArgs {
    #[command(subcommand)]
    command: NcsfCommand,
}

#[derive(Subcommand)]
enum NcsfCommand {
    /// Print Q_1 … Q_N on the Λ basis.
    QTable,
    /// Convert a JSON element between bases.
    Convert {
        #[arg(long, value_enum, ignore_case = true)]
        to: BasisArg,
        /// JSON element or `@path.json`.
        #[arg(long)]
        input: String,
    },
    /// The expansion of Λ̃_n on the Q basis.
    LambdaOnQ {
        #[arg(long)]
        n: u32,
    },
    /// Ribbon support of -Q_n (checks 0/1 coefficients).
    Ribbons {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    S,
    Lambda,
    Phi,
    R,
    Q,
}

impl From<BasisArg> for Basis {
    fn from(value: BasisArg) -> Self {
        match value {
            BasisArg::S => Basis::S,
            BasisArg::Lambda => Basis::Lambda,
            BasisArg::Phi => Basis::Phi,
            BasisArg::R => Basis::R,
            BasisArg::Q => Basis::Q,
        }
    }
}

#[derive(Args)]
struct WittArgs {
    #[command(subcommand)]
    command: WittCommand,
}

#[derive(Subcommand)]
enum WittCommand {
    /// Ghost components of a Witt vector.
    Ghost {
        /// JSON array of `num/den` strings.
        #[arg(long)]
        input: String,
    },
    /// Witt coordinates from ghost components.
    Unghost {
        #[arg(long)]
        input: String,
    },
    /// Witt sum.
    Add {
        #[arg(short = 'a', long)]
        a: String,
        #[arg(short = 'b', long)]
        b: String,
    },
    /// Witt product.
    Mul {
        #[arg(short = 'a', long)]
        a: String,
        #[arg(short = 'b', long)]
        b: String,
    },
    /// The series e(a) = Π (1 - a_n t^n)^{-1}.
    Emap {
        #[arg(long)]
        input: String,
    },
    /// The logarithmic derivative ∂ f = f'/f of a series (constant term 1).
    Dlog {
        /// JSON array of series coefficients.
        #[arg(long)]
        input: String,
    },
    /// ι(c) = Σ c_n t^{n-1} of a ghost vector.
    Iota {
        #[arg(long)]
        input: String,
    },
}

#[derive(Args)]
struct StarArgs {
    #[command(subcommand)]
    command: StarCommand,
}

#[derive(Subcommand)]
enum StarCommand {
    /// The star-multinomial *(Σ parts; parts).
    Multinomial {
        /// The multinomial parts, e.g. `2 2`.
        parts: Vec<u32>,
        /// Also print the e-map series.
        #[arg(long)]
        emap: bool,
    },
    /// The star-factorial *n!/n!.
    Factorial {
        n: u32,
        #[arg(long)]
        emap: bool,
    },
}

#[derive(Args)]
struct CombiArgs {
    #[command(subcommand)]
    command: CombiCommand,
}

#[derive(Subcommand)]
enum CombiCommand {
    /// Prime Dyck words of a given length.
    Dyck {
        #[arg(long)]
        length: u32,
    },
    /// Staircase-bounded lattice paths of degree m.
    Paths {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Print the count only.
        #[arg(long)]
        count: bool,
    },
    /// Specialized series of the lattice family.
    Spec {
        #[arg(long, value_enum, ignore_case = true)]
        target: Stat,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single named check instead of a suite (e.g. `star-product`).
    check: Option<String>,
    /// Which suite to run.
    #[arg(long, value_enum, ignore_case = true, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Parameters for `star-product` and `log-identity`.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    PaperTables,
    Identities,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.order < 1 || cli.order > ORDER_CAP {
        eprintln!("error: --order must lie in 1..={ORDER_CAP}");
        return ExitCode::from(2);
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify(&err))
        }
    }
}

/// Usage-style errors exit 2; semantic failures exit 1.
fn classify(err: &Error) -> u8 {
    match err {
        Error::NotACode { .. } | Error::NotInMonoid { .. } | Error::ConstantTerm { .. } => 1,
        _ => 2,
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Series(args) => cmd_series(cli, args),
        Command::Factorize => cmd_factorize(cli),
        Command::Decompose(args) => cmd_decompose(cli, args),
        Command::Ncsf(args) => cmd_ncsf(cli, &args.command),
        Command::Witt(args) => cmd_witt(cli, &args.command),
        Command::Star(args) => cmd_star(cli, &args.command),
        Command::Combi(args) => cmd_combi(cli, &args.command),
        Command::Verify(args) => cmd_verify(cli, args),
    }
}

fn load_code(cli: &Cli) -> Result<Arc<GradedCode>> {
    let name = cli
        .code
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--code is required here".into()))?;
    if let Some(path) = name.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read `{path}`: {e}")))?;
        GradedCode::from_json(&text)
    } else {
        builtin_code(name, cli.order)
    }
}

fn print_series(cli: &Cli, label: &str, series: &NcSeries) {
    match cli.format {
        Format::Text => println!("{label}{}", series.to_display()),
        Format::Json => println!("{}", series.to_json()),
    }
}

fn cmd_series(cli: &Cli, args: &SeriesArgs) -> Result<ExitCode> {
    let code = load_code(cli)?;
    let degrees: Vec<u32> = if args.all {
        (1..=cli.order).collect()
    } else {
        let n = args
            .n
            .ok_or_else(|| Error::InvalidArgument("pass --n K or --all".into()))?;
        if n < 1 || n > cli.order {
            return Err(Error::TruncationExceeded {
                requested: n,
                truncation: cli.order,
            });
        }
        vec![n]
    };
    let symbol = |stat: Stat| match stat {
        Stat::S => "S",
        Stat::Lambda => "Λ",
        Stat::Phi => "Φ",
        Stat::Q => "Q",
    };
    for n in degrees {
        let series = match args.stat {
            Stat::S => code.monoid_series(n)?,
            Stat::Lambda => {
                let sign = if n % 2 == 1 { 1 } else { -1 };
                code.char_series(n)?
                    .graded_part(n)?
                    .scale(&wittcode::rational::rat(sign))
            }
            Stat::Phi => {
                let sp = wittcode::codes::code_specialization(&code, n)?;
                let phi = SymElement::generator(Basis::Phi, n, n)?;
                wittcode::ncsf::specialize(&phi, &sp)?
            }
            Stat::Q => witt_code_series(&code, n)?,
        };
        let label = if args.all {
            format!("{}_{} = ", symbol(args.stat), n)
        } else {
            String::new()
        };
        print_series(cli, &label, &series.with_truncation(n));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_factorize(cli: &Cli) -> Result<ExitCode> {
    let code = load_code(cli)?;
    let f = right_length_factorization(&code, cli.order)?;
    match cli.format {
        Format::Json => println!("{}", f.to_json()),
        Format::Text => {
            for component in f.components() {
                let rendered: Vec<String> = component
                    .words
                    .iter()
                    .map(|w| code.alphabet().render_word(w))
                    .collect();
                println!("{}: {}", component.degree, rendered.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(cli: &Cli, args: &DecomposeArgs) -> Result<ExitCode> {
    let code = load_code(cli)?;
    let word = code.alphabet().parse_word(&args.word)?;
    let f = right_length_factorization(&code, cli.order)?;
    let blocks = f.decompose(&word)?;
    match cli.format {
        Format::Json => {
            let items: Vec<serde_json::Value> = blocks
                .iter()
                .map(|(degree, block)| {
                    serde_json::json!({
                        "component": degree,
                        "word": code.alphabet().render_word(block),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
        Format::Text => {
            let rendered: Vec<String> = blocks
                .iter()
                .map(|(degree, block)| {
                    format!("{}:{}", degree, code.alphabet().render_word(block))
                })
                .collect();
            println!("{}", rendered.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_sym(cli: &Cli, label: &str, element: &SymElement) {
    match cli.format {
        Format::Text => println!("{label}{}", element.to_text()),
        Format::Json => println!("{}", element.to_json()),
    }
}

fn cmd_ncsf(cli: &Cli, command: &NcsfCommand) -> Result<ExitCode> {
    match command {
        NcsfCommand::QTable => {
            let table = witt_q_sequence(cli.order)?;
            for (i, q) in table.iter().enumerate() {
                print_sym(cli, &format!("Q_{} = ", i + 1), q);
            }
        }
        NcsfCommand::Convert { to, input } => {
            let text = if let Some(path) = input.strip_prefix('@') {
                std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidArgument(format!("cannot read `{path}`: {e}")))?
            } else {
                input.clone()
            };
            let element = SymElement::from_json(&text)?;
            print_sym(cli, "", &element.convert((*to).into())?);
        }
        NcsfCommand::LambdaOnQ { n } => {
            print_sym(cli, &format!("Λ̃_{n} = "), &lambda_on_q(*n)?);
        }
        NcsfCommand::Ribbons { n } => {
            let ribbons = ribbon_positivity_check(*n)?;
            match cli.format {
                Format::Json => {
                    let items: Vec<Vec<u32>> =
                        ribbons.iter().map(|c| c.parts().to_vec()).collect();
                    println!("{}", serde_json::to_string(&items).expect("json"));
                }
                Format::Text => {
                    let rendered: Vec<String> = ribbons
                        .iter()
                        .map(|c| {
                            format!(
                                "({})",
                                c.parts()
                                    .iter()
                                    .map(|p| p.to_string())
                                    .collect::<Vec<_>>()
                                    .join(",")
                            )
                        })
                        .collect();
                    println!("-Q_{n} = {}", rendered.join(" + "));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_strings(input: &str) -> Result<Vec<String>> {
    serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
}

fn print_strings(values: Vec<String>) {
    println!("{}", serde_json::to_string(&values).expect("json"));
}

fn cmd_witt(cli: &Cli, command: &WittCommand) -> Result<ExitCode> {
    let _ = cli;
    match command {
        WittCommand::Ghost { input } => {
            let a = WittVector::from_strings(&parse_strings(input)?)?;
            print_strings(ghost(&a).to_strings());
        }
        WittCommand::Unghost { input } => {
            let w = GhostVector::from_strings(&parse_strings(input)?)?;
            print_strings(unghost(&w).to_strings());
        }
        WittCommand::Add { a, b } => {
            let a = WittVector::from_strings(&parse_strings(a)?)?;
            let b = WittVector::from_strings(&parse_strings(b)?)?;
            print_strings(wittcode::witt::witt_add(&a, &b)?.to_strings());
        }
        WittCommand::Mul { a, b } => {
            let a = WittVector::from_strings(&parse_strings(a)?)?;
            let b = WittVector::from_strings(&parse_strings(b)?)?;
            print_strings(wittcode::witt::witt_mul(&a, &b)?.to_strings());
        }
        WittCommand::Emap { input } => {
            let a = WittVector::from_strings(&parse_strings(input)?)?;
            print_strings(e_map(&a).coeff_strings());
        }
        WittCommand::Dlog { input } => {
            let coeffs = parse_strings(input)?
                .iter()
                .map(|t| wittcode::rational::parse_rational(t))
                .collect::<Result<Vec<_>>>()?;
            let f = wittcode::pseries::PowerSeries::from_coeffs(coeffs);
            print_strings(d_log(&f)?.coeff_strings());
        }
        WittCommand::Iota { input } => {
            let w = GhostVector::from_strings(&parse_strings(input)?)?;
            print_strings(iota(&w).coeff_strings());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_star(cli: &Cli, command: &StarCommand) -> Result<ExitCode> {
    let (vector, emap) = match command {
        StarCommand::Multinomial { parts, emap } => {
            (star_multinomial(parts, cli.order)?, *emap)
        }
        StarCommand::Factorial { n, emap } => (star_factorial(*n, cli.order)?, *emap),
    };
    print_strings(vector.to_strings());
    if emap {
        print_strings(e_map(&vector).coeff_strings());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_combi(cli: &Cli, command: &CombiCommand) -> Result<ExitCode> {
    match command {
        CombiCommand::Dyck { length } => {
            let alphabet = wittcode::freealg::Alphabet::binary();
            let words: Vec<String> = dyck_primes(*length)
                .iter()
                .map(|w| alphabet.render_word(w))
                .collect();
            match cli.format {
                Format::Json => print_strings(words),
                Format::Text => println!("{}", words.join(" ")),
            }
        }
        CombiCommand::Paths { n, p, m, count } => {
            let spec = LatticeSpec::new(*n, *p, *m)?;
            if *count {
                println!("{}", lattice_count(&spec, *m));
            } else {
                let alphabet = path_alphabet();
                let words: Vec<String> = lattice_paths(&spec, *m)
                    .iter()
                    .map(|w| alphabet.render_word(w))
                    .collect();
                match cli.format {
                    Format::Json => print_strings(words),
                    Format::Text => println!("{}", words.join(" ")),
                }
            }
        }
        CombiCommand::Spec { target, n, p, m } => {
            let spec = LatticeSpec::new(*n, *p, *m)?;
            let series = match target {
                Stat::S => s_series(&spec, *m)?,
                Stat::Lambda => lambda_series(&spec, *m)?,
                Stat::Phi => phi_series(&spec, *m)?,
                Stat::Q => {
                    return Err(Error::InvalidArgument(
                        "lattice families expose S, Λ, and Φ".into(),
                    ))
                }
            };
            print_series(cli, "", &series);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_outcomes(outcomes: &[CheckOutcome]) -> bool {
    let mut all_passed = true;
    for outcome in outcomes {
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {} ({} ms)", outcome.name, outcome.millis);
        if !outcome.passed {
            all_passed = false;
            for line in outcome.detail.lines() {
                println!("       {line}");
            }
        }
    }
    all_passed
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode> {
    if let Some(check) = &args.check {
        return match check.as_str() {
            "star-product" => {
                let n = args.n.unwrap_or(2);
                let p = args.p.unwrap_or(2);
                let ok = verify_star_binomial_product(n, p, cli.order)?;
                println!(
                    "star-product (n={n}, p={p}, order {}): {}",
                    cli.order,
                    if ok { "PASS" } else { "FAIL" }
                );
                Ok(if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            }
            "log-identity" => {
                let n = args.n.unwrap_or(2);
                let k = args.k.unwrap_or(3);
                let ok = wittcode::witt::verify_log_identity(n, k)?;
                println!(
                    "log-identity (n={n}, k={k}): {}",
                    if ok { "PASS" } else { "FAIL" }
                );
                Ok(if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            }
            name => {
                let outcomes = run_checks(&[name], cli.order);
                if outcomes.is_empty() {
                    return Err(Error::InvalidArgument(format!(
                        "unknown check `{name}`; available: star-product, log-identity, {}",
                        wittcode::verify::all_check_names().join(", ")
                    )));
                }
                let ok = print_outcomes(&outcomes);
                Ok(if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            }
        };
    }
    let outcomes = match args.suite {
        SuiteArg::All => run_all(cli.order),
        SuiteArg::PaperTables => run_suite(Suite::PaperTables, cli.order),
        SuiteArg::Identities => run_suite(Suite::Identities, cli.order),
    };
    let ok = print_outcomes(&outcomes);
    let total = outcomes.len();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{total} checks passed");
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
