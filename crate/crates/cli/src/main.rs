use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use omega_core::flow::{self, DEFAULT_TOL_ENERGY, DEFAULT_TOL_FORM};
use omega_core::form::validate_form;
use omega_core::group::{classify, random_member, sigma};
use omega_core::hamfield::{self, ConstantPart};
use omega_core::json::{FieldJson, MatrixJson, PolyJson};
use omega_core::liealg::{is_hamiltonian_matrix, HamiltonianMatrix};
use omega_core::poly::DEFAULT_MAX_DEGREE;
use omega_core::ratmat::{format_rational, parse_rational};
use omega_core::{Error, Limits, MultiPoly, PolyVectorField, Rational, RationalMatrix, SymplecticForm};

const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_LIMIT: u8 = 4;

/// Exact symplectic linear algebra and Hamiltonian field recognition.
///
/// Results are JSON on stdout. Input files may be `-` for stdin.
#[derive(Parser)]
#[command(name = "omega", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a matrix is a valid symplectic form.
    ValidateForm {
        #[arg(long)]
        form: PathBuf,
    },
    /// Print a Darboux basis P and the residual PᵀΩP - J.
    Darboux {
        #[arg(long)]
        form: PathBuf,
    },
    /// Classify B by the λ with BᵀΩB = λΩ.
    Classify {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Test LᵀΩ + ΩL = 0.
    CheckMatrix {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Decide whether a polynomial field is Hamiltonian.
    CheckField {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        allow_constant: bool,
    },
    /// Recover H with X = X_H.
    Recover {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        allow_constant: bool,
    },
    /// Build the field of ½xᵀ(ΩᵀL)x + F.
    Construct {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        /// Polynomial F with no terms below degree 3; zero when omitted.
        #[arg(long)]
        remainder: Option<PathBuf>,
    },
    /// The form -L⁻¹ making a skew-symmetric L Hamiltonian.
    AdaptedForm {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Integrate X_H and report energy and form drift.
    Simulate {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        hamiltonian: PathBuf,
        /// Comma-separated initial point.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        x0: Point,
        #[arg(long, default_value_t = flow::DEFAULT_DT)]
        dt: f64,
        #[arg(long, default_value_t = flow::DEFAULT_T_END)]
        t: f64,
        #[arg(long, default_value_t = DEFAULT_TOL_ENERGY)]
        tol_energy: f64,
        #[arg(long, default_value_t = DEFAULT_TOL_FORM)]
        tol_form: f64,
        /// Write the trajectory as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Seeded random B with BᵀΩB = λΩ.
    RandomMember {
        #[arg(long)]
        form: PathBuf,
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Debug)]
struct Point(Vec<f64>);

fn parse_point(s: &str) -> Result<Point, String> {
    s.split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|e| format!("{c:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Point)
}

fn parse_lambda(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit(_) => EXIT_LIMIT,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type CliResult<T> = Result<T, Failure>;

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read_input(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> CliResult<RationalMatrix> {
    Ok(RationalMatrix::try_from(&parse_json::<MatrixJson>(path)?)?)
}

fn load_form(path: &Path) -> CliResult<SymplecticForm> {
    Ok(validate_form(load_matrix(path)?)?)
}

fn load_poly(path: &Path, limits: &Limits) -> CliResult<MultiPoly> {
    Ok(parse_json::<PolyJson>(path)?.to_poly(limits)?)
}

fn load_field(path: &Path, limits: &Limits) -> CliResult<PolyVectorField> {
    Ok(parse_json::<FieldJson>(path)?.to_field(limits)?)
}

#[derive(Serialize)]
struct FormReport {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    det: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

#[derive(Serialize)]
struct DarbouxReport {
    p: MatrixJson,
    residual: MatrixJson,
}

#[derive(Serialize)]
struct ClassifyReport {
    kind: &'static str,
    lambda: Option<String>,
    sigma: Option<i8>,
    det: String,
}

#[derive(Serialize)]
struct MatrixReport {
    hamiltonian: bool,
    trace: String,
}

#[derive(Serialize)]
struct WitnessJson {
    entry: [usize; 2],
    residual: PolyJson,
    trace_at_zero: Option<String>,
}

#[derive(Serialize)]
struct FieldReport {
    hamiltonian: bool,
    witness: Option<WitnessJson>,
}

#[derive(Serialize)]
struct SimulateReport {
    energy_drift: f64,
    form_drift: f64,
    pass: bool,
}

fn emit<T: Serialize>(value: &T) -> CliResult<()> {
    let text = serde_json::to_string(value).expect("report serializes");
    println!("{text}");
    Ok(())
}

fn constants(allow: bool) -> ConstantPart {
    if allow {
        ConstantPart::Allow
    } else {
        ConstantPart::Reject
    }
}

fn limits_from_env() -> CliResult<Limits> {
    let mut limits = Limits::default();
    if let Ok(v) = std::env::var("OMEGA_MAX_DEGREE") {
        limits.max_degree = v.trim().parse().map_err(|_| Failure {
            code: EXIT_USAGE,
            message: format!("OMEGA_MAX_DEGREE must be a nonnegative integer, got {v:?}"),
        })?;
        if limits.max_degree != DEFAULT_MAX_DEGREE {
            log::info!("degree cap set to {}", limits.max_degree);
        }
    }
    Ok(limits)
}

fn write_csv(path: &Path, trace: &flow::FlowTrace) -> CliResult<()> {
    let fail = |e: csv::Error| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    };
    let mut w = csv::Writer::from_path(path).map_err(fail)?;
    let n = trace.states.first().map_or(0, Vec::len);
    let header = std::iter::once("t".to_string()).chain((0..n).map(|i| format!("x{i}")));
    w.write_record(header).map_err(fail)?;
    for (t, x) in trace.times.iter().zip(&trace.states) {
        w.write_record(std::iter::once(t).chain(x).map(f64::to_string)).map_err(fail)?;
    }
    w.flush().map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> CliResult<()> {
    let limits = limits_from_env()?;
    match command {
        Command::ValidateForm { form } => {
            let m = load_matrix(&form)?;
            match validate_form(m) {
                Ok(f) => emit(&FormReport {
                    valid: true,
                    dim: Some(f.dim()),
                    det: Some(format_rational(&f.det())),
                    reason: None,
                }),
                Err(e) => emit(&FormReport {
                    valid: false,
                    dim: None,
                    det: None,
                    reason: Some(e.to_string()),
                }),
            }
        }
        Command::Darboux { form } => {
            let f = load_form(&form)?;
            let d = f.darboux_basis();
            emit(&DarbouxReport {
                p: MatrixJson::from(d.p()),
                residual: MatrixJson::from(&d.residual(&f)?),
            })
        }
        Command::Classify { form, matrix } => {
            let f = load_form(&form)?;
            let b = load_matrix(&matrix)?;
            let class = classify(&f, &b)?;
            emit(&ClassifyReport {
                kind: class.name(),
                lambda: class.lambda().as_ref().map(format_rational),
                sigma: sigma(&f, &b).ok(),
                det: format_rational(&b.det()?),
            })
        }
        Command::CheckMatrix { form, matrix } => {
            let f = load_form(&form)?;
            let l = load_matrix(&matrix)?;
            let hamiltonian = is_hamiltonian_matrix(&f, &l)?;
            emit(&MatrixReport {
                hamiltonian,
                trace: format_rational(&l.trace()?),
            })
        }
        Command::CheckField {
            form,
            field,
            allow_constant,
        } => {
            let f = load_form(&form)?;
            let x = load_field(&field, &limits)?;
            let rec = hamfield::is_hamiltonian_field(&f, &x, constants(allow_constant))?;
            emit(&FieldReport {
                hamiltonian: rec.hamiltonian,
                witness: rec.witness.map(|w| WitnessJson {
                    entry: [w.entry.0, w.entry.1],
                    residual: PolyJson::from(&w.residual),
                    trace_at_zero: w.trace_at_zero.as_ref().map(format_rational),
                }),
            })
        }
        Command::Recover {
            form,
            field,
            allow_constant,
        } => {
            let f = load_form(&form)?;
            let x = load_field(&field, &limits)?;
            let hf = hamfield::recover_hamiltonian(&f, &x, constants(allow_constant))?;
            emit(&PolyJson::from(hf.hamiltonian()))
        }
        Command::Construct {
            form,
            matrix,
            remainder,
        } => {
            let f = load_form(&form)?;
            let l = HamiltonianMatrix::new(&f, load_matrix(&matrix)?)?;
            let rest = match remainder {
                Some(p) => load_poly(&p, &limits)?,
                None => MultiPoly::zero(f.dim()),
            };
            let hf = hamfield::construct_family(&f, &l, &rest)?;
            emit(&FieldJson::from(hf.field()))
        }
        Command::AdaptedForm { matrix } => {
            let f = hamfield::adapted_form_for_skew(&load_matrix(&matrix)?)?;
            emit(&MatrixJson::from(f.omega()))
        }
        Command::Simulate {
            form,
            hamiltonian,
            x0,
            dt,
            t,
            tol_energy,
            tol_form,
            csv,
        } => {
            let f = load_form(&form)?;
            let h = load_poly(&hamiltonian, &limits)?;
            let hf = hamfield::field_from_hamiltonian(&f, &h)?;
            let trace = flow::integrate(&hf, &x0.0, dt, t)?;
            if let Some(path) = csv {
                write_csv(&path, &trace)?;
                log::info!("wrote {} samples to {}", trace.times.len(), path.display());
            }
            let report = flow::preservation_report(&trace, tol_energy, tol_form);
            emit(&SimulateReport {
                energy_drift: report.energy_drift,
                form_drift: report.form_drift,
                pass: report.pass,
            })
        }
        Command::RandomMember { form, lambda, seed } => {
            let f = load_form(&form)?;
            emit(&MatrixJson::from(&random_member(&f, &lambda, seed)?))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
