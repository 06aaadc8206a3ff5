//! `seifert4`: batch interface to the Seifert invariant library.
//!
//! Every subcommand prints one JSON document on standard output. Exit codes:
//! 0 success, 2 invalid input, 3 undecided comparison, 4 resource guard.

mod manifold;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use seifert4::cohomology::{cocycle_of, euler_pairing, h2_structure, OrbSignature};
use seifert4::monodromy::MonodromyError;
use seifert4::quotients::{census, default_catalog, load_catalog, FiniteGroup, QuotientError, QuotientSpectrum};
use seifert4::rigidity::{compare, RigidityError, Verdict};
use seifert4::seifert::{
    classify_geometry, euler_number, normalize, orbifold_euler_char, presentation, validate, SeifertData,
    SeifertError,
};

use manifold::{int_json, matrix_json};

#[derive(Parser)]
#[command(name = "seifert4", version, about = "Invariants and comparison of Seifert fibred 4-manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a manifold file and list every violated condition
    Validate { file: PathBuf },
    /// Geometry, orbifold Euler characteristic and Euler number
    Classify { file: PathBuf },
    /// Canonical form, in the input file format
    Canon { file: PathBuf },
    /// Fundamental group presentation
    Present { file: PathBuf },
    /// Decide whether two manifolds have isomorphic profinite fundamental groups
    Compare {
        first: PathBuf,
        second: PathBuf,
        /// Also report homomorphism counts into the catalog groups
        #[arg(long)]
        census: bool,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// H² of the base orbifold group with Z/T coefficients and the Euler class
    Cohomology {
        file: PathBuf,
        /// Coefficient modulus; 0 for integer coefficients
        #[arg(long = "t")]
        t: u64,
    },
    /// Homomorphism counts into every catalog group
    Census {
        file: PathBuf,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Guard(_) => 4,
        }
    }

    fn report(&self) -> Value {
        match self {
            Failure::Invalid(m) => json!({"error": "invalid input", "message": m}),
            Failure::Guard(m) => json!({"error": "resource guard", "message": m}),
        }
    }
}

impl From<SeifertError> for Failure {
    fn from(e: SeifertError) -> Self {
        match e {
            SeifertError::FramingGuard(_) | SeifertError::Monodromy(MonodromyError::TooLarge { .. }) => {
                Failure::Guard(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<RigidityError> for Failure {
    fn from(e: RigidityError) -> Self {
        match e {
            RigidityError::Seifert(inner) => inner.into(),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<QuotientError> for Failure {
    fn from(e: QuotientError) -> Self {
        if e.is_resource_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

type Outcome = Result<(Value, u8), Failure>;

fn read_valid(path: &Path) -> Result<SeifertData, Failure> {
    let data = manifold::read(path).map_err(Failure::Invalid)?;
    if let Some(d) = validate(&data).into_iter().next() {
        return Err(Failure::Invalid(format!("{}: {}", path.display(), d)));
    }
    Ok(data)
}

fn catalog(path: Option<&Path>) -> Result<Vec<FiniteGroup>, Failure> {
    match path {
        Some(p) => Ok(load_catalog(p)?),
        None => Ok(default_catalog()),
    }
}

fn spectrum_json(s: &QuotientSpectrum) -> Value {
    Value::Array(
        s.entries
            .iter()
            .map(|(id, c)| match c {
                Ok(n) => json!({"group": id, "count": n}),
                Err(e) => json!({"group": id, "error": e.to_string()}),
            })
            .collect(),
    )
}

fn spectrum_code(s: &QuotientSpectrum) -> Result<u8, Failure> {
    match s.first_guard_error() {
        None => Ok(0),
        Some(e) if e.is_resource_guard() => Ok(4),
        Some(e) => Err(Failure::Invalid(e.to_string())),
    }
}

fn run_validate(file: &Path) -> Outcome {
    let data = manifold::read(file).map_err(Failure::Invalid)?;
    let diagnostics = validate(&data);
    let report = json!({
        "valid": diagnostics.is_empty(),
        "diagnostics": diagnostics
            .iter()
            .map(|d| json!({"code": d.code.as_str(), "message": d.message}))
            .collect::<Vec<_>>(),
    });
    Ok((report, if diagnostics.is_empty() { 0 } else { 2 }))
}

fn run_classify(file: &Path) -> Outcome {
    let data = read_valid(file)?;
    let geometry = classify_geometry(&data)?;
    let euler = match euler_number(&data) {
        Ok((a, b)) => json!([a.to_string(), b.to_string()]),
        Err(_) => Value::Null,
    };
    let report = json!({
        "geometry": geometry.tag(),
        "euler": euler,
        "chi_orb": orbifold_euler_char(&data).to_string(),
    });
    Ok((report, 0))
}

fn run_canon(file: &Path) -> Outcome {
    let data = read_valid(file)?;
    Ok((manifold::to_json(&normalize(&data)?), 0))
}

fn run_present(file: &Path) -> Outcome {
    let data = read_valid(file)?;
    let p = presentation(&data)?;
    let report = json!({
        "generators": p.generators,
        "relators": p.relators.iter().map(|r| p.format_word(r)).collect::<Vec<_>>(),
    });
    Ok((report, 0))
}

fn run_compare(first: &Path, second: &Path, with_census: bool, catalog_path: Option<&Path>) -> Outcome {
    let (m, n) = (read_valid(first)?, read_valid(second)?);
    let verdict = compare(&m, &n)?;
    let (mut report, mut code) = match &verdict {
        Verdict::Isomorphic {
            k,
            matching_units,
            unit_modulus,
            witness,
        } => (
            json!({
                "verdict": "Isomorphic",
                "k": int_json(k),
                "matching_units": matching_units,
                "unit_modulus": unit_modulus,
                "witness": {
                    "framing": matrix_json(&witness.transform.framing),
                    "shifts": witness
                        .transform
                        .shifts
                        .iter()
                        .map(|(a, b)| json!([int_json(a), int_json(b)]))
                        .collect::<Vec<_>>(),
                    "order": witness.transform.order,
                    "target": manifold::to_json(&witness.target),
                },
            }),
            0,
        ),
        Verdict::Distinct { reason } => (json!({"verdict": "Distinct", "reason": reason}), 0),
        Verdict::Undecided { reason } => (json!({"verdict": "Undecided", "reason": reason}), 3),
    };
    if with_census {
        let groups = catalog(catalog_path)?;
        let (sm, sn) = (census(&presentation(&m)?, &groups), census(&presentation(&n)?, &groups));
        report["census"] = json!({
            "first": spectrum_json(&sm),
            "second": spectrum_json(&sn),
            "agree": sm == sn,
        });
        if code == 0 {
            code = spectrum_code(&sm)?.max(spectrum_code(&sn)?);
        }
    }
    Ok((report, code))
}

fn run_cohomology(file: &Path, t: u64) -> Outcome {
    let data = read_valid(file)?;
    let t = BigInt::from(t);
    let class = cocycle_of(&data).map_err(|e| Failure::Invalid(e.to_string()))?;
    let (p, q) = euler_pairing(&class);
    let reduced = class.reduce(&t);
    let sig = OrbSignature::of(&data);
    let report = json!({
        "genus": sig.genus,
        "orders": sig.orders,
        "t": int_json(&t),
        "h2": h2_structure(&sig, &t).iter().map(int_json).collect::<Vec<_>>(),
        "raw": reduced.raw.iter().map(|(a, b)| json!([int_json(a), int_json(b)])).collect::<Vec<_>>(),
        "euler_pairing": [int_json(&p), int_json(&q)],
        "euler_class_vanishes": p.is_zero() && q.is_zero(),
    });
    Ok((report, 0))
}

fn run_census(file: &Path, catalog_path: Option<&Path>) -> Outcome {
    let data = read_valid(file)?;
    let groups = catalog(catalog_path)?;
    let spectrum = census(&presentation(&data)?, &groups);
    let code = spectrum_code(&spectrum)?;
    Ok((json!({"spectrum": spectrum_json(&spectrum)}), code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { file } => run_validate(file),
        Command::Classify { file } => run_classify(file),
        Command::Canon { file } => run_canon(file),
        Command::Present { file } => run_present(file),
        Command::Compare {
            first,
            second,
            census,
            catalog,
        } => run_compare(first, second, *census, catalog.as_deref()),
        Command::Cohomology { file, t } => run_cohomology(file, *t),
        Command::Census { file, catalog } => run_census(file, catalog.as_deref()),
    };
    let (report, code) = match outcome {
        Ok(ok) => ok,
        Err(f) => (f.report(), f.code()),
    };
    println!("{}", report);
    ExitCode::from(code)
}
