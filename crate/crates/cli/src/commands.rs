use std::path::Path;

use num_traits::{One, Signed, Zero};
use supertensor::catalog::CatalogKey;
use supertensor::linalg::{scalar, zero_vec, Scalar};
use supertensor::superalgebra::{koszul, LieSuperAlgebra, Nilpotency, Parity};
use supertensor::tensor::{self, TensorSymbol};
use supertensor::verify::{self, Value, VerifyOptions};

use crate::algebra_file;
use crate::report::{QuantityRecord, Record, Report};
use crate::{Cli, CliError, Command, Quantity};

pub const NO_PARALLEL_ENV: &str = "SUPERTENSOR_NO_PARALLEL";

/// What `main` should print and where.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub output: Option<std::path::PathBuf>,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        u8::from(self.report.mismatches() > 0)
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (report, output) = match &cli.command {
        Command::Info { algebra } => (info(algebra, cli.seed)?, None),
        Command::Compute { quantity, algebra, basis } => (compute(*quantity, algebra, *basis, cli.seed)?, None),
        Command::Verify { max_dim, output } => {
            let parallel = std::env::var(NO_PARALLEL_ENV).map_or(true, |v| v != "1");
            (verify(*max_dim as usize, cli.seed, parallel), output.clone())
        }
    };
    Ok(Outcome { report, output })
}

/// Resolve a catalog expression or `file:PATH`, checking the axioms.
pub fn load_algebra(expr: &str, seed: u64) -> Result<(String, LieSuperAlgebra), CliError> {
    let (label, l) = match expr.strip_prefix("file:") {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|source| CliError::Io { path: Path::new(path).to_path_buf(), source })?;
            let l = algebra_file::parse(&text).map_err(|source| CliError::File { path: path.to_string(), source })?;
            (expr.to_string(), l)
        }
        None => {
            let key: CatalogKey = expr
                .parse()
                .map_err(|e: supertensor::CatalogError| CliError::Parse { input: expr.to_string(), reason: e.to_string() })?;
            let l = key.build(seed)?;
            (key.to_string(), l)
        }
    };
    let report = l.check_axioms();
    if !report.is_ok() {
        return Err(CliError::AxiomViolation(report.describe(&l)));
    }
    Ok((label, l))
}

fn record(algebra: &str, quantity: &str, value: Value, basis: Option<Vec<String>>) -> Record {
    Record::Quantity(QuantityRecord { algebra: algebra.to_string(), quantity: quantity.to_string(), value, basis })
}

pub fn info(expr: &str, seed: u64) -> Result<Report, CliError> {
    let (label, l) = load_algebra(expr, seed)?;
    let center = l.center().dim();
    let class = l.nilpotency_class();
    let mut records = vec![
        record(&label, "dim", Value::Dim(l.dim()), None),
        record(&label, "even", Value::Count(l.dim().even), None),
        record(&label, "odd", Value::Count(l.dim().odd), None),
        record(&label, "derived", Value::Dim(l.derived_subalgebra().dim()), None),
        record(&label, "center", Value::Dim(center), None),
        record(&label, "center_is_whole", Value::Flag(center == l.dim()), None),
        record(
            &label,
            "class",
            match class {
                Nilpotency::Class(c) => Value::Count(c),
                Nilpotency::NotNilpotent => Value::Text("not nilpotent".into()),
            },
            None,
        ),
        record(
            &label,
            "gh_rank",
            l.generalized_heisenberg_rank().map_or(Value::Text("none".into()), Value::Dim),
            None,
        ),
    ];
    if matches!(class, Nilpotency::Class(c) if c <= 2) {
        records.push(record(&label, "capable", Value::Flag(tensor::is_capable(&l)?), None));
    }
    Ok(Report::new(format!("info {expr}"), records))
}

fn combination(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Independent square generators modulo the tensor relations.
fn square_basis(l: &LieSuperAlgebra, t: &tensor::PresentedSpace<TensorSymbol>) -> Vec<String> {
    let d = l.len();
    let labels: Vec<String> = t.symbols().iter().map(|s| s.label(l, "⊗")).collect();
    let mut eb = t.relations().to_echelon();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            let mut v = zero_vec(d * d);
            if i == j {
                if l.parity(i) == Parity::Odd {
                    continue;
                }
                v[i * d + i] = scalar(1);
            } else {
                v[i * d + j] = scalar(1);
                v[j * d + i] = scalar(koszul(l.parity(i), l.parity(j)));
            }
            if eb.insert(v.clone()) {
                out.push(combination(&v, &labels));
            }
        }
    }
    out
}

pub fn compute(quantity: Quantity, expr: &str, want_basis: bool, seed: u64) -> Result<Report, CliError> {
    let (label, l) = load_algebra(expr, seed)?;
    let q = quantity.as_str();
    let basis_of = |syms: Vec<&TensorSymbol>, op: &str| -> Vec<String> { syms.iter().map(|s| s.label(&l, op)).collect() };
    let records = match quantity {
        Quantity::Tensor2 => {
            let t = tensor::tensor_square(&l)?;
            let basis = want_basis.then(|| basis_of(t.quotient_basis(), "⊗"));
            vec![record(&label, q, Value::Dim(t.quotient_dim()), basis)]
        }
        Quantity::Ext2 => {
            let e = tensor::exterior_square(&l)?;
            let basis = want_basis.then(|| basis_of(e.quotient_basis(), "∧"));
            vec![record(&label, q, Value::Dim(e.quotient_dim()), basis)]
        }
        Quantity::Square => {
            let t = tensor::tensor_square(&l)?;
            let sq = tensor::square_submodule(&l, &t);
            let basis = want_basis.then(|| square_basis(&l, &t));
            vec![record(&label, q, Value::Dim(sq.dim), basis)]
        }
        Quantity::Gamma => {
            let ab = l.dim().checked_sub(l.derived_subalgebra().dim()).expect("derived subalgebra fits");
            let g = tensor::gamma_space(ab.even, ab.odd);
            let basis = want_basis.then(|| g.presentation.quotient_basis().iter().map(ToString::to_string).collect());
            vec![record(&label, q, Value::Dim(g.dim()), basis)]
        }
        Quantity::Tensor3 => {
            let t = tensor::tensor_square(&l)?;
            let dim = tensor::triple_tensor_class2(&l)?;
            let basis = want_basis.then(|| {
                let reps = l.derived_subalgebra().space().free_cols();
                let mut out = Vec::new();
                for s in t.quotient_basis() {
                    for &c in &reps {
                        out.push(format!("({})⊗{}", s.label(&l, "⊗"), l.name(c)));
                    }
                }
                out
            });
            vec![record(&label, q, Value::Dim(dim), basis)]
        }
        Quantity::Multiplier => vec![record(&label, q, Value::Dim(tensor::schur_multiplier_class2(&l)?), None)],
        Quantity::Extcenter => {
            let z = tensor::exterior_center(&l)?;
            let basis = want_basis.then(|| {
                let names = l.names().to_vec();
                z.space().basis_vectors().iter().map(|v| combination(v, &names)).collect()
            });
            vec![
                record(&label, q, Value::Dim(z.dim()), basis),
                record(&label, "capable", Value::Flag(z.is_zero()), None),
            ]
        }
        Quantity::Bound => {
            let b = tensor::bound_check(&l)?;
            vec![
                record(&label, "bound_lhs", Value::Count(b.lhs), None),
                record(&label, "bound_rhs", Value::Count(b.rhs), None),
                record(&label, "bound_holds", Value::Flag(b.holds), None),
                record(&label, "bound_equality", Value::Flag(b.equality), None),
            ]
        }
    };
    let flag = if want_basis { " --basis" } else { "" };
    Ok(Report::new(format!("compute {q} {expr}{flag}"), records))
}

pub fn verify(max_dim: usize, seed: u64, parallel: bool) -> Report {
    let opts = VerifyOptions { max_total_dim: max_dim, seeds: vec![seed, seed + 1], parallel };
    let records = verify::verify_paper_with(&opts).into_iter().map(Record::Verification).collect();
    Report::new(format!("verify --max-dim {max_dim} --seed {seed}"), records)
}
