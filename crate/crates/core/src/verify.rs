//! Sweep catalog specimens and compare constructive results with the closed
//! forms and with each other.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::catalog::{free_center_dim, CatalogKey};
use crate::formulas::{self, FormulaError, Rank2Case};
use crate::superalgebra::{DecompositionReport, GradedDim, HeisenbergKind, IdealSubspace, LieSuperAlgebra};
use crate::tensor::{self, HomologySummary};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Value {
    Dim(GradedDim),
    Count(usize),
    Flag(bool),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Dim(d) => write!(f, "{d}"),
            Value::Count(c) => write!(f, "{c}"),
            Value::Flag(b) => write!(f, "{b}"),
            Value::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Match,
    Mismatch,
    FormulaOnly,
    ConstructiveOnly,
    UntestedCase,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::FormulaOnly => "formula_only",
            Status::ConstructiveOnly => "constructive_only",
            Status::UntestedCase => "untested_case",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub algebra: String,
    pub quantity: String,
    pub constructive: Option<Value>,
    pub closed_form: Option<Value>,
    pub status: Status,
    pub note: Option<String>,
}

impl VerificationRecord {
    pub fn is_mismatch(&self) -> bool {
        self.status == Status::Mismatch
    }
}

impl fmt::Display for VerificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.constructive.as_ref().map_or("n/a".to_string(), ToString::to_string);
        let k = self.closed_form.as_ref().map_or("untested".to_string(), ToString::to_string);
        write!(f, "{} {} constructive={c} closed_form={k} status={}", self.algebra, self.quantity, self.status)?;
        if let Some(n) = &self.note {
            write!(f, " note={n}")?;
        }
        Ok(())
    }
}

/// The closed-form side of a comparison.
enum Closed {
    Value(Value),
    Untested(String),
    Absent,
}

impl From<Result<GradedDim, FormulaError>> for Closed {
    fn from(r: Result<GradedDim, FormulaError>) -> Self {
        match r {
            Ok(d) => Closed::Value(Value::Dim(d)),
            Err(e) => Closed::Untested(e.to_string()),
        }
    }
}

struct Recorder {
    algebra: String,
    records: Vec<VerificationRecord>,
}

impl Recorder {
    fn push(&mut self, quantity: &str, constructive: Option<Value>, closed: Closed) {
        let (closed_form, status, note) = match (closed, &constructive) {
            (Closed::Value(v), Some(c)) => {
                let s = if *c == v { Status::Match } else { Status::Mismatch };
                (Some(v), s, None)
            }
            (Closed::Value(v), None) => (Some(v), Status::FormulaOnly, None),
            (Closed::Untested(why), _) => (None, Status::UntestedCase, Some(why)),
            (Closed::Absent, _) => (None, Status::ConstructiveOnly, None),
        };
        self.records.push(VerificationRecord {
            algebra: self.algebra.clone(),
            quantity: quantity.to_string(),
            constructive,
            closed_form,
            status,
            note,
        });
    }

    fn note_last(&mut self, note: String) {
        if let Some(r) = self.records.last_mut() {
            r.note = Some(note);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_total_dim: usize,
    pub seeds: Vec<u64>,
    pub parallel: bool,
}

impl VerifyOptions {
    pub fn new(max_total_dim: usize) -> Self {
        VerifyOptions { max_total_dim, seeds: vec![1, 2], parallel: true }
    }
}

/// Catalog specimens of total dimension at most `max_total_dim`.
pub fn specimens(max_total_dim: usize, seeds: &[u64]) -> Vec<CatalogKey> {
    let max = max_total_dim;
    let mut out = Vec::new();
    for total in 1..=max {
        for p in 0..=total {
            out.push(CatalogKey::Abelian { m: p, n: total - p });
        }
    }
    let mut heisenbergs = Vec::new();
    for m in 0..=max.saturating_sub(1) / 2 {
        for n in 0..=max.saturating_sub(2 * m + 1) {
            if m + n >= 1 {
                heisenbergs.push(CatalogKey::HeisenbergEven { m, n });
            }
        }
    }
    for m in 1..=max.saturating_sub(1) / 2 {
        heisenbergs.push(CatalogKey::HeisenbergOdd { m });
    }
    for (i, h) in heisenbergs.iter().enumerate() {
        let hd = h.dim().total();
        out.push(h.clone());
        for extra in 1..=max - hd {
            for k in 0..=extra {
                out.push(CatalogKey::direct_sum(vec![h.clone(), CatalogKey::Abelian { m: k, n: extra - k }]));
            }
        }
        for g in &heisenbergs[i..] {
            if hd + g.dim().total() <= max {
                out.push(CatalogKey::direct_sum(vec![h.clone(), g.clone()]));
            }
        }
    }
    for p in 0..=max {
        for q in 0..=max - p {
            if p + q < 2 {
                continue;
            }
            let center = free_center_dim(p, q);
            for r in 0..=2 {
                for s in 0..=2 - r {
                    let kept = GradedDim::new(r, s);
                    if r + s == 0 || !kept.fits_in(center) || p + q + r + s > max {
                        continue;
                    }
                    for &seed in seeds {
                        out.push(CatalogKey::FreeNilpotent2 { p, q, kept, seed: Some(seed) });
                    }
                }
            }
        }
    }
    out
}

enum Shape {
    Abelian,
    Rank1(DecompositionReport),
    Rank2 { h2: GradedDim, case: Option<Rank2Case> },
    Other,
}

fn rank2_case(zc: &IdealSubspace, derived: &IdealSubspace) -> Option<Rank2Case> {
    if zc.is_zero() {
        None
    } else if zc == derived {
        Some(Rank2Case::CenterIsDerived)
    } else if zc.is_subset_of(derived) && zc.dim() == GradedDim::new(1, 0) {
        Some(Rank2Case::EvenLine)
    } else if zc.is_subset_of(derived) && zc.dim() == GradedDim::new(0, 1) {
        Some(Rank2Case::OddLine)
    } else {
        None
    }
}

fn shape(l: &LieSuperAlgebra, summary: &HomologySummary) -> Shape {
    let derived = l.derived_subalgebra();
    match derived.dim().total() {
        0 => Shape::Abelian,
        1 => match l.recognize_derived_dim_one() {
            Ok(report) => Shape::Rank1(report),
            Err(_) => Shape::Other,
        },
        2 => match l.generalized_heisenberg_rank() {
            Some(h2) => Shape::Rank2 { h2, case: rank2_case(&summary.exterior_center, &derived) },
            None => Shape::Other,
        },
        _ => Shape::Other,
    }
}

fn rank1_multiplier(kind: HeisenbergKind) -> Result<GradedDim, FormulaError> {
    match kind {
        HeisenbergKind::EvenCenter { m, n } => formulas::multiplier_heisenberg_even(m, n),
        HeisenbergKind::OddCenter { m } => formulas::multiplier_heisenberg_odd(m),
    }
}

fn rank1_abelianization(kind: HeisenbergKind) -> GradedDim {
    match kind {
        HeisenbergKind::EvenCenter { m, n } => GradedDim::new(2 * m, n),
        HeisenbergKind::OddCenter { m } => GradedDim::new(m, m),
    }
}

/// Multiplier and abelianization of a summand from its catalog label alone.
fn summand_closed(key: &CatalogKey) -> Option<(Result<GradedDim, FormulaError>, GradedDim)> {
    match *key {
        CatalogKey::Abelian { m, n } => Some((formulas::multiplier_abelian(m, n), GradedDim::new(m, n))),
        CatalogKey::HeisenbergEven { m, n } => {
            Some((formulas::multiplier_heisenberg_even(m, n), GradedDim::new(2 * m, n)))
        }
        CatalogKey::HeisenbergOdd { m } => Some((formulas::multiplier_heisenberg_odd(m), GradedDim::new(m, m))),
        _ => None,
    }
}

fn sum_rule_multiplier(key: &CatalogKey) -> Option<Result<GradedDim, FormulaError>> {
    let parts = key.summands();
    if parts.len() < 2 {
        return None;
    }
    let mut acc: Option<(GradedDim, GradedDim)> = None;
    for p in parts {
        let (m, ab) = summand_closed(p)?;
        let m = match m {
            Ok(m) => m,
            Err(e) => return Some(Err(e)),
        };
        acc = Some(match acc {
            None => (m, ab),
            Some((am, aab)) => (formulas::multiplier_direct_sum(am, m, aab, ab), aab + ab),
        });
    }
    acc.map(|(m, _)| Ok(m))
}

fn verify_specimen(key: &CatalogKey, gamma: &BTreeMap<GradedDim, GradedDim>) -> Vec<VerificationRecord> {
    let mut rec = Recorder { algebra: key.to_string(), records: Vec::new() };
    let l = match key.build(1) {
        Ok(l) => l,
        Err(e) => {
            rec.push("build", Some(Value::Text(e.to_string())), Closed::Value(Value::Text("ok".into())));
            return rec.records;
        }
    };
    let summary = match tensor::summarize(&l) {
        Ok(s) => s,
        Err(e) => {
            rec.push("summary", Some(Value::Text(e.to_string())), Closed::Value(Value::Text("ok".into())));
            return rec.records;
        }
    };
    let dim = l.dim();
    let derived = l.derived_subalgebra().dim();
    let ab = dim.checked_sub(derived).expect("derived subalgebra fits");
    let sh = shape(&l, &summary);
    let dimv = |d: GradedDim| Some(Value::Dim(d));

    let rank2_closed = |f: fn(Rank2Case, GradedDim, usize, usize) -> Result<GradedDim, FormulaError>| match &sh {
        Shape::Rank2 { h2, case: Some(c) } => Closed::from(f(*c, *h2, dim.even, dim.odd)),
        Shape::Rank2 { case: None, .. } => Closed::Untested("theorem inapplicable: exterior center fits no case".into()),
        _ => Closed::Absent,
    };
    let pure_rank1 = match &sh {
        Shape::Rank1(r) if r.abelian.is_zero() => Some(r.kind),
        _ => None,
    };

    let tensor2_closed = match (&sh, pure_rank1) {
        (Shape::Abelian, _) => Closed::Value(Value::Dim(formulas::tensor2_abelian(ab.even, ab.odd))),
        (_, Some(HeisenbergKind::EvenCenter { m, n })) => formulas::tensor2_heisenberg_even(m, n).into(),
        (_, Some(HeisenbergKind::OddCenter { m })) => formulas::tensor2_heisenberg_odd(m).into(),
        (Shape::Rank2 { .. }, _) => rank2_closed(formulas::tensor2_gh_rank2),
        _ => Closed::Absent,
    };
    rec.push("tensor2", dimv(summary.tensor2), tensor2_closed);

    let ext2_closed = match (&sh, pure_rank1) {
        (Shape::Abelian, _) => formulas::multiplier_abelian(ab.even, ab.odd).into(),
        (_, Some(HeisenbergKind::EvenCenter { m, n })) => formulas::ext2_heisenberg_even(m, n).into(),
        (_, Some(HeisenbergKind::OddCenter { m })) => formulas::ext2_heisenberg_odd(m).into(),
        (Shape::Rank2 { .. }, _) => rank2_closed(formulas::ext2_gh_rank2),
        _ => Closed::Absent,
    };
    rec.push("ext2", dimv(summary.exterior2), ext2_closed);

    let multiplier_closed = match &sh {
        Shape::Abelian => formulas::multiplier_abelian(ab.even, ab.odd).into(),
        Shape::Rank1(r) => rank1_multiplier(r.kind)
            .and_then(|mh| {
                let ma = formulas::multiplier_abelian(r.abelian.even, r.abelian.odd)?;
                Ok(formulas::multiplier_direct_sum(mh, ma, rank1_abelianization(r.kind), r.abelian))
            })
            .into(),
        Shape::Rank2 { .. } => rank2_closed(formulas::multiplier_gh_rank2),
        Shape::Other => Closed::Absent,
    };
    rec.push("multiplier", dimv(summary.multiplier), multiplier_closed);

    if let Some(m) = sum_rule_multiplier(key) {
        rec.push("multiplier_sum_rule", dimv(summary.multiplier), m.into());
    }

    rec.push("square", dimv(summary.square), Closed::Value(Value::Dim(formulas::gamma_closed(ab.even, ab.odd))));
    rec.push("gamma", gamma.get(&ab).copied().map(Value::Dim), Closed::Value(Value::Dim(formulas::gamma_closed(ab.even, ab.odd))));
    rec.push("decomposition", Some(Value::Flag(summary.decomposes)), Closed::Value(Value::Flag(true)));
    rec.push("ext2_split", dimv(summary.exterior2), Closed::Value(Value::Dim(summary.multiplier + derived)));

    let tensor3_closed = match (&sh, pure_rank1) {
        (Shape::Abelian, _) => Closed::Value(Value::Dim(formulas::tensor2_abelian(ab.even, ab.odd) * ab)),
        (_, Some(HeisenbergKind::EvenCenter { m, n })) => formulas::triple_tensor_heisenberg_even(m, n).into(),
        (_, Some(HeisenbergKind::OddCenter { m })) => formulas::triple_tensor_heisenberg_odd(m).into(),
        (Shape::Rank2 { .. }, _) => rank2_closed(formulas::tensor3_gh_rank2),
        _ => Closed::Absent,
    };
    rec.push("tensor3", dimv(summary.tensor3), tensor3_closed);
    rec.push("tensor3_collapse", dimv(summary.tensor3), Closed::Value(Value::Dim(summary.tensor2 * ab)));

    let capable = summary.exterior_center.is_zero();
    rec.push("extcenter", dimv(summary.exterior_center.dim()), Closed::Absent);
    if let Shape::Rank1(r) = &sh {
        let predicted = matches!(r.kind, HeisenbergKind::EvenCenter { m: 1, n: 0 } | HeisenbergKind::OddCenter { m: 1 });
        rec.push("capable", Some(Value::Flag(capable)), Closed::Value(Value::Flag(predicted)));
    } else {
        rec.push("capable", Some(Value::Flag(capable)), Closed::Absent);
    }

    if let Shape::Rank2 { h2, case } = &sh {
        let label = match case {
            Some(c) => format!("{c} H2={h2}"),
            None if capable => format!("capable H2={h2}"),
            None => format!("unclassified Z^={} H2={h2}", summary.exterior_center.dim()),
        };
        let closed = match case {
            Some(_) => Closed::Absent,
            None => Closed::Untested("theorem inapplicable".into()),
        };
        rec.push("rank2_case", Some(Value::Text(label)), closed);
    }

    if !derived.is_zero() {
        let lhs = summary.tensor3.total();
        match formulas::tensor_bound(dim.even, dim.odd, derived.even, derived.odd) {
            Ok(rhs) => {
                rec.push("bound", Some(Value::Flag(lhs <= rhs)), Closed::Value(Value::Flag(true)));
                rec.note_last(format!("{lhs}<={rhs}"));
                if derived == GradedDim::new(1, 0) {
                    let is_h10 = matches!(
                        &sh,
                        Shape::Rank1(r) if r.abelian.is_zero() && r.kind == HeisenbergKind::EvenCenter { m: 1, n: 0 }
                    );
                    rec.push("bound_equality", Some(Value::Flag(lhs == rhs)), Closed::Value(Value::Flag(is_h10)));
                    rec.note_last(format!("{lhs} vs {rhs}"));
                }
            }
            Err(e) => rec.push("bound", Some(Value::Count(lhs)), Closed::Untested(e.to_string())),
        }
    }
    rec.records
}

/// Run every specimen of total dimension at most `max_total_dim`.
pub fn verify_paper(max_total_dim: usize) -> Vec<VerificationRecord> {
    verify_paper_with(&VerifyOptions::new(max_total_dim))
}

pub fn verify_paper_with(opts: &VerifyOptions) -> Vec<VerificationRecord> {
    let keys = specimens(opts.max_total_dim, &opts.seeds);
    verify_keys(&keys, opts.parallel)
}

/// Verify an explicit list of specimens.
pub fn verify_keys(keys: &[CatalogKey], parallel: bool) -> Vec<VerificationRecord> {
    let ab_dims: BTreeSet<(usize, usize)> = (0..=keys.iter().map(|k| k.dim().total()).max().unwrap_or(0))
        .flat_map(|t| (0..=t).map(move |p| (p, t - p)))
        .collect();
    let gamma_of = |&(p, q): &(usize, usize)| (GradedDim::new(p, q), tensor::gamma_dim(p, q));
    let gamma: BTreeMap<GradedDim, GradedDim> = if parallel {
        ab_dims.par_iter().map(gamma_of).collect()
    } else {
        ab_dims.iter().map(gamma_of).collect()
    };
    let mut records: Vec<VerificationRecord> = if parallel {
        keys.par_iter().flat_map_iter(|k| verify_specimen(k, &gamma)).collect()
    } else {
        keys.iter().flat_map(|k| verify_specimen(k, &gamma)).collect()
    };
    records.sort_by(|a, b| (&a.algebra, &a.quantity).cmp(&(&b.algebra, &b.quantity)));
    records
}
