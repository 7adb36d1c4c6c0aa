//! Report rendering for every command.

use std::fmt::Write as _;

use supertensor::verify::{Value, VerificationRecord};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Cap on listed coset representatives.
pub const BASIS_CAP: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Aligned, human readable.
    Text,
    /// One tab-separated `key=value` record per line.
    Lines,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantityRecord {
    pub algebra: String,
    pub quantity: String,
    pub value: Value,
    pub basis: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Record {
    Quantity(QuantityRecord),
    Verification(VerificationRecord),
}

impl Record {
    fn key(&self) -> (&str, &str) {
        match self {
            Record::Quantity(q) => (&q.algebra, &q.quantity),
            Record::Verification(v) => (&v.algebra, &v.quantity),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub tool_version: String,
    pub input_echo: String,
    records: Vec<Record>,
}

impl Report {
    pub fn new(input_echo: impl Into<String>, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.key().cmp(&b.key()));
        Report { tool_version: TOOL_VERSION.to_string(), input_echo: input_echo.into(), records }
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| matches!(r, Record::Verification(v) if v.is_mismatch())).count()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Lines => self.render_lines(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = format!("supertensor {}\ninput: {}\n", self.tool_version, self.input_echo);
        let width = self.records.iter().map(|r| r.key().1.chars().count()).max().unwrap_or(0);
        for r in &self.records {
            match r {
                Record::Quantity(q) => {
                    let _ = writeln!(out, "{:<width$}  {}", q.quantity, q.value);
                    if let Some(basis) = &q.basis {
                        for sym in basis.iter().take(BASIS_CAP) {
                            let _ = writeln!(out, "  {sym}");
                        }
                        if basis.len() > BASIS_CAP {
                            let _ = writeln!(out, "  ... truncated, {} of {} shown", BASIS_CAP, basis.len());
                        }
                    }
                }
                Record::Verification(v) => {
                    let _ = writeln!(out, "{v}");
                }
            }
        }
        if self.records.iter().any(|r| matches!(r, Record::Verification(_))) {
            let _ = writeln!(out, "mismatches: {}", self.mismatches());
        }
        out
    }

    fn render_lines(&self) -> String {
        let mut out = format!("tool_version={}\ninput={}\n", self.tool_version, self.input_echo);
        let opt = |v: &Option<Value>| v.as_ref().map_or(String::new(), ToString::to_string);
        for r in &self.records {
            let line = match r {
                Record::Quantity(q) => {
                    let mut fields = vec![
                        format!("algebra={}", q.algebra),
                        format!("quantity={}", q.quantity),
                        format!("value={}", q.value),
                    ];
                    if let Some(basis) = &q.basis {
                        let shown: Vec<&str> = basis.iter().take(BASIS_CAP).map(String::as_str).collect();
                        fields.push(format!("basis={}", shown.join(",")));
                        fields.push(format!("truncated={}", basis.len() > BASIS_CAP));
                    }
                    fields.join("\t")
                }
                Record::Verification(v) => [
                    format!("algebra={}", v.algebra),
                    format!("quantity={}", v.quantity),
                    format!("constructive={}", opt(&v.constructive)),
                    format!("closed_form={}", opt(&v.closed_form)),
                    format!("status={}", v.status),
                    format!("note={}", v.note.clone().unwrap_or_default()),
                ]
                .join("\t"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use supertensor::verify::Status;
    use supertensor::GradedDim;

    fn quantity(alg: &str, q: &str, basis: Option<Vec<String>>) -> Record {
        Record::Quantity(QuantityRecord {
            algebra: alg.into(),
            quantity: q.into(),
            value: Value::Dim(GradedDim { even: 1, odd: 0 }),
            basis,
        })
    }

    #[test]
    fn records_are_sorted() {
        let r = Report::new("x", vec![quantity("b", "a", None), quantity("a", "z", None), quantity("a", "b", None)]);
        let keys: Vec<_> = r.records().iter().map(|r| r.key()).collect();
        assert_eq!(keys, [("a", "b"), ("a", "z"), ("b", "a")]);
    }

    #[test]
    fn basis_listing_is_capped() {
        let basis: Vec<String> = (0..250).map(|k| format!("s{k}")).collect();
        let text = Report::new("x", vec![quantity("a", "tensor2", Some(basis.clone()))]).render(Format::Text);
        assert!(text.contains("  s199\n"));
        assert!(!text.contains("  s200\n"));
        assert!(text.contains("truncated, 200 of 250 shown"));
        let lines = Report::new("x", vec![quantity("a", "tensor2", Some(basis))]).render(Format::Lines);
        assert!(lines.contains("truncated=true"));
    }

    #[test]
    fn counts_mismatches() {
        let rec = |status| {
            Record::Verification(VerificationRecord {
                algebra: "A(1|0)".into(),
                quantity: "tensor2".into(),
                constructive: Some(Value::Count(1)),
                closed_form: Some(Value::Count(2)),
                status,
                note: None,
            })
        };
        let r = Report::new("verify", vec![rec(Status::Mismatch), rec(Status::Match)]);
        assert_eq!(r.mismatches(), 1);
        assert!(r.render(Format::Text).ends_with("mismatches: 1\n"));
        assert!(r.render(Format::Lines).contains("status=mismatch\tnote=\n"));
    }
}
