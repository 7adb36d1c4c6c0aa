//! Line-oriented structure-constants files.
//!
//! ```text
//! format_version: 1
//! field: Q
//! # H(1,0)
//! basis x1 even
//! basis x2 even
//! basis z even
//! bracket x1 x2 : 1/1 z
//! ```
//!
//! Brackets that are not listed are zero. Coefficients are exact rationals,
//! written `p/q` in lowest terms with `q > 0`; plain integers are accepted on
//! input.

use supertensor::linalg::Scalar;
use supertensor::superalgebra::{AlgebraBuilder, AlgebraError, LieSuperAlgebra, Parity};
use thiserror::Error;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` header")]
    MissingHeader(&'static str),
    #[error("unsupported format_version `{0}`")]
    UnsupportedVersion(String),
    #[error("unsupported field `{0}`, only Q is available")]
    UnsupportedField(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn syntax(line: usize, message: impl Into<String>) -> FileError {
    FileError::Syntax { line, message: message.into() }
}

pub fn format_rational(q: &Scalar) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Option<Scalar> {
    s.parse::<Scalar>().ok()
}

/// Line number, operands and `(coefficient, target)` terms.
type BracketLine = (usize, String, String, Vec<(Scalar, String)>);

/// Parse an algebra file. Axioms are not checked here.
pub fn parse(text: &str) -> Result<LieSuperAlgebra, FileError> {
    let mut version = None;
    let mut field = None;
    let mut builder = AlgebraBuilder::new();
    let mut brackets: Vec<BracketLine> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(v) = line.strip_prefix("format_version:") {
            version = Some(v.trim().to_string());
        } else if let Some(f) = line.strip_prefix("field:") {
            field = Some(f.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("basis ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let [name, parity] = parts[..] else {
                return Err(syntax(line_no, "expected `basis NAME even|odd`"));
            };
            let parity: Parity = parity.parse().map_err(|e: String| syntax(line_no, e))?;
            builder.element(name, parity);
        } else if let Some(rest) = line.strip_prefix("bracket ") {
            let (lhs, rhs) = rest.split_once(':').ok_or_else(|| syntax(line_no, "expected `:` in bracket line"))?;
            let names: Vec<&str> = lhs.split_whitespace().collect();
            let [a, b] = names[..] else {
                return Err(syntax(line_no, "expected `bracket A B : ...`"));
            };
            let mut terms = Vec::new();
            for term in rhs.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let parts: Vec<&str> = term.split_whitespace().collect();
                let [coeff, target] = parts[..] else {
                    return Err(syntax(line_no, format!("expected `p/q NAME`, got `{term}`")));
                };
                let c = parse_rational(coeff).ok_or_else(|| syntax(line_no, format!("bad rational `{coeff}`")))?;
                terms.push((c, target.to_string()));
            }
            brackets.push((line_no, a.to_string(), b.to_string(), terms));
        } else {
            return Err(syntax(line_no, format!("unrecognised line `{line}`")));
        }
    }

    match version {
        None => return Err(FileError::MissingHeader("format_version")),
        Some(v) if v != FORMAT_VERSION => return Err(FileError::UnsupportedVersion(v)),
        _ => {}
    }
    match field {
        None => return Err(FileError::MissingHeader("field")),
        Some(f) if f != "Q" => return Err(FileError::UnsupportedField(f)),
        _ => {}
    }
    for (line_no, a, b, terms) in brackets {
        let resolve = |n: &str| builder.index_of(n).ok_or_else(|| syntax(line_no, format!("unknown basis name `{n}`")));
        let (i, j) = (resolve(&a)?, resolve(&b)?);
        let terms = terms.into_iter().map(|(c, t)| Ok((resolve(&t)?, c))).collect::<Result<Vec<_>, FileError>>()?;
        builder.bracket(i, j, terms);
    }
    Ok(builder.build()?)
}

/// Serialize with brackets `[e_i, e_j]`, `i ≤ j`, in basis order.
pub fn write(l: &LieSuperAlgebra) -> String {
    let mut out = format!("format_version: {FORMAT_VERSION}\nfield: Q\n");
    for (name, parity) in l.names().iter().zip(l.parities()) {
        out.push_str(&format!("basis {name} {parity}\n"));
    }
    for (i, j, terms) in l.stored_brackets() {
        let rhs: Vec<String> = terms.iter().map(|(k, c)| format!("{} {}", format_rational(c), l.name(*k))).collect();
        out.push_str(&format!("bracket {} {} : {}\n", l.name(i), l.name(j), rhs.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use supertensor::catalog;
    use supertensor::linalg::ratio;

    #[test]
    fn writes_heisenberg() {
        let text = write(&catalog::heisenberg_even(1, 1).unwrap());
        assert_eq!(
            text,
            "format_version: 1\nfield: Q\nbasis x1 even\nbasis x2 even\nbasis z even\nbasis y1 odd\n\
             bracket x1 x2 : 1/1 z\nbracket y1 y1 : 1/1 z\n"
        );
    }

    #[test]
    fn parses_comments_and_integers() {
        let text = "format_version: 1\nfield: Q  # rationals\n\nbasis a even\nbasis b odd\nbasis c even\n\
                    bracket b b : 2 c\n";
        let l = parse(text).unwrap();
        assert_eq!(l.names(), ["a", "c", "b"]);
        assert_eq!(l.bracket_basis(2, 2), vec![(1, ratio(2, 1))]);
    }

    #[test]
    fn reversed_bracket_uses_skew_symmetry() {
        let text = "format_version: 1\nfield: Q\nbasis x even\nbasis y even\nbasis z even\nbracket y x : -3/6 z\n";
        let l = parse(text).unwrap();
        assert_eq!(l.bracket_basis(0, 1), vec![(2, ratio(1, 2))]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse("field: Q\n"), Err(FileError::MissingHeader("format_version")));
        assert_eq!(parse("format_version: 2\nfield: Q\n"), Err(FileError::UnsupportedVersion("2".into())));
        assert_eq!(parse("format_version: 1\nfield: R\n"), Err(FileError::UnsupportedField("R".into())));
        let unknown = "format_version: 1\nfield: Q\nbasis x even\nbracket x w : 1/1 x\n";
        assert!(matches!(parse(unknown), Err(FileError::Syntax { line: 4, .. })));
        let zero_den = "format_version: 1\nfield: Q\nbasis x even\nbasis y even\nbracket x y : 1/0 x\n";
        assert!(matches!(parse(zero_den), Err(FileError::Syntax { line: 5, .. })));
        let dup = "format_version: 1\nfield: Q\nbasis x even\nbasis x odd\n";
        assert!(matches!(parse(dup), Err(FileError::Algebra(AlgebraError::DuplicateName(_)))));
    }
}
