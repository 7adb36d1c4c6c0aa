//! Named families of Lie superalgebras and the catalog expression syntax.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := 'A(' m '|' n ')' | 'H(' m ',' n ')' | 'Hodd(' m ')'
//!         | 'F2(' p ',' q ';' r '|' s [';seed=' k] ')'
//! ```

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::linalg::{self, scalar, EchelonBasis};
use crate::superalgebra::{AlgebraBuilder, GradedDim, LieSuperAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("Heisenberg superalgebra H(0,0) does not exist")]
    EmptyHeisenberg,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("cannot parse catalog expression `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// Abelian `A(m|n)`.
pub fn abelian(m: usize, n: usize) -> LieSuperAlgebra {
    let mut b = AlgebraBuilder::new();
    for i in 1..=m {
        b.even(format!("a{i}"));
    }
    for j in 1..=n {
        b.odd(format!("b{j}"));
    }
    b.build().expect("abelian basis is well formed")
}

/// `H(m,n)`: `[x_i, x_{m+i}] = z`, `[y_j, y_j] = z`, with `z` even.
pub fn heisenberg_even(m: usize, n: usize) -> Result<LieSuperAlgebra, CatalogError> {
    if m + n == 0 {
        return Err(CatalogError::EmptyHeisenberg);
    }
    let mut b = AlgebraBuilder::new();
    let xs: Vec<usize> = (1..=2 * m).map(|i| b.even(format!("x{i}"))).collect();
    let z = b.even("z");
    let ys: Vec<usize> = (1..=n).map(|j| b.odd(format!("y{j}"))).collect();
    for i in 0..m {
        b.bracket(xs[i], xs[m + i], vec![(z, scalar(1))]);
    }
    for &y in &ys {
        b.bracket(y, y, vec![(z, scalar(1))]);
    }
    Ok(b.build().expect("H(m,n) is well formed"))
}

/// `H_m`: `[x_j, y_j] = z` with `x_j` even and `y_j`, `z` odd.
pub fn heisenberg_odd(m: usize) -> Result<LieSuperAlgebra, CatalogError> {
    if m == 0 {
        return Err(CatalogError::InvalidParams("Hodd(m) needs m >= 1".into()));
    }
    let mut b = AlgebraBuilder::new();
    let xs: Vec<usize> = (1..=m).map(|j| b.even(format!("x{j}"))).collect();
    let ys: Vec<usize> = (1..=m).map(|j| b.odd(format!("y{j}"))).collect();
    let z = b.odd("z");
    for j in 0..m {
        b.bracket(xs[j], ys[j], vec![(z, scalar(1))]);
    }
    Ok(b.build().expect("H_m is well formed"))
}

/// Which parities the two rank-1 summands of a rank-2 direct sum carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rank2Kind {
    /// `H(a,b) ⊕ H(c,d)`, rank `(2|0)`.
    Even,
    /// `H(a,b) ⊕ H_c`, rank `(1|1)`.
    Mixed,
    /// `H_a ⊕ H_b`, rank `(0|2)`.
    Odd,
}

/// Rank-2 generalized Heisenberg superalgebras built as direct sums of two
/// Heisenberg superalgebras.
pub fn gh_rank2(kind: Rank2Kind, params: &[usize]) -> Result<LieSuperAlgebra, CatalogError> {
    let arity = match kind {
        Rank2Kind::Even => 4,
        Rank2Kind::Mixed => 3,
        Rank2Kind::Odd => 2,
    };
    if params.len() != arity {
        return Err(CatalogError::InvalidParams(format!("{kind:?} needs {arity} parameters, got {}", params.len())));
    }
    let (l, r) = match kind {
        Rank2Kind::Even => (heisenberg_even(params[0], params[1])?, heisenberg_even(params[2], params[3])?),
        Rank2Kind::Mixed => (heisenberg_even(params[0], params[1])?, heisenberg_odd(params[2])?),
        Rank2Kind::Odd => (heisenberg_odd(params[0])?, heisenberg_odd(params[1])?),
    };
    Ok(l.direct_sum(&r))
}

/// Dimension of the center of the free class-2 nilpotent superalgebra on
/// `(p|q)` generators.
pub fn free_center_dim(p: usize, q: usize) -> GradedDim {
    GradedDim::new(p * p.saturating_sub(1) / 2 + (q + 1) * q / 2, p * q)
}

/// Free class-2 nilpotent superalgebra on `p` even and `q` odd generators.
pub fn free_nilpotent2(p: usize, q: usize) -> LieSuperAlgebra {
    let wide = p.max(q) >= 10;
    let label = |c: char, a: usize, b: usize| if wide { format!("{c}{a}_{b}") } else { format!("{c}{a}{b}") };
    let mut b = AlgebraBuilder::new();
    let xs: Vec<usize> = (1..=p).map(|i| b.even(format!("x{i}"))).collect();
    let ys: Vec<usize> = (1..=q).map(|j| b.odd(format!("y{j}"))).collect();
    for a in 0..p {
        for c in a + 1..p {
            let z = b.even(label('z', a + 1, c + 1));
            b.bracket(xs[a], xs[c], vec![(z, scalar(1))]);
        }
    }
    for a in 0..q {
        for c in a..q {
            let w = b.even(label('w', a + 1, c + 1));
            b.bracket(ys[a], ys[c], vec![(w, scalar(1))]);
        }
    }
    for (a, &x) in xs.iter().enumerate() {
        for (c, &y) in ys.iter().enumerate() {
            let u = b.odd(label('u', a + 1, c + 1));
            b.bracket(x, y, vec![(u, scalar(1))]);
        }
    }
    b.build().expect("free class-2 algebra is well formed")
}

fn mix_seed(parts: [u64; 5]) -> u64 {
    // splitmix64 over the parameter tuple
    parts.iter().fold(0x9E37_79B9_7F4A_7C15u64, |acc, &x| {
        let mut z = acc ^ x.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    })
}

/// Free class-2 nilpotent superalgebra with its center cut down by a seeded
/// pseudo-random graded complement, leaving `kept` central directions of the
/// derived algebra.
pub fn free_nilpotent2_quotient(p: usize, q: usize, kept: GradedDim, seed: u64) -> Result<LieSuperAlgebra, CatalogError> {
    let center = free_center_dim(p, q);
    if !kept.fits_in(center) {
        return Err(CatalogError::InvalidParams(format!(
            "F2({p},{q}) has a center of dimension {center}, cannot keep {kept}"
        )));
    }
    let free = free_nilpotent2(p, q);
    let d = free.len();
    let even_center: Vec<usize> = (p..p + center.even).collect();
    let odd_center: Vec<usize> = (d - center.odd..d).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed([p as u64, q as u64, kept.even as u64, kept.odd as u64, seed]));
    let mut eb = EchelonBasis::new(d);
    for (coords, target) in [(&even_center, center.even - kept.even), (&odd_center, center.odd - kept.odd)] {
        let goal = eb.rank() + target;
        let mut attempts = 0;
        while eb.rank() < goal {
            let mut v = linalg::zero_vec(d);
            if attempts < 1000 {
                for &k in coords.iter() {
                    v[k] = scalar(rng.gen_range(-3..=3));
                }
            } else {
                v[coords[attempts % coords.len()]] = scalar(1);
            }
            eb.insert(v);
            attempts += 1;
        }
    }
    let ideal = free.as_ideal(eb.into_subspace()).expect("central subspaces are ideals");
    Ok(free.quotient(&ideal).expect("central quotient is valid"))
}

/// Parsed catalog expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogKey {
    Abelian { m: usize, n: usize },
    HeisenbergEven { m: usize, n: usize },
    HeisenbergOdd { m: usize },
    FreeNilpotent2 { p: usize, q: usize, kept: GradedDim, seed: Option<u64> },
    DirectSum(Vec<CatalogKey>),
}

impl CatalogKey {
    pub fn direct_sum(parts: Vec<CatalogKey>) -> CatalogKey {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                CatalogKey::DirectSum(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().expect("one element")
        } else {
            CatalogKey::DirectSum(flat)
        }
    }

    /// Summands, a single-element slice for non-sums.
    pub fn summands(&self) -> Vec<&CatalogKey> {
        match self {
            CatalogKey::DirectSum(parts) => parts.iter().collect(),
            other => vec![other],
        }
    }

    /// Build the algebra; `default_seed` fills in an `F2` term without a seed.
    pub fn build(&self, default_seed: u64) -> Result<LieSuperAlgebra, CatalogError> {
        match self {
            CatalogKey::Abelian { m, n } => Ok(abelian(*m, *n)),
            CatalogKey::HeisenbergEven { m, n } => heisenberg_even(*m, *n),
            CatalogKey::HeisenbergOdd { m } => heisenberg_odd(*m),
            CatalogKey::FreeNilpotent2 { p, q, kept, seed } => {
                free_nilpotent2_quotient(*p, *q, *kept, seed.unwrap_or(default_seed))
            }
            CatalogKey::DirectSum(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or_else(|| CatalogError::InvalidParams("empty direct sum".into()))?;
                let mut acc = first.build(default_seed)?;
                for p in it {
                    acc = acc.direct_sum(&p.build(default_seed)?);
                }
                Ok(acc)
            }
        }
    }

    /// Superdimension without building anything.
    pub fn dim(&self) -> GradedDim {
        match self {
            CatalogKey::Abelian { m, n } => GradedDim::new(*m, *n),
            CatalogKey::HeisenbergEven { m, n } => GradedDim::new(2 * m + 1, *n),
            CatalogKey::HeisenbergOdd { m } => GradedDim::new(*m, m + 1),
            CatalogKey::FreeNilpotent2 { p, q, kept, .. } => GradedDim::new(*p, *q) + *kept,
            CatalogKey::DirectSum(parts) => parts.iter().fold(GradedDim::ZERO, |acc, p| acc + p.dim()),
        }
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKey::Abelian { m, n } => write!(f, "A({m}|{n})"),
            CatalogKey::HeisenbergEven { m, n } => write!(f, "H({m},{n})"),
            CatalogKey::HeisenbergOdd { m } => write!(f, "Hodd({m})"),
            CatalogKey::FreeNilpotent2 { p, q, kept, seed } => {
                write!(f, "F2({p},{q};{}|{}", kept.even, kept.odd)?;
                if let Some(s) = seed {
                    write!(f, ";seed={s}")?;
                }
                f.write_str(")")
            }
            CatalogKey::DirectSum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for CatalogKey {
    type Err = CatalogError;

    fn from_str(input: &str) -> Result<Self, CatalogError> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: String| CatalogError::Parse { input: input.to_string(), reason };
        if compact.is_empty() {
            return Err(err("empty expression".into()));
        }
        let terms = compact.split('+').map(|t| parse_term(t).map_err(err)).collect::<Result<Vec<_>, _>>()?;
        Ok(CatalogKey::direct_sum(terms))
    }
}

fn parse_term(t: &str) -> Result<CatalogKey, String> {
    let open = t.find('(').ok_or_else(|| format!("missing `(` in `{t}`"))?;
    let inner = t[open + 1..].strip_suffix(')').ok_or_else(|| format!("missing `)` in `{t}`"))?;
    let num = |s: &str| s.parse::<usize>().map_err(|_| format!("expected a count, got `{s}` in `{t}`"));
    let pair = |s: &str, sep: char| -> Result<(usize, usize), String> {
        let (a, b) = s.split_once(sep).ok_or_else(|| format!("expected `{sep}` in `{t}`"))?;
        Ok((num(a)?, num(b)?))
    };
    match &t[..open] {
        "A" => {
            let (m, n) = pair(inner, '|')?;
            Ok(CatalogKey::Abelian { m, n })
        }
        "H" => {
            let (m, n) = pair(inner, ',')?;
            Ok(CatalogKey::HeisenbergEven { m, n })
        }
        "Hodd" => Ok(CatalogKey::HeisenbergOdd { m: num(inner)? }),
        "F2" => {
            let fields: Vec<&str> = inner.split(';').collect();
            if !(2..=3).contains(&fields.len()) {
                return Err(format!("F2 expects `p,q;r|s[;seed=k]`, got `{t}`"));
            }
            let (p, q) = pair(fields[0], ',')?;
            let (r, s) = pair(fields[1], '|')?;
            let seed = match fields.get(2) {
                None => None,
                Some(f) => {
                    let v = f.strip_prefix("seed=").ok_or_else(|| format!("expected `seed=k`, got `{f}`"))?;
                    Some(v.parse::<u64>().map_err(|_| format!("bad seed `{v}`"))?)
                }
            };
            Ok(CatalogKey::FreeNilpotent2 { p, q, kept: GradedDim::new(r, s), seed })
        }
        other => Err(format!("unknown family `{other}`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::Nilpotency;

    #[test]
    fn abelian_examples() {
        assert!(abelian(0, 0).is_empty());
        let a = abelian(2, 0);
        assert_eq!(a.nilpotency_class(), Nilpotency::Class(1));
        assert_eq!(a.center().dim(), GradedDim::new(2, 0));
        assert!(abelian(1, 1).derived_subalgebra().is_zero());
    }

    #[test]
    fn heisenberg_even_examples() {
        let h = heisenberg_even(1, 0).unwrap();
        assert_eq!(h.dim(), GradedDim::new(3, 0));
        assert_eq!(h.bracket_basis(0, 1), vec![(2, scalar(1))]);
        let h01 = heisenberg_even(0, 1).unwrap();
        assert_eq!(h01.dim(), GradedDim::new(1, 1));
        assert_eq!(h01.bracket_basis(1, 1), vec![(0, scalar(1))]);
        assert_eq!(heisenberg_even(1, 1).unwrap().dim(), GradedDim::new(3, 1));
        assert_eq!(heisenberg_even(0, 0), Err(CatalogError::EmptyHeisenberg));
    }

    #[test]
    fn heisenberg_odd_examples() {
        assert_eq!(heisenberg_odd(1).unwrap().dim(), GradedDim::new(1, 2));
        assert_eq!(heisenberg_odd(2).unwrap().dim(), GradedDim::new(2, 3));
        let h3 = heisenberg_odd(3).unwrap();
        let c = h3.center();
        assert_eq!(c.dim(), GradedDim::new(0, 1));
        assert!(c.contains(&linalg::unit_vec(7, h3.index_of("z").unwrap())));
    }

    #[test]
    fn gh_rank2_examples() {
        let e = gh_rank2(Rank2Kind::Even, &[1, 0, 1, 0]).unwrap();
        assert_eq!(e.dim(), GradedDim::new(6, 0));
        assert_eq!(e.generalized_heisenberg_rank(), Some(GradedDim::new(2, 0)));
        let m = gh_rank2(Rank2Kind::Mixed, &[1, 0, 1]).unwrap();
        assert_eq!(m.dim(), GradedDim::new(4, 2));
        assert_eq!(m.generalized_heisenberg_rank(), Some(GradedDim::new(1, 1)));
        let o = gh_rank2(Rank2Kind::Odd, &[1, 1]).unwrap();
        assert_eq!(o.dim(), GradedDim::new(2, 4));
        assert_eq!(o.generalized_heisenberg_rank(), Some(GradedDim::new(0, 2)));
        assert!(matches!(gh_rank2(Rank2Kind::Odd, &[1]), Err(CatalogError::InvalidParams(_))));
    }

    #[test]
    fn free_quotient_examples() {
        let f = free_nilpotent2_quotient(3, 0, GradedDim::new(2, 0), 7).unwrap();
        assert_eq!(f.dim(), GradedDim::new(5, 0));
        assert_eq!(f.center().dim(), GradedDim::new(2, 0));
        assert!(f.check_axioms().is_ok());

        let h = free_nilpotent2_quotient(2, 0, GradedDim::new(1, 0), 1).unwrap();
        assert_eq!(h.dim(), GradedDim::new(3, 0));
        assert_eq!(h.generalized_heisenberg_rank(), Some(GradedDim::new(1, 0)));

        let y = free_nilpotent2_quotient(0, 2, GradedDim::new(1, 0), 3).unwrap();
        assert_eq!(y.dim(), GradedDim::new(1, 2));
        assert!(y.check_axioms().is_ok());
        assert_eq!(y.derived_subalgebra().dim(), GradedDim::new(1, 0));

        assert!(free_nilpotent2_quotient(2, 0, GradedDim::new(2, 0), 1).is_err());
    }

    #[test]
    fn free_quotient_is_deterministic() {
        let a = free_nilpotent2_quotient(3, 1, GradedDim::new(2, 1), 5).unwrap();
        let b = free_nilpotent2_quotient(3, 1, GradedDim::new(2, 1), 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn free_center_dims() {
        let f = free_nilpotent2(2, 2);
        assert_eq!(free_center_dim(2, 2), GradedDim::new(4, 4));
        assert_eq!(f.center().dim(), GradedDim::new(4, 4));
        assert!(f.check_axioms().is_ok());
    }

    #[test]
    fn parse_and_display() {
        let k: CatalogKey = " H(1,0) + Hodd(1) ".parse().unwrap();
        assert_eq!(
            k,
            CatalogKey::DirectSum(vec![CatalogKey::HeisenbergEven { m: 1, n: 0 }, CatalogKey::HeisenbergOdd { m: 1 }])
        );
        assert_eq!(k.to_string(), "H(1,0)+Hodd(1)");
        let f: CatalogKey = "F2(3,0;2|0;seed=7)".parse().unwrap();
        assert_eq!(f, CatalogKey::FreeNilpotent2 { p: 3, q: 0, kept: GradedDim::new(2, 0), seed: Some(7) });
        assert_eq!(f.to_string(), "F2(3,0;2|0;seed=7)");
        assert_eq!("A(3|1)".parse::<CatalogKey>().unwrap().dim(), GradedDim::new(3, 1));
        assert!("B(1)".parse::<CatalogKey>().is_err());
        assert!("H(1|0)".parse::<CatalogKey>().is_err());
        assert!("".parse::<CatalogKey>().is_err());
    }
}
