//! Closed-form dimension formulas.
//!
//! Every function evaluates in `i64` and converts to [`GradedDim`] at the
//! end. Formulas with a `½` factor fail with [`FormulaError::NonIntegral`]
//! instead of rounding; rank-2 formulas whose output would be negative fail
//! with [`FormulaError::CaseUndefined`].

use std::fmt;

use thiserror::Error;

use crate::superalgebra::GradedDim;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no formula for {case} with derived dimension {h2}")]
    CaseUndefined { case: Rank2Case, h2: GradedDim },
    #[error("formula halves an odd number ({0})")]
    NonIntegral(i64),
}

type FResult = Result<GradedDim, FormulaError>;

fn half(x: i64) -> Result<i64, FormulaError> {
    if x % 2 != 0 {
        Err(FormulaError::NonIntegral(x))
    } else {
        Ok(x / 2)
    }
}

fn dim(even: i64, odd: i64) -> FResult {
    if even < 0 || odd < 0 {
        return Err(FormulaError::InvalidParams(format!("negative dimension ({even}|{odd})")));
    }
    Ok(GradedDim::new(even as usize, odd as usize))
}

fn int(x: usize) -> i64 {
    i64::try_from(x).expect("parameter fits in i64")
}

/// `(p(p+1)/2 + q(q−1)/2 | pq)`, the dimension of `Γ(A(p|q))`.
pub fn gamma_closed(p: usize, q: usize) -> GradedDim {
    GradedDim::new(p * (p + 1) / 2 + q * q.saturating_sub(1) / 2, p * q)
}

/// `dim ⊗²A(p|q) = (p²+q² | 2pq)`.
pub fn tensor2_abelian(p: usize, q: usize) -> GradedDim {
    GradedDim::new(p * p + q * q, 2 * p * q)
}

/// Schur multiplier of `A(m|n)`.
pub fn multiplier_abelian(m: usize, n: usize) -> FResult {
    let (m, n) = (int(m), int(n));
    dim(half(m * m + n * n + n - m)?, m * n)
}

pub fn multiplier_heisenberg_even(m: usize, n: usize) -> FResult {
    match (m, n) {
        (0, 0) => Err(FormulaError::InvalidParams("H(0,0)".into())),
        (0, 1) => dim(0, 0),
        (1, 0) => dim(2, 0),
        _ => {
            let (m, n) = (int(m), int(n));
            dim(2 * m * m - m + half(n * (n + 1))? - 1, 2 * m * n)
        }
    }
}

pub fn multiplier_heisenberg_odd(m: usize) -> FResult {
    match m {
        0 => Err(FormulaError::InvalidParams("H_0".into())),
        1 => dim(1, 1),
        _ => {
            let m = int(m);
            dim(m * m, m * m - 1)
        }
    }
}

/// `M(H ⊕ K) = M(H) ⊕ M(K) ⊕ (H/H² ⊗ K/K²)`.
pub fn multiplier_direct_sum(m_h: GradedDim, m_k: GradedDim, h_ab: GradedDim, k_ab: GradedDim) -> GradedDim {
    m_h + m_k + h_ab * k_ab
}

/// Multiplier of the pair `(A(m|n), I)` for a `(k|h)`-dimensional ideal `I`.
pub fn multiplier_pair_abelian(m: usize, n: usize, k: usize, h: usize) -> FResult {
    if k > m || h > n {
        return Err(FormulaError::InvalidParams(format!("ideal ({k}|{h}) does not fit in A({m}|{n})")));
    }
    let (m, n, k, h) = (int(m), int(n), int(k), int(h));
    dim(half(k * (2 * m - k - 1) + h * (2 * n - h + 1))?, m * n - (m - k) * (n - h))
}

pub fn tensor2_heisenberg_even(m: usize, n: usize) -> FResult {
    match (m, n) {
        (0, 0) => Err(FormulaError::InvalidParams("H(0,0)".into())),
        (1, 0) => dim(6, 0),
        (0, 1) => dim(1, 0),
        _ => Ok(tensor2_abelian(2 * m, n)),
    }
}

pub fn tensor2_heisenberg_odd(m: usize) -> FResult {
    match m {
        0 => Err(FormulaError::InvalidParams("H_0".into())),
        1 => dim(2, 3),
        _ => Ok(tensor2_abelian(m, m)),
    }
}

pub fn ext2_heisenberg_even(m: usize, n: usize) -> FResult {
    match (m, n) {
        (0, 0) => Err(FormulaError::InvalidParams("H(0,0)".into())),
        (1, 0) => dim(3, 0),
        (0, 1) => dim(1, 0),
        _ => {
            let (m, n) = (int(m), int(n));
            dim(2 * m * m - m + half(n * (n + 1))?, 2 * m * n)
        }
    }
}

pub fn ext2_heisenberg_odd(m: usize) -> FResult {
    match m {
        0 => Err(FormulaError::InvalidParams("H_0".into())),
        1 => dim(1, 2),
        _ => {
            let m = int(m);
            dim(m * m, m * m)
        }
    }
}

pub fn triple_tensor_heisenberg_even(m: usize, n: usize) -> FResult {
    match (m, n) {
        (0, 0) => Err(FormulaError::InvalidParams("H(0,0)".into())),
        (1, 0) => dim(12, 0),
        (0, 1) => dim(0, 1),
        _ => {
            let (m, n) = (int(m), int(n));
            dim(8 * m.pow(3) + 6 * m * n * n, 12 * m * m * n + n.pow(3))
        }
    }
}

pub fn triple_ext_heisenberg_even(m: usize, n: usize) -> FResult {
    match (m, n) {
        (0, 0) => Err(FormulaError::InvalidParams("H(0,0)".into())),
        (1, 0) => dim(2, 0),
        (0, 1) => dim(0, 1),
        _ => {
            let (m, n) = (int(m), int(n));
            dim(
                4 * m.pow(3) - 4 * m * m + m * n * (n + 1) + 2 * m * n * n - m - half(n * (n - 1))?,
                6 * m * m * n - 3 * m * n + half(n * n * (n + 1))?,
            )
        }
    }
}

pub fn triple_tensor_heisenberg_odd(m: usize) -> FResult {
    match m {
        0 => Err(FormulaError::InvalidParams("H_0".into())),
        1 => dim(5, 5),
        _ => {
            let m = int(m);
            dim(4 * m * m, 4 * m * m)
        }
    }
}

pub fn triple_ext_heisenberg_odd(m: usize) -> FResult {
    match m {
        0 => Err(FormulaError::InvalidParams("H_0".into())),
        1 => dim(2, 2),
        _ => {
            let m = int(m);
            dim(2 * m.pow(3) - m * m, m.pow(4) - (m * m - m).pow(2))
        }
    }
}

/// `(m+n)(m+n−(r+s))²`.
pub fn tensor_bound(m: usize, n: usize, r: usize, s: usize) -> Result<usize, FormulaError> {
    if r + s == 0 || r > m || s > n {
        return Err(FormulaError::InvalidParams(format!("derived ({r}|{s}) in ({m}|{n})")));
    }
    Ok((m + n) * (m + n - r - s).pow(2))
}

/// Position of the exterior center of a non-capable rank-2 generalized
/// Heisenberg superalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank2Case {
    /// `Z^∧(H) = H²`.
    CenterIsDerived,
    /// `Z^∧(H) = K ⊆ H²` with `dim K = (1|0)`.
    EvenLine,
    /// `Z^∧(H) = K ⊆ H²` with `dim K = (0|1)`.
    OddLine,
}

impl Rank2Case {
    pub const ALL: [Rank2Case; 3] = [Rank2Case::CenterIsDerived, Rank2Case::EvenLine, Rank2Case::OddLine];

    /// Derived dimensions for which a formula is printed.
    pub fn derived_kinds(self) -> &'static [GradedDim] {
        const E: GradedDim = GradedDim { even: 2, odd: 0 };
        const M: GradedDim = GradedDim { even: 1, odd: 1 };
        const O: GradedDim = GradedDim { even: 0, odd: 2 };
        match self {
            Rank2Case::CenterIsDerived => &[O, E, M],
            Rank2Case::EvenLine => &[M, E],
            Rank2Case::OddLine => &[M, O],
        }
    }
}

impl fmt::Display for Rank2Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rank2Case::CenterIsDerived => "Z^=H2",
            Rank2Case::EvenLine => "Z^=K(1|0)",
            Rank2Case::OddLine => "Z^=K(0|1)",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum H2 {
    Even,
    Mixed,
    Odd,
}

fn rank2_args(case: Rank2Case, h2: GradedDim, m: usize, n: usize) -> Result<(H2, i64, i64), FormulaError> {
    let kind = match (h2.even, h2.odd) {
        (2, 0) => H2::Even,
        (1, 1) => H2::Mixed,
        (0, 2) => H2::Odd,
        _ => return Err(FormulaError::InvalidParams(format!("rank {h2} is not of total dimension 2"))),
    };
    if !case.derived_kinds().contains(&h2) {
        return Err(FormulaError::CaseUndefined { case, h2 });
    }
    if h2.even > m || h2.odd > n {
        return Err(FormulaError::InvalidParams(format!("derived {h2} does not fit in ({m}|{n})")));
    }
    Ok((kind, int(m), int(n)))
}

fn rank2_dim(case: Rank2Case, h2: GradedDim, even: i64, odd: i64) -> FResult {
    if even < 0 || odd < 0 {
        return Err(FormulaError::CaseUndefined { case, h2 });
    }
    dim(even, odd)
}

/// Schur multiplier of a non-capable rank-2 generalized Heisenberg
/// superalgebra of dimension `(m|n)`.
pub fn multiplier_gh_rank2(case: Rank2Case, h2: GradedDim, m: usize, n: usize) -> FResult {
    let (kind, m, n) = rank2_args(case, h2, m, n)?;
    let (e, o) = match (case, kind) {
        (Rank2Case::CenterIsDerived, H2::Odd) => (half(m * (m - 1) + (n - 2) * (n - 1))?, m * (n - 2) - 2),
        (Rank2Case::CenterIsDerived, H2::Even) => (half((m - 3) * (m - 2) + n * (n + 1) - 4)?, (m - 2) * n),
        (Rank2Case::CenterIsDerived, H2::Mixed) => {
            (half((m - 1) * (m - 2) + n * (n - 1) - 2)?, (m - 1) * (n - 1) - 1)
        }
        (Rank2Case::EvenLine, H2::Mixed) => (half((m - 2) * (m + 1) + (n - 2) * (n - 1))?, m * (n - 2) + 1),
        (Rank2Case::EvenLine, H2::Even) => (half((m - 4) * (m - 1) + n * (n + 1) + 2)?, (m - 2) * n),
        (Rank2Case::OddLine, H2::Mixed) => (half((m - 4) * (m - 1) + n * (n + 1) + 4)?, (m - 2) * n - 1),
        (Rank2Case::OddLine, H2::Odd) => (half((m + 2) * (m - 1) + (n - 3) * (n - 2) + 2)?, (m + 1) * (n - 3)),
        _ => unreachable!("guarded by rank2_args"),
    };
    rank2_dim(case, h2, e, o)
}

pub fn ext2_gh_rank2(case: Rank2Case, h2: GradedDim, m: usize, n: usize) -> FResult {
    let (kind, m, n) = rank2_args(case, h2, m, n)?;
    let (e, o) = match (case, kind) {
        (Rank2Case::CenterIsDerived, H2::Odd) => (half(m * (m - 1) + (n - 2) * (n - 1))?, m * (n - 2)),
        (Rank2Case::CenterIsDerived, H2::Even) => (half((m - 3) * (m - 2) + n * (n + 1))?, (m - 2) * n),
        (Rank2Case::CenterIsDerived, H2::Mixed) => (half((m - 1) * (m - 2) + n * (n - 1))?, (m - 1) * (n - 1)),
        (Rank2Case::EvenLine, H2::Mixed) => (half((m - 2) * (m + 1) + (n - 2) * (n - 1) + 2)?, m * (n - 2) + 2),
        (Rank2Case::EvenLine, H2::Even) => (half((m - 4) * (m - 1) + n * (n + 1) + 6)?, (m - 2) * n),
        (Rank2Case::OddLine, H2::Mixed) => (half((m - 4) * (m - 1) + n * (n + 1) + 6)?, (m - 2) * n),
        (Rank2Case::OddLine, H2::Odd) => {
            (half((m + 2) * (m - 1) + (n - 3) * (n - 2) + 2)?, (m + 1) * (n - 3) + 2)
        }
        _ => unreachable!("guarded by rank2_args"),
    };
    rank2_dim(case, h2, e, o)
}

pub fn tensor2_gh_rank2(case: Rank2Case, h2: GradedDim, m: usize, n: usize) -> FResult {
    let (kind, m, n) = rank2_args(case, h2, m, n)?;
    let (e, o) = match (case, kind) {
        (Rank2Case::CenterIsDerived, H2::Odd) => (m * m + (n - 2).pow(2), 2 * m * (n - 2)),
        (Rank2Case::CenterIsDerived, H2::Even) => ((m - 2).pow(2) + n * n, 2 * (m - 2) * n),
        (Rank2Case::CenterIsDerived, H2::Mixed) => ((m - 1).pow(2) + (n - 1).pow(2), 2 * (m - 1) * (n - 1)),
        (Rank2Case::EvenLine, H2::Mixed) => {
            let l = half((m - 2) * (m + 1) + 2 * (n - 2) * (n - 1) + 2)?;
            let k = m * (n - 2) + 2;
            (l + half(m * (m - 1))?, k + (m - 1) * (n - 1))
        }
        (Rank2Case::EvenLine, H2::Even) => ((m - 3) * (m - 1) + n * n + 3, 2 * (m - 2) * n),
        (Rank2Case::OddLine, H2::Mixed) => ((m - 2) * (m - 1) + n * (n - 1) + 4, (m - 1) * (n - 1) + (m - 2) * n),
        (Rank2Case::OddLine, H2::Odd) => {
            let r = half((m + 2) * (m - 1) + 2 * (n - 3) * (n - 2) + 2)?;
            let s = (m + 1) * (n - 3) + 2;
            (r + half(m * (m + 1))?, s + m * (n - 2))
        }
        _ => unreachable!("guarded by rank2_args"),
    };
    rank2_dim(case, h2, e, o)
}

pub fn tensor3_gh_rank2(case: Rank2Case, h2: GradedDim, m: usize, n: usize) -> FResult {
    let (kind, m, n) = rank2_args(case, h2, m, n)?;
    let (e, o) = match (case, kind) {
        (Rank2Case::CenterIsDerived, H2::Odd) => {
            (m + (m * m + 3 * (n - 2).pow(2)), (n - 2) * (3 * m * m + (n - 2).pow(2)))
        }
        (Rank2Case::CenterIsDerived, H2::Even) => {
            ((m - 2) * ((m - 2).pow(2) + 3 * n * n), 3 * n * (m - 2).pow(2) + n.pow(3))
        }
        (Rank2Case::CenterIsDerived, H2::Mixed) => (
            (m - 1) * ((m - 1).pow(2) + 3 * (n - 1).pow(2)),
            (n - 1) * ((n - 1).pow(2) + 3 * (m - 1).pow(2)),
        ),
        (Rank2Case::EvenLine, H2::Mixed) => (
            (m - 1) * ((m - 1).pow(2) + 3 * (n - 1).pow(2) + 1),
            (n - 1) * ((n - 1).pow(2) + 3 * (m - 1).pow(2) + 1),
        ),
        (Rank2Case::EvenLine, H2::Even) => {
            ((m - 2) * ((m - 2).pow(2) + 3 * n * n + 2), n * (n * n + 3 * (m - 2).pow(2) + 2))
        }
        (Rank2Case::OddLine, H2::Mixed) => (
            (m - 1) * ((m - 1).pow(2) + 3 * (n - 1).pow(2) + 3),
            (n - 1) * ((n - 1).pow(2) + (m - 1).pow(2) + 3),
        ),
        (Rank2Case::OddLine, H2::Odd) => {
            (m * (m * m + 3 * (n - 2).pow(2) + 1), (n - 2) * (3 * m * m + (n - 2).pow(2) + 1))
        }
        _ => unreachable!("guarded by rank2_args"),
    };
    rank2_dim(case, h2, e, o)
}

/// Auxiliary quantities of the rank-2 triple exterior formulas.
struct Aux {
    l: i64,
    k: i64,
    s: i64,
    d: i64,
    x: i64,
    y: i64,
}

fn aux(m: i64, n: i64) -> Result<Aux, FormulaError> {
    Ok(Aux {
        l: half(m * (m * m - 2 * m + 9) + m * n * (3 * n - 11) - (n - 3) * (n - 2))?,
        k: half(3 * m * (m - 1) * (n - 2) + n * n * (n - 5) - 4 * (n + 1))?,
        s: half(m * m * (m - 8) + m * n * (3 * n + 1) + 19 * m - 14 - n * (7 * n + 1))?,
        d: m * n * (m - 12) + 9 * n + half(n * n * (n + 1))?,
        x: half(m * m * (m - 5) - 4 * n * (n - 2) + n * m * (3 * n - 5) + 8 * m - 6)?,
        y: half((n - 1) * (5 * m * m - 15 * m + 10 - m.pow(3) + 3 * m * m - 2 * m + n * n - n))?,
    })
}

pub fn ext3_gh_rank2(case: Rank2Case, h2: GradedDim, m: usize, n: usize) -> FResult {
    let (kind, m, n) = rank2_args(case, h2, m, n)?;
    let a = aux(m, n)?;
    let (e, o) = match (case, kind) {
        (Rank2Case::CenterIsDerived, H2::Odd) => (a.l, a.k),
        (Rank2Case::CenterIsDerived, H2::Even) => (a.s, a.d),
        (Rank2Case::CenterIsDerived, H2::Mixed) => (a.x, a.y),
        (Rank2Case::EvenLine, H2::Mixed) => (a.x, a.y),
        (Rank2Case::EvenLine, H2::Even) => (a.s + 2 * m - 7, a.d + 2 * n),
        (Rank2Case::OddLine, H2::Mixed) => (a.x + 3 * (m - 3), a.y + 3 * (n - 1)),
        (Rank2Case::OddLine, H2::Odd) => (a.l + 2 * m + n - 5, a.k + m + 2 * n - 6),
        _ => unreachable!("guarded by rank2_args"),
    };
    rank2_dim(case, h2, e, o)
}

/// A failed arithmetic identity between the rank-2 formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation {
    pub case: Rank2Case,
    pub h2: GradedDim,
    pub m: usize,
    pub n: usize,
    pub identity: &'static str,
    pub lhs: GradedDim,
    pub rhs: GradedDim,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} H2={} (m|n)=({}|{}): {} gives {} vs {}",
            self.case, self.h2, self.m, self.n, self.identity, self.lhs, self.rhs
        )
    }
}

/// Outcome of checking the rank-2 identities over a parameter range.
#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub checked: usize,
    pub violations: Vec<IdentityViolation>,
}

/// Checks `⊗² = ∧² + Γ(H/H²)` and `∧² − H² = M` for every printed rank-2
/// case and every `(m|n)` with `m + n ≤ max_total` where all three formulas
/// are defined.
pub fn check_rank2_identities(max_total: usize) -> IdentityReport {
    let mut report = IdentityReport::default();
    for case in Rank2Case::ALL {
        for &h2 in case.derived_kinds() {
            for m in 0..=max_total {
                for n in 0..=max_total - m {
                    let (Ok(t), Ok(e), Ok(mul)) = (
                        tensor2_gh_rank2(case, h2, m, n),
                        ext2_gh_rank2(case, h2, m, n),
                        multiplier_gh_rank2(case, h2, m, n),
                    ) else {
                        continue;
                    };
                    report.checked += 1;
                    let ab = GradedDim::new(m - h2.even, n - h2.odd);
                    let with_square = e + gamma_closed(ab.even, ab.odd);
                    if t != with_square {
                        report.violations.push(IdentityViolation {
                            case,
                            h2,
                            m,
                            n,
                            identity: "tensor2 = ext2 + gamma(H/H2)",
                            lhs: t,
                            rhs: with_square,
                        });
                    }
                    if e != mul + h2 {
                        report.violations.push(IdentityViolation {
                            case,
                            h2,
                            m,
                            n,
                            identity: "ext2 = multiplier + H2",
                            lhs: e,
                            rhs: mul + h2,
                        });
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gd(m: usize, n: usize) -> GradedDim {
        GradedDim::new(m, n)
    }

    const E: GradedDim = GradedDim { even: 2, odd: 0 };
    const M: GradedDim = GradedDim { even: 1, odd: 1 };
    const O: GradedDim = GradedDim { even: 0, odd: 2 };

    #[test]
    fn abelian_multiplier() {
        assert_eq!(multiplier_abelian(1, 0), Ok(gd(0, 0)));
        assert_eq!(multiplier_abelian(2, 0), Ok(gd(1, 0)));
        assert_eq!(multiplier_abelian(1, 1), Ok(gd(1, 1)));
    }

    #[test]
    fn heisenberg_multipliers() {
        assert_eq!(multiplier_heisenberg_even(1, 0), Ok(gd(2, 0)));
        assert_eq!(multiplier_heisenberg_even(0, 1), Ok(gd(0, 0)));
        assert_eq!(multiplier_heisenberg_even(2, 0), Ok(gd(5, 0)));
        assert_eq!(multiplier_heisenberg_odd(1), Ok(gd(1, 1)));
        assert_eq!(multiplier_heisenberg_odd(2), Ok(gd(4, 3)));
        assert_eq!(multiplier_heisenberg_odd(3), Ok(gd(9, 8)));
    }

    #[test]
    fn direct_sum_multiplier() {
        let h = multiplier_heisenberg_even(1, 0).unwrap();
        assert_eq!(multiplier_direct_sum(h, h, gd(2, 0), gd(2, 0)), gd(8, 0));
        let a = multiplier_abelian(1, 0).unwrap();
        assert_eq!(multiplier_direct_sum(h, a, gd(2, 0), gd(1, 0)), gd(4, 0));
        assert_eq!(multiplier_direct_sum(h, gd(0, 0), gd(2, 0), gd(0, 0)), h);
    }

    #[test]
    fn pair_multiplier() {
        assert_eq!(multiplier_pair_abelian(2, 0, 1, 0), Ok(gd(1, 0)));
        assert_eq!(multiplier_pair_abelian(2, 2, 2, 2), Ok(gd(4, 4)));
        assert_eq!(multiplier_pair_abelian(3, 2, 0, 0), Ok(gd(0, 0)));
        assert!(matches!(multiplier_pair_abelian(1, 0, 2, 0), Err(FormulaError::InvalidParams(_))));
    }

    #[test]
    fn rank2_multiplier_examples() {
        assert_eq!(multiplier_gh_rank2(Rank2Case::CenterIsDerived, E, 6, 0), Ok(gd(4, 0)));
        assert_eq!(multiplier_gh_rank2(Rank2Case::CenterIsDerived, O, 2, 4), Ok(gd(4, 2)));
        assert_eq!(multiplier_gh_rank2(Rank2Case::EvenLine, E, 6, 0), Ok(gd(6, 0)));
        assert_eq!(
            multiplier_gh_rank2(Rank2Case::EvenLine, O, 6, 4),
            Err(FormulaError::CaseUndefined { case: Rank2Case::EvenLine, h2: O })
        );
        assert_eq!(
            multiplier_gh_rank2(Rank2Case::CenterIsDerived, O, 1, 2),
            Err(FormulaError::CaseUndefined { case: Rank2Case::CenterIsDerived, h2: O })
        );
    }

    #[test]
    fn rank2_tensor_examples() {
        assert_eq!(tensor2_gh_rank2(Rank2Case::CenterIsDerived, E, 6, 0), Ok(gd(16, 0)));
        assert_eq!(tensor3_gh_rank2(Rank2Case::CenterIsDerived, E, 6, 0), Ok(gd(64, 0)));
        assert_eq!(tensor2_gh_rank2(Rank2Case::CenterIsDerived, M, 4, 2), Ok(gd(10, 6)));
    }

    #[test]
    fn rank1_tensor_and_exterior() {
        assert_eq!(tensor2_heisenberg_even(1, 0), Ok(gd(6, 0)));
        assert_eq!(tensor2_heisenberg_even(0, 1), Ok(gd(1, 0)));
        assert_eq!(tensor2_heisenberg_even(1, 1), Ok(gd(5, 4)));
        assert_eq!(tensor2_heisenberg_odd(1), Ok(gd(2, 3)));
        assert_eq!(ext2_heisenberg_even(1, 0), Ok(gd(3, 0)));
        assert_eq!(ext2_heisenberg_even(2, 1), Ok(gd(7, 4)));
        assert_eq!(ext2_heisenberg_odd(3), Ok(gd(9, 9)));
    }

    #[test]
    fn triple_products() {
        assert_eq!(triple_tensor_heisenberg_even(1, 0), Ok(gd(12, 0)));
        assert_eq!(triple_tensor_heisenberg_even(2, 0), Ok(gd(64, 0)));
        assert_eq!(triple_ext_heisenberg_even(1, 0), Ok(gd(2, 0)));
        assert_eq!(triple_tensor_heisenberg_odd(1), Ok(gd(5, 5)));
        assert_eq!(triple_tensor_heisenberg_odd(2), Ok(gd(16, 16)));
        assert_eq!(triple_ext_heisenberg_odd(2), Ok(gd(12, 12)));
    }

    #[test]
    fn bound_values() {
        assert_eq!(tensor_bound(3, 0, 1, 0), Ok(12));
        assert_eq!(tensor_bound(1, 2, 0, 1), Ok(12));
        assert_eq!(tensor_bound(2, 1, 2, 1), Ok(0));
        assert!(tensor_bound(2, 0, 0, 0).is_err());
    }

    #[test]
    fn gamma_closed_values() {
        assert_eq!(gamma_closed(2, 0), gd(3, 0));
        assert_eq!(gamma_closed(0, 2), gd(1, 0));
        assert_eq!(gamma_closed(1, 1), gd(1, 1));
        assert_eq!(gamma_closed(0, 0), gd(0, 0));
    }

    #[test]
    fn rank2_identities_hold() {
        let report = check_rank2_identities(20);
        assert!(report.checked > 100);
        let lines: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        assert!(lines.is_empty(), "{lines:#?}");
    }
}
