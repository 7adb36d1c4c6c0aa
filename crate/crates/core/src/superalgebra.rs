//! Finite-dimensional Lie superalgebras given by structure constants.
//!
//! Basis elements are parity-homogeneous and listed even-first; every
//! coordinate vector in the crate uses that order. Brackets are stored only
//! for index pairs `i <= j`; the opposite order is recovered through graded
//! skew-symmetry when read.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{self, axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    fn bit(self) -> u8 {
        self as u8
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self.bit() ^ rhs.bit() == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "even" | "0" => Ok(Parity::Even),
            "odd" | "1" => Ok(Parity::Odd),
            other => Err(format!("unknown parity `{other}`")),
        }
    }
}

/// Koszul sign `(-1)^{|a||b|}`.
pub fn koszul(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// Superdimension `(even | odd)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedDim {
    pub even: usize,
    pub odd: usize,
}

impl GradedDim {
    pub const ZERO: GradedDim = GradedDim { even: 0, odd: 0 };

    pub const fn new(even: usize, odd: usize) -> Self {
        GradedDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn is_zero(self) -> bool {
        self.total() == 0
    }

    pub fn checked_sub(self, rhs: GradedDim) -> Option<GradedDim> {
        Some(GradedDim::new(self.even.checked_sub(rhs.even)?, self.odd.checked_sub(rhs.odd)?))
    }

    /// Componentwise `self <= rhs`.
    pub fn fits_in(self, rhs: GradedDim) -> bool {
        self.even <= rhs.even && self.odd <= rhs.odd
    }

    pub fn of_parity(self, p: Parity) -> usize {
        match p {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }
}

impl Add for GradedDim {
    type Output = GradedDim;
    fn add(self, rhs: GradedDim) -> GradedDim {
        GradedDim::new(self.even + rhs.even, self.odd + rhs.odd)
    }
}

impl AddAssign for GradedDim {
    fn add_assign(&mut self, rhs: GradedDim) {
        *self = *self + rhs;
    }
}

/// Graded tensor product of dimensions.
impl Mul for GradedDim {
    type Output = GradedDim;
    fn mul(self, rhs: GradedDim) -> GradedDim {
        GradedDim::new(self.even * rhs.even + self.odd * rhs.odd, self.even * rhs.odd + self.odd * rhs.even)
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

impl FromStr for GradedDim {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = inner.split_once('|').ok_or_else(|| format!("expected (m|n), got `{s}`"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad dimension `{t}`: {e}"));
        Ok(GradedDim::new(parse(a)?, parse(b)?))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("bracket [{0}, {1}] given twice")]
    DuplicateBracket(String, String),
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("basis must list even elements before odd ones")]
    ParityOrder,
    #[error("subspace is not a graded ideal")]
    NotAnIdeal,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("derived subalgebra has dimension {0}, expected (1|0) or (0|1)")]
    DerivedDimNotOne(GradedDim),
    #[error("basis change is singular or not parity-homogeneous")]
    BadBasisChange,
}

/// Structure constants of a Lie superalgebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieSuperAlgebra {
    names: Vec<String>,
    parities: Vec<Parity>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

type SparseBracket = (usize, usize, Vec<(usize, Scalar)>);

/// Collects basis elements and brackets, then canonicalises them.
#[derive(Default, Clone, Debug)]
pub struct AlgebraBuilder {
    basis: Vec<(String, Parity)>,
    brackets: Vec<SparseBracket>,
}

impl AlgebraBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn element(&mut self, name: impl Into<String>, parity: Parity) -> usize {
        self.basis.push((name.into(), parity));
        self.basis.len() - 1
    }

    pub fn even(&mut self, name: impl Into<String>) -> usize {
        self.element(name, Parity::Even)
    }

    pub fn odd(&mut self, name: impl Into<String>) -> usize {
        self.element(name, Parity::Odd)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|(n, _)| n == name)
    }

    /// Declare `[e_i, e_j] = sum c_k e_k` using builder indices.
    pub fn bracket(&mut self, i: usize, j: usize, terms: Vec<(usize, Scalar)>) -> &mut Self {
        self.brackets.push((i, j, terms));
        self
    }

    pub fn bracket_named(&mut self, a: &str, b: &str, terms: &[(&str, Scalar)]) -> Result<&mut Self, AlgebraError> {
        let idx = |n: &str| self.index_of(n).ok_or_else(|| AlgebraError::UnknownName(n.to_string()));
        let (i, j) = (idx(a)?, idx(b)?);
        let terms = terms.iter().map(|(n, c)| Ok((idx(n)?, c.clone()))).collect::<Result<Vec<_>, AlgebraError>>()?;
        Ok(self.bracket(i, j, terms))
    }

    /// Reorders the basis even-first (stably) and stores brackets for `i <= j`.
    pub fn build(&self) -> Result<LieSuperAlgebra, AlgebraError> {
        let mut seen = HashSet::new();
        for (n, _) in &self.basis {
            if !seen.insert(n.as_str()) {
                return Err(AlgebraError::DuplicateName(n.clone()));
            }
        }
        let mut order: Vec<usize> = (0..self.basis.len()).collect();
        order.sort_by_key(|&k| self.basis[k].1);
        let mut new_index = vec![0; self.basis.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let names = order.iter().map(|&k| self.basis[k].0.clone()).collect();
        let parities: Vec<Parity> = order.iter().map(|&k| self.basis[k].1).collect();
        let d = parities.len();

        let mut brackets = BTreeMap::new();
        for (i, j, terms) in &self.brackets {
            for &k in [i, j].into_iter().chain(terms.iter().map(|(k, _)| k)) {
                if k >= d {
                    return Err(AlgebraError::IndexOutOfRange(k));
                }
            }
            let (mut a, mut b) = (new_index[*i], new_index[*j]);
            let mut sign = Scalar::one();
            if a > b {
                std::mem::swap(&mut a, &mut b);
                sign = linalg::scalar(-koszul(parities[a], parities[b]));
            }
            let mut dense = zero_vec(d);
            for (k, c) in terms {
                dense[new_index[*k]] += c * &sign;
            }
            let sparse: Vec<(usize, Scalar)> =
                dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            if brackets.insert((a, b), sparse).is_some() {
                let nm = |k: usize| self.basis[order[k]].0.clone();
                return Err(AlgebraError::DuplicateBracket(nm(a), nm(b)));
            }
        }
        brackets.retain(|_, v: &mut Vec<(usize, Scalar)>| !v.is_empty());
        Ok(LieSuperAlgebra { names, parities, brackets })
    }
}

/// Instance of a violated axiom, reported with basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `[e_i, e_j]` has a component of the wrong parity.
    Grading { i: usize, j: usize, k: usize },
    /// `[e_i, e_i]` must vanish for even `e_i`.
    SkewSymmetry { i: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, l: &LieSuperAlgebra) -> Vec<String> {
        let n = |k: usize| l.names[k].as_str();
        self.violations
            .iter()
            .map(|v| match *v {
                Violation::Grading { i, j, k } => {
                    format!("grading: [{}, {}] has a component along {} of the wrong parity", n(i), n(j), n(k))
                }
                Violation::SkewSymmetry { i } => format!("skew-symmetry: [{0}, {0}] must vanish for even {0}", n(i)),
                Violation::Jacobi { i, j, k } => format!("Jacobi identity fails on ({}, {}, {})", n(i), n(j), n(k)),
            })
            .collect()
    }
}

/// A graded ideal, stored as a subspace of the coordinate space of its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSubspace {
    space: Subspace,
    dim: GradedDim,
}

impl IdealSubspace {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> GradedDim {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(v)
    }

    pub fn is_subset_of(&self, other: &IdealSubspace) -> bool {
        other.space.contains_subspace(&self.space)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    Class(usize),
    NotNilpotent,
}

impl Nilpotency {
    pub fn class(self) -> Option<usize> {
        match self {
            Nilpotency::Class(k) => Some(k),
            Nilpotency::NotNilpotent => None,
        }
    }
}

impl LieSuperAlgebra {
    pub fn builder() -> AlgebraBuilder {
        AlgebraBuilder::new()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn dim(&self) -> GradedDim {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        GradedDim::new(self.len() - odd, odd)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Stored brackets `[e_i, e_j]` with `i <= j`, nonzero only.
    pub fn stored_brackets(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Scalar)])> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    /// `[e_i, e_j]` as sparse `(index, coefficient)` pairs.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        if i <= j {
            self.brackets.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            let sign = linalg::scalar(-koszul(self.parities[i], self.parities[j]));
            self.brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, c * &sign)).collect())
                .unwrap_or_default()
        }
    }

    pub fn bracket_coords(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = zero_vec(self.len());
        for (k, c) in self.bracket_basis(i, j) {
            out[k] = c;
        }
        out
    }

    /// Bilinear extension of the bracket to arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.len());
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j) {
                    out[k] += &ab * c;
                }
            }
        }
        out
    }

    /// Parity of a homogeneous nonzero vector.
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<Parity> {
        let mut found = None;
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                match found {
                    None => found = Some(self.parities[k]),
                    Some(p) if p != self.parities[k] => return None,
                    _ => {}
                }
            }
        }
        found
    }

    pub fn check_axioms(&self) -> ValidationReport {
        let d = self.len();
        let mut violations = Vec::new();
        for (&(i, j), terms) in &self.brackets {
            let want = self.parities[i] + self.parities[j];
            for (k, _) in terms {
                if self.parities[*k] != want {
                    violations.push(Violation::Grading { i, j, k: *k });
                }
            }
            if i == j && self.parities[i] == Parity::Even {
                violations.push(Violation::SkewSymmetry { i });
            }
        }
        let p = &self.parities;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]
                    let mut total = zero_vec(d);
                    let terms = [
                        (koszul(p[i], p[k]), i, self.bracket_coords(j, k)),
                        (koszul(p[j], p[i]), j, self.bracket_coords(k, i)),
                        (koszul(p[k], p[j]), k, self.bracket_coords(i, j)),
                    ];
                    for (s, outer, inner) in terms {
                        let v = self.bracket(&unit_vec(d, outer), &inner);
                        axpy(&mut total, &linalg::scalar(s), &v);
                    }
                    if !is_zero_vec(&total) {
                        violations.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Wrap a subspace as an ideal record (graded dims taken from the pivots).
    fn ideal(&self, space: Subspace) -> IdealSubspace {
        let dim = space.graded_dim(&self.parities);
        IdealSubspace { space, dim }
    }

    pub fn zero_ideal(&self) -> IdealSubspace {
        self.ideal(Subspace::zero(self.len()))
    }

    pub fn whole(&self) -> IdealSubspace {
        self.ideal(Subspace::full(self.len()))
    }

    /// Checks that `space` is graded and closed under bracketing with `L`.
    pub fn as_ideal(&self, space: Subspace) -> Result<IdealSubspace, AlgebraError> {
        if space.ambient_dim() != self.len() {
            return Err(AlgebraError::NotAnIdeal);
        }
        let rows = space.basis_vectors();
        if rows.iter().any(|r| self.vector_parity(r).is_none()) {
            return Err(AlgebraError::NotAnIdeal);
        }
        for r in &rows {
            for j in 0..self.len() {
                if !space.contains(&self.bracket(r, &unit_vec(self.len(), j))) {
                    return Err(AlgebraError::NotAnIdeal);
                }
            }
        }
        Ok(self.ideal(space))
    }

    /// `[A, L]` for a subspace `A`.
    fn bracket_with_all(&self, a: &Subspace) -> Subspace {
        let d = self.len();
        let rows = a.basis_vectors();
        let vectors = rows.iter().flat_map(|r| (0..d).map(move |j| (r, j))).map(|(r, j)| self.bracket(r, &unit_vec(d, j)));
        linalg::span(vectors, d)
    }

    pub fn derived_subalgebra(&self) -> IdealSubspace {
        let d = self.len();
        let vectors = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).map(|(i, j)| self.bracket_coords(i, j));
        self.ideal(linalg::span(vectors, d))
    }

    /// Kernel of `x -> ([x, e_1], ..., [x, e_d])`.
    pub fn center(&self) -> IdealSubspace {
        let d = self.len();
        let mut m = Matrix::zeros(d * d, d);
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.bracket_basis(i, j) {
                    m[(j * d + k, i)] = c;
                }
            }
        }
        self.ideal(linalg::kernel(&m))
    }

    /// `L^1 = L, L^{k+1} = [L^k, L]`, stopping before the first repeated term.
    pub fn lower_central_series(&self) -> Vec<IdealSubspace> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("series is never empty");
            let next = self.ideal(self.bracket_with_all(last.space()));
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// The zero algebra is given class 1 by convention.
    pub fn nilpotency_class(&self) -> Nilpotency {
        let series = self.lower_central_series();
        let last = series.last().expect("series is never empty");
        if !last.is_zero() {
            Nilpotency::NotNilpotent
        } else {
            Nilpotency::Class((series.len() - 1).max(1))
        }
    }

    /// Quotient by a graded ideal. Coset representatives are the basis
    /// elements at the non-pivot columns of the ideal's echelon basis.
    pub fn quotient(&self, ideal: &IdealSubspace) -> Result<LieSuperAlgebra, AlgebraError> {
        let ideal = self.as_ideal(ideal.space().clone())?;
        let reps = ideal.space().free_cols();
        let mut builder = AlgebraBuilder::new();
        for &r in &reps {
            builder.element(self.names[r].clone(), self.parities[r]);
        }
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate().skip(a) {
                let rem = ideal.space().reduce(&self.bracket_coords(ra, rb));
                let terms: Vec<(usize, Scalar)> = reps
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| !rem[r].is_zero())
                    .map(|(c, &r)| (c, rem[r].clone()))
                    .collect();
                if !terms.is_empty() {
                    builder.bracket(a, b, terms);
                }
            }
        }
        builder.build()
    }

    /// Direct sum with brackets across the summands vanishing. Names from
    /// `other` that collide get primes appended.
    pub fn direct_sum(&self, other: &LieSuperAlgebra) -> LieSuperAlgebra {
        let mut taken: HashSet<String> = self.names.iter().cloned().collect();
        let other_names: Vec<String> = other
            .names
            .iter()
            .map(|n| {
                let mut name = n.clone();
                while taken.contains(&name) {
                    name.push('\'');
                }
                taken.insert(name.clone());
                name
            })
            .collect();
        let mut builder = AlgebraBuilder::new();
        let left: Vec<usize> = (0..self.len()).map(|i| builder.element(self.names[i].clone(), self.parities[i])).collect();
        let right: Vec<usize> =
            (0..other.len()).map(|i| builder.element(other_names[i].clone(), other.parities[i])).collect();
        for (alg, map) in [(self, &left), (other, &right)] {
            for (i, j, terms) in alg.stored_brackets() {
                builder.bracket(map[i], map[j], terms.iter().map(|(k, c)| (map[*k], c.clone())).collect());
            }
        }
        builder.build().expect("direct sum of valid algebras is well formed")
    }

    /// `Some(dim Z(L))` when `L' = Z(L)`.
    pub fn generalized_heisenberg_rank(&self) -> Option<GradedDim> {
        let derived = self.derived_subalgebra();
        let center = self.center();
        (derived == center).then(|| center.dim())
    }

    /// Re-express the algebra in the basis given by the rows of `basis`
    /// (coordinates in the old basis). Rows must be parity-homogeneous and
    /// listed even-first.
    pub fn change_basis(&self, basis: &Matrix, names: Option<Vec<String>>) -> Result<LieSuperAlgebra, AlgebraError> {
        let d = self.len();
        if basis.rows() != d || basis.cols() != d {
            return Err(AlgebraError::BadBasisChange);
        }
        let inv = basis.inverse().ok_or(AlgebraError::BadBasisChange)?;
        let rows = basis.row_vecs();
        let parities = rows.iter().map(|r| self.vector_parity(r)).collect::<Option<Vec<_>>>().ok_or(AlgebraError::BadBasisChange)?;
        if parities.windows(2).any(|w| w[0] > w[1]) {
            return Err(AlgebraError::ParityOrder);
        }
        let names = names.unwrap_or_else(|| (1..=d).map(|k| format!("f{k}")).collect());
        let mut builder = AlgebraBuilder::new();
        for (n, p) in names.into_iter().zip(&parities) {
            builder.element(n, *p);
        }
        for a in 0..d {
            for b in a..d {
                let coords = inv.apply_left(&self.bracket(&rows[a], &rows[b]));
                let terms: Vec<(usize, Scalar)> =
                    coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !terms.is_empty() {
                    builder.bracket(a, b, terms);
                }
            }
        }
        builder.build()
    }

    /// Identify `L` with `H(m,n) ⊕ A` or `H_m ⊕ A` when `dim L' = 1`.
    pub fn recognize_derived_dim_one(&self) -> Result<DecompositionReport, AlgebraError> {
        let derived = self.derived_subalgebra();
        let dd = derived.dim();
        if dd.total() != 1 {
            return Err(AlgebraError::DerivedDimNotOne(dd));
        }
        if self.nilpotency_class() == Nilpotency::NotNilpotent {
            return Err(AlgebraError::NotNilpotent);
        }
        let z = derived.space().basis().row(0).to_vec();
        let anchor = z.iter().position(|c| !c.is_zero()).expect("nonzero generator");
        let form = BracketForm { alg: self, anchor, z_anchor: z[anchor].clone() };
        if dd.even == 1 {
            Ok(recognize_even_center(self, &form, z))
        } else {
            Ok(recognize_odd_center(self, &form, z))
        }
    }
}

/// `B(x, y)` with `[x, y] = B(x, y) z` when `L' = span{z}`.
struct BracketForm<'a> {
    alg: &'a LieSuperAlgebra,
    anchor: usize,
    z_anchor: Scalar,
}

impl BracketForm<'_> {
    fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        &self.alg.bracket(x, y)[self.anchor] / &self.z_anchor
    }
}

fn scaled(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

/// Pick vectors from `pool` that extend `start` to a basis of their joint span.
fn extend_basis(start: Vec<Vec<Scalar>>, pool: Vec<Vec<Scalar>>, d: usize) -> Vec<Vec<Scalar>> {
    let mut eb = linalg::EchelonBasis::new(d);
    let mut out = Vec::new();
    for v in start.into_iter().chain(pool) {
        if eb.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

fn recognize_even_center(alg: &LieSuperAlgebra, form: &BracketForm<'_>, z: Vec<Scalar>) -> DecompositionReport {
    let d = alg.len();
    let dim = alg.dim();

    // Symplectic reduction of the antisymmetric form on the even part.
    let mut rest: Vec<Vec<Scalar>> = (0..dim.even).map(|k| unit_vec(d, k)).collect();
    let mut pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    'outer: loop {
        for a in 0..rest.len() {
            for b in a + 1..rest.len() {
                let bv = form.eval(&rest[a], &rest[b]);
                if bv.is_zero() {
                    continue;
                }
                let v = scaled(&rest[b], &bv.recip());
                let u = rest[a].clone();
                rest.remove(b);
                rest.remove(a);
                for w in rest.iter_mut() {
                    let wu = form.eval(w, &u);
                    let wv = form.eval(w, &v);
                    axpy(w, &wu, &v);
                    axpy(w, &-wv, &u);
                }
                pairs.push((u, v));
                continue 'outer;
            }
        }
        break;
    }

    // Orthogonal diagonalisation of the symmetric form on the odd part.
    let mut rest_odd: Vec<Vec<Scalar>> = (dim.even..d).map(|k| unit_vec(d, k)).collect();
    let mut diag: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    loop {
        let pick = rest_odd.iter().position(|w| !form.eval(w, w).is_zero()).or_else(|| {
            let n = rest_odd.len();
            let (a, b) = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).find(|&(a, b)| {
                !form.eval(&rest_odd[a], &rest_odd[b]).is_zero()
            })?;
            let sum: Vec<Scalar> = rest_odd[a].iter().zip(&rest_odd[b]).map(|(x, y)| x + y).collect();
            rest_odd[a] = sum;
            Some(a)
        });
        let Some(k) = pick else { break };
        let w = rest_odd.remove(k);
        let dw = form.eval(&w, &w);
        for x in rest_odd.iter_mut() {
            let c = -(form.eval(x, &w) / &dw);
            axpy(x, &c, &w);
        }
        diag.push((w, dw));
    }

    let m = pairs.len();
    let n = diag.len();
    let abelian = GradedDim::new(dim.even - 2 * m - 1, dim.odd - n);

    // z' = c z with c the first diagonal entry; every d_j / c must be a square.
    let c = diag.first().map_or_else(Scalar::one, |(_, dw)| dw.clone());
    let roots: Option<Vec<Scalar>> = diag.iter().map(|(_, dw)| linalg::rational_sqrt(&(dw / &c))).collect();
    let (basis, basis_omitted) = match roots {
        None => (None, Some(BasisOmitted::IrrationalScaling)),
        Some(roots) => {
            let mut rows: Vec<Vec<Scalar>> = pairs.iter().map(|(u, _)| u.clone()).collect();
            rows.extend(pairs.iter().map(|(_, v)| scaled(v, &c)));
            let zc = scaled(&z, &c);
            let radical = extend_basis(vec![zc.clone()], rest, d);
            rows.extend(radical);
            rows.extend(diag.iter().zip(&roots).map(|((w, _), r)| scaled(w, &r.recip())));
            rows.extend(extend_basis(Vec::new(), rest_odd, d));
            (Some(Matrix::from_rows(d, &rows).expect("rows have length d")), None)
        }
    };
    DecompositionReport { kind: HeisenbergKind::EvenCenter { m, n }, abelian, basis, basis_omitted }
}

fn recognize_odd_center(alg: &LieSuperAlgebra, form: &BracketForm<'_>, z: Vec<Scalar>) -> DecompositionReport {
    let d = alg.len();
    let dim = alg.dim();
    let mut evens: Vec<Vec<Scalar>> = (0..dim.even).map(|k| unit_vec(d, k)).collect();
    let mut odds: Vec<Vec<Scalar>> = (dim.even..d).map(|k| unit_vec(d, k)).collect();
    let mut pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    'outer: loop {
        for a in 0..evens.len() {
            for b in 0..odds.len() {
                let bv = form.eval(&evens[a], &odds[b]);
                if bv.is_zero() {
                    continue;
                }
                let x = evens.remove(a);
                let y = scaled(&odds.remove(b), &bv.recip());
                for e in evens.iter_mut() {
                    let c = -form.eval(e, &y);
                    axpy(e, &c, &x);
                }
                for o in odds.iter_mut() {
                    let c = -form.eval(&x, o);
                    axpy(o, &c, &y);
                }
                pairs.push((x, y));
                continue 'outer;
            }
        }
        break;
    }
    let m = pairs.len();
    let abelian = GradedDim::new(dim.even - m, dim.odd - m - 1);
    let mut rows: Vec<Vec<Scalar>> = pairs.iter().map(|(x, _)| x.clone()).collect();
    rows.extend(extend_basis(Vec::new(), evens, d));
    rows.extend(pairs.iter().map(|(_, y)| y.clone()));
    rows.extend(extend_basis(vec![z], odds, d));
    let basis = Matrix::from_rows(d, &rows).expect("rows have length d");
    DecompositionReport { kind: HeisenbergKind::OddCenter { m }, abelian, basis: Some(basis), basis_omitted: None }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeisenbergKind {
    /// `H(m, n)`, even center.
    EvenCenter { m: usize, n: usize },
    /// `H_m`, odd center.
    OddCenter { m: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisOmitted {
    /// Normalising the odd symmetric form needs square roots outside Q.
    IrrationalScaling,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub kind: HeisenbergKind,
    pub abelian: GradedDim,
    /// Rows are the new basis in old coordinates, ordered like the catalog
    /// direct sum `H ⊕ A`.
    pub basis: Option<Matrix>,
    pub basis_omitted: Option<BasisOmitted>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::scalar;

    fn non_nilpotent() -> LieSuperAlgebra {
        let mut b = AlgebraBuilder::new();
        b.even("e1");
        b.even("e2");
        b.bracket_named("e1", "e2", &[("e2", scalar(1))]).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn parity_addition_is_mod_two() {
        use Parity::*;
        assert_eq!(Even + Even, Even);
        assert_eq!(Even + Odd, Odd);
        assert_eq!(Odd + Odd, Even);
    }

    #[test]
    fn graded_dim_tensor_and_parse() {
        assert_eq!(GradedDim::new(2, 3) * GradedDim::new(1, 1), GradedDim::new(5, 5));
        assert_eq!("(6|0)".parse::<GradedDim>().unwrap(), GradedDim::new(6, 0));
        assert_eq!(GradedDim::new(1, 0).checked_sub(GradedDim::new(0, 1)), None);
    }

    #[test]
    fn builder_reorders_even_first_and_applies_skew_sign() {
        let mut b = AlgebraBuilder::new();
        b.odd("y");
        b.even("x");
        b.odd("z");
        b.bracket_named("y", "x", &[("z", scalar(1))]).unwrap();
        let l = b.build().unwrap();
        assert_eq!(l.names(), ["x", "y", "z"]);
        // [y, x] = z  =>  [x, y] = -z
        assert_eq!(l.bracket_basis(0, 1), vec![(2, scalar(-1))]);
        assert!(l.check_axioms().is_ok());
    }

    #[test]
    fn duplicate_names_rejected() {
        let mut b = AlgebraBuilder::new();
        b.even("x");
        b.odd("x");
        assert_eq!(b.build(), Err(AlgebraError::DuplicateName("x".into())));
    }

    #[test]
    fn axioms_of_catalog_examples() {
        assert!(catalog::abelian(2, 1).check_axioms().is_ok());
        assert!(catalog::heisenberg_even(1, 0).unwrap().check_axioms().is_ok());
    }

    #[test]
    fn grading_violation_when_center_parity_flipped() {
        let mut b = AlgebraBuilder::new();
        b.even("x1");
        b.even("x2");
        b.odd("z");
        b.bracket_named("x1", "x2", &[("z", scalar(1))]).unwrap();
        let report = b.build().unwrap().check_axioms();
        assert!(report.violations.contains(&Violation::Grading { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [a,b]=b, [a,c]=c, [b,c]=a breaks Jacobi.
        let mut b = AlgebraBuilder::new();
        for n in ["a", "b", "c"] {
            b.even(n);
        }
        b.bracket_named("a", "b", &[("b", scalar(1))]).unwrap();
        b.bracket_named("a", "c", &[("c", scalar(1))]).unwrap();
        b.bracket_named("b", "c", &[("a", scalar(1))]).unwrap();
        let report = b.build().unwrap().check_axioms();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::Jacobi { .. })));
    }

    #[test]
    fn derived_examples() {
        assert!(catalog::abelian(2, 2).derived_subalgebra().is_zero());
        let h = catalog::heisenberg_even(1, 0).unwrap();
        let der = h.derived_subalgebra();
        assert_eq!(der.dim(), GradedDim::new(1, 0));
        assert!(der.contains(&unit_vec(3, 2)));
        let s = h.direct_sum(&catalog::heisenberg_odd(1).unwrap());
        assert_eq!(s.derived_subalgebra().dim(), GradedDim::new(1, 1));
    }

    #[test]
    fn center_examples() {
        assert_eq!(catalog::abelian(2, 3).center().dim(), GradedDim::new(2, 3));
        let h1 = catalog::heisenberg_odd(1).unwrap();
        let c = h1.center();
        assert_eq!(c.dim(), GradedDim::new(0, 1));
        assert!(c.contains(&unit_vec(3, h1.index_of("z").unwrap())));
        let f = catalog::free_nilpotent2_quotient(3, 0, GradedDim::new(2, 0), 7).unwrap();
        assert_eq!(f.center().dim(), GradedDim::new(2, 0));
    }

    #[test]
    fn lower_central_series_examples() {
        let a = catalog::abelian(2, 1);
        let s = a.lower_central_series();
        assert_eq!(s.len(), 2);
        assert!(s[1].is_zero());
        let h = catalog::heisenberg_even(2, 1).unwrap();
        let dims: Vec<GradedDim> = h.lower_central_series().iter().map(|i| i.dim()).collect();
        assert_eq!(dims, vec![GradedDim::new(5, 1), GradedDim::new(1, 0), GradedDim::ZERO]);
        let nn = non_nilpotent().lower_central_series();
        assert_eq!(nn.len(), 2);
        assert_eq!(nn[1].dim(), GradedDim::new(1, 0));
        assert!(nn[1].contains(&unit_vec(2, 1)));
    }

    #[test]
    fn nilpotency_examples() {
        assert_eq!(catalog::abelian(1, 0).nilpotency_class(), Nilpotency::Class(1));
        assert_eq!(catalog::abelian(0, 0).nilpotency_class(), Nilpotency::Class(1));
        assert_eq!(catalog::heisenberg_odd(3).unwrap().nilpotency_class(), Nilpotency::Class(2));
        assert_eq!(non_nilpotent().nilpotency_class(), Nilpotency::NotNilpotent);
    }

    #[test]
    fn quotient_examples() {
        let h = catalog::heisenberg_even(1, 0).unwrap();
        assert_eq!(h.quotient(&h.zero_ideal()).unwrap(), h);
        let q = h.quotient(&h.derived_subalgebra()).unwrap();
        assert_eq!(q.dim(), GradedDim::new(2, 0));
        assert!(q.is_abelian());
        let h1 = catalog::heisenberg_odd(1).unwrap();
        let q1 = h1.quotient(&h1.derived_subalgebra()).unwrap();
        assert_eq!(q1.dim(), GradedDim::new(1, 1));
        assert!(q1.is_abelian());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let h = catalog::heisenberg_even(1, 0).unwrap();
        let x1 = linalg::span(vec![unit_vec(3, 0)], 3);
        assert_eq!(h.as_ideal(x1), Err(AlgebraError::NotAnIdeal));
    }

    #[test]
    fn direct_sum_examples() {
        let s = catalog::abelian(1, 0).direct_sum(&catalog::abelian(0, 1));
        assert_eq!(s.dim(), GradedDim::new(1, 1));
        assert!(s.is_abelian());
        let h = catalog::heisenberg_even(1, 0).unwrap();
        let ha = h.direct_sum(&catalog::abelian(2, 0));
        assert_eq!(ha.derived_subalgebra().dim(), GradedDim::new(1, 0));
        assert_eq!(ha.center().dim(), GradedDim::new(3, 0));
        let hh = h.direct_sum(&h);
        assert_eq!(hh.derived_subalgebra().dim(), GradedDim::new(2, 0));
        assert_eq!(hh.center().dim(), GradedDim::new(2, 0));
        assert!(hh.check_axioms().is_ok());
    }

    #[test]
    fn gh_rank_examples() {
        assert_eq!(catalog::heisenberg_even(2, 1).unwrap().generalized_heisenberg_rank(), Some(GradedDim::new(1, 0)));
        assert_eq!(catalog::heisenberg_odd(2).unwrap().generalized_heisenberg_rank(), Some(GradedDim::new(0, 1)));
        let ha = catalog::heisenberg_even(1, 0).unwrap().direct_sum(&catalog::abelian(1, 0));
        assert_eq!(ha.generalized_heisenberg_rank(), None);
    }

    fn assert_recognized(l: &LieSuperAlgebra, kind: HeisenbergKind, abelian: GradedDim) {
        let r = l.recognize_derived_dim_one().unwrap();
        assert_eq!(r.kind, kind);
        assert_eq!(r.abelian, abelian);
        if let Some(basis) = &r.basis {
            let target = match kind {
                HeisenbergKind::EvenCenter { m, n } => catalog::heisenberg_even(m, n).unwrap(),
                HeisenbergKind::OddCenter { m } => catalog::heisenberg_odd(m).unwrap(),
            }
            .direct_sum(&catalog::abelian(abelian.even, abelian.odd));
            let changed = l.change_basis(basis, Some(target.names().to_vec())).unwrap();
            assert_eq!(changed, target);
        }
    }

    #[test]
    fn recognizer_inverts_constructions() {
        let l = catalog::heisenberg_even(1, 0).unwrap().direct_sum(&catalog::abelian(2, 1));
        assert_recognized(&l, HeisenbergKind::EvenCenter { m: 1, n: 0 }, GradedDim::new(2, 1));
        let l = catalog::heisenberg_odd(2).unwrap().direct_sum(&catalog::abelian(0, 1));
        assert_recognized(&l, HeisenbergKind::OddCenter { m: 2 }, GradedDim::new(0, 1));
    }

    #[test]
    fn recognizer_after_basis_change() {
        let h = catalog::heisenberg_even(1, 1).unwrap();
        // even block on (x1, x2, z), odd block on y1
        let p = Matrix::from_i64(&[&[1, 2, 0, 0], &[0, 1, 1, 0], &[1, 0, 3, 0], &[0, 0, 0, 2]]);
        let l = h.change_basis(&p, None).unwrap();
        assert!(l.check_axioms().is_ok());
        let r = l.recognize_derived_dim_one().unwrap();
        assert_eq!(r.kind, HeisenbergKind::EvenCenter { m: 1, n: 1 });
        assert_recognized(&l, HeisenbergKind::EvenCenter { m: 1, n: 1 }, GradedDim::ZERO);
    }

    #[test]
    fn recognizer_flags_irrational_scaling() {
        // [y1,y1] = z, [y2,y2] = 2z: normalising needs sqrt(2).
        let mut b = AlgebraBuilder::new();
        b.even("z");
        b.odd("y1");
        b.odd("y2");
        b.bracket_named("y1", "y1", &[("z", scalar(1))]).unwrap();
        b.bracket_named("y2", "y2", &[("z", scalar(2))]).unwrap();
        let r = b.build().unwrap().recognize_derived_dim_one().unwrap();
        assert_eq!(r.kind, HeisenbergKind::EvenCenter { m: 0, n: 2 });
        assert_eq!(r.basis_omitted, Some(BasisOmitted::IrrationalScaling));
        assert!(r.basis.is_none());
    }

    #[test]
    fn recognizer_errors() {
        assert_eq!(
            catalog::abelian(2, 0).recognize_derived_dim_one(),
            Err(AlgebraError::DerivedDimNotOne(GradedDim::ZERO))
        );
        assert_eq!(non_nilpotent().recognize_derived_dim_one(), Err(AlgebraError::NotNilpotent));
    }
}
