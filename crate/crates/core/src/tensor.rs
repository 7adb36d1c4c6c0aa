//! Non-abelian tensor square, square submodule, exterior square and the
//! universal quadratic functor, each as a finite presentation over ℚ.
//!
//! Every space here is a quotient of a free vector space on a finite set of
//! symbols by the span of explicit relation vectors. Dimensions come from
//! exact rank computations, so the results are certificates rather than
//! estimates. The tensor square is only built for nilpotency class at most
//! two, where the presented Lie superalgebra is abelian and spanned by the
//! symbols `e_i ⊗ e_j`.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{self, scalar, unit_vec, zero_vec, EchelonBasis, Matrix, Scalar, Subspace};
use crate::superalgebra::{koszul, GradedDim, IdealSubspace, LieSuperAlgebra, Nilpotency, Parity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("nilpotency class {class} exceeds 2; the tensor square is only presented for class at most 2")]
    ClassTooHigh { class: usize },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("negative dimension: {minuend} - {subtrahend}")]
    NegativeDim { minuend: GradedDim, subtrahend: GradedDim },
    #[error("operation needs a non-abelian algebra")]
    AbelianInput,
}

fn require_class2(l: &LieSuperAlgebra) -> Result<(), TensorError> {
    match l.nilpotency_class() {
        Nilpotency::Class(c) if c <= 2 => Ok(()),
        Nilpotency::Class(c) => Err(TensorError::ClassTooHigh { class: c }),
        Nilpotency::NotNilpotent => Err(TensorError::NotNilpotent),
    }
}

/// The generator `e_left ⊗ e_right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorSymbol {
    pub left: usize,
    pub right: usize,
    pub parity: Parity,
}

impl TensorSymbol {
    pub fn label(&self, l: &LieSuperAlgebra, op: &str) -> String {
        format!("{}{op}{}", l.name(self.left), l.name(self.right))
    }
}

/// Free vector space on `symbols` modulo `relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedSpace<S> {
    symbols: Vec<S>,
    parities: Vec<Parity>,
    relations: Subspace,
}

impl<S> PresentedSpace<S> {
    pub fn new(symbols: Vec<S>, parities: Vec<Parity>, relations: Subspace) -> Self {
        assert_eq!(symbols.len(), parities.len());
        assert_eq!(symbols.len(), relations.ambient_dim());
        PresentedSpace { symbols, parities, relations }
    }

    pub fn symbols(&self) -> &[S] {
        &self.symbols
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn symbol_dim(&self) -> GradedDim {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        GradedDim::new(self.parities.len() - odd, odd)
    }

    pub fn quotient_dim(&self) -> GradedDim {
        let rel = self.relations.graded_dim(&self.parities);
        self.symbol_dim().checked_sub(rel).expect("relations cannot exceed symbols")
    }

    /// Indices of the symbols used as coset representatives.
    pub fn basis_indices(&self) -> Vec<usize> {
        self.relations.free_cols()
    }

    pub fn quotient_basis(&self) -> Vec<&S> {
        self.basis_indices().into_iter().map(|i| &self.symbols[i]).collect()
    }

    /// Canonical representative of the class of `v`, supported on the basis indices.
    pub fn normal_form(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.relations.reduce(v)
    }

    pub fn is_zero_class(&self, v: &[Scalar]) -> bool {
        self.relations.contains(v)
    }
}

fn tensor_symbols(l: &LieSuperAlgebra) -> (Vec<TensorSymbol>, Vec<Parity>) {
    let d = l.len();
    let symbols: Vec<TensorSymbol> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| TensorSymbol { left: i, right: j, parity: l.parity(i) + l.parity(j) })
        .collect();
    let parities = symbols.iter().map(|s| s.parity).collect();
    (symbols, parities)
}

/// Adds `c · [e_a, e_b] ⊗ e_k` (or `e_k ⊗ [e_a, e_b]` when `bracket_left` is
/// false) into `v`.
fn add_bracket_term(l: &LieSuperAlgebra, v: &mut [Scalar], c: i64, a: usize, b: usize, k: usize, bracket_left: bool) {
    let d = l.len();
    for (t, coeff) in l.bracket_basis(a, b) {
        let idx = if bracket_left { t * d + k } else { k * d + t };
        v[idx] += coeff * scalar(c);
    }
}

fn add_symbol(v: &mut [Scalar], d: usize, c: i64, i: usize, j: usize) {
    v[i * d + j] += scalar(c);
}

fn assert_homogeneous(v: &[Scalar], parities: &[Parity]) {
    let mut seen: Option<Parity> = None;
    for (x, &p) in v.iter().zip(parities) {
        if !x.is_zero() {
            match seen {
                None => seen = Some(p),
                Some(q) => assert_eq!(p, q, "relation vector mixes parities"),
            }
        }
    }
}

/// The two action relations for the basis triple `(i, j, k)`.
fn triple_relations(l: &LieSuperAlgebra, i: usize, j: usize, k: usize) -> [Vec<Scalar>; 2] {
    let d = l.len();
    let (pi, pj, pk) = (l.parity(i), l.parity(j), l.parity(k));

    // [e_i,e_j]⊗e_k − e_i⊗[e_j,e_k] + (−1)^{|i||j|} e_j⊗[e_i,e_k]
    let mut a = zero_vec(d * d);
    add_bracket_term(l, &mut a, 1, i, j, k, true);
    add_bracket_term(l, &mut a, -1, j, k, i, false);
    add_bracket_term(l, &mut a, koszul(pi, pj), i, k, j, false);

    // e_i⊗[e_j,e_k] − (−1)^{|k|(|i|+|j|)} [e_k,e_i]⊗e_j + (−1)^{|i||j|} [e_j,e_i]⊗e_k
    let mut b = zero_vec(d * d);
    add_bracket_term(l, &mut b, 1, j, k, i, false);
    add_bracket_term(l, &mut b, -koszul(pk, pi + pj), k, i, j, true);
    add_bracket_term(l, &mut b, koszul(pi, pj), j, i, k, true);

    [a, b]
}

/// `L ⊗ L` with relation instances generated over all ordered basis triples.
pub fn tensor_square(l: &LieSuperAlgebra) -> Result<PresentedSpace<TensorSymbol>, TensorError> {
    let d = l.len();
    let triples: Vec<(usize, usize, usize)> =
        (0..d).flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k)))).collect();
    tensor_square_ordered(l, &triples)
}

/// `L ⊗ L` with relation instances generated for the given triples, in order.
/// Any ordering of all `d³` triples yields the same space.
pub fn tensor_square_ordered(
    l: &LieSuperAlgebra,
    triples: &[(usize, usize, usize)],
) -> Result<PresentedSpace<TensorSymbol>, TensorError> {
    require_class2(l)?;
    let (symbols, parities) = tensor_symbols(l);
    let mut eb = EchelonBasis::new(symbols.len());
    if !l.is_abelian() {
        for &(i, j, k) in triples {
            for rel in triple_relations(l, i, j, k) {
                assert_homogeneous(&rel, &parities);
                eb.insert(rel);
            }
        }
    }
    Ok(PresentedSpace::new(symbols, parities, eb.into_subspace()))
}

/// Generators of the square submodule in symbol coordinates:
/// `e_i⊗e_j + (−1)^{|i||j|} e_j⊗e_i` and the even diagonals `e_i⊗e_i`.
fn square_generators(l: &LieSuperAlgebra) -> Vec<Vec<Scalar>> {
    let d = l.len();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in i..d {
            let mut v = zero_vec(d * d);
            add_symbol(&mut v, d, 1, i, j);
            add_symbol(&mut v, d, koszul(l.parity(i), l.parity(j)), j, i);
            gens.push(v);
        }
        if l.parity(i) == Parity::Even {
            gens.push(unit_vec(d * d, i * d + i));
        }
    }
    gens
}

/// `L □ L` as a subspace of `L ⊗ L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSubmodule {
    /// Preimage in symbol coordinates: square generators plus tensor relations.
    pub lifted: Subspace,
    pub dim: GradedDim,
}

pub fn square_submodule(l: &LieSuperAlgebra, tensor: &PresentedSpace<TensorSymbol>) -> SquareSubmodule {
    let mut eb = tensor.relations().to_echelon();
    for g in square_generators(l) {
        eb.insert(g);
    }
    let lifted = eb.into_subspace();
    let dim = lifted
        .graded_dim(tensor.parities())
        .checked_sub(tensor.relations().graded_dim(tensor.parities()))
        .expect("lifted square contains the relations");
    SquareSubmodule { lifted, dim }
}

/// `L ∧ L = (L ⊗ L)/(L □ L)`.
pub fn exterior_square(l: &LieSuperAlgebra) -> Result<PresentedSpace<TensorSymbol>, TensorError> {
    let t = tensor_square(l)?;
    Ok(exterior_from(l, &t))
}

fn exterior_from(l: &LieSuperAlgebra, t: &PresentedSpace<TensorSymbol>) -> PresentedSpace<TensorSymbol> {
    let sq = square_submodule(l, t);
    PresentedSpace::new(t.symbols().to_vec(), t.parities().to_vec(), sq.lifted)
}

/// Generators of `Γ(M)` for `M = A(p|q)` with a finite probe set of even vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GammaSymbol {
    /// `γ(v)`, `v` given in coordinates on the even basis.
    Gamma(Vec<i64>),
    Tensor(usize, usize),
}

impl fmt::Display for GammaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaSymbol::Gamma(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "γ({})", parts.join(","))
            }
            GammaSymbol::Tensor(a, b) => write!(f, "e{}⊗e{}", a + 1, b + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSpace {
    pub p: usize,
    pub q: usize,
    pub presentation: PresentedSpace<GammaSymbol>,
}

impl GammaSpace {
    pub fn dim(&self) -> GradedDim {
        self.presentation.quotient_dim()
    }
}

fn probe_vectors(p: usize) -> Vec<Vec<i64>> {
    let mut probes = vec![vec![0; p]];
    for i in 0..p {
        for c in [1, -1, 2] {
            let mut v = vec![0; p];
            v[i] = c;
            probes.push(v);
        }
    }
    for i in 0..p {
        for j in i + 1..p {
            for c in [1, -1] {
                let mut v = vec![0; p];
                v[i] = 1;
                v[j] = c;
                probes.push(v);
            }
        }
    }
    probes
}

/// Presentation of `Γ(A(p|q))` from the defining relations, instantiated on
/// the probe vectors `0, ±e_i, 2e_i, e_i ± e_j`.
pub fn gamma_space(p: usize, q: usize) -> GammaSpace {
    let d = p + q;
    let probes = probe_vectors(p);
    let np = probes.len();
    let parity = |a: usize| if a < p { Parity::Even } else { Parity::Odd };

    let mut symbols: Vec<GammaSymbol> = probes.iter().cloned().map(GammaSymbol::Gamma).collect();
    let mut parities = vec![Parity::Even; np];
    for a in 0..d {
        for b in 0..d {
            symbols.push(GammaSymbol::Tensor(a, b));
            parities.push(parity(a) + parity(b));
        }
    }
    let n = symbols.len();
    let index_of = |v: &[i64]| probes.iter().position(|w| w.as_slice() == v);
    let tensor = |a: usize, b: usize| np + a * d + b;

    let mut eb = EchelonBasis::new(n);
    // γ(λv) = λ² γ(v)
    for (k, v) in probes.iter().enumerate() {
        for lambda in [0i64, -1, 2] {
            let scaled: Vec<i64> = v.iter().map(|x| lambda * x).collect();
            if let Some(s) = index_of(&scaled) {
                let mut rel = zero_vec(n);
                rel[s] += scalar(1);
                rel[k] -= scalar(lambda * lambda);
                eb.insert(rel);
            }
        }
    }
    // γ(v + w) − γ(v) − γ(w) = v ⊗ w
    for (a, v) in probes.iter().enumerate() {
        for (b, w) in probes.iter().enumerate() {
            let sum: Vec<i64> = v.iter().zip(w).map(|(x, y)| x + y).collect();
            if let Some(s) = index_of(&sum) {
                let mut rel = zero_vec(n);
                rel[s] += scalar(1);
                rel[a] -= scalar(1);
                rel[b] -= scalar(1);
                for (i, &x) in v.iter().enumerate() {
                    for (j, &y) in w.iter().enumerate() {
                        if x * y != 0 {
                            rel[tensor(i, j)] -= scalar(x * y);
                        }
                    }
                }
                eb.insert(rel);
            }
        }
    }
    // m ⊗ m' = (−1)^{|m||m'|} m' ⊗ m, and m ⊗ m = 0 for odd m
    for a in 0..d {
        for b in a..d {
            let mut rel = zero_vec(n);
            rel[tensor(a, b)] += scalar(1);
            rel[tensor(b, a)] -= scalar(koszul(parity(a), parity(b)));
            eb.insert(rel);
        }
        if parity(a) == Parity::Odd {
            eb.insert(unit_vec(n, tensor(a, a)));
        }
    }
    GammaSpace { p, q, presentation: PresentedSpace::new(symbols, parities, eb.into_subspace()) }
}

pub fn gamma_dim(p: usize, q: usize) -> GradedDim {
    gamma_space(p, q).dim()
}

/// All class-≤2 homology data computed from one tensor square.
#[derive(Clone, Debug)]
pub struct TensorData {
    pub tensor: PresentedSpace<TensorSymbol>,
    pub square: SquareSubmodule,
    pub exterior: PresentedSpace<TensorSymbol>,
}

impl TensorData {
    pub fn new(l: &LieSuperAlgebra) -> Result<Self, TensorError> {
        let tensor = tensor_square(l)?;
        let square = square_submodule(l, &tensor);
        let exterior = PresentedSpace::new(tensor.symbols().to_vec(), tensor.parities().to_vec(), square.lifted.clone());
        Ok(TensorData { tensor, square, exterior })
    }
}

/// `⊗² = ∧² ⊕ □`: dimensions add up, and a complement of `□` chosen from
/// the exterior coset representatives meets `□` trivially and spans `⊗²`.
pub fn decomposition_check(l: &LieSuperAlgebra) -> Result<bool, TensorError> {
    Ok(TensorData::new(l)?.decomposes())
}

impl TensorData {
    fn decomposes(&self) -> bool {
        let t = self.tensor.quotient_dim();
        if t != self.exterior.quotient_dim() + self.square.dim {
            return false;
        }
        let n = self.tensor.symbols().len();
        let complement = self.exterior.basis_indices();
        let mut eb = self.square.lifted.to_echelon();
        let before = eb.rank();
        let independent = complement.iter().all(|&c| eb.insert(unit_vec(n, c)));
        let relations_rank = self.tensor.relations().rank();
        independent && eb.rank() == before + complement.len() && eb.rank() - relations_rank == t.total()
    }
}

/// `Z^∧(L) = {x : x ∧ y = 0 for all y}`.
pub fn exterior_center(l: &LieSuperAlgebra) -> Result<IdealSubspace, TensorError> {
    let ext = exterior_square(l)?;
    Ok(exterior_center_from(l, &ext))
}

fn exterior_center_from(l: &LieSuperAlgebra, ext: &PresentedSpace<TensorSymbol>) -> IdealSubspace {
    let d = l.len();
    let n = d * d;
    let reps = ext.basis_indices();
    let q = reps.len();
    let mut m = Matrix::zeros(d * q, d);
    for i in 0..d {
        for j in 0..d {
            let nf = ext.normal_form(&unit_vec(n, i * d + j));
            for (r, &c) in reps.iter().enumerate() {
                m[(j * q + r, i)] = nf[c].clone();
            }
        }
    }
    l.as_ideal(linalg::kernel(&m)).expect("exterior center is a central ideal")
}

pub fn is_capable(l: &LieSuperAlgebra) -> Result<bool, TensorError> {
    Ok(exterior_center(l)?.is_zero())
}

/// `dim M(L) = dim L∧L − dim L²` for class at most 2.
pub fn schur_multiplier_class2(l: &LieSuperAlgebra) -> Result<GradedDim, TensorError> {
    let ext = exterior_square(l)?.quotient_dim();
    multiplier_from(l, ext)
}

fn multiplier_from(l: &LieSuperAlgebra, ext: GradedDim) -> Result<GradedDim, TensorError> {
    let derived = l.derived_subalgebra().dim();
    ext.checked_sub(derived).ok_or(TensorError::NegativeDim { minuend: ext, subtrahend: derived })
}

/// `dim (L⊗L)⊗L` for class at most 2, via `(L⊗L) ⊗ L/L²` as graded spaces.
pub fn triple_tensor_class2(l: &LieSuperAlgebra) -> Result<GradedDim, TensorError> {
    let t = tensor_square(l)?.quotient_dim();
    Ok(triple_from(l, t))
}

fn triple_from(l: &LieSuperAlgebra, tensor: GradedDim) -> GradedDim {
    let ab = l.dim().checked_sub(l.derived_subalgebra().dim()).expect("derived subalgebra fits");
    tensor * ab
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
    pub equality: bool,
}

/// Compare `dim ⊗³L` against `(m+n)(m+n−(r+s))²`.
pub fn bound_check(l: &LieSuperAlgebra) -> Result<BoundReport, TensorError> {
    let derived = l.derived_subalgebra().dim();
    if derived.is_zero() {
        return Err(TensorError::AbelianInput);
    }
    let lhs = triple_tensor_class2(l)?.total();
    let total = l.len();
    let rhs = total * (total - derived.total()).pow(2);
    Ok(BoundReport { lhs, rhs, holds: lhs <= rhs, equality: lhs == rhs })
}

/// Every constructive quantity for one algebra, sharing a single tensor square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub tensor2: GradedDim,
    pub exterior2: GradedDim,
    pub square: GradedDim,
    pub decomposes: bool,
    pub exterior_center: IdealSubspace,
    pub multiplier: GradedDim,
    pub tensor3: GradedDim,
}

pub fn summarize(l: &LieSuperAlgebra) -> Result<HomologySummary, TensorError> {
    let data = TensorData::new(l)?;
    let tensor2 = data.tensor.quotient_dim();
    let exterior2 = data.exterior.quotient_dim();
    Ok(HomologySummary {
        tensor2,
        exterior2,
        square: data.square.dim,
        decomposes: data.decomposes(),
        exterior_center: exterior_center_from(l, &data.exterior),
        multiplier: multiplier_from(l, exterior2)?,
        tensor3: triple_from(l, tensor2),
    })
}
