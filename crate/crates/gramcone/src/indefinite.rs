//! Indefinite inner product algebra.
//!
//! A weight is a symmetric involutory matrix `W` (`W^2 = I`) defining the
//! bilinear form `[x, y] = <x, W y>` on its space. The weighted product of
//! two conforming matrices inserts the weight of the shared intermediate
//! space: `A ∘ B = A W B`. Every matrix in this module carries explicit
//! domain and codomain spaces, so the weight inserted by each `∘` is always
//! determined by metadata rather than guessed from shapes (square matrices
//! would make shape-based guessing ambiguous).
//!
//! On top of the product sit the weighted adjoint `A^[*] = W_dom A^T W_cod`,
//! the weighted Moore-Penrose inverse `A^[†] = W_dom A^+ W_cod` (certified
//! against the four Penrose equations before being returned), projectors,
//! and an exact linear solver.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{same_span, RatMatrix};
use crate::rat::{dot, Rat, RatVector};

/// Symmetric involutory weight matrix; construction validates both
/// properties and never normalizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(RatMatrix);

impl Weight {
    pub fn new(matrix: RatMatrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::WeightNotSymmetric);
        }
        let square = matrix.mul(&matrix)?;
        if square != RatMatrix::identity(matrix.row_count()) {
            return Err(Error::WeightNotInvolutory);
        }
        Ok(Weight(matrix))
    }

    pub fn identity(dim: usize) -> Self {
        Weight(RatMatrix::identity(dim))
    }

    /// diag(signs) with entries ±1.
    pub fn signature(signs: &[i8]) -> Result<Self> {
        let mut m = RatMatrix::zero(signs.len(), signs.len());
        for (i, &s) in signs.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::InvalidArgument(format!("signature entry must be ±1, got {s}")));
            }
            m.set(i, i, crate::rat::rat_int(s as i64));
        }
        Ok(Weight(m))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.row_count()
    }

    pub fn is_identity(&self) -> bool {
        self.0 == RatMatrix::identity(self.dim())
    }

    /// `W x`.
    pub fn apply(&self, x: &[Rat]) -> Result<RatVector> {
        self.0.mul_vec(x)
    }
}

/// A dimension together with the weight defining its inner product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndefiniteSpace {
    weight: Weight,
}

impl IndefiniteSpace {
    pub fn new(weight: Weight) -> Self {
        IndefiniteSpace { weight }
    }

    pub fn euclidean(dim: usize) -> Self {
        IndefiniteSpace { weight: Weight::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.weight.dim()
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }
}

impl fmt::Display for IndefiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R^{}", self.dim())
    }
}

/// The weighted inner product `[x, y] = <x, W y>`.
pub fn ibracket(x: &[Rat], y: &[Rat], space: &IndefiniteSpace) -> Result<Rat> {
    if x.len() != space.dim() || y.len() != space.dim() {
        return Err(Error::dims(
            "ibracket",
            space.dim().to_string(),
            format!("{} and {}", x.len(), y.len()),
        ));
    }
    dot(x, &space.weight().apply(y)?)
}

/// Domain/codomain sequence for a weighted product of `k` factors:
/// `spaces[0]` is the codomain of the first factor and `spaces[k]` the
/// domain of the last; factor `i` must map `spaces[i+1] -> spaces[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceChain {
    spaces: Vec<IndefiniteSpace>,
}

impl SpaceChain {
    pub fn new(spaces: Vec<IndefiniteSpace>) -> Result<Self> {
        if spaces.len() < 2 {
            return Err(Error::InvalidArgument("a space chain needs at least two spaces".into()));
        }
        Ok(SpaceChain { spaces })
    }

    pub fn spaces(&self) -> &[IndefiniteSpace] {
        &self.spaces
    }

    pub fn factor_count(&self) -> usize {
        self.spaces.len() - 1
    }

    /// Folds the factors left to right, inserting the weight of each
    /// interior space. Factor `i` must be `spaces[i].dim x spaces[i+1].dim`.
    pub fn compose(&self, factors: &[&RatMatrix]) -> Result<RatMatrix> {
        if factors.len() != self.factor_count() {
            return Err(Error::dims(
                "space chain",
                format!("{} factors", self.factor_count()),
                format!("{} factors", factors.len()),
            ));
        }
        for (i, f) in factors.iter().enumerate() {
            if f.row_count() != self.spaces[i].dim() || f.col_count() != self.spaces[i + 1].dim() {
                return Err(Error::dims(
                    "space chain factor",
                    format!("{}x{}", self.spaces[i].dim(), self.spaces[i + 1].dim()),
                    format!("{}x{}", f.row_count(), f.col_count()),
                ));
            }
        }
        let mut acc = factors[0].clone();
        for (i, f) in factors.iter().enumerate().skip(1) {
            acc = acc.mul(self.spaces[i].weight().matrix())?.mul(f)?;
        }
        Ok(acc)
    }
}

/// A matrix tagged with the indefinite spaces it maps between.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMatrix {
    matrix: RatMatrix,
    domain: IndefiniteSpace,
    codomain: IndefiniteSpace,
}

impl IMatrix {
    pub fn new(matrix: RatMatrix, domain: IndefiniteSpace, codomain: IndefiniteSpace) -> Result<Self> {
        if matrix.row_count() != codomain.dim() || matrix.col_count() != domain.dim() {
            return Err(Error::dims(
                "IMatrix",
                format!("{}x{}", codomain.dim(), domain.dim()),
                format!("{}x{}", matrix.row_count(), matrix.col_count()),
            ));
        }
        Ok(IMatrix { matrix, domain, codomain })
    }

    /// Identity map on a space.
    pub fn identity(space: &IndefiniteSpace) -> Self {
        IMatrix {
            matrix: RatMatrix::identity(space.dim()),
            domain: space.clone(),
            codomain: space.clone(),
        }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn domain(&self) -> &IndefiniteSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &IndefiniteSpace {
        &self.codomain
    }

    /// Weighted product `self ∘ rhs`, inserting the weight of the shared
    /// space. The shared space (domain of `self`, codomain of `rhs`) must
    /// match exactly, weight included.
    pub fn compose(&self, rhs: &IMatrix) -> Result<IMatrix> {
        if self.domain != rhs.codomain {
            return Err(Error::dims(
                "weighted product",
                format!("shared space {}", self.domain),
                format!("{} with different dimension or weight", rhs.codomain),
            ));
        }
        let matrix = self.matrix.mul(self.domain.weight().matrix())?.mul(&rhs.matrix)?;
        Ok(IMatrix {
            matrix,
            domain: rhs.domain.clone(),
            codomain: self.codomain.clone(),
        })
    }

    /// `self ∘ x` for a vector in the domain space.
    pub fn apply(&self, x: &[Rat]) -> Result<RatVector> {
        if x.len() != self.domain.dim() {
            return Err(Error::dims("weighted apply", self.domain.dim().to_string(), x.len().to_string()));
        }
        self.matrix.mul_vec(&self.domain.weight().apply(x)?)
    }

    /// The matrix of `x ↦ self ∘ x`, i.e. `A W_dom`.
    pub fn effective_matrix(&self) -> RatMatrix {
        self.matrix
            .mul(self.domain.weight().matrix())
            .expect("domain weight conforms by construction")
    }

    /// Weighted adjoint `W_dom A^T W_cod`, with domain and codomain swapped.
    /// It is the unique map satisfying the pairing
    /// `[A ∘ x, y] = [x, A^[*] ∘ y]` whenever `W_cod A = A W_dom`.
    pub fn adjoint(&self) -> IMatrix {
        let matrix = self
            .domain
            .weight()
            .matrix()
            .mul(&self.matrix.transpose())
            .and_then(|m| m.mul(self.codomain.weight().matrix()))
            .expect("weights conform by construction");
        IMatrix {
            matrix,
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
        }
    }

    /// Weighted Moore-Penrose inverse `W_dom A^+ W_cod`. All four weighted
    /// Penrose equations are re-verified exactly before returning; a failure
    /// is reported as a defect (it would signal a bug, not bad input).
    pub fn mp_inverse(&self) -> Result<IMatrix> {
        let matrix = self
            .domain
            .weight()
            .matrix()
            .mul(&self.matrix.mp_inverse())?
            .mul(self.codomain.weight().matrix())?;
        let x = IMatrix {
            matrix,
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
        };

        let axa = self.compose(&x)?.compose(self)?;
        let xax = x.compose(self)?.compose(&x)?;
        let ax = self.compose(&x)?;
        let xa = x.compose(self)?;
        let ok = axa == *self && xax == x && ax.adjoint() == ax && xa.adjoint() == xa;
        if !ok {
            return Err(Error::Defect("weighted Penrose equations failed for computed inverse".into()));
        }
        Ok(x)
    }

    /// Whether the map intertwines the two weights: `W_cod A = A W_dom`.
    /// This is the standing compatibility hypothesis of the verifier.
    pub fn commutes(&self) -> bool {
        let lhs = self.codomain.weight().matrix().mul(&self.matrix);
        let rhs = self.matrix.mul(self.domain.weight().matrix());
        lhs == rhs
    }

    /// Gram matrix `A^[*] ∘ A` on the domain space.
    pub fn gram(&self) -> IMatrix {
        self.adjoint().compose(self).expect("adjoint shares the codomain space")
    }

    /// Projector `A ∘ A^[†]` onto the weighted range, as a map on the
    /// codomain space. Satisfies `P ∘ P = P` and `P^[*] = P`.
    pub fn range_projector(&self) -> Result<IMatrix> {
        let dag = self.mp_inverse()?;
        self.compose(&dag)
    }

    /// Projector `A^[†] ∘ A` onto the weighted range of the adjoint, as a
    /// map on the domain space.
    pub fn rowspace_projector(&self) -> Result<IMatrix> {
        let dag = self.mp_inverse()?;
        dag.compose(self)
    }

    /// Basis of the weighted kernel `{x : A ∘ x = 0}`, the Euclidean kernel
    /// of `A W_dom`.
    pub fn circ_kernel_basis(&self) -> Vec<RatVector> {
        self.effective_matrix().kernel_basis()
    }

    /// Canonical basis of the weighted range `{A ∘ x : x}`, the Euclidean
    /// column space of `A W_dom`.
    pub fn circ_range_basis(&self) -> Vec<RatVector> {
        self.effective_matrix().column_space_basis()
    }

    /// Solves `A ∘ x = b`. Returns `None` exactly when `b` is outside the
    /// weighted range; otherwise the particular solution `A^[†] ∘ b`
    /// together with a basis of the weighted kernel, so that the general
    /// solution is the particular one plus any kernel element.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<(RatVector, Vec<RatVector>)>> {
        if b.len() != self.codomain.dim() {
            return Err(Error::dims("weighted solve", self.codomain.dim().to_string(), b.len().to_string()));
        }
        let dag = self.mp_inverse()?;
        let x0 = dag.apply(b)?;
        if self.apply(&x0)? != b {
            return Ok(None);
        }
        Ok(Some((x0, self.circ_kernel_basis())))
    }

    /// The five classical identities tying the weighted adjoint, the
    /// weighted pseudoinverse, and the Gram matrix together. Each is
    /// evaluated exactly; all must hold for every matrix.
    pub fn dagger_identities(&self) -> Result<DaggerIdentityReport> {
        let adj = self.adjoint();
        let dag = self.mp_inverse()?;
        let gram = self.gram();
        let gram_dag = gram.mp_inverse()?;
        let cogram_dag = self.compose(&adj)?.mp_inverse()?;

        let adjoint_absorption = {
            let lhs = adj.compose(self)?.compose(&dag)?;
            let rhs = dag.compose(self)?.compose(&adj)?;
            lhs == adj && rhs == adj
        };
        let dagger_from_gram = {
            let lhs = adj.compose(&cogram_dag)?;
            let rhs = gram_dag.compose(&adj)?;
            lhs == dag && rhs == dag
        };
        let gram_dagger_product = dag.compose(&dag.adjoint())? == gram_dag;
        let weight_shift = {
            let id_dom = IMatrix::identity(&self.domain);
            let lhs = self.compose(&id_dom)?.mp_inverse()?;
            let rhs = id_dom.compose(&dag)?;
            lhs == rhs
        };
        let range_null_match = {
            let n = self.domain.dim();
            let m = self.codomain.dim();
            let range_proj = self.compose(&dag)?;
            let row_proj = dag.compose(self)?;
            same_span(m, &range_proj.circ_range_basis(), &self.circ_range_basis())
                && same_span(n, &row_proj.circ_range_basis(), &adj.circ_range_basis())
                && same_span(m, &range_proj.circ_kernel_basis(), &adj.circ_kernel_basis())
                && same_span(n, &row_proj.circ_kernel_basis(), &self.circ_kernel_basis())
        };

        Ok(DaggerIdentityReport {
            adjoint_absorption,
            dagger_from_gram,
            gram_dagger_product,
            weight_shift,
            range_null_match,
        })
    }

    /// The unambiguous projector identity for the Gram matrix:
    /// `(A^[*] ∘ A)^[†] ∘ (A^[*] ∘ A) = A^[†] ∘ A`.
    pub fn gram_projector_identity(&self) -> Result<bool> {
        let gram = self.gram();
        let lhs = gram.mp_inverse()?.compose(&gram)?;
        Ok(lhs == self.rowspace_projector()?)
    }
}

/// Outcome of [`IMatrix::dagger_identities`]; every field should be true.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DaggerIdentityReport {
    /// `A^[*] = A^[*] ∘ A ∘ A^[†] = A^[†] ∘ A ∘ A^[*]`
    pub adjoint_absorption: bool,
    /// `A^[†] = A^[*] ∘ (A ∘ A^[*])^[†] = (A^[*] ∘ A)^[†] ∘ A^[*]`
    pub dagger_from_gram: bool,
    /// `A^[†] ∘ (A^[†])^[*] = (A^[*] ∘ A)^[†]`
    pub gram_dagger_product: bool,
    /// `(A ∘ I)^[†] = I ∘ A^[†]`
    pub weight_shift: bool,
    /// Range/kernel matches between projectors and `A`, `A^[*]`.
    pub range_null_match: bool,
}

impl DaggerIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.adjoint_absorption
            && self.dagger_from_gram
            && self.gram_dagger_product
            && self.weight_shift
            && self.range_null_match
    }
}

/// Folds a sequence of factors with `∘`, left to right. Adjacent factors
/// must share their intermediate space exactly. Association order does not
/// matter; folding left is just the cheapest.
pub fn ichain(factors: &[&IMatrix]) -> Result<IMatrix> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("weighted chain needs at least one factor".into()))?;
    let mut acc = (*first).clone();
    for f in rest {
        acc = acc.compose(f)?;
    }
    Ok(acc)
}

/// `factors[0] ∘ … ∘ factors[k-1] ∘ x`.
pub fn ichain_apply(factors: &[&IMatrix], x: &[Rat]) -> Result<RatVector> {
    ichain(factors)?.apply(x)
}

/// True when the vector is exactly zero.
pub fn vec_is_zero(x: &[Rat]) -> bool {
    x.iter().all(Zero::is_zero)
}
