//! Left H-comodules: regular and grouplike comodules, tensor products with
//! the codiagonal coaction, cotensor products, coaction twisting by a
//! grouplike, and comodule-morphism checking.
//!
//! A comodule stores its left coaction as a matrix X → H ⊗ X. Comodules
//! that are genuinely bicomodules (the regular one and its twists) also
//! carry their right coaction X → X ⊗ H; for the rest, a right structure
//! can be derived from the left one through the antipode.

use crate::hopf::HopfData;
use crate::linalg::{kernel_basis, Matrix, Scalar};
use crate::report::{Report, Violation};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComoduleError {
    #[error("coaction has shape {0}x{1}, expected {2}x{3}")]
    Shape(usize, usize, usize, usize),
    #[error("coaction is not coassociative")]
    NotCoassociative,
    #[error("coaction violates the counit axiom")]
    CounitAxiom,
    #[error("right coaction is invalid or incompatible with the left one")]
    BadRightCoaction,
    #[error("{0} is not a grouplike element")]
    NotGrouplike(String),
}

/// A finite-dimensional left H-comodule. `coaction` has shape
/// `(dim_H · dim) × dim` with the H index slow: row `h·dim + x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule {
    pub dim: usize,
    pub coaction: Matrix,
    /// Right coaction `X → X ⊗ H` (row `x·dim_H + h`), stored only where a
    /// genuine bicomodule structure exists (regular comodules and twists).
    pub right_coaction: Option<Matrix>,
}

impl Comodule {
    /// Validating constructor: checks coassociativity, the counit axiom,
    /// and (when given) the right-coaction axioms and the bicomodule
    /// compatibility between the two sides.
    pub fn new(
        h: &HopfData,
        coaction: Matrix,
        right_coaction: Option<Matrix>,
    ) -> Result<Self, ComoduleError> {
        let dh = h.dim();
        let dim = coaction.cols();
        if coaction.rows() != dh * dim {
            return Err(ComoduleError::Shape(
                coaction.rows(),
                coaction.cols(),
                dh * dim,
                dim,
            ));
        }
        // (Δ ⊗ id)ρ = (id ⊗ ρ)ρ
        let lhs = h.comult_matrix().kron(&Matrix::identity(dim)).mul(&coaction);
        let rhs = Matrix::identity(dh).kron(&coaction).mul(&coaction);
        if lhs != rhs {
            return Err(ComoduleError::NotCoassociative);
        }
        // (ε ⊗ id)ρ = id
        let eps = counit_contraction(h, dim).mul(&coaction);
        if !eps.is_identity() && dim > 0 {
            return Err(ComoduleError::CounitAxiom);
        }
        if let Some(rc) = &right_coaction {
            if rc.rows() != dim * dh || rc.cols() != dim {
                return Err(ComoduleError::BadRightCoaction);
            }
            // (δ ⊗ id)δ = (id ⊗ Δ)δ
            let l = rc.kron(&Matrix::identity(dh)).mul(rc);
            let r = Matrix::identity(dim).kron(&h.comult_matrix()).mul(rc);
            if l != r {
                return Err(ComoduleError::BadRightCoaction);
            }
            // (id ⊗ ε)δ = id
            let eps_r = right_counit_contraction(h, dim).mul(rc);
            if !eps_r.is_identity() && dim > 0 {
                return Err(ComoduleError::BadRightCoaction);
            }
            // bicomodule compatibility: (id_H ⊗ δ)λ = (λ ⊗ id_H)δ
            let l2 = Matrix::identity(dh).kron(rc).mul(&coaction);
            let r2 = coaction.kron(&Matrix::identity(dh)).mul(rc);
            if l2 != r2 {
                return Err(ComoduleError::BadRightCoaction);
            }
        }
        Ok(Comodule {
            dim,
            coaction,
            right_coaction,
        })
    }

    /// Internal constructor for comodules produced by operations that
    /// preserve the axioms (tensor products of validated comodules).
    pub(crate) fn new_unchecked(
        dim: usize,
        coaction: Matrix,
        right_coaction: Option<Matrix>,
    ) -> Self {
        Comodule {
            dim,
            coaction,
            right_coaction,
        }
    }

    /// The S-twisted right coaction x ↦ x₀ ⊗ S(x₋₁) derived from the left
    /// coaction.
    pub fn s_twisted_right(&self, h: &HopfData) -> Matrix {
        let dh = h.dim();
        let mut out = Matrix::zeros(self.dim * dh, self.dim);
        for col in 0..self.dim {
            for (row, v) in self.coaction.column_entries(col) {
                let (hi, xi) = (row / self.dim, row % self.dim);
                for (sh, sv) in h.antipode().column_entries(hi) {
                    out.add_to(xi * dh + sh, col, &(v * sv));
                }
            }
        }
        out
    }

    /// Right coaction used for bicomodule checks: the stored one if
    /// present, otherwise the S-twist of the left coaction.
    pub fn right_or_derived(&self, h: &HopfData) -> Matrix {
        self.right_coaction
            .clone()
            .unwrap_or_else(|| self.s_twisted_right(h))
    }
}

/// (ε ⊗ id): H ⊗ X → X as a matrix.
pub fn counit_contraction(h: &HopfData, dim: usize) -> Matrix {
    let eps = h.counit();
    Matrix::from_fn(dim, h.dim() * dim, |x, row| {
        let (hi, xi) = (row / dim, row % dim);
        if xi == x {
            eps.0[hi].clone()
        } else {
            Scalar::zero()
        }
    })
}

/// (id ⊗ ε): X ⊗ H → X as a matrix.
fn right_counit_contraction(h: &HopfData, dim: usize) -> Matrix {
    let eps = h.counit();
    Matrix::from_fn(dim, dim * h.dim(), |x, row| {
        let (xi, hi) = (row / h.dim(), row % h.dim());
        if xi == x {
            eps.0[hi].clone()
        } else {
            Scalar::zero()
        }
    })
}

/// H itself with ρ = Δ; carries the regular right coaction as well.
pub fn regular_comodule(h: &HopfData) -> Comodule {
    let d = h.dim();
    let left = h.comult_matrix();
    // right coaction δ(b_i) = b_j ⊗ b_k with the element index slow
    let mut right = Matrix::zeros(d * d, d);
    for i in 0..d {
        for (jk, v) in h.basis_comult(i) {
            let (j, k) = (jk / d, jk % d);
            right.set(j * d + k, i, v.clone());
        }
    }
    Comodule::new(h, left, Some(right)).expect("regular comodule satisfies the axioms")
}

/// One-dimensional comodule k_g for a grouplike g.
pub fn grouplike_comodule(h: &HopfData, g: &[Scalar]) -> Result<Comodule, ComoduleError> {
    if !h.is_grouplike(g) {
        return Err(ComoduleError::NotGrouplike(crate::linalg::format_vector(g)));
    }
    let left = Matrix::column_vector(g);
    let right = Matrix::column_vector(g);
    Comodule::new(h, left, Some(right))
}

/// Codiagonal tensor product: ρ(x ⊗ y) = x₋₁ y₋₁ ⊗ x₀ ⊗ y₀.
pub fn tensor_comodules(h: &HopfData, x: &Comodule, y: &Comodule) -> Comodule {
    let dh = h.dim();
    let dim = x.dim * y.dim;
    let mut coaction = Matrix::zeros(dh * dim, dim);
    for cx in 0..x.dim {
        for cy in 0..y.dim {
            let col = cx * y.dim + cy;
            for (rx, vx) in x.coaction.column_entries(cx) {
                let (hi, xi) = (rx / x.dim, rx % x.dim);
                for (ry, vy) in y.coaction.column_entries(cy) {
                    let (hj, yj) = (ry / y.dim, ry % y.dim);
                    let c = vx * vy;
                    for (hk, m) in h.basis_product(hi, hj) {
                        coaction.add_to(hk * dim + (xi * y.dim + yj), col, &(m * &c));
                    }
                }
            }
        }
    }
    let right = match (&x.right_coaction, &y.right_coaction) {
        (Some(rx), Some(ry)) => {
            let mut right = Matrix::zeros(dim * dh, dim);
            for cx in 0..x.dim {
                for cy in 0..y.dim {
                    let col = cx * y.dim + cy;
                    for (rxr, vx) in rx.column_entries(cx) {
                        let (xi, hi) = (rxr / dh, rxr % dh);
                        for (ryr, vy) in ry.column_entries(cy) {
                            let (yj, hj) = (ryr / dh, ryr % dh);
                            let c = vx * vy;
                            for (hk, m) in h.basis_product(hi, hj) {
                                right.add_to((xi * y.dim + yj) * dh + hk, col, &(m * &c));
                            }
                        }
                    }
                }
            }
            Some(right)
        }
        _ => None,
    };
    Comodule::new_unchecked(dim, coaction, right)
}

/// Twist of the left coaction by a grouplike: λ^g(x) = g⁻¹ x₋₁ g ⊗ x₀.
/// The right coaction, when stored, is unchanged.
pub fn twist_coaction(h: &HopfData, x: &Comodule, g: &[Scalar]) -> Result<Comodule, ComoduleError> {
    if !h.is_grouplike(g) {
        return Err(ComoduleError::NotGrouplike(crate::linalg::format_vector(g)));
    }
    let ginv = h
        .inverse_element(g)
        .ok_or_else(|| ComoduleError::NotGrouplike("g has no inverse".into()))?;
    let conj = conjugation_matrix(h, &ginv, g);
    let dh = h.dim();
    let mut coaction = Matrix::zeros(dh * x.dim, x.dim);
    for col in 0..x.dim {
        for (row, v) in x.coaction.column_entries(col) {
            let (hi, xi) = (row / x.dim, row % x.dim);
            for (hj, c) in conj.column_entries(hi) {
                coaction.add_to(hj * x.dim + xi, col, &(v * c));
            }
        }
    }
    Comodule::new(h, coaction, x.right_coaction.clone())
}

/// Matrix of h ↦ a h b.
pub fn conjugation_matrix(h: &HopfData, a: &[Scalar], b: &[Scalar]) -> Matrix {
    let d = h.dim();
    Matrix::from_fn(d, d, |k, j| {
        let mut e_j = vec![Scalar::zero(); d];
        e_j[j] = Scalar::one();
        let prod = h.multiply(a, &h.multiply(&e_j, b));
        prod[k].clone()
    })
}

/// Cotensor product X □_H Y inside X ⊗ Y: the kernel of
/// ρʳ ⊗ id − id ⊗ λ : X ⊗ Y → X ⊗ H ⊗ Y, where ρʳ is the S-twisted right
/// coaction of X. Every in-scope cotensor has a twisted regular comodule on
/// the left, so this uniform choice covers all uses.
pub struct Cotensor {
    pub basis: Vec<Vec<Scalar>>,
    /// (dim X · dim Y) × k inclusion of the cotensor into X ⊗ Y.
    pub inclusion: Matrix,
}

pub fn cotensor(h: &HopfData, x: &Comodule, y: &Comodule) -> Cotensor {
    let dh = h.dim();
    let rx = x.s_twisted_right(h); // (dimX·dimH) × dimX
    let left = rx.kron(&Matrix::identity(y.dim)); // (dimX·dimH·dimY) × (dimX·dimY)
    let right = Matrix::identity(x.dim).kron(&y.coaction);
    debug_assert_eq!(left.rows(), x.dim * dh * y.dim);
    let basis = kernel_basis(&left.sub(&right));
    let mut inclusion = Matrix::zeros(x.dim * y.dim, basis.len());
    for (j, v) in basis.iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                inclusion.set(i, j, c.clone());
            }
        }
    }
    Cotensor { basis, inclusion }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismSide {
    Left,
    Right,
    Bi,
}

/// Checks whether f: X → Y is a comodule morphism on the requested sides.
/// Left: (id ⊗ f)ρ_X = ρ_Y f. Right: (f ⊗ id)δ_X = δ_Y f with the stored
/// right coactions (falling back to the S-twisted ones, under which the
/// right condition is equivalent to the left).
pub fn check_comodule_morphism(
    h: &HopfData,
    f: &Matrix,
    x: &Comodule,
    y: &Comodule,
    side: MorphismSide,
) -> Report {
    let mut report = Report::new("comodule morphism");
    assert_eq!(f.rows(), y.dim, "morphism target dimension");
    assert_eq!(f.cols(), x.dim, "morphism source dimension");
    let dh = h.dim();
    if matches!(side, MorphismSide::Left | MorphismSide::Bi) {
        let lhs = Matrix::identity(dh).kron(f).mul(&x.coaction);
        let rhs = y.coaction.mul(f);
        let ok = lhs == rhs;
        report.record(ok, || {
            let (r, c, l, rr) = lhs.first_difference(&rhs).expect("difference exists");
            Violation {
                identity: "left comodule condition".into(),
                witness: vec![format!("entry ({r},{c})")],
                lhs: crate::linalg::format_scalar(&l),
                rhs: crate::linalg::format_scalar(&rr),
            }
        });
    }
    if matches!(side, MorphismSide::Right | MorphismSide::Bi) {
        let dx = x.right_or_derived(h);
        let dy = y.right_or_derived(h);
        let lhs = f.kron(&Matrix::identity(dh)).mul(&dx);
        let rhs = dy.mul(f);
        let ok = lhs == rhs;
        report.record(ok, || {
            let (r, c, l, rr) = lhs.first_difference(&rhs).expect("difference exists");
            Violation {
                identity: "right comodule condition".into(),
                witness: vec![format!("entry ({r},{c})")],
                lhs: crate::linalg::format_scalar(&l),
                rhs: crate::linalg::format_scalar(&rr),
            }
        });
    }
    report
}
