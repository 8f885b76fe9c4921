//! The supergroup algebra H(n) = kC₂ ⋉ ΛV with dim V = n: basis indexing,
//! construction of the structure constants, the standard R-matrix and
//! r-form, and the distinguished isomorphism ι.
//!
//! Basis elements are u^e · x_S for e ∈ {0,1} and S ⊆ {1..n}, with x_S the
//! increasing ordered product. Relations: u² = 1, x_i x_j = -x_j x_i,
//! x_i² = 0 and u x_i = -x_i u. The linear index is e·2ⁿ + S (S as a
//! bitmask), so index 0 is the unit.

use crate::hopf::{HopfData, RForm, RMatrix, SparseVec};
use crate::linalg::{q, qi, Matrix, Scalar};
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupergroupBasis {
    pub n: usize,
}

impl SupergroupBasis {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "need at least one odd generator");
        SupergroupBasis { n }
    }

    pub fn dim(&self) -> usize {
        1 << (self.n + 1)
    }

    pub fn index(&self, e: usize, s: usize) -> usize {
        debug_assert!(e < 2 && s < (1 << self.n));
        e * (1 << self.n) + s
    }

    pub fn split(&self, idx: usize) -> (usize, usize) {
        let half = 1 << self.n;
        (idx / half, idx % half)
    }

    pub fn label(&self, idx: usize) -> String {
        let (e, s) = self.split(idx);
        let mut out = String::new();
        if e == 1 {
            out.push('u');
        }
        for i in 0..self.n {
            if s & (1 << i) != 0 {
                out.push_str(&format!("x{}", i + 1));
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }

    /// Sign of sorting the concatenation of S then T into increasing order;
    /// zero overlap is the caller's concern.
    fn shuffle_sign(&self, s: usize, t: usize) -> i64 {
        // count inversions: pairs (i ∈ s, j ∈ t) with j < i
        let mut inversions = 0;
        for i in 0..self.n {
            if s & (1 << i) != 0 {
                for j in 0..i {
                    if t & (1 << j) != 0 {
                        inversions += 1;
                    }
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// (u^e x_S)(u^d x_T) = (-1)^{d·|S|} · sign(S,T) · u^{e⊕d} x_{S∪T},
    /// zero when S ∩ T ≠ ∅.
    pub fn product(&self, a: usize, b: usize) -> Option<(usize, i64)> {
        let (e, s) = self.split(a);
        let (d, t) = self.split(b);
        if s & t != 0 {
            return None;
        }
        let mut sign = self.shuffle_sign(s, t);
        if d == 1 && (s.count_ones() % 2 == 1) {
            sign = -sign;
        }
        Some((self.index(e ^ d, s | t), sign))
    }
}

/// Builds H(n) as structure-constant data. Multiplication follows the sign
/// rule above; Δ, ε are extended multiplicatively from Δu = u ⊗ u and
/// Δx_i = x_i ⊗ 1 + u ⊗ x_i; S anti-multiplicatively from S(u) = u,
/// S(x_i) = -u x_i.
pub fn build_supergroup(n: usize) -> HopfData {
    let basis = SupergroupBasis::new(n);
    let d = basis.dim();

    let mut mult = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for a in 0..d {
        for b in 0..d {
            if let Some((c, sign)) = basis.product(a, b) {
                mult[a][b][c] = qi(sign);
            }
        }
    }

    // a throwaway multiplier in H ⊗ H built directly from the basis product
    let mul2 = |a: &SparseVec, b: &SparseVec| -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (ia, va) in a {
            let (i1, i2) = (ia / d, ia % d);
            for (ib, vb) in b {
                let (j1, j2) = (ib / d, ib % d);
                if let (Some((k1, s1)), Some((k2, s2))) =
                    (basis.product(i1, j1), basis.product(i2, j2))
                {
                    out.push((k1 * d + k2, va * vb * qi(s1 * s2)));
                }
            }
        }
        out.sort_by_key(|(i, _)| *i);
        let mut merged: SparseVec = Vec::new();
        for (i, v) in out {
            match merged.last_mut() {
                Some((li, lv)) if *li == i => *lv += v,
                _ => merged.push((i, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        merged
    };

    // Δ on a basis element u^e x_{i1} ... x_{ik}: multiply the generator
    // coproducts left to right in H ⊗ H.
    let mut comult = vec![vec![vec![Scalar::zero(); d]; d]; d];
    let u = basis.index(1, 0);
    for idx in 0..d {
        let (e, s) = basis.split(idx);
        let mut acc: SparseVec = if e == 1 {
            vec![(u * d + u, Scalar::one())]
        } else {
            vec![(0, Scalar::one())]
        };
        for i in 0..n {
            if s & (1 << i) != 0 {
                let xi = basis.index(0, 1 << i);
                let delta_xi: SparseVec =
                    vec![(xi * d, Scalar::one()), (u * d + xi, Scalar::one())];
                acc = mul2(&acc, &delta_xi);
            }
        }
        for (jk, v) in acc {
            comult[idx][jk / d][jk % d] = v;
        }
    }

    let mut unit = vec![Scalar::zero(); d];
    unit[0] = Scalar::one();
    let counit: Vec<Scalar> = (0..d)
        .map(|idx| {
            let (_, s) = basis.split(idx);
            if s == 0 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();

    // S(u^e x_{i1}...x_{ik}) = S(x_{ik})...S(x_{i1}) S(u)^e with
    // S(x_i) = -u x_i; computed in H via the basis product.
    let mut antipode = Matrix::zeros(d, d);
    for idx in 0..d {
        let (e, s) = basis.split(idx);
        let mut acc: SparseVec = vec![(basis.index(e, 0), Scalar::one())];
        for i in 0..n {
            if s & (1 << i) != 0 {
                // multiply on the left by S(x_i) = -u x_i
                let sxi = basis.index(1, 1 << i);
                let mut next = SparseVec::new();
                for (a, v) in &acc {
                    if let Some((c, sign)) = basis.product(sxi, *a) {
                        next.push((c, v * qi(-sign)));
                    }
                }
                acc = next;
            }
        }
        for (k, v) in acc {
            antipode.set(k, idx, v);
        }
    }

    HopfData::new(d, basis.labels(), mult, unit, comult, counit, antipode)
        .expect("supergroup data is structurally valid")
}

/// R = ½(1⊗1 + 1⊗u + u⊗1 − u⊗u): the unique sign pattern supported on the
/// group block that satisfies the QT axioms (verified by `verify_qt`).
pub fn standard_r_matrix(n: usize) -> RMatrix {
    let basis = SupergroupBasis::new(n);
    let d = basis.dim();
    let u = basis.index(1, 0);
    let mut r = vec![Scalar::zero(); d * d];
    let half = q(1, 2);
    r[0] = half.clone();
    r[u] = half.clone();
    r[u * d] = half.clone();
    r[u * d + u] = -half;
    RMatrix(r)
}

/// The dual r-form: r(u^a x_S ⊗ u^b x_T) = 0 unless S = T = ∅, and
/// r(u^a ⊗ u^b) = (−1)^{ab}.
pub fn standard_r_form(n: usize) -> RForm {
    let basis = SupergroupBasis::new(n);
    let d = basis.dim();
    let mut vals = vec![Scalar::zero(); d * d];
    for a in 0..2 {
        for b in 0..2 {
            let i = basis.index(a, 0);
            let j = basis.index(b, 0);
            vals[i * d + j] = if a * b == 1 { -Scalar::one() } else { Scalar::one() };
        }
    }
    RForm(vals)
}

/// ι(u^e x_S) = (−1)^{e+|S|} u^e x_S: the algebra map with ι(u) = −u and
/// ι(x_i) = −x_i, extended multiplicatively.
pub fn build_iota(n: usize) -> Matrix {
    let basis = SupergroupBasis::new(n);
    let d = basis.dim();
    let entries: Vec<Scalar> = (0..d)
        .map(|idx| {
            let (e, s) = basis.split(idx);
            if (e + s.count_ones() as usize) % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            }
        })
        .collect();
    Matrix::diagonal(&entries)
}

/// The parity character χ: χ(u^e x_S) = δ_{S,∅} (−1)^e. Coincides with ε∘ι.
pub fn parity_character(n: usize) -> crate::hopf::Functional {
    let basis = SupergroupBasis::new(n);
    let d = basis.dim();
    let vals: Vec<Scalar> = (0..d)
        .map(|idx| {
            let (e, s) = basis.split(idx);
            if s != 0 {
                Scalar::zero()
            } else if e == 1 {
                -Scalar::one()
            } else {
                Scalar::one()
            }
        })
        .collect();
    crate::hopf::Functional(vals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Functional;

    #[test]
    fn dimensions() {
        assert_eq!(build_supergroup(1).dim(), 4);
        assert_eq!(build_supergroup(2).dim(), 8);
        assert_eq!(build_supergroup(3).dim(), 16);
    }

    #[test]
    fn axioms_pass_for_small_n() {
        for n in 1..=3 {
            let h = build_supergroup(n);
            assert!(h.verify_bialgebra_axioms().passed(), "bialgebra n={n}");
            assert!(h.verify_antipode().passed(), "antipode n={n}");
            assert!(h.verify_antipode_antihomomorphism().passed(), "antihom n={n}");
        }
    }

    #[test]
    fn coproduct_of_x1x2_matches_generator_expansion() {
        // Oracle: expand Δ(x1)Δ(x2) by hand with the sign rule.
        // Δ(x1x2) = x1x2⊗1 − ux1⊗x2 + ux2⊗x1 + 1⊗x1x2.
        let h = build_supergroup(2);
        let b = SupergroupBasis::new(2);
        let x1x2 = b.index(0, 0b11);
        let (x1, x2, ux1, ux2, one) = (
            b.index(0, 0b01),
            b.index(0, 0b10),
            b.index(1, 0b01),
            b.index(1, 0b10),
            0,
        );
        assert_eq!(h.comult_entry(x1x2, x1x2, one), qi(1));
        assert_eq!(h.comult_entry(x1x2, ux1, x2), qi(-1));
        assert_eq!(h.comult_entry(x1x2, ux2, x1), qi(1));
        assert_eq!(h.comult_entry(x1x2, one, x1x2), qi(1));
        // no other terms
        let total: usize = h.basis_comult(x1x2).len();
        assert_eq!(total, 4);
    }

    #[test]
    fn antipode_on_generators() {
        let h = build_supergroup(2);
        let b = SupergroupBasis::new(2);
        let s = h.antipode();
        // S(x1) = -u x1
        assert_eq!(s.get(b.index(1, 0b01), b.index(0, 0b01)), qi(-1));
        // S(u) = u, S(1) = 1
        assert_eq!(s.get(b.index(1, 0), b.index(1, 0)), qi(1));
        assert_eq!(s.get(0, 0), qi(1));
    }

    #[test]
    fn antipode_replaced_by_identity_fails_at_x() {
        let h = build_supergroup(2);
        let b = SupergroupBasis::new(2);
        let broken = HopfData::new(
            h.dim(),
            h.labels().to_vec(),
            (0..h.dim())
                .map(|i| {
                    (0..h.dim())
                        .map(|j| (0..h.dim()).map(|k| h.mult_entry(i, j, k)).collect())
                        .collect()
                })
                .collect(),
            h.unit_vector().to_vec(),
            (0..h.dim())
                .map(|i| {
                    (0..h.dim())
                        .map(|j| (0..h.dim()).map(|k| h.comult_entry(i, j, k)).collect())
                        .collect()
                })
                .collect(),
            (0..h.dim())
                .map(|i| h.counit().0[i].clone())
                .collect(),
            Matrix::identity(h.dim()),
        )
        .unwrap();
        let report = broken.verify_antipode();
        assert!(!report.passed());
        let x_label = h.labels()[b.index(0, 0b01)].clone();
        assert!(report
            .violations
            .iter()
            .any(|v| v.witness.contains(&x_label)));
    }

    #[test]
    fn r_matrix_coordinates() {
        let r = standard_r_matrix(2);
        let b = SupergroupBasis::new(2);
        let d = b.dim();
        let u = b.index(1, 0);
        assert_eq!(r.0[0], q(1, 2));
        assert_eq!(r.0[u * d + u], q(-1, 2));
        // all coordinates touching exterior degree > 0 vanish
        for i in 0..d {
            for j in 0..d {
                let (_, si) = b.split(i);
                let (_, sj) = b.split(j);
                if si != 0 || sj != 0 {
                    assert_eq!(r.0[i * d + j], qi(0));
                }
            }
        }
    }

    #[test]
    fn qt_axioms_pass() {
        let h = build_supergroup(2);
        let report = h.verify_qt(&standard_r_matrix(2));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn trivial_r_on_supergroup_fails_conjugation_at_x() {
        let h = build_supergroup(2);
        let mut r = vec![Scalar::zero(); 64];
        r[0] = qi(1);
        let report = h.verify_qt(&RMatrix(r));
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.identity.contains("Δop") && v.witness == vec!["x1".to_string()]));
    }

    #[test]
    fn r_form_values_match_character_pairing() {
        // Oracle: pair R against u^a ⊗ u^b with ⟨u^a, u^b⟩ = (−1)^{ab}.
        let r = standard_r_form(2);
        let b = SupergroupBasis::new(2);
        let d = b.dim();
        let u = b.index(1, 0);
        let pair = |a: usize, bb: usize| if a * bb == 1 { qi(-1) } else { qi(1) };
        let rm = standard_r_matrix(2);
        for a in 0..2 {
            for c in 0..2 {
                let mut expected = qi(0);
                for i in 0..2 {
                    for j in 0..2 {
                        let coord = rm.0[b.index(i, 0) * d + b.index(j, 0)].clone();
                        expected += coord * pair(a, i) * pair(c, j);
                    }
                }
                assert_eq!(*r.value(d, b.index(a, 0), b.index(c, 0)), expected);
            }
        }
        assert_eq!(*r.value(d, u, u), qi(-1));
        let x1 = b.index(0, 1);
        assert_eq!(*r.value(d, x1, x1), qi(0));
    }

    #[test]
    fn cqt_axioms_pass() {
        let h = build_supergroup(2);
        let report = h.verify_cqt(&standard_r_form(2));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn flipped_r_form_fails_quasi_cocommutativity_at_x_u() {
        let h = build_supergroup(2);
        let b = SupergroupBasis::new(2);
        let d = b.dim();
        let u = b.index(1, 0);
        let mut r = standard_r_form(2);
        r.0[u * d + u] = qi(1);
        let report = h.verify_cqt(&r);
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| {
            v.identity.contains("a1 ⊗ b1")
                && v.witness == vec!["x1".to_string(), "u".to_string()]
        }));
    }

    #[test]
    fn iota_properties() {
        let h = build_supergroup(2);
        let iota = build_iota(2);
        let b = SupergroupBasis::new(2);
        // involution
        assert!(iota.mul(&iota).is_identity());
        // algebra map on all basis pairs
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let mut e_i = vec![Scalar::zero(); h.dim()];
                e_i[i] = Scalar::one();
                let mut e_j = vec![Scalar::zero(); h.dim()];
                e_j[j] = Scalar::one();
                let lhs = iota.apply(&h.multiply(&e_i, &e_j));
                let rhs = h.multiply(&iota.apply(&e_i), &iota.apply(&e_j));
                assert_eq!(lhs, rhs, "iota multiplicativity at ({i},{j})");
            }
        }
        // spot values
        let u = b.index(1, 0);
        assert_eq!(iota.get(u, u), qi(-1));
        let x1x2 = b.index(0, 0b11);
        assert_eq!(iota.get(x1x2, x1x2), qi(1));
        let ux1 = b.index(1, 0b01);
        assert_eq!(iota.get(ux1, ux1), qi(1));
        // ε∘ι is the parity functional
        let eps = h.counit();
        let mut eps_iota = vec![Scalar::zero(); h.dim()];
        for idx in 0..h.dim() {
            let mut e = vec![Scalar::zero(); h.dim()];
            e[idx] = Scalar::one();
            eps_iota[idx] = eps.eval(&iota.apply(&e));
        }
        assert_eq!(Functional(eps_iota), parity_character(2));
    }

    #[test]
    fn grouplikes_are_one_and_u() {
        for n in 1..=3 {
            let h = build_supergroup(n);
            let b = SupergroupBasis::new(n);
            let gs = h.enumerate_grouplikes().unwrap();
            assert_eq!(gs.len(), 2, "n={n}");
            let mut one = vec![Scalar::zero(); h.dim()];
            one[0] = Scalar::one();
            let mut uu = vec![Scalar::zero(); h.dim()];
            uu[b.index(1, 0)] = Scalar::one();
            assert!(gs.contains(&one));
            assert!(gs.contains(&uu));
        }
    }

    #[test]
    fn grouplikes_by_grid_oracle() {
        // Independent completeness oracle: scan all {-1,0,1}^8 vectors for
        // the defining equations and compare against the enumeration.
        let h = build_supergroup(2);
        let d = h.dim();
        let mut found = Vec::new();
        for code in 0..3usize.pow(d as u32) {
            let mut c = code;
            let v: Vec<Scalar> = (0..d)
                .map(|_| {
                    let digit = c % 3;
                    c /= 3;
                    qi(digit as i64 - 1)
                })
                .collect();
            if h.is_grouplike(&v) {
                found.push(v);
            }
        }
        let mut enumerated = h.enumerate_grouplikes().unwrap();
        found.sort();
        enumerated.sort();
        assert_eq!(found, enumerated);
    }

    #[test]
    fn characters_of_supergroup() {
        let h = build_supergroup(2);
        let chars = h.enumerate_characters().unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars.contains(&h.counit()));
        assert!(chars.contains(&parity_character(2)));
        // χ * χ = ε
        let chi = parity_character(2);
        assert_eq!(h.convolve(&chi, &chi), h.counit());
    }

    #[test]
    fn grouplike_group_closure() {
        let h = build_supergroup(2);
        let gs = h.enumerate_grouplikes().unwrap();
        for a in &gs {
            assert!(gs.contains(&h.inverse_element(a).unwrap()));
            for b in &gs {
                assert!(gs.contains(&h.multiply(a, b)));
            }
        }
    }
}
