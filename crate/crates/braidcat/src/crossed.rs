//! Crossed-product C₂-extensions of Comod(H): datum validation, graded
//! objects and morphisms, tensor products, associators, pentagon
//! verification and the eight named presets.
//!
//! A datum is the triple (g, f, γ) together with per-grade biGalois flags.
//! Presets whose flag is nontrivial are metadata records only: their tensor
//! products cannot be instantiated here because the underlying biGalois
//! object is not determined by the data in scope, and every operation that
//! would need it refuses with an explanation.

use crate::comodule::{
    check_comodule_morphism, grouplike_comodule, regular_comodule, tensor_comodules, Comodule,
    MorphismSide,
};
use crate::hopf::{Functional, HopfData};
use crate::linalg::{format_scalar, Matrix, Scalar};
use crate::morphisms::natural_endo_from_functional;
use crate::report::{Report, Violation};
use crate::supergroup::{build_iota, SupergroupBasis};
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrossedError {
    #[error("preset is not instantiable: grade {0} carries the nontrivial biGalois object {1}; its tensor products are not determined by the data in scope")]
    NotInstantiable(String, String),
    #[error("unknown preset name: {0}")]
    UnknownPreset(String),
    #[error("dual data not specified for {0}")]
    NoDualData(String),
}

/// Finite group by multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Group {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub e: usize,
}

impl Group {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Self {
        let n = labels.len();
        assert!(table.len() == n && table.iter().all(|r| r.len() == n));
        let e = (0..n)
            .find(|&i| (0..n).all(|j| table[i][j] == j && table[j][i] == j))
            .expect("multiplication table has an identity");
        Group { labels, table, e }
    }

    pub fn c2() -> Self {
        Group::new(vec!["e".into(), "u".into()], vec![vec![0, 1], vec![1, 0]])
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.e)
            .expect("group elements are invertible")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BiGaloisFlag {
    Trivial,
    Nontrivial(String),
}

/// The datum (g, f, γ): a 2-cochain of grouplikes, a family of bicomodule
/// algebra isomorphisms H^{g(a,b)} → H, and a 3-cochain of scalars, plus
/// the per-grade biGalois flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedDatum {
    pub group: Group,
    /// gmap[a][b]: coordinates of the grouplike g(a,b).
    pub gmap: Vec<Vec<Vec<Scalar>>>,
    /// fmaps[a][b]: matrix of f^{a,b}: H^{g(a,b)} → H.
    pub fmaps: Vec<Vec<Matrix>>,
    /// gamma[a][b][c]: scalar 3-cochain.
    pub gamma: Vec<Vec<Vec<Scalar>>>,
    /// flags[a]: whether the biGalois object at grade a is H itself.
    pub flags: Vec<BiGaloisFlag>,
}

impl CrossedDatum {
    pub fn g(&self, a: usize, b: usize) -> &[Scalar] {
        &self.gmap[a][b]
    }

    pub fn f(&self, a: usize, b: usize) -> &Matrix {
        &self.fmaps[a][b]
    }

    pub fn gamma(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.gamma[a][b][c]
    }

    pub fn is_instantiable(&self) -> bool {
        self.flags.iter().all(|f| *f == BiGaloisFlag::Trivial)
    }

    fn first_nontrivial_flag(&self) -> Option<(usize, &str)> {
        self.flags.iter().enumerate().find_map(|(i, f)| match f {
            BiGaloisFlag::Nontrivial(label) => Some((i, label.as_str())),
            BiGaloisFlag::Trivial => None,
        })
    }

    fn not_instantiable_error(&self) -> CrossedError {
        let (grade, label) = self
            .first_nontrivial_flag()
            .expect("called only on non-instantiable data");
        CrossedError::NotInstantiable(self.group.labels[grade].clone(), label.to_string())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let fmt_vec = |v: &[Scalar]| -> Vec<String> { v.iter().map(format_scalar).collect() };
        serde_json::json!({
            "group": { "labels": self.group.labels, "table": self.group.table },
            "gmap": self.gmap.iter().map(|row| row.iter().map(|g| fmt_vec(g)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "fmaps": self.fmaps.iter().map(|row| row.iter().map(|m| {
                m.to_dense_rows().iter().map(|r| fmt_vec(r)).collect::<Vec<_>>()
            }).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "gamma": self.gamma.iter().map(|p| p.iter().map(|row| fmt_vec(row)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "flags": self.flags.iter().map(|f| match f {
                BiGaloisFlag::Trivial => "trivial".to_string(),
                BiGaloisFlag::Nontrivial(l) => format!("nontrivial({l})"),
            }).collect::<Vec<_>>(),
        })
    }
}

/// ε ∘ f as a functional.
pub fn eps_f_functional(h: &HopfData, f: &Matrix) -> Functional {
    let eps = h.counit();
    let d = h.dim();
    let vals: Vec<Scalar> = (0..d)
        .map(|c| {
            f.column_entries(c)
                .iter()
                .map(|(r, v)| &eps.0[*r] * v)
                .sum()
        })
        .collect();
    Functional(vals)
}

// ----------------------------------------------------------------------
// graded objects and morphisms
// ----------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedObject {
    pub comodule: Comodule,
    pub grade: usize,
    pub name: String,
}

impl GradedObject {
    pub fn new(comodule: Comodule, grade: usize, name: impl Into<String>) -> Self {
        GradedObject {
            comodule,
            grade,
            name: name.into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.comodule.dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMorphism {
    pub matrix: Matrix,
    pub source: GradedObject,
    pub target: GradedObject,
}

/// [V,a] ⊗ [W,b] = [V ⊗ W ⊗ k_{g(a,b)}, ab], with the k₁ factor suppressed
/// by the unit isomorphism. The cotensor through the trivial biGalois
/// object is identified with W itself, eagerly, so tensor products are
/// strict on matrices.
pub fn tensor_graded(
    h: &HopfData,
    d: &CrossedDatum,
    x: &GradedObject,
    y: &GradedObject,
) -> Result<GradedObject, CrossedError> {
    if !d.is_instantiable() {
        return Err(d.not_instantiable_error());
    }
    let grade = d.group.mul(x.grade, y.grade);
    let g = d.g(x.grade, y.grade);
    let mut comodule = tensor_comodules(h, &x.comodule, &y.comodule);
    if g != h.unit_vector() {
        let kg = grouplike_comodule(h, g).expect("datum stores grouplikes");
        comodule = tensor_comodules(h, &comodule, &kg);
    }
    let name = format!("({}⊗{})", x.name, y.name);
    Ok(GradedObject::new(comodule, grade, name))
}

/// Tensor product of graded morphisms: plain Kronecker product padded by
/// the identity on the 1-dimensional grouplike factor.
pub fn tensor_graded_morphisms(
    h: &HopfData,
    d: &CrossedDatum,
    f: &GradedMorphism,
    g: &GradedMorphism,
) -> Result<GradedMorphism, CrossedError> {
    let source = tensor_graded(h, d, &f.source, &g.source)?;
    let target = tensor_graded(h, d, &f.target, &g.target)?;
    let matrix = f.matrix.kron(&g.matrix);
    Ok(GradedMorphism {
        matrix,
        source,
        target,
    })
}

/// The associator component at ([V,a],[W,b],[Z,c]): identity scaled by
/// γ(a,b,c), except when g(a,b) ≠ 1, where the grouplike factor
/// k_{g(a,b)} crosses Z through the half-braiding
/// z ↦ ε(f^{a,b}(z₋₁)) z₀ (a swap of a one-dimensional factor composed
/// with that endomorphism). The crossing is what makes each component a
/// comodule morphism between its source and target; restricted to triples
/// with all grades nontrivial this is exactly the displayed
/// ±(id ⊗ swap∘parity) form, and at mixed grades it is the unique
/// natural-functional dressing that intertwines the coactions.
pub(crate) fn associator_matrix(
    h: &HopfData,
    d: &CrossedDatum,
    x: &GradedObject,
    y: &GradedObject,
    z: &GradedObject,
) -> Result<Matrix, CrossedError> {
    if !d.is_instantiable() {
        return Err(d.not_instantiable_error());
    }
    let (a, b, c) = (x.grade, y.grade, z.grade);
    let gamma = d.gamma(a, b, c);
    let m = if d.g(a, b) != h.unit_vector() {
        let parity = natural_endo_from_functional(&eps_f_functional(h, d.f(a, b)), &z.comodule);
        Matrix::identity(x.dim() * y.dim()).kron(&parity)
    } else {
        Matrix::identity(x.dim() * y.dim() * z.dim())
    };
    Ok(m.scale(gamma))
}

pub fn associator(
    h: &HopfData,
    d: &CrossedDatum,
    x: &GradedObject,
    y: &GradedObject,
    z: &GradedObject,
) -> Result<GradedMorphism, CrossedError> {
    let source = tensor_graded(h, d, &tensor_graded(h, d, x, y)?, z)?;
    let target = tensor_graded(h, d, x, &tensor_graded(h, d, y, z)?)?;
    let matrix = associator_matrix(h, d, x, y, z)?;
    Ok(GradedMorphism {
        matrix,
        source,
        target,
    })
}

/// Structural inverse of the associator component.
pub(crate) fn associator_inverse_matrix(
    h: &HopfData,
    d: &CrossedDatum,
    x: &GradedObject,
    y: &GradedObject,
    z: &GradedObject,
) -> Result<Matrix, CrossedError> {
    if !d.is_instantiable() {
        return Err(d.not_instantiable_error());
    }
    let (a, b, c) = (x.grade, y.grade, z.grade);
    let gamma = d.gamma(a, b, c);
    let m = if d.g(a, b) != h.unit_vector() {
        let lambda = eps_f_functional(h, d.f(a, b));
        let inv = h
            .convolution_inverse(&lambda)
            .expect("datum functionals are convolution-invertible");
        let parity = natural_endo_from_functional(&inv, &z.comodule);
        Matrix::identity(x.dim() * y.dim()).kron(&parity)
    } else {
        Matrix::identity(x.dim() * y.dim() * z.dim())
    };
    Ok(m.scale(&(Scalar::one() / gamma)))
}

// ----------------------------------------------------------------------
// datum validation
// ----------------------------------------------------------------------

/// Checks normalization, the 2-cocycle identity for g, the composition
/// identity for f, the 3-cocycle identity for γ, and that every f^{a,b} is
/// a bicomodule algebra isomorphism H^{g(a,b)} → H. With a nontrivial
/// biGalois flag only the flag-level checks run.
pub fn validate_datum(h: &HopfData, d: &CrossedDatum) -> Report {
    let mut report = Report::new("crossed datum");
    let n = d.group.order();
    let e = d.group.e;
    let gl = |a: usize| d.group.labels[a].clone();

    // normalization of g and f
    for a in 0..n {
        report.record(
            d.g(e, a) == h.unit_vector() && d.g(a, e) == h.unit_vector(),
            || Violation {
                identity: "g(e,a) = g(a,e) = 1".into(),
                witness: vec![gl(a)],
                lhs: crate::linalg::format_vector(d.g(e, a)),
                rhs: crate::linalg::format_vector(h.unit_vector()),
            },
        );
        report.record(
            d.f(e, a).is_identity() && d.f(a, e).is_identity(),
            || Violation {
                identity: "f(e,a) = f(a,e) = id".into(),
                witness: vec![gl(a)],
                lhs: "non-identity".into(),
                rhs: "identity".into(),
            },
        );
    }

    // γ normalization
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == e || b == e || c == e {
                    report.record(d.gamma(a, b, c).is_one(), || Violation {
                        identity: "γ normalized".into(),
                        witness: vec![gl(a), gl(b), gl(c)],
                        lhs: format_scalar(d.gamma(a, b, c)),
                        rhs: "1".into(),
                    });
                }
            }
        }
    }

    // 2-cocycle identity for g (the biGalois twist of the left component
    // is trivial for trivial flags)
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = h.multiply(d.g(b, c), d.g(a, d.group.mul(b, c)));
                let rhs = h.multiply(d.g(a, b), d.g(d.group.mul(a, b), c));
                report.record(lhs == rhs, || Violation {
                    identity: "g(b,c) g(a,bc) = g(a,b) g(ab,c)".into(),
                    witness: vec![gl(a), gl(b), gl(c)],
                    lhs: crate::linalg::format_vector(&lhs),
                    rhs: crate::linalg::format_vector(&rhs),
                });
            }
        }
    }

    // 3-cocycle identity for γ
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for dd in 0..n {
                    let lhs = d.gamma(b, c, dd)
                        * d.gamma(a, d.group.mul(b, c), dd)
                        * d.gamma(a, b, c);
                    let rhs =
                        d.gamma(d.group.mul(a, b), c, dd) * d.gamma(a, b, d.group.mul(c, dd));
                    report.record(lhs == rhs, || Violation {
                        identity: "3-cocycle identity for γ".into(),
                        witness: vec![gl(a), gl(b), gl(c), gl(dd)],
                        lhs: format_scalar(&lhs),
                        rhs: format_scalar(&rhs),
                    });
                }
            }
        }
    }

    if !d.is_instantiable() {
        report.note(
            "nontrivial biGalois flag: tensor-level checks skipped, datum is metadata only",
        );
        return report;
    }

    // f-composition identity (reduced form for trivial biGalois objects)
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ab = d.group.mul(a, b);
                let bc = d.group.mul(b, c);
                let lhs = d.f(ab, c).mul(d.f(a, b));
                let rhs = d.f(a, bc).mul(d.f(b, c));
                report.record(lhs == rhs, || Violation {
                    identity: "f(ab,c) f(a,b) = f(a,bc) f(b,c)".into(),
                    witness: vec![gl(a), gl(b), gl(c)],
                    lhs: "see matrices".into(),
                    rhs: "differ".into(),
                });
            }
        }
    }

    // every f^{a,b} is a bicomodule algebra isomorphism H^{g(a,b)} → H
    let reg = regular_comodule(h);
    for a in 0..n {
        for b in 0..n {
            let g = d.g(a, b);
            let twisted = crate::comodule::twist_coaction(h, &reg, g)
                .expect("datum stores grouplikes");
            let morph = check_comodule_morphism(h, d.f(a, b), &twisted, &reg, MorphismSide::Bi);
            report.record(morph.passed(), || Violation {
                identity: "f is a bicomodule morphism".into(),
                witness: vec![gl(a), gl(b)],
                lhs: morph
                    .first_violation()
                    .map(|v| format!("{} fails", v.identity))
                    .unwrap_or_default(),
                rhs: "bicomodule morphism".into(),
            });
            // multiplicativity, unitality, bijectivity
            let f = d.f(a, b);
            let mut is_alg = f.apply(h.unit_vector()) == h.unit_vector();
            'alg: for i in 0..h.dim() {
                for j in 0..h.dim() {
                    let mut e_i = vec![Scalar::zero(); h.dim()];
                    e_i[i] = Scalar::one();
                    let mut e_j = vec![Scalar::zero(); h.dim()];
                    e_j[j] = Scalar::one();
                    if f.apply(&h.multiply(&e_i, &e_j))
                        != h.multiply(&f.apply(&e_i), &f.apply(&e_j))
                    {
                        is_alg = false;
                        break 'alg;
                    }
                }
            }
            report.record(is_alg, || Violation {
                identity: "f is an algebra map".into(),
                witness: vec![gl(a), gl(b)],
                lhs: "multiplicativity or unit fails".into(),
                rhs: "algebra map".into(),
            });
            report.record(f.rank() == h.dim(), || Violation {
                identity: "f is invertible".into(),
                witness: vec![gl(a), gl(b)],
                lhs: format!("rank {}", f.rank()),
                rhs: format!("rank {}", h.dim()),
            });
        }
    }

    report
}

// ----------------------------------------------------------------------
// pentagon
// ----------------------------------------------------------------------

/// Checks the pentagon identity for every ordered quadruple from the
/// testset, as exact matrix equalities. Composite middle objects are built
/// pairwise; the four-fold spaces are never materialized as comodules.
pub fn verify_pentagon(h: &HopfData, d: &CrossedDatum, testset: &[GradedObject]) -> Report {
    let mut report = Report::new("pentagon");
    if !d.is_instantiable() {
        report.record(false, || Violation {
            identity: "instantiable datum".into(),
            witness: vec![],
            lhs: d.not_instantiable_error().to_string(),
            rhs: "trivial biGalois flags".into(),
        });
        return report;
    }
    let n = testset.len();
    // pairwise composites, cached
    let mut pair: Vec<Vec<GradedObject>> = Vec::with_capacity(n);
    for x in testset {
        let mut row = Vec::with_capacity(n);
        for y in testset {
            row.push(tensor_graded(h, d, x, y).expect("instantiable"));
        }
        pair.push(row);
    }
    for ia in 0..n {
        for ib in 0..n {
            for ic in 0..n {
                for id in 0..n {
                    let (a, b, c, dd) = (&testset[ia], &testset[ib], &testset[ic], &testset[id]);
                    let p1 = associator_matrix(h, d, a, b, c)
                        .expect("instantiable")
                        .kron(&Matrix::identity(dd.dim()));
                    let p2 = associator_matrix(h, d, a, &pair[ib][ic], dd).expect("instantiable");
                    let p3 = Matrix::identity(a.dim())
                        .kron(&associator_matrix(h, d, b, c, dd).expect("instantiable"));
                    let lhs = p3.mul(&p2).mul(&p1);
                    let q1 = associator_matrix(h, d, &pair[ia][ib], c, dd).expect("instantiable");
                    let q2 = associator_matrix(h, d, a, b, &pair[ic][id]).expect("instantiable");
                    let rhs = q2.mul(&q1);
                    report.record(lhs == rhs, || {
                        let (r, cc, l, rr) =
                            lhs.first_difference(&rhs).expect("difference exists");
                        Violation {
                            identity: "pentagon".into(),
                            witness: vec![
                                a.name.clone(),
                                b.name.clone(),
                                c.name.clone(),
                                dd.name.clone(),
                                format!("entry ({r},{cc})"),
                            ],
                            lhs: format_scalar(&l),
                            rhs: format_scalar(&rr),
                        }
                    });
                }
            }
        }
    }
    report
}

/// Checks that every associator component over the testset is a comodule
/// morphism between its stated source and target.
pub fn verify_associator_morphisms(
    h: &HopfData,
    d: &CrossedDatum,
    testset: &[GradedObject],
) -> Report {
    let mut report = Report::new("associator components are comodule morphisms");
    for x in testset {
        for y in testset {
            for z in testset {
                let a = match associator(h, d, x, y, z) {
                    Ok(a) => a,
                    Err(e) => {
                        report.record(false, || Violation {
                            identity: "associator exists".into(),
                            witness: vec![x.name.clone(), y.name.clone(), z.name.clone()],
                            lhs: e.to_string(),
                            rhs: "instantiable".into(),
                        });
                        continue;
                    }
                };
                let morph = check_comodule_morphism(
                    h,
                    &a.matrix,
                    &a.source.comodule,
                    &a.target.comodule,
                    MorphismSide::Left,
                );
                report.record(morph.passed(), || Violation {
                    identity: "associator is a comodule morphism".into(),
                    witness: vec![x.name.clone(), y.name.clone(), z.name.clone()],
                    lhs: morph
                        .first_violation()
                        .map(|v| format!("{} at {}", v.identity, v.witness.join(",")))
                        .unwrap_or_default(),
                    rhs: "comodule morphism".into(),
                });
            }
        }
    }
    report
}

// ----------------------------------------------------------------------
// duals (data only)
// ----------------------------------------------------------------------

/// The dual object as data: [V,e]* = [V*,e] with the antipode-transposed
/// coaction, and [k₁,a]* = [k_{g(a,a⁻¹)}, a⁻¹]. No evaluation maps are
/// produced; other shapes are not specified by the construction.
pub fn dual_data(
    h: &HopfData,
    d: &CrossedDatum,
    x: &GradedObject,
) -> Result<GradedObject, CrossedError> {
    if x.grade == d.group.e {
        // V* with coaction: coefficient of b_h' ⊗ e^j in λ(e^i) is
        // Σ_h S[h'][h] · ρ[h ⊗ e_i][e_j]
        let dim = x.dim();
        let dh = h.dim();
        let mut co = Matrix::zeros(dh * dim, dim);
        for j in 0..dim {
            for (row, v) in x.comodule.coaction.column_entries(j) {
                let (hh, i) = (row / dim, row % dim);
                // λ(e^i) has coefficient Σ_h S[h'][h] ρ[h,i,j] at b_h' ⊗ e^j
                for (hp, sv) in h.antipode().column_entries(hh) {
                    co.add_to(hp * dim + j, i, &(v * sv));
                }
            }
        }
        let comodule = Comodule::new(h, co, None)
            .expect("antipode transpose of a coaction is a coaction");
        return Ok(GradedObject::new(
            comodule,
            x.grade,
            format!("{}*", x.name),
        ));
    }
    // the unit object at a nontrivial grade
    let is_unit_object = x.dim() == 1 && {
        let col = x.comodule.coaction.column_entries(0);
        let as_vec: Vec<Scalar> = {
            let mut v = vec![Scalar::zero(); h.dim()];
            for (r, val) in col {
                v[*r] = val.clone();
            }
            v
        };
        as_vec == h.unit_vector()
    };
    if is_unit_object {
        let ainv = d.group.inverse(x.grade);
        let g = d.g(x.grade, ainv);
        let kg = grouplike_comodule(h, g).expect("datum stores grouplikes");
        return Ok(GradedObject::new(
            kg,
            ainv,
            format!("{}*", x.name),
        ));
    }
    Err(CrossedError::NoDualData(x.name.clone()))
}

// ----------------------------------------------------------------------
// the eight presets (over the supergroup algebra with n = 2)
// ----------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PresetName {
    C0IdPlus,
    C0IdMinus,
    C0IotaPlus,
    C0IotaMinus,
    DIdPlus,
    DIdMinus,
    DIotaPlus,
    DIotaMinus,
}

impl PresetName {
    pub fn all() -> [PresetName; 8] {
        use PresetName::*;
        [
            C0IdPlus, C0IdMinus, C0IotaPlus, C0IotaMinus, DIdPlus, DIdMinus, DIotaPlus,
            DIotaMinus,
        ]
    }

    pub fn cli_name(&self) -> &'static str {
        use PresetName::*;
        match self {
            C0IdPlus => "C0-1-id-plus",
            C0IdMinus => "C0-1-id-minus",
            C0IotaPlus => "C0-u-iota-plus",
            C0IotaMinus => "C0-u-iota-minus",
            DIdPlus => "D-1-id-plus",
            DIdMinus => "D-1-id-minus",
            DIotaPlus => "D-u-iota-plus",
            DIotaMinus => "D-u-iota-minus",
        }
    }

    pub fn display_name(&self) -> &'static str {
        use PresetName::*;
        match self {
            C0IdPlus => "C0(1,id,+1)",
            C0IdMinus => "C0(1,id,-1)",
            C0IotaPlus => "C0(u,iota,+1)",
            C0IotaMinus => "C0(u,iota,-1)",
            DIdPlus => "D(1,id,+1)",
            DIdMinus => "D(1,id,-1)",
            DIotaPlus => "D(u,iota,+1)",
            DIotaMinus => "D(u,iota,-1)",
        }
    }

    pub fn from_cli_name(name: &str) -> Result<Self, CrossedError> {
        PresetName::all()
            .into_iter()
            .find(|p| p.cli_name() == name)
            .ok_or_else(|| CrossedError::UnknownPreset(name.to_string()))
    }

    pub fn uses_nontrivial_bigalois(&self) -> bool {
        use PresetName::*;
        matches!(self, C0IdPlus | C0IdMinus | C0IotaPlus | C0IotaMinus)
    }

    fn twist_is_u(&self) -> bool {
        use PresetName::*;
        matches!(self, C0IotaPlus | C0IotaMinus | DIotaPlus | DIotaMinus)
    }

    fn gamma_sign(&self) -> i64 {
        use PresetName::*;
        match self {
            C0IdPlus | C0IotaPlus | DIdPlus | DIotaPlus => 1,
            _ => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryPreset {
    pub name: PresetName,
    pub datum: CrossedDatum,
    pub instantiable: bool,
}

/// Builds the named preset over the supergroup algebra H(2).
pub fn preset(h: &HopfData, name: PresetName) -> CategoryPreset {
    let basis = SupergroupBasis::new(2);
    assert_eq!(h.dim(), basis.dim(), "presets are defined over H(2)");
    let group = Group::c2();
    let one = h.unit_vector().to_vec();
    let mut u = vec![Scalar::zero(); h.dim()];
    u[basis.index(1, 0)] = Scalar::one();

    let guu = if name.twist_is_u() { u } else { one.clone() };
    let fuu = if name.twist_is_u() {
        build_iota(2)
    } else {
        Matrix::identity(h.dim())
    };
    let id = Matrix::identity(h.dim());
    let gmap = vec![
        vec![one.clone(), one.clone()],
        vec![one.clone(), guu],
    ];
    let fmaps = vec![vec![id.clone(), id.clone()], vec![id, fuu]];
    let mut gamma = vec![vec![vec![Scalar::one(); 2]; 2]; 2];
    gamma[1][1][1] = crate::linalg::qi(name.gamma_sign());
    let flags = if name.uses_nontrivial_bigalois() {
        vec![
            BiGaloisFlag::Trivial,
            BiGaloisFlag::Nontrivial("U0".into()),
        ]
    } else {
        vec![BiGaloisFlag::Trivial, BiGaloisFlag::Trivial]
    };
    let datum = CrossedDatum {
        group,
        gmap,
        fmaps,
        gamma,
        flags,
    };
    let instantiable = datum.is_instantiable();
    CategoryPreset {
        name,
        datum,
        instantiable,
    }
}

// ----------------------------------------------------------------------
// testsets
// ----------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestsetKind {
    Minimal,
    Default,
    Extended,
}

impl TestsetKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "minimal" => Some(TestsetKind::Minimal),
            "default" => Some(TestsetKind::Default),
            "extended" => Some(TestsetKind::Extended),
            _ => None,
        }
    }
}

/// The default testset over H(2): {[k₁,e],[k_u,e],[H,e],[k₁,u],[k_u,u],[H,u]}.
pub fn build_testset(h: &HopfData, kind: TestsetKind) -> Vec<GradedObject> {
    let basis = SupergroupBasis::new(2);
    assert_eq!(h.dim(), basis.dim(), "testsets are defined over H(2)");
    let one = h.unit_vector().to_vec();
    let mut u = vec![Scalar::zero(); h.dim()];
    u[basis.index(1, 0)] = Scalar::one();
    let k1 = grouplike_comodule(h, &one).expect("unit is grouplike");
    let ku = grouplike_comodule(h, &u).expect("u is grouplike");
    let reg = regular_comodule(h);
    let mut out = Vec::new();
    match kind {
        TestsetKind::Minimal => {
            out.push(GradedObject::new(k1.clone(), 0, "[k1,e]"));
            out.push(GradedObject::new(ku.clone(), 1, "[ku,u]"));
            out.push(GradedObject::new(reg.clone(), 1, "[H,u]"));
        }
        TestsetKind::Default | TestsetKind::Extended => {
            out.push(GradedObject::new(k1.clone(), 0, "[k1,e]"));
            out.push(GradedObject::new(ku.clone(), 0, "[ku,e]"));
            out.push(GradedObject::new(reg.clone(), 0, "[H,e]"));
            out.push(GradedObject::new(k1.clone(), 1, "[k1,u]"));
            out.push(GradedObject::new(ku.clone(), 1, "[ku,u]"));
            out.push(GradedObject::new(reg.clone(), 1, "[H,u]"));
            if kind == TestsetKind::Extended {
                let kuh = tensor_comodules(h, &ku, &reg);
                out.push(GradedObject::new(kuh.clone(), 0, "[ku⊗H,e]"));
                out.push(GradedObject::new(kuh, 1, "[ku⊗H,u]"));
            }
        }
    }
    out
}
