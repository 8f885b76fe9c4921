//! Exhaustive solver for the small quadratic systems that grouplike,
//! character and morphism enumeration reduce to.
//!
//! Strategy: solve the linear subsystem first, substitute, then branch on a
//! univariate quadratic; repeat. Every in-scope system collapses this way.
//! If elimination leaves an irreducible non-linear factor the solver reports
//! it instead of silently dropping solutions.

use crate::linalg::{rational_sqrt, Scalar};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Monomial of total degree <= 2, as a sorted list of variable indices.
type Monomial = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("solution outside the rationals (irrational root branch)")]
    NonRationalRoot,
    #[error("solution set is positive-dimensional")]
    PositiveDimensional,
    #[error("elimination left a non-univariate quadratic system")]
    Unsupported,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(vec![], c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = Poly::zero();
        p.add_term(vec![i], Scalar::one());
        p
    }

    pub fn add_term(&mut self, mut mon: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        assert!(mon.len() <= 2, "degree > 2 unsupported");
        mon.sort_unstable();
        let entry = self.terms.entry(mon).or_insert_with(Scalar::zero);
        *entry += c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    /// Product, asserting the result stays within degree 2.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    fn variables(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = self.terms.keys().flatten().copied().collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Substitute variable `v` by an affine polynomial.
    fn substitute(&self, v: usize, repl: &Poly) -> Poly {
        assert!(repl.degree() <= 1);
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let count = m.iter().filter(|&&x| x == v).count();
            let rest: Monomial = m.iter().copied().filter(|&x| x != v).collect();
            match count {
                0 => out.add_term(rest, c.clone()),
                1 => {
                    let mut base = Poly::zero();
                    base.add_term(rest, c.clone());
                    out = out.add(&base.mul(repl));
                }
                2 => {
                    let sq = repl.mul(repl);
                    out = out.add(&sq.scale(c));
                }
                _ => unreachable!(),
            }
        }
        out
    }
}

/// All rational solutions of the system, each as a dense assignment vector,
/// sorted lexicographically for deterministic output.
pub fn solve_system(equations: &[Poly], nvars: usize) -> Result<Vec<Vec<Scalar>>, SolveError> {
    let mut solutions = Vec::new();
    let state = State {
        equations: equations.to_vec(),
        resolved: BTreeMap::new(),
        nvars,
    };
    solve_rec(state, &mut solutions)?;
    solutions.sort();
    solutions.dedup();
    Ok(solutions)
}

#[derive(Clone)]
struct State {
    equations: Vec<Poly>,
    /// var -> affine polynomial in still-free variables
    resolved: BTreeMap<usize, Poly>,
    nvars: usize,
}

impl State {
    fn assign(&mut self, v: usize, repl: Poly) {
        for eq in &mut self.equations {
            *eq = eq.substitute(v, &repl);
        }
        for val in self.resolved.values_mut() {
            *val = val.substitute(v, &repl);
        }
        self.resolved.insert(v, repl);
    }
}

fn solve_rec(mut state: State, out: &mut Vec<Vec<Scalar>>) -> Result<(), SolveError> {
    loop {
        state.equations.retain(|e| !e.is_zero());
        // Inconsistent constant equation kills this branch.
        if state
            .equations
            .iter()
            .any(|e| e.degree() == 0 && !e.is_zero())
        {
            return Ok(());
        }
        // Linear pass: eliminate one variable and restart.
        if let Some(eq) = state
            .equations
            .iter()
            .find(|e| e.degree() == 1)
            .cloned()
        {
            let v = *eq.variables().first().expect("linear eq has a variable");
            let coeff = eq.terms.get(&vec![v]).cloned().expect("coefficient");
            // v = -(eq - coeff*v)/coeff
            let mut rest = eq.clone();
            rest.add_term(vec![v], -coeff.clone());
            let repl = rest.scale(&(-Scalar::one() / coeff));
            state.assign(v, repl);
            continue;
        }
        break;
    }

    if state.equations.is_empty() {
        // Any unresolved variable now means a continuum of solutions.
        if (0..state.nvars).any(|v| !state.resolved.contains_key(&v)) {
            return Err(SolveError::PositiveDimensional);
        }
        let mut assignment = vec![Scalar::zero(); state.nvars];
        for (v, p) in &state.resolved {
            assert!(p.degree() == 0 || p.is_zero());
            assignment[*v] = p.terms.get(&vec![]).cloned().unwrap_or_else(Scalar::zero);
        }
        out.push(assignment);
        return Ok(());
    }

    // Branch on a univariate quadratic.
    let Some(eq) = state
        .equations
        .iter()
        .find(|e| e.variables().len() == 1)
        .cloned()
    else {
        return Err(SolveError::Unsupported);
    };
    let v = eq.variables()[0];
    let a = eq.terms.get(&vec![v, v]).cloned().unwrap_or_else(Scalar::zero);
    let b = eq.terms.get(&vec![v]).cloned().unwrap_or_else(Scalar::zero);
    let c = eq.terms.get(&vec![]).cloned().unwrap_or_else(Scalar::zero);
    assert!(!a.is_zero(), "linear pass left a degree-1 equation");
    let disc = &b * &b - Scalar::from_integer(4.into()) * &a * &c;
    let Some(root) = rational_sqrt(&disc) else {
        return Err(SolveError::NonRationalRoot);
    };
    let two_a = Scalar::from_integer(2.into()) * &a;
    let mut roots = vec![(-&b + &root) / &two_a];
    if !root.is_zero() {
        roots.push((-&b - &root) / &two_a);
    }
    for r in roots {
        let mut branch = state.clone();
        branch.assign(v, Poly::constant(r));
        solve_rec(branch, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn single_quadratic() {
        // x^2 - 1 = 0
        let eq = Poly::var(0).mul(&Poly::var(0)).sub(&Poly::constant(qi(1)));
        let sols = solve_system(&[eq], 1).unwrap();
        assert_eq!(sols, vec![vec![qi(-1)], vec![qi(1)]]);
    }

    #[test]
    fn double_root() {
        // x^2 = 0
        let eq = Poly::var(0).mul(&Poly::var(0));
        let sols = solve_system(&[eq], 1).unwrap();
        assert_eq!(sols, vec![vec![qi(0)]]);
    }

    #[test]
    fn irrational_is_reported() {
        // x^2 - 2 = 0
        let eq = Poly::var(0).mul(&Poly::var(0)).sub(&Poly::constant(qi(2)));
        assert_eq!(solve_system(&[eq], 1), Err(SolveError::NonRationalRoot));
    }

    #[test]
    fn continuum_is_reported() {
        assert_eq!(
            solve_system(&[], 1),
            Err(SolveError::PositiveDimensional)
        );
    }

    #[test]
    fn coupled_system() {
        // x + y = 1, x*y = 0  =>  (x,y) in {(0,1),(1,0)}
        let sum = Poly::var(0).add(&Poly::var(1)).sub(&Poly::constant(qi(1)));
        let prod = Poly::var(0).mul(&Poly::var(1));
        let sols = solve_system(&[sum, prod], 2).unwrap();
        assert_eq!(sols, vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]);
    }

    #[test]
    fn inconsistent_branch_is_dropped() {
        // x^2 = 1 and x = 1 leaves only x = 1.
        let sq = Poly::var(0).mul(&Poly::var(0)).sub(&Poly::constant(qi(1)));
        let lin = Poly::var(0).sub(&Poly::constant(qi(1)));
        let sols = solve_system(&[sq, lin], 1).unwrap();
        assert_eq!(sols, vec![vec![qi(1)]]);
    }

    #[test]
    fn stuck_multivariate_quadratic_is_reported() {
        // xy = 1 alone never becomes univariate
        let eq = Poly::var(0).mul(&Poly::var(1)).sub(&Poly::constant(qi(1)));
        assert_eq!(solve_system(&[eq], 2), Err(SolveError::Unsupported));
    }
}
