//! The fractional domination LP and its dual, the fractional packing LP,
//! solved exactly.
//!
//! The packing side `max Σy, Σ_{u∈N[v]} y_u ≤ 1, y ≥ 0` is solved by a dense
//! primal simplex with Bland's rule; its slack basis is feasible from the
//! start, so no phase one is needed. The optimal fractional dominating
//! vector is read off the reduced costs of the slack columns in the final
//! tableau.

use num_traits::{One, Signed, Zero};

use crate::graph::Graph;
use crate::rational::{format, Rational};
use crate::solvers::{exact_domination, exact_packing};
use crate::vertex_set::VertexSet;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    /// γ_f = ρ_f.
    pub value: Rational,
    /// Fractional dominating vector `x`.
    pub primal: Vec<Rational>,
    /// Fractional packing vector `y`.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

impl LpSolution {
    /// Checks both feasibility systems and `Σx = Σy = value`.
    pub fn certify(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        if self.primal.len() != n || self.dual.len() != n {
            return Err("vector length differs from vertex count".into());
        }
        for v in 0..n {
            if self.primal[v].is_negative() || self.dual[v].is_negative() {
                return Err(format!("negative entry at vertex {v}"));
            }
            let cover: Rational = g.closed(v).iter().map(|u| &self.primal[u]).sum();
            if cover < Rational::one() {
                return Err(format!("N[{v}] has primal mass {}", format(&cover)));
            }
            let load: Rational = g.closed(v).iter().map(|u| &self.dual[u]).sum();
            if load > Rational::one() {
                return Err(format!("N[{v}] has dual mass {}", format(&load)));
            }
        }
        let px: Rational = self.primal.iter().sum();
        let dy: Rational = self.dual.iter().sum();
        if px != self.value || dy != self.value {
            return Err(format!(
                "objectives differ: primal {} dual {} value {}",
                format(&px),
                format(&dy),
                format(&self.value)
            ));
        }
        Ok(())
    }
}

/// Optimal fractional domination (and packing) of `g`.
pub fn fractional_domination(g: &Graph) -> LpSolution {
    let n = g.n();
    let cols = 2 * n;
    // rows: [A | I | rhs]
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|v| {
            let mut r = vec![Rational::zero(); cols + 1];
            for u in g.closed(v).iter() {
                r[u] = Rational::one();
            }
            r[n + v] = Rational::one();
            r[cols] = Rational::one();
            r
        })
        .collect();
    // reduced costs and objective value in the last slot
    let mut obj = vec![Rational::zero(); cols + 1];
    for c in obj.iter_mut().take(n) {
        *c = -Rational::one();
    }
    let mut basis: Vec<usize> = (n..cols).collect();
    let mut pivots = 0;
    loop {
        // Bland: lowest-index improving column
        let Some(enter) = (0..cols).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (i, r) in rows.iter().enumerate() {
            if !r[enter].is_positive() {
                continue;
            }
            let t = &r[cols] / &r[enter];
            let better = match &leave {
                None => true,
                Some((li, lt)) => t < *lt || (t == *lt && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, t));
            }
        }
        let (pr, _) = leave.expect("packing LP is bounded");
        let piv = rows[pr][enter].clone();
        for x in rows[pr].iter_mut() {
            if !x.is_zero() {
                *x /= &piv;
            }
        }
        let prow = rows[pr].clone();
        let nz: Vec<usize> = (0..=cols).filter(|&j| !prow[j].is_zero()).collect();
        for (i, r) in rows.iter_mut().enumerate() {
            if i == pr || r[enter].is_zero() {
                continue;
            }
            let f = r[enter].clone();
            for &j in &nz {
                r[j] -= &f * &prow[j];
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for &j in &nz {
                obj[j] -= &f * &prow[j];
            }
        }
        basis[pr] = enter;
        pivots += 1;
    }
    let mut dual = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            dual[b] = rows[i][cols].clone();
        }
    }
    let primal = (0..n).map(|v| obj[n + v].clone()).collect();
    LpSolution {
        value: obj[cols].clone(),
        primal,
        dual,
        pivots,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub rho: usize,
    pub rho_f: Rational,
    pub gamma_f: Rational,
    pub gamma: usize,
    pub packing: VertexSet,
    pub dominating: VertexSet,
    pub lp: LpSolution,
    /// Empty when `ρ ≤ ρ_f = γ_f ≤ γ` holds and the LP certificate checks.
    pub violations: Vec<String>,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Computes `ρ`, `ρ_f`, `γ_f`, `γ` and checks the chain between them.
pub fn verify_sandwich(g: &Graph) -> Result<SandwichReport> {
    let none = VertexSet::new();
    let gamma = exact_domination(g, &none)?;
    let rho = exact_packing(g, &none)?;
    let lp = fractional_domination(g);
    let mut violations = Vec::new();
    if let Err(e) = lp.certify(g) {
        violations.push(format!("LP certificate: {e}"));
    }
    let rho_f: Rational = lp.dual.iter().sum();
    let gamma_f: Rational = lp.primal.iter().sum();
    if rho_f != gamma_f {
        violations.push("ρ_f ≠ γ_f".into());
    }
    if Rational::from_integer(rho.value.into()) > rho_f {
        violations.push(format!("ρ = {} > ρ_f = {}", rho.value, format(&rho_f)));
    }
    if gamma_f > Rational::from_integer(gamma.value.into()) {
        violations.push(format!("γ_f = {} > γ = {}", format(&gamma_f), gamma.value));
    }
    Ok(SandwichReport {
        rho: rho.value,
        rho_f,
        gamma_f,
        gamma: gamma.value,
        packing: rho.witness,
        dominating: gamma.witness,
        lp,
        violations,
    })
}
