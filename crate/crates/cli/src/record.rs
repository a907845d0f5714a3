//! One line of campaign output.

use std::time::Instant;

use anyhow::Result;
use dompack::generators::GenSpec;
use dompack::io::emit_graph6;
use dompack::lp::fractional_domination;
use dompack::rational::{format, int, ratio, Rational};
use dompack::solvers::{exact_domination, exact_packing};
use dompack::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Everything needed to replay an instance and its parameter values. The
/// graph comes from `genspec` when present, else from `graph6`; `x` is
/// stored explicitly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genspec: Option<GenSpec>,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub rho: usize,
    pub dominating_set: Vec<usize>,
    pub packing: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_x: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_x: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    pub wall_ms: f64,
}

impl CampaignRecord {
    /// Exact `γ`, `ρ` (and `γ_X`, `ρ_X` when `x` is given), optionally the
    /// fractional value, and the chain `ρ ≤ γ_f ≤ γ` when it is computed.
    pub fn measure(g: &Graph, genspec: Option<GenSpec>, x: Option<&VertexSet>, fractional: bool) -> Result<Self> {
        let start = Instant::now();
        let none = VertexSet::new();
        let dom = exact_domination(g, &none)?;
        let pack = exact_packing(g, &none)?;
        let mut violations = Vec::new();
        let (gamma_x, rho_x) = match x {
            Some(x) => (
                Some(exact_domination(g, x)?.value),
                Some(exact_packing(g, x)?.value),
            ),
            None => (None, None),
        };
        let gamma_f = if fractional {
            let lp = fractional_domination(g);
            if let Err(e) = lp.certify(g) {
                violations.push(format!("LP certificate: {e}"));
            }
            if int(pack.value as i64) > lp.value || lp.value > int(dom.value as i64) {
                violations.push(format!(
                    "sandwich fails: ρ = {}, γ_f = {}, γ = {}",
                    pack.value,
                    format(&lp.value),
                    dom.value
                ));
            }
            Some(format(&lp.value))
        } else {
            None
        };
        Ok(CampaignRecord {
            index: None,
            genspec,
            graph6: emit_graph6(g),
            n: g.n(),
            m: g.m(),
            gamma: dom.value,
            rho: pack.value,
            dominating_set: dom.witness.to_vec(),
            packing: pack.witness.to_vec(),
            x: x.map(VertexSet::to_vec),
            gamma_x,
            rho_x,
            gamma_f,
            certificate: None,
            bound: None,
            pass: violations.is_empty(),
            violations,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        })
    }

    /// `γ/ρ`; `ρ ≥ 1` always holds without X.
    pub fn ratio(&self) -> Rational {
        ratio(self.gamma as i64, self.rho as i64)
    }

    /// `γ_X/ρ_X` when both are present and `ρ_X > 0`.
    pub fn ratio_x(&self) -> Option<Rational> {
        match (self.gamma_x, self.rho_x) {
            (Some(g), Some(r)) if r > 0 => Some(ratio(g as i64, r as i64)),
            _ => None,
        }
    }

    /// Checks `γ ≤ c·ρ` and `γ_X ≤ c·ρ_X`, recording violations.
    pub fn check_bound(&mut self, c: &Rational) {
        self.bound = Some(format(c));
        if int(self.gamma as i64) > c * int(self.rho as i64) {
            self.violations.push(format!("γ = {} > {}·ρ = {}·{}", self.gamma, format(c), format(c), self.rho));
        }
        if let (Some(gx), Some(rx)) = (self.gamma_x, self.rho_x) {
            if int(gx as i64) > c * int(rx as i64) {
                self.violations.push(format!("γ_X = {gx} > {}·ρ_X = {}·{rx}", format(c), format(c)));
            }
        }
        self.pass = self.violations.is_empty();
    }

    pub fn fail(&mut self, why: String) {
        self.violations.push(why);
        self.pass = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dompack::generators::gen_cycle;

    #[test]
    fn c4_record() {
        let r = CampaignRecord::measure(&gen_cycle(4).unwrap(), None, None, true).unwrap();
        assert_eq!((r.gamma, r.rho), (2, 1));
        assert_eq!(r.gamma_f.as_deref(), Some("4/3"));
        assert!(r.pass);
        let json = serde_json::to_string(&r).unwrap();
        let back: CampaignRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn bound_check() {
        let mut r = CampaignRecord::measure(&gen_cycle(4).unwrap(), None, None, false).unwrap();
        r.check_bound(&int(1));
        assert!(!r.pass);
        assert_eq!(r.bound.as_deref(), Some("1"));
        let mut r = CampaignRecord::measure(&gen_cycle(4).unwrap(), None, None, false).unwrap();
        r.check_bound(&int(2));
        assert!(r.pass);
    }

    #[test]
    fn x_variants() {
        let x: VertexSet = [0, 1, 2, 3].into_iter().collect();
        let r = CampaignRecord::measure(&gen_cycle(4).unwrap(), None, Some(&x), false).unwrap();
        assert_eq!((r.gamma_x, r.rho_x), (Some(0), Some(0)));
        assert_eq!(r.ratio_x(), None);
    }
}
