//! Bound-verification campaigns and single constructive runs.

use std::time::Instant;

use anyhow::{bail, Result};
use clap::ValueEnum;
use dompack::classes::{find_homogeneous_ordering, find_simple_elimination_ordering, is_tree};
use dompack::construct::{
    chordal_bipartite_dompack, homogeneously_orderable_dompack, strongly_chordal_dompack, tree_dompack,
    DomPackCertificate,
};
use dompack::generators::{derive_seed, generate, planar_edge_count, GenSpec, TwinOp, CHORDAL_BIPARTITE_MAX_N};
use dompack::rational::{format, int, Rational};
use dompack::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::record::CampaignRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyClass {
    Tree,
    StronglyChordal,
    ChordalBipartite,
    HomogeneouslyOrderable,
    Planar,
    /// Square rook graphs `K_k □ K_k` with `k` in the `--n` range.
    Rook,
    /// `G(n, p)` with `p` uniform in `[0.1, 0.9]`.
    Any,
}

impl VerifyClass {
    /// The constant proved for the class; 1 for the unbounded families.
    pub fn default_bound(self) -> Rational {
        match self {
            VerifyClass::ChordalBipartite | VerifyClass::HomogeneouslyOrderable => int(2),
            VerifyClass::Planar => int(7),
            _ => int(1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructClass {
    Tree,
    StronglyChordal,
    ChordalBipartite,
    HomogeneouslyOrderable,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub class: VerifyClass,
    pub bound: Rational,
    pub count: usize,
    pub n_lo: usize,
    pub n_hi: usize,
    pub seed: u64,
    pub x_prob: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub class: VerifyClass,
    pub bound: String,
    pub instances: usize,
    pub violations: usize,
    pub max_ratio: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_ratio_x: Option<String>,
    pub wall_s: f64,
}

impl VerifyConfig {
    /// Generator spec of instance `index`; its seed is
    /// `derive_seed(seed, index)`, which also drives the choice of `n` and
    /// the family parameters.
    pub fn spec(&self, index: usize) -> Result<GenSpec> {
        let seed = derive_seed(self.seed, index as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(self.n_lo..=self.n_hi);
        Ok(match self.class {
            VerifyClass::Tree => GenSpec::Tree { n, seed },
            VerifyClass::StronglyChordal => GenSpec::Interval {
                n,
                max_len: rng.gen_range(1..=2 * n),
                seed,
            },
            VerifyClass::ChordalBipartite => GenSpec::ChordalBipartite {
                n,
                density_lo: 0.1,
                density_hi: 0.9,
                seed,
            },
            VerifyClass::HomogeneouslyOrderable => GenSpec::DistanceHereditary {
                n,
                ops: vec![TwinOp::Pendant, TwinOp::TrueTwin, TwinOp::FalseTwin],
                seed,
            },
            VerifyClass::Planar => {
                let n = n.max(3);
                GenSpec::Planar {
                    n,
                    m: planar_edge_count(n, rng.gen_range(0.3..=1.0)),
                    flips: 2 * n,
                    seed,
                }
            }
            VerifyClass::Rook => {
                let k = self.n_lo + index % (self.n_hi - self.n_lo + 1);
                GenSpec::Rook { k, l: k }
            }
            VerifyClass::Any => GenSpec::Gnp {
                n,
                p: rng.gen_range(0.1..=0.9),
                seed,
            },
        })
    }

    fn validate(&self) -> Result<()> {
        if self.class == VerifyClass::ChordalBipartite && self.n_hi > CHORDAL_BIPARTITE_MAX_N {
            bail!("chordal bipartite campaigns need n ≤ {CHORDAL_BIPARTITE_MAX_N}");
        }
        if !(0.0..=1.0).contains(&self.x_prob) {
            bail!("--x-prob must lie in [0, 1]");
        }
        Ok(())
    }

    /// Generates, measures and checks instance `index`.
    pub fn evaluate(&self, index: usize) -> Result<CampaignRecord> {
        let start = Instant::now();
        let spec = self.spec(index)?;
        let g = generate(&spec)?.graph;
        let x = (self.class == VerifyClass::Planar).then(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(self.seed ^ 0x5eed_0f_u64, index as u64));
            (0..g.n()).filter(|_| rng.gen_bool(self.x_prob)).collect::<VertexSet>()
        });
        let mut rec = CampaignRecord::measure(&g, Some(spec), x.as_ref(), true)?;
        rec.index = Some(index);
        rec.check_bound(&self.bound);
        let class = match self.class {
            VerifyClass::Tree => Some(ConstructClass::Tree),
            VerifyClass::StronglyChordal => Some(ConstructClass::StronglyChordal),
            VerifyClass::ChordalBipartite => Some(ConstructClass::ChordalBipartite),
            VerifyClass::HomogeneouslyOrderable => Some(ConstructClass::HomogeneouslyOrderable),
            _ => None,
        };
        if let Some(class) = class {
            match construct(class, &g, 0) {
                Ok(cert) => {
                    if cert.p().len() > rec.rho || cert.d().len() < rec.gamma {
                        rec.fail("certificate sizes contradict the exact values".into());
                    }
                    rec.certificate = Some(cert.to_json());
                }
                Err(e) => rec.fail(format!("construction: {e}")),
            }
        }
        rec.wall_ms = start.elapsed().as_secs_f64() * 1e3;
        Ok(rec)
    }

    /// All instances in parallel, returned in index order.
    pub fn run(&self) -> Result<(Vec<CampaignRecord>, Summary)> {
        self.validate()?;
        let start = Instant::now();
        let records = (0..self.count)
            .into_par_iter()
            .map(|i| self.evaluate(i))
            .collect::<Result<Vec<_>>>()?;
        let max_ratio = records.iter().map(CampaignRecord::ratio).max().unwrap_or_else(|| int(0));
        let max_ratio_x = records.iter().filter_map(CampaignRecord::ratio_x).max();
        let summary = Summary {
            class: self.class,
            bound: format(&self.bound),
            instances: records.len(),
            violations: records.iter().filter(|r| !r.pass).count(),
            max_ratio: format(&max_ratio),
            max_ratio_x: max_ratio_x.as_ref().map(format),
            wall_s: start.elapsed().as_secs_f64(),
        };
        Ok((records, summary))
    }
}

/// Recognizes `g` as a member of `class` and runs its construction.
pub fn construct(class: ConstructClass, g: &Graph, root: usize) -> Result<DomPackCertificate> {
    Ok(match class {
        ConstructClass::Tree => {
            if !is_tree(g) {
                bail!("recognition failed: not a tree");
            }
            tree_dompack(g, root)?
        }
        ConstructClass::StronglyChordal => {
            let Some(ord) = find_simple_elimination_ordering(g) else {
                bail!("recognition failed: no simple elimination ordering (not strongly chordal)");
            };
            strongly_chordal_dompack(g, &ord)?
        }
        ConstructClass::ChordalBipartite => chordal_bipartite_dompack(g)?,
        ConstructClass::HomogeneouslyOrderable => {
            let Some(ord) = find_homogeneous_ordering(g)? else {
                bail!("recognition failed: no homogeneous ordering");
            };
            homogeneously_orderable_dompack(g, &ord)?
        }
    })
}
