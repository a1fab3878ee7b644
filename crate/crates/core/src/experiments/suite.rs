//! The full reproduction suite.

use super::{
    antipodal_products, core_theorem, cube_vs_c6, lemma44, lollipop_theorem, reproduce_table, s44,
    threshold, upper_bounds, Report, ThresholdConfig,
};
use crate::error::Result;
use crate::families::{lollipop, Family, FamilySpec, GraphSource};
use crate::graph::Graph;
use crate::logic::{defines_check, triangle_sentence, ClassFilter};
use crate::pattern::{check_large_degree_lemma, check_stell};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest graphs in the enumeration checks.
    pub nmax: usize,
    /// Witness scale for the table rows.
    pub table_n: usize,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            nmax: 7,
            table_n: 4,
            timings: false,
        }
    }
}

type Job = Box<dyn Fn() -> Result<Vec<Report>> + Send + Sync>;

fn one(f: impl Fn() -> Result<Report> + Send + Sync + 'static) -> Job {
    Box::new(move || Ok(vec![f()?]))
}

fn spec(family: Family) -> GraphSource {
    GraphSource::Spec(Box::new(FamilySpec::new(family)))
}

fn jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let SuiteConfig {
        seed,
        nmax,
        table_n,
        ..
    } = cfg.clone();
    let triangle = ThresholdConfig {
        pattern: spec(Family::Complete { n: 3 }),
        n: 100,
        trials: 500,
        seed,
        p: None,
        alpha: None,
    };
    vec![
        Box::new(move || reproduce_table(table_n, seed)),
        Box::new(move || upper_bounds(nmax)),
        one(|| s44(3)),
        one(|| s44(4)),
        one(move || lemma44(nmax.min(8))),
        one(cube_vs_c6),
        one(antipodal_products),
        one(|| lollipop_theorem(3, 2)),
        one(|| lollipop_theorem(4, 3)),
        one(|| core_theorem(3, spec(Family::Complete { n: 4 }), 3)),
        one(move || threshold(&triangle)),
        one(move || check_large_degree_lemma(nmax.min(8))),
        one(move || check_stell(nmax.min(8))),
        one(move || {
            defines_check(
                &triangle_sentence(),
                &Graph::complete(3),
                &ClassFilter::connected(),
                nmax.min(7),
            )
        }),
        one(move || {
            let filter = ClassFilter {
                connected: true,
                min_vertices: 4,
                ..Default::default()
            };
            defines_check(&triangle_sentence(), &lollipop(3, 1)?, &filter, nmax.min(7))
        }),
    ]
}

/// Runs every experiment in parallel. Reports come back sorted by experiment
/// name and then by inputs, whatever the scheduling.
pub fn suite(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let timings = cfg.timings;
    let batches: Vec<Vec<Report>> = jobs(cfg)
        .into_par_iter()
        .map(|job| {
            let start = std::time::Instant::now();
            let mut reports = job()?;
            if timings {
                let ms = start.elapsed().as_millis() as u64;
                for r in &mut reports {
                    r.runtime_ms = ms;
                }
            }
            Ok(reports)
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<Report> = batches.into_iter().flatten().collect();
    all.sort_by_cached_key(|r| (r.experiment.clone(), r.inputs.to_string()));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trip() {
        let c = SuiteConfig::default();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<SuiteConfig>(&text).unwrap(), c);
        assert_eq!(jobs(&c).len(), 15);
    }
}
