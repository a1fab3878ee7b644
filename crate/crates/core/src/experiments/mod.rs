//! Reproducible experiments, each producing a [`Report`].

mod bounds;
mod report;
mod suite;
mod table;
mod theorems;

pub use bounds::upper_bounds;
pub use report::{Report, Verdict};
pub use suite::{suite, SuiteConfig};
pub use table::reproduce_table;
pub use theorems::{
    antipodal_products, core_theorem, cube_vs_c6, lemma44, lollipop_theorem, s44, threshold,
    ThresholdConfig,
};

use crate::error::Result;
use crate::families::{Family, FamilySpec};
use crate::graph::Graph;
use serde_json::Value;

/// A graph together with the spec that rebuilds it.
pub(crate) struct Named {
    pub spec: FamilySpec,
    pub graph: Graph,
}

impl Named {
    pub fn new(family: Family) -> Result<Self> {
        Self::seeded(family, 0)
    }

    pub fn seeded(family: Family, seed: u64) -> Result<Self> {
        let spec = FamilySpec::with_seed(family, seed);
        let graph = spec.build()?;
        Ok(Named { spec, graph })
    }

    pub fn value(&self) -> Value {
        serde_json::to_value(&self.spec).expect("family specs serialize")
    }
}
