//! Text-based passwords: token sequences read off labelled graphs.

mod methods;
mod noise;

pub use methods::{
    cycle_formula_count, cycle_neighbor_method, cycle_start_variants, euler_block_count, euler_hamilton_method,
    lobster_neighbor_method, multiple_meaning_emit, path_method, path_neighbor_method, path_neighbor_variant_count,
    rooted_block_emission, spider_neighbor_method, Kind, NeighborPolicy,
};
pub use noise::{noise_decode, noise_encode, Noise};

use crate::label::{render_all, Label};
use std::fmt;

/// Labels in visit order plus a note on how they were produced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TbPaw {
    pub tokens: Vec<Label>,
    pub provenance: String,
}

impl TbPaw {
    pub fn new(tokens: Vec<Label>, provenance: impl Into<String>) -> Self {
        TbPaw { tokens, provenance: provenance.into() }
    }

    pub fn from_numbers(nums: &[i64], provenance: impl Into<String>) -> Self {
        TbPaw::new(nums.iter().map(|&x| Label::Num(x)).collect(), provenance)
    }

    pub fn rendered(&self) -> String {
        render_all(&self.tokens)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// The ⊎ concatenation.
    pub fn join(&self, other: &TbPaw) -> TbPaw {
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        let provenance = match (self.provenance.is_empty(), other.provenance.is_empty()) {
            (true, _) => other.provenance.clone(),
            (_, true) => self.provenance.clone(),
            _ => format!("{} ⊎ {}", self.provenance, other.provenance),
        };
        TbPaw { tokens, provenance }
    }

    pub fn reversed(&self) -> TbPaw {
        let mut tokens = self.tokens.clone();
        tokens.reverse();
        TbPaw { tokens, provenance: format!("reciprocal of {}", self.provenance) }
    }
}

impl fmt::Display for TbPaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rendered())
    }
}
