use serde::{Deserialize, Serialize};

/// Size limits for the exhaustive algorithms.
///
/// Every operation that would otherwise run unbounded checks the relevant
/// field and returns [`Error::CapExceeded`](crate::Error::CapExceeded).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest group order that may be built or counted.
    pub order: usize,
    /// Largest order for which the full subgroup lattice is enumerated.
    pub subgroup_order: usize,
    /// Hard limit on the number of subgroups returned by enumeration.
    pub subgroup_count: usize,
    /// Largest order for conjugate spread computations.
    pub spread_order: usize,
    /// Largest order for automorphism enumeration.
    pub automorphism_order: usize,
    /// Hard limit on the number of automorphisms collected.
    pub automorphism_count: usize,
    /// Orders up to this are checked for associativity triple by triple;
    /// larger tables use Light's test over a generating set.
    pub exhaustive_associativity: usize,
    /// Largest ring or vector space size for exhaustive ring checks.
    pub ring_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            order: 10_000,
            subgroup_order: 512,
            subgroup_count: 100_000,
            spread_order: 512,
            automorphism_order: 64,
            automorphism_count: 200_000,
            exhaustive_associativity: 256,
            ring_size: 10_000,
        }
    }
}
