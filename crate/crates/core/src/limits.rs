//! Resource limits for the exponential-cost operations.
//!
//! Every limit is a refusal threshold, not a correctness knob: operations
//! return [`crate::Error::ResourceLimit`] instead of silently degrading.

/// Caps for subset expansion, orientation enumeration, basis enumeration and
/// the deletion-contraction recursion. `TUTTE_MAX_BITS` in the environment
/// overrides `max_subset_bits`.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Largest ground set for 2^m subset expansion.
    pub max_subset_bits: usize,
    /// Largest edge count for 2^|E| orientation enumeration.
    pub max_orientation_edges: usize,
    /// Largest ground set for explicit basis enumeration.
    pub max_basis_enum_elements: usize,
    /// Node budget for the deletion-contraction recursion.
    pub delcon_node_budget: u64,
    /// Largest ground set for subset-exhaustive checks (inequalities (7)-(9)).
    pub max_exhaustive_bits: usize,
    /// Bases-list matroids above this size skip exchange-axiom verification
    /// and are flagged unverified.
    pub bases_verify_max_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        let max_subset_bits = std::env::var("TUTTE_MAX_BITS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .map(|v| v.min(40))
            .unwrap_or(26);
        Limits {
            max_subset_bits,
            max_orientation_edges: 22,
            max_basis_enum_elements: 24,
            delcon_node_budget: 50_000_000,
            max_exhaustive_bits: 20,
            bases_verify_max_elements: 20,
        }
    }
}

impl Limits {
    /// Limits loose enough for every desk-scale instance; used by tests.
    pub fn relaxed() -> Self {
        Limits {
            max_subset_bits: 30,
            max_orientation_edges: 26,
            max_basis_enum_elements: 28,
            delcon_node_budget: u64::MAX,
            max_exhaustive_bits: 24,
            bases_verify_max_elements: 20,
        }
    }
}
