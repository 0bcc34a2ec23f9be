/// Enumeration limits for operations that would otherwise grow factorially.
///
/// Every capped operation takes a `&Caps` and returns
/// [`Error::ResourceCap`](crate::Error::ResourceCap) beyond the limit
/// instead of silently blowing up. The CLI exposes per-command overrides.
#[derive(Clone, Debug)]
pub struct Caps {
    /// Largest alternative count for interval enumeration.
    pub interval_n: usize,
    /// Largest alternative count for generating all orders that satisfy a
    /// condition set (Fishburn and single-peaked enumeration included).
    pub enumeration_n: usize,
    /// Largest alternative count for extension/maximality search.
    pub extension_n: usize,
    /// Largest |D|^3 for the 3-voter profile oracle.
    pub oracle_triples: u64,
    /// Largest alternative count for isomorphism search.
    pub isomorphism_n: usize,
    /// Largest domain size for graph construction and graph predicates.
    pub graph_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            interval_n: 10,
            enumeration_n: 12,
            extension_n: 9,
            oracle_triples: 1_000_000,
            isomorphism_n: 10,
            graph_vertices: 256,
        }
    }
}
