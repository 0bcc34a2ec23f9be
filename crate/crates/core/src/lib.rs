//! Construction, composition, and analysis of Condorcet domains.
//!
//! A *Condorcet domain* is a set of linear orders over a finite set of
//! alternatives such that every odd-voter profile drawn from it has a
//! transitive majority relation. This crate provides:
//!
//! - linear orders and restriction/betweenness machinery ([`order`]),
//! - never conditions `xN{a,b,c}i` and domain generation from condition
//!   sets ([`never`]),
//! - domains with Condorcet verification, a brute-force profile oracle,
//!   maximality search, and structural predicates ([`domain`]),
//! - the induced domain graph, connectivity notions, median-graph
//!   verification, maximal chains, and inversion triples ([`graph`]),
//! - Fishburn's alternating-scheme domains with their exact cardinality
//!   formula, plus single-peaked generators ([`fishburn`]),
//! - concatenation, shuffle domains, and the tensor product of domains
//!   with exact cardinality ([`compose`]),
//! - text/JSON file formats ([`io`]) and seeded corpus sampling
//!   ([`sample`]).

pub mod caps;
pub mod compose;
pub mod domain;
pub mod error;
pub mod fishburn;
pub mod graph;
pub mod io;
pub mod never;
pub mod order;
pub mod sample;

pub use caps::Caps;
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Arbitrary-precision nonnegative integer used by the cardinality formulas.
///
/// Values in scope exceed 10^12, so all cardinality arithmetic is exact.
pub type ExactInt = num_bigint::BigUint;

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::from(0u32);
    }
    num_integer::binomial(ExactInt::from(n), ExactInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), ExactInt::from(10u32));
        assert_eq!(binomial(9, 4), ExactInt::from(126u32));
        assert_eq!(binomial(0, 0), ExactInt::from(1u32));
        assert_eq!(binomial(3, 5), ExactInt::from(0u32));
    }

    #[test]
    fn binomial_large_value_is_exact() {
        // C(40, 20) appears in the tensor cardinality of two 20-alternative domains.
        assert_eq!(
            binomial(40, 20).to_string(),
            "137846528820"
        );
    }
}
