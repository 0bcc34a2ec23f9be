//! Fishburn's alternating-scheme domains and their exact cardinality,
//! plus classical single-peaked/single-dipped generators.
//!
//! The alternating scheme places, for every triple `i < j < k` of the
//! numeric alternatives `1..n`, one condition on the middle element `j`:
//! never-bottom for even `j` and never-top for odd `j` (or the flipped
//! variant). The resulting domains are connected, copious, peak-pit
//! Condorcet domains of maximal width.

use crate::domain::Domain;
use crate::never::{ConditionSet, NeverCondition, NeverPosition};
use crate::order::{AltId, AlternativeSet};
use crate::{binomial, never, Caps, Error, ExactInt, Result};

/// The two alternating-scheme flavours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeVariant {
    /// Even middle elements are never-bottom, odd never-top.
    EvenBottom,
    /// The flip image: even middle elements never-top, odd never-bottom.
    EvenTop,
}

/// The alternating-scheme condition set on `n >= 2` numeric alternatives.
pub fn alternating_scheme(n: usize, variant: SchemeVariant) -> Result<ConditionSet> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "alternating scheme needs at least 2 alternatives, got {n}"
        )));
    }
    if n > AltId::MAX as usize + 1 {
        return Err(Error::Precondition(format!("{n} alternatives unsupported")));
    }
    let mut set = ConditionSet::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                // parity of the middle element in 1-based numbering
                let even = (j + 1) % 2 == 0;
                let position = match (variant, even) {
                    (SchemeVariant::EvenBottom, true) | (SchemeVariant::EvenTop, false) => {
                        NeverPosition::Bottom
                    }
                    _ => NeverPosition::Top,
                };
                let cond =
                    NeverCondition::new([i as AltId, j as AltId, k as AltId], j as AltId, position)
                        .expect("triple members are distinct");
                set.insert(cond);
            }
        }
    }
    Ok(set)
}

/// The Fishburn domain `F_n` (or its flip for [`SchemeVariant::EvenTop`]),
/// enumerated over the numeric labels `1..n`.
pub fn fishburn_domain(n: usize, variant: SchemeVariant, caps: &Caps) -> Result<Domain> {
    let scheme = alternating_scheme(n, variant)?;
    let alts = AlternativeSet::numeric(n)?;
    never::orders_satisfying(&scheme, &alts, caps)
}

/// Exact cardinality of `F_n`:
/// `(n+3)·2^(n-3) - (n - 3/2)·C(n-2, n/2-1)` for even `n` and
/// `(n+3)·2^(n-3) - ((n-1)/2)·C(n-1, (n-1)/2)` for odd `n`.
///
/// The half-integer factors are handled by evaluating `2·|F_n|` in exact
/// integers and halving after a divisibility check.
pub fn fishburn_cardinality(n: usize) -> ExactInt {
    assert!(n >= 2, "fishburn_cardinality needs n >= 2");
    let n64 = n as u64;
    // 2 * (n+3) * 2^(n-3) = (n+3) * 2^(n-2)
    let lead = ExactInt::from(n64 + 3) << (n - 2);
    let correction = if n.is_multiple_of(2) {
        ExactInt::from(2 * n64 - 3) * binomial(n64 - 2, n64 / 2 - 1)
    } else {
        ExactInt::from(n64 - 1) * binomial(n64 - 1, (n64 - 1) / 2)
    };
    let doubled = lead - correction;
    assert!(
        (&doubled % 2u32) == ExactInt::from(0u32),
        "doubled cardinality must be even"
    );
    doubled >> 1
}

/// All orders single-peaked with respect to the axis `1 < 2 < ... < n`;
/// exactly `2^(n-1)` orders, all satisfying the never-bottom conditions.
///
/// Built from the bottom of each ranking up: the worst remaining
/// alternative is always one of the two ends of the remaining interval.
pub fn single_peaked_domain(n: usize, caps: &Caps) -> Result<Domain> {
    if n == 0 {
        return Err(Error::Precondition("need at least one alternative".into()));
    }
    if n > caps.enumeration_n {
        return Err(Error::cap(
            "single-peaked enumeration",
            n as u64,
            "enumeration",
            caps.enumeration_n as u64,
        ));
    }
    let alts = AlternativeSet::numeric(n)?;
    let mut orders = Vec::with_capacity(1 << (n - 1));
    for choice in 0u32..(1 << (n - 1)) {
        let mut worst_first = Vec::with_capacity(n);
        let (mut lo, mut hi) = (0 as AltId, (n - 1) as AltId);
        for step in 0..(n - 1) {
            if choice & (1 << step) == 0 {
                worst_first.push(lo);
                lo += 1;
            } else {
                worst_first.push(hi);
                hi -= 1;
            }
        }
        worst_first.push(lo); // lo == hi
        worst_first.reverse();
        orders.push(crate::order::LinearOrder::new(worst_first).expect("ends construction"));
    }
    Domain::new(alts, orders)
}

/// The flip image of the single-peaked domain; `2^(n-1)` orders.
pub fn single_dipped_domain(n: usize, caps: &Caps) -> Result<Domain> {
    Ok(single_peaked_domain(n, caps)?.reversed())
}
