//! Never conditions `xN{a,b,c}i` and domain generation from condition sets.
//!
//! A condition `xN{a,b,c}i` forbids alternative `x` from occupying position
//! `i` (1 = best) in the restriction of an order to the triple `{a,b,c}`.
//! A domain is a Condorcet domain iff it is nonempty and satisfies at least
//! one such condition on every triple.

use std::collections::BTreeMap;

use crate::domain::Domain;
use crate::order::{AltId, AlternativeSet, LinearOrder};
use crate::{Caps, Error, Result};

/// Position a condition forbids, 1 = best.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum NeverPosition {
    Top,
    Middle,
    Bottom,
}

impl NeverPosition {
    pub fn number(self) -> u8 {
        match self {
            NeverPosition::Top => 1,
            NeverPosition::Middle => 2,
            NeverPosition::Bottom => 3,
        }
    }

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(NeverPosition::Top),
            2 => Ok(NeverPosition::Middle),
            3 => Ok(NeverPosition::Bottom),
            _ => Err(Error::InvalidCondition(format!("position {n} not in 1..=3"))),
        }
    }

    /// Position `4 - i`, the image under order reversal.
    pub fn flipped(self) -> Self {
        match self {
            NeverPosition::Top => NeverPosition::Bottom,
            NeverPosition::Middle => NeverPosition::Middle,
            NeverPosition::Bottom => NeverPosition::Top,
        }
    }

    /// Never-top and never-bottom conditions are the peak-pit conditions.
    pub fn is_peak_pit(self) -> bool {
        !matches!(self, NeverPosition::Middle)
    }
}

/// `xN{a,b,c}i`: within the triple, `x` never occupies position `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NeverCondition {
    triple: [AltId; 3],
    excluded: AltId,
    position: NeverPosition,
}

impl NeverCondition {
    /// The triple may be given in any order; it is stored sorted.
    pub fn new(triple: [AltId; 3], excluded: AltId, position: NeverPosition) -> Result<Self> {
        let mut triple = triple;
        triple.sort_unstable();
        if triple[0] == triple[1] || triple[1] == triple[2] {
            return Err(Error::InvalidCondition("triple members must be distinct".into()));
        }
        if !triple.contains(&excluded) {
            return Err(Error::InvalidCondition(
                "excluded alternative must belong to the triple".into(),
            ));
        }
        Ok(NeverCondition {
            triple,
            excluded,
            position,
        })
    }

    pub fn triple(&self) -> [AltId; 3] {
        self.triple
    }

    pub fn excluded(&self) -> AltId {
        self.excluded
    }

    pub fn position(&self) -> NeverPosition {
        self.position
    }

    /// The condition satisfied by the reversals of the satisfying orders.
    pub fn reversed(&self) -> Self {
        NeverCondition {
            position: self.position.flipped(),
            ..*self
        }
    }

    /// Text form `xN{a,b,c}i`.
    pub fn display(&self, alts: &AlternativeSet) -> String {
        format!(
            "{}N{{{},{},{}}}{}",
            alts.label(self.excluded),
            alts.label(self.triple[0]),
            alts.label(self.triple[1]),
            alts.label(self.triple[2]),
            self.position.number()
        )
    }

    /// Parses the text form `xN{a,b,c}i`.
    pub fn parse(text: &str, alts: &AlternativeSet) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidCondition(format!("{msg} in {text:?}"));
        let open = text.find('{').ok_or_else(|| bad("missing '{'"))?;
        let close = text.find('}').ok_or_else(|| bad("missing '}'"))?;
        if close < open {
            return Err(bad("'}' before '{'"));
        }
        let head = &text[..open];
        let x_label = head
            .strip_suffix('N')
            .ok_or_else(|| bad("expected xN before '{'"))?;
        let excluded = alts
            .index_of(x_label)
            .ok_or_else(|| bad("unknown excluded alternative"))?;
        let members: Vec<&str> = text[open + 1..close].split(',').map(str::trim).collect();
        if members.len() != 3 {
            return Err(bad("triple must have exactly 3 members"));
        }
        let mut triple = [0 as AltId; 3];
        for (slot, label) in triple.iter_mut().zip(&members) {
            *slot = alts
                .index_of(label)
                .ok_or_else(|| bad("unknown triple member"))?;
        }
        let pos_text = text[close + 1..].trim();
        let pos_num: u8 = pos_text
            .parse()
            .map_err(|_| bad("expected position 1..=3 after '}'"))?;
        NeverCondition::new(triple, excluded, NeverPosition::from_number(pos_num)?)
    }
}

/// A set of never conditions over one alternative set, indexed by triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionSet {
    alt_count: usize,
    by_triple: BTreeMap<[AltId; 3], Vec<NeverCondition>>,
}

impl ConditionSet {
    pub fn new(alt_count: usize) -> Self {
        ConditionSet {
            alt_count,
            by_triple: BTreeMap::new(),
        }
    }

    pub fn alt_count(&self) -> usize {
        self.alt_count
    }

    /// Inserts a condition; returns false when it was already present.
    pub fn insert(&mut self, cond: NeverCondition) -> bool {
        assert!(
            (cond.triple[2] as usize) < self.alt_count,
            "condition mentions an alternative outside the set"
        );
        let list = self.by_triple.entry(cond.triple).or_default();
        if list.contains(&cond) {
            return false;
        }
        list.push(cond);
        list.sort_unstable();
        true
    }

    pub fn len(&self) -> usize {
        self.by_triple.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_triple.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &NeverCondition> {
        self.by_triple.values().flatten()
    }

    pub fn for_triple(&self, triple: [AltId; 3]) -> &[NeverCondition] {
        self.by_triple.get(&triple).map_or(&[], Vec::as_slice)
    }

    /// Triples that carry at least one condition, ascending.
    pub fn triples(&self) -> impl Iterator<Item = [AltId; 3]> + '_ {
        self.by_triple.keys().copied()
    }

    /// True when every 3-subset of the alternative set has a condition.
    pub fn is_complete(&self) -> bool {
        let n = self.alt_count;
        if n < 3 {
            return true;
        }
        let expected = n * (n - 1) * (n - 2) / 6;
        self.by_triple.len() == expected
    }
}

/// True iff `u` does not place the condition's alternative at the
/// forbidden position within the triple.
pub fn order_satisfies(u: &LinearOrder, cond: &NeverCondition) -> bool {
    let pattern = u.restrict_pattern(&cond.triple);
    pattern[cond.position.number() as usize - 1] != cond.excluded
}

/// True iff every member of the domain satisfies the condition.
pub fn domain_satisfies(domain: &Domain, cond: &NeverCondition) -> bool {
    domain.orders().iter().all(|u| order_satisfies(u, cond))
}

// ---------------------------------------------------------------------------
// Per-triple viability masks.
//
// Each triple admits 9 candidate conditions (3 members x 3 positions),
// encoded as bits slot*3 + (position-1) where slot is the member's index in
// the sorted triple. A restriction pattern kills exactly the three bits it
// realizes.
// ---------------------------------------------------------------------------

pub(crate) const FULL_MASK: u16 = 0b1_1111_1111;
pub(crate) const PEAK_PIT_MASK: u16 = 0b1_0110_1101;

pub(crate) fn combo_bit(slot: usize, position_index: usize) -> u16 {
    1 << (slot * 3 + position_index)
}

pub(crate) struct TripleViability {
    pub triples: Vec<[AltId; 3]>,
    pub masks: Vec<u16>,
}

fn slot_of(triple: &[AltId; 3], id: AltId) -> usize {
    triple.iter().position(|&m| m == id).expect("id not in triple")
}

/// Surviving condition bits per triple: bit (x, i) stays set iff no order
/// of the domain places `x` at position `i` within the triple.
pub(crate) fn triple_viability(domain: &Domain) -> TripleViability {
    let n = domain.alt_count();
    let positions: Vec<Vec<u8>> = domain.orders().iter().map(LinearOrder::positions).collect();
    let mut triples = Vec::new();
    let mut masks = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let triple = [i as AltId, j as AltId, k as AltId];
                let mut mask = FULL_MASK;
                for pos in &positions {
                    // appearance order of the triple in this ranking
                    let mut slots = [0usize, 1, 2];
                    slots.sort_unstable_by_key(|&s| pos[triple[s] as usize]);
                    let kills = combo_bit(slots[0], 0) | combo_bit(slots[1], 1) | combo_bit(slots[2], 2);
                    mask &= !kills;
                }
                triples.push(triple);
                masks.push(mask);
            }
        }
    }
    TripleViability { triples, masks }
}

pub(crate) fn decode_mask(triple: [AltId; 3], mask: u16) -> Vec<NeverCondition> {
    let mut out = Vec::new();
    for slot in 0..3 {
        for pos_index in 0..3 {
            if mask & combo_bit(slot, pos_index) != 0 {
                let position = NeverPosition::from_number(pos_index as u8 + 1).unwrap();
                out.push(NeverCondition::new(triple, triple[slot], position).unwrap());
            }
        }
    }
    out
}

/// Every never condition satisfied by all orders of the (nonempty) domain.
pub fn conditions_of(domain: &Domain) -> ConditionSet {
    assert!(!domain.is_empty(), "conditions_of requires a nonempty domain");
    let viability = triple_viability(domain);
    let mut set = ConditionSet::new(domain.alt_count());
    for (triple, mask) in viability.triples.iter().zip(&viability.masks) {
        for cond in decode_mask(*triple, *mask) {
            set.insert(cond);
        }
    }
    set
}

// ---------------------------------------------------------------------------
// Prefix DFS over orders with per-triple pruning.
//
// Placing an alternative determines restriction positions incrementally:
// the first member of a triple placed takes its top slot, the second fixes
// both the middle slot and the pending member's bottom slot. Violations are
// therefore detected as early as possible.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum GenPolicy {
    /// Every mask bit is a required condition; killing any bit prunes.
    RequireAll,
    /// Mask bits are surviving candidates; pruning only when none remain.
    KeepAny,
}

pub(crate) fn generate_orders(
    n: usize,
    triples: &[[AltId; 3]],
    init_masks: &[u16],
    policy: GenPolicy,
) -> Vec<LinearOrder> {
    assert_eq!(triples.len(), init_masks.len());
    if n == 0 {
        return vec![];
    }
    let mut alt_triples: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (t, triple) in triples.iter().enumerate() {
        for &m in triple {
            alt_triples[m as usize].push(t as u32);
        }
    }
    let mut masks = init_masks.to_vec();
    let mut prefix: Vec<AltId> = Vec::with_capacity(n);
    let mut placed: u64 = 0;
    let mut out = Vec::new();

    struct Ctx<'a> {
        n: usize,
        triples: &'a [[AltId; 3]],
        alt_triples: &'a [Vec<u32>],
        policy: GenPolicy,
    }

    fn rec(
        ctx: &Ctx,
        masks: &mut Vec<u16>,
        prefix: &mut Vec<AltId>,
        placed: &mut u64,
        out: &mut Vec<LinearOrder>,
    ) {
        if prefix.len() == ctx.n {
            out.push(LinearOrder::new(prefix.clone()).unwrap());
            return;
        }
        for y in 0..ctx.n as AltId {
            let bit = 1u64 << y;
            if *placed & bit != 0 {
                continue;
            }
            let mut undo: Vec<(u32, u16)> = Vec::new();
            let mut ok = true;
            for &t in &ctx.alt_triples[y as usize] {
                let triple = &ctx.triples[t as usize];
                let placed_before = triple
                    .iter()
                    .filter(|&&m| *placed & (1u64 << m) != 0)
                    .count();
                let y_slot = slot_of(triple, y);
                let kills = match placed_before {
                    0 => combo_bit(y_slot, 0),
                    1 => {
                        let third = triple
                            .iter()
                            .copied()
                            .find(|&m| m != y && *placed & (1u64 << m) == 0)
                            .expect("one member must remain unplaced");
                        combo_bit(y_slot, 1) | combo_bit(slot_of(triple, third), 2)
                    }
                    _ => combo_bit(y_slot, 2),
                };
                match ctx.policy {
                    GenPolicy::RequireAll => {
                        if masks[t as usize] & kills != 0 {
                            ok = false;
                            break;
                        }
                    }
                    GenPolicy::KeepAny => {
                        let next = masks[t as usize] & !kills;
                        if next == 0 {
                            ok = false;
                            break;
                        }
                        if next != masks[t as usize] {
                            undo.push((t, masks[t as usize]));
                            masks[t as usize] = next;
                        }
                    }
                }
            }
            if ok {
                *placed |= bit;
                prefix.push(y);
                rec(ctx, masks, prefix, placed, out);
                prefix.pop();
                *placed &= !bit;
            }
            for (t, m) in undo.into_iter().rev() {
                masks[t as usize] = m;
            }
        }
    }

    let ctx = Ctx {
        n,
        triples,
        alt_triples: &alt_triples,
        policy,
    };
    rec(&ctx, &mut masks, &mut prefix, &mut placed, &mut out);
    out
}

/// All orders over `alts` that satisfy every condition in the set.
///
/// An empty result signals an inconsistent condition set.
pub fn orders_satisfying(
    conditions: &ConditionSet,
    alts: &AlternativeSet,
    caps: &Caps,
) -> Result<Domain> {
    let n = alts.len();
    assert_eq!(
        conditions.alt_count(),
        n,
        "condition set is over a different alternative set"
    );
    if n > caps.enumeration_n {
        return Err(Error::cap(
            "order enumeration",
            n as u64,
            "enumeration",
            caps.enumeration_n as u64,
        ));
    }
    let mut triples = Vec::new();
    let mut masks = Vec::new();
    for triple in conditions.triples() {
        let mut mask = 0u16;
        for cond in conditions.for_triple(triple) {
            mask |= combo_bit(
                slot_of(&triple, cond.excluded),
                cond.position.number() as usize - 1,
            );
        }
        triples.push(triple);
        masks.push(mask);
    }
    let orders = generate_orders(n, &triples, &masks, GenPolicy::RequireAll);
    Domain::new(alts.clone(), orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Domain;

    fn letters(n: usize) -> AlternativeSet {
        AlternativeSet::letters(n).unwrap()
    }

    fn cond(alts: &AlternativeSet, text: &str) -> NeverCondition {
        NeverCondition::parse(text, alts).unwrap()
    }

    #[test]
    fn order_satisfaction_examples() {
        let alts = letters(3);
        let b_never_first = cond(&alts, "bN{a,b,c}1");
        let abc = alts.parse_order("abc").unwrap();
        let bac = alts.parse_order("bac").unwrap();
        assert!(order_satisfies(&abc, &b_never_first));
        assert!(!order_satisfies(&bac, &b_never_first));

        // evaluation via restriction on a larger set
        let alts5 = letters(5);
        let u = alts5.parse_order("d a e b c").unwrap();
        let a_never_middle = cond(&alts5, "aN{a,d,e}2");
        // restriction of "d a e b c" to {a,d,e} is "d a e": a is second
        assert!(!order_satisfies(&u, &a_never_middle));
    }

    #[test]
    fn domain_satisfaction_examples() {
        let alts = letters(3);
        let cd3t = Domain::from_strs(&alts, &["abc", "acb", "cab", "cba"]).unwrap();
        assert!(domain_satisfies(&cd3t, &cond(&alts, "bN{a,b,c}1")));
        assert!(!domain_satisfies(&cd3t, &cond(&alts, "aN{a,b,c}1")));
        let singleton = Domain::from_strs(&alts, &["abc"]).unwrap();
        assert!(domain_satisfies(&singleton, &cond(&alts, "bN{a,b,c}1")));
    }

    #[test]
    fn conditions_of_examples() {
        let alts = letters(3);
        let cd3t = Domain::from_strs(&alts, &["abc", "acb", "cab", "cba"]).unwrap();
        let set = conditions_of(&cd3t);
        assert_eq!(set.len(), 1);
        assert_eq!(set.iter().next().unwrap(), &cond(&alts, "bN{a,b,c}1"));

        // one order pins all six conditions on its triple
        let singleton = Domain::from_strs(&alts, &["abc"]).unwrap();
        let set = conditions_of(&singleton);
        assert_eq!(set.len(), 6);
        for text in [
            "aN{a,b,c}2",
            "aN{a,b,c}3",
            "bN{a,b,c}1",
            "bN{a,b,c}3",
            "cN{a,b,c}1",
            "cN{a,b,c}2",
        ] {
            assert!(set.iter().any(|c| *c == cond(&alts, text)), "{text} missing");
        }
    }

    #[test]
    fn orders_satisfying_examples() {
        let caps = Caps::default();
        let alts = letters(3);
        let mut set = ConditionSet::new(3);
        set.insert(cond(&alts, "bN{a,b,c}1"));
        let domain = orders_satisfying(&set, &alts, &caps).unwrap();
        assert_eq!(
            domain.render_orders(),
            vec!["a b c", "a c b", "c a b", "c b a"]
        );

        // unconstrained: all 6 orders
        let empty = ConditionSet::new(3);
        let all = orders_satisfying(&empty, &alts, &caps).unwrap();
        assert_eq!(all.len(), 6);

        // inconsistency shows up as an empty result
        let mut unsat = ConditionSet::new(3);
        for text in ["aN{a,b,c}1", "bN{a,b,c}1", "cN{a,b,c}1"] {
            unsat.insert(cond(&alts, text));
        }
        assert!(orders_satisfying(&unsat, &alts, &caps).unwrap().is_empty());
    }

    #[test]
    fn orders_satisfying_respects_cap() {
        let caps = Caps {
            enumeration_n: 3,
            ..Caps::default()
        };
        let alts = letters(4);
        let set = ConditionSet::new(4);
        assert!(matches!(
            orders_satisfying(&set, &alts, &caps),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn condition_text_roundtrip() {
        let alts = AlternativeSet::numeric(12).unwrap();
        let c = NeverCondition::new([9, 2, 11], 9, NeverPosition::Bottom).unwrap();
        let text = c.display(&alts);
        assert_eq!(text, "10N{3,10,12}3");
        assert_eq!(NeverCondition::parse(&text, &alts).unwrap(), c);
        assert!(NeverCondition::parse("aN{a,b}1", &letters(3)).is_err());
        assert!(NeverCondition::parse("dN{a,b,c}1", &letters(3)).is_err());
        assert!(NeverCondition::parse("aN{a,b,c}4", &letters(3)).is_err());
    }

    #[test]
    fn reversal_duality() {
        let alts = letters(4);
        let u = alts.parse_order("bdca").unwrap();
        for c in [
            cond(&alts, "bN{a,b,c}1"),
            cond(&alts, "cN{b,c,d}2"),
            cond(&alts, "aN{a,b,d}3"),
        ] {
            assert_eq!(
                order_satisfies(&u, &c),
                order_satisfies(&u.reverse(), &c.reversed())
            );
        }
    }

    #[test]
    fn completeness_flag() {
        let alts = letters(4);
        let mut set = ConditionSet::new(4);
        assert!(!set.is_complete());
        for t in [
            "aN{a,b,c}1",
            "aN{a,b,d}1",
            "aN{a,c,d}1",
            "bN{b,c,d}1",
        ] {
            set.insert(cond(&alts, t));
        }
        assert!(set.is_complete());
        assert!(ConditionSet::new(2).is_complete());
    }
}
