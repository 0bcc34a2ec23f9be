//! Domains as first-class values: Condorcet verification, maximality,
//! extension search, structural predicates, and isomorphism testing.

use std::fmt;

use crate::never::{generate_orders, triple_viability, GenPolicy, PEAK_PIT_MASK};
use crate::order::{self, AltId, AlternativeSet, LinearOrder};
use crate::{Caps, Error, Result};

/// A deduplicated, lexicographically sorted set of linear orders over one
/// alternative set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    alts: AlternativeSet,
    orders: Vec<LinearOrder>,
}

impl Domain {
    /// Canonicalizes: sorts, deduplicates, and checks order lengths.
    pub fn new(alts: AlternativeSet, mut orders: Vec<LinearOrder>) -> Result<Self> {
        for u in &orders {
            if u.len() != alts.len() {
                return Err(Error::InvalidOrder(format!(
                    "order over {} alternatives in a domain over {}",
                    u.len(),
                    alts.len()
                )));
            }
        }
        orders.sort_unstable();
        orders.dedup();
        Ok(Domain { alts, orders })
    }

    pub fn empty(alts: AlternativeSet) -> Self {
        Domain {
            alts,
            orders: Vec::new(),
        }
    }

    /// Parses each string with [`AlternativeSet::parse_order`].
    pub fn from_strs(alts: &AlternativeSet, orders: &[&str]) -> Result<Self> {
        let parsed: Vec<LinearOrder> = orders
            .iter()
            .map(|s| alts.parse_order(s))
            .collect::<Result<_>>()?;
        Domain::new(alts.clone(), parsed)
    }

    /// The universal domain `L(A)`. Intended for small sets.
    pub fn universe(alts: &AlternativeSet) -> Self {
        Domain {
            alts: alts.clone(),
            orders: order::all_orders(alts.len()),
        }
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn alt_count(&self) -> usize {
        self.alts.len()
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LinearOrder> {
        self.orders.iter()
    }

    pub fn contains(&self, u: &LinearOrder) -> bool {
        self.orders.binary_search(u).is_ok()
    }

    /// The domain with `u` added (no-op when already present).
    pub fn with_order(&self, u: LinearOrder) -> Result<Self> {
        let mut orders = self.orders.clone();
        orders.push(u);
        Domain::new(self.alts.clone(), orders)
    }

    /// Same orders under replacement labels.
    pub fn with_labels<I, S>(&self, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let alts = AlternativeSet::from_labels(labels)?;
        if alts.len() != self.alts.len() {
            return Err(Error::InvalidAlternatives(format!(
                "{} labels for a domain over {} alternatives",
                alts.len(),
                self.alts.len()
            )));
        }
        Ok(Domain {
            alts,
            orders: self.orders.clone(),
        })
    }

    /// Restriction to a subset of alternatives, relabelled to dense ids in
    /// ascending original-id order. Duplicates collapse.
    pub fn restrict(&self, keep: &[AltId]) -> Domain {
        let mut keep: Vec<AltId> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let alts = self.alts.subset(&keep);
        let mut orders: Vec<LinearOrder> = self
            .orders
            .iter()
            .map(|u| u.restrict(&keep))
            .collect();
        orders.sort_unstable();
        orders.dedup();
        Domain { alts, orders }
    }

    /// The flip image: every order reversed.
    pub fn reversed(&self) -> Domain {
        let mut orders: Vec<LinearOrder> =
            self.orders.iter().map(LinearOrder::reverse).collect();
        orders.sort_unstable();
        Domain {
            alts: self.alts.clone(),
            orders,
        }
    }

    /// Orders rendered as label strings, canonical (sorted) sequence.
    pub fn render_orders(&self) -> Vec<String> {
        self.orders.iter().map(|u| self.alts.render_order(u)).collect()
    }

    // ------------------------------------------------------------------
    // Structural predicates
    // ------------------------------------------------------------------

    /// Condorcet check via the never-condition characterization: nonempty
    /// and, for every triple, some (x, i) is avoided by all restrictions.
    pub fn is_condorcet(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        triple_viability(self).masks.iter().all(|&m| m != 0)
    }

    /// Brute-force oracle: every 3-voter profile drawn from the domain
    /// (with repetition) has a transitive majority tournament.
    ///
    /// Equivalent to [`is_condorcet`](Self::is_condorcet) for every domain;
    /// kept as an independent check of that equivalence.
    pub fn is_condorcet_oracle(&self, caps: &Caps) -> Result<bool> {
        if self.is_empty() {
            return Ok(false);
        }
        let d = self.len() as u64;
        let requested = d.saturating_mul(d).saturating_mul(d);
        if requested > caps.oracle_triples {
            return Err(Error::cap(
                "3-voter profile oracle",
                requested,
                "oracle",
                caps.oracle_triples,
            ));
        }
        let n = self.alt_count();
        let positions: Vec<Vec<u8>> = self.orders.iter().map(LinearOrder::positions).collect();
        // voter order is irrelevant to the majority relation
        for i in 0..positions.len() {
            for j in i..positions.len() {
                for k in j..positions.len() {
                    let trio = [&positions[i], &positions[j], &positions[k]];
                    if !majority_of_three_is_transitive(&trio, n) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// All orders outside the domain whose addition keeps it Condorcet.
    pub fn extensions(&self, caps: &Caps) -> Result<Vec<LinearOrder>> {
        if !self.is_condorcet() {
            return Err(Error::NotCondorcet);
        }
        let n = self.alt_count();
        if n > caps.extension_n {
            return Err(Error::cap(
                "extension search",
                n as u64,
                "extension",
                caps.extension_n as u64,
            ));
        }
        let viability = triple_viability(self);
        let candidates = generate_orders(n, &viability.triples, &viability.masks, GenPolicy::KeepAny);
        Ok(candidates
            .into_iter()
            .filter(|w| !self.contains(w))
            .collect())
    }

    /// True iff no single order can be added while staying Condorcet.
    pub fn is_maximal(&self, caps: &Caps) -> Result<bool> {
        Ok(self.extensions(caps)?.is_empty())
    }

    /// Every pair restriction contains both of its orders.
    pub fn is_ample(&self) -> bool {
        let n = self.alt_count();
        for a in 0..n as AltId {
            for b in (a + 1)..n as AltId {
                let mut saw_ab = false;
                let mut saw_ba = false;
                for u in &self.orders {
                    if u.prefers(a, b) {
                        saw_ab = true;
                    } else {
                        saw_ba = true;
                    }
                    if saw_ab && saw_ba {
                        break;
                    }
                }
                if !(saw_ab && saw_ba) {
                    return false;
                }
            }
        }
        true
    }

    /// Every triple restriction has exactly four distinct orders.
    pub fn is_copious(&self) -> bool {
        let n = self.alt_count();
        let positions: Vec<Vec<u8>> = self.orders.iter().map(LinearOrder::positions).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let triple = [i as AltId, j as AltId, k as AltId];
                    let mut patterns = [false; 6];
                    let mut count = 0;
                    for pos in &positions {
                        let mut slots = [0usize, 1, 2];
                        slots.sort_unstable_by_key(|&s| pos[triple[s] as usize]);
                        let id = perm3_index(slots);
                        if !patterns[id] {
                            patterns[id] = true;
                            count += 1;
                        }
                    }
                    if count != 4 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every triple admits a surviving never-top or never-bottom condition.
    ///
    /// False for non-Condorcet domains (some triple has no surviving
    /// condition at all).
    pub fn is_peak_pit(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        triple_viability(self)
            .masks
            .iter()
            .all(|&m| m & PEAK_PIT_MASK != 0)
    }

    /// Contains some order together with its full reversal.
    pub fn has_maximal_width(&self) -> bool {
        self.orders.iter().any(|u| self.contains(&u.reverse()))
    }
}

/// Ranks a permutation of {0,1,2} into 0..5.
fn perm3_index(slots: [usize; 3]) -> usize {
    slots[0] * 2 + usize::from(slots[1] > slots[2])
}

// ---------------------------------------------------------------------------
// Profiles and majority relations
// ---------------------------------------------------------------------------

/// A nonempty sequence of voters' orders; repetition allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    voters: Vec<LinearOrder>,
}

impl Profile {
    pub fn new(voters: Vec<LinearOrder>) -> Result<Self> {
        let Some(first) = voters.first() else {
            return Err(Error::Precondition("profile must be nonempty".into()));
        };
        let n = first.len();
        if voters.iter().any(|v| v.len() != n) {
            return Err(Error::Precondition(
                "profile voters are over different alternative sets".into(),
            ));
        }
        Ok(Profile { voters })
    }

    pub fn voters(&self) -> &[LinearOrder] {
        &self.voters
    }

    pub fn len(&self) -> usize {
        self.voters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_odd(&self) -> bool {
        self.voters.len() % 2 == 1
    }

    pub fn alt_count(&self) -> usize {
        self.voters[0].len()
    }
}

/// Outcome of a pairwise majority comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOutcome {
    /// The smaller id beats the larger.
    LowBeatsHigh,
    /// The larger id beats the smaller.
    HighBeatsLow,
    Tie,
}

/// Pairwise majority outcomes of a profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityRelation {
    n: usize,
    /// margin[pair(a,b)] = |a over b| - |b over a| for a < b
    margins: Vec<i64>,
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

impl MajorityRelation {
    pub fn alt_count(&self) -> usize {
        self.n
    }

    pub fn outcome(&self, a: AltId, b: AltId) -> PairOutcome {
        assert_ne!(a, b, "no pairwise outcome for a single alternative");
        let (low, high, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let margin = sign * self.margins[pair_index(self.n, low as usize, high as usize)];
        match margin.cmp(&0) {
            std::cmp::Ordering::Greater => PairOutcome::LowBeatsHigh,
            std::cmp::Ordering::Less => PairOutcome::HighBeatsLow,
            std::cmp::Ordering::Equal => PairOutcome::Tie,
        }
    }

    /// True when `a` strictly beats `b`.
    pub fn beats(&self, a: AltId, b: AltId) -> bool {
        let (low, high) = if a < b { (a, b) } else { (b, a) };
        let margin = self.margins[pair_index(self.n, low as usize, high as usize)];
        if a < b {
            margin > 0
        } else {
            margin < 0
        }
    }

    pub fn has_ties(&self) -> bool {
        self.margins.contains(&0)
    }
}

/// Pairwise outcomes by strict count comparison; ties recorded when counts
/// are equal (possible only for even profiles).
pub fn majority_relation(profile: &Profile) -> MajorityRelation {
    let n = profile.alt_count();
    let mut margins = vec![0i64; n * (n - 1) / 2];
    for voter in profile.voters() {
        let pos = voter.positions();
        for a in 0..n {
            for b in (a + 1)..n {
                if pos[a] < pos[b] {
                    margins[pair_index(n, a, b)] += 1;
                } else {
                    margins[pair_index(n, a, b)] -= 1;
                }
            }
        }
    }
    MajorityRelation { n, margins }
}

/// True iff the tie-free relation is transitive (equivalently acyclic).
pub fn is_transitive(relation: &MajorityRelation) -> Result<bool> {
    if relation.has_ties() {
        return Err(Error::Precondition(
            "transitivity is only defined for tie-free majority relations".into(),
        ));
    }
    let n = relation.n as AltId;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b
                    && b != c
                    && a != c
                    && relation.beats(a, b)
                    && relation.beats(b, c)
                    && !relation.beats(a, c)
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Transitivity of the majority of three voters given by position arrays.
fn majority_of_three_is_transitive(trio: &[&Vec<u8>; 3], n: usize) -> bool {
    // beats[a][b] for a != b
    let mut beats = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let votes = trio
                .iter()
                .filter(|pos| pos[a] < pos[b])
                .count();
            beats[a * n + b] = votes >= 2;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a == b || !beats[a * n + b] {
                continue;
            }
            for c in 0..n {
                if c != a && c != b && beats[b * n + c] && !beats[a * n + c] {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

/// A bijection between two alternative sets of equal size, as `map[id1] = id2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bijection {
    map: Vec<AltId>,
}

impl Bijection {
    pub fn new(map: Vec<AltId>) -> Result<Self> {
        // a bijection is exactly a permutation of 0..n-1
        LinearOrder::new(map.clone())
            .map_err(|_| Error::Precondition("mapping is not a bijection".into()))?;
        Ok(Bijection { map })
    }

    pub fn identity(n: usize) -> Self {
        Bijection {
            map: (0..n).map(|i| i as AltId).collect(),
        }
    }

    pub fn map(&self) -> &[AltId] {
        &self.map
    }

    pub fn image_of(&self, id: AltId) -> AltId {
        self.map[id as usize]
    }

    /// Pointwise image of an order: `psi(a1 a2 ... an) = psi(a1) ... psi(an)`.
    pub fn apply(&self, u: &LinearOrder) -> LinearOrder {
        let ranking = u.ranking().iter().map(|&id| self.map[id as usize]).collect();
        LinearOrder::new(ranking).expect("bijection image of a permutation")
    }

    pub fn inverse(&self) -> Bijection {
        let mut map = vec![0 as AltId; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            map[j as usize] = i as AltId;
        }
        Bijection { map }
    }

    /// Renders as `a->x b->y ...` using the two label tables.
    pub fn display(&self, from: &AlternativeSet, to: &AlternativeSet) -> String {
        self.map
            .iter()
            .enumerate()
            .map(|(i, &j)| format!("{}->{}", from.label(i as AltId), to.label(j)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .map
            .iter()
            .enumerate()
            .map(|(i, &j)| format!("{i}->{j}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Checks whether `psi` maps `d1` exactly onto `d2` (reversed images when
/// `flip` is set).
pub fn is_isomorphism(d1: &Domain, d2: &Domain, psi: &Bijection, flip: bool) -> bool {
    if d1.alt_count() != d2.alt_count() || d1.len() != d2.len() {
        return false;
    }
    if psi.map().len() != d1.alt_count() {
        return false;
    }
    d1.orders().iter().all(|u| {
        let image = if flip { psi.apply(u).reverse() } else { psi.apply(u) };
        d2.contains(&image)
    })
}

/// Searches for a bijection with `psi(d1) = d2` (or reversed images when
/// `flip`). Absent immediately when sizes differ.
///
/// Any candidate is fully determined by the image of one order, so the
/// search seeds the lexicographically smallest order of `d1` with each
/// order of the (possibly flipped) target.
pub fn find_isomorphism(
    d1: &Domain,
    d2: &Domain,
    flip: bool,
    caps: &Caps,
) -> Result<Option<Bijection>> {
    if d1.alt_count() != d2.alt_count() || d1.len() != d2.len() {
        return Ok(None);
    }
    let n = d1.alt_count();
    if n > caps.isomorphism_n {
        return Err(Error::cap(
            "isomorphism search",
            n as u64,
            "isomorphism",
            caps.isomorphism_n as u64,
        ));
    }
    if d1.is_empty() {
        return Ok(Some(Bijection::identity(n)));
    }
    let target = if flip { d2.reversed() } else { d2.clone() };
    let seed = &d1.orders()[0];
    for image in target.orders() {
        let mut map = vec![0 as AltId; n];
        for (pos, &id) in seed.ranking().iter().enumerate() {
            map[id as usize] = image.ranking()[pos];
        }
        let psi = Bijection { map };
        if d1.orders().iter().all(|u| target.contains(&psi.apply(u))) {
            return Ok(Some(psi));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(n: usize) -> AlternativeSet {
        AlternativeSet::letters(n).unwrap()
    }

    fn dom(alts: &AlternativeSet, orders: &[&str]) -> Domain {
        Domain::from_strs(alts, orders).unwrap()
    }

    fn cd3t(alts: &AlternativeSet) -> Domain {
        dom(alts, &["abc", "acb", "cab", "cba"])
    }

    fn cd3m(alts: &AlternativeSet) -> Domain {
        dom(alts, &["abc", "bca", "acb", "cba"])
    }

    fn cd3b(alts: &AlternativeSet) -> Domain {
        dom(alts, &["abc", "bac", "bca", "cba"])
    }

    #[test]
    fn canonical_storage_dedups_and_sorts() {
        let alts = letters(3);
        let d = dom(&alts, &["cba", "abc", "cba"]);
        assert_eq!(d.len(), 2);
        assert_eq!(d.render_orders(), vec!["a b c", "c b a"]);
    }

    #[test]
    fn majority_relation_examples() {
        let alts = letters(3);
        let order = |s| alts.parse_order(s).unwrap();

        // single voter: relation mirrors the ballot
        let p = Profile::new(vec![order("abc")]).unwrap();
        let m = majority_relation(&p);
        assert!(m.beats(0, 1) && m.beats(0, 2) && m.beats(1, 2));
        assert!(is_transitive(&m).unwrap());

        // the classic cycle
        let p = Profile::new(vec![order("abc"), order("bca"), order("cab")]).unwrap();
        let m = majority_relation(&p);
        assert!(m.beats(0, 1) && m.beats(1, 2) && m.beats(2, 0));
        assert!(!is_transitive(&m).unwrap());

        // 2-vs-1 counts
        let p = Profile::new(vec![order("abc"), order("abc"), order("cba")]).unwrap();
        let m = majority_relation(&p);
        assert!(m.beats(0, 1) && m.beats(0, 2) && m.beats(1, 2));
        assert!(is_transitive(&m).unwrap());

        // even profile records the tie
        let p = Profile::new(vec![order("abc"), order("cba")]).unwrap();
        let m = majority_relation(&p);
        assert!(m.has_ties());
        assert_eq!(m.outcome(0, 2), PairOutcome::Tie);
        assert!(is_transitive(&m).is_err());
    }

    #[test]
    fn condorcet_examples() {
        let alts = letters(3);
        assert!(cd3t(&alts).is_condorcet());
        assert!(cd3m(&alts).is_condorcet());
        assert!(cd3b(&alts).is_condorcet());
        assert!(!Domain::universe(&alts).is_condorcet());
        assert!(dom(&alts, &["bca"]).is_condorcet());
        assert!(!Domain::empty(alts).is_condorcet());
    }

    #[test]
    fn oracle_examples() {
        let caps = Caps::default();
        let alts = letters(3);
        assert!(cd3t(&alts).is_condorcet_oracle(&caps).unwrap());
        let cycle = dom(&alts, &["abc", "bca", "cab"]);
        assert!(!cycle.is_condorcet_oracle(&caps).unwrap());
        assert!(dom(&alts, &["cab"]).is_condorcet_oracle(&caps).unwrap());
    }

    #[test]
    fn oracle_cap() {
        let caps = Caps {
            oracle_triples: 26,
            ..Caps::default()
        };
        let alts = letters(3);
        assert!(cd3t(&alts).is_condorcet_oracle(&caps).is_err());
    }

    #[test]
    fn extensions_and_maximality() {
        let caps = Caps::default();
        let alts = letters(3);
        for d in [cd3t(&alts), cd3m(&alts), cd3b(&alts)] {
            assert!(d.extensions(&caps).unwrap().is_empty());
            assert!(d.is_maximal(&caps).unwrap());
        }
        let singleton = dom(&alts, &["abc"]);
        let ext = singleton.extensions(&caps).unwrap();
        assert!(ext.contains(&alts.parse_order("cba").unwrap()));
        assert!(!singleton.is_maximal(&caps).unwrap());
        // adding any extension preserves the Condorcet property
        for w in ext {
            assert!(singleton.with_order(w).unwrap().is_condorcet());
        }
        // non-Condorcet input is a domain error
        assert!(matches!(
            Domain::universe(&alts).extensions(&caps),
            Err(Error::NotCondorcet)
        ));
    }

    #[test]
    fn extension_cap() {
        let caps = Caps {
            extension_n: 2,
            ..Caps::default()
        };
        let alts = letters(3);
        assert!(matches!(
            cd3t(&alts).extensions(&caps),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn ample_and_copious() {
        let alts = letters(3);
        assert!(cd3t(&alts).is_copious());
        assert!(cd3t(&alts).is_ample());
        assert!(!dom(&alts, &["abc"]).is_ample());
        assert!(!dom(&alts, &["abc", "cba"]).is_copious());
        // a reversed pair covers both orders of every pair
        assert!(dom(&alts, &["abc", "cba"]).is_ample());
        // copious implies ample on the three n=3 maximal domains
        for d in [cd3t(&alts), cd3m(&alts), cd3b(&alts)] {
            assert!(d.is_copious() && d.is_ample());
        }
    }

    #[test]
    fn peak_pit_examples() {
        let alts = letters(3);
        // never-middle only
        assert!(!cd3m(&alts).is_peak_pit());
        assert!(cd3t(&alts).is_peak_pit());
        assert!(cd3b(&alts).is_peak_pit());
        assert!(dom(&alts, &["abc"]).is_peak_pit());
    }

    #[test]
    fn maximal_width_examples() {
        let alts = letters(3);
        assert!(cd3t(&alts).has_maximal_width());
        assert!(!dom(&alts, &["abc", "acb"]).has_maximal_width());
        let two = AlternativeSet::letters(2).unwrap();
        assert!(dom(&two, &["ab", "ba"]).has_maximal_width());
    }

    #[test]
    fn restriction_and_flip() {
        let alts = letters(4);
        let d = dom(&alts, &["abcd", "bacd", "dbca"]);
        let r = d.restrict(&[0, 1, 2]);
        assert_eq!(r.render_orders(), vec!["a b c", "b a c", "b c a"]);
        let flipped = d.reversed();
        assert!(flipped.contains(&alts.parse_order("dcba").unwrap()));
        assert_eq!(flipped.reversed(), d);
    }

    #[test]
    fn isomorphism_examples() {
        let caps = Caps::default();
        let alts = letters(3);
        // flip-isomorphic under the identity mapping
        let psi = find_isomorphism(&cd3t(&alts), &cd3b(&alts), true, &caps)
            .unwrap()
            .expect("flip isomorphism exists");
        assert_eq!(psi, Bijection::identity(3));
        assert!(is_isomorphism(&cd3t(&alts), &cd3b(&alts), &psi, true));
        // not isomorphic without the flip
        assert!(find_isomorphism(&cd3t(&alts), &cd3b(&alts), false, &caps)
            .unwrap()
            .is_none());
        // self-isomorphism finds the identity
        let d = cd3m(&alts);
        let psi = find_isomorphism(&d, &d, false, &caps).unwrap().unwrap();
        assert_eq!(psi, Bijection::identity(3));
        // size mismatch is immediately absent
        let singleton = dom(&alts, &["abc"]);
        assert!(find_isomorphism(&d, &singleton, false, &caps).unwrap().is_none());
    }

    #[test]
    fn isomorphism_respects_cap() {
        let caps = Caps {
            isomorphism_n: 2,
            ..Caps::default()
        };
        let alts = letters(3);
        assert!(find_isomorphism(&cd3t(&alts), &cd3t(&alts), false, &caps).is_err());
    }

    #[test]
    fn bijection_validation_and_display() {
        assert!(Bijection::new(vec![0, 0, 1]).is_err());
        let psi = Bijection::new(vec![1, 0, 3, 2]).unwrap();
        let from = AlternativeSet::numeric(4).unwrap();
        let to = letters(4);
        assert_eq!(psi.display(&from, &to), "1->b 2->a 3->d 4->c");
        assert_eq!(psi.inverse().inverse(), psi);
        let u = from.parse_order("1234").unwrap();
        assert_eq!(psi.apply(&u).ranking(), &[1, 0, 3, 2]);
    }
}
