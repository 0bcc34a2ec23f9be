//! Linear orders over finite alternative sets.
//!
//! Alternatives are dense integer ids `0..n-1` with an optional label
//! table; a [`LinearOrder`] is a permutation of those ids, best first.
//! Betweenness follows Kemeny: `v` lies between `u` and `w` when it agrees
//! with every pairwise comparison on which `u` and `w` agree.

use std::fmt;

use crate::{Caps, Error, Result};

/// Index of an alternative within its set.
pub type AltId = u8;

/// A finite set of alternatives. Id `i` carries `labels[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternativeSet {
    labels: Vec<String>,
}

impl AlternativeSet {
    /// Builds a set from explicit labels. Labels must be nonempty, unique,
    /// and free of whitespace and `#`.
    pub fn from_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidAlternatives("no alternatives".into()));
        }
        if labels.len() > AltId::MAX as usize + 1 {
            return Err(Error::InvalidAlternatives(format!(
                "{} alternatives exceed the supported maximum of {}",
                labels.len(),
                AltId::MAX as usize + 1
            )));
        }
        for label in &labels {
            if label.is_empty() || label.contains(char::is_whitespace) || label.contains('#') {
                return Err(Error::InvalidAlternatives(format!(
                    "bad label {label:?}: labels must be nonempty and free of whitespace and '#'"
                )));
            }
        }
        let mut seen = labels.clone();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidAlternatives("duplicate label".into()));
        }
        Ok(AlternativeSet { labels })
    }

    /// Labels `"1".."n"`, the convention for numeric alternative sets.
    pub fn numeric(n: usize) -> Result<Self> {
        Self::from_labels((1..=n).map(|i| i.to_string()))
    }

    /// Labels `"a"`, `"b"`, ... for up to 26 alternatives.
    pub fn letters(n: usize) -> Result<Self> {
        if n > 26 {
            return Err(Error::InvalidAlternatives(format!(
                "letter labels support at most 26 alternatives, got {n}"
            )));
        }
        Self::from_labels((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: AltId) -> &str {
        &self.labels[id as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<AltId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as AltId)
    }

    /// True when every label is a single character, enabling the compact
    /// order form (e.g. `2413`).
    pub fn single_char(&self) -> bool {
        self.labels.iter().all(|l| l.chars().count() == 1)
    }

    /// The labelled subset obtained by keeping `keep` (ascending ids);
    /// new id `i` carries the label of `keep[i]`.
    pub fn subset(&self, keep: &[AltId]) -> AlternativeSet {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        AlternativeSet {
            labels: keep.iter().map(|&id| self.labels[id as usize].clone()).collect(),
        }
    }

    /// Renders an order as space-separated labels, best first.
    pub fn render_order(&self, u: &LinearOrder) -> String {
        assert_eq!(u.len(), self.len(), "order length does not match alternative set");
        u.ranking()
            .iter()
            .map(|&id| self.label(id))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses an order given as space-separated labels, or as a compact
    /// single token when all labels are one character.
    pub fn parse_order(&self, text: &str) -> Result<LinearOrder> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let n = self.len();
        let ids: Vec<AltId> = if tokens.len() == n {
            tokens
                .iter()
                .map(|t| {
                    self.index_of(t)
                        .ok_or_else(|| Error::InvalidOrder(format!("unknown alternative {t:?}")))
                })
                .collect::<Result<_>>()?
        } else if tokens.len() == 1 && self.single_char() {
            tokens[0]
                .chars()
                .map(|c| {
                    let s = c.to_string();
                    self.index_of(&s)
                        .ok_or_else(|| Error::InvalidOrder(format!("unknown alternative {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            return Err(Error::InvalidOrder(format!(
                "expected {n} alternatives, got {} token(s)",
                tokens.len()
            )));
        };
        LinearOrder::new(ids)
    }
}

/// A strict total order on `0..n-1`, stored as a ranking, best first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    ranking: Vec<AltId>,
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder[{}]", self)
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.ranking.iter().map(|id| id.to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

impl LinearOrder {
    /// Validates that `ranking` is a permutation of `0..n-1`.
    pub fn new(ranking: Vec<AltId>) -> Result<Self> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &id in &ranking {
            if (id as usize) >= n || seen[id as usize] {
                return Err(Error::InvalidOrder(format!(
                    "ranking is not a permutation of 0..{n}"
                )));
            }
            seen[id as usize] = true;
        }
        Ok(LinearOrder { ranking })
    }

    /// The order `0 1 ... n-1`.
    pub fn identity(n: usize) -> Self {
        assert!(n <= AltId::MAX as usize + 1, "too many alternatives");
        LinearOrder {
            ranking: (0..n).map(|i| i as AltId).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn ranking(&self) -> &[AltId] {
        &self.ranking
    }

    /// Alternative occupying 0-based position `pos` (0 = best).
    pub fn alternative_at(&self, pos: usize) -> AltId {
        self.ranking[pos]
    }

    /// 0-based position of alternative `x` (0 = best).
    pub fn position_of(&self, x: AltId) -> usize {
        self.ranking
            .iter()
            .position(|&id| id == x)
            .expect("alternative not in order")
    }

    /// Inverse permutation: `positions()[x]` is the position of `x`.
    pub fn positions(&self) -> Vec<u8> {
        let mut pos = vec![0u8; self.ranking.len()];
        for (i, &id) in self.ranking.iter().enumerate() {
            pos[id as usize] = i as u8;
        }
        pos
    }

    /// True when `a` is ranked above `b`.
    pub fn prefers(&self, a: AltId, b: AltId) -> bool {
        self.position_of(a) < self.position_of(b)
    }

    /// The completely reversed order.
    pub fn reverse(&self) -> Self {
        let mut ranking = self.ranking.clone();
        ranking.reverse();
        LinearOrder { ranking }
    }

    /// Swaps the alternatives at positions `i` and `i+1`.
    pub fn adjacent_swap(&self, i: usize) -> Self {
        assert!(i + 1 < self.ranking.len(), "swap position out of range");
        let mut ranking = self.ranking.clone();
        ranking.swap(i, i + 1);
        LinearOrder { ranking }
    }

    /// Subsequence of the ranking containing exactly the members of
    /// `subset`, keeping their original ids.
    ///
    /// Panics when `subset` is empty or contains foreign ids.
    pub fn restrict_pattern(&self, subset: &[AltId]) -> Vec<AltId> {
        assert!(!subset.is_empty(), "restriction to an empty subset");
        let n = self.ranking.len();
        let mut member = vec![false; n];
        for &id in subset {
            assert!((id as usize) < n, "foreign alternative id {id}");
            member[id as usize] = true;
        }
        let pattern: Vec<AltId> = self
            .ranking
            .iter()
            .copied()
            .filter(|&id| member[id as usize])
            .collect();
        assert_eq!(pattern.len(), subset.len(), "duplicate ids in subset");
        pattern
    }

    /// Restriction to `subset`, relabelled to dense ids `0..|subset|-1`
    /// in ascending original-id order.
    pub fn restrict(&self, subset: &[AltId]) -> Self {
        let mut keep: Vec<AltId> = subset.to_vec();
        keep.sort_unstable();
        let pattern = self.restrict_pattern(&keep);
        let ranking = pattern
            .iter()
            .map(|&id| keep.binary_search(&id).unwrap() as AltId)
            .collect();
        LinearOrder { ranking }
    }

    /// Kemeny betweenness: true iff `self` agrees with every pairwise
    /// comparison on which `u` and `w` agree.
    pub fn is_between(&self, u: &Self, w: &Self) -> bool {
        assert_eq!(self.len(), u.len(), "mismatched alternative sets");
        assert_eq!(self.len(), w.len(), "mismatched alternative sets");
        between_by_positions(&self.positions(), &u.positions(), &w.positions())
    }

    /// True iff `other` equals `self` with one pair of consecutive
    /// positions transposed.
    pub fn is_adjacent(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len(), "mismatched alternative sets");
        let a = &self.ranking;
        let b = &other.ranking;
        let Some(first) = (0..a.len()).find(|&i| a[i] != b[i]) else {
            return false;
        };
        if first + 1 >= a.len() || a[first] != b[first + 1] || a[first + 1] != b[first] {
            return false;
        }
        a[first + 2..] == b[first + 2..]
    }

    /// Number of pairs on which the two orders disagree.
    pub fn kendall_distance(&self, other: &Self) -> usize {
        assert_eq!(self.len(), other.len(), "mismatched alternative sets");
        kendall_by_positions(&self.positions(), &other.positions())
    }
}

/// Betweenness on precomputed position arrays.
pub(crate) fn between_by_positions(pv: &[u8], pu: &[u8], pw: &[u8]) -> bool {
    let n = pv.len();
    for a in 0..n {
        for b in (a + 1)..n {
            let in_u = pu[a] < pu[b];
            if in_u == (pw[a] < pw[b]) && (pv[a] < pv[b]) != in_u {
                return false;
            }
        }
    }
    true
}

pub(crate) fn kendall_by_positions(pa: &[u8], pb: &[u8]) -> usize {
    let n = pa.len();
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            if (pa[a] < pa[b]) != (pb[a] < pb[b]) {
                count += 1;
            }
        }
    }
    count
}

/// The interval `[u, w]`: every order between `u` and `w`.
///
/// Computed by breadth-first closure over adjacent transpositions filtered
/// by betweenness, which reaches the whole interval because linear
/// extensions of `u ∩ w` are connected under adjacent swaps.
pub fn interval(u: &LinearOrder, w: &LinearOrder, caps: &Caps) -> Result<Vec<LinearOrder>> {
    assert_eq!(u.len(), w.len(), "mismatched alternative sets");
    let n = u.len();
    if n > caps.interval_n {
        return Err(Error::cap("interval enumeration", n as u64, "interval", caps.interval_n as u64));
    }
    let pu = u.positions();
    let pw = w.positions();
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(u.clone());
    let mut queue = vec![u.clone()];
    while let Some(x) = queue.pop() {
        for i in 0..n.saturating_sub(1) {
            let y = x.adjacent_swap(i);
            if !seen.contains(&y) && between_by_positions(&y.positions(), &pu, &pw) {
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// All `n!` orders on `0..n-1`, lexicographically. Intended for small `n`.
pub fn all_orders(n: usize) -> Vec<LinearOrder> {
    assert!(n <= 10, "all_orders is for small n only");
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut current = LinearOrder::identity(n);
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let r = &mut current.ranking;
        let Some(i) = (0..r.len() - 1).rev().find(|&i| r[i] < r[i + 1]) else {
            break;
        };
        let j = (i + 1..r.len()).rev().find(|&j| r[j] > r[i]).unwrap();
        r.swap(i, j);
        r[i + 1..].reverse();
    }
    out
}

/// All interleavings of two sequences of distinct ids, in lexicographic
/// order of the positions assigned to `b`.
pub fn interleavings(a: &[AltId], b: &[AltId]) -> Vec<Vec<AltId>> {
    use itertools::Itertools;
    let total = a.len() + b.len();
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for slots in (0..total).combinations(b.len()) {
        let mut merged = Vec::with_capacity(total);
        let (mut ia, mut ib) = (0, 0);
        for pos in 0..total {
            if ib < slots.len() && slots[ib] == pos {
                merged.push(b[ib]);
                ib += 1;
            } else {
                merged.push(a[ia]);
                ia += 1;
            }
        }
        out.push(merged);
    }
    out
}

/// All shuffles of `u` and `v`, with `v`'s ids offset by `u.len()` so the
/// result ranges over `0..n+m-1`. Contains `uv` and `vu`; size `C(n+m, m)`.
pub fn shuffles(u: &LinearOrder, v: &LinearOrder) -> Vec<LinearOrder> {
    let offset = u.len() as AltId;
    let shifted: Vec<AltId> = v.ranking().iter().map(|&id| id + offset).collect();
    interleavings(u.ranking(), &shifted)
        .into_iter()
        .map(|ranking| LinearOrder { ranking })
        .collect()
}
