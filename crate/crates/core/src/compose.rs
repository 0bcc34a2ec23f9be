//! Concatenation, shuffle domains, and the tensor product of Condorcet
//! domains, with exact cardinality bookkeeping.
//!
//! Disjointness is manufactured deterministically: the right operand's ids
//! are shifted by the left operand's size, so ids below the split always
//! come from the left factor. Labels are kept verbatim; a right-hand label
//! colliding with a left-hand one gains `'` suffixes until unique.

use std::cmp::Ordering;

use crate::domain::Domain;
use crate::fishburn::fishburn_cardinality;
use crate::order::{self, AltId, AlternativeSet, LinearOrder};
use crate::{binomial, Error, ExactInt, Result};

/// A tensor product together with its audit fields: the seam order `uv`
/// and the part sizes behind the cardinality identity
/// `|D| = |D1|·|D2| + C(n+m, m) - 1`.
#[derive(Clone, Debug)]
pub struct CompositionResult {
    pub domain: Domain,
    pub seam: LinearOrder,
    pub left_size: usize,
    pub right_size: usize,
    pub shuffle_size: usize,
}

fn combined_alts(left: &AlternativeSet, right: &AlternativeSet) -> AlternativeSet {
    let mut labels: Vec<String> = left.labels().to_vec();
    for label in right.labels() {
        let mut candidate = label.clone();
        while labels.contains(&candidate) {
            candidate.push('\'');
        }
        labels.push(candidate);
    }
    AlternativeSet::from_labels(labels).expect("disambiguated labels are unique")
}

fn shift_ranking(v: &LinearOrder, offset: AltId) -> Vec<AltId> {
    v.ranking().iter().map(|&id| id + offset).collect()
}

/// The concatenation: every order of the left factor wholly above every
/// order of the right factor. Size `|D1|·|D2|`.
pub fn concatenate(left: &Domain, right: &Domain) -> Domain {
    let alts = combined_alts(left.alternatives(), right.alternatives());
    let offset = left.alt_count() as AltId;
    let mut orders = Vec::with_capacity(left.len() * right.len());
    for x in left.orders() {
        for y in right.orders() {
            let mut ranking = x.ranking().to_vec();
            ranking.extend(shift_ranking(y, offset));
            orders.push(LinearOrder::new(ranking).expect("concatenation of permutations"));
        }
    }
    Domain::new(alts, orders).expect("concatenation over the combined set")
}

/// The domain of all shuffles of `u` and `v`: every interleaving keeping
/// each order internally intact. Size `C(n+m, m)`.
pub fn shuffle_domain(
    u: &LinearOrder,
    u_alts: &AlternativeSet,
    v: &LinearOrder,
    v_alts: &AlternativeSet,
) -> Domain {
    assert_eq!(u.len(), u_alts.len(), "left order does not match its set");
    assert_eq!(v.len(), v_alts.len(), "right order does not match its set");
    let alts = combined_alts(u_alts, v_alts);
    let orders = order::shuffles(u, v);
    Domain::new(alts, orders).expect("shuffles over the combined set")
}

/// The tensor product `(D1 (x) D2)(u, v)`: the concatenation united with
/// the shuffle domain of `u` and `v`. The two parts overlap exactly in the
/// seam order `uv`.
///
/// Requires `u` in `D1`, `v` in `D2`, and both factors Condorcet.
pub fn tensor(
    left: &Domain,
    right: &Domain,
    u: &LinearOrder,
    v: &LinearOrder,
) -> Result<CompositionResult> {
    if !left.contains(u) {
        return Err(Error::Precondition(
            "designated left order is not in the left domain".into(),
        ));
    }
    if !right.contains(v) {
        return Err(Error::Precondition(
            "designated right order is not in the right domain".into(),
        ));
    }
    if !left.is_condorcet() || !right.is_condorcet() {
        return Err(Error::NotCondorcet);
    }
    let concatenation = concatenate(left, right);
    let shuffles = order::shuffles(u, v);
    let shuffle_size = shuffles.len();

    let mut seam_ranking = u.ranking().to_vec();
    seam_ranking.extend(shift_ranking(v, left.alt_count() as AltId));
    let seam = LinearOrder::new(seam_ranking).expect("seam is a permutation");

    let mut orders = concatenation.orders().to_vec();
    orders.extend(shuffles);
    let domain = Domain::new(concatenation.alternatives().clone(), orders)?;

    let expected = tensor_cardinality(
        &ExactInt::from(left.len() as u64),
        &ExactInt::from(right.len() as u64),
        left.alt_count() as u64,
        right.alt_count() as u64,
    );
    assert_eq!(
        ExactInt::from(domain.len() as u64),
        expected,
        "tensor parts must overlap exactly in the seam"
    );
    Ok(CompositionResult {
        domain,
        seam,
        left_size: left.len(),
        right_size: right.len(),
        shuffle_size,
    })
}

/// Exact tensor cardinality `s1·s2 + C(n+m, m) - 1` for factor sizes `s1`,
/// `s2` over `m` and `n` alternatives.
pub fn tensor_cardinality(s1: &ExactInt, s2: &ExactInt, m: u64, n: u64) -> ExactInt {
    s1 * s2 + binomial(n + m, m) - 1u32
}

/// The lexicographically smallest order whose reversal also belongs to the
/// domain, when the domain has maximal width.
pub fn reversal_pair(domain: &Domain) -> Option<&LinearOrder> {
    domain
        .orders()
        .iter()
        .find(|u| domain.contains(&u.reverse()))
}

/// One row of the hypothesis scan: `|F_n (x) F_n|` against `|F_2n|`.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub n: u64,
    pub product: ExactInt,
    pub doubled: ExactInt,
    pub ordering: Ordering,
}

/// Formula-only comparison of `|F_n (x) F_n|` with `|F_2n|` for
/// `n = 2..=max_n`, and the first `n` with strict exceedance.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub rows: Vec<ScanRow>,
    pub first_exceedance: Option<u64>,
}

pub fn hypothesis_scan(max_n: u64) -> ScanResult {
    assert!(max_n >= 3, "scan needs max_n >= 3");
    let mut rows = Vec::new();
    let mut first_exceedance = None;
    for n in 2..=max_n {
        let fn_card = fishburn_cardinality(n as usize);
        let product = tensor_cardinality(&fn_card, &fn_card, n, n);
        let doubled = fishburn_cardinality(2 * n as usize);
        let ordering = product.cmp(&doubled);
        if ordering == Ordering::Greater && first_exceedance.is_none() {
            first_exceedance = Some(n);
        }
        rows.push(ScanRow {
            n,
            product,
            doubled,
            ordering,
        });
    }
    ScanResult {
        rows,
        first_exceedance,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fishburn::{fishburn_domain, SchemeVariant};
    use crate::Caps;

    fn letters(n: usize) -> AlternativeSet {
        AlternativeSet::letters(n).unwrap()
    }

    fn dom(alts: &AlternativeSet, orders: &[&str]) -> Domain {
        Domain::from_strs(alts, orders).unwrap()
    }

    #[test]
    fn concatenation_examples() {
        let two = letters(2);
        let d1 = dom(&two, &["ab", "ba"]);
        let cd = AlternativeSet::from_labels(["c", "d"]).unwrap();
        let d2 = dom(&cd, &["cd", "dc"]);
        let cat = concatenate(&d1, &d2);
        assert_eq!(
            cat.render_orders(),
            vec!["a b c d", "a b d c", "b a c d", "b a d c"]
        );
        assert!(cat.is_condorcet());

        // singletons concatenate to the single order xy
        let s1 = dom(&two, &["ab"]);
        let s2 = dom(&cd, &["dc"]);
        assert_eq!(concatenate(&s1, &s2).render_orders(), vec!["a b d c"]);
    }

    #[test]
    fn concatenation_sizes() {
        let caps = Caps::default();
        let f3 = fishburn_domain(3, SchemeVariant::EvenBottom, &caps).unwrap();
        let f2 = fishburn_domain(2, SchemeVariant::EvenBottom, &caps).unwrap();
        assert_eq!(concatenate(&f3, &f2).len(), 8);
    }

    #[test]
    fn label_collisions_gain_primes() {
        let two = letters(2);
        let d = dom(&two, &["ab", "ba"]);
        let cat = concatenate(&d, &d);
        assert_eq!(
            cat.alternatives().labels(),
            &["a", "b", "a'", "b'"]
        );
    }

    #[test]
    fn shuffle_domain_examples() {
        let two = letters(2);
        let cd = AlternativeSet::from_labels(["c", "d"]).unwrap();
        let ab = two.parse_order("ab").unwrap();
        let cd_order = cd.parse_order("cd").unwrap();
        let sh = shuffle_domain(&ab, &two, &cd_order, &cd);
        assert_eq!(
            sh.render_orders(),
            vec!["a b c d", "a c b d", "a c d b", "c a b d", "c a d b", "c d a b"]
        );
        assert!(sh.is_condorcet());

        // a (+) b = {ab, ba}
        let one = letters(1);
        let b_set = AlternativeSet::from_labels(["b"]).unwrap();
        let sh = shuffle_domain(
            &one.parse_order("a").unwrap(),
            &one,
            &b_set.parse_order("b").unwrap(),
            &b_set,
        );
        assert_eq!(sh.render_orders(), vec!["a b", "b a"]);

        // |321 (+) 54| = C(5,2) = 10
        let n3 = AlternativeSet::numeric(3).unwrap();
        let n45 = AlternativeSet::from_labels(["4", "5"]).unwrap();
        let sh = shuffle_domain(
            &n3.parse_order("321").unwrap(),
            &n3,
            &n45.parse_order("54").unwrap(),
            &n45,
        );
        assert_eq!(sh.len(), 10);
    }

    #[test]
    fn shuffle_domain_is_symmetric_on_labels() {
        let two = letters(2);
        let cd = AlternativeSet::from_labels(["c", "d"]).unwrap();
        let u = two.parse_order("ba").unwrap();
        let v = cd.parse_order("cd").unwrap();
        let forward = shuffle_domain(&u, &two, &v, &cd);
        let backward = shuffle_domain(&v, &cd, &u, &two);
        let mut f = forward.render_orders();
        let mut b = backward.render_orders();
        f.sort();
        b.sort();
        assert_eq!(f, b);
    }

    #[test]
    fn tensor_seam_and_cardinality() {
        let caps = Caps::default();
        let f3 = fishburn_domain(3, SchemeVariant::EvenBottom, &caps).unwrap();
        let f2 = fishburn_domain(2, SchemeVariant::EvenBottom, &caps)
            .unwrap()
            .with_labels(["4", "5"])
            .unwrap();
        let u = f3.alternatives().parse_order("321").unwrap();
        let v = f2.alternatives().parse_order("54").unwrap();
        let result = tensor(&f3, &f2, &u, &v).unwrap();
        assert_eq!(result.domain.len(), 17);
        assert_eq!(result.left_size * result.right_size, 8);
        assert_eq!(result.shuffle_size, 10);
        assert!(result.domain.contains(&result.seam));
        assert_eq!(
            result.domain.alternatives().render_order(&result.seam),
            "3 2 1 5 4"
        );
        assert!(result.domain.is_condorcet());
    }

    #[test]
    fn tensor_of_singletons_is_the_shuffle_domain() {
        let two = letters(2);
        let cd = AlternativeSet::from_labels(["c", "d"]).unwrap();
        let s1 = dom(&two, &["ba"]);
        let s2 = dom(&cd, &["cd"]);
        let u = two.parse_order("ba").unwrap();
        let v = cd.parse_order("cd").unwrap();
        let result = tensor(&s1, &s2, &u, &v).unwrap();
        let sh = shuffle_domain(&u, &two, &v, &cd);
        assert_eq!(result.domain, sh);
    }

    #[test]
    fn tensor_preconditions() {
        let two = letters(2);
        let cd = AlternativeSet::from_labels(["c", "d"]).unwrap();
        let d1 = dom(&two, &["ab", "ba"]);
        let d2 = dom(&cd, &["cd", "dc"]);
        let foreign = two.parse_order("ab").unwrap();
        let v = cd.parse_order("cd").unwrap();
        let not_member = dom(&two, &["ba"]);
        assert!(matches!(
            tensor(&not_member, &d2, &foreign, &v),
            Err(Error::Precondition(_))
        ));
        // non-Condorcet factor
        let three = letters(3);
        let all = Domain::universe(&three);
        let u3 = three.parse_order("abc").unwrap();
        assert!(matches!(
            tensor(&all, &d2, &u3, &v),
            Err(Error::NotCondorcet)
        ));
        let _ = d1;
    }

    #[test]
    fn tensor_cardinality_values() {
        // 4·2 + C(5,2) - 1 = 17
        assert_eq!(
            tensor_cardinality(&ExactInt::from(4u32), &ExactInt::from(2u32), 3, 2),
            ExactInt::from(17u32)
        );
        // singleton factors leave only the shuffles
        assert_eq!(
            tensor_cardinality(&ExactInt::from(1u32), &ExactInt::from(1u32), 4, 3),
            binomial(7, 3)
        );
        let f20 = fishburn_cardinality(20);
        assert_eq!(
            tensor_cardinality(&f20, &f20, 20, 20).to_string(),
            "4611858343415"
        );
    }

    #[test]
    fn reversal_pair_examples() {
        let caps = Caps::default();
        let f4 = fishburn_domain(4, SchemeVariant::EvenBottom, &caps).unwrap();
        let pair = reversal_pair(&f4).unwrap();
        assert_eq!(f4.alternatives().render_order(pair), "1 2 3 4");
        let three = letters(3);
        assert!(reversal_pair(&dom(&three, &["abc", "acb"])).is_none());
        let cde = AlternativeSet::from_labels(["c", "d", "e"]).unwrap();
        let d2 = dom(&cde, &["cde", "dec", "dce", "edc"]);
        assert_eq!(
            cde.render_order(reversal_pair(&d2).unwrap()),
            "c d e"
        );
    }

    #[test]
    fn scan_rows_and_first_exceedance() {
        let scan = hypothesis_scan(21);
        assert_eq!(scan.first_exceedance, Some(20));
        let row5 = &scan.rows[3]; // rows start at n = 2
        assert_eq!(row5.n, 5);
        assert_eq!(row5.product, ExactInt::from(651u32));
        assert_eq!(row5.doubled, ExactInt::from(1069u32));
        assert_eq!(row5.ordering, Ordering::Less);
        // n = 2 is the tie F_2 (x) F_2 = F_4
        assert_eq!(scan.rows[0].ordering, Ordering::Equal);
        for row in &scan.rows[1..18] {
            assert_eq!(row.ordering, Ordering::Less, "n = {}", row.n);
        }
        assert_eq!(scan.rows[19].ordering, Ordering::Greater); // n = 21
        // below the crossover there is no exceedance
        assert_eq!(hypothesis_scan(12).first_exceedance, None);
    }
}
