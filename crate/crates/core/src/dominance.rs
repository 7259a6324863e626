//! Dominance order on multipartitions.
//!
//! Two multipartitions of the same size and shape are compared through the
//! prefix sums of their parts, components concatenated in index order and
//! each component padded so rows align. This is the Dipper-James-Mathas
//! order; the cell theory of the Specht modules and the canonical basis are
//! unitriangular with respect to it.

use std::cmp::Ordering;

use crate::error::CombinatoricsError;
use crate::multipartition::Multipartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceOrdering {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Padded prefix-sum vector. Componentwise `>=` on these keys is exactly
/// dominance; lexicographic order on them is a total refinement of it. The
/// key determines the multipartition, so the refinement has no ties.
pub fn dominance_key(mp: &Multipartition) -> Vec<u64> {
    let rows = mp.size() as usize;
    let mut key = Vec::with_capacity(mp.component_count() * rows);
    let mut acc = 0u64;
    for p in mp.components() {
        for r in 0..rows {
            acc += p.parts().get(r).copied().unwrap_or(0) as u64;
            key.push(acc);
        }
    }
    key
}

pub fn dominance_compare(
    a: &Multipartition,
    b: &Multipartition,
) -> Result<DominanceOrdering, CombinatoricsError> {
    if a.component_count() != b.component_count() {
        return Err(CombinatoricsError::ComponentCountMismatch {
            left: a.component_count(),
            right: b.component_count(),
        });
    }
    if a.size() != b.size() {
        return Err(CombinatoricsError::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    let (ka, kb) = (dominance_key(a), dominance_key(b));
    let mut some_greater = false;
    let mut some_less = false;
    for (x, y) in ka.iter().zip(kb.iter()) {
        match x.cmp(y) {
            Ordering::Greater => some_greater = true,
            Ordering::Less => some_less = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (some_greater, some_less) {
        (false, false) => DominanceOrdering::Equal,
        (true, false) => DominanceOrdering::Greater,
        (false, true) => DominanceOrdering::Less,
        (true, true) => DominanceOrdering::Incomparable,
    })
}

/// True iff `a` strictly dominates `b`.
pub fn strictly_dominates(a: &Multipartition, b: &Multipartition) -> bool {
    matches!(dominance_compare(a, b), Ok(DominanceOrdering::Greater))
}

/// Sort most dominant first, using the lexicographic refinement of dominance.
pub fn sort_dominance_descending(mps: &mut [Multipartition]) {
    mps.sort_by(|a, b| dominance_key(b).cmp(&dominance_key(a)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::multipartitions_of;

    fn mp(parts: Vec<Vec<u32>>) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(
            dominance_compare(&mp(vec![vec![2]]), &mp(vec![vec![1, 1]])).unwrap(),
            DominanceOrdering::Greater
        );
        let lam = mp(vec![vec![3, 1], vec![2]]);
        assert_eq!(
            dominance_compare(&lam, &lam).unwrap(),
            DominanceOrdering::Equal
        );
        assert_eq!(
            dominance_compare(&mp(vec![vec![3, 3]]), &mp(vec![vec![4, 1, 1]])).unwrap(),
            DominanceOrdering::Incomparable
        );
    }

    #[test]
    fn mismatches_are_errors() {
        assert!(dominance_compare(&mp(vec![vec![2]]), &mp(vec![vec![1]])).is_err());
        assert!(dominance_compare(&mp(vec![vec![1]]), &mp(vec![vec![1], vec![]])).is_err());
    }

    #[test]
    fn level_two_component_order() {
        // All of one component dominates everything split later.
        let first = mp(vec![vec![1], vec![]]);
        let second = mp(vec![vec![], vec![1]]);
        assert_eq!(
            dominance_compare(&first, &second).unwrap(),
            DominanceOrdering::Greater
        );
    }

    /// Exhaustive partial-order check on all multipartitions of size <= 6.
    #[test]
    fn is_partial_order() {
        for m in 1..=2usize {
            let top = if m == 1 { 6 } else { 5 };
            for n in 0..=top {
                let all = multipartitions_of(n, m);
                for a in &all {
                    assert_eq!(
                        dominance_compare(a, a).unwrap(),
                        DominanceOrdering::Equal,
                        "reflexive"
                    );
                    for b in &all {
                        let ab = dominance_compare(a, b).unwrap();
                        let ba = dominance_compare(b, a).unwrap();
                        match ab {
                            DominanceOrdering::Greater => {
                                assert_eq!(ba, DominanceOrdering::Less)
                            }
                            DominanceOrdering::Less => {
                                assert_eq!(ba, DominanceOrdering::Greater)
                            }
                            DominanceOrdering::Equal => {
                                assert_eq!(a, b, "antisymmetric");
                                assert_eq!(ba, DominanceOrdering::Equal);
                            }
                            DominanceOrdering::Incomparable => {
                                assert_eq!(ba, DominanceOrdering::Incomparable)
                            }
                        }
                        if ab == DominanceOrdering::Greater {
                            for c in &all {
                                if dominance_compare(b, c).unwrap() == DominanceOrdering::Greater {
                                    assert_eq!(
                                        dominance_compare(a, c).unwrap(),
                                        DominanceOrdering::Greater,
                                        "transitive: {a} > {b} > {c}"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn key_refines_dominance() {
        let all = multipartitions_of(5, 2);
        for a in &all {
            for b in &all {
                if strictly_dominates(a, b) {
                    assert!(dominance_key(a) > dominance_key(b));
                }
                if a != b {
                    assert_ne!(dominance_key(a), dominance_key(b), "key must be injective");
                }
            }
        }
    }

    #[test]
    fn sort_descending_puts_row_shape_first() {
        let mut all = multipartitions_of(3, 1);
        sort_dominance_descending(&mut all);
        assert_eq!(all[0], mp(vec![vec![3]]));
        assert_eq!(all[2], mp(vec![vec![1, 1, 1]]));
    }
}
