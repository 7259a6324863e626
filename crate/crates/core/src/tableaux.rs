//! Counting standard tableaux of multipartitions.
//!
//! A standard tableau is a bijective filling of the cells with 1..n that
//! increases along rows and columns of every component. The count is the
//! dimension of the Specht module; it is computed by peeling the cell
//! holding the maximal entry, which must be a removable cell of some
//! component, with memoization over the shapes encountered.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::multipartition::Multipartition;

/// Memoized counter. Counts grow past 64 bits near n = 25, so values are
/// arbitrary precision.
#[derive(Default)]
pub struct TableauxCounter {
    memo: HashMap<Multipartition, BigUint>,
}

impl TableauxCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, mp: &Multipartition) -> BigUint {
        if mp.size() == 0 {
            return BigUint::one();
        }
        if let Some(hit) = self.memo.get(mp) {
            return hit.clone();
        }
        let mut total = BigUint::ZERO;
        for node in mp.removable_nodes() {
            let smaller = mp
                .with_node_removed(node)
                .expect("removable nodes are removable");
            total += self.count(&smaller);
        }
        self.memo.insert(mp.clone(), total.clone());
        total
    }
}

/// One-shot count of standard tableaux of shape `mp`.
pub fn standard_tableaux_count(mp: &Multipartition) -> BigUint {
    TableauxCounter::new().count(mp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::{multipartitions_of, partitions_of, Multipartition, Partition};

    fn mp(parts: Vec<Vec<u32>>) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    #[test]
    fn small_shapes() {
        assert_eq!(standard_tableaux_count(&mp(vec![vec![2, 1]])), 2u32.into());
        for n in 1..=8 {
            assert_eq!(standard_tableaux_count(&mp(vec![vec![n]])), 1u32.into());
        }
        assert_eq!(
            standard_tableaux_count(&mp(vec![vec![1], vec![1]])),
            2u32.into()
        );
        assert_eq!(
            standard_tableaux_count(&Multipartition::empty(3)),
            1u32.into()
        );
    }

    /// Brute-force oracle: place 1..n into the cell list in every order and
    /// keep the fillings that increase along rows and columns.
    fn brute_force_count(mp: &Multipartition) -> u64 {
        let cells = mp.cells();
        let n = cells.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0u64;
        permute(&mut perm, 0, &mut |p| {
            // p[idx] = entry placed in cells[idx]
            let entry_at = |k: usize, r: u32, c: u32| -> Option<usize> {
                cells
                    .iter()
                    .position(|n| n.component == k && n.row == r && n.col == c)
                    .map(|idx| p[idx])
            };
            for (idx, cell) in cells.iter().enumerate() {
                if cell.col > 1 {
                    if let Some(left) = entry_at(cell.component, cell.row, cell.col - 1) {
                        if left > p[idx] {
                            return;
                        }
                    }
                }
                if cell.row > 1 {
                    if let Some(up) = entry_at(cell.component, cell.row - 1, cell.col) {
                        if up > p[idx] {
                            return;
                        }
                    }
                }
            }
            count += 1;
        });
        count
    }

    fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            visit(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, visit);
            perm.swap(k, i);
        }
    }

    #[test]
    fn matches_brute_force_enumeration() {
        for m in 1..=2usize {
            for n in 0..=5u32 {
                for lam in multipartitions_of(n, m) {
                    assert_eq!(
                        standard_tableaux_count(&lam),
                        brute_force_count(&lam).into(),
                        "{lam}"
                    );
                }
            }
        }
    }

    /// Hook length formula as an independent oracle for single partitions.
    fn hook_length_count(p: &Partition) -> BigUint {
        let n = p.size() as u64;
        let mut numerator = BigUint::one();
        for k in 1..=n {
            numerator *= BigUint::from(k);
        }
        let conj_len = |col: u32| -> u32 {
            p.parts().iter().filter(|&&part| part >= col).count() as u32
        };
        let mut denom = BigUint::one();
        for (r, &len) in p.parts().iter().enumerate() {
            let r = r as u32 + 1;
            for c in 1..=len {
                let hook = (len - c) + (conj_len(c) - r) + 1;
                denom *= BigUint::from(hook);
            }
        }
        numerator / denom
    }

    #[test]
    fn matches_hook_length_formula() {
        for n in 0..=8u32 {
            for p in partitions_of(n) {
                let lam = Multipartition::new(vec![p.clone()]);
                assert_eq!(standard_tableaux_count(&lam), hook_length_count(&p));
            }
        }
    }

    #[test]
    fn squares_sum_to_factorial() {
        for n in 1..=7u32 {
            let mut counter = TableauxCounter::new();
            let mut total = BigUint::ZERO;
            for p in partitions_of(n) {
                let f = counter.count(&Multipartition::new(vec![p]));
                total += &f * &f;
            }
            let mut fact = BigUint::one();
            for k in 1..=n as u64 {
                fact *= BigUint::from(k);
            }
            assert_eq!(total, fact);
        }
    }

    /// The defining recursion, checked against the memoized implementation.
    #[test]
    fn corner_recursion() {
        let mut counter = TableauxCounter::new();
        for lam in multipartitions_of(6, 1).into_iter().chain(multipartitions_of(4, 2)) {
            let direct = counter.count(&lam);
            let via_corners: BigUint = lam
                .removable_nodes()
                .into_iter()
                .map(|b| counter.count(&lam.with_node_removed(b).unwrap()))
                .sum();
            assert_eq!(direct, via_corners);
        }
    }
}
