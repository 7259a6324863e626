//! Multicharges, residues and boundary nodes.
//!
//! A multicharge `(e, gamma_1..gamma_m)` fixes the quantum characteristic
//! `e >= 2`, the dominant weight `Lambda = sum Lambda_{gamma_k}`, and the
//! residue coloring `res(k,r,c) = (gamma_k + c - r) mod e` of cells. The
//! reading direction orders boundary nodes for the signature rule; both
//! conventions are supported, bottom-up being the default.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CombinatoricsError;
use crate::multipartition::{Multipartition, Node};

/// Order in which boundary nodes are read for signatures and Fock exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ReadingDirection {
    /// Higher components first, higher rows first.
    #[default]
    BottomUp,
    /// Lower components first, lower rows first.
    TopDown,
}

impl fmt::Display for ReadingDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadingDirection::BottomUp => write!(f, "bottom-up"),
            ReadingDirection::TopDown => write!(f, "top-down"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multicharge {
    e: usize,
    gamma: Vec<usize>,
    reading: ReadingDirection,
}

impl Multicharge {
    /// Charge entries are reduced mod `e`; negative inputs are accepted.
    pub fn new(e: usize, gamma: &[i64]) -> Result<Self, CombinatoricsError> {
        if e < 2 {
            return Err(CombinatoricsError::QuantumCharacteristicTooSmall { e });
        }
        if gamma.is_empty() {
            return Err(CombinatoricsError::EmptyCharge);
        }
        let gamma = gamma
            .iter()
            .map(|&g| g.rem_euclid(e as i64) as usize)
            .collect();
        Ok(Multicharge {
            e,
            gamma,
            reading: ReadingDirection::BottomUp,
        })
    }

    pub fn with_reading(mut self, reading: ReadingDirection) -> Self {
        self.reading = reading;
        self
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    /// Number of components m (also the level of Lambda).
    pub fn m(&self) -> usize {
        self.gamma.len()
    }

    pub fn reading(&self) -> ReadingDirection {
        self.reading
    }

    /// `<h_i, Lambda>`: the number of charge entries equal to `i`.
    pub fn lambda_pairing(&self, i: usize) -> i64 {
        self.gamma.iter().filter(|&&g| g == i).count() as i64
    }

    /// Affine Cartan matrix entry `a_ij` of type `A^(1)_{e-1}`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        cartan(self.e, i, j)
    }

    /// Residue of a node: `(gamma_k + c - r) mod e`.
    pub fn residue(&self, node: Node) -> usize {
        let g = self.gamma[node.component] as i64;
        (g + node.col as i64 - node.row as i64).rem_euclid(self.e as i64) as usize
    }

    /// Reading order on nodes. Distinct boundary nodes of a fixed residue
    /// never share a (component, row) pair, so the column tie-break is inert.
    pub fn node_cmp(&self, a: Node, b: Node) -> Ordering {
        let key = |n: Node| (n.component, n.row, n.col);
        match self.reading {
            ReadingDirection::BottomUp => key(b).cmp(&key(a)),
            ReadingDirection::TopDown => key(a).cmp(&key(b)),
        }
    }

    pub fn validate(&self, mp: &Multipartition) -> Result<(), CombinatoricsError> {
        if mp.component_count() != self.m() {
            return Err(CombinatoricsError::WrongComponentCount {
                mp: mp.clone(),
                found: mp.component_count(),
                expected: self.m(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={} gamma=[", self.e)?;
        for (k, g) in self.gamma.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "] reading={}", self.reading)
    }
}

pub(crate) fn cartan(e: usize, i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if e == 2 {
        -2
    } else if (i + 1) % e == j || (j + 1) % e == i {
        -1
    } else {
        0
    }
}

/// Tag of a boundary node in a signature word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryTag {
    Addable,
    Removable,
}

/// Addable and removable `i`-nodes of `mp`, merged in reading order.
pub fn boundary_word(
    mp: &Multipartition,
    i: usize,
    charge: &Multicharge,
) -> Vec<(Node, BoundaryTag)> {
    let mut word: Vec<(Node, BoundaryTag)> = mp
        .addable_nodes()
        .into_iter()
        .filter(|&n| charge.residue(n) == i)
        .map(|n| (n, BoundaryTag::Addable))
        .chain(
            mp.removable_nodes()
                .into_iter()
                .filter(|&n| charge.residue(n) == i)
                .map(|n| (n, BoundaryTag::Removable)),
        )
        .collect();
    word.sort_by(|a, b| charge.node_cmp(a.0, b.0));
    word
}

/// Addable and removable `i`-nodes, each list sorted in reading order.
pub fn boundary_nodes(
    mp: &Multipartition,
    i: usize,
    charge: &Multicharge,
) -> (Vec<Node>, Vec<Node>) {
    let mut addable = Vec::new();
    let mut removable = Vec::new();
    for (node, tag) in boundary_word(mp, i, charge) {
        match tag {
            BoundaryTag::Addable => addable.push(node),
            BoundaryTag::Removable => removable.push(node),
        }
    }
    (addable, removable)
}

/// Number of `i`-nodes of a multipartition, for each residue `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueCounts(Vec<u64>);

impl ResidueCounts {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn count(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub fn residue_counts(mp: &Multipartition, charge: &Multicharge) -> ResidueCounts {
    let mut counts = vec![0u64; charge.e()];
    for cell in mp.cells() {
        counts[charge.residue(cell)] += 1;
    }
    ResidueCounts(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: Vec<Vec<u32>>) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    #[test]
    fn charge_validation() {
        assert!(Multicharge::new(1, &[0]).is_err());
        assert!(Multicharge::new(2, &[]).is_err());
        let c = Multicharge::new(3, &[-1, 4]).unwrap();
        assert_eq!(c.gamma(), &[2, 1]);
    }

    #[test]
    fn residue_formula() {
        // (k1,r1,c3), e=2, gamma=(0) -> 0
        let c2 = Multicharge::new(2, &[0]).unwrap();
        assert_eq!(c2.residue(Node::new(0, 1, 3)), 0);
        // (k2,r1,c1), e=3, gamma=(0,1) -> 1
        let c3 = Multicharge::new(3, &[0, 1]).unwrap();
        assert_eq!(c3.residue(Node::new(1, 1, 1)), 1);
        // (k1,r2,c1), e=2, gamma=(0) -> 1
        assert_eq!(c2.residue(Node::new(0, 2, 1)), 1);
    }

    #[test]
    fn lambda_pairing_counts_charges() {
        let c = Multicharge::new(3, &[0, 0, 2]).unwrap();
        assert_eq!(c.lambda_pairing(0), 2);
        assert_eq!(c.lambda_pairing(1), 0);
        assert_eq!(c.lambda_pairing(2), 1);
    }

    #[test]
    fn boundary_nodes_examples() {
        let c = Multicharge::new(2, &[0]).unwrap();
        // (1,1): addable 1-nodes [(1,2)], removable [(2,1)]
        let lam = mp(vec![vec![1, 1]]);
        let (add, rem) = boundary_nodes(&lam, 1, &c);
        assert_eq!(add, vec![Node::new(0, 1, 2)]);
        assert_eq!(rem, vec![Node::new(0, 2, 1)]);

        // empty diagram: first node of each component with matching residue
        let c2 = Multicharge::new(3, &[0, 1]).unwrap();
        let empty = Multipartition::empty(2);
        let (add, rem) = boundary_nodes(&empty, 1, &c2);
        assert_eq!(add, vec![Node::new(1, 1, 1)]);
        assert!(rem.is_empty());

        // (2,1), i=1: no addables, removables [(2,1),(1,2)] bottom-up
        let lam = mp(vec![vec![2, 1]]);
        let (add, rem) = boundary_nodes(&lam, 1, &c);
        assert!(add.is_empty());
        assert_eq!(rem, vec![Node::new(0, 2, 1), Node::new(0, 1, 2)]);
    }

    /// Exhaustive cell-scan oracle: classify every candidate position by
    /// brute force and compare against `boundary_nodes`.
    #[test]
    fn boundary_nodes_match_exhaustive_scan() {
        let charges = [
            Multicharge::new(2, &[0]).unwrap(),
            Multicharge::new(3, &[0, 1]).unwrap(),
            Multicharge::new(2, &[0]).unwrap().with_reading(ReadingDirection::TopDown),
        ];
        for charge in &charges {
            for n in 0..=5u32 {
                for lam in crate::multipartition::multipartitions_of(n, charge.m()) {
                    for i in 0..charge.e() {
                        let (add, rem) = boundary_nodes(&lam, i, charge);
                        let mut expect_add = Vec::new();
                        let mut expect_rem = Vec::new();
                        for k in 0..charge.m() {
                            for r in 1..=n + 2 {
                                for col in 1..=n + 2 {
                                    let node = Node::new(k, r, col);
                                    if charge.residue(node) != i {
                                        continue;
                                    }
                                    if lam.with_node_added(node).is_ok() {
                                        expect_add.push(node);
                                    }
                                    if lam.with_node_removed(node).is_ok() {
                                        expect_rem.push(node);
                                    }
                                }
                            }
                        }
                        expect_add.sort_by(|a, b| charge.node_cmp(*a, *b));
                        expect_rem.sort_by(|a, b| charge.node_cmp(*a, *b));
                        assert_eq!(add, expect_add, "{lam} i={i} {charge}");
                        assert_eq!(rem, expect_rem, "{lam} i={i} {charge}");
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_counts_match_corners() {
        let charge = Multicharge::new(3, &[0, 2]).unwrap();
        for n in 0..=5u32 {
            for lam in crate::multipartition::multipartitions_of(n, 2) {
                let corners = lam.removable_nodes().len();
                let rem: usize = (0..3)
                    .map(|i| boundary_nodes(&lam, i, &charge).1.len())
                    .sum();
                let add: usize = (0..3)
                    .map(|i| boundary_nodes(&lam, i, &charge).0.len())
                    .sum();
                assert_eq!(rem, corners);
                assert_eq!(add, corners + 2);
            }
        }
    }

    #[test]
    fn residue_counts_examples() {
        let c = Multicharge::new(2, &[0]).unwrap();
        let lam = mp(vec![vec![2]]);
        assert_eq!(residue_counts(&lam, &c).counts(), &[1, 1]);
        assert_eq!(
            residue_counts(&Multipartition::empty(1), &c).counts(),
            &[0, 0]
        );
        let c3 = Multicharge::new(3, &[0, 1]).unwrap();
        let lam = mp(vec![vec![1], vec![1]]);
        assert_eq!(residue_counts(&lam, &c3).counts(), &[1, 1, 0]);
    }

    #[test]
    fn cartan_matrix() {
        assert_eq!(cartan(2, 0, 1), -2);
        assert_eq!(cartan(2, 0, 0), 2);
        assert_eq!(cartan(3, 0, 2), -1);
        assert_eq!(cartan(4, 0, 2), 0);
        assert_eq!(cartan(4, 3, 0), -1);
    }
}
