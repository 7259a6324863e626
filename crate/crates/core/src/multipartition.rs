//! Partitions, multipartitions and their cells.
//!
//! A multipartition is an m-tuple of integer partitions. It is the universal
//! label in this crate: Specht classes, simple classes, crystal vertices and
//! Fock basis vectors are all indexed by multipartitions. Components and
//! sizes are kept small (desk scale), so parts are plain `u32`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CombinatoricsError;

/// An integer partition: a weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatoricsError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(CombinatoricsError::NotWeaklyDecreasing { parts });
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(CombinatoricsError::ZeroPart { parts });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `row` (1-based); zero beyond the last row.
    pub fn row_len(&self, row: u32) -> u32 {
        if row == 0 || row as usize > self.parts.len() {
            0
        } else {
            self.parts[row as usize - 1]
        }
    }

    /// Cells `(row, col)` whose removal leaves a partition, top row first.
    pub fn removable_cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for r in 1..=self.parts.len() as u32 {
            if self.row_len(r) > self.row_len(r + 1) {
                out.push((r, self.row_len(r)));
            }
        }
        out
    }

    /// Cells `(row, col)` whose addition leaves a partition, top row first.
    pub fn addable_cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for r in 1..=self.parts.len() as u32 + 1 {
            if r == 1 || self.row_len(r - 1) > self.row_len(r) {
                out.push((r, self.row_len(r) + 1));
            }
        }
        out
    }

    fn with_cell_added(&self, row: u32, col: u32) -> Result<Self, CombinatoricsError> {
        if col != self.row_len(row) + 1 || (row >= 2 && self.row_len(row - 1) < col) || row == 0 {
            return Err(CombinatoricsError::NotAddable { row, col });
        }
        let mut parts = self.parts.clone();
        if row as usize > parts.len() {
            parts.push(1);
        } else {
            parts[row as usize - 1] += 1;
        }
        Ok(Partition { parts })
    }

    fn with_cell_removed(&self, row: u32, col: u32) -> Result<Self, CombinatoricsError> {
        if row == 0 || col != self.row_len(row) || col == 0 || self.row_len(row + 1) == col {
            return Err(CombinatoricsError::NotRemovable { row, col });
        }
        let mut parts = self.parts.clone();
        parts[row as usize - 1] -= 1;
        if parts[row as usize - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = CombinatoricsError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// A cell position inside a multipartition. `component` is 0-based; `row` and
/// `col` are 1-based as usual for Young diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub component: usize,
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(component: usize, row: u32, col: u32) -> Self {
        Node { component, row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.component + 1, self.row, self.col)
    }
}

/// An m-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    pub fn empty(m: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); m],
        }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(parts: Vec<Vec<u32>>) -> Result<Self, CombinatoricsError> {
        let components = parts
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Multipartition { components })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k]
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(|p| p.parts.is_empty())
    }

    pub fn cells(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (k, p) in self.components.iter().enumerate() {
            for (r, &len) in p.parts.iter().enumerate() {
                for c in 1..=len {
                    out.push(Node::new(k, r as u32 + 1, c));
                }
            }
        }
        out
    }

    /// Nodes whose addition keeps every component a partition.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (k, p) in self.components.iter().enumerate() {
            for (r, c) in p.addable_cells() {
                out.push(Node::new(k, r, c));
            }
        }
        out
    }

    /// Nodes whose removal keeps every component a partition.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (k, p) in self.components.iter().enumerate() {
            for (r, c) in p.removable_cells() {
                out.push(Node::new(k, r, c));
            }
        }
        out
    }

    pub fn with_node_added(&self, node: Node) -> Result<Self, CombinatoricsError> {
        if node.component >= self.components.len() {
            return Err(CombinatoricsError::ComponentOutOfRange {
                component: node.component,
                m: self.components.len(),
            });
        }
        let mut components = self.components.clone();
        components[node.component] =
            components[node.component].with_cell_added(node.row, node.col)?;
        Ok(Multipartition { components })
    }

    pub fn with_node_removed(&self, node: Node) -> Result<Self, CombinatoricsError> {
        if node.component >= self.components.len() {
            return Err(CombinatoricsError::ComponentOutOfRange {
                component: node.component,
                m: self.components.len(),
            });
        }
        let mut components = self.components.clone();
        components[node.component] =
            components[node.component].with_cell_removed(node.row, node.col)?;
        Ok(Multipartition { components })
    }
}

impl fmt::Display for Multipartition {
    /// Nested-array form, e.g. `[[2,1],[1]]`; matches the JSON serialization.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (i, part) in p.parts.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{part}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n`, largest first part first.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All m-component multipartitions of `n`, in a fixed deterministic order.
pub fn multipartitions_of(n: u32, m: usize) -> Vec<Multipartition> {
    fn rec(
        remaining: u32,
        slots: usize,
        prefix: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Multipartition {
                    components: prefix.clone(),
                });
            }
            return;
        }
        for k in (0..=remaining).rev() {
            for p in partitions_of(k) {
                prefix.push(p);
                rec(remaining - k, slots - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::new(), &mut out);
    out
}
