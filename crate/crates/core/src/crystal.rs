//! The signature-rule crystal on multipartitions.
//!
//! For a residue `i`, the boundary `i`-nodes of a multipartition are read in
//! reading order and tagged addable/removable. Deleting adjacent pairs with
//! an addable immediately before a removable, recursively, leaves a reduced
//! word `R^eps A^phi`. The Kashiwara operator `e~_i` removes the node of the
//! last surviving removable, `f~_i` adds the node of the first surviving
//! addable. The component of the empty multipartition generated by the
//! `f~_i` consists of the Kleshchev multipartitions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::charge::{boundary_word, cartan, residue_counts, BoundaryTag, Multicharge};
use crate::error::CrystalError;
use crate::multipartition::{Multipartition, Node};

/// An affine weight of the form `Lambda - sum_j W_j alpha_j`, stored through
/// the multiset of charges (encoding `Lambda`) and the subtracted simple-root
/// coefficients. The `d`-pairing is normalized to `Lambda(d) = 0`, so it
/// equals `-W_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    lambda_mult: Vec<u32>,
    alpha_coeffs: Vec<u64>,
    d_offset: i64,
}

impl Weight {
    pub fn new(charge: &Multicharge, alpha_coeffs: Vec<u64>) -> Self {
        let mut lambda_mult = vec![0u32; charge.e()];
        for &g in charge.gamma() {
            lambda_mult[g] += 1;
        }
        let d_offset = -(alpha_coeffs[0] as i64);
        Weight {
            lambda_mult,
            alpha_coeffs,
            d_offset,
        }
    }

    pub fn e(&self) -> usize {
        self.alpha_coeffs.len()
    }

    /// Coefficients `W_j` subtracted on the simple roots.
    pub fn alpha_coeffs(&self) -> &[u64] {
        &self.alpha_coeffs
    }

    pub fn lambda_mult(&self) -> &[u32] {
        &self.lambda_mult
    }

    /// `<h_i, wt> = Lambda(h_i) + W_{i-1} - 2 W_i + W_{i+1}` (indices mod e).
    pub fn pairing(&self, i: usize) -> i64 {
        let e = self.e();
        let mut value = self.lambda_mult[i] as i64;
        for (j, &w) in self.alpha_coeffs.iter().enumerate() {
            value -= w as i64 * cartan(e, i, j);
        }
        value
    }

    /// `wt(d)`, normalized so that `Lambda(d) = 0`.
    pub fn d_pairing(&self) -> i64 {
        self.d_offset
    }

    /// Depth below the highest weight: `sum_j W_j`.
    pub fn depth(&self) -> u64 {
        self.alpha_coeffs.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lambda-[")?;
        for (j, w) in self.alpha_coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

/// The weight of a multipartition: `Lambda - sum_j W_j(lambda) alpha_j`.
pub fn weight_of(mp: &Multipartition, charge: &Multicharge) -> Weight {
    Weight::new(charge, residue_counts(mp, charge).counts().to_vec())
}

/// Result of the signature rule at one residue.
#[derive(Clone, Debug)]
pub struct SignatureWord {
    /// Boundary `i`-nodes in reading order with their tags.
    pub letters: Vec<(Node, BoundaryTag)>,
    /// The sublist surviving reduction: all removables before all addables.
    pub reduced: Vec<(Node, BoundaryTag)>,
    pub epsilon: u32,
    pub phi: u32,
    /// Node of the last surviving removable, if any.
    pub good_removable: Option<Node>,
    /// Node of the first surviving addable, if any.
    pub good_addable: Option<Node>,
}

pub fn signature(mp: &Multipartition, i: usize, charge: &Multicharge) -> SignatureWord {
    let letters = boundary_word(mp, i, charge);
    let mut reduced: Vec<(Node, BoundaryTag)> = Vec::new();
    for &(node, tag) in &letters {
        if tag == BoundaryTag::Removable
            && reduced
                .last()
                .is_some_and(|&(_, t)| t == BoundaryTag::Addable)
        {
            reduced.pop();
        } else {
            reduced.push((node, tag));
        }
    }
    let epsilon = reduced
        .iter()
        .filter(|&&(_, t)| t == BoundaryTag::Removable)
        .count() as u32;
    let phi = reduced.len() as u32 - epsilon;
    let good_removable = if epsilon > 0 {
        Some(reduced[epsilon as usize - 1].0)
    } else {
        None
    };
    let good_addable = if phi > 0 {
        Some(reduced[epsilon as usize].0)
    } else {
        None
    };
    SignatureWord {
        letters,
        reduced,
        epsilon,
        phi,
        good_removable,
        good_addable,
    }
}

pub fn epsilon(mp: &Multipartition, i: usize, charge: &Multicharge) -> u32 {
    signature(mp, i, charge).epsilon
}

pub fn phi(mp: &Multipartition, i: usize, charge: &Multicharge) -> u32 {
    signature(mp, i, charge).phi
}

/// Remove the good `i`-node; `None` when `epsilon_i = 0`.
pub fn e_tilde(mp: &Multipartition, i: usize, charge: &Multicharge) -> Option<Multipartition> {
    signature(mp, i, charge).good_removable.map(|node| {
        mp.with_node_removed(node)
            .expect("good removable node is removable")
    })
}

/// Add the good `i`-node; `None` when `phi_i = 0`.
pub fn f_tilde(mp: &Multipartition, i: usize, charge: &Multicharge) -> Option<Multipartition> {
    signature(mp, i, charge).good_addable.map(|node| {
        mp.with_node_added(node)
            .expect("good addable node is addable")
    })
}

/// True iff `mp` lies in the component of the empty multipartition. Peeling
/// any one residue with positive epsilon suffices: if the peeled diagram were
/// in the component, adding the good node back would put `mp` there too.
pub fn is_kleshchev(mp: &Multipartition, charge: &Multicharge) -> bool {
    let mut current = mp.clone();
    while !current.is_empty() {
        let step = (0..charge.e()).find_map(|i| e_tilde(&current, i, charge));
        match step {
            Some(smaller) => current = smaller,
            None => return false,
        }
    }
    true
}

/// A vertex of the generated crystal with its cached structure constants.
#[derive(Clone, Debug)]
pub struct CrystalVertex {
    pub mp: Multipartition,
    pub weight: Weight,
    pub eps: Vec<u32>,
    pub phi: Vec<u32>,
}

/// The Kleshchev component generated from the empty multipartition up to a
/// size bound, with `i`-colored edges `lambda -> f~_i(lambda)`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    charge: Multicharge,
    depth: u32,
    vertices: Vec<CrystalVertex>,
    index: BTreeMap<Multipartition, usize>,
    /// `f_edges[v][i] = w` iff `f~_i` maps vertex `v` to vertex `w`.
    f_edges: Vec<Vec<Option<usize>>>,
}

impl CrystalGraph {
    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn vertices(&self) -> &[CrystalVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, mp: &Multipartition) -> bool {
        self.index.contains_key(mp)
    }

    pub fn vertex_index(&self, mp: &Multipartition) -> Option<usize> {
        self.index.get(mp).copied()
    }

    pub fn vertex(&self, mp: &Multipartition) -> Option<&CrystalVertex> {
        self.vertex_index(mp).map(|v| &self.vertices[v])
    }

    pub fn f_edge(&self, v: usize, i: usize) -> Option<usize> {
        self.f_edges[v][i]
    }

    /// All `(source, color, target)` edges, in vertex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.f_edges.iter().enumerate().flat_map(|(v, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(i, tgt)| tgt.map(|w| (v, i, w)))
        })
    }

    /// Vertices of one size, in vertex order.
    pub fn of_size(&self, n: u32) -> impl Iterator<Item = &CrystalVertex> {
        self.vertices.iter().filter(move |vx| vx.mp.size() == n)
    }
}

/// Breadth-first closure of the empty multipartition under all `f~_i`, up to
/// size `n_max`. The vertex list is sorted by (size, component lists), so it
/// is independent of expansion order.
pub fn generate_crystal(
    charge: &Multicharge,
    n_max: u32,
    vertex_cap: usize,
) -> Result<CrystalGraph, CrystalError> {
    let mut layer = vec![Multipartition::empty(charge.m())];
    let mut all: Vec<Multipartition> = layer.clone();
    for _ in 0..n_max {
        let mut next = std::collections::BTreeSet::new();
        for mp in &layer {
            for i in 0..charge.e() {
                if let Some(bigger) = f_tilde(mp, i, charge) {
                    next.insert(bigger);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next.into_iter().collect();
        all.extend(layer.iter().cloned());
        if all.len() > vertex_cap {
            return Err(CrystalError::VertexCapExceeded { cap: vertex_cap });
        }
    }
    all.sort_by(|a, b| (a.size(), a).cmp(&(b.size(), b)));
    let index: BTreeMap<Multipartition, usize> = all
        .iter()
        .enumerate()
        .map(|(v, mp)| (mp.clone(), v))
        .collect();
    let mut vertices = Vec::with_capacity(all.len());
    let mut f_edges = Vec::with_capacity(all.len());
    for mp in &all {
        let mut eps = Vec::with_capacity(charge.e());
        let mut phis = Vec::with_capacity(charge.e());
        let mut row = Vec::with_capacity(charge.e());
        for i in 0..charge.e() {
            let sig = signature(mp, i, charge);
            eps.push(sig.epsilon);
            phis.push(sig.phi);
            let target = sig.good_addable.and_then(|node| {
                let bigger = mp.with_node_added(node).expect("addable");
                index.get(&bigger).copied()
            });
            row.push(target);
        }
        vertices.push(CrystalVertex {
            mp: mp.clone(),
            weight: weight_of(mp, charge),
            eps,
            phi: phis,
        });
        f_edges.push(row);
    }
    Ok(CrystalGraph {
        charge: charge.clone(),
        depth: n_max,
        vertices,
        index,
        f_edges,
    })
}

/// A failed crystal-axiom check at one vertex and color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub vertex: Multipartition,
    pub color: usize,
    pub axiom: String,
    pub detail: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axiom {} fails at {} color {}: {}",
            self.axiom, self.vertex, self.color, self.detail
        )
    }
}

/// Check the crystal axioms and semiregularity at every vertex and color of
/// the generated graph. Structure constants are read from the cached vertex
/// data, so corrupted caches are caught.
pub fn check_axioms(graph: &CrystalGraph) -> Vec<AxiomViolation> {
    let charge = graph.charge();
    let e = charge.e();
    let mut violations = Vec::new();
    let mut report = |vertex: &Multipartition, color: usize, axiom: &str, detail: String| {
        violations.push(AxiomViolation {
            vertex: vertex.clone(),
            color,
            axiom: axiom.to_string(),
            detail,
        });
    };
    for (v, vx) in graph.vertices().iter().enumerate() {
        for i in 0..e {
            let eps = vx.eps[i] as i64;
            let phi = vx.phi[i] as i64;
            // (1) phi_i = eps_i + <h_i, wt>
            let pairing = vx.weight.pairing(i);
            if phi != eps + pairing {
                report(
                    &vx.mp,
                    i,
                    "(1)",
                    format!("phi={phi}, eps={eps}, <h_i,wt>={pairing}"),
                );
            }
            // (2) structure constants across an e~_i step
            if let Some(smaller) = e_tilde(&vx.mp, i, charge) {
                if eps == 0 {
                    report(&vx.mp, i, "semiregular", "e~_i acts but eps=0".into());
                }
                match graph.vertex(&smaller) {
                    None => report(
                        &vx.mp,
                        i,
                        "closure",
                        format!("e~_i image {smaller} missing from graph"),
                    ),
                    Some(wx) => {
                        if !weights_differ_by_alpha(&wx.weight, &vx.weight, i) {
                            report(&vx.mp, i, "(2)", "wt(e~_i b) != wt(b) + alpha_i".into());
                        }
                        if wx.eps[i] as i64 != eps - 1 {
                            report(&vx.mp, i, "(2)", "eps(e~_i b) != eps(b) - 1".into());
                        }
                        if wx.phi[i] as i64 != phi + 1 {
                            report(&vx.mp, i, "(2)", "phi(e~_i b) != phi(b) + 1".into());
                        }
                        // (4) f~_i e~_i b = b
                        let w = graph.vertex_index(&smaller).expect("checked above");
                        if graph.f_edge(w, i) != Some(v) {
                            report(&vx.mp, i, "(4)", "f~_i(e~_i b) != b".into());
                        }
                    }
                }
            } else if eps != 0 {
                report(&vx.mp, i, "semiregular", "eps>0 but e~_i b = 0".into());
            }
            // (3) structure constants across the recorded f-edge
            if let Some(w) = graph.f_edge(v, i) {
                let wx = &graph.vertices()[w];
                if phi == 0 {
                    report(&vx.mp, i, "semiregular", "f-edge present but phi=0".into());
                }
                if !weights_differ_by_alpha(&vx.weight, &wx.weight, i) {
                    report(&vx.mp, i, "(3)", "wt(f~_i b) != wt(b) - alpha_i".into());
                }
                if wx.eps[i] as i64 != eps + 1 {
                    report(&vx.mp, i, "(3)", "eps(f~_i b) != eps(b) + 1".into());
                }
                if wx.phi[i] as i64 != phi - 1 {
                    report(&vx.mp, i, "(3)", "phi(f~_i b) != phi(b) - 1".into());
                }
                // (4) e~_i f~_i b = b
                if e_tilde(&wx.mp, i, charge).as_ref() != Some(&vx.mp) {
                    report(&vx.mp, i, "(4)", "e~_i(f~_i b) != b".into());
                }
            } else if phi > 0 && vx.mp.size() < graph.depth() {
                report(
                    &vx.mp,
                    i,
                    "closure",
                    "phi>0 inside depth but no f-edge recorded".into(),
                );
            }
            // Semiregularity: eps and phi count repeated operator steps.
            let mut steps = 0i64;
            let mut cur = vx.mp.clone();
            while let Some(next) = e_tilde(&cur, i, charge) {
                cur = next;
                steps += 1;
            }
            if steps != eps {
                report(
                    &vx.mp,
                    i,
                    "semiregular",
                    format!("e~_i acts {steps} times but eps={eps}"),
                );
            }
            let mut steps = 0i64;
            let mut cur = vx.mp.clone();
            while let Some(next) = f_tilde(&cur, i, charge) {
                cur = next;
                steps += 1;
            }
            if steps != phi {
                report(
                    &vx.mp,
                    i,
                    "semiregular",
                    format!("f~_i acts {steps} times but phi={phi}"),
                );
            }
        }
    }
    violations
}

/// Number of directed paths from the empty multipartition to `mp` along
/// `f~`-edges, by dynamic programming over the graded graph.
pub fn count_paths(graph: &CrystalGraph, mp: &Multipartition) -> Result<BigUint, CrystalError> {
    let target = graph
        .vertex_index(mp)
        .ok_or_else(|| CrystalError::NotAVertex { mp: mp.clone() })?;
    let mut paths = vec![BigUint::ZERO; graph.len()];
    paths[0] = BigUint::one(); // vertices are sorted by size; 0 is the empty one
    for v in 0..graph.len() {
        if paths[v] == BigUint::ZERO {
            continue;
        }
        for i in 0..graph.charge().e() {
            if let Some(w) = graph.f_edge(v, i) {
                let add = paths[v].clone();
                paths[w] += add;
            }
        }
    }
    Ok(paths[target].clone())
}
