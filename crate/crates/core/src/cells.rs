//! Two-sided, left and right cells of a based algebra.
//!
//! `b ⪯ b'` holds when `b` lies in every based ideal containing `b'`. Based
//! ideals are closed under taking supports, so the based ideal generated by
//! `b'` is spanned exactly by the basis elements reachable from `b'` in the
//! graph with an edge `b' -> b''` whenever `c_{x,b'}^{b''} ≠ 0` (left
//! multiplication) or `c_{b',x}^{b''} ≠ 0` (right multiplication) for some
//! basis element `x`. Cells are the strongly connected components.

use std::collections::{BTreeSet, VecDeque};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::BasedAlgebra;
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("cell index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("basis subset {0:?} is not a two-sided cell")]
    NotACell(Vec<String>),
}

/// Reachability preorder on basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    side: Side,
    /// `reach[b'][b]` is `b ⪯ b'`.
    reach: Vec<Vec<bool>>,
}

impl Preorder {
    pub fn side(&self) -> Side {
        self.side
    }

    /// `b ⪯ b'`: `b` lies in every based ideal containing `b'`.
    pub fn le(&self, b: usize, b2: usize) -> bool {
        self.reach[b2][b]
    }

    pub fn equivalent(&self, b: usize, b2: usize) -> bool {
        self.le(b, b2) && self.le(b2, b)
    }

    /// Basis of the based ideal generated by `b`.
    pub fn ideal_of(&self, b: usize) -> Vec<usize> {
        (0..self.reach.len()).filter(|&x| self.reach[b][x]).collect()
    }
}

fn successors(alg: &BasedAlgebra, side: Side) -> Vec<BTreeSet<usize>> {
    let n = alg.rank();
    let mut succ = vec![BTreeSet::new(); n];
    for x in 0..n {
        for b in 0..n {
            if side != Side::Right {
                succ[b].extend(alg.product(x, b).support());
            }
            if side != Side::Left {
                succ[b].extend(alg.product(b, x).support());
            }
        }
    }
    succ
}

/// The preorder for the given side, by breadth-first closure from each basis
/// element.
pub fn preorder(alg: &BasedAlgebra, side: Side) -> Preorder {
    let succ = successors(alg, side);
    let n = alg.rank();
    let mut reach = vec![vec![false; n]; n];
    for (start, row) in reach.iter_mut().enumerate() {
        row[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(b) = queue.pop_front() {
            for &nb in &succ[b] {
                if !row[nb] {
                    row[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
    }
    Preorder { side, reach }
}

/// The two-sided preorder `⪯_LR`.
pub fn lr_preorder(alg: &BasedAlgebra) -> Preorder {
    preorder(alg, Side::TwoSided)
}

/// Cells with their induced partial order and a chosen linear extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDecomposition {
    side: Side,
    /// Members of each cell, sorted; cells sorted by smallest member.
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
    /// `order[i][j]` is `c_i ⪯ c_j`.
    order: Vec<Vec<bool>>,
    /// Linear extension: lower cells (smaller ideals) first.
    chain: Vec<usize>,
}

impl CellDecomposition {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &[usize] {
        &self.cells[i]
    }

    pub fn cell_of(&self, b: usize) -> usize {
        self.cell_of[b]
    }

    /// `c_i ⪯ c_j` in the induced order.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.order[i][j]
    }

    /// Cell indices in chain order `c_1, ..., c_f`.
    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    /// Cells listed in chain order.
    pub fn chain_cells(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.chain.iter().map(|&i| self.cells[i].as_slice())
    }

    /// Position of cell `i` in the chain (0-based).
    pub fn chain_position(&self, i: usize) -> usize {
        self.chain.iter().position(|&c| c == i).expect("every cell is on the chain")
    }

    /// Strict order relation as `(lower, upper)` edges of the Hasse diagram.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let f = self.len();
        let mut edges = Vec::new();
        for i in 0..f {
            for j in 0..f {
                if i == j || !self.order[i][j] {
                    continue;
                }
                let covered = (0..f).any(|k| k != i && k != j && self.order[i][k] && self.order[k][j]);
                if !covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Basis of `𝒞_j = c_1 ∪ ... ∪ c_j` (1-based `j` along the chain).
    pub fn cell_ideal_basis(&self, j: usize) -> Result<Vec<usize>, CellError> {
        if j == 0 || j > self.len() {
            return Err(CellError::IndexOutOfRange {
                index: j,
                count: self.len(),
            });
        }
        let mut out: Vec<usize> = self.chain[..j]
            .iter()
            .flat_map(|&c| self.cells[c].iter().copied())
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Checks that the order is a partial order and the chain a linear
    /// extension of it.
    pub fn check_chain_compatibility(&self) -> Verdict {
        let mut v = Verdict::new("cell order is a partial order with compatible chain");
        let f = self.len();
        for i in 0..f {
            if !self.order[i][i] {
                v.record(format!("cell {i} not reflexive"));
            }
            for j in 0..f {
                if i != j && self.order[i][j] && self.order[j][i] {
                    v.record(format!("cells {i} and {j} are mutually below each other"));
                }
                for k in 0..f {
                    if self.order[i][j] && self.order[j][k] && !self.order[i][k] {
                        v.record(format!("order not transitive at ({i}, {j}, {k})"));
                    }
                }
                if self.order[i][j] && self.chain_position(i) > self.chain_position(j) {
                    v.record(format!("cell {i} ⪯ cell {j} but placed after it in the chain"));
                }
            }
        }
        v
    }
}

fn label_key<'a>(alg: &'a BasedAlgebra, members: &[usize]) -> (usize, &'a str) {
    let min_label = members
        .iter()
        .map(|&b| alg.label(b))
        .min()
        .unwrap_or("");
    (members.len(), min_label)
}

/// Strongly connected components of the reachability graph with their order
/// and a deterministic linear extension (ties broken by cell size, then the
/// lexicographically smallest member label).
pub fn decompose(alg: &BasedAlgebra, side: Side) -> CellDecomposition {
    let pre = preorder(alg, side);
    let n = alg.rank();

    let mut graph = DiGraph::<usize, ()>::with_capacity(n, 0);
    let nodes: Vec<_> = (0..n).map(|b| graph.add_node(b)).collect();
    for (b, row) in successors(alg, side).into_iter().enumerate() {
        for nb in row {
            if nb != b {
                graph.add_edge(nodes[b], nodes[nb], ());
            }
        }
    }
    let mut cells: Vec<Vec<usize>> = tarjan_scc(&graph)
        .into_iter()
        .map(|comp| {
            let mut members: Vec<usize> = comp.into_iter().map(|ix| graph[ix]).collect();
            members.sort_unstable();
            members
        })
        .collect();
    cells.sort();

    let mut cell_of = vec![0; n];
    for (i, members) in cells.iter().enumerate() {
        for &b in members {
            cell_of[b] = i;
        }
    }
    let f = cells.len();
    let order: Vec<Vec<bool>> = (0..f)
        .map(|i| (0..f).map(|j| pre.le(cells[i][0], cells[j][0])).collect())
        .collect();

    // Kahn's algorithm on the strict order, smallest key first.
    let mut placed = vec![false; f];
    let mut chain = Vec::with_capacity(f);
    while chain.len() < f {
        let next = (0..f)
            .filter(|&i| !placed[i])
            .filter(|&i| (0..f).all(|j| j == i || placed[j] || !order[j][i]))
            .min_by(|&a, &b| label_key(alg, &cells[a]).cmp(&label_key(alg, &cells[b])))
            .expect("a finite partial order always has a minimal element");
        placed[next] = true;
        chain.push(next);
    }

    CellDecomposition {
        side,
        cells,
        cell_of,
        order,
        chain,
    }
}

/// Two-sided cells (2-cells).
pub fn two_sided_cells(alg: &BasedAlgebra) -> CellDecomposition {
    decompose(alg, Side::TwoSided)
}

/// Left or right cells.
pub fn one_sided_cells(alg: &BasedAlgebra, side: Side) -> CellDecomposition {
    decompose(alg, side)
}

/// Each `𝒞_j` is closed under multiplication by the whole basis on both
/// sides, and the union at `j = f` is the full basis.
pub fn check_ideal_filtration(alg: &BasedAlgebra, dec: &CellDecomposition) -> Verdict {
    let mut v = Verdict::new("cell filtration consists of two-sided ideals");
    for j in 1..=dec.len() {
        let ideal: BTreeSet<usize> = dec.cell_ideal_basis(j).expect("in range").into_iter().collect();
        for &b in &ideal {
            for x in 0..alg.rank() {
                for (side, prod) in [("left", alg.product(x, b)), ("right", alg.product(b, x))] {
                    if let Some(out) = prod.support().find(|r| !ideal.contains(r)) {
                        v.record(format!(
                            "𝒞_{j}: {side} product of {} by {} leaves the ideal via {}",
                            alg.label(b),
                            alg.label(x),
                            alg.label(out)
                        ));
                    }
                }
            }
        }
    }
    let total: usize = dec.cells().iter().map(Vec::len).sum();
    if total != alg.rank() {
        v.record(format!("cells cover {total} of {} basis elements", alg.rank()));
    }
    v
}

/// `ι` maps every 2-cell onto a 2-cell and preserves the cell order.
pub fn check_involution_on_cells(alg: &BasedAlgebra, dec: &CellDecomposition) -> Verdict {
    let mut v = Verdict::new("involution permutes cells preserving order");
    let f = dec.len();
    let mut image = vec![usize::MAX; f];
    for (i, members) in dec.cells().iter().enumerate() {
        let targets: BTreeSet<usize> = members
            .iter()
            .map(|&b| dec.cell_of(alg.involution(b)))
            .collect();
        if targets.len() != 1 {
            v.record(format!(
                "ι splits the cell containing {} across {} cells",
                alg.label(members[0]),
                targets.len()
            ));
            continue;
        }
        let t = *targets.iter().next().expect("nonempty");
        if dec.cell(t).len() != members.len() {
            v.record(format!("ι maps the cell containing {} onto a cell of different size", alg.label(members[0])));
        }
        image[i] = t;
    }
    for i in 0..f {
        for j in 0..f {
            if image[i] == usize::MAX || image[j] == usize::MAX {
                continue;
            }
            if dec.le(i, j) != dec.le(image[i], image[j]) {
                v.record(format!(
                    "ι does not preserve the order between the cells of {} and {}",
                    alg.label(dec.cell(i)[0]),
                    alg.label(dec.cell(j)[0])
                ));
            }
        }
    }
    v
}

/// Validates that `subset` is exactly one two-sided cell.
pub fn validate_two_sided_cell(alg: &BasedAlgebra, pre: &Preorder, subset: &[usize]) -> Result<(), CellError> {
    let not_cell = || CellError::NotACell(subset.iter().map(|&b| alg.label(b).to_string()).collect());
    let Some(&first) = subset.first() else {
        return Err(not_cell());
    };
    let class: BTreeSet<usize> = (0..alg.rank()).filter(|&b| pre.equivalent(b, first)).collect();
    let given: BTreeSet<usize> = subset.iter().copied().collect();
    if class != given || given.len() != subset.len() {
        return Err(not_cell());
    }
    Ok(())
}
