//! Cells of the corpus tables against ideals enumerated from the definition.

use std::collections::BTreeSet;

use affcell::cells::{one_sided_cells, two_sided_cells, Side};
use affcell::corpus::{gen_hecke_kl, gen_qschur};
use affcell::BasedAlgebra;
use affcell_oracles::ideals::{classes, preorder_by_closure, preorder_by_subsets};

fn as_set(cells: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    cells
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort();
            c
        })
        .collect()
}

fn check(alg: &BasedAlgebra, exhaustive: bool) {
    for (side, left, right) in [(Side::TwoSided, true, true), (Side::Left, true, false), (Side::Right, false, true)] {
        let le = if exhaustive {
            preorder_by_subsets(alg, left, right)
        } else {
            preorder_by_closure(alg, left, right)
        };
        let dec = match side {
            Side::TwoSided => two_sided_cells(alg),
            s => one_sided_cells(alg, s),
        };
        assert_eq!(as_set(dec.cells()), as_set(&classes(&le)), "{side:?} cells");
        for i in 0..dec.len() {
            for j in 0..dec.len() {
                let (b, b2) = (dec.cell(i)[0], dec.cell(j)[0]);
                assert_eq!(dec.le(i, j), le[b][b2], "{side:?} order between cells {i} and {j}");
            }
        }
    }
}

#[test]
fn s2_and_s3_by_subset_enumeration() {
    check(&gen_hecke_kl(1).unwrap(), true);
    check(&gen_hecke_kl(2).unwrap(), true);
}

#[test]
fn s4_by_closure() {
    check(&gen_hecke_kl(3).unwrap(), false);
}

#[test]
fn qschur_tables() {
    check(&gen_qschur(2, 2).unwrap(), true);
    check(&gen_qschur(2, 3).unwrap(), false);
}

#[test]
fn s3_cell_sizes() {
    let alg = gen_hecke_kl(2).unwrap();
    let dec = two_sided_cells(&alg);
    let sizes: Vec<usize> = dec.chain_cells().map(<[usize]>::len).collect();
    assert_eq!(sizes, vec![1, 4, 1]);
    let middle: Vec<Vec<String>> = one_sided_cells(&alg, Side::Left)
        .cells()
        .iter()
        .filter(|c| c.len() == 2)
        .map(|c| {
            let mut l: Vec<String> = c.iter().map(|&b| alg.label(b).to_string()).collect();
            l.sort();
            l
        })
        .collect();
    let middle: BTreeSet<_> = middle.into_iter().collect();
    let expected: BTreeSet<Vec<String>> = [vec!["s1", "s2s1"], vec!["s1s2", "s2"]]
        .iter()
        .map(|c| c.iter().map(|s| s.to_string()).collect())
        .collect();
    assert_eq!(middle, expected);
}
