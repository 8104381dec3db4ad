//! Cells straight from the definition: `b ⪯ b'` iff `b` lies in every based
//! ideal containing `b'`, with based ideals found by enumerating subsets.

use affcell::BasedAlgebra;

/// Whether the subset `mask` spans a two-sided (or one-sided) ideal.
fn is_ideal(alg: &BasedAlgebra, mask: u64, left: bool, right: bool) -> bool {
    let n = alg.rank();
    for b in (0..n).filter(|b| mask & (1 << b) != 0) {
        for x in 0..n {
            if left && alg.product(x, b).support().any(|r| mask & (1 << r) == 0) {
                return false;
            }
            if right && alg.product(b, x).support().any(|r| mask & (1 << r) == 0) {
                return false;
            }
        }
    }
    true
}

/// `le[b][b2]` is `b ⪯ b2` for the chosen sides. Exponential in the rank.
pub fn preorder_by_subsets(alg: &BasedAlgebra, left: bool, right: bool) -> Vec<Vec<bool>> {
    let n = alg.rank();
    assert!(n <= 16, "subset enumeration is for tiny tables");
    let ideals: Vec<u64> = (0u64..1 << n).filter(|&m| is_ideal(alg, m, left, right)).collect();
    let mut le = vec![vec![true; n]; n];
    for &m in &ideals {
        for b2 in (0..n).filter(|b| m & (1 << b) != 0) {
            for b in (0..n).filter(|b| m & (1 << b) == 0) {
                le[b][b2] = false;
            }
        }
    }
    le
}

/// `le[b][b2]` by growing the ideal generated by `b2` to a fixed point.
pub fn preorder_by_closure(alg: &BasedAlgebra, left: bool, right: bool) -> Vec<Vec<bool>> {
    let n = alg.rank();
    let mut le = vec![vec![false; n]; n];
    for b2 in 0..n {
        let mut inside = vec![false; n];
        inside[b2] = true;
        loop {
            let mut grew = false;
            for b in 0..n {
                if !inside[b] {
                    continue;
                }
                for x in 0..n {
                    let mut targets: Vec<usize> = Vec::new();
                    if left {
                        targets.extend(alg.product(x, b).support());
                    }
                    if right {
                        targets.extend(alg.product(b, x).support());
                    }
                    for t in targets {
                        if !inside[t] {
                            inside[t] = true;
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        for b in 0..n {
            le[b][b2] = inside[b];
        }
    }
    le
}

/// Equivalence classes of a preorder, as sorted member lists sorted by
/// smallest member.
pub fn classes(le: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = le.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for b in 0..n {
        if seen[b] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&x| le[x][b] && le[b][x]).collect();
        for &x in &class {
            seen[x] = true;
        }
        out.push(class);
    }
    out
}
