//! Partitions and Littlewood–Richardson coefficients by tableau enumeration.

/// A partition as a weakly decreasing list of positive parts.
pub type Partition = Vec<usize>;

/// Drops trailing zeros.
pub fn trim(p: &[usize]) -> Partition {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn is_partition(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

pub fn size(p: &[usize]) -> usize {
    p.iter().sum()
}

fn part(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

/// `μ ⊆ λ` as Young diagrams.
pub fn contains(outer: &[usize], inner: &[usize]) -> bool {
    (0..inner.len().max(outer.len())).all(|i| part(inner, i) <= part(outer, i))
}

/// All partitions of `n` with at most `max_parts` parts, in reverse
/// lexicographic order.
pub fn partitions(n: usize, max_parts: usize) -> Vec<Partition> {
    fn rec(n: usize, max_part: usize, parts_left: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for first in (1..=n.min(max_part)).rev() {
            cur.push(first);
            rec(n - first, first, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// The Littlewood–Richardson coefficient `c_{λμ}^ν`: the number of
/// semistandard fillings of `ν/λ` with content `μ` whose reverse reading word
/// (rows top to bottom, each right to left) is a lattice word.
///
/// Returns 0 when `|ν| ≠ |λ| + |μ|` or `λ ⊄ ν`.
pub fn lr_coefficient(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let (lambda, mu, nu) = (trim(lambda), trim(mu), trim(nu));
    debug_assert!(is_partition(&lambda) && is_partition(&mu) && is_partition(&nu));
    if size(&nu) != size(&lambda) + size(&mu) || !contains(&nu, &lambda) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (part(&lambda, r)..nu[r]).rev().map(move |c| (r, c)))
        .collect();

    struct Search<'a> {
        lambda: &'a [usize],
        mu: &'a [usize],
        nu: &'a [usize],
        cells: &'a [(usize, usize)],
        filling: Vec<Vec<usize>>,
        counts: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, k: usize) -> u64 {
            if k == self.cells.len() {
                return 1;
            }
            let (r, c) = self.cells[k];
            let mut total = 0;
            for val in 1..=self.mu.len() {
                if self.counts[val] >= self.mu[val - 1] {
                    continue;
                }
                if val > 1 && self.counts[val] + 1 > self.counts[val - 1] {
                    continue;
                }
                if c + 1 < self.nu[r] && val > self.filling[r][c + 1] {
                    continue;
                }
                if r > 0 && c >= part(self.lambda, r - 1) && c < self.nu[r - 1] && val <= self.filling[r - 1][c] {
                    continue;
                }
                self.filling[r][c] = val;
                self.counts[val] += 1;
                total += self.run(k + 1);
                self.counts[val] -= 1;
                self.filling[r][c] = 0;
            }
            total
        }
    }

    let mut search = Search {
        lambda: &lambda,
        mu: &mu,
        nu: &nu,
        cells: &cells,
        filling: nu.iter().map(|&len| vec![0; len]).collect(),
        counts: vec![0; mu.len() + 1],
    };
    search.run(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
        assert_eq!(lr_coefficient(&[2], &[1], &[3, 1]), 0);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&[], &[2, 1], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[3]), 0);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(4, 2), vec![vec![4], vec![3, 1], vec![2, 2]]);
    }
}
