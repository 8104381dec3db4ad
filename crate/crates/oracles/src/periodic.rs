//! `d_A` by summing over a finite window and growing it until the value is
//! stable.

use affcell::corpus::PeriodicMatrix;

/// `Σ a_{i,j} a_{k,l}` over `1 ≤ i ≤ n`, `k ≤ i`, `j < l`, with `j, k, l`
/// restricted to `[-w, w]`.
pub fn d_stat_window(a: &PeriodicMatrix, w: i64) -> u64 {
    let n = a.period();
    let mut total = 0;
    for i in 1..=n {
        for j in -w..=w {
            let x = a.get(i, j);
            if x == 0 {
                continue;
            }
            for k in -w..=i {
                for l in j + 1..=w {
                    total += x * a.get(k, l);
                }
            }
        }
    }
    total
}

/// Grows the window by one period at a time until two consecutive values
/// agree. Returns the stable value and the window where it was reached.
pub fn d_stat_truncated(a: &PeriodicMatrix) -> (u64, i64) {
    let n = a.period();
    let reach = a.fundamental_entries().map(|(_, j, _)| j.abs()).max().unwrap_or(0);
    let mut w = 3 * (reach + n);
    let mut prev = d_stat_window(a, w);
    loop {
        w += n;
        let next = d_stat_window(a, w);
        if next == prev {
            return (next, w);
        }
        prev = next;
    }
}
