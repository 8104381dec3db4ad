//! Multisegments by generating every multiset of `(center, length)` pairs of
//! total length `r` and filtering on the number of parts.

use std::collections::BTreeSet;

pub type Raw = Vec<(String, usize)>;

pub fn brute_force(r: usize, n: usize, alphabet: &[&str]) -> BTreeSet<Raw> {
    let items: Vec<(String, usize)> = alphabet
        .iter()
        .flat_map(|c| (1..=r).map(move |k| (c.to_string(), k)))
        .collect();
    let mut out = BTreeSet::new();
    // every multiset of at most r items, by counts per item
    let mut counts = vec![0usize; items.len()];
    loop {
        let total: usize = counts.iter().zip(&items).map(|(c, (_, k))| c * k).sum();
        let parts: usize = counts.iter().sum();
        if total == r && parts <= n {
            let mut ms: Raw = Vec::new();
            for (c, item) in counts.iter().zip(&items) {
                for _ in 0..*c {
                    ms.push(item.clone());
                }
            }
            ms.sort();
            out.insert(ms);
        }
        // odometer with each digit bounded by r
        let mut pos = 0;
        loop {
            if pos == counts.len() {
                return out;
            }
            counts[pos] += 1;
            if counts[pos] <= r {
                break;
            }
            counts[pos] = 0;
            pos += 1;
        }
    }
}
