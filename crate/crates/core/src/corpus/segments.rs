//! Segments and multisegments over a finite alphabet of centers.
//!
//! A segment with center `a` and length `k` stands for the progression
//! `(a z^{-k+1}, a z^{-k+3}, .., a z^{k-1})`. Centers are opaque labels and
//! the powers of `z` are kept as formal integer offsets, which models a
//! generic (non-root-of-unity) `z`.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub center: String,
    pub length: usize,
}

impl Segment {
    pub fn new(center: impl Into<String>, length: usize) -> Self {
        assert!(length >= 1, "segments have positive length");
        Self {
            center: center.into(),
            length,
        }
    }

    /// The progression as `(center, z-exponent)` pairs.
    pub fn entries(&self) -> Vec<(&str, i64)> {
        let k = self.length as i64;
        (0..k).map(|t| (self.center.as_str(), -k + 1 + 2 * t)).collect()
    }
}

/// An unordered multiset of segments, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multisegment(Vec<Segment>);

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Self {
        segments.sort();
        Self(segments)
    }

    pub fn segments(&self) -> &[Segment] {
        &self.0
    }

    /// `|s| = Σ` segment lengths.
    pub fn size(&self) -> usize {
        self.0.iter().map(|s| s.length).sum()
    }

    /// `(center, length)` pairs, as serialized.
    pub fn pairs(&self) -> Vec<(String, usize)> {
        self.0.iter().map(|s| (s.center.clone(), s.length)).collect()
    }
}

impl std::fmt::Display for Multisegment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| format!("({}, {})", s.center, s.length)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The partition `℘` formed by the segment lengths, weakly decreasing.
pub fn wp_partition(ms: &Multisegment) -> Vec<usize> {
    let mut lengths: Vec<usize> = ms.0.iter().map(|s| s.length).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// All multisegments of total length `r` over `alphabet` whose partition
/// `℘` has at most `n` parts, in a deterministic order.
pub fn enumerate_segments(r: usize, n: usize, alphabet: &[&str]) -> Vec<Multisegment> {
    let mut centers: Vec<&str> = alphabet.to_vec();
    centers.sort_unstable();
    centers.dedup();
    let kinds: Vec<Segment> = centers
        .iter()
        .flat_map(|c| (1..=r).map(move |k| Segment::new(*c, k)))
        .collect();

    fn rec(
        kinds: &[Segment],
        start: usize,
        remaining: usize,
        parts_left: usize,
        current: &mut Vec<Segment>,
        out: &mut Vec<Multisegment>,
    ) {
        if remaining == 0 {
            out.push(Multisegment::new(current.clone()));
            return;
        }
        if parts_left == 0 {
            return;
        }
        for (k, seg) in kinds.iter().enumerate().skip(start) {
            if seg.length <= remaining {
                current.push(seg.clone());
                rec(kinds, k, remaining - seg.length, parts_left - 1, current, out);
                current.pop();
            }
        }
    }

    let mut out = Vec::new();
    rec(&kinds, 0, r, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}
