//! Schur polynomials by semistandard tableaux, used to recover
//! Littlewood–Richardson coefficients, and the hook-content dimension formula.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

/// A polynomial in `k` variables: exponent vector to coefficient.
pub type Poly = BTreeMap<Vec<u32>, i64>;

/// `s_λ(x_1, .., x_k)` by enumerating semistandard tableaux.
pub fn schur(lambda: &[usize], k: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut fill: Vec<Vec<usize>> = lambda.iter().map(|&len| vec![0; len]).collect();
    let mut out = Poly::new();

    fn rec(idx: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, k: usize, out: &mut Poly) {
        if idx == cells.len() {
            let mut e = vec![0u32; k];
            for row in fill.iter() {
                for &x in row {
                    e[x] += 1;
                }
            }
            *out.entry(e).or_default() += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { fill[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 0 };
        for x in lo_row.max(lo_col)..k {
            fill[r][c] = x;
            rec(idx + 1, cells, fill, k, out);
        }
    }

    if cells.is_empty() {
        out.insert(vec![0; k], 1);
        return out;
    }
    if lambda.len() > k {
        return out;
    }
    rec(0, &cells, &mut fill, k, &mut out);
    out
}

pub fn multiply(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in Schur polynomials by repeatedly removing
/// the lexicographically largest monomial.
pub fn schur_expand(mut p: Poly, k: usize) -> BTreeMap<Vec<usize>, i64> {
    let mut out = BTreeMap::new();
    while let Some((e, &c)) = p.iter().next_back() {
        let nu: Vec<usize> = e.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
        assert!(nu.windows(2).all(|w| w[0] >= w[1]), "leading monomial is not dominant");
        let s = schur(&nu, k);
        for (m, sc) in s {
            *p.entry(m).or_default() -= c * sc;
        }
        p.retain(|_, x| *x != 0);
        out.insert(nu, c);
    }
    out
}

/// All `c_{λμ}^ν` via `s_λ s_μ` in `ℓ(λ) + ℓ(μ)` variables.
pub fn lr_by_schur(lambda: &[usize], mu: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let k = (lambda.len() + mu.len()).max(1);
    schur_expand(multiply(&schur(lambda, k), &schur(mu, k)), k)
}

/// Hook-content formula `dim V_λ(GL_k) = Π (k + c(u)) / h(u)` for a partition.
pub fn hook_content_dimension(lambda: &[usize], k: usize) -> BigInt {
    if lambda.len() > k {
        return BigInt::from(0);
    }
    let conj = |c: usize| lambda.iter().filter(|&&len| len > c).count();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (r, &len) in lambda.iter().enumerate() {
        for c in 0..len {
            num *= k as i64 + c as i64 - r as i64;
            den *= (len - c - 1) + (conj(c) - r - 1) + 1;
        }
    }
    num / den
}

/// Dimension of the `GL_k` irreducible with an arbitrary dominant weight,
/// by twisting to a partition.
pub fn gl_dimension(weight: &[i64]) -> BigInt {
    let k = weight.len();
    let m = weight.last().map_or(0, |&x| (-x).max(0));
    let lambda: Vec<usize> = weight.iter().map(|&x| (x + m) as usize).filter(|&x| x > 0).collect();
    hook_content_dimension(&lambda, k)
}
