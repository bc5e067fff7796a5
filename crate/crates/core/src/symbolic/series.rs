//! Rational homotopy ranks of the loops on a wedge of spheres.
//!
//! The homotopy of `Ω(S^{n_1} ∨ … ∨ S^{n_r})` is a free graded Lie algebra
//! on generators of degrees `n_i − 1`. By Poincaré–Birkhoff–Witt its ranks
//! `d_k` satisfy
//!
//! ```text
//! ∏_{k odd} (1+t^k)^{d_k} · ∏_{k even} (1−t^k)^{−d_k} = 1 / (1 − Σ_i t^{n_i−1})
//! ```
//!
//! (odd generators give exterior factors, even generators polynomial ones).
//! The ranks are solved degree by degree in exact integer arithmetic and the
//! solution is re-substituted as a self-check.

use num_bigint::BigInt;

use crate::{Error, Result};

const MAX_DEGREE_GUARD: usize = 64;

/// Ranks in degrees `1..=max_degree` for the looped wedge of spheres with
/// the given dimensions (each ≥ 2).
pub fn rational_rank_series(sphere_dims: &[u64], max_degree: usize) -> Result<Vec<u64>> {
    if max_degree > MAX_DEGREE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "rank series degree {max_degree} exceeds the cap {MAX_DEGREE_GUARD}"
        )));
    }
    if sphere_dims.iter().any(|&n| n < 2) {
        return Err(Error::MissingHypothesis(
            "sphere dimensions must be at least 2".into(),
        ));
    }
    // Target series A(t) = 1/(1 − Σ_i t^{n_i−1}): number of words in the
    // tensor algebra, weighted by degree.
    let mut target = vec![BigInt::from(0); max_degree + 1];
    target[0] = BigInt::from(1);
    for k in 1..=max_degree {
        let mut acc = BigInt::from(0);
        for &n in sphere_dims {
            let g = (n - 1) as usize;
            if g <= k {
                acc += target[k - g].clone();
            }
        }
        target[k] = acc;
    }

    let mut ranks = vec![0u64; max_degree + 1];
    // Product of the PBW factors for ranks solved so far.
    let mut partial = vec![BigInt::from(0); max_degree + 1];
    partial[0] = BigInt::from(1);
    for k in 1..=max_degree {
        // Factors of degree < k cannot change the t^k coefficient once
        // included, and the degree-k factor contributes exactly d_k·t^k.
        let deficit = target[k].clone() - partial[k].clone();
        let d_k: u64 = deficit.try_into().map_err(|_| {
            Error::SeriesInconsistent(format!("negative rank demanded at degree {k}"))
        })?;
        ranks[k] = d_k;
        if d_k > 0 {
            partial = multiply_factor(&partial, k, d_k, max_degree);
        }
    }

    let reconstructed = pbw_product(&ranks, max_degree);
    if reconstructed != target {
        return Err(Error::SeriesInconsistent(
            "reconstruction of the generating series failed".into(),
        ));
    }
    Ok(ranks[1..].to_vec())
}

/// Multiplies `series` by `(1+t^k)^d` for odd `k` or `(1−t^k)^{−d}` for even
/// `k`, truncated at `max_degree`.
fn multiply_factor(series: &[BigInt], k: usize, d: u64, max_degree: usize) -> Vec<BigInt> {
    // Coefficient of t^{jk} in the factor.
    let factor_coeff = |j: usize| -> BigInt {
        if k % 2 == 1 {
            // binomial(d, j); zero above j = d.
            if (j as u64) > d {
                BigInt::from(0)
            } else {
                binomial(d, j as u64)
            }
        } else {
            // binomial(d + j − 1, j): multiset coefficient of 1/(1−t^k)^d.
            binomial(d + j as u64 - 1, j as u64)
        }
    };
    let mut out = vec![BigInt::from(0); max_degree + 1];
    for j in 0..=(max_degree / k) {
        let c = factor_coeff(j);
        if c == BigInt::from(0) {
            continue;
        }
        for i in 0..=(max_degree - j * k) {
            let term = series[i].clone() * c.clone();
            out[i + j * k] += term;
        }
    }
    out
}

fn pbw_product(ranks: &[u64], max_degree: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::from(0); max_degree + 1];
    series[0] = BigInt::from(1);
    for (k, &d) in ranks.iter().enumerate().skip(1) {
        if d > 0 {
            series = multiply_factor(&series, k, d, max_degree);
        }
    }
    series
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut out = BigInt::from(1);
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_three_spheres() {
        // Both generators in degree 2: ordinary free Lie algebra on two
        // letters, so ranks are the 2-letter Witt numbers at even degrees.
        let ranks = rational_rank_series(&[3, 3], 10).unwrap();
        assert_eq!(ranks, vec![0, 2, 0, 1, 0, 2, 0, 3, 0, 6]);
    }

    #[test]
    fn single_three_sphere() {
        assert_eq!(rational_rank_series(&[3], 4).unwrap(), vec![0, 1, 0, 0]);
    }

    #[test]
    fn two_two_spheres() {
        // Odd generators x, y in degree 1; [x,y] in degree 2 plus the
        // squares x², y² from the exterior/polynomial bookkeeping: ranks 2, 3.
        let ranks = rational_rank_series(&[2, 2], 2).unwrap();
        assert_eq!(ranks, vec![2, 3]);
    }

    #[test]
    fn single_two_sphere_matches_loop_series() {
        // One odd generator: (1+t) · (1−t²)^{-d₂} · … must equal 1/(1−t),
        // forcing one even generator in degree 2 and nothing more.
        assert_eq!(rational_rank_series(&[2], 6).unwrap(), vec![1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn degree_guard() {
        assert!(matches!(
            rational_rank_series(&[3, 3], 65),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn rejects_low_dimensions() {
        assert!(rational_rank_series(&[1], 4).is_err());
    }

    #[test]
    fn growth_is_exponential_for_two_generators() {
        let ranks = rational_rank_series(&[3, 3], 32).unwrap();
        let sum = |n: usize| -> u64 { ranks[..n].iter().sum() };
        for n in [4, 8, 16] {
            assert!(sum(2 * n) as f64 >= 1.5 * sum(n) as f64, "degree {n}");
        }
    }
}
