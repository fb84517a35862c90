//! Normed spaces for synthesis vectors and multiplier outputs: `R^k` with a
//! p-norm, or finitely supported real sequences with an exponent-q norm.
//!
//! Vectors are plain `Vec<f64>` treated as finitely supported sequences;
//! arithmetic pads the shorter operand with zeros, so a fixed-dimension space
//! is the special case where every vector happens to have the same length.

use serde::Serialize;

/// Deterministic pairwise (tree) summation. Reduction order depends only on
/// the slice length, so series sums are reproducible across runs and thread
/// counts, and rounding error grows like O(log n) rather than O(n).
pub fn tree_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n => {
            let mid = n / 2;
            tree_sum(&values[..mid]) + tree_sum(&values[mid..])
        }
    }
}

/// A real normed space of finitely supported coordinate vectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormedSpace {
    /// Fixed dimension for `R^k`; `None` for finitely supported sequences.
    pub dim: Option<usize>,
    /// Norm exponent, >= 1.
    pub exponent: f64,
}

impl NormedSpace {
    /// `R^k` with the exponent-p norm.
    pub fn euclidean(dim: usize, exponent: f64) -> Self {
        assert!(exponent >= 1.0, "norm exponent must be >= 1");
        NormedSpace { dim: Some(dim), exponent }
    }

    /// Finitely supported sequences with the exponent-q norm.
    pub fn sequences(exponent: f64) -> Self {
        assert!(exponent >= 1.0, "norm exponent must be >= 1");
        NormedSpace { dim: None, exponent }
    }

    pub fn norm(&self, v: &[f64]) -> f64 {
        norm_with_exponent(v, self.exponent)
    }

    pub fn distance(&self, u: &[f64], v: &[f64]) -> f64 {
        self.norm(&sub(u, v))
    }

    /// Conjugate exponent of this space's norm; the dual norm of a linear
    /// functional given by coefficients is the conjugate-exponent norm.
    pub fn dual_exponent(&self) -> f64 {
        conjugate_exponent(self.exponent)
    }
}

/// `p / (p - 1)`, with `p = 1` mapping to infinity.
pub fn conjugate_exponent(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

/// Exponent-p norm of a coordinate vector; `p = inf` gives the sup norm.
pub fn norm_with_exponent(v: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        return v.iter().fold(0.0, |m, x| m.max(x.abs()));
    }
    let powers: Vec<f64> = v.iter().map(|x| x.abs().powf(p)).collect();
    tree_sum(&powers).powf(1.0 / p)
}

/// Coordinate-wise difference with zero padding.
pub fn sub(u: &[f64], v: &[f64]) -> Vec<f64> {
    let n = u.len().max(v.len());
    (0..n)
        .map(|i| u.get(i).copied().unwrap_or(0.0) - v.get(i).copied().unwrap_or(0.0))
        .collect()
}

/// Coordinate-wise sum with zero padding.
pub fn add(u: &[f64], v: &[f64]) -> Vec<f64> {
    let n = u.len().max(v.len());
    (0..n)
        .map(|i| u.get(i).copied().unwrap_or(0.0) + v.get(i).copied().unwrap_or(0.0))
        .collect()
}

pub fn scale(alpha: f64, v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| alpha * x).collect()
}

/// Sum a list of vectors coordinate-wise with tree summation per coordinate.
pub fn tree_sum_vectors(terms: &[Vec<f64>]) -> Vec<f64> {
    let dim = terms.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = Vec::with_capacity(dim);
    let mut column = Vec::with_capacity(terms.len());
    for i in 0..dim {
        column.clear();
        column.extend(terms.iter().map(|t| t.get(i).copied().unwrap_or(0.0)));
        out.push(tree_sum(&column));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tree_sum_matches_sequential_on_small_inputs() {
        let xs = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(tree_sum(&xs), 15.0);
        assert_eq!(tree_sum(&[]), 0.0);
        assert_eq!(tree_sum(&[7.5]), 7.5);
    }

    #[test]
    fn dual_exponents() {
        assert_eq!(conjugate_exponent(2.0), 2.0);
        assert!((conjugate_exponent(3.0) - 1.5).abs() < 1e-15);
        assert!(conjugate_exponent(1.0).is_infinite());
    }

    #[test]
    fn padded_arithmetic() {
        assert_eq!(sub(&[1.0, 2.0, 3.0], &[1.0]), vec![0.0, 2.0, 3.0]);
        assert_eq!(add(&[1.0], &[0.0, 2.0]), vec![1.0, 2.0]);
    }

    proptest! {
        #[test]
        fn norm_axioms_on_sampled_vectors(
            u in proptest::collection::vec(-100.0f64..100.0, 1..8),
            v in proptest::collection::vec(-100.0f64..100.0, 1..8),
            alpha in -10.0f64..10.0,
            p in 1.0f64..4.0,
        ) {
            let zero = vec![0.0; u.len()];
            prop_assert!(norm_with_exponent(&zero, p) == 0.0);

            let homog = norm_with_exponent(&scale(alpha, &u), p);
            let expected = alpha.abs() * norm_with_exponent(&u, p);
            prop_assert!((homog - expected).abs() <= 1e-9 * (1.0 + expected));

            let triangle = norm_with_exponent(&add(&u, &v), p);
            let sum = norm_with_exponent(&u, p) + norm_with_exponent(&v, p);
            prop_assert!(triangle <= sum + 1e-9 * (1.0 + sum));
        }

        #[test]
        fn tree_sum_is_permutation_stable_enough(
            xs in proptest::collection::vec(-1e6f64..1e6, 0..64),
        ) {
            let naive: f64 = xs.iter().sum();
            let tree = tree_sum(&xs);
            prop_assert!((naive - tree).abs() <= 1e-6 * (1.0 + naive.abs()));
        }
    }
}
