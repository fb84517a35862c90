//! Symbol sequences: the scalar weights of a multiplier operator.
//!
//! A symbol is represented as a named base family (with monotone, analytically
//! known tails) overridden by finitely many leading values. Finitely supported
//! symbols use the `Zero` base. This keeps `sup |λ_n|` and the tail suprema
//! `sup_{n > m} |λ_n|` exact, which is what the multiplier norm bound and the
//! compactness gap consume.

use serde::Serialize;

/// Base families, indexed 1-based in the formulas: `λ_n` for `n = 1, 2, ...`
/// maps to the 0-based storage index `i = n - 1`. All families have
/// nonincreasing `|λ_n|`, so tail suprema are exact.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolFamily {
    Zero,
    /// `λ_n = c`.
    Constant(f64),
    /// `λ_n = 1/n`.
    OneOverN,
    /// `λ_n = 1/n^2`.
    OneOverNSquared,
    /// `λ_n = r^n` with `|r| < 1`.
    Geometric(f64),
}

impl SymbolFamily {
    fn value(&self, i: usize) -> f64 {
        let n = (i + 1) as f64;
        match self {
            SymbolFamily::Zero => 0.0,
            SymbolFamily::Constant(c) => *c,
            SymbolFamily::OneOverN => 1.0 / n,
            SymbolFamily::OneOverNSquared => 1.0 / (n * n),
            SymbolFamily::Geometric(r) => r.powf(n),
        }
    }

    /// `sup_{i >= m} |value(i)|`, exact by monotonicity.
    fn tail_sup(&self, m: usize) -> f64 {
        match self {
            SymbolFamily::Zero => 0.0,
            SymbolFamily::Constant(c) => c.abs(),
            _ => self.value(m).abs(),
        }
    }

    /// Upper bound on `sum_{i >= m} |value(i)|^p`, exact where a closed form
    /// exists; `None` when the sum diverges.
    fn tail_power_sum_upper(&self, m: usize, p: f64) -> Option<f64> {
        match self {
            SymbolFamily::Zero => Some(0.0),
            SymbolFamily::Constant(c) => {
                if *c == 0.0 {
                    Some(0.0)
                } else {
                    None
                }
            }
            SymbolFamily::Geometric(r) => {
                let rp = r.abs().powf(p);
                // sum_{n >= m+1} r^(pn) = r^(p(m+1)) / (1 - r^p)
                Some(rp.powf((m + 1) as f64) / (1.0 - rp))
            }
            SymbolFamily::OneOverN => zeta_tail_upper(m + 1, p),
            SymbolFamily::OneOverNSquared => zeta_tail_upper(m + 1, 2.0 * p),
        }
    }
}

/// Upper bound on `sum_{n > start} n^(-s)` (the tail of `sum n^(-s)` after
/// the first `start` terms). Exact zeta values are used for `s = 2` and
/// `s = 4`; otherwise a partial sum plus the integral-test remainder
/// `N^(1-s)/(s-1)` gives a certified upper bound.
fn zeta_tail_upper(start: usize, s: f64) -> Option<f64> {
    if s <= 1.0 {
        return None;
    }
    let head: f64 = (1..=start).map(|n| (n as f64).powf(-s)).sum();
    let zeta = if s == 2.0 {
        std::f64::consts::PI.powi(2) / 6.0
    } else if s == 4.0 {
        std::f64::consts::PI.powi(4) / 90.0
    } else {
        let terms = 200_000usize;
        let partial: f64 = (1..=terms).map(|n| (n as f64).powf(-s)).sum();
        partial + (terms as f64).powf(1.0 - s) / (s - 1.0)
    };
    Some((zeta - head).max(0.0))
}

/// Declared summability class of a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolClass {
    EllInfty,
    CZero,
    EllP(f64),
}

/// A bounded real symbol sequence with exact sup norm and tail suprema.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolSequence {
    base: SymbolFamily,
    /// Values for indices `< leading.len()`, overriding the base family.
    leading: Vec<f64>,
    class: SymbolClass,
}

impl SymbolSequence {
    /// Finitely supported symbol: the given values, then zeros.
    pub fn from_values(values: Vec<f64>) -> Self {
        SymbolSequence {
            base: SymbolFamily::Zero,
            leading: values,
            class: SymbolClass::CZero,
        }
    }

    /// `λ_n = 1/n`.
    pub fn one_over_n() -> Self {
        SymbolSequence {
            base: SymbolFamily::OneOverN,
            leading: Vec::new(),
            class: SymbolClass::CZero,
        }
    }

    /// `λ_n = 1/n^2`.
    pub fn one_over_n_squared() -> Self {
        SymbolSequence {
            base: SymbolFamily::OneOverNSquared,
            leading: Vec::new(),
            class: SymbolClass::CZero,
        }
    }

    /// `λ_n = r^n`, `|r| < 1`.
    pub fn geometric(r: f64) -> Self {
        assert!(r.abs() < 1.0, "geometric symbol requires |r| < 1");
        SymbolSequence {
            base: SymbolFamily::Geometric(r),
            leading: Vec::new(),
            class: SymbolClass::CZero,
        }
    }

    /// `λ_n = c` for every n; bounded but not c0 unless c = 0.
    pub fn constant(c: f64) -> Self {
        SymbolSequence {
            base: SymbolFamily::Constant(c),
            leading: Vec::new(),
            class: if c == 0.0 { SymbolClass::CZero } else { SymbolClass::EllInfty },
        }
    }

    pub fn with_class(mut self, class: SymbolClass) -> Self {
        self.class = class;
        self
    }

    pub fn class(&self) -> SymbolClass {
        self.class
    }

    pub fn value(&self, i: usize) -> f64 {
        self.leading
            .get(i)
            .copied()
            .unwrap_or_else(|| self.base.value(i))
    }

    /// Exact supremum of `|λ_n|`.
    pub fn sup_norm(&self) -> f64 {
        let head = self.leading.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        head.max(self.base.tail_sup(self.leading.len()))
    }

    /// Exact `sup_{i >= m} |λ_i|` (0-based index: the tail after keeping the
    /// first `m` terms).
    pub fn tail_sup(&self, m: usize) -> f64 {
        let head = self
            .leading
            .iter()
            .skip(m)
            .fold(0.0f64, |acc, v| acc.max(v.abs()));
        head.max(self.base.tail_sup(self.leading.len().max(m)))
    }

    /// Certified upper bound on the p-norm `(sum |λ_n|^p)^(1/p)`; exact for
    /// finitely supported and geometric symbols. `None` when the sum
    /// diverges or no finite bound is available.
    pub fn p_norm_upper(&self, p: f64) -> Option<f64> {
        let head: f64 = self.leading.iter().map(|v| v.abs().powf(p)).sum();
        let tail = self.base.tail_power_sum_upper(self.leading.len(), p)?;
        Some((head + tail).powf(1.0 / p))
    }

    /// Number of terms when the symbol is finitely supported.
    pub fn finite_support(&self) -> Option<usize> {
        match self.base {
            SymbolFamily::Zero => Some(self.leading.len()),
            SymbolFamily::Constant(c) if c == 0.0 => Some(self.leading.len()),
            _ => None,
        }
    }

    /// The symbol with `delta` added to its leading values.
    pub fn perturbed(&self, delta: &[f64]) -> SymbolSequence {
        let len = self.leading.len().max(delta.len());
        let leading = (0..len)
            .map(|i| self.value(i) + delta.get(i).copied().unwrap_or(0.0))
            .collect();
        SymbolSequence {
            base: self.base.clone(),
            leading,
            class: self.class,
        }
    }

    /// The truncated symbol keeping only the first `m` terms (zero beyond).
    pub fn truncated(&self, m: usize) -> SymbolSequence {
        SymbolSequence::from_values((0..m).map(|i| self.value(i)).collect())
    }

    /// The tail symbol: zero for the first `m` terms, unchanged beyond.
    pub fn tail_from(&self, m: usize) -> SymbolSequence {
        let len = self.leading.len().max(m);
        let leading = (0..len)
            .map(|i| if i < m { 0.0 } else { self.value(i) })
            .collect();
        SymbolSequence {
            base: self.base.clone(),
            leading,
            class: self.class,
        }
    }

    /// Index-wise difference `self - other` when it has finite support:
    /// requires equal base families (beyond the leading overrides the values
    /// coincide) or two finitely supported symbols.
    pub fn difference_finite(&self, other: &SymbolSequence) -> Option<Vec<f64>> {
        if self.base != other.base && !(self.finite_support().is_some() && other.finite_support().is_some()) {
            return None;
        }
        let len = self.leading.len().max(other.leading.len());
        Some((0..len).map(|i| self.value(i) - other.value(i)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_over_n_tail_sup() {
        let s = SymbolSequence::one_over_n();
        assert!((s.tail_sup(10) - 1.0 / 11.0).abs() < 1e-15);
        assert_eq!(s.sup_norm(), 1.0);
    }

    #[test]
    fn geometric_tail_sup() {
        let s = SymbolSequence::geometric(0.5);
        assert!((s.tail_sup(4) - 0.5f64.powi(5)).abs() < 1e-15);
    }

    #[test]
    fn finite_symbol_tail_vanishes_past_support() {
        let s = SymbolSequence::from_values(vec![3.0, -1.0, 0.5]);
        assert_eq!(s.sup_norm(), 3.0);
        assert_eq!(s.tail_sup(3), 0.0);
        assert_eq!(s.tail_sup(1), 1.0);
        assert_eq!(s.finite_support(), Some(3));
    }

    #[test]
    fn geometric_p_norm_is_exact() {
        let s = SymbolSequence::geometric(0.5);
        // sum_{n>=1} (1/2)^(2n) = 1/3
        let expected = (1.0f64 / 3.0).sqrt();
        assert!((s.p_norm_upper(2.0).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn one_over_n_two_norm_matches_zeta_two() {
        let s = SymbolSequence::one_over_n();
        let expected = (std::f64::consts::PI.powi(2) / 6.0).sqrt();
        assert!((s.p_norm_upper(2.0).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn one_over_n_p_norm_upper_is_an_upper_bound() {
        let s = SymbolSequence::one_over_n();
        let upper = s.p_norm_upper(1.5).unwrap();
        let partial: f64 = (1..=100_000).map(|n| (n as f64).powf(-1.5)).sum();
        assert!(upper.powf(1.5) >= partial);
        assert!(upper.powf(1.5) <= partial + 0.1);
    }

    #[test]
    fn constant_symbol_has_no_p_norm() {
        assert!(SymbolSequence::constant(1.0).p_norm_upper(2.0).is_none());
        assert!(SymbolSequence::one_over_n().p_norm_upper(1.0).is_none());
    }

    #[test]
    fn perturbation_and_difference_roundtrip() {
        let s = SymbolSequence::one_over_n();
        let t = s.perturbed(&[0.1, -0.2]);
        assert!((t.value(0) - 1.1).abs() < 1e-15);
        assert!((t.value(1) - 0.3).abs() < 1e-15);
        assert!((t.value(2) - 1.0 / 3.0).abs() < 1e-15);
        let diff = t.difference_finite(&s).unwrap();
        assert!((diff[0] - 0.1).abs() < 1e-15);
        assert!((diff[1] + 0.2).abs() < 1e-15);
        assert!(SymbolSequence::geometric(0.5)
            .difference_finite(&s)
            .is_none());
    }

    #[test]
    fn truncation_and_tail_partition_the_symbol() {
        let s = SymbolSequence::one_over_n();
        let head = s.truncated(5);
        let tail = s.tail_from(5);
        for i in 0..20 {
            assert!((head.value(i) + tail.value(i) - s.value(i)).abs() < 1e-15);
        }
        assert_eq!(head.finite_support(), Some(5));
        assert!((tail.tail_sup(0) - 1.0 / 6.0).abs() < 1e-15);
    }
}
