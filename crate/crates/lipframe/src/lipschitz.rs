//! Lipschitz maps from a metric space into the scalars, a normed space, or
//! another metric space, with sampled estimation of Lipschitz numbers
//! `Lip(f) = sup_{x != y} d(f(x), f(y)) / d(x, y)` and of the pointed norm
//! on maps vanishing at the basepoint.
//!
//! Suprema over infinite pair sets are not computable, so estimates are
//! certified lower bounds: the maximum observed difference quotient together
//! with its witness pair. Upper bounds enter only through declared analytic
//! constants, which estimators cross-check.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::metric::{MetricSpace, PairSample, Point, PointedMetricSpace, SampleStrategy};
use crate::normed::{self, NormedSpace};
use crate::{DECLARED_BOUND_RTOL, POINTED_TOLERANCE};

/// Where a Lipschitz map takes its values, and how differences are measured.
#[derive(Debug, Clone)]
pub enum Codomain {
    /// Real scalars with `|u - v|`.
    Scalar,
    /// A normed space with `||u - v||`.
    Normed(NormedSpace),
    /// A metric space with its own distance.
    Metric(MetricSpace),
}

impl Codomain {
    pub fn distance(&self, u: &Point, v: &Point) -> f64 {
        match self {
            Codomain::Scalar => match (u, v) {
                (Point::Scalar(a), Point::Scalar(b)) => (a - b).abs(),
                _ => panic!("scalar codomain expects scalar values"),
            },
            Codomain::Normed(ns) => match (u, v) {
                (Point::Vector(a), Point::Vector(b)) => ns.distance(a, b),
                _ => panic!("normed codomain expects vector values"),
            },
            Codomain::Metric(space) => space.distance(u, v),
        }
    }

    /// Distance of a value from the codomain's zero; meaningful for scalar
    /// and normed codomains.
    pub fn norm(&self, u: &Point) -> f64 {
        match self {
            Codomain::Scalar => match u {
                Point::Scalar(a) => a.abs(),
                _ => panic!("scalar codomain expects scalar values"),
            },
            Codomain::Normed(ns) => match u {
                Point::Vector(a) => ns.norm(a),
                _ => panic!("normed codomain expects vector values"),
            },
            Codomain::Metric(_) => panic!("metric codomains have no distinguished zero"),
        }
    }
}

type EvalFn = Arc<dyn Fn(&Point) -> Point + Send + Sync>;

/// A Lipschitz map together with an optional declared Lipschitz constant and
/// a flag recording that it vanishes at the basepoint of a pointed domain.
/// Evaluation must be pure; maps are cheap to clone and safe to share.
#[derive(Clone)]
pub struct LipschitzMap {
    eval: EvalFn,
    codomain: Codomain,
    pub declared_lip: Option<f64>,
    pub vanishes_at_basepoint: bool,
}

impl std::fmt::Debug for LipschitzMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LipschitzMap")
            .field("codomain", &self.codomain)
            .field("declared_lip", &self.declared_lip)
            .field("vanishes_at_basepoint", &self.vanishes_at_basepoint)
            .finish()
    }
}

impl LipschitzMap {
    pub fn new(
        eval: impl Fn(&Point) -> Point + Send + Sync + 'static,
        codomain: Codomain,
    ) -> Self {
        LipschitzMap {
            eval: Arc::new(eval),
            codomain,
            declared_lip: None,
            vanishes_at_basepoint: false,
        }
    }

    /// Scalar-valued map on a real domain, evaluating `g` on the scalar
    /// payload of each point.
    pub fn real_fn(g: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        LipschitzMap::new(
            move |p| match p {
                Point::Scalar(x) => Point::Scalar(g(*x)),
                _ => panic!("real_fn map expects scalar points"),
            },
            Codomain::Scalar,
        )
    }

    pub fn constant(value: f64) -> Self {
        LipschitzMap::real_fn(move |_| value).with_declared_lip(0.0)
    }

    pub fn with_declared_lip(mut self, lip: f64) -> Self {
        self.declared_lip = Some(lip);
        self
    }

    pub fn pointed(mut self) -> Self {
        self.vanishes_at_basepoint = true;
        self
    }

    pub fn codomain(&self) -> &Codomain {
        &self.codomain
    }

    pub fn evaluate(&self, p: &Point) -> Point {
        (self.eval)(p)
    }

    /// Evaluate a scalar-valued map.
    ///
    /// Panics when the codomain is not scalar; guard with
    /// [`LipschitzMap::is_scalar_valued`] where the kind is not known.
    pub fn evaluate_scalar(&self, p: &Point) -> f64 {
        match self.evaluate(p) {
            Point::Scalar(v) => v,
            other => panic!("expected scalar value, got {other:?}"),
        }
    }

    pub fn is_scalar_valued(&self) -> bool {
        matches!(self.codomain, Codomain::Scalar)
    }

    /// The scaled map `alpha * f` for scalar or normed codomains.
    pub fn scaled(&self, alpha: f64) -> Self {
        let inner = self.eval.clone();
        let eval = move |p: &Point| match inner(p) {
            Point::Scalar(v) => Point::Scalar(alpha * v),
            Point::Vector(v) => Point::Vector(normed::scale(alpha, &v)),
            Point::Label(_) => panic!("cannot scale values in a metric codomain"),
        };
        LipschitzMap {
            eval: Arc::new(eval),
            codomain: self.codomain.clone(),
            declared_lip: self.declared_lip.map(|l| l * alpha.abs()),
            vanishes_at_basepoint: self.vanishes_at_basepoint,
        }
    }

    /// The shifted map `x -> f(x) - f(z)`, which vanishes at `z`. Scalar
    /// codomains only; shifting preserves all difference quotients.
    pub fn shifted_to_vanish_at(&self, z: &Point) -> Self {
        let offset = self.evaluate_scalar(z);
        let inner = self.eval.clone();
        let eval = move |p: &Point| match inner(p) {
            Point::Scalar(v) => Point::Scalar(v - offset),
            other => panic!("shift expects scalar values, got {other:?}"),
        };
        LipschitzMap {
            eval: Arc::new(eval),
            codomain: Codomain::Scalar,
            declared_lip: self.declared_lip,
            vanishes_at_basepoint: true,
        }
    }
}

/// A certified lower bound on a Lipschitz number: the maximum difference
/// quotient observed over a pair sample, with its witness.
#[derive(Debug, Clone, Serialize)]
pub struct LipschitzEstimate {
    pub lower_bound: f64,
    pub witness_pair: (Point, Point),
    pub strategy: SampleStrategy,
    pub seed: u64,
    pub pairs_scanned: usize,
}

#[derive(Debug, Error)]
pub enum LipschitzError {
    #[error("difference quotient requested at zero distance")]
    ZeroDistance,
    #[error("declared Lipschitz constant {declared} violated: observed {observed} at {witness:?}")]
    DeclaredBoundViolated {
        declared: f64,
        observed: f64,
        witness: (Point, Point),
    },
    #[error("map does not vanish at the basepoint: |f(0)| = {norm_at_basepoint}")]
    NotPointed { norm_at_basepoint: f64 },
    #[error("expected a scalar-valued functional")]
    NonScalarFunctional,
    #[error("no usable pairs in the sample")]
    EmptySample,
}

/// `d(f(x), f(y)) / d(x, y)` for one pair of distinct points.
pub fn difference_quotient(
    f: &LipschitzMap,
    space: &MetricSpace,
    x: &Point,
    y: &Point,
) -> Result<f64, LipschitzError> {
    let d = space.distance(x, y);
    if d == 0.0 {
        return Err(LipschitzError::ZeroDistance);
    }
    Ok(f.codomain.distance(&f.evaluate(x), &f.evaluate(y)) / d)
}

/// Separations below this fraction of the space diameter are excluded from
/// scans: floating-point cancellation dominates the quotient there.
const SEPARATION_CUTOFF: f64 = 1e-10;

fn scan_pairs<'a>(
    f: &LipschitzMap,
    space: &MetricSpace,
    pairs: impl Iterator<Item = &'a (Point, Point)>,
) -> Option<(f64, (Point, Point), usize)> {
    let cutoff = SEPARATION_CUTOFF * space.diameter_hint();
    let mut best: Option<(f64, (Point, Point))> = None;
    let mut scanned = 0usize;
    for (x, y) in pairs {
        let d = space.distance(x, y);
        if d <= cutoff {
            continue;
        }
        scanned += 1;
        let q = f.codomain.distance(&f.evaluate(x), &f.evaluate(y)) / d;
        if best.as_ref().is_none_or(|(b, _)| q > *b) {
            best = Some((q, (x.clone(), y.clone())));
        }
    }
    best.map(|(q, w)| (q, w, scanned))
}

/// Maximum difference quotient of `f` over the sample. Errors with
/// `DeclaredBoundViolated` when the observed maximum exceeds a declared
/// Lipschitz constant beyond relative tolerance.
pub fn estimate_lip_number(
    f: &LipschitzMap,
    space: &MetricSpace,
    pairs: &PairSample,
) -> Result<LipschitzEstimate, LipschitzError> {
    let (lower_bound, witness_pair, pairs_scanned) =
        scan_pairs(f, space, pairs.pairs.iter()).ok_or(LipschitzError::EmptySample)?;
    if let Some(declared) = f.declared_lip {
        if lower_bound > declared * (1.0 + DECLARED_BOUND_RTOL) {
            return Err(LipschitzError::DeclaredBoundViolated {
                declared,
                observed: lower_bound,
                witness: witness_pair,
            });
        }
    }
    Ok(LipschitzEstimate {
        lower_bound,
        witness_pair,
        strategy: pairs.strategy,
        seed: pairs.seed,
        pairs_scanned,
    })
}

/// Pointed Lipschitz norm estimate: same scan as [`estimate_lip_number`],
/// but the basepoint is forced into the sampled point set and the map must
/// vanish there.
pub fn lip0_norm_estimate(
    f: &LipschitzMap,
    space: &PointedMetricSpace,
    pairs: &PairSample,
) -> Result<LipschitzEstimate, LipschitzError> {
    let at_base = f.codomain.norm(&f.evaluate(space.basepoint()));
    if at_base > POINTED_TOLERANCE {
        return Err(LipschitzError::NotPointed { norm_at_basepoint: at_base });
    }
    let basepoint = space.basepoint().clone();
    let augmented: Vec<(Point, Point)> = pairs
        .member_points()
        .into_iter()
        .filter(|p| p != &basepoint)
        .map(|p| (p, basepoint.clone()))
        .collect();
    let all = pairs.pairs.iter().chain(augmented.iter());
    let (lower_bound, witness_pair, pairs_scanned) =
        scan_pairs(f, space.space(), all).ok_or(LipschitzError::EmptySample)?;
    if let Some(declared) = f.declared_lip {
        if lower_bound > declared * (1.0 + DECLARED_BOUND_RTOL) {
            return Err(LipschitzError::DeclaredBoundViolated {
                declared,
                observed: lower_bound,
                witness: witness_pair,
            });
        }
    }
    Ok(LipschitzEstimate {
        lower_bound,
        witness_pair,
        strategy: pairs.strategy,
        seed: pairs.seed,
        pairs_scanned,
    })
}

/// The rank-one operator `tau (x) f : x -> f(x) * tau` from a scalar
/// functional and a synthesis vector. Its Lipschitz number is
/// `||tau|| * Lip(f)` exactly, which estimators reproduce pair by pair.
pub fn rank_one(
    tau: &[f64],
    tau_space: &NormedSpace,
    f: &LipschitzMap,
) -> Result<LipschitzMap, LipschitzError> {
    if !f.is_scalar_valued() {
        return Err(LipschitzError::NonScalarFunctional);
    }
    let tau: Vec<f64> = tau.to_vec();
    let inner = f.eval.clone();
    let eval = move |p: &Point| {
        let v = match inner(p) {
            Point::Scalar(v) => v,
            other => panic!("expected scalar value, got {other:?}"),
        };
        Point::Vector(normed::scale(v, &tau))
    };
    Ok(LipschitzMap {
        eval: Arc::new(eval),
        codomain: Codomain::Normed(tau_space.clone()),
        declared_lip: f
            .declared_lip
            .map(|l| l * tau_space.norm(&normed::scale(1.0, &tau))),
        vanishes_at_basepoint: f.vanishes_at_basepoint,
    })
}
