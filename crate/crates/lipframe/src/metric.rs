//! Metric and pointed metric spaces, metric-axiom validation, and
//! deterministic point-pair sampling.
//!
//! Three domain shapes are supported: finite point sets backed by a distance
//! matrix, real intervals `[a, b]` with `d(x,y) = |x - y|`, and `R^n` with a
//! p-norm distance. Continuum domains cannot be validated globally, so the
//! triangle inequality is checked exhaustively only on finite spaces and by
//! triple sampling elsewhere; built-in constructors are axiomatically correct
//! and validation exists to catch user-supplied matrices.
//!
//! All downstream sup/inf estimators consume [`PairSample`]s produced here.
//! Sampling is a pure function of `(strategy, count, seed)` so that identical
//! runs are byte-identical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A point of a metric space: a real scalar, a real vector, or a discrete
/// label (index into a finite space's point list).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Point {
    Scalar(f64),
    Vector(Vec<f64>),
    Label(usize),
}

impl Point {
    pub fn as_scalar(&self) -> Option<f64> {
        match self {
            Point::Scalar(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_vector(&self) -> Option<&[f64]> {
        match self {
            Point::Vector(v) => Some(v),
            _ => None,
        }
    }
}

/// Which metric axiom a user-supplied distance matrix violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomKind {
    Positivity,
    Symmetry,
    Triangle,
}

impl std::fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomKind::Positivity => write!(f, "positivity"),
            AxiomKind::Symmetry => write!(f, "symmetry"),
            AxiomKind::Triangle => write!(f, "triangle"),
        }
    }
}

/// A single axiom violation with the indices that witness it.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomViolation {
    pub kind: AxiomKind,
    /// Witness indices into the point list; the third entry is used only for
    /// triangle violations.
    pub witness: Vec<usize>,
    /// How far the offending quantity is from satisfying the axiom.
    pub excess: f64,
}

#[derive(Debug, Error)]
pub enum MetricError {
    #[error("metric axiom violated: {0} at indices {1:?}")]
    AxiomViolation(AxiomKind, Vec<usize>),
    #[error("invalid interval: require a < b, got [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },
    #[error("invalid norm exponent {exponent}: require exponent >= 1")]
    InvalidExponent { exponent: f64 },
    #[error("exhaustive sampling requested on a continuum space")]
    ExhaustiveOnInfinite,
    #[error("distance matrix is {rows}x{cols} but {points} points were given")]
    MatrixShape { rows: usize, cols: usize, points: usize },
    #[error("sample count must be at least 1")]
    EmptySampleRequest,
    #[error("could not parse finite-space file: {0}")]
    Parse(String),
}

/// Absolute tolerance for the sampled metric-axiom checks.
pub const AXIOM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone)]
enum Domain {
    Finite {
        points: Vec<Point>,
        labels: Vec<String>,
        dist: Vec<Vec<f64>>,
    },
    Interval {
        a: f64,
        b: f64,
    },
    Euclidean {
        dim: usize,
        exponent: f64,
    },
}

/// A metric space `(M, d)`. Immutable after construction and safe to share
/// across threads.
#[derive(Debug, Clone)]
pub struct MetricSpace {
    domain: Domain,
}

impl MetricSpace {
    /// Distance between two points of this space.
    ///
    /// Panics if a point does not belong to the domain (wrong payload kind,
    /// wrong dimension, or an unknown finite-space point); use
    /// [`MetricSpace::contains`] to validate foreign points first.
    pub fn distance(&self, x: &Point, y: &Point) -> f64 {
        match &self.domain {
            Domain::Finite { dist, .. } => {
                let i = self.index_of(x).expect("point not in finite space");
                let j = self.index_of(y).expect("point not in finite space");
                dist[i][j]
            }
            Domain::Interval { .. } => {
                let (u, v) = match (x, y) {
                    (Point::Scalar(u), Point::Scalar(v)) => (*u, *v),
                    _ => panic!("interval space expects scalar points"),
                };
                (u - v).abs()
            }
            Domain::Euclidean { dim, exponent } => {
                let (u, v) = match (x, y) {
                    (Point::Vector(u), Point::Vector(v)) => (u, v),
                    _ => panic!("euclidean space expects vector points"),
                };
                assert!(
                    u.len() == *dim && v.len() == *dim,
                    "dimension mismatch: space is R^{dim}"
                );
                let powers: Vec<f64> = u
                    .iter()
                    .zip(v.iter())
                    .map(|(a, b)| (a - b).abs().powf(*exponent))
                    .collect();
                crate::normed::tree_sum(&powers).powf(1.0 / *exponent)
            }
        }
    }

    /// Whether the point belongs to this space's domain.
    pub fn contains(&self, p: &Point) -> bool {
        match &self.domain {
            Domain::Finite { .. } => self.index_of(p).is_some(),
            Domain::Interval { a, b } => p
                .as_scalar()
                .is_some_and(|v| v >= *a - AXIOM_TOLERANCE && v <= *b + AXIOM_TOLERANCE),
            Domain::Euclidean { dim, .. } => p.as_vector().is_some_and(|v| v.len() == *dim),
        }
    }

    /// The points of a finite space, `None` on continuum domains.
    pub fn finite_points(&self) -> Option<&[Point]> {
        match &self.domain {
            Domain::Finite { points, .. } => Some(points),
            _ => None,
        }
    }

    /// Labels of a finite space's points, `None` on continuum domains.
    pub fn finite_labels(&self) -> Option<&[String]> {
        match &self.domain {
            Domain::Finite { labels, .. } => Some(labels),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.domain, Domain::Finite { .. })
    }

    /// Interval endpoints when the domain is `[a, b]`.
    pub fn interval_bounds(&self) -> Option<(f64, f64)> {
        match &self.domain {
            Domain::Interval { a, b } => Some((*a, *b)),
            _ => None,
        }
    }

    /// Dimension and norm exponent when the domain is `R^n`.
    pub fn euclidean_descriptor(&self) -> Option<(usize, f64)> {
        match &self.domain {
            Domain::Euclidean { dim, exponent } => Some((*dim, *exponent)),
            _ => None,
        }
    }

    /// A scale for the domain: exact diameter for finite and interval
    /// domains, the diameter of the `[-1, 1]^n` sampling box for `R^n`.
    /// Used to cut off difference quotients at separations where
    /// floating-point cancellation dominates.
    pub fn diameter_hint(&self) -> f64 {
        match &self.domain {
            Domain::Finite { dist, .. } => dist
                .iter()
                .flat_map(|row| row.iter().copied())
                .fold(0.0, f64::max),
            Domain::Interval { a, b } => b - a,
            Domain::Euclidean { dim, exponent } => 2.0 * (*dim as f64).powf(1.0 / *exponent),
        }
    }

    fn index_of(&self, p: &Point) -> Option<usize> {
        match &self.domain {
            Domain::Finite { points, .. } => {
                if let Point::Label(i) = p {
                    return if *i < points.len() { Some(*i) } else { None };
                }
                points.iter().position(|q| q == p)
            }
            _ => None,
        }
    }
}

/// Check every axiom of a distance matrix exhaustively and return all
/// violations (positivity, symmetry, and all triangle triples).
pub fn validate_distance_matrix(dist: &[Vec<f64>]) -> Vec<AxiomViolation> {
    let n = dist.len();
    let mut violations = Vec::new();
    for i in 0..n {
        if dist[i][i].abs() > AXIOM_TOLERANCE {
            violations.push(AxiomViolation {
                kind: AxiomKind::Positivity,
                witness: vec![i, i],
                excess: dist[i][i].abs(),
            });
        }
        for j in 0..n {
            if i != j && dist[i][j] <= 0.0 {
                violations.push(AxiomViolation {
                    kind: AxiomKind::Positivity,
                    witness: vec![i, j],
                    excess: -dist[i][j],
                });
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (dist[i][j] - dist[j][i]).abs();
            if gap > AXIOM_TOLERANCE {
                violations.push(AxiomViolation {
                    kind: AxiomKind::Symmetry,
                    witness: vec![i, j],
                    excess: gap,
                });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let excess = dist[i][k] - dist[i][j] - dist[j][k];
                if excess > AXIOM_TOLERANCE {
                    violations.push(AxiomViolation {
                        kind: AxiomKind::Triangle,
                        witness: vec![i, j, k],
                        excess,
                    });
                }
            }
        }
    }
    violations
}

/// Build a finite metric space from labelled points and a distance matrix,
/// validating every axiom exhaustively.
pub fn make_finite_space(
    labels: Vec<String>,
    dist: Vec<Vec<f64>>,
) -> Result<MetricSpace, MetricError> {
    let n = labels.len();
    if dist.len() != n || dist.iter().any(|row| row.len() != n) {
        return Err(MetricError::MatrixShape {
            rows: dist.len(),
            cols: dist.first().map_or(0, |r| r.len()),
            points: n,
        });
    }
    if let Some(v) = validate_distance_matrix(&dist).into_iter().next() {
        return Err(MetricError::AxiomViolation(v.kind, v.witness));
    }
    let points = (0..n).map(Point::Label).collect();
    Ok(MetricSpace {
        domain: Domain::Finite { points, labels, dist },
    })
}

/// Finite metric subspace of the real line: points are the given scalars,
/// distances their absolute differences.
pub fn make_finite_real_space(values: &[f64]) -> Result<MetricSpace, MetricError> {
    let labels = values.iter().map(|v| format!("{}", v)).collect();
    let dist: Vec<Vec<f64>> = values
        .iter()
        .map(|a| values.iter().map(|b| (a - b).abs()).collect())
        .collect();
    let n = values.len();
    if let Some(v) = validate_distance_matrix(&dist).into_iter().next() {
        // duplicate scalars show up as positivity failures
        return Err(MetricError::AxiomViolation(v.kind, v.witness));
    }
    let points = values.iter().map(|v| Point::Scalar(*v)).collect();
    let _ = n;
    Ok(MetricSpace {
        domain: Domain::Finite { points, labels, dist },
    })
}

/// The interval `[a, b]` with `d(x, y) = |x - y|`.
pub fn make_interval_space(a: f64, b: f64) -> Result<MetricSpace, MetricError> {
    if !(a < b) {
        return Err(MetricError::InvalidInterval { a, b });
    }
    Ok(MetricSpace {
        domain: Domain::Interval { a, b },
    })
}

/// `R^n` with the p-norm distance for the chosen exponent (>= 1).
pub fn make_euclidean_space(dim: usize, norm_exponent: f64) -> Result<MetricSpace, MetricError> {
    if dim == 0 {
        return Err(MetricError::MatrixShape { rows: 0, cols: 0, points: 0 });
    }
    if !(norm_exponent >= 1.0) {
        return Err(MetricError::InvalidExponent { exponent: norm_exponent });
    }
    Ok(MetricSpace {
        domain: Domain::Euclidean { dim, exponent: norm_exponent },
    })
}

/// Parse a finite space from the text format: first line `N`, then `N` point
/// labels (one per line), then `N` rows of `N` space-separated distances.
pub fn parse_finite_space_file(contents: &str) -> Result<(Vec<String>, Vec<Vec<f64>>), MetricError> {
    let mut lines = contents.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| MetricError::Parse("empty file".into()))?
        .trim()
        .parse()
        .map_err(|e| MetricError::Parse(format!("bad point count: {e}")))?;
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        labels.push(
            lines
                .next()
                .ok_or_else(|| MetricError::Parse(format!("missing label {i}")))?
                .trim()
                .to_string(),
        );
    }
    let mut dist = Vec::with_capacity(n);
    for i in 0..n {
        let row_line = lines
            .next()
            .ok_or_else(|| MetricError::Parse(format!("missing matrix row {i}")))?;
        let row: Result<Vec<f64>, _> = row_line.split_whitespace().map(str::parse).collect();
        let row = row.map_err(|e| MetricError::Parse(format!("bad entry in row {i}: {e}")))?;
        if row.len() != n {
            return Err(MetricError::Parse(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        dist.push(row);
    }
    Ok((labels, dist))
}

/// A metric space with a distinguished basepoint `0`.
#[derive(Debug, Clone)]
pub struct PointedMetricSpace {
    base: MetricSpace,
    basepoint: Point,
}

impl PointedMetricSpace {
    pub fn new(base: MetricSpace, basepoint: Point) -> Result<Self, MetricError> {
        if !base.contains(&basepoint) {
            return Err(MetricError::Parse(format!(
                "basepoint {basepoint:?} is not in the domain"
            )));
        }
        Ok(PointedMetricSpace { base, basepoint })
    }

    pub fn space(&self) -> &MetricSpace {
        &self.base
    }

    pub fn basepoint(&self) -> &Point {
        &self.basepoint
    }
}

/// How a [`PairSample`] was generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleStrategy {
    /// All unordered pairs of a finite space, each exactly once.
    Exhaustive,
    /// Independent uniform draws from the domain.
    UniformRandom,
    /// Base points with perturbations whose separations span at least three
    /// orders of magnitude, probing difference quotients at small scales.
    LocalPerturbation,
    /// Pairs supplied by the caller.
    UserSupplied,
}

/// A deduplicated list of distinct-member point pairs plus the metadata that
/// makes the draw reproducible.
#[derive(Debug, Clone)]
pub struct PairSample {
    pub pairs: Vec<(Point, Point)>,
    pub strategy: SampleStrategy,
    pub seed: u64,
}

impl PairSample {
    pub fn from_pairs(pairs: Vec<(Point, Point)>) -> Self {
        PairSample {
            pairs: dedup_pairs(pairs),
            strategy: SampleStrategy::UserSupplied,
            seed: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Every distinct point appearing in the sample, in first-seen order.
    pub fn member_points(&self) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::new();
        for (x, y) in &self.pairs {
            if !out.contains(x) {
                out.push(x.clone());
            }
            if !out.contains(y) {
                out.push(y.clone());
            }
        }
        out
    }
}

fn dedup_pairs(pairs: Vec<(Point, Point)>) -> Vec<(Point, Point)> {
    let mut out: Vec<(Point, Point)> = Vec::with_capacity(pairs.len());
    for p in pairs {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Draw `count` distinct-member pairs from the space. Deterministic in
/// `(strategy, count, seed)`; exact duplicate pairs are removed before the
/// sample is handed to estimators. The `Exhaustive` strategy ignores `count`
/// and enumerates all unordered pairs of a finite space exactly once.
pub fn sample_pairs(
    space: &MetricSpace,
    strategy: SampleStrategy,
    count: usize,
    seed: u64,
) -> Result<PairSample, MetricError> {
    if count == 0 && strategy != SampleStrategy::Exhaustive {
        return Err(MetricError::EmptySampleRequest);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = match strategy {
        SampleStrategy::Exhaustive => {
            let points = space
                .finite_points()
                .ok_or(MetricError::ExhaustiveOnInfinite)?;
            let mut pairs = Vec::new();
            for i in 0..points.len() {
                for j in (i + 1)..points.len() {
                    pairs.push((points[i].clone(), points[j].clone()));
                }
            }
            pairs
        }
        SampleStrategy::UniformRandom | SampleStrategy::UserSupplied => {
            let mut pairs = Vec::with_capacity(count);
            for _ in 0..count {
                pairs.push(random_pair(space, &mut rng)?);
            }
            pairs
        }
        SampleStrategy::LocalPerturbation => {
            let mut pairs = Vec::with_capacity(count);
            for _ in 0..count {
                pairs.push(perturbation_pair(space, &mut rng)?);
            }
            pairs
        }
    };
    Ok(PairSample {
        pairs: dedup_pairs(pairs),
        strategy,
        seed,
    })
}

fn random_point(space: &MetricSpace, rng: &mut ChaCha8Rng) -> Point {
    match &space.domain {
        Domain::Finite { points, .. } => points[rng.gen_range(0..points.len())].clone(),
        Domain::Interval { a, b } => Point::Scalar(rng.gen_range(*a..*b)),
        Domain::Euclidean { dim, .. } => {
            Point::Vector((0..*dim).map(|_| rng.gen_range(-1.0..1.0)).collect())
        }
    }
}

fn random_pair(space: &MetricSpace, rng: &mut ChaCha8Rng) -> Result<(Point, Point), MetricError> {
    for _ in 0..1000 {
        let x = random_point(space, rng);
        let y = random_point(space, rng);
        if space.distance(&x, &y) > 0.0 {
            return Ok((x, y));
        }
    }
    Err(MetricError::Parse(
        "could not draw a distinct-member pair after 1000 attempts".into(),
    ))
}

/// Pairs at separations 10^u * scale with u uniform in [-4, -1], so a sample
/// of any reasonable size spans at least three orders of magnitude.
fn perturbation_pair(
    space: &MetricSpace,
    rng: &mut ChaCha8Rng,
) -> Result<(Point, Point), MetricError> {
    match &space.domain {
        // finite domains have no local scale to probe
        Domain::Finite { .. } => random_pair(space, rng),
        Domain::Interval { a, b } => {
            let x = rng.gen_range(*a..*b);
            let delta = 10f64.powf(rng.gen_range(-4.0..-1.0)) * (b - a);
            let y = if x + delta <= *b { x + delta } else { x - delta };
            Ok((Point::Scalar(x), Point::Scalar(y)))
        }
        Domain::Euclidean { dim, .. } => {
            let x: Vec<f64> = (0..*dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let delta = 10f64.powf(rng.gen_range(-4.0..-1.0));
            let dir: Vec<f64> = (0..*dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-300);
            let y: Vec<f64> = x
                .iter()
                .zip(dir.iter())
                .map(|(xi, di)| xi + delta * di / norm)
                .collect();
            Ok((Point::Vector(x), Point::Vector(y)))
        }
    }
}

/// Sampled triangle-inequality and symmetry checks for continuum spaces:
/// draws `count` random triples and reports every violation beyond the
/// absolute tolerance.
pub fn validate_sampled_axioms(
    space: &MetricSpace,
    count: usize,
    seed: u64,
) -> Vec<AxiomViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..count {
        let x = random_point(space, &mut rng);
        let y = random_point(space, &mut rng);
        let z = random_point(space, &mut rng);
        let dxy = space.distance(&x, &y);
        let dyx = space.distance(&y, &x);
        if (dxy - dyx).abs() > AXIOM_TOLERANCE {
            violations.push(AxiomViolation {
                kind: AxiomKind::Symmetry,
                witness: vec![],
                excess: (dxy - dyx).abs(),
            });
        }
        let excess = space.distance(&x, &z) - dxy - space.distance(&y, &z);
        if excess > AXIOM_TOLERANCE {
            violations.push(AxiomViolation {
                kind: AxiomKind::Triangle,
                witness: vec![],
                excess,
            });
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_point() -> MetricSpace {
        make_finite_space(
            vec!["P0".into(), "P1".into()],
            vec![vec![0.0, 1.0], vec![1.0, 0.0]],
        )
        .unwrap()
    }

    #[test]
    fn smallest_metric_space_is_valid() {
        let space = two_point();
        assert_eq!(space.distance(&Point::Label(0), &Point::Label(1)), 1.0);
    }

    #[test]
    fn planted_triangle_violation_is_caught() {
        let err = make_finite_space(
            vec!["P0".into(), "P1".into(), "P2".into()],
            vec![
                vec![0.0, 1.0, 5.0],
                vec![1.0, 0.0, 1.0],
                vec![5.0, 1.0, 0.0],
            ],
        )
        .unwrap_err();
        match err {
            MetricError::AxiomViolation(AxiomKind::Triangle, w) => {
                assert_eq!(w.len(), 3);
            }
            other => panic!("expected triangle violation, got {other:?}"),
        }
    }

    #[test]
    fn asymmetric_entry_is_caught() {
        let err = make_finite_space(
            vec!["P0".into(), "P1".into()],
            vec![vec![0.0, 1.0], vec![2.0, 0.0]],
        )
        .unwrap_err();
        match err {
            MetricError::AxiomViolation(AxiomKind::Symmetry, w) => assert_eq!(w, vec![0, 1]),
            other => panic!("expected symmetry violation, got {other:?}"),
        }
    }

    #[test]
    fn interval_distance_is_absolute_difference() {
        let space = make_interval_space(2.0, 3.0).unwrap();
        assert_eq!(space.distance(&Point::Scalar(2.0), &Point::Scalar(3.0)), 1.0);
        let unit = make_interval_space(0.0, 1.0).unwrap();
        assert_eq!(
            unit.distance(&Point::Scalar(0.25), &Point::Scalar(0.75)),
            0.5
        );
    }

    #[test]
    fn reversed_interval_is_rejected() {
        assert!(matches!(
            make_interval_space(3.0, 2.0),
            Err(MetricError::InvalidInterval { .. })
        ));
    }

    #[test]
    fn euclidean_distances_match_direct_arithmetic() {
        let e3 = make_euclidean_space(3, 2.0).unwrap();
        let d = e3.distance(
            &Point::Vector(vec![1.0, 0.0, 0.0]),
            &Point::Vector(vec![0.0, 0.0, 0.0]),
        );
        assert!((d - 1.0).abs() < 1e-15);

        let taxicab = make_euclidean_space(2, 1.0).unwrap();
        let d = taxicab.distance(
            &Point::Vector(vec![1.0, 1.0]),
            &Point::Vector(vec![0.0, 0.0]),
        );
        assert!((d - 2.0).abs() < 1e-15);

        let plane = make_euclidean_space(2, 2.0).unwrap();
        let d = plane.distance(
            &Point::Vector(vec![3.0, 4.0]),
            &Point::Vector(vec![0.0, 0.0]),
        );
        assert!((d - 5.0).abs() < 1e-12);
    }

    #[test]
    fn sub_unit_exponent_is_rejected() {
        assert!(matches!(
            make_euclidean_space(2, 0.5),
            Err(MetricError::InvalidExponent { .. })
        ));
    }

    #[test]
    fn exhaustive_on_three_points_gives_three_pairs() {
        let space = make_finite_real_space(&[0.0, 1.0, 2.5]).unwrap();
        let sample = sample_pairs(&space, SampleStrategy::Exhaustive, 0, 0).unwrap();
        assert_eq!(sample.len(), 3);
    }

    #[test]
    fn exhaustive_on_interval_is_rejected() {
        let space = make_interval_space(2.0, 3.0).unwrap();
        assert!(matches!(
            sample_pairs(&space, SampleStrategy::Exhaustive, 10, 0),
            Err(MetricError::ExhaustiveOnInfinite)
        ));
    }

    #[test]
    fn uniform_sampling_is_deterministic_and_distinct() {
        let space = make_interval_space(2.0, 3.0).unwrap();
        let s1 = sample_pairs(&space, SampleStrategy::UniformRandom, 100, 7).unwrap();
        let s2 = sample_pairs(&space, SampleStrategy::UniformRandom, 100, 7).unwrap();
        assert_eq!(s1.pairs, s2.pairs);
        assert_eq!(s1.len(), 100);
        for (x, y) in &s1.pairs {
            assert!(space.distance(x, y) > 0.0);
        }
    }

    #[test]
    fn smaller_sample_is_a_prefix_of_larger_one() {
        let space = make_interval_space(2.0, 3.0).unwrap();
        let small = sample_pairs(&space, SampleStrategy::UniformRandom, 50, 11).unwrap();
        let large = sample_pairs(&space, SampleStrategy::UniformRandom, 500, 11).unwrap();
        assert_eq!(&large.pairs[..small.len()], &small.pairs[..]);
    }

    #[test]
    fn local_perturbation_spans_three_orders_of_magnitude() {
        let space = make_interval_space(0.0, 1.0).unwrap();
        let sample = sample_pairs(&space, SampleStrategy::LocalPerturbation, 200, 3).unwrap();
        let dists: Vec<f64> = sample
            .pairs
            .iter()
            .map(|(x, y)| space.distance(x, y))
            .collect();
        let min = dists.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = dists.iter().cloned().fold(0.0, f64::max);
        assert!(max / min >= 1e2, "span {min}..{max} too narrow");
    }

    #[test]
    fn sampled_axioms_hold_on_builtin_spaces() {
        for space in [
            make_interval_space(2.0, 3.0).unwrap(),
            make_euclidean_space(3, 2.0).unwrap(),
            make_euclidean_space(2, 1.0).unwrap(),
        ] {
            assert!(validate_sampled_axioms(&space, 500, 42).is_empty());
        }
    }

    #[test]
    fn finite_space_file_roundtrip() {
        let text = "3\nP0\nP1\nP2\n0 1 2\n1 0 1\n2 1 0\n";
        let (labels, dist) = parse_finite_space_file(text).unwrap();
        assert_eq!(labels, vec!["P0", "P1", "P2"]);
        let space = make_finite_space(labels, dist).unwrap();
        assert_eq!(space.distance(&Point::Label(0), &Point::Label(2)), 2.0);
    }

    #[test]
    fn basepoint_must_belong_to_domain() {
        let space = make_interval_space(2.0, 3.0).unwrap();
        assert!(PointedMetricSpace::new(space.clone(), Point::Scalar(1.0)).is_err());
        assert!(PointedMetricSpace::new(space, Point::Scalar(2.0)).is_ok());
    }
}
