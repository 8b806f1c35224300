use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numrange::SupportProfile;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    Polygon,
    Segment,
    Point,
}

/// Convex region recovered from a support profile.
///
/// Polygons are counterclockwise with at least three vertices; a segment has
/// its two endpoints; a point has one vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryShape<T> {
    pub kind: ShapeKind,
    pub vertices: Vec<Complex<T>>,
}

impl<T: Real> BoundaryShape<T> {
    /// Shoelace area (zero for segments and points).
    pub fn area(&self) -> T {
        polygon_area(&self.vertices)
    }

    pub fn diameter(&self) -> T {
        diameter(&self.vertices).0
    }
}

/// Intersects the half-planes `Re(e^{-iθ_k} z) <= h_k`.
///
/// Vertices are the intersections of consecutive support lines; a convex hull
/// pass then drops duplicates and collinear points, and the result is
/// classified as a point, segment or polygon.
pub fn boundary_shape<T: Real>(profile: &SupportProfile<T>) -> Result<BoundaryShape<T>> {
    let samples = profile.samples();
    let k = samples.len();
    let pi = T::PI();
    for i in 0..k {
        let (t0, _) = samples[i];
        let (t1, _) = samples[(i + 1) % k];
        let gap = if i + 1 == k { t1 + T::TAU() - t0 } else { t1 - t0 };
        if !(gap < pi) {
            return Err(Error::InvalidProfile(format!(
                "angular gap {gap} at index {i} leaves the intersection unbounded"
            )));
        }
    }

    let scale = T::one() + profile.values().fold(T::zero(), |acc, h| acc.max(h.abs()));
    let mut points = Vec::with_capacity(k);
    for i in 0..k {
        let (t0, h0) = samples[i];
        let (t1, h1) = samples[(i + 1) % k];
        let (s0, c0) = t0.sin_cos();
        let (s1, c1) = t1.sin_cos();
        let det = c0 * s1 - s0 * c1;
        points.push(Complex::new((h0 * s1 - h1 * s0) / det, (c0 * h1 - c1 * h0) / det));
    }

    // Each vertex must sit inside every half-plane.
    let feasibility_tol = T::lit(1e-6) * scale;
    for p in &points {
        for &(theta, h) in samples {
            let (s, c) = theta.sin_cos();
            if c * p.re + s * p.im - h > feasibility_tol {
                return Err(Error::EmptyIntersection);
            }
        }
    }

    let merged = merge_close(&points, T::VERTEX_MERGE_TOL * scale);
    let (diam, ends) = diameter(&merged);
    if diam <= T::VERTEX_MERGE_TOL * scale {
        let n = T::from_usize_lossy(merged.len());
        let centroid = merged.iter().fold(Complex::new(T::zero(), T::zero()), |acc, &p| acc + p) / n;
        return Ok(BoundaryShape { kind: ShapeKind::Point, vertices: vec![centroid] });
    }
    let hull = convex_hull(merged, T::lit(1e-12) * diam * diam);
    if hull.len() < 3 || polygon_area(&hull) < T::lit(1e-12) * diam * diam {
        return Ok(BoundaryShape { kind: ShapeKind::Segment, vertices: vec![ends.0, ends.1] });
    }
    Ok(BoundaryShape { kind: ShapeKind::Polygon, vertices: hull })
}

/// Greedy clustering: a point joins the first representative within `tol`.
fn merge_close<T: Real>(points: &[Complex<T>], tol: T) -> Vec<Complex<T>> {
    let mut reps: Vec<Complex<T>> = Vec::new();
    for &p in points {
        if !reps.iter().any(|&r| (r - p).norm() <= tol) {
            reps.push(p);
        }
    }
    reps
}

fn diameter<T: Real>(points: &[Complex<T>]) -> (T, (Complex<T>, Complex<T>)) {
    let mut best = (T::zero(), (points[0], points[0]));
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            let d = (p - q).norm();
            if d > best.0 {
                best = (d, (p, q));
            }
        }
    }
    best
}

fn cross<T: Real>(o: Complex<T>, a: Complex<T>, b: Complex<T>) -> T {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Andrew's monotone chain, counterclockwise, dropping turns with
/// `cross <= tol`.
fn convex_hull<T: Real>(mut points: Vec<Complex<T>>, tol: T) -> Vec<Complex<T>> {
    points.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
    if points.len() < 3 {
        return points;
    }
    let mut lower: Vec<Complex<T>> = Vec::new();
    for &p in &points {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= tol {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Complex<T>> = Vec::new();
    for &p in points.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= tol {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn polygon_area<T: Real>(v: &[Complex<T>]) -> T {
    if v.len() < 3 {
        return T::zero();
    }
    let twice = (0..v.len()).fold(T::zero(), |acc, i| {
        let (p, q) = (v[i], v[(i + 1) % v.len()]);
        acc + p.re * q.im - q.re * p.im
    });
    twice * T::lit(0.5)
}
