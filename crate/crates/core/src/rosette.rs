//! Rosettes: `n` congruent circles of radius `r > 1` centered on the unit circle.
//!
//! Regions are found by sampling. Every bounded face of the arrangement has a
//! vertex on its boundary, so probing a small ring around each intersection
//! vertex, plus the center and a far point, meets every region.

use std::collections::BTreeMap;
use std::fmt::{Debug, Write};

use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};
use crate::words::{grow_rosette_codes, Word, WordSet};

/// Probe ring radius around a vertex, raised to `sqrt(ε)` for coarse float types.
pub const PROBE_DELTA: f64 = 1e-6;
/// Two points closer than this count as one; also the general-position margin.
pub const COINCIDENCE_TOL: f64 = 1e-9;
pub const DEFAULT_RADIUS: f64 = 1.5;
const COMPASS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point<F> {
    pub x: F,
    pub y: F,
}

impl<F: Float> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point<F>) -> F {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A vertex of the arrangement with the two circles through it, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Intersection<F> {
    pub point: Point<F>,
    pub circles: (usize, usize),
}

/// A rosette. Circle `i` (0-based here) holds bit `i` of a region code.
#[derive(Clone, Debug, PartialEq)]
pub struct Rosette<F> {
    radius: F,
    angles: Vec<F>,
    centers: Vec<Point<F>>,
}

fn cast<F: Float>(x: f64) -> F {
    F::from(x).expect("float constant fits")
}

impl<F: Float + FloatConst + Debug> Rosette<F> {
    /// Centers at the angles `2πi/n`.
    pub fn regular(n: usize, radius: F) -> Result<Self> {
        if n == 0 {
            return Err(Error::Geometry("a rosette needs at least one circle".into()));
        }
        let step = F::TAU() / cast(n as f64);
        Self::with_angles((0..n).map(|i| step * cast(i as f64)).collect(), radius)
    }

    /// Centers at the given angles, which must increase strictly and span
    /// less than a full turn, so neighbours in index order are neighbours on
    /// the unit circle and no two centers coincide.
    pub fn with_angles(angles: Vec<F>, radius: F) -> Result<Self> {
        if !radius.is_finite() || radius <= F::one() {
            return Err(Error::Geometry(format!("radius must exceed 1, got {radius:?}")));
        }
        if angles.is_empty() {
            return Err(Error::Geometry("a rosette needs at least one circle".into()));
        }
        let tol: F = cast(COINCIDENCE_TOL);
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::Geometry("center angles must be finite".into()));
        }
        if angles.windows(2).any(|p| p[1] - p[0] <= tol) {
            return Err(Error::Geometry("center angles must increase strictly".into()));
        }
        let span = *angles.last().unwrap() - angles[0];
        if angles.len() > 1 && F::TAU() - span <= tol {
            return Err(Error::Geometry(
                "center angles must span less than a full turn".into(),
            ));
        }
        let centers = angles.iter().map(|&a| Point::new(a.cos(), a.sin())).collect();
        Ok(Rosette { radius, angles, centers })
    }

    pub fn n(&self) -> usize {
        self.centers.len()
    }

    pub fn radius(&self) -> F {
        self.radius
    }

    pub fn angles(&self) -> &[F] {
        &self.angles
    }

    pub fn centers(&self) -> &[Point<F>] {
        &self.centers
    }

    pub fn contains(&self, circle: usize, p: Point<F>) -> bool {
        p.dist(self.centers[circle]) < self.radius
    }

    /// Signed distance from `p` to the boundary of circle `i`, negative inside.
    fn gap(&self, circle: usize, p: Point<F>) -> F {
        p.dist(self.centers[circle]) - self.radius
    }

    pub fn code_of(&self, p: Point<F>) -> Word {
        Word::from_bits((0..self.n()).map(|i| self.contains(i, p)))
    }

    fn pair_points(&self, i: usize, j: usize) -> [Point<F>; 2] {
        let (a, b) = (self.centers[i], self.centers[j]);
        let two: F = cast(2.0);
        let mid = Point::new((a.x + b.x) / two, (a.y + b.y) / two);
        let d = a.dist(b);
        let h = (self.radius * self.radius - d * d / (two * two)).sqrt();
        let (ux, uy) = ((b.x - a.x) / d, (b.y - a.y) / d);
        [
            Point::new(mid.x - uy * h, mid.y + ux * h),
            Point::new(mid.x + uy * h, mid.y - ux * h),
        ]
    }

    /// All `n(n-1)` vertices, pair by pair in index order.
    pub fn intersections(&self) -> Vec<Intersection<F>> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1));
        for i in 0..n {
            for j in i + 1..n {
                for point in self.pair_points(i, j) {
                    out.push(Intersection { point, circles: (i, j) });
                }
            }
        }
        out
    }

    /// Keep-points for every probe, in deterministic probe order.
    fn probes(&self) -> Result<Vec<Point<F>>> {
        // single precision cannot resolve a ring of radius 1e-6
        let delta = cast::<F>(PROBE_DELTA).max(F::epsilon().sqrt());
        let keep = delta / cast(4.0);
        let clear = |p: Point<F>| (0..self.n()).all(|i| self.gap(i, p).abs() > keep);
        let far = cast::<F>(4.0) * (F::one() + self.radius);
        let mut points = vec![Point::new(F::zero(), F::zero()), Point::new(far, far)];
        let step = F::TAU() / cast(COMPASS as f64);
        for (v, x) in self.intersections().iter().enumerate() {
            let before = points.len();
            for k in 0..COMPASS {
                let t = step * cast(k as f64);
                let p = Point::new(x.point.x + delta * t.cos(), x.point.y + delta * t.sin());
                if clear(p) {
                    points.push(p);
                }
            }
            if points.len() == before {
                let margin = (0..self.n())
                    .map(|i| self.gap(i, x.point).abs())
                    .fold(F::infinity(), F::min);
                return Err(Error::Tolerance {
                    vertex: v,
                    margin: margin.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(points)
    }

    /// Codes of all regions found by probing, each with its sample points.
    pub fn region_samples(&self) -> Result<BTreeMap<Word, Vec<Point<F>>>> {
        let mut out: BTreeMap<Word, Vec<Point<F>>> = BTreeMap::new();
        for p in self.probes()? {
            out.entry(self.code_of(p)).or_default().push(p);
        }
        Ok(out)
    }

    pub fn region_codes(&self) -> Result<WordSet> {
        WordSet::new(self.n(), self.region_samples()?.into_keys())
    }

    /// `E - V + 2` with `V` and `E` read off the computed vertices.
    pub fn euler_region_count(&self) -> usize {
        let n = self.n();
        if n == 1 {
            return 2;
        }
        let vertices = self.intersections();
        // each circle is cut into as many arcs as it carries vertices
        let edges: usize = (0..n)
            .map(|c| vertices.iter().filter(|v| v.circles.0 == c || v.circles.1 == c).count())
            .sum();
        edges - vertices.len() + 2
    }

    /// Codes of the lune inside circle `i` and outside circle `i - 1`, with
    /// `1 ≤ i ≤ n` and circle `0` read as circle `n`.
    pub fn lune_codes(&self, i: usize) -> Result<WordSet> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(Error::Argument(format!("lune index {i} outside 1..={n}")));
        }
        let (inside, outside) = (i - 1, (i + n - 2) % n);
        let codes = self.region_codes()?;
        WordSet::new(
            n,
            codes
                .iter()
                .filter(|c| c.bit(inside) && !c.bit(outside))
                .cloned(),
        )
    }

    /// Smallest distance from a vertex to a circle not through it.
    pub fn general_position_margin(&self) -> F {
        let mut margin = F::infinity();
        for x in self.intersections() {
            for k in 0..self.n() {
                if k != x.circles.0 && k != x.circles.1 {
                    margin = margin.min(self.gap(k, x.point).abs());
                }
            }
        }
        margin
    }

    /// Triples `(i, j, k)` for which the pair `i, j` does not have exactly one
    /// vertex inside circle `k`.
    pub fn int3_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for (i, j, k) in self.triples() {
            let inside = self.pair_points(i, j).iter().filter(|&&p| self.contains(k, p)).count();
            if inside != 1 {
                bad.push((i, j, k));
            }
        }
        bad
    }

    /// Triples for which the vertex of `i, j` inside circle `k` is not on the
    /// same side of the chord `C_i C_j` as `C_k`.
    pub fn circle_inside_violations(&self) -> Vec<(usize, usize, usize)> {
        let side = |a: Point<F>, b: Point<F>, p: Point<F>| {
            ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)).signum()
        };
        let mut bad = Vec::new();
        for (i, j, k) in self.triples() {
            let (a, b) = (self.centers[i], self.centers[j]);
            let want = side(a, b, self.centers[k]);
            let ok = self
                .pair_points(i, j)
                .iter()
                .filter(|&&p| self.contains(k, p))
                .all(|&p| side(a, b, p) == want);
            if !ok {
                bad.push((i, j, k));
            }
        }
        bad
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.n();
        (0..n).flat_map(move |i| {
            (i + 1..n).flat_map(move |j| {
                (0..n).filter(move |&k| k != i && k != j).map(move |k| (i, j, k))
            })
        })
    }

    /// SVG of the circles and vertices, with region labels when `codes` are given.
    ///
    /// A label sits at the mean of its region's sample points; the unbounded
    /// region is labelled in the top-left corner.
    pub fn render_svg(&self, codes: Option<&BTreeMap<Word, Vec<Point<F>>>>) -> String {
        let f = |x: F| format!("{:.4}", x.to_f64().unwrap_or(0.0) + 0.0);
        let half = self.radius + F::one() + cast(0.25);
        let side = half + half;
        let mut svg = String::new();
        let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="600" height="600">"#,
            f(-half),
            f(-half),
            f(side),
            f(side)
        );
        // y grows downward in SVG; flip so the circles run counterclockwise
        let _ = writeln!(svg, r#"<g transform="scale(1,-1)">"#);
        let stroke = f(side / cast(400.0));
        for c in &self.centers {
            let _ = writeln!(
                svg,
                r#"<circle class="circle" cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="{stroke}"/>"#,
                f(c.x),
                f(c.y),
                f(self.radius)
            );
        }
        let dot = f(side / cast(200.0));
        for x in self.intersections() {
            let _ = writeln!(
                svg,
                r#"<circle class="vertex" cx="{}" cy="{}" r="{dot}" fill="red"/>"#,
                f(x.point.x),
                f(x.point.y)
            );
        }
        let _ = writeln!(svg, "</g>");
        if let Some(samples) = codes {
            let size = f(side / cast(40.0));
            for (code, points) in samples {
                let at = if code.count_ones() == 0 {
                    Point::new(-half * cast(0.9), half * cast(0.9))
                } else {
                    let count: F = cast(points.len() as f64);
                    let sx = points.iter().fold(F::zero(), |s, p| s + p.x);
                    let sy = points.iter().fold(F::zero(), |s, p| s + p.y);
                    Point::new(sx / count, sy / count)
                };
                let _ = writeln!(
                    svg,
                    r#"<text class="region" x="{}" y="{}" font-size="{size}" text-anchor="middle">{code}</text>"#,
                    f(at.x),
                    f(-at.y)
                );
            }
        }
        svg.push_str("</svg>\n");
        svg
    }
}

/// Region codes of the rosette of `n + 1` circles against the insertion
/// rules applied to those of `n` circles. Returns the symmetric difference.
pub fn insertion_rule_mismatches<F: Float + FloatConst + Debug>(
    n: usize,
    radius: F,
) -> Result<Vec<Word>> {
    let before = Rosette::regular(n, radius)?.region_codes()?;
    let after = Rosette::regular(n + 1, radius)?.region_codes()?;
    let mut bad = grow_rosette_codes(&before, n).symmetric_difference(&after);
    // dropping the new circle's bit must give back the old codes
    let dropped = WordSet::new(n, after.iter().map(|c| c.slice(0, n)))?;
    bad.extend(dropped.symmetric_difference(&before));
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{gen_p, RegionMethod};

    type R = Rosette<f64>;

    fn words(set: &WordSet) -> Vec<String> {
        set.iter().map(Word::to_string).collect()
    }

    #[test]
    fn rejects_bad_radius() {
        assert!(R::regular(3, 1.0).is_err());
        assert!(R::regular(3, 0.5).is_err());
        assert!(R::regular(3, f64::NAN).is_err());
        assert!(R::regular(0, 1.5).is_err());
    }

    #[test]
    fn rejects_bad_angles() {
        assert!(R::with_angles(vec![0.0, 1.0, 1.0], 1.5).is_err());
        assert!(R::with_angles(vec![0.0, 2.0, 1.0], 1.5).is_err());
        assert!(R::with_angles(vec![0.0, 1.0, std::f64::consts::TAU], 1.5).is_err());
        assert!(R::with_angles(vec![0.5, 1.0, 6.0], 1.5).is_ok());
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(R::regular(1, 1.5).unwrap().intersections().len(), 0);
        assert_eq!(R::regular(6, 1.5).unwrap().intersections().len(), 30);
        let two = R::regular(2, 1.5).unwrap().intersections();
        assert_eq!(two.len(), 2);
        // mirror images across the line of centers, the x axis
        assert!((two[0].point.x - two[1].point.x).abs() < 1e-12);
        assert!((two[0].point.y + two[1].point.y).abs() < 1e-12);
    }

    #[test]
    fn three_circles() {
        let r = R::regular(3, 1.5).unwrap();
        let codes = r.region_codes().unwrap();
        assert_eq!(
            words(&codes),
            ["000", "001", "010", "011", "100", "101", "110", "111"]
        );
        assert!(r.int3_violations().is_empty());
        assert!(r.circle_inside_violations().is_empty());
        assert_eq!(words(&r.lune_codes(1).unwrap()), ["100", "110"]);
    }

    #[test]
    fn one_circle() {
        let r = R::regular(1, 1.5).unwrap();
        assert_eq!(words(&r.region_codes().unwrap()), ["0", "1"]);
        assert_eq!(r.euler_region_count(), 2);
    }

    #[test]
    fn lunes() {
        let r = R::regular(4, 1.5).unwrap();
        assert_eq!(words(&r.lune_codes(2).unwrap()), ["0100", "0110", "0111"]);
        let six = R::regular(6, 1.5).unwrap();
        for i in 1..=6 {
            assert_eq!(six.lune_codes(i).unwrap().len(), 5);
        }
        assert!(six.lune_codes(0).is_err());
    }

    #[test]
    fn counts_match_formula() {
        for radius in [1.1, 1.5, 3.0] {
            for n in 1..=12 {
                let r = R::regular(n, radius).unwrap();
                let codes = r.region_codes().unwrap();
                assert_eq!(codes.len(), n * n - n + 2, "n={n} r={radius}");
                assert_eq!(codes, gen_p(n, RegionMethod::Closed).unwrap());
                assert_eq!(r.euler_region_count(), n * n - n + 2);
                assert!(r.general_position_margin() > COINCIDENCE_TOL);
            }
        }
    }

    #[test]
    fn irregular_centers() {
        let r = R::with_angles(vec![0.0, 0.3, 0.5, 2.0, 4.0], 1.2).unwrap();
        assert_eq!(r.region_codes().unwrap(), gen_p(5, RegionMethod::Closed).unwrap());
        assert!(r.int3_violations().is_empty());
    }

    #[test]
    fn insertion_rules() {
        for n in 1..=10 {
            assert!(insertion_rule_mismatches(n, 1.5).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn single_precision() {
        let r = Rosette::<f32>::regular(5, 1.5).unwrap();
        assert_eq!(r.region_codes().unwrap().len(), 22);
    }

    #[test]
    fn svg_output() {
        let r = R::regular(6, 1.5).unwrap();
        let svg = r.render_svg(None);
        assert_eq!(svg.matches(r#"class="circle""#).count(), 6);
        assert_eq!(svg.matches(r#"class="vertex""#).count(), 30);
        assert_eq!(svg, r.render_svg(None));
        let three = R::regular(3, 1.5).unwrap();
        let labelled = three.render_svg(Some(&three.region_samples().unwrap()));
        assert_eq!(labelled.matches(r#"class="region""#).count(), 8);
        assert!(labelled.contains(">111</text>"));
    }
}
