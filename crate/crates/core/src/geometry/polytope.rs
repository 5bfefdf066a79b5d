//! Half-space polytopes with exact vertex enumeration, volume and lattice points.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::linalg::{self, Vector};
use super::rational::{ceil_i64, floor_i64, Rational};
use crate::error::{Error, Result};

/// The half-space `normal · x + offset >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    normal: Vec<i64>,
    offset: Rational,
}

impl AffineForm {
    /// Rejects non-primitive normals. The zero normal is allowed and encodes
    /// the constant constraint `offset >= 0`.
    pub fn new(normal: Vec<i64>, offset: Rational) -> Result<Self> {
        if normal.iter().any(|&x| x != 0) && !linalg::is_primitive(&normal) {
            return Err(Error::Precondition(format!(
                "form normal {normal:?} is not primitive"
            )));
        }
        Ok(Self { normal, offset })
    }

    /// Divides normal and offset by the gcd of the normal's entries, which
    /// leaves the half-space unchanged.
    pub fn normalized(normal: Vec<i64>, offset: Rational) -> Self {
        let g = normal.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g <= 1 {
            return Self { normal, offset };
        }
        let offset = offset / Rational::from_integer(g.into());
        Self {
            normal: normal.into_iter().map(|x| x / g).collect(),
            offset,
        }
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn is_constant(&self) -> bool {
        self.normal.iter().all(|&x| x == 0)
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let lin: Rational = self
            .normal
            .iter()
            .zip(x)
            .filter(|(a, _)| **a != 0)
            .map(|(&a, xi)| xi * Rational::from_integer(a.into()))
            .sum();
        lin + &self.offset
    }

    pub fn eval_int(&self, x: &[i64]) -> Rational {
        let lin: i128 = self
            .normal
            .iter()
            .zip(x)
            .map(|(&a, &xi)| a as i128 * xi as i128)
            .sum();
        Rational::from_integer(lin.into()) + &self.offset
    }

    /// The reversed inequality `normal · x + offset <= bound`, written as a form.
    pub fn upper(&self, bound: &Rational) -> Self {
        Self {
            normal: self.normal.iter().map(|x| -x).collect(),
            offset: bound - &self.offset,
        }
    }

    /// Integer coefficients `(n, c)` with `n · x + c >= 0` equivalent to the form.
    fn integral(&self) -> Result<(Vec<i128>, i128)> {
        let den = self.offset.denom().to_i128().ok_or(Error::Overflow)?;
        let num = self.offset.numer().to_i128().ok_or(Error::Overflow)?;
        let normal = self
            .normal
            .iter()
            .map(|&a| (a as i128).checked_mul(den).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok((normal, num))
    }
}

/// Vertex set in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VRep {
    pub vertices: Vec<Vector>,
}

impl VRep {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }
}

/// Where the fan triangulation used by [`HPolytope::volume_with`] is rooted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangulationApex {
    /// Pulling triangulation: every face is coned from its first vertex.
    FirstVertex,
    /// Facets are triangulated and coned from the vertex barycenter.
    Barycenter,
}

/// A closed polyhedron `{x : form(x) >= 0 for every form}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    ambient_dim: usize,
    forms: Vec<AffineForm>,
}

impl HPolytope {
    pub fn new(ambient_dim: usize, forms: Vec<AffineForm>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::Precondition("ambient dimension must be positive".into()));
        }
        if let Some(f) = forms.iter().find(|f| f.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: f.dim(),
            });
        }
        Ok(Self { ambient_dim, forms })
    }

    /// The box `lo_i <= x_i <= hi_i`.
    pub fn cube(lo: &[Rational], hi: &[Rational]) -> Result<Self> {
        let n = lo.len();
        let mut forms = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            let lower = AffineForm::new(e, -lo[i].clone())?;
            forms.push(lower.upper(&(&hi[i] - &lo[i])));
            forms.push(lower);
        }
        Self::new(n, forms)
    }

    /// Facet description of the convex hull of a full-dimensional point set.
    pub fn from_vertices(dim: usize, points: &[Vector]) -> Result<Self> {
        if linalg::affine_dimension(points) != Some(dim) {
            return Err(Error::NotFullDimensional);
        }
        let mut forms = BTreeSet::new();
        for subset in combinations(points.len(), dim) {
            let base = &points[subset[0]];
            let diffs: Vec<Vector> = subset[1..]
                .iter()
                .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            let ns = linalg::nullspace(&diffs, dim);
            if ns.len() != 1 {
                continue;
            }
            let normal = integral_direction(&ns[0]);
            let nq = linalg::to_rational_vec(&normal);
            let offset = -linalg::dot(&nq, base);
            let signs: Vec<Rational> = points
                .iter()
                .map(|p| linalg::dot(&nq, p) + &offset)
                .collect();
            if signs.iter().all(|s| !s.is_negative()) {
                forms.insert(AffineForm::new(normal, offset)?);
            } else if signs.iter().all(|s| !s.is_positive()) {
                let neg: Vec<i64> = normal.iter().map(|x| -x).collect();
                forms.insert(AffineForm::new(neg, -offset)?);
            }
        }
        Self::new(dim, forms.into_iter().collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.forms.iter().all(|f| !f.eval(x).is_negative())
    }

    pub fn contains_int(&self, x: &[i64]) -> bool {
        self.forms.iter().all(|f| !f.eval_int(x).is_negative())
    }

    /// Bounded iff the recession cone `{x : normal · x >= 0}` is `{0}`, i.e.
    /// the normals positively span the ambient space.
    pub fn is_bounded(&self) -> bool {
        let n = self.ambient_dim;
        let rows: Vec<Vector> = self
            .forms
            .iter()
            .filter(|f| !f.is_constant())
            .map(|f| linalg::to_rational_vec(&f.normal))
            .collect();
        if linalg::rank(&rows, n) < n {
            return false;
        }
        // A nonzero pointed recession cone has an extreme ray cut out by n - 1
        // independent tight normals.
        for subset in combinations(rows.len(), n - 1) {
            let sub: Vec<Vector> = subset.iter().map(|&i| rows[i].clone()).collect();
            let ns = linalg::nullspace(&sub, n);
            if ns.len() != 1 {
                continue;
            }
            let values: Vec<Rational> = rows.iter().map(|r| linalg::dot(r, &ns[0])).collect();
            if values.iter().all(|v| !v.is_negative()) || values.iter().all(|v| !v.is_positive()) {
                return false;
            }
        }
        true
    }

    fn ensure_bounded(&self) -> Result<()> {
        if self.is_bounded() {
            Ok(())
        } else {
            Err(Error::Unbounded)
        }
    }

    /// Exact vertices by solving every `ambient_dim`-subset of tight forms.
    /// Infeasible polytopes give an empty set.
    pub fn vertex_enumeration(&self) -> Result<VRep> {
        self.ensure_bounded()?;
        if self.forms.iter().any(|f| f.is_constant() && f.offset.is_negative()) {
            return Ok(VRep::default());
        }
        let n = self.ambient_dim;
        let active: Vec<&AffineForm> = self.forms.iter().filter(|f| !f.is_constant()).collect();
        let mut found = BTreeSet::new();
        for subset in combinations(active.len(), n) {
            let system: Vec<(Vector, Rational)> = subset
                .iter()
                .map(|&i| (linalg::to_rational_vec(&active[i].normal), -active[i].offset.clone()))
                .collect();
            if let Some(x) = linalg::solve_affine(&system) {
                if !found.contains(&x) && self.contains(&x) {
                    found.insert(x);
                }
            }
        }
        Ok(VRep {
            vertices: found.into_iter().collect(),
        })
    }

    pub fn is_feasible(&self) -> Result<bool> {
        Ok(!self.vertex_enumeration()?.is_empty())
    }

    pub fn is_full_dimensional(&self) -> Result<bool> {
        let v = self.vertex_enumeration()?;
        Ok(linalg::affine_dimension(&v.vertices) == Some(self.ambient_dim))
    }

    /// Vertex barycenter of a full-dimensional polytope, `None` otherwise.
    pub fn interior_point(&self) -> Result<Option<Vector>> {
        let v = self.vertex_enumeration()?;
        if linalg::affine_dimension(&v.vertices) != Some(self.ambient_dim) {
            return Ok(None);
        }
        Ok(Some(barycenter(&v.vertices)))
    }

    /// Drops forms that do not define a facet (and duplicate facets).
    pub fn irredundant(&self) -> Result<HPolytope> {
        let v = self.vertex_enumeration()?;
        if linalg::affine_dimension(&v.vertices) != Some(self.ambient_dim) {
            return Err(Error::NotFullDimensional);
        }
        let mut seen = BTreeSet::new();
        let mut forms = Vec::new();
        for f in &self.forms {
            let tight: Vec<usize> = (0..v.len())
                .filter(|&i| f.eval(&v.vertices[i]).is_zero())
                .collect();
            let pts: Vec<Vector> = tight.iter().map(|&i| v.vertices[i].clone()).collect();
            if linalg::affine_dimension(&pts) == Some(self.ambient_dim - 1) && seen.insert(tight) {
                forms.push(f.clone());
            }
        }
        HPolytope::new(self.ambient_dim, forms)
    }

    pub fn volume(&self) -> Result<Rational> {
        self.volume_with(TriangulationApex::FirstVertex)
    }

    /// Exact Euclidean volume as a sum of simplex volumes; zero when the
    /// polytope is empty or lower-dimensional.
    pub fn volume_with(&self, apex: TriangulationApex) -> Result<Rational> {
        let v = self.vertex_enumeration()?;
        let n = self.ambient_dim;
        if linalg::affine_dimension(&v.vertices) != Some(n) {
            return Ok(Rational::zero());
        }
        let tight: Vec<Vec<bool>> = v
            .vertices
            .iter()
            .map(|x| self.forms.iter().map(|f| f.eval(x).is_zero()).collect())
            .collect();
        let all: Vec<usize> = (0..v.len()).collect();
        let total = match apex {
            TriangulationApex::FirstVertex => {
                let mut simplices = Vec::new();
                pulling_triangulation(&v.vertices, &tight, &all, n, &mut simplices);
                simplices
                    .iter()
                    .map(|s| {
                        let pts: Vec<&Vector> = s.iter().map(|&i| &v.vertices[i]).collect();
                        linalg::simplex_volume(&pts)
                    })
                    .sum()
            }
            TriangulationApex::Barycenter => {
                let center = barycenter(&v.vertices);
                let mut total = Rational::zero();
                for facet in subfaces(&v.vertices, &tight, &all, n, None) {
                    let mut simplices = Vec::new();
                    pulling_triangulation(&v.vertices, &tight, &facet, n - 1, &mut simplices);
                    for s in simplices {
                        let mut pts: Vec<&Vector> = vec![&center];
                        pts.extend(s.iter().map(|&i| &v.vertices[i]));
                        total += linalg::simplex_volume(&pts);
                    }
                }
                total
            }
        };
        Ok(total)
    }

    /// Scales offsets by `factor > 0`, i.e. the polytope `factor · P`.
    pub fn dilate(&self, factor: &Rational) -> Result<HPolytope> {
        if !factor.is_positive() {
            return Err(Error::NonPositiveScale(super::format_rational(factor)));
        }
        let forms = self
            .forms
            .iter()
            .map(|f| AffineForm {
                normal: f.normal.clone(),
                offset: &f.offset * factor,
            })
            .collect();
        HPolytope::new(self.ambient_dim, forms)
    }

    /// Substitutes `x_last = value`, giving a polytope one dimension lower.
    pub fn slice_last_coord(&self, value: i64) -> Result<HPolytope> {
        if self.ambient_dim < 2 {
            return Err(Error::Precondition(
                "cannot slice a one-dimensional polytope".into(),
            ));
        }
        let m = Rational::from_integer(value.into());
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let (last, rest) = f.normal.split_last().expect("nonempty normal");
                let offset = &f.offset + &m * Rational::from_integer((*last).into());
                AffineForm::normalized(rest.to_vec(), offset)
            })
            .collect();
        HPolytope::new(self.ambient_dim - 1, forms)
    }

    /// Integer bounding box `[ceil(min), floor(max)]` per coordinate, or
    /// `None` when the polytope is empty.
    pub fn integer_bounding_box(&self) -> Result<Option<Vec<(i64, i64)>>> {
        let v = self.vertex_enumeration()?;
        if v.is_empty() {
            return Ok(None);
        }
        let mut bounds = Vec::with_capacity(self.ambient_dim);
        for i in 0..self.ambient_dim {
            let lo = v.vertices.iter().map(|x| &x[i]).min().expect("nonempty");
            let hi = v.vertices.iter().map(|x| &x[i]).max().expect("nonempty");
            bounds.push((ceil_i64(lo)?, floor_i64(hi)?));
        }
        Ok(Some(bounds))
    }

    /// Number of candidate points the bounding-box scan would visit.
    pub fn predicted_scan_size(&self) -> Result<u128> {
        Ok(match self.integer_bounding_box()? {
            None => 0,
            Some(b) => b
                .iter()
                .map(|&(lo, hi)| if hi < lo { 0 } else { (hi - lo + 1) as u128 })
                .product(),
        })
    }

    /// All integer points, lexicographically ordered.
    pub fn lattice_points(&self) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.scan_lattice(|p| out.push(p.to_vec()))?;
        Ok(out)
    }

    pub fn count_lattice_points(&self) -> Result<u64> {
        let mut count = 0u64;
        self.scan_lattice(|_| count += 1)?;
        Ok(count)
    }

    /// Like [`count_lattice_points`](Self::count_lattice_points) but fails
    /// before scanning when the bounding box exceeds `budget` points.
    pub fn count_lattice_points_within(&self, budget: u128) -> Result<u64> {
        let predicted = self.predicted_scan_size()?;
        if predicted > budget {
            return Err(Error::BudgetExceeded { predicted, budget });
        }
        self.count_lattice_points()
    }

    /// Stops at the first lattice point found.
    pub fn has_lattice_point(&self) -> Result<bool> {
        let mut found = false;
        self.scan_lattice_until(|_| {
            found = true;
            false
        })?;
        Ok(found)
    }

    fn scan_lattice(&self, mut visit: impl FnMut(&[i64])) -> Result<()> {
        self.scan_lattice_until(|p| {
            visit(p);
            true
        })
    }

    /// Visits lattice points in lexicographic order until `visit` returns false.
    fn scan_lattice_until(&self, mut visit: impl FnMut(&[i64]) -> bool) -> Result<()> {
        let Some(bounds) = self.integer_bounding_box()? else {
            return Ok(());
        };
        if bounds.iter().any(|&(lo, hi)| hi < lo) {
            return Ok(());
        }
        let forms: Vec<(Vec<i128>, i128)> = self
            .forms
            .iter()
            .map(AffineForm::integral)
            .collect::<Result<_>>()?;
        let n = self.ambient_dim;
        let mut point: Vec<i64> = bounds.iter().map(|b| b.0).collect();
        loop {
            let inside = forms.iter().all(|(normal, c)| {
                let s: i128 = normal
                    .iter()
                    .zip(&point)
                    .map(|(a, &x)| a * x as i128)
                    .sum();
                s + c >= 0
            });
            if inside && !visit(&point) {
                return Ok(());
            }
            // odometer, last coordinate fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                if point[i] < bounds[i].1 {
                    point[i] += 1;
                    break;
                }
                point[i] = bounds[i].0;
            }
        }
    }
}

fn barycenter(points: &[Vector]) -> Vector {
    let n = points[0].len();
    let k = Rational::from_integer(BigInt::from(points.len()));
    (0..n)
        .map(|i| points.iter().map(|p| &p[i]).sum::<Rational>() / &k)
        .collect()
}

/// Primitive integer vector along a rational direction.
fn integral_direction(v: &[Rational]) -> Vec<i64> {
    let den = super::rational::common_denominator(v.iter());
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| (x / &g).to_i64().expect("direction fits in i64"))
        .collect()
}

/// Facets (as vertex-index sets) of the face spanned by `face`, which has
/// dimension `dim`. With `exclude`, facets containing that vertex are skipped.
fn subfaces(
    vertices: &[Vector],
    tight: &[Vec<bool>],
    face: &[usize],
    dim: usize,
    exclude: Option<usize>,
) -> Vec<Vec<usize>> {
    let forms = tight.first().map_or(0, Vec::len);
    let mut seen = BTreeSet::new();
    for j in 0..forms {
        let sub: Vec<usize> = face.iter().copied().filter(|&v| tight[v][j]).collect();
        if sub.is_empty() || exclude.is_some_and(|a| sub.contains(&a)) || seen.contains(&sub) {
            continue;
        }
        let pts: Vec<Vector> = sub.iter().map(|&i| vertices[i].clone()).collect();
        if linalg::affine_dimension(&pts) == Some(dim - 1) {
            seen.insert(sub);
        }
    }
    seen.into_iter().collect()
}

fn pulling_triangulation(
    vertices: &[Vector],
    tight: &[Vec<bool>],
    face: &[usize],
    dim: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if dim == 0 {
        out.push(vec![face[0]]);
        return;
    }
    let apex = face[0];
    for facet in subfaces(vertices, tight, face, dim, Some(apex)) {
        let mut inner = Vec::new();
        pulling_triangulation(vertices, tight, &facet, dim - 1, &mut inner);
        for mut s in inner {
            s.push(apex);
            out.push(s);
        }
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{int, rat};

    fn form(normal: &[i64], offset: i64) -> AffineForm {
        AffineForm::new(normal.to_vec(), int(offset)).unwrap()
    }

    fn poly(dim: usize, forms: &[(&[i64], i64)]) -> HPolytope {
        HPolytope::new(dim, forms.iter().map(|(n, o)| form(n, *o)).collect()).unwrap()
    }

    fn pts(xs: &[&[i64]]) -> Vec<Vector> {
        xs.iter().map(|x| linalg::to_rational_vec(x)).collect()
    }

    fn unit_square() -> HPolytope {
        poly(2, &[(&[1, 0], 0), (&[-1, 0], 1), (&[0, 1], 0), (&[0, -1], 1)])
    }

    fn simplex() -> HPolytope {
        poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 1)])
    }

    fn trapezoid(a: i64, b: i64) -> HPolytope {
        poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], a), (&[1, 1], -b)])
    }

    #[test]
    fn rejects_non_primitive_normals() {
        assert!(AffineForm::new(vec![2, 4], int(0)).is_err());
        assert!(AffineForm::new(vec![0, 0], int(1)).is_ok());
        let f = AffineForm::normalized(vec![2, 4], int(3));
        assert_eq!(f.normal(), &[1, 2]);
        assert_eq!(f.offset(), &rat(3, 2));
    }

    #[test]
    fn vertices_of_square_and_trapezoid() {
        let v = unit_square().vertex_enumeration().unwrap();
        assert_eq!(v.vertices, pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
        let v = trapezoid(2, 1).vertex_enumeration().unwrap();
        assert_eq!(v.vertices, pts(&[&[0, 1], &[0, 2], &[1, 0], &[2, 0]]));
    }

    #[test]
    fn infeasible_polytope_is_empty() {
        let p = poly(1, &[(&[1], 0), (&[-1], -1)]);
        assert!(p.is_bounded());
        assert!(p.vertex_enumeration().unwrap().is_empty());
        assert_eq!(p.volume().unwrap(), int(0));
        assert!(p.lattice_points().unwrap().is_empty());
        assert!(!p.has_lattice_point().unwrap());
        assert_eq!(p.interior_point().unwrap(), None);
    }

    #[test]
    fn unbounded_is_an_error() {
        let p = poly(1, &[(&[1], 0)]);
        assert!(!p.is_bounded());
        assert_eq!(p.vertex_enumeration(), Err(Error::Unbounded));
        assert_eq!(p.volume(), Err(Error::Unbounded));
        assert_eq!(Error::Unbounded.to_string(), "polytope unbounded");
        // a strip in the plane
        let strip = poly(2, &[(&[1, 0], 0), (&[-1, 0], 1)]);
        assert!(!strip.is_bounded());
        // a cone in the plane
        let cone = poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, 1], 3)]);
        assert!(!cone.is_bounded());
    }

    #[test]
    fn volumes() {
        let cube = HPolytope::cube(&[int(0), int(0), int(0)], &[int(1), int(1), int(1)]).unwrap();
        assert_eq!(cube.volume().unwrap(), int(1));
        assert_eq!(simplex().volume().unwrap(), rat(1, 2));
        assert_eq!(trapezoid(2, 1).volume().unwrap(), rat(3, 2));
        assert_eq!(unit_square().interior_point().unwrap(), Some(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn segment_is_bounded_but_flat() {
        let seg = poly(2, &[(&[0, 1], 0), (&[0, -1], 0), (&[1, 0], 0), (&[-1, 0], 1)]);
        assert!(seg.is_bounded());
        assert!(!seg.is_full_dimensional().unwrap());
        assert_eq!(seg.volume().unwrap(), int(0));
        assert_eq!(seg.irredundant(), Err(Error::NotFullDimensional));
    }

    #[test]
    fn lattice_points_examples() {
        let sq = unit_square().dilate(&int(2)).unwrap();
        assert_eq!(sq.lattice_points().unwrap().len(), 9);
        assert!(sq.has_lattice_point().unwrap());
        // cone box of P^1 with O(1)
        let cone_box = poly(2, &[(&[1, 0], 0), (&[-1, 0], 1), (&[-1, 1], 0), (&[1, -1], 1)]);
        assert_eq!(
            cone_box.lattice_points().unwrap(),
            vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn dilation_examples() {
        let sq = unit_square().dilate(&int(2)).unwrap();
        assert_eq!(
            sq.vertex_enumeration().unwrap().vertices,
            pts(&[&[0, 0], &[0, 2], &[2, 0], &[2, 2]])
        );
        assert_eq!(simplex().dilate(&int(1)).unwrap(), simplex());
        assert_eq!(
            trapezoid(2, 1).dilate(&int(3)).unwrap().vertex_enumeration().unwrap(),
            trapezoid(6, 3).vertex_enumeration().unwrap()
        );
        assert!(matches!(simplex().dilate(&int(0)), Err(Error::NonPositiveScale(_))));
        assert!(simplex().dilate(&rat(-1, 2)).is_err());
    }

    #[test]
    fn slicing() {
        let cone_box = poly(2, &[(&[1, 0], 0), (&[-1, 0], 1), (&[-1, 1], 0), (&[1, -1], 1)]);
        let s = cone_box.slice_last_coord(1).unwrap();
        assert_eq!(
            s.vertex_enumeration().unwrap().vertices,
            pts(&[&[0], &[1]])
        );
        let s = cone_box.slice_last_coord(-1).unwrap();
        assert!(s.vertex_enumeration().unwrap().is_empty());
    }

    #[test]
    fn irredundant_drops_redundant_forms() {
        let p = poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 1), (&[-1, 0], 5), (&[1, 1], 0)]);
        let q = p.irredundant().unwrap();
        assert_eq!(q.forms().len(), 3);
    }

    #[test]
    fn hull_from_vertices() {
        let v = trapezoid(2, 1).vertex_enumeration().unwrap();
        let h = HPolytope::from_vertices(2, &v.vertices).unwrap();
        assert_eq!(h.forms().len(), 4);
        assert_eq!(h.volume().unwrap(), rat(3, 2));
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
