//! Exact rational convex polytopes with dual V/H representations and face
//! lattice.
//!
//! `convex_hull` is an incremental beneath-beyond hull over rationals:
//! simplicial facets are maintained during insertion, coplanar groups are
//! merged afterwards, and non-extreme points are pruned by a facet-rank test.
//! Vertex ordering is lexicographic throughout so that downstream golden
//! files are reproducible.

use super::linalg;
use super::lp;
use super::num::{
    self, dot, dot_zq, int_to_rat, lex_cmp, primitive_direction, sub, Int, Rat,
};
use super::GeomError;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Closed halfspace `⟨normal, x⟩ <= offset` with primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<Int>,
    pub offset: Rat,
}

impl Halfspace {
    pub fn eval(&self, x: &[Rat]) -> Rat {
        dot_zq(&self.normal, x)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.eval(x) <= self.offset
    }

    pub fn on_boundary(&self, x: &[Rat]) -> bool {
        self.eval(x) == self.offset
    }
}

/// A face, recorded by its vertex-index set into `Polytope::vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    pub vertices: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    pub ambient: usize,
    pub dim: usize,
    /// Extreme points, lexicographically sorted.
    pub vertices: Vec<Vec<Rat>>,
    /// Supporting inequalities, minimal within the affine hull.
    pub facets: Vec<Halfspace>,
    /// Affine-hull equations `⟨a, x⟩ = b`.
    pub equations: Vec<(Vec<Int>, Rat)>,
}

impl Polytope {
    /// Convex hull of a finite rational point set.
    pub fn convex_hull(points: &[Vec<Rat>]) -> Result<Polytope, GeomError> {
        if points.is_empty() {
            return Err(GeomError::EmptyInput);
        }
        let ambient = points[0].len();
        for p in points {
            if p.len() != ambient {
                return Err(GeomError::DimensionMismatch {
                    expected: ambient,
                    got: p.len(),
                });
            }
        }
        let mut pts: Vec<Vec<Rat>> = points.to_vec();
        pts.sort_by(|a, b| lex_cmp(a, b));
        pts.dedup();

        // Affine hull.
        let base = pts[0].clone();
        let dirs: Vec<Vec<Rat>> = pts[1..].iter().map(|p| sub(p, &base)).collect();
        let dir_rank = linalg::rank(&dirs);
        let dim = dir_rank;

        // Hull-coordinate basis: independent direction rows.
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        for d in &dirs {
            if basis.len() == dim {
                break;
            }
            let mut cand = basis.clone();
            cand.push(d.clone());
            if linalg::rank(&cand) == cand.len() {
                basis = cand;
            }
        }

        // Affine-hull equations from the saturated covector kernel.
        let equations: Vec<(Vec<Int>, Rat)> = if dim == ambient {
            vec![]
        } else {
            let dir_int: Vec<Vec<Rat>> = basis.clone();
            let mat: Vec<Vec<Int>> = dir_int
                .iter()
                .map(|r| primitive_direction(r))
                .collect::<Vec<_>>();
            let mat = if mat.is_empty() {
                // Single point: every coordinate direction is an equation.
                (0..ambient)
                    .map(|j| {
                        let mut e = vec![Int::zero(); ambient];
                        e[j] = Int::one();
                        e
                    })
                    .collect()
            } else {
                linalg::int_kernel(&mat)
            };
            mat.into_iter()
                .map(|a| {
                    let b = dot_zq(&a, &base);
                    (a, b)
                })
                .collect()
        };

        if dim == 0 {
            return Ok(Polytope {
                ambient,
                dim: 0,
                vertices: vec![pts[0].clone()],
                facets: vec![],
                equations,
            });
        }

        // Hull coordinates: c(p) solves p = base + basis^T c.
        let bt = linalg::transpose(&basis);
        let coords: Vec<Vec<Rat>> = pts
            .iter()
            .map(|p| linalg::solve(&bt, &sub(p, &base)).expect("point lies in affine hull"))
            .collect();

        let (vertex_ids, hull_facets) = hull_in_coords(&coords, dim);

        // Map facets back to ambient covectors: a hull-coord covector n acts
        // as x ↦ ⟨n, c(x)⟩; a compatible ambient representative is obtained by
        // solving ⟨a, basis_k⟩ = n_k (choose a in the row space of basis).
        let mut facets: Vec<Halfspace> = Vec::new();
        for f in &hull_facets {
            // Find ambient covector a with a·basis_k = n_k for all k.
            // Solve basis * a = n (basis rows dotted with a).
            let a = linalg::solve(&basis, &f.normal).expect("covector lift exists");
            let prim = primitive_direction(&a);
            // Rescale offset consistently: find scale s with prim = s * a.
            let scale = scale_between(&a, &prim);
            let b0 = dot_zq(&prim, &base);
            let offset = &f.offset * &scale + b0;
            facets.push(Halfspace {
                normal: prim,
                offset,
            });
        }
        facets.sort_by(|f, g| {
            f.normal
                .cmp(&g.normal)
                .then_with(|| f.offset.cmp(&g.offset))
        });

        let vertices: Vec<Vec<Rat>> = vertex_ids.iter().map(|&i| pts[i].clone()).collect();
        Ok(Polytope {
            ambient,
            dim,
            vertices,
            facets,
            equations,
        })
    }

    /// Vertex enumeration of a bounded, full-dimensional `{A x <= b}`.
    pub fn from_inequalities(
        ambient: usize,
        ineqs: &[(Vec<Rat>, Rat)],
    ) -> Result<Polytope, GeomError> {
        // Interior point: maximize t with a_i·x + t <= b_i.
        let mut obj = vec![Rat::zero(); ambient + 1];
        obj[ambient] = Rat::one();
        let lifted: Vec<(Vec<Rat>, Rat)> = ineqs
            .iter()
            .map(|(a, b)| {
                let mut row = a.clone();
                row.push(Rat::one());
                (row, b.clone())
            })
            .collect();
        let center = match lp::maximize(&obj, &lifted, &[]) {
            lp::LpResult::Optimal { x, value } => {
                if value <= Rat::zero() {
                    return Err(GeomError::Degenerate { dim: 0, ambient });
                }
                x[..ambient].to_vec()
            }
            lp::LpResult::Unbounded => {
                return Err(GeomError::Invalid(
                    "inequality system is unbounded".into(),
                ))
            }
            lp::LpResult::Infeasible => {
                return Err(GeomError::Invalid("inequality system is empty".into()))
            }
        };
        // Polar trick around the interior point.
        let mut polar_pts = Vec::new();
        for (a, b) in ineqs {
            let shifted = b - dot(a, &center);
            assert!(shifted > Rat::zero(), "center must be strictly interior");
            polar_pts.push(a.iter().map(|ai| ai / &shifted).collect::<Vec<Rat>>());
        }
        let polar = Polytope::convex_hull(&polar_pts)?;
        if polar.dim != ambient {
            return Err(GeomError::Invalid(
                "inequality system is unbounded (polar degenerate)".into(),
            ));
        }
        let mut verts = Vec::new();
        for f in &polar.facets {
            // Facet ⟨n, y⟩ <= c of the polar, c > 0, gives vertex n/c + center.
            assert!(f.offset > Rat::zero(), "origin interior to polar");
            let v: Vec<Rat> = f
                .normal
                .iter()
                .zip(&center)
                .map(|(n, c0)| Rat::from_integer(n.clone()) / &f.offset + c0)
                .collect();
            verts.push(v);
        }
        Polytope::convex_hull(&verts)
    }

    /// Polar dual `{x : ⟨u, x⟩ <= 1 for all u in P}`.
    ///
    /// Requires the origin strictly inside `P`; equivalent to all facet
    /// offsets being positive.
    pub fn polar_dual(&self) -> Result<Polytope, GeomError> {
        if self.dim != self.ambient {
            return Err(GeomError::Degenerate {
                dim: self.dim,
                ambient: self.ambient,
            });
        }
        let origin = num::zeros(self.ambient);
        if !self.interior_contains(&origin) {
            return Err(GeomError::OriginNotInterior);
        }
        // Vertices of P* are facet normals of P rescaled to offset 1.
        let duals: Vec<Vec<Rat>> = self
            .facets
            .iter()
            .map(|f| {
                f.normal
                    .iter()
                    .map(|n| Rat::from_integer(n.clone()) / &f.offset)
                    .collect()
            })
            .collect();
        Polytope::convex_hull(&duals)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|(a, b)| dot_zq(a, x) == *b)
            && self.facets.iter().all(|f| f.contains(x))
    }

    /// Relative-interior membership (strict facet inequalities).
    pub fn relint_contains(&self, x: &[Rat]) -> bool {
        if self.dim == 0 {
            return x == self.vertices[0].as_slice();
        }
        self.equations.iter().all(|(a, b)| dot_zq(a, x) == *b)
            && self.facets.iter().all(|f| f.eval(x) < f.offset)
    }

    /// Interior membership in the ambient space (full-dimensional only).
    pub fn interior_contains(&self, x: &[Rat]) -> bool {
        self.dim == self.ambient && self.facets.iter().all(|f| f.eval(x) < f.offset)
    }

    pub fn barycenter(&self) -> Vec<Rat> {
        let n = Rat::from_integer(Int::from(self.vertices.len()));
        let mut c = num::zeros(self.ambient);
        for v in &self.vertices {
            c = num::add(&c, v);
        }
        num::scale(&c, &(Rat::one() / n))
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    /// Support value `max_{u in P} ⟨u, x⟩`, by brute force over vertices.
    pub fn support_value(&self, x: &[Rat]) -> Rat {
        self.vertices
            .iter()
            .map(|v| dot(v, x))
            .max()
            .expect("nonempty polytope")
    }

    /// All nonempty faces (including the polytope itself), by intersecting
    /// facet vertex sets; graded by affine dimension.
    pub fn face_lattice(&self) -> Vec<Face> {
        let all: BTreeSet<usize> = (0..self.vertices.len()).collect();
        let incidences: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| {
                (0..self.vertices.len())
                    .filter(|&i| f.on_boundary(&self.vertices[i]))
                    .collect()
            })
            .collect();
        let mut seen: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        seen.insert(all.clone(), self.dim);
        let mut queue = vec![all];
        while let Some(cur) = queue.pop() {
            for inc in &incidences {
                let s: BTreeSet<usize> = cur.intersection(inc).cloned().collect();
                if s.is_empty() || seen.contains_key(&s) {
                    continue;
                }
                let d = self.vertex_set_dim(&s);
                seen.insert(s.clone(), d);
                queue.push(s);
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|(vertices, dim)| Face { dim, vertices })
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
        faces
    }

    fn vertex_set_dim(&self, s: &BTreeSet<usize>) -> usize {
        let ids: Vec<usize> = s.iter().cloned().collect();
        let base = &self.vertices[ids[0]];
        let dirs: Vec<Vec<Rat>> = ids[1..]
            .iter()
            .map(|&i| sub(&self.vertices[i], base))
            .collect();
        linalg::rank(&dirs)
    }

    pub fn faces_of_dim(&self, d: usize) -> Vec<Face> {
        self.face_lattice()
            .into_iter()
            .filter(|f| f.dim == d)
            .collect()
    }

    /// Full-dimensional Lebesgue volume; zero for lower-dimensional bodies.
    pub fn volume(&self) -> Rat {
        if self.dim < self.ambient {
            return Rat::zero();
        }
        let simplices = self.triangulation();
        let mut total = Rat::zero();
        let mut factorial = Rat::one();
        for k in 1..=self.dim {
            factorial *= Rat::from_integer(Int::from(k as i64));
        }
        for s in &simplices {
            let apex = &self.vertices[s[0]];
            let rows: Vec<Vec<Rat>> = s[1..]
                .iter()
                .map(|&i| sub(&self.vertices[i], apex))
                .collect();
            total += linalg::det(&rows).abs();
        }
        total / factorial
    }

    /// A triangulation into simplices given by vertex-index lists.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        if self.vertices.len() == self.dim + 1 {
            return vec![(0..self.vertices.len()).collect()];
        }
        // Cone from vertex 0 over triangulated facets not containing it.
        let mut out = Vec::new();
        for face in self.faces_of_dim(self.dim.saturating_sub(1)) {
            if face.vertices.contains(&0) {
                continue;
            }
            let ids: Vec<usize> = face.vertices.iter().cloned().collect();
            let sub_pts: Vec<Vec<Rat>> = ids.iter().map(|&i| self.vertices[i].clone()).collect();
            let sub_poly = Polytope::convex_hull(&sub_pts).expect("facet is a polytope");
            // Map sub-poly vertex order back to our indices.
            let back: Vec<usize> = sub_poly
                .vertices
                .iter()
                .map(|v| {
                    ids.iter()
                        .cloned()
                        .find(|&i| self.vertices[i] == *v)
                        .expect("facet vertex belongs to parent")
                })
                .collect();
            for simplex in sub_poly.triangulation() {
                let mut s = vec![0usize];
                s.extend(simplex.iter().map(|&j| back[j]));
                out.push(s);
            }
        }
        out
    }

    /// Integer points of the polytope (bounding-box scan; small bodies only).
    pub fn lattice_points(&self) -> Vec<Vec<Int>> {
        let n = self.ambient;
        let mut lo = vec![Int::zero(); n];
        let mut hi = vec![Int::zero(); n];
        for j in 0..n {
            lo[j] = num::floor(self.vertices.iter().map(|v| &v[j]).min().unwrap());
            hi[j] = num::ceil(self.vertices.iter().map(|v| &v[j]).max().unwrap());
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'scan: loop {
            let q: Vec<Rat> = int_to_rat(&cur);
            if self.contains(&q) {
                out.push(cur.clone());
            }
            // Odometer increment.
            for j in 0..n {
                cur[j] += 1;
                if cur[j] <= hi[j] {
                    continue 'scan;
                }
                cur[j] = lo[j].clone();
            }
            break;
        }
        out.sort();
        out
    }

    /// Squared circumradius around the origin (max squared vertex norm).
    pub fn circumradius_sq(&self) -> Rat {
        self.vertices
            .iter()
            .map(|v| dot(v, v))
            .max()
            .expect("nonempty")
    }

    /// OFF mesh text for ambient dimension <= 3.
    pub fn to_off(&self) -> Result<String, GeomError> {
        if self.ambient > 3 {
            return Err(GeomError::Invalid(
                "OFF export is limited to ambient dimension <= 3".into(),
            ));
        }
        let vertex_line = |v: &Vec<Rat>| -> String {
            let mut c: Vec<String> = v.iter().map(|x| fmt_f64(num::rat_to_f64(x))).collect();
            while c.len() < 3 {
                c.push("0".into());
            }
            c.join(" ")
        };
        let polys: Vec<Vec<usize>> = match self.dim {
            0 | 1 => vec![],
            2 => vec![order_cycle(&self.vertices, &(0..self.vertices.len()).collect::<Vec<_>>())],
            3 => self
                .faces_of_dim(2)
                .iter()
                .map(|f| {
                    let ids: Vec<usize> = f.vertices.iter().cloned().collect();
                    order_cycle(&self.vertices, &ids)
                })
                .collect(),
            _ => unreachable!(),
        };
        let mut s = String::from("OFF\n");
        s.push_str(&format!("{} {} 0\n", self.vertices.len(), polys.len()));
        for v in &self.vertices {
            s.push_str(&vertex_line(v));
            s.push('\n');
        }
        for p in &polys {
            let ids: Vec<String> = p.iter().map(|i| i.to_string()).collect();
            s.push_str(&format!("{} {}\n", p.len(), ids.join(" ")));
        }
        Ok(s)
    }
}

fn fmt_f64(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{}", x)
    }
}

/// Cyclic ordering of coplanar points around their centroid (exact).
fn order_cycle(vertices: &[Vec<Rat>], ids: &[usize]) -> Vec<usize> {
    if ids.len() <= 3 {
        return ids.to_vec();
    }
    let pts: Vec<Vec<Rat>> = ids.iter().map(|&i| vertices[i].clone()).collect();
    let mut center = num::zeros(pts[0].len());
    for p in &pts {
        center = num::add(&center, p);
    }
    let k = Rat::from_integer(Int::from(pts.len() as i64));
    center = num::scale(&center, &(Rat::one() / k));
    // Plane basis from first two independent directions.
    let dirs: Vec<Vec<Rat>> = pts.iter().map(|p| sub(p, &center)).collect();
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for d in &dirs {
        if basis.len() == 2 {
            break;
        }
        let mut cand = basis.clone();
        cand.push(d.clone());
        if linalg::rank(&cand) == cand.len() {
            basis = cand;
        }
    }
    let bt = linalg::transpose(&basis);
    let planar: Vec<(Rat, Rat)> = dirs
        .iter()
        .map(|d| {
            let c = linalg::solve(&bt, d).expect("coplanar");
            (c[0].clone(), c[1].clone())
        })
        .collect();
    let half = |p: &(Rat, Rat)| -> u8 {
        if p.1 > Rat::zero() || (p.1.is_zero() && p.0 > Rat::zero()) {
            0
        } else {
            1
        }
    };
    let mut order: Vec<usize> = (0..ids.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (&planar[a], &planar[b]);
        half(pa).cmp(&half(pb)).then_with(|| {
            // cross(pa, pb) > 0 means pa comes first (counterclockwise).
            let cross = &pa.0 * &pb.1 - &pa.1 * &pb.0;
            if cross > Rat::zero() {
                std::cmp::Ordering::Less
            } else if cross < Rat::zero() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        })
    });
    order.into_iter().map(|i| ids[i]).collect()
}

fn scale_between(original: &[Rat], primitive: &[Int]) -> Rat {
    for (o, p) in original.iter().zip(primitive) {
        if !o.is_zero() {
            return Rat::from_integer(p.clone()) / o;
        }
    }
    Rat::one()
}

struct HullFacet {
    normal: Vec<Rat>,
    offset: Rat,
    verts: BTreeSet<usize>,
}

/// Beneath-beyond hull in full-dimensional coordinates.
///
/// Returns (vertex indices into `pts`, facets).
fn hull_in_coords(pts: &[Vec<Rat>], dim: usize) -> (Vec<usize>, Vec<HullFacet>) {
    assert!(dim >= 1);
    if dim == 1 {
        let mut idx: Vec<usize> = (0..pts.len()).collect();
        idx.sort_by(|&a, &b| pts[a][0].cmp(&pts[b][0]));
        let (lo, hi) = (idx[0], idx[idx.len() - 1]);
        let facets = vec![
            HullFacet {
                normal: vec![Rat::one()],
                offset: pts[hi][0].clone(),
                verts: BTreeSet::from([hi]),
            },
            HullFacet {
                normal: vec![-Rat::one()],
                offset: -pts[lo][0].clone(),
                verts: BTreeSet::from([lo]),
            },
        ];
        return (vec![lo, hi], facets);
    }

    // Initial simplex: greedy affinely independent subset in lex order.
    let mut simplex = vec![0usize];
    for i in 1..pts.len() {
        if simplex.len() == dim + 1 {
            break;
        }
        let dirs: Vec<Vec<Rat>> = simplex[1..]
            .iter()
            .chain(std::iter::once(&i))
            .map(|&j| sub(&pts[j], &pts[simplex[0]]))
            .collect();
        if linalg::rank(&dirs) == dirs.len() {
            simplex.push(i);
        }
    }
    assert_eq!(simplex.len(), dim + 1, "point set must be full-dimensional");

    let mut interior = num::zeros(dim);
    for &i in &simplex {
        interior = num::add(&interior, &pts[i]);
    }
    interior = num::scale(
        &interior,
        &(Rat::one() / Rat::from_integer(Int::from((dim + 1) as i64))),
    );

    let mut facets: Vec<Option<SimpFacet>> = Vec::new();
    for drop in 0..simplex.len() {
        let verts: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != drop)
            .map(|(_, &v)| v)
            .collect();
        facets.push(Some(SimpFacet::through(pts, &verts, &interior)));
    }

    let in_simplex: BTreeSet<usize> = simplex.iter().cloned().collect();
    for q in 0..pts.len() {
        if in_simplex.contains(&q) {
            continue;
        }
        let visible: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter_map(|(i, f)| {
                f.as_ref().and_then(|f| {
                    if dot(&f.normal, &pts[q]) > f.offset {
                        Some(i)
                    } else {
                        None
                    }
                })
            })
            .collect();
        if visible.is_empty() {
            continue;
        }
        // Horizon ridges: ridge of a visible facet whose other facet is not
        // visible.
        let visible_set: BTreeSet<usize> = visible.iter().cloned().collect();
        let mut ridge_owner: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (i, f) in facets.iter().enumerate() {
            if let Some(f) = f {
                for ridge in f.ridges() {
                    ridge_owner.entry(ridge).or_default().push(i);
                }
            }
        }
        let mut new_facets = Vec::new();
        for (ridge, owners) in &ridge_owner {
            debug_assert!(owners.len() <= 2, "ridge shared by more than two facets");
            let vis_count = owners.iter().filter(|o| visible_set.contains(o)).count();
            if vis_count == 1 && owners.len() == 2 {
                let mut verts = ridge.clone();
                verts.push(q);
                new_facets.push(SimpFacet::through(pts, &verts, &interior));
            }
        }
        for i in &visible {
            facets[*i] = None;
        }
        facets.extend(new_facets.into_iter().map(Some));
    }

    // Merge coplanar simplicial facets into true facets.
    let mut groups: BTreeMap<(Vec<Int>, Rat), BTreeSet<usize>> = BTreeMap::new();
    for f in facets.iter().flatten() {
        let prim = primitive_direction(&f.normal);
        let scale = scale_between(&f.normal, &prim);
        let key = (prim, &f.offset * &scale);
        groups.entry(key).or_default().extend(f.verts.iter());
    }
    let merged: Vec<HullFacet> = groups
        .into_iter()
        .map(|((normal, offset), verts)| HullFacet {
            normal: int_to_rat(&normal),
            offset,
            verts,
        })
        .collect();

    // Vertices: points whose containing-facet normals span rank `dim`.
    let mut vertex_ids = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let normals: Vec<Vec<Rat>> = merged
            .iter()
            .filter(|f| dot(&f.normal, p) == f.offset)
            .map(|f| f.normal.clone())
            .collect();
        if normals.len() >= dim && linalg::rank(&normals) == dim {
            vertex_ids.push(i);
        }
    }
    // Drop non-vertex points from facet incidence lists.
    let vertex_set: BTreeSet<usize> = vertex_ids.iter().cloned().collect();
    let merged = merged
        .into_iter()
        .map(|mut f| {
            f.verts = f.verts.intersection(&vertex_set).cloned().collect();
            f
        })
        .collect();
    (vertex_ids, merged)
}

struct SimpFacet {
    normal: Vec<Rat>,
    offset: Rat,
    verts: Vec<usize>,
}

impl SimpFacet {
    /// Oriented hyperplane through `verts` (affinely independent, |verts| = d).
    fn through(pts: &[Vec<Rat>], verts: &[usize], interior: &[Rat]) -> SimpFacet {
        let base = &pts[verts[0]];
        let dirs: Vec<Vec<Rat>> = verts[1..].iter().map(|&i| sub(&pts[i], base)).collect();
        let kernel = linalg::kernel(&dirs);
        assert_eq!(kernel.len(), 1, "facet points must span a hyperplane");
        let mut normal = kernel.into_iter().next().unwrap();
        let mut offset = dot(&normal, base);
        let side = dot(&normal, interior);
        assert!(side != offset, "interior point on facet hyperplane");
        if side > offset {
            normal = num::neg(&normal);
            offset = -offset;
        }
        let mut verts = verts.to_vec();
        verts.sort_unstable();
        SimpFacet {
            normal,
            offset,
            verts,
        }
    }

    fn ridges(&self) -> Vec<Vec<usize>> {
        (0..self.verts.len())
            .map(|drop| {
                self.verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != drop)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::num::{qvec, rat, rat_int};

    fn qpts(pts: &[&[i64]]) -> Vec<Vec<Rat>> {
        pts.iter().map(|p| qvec(p)).collect()
    }

    #[test]
    fn unit_square() {
        let p = Polytope::convex_hull(&qpts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.dim, 2);
        assert_eq!(p.vertices.len(), 4);
        assert_eq!(p.facets.len(), 4);
        assert_eq!(p.volume(), rat_int(1));
    }

    #[test]
    fn collinear_points_drop_middle() {
        let p = Polytope::convex_hull(&qpts(&[&[0, 0], &[1, 0], &[2, 0]])).unwrap();
        assert_eq!(p.dim, 1);
        assert_eq!(p.vertices, qpts(&[&[0, 0], &[2, 0]]));
        assert_eq!(p.equations.len(), 1);
    }

    #[test]
    fn interior_and_boundary_points_pruned() {
        let p = Polytope::convex_hull(&qpts(&[
            &[0, 0],
            &[4, 0],
            &[0, 4],
            &[1, 1], // interior
            &[2, 0], // on an edge
        ]))
        .unwrap();
        assert_eq!(p.vertices.len(), 3);
        assert_eq!(p.facets.len(), 3);
    }

    #[test]
    fn cube_and_octahedron_duality() {
        let cube = Polytope::convex_hull(&qpts(&[
            &[-1, -1, -1],
            &[-1, -1, 1],
            &[-1, 1, -1],
            &[-1, 1, 1],
            &[1, -1, -1],
            &[1, -1, 1],
            &[1, 1, -1],
            &[1, 1, 1],
        ]))
        .unwrap();
        assert_eq!(cube.facets.len(), 6);
        assert_eq!(cube.volume(), rat_int(8));
        let oct = cube.polar_dual().unwrap();
        assert_eq!(oct.vertices.len(), 6);
        assert_eq!(oct.facets.len(), 8);
        let back = oct.polar_dual().unwrap();
        assert_eq!(back.vertices, cube.vertices);
        // Face lattice anti-isomorphism in counts: cube 12 edges <-> oct 12.
        assert_eq!(cube.faces_of_dim(1).len(), 12);
        assert_eq!(oct.faces_of_dim(1).len(), 12);
    }

    #[test]
    fn square_polar_is_cross_polytope() {
        let sq = Polytope::convex_hull(&qpts(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]])).unwrap();
        let cross = sq.polar_dual().unwrap();
        assert_eq!(
            cross.vertices,
            qpts(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]])
        );
    }

    #[test]
    fn polar_requires_interior_origin() {
        let p = Polytope::convex_hull(&qpts(&[&[1, 0], &[2, 0], &[1, 1], &[2, 1]])).unwrap();
        assert!(matches!(
            p.polar_dual(),
            Err(GeomError::OriginNotInterior)
        ));
    }

    #[test]
    fn face_lattice_of_simplex() {
        let s = Polytope::convex_hull(&qpts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]))
            .unwrap();
        let faces = s.face_lattice();
        // 4 vertices + 6 edges + 4 triangles + 1 solid
        assert_eq!(faces.len(), 15);
        assert_eq!(s.faces_of_dim(0).len(), 4);
        assert_eq!(s.faces_of_dim(1).len(), 6);
        assert_eq!(s.faces_of_dim(2).len(), 4);
        assert_eq!(s.volume(), rat(1, 6));
    }

    #[test]
    fn vertex_enumeration_roundtrip() {
        // {|x| <= 1, |y| <= 1, x + y <= 3/2}
        let ineqs = vec![
            (qvec(&[1, 0]), rat_int(1)),
            (qvec(&[-1, 0]), rat_int(1)),
            (qvec(&[0, 1]), rat_int(1)),
            (qvec(&[0, -1]), rat_int(1)),
            (qvec(&[1, 1]), rat(3, 2)),
        ];
        let p = Polytope::from_inequalities(2, &ineqs).unwrap();
        assert_eq!(p.vertices.len(), 5);
        assert!(p.contains(&qvec(&[1, 0])));
        assert!(!p.contains(&qvec(&[1, 1])));
    }

    #[test]
    fn lattice_point_enumeration() {
        let p = Polytope::convex_hull(&qpts(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        assert_eq!(p.lattice_points().len(), 6);
    }

    #[test]
    fn off_export_tetrahedron() {
        let s = Polytope::convex_hull(&qpts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]))
            .unwrap();
        let off = s.to_off().unwrap();
        assert!(off.starts_with("OFF\n4 4 0\n"));
    }
}
