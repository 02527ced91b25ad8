//! Rational polyhedral cones and fans, with the hyperplane-subdivision engine
//! and the small-resolution fan at a vertex singularity.

use super::linalg;
use super::lp;
use super::num::{self, dot_zq, int_to_rat, primitive_int, Int, Rat};
use super::polytope::Polytope;
use super::GeomError;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// A strictly convex rational polyhedral cone, stored by its primitive
/// extremal ray generators (lexicographically sorted).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    pub rays: Vec<Vec<Int>>,
}

impl Cone {
    /// Builds a cone from generators: normalizes to primitive vectors,
    /// deduplicates and prunes non-extremal generators.
    pub fn from_generators(gens: &[Vec<Int>]) -> Result<Cone, GeomError> {
        let mut rays: Vec<Vec<Int>> = gens
            .iter()
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .map(|g| primitive_int(g))
            .collect();
        rays.sort();
        rays.dedup();
        if !rays.is_empty() && !is_pointed(&rays) {
            return Err(GeomError::Invalid(
                "cone contains a line (not strictly convex)".into(),
            ));
        }
        // Prune generators lying in the cone of the others.
        let mut i = 0;
        while i < rays.len() {
            let target = int_to_rat(&rays[i]);
            let others: Vec<Vec<Int>> = rays
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| r.clone())
                .collect();
            if !others.is_empty() && in_cone_of(&others, &target) {
                rays.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(Cone { rays })
    }

    pub fn zero(_ambient: usize) -> Cone {
        Cone { rays: vec![] }
    }

    pub fn ambient(&self) -> Option<usize> {
        self.rays.first().map(|r| r.len())
    }

    pub fn dim(&self) -> usize {
        if self.rays.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<Rat>> = self.rays.iter().map(|r| int_to_rat(r)).collect();
        linalg::rank(&rows)
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim()
    }

    /// Exact membership `x ∈ cone` (nonnegative combination of rays).
    pub fn contains(&self, x: &[Rat]) -> bool {
        if num::is_zero_vec(x) {
            return true;
        }
        if self.rays.is_empty() {
            return false;
        }
        in_cone_of(&self.rays, x)
    }

    /// All faces of the cone (including the zero cone and itself).
    pub fn faces(&self) -> Vec<Cone> {
        let ambient = match self.ambient() {
            Some(a) => a,
            None => return vec![Cone { rays: vec![] }],
        };
        // Faces of conv({0} ∪ rays) through the origin are exactly the cones
        // over faces of this cone (pointedness makes 0 a vertex).
        let mut pts: Vec<Vec<Rat>> = vec![num::zeros(ambient)];
        pts.extend(self.rays.iter().map(|r| int_to_rat(r)));
        let hull = Polytope::convex_hull(&pts).expect("cone hull");
        let origin = num::zeros(ambient);
        let origin_id = hull
            .vertices
            .iter()
            .position(|v| *v == origin)
            .expect("pointed cone: origin is a vertex");
        let mut out: Vec<Cone> = Vec::new();
        for face in hull.face_lattice() {
            if !face.vertices.contains(&origin_id) {
                continue;
            }
            let gens: Vec<Vec<Int>> = face
                .vertices
                .iter()
                .filter(|&&i| i != origin_id)
                .map(|&i| num::primitive_direction(&hull.vertices[i]))
                .collect();
            out.push(Cone::from_generators(&gens).expect("face of pointed cone"));
        }
        out.sort();
        out.dedup();
        out
    }

    /// True iff the primitive generators extend to a basis of the saturated
    /// lattice of the cone's span.
    pub fn is_unimodular(&self) -> Result<bool, GeomError> {
        if !self.is_simplicial() {
            return Err(GeomError::NotSimplicial);
        }
        if self.rays.is_empty() {
            return Ok(true);
        }
        let divisors = linalg::elementary_divisors(&self.rays);
        Ok(divisors.len() == self.rays.len() && divisors.iter().all(|d| d.is_one()))
    }
}

fn in_cone_of(rays: &[Vec<Int>], x: &[Rat]) -> bool {
    let k = rays.len();
    let n = x.len();
    // Feasibility of sum t_i r_i = x, t >= 0.
    let mut eqs = Vec::with_capacity(n);
    for coord in 0..n {
        let row: Vec<Rat> = rays
            .iter()
            .map(|r| Rat::from_integer(r[coord].clone()))
            .collect();
        eqs.push((row, x[coord].clone()));
    }
    let ineqs: Vec<(Vec<Rat>, Rat)> = (0..k)
        .map(|i| {
            let mut row = num::zeros(k);
            row[i] = -Rat::one();
            (row, Rat::zero())
        })
        .collect();
    lp::feasible_point(k, &ineqs, &eqs).is_some()
}

fn is_pointed(rays: &[Vec<Int>]) -> bool {
    // Pointed iff some covector is strictly positive on every ray; normalize
    // by bounding the covector in sup-norm and asking for slack > 0.
    let n = rays[0].len();
    let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for r in rays {
        // -<c, r> + t <= 0
        let mut row: Vec<Rat> = r.iter().map(|v| -Rat::from_integer(v.clone())).collect();
        row.push(Rat::one());
        ineqs.push((row, Rat::zero()));
    }
    for j in 0..n {
        for sign in [1i64, -1] {
            let mut row = num::zeros(n + 1);
            row[j] = num::rat_int(sign);
            ineqs.push((row, Rat::one()));
        }
    }
    let mut obj = num::zeros(n + 1);
    obj[n] = Rat::one();
    match lp::maximize(&obj, &ineqs, &[]) {
        lp::LpResult::Optimal { value, .. } => value > Rat::zero(),
        _ => false,
    }
}

/// A fan: a finite collection of strictly convex rational cones, closed under
/// taking faces. Only the maximal cones are stored; the closure is derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub ambient: usize,
    pub maximal: Vec<Cone>,
    /// Set by constructors; audited by `covers_direction` sampling in tests.
    pub complete: bool,
}

impl Fan {
    pub fn from_maximal(ambient: usize, maximal: Vec<Cone>, complete: bool) -> Fan {
        let mut maximal = maximal;
        maximal.sort();
        maximal.dedup();
        Fan {
            ambient,
            maximal,
            complete,
        }
    }

    /// All cones of the fan (face closure of the maximal cones).
    pub fn all_cones(&self) -> Vec<Cone> {
        let mut out: BTreeSet<Cone> = BTreeSet::new();
        out.insert(Cone { rays: vec![] });
        for c in &self.maximal {
            for f in c.faces() {
                out.insert(f);
            }
        }
        out.into_iter().collect()
    }

    /// Primitive generators of all rays of the fan.
    pub fn rays(&self) -> Vec<Vec<Int>> {
        let mut out: BTreeSet<Vec<Int>> = BTreeSet::new();
        for c in &self.maximal {
            for r in &c.rays {
                out.insert(r.clone());
            }
        }
        out.into_iter().collect()
    }

    /// Does some cone of the fan contain the direction `x`?
    pub fn covers_direction(&self, x: &[Rat]) -> bool {
        self.maximal.iter().any(|c| c.contains(x))
    }

    /// Splits every cone along `{⟨normal, ·⟩ = 0}`; cones on one side pass
    /// through unchanged, and no duplicate cones are kept.
    pub fn hyperplane_subdivide(&self, normal: &[Int]) -> Fan {
        let mut new_maximal = Vec::new();
        for cone in &self.maximal {
            let vals: Vec<Rat> = cone
                .rays
                .iter()
                .map(|r| dot_zq(normal, &int_to_rat(r)))
                .collect();
            let has_pos = vals.iter().any(|v| *v > Rat::zero());
            let has_neg = vals.iter().any(|v| *v < Rat::zero());
            if !(has_pos && has_neg) {
                new_maximal.push(cone.clone());
                continue;
            }
            for side in [1i64, -1] {
                let sign = num::rat_int(side);
                let mut gens: Vec<Vec<Int>> = Vec::new();
                for (r, v) in cone.rays.iter().zip(&vals) {
                    if &(v * &sign) >= &Rat::zero() {
                        gens.push(r.clone());
                    }
                }
                for (i, (ri, vi)) in cone.rays.iter().zip(&vals).enumerate() {
                    for (rj, vj) in cone.rays.iter().zip(&vals).skip(i + 1) {
                        if (vi > &Rat::zero() && vj < &Rat::zero())
                            || (vi < &Rat::zero() && vj > &Rat::zero())
                        {
                            // Combination on the hyperplane: vi * rj - vj * ri.
                            let w: Vec<Rat> = ri
                                .iter()
                                .zip(rj)
                                .map(|(a, b)| {
                                    vi * Rat::from_integer(b.clone())
                                        - vj * Rat::from_integer(a.clone())
                                })
                                .collect();
                            let w = num::primitive_direction(&w);
                            if w.iter().any(|x| !x.is_zero()) {
                                gens.push(w);
                            }
                        }
                    }
                }
                new_maximal
                    .push(Cone::from_generators(&gens).expect("subdivided cone is pointed"));
            }
        }
        Fan::from_maximal(self.ambient, new_maximal, self.complete)
    }
}

/// Normal fan of a full-dimensional polytope: one cone per face, spanned by
/// the outer normals of the facets containing that face.
pub fn normal_fan(p: &Polytope) -> Result<Fan, GeomError> {
    if p.dim != p.ambient {
        return Err(GeomError::Degenerate {
            dim: p.dim,
            ambient: p.ambient,
        });
    }
    let facet_verts: Vec<BTreeSet<usize>> = p
        .facets
        .iter()
        .map(|f| {
            (0..p.vertices.len())
                .filter(|&i| f.on_boundary(&p.vertices[i]))
                .collect()
        })
        .collect();
    let mut maximal = Vec::new();
    for face in p.faces_of_dim(0) {
        let gens: Vec<Vec<Int>> = p
            .facets
            .iter()
            .zip(&facet_verts)
            .filter(|(_, fv)| face.vertices.is_subset(fv))
            .map(|(f, _)| f.normal.clone())
            .collect();
        maximal.push(Cone::from_generators(&gens)?);
    }
    Ok(Fan::from_maximal(p.ambient, maximal, true))
}

/// The fan of the small log resolution at a vertex-type singularity
/// `{z_1 ... z_n = t w}`.
///
/// Works in the rank-(n+1) sublattice `N' = {u_1 + ... + u_n = u_t + u_w}` of
/// `Z^{n+2}`, starts from the cone over the generators `v_i = e_i + e_t`,
/// `v'_i = e_i + e_w`, and applies the hyperplane subdivisions
/// `{u_i = u_t}` for `i = 1..n-1` in order. The result has exactly `n`
/// maximal cones, all unimodular, and introduces no new rays.
pub fn vertex_resolution_fan(n: usize) -> Result<Fan, GeomError> {
    if n < 2 {
        return Err(GeomError::Invalid("vertex resolution needs n >= 2".into()));
    }
    let amb = n + 2; // coordinates e_1..e_n, e_t, e_w
    let mut covector = vec![Int::one(); amb];
    covector[n] = -Int::one(); // e_t
    covector[n + 1] = -Int::one(); // e_w
    let basis = linalg::int_kernel(&[covector]); // rows: basis of N'
    assert_eq!(basis.len(), n + 1);

    let to_coords = |v: &[Int]| -> Vec<Int> {
        // Solve sum c_k b_k = v exactly; integrality from saturation.
        let bt: Vec<Vec<Rat>> = linalg::transpose(
            &basis
                .iter()
                .map(|r| int_to_rat(r))
                .collect::<Vec<Vec<Rat>>>(),
        );
        let sol = linalg::solve(&bt, &int_to_rat(v)).expect("vector lies in N'");
        sol.iter()
            .map(|c| {
                assert!(c.is_integer(), "saturated basis gives integral coords");
                c.to_integer()
            })
            .collect()
    };

    let mut gens = Vec::new();
    for i in 0..n {
        let mut v = vec![Int::zero(); amb];
        v[i] = Int::one();
        v[n] = Int::one();
        gens.push(to_coords(&v)); // v_i = e_i + e_t
        let mut vp = vec![Int::zero(); amb];
        vp[i] = Int::one();
        vp[n + 1] = Int::one();
        gens.push(to_coords(&vp)); // v'_i = e_i + e_w
    }
    let sigma = Cone::from_generators(&gens)?;
    let mut fan = Fan::from_maximal(n + 1, vec![sigma], false);
    for i in 0..(n - 1) {
        // Restriction of u_i - u_t to N' in basis coordinates.
        let normal: Vec<Int> = basis.iter().map(|b| &b[i] - &b[n]).collect();
        let normal = primitive_int(&normal);
        fan = fan.hyperplane_subdivide(&normal);
    }
    Ok(fan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::num::{qvec, zvec};

    #[test]
    fn quadrant_split() {
        let c = Cone::from_generators(&[zvec(&[1, 0]), zvec(&[0, 1])]).unwrap();
        let fan = Fan::from_maximal(2, vec![c], false);
        let split = fan.hyperplane_subdivide(&zvec(&[1, -1]));
        assert_eq!(split.maximal.len(), 2);
        let expected: BTreeSet<Cone> = [
            Cone::from_generators(&[zvec(&[1, 0]), zvec(&[1, 1])]).unwrap(),
            Cone::from_generators(&[zvec(&[1, 1]), zvec(&[0, 1])]).unwrap(),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Cone> = split.maximal.iter().cloned().collect();
        assert_eq!(got, expected);
        for c in &split.maximal {
            assert!(c.is_unimodular().unwrap());
        }
        // Idempotence.
        let again = split.hyperplane_subdivide(&zvec(&[1, -1]));
        assert_eq!(again, split);
    }

    #[test]
    fn subdivision_preserves_support() {
        let c = Cone::from_generators(&[zvec(&[1, 0]), zvec(&[0, 1])]).unwrap();
        let fan = Fan::from_maximal(2, vec![c], false);
        let split = fan.hyperplane_subdivide(&zvec(&[2, -3]));
        for dir in [[1i64, 1], [5, 1], [1, 7], [3, 2], [2, 3]] {
            let x = qvec(&dir);
            assert_eq!(fan.covers_direction(&x), split.covers_direction(&x));
        }
        assert!(!split.covers_direction(&qvec(&[-1, 1])));
    }

    #[test]
    fn unimodularity() {
        let good = Cone::from_generators(&[zvec(&[1, 0]), zvec(&[0, 1])]).unwrap();
        assert!(good.is_unimodular().unwrap());
        let bad = Cone::from_generators(&[zvec(&[1, 0]), zvec(&[1, 2])]).unwrap();
        assert!(!bad.is_unimodular().unwrap());
        // Index-2 sublattice in its span inside Z^3.
        let lower = Cone::from_generators(&[zvec(&[1, 1, 0]), zvec(&[1, -1, 0])]).unwrap();
        assert!(!lower.is_unimodular().unwrap());
    }

    #[test]
    fn non_pointed_rejected() {
        assert!(Cone::from_generators(&[zvec(&[1, 0]), zvec(&[-1, 0])]).is_err());
    }

    #[test]
    fn cone_faces_of_quadrant() {
        let c = Cone::from_generators(&[zvec(&[1, 0, 0]), zvec(&[0, 1, 0]), zvec(&[0, 0, 1])])
            .unwrap();
        let faces = c.faces();
        // zero cone, 3 rays, 3 two-dim faces, the cone itself
        assert_eq!(faces.len(), 8);
    }

    #[test]
    fn resolution_fan_small_cases() {
        for n in 2..=4usize {
            let fan = vertex_resolution_fan(n).unwrap();
            assert_eq!(fan.maximal.len(), n, "n = {n}");
            for c in &fan.maximal {
                assert_eq!(c.rays.len(), n + 1);
                assert!(c.is_unimodular().unwrap(), "n = {n}");
            }
            assert_eq!(fan.rays().len(), 2 * n, "no new rays for n = {n}");
        }
    }

    #[test]
    fn resolution_last_ray_in_single_cone() {
        // The ray v_n lies in exactly one maximal cone.
        let n = 3;
        let fan = vertex_resolution_fan(n).unwrap();
        // Reconstruct v_n in fan coordinates by matching a ray of the fan:
        // all rays are v_i or v'_i; v_n is the one contained in exactly one
        // maximal cone per the resolution statement. Count per ray.
        let mut counts = Vec::new();
        for r in fan.rays() {
            let x = int_to_rat(&r);
            let c = fan.maximal.iter().filter(|c| c.contains(&x)).count();
            counts.push(c);
        }
        assert!(counts.iter().any(|&c| c == 1));
    }
}
