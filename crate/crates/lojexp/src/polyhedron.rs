//! Newton polyhedra: conv(points) + nonnegative orthant, with exact dual
//! (vertex/facet) representations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{EngineError, Result};
use crate::hull::{affine_rank, convex_hull_facets};
use crate::ideal::MonomialIdeal;
use crate::lattice::WeightVec;
use crate::rat::{rat_ceil, rat_int, Rat};
use crate::simplex::feasible_point;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inward normal (nonnegative integers).
    pub normal: WeightVec,
    /// h(normal): every point x of the polyhedron satisfies <normal, x> >= offset.
    pub offset: Rat,
}

/// A rational polyhedron of the form conv(vertices) + R_{>=0}^n, stored with
/// both representations. Facets are sorted lexicographically by normal;
/// vertices lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<Vec<Rat>>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    /// Builds the polyhedron conv(points) + orthant from rational points.
    pub fn from_rational_points(dim: usize, points: &[Vec<Rat>]) -> Result<Self> {
        if points.is_empty() {
            return Err(EngineError::EmptyGenerators);
        }
        for p in points {
            if p.len() != dim {
                return Err(EngineError::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            if p.iter().any(|x| x.is_negative()) {
                return Err(EngineError::InvalidInput(
                    "polyhedron points must be nonnegative".into(),
                ));
            }
        }
        if dim == 0 {
            return Err(EngineError::InvalidInput("dimension must be >= 1".into()));
        }
        if dim > 4 {
            return Err(EngineError::UnsupportedDimension(dim));
        }
        if dim == 1 {
            let min = points.iter().map(|p| p[0].clone()).min().unwrap();
            return Ok(NewtonPolyhedron {
                dim,
                vertices: vec![vec![min.clone()]],
                facets: vec![Facet {
                    normal: WeightVec::new(vec![1]).unwrap(),
                    offset: min,
                }],
            });
        }

        // Facets of conv(points)+orthant are exactly the nonnegative-normal
        // facets of the bounded proxy conv{p + M*e_S : S subset of axes}:
        // for u >= 0, face_u of the proxy is face_u(conv points) +
        // sum_{u_i=0}[0,M]e_i, which has the same affine dimension as
        // face_u(conv points) + cone{e_i : u_i=0}.
        let mut maxc = BigInt::zero();
        for p in points {
            for x in p {
                let c = rat_ceil(x);
                if c > maxc {
                    maxc = c;
                }
            }
        }
        let m_shift = Rat::from_integer(maxc + BigInt::from(1));

        let mut proxy: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for p in points {
            for mask in 0u32..(1 << dim) {
                let mut q = p.clone();
                for (i, qi) in q.iter_mut().enumerate() {
                    if mask & (1 << i) != 0 {
                        *qi += &m_shift;
                    }
                }
                proxy.insert(q);
            }
        }
        let proxy: Vec<Vec<Rat>> = proxy.into_iter().collect();
        let hull = convex_hull_facets(&proxy)?;

        let mut facets: Vec<Facet> = Vec::new();
        for f in hull {
            if f.normal.iter().any(|c| c.is_negative()) {
                continue;
            }
            let normal = WeightVec::from_bigints(&f.normal)?;
            // Offsets recomputed as exact minima over the defining points.
            let offset = points
                .iter()
                .map(|p| normal.dot_rat(p))
                .min()
                .unwrap();
            facets.push(Facet { normal, offset });
        }
        facets.sort_by(|a, b| {
            a.normal
                .coords()
                .cmp(b.normal.coords())
                .then_with(|| a.offset.cmp(&b.offset))
        });
        facets.dedup();

        // A point of conv(points)+orthant is a vertex iff its active facet
        // normals span the ambient space.
        let mut vertices: Vec<Vec<Rat>> = Vec::new();
        for p in points {
            let mut active: Vec<Vec<Rat>> = Vec::new();
            for f in &facets {
                if f.normal.dot_rat(p) == f.offset {
                    active.push(
                        f.normal
                            .coords()
                            .iter()
                            .map(|&c| rat_int(c))
                            .collect(),
                    );
                }
            }
            if active.is_empty() {
                continue;
            }
            // Linear rank = affine rank of the normals together with 0.
            active.push(vec![Rat::zero(); dim]);
            if affine_rank(&active) == dim + 1 {
                vertices.push(p.clone());
            }
        }
        vertices.sort();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(EngineError::Internal("polyhedron has no vertices".into()));
        }

        Ok(NewtonPolyhedron {
            dim,
            vertices,
            facets,
        })
    }

    /// NP(I) = conv(generator exponents) + orthant.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let pts: Vec<Vec<Rat>> = ideal.gens().iter().map(|g| g.to_rat_point()).collect();
        Self::from_rational_points(ideal.dim(), &pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Facets with strictly positive normal (the compact ones).
    pub fn compact_facets(&self) -> Vec<&Facet> {
        self.facets
            .iter()
            .filter(|f| f.normal.strictly_positive())
            .collect()
    }

    /// Support function h(u) = min over vertices of <u, x> (u >= 0).
    pub fn support(&self, u: &WeightVec) -> Result<Rat> {
        if u.dim() != self.dim {
            return Err(EngineError::DimensionMismatch {
                expected: self.dim,
                got: u.dim(),
            });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| u.dot_rat(v))
            .min()
            .unwrap())
    }

    /// Membership through the facet description.
    pub fn member(&self, point: &[Rat]) -> Result<bool> {
        if point.len() != self.dim {
            return Err(EngineError::DimensionMismatch {
                expected: self.dim,
                got: point.len(),
            });
        }
        if point.iter().any(|x| x.is_negative()) {
            return Ok(false);
        }
        Ok(self
            .facets
            .iter()
            .all(|f| f.normal.dot_rat(point) >= f.offset))
    }

    /// Independent membership oracle through the vertex description: exact
    /// feasibility of  sum lambda_j v_j <= point, lambda >= 0, sum lambda = 1.
    pub fn vrep_member(&self, point: &[Rat]) -> Result<bool> {
        if point.len() != self.dim {
            return Err(EngineError::DimensionMismatch {
                expected: self.dim,
                got: point.len(),
            });
        }
        if point.iter().any(|x| x.is_negative()) {
            return Ok(false);
        }
        let nv = self.vertices.len();
        let n = self.dim;
        // Variables: lambda_1..lambda_nv, slack_1..slack_n.
        let mut a = vec![vec![Rat::zero(); nv + n]; n + 1];
        let mut b = vec![Rat::zero(); n + 1];
        for i in 0..n {
            for (j, v) in self.vertices.iter().enumerate() {
                a[i][j] = v[i].clone();
            }
            a[i][nv + i] = Rat::from_integer(BigInt::from(1));
            b[i] = point[i].clone();
        }
        for x in a[n].iter_mut().take(nv) {
            *x = Rat::from_integer(BigInt::from(1));
        }
        b[n] = Rat::from_integer(BigInt::from(1));
        Ok(feasible_point(&a, &b).is_some())
    }

    /// Minkowski sum; support functions add exactly.
    pub fn minkowski_sum(&self, other: &NewtonPolyhedron) -> Result<NewtonPolyhedron> {
        if other.dim != self.dim {
            return Err(EngineError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        NewtonPolyhedron::from_rational_points(self.dim, &sums)
    }

    /// Dilation by a positive rational; h_{rP}(u) = r h_P(u).
    pub fn scale(&self, r: &Rat) -> Result<NewtonPolyhedron> {
        if !r.is_positive() {
            return Err(EngineError::InvalidInput(
                "scale factor must be positive".into(),
            ));
        }
        Ok(NewtonPolyhedron {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * r).collect())
                .collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: &f.offset * r,
                })
                .collect(),
        })
    }

    /// Complement of the polyhedron in the orthant is bounded iff every axis
    /// carries a pure-axis vertex.
    pub fn complement_bounded(&self) -> bool {
        (0..self.dim).all(|i| {
            self.vertices.iter().any(|v| {
                v.iter()
                    .enumerate()
                    .all(|(j, x)| if j == i { x.is_positive() } else { x.is_zero() })
                    || (v.iter().all(|x| x.is_zero()))
            })
        })
    }

    /// Exact volume of orthant minus the polyhedron (dim <= 3). The region is
    /// star-shaped from the origin and every positive-offset facet is compact,
    /// so the volume is the sum of the cones over the compact facets.
    pub fn covolume(&self) -> Result<Rat> {
        if self.dim > 3 {
            return Err(EngineError::UnsupportedDimension(self.dim));
        }
        if !self.complement_bounded() {
            return Err(EngineError::NotMPrimary(
                "complement in the orthant is unbounded".into(),
            ));
        }
        match self.dim {
            1 => Ok(self.vertices[0][0].clone()),
            2 => {
                let mut total = Rat::zero();
                for f in self.compact_facets() {
                    let on: Vec<&Vec<Rat>> = self
                        .vertices
                        .iter()
                        .filter(|v| f.normal.dot_rat(v) == f.offset)
                        .collect();
                    if on.len() != 2 {
                        return Err(EngineError::Internal(format!(
                            "2d compact facet carries {} vertices",
                            on.len()
                        )));
                    }
                    let det = &on[0][0] * &on[1][1] - &on[0][1] * &on[1][0];
                    let half = Rat::new(BigInt::from(1), BigInt::from(2));
                    total += Rat::from_integer(det.numer().clone()).abs()
                        / Rat::from_integer(det.denom().clone())
                        * half;
                }
                Ok(total)
            }
            3 => {
                let mut total = Rat::zero();
                for f in self.compact_facets() {
                    let on: Vec<Vec<Rat>> = self
                        .vertices
                        .iter()
                        .filter(|v| f.normal.dot_rat(v) == f.offset)
                        .cloned()
                        .collect();
                    if on.len() < 3 {
                        return Err(EngineError::Internal(
                            "3d compact facet with fewer than 3 vertices".into(),
                        ));
                    }
                    let ring = sort_polygon_cyclically(&on, &f.normal)?;
                    for k in 1..ring.len() - 1 {
                        let d = det3(&ring[0], &ring[k], &ring[k + 1]);
                        let sixth = Rat::new(BigInt::from(1), BigInt::from(6));
                        total += d.abs() * sixth;
                    }
                }
                Ok(total)
            }
            _ => unreachable!(),
        }
    }
}

fn det3(a: &[Rat], b: &[Rat], c: &[Rat]) -> Rat {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

/// Orders the vertices of a convex planar polygon cyclically, exactly: drop
/// the coordinate with the largest normal entry and sort by angle around the
/// centroid in the projection.
fn sort_polygon_cyclically(points: &[Vec<Rat>], normal: &WeightVec) -> Result<Vec<Vec<Rat>>> {
    let drop = normal
        .coords()
        .iter()
        .enumerate()
        .max_by_key(|(_, &c)| c)
        .map(|(i, _)| i)
        .unwrap();
    let proj = |p: &Vec<Rat>| -> (Rat, Rat) {
        let kept: Vec<&Rat> = p
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, x)| x)
            .collect();
        (kept[0].clone(), kept[1].clone())
    };
    let k = Rat::from_integer(BigInt::from(points.len() as i64));
    let mut cx = Rat::zero();
    let mut cy = Rat::zero();
    for p in points {
        let (x, y) = proj(p);
        cx += x;
        cy += y;
    }
    cx /= k.clone();
    cy /= k;

    let mut keyed: Vec<(usize, (Rat, Rat))> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let (x, y) = proj(p);
            (i, (x - &cx, y - &cy))
        })
        .collect();
    let half = |(dx, dy): &(Rat, Rat)| -> u8 {
        if dy > &Rat::zero() || (dy.is_zero() && dx > &Rat::zero()) {
            0
        } else {
            1
        }
    };
    keyed.sort_by(|(_, a), (_, b)| {
        half(a).cmp(&half(b)).then_with(|| {
            // cross(a, b) > 0 means a comes before b counterclockwise.
            let cross = &a.0 * &b.1 - &a.1 * &b.0;
            if cross.is_positive() {
                std::cmp::Ordering::Less
            } else if cross.is_negative() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        })
    });
    Ok(keyed.into_iter().map(|(i, _)| points[i].clone()).collect())
}

/// Convenience: the polyhedron of an ideal (spec operation `newton_polyhedron`).
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::from_ideal(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ideal(dim: usize, coords: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(dim, &coords.iter().map(|c| c.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn w(coords: &[i64]) -> WeightVec {
        WeightVec::new(coords.to_vec()).unwrap()
    }

    fn compact_list(p: &NewtonPolyhedron) -> Vec<(Vec<i64>, Rat)> {
        p.compact_facets()
            .iter()
            .map(|f| (f.normal.coords().to_vec(), f.offset.clone()))
            .collect()
    }

    #[test]
    fn simple_staircase_polygon() {
        let p = newton_polyhedron(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(compact_list(&p), vec![(vec![3, 2], rat_int(6))]);
        assert_eq!(p.vertices().len(), 2);
    }

    #[test]
    fn one_dimensional_ideal() {
        let p = newton_polyhedron(&ideal(1, &[&[5]])).unwrap();
        assert_eq!(p.facets().len(), 1);
        assert_eq!(p.facets()[0].offset, rat_int(5));
    }

    #[test]
    fn interior_generator_is_not_a_vertex() {
        // (2,3) lies in conv{(4,0),(0,5)} + orthant (5*2+4*3 = 22 >= 20),
        // so the polygon has exactly one compact facet 5x+4y >= 20.
        let p = newton_polyhedron(&ideal(2, &[&[4, 0], &[2, 3], &[0, 5]])).unwrap();
        assert_eq!(compact_list(&p), vec![(vec![5, 4], rat_int(20))]);
        assert_eq!(p.vertices().len(), 2);
    }

    #[test]
    fn two_edge_polygon() {
        let p = newton_polyhedron(&ideal(2, &[&[5, 0], &[2, 3], &[0, 7]])).unwrap();
        assert_eq!(
            compact_list(&p),
            vec![(vec![1, 1], rat_int(5)), (vec![2, 1], rat_int(7))]
        );
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn noncompact_facets_constrain_membership() {
        let p = newton_polyhedron(&ideal(2, &[&[2, 1], &[1, 3]])).unwrap();
        // x >= 1 and y >= 1 are genuine facets here.
        assert!(!p.member(&[rat_int(0), rat_int(5)]).unwrap());
        assert!(!p.vrep_member(&[rat_int(0), rat_int(5)]).unwrap());
        assert!(p.member(&[rat_int(1), rat_int(3)]).unwrap());
    }

    #[test]
    fn membership_examples() {
        let p = newton_polyhedron(&ideal(2, &[&[4, 0], &[2, 3], &[0, 5]])).unwrap();
        // (1,4): 5+16 = 21 >= 20, a member (and by the vertex oracle too).
        assert!(p.member(&[rat_int(1), rat_int(4)]).unwrap());
        assert!(p.vrep_member(&[rat_int(1), rat_int(4)]).unwrap());
        assert!(!p.member(&[rat_int(1), rat_int(3)]).unwrap());
        assert!(!p.vrep_member(&[rat_int(1), rat_int(3)]).unwrap());
        // Generators are members.
        assert!(p.member(&[rat_int(2), rat_int(3)]).unwrap());
    }

    #[test]
    fn minkowski_sum_vertices_and_additivity() {
        let p = newton_polyhedron(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        let q = newton_polyhedron(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        let s = p.minkowski_sum(&q).unwrap();
        let verts: Vec<Vec<i64>> = s
            .vertices()
            .iter()
            .map(|v| v.iter().map(|x| x.to_integer().try_into().unwrap()).collect())
            .collect();
        assert_eq!(verts, vec![vec![0, 4], vec![2, 1], vec![3, 0]]);
        let u = w(&[1, 1]);
        assert_eq!(
            s.support(&u).unwrap(),
            p.support(&u).unwrap() + q.support(&u).unwrap()
        );
    }

    #[test]
    fn scale_identity_and_support() {
        let p = newton_polyhedron(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        let s1 = p.scale(&rat_int(1)).unwrap();
        assert_eq!(p, s1);
        let s = p.scale(&rat(3, 2)).unwrap();
        assert_eq!(s.support(&w(&[3, 2])).unwrap(), rat_int(9));
        assert!(p.scale(&rat_int(0)).is_err());
    }

    #[test]
    fn covolume_examples() {
        let p = newton_polyhedron(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(p.covolume().unwrap(), rat_int(3));
        let m = newton_polyhedron(&MonomialIdeal::maximal(2)).unwrap();
        assert_eq!(m.covolume().unwrap(), rat(1, 2));
        let prod = newton_polyhedron(&ideal(2, &[&[3, 0], &[2, 1], &[1, 3], &[0, 4]])).unwrap();
        assert_eq!(prod.covolume().unwrap(), rat(11, 2));
    }

    #[test]
    fn covolume_3d_simplex() {
        // (x,y,z): complement is the unit corner simplex, volume 1/6.
        let m = newton_polyhedron(&MonomialIdeal::maximal(3)).unwrap();
        assert_eq!(m.covolume().unwrap(), rat(1, 6));
        // Diagonal (x^2,y^3,z^4): volume 2*3*4/6 = 4.
        let d = newton_polyhedron(&MonomialIdeal::diagonal(&[2, 3, 4]).unwrap()).unwrap();
        assert_eq!(d.covolume().unwrap(), rat_int(4));
    }

    #[test]
    fn covolume_rejects_unbounded() {
        let p = newton_polyhedron(&ideal(2, &[&[2, 1], &[1, 3]])).unwrap();
        assert!(matches!(p.covolume(), Err(EngineError::NotMPrimary(_))));
    }

    #[test]
    fn facet_dimension_is_full() {
        // Every facet carries dim affinely independent points once recession
        // directions with zero normal coordinate are included.
        let cases: Vec<(usize, Vec<Vec<i64>>)> = vec![
            (2, vec![vec![4, 0], vec![2, 3], vec![0, 5]]),
            (2, vec![vec![2, 1], vec![1, 3]]),
            (2, vec![vec![5, 0], vec![2, 3], vec![0, 7]]),
            (3, vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4], vec![1, 1, 1]]),
            (3, vec![vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 2]]),
            (
                4,
                vec![
                    vec![2, 0, 0, 0],
                    vec![0, 3, 0, 0],
                    vec![0, 0, 2, 0],
                    vec![0, 0, 0, 3],
                    vec![1, 1, 1, 1],
                ],
            ),
        ];
        for (dim, gens) in cases {
            let i = MonomialIdeal::from_coords(dim, &gens).unwrap();
            let p = newton_polyhedron(&i).unwrap();
            assert!(!p.facets().is_empty());
            for f in p.facets() {
                let mut on: Vec<Vec<Rat>> = p
                    .vertices()
                    .iter()
                    .filter(|v| f.normal.dot_rat(v) == f.offset)
                    .cloned()
                    .collect();
                assert!(!on.is_empty(), "facet offset not attained by a vertex");
                let base = on[0].clone();
                for (i, &c) in f.normal.coords().iter().enumerate() {
                    if c == 0 {
                        let mut shifted = base.clone();
                        shifted[i] += Rat::from_integer(BigInt::from(1));
                        on.push(shifted);
                    }
                }
                assert_eq!(affine_rank(&on), p.dim(), "facet is not (n-1)-dimensional");
            }
        }
    }

    #[test]
    fn four_dimensional_membership_cross_check() {
        // Random-ish 4D ideal: H-rep and V-rep membership must agree on a
        // grid of integer points.
        let i = MonomialIdeal::from_coords(
            4,
            &[
                vec![3, 0, 0, 0],
                vec![0, 2, 0, 0],
                vec![0, 0, 3, 0],
                vec![0, 0, 0, 2],
                vec![1, 1, 0, 1],
                vec![0, 1, 2, 0],
            ],
        )
        .unwrap();
        let p = newton_polyhedron(&i).unwrap();
        for a in 0..3i64 {
            for b in 0..3i64 {
                for c in 0..3i64 {
                    for d in 0..3i64 {
                        let pt = vec![rat_int(a), rat_int(b), rat_int(c), rat_int(d)];
                        assert_eq!(
                            p.member(&pt).unwrap(),
                            p.vrep_member(&pt).unwrap(),
                            "disagreement at {pt:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic_facet_order() {
        let gens = vec![vec![5i64, 0], vec![2, 3], vec![0, 7]];
        let a = newton_polyhedron(&MonomialIdeal::from_coords(2, &gens).unwrap()).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let b = newton_polyhedron(&MonomialIdeal::from_coords(2, &rev).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_dim_5() {
        let i = MonomialIdeal::maximal(5);
        assert!(matches!(
            newton_polyhedron(&i),
            Err(EngineError::UnsupportedDimension(5))
        ));
    }
}
