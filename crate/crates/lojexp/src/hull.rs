//! Exact incremental (beneath-beyond) convex hull over rational points,
//! guaranteed for ambient dimension <= 4.
//!
//! Facets are kept simplicial during construction and merged by supporting
//! hyperplane at the end. Normals are primitive integer vectors oriented
//! inward (every hull point x satisfies <w, x> >= c).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{EngineError, Result};
use crate::rat::Rat;

#[derive(Debug, Clone)]
pub struct HullFacet {
    /// Primitive integer inward normal.
    pub normal: Vec<BigInt>,
    /// <normal, x> >= offset for every hull point; equality on the facet.
    pub offset: Rat,
}

#[derive(Debug, Clone)]
struct Simplex {
    verts: Vec<usize>,
    normal: Vec<BigInt>,
    offset: Rat,
}

fn dot_big(w: &[BigInt], x: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (wi, xi) in w.iter().zip(x) {
        acc += xi * Rat::from_integer(wi.clone());
    }
    acc
}

fn det_rat(m: &[Vec<Rat>]) -> Rat {
    match m.len() {
        0 => Rat::from_integer(BigInt::from(1)),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        3 => {
            let a = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
            let b = &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0]);
            let c = &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
            a - b + c
        }
        _ => {
            // Laplace expansion along the first row; matrices here are at
            // most 4x4.
            let n = m.len();
            let mut acc = Rat::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Rat>> = (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&k| k != j)
                            .map(|k| m[i][k].clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det_rat(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Primitive integer vector proportional to a rational one (sign preserved).
fn to_primitive_int(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.iter().map(|x| x / &g).collect()
}

/// Hyperplane through the n points `verts`, oriented so `keep` satisfies
/// <w, keep> > offset. Returns None when the points are affinely dependent
/// or `keep` lies on the plane.
fn hyperplane(points: &[Vec<Rat>], verts: &[usize], keep: &[Rat]) -> Option<(Vec<BigInt>, Rat)> {
    let n = points[verts[0]].len();
    debug_assert_eq!(verts.len(), n);
    let base = &points[verts[0]];
    let diffs: Vec<Vec<Rat>> = verts[1..]
        .iter()
        .map(|&v| {
            points[v]
                .iter()
                .zip(base)
                .map(|(a, b)| a - b)
                .collect::<Vec<Rat>>()
        })
        .collect();
    // Generalized cross product: w_j = (-1)^j det(diffs with column j removed).
    let mut w = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<Rat>> = diffs
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let d = det_rat(&minor);
        w.push(if j % 2 == 0 { d } else { -d });
    }
    if w.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut wi = to_primitive_int(&w);
    let mut offset = dot_big(&wi, base);
    let side = dot_big(&wi, keep);
    if side == offset {
        return None;
    }
    if side < offset {
        for x in wi.iter_mut() {
            *x = -x.clone();
        }
        offset = -offset;
    }
    Some((wi, offset))
}

/// Affine rank of a point set (dimension of the affine hull plus one is the
/// number of affinely independent points found).
pub fn affine_rank(points: &[Vec<Rat>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let base = &points[0];
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for p in &points[1..] {
        let mut v: Vec<Rat> = p.iter().zip(base).map(|(a, b)| a - b).collect();
        // Reduce against current rows.
        for row in &rows {
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = &v[lead] / &row[lead];
                for (vi, ri) in v.iter_mut().zip(row) {
                    let delta = &f * ri;
                    *vi -= delta;
                }
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            rows.push(v);
        }
    }
    rows.len() + 1
}

/// Facets of the convex hull of a full-dimensional point set.
pub fn convex_hull_facets(points: &[Vec<Rat>]) -> Result<Vec<HullFacet>> {
    let n = points.first().map(|p| p.len()).unwrap_or(0);
    if n == 0 || points.is_empty() {
        return Err(EngineError::EmptyGenerators);
    }
    if n > 4 {
        return Err(EngineError::UnsupportedDimension(n));
    }

    // Greedy initial simplex: n+1 affinely independent points.
    let mut simplex_ids: Vec<usize> = vec![0];
    for (i, _) in points.iter().enumerate().skip(1) {
        if simplex_ids.len() == n + 1 {
            break;
        }
        let mut trial: Vec<Vec<Rat>> = simplex_ids.iter().map(|&k| points[k].clone()).collect();
        trial.push(points[i].clone());
        if affine_rank(&trial) == trial.len() {
            simplex_ids.push(i);
        }
    }
    if simplex_ids.len() < n + 1 {
        return Err(EngineError::Internal(
            "hull input is not full-dimensional".into(),
        ));
    }

    let mut facets: Vec<Simplex> = Vec::new();
    for drop in 0..=n {
        let verts: Vec<usize> = simplex_ids
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != drop)
            .map(|(_, &v)| v)
            .collect();
        let keep = &points[simplex_ids[drop]];
        let (normal, offset) = hyperplane(points, &verts, keep)
            .ok_or_else(|| EngineError::Internal("degenerate initial simplex facet".into()))?;
        facets.push(Simplex {
            verts,
            normal,
            offset,
        });
    }

    for (p_id, p) in points.iter().enumerate() {
        if simplex_ids.contains(&p_id) {
            continue;
        }
        let visible: Vec<usize> = (0..facets.len())
            .filter(|&f| dot_big(&facets[f].normal, p) < facets[f].offset)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let is_visible = |f: usize| visible.contains(&f);

        // Ridge -> incident facets. Boundary of a polytope is ridge-2-regular.
        let mut ridges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (f_id, f) in facets.iter().enumerate() {
            for drop in 0..f.verts.len() {
                let mut r: Vec<usize> = f
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != drop)
                    .map(|(_, &v)| v)
                    .collect();
                r.sort_unstable();
                ridges.entry(r).or_default().push(f_id);
            }
        }

        let mut new_facets: Vec<Simplex> = Vec::new();
        for (ridge, incident) in &ridges {
            if incident.len() != 2 {
                return Err(EngineError::Internal(format!(
                    "ridge incident to {} facets",
                    incident.len()
                )));
            }
            let (a, b) = (incident[0], incident[1]);
            let horizon = is_visible(a) ^ is_visible(b);
            if !horizon {
                continue;
            }
            let vis = if is_visible(a) { a } else { b };
            // The vertex of the visible facet not on the ridge is strictly
            // off the new plane (p is strictly beneath the visible facet),
            // so it fixes the orientation.
            let keep_id = *facets[vis]
                .verts
                .iter()
                .find(|v| !ridge.contains(v))
                .expect("visible facet has a vertex off its ridge");
            let mut verts = ridge.clone();
            verts.push(p_id);
            let (normal, offset) = hyperplane(points, &verts, &points[keep_id])
                .ok_or_else(|| EngineError::Internal("degenerate horizon facet".into()))?;
            verts.sort_unstable();
            new_facets.push(Simplex {
                verts,
                normal,
                offset,
            });
        }

        let mut kept: Vec<Simplex> = facets
            .drain(..)
            .enumerate()
            .filter(|(f_id, _)| !is_visible(*f_id))
            .map(|(_, f)| f)
            .collect();
        kept.extend(new_facets);
        facets = kept;
    }

    // Merge coplanar simplicial facets.
    let mut merged: BTreeMap<(Vec<BigInt>, Rat), ()> = BTreeMap::new();
    for f in &facets {
        merged.entry((f.normal.clone(), f.offset.clone())).or_insert(());
    }
    Ok(merged
        .into_keys()
        .map(|(normal, offset)| HullFacet { normal, offset })
        .collect())
}
