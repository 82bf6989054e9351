//! Newton nondegeneracy at infinity for plane polynomial maps, and the
//! finite-minimum evaluator for exponents at infinity over divisor-order
//! tables.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{EngineError, Result};
use crate::lattice::{ExpVec, WeightVec};
use crate::poly::Poly;
use crate::polyhedron::NewtonPolyhedron;
use crate::rat::{rat_int, Rat};

/// A polynomial map F = (f_1, ..., f_r): each component a finite support
/// map exponent -> nonzero rational coefficient.
#[derive(Debug, Clone)]
pub struct PolyMap {
    n: usize,
    components: Vec<Vec<(ExpVec, Rat)>>,
}

impl PolyMap {
    pub fn new(n: usize, components: Vec<Vec<(ExpVec, Rat)>>) -> Result<Self> {
        if components.is_empty() {
            return Err(EngineError::InvalidInput(
                "polynomial map needs at least one component".into(),
            ));
        }
        for comp in &components {
            if comp.is_empty() {
                return Err(EngineError::InvalidInput(
                    "zero component in polynomial map".into(),
                ));
            }
            for (e, c) in comp {
                if e.dim() != n {
                    return Err(EngineError::DimensionMismatch {
                        expected: n,
                        got: e.dim(),
                    });
                }
                if c.is_zero() {
                    return Err(EngineError::InvalidInput(
                        "zero coefficient in support".into(),
                    ));
                }
            }
        }
        Ok(PolyMap { n, components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Vec<(ExpVec, Rat)>] {
        &self.components
    }

    /// Swaps the two variables (n = 2).
    pub fn swapped(&self) -> Result<PolyMap> {
        if self.n != 2 {
            return Err(EngineError::UnsupportedDimension(self.n));
        }
        let components = self
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|(e, c)| {
                        let coords = vec![e.coord(1), e.coord(0)];
                        Ok((ExpVec::new(coords)?, c.clone()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(2, components)
    }
}

/// Gamma(F) = conv(union of supports and the origin) + orthant.
pub fn gamma_infinity(map: &PolyMap) -> Result<NewtonPolyhedron> {
    let mut points: Vec<Vec<Rat>> = vec![vec![Rat::zero(); map.n]];
    for comp in &map.components {
        for (e, _) in comp {
            points.push(e.to_rat_point());
        }
    }
    NewtonPolyhedron::from_rational_points(map.n, &points)
}

/// The w-face of a component: the terms minimizing <w, exponent>.
fn face_terms<'a>(comp: &'a [(ExpVec, Rat)], w: &WeightVec) -> Vec<&'a (ExpVec, Rat)> {
    let m = comp.iter().map(|(e, _)| w.dot_exp(e)).min().unwrap();
    comp.iter().filter(|(e, _)| w.dot_exp(e) == m).collect()
}

/// Writes a w-face (n = 2) as monomial * p(z) in the primitive edge
/// parameter z = x^{w2} y^{-w1}: exponents on the face line differ by
/// integer multiples of (w2, -w1).
fn face_to_univariate(face: &[&(ExpVec, Rat)], w: &WeightVec) -> Poly {
    let dir = (w.coords()[1], -w.coords()[0]);
    // Parameter of each exponent along the face direction.
    let raw: Vec<(i64, Rat)> = face
        .iter()
        .map(|(e, c)| {
            let k = if dir.0 != 0 {
                (e.coord(0) - face[0].0.coord(0)) / dir.0
            } else {
                (e.coord(1) - face[0].0.coord(1)) / dir.1
            };
            (k, c.clone())
        })
        .collect();
    let kmin = raw.iter().map(|(k, _)| *k).min().unwrap();
    let deg = raw.iter().map(|(k, _)| *k).max().unwrap() - kmin;
    let mut coeffs = vec![Rat::zero(); (deg + 1) as usize];
    for (k, c) in raw {
        coeffs[(k - kmin) as usize] += c;
    }
    Poly::new(coeffs)
}

/// Result of the nondegeneracy test: the offending weight and the face gcd
/// when a common torus zero exists.
#[derive(Debug, Clone)]
pub struct NondegeneracyReport {
    pub nondegenerate: bool,
    pub offending: Option<WeightVec>,
}

/// Newton nondegeneracy at infinity for n = 2: no weight w > 0 gives face
/// polynomials with a common zero in the torus. Candidate weights are the
/// positive edge normals of each component's support polyhedron plus one
/// interior representative per open cone between consecutive candidate
/// rays; a face that is a single monomial never vanishes on the torus, and
/// a common zero of the multi-term faces exists iff the gcd of their
/// dehomogenized edge polynomials is nonconstant.
pub fn nondegenerate_at_infinity(map: &PolyMap) -> Result<NondegeneracyReport> {
    if map.n != 2 {
        return Err(EngineError::UnsupportedDimension(map.n));
    }

    // Edge normals of each component's lower hull, restricted to w > 0.
    let mut edge_rays: BTreeSet<WeightVec> = BTreeSet::new();
    for comp in &map.components {
        if comp.len() < 2 {
            continue;
        }
        let pts: Vec<Vec<Rat>> = comp.iter().map(|(e, _)| e.to_rat_point()).collect();
        let np = NewtonPolyhedron::from_rational_points(2, &pts)?;
        for f in np.compact_facets() {
            edge_rays.insert(f.normal.clone());
        }
    }

    // One representative inside each open cone between consecutive rays
    // (sorted by slope), plus the flanks toward the coordinate axes.
    let mut sorted: Vec<WeightVec> = edge_rays.iter().cloned().collect();
    sorted.sort_by(|a, b| {
        // slope u2/u1 increasing: compare a2*b1 with b2*a1.
        let left = a.coords()[1] as i128 * b.coords()[0] as i128;
        let right = b.coords()[1] as i128 * a.coords()[0] as i128;
        left.cmp(&right)
    });
    let mut candidates: Vec<WeightVec> = sorted.clone();
    let x_axis = WeightVec::new(vec![1, 0])?;
    let y_axis = WeightVec::new(vec![0, 1])?;
    if sorted.is_empty() {
        candidates.push(WeightVec::new(vec![1, 1])?);
    } else {
        candidates.push(sorted[0].add(&x_axis)?);
        candidates.push(sorted[sorted.len() - 1].add(&y_axis)?);
        for pair in sorted.windows(2) {
            candidates.push(pair[0].add(&pair[1])?);
        }
    }

    for w in candidates {
        let faces: Vec<Vec<&(ExpVec, Rat)>> = map
            .components
            .iter()
            .map(|comp| face_terms(comp, &w))
            .collect();
        // Any single-monomial face already has no torus zero.
        if faces.iter().any(|f| f.len() == 1) {
            continue;
        }
        let mut gcd: Option<Poly> = None;
        for face in &faces {
            let p = face_to_univariate(face, &w).strip_variable_power();
            gcd = Some(match gcd {
                None => p,
                Some(g) => g.gcd(&p),
            });
        }
        let g = gcd.expect("at least one component");
        if g.degree().map(|d| d >= 1).unwrap_or(false) {
            return Ok(NondegeneracyReport {
                nondegenerate: false,
                offending: Some(w),
            });
        }
    }
    Ok(NondegeneracyReport {
        nondegenerate: true,
        offending: None,
    })
}

/// Divisor-order table on a fixed model: ord_E of the two boundary ideals.
#[derive(Debug, Clone)]
pub struct DivisorTable {
    pub rows: Vec<DivisorRow>,
}

#[derive(Debug, Clone)]
pub struct DivisorRow {
    pub label: String,
    pub ord_x: u64,
    pub ord_y: u64,
}

impl DivisorTable {
    pub fn new(rows: Vec<DivisorRow>) -> Result<Self> {
        if !rows.iter().any(|r| r.ord_x > 0) {
            return Err(EngineError::InvalidInput(
                "divisor table needs a row with ordX > 0".into(),
            ));
        }
        Ok(DivisorTable { rows })
    }
}

/// min over rows with ordX > 0 of ordY/ordX; exactly 0 when some such row
/// has ordY = 0.
pub fn loj_infinity_min(table: &DivisorTable) -> Result<Rat> {
    let mut best: Option<Rat> = None;
    for row in &table.rows {
        if row.ord_x == 0 {
            continue;
        }
        let ratio = rat_int(row.ord_y as i64) / rat_int(row.ord_x as i64);
        if best.as_ref().map(|b| ratio < *b).unwrap_or(true) {
            best = Some(ratio);
        }
    }
    best.ok_or_else(|| EngineError::InvalidInput("no row with ordX > 0".into()))
}

/// Local variant: restricts to rows whose label belongs to the
/// point-incidence set.
pub fn loj_infinity_min_local(table: &DivisorTable, labels: &[String]) -> Result<Rat> {
    let rows: Vec<DivisorRow> = table
        .rows
        .iter()
        .filter(|r| labels.contains(&r.label))
        .cloned()
        .collect();
    loj_infinity_min(&DivisorTable::new(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(coords: &[i64]) -> ExpVec {
        ExpVec::new(coords.to_vec()).unwrap()
    }

    fn map(components: &[&[(&[i64], i64)]]) -> PolyMap {
        PolyMap::new(
            2,
            components
                .iter()
                .map(|comp| {
                    comp.iter()
                        .map(|(exps, c)| (e(exps), rat_int(*c)))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn gamma_of_coordinates_is_the_orthant() {
        let f = map(&[&[(&[1, 0], 1)], &[(&[0, 1], 1)]]);
        let g = gamma_infinity(&f).unwrap();
        // Origin included: the polyhedron is the whole orthant, whose only
        // facets are the coordinate halfplanes at offset 0.
        assert!(g.compact_facets().is_empty());
        assert!(g
            .facets()
            .iter()
            .all(|f| f.offset == Rat::zero()));
    }

    #[test]
    fn gamma_single_component_hull() {
        let f = map(&[&[(&[2, 1], 1), (&[1, 3], 1)]]);
        let g = gamma_infinity(&f).unwrap();
        // conv{(0,0),(2,1),(1,3)} + orthant: with the origin included the
        // polyhedron is the whole orthant (the face data driving the
        // nondegeneracy test lives on the supports, not on Gamma).
        assert!(g.member(&[Rat::zero(), Rat::zero()]).unwrap());
        assert_eq!(g.vertices(), &[vec![Rat::zero(), Rat::zero()]]);
        assert!(g.facets().iter().all(|f| f.offset == Rat::zero()));
    }

    #[test]
    fn gamma_mixed_components_is_the_orthant() {
        // (x^2 + y, xy): supports {(2,0),(0,1)} and {(1,1)}, origin joined.
        let f = map(&[&[(&[2, 0], 1), (&[0, 1], 1)], &[(&[1, 1], 1)]]);
        let g = gamma_infinity(&f).unwrap();
        assert!(g.compact_facets().is_empty());
        assert!(g.member(&[Rat::zero(), Rat::zero()]).unwrap());
    }

    #[test]
    fn nondegeneracy_verdicts() {
        // (x, y): all faces are single monomials.
        let f = map(&[&[(&[1, 0], 1)], &[(&[0, 1], 1)]]);
        assert!(nondegenerate_at_infinity(&f).unwrap().nondegenerate);

        // (x+y, x+y): common face zero at w = (1,1).
        let f = map(&[
            &[(&[1, 0], 1), (&[0, 1], 1)],
            &[(&[1, 0], 1), (&[0, 1], 1)],
        ]);
        let rep = nondegenerate_at_infinity(&f).unwrap();
        assert!(!rep.nondegenerate);
        assert_eq!(rep.offending.unwrap().coords(), &[1, 1]);

        // (x+y, x-y): gcd(z+1, z-1) = 1.
        let f = map(&[
            &[(&[1, 0], 1), (&[0, 1], 1)],
            &[(&[1, 0], 1), (&[0, 1], -1)],
        ]);
        assert!(nondegenerate_at_infinity(&f).unwrap().nondegenerate);
    }

    #[test]
    fn nondegeneracy_invariant_under_swap() {
        let maps = [
            map(&[&[(&[2, 0], 1), (&[0, 1], 1)], &[(&[1, 1], 1)]]),
            map(&[
                &[(&[1, 0], 1), (&[0, 1], 1)],
                &[(&[1, 0], 1), (&[0, 1], 1)],
            ]),
            map(&[
                &[(&[3, 0], 1), (&[1, 1], -2), (&[0, 3], 1)],
                &[(&[2, 0], 1), (&[0, 2], -1)],
            ]),
        ];
        for f in maps {
            let direct = nondegenerate_at_infinity(&f).unwrap().nondegenerate;
            let swapped = nondegenerate_at_infinity(&f.swapped().unwrap())
                .unwrap()
                .nondegenerate;
            assert_eq!(direct, swapped);
        }
    }

    #[test]
    fn degenerate_face_zero_reverified_by_rational_roots() {
        // (x+y, x+y) at w=(1,1): faces give z+1 with root z = -1, nonzero,
        // hence a genuine torus zero.
        let f = map(&[
            &[(&[1, 0], 1), (&[0, 1], 1)],
            &[(&[1, 0], 1), (&[0, 1], 1)],
        ]);
        let rep = nondegenerate_at_infinity(&f).unwrap();
        let w = rep.offending.unwrap();
        for comp in f.components() {
            let face = face_terms(comp, &w);
            let p = face_to_univariate(&face, &w).strip_variable_power();
            let roots = p.rational_roots();
            assert!(roots.iter().any(|r| !r.is_zero()));
        }
    }

    #[test]
    fn nondegenerate_maps_have_no_common_rational_face_roots() {
        // Direct re-verification: for nondegenerate maps, no candidate edge
        // direction admits a shared nonzero rational root across all faces.
        let maps = [
            map(&[
                &[(&[1, 0], 1), (&[0, 1], 1)],
                &[(&[1, 0], 1), (&[0, 1], -1)],
            ]),
            map(&[
                &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)],
                &[(&[1, 0], 1), (&[0, 1], -3)],
            ]),
            map(&[&[(&[2, 1], 1), (&[1, 3], -1)], &[(&[1, 1], 5)]]),
        ];
        for f in maps {
            let rep = nondegenerate_at_infinity(&f).unwrap();
            assert!(rep.nondegenerate);
            // Rebuild the candidate edge normals and intersect root sets.
            let mut rays: BTreeSet<WeightVec> = BTreeSet::new();
            for comp in f.components() {
                if comp.len() < 2 {
                    continue;
                }
                let pts: Vec<Vec<Rat>> = comp.iter().map(|(e, _)| e.to_rat_point()).collect();
                let np = NewtonPolyhedron::from_rational_points(2, &pts).unwrap();
                for facet in np.compact_facets() {
                    rays.insert(facet.normal.clone());
                }
            }
            for w in rays {
                let mut common: Option<Vec<Rat>> = None;
                for comp in f.components() {
                    let face = face_terms(comp, &w);
                    if face.len() == 1 {
                        common = Some(Vec::new());
                        break;
                    }
                    let p = face_to_univariate(&face, &w).strip_variable_power();
                    let roots: Vec<Rat> = p
                        .rational_roots()
                        .into_iter()
                        .filter(|r| !r.is_zero())
                        .collect();
                    common = Some(match common {
                        None => roots,
                        Some(prev) => prev.into_iter().filter(|r| roots.contains(r)).collect(),
                    });
                }
                assert!(
                    common.map(|c| c.is_empty()).unwrap_or(true),
                    "common rational face root at {w}"
                );
            }
        }
    }

    #[test]
    fn infinity_min_values() {
        let t = DivisorTable::new(vec![
            DivisorRow { label: "E1".into(), ord_x: 2, ord_y: 3 },
            DivisorRow { label: "E2".into(), ord_x: 1, ord_y: 1 },
        ])
        .unwrap();
        assert_eq!(loj_infinity_min(&t).unwrap(), rat_int(1));

        let t = DivisorTable::new(vec![
            DivisorRow { label: "E1".into(), ord_x: 1, ord_y: 0 },
            DivisorRow { label: "E2".into(), ord_x: 1, ord_y: 5 },
        ])
        .unwrap();
        assert_eq!(loj_infinity_min(&t).unwrap(), Rat::zero());

        let t = DivisorTable::new(vec![DivisorRow {
            label: "E1".into(),
            ord_x: 1,
            ord_y: 5,
        }])
        .unwrap();
        assert_eq!(loj_infinity_min(&t).unwrap(), rat_int(5));

        assert!(DivisorTable::new(vec![DivisorRow {
            label: "E1".into(),
            ord_x: 0,
            ord_y: 5,
        }])
        .is_err());
    }

    #[test]
    fn infinity_min_monotone_and_scale_invariant() {
        let base = DivisorTable::new(vec![
            DivisorRow { label: "E1".into(), ord_x: 2, ord_y: 3 },
            DivisorRow { label: "E2".into(), ord_x: 3, ord_y: 1 },
        ])
        .unwrap();
        let v = loj_infinity_min(&base).unwrap();
        let bumped = DivisorTable::new(
            base.rows
                .iter()
                .map(|r| DivisorRow {
                    label: r.label.clone(),
                    ord_x: r.ord_x,
                    ord_y: r.ord_y + 1,
                })
                .collect(),
        )
        .unwrap();
        assert!(loj_infinity_min(&bumped).unwrap() >= v);
        let scaled = DivisorTable::new(
            base.rows
                .iter()
                .map(|r| DivisorRow {
                    label: r.label.clone(),
                    ord_x: r.ord_x * 7,
                    ord_y: r.ord_y * 7,
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(loj_infinity_min(&scaled).unwrap(), v);
    }

    #[test]
    fn local_variant_filters_rows() {
        let t = DivisorTable::new(vec![
            DivisorRow { label: "E1".into(), ord_x: 1, ord_y: 7 },
            DivisorRow { label: "E2".into(), ord_x: 1, ord_y: 2 },
        ])
        .unwrap();
        assert_eq!(
            loj_infinity_min_local(&t, &["E1".into()]).unwrap(),
            rat_int(7)
        );
    }
}
