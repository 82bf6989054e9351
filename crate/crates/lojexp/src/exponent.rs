//! Lojasiewicz exponents via the facet finite-max formula, log canonical
//! thresholds via the facet minimum with a diagonal oracle, the Theta
//! invariant with its rigidity classification, and the executable sharpness
//! construction.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{EngineError, Result};
use crate::filtration::{candidate_rays_2d, FiltrationSpec};
use crate::ideal::MonomialIdeal;
use crate::lattice::{ExpVec, WeightVec};
use crate::polyhedron::NewtonPolyhedron;
use crate::rat::{rat_floor, rat_int, Rat};
use crate::simplex::{solve_lp, LpOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LojValue {
    Finite(Rat),
    Infinite,
}

impl LojValue {
    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            LojValue::Finite(r) => Some(r),
            LojValue::Infinite => None,
        }
    }
}

/// Whether the reported maximum is known to equal the exponent or is only a
/// valuative lower bound (non-Power filtration pairs in dimension >= 3,
/// where a common fan refinement is not constructed).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    LowerBoundOnly,
}

#[derive(Debug, Clone)]
pub struct LojResult {
    pub value: LojValue,
    pub maximizer_set: Vec<WeightVec>,
    /// (u, v_u(a), v_u(b), ratio) for every candidate with v_u(b) > 0.
    pub per_candidate: Vec<(WeightVec, Rat, Rat, Rat)>,
    pub exactness: Exactness,
}

impl LojResult {
    fn from_candidates(
        entries: Vec<(WeightVec, Rat, Rat)>,
        infinite: Vec<WeightVec>,
        exactness: Exactness,
    ) -> Result<Self> {
        if !infinite.is_empty() {
            return Ok(LojResult {
                value: LojValue::Infinite,
                maximizer_set: infinite,
                per_candidate: entries
                    .into_iter()
                    .map(|(u, va, vb)| {
                        let ratio = &va / &vb;
                        (u, va, vb, ratio)
                    })
                    .collect(),
                exactness,
            });
        }
        if entries.is_empty() {
            return Err(EngineError::Internal("empty candidate set".into()));
        }
        let per_candidate: Vec<(WeightVec, Rat, Rat, Rat)> = entries
            .into_iter()
            .map(|(u, va, vb)| {
                let ratio = &va / &vb;
                (u, va, vb, ratio)
            })
            .collect();
        let best = per_candidate
            .iter()
            .map(|(_, _, _, r)| r.clone())
            .max()
            .unwrap();
        let maximizer_set = per_candidate
            .iter()
            .filter(|(_, _, _, r)| *r == best)
            .map(|(u, _, _, _)| u.clone())
            .collect();
        Ok(LojResult {
            value: LojValue::Finite(best),
            maximizer_set,
            per_candidate,
            exactness,
        })
    }
}

/// Loj_b(a) = max over compact facet normals u of NP(a) of h_a(u)/h_b(u).
pub fn loj_ideal(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<LojResult> {
    if a.dim() != b.dim() {
        return Err(EngineError::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if !a.is_m_primary() {
        return Err(EngineError::NotMPrimary(format!("{a}")));
    }
    let np = NewtonPolyhedron::from_ideal(a)?;
    let mut entries = Vec::new();
    for f in np.compact_facets() {
        let va = f.offset.clone();
        let vb = b.support(&f.normal)?;
        // A proper monomial ideal has positive support at strictly positive
        // weights; facet normals of an m-primary polyhedron are strictly
        // positive.
        assert!(
            vb.is_positive(),
            "proper ideal with vanishing support at {}",
            f.normal
        );
        entries.push((f.normal.clone(), va, vb));
    }
    LojResult::from_candidates(entries, Vec::new(), Exactness::Exact)
}

/// Loj for filtration pairs. Power/Power delegates to the ideal formula in
/// any supported dimension; otherwise the candidate set is the union of both
/// regions' breakpoint rays and the coordinate rays, which is a common fan
/// refinement in the plane (exact) and a lower bound in dimension >= 3.
pub fn loj_filtration(a: &FiltrationSpec, b: &FiltrationSpec) -> Result<LojResult> {
    if a.dim() != b.dim() {
        return Err(EngineError::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if let (FiltrationSpec::Power(ia), FiltrationSpec::Power(ib)) = (a, b) {
        return loj_ideal(ia, ib);
    }
    let dim = a.dim();
    let rays = candidate_rays_2d(a, b)?;
    if rays.is_empty() {
        return Err(EngineError::Internal("empty candidate set".into()));
    }
    let mut entries = Vec::new();
    let mut infinite = Vec::new();
    for u in rays {
        let va = a.value(&u)?;
        let vb = b.value(&u)?;
        if vb.is_zero() {
            if va.is_positive() {
                infinite.push(u);
            }
            // 0/0 rays impose no constraint: both support functions vanish
            // on the ray, so the ratio on the two adjacent cones is carried
            // by their other boundary rays.
        } else {
            entries.push((u, va, vb));
        }
    }
    let exactness = if dim <= 2 {
        Exactness::Exact
    } else {
        Exactness::LowerBoundOnly
    };
    LojResult::from_candidates(entries, infinite, exactness)
}

/// lct of an m-primary monomial ideal: min over compact facets (u, c) of
/// NP(I) of A(u)/c with A(u) the coordinate sum.
pub fn lct_ideal(ideal: &MonomialIdeal) -> Result<Rat> {
    if !ideal.is_m_primary() {
        return Err(EngineError::NotMPrimary(format!("{ideal}")));
    }
    let np = NewtonPolyhedron::from_ideal(ideal)?;
    lct_from_facets(
        np.compact_facets()
            .into_iter()
            .map(|f| (f.normal.clone(), f.offset.clone())),
    )
}

/// lct of a filtration's asymptotic region.
pub fn lct_filtration(spec: &FiltrationSpec) -> Result<Rat> {
    if !spec.is_m_primary() {
        return Err(EngineError::NotMPrimary(
            "asymptotic region has unbounded complement".into(),
        ));
    }
    lct_from_facets(spec.positive_facets()?.into_iter())
}

fn lct_from_facets(facets: impl Iterator<Item = (WeightVec, Rat)>) -> Result<Rat> {
    let mut best: Option<Rat> = None;
    for (u, c) in facets {
        if !c.is_positive() {
            continue;
        }
        let ratio = rat_int(u.log_discrepancy()) / c;
        if best.as_ref().map(|b| ratio < *b).unwrap_or(true) {
            best = Some(ratio);
        }
    }
    best.ok_or_else(|| EngineError::NotMPrimary("region has no positive-offset facet".into()))
}

/// Independent diagonal oracle: lct = max { t : (1/t)(1,...,1) in region }.
/// For polyhedral regions the entry scale is computed by an exact linear
/// program over the vertex description (no facet data involved); for
/// LinearForms regions it is read off the constraints directly.
pub fn lct_diagonal_oracle(spec: &FiltrationSpec) -> Result<Rat> {
    if !spec.is_m_primary() {
        return Err(EngineError::NotMPrimary(
            "asymptotic region has unbounded complement".into(),
        ));
    }
    match spec.region()? {
        Some(np) => {
            // Minimize s subject to sum lambda_v v <= s*(1,..,1),
            // sum lambda = 1, lambda >= 0.
            let verts = np.vertices();
            let n = np.dim();
            let nv = verts.len();
            // Variables: lambda (nv), slack (n), s (1).
            let cols = nv + n + 1;
            let mut a = vec![vec![Rat::zero(); cols]; n + 1];
            let mut b = vec![Rat::zero(); n + 1];
            for i in 0..n {
                for (j, v) in verts.iter().enumerate() {
                    a[i][j] = v[i].clone();
                }
                a[i][nv + i] = rat_int(1);
                a[i][nv + n] = -rat_int(1);
            }
            for x in a[n].iter_mut().take(nv) {
                *x = rat_int(1);
            }
            b[n] = rat_int(1);
            let mut costs = vec![Rat::zero(); cols];
            costs[nv + n] = rat_int(1);
            match solve_lp(&a, &b, &costs) {
                LpOutcome::Optimal { value, .. } => {
                    if !value.is_positive() {
                        return Err(EngineError::Internal(
                            "diagonal entry scale must be positive for proper ideals".into(),
                        ));
                    }
                    Ok(rat_int(1) / value)
                }
                other => Err(EngineError::Internal(format!(
                    "diagonal oracle LP failed: {other:?}"
                ))),
            }
        }
        None => {
            // (1/t)(1,...,1) satisfies <w, x> >= c iff t <= A(w)/c; the
            // region is the raw constraint set, so the max over t is the min
            // of A(w)/c over all stated constraints.
            let FiltrationSpec::LinearForms { constraints, .. } = spec else {
                unreachable!("polyhedral kinds return a region");
            };
            lct_from_facets(constraints.iter().cloned())
        }
    }
}

#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub lct: Rat,
    pub loj_m: Rat,
    pub theta: Rat,
    pub rigid: bool,
    pub diagonal_facet: Option<(WeightVec, Rat)>,
}

/// Theta(I) = lct(I) * Loj_m(I) / d, with the rigidity flag: a single
/// diagonal facet normal attaining both extrema.
pub fn theta(ideal: &MonomialIdeal) -> Result<ThetaReport> {
    let d = ideal.dim();
    let lct = lct_ideal(ideal)?;
    let loj = loj_ideal(ideal, &MonomialIdeal::maximal(d))?;
    let loj_m = loj
        .value
        .as_finite()
        .expect("m-primary ideal has finite exponent")
        .clone();
    let theta = &lct * &loj_m / rat_int(d as i64);

    let np = NewtonPolyhedron::from_ideal(ideal)?;
    let diagonal_facet = np
        .compact_facets()
        .into_iter()
        .find(|f| f.normal.is_diagonal())
        .map(|f| (f.normal.clone(), f.offset.clone()));
    let rigid = match &diagonal_facet {
        Some((u, c)) => {
            let attains_lct = rat_int(u.log_discrepancy()) / c == lct;
            let attains_loj = c / rat_int(u.min_coord()) == loj_m;
            attains_lct && attains_loj
        }
        None => false,
    };
    debug_assert!(theta >= rat_int(1));
    debug_assert_eq!(rigid, theta == rat_int(1));
    Ok(ThetaReport {
        lct,
        loj_m,
        theta,
        rigid,
        diagonal_facet,
    })
}

/// Output of the sharpness construction: data (N, p, q) and a witness
/// monomial y^q such that every valuation in V satisfies
/// v(m^q) >= v(J_N^p) for J_N = closure((x^N, y^{N^2})), yet y^q violates
/// the facet x/N + y/N^2 >= p of NP(J_N^p).
#[derive(Debug, Clone)]
pub struct SharpnessWitness {
    pub n_param: i64,
    pub m_param: i64,
    pub p: i64,
    pub q: i64,
    pub witness: ExpVec,
    /// Per valuation: (v, v(m^q), v(J_N^p)); check (1) is the inequality
    /// v(m^q) >= v(J_N^p) for all rows.
    pub valuation_rows: Vec<(WeightVec, Rat, Rat)>,
    pub check_valuations: bool,
    /// (q/N^2, p); check (2) is the strict inequality q/N^2 < p.
    pub witness_values: (Rat, Rat),
    pub check_witness_violates: bool,
}

/// Executable construction showing no fixed finite valuation set tests all
/// containments m^q in closure(J_N^p): N = floor(max a_v/b_v) + 2,
/// M = max ceil(a_v/min(a_v,b_v)), p = 1, q = pNM.
pub fn sharpness_witness(valuations: &[WeightVec]) -> Result<SharpnessWitness> {
    if valuations.is_empty() {
        return Err(EngineError::InvalidInput(
            "sharpness construction needs at least one valuation".into(),
        ));
    }
    for v in valuations {
        if v.dim() != 2 {
            return Err(EngineError::DimensionMismatch {
                expected: 2,
                got: v.dim(),
            });
        }
        if !v.strictly_positive() {
            return Err(EngineError::InvalidInput(format!(
                "valuation {v} must have strictly positive weights"
            )));
        }
    }
    let ratio = |v: &WeightVec| -> Rat {
        rat_int(v.coords()[0]) / rat_int(v.coords()[1])
    };
    let max_ratio = valuations.iter().map(ratio).max().unwrap();
    let n_param: i64 = (rat_floor(&max_ratio) + BigInt::from(2))
        .try_into()
        .map_err(|_| EngineError::Internal("N exceeds i64".into()))?;
    let m_param: i64 = valuations
        .iter()
        .map(|v| {
            let a = rat_int(v.coords()[0]);
            let mn = rat_int(v.min_coord());
            let r = a / mn;
            let c = r.ceil().to_integer();
            i64::try_from(c).unwrap()
        })
        .max()
        .unwrap();
    let p = 1i64;
    let q = p * n_param * m_param;

    let mut valuation_rows = Vec::new();
    let mut check_valuations = true;
    for v in valuations {
        let a = rat_int(v.coords()[0]);
        let b = rat_int(v.coords()[1]);
        // N b > a guarantees v(J_N) = min(N a, N^2 b) = N a.
        if rat_int(n_param) * &b <= a {
            return Err(EngineError::Internal(
                "N fails the strict slope bound".into(),
            ));
        }
        let v_mq = rat_int(q) * rat_int(v.min_coord());
        let v_jnp = rat_int(p) * rat_int(n_param) * &a;
        if v_mq < v_jnp {
            check_valuations = false;
        }
        valuation_rows.push((v.clone(), v_mq, v_jnp));
    }

    let n2 = rat_int(n_param) * rat_int(n_param);
    let witness_scaled = rat_int(q) / n2;
    let check_witness_violates = witness_scaled < rat_int(p);
    Ok(SharpnessWitness {
        n_param,
        m_param,
        p,
        q,
        witness: ExpVec::new(vec![0, q])?,
        valuation_rows,
        check_valuations,
        witness_values: (witness_scaled, rat_int(p)),
        check_witness_violates,
    })
}

impl SharpnessWitness {
    /// The constructed ideal closure((x^N, y^{N^2})) as a monomial ideal.
    pub fn constructed_ideal(&self) -> Result<MonomialIdeal> {
        let base = MonomialIdeal::from_coords(
            2,
            &[vec![self.n_param, 0], vec![0, self.n_param * self.n_param]],
        )?;
        crate::closure::closure_generators(&base)
    }
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

    fn finite(res: &LojResult) -> Rat {
        res.value.as_finite().expect("finite").clone()
    }

    #[test]
    fn diagonal_ideal_exponent_is_max() {
        let a = MonomialIdeal::diagonal(&[2, 7, 3]).unwrap();
        let m = MonomialIdeal::maximal(3);
        let res = loj_ideal(&a, &m).unwrap();
        assert_eq!(finite(&res), rat_int(7));
    }

    #[test]
    fn two_edge_example_value_seven() {
        let a = ideal(2, &[&[5, 0], &[2, 3], &[0, 7]]);
        let m = MonomialIdeal::maximal(2);
        let res = loj_ideal(&a, &m).unwrap();
        assert_eq!(finite(&res), rat_int(7));
        assert_eq!(res.maximizer_set, vec![w(&[2, 1])]);
    }

    #[test]
    fn collapsed_polygon_value_five() {
        // (2,3) is interior to conv{(4,0),(0,5)}+orthant, so the single
        // facet (5,4) computes the exponent: 20/4 = 5.
        let a = ideal(2, &[&[4, 0], &[2, 3], &[0, 5]]);
        let m = MonomialIdeal::maximal(2);
        let res = loj_ideal(&a, &m).unwrap();
        assert_eq!(finite(&res), rat_int(5));
        assert_eq!(res.maximizer_set, vec![w(&[5, 4])]);
    }

    #[test]
    fn loj_requires_m_primary() {
        let a = ideal(2, &[&[1, 0]]);
        let m = MonomialIdeal::maximal(2);
        assert!(matches!(loj_ideal(&a, &m), Err(EngineError::NotMPrimary(_))));
    }

    #[test]
    fn filtration_pair_six_fifths() {
        let a = FiltrationSpec::linear(2, vec![(w(&[1, 2]), rat_int(3))]).unwrap();
        let b = FiltrationSpec::linear(2, vec![(w(&[2, 1]), rat_int(5))]).unwrap();
        let res = loj_filtration(&a, &b).unwrap();
        assert_eq!(finite(&res), rat(6, 5));
        assert_eq!(res.maximizer_set, vec![w(&[1, 2])]);
        assert_eq!(res.exactness, Exactness::Exact);
    }

    #[test]
    fn filtration_power_consistency() {
        let i = ideal(2, &[&[4, 0], &[2, 3], &[0, 5]]);
        let m = MonomialIdeal::maximal(2);
        let by_ideal = loj_ideal(&i, &m).unwrap();
        let by_filtration = loj_filtration(
            &FiltrationSpec::Power(i.clone()),
            &FiltrationSpec::Power(m.clone()),
        )
        .unwrap();
        assert_eq!(finite(&by_ideal), finite(&by_filtration));
        // One-factor product against Power(m) through the ray path.
        let prod = FiltrationSpec::product(vec![(i, rat_int(1))]).unwrap();
        let by_rays = loj_filtration(&prod, &FiltrationSpec::Power(m)).unwrap();
        assert_eq!(finite(&by_ideal), finite(&by_rays));
    }

    #[test]
    fn non_m_primary_power_pair_is_infinite() {
        // a = (x): no power of m ever lands in closure(a^p).
        let a = FiltrationSpec::product(vec![(ideal(2, &[&[1, 0]]), rat_int(1))]).unwrap();
        let b = FiltrationSpec::Power(MonomialIdeal::maximal(2));
        let res = loj_filtration(&a, &b).unwrap();
        assert_eq!(res.value, LojValue::Infinite);
        assert_eq!(res.maximizer_set, vec![w(&[1, 0])]);
    }

    #[test]
    fn lct_values() {
        for d in 1..=4usize {
            assert_eq!(lct_ideal(&MonomialIdeal::maximal(d)).unwrap(), rat_int(d as i64));
        }
        assert_eq!(lct_ideal(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap(), rat(5, 6));
        // m^k has the single facet ((1,..,1), k).
        let mk = MonomialIdeal::maximal(3).power(4).unwrap();
        assert_eq!(lct_ideal(&mk).unwrap(), rat(3, 4));
    }

    #[test]
    fn lct_diagonal_oracle_agrees() {
        for i in [
            MonomialIdeal::maximal(2),
            ideal(2, &[&[2, 0], &[0, 3]]),
            ideal(2, &[&[4, 0], &[2, 3], &[0, 5]]),
            MonomialIdeal::maximal(3).power(2).unwrap(),
            MonomialIdeal::diagonal(&[2, 3, 4]).unwrap(),
        ] {
            let spec = FiltrationSpec::Power(i.clone());
            assert_eq!(
                lct_ideal(&i).unwrap(),
                lct_diagonal_oracle(&spec).unwrap(),
                "diagonal oracle disagrees for {i}"
            );
        }
        // LinearForms region i + 2j >= 3: lct = (1+2)/3 = 1.
        let a = FiltrationSpec::linear(2, vec![(w(&[1, 2]), rat_int(3))]).unwrap();
        assert_eq!(lct_filtration(&a).unwrap(), rat_int(1));
        assert_eq!(lct_diagonal_oracle(&a).unwrap(), rat_int(1));
    }

    #[test]
    fn lct_requires_bounded_complement() {
        assert!(matches!(
            lct_ideal(&ideal(2, &[&[1, 0]])),
            Err(EngineError::NotMPrimary(_))
        ));
    }

    #[test]
    fn theta_reports() {
        // m^k: rigid with the diagonal facet ((1,1), k).
        let mk = MonomialIdeal::maximal(2).power(3).unwrap();
        let r = theta(&mk).unwrap();
        assert_eq!(r.theta, rat_int(1));
        assert!(r.rigid);
        let (u, c) = r.diagonal_facet.unwrap();
        assert_eq!(u.coords(), &[1, 1]);
        assert_eq!(c, rat_int(3));

        let r = theta(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(r.theta, rat(5, 4));
        assert!(!r.rigid);
        assert_eq!(r.lct, rat(5, 6));
        assert_eq!(r.loj_m, rat_int(3));

        let r = theta(&ideal(2, &[&[3, 0], &[0, 3]])).unwrap();
        assert_eq!(r.theta, rat_int(1));
        assert!(r.rigid);
    }

    #[test]
    fn sharpness_examples() {
        let s = sharpness_witness(&[w(&[1, 1])]).unwrap();
        assert_eq!((s.n_param, s.p, s.q), (3, 1, 3));
        assert!(s.check_valuations && s.check_witness_violates);
        assert_eq!(s.witness_values.0, rat(1, 3));

        let s = sharpness_witness(&[w(&[1, 2])]).unwrap();
        assert_eq!((s.n_param, s.p, s.q), (2, 1, 2));
        assert!(s.check_valuations && s.check_witness_violates);
        assert_eq!(s.witness_values.0, rat(1, 2));

        assert!(sharpness_witness(&[w(&[1, 0])]).is_err());
        assert!(sharpness_witness(&[]).is_err());
    }

    #[test]
    fn sharpness_witness_against_real_ideal() {
        let s = sharpness_witness(&[w(&[1, 1]), w(&[3, 2])]).unwrap();
        let jn = s.constructed_ideal().unwrap();
        let np = NewtonPolyhedron::from_ideal(&jn).unwrap();
        // y^q is in m^q but escapes closure(J_N^p).
        let scaled = np.scale(&rat_int(s.p)).unwrap();
        let point = s.witness.to_rat_point();
        assert!(!scaled.member(&point).unwrap());
    }
}
