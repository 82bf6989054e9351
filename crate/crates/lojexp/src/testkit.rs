//! Seeded randomized property checks. The integration suite and the CLI
//! `selftest` subcommand run the same functions; a fixed seed reproduces a
//! run bit-for-bit.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closure::{closure_generators, contains_closure, power_oracle_member};
use crate::exponent::{
    lct_diagonal_oracle, lct_filtration, lct_ideal, loj_filtration, loj_ideal, sharpness_witness,
    theta,
};
use crate::families::{analyze, FamilyCandidate, FamilySpec};
use crate::filtration::FiltrationSpec;
use crate::ideal::MonomialIdeal;
use crate::lattice::{ExpVec, WeightVec};
use crate::multiplicity::{colength, hs_multiplicity, mixed_multiplicities};
use crate::polyhedron::NewtonPolyhedron;
use crate::rat::{rat, rat_int, Rat};

pub type Check = std::result::Result<(), String>;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_m_primary_ideal(rng: &mut ChaCha8Rng, dim: usize, max_exp: i64) -> MonomialIdeal {
    let mut gens: Vec<ExpVec> = (0..dim)
        .map(|i| ExpVec::axis(dim, i, rng.gen_range(1..=max_exp)))
        .collect();
    let extra = rng.gen_range(0..=dim + 1);
    for _ in 0..extra {
        let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=max_exp)).collect();
        if coords.iter().all(|&c| c == 0) {
            continue;
        }
        gens.push(ExpVec::new(coords).unwrap());
    }
    MonomialIdeal::new(gens).expect("nonempty generator set")
}

pub fn random_proper_ideal(rng: &mut ChaCha8Rng, dim: usize, max_exp: i64) -> MonomialIdeal {
    if rng.gen_bool(0.5) {
        return random_m_primary_ideal(rng, dim, max_exp);
    }
    let count = rng.gen_range(1..=dim + 1);
    let mut gens = Vec::new();
    for _ in 0..count {
        let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=max_exp)).collect();
        if coords.iter().all(|&c| c == 0) {
            continue;
        }
        gens.push(ExpVec::new(coords).unwrap());
    }
    if gens.is_empty() {
        gens.push(ExpVec::axis(dim, 0, 1));
    }
    MonomialIdeal::new(gens).expect("nonempty generator set")
}

pub fn random_point(rng: &mut ChaCha8Rng, dim: usize, max_num: i64) -> Vec<Rat> {
    (0..dim)
        .map(|_| rat(rng.gen_range(0..=max_num), rng.gen_range(1..=4)))
        .collect()
}

pub fn random_weight(rng: &mut ChaCha8Rng, dim: usize, max: i64) -> WeightVec {
    loop {
        let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(1..=max)).collect();
        if let Ok(w) = WeightVec::new(coords) {
            return w;
        }
    }
}

pub fn random_family_spec(rng: &mut ChaCha8Rng, max_candidates: usize) -> FamilySpec {
    let count = rng.gen_range(1..=max_candidates);
    let mut candidates = Vec::new();
    for k in 0..count {
        // Affine data positive at both endpoints of [0,1].
        let (a0, a1) = positive_affine(rng);
        let (b0, b1) = positive_affine(rng);
        candidates.push(FamilyCandidate {
            label: crate::families::CandidateLabel::Name(format!("c{k}")),
            a0,
            a1,
            b0,
            b1,
        });
    }
    FamilySpec::new(candidates).expect("endpoint-positive data")
}

fn positive_affine(rng: &mut ChaCha8Rng) -> (Rat, Rat) {
    loop {
        let c0 = rat(rng.gen_range(1..=12), rng.gen_range(1..=3));
        let c1 = rat(rng.gen_range(-6..=9), rng.gen_range(1..=3));
        if (c0.clone() + c1.clone()).is_positive() {
            return (c0, c1);
        }
    }
}

/// H-representation membership agrees with the vertex-description linear
/// feasibility oracle on random rational points.
pub fn prop_hrep_vrep_agreement(rng: &mut ChaCha8Rng, ideals: usize, points: usize) -> Check {
    for k in 0..ideals {
        let dim = if k % 2 == 0 { 2 } else { 3 };
        let ideal = random_proper_ideal(rng, dim, 6);
        let np = NewtonPolyhedron::from_ideal(&ideal).map_err(|e| e.to_string())?;
        for _ in 0..points {
            let p = random_point(rng, dim, 9);
            let h = np.member(&p).map_err(|e| e.to_string())?;
            let v = np.vrep_member(&p).map_err(|e| e.to_string())?;
            if h != v {
                return Err(format!(
                    "facet membership {h} but vertex oracle {v} for {p:?} in {ideal}"
                ));
            }
        }
    }
    Ok(())
}

pub fn prop_closure_idempotent(rng: &mut ChaCha8Rng, ideals: usize) -> Check {
    for k in 0..ideals {
        let dim = if k % 2 == 0 { 2 } else { 3 };
        let ideal = random_proper_ideal(rng, dim, 5);
        let once = closure_generators(&ideal).map_err(|e| e.to_string())?;
        let twice = closure_generators(&once).map_err(|e| e.to_string())?;
        if once != twice {
            return Err(format!("closure not idempotent on {ideal}"));
        }
    }
    Ok(())
}

/// power_oracle membership matches facet membership on every lattice point
/// of the generator bounding box.
pub fn prop_power_oracle_equivalence(rng: &mut ChaCha8Rng, ideals: usize) -> Check {
    for _ in 0..ideals {
        let ideal = random_proper_ideal(rng, 2, 5);
        let np = NewtonPolyhedron::from_ideal(&ideal).map_err(|e| e.to_string())?;
        let bounds = ideal.coord_maxima();
        for x in 0..=bounds[0] {
            for y in 0..=bounds[1] {
                let m = ExpVec::new(vec![x, y]).unwrap();
                let (by_oracle, _) = power_oracle_member(&ideal, &m).map_err(|e| e.to_string())?;
                let by_facets = np.member(&m.to_rat_point()).map_err(|e| e.to_string())?;
                if by_oracle != by_facets {
                    return Err(format!(
                        "power oracle {by_oracle} vs facets {by_facets} at {m:?} in {ideal}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Support additivity h_{IJ} = h_I + h_J on the facet normals of both
/// factors, and scaling h_{I^p} = p h_I for p <= 5.
pub fn prop_support_additivity_scaling(rng: &mut ChaCha8Rng, pairs: usize) -> Check {
    for k in 0..pairs {
        let dim = if k % 2 == 0 { 2 } else { 3 };
        let a = random_proper_ideal(rng, dim, 5);
        let b = random_proper_ideal(rng, dim, 5);
        let ab = a.product(&b).map_err(|e| e.to_string())?;
        let np_a = NewtonPolyhedron::from_ideal(&a).map_err(|e| e.to_string())?;
        let np_b = NewtonPolyhedron::from_ideal(&b).map_err(|e| e.to_string())?;
        let mut normals: Vec<WeightVec> = Vec::new();
        normals.extend(np_a.facets().iter().map(|f| f.normal.clone()));
        normals.extend(np_b.facets().iter().map(|f| f.normal.clone()));
        for u in &normals {
            let lhs = ab.support(u).map_err(|e| e.to_string())?;
            let rhs =
                a.support(u).map_err(|e| e.to_string())? + b.support(u).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("additivity fails at {u} for {a} * {b}"));
            }
        }
        let mut power = a.clone();
        for p in 2..=5u32 {
            power = power.product(&a).map_err(|e| e.to_string())?;
            for u in normals.iter().take(3) {
                let lhs = power.support(u).map_err(|e| e.to_string())?;
                let rhs = a.support(u).map_err(|e| e.to_string())? * rat_int(p as i64);
                if lhs != rhs {
                    return Err(format!("scaling fails at {u} for {a}^{p}"));
                }
            }
        }
    }
    Ok(())
}

/// Loj depends only on integral closures.
pub fn prop_loj_closure_invariance(rng: &mut ChaCha8Rng, pairs: usize) -> Check {
    for _ in 0..pairs {
        let a = random_m_primary_ideal(rng, 2, 5);
        let b = random_proper_ideal(rng, 2, 4);
        let direct = loj_ideal(&a, &b).map_err(|e| e.to_string())?;
        let closed = loj_ideal(
            &closure_generators(&a).map_err(|e| e.to_string())?,
            &closure_generators(&b).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        if direct.value != closed.value {
            return Err(format!("closure changes the exponent for ({a}, {b})"));
        }
    }
    Ok(())
}

/// Every monomial valuation ratio is dominated by the facet maximum.
pub fn prop_valuative_lower_bound(rng: &mut ChaCha8Rng, pairs: usize, weights: usize) -> Check {
    for k in 0..pairs {
        let dim = if k % 2 == 0 { 2 } else { 3 };
        let a = random_m_primary_ideal(rng, dim, 5);
        let b = random_proper_ideal(rng, dim, 4);
        let res = loj_ideal(&a, &b).map_err(|e| e.to_string())?;
        let value = res.value.as_finite().expect("m-primary").clone();
        for _ in 0..weights {
            let u = random_weight(rng, dim, 9);
            let va = a.support(&u).map_err(|e| e.to_string())?;
            let vb = b.support(&u).map_err(|e| e.to_string())?;
            if vb.is_zero() {
                continue;
            }
            if va / vb.clone() > value {
                return Err(format!("ratio at {u} exceeds the facet maximum for ({a}, {b})"));
            }
        }
    }
    Ok(())
}

/// The brute-force containment threshold equals ceil(p * Loj).
pub fn prop_containment_oracle_agreement(rng: &mut ChaCha8Rng, pairs: usize) -> Check {
    for _ in 0..pairs {
        let a = random_m_primary_ideal(rng, 2, 5);
        let b = random_proper_ideal(rng, 2, 3);
        let value = loj_ideal(&a, &b)
            .map_err(|e| e.to_string())?
            .value
            .as_finite()
            .expect("m-primary")
            .clone();
        for p in 1..=6u32 {
            let expected = (value.clone() * rat_int(p as i64)).ceil().to_integer();
            let expected: u32 = expected.try_into().map_err(|_| "threshold overflow")?;
            let expected = expected.max(1);
            let mut q = 1u32;
            let q_min = loop {
                if contains_closure(&b, q, &a, p).map_err(|e| e.to_string())?.member {
                    break q;
                }
                q += 1;
                if q > 64 {
                    return Err(format!("no containment below the cap for ({a}, {b}), p={p}"));
                }
            };
            if q_min != expected {
                return Err(format!(
                    "threshold {q_min} but ceil(p*Loj) = {expected} for ({a}, {b}), p={p}"
                ));
            }
        }
    }
    Ok(())
}

/// Filtration property: containment at q implies containment at q+1 for
/// b inside the maximal ideal.
pub fn prop_containment_monotonicity(rng: &mut ChaCha8Rng, pairs: usize) -> Check {
    for _ in 0..pairs {
        let a = random_m_primary_ideal(rng, 2, 4);
        let b = random_proper_ideal(rng, 2, 3);
        for p in 1..=2u32 {
            let mut prev = false;
            for q in 1..=12u32 {
                let now = contains_closure(&b, q, &a, p).map_err(|e| e.to_string())?.member;
                if prev && !now {
                    return Err(format!("containment not monotone for ({a}, {b}), p={p}, q={q}"));
                }
                prev = now;
            }
        }
    }
    Ok(())
}

/// Random m-primary filtration spec (Power, LinearForms, or Product).
pub fn random_m_primary_filtration(rng: &mut ChaCha8Rng, dim: usize) -> FiltrationSpec {
    match rng.gen_range(0..3) {
        0 => FiltrationSpec::Power(random_m_primary_ideal(rng, dim, 5)),
        1 => {
            let count = rng.gen_range(1..=2);
            let constraints = (0..count)
                .map(|_| {
                    (
                        random_weight(rng, dim, 5),
                        rat(rng.gen_range(1..=9), rng.gen_range(1..=2)),
                    )
                })
                .collect();
            FiltrationSpec::linear(dim, constraints).expect("positive constraints")
        }
        _ => {
            let count = rng.gen_range(1..=2);
            let factors = (0..count)
                .map(|_| {
                    (
                        random_m_primary_ideal(rng, dim, 4),
                        rat(rng.gen_range(1..=4), rng.gen_range(1..=2)),
                    )
                })
                .collect();
            FiltrationSpec::product(factors).expect("positive weights")
        }
    }
}

/// Sharp dual bound for filtration pairs in the plane:
/// lct(a) * Loj_b(a) >= lct(b).
pub fn prop_lct_loj_dual_bound(rng: &mut ChaCha8Rng, pairs: usize) -> Check {
    for _ in 0..pairs {
        let a = random_m_primary_filtration(rng, 2);
        let b = random_m_primary_filtration(rng, 2);
        let lct_a = lct_filtration(&a).map_err(|e| e.to_string())?;
        let lct_b = lct_filtration(&b).map_err(|e| e.to_string())?;
        let res = loj_filtration(&a, &b).map_err(|e| e.to_string())?;
        let value = res
            .value
            .as_finite()
            .ok_or("m-primary pair with infinite exponent")?
            .clone();
        if lct_a * value < lct_b {
            return Err(format!("dual bound fails for a 2d filtration pair ({a:?}, {b:?})"));
        }
    }
    Ok(())
}

/// Theta >= 1, with equality exactly at the diagonal-facet criterion.
pub fn prop_theta_ge_one(rng: &mut ChaCha8Rng, ideals: usize) -> Check {
    let one = rat_int(1);
    for k in 0..ideals {
        let dim = if k % 2 == 0 { 2 } else { 3 };
        let ideal = random_m_primary_ideal(rng, dim, 5);
        let report = theta(&ideal).map_err(|e| e.to_string())?;
        if report.theta < one {
            return Err(format!("Theta({ideal}) = {} < 1", report.theta));
        }
        let diagonal_criterion = report
            .diagonal_facet
            .as_ref()
            .map(|(u, c)| {
                rat_int(u.log_discrepancy()) / c == report.lct && c / rat_int(u.min_coord()) == report.loj_m
            })
            .unwrap_or(false);
        if (report.theta == one) != diagonal_criterion {
            return Err(format!(
                "Theta = 1 and the diagonal-facet criterion disagree for {ideal}"
            ));
        }
        if report.rigid != (report.theta == one) {
            return Err(format!("rigidity flag inconsistent for {ideal}"));
        }
    }
    Ok(())
}

/// lct via facets equals the diagonal-entry oracle.
pub fn prop_lct_diagonal_agreement(rng: &mut ChaCha8Rng, ideals: usize) -> Check {
    for k in 0..ideals {
        let dim = if k % 2 == 0 { 2 } else { 3 };
        let ideal = random_m_primary_ideal(rng, dim, 5);
        let by_facets = lct_ideal(&ideal).map_err(|e| e.to_string())?;
        let by_diagonal =
            lct_diagonal_oracle(&FiltrationSpec::Power(ideal.clone())).map_err(|e| e.to_string())?;
        if by_facets != by_diagonal {
            return Err(format!(
                "lct facets {by_facets} vs diagonal {by_diagonal} for {ideal}"
            ));
        }
    }
    Ok(())
}

/// Chamber structure: constant maximizer per chamber, continuity at walls,
/// and the chamber formula matching the pointwise maximum at samples.
pub fn prop_chamber_structure(rng: &mut ChaCha8Rng, specs: usize) -> Check {
    for _ in 0..specs {
        let spec = random_family_spec(rng, 6);
        let report = analyze(&spec).map_err(|e| e.to_string())?;
        if !report.l_continuous {
            return Err("L discontinuous across a wall".into());
        }
        for ch in &report.chambers {
            // Five rational samples inside the chamber: blend toward both
            // ends from the exact interior sample.
            let mut samples = vec![ch.sample.clone()];
            for k in 1..=2 {
                let w = rat(k, 3);
                let lo_blend = blend(&ch.lo, &ch.sample, &w);
                let hi_blend = blend(&ch.hi, &ch.sample, &w);
                samples.push(lo_blend);
                samples.push(hi_blend);
            }
            let formula = &spec.candidates()[ch.formula];
            for t in samples {
                let (value, argmax) = spec.l_at(&t);
                if argmax != ch.maximizer_set {
                    return Err(format!("maximizer set changes inside a chamber at t={t}"));
                }
                let f_val = (&formula.a0 + &formula.a1 * &t) / (&formula.b0 + &formula.b1 * &t);
                if f_val != value {
                    return Err(format!("chamber formula mismatch at t={t}"));
                }
            }
        }
        // Strict gap at a chamber sample persists on the whole chamber.
        for ch in &report.chambers {
            if ch.maximizer_set.len() == 1 {
                let (lo, hi) =
                    crate::families::stability_neighborhood(&spec, &ch.sample).map_err(|e| e.to_string())?;
                if lo != ch.lo || hi != ch.hi {
                    return Err("stability neighborhood is not the enclosing chamber".into());
                }
            }
        }
        // Global affineness of 1/L forces one candidate to attain the
        // maximum at every sampled parameter.
        if report.inv_l_affine {
            let mut common: Vec<usize> = report.chambers[0].maximizer_set.clone();
            for ch in &report.chambers[1..] {
                common.retain(|i| ch.maximizer_set.contains(i));
            }
            let persistent = common.first().copied().ok_or("affine 1/L without a persistent maximizer")?;
            for k in 0..=6 {
                let t = rat(k, 6);
                let (_, argmax) = spec.l_at(&t);
                if !argmax.contains(&persistent) {
                    return Err(format!("persistent maximizer drops out at t = {t}"));
                }
            }
        }
    }
    Ok(())
}

/// Rational point at fraction w between an algebraic bound and a rational.
fn blend(bound: &crate::algnum::Alg, sample: &Rat, w: &Rat) -> Rat {
    match bound.as_rational() {
        Some(b) => b * w + sample * (rat_int(1) - w),
        None => {
            // Use a rational strictly between bound and sample, then blend.
            let side = crate::algnum::rational_between(
                &std::cmp::min(bound.clone(), crate::algnum::Alg::rational(sample.clone())),
                &std::cmp::max(bound.clone(), crate::algnum::Alg::rational(sample.clone())),
            );
            &side * w + sample * (rat_int(1) - w)
        }
    }
}

/// The sharpness construction: valuation checks pass and the witness
/// escapes the constructed closure.
pub fn prop_sharpness(rng: &mut ChaCha8Rng, sets: usize) -> Check {
    for _ in 0..sets {
        let count = rng.gen_range(1..=4);
        let vals: Vec<WeightVec> = (0..count).map(|_| random_weight(rng, 2, 9)).collect();
        let s = sharpness_witness(&vals).map_err(|e| e.to_string())?;
        if !s.check_valuations || !s.check_witness_violates {
            return Err(format!("sharpness checks fail for {vals:?}"));
        }
        let jn = s.constructed_ideal().map_err(|e| e.to_string())?;
        let np = NewtonPolyhedron::from_ideal(&jn).map_err(|e| e.to_string())?;
        let scaled = np.scale(&rat_int(s.p)).map_err(|e| e.to_string())?;
        if scaled
            .member(&s.witness.to_rat_point())
            .map_err(|e| e.to_string())?
        {
            return Err(format!("witness fails to escape the closure for {vals:?}"));
        }
    }
    Ok(())
}

/// Log-convexity of the mixed multiplicity sequence on random 2D pairs,
/// with the middle entry pinned by the product-multiplicity identity
/// e(IJ) = sum C(d,i) e_i (covolume route, independent of the grid).
pub fn prop_mixed_log_convexity(rng: &mut ChaCha8Rng, pairs: usize) -> Check {
    for _ in 0..pairs {
        let i = random_m_primary_ideal(rng, 2, 4);
        let j = random_m_primary_ideal(rng, 2, 4);
        let t = mixed_multiplicities(&i, &j, None).map_err(|e| e.to_string())?;
        for k in 1..t.dim {
            let lhs = (t.e[k] as u128).pow(2);
            let rhs = t.e[k - 1] as u128 * t.e[k + 1] as u128;
            if lhs > rhs {
                return Err(format!("log-convexity fails for ({i}, {j}): {:?}", t.e));
            }
        }
        let product = i.product(&j).map_err(|e| e.to_string())?;
        let e_prod = hs_multiplicity(&product).map_err(|e| e.to_string())? as u128;
        let binom_sum = t.e[0] as u128 + 2 * t.e[1] as u128 + t.e[2] as u128;
        if binom_sum != e_prod {
            return Err(format!(
                "binomial identity fails for ({i}, {j}): {binom_sum} vs {e_prod}"
            ));
        }
    }
    Ok(())
}

/// Containment implies the mixed-multiplicity bound, with the threshold
/// found exhaustively.
pub fn prop_containment_mixed_bound(rng: &mut ChaCha8Rng, pairs: usize) -> Check {
    let m = MonomialIdeal::maximal(2);
    for _ in 0..pairs {
        let i = random_m_primary_ideal(rng, 2, 4);
        let j = random_m_primary_ideal(rng, 2, 4);
        let ti = mixed_multiplicities(&i, &m, None).map_err(|e| e.to_string())?;
        let tj = mixed_multiplicities(&j, &m, None).map_err(|e| e.to_string())?;
        for p in 1..=3u32 {
            let mut q = 1u32;
            let q_min = loop {
                if contains_closure(&j, q, &i, p).map_err(|e| e.to_string())?.member {
                    break q;
                }
                q += 1;
                if q > 128 {
                    return Err(format!("no containment below 128 for ({i}, {j})"));
                }
            };
            for idx in 1..=2usize {
                let lhs = BigInt::from(q_min).pow(idx as u32) * BigInt::from(tj.e[idx]);
                let rhs = BigInt::from(p).pow(idx as u32) * BigInt::from(ti.e[idx]);
                if lhs < rhs {
                    return Err(format!(
                        "containment bound fails at i={idx} for ({i}, {j}), p={p}, q={q_min}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Pure-entry consistency: colength(I^n) has exact second difference e(I)
/// in the polynomial tail (n <= 12), certifying 2 colength(I^n)/n^2 -> e.
pub fn prop_colength_asymptotics(rng: &mut ChaCha8Rng, ideals: usize) -> Check {
    for _ in 0..ideals {
        let ideal = random_m_primary_ideal(rng, 2, 4);
        let e = hs_multiplicity(&ideal).map_err(|e| e.to_string())?;
        let mut values = Vec::new();
        let mut acc: Option<MonomialIdeal> = None;
        for _ in 1..=12 {
            acc = Some(match acc {
                None => ideal.clone(),
                Some(prev) => prev.product(&ideal).map_err(|e| e.to_string())?,
            });
            values.push(colength(acc.as_ref().unwrap()).map_err(|e| e.to_string())? as i128);
        }
        for n in 8..=9usize {
            let second = values[n + 1] - 2 * values[n] + values[n - 1];
            if second != e as i128 {
                return Err(format!(
                    "second difference {second} differs from e = {e} for {ideal} at n = {}",
                    n + 1
                ));
            }
        }
    }
    Ok(())
}

/// One full pass over every suite, sized for the acceptance run.
pub fn run_all(seed: u64) -> Vec<(&'static str, Check)> {
    let mut results = Vec::new();
    macro_rules! suite {
        ($name:literal, $body:expr) => {
            let mut rng = rng_from_seed(seed ^ const_hash($name));
            #[allow(clippy::redundant_closure_call)]
            results.push(($name, ($body)(&mut rng)));
        };
    }
    suite!("hrep_vrep_agreement", |r: &mut ChaCha8Rng| {
        prop_hrep_vrep_agreement(r, 200, 5)
    });
    suite!("closure_idempotence", |r: &mut ChaCha8Rng| {
        prop_closure_idempotent(r, 200)
    });
    suite!("power_oracle_equivalence", |r: &mut ChaCha8Rng| {
        prop_power_oracle_equivalence(r, 100)
    });
    suite!("support_additivity_scaling", |r: &mut ChaCha8Rng| {
        prop_support_additivity_scaling(r, 100)
    });
    suite!("loj_closure_invariance", |r: &mut ChaCha8Rng| {
        prop_loj_closure_invariance(r, 100)
    });
    suite!("valuative_lower_bound", |r: &mut ChaCha8Rng| {
        prop_valuative_lower_bound(r, 100, 10)
    });
    suite!("containment_oracle_agreement", |r: &mut ChaCha8Rng| {
        prop_containment_oracle_agreement(r, 100)
    });
    suite!("containment_monotonicity", |r: &mut ChaCha8Rng| {
        prop_containment_monotonicity(r, 100)
    });
    suite!("theta_ge_one", |r: &mut ChaCha8Rng| prop_theta_ge_one(r, 200));
    suite!("lct_diagonal_agreement", |r: &mut ChaCha8Rng| {
        prop_lct_diagonal_agreement(r, 100)
    });
    suite!("lct_loj_dual_bound", |r: &mut ChaCha8Rng| {
        prop_lct_loj_dual_bound(r, 100)
    });
    suite!("chamber_structure", |r: &mut ChaCha8Rng| {
        prop_chamber_structure(r, 200)
    });
    suite!("sharpness_construction", |r: &mut ChaCha8Rng| {
        prop_sharpness(r, 100)
    });
    suite!("mixed_log_convexity", |r: &mut ChaCha8Rng| {
        prop_mixed_log_convexity(r, 50)
    });
    suite!("containment_mixed_bound", |r: &mut ChaCha8Rng| {
        prop_containment_mixed_bound(r, 50)
    });
    suite!("colength_asymptotics", |r: &mut ChaCha8Rng| {
        prop_colength_asymptotics(r, 25)
    });
    results
}

/// Stable tiny string hash for per-suite seed derivation.
fn const_hash(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}
