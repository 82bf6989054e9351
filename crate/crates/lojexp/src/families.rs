//! One-parameter wall-chamber analysis on [0,1]: exact walls (rational or
//! quadratic-surd), chambers with constant maximizer sets, piecewise
//! fractional-linear 1/L, and rigidity detection.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::algnum::{eval_quadratic, quadratic_roots, rational_between, Alg};
use crate::error::{EngineError, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::WeightVec;
use crate::polyhedron::NewtonPolyhedron;
use crate::rat::{rat_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateLabel {
    Weight(WeightVec),
    Name(String),
}

impl std::fmt::Display for CandidateLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CandidateLabel::Weight(w) => write!(f, "{w}"),
            CandidateLabel::Name(s) => write!(f, "{s}"),
        }
    }
}

/// One candidate valuation with affine numerator and denominator data:
/// alpha(t) = a0 + a1 t, beta(t) = b0 + b1 t on [0,1].
#[derive(Debug, Clone)]
pub struct FamilyCandidate {
    pub label: CandidateLabel,
    pub a0: Rat,
    pub a1: Rat,
    pub b0: Rat,
    pub b1: Rat,
}

impl FamilyCandidate {
    fn alpha_at(&self, t: &Rat) -> Rat {
        &self.a0 + &self.a1 * t
    }
    fn beta_at(&self, t: &Rat) -> Rat {
        &self.b0 + &self.b1 * t
    }
    fn ratio_at(&self, t: &Rat) -> Rat {
        self.alpha_at(t) / self.beta_at(t)
    }
}

#[derive(Debug, Clone)]
pub struct FamilySpec {
    candidates: Vec<FamilyCandidate>,
}

impl FamilySpec {
    /// Validates positivity of all alpha and beta on [0,1] (affine functions
    /// positive at both endpoints are positive throughout).
    pub fn new(candidates: Vec<FamilyCandidate>) -> Result<Self> {
        if candidates.is_empty() {
            return Err(EngineError::InvalidInput(
                "family needs at least one candidate".into(),
            ));
        }
        let one = rat_int(1);
        let zero = rat_int(0);
        for c in &candidates {
            for (name, v0, v1) in [
                ("alpha", c.alpha_at(&zero), c.alpha_at(&one)),
                ("beta", c.beta_at(&zero), c.beta_at(&one)),
            ] {
                if !v0.is_positive() || !v1.is_positive() {
                    return Err(EngineError::InvalidInput(format!(
                        "candidate {} has nonpositive {name} on [0,1]",
                        c.label
                    )));
                }
            }
        }
        Ok(FamilySpec { candidates })
    }

    pub fn candidates(&self) -> &[FamilyCandidate] {
        &self.candidates
    }

    /// L(t) = max ratio and its argmax set, at an exact rational parameter.
    pub fn l_at(&self, t: &Rat) -> (Rat, Vec<usize>) {
        let ratios: Vec<Rat> = self.candidates.iter().map(|c| c.ratio_at(t)).collect();
        let best = ratios.iter().max().unwrap().clone();
        let argmax = ratios
            .iter()
            .enumerate()
            .filter(|(_, r)| **r == best)
            .map(|(i, _)| i)
            .collect();
        (best, argmax)
    }
}

/// h_ij(t) = alpha_i beta_j - alpha_j beta_i as quadratic coefficients
/// (A, B, C) with h = A t^2 + B t + C.
fn pair_polynomial(ci: &FamilyCandidate, cj: &FamilyCandidate) -> (Rat, Rat, Rat) {
    let a = &ci.a1 * &cj.b1 - &cj.a1 * &ci.b1;
    let b = &ci.a0 * &cj.b1 + &ci.a1 * &cj.b0 - &cj.a0 * &ci.b1 - &cj.a1 * &ci.b0;
    let c = &ci.a0 * &cj.b0 - &cj.a0 * &ci.b0;
    (a, b, c)
}

/// All crossing parameters in the open interval (0,1): real roots of every
/// nonzero pairwise h_ij, exact and deduplicated.
pub fn walls(spec: &FamilySpec) -> Result<Vec<Alg>> {
    let n = spec.candidates.len();
    let mut out: Vec<Alg> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b, c) = pair_polynomial(&spec.candidates[i], &spec.candidates[j]);
            if a.is_zero() && b.is_zero() && c.is_zero() {
                continue;
            }
            for root in quadratic_roots(&a, &b, &c) {
                if root.cmp_rat(&rat_int(0)) == Ordering::Greater
                    && root.cmp_rat(&rat_int(1)) == Ordering::Less
                {
                    out.push(root);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Chamber {
    pub lo: Alg,
    pub hi: Alg,
    /// A rational parameter strictly inside the chamber.
    pub sample: Rat,
    /// Indices into the spec's candidate list attaining the maximum.
    pub maximizer_set: Vec<usize>,
    /// The candidate index whose (alpha, beta) formula represents L here.
    pub formula: usize,
}

#[derive(Debug, Clone)]
pub struct ChamberReport {
    pub walls: Vec<Alg>,
    pub chambers: Vec<Chamber>,
    /// L extends continuously across every wall (exact equality of the
    /// adjacent formulas at the wall).
    pub l_continuous: bool,
    /// 1/L is a single affine function of t on all of [0,1].
    pub inv_l_affine: bool,
}

pub fn analyze(spec: &FamilySpec) -> Result<ChamberReport> {
    let walls = walls(spec)?;
    let mut bounds: Vec<Alg> = Vec::with_capacity(walls.len() + 2);
    bounds.push(Alg::rational(rat_int(0)));
    bounds.extend(walls.iter().cloned());
    bounds.push(Alg::rational(rat_int(1)));

    let mut chambers = Vec::new();
    for w in bounds.windows(2) {
        let (lo, hi) = (w[0].clone(), w[1].clone());
        let sample = match (lo.as_rational(), hi.as_rational()) {
            (Some(a), Some(b)) => (a + b) / rat_int(2),
            _ => rational_between(&lo, &hi),
        };
        let (_, maximizer_set) = spec.l_at(&sample);
        let formula = maximizer_set[0];
        chambers.push(Chamber {
            lo,
            hi,
            sample,
            maximizer_set,
            formula,
        });
    }

    // Continuity across each wall: the adjacent chambers' formulas agree at
    // the wall, i.e. h_{jk}(wall) = 0 evaluated exactly in Q(sqrt(d)).
    let mut l_continuous = true;
    for k in 0..walls.len() {
        let left = &spec.candidates[chambers[k].formula];
        let right = &spec.candidates[chambers[k + 1].formula];
        let (a, b, c) = pair_polynomial(left, right);
        let value = eval_quadratic(&a, &b, &c, &walls[k]);
        if value != Alg::rational(rat_int(0)) {
            l_continuous = false;
        }
    }

    // 1/L is globally affine iff some candidate maximizes on every chamber
    // and its beta/alpha is affine: alpha constant or proportional to beta.
    let mut common: Vec<usize> = chambers[0].maximizer_set.clone();
    for ch in &chambers[1..] {
        common.retain(|i| ch.maximizer_set.contains(i));
    }
    let inv_l_affine = common.iter().any(|&i| {
        let c = &spec.candidates[i];
        c.a1.is_zero() || (&c.a1 * &c.b0 - &c.a0 * &c.b1).is_zero()
    });

    Ok(ChamberReport {
        walls,
        chambers,
        l_continuous,
        inv_l_affine,
    })
}

/// The open chamber containing t0 (t0 must not sit on a wall), as the pair
/// of enclosing bounds. Realizes the strict-gap stability neighborhood.
pub fn stability_neighborhood(spec: &FamilySpec, t0: &Rat) -> Result<(Alg, Alg)> {
    if t0 < &rat_int(0) || t0 > &rat_int(1) {
        return Err(EngineError::InvalidInput("t0 outside [0,1]".into()));
    }
    let report = analyze(spec)?;
    for ch in &report.chambers {
        // Chambers are relatively open in [0,1]: the interval endpoints 0
        // and 1 belong to their chambers.
        let above = ch.lo.cmp_rat(t0) == Ordering::Less
            || (t0.is_zero() && ch.lo.cmp_rat(t0) == Ordering::Equal);
        let below = ch.hi.cmp_rat(t0) == Ordering::Greater
            || (*t0 == rat_int(1) && ch.hi.cmp_rat(t0) == Ordering::Equal);
        if above && below {
            return Ok((ch.lo.clone(), ch.hi.clone()));
        }
    }
    Err(EngineError::InvalidInput(
        "t0 lies on a wall; no open stability neighborhood".into(),
    ))
}

/// Parameterized denominator family: either a principal monomial ideal with
/// affine exponent path, or a product of fixed ideals with affine weights.
#[derive(Debug, Clone)]
pub enum ParamIdealPath {
    /// b_p(t) = (x^{ceil(e(t) p)}) with e(t) = e0 + e1 t componentwise.
    Principal { e0: Vec<Rat>, e1: Vec<Rat> },
    /// b(t) = closure of prod I_j^{ceil(lambda_j(t) p)} with
    /// lambda_j(t) = l0_j + l1_j t.
    Product { factors: Vec<(MonomialIdeal, Rat, Rat)> },
}

/// Builds the family over the compact facet normals of NP(a):
/// alpha_i = h_a(u_i) constant, beta_i(t) affine from the path data.
pub fn family_from_monomial(a: &MonomialIdeal, path: &ParamIdealPath) -> Result<FamilySpec> {
    if !a.is_m_primary() {
        return Err(EngineError::NotMPrimary(format!("{a}")));
    }
    let np = NewtonPolyhedron::from_ideal(a)?;
    let mut candidates = Vec::new();
    for f in np.compact_facets() {
        let u = &f.normal;
        let (b0, b1) = match path {
            ParamIdealPath::Principal { e0, e1 } => {
                if e0.len() != a.dim() || e1.len() != a.dim() {
                    return Err(EngineError::DimensionMismatch {
                        expected: a.dim(),
                        got: e0.len().max(e1.len()),
                    });
                }
                (u.dot_rat(e0), u.dot_rat(e1))
            }
            ParamIdealPath::Product { factors } => {
                let mut b0 = Rat::zero();
                let mut b1 = Rat::zero();
                for (ideal, l0, l1) in factors {
                    let h = ideal.support(u)?;
                    b0 += l0 * &h;
                    b1 += l1 * &h;
                }
                (b0, b1)
            }
        };
        candidates.push(FamilyCandidate {
            label: CandidateLabel::Weight(u.clone()),
            a0: f.offset.clone(),
            a1: Rat::zero(),
            b0,
            b1,
        });
    }
    FamilySpec::new(candidates)
}
