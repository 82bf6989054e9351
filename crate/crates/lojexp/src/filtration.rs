//! Monomial filtrations with computable asymptotic support functions.
//!
//! Three asymptotic family kinds are supported: powers of a fixed ideal,
//! linear-form staircase regions {x >= 0 : <w_j, x> >= c_j}, and integral
//! closures of products prod_j I_j^{ceil(lambda_j p)}. In each case the
//! asymptotic value v_u = inf_p v_u(a_p)/p is an exact rational computed
//! without limits: a support function minimum, an exact linear program, or a
//! positive combination of support functions.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{EngineError, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::WeightVec;
use crate::polyhedron::NewtonPolyhedron;
use crate::rat::{rat_int, Rat};
use crate::simplex::{solve_lp, LpOutcome};

#[derive(Debug, Clone)]
pub enum FiltrationSpec {
    /// a_p = I^p.
    Power(MonomialIdeal),
    /// a_p generated by the monomials with <w_j, m> >= c_j * p for all j.
    LinearForms {
        dim: usize,
        constraints: Vec<(WeightVec, Rat)>,
    },
    /// a_p = closure of prod_j I_j^{ceil(lambda_j p)}.
    Product { factors: Vec<(MonomialIdeal, Rat)> },
}

impl FiltrationSpec {
    pub fn linear(dim: usize, constraints: Vec<(WeightVec, Rat)>) -> Result<Self> {
        if constraints.is_empty() {
            return Err(EngineError::InvalidInput(
                "linear filtration needs at least one constraint".into(),
            ));
        }
        for (w, c) in &constraints {
            if w.dim() != dim {
                return Err(EngineError::DimensionMismatch {
                    expected: dim,
                    got: w.dim(),
                });
            }
            if !c.is_positive() {
                return Err(EngineError::InvalidInput(
                    "linear filtration offsets must be positive".into(),
                ));
            }
        }
        Ok(FiltrationSpec::LinearForms { dim, constraints })
    }

    pub fn product(factors: Vec<(MonomialIdeal, Rat)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(EngineError::InvalidInput(
                "product filtration needs at least one factor".into(),
            ));
        }
        let dim = factors[0].0.dim();
        for (i, lambda) in &factors {
            if i.dim() != dim {
                return Err(EngineError::DimensionMismatch {
                    expected: dim,
                    got: i.dim(),
                });
            }
            if !lambda.is_positive() {
                return Err(EngineError::InvalidInput(
                    "product filtration weights must be positive".into(),
                ));
            }
        }
        Ok(FiltrationSpec::Product { factors })
    }

    pub fn dim(&self) -> usize {
        match self {
            FiltrationSpec::Power(i) => i.dim(),
            FiltrationSpec::LinearForms { dim, .. } => *dim,
            FiltrationSpec::Product { factors } => factors[0].0.dim(),
        }
    }

    /// Bounded complement of the asymptotic region in the orthant.
    pub fn is_m_primary(&self) -> bool {
        match self {
            FiltrationSpec::Power(i) => i.is_m_primary(),
            // With positive offsets, an axis escapes to the region iff every
            // constraint normal is positive along it; a zero coordinate in
            // any normal blocks its axis for good.
            FiltrationSpec::LinearForms { constraints, .. } => constraints
                .iter()
                .all(|(w, _)| w.strictly_positive()),
            FiltrationSpec::Product { factors } => {
                factors.iter().all(|(i, _)| i.is_m_primary())
            }
        }
    }

    /// Asymptotic value v_u = inf_p v_u(a_p)/p, exact.
    pub fn value(&self, u: &WeightVec) -> Result<Rat> {
        if u.dim() != self.dim() {
            return Err(EngineError::DimensionMismatch {
                expected: self.dim(),
                got: u.dim(),
            });
        }
        match self {
            FiltrationSpec::Power(i) => i.support(u),
            FiltrationSpec::LinearForms { dim, constraints } => {
                // Minimize <u, x> over {x >= 0 : <w_j, x> >= c_j}, via
                // <w_j, x> - s_j = c_j with slack variables.
                let n = *dim;
                let k = constraints.len();
                let mut a = vec![vec![Rat::zero(); n + k]; k];
                let mut b = vec![Rat::zero(); k];
                for (j, (w, c)) in constraints.iter().enumerate() {
                    for (i, &wi) in w.coords().iter().enumerate() {
                        a[j][i] = rat_int(wi);
                    }
                    a[j][n + j] = -rat_int(1);
                    b[j] = c.clone();
                }
                let mut costs = vec![Rat::zero(); n + k];
                for (i, &ui) in u.coords().iter().enumerate() {
                    costs[i] = rat_int(ui);
                }
                match solve_lp(&a, &b, &costs) {
                    LpOutcome::Optimal { value, .. } => Ok(value),
                    LpOutcome::Infeasible => Err(EngineError::InfeasibleRegion),
                    LpOutcome::Unbounded => Err(EngineError::Internal(
                        "support minimization cannot be unbounded on the orthant".into(),
                    )),
                }
            }
            FiltrationSpec::Product { factors } => {
                let mut acc = Rat::zero();
                for (i, lambda) in factors {
                    acc += lambda * i.support(u)?;
                }
                Ok(acc)
            }
        }
    }

    /// The asymptotic Newton region as a polyhedron, when it has a vertex
    /// description (Power and Product kinds).
    pub fn region(&self) -> Result<Option<NewtonPolyhedron>> {
        match self {
            FiltrationSpec::Power(i) => Ok(Some(NewtonPolyhedron::from_ideal(i)?)),
            FiltrationSpec::LinearForms { .. } => Ok(None),
            FiltrationSpec::Product { factors } => {
                let mut acc: Option<NewtonPolyhedron> = None;
                for (i, lambda) in factors {
                    let scaled = NewtonPolyhedron::from_ideal(i)?.scale(lambda)?;
                    acc = Some(match acc {
                        None => scaled,
                        Some(p) => p.minkowski_sum(&scaled)?,
                    });
                }
                Ok(acc)
            }
        }
    }

    /// Facet data (normal, offset) describing the asymptotic region: compact
    /// facets for polyhedral kinds, the constraint list for LinearForms.
    pub fn positive_facets(&self) -> Result<Vec<(WeightVec, Rat)>> {
        match self {
            FiltrationSpec::LinearForms { constraints, .. } => Ok(constraints.clone()),
            _ => {
                let region = self.region()?.expect("polyhedral kind");
                Ok(region
                    .compact_facets()
                    .into_iter()
                    .map(|f| (f.normal.clone(), f.offset.clone()))
                    .collect())
            }
        }
    }

    /// Rays on which the asymptotic support function can break linearity.
    pub fn breakpoint_rays(&self) -> Result<Vec<WeightVec>> {
        Ok(self
            .positive_facets()?
            .into_iter()
            .map(|(w, _)| w)
            .collect())
    }
}

/// Spec operation `v_filtration`.
pub fn v_filtration(u: &WeightVec, spec: &FiltrationSpec) -> Result<Rat> {
    spec.value(u)
}

/// Union of both specs' breakpoint rays and the coordinate rays,
/// primitively deduplicated. In the plane this is a common refinement of
/// both normal fans, so ratios of the two support functions attain their
/// supremum on it.
pub fn candidate_rays_2d(a: &FiltrationSpec, b: &FiltrationSpec) -> Result<Vec<WeightVec>> {
    let dim = a.dim();
    let mut rays: BTreeSet<WeightVec> = BTreeSet::new();
    for w in a.breakpoint_rays()? {
        rays.insert(w);
    }
    for w in b.breakpoint_rays()? {
        rays.insert(w);
    }
    for i in 0..dim {
        let mut coords = vec![0i64; dim];
        coords[i] = 1;
        rays.insert(WeightVec::new(coords)?);
    }
    Ok(rays.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn w(coords: &[i64]) -> WeightVec {
        WeightVec::new(coords.to_vec()).unwrap()
    }

    /// The two filtrations x^i y^j with i+2j >= 3p and 2i+j >= 5p.
    fn linear_pair() -> (FiltrationSpec, FiltrationSpec) {
        let a = FiltrationSpec::linear(2, vec![(w(&[1, 2]), rat_int(3))]).unwrap();
        let b = FiltrationSpec::linear(2, vec![(w(&[2, 1]), rat_int(5))]).unwrap();
        (a, b)
    }

    #[test]
    fn linear_values_match_known_example() {
        let (a, b) = linear_pair();
        assert_eq!(v_filtration(&w(&[1, 2]), &a).unwrap(), rat_int(3));
        assert_eq!(v_filtration(&w(&[1, 2]), &b).unwrap(), rat(5, 2));
        assert_eq!(v_filtration(&w(&[2, 1]), &a).unwrap(), rat(3, 2));
        assert_eq!(v_filtration(&w(&[2, 1]), &b).unwrap(), rat_int(5));
        // Boundary rays: both regions touch the axes.
        assert_eq!(v_filtration(&w(&[1, 0]), &a).unwrap(), Rat::zero());
        assert_eq!(v_filtration(&w(&[0, 1]), &b).unwrap(), Rat::zero());
    }

    #[test]
    fn power_kind_matches_ideal_support() {
        let i = MonomialIdeal::from_coords(2, &[vec![4, 0], vec![2, 3], vec![0, 5]]).unwrap();
        let spec = FiltrationSpec::Power(i.clone());
        for u in [w(&[1, 1]), w(&[3, 2]), w(&[5, 4])] {
            assert_eq!(v_filtration(&u, &spec).unwrap(), i.support(&u).unwrap());
        }
    }

    #[test]
    fn product_kind_is_weighted_sum() {
        let i = MonomialIdeal::from_coords(2, &[vec![2, 0], vec![0, 3]]).unwrap();
        let j = MonomialIdeal::maximal(2);
        let spec =
            FiltrationSpec::product(vec![(i.clone(), rat_int(2)), (j.clone(), rat(1, 2))]).unwrap();
        let u = w(&[3, 2]);
        let expected =
            rat_int(2) * i.support(&u).unwrap() + rat(1, 2) * j.support(&u).unwrap();
        assert_eq!(v_filtration(&u, &spec).unwrap(), expected);
        // Region support agrees with the weighted sum of supports.
        let region = spec.region().unwrap().unwrap();
        assert_eq!(region.support(&u).unwrap(), expected);
    }

    #[test]
    fn m_primary_detection() {
        let (a, _) = linear_pair();
        assert!(a.is_m_primary());
        let bad = FiltrationSpec::linear(2, vec![(w(&[1, 0]), rat_int(1))]).unwrap();
        assert!(!bad.is_m_primary());
    }

    #[test]
    fn constructor_validation() {
        assert!(FiltrationSpec::linear(2, vec![]).is_err());
        assert!(FiltrationSpec::linear(2, vec![(w(&[1, 1]), rat_int(0))]).is_err());
        assert!(FiltrationSpec::product(vec![]).is_err());
        let i = MonomialIdeal::maximal(2);
        assert!(FiltrationSpec::product(vec![(i, rat_int(-1))]).is_err());
    }
}
