//! Monomial ideals as finite antichains of generator exponents.

use std::collections::BTreeSet;

use crate::error::{EngineError, Result};
use crate::lattice::{ExpVec, WeightVec};
use crate::rat::{rat_int, Rat};

/// Cap on the exponent in iterated power/sumset computations.
pub const POWER_CAP: u32 = 64;

/// A monomial ideal, identified with the componentwise antichain of its
/// minimal generators' exponent vectors. Generators are kept sorted for
/// deterministic output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExpVec>,
}

/// Reduces a generator set to the componentwise antichain generating the
/// same ideal (drops duplicates and dominated generators).
pub fn minimalize(gens: &[ExpVec]) -> Result<Vec<ExpVec>> {
    if gens.is_empty() {
        return Err(EngineError::EmptyGenerators);
    }
    let dim = gens[0].dim();
    for g in gens {
        if g.dim() != dim {
            return Err(EngineError::DimensionMismatch {
                expected: dim,
                got: g.dim(),
            });
        }
    }
    let set: BTreeSet<ExpVec> = gens.iter().cloned().collect();
    let mut out: Vec<ExpVec> = Vec::new();
    'outer: for g in &set {
        for h in &set {
            if h != g && h.divides(g) {
                continue 'outer;
            }
        }
        out.push(g.clone());
    }
    Ok(out)
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`; the stored generator set is the
    /// minimal antichain.
    pub fn new(gens: Vec<ExpVec>) -> Result<Self> {
        let gens = minimalize(&gens)?;
        if gens.iter().any(|g| g.coords().iter().all(|&c| c == 0)) {
            return Err(EngineError::InvalidInput(
                "the unit monomial generates the whole ring; ideals must be proper".into(),
            ));
        }
        Ok(MonomialIdeal {
            dim: gens[0].dim(),
            gens,
        })
    }

    pub fn from_coords(dim: usize, coords: &[Vec<i64>]) -> Result<Self> {
        let mut gens = Vec::with_capacity(coords.len());
        for c in coords {
            if c.len() != dim {
                return Err(EngineError::DimensionMismatch {
                    expected: dim,
                    got: c.len(),
                });
            }
            gens.push(ExpVec::new(c.clone())?);
        }
        MonomialIdeal::new(gens)
    }

    /// The maximal ideal m = (x_1, ..., x_n).
    pub fn maximal(dim: usize) -> Self {
        let gens = (0..dim).map(|i| ExpVec::axis(dim, i, 1)).collect();
        MonomialIdeal::new(gens).expect("maximal ideal")
    }

    /// The diagonal ideal (x_1^{a_1}, ..., x_n^{a_n}).
    pub fn diagonal(exponents: &[i64]) -> Result<Self> {
        if exponents.iter().any(|&a| a < 1) {
            return Err(EngineError::InvalidInput(
                "diagonal exponents must be positive".into(),
            ));
        }
        let n = exponents.len();
        let gens = exponents
            .iter()
            .enumerate()
            .map(|(i, &a)| ExpVec::axis(n, i, a))
            .collect();
        MonomialIdeal::new(gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    /// Monomial membership: some generator divides m.
    pub fn contains_monomial(&self, m: &ExpVec) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// m-primary: for each axis some generator is a pure power of that axis.
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|i| {
            self.gens.iter().any(|g| {
                g.coord(i) > 0 && g.coords().iter().enumerate().all(|(j, &c)| j == i || c == 0)
            })
        })
    }

    /// Support function h_I(u) = min over generators of <u, g>; equals the
    /// infimum of <u, .> over NP(I) for u >= 0.
    pub fn support(&self, u: &WeightVec) -> Result<Rat> {
        if u.dim() != self.dim {
            return Err(EngineError::DimensionMismatch {
                expected: self.dim,
                got: u.dim(),
            });
        }
        Ok(rat_int(self.support_int(u)))
    }

    pub fn support_int(&self, u: &WeightVec) -> i64 {
        self.gens.iter().map(|g| u.dot_exp(g)).min().unwrap()
    }

    /// Product ideal via generator sumset (minimalized).
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.dim != self.dim {
            return Err(EngineError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                sums.push(a.add(b));
            }
        }
        MonomialIdeal::new(sums)
    }

    /// q-th power via iterated sumset with minimalization at each step.
    pub fn power(&self, q: u32) -> Result<MonomialIdeal> {
        if q == 0 {
            return Err(EngineError::InvalidInput("power exponent must be >= 1".into()));
        }
        if q > POWER_CAP {
            return Err(EngineError::PowerCapExceeded {
                got: q,
                cap: POWER_CAP,
            });
        }
        let mut acc = self.clone();
        for _ in 1..q {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Componentwise maxima of the generators (bounding box of the staircase).
    pub fn coord_maxima(&self) -> Vec<i64> {
        (0..self.dim)
            .map(|i| self.gens.iter().map(|g| g.coord(i)).max().unwrap())
            .collect()
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x^{:?}", g.coords())?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(coords: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(coords[0].len(), &coords.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn minimalize_drops_dominated() {
        let i = ideal(&[&[2, 0], &[3, 1], &[0, 3]]);
        assert_eq!(
            i.gens(),
            &[ExpVec::new(vec![0, 3]).unwrap(), ExpVec::new(vec![2, 0]).unwrap()]
        );
    }

    #[test]
    fn minimalize_keeps_antichain() {
        let i = ideal(&[&[4, 0], &[2, 3], &[0, 5]]);
        assert_eq!(i.gens().len(), 3);
    }

    #[test]
    fn minimalize_dedups() {
        let i = ideal(&[&[1, 1], &[1, 1]]);
        assert_eq!(i.gens().len(), 1);
    }

    #[test]
    fn minimalize_rejects_empty() {
        assert!(minimalize(&[]).is_err());
    }

    #[test]
    fn support_examples() {
        let a = ideal(&[&[4, 0], &[2, 3], &[0, 5]]);
        // min(12, 12, 10): the (3,2)-support is attained at y^5.
        assert_eq!(a.support_int(&WeightVec::new(vec![3, 2]).unwrap()), 10);
        assert_eq!(a.support_int(&WeightVec::new(vec![1, 1]).unwrap()), 4);
        let single = ideal(&[&[2, 3]]);
        assert_eq!(single.support_int(&WeightVec::new(vec![1, 1]).unwrap()), 5);
    }

    #[test]
    fn m_primary_detection() {
        assert!(ideal(&[&[2, 0], &[0, 3]]).is_m_primary());
        assert!(!ideal(&[&[2, 1], &[0, 3]]).is_m_primary());
        assert!(MonomialIdeal::maximal(3).is_m_primary());
    }

    #[test]
    fn powers_and_products() {
        let i = ideal(&[&[2, 0], &[0, 3]]);
        let m = MonomialIdeal::maximal(2);
        let im = i.product(&m).unwrap();
        assert_eq!(im.gens().len(), 4); // x^3, x^2 y, x y^3, y^4
        let i2 = i.power(2).unwrap();
        assert!(i2.contains_monomial(&ExpVec::new(vec![2, 3]).unwrap()));
        assert!(i.power(POWER_CAP + 1).is_err());
    }
}
