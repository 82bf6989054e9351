//! Lattice exponent vectors and integer weight vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::EngineError;
use crate::rat::Rat;

/// Exponent vector of a monomial: n nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec {
    coords: Vec<i64>,
}

impl ExpVec {
    pub fn new(coords: Vec<i64>) -> Result<Self, EngineError> {
        if coords.is_empty() {
            return Err(EngineError::InvalidInput("empty exponent vector".into()));
        }
        if coords.iter().any(|&c| c < 0) {
            return Err(EngineError::InvalidInput(format!(
                "negative exponent in {coords:?}"
            )));
        }
        Ok(ExpVec { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i]
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &ExpVec) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn to_rat_point(&self) -> Vec<Rat> {
        self.coords
            .iter()
            .map(|&c| Rat::from_integer(BigInt::from(c)))
            .collect()
    }

    /// i-th unit vector scaled by `a`.
    pub fn axis(dim: usize, i: usize, a: i64) -> ExpVec {
        let mut coords = vec![0; dim];
        coords[i] = a;
        ExpVec { coords }
    }
}

/// Integer weight vector u defining the monomial valuation
/// v_u(x^m) = <u, m>. Stored primitive (gcd of coordinates 1), nonzero,
/// all coordinates nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec {
    coords: Vec<i64>,
}

impl WeightVec {
    /// Builds a weight vector, dividing out the gcd.
    pub fn new(coords: Vec<i64>) -> Result<Self, EngineError> {
        if coords.is_empty() {
            return Err(EngineError::InvalidInput("empty weight vector".into()));
        }
        if coords.iter().any(|&c| c < 0) {
            return Err(EngineError::InvalidInput(format!(
                "negative weight in {coords:?}"
            )));
        }
        if coords.iter().all(|&c| c == 0) {
            return Err(EngineError::InvalidInput("zero weight vector".into()));
        }
        let g = coords.iter().fold(0i64, |acc, &c| acc.gcd(&c));
        Ok(WeightVec {
            coords: coords.iter().map(|&c| c / g).collect(),
        })
    }

    /// Normalizes a big-integer normal to a primitive `WeightVec`.
    pub fn from_bigints(coords: &[BigInt]) -> Result<Self, EngineError> {
        let mut g = BigInt::zero();
        for c in coords {
            if c.is_negative() {
                return Err(EngineError::InvalidInput(format!(
                    "negative weight in {coords:?}"
                )));
            }
            g = g.gcd(c);
        }
        if g.is_zero() {
            return Err(EngineError::InvalidInput("zero weight vector".into()));
        }
        let mut out = Vec::with_capacity(coords.len());
        for c in coords {
            let q = c / &g;
            let v = q.to_i64().ok_or_else(|| {
                EngineError::Internal(format!("weight coordinate {q} exceeds i64"))
            })?;
            out.push(v);
        }
        Ok(WeightVec { coords: out })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn strictly_positive(&self) -> bool {
        self.coords.iter().all(|&c| c > 0)
    }

    /// <u, m> for an integer exponent vector.
    pub fn dot_exp(&self, m: &ExpVec) -> i64 {
        let s: i128 = self
            .coords
            .iter()
            .zip(m.coords())
            .map(|(&u, &e)| u as i128 * e as i128)
            .sum();
        i64::try_from(s).expect("weight/exponent dot product overflow")
    }

    /// <u, x> for a rational point.
    pub fn dot_rat(&self, x: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (&u, xi) in self.coords.iter().zip(x) {
            acc += xi * Rat::from_integer(BigInt::from(u));
        }
        acc
    }

    /// Log discrepancy A(v_u) = sum of the coordinates.
    pub fn log_discrepancy(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn min_coord(&self) -> i64 {
        *self.coords.iter().min().unwrap()
    }

    pub fn is_diagonal(&self) -> bool {
        self.coords.iter().all(|&c| c == self.coords[0])
    }

    pub fn add(&self, other: &WeightVec) -> Result<WeightVec, EngineError> {
        WeightVec::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl std::fmt::Display for WeightVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_reduced_to_primitive() {
        let u = WeightVec::new(vec![6, 4]).unwrap();
        assert_eq!(u.coords(), &[3, 2]);
        assert!(WeightVec::new(vec![0, 0]).is_err());
        assert!(WeightVec::new(vec![-1, 2]).is_err());
    }

    #[test]
    fn dot_products() {
        let u = WeightVec::new(vec![3, 2]).unwrap();
        let m = ExpVec::new(vec![4, 0]).unwrap();
        assert_eq!(u.dot_exp(&m), 12);
        assert_eq!(u.log_discrepancy(), 5);
        assert_eq!(u.min_coord(), 2);
    }

    #[test]
    fn exp_vec_divides() {
        let a = ExpVec::new(vec![2, 0]).unwrap();
        let b = ExpVec::new(vec![3, 1]).unwrap();
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
    }
}
