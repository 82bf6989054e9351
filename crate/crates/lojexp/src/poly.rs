//! Univariate polynomials over the rationals: exact gcd and rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Coefficients low-to-high; no trailing zeros; empty means the zero
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divides out the largest power of the variable (strips z^k).
    pub fn strip_variable_power(&self) -> Poly {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => Poly::new(self.coeffs[k..].to_vec()),
            None => Poly::zero(),
        }
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(lead) => Poly::new(self.coeffs.iter().map(|c| c / lead).collect()),
        }
    }

    /// Euclidean remainder.
    fn rem(&self, divisor: &Poly) -> Poly {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > d && !rem.is_empty() {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / lead.clone();
            if !factor.is_zero() {
                for i in 0..=d {
                    let delta = &factor * &divisor.coeffs[i];
                    rem[k - d + i] -= delta;
                }
            }
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            if rem.len() <= d {
                break;
            }
        }
        Poly::new(rem)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// All rational roots, by the rational root theorem on the
    /// denominator-cleared form.
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.is_zero() || self.degree() == Some(0) {
            return Vec::new();
        }
        let stripped = self.strip_variable_power();
        let mut roots = Vec::new();
        let mut zero_root = stripped.coeffs.len() < self.coeffs.len();
        // Clear denominators to integer coefficients.
        let mut lcm = BigInt::one();
        for c in stripped.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = stripped
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let a0 = ints.first().cloned().unwrap_or_else(BigInt::zero);
        let an = ints.last().cloned().unwrap_or_else(BigInt::zero);
        if a0.is_zero() {
            zero_root = true;
        } else {
            for p in divisors(&a0.abs()) {
                for q in divisors(&an.abs()) {
                    for sign in [1, -1] {
                        let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                        if stripped.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        if zero_root {
            roots.push(Rat::zero());
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += BigInt::one();
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn poly(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn gcd_of_common_factor() {
        // (z+1)(z-2) and (z+1)(z+3) share z+1.
        let a = poly(&[-2, -1, 1]);
        let b = poly(&[3, 4, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, poly(&[1, 1]).monic());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = poly(&[1, 1]); // z + 1
        let b = poly(&[-1, 1]); // z - 1
        assert_eq!(a.gcd(&b).degree(), Some(0));
    }

    #[test]
    fn rational_roots_found() {
        // (2z - 1)(z + 3) = 2z^2 + 5z - 3.
        let p = poly(&[-3, 5, 2]);
        assert_eq!(p.rational_roots(), vec![rat_int(-3), rat(1, 2)]);
        // z^2 - 2 has no rational roots.
        assert!(poly(&[-2, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn strip_variable_power_works() {
        let p = poly(&[0, 0, 3, 1]);
        assert_eq!(p.strip_variable_power(), poly(&[3, 1]));
    }
}
