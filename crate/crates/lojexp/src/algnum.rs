//! Exact real algebraic numbers of degree at most two: rationals and
//! quadratic surds r + s*sqrt(d). Comparisons are decided by nested sign
//! analysis (no floating point, no integer factorization); rational
//! enclosures of any width are produced by scaled integer square roots.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::{is_perfect_square, isqrt, Rat};

#[derive(Debug, Clone)]
pub enum Alg {
    Rational(Rat),
    /// r + s*sqrt(d) with d a positive non-square rational and s nonzero.
    Surd { r: Rat, s: Rat, d: Rat },
}

/// sqrt of a positive rational when it is rational.
fn rational_sqrt(d: &Rat) -> Option<Rat> {
    if is_perfect_square(d.numer()) && is_perfect_square(d.denom()) {
        Some(Rat::new(isqrt(d.numer()), isqrt(d.denom())))
    } else {
        None
    }
}

/// Sign of r + s*sqrt(d) for d > 0 (not required to be a non-square).
fn sign_two_term(r: &Rat, s: &Rat, d: &Rat) -> Ordering {
    debug_assert!(d.is_positive());
    if s.is_zero() {
        return r.cmp(&Rat::zero());
    }
    if s.is_positive() {
        if !r.is_negative() {
            return Ordering::Greater;
        }
        // r < 0 < s*sqrt(d): compare s^2 d with r^2.
        (s * s * d).cmp(&(r * r))
    } else {
        match sign_two_term(&(-r), &(-s), d) {
            Ordering::Less => Ordering::Greater,
            Ordering::Greater => Ordering::Less,
            Ordering::Equal => Ordering::Equal,
        }
    }
}

impl Alg {
    pub fn rational(r: Rat) -> Alg {
        Alg::Rational(r)
    }

    /// r + s*sqrt(d), normalized to a rational when the radical resolves.
    pub fn surd(r: Rat, s: Rat, d: Rat) -> Alg {
        if s.is_zero() || d.is_zero() {
            return Alg::Rational(r);
        }
        assert!(d.is_positive(), "negative radicand");
        match rational_sqrt(&d) {
            Some(root) => Alg::Rational(r + s * root),
            None => Alg::Surd { r, s, d },
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Alg::Rational(r) => Some(r),
            Alg::Surd { .. } => None,
        }
    }

    /// Sign of self - (p + q*sqrt(e)) for the surd case, via squaring with
    /// case analysis on the two sides' signs.
    pub fn cmp_alg(&self, other: &Alg) -> Ordering {
        match (self, other) {
            (Alg::Rational(a), Alg::Rational(b)) => a.cmp(b),
            (Alg::Rational(a), Alg::Surd { r, s, d }) => {
                sign_two_term(&(a - r), &(-s.clone()), d)
            }
            (Alg::Surd { r, s, d }, Alg::Rational(b)) => sign_two_term(&(r - b), s, d),
            (
                Alg::Surd { r, s, d },
                Alg::Surd {
                    r: r2,
                    s: s2,
                    d: d2,
                },
            ) => {
                // Compare L = (r - r2) + s*sqrt(d) against R = s2*sqrt(d2).
                let rr = r - r2;
                let left = sign_two_term(&rr, s, d);
                let right = s2.cmp(&Rat::zero());
                match (left, right) {
                    (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
                    (Ordering::Equal, Ordering::Greater) => Ordering::Less,
                    (Ordering::Equal, Ordering::Less) => Ordering::Greater,
                    (Ordering::Greater, Ordering::Equal) | (Ordering::Greater, Ordering::Less) => {
                        Ordering::Greater
                    }
                    (Ordering::Less, Ordering::Equal) | (Ordering::Less, Ordering::Greater) => {
                        Ordering::Less
                    }
                    (lsign, _) => {
                        // Both sides share the sign lsign; compare squares:
                        // L^2 - R^2 = (rr^2 + s^2 d - s2^2 d2) + 2 rr s sqrt(d).
                        let const_part = &rr * &rr + s * s * d - s2 * s2 * d2;
                        let surd_part = Rat::from_integer(BigInt::from(2)) * rr * s;
                        let sq = sign_two_term(&const_part, &surd_part, d);
                        if lsign == Ordering::Greater {
                            sq
                        } else {
                            match sq {
                                Ordering::Less => Ordering::Greater,
                                Ordering::Greater => Ordering::Less,
                                Ordering::Equal => Ordering::Equal,
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn cmp_rat(&self, q: &Rat) -> Ordering {
        self.cmp_alg(&Alg::Rational(q.clone()))
    }

    /// Rational enclosure [lo, hi] with hi - lo <= 1/2^bits (exact bounds).
    pub fn enclosure(&self, bits: u32) -> (Rat, Rat) {
        match self {
            Alg::Rational(r) => (r.clone(), r.clone()),
            Alg::Surd { r, s, d } => {
                // sqrt(p/q) = sqrt(p q)/q; scaled integer sqrt gives
                // floor(2^k sqrt(pq)) exactly.
                let p = d.numer().clone();
                let q = d.denom().clone();
                let n = &p * &q;
                let k = bits + 4;
                let scaled = isqrt(&(n << (2 * k)));
                let denom = BigInt::one() << k;
                let lo_root = Rat::new(scaled.clone(), &denom * &q);
                let hi_root = Rat::new(scaled + BigInt::one(), denom * q);
                let (a, b) = if s.is_positive() {
                    (r + s * lo_root, r + s * hi_root)
                } else {
                    (r + s * hi_root, r + s * lo_root)
                };
                debug_assert!(a <= b);
                (a, b)
            }
        }
    }

    /// Decimal-ish display: exact for rationals, an enclosure for surds.
    pub fn describe(&self) -> String {
        match self {
            Alg::Rational(r) => crate::rat::format_rat(r),
            Alg::Surd { r, s, d } => format!(
                "{} + {}*sqrt({})",
                crate::rat::format_rat(r),
                crate::rat::format_rat(s),
                crate::rat::format_rat(d)
            ),
        }
    }
}

impl PartialEq for Alg {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_alg(other) == Ordering::Equal
    }
}
impl Eq for Alg {}
impl PartialOrd for Alg {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Alg {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_alg(other)
    }
}

/// A rational strictly between two algebraic numbers (a < b required).
pub fn rational_between(a: &Alg, b: &Alg) -> Rat {
    debug_assert!(a < b);
    let mut bits = 8u32;
    loop {
        let (_, a_hi) = a.enclosure(bits);
        let (b_lo, _) = b.enclosure(bits);
        if a_hi < b_lo {
            let half = Rat::new(BigInt::one(), BigInt::from(2));
            return (a_hi + b_lo) * half;
        }
        // Touching enclosures: a shared endpoint may still strictly
        // separate the two numbers.
        if a_hi == b_lo && a.cmp_rat(&a_hi) == Ordering::Less && b.cmp_rat(&a_hi) == Ordering::Greater
        {
            return a_hi;
        }
        bits += 16;
        assert!(bits < 1 << 12, "rational_between failed to separate");
    }
}

/// Real roots of a*t^2 + b*t + c (a possibly zero), exact.
pub fn quadratic_roots(a: &Rat, b: &Rat, c: &Rat) -> Vec<Alg> {
    if a.is_zero() {
        if b.is_zero() {
            return Vec::new();
        }
        return vec![Alg::Rational(-(c / b))];
    }
    let four = Rat::from_integer(BigInt::from(4));
    let two = Rat::from_integer(BigInt::from(2));
    let disc = b * b - four * (a * c);
    match disc.cmp(&Rat::zero()) {
        Ordering::Less => Vec::new(),
        Ordering::Equal => vec![Alg::Rational(-(b / (&two * a)))],
        Ordering::Greater => {
            let base = -(b / (&two * a));
            let scale = Rat::one() / (two * a);
            let lo_first = Alg::surd(base.clone(), -scale.clone().abs(), disc.clone());
            let hi_second = Alg::surd(base, scale.abs(), disc);
            vec![lo_first, hi_second]
        }
    }
}

/// Evaluates a*t^2 + b*t + c at an algebraic point, exactly; returns the
/// result as (rational part, surd coefficient, radicand).
pub fn eval_quadratic(a: &Rat, b: &Rat, c: &Rat, t: &Alg) -> Alg {
    match t {
        Alg::Rational(r) => Alg::Rational(a * r * r + b * r + c),
        Alg::Surd { r, s, d } => {
            // t^2 = r^2 + s^2 d + 2 r s sqrt(d).
            let two = Rat::from_integer(BigInt::from(2));
            let rat_part = a * (r * r + s * s * d) + b * r + c;
            let surd_part = a * (two * r * s) + b * s;
            Alg::surd(rat_part, surd_part, d.clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn surd_normalizes_perfect_squares() {
        // 1 + 2*sqrt(9/4) = 4.
        let x = Alg::surd(rat_int(1), rat_int(2), rat(9, 4));
        assert_eq!(x.as_rational(), Some(&rat_int(4)));
    }

    #[test]
    fn comparisons_across_radicands() {
        let sqrt2 = Alg::surd(rat_int(0), rat_int(1), rat_int(2));
        let sqrt3 = Alg::surd(rat_int(0), rat_int(1), rat_int(3));
        assert!(sqrt2 < sqrt3);
        assert!(sqrt2 > Alg::Rational(rat(7, 5)));
        assert!(sqrt2 < Alg::Rational(rat(3, 2)));
        // sqrt(2) + sqrt(3) > 3.14
        let sum_cmp = Alg::surd(rat(-157, 50), rat_int(1), rat_int(2));
        assert_eq!(sum_cmp.cmp_alg(&Alg::surd(rat_int(0), rat_int(-1), rat_int(3))), Ordering::Greater);
    }

    #[test]
    fn equality_of_identical_roots() {
        // Both sides are 1 + sqrt(5).
        let x = Alg::surd(rat_int(1), rat_int(1), rat_int(5));
        let y = Alg::surd(rat_int(1), rat(1, 2), rat_int(20));
        assert_eq!(x, y);
    }

    #[test]
    fn quadratic_root_extraction() {
        // t^2 - t - 1: golden ratio pair.
        let roots = quadratic_roots(&rat_int(1), &rat_int(-1), &rat_int(-1));
        assert_eq!(roots.len(), 2);
        assert!(roots[0] < roots[1]);
        assert!(roots[1] > Alg::Rational(rat_int(1)));
        for r in &roots {
            let v = eval_quadratic(&rat_int(1), &rat_int(-1), &rat_int(-1), r);
            assert_eq!(v, Alg::Rational(rat_int(0)));
        }
        // Rational roots come out rational: (2t-1)(t-3).
        let roots = quadratic_roots(&rat_int(2), &rat_int(-7), &rat_int(3));
        assert_eq!(
            roots,
            vec![Alg::Rational(rat(1, 2)), Alg::Rational(rat_int(3))]
        );
    }

    #[test]
    fn rational_between_separates() {
        let sqrt2 = Alg::surd(rat_int(0), rat_int(1), rat_int(2));
        let sqrt3 = Alg::surd(rat_int(0), rat_int(1), rat_int(3));
        let q = rational_between(&sqrt2, &sqrt3);
        assert_eq!(sqrt2.cmp_rat(&q), Ordering::Less);
        assert_eq!(sqrt3.cmp_rat(&q), Ordering::Greater);
    }

    #[test]
    fn enclosures_shrink() {
        let sqrt2 = Alg::surd(rat_int(0), rat_int(1), rat_int(2));
        let (lo, hi) = sqrt2.enclosure(20);
        assert!(hi.clone() - lo.clone() < rat(1, 1 << 20));
        assert_eq!(sqrt2.cmp_rat(&lo), Ordering::Greater);
        assert_eq!(sqrt2.cmp_rat(&hi), Ordering::Less);
    }
}
