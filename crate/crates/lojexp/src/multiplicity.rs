//! Exact colengths, mixed multiplicities by finite-difference extraction of
//! the colength polynomial, Teissier-type inequality checks, and Milnor
//! numbers with gradient Lojasiewicz bounds for Brieskorn polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::closure::contains_closure;
use crate::error::{EngineError, Result};
use crate::exponent::loj_ideal;
use crate::ideal::{minimalize, MonomialIdeal};
use crate::lattice::ExpVec;
use crate::polyhedron::NewtonPolyhedron;
use crate::rat::{rat_int, Rat};

/// Number of standard monomials outside the staircase of an m-primary ideal.
pub fn colength(ideal: &MonomialIdeal) -> Result<u64> {
    if !ideal.is_m_primary() {
        return Err(EngineError::NotMPrimary(format!(
            "{ideal} has infinite colength"
        )));
    }
    let gens: Vec<Vec<i64>> = ideal.gens().iter().map(|g| g.coords().to_vec()).collect();
    let c = colength_rec(ideal.dim(), &gens);
    u64::try_from(c).map_err(|_| EngineError::Internal("colength exceeds u64".into()))
}

/// Counts lattice points dominated by no generator, sliced along the first
/// coordinate. Callers guarantee finiteness.
fn colength_rec(dim: usize, gens: &[Vec<i64>]) -> u128 {
    if gens.iter().any(|g| g.iter().all(|&c| c == 0)) {
        return 0;
    }
    if dim == 1 {
        return gens.iter().map(|g| g[0]).min().unwrap_or(i64::MAX) as u128;
    }
    let bound = gens.iter().map(|g| g[0]).max().unwrap();
    let mut total: u128 = 0;
    for i in 0..=bound {
        let slice: Vec<Vec<i64>> = gens
            .iter()
            .filter(|g| g[0] <= i)
            .map(|g| g[1..].to_vec())
            .collect();
        if i == bound {
            // All further slices equal this one and count zero for an
            // m-primary ideal (the pure power along axis 0 has entered).
            debug_assert_eq!(colength_rec(dim - 1, &slice), 0);
            break;
        }
        total += colength_rec(dim - 1, &slice);
    }
    total
}

/// Uncapped product power by iterated sumset with minimalization; internal
/// to the colength grid (the containment-side power cap does not apply).
fn power_gens(base: &[ExpVec], k: i64) -> Result<Vec<ExpVec>> {
    let mut acc: Option<Vec<ExpVec>> = None;
    for _ in 0..k {
        acc = Some(match acc {
            None => base.to_vec(),
            Some(cur) => {
                let mut sums = Vec::with_capacity(cur.len() * base.len());
                for a in &cur {
                    for b in base {
                        sums.push(a.add(b));
                    }
                }
                minimalize(&sums)?
            }
        });
    }
    Ok(acc.unwrap_or_else(|| vec![ExpVec::new(vec![0; base[0].dim()]).unwrap()]))
}

/// Mixed multiplicities of an m-primary pair.
#[derive(Debug, Clone)]
pub struct MixedTable {
    pub dim: usize,
    pub i_ideal: MonomialIdeal,
    pub j_ideal: MonomialIdeal,
    /// e_i = e(I^[i], J^[d-i]) for i = 0..d; e_0 = e(J), e_d = e(I).
    pub e: Vec<u64>,
    /// (n0, span): the colength grid was {n0..n0+span}^2.
    pub window: (i64, i64),
    pub stable: bool,
}

/// Colength of I^{n1} J^{n2}.
fn grid_colength(i: &MonomialIdeal, j: &MonomialIdeal, n1: i64, n2: i64) -> Result<u128> {
    let gi = power_gens(i.gens(), n1)?;
    let gj = power_gens(j.gens(), n2)?;
    let mut sums = Vec::with_capacity(gi.len() * gj.len());
    for a in &gi {
        for b in &gj {
            sums.push(a.add(b));
        }
    }
    let gens = minimalize(&sums)?;
    let coords: Vec<Vec<i64>> = gens.iter().map(|g| g.coords().to_vec()).collect();
    Ok(colength_rec(i.dim(), &coords))
}

/// e(I^[i], J^[d-i]) as iterated forward differences of the colength grid:
/// applying Delta_1^i Delta_2^{d-i} to a polynomial of total degree d leaves
/// exactly i!(d-i)! times the coefficient of n1^i n2^{d-i}, which is e_i.
fn difference(grid: &dyn Fn(i64, i64) -> Result<i128>, i: u32, j: u32, a: i64, b: i64) -> Result<i128> {
    if i > 0 {
        Ok(difference(grid, i - 1, j, a + 1, b)? - difference(grid, i - 1, j, a, b)?)
    } else if j > 0 {
        Ok(difference(grid, 0, j - 1, a, b + 1)? - difference(grid, 0, j - 1, a, b)?)
    } else {
        grid(a, b)
    }
}

pub fn mixed_multiplicities(
    i_ideal: &MonomialIdeal,
    j_ideal: &MonomialIdeal,
    n0: Option<i64>,
) -> Result<MixedTable> {
    let d = i_ideal.dim();
    if j_ideal.dim() != d {
        return Err(EngineError::DimensionMismatch {
            expected: d,
            got: j_ideal.dim(),
        });
    }
    if d > 3 {
        return Err(EngineError::UnsupportedDimension(d));
    }
    if !i_ideal.is_m_primary() || !j_ideal.is_m_primary() {
        return Err(EngineError::NotMPrimary(
            "mixed multiplicities need m-primary ideals".into(),
        ));
    }

    let max_coord = i_ideal
        .coord_maxima()
        .into_iter()
        .chain(j_ideal.coord_maxima())
        .max()
        .unwrap_or(1);
    let base_n0 = n0.unwrap_or_else(|| (2 * max_coord).max(1));

    let mut last_n0 = base_n0;
    for attempt in 0..3 {
        let n0 = base_n0 << attempt;
        last_n0 = n0;
        let span = d as i64 + 1;
        // Memoized grid of colengths on {n0..n0+span}^2.
        let mut cache: std::collections::BTreeMap<(i64, i64), i128> =
            std::collections::BTreeMap::new();
        for a in n0..=n0 + span {
            for b in n0..=n0 + span {
                cache.insert((a, b), grid_colength(i_ideal, j_ideal, a, b)? as i128);
            }
        }
        let grid = |a: i64, b: i64| -> Result<i128> {
            cache
                .get(&(a, b))
                .copied()
                .ok_or_else(|| EngineError::Internal("grid cache miss".into()))
        };

        let mut e = Vec::with_capacity(d + 1);
        let mut stable = true;
        for i in 0..=d as u32 {
            let at_n0 = difference(&grid, i, d as u32 - i, n0, n0)?;
            let at_n0_next = difference(&grid, i, d as u32 - i, n0 + 1, n0 + 1)?;
            if at_n0 != at_n0_next || at_n0 < 0 {
                stable = false;
                break;
            }
            e.push(at_n0 as u64);
        }
        if !stable {
            continue;
        }

        // Pure entries must match the covolume multiplicities exactly.
        let d_fact: i64 = (1..=d as i64).product();
        let e_i = NewtonPolyhedron::from_ideal(i_ideal)?.covolume()? * rat_int(d_fact);
        let e_j = NewtonPolyhedron::from_ideal(j_ideal)?.covolume()? * rat_int(d_fact);
        if e_i != rat_int(e[d] as i64) || e_j != rat_int(e[0] as i64) {
            continue;
        }

        return Ok(MixedTable {
            dim: d,
            i_ideal: i_ideal.clone(),
            j_ideal: j_ideal.clone(),
            e,
            window: (n0, span),
            stable: true,
        });
    }
    Err(EngineError::InterpolationUnstable(last_n0))
}

/// Hilbert-Samuel multiplicity e(I) = d! * covol(NP(I)).
pub fn hs_multiplicity(ideal: &MonomialIdeal) -> Result<u64> {
    let d = ideal.dim();
    let d_fact: i64 = (1..=d as i64).product();
    let v = NewtonPolyhedron::from_ideal(ideal)?.covolume()? * rat_int(d_fact);
    if !v.denom().is_one() || v.is_negative() {
        return Err(EngineError::Internal(format!(
            "multiplicity {v} is not a nonnegative integer"
        )));
    }
    v.numer()
        .to_u64()
        .ok_or_else(|| EngineError::Internal("multiplicity exceeds u64".into()))
}

#[derive(Debug, Clone)]
pub struct TeissierReport {
    pub table: MixedTable,
    /// (i, e_i^2, e_{i-1} e_{i+1}) for each interior index; the inequality
    /// e_i^2 <= e_{i-1} e_{i+1} is the direction confirmed by the exact
    /// computation.
    pub log_convexity_rows: Vec<(usize, u128, u128)>,
    pub log_convex: bool,
    /// e(IJ) and the binomial expansion sum_i C(d,i) e_i (must agree).
    pub product_multiplicity: u64,
    pub binomial_identity: bool,
    /// Minkowski inequality e(IJ)^{1/d} <= e(I)^{1/d} + e(J)^{1/d},
    /// certified by integer arithmetic.
    pub minkowski: bool,
    /// For p in {1,2,3}: (p, exhaustively minimal q with J^q in
    /// closure(I^p), per-i bound q^i e_i(J) >= p^i e_i(I) all holding).
    pub containment_rows: Vec<(u32, u32, bool)>,
    pub containment_bounds: bool,
    /// Mixed-multiplicity lower bounds on the exponent against m:
    /// (i, Loj_m(I)^i, e(I^[i], m^[d-i])), with the inequality >= exact.
    pub loj_bound_rows: Vec<(usize, Rat, u64)>,
    pub loj_bounds: bool,
}

pub fn check_teissier(i_ideal: &MonomialIdeal, j_ideal: &MonomialIdeal) -> Result<TeissierReport> {
    let table = mixed_multiplicities(i_ideal, j_ideal, None)?;
    let d = table.dim;
    let e = &table.e;

    let mut log_convexity_rows = Vec::new();
    let mut log_convex = true;
    for i in 1..d {
        let lhs = (e[i] as u128).pow(2);
        let rhs = e[i - 1] as u128 * e[i + 1] as u128;
        if lhs > rhs {
            log_convex = false;
        }
        log_convexity_rows.push((i, lhs, rhs));
    }

    let product = i_ideal.product(j_ideal)?;
    let product_multiplicity = hs_multiplicity(&product)?;
    let mut binom_sum: u128 = 0;
    for (i, &ei) in e.iter().enumerate() {
        binom_sum += binomial(d, i) as u128 * ei as u128;
    }
    let binomial_identity = binom_sum == product_multiplicity as u128;

    let minkowski = minkowski_inequality(d, product_multiplicity, e[d], e[0], e);

    // Containment bounds need the mixed tables against m.
    let m = MonomialIdeal::maximal(d);
    let table_im = mixed_multiplicities(i_ideal, &m, None)?;
    let table_jm = mixed_multiplicities(j_ideal, &m, None)?;
    let mut containment_rows = Vec::new();
    let mut containment_bounds = true;
    for p in 1..=3u32 {
        let mut q = 1u32;
        let q_min = loop {
            if contains_closure(j_ideal, q, i_ideal, p)?.member {
                break q;
            }
            q += 1;
            if q > 512 {
                return Err(EngineError::Internal(
                    "no containment threshold below 512".into(),
                ));
            }
        };
        let mut ok = true;
        for i in 1..=d {
            let lhs = BigInt::from(q_min).pow(i as u32) * BigInt::from(table_jm.e[i]);
            let rhs = BigInt::from(p).pow(i as u32) * BigInt::from(table_im.e[i]);
            if lhs < rhs {
                ok = false;
            }
        }
        if !ok {
            containment_bounds = false;
        }
        containment_rows.push((p, q_min, ok));
    }

    // Loj_m(I)^i >= e(I^[i], m^[d-i]) for all i (e_i of (m, m) is 1).
    let loj_m = loj_ideal(i_ideal, &m)?
        .value
        .as_finite()
        .expect("m-primary ideal")
        .clone();
    let mut loj_bound_rows = Vec::new();
    let mut loj_bounds = true;
    for i in 1..=d {
        let mut li = Rat::from_integer(1.into());
        for _ in 0..i {
            li *= loj_m.clone();
        }
        if li < rat_int(table_im.e[i] as i64) {
            loj_bounds = false;
        }
        loj_bound_rows.push((i, li, table_im.e[i]));
    }

    Ok(TeissierReport {
        table,
        log_convexity_rows,
        log_convex,
        product_multiplicity,
        binomial_identity,
        minkowski,
        containment_rows,
        containment_bounds,
        loj_bound_rows,
        loj_bounds,
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

/// Exact certificate for X^{1/d} <= A^{1/d} + B^{1/d}.
fn minkowski_inequality(d: usize, x: u64, a: u64, b: u64, e: &[u64]) -> bool {
    match d {
        1 => x <= a + b,
        2 => {
            // X <= A + B + 2 sqrt(AB): either X - A - B <= 0 or
            // (X - A - B)^2 <= 4AB.
            let t = x as i128 - a as i128 - b as i128;
            t <= 0 || t * t <= 4 * a as i128 * b as i128
        }
        3 => {
            // e_i^3 <= A^i B^{3-i} for the interior entries, combined with
            // the binomial identity e(IJ) = sum C(3,i) e_i, certifies
            // X <= (A^{1/3} + B^{1/3})^3 without extracting roots.
            let a = BigInt::from(a);
            let b = BigInt::from(b);
            (1..3).all(|i| {
                let lhs = BigInt::from(e[i]).pow(3);
                let rhs = a.pow(i as u32) * b.pow(3 - i as u32);
                lhs <= rhs
            })
        }
        _ => false,
    }
}

#[derive(Debug, Clone)]
pub struct MilnorReport {
    pub mu: u64,
    pub gradient_loj: Rat,
    /// (i, L^i as a rational, e_i(J(f))): the bound L^i >= e_i holds
    /// exactly. Populated for d <= 3 where mixed tables are available.
    pub bound_rows: Vec<(usize, Rat, u64)>,
    pub bounds_hold: bool,
}

/// Milnor number and gradient Lojasiewicz exponent for the Brieskorn
/// polynomial f = sum x_i^{a_i}, whose Jacobian ideal is the diagonal
/// monomial ideal (x_i^{a_i - 1}).
pub fn milnor_and_gradient(brieskorn_exponents: &[i64]) -> Result<MilnorReport> {
    if brieskorn_exponents.is_empty() {
        return Err(EngineError::InvalidInput("no exponents".into()));
    }
    if brieskorn_exponents.iter().any(|&a| a < 2) {
        return Err(EngineError::InvalidInput(
            "Brieskorn exponents must be >= 2".into(),
        ));
    }
    let d = brieskorn_exponents.len();
    let jac_exps: Vec<i64> = brieskorn_exponents.iter().map(|&a| a - 1).collect();
    let jac = MonomialIdeal::diagonal(&jac_exps)?;
    let mu = colength(&jac)?;
    let closed_form: u128 = jac_exps.iter().map(|&a| a as u128).product();
    if mu as u128 != closed_form {
        return Err(EngineError::Internal(
            "colength disagrees with the product formula".into(),
        ));
    }

    let m = MonomialIdeal::maximal(d);
    let loj = loj_ideal(&jac, &m)?;
    let gradient_loj = loj
        .value
        .as_finite()
        .expect("diagonal ideal is m-primary")
        .clone();

    let mut bound_rows = Vec::new();
    let mut bounds_hold = true;
    if d <= 3 {
        let table = mixed_multiplicities(&jac, &m, None)?;
        for i in 1..=d {
            let mut li = Rat::one();
            for _ in 0..i {
                li *= gradient_loj.clone();
            }
            if li < rat_int(table.e[i] as i64) {
                bounds_hold = false;
            }
            bound_rows.push((i, li, table.e[i]));
        }
    }

    Ok(MilnorReport {
        mu,
        gradient_loj,
        bound_rows,
        bounds_hold,
    })
}
