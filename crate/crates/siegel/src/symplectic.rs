//! Symplectic characters evaluated at Frobenius data.
//!
//! A point of one of the censuses carries the traces (a_1, a_2, a_3) of the
//! q-power Frobenius iterates on H^1 of a curve or abelian variety of
//! dimension g. The 2g Frobenius eigenvalues pair up into alpha * beta = q,
//! so Newton's identities plus that functional equation recover all
//! elementary symmetric functions e_1, ..., e_2g from the first g power sums.
//!
//! The trace of Frobenius on the stalk of the local system V_lambda is the
//! irreducible Sp(2g) character of highest weight lambda, homogenized so that
//! the eigenvalue alphabet is {alpha_i, q/alpha_i}. We evaluate it by the
//! symplectic Jacobi-Trudi determinant
//!
//! ```text
//!   chi_lambda = 1/2 * det( h_{l_i - i + j} + q^(j-1) * h_{l_i - i - j + 2} )
//! ```
//!
//! over 1 <= i, j <= len(lambda), where h_m is the complete homogeneous
//! symmetric function of the full 2g-eigenvalue alphabet and h_m = 0 for
//! m < 0. The q-power keeps every entry homogeneous of weight l_i - i + j.
//! An independent Weyl-formula evaluation lives in [`crate::oracle`] and the
//! two are compared on random exact points in the tests and in `selfcheck`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Highest weight of a symplectic local system: a partition with at most
/// g parts, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalSystem {
    pub g: usize,
    pub parts: Vec<u32>,
}

/// Genus-3 partition weights beyond this are refused (the censuses are only
/// meaningful well below it, and determinant indices stay bounded).
pub const MAX_WEIGHT_G3: u32 = 60;

impl LocalSystem {
    pub fn new(g: usize, parts: Vec<u32>) -> Result<Self> {
        if g == 0 || g > 3 || parts.len() > g {
            return Err(Error::domain(format!("bad local system for genus {g}: {parts:?}")));
        }
        let mut p = parts;
        p.resize(g, 0);
        if p.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("parts not weakly decreasing: {p:?}")));
        }
        if g == 3 && p.iter().sum::<u32>() > MAX_WEIGHT_G3 {
            return Err(Error::BoundExceeded(format!("|lambda| > {MAX_WEIGHT_G3} for genus 3")));
        }
        Ok(LocalSystem { g, parts: p })
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The vector-valued Siegel weight (l_1 - l_2, ..., l_{g-1} - l_g, l_g + g + 1).
    pub fn siegel_weight(&self) -> Vec<u32> {
        let mut n = Vec::with_capacity(self.g);
        for i in 0..self.g - 1 {
            n.push(self.parts[i] - self.parts[i + 1]);
        }
        n.push(self.parts[self.g - 1] + self.g as u32 + 1);
        n
    }
}

/// Elementary symmetric functions of all 2g Frobenius eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaCoefficients {
    pub g: usize,
    /// e[0] = 1, e[1], ..., e[2g].
    pub e: Vec<BigInt>,
}

/// Frobenius traces (a_1, a_2, a_3) on H^1, genus, and the base field size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrobCell {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
}

impl FrobCell {
    pub fn new(a1: i64, a2: i64, a3: i64) -> Self {
        FrobCell { a1, a2, a3 }
    }

    /// Weil bound a_i^2 <= 4 g^2 q^i, checked in exact integer arithmetic.
    pub fn satisfies_weil(&self, g: u32, q: u32) -> bool {
        let q = q as i128;
        let b = (2 * g) as i128;
        let ok = |a: i64, i: u32| (a as i128) * (a as i128) <= b * b * q.pow(i);
        ok(self.a1, 1) && ok(self.a2, 2) && ok(self.a3, 3)
    }
}

/// Newton's identities on the power sums a_1..a_g, completed by the
/// functional equation e_{2g-k} = q^{g-k} e_k. Exactness of the divisions is
/// part of the contract: a failure means the cell is corrupt.
pub fn zeta_coeffs(cell: &FrobCell, g: usize, q: u32) -> Result<ZetaCoefficients> {
    if g == 0 || g > 3 {
        return Err(Error::domain("genus must be 1, 2 or 3"));
    }
    let p1 = BigInt::from(cell.a1);
    let p2 = BigInt::from(cell.a2);
    let p3 = BigInt::from(cell.a3);
    let mut e = vec![BigInt::one(); 1];
    // e1 = p1; e2 = (p1^2 - p2)/2; e3 = (p1^3 - 3 p1 p2 + 2 p3)/6
    e.push(p1.clone());
    if g >= 2 {
        let num = &p1 * &p1 - &p2;
        if (&num % 2) != BigInt::zero() {
            return Err(Error::NonIntegral("e2".into()));
        }
        e.push(num / 2);
    }
    if g >= 3 {
        let num = &p1 * &p1 * &p1 - 3 * &p1 * &p2 + 2 * &p3;
        if (&num % 6) != BigInt::zero() {
            return Err(Error::NonIntegral("e3".into()));
        }
        e.push(num / 6);
    }
    let qb = BigInt::from(q);
    for k in (0..g).rev() {
        // e_{2g-k} = q^{g-k} e_k
        let val = qb.pow((g - k) as u32) * &e[k];
        e.push(val);
    }
    debug_assert_eq!(e.len(), 2 * g + 1);
    Ok(ZetaCoefficients { g, e })
}

/// h_0, ..., h_max of the eigenvalue alphabet from its elementary symmetric
/// functions: h_m = sum_{k=1..min(m,2g)} (-1)^(k-1) e_k h_{m-k}.
pub fn complete_homogeneous(ec: &ZetaCoefficients, max: usize) -> Vec<BigInt> {
    let mut h = Vec::with_capacity(max + 1);
    h.push(BigInt::one());
    for m in 1..=max {
        let mut acc = BigInt::zero();
        for k in 1..=m.min(2 * ec.g) {
            let term = &ec.e[k] * &h[m - k];
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h.push(acc);
    }
    h
}

fn det(m: &[Vec<BigRational>]) -> BigRational {
    match m.len() {
        0 => BigRational::from_integer(2.into()), // empty character convention
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        3 => {
            let a = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
            let b = &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0]);
            let c = &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
            a - b + c
        }
        _ => unreachable!("partitions have at most 3 parts"),
    }
}

/// Rational-arithmetic core of the character evaluation. Power sums and q may
/// be rational so that the Weyl-formula comparison can run on random exact
/// points; census evaluation always passes integers.
pub fn sp_value_rational(
    lambda: &LocalSystem,
    power_sums: &[BigRational],
    q: &BigRational,
) -> BigRational {
    let g = lambda.g;
    assert_eq!(power_sums.len(), g);
    // elementary symmetric functions over Q, same recurrences as zeta_coeffs
    let mut e: Vec<BigRational> = vec![BigRational::one()];
    e.push(power_sums[0].clone());
    if g >= 2 {
        let v = (&power_sums[0] * &power_sums[0] - &power_sums[1]) / BigRational::from_integer(2.into());
        e.push(v);
    }
    if g >= 3 {
        let p1 = &power_sums[0];
        let v = (p1 * p1 * p1 - BigRational::from_integer(3.into()) * p1 * &power_sums[1]
            + BigRational::from_integer(2.into()) * &power_sums[2])
            / BigRational::from_integer(6.into());
        e.push(v);
    }
    for k in (0..g).rev() {
        let mut qe = e[k].clone();
        for _ in 0..g - k {
            qe *= q;
        }
        e.push(qe);
    }

    let ell = lambda.parts.iter().filter(|&&p| p > 0).count();
    if ell == 0 {
        return BigRational::one();
    }
    let max_idx = (lambda.parts[0] as usize) + ell; // l_1 - 1 + ell is the largest index
    let mut h: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=max_idx {
        let mut acc = BigRational::zero();
        for k in 1..=m.min(2 * g) {
            let term = &e[k] * &h[m - k];
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h.push(acc);
    }
    let hh = |i: i64| -> BigRational {
        if i < 0 {
            BigRational::zero()
        } else {
            h[i as usize].clone()
        }
    };
    let mut qpow: Vec<BigRational> = vec![BigRational::one()];
    for _ in 0..ell {
        qpow.push(qpow.last().unwrap() * q);
    }
    let mut m = vec![vec![BigRational::zero(); ell]; ell];
    for (i, row) in m.iter_mut().enumerate() {
        let li = lambda.parts[i] as i64;
        for (j, entry) in row.iter_mut().enumerate() {
            let i1 = li - (i as i64 + 1) + (j as i64 + 1);
            let i2 = li - (i as i64 + 1) - (j as i64 + 1) + 2;
            *entry = hh(i1) + &qpow[j] * hh(i2);
        }
    }
    det(&m) / BigRational::from_integer(2.into())
}

/// The trace of Frobenius on the stalk of V_lambda at a cell: the homogenized
/// Sp(2g) character of highest weight lambda evaluated at the cell's
/// eigenvalue data, an exact integer.
pub fn sp_character(lambda: &LocalSystem, cell: &FrobCell, q: u32) -> Result<BigInt> {
    // validate integrality of the zeta coefficients on the way
    let _ = zeta_coeffs(cell, lambda.g, q)?;
    let ps: Vec<BigRational> = [cell.a1, cell.a2, cell.a3][..lambda.g]
        .iter()
        .map(|&a| BigRational::from_integer(a.into()))
        .collect();
    let v = sp_value_rational(lambda, &ps, &BigRational::from_integer(q.into()));
    if !v.is_integer() {
        return Err(Error::NonIntegral(format!("sp_character at {cell:?}")));
    }
    Ok(v.to_integer())
}

/// Convenience: the character as a function of integer power sums, exposed
/// for genus-1/2 callers that build cells on the fly.
pub fn sp_character_parts(g: usize, parts: &[u32], cell: &FrobCell, q: u32) -> Result<BigInt> {
    sp_character(&LocalSystem::new(g, parts.to_vec())?, cell, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ls(g: usize, parts: &[u32]) -> LocalSystem {
        LocalSystem::new(g, parts.to_vec()).unwrap()
    }

    #[test]
    fn siegel_weight_examples() {
        assert_eq!(ls(3, &[11, 5, 2]).siegel_weight(), vec![6, 3, 6]);
        assert_eq!(ls(2, &[11, 7]).siegel_weight(), vec![4, 10]);
        assert_eq!(ls(1, &[10]).siegel_weight(), vec![12]);
    }

    #[test]
    fn zeta_coeffs_examples() {
        let z = zeta_coeffs(&FrobCell::new(0, 0, 0), 3, 5).unwrap();
        let want: Vec<i64> = vec![1, 0, 0, 0, 0, 0, 125];
        assert_eq!(z.e, want.into_iter().map(BigInt::from).collect::<Vec<_>>());

        let z = zeta_coeffs(&FrobCell::new(3, 0, 0), 1, 7).unwrap();
        assert_eq!(z.e, vec![BigInt::from(1), BigInt::from(3), BigInt::from(7)]);

        let z = zeta_coeffs(&FrobCell::new(1, 1, 1), 3, 2).unwrap();
        let want: Vec<i64> = vec![1, 1, 0, 0, 0, 4, 8];
        assert_eq!(z.e, want.into_iter().map(BigInt::from).collect::<Vec<_>>());

        // functional equation e_{2g-k} = q^{g-k} e_k
        let z = zeta_coeffs(&FrobCell::new(2, 6, 5), 3, 3).unwrap();
        for k in 0..=3usize {
            assert_eq!(z.e[6 - k], BigInt::from(3).pow((3 - k) as u32) * &z.e[k]);
        }

        assert!(zeta_coeffs(&FrobCell::new(1, 0, 0), 2, 3).is_err()); // e2 not integral
    }

    #[test]
    fn complete_homogeneous_newton() {
        let z = zeta_coeffs(&FrobCell::new(2, 2, 2), 3, 2).unwrap();
        let h = complete_homogeneous(&z, 3);
        assert_eq!(h[0], BigInt::one());
        assert_eq!(h[1], z.e[1]);
        assert_eq!(h[2], &z.e[1] * &z.e[1] - &z.e[2]);
    }

    #[test]
    fn genus1_h_is_symmetric_power_trace() {
        // alphabet {alpha, q/alpha} with alpha = 3, q = 6: power sums via direct arithmetic
        let (alpha, q) = (3i64, 6i64);
        let beta = q / alpha;
        let cell = FrobCell::new(alpha + beta, alpha * alpha + beta * beta, alpha.pow(3) + beta.pow(3));
        for a in 0..8u32 {
            let want: i64 = (0..=a as i64)
                .map(|i| alpha.pow((a as i64 - i) as u32) * beta.pow(i as u32))
                .sum();
            let got = sp_character(&ls(1, &[a]), &cell, q as u32).unwrap();
            assert_eq!(got, BigInt::from(want), "Sym^{a}");
        }
    }

    #[test]
    fn small_characters() {
        let cell = FrobCell::new(5, 11, 20);
        let q = 4;
        assert_eq!(sp_character(&ls(3, &[0, 0, 0]), &cell, q).unwrap(), BigInt::one());
        assert_eq!(sp_character(&ls(3, &[1, 0, 0]), &cell, q).unwrap(), BigInt::from(5));
        // Lambda^2 V = V_{1,1,0} + V_0(-1): chi_{1,1} = (a1^2 - a2)/2 - q
        assert_eq!(
            sp_character(&ls(3, &[1, 1, 0]), &cell, q).unwrap(),
            BigInt::from((5 * 5 - 11) / 2 - 4)
        );
    }

    #[test]
    fn weyl_dimension_at_identity() {
        // the identity cell has all 2g eigenvalues 1, so a_i = 2g and q = 1
        let dims: &[(&[u32], i64)] = &[
            (&[1, 1, 0], 14),
            (&[1, 0, 0], 6),
            (&[1, 1, 1], 14),
            (&[2, 0, 0], 21),
            (&[2, 1, 1], 64),
        ];
        let cell = FrobCell::new(6, 6, 6);
        for (parts, d) in dims {
            assert_eq!(sp_character(&ls(3, parts), &cell, 1).unwrap(), BigInt::from(*d));
        }
    }

    #[test]
    fn tensor_square_decomposition() {
        // chi_1 * chi_1 = chi_2 + chi_{1,1} + q on arbitrary cells
        for (cell, q) in [
            (FrobCell::new(3, 5, 9), 3u32),
            (FrobCell::new(0, 2, 6), 2),
            (FrobCell::new(-4, 10, -10), 5),
        ] {
            let c1 = sp_character(&ls(3, &[1, 0, 0]), &cell, q).unwrap();
            let c2 = sp_character(&ls(3, &[2, 0, 0]), &cell, q).unwrap();
            let c11 = sp_character(&ls(3, &[1, 1, 0]), &cell, q).unwrap();
            assert_eq!(&c1 * &c1, c2 + c11 + BigInt::from(q));
        }
    }

    #[test]
    fn homogeneity() {
        let lambda = ls(3, &[4, 2, 0]);
        let (a1, a2, a3, q) = (3i64, -1i64, 6i64, 3u32);
        let base = sp_character(&lambda, &FrobCell::new(a1, a2, a3), q).unwrap();
        for c in [2i64, 3, 5] {
            let scaled = FrobCell::new(c * a1, c * c * a2, c * c * c * a3);
            let got = sp_character(&lambda, &scaled, (c * c * q as i64) as u32).unwrap();
            assert_eq!(got, BigInt::from(c).pow(lambda.weight()) * &base);
        }
    }

    #[test]
    fn weil_bound_check() {
        assert!(FrobCell::new(4, 8, 10).satisfies_weil(1, 4));
        assert!(!FrobCell::new(5, 0, 0).satisfies_weil(1, 4));
    }
}
