//! Independent reference computations used to validate the fast paths.
//!
//! Everything here is deliberately naive: a Weyl-formula character evaluator,
//! brute-force point counts, and exhaustive singular-point searches. The
//! production code never calls these; tests and `selfcheck` compare against
//! them.

use crate::ff::{embed_field, make_field, Field};
use crate::poly::Poly;
use crate::symplectic::LocalSystem;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Weyl character formula for Sp(2g), homogenized: the eigenvalue alphabet is
/// {x_i, t/x_i} and
///
/// ```text
///   chi_lambda = det( x_i^(m_j) - (t/x_i)^(m_j) ) / det( x_i^(d_j) - (t/x_i)^(d_j) )
/// ```
///
/// with m_j = lambda_j + g - j + 1 and d_j = g - j + 1. Returns `None` when
/// the denominator vanishes at the chosen point.
pub fn weyl_character(lambda: &LocalSystem, xs: &[BigRational], t: &BigRational) -> Option<BigRational> {
    let g = lambda.g;
    assert_eq!(xs.len(), g);
    let entry = |x: &BigRational, m: u32| -> BigRational {
        let mut xp = BigRational::one();
        let mut yp = BigRational::one();
        let y = t / x;
        for _ in 0..m {
            xp *= x;
            yp *= &y;
        }
        xp - yp
    };
    let det = |m: &Vec<Vec<BigRational>>| -> BigRational {
        match g {
            1 => m[0][0].clone(),
            2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
            3 => {
                let a = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
                let b = &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0]);
                let c = &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
                a - b + c
            }
            _ => unreachable!(),
        }
    };
    let num: Vec<Vec<BigRational>> = (0..g)
        .map(|i| {
            (0..g)
                .map(|j| entry(&xs[i], lambda.parts[j] + (g - j) as u32))
                .collect()
        })
        .collect();
    let den: Vec<Vec<BigRational>> = (0..g)
        .map(|i| (0..g).map(|j| entry(&xs[i], (g - j) as u32)).collect())
        .collect();
    let d = det(&den);
    if d.is_zero() {
        return None;
    }
    Some(det(&num) / d)
}

/// Power sums of the alphabet {x_i, t/x_i}, the cell coordinates matching a
/// Weyl evaluation point.
pub fn alphabet_power_sums(xs: &[BigRational], t: &BigRational, upto: usize) -> Vec<BigRational> {
    (1..=upto)
        .map(|k| {
            xs.iter()
                .map(|x| {
                    let mut xp = BigRational::one();
                    let mut yp = BigRational::one();
                    let y = t / x;
                    for _ in 0..k {
                        xp *= x;
                        yp *= &y;
                    }
                    xp + yp
                })
                .sum()
        })
        .collect()
}

/// |C(F_q)| for y^2 = f(x) by looping over both coordinates, odd
/// characteristic. Counts the smooth-model points at infinity from the
/// flipped chart: one point if deg f = 2g+1, 1 + chi(lc) if deg f = 2g+2.
pub fn count_hyperelliptic_naive(f: &Field, fx: &Poly, g: u32) -> u64 {
    assert!(f.p != 2);
    let mut n = 0u64;
    for x in 0..f.q {
        let v = fx.eval(f, x);
        for y in 0..f.q {
            if f.mul(y, y) == v {
                n += 1;
            }
        }
    }
    let d = 2 * g as i64 + 2;
    let lc = fx.coeff(d as usize - 1); // coefficient of x^(2g+1)
    let top = fx.coeff(d as usize);
    if top != 0 {
        n += match f.quadratic_character(top).unwrap() {
            1 => 2,
            0 => unreachable!(),
            _ => 0,
        };
    } else if lc != 0 || fx.deg() == d - 1 {
        n += 1;
    } else {
        // degree below 2g+1 is not a valid model; still count the flipped fiber
        n += 1;
    }
    n
}

/// Number of projective zeros of a quartic over F_{q^i} by trying every point.
pub fn count_quartic_naive(fq: &Field, coeffs: &[u32; 15], i: u32) -> u64 {
    let sup = make_field(fq.p, fq.n * i).unwrap();
    let emb = embed_field(fq, &sup).unwrap();
    let c: Vec<u32> = coeffs.iter().map(|&x| emb.map[x as usize]).collect();
    let mut n = 0u64;
    let eval = |x: u32, y: u32, z: u32| -> u32 {
        let mut acc = 0;
        for (t, &(i, j, k)) in QUARTIC_EXPONENTS.iter().enumerate() {
            if c[t] == 0 {
                continue;
            }
            let m = sup.mul(sup.mul(sup.pow(x, i as i64), sup.pow(y, j as i64)), sup.pow(z, k as i64));
            acc = sup.add(acc, sup.mul(c[t], m));
        }
        acc
    };
    if eval(0, 0, 1) == 0 {
        n += 1;
    }
    for z in 0..sup.q {
        if eval(0, 1, z) == 0 {
            n += 1;
        }
    }
    for y in 0..sup.q {
        for z in 0..sup.q {
            if eval(1, y, z) == 0 {
                n += 1;
            }
        }
    }
    n
}

/// Exponent triples of the 15 degree-4 monomials in (x, y, z), in the fixed
/// enumeration order shared with [`crate::census`].
pub const QUARTIC_EXPONENTS: [(u32, u32, u32); 15] = [
    (4, 0, 0),
    (3, 1, 0),
    (3, 0, 1),
    (2, 2, 0),
    (2, 1, 1),
    (2, 0, 2),
    (1, 3, 0),
    (1, 2, 1),
    (1, 1, 2),
    (1, 0, 3),
    (0, 4, 0),
    (0, 3, 1),
    (0, 2, 2),
    (0, 1, 3),
    (0, 0, 4),
];

/// Exhaustive search for a singular point of the quartic with coordinates in
/// F_{q^k} for any k <= max_k. A singular point is a common projective zero
/// of F and its three partials.
pub fn quartic_has_singular_point_upto(fq: &Field, coeffs: &[u32; 15], max_k: u32) -> bool {
    for k in 1..=max_k {
        let sup = make_field(fq.p, fq.n * k).unwrap();
        let emb = embed_field(fq, &sup).unwrap();
        let c: Vec<u32> = coeffs.iter().map(|&x| emb.map[x as usize]).collect();
        let mut dx = vec![0u32; 15];
        let mut dy = vec![0u32; 15];
        let mut dz = vec![0u32; 15];
        for (t, &(i, j, kk)) in QUARTIC_EXPONENTS.iter().enumerate() {
            dx[t] = sup.mul(c[t], sup.from_int(i as i64));
            dy[t] = sup.mul(c[t], sup.from_int(j as i64));
            dz[t] = sup.mul(c[t], sup.from_int(kk as i64));
        }
        let eval = |cs: &[u32], x: u32, y: u32, z: u32, shift: usize| -> u32 {
            // shift: 0 evaluates F, 1/2/3 evaluates dF/dx|dy|dz with exponent dropped
            let mut acc = 0;
            for (t, &(i, j, kk)) in QUARTIC_EXPONENTS.iter().enumerate() {
                if cs[t] == 0 {
                    continue;
                }
                let (ei, ej, ek) = match shift {
                    0 => (i, j, kk),
                    1 => (i - 1, j, kk),
                    2 => (i, j - 1, kk),
                    _ => (i, j, kk - 1),
                };
                let m = sup.mul(sup.mul(sup.pow(x, ei as i64), sup.pow(y, ej as i64)), sup.pow(z, ek as i64));
                acc = sup.add(acc, sup.mul(cs[t], m));
            }
            acc
        };
        // dx has entries only where i >= 1, so the shifted exponent is safe;
        // same for dy, dz. Zero entries are skipped before shifting.
        let singular_at = |x: u32, y: u32, z: u32| -> bool {
            eval(&c, x, y, z, 0) == 0
                && eval(&dx, x, y, z, 1) == 0
                && eval(&dy, x, y, z, 2) == 0
                && eval(&dz, x, y, z, 3) == 0
        };
        if singular_at(0, 0, 1) {
            return true;
        }
        for z in 0..sup.q {
            if singular_at(0, 1, z) {
                return true;
            }
        }
        for y in 0..sup.q {
            for z in 0..sup.q {
                if singular_at(1, y, z) {
                    return true;
                }
            }
        }
    }
    false
}

/// Truncated expansion of q * prod (1 - q^n)^24: the n-th coefficient is the
/// tau value used as the weight-12 Hecke oracle.
pub fn delta_q_expansion(order: usize) -> Vec<BigInt> {
    // coefficients of prod_{n=1..order} (1 - x^n)^24 up to x^order
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for n in 1..=order {
        for _ in 0..24 {
            // multiply by (1 - x^n)
            for i in (n..=order).rev() {
                let t = c[i - n].clone();
                c[i] -= t;
            }
        }
    }
    // shift by one power: coefficient of q^m in Delta is c[m-1]
    let mut tau = vec![BigInt::zero(); order + 2];
    for (i, v) in c.into_iter().enumerate() {
        if i + 1 <= order + 1 {
            tau[i + 1] = v;
        }
    }
    tau
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{sp_value_rational, LocalSystem};
    use rand::{Rng, SeedableRng};

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn weyl_matches_determinant_on_random_points() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for g in 1..=3usize {
            let mut partitions = Vec::new();
            for a in 0..=8u32 {
                for b in 0..=a.min(if g >= 2 { 8 } else { 0 }) {
                    for c in 0..=b.min(if g >= 3 { 8 } else { 0 }) {
                        let parts = match g {
                            1 => vec![a],
                            2 => vec![a, b],
                            _ => vec![a, b, c],
                        };
                        partitions.push(LocalSystem::new(g, parts).unwrap());
                    }
                }
            }
            for _ in 0..12 {
                let xs: Vec<BigRational> = (0..g).map(|_| rat(rng.gen_range(1..40))).collect();
                let t = rat(rng.gen_range(1..40));
                let ps = alphabet_power_sums(&xs, &t, g);
                for lambda in &partitions {
                    if let Some(w) = weyl_character(lambda, &xs, &t) {
                        let d = sp_value_rational(lambda, &ps, &t);
                        assert_eq!(w, d, "lambda={:?} xs={:?} t={}", lambda.parts, xs, t);
                    }
                }
            }
        }
    }

    #[test]
    fn delta_tau_values() {
        let tau = delta_q_expansion(17);
        assert_eq!(tau[1], BigInt::from(1));
        assert_eq!(tau[2], BigInt::from(-24));
        assert_eq!(tau[3], BigInt::from(252));
        assert_eq!(tau[5], BigInt::from(4830));
        assert_eq!(tau[7], BigInt::from(-16744));
        assert_eq!(tau[11], BigInt::from(534612));
        assert_eq!(tau[13], BigInt::from(-577738));
        assert_eq!(tau[17], BigInt::from(-6905934));
    }
}
