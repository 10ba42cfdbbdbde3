//! Dense univariate polynomials over a [`Field`](crate::ff::Field), with the
//! gcd, derivative and chart-flipping helpers the curve filters need.
//! Coefficients are element indices; `coeffs[i]` multiplies `x^i` and the
//! vector carries no trailing zeros.

use crate::ff::{Embedding, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<u32>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn from_coeffs(mut c: Vec<u32>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with deg 0 = -1 for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn lc(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut c = vec![0u32; n];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = f.add(self.coeff(i), other.coeff(i));
        }
        Poly::from_coeffs(c)
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut c = vec![0u32; n];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = f.sub(self.coeff(i), other.coeff(i));
        }
        Poly::from_coeffs(c)
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0u32; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                if b != 0 {
                    c[i + j] = f.add(c[i + j], f.mul(a, b));
                }
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, f: &Field, s: u32) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&c| f.mul(c, s)).collect())
    }

    /// Formal derivative (multiplying by the exponent mod p).
    pub fn derivative(&self, f: &Field) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        let mut c = vec![0u32; self.0.len() - 1];
        for (i, slot) in c.iter_mut().enumerate() {
            let m = f.from_int((i as i64) + 1);
            *slot = f.mul(self.0[i + 1], m);
        }
        Poly::from_coeffs(c)
    }

    pub fn eval(&self, f: &Field, x: u32) -> u32 {
        let mut acc = 0u32;
        for &c in self.0.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Evaluate in an extension field after mapping the coefficients.
    pub fn eval_embedded(&self, sup: &Field, emb: &Embedding, x: u32) -> u32 {
        let mut acc = 0u32;
        for &c in self.0.iter().rev() {
            acc = sup.add(sup.mul(acc, x), emb.map[c as usize]);
        }
        acc
    }

    /// x^bound * p(1/x): the coefficient vector reversed within `bound + 1` slots.
    /// Requires deg <= bound.
    pub fn reverse(&self, bound: usize) -> Poly {
        let mut c = vec![0u32; bound + 1];
        for (i, &a) in self.0.iter().enumerate() {
            c[bound - i] = a;
        }
        Poly::from_coeffs(c)
    }

    /// Remainder of self by a nonzero divisor.
    pub fn rem(&self, f: &Field, div: &Poly) -> Poly {
        assert!(!div.is_zero());
        let mut r = self.clone();
        let dl = div.0.len();
        let ilc = f.inv(div.lc()).expect("nonzero leading coefficient");
        while r.0.len() >= dl {
            let c = f.mul(r.lc(), ilc);
            let shift = r.0.len() - dl;
            for (i, &dc) in div.0.iter().enumerate() {
                r.0[shift + i] = f.sub(r.0[shift + i], f.mul(c, dc));
            }
            while r.0.last() == Some(&0) {
                r.0.pop();
            }
        }
        r
    }

    pub fn gcd(&self, f: &Field, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        if !a.is_zero() {
            let ilc = f.inv(a.lc()).unwrap();
            a = a.scale(f, ilc);
        }
        a
    }

    /// Square-free test via gcd(p, p'); the derivative vanishing identically
    /// means p is a p-th power, which is never square-free in degree >= 1.
    pub fn is_squarefree(&self, f: &Field) -> bool {
        if self.is_constant() {
            return true;
        }
        let d = self.derivative(f);
        if d.is_zero() {
            return false;
        }
        self.gcd(f, &d).is_constant()
    }
}

#[allow(clippy::len_without_is_empty)]
impl Poly {
    pub fn len(&self) -> usize {
        self.0.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_field;

    #[test]
    fn gcd_and_squarefree() {
        let f3 = make_field(3, 1).unwrap();
        // x^5 + 1 over F_3: gcd with derivative 2x^4 is constant
        let p = Poly::from_coeffs(vec![1, 0, 0, 0, 0, 1]);
        assert!(p.is_squarefree(&f3));
        // x^6 = (x^3)^2 is not
        let p6 = Poly::from_coeffs(vec![0, 0, 0, 0, 0, 0, 1]);
        assert!(!p6.is_squarefree(&f3));
        // (x+1)^2 (x+2) has gcd of positive degree
        let sq = Poly::from_coeffs(vec![1, 1]);
        let lin = Poly::from_coeffs(vec![2, 1]);
        let prod = sq.mul(&f3, &sq).mul(&f3, &lin);
        assert!(!prod.is_squarefree(&f3));
        assert_eq!(prod.gcd(&f3, &prod.derivative(&f3)).deg(), 1);
    }

    #[test]
    fn reverse_is_an_involution_on_full_degree() {
        let f2 = make_field(2, 1).unwrap();
        let p = Poly::from_coeffs(vec![1, 0, 1, 1]);
        let r = p.reverse(3);
        assert_eq!(r.reverse(3), p);
        let _ = &f2;
    }

    #[test]
    fn char2_derivative_keeps_odd_exponents() {
        let f2 = make_field(2, 1).unwrap();
        // x^4 + x^3 + x -> 3x^2 + 1 = x^2 + 1
        let p = Poly::from_coeffs(vec![0, 1, 0, 1, 1]);
        assert_eq!(p.derivative(&f2), Poly::from_coeffs(vec![1, 0, 1]));
    }
}
