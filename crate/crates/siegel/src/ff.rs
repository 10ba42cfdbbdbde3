//! Table-driven arithmetic in the finite fields F_{p^n} used by the censuses.
//!
//! Elements are canonical indices in `[0, q)`: the index encodes the
//! coefficient vector of the residue polynomial in base `p`, so `0` and `1`
//! are the additive and multiplicative identities of every field.
//! Multiplication and inversion go through log/antilog tables with respect to
//! a fixed generator; addition is digitwise mod `p` (XOR when `p = 2`), with
//! a full addition table for small fields.
//!
//! The defining modulus of F_{p^n} is the lexicographically least monic
//! irreducible polynomial of degree `n` over F_p (coefficient vectors ordered
//! as base-`p` integers, constant digit last). Fixing this choice makes every
//! persisted census reproducible bit for bit.

use crate::error::{Error, Result};
use std::sync::atomic::{AtomicU64, Ordering};

pub const SMALL_PRIMES: [u32; 7] = [2, 3, 5, 7, 11, 13, 17];

/// Largest field size we ever construct (degree-12 extensions of F_2 are the
/// deepest the smoothness oracle goes; censuses stay below 17^3 = 4913).
pub const MAX_FIELD_SIZE: u64 = 65536;

/// Fields with `q` at most this get a full q x q addition table.
const ADD_TABLE_LIMIT: u64 = 2048;

static FIELD_IDS: AtomicU64 = AtomicU64::new(1);

/// An element tagged with the identity of its field, for the checked API.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Element {
    pub fid: u64,
    pub idx: u32,
}

/// A finite field F_{p^n} with all lookup tables built at construction.
/// Immutable afterwards and safe to share across worker threads.
pub struct Field {
    pub id: u64,
    pub p: u32,
    pub n: u32,
    pub q: u32,
    /// Monic defining polynomial, coefficients of 1, x, ..., x^n over F_p.
    pub modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add_tbl: Option<Vec<u32>>,
    qchar: Option<Vec<i8>>,
    tr2: Option<Vec<u8>>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F_{}^{} (q={})", self.p, self.n, self.q)
    }
}

fn is_prime(p: u32) -> bool {
    SMALL_PRIMES.contains(&p)
}

/// Construct F_{p^n}. See the module docs for the modulus convention.
pub fn make_field(p: u32, n: u32) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not one of the supported primes")));
    }
    if n == 0 {
        return Err(Error::domain("extension degree must be positive"));
    }
    let q = (p as u64).checked_pow(n).filter(|&q| q <= MAX_FIELD_SIZE);
    let q = q.ok_or_else(|| Error::BoundExceeded(format!("{p}^{n} exceeds the field size bound")))? as u32;

    let modulus = least_irreducible(p, n);
    let mut f = Field {
        id: FIELD_IDS.fetch_add(1, Ordering::Relaxed),
        p,
        n,
        q,
        modulus,
        exp: Vec::new(),
        log: Vec::new(),
        neg: Vec::new(),
        add_tbl: None,
        qchar: None,
        tr2: None,
    };
    f.build_tables();
    Ok(f)
}

/// Multiply two residue polynomials given as indices, reducing by `modulus`.
/// Slow path used only while building the tables.
fn mul_slow(p: u32, n: u32, modulus: &[u32], a: u32, b: u32) -> u32 {
    let da = digits(p, n, a);
    let db = digits(p, n, b);
    let mut prod = vec![0u32; (2 * n) as usize];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce by the monic modulus
    for k in (n as usize..prod.len()).rev() {
        let c = prod[k];
        if c != 0 {
            prod[k] = 0;
            for (i, &m) in modulus.iter().enumerate().take(n as usize) {
                let t = (p - m % p) % p; // -m mod p
                prod[k - n as usize + i] = (prod[k - n as usize + i] + c * t) % p;
            }
        }
    }
    undigits(p, &prod[..n as usize])
}

fn digits(p: u32, n: u32, mut a: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(n as usize);
    for _ in 0..n {
        d.push(a % p);
        a /= p;
    }
    d
}

fn undigits(p: u32, d: &[u32]) -> u32 {
    let mut a = 0u32;
    for &c in d.iter().rev() {
        a = a * p + c;
    }
    a
}

/// Rabin irreducibility test for a monic polynomial over F_p given by its
/// index encoding (see `least_irreducible`).
fn poly_is_irreducible(p: u32, n: u32, coeffs: &[u32]) -> bool {
    if n == 1 {
        return true;
    }
    // no roots is enough for degrees 2 and 3
    let eval = |x: u32| -> u32 {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = (acc * x as u64 + c as u64) % p as u64;
        }
        acc as u32
    };
    if (0..p).any(|x| eval(x) == 0) {
        return false;
    }
    if n <= 3 {
        return true;
    }
    // x^(p^k) mod f by iterated p-th powers in F_p[x]/(f)
    let modmul = |a: &[u32], b: &[u32]| -> Vec<u32> {
        let mut prod = vec![0u32; 2 * n as usize];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (n as usize..prod.len()).rev() {
            let c = prod[k];
            if c != 0 {
                prod[k] = 0;
                for i in 0..n as usize {
                    let t = (p - coeffs[i] % p) % p;
                    prod[k - n as usize + i] = (prod[k - n as usize + i] + c * t) % p;
                }
            }
        }
        prod.truncate(n as usize);
        prod
    };
    let pow_p = |a: &[u32]| -> Vec<u32> {
        let mut acc = vec![0u32; n as usize];
        acc[0] = 1;
        let mut base = a.to_vec();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = modmul(&acc, &base);
            }
            base = modmul(&base, &base);
            e >>= 1;
        }
        acc
    };
    let x = {
        let mut v = vec![0u32; n as usize];
        v[1] = 1;
        v
    };
    let mut frob = vec![x.clone()]; // frob[k] = x^(p^k) mod f
    for _ in 0..n {
        let last = frob.last().unwrap().clone();
        frob.push(pow_p(&last));
    }
    if frob[n as usize] != x {
        return false;
    }
    // gcd(x^(p^(n/r)) - x, f) must be constant for every prime r | n
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for r in primes {
        let k = (n / r) as usize;
        let mut diff = frob[k].clone();
        diff[1] = (diff[1] + p - 1) % p;
        if !gcd_is_constant(p, coeffs, &diff) {
            return false;
        }
    }
    true
}

/// gcd(f, g) over F_p where f is the monic modulus; true iff it is constant.
fn gcd_is_constant(p: u32, f: &[u32], g: &[u32]) -> bool {
    let trim = |v: &mut Vec<u32>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let inv_mod_p = |a: u32| -> u32 {
        (1..p).find(|&x| (a * x) % p == 1).unwrap()
    };
    let mut a: Vec<u32> = f.to_vec();
    let mut b: Vec<u32> = g.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lb = *b.last().unwrap();
        let ilb = inv_mod_p(lb);
        while a.len() >= b.len() && !a.is_empty() {
            let c = (*a.last().unwrap() * ilb) % p;
            if c != 0 {
                let shift = a.len() - b.len();
                for (i, &bc) in b.iter().enumerate() {
                    let t = (p - (c * bc) % p) % p;
                    a[shift + i] = (a[shift + i] + t) % p;
                }
            }
            trim(&mut a);
            if a.len() < b.len() {
                break;
            }
            if a.last() == Some(&0) {
                trim(&mut a);
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() <= 1
}

/// The lexicographically least monic irreducible of degree n over F_p.
fn least_irreducible(p: u32, n: u32) -> Vec<u32> {
    let count = (p as u64).pow(n);
    for lower in 0..count {
        let mut coeffs = digits(p, n, 0);
        let mut v = lower;
        for c in coeffs.iter_mut() {
            *c = (v % p as u64) as u32;
            v /= p as u64;
        }
        coeffs.push(1); // monic
        if poly_is_irreducible(p, n, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl Field {
    fn build_tables(&mut self) {
        let q = self.q as usize;
        let p = self.p;
        let n = self.n;
        let modulus = self.modulus.clone();

        // negation is digitwise
        self.neg = (0..self.q)
            .map(|a| {
                let d: Vec<u32> = digits(p, n, a).iter().map(|&c| (p - c) % p).collect();
                undigits(p, &d)
            })
            .collect();

        // find a generator of the multiplicative group
        let mut fac = Vec::new();
        let mut m = self.q - 1;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                fac.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            fac.push(m);
        }
        let pow = |a: u32, mut e: u32| -> u32 {
            let mut acc = 1u32;
            let mut base = a;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul_slow(p, n, &modulus, acc, base);
                }
                base = mul_slow(p, n, &modulus, base, base);
                e >>= 1;
            }
            acc
        };
        let gen = (2..self.q)
            .find(|&g| fac.iter().all(|&r| pow(g, (self.q - 1) / r) != 1))
            .unwrap_or(1); // q = 2 has trivial group

        let ord = (self.q - 1) as usize;
        let mut exp = vec![1u32; 2 * ord.max(1)];
        for i in 1..ord {
            exp[i] = mul_slow(p, n, &modulus, exp[i - 1], gen);
        }
        for i in ord..2 * ord.max(1) {
            exp[i] = exp[i - ord.max(1)];
        }
        let mut log = vec![u32::MAX; q];
        for (i, &e) in exp.iter().enumerate().take(ord.max(1)) {
            log[e as usize] = i as u32;
        }
        log[1] = 0;
        self.exp = exp;
        self.log = log;

        if (self.q as u64) * (self.q as u64) <= ADD_TABLE_LIMIT * ADD_TABLE_LIMIT && (self.q as u64) <= ADD_TABLE_LIMIT {
            let mut tbl = vec![0u32; q * q];
            for a in 0..self.q {
                let da = digits(p, n, a);
                for b in 0..=a {
                    let db = digits(p, n, b);
                    let ds: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                    let s = undigits(p, &ds);
                    tbl[(a as usize) * q + b as usize] = s;
                    tbl[(b as usize) * q + a as usize] = s;
                }
            }
            self.add_tbl = Some(tbl);
        }

        if p != 2 {
            // quadratic character by parity of the discrete log
            let mut chi = vec![0i8; q];
            for (i, &e) in self.exp.iter().enumerate().take(ord.max(1)) {
                chi[e as usize] = if i % 2 == 0 { 1 } else { -1 };
            }
            chi[0] = 0;
            self.qchar = Some(chi);
        } else {
            // absolute trace to F_2
            let mut tr = vec![0u8; q];
            for a in 0..self.q {
                let mut t = 0u32;
                let mut x = a;
                for _ in 0..n {
                    t = self.add_raw_slow(t, x);
                    x = mul_slow(p, n, &modulus, x, x);
                }
                tr[a as usize] = t as u8; // 0 or 1
            }
            self.tr2 = Some(tr);
        }
    }

    fn add_raw_slow(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let da = digits(self.p, self.n, a);
        let db = digits(self.p, self.n, b);
        let ds: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % self.p).collect();
        undigits(self.p, &ds)
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    /// Element from an integer, reduced into the prime subfield.
    #[inline]
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if let Some(t) = &self.add_tbl {
            return t[(a as usize) * self.q as usize + b as usize];
        }
        let p = self.p;
        let mut r = 0u32;
        let mut pw = 1u32;
        let (mut x, mut y) = (a, b);
        for _ in 0..self.n {
            let s = (x % p + y % p) % p;
            r += s * pw;
            pw *= p;
            x /= p;
            y /= p;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            a
        } else {
            self.neg[a as usize]
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        // logs are < q-1 and the antilog table is doubled, so no reduction needed
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let ord = (self.q - 1) as usize;
        let l = self.log[a as usize] as usize;
        Ok(self.exp[(ord - l) % ord.max(1)])
    }

    /// a^e with e any signed exponent (a != 0 when e < 0).
    pub fn pow(&self, a: u32, e: i64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let ord = (self.q - 1) as i64;
        if ord == 0 {
            return 1;
        }
        let l = self.log[a as usize] as i64;
        let k = (l * (e % ord)).rem_euclid(ord) as usize;
        self.exp[k]
    }

    /// Quadratic character of `a`: 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self, a: u32) -> Result<i8> {
        match &self.qchar {
            Some(chi) => Ok(chi[a as usize]),
            None => Err(Error::domain("quadratic character requires odd characteristic")),
        }
    }

    /// Absolute trace to F_2 in characteristic 2.
    pub fn absolute_trace(&self, a: u32) -> Result<u8> {
        match &self.tr2 {
            Some(tr) => Ok(tr[a as usize]),
            None => Err(Error::domain("absolute trace to F_2 requires characteristic 2")),
        }
    }

    // ---- checked element API -------------------------------------------

    pub fn el(&self, idx: u32) -> Element {
        assert!(idx < self.q);
        Element { fid: self.id, idx }
    }

    fn chk(&self, a: Element) -> Result<u32> {
        if a.fid != self.id {
            return Err(Error::FieldMismatch);
        }
        Ok(a.idx)
    }

    pub fn el_add(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.el(self.add(self.chk(a)?, self.chk(b)?)))
    }

    pub fn el_sub(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.el(self.sub(self.chk(a)?, self.chk(b)?)))
    }

    pub fn el_mul(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.el(self.mul(self.chk(a)?, self.chk(b)?)))
    }

    pub fn el_inv(&self, a: Element) -> Result<Element> {
        Ok(self.el(self.inv(self.chk(a)?)?))
    }

    pub fn el_pow(&self, a: Element, e: i64) -> Result<Element> {
        Ok(self.el(self.pow(self.chk(a)?, e)))
    }
}

/// The embedding F_q -> F_{q^k} as a lookup table on element indices.
///
/// The image of the subfield generator is the least root of the subfield
/// modulus in the big field, which pins the table deterministically. Ring
/// homomorphism and Frobenius equivariance are checked in the tests.
pub struct Embedding {
    pub sub_id: u64,
    pub sup_id: u64,
    pub map: Vec<u32>,
}

pub fn embed_field(sub: &Field, sup: &Field) -> Result<Embedding> {
    if sup.p != sub.p || sup.n % sub.n != 0 {
        return Err(Error::domain(format!(
            "no embedding F_{} -> F_{}",
            sub.q, sup.q
        )));
    }
    // least root of the subfield modulus inside the big field
    let root = (0..sup.q)
        .find(|&t| {
            let mut acc = 0u32;
            for &c in sub.modulus.iter().rev() {
                acc = sup.add(sup.mul(acc, t), c); // prime-field constants share indices
            }
            acc == 0
        })
        .ok_or_else(|| Error::domain("modulus has no root in the extension"))?;
    let map = (0..sub.q)
        .map(|a| {
            let d = digits(sub.p, sub.n, a);
            let mut acc = 0u32;
            for &c in d.iter().rev() {
                acc = sup.add(sup.mul(acc, root), c);
            }
            acc
        })
        .collect();
    Ok(Embedding {
        sub_id: sub.id,
        sup_id: sup.id,
        map,
    })
}

/// A base field together with its degree-2 and degree-3 extensions and the
/// embedding tables, as needed when counting points over F_q, F_{q^2}, F_{q^3}.
pub struct Tower {
    pub base: Field,
    pub ext2: Field,
    pub ext3: Field,
    pub emb2: Embedding,
    pub emb3: Embedding,
}

pub fn make_tower(p: u32, n: u32) -> Result<Tower> {
    let base = make_field(p, n)?;
    let ext2 = make_field(p, 2 * n)?;
    let ext3 = make_field(p, 3 * n)?;
    let emb2 = embed_field(&base, &ext2)?;
    let emb3 = embed_field(&base, &ext3)?;
    Ok(Tower {
        base,
        ext2,
        ext3,
        emb2,
        emb3,
    })
}
