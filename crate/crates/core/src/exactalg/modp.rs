//! Dense polynomials over a small prime field F_p (p < 2^32).

use num_bigint::BigUint;
use rand::Rng;

pub(crate) type PolyP = Vec<u64>;

pub(crate) fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_u64(a, p - 2, p)
}

pub(crate) fn deg(a: &PolyP) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn add(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
            .collect(),
    )
}

pub(crate) fn sub(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p)
            .collect(),
    )
}

pub(crate) fn mul(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &PolyP, c: u64, p: u64) -> PolyP {
    trim(a.iter().map(|&x| mulmod(x, c, p)).collect())
}

pub(crate) fn divrem(a: &PolyP, b: &PolyP, p: u64) -> (PolyP, PolyP) {
    let db = deg(b).expect("division by zero polynomial mod p");
    let Some(da) = deg(a) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), a.clone());
    }
    let li = inv(b[db], p);
    let mut r = a.clone();
    let mut q = vec![0u64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = mulmod(r[i + db], li, p);
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mulmod(c, bj, p)) % p;
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    divrem(a, b, p).1
}

pub(crate) fn monic(a: &PolyP, p: u64) -> PolyP {
    match a.last() {
        Some(&l) if l != 1 => scale(a, inv(l, p), p),
        _ => a.clone(),
    }
}

pub(crate) fn gcd(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(s, t)` with `s*a + t*b = 1`; inputs must be coprime.
pub(crate) fn bezout(a: &PolyP, b: &PolyP, p: u64) -> (PolyP, PolyP) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(r0.len(), 1, "bezout on non-coprime inputs");
    let li = inv(r0[0], p);
    (scale(&s0, li, p), scale(&t0, li, p))
}

pub(crate) fn derivative(a: &PolyP, p: u64) -> PolyP {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

pub(crate) fn powmod(base: &PolyP, e: &BigUint, m: &PolyP, p: u64) -> PolyP {
    let mut acc = rem(&vec![1u64], m, p);
    let base = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &base, p), m, p);
        }
    }
    acc
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub(crate) fn ddf(f: &PolyP, p: u64) -> Vec<(PolyP, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = vec![0u64, 1];
    let pe = BigUint::from(p);
    let mut h = x.clone();
    let mut i = 0;
    while deg(&f).unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = powmod(&h, &pe, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if deg(&g).unwrap_or(0) > 0 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, i));
        }
    }
    if deg(&f).unwrap_or(0) > 0 {
        let d = deg(&f).unwrap();
        out.push((f, d));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus, odd p).
pub(crate) fn edf(g: &PolyP, d: usize, p: u64, rng: &mut impl Rng) -> Vec<PolyP> {
    let n = deg(g).expect("nonzero");
    if n == d {
        return vec![g.clone()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if deg(&a).unwrap_or(0) == 0 {
            continue;
        }
        let mut h = gcd(&a, g, p);
        if deg(&h) == Some(0) {
            let b = powmod(&a, &e, g, p);
            h = gcd(&sub(&b, &vec![1], p), g, p);
        }
        let dh = deg(&h).unwrap_or(0);
        if dh > 0 && dh < n {
            let other = divrem(g, &h, p).0;
            let mut out = edf(&h, d, p, rng);
            out.extend(edf(&other, d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial mod p.
pub(crate) fn factor_squarefree(f: &PolyP, p: u64, rng: &mut impl Rng) -> Vec<PolyP> {
    let mut out = Vec::new();
    for (g, d) in ddf(f, p) {
        out.extend(edf(&g, d, p, rng));
    }
    out
}
