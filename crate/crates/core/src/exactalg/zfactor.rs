//! Factorization of squarefree integer polynomials (Zassenhaus).
//!
//! Modular factorization at a small prime, Hensel lifting past a coefficient
//! bound, then recombination of lifted factors by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, PolyP};

/// Integer polynomial, lowest degree first, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zmod(a: &ZPoly, m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m >> 1;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn to_modp(a: &ZPoly, p: u64) -> PolyP {
    let pb = BigInt::from(p);
    modp::trim(
        a.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("reduced mod p"))
            .collect(),
    )
}

fn from_modp(a: &PolyP) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

pub(crate) fn content(a: &ZPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with a positive leading coefficient.
pub(crate) fn primitive(a: &ZPoly) -> ZPoly {
    let mut c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    if a.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Exact quotient over Z, or `None` when `b` does not divide `a`.
fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = &b[db];
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let (c, m) = r[i + db].div_rem(lb);
        if !m.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| ztrim(q))
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Irreducible factors over Z of a primitive squarefree polynomial of degree >= 1.
///
/// Factors are primitive with positive leading coefficient; their product is
/// `f` up to sign.
pub(crate) fn factor_squarefree_z(f: &ZPoly) -> Vec<ZPoly> {
    let f = primitive(f);
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // pick the prime with fewest modular factors among a few candidates
    let mut best: Option<(u64, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = to_modp(&f, p);
        if modp::deg(&fp) != Some(n) {
            continue;
        }
        let g = modp::gcd(&fp, &modp::derivative(&fp, p), p);
        if modp::deg(&g) != Some(0) {
            continue;
        }
        let facs = modp::factor_squarefree(&modp::monic(&fp, p), p, &mut rng);
        if facs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, facs) = best.expect("a good prime exists for squarefree input");

    // coefficient bound for any factor
    let maxc = f.iter().map(|c| c.abs()).max().expect("nonempty");
    let bound = (BigInt::one() << n) * BigInt::from(n as u64 + 1) * maxc;
    let target = BigInt::from(2) * &lc * bound;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= target {
        modulus *= &pb;
    }
    let lifted = hensel_lift_all(&f, &facs, p, &modulus);
    recombine(f, lifted, &modulus)
}

/// Lifts `f = lc * prod(us) mod p` to monic factors mod `modulus`.
fn hensel_lift_all(f: &ZPoly, us: &[PolyP], p: u64, modulus: &BigInt) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if us.len() == 1 {
        let li = mod_inverse(&f[n], modulus);
        return vec![zmod(&f.iter().map(|c| c * &li).collect(), modulus)];
    }
    let (a, b) = us.split_at(us.len() / 2);
    let lc_p = to_modp(&vec![f[n].clone()], p);
    let g0 = a.iter().fold(lc_p, |acc, u| modp::mul(&acc, u, p));
    let h0 = b.iter().fold(vec![1u64], |acc, u| modp::mul(&acc, u, p));
    let (s, t) = modp::bezout(&g0, &h0, p);

    let mut g = from_modp(&g0);
    let dg = g.len() - 1;
    g[dg] = f[n].mod_floor(modulus);
    let mut h = from_modp(&h0);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    while &m < modulus {
        let gh = zmul(&g, &h);
        let diff = zmod(
            &(0..f.len().max(gh.len()))
                .map(|i| {
                    f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default()
                })
                .collect(),
            modulus,
        );
        let err: ZPoly = diff.iter().map(|c| c / &m).collect();
        let ep = to_modp(&err, p);
        if !ep.is_empty() {
            let (q, r) = modp::divrem(&modp::mul(&s, &ep, p), &h0, p);
            let dh = r;
            let dgp = modp::add(&modp::mul(&q, &g0, p), &modp::mul(&t, &ep, p), p);
            g = zadd_scaled(&g, &from_modp(&dgp), &m, modulus);
            h = zadd_scaled(&h, &from_modp(&dh), &m, modulus);
        }
        m *= &pb;
    }
    let mut out = hensel_lift_all(&g, a, p, modulus);
    out.extend(hensel_lift_all(&h, b, p, modulus));
    out
}

fn zadd_scaled(a: &ZPoly, d: &ZPoly, m: &BigInt, modulus: &BigInt) -> ZPoly {
    let n = a.len().max(d.len());
    zmod(
        &(0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_default() + m * d.get(i).cloned().unwrap_or_default()
            })
            .collect(),
        modulus,
    )
}

fn recombine(mut f: ZPoly, mut us: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut k = 1;
    'outer: while 2 * k <= us.len() {
        for subset in combinations(us.len(), k) {
            let lc = f.last().expect("nonzero").clone();
            let mut g: ZPoly = vec![lc];
            for &i in &subset {
                g = zmod(&zmul(&g, &us[i]), modulus);
            }
            let g = primitive(&symmetric(&g, modulus));
            if let Some(q) = zdiv_exact(&f, &g) {
                out.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    us.remove(i);
                }
                continue 'outer;
            }
        }
        k += 1;
    }
    out.push(primitive(&f));
    out
}

/// All k-subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn product(fs: &[ZPoly]) -> ZPoly {
        fs.iter().fold(z(&[1]), |acc, f| zmul(&acc, f))
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // x^4 - 10x^2 + 1 is irreducible over Z but splits mod every prime
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree_z(&f), vec![f]);
    }

    #[test]
    fn splits_products() {
        let parts = [z(&[-2, 0, 1]), z(&[1, 1]), z(&[3, 0, 0, 2]), z(&[1, -1, 1])];
        let f = product(&parts);
        let fs = factor_squarefree_z(&f);
        assert_eq!(fs.len(), 4);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn non_monic_leading_coefficient() {
        let f = zmul(&z(&[1, 6]), &z(&[-5, 0, 9]));
        let fs = factor_squarefree_z(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 1).len(), 3);
    }
}
