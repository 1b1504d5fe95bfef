#![allow(dead_code)]

pub mod oracles;

use nonint_core::exactalg::{FieldSpec, QuadExt, RatFunc, UPoly};
use proptest::prelude::*;
use rand::Rng;

pub fn f2() -> FieldSpec {
    FieldSpec::new(2).unwrap()
}

pub fn rt() -> QuadExt {
    f2().sqrt_d()
}

pub fn q(n: i64) -> QuadExt {
    QuadExt::from_int(n)
}

pub fn fr(n: i64, d: i64) -> QuadExt {
    QuadExt::from_frac(n, d)
}

/// `a + b sqrt2`.
pub fn quad(a: QuadExt, b: QuadExt) -> QuadExt {
    &a + &(&b * &rt())
}

pub fn factorial(n: u64) -> i64 {
    (1..=n).product::<u64>() as i64
}

/// Small rational `n/d` with `|n| <= 4`, `1 <= d <= 3`.
pub fn small_rational<R: Rng>(r: &mut R) -> QuadExt {
    QuadExt::from_frac(r.gen_range(-4..=4), r.gen_range(1..=3))
}

/// Parameter sampler over Q(sqrt2): zero with probability 0.1, rational with
/// probability 0.35, otherwise `a + b sqrt2` with `b != 0`.
pub fn sample_param<R: Rng>(r: &mut R) -> QuadExt {
    let u: f64 = r.gen();
    if u < 0.1 {
        QuadExt::zero()
    } else if u < 0.45 {
        small_rational(r)
    } else {
        let a = small_rational(r);
        let b = loop {
            let b = small_rational(r);
            if !b.is_zero() {
                break b;
            }
        };
        quad(a, b)
    }
}

pub fn sample_nonzero<R: Rng>(r: &mut R) -> QuadExt {
    loop {
        let x = sample_param(r);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn sample_sign<R: Rng>(r: &mut R) -> i64 {
    if r.gen::<bool>() {
        1
    } else {
        -1
    }
}

pub fn quad_strategy() -> impl Strategy<Value = QuadExt> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, c, d)| quad(fr(a, b), fr(c, d)))
}

pub fn rational_strategy() -> impl Strategy<Value = QuadExt> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| fr(a, b))
}

pub fn upoly_strategy(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(quad_strategy(), 0..=max_deg + 1).prop_map(UPoly::new)
}

pub fn nonzero_upoly_strategy(max_deg: usize) -> impl Strategy<Value = UPoly> {
    upoly_strategy(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Monic linear or irreducible-looking quadratic factors with small integer data.
pub fn small_factor_strategy() -> impl Strategy<Value = UPoly> {
    prop_oneof![
        (-3i64..=3).prop_map(|r| UPoly::from_ints(&[-r, 1])),
        (-2i64..=2, -2i64..=2).prop_map(|(a, b)| UPoly::new(vec![quad(q(a), q(b)), q(1)])),
        (-2i64..=2, 1i64..=3).prop_map(|(b, c)| UPoly::from_ints(&[c, b, 1])),
    ]
}

pub fn rf(n: UPoly, d: UPoly) -> RatFunc {
    RatFunc::new(n, d).unwrap()
}

/// Product of `(xi - r)^m` over the given roots.
pub fn from_roots(roots: &[(QuadExt, u32)]) -> UPoly {
    roots
        .iter()
        .fold(UPoly::one(), |acc, (r, m)| &acc * &UPoly::linear_root(r.clone()).pow(*m))
}

/// Proptest configuration without on-disk failure persistence.
pub fn pt_config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
