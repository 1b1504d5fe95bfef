//! Independent oracles shared by the property suites and the acceptance target.

use super::*;
use nonint_core::criteria::{kappa_bar_b, partition_roots, simplicity_profile};
use nonint_core::exactalg::{BiPoly, FieldSpec, QuadExt, RatFunc, UPoly};
use nonint_core::unfoldings::{
    double_hopf_system, fold_hopf_system, DoubleHopfParams, FoldHopfParams,
};
use nonint_core::varcalc::{kappa_coefficients, CurveData, PlanarSystem};
use num_complex::Complex64;
use rand::Rng;

pub const REL_TOL: f64 = 1e-9;
pub const MIN_POINTS: usize = 20;
pub const CAUCHY_NODES: usize = 256;

/// `phi = xi / (xi + 2)` is invariant for `P = v^2 W`, `Q = (u'v - uv') W + (v eta - u) H`.
pub fn rational_curve_system() -> (PlanarSystem, CurveData) {
    let w = BiPoly::from_terms([(q(1), 0, 0), (q(1), 1, 1), (q(1), 0, 2)]);
    let h = BiPoly::from_terms([(q(1), 1, 0), (q(-1), 0, 2)]);
    let (u, v) = (UPoly::x(), UPoly::from_ints(&[2, 1]));
    let wr = &(&u.derivative() * &v) - &(&u * &v.derivative());
    let p = &BiPoly::from_upoly_xi(&(&v * &v)) * &w;
    let veta = &BiPoly::from_upoly_xi(&v) * &BiPoly::eta();
    let qq = &(&BiPoly::from_upoly_xi(&wr) * &w) + &(&(&veta - &BiPoly::from_upoly_xi(&u)) * &h);
    let sys = PlanarSystem::new(p, qq, FieldSpec::RATIONAL, "rational curve").unwrap();
    (sys, CurveData::new(rf(u, v)))
}

/// `phi = xi^2` with a surd coefficient in `P`.
pub fn parabola_system() -> (PlanarSystem, CurveData) {
    let w = BiPoly::from_terms([(rt(), 0, 0), (q(1), 1, 1), (fr(1, 2), 0, 2), (q(1), 2, 0)]);
    let h = BiPoly::from_terms([(q(1), 1, 0), (q(-1), 0, 2)]);
    let u = UPoly::from_ints(&[0, 0, 1]);
    let p = w.clone();
    let eta_minus = &BiPoly::eta() - &BiPoly::from_upoly_xi(&u);
    let qq = &(&BiPoly::from_upoly_xi(&u.derivative()) * &w) + &(&eta_minus * &h);
    let sys = PlanarSystem::new(p, qq, f2(), "parabola").unwrap();
    (sys, CurveData::new(RatFunc::from_poly(u)))
}

pub fn sample_systems() -> Vec<(PlanarSystem, CurveData)> {
    let fh = FoldHopfParams::new(fr(-3, 2), q(1), rt(), -1).unwrap();
    let dh = DoubleHopfParams::new(q(1), rt(), fr(1, 2), q(1), 1).unwrap();
    vec![
        fold_hopf_system(&fh).unwrap(),
        double_hopf_system(&dh, 1).unwrap(),
        double_hopf_system(&dh, 2).unwrap(),
        rational_curve_system(),
        parabola_system(),
    ]
}

pub fn sample_points() -> Vec<QuadExt> {
    (0..30).map(|i| fr(7 * i - 97, 13)).collect()
}

/// `d^k/d eta^k (Q/P)` as `N_k / P^(k+1)`, via the quotient rule.
pub fn exact_eta_derivatives(sys: &PlanarSystem, order: usize) -> Vec<BiPoly> {
    let mut out = vec![sys.q.clone()];
    for m in 1..=order {
        let n = out.last().unwrap();
        let next = &(&n.d_eta() * &sys.p) - &(n * &sys.p.d_eta()).scale(&q(m as i64));
        out.push(next);
    }
    out
}

pub fn to_c(x: &QuadExt) -> Complex64 {
    let (re, im) = x.to_complex_f64();
    Complex64::new(re, im)
}

pub fn eval_c(p: &BiPoly, x: Complex64, y: Complex64) -> Complex64 {
    p.terms()
        .map(|(&(i, j), c)| to_c(c) * x.powu(i) * y.powu(j))
        .sum()
}

/// Roots of `sum c_i w^i` by Durand-Kerner.
pub fn roots_c(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lc).collect();
    let eval = |z: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut zs: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..500 {
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= zs[i] - zs[j];
                }
            }
            let step = eval(zs[i]) / den;
            zs[i] -= step;
        }
    }
    zs
}

/// `d^k/dw^k f(0)` by the trapezoidal rule on the Cauchy integral.
pub fn cauchy_derivative(f: impl Fn(Complex64) -> Complex64, k: usize, r: f64) -> Complex64 {
    let m = CAUCHY_NODES;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..m {
        let th = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
        let w = Complex64::from_polar(r, th);
        acc += f(w) / w.powu(k as u32);
    }
    acc * factorial(k as u64) as f64 / m as f64
}

/// Compares `kappa_1..kappa_order` with Cauchy-integral derivatives of `Q/P`
/// in `eta` at the sample points. Returns the number of points used and the
/// worst relative error.
pub fn numerical_kappa_check(
    sys: &PlanarSystem,
    c: &CurveData,
    order: usize,
) -> Result<(usize, f64), String> {
    let v = kappa_coefficients(sys, c, order).map_err(|e| e.to_string())?;
    let mut used = 0;
    let mut worst: f64 = 0.0;
    for x in sample_points() {
        let Some(y) = c.phi.eval(&x) else { continue };
        if sys.p.eval(&x, &y).is_zero() {
            continue;
        }
        let (xc, yc) = (to_c(&x), to_c(&y));
        // analyticity radius: nearest zero of P(x, y + w) in w
        let pcoef: Vec<Complex64> = sys
            .p
            .eta_coeffs()
            .iter()
            .map(|cf| to_c(&cf.eval(&x)))
            .collect();
        let mut pshift = vec![Complex64::new(0.0, 0.0); pcoef.len()];
        for (j, cj) in pcoef.iter().enumerate() {
            let mut binom = 1.0;
            for (i, slot) in pshift.iter_mut().enumerate().take(j + 1) {
                *slot += cj * binom * yc.powu((j - i) as u32);
                binom = binom * (j - i) as f64 / (i + 1) as f64;
            }
        }
        while pshift.len() > 1 && pshift.last().unwrap().norm() == 0.0 {
            pshift.pop();
        }
        let radius = if pshift.len() > 1 {
            roots_c(&pshift)
                .iter()
                .map(|z| z.norm())
                .fold(f64::INFINITY, f64::min)
        } else {
            f64::INFINITY
        };
        let r = (0.7 * radius).min(4.0);
        let f = |w: Complex64| eval_c(&sys.q, xc, yc + w) / eval_c(&sys.p, xc, yc + w);
        used += 1;
        for k in 1..=order {
            let exact = to_c(&v.kappa(k).eval(&x).ok_or("pole at a sample point")?);
            let num = cauchy_derivative(f, k, r);
            if exact.norm() == 0.0 {
                if num.norm() >= 1e-8 {
                    return Err(format!("{} k={k} at {x}: {num} vs 0", sys.label));
                }
                continue;
            }
            let rel = (num - exact).norm() / exact.norm();
            worst = worst.max(rel);
            if rel > REL_TOL {
                return Err(format!("{} k={k} at {x}: relative error {rel:e}", sys.label));
            }
        }
    }
    if used < MIN_POINTS {
        return Err(format!("{}: only {used} sample points", sys.label));
    }
    Ok((used, worst))
}

/// `kappa_bar_kb` from its defining formula over explicit roots.
pub fn kappa_bar_oracle(k1: &RatFunc, k: usize, roots: &[(QuadExt, i64)], b: &[u32]) -> UPoly {
    let lin: Vec<UPoly> = roots
        .iter()
        .map(|(r, _)| UPoly::linear_root(r.clone()))
        .collect();
    let prod_all = lin.iter().fold(UPoly::one(), |a, p| &a * p);
    let mut acc = (k1.num() * &prod_all).scale(&q(k as i64 - 1));
    for (j, (_, a1)) in roots.iter().enumerate() {
        let others = lin
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != j)
            .fold(UPoly::one(), |a, (_, p)| &a * p);
        let w = q(a1 + b[j] as i64 - 1);
        acc = &acc - &(k1.den() * &others).scale(&w);
    }
    acc
}

pub fn b_vectors(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=5u32).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Random `(k, kappa_1, kappa_k)` whose `kappa_1d` splits into linear factors,
/// with residues biased so that the bad exponent often lands in `1..=5`.
pub fn simplicity_case<R: Rng>(r: &mut R) -> Option<(usize, RatFunc, RatFunc)> {
    let k = [2usize, 3, 5][r.gen_range(0..3)];
    let all_roots = [q(0), q(1), q(-1), rt(), -&rt(), fr(1, 2)];
    let n = r.gen_range(1..=3);
    let mut idx: Vec<usize> = (0..all_roots.len()).collect();
    for i in 0..n {
        let j = r.gen_range(i..idx.len());
        idx.swap(i, j);
    }
    let poles: Vec<QuadExt> = idx[..n].iter().map(|&i| all_roots[i].clone()).collect();
    let mut k1 = RatFunc::zero();
    for p in &poles {
        let c = if r.gen_bool(0.5) {
            fr(r.gen_range(1..=6), k as i64 - 1)
        } else {
            sample_nonzero(r)
        };
        k1 = &k1 + &rf(UPoly::constant(c), UPoly::linear_root(p.clone()));
    }
    if r.gen_bool(0.3) {
        let c = sample_nonzero(r);
        k1 = &k1 + &rf(UPoly::constant(c), UPoly::linear_root(poles[0].clone()).pow(2));
    }
    if k1.num().is_zero() {
        return None;
    }
    let mut kd = k1.den().clone();
    for p in &poles {
        kd = &kd * &UPoly::linear_root(p.clone()).pow(r.gen_range(0..=3u32));
    }
    if r.gen_bool(0.5) {
        kd = &kd * &UPoly::linear_root(q(3)).pow(r.gen_range(1..=2));
    }
    let num = UPoly::new(vec![sample_nonzero(r), sample_param(r)]);
    Some((k, k1, rf(num, kd)))
}

/// Checks the simplicity profile against double roots of the defining formula
/// for every `b` in `{1..5}^n1`. Returns the number of `(b, class)` checks.
pub fn check_simplicity(k: usize, k1: &RatFunc, kk: &RatFunc) -> Result<usize, String> {
    let part = partition_roots(k1, kk, k, f2()).map_err(|e| e.to_string())?;
    let prof = simplicity_profile(k1, &part, k);
    let roots: Vec<(QuadExt, i64)> = part
        .shared
        .iter()
        .map(|c| {
            if c.factor.deg0() != 1 {
                return Err(format!("nonlinear class {}", c.factor));
            }
            Ok((-&c.factor.coeff(0), c.a1))
        })
        .collect::<Result<_, _>>()?;
    let mut checks = 0;
    for b in b_vectors(roots.len()) {
        let oracle = kappa_bar_oracle(k1, k, &roots, &b);
        if kappa_bar_b(k1, &part, k, &b) != oracle {
            return Err(format!("kappa_bar mismatch at b = {b:?}"));
        }
        for (j, c) in part.shared.iter().enumerate() {
            let double = (&c.factor * &c.factor).divides(&oracle);
            let predicted =
                c.b1 == 1 && prof.classes[j].bad_b.as_ref() == Some(&q(b[j] as i64));
            if double != predicted {
                return Err(format!(
                    "class {} at b = {b:?}: oracle double = {double}, profile predicts {predicted}",
                    c.factor
                ));
            }
            checks += 1;
        }
    }
    Ok(checks)
}
