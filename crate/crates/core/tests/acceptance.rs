//! Acceptance suite: one pass/fail line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::oracles::*;
use common::*;
use nonint_core::criteria::{
    apply_operator, certify, check_h1, scan_order, solution_space, Certificate, CriterionId,
    InconclusiveReason, Status,
};
use nonint_core::exactalg::{
    factor_irreducible, partial_fractions, BiPoly, QuadExt, RatFunc, UPoly,
};
use nonint_core::unfoldings::{
    double_hopf_system, fold_hopf_system, theorem_conditions, DoubleHopfParams, FoldHopfParams,
    TheoremId, UnfoldingParams,
};
use nonint_core::varcalc::{kappa_coefficients, omega_decompose, CurveData, PlanarSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KAPPA_TUPLES: usize = 10;
const KAPPA_ORDER: usize = 7;
const KAPPA_TUPLE_LIMIT: Duration = Duration::from_secs(1);
const CERT_LIMIT: Duration = Duration::from_secs(2);
const MAX_ORDER: usize = 9;
const SWEEP_PER_FAMILY: usize = 60;
const SWEEP_LIMIT: Duration = Duration::from_secs(120);
const CHART2_TUPLES: usize = 20;
const PROPERTY_CASES: usize = 40;
const SEED: u64 = 0x5eed_2026;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rfc(n: UPoly, d: UPoly) -> RatFunc {
    RatFunc::new(n, d).unwrap()
}

fn c(x: QuadExt) -> UPoly {
    UPoly::constant(x)
}

fn random_fold_hopf<R: Rng>(r: &mut R) -> FoldHopfParams {
    let (mu, nu, alpha) = (sample_param(r), sample_param(r), sample_param(r));
    FoldHopfParams::new(mu, nu, alpha, sample_sign(r)).unwrap()
}

fn random_double_hopf<R: Rng>(r: &mut R) -> DoubleHopfParams {
    let (mu, nu, alpha, beta) = (sample_param(r), sample_param(r), sample_param(r), sample_param(r));
    DoubleHopfParams::new(mu, nu, alpha, beta, sample_sign(r)).unwrap()
}

fn fold_hopf_closed_form(p: &FoldHopfParams, k: usize) -> RatFunc {
    if k.is_multiple_of(2) {
        return RatFunc::zero();
    }
    let j = k.div_ceil(2);
    let coeff = &q(factorial(k as u64)) * &q(-p.s).pow(j as u32 - 1);
    let num = UPoly::new(vec![p.nu.clone(), p.alpha.clone()]).scale(&coeff);
    let den = UPoly::new(vec![p.mu.clone(), q(0), q(1)]).pow(j as u32);
    rfc(num, den)
}

fn double_hopf_closed_form(p: &DoubleHopfParams, k: usize) -> RatFunc {
    let xi2_minus_mu = UPoly::new(vec![-&p.mu, q(0), q(1)]);
    if k == 1 {
        let num = UPoly::new(vec![-&p.nu, q(0), -&p.alpha]);
        return rfc(num, &UPoly::x() * &xi2_minus_mu);
    }
    if k.is_multiple_of(2) {
        return RatFunc::zero();
    }
    let j = (k - 1) / 2;
    let s = q(p.s);
    let coeff = -&(&q(factorial(k as u64)) * &p.beta.pow(j as u32 - 1));
    let lead = &(&p.alpha * &p.beta) + &s;
    let tail = &(&p.beta * &p.nu) - &(&p.mu * &s);
    let num = UPoly::new(vec![tail, q(0), lead]).scale(&coeff);
    rfc(num, &UPoly::x() * &xi2_minus_mu.pow(j as u32 + 1))
}

fn criterion_1() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    let mut slowest = Duration::ZERO;
    for _ in 0..KAPPA_TUPLES {
        let p = loop {
            let p = random_fold_hopf(&mut r);
            // zero P along the curve only when mu = 0 and xi = 0, which is fine
            if !(p.mu.is_zero() && p.alpha.is_zero() && p.nu.is_zero()) {
                break p;
            }
        };
        let t = Instant::now();
        let (sys, curve) = fold_hopf_system(&p).unwrap();
        let v = kappa_coefficients(&sys, &curve, KAPPA_ORDER).map_err(|e| e.to_string())?;
        let el = t.elapsed();
        slowest = slowest.max(el);
        for k in 1..=KAPPA_ORDER {
            let want = fold_hopf_closed_form(&p, k);
            ensure(v.kappa(k) == &want, || {
                format!("mu={} nu={} alpha={} s={} k={k}: got {}, want {want}", p.mu, p.nu, p.alpha, p.s, v.kappa(k))
            })?;
        }
        ensure(el < KAPPA_TUPLE_LIMIT, || format!("tuple took {el:?}"))?;
    }
    Ok(format!("{KAPPA_TUPLES} tuples, k <= {KAPPA_ORDER}, slowest {slowest:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut slowest = Duration::ZERO;
    for _ in 0..KAPPA_TUPLES {
        let p = random_double_hopf(&mut r);
        let t = Instant::now();
        let (sys, curve) = double_hopf_system(&p, 1).unwrap();
        let v = kappa_coefficients(&sys, &curve, KAPPA_ORDER).map_err(|e| e.to_string())?;
        let el = t.elapsed();
        slowest = slowest.max(el);
        for k in 1..=KAPPA_ORDER {
            let want = double_hopf_closed_form(&p, k);
            ensure(v.kappa(k) == &want, || {
                format!("mu={} nu={} alpha={} beta={} s={} k={k}: got {}, want {want}", p.mu, p.nu, p.alpha, p.beta, p.s, v.kappa(k))
            })?;
        }
        ensure(el < KAPPA_TUPLE_LIMIT, || format!("tuple took {el:?}"))?;
    }
    Ok(format!("{KAPPA_TUPLES} tuples, k <= {KAPPA_ORDER}, slowest {slowest:.2?}"))
}

fn same_classes(a: &[(UPoly, QuadExt)], b: &[(UPoly, QuadExt)]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x))
}

fn criterion_3() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut checked = 0;
    for _ in 0..KAPPA_TUPLES {
        let (alpha, nu) = (sample_param(&mut r), sample_param(&mut r));
        // mu = -1: residue (alpha - nu)/2 at xi = -1 and (alpha + nu)/2 at xi = 1
        let p = FoldHopfParams::new(q(-1), nu.clone(), alpha.clone(), 1).unwrap();
        let (sys, curve) = fold_hopf_system(&p).unwrap();
        let k1 = kappa_coefficients(&sys, &curve, 1).unwrap().kappa(1).clone();
        let om = omega_decompose(&k1, sys.field).map_err(|e| e.to_string())?;
        let half = fr(1, 2);
        let mut want = Vec::new();
        for (root, res) in [(q(-1), &(&alpha - &nu) * &half), (q(1), &(&alpha + &nu) * &half)] {
            if !res.is_zero() {
                want.push((UPoly::linear_root(root), res));
            }
        }
        let got: Vec<(UPoly, QuadExt)> = om
            .residues
            .iter()
            .map(|e| (e.class.factor.clone(), e.constant().expect("constant residue")))
            .collect();
        ensure(om.exp_part.is_zero() && same_classes(&got, &want), || {
            format!("mu=-1 alpha={alpha} nu={nu}: residues {got:?}, E = {}", om.exp_part)
        })?;
        let rational = want.iter().all(|(_, r)| r.is_rational());
        ensure(check_h1(&om).holds == !rational, || format!("H1 verdict at alpha={alpha} nu={nu}"))?;

        // mu = 0: Omega = xi^alpha exp(-nu/xi)
        let p = FoldHopfParams::new(q(0), nu.clone(), alpha.clone(), 1).unwrap();
        let (sys, curve) = fold_hopf_system(&p).unwrap();
        let k1 = kappa_coefficients(&sys, &curve, 1).unwrap().kappa(1).clone();
        if k1.is_zero() {
            continue;
        }
        let om = omega_decompose(&k1, sys.field).map_err(|e| e.to_string())?;
        let e_want = rfc(c(-&nu), UPoly::x());
        let res_want: Vec<(UPoly, QuadExt)> = if alpha.is_zero() {
            vec![]
        } else {
            vec![(UPoly::x(), alpha.clone())]
        };
        let got: Vec<(UPoly, QuadExt)> = om
            .residues
            .iter()
            .map(|e| (e.class.factor.clone(), e.constant().expect("constant residue")))
            .collect();
        ensure(om.exp_part == e_want && same_classes(&got, &res_want), || {
            format!("mu=0 alpha={alpha} nu={nu}: E = {}, residues {got:?}", om.exp_part)
        })?;
        ensure(check_h1(&om).holds == (!nu.is_zero() || !alpha.is_rational()), || {
            format!("H1 verdict at mu=0 alpha={alpha} nu={nu}")
        })?;
        checked += 1;
    }
    Ok(format!("{KAPPA_TUPLES} tuples at mu = -1, {checked} at mu = 0"))
}

fn timed_certify(sys: &PlanarSystem, curve: &CurveData) -> Result<(Certificate, Duration), String> {
    let t = Instant::now();
    let cert = certify(sys, curve, MAX_ORDER).map_err(|e| e.to_string())?;
    Ok((cert, t.elapsed()))
}

fn criterion_4() -> Outcome {
    let mut lines = Vec::new();
    let mut check = |name: &str, sys: PlanarSystem, curve: CurveData, pred: &dyn Fn(&Certificate) -> bool| -> Result<(), String> {
        let (cert, el) = timed_certify(&sys, &curve)?;
        ensure(pred(&cert), || format!("{name}: status {} firing {:?} reason {:?}", cert.status, cert.firing, cert.reason))?;
        ensure(el < CERT_LIMIT, || format!("{name}: took {el:?}"))?;
        lines.push(format!("{name} {el:.2?}"));
        Ok(())
    };
    for s in [1, -1] {
        let (sys, cv) = fold_hopf_system(&FoldHopfParams::new(q(-1), q(1), rt(), s).unwrap()).unwrap();
        check(&format!("(a) s={s}"), sys, cv, &|c| {
            c.status == Status::Nonintegrable && c.firing == Some((3, CriterionId::IV))
        })?;
    }
    let (sys, cv) = fold_hopf_system(&FoldHopfParams::new(q(-1), rt(), rt(), 1).unwrap()).unwrap();
    check("(b)", sys, cv, &|c| c.status == Status::Nonintegrable && c.firing == Some((3, CriterionId::I)))?;
    let (sys, cv) = fold_hopf_system(&FoldHopfParams::new(q(0), q(1), rt(), 1).unwrap()).unwrap();
    check("(c)", sys, cv, &|c| c.status == Status::Nonintegrable && c.firing.map(|f| f.0) == Some(3))?;
    let dh = DoubleHopfParams::new(q(1), rt(), fr(1, 2), q(1), 1).unwrap();
    let (sys, cv) = double_hopf_system(&dh, 1).unwrap();
    check("(d)", sys, cv, &|c| c.status == Status::Nonintegrable && c.firing == Some((3, CriterionId::III)))?;
    let (sys, cv) = fold_hopf_system(&FoldHopfParams::new(q(-1), q(2), q(3), 1).unwrap()).unwrap();
    check("(e)", sys, cv, &|c| {
        c.status == Status::Inconclusive && c.reason == Some(InconclusiveReason::H1Fails) && !c.h1.holds
    })?;
    Ok(lines.join(", "))
}

fn criterion_5() -> Outcome {
    let mut n = 0;
    // alpha -/+ nu irrational keeps both shared roots simple for every b
    let tuples = [
        (rt(), q(1)),
        (quad(fr(3, 2), q(1)), q(3)),
        (quad(q(-2), q(3)), quad(q(1), q(-1))),
        (quad(fr(1, 3), fr(-1, 2)), fr(5, 2)),
    ];
    for (alpha, nu) in &tuples {
        for s in [1, -1] {
            let p = FoldHopfParams::new(q(-1), nu.clone(), alpha.clone(), s).unwrap();
            let (sys, curve) = fold_hopf_system(&p).unwrap();
            let v = kappa_coefficients(&sys, &curve, 5).unwrap();
            for j in [2usize, 3] {
                let k = 2 * j - 1;
                let o = scan_order(k, v.kappa(1), v.kappa(k), sys.field).map_err(|e| e.to_string())?;
                let d = o.division.as_ref().ok_or_else(|| format!("no division at alpha={alpha} nu={nu} k={k}"))?;
                let base = &q(factorial(k as u64)) * &q(-s).pow(j as u32 - 1);
                let am1 = alpha - &q(1);
                let bar = &(&base * alpha) / &(&q(2 * (j as i64 - 1)) * &am1);
                let tilde = -&(&(&base * nu) / &am1);
                ensure(d.rho_bar == c(bar.clone()) && d.rho_tilde == c(tilde.clone()) && d.n_bar == 0, || {
                    format!("alpha={alpha} nu={nu} s={s} k={k}: rho_bar {} (want {bar}), rho_tilde {} (want {tilde})", d.rho_bar, d.rho_tilde)
                })?;
                n += 1;
            }
        }
    }
    // double-Hopf chart 1 with beta = 0 at k = 3
    for (alpha, nu, s) in [(rt(), q(1), 1), (quad(q(0), fr(1, 3)), q(-2), -1), (fr(1, 3), rt(), 1)] {
        let p = DoubleHopfParams::new(q(1), nu.clone(), alpha.clone(), q(0), s).unwrap();
        let (sys, curve) = double_hopf_system(&p, 1).unwrap();
        let v = kappa_coefficients(&sys, &curve, 3).unwrap();
        let o = scan_order(3, v.kappa(1), v.kappa(3), sys.field).map_err(|e| e.to_string())?;
        let d = o.division.as_ref().ok_or("no division for beta = 0")?;
        ensure(d.rho_bar.is_zero() && d.rho_tilde == c(q(-6 * s)), || {
            format!("beta=0 alpha={alpha} nu={nu} s={s}: rho_bar {}, rho_tilde {}", d.rho_bar, d.rho_tilde)
        })?;
        n += 1;
    }
    Ok(format!("{n} divisions reproduced"))
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 6);
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    for theorem in [TheoremId::FoldHopf, TheoremId::DoubleHopfChart1, TheoremId::DoubleHopfChart2] {
        let (mut held, mut agree, mut extra) = (0, 0, 0);
        for _ in 0..SWEEP_PER_FAMILY {
            let (params, (sys, curve)) = match theorem {
                TheoremId::FoldHopf => {
                    let p = random_fold_hopf(&mut r);
                    let s = fold_hopf_system(&p).unwrap();
                    (UnfoldingParams::FoldHopf(p), s)
                }
                TheoremId::DoubleHopfChart1 | TheoremId::DoubleHopfChart2 => {
                    let p = random_double_hopf(&mut r);
                    let chart = if theorem == TheoremId::DoubleHopfChart1 { 1 } else { 2 };
                    let s = double_hopf_system(&p, chart).unwrap();
                    (UnfoldingParams::DoubleHopf(p), s)
                }
            };
            let rep = theorem_conditions(&params, theorem).map_err(|e| e.to_string())?;
            let cert = certify(&sys, &curve, MAX_ORDER);
            let nonint = matches!(&cert, Ok(c) if c.status == Status::Nonintegrable
                && c.firing.is_some_and(|f| f.0 <= MAX_ORDER));
            if rep.any_clause_holds {
                held += 1;
                if nonint {
                    agree += 1;
                } else {
                    let clauses: Vec<&str> = rep.clauses.iter().filter(|c| c.holds).map(|c| c.clause).collect();
                    failures.push(format!(
                        "theorem {theorem} clauses {clauses:?} hold at {params:?} but certify gave {:?}",
                        cert.map(|c| (c.status, c.reason))
                    ));
                }
            } else if nonint {
                extra += 1;
            }
        }
        summary.push(format!("{theorem}: {agree}/{held} agree, {extra} extra"));
    }
    let el = t.elapsed();
    ensure(failures.is_empty(), || failures.join("; "))?;
    ensure(el < SWEEP_LIMIT, || format!("sweep took {el:?}"))?;
    Ok(format!("{} per family; {}; {el:.2?}", SWEEP_PER_FAMILY, summary.join("; ")))
}

/// Chart 2 written out from the swapped foliation after `r_1 -> sqrt(-s) r_1`.
fn chart2_direct(p: &DoubleHopfParams) -> (PlanarSystem, CurveData) {
    let bs = &p.beta * &q(p.s);
    let pp = BiPoly::from_terms([(q(-1), 3, 0), (p.alpha.clone(), 1, 2), (p.nu.clone(), 1, 0)]);
    let qq = BiPoly::from_terms([(-&bs, 2, 1), (q(-1), 0, 3), (p.mu.clone(), 0, 1)]);
    let field = p.field().unwrap();
    (PlanarSystem::new(pp, qq, field, "direct").unwrap(), CurveData::eta_zero())
}

fn criterion_7() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut fired = 0;
    for _ in 0..CHART2_TUPLES {
        let p = random_double_hopf(&mut r);
        let (s2, c2) = double_hopf_system(&p, 2).unwrap();
        let (s1, c1) = double_hopf_system(&p.chart2_swap(), 1).unwrap();
        let (sd, _) = chart2_direct(&p);
        ensure(s2.p == sd.p && s2.q == sd.q, || format!("chart 2 system differs from the direct form at {p:?}"))?;
        let a = certify(&s2, &c2, MAX_ORDER);
        let b = certify(&s1, &c1, MAX_ORDER);
        match (a, b) {
            (Ok(mut a), Ok(b)) => {
                a.system.label = b.system.label.clone();
                ensure(a == b, || format!("certificates differ at {p:?}"))?;
                fired += a.firing.is_some() as usize;
            }
            (Err(ea), Err(eb)) => ensure(ea == eb, || format!("errors differ at {p:?}"))?,
            _ => return Err(format!("one chart failed at {p:?}")),
        }
    }
    Ok(format!("{CHART2_TUPLES} tuples identical ({fired} nonintegrable)"))
}

fn random_poly<R: Rng>(r: &mut R, max_deg: usize) -> UPoly {
    let d = r.gen_range(0..=max_deg);
    UPoly::new((0..=d).map(|_| sample_param(r)).collect())
}

fn random_factored<R: Rng>(r: &mut R) -> UPoly {
    let factors = [
        UPoly::from_ints(&[-1, 1]),
        UPoly::from_ints(&[2, 1]),
        UPoly::from_ints(&[1, 0, 1]),
        UPoly::from_ints(&[-2, 0, 1]),
        UPoly::from_ints(&[-3, 0, 1]),
        UPoly::new(vec![rt(), q(1)]),
        UPoly::new(vec![q(1), rt(), q(1)]),
    ];
    let n = r.gen_range(1..=3);
    (0..n).fold(UPoly::one(), |acc, _| {
        let f = &factors[r.gen_range(0..factors.len())];
        &acc * &f.pow(r.gen_range(1..=3))
    })
}

fn criterion_8() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 8);
    // reconstruction identities
    for _ in 0..PROPERTY_CASES {
        let a = random_poly(&mut r, 6);
        let b = loop {
            let b = random_poly(&mut r, 3);
            if !b.is_zero() {
                break b;
            }
        };
        let (qq, rem) = a.divrem(&b).map_err(|e| e.to_string())?;
        ensure(&(&qq * &b) + &rem == a && (rem.is_zero() || rem.deg0() < b.deg0()), || "divrem".into())?;
        let f = random_factored(&mut r);
        let classes = factor_irreducible(&f, f2()).map_err(|e| e.to_string())?;
        let back = classes.iter().fold(UPoly::one(), |acc, c| &acc * &c.factor.pow(c.multiplicity));
        ensure(back == f.monic(), || format!("factorization of {f}"))?;
        let g = rfc(random_poly(&mut r, 5), f);
        let pf = partial_fractions(&g, f2()).map_err(|e| e.to_string())?;
        ensure(pf.recombine() == g, || format!("partial fractions of {g}"))?;
    }
    // kappa oracle
    let mut worst: f64 = 0.0;
    let mut points = usize::MAX;
    for (sys, curve) in sample_systems() {
        let (used, w) = numerical_kappa_check(&sys, &curve, 5)?;
        worst = worst.max(w);
        points = points.min(used);
    }
    // polynomial solution substitution
    for _ in 0..PROPERTY_CASES {
        let a = loop {
            let a = random_poly(&mut r, 3);
            if !a.is_zero() {
                break a;
            }
        };
        let rho = random_poly(&mut r, 3);
        let z = random_poly(&mut r, 4);
        let rhs = apply_operator(&a, &rho, &z);
        let sp = solution_space(&a, &rho, &rhs);
        let zp = sp.particular.ok_or_else(|| format!("no solution for A = {a}, rho = {rho}"))?;
        ensure(apply_operator(&a, &rho, &zp) == rhs, || "substitution identity".into())?;
    }
    // simplicity profile
    let mut checks = 0;
    let mut cases = 0;
    while cases < PROPERTY_CASES {
        let Some((k, k1, kk)) = simplicity_case(&mut r) else { continue };
        checks += check_simplicity(k, &k1, &kk)?;
        cases += 1;
    }
    Ok(format!(
        "{PROPERTY_CASES} reconstructions; kappa oracle >= {points} points/system, worst rel {worst:.1e} (tol {REL_TOL:e}); {PROPERTY_CASES} substitutions; {checks} simplicity checks"
    ))
}

fn run(id: u32, title: &str, f: fn() -> Outcome) -> bool {
    let t = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panic: {msg}"))
    });
    let el = t.elapsed();
    match &res {
        Ok(d) => println!("criterion {id} ({title}): PASS [{el:.2?}] {d}"),
        Err(e) => println!("criterion {id} ({title}): FAIL [{el:.2?}] {e}"),
    }
    res.is_ok()
}

fn main() {
    let results = [
        run(1, "fold-Hopf kappa closed form", criterion_1),
        run(2, "double-Hopf kappa closed form", criterion_2),
        run(3, "Omega residues and H1", criterion_3),
        run(4, "end-to-end certificates", criterion_4),
        run(5, "rho division", criterion_5),
        run(6, "theorem cross-validation sweep", criterion_6),
        run(7, "chart-2 equivalence", criterion_7),
        run(8, "property suites", criterion_8),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
