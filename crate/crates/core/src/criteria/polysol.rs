//! Polynomial solutions of `A z' + rho z = rhs`.

use crate::exactalg::{QuadExt, UPoly};

/// Particular solution plus a basis of the homogeneous solutions within the
/// degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub degree_bound: Option<usize>,
    pub particular: Option<UPoly>,
    pub kernel: Vec<UPoly>,
}

fn sdeg(p: &UPoly) -> Option<i64> {
    p.deg().map(|d| d as i64)
}

/// Largest degree a polynomial solution can have, from leading terms.
///
/// With `delta = max(deg A - 1, deg rho)` a solution of degree `n` has image of
/// degree `n + delta` unless `n = 0` with `deg A - 1 > deg rho`, or
/// `deg A - 1 = deg rho` and `n = -rho_0/lc(A)`.
pub fn degree_bound(a: &UPoly, rho: &UPoly, rhs: &UPoly) -> Option<usize> {
    let da = sdeg(a).expect("A must be nonzero");
    let dr = sdeg(rho);
    let delta = match dr {
        Some(dr) => (da - 1).max(dr),
        None => da - 1,
    };
    let mut cands: Vec<i64> = Vec::new();
    if let Some(dh) = sdeg(rhs) {
        cands.push(dh - delta);
    }
    if dr.is_none_or(|dr| da - 1 > dr) {
        cands.push(0);
    }
    if dr == Some(da - 1) {
        let r = -(&rho.lc() / &a.lc());
        if r.in_z_geq0() {
            cands.push(r.as_integer().and_then(|n| i64::try_from(n).ok()).unwrap_or(-1));
        }
    }
    cands.into_iter().filter(|&n| n >= 0).max().map(|n| n as usize)
}

/// Solves for `z` of degree at most `n` by exact elimination.
///
/// Returns `None` when inconsistent; otherwise the particular solution with
/// free unknowns set to zero and a kernel basis.
pub fn solve_bounded(
    a: &UPoly,
    rho: &UPoly,
    rhs: &UPoly,
    n: usize,
) -> Option<(UPoly, Vec<UPoly>)> {
    // column j = A * j x^(j-1) + rho x^j
    let cols: Vec<UPoly> = (0..=n)
        .map(|j| {
            let mut c = rho * &UPoly::monomial(QuadExt::one(), j);
            if j > 0 {
                c = &c + &(a * &UPoly::monomial(QuadExt::from_int(j as i64), j - 1));
            }
            c
        })
        .collect();
    let rows = cols
        .iter()
        .map(|c| c.coeffs().len())
        .chain(std::iter::once(rhs.coeffs().len()))
        .max()
        .unwrap_or(0);
    let width = n + 2;
    let mut m: Vec<Vec<QuadExt>> = (0..rows)
        .map(|i| {
            let mut row: Vec<QuadExt> = cols.iter().map(|c| c.coeff(i)).collect();
            row.push(rhs.coeff(i));
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..=n {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..width {
                    let v = &m[i][j] - &(&f * &m[r][j]);
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n + 1].is_zero()) {
        return None;
    }
    let mut z = vec![QuadExt::zero(); n + 1];
    for (i, &c) in pivots.iter().enumerate() {
        z[c] = m[i][n + 1].clone();
    }
    let kernel = (0..=n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![QuadExt::zero(); n + 1];
            v[free] = QuadExt::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -&m[i][free];
            }
            UPoly::new(v)
        })
        .collect();
    Some((UPoly::new(z), kernel))
}

/// All polynomial solutions, as particular solution plus kernel.
///
/// The operator sends `x^j` to a polynomial of degree at most `j + delta`
/// whose coefficient there is `c_j = j lc(A) [deg A - 1 = delta] + rho_0 [deg rho = delta]`,
/// so the coefficients of `z` are fixed top-down; the (at most one) index with
/// `c_j = 0` stays free and is carried symbolically.
pub fn solution_space(a: &UPoly, rho: &UPoly, rhs: &UPoly) -> SolutionSpace {
    let bound = degree_bound(a, rho, rhs);
    let Some(n) = bound else {
        // no admissible degree: only z = 0, valid iff rhs = 0
        return SolutionSpace {
            degree_bound: None,
            particular: rhs.is_zero().then(UPoly::zero),
            kernel: Vec::new(),
        };
    };
    let (particular, kernel) = match descend(a, rho, rhs, n) {
        Some((z, k)) => (Some(z), k),
        None => (None, Vec::new()),
    };
    SolutionSpace {
        degree_bound: bound,
        particular,
        kernel,
    }
}

fn descend(a: &UPoly, rho: &UPoly, rhs: &UPoly, n: usize) -> Option<(UPoly, Vec<UPoly>)> {
    let da = sdeg(a).expect("A must be nonzero");
    let dr = sdeg(rho);
    let delta = dr.map_or(da - 1, |dr| (da - 1).max(dr));
    let lca = a.lc();
    let rho0 = if dr == Some(delta) { rho.lc() } else { QuadExt::zero() };

    // residual = r0 - t * rt, solution = z0 + t * zt
    let mut r0 = rhs.clone();
    let mut rt = UPoly::zero();
    let mut z0 = vec![QuadExt::zero(); n + 1];
    let mut zt = vec![QuadExt::zero(); n + 1];
    let mut free = false;
    let mut constraints: Vec<(QuadExt, QuadExt)> = Vec::new();
    for j in (0..=n).rev() {
        let img = apply_operator(a, rho, &UPoly::monomial(QuadExt::one(), j));
        let mut cj = rho0.clone();
        if da - 1 == delta {
            cj = &cj + &(&lca * &QuadExt::from_int(j as i64));
        }
        let top = j as i64 + delta;
        let (ca, cb) = if top >= 0 {
            (r0.coeff(top as usize), -rt.coeff(top as usize))
        } else {
            (QuadExt::zero(), QuadExt::zero())
        };
        if cj.is_zero() {
            debug_assert!(!free, "at most one resonant index");
            free = true;
            zt[j] = QuadExt::one();
            rt = &rt + &img;
            if top >= 0 {
                constraints.push((ca, cb));
            }
        } else {
            let inv = cj.inv().expect("nonzero");
            let (u, v) = (&ca * &inv, &cb * &inv);
            r0 = &r0 - &img.scale(&u);
            rt = &rt + &img.scale(&v);
            z0[j] = u;
            zt[j] = v;
        }
    }
    // every remaining coefficient must vanish: r0_i - t rt_i = 0
    let len = r0.coeffs().len().max(rt.coeffs().len());
    constraints.extend((0..len).map(|i| (r0.coeff(i), -rt.coeff(i))));
    let mut t: Option<QuadExt> = None;
    for (c0, c1) in &constraints {
        if !c1.is_zero() {
            t = Some(-&(c0 / c1));
            break;
        }
    }
    match t {
        Some(t) => {
            for (c0, c1) in &constraints {
                if !(c0 + &(c1 * &t)).is_zero() {
                    return None;
                }
            }
            let z: Vec<QuadExt> = z0.iter().zip(&zt).map(|(u, v)| u + &(v * &t)).collect();
            Some((UPoly::new(z), Vec::new()))
        }
        None => {
            if constraints.iter().any(|(c0, _)| !c0.is_zero()) {
                return None;
            }
            let kernel = if free {
                vec![UPoly::new(zt)]
            } else {
                Vec::new()
            };
            Some((UPoly::new(z0), kernel))
        }
    }
}

/// A polynomial `z` with `A z' + rho z = rhs`, if one exists.
pub fn polynomial_solution(a: &UPoly, rho: &UPoly, rhs: &UPoly) -> Option<UPoly> {
    solution_space(a, rho, rhs).particular
}

/// `A z' + rho z`.
pub fn apply_operator(a: &UPoly, rho: &UPoly, z: &UPoly) -> UPoly {
    &(a * &z.derivative()) + &(rho * z)
}
