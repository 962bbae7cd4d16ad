//! Adaptive quadrature and bracketed root finding.

use crate::math::Real;

/// 15-point Kronrod abscissae on [-1, 1] (positive half; node 7 is zero).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// 7-point Gauss weights for nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One Gauss-Kronrod 7-15 panel over `[a, b]` for an integrand with `N`
/// simultaneous components (shared abscissae). Returns the Kronrod estimate
/// and the `|K15 - G7|` error estimate maximised over components.
fn gk15_panel<F: Real, const N: usize>(f: &impl Fn(F) -> [F; N], a: F, b: F) -> ([F; N], F) {
    let half = (b - a) * F::half();
    let mid = (a + b) * F::half();

    let mut kronrod = [F::zero(); N];
    let mut gauss = [F::zero(); N];

    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let xs = F::of(x) * half;
        let wk = F::of(wk);
        let fsum = if i == 7 {
            f(mid)
        } else {
            let lo = f(mid - xs);
            let hi = f(mid + xs);
            let mut s = [F::zero(); N];
            for c in 0..N {
                s[c] = lo[c] + hi[c];
            }
            s
        };
        for c in 0..N {
            kronrod[c] = kronrod[c] + wk * fsum[c];
        }
        // odd Kronrod indices are the embedded Gauss nodes
        if i % 2 == 1 {
            let wg = F::of(WG[i / 2]);
            for c in 0..N {
                gauss[c] = gauss[c] + wg * fsum[c];
            }
        }
    }

    let mut err = F::zero();
    for c in 0..N {
        kronrod[c] = kronrod[c] * half;
        gauss[c] = gauss[c] * half;
        err = err.max((kronrod[c] - gauss[c]).abs());
    }
    (kronrod, err)
}

fn integrate_rec<F: Real, const N: usize>(
    f: &impl Fn(F) -> [F; N],
    a: F,
    b: F,
    tol: F,
    depth: u32,
) -> [F; N] {
    let (value, err) = gk15_panel(f, a, b);
    // second stop: the error estimate has hit the scalar's rounding floor,
    // so further subdivision cannot help (matters for f32)
    let mut scale = F::one();
    for v in &value {
        scale = scale.max(v.abs());
    }
    let floor = F::epsilon() * scale * F::of(4.0);
    if err <= tol || err <= floor || depth >= 48 {
        return value;
    }
    let mid = (a + b) * F::half();
    let half_tol = tol * F::half();
    let left = integrate_rec(f, a, mid, half_tol, depth + 1);
    let right = integrate_rec(f, mid, b, half_tol, depth + 1);
    let mut out = [F::zero(); N];
    for c in 0..N {
        out[c] = left[c] + right[c];
    }
    out
}

/// Adaptive Gauss-Kronrod integration of an `N`-component integrand over
/// `[a, b]` to absolute tolerance `tol`.
pub fn integrate_n<F: Real, const N: usize>(f: impl Fn(F) -> [F; N], a: F, b: F, tol: F) -> [F; N] {
    if a == b {
        return [F::zero(); N];
    }
    integrate_rec(&f, a, b, tol, 0)
}

/// Adaptive Gauss-Kronrod integration of a scalar integrand.
pub fn integrate<F: Real>(f: impl Fn(F) -> F, a: F, b: F, tol: F) -> F {
    integrate_n(|x| [f(x)], a, b, tol)[0]
}

/// Root of `f` on the bracket `[lo, hi]` by damped Halley iteration with a
/// bisection fallback. `f` returns `(f, f', f'')`; passing `f'' = 0` reduces
/// the step to Newton's. Iterates until `|f(x)| <= ftol`.
///
/// Requires `f(lo)` and `f(hi)` to straddle zero (either may be zero).
pub fn solve_bracketed<F: Real>(
    f: impl Fn(F) -> (F, F, F),
    lo: F,
    hi: F,
    ftol: F,
) -> Option<F> {
    debug_assert!(lo <= hi);
    let (flo, _, _) = f(lo);
    let (fhi, _, _) = f(hi);
    if flo.abs() <= ftol {
        return Some(lo);
    }
    if fhi.abs() <= ftol {
        return Some(hi);
    }
    if (flo > F::zero()) == (fhi > F::zero()) {
        return None;
    }
    let rising = fhi > F::zero();

    let (mut lo, mut hi) = (lo, hi);
    let mut x = (lo + hi) * F::half();
    for _ in 0..128 {
        let (fx, d1, d2) = f(x);
        if fx.abs() <= ftol {
            return Some(x);
        }
        if (fx > F::zero()) == rising {
            hi = x;
        } else {
            lo = x;
        }

        let denom = F::two() * d1 * d1 - fx * d2;
        let step = if denom != F::zero() {
            F::two() * fx * d1 / denom
        } else {
            F::zero()
        };
        let candidate = x - step;
        x = if step.is_finite() && candidate > lo && candidate < hi {
            candidate
        } else {
            (lo + hi) * F::half()
        };
        if hi - lo <= F::epsilon() * (F::one() + x.abs()) {
            return Some(x);
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        // K15 integrates polynomials up to degree 22 exactly
        let v = integrate(|x: f64| x * x * x * x, 0.0, 2.0, 1e-12);
        assert!((v - 32.0 / 5.0).abs() < 1e-12);
    }

    #[test]
    fn oscillatory_integrand_meets_tolerance() {
        let v = integrate(|x: f64| (10.0 * x).sin(), 0.0, 3.0, 1e-12);
        let exact = (1.0 - (30.0f64).cos()) / 10.0;
        assert!((v - exact).abs() < 1e-11);
    }

    #[test]
    fn paired_components_share_nodes() {
        let [c, s] = integrate_n(|x: f64| [x.cos(), x.sin()], 0.0, 1.2, 1e-12);
        assert!((c - 1.2f64.sin()).abs() < 1e-13);
        assert!((s - (1.0 - 1.2f64.cos())).abs() < 1e-13);
    }

    #[test]
    fn halley_finds_cubic_root() {
        let f = |x: f64| (x * x * x - 2.0, 3.0 * x * x, 6.0 * x);
        let r = solve_bracketed(f, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2.0f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn newton_degenerates_to_bisection_on_flat_derivative() {
        let f = |x: f64| (x.tanh() - 0.5, 1.0 / x.cosh().powi(2), 0.0);
        let r = solve_bracketed(f, -5.0, 5.0, 1e-13).unwrap();
        assert!((r.tanh() - 0.5).abs() < 1e-13);
    }

    #[test]
    fn missing_bracket_is_rejected() {
        assert!(solve_bracketed(|x: f64| (x * x + 1.0, 2.0 * x, 2.0), -1.0, 1.0, 1e-12).is_none());
    }
}
