//! Scalar numerical routines used across the crate: fixed-order Gauss–Legendre
//! quadrature, adaptive Simpson quadrature, golden-section search and bisection.

/// 16-point Gauss–Legendre nodes on [-1, 1] (positive half; the rule is symmetric).
const GL16_NODES: [f64; 8] = [
    0.095_012_509_837_637_44,
    0.281_603_550_779_258_9,
    0.458_016_777_657_227_4,
    0.617_876_244_402_643_7,
    0.755_404_408_355_003_0,
    0.865_631_202_387_831_7,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];
const GL16_WEIGHTS: [f64; 8] = [
    0.189_450_610_455_068_5,
    0.182_603_415_044_923_6,
    0.169_156_519_395_002_54,
    0.149_595_988_816_576_73,
    0.124_628_971_255_533_87,
    0.095_158_511_682_492_79,
    0.062_253_523_938_647_89,
    0.027_152_459_411_754_095,
];

/// ∫_a^b f(s) ds by 16-point Gauss–Legendre.
pub fn gauss_legendre_16<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..8 {
        let dx = half * GL16_NODES[i];
        acc += GL16_WEIGHTS[i] * (f(mid - dx) + f(mid + dx));
    }
    acc * half
}

fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive_simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, a, m);
    let right = simpson(fm, frm, fb, m, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// ∫_a^b f(s) ds by adaptive Simpson with absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, a, b);
    adaptive_simpson_rec(&f, a, b, fa, fm, fb, whole, tol.max(1e-15), 40)
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Maximizes a scalar function over [a, b] by golden-section search.
/// Returns (argmax, max). Infeasible regions can be signalled with -inf.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, iters: usize) -> (f64, f64) {
    let (mut a, mut b) = (a.min(b), a.max(b));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Minimizes a scalar function over [a, b] by golden-section search.
pub fn golden_min<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, iters: usize) -> (f64, f64) {
    let (x, v) = golden_max(|s| -f(s), a, b, iters);
    (x, -v)
}

/// Root of a monotone increasing function on [lo, hi] by bisection.
/// The bracket must satisfy f(lo) <= 0 <= f(hi).
pub fn bisect_increasing<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, iters: usize) -> f64 {
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl16_integrates_polynomials_exactly() {
        // Degree-9 polynomial is well inside the exactness range (degree 31).
        let val = gauss_legendre_16(|s| 3.0 * s.powi(9) - s.powi(4) + 2.0, -1.0, 2.0);
        let exact = |s: f64| 0.3 * s.powi(10) - s.powi(5) / 5.0 + 2.0 * s;
        assert!((val - (exact(2.0) - exact(-1.0))).abs() < 1e-12);
    }

    #[test]
    fn adaptive_simpson_hits_tolerance() {
        let val = adaptive_simpson(|s: f64| (5.0 * s).sin().exp(), 0.0, 3.0, 1e-10);
        // Reference computed with a fine composite rule.
        let mut reference = 0.0;
        let n = 200_000;
        for i in 0..n {
            let a = 3.0 * i as f64 / n as f64;
            let b = 3.0 * (i + 1) as f64 / n as f64;
            reference += gauss_legendre_16(|s: f64| (5.0 * s).sin().exp(), a, b);
        }
        assert!((val - reference).abs() < 1e-8);
    }

    #[test]
    fn golden_finds_quadratic_peak() {
        let (x, v) = golden_max(|s| 1.0 - (s - 0.3) * (s - 0.3), -1.0, 1.0, 80);
        assert!((x - 0.3).abs() < 1e-9);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bisection_solves_cubic() {
        let r = bisect_increasing(|s| s * s * s - 2.0, 0.0, 2.0, 80);
        assert!((r - 2.0_f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }
}
