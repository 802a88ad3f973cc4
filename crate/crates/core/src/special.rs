//! Special functions and quadrature rules in f64.
//!
//! Everything here is double precision and deterministic; the
//! arbitrary-precision machinery for the oscillator-basis sums lives in
//! [`crate::hobasis`].

use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.5772156649015329;

/// Scaled complementary error function e^{x^2} erfc(x) for x >= 0.
///
/// Direct product below x = 5, Laplace continued fraction above (the direct
/// product loses accuracy once erfc underflows toward 1e-300).
pub fn erfcx(x: f64) -> f64 {
    assert!(x >= 0.0, "erfcx defined here for x >= 0, got {x}");
    if x < 5.0 {
        return (x * x).exp() * libm::erfc(x);
    }
    // erfcx(x) = 1/sqrt(pi) / (x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))))
    let mut f = 0.0;
    for k in (1..=60).rev() {
        f = (k as f64 / 2.0) / (x + f);
    }
    1.0 / ((x + f) * PI.sqrt())
}

/// Carlson symmetric elliptic integral R_F(x, y, z).
pub fn carlson_rf(mut x: f64, mut y: f64, mut z: f64) -> f64 {
    assert!(x >= 0.0 && y >= 0.0 && z >= 0.0 && (x + y) > 0.0 && (y + z) > 0.0 && (x + z) > 0.0);
    for _ in 0..200 {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        let mu = (x + y + z) / 3.0;
        let dev = (x - mu).abs().max((y - mu).abs()).max((z - mu).abs());
        if dev < 1e-10 * mu {
            let dx = (mu - x) / mu;
            let dy = (mu - y) / mu;
            let dz = (mu - z) / mu;
            let e2 = dx * dy + dy * dz + dz * dx;
            let e3 = dx * dy * dz;
            return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0)
                / mu.sqrt();
        }
    }
    unreachable!("carlson_rf did not converge");
}

/// Carlson symmetric elliptic integral R_D(x, y, z).
pub fn carlson_rd(mut x: f64, mut y: f64, mut z: f64) -> f64 {
    assert!(x >= 0.0 && y >= 0.0 && z > 0.0 && (x + y) > 0.0);
    let mut sum = 0.0;
    let mut fac = 1.0;
    for _ in 0..200 {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (z + lam));
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        let mu = (x + y + 3.0 * z) / 5.0;
        let dev = (x - mu).abs().max((y - mu).abs()).max((z - mu).abs());
        if dev < 1e-11 * mu {
            let dx = (mu - x) / mu;
            let dy = (mu - y) / mu;
            let dz = (mu - z) / mu;
            let ea = dx * dy;
            let eb = dz * dz;
            let ec = ea - eb;
            let ed = ea - 6.0 * eb;
            let ee = ed + ec + ec;
            let s = 1.0
                + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * dz * ee)
                + dz * (ee / 6.0 + dz * (-9.0 / 22.0 * ec + 3.0 / 26.0 * dz * ea));
            return 3.0 * sum + fac * s / (mu * mu.sqrt());
        }
    }
    unreachable!("carlson_rd did not converge");
}

/// Complete elliptic integral of the first kind K(m), parameter convention
/// m = k^2 (matches `scipy.special.ellipk`).
pub fn ellip_k(m: f64) -> f64 {
    assert!(m < 1.0, "ellip_k requires m < 1, got {m}");
    carlson_rf(0.0, 1.0 - m, 1.0)
}

/// Complete elliptic integral of the second kind E(m), parameter convention.
pub fn ellip_e(m: f64) -> f64 {
    assert!(m <= 1.0, "ellip_e requires m <= 1, got {m}");
    if m == 1.0 {
        return 1.0;
    }
    carlson_rf(0.0, 1.0 - m, 1.0) - m / 3.0 * carlson_rd(0.0, 1.0 - m, 1.0)
}

/// Incomplete elliptic integral of the first kind F(phi | m), parameter
/// convention. Stays real while 1 - m sin^2(phi) > 0, which allows m > 1.
pub fn ellip_f_inc(phi: f64, m: f64) -> f64 {
    let s = phi.sin();
    let c = phi.cos();
    let t = 1.0 - m * s * s;
    assert!(t > 0.0, "ellip_f_inc outside real domain: phi={phi}, m={m}");
    s * carlson_rf(c * c, t, 1.0)
}

/// Incomplete elliptic integral of the second kind E(phi | m), parameter
/// convention.
pub fn ellip_e_inc(phi: f64, m: f64) -> f64 {
    let s = phi.sin();
    let c = phi.cos();
    let t = 1.0 - m * s * s;
    assert!(t > 0.0, "ellip_e_inc outside real domain: phi={phi}, m={m}");
    s * carlson_rf(c * c, t, 1.0) - m * s * s * s / 3.0 * carlson_rd(c * c, t, 1.0)
}

/// Dilogarithm at negative argument: Li2(-z) for z >= 0.
pub fn dilog_neg(z: f64) -> f64 {
    assert!(z >= 0.0);
    if z == 0.0 {
        return 0.0;
    }
    if z > 1.0 {
        // inversion: Li2(-z) = -pi^2/6 - ln^2(z)/2 - Li2(-1/z)
        let l = z.ln();
        return -PI * PI / 6.0 - 0.5 * l * l - dilog_neg(1.0 / z);
    }
    // Landen transform keeps the series argument small: Li2(-z) =
    // -Li2(z/(1+z)) - ln^2(1+z)/2, with z/(1+z) <= 1/2.
    let w = z / (1.0 + z);
    let mut s = 0.0;
    let mut t = w;
    for k in 1..200u32 {
        s += t / ((k * k) as f64);
        t *= w;
        if t < 1e-18 {
            break;
        }
    }
    let l = (1.0 + z).ln();
    -s - 0.5 * l * l
}

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, 0.0);
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Gauss-Hermite nodes and weights for weight e^{-x^2} on the real line.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let pim4 = 1.0 / PI.powf(0.25);
    let m = n.div_ceil(2);
    let mut z = 0.0;
    for i in 0..m {
        z = match i {
            0 => ((2 * n + 1) as f64).sqrt() - 1.85575 * ((2 * n + 1) as f64).powf(-1.0 / 6.0),
            1 => z - 1.14 * (n as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[n - 1],
            3 => 1.91 * z - 0.91 * x[n - 2],
            _ => 2.0 * z - x[n + 1 - i],
        };
        let mut pp = 0.0;
        for _ in 0..200 {
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = z * (2.0 / (j as f64 + 1.0)).sqrt() * p2
                    - (j as f64 / (j as f64 + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * n as f64).sqrt() * p2;
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        x[n - 1 - i] = z;
        x[i] = -z;
        w[n - 1 - i] = 2.0 / (pp * pp);
        w[i] = w[n - 1 - i];
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

/// Scaled modified Bessel functions (e^x K0(x), e^x K1(x)) for x > 0.
///
/// Ascending series below x = 1; above, Gauss-Legendre on the integral
/// representation with the substitution v = sinh(t/2), which turns the
/// integrand into a pure Gaussian e^{-2xv^2} and keeps the rule uniformly
/// accurate in x.
pub fn k0e_k1e(x: f64) -> (f64, f64) {
    assert!(x > 0.0);
    if x < 1.0 {
        let (k0, k1) = k01_series(x);
        (k0 * x.exp(), k1 * x.exp())
    } else {
        // e^x K_nu(x) = int_0^inf e^{-2x v^2} cosh(nu t(v)) 2 dv/sqrt(1+v^2)
        // with cosh t = 1 + 2 v^2
        let vmax = (25.0f64 / x).sqrt();
        let (gx, gw) = cached_gl64();
        let mut k0 = 0.0;
        let mut k1 = 0.0;
        for p in 0..2 {
            let a = vmax * p as f64 / 2.0;
            let b = vmax * (p + 1) as f64 / 2.0;
            let h = 0.5 * (b - a);
            let c = 0.5 * (b + a);
            for (t, w) in gx.iter().zip(gw.iter()) {
                let v = c + h * t;
                let base = (-2.0 * x * v * v).exp() * 2.0 / (1.0 + v * v).sqrt() * w * h;
                k0 += base;
                k1 += base * (1.0 + 2.0 * v * v);
            }
        }
        (k0, k1)
    }
}

/// The combination e^x [(2+4x) K0(x) - 4x K1(x)] evaluated without the
/// catastrophic cancellation of forming the two K terms separately.
///
/// This is the bracket of the quasi-2D real-space dipolar kernel; it decays
/// like sqrt(pi/2x)/(2x) while the individual terms grow like x^{1/2}.
pub fn quasi2d_bracket_e(x: f64) -> f64 {
    assert!(x > 0.0);
    if x < 1.0 {
        let (k0, k1) = k01_series(x);
        x.exp() * ((2.0 + 4.0 * x) * k0 - 4.0 * x * k1)
    } else if x <= 250.0 {
        // (2+4x) - 4x cosh t = 2 - 8x v^2 with v = sinh(t/2)
        let vmax = (25.0f64 / x).sqrt();
        let (gx, gw) = cached_gl64();
        let mut acc = 0.0;
        for p in 0..2 {
            let a = vmax * p as f64 / 2.0;
            let b = vmax * (p + 1) as f64 / 2.0;
            let h = 0.5 * (b - a);
            let c = 0.5 * (b + a);
            for (t, w) in gx.iter().zip(gw.iter()) {
                let v = c + h * t;
                acc += (-2.0 * x * v * v).exp() * (2.0 - 8.0 * x * v * v) * 2.0
                    / (1.0 + v * v).sqrt()
                    * w
                    * h;
            }
        }
        acc
    } else {
        // sqrt(pi/2x) (1/2x) [1 - 9/(8x) + 225/(128x^2) - ...]
        let ix = 1.0 / x;
        let series = 1.0
            + ix * (-9.0 / 8.0
                + ix * (225.0 / 128.0
                    + ix * (-11025.0 / 3072.0
                        + ix * (893025.0 / 98304.0 + ix * (-108056025.0 / 3932160.0)))));
        (PI / (2.0 * x)).sqrt() / (2.0 * x) * series
    }
}

/// Ascending series for unscaled K0, K1 (x < ~2).
fn k01_series(x: f64) -> (f64, f64) {
    let lx = (x / 2.0).ln();
    let q = x * x / 4.0;

    let mut i0 = 1.0;
    let mut term = 1.0;
    let mut k0sum = 0.0;
    let mut h = 0.0;
    for k in 1..40u32 {
        term *= q / ((k * k) as f64);
        h += 1.0 / k as f64;
        i0 += term;
        k0sum += term * h;
        if term < 1e-20 {
            break;
        }
    }
    let k0 = -(lx + EULER_GAMMA) * i0 + k0sum;

    // I1 and the companion sum for K1 (A&S 9.6.11)
    let mut i1ser = 1.0; // sum of q^k/(k!(k+1)!), to be multiplied by x/2
    let mut t = 1.0;
    let mut acc = 0.5 * (psi_int(1) + psi_int(2));
    for k in 1..40u32 {
        t *= q / (k as f64 * (k + 1) as f64);
        i1ser += t;
        acc += t * 0.5 * (psi_int(k + 1) + psi_int(k + 2));
        if t < 1e-20 {
            break;
        }
    }
    let i1 = 0.5 * x * i1ser;
    let k1 = lx * i1 + 1.0 / x - 0.5 * x * acc;
    (k0, k1)
}

/// Digamma at positive integers: psi(n) = -gamma + H_{n-1}.
fn psi_int(n: u32) -> f64 {
    let mut h = 0.0;
    for k in 1..n {
        h += 1.0 / k as f64;
    }
    -EULER_GAMMA + h
}

fn cached_gl64() -> (&'static [f64], &'static [f64]) {
    use std::sync::OnceLock;
    static GL: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    let (x, w) = GL.get_or_init(|| gauss_legendre(64));
    (x, w)
}

/// Tanh-sinh quadrature of `f` on (a, b), tolerant of integrable endpoint
/// singularities. Refines until two levels agree to `tol` relative.
pub fn tanh_sinh(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let c = 0.5 * (b + a);
    let r = 0.5 * (b - a);
    let g = |t: f64| {
        let s = 0.5 * PI * t.sinh();
        let u = s.tanh();
        let du = 0.5 * PI * t.cosh() / s.cosh().powi(2);
        (c + r * u, r * du)
    };
    let tmax = 4.0;
    let mut h = 0.5;
    let eval = |t: f64| -> f64 {
        let (x, w) = g(t);
        if x > a && x < b && w.is_finite() && w > 0.0 {
            let fx = f(x);
            if fx.is_finite() {
                return fx * w;
            }
        }
        0.0
    };
    let mut sum = eval(0.0);
    let mut k = 1;
    loop {
        let t = h * k as f64;
        if t > tmax {
            break;
        }
        sum += eval(t) + eval(-t);
        k += 1;
    }
    let mut total = sum * h;
    for level in 0..12 {
        let prev = total;
        h *= 0.5;
        let mut add = 0.0;
        let mut j = 1;
        loop {
            let t = h * j as f64;
            if t > tmax {
                break;
            }
            add += eval(t) + eval(-t);
            j += 2;
        }
        total = 0.5 * prev + add * h;
        if level > 2 && (total - prev).abs() <= tol * total.abs().max(1e-300) {
            break;
        }
    }
    total
}

/// Fixed-panel Gauss-Legendre integration of `f` over [a, b].
pub fn gl_panel(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let (gx, gw) = cached_gl64();
    let mut acc = 0.0;
    for p in 0..panels {
        let pa = a + (b - a) * p as f64 / panels as f64;
        let pb = a + (b - a) * (p + 1) as f64 / panels as f64;
        let h = 0.5 * (pb - pa);
        let c = 0.5 * (pb + pa);
        for (x, w) in gx.iter().zip(gw.iter()) {
            acc += f(c + h * x) * w * h;
        }
    }
    acc
}

/// Bessel functions J_0..J_nmax at argument x by Miller's downward
/// recurrence, normalized with J_0 + 2 sum_k J_2k = 1.
pub fn bessel_j_array(nmax: usize, x: f64) -> Vec<f64> {
    let ax = x.abs();
    let mut out = vec![0.0; nmax + 1];
    if ax < 1e-30 {
        out[0] = 1.0;
        return out;
    }
    let start = nmax + 20 + (1.3 * ax) as usize + (40.0 * ax.powf(1.0 / 3.0)) as usize;
    let mut jp = 0.0f64;
    let mut j = 1e-300f64;
    let mut norm = 0.0;
    for k in (0..start).rev() {
        let jm = 2.0 * (k as f64 + 1.0) / ax * j - jp;
        jp = j;
        j = jm;
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            for v in out.iter_mut() {
                *v *= 1e-250;
            }
        }
        if k <= nmax {
            out[k] = j;
        }
        if k % 2 == 0 && k > 0 {
            norm += 2.0 * j;
        }
    }
    norm += j;
    for v in out.iter_mut() {
        *v /= norm;
    }
    if x < 0.0 {
        for (k, v) in out.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -*v;
            }
        }
    }
    out
}
