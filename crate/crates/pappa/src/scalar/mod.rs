//! Scalars: exact cyclotomic numbers or double-precision complex numbers.

mod cyclo;

pub use cyclo::{cyclotomic_polynomial, Cyclo, CycloField};

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Approx,
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(Cyclo),
    Approx(Complex64),
}

impl Scalar {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(c) => c.to_complex(),
            Scalar::Approx(z) => *z,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// True only for an exact zero or an approximate value below `1e-14`.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(c) => c.is_zero(),
            Scalar::Approx(z) => z.norm() < 1e-14,
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact(c) => match c.checked_conj() {
                Some(v) => Scalar::Exact(v),
                None => Scalar::Approx(c.to_complex().conj()),
            },
            Scalar::Approx(z) => Scalar::Approx(z.conj()),
        }
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        Ok(match self {
            Scalar::Exact(c) => match c.checked_inv() {
                Some(v) => Scalar::Exact(v),
                None => Scalar::Approx(c.to_complex().inv()),
            },
            Scalar::Approx(z) => Scalar::Approx(z.inv()),
        })
    }

    /// Exact coordinate equality when both sides are exact, otherwise a
    /// relative comparison at `tol`.
    pub fn same(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => {
                let a = self.to_complex();
                let b = other.to_complex();
                let scale = 1.0f64.max(a.norm()).max(b.norm());
                (a - b).norm() <= tol * scale
            }
        }
    }

    pub fn scale_real(&self, r: f64) -> Scalar {
        Scalar::Approx(self.to_complex() * r)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc: Option<Scalar> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        match acc {
            Some(a) => a,
            None => match self {
                Scalar::Exact(c) => Scalar::Exact(Cyclo::rational(c.field(), 1, 1)),
                Scalar::Approx(_) => Scalar::Approx(Complex64::new(1.0, 0.0)),
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.to_complex();
        write!(f, "{:.12}{:+.12}i", z.re, z.im)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => match a.checked_add(b) {
                Some(v) => Scalar::Exact(v),
                None => Scalar::Approx(a.to_complex() + b.to_complex()),
            },
            _ => Scalar::Approx(self.to_complex() + rhs.to_complex()),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => match a.checked_mul(b) {
                Some(v) => Scalar::Exact(v),
                None => Scalar::Approx(a.to_complex() * b.to_complex()),
            },
            _ => Scalar::Approx(self.to_complex() * rhs.to_complex()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(a.neg()),
            Scalar::Approx(z) => Scalar::Approx(-z),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Default cyclotomic order: lcm(16, 4N).
pub fn default_order(n: u32) -> u32 {
    lcm(16, 4 * n)
}

fn lcm(a: u32, b: u32) -> u32 {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    a / x * b
}

struct Inner {
    n: u32,
    zeta_sign: i8,
    mode: Mode,
    order: u32,
    tol: f64,
    field: Option<Arc<CycloField>>,
    /// ζ^k for k in 0..2N
    zeta_pows: Vec<Scalar>,
    omega: Scalar,
    sqrt_n: Scalar,
    inv_sqrt_n: Scalar,
    omega_sqrt: Scalar,
    omega_sqrt_inv: Scalar,
    warnings: Vec<String>,
}

/// Shared parameters: N, the choice of ζ, arithmetic mode and the cyclotomic field.
#[derive(Clone)]
pub struct Context(Arc<Inner>);

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context")
            .field("n", &self.0.n)
            .field("zeta_sign", &self.0.zeta_sign)
            .field("mode", &self.0.mode)
            .field("order", &self.0.order)
            .finish()
    }
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.n == other.0.n
                && self.0.zeta_sign == other.0.zeta_sign
                && self.0.mode == other.0.mode
                && self.0.order == other.0.order)
    }
}

pub struct ContextBuilder {
    n: u32,
    zeta_sign: i8,
    mode: Mode,
    order: Option<u32>,
    tol: f64,
}

impl ContextBuilder {
    pub fn zeta_sign(mut self, s: i8) -> Self {
        self.zeta_sign = s;
        self
    }
    pub fn mode(mut self, m: Mode) -> Self {
        self.mode = m;
        self
    }
    pub fn order(mut self, l: u32) -> Self {
        self.order = Some(l);
        self
    }
    pub fn tol(mut self, t: f64) -> Self {
        self.tol = t;
        self
    }
    pub fn build(self) -> Result<Context, Error> {
        Context::make(self.n, self.zeta_sign, self.mode, self.order, self.tol)
    }
}

impl Context {
    pub fn builder(n: u32) -> ContextBuilder {
        ContextBuilder { n, zeta_sign: 1, mode: Mode::Exact, order: None, tol: 1e-9 }
    }

    pub fn exact(n: u32, zeta_sign: i8) -> Context {
        Context::builder(n).zeta_sign(zeta_sign).build().expect("valid context")
    }

    pub fn approx(n: u32, zeta_sign: i8) -> Context {
        Context::builder(n).zeta_sign(zeta_sign).mode(Mode::Approx).build().expect("valid context")
    }

    fn make(n: u32, zeta_sign: i8, mode: Mode, order: Option<u32>, tol: f64) -> Result<Context, Error> {
        if n < 2 {
            return Err(Error::InvalidParameter("N must be at least 2".into()));
        }
        if zeta_sign != 1 && zeta_sign != -1 {
            return Err(Error::InvalidParameter("zeta sign must be +1 or -1".into()));
        }
        let zeta_sign = if n % 2 == 1 { 1 } else { zeta_sign };
        let order = order.unwrap_or_else(|| default_order(n));
        let mut warnings = Vec::new();

        // ζ = e^{iπ t / N} with t = 1 (sign +), N + 1 (sign −) for even N, N + 1 for odd N.
        let t = if n % 2 == 1 || zeta_sign < 0 { n + 1 } else { 1 };
        let zeta_complex = cis(core::f64::consts::PI * t as f64 / n as f64);
        let zeta_pows_c: Vec<Complex64> = (0..2 * n).map(|k| zeta_complex.powu(k)).collect();
        let gauss_c: Complex64 = (0..n).map(|j| zeta_pows_c[((j * j) % (2 * n)) as usize]).sum();
        let sqrt_c = libm::sqrt(n as f64);
        let omega_c = gauss_c / sqrt_c;
        let omega_sqrt_c = principal_sqrt(omega_c);

        let approx_inner = |warnings: Vec<String>| Inner {
            n,
            zeta_sign,
            mode,
            order,
            tol,
            field: None,
            zeta_pows: zeta_pows_c.iter().map(|z| Scalar::Approx(*z)).collect(),
            omega: Scalar::Approx(omega_c),
            sqrt_n: Scalar::Approx(Complex64::new(sqrt_c, 0.0)),
            inv_sqrt_n: Scalar::Approx(Complex64::new(1.0 / sqrt_c, 0.0)),
            omega_sqrt: Scalar::Approx(omega_sqrt_c),
            omega_sqrt_inv: Scalar::Approx(omega_sqrt_c.inv()),
            warnings,
        };

        if mode == Mode::Approx {
            return Ok(Context(Arc::new(approx_inner(warnings))));
        }

        // ζ must live in Q(ζ_L): its exponent over ζ_L is L·t / (2N).
        if !(order as u64 * t as u64).is_multiple_of(2 * n as u64) {
            return Err(Error::InvalidParameter(alloc::format!(
                "cyclotomic order {} does not contain ζ for N = {}",
                order,
                n
            )));
        }
        let field = Arc::new(CycloField::new(order));
        let zeta_exp = (order as i64 * t as i64) / (2 * n as i64);
        let zeta_pows: Vec<Scalar> =
            (0..2 * n as i64).map(|k| Scalar::Exact(Cyclo::root(&field, zeta_exp * k))).collect();

        let mut gauss = Scalar::Exact(Cyclo::zero(&field));
        for j in 0..n {
            gauss = &gauss + &zeta_pows[((j * j) % (2 * n)) as usize];
        }
        let n_exact = Scalar::Exact(Cyclo::rational(&field, n as i128, 1));

        // Find a with ζ_L^{-a}·(Σ ζ^{j²}) real positive and squaring to N.
        let mut found: Option<i64> = None;
        for a in 0..order as i64 {
            let cand = &gauss * &Scalar::Exact(Cyclo::root(&field, -a));
            let z = cand.to_complex();
            if z.re > 0.0 && z.im.abs() < 1e-9 && (&cand * &cand).same(&n_exact, 0.0) {
                found = Some(a);
                break;
            }
        }
        let (sqrt_n, inv_sqrt_n, omega, omega_sqrt, omega_sqrt_inv) = match found {
            Some(a) => {
                let s = &gauss * &Scalar::Exact(Cyclo::root(&field, -a));
                let inv = &s * &Scalar::Exact(Cyclo::rational(&field, 1, n as i128));
                let omega = Scalar::Exact(Cyclo::root(&field, a));
                let l = order as i64;
                let a_centered = if a > l / 2 { a - l } else { a };
                if a_centered % 2 == 0 {
                    let h = a_centered / 2;
                    (s, inv, omega, Scalar::Exact(Cyclo::root(&field, h)), Scalar::Exact(Cyclo::root(&field, -h)))
                } else {
                    warnings.push(alloc::format!(
                        "ω^(1/2) is not representable at cyclotomic order {}; using floating point",
                        order
                    ));
                    (s, inv, omega, Scalar::Approx(omega_sqrt_c), Scalar::Approx(omega_sqrt_c.inv()))
                }
            }
            None => {
                warnings.push(alloc::format!(
                    "√N is not representable at cyclotomic order {}; using floating point",
                    order
                ));
                (
                    Scalar::Approx(Complex64::new(sqrt_c, 0.0)),
                    Scalar::Approx(Complex64::new(1.0 / sqrt_c, 0.0)),
                    Scalar::Approx(omega_c),
                    Scalar::Approx(omega_sqrt_c),
                    Scalar::Approx(omega_sqrt_c.inv()),
                )
            }
        };
        Ok(Context(Arc::new(Inner {
            n,
            zeta_sign,
            mode,
            order,
            tol,
            field: Some(field),
            zeta_pows,
            omega,
            sqrt_n,
            inv_sqrt_n,
            omega_sqrt,
            omega_sqrt_inv,
            warnings,
        })))
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }
    pub fn zeta_sign(&self) -> i8 {
        self.0.zeta_sign
    }
    pub fn mode(&self) -> Mode {
        self.0.mode
    }
    pub fn order(&self) -> u32 {
        self.0.order
    }
    pub fn tol(&self) -> f64 {
        self.0.tol
    }
    pub fn warnings(&self) -> &[String] {
        &self.0.warnings
    }
    pub fn field(&self) -> Option<&Arc<CycloField>> {
        self.0.field.as_ref()
    }

    /// True when ω^{1/2}, and hence every braid coefficient, is exact.
    pub fn braids_exact(&self) -> bool {
        self.0.omega_sqrt.is_exact()
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }
    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> Scalar {
        self.rational(v, 1)
    }

    pub fn rational(&self, n: i64, d: i64) -> Scalar {
        match &self.0.field {
            Some(f) => Scalar::Exact(Cyclo::rational(f, n as i128, d as i128)),
            None => Scalar::Approx(Complex64::new(n as f64 / d as f64, 0.0)),
        }
    }

    /// A floating-point value; always approximate.
    pub fn complex(&self, z: Complex64) -> Scalar {
        Scalar::Approx(z)
    }

    pub fn real(&self, r: f64) -> Scalar {
        Scalar::Approx(Complex64::new(r, 0.0))
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> Scalar {
        let m = 2 * self.0.n as i64;
        self.0.zeta_pows[k.rem_euclid(m) as usize].clone()
    }

    /// q^k = ζ^{2k}.
    pub fn q_pow(&self, k: i64) -> Scalar {
        self.zeta_pow(2 * k.rem_euclid(self.0.n as i64))
    }

    pub fn zeta(&self) -> Scalar {
        self.zeta_pow(1)
    }
    pub fn q(&self) -> Scalar {
        self.q_pow(1)
    }
    pub fn omega(&self) -> Scalar {
        self.0.omega.clone()
    }
    pub fn sqrt_n(&self) -> Scalar {
        self.0.sqrt_n.clone()
    }
    pub fn inv_sqrt_n(&self) -> Scalar {
        self.0.inv_sqrt_n.clone()
    }
    pub fn omega_sqrt(&self) -> Scalar {
        self.0.omega_sqrt.clone()
    }
    pub fn omega_sqrt_inv(&self) -> Scalar {
        self.0.omega_sqrt_inv.clone()
    }

    /// N^{e/2} for any integer e.
    pub fn sqrt_n_pow(&self, e: i32) -> Scalar {
        let base = if e >= 0 { self.sqrt_n() } else { self.inv_sqrt_n() };
        base.pow(e.unsigned_abs())
    }

    /// The Gauss sum ω = N^{-1/2} Σ_j ζ^{j²} recomputed from its definition.
    pub fn gauss_omega(&self) -> Scalar {
        let n = self.0.n as i64;
        let mut s = self.zero();
        for j in 0..n {
            s = &s + &self.zeta_pow(j * j);
        }
        &s * &self.inv_sqrt_n()
    }

    pub fn same(&self, a: &Scalar, b: &Scalar) -> bool {
        a.same(b, self.0.tol)
    }

    /// Exact equality is required when the context is exact and both sides are exact.
    pub fn is_zero_tol(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Exact(c) => c.is_zero(),
            Scalar::Approx(z) => z.norm() <= self.0.tol,
        }
    }
}

fn cis(t: f64) -> Complex64 {
    Complex64::new(libm::cos(t), libm::sin(t))
}

fn principal_sqrt(z: Complex64) -> Complex64 {
    let r = libm::sqrt(z.norm());
    let t = libm::atan2(z.im, z.re) / 2.0;
    Complex64::new(r * libm::cos(t), r * libm::sin(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_choice() {
        let c = Context::exact(2, 1);
        assert!(c.zeta().to_complex().im > 0.99);
        let c = Context::exact(4, -1);
        assert!(c.zeta_pow(4).same(&c.int(-1), 0.0));
        let c = Context::exact(3, -1);
        assert!(c.zeta_pow(3).same(&c.one(), 0.0));
    }

    #[test]
    fn default_orders() {
        assert_eq!(default_order(2), 16);
        assert_eq!(default_order(3), 48);
        assert_eq!(default_order(5), 80);
    }

    #[test]
    fn bad_order_rejected() {
        assert!(Context::builder(3).order(16).build().is_err());
        assert!(Context::builder(1).build().is_err());
    }

    #[test]
    fn small_order_falls_back() {
        let c = Context::builder(6).order(24).build().unwrap();
        assert!(!c.braids_exact());
        assert!(!c.warnings().is_empty());
    }
}
