//! Square matrices over [`Scalar`] and the Jordan–Wigner representation of PF_m.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::index;
use crate::pf::PfElement;
use crate::scalar::{Context, Scalar};
use crate::Error;

/// Row-major dim × dim matrix.
#[derive(Clone, Debug)]
pub struct DenseOperator {
    ctx: Context,
    dim: usize,
    entries: Vec<Scalar>,
}

impl DenseOperator {
    pub fn zero(ctx: &Context, dim: usize) -> DenseOperator {
        DenseOperator { ctx: ctx.clone(), dim, entries: vec![ctx.zero(); dim * dim] }
    }

    pub fn identity(ctx: &Context, dim: usize) -> DenseOperator {
        let mut m = DenseOperator::zero(ctx, dim);
        for i in 0..dim {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn from_fn(ctx: &Context, dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> DenseOperator {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        DenseOperator { ctx: ctx.clone(), dim, entries }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.dim + c] = v;
    }

    fn check(&self, other: &DenseOperator) -> Result<(), Error> {
        if self.dim != other.dim {
            return Err(Error::Dimension(alloc::format!(
                "{} × {} vs {} × {}",
                self.dim,
                self.dim,
                other.dim,
                other.dim
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &DenseOperator) -> Result<DenseOperator, Error> {
        self.check(other)?;
        let d = self.dim;
        let rows: Vec<Vec<(usize, &Scalar)>> = (0..d)
            .map(|k| {
                (0..d)
                    .filter_map(|j| {
                        let v = other.get(k, j);
                        (!v.is_zero()).then_some((j, v))
                    })
                    .collect()
            })
            .collect();
        let mut out = DenseOperator::zero(&self.ctx, d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &rows[k] {
                    let idx = i * d + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &DenseOperator) -> DenseOperator {
        self.try_mul(other).expect("matching dimensions")
    }

    pub fn add(&self, other: &DenseOperator) -> DenseOperator {
        self.check(other).expect("matching dimensions");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        DenseOperator { ctx: self.ctx.clone(), dim: self.dim, entries }
    }

    pub fn sub(&self, other: &DenseOperator) -> DenseOperator {
        self.check(other).expect("matching dimensions");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        DenseOperator { ctx: self.ctx.clone(), dim: self.dim, entries }
    }

    pub fn scale(&self, s: &Scalar) -> DenseOperator {
        let entries = self.entries.iter().map(|a| if a.is_zero() { a.clone() } else { a * s }).collect();
        DenseOperator { ctx: self.ctx.clone(), dim: self.dim, entries }
    }

    pub fn kron(&self, other: &DenseOperator) -> DenseOperator {
        let (a, b) = (self.dim, other.dim);
        let mut out = DenseOperator::zero(&self.ctx, a * b);
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        let y = other.get(k, l);
                        if !y.is_zero() {
                            out.set(i * b + k, j * b + l, x * y);
                        }
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> DenseOperator {
        DenseOperator::from_fn(&self.ctx, self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.ctx.zero();
        for i in 0..self.dim {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Trace divided by the dimension.
    pub fn normalized_trace(&self) -> Scalar {
        &self.trace() * &self.ctx.rational(1, self.dim as i64)
    }

    pub fn pow(&self, k: u32) -> DenseOperator {
        let mut acc = DenseOperator::identity(&self.ctx, self.dim);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Entrywise comparison at the context tolerance; exact when both sides are exact.
    pub fn same(&self, other: &DenseOperator) -> bool {
        self.dim == other.dim && self.entries.iter().zip(&other.entries).all(|(a, b)| self.ctx.same(a, b))
    }

    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a.to_complex() - b.to_complex()).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self) -> bool {
        self.mul(&self.adjoint()).same(&DenseOperator::identity(&self.ctx, self.dim))
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(Scalar::is_exact)
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.dim, self.dim, |r, c| self.get(r, c).to_complex())
    }

    pub fn from_complex(ctx: &Context, m: &DMatrix<Complex64>) -> DenseOperator {
        assert_eq!(m.nrows(), m.ncols(), "square matrix expected");
        DenseOperator::from_fn(ctx, m.nrows(), |r, c| ctx.complex(m[(r, c)]))
    }

    /// Row-major entries as complex numbers.
    pub fn complex_entries(&self) -> Vec<Complex64> {
        self.entries.iter().map(Scalar::to_complex).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Restriction to the range of an idempotent `p` that commutes with `self`:
    /// compares `self · p` with `other · p`.
    pub fn same_on(&self, other: &DenseOperator, p: &DenseOperator) -> bool {
        self.mul(p).same(&other.mul(p))
    }
}

/// Matrix of left multiplication by c_p: (Z^{-1})^{⊗(p-1)} ⊗ X ⊗ 1.
///
/// On basis vectors |K⟩, C_I|K⟩ = q^{-Σ_p i_p Σ_{t<p} k_t} |K + I⟩; in particular
/// C_I|0⟩ = |I⟩, so the representation is the left-regular one.
pub fn jw_rep(x: &PfElement) -> DenseOperator {
    let ctx = x.ctx();
    let n = ctx.n();
    let m = x.m();
    let dim = index::count(n, m);
    let mut out = DenseOperator::zero(ctx, dim);
    let cols: Vec<Vec<u32>> = index::all(n, m).collect();
    for (i_digits, coeff) in x.terms_digits() {
        for (kc, k) in cols.iter().enumerate() {
            let mut phase = 0u64;
            let mut prefix = 0u64;
            let mut target = vec![0u32; m];
            for p in 0..m {
                phase += i_digits[p] as u64 * prefix;
                prefix += k[p] as u64;
                target[p] = (k[p] + i_digits[p]) % n;
            }
            let r = index::encode(n, &target);
            let v = coeff * &ctx.q_pow(-((phase % n as u64) as i64));
            let cur = out.get(r, kc).clone();
            out.set(r, kc, &cur + &v);
        }
    }
    out
}

/// Column J of jw_rep(x) is the coefficient vector of x · C_J.
pub fn column_vector(x: &PfElement) -> Vec<Scalar> {
    let ctx = x.ctx();
    let mut v = vec![ctx.zero(); index::count(ctx.n(), x.m())];
    for (idx, s) in x.terms() {
        v[idx] = s.clone();
    }
    v
}
