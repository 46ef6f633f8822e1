//! Evaluation of slice words by acting on PF-state vectors.
//!
//! The state is an element of PF_s, s = max(n, k), stored as a sparse vector
//! over the monomial basis. Strands beyond the n real ones are padding: when
//! n < k they are the trailing strands of output cups, when n > k they are the
//! input-side caps closing off the extra outputs. Every slice acts by left
//! multiplication through the monomial action of the generators. Coefficients
//! are integer combinations of L-th roots of unity with one common power of √N.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Slice, TangleWord};
use crate::index;
use crate::scalar::{Context, Scalar};
use crate::Error;

#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    /// Row-major.
    pub entries: Vec<Scalar>,
}

impl Matrix {
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn to_dense(&self, ctx: &Context) -> Option<crate::DenseOperator> {
        (self.rows == self.cols).then(|| crate::DenseOperator::from_fn(ctx, self.rows, |r, c| self.get(r, c).clone()))
    }
}

#[derive(Clone, Debug)]
pub enum TangleValue {
    Scalar(Scalar),
    /// A map from N^in to N^out dimensions.
    Operator(Matrix),
}

impl TangleValue {
    pub fn same(&self, other: &TangleValue, ctx: &Context) -> bool {
        match (self, other) {
            (TangleValue::Scalar(a), TangleValue::Scalar(b)) => ctx.same(a, b),
            (TangleValue::Operator(a), TangleValue::Operator(b)) => {
                a.rows == b.rows && a.cols == b.cols && a.entries.iter().zip(&b.entries).all(|(x, y)| ctx.same(x, y))
            }
            _ => false,
        }
    }

    pub fn scalar(&self) -> Option<&Scalar> {
        match self {
            TangleValue::Scalar(s) => Some(s),
            TangleValue::Operator(_) => None,
        }
    }
}

struct Roots {
    /// L, the order of the roots of unity used internally.
    order: i64,
    zeta: i64,
    omega_sqrt: i64,
}

fn root_exponent(z: num_complex::Complex64, order: u32) -> Option<i64> {
    (0..order as i64).find(|&k| {
        let t = 2.0 * core::f64::consts::PI * k as f64 / order as f64;
        (num_complex::Complex64::new(libm::cos(t), libm::sin(t)) - z).norm() < 1e-9
    })
}

impl Roots {
    /// The internal order is the field order in exact mode; `exact_out` is
    /// false when the result has to be returned in floating point.
    fn find(ctx: &Context, braided: bool) -> (Roots, bool) {
        let exact = ctx.field().is_some();
        let try_order = |order: u32| -> Option<Roots> {
            let zeta = root_exponent(ctx.zeta().to_complex(), order)?;
            let omega_sqrt = if braided { root_exponent(ctx.omega_sqrt().to_complex(), order)? } else { 0 };
            Some(Roots { order: order as i64, zeta, omega_sqrt })
        };
        if exact {
            if let Some(r) = try_order(ctx.order()) {
                return (r, true);
            }
        }
        let r = try_order(crate::scalar::default_order(ctx.n())).expect("default order holds ζ and ω^(1/2)");
        (r, false)
    }
}

struct State<'a> {
    roots: &'a Roots,
    n: usize,
    s: usize,
    /// Every coefficient carries the common factor N^{-half/2}.
    half: i32,
    /// Coefficient blocks of length L/2, one per basis vector of PF_s.
    data: Vec<i128>,
}

impl<'a> State<'a> {
    fn h(&self) -> usize {
        (self.roots.order / 2) as usize
    }

    fn stride(&self, p: usize) -> usize {
        self.n.pow((self.s - p) as u32)
    }

    fn digit(&self, idx: usize, p: usize) -> usize {
        (idx / self.stride(p)) % self.n
    }

    fn dim(&self) -> usize {
        self.data.len() / self.h()
    }

    /// acc += v · x^e in Z[x]/(x^h + 1).
    fn add_rotated(acc: &mut [i128], v: &[i128], e: i64, order: i64) {
        let h = (order / 2) as usize;
        let e = e.rem_euclid(order) as usize;
        let (shift, sign) = if e >= h { (e - h, -1) } else { (e, 1) };
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = i + shift;
            if t >= h {
                acc[t - h] -= sign * c;
            } else {
                acc[t] += sign * c;
            }
        }
    }

    /// Σ_k ζ^{e_k} c_p^k c_{p+1}^{-k}, with `exps[k] = None` for absent terms; on |I⟩ the pair contributes q^{k i_p}.
    fn pair_sum(&mut self, p: usize, exps: &[Option<i64>]) {
        let n = self.n;
        let h = self.h();
        let z = self.roots.zeta;
        let order = self.roots.order;
        let (wp, wq) = (self.stride(p), self.stride(p + 1));
        let mut out = vec![0i128; self.data.len()];
        for idx in 0..self.dim() {
            let block = &self.data[idx * h..(idx + 1) * h];
            if block.iter().all(|&c| c == 0) {
                continue;
            }
            let a = (idx / wp) % n;
            let b = (idx / wq) % n;
            let base = idx - a * wp - b * wq;
            for (k, e) in exps.iter().enumerate() {
                let Some(e) = e else { continue };
                let j = base + ((a + k) % n) * wp + ((b + n - k) % n) * wq;
                let phase = z * (e + 2 * (k * a) as i64);
                Self::add_rotated(&mut out[j * h..(j + 1) * h], block, phase, order);
            }
        }
        self.data = out;
    }

    fn jones(&mut self, p: usize) {
        let exps: Vec<Option<i64>> = (0..self.n as i64).map(|k| Some(k * k)).collect();
        self.pair_sum(p, &exps);
        self.half += 1;
    }

    /// Left multiplication by c_p^j.
    fn label(&mut self, p: usize, j: i64) {
        let n = self.n as i64;
        let h = self.h();
        let wp = self.stride(p);
        let mut out = vec![0i128; self.data.len()];
        for idx in 0..self.dim() {
            let block = &self.data[idx * h..(idx + 1) * h];
            if block.iter().all(|&c| c == 0) {
                continue;
            }
            let prefix: i64 = (1..p).map(|t| self.digit(idx, t) as i64).sum();
            let d = ((idx / wp) % self.n) as i64;
            let target = idx - (d as usize) * wp + ((d + j).rem_euclid(n) as usize) * wp;
            let phase = -2 * j * prefix * self.roots.zeta;
            Self::add_rotated(&mut out[target * h..(target + 1) * h], block, phase, self.roots.order);
        }
        self.data = out;
    }

    /// b⁺ = ω^{-1/2} N^{-1/2} Σ_i ζ^{2i²} c_p^{-i} c_{p+1}^{i}, b⁻ with ω^{1/2} and ζ^0.
    fn crossing(&mut self, p: usize, positive: bool) {
        let n = self.n as i64;
        let w = if positive { -self.roots.omega_sqrt } else { self.roots.omega_sqrt };
        let mut exps = vec![None; n as usize];
        for i in 0..n {
            exps[((-i).rem_euclid(n)) as usize] = Some(if positive { 2 * i * i } else { 0 });
        }
        self.pair_sum(p, &exps);
        let order = self.roots.order;
        let h = self.h();
        let mut out = vec![0i128; self.data.len()];
        for (src, dst) in self.data.chunks(h).zip(out.chunks_mut(h)) {
            Self::add_rotated(dst, src, w, order);
        }
        self.data = out;
        self.half += 1;
    }

    fn embed_right2(&mut self) {
        let h = self.h();
        let f = self.n * self.n;
        let mut out = vec![0i128; self.data.len() * f];
        for (idx, block) in self.data.chunks(h).enumerate() {
            out[idx * f * h..(idx * f + 1) * h].copy_from_slice(block);
        }
        self.data = out;
        self.s += 2;
    }

    fn drop_right(&mut self, count: usize) {
        let h = self.h();
        let f = self.n.pow(count as u32);
        let dim = self.dim() / f;
        let mut out = vec![0i128; dim * h];
        for idx in 0..dim {
            out[idx * h..(idx + 1) * h].copy_from_slice(&self.data[idx * f * h..(idx * f + 1) * h]);
        }
        self.data = out;
        self.s -= count;
    }

    fn finish(&self, ctx: &Context, v: &[i128], exact_out: bool) -> Scalar {
        let scale = ctx.sqrt_n_pow(-self.half);
        if exact_out {
            let field = ctx.field().expect("exact context");
            let mut acc = ctx.zero();
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    let r = Scalar::Exact(crate::scalar::Cyclo::root(field, k as i64));
                    acc = &acc + &(&r * &ctx.int(c as i64));
                }
            }
            &acc * &scale
        } else {
            let mut acc = num_complex::Complex64::new(0.0, 0.0);
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    let t = 2.0 * core::f64::consts::PI * k as f64 / self.roots.order as f64;
                    acc += num_complex::Complex64::new(libm::cos(t), libm::sin(t)) * c as f64;
                }
            }
            Scalar::Approx(acc * libm::pow(ctx.n() as f64, -(self.half as f64) / 2.0))
        }
    }
}

fn run_column(
    ctx: &Context,
    roots: &Roots,
    exact_out: bool,
    word: &TangleWord,
    start: usize,
) -> BTreeMap<usize, Scalar> {
    let k = word.in_strands;
    let h = (roots.order / 2) as usize;
    let mut data = vec![0i128; index::count(ctx.n(), k) * h];
    data[start * h] = 1;
    let mut st = State { roots, n: ctx.n() as usize, s: k, half: 0, data };
    let mut n = k;
    for slice in &word.slices {
        match *slice {
            Slice::Cup(p) => {
                if n >= k {
                    st.embed_right2();
                    for i in (p..=n + 1).rev() {
                        st.jones(i);
                    }
                } else {
                    for i in (p..st.s).rev() {
                        st.jones(i);
                    }
                    st.half += 1;
                }
                n += 2;
            }
            Slice::Cap(p) => {
                for i in p..st.s {
                    st.jones(i);
                }
                if n > k {
                    st.drop_right(2);
                    st.half -= 1;
                }
                n -= 2;
            }
            Slice::Label(p, j) => st.label(p, j),
            Slice::Pos(p) => st.crossing(p, true),
            Slice::Neg(p) => st.crossing(p, false),
        }
    }
    if n < k {
        st.drop_right(k - n);
        st.half -= (k - n) as i32;
    }
    st.data
        .chunks(h)
        .enumerate()
        .filter(|(_, v)| v.iter().any(|&c| c != 0))
        .map(|(i, v)| (i, st.finish(ctx, v, exact_out)))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// Value of a slice word: a scalar for closed words, otherwise the N^out × N^in matrix.
pub fn evaluate(ctx: &Context, word: &TangleWord) -> Result<TangleValue, Error> {
    if let Some(n) = word.n {
        if n != ctx.n() {
            return Err(Error::InvalidParameter(alloc::format!(
                "word declares N={} but the context has N={}",
                n,
                ctx.n()
            )));
        }
    }
    // revalidate in case the word was assembled by hand
    TangleWord::new(word.in_strands, word.slices.clone())?;
    let nn = ctx.n();
    let braided = word.slices.iter().any(|s| matches!(s, Slice::Pos(_) | Slice::Neg(_)));
    let (roots, exact_out) = Roots::find(ctx, braided);
    if word.is_closed() {
        let terms = run_column(ctx, &roots, exact_out, word, 0);
        return Ok(TangleValue::Scalar(terms.get(&0).cloned().unwrap_or_else(|| ctx.zero())));
    }
    let cols = index::count(nn, word.in_strands);
    let rows = index::count(nn, word.out_strands);
    let mut entries = vec![ctx.zero(); rows * cols];
    for j in 0..cols {
        for (r, v) in run_column(ctx, &roots, exact_out, word, j) {
            entries[r * cols + j] = v;
        }
    }
    Ok(TangleValue::Operator(Matrix { rows, cols, entries }))
}
