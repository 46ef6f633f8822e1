//! The parafermion algebra PF_m in normal form.
//!
//! Elements are finite sums Σ a_I C_I over the monomials
//! C_I = c_1^{i_1} c_2^{i_2} ⋯ c_m^{i_m}, with c_i^N = 1 and c_i c_j = q c_j c_i
//! for i < j.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::index;
use crate::scalar::{Context, Scalar};
use crate::Error;

#[derive(Clone, Debug)]
pub struct PfElement {
    ctx: Context,
    m: usize,
    terms: BTreeMap<usize, Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grade {
    Homogeneous(u32),
    Mixed(Vec<u32>),
}

/// A homogeneous element together with an integer lift of its grade.
#[derive(Clone, Debug)]
pub struct Lifted {
    pub element: PfElement,
    pub lift: i64,
}

impl Lifted {
    pub fn new(element: PfElement, lift: i64) -> Result<Lifted, Error> {
        let n = element.ctx.n() as i64;
        match element.grade() {
            Grade::Homogeneous(g) if (lift - g as i64).rem_euclid(n) == 0 => Ok(Lifted { element, lift }),
            Grade::Homogeneous(_) if element.is_zero() => Ok(Lifted { element, lift }),
            Grade::Homogeneous(g) => {
                Err(Error::InvalidLift(alloc::format!("lift {} is not congruent to grade {} mod {}", lift, g, n)))
            }
            Grade::Mixed(_) => Err(Error::InvalidLift("element is not homogeneous".into())),
        }
    }

    /// Lift in {0, …, N−1}.
    pub fn canonical(element: PfElement) -> Result<Lifted, Error> {
        let g = match element.grade() {
            Grade::Homogeneous(g) => g,
            Grade::Mixed(_) => return Err(Error::InvalidLift("element is not homogeneous".into())),
        };
        Lifted::new(element, g as i64)
    }
}

impl PfElement {
    pub fn zero(ctx: &Context, m: usize) -> PfElement {
        PfElement { ctx: ctx.clone(), m, terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Context, m: usize) -> PfElement {
        PfElement::monomial(ctx, &vec![0; m], ctx.one())
    }

    pub fn scalar(ctx: &Context, m: usize, s: Scalar) -> PfElement {
        PfElement::monomial(ctx, &vec![0; m], s)
    }

    pub fn monomial(ctx: &Context, digits: &[u32], coeff: Scalar) -> PfElement {
        let mut e = PfElement::zero(ctx, digits.len());
        e.add_term(index::encode(ctx.n(), digits), coeff);
        e
    }

    pub fn basis(ctx: &Context, digits: &[u32]) -> PfElement {
        PfElement::monomial(ctx, digits, ctx.one())
    }

    /// c_p^k in PF_m, 1 ≤ p ≤ m.
    pub fn generator(ctx: &Context, m: usize, p: usize, k: i64) -> PfElement {
        assert!(p >= 1 && p <= m, "generator index out of range");
        let mut d = vec![0u32; m];
        d[p - 1] = k.rem_euclid(ctx.n() as i64) as u32;
        PfElement::basis(ctx, &d)
    }

    pub fn from_terms(ctx: &Context, m: usize, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> PfElement {
        let mut e = PfElement::zero(ctx, m);
        for (d, s) in terms {
            assert_eq!(d.len(), m, "multi-index length mismatch");
            e.add_term(index::encode(ctx.n(), &d), s);
        }
        e
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.ctx.n()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Packed index and coefficient of every nonzero term, in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn terms_digits(&self) -> impl Iterator<Item = (Vec<u32>, &Scalar)> + '_ {
        let n = self.n();
        let m = self.m;
        self.terms.iter().map(move |(k, v)| (index::decode(n, m, *k), v))
    }

    pub fn coeff(&self, digits: &[u32]) -> Scalar {
        self.terms.get(&index::encode(self.n(), digits)).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub(crate) fn add_term(&mut self, idx: usize, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                let sum = &*v + &s;
                if sum.is_zero() {
                    self.terms.remove(&idx);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(idx, s);
            }
        }
    }

    fn check_same(&self, other: &PfElement) -> Result<(), Error> {
        if self.m != other.m || self.ctx != other.ctx {
            return Err(Error::Dimension(alloc::format!(
                "PF_{} (N={}) vs PF_{} (N={})",
                self.m,
                self.n(),
                other.m,
                other.n()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &PfElement) -> PfElement {
        self.check_same(other).expect("matching algebras");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &PfElement) -> PfElement {
        self.add(&other.scale(&self.ctx.int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> PfElement {
        let mut out = PfElement::zero(&self.ctx, self.m);
        for (k, v) in &self.terms {
            out.add_term(*k, v * s);
        }
        out
    }

    /// Sum of several elements of the same algebra.
    pub fn sum<'a>(ctx: &Context, m: usize, items: impl IntoIterator<Item = &'a PfElement>) -> PfElement {
        let mut out = PfElement::zero(ctx, m);
        for it in items {
            for (k, v) in &it.terms {
                out.add_term(*k, v.clone());
            }
        }
        out
    }

    pub fn try_mul(&self, other: &PfElement) -> Result<PfElement, Error> {
        self.check_same(other)?;
        let n = self.n();
        let m = self.m;
        let mut out = PfElement::zero(&self.ctx, m);
        let lhs: Vec<(Vec<u32>, &Scalar)> = self.terms_digits().collect();
        let rhs: Vec<(Vec<u32>, Vec<u64>, &Scalar)> = other
            .terms_digits()
            .map(|(d, s)| {
                // prefix[r] = Σ_{p<r} j_p
                let mut prefix = vec![0u64; m];
                let mut acc = 0u64;
                for r in 0..m {
                    prefix[r] = acc;
                    acc += d[r] as u64;
                }
                (d, prefix, s)
            })
            .collect();
        let mut digits = vec![0u32; m];
        for (i, a) in &lhs {
            for (j, prefix, b) in &rhs {
                // C_I C_J = q^{-Σ_{p<r} i_r j_p} C_{I+J}
                let mut phase = 0u64;
                for r in 0..m {
                    phase += i[r] as u64 * prefix[r];
                    digits[r] = (i[r] + j[r]) % n;
                }
                let c = &(*a * *b) * &self.ctx.q_pow(-((phase % n as u64) as i64));
                out.add_term(index::encode(n, &digits), c);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &PfElement) -> PfElement {
        self.try_mul(other).expect("matching algebras")
    }

    /// Product of several elements left to right.
    pub fn product<'a>(ctx: &Context, m: usize, items: impl IntoIterator<Item = &'a PfElement>) -> PfElement {
        let mut acc = PfElement::one(ctx, m);
        for it in items {
            acc = acc.mul(it);
        }
        acc
    }

    pub fn pow(&self, k: u32) -> PfElement {
        let mut acc = PfElement::one(&self.ctx, self.m);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The antilinear anti-automorphism with c* = c^{-1}.
    pub fn star(&self) -> PfElement {
        let n = self.n();
        let m = self.m;
        let mut out = PfElement::zero(&self.ctx, m);
        for (d, s) in self.terms_digits() {
            // (C_I)* = q^{-Σ_{p<r} i_p i_r} C_{-I}
            let mut phase = 0u64;
            let mut acc = 0u64;
            for r in 0..m {
                phase += acc * d[r] as u64;
                acc += d[r] as u64;
            }
            let c = &s.conj() * &self.ctx.q_pow(-((phase % n as u64) as i64));
            out.add_term(index::encode(n, &index::negate(n, &d)), c);
        }
        out
    }

    pub fn grade(&self) -> Grade {
        let comps = self.grades();
        match comps.len() {
            0 => Grade::Homogeneous(0),
            1 => Grade::Homogeneous(comps[0]),
            _ => Grade::Mixed(comps),
        }
    }

    fn grades(&self) -> Vec<u32> {
        let mut gs: Vec<u32> = self.terms_digits().map(|(d, _)| index::grade(self.n(), &d)).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Homogeneous components keyed by grade.
    pub fn components(&self) -> BTreeMap<u32, PfElement> {
        let mut out: BTreeMap<u32, PfElement> = BTreeMap::new();
        for (k, v) in &self.terms {
            let g = index::grade(self.n(), &index::decode(self.n(), self.m, *k));
            out.entry(g).or_insert_with(|| PfElement::zero(&self.ctx, self.m)).add_term(*k, v.clone());
        }
        out
    }

    /// Markov trace: the coefficient of the identity.
    pub fn trace(&self) -> Scalar {
        self.terms.get(&0).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    /// Trace-preserving conditional expectation PF_m → PF_{m-1}.
    pub fn conditional_expectation(&self) -> PfElement {
        assert!(self.m >= 1, "no conditional expectation on PF_0");
        let n = self.n() as usize;
        let mut out = PfElement::zero(&self.ctx, self.m - 1);
        for (k, v) in &self.terms {
            if k % n == 0 {
                out.add_term(k / n, v.clone());
            }
        }
        out
    }

    /// ι_l: c_i ↦ c_{i+1}, PF_m → PF_{m+1}.
    pub fn shift_left(&self) -> PfElement {
        self.shift_left_by(1)
    }

    pub fn shift_left_by(&self, k: usize) -> PfElement {
        // prepending zero digits leaves the packed index unchanged
        PfElement { ctx: self.ctx.clone(), m: self.m + k, terms: self.terms.clone() }
    }

    /// Adds k strands on the right: PF_m → PF_{m+k}.
    pub fn embed_right(&self, k: usize) -> PfElement {
        let f = index::count(self.n(), k);
        let mut out = PfElement::zero(&self.ctx, self.m + k);
        for (idx, v) in &self.terms {
            out.terms.insert(idx * f, v.clone());
        }
        out
    }

    /// Places an element of PF_r on strands offset+1, …, offset+r of PF_total.
    pub fn place(&self, offset: usize, total: usize) -> PfElement {
        assert!(offset + self.m <= total, "placement exceeds strand count");
        self.shift_left_by(offset).embed_right(total - offset - self.m)
    }

    /// The Jones projection E_i = N^{-1/2} Σ_k ζ^{k²} c_i^k c_{i+1}^{-k} in PF_m.
    pub fn jones(ctx: &Context, m: usize, i: usize) -> Result<PfElement, Error> {
        if m < 2 || i < 1 || i >= m {
            return Err(Error::InvalidParameter(alloc::format!("E_{} is not defined in PF_{}", i, m)));
        }
        let n = ctx.n() as i64;
        let mut out = PfElement::zero(ctx, m);
        let norm = ctx.inv_sqrt_n();
        for k in 0..n {
            let mut d = vec![0u32; m];
            d[i - 1] = k as u32;
            d[i] = ((n - k) % n) as u32;
            out.add_term(index::encode(ctx.n(), &d), &ctx.zeta_pow(k * k) * &norm);
        }
        Ok(out)
    }

    /// The string Fourier transform √N Φ_r(E_m ⋯ E_1 ι_l(x)).
    pub fn sft(&self) -> PfElement {
        assert!(self.m >= 1, "the string Fourier transform needs at least one strand");
        let m1 = self.m + 1;
        let mut y = self.shift_left();
        for j in 1..=self.m {
            y = PfElement::jones(&self.ctx, m1, j).expect("valid index").mul(&y);
        }
        y.conditional_expectation().scale(&self.ctx.sqrt_n())
    }

    pub fn sft_pow(&self, k: usize) -> PfElement {
        let mut y = self.clone();
        for _ in 0..k {
            y = y.sft();
        }
        y
    }

    /// Inverse transform, using sft^{2m} = q^{g²} on grade-g components.
    pub fn sft_inv(&self) -> PfElement {
        let mut out = PfElement::zero(&self.ctx, self.m);
        for (g, x) in self.components() {
            let y = x.sft_pow(2 * self.m - 1).scale(&self.ctx.q_pow(-((g as i64) * (g as i64))));
            out = out.add(&y);
        }
        out
    }

    /// ρ_π: the string Fourier transform applied m times.
    pub fn rotate_pi(&self) -> PfElement {
        self.sft_pow(self.m)
    }

    /// Θ(x) = ζ^{-g²} ρ_π(x*) on each grade-g component.
    pub fn theta(&self) -> PfElement {
        let mut out = PfElement::zero(&self.ctx, self.m);
        for (g, x) in self.components() {
            let g = g as i64;
            out = out.add(&x.star().rotate_pi().scale(&self.ctx.zeta_pow(-g * g)));
        }
        out
    }

    /// x ⊗₊ y = x · ι_l^p(y); x ⊗₋ y = ι_l^p(y) · x.
    pub fn graded_tensor(&self, other: &PfElement, sign: i8) -> PfElement {
        assert!(self.ctx == other.ctx, "context mismatch");
        let total = self.m + other.m;
        let a = self.embed_right(other.m);
        let b = other.shift_left_by(self.m);
        debug_assert_eq!(a.m, total);
        if sign >= 0 {
            a.mul(&b)
        } else {
            b.mul(&a)
        }
    }

    pub fn tensor_plus(&self, other: &PfElement) -> PfElement {
        self.graded_tensor(other, 1)
    }

    pub fn tensor_minus(&self, other: &PfElement) -> PfElement {
        self.graded_tensor(other, -1)
    }

    /// Entrywise comparison at the context tolerance (exact when both sides are exact).
    pub fn same(&self, other: &PfElement) -> bool {
        if self.m != other.m {
            return false;
        }
        let diff = self.sub(other);
        diff.terms.values().all(|v| self.ctx.is_zero_tol(v))
    }

    pub fn max_abs_diff(&self, other: &PfElement) -> f64 {
        let diff = self.sub(other);
        diff.terms.values().map(|v| v.to_complex().norm()).fold(0.0, f64::max)
    }

    pub fn is_exact(&self) -> bool {
        self.terms.values().all(Scalar::is_exact)
    }
}

/// (x, i) ⊗_t (y, j) = (ζ^{-ij} x ⊗₊ y, i + j).
pub fn twisted_tensor(a: &Lifted, b: &Lifted) -> Lifted {
    let ctx = a.element.ctx().clone();
    let phase = ctx.zeta_pow(-a.lift * b.lift);
    Lifted { element: a.element.tensor_plus(&b.element).scale(&phase), lift: a.lift + b.lift }
}

/// Θ(x) ⊗_t y for homogeneous x, y of equal grade: x takes its canonical lift g
/// and Θ(x) the lift −g, so the twist is ζ^{g²}.
pub fn double(x: &PfElement, y: &PfElement) -> Result<PfElement, Error> {
    let gx = match x.grade() {
        Grade::Homogeneous(g) => g as i64,
        Grade::Mixed(_) => return Err(Error::InvalidLift("left factor is not homogeneous".into())),
    };
    let a = Lifted::new(x.theta(), -gx)?;
    let b = Lifted::canonical(y.clone())?;
    Ok(twisted_tensor(&a, &b).element)
}

/// Θ(x) ⊗_t x summed over the homogeneous components of x.
pub fn double_diagonal(x: &PfElement) -> PfElement {
    let mut out = PfElement::zero(x.ctx(), 2 * x.m());
    for (_, xg) in x.components() {
        out = out.add(&double(&xg, &xg).expect("homogeneous component"));
    }
    out
}

/// The nested cup-cap diagram on 2m strands as a product of Jones projections:
/// E_m (E_{m-1}E_{m+1}) ⋯ (E_1E_3⋯E_{2m-1}) ⋯ (E_{m-1}E_{m+1}) E_m.
pub fn rainbow(ctx: &Context, m: usize) -> PfElement {
    let total = 2 * m;
    let layer = |t: usize| -> Vec<usize> { (0..t).map(|s| m - t + 1 + 2 * s).collect() };
    let mut order: Vec<usize> = Vec::new();
    for t in 1..=m {
        order.extend(layer(t));
    }
    for t in (1..m).rev() {
        order.extend(layer(t));
    }
    let mut acc = PfElement::one(ctx, total);
    for i in order {
        acc = acc.mul(&PfElement::jones(ctx, total, i).expect("valid index"));
    }
    acc
}

/// Minimal projections Q_i = N^{-1} Σ_j q^{ij} c^j of PF_1.
pub fn q_projections(ctx: &Context) -> Vec<PfElement> {
    let n = ctx.n() as i64;
    (0..n)
        .map(|i| {
            let terms = (0..n).map(|j| (vec![j as u32], &ctx.q_pow(i * j) * &ctx.rational(1, n)));
            PfElement::from_terms(ctx, 1, terms)
        })
        .collect()
}

/// v_i^j = N^{-1/2} c_1^i E_1 c_1^{-j} in PF_2, indexed [i][j].
pub fn two_box_units(ctx: &Context) -> Vec<Vec<PfElement>> {
    let n = ctx.n() as i64;
    let e = PfElement::jones(ctx, 2, 1).expect("E_1");
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    PfElement::generator(ctx, 2, 1, i)
                        .mul(&e)
                        .mul(&PfElement::generator(ctx, 2, 1, -j))
                        .scale(&ctx.inv_sqrt_n())
                })
                .collect()
        })
        .collect()
}

/// Matrix units of PF_{2m}: v_I^J = (C_I^* ⊗ 1_m) p (C_J ⊗ 1_m) with p = N^{-m/2}·rainbow.
/// Row and column indices are packed multi-indices of length m.
pub fn even_units(ctx: &Context, m: usize) -> Vec<Vec<PfElement>> {
    let p = rainbow(ctx, m).scale(&ctx.sqrt_n_pow(-(m as i32)));
    let basis: Vec<PfElement> = index::all(ctx.n(), m).map(|d| PfElement::basis(ctx, &d).embed_right(m)).collect();
    basis
        .iter()
        .map(|ci| {
            let left = ci.star().mul(&p);
            basis.iter().map(|cj| left.mul(cj)).collect()
        })
        .collect()
}

/// Matrix units of PF_{2m+1}, one block per minimal projection Q_i on the last
/// strand: entry [i][I][J] = (C_I^* ⊗ 1) (p ⊗ Q_i) (C_J ⊗ 1).
pub fn odd_units(ctx: &Context, m: usize) -> Vec<Vec<Vec<PfElement>>> {
    let total = 2 * m + 1;
    let p = rainbow(ctx, m).scale(&ctx.sqrt_n_pow(-(m as i32))).embed_right(1);
    let basis: Vec<PfElement> = index::all(ctx.n(), m).map(|d| PfElement::basis(ctx, &d).embed_right(m + 1)).collect();
    q_projections(ctx)
        .iter()
        .map(|q| {
            let pq = p.mul(&q.place(2 * m, total));
            basis
                .iter()
                .map(|ci| {
                    let left = ci.star().mul(&pq);
                    basis.iter().map(|cj| left.mul(cj)).collect()
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx3() -> Context {
        Context::exact(3, 1)
    }

    #[test]
    fn reorder_phase() {
        let c = ctx3();
        let c1 = PfElement::generator(&c, 2, 1, 1);
        let c2 = PfElement::generator(&c, 2, 2, 1);
        let lhs = c2.mul(&c1);
        let rhs = c1.mul(&c2).scale(&c.q_pow(-1));
        assert!(lhs.same(&rhs));
    }

    #[test]
    fn jones_squares_to_sqrt_n() {
        let c = ctx3();
        let e = PfElement::jones(&c, 3, 2).unwrap();
        assert!(e.mul(&e).same(&e.scale(&c.sqrt_n())));
        assert!(PfElement::jones(&c, 3, 3).is_err());
    }

    #[test]
    fn sft_of_generator() {
        for (n, s) in [(2, 1), (2, -1), (3, 1), (4, 1), (5, 1)] {
            let c = Context::exact(n, s);
            let x = PfElement::generator(&c, 1, 1, 1);
            assert!(x.sft().same(&x.scale(&c.zeta())));
        }
    }

    #[test]
    fn theta_of_generator_is_inverse() {
        let c = ctx3();
        let x = PfElement::generator(&c, 1, 1, 1);
        assert!(x.theta().same(&PfElement::generator(&c, 1, 1, -1)));
    }

    #[test]
    fn rainbow_projection() {
        for m in 1..=3 {
            let c = Context::exact(2, 1);
            let p = rainbow(&c, m).scale(&c.sqrt_n_pow(-(m as i32)));
            assert!(p.mul(&p).same(&p), "m = {}", m);
        }
    }
}
