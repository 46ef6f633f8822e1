//! Reflection positivity for Hamiltonians −H = Σ J_I^{I'} Θ(C_I) ⊗_t C_{I'} on PF_{2m}.
//!
//! The pairing ⟨x, y⟩_β = Σ_g tr(e^{−βH} ζ^{g²} Θ(x_g) ⊗₊ y_g) is evaluated on
//! the monomial basis one grade at a time; reflection positivity at β is
//! positivity of these Gram matrices. Exponentials use the Hermitian
//! eigendecomposition of the Jordan–Wigner image of H.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::index;
use crate::operator::{jw_rep, DenseOperator};
use crate::pf::{double, even_units, PfElement};
use crate::scalar::{Context, Scalar};
use crate::Error;

pub const DEFAULT_BETAS: [f64; 5] = [0.0, 0.25, 0.5, 1.0, 2.0];
pub const DEFAULT_TOL: f64 = 1e-8;
pub const LIFT_CONVENTION: &str = "canonical lifts in {0, ..., N-1}; Theta(x) takes the negated lift";

#[derive(Clone, Debug)]
pub struct CouplingMatrix {
    ctx: Context,
    m: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl CouplingMatrix {
    pub fn new(ctx: &Context, m: usize) -> CouplingMatrix {
        CouplingMatrix { ctx: ctx.clone(), m, entries: BTreeMap::new() }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        index::count(self.ctx.n(), self.m)
    }

    pub fn set(&mut self, row: &[u32], col: &[u32], v: Scalar) {
        assert!(row.len() == self.m && col.len() == self.m, "multi-index length mismatch");
        let n = self.ctx.n();
        self.set_packed(index::encode(n, row), index::encode(n, col), v);
    }

    pub fn set_packed(&mut self, r: usize, c: usize, v: Scalar) {
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn get_packed(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    /// Nonzero entries keyed by packed (row, column).
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    fn grade(&self, idx: usize) -> u32 {
        index::grade(self.ctx.n(), &index::decode(self.ctx.n(), self.m, idx))
    }

    /// Hermitian with zero-graded support.
    pub fn validate(&self) -> Result<(), Error> {
        for (&(r, c), v) in &self.entries {
            if self.grade(r) != self.grade(c) {
                return Err(Error::InvalidCoupling(alloc::format!(
                    "entry ({}, {}) couples grades {} and {}",
                    r,
                    c,
                    self.grade(r),
                    self.grade(c)
                )));
            }
            if !self.ctx.same(&self.get_packed(c, r).conj(), v) {
                return Err(Error::InvalidCoupling(alloc::format!("entry ({}, {}) breaks Hermiticity", r, c)));
            }
        }
        Ok(())
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        let d = self.dim();
        let mut out = DMatrix::zeros(d, d);
        for (&(r, c), v) in &self.entries {
            out[(r, c)] = v.to_complex();
        }
        out
    }

    /// The crossing block over multi-indices other than the all-zero one.
    pub fn j0(&self) -> DMatrix<Complex64> {
        let full = self.to_complex();
        let d = self.dim();
        DMatrix::from_fn(d - 1, d - 1, |r, c| full[(r + 1, c + 1)])
    }

    /// Copy with every entry rounded to a multiple of 2^{-bits} in each component, as exact scalars.
    pub fn to_exact_dyadic(&self, exact: &Context, bits: u32) -> CouplingMatrix {
        let scale = 1i64 << bits;
        let imag = imaginary_unit(exact);
        let mut out = CouplingMatrix::new(exact, self.m);
        for (&(r, c), v) in &self.entries {
            let z = v.to_complex();
            let re = exact.rational(libm::round(z.re * scale as f64) as i64, scale);
            let im = exact.rational(libm::round(z.im * scale as f64) as i64, scale);
            out.set_packed(r, c, &re + &(&im * &imag));
        }
        out
    }
}

fn imaginary_unit(ctx: &Context) -> Scalar {
    match ctx.field() {
        Some(f) if f.order() % 4 == 0 => Scalar::Exact(crate::scalar::Cyclo::root(f, (f.order() / 4) as i64)),
        _ => ctx.complex(Complex64::new(0.0, 1.0)),
    }
}

/// T_{I,I'} = ζ^{g g'} Θ(C_I) ⊗₊ C_{I'} for all zero-graded pairs, with the
/// Jordan–Wigner data needed for traces.
pub struct TermTable {
    ctx: Context,
    m: usize,
    terms: BTreeMap<(usize, usize), PfElement>,
}

impl TermTable {
    pub fn new(ctx: &Context, m: usize) -> TermTable {
        let n = ctx.n();
        let basis: Vec<Vec<u32>> = index::all(n, m).collect();
        let mut terms = BTreeMap::new();
        for (a, da) in basis.iter().enumerate() {
            for (b, db) in basis.iter().enumerate() {
                if index::grade(n, da) != index::grade(n, db) {
                    continue;
                }
                let t =
                    double(&PfElement::basis(ctx, da), &PfElement::basis(ctx, db)).expect("monomials are homogeneous");
                terms.insert((a, b), t);
            }
        }
        TermTable { ctx: ctx.clone(), m, terms }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn term(&self, a: usize, b: usize) -> Option<&PfElement> {
        self.terms.get(&(a, b))
    }

    /// Σ J_I^{I'} T_{I,I'}, that is −H, without validating J.
    pub fn coupling_sum(&self, j: &CouplingMatrix) -> PfElement {
        let mut acc = PfElement::zero(&self.ctx, 2 * self.m);
        for ((r, c), v) in j.entries() {
            if let Some(t) = self.terms.get(&(r, c)) {
                acc = acc.add(&t.scale(v));
            }
        }
        acc
    }

    /// μ with (T_{I,I'})* = μ T_{−I,−I'}.
    pub fn star_phase(&self, a: usize, b: usize) -> Scalar {
        let n = self.ctx.n();
        let neg = |x: usize| index::encode(n, &index::negate(n, &index::decode(n, self.m, x)));
        let t = &self.terms[&(a, b)];
        let s = t.star();
        let u = &self.terms[&(neg(a), neg(b))];
        let (k, v) = u.terms().next().expect("nonzero term");
        let sv = s.terms().find(|(kk, _)| *kk == k).map(|(_, x)| x.clone()).unwrap_or_else(|| self.ctx.zero());
        &sv * &v.inv().expect("nonzero")
    }
}

/// −H = Σ J_I^{I'} Θ(C_I) ⊗_t C_{I'}; returns H.
pub fn build_hamiltonian(j: &CouplingMatrix) -> Result<PfElement, Error> {
    build_hamiltonian_with(j, &TermTable::new(j.ctx(), j.m()))
}

pub fn build_hamiltonian_with(j: &CouplingMatrix, table: &TermTable) -> Result<PfElement, Error> {
    j.validate()?;
    let h = table.coupling_sum(j).scale(&j.ctx().int(-1));
    if !h.star().same(&h) {
        return Err(Error::InvalidCoupling(
            "H is not Hermitian: J must also satisfy J(-I,-I') = conj(J(I,I')) mu(I,I')".into(),
        ));
    }
    Ok(h)
}

/// The matrix of sft^{-m}(−H) in the matrix-unit basis v_I^{I'}: N^{m/2} J.
pub fn sft_matrix(j: &CouplingMatrix) -> DenseOperator {
    let ctx = j.ctx();
    let s = ctx.sqrt_n_pow(j.m() as i32);
    DenseOperator::from_fn(ctx, j.dim(), |r, c| &j.get_packed(r, c) * &s)
}

/// Both sides of sft^{-m}(−H) = Σ_{I,I'} M_{I,I'} v_I^{I'}: the left computed by
/// inverting the string Fourier transform m times on −H, the right assembled
/// from `sft_matrix` and the matrix units.
pub fn sft_matrix_sides(j: &CouplingMatrix, table: &TermTable, units: &[Vec<PfElement>]) -> (PfElement, PfElement) {
    let mut lhs = table.coupling_sum(j);
    for _ in 0..j.m() {
        lhs = lhs.sft_inv();
    }
    let mat = sft_matrix(j);
    let mut rhs = PfElement::zero(j.ctx(), 2 * j.m());
    for r in 0..j.dim() {
        for c in 0..j.dim() {
            let v = mat.get(r, c);
            if !v.is_zero() {
                rhs = rhs.add(&units[r][c].scale(v));
            }
        }
    }
    (lhs, rhs)
}

pub fn sft_matrix_agrees(j: &CouplingMatrix) -> bool {
    let table = TermTable::new(j.ctx(), j.m());
    let units = even_units(j.ctx(), j.m());
    let (l, r) = sft_matrix_sides(j, &table, &units);
    l.same(&r)
}

fn hermitian_part(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    (m + m.adjoint()).scale(0.5)
}

/// Smallest eigenvalue of the Hermitian part of `m` with a unit eigenvector.
pub fn min_eigen(m: &DMatrix<Complex64>) -> (f64, DVector<Complex64>) {
    if m.nrows() == 0 {
        return (f64::INFINITY, DVector::zeros(0));
    }
    let eig = hermitian_part(m).symmetric_eigen();
    let (i, v) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, &v)| if v < acc.1 { (i, v) } else { acc });
    (v, eig.eigenvectors.column(i).into_owned())
}

pub fn j0_min_eigenvalue(j: &CouplingMatrix) -> f64 {
    min_eigen(&j.j0()).0
}

pub fn j0_psd(j: &CouplingMatrix, tol: f64) -> bool {
    j0_min_eigenvalue(j) >= -tol
}

/// e^{−βH} for Hermitian H.
pub fn heat(h: &DMatrix<Complex64>, beta: f64) -> DMatrix<Complex64> {
    let eig = hermitian_part(h).symmetric_eigen();
    let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::new(libm::exp(-beta * l), 0.0)));
    &eig.eigenvectors * d * eig.eigenvectors.adjoint()
}

/// w_K = tr(A · jw(C_K)) for every monomial K of PF_{s}, normalized trace.
fn monomial_traces(ctx: &Context, s: usize, a: &DMatrix<Complex64>) -> Vec<Complex64> {
    let n = ctx.n();
    let dim = index::count(n, s);
    let q = ctx.q().to_complex();
    let qp: Vec<Complex64> = (0..n).map(|k| q.powu(k)).collect();
    let cols: Vec<Vec<u32>> = index::all(n, s).collect();
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (kk, kd) in cols.iter().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, cd) in cols.iter().enumerate() {
            // jw(C_K)|c⟩ = q^{-Σ_p k_p Σ_{t<p} c_t} |c + K⟩
            let mut phase = 0u64;
            let mut prefix = 0u64;
            let mut target = vec![0u32; s];
            for p in 0..s {
                phase += kd[p] as u64 * prefix;
                prefix += cd[p] as u64;
                target[p] = (cd[p] + kd[p]) % n;
            }
            let r = index::encode(n, &target);
            let e = (n as u64 - phase % n as u64) % n as u64;
            acc += a[(c, r)] * qp[e as usize];
        }
        out[kk] = acc / dim as f64;
    }
    out
}

fn pair(w: &[Complex64], t: &PfElement) -> Complex64 {
    t.terms().map(|(k, v)| v.to_complex() * w[k]).sum()
}

/// Basis indices of PF_m grouped by grade.
fn grade_blocks(ctx: &Context, m: usize) -> Vec<Vec<usize>> {
    let n = ctx.n();
    let mut out = vec![Vec::new(); n as usize];
    for (i, d) in index::all(n, m).enumerate() {
        out[index::grade(n, &d) as usize].push(i);
    }
    out
}

/// Gram matrices G^{(g)}_{ab} = tr(A · T_{a,b}) for each grade g.
fn grams(table: &TermTable, w: &[Complex64], blocks: &[Vec<usize>]) -> Vec<DMatrix<Complex64>> {
    blocks
        .iter()
        .map(|b| DMatrix::from_fn(b.len(), b.len(), |r, c| pair(w, table.term(b[r], b[c]).expect("same grade"))))
        .collect()
}

#[derive(Clone, Debug)]
pub struct GramRecord {
    pub beta: f64,
    pub grade: u32,
    pub min_eigenvalue: f64,
}

#[derive(Clone, Debug)]
pub struct Witness {
    /// `None` for the β → 0⁺ slope test.
    pub beta: Option<f64>,
    pub x: PfElement,
    pub value: f64,
}

#[derive(Clone, Debug)]
pub struct RpReport {
    /// tr(e^{−βH}(Θ(x) ⊗_t x)) for each β and each x, in input order.
    pub values: Vec<(f64, usize, f64)>,
    pub min_value: f64,
    pub grams: Vec<GramRecord>,
    /// Smallest eigenvalue of the first-order Gram tr(−H T_{a,b}) over non-identity monomials.
    pub slope_min: f64,
    pub witness: Option<Witness>,
    pub positive: bool,
    pub lift_convention: &'static str,
}

fn vector_of(x: &PfElement, block: &[usize]) -> DVector<Complex64> {
    let coeffs: BTreeMap<usize, Complex64> = x.terms().map(|(k, v)| (k, v.to_complex())).collect();
    DVector::from_iterator(block.len(), block.iter().map(|k| coeffs.get(k).copied().unwrap_or_default()))
}

fn element_of(ctx: &Context, m: usize, block: &[usize], v: &DVector<Complex64>) -> PfElement {
    let n = ctx.n();
    PfElement::from_terms(ctx, m, block.iter().zip(v.iter()).map(|(&k, z)| (index::decode(n, m, k), ctx.complex(*z))))
}

/// x ↦ Σ_g x_g^† G^{(g)} x_g, conjugate-linear in the left slot.
fn quadratic_value(x: &PfElement, blocks: &[Vec<usize>], grams: &[DMatrix<Complex64>]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (b, g) in blocks.iter().zip(grams) {
        let v = vector_of(x, b);
        acc += (v.adjoint() * g * &v)[(0, 0)];
    }
    acc
}

/// Evaluates the reflection-positivity pairing of `j` for every β and x, and
/// decides positivity from the per-grade Gram matrices on the full basis
/// together with the β → 0⁺ slope.
pub fn rp_check(j: &CouplingMatrix, betas: &[f64], xs: &[PfElement], tol: f64) -> Result<RpReport, Error> {
    let table = TermTable::new(j.ctx(), j.m());
    rp_check_with(j, &table, betas, xs, tol)
}

pub fn rp_check_with(
    j: &CouplingMatrix,
    table: &TermTable,
    betas: &[f64],
    xs: &[PfElement],
    tol: f64,
) -> Result<RpReport, Error> {
    if let Some(b) = betas.iter().find(|b| !(**b >= 0.0)) {
        return Err(Error::InvalidParameter(alloc::format!("beta must be non-negative, got {}", b)));
    }
    let ctx = j.ctx();
    let m = j.m();
    for x in xs {
        if x.m() != m {
            return Err(Error::Dimension(alloc::format!("x lives in PF_{} but J acts on PF_{}", x.m(), m)));
        }
    }
    let h = build_hamiltonian_with(j, table)?;
    let hm = jw_rep(&h).to_complex();
    let blocks = grade_blocks(ctx, m);

    let mut values = Vec::new();
    let mut gram_records = Vec::new();
    let mut min_value = f64::INFINITY;
    let mut witness: Option<Witness> = None;
    let mut worst = f64::INFINITY;
    for &beta in betas {
        let w = monomial_traces(ctx, 2 * m, &heat(&hm, beta));
        let gs = grams(table, &w, &blocks);
        for (xi, x) in xs.iter().enumerate() {
            let v = quadratic_value(x, &blocks, &gs).re;
            min_value = min_value.min(v);
            values.push((beta, xi, v));
        }
        for (g, (gm, b)) in gs.iter().zip(&blocks).enumerate() {
            let (ev, vec) = min_eigen(gm);
            gram_records.push(GramRecord { beta, grade: g as u32, min_eigenvalue: ev });
            if ev < worst {
                worst = ev;
                if ev < -tol {
                    witness = Some(Witness { beta: Some(beta), x: element_of(ctx, m, b, &vec), value: ev });
                }
            }
        }
    }

    // first order at β = 0: tr((−H) T_{a,b}) on non-identity monomials
    let w1 = monomial_traces(ctx, 2 * m, &(-hm.clone()));
    let mut slope_min = f64::INFINITY;
    let mut slope_witness = None;
    for (g, b) in blocks.iter().enumerate() {
        let inner: Vec<usize> = b.iter().copied().filter(|&k| k != 0).collect();
        if inner.is_empty() {
            continue;
        }
        let gm = DMatrix::from_fn(inner.len(), inner.len(), |r, c| {
            pair(&w1, table.term(inner[r], inner[c]).expect("same grade"))
        });
        let (ev, vec) = min_eigen(&gm);
        if ev < slope_min {
            slope_min = ev;
            slope_witness = Some((g, inner, vec));
        }
    }
    if witness.is_none() && slope_min < -tol {
        let (_, inner, vec) = slope_witness.expect("nonempty block");
        witness = Some(Witness { beta: None, x: element_of(ctx, m, &inner, &vec), value: slope_min });
    }

    let positive = worst >= -tol && slope_min >= -tol && min_value >= -tol;
    Ok(RpReport {
        values,
        min_value,
        grams: gram_records,
        slope_min,
        witness,
        positive,
        lift_convention: LIFT_CONVENTION,
    })
}

/// tr(e^{−βH} Θ(x) ⊗₊ y) without grade projection.
pub fn raw_pairing(j: &CouplingMatrix, beta: f64, x: &PfElement, y: &PfElement) -> Result<Complex64, Error> {
    let h = build_hamiltonian(j)?;
    let e = heat(&jw_rep(&h).to_complex(), beta);
    let t = x.theta().tensor_plus(y);
    let w = monomial_traces(j.ctx(), 2 * j.m(), &e);
    Ok(pair(&w, &t))
}

#[derive(Clone, Debug)]
pub struct EquivalenceRecord {
    pub j0_psd: bool,
    pub j0_min_eigenvalue: f64,
    pub rp_positive: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub records: Vec<EquivalenceRecord>,
    pub mismatches: usize,
}

/// For each J, compares positivity of the crossing block J₀ with reflection
/// positivity over the full monomial basis.
pub fn theorem_equivalence(ensemble: &[CouplingMatrix], betas: &[f64], tol: f64) -> Result<EquivalenceReport, Error> {
    let mut records = Vec::new();
    let mut mismatches = 0;
    let mut tables: Vec<TermTable> = Vec::new();
    for j in ensemble {
        let pos = tables.iter().position(|t| t.m == j.m() && t.ctx == *j.ctx());
        let table = match pos {
            Some(p) => &tables[p],
            None => {
                tables.push(TermTable::new(j.ctx(), j.m()));
                tables.last().expect("just pushed")
            }
        };
        let xs: Vec<PfElement> = index::all(j.ctx().n(), j.m()).map(|d| PfElement::basis(j.ctx(), &d)).collect();
        let report = rp_check_with(j, table, betas, &xs, tol)?;
        let ev = j0_min_eigenvalue(j);
        let psd = ev >= -tol;
        if psd != report.positive {
            mismatches += 1;
        }
        records.push(EquivalenceRecord {
            j0_psd: psd,
            j0_min_eigenvalue: ev,
            rp_positive: report.positive,
            witness: report.witness,
        });
    }
    Ok(EquivalenceReport { records, mismatches })
}

/// Gram matrix ⟨x_a, x_b⟩ with e^{−βH} replaced by its Taylor polynomial of degree K.
pub fn quantized_gram(j: &CouplingMatrix, beta: f64, xs: &[PfElement], k: usize) -> Result<DMatrix<Complex64>, Error> {
    if !j0_psd(j, DEFAULT_TOL) {
        return Err(Error::InvalidCoupling(alloc::format!(
            "the crossing block J0 is indefinite (smallest eigenvalue {:.3e})",
            j0_min_eigenvalue(j)
        )));
    }
    let table = TermTable::new(j.ctx(), j.m());
    let h = build_hamiltonian_with(j, &table)?;
    let mh = -jw_rep(&h).to_complex();
    let d = mh.nrows();
    let mut series = DMatrix::<Complex64>::identity(d, d);
    let mut term = DMatrix::<Complex64>::identity(d, d);
    for i in 1..=k {
        term = &term * &mh * Complex64::new(beta / i as f64, 0.0);
        series += &term;
    }
    let w = monomial_traces(j.ctx(), 2 * j.m(), &series);
    let blocks = grade_blocks(j.ctx(), j.m());
    let gs = grams(&table, &w, &blocks);
    let mut out = DMatrix::zeros(xs.len(), xs.len());
    for (a, x) in xs.iter().enumerate() {
        for (b, y) in xs.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (blk, g) in blocks.iter().zip(&gs) {
                let vx = vector_of(x, blk);
                let vy = vector_of(y, blk);
                acc += (vx.adjoint() * g * vy)[(0, 0)];
            }
            out[(a, b)] = acc;
        }
    }
    Ok(out)
}

/// Exact moment Grams tr((−H)^k T_{a,b}) for k = 0..=kmax, one matrix per (k, grade).
pub fn moment_grams(j: &CouplingMatrix, kmax: usize) -> Result<Vec<(usize, u32, Vec<Vec<Scalar>>)>, Error> {
    let table = TermTable::new(j.ctx(), j.m());
    let h = build_hamiltonian_with(j, &table)?;
    let mh = h.scale(&j.ctx().int(-1));
    let blocks = grade_blocks(j.ctx(), j.m());
    let mut out = Vec::new();
    let mut pw = PfElement::one(j.ctx(), 2 * j.m());
    for k in 0..=kmax {
        for (g, b) in blocks.iter().enumerate() {
            let rows = b
                .iter()
                .map(|&r| b.iter().map(|&c| pw.mul(table.term(r, c).expect("same grade")).trace()).collect())
                .collect();
            out.push((k, g as u32, rows));
        }
        pw = pw.mul(&mh);
    }
    Ok(out)
}

/// Adjusts J so that H is Hermitian: alternately averages J with its
/// conjugate transpose and with the image under J(−I,−I') ← conj(J(I,I')) μ(I,I').
pub fn symmetrize(j: &CouplingMatrix, table: &TermTable) -> CouplingMatrix {
    let ctx = j.ctx();
    let n = ctx.n();
    let m = j.m();
    let d = j.dim();
    let neg = |x: usize| index::encode(n, &index::negate(n, &index::decode(n, m, x)));
    let mut mu = BTreeMap::new();
    for a in 0..d {
        for b in 0..d {
            if table.term(a, b).is_some() {
                mu.insert((a, b), table.star_phase(a, b).to_complex());
            }
        }
    }
    let mut cur = j.to_complex();
    for _ in 0..200 {
        let herm = hermitian_part(&cur);
        let mut img = DMatrix::<Complex64>::zeros(d, d);
        for (&(a, b), u) in &mu {
            img[(neg(a), neg(b))] = herm[(a, b)].conj() * u;
        }
        let next = (&herm + &img).scale(0.5);
        let delta = (&next - &cur).norm();
        cur = next;
        if delta < 1e-14 {
            break;
        }
    }
    let cur = hermitian_part(&cur);
    let mut out = CouplingMatrix::new(ctx, m);
    for &(a, b) in mu.keys() {
        let z = cur[(a, b)];
        if z.norm() > 1e-15 {
            out.set_packed(a, b, ctx.complex(z));
        }
    }
    out
}

/// `count` coupling matrices from a seeded generator. Even-numbered draws use a
/// uniformly random crossing block; odd-numbered draws use a positive one of the
/// form A A^†. Both are then symmetrized.
pub fn random_ensemble(ctx: &Context, m: usize, count: usize, seed: u64) -> Vec<CouplingMatrix> {
    let table = TermTable::new(ctx, m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ctx.n();
    let d = index::count(n, m);
    let blocks = grade_blocks(ctx, m);
    let mut uniform = move || rng.random::<f64>() * 2.0 - 1.0;
    let mut out = Vec::with_capacity(count);
    for t in 0..count {
        let mut raw = DMatrix::<Complex64>::zeros(d, d);
        for b in &blocks {
            let k = b.len();
            let block = if t % 2 == 1 {
                let a = DMatrix::from_fn(k, k, |_, _| Complex64::new(uniform(), uniform()));
                &a * a.adjoint()
            } else {
                DMatrix::from_fn(k, k, |_, _| Complex64::new(uniform(), uniform()))
            };
            for (r, &rr) in b.iter().enumerate() {
                for (c, &cc) in b.iter().enumerate() {
                    raw[(rr, cc)] = block[(r, c)];
                }
            }
        }
        // the border row and column through the identity are arbitrary
        for c in 0..d {
            if table.term(0, c).is_some() {
                let z = Complex64::new(uniform(), uniform());
                raw[(0, c)] = z;
                raw[(c, 0)] = z.conj();
            }
        }
        let mut j = CouplingMatrix::new(ctx, m);
        for &(a, b) in table.terms.keys() {
            j.set_packed(a, b, ctx.complex(raw[(a, b)]));
        }
        out.push(symmetrize(&j, &table));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diag_zero_one_hamiltonian() {
        let c = Context::exact(2, 1);
        let mut j = CouplingMatrix::new(&c, 1);
        j.set(&[1], &[1], c.one());
        let h = build_hamiltonian(&j).unwrap();
        let expected = PfElement::basis(&c, &[1, 1]).scale(&c.zeta()).scale(&c.int(-1));
        assert!(h.same(&expected));
        assert!(j0_psd(&j, 1e-8));
    }

    #[test]
    fn graded_coupling_rejected() {
        let c = Context::exact(3, 1);
        let mut j = CouplingMatrix::new(&c, 1);
        j.set(&[1], &[2], c.one());
        j.set(&[2], &[1], c.one());
        assert!(matches!(build_hamiltonian(&j), Err(Error::InvalidCoupling(_))));
    }

    #[test]
    fn negative_beta_rejected() {
        let c = Context::approx(2, 1);
        let j = CouplingMatrix::new(&c, 1);
        assert!(rp_check(&j, &[-1.0], &[], 1e-8).is_err());
    }
}
