//! The discrete Fourier transform F, the Gaussian G and the projective Clifford group.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::check::Check;
use crate::operator::DenseOperator;
use crate::pauli::{pauli_xyz, Version};
use crate::scalar::{Context, Scalar};

/// F|k⟩ = N^{-1/2} Σ_l q^{kl} |l⟩ and G|k⟩ = ζ^{k²} |k⟩.
pub fn fourier_gaussian(ctx: &Context) -> (DenseOperator, DenseOperator) {
    let n = ctx.n() as usize;
    let f = DenseOperator::from_fn(ctx, n, |l, k| &ctx.q_pow((k * l) as i64) * &ctx.inv_sqrt_n());
    let mut g = DenseOperator::zero(ctx, n);
    for k in 0..n {
        g.set(k, k, ctx.zeta_pow((k * k) as i64));
    }
    (f, g)
}

/// For even N, ζ^N = −1 and G^N is the Pauli Z^{N/2} rather than 1.
pub fn fourier_gaussian_relations(ctx: &Context) -> Vec<Check> {
    let p = pauli_xyz(ctx, Version::Q);
    let (f, g) = fourier_gaussian(ctx);
    let fi = f.adjoint();
    let gi = g.adjoint();
    let n = ctx.n();
    let id = DenseOperator::identity(ctx, n as usize);
    let fg = f.mul(&g);
    let ff = f.mul(&f);
    vec![
        Check::flag_from("F unitary", f.is_unitary(), f.is_exact()),
        Check::flag_from("G unitary", g.is_unitary(), g.is_exact()),
        Check::new("F X F^-1 = Z", &f.mul(&p.x).mul(&fi), &p.z),
        Check::new("F Z F^-1 = X^-1", &f.mul(&p.z).mul(&fi), &p.x.adjoint()),
        Check::new("G X G^-1 = zeta X Z", &g.mul(&p.x).mul(&gi), &p.x.mul(&p.z).scale(&ctx.zeta())),
        Check::new("G X G^-1 = Y^-1", &g.mul(&p.x).mul(&gi), &p.y.adjoint()),
        Check::new("G Z G^-1 = Z", &g.mul(&p.z).mul(&gi), &p.z),
        Check::new("(FG)^3 = omega", &fg.pow(3), &id.scale(&ctx.omega())),
        Check::new("F^4 = 1", &f.pow(4), &id),
        if n % 2 == 1 {
            Check::new("G^N = 1", &g.pow(n), &id)
        } else {
            Check::new("G^N = Z^(N/2)", &g.pow(n), &p.z.pow(n / 2))
        },
        Check::new("F^2 G = G F^2", &ff.mul(&g), &g.mul(&ff)),
    ]
}

/// A 2 × 2 matrix over Z_N acting on column vectors (i, j) of X^i Z^j.
pub type Mat2 = [[i64; 2]; 2];

pub const S: Mat2 = [[0, -1], [1, 0]];
pub const T: Mat2 = [[1, 1], [0, 1]];

pub fn reduce(m: Mat2, n: i64) -> Mat2 {
    [[m[0][0].rem_euclid(n), m[0][1].rem_euclid(n)], [m[1][0].rem_euclid(n), m[1][1].rem_euclid(n)]]
}

pub fn transpose(m: Mat2) -> Mat2 {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

fn pauli_word(ctx: &Context, i: i64, j: i64) -> DenseOperator {
    let p = pauli_xyz(ctx, Version::Q);
    let n = ctx.n() as i64;
    p.x.pow(i.rem_euclid(n) as u32).mul(&p.z.pow(j.rem_euclid(n) as u32))
}

/// The matrix of P ↦ U P U^{-1} on exponent vectors, or `None` when U does not
/// normalize the Pauli group. U must be unitary.
pub fn adjoint_action(ctx: &Context, u: &DenseOperator) -> Option<Mat2> {
    let n = ctx.n() as i64;
    let ui = u.adjoint();
    let mut cols = [[0i64; 2]; 2];
    for (c, (i, j)) in [(1, 0), (0, 1)].into_iter().enumerate() {
        let img = u.mul(&pauli_word(ctx, i, j)).mul(&ui);
        let hit = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| projectively_equal(&img, &pauli_word(ctx, a, b)))?;
        cols[c] = [hit.0, hit.1];
    }
    Some([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]])
}

fn first_nonzero(m: &DenseOperator) -> Option<Scalar> {
    m.entries().iter().find(|s| !s.is_zero() && !m.ctx().is_zero_tol(s)).cloned()
}

/// A scaled copy of `m` with the first nonzero entry equal to 1.
pub fn normalize(m: &DenseOperator) -> DenseOperator {
    match first_nonzero(m) {
        Some(s) => m.scale(&s.inv().expect("nonzero")),
        None => m.clone(),
    }
}

pub fn projectively_equal(a: &DenseOperator, b: &DenseOperator) -> bool {
    normalize(a).same(&normalize(b))
}

/// Hashable key of a normalized matrix: exact coordinates, or rounded floats.
fn key(m: &DenseOperator) -> Vec<i128> {
    let mut out = Vec::new();
    for s in m.entries() {
        match s {
            Scalar::Exact(c) => {
                out.extend_from_slice(c.numerators());
                out.push(c.denominator());
            }
            Scalar::Approx(z) => {
                out.push(libm::round(z.re * 1e7) as i128);
                out.push(libm::round(z.im * 1e7) as i128);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub order: usize,
    pub closed: bool,
}

/// Breadth-first closure of ⟨X, Z, F, G⟩ modulo scalars, stopping after `cap` elements.
pub fn clifford_enumerate(ctx: &Context, cap: usize) -> Enumeration {
    let p = pauli_xyz(ctx, Version::Q);
    let (f, g) = fourier_gaussian(ctx);
    let gens: Vec<DenseOperator> = [p.x, p.z, f, g].iter().map(normalize).collect();
    let id = DenseOperator::identity(ctx, ctx.n() as usize);
    let mut seen: BTreeSet<Vec<i128>> = BTreeSet::new();
    seen.insert(key(&id));
    let mut queue = VecDeque::from([id]);
    while let Some(cur) = queue.pop_front() {
        for gen in &gens {
            let next = normalize(&cur.mul(gen));
            if seen.insert(key(&next)) {
                if seen.len() > cap {
                    return Enumeration { order: seen.len(), closed: false };
                }
                queue.push_back(next);
            }
        }
    }
    Enumeration { order: seen.len(), closed: true }
}

/// |SL(2, Z_N)| by counting matrices of determinant 1.
pub fn sl2_order(n: u32) -> usize {
    let n = n as i64;
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if (a * d - b * c).rem_euclid(n) == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

fn mat_mul(a: Mat2, b: Mat2, n: i64) -> Mat2 {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]).rem_euclid(n);
        }
    }
    out
}

/// Size of the subgroup of GL(2, Z_N) generated by the given matrices.
pub fn generated_subgroup_order(gens: &[Mat2], n: u32) -> usize {
    let n = n as i64;
    let id = [[1, 0], [0, 1]];
    let mut seen: BTreeSet<Mat2> = BTreeSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(cur) = queue.pop_front() {
        for g in gens {
            let next = mat_mul(cur, reduce(*g, n), n);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_small_orders() {
        assert_eq!(sl2_order(2), 6);
        assert_eq!(sl2_order(3), 24);
        assert_eq!(sl2_order(5), 120);
    }

    #[test]
    fn fourier_conjugates_shift_to_clock() {
        let c = Context::exact(3, 1);
        let ad = adjoint_action(&c, &fourier_gaussian(&c).0).unwrap();
        assert_eq!(reduce(ad, 3), reduce(S, 3));
    }
}
