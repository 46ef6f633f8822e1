//! Parafermion Pauli matrices, quaternions and the quadratic four-parafermion models.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use crate::check::Check;
use crate::operator::{jw_rep, DenseOperator};
use crate::pf::PfElement;
use crate::scalar::Context;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Version {
    /// XY = qYX
    Q,
    /// XY = q^{-1}YX
    QInv,
}

impl Version {
    /// +1 for version q, −1 for version q^{-1}.
    pub fn sign(self) -> i64 {
        match self {
            Version::Q => 1,
            Version::QInv => -1,
        }
    }
}

impl FromStr for Version {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "q" => Ok(Version::Q),
            "q_inv" | "q-inv" | "qinv" => Ok(Version::QInv),
            _ => Err(Error::InvalidParameter(alloc::format!("unknown Pauli version {:?}", s))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Triple {
    pub x: DenseOperator,
    pub y: DenseOperator,
    pub z: DenseOperator,
}

/// X, Y, Z on C^N.
pub fn pauli_xyz(ctx: &Context, version: Version) -> Triple {
    let n = ctx.n() as usize;
    let mut x = DenseOperator::zero(ctx, n);
    let mut y = DenseOperator::zero(ctx, n);
    let mut z = DenseOperator::zero(ctx, n);
    for k in 0..n {
        let ki = k as i64;
        match version {
            Version::Q => {
                x.set((k + 1) % n, k, ctx.one());
                y.set((k + n - 1) % n, k, ctx.zeta_pow(1 - 2 * ki));
            }
            Version::QInv => {
                x.set((k + n - 1) % n, k, ctx.one());
                y.set((k + 1) % n, k, ctx.zeta_pow(-2 * ki - 1));
            }
        }
        z.set(k, k, ctx.q_pow(ki));
    }
    Triple { x, y, z }
}

/// Quaternion units built from the Pauli triple of the given version.
pub fn quaternions(ctx: &Context, version: Version) -> Triple {
    let p = pauli_xyz(ctx, version);
    let s = version.sign();
    let minus = |e: i64| &ctx.int(-1) * &ctx.zeta_pow(e);
    Triple { x: p.y.scale(&minus(s)), y: p.x.scale(&minus(s)), z: p.z.scale(&minus(-s)) }
}

/// The four quadratic models, named by the commutation version and the shared strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelTag {
    Q1,
    QInv4,
    Q4,
    QInv1,
}

impl ModelTag {
    pub const ALL: [ModelTag; 4] = [ModelTag::Q1, ModelTag::QInv4, ModelTag::Q4, ModelTag::QInv1];

    pub fn version(self) -> Version {
        match self {
            ModelTag::Q1 | ModelTag::Q4 => Version::Q,
            ModelTag::QInv4 | ModelTag::QInv1 => Version::QInv,
        }
    }

    /// (a, b) with X̂ŶẐ = ζ^a γ^b.
    pub fn product_exponents(self) -> (i64, i64) {
        match self {
            ModelTag::Q1 => (1, 1),
            ModelTag::QInv4 => (-1, -1),
            ModelTag::Q4 => (1, -1),
            ModelTag::QInv1 => (-1, -1),
        }
    }

    /// Generator pairs ((p, e), (r, f)) for X̂, Ŷ, Ẑ = ζ c_p^e c_r^f.
    pub fn pairs(self) -> [((usize, i64), (usize, i64)); 3] {
        match self {
            // Ẑ uses c_1 c_2^{-1}: the only pair through c_1 satisfying the model's relations.
            ModelTag::Q1 => [((1, 1), (4, -1)), ((1, -1), (3, 1)), ((1, 1), (2, -1))],
            ModelTag::QInv4 => [((1, -1), (4, 1)), ((2, 1), (4, -1)), ((3, -1), (4, 1))],
            ModelTag::Q4 => [((3, -1), (4, 1)), ((2, 1), (4, -1)), ((1, -1), (4, 1))],
            ModelTag::QInv1 => [((1, -1), (2, 1)), ((1, 1), (3, -1)), ((1, -1), (4, 1))],
        }
    }
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModelTag::Q1 => "(q,1)",
            ModelTag::QInv4 => "(q^-1,4)",
            ModelTag::Q4 => "(q,4)",
            ModelTag::QInv1 => "(q^-1,1)",
        };
        f.write_str(s)
    }
}

impl FromStr for ModelTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "q1" | "(q,1)" => Ok(ModelTag::Q1),
            "qinv4" | "(q^-1,4)" => Ok(ModelTag::QInv4),
            "q4" | "(q,4)" => Ok(ModelTag::Q4),
            "qinv1" | "(q^-1,1)" => Ok(ModelTag::QInv1),
            _ => Err(Error::InvalidParameter(alloc::format!("unknown model tag {:?}", s))),
        }
    }
}

/// ζ c_p^e c_r^f in PF_4.
pub fn quadratic(ctx: &Context, pair: ((usize, i64), (usize, i64))) -> PfElement {
    let ((p, e), (r, f)) = pair;
    PfElement::generator(ctx, 4, p, e).mul(&PfElement::generator(ctx, 4, r, f)).scale(&ctx.zeta())
}

/// γ = q c_1 c_2^{-1} c_3 c_4^{-1}.
pub fn gamma_element(ctx: &Context) -> PfElement {
    PfElement::product(
        ctx,
        4,
        &[
            PfElement::generator(ctx, 4, 1, 1),
            PfElement::generator(ctx, 4, 2, -1),
            PfElement::generator(ctx, 4, 3, 1),
            PfElement::generator(ctx, 4, 4, -1),
        ],
    )
    .scale(&ctx.q())
}

#[derive(Clone, Debug)]
pub struct QuadraticModel {
    pub tag: ModelTag,
    pub x: DenseOperator,
    pub y: DenseOperator,
    pub z: DenseOperator,
    pub gamma: DenseOperator,
}

/// X̂, Ŷ, Ẑ, γ as N⁴ × N⁴ matrices through the Jordan–Wigner map.
pub fn quadratic_model(ctx: &Context, tag: ModelTag) -> QuadraticModel {
    let [a, b, c] = tag.pairs();
    QuadraticModel {
        tag,
        x: jw_rep(&quadratic(ctx, a)),
        y: jw_rep(&quadratic(ctx, b)),
        z: jw_rep(&quadratic(ctx, c)),
        gamma: jw_rep(&gamma_element(ctx)),
    }
}

/// Projection (1/N) Σ_k γ^k onto the γ = 1 eigenspace.
pub fn gamma_one_projection(ctx: &Context, gamma: &DenseOperator) -> DenseOperator {
    let n = ctx.n();
    let mut acc = DenseOperator::zero(ctx, gamma.dim());
    let mut pw = DenseOperator::identity(ctx, gamma.dim());
    for _ in 0..n {
        acc = acc.add(&pw);
        pw = pw.mul(gamma);
    }
    acc.scale(&ctx.rational(1, n as i64))
}

/// X^N = Y^N = Z^N = 1 and the three q-commutations with exponent `s`.
fn first_relations(ctx: &Context, x: &DenseOperator, y: &DenseOperator, z: &DenseOperator, s: i64) -> Vec<Check> {
    let n = ctx.n();
    let id = DenseOperator::identity(ctx, x.dim());
    let qs = ctx.q_pow(s);
    alloc::vec![
        Check::new("X^N = 1", &x.pow(n), &id),
        Check::new("Y^N = 1", &y.pow(n), &id),
        Check::new("Z^N = 1", &z.pow(n), &id),
        Check::new("XY = q^s YX", &x.mul(y), &y.mul(x).scale(&qs)),
        Check::new("YZ = q^s ZY", &y.mul(z), &z.mul(y).scale(&qs)),
        Check::new("ZX = q^s XZ", &z.mul(x), &x.mul(z).scale(&qs)),
    ]
}

/// Relations of the Pauli triple together with the cyclic product XYZ = ζ^{±1}.
pub fn pauli_relations(ctx: &Context, version: Version) -> Vec<Check> {
    let Triple { x, y, z } = pauli_xyz(ctx, version);
    let s = version.sign();
    let mut out = first_relations(ctx, &x, &y, &z, s);
    let id = DenseOperator::identity(ctx, x.dim());
    let target = id.scale(&ctx.zeta_pow(s));
    out.push(Check::new("XYZ = zeta^s", &x.mul(&y).mul(&z), &target));
    out.push(Check::new("YZX = zeta^s", &y.mul(&z).mul(&x), &target));
    out.push(Check::new("ZXY = zeta^s", &z.mul(&x).mul(&y), &target));
    for (name, m) in [("X unitary", &x), ("Y unitary", &y), ("Z unitary", &z)] {
        out.push(Check::flag_from(name, m.is_unitary(), m.is_exact()));
    }
    out
}

pub fn quaternion_relations(ctx: &Context, version: Version) -> Vec<Check> {
    let Triple { x: i, y: j, z: k } = quaternions(ctx, version);
    let n = ctx.n();
    let minus = DenseOperator::identity(ctx, i.dim()).scale(&ctx.int(-1));
    let qs = ctx.q_pow(-version.sign());
    alloc::vec![
        Check::new("i^N = -1", &i.pow(n), &minus),
        Check::new("j^N = -1", &j.pow(n), &minus),
        Check::new("k^N = -1", &k.pow(n), &minus),
        Check::new("ij = q^-s ji", &i.mul(&j), &j.mul(&i).scale(&qs)),
        Check::new("jk = q^-s kj", &j.mul(&k), &k.mul(&j).scale(&qs)),
        Check::new("ki = q^-s ik", &k.mul(&i), &i.mul(&k).scale(&qs)),
        Check::new("ijk = -1", &i.mul(&j).mul(&k), &minus),
    ]
}

pub fn model_relations(ctx: &Context, model: &QuadraticModel) -> Vec<Check> {
    let QuadraticModel { tag, x, y, z, gamma } = model;
    let s = tag.version().sign();
    let mut out = first_relations(ctx, x, y, z, s);
    let (a, b) = tag.product_exponents();
    let g = if b >= 0 { gamma.clone() } else { gamma.adjoint() };
    let target = g.scale(&ctx.zeta_pow(a));
    out.push(Check::new("XYZ = zeta^a gamma^b", &x.mul(y).mul(z), &target));
    out.push(Check::new("YZX = zeta^a gamma^b", &y.mul(z).mul(x), &target));
    out.push(Check::new("ZXY = zeta^a gamma^b", &z.mul(x).mul(y), &target));
    for (name, m) in [("gamma X = X gamma", x), ("gamma Y = Y gamma", y), ("gamma Z = Z gamma", z)] {
        out.push(Check::new(name, &gamma.mul(m), &m.mul(gamma)));
    }
    let p = gamma_one_projection(ctx, gamma);
    let id = DenseOperator::identity(ctx, x.dim());
    out.push(Check::new("XYZ = zeta^a on gamma = 1", &x.mul(y).mul(z).mul(&p), &id.scale(&ctx.zeta_pow(a)).mul(&p)));
    out.push(Check::new("projection idempotent", &p.mul(&p), &p));
    let rank = p.trace();
    let n3 = ctx.int((ctx.n() as i64).pow(3));
    out.push(Check::scalar("dim(gamma = 1) = N^3", ctx, &rank, &n3));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn version_q_relations_small() {
        for n in 2..=4 {
            let c = Context::exact(n, 1);
            for check in pauli_relations(&c, Version::Q).into_iter().chain(pauli_relations(&c, Version::QInv)) {
                assert!(check.pass, "N={} {}", n, check.name);
            }
        }
    }

    #[test]
    fn printed_first_model_is_degenerate() {
        let c = Context::exact(3, 1);
        let x = jw_rep(&quadratic(&c, ((1, 1), (4, -1))));
        let z = jw_rep(&quadratic(&c, ((1, 1), (4, -1))));
        assert!(!z.mul(&x).same(&x.mul(&z).scale(&c.q())));
    }
}
