//! The braids b⁺, b⁻ as elements of PF_2, their identities, and the closure invariant.

use alloc::vec::Vec;

use crate::check::Check;
use crate::operator::{jw_rep, DenseOperator};
use crate::pf::PfElement;
use crate::scalar::{Context, Scalar};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    Pos,
    Neg,
}

/// The zero-graded 2-box u_i = ζ^{i²} c_1^{-i} c_2^{i}.
pub fn u(ctx: &Context, i: i64) -> PfElement {
    PfElement::generator(ctx, 2, 1, -i).mul(&PfElement::generator(ctx, 2, 2, i)).scale(&ctx.zeta_pow(i * i))
}

/// b⁺ = ω^{-1/2} N^{-1/2} Σ ζ^{i²} u_i and b⁻ = ω^{1/2} N^{-1/2} Σ ζ^{-i²} u_i.
pub fn braid(ctx: &Context, crossing: Crossing) -> PfElement {
    let n = ctx.n() as i64;
    let (pre, s) = match crossing {
        Crossing::Pos => (ctx.omega_sqrt_inv(), 1),
        Crossing::Neg => (ctx.omega_sqrt(), -1),
    };
    let mut acc = PfElement::zero(ctx, 2);
    for i in 0..n {
        acc = acc.add(&u(ctx, i).scale(&ctx.zeta_pow(s * i * i)));
    }
    acc.scale(&(&pre * &ctx.inv_sqrt_n()))
}

/// The crossing on strands p, p+1 of PF_total.
pub fn braid_at(ctx: &Context, total: usize, p: usize, crossing: Crossing) -> PfElement {
    braid(ctx, crossing).place(p - 1, total)
}

/// (b⁺, b⁻) as N² × N² matrices.
pub fn braid_matrices(ctx: &Context) -> (DenseOperator, DenseOperator) {
    (jw_rep(&braid(ctx, Crossing::Pos)), jw_rep(&braid(ctx, Crossing::Neg)))
}

/// √N Φ_r(x): closing the rightmost strand of x.
pub fn close_right(x: &PfElement) -> PfElement {
    x.conditional_expectation().scale(&x.ctx().sqrt_n())
}

fn product(ctx: &Context, total: usize, items: &[PfElement]) -> PfElement {
    PfElement::product(ctx, total, items)
}

pub fn verify_braid_axioms(ctx: &Context) -> Vec<Check> {
    let mut out = Vec::new();
    let bp = braid(ctx, Crossing::Pos);
    let bm = braid(ctx, Crossing::Neg);
    let one2 = PfElement::one(ctx, 2);
    let (mp, mm) = (jw_rep(&bp), jw_rep(&bm));
    out.push(Check::flag_from("b+ unitary", mp.is_unitary(), mp.is_exact()));
    out.push(Check::flag_from("b- unitary", mm.is_unitary(), mm.is_exact()));
    out.push(Check::pf("(b-)* = b+", &bm.star(), &bp));
    out.push(Check::pf("Reidemeister II: b+ b- = 1", &bp.mul(&bm), &one2));
    out.push(Check::pf("Reidemeister II: b- b+ = 1", &bm.mul(&bp), &one2));
    out.push(Check::pf("sft(b+) = b-", &bp.sft(), &bm));
    out.push(Check::pf("sft(b-) = b+", &bm.sft(), &bp));
    out.push(Check::pf(
        "Reidemeister I: closing b- gives omega^(1/2)",
        &close_right(&bm),
        &PfElement::scalar(ctx, 1, ctx.omega_sqrt()),
    ));
    out.push(Check::pf(
        "Reidemeister I: closing b+ gives omega^(-1/2)",
        &close_right(&bp),
        &PfElement::scalar(ctx, 1, ctx.omega_sqrt_inv()),
    ));
    for c in [Crossing::Pos, Crossing::Neg] {
        let b1 = braid_at(ctx, 3, 1, c);
        let b2 = braid_at(ctx, 3, 2, c);
        let name = match c {
            Crossing::Pos => "Yang-Baxter (b+)",
            Crossing::Neg => "Yang-Baxter (b-)",
        };
        out.push(Check::pf(
            name,
            &product(ctx, 3, &[b1.clone(), b2.clone(), b1.clone()]),
            &product(ctx, 3, &[b2.clone(), b1, b2]),
        ));
    }
    let c1 = PfElement::generator(ctx, 2, 1, 1);
    let c2 = PfElement::generator(ctx, 2, 2, 1);
    out.push(Check::pf("braid-parafermion: b+ c1 = c2 b+", &bp.mul(&c1), &c2.mul(&bp)));
    out.push(Check::pf("braid-parafermion: b- c2 = c1 b-", &bm.mul(&c2), &c1.mul(&bm)));
    out.extend(under_slide_checks(ctx, 2));
    out.extend(flip_checks(ctx));
    out.extend(double_string_checks(ctx));
    out
}

/// B (x ⊗ 1) = ι_l(x) B with B = b⁺_1 ⋯ b⁺_m, for every basis m-box x with m ≤ `max_m`.
pub fn under_slide_checks(ctx: &Context, max_m: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let total = m + 1;
        let items: Vec<PfElement> = (1..=m).map(|k| braid_at(ctx, total, k, Crossing::Pos)).collect();
        let b = product(ctx, total, &items);
        let mut pass = true;
        let mut dev: f64 = 0.0;
        let mut exact = true;
        for digits in crate::index::all(ctx.n(), m) {
            let x = PfElement::basis(ctx, &digits);
            let lhs = b.mul(&x.embed_right(1));
            let rhs = x.shift_left().mul(&b);
            pass &= lhs.same(&rhs);
            exact &= lhs.is_exact() && rhs.is_exact();
            dev = dev.max(lhs.max_abs_diff(&rhs));
        }
        out.push(Check {
            name: alloc::format!("under-slide of every {}-box basis element", m),
            pass,
            deviation: dev,
            exact,
        });
    }
    out
}

/// F (u_i ⊗ 1) F^{-1} = 1 ⊗ u_{-i} with F = b⁻_1 b⁻_2.
pub fn flip_checks(ctx: &Context) -> Vec<Check> {
    let n = ctx.n() as i64;
    let f = braid_at(ctx, 3, 1, Crossing::Neg).mul(&braid_at(ctx, 3, 2, Crossing::Neg));
    let finv = braid_at(ctx, 3, 2, Crossing::Pos).mul(&braid_at(ctx, 3, 1, Crossing::Pos));
    let mut pass = true;
    let mut dev: f64 = 0.0;
    let mut exact = true;
    for i in 0..n {
        let lhs = f.mul(&u(ctx, i).embed_right(1)).mul(&finv);
        let rhs = u(ctx, -i).shift_left();
        pass &= lhs.same(&rhs);
        exact &= lhs.is_exact() && rhs.is_exact();
        dev = dev.max(lhs.max_abs_diff(&rhs));
    }
    alloc::vec![Check { name: "Z2 flip of zero-graded 2-boxes".into(), pass, deviation: dev, exact }]
}

/// D (x ⊗ 1 ⊗ 1) D^{-1} = 1 ⊗ 1 ⊗ x for zero-graded 2-boxes x, with D = (b_2 b_3)(b_1 b_2).
pub fn double_string_checks(ctx: &Context) -> Vec<Check> {
    let n = ctx.n() as i64;
    let mut out = Vec::new();
    for (c, name) in [(Crossing::Pos, "double-string slide (b+)"), (Crossing::Neg, "double-string slide (b-)")] {
        let inv = match c {
            Crossing::Pos => Crossing::Neg,
            Crossing::Neg => Crossing::Pos,
        };
        let b = |p: usize, x: Crossing| braid_at(ctx, 4, p, x);
        let d = product(ctx, 4, &[b(2, c), b(3, c), b(1, c), b(2, c)]);
        let dinv = product(ctx, 4, &[b(2, inv), b(1, inv), b(3, inv), b(2, inv)]);
        let mut pass = true;
        let mut dev: f64 = 0.0;
        let mut exact = true;
        for i in 0..n {
            let lhs = d.mul(&u(ctx, i).embed_right(2)).mul(&dinv);
            let rhs = u(ctx, i).shift_left_by(2);
            pass &= lhs.same(&rhs);
            exact &= lhs.is_exact() && rhs.is_exact();
            dev = dev.max(lhs.max_abs_diff(&rhs));
        }
        out.push(Check { name: name.into(), pass, deviation: dev, exact });
    }
    out
}

#[derive(Clone, Debug)]
pub struct ClosureValue {
    /// δ^{n-1} tr(β) for the braid β on n strands.
    pub raw: Scalar,
    /// Number of positive minus negative crossings.
    pub writhe: i64,
    /// ω^{w/2} · raw, invariant under both Markov moves.
    pub normalized: Scalar,
}

/// Markov closure of a braid word; `+k` is b⁺ on strands k, k+1 and `-k` is b⁻.
pub fn braid_closure_invariant(ctx: &Context, word: &[i32], strands: usize) -> Result<ClosureValue, Error> {
    if strands == 0 {
        return Err(Error::InvalidParameter("a braid needs at least one strand".into()));
    }
    let mut acc = PfElement::one(ctx, strands);
    let mut writhe = 0i64;
    for &g in word {
        let k = g.unsigned_abs() as usize;
        if g == 0 || k >= strands {
            return Err(Error::InvalidParameter(alloc::format!(
                "generator {} out of range for {} strands",
                g,
                strands
            )));
        }
        let c = if g > 0 { Crossing::Pos } else { Crossing::Neg };
        writhe += if g > 0 { 1 } else { -1 };
        acc = acc.mul(&braid_at(ctx, strands, k, c));
    }
    let raw = &acc.trace() * &ctx.sqrt_n_pow(strands as i32 - 1);
    let twist = if writhe >= 0 { ctx.omega_sqrt() } else { ctx.omega_sqrt_inv() };
    let normalized = &raw * &twist.pow(writhe.unsigned_abs() as u32);
    Ok(ClosureValue { raw, writhe, normalized })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_hold_at_n3() {
        let c = Context::exact(3, 1);
        for check in verify_braid_axioms(&c) {
            assert!(check.pass, "{}", check.name);
        }
    }

    #[test]
    fn empty_closure() {
        let c = Context::exact(2, 1);
        let v = braid_closure_invariant(&c, &[], 2).unwrap();
        assert!(c.same(&v.raw, &c.sqrt_n()));
        assert!(braid_closure_invariant(&c, &[2], 2).is_err());
    }
}
