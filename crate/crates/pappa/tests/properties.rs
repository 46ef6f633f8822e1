use num_complex::Complex64;
use pappa::rp::{random_ensemble, raw_pairing, rp_check, CouplingMatrix};
use pappa::{index, Context, PfElement, Scalar};
use proptest::prelude::*;

fn ctx_strategy() -> impl Strategy<Value = Context> {
    prop_oneof![Just((2u32, 1i8)), Just((2, -1)), Just((3, 1)), Just((4, 1)), Just((5, 1))]
        .prop_map(|(n, s)| Context::exact(n, s))
}

/// Σ a_k ζ^{e_k} with small integer coefficients.
fn scalar(ctx: &Context, terms: &[(i64, i64)]) -> Scalar {
    terms.iter().fold(ctx.zero(), |acc, &(a, e)| &acc + &(&ctx.int(a) * &ctx.zeta_pow(e)))
}

fn terms() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..=3, 0i64..40), 1..4)
}

fn element(ctx: &Context, m: usize, raw: &[(Vec<u32>, Vec<(i64, i64)>)]) -> PfElement {
    let n = ctx.n();
    PfElement::from_terms(
        ctx,
        m,
        raw.iter().map(|(d, t)| (d.iter().map(|x| x % n).collect::<Vec<u32>>(), scalar(ctx, t))),
    )
}

fn raw_element(m: usize) -> impl Strategy<Value = Vec<(Vec<u32>, Vec<(i64, i64)>)>> {
    prop::collection::vec((prop::collection::vec(0u32..5, m), terms()), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_field_laws(ctx in ctx_strategy(), a in terms(), b in terms(), c in terms()) {
        let (a, b, c) = (scalar(&ctx, &a), scalar(&ctx, &b), scalar(&ctx, &c));
        prop_assert!(ctx.same(&(&a * &b), &(&b * &a)));
        prop_assert!(ctx.same(&(&(&a + &b) * &c), &(&(&a * &c) + &(&b * &c))));
        prop_assert!(ctx.same(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
        prop_assert!(ctx.same(&(&a * &b).conj(), &(&a.conj() * &b.conj())));
        let z = a.to_complex() * b.to_complex() + c.to_complex();
        let w = (&(&a * &b) + &c).to_complex();
        prop_assert!((z - w).norm() < 1e-9 * (1.0 + z.norm()));
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!(inv.is_exact());
            prop_assert!(ctx.same(&(&a * &inv), &ctx.one()));
        }
    }

    #[test]
    fn algebra_product_is_associative_and_star_reverses(
        ctx in ctx_strategy(), x in raw_element(2), y in raw_element(2), z in raw_element(2)
    ) {
        let (x, y, z) = (element(&ctx, 2, &x), element(&ctx, 2, &y), element(&ctx, 2, &z));
        prop_assert!(x.mul(&y).mul(&z).same(&x.mul(&y.mul(&z))));
        prop_assert!(x.mul(&y).star().same(&y.star().mul(&x.star())));
        prop_assert!(x.star().star().same(&x));
        prop_assert!(x.sft().sft_inv().same(&x));
    }

    #[test]
    fn theta_is_multiplicative(ctx in ctx_strategy(), x in raw_element(2), y in raw_element(2)) {
        let (x, y) = (element(&ctx, 2, &x), element(&ctx, 2, &y));
        prop_assert!(x.mul(&y).theta().same(&x.theta().mul(&y.theta())));
        prop_assert!(x.theta().theta().same(&x));
    }
}

fn approx_ctx() -> impl Strategy<Value = Context> {
    prop_oneof![Just((2u32, 1i8)), Just((2, -1)), Just((3, 1))].prop_map(|(n, s)| Context::approx(n, s))
}

fn approx_element(ctx: &Context, m: usize, coeffs: &[(f64, f64)]) -> PfElement {
    let n = ctx.n();
    PfElement::from_terms(
        ctx,
        m,
        index::all(n, m).zip(coeffs.iter().cycle()).map(|(d, &(re, im))| (d, ctx.complex(Complex64::new(re, im)))),
    )
}

fn homogeneous(ctx: &Context, m: usize, grade: u32, coeffs: &[(f64, f64)]) -> PfElement {
    let n = ctx.n();
    let ds: Vec<Vec<u32>> = index::all(n, m).filter(|d| index::grade(n, d) == grade).collect();
    PfElement::from_terms(
        ctx,
        m,
        ds.into_iter().zip(coeffs.iter().cycle()).map(|(d, &(re, im))| (d, ctx.complex(Complex64::new(re, im)))),
    )
}

fn shifted(j: &CouplingMatrix, r: f64) -> CouplingMatrix {
    let mut out = j.clone();
    let old = j.get_packed(0, 0);
    out.set_packed(0, 0, &old + &j.ctx().real(-r));
    out
}

fn coeffs() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn energy_shift_rescales_pairings(ctx in approx_ctx(), seed in any::<u64>(), r in -2.0f64..2.0, c in coeffs()) {
        let j = random_ensemble(&ctx, 1, 1, seed).remove(0);
        let xs = [approx_element(&ctx, 1, &c), PfElement::one(&ctx, 1)];
        let betas = [0.0, 0.5, 1.0];
        let a = rp_check(&j, &betas, &xs, 1e-8).unwrap();
        let b = rp_check(&shifted(&j, r), &betas, &xs, 1e-8).unwrap();
        for (&(beta, _, va), &(_, _, vb)) in a.values.iter().zip(&b.values) {
            let want = va * (-beta * r).exp();
            prop_assert!((vb - want).abs() < 1e-8 * (1.0 + want.abs()), "beta={} {} vs {}", beta, vb, want);
        }
        prop_assert_eq!(a.positive, b.positive);
    }

    #[test]
    fn pairing_vanishes_across_grades(
        ctx in approx_ctx(), seed in any::<u64>(), g in 0u32..3, h in 0u32..3, beta in 0.0f64..2.0,
        cx in coeffs(), cy in coeffs()
    ) {
        let n = ctx.n();
        let (g, h) = (g % n, h % n);
        prop_assume!(g != h);
        let j = random_ensemble(&ctx, 1, 1, seed).remove(0);
        let x = homogeneous(&ctx, 1, g, &cx);
        let y = homogeneous(&ctx, 1, h, &cy);
        prop_assert!(raw_pairing(&j, beta, &x, &y).unwrap().norm() < 1e-10);
    }

    #[test]
    fn infinite_temperature_pairing_is_nonnegative(ctx in approx_ctx(), seed in any::<u64>(), m in 1usize..=2, c in coeffs()) {
        let j = random_ensemble(&ctx, m, 1, seed).remove(0);
        let x = approx_element(&ctx, m, &c);
        let r = rp_check(&j, &[0.0], &[x], 1e-8).unwrap();
        prop_assert!(r.values[0].2 >= -1e-8);
    }
}
