//! Identity suites over the algebra, its Jordan–Wigner image, the Jones
//! projections and the string Fourier transform.

use alloc::format;
use alloc::vec::Vec;

use crate::check::Check;
use crate::index;
use crate::operator::{jw_rep, DenseOperator};
use crate::pf::{even_units, odd_units, q_projections, twisted_tensor, two_box_units, Lifted, PfElement};
use crate::scalar::Context;

fn basis(ctx: &Context, m: usize) -> Vec<PfElement> {
    index::all(ctx.n(), m).map(|d| PfElement::basis(ctx, &d)).collect()
}

fn grade_of(x: &PfElement) -> i64 {
    match x.grade() {
        crate::Grade::Homogeneous(g) => g as i64,
        crate::Grade::Mixed(_) => panic!("basis monomials are homogeneous"),
    }
}

/// Folds one identity over many cases into a single record.
struct Sweep {
    name: alloc::string::String,
    pass: bool,
    deviation: f64,
    exact: bool,
}

impl Sweep {
    fn new(name: impl Into<alloc::string::String>) -> Sweep {
        Sweep { name: name.into(), pass: true, deviation: 0.0, exact: true }
    }

    fn pf(&mut self, lhs: &PfElement, rhs: &PfElement) {
        self.exact &= lhs.is_exact() && rhs.is_exact();
        self.pass &= lhs.same(rhs);
        self.deviation = self.deviation.max(lhs.max_abs_diff(rhs));
    }

    fn op(&mut self, lhs: &DenseOperator, rhs: &DenseOperator) {
        self.exact &= lhs.is_exact() && rhs.is_exact();
        self.pass &= lhs.same(rhs);
        self.deviation = self.deviation.max(lhs.max_abs_diff(rhs));
    }

    fn scalar(&mut self, ctx: &Context, lhs: &crate::Scalar, rhs: &crate::Scalar) {
        self.exact &= lhs.is_exact() && rhs.is_exact();
        self.pass &= ctx.same(lhs, rhs);
        self.deviation = self.deviation.max((lhs.to_complex() - rhs.to_complex()).norm());
    }

    fn done(self) -> Check {
        Check { name: self.name, pass: self.pass, deviation: self.deviation, exact: self.exact }
    }
}

/// Generator relations, the adjoint, the trace, the grading, the conditional
/// expectation and the graded tensor products of PF_m.
pub fn pf_suite(ctx: &Context, m: usize) -> Vec<Check> {
    let n = ctx.n();
    let one = PfElement::one(ctx, m);
    let gen = |p: usize, k: i64| PfElement::generator(ctx, m, p, k);
    let mut out = Vec::new();

    let mut s = Sweep::new("c_i^N = 1");
    for p in 1..=m {
        s.pf(&gen(p, 1).pow(n), &one);
    }
    out.push(s.done());

    let mut s = Sweep::new("c_i c_j = q c_j c_i for i < j");
    for i in 1..=m {
        for j in i + 1..=m {
            s.pf(&gen(i, 1).mul(&gen(j, 1)), &gen(j, 1).mul(&gen(i, 1)).scale(&ctx.q()));
        }
    }
    out.push(s.done());

    let mut s = Sweep::new("c_i* = c_i^(N-1)");
    for p in 1..=m {
        s.pf(&gen(p, 1).star(), &gen(p, n as i64 - 1));
    }
    out.push(s.done());

    let b = basis(ctx, m);
    let mut star_inv = Sweep::new("x** = x");
    let mut anti = Sweep::new("(xy)* = y* x*");
    let mut tracial = Sweep::new("tr(xy) = tr(yx)");
    let mut ortho = Sweep::new("tr(C_I* C_J) = delta_IJ");
    let mut graded = Sweep::new("|C_I C_J| = |C_I| + |C_J|");
    for (i, x) in b.iter().enumerate() {
        star_inv.pf(&x.star().star(), x);
        for (j, y) in b.iter().enumerate() {
            let xy = x.mul(y);
            anti.pf(&xy.star(), &y.star().mul(&x.star()));
            tracial.scalar(ctx, &xy.trace(), &y.mul(x).trace());
            let want = if i == j { ctx.one() } else { ctx.zero() };
            ortho.scalar(ctx, &x.star().mul(y).trace(), &want);
            let g = (grade_of(x) + grade_of(y)).rem_euclid(n as i64);
            graded.pass &= xy.is_zero() || grade_of(&xy) == g;
            graded.exact &= xy.is_exact();
        }
    }
    out.extend([star_inv.done(), anti.done(), tracial.done(), ortho.done(), graded.done()]);

    out.push(Check::scalar("tr(1) = 1", ctx, &one.trace(), &ctx.one()));
    let mut s = Sweep::new("tr(C_I) = 0 for C_I != 1");
    for x in b.iter().skip(1) {
        s.scalar(ctx, &x.trace(), &ctx.zero());
    }
    out.push(s.done());

    let mut s = Sweep::new("conditional expectation preserves the trace");
    let mut idem = Sweep::new("conditional expectation fixes PF_(m-1)");
    for x in &b {
        s.scalar(ctx, &x.conditional_expectation().trace(), &x.trace());
        let y = x.conditional_expectation();
        idem.pf(&y.embed_right(1).conditional_expectation(), &y);
    }
    out.extend([s.done(), idem.done()]);

    let mut s = Sweep::new("right inclusion preserves the trace");
    let mut shift = Sweep::new("left inclusion maps c_i to c_(i+1)");
    for x in &b {
        s.scalar(ctx, &x.embed_right(1).trace(), &x.trace());
    }
    for p in 1..=m {
        shift.pf(&gen(p, 1).shift_left(), &PfElement::generator(ctx, m + 1, p + 1, 1));
    }
    out.extend([s.done(), shift.done()]);

    if m >= 2 {
        let mut s = Sweep::new("x (+) y = q^(|x||y|) x (-) y");
        for p in 1..m {
            for x in basis(ctx, p) {
                for y in basis(ctx, m - p) {
                    let phase = ctx.q_pow(grade_of(&x) * grade_of(&y));
                    s.pf(&x.tensor_plus(&y), &x.tensor_minus(&y).scale(&phase));
                }
            }
        }
        out.push(s.done());
    }
    out
}

/// The Jordan–Wigner image is a faithful trace-preserving *-representation.
pub fn jw_suite(ctx: &Context, m: usize) -> Vec<Check> {
    let b = basis(ctx, m);
    let reps: Vec<DenseOperator> = b.iter().map(jw_rep).collect();
    let dim = index::count(ctx.n(), m);
    let mut hom = Sweep::new("jw(xy) = jw(x) jw(y)");
    let mut star = Sweep::new("jw(x*) = jw(x)^dagger");
    let mut trace = Sweep::new("normalized matrix trace of jw(x) = tr(x)");
    for (x, rx) in b.iter().zip(&reps) {
        star.op(&jw_rep(&x.star()), &rx.adjoint());
        trace.scalar(ctx, &rx.normalized_trace(), &x.trace());
        for (y, ry) in b.iter().zip(&reps) {
            hom.op(&jw_rep(&x.mul(y)), &rx.mul(ry));
        }
    }
    let mut out = alloc::vec![hom.done(), star.done(), trace.done()];
    out.push(Check::flag_from(
        format!("jw is injective on the {} basis monomials", dim),
        {
            let cols: Vec<Vec<crate::Scalar>> =
                reps.iter().map(|r| (0..dim).map(|i| r.get(i, 0).clone()).collect()).collect();
            // column 0 of jw(C_I) is the basis vector |I⟩
            cols.iter().enumerate().all(|(i, c)| c.iter().enumerate().all(|(j, v)| v.is_zero() != (i == j)))
        },
        reps.iter().all(DenseOperator::is_exact),
    ));
    out
}

/// Temperley–Lieb relations of the Jones projections in PF_m and their joint
/// relations with the generators.
pub fn tl_suite(ctx: &Context, m: usize) -> Vec<Check> {
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    let e: Vec<PfElement> = (1..m).map(|i| PfElement::jones(ctx, m, i).expect("valid index")).collect();
    let mut sa = Sweep::new("E_i = E_i*");
    let mut sq = Sweep::new("E_i^2 = sqrt(N) E_i");
    let mut far = Sweep::new("E_i E_j = E_j E_i for |i-j| >= 2");
    let mut near = Sweep::new("E_i E_(i+-1) E_i = E_i");
    let mut right = Sweep::new("E_i c_i^k = q^(-k^2/2) E_i c_(i+1)^k");
    let mut left = Sweep::new("c_i^k E_i = q^(k^2/2) c_(i+1)^k E_i");
    let n = ctx.n() as i64;
    for (a, ea) in e.iter().enumerate() {
        sa.pf(&ea.star(), ea);
        sq.pf(&ea.mul(ea), &ea.scale(&ctx.sqrt_n()));
        for (b, eb) in e.iter().enumerate() {
            let d = (a as i64 - b as i64).abs();
            if d >= 2 {
                far.pf(&ea.mul(eb), &eb.mul(ea));
            } else if d == 1 {
                near.pf(&ea.mul(eb).mul(ea), ea);
            }
        }
        let i = a + 1;
        for k in 0..n {
            let ci = PfElement::generator(ctx, m, i, k);
            let cj = PfElement::generator(ctx, m, i + 1, k);
            right.pf(&ea.mul(&ci), &ea.mul(&cj).scale(&ctx.zeta_pow(-k * k)));
            left.pf(&ci.mul(ea), &cj.mul(ea).scale(&ctx.zeta_pow(k * k)));
        }
    }
    out.extend([sa.done(), sq.done()]);
    if m >= 4 {
        out.push(far.done());
    }
    if m >= 3 {
        out.push(near.done());
    }
    out.extend([right.done(), left.done()]);
    out
}

/// The string Fourier transform, the rotation by π, the reflection Θ, twisted
/// tensor products and matrix units.
pub fn sft_suite(ctx: &Context, m: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let n = ctx.n() as i64;
    let c1 = PfElement::generator(ctx, 1, 1, 1);
    out.push(Check::pf("sft(c) = zeta c", &c1.sft(), &c1.scale(&ctx.zeta())));
    out.push(Check::pf("sft(1) = 1", &PfElement::one(ctx, 1).sft(), &PfElement::one(ctx, 1)));
    out.push(Check::pf("Theta(c) = c^-1", &c1.theta(), &PfElement::generator(ctx, 1, 1, -1)));

    let b = basis(ctx, m);
    let rho: Vec<PfElement> = b.iter().map(PfElement::rotate_pi).collect();
    let theta: Vec<PfElement> = b.iter().map(PfElement::theta).collect();
    let mut period = Sweep::new(format!("sft^{} = q^(g^2) on grade-g monomials", 2 * m));
    let mut inv = Sweep::new("sft^-1 sft = 1");
    let mut rho2 = Sweep::new("rho_pi^2 = q^(g^2)");
    let mut theta2 = Sweep::new("Theta Theta = 1");
    let mut neg = Sweep::new("Theta negates the grading");
    for (k, x) in b.iter().enumerate() {
        let g = grade_of(x);
        let phase = ctx.q_pow(g * g);
        period.pf(&x.sft_pow(2 * m), &x.scale(&phase));
        inv.pf(&x.sft().sft_inv(), x);
        rho2.pf(&rho[k].rotate_pi(), &x.scale(&phase));
        theta2.pf(&theta[k].theta(), x);
        neg.pass &= grade_of(&theta[k]) == (-g).rem_euclid(n);
        neg.exact &= theta[k].is_exact();
    }
    out.extend([period.done(), inv.done(), rho2.done(), theta2.done(), neg.done()]);

    // images of products through the per-monomial tables
    let linear = |table: &[PfElement], x: &PfElement| -> PfElement {
        let mut acc = PfElement::zero(ctx, m);
        for (k, v) in x.terms() {
            acc = acc.add(&table[k].scale(v));
        }
        acc
    };
    let antilinear = |table: &[PfElement], x: &PfElement| -> PfElement {
        let mut acc = PfElement::zero(ctx, m);
        for (k, v) in x.terms() {
            acc = acc.add(&table[k].scale(&v.conj()));
        }
        acc
    };
    let mut anti = Sweep::new("rho_pi(xy) = q^(|x||y|) rho_pi(y) rho_pi(x)");
    let mut anti0 = Sweep::new("rho_pi(xy) = rho_pi(y) rho_pi(x) for zero-graded y");
    let mut mult = Sweep::new("Theta(xy) = Theta(x) Theta(y)");
    for (i, x) in b.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let xy = x.mul(y);
            let lhs = linear(&rho, &xy);
            let flipped = rho[j].mul(&rho[i]);
            anti.pf(&lhs, &flipped.scale(&ctx.q_pow(grade_of(x) * grade_of(y))));
            if grade_of(y) == 0 {
                anti0.pf(&lhs, &flipped);
            }
            mult.pf(&antilinear(&theta, &xy), &theta[i].mul(&theta[j]));
        }
    }
    out.extend([anti.done(), anti0.done(), mult.done()]);

    // doubles with explicit lifts
    let dbl = |x: &PfElement, a: i64, y: &PfElement, c: i64| -> PfElement {
        let l = Lifted::new(x.theta(), -a).expect("lift");
        let r = Lifted::new(y.clone(), c).expect("lift");
        twisted_tensor(&l, &r).element
    };
    let b = basis(ctx, 1);
    let mut dmul = Sweep::new("(Theta(x) (t) x)(Theta(y) (t) y) = Theta(xy) (t) xy");
    let mut dref = Sweep::new("Theta(Theta(x) (t) y) = Theta(y) (t) x");
    let mut dstar = Sweep::new("(Theta(x) (t) y)* = Theta(x*) (t) y*");
    let mut assoc = Sweep::new("twisted tensor product is associative");
    for x in &b {
        let a = grade_of(x);
        for y in &b {
            let c = grade_of(y);
            let xy = x.mul(y);
            if !xy.is_zero() {
                dmul.pf(&dbl(x, a, x, a).mul(&dbl(y, c, y, c)), &dbl(&xy, a + c, &xy, a + c));
            }
            if a == c {
                dref.pf(&dbl(x, a, y, a).theta(), &dbl(y, a, x, a));
                let xs = x.star();
                let ys = y.star();
                dstar.pf(&dbl(x, a, y, a).star(), &dbl(&xs, -a, &ys, -a));
            }
        }
    }
    let b1 = basis(ctx, 1);
    for x in &b1 {
        for y in &b1 {
            for z in &b1 {
                let lx = Lifted::canonical(x.clone()).expect("homogeneous");
                let ly = Lifted::new(y.clone(), grade_of(y) - n).expect("homogeneous");
                let lz = Lifted::canonical(z.clone()).expect("homogeneous");
                let left = twisted_tensor(&twisted_tensor(&lx, &ly), &lz);
                let right = twisted_tensor(&lx, &twisted_tensor(&ly, &lz));
                assoc.pf(&left.element, &right.element);
                assoc.pass &= left.lift == right.lift;
            }
        }
    }
    out.extend([dmul.done(), dref.done(), dstar.done(), assoc.done()]);

    // zero-graded 2-boxes
    let units = two_box_units(ctx);
    let w = |i: i64| -> PfElement {
        let l = Lifted::new(PfElement::generator(ctx, 1, 1, i), i).expect("lift");
        let r = Lifted::new(PfElement::generator(ctx, 1, 1, -i), -i).expect("lift");
        twisted_tensor(&l, &r).element
    };
    let e1 = PfElement::jones(ctx, 2, 1).expect("E_1");
    let sum_w = PfElement::sum(ctx, 2, &(0..n).map(w).collect::<Vec<_>>()).scale(&ctx.inv_sqrt_n());
    out.push(Check::pf("E = N^(-1/2) sum_i c^i (t) c^-i", &e1, &sum_w));
    let mut dft = Sweep::new("sft(c^i (t) c^-i) = N^(-1/2) sum_j q^(ij) c^j (t) c^-j");
    let mut proj = Sweep::new("sft(c^i (t) c^-i) = sqrt(N) v_(-i)^(-i)");
    for i in 0..n {
        let mut rhs = PfElement::zero(ctx, 2);
        for j in 0..n {
            rhs = rhs.add(&w(j).scale(&ctx.q_pow(i * j)));
        }
        dft.pf(&w(i).sft(), &rhs.scale(&ctx.inv_sqrt_n()));
        let k = (-i).rem_euclid(n) as usize;
        proj.pf(&w(i).sft(), &units[k][k].scale(&ctx.sqrt_n()));
    }
    out.extend([dft.done(), proj.done()]);
    out.extend(matrix_unit_checks(ctx, m));
    out
}

/// Matrix-unit relations for the 2-box units, the minimal projections of PF_1,
/// and the even and odd families up to `max_m`. Families whose odd algebra
/// exceeds 243 monomials are skipped.
pub fn matrix_unit_checks(ctx: &Context, max_m: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let units = two_box_units(ctx);
    out.push(unit_check("v_i^j v_k^l = delta_jk v_i^l (2-box)", &units, PfElement::one(ctx, 2)));

    let qs = q_projections(ctx);
    let mut s = Sweep::new("Q_i Q_j = delta_ij Q_i");
    for (i, a) in qs.iter().enumerate() {
        for (j, b) in qs.iter().enumerate() {
            let want = if i == j { a.clone() } else { PfElement::zero(ctx, 1) };
            s.pf(&a.mul(b), &want);
        }
    }
    out.push(s.done());
    out.push(Check::pf("sum_i Q_i = 1", &PfElement::sum(ctx, 1, &qs), &PfElement::one(ctx, 1)));

    for m in (1..=max_m).take_while(|&m| index::count(ctx.n(), 2 * m + 1) <= 243) {
        let ev = even_units(ctx, m);
        out.push(unit_check(&format!("matrix units of PF_{}", 2 * m), &ev, PfElement::one(ctx, 2 * m)));
        out.push(odd_check(ctx, m, &odd_units(ctx, m)));
    }
    out
}

/// v_i^j v_k^l = δ_jk v_i^l for all i, j with k ∈ {0, j, last} and l ∈ {0, last},
/// (v_i^j)* = v_j^i and Σ_i v_i^i = 1.
fn unit_check(name: &str, units: &[Vec<PfElement>], one: PfElement) -> Check {
    let d = units.len();
    let mut s = Sweep::new(name);
    let zero = one.scale(&one.ctx().zero());
    let ls: Vec<usize> = if d > 1 { alloc::vec![0, d - 1] } else { alloc::vec![0] };
    for i in 0..d {
        for j in 0..d {
            s.pf(&units[i][j].star(), &units[j][i]);
            let mut ks = alloc::vec![0, j, d - 1];
            ks.sort_unstable();
            ks.dedup();
            for k in ks {
                for &l in &ls {
                    let want = if j == k { units[i][l].clone() } else { zero.clone() };
                    s.pf(&units[i][j].mul(&units[k][l]), &want);
                }
            }
        }
    }
    let diag = PfElement::sum(one.ctx(), one.m(), &(0..d).map(|i| units[i][i].clone()).collect::<Vec<_>>());
    s.pf(&diag, &one);
    s.done()
}

/// The odd family: one block of N^m × N^m units per minimal projection of the
/// last strand, with units in different blocks multiplying to zero.
fn odd_check(ctx: &Context, m: usize, blocks: &[Vec<Vec<PfElement>>]) -> Check {
    let total = 2 * m + 1;
    let d = index::count(ctx.n(), m);
    let mut s = Sweep::new(format!("matrix units of PF_{}", total));
    let zero = PfElement::zero(ctx, total);
    let mut diag = zero.clone();
    for (a, ua) in blocks.iter().enumerate() {
        let one_block = PfElement::sum(ctx, total, &(0..d).map(|i| ua[i][i].clone()).collect::<Vec<_>>());
        diag = diag.add(&one_block);
        let inner = unit_check("", ua, one_block);
        s.pass &= inner.pass;
        s.exact &= inner.exact;
        s.deviation = s.deviation.max(inner.deviation);
        for (b, ub) in blocks.iter().enumerate() {
            if a != b {
                s.pf(&ua[0][d - 1].mul(&ub[d - 1][0]), &zero);
                s.pf(&ua[d - 1][d - 1].mul(&ub[0][0]), &zero);
            }
        }
    }
    s.pf(&diag, &PfElement::one(ctx, total));
    s.done()
}

/// Pauli and quaternion relations for both commutation versions, and the
/// standard 2 × 2 Pauli matrices at N = 2, ζ = i.
pub fn pauli_suite(ctx: &Context) -> Vec<Check> {
    use crate::pauli::{pauli_relations, pauli_xyz, quaternion_relations, Version};
    let mut out = Vec::new();
    for v in [Version::Q, Version::QInv] {
        let tag = if v == Version::Q { "q" } else { "q^-1" };
        for c in pauli_relations(ctx, v).into_iter().chain(quaternion_relations(ctx, v)) {
            out.push(Check { name: format!("[{}] {}", tag, c.name), ..c });
        }
    }
    if ctx.n() == 2 && ctx.zeta_sign() == 1 {
        let p = pauli_xyz(ctx, Version::Q);
        let mat = |e: [[(i64, bool); 2]; 2]| {
            DenseOperator::from_fn(ctx, 2, |r, c| {
                let (v, imag) = e[r][c];
                if imag {
                    &ctx.int(v) * &ctx.zeta()
                } else {
                    ctx.int(v)
                }
            })
        };
        let sx = mat([[(0, false), (1, false)], [(1, false), (0, false)]]);
        let sy = mat([[(0, false), (-1, true)], [(1, true), (0, false)]]);
        let sz = mat([[(1, false), (0, false)], [(0, false), (-1, false)]]);
        let z = ctx.zeta();
        let sq = Check::scalar("", ctx, &(&z * &z), &ctx.int(-1));
        out.push(Check::flag_from("zeta = i", sq.pass && z.to_complex().im > 0.0, sq.exact));
        out.push(Check::new("X = sigma_x", &p.x, &sx));
        out.push(Check::new("Y = sigma_y", &p.y, &sy));
        out.push(Check::new("Z = sigma_z", &p.z, &sz));
    }
    out
}

/// Relations of the four quadratic models on N⁴ dimensions.
pub fn quadratic_suite(ctx: &Context) -> Vec<Check> {
    use crate::pauli::{model_relations, quadratic_model, ModelTag};
    let mut out = Vec::new();
    for tag in ModelTag::ALL {
        let model = quadratic_model(ctx, tag);
        for c in model_relations(ctx, &model) {
            out.push(Check { name: format!("[{:?}] {}", tag, c.name), ..c });
        }
    }
    out
}

pub fn braid_suite(ctx: &Context) -> Vec<Check> {
    crate::braid::verify_braid_axioms(ctx)
}

/// Relations of F and G, their adjoint action on exponent vectors and, for
/// N ≤ 3, the order of the projective group they generate with X and Z.
pub fn clifford_suite(ctx: &Context) -> Vec<Check> {
    use crate::clifford::*;
    let n = ctx.n();
    let ni = n as i64;
    let mut out = fourier_gaussian_relations(ctx);
    let (f, g) = fourier_gaussian(ctx);
    let exact = f.is_exact() && g.is_exact();
    let flag = |name: &str, pass: bool| Check::flag_from(name, pass, exact);
    let ad_f = adjoint_action(ctx, &f).map(|a| reduce(a, ni));
    let ad_g = adjoint_action(ctx, &g).map(|a| reduce(a, ni));
    out.push(flag("Ad_F = S", ad_f == Some(reduce(S, ni))));
    out.push(flag("Ad_G = T^t", ad_g == Some(reduce(transpose(T), ni))));
    let t_op = f.mul(&g.adjoint()).mul(&f.adjoint());
    out.push(flag("Ad_(F G^-1 F^-1) = T", adjoint_action(ctx, &t_op).map(|a| reduce(a, ni)) == Some(reduce(T, ni))));
    out.push(Check::flag(
        "S and T^t generate SL(2, Z_N)",
        generated_subgroup_order(&[S, transpose(T)], n) == sl2_order(n),
    ));
    if n <= 3 {
        let e = clifford_enumerate(ctx, 10_000);
        let want = (n * n) as usize * sl2_order(n);
        out.push(flag(
            &format!("projective Clifford order = N^2 |SL(2, Z_N)| = {}", want),
            e.closed && e.order == want,
        ));
    }
    out
}

/// Number of couplings per ensemble in [`rp_suite`].
pub const RP_ENSEMBLE: usize = 200;

/// Reflection positivity on a seeded ensemble: J₀ ⪰ 0 matches positivity over
/// the full basis, β = 0 values are nonnegative, and sft^{-m}(−H) has matrix
/// N^{m/2} J in the matrix units (exactly, on dyadic roundings of the ensemble).
pub fn rp_suite(ctx: &Context, m: usize, seed: u64) -> Result<Vec<Check>, crate::Error> {
    use crate::rp::*;
    let approx = Context::approx(ctx.n(), ctx.zeta_sign());
    let ens = random_ensemble(&approx, m, RP_ENSEMBLE, seed);
    let rep = theorem_equivalence(&ens, &DEFAULT_BETAS, DEFAULT_TOL)?;
    let mut out = alloc::vec![Check {
        name: format!("J0 >= 0 iff reflection positive ({} couplings)", ens.len()),
        pass: rep.mismatches == 0,
        deviation: rep.mismatches as f64,
        exact: false,
    }];
    let xs = basis(&approx, m);
    let table = TermTable::new(&approx, m);
    let mut zero = Sweep::new("tr(Theta(x) (t) x) >= 0 at beta = 0");
    for j in ens.iter().take(20) {
        let r = rp_check_with(j, &table, &[0.0], &xs, DEFAULT_TOL)?;
        zero.pass &= r.min_value >= -DEFAULT_TOL;
        zero.exact = false;
        zero.deviation = zero.deviation.max((-r.min_value).max(0.0));
    }
    out.push(zero.done());

    let exact = Context::builder(ctx.n()).zeta_sign(ctx.zeta_sign()).order(ctx.order()).build()?;
    let etable = TermTable::new(&exact, m);
    let units = even_units(&exact, m);
    let mut fm = Sweep::new("sft^-m(-H) = N^(m/2) sum J v_I^I'");
    for j in &ens {
        let (l, r) = sft_matrix_sides(&j.to_exact_dyadic(&exact, 12), &etable, &units);
        fm.pf(&l, &r);
    }
    out.push(fm.done());
    Ok(out)
}

/// Closed circles against the bookkeeping oracle, and isotopic slice words.
pub fn tangle_suite(ctx: &Context, max_labels: usize) -> Result<Vec<Check>, crate::Error> {
    use crate::tangle::*;
    let corpus = circle_corpus(ctx.n(), max_labels, &[-1, 0, 1]);
    let mut s = Sweep::new(format!("labelled circles match the oracle ({} circles)", corpus.len()));
    for labels in &corpus {
        let v = evaluate(ctx, &render_circle(labels))?;
        let lhs = v.scalar().cloned().unwrap_or_else(|| ctx.int(i64::MAX));
        s.scalar(ctx, &lhs, &closed_loop_oracle(ctx, labels));
    }
    let mut out = alloc::vec![s.done()];
    for p in isotopy_pairs() {
        let l = evaluate(ctx, &p.lhs)?;
        let r = evaluate(ctx, &p.rhs)?;
        let exact = [&l, &r].iter().all(|v| match v {
            TangleValue::Scalar(s) => s.is_exact(),
            TangleValue::Operator(m) => m.entries.iter().all(|s| s.is_exact()),
        });
        out.push(Check::flag_from(format!("isotopy: {}", p.name), l.same(&r, ctx), exact));
    }
    Ok(out)
}

/// A named verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Pf,
    Jw,
    Tl,
    Sft,
    Pauli,
    Quadratic,
    Braid,
    Clifford,
    Rp,
    Tangle,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Pf,
        Suite::Jw,
        Suite::Tl,
        Suite::Sft,
        Suite::Pauli,
        Suite::Quadratic,
        Suite::Braid,
        Suite::Clifford,
        Suite::Rp,
        Suite::Tangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pf => "pf",
            Suite::Jw => "jw",
            Suite::Tl => "tl",
            Suite::Sft => "sft",
            Suite::Pauli => "pauli",
            Suite::Quadratic => "quadratic",
            Suite::Braid => "braid",
            Suite::Clifford => "clifford",
            Suite::Rp => "rp",
            Suite::Tangle => "tangle",
        }
    }

    /// Whether the suite depends on the number of strands m.
    pub fn uses_m(self) -> bool {
        matches!(self, Suite::Pf | Suite::Jw | Suite::Tl | Suite::Sft | Suite::Rp)
    }

    /// Runs the suite, rejecting parameters outside its supported range.
    pub fn run(self, ctx: &Context, m: usize, seed: u64) -> Result<Vec<Check>, crate::Error> {
        let n = ctx.n();
        let exact = ctx.mode() == crate::Mode::Exact;
        let small = matches!(self, Suite::Pauli | Suite::Braid | Suite::Clifford);
        let (max_n, max_m) = if exact && !small { (5, 3) } else { (7, 3) };
        if n > max_n || m == 0 || m > max_m {
            return Err(crate::Error::InvalidParameter(format!(
                "N = {} and m = {} are outside 2..={} and 1..={}",
                n, m, max_n, max_m
            )));
        }
        let limit = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(crate::Error::InvalidParameter(format!("{} is not supported for N = {}, m = {}", what, n, m)))
            }
        };
        Ok(match self {
            Suite::Pf => pf_suite(ctx, m),
            Suite::Jw => {
                limit(index::count(n, m) <= 64, "the Jordan-Wigner suite")?;
                jw_suite(ctx, m)
            }
            Suite::Tl => tl_suite(ctx, m),
            Suite::Sft => {
                limit(index::count(n, m) <= 64, "the string Fourier transform suite")?;
                sft_suite(ctx, m)
            }
            Suite::Pauli => pauli_suite(ctx),
            Suite::Quadratic => {
                limit(n <= 4, "the quadratic model suite")?;
                quadratic_suite(ctx)
            }
            Suite::Braid => braid_suite(ctx),
            Suite::Clifford => clifford_suite(ctx),
            Suite::Rp => {
                limit(index::count(n, 2 * m) <= 256, "the reflection positivity suite")?;
                rp_suite(ctx, m, seed)?
            }
            Suite::Tangle => tangle_suite(ctx, if n <= 4 { 4 } else { 3 })?,
        })
    }
}

impl core::str::FromStr for Suite {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Suite, crate::Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| crate::Error::InvalidParameter(format!("unknown suite {:?}", s)))
    }
}
