//! Direct evaluation of a single labelled circle by generator bookkeeping.

use alloc::vec;
use alloc::vec::Vec;

use super::{Slice, TangleWord};
use crate::scalar::{Context, Scalar};

/// Value of one closed circle carrying the labels c^{j_1}, …, c^{j_r} in order,
/// where the i-th label is turned through 2π·k_i (clockwise for k_i > 0).
///
/// Each label is expanded into j_i generators. Gathering all generators at the
/// top costs q per full clockwise turn of a generator and q per para-isotopy
/// exchange; a turned block of j generators winds each of them once around the
/// other j−1. If the generator count is not divisible by N the circle vanishes,
/// otherwise the gathered product is 1 and the circle contributes δ = √N.
pub fn closed_loop_oracle(ctx: &Context, labels: &[(i64, i64)]) -> Scalar {
    let n = ctx.n() as i64;
    let mut generators = 0i64;
    let mut turns = 0i64;
    let mut exchanges = 0i64;
    for &(j, k) in labels {
        let j = j.rem_euclid(n);
        generators += j;
        turns += j * k;
        exchanges += j * (j - 1) * k;
    }
    if generators % n != 0 {
        return ctx.zero();
    }
    &ctx.q_pow(turns + exchanges) * &ctx.sqrt_n()
}

/// c^j on strand p turned through 2π·k: the one-string rotation applied 2k
/// times, each rotation a cup, the rotated box one strand further right, and a cap.
pub fn render_label(j: i64, k: i64, p: usize) -> Vec<Slice> {
    fn rot(t: i64, j: i64, p: usize) -> Vec<Slice> {
        if t == 0 {
            return vec![Slice::Label(p, j)];
        }
        let mut out = Vec::new();
        if t > 0 {
            out.push(Slice::Cup(p + 1));
            out.extend(rot(t - 1, j, p + 1));
            out.push(Slice::Cap(p));
        } else {
            out.push(Slice::Cup(p));
            out.extend(rot(t + 1, j, p + 1));
            out.push(Slice::Cap(p + 1));
        }
        out
    }
    rot(2 * k, j, p)
}

/// A single circle with the labels on its right-hand arc.
pub fn render_circle(labels: &[(i64, i64)]) -> TangleWord {
    let mut slices = vec![Slice::Cup(1)];
    for &(j, k) in labels {
        slices.extend(render_label(j, k, 2));
    }
    slices.push(Slice::Cap(1));
    TangleWord::new(0, slices).expect("well-formed circle")
}
