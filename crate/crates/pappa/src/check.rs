//! Named pass/fail records shared by the verification suites.

use alloc::string::String;

use crate::operator::DenseOperator;
use crate::pf::PfElement;
use crate::scalar::{Context, Scalar};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub deviation: f64,
    /// Both sides were compared in exact arithmetic.
    pub exact: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: &DenseOperator, rhs: &DenseOperator) -> Check {
        Check {
            name: name.into(),
            pass: lhs.same(rhs),
            deviation: lhs.max_abs_diff(rhs),
            exact: lhs.is_exact() && rhs.is_exact(),
        }
    }

    pub fn pf(name: impl Into<String>, lhs: &PfElement, rhs: &PfElement) -> Check {
        Check {
            name: name.into(),
            pass: lhs.same(rhs),
            deviation: lhs.max_abs_diff(rhs),
            exact: lhs.is_exact() && rhs.is_exact(),
        }
    }

    pub fn scalar(name: impl Into<String>, ctx: &Context, lhs: &Scalar, rhs: &Scalar) -> Check {
        Check {
            name: name.into(),
            pass: ctx.same(lhs, rhs),
            deviation: (lhs.to_complex() - rhs.to_complex()).norm(),
            exact: lhs.is_exact() && rhs.is_exact(),
        }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Check {
        Check { name: name.into(), pass, deviation: if pass { 0.0 } else { 1.0 }, exact: true }
    }

    /// A flag computed from possibly inexact data.
    pub fn flag_from(name: impl Into<String>, pass: bool, exact: bool) -> Check {
        Check { exact, ..Check::flag(name, pass) }
    }
}
