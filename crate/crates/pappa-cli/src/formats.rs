//! JSON forms of scalars, operators, algebra elements, coupling matrices and
//! verification records.

use num_complex::Complex64;
use pappa::rp::CouplingMatrix;
use pappa::{Context, DenseOperator, PfElement, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("N = {found} in the input does not match --N {expected}")]
    WrongN { expected: u32, found: u32 },
    #[error("index {index:?} does not have {m} digits in 0..{n}")]
    BadIndex { index: Vec<u32>, n: u32, m: usize },
    #[error(transparent)]
    Engine(#[from] pappa::Error),
}

/// Exact value as ζ_L-power coefficients over a common denominator.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ExactJson {
    pub order: u32,
    pub numerators: Vec<i128>,
    pub denominator: i128,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ScalarJson {
    pub re: f64,
    pub im: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactJson>,
}

impl ScalarJson {
    pub fn from_scalar(s: &Scalar) -> ScalarJson {
        let z = s.to_complex();
        let exact = match s {
            Scalar::Exact(c) => Some(ExactJson {
                order: c.field().order(),
                numerators: c.numerators().to_vec(),
                denominator: c.denominator(),
            }),
            Scalar::Approx(_) => None,
        };
        ScalarJson { re: z.re, im: z.im, exact }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Square or rectangular matrix, entries in row-major order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<ScalarJson>,
}

impl MatrixJson {
    pub fn from_operator(m: &DenseOperator) -> MatrixJson {
        MatrixJson { rows: m.dim(), cols: m.dim(), entries: m.entries().iter().map(ScalarJson::from_scalar).collect() }
    }

    pub fn from_tangle(m: &pappa::tangle::Matrix) -> MatrixJson {
        MatrixJson { rows: m.rows, cols: m.cols, entries: m.entries.iter().map(ScalarJson::from_scalar).collect() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    #[serde(rename = "I")]
    pub index: Vec<u32>,
    pub coeff: ScalarJson,
}

/// An element of PF_m; terms are sorted by multi-index.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PfJson {
    #[serde(rename = "N")]
    pub n: u32,
    pub m: usize,
    pub terms: Vec<TermJson>,
}

fn check_index(index: &[u32], n: u32, m: usize) -> Result<(), FormatError> {
    if index.len() != m || index.iter().any(|&d| d >= n) {
        return Err(FormatError::BadIndex { index: index.to_vec(), n, m });
    }
    Ok(())
}

impl PfJson {
    pub fn from_element(x: &PfElement) -> PfJson {
        let mut terms: Vec<TermJson> =
            x.terms_digits().map(|(d, c)| TermJson { index: d, coeff: ScalarJson::from_scalar(c) }).collect();
        terms.sort_by(|a, b| a.index.cmp(&b.index));
        PfJson { n: x.n(), m: x.m(), terms }
    }

    pub fn to_element(&self, ctx: &Context) -> Result<PfElement, FormatError> {
        if self.n != ctx.n() {
            return Err(FormatError::WrongN { expected: ctx.n(), found: self.n });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            check_index(&t.index, self.n, self.m)?;
            terms.push((t.index.clone(), ctx.complex(t.coeff.to_complex())));
        }
        Ok(PfElement::from_terms(ctx, self.m, terms))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct EntryJson {
    pub row: Vec<u32>,
    pub col: Vec<u32>,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CouplingJson {
    #[serde(rename = "N")]
    pub n: u32,
    pub m: usize,
    pub entries: Vec<EntryJson>,
}

impl CouplingJson {
    pub fn from_coupling(j: &CouplingMatrix) -> CouplingJson {
        let n = j.ctx().n();
        let m = j.m();
        let entries = j
            .entries()
            .map(|((r, c), v)| {
                let z = v.to_complex();
                EntryJson { row: pappa::index::decode(n, m, r), col: pappa::index::decode(n, m, c), re: z.re, im: z.im }
            })
            .collect();
        CouplingJson { n, m, entries }
    }

    /// Builds the coupling matrix in the given context. The entries are not
    /// validated here.
    pub fn to_coupling(&self, ctx: &Context) -> Result<CouplingMatrix, FormatError> {
        if self.n != ctx.n() {
            return Err(FormatError::WrongN { expected: ctx.n(), found: self.n });
        }
        let mut j = CouplingMatrix::new(ctx, self.m);
        for e in &self.entries {
            check_index(&e.row, self.n, self.m)?;
            check_index(&e.col, self.n, self.m)?;
            j.set(&e.row, &e.col, ctx.complex(Complex64::new(e.re, e.im)));
        }
        Ok(j)
    }
}

/// One identity checked at one parameter point.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Record {
    pub suite: String,
    pub identity: String,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub zeta_sign: i8,
    pub mode: String,
    pub pass: bool,
    pub deviation: f64,
    pub exact: bool,
}

impl Record {
    pub fn sort_key(&self) -> (String, u32, i8, Option<usize>, String) {
        (self.suite.clone(), self.n, -self.zeta_sign, self.m, self.identity.clone())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub pass: bool,
    pub records: Vec<Record>,
    pub warnings: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coupling_round_trip() {
        let ctx = Context::approx(3, 1);
        let text =
            r#"{"N":3,"m":1,"entries":[{"row":[1],"col":[1],"re":0.5,"im":0.0},{"row":[2],"col":[2],"re":0.25}]}"#;
        let parsed: CouplingJson = serde_json::from_str(text).unwrap();
        let j = parsed.to_coupling(&ctx).unwrap();
        let back = CouplingJson::from_coupling(&j);
        assert_eq!(back, parsed);
    }

    #[test]
    fn coupling_rejects_wrong_n_and_bad_digits() {
        let ctx = Context::approx(2, 1);
        let wrong_n: CouplingJson = serde_json::from_str(r#"{"N":3,"m":1,"entries":[]}"#).unwrap();
        assert!(matches!(wrong_n.to_coupling(&ctx), Err(FormatError::WrongN { .. })));
        let digit: CouplingJson =
            serde_json::from_str(r#"{"N":2,"m":1,"entries":[{"row":[2],"col":[0],"re":1}]}"#).unwrap();
        assert!(matches!(digit.to_coupling(&ctx), Err(FormatError::BadIndex { .. })));
    }

    #[test]
    fn element_terms_are_sorted() {
        let ctx = Context::exact(3, 1);
        let x = PfElement::generator(&ctx, 2, 2, 1).add(&PfElement::generator(&ctx, 2, 1, 2));
        let j = PfJson::from_element(&x);
        let idx: Vec<Vec<u32>> = j.terms.iter().map(|t| t.index.clone()).collect();
        assert_eq!(idx, vec![vec![0, 1], vec![2, 0]]);
        assert!(j.terms.iter().all(|t| t.coeff.exact.is_some()));
        let approx = Context::approx(3, 1);
        let y = j.to_element(&approx).unwrap();
        assert_eq!(y.len(), 2);
    }

    #[test]
    fn exact_scalar_keeps_coordinates() {
        let ctx = Context::exact(2, 1);
        let s = ScalarJson::from_scalar(&ctx.zeta());
        assert!((s.im - 1.0).abs() < 1e-15);
        let e = s.exact.unwrap();
        assert_eq!(e.order, ctx.order());
        assert_eq!(e.denominator, 1);
    }
}
