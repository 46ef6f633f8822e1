//! Labelled planar tangles in rectangular slice form.
//!
//! A word is read top to bottom. Each slice acts on the strands present at
//! that height; strand positions are 1-based.

mod corpus;
mod eval;
mod oracle;
mod parse;

pub use corpus::{circle_corpus, isotopy_pairs, IsotopyPair};
pub use eval::{evaluate, Matrix, TangleValue};
pub use oracle::{closed_loop_oracle, render_circle, render_label};
pub use parse::parse_tangle;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slice {
    Cup(usize),
    Cap(usize),
    Label(usize, i64),
    Pos(usize),
    Neg(usize),
}

impl Slice {
    pub fn position(&self) -> usize {
        match *self {
            Slice::Cup(p) | Slice::Cap(p) | Slice::Label(p, _) | Slice::Pos(p) | Slice::Neg(p) => p,
        }
    }

    /// Strand count after the slice, or an explanation when it does not fit.
    pub fn apply(&self, strands: usize) -> Result<usize, String> {
        let p = self.position();
        let (lo, hi, next) = match self {
            Slice::Cup(_) => (1, strands + 1, strands + 2),
            Slice::Cap(_) => {
                if strands < 2 {
                    return Err(alloc::format!("cap needs two strands, found {}", strands));
                }
                (1, strands - 1, strands - 2)
            }
            Slice::Label(..) => (1, strands, strands),
            Slice::Pos(_) | Slice::Neg(_) => {
                if strands < 2 {
                    return Err(alloc::format!("crossing needs two strands, found {}", strands));
                }
                (1, strands - 1, strands)
            }
        };
        if p < lo || p > hi {
            return Err(alloc::format!("position {} out of range {}..={} for {} strands", p, lo, hi, strands));
        }
        Ok(next)
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Cup(p) => write!(f, "cup@{}", p),
            Slice::Cap(p) => write!(f, "cap@{}", p),
            Slice::Label(p, j) => write!(f, "c^{}@{}", j, p),
            Slice::Pos(p) => write!(f, "pos@{}", p),
            Slice::Neg(p) => write!(f, "neg@{}", p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleWord {
    /// N from the header, when one was given.
    pub n: Option<u32>,
    pub in_strands: usize,
    pub out_strands: usize,
    pub slices: Vec<Slice>,
}

impl TangleWord {
    pub fn new(in_strands: usize, slices: Vec<Slice>) -> Result<TangleWord, Error> {
        let mut strands = in_strands;
        for (i, s) in slices.iter().enumerate() {
            strands = s.apply(strands).map_err(|m| Error::Parse { line: i + 1, column: 1, message: m })?;
        }
        Ok(TangleWord { n: None, in_strands, out_strands: strands, slices })
    }

    pub fn is_closed(&self) -> bool {
        self.in_strands == 0 && self.out_strands == 0
    }

    /// Concatenation: `self` on top, `other` below.
    pub fn then(&self, other: &TangleWord) -> Result<TangleWord, Error> {
        if self.out_strands != other.in_strands {
            return Err(Error::Dimension(alloc::format!(
                "{} output strands cannot feed {} input strands",
                self.out_strands,
                other.in_strands
            )));
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        TangleWord::new(self.in_strands, slices)
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.n {
            writeln!(f, "N={}", n)?;
        }
        writeln!(f, "in={}", self.in_strands)?;
        for s in &self.slices {
            writeln!(f, "{}", s)?;
        }
        Ok(())
    }
}
