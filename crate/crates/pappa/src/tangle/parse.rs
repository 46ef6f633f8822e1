use alloc::string::String;
use alloc::vec::Vec;

use super::{Slice, TangleWord};
use crate::Error;

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn parse_int<T: core::str::FromStr>(text: &str, line: usize, column: usize, what: &str) -> Result<T, Error> {
    text.trim().parse().map_err(|_| err(line, column, alloc::format!("expected {} but found {:?}", what, text.trim())))
}

/// Parses one slice per line. `#` starts a comment. Header lines `N=…`, `in=…`
/// and `out=…` may precede the slices.
pub fn parse_tangle(text: &str) -> Result<TangleWord, Error> {
    let mut n = None;
    let mut in_strands = 0usize;
    let mut out_header: Option<(usize, usize)> = None;
    let mut slices: Vec<Slice> = Vec::new();
    let mut strands = 0usize;
    let mut seen_slice = false;

    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let column = body.len() - body.trim_start().len() + 1;

        if let Some((key, value)) = trimmed.split_once('=') {
            let vcol = column + key.len() + 1;
            if seen_slice {
                return Err(err(line, column, "header lines must precede all slices"));
            }
            match key.trim() {
                "N" => {
                    let v: u32 = parse_int(value, line, vcol, "an integer N")?;
                    if v < 2 {
                        return Err(err(line, vcol, "N must be at least 2"));
                    }
                    n = Some(v);
                }
                "in" => {
                    in_strands = parse_int(value, line, vcol, "a strand count")?;
                    strands = in_strands;
                }
                "out" => out_header = Some((parse_int(value, line, vcol, "a strand count")?, line)),
                other => return Err(err(line, column, alloc::format!("unknown header {:?}", other))),
            }
            continue;
        }

        seen_slice = true;
        let (op, pos) =
            trimmed.split_once('@').ok_or_else(|| err(line, column, alloc::format!("unknown token {:?}", trimmed)))?;
        let pcol = column + op.len() + 1;
        let p: usize = parse_int(pos, line, pcol, "a strand position")?;
        let op = op.trim();
        let slice = match op {
            "cup" => Slice::Cup(p),
            "cap" => Slice::Cap(p),
            "pos" => Slice::Pos(p),
            "neg" => Slice::Neg(p),
            "c" => Slice::Label(p, 1),
            _ => match op.strip_prefix("c^") {
                Some(j) => Slice::Label(p, parse_int(j, line, column + 2, "an integer power")?),
                None => return Err(err(line, column, alloc::format!("unknown token {:?}", op))),
            },
        };
        strands = slice.apply(strands).map_err(|m| {
            let col = if m.starts_with("position") { pcol } else { column };
            err(line, col, m)
        })?;
        slices.push(slice);
    }

    if let Some((out, line)) = out_header {
        if out != strands {
            return Err(err(
                line,
                1,
                alloc::format!("strand-count mismatch: header says {} but the word ends with {}", out, strands),
            ));
        }
    }
    Ok(TangleWord { n, in_strands, out_strands: strands, slices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn loop_word() {
        let w = parse_tangle("cup@1\ncap@1").unwrap();
        assert!(w.is_closed());
        assert_eq!(w.slices.len(), 2);
    }

    #[test]
    fn labelled_loop() {
        let w = parse_tangle("N=3\ncup@1\nc^2@1\ncap@1\n").unwrap();
        assert_eq!(w.n, Some(3));
        assert_eq!(w.slices[1], Slice::Label(1, 2));
    }

    #[test]
    fn diagnostics() {
        match parse_tangle("cap@1") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("{:?}", other),
        }
        match parse_tangle("cup@1\n  wiggle@2") {
            Err(Error::Parse { line: 2, column: 3, .. }) => {}
            other => panic!("{:?}", other),
        }
        match parse_tangle("in=1\ncup@4") {
            Err(Error::Parse { line: 2, column: 5, message }) => {
                assert!(message.contains("out of range"), "{}", message)
            }
            other => panic!("{:?}", other),
        }
        assert!(parse_tangle("out=2\ncup@1\ncap@1").is_err());
        assert!(parse_tangle("cup@x").unwrap_err().to_string().contains("1:5"));
    }
}
