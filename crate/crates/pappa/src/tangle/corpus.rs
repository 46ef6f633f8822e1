use alloc::vec;
use alloc::vec::Vec;

use super::parse_tangle;
use super::TangleWord;

/// Every label list of length ≤ `max_labels` with powers in Z_N and windings in `windings`.
pub fn circle_corpus(n: u32, max_labels: usize, windings: &[i64]) -> Vec<Vec<(i64, i64)>> {
    let choices: Vec<(i64, i64)> = (0..n as i64).flat_map(|j| windings.iter().map(move |&k| (j, k))).collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_labels {
        let mut next = Vec::new();
        for base in &layer {
            for &c in &choices {
                let mut v: Vec<(i64, i64)> = base.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Clone, Debug)]
pub struct IsotopyPair {
    pub name: &'static str,
    pub lhs: TangleWord,
    pub rhs: TangleWord,
}

const PAIRS: &[(&str, &str, &str)] = &[
    ("left snake straightens", "in=1\ncup@2\ncap@1", "in=1"),
    ("right snake straightens", "in=1\ncup@1\ncap@2", "in=1"),
    ("labelled left snake", "in=1\ncup@2\nc@1\ncap@1", "in=1\nc@1"),
    ("label before snake", "in=1\nc@1\ncup@2\ncap@1", "in=1\nc@1"),
    ("label after snake", "in=1\ncup@1\ncap@2\nc^2@1", "in=1\nc^2@1"),
    ("rotation then inverse rotation", "in=1\ncup@1\ncup@3\nc@3\ncap@2\ncap@2", "in=1\nc@1"),
    ("inverse rotation then rotation", "in=1\ncup@2\ncup@2\nc@3\ncap@3\ncap@1", "in=1\nc@1"),
    ("loop left or right of a strand", "in=1\ncup@1\ncap@1", "in=1\ncup@2\ncap@2"),
    ("loop passes a label", "in=1\ncup@1\ncap@1\nc@1", "in=1\nc@1\ncup@1\ncap@1"),
    ("two loops side by side or nested", "cup@1\ncup@3\ncap@1\ncap@1", "cup@1\ncup@2\ncap@2\ncap@1"),
    ("two loops stacked", "cup@1\ncap@1\ncup@1\ncap@1", "cup@1\ncup@1\ncap@1\ncap@1"),
    ("zigzag circle", "cup@1\ncup@2\ncap@1\ncap@1", "cup@1\ncap@1"),
    ("labelled zigzag circle", "cup@1\ncup@2\nc^2@1\nc@4\ncap@1\ncap@1", "cup@1\nc^2@1\nc@2\ncap@1"),
    ("Reidemeister II", "in=2\npos@1\nneg@1", "in=2"),
    ("Reidemeister II reversed", "in=2\nneg@1\npos@1", "in=2"),
    ("Reidemeister III", "in=3\npos@1\npos@2\npos@1", "in=3\npos@2\npos@1\npos@2"),
    ("Reidemeister III negative", "in=3\nneg@1\nneg@2\nneg@1", "in=3\nneg@2\nneg@1\nneg@2"),
    ("Reidemeister III mixed", "in=3\nneg@1\npos@2\npos@1", "in=3\npos@2\npos@1\nneg@2"),
    ("label slides under positive crossing", "in=2\nc@1\npos@1", "in=2\npos@1\nc@2"),
    ("label slides under negative crossing", "in=2\nc@2\nneg@1", "in=2\nneg@1\nc@1"),
    ("distant crossings commute", "in=4\npos@1\nneg@3", "in=4\nneg@3\npos@1"),
    ("crossing commutes with distant cup", "in=2\npos@1\ncup@3", "in=2\ncup@3\npos@1"),
    ("cap slides under crossings", "in=3\ncap@1\ncup@1\npos@2\npos@1", "in=3\npos@2\npos@1\ncap@2\ncup@2"),
    ("kink pair cancels", "in=1\ncup@2\npos@1\nneg@1\ncap@2", "in=1\ncup@2\ncap@2"),
    ("cup and cap far apart commute", "in=2\ncup@3\ncap@1", "in=2\ncap@1\ncup@1"),
];

/// Hand-encoded pairs of slice words that present isotopic diagrams.
pub fn isotopy_pairs() -> Vec<IsotopyPair> {
    PAIRS
        .iter()
        .map(|&(name, a, b)| IsotopyPair {
            name,
            lhs: parse_tangle(a).expect("corpus word parses"),
            rhs: parse_tangle(b).expect("corpus word parses"),
        })
        .collect()
}
