//! Multi-indices I = (i_1, …, i_m) ∈ (Z_N)^m packed as base-N integers with
//! i_1 as the most significant digit.

use alloc::vec;
use alloc::vec::Vec;

pub fn count(n: u32, m: usize) -> usize {
    (n as usize).pow(m as u32)
}

pub fn encode(n: u32, digits: &[u32]) -> usize {
    digits.iter().fold(0usize, |acc, &d| acc * n as usize + (d % n) as usize)
}

pub fn decode(n: u32, m: usize, mut idx: usize) -> Vec<u32> {
    let mut out = vec![0u32; m];
    for p in (0..m).rev() {
        out[p] = (idx % n as usize) as u32;
        idx /= n as usize;
    }
    out
}

pub fn grade(n: u32, digits: &[u32]) -> u32 {
    (digits.iter().map(|&d| d as u64).sum::<u64>() % n as u64) as u32
}

pub fn negate(n: u32, digits: &[u32]) -> Vec<u32> {
    digits.iter().map(|&d| (n - d % n) % n).collect()
}

/// All multi-indices of length m in increasing packed order.
pub fn all(n: u32, m: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..count(n, m)).map(move |i| decode(n, m, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for i in 0..81 {
            assert_eq!(encode(3, &decode(3, 4, i)), i);
        }
        assert_eq!(decode(3, 2, 5), vec![1, 2]);
    }
}
