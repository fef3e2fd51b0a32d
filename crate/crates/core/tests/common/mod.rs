#![allow(dead_code)]

use luka_core::mv::{AlgebraSpec, FiniteMv};

pub fn algebra(spec: &str) -> FiniteMv {
    FiniteMv::from_spec(&spec.parse::<AlgebraSpec>().unwrap()).unwrap()
}

/// Chains up to length 6 and the small products.
pub fn test_algebras() -> Vec<(String, FiniteMv)> {
    let mut out: Vec<(String, FiniteMv)> = (1..=6).map(|k| (format!("chain:{k}"), FiniteMv::chain(k))).collect();
    for spec in ["product:chain:1,chain:1", "product:chain:1,chain:2", "product:chain:2,chain:2"] {
        out.push((spec.to_string(), algebra(spec)));
    }
    out
}

pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
}
