//! Enumeration helpers for test sweeps and the verification harness.

use crate::characters::weyl_dim;
use crate::root_data::{RootSystem, Weight};
use num_bigint::BigUint;

/// All dominant weights with coordinates in 0..=max_coord and Weyl dimension
/// at most dim_cap, in lexicographic coordinate order.
pub fn dominant_weights(rs: &RootSystem, max_coord: i64, dim_cap: u64) -> Vec<Weight> {
    let n = rs.rank();
    let cap = BigUint::from(dim_cap);
    let mut out = Vec::new();
    let mut coords = vec![0i64; n];
    loop {
        let w = Weight(coords.clone());
        if weyl_dim(rs, &w).unwrap() <= cap {
            out.push(w);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            coords[i] += 1;
            if coords[i] <= max_coord {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}

/// Primes below `bound` by trial division; the bounds in play are tiny.
pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&p| is_prime(p)).collect()
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
