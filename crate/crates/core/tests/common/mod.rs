//! Reference implementations used only by the integration tests. None of
//! this goes through the library's membership table.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// All nonnegative combinations of `gens` up to `limit`, by closing `{0}`
/// under adding a generator.
pub fn closure_up_to(gens: &[u64], limit: u64) -> BTreeSet<u64> {
    let mut seen = BTreeSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x + g;
            if y <= limit && seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// `nu` straight from the definition: ordered index pairs `(i, j)` with
/// `rho_i + rho_j = rho_{ell+1}`, by a double loop over the listed elements.
pub fn nu_by_pairs(elements: &[u64], ell: usize) -> u64 {
    let target = elements[ell];
    let mut count = 0;
    for &a in elements.iter().take_while(|&&a| a <= target) {
        for &b in elements.iter().take_while(|&&b| b <= target) {
            if a + b == target {
                count += 1;
            }
        }
    }
    count
}

pub fn gcd_all(gens: &[u64]) -> u64 {
    gens.iter().fold(0, |mut a, &b| {
        let mut b = b;
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    })
}
