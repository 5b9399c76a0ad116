//! Feng-Rao function and order bound of a numerical semigroup.
//!
//! With `H = {rho_1 = 0 < rho_2 < ...}`, `nu_l` counts ordered pairs of
//! elements summing to `rho_{l+1}` and `d_ord(l) = min{nu_m : m >= l}`.
//! From `L = 2c - g - 1` on the bound equals `l + 1 - g`, so the infinite
//! minimum only has to be taken over `[l, L]`.

use crate::semigroup::{NumericalSemigroup, SemigroupError};

/// `2c - g - 1`, clamped to 1 for `<1>`.
pub fn horizon(s: &NumericalSemigroup) -> u64 {
    (2 * s.conductor()).saturating_sub(s.genus() + 1).max(1)
}

/// Ordered pairs `(a, b)` of elements with `a + b = rho_{ell+1}`.
pub fn nu(s: &NumericalSemigroup, ell: u64) -> u64 {
    assert!(ell >= 1, "nu is defined for ell >= 1");
    let target = s.element_at_index(ell + 1);
    s.elements_up_to(target)
        .filter(|&a| s.contains(target - a))
        .count() as u64
}

pub fn d_ord(s: &NumericalSemigroup, ell: u64) -> u64 {
    assert!(ell >= 1, "d_ord is defined for ell >= 1");
    let l = horizon(s);
    if ell > l {
        ell + 1 - s.genus()
    } else {
        (ell..=l)
            .map(|m| nu(s, m))
            .min()
            .expect("range is nonempty")
    }
}

/// `nu` and `d_ord` for every `ell` in `[1, L]`.
#[derive(Debug, Clone)]
pub struct OrderBoundTable<'a> {
    semigroup: &'a NumericalSemigroup,
    horizon: u64,
    nu: Vec<u64>,
    d_ord: Vec<u64>,
}

impl<'a> OrderBoundTable<'a> {
    pub fn build(s: &'a NumericalSemigroup) -> Result<Self, SemigroupError> {
        if s.genus() == 0 {
            return Err(SemigroupError::FullSemigroup);
        }
        let horizon = horizon(s);
        let nu: Vec<u64> = (1..=horizon).map(|ell| nu(s, ell)).collect();
        let mut d_ord = nu.clone();
        for i in (0..d_ord.len().saturating_sub(1)).rev() {
            d_ord[i] = d_ord[i].min(d_ord[i + 1]);
        }
        Ok(Self {
            semigroup: s,
            horizon,
            nu,
            d_ord,
        })
    }

    pub fn semigroup(&self) -> &'a NumericalSemigroup {
        self.semigroup
    }

    /// `2c - g - 1`.
    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// `nu_ell` for `ell in [1, horizon]`.
    pub fn nu(&self, ell: u64) -> Option<u64> {
        self.nu.get(ell.checked_sub(1)? as usize).copied()
    }

    pub fn nu_values(&self) -> &[u64] {
        &self.nu
    }

    pub fn d_ord_values(&self) -> &[u64] {
        &self.d_ord
    }

    /// Order bound at any `ell >= 1`; past the horizon this is `ell + 1 - g`.
    pub fn d_ord(&self, ell: u64) -> u64 {
        assert!(ell >= 1, "d_ord is defined for ell >= 1");
        match self.d_ord.get(ell as usize - 1) {
            Some(&d) => d,
            None => ell + 1 - self.semigroup.genus(),
        }
    }
}

pub fn build_table(s: &NumericalSemigroup) -> Result<OrderBoundTable<'_>, SemigroupError> {
    OrderBoundTable::build(s)
}
