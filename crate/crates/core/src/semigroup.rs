//! Numerical semigroups given by a finite generating set.
//!
//! Membership is materialized as a table over `[0, bound]` by a single
//! dynamic-programming sweep. Past the bound every query is answered by
//! comparing against the conductor, so the table only has to cover the gaps
//! plus some headroom.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive, got 0")]
    ZeroGenerator,
    #[error("generators have gcd {0}, so the complement is infinite")]
    GcdNotOne(u64),
    #[error("the full semigroup <1> has no gaps, symmetry is undefined")]
    FullSemigroup,
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(u64),
    #[error("arithmetic overflow while sizing the membership table")]
    Overflow,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A numerical semigroup `<generators>` with its membership table and the
/// invariants derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    bound: u64,
    membership: Vec<bool>,
    genus: u64,
    conductor: u64,
    frobenius: i64,
    /// Elements strictly below the conductor, ascending.
    small_elements: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds `<gens>`. Input is sorted and deduplicated; it does not have to
    /// be minimal.
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        Self::with_bound(gens, 0)
    }

    /// Like [`from_generators`](Self::from_generators) but materializes
    /// membership at least up to `min_bound`.
    pub fn with_bound(gens: &[u64], min_bound: u64) -> Result<Self, SemigroupError> {
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let (&multiplicity, &largest) = match (generators.first(), generators.last()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(SemigroupError::EmptyGenerators),
        };
        if multiplicity == 0 {
            return Err(SemigroupError::ZeroGenerator);
        }
        let d = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if d != 1 {
            return Err(SemigroupError::GcdNotOne(d));
        }

        // Frobenius number < (min-1)(max-1) for gcd 1, so a run of
        // `multiplicity` consecutive members shows up before min*max.
        let cap = multiplicity
            .checked_mul(largest)
            .and_then(|x| x.checked_add(largest))
            .ok_or(SemigroupError::Overflow)?;
        let cap = usize::try_from(cap).map_err(|_| SemigroupError::Overflow)?;

        let mut membership = vec![true];
        let mut run = 1u64;
        let mut conductor = 0u64;
        while run < multiplicity {
            let x = membership.len();
            if x > cap {
                return Err(SemigroupError::Overflow);
            }
            let member = sweep_step(&membership, &generators, x);
            membership.push(member);
            if member {
                run += 1;
            } else {
                run = 0;
                conductor = x as u64 + 1;
            }
        }

        let bound = conductor
            .checked_add(largest)
            .ok_or(SemigroupError::Overflow)?
            .max(min_bound);
        let len = usize::try_from(bound)
            .ok()
            .and_then(|b| b.checked_add(1))
            .ok_or(SemigroupError::Overflow)?;
        // Everything from the conductor on is a member.
        membership.resize(len.max(membership.len()), true);
        membership.truncate(len);

        let small_elements: Vec<u64> = (0..conductor).filter(|&x| membership[x as usize]).collect();
        let genus = conductor - small_elements.len() as u64;

        Ok(Self {
            generators,
            bound,
            membership,
            genus,
            conductor,
            frobenius: conductor as i64 - 1,
            small_elements,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Membership table over `[0, bound]`.
    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, `-1` for `<1>`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn contains(&self, x: u64) -> bool {
        match usize::try_from(x) {
            Ok(i) if i < self.membership.len() => self.membership[i],
            _ => x >= self.conductor,
        }
    }

    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    /// Symmetric iff the Frobenius number is `2g - 1`.
    pub fn is_symmetric(&self) -> Result<bool, SemigroupError> {
        if self.genus == 0 {
            return Err(SemigroupError::FullSemigroup);
        }
        Ok(self.frobenius == 2 * self.genus as i64 - 1)
    }

    /// Nonzero elements that are not a sum of two nonzero elements.
    ///
    /// Every such element is at most `conductor + multiplicity`, which the
    /// membership table always covers.
    pub fn minimal_generating_set(&self) -> Vec<u64> {
        let top = self.conductor + self.multiplicity();
        (1..=top)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..=x / 2).any(|a| self.contains(a) && self.contains(x - a)))
            .collect()
    }

    /// The `ell`-th smallest element, 1-based so that `element_at_index(1) == 0`.
    ///
    /// # Panics
    /// If `ell == 0`.
    pub fn element_at_index(&self, ell: u64) -> u64 {
        assert!(ell >= 1, "semigroup elements are indexed from 1");
        let below = self.small_elements.len() as u64;
        if ell <= below {
            self.small_elements[(ell - 1) as usize]
        } else {
            ell - 1 + self.genus
        }
    }

    /// Inverse of [`element_at_index`](Self::element_at_index).
    pub fn index_of(&self, x: u64) -> Result<u64, SemigroupError> {
        if !self.contains(x) {
            return Err(SemigroupError::NotAnElement(x));
        }
        if x >= self.conductor {
            return Ok(x + 1 - self.genus);
        }
        let pos = self
            .small_elements
            .binary_search(&x)
            .expect("members below the conductor are recorded");
        Ok(pos as u64 + 1)
    }

    /// Ascending iterator over all elements up to and including `limit`.
    pub fn elements_up_to(&self, limit: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=limit).filter(move |&x| self.contains(x))
    }
}

fn sweep_step(membership: &[bool], generators: &[u64], x: usize) -> bool {
    generators
        .iter()
        .take_while(|&&g| g as usize <= x)
        .any(|&g| membership[x - g as usize])
}

/// Whether `target` is a nonnegative integer combination of `gens`.
///
/// Unlike [`NumericalSemigroup`] this imposes no gcd condition, which makes it
/// usable for testing a generator against the others.
pub fn is_representable(target: u64, gens: &[u64]) -> bool {
    let n = target as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for x in 1..=n {
        reach[x] = gens
            .iter()
            .any(|&g| g != 0 && g as usize <= x && reach[x - g as usize]);
    }
    reach[n]
}
