//! Normalized ideals of a numerical semigroup and their Apéry-set calculus.
//!
//! Every ideal here has minimum 0, so it sits between its parent semigroup
//! and the naturals. The stored source of truth is the Apéry tuple
//! (w_0 = 0, w_1, ..., w_{m-1}); addition, union, intersection and inclusion
//! are all componentwise operations on that tuple. The minimal generating set
//! ({0} plus an antichain of gaps) is derived lazily and cached.

use std::fmt;
use std::sync::OnceLock;

use crate::error::Error;
use crate::semigroup::NumericalSemigroup;

/// An ideal E with min(E) = 0 of a fixed numerical semigroup.
#[derive(Clone)]
pub struct Ideal {
    parent: NumericalSemigroup,
    apery: Vec<u64>,
    min_gens: OnceLock<Vec<u64>>,
}

impl Ideal {
    pub(crate) fn new(parent: NumericalSemigroup, apery: Vec<u64>) -> Self {
        debug_assert_eq!(apery.len() as u64, parent.multiplicity());
        debug_assert_eq!(apery[0], 0);
        Ideal {
            parent,
            apery,
            min_gens: OnceLock::new(),
        }
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    /// The Apéry tuple of the ideal with respect to the multiplicity.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Kunz coordinates of the ideal: apery[i] = k_i * m + i.
    pub fn kunz(&self) -> Vec<u64> {
        let m = self.parent.multiplicity();
        (1..self.apery.len())
            .map(|i| (self.apery[i] - i as u64) / m)
            .collect()
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        let m = self.parent.multiplicity();
        x >= self.apery[(x % m) as usize]
    }

    /// True when the ideal is the parent semigroup itself, the identity of
    /// the ideal class monoid.
    pub fn is_identity(&self) -> bool {
        self.apery == self.parent.apery()
    }

    /// True when the ideal is all of the non-negative integers.
    pub fn is_naturals(&self) -> bool {
        self.apery.iter().enumerate().all(|(i, &w)| w == i as u64)
    }

    /// The unique minimal generating set {0} u X, with X an antichain of gaps
    /// of the parent under the induced order.
    pub fn min_generators(&self) -> &[u64] {
        self.min_gens.get_or_init(|| {
            let s = &self.parent;
            // Generator candidates are the Apéry entries that are gaps of S;
            // one survives iff no other candidate sits below it.
            let cands: Vec<u64> = self
                .apery
                .iter()
                .copied()
                .filter(|&w| w > 0 && !s.contains(w as i64))
                .collect();
            let mut gens = vec![0];
            gens.extend(cands.iter().copied().filter(|&x| {
                !cands
                    .iter()
                    .any(|&y| y != x && s.contains(x as i64 - y as i64))
            }));
            gens.sort_unstable();
            gens
        })
    }

    /// Size of the minimal generating set (the embedding dimension of E).
    pub fn nu(&self) -> usize {
        self.min_generators().len()
    }

    /// Largest integer not in the ideal; errors when the ideal is the whole
    /// set of non-negative integers.
    pub fn frobenius(&self) -> Result<i64, Error> {
        if self.is_naturals() {
            return Err(Error::NoGaps);
        }
        let m = self.parent.multiplicity() as i64;
        Ok(*self.apery.iter().max().unwrap() as i64 - m)
    }

    fn check_parent(&self, other: &Ideal) -> Result<(), Error> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Sum of ideals: entry i of the result is the minimum of w_a(I) + w_b(J)
    /// over a + b congruent to i mod m.
    pub fn add(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.check_parent(other)?;
        Ok(Ideal::new(
            self.parent.clone(),
            add_apery(&self.apery, &other.apery),
        ))
    }

    /// Union: componentwise minimum of the Apéry tuples.
    pub fn union(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.check_parent(other)?;
        let apery = self
            .apery
            .iter()
            .zip(&other.apery)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(Ideal::new(self.parent.clone(), apery))
    }

    /// Intersection: componentwise maximum of the Apéry tuples.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.check_parent(other)?;
        let apery = self
            .apery
            .iter()
            .zip(&other.apery)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(Ideal::new(self.parent.clone(), apery))
    }

    /// Inclusion check: I is a subset of J iff w_i(J) <= w_i(I) for every i.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool, Error> {
        self.check_parent(other)?;
        Ok(self
            .apery
            .iter()
            .zip(&other.apery)
            .all(|(&wi, &wj)| wj <= wi))
    }

    /// Least r with (r+1)E = rE, found by fixed-point iteration of the sum;
    /// bounded by m - 1.
    pub fn reduction_number(&self) -> u64 {
        let mut current = self.parent.ideal_of_self();
        let mut r = 0;
        loop {
            let next = Ideal::new(self.parent.clone(), add_apery(&current.apery, &self.apery));
            if next.apery == current.apery {
                return r;
            }
            current = next;
            r += 1;
        }
    }
}

pub(crate) fn add_apery(a: &[u64], b: &[u64]) -> Vec<u64> {
    let m = a.len();
    let mut out = vec![u64::MAX; m];
    for (i, &wa) in a.iter().enumerate() {
        for (j, &wb) in b.iter().enumerate() {
            let r = (i + j) % m;
            out[r] = out[r].min(wa + wb);
        }
    }
    out
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.apery == other.apery
    }
}

impl Eq for Ideal {}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.apery.hash(state);
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}+{:?}", self.min_generators(), self.parent)
    }
}

impl NumericalSemigroup {
    /// The ideal generated by `gens` (translated so its minimum is 0).
    pub fn ideal(&self, gens: &[u64]) -> Ideal {
        assert!(!gens.is_empty(), "ideal generator list must be non-empty");
        let lo = *gens.iter().min().unwrap();
        let m = self.multiplicity();
        let sap = self.apery();
        let mut apery = vec![u64::MAX; m as usize];
        for &x in gens {
            let x = x - lo;
            for i in 0..m {
                // least element of x + S congruent to i mod m
                let j = ((i + m - x % m) % m) as usize;
                let v = x + sap[j];
                let slot = &mut apery[i as usize];
                *slot = (*slot).min(v);
            }
        }
        Ideal::new(self.clone(), apery)
    }

    /// The semigroup itself viewed as the identity ideal.
    pub fn ideal_of_self(&self) -> Ideal {
        Ideal::new(self.clone(), self.apery().to_vec())
    }

    /// The whole set of non-negative integers as an ideal (the absorbing
    /// element of the ideal class monoid).
    pub fn naturals_ideal(&self) -> Ideal {
        let apery = (0..self.multiplicity()).collect();
        Ideal::new(self.clone(), apery)
    }

    /// Decides whether `tuple` is the Apéry set of some ideal with minimum 0,
    /// i.e. whether w_i + w_j(S) >= w_{(i+j) mod m} holds for all i, j.
    /// The residue preconditions (tuple[0] = 0, tuple[i] congruent to i) are
    /// checked first and produce an error when violated.
    pub fn is_ideal_apery(&self, tuple: &[u64]) -> Result<bool, Error> {
        let m = self.multiplicity();
        assert_eq!(tuple.len() as u64, m, "apery tuple must have length m");
        for (i, &w) in tuple.iter().enumerate() {
            if w % m != i as u64 % m || (i == 0 && w != 0) {
                return Err(Error::BadResidues { index: i });
            }
        }
        let sap = self.apery();
        let mu = m as usize;
        for i in 0..mu {
            for j in 0..mu {
                if tuple[i] + sap[j] < tuple[(i + j) % mu] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The canonical ideal K = {x : F - x is not a member}, normalized to
    /// minimum 0. Its Apéry tuple satisfies w_i(K) + w_j(S) = w_f(S) whenever
    /// i + j is congruent to f = F mod m.
    pub fn canonical_ideal(&self) -> Result<Ideal, Error> {
        if self.is_naturals() {
            return Err(Error::EmptyForNaturals);
        }
        let m = self.multiplicity();
        let f = (self.frobenius() as u64) % m;
        let sap = self.apery();
        let wf = sap[f as usize];
        let apery: Vec<u64> = (0..m)
            .map(|i| wf - sap[((f + m - i) % m) as usize])
            .collect();
        Ok(Ideal::new(self.clone(), apery))
    }
}
