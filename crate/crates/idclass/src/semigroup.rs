//! Numerical semigroups and their classical invariants.
//!
//! A numerical semigroup is a submonoid of the non-negative integers with
//! finite complement. The canonical record built here stores the minimal
//! generators, multiplicity, Frobenius number, conductor, gaps, the Apéry set
//! with respect to the multiplicity and the Kunz coordinates. Membership is
//! answered in O(1) from the Apéry set once construction is done.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Error;

#[derive(Debug)]
struct SemigroupData {
    min_generators: Vec<u64>,
    multiplicity: u64,
    frobenius: i64,
    conductor: u64,
    genus: u64,
    gaps: Vec<u64>,
    apery: Vec<u64>,
    kunz: Vec<u64>,
}

/// A numerical semigroup, immutable and cheap to clone (shared internals).
#[derive(Clone)]
pub struct NumericalSemigroup {
    data: Arc<SemigroupData>,
}

/// Symmetry class of a numerical semigroup other than the naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Symmetric,
    PseudoSymmetric,
    Neither,
}

impl Symmetry {
    /// Symmetric and pseudo-symmetric semigroups are exactly the irreducible ones.
    pub fn is_irreducible(self) -> bool {
        self != Symmetry::Neither
    }
}

/// One class of the class semigroup of the naturals modulo a numerical
/// semigroup: the singletons {0}, ..., {c-1} and the full tail c + N.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueClass {
    Singleton(u64),
    Tail { start: u64 },
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Membership sieve for the monoid generated by `gens`, over `[0, bound]`.
fn sieve(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut member = vec![false; bound + 1];
    member[0] = true;
    for x in 1..=bound {
        for &g in gens {
            let g = g as usize;
            if g <= x && member[x - g] {
                member[x] = true;
                break;
            }
        }
    }
    member
}

/// Builds the full record from a membership table that is total up to
/// `frobenius + multiplicity + 1` at least.
fn build(member: &[bool], frobenius: i64) -> SemigroupData {
    if frobenius < 0 {
        return SemigroupData {
            min_generators: vec![1],
            multiplicity: 1,
            frobenius: -1,
            conductor: 0,
            genus: 0,
            gaps: Vec::new(),
            apery: vec![0],
            kunz: Vec::new(),
        };
    }
    let f = frobenius as usize;
    let conductor = f as u64 + 1;
    let m = (1..).find(|&x| x > f || member[x]).unwrap();
    debug_assert!(m <= f + 1);

    let gaps: Vec<u64> = (1..=f).filter(|&x| !member[x]).map(|x| x as u64).collect();
    let genus = gaps.len() as u64;

    let mut apery = Vec::with_capacity(m);
    for i in 0..m {
        let mut x = i;
        while x <= f && !member[x] {
            x += m;
        }
        apery.push(x as u64);
    }
    let kunz: Vec<u64> = (1..m).map(|i| (apery[i] - i as u64) / m as u64).collect();
    debug_assert_eq!(kunz.iter().sum::<u64>(), genus);

    // Minimal generators live in {m} u (Ap(S, m) \ {0}); an element is
    // minimal iff it is not a sum of two non-zero members.
    let mut candidates: Vec<u64> = vec![m as u64];
    candidates.extend(apery.iter().copied().filter(|&w| w != 0));
    candidates.sort_unstable();
    let is_member = |x: usize| x > f || member[x];
    let min_generators: Vec<u64> = candidates
        .into_iter()
        .filter(|&x| {
            let x = x as usize;
            !(m..=x.saturating_sub(m)).any(|a| is_member(a) && is_member(x - a))
        })
        .collect();

    SemigroupData {
        min_generators,
        multiplicity: m as u64,
        frobenius,
        conductor,
        genus,
        gaps,
        apery,
        kunz,
    }
}

impl NumericalSemigroup {
    /// The semigroup of all non-negative integers.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            data: Arc::new(build(&[true], -1)),
        }
    }

    /// Builds the numerical semigroup generated by `gens`. The input may be
    /// unsorted and redundant; it is reduced to the minimal generating set.
    pub fn from_generators(gens: &[u64]) -> Result<Self, Error> {
        assert!(!gens.is_empty(), "generator list must be non-empty");
        assert!(gens.iter().all(|&g| g > 0), "generators must be positive");
        let mut gens: Vec<u64> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotNumerical { gcd: g });
        }
        if gens[0] == 1 {
            return Ok(Self::naturals());
        }
        let m = gens[0] as usize;
        let max = *gens.last().unwrap() as usize;
        // Grow the sieve until the top m slots are all members; from there on
        // everything is a member, so the Frobenius number is inside the table.
        let mut bound = m * max + m;
        loop {
            let member = sieve(&gens, bound);
            if member[bound + 1 - m..=bound].iter().all(|&b| b) {
                let f = (0..=bound).rev().find(|&x| !member[x]).unwrap();
                return Ok(NumericalSemigroup {
                    data: Arc::new(build(&member, f as i64)),
                });
            }
            bound *= 2;
        }
    }

    /// Builds a numerical semigroup from its gap set, or `None` when the
    /// complement of `gaps` is not closed under addition.
    pub fn from_gaps(gaps: &[u64]) -> Option<Self> {
        let mut gaps: Vec<u64> = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.is_empty() {
            return Some(Self::naturals());
        }
        if gaps[0] == 0 {
            return None;
        }
        let f = *gaps.last().unwrap() as usize;
        let mut member = vec![true; f + 1];
        for &g in &gaps {
            member[g as usize] = false;
        }
        // Closed complement: no gap may be the sum of two non-zero members.
        let is_member = |x: usize| x > f || member[x];
        for &g in &gaps {
            let g = g as usize;
            if (1..g).any(|a| is_member(a) && is_member(g - a)) {
                return None;
            }
        }
        Some(NumericalSemigroup {
            data: Arc::new(build(&member, f as i64)),
        })
    }

    /// True when the semigroup is all of the non-negative integers.
    pub fn is_naturals(&self) -> bool {
        self.data.frobenius < 0
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.data.min_generators
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.data.min_generators.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.data.multiplicity
    }

    /// Largest integer not in the semigroup; -1 exactly for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.data.frobenius
    }

    pub fn conductor(&self) -> u64 {
        self.data.conductor
    }

    pub fn genus(&self) -> u64 {
        self.data.genus
    }

    pub fn gaps(&self) -> &[u64] {
        &self.data.gaps
    }

    /// The Apéry set with respect to the multiplicity: entry i is the least
    /// member congruent to i mod m.
    pub fn apery(&self) -> &[u64] {
        &self.data.apery
    }

    /// Kunz coordinates (k_1, ..., k_{m-1}) with apery[i] = k_i * m + i.
    pub fn kunz(&self) -> &[u64] {
        &self.data.kunz
    }

    /// O(1) membership through the Apéry criterion.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        if x >= self.data.conductor {
            return true;
        }
        let m = self.data.multiplicity;
        x >= self.data.apery[(x % m) as usize]
    }

    /// The order induced by the semigroup: a <= b iff b - a is a member.
    pub fn le(&self, a: i64, b: i64) -> bool {
        b.checked_sub(a).is_some_and(|d| self.contains(d))
    }

    /// Apéry set with respect to an arbitrary non-zero element `n`.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>, Error> {
        if n == 0 || !self.contains(n as i64) {
            return Err(Error::NotMember(n));
        }
        let mut out = Vec::with_capacity(n as usize);
        for i in 0..n {
            let mut x = i;
            while !self.contains(x as i64) {
                x += n;
            }
            out.push(x);
        }
        Ok(out)
    }

    /// Pseudo-Frobenius numbers: the maximal gaps under the induced order,
    /// computed as Maximals(Ap(S, m)) - m.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>, Error> {
        if self.is_naturals() {
            return Err(Error::EmptyForNaturals);
        }
        let apery = self.apery();
        let m = self.multiplicity();
        let mut pf: Vec<u64> = (1..apery.len())
            .filter(|&i| {
                (1..apery.len())
                    .all(|j| j == i || !self.contains(apery[j] as i64 - apery[i] as i64))
            })
            .map(|i| apery[i] - m)
            .collect();
        pf.sort_unstable();
        Ok(pf)
    }

    /// The type of the semigroup: the number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> Result<usize, Error> {
        Ok(self.pseudo_frobenius()?.len())
    }

    /// Special gaps: pseudo-Frobenius numbers whose double is a member. Each
    /// one yields a unitary extension of the semigroup.
    pub fn special_gaps(&self) -> Result<Vec<u64>, Error> {
        Ok(self
            .pseudo_frobenius()?
            .into_iter()
            .filter(|&f| self.contains(2 * f as i64))
            .collect())
    }

    /// Symmetric iff 2g = F + 1, pseudo-symmetric iff 2g = F + 2.
    pub fn symmetry(&self) -> Result<Symmetry, Error> {
        if self.is_naturals() {
            return Err(Error::EmptyForNaturals);
        }
        let g = self.genus() as i64;
        let f = self.frobenius();
        Ok(if 2 * g == f + 1 {
            Symmetry::Symmetric
        } else if 2 * g == f + 2 {
            Symmetry::PseudoSymmetric
        } else {
            Symmetry::Neither
        })
    }

    /// The semigroups obtained by adjoining one special gap.
    pub fn unitary_extensions(&self) -> Result<Vec<NumericalSemigroup>, Error> {
        let sg = self.special_gaps()?;
        Ok(sg
            .into_iter()
            .map(|f| {
                let gaps: Vec<u64> = self.gaps().iter().copied().filter(|&g| g != f).collect();
                Self::from_gaps(&gaps).expect("removing a special gap keeps the complement closed")
            })
            .collect())
    }

    /// Partition of the gaps into the m - 1 chains {i, i+m, ..., i+(k_i-1)m},
    /// a minimum chain cover witnessing that the gap poset has width m - 1.
    pub fn gap_chains(&self) -> Vec<Vec<u64>> {
        let m = self.multiplicity();
        self.kunz()
            .iter()
            .enumerate()
            .map(|(i, &k)| (0..k).map(|t| (i as u64 + 1) + t * m).collect())
            .collect()
    }

    /// The class semigroup of the naturals modulo this semigroup: c singleton
    /// classes followed by the full tail class c + N.
    pub fn class_semigroup_partition(&self) -> Vec<ResidueClass> {
        let c = self.conductor();
        let mut out: Vec<ResidueClass> = (0..c).map(ResidueClass::Singleton).collect();
        out.push(ResidueClass::Tail { start: c });
        out
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.gaps == other.data.gaps
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.data.gaps.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{:?}", self.min_generators())
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .min_generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// Depth-first stream of every numerical semigroup of genus at most
/// `max_genus`, each exactly once. A node's children remove one minimal
/// generator larger than the Frobenius number, visited in ascending order of
/// the removed generator.
pub fn enumerate_by_genus(max_genus: u64) -> GenusTree {
    GenusTree {
        stack: vec![NumericalSemigroup::naturals()],
        max_genus,
    }
}

pub struct GenusTree {
    stack: Vec<NumericalSemigroup>,
    max_genus: u64,
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let s = self.stack.pop()?;
        if s.genus() < self.max_genus {
            let f = s.frobenius();
            // Reverse push so the smallest removed generator is visited first.
            for &g in s.min_generators().iter().rev() {
                if g as i64 > f {
                    let mut gaps = s.gaps().to_vec();
                    gaps.push(g);
                    let child = NumericalSemigroup::from_gaps(&gaps).expect(
                        "removing a minimal generator above the Frobenius number keeps closure",
                    );
                    self.stack.push(child);
                }
            }
        }
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn naturals_from_one() {
        let s = ns(&[1]);
        assert!(s.is_naturals());
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.genus(), 0);
        assert_eq!(s.conductor(), 0);
        assert_eq!(s.apery(), &[0]);
        assert!(s.kunz().is_empty());
        assert!(s.gaps().is_empty());
    }

    #[test]
    fn three_five_seven() {
        let s = ns(&[3, 5, 7]);
        assert_eq!(s.gaps(), &[1, 2, 4]);
        assert_eq!(s.frobenius(), 4);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.apery(), &[0, 7, 5]);
        assert_eq!(s.kunz(), &[2, 1]);
        assert_eq!(s.genus(), 3);
    }

    #[test]
    fn kunz_of_5689() {
        let s = ns(&[5, 6, 8, 9]);
        assert_eq!(s.kunz(), &[1, 2, 1, 1]);
        assert_eq!(s.genus(), 5);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = ns(&[6, 4, 9, 10]);
        assert_eq!(s.min_generators(), &[4, 6, 9]);
    }

    #[test]
    fn gcd_error() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotNumerical { gcd: 2 })
        );
    }

    #[test]
    fn membership() {
        let s = ns(&[3, 5, 7]);
        assert!(!s.contains(4));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
        let t = ns(&[5, 7, 9]);
        assert!(!t.contains(11));
        assert!(t.contains(14));
    }

    #[test]
    fn apery_sets() {
        let s = ns(&[3, 5, 7]);
        assert_eq!(s.apery_set(3).unwrap(), vec![0, 7, 5]);
        assert_eq!(
            NumericalSemigroup::naturals().apery_set(1).unwrap(),
            vec![0]
        );
        let t = ns(&[5, 7, 9]);
        assert_eq!(t.apery_set(5).unwrap(), vec![0, 16, 7, 18, 9]);
        assert_eq!(t.apery_set(0), Err(Error::NotMember(0)));
        assert_eq!(t.apery_set(11), Err(Error::NotMember(11)));
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(ns(&[3, 10, 17]).pseudo_frobenius().unwrap(), vec![7, 14]);
        assert_eq!(ns(&[2, 3]).pseudo_frobenius().unwrap(), vec![1]);
        assert_eq!(ns(&[3, 5, 7]).pseudo_frobenius().unwrap(), vec![2, 4]);
        assert_eq!(
            NumericalSemigroup::naturals().pseudo_frobenius(),
            Err(Error::EmptyForNaturals)
        );
    }

    #[test]
    fn special_gaps_examples() {
        assert_eq!(ns(&[3, 10, 17]).special_gaps().unwrap(), vec![14]);
        assert_eq!(ns(&[2, 7]).special_gaps().unwrap(), vec![5]);
        assert_eq!(ns(&[5, 6, 8, 9]).special_gaps().unwrap(), vec![3, 4, 7]);
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(ns(&[2, 21]).symmetry().unwrap(), Symmetry::Symmetric);
        assert_eq!(ns(&[2, 3]).symmetry().unwrap(), Symmetry::Symmetric);
        assert_eq!(ns(&[5, 6, 8, 9]).symmetry().unwrap(), Symmetry::Neither);
        assert_eq!(
            ns(&[3, 5, 7]).symmetry().unwrap(),
            Symmetry::PseudoSymmetric
        );
    }

    #[test]
    fn induced_order() {
        let s = ns(&[3, 5, 7]);
        assert!(!s.le(2, 4));
        assert!(s.le(9, 9));
        assert!(s.le(1, 4));
    }

    #[test]
    fn unitary_extension_examples() {
        let s = ns(&[3, 10, 17]);
        let ext = s.unitary_extensions().unwrap();
        assert_eq!(ext.len(), 1);
        assert_eq!(ext[0].gaps(), &[1, 2, 4, 5, 7, 8, 11]);
        let n = ns(&[2, 3]).unitary_extensions().unwrap();
        assert_eq!(n.len(), 1);
        assert!(n[0].is_naturals());
    }

    #[test]
    fn genus_tree_counts() {
        assert_eq!(enumerate_by_genus(0).count(), 1);
        assert_eq!(enumerate_by_genus(3).count(), 8);
        let mut counts = [0u64; 11];
        for s in enumerate_by_genus(10) {
            counts[s.genus() as usize] += 1;
        }
        assert_eq!(counts, [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204]);
    }

    #[test]
    fn genus_tree_is_deterministic_and_unique() {
        let a: Vec<Vec<u64>> = enumerate_by_genus(5).map(|s| s.gaps().to_vec()).collect();
        let b: Vec<Vec<u64>> = enumerate_by_genus(5).map(|s| s.gaps().to_vec()).collect();
        assert_eq!(a, b);
        let mut dedup = a.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), a.len());
    }

    #[test]
    fn from_gaps_rejects_unclosed_complements() {
        // 1 and 2 members, 3 a gap: 1 + 2 = 3 breaks closure.
        assert!(NumericalSemigroup::from_gaps(&[3]).is_none());
        assert!(NumericalSemigroup::from_gaps(&[1, 2, 4]).is_some());
        assert!(NumericalSemigroup::from_gaps(&[]).unwrap().is_naturals());
    }

    #[test]
    fn class_semigroup_partition_examples() {
        assert_eq!(
            NumericalSemigroup::naturals().class_semigroup_partition(),
            vec![ResidueClass::Tail { start: 0 }]
        );
        assert_eq!(
            ns(&[2, 3]).class_semigroup_partition(),
            vec![
                ResidueClass::Singleton(0),
                ResidueClass::Singleton(1),
                ResidueClass::Tail { start: 2 }
            ]
        );
        let p = ns(&[3, 5, 7]).class_semigroup_partition();
        assert_eq!(p.len(), 6);
        assert_eq!(p[5], ResidueClass::Tail { start: 5 });
    }

    #[test]
    fn gap_chain_partition() {
        let s = ns(&[3, 5, 7]);
        let chains = s.gap_chains();
        assert_eq!(chains, vec![vec![1, 4], vec![2]]);
        let mut all: Vec<u64> = chains.into_iter().flatten().collect();
        all.sort_unstable();
        assert_eq!(all, s.gaps());
    }

    #[test]
    fn type_is_at_most_multiplicity_minus_one() {
        for s in enumerate_by_genus(6) {
            if s.is_naturals() {
                continue;
            }
            let t = s.semigroup_type().unwrap() as u64;
            assert!(t <= s.multiplicity() - 1, "type bound fails for {s}");
            assert_eq!(s.kunz().iter().sum::<u64>(), s.genus());
        }
    }
}
