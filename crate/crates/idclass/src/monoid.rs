//! The ideal class monoid of a numerical semigroup.
//!
//! The monoid of ideal classes is realized as the set of ideals with minimum
//! 0 under addition. Enumeration goes through the Kunz inequality system, the
//! full addition table is materialized as an index matrix, and from the table
//! we derive the algebraic preorder, both Hasse diagrams, the classification
//! of every element (irreducible / atom / quark / prime / idempotent), the
//! cardinality bounds with their equality characterizations, and minimal
//! factorizations into irreducibles.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Error;
use crate::ideal::{add_apery, Ideal};
use crate::poset;
use crate::semigroup::NumericalSemigroup;

/// The inequality system whose non-negative solutions are exactly the Kunz
/// tuples of ideals with minimum 0: x_i <= k_i for all i, and the two
/// difference families x_{i+j} - x_i <= k_j (i + j < m) and
/// x_{i+j-m} - x_i <= k_j + 1 (i + j > m).
#[derive(Debug, Clone)]
pub struct KunzSystem {
    bounds: Vec<u64>,
}

impl KunzSystem {
    pub fn of(s: &NumericalSemigroup) -> KunzSystem {
        KunzSystem {
            bounds: s.kunz().to_vec(),
        }
    }

    /// Kunz coordinates of the parent semigroup (the variable upper bounds).
    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    /// Checks all three constraint families for a full tuple.
    pub fn is_solution(&self, x: &[u64]) -> bool {
        let k = &self.bounds;
        let m = k.len() + 1;
        if x.len() != k.len() {
            return false;
        }
        for t in 0..x.len() {
            if x[t] > k[t] {
                return false;
            }
        }
        for a in 0..x.len() {
            for b in 0..x.len() {
                let s = a + b + 2; // the underlying residues are a+1 and b+1
                if s < m && x[s - 1] > x[a] + k[b] {
                    return false;
                }
                if s > m && x[s - m - 1] > x[a] + k[b] + 1 {
                    return false;
                }
            }
        }
        true
    }

    /// All solutions in descending lexicographic order, by backtracking with
    /// incremental bound propagation.
    pub fn enumerate_desc(&self) -> Vec<Vec<u64>> {
        let k = &self.bounds;
        let m = k.len() + 1;
        let mut out = Vec::new();
        let mut x: Vec<u64> = Vec::with_capacity(k.len());

        fn rec(k: &[u64], m: usize, x: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            let t = x.len();
            if t == k.len() {
                out.push(x.clone());
                return;
            }
            // upper bounds from x_{t+1} - x_{a+1} <= k_{t-a}
            let mut ub = k[t];
            for a in 0..t {
                ub = ub.min(x[a] + k[t - a - 1]);
            }
            // lower bounds from x_{w+1} - x_{t+1} <= k_j + 1, j = m + w - t
            let mut lb = 0i64;
            for w in 0..t {
                let j = m + w - t; // 1-based residue j, in [m-t+1, m-1]
                lb = lb.max(x[w] as i64 - k[j - 1] as i64 - 1);
            }
            let lb = lb.max(0) as u64;
            if lb > ub {
                return;
            }
            let mut v = ub;
            loop {
                x.push(v);
                rec(k, m, x, out);
                x.pop();
                if v == lb {
                    break;
                }
                v -= 1;
            }
        }
        rec(k, m, &mut x, &mut out);
        out
    }
}

/// Which partial order on the monoid a diagram refers to: set inclusion or
/// the algebraic preorder (I below J iff J = I + K for some K).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    Inclusion,
    Preceq,
}

/// Per-ideal classification flags and numeric invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub irreducible: bool,
    pub atom: bool,
    pub quark: bool,
    pub prime: bool,
    pub idempotent: bool,
    pub reduction_number: u64,
    pub nu: usize,
}

/// Outcome of counting quarks: one quark characterizes symmetric semigroups,
/// two characterize pseudo-symmetric ones, anything else is not irreducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "profile")]
pub enum QuarkProfile {
    Symmetric {
        quark: usize,
    },
    PseudoSymmetric {
        frobenius_quark: usize,
        half_frobenius_quark: usize,
    },
    NotIrreducible {
        quark_count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// One evaluated cardinality bound, with the equality characterization when
/// the statement provides one.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: u64,
    pub holds: bool,
    pub attained: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characterization: Option<CharacterizationCheck>,
}

/// Whether the structural predicate for equality agrees with the observed
/// attainment, in both directions.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterizationCheck {
    pub predicted_attained: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub cardinality: u64,
    pub genus: u64,
    pub multiplicity: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroup_type: Option<u64>,
    pub checks: Vec<BoundCheck>,
    pub all_hold: bool,
}

/// All minimal factorizations of one ideal into irreducible elements,
/// given as sorted multisets of ideal indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorizations {
    pub target: usize,
    pub factorizations: Vec<Vec<usize>>,
    pub lengths: Vec<usize>,
}

struct Table {
    entries: Vec<u32>,
    preceq: Vec<bool>,
}

/// The enumerated ideal class monoid of one semigroup: the deterministic
/// ideal list (index 0 is the semigroup itself, the last index is the
/// naturals) and, once built, the full addition table.
pub struct ClassMonoid {
    semigroup: NumericalSemigroup,
    ideals: Vec<Ideal>,
    index: HashMap<Vec<u64>, usize>,
    table: Option<Table>,
}

impl ClassMonoid {
    /// Enumerates the ideals through the Kunz system, without the table.
    /// Ideals are indexed in descending lexicographic order of their Kunz
    /// tuples, which puts the identity first and the naturals last.
    pub fn enumerate(s: &NumericalSemigroup) -> ClassMonoid {
        let m = s.multiplicity();
        let ideals: Vec<Ideal> = KunzSystem::of(s)
            .enumerate_desc()
            .into_iter()
            .map(|x| {
                let mut apery = Vec::with_capacity(m as usize);
                apery.push(0);
                for (i, &xi) in x.iter().enumerate() {
                    apery.push(xi * m + i as u64 + 1);
                }
                Ideal::new(s.clone(), apery)
            })
            .collect();
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, e)| (e.apery().to_vec(), i))
            .collect();
        let monoid = ClassMonoid {
            semigroup: s.clone(),
            ideals,
            index,
            table: None,
        };
        debug_assert!(monoid.ideals[0].is_identity());
        debug_assert!(monoid.ideals[monoid.len() - 1].is_naturals());
        monoid
    }

    /// Enumerates the ideals and builds the addition table in one go.
    pub fn with_table(s: &NumericalSemigroup) -> ClassMonoid {
        let mut monoid = Self::enumerate(s);
        monoid.build_table();
        monoid
    }

    /// Fills the addition table (and the reachability matrix of the
    /// algebraic preorder) by pairwise Apéry-tuple sums.
    pub fn build_table(&mut self) {
        if self.table.is_some() {
            return;
        }
        let n = self.len();
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let sum = add_apery(self.ideals[i].apery(), self.ideals[j].apery());
                let t = self.index[&sum] as u32;
                entries[i * n + j] = t;
                entries[j * n + i] = t;
            }
        }
        let mut preceq = vec![false; n * n];
        for i in 0..n {
            for k in 0..n {
                preceq[i * n + entries[i * n + k] as usize] = true;
            }
        }
        self.table = Some(Table { entries, preceq });
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    #[allow(clippy::len_without_is_empty)] // a monoid always has its identity
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    /// Index of an ideal in the deterministic ordering.
    pub fn index_of(&self, e: &Ideal) -> Option<usize> {
        self.index.get(e.apery()).copied()
    }

    /// Index of the identity element (always 0).
    pub fn identity_index(&self) -> usize {
        0
    }

    /// Index of the absorbing element, the naturals (always the last).
    pub fn naturals_index(&self) -> usize {
        self.len() - 1
    }

    fn table(&self) -> Result<&Table, Error> {
        self.table.as_ref().ok_or(Error::TableMissing)
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    /// Index of the sum of the ideals at `i` and `j`.
    pub fn add(&self, i: usize, j: usize) -> Result<usize, Error> {
        let t = self.table()?;
        Ok(t.entries[i * self.len() + j] as usize)
    }

    /// Whether ideal `i` is below ideal `j` in the algebraic preorder.
    pub fn preceq(&self, i: usize, j: usize) -> Result<bool, Error> {
        let t = self.table()?;
        Ok(t.preceq[i * self.len() + j])
    }

    /// Whether ideal `i` is contained in ideal `j`.
    pub fn includes(&self, i: usize, j: usize) -> bool {
        self.ideals[i]
            .apery()
            .iter()
            .zip(self.ideals[j].apery())
            .all(|(&wi, &wj)| wj <= wi)
    }

    /// Covering edges (lower, upper) of the chosen order.
    pub fn hasse(&self, order: Order) -> Result<Vec<(usize, usize)>, Error> {
        let n = self.len();
        match order {
            Order::Inclusion => Ok(poset::covers(n, |a, b| a != b && self.includes(a, b))),
            Order::Preceq => {
                let t = self.table()?;
                Ok(poset::covers(n, |a, b| a != b && t.preceq[a * n + b]))
            }
        }
    }

    /// Number of vertices in a longest strictly ascending chain.
    pub fn longest_chain(&self, order: Order) -> Result<usize, Error> {
        let n = self.len();
        match order {
            Order::Inclusion => Ok(poset::longest_chain_vertices(n, |a, b| {
                a != b && self.includes(a, b)
            })),
            Order::Preceq => {
                let t = self.table()?;
                Ok(poset::longest_chain_vertices(n, |a, b| {
                    a != b && t.preceq[a * n + b]
                }))
            }
        }
    }

    /// Exact width of the inclusion order: exhaustive search for small
    /// monoids, minimum chain cover beyond that.
    pub fn width_inclusion(&self) -> usize {
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.includes(a, b);
        if n <= 20 {
            poset::width_exhaustive(n, lt)
        } else {
            poset::width_by_chain_cover(n, lt)
        }
    }

    fn irreducible_flags(&self) -> Result<Vec<bool>, Error> {
        let t = self.table()?;
        let n = self.len();
        let mut irreducible = vec![true; n];
        irreducible[0] = false;
        for j in 1..n {
            for k in j..n {
                let sum = t.entries[j * n + k] as usize;
                if sum != j && sum != k {
                    irreducible[sum] = false;
                }
            }
        }
        Ok(irreducible)
    }

    /// Classifies every element by exhaustive search over the table.
    pub fn classify(&self) -> Result<Vec<Classification>, Error> {
        let t = self.table()?;
        let n = self.len();

        let mut irreducible = vec![true; n];
        let mut atom = vec![true; n];
        irreducible[0] = false;
        atom[0] = false;
        for j in 1..n {
            for k in j..n {
                let sum = t.entries[j * n + k] as usize;
                atom[sum] = false;
                if sum != j && sum != k {
                    irreducible[sum] = false;
                }
            }
        }

        let mut quark = vec![false; n];
        for i in 1..n {
            quark[i] = (1..n).all(|j| j == i || !t.preceq[j * n + i]);
        }

        // TODO: pack the preceq matrix into u64 rows; this cubic scan is the
        // bottleneck when monoids grow past ~2000 elements (genus 12 and up)
        let mut prime = vec![false; n];
        for i in 1..n {
            let mut ok = true;
            'outer: for x in 0..n {
                for y in x..n {
                    let sum = t.entries[x * n + y] as usize;
                    if t.preceq[i * n + sum] && !t.preceq[i * n + x] && !t.preceq[i * n + y] {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            prime[i] = ok;
        }

        Ok((0..n)
            .map(|i| Classification {
                irreducible: irreducible[i],
                atom: atom[i],
                quark: quark[i],
                prime: prime[i],
                idempotent: t.entries[i * n + i] as usize == i,
                reduction_number: self.reduction_number_of(i),
                nu: self.ideals[i].nu(),
            })
            .collect())
    }

    fn reduction_number_of(&self, i: usize) -> u64 {
        let t = self.table.as_ref().expect("table built");
        let n = self.len();
        let mut current = 0usize;
        let mut r = 0;
        loop {
            let next = t.entries[current * n + i] as usize;
            if next == current {
                return r;
            }
            current = next;
            r += 1;
        }
    }

    /// The idempotent elements; these are exactly the over-semigroups of the
    /// parent inside the monoid.
    pub fn idempotents(&self) -> Result<Vec<usize>, Error> {
        let t = self.table()?;
        let n = self.len();
        Ok((0..n)
            .filter(|&i| t.entries[i * n + i] as usize == i)
            .collect())
    }

    /// Counts quarks and matches them against the symmetric and
    /// pseudo-symmetric shapes.
    pub fn irreducibility_profile(
        &self,
        classifications: &[Classification],
    ) -> Result<QuarkProfile, Error> {
        if self.semigroup.is_naturals() {
            return Err(Error::EmptyForNaturals);
        }
        let quarks: Vec<usize> = (0..self.len())
            .filter(|&i| classifications[i].quark)
            .collect();
        let f = self.semigroup.frobenius() as u64;
        let frob_ideal = self.index_of(&self.semigroup.ideal(&[0, f]));
        match quarks.as_slice() {
            [q] if Some(*q) == frob_ideal => Ok(QuarkProfile::Symmetric { quark: *q }),
            [a, b] if f % 2 == 0 => {
                let half_ideal = self.index_of(&self.semigroup.ideal(&[0, f / 2]));
                let pair = (frob_ideal, half_ideal);
                if pair == (Some(*a), Some(*b)) {
                    Ok(QuarkProfile::PseudoSymmetric {
                        frobenius_quark: *a,
                        half_frobenius_quark: *b,
                    })
                } else if pair == (Some(*b), Some(*a)) {
                    Ok(QuarkProfile::PseudoSymmetric {
                        frobenius_quark: *b,
                        half_frobenius_quark: *a,
                    })
                } else {
                    Ok(QuarkProfile::NotIrreducible { quark_count: 2 })
                }
            }
            _ => Ok(QuarkProfile::NotIrreducible {
                quark_count: quarks.len(),
            }),
        }
    }

    /// Evaluates every cardinality bound together with the two equality
    /// characterizations.
    pub fn bounds(&self) -> BoundsReport {
        let s = &self.semigroup;
        let n = self.len() as u64;
        let g = s.genus();
        let m = s.multiplicity();
        let kunz = s.kunz();
        let ty = s.semigroup_type().ok().map(|t| t as u64);

        let mut checks = Vec::new();
        let mut push = |name, kind, value: u64, holds, attained, characterization| {
            checks.push(BoundCheck {
                name,
                kind,
                value,
                holds,
                attained,
                characterization,
            });
        };

        push(
            "lower_genus_plus_one",
            BoundKind::Lower,
            g + 1,
            g + 1 <= n,
            g + 1 == n,
            None,
        );
        let two_g = 1u64 << g;
        push(
            "upper_two_pow_genus",
            BoundKind::Upper,
            two_g,
            n <= two_g,
            n == two_g,
            None,
        );
        if let Some(t) = ty {
            let two_t = 1u64 << t;
            push(
                "lower_two_pow_type",
                BoundKind::Lower,
                two_t,
                two_t <= n,
                two_t == n,
                None,
            );
            // attained iff the gaps are {1..m-1} or {1..m-1} plus 2m-1
            let refined = two_g - (1u64 << (g - t)) + 1;
            let gaps = s.gaps();
            let head: Vec<u64> = (1..m).collect();
            let predicted = gaps == head
                || (gaps.len() == head.len() + 1
                    && gaps[..head.len()] == head[..]
                    && gaps[head.len()] == 2 * m - 1);
            let attained = n == refined;
            push(
                "upper_type_refined",
                BoundKind::Upper,
                refined,
                n <= refined,
                attained,
                Some(CharacterizationCheck {
                    predicted_attained: predicted,
                    consistent: predicted == attained,
                }),
            );
        }
        let improved = (1u64 << (m - 1)) + g + 1 - m;
        push(
            "lower_improved_multiplicity",
            BoundKind::Lower,
            improved,
            improved <= n,
            improved == n,
            None,
        );
        // attained iff the Kunz coordinates are non-increasing and spread <= 1
        let product: u64 = kunz.iter().map(|&k| k + 1).product();
        let predicted = kunz.windows(2).all(|w| w[0] >= w[1])
            && kunz
                .first()
                .map_or(true, |&k1| k1 - kunz[kunz.len() - 1] <= 1);
        let attained = n == product;
        push(
            "upper_kunz_product",
            BoundKind::Upper,
            product,
            n <= product,
            attained,
            Some(CharacterizationCheck {
                predicted_attained: predicted,
                consistent: predicted == attained,
            }),
        );

        let all_hold = checks
            .iter()
            .all(|c| c.holds && c.characterization.as_ref().map_or(true, |z| z.consistent));
        BoundsReport {
            cardinality: n,
            genus: g,
            multiplicity: m,
            semigroup_type: ty,
            checks,
            all_hold,
        }
    }

    /// All minimal factorizations of the ideal at `target` into irreducible
    /// elements. The identity has exactly the empty factorization.
    pub fn minimal_factorizations(&self, target: usize) -> Result<Factorizations, Error> {
        let t = self.table()?;
        if target == 0 {
            return Ok(Factorizations {
                target,
                factorizations: vec![Vec::new()],
                lengths: vec![0],
            });
        }
        let n = self.len();
        let irreducible = self.irreducible_flags()?;
        // summands of a factorization of T are themselves below T
        let candidates: Vec<usize> = (1..n)
            .filter(|&i| irreducible[i] && self.includes(i, target))
            .collect();

        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        self.search_factorizations(t, target, &candidates, 0, 0, &mut stack, &mut found);

        // keep only multisets with no proper sub-multiset among the results
        let minimal: Vec<Vec<usize>> = found
            .iter()
            .filter(|f| {
                !found
                    .iter()
                    .any(|other| other.len() < f.len() && is_submultiset(other, f))
            })
            .cloned()
            .collect();
        let mut factorizations = minimal;
        factorizations.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let mut lengths: Vec<usize> = factorizations.iter().map(|f| f.len()).collect();
        lengths.sort_unstable();
        lengths.dedup();
        Ok(Factorizations {
            target,
            factorizations,
            lengths,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn search_factorizations(
        &self,
        t: &Table,
        target: usize,
        candidates: &[usize],
        from: usize,
        current: usize,
        stack: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        let n = self.len();
        if current == target {
            found.push(stack.clone());
            return;
        }
        for pos in from..candidates.len() {
            let j = candidates[pos];
            let next = t.entries[current * n + j] as usize;
            // a summand that does not move the partial sum can be dropped,
            // so such a branch never yields a minimal factorization
            if next == current || !self.includes(next, target) {
                continue;
            }
            stack.push(j);
            self.search_factorizations(t, target, candidates, pos, next, stack, found);
            stack.pop();
        }
    }
}

fn is_submultiset(a: &[usize], b: &[usize]) -> bool {
    // both sorted ascending
    let mut it = b.iter();
    'outer: for &x in a {
        for &y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn gens_of(m: &ClassMonoid, i: usize) -> Vec<u64> {
        m.ideal(i).min_generators().to_vec()
    }

    #[test]
    fn cardinalities() {
        assert_eq!(ClassMonoid::enumerate(&ns(&[3, 5, 7])).len(), 6);
        assert_eq!(
            ClassMonoid::enumerate(&NumericalSemigroup::naturals()).len(),
            1
        );
        assert_eq!(ClassMonoid::enumerate(&ns(&[5, 6, 8, 9])).len(), 20);
        assert_eq!(ClassMonoid::enumerate(&ns(&[4, 6, 9])).len(), 17);
    }

    #[test]
    fn index_zero_is_identity_and_last_is_naturals() {
        let m = ClassMonoid::with_table(&ns(&[5, 6, 8, 9]));
        assert!(m.ideal(0).is_identity());
        assert!(m.ideal(m.naturals_index()).is_naturals());
        for j in 0..m.len() {
            assert_eq!(m.add(0, j).unwrap(), j);
            assert_eq!(m.add(m.naturals_index(), j).unwrap(), m.naturals_index());
        }
    }

    #[test]
    fn kunz_system_agrees_with_membership() {
        for s in [ns(&[3, 5, 7]), ns(&[4, 6, 9]), ns(&[5, 6, 8, 9])] {
            let sys = KunzSystem::of(&s);
            let sols = sys.enumerate_desc();
            for x in &sols {
                assert!(sys.is_solution(x));
            }
            // descending lexicographic order, first entry is the parent
            assert_eq!(sols[0], s.kunz());
            assert_eq!(*sols.last().unwrap(), vec![0; s.kunz().len()]);
            let mut sorted = sols.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(sols, sorted);
        }
    }

    #[test]
    fn table_row_example() {
        // the row of {0,2}+S in I_0(<3,5,7>), columns in the printed order
        let s = ns(&[3, 5, 7]);
        let m = ClassMonoid::with_table(&s);
        let by_apery = |ap: &[u64]| (0..m.len()).find(|&i| m.ideal(i).apery() == ap).unwrap();
        let row = by_apery(&[0, 7, 2]);
        let cols = [
            [0u64, 7, 5],
            [0, 4, 5],
            [0, 7, 2],
            [0, 1, 5],
            [0, 4, 2],
            [0, 1, 2],
        ];
        let want = [
            [0u64, 7, 2],
            [0, 4, 2],
            [0, 4, 2],
            [0, 1, 2],
            [0, 4, 2],
            [0, 1, 2],
        ];
        for (col, expect) in cols.iter().zip(&want) {
            let sum = m.add(row, by_apery(col)).unwrap();
            assert_eq!(m.ideal(sum).apery(), expect);
        }
    }

    #[test]
    fn hasse_inclusion_of_357() {
        let s = ns(&[3, 5, 7]);
        let m = ClassMonoid::with_table(&s);
        let edges = m.hasse(Order::Inclusion).unwrap();
        // minimal non-zero ideals: the covers of the identity
        let mut mins: Vec<Vec<u64>> = edges
            .iter()
            .filter(|&&(a, _)| a == 0)
            .map(|&(_, b)| gens_of(&m, b))
            .collect();
        mins.sort();
        assert_eq!(mins, vec![vec![0, 2], vec![0, 4]]);
        assert_eq!(m.longest_chain(Order::Inclusion).unwrap(), 4);
        assert_eq!(m.longest_chain(Order::Preceq).unwrap(), 4);
    }

    #[test]
    fn hasse_requires_table_for_preceq() {
        let m = ClassMonoid::enumerate(&ns(&[3, 5, 7]));
        assert!(matches!(m.hasse(Order::Preceq), Err(Error::TableMissing)));
        assert!(m.hasse(Order::Inclusion).is_ok());
    }

    #[test]
    fn widths() {
        assert_eq!(ClassMonoid::enumerate(&ns(&[3, 5])).width_inclusion(), 2);
        assert_eq!(ClassMonoid::enumerate(&ns(&[2, 7])).width_inclusion(), 1);
        assert_eq!(
            ClassMonoid::enumerate(&NumericalSemigroup::naturals()).width_inclusion(),
            1
        );
    }

    #[test]
    fn classification_of_5689() {
        let s = ns(&[5, 6, 8, 9]);
        let m = ClassMonoid::with_table(&s);
        let cls = m.classify().unwrap();
        let pick = |f: &dyn Fn(&Classification) -> bool| {
            let mut v: Vec<Vec<u64>> = (0..m.len())
                .filter(|&i| f(&cls[i]))
                .map(|i| gens_of(&m, i))
                .collect();
            v.sort();
            v
        };
        assert_eq!(
            pick(&|c| c.irreducible),
            vec![
                vec![0, 1],
                vec![0, 1, 3],
                vec![0, 2],
                vec![0, 3],
                vec![0, 3, 4],
                vec![0, 4],
                vec![0, 7],
            ]
        );
        assert_eq!(pick(&|c| c.atom), vec![vec![0, 3, 4]]);
        assert_eq!(
            pick(&|c| c.quark),
            vec![vec![0, 3], vec![0, 3, 4], vec![0, 4], vec![0, 7]]
        );
        assert_eq!(pick(&|c| c.prime), Vec::<Vec<u64>>::new());
    }

    #[test]
    fn idempotents_of_469() {
        let s = ns(&[4, 6, 9]);
        let m = ClassMonoid::with_table(&s);
        assert_eq!(m.idempotents().unwrap().len(), 12);
    }

    #[test]
    fn quark_profiles() {
        let s = ns(&[2, 21]);
        let m = ClassMonoid::with_table(&s);
        let cls = m.classify().unwrap();
        match m.irreducibility_profile(&cls).unwrap() {
            QuarkProfile::Symmetric { quark } => {
                assert_eq!(gens_of(&m, quark), vec![0, 19]);
            }
            other => panic!("expected symmetric profile, got {other:?}"),
        }

        let s = ns(&[2, 3]);
        let m = ClassMonoid::with_table(&s);
        let cls = m.classify().unwrap();
        assert!(matches!(
            m.irreducibility_profile(&cls).unwrap(),
            QuarkProfile::Symmetric { .. }
        ));

        let s = ns(&[3, 5, 7]);
        let m = ClassMonoid::with_table(&s);
        let cls = m.classify().unwrap();
        match m.irreducibility_profile(&cls).unwrap() {
            QuarkProfile::PseudoSymmetric {
                frobenius_quark,
                half_frobenius_quark,
            } => {
                assert_eq!(gens_of(&m, frobenius_quark), vec![0, 4]);
                assert_eq!(gens_of(&m, half_frobenius_quark), vec![0, 2]);
            }
            other => panic!("expected pseudo-symmetric profile, got {other:?}"),
        }

        let s = ns(&[5, 6, 8, 9]);
        let m = ClassMonoid::with_table(&s);
        let cls = m.classify().unwrap();
        assert_eq!(
            m.irreducibility_profile(&cls).unwrap(),
            QuarkProfile::NotIrreducible { quark_count: 4 }
        );
    }

    #[test]
    fn bounds_examples() {
        let m = ClassMonoid::enumerate(&ns(&[5, 6, 8, 9]));
        let report = m.bounds();
        assert!(report.all_hold);
        let product = report
            .checks
            .iter()
            .find(|c| c.name == "upper_kunz_product")
            .unwrap();
        assert_eq!(product.value, 24);
        assert!(!product.attained);

        let m = ClassMonoid::enumerate(&ns(&[3, 5, 7]));
        let product = m
            .bounds()
            .checks
            .iter()
            .find(|c| c.name == "upper_kunz_product")
            .cloned()
            .unwrap();
        assert_eq!(product.value, 6);
        assert!(product.attained);

        // S = {0} u (c + N) attains the power-of-type lower bound
        let m = ClassMonoid::enumerate(&ns(&[5, 6, 7, 8, 9]));
        let report = m.bounds();
        assert!(report.all_hold);
        assert_eq!(report.cardinality, 16);
        assert_eq!(report.semigroup_type, Some(4));
    }

    #[test]
    fn factorization_examples() {
        // non-unique minimal factorizations
        let s = ns(&[4, 6, 9]);
        let m = ClassMonoid::with_table(&s);
        let target = m.index_of(&s.ideal(&[0, 2, 5, 7])).unwrap();
        let f = m.minimal_factorizations(target).unwrap();
        let as_gens: Vec<Vec<Vec<u64>>> = f
            .factorizations
            .iter()
            .map(|fac| fac.iter().map(|&i| gens_of(&m, i)).collect())
            .collect();
        assert_eq!(as_gens.len(), 5);
        assert!(as_gens.contains(&vec![vec![0, 2], vec![0, 5]]));
        assert!(as_gens.contains(&vec![vec![0, 2, 5], vec![0, 2, 5]]));

        // minimal factorizations of different lengths
        let s = ns(&[5, 6, 8, 9]);
        let m = ClassMonoid::with_table(&s);
        let target = m.index_of(&s.ideal(&[0, 2, 3, 4])).unwrap();
        assert_eq!(
            m.minimal_factorizations(target).unwrap().lengths,
            vec![2, 3]
        );

        // a unique factorization
        let s = ns(&[5, 16, 17, 18, 19]);
        let m = ClassMonoid::with_table(&s);
        let target = m.index_of(&s.ideal(&[0, 1, 2])).unwrap();
        let f = m.minimal_factorizations(target).unwrap();
        assert_eq!(f.factorizations.len(), 1);
        let only: Vec<Vec<u64>> = f.factorizations[0]
            .iter()
            .map(|&i| gens_of(&m, i))
            .collect();
        assert_eq!(only, vec![vec![0, 1], vec![0, 1]]);

        // the identity factors as the empty sum
        let f = m.minimal_factorizations(0).unwrap();
        assert_eq!(f.lengths, vec![0]);
        assert_eq!(f.factorizations, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn naturals_monoid_is_trivial() {
        let m = ClassMonoid::with_table(&NumericalSemigroup::naturals());
        assert_eq!(m.len(), 1);
        assert_eq!(m.add(0, 0).unwrap(), 0);
        let cls = m.classify().unwrap();
        assert!(cls[0].idempotent && !cls[0].quark && !cls[0].irreducible);
        assert!(m.hasse(Order::Inclusion).unwrap().is_empty());
        assert!(matches!(
            m.irreducibility_profile(&cls),
            Err(Error::EmptyForNaturals)
        ));
    }
}
