//! Brute-force reference implementations used to validate the fast paths.
//!
//! Ideals are represented as membership bitmasks over the window [0, F(S)]
//! with an implicit full tail starting at the conductor; this loses nothing
//! because every normalized ideal contains the parent semigroup. Semigroup
//! membership here is recomputed by a naive sieve from the generators, so the
//! oracle shares no nontrivial code with the Apéry-based implementation.

use crate::error::Error;
use crate::semigroup::NumericalSemigroup;

/// Membership mask of S itself over [0, F(S)], built by naive expansion of
/// the generators rather than the Apéry criterion.
pub fn semigroup_mask(s: &NumericalSemigroup) -> u128 {
    let c = s.conductor();
    assert!(c < 128, "oracle window only supports conductors below 128");
    let mut mask: u128 = 1;
    for x in 1..c {
        for &g in s.min_generators() {
            if g <= x && mask >> (x - g) & 1 == 1 {
                mask |= 1 << x;
                break;
            }
        }
    }
    if c == 0 {
        0
    } else {
        mask
    }
}

fn window_mask(s: &NumericalSemigroup) -> u128 {
    let c = s.conductor();
    if c == 0 {
        0
    } else {
        (1u128 << c) - 1
    }
}

fn mask_member(s: &NumericalSemigroup, mask: u128, x: i64) -> bool {
    if x < 0 {
        return false;
    }
    let x = x as u64;
    x >= s.conductor() || mask >> x & 1 == 1
}

/// Oracle representation of a normalized ideal: a bitmask over [0, F(S)].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitsetIdeal {
    parent: NumericalSemigroup,
    mask: u128,
}

impl BitsetIdeal {
    /// Naive closure of ({0} u gens) + S inside the window: marks x + s for
    /// every generator x and every member s of S found by the sieve.
    pub fn generated_by(s: &NumericalSemigroup, gens: &[u64]) -> BitsetIdeal {
        let smask = semigroup_mask(s);
        let c = s.conductor();
        let mut mask = 0u128;
        let mut all = gens.to_vec();
        if !all.contains(&0) {
            all.push(0);
        }
        for &x in &all {
            for sv in 0..c {
                if mask_member(s, smask, sv as i64) && x + sv < c {
                    mask |= 1 << (x + sv);
                }
            }
        }
        BitsetIdeal {
            parent: s.clone(),
            mask: mask & window_mask(s),
        }
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn contains(&self, x: i64) -> bool {
        mask_member(&self.parent, self.mask, x)
    }

    /// Apéry tuple read directly off the mask (tail elements when a residue
    /// class has no member inside the window).
    pub fn apery(&self) -> Vec<u64> {
        let m = self.parent.multiplicity();
        let c = self.parent.conductor();
        (0..m)
            .map(|i| {
                let mut x = i;
                loop {
                    if x >= c || self.mask >> x & 1 == 1 {
                        return x;
                    }
                    x += m;
                }
            })
            .collect()
    }

    pub fn kunz(&self) -> Vec<u64> {
        let m = self.parent.multiplicity();
        let ap = self.apery();
        (1..ap.len()).map(|i| (ap[i] - i as u64) / m).collect()
    }
}

/// Minkowski sum of two oracle ideals, truncated back to the window. Exact
/// because sums landing beyond the Frobenius number are members anyway.
pub fn bitset_add(a: &BitsetIdeal, b: &BitsetIdeal) -> Result<BitsetIdeal, Error> {
    if a.parent != b.parent {
        return Err(Error::ParentMismatch);
    }
    let c = a.parent.conductor();
    let mut mask = 0u128;
    for x in 0..c {
        if a.mask >> x & 1 == 1 {
            mask |= b.mask << x;
        }
    }
    Ok(BitsetIdeal {
        parent: a.parent.clone(),
        mask: mask & window_mask(&a.parent),
    })
}

/// Reduction number by iterating the bitset sum until the mask stabilizes.
pub fn naive_reduction(e: &BitsetIdeal) -> u64 {
    let mut current = BitsetIdeal {
        parent: e.parent.clone(),
        mask: semigroup_mask(&e.parent),
    };
    let mut r = 0;
    loop {
        let next = bitset_add(&current, e).expect("same parent");
        if next.mask == current.mask {
            return r;
        }
        current = next;
        r += 1;
    }
}

/// The canonical ideal evaluated pointwise from its definition: bit x is set
/// iff F - x is not a member.
pub fn naive_canonical(s: &NumericalSemigroup) -> Result<BitsetIdeal, Error> {
    if s.is_naturals() {
        return Err(Error::EmptyForNaturals);
    }
    let smask = semigroup_mask(s);
    let f = s.frobenius();
    let mut mask = 0u128;
    for x in 0..=f {
        if !mask_member(s, smask, f - x) {
            mask |= 1 << x;
        }
    }
    Ok(BitsetIdeal {
        parent: s.clone(),
        mask,
    })
}

/// The gap poset of S with the induced order as an explicit matrix,
/// recomputed from the naive membership mask.
pub struct GapPoset {
    gaps: Vec<u64>,
    le: Vec<Vec<bool>>,
}

impl GapPoset {
    pub fn of(s: &NumericalSemigroup) -> GapPoset {
        let smask = semigroup_mask(s);
        let gaps = s.gaps().to_vec();
        let le = gaps
            .iter()
            .map(|&a| {
                gaps.iter()
                    .map(|&b| mask_member(s, smask, b as i64 - a as i64))
                    .collect()
            })
            .collect();
        GapPoset { gaps, le }
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    pub fn minimals(&self) -> Vec<u64> {
        (0..self.gaps.len())
            .filter(|&i| (0..self.gaps.len()).all(|j| j == i || !self.le[j][i]))
            .map(|i| self.gaps[i])
            .collect()
    }

    pub fn maximals(&self) -> Vec<u64> {
        (0..self.gaps.len())
            .filter(|&i| (0..self.gaps.len()).all(|j| j == i || !self.le[i][j]))
            .map(|i| self.gaps[i])
            .collect()
    }
}

/// An ideal produced by the antichain enumeration: its generating antichain
/// (with the 0 included) and the naive-closure bitmask.
#[derive(Debug, Clone)]
pub struct OracleIdeal {
    pub generators: Vec<u64>,
    pub bits: BitsetIdeal,
}

/// Enumerates every normalized ideal as ({0} u X) + S over all antichains X
/// of the gap poset, including the empty one.
pub fn enumerate_by_antichains(s: &NumericalSemigroup) -> Vec<OracleIdeal> {
    let poset = GapPoset::of(s);
    let n = poset.gaps.len();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        s: &NumericalSemigroup,
        poset: &GapPoset,
        next: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<OracleIdeal>,
    ) {
        if next == poset.gaps.len() {
            let mut generators = vec![0];
            generators.extend(chosen.iter().map(|&i| poset.gaps[i]));
            let bits = BitsetIdeal::generated_by(s, &generators);
            out.push(OracleIdeal { generators, bits });
            return;
        }
        // branch without the gap
        rec(s, poset, next + 1, chosen, out);
        // branch with it, provided it stays an antichain
        if chosen
            .iter()
            .all(|&i| !poset.le(i, next) && !poset.le(next, i))
        {
            chosen.push(next);
            rec(s, poset, next + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(s, &poset, 0, &mut chosen, &mut out);
    let _ = n;
    out
}
