//! Stable JSON documents for the command line surface. Field order follows
//! struct order and all values are integers, strings or booleans, so equal
//! inputs serialize to byte-identical output.

use serde::Serialize;

use crate::monoid::{BoundsReport, ClassMonoid, Classification, Factorizations};
use crate::semigroup::{NumericalSemigroup, Symmetry};

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupReport {
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub conductor: u64,
    pub genus: u64,
    pub semigroup_type: Option<usize>,
    pub gaps: Vec<u64>,
    pub apery: Vec<u64>,
    pub kunz: Vec<u64>,
    pub pseudo_frobenius: Vec<u64>,
    pub special_gaps: Vec<u64>,
    pub symmetry: Option<Symmetry>,
}

impl SemigroupReport {
    pub fn of(s: &NumericalSemigroup) -> SemigroupReport {
        SemigroupReport {
            generators: s.min_generators().to_vec(),
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension(),
            frobenius: s.frobenius(),
            conductor: s.conductor(),
            genus: s.genus(),
            semigroup_type: s.semigroup_type().ok(),
            gaps: s.gaps().to_vec(),
            apery: s.apery().to_vec(),
            kunz: s.kunz().to_vec(),
            pseudo_frobenius: s.pseudo_frobenius().unwrap_or_default(),
            special_gaps: s.special_gaps().unwrap_or_default(),
            symmetry: s.symmetry().ok(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealReport {
    pub index: usize,
    pub kunz: Vec<u64>,
    pub generators: Vec<u64>,
    pub apery: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealsReport {
    pub semigroup: SemigroupReport,
    pub count: usize,
    pub bounds: BoundsReport,
    pub ideals: Vec<IdealReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

impl IdealsReport {
    pub fn of(
        monoid: &ClassMonoid,
        classifications: Option<&[Classification]>,
        with_table: bool,
    ) -> IdealsReport {
        let ideals = monoid
            .ideals()
            .iter()
            .enumerate()
            .map(|(index, e)| IdealReport {
                index,
                kunz: e.kunz(),
                generators: e.min_generators().to_vec(),
                apery: e.apery().to_vec(),
                classification: classifications.map(|c| c[index]),
            })
            .collect();
        let table = with_table.then(|| {
            (0..monoid.len())
                .map(|i| {
                    (0..monoid.len())
                        .map(|j| monoid.add(i, j).expect("table built"))
                        .collect()
                })
                .collect()
        });
        IdealsReport {
            semigroup: SemigroupReport::of(monoid.semigroup()),
            count: monoid.len(),
            bounds: monoid.bounds(),
            ideals,
            table,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorizeReport {
    pub semigroup: SemigroupReport,
    pub ideal: IdealReport,
    pub minimal_factorizations: Vec<Vec<Vec<u64>>>,
    pub lengths: Vec<usize>,
}

impl FactorizeReport {
    pub fn of(monoid: &ClassMonoid, factorizations: &Factorizations) -> FactorizeReport {
        let target = monoid.ideal(factorizations.target);
        FactorizeReport {
            semigroup: SemigroupReport::of(monoid.semigroup()),
            ideal: IdealReport {
                index: factorizations.target,
                kunz: target.kunz(),
                generators: target.min_generators().to_vec(),
                apery: target.apery().to_vec(),
                classification: None,
            },
            minimal_factorizations: factorizations
                .factorizations
                .iter()
                .map(|f| {
                    f.iter()
                        .map(|&i| monoid.ideal(i).min_generators().to_vec())
                        .collect()
                })
                .collect(),
            lengths: factorizations.lengths.clone(),
        }
    }
}

/// Pretty JSON plus a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serializes");
    out.push('\n');
    out
}
