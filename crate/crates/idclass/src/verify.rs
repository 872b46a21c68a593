//! Batch verification: every structural fact the library relies on is
//! re-checked per semigroup against brute-force oracles and definitional
//! re-computations. A failure is data (a counterexample record), not a panic,
//! so the harness can report everything it finds.

use rayon::prelude::*;
use serde::Serialize;

use crate::monoid::{ClassMonoid, Order, QuarkProfile};
use crate::oracle;
use crate::semigroup::{enumerate_by_genus, NumericalSemigroup, Symmetry};

/// One failed check with a minimal counterexample record.
#[derive(Debug, Clone, Serialize)]
pub struct CheckFailure {
    pub generators: Vec<u64>,
    pub check: String,
    pub detail: String,
}

/// Verification outcome for a single semigroup.
#[derive(Debug, Clone)]
pub struct SemigroupVerification {
    pub generators: Vec<u64>,
    pub genus: u64,
    pub checks_run: u64,
    pub failures: Vec<CheckFailure>,
    pub improved_bound_attained: bool,
}

/// Aggregated report over all semigroups of genus at most `max_genus`.
/// Identical inputs produce byte-identical serialized reports regardless of
/// the number of worker threads.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub max_genus: u64,
    pub semigroup_count: u64,
    pub checks_run: u64,
    pub failure_count: u64,
    pub improved_bound_attainers: Vec<Attainer>,
    pub failures: Vec<CheckFailure>,
    pub passed: bool,
}

/// A semigroup whose class monoid is exactly as small as the multiplicity
/// lower bound allows.
#[derive(Debug, Clone, Serialize)]
pub struct Attainer {
    pub genus: u64,
    pub generators: Vec<u64>,
}

/// Runs the whole suite over every semigroup of genus at most `max_genus`,
/// distributing semigroups over `jobs` worker threads.
pub fn run_verification(max_genus: u64, jobs: usize) -> VerifyReport {
    let semigroups: Vec<NumericalSemigroup> = enumerate_by_genus(max_genus).collect();
    let results: Vec<SemigroupVerification> = if jobs <= 1 {
        semigroups.iter().map(verify_semigroup).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool");
        pool.install(|| semigroups.par_iter().map(verify_semigroup).collect())
    };

    let mut report = VerifyReport {
        max_genus,
        semigroup_count: results.len() as u64,
        checks_run: 0,
        failure_count: 0,
        improved_bound_attainers: Vec::new(),
        failures: Vec::new(),
        passed: true,
    };
    for r in results {
        report.checks_run += r.checks_run;
        if r.improved_bound_attained {
            report.improved_bound_attainers.push(Attainer {
                genus: r.genus,
                generators: r.generators.clone(),
            });
        }
        report.failures.extend(r.failures);
    }
    report.failure_count = report.failures.len() as u64;
    report.passed = report.failure_count == 0;
    report
}

struct Ctx {
    s: NumericalSemigroup,
    monoid: ClassMonoid,
    classifications: Vec<crate::monoid::Classification>,
    /// oracle masks aligned with the monoid's ideal indexing
    masks: Vec<oracle::BitsetIdeal>,
    /// oracle antichain generator sets aligned the same way
    oracle_gens: Vec<Vec<u64>>,
    inclusion: Vec<bool>,
    failures: Vec<CheckFailure>,
    checks_run: u64,
}

impl Ctx {
    fn run(&mut self, name: &str, outcome: Result<(), String>) {
        self.checks_run += 1;
        if let Err(detail) = outcome {
            self.failures.push(CheckFailure {
                generators: self.s.min_generators().to_vec(),
                check: name.to_string(),
                detail,
            });
        }
    }
}

/// Runs every check against one semigroup.
pub fn verify_semigroup(s: &NumericalSemigroup) -> SemigroupVerification {
    let monoid = ClassMonoid::with_table(s);
    let classifications = monoid.classify().expect("table built");
    let n = monoid.len();

    // align oracle ideals with the fast enumeration through Kunz tuples
    let oracle_ideals = oracle::enumerate_by_antichains(s);
    let mut masks: Vec<Option<oracle::BitsetIdeal>> = vec![None; n];
    let mut oracle_gens: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut unmatched = Vec::new();
    for oi in &oracle_ideals {
        match monoid.index_of(&s.ideal(&oi.generators)) {
            Some(idx) if masks[idx].is_none() => {
                masks[idx] = Some(oi.bits.clone());
                oracle_gens[idx] = oi.generators.clone();
            }
            _ => unmatched.push(oi.generators.clone()),
        }
    }

    let mut inclusion = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            inclusion[i * n + j] = monoid.includes(i, j);
        }
    }

    let mut ctx = Ctx {
        s: s.clone(),
        monoid,
        classifications,
        masks: Vec::new(),
        oracle_gens,
        inclusion,
        failures: Vec::new(),
        checks_run: 0,
    };

    ctx.run(
        "enumeration_matches_antichain_oracle",
        if oracle_ideals.len() == n && unmatched.is_empty() && masks.iter().all(|m| m.is_some()) {
            Ok(())
        } else {
            Err(format!(
                "oracle found {} ideals, fast path {}, unmatched {:?}",
                oracle_ideals.len(),
                n,
                unmatched
            ))
        },
    );
    if masks.iter().any(|m| m.is_none()) {
        // cannot run the mask-based cross checks; report what we have
        let improved = improved_attained(&ctx);
        return SemigroupVerification {
            generators: s.min_generators().to_vec(),
            genus: s.genus(),
            checks_run: ctx.checks_run,
            failures: ctx.failures,
            improved_bound_attained: improved,
        };
    }
    ctx.masks = masks.into_iter().map(|m| m.unwrap()).collect();

    ctx.run("semigroup_invariants", semigroup_invariants(&ctx));
    ctx.run(
        "induced_order_is_partial_order",
        induced_order_partial(&ctx),
    );
    ctx.run("pf_matches_raw_definition", pf_raw(&ctx));
    ctx.run("gap_poset_extremes_and_chains", gap_poset_extremes(&ctx));
    ctx.run("antichain_generators_match", antichain_generators(&ctx));
    ctx.run("addition_matches_bitset_oracle", addition_oracle(&ctx));
    ctx.run("reduction_matches_naive", reduction_naive(&ctx));
    ctx.run("canonical_ideal_consistent", canonical_consistent(&ctx));
    ctx.run("bounds_hold_with_characterizations", bounds_hold(&ctx));
    ctx.run("minimals_are_pf_ideals", minimals_are_pf(&ctx));
    ctx.run("maximals_have_shifted_apery", maximals_form(&ctx));
    ctx.run("naturals_covers_match_maximals", naturals_covers(&ctx));
    ctx.run("longest_chains_have_genus_plus_one", chains(&ctx));
    ctx.run("classification_implications", implications(&ctx));
    ctx.run(
        "two_element_ideals_irreducible",
        two_element_irreducible(&ctx),
    );
    ctx.run("minimal_ideals_are_quarks", minimal_ideals_quarks(&ctx));
    ctx.run(
        "idempotent_quarks_match_special_gaps",
        idempotent_quarks(&ctx),
    );
    ctx.run("idempotents_are_over_semigroups", idempotents_closed(&ctx));
    ctx.run("reduction_properties", reduction_properties(&ctx));
    ctx.run("quark_profile_matches_symmetry", profile_symmetry(&ctx));
    ctx.run(
        "quark_with_frobenius_is_frobenius_ideal",
        quark_frobenius(&ctx),
    );
    ctx.run("cyclic_iff_two_three", cyclic(&ctx));
    ctx.run("ideals_are_sums_of_irreducibles", irreducible_closure(&ctx));
    ctx.run("nonzero_ideals_contain_pf", contains_pf(&ctx));
    ctx.run("table_algebra", table_algebra(&ctx));
    ctx.run("lattice_ops_and_monotonicity", lattice_monotonicity(&ctx));
    ctx.run("non_unit_cancellative_witness", frobenius_witness(&ctx));
    ctx.run("width_bounds", width_bounds(&ctx));
    ctx.run("class_semigroup_partition_matches", class_partition(&ctx));
    if s.genus() <= 6 {
        ctx.run("symmetry_matches_maximality", symmetry_maximality(&ctx));
    }
    if s.genus() <= 4 {
        ctx.run(
            "integral_ideals_unit_cancellative",
            integral_cancellative(&ctx),
        );
    }
    ctx.run("symmetric_split", symmetric_split(&ctx));

    SemigroupVerification {
        generators: s.min_generators().to_vec(),
        genus: s.genus(),
        checks_run: ctx.checks_run,
        failures: std::mem::take(&mut ctx.failures),
        improved_bound_attained: improved_attained(&ctx),
    }
}

fn improved_attained(ctx: &Ctx) -> bool {
    let s = &ctx.s;
    let (m, g) = (s.multiplicity(), s.genus());
    ctx.monoid.len() as u64 == (1u64 << (m - 1)) + g + 1 - m
}

fn semigroup_invariants(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let m = s.multiplicity();
    let apery = s.apery();
    if apery[0] != 0 {
        return Err("apery[0] != 0".into());
    }
    for (i, &w) in apery.iter().enumerate() {
        if w % m != i as u64 {
            return Err(format!("apery[{i}] = {w} has the wrong residue"));
        }
    }
    if !s.is_naturals() {
        let max = *apery.iter().max().unwrap();
        if s.frobenius() != (max - m) as i64 {
            return Err("frobenius != max(apery) - m".into());
        }
    }
    if s.kunz().iter().sum::<u64>() != s.genus() {
        return Err("genus != sum of kunz coordinates".into());
    }
    // membership criterion vs the naive sieve
    let mask = oracle::semigroup_mask(s);
    for x in 0..(s.conductor() + 2 * m) as i64 {
        let naive = x as u64 >= s.conductor() || mask >> x & 1 == 1;
        if naive != s.contains(x) {
            return Err(format!("membership disagrees with the sieve at {x}"));
        }
    }
    Ok(())
}

fn induced_order_partial(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let hi = (s.conductor() + s.multiplicity()) as i64;
    let window: Vec<i64> = (-2..=hi).collect();
    for &a in &window {
        if !s.le(a, a) {
            return Err(format!("order not reflexive at {a}"));
        }
        for &b in &window {
            if a != b && s.le(a, b) && s.le(b, a) {
                return Err(format!("order not antisymmetric at ({a}, {b})"));
            }
            for &c in &window {
                if s.le(a, b) && s.le(b, c) && !s.le(a, c) {
                    return Err(format!("order not transitive at ({a}, {b}, {c})"));
                }
            }
        }
    }
    Ok(())
}

fn pf_raw(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() {
        return Ok(());
    }
    let f = s.frobenius();
    let mut raw = Vec::new();
    for cand in -f..=f {
        if s.contains(cand) {
            continue;
        }
        let ok = (1..=(f - cand).max(0))
            .filter(|&x| s.contains(x))
            .all(|x| s.contains(cand + x));
        if ok {
            raw.push(cand as u64);
        }
    }
    let fast = s.pseudo_frobenius().map_err(|e| e.to_string())?;
    if raw == fast {
        Ok(())
    } else {
        Err(format!(
            "raw definition {raw:?} vs maximals formula {fast:?}"
        ))
    }
}

fn gap_poset_extremes(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let poset = oracle::GapPoset::of(s);
    // the induced order on gaps must match the fast path pointwise
    let gaps = s.gaps();
    for (i, &a) in gaps.iter().enumerate() {
        for (j, &b) in gaps.iter().enumerate() {
            if poset.le(i, j) != s.le(a as i64, b as i64) {
                return Err(format!("gap order disagrees at ({a}, {b})"));
            }
        }
    }
    if s.is_naturals() {
        return Ok(());
    }
    let m = s.multiplicity();
    let expect_min: Vec<u64> = (1..m).collect();
    if poset.minimals() != expect_min {
        return Err(format!("gap minimals {:?} != 1..m-1", poset.minimals()));
    }
    let pf = s.pseudo_frobenius().unwrap();
    if poset.maximals() != pf {
        return Err(format!("gap maximals {:?} != PF {pf:?}", poset.maximals()));
    }
    // the chain partition is a width witness: m-1 chains covering the gaps
    let chains = s.gap_chains();
    if chains.len() as u64 != m - 1 {
        return Err("chain partition does not have m-1 chains".into());
    }
    let mut covered: Vec<u64> = chains.iter().flatten().copied().collect();
    covered.sort_unstable();
    if covered != gaps {
        return Err("chain partition does not cover the gaps exactly".into());
    }
    for chain in &chains {
        for pair in chain.windows(2) {
            if !s.le(pair[0] as i64, pair[1] as i64) {
                return Err(format!("{:?} is not a chain", chain));
            }
        }
    }
    Ok(())
}

fn antichain_generators(ctx: &Ctx) -> Result<(), String> {
    for (i, ideal) in ctx.monoid.ideals().iter().enumerate() {
        if ideal.min_generators() != ctx.oracle_gens[i] {
            return Err(format!(
                "minimal generators {:?} vs oracle antichain {:?}",
                ideal.min_generators(),
                ctx.oracle_gens[i]
            ));
        }
    }
    Ok(())
}

fn addition_oracle(ctx: &Ctx) -> Result<(), String> {
    let n = ctx.monoid.len();
    for i in 0..n {
        for j in i..n {
            let fast = ctx.monoid.add(i, j).unwrap();
            let slow = oracle::bitset_add(&ctx.masks[i], &ctx.masks[j]).unwrap();
            if ctx.monoid.ideal(fast).apery() != slow.apery() {
                return Err(format!(
                    "sum of {:?} and {:?}: fast {:?} vs oracle {:?}",
                    ctx.oracle_gens[i],
                    ctx.oracle_gens[j],
                    ctx.monoid.ideal(fast).apery(),
                    slow.apery()
                ));
            }
        }
    }
    Ok(())
}

fn reduction_naive(ctx: &Ctx) -> Result<(), String> {
    for (i, ideal) in ctx.monoid.ideals().iter().enumerate() {
        let fast = ideal.reduction_number();
        let tabled = ctx.classifications[i].reduction_number;
        let naive = oracle::naive_reduction(&ctx.masks[i]);
        if fast != naive || tabled != naive {
            return Err(format!(
                "reduction number of {:?}: apery {fast}, table {tabled}, oracle {naive}",
                ctx.oracle_gens[i]
            ));
        }
    }
    Ok(())
}

fn canonical_consistent(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() {
        return Ok(());
    }
    let fast = s.canonical_ideal().map_err(|e| e.to_string())?;
    let naive = oracle::naive_canonical(s).map_err(|e| e.to_string())?;
    if fast.apery() != naive.apery() {
        return Err(format!(
            "apery characterization {:?} vs pointwise definition {:?}",
            fast.apery(),
            naive.apery()
        ));
    }
    let f = s.frobenius() as u64;
    let gens: Vec<u64> = s
        .pseudo_frobenius()
        .unwrap()
        .iter()
        .map(|g| f - g)
        .collect();
    let from_pf = s.ideal(&gens);
    if fast != from_pf {
        return Err("canonical ideal differs from its pseudo-Frobenius generators".into());
    }
    Ok(())
}

fn bounds_hold(ctx: &Ctx) -> Result<(), String> {
    let report = ctx.monoid.bounds();
    if !report.all_hold {
        let bad: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.holds || c.characterization.as_ref().is_some_and(|z| !z.consistent))
            .map(|c| c.name)
            .collect();
        return Err(format!("violated: {bad:?}"));
    }
    // the kunz product never exceeds 2^genus
    let product: u64 = ctx.s.kunz().iter().map(|&k| k + 1).product();
    if product > 1 << ctx.s.genus() {
        return Err("kunz product exceeds 2^genus".into());
    }
    Ok(())
}

fn inclusion_minimals(ctx: &Ctx) -> Vec<usize> {
    let n = ctx.monoid.len();
    (1..n)
        .filter(|&i| (1..n).all(|j| j == i || !ctx.inclusion[j * n + i]))
        .collect()
}

fn inclusion_maximals(ctx: &Ctx) -> Vec<usize> {
    let n = ctx.monoid.len();
    let nat = ctx.monoid.naturals_index();
    (0..n)
        .filter(|&i| i != nat)
        .filter(|&i| (0..n).all(|j| j == i || j == nat || !ctx.inclusion[i * n + j]))
        .collect()
}

fn minimals_are_pf(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    // the identity is the unique global minimum and the naturals the unique
    // global maximum of the inclusion order
    let n = ctx.monoid.len();
    let nat = ctx.monoid.naturals_index();
    for i in 0..n {
        if !ctx.inclusion[i] || !ctx.inclusion[i * n + nat] {
            return Err(format!("ideal {i} escapes the [identity, naturals] span"));
        }
    }
    if s.is_naturals() {
        return Ok(());
    }
    let mins = inclusion_minimals(ctx);
    let pf = s.pseudo_frobenius().unwrap();
    if mins.len() != pf.len() {
        return Err(format!(
            "{} minimal ideals vs type {}",
            mins.len(),
            pf.len()
        ));
    }
    for &f in &pf {
        let idx = ctx.monoid.index_of(&s.ideal(&[0, f]));
        if idx.is_none() || !mins.contains(&idx.unwrap()) {
            return Err(format!("{{0,{f}}}+S is not among the minimal ideals"));
        }
    }
    Ok(())
}

fn maximals_form(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let m = s.multiplicity();
    let maxs = inclusion_maximals(ctx);
    if s.is_naturals() {
        return if maxs.is_empty() {
            Ok(())
        } else {
            Err("naturals should have no proper maximal ideals".into())
        };
    }
    if maxs.len() as u64 != m - 1 {
        return Err(format!("{} maximal ideals vs m-1 = {}", maxs.len(), m - 1));
    }
    for &i in &maxs {
        let apery = ctx.monoid.ideal(i).apery();
        let moved: Vec<usize> = (0..apery.len()).filter(|&r| apery[r] != r as u64).collect();
        let shape_ok = moved.len() == 1 && apery[moved[0]] == moved[0] as u64 + m;
        if !shape_ok {
            return Err(format!(
                "maximal ideal apery {apery:?} is not a one-step shift"
            ));
        }
    }
    Ok(())
}

fn naturals_covers(ctx: &Ctx) -> Result<(), String> {
    let covers = ctx.monoid.hasse(Order::Preceq).unwrap();
    let nat = ctx.monoid.naturals_index();
    let mut covered: Vec<usize> = covers
        .iter()
        .filter(|&&(_, b)| b == nat)
        .map(|&(a, _)| a)
        .collect();
    covered.sort_unstable();
    let expected = inclusion_maximals(ctx);
    if covered != expected {
        return Err(format!(
            "ideals covered by the naturals {covered:?} vs inclusion maximals {expected:?}"
        ));
    }
    let m = ctx.s.multiplicity();
    if !ctx.s.is_naturals() && covered.len() as u64 != m - 1 {
        return Err(format!("{} covers vs m-1 = {}", covered.len(), m - 1));
    }
    Ok(())
}

fn chains(ctx: &Ctx) -> Result<(), String> {
    let want = ctx.s.genus() as usize + 1;
    let inc = ctx.monoid.longest_chain(Order::Inclusion).unwrap();
    let pre = ctx.monoid.longest_chain(Order::Preceq).unwrap();
    if inc != want || pre != want {
        return Err(format!(
            "longest chains: inclusion {inc}, preceq {pre}, expected {want}"
        ));
    }
    Ok(())
}

fn implications(ctx: &Ctx) -> Result<(), String> {
    for (i, c) in ctx.classifications.iter().enumerate() {
        let ok = (!c.atom || c.quark)
            && (!c.quark || c.irreducible)
            && (!c.prime || c.irreducible)
            && (!(c.quark && !c.idempotent) || c.atom)
            && (c.idempotent == (c.reduction_number <= 1));
        if !ok {
            return Err(format!(
                "flag implications fail for {:?}",
                ctx.oracle_gens[i]
            ));
        }
    }
    Ok(())
}

fn two_element_irreducible(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    for &g in s.gaps() {
        let idx = ctx
            .monoid
            .index_of(&s.ideal(&[0, g]))
            .ok_or_else(|| format!("{{0,{g}}}+S missing from the enumeration"))?;
        if !ctx.classifications[idx].irreducible {
            return Err(format!("{{0,{g}}}+S is not irreducible"));
        }
    }
    let count = ctx.classifications.iter().filter(|c| c.irreducible).count();
    if (count as u64) < s.genus() {
        return Err(format!("{count} irreducibles < genus {}", s.genus()));
    }
    Ok(())
}

fn minimal_ideals_quarks(ctx: &Ctx) -> Result<(), String> {
    for i in inclusion_minimals(ctx) {
        if !ctx.classifications[i].quark {
            return Err(format!(
                "minimal ideal {:?} is not a quark",
                ctx.oracle_gens[i]
            ));
        }
    }
    Ok(())
}

fn idempotent_quarks(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() {
        return Ok(());
    }
    let mut found: Vec<usize> = (0..ctx.monoid.len())
        .filter(|&i| ctx.classifications[i].quark && ctx.classifications[i].idempotent)
        .collect();
    found.sort_unstable();
    let sg = s.special_gaps().unwrap();
    let mut expected: Vec<usize> = sg
        .iter()
        .map(|&f| ctx.monoid.index_of(&s.ideal(&[0, f])).unwrap())
        .collect();
    expected.sort_unstable();
    if found != expected {
        return Err(format!(
            "idempotent quarks {found:?} vs special-gap ideals {expected:?}"
        ));
    }
    // unitary extensions drop exactly one special gap each
    let ext = s.unitary_extensions().unwrap();
    if ext.len() != sg.len() {
        return Err("unitary extension count differs from special gaps".into());
    }
    for (t, &f) in ext.iter().zip(&sg) {
        let mut gaps = s.gaps().to_vec();
        gaps.retain(|&g| g != f);
        if t.gaps() != gaps {
            return Err(format!("extension for {f} has wrong gap set"));
        }
    }
    Ok(())
}

fn idempotents_closed(ctx: &Ctx) -> Result<(), String> {
    let idem = ctx.monoid.idempotents().unwrap();
    let hi = (2 * ctx.s.conductor() + 2) as i64;
    for &i in &idem {
        let e = ctx.monoid.ideal(i);
        for a in 0..=hi {
            if !e.contains(a) {
                continue;
            }
            for b in a..=hi {
                if e.contains(b) && a + b <= hi && !e.contains(a + b) {
                    return Err(format!(
                        "idempotent {:?} is not closed under addition at {a}+{b}",
                        ctx.oracle_gens[i]
                    ));
                }
            }
        }
    }
    for (i, c) in ctx.classifications.iter().enumerate() {
        if c.idempotent != idem.contains(&i) {
            return Err("idempotent flags disagree with the table diagonal".into());
        }
    }
    Ok(())
}

fn reduction_properties(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let m = s.multiplicity();
    let mut seen = vec![false; m as usize];
    for (i, c) in ctx.classifications.iter().enumerate() {
        let r = c.reduction_number;
        if r > m - 1 {
            return Err(format!("r({:?}) = {r} exceeds m-1", ctx.oracle_gens[i]));
        }
        seen[r as usize] = true;
        // nu(jE) > j for 1 <= j <= r(E)
        let mut acc = 0usize;
        for j in 1..=r {
            acc = ctx.monoid.add(acc, i).unwrap();
            if ctx.monoid.ideal(acc).nu() as u64 <= j {
                return Err(format!("nu({j}E) <= {j} for E = {:?}", ctx.oracle_gens[i]));
            }
        }
        // ideals generated by 0 and h gaps at most m satisfy r <= m - h
        let gens = ctx.monoid.ideal(i).min_generators();
        let h = gens.len() - 1;
        if i != 0 && gens[1..].iter().all(|&a| a <= m) && r > m - h as u64 {
            return Err(format!("r({gens:?}) = {r} exceeds m-h = {}", m - h as u64));
        }
    }
    if !seen[1..].iter().all(|&b| b) {
        return Err("some reduction number in 1..m-1 is never attained".into());
    }
    // two-generator formula
    for &g in s.gaps() {
        let idx = ctx.monoid.index_of(&s.ideal(&[0, g])).unwrap();
        let want = (0..).find(|k| s.contains(((k + 1) * g) as i64)).unwrap();
        if ctx.classifications[idx].reduction_number != want {
            return Err(format!("r({{0,{g}}}+S) != min k with (k+1)g in S"));
        }
    }
    // maximal elements: r = 1 when only residue 1 is shifted, else 2
    // (when the maximal element is the identity itself, as for gaps = {1},
    // its reduction number is 0 and the shift formula does not apply)
    for i in inclusion_maximals(ctx) {
        if i == 0 {
            continue;
        }
        let apery = ctx.monoid.ideal(i).apery();
        let moved = (1..apery.len())
            .find(|&r| apery[r] != r as u64)
            .ok_or("maximal ideal equals the naturals")?;
        let want = if moved == 1 { 1 } else { 2 };
        if ctx.classifications[i].reduction_number != want {
            return Err(format!(
                "maximal ideal with shifted residue {moved} has r = {} instead of {want}",
                ctx.classifications[i].reduction_number
            ));
        }
    }
    Ok(())
}

fn profile_symmetry(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() {
        return Ok(());
    }
    let profile = ctx
        .monoid
        .irreducibility_profile(&ctx.classifications)
        .unwrap();
    let symmetry = s.symmetry().unwrap();
    let quark_count = ctx.classifications.iter().filter(|c| c.quark).count();
    let consistent = match (&profile, symmetry) {
        (QuarkProfile::Symmetric { .. }, Symmetry::Symmetric) => quark_count == 1,
        (QuarkProfile::PseudoSymmetric { .. }, Symmetry::PseudoSymmetric) => quark_count == 2,
        (QuarkProfile::NotIrreducible { .. }, Symmetry::Neither) => quark_count > 2,
        _ => false,
    };
    if !consistent {
        return Err(format!(
            "profile {profile:?} vs symmetry {symmetry:?} with {quark_count} quarks"
        ));
    }
    if (quark_count <= 2) != symmetry.is_irreducible() {
        return Err("quark count <= 2 does not match irreducibility".into());
    }
    Ok(())
}

fn quark_frobenius(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() {
        return Ok(());
    }
    let f = s.frobenius();
    let frob_idx = ctx.monoid.index_of(&s.ideal(&[0, f as u64])).unwrap();
    for (i, c) in ctx.classifications.iter().enumerate() {
        if c.quark && ctx.monoid.ideal(i).contains(f) && i != frob_idx {
            return Err(format!(
                "quark {:?} contains the Frobenius number but is not {{0,F}}+S",
                ctx.oracle_gens[i]
            ));
        }
    }
    Ok(())
}

fn cyclic(ctx: &Ctx) -> Result<(), String> {
    let n = ctx.monoid.len();
    let mut cyclic = false;
    // a generator must be a non-unit; the trivial monoid is not cyclic here
    for i in 1..n {
        let mut orbit = vec![false; n];
        orbit[0] = true;
        let mut cur = 0usize;
        loop {
            let next = ctx.monoid.add(cur, i).unwrap();
            if orbit[next] {
                break;
            }
            orbit[next] = true;
            cur = next;
        }
        if orbit.iter().all(|&b| b) {
            cyclic = true;
            break;
        }
    }
    let is_two_three = ctx.s.gaps() == [1];
    if cyclic != is_two_three {
        return Err(format!("cyclic = {cyclic} but gaps = {:?}", ctx.s.gaps()));
    }
    Ok(())
}

fn irreducible_closure(ctx: &Ctx) -> Result<(), String> {
    let n = ctx.monoid.len();
    let irreducible: Vec<usize> = (0..n)
        .filter(|&i| ctx.classifications[i].irreducible)
        .collect();
    let mut reachable = vec![false; n];
    reachable[0] = true;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &j in &irreducible {
            let t = ctx.monoid.add(x, j).unwrap();
            if !reachable[t] {
                reachable[t] = true;
                frontier.push(t);
            }
        }
    }
    if let Some(i) = reachable.iter().position(|&b| !b) {
        return Err(format!(
            "{:?} is not a sum of irreducibles",
            ctx.oracle_gens[i]
        ));
    }
    Ok(())
}

fn contains_pf(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() {
        return Ok(());
    }
    let pf = s.pseudo_frobenius().unwrap();
    for i in 1..ctx.monoid.len() {
        let e = ctx.monoid.ideal(i);
        if !pf.iter().any(|&f| e.contains(f as i64)) {
            return Err(format!(
                "{:?} contains no pseudo-Frobenius number",
                ctx.oracle_gens[i]
            ));
        }
    }
    Ok(())
}

fn table_algebra(ctx: &Ctx) -> Result<(), String> {
    let n = ctx.monoid.len();
    let nat = ctx.monoid.naturals_index();
    for i in 0..n {
        if ctx.monoid.add(0, i).unwrap() != i {
            return Err("identity row is not the identity".into());
        }
        if ctx.monoid.add(nat, i).unwrap() != nat {
            return Err("naturals row is not absorbing".into());
        }
        for j in i..n {
            if ctx.monoid.add(i, j).unwrap() != ctx.monoid.add(j, i).unwrap() {
                return Err("addition is not commutative".into());
            }
            if i > 0 && j > 0 && ctx.monoid.add(i, j).unwrap() == 0 {
                return Err("a non-unit pair sums to the identity".into());
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            let ij = ctx.monoid.add(i, j).unwrap();
            for k in j..n {
                let jk = ctx.monoid.add(j, k).unwrap();
                if ctx.monoid.add(ij, k).unwrap() != ctx.monoid.add(i, jk).unwrap() {
                    return Err(format!("associativity fails at ({i}, {j}, {k})"));
                }
            }
        }
    }
    Ok(())
}

fn lattice_monotonicity(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let n = ctx.monoid.len();
    for i in 0..n {
        for j in i..n {
            let a = ctx.monoid.ideal(i);
            let b = ctx.monoid.ideal(j);
            let union = a.union(b).unwrap();
            let inter = a.intersection(b).unwrap();
            if s.is_ideal_apery(union.apery()) != Ok(true)
                || s.is_ideal_apery(inter.apery()) != Ok(true)
            {
                return Err("union or intersection is not a valid ideal".into());
            }
            let sum = ctx.monoid.add(i, j).unwrap();
            if !union.is_subset_of(ctx.monoid.ideal(sum)).unwrap() {
                return Err("union is not contained in the sum".into());
            }
        }
    }
    // monotonicity through table indices
    for i in 0..n {
        for ip in 0..n {
            if !ctx.inclusion[i * n + ip] {
                continue;
            }
            for j in 0..n {
                let a = ctx.monoid.add(i, j).unwrap();
                let b = ctx.monoid.add(ip, j).unwrap();
                if !ctx.inclusion[a * n + b] {
                    return Err(format!("monotonicity fails at ({i} <= {ip}) + {j}"));
                }
            }
        }
    }
    Ok(())
}

fn frobenius_witness(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() {
        return Ok(());
    }
    let i = ctx
        .monoid
        .index_of(&s.ideal(&[0, s.frobenius() as u64]))
        .unwrap();
    if ctx.monoid.add(i, i).unwrap() != i {
        return Err("{0,F}+S is not idempotent".into());
    }
    Ok(())
}

fn width_bounds(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let n = ctx.monoid.len();
    let width = ctx.monoid.width_inclusion();
    if n <= 20 {
        let lt = |a: usize, b: usize| a != b && ctx.inclusion[a * n + b];
        let by_cover = crate::poset::width_by_chain_cover(n, lt);
        if width != by_cover {
            return Err(format!("width routes disagree: {width} vs {by_cover}"));
        }
    }
    if !s.is_naturals() {
        let m = s.multiplicity();
        if (width as u64) < m - 1 {
            return Err(format!("width {width} below m-1 = {}", m - 1));
        }
        let g = s.genus();
        if g >= 2 {
            let pigeonhole = (n as u64 - 2).div_ceil(g - 1);
            if (width as u64) < pigeonhole {
                return Err(format!("width {width} below pigeonhole bound {pigeonhole}"));
            }
        }
    }
    Ok(())
}

fn class_partition(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let c = s.conductor();
    let parts = s.class_semigroup_partition();
    if parts.len() as u64 != c + 1 {
        return Err("partition size is not c + 1".into());
    }
    // the defining relation: x ~ y iff (-x + S) and (-y + S) agree on the naturals
    let hi = (s.frobenius() + 1 + c as i64).max(1);
    let tail_set: Vec<bool> = (0..=hi).map(|_| true).collect();
    let shifted = |x: u64| -> Vec<bool> { (0..=hi).map(|z| s.contains(x as i64 + z)).collect() };
    for x in 0..c {
        for y in (x + 1)..c {
            if shifted(x) == shifted(y) {
                return Err(format!("{x} and {y} should be in different classes"));
            }
        }
        if shifted(x) == tail_set {
            return Err(format!("{x} should not be in the tail class"));
        }
    }
    for x in c..c + 2 * s.multiplicity() {
        if shifted(x) != tail_set {
            return Err(format!("{x} should be in the tail class"));
        }
    }
    Ok(())
}

fn symmetry_maximality(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() {
        return Ok(());
    }
    let gaps = s.gaps();
    let f = s.frobenius() as u64;
    // maximal among semigroups avoiding F iff no proper gap subset containing F
    // is itself a valid gap set
    let g = gaps.len();
    let mut maximal = true;
    'subsets: for mask in 0..(1u32 << g) {
        let subset: Vec<u64> = (0..g)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| gaps[i])
            .collect();
        if subset.len() == g || !subset.contains(&f) {
            continue;
        }
        if NumericalSemigroup::from_gaps(&subset).is_some() {
            maximal = false;
            break 'subsets;
        }
    }
    let sym = s.symmetry().unwrap();
    let expected = if !maximal {
        Symmetry::Neither
    } else if f % 2 == 1 {
        Symmetry::Symmetric
    } else {
        Symmetry::PseudoSymmetric
    };
    if sym != expected {
        return Err(format!(
            "symmetry {sym:?} vs maximality expectation {expected:?}"
        ));
    }
    Ok(())
}

fn integral_cancellative(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    let c = s.conductor();
    let m = s.multiplicity();
    let window = (2 * c + m + 2) as usize;
    assert!(window < 128);
    let members: Vec<u64> = (0..=(c + m) as i64)
        .filter(|&x| s.contains(x))
        .map(|x| x as u64)
        .collect();
    let full: u128 = if window >= 127 { !0 } else { (1 << window) - 1 };
    let smask: u128 = {
        let mut acc = 0u128;
        for x in 0..window as i64 {
            if s.contains(x) {
                acc |= 1 << x;
            }
        }
        acc
    };
    // integral ideals X + S for non-empty X inside S
    let mut ideals: Vec<u128> = Vec::new();
    let k = members.len();
    for mask in 1u32..(1 << k) {
        let mut acc = 0u128;
        for (i, &x) in members.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc |= (smask << x) & full;
            }
        }
        if !ideals.contains(&acc) {
            ideals.push(acc);
        }
    }
    let madd = |a: u128, b: u128| {
        let mut acc = 0u128;
        for x in 0..window {
            if a >> x & 1 == 1 {
                acc |= (b << x) & full;
            }
        }
        acc
    };
    for &i in &ideals {
        for &j in &ideals {
            if madd(i, j) == i && j != smask {
                return Err("integral ideals are not unit-cancellative".into());
            }
        }
    }
    Ok(())
}

fn symmetric_split(ctx: &Ctx) -> Result<(), String> {
    let s = &ctx.s;
    if s.is_naturals() || s.symmetry() != Ok(Symmetry::Symmetric) || s.gaps() == [1] {
        return Ok(());
    }
    let f = s.frobenius() as u64;
    let gaps: Vec<u64> = s.gaps().iter().copied().filter(|&g| g != f).collect();
    let ext = NumericalSemigroup::from_gaps(&gaps).expect("symmetric extension");
    let sub = ClassMonoid::enumerate(&ext);
    if sub.len() + 1 != ctx.monoid.len() {
        return Err(format!(
            "|I_0(S)| = {} but |I_0(S u {{F}})| = {}",
            ctx.monoid.len(),
            sub.len()
        ));
    }
    // compare as sets of integers over the window of the bigger parent
    let snapshot = |e: &crate::ideal::Ideal| -> Vec<bool> {
        (0..s.conductor() as i64).map(|x| e.contains(x)).collect()
    };
    let mut big: Vec<Vec<bool>> = ctx.monoid.ideals()[1..].iter().map(snapshot).collect();
    let mut small: Vec<Vec<bool>> = sub.ideals().iter().map(snapshot).collect();
    big.sort_unstable();
    small.sort_unstable();
    if big != small {
        return Err("I_0(S) is not {S} plus the extension's ideals".into());
    }
    // sharpened upper bound for symmetric semigroups: the split turns the
    // Kunz product bound of the extension into 1 + k_f * prod_{i != f}(k_i+1),
    // attained exactly when the extension attains its own product bound
    let m = s.multiplicity();
    let fi = (f % m) as usize;
    let kunz = s.kunz();
    let product: u64 = kunz
        .iter()
        .enumerate()
        .filter(|&(i, _)| i + 1 != fi)
        .map(|(_, &ki)| ki + 1)
        .product();
    let sharpened = 1 + kunz[fi - 1] * product;
    let n = ctx.monoid.len() as u64;
    if n > sharpened {
        return Err(format!("sharpened bound {sharpened} exceeded by {n}"));
    }
    let ext_kunz = ext.kunz();
    let ext_attains = ext_kunz.windows(2).all(|w| w[0] >= w[1])
        && ext_kunz
            .first()
            .map_or(true, |&k1| k1 - ext_kunz[ext_kunz.len() - 1] <= 1);
    if (n == sharpened) != ext_attains {
        return Err(format!(
            "sharpened bound attained = {} but extension kunz {ext_kunz:?}",
            n == sharpened
        ));
    }
    Ok(())
}
