//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line; the test
//! fails if any criterion fails. Every comparison is exact integer equality
//! and every runtime budget below is a hard limit.
//!
//! Run with `cargo test -p rectkron --test acceptance -- --nocapture`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rectkron::stable::{count_commuting_derangements, KNOWN_ERRATA, PUBLISHED_TABLE};
use rectkron::symchar::{class_size, hook_dimension, mn_character};
use rectkron::verify::{self, check_e3, check_e4, check_e5, semigroup_checks, VerificationReport};
use rectkron::{
    derangement_count, lr, lr_rectangle, n2_closed_form, partitions_of, self_conjugate_count,
    stable_sign, stable_trivial, BigInt, Engine, EngineConfig, Partition, RectangularQuery,
};

const BUDGET_TABLE: Duration = Duration::from_secs(60);
const BUDGET_DERANGEMENTS: Duration = Duration::from_secs(10);
const BUDGET_STABILIZATION: Duration = Duration::from_secs(300);
const BUDGET_TRIPLE: Duration = Duration::from_secs(120);
const BUDGET_N2: Duration = Duration::from_secs(120);
const BUDGET_IDENTITIES: Duration = Duration::from_secs(300);
const BUDGET_CHARACTERS: Duration = Duration::from_secs(120);
const BUDGET_PROPERTIES: Duration = Duration::from_secs(300);

const PUBLISHED_TABLE_ENTRIES: usize = 28;
const PUBLISHED_D: [(usize, u64); 5] = [(2, 1), (3, 2), (4, 9), (5, 44), (6, 265)];
const SEMIGROUP_SEED: u64 = 42;
const SEMIGROUP_INSTANCES: usize = 100;
const SEMIGROUP_MAX_TOTAL: usize = 10;

type Outcome = Result<String, String>;

fn engine() -> Engine {
    Engine::new(EngineConfig::default())
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_passed(reports: &[VerificationReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(r) => Err(format!("{} {} lhs={:?} rhs={:?}", r.identity, r.instance, r.lhs, r.rhs)),
    }
}

/// Runs one criterion against its budget and prints its line.
fn criterion(id: u32, name: &str, budget: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(detail) if elapsed > budget => Err(format!("{detail}; over budget {budget:?}")),
        other => other,
    };
    let secs = elapsed.as_secs_f64();
    match &outcome {
        Ok(detail) => println!("PASS criterion {id} [{name}] {secs:.2}s: {detail}"),
        Err(why) => println!("FAIL criterion {id} [{name}] {secs:.2}s: {why}"),
    }
    outcome.is_ok()
}

// --- brute-force oracles ------------------------------------------------

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    Partition::from_unsorted(lens)
}

/// Permutations of `S_m` by cycle type, by walking all of `S_m`.
fn brute_class_sizes(m: usize) -> BTreeMap<Partition, u64> {
    let mut perm: Vec<usize> = (0..m).collect();
    let mut out = BTreeMap::new();
    loop {
        *out.entry(cycle_type(&perm)).or_insert(0) += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn brute_derangements(m: usize) -> u64 {
    let mut perm: Vec<usize> = (0..m).collect();
    let mut count = 0;
    loop {
        if perm.iter().enumerate().all(|(i, &x)| i != x) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    count
}

/// Character of the permutation module on row tabloids of shape `lambda` at
/// cycle type `mu`: ways to distribute the cycles of `mu` into rows with
/// row sums `lambda`.
fn tabloid_character(lambda: &Partition, mu: &Partition) -> i64 {
    fn go(cycles: &[usize], room: &mut Vec<usize>) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return i64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += go(rest, room);
                room[i] += c;
            }
        }
        total
    }
    go(mu.parts(), &mut lambda.parts().to_vec())
}

/// Irreducible characters of `S_m` from permutation modules alone: taking
/// shapes in decreasing lexicographic order, subtract from each module the
/// projections onto the irreducibles already found.
fn brute_characters(m: usize) -> BTreeMap<Partition, BTreeMap<Partition, i64>> {
    let sizes = brute_class_sizes(m);
    let order: i64 = sizes.values().sum::<u64>() as i64;
    let classes: Vec<&Partition> = sizes.keys().collect();
    let mut found: Vec<(Partition, Vec<i64>)> = Vec::new();
    for lambda in partitions_of(m) {
        let mut chi: Vec<i64> = classes.iter().map(|mu| tabloid_character(&lambda, mu)).collect();
        for (_, psi) in &found {
            let ip: i64 = classes
                .iter()
                .enumerate()
                .map(|(c, mu)| sizes[*mu] as i64 * chi[c] * psi[c])
                .sum::<i64>()
                / order;
            for c in 0..chi.len() {
                chi[c] -= ip * psi[c];
            }
        }
        found.push((lambda, chi));
    }
    found
        .into_iter()
        .map(|(l, chi)| (l, classes.iter().map(|mu| (*mu).clone()).zip(chi).collect()))
        .collect()
}

/// Partitions of `m` into distinct odd parts, all at least `lo`.
fn distinct_odd_at_least(m: usize, lo: usize) -> u64 {
    if m == 0 {
        return 1;
    }
    let mut total = 0;
    let mut part = if lo % 2 == 1 { lo } else { lo + 1 };
    while part <= m {
        total += distinct_odd_at_least(m - part, part + 2);
        part += 2;
    }
    total
}

/// Partitions of `m` into parts of size at least 2.
fn no_ones(m: usize) -> u64 {
    partitions_of(m).iter().filter(|r| r.parts().iter().all(|&x| x >= 2)).count() as u64
}

// --- criteria -----------------------------------------------------------

fn published_table(e: &Engine) -> Outcome {
    let rows = e.stable_table(6).map_err(|x| x.to_string())?;
    ensure(PUBLISHED_TABLE.len() == PUBLISHED_TABLE_ENTRIES, || {
        format!("{} published entries", PUBLISHED_TABLE.len())
    })?;
    let computed: BTreeMap<Partition, BigInt> =
        rows.iter().flat_map(|r| r.values.iter().cloned()).collect();
    let expected_errata: BTreeMap<Partition, (u64, u64)> =
        [(p(&[1, 1, 1]), (0, 1)), (p(&[6]), (3, 4))].into_iter().collect();
    for &(parts, printed) in PUBLISHED_TABLE {
        let rho = p(parts);
        let got = computed.get(&rho).ok_or_else(|| format!("no value for {rho:?}"))?;
        let want = match expected_errata.get(&rho) {
            Some(&(pub_v, comp)) => {
                ensure(printed == pub_v, || format!("{rho:?} printed as {printed}"))?;
                comp
            }
            None => printed,
        };
        ensure(*got == big(want), || format!("{rho:?}: computed {got}, expected {want}"))?;
    }
    for row in &rows {
        ensure(row.consistency_ok, || format!("m={}: sum k*dim != D_m", row.m))?;
        let mut weighted = BigInt::from(0);
        for (rho, k) in &row.values {
            weighted += k * e.dim_irrep(rho).map_err(|x| x.to_string())?;
        }
        ensure(weighted == row.derangement_total, || format!("m={}: accounting", row.m))?;
    }
    let diff = e.published_diff(&rows).map_err(|x| x.to_string())?;
    let flagged: BTreeSet<Partition> = diff.iter().map(|d| d.rho.clone()).collect();
    ensure(flagged == expected_errata.keys().cloned().collect(), || {
        format!("flagged {flagged:?}")
    })?;
    ensure(KNOWN_ERRATA.len() == 2, || "errata list".into())?;
    for d in &diff {
        ensure(d.expected, || format!("{:?} not marked as known", d.rho))?;
        let text = d.evidence.join("\n");
        for needle in ["dimension count", "Pieri inversion", "partitions of"] {
            ensure(text.contains(needle), || format!("{:?} evidence lacks {needle:?}", d.rho))?;
        }
    }
    let six = diff.iter().find(|d| d.rho == p(&[6])).unwrap();
    ensure(six.evidence.iter().any(|s| s.contains("orbit count")), || "orbit evidence".into())?;
    // oracles behind the evidence: D_m accounting pins k, the counts agree
    ensure(stable_sign(3, 3) == 1 && no_ones(6) == 4 && stable_trivial(6, 6) == 4, || {
        "partition counts".into()
    })?;
    Ok(format!(
        "{PUBLISHED_TABLE_ENTRIES} entries; (1,1,1) -> 1 and (6) -> 4 flagged with evidence; D_m accounting exact for m <= 6"
    ))
}

fn derangements() -> Outcome {
    for (m, want) in PUBLISHED_D {
        let got: BigInt = derangement_count(m).map_err(|x| x.to_string())?;
        ensure(got == big(want), || format!("D_{m} = {got}, expected {want}"))?;
    }
    for m in 0..=8 {
        let got: BigInt = derangement_count(m).map_err(|x| x.to_string())?;
        let brute = brute_derangements(m);
        let identity: Vec<usize> = (0..m).collect();
        ensure(got == big(brute), || format!("D_{m} = {got}, brute force {brute}"))?;
        ensure(count_commuting_derangements(&identity) == brute, || {
            format!("library enumeration disagrees at m={m}")
        })?;
    }
    Ok("D_2..D_6 = 1,2,9,44,265; brute force agrees for m <= 8".into())
}

fn stabilization(e: &Engine) -> Outcome {
    let mut sequences = 0;
    let mut max_dn = 0;
    for m in 0..=4 {
        for rho in partitions_of(m) {
            let threshold = rho.size() + rho.part(0);
            for n in [2, 3] {
                let limit = e.sl_invariant_dim(&rho, n).map_err(|x| x.to_string())?;
                let mut prev: Option<BigInt> = None;
                let mut reached = false;
                for d in 1..=6 {
                    let Ok(q) = RectangularQuery::new(rho.clone(), d, n) else {
                        continue;
                    };
                    max_dn = max_dn.max(d * n);
                    let v = e.rectangular_kron(&q).map_err(|x| x.to_string())?;
                    if let Some(prev) = &prev {
                        ensure(&v >= prev, || format!("rho={rho:?} n={n}: decreases at d={d}"))?;
                    }
                    if 2 * d >= threshold {
                        reached = true;
                        ensure(v == limit, || {
                            format!("rho={rho:?} n={n} d={d}: {v}, limit {limit}")
                        })?;
                    }
                    prev = Some(v);
                }
                ensure(reached, || format!("rho={rho:?} n={n}: threshold not reached"))?;
                let report = verify::check_stabilization(e, &rho, n, 6).map_err(|x| x.to_string())?;
                all_passed(&[report])?;
                sequences += 1;
            }
        }
    }
    ensure(max_dn == 18, || format!("largest table S_{max_dn}"))?;
    Ok(format!("{sequences} sequences, tables up to S_{max_dn}"))
}

fn triple_agreement(e: &Engine) -> Outcome {
    let mut count = 0;
    for m in 0..=6 {
        for rho in partitions_of(m) {
            let fpf = e.fpf_multiplicity(&rho).map_err(|x| x.to_string())?;
            let at_m = e.sl_invariant_dim(&rho, m.max(1)).map_err(|x| x.to_string())?;
            let at_next = e.sl_invariant_dim(&rho, m + 1).map_err(|x| x.to_string())?;
            ensure(fpf == at_m && at_m == at_next, || {
                format!("rho={rho:?}: fpf {fpf}, sl(m) {at_m}, sl(m+1) {at_next}")
            })?;
            count += 1;
        }
        if m >= 1 {
            let row = e.fpf_multiplicity(&Partition::row(m)).map_err(|x| x.to_string())?;
            let col = e.fpf_multiplicity(&Partition::column(m)).map_err(|x| x.to_string())?;
            for n in [m, m + 1] {
                ensure(row == big(stable_trivial(m, n)) && row == big(no_ones(m)), || {
                    format!("({m}): {row} vs count {}", stable_trivial(m, n))
                })?;
                ensure(col == big(stable_sign(m, n)) && col == big(distinct_odd_at_least(m, 3)), || {
                    format!("(1^{m}): {col} vs count {}", stable_sign(m, n))
                })?;
            }
        }
    }
    Ok(format!("{count} shapes; (m) and (1^m) match the partition counts"))
}

/// The printed form of the n = 2 rule: a single even row or three odd parts.
fn n2_as_printed(rho: &Partition) -> u64 {
    let single_even = rho.len() == 1 && rho.part(0).is_multiple_of(2);
    let three_odd = rho.len() == 3 && rho.parts().iter().all(|x| x % 2 == 1);
    u64::from(single_even || three_odd)
}

fn n2(e: &Engine) -> Outcome {
    let mut instances = 0;
    let mut printed_wrong = BTreeSet::new();
    for m in 0..=6 {
        for rho in partitions_of(m) {
            for d in 1..=6usize {
                if 2 * d < rho.size() + rho.part(0) {
                    continue;
                }
                let q = RectangularQuery::new(rho.clone(), d, 2).map_err(|x| x.to_string())?;
                let v = e.rectangular_kron(&q).map_err(|x| x.to_string())?;
                ensure(v == big(n2_closed_form(&rho)), || {
                    format!("rho={rho:?} d={d}: {v} vs closed form {}", n2_closed_form(&rho))
                })?;
                if v != big(n2_as_printed(&rho)) {
                    printed_wrong.insert(rho.clone());
                }
                instances += 1;
            }
        }
    }
    let known: BTreeSet<Partition> =
        [p(&[]), p(&[2, 2]), p(&[4, 2]), p(&[2, 2, 2])].into_iter().collect();
    ensure(printed_wrong == known, || format!("printed rule fails at {printed_wrong:?}"))?;
    Ok(format!(
        "{instances} instances; the single-even-row wording misses {printed_wrong:?}"
    ))
}

fn identities(e: &Engine) -> Outcome {
    let (mut n3, mut n4, mut n5) = (0, 0, 0);
    for m in 0..=4 {
        for theta in partitions_of(m) {
            for d in 1..=12usize {
                for n in 1..=12 / d {
                    if d * n >= m {
                        all_passed(&[check_e3(e, &theta, d, n).map_err(|x| x.to_string())?])?;
                        all_passed(&[check_e4(e, &theta, d, n).map_err(|x| x.to_string())?])?;
                        n3 += 1;
                        n4 += 1;
                    }
                    if m <= d && d * n >= m + theta.part(0) {
                        all_passed(&[check_e5(e, &theta, d, n).map_err(|x| x.to_string())?])?;
                        n5 += 1;
                    }
                }
            }
        }
    }
    let mut lr_inputs = 0;
    for d in 1..=9usize {
        for n in 1..=9 / d {
            let rect = Partition::rectangle(d, n);
            for a in 0..=d * n {
                for alpha in partitions_of(a) {
                    for beta in partitions_of(d * n - a) {
                        let general = lr(&rect, &alpha, &beta);
                        let closed = lr_rectangle(d, n, &alpha, &beta);
                        ensure(general == closed, || {
                            format!("c^({d}^{n})_{{{alpha:?},{beta:?}}}: {general} vs {closed}")
                        })?;
                        lr_inputs += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "e3 {n3}, e4 {n4}, e5 {n5} instances; rectangle rule on {lr_inputs} inputs with dn <= 9"
    ))
}

fn characters(e: &Engine) -> Outcome {
    let reports = verify::character_checks(e, 10).map_err(|x| x.to_string())?;
    all_passed(&reports)?;
    let mut dims = 0;
    for m in 11..=12 {
        let table = e.character_table(m).map_err(|x| x.to_string())?;
        for lambda in table.irreps() {
            let by_char = table.dim(lambda).map_err(|x| x.to_string())?;
            let by_hook: BigInt = hook_dimension(lambda).map_err(|x| x.to_string())?;
            ensure(*by_char == by_hook, || format!("dim {lambda:?}: {by_char} vs {by_hook}"))?;
            dims += 1;
        }
    }
    for m in 0..=5 {
        let brute = brute_characters(m);
        let sizes = brute_class_sizes(m);
        let table = e.character_table(m).map_err(|x| x.to_string())?;
        for class in table.classes() {
            let want = big(sizes[&class.cycle_type]);
            ensure(class.class_size == want, || format!("|{:?}|", class.cycle_type))?;
            let formula: BigInt = class_size(&class.cycle_type).map_err(|x| x.to_string())?;
            ensure(formula == want, || format!("class size formula at {:?}", class.cycle_type))?;
        }
        for lambda in table.irreps() {
            for class in table.classes() {
                let mu = &class.cycle_type;
                let got = table.value(lambda, mu).map_err(|x| x.to_string())?;
                let want = BigInt::from(brute[lambda][mu]);
                ensure(*got == want, || format!("chi_{lambda:?}({mu:?}) = {got}, oracle {want}"))?;
                let direct: BigInt = mn_character(lambda, mu).map_err(|x| x.to_string())?;
                ensure(direct == want, || format!("direct chi_{lambda:?}({mu:?})"))?;
            }
        }
    }
    Ok(format!(
        "orthogonality m <= 10; {dims} extra hook dimensions at m = 11, 12; oracle agrees for m <= 5"
    ))
}

fn properties(e: &Engine) -> Outcome {
    let k = |a: &Partition, b: &Partition, c: &Partition| e.kronecker(a, b, c).map_err(|x| x.to_string());
    let mut triples = 0;
    for m in 0..=6 {
        let parts = partitions_of(m);
        for l in &parts {
            for mu in &parts {
                for nu in &parts {
                    let v = k(l, mu, nu)?;
                    if m <= 5 {
                        for (a, b, c) in [(l, nu, mu), (mu, l, nu), (mu, nu, l), (nu, l, mu), (nu, mu, l)] {
                            ensure(k(a, b, c)? == v, || format!("symmetry at {l:?},{mu:?},{nu:?}"))?;
                        }
                        ensure(k(&l.conjugate(), &mu.conjugate(), nu)? == v, || {
                            format!("conjugation at {l:?},{mu:?},{nu:?}")
                        })?;
                        ensure(k(&l.conjugate(), mu, &nu.conjugate())? == v, || {
                            format!("conjugation at {l:?},{mu:?},{nu:?}")
                        })?;
                    }
                    if v != BigInt::from(0) {
                        ensure(m - nu.part(0) <= (m - l.part(0)) + (m - mu.part(0)), || {
                            format!("bound violated at {l:?},{mu:?},{nu:?}")
                        })?;
                    }
                    triples += 1;
                }
            }
        }
    }
    let reports = semigroup_checks(e, SEMIGROUP_MAX_TOTAL, SEMIGROUP_INSTANCES, SEMIGROUP_SEED)
        .map_err(|x| x.to_string())?;
    ensure(reports.len() == SEMIGROUP_INSTANCES, || format!("{} instances", reports.len()))?;
    all_passed(&reports)?;
    let pinned = [1u64, 1, 0, 1, 1, 1, 1, 1];
    for (m, &want) in pinned.iter().enumerate() {
        let col = Partition::column(m);
        let mut sum = BigInt::from(0);
        for l in partitions_of(m) {
            sum += k(&l, &l, &col)?;
        }
        let sc = self_conjugate_count(m);
        ensure(sum == big(sc) && sc == want && distinct_odd_at_least(m, 1) == want, || {
            format!("m={m}: sum {sum}, self-conjugate {sc}, pinned {want}")
        })?;
    }
    Ok(format!(
        "{triples} triples; {SEMIGROUP_INSTANCES} semigroup instances (seed {SEMIGROUP_SEED}); p_odd^0 for m <= 7"
    ))
}

#[test]
fn acceptance() {
    let e = engine();
    let results = [
        criterion(1, "published table", BUDGET_TABLE, || published_table(&engine())),
        criterion(2, "derangements", BUDGET_DERANGEMENTS, derangements),
        criterion(3, "stabilization", BUDGET_STABILIZATION, || stabilization(&e)),
        criterion(4, "triple agreement", BUDGET_TRIPLE, || triple_agreement(&engine())),
        criterion(5, "n = 2 closed form", BUDGET_N2, || n2(&e)),
        criterion(6, "identity suite", BUDGET_IDENTITIES, || identities(&e)),
        criterion(7, "character engine", BUDGET_CHARACTERS, || characters(&engine())),
        criterion(8, "property suite", BUDGET_PROPERTIES, || properties(&e)),
    ];
    let failed: Vec<usize> = (1..=results.len()).filter(|&i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
