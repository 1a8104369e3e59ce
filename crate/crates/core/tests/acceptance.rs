//! Acceptance gate: ten criteria, one PASS/FAIL line each, every one timed
//! against its bound. Exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use permeq::{
    b1_construct, b2_all_solutions, candidate_types, certify_a1, certify_a1_type, certify_a2_type,
    certify_a3_cyclic, conjugacy_transporter, cycle_type, d_range, enumerate_naive,
    enumerate_pruned, induced_index_permutation, parse_cycles, partitions, same_type,
    square_root_exists, square_roots_all, survey, write_survey, CycleType, Guards, Permutation,
    SurveyFormat, Verdict,
};
use rand::RngExt;

use common::{
    all_of_type, all_tables, comp, cycle_lengths, inv, oracle_d_range, oracle_partitions,
    oracle_solutions, random_perm, random_typed_perm, rng,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ncycle(n: usize) -> Permutation {
    Permutation::from_cycles(n, &[(1..=n).collect::<Vec<_>>()]).unwrap()
}

fn cyc(text: &str, n: usize) -> Permutation {
    parse_cycles(text, n).unwrap()
}

fn b3_reproduction() -> Outcome {
    let alpha = ncycle(6);
    let g = Guards::default();
    let expected: Vec<Permutation> = {
        let mut v = vec![
            Permutation::identity(6),
            cyc("(1,3,5)(2,6,4)", 6),
            cyc("(1,5,3)(2,4,6)", 6),
        ];
        v.sort();
        v
    };
    let naive = enumerate_naive(&alpha, 2, &g).map_err(|e| e.to_string())?;
    let pruned = enumerate_pruned(&alpha, &g).map_err(|e| e.to_string())?;
    let built = b2_all_solutions(&alpha).map_err(|e| e.to_string())?;
    for (name, set) in [("naive", &naive), ("pruned", &pruned), ("b2", &built)] {
        ensure(set.solutions() == expected.as_slice(), || {
            format!("{name} gave {:?}", set.solutions())
        })?;
    }
    ensure(oracle_solutions(&alpha) == expected, || {
        "scan of S_6 disagrees".into()
    })?;
    Ok("naive, pruned and the cyclic construction give {1, (1,3,5)(2,6,4), (1,5,3)(2,4,6)}".into())
}

fn b4_reproduction() -> Outcome {
    let alpha = cyc("(1,2,3,4,5,6)(7,8,9,10,11,12)", 12);
    let y1 = cyc("(1,3,5)(2,6,4)", 12);
    let y2 = cyc("(7,9,11)(8,12,10)", 12);
    let printed = [
        "(1,5,3)(2,4,6)",
        "(7,11,9)(8,10,12)",
        "(1,3,5)(2,6,4)(7,9,11)(8,12,10)",
        "(1,3,5)(2,6,4)(7,11,9)(8,10,12)",
        "(1,5,3)(2,4,6)(7,9,11)(8,12,10)",
        "(1,5,3)(2,4,6)(7,11,9)(8,10,12)",
    ];
    let set = enumerate_pruned(&alpha, &Guards::default()).map_err(|e| e.to_string())?;
    ensure(set.len() == 9, || format!("{} solutions", set.len()))?;
    let mut products = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            products.push(y1.power(i).compose(&y2.power(j)).unwrap());
        }
    }
    products.sort();
    ensure(set.solutions() == products.as_slice(), || {
        format!("solutions {:?} are not the y1^i y2^j", set.solutions())
    })?;
    for text in printed
        .iter()
        .chain(["(1,3,5)(2,6,4)", "(7,9,11)(8,12,10)"].iter())
    {
        ensure(set.contains(&cyc(text, 12)), || format!("missing {text}"))?;
    }
    ensure(y1.compose(&y2).unwrap() == y2.compose(&y1).unwrap(), || {
        "y1, y2 do not commute".into()
    })?;
    ensure(
        y1.power(3).is_identity() && y2.power(3).is_identity(),
        || "cubes are not 1".into(),
    )?;
    Ok("9 solutions, exactly y1^i∘y2^j for 0 <= i,j <= 2; y1∘y2 = y2∘y1, y1³ = y2³ = 1".into())
}

fn b2_at_twelve() -> Outcome {
    let alpha = ncycle(12);
    let set = enumerate_pruned(&alpha, &Guards::default()).map_err(|e| e.to_string())?;
    ensure(set.len() == 3, || format!("{} solutions", set.len()))?;
    let gen = set.iter().find(|y| !y.is_identity()).unwrap().clone();
    let mut powers: Vec<_> = (0..3).map(|i| gen.power(i)).collect();
    powers.sort();
    ensure(powers == set.solutions(), || {
        "not the powers of one element".into()
    })?;
    let built = b2_all_solutions(&alpha).map_err(|e| e.to_string())?;
    ensure(built.same_members(&set), || "construction disagrees".into())?;

    // Literal sweep over every permutation of type t_3 = 4.
    let ty = CycleType::from_partition(12, &[3, 3, 3, 3]).unwrap();
    ensure(candidate_types(&alpha).contains(&ty), || {
        "t_3 = 4 type was pruned".into()
    })?;
    let all = all_of_type(12, &[3, 3, 3, 3]);
    ensure(all.len() == 246400 && ty.class_size() == 246400, || {
        format!("class has {} members", all.len())
    })?;
    let a = alpha.table();
    let ai = inv(a);
    let hits: Vec<Permutation> = all
        .into_iter()
        .filter(|y| comp(&comp(a, y), &ai) == comp(y, y))
        .map(|y| Permutation::from_table(y).unwrap())
        .collect();
    ensure(
        hits.len() == 2 && hits.iter().all(|h| set.contains(h)),
        || format!("sweep found {hits:?}"),
    )?;
    Ok(format!(
        "3 solutions, powers of {gen}; literal sweep of 246400 type-t_3=4 candidates agrees"
    ))
}

fn soundness_sweep() -> Outcome {
    let g = Guards::default();
    let (mut types, mut certified, mut checked_naive) = (0, 0, 0);
    for n in 1..=9 {
        for parts in partitions(n) {
            types += 1;
            let ty = CycleType::from_partition(n, &parts).unwrap();
            let alpha = ty.representative();
            let pruned = enumerate_pruned(&alpha, &g).map_err(|e| e.to_string())?;
            if certify_a1(&alpha).verdict == Verdict::OnlyTrivial {
                certified += 1;
                ensure(
                    pruned.len() == 1 && pruned.solutions()[0].is_identity(),
                    || format!("{parts:?} certified but has {} solutions", pruned.len()),
                )?;
            }
            checked_naive += 1;
            let naive = enumerate_naive(&alpha, 2, &g).map_err(|e| e.to_string())?;
            ensure(naive.same_members(&pruned), || {
                format!("{parts:?}: naive != pruned")
            })?;
        }
    }
    ensure(types == 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30, || {
        format!("{types} types")
    })?;
    Ok(format!(
        "{types} types for n <= 9, {certified} certified by A1 and all have only y = 1; \
         pruned = naive on all {checked_naive} types"
    ))
}

fn a2_implies_a1() -> Outcome {
    let (mut total, mut a2) = (0, 0);
    for n in 1..=12 {
        for parts in partitions(n) {
            total += 1;
            let ty = CycleType::from_partition(n, &parts).unwrap();
            if certify_a2_type(&ty).verdict == Verdict::OnlyTrivial {
                a2 += 1;
                ensure(certify_a1_type(&ty).verdict == Verdict::OnlyTrivial, || {
                    format!("{parts:?}: A2 holds but A1 does not")
                })?;
            }
        }
    }
    Ok(format!(
        "{a2} of {total} types with n <= 12 pass A2, and all of them pass A1"
    ))
}

fn b1_validity() -> Outcome {
    let mut count = 0;
    let mut seen = Vec::new();
    for n in 1..=64usize {
        for p in (3..=n).filter(|&p| (2..p).all(|f| p % f != 0)) {
            if n % p != 0 || !((1u128 << (n / p)) - 1).is_multiple_of(p as u128) {
                continue;
            }
            seen.push((n, p));
            let inst = b1_construct(n, p).map_err(|e| format!("({n},{p}): {e}"))?;
            let (b, y) = (inst.beta.table(), inst.y.table());
            ensure(comp(b, y) == comp(&comp(y, y), b), || {
                format!("({n},{p}): equation fails")
            })?;
            ensure(cycle_lengths(&inst.beta) == vec![n], || {
                format!("({n},{p}): beta not an n-cycle")
            })?;
            ensure(cycle_lengths(&inst.y) == vec![p; n / p], || {
                format!("({n},{p}): y has type {:?}", cycle_lengths(&inst.y))
            })?;
            count += 1;
        }
    }
    for must in [(6, 3), (12, 3), (20, 5), (21, 7), (24, 3)] {
        ensure(seen.contains(&must), || format!("{must:?} not enumerated"))?;
    }
    Ok(format!(
        "{count} admissible (n, p) with n <= 64, every instance verified"
    ))
}

fn a3_spot_check() -> Outcome {
    let c = certify_a3_cyclic(165).map_err(|e| e.to_string())?;
    ensure(c.verdict == Verdict::OnlyTrivial, || {
        "165 not certified".into()
    })?;
    for n in [6, 20, 21] {
        let c = certify_a3_cyclic(n).map_err(|e| e.to_string())?;
        ensure(c.verdict == Verdict::Inconclusive, || {
            format!("{n} certified")
        })?;
    }
    Ok("165: OnlyTrivial; 6, 20, 21: Inconclusive".into())
}

fn quadratic_oracles() -> Outcome {
    let g = Guards::default();
    let mut sigmas = 0;
    for n in 1..=6 {
        let tables = all_tables(n);
        let mut roots: Vec<Vec<Permutation>> = vec![Vec::new(); tables.len()];
        let index = |t: &[usize]| tables.iter().position(|x| x.as_slice() == t).unwrap();
        for y in &tables {
            roots[index(&comp(y, y))].push(Permutation::from_table(y.clone()).unwrap());
        }
        for (t, expected) in tables.iter().zip(roots.iter_mut()) {
            expected.sort();
            let sigma = Permutation::from_table(t.clone()).unwrap();
            let got = square_roots_all(&sigma, &g).map_err(|e| e.to_string())?;
            ensure(got.solutions() == expected.as_slice(), || {
                format!("roots of {sigma}")
            })?;
            ensure(square_root_exists(&sigma) == !expected.is_empty(), || {
                format!("existence for {sigma}")
            })?;
            sigmas += 1;
        }
    }
    let mut r = rng(8);
    let mut pairs = 0;
    for n in 1..=7 {
        let reps: Vec<Permutation> = partitions(n)
            .iter()
            .map(|parts| {
                CycleType::from_partition(n, parts)
                    .unwrap()
                    .representative()
            })
            .collect();
        for a in &reps {
            for b in &reps {
                let target = b.conjugate(&random_perm(&mut r, n)).unwrap();
                let same = same_type(a, &target).unwrap();
                ensure(same == (cycle_lengths(a) == cycle_lengths(&target)), || {
                    "same_type".into()
                })?;
                match conjugacy_transporter(a, &target).map_err(|e| e.to_string())? {
                    Some(w) => ensure(same && a.conjugate(&w.tau).unwrap() == target, || {
                        format!("bad transporter {a} -> {target}")
                    })?,
                    None => ensure(!same, || format!("no transporter {a} -> {target}"))?,
                }
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{sigmas} square-root sets match brute force; {pairs} transporter pairs correct"
    ))
}

const CASES: usize = 500;

fn property_suites() -> Outcome {
    let g = Guards::default();
    let mut r = rng(2024);

    // Random alphas paired with one of their solutions, preferring non-trivial ones.
    let mut pool: Vec<(Permutation, Permutation)> = Vec::new();
    while pool.len() < CASES {
        let n = r.random_range(1..=9);
        let alpha = random_typed_perm(&mut r, n);
        let set = enumerate_pruned(&alpha, &g).map_err(|e| e.to_string())?;
        let ys: Vec<_> = set.iter().filter(|y| !y.is_identity()).cloned().collect();
        let y = if ys.is_empty() {
            set.solutions()[0].clone()
        } else {
            ys[r.random_range(0..ys.len())].clone()
        };
        pool.push((alpha, y));
    }
    let nontrivial = pool.iter().filter(|(_, y)| !y.is_identity()).count();

    // cycle mapping under conjugation
    for _ in 0..CASES {
        let n = r.random_range(1..=12);
        let (alpha, y) = (random_perm(&mut r, n), random_perm(&mut r, n));
        let z = y.conjugate(&alpha).unwrap();
        for c in y.cycles() {
            let img: Vec<usize> = c.points().iter().map(|&p| alpha.apply(p)).collect();
            for (i, &p) in img.iter().enumerate() {
                ensure(z.apply(p) == img[(i + 1) % img.len()], || {
                    format!("cycle {c} of {y} not carried to a cycle of {z}")
                })?;
            }
        }
    }

    // exponent identity
    for (alpha, y) in &pool {
        let k = r.random_range(0..=20i64);
        let i = r.random_range(0..=20i64);
        let exp = (1u128 << k) * i as u128;
        let left = alpha.power(k).compose(&y.power(i)).unwrap();
        let right = y.power_u128(exp).compose(&alpha.power(k)).unwrap();
        ensure(left == right, || {
            format!("exponent identity fails for {alpha}, {y}, k={k}, i={i}")
        })?;
    }

    // no even cycles; y and y² share a type
    for (alpha, y) in &pool {
        ensure(cycle_lengths(y).iter().all(|l| l % 2 == 1), || {
            format!("{y} has an even cycle")
        })?;
        ensure(cycle_type(y) == cycle_type(&y.power(2)), || {
            format!("{y} vs y² types ({alpha})")
        })?;
    }

    // range memberships
    for (alpha, y) in &pool {
        let f1 = d_range(alpha, 1).unwrap();
        let ty = cycle_type(y);
        for (len, count) in ty.lengths().filter(|&(l, _)| l >= 3) {
            ensure(f1.contains(len * count), || {
                format!("t_r r not in F_1 for {alpha}, {y}")
            })?;
            let induced = induced_index_permutation(alpha, y, len).map_err(|e| e.to_string())?;
            for c in induced.gamma.cycles() {
                let d = c.len();
                let fd = d_range(alpha, d).unwrap();
                ensure(fd.contains(d * len), || {
                    format!("d r not in F_d for {alpha}, {y}, d={d}")
                })?;
            }
        }
    }

    // conjugation equivariance of the solution sets
    for _ in 0..CASES {
        let n = r.random_range(1..=8);
        let alpha = random_typed_perm(&mut r, n);
        let tau = random_perm(&mut r, n);
        let base = enumerate_pruned(&alpha, &g).map_err(|e| e.to_string())?;
        let moved =
            enumerate_pruned(&alpha.conjugate(&tau).unwrap(), &g).map_err(|e| e.to_string())?;
        let mut expect: Vec<_> = base.iter().map(|y| y.conjugate(&tau).unwrap()).collect();
        expect.sort();
        ensure(expect == moved.solutions(), || {
            format!("equivariance fails for {alpha}, {tau}")
        })?;
    }

    // d-range oracle
    for _ in 0..CASES {
        let n = r.random_range(1..=16);
        let alpha = random_typed_perm(&mut r, n);
        let d = r.random_range(1..=n);
        let got = d_range(&alpha, d).unwrap().members();
        ensure(got == oracle_d_range(&cycle_lengths(&alpha), d), || {
            format!("F_{d} of {alpha}: {got:?}")
        })?;
    }

    Ok(format!(
        "6 suites x {CASES} cases, 0 failures ({nontrivial} of the sampled solutions non-trivial)"
    ))
}

fn determinism() -> Outcome {
    let g = Guards::default();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut sizes = Vec::new();
    for format in [SurveyFormat::Json, SurveyFormat::Csv] {
        let mut bytes = Vec::new();
        for workers in [1, 4] {
            let rows = survey(8, workers, &g).map_err(|e| e.to_string())?;
            let path = dir.path().join(format!("survey-{workers}.out"));
            write_survey(&rows, format, std::fs::File::create(&path).unwrap())
                .map_err(|e| e.to_string())?;
            bytes.push(std::fs::read(&path).unwrap());
        }
        ensure(bytes[0] == bytes[1], || {
            format!("{format:?} output differs across worker counts")
        })?;
        sizes.push(bytes[0].len());
    }
    ensure(partitions(8) == oracle_order(8), || {
        "partition order".into()
    })?;
    Ok(format!(
        "n = 8 survey identical with 1 and 4 workers ({} JSON bytes, {} CSV bytes)",
        sizes[0], sizes[1]
    ))
}

fn oracle_order(n: usize) -> Vec<Vec<usize>> {
    let mut all = oracle_partitions(n);
    all.sort_by(|a, b| b.cmp(a));
    all
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "cyclic n=6 solution set",
            Duration::from_secs(1),
            b3_reproduction,
        ),
        (
            "two 6-cycles: nine solutions",
            Duration::from_secs(10),
            b4_reproduction,
        ),
        (
            "12-cycle: three solutions",
            Duration::from_secs(30),
            b2_at_twelve,
        ),
        (
            "certifier soundness, n <= 9",
            Duration::from_secs(300),
            soundness_sweep,
        ),
        (
            "A2 implies A1, n <= 12",
            Duration::from_secs(60),
            a2_implies_a1,
        ),
        (
            "B1 instances, n <= 64",
            Duration::from_secs(10),
            b1_validity,
        ),
        (
            "cyclic certificates spot check",
            Duration::from_secs(1),
            a3_spot_check,
        ),
        (
            "square roots and transporters",
            Duration::from_secs(120),
            quadratic_oracles,
        ),
        ("property suites", Duration::from_secs(300), property_suites),
        ("survey determinism", Duration::from_secs(120), determinism),
    ];
    let mut failed = 0;
    for (i, (name, bound, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *bound => Err(format!("too slow ({detail})")),
            other => other,
        };
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {status}: {name} [{:.2}s, bound {}s] {detail}",
            i + 1,
            elapsed.as_secs_f64(),
            bound.as_secs()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
