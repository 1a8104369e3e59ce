//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use permeq::{CycleType, Permutation};
use rand::seq::SliceRandom;
use rand::RngExt;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut table: Vec<usize> = (0..n).collect();
    table.shuffle(rng);
    Permutation::from_table(table).unwrap()
}

/// A random permutation with a small, structured cycle type.
pub fn random_typed_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut parts = Vec::new();
    let mut rest = n;
    while rest > 0 {
        let len = rng.random_range(1..=rest);
        parts.push(len);
        rest -= len;
    }
    let ty = CycleType::from_partition(n, &parts).unwrap();
    let tau = random_perm(rng, n);
    ty.representative().conjugate(&tau).unwrap()
}

/// Plain composition from image tables, `(a ∘ b)(x) = a(b(x))`.
pub fn comp(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inv(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

/// Every permutation of `{0..n-1}` as an image table, by Heap's algorithm.
pub fn all_tables(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Solutions of `alpha ∘ y ∘ alpha⁻¹ = y²` by scanning all of `S_n`.
pub fn oracle_solutions(alpha: &Permutation) -> Vec<Permutation> {
    let a = alpha.table();
    let ai = inv(a);
    let mut out: Vec<Permutation> = all_tables(alpha.degree())
        .into_iter()
        .filter(|y| comp(&comp(a, y), &ai) == comp(y, y))
        .map(|y| Permutation::from_table(y).unwrap())
        .collect();
    out.sort();
    out
}

/// Every permutation whose cycle lengths are `parts`, built cycle by cycle
/// with the smallest free point leading each cycle.
pub fn all_of_type(n: usize, parts: &[usize]) -> Vec<Vec<usize>> {
    fn go(
        n: usize,
        parts: &[usize],
        table: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(start) = (0..n).find(|&i| !used[i]) else {
            out.push(table.clone());
            return;
        };
        // distinct lengths are tried at each leading point
        let mut tried = Vec::new();
        for idx in 0..parts.len() {
            let len = parts[idx];
            if tried.contains(&len) {
                continue;
            }
            tried.push(len);
            let mut rest = parts.to_vec();
            rest.remove(idx);
            used[start] = true;
            let mut cycle = vec![start];
            pick(n, len, &rest, &mut cycle, table, used, out);
            used[start] = false;
        }
    }
    fn pick(
        n: usize,
        len: usize,
        rest: &[usize],
        cycle: &mut Vec<usize>,
        table: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cycle.len() == len {
            for i in 0..len {
                table[cycle[i]] = cycle[(i + 1) % len];
            }
            go(n, rest, table, used, out);
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cycle.push(x);
                pick(n, len, rest, cycle, table, used, out);
                cycle.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut table = vec![0; n];
    let mut used = vec![false; n];
    go(n, parts, &mut table, &mut used, &mut out);
    out
}

/// Partitions of `n`, independent of the library's generator.
pub fn oracle_partitions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in oracle_partitions(n - first) {
            if rest.first().is_none_or(|&r| r <= first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
    }
    out
}

/// The subset sums of `lengths` that use only lengths divisible by `d`.
pub fn oracle_d_range(lengths: &[usize], d: usize) -> Vec<usize> {
    let usable: Vec<usize> = lengths.iter().copied().filter(|l| l % d == 0).collect();
    let mut sums: Vec<usize> = (0u64..1 << usable.len())
        .map(|mask| {
            usable
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, l)| l)
                .sum()
        })
        .collect();
    sums.sort();
    sums.dedup();
    sums
}

pub fn cycle_lengths(p: &Permutation) -> Vec<usize> {
    let t = p.table();
    let mut seen = vec![false; t.len()];
    let mut out = Vec::new();
    for s in 0..t.len() {
        if !seen[s] {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = t[x];
                len += 1;
            }
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
