//! Complete solvers for small degrees.
//!
//! [`enumerate_naive`] walks all of `S_n` and is the reference oracle.
//! [`enumerate_pruned`] restricts `y` to cycle types without even cycles whose
//! `r`-cycle supports can be unions of cycles of `alpha`, and inside each type
//! places cycles so that every cycle of `y` forces the cycle sitting on its
//! `alpha`-image. Both are exact.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::certifier::proves_only_trivial;
use crate::constructor::{b2_all_solutions, b2_parameters};
use crate::cycle_analysis::{cycle_type, d_range_of_type, CycleType};
use crate::error::{Error, Result};
use crate::perm::{format_cycles, Permutation};

/// Degree limits for the exhaustive solvers. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub naive: usize,
    pub pruned: usize,
    pub roots: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            naive: 9,
            pruned: 14,
            roots: 12,
        }
    }
}

pub const GUARDS_ENV: &str = "PERM_EQ_GUARDS";

impl Guards {
    /// Parses overrides such as `naive=10,pruned=16`. Unmentioned guards keep
    /// their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut guards = Self::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("guard override `{item}` is not key=value"))
            })?;
            let value: usize = value.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("guard value `{value}` is not an integer"))
            })?;
            match key.trim() {
                "naive" => guards.naive = value,
                "pruned" => guards.pruned = value,
                "roots" => guards.roots = value,
                other => return Err(Error::InvalidArgument(format!("unknown guard `{other}`"))),
            }
        }
        Ok(guards)
    }

    /// Defaults, overridden by `PERM_EQ_GUARDS` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(GUARDS_ENV) {
            Ok(text) => Self::parse(&text),
            Err(_) => Ok(Self::default()),
        }
    }

    fn check(limit: usize, guard: &'static str, degree: usize) -> Result<()> {
        if degree > limit {
            return Err(Error::GuardExceeded {
                guard,
                degree,
                limit,
            });
        }
        Ok(())
    }

    pub fn check_pruned(&self, degree: usize) -> Result<()> {
        Self::check(self.pruned, "pruned", degree)
    }
}

/// The equation a [`SolutionSet`] solves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Equation {
    /// `alpha ∘ y ∘ alpha⁻¹ = y^k`.
    PowerConjugate { alpha: Permutation, k: u32 },
    /// `alpha ∘ x = x ∘ alpha ∘ x ∘ alpha`.
    Star { alpha: Permutation },
    /// `y ∘ y = sigma`.
    SquareRoot { sigma: Permutation },
}

impl Equation {
    pub fn degree(&self) -> usize {
        match self {
            Self::PowerConjugate { alpha, .. } | Self::Star { alpha } => alpha.degree(),
            Self::SquareRoot { sigma } => sigma.degree(),
        }
    }

    pub fn is_satisfied_by(&self, y: &Permutation) -> bool {
        if y.degree() != self.degree() {
            return false;
        }
        match self {
            Self::PowerConjugate { alpha, k } => {
                conjugate_power_holds(alpha.table(), y.table(), *k)
            }
            Self::Star { alpha } => {
                let lhs = alpha.compose(y).expect("same degree");
                let rhs = y
                    .compose(alpha)
                    .and_then(|t| t.compose(y))
                    .and_then(|t| t.compose(alpha))
                    .expect("same degree");
                lhs == rhs
            }
            Self::SquareRoot { sigma } => &y.compose(y).expect("same degree") == sigma,
        }
    }

    fn describe(&self) -> String {
        match self {
            Self::PowerConjugate { alpha, k } => {
                format!(
                    "alpha∘y∘alpha⁻¹ = y^{k}, alpha = {alpha} in S_{}",
                    alpha.degree()
                )
            }
            Self::Star { alpha } => {
                format!(
                    "alpha∘x = x∘alpha∘x∘alpha, alpha = {alpha} in S_{}",
                    alpha.degree()
                )
            }
            Self::SquareRoot { sigma } => {
                format!("y∘y = sigma, sigma = {sigma} in S_{}", sigma.degree())
            }
        }
    }
}

/// `alpha(y(i)) = y^k(alpha(i))` for every point, on 0-based tables.
fn conjugate_power_holds(alpha: &[usize], y: &[usize], k: u32) -> bool {
    if k == 2 {
        return (0..alpha.len()).all(|i| alpha[y[i]] == y[y[alpha[i]]]);
    }
    let yk = Permutation::from_table_unchecked(y.to_vec()).power(k as i64);
    let yk = yk.table();
    (0..alpha.len()).all(|i| alpha[y[i]] == yk[alpha[i]])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Naive,
    Pruned,
    Constructed,
    /// Only the trivial solution, proven by a certificate rather than search.
    Certified,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Naive => "naive",
            Self::Pruned => "pruned",
            Self::Constructed => "constructed",
            Self::Certified => "certified",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Complete permutations that were checked against the equation.
    pub candidates: u64,
    /// Partial placements visited by the pruned search.
    pub nodes: u64,
    /// Size of the part of `S_n` the method covers.
    pub search_space: u128,
    /// Wall time. Not serialized, so that output is reproducible.
    pub elapsed: Duration,
}

impl Serialize for SearchStats {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SearchStats", 3)?;
        s.serialize_field("candidates", &self.candidates)?;
        s.serialize_field("nodes", &self.nodes)?;
        s.serialize_field("search_space", &self.search_space)?;
        s.end()
    }
}

/// Verified, deduplicated solutions in canonical order (identity first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    equation: Equation,
    method: Method,
    solutions: Vec<Permutation>,
    stats: SearchStats,
}

impl SolutionSet {
    /// Checks every member against `equation`, then sorts and deduplicates.
    pub fn new(
        equation: Equation,
        method: Method,
        mut solutions: Vec<Permutation>,
        stats: SearchStats,
    ) -> Result<Self> {
        if let Some(bad) = solutions.iter().find(|y| !equation.is_satisfied_by(y)) {
            return Err(Error::Verification(format!(
                "{bad} does not satisfy {}",
                equation.describe()
            )));
        }
        solutions.sort();
        solutions.dedup();
        Ok(Self {
            equation,
            method,
            solutions,
            stats,
        })
    }

    pub fn equation(&self) -> &Equation {
        &self.equation
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    pub fn solutions(&self) -> &[Permutation] {
        &self.solutions
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn contains(&self, y: &Permutation) -> bool {
        self.solutions.binary_search(y).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.solutions.iter()
    }

    /// Same members, regardless of how they were obtained.
    pub fn same_members(&self, other: &Self) -> bool {
        self.solutions == other.solutions
    }

    /// Plain-text report for terminals.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("equation: {}\n", self.equation.describe()));
        out.push_str(&format!(
            "method: {}  candidates: {}  search space: {}\n",
            self.method, self.stats.candidates, self.stats.search_space
        ));
        out.push_str(&format!("solutions: {}\n", self.len()));
        let width = self.len().to_string().len();
        for (i, y) in self.solutions.iter().enumerate() {
            out.push_str(&format!("  {:>width$}  {}\n", i + 1, format_cycles(y)));
        }
        out
    }
}

impl Serialize for SolutionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SolutionSet", 5)?;
        s.serialize_field("equation", &self.equation)?;
        s.serialize_field("degree", &self.equation.degree())?;
        s.serialize_field("method", &self.method)?;
        s.serialize_field("stats", &self.stats)?;
        s.serialize_field("count", &self.solutions.len())?;
        s.serialize_field("solutions", &self.solutions)?;
        s.end()
    }
}

/// Calls `f` on every permutation of `0..n` in lexicographic order.
fn for_each_table(n: usize, mut f: impl FnMut(&[usize])) {
    let mut t: Vec<usize> = (0..n).collect();
    loop {
        f(&t);
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| t[i] < t[i + 1]) else {
            return;
        };
        let j = (i + 1..n)
            .rev()
            .find(|&j| t[j] > t[i])
            .expect("successor exists");
        t.swap(i, j);
        t[i + 1..].reverse();
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Every `y` in `S_n` with `alpha ∘ y ∘ alpha⁻¹ = y^k`, by testing all `n!` candidates.
pub fn enumerate_naive(alpha: &Permutation, k: u32, guards: &Guards) -> Result<SolutionSet> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = alpha.degree();
    Guards::check(guards.naive, "naive", n).map_err(|e| match e {
        Error::GuardExceeded { .. } if k == 2 && n <= guards.pruned => Error::GuardExceeded {
            guard: "naive (use the pruned strategy for k = 2)",
            degree: n,
            limit: guards.naive,
        },
        e => e,
    })?;
    let start = Instant::now();
    let mut found = Vec::new();
    let mut candidates = 0u64;
    let a = alpha.table();
    for_each_table(n, |y| {
        candidates += 1;
        if conjugate_power_holds(a, y, k) {
            found.push(Permutation::from_table_unchecked(y.to_vec()));
        }
    });
    let stats = SearchStats {
        candidates,
        nodes: 0,
        search_space: factorial(n),
        elapsed: start.elapsed(),
    };
    SolutionSet::new(
        Equation::PowerConjugate {
            alpha: alpha.clone(),
            k,
        },
        Method::Naive,
        found,
        stats,
    )
}

/// Cycle types a solution of `alpha ∘ y ∘ alpha⁻¹ = y²` can have: only odd
/// cycle lengths, and for each length `r` present, `t_r · r ∈ F_1(alpha)`.
pub fn candidate_types(alpha: &Permutation) -> Vec<CycleType> {
    let n = alpha.degree();
    let f1 = d_range_of_type(&cycle_type(alpha), 1).expect("d = 1 is always in range");
    let mut out = Vec::new();
    let mut counts = vec![0usize; n];
    let largest_odd = if n % 2 == 1 { n } else { n - 1 };
    odd_partitions(n, largest_odd, &mut counts, &mut |counts| {
        let ok = counts
            .iter()
            .enumerate()
            .all(|(i, &t)| t == 0 || f1.contains(t * (i + 1)));
        if ok {
            out.push(CycleType::from_counts_unchecked(counts.to_vec()));
        }
    });
    out
}

// Partitions of `rest` into odd parts no larger than `max_part`, largest parts
// chosen first.
fn odd_partitions(
    rest: usize,
    max_part: usize,
    counts: &mut [usize],
    f: &mut impl FnMut(&[usize]),
) {
    if rest == 0 {
        f(counts);
        return;
    }
    if max_part == 1 {
        counts[0] += rest;
        f(counts);
        counts[0] -= rest;
        return;
    }
    let mut used = 0;
    while used * max_part <= rest {
        counts[max_part - 1] += used;
        odd_partitions(rest - used * max_part, max_part - 2, counts, f);
        counts[max_part - 1] -= used;
        used += 1;
    }
}

const UNSET: usize = usize::MAX;

/// Depth-first placement of the cycles of `y` for one cycle type.
struct TypeSearch<'a> {
    alpha: &'a [usize],
    alpha_inv: &'a [usize],
    y: Vec<usize>,
    budget: Vec<usize>,
    trail: Vec<usize>,
    budget_trail: Vec<usize>,
    cycle: Vec<usize>,
    pos: Vec<usize>,
    found: Vec<Vec<usize>>,
    candidates: u64,
    nodes: u64,
}

impl<'a> TypeSearch<'a> {
    fn new(alpha: &'a [usize], alpha_inv: &'a [usize], ty: &CycleType) -> Self {
        let n = alpha.len();
        let mut budget = vec![0; n + 1];
        for (len, count) in ty.lengths() {
            budget[len] = count;
        }
        Self {
            alpha,
            alpha_inv,
            y: vec![UNSET; n],
            budget,
            trail: Vec::new(),
            budget_trail: Vec::new(),
            cycle: Vec::new(),
            pos: vec![UNSET; n],
            found: Vec::new(),
            candidates: 0,
            nodes: 0,
        }
    }

    fn n(&self) -> usize {
        self.alpha.len()
    }

    /// Places the smallest free point's cycle, trying every admissible length.
    fn run(&mut self) {
        self.nodes += 1;
        let Some(a) = self.y.iter().position(|&v| v == UNSET) else {
            self.candidates += 1;
            if conjugate_power_holds(self.alpha, &self.y, 2) {
                self.found.push(self.y.clone());
            }
            return;
        };
        for r in 1..=self.n() {
            if self.budget[r] > 0 {
                self.start_cycle(a, r, None);
            }
        }
    }

    /// Begins the cycle at `a` of length `r`, optionally with a fixed second point.
    fn start_cycle(&mut self, a: usize, r: usize, second: Option<usize>) {
        self.cycle.push(a);
        self.pos[a] = 0;
        match second {
            Some(x) if r > 1 => {
                if self.y[x] == UNSET && self.pos[x] == UNSET {
                    self.cycle.push(x);
                    self.pos[x] = 1;
                    if self.partial_ok() {
                        self.extend(r);
                    }
                    self.pos[x] = UNSET;
                    self.cycle.pop();
                }
            }
            _ => self.extend(r),
        }
        self.pos[a] = UNSET;
        self.cycle.pop();
    }

    fn extend(&mut self, r: usize) {
        if self.cycle.len() == r {
            self.close();
            return;
        }
        let a = self.cycle[0];
        for x in a + 1..self.n() {
            if self.y[x] != UNSET || self.pos[x] != UNSET {
                continue;
            }
            let k = self.cycle.len();
            self.cycle.push(x);
            self.pos[x] = k;
            if self.partial_ok() {
                self.extend(r);
            }
            self.pos[x] = UNSET;
            self.cycle.pop();
        }
    }

    /// Whenever `alpha(c_i) = c_j` inside the open cycle, `y²` must send
    /// `alpha(c_i)` to `alpha(c_{i+1})`, so `c_{j+2} = alpha(c_{i+1})`. Checks the
    /// instances that the newest point completes.
    fn partial_ok(&self) -> bool {
        let c = &self.cycle;
        let k = c.len() - 1;
        if k >= 1 {
            let j = self.pos[self.alpha[c[k - 1]]];
            if j != UNSET && j + 2 <= k && c[j + 2] != self.alpha[c[k]] {
                return false;
            }
        }
        if k >= 2 {
            let i = self.pos[self.alpha_inv[c[k - 2]]];
            if i != UNSET && i < k && c[k] != self.alpha[c[i + 1]] {
                return false;
            }
        }
        true
    }

    fn assign_cycle(&mut self, order: &[usize]) {
        let r = order.len();
        for i in 0..r {
            self.y[order[i]] = order[(i + 1) % r];
            self.trail.push(order[i]);
        }
        self.budget[r] -= 1;
        self.budget_trail.push(r);
    }

    fn undo_to(&mut self, mark: usize, budget_mark: usize) {
        for p in self.trail.drain(mark..) {
            self.y[p] = UNSET;
        }
        for r in self.budget_trail.drain(budget_mark..) {
            self.budget[r] += 1;
        }
    }

    fn close(&mut self) {
        let mark = self.trail.len();
        let budget_mark = self.budget_trail.len();
        // The open cycle is assigned now; the nested search starts a fresh one.
        let chosen = std::mem::take(&mut self.cycle);
        self.assign_cycle(&chosen);
        for &p in &chosen {
            self.pos[p] = UNSET;
        }
        if self.propagate(chosen.clone()) {
            self.run();
        }
        for (i, &p) in chosen.iter().enumerate() {
            self.pos[p] = i;
        }
        self.cycle = chosen;
        self.undo_to(mark, budget_mark);
    }

    /// A cycle `(c_0, ..., c_{r-1})` of `y` makes `(alpha c_0, ..., alpha c_{r-1})`
    /// a cycle of `y²`; with `r` odd that fixes `y` on the image as its
    /// `(r+1)/2`-th power. Follows the images until they return to placed points.
    fn propagate(&mut self, mut cur: Vec<usize>) -> bool {
        let r = cur.len();
        let half = r.div_ceil(2);
        loop {
            let image: Vec<usize> = cur.iter().map(|&c| self.alpha[c]).collect();
            if self.y[image[0]] != UNSET {
                return (0..r).all(|i| self.y[image[i]] == image[(i + half) % r]);
            }
            if image.iter().any(|&p| self.y[p] != UNSET) || self.budget[r] == 0 {
                return false;
            }
            let order: Vec<usize> = (0..r).map(|i| image[(i * half) % r]).collect();
            self.assign_cycle(&order);
            cur = order;
        }
    }
}

/// Every `y` with `alpha ∘ y ∘ alpha⁻¹ = y²`, searching only [`candidate_types`].
///
/// Work is split by (cycle type, length of the cycle through point 1, second
/// point of that cycle) and merged in canonical order, so the result does
/// not depend on the number of worker threads.
pub fn enumerate_pruned(alpha: &Permutation, guards: &Guards) -> Result<SolutionSet> {
    let n = alpha.degree();
    Guards::check(guards.pruned, "pruned", n)?;
    let start = Instant::now();
    let types = candidate_types(alpha);
    let alpha_inv = alpha.inverse();

    let mut tasks: Vec<(usize, usize, Option<usize>)> = Vec::new();
    for (ti, ty) in types.iter().enumerate() {
        for (r, _) in ty.lengths() {
            if r == 1 {
                tasks.push((ti, 1, None));
            } else {
                tasks.extend((1..n).map(|x| (ti, r, Some(x))));
            }
        }
    }

    let results: Vec<(Vec<Vec<usize>>, u64, u64)> = tasks
        .par_iter()
        .map(|&(ti, r, second)| {
            let mut search = TypeSearch::new(alpha.table(), alpha_inv.table(), &types[ti]);
            search.nodes += 1;
            search.start_cycle(0, r, second);
            (search.found, search.candidates, search.nodes)
        })
        .collect();

    let mut stats = SearchStats {
        search_space: types.iter().map(CycleType::class_size).sum(),
        ..SearchStats::default()
    };
    let mut found = Vec::new();
    for (sols, candidates, nodes) in results {
        stats.candidates += candidates;
        stats.nodes += nodes;
        found.extend(sols.into_iter().map(Permutation::from_table_unchecked));
    }
    stats.elapsed = start.elapsed();
    SolutionSet::new(
        Equation::PowerConjugate {
            alpha: alpha.clone(),
            k: 2,
        },
        Method::Pruned,
        found,
        stats,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Naive,
    Pruned,
    /// A certificate when one applies, otherwise the cyclic construction.
    Constructed,
    /// Constructed if possible, otherwise the cheapest exhaustive search.
    Auto,
}

fn constructed(alpha: &Permutation) -> Result<SolutionSet> {
    let start = Instant::now();
    if proves_only_trivial(alpha).is_some() {
        let stats = SearchStats {
            elapsed: start.elapsed(),
            ..SearchStats::default()
        };
        return SolutionSet::new(
            Equation::PowerConjugate {
                alpha: alpha.clone(),
                k: 2,
            },
            Method::Certified,
            vec![Permutation::identity(alpha.degree())],
            stats,
        );
    }
    let ty = cycle_type(alpha);
    if ty.count(ty.degree()) == 1 && b2_parameters(ty.degree()).is_ok() {
        return b2_all_solutions(alpha);
    }
    Err(Error::Precondition(format!(
        "no certificate or construction covers alpha of type {ty}"
    )))
}

/// All solutions of `alpha ∘ y ∘ alpha⁻¹ = y^k` by the chosen strategy.
pub fn solve_conjugate(
    alpha: &Permutation,
    k: u32,
    strategy: Strategy,
    guards: &Guards,
) -> Result<SolutionSet> {
    match (strategy, k) {
        (Strategy::Naive, _) => enumerate_naive(alpha, k, guards),
        (Strategy::Pruned, 2) => enumerate_pruned(alpha, guards),
        (Strategy::Constructed, 2) => constructed(alpha),
        (Strategy::Auto, 2) => constructed(alpha).or_else(|e| match e {
            Error::Precondition(_) => enumerate_pruned(alpha, guards),
            e => Err(e),
        }),
        (Strategy::Auto, _) => enumerate_naive(alpha, k, guards),
        (_, k) => Err(Error::InvalidArgument(format!(
            "strategy {strategy:?} only handles k = 2, got k = {k}"
        ))),
    }
}

/// All solutions of `alpha ∘ x = x ∘ alpha ∘ x ∘ alpha`, as `x = y ∘ alpha⁻¹`
/// for the solutions `y` of `alpha ∘ y ∘ alpha⁻¹ = y²`.
pub fn solve_star(alpha: &Permutation, strategy: Strategy, guards: &Guards) -> Result<SolutionSet> {
    let ys = solve_conjugate(alpha, 2, strategy, guards)?;
    let inv = alpha.inverse();
    let xs = ys
        .iter()
        .map(|y| y.compose(&inv))
        .collect::<Result<Vec<_>>>()?;
    SolutionSet::new(
        Equation::Star {
            alpha: alpha.clone(),
        },
        ys.method(),
        xs,
        ys.stats().clone(),
    )
}

/// A square root exists iff every even cycle length occurs an even number of times.
pub fn square_root_exists(sigma: &Permutation) -> bool {
    square_root_obstruction(sigma).is_none()
}

/// The first even length `2i` with an odd number of `2i`-cycles, with that count.
pub fn square_root_obstruction(sigma: &Permutation) -> Option<(usize, usize)> {
    cycle_type(sigma)
        .lengths()
        .find(|&(len, count)| len % 2 == 0 && count % 2 == 1)
}

struct RootBuilder<'a> {
    // cycles of sigma, 0-based, grouped so equal lengths are adjacent
    cycles: &'a [Vec<usize>],
    used: Vec<bool>,
    y: Vec<usize>,
    out: Vec<Permutation>,
}

impl RootBuilder<'_> {
    fn run(&mut self) {
        let Some(i) = self.used.iter().position(|&u| !u) else {
            self.out
                .push(Permutation::from_table_unchecked(self.y.clone()));
            return;
        };
        let a = &self.cycles[i];
        let len = a.len();
        self.used[i] = true;
        if len % 2 == 1 {
            // alone: the unique root inside its support
            let half = len.div_ceil(2);
            for (t, &p) in a.iter().enumerate() {
                self.y[p] = a[(t + half) % len];
            }
            self.run();
        }
        for j in i + 1..self.cycles.len() {
            if self.used[j] || self.cycles[j].len() != len {
                continue;
            }
            self.used[j] = true;
            let b = &self.cycles[j];
            // interleave (a_0, b_s, a_1, b_{s+1}, ...)
            for s in 0..len {
                for t in 0..len {
                    let bt = b[(s + t) % len];
                    self.y[a[t]] = bt;
                    self.y[bt] = a[(t + 1) % len];
                }
                self.run();
            }
            self.used[j] = false;
        }
        self.used[i] = false;
    }
}

/// Brute-force square roots over all of `S_n`.
pub fn brute_force_square_roots(sigma: &Permutation) -> Vec<Permutation> {
    let s = sigma.table();
    let mut out = Vec::new();
    for_each_table(sigma.degree(), |y| {
        if (0..y.len()).all(|i| y[y[i]] == s[i]) {
            out.push(Permutation::from_table_unchecked(y.to_vec()));
        }
    });
    out
}

/// Every `y` with `y ∘ y = sigma`.
///
/// Each odd cycle of `sigma` either keeps its own root or is merged with an
/// equal-length cycle into one doubled cycle; even cycles must all be merged
/// in pairs. Every interleaving of each merged pair is produced. For degree 7
/// and below the result is also compared with a brute-force search.
pub fn square_roots_all(sigma: &Permutation, guards: &Guards) -> Result<SolutionSet> {
    let n = sigma.degree();
    Guards::check(guards.roots, "roots", n)?;
    let start = Instant::now();
    let mut cycles: Vec<Vec<usize>> = sigma
        .cycles()
        .into_iter()
        .map(|c| c.points().iter().map(|p| p - 1).collect())
        .collect();
    cycles.sort_by_key(Vec::len);
    let mut builder = RootBuilder {
        used: vec![false; cycles.len()],
        cycles: &cycles,
        y: vec![UNSET; n],
        out: Vec::new(),
    };
    if square_root_exists(sigma) {
        builder.run();
    }
    let candidates = builder.out.len() as u64;
    let set = SolutionSet::new(
        Equation::SquareRoot {
            sigma: sigma.clone(),
        },
        Method::Constructed,
        builder.out,
        SearchStats {
            candidates,
            nodes: 0,
            search_space: candidates as u128,
            elapsed: start.elapsed(),
        },
    )?;
    if set.len() as u64 != candidates {
        return Err(Error::Verification(
            "root construction produced duplicates".into(),
        ));
    }
    if n <= 7 {
        let mut brute = brute_force_square_roots(sigma);
        brute.sort();
        if brute != set.solutions {
            return Err(Error::Verification(format!(
                "square roots of {sigma}: {} constructed, {} by brute force",
                set.len(),
                brute.len()
            )));
        }
    }
    Ok(set)
}
