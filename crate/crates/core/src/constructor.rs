//! Explicit non-trivial solutions.
//!
//! * [`b1_construct`] builds, for `p | n` an odd prime with `p | 2^{n/p} - 1`,
//!   an `n`-cycle `beta` together with a solution `y` made of `n/p` cycles of
//!   length `p`, on the grid `{1..q} × {1..p}` labelled `(i, j) ↦ (i-1)·p + j`.
//! * [`b2_solution`] / [`b2_all_solutions`] give every solution when `alpha`
//!   is an `n`-cycle with `n = p·2^m` and `p | 2^{2^m} - 1`.
//! * [`conjugacy_transporter`] / [`transport_solution`] move solutions between
//!   conjugate choices of `alpha`.
//! * [`power_solutions`] lists the powers of `alpha` solving the `k`-th power
//!   variant of the equation.
//!
//! Nothing is returned without being checked against its defining equation.

use std::time::Instant;

use serde::Serialize;

use crate::arith::{inverse_mod_prime, is_prime, mod_pow};
use crate::certifier::mersenne_divisible;
use crate::cycle_analysis::{cycle_type, same_type};
use crate::enumerator::{Equation, Method, SearchStats, SolutionSet};
use crate::error::{Error, Result};
use crate::perm::{gcd_u128, Cycle, Permutation};

/// `alpha ∘ y ∘ alpha⁻¹ = y²`, checked pointwise as `alpha ∘ y = y² ∘ alpha`.
pub fn solves_conjugate_square(alpha: &Permutation, y: &Permutation) -> bool {
    alpha.degree() == y.degree()
        && (1..=alpha.degree()).all(|i| alpha.apply(y.apply(i)) == y.apply(y.apply(alpha.apply(i))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct B1Instance {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// A single `n`-cycle.
    pub beta: Permutation,
    /// `q` disjoint `p`-cycles with `beta ∘ y = y² ∘ beta`.
    pub y: Permutation,
}

impl B1Instance {
    /// Point label of the grid cell `(i, j)`, `1 <= i <= q`, `1 <= j <= p`.
    pub fn label(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.p + j
    }
}

// representative of x in {1, ..., p} modulo p
fn wrap(x: usize, p: usize) -> usize {
    (x - 1) % p + 1
}

pub fn b1_construct(n: usize, p: usize) -> Result<B1Instance> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::Precondition(format!("p = {p} is not an odd prime")));
    }
    if n == 0 || !n.is_multiple_of(p) {
        return Err(Error::Precondition(format!(
            "p = {p} does not divide n = {n}"
        )));
    }
    let q = n / p;
    if !mersenne_divisible(p as u64, q as u64)? {
        return Err(Error::Precondition(format!(
            "p = {p} does not divide 2^{q} - 1"
        )));
    }
    let label = |i: usize, j: usize| (i - 1) * p + j - 1;
    let mut beta = vec![0; n];
    let mut y = vec![0; n];
    for i in 1..=q {
        for j in 1..=p {
            beta[label(i, j)] = if i < q {
                label(i + 1, wrap(2 * j, p))
            } else {
                label(1, wrap(2 * j + 1, p))
            };
            y[label(i, j)] = label(i, wrap(j + 1, p));
        }
    }
    let beta = Permutation::from_table(beta)
        .map_err(|e| Error::Verification(format!("beta is not a bijection: {e}")))?;
    let y = Permutation::from_table(y)
        .map_err(|e| Error::Verification(format!("y is not a bijection: {e}")))?;

    if !solves_conjugate_square(&beta, &y) {
        return Err(Error::Verification("beta∘y != y²∘beta".into()));
    }
    let beta_type = cycle_type(&beta);
    if beta_type.cycle_count() != 1 || beta_type.count(n) != 1 {
        return Err(Error::Verification(format!(
            "beta has type {beta_type}, not [{n}]"
        )));
    }
    let y_type = cycle_type(&y);
    if y_type.count(p) != q || y_type.cycle_count() != q {
        return Err(Error::Verification(format!("y has type {y_type}")));
    }
    Ok(B1Instance { n, p, q, beta, y })
}

/// Every `(n, p)` with `n <= max_n` meeting the [`b1_construct`] precondition.
pub fn b1_parameters_up_to(max_n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for p in (3..=n).step_by(2) {
            if n % p == 0 && is_prime(p as u64) && mod_pow(2, (n / p) as u64, p as u64) == 1 {
                out.push((n, p));
            }
        }
    }
    out
}

/// A `tau` with `tau ∘ source ∘ tau⁻¹ = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportWitness {
    pub tau: Permutation,
    /// `(source cycle, target cycle)` pairs; `tau` sends each source cycle's
    /// minimum to the target cycle's minimum and follows the cycle from there.
    pub alignment: Vec<(Cycle, Cycle)>,
}

/// Aligns the `k`-th source cycle of each length with the `k`-th target cycle
/// of that length (cycles in canonical order). `Ok(None)` when the types differ.
pub fn conjugacy_transporter(
    source: &Permutation,
    target: &Permutation,
) -> Result<Option<TransportWitness>> {
    if !same_type(source, target)? {
        return Ok(None);
    }
    let n = source.degree();
    let mut by_len: Vec<Vec<Cycle>> = vec![Vec::new(); n + 1];
    for c in target.cycles() {
        by_len[c.len()].push(c);
    }
    let mut taken = vec![0usize; n + 1];
    let mut tau = vec![0usize; n];
    let mut alignment = Vec::new();
    for s in source.cycles() {
        let len = s.len();
        let t = by_len[len][taken[len]].clone();
        taken[len] += 1;
        for (a, b) in s.points().iter().zip(t.points()) {
            tau[a - 1] = b - 1;
        }
        alignment.push((s, t));
    }
    let tau = Permutation::from_table(tau)
        .map_err(|e| Error::Verification(format!("transporter is not a bijection: {e}")))?;
    if &source.conjugate(&tau)? != target {
        return Err(Error::Verification("transporter does not conjugate".into()));
    }
    Ok(Some(TransportWitness { tau, alignment }))
}

/// Moves a solution `y` for `beta` to the solution `tau ∘ y ∘ tau⁻¹` for
/// `alpha = tau ∘ beta ∘ tau⁻¹`.
pub fn transport_solution(
    beta: &Permutation,
    y: &Permutation,
    alpha: &Permutation,
) -> Result<Permutation> {
    if !solves_conjugate_square(beta, y) {
        return Err(Error::Precondition(format!(
            "{y} does not solve the equation for {beta}"
        )));
    }
    let witness = conjugacy_transporter(beta, alpha)?.ok_or_else(|| {
        Error::Precondition(format!("{beta} and {alpha} have different cycle types"))
    })?;
    let z = y.conjugate(&witness.tau)?;
    if !solves_conjugate_square(alpha, &z) {
        return Err(Error::Verification(format!(
            "transported {z} does not solve for {alpha}"
        )));
    }
    Ok(z)
}

/// `n = p · 2^m` with `p` an odd prime dividing `2^{2^m} - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct B2Params {
    pub n: usize,
    pub p: usize,
    pub m: u32,
    /// `2^m`, also `n / p`.
    pub q: usize,
}

pub fn b2_parameters(n: usize) -> Result<B2Params> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let m = n.trailing_zeros();
    let q = 1usize << m;
    let p = n / q;
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::Precondition(format!(
            "n = {n} is not an odd prime times a power of two"
        )));
    }
    if !mersenne_divisible(p as u64, q as u64)? {
        return Err(Error::Precondition(format!(
            "p = {p} does not divide 2^{q} - 1"
        )));
    }
    Ok(B2Params { n, p, m, q })
}

fn single_cycle_params(alpha: &Permutation) -> Result<B2Params> {
    let n = alpha.degree();
    let ty = cycle_type(alpha);
    if ty.count(n) != 1 {
        return Err(Error::Precondition(format!(
            "alpha has type {ty}, not a single {n}-cycle"
        )));
    }
    b2_parameters(n)
}

/// The solution with `alpha^q(a) = y^s(a)`:
/// `y(alpha^i(a)) = alpha^{s̄(i)·q + i}(a)`, where `s̄(i)` in `1..p` is the
/// inverse of `2^i · s` modulo `p`.
pub fn b2_solution(alpha: &Permutation, a: usize, s: usize) -> Result<Permutation> {
    let params = single_cycle_params(alpha)?;
    let B2Params { n, p, q, .. } = params;
    if a == 0 || a > n {
        return Err(Error::Precondition(format!(
            "anchor {a} out of range 1..={n}"
        )));
    }
    if s == 0 || s >= p {
        return Err(Error::Precondition(format!(
            "s = {s} out of range 1..={}",
            p - 1
        )));
    }
    let table = alpha.table();
    let mut orbit = Vec::with_capacity(n);
    let mut x = a - 1;
    for _ in 0..n {
        orbit.push(x);
        x = table[x];
    }
    let (p64, s64) = (p as u64, s as u64);
    let mut y = vec![0usize; n];
    for (i, &point) in orbit.iter().enumerate() {
        let coeff = mod_pow(2, i as u64, p64) * s64 % p64;
        let s_bar = inverse_mod_prime(coeff, p64) as usize;
        y[point] = orbit[(s_bar * q + i) % n];
    }
    let y = Permutation::from_table(y)
        .map_err(|e| Error::Verification(format!("cyclic construction is not a bijection: {e}")))?;
    if !solves_conjugate_square(alpha, &y) {
        return Err(Error::Verification(format!(
            "{y} does not solve for {alpha}"
        )));
    }
    let ty = cycle_type(&y);
    if ty.count(p) != q || ty.cycle_count() != q {
        return Err(Error::Verification(format!(
            "{y} has type {ty}, expected {q} {p}-cycles"
        )));
    }
    Ok(y)
}

/// The identity and the `p - 1` solutions [`b2_solution`]`(alpha, 1, s)`;
/// checked to be exactly the powers of one non-trivial member.
pub fn b2_all_solutions(alpha: &Permutation) -> Result<SolutionSet> {
    let start = Instant::now();
    let params = single_cycle_params(alpha)?;
    let mut sols = vec![Permutation::identity(params.n)];
    for s in 1..params.p {
        sols.push(b2_solution(alpha, 1, s)?);
    }
    let generator = sols[1].clone();
    let candidates = sols.len() as u64;
    let set = SolutionSet::new(
        Equation::PowerConjugate {
            alpha: alpha.clone(),
            k: 2,
        },
        Method::Constructed,
        sols,
        SearchStats {
            candidates,
            nodes: 0,
            search_space: candidates as u128,
            elapsed: start.elapsed(),
        },
    )?;
    let mut powers: Vec<Permutation> = (0..params.p as i64).map(|j| generator.power(j)).collect();
    powers.sort();
    powers.dedup();
    if set.len() != params.p || powers != set.solutions() {
        return Err(Error::Verification(
            "cyclic solutions are not the powers of a single solution".into(),
        ));
    }
    Ok(set)
}

/// Cap on the number of power solutions returned, `gcd(k - 1, ord alpha)`.
pub const MAX_POWER_SOLUTIONS: u128 = 1 << 20;

/// The powers `alpha^t`, `0 <= t < ord(alpha)`, with `ord(alpha) | t·(k - 1)`;
/// each solves `alpha ∘ y ∘ alpha⁻¹ = y^k`.
pub fn power_solutions(alpha: &Permutation, k: u32) -> Result<SolutionSet> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let start = Instant::now();
    let order = alpha.order();
    // t is a multiple of order / gcd(k - 1, order); gcd(0, order) = order
    let g = match k - 1 {
        0 => order,
        km1 => gcd_u128(km1 as u128, order),
    };
    if g > MAX_POWER_SOLUTIONS {
        return Err(Error::InvalidArgument(format!(
            "{g} power solutions exceed the limit of {MAX_POWER_SOLUTIONS}"
        )));
    }
    let step = order / g;
    let sols: Vec<Permutation> = (0..g).map(|j| alpha.power_u128(j * step)).collect();
    SolutionSet::new(
        Equation::PowerConjugate {
            alpha: alpha.clone(),
            k,
        },
        Method::Constructed,
        sols,
        SearchStats {
            candidates: g as u64,
            nodes: 0,
            search_space: order,
            elapsed: start.elapsed(),
        },
    )
}
