//! Cycle structure: decompositions, cycle types, d-ranges, fixed sets and
//! the permutation a solution's cycle base sets inherit from `alpha`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{Cycle, Permutation};

/// Cycle-length multiplicities `⟨t_1, ..., t_n⟩` of a permutation of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    // counts[i] = number of cycles of length i + 1
    counts: Vec<usize>,
}

impl CycleType {
    /// Builds a type from a partition of `degree` given as a list of cycle lengths.
    pub fn from_partition(degree: usize, lengths: &[usize]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        let mut counts = vec![0; degree];
        let mut total = 0usize;
        for &len in lengths {
            if len == 0 || len > degree {
                return Err(Error::InvalidArgument(format!(
                    "cycle length {len} out of range 1..={degree}"
                )));
            }
            counts[len - 1] += 1;
            total += len;
        }
        if total != degree {
            return Err(Error::InvalidArgument(format!(
                "cycle lengths sum to {total}, not {degree}"
            )));
        }
        Ok(Self { counts })
    }

    pub(crate) fn from_counts_unchecked(counts: Vec<usize>) -> Self {
        debug_assert_eq!(
            counts
                .iter()
                .enumerate()
                .map(|(i, c)| (i + 1) * c)
                .sum::<usize>(),
            counts.len()
        );
        Self { counts }
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }

    /// `t_len`; zero for lengths outside `1..=n`.
    pub fn count(&self, len: usize) -> usize {
        match len {
            0 => 0,
            l => self.counts.get(l - 1).copied().unwrap_or(0),
        }
    }

    /// The full multiplicity vector, index `i` holding `t_{i+1}`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `(length, multiplicity)` for every length that occurs, ascending.
    pub fn lengths(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 1, c))
    }

    /// Cycle lengths as a partition, largest part first.
    pub fn partition(&self) -> Vec<usize> {
        let mut parts = Vec::new();
        for (len, count) in self.lengths() {
            parts.extend(std::iter::repeat_n(len, count));
        }
        parts.reverse();
        parts
    }

    pub fn cycle_count(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The number of permutations of `S_n` with this type,
    /// `n! / Π_r (r^{t_r} · t_r!)`.
    pub fn class_size(&self) -> u128 {
        let n = self.degree() as u128;
        let mut size: u128 = (1..=n).product();
        for (len, count) in self.lengths() {
            for j in 1..=count as u128 {
                size /= len as u128 * j;
            }
        }
        size
    }

    /// The representative with cycles laid on consecutive points in
    /// decreasing length, starting at point 1.
    pub fn representative(&self) -> Permutation {
        let mut next = 1;
        let mut cycles = Vec::new();
        for len in self.partition() {
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        Permutation::from_cycles(self.degree(), &cycles).expect("partition fills the degree")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.partition().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// Cycle decomposition with fixed points as 1-cycles, in canonical order.
pub fn cycle_decomposition(p: &Permutation) -> Vec<Cycle> {
    p.cycles()
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    let mut counts = vec![0; p.degree()];
    for c in p.cycles() {
        counts[c.len() - 1] += 1;
    }
    CycleType::from_counts_unchecked(counts)
}

/// Whether `p` and `q` are conjugate in `S_n`.
pub fn same_type(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(cycle_type(p) == cycle_type(q))
}

/// The d-range `F_d(alpha)`: every total length reachable by choosing whole
/// cycles of `alpha` whose lengths are divisible by `d`. Always contains 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DRange {
    d: usize,
    // parent[s] = (previous sum, cycle length added) on the first path found to s
    parent: Vec<Option<(usize, usize)>>,
    reachable: Vec<bool>,
}

impl DRange {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.reachable.len() - 1
    }

    pub fn contains(&self, value: usize) -> bool {
        self.reachable.get(value).copied().unwrap_or(false)
    }

    /// Members in increasing order.
    pub fn members(&self) -> Vec<usize> {
        self.reachable
            .iter()
            .enumerate()
            .filter_map(|(s, &r)| r.then_some(s))
            .collect()
    }

    /// Cycle lengths of `alpha` (each divisible by `d`, used at most as often
    /// as `alpha` has such cycles) summing to `value`.
    pub fn witness(&self, value: usize) -> Option<Vec<usize>> {
        if !self.contains(value) {
            return None;
        }
        let mut lengths = Vec::new();
        let mut s = value;
        while let Some((prev, len)) = self.parent[s] {
            lengths.push(len);
            s = prev;
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Some(lengths)
    }
}

impl Serialize for DRange {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members())
    }
}

/// Computes `F_d(alpha)` by 0/1 subset-sum over the cycles whose length `d` divides.
pub fn d_range(alpha: &Permutation, d: usize) -> Result<DRange> {
    d_range_of_type(&cycle_type(alpha), d)
}

pub fn d_range_of_type(ty: &CycleType, d: usize) -> Result<DRange> {
    let n = ty.degree();
    if d == 0 || d > n {
        return Err(Error::InvalidArgument(format!(
            "d = {d} out of range 1..={n}"
        )));
    }
    let mut reachable = vec![false; n + 1];
    let mut parent = vec![None; n + 1];
    reachable[0] = true;
    for len in (d..=n).step_by(d) {
        for _ in 0..ty.count(len) {
            for s in (len..=n).rev() {
                if reachable[s - len] && !reachable[s] {
                    reachable[s] = true;
                    parent[s] = Some((s - len, len));
                }
            }
        }
    }
    Ok(DRange {
        d,
        parent,
        reachable,
    })
}

/// Splits an `alpha`-invariant point set into the cycles of `alpha` it is made of.
///
/// Errors with [`Error::NotFixedSet`] naming the first point (in increasing
/// order) whose image leaves the set.
pub fn fixed_set_decomposition(alpha: &Permutation, set: &[usize]) -> Result<Vec<Cycle>> {
    let n = alpha.degree();
    let mut member = vec![false; n + 1];
    for &h in set {
        if h == 0 || h > n {
            return Err(Error::InvalidArgument(format!(
                "point {h} out of range 1..={n}"
            )));
        }
        member[h] = true;
    }
    for h in 1..=n {
        if member[h] && !member[alpha.apply(h)] {
            return Err(Error::NotFixedSet {
                point: h,
                image: alpha.apply(h),
            });
        }
    }
    let cycles: Vec<Cycle> = alpha
        .cycles()
        .into_iter()
        .filter(|c| member[c.min()])
        .collect();
    let size = member.iter().filter(|&&m| m).count();
    debug_assert_eq!(cycles.iter().map(Cycle::len).sum::<usize>(), size);
    debug_assert!(d_range(alpha, 1)
        .map(|f| f.contains(size))
        .unwrap_or(size == 0));
    Ok(cycles)
}

/// How `alpha` permutes the point sets of the `r`-cycles of a solution `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPermutation {
    pub r: usize,
    /// Base sets, each sorted, the list ordered by minimum element.
    pub base_sets: Vec<Vec<usize>>,
    /// `alpha(base_sets[i - 1]) = base_sets[gamma(i) - 1]`.
    pub gamma: Permutation,
}

pub fn induced_index_permutation(
    alpha: &Permutation,
    y: &Permutation,
    r: usize,
) -> Result<InducedPermutation> {
    if alpha.degree() != y.degree() {
        return Err(Error::DegreeMismatch {
            left: alpha.degree(),
            right: y.degree(),
        });
    }
    if r.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("r = {r} must be odd")));
    }
    let n = alpha.degree();
    let base_sets: Vec<Vec<usize>> = y
        .cycles()
        .into_iter()
        .filter(|c| c.len() == r)
        .map(|c| {
            let mut s = c.points().to_vec();
            s.sort_unstable();
            s
        })
        .collect();
    if base_sets.is_empty() {
        return Err(Error::NotInduced {
            r,
            reason: format!("y has no {r}-cycles"),
        });
    }
    let mut owner = vec![usize::MAX; n + 1];
    for (i, set) in base_sets.iter().enumerate() {
        for &p in set {
            owner[p] = i;
        }
    }
    let mut table = Vec::with_capacity(base_sets.len());
    for (i, set) in base_sets.iter().enumerate() {
        let target = owner[alpha.apply(set[0])];
        if target == usize::MAX {
            return Err(Error::NotInduced {
                r,
                reason: format!("alpha({}) lies outside every base set", set[0]),
            });
        }
        let mut image: Vec<usize> = set.iter().map(|&p| alpha.apply(p)).collect();
        image.sort_unstable();
        if image != base_sets[target] {
            return Err(Error::NotInduced {
                r,
                reason: format!("alpha maps base set {} onto no base set", i + 1),
            });
        }
        table.push(target);
    }
    let gamma = Permutation::from_table(table).map_err(|e| Error::NotInduced {
        r,
        reason: e.to_string(),
    })?;
    Ok(InducedPermutation {
        r,
        base_sets,
        gamma,
    })
}
