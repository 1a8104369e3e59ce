//! Permutations of `{1, ..., n}` and their cycle notation.
//!
//! Points are 1-based in every public signature and in the text format. The
//! image table is stored 0-based; [`Permutation::apply`], [`Permutation::images`]
//! and [`Permutation::from_images`] are the translation points.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{1, ..., n}` with `n >= 1`.
///
/// Values are immutable once built. Ordering is lexicographic on the image
/// table, which puts the identity first among permutations of one degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    table: Vec<usize>,
}

/// One cycle of a permutation, rotated so that its smallest point comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    points: Vec<usize>,
}

impl Cycle {
    /// Builds a cycle from 1-based points in cycle order.
    pub fn new(points: Vec<usize>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument(
                "a cycle needs at least one point".into(),
            ));
        }
        let mut seen = points.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "point {} repeated in cycle",
                w[0]
            )));
        }
        if seen[0] == 0 {
            return Err(Error::InvalidArgument("points are 1-based".into()));
        }
        Ok(Self::canonical(points))
    }

    fn canonical(mut points: Vec<usize>) -> Self {
        let min_at = points
            .iter()
            .enumerate()
            .min_by_key(|&(_, p)| *p)
            .map(|(i, _)| i)
            .unwrap_or(0);
        points.rotate_left(min_at);
        Self { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn min(&self) -> usize {
        self.points[0]
    }

    pub fn contains(&self, point: usize) -> bool {
        self.points.contains(&point)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl Permutation {
    /// The identity of `S_n`.
    ///
    /// Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation degree must be at least 1");
        Self {
            table: (0..n).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list: `images[i - 1]` is the
    /// image of point `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let table = images
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("image 0 is not a point".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(table)
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_table(table: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &v in &table {
            if v >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range 1..={n}",
                    v + 1
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {} repeated",
                    v + 1
                )));
            }
        }
        Ok(Self { table })
    }

    /// Wraps a table the caller already knows to be a bijection.
    pub(crate) fn from_table_unchecked(table: Vec<usize>) -> Self {
        if cfg!(debug_assertions) && table.len() <= 12 {
            let mut seen = vec![false; table.len()];
            for &v in &table {
                debug_assert!(v < table.len() && !seen[v], "table is not a bijection");
                seen[v] = true;
            }
        }
        Self { table }
    }

    /// Builds a permutation of degree `degree` from disjoint 1-based cycles.
    /// Points not mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut table: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!("point {p} repeated")));
                }
                let next = cycle[(i + 1) % cycle.len()];
                table[p - 1] = next - 1;
            }
        }
        Ok(Self { table })
    }

    pub fn degree(&self) -> usize {
        self.table.len()
    }

    /// Image of the 1-based `point`. Panics if the point is out of range.
    pub fn apply(&self, point: usize) -> usize {
        self.table[point - 1] + 1
    }

    /// The 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.table.iter().map(|v| v + 1).collect()
    }

    /// The 0-based image table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let table = other.table.iter().map(|&j| self.table[j]).collect();
        Ok(Self::from_table_unchecked(table))
    }

    pub fn inverse(&self) -> Self {
        let mut table = vec![0; self.degree()];
        for (i, &v) in self.table.iter().enumerate() {
            table[v] = i;
        }
        Self::from_table_unchecked(table)
    }

    /// `self^k` for any integer `k`; negative exponents power the inverse.
    pub fn power(&self, k: i64) -> Self {
        self.power_by(|len| k.rem_euclid(len as i64) as usize)
    }

    /// `self^k` for exponents beyond `i64`.
    pub fn power_u128(&self, k: u128) -> Self {
        self.power_by(|len| (k % len as u128) as usize)
    }

    fn power_by(&self, shift_for: impl Fn(usize) -> usize) -> Self {
        let mut table = vec![0; self.degree()];
        let mut visited = vec![false; self.degree()];
        let mut cycle = Vec::new();
        for start in 0..self.degree() {
            if visited[start] {
                continue;
            }
            cycle.clear();
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                cycle.push(p);
                p = self.table[p];
            }
            let shift = shift_for(cycle.len());
            for (i, &p) in cycle.iter().enumerate() {
                table[p] = cycle[(i + shift) % cycle.len()];
            }
        }
        Self::from_table_unchecked(table)
    }

    /// `tau ∘ self ∘ tau⁻¹`.
    pub fn conjugate(&self, tau: &Self) -> Result<Self> {
        self.check_degree(tau)?;
        let mut table = vec![0; self.degree()];
        for (i, &v) in self.table.iter().enumerate() {
            table[tau.table[i]] = tau.table[v];
        }
        Ok(Self::from_table_unchecked(table))
    }

    /// The least `m >= 1` with `self^m = 1`, the lcm of the cycle lengths.
    ///
    /// Panics if the order does not fit in a `u128`, which cannot happen below
    /// degree 1000.
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| {
            let len = c.len() as u128;
            let g = gcd_u128(acc, len);
            (acc / g)
                .checked_mul(len)
                .expect("permutation order overflows u128")
        })
    }

    /// All cycles, fixed points included, each min-first, sorted by minimum.
    pub fn cycles(&self) -> Vec<Cycle> {
        let mut visited = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if visited[start] {
                continue;
            }
            let mut points = Vec::new();
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                points.push(p + 1);
                p = self.table[p];
            }
            // `start` is the smallest unvisited point, so the cycle is already min-first.
            out.push(Cycle { points });
        }
        out
    }

    /// Cycles of length at least 2.
    pub fn nontrivial_cycles(&self) -> Vec<Cycle> {
        self.cycles().into_iter().filter(|c| c.len() > 1).collect()
    }
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in S_{}", format_cycles(self), self.degree())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_cycles(self))
    }
}

/// Canonical cycle notation: min-first cycles sorted by minimum, fixed points
/// omitted, the identity printed as `()`.
pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.nontrivial_cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles.iter().map(Cycle::to_string).collect()
}

struct RawPoint {
    value: Option<usize>,
    offset: usize,
    token: String,
}

fn parse_error(offset: usize, token: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        token: token.into(),
        reason: reason.into(),
    }
}

fn parse_raw(text: &str) -> Result<Vec<Vec<RawPoint>>> {
    let mut chars = text.char_indices().peekable();
    let mut cycles = Vec::new();
    let skip_ws = |chars: &mut std::iter::Peekable<std::str::CharIndices<'_>>| {
        while chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    };

    skip_ws(&mut chars);
    if chars.peek().is_none() {
        return Err(parse_error(
            0,
            "",
            "empty input; write `()` for the identity",
        ));
    }
    while let Some(&(offset, c)) = chars.peek() {
        if c != '(' {
            return Err(parse_error(offset, c.to_string(), "expected `(`"));
        }
        chars.next();
        let mut cycle = Vec::new();
        skip_ws(&mut chars);
        if chars.next_if(|&(_, c)| c == ')').is_none() {
            loop {
                skip_ws(&mut chars);
                let Some(&(start, c)) = chars.peek() else {
                    return Err(parse_error(text.len(), "", "unclosed `(`"));
                };
                if !c.is_ascii_digit() {
                    return Err(parse_error(start, c.to_string(), "expected a point number"));
                }
                let mut token = String::new();
                while let Some((_, d)) = chars.next_if(|(_, d)| d.is_ascii_digit()) {
                    token.push(d);
                }
                cycle.push(RawPoint {
                    value: token.parse().ok(),
                    offset: start,
                    token,
                });
                skip_ws(&mut chars);
                match chars.next() {
                    Some((_, ',')) => continue,
                    Some((_, ')')) => break,
                    Some((at, other)) => {
                        return Err(parse_error(at, other.to_string(), "expected `,` or `)`"))
                    }
                    None => return Err(parse_error(text.len(), "", "unclosed `(`")),
                }
            }
        }
        cycles.push(cycle);
        skip_ws(&mut chars);
        // Products may be written with an explicit composition sign.
        if chars.next_if(|&(_, c)| c == '∘' || c == '*').is_some() {
            skip_ws(&mut chars);
            if chars.peek().is_none() {
                return Err(parse_error(text.len(), "", "dangling composition sign"));
            }
        }
    }
    Ok(cycles)
}

fn build_from_raw(raw: &[Vec<RawPoint>], degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let mut used = vec![false; degree];
    let mut cycles = Vec::with_capacity(raw.len());
    for cycle in raw {
        let mut points = Vec::with_capacity(cycle.len());
        for rp in cycle {
            let p = match rp.value {
                Some(p) if (1..=degree).contains(&p) => p,
                _ => {
                    return Err(parse_error(
                        rp.offset,
                        rp.token.clone(),
                        format!("point out of range 1..={degree}"),
                    ))
                }
            };
            if std::mem::replace(&mut used[p - 1], true) {
                return Err(parse_error(rp.offset, rp.token.clone(), "duplicate point"));
            }
            points.push(p);
        }
        cycles.push(points);
    }
    Permutation::from_cycles(degree, &cycles)
}

/// Parses a product of disjoint cycles such as `(1,2,3)(4,5)` over `{1, ..., degree}`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    build_from_raw(&parse_raw(text)?, degree)
}

/// Like [`parse_cycles`], but the degree defaults to the largest point mentioned.
pub fn parse_cycles_inferred(text: &str, degree: Option<usize>) -> Result<Permutation> {
    let raw = parse_raw(text)?;
    let degree = match degree {
        Some(n) => n,
        None => raw
            .iter()
            .flatten()
            .map(|rp| rp.value.unwrap_or(usize::MAX))
            .max()
            .ok_or_else(|| {
                Error::InvalidArgument("no points mentioned; the degree must be given".into())
            })?,
    };
    if degree == usize::MAX {
        return Err(parse_error(0, text, "point number too large"));
    }
    build_from_raw(&raw, degree)
}
