//! The symmetric group S_n: permutations in one-line form, partitions and
//! conjugacy classes, and irreducible characters by the Murnaghan–Nakayama rule.
//!
//! Composition convention: `compose(p, q)` applies `q` first, then `p`, so
//! `compose(p, q)[i] = p[q[i]]`. Every action in the crate goes through it.

use crate::error::{Error, Result};
use crate::rational::{q, Q};
use num::{BigInt, BigRational, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A permutation of `{0, …, n-1}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The n-cycle `i -> i+1 mod n`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n || used[x] {
                    return Err(Error::InvalidPermutation(format!("{cycles:?}")));
                }
                used[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses `(0 1 2)(3 4)`, `(AB)(CD)`, `()` or a one-line word such as `BACD`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a permutation of degree {n}: {s:?}"));
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            let mut rest = s;
            while !rest.is_empty() {
                let body_end = rest.find(')').ok_or_else(bad)?;
                if !rest.starts_with('(') {
                    return Err(bad());
                }
                let body = &rest[1..body_end];
                let cycle = parse_labels(body).ok_or_else(bad)?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                rest = rest[body_end + 1..].trim_start();
            }
            Permutation::from_cycles(n, &cycles).map_err(|_| bad())
        } else {
            let images = parse_labels(s).ok_or_else(bad)?;
            if images.len() != n {
                return Err(bad());
            }
            Permutation::new(images).map_err(|_| bad())
        }
    }
}

/// Reads a label list: either uppercase letters (`ACB`) or integers separated
/// by spaces or commas (`0 2 1`, `0,2,1`).
pub(crate) fn parse_labels(body: &str) -> Option<Vec<usize>> {
    let body = body.trim();
    if body.is_empty() {
        return Some(Vec::new());
    }
    if body.chars().all(|c| c.is_ascii_uppercase()) {
        return Some(body.bytes().map(|b| (b - b'A') as usize).collect());
    }
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().ok())
        .collect()
}

pub(crate) fn label(i: usize) -> char {
    (b'A' + i as u8) as char
}

impl fmt::Display for Permutation {
    /// Cycle notation over 0-based integers; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// `p ∘ q`: apply `q` first, then `p`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree(), q.degree()));
    }
    Ok(Permutation {
        images: q.images.iter().map(|&i| p.images[i]).collect(),
    })
}

pub fn sign(p: &Permutation) -> i32 {
    let even_cycles = p.cycles().iter().filter(|c| c.len() % 2 == 0).count();
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn cycle_type(p: &Permutation) -> Partition {
    let n = p.degree();
    let mut parts: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
    let moved: usize = parts.iter().sum();
    parts.extend(std::iter::repeat(1).take(n - moved));
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts }
}

/// All permutations of degree `n` in lexicographic order of their one-line form.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation { images: cur.clone() }];
    while next_permutation(&mut cur) {
        out.push(Permutation { images: cur.clone() });
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// A generating set of S_n: the transposition (0 1) and the n-cycle.
pub fn generators(n: usize) -> Vec<Permutation> {
    match n {
        0 | 1 => vec![Permutation::identity(n)],
        2 => vec![Permutation::transposition(2, 0, 1)],
        _ => vec![Permutation::transposition(n, 0, 1), Permutation::long_cycle(n)],
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(1, 1, …, 1)`, the cycle type of the identity.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn single(n: usize) -> Self {
        Partition { parts: vec![n] }
    }

    /// Parses `5` or `3+1+1`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<usize>, _> =
            s.trim().split('+').map(|t| t.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| Error::Parse(format!("not a partition: {s:?}")))?;
        Partition::new(parts)
    }

    /// Size of the conjugacy class with this cycle type: `n! / Π k^{m_k} m_k!`.
    pub fn class_size(&self) -> u128 {
        let mut centralizer: u128 = 1;
        for (k, m) in self.multiplicities() {
            centralizer *= (k as u128).pow(m as u32) * factorial(m);
        }
        factorial(self.size()) / centralizer
    }

    fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// A permutation with this cycle type, built from consecutive labels.
    pub fn representative(&self) -> Permutation {
        let n = self.size();
        let mut cycles = Vec::new();
        let mut next = 0;
        for &p in &self.parts {
            cycles.push((next..next + p).collect::<Vec<_>>());
            next += p;
        }
        Permutation::from_cycles(n, &cycles).expect("disjoint consecutive cycles")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// All partitions of `n`, ascending in lexicographic order of their parts
/// (so `1+1+…+1` first and `n` last).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// One entry per conjugacy class: its cycle type and size.
pub fn enumerate_classes(n: usize) -> Vec<(Partition, u128)> {
    partitions(n)
        .into_iter()
        .map(|p| {
            let size = p.class_size();
            (p, size)
        })
        .collect()
}

/// A rational-valued function on the conjugacy classes of S_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Q>,
}

impl ClassFunction {
    /// Builds a class function by evaluating `f` on every partition of `n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Q) -> Self {
        let values = partitions(n).into_iter().map(|p| {
            let v = f(&p);
            (p, v)
        });
        ClassFunction {
            n,
            values: values.collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, class: &Partition) -> Q {
        self.values.get(class).cloned().unwrap_or_else(Q::zero)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.values.iter()
    }
}

type MemoKey = (Vec<usize>, Vec<usize>);

/// χ_λ(μ) by the Murnaghan–Nakayama rule.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::DegreeMismatch(lambda.size(), mu.size()));
    }
    let mut memo = HashMap::new();
    Ok(mn_rule(&lambda.parts, &mu.parts, &mut memo))
}

/// Removes rim hooks of length `mu[0]` from `lambda` using beta-numbers:
/// a rim hook of length r is a bead moving from b to b - r onto an empty
/// position, with sign given by the parity of the beads it jumps over.
fn mn_rule(lambda: &[usize], mu: &[usize], memo: &mut HashMap<MemoKey, i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i64;
    for &b in &beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next: Vec<usize> = beta.iter().map(|&c| if c == b { target } else { c }).collect();
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sub = mn_rule(&shape, rest, memo);
        if jumped % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total);
    total
}

/// The full character table of S_n, sharing one memo table across entries.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<(Partition, u128)>,
    values: BTreeMap<(Partition, Partition), i64>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let classes = enumerate_classes(n);
        let mut memo = HashMap::new();
        let mut values = BTreeMap::new();
        for (lambda, _) in &classes {
            for (mu, _) in &classes {
                let v = mn_rule(&lambda.parts, &mu.parts, &mut memo);
                values.insert((lambda.clone(), mu.clone()), v);
            }
        }
        CharacterTable { n, classes, values }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[(Partition, u128)] {
        &self.classes
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.classes.iter().map(|(p, _)| p)
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[&(lambda.clone(), mu.clone())]
    }

    /// dim S^λ = χ_λ(identity).
    pub fn dimension(&self, lambda: &Partition) -> i64 {
        self.value(lambda, &Partition::ones(self.n))
    }

    pub fn character(&self, lambda: &Partition) -> ClassFunction {
        ClassFunction::from_fn(self.n, |mu| q(self.value(lambda, mu)))
    }
}

pub(crate) fn big(n: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
