//! Cyclic orders on `{0, …, n-1}`, stored rotated so that label 0 comes first.
//!
//! S_n acts on the left by relabeling. Two orders are one *step* apart when
//! they differ by swapping two cyclically adjacent seats; distances below are
//! shortest paths in that graph.

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::symmetric_group::{
    all_permutations, label, parse_labels, ClassFunction, Partition, Permutation,
};
use num::{BigInt, Integer, Zero};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicOrder {
    seq: Vec<usize>,
}

impl CyclicOrder {
    pub fn degree(&self) -> usize {
        self.seq.len()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// `(0, 1, …, n-1)`.
    pub fn identity(n: usize) -> Self {
        CyclicOrder {
            seq: (0..n).collect(),
        }
    }

    /// Label immediately after `x` when reading the order.
    pub fn successor(&self, x: usize) -> usize {
        let i = self.position(x);
        self.seq[(i + 1) % self.seq.len()]
    }

    pub fn predecessor(&self, x: usize) -> usize {
        let n = self.seq.len();
        let i = self.position(x);
        self.seq[(i + n - 1) % n]
    }

    fn position(&self, x: usize) -> usize {
        self.seq.iter().position(|&y| y == x).expect("label in range")
    }

    /// Parses `(ACBD)` or `(0,2,1,3)`; parentheses are optional.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(t);
        let labels =
            parse_labels(body).ok_or_else(|| Error::Parse(format!("not a cyclic order: {s:?}")))?;
        canonicalize(&labels)
    }

    /// The orders reachable by swapping one pair of cyclically adjacent seats.
    pub fn step_neighbors(&self) -> Vec<CyclicOrder> {
        let n = self.seq.len();
        if n < 3 {
            return Vec::new();
        }
        (0..n)
            .map(|i| {
                let mut s = self.seq.clone();
                s.swap(i, (i + 1) % n);
                rotate_to_zero(s)
            })
            .collect()
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.seq.len() <= 26 {
            let s: String = self.seq.iter().map(|&i| label(i)).collect();
            write!(f, "({s})")
        } else {
            let s: Vec<String> = self.seq.iter().map(ToString::to_string).collect();
            write!(f, "({})", s.join(","))
        }
    }
}

fn rotate_to_zero(mut seq: Vec<usize>) -> CyclicOrder {
    let k = seq.iter().position(|&x| x == 0).unwrap_or(0);
    seq.rotate_left(k);
    CyclicOrder { seq }
}

/// The unique rotation of `raw` that starts with label 0.
pub fn canonicalize(raw: &[usize]) -> Result<CyclicOrder> {
    let n = raw.len();
    let mut seen = vec![false; n];
    for &x in raw {
        if x >= n || seen[x] {
            return Err(Error::InvalidCyclicOrder(format!("{raw:?}")));
        }
        seen[x] = true;
    }
    if n == 0 {
        return Err(Error::InvalidCyclicOrder("empty".into()));
    }
    Ok(rotate_to_zero(raw.to_vec()))
}

/// Left action: relabel every seat by `sigma`.
pub fn act_on_order(sigma: &Permutation, x: &CyclicOrder) -> Result<CyclicOrder> {
    if sigma.degree() != x.degree() {
        return Err(Error::DegreeMismatch(sigma.degree(), x.degree()));
    }
    Ok(rotate_to_zero(x.seq.iter().map(|&i| sigma.apply(i)).collect()))
}

pub fn reverse_order(x: &CyclicOrder) -> CyclicOrder {
    let mut s = x.seq.clone();
    s.reverse();
    rotate_to_zero(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderingKind {
    /// The hand-picked listings used in the figures (n = 4, 5 only).
    Paper,
    /// Lexicographic on the canonical sequence.
    Canonical,
}

impl OrderingKind {
    /// Fixed reference ordering where one exists, canonical otherwise.
    pub fn default_for(n: usize) -> Self {
        if n == 4 || n == 5 {
            OrderingKind::Paper
        } else {
            OrderingKind::Canonical
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(OrderingKind::Paper),
            "canonical" => Ok(OrderingKind::Canonical),
            _ => Err(Error::Parse(format!("unknown ordering {s:?}"))),
        }
    }
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderingKind::Paper => "paper",
            OrderingKind::Canonical => "canonical",
        })
    }
}

pub const REFERENCE_ORDER_4: [&str; 6] = ["ACBD", "ADBC", "ABCD", "ADCB", "ABDC", "ACDB"];

pub const REFERENCE_ORDER_5: [&str; 24] = [
    "ABCDE", "AEDCB", "ABCED", "ADECB", "ABDCE", "AECDB", //
    "ABDEC", "ACEDB", "ABECD", "ADCEB", "ABEDC", "ACDEB", //
    "ACBDE", "AEDBC", "ACDBE", "AEBDC", "ACEBD", "ADBEC", //
    "ADBCE", "AECBD", "AEBCD", "ADCBE", "ACBED", "ADEBC",
];

/// An indexed listing of all (n-1)! cyclic orders.
#[derive(Clone, Debug)]
pub struct OrderingTable {
    n: usize,
    kind: OrderingKind,
    orders: Vec<CyclicOrder>,
    index: HashMap<CyclicOrder, usize>,
}

impl OrderingTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    pub fn orders(&self) -> &[CyclicOrder] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn get(&self, i: usize) -> &CyclicOrder {
        &self.orders[i]
    }

    pub fn index_of(&self, x: &CyclicOrder) -> Option<usize> {
        self.index.get(x).copied()
    }
}

pub fn enumerate_orders(n: usize, kind: OrderingKind) -> Result<OrderingTable> {
    if n == 0 {
        return Err(Error::Unsupported("cyclic orders need n >= 1".into()));
    }
    let orders: Vec<CyclicOrder> = match (kind, n) {
        (OrderingKind::Paper, 4) => REFERENCE_ORDER_4.iter().map(|s| CyclicOrder::parse(s)).collect::<Result<_>>()?,
        (OrderingKind::Paper, 5) => REFERENCE_ORDER_5.iter().map(|s| CyclicOrder::parse(s)).collect::<Result<_>>()?,
        (OrderingKind::Paper, _) => {
            return Err(Error::Unsupported(format!("no reference ordering for n = {n}")))
        }
        (OrderingKind::Canonical, _) => all_permutations(n - 1)
            .into_iter()
            .map(|p| {
                let mut seq = vec![0];
                seq.extend(p.images().iter().map(|&i| i + 1));
                CyclicOrder { seq }
            })
            .collect(),
    };
    let index = orders.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
    Ok(OrderingTable {
        n,
        kind,
        orders,
        index,
    })
}

/// Number of cyclic orders fixed by `sigma`, by direct enumeration.
pub fn count_fixed_orders(sigma: &Permutation) -> usize {
    let n = sigma.degree();
    let table = enumerate_orders(n, OrderingKind::Canonical).expect("n >= 1");
    table
        .orders()
        .iter()
        .filter(|x| act_on_order(sigma, x).expect("same degree") == **x)
        .count()
}

fn totient(d: usize) -> usize {
    (1..=d).filter(|k| k.gcd(&d) == 1).count()
}

/// The permutation character of S_n on cyclic orders in closed form:
/// nonzero only on classes `d^e` with `de = n`, where it equals `e! d^e φ(d) / n`.
pub fn co_character(n: usize) -> ClassFunction {
    ClassFunction::from_fn(n, |mu: &Partition| {
        let d = mu.parts()[0];
        if mu.parts().iter().any(|&p| p != d) {
            return Q::zero();
        }
        let e = n / d;
        let mut num = BigInt::from(1);
        for k in 1..=e {
            num *= k;
        }
        num *= BigInt::from(d).pow(e as u32);
        num *= totient(d);
        Q::new(num, BigInt::from(n))
    })
}

/// All-pairs step distances on CO_n, indexed by the canonical ordering.
#[derive(Debug)]
pub struct DistanceTable {
    table: OrderingTable,
    dist: Vec<u8>,
}

impl DistanceTable {
    pub fn build(n: usize) -> Result<Self> {
        let table = enumerate_orders(n, OrderingKind::Canonical)?;
        let size = table.len();
        let neighbors: Vec<Vec<usize>> = table
            .orders()
            .iter()
            .map(|x| {
                x.step_neighbors()
                    .iter()
                    .map(|y| table.index_of(y).expect("neighbor is a cyclic order"))
                    .collect()
            })
            .collect();
        let mut dist = vec![u8::MAX; size * size];
        let mut queue = VecDeque::new();
        for src in 0..size {
            let row = &mut dist[src * size..(src + 1) * size];
            row[src] = 0;
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                for &v in &neighbors[u] {
                    if row[v] == u8::MAX {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        Ok(DistanceTable { table, dist })
    }

    pub fn distance(&self, x: &CyclicOrder, y: &CyclicOrder) -> usize {
        let size = self.table.len();
        let i = self.table.index_of(x).expect("order of this degree");
        let j = self.table.index_of(y).expect("order of this degree");
        self.dist[i * size + j] as usize
    }
}

static DISTANCE_CACHE: OnceLock<Mutex<HashMap<usize, Arc<DistanceTable>>>> = OnceLock::new();

/// Shared, lazily built distance table for degree `n`.
pub fn distance_table(n: usize) -> Result<Arc<DistanceTable>> {
    let cache = DISTANCE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Ok(Arc::clone(t));
    }
    // built outside the lock; a racing builder produces an identical table
    let built = Arc::new(DistanceTable::build(n)?);
    let mut guard = cache.lock().expect("cache lock");
    Ok(Arc::clone(guard.entry(n).or_insert(built)))
}

pub fn transposition_distance(x: &CyclicOrder, y: &CyclicOrder) -> Result<usize> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree()));
    }
    Ok(distance_table(x.degree())?.distance(x, y))
}

/// Names for the orbits of pairs `(outcome, ballot)` for n = 4 and n = 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairName {
    Same,
    Reversal,
    Transposition,
    TranspositionReversal,
    ThreeCycle,
    DoubleTransposition,
    Step,
    StepReversal,
}

impl PairName {
    pub const ALL: [PairName; 8] = [
        PairName::Same,
        PairName::Reversal,
        PairName::Transposition,
        PairName::TranspositionReversal,
        PairName::ThreeCycle,
        PairName::DoubleTransposition,
        PairName::Step,
        PairName::StepReversal,
    ];

    /// The class obtained by reversing the second order of the pair.
    pub fn partner(self) -> PairName {
        use PairName::*;
        match self {
            Same => Reversal,
            Reversal => Same,
            Transposition => TranspositionReversal,
            TranspositionReversal => Transposition,
            ThreeCycle => DoubleTransposition,
            DoubleTransposition => ThreeCycle,
            Step => StepReversal,
            StepReversal => Step,
        }
    }
}

impl fmt::Display for PairName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Orbit of a pair of cyclic orders under the diagonal action.
///
/// The representative has first component `(0 1 … n-1)`; the second component
/// is the least order (lexicographically) in its orbit under the stabilizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairClass {
    pub representative: (CyclicOrder, CyclicOrder),
    pub name: Option<PairName>,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = &self.representative;
        match self.name {
            Some(name) => write!(f, "{name} {x} {y}"),
            None => write!(f, "- {x} {y}"),
        }
    }
}

/// Relabeling taking `x` to `(0 1 … n-1)`.
fn normalizer(x: &CyclicOrder) -> Permutation {
    let mut images = vec![0; x.degree()];
    for (i, &v) in x.seq.iter().enumerate() {
        images[v] = i;
    }
    Permutation::new(images).expect("cyclic order is a bijection")
}

fn orbit_representative(x: &CyclicOrder, y: &CyclicOrder) -> CyclicOrder {
    let n = x.degree();
    let to_identity = normalizer(x);
    let y0 = act_on_order(&to_identity, y).expect("same degree");
    // the stabilizer of (0 1 … n-1) is generated by i -> i+1 mod n
    let rot = Permutation::long_cycle(n);
    let mut best = y0.clone();
    let mut cur = y0;
    for _ in 1..n {
        cur = act_on_order(&rot, &cur).expect("same degree");
        if cur < best {
            best = cur.clone();
        }
    }
    best
}

fn name_table(n: usize) -> HashMap<CyclicOrder, PairName> {
    use PairName::*;
    let anchors: Vec<(&str, PairName)> = match n {
        4 => vec![("ACBD", Same), ("ADBC", Reversal), ("ABCD", Transposition)],
        5 => vec![
            ("ABCDE", Same),
            ("AEDCB", Reversal),
            ("ABCED", Transposition),
            ("ADECB", TranspositionReversal),
            ("ABDEC", ThreeCycle),
            ("ACEDB", DoubleTransposition),
            ("ACEBD", Step),
            ("ADBEC", StepReversal),
        ],
        _ => return HashMap::new(),
    };
    let base = CyclicOrder::parse(anchors[0].0).expect("anchor literal");
    anchors
        .into_iter()
        .map(|(s, name)| {
            let y = CyclicOrder::parse(s).expect("anchor literal");
            (orbit_representative(&base, &y), name)
        })
        .collect()
}

/// Classifies `(x, y)` up to simultaneous relabeling. In a scoring matrix the
/// cell in row `x` (outcome) and column `y` (ballot) carries this class.
pub fn classify_pair(x: &CyclicOrder, y: &CyclicOrder) -> Result<PairClass> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree()));
    }
    let n = x.degree();
    let rep = orbit_representative(x, y);
    let name = name_table(n).get(&rep).copied();
    Ok(PairClass {
        representative: (CyclicOrder::identity(n), rep),
        name,
    })
}

/// Every orbit of CO_n × CO_n with its size, in order of representative.
pub fn pair_orbits(n: usize) -> Result<Vec<(PairClass, usize)>> {
    let table = enumerate_orders(n, OrderingKind::Canonical)?;
    let mut counts: HashMap<PairClass, usize> = HashMap::new();
    for x in table.orders() {
        for y in table.orders() {
            *counts.entry(classify_pair(x, y)?).or_default() += 1;
        }
    }
    let mut out: Vec<_> = counts.into_iter().collect();
    out.sort();
    Ok(out)
}
