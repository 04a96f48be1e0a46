//! Ballot spaces: single cyclic orders, ROLO ballots (a center with chosen
//! right and left neighbours) and, for n = 4, TRAD ballots (an opposite pair
//! plus one directed adjacency). S_n acts on every kind by relabeling.

use crate::cyclic_orders::{
    act_on_order, canonicalize, enumerate_orders, CyclicOrder, OrderingKind, OrderingTable,
};
use crate::error::{Error, Result};
use crate::representation::ActionSpace;
use crate::symmetric_group::{label, Permutation};
use std::collections::HashMap;
use std::fmt;

/// `⟨center | right, left⟩`: `right` sits immediately before `center` when
/// reading the order and `left` immediately after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoloBallot {
    pub center: usize,
    pub right: usize,
    pub left: usize,
}

impl RoloBallot {
    pub fn new(center: usize, right: usize, left: usize) -> Result<Self> {
        if center == right || right == left || left == center {
            return Err(Error::InvalidBallot(format!("{center}|{right},{left}")));
        }
        Ok(RoloBallot { center, right, left })
    }
}

impl fmt::Display for RoloBallot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{},{}", label(self.center), label(self.right), label(self.left))
    }
}

/// `XY-ZW`: X and Y sit opposite each other, Z sits immediately before W.
///
/// For four agents the opposite pair determines the other one, so the pair is
/// normalised to the one containing label 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TradBallot {
    pub opposite: (usize, usize),
    pub adjacency: (usize, usize),
}

impl TradBallot {
    pub fn new(x: usize, y: usize, z: usize, w: usize) -> Result<Self> {
        let bad = || Error::InvalidBallot(format!("{x}{y}-{z}{w}"));
        if [x, y, z, w].iter().any(|&v| v >= 4) || x == y || z == w {
            return Err(bad());
        }
        let in_pair = |v: usize| v == x || v == y;
        if in_pair(z) == in_pair(w) {
            return Err(bad());
        }
        let (a, b) = if x == 0 || y == 0 {
            (x.min(y), x.max(y))
        } else {
            let rest: Vec<usize> = (0..4).filter(|&v| v != x && v != y).collect();
            (rest[0], rest[1])
        };
        Ok(TradBallot {
            opposite: (a, b),
            adjacency: (z, w),
        })
    }

    fn opposite_of(&self, v: usize) -> usize {
        let (a, b) = self.opposite;
        if v == a {
            return b;
        }
        if v == b {
            return a;
        }
        let rest: Vec<usize> = (0..4).filter(|&u| u != a && u != b).collect();
        if v == rest[0] {
            rest[1]
        } else {
            rest[0]
        }
    }
}

impl fmt::Display for TradBallot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.opposite;
        let (z, w) = self.adjacency;
        write!(f, "{}{}-{}{}", label(x), label(y), label(z), label(w))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ballot {
    Cyclic(CyclicOrder),
    Rolo(RoloBallot),
    Trad(TradBallot),
}

impl fmt::Display for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ballot::Cyclic(x) => write!(f, "{x}"),
            Ballot::Rolo(b) => write!(f, "{b}"),
            Ballot::Trad(b) => write!(f, "{b}"),
        }
    }
}

fn letter(c: u8) -> Result<usize> {
    if c.is_ascii_uppercase() {
        Ok((c - b'A') as usize)
    } else {
        Err(Error::Parse(format!("expected an uppercase label, got {:?}", c as char)))
    }
}

impl Ballot {
    /// Parses `(ACBD)`, `A|D,C` or `AB-DA`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a ballot: {s:?}"));
        if s.starts_with('(') {
            return CyclicOrder::parse(s).map(Ballot::Cyclic);
        }
        if let Some((c, rest)) = s.split_once('|') {
            let (r, l) = rest.split_once(',').ok_or_else(bad)?;
            let [c, r, l] = [c, r, l].map(str::as_bytes);
            if c.len() != 1 || r.len() != 1 || l.len() != 1 {
                return Err(bad());
            }
            return Ok(Ballot::Rolo(RoloBallot::new(letter(c[0])?, letter(r[0])?, letter(l[0])?)?));
        }
        if let Some((pair, adj)) = s.split_once('-') {
            let (p, a) = (pair.as_bytes(), adj.as_bytes());
            if p.len() != 2 || a.len() != 2 {
                return Err(bad());
            }
            return Ok(Ballot::Trad(TradBallot::new(
                letter(p[0])?,
                letter(p[1])?,
                letter(a[0])?,
                letter(a[1])?,
            )?));
        }
        Err(bad())
    }

    fn labels_below(&self, n: usize) -> bool {
        match self {
            Ballot::Cyclic(x) => x.degree() == n,
            Ballot::Rolo(b) => b.center < n && b.right < n && b.left < n,
            Ballot::Trad(_) => n == 4,
        }
    }
}

/// Componentwise relabeling of a ballot.
pub fn act_on_ballot(sigma: &Permutation, b: &Ballot) -> Result<Ballot> {
    let n = sigma.degree();
    if !b.labels_below(n) {
        return Err(Error::DegreeMismatch(n, ballot_degree_hint(b)));
    }
    let s = |v: usize| sigma.apply(v);
    Ok(match b {
        Ballot::Cyclic(x) => Ballot::Cyclic(act_on_order(sigma, x)?),
        Ballot::Rolo(r) => Ballot::Rolo(RoloBallot {
            center: s(r.center),
            right: s(r.right),
            left: s(r.left),
        }),
        Ballot::Trad(t) => Ballot::Trad(TradBallot::new(
            s(t.opposite.0),
            s(t.opposite.1),
            s(t.adjacency.0),
            s(t.adjacency.1),
        )?),
    })
}

fn ballot_degree_hint(b: &Ballot) -> usize {
    match b {
        Ballot::Cyclic(x) => x.degree(),
        Ballot::Rolo(r) => r.center.max(r.right).max(r.left) + 1,
        Ballot::Trad(_) => 4,
    }
}

/// The unique cyclic order satisfying every constraint of the ballot.
/// ROLO ballots determine an order only for four agents.
pub fn favorite_order(b: &Ballot, n: usize) -> Result<CyclicOrder> {
    match b {
        Ballot::Cyclic(x) => Ok(x.clone()),
        Ballot::Rolo(r) => {
            if n != 4 {
                return Err(Error::Unsupported(format!(
                    "ROLO ballot {r} does not determine a unique order for n = {n}"
                )));
            }
            let rest = (0..4).find(|v| ![r.center, r.right, r.left].contains(v)).expect("fourth label");
            canonicalize(&[r.right, r.center, r.left, rest])
        }
        Ballot::Trad(t) => {
            let (z, w) = t.adjacency;
            canonicalize(&[z, w, t.opposite_of(z), t.opposite_of(w)])
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BallotKind {
    Cyclic,
    Rolo,
    Trad,
}

impl BallotKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "co" | "cyclic" => Ok(BallotKind::Cyclic),
            "rolo" => Ok(BallotKind::Rolo),
            "trad" => Ok(BallotKind::Trad),
            _ => Err(Error::Parse(format!("unknown ballot kind {s:?}"))),
        }
    }
}

impl fmt::Display for BallotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BallotKind::Cyclic => "cyclic",
            BallotKind::Rolo => "rolo",
            BallotKind::Trad => "trad",
        })
    }
}

/// The 24 ROLO ballots for n = 4, grouped by favourite order.
pub const REFERENCE_ROLO_4: [&str; 24] = [
    "A|D,C", "B|C,D", "D|B,A", "C|A,B", //
    "C|B,A", "D|A,B", "A|C,D", "B|D,C", //
    "A|D,B", "C|B,D", "B|A,C", "D|C,A", //
    "B|C,A", "D|A,C", "C|D,B", "A|B,D", //
    "D|B,C", "A|C,B", "B|A,D", "C|D,A", //
    "C|A,D", "B|D,A", "D|C,B", "A|B,C",
];

/// Equivariant bijection from ROLO to TRAD ballots for n = 4:
/// `⟨c | r, l⟩ ↦ {c, x}-rc` where `x` is the agent seated opposite `c`.
pub fn rolo_to_trad(r: &RoloBallot) -> Result<TradBallot> {
    let x = (0..4)
        .find(|v| ![r.center, r.right, r.left].contains(v))
        .ok_or_else(|| Error::Unsupported("ROLO to TRAD needs n = 4".into()))?;
    TradBallot::new(r.center, x, r.right, r.center)
}

/// An indexed ballot set with its S_n action.
#[derive(Clone, Debug)]
pub struct BallotSpace {
    kind: BallotKind,
    n: usize,
    ordering: OrderingKind,
    ballots: Vec<Ballot>,
    index: HashMap<Ballot, usize>,
    orders: Option<OrderingTable>,
}

impl PartialEq for BallotSpace {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.n == other.n && self.ordering == other.ordering
    }
}

impl Eq for BallotSpace {}

impl fmt::Display for BallotSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} ({})", self.kind, self.n, self.ordering)
    }
}

pub fn build_ballot_space(kind: BallotKind, n: usize, ordering: OrderingKind) -> Result<BallotSpace> {
    let unsupported = || Error::Unsupported(format!("{kind} ballots with n = {n} and {ordering} ordering"));
    let (ballots, orders): (Vec<Ballot>, Option<OrderingTable>) = match kind {
        BallotKind::Cyclic => {
            let t = enumerate_orders(n, ordering)?;
            (t.orders().iter().cloned().map(Ballot::Cyclic).collect(), Some(t))
        }
        BallotKind::Rolo => {
            if n < 3 {
                return Err(unsupported());
            }
            match ordering {
                OrderingKind::Paper if n == 4 => REFERENCE_ROLO_4
                    .iter()
                    .map(|s| Ballot::parse(s))
                    .collect::<Result<Vec<_>>>()
                    .map(|v| (v, None))?,
                OrderingKind::Paper => return Err(unsupported()),
                OrderingKind::Canonical => {
                    let mut v = Vec::new();
                    for c in 0..n {
                        for r in 0..n {
                            for l in 0..n {
                                if let Ok(b) = RoloBallot::new(c, r, l) {
                                    v.push(Ballot::Rolo(b));
                                }
                            }
                        }
                    }
                    (v, None)
                }
            }
        }
        BallotKind::Trad => {
            if n != 4 {
                return Err(unsupported());
            }
            match ordering {
                OrderingKind::Paper => {
                    let mut v = Vec::new();
                    for s in REFERENCE_ROLO_4 {
                        let Ballot::Rolo(r) = Ballot::parse(s)? else { unreachable!() };
                        v.push(Ballot::Trad(rolo_to_trad(&r)?));
                    }
                    (v, None)
                }
                OrderingKind::Canonical => {
                    let mut v = Vec::new();
                    for y in 1..4 {
                        for z in 0..4 {
                            for w in 0..4 {
                                if let Ok(b) = TradBallot::new(0, y, z, w) {
                                    v.push(Ballot::Trad(b));
                                }
                            }
                        }
                    }
                    v.sort();
                    (v, None)
                }
            }
        }
    };
    let index: HashMap<Ballot, usize> = ballots.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
    if index.len() != ballots.len() {
        return Err(Error::InvalidBallot("duplicate ballots in table".into()));
    }
    Ok(BallotSpace {
        kind,
        n,
        ordering,
        ballots,
        index,
        orders,
    })
}

impl BallotSpace {
    pub fn kind(&self) -> BallotKind {
        self.kind
    }

    pub fn ordering(&self) -> OrderingKind {
        self.ordering
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn len(&self) -> usize {
        self.ballots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ballots.is_empty()
    }

    pub fn get(&self, i: usize) -> &Ballot {
        &self.ballots[i]
    }

    pub fn index_of(&self, b: &Ballot) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Parses a ballot literal and looks it up in this space.
    pub fn parse_ballot(&self, s: &str) -> Result<usize> {
        let b = Ballot::parse(s)?;
        self.index_of(&b)
            .ok_or_else(|| Error::InvalidBallot(format!("{s:?} is not a ballot of {self}")))
    }

    /// The underlying ordering table, for cyclic spaces.
    pub fn orders(&self) -> Option<&OrderingTable> {
        self.orders.as_ref()
    }

    pub fn order(&self, i: usize) -> &CyclicOrder {
        match &self.ballots[i] {
            Ballot::Cyclic(x) => x,
            _ => panic!("not a cyclic ballot space"),
        }
    }

    pub fn favorite(&self, i: usize) -> Result<CyclicOrder> {
        favorite_order(&self.ballots[i], self.n)
    }
}

impl ActionSpace for BallotSpace {
    fn degree(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.ballots.len()
    }

    fn act_index(&self, sigma: &Permutation, i: usize) -> usize {
        let b = act_on_ballot(sigma, &self.ballots[i]).expect("degree checked by caller");
        self.index[&b]
    }
}
