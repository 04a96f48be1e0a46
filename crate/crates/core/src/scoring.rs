//! Neutral scoring matrices. Row `h` is an outcome (cyclic order), column `g`
//! a ballot, and the entry is the points ballot `g` gives to outcome `h`.

use crate::ballots::{build_ballot_space, Ballot, BallotKind, BallotSpace};
use crate::cyclic_orders::{
    classify_pair, transposition_distance, CyclicOrder, OrderingKind, PairName,
};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{format_q, parse_q, q, Q};
use crate::representation::ActionSpace;
use crate::symmetric_group::generators;
use log::warn;
use num::Zero;
use std::fmt;

#[derive(Clone, Debug)]
pub struct ScoringMatrix {
    pub rule_name: String,
    outcomes: BallotSpace,
    ballots: BallotSpace,
    entries: Matrix,
}

impl ScoringMatrix {
    pub fn new(rule_name: impl Into<String>, outcomes: BallotSpace, ballots: BallotSpace, entries: Matrix) -> Result<Self> {
        if outcomes.kind() != BallotKind::Cyclic {
            return Err(Error::SpaceMismatch("outcomes must be cyclic orders".into()));
        }
        if outcomes.degree() != ballots.degree() {
            return Err(Error::DegreeMismatch(outcomes.degree(), ballots.degree()));
        }
        linalg::check_len(outcomes.len(), entries.len())?;
        for row in &entries {
            linalg::check_len(ballots.len(), row.len())?;
        }
        Ok(ScoringMatrix {
            rule_name: rule_name.into(),
            outcomes,
            ballots,
            entries,
        })
    }

    pub fn outcomes(&self) -> &BallotSpace {
        &self.outcomes
    }

    pub fn ballots(&self) -> &BallotSpace {
        &self.ballots
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn entry(&self, outcome: usize, ballot: usize) -> &Q {
        &self.entries[outcome][ballot]
    }

    /// `s(ballot, outcome)` looked up by value.
    pub fn score(&self, ballot: &Ballot, outcome: &CyclicOrder) -> Option<&Q> {
        let g = self.ballots.index_of(ballot)?;
        let h = self.outcomes.index_of(&Ballot::Cyclic(outcome.clone()))?;
        Some(&self.entries[h][g])
    }

    /// `entry[σh][σg] == entry[h][g]` for every cell and every generator σ.
    pub fn is_neutral(&self) -> bool {
        generators(self.outcomes.degree()).iter().all(|sigma| {
            (0..self.outcomes.len()).all(|h| {
                let sh = self.outcomes.act_index(sigma, h);
                (0..self.ballots.len()).all(|g| {
                    let sg = self.ballots.act_index(sigma, g);
                    self.entries[sh][sg] == self.entries[h][g]
                })
            })
        })
    }

    /// CSV: header row of ballot labels, then one row per outcome.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.ballots.ballots().iter().map(|b| csv_field(&b.to_string())).collect();
        out.push_str(&format!(",{}\n", header.join(",")));
        for (h, row) in self.entries.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(format_q).collect();
            out.push_str(&format!("{},{}\n", self.outcomes.get(h), cells.join(",")));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

/// A seed value `s(ballot, order)` propagated over its orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub ballot: Ballot,
    pub order: CyclicOrder,
    pub value: Q,
}

impl Seed {
    pub fn new(ballot: &str, order: &str, value: Q) -> Result<Self> {
        Ok(Seed {
            ballot: Ballot::parse(ballot)?,
            order: CyclicOrder::parse(order)?,
            value,
        })
    }
}

/// Seed file: lines `<ballot> <order> <rational>`, `#` starts a comment.
pub fn parse_seed_file(text: &str) -> Result<Vec<Seed>> {
    let mut seeds = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [ballot, order, value] = fields[..] else {
            return Err(Error::Parse(format!("seed line {}: expected 3 fields", lineno + 1)));
        };
        seeds.push(Seed {
            ballot: Ballot::parse(ballot)?,
            order: CyclicOrder::parse(order)?,
            value: parse_q(value)?,
        });
    }
    Ok(seeds)
}

/// Orbit label of every cell `(outcome, ballot)` under the diagonal action,
/// numbered in order of first appearance (row-major).
pub fn pair_orbit_ids(outcomes: &BallotSpace, ballots: &BallotSpace) -> Vec<Vec<usize>> {
    let rows = outcomes.len();
    let cols = ballots.len();
    let mut parent: Vec<usize> = (0..rows * cols).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for sigma in generators(outcomes.degree()) {
        let row_img: Vec<usize> = (0..rows).map(|h| outcomes.act_index(&sigma, h)).collect();
        let col_img: Vec<usize> = (0..cols).map(|g| ballots.act_index(&sigma, g)).collect();
        for h in 0..rows {
            for g in 0..cols {
                let a = find(&mut parent, h * cols + g);
                let b = find(&mut parent, row_img[h] * cols + col_img[g]);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut label = vec![usize::MAX; rows * cols];
    let mut next = 0;
    let mut ids = vec![vec![0; cols]; rows];
    for h in 0..rows {
        for g in 0..cols {
            let root = find(&mut parent, h * cols + g);
            if label[root] == usize::MAX {
                label[root] = next;
                next += 1;
            }
            ids[h][g] = label[root];
        }
    }
    ids
}

pub fn pair_orbit_count(outcomes: &BallotSpace, ballots: &BallotSpace) -> usize {
    pair_orbit_ids(outcomes, ballots)
        .iter()
        .flatten()
        .max()
        .map_or(0, |m| m + 1)
}

/// Propagates each seed over its orbit; cells in unseeded orbits are zero.
pub fn build_neutral_matrix(
    rule_name: &str,
    outcomes: &BallotSpace,
    ballots: &BallotSpace,
    seeds: &[Seed],
) -> Result<ScoringMatrix> {
    let ids = pair_orbit_ids(outcomes, ballots);
    let orbits = ids.iter().flatten().max().map_or(0, |m| m + 1);
    let mut values: Vec<Option<(Q, usize)>> = vec![None; orbits];
    for (k, seed) in seeds.iter().enumerate() {
        let g = ballots.index_of(&seed.ballot).ok_or_else(|| {
            Error::InvalidBallot(format!("seed ballot {} is not in {ballots}", seed.ballot))
        })?;
        let h = outcomes
            .index_of(&Ballot::Cyclic(seed.order.clone()))
            .ok_or_else(|| Error::InvalidCyclicOrder(format!("seed order {} is not in {outcomes}", seed.order)))?;
        let orbit = ids[h][g];
        match &values[orbit] {
            Some((v, first)) if *v != seed.value => {
                return Err(Error::SeedConflict(format!(
                    "seeds {} and {} lie in one orbit with values {} and {}",
                    first + 1,
                    k + 1,
                    format_q(v),
                    format_q(&seed.value)
                )));
            }
            Some((_, first)) => {
                warn!("seed {} repeats the orbit of seed {} with the same value", k + 1, first + 1);
            }
            None => values[orbit] = Some((seed.value.clone(), k)),
        }
    }
    let entries = ids
        .iter()
        .map(|row| {
            row.iter()
                .map(|&o| values[o].as_ref().map_or_else(Q::zero, |(v, _)| v.clone()))
                .collect()
        })
        .collect();
    ScoringMatrix::new(rule_name, outcomes.clone(), ballots.clone(), entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleFamily {
    /// CO4 ballots, parameters a, b, c (same, reversal, other).
    Generic4,
    /// ROLO4 ballots, parameters a..f.
    RoloGeneric,
    /// ROLO(x,1), one parameter.
    RoloX1,
    Rolo21,
    Trad21,
    /// CO5 ballots, parameters a..h.
    Generic5,
    /// CO5 ballots, points by step distance, weights w0..w4.
    Distance5,
    AdjustedDistance5,
}

impl RuleFamily {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "generic4" => RuleFamily::Generic4,
            "rolo_generic" => RuleFamily::RoloGeneric,
            "rolo_x1" => RuleFamily::RoloX1,
            "rolo21" => RuleFamily::Rolo21,
            "trad21" => RuleFamily::Trad21,
            "generic5" => RuleFamily::Generic5,
            "distance5" => RuleFamily::Distance5,
            "adjusted_distance5" => RuleFamily::AdjustedDistance5,
            _ => return Err(Error::Parse(format!("unknown rule family {s:?}"))),
        })
    }

    pub fn arity(self) -> usize {
        match self {
            RuleFamily::Generic4 => 3,
            RuleFamily::RoloGeneric => 6,
            RuleFamily::RoloX1 => 1,
            RuleFamily::Rolo21 | RuleFamily::Trad21 | RuleFamily::AdjustedDistance5 => 0,
            RuleFamily::Generic5 => 8,
            RuleFamily::Distance5 => 5,
        }
    }

    pub fn ballot_kind(self) -> BallotKind {
        match self {
            RuleFamily::RoloGeneric | RuleFamily::RoloX1 | RuleFamily::Rolo21 => BallotKind::Rolo,
            RuleFamily::Trad21 => BallotKind::Trad,
            _ => BallotKind::Cyclic,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            RuleFamily::Generic5 | RuleFamily::Distance5 | RuleFamily::AdjustedDistance5 => 5,
            _ => 4,
        }
    }
}

impl fmt::Display for RuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleFamily::Generic4 => "generic4",
            RuleFamily::RoloGeneric => "rolo_generic",
            RuleFamily::RoloX1 => "rolo_x1",
            RuleFamily::Rolo21 => "rolo21",
            RuleFamily::Trad21 => "trad21",
            RuleFamily::Generic5 => "generic5",
            RuleFamily::Distance5 => "distance5",
            RuleFamily::AdjustedDistance5 => "adjusted_distance5",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleParams {
    Family(RuleFamily, Vec<Q>),
    /// Arbitrary seeds over a ballot space; outcomes use the same degree and ordering.
    OrbitSeeds {
        kind: BallotKind,
        n: usize,
        ordering: OrderingKind,
        seeds: Vec<Seed>,
    },
}

const GENERIC4_ANCHORS: [&str; 3] = ["ACBD", "ADBC", "ABCD"];
const ROLO_ANCHORS: [&str; 6] = ["ACBD", "ADBC", "ABCD", "ADCB", "ABDC", "ACDB"];

fn reference_spaces(kind: BallotKind, n: usize) -> Result<(BallotSpace, BallotSpace)> {
    Ok((
        build_ballot_space(BallotKind::Cyclic, n, OrderingKind::Paper)?,
        build_ballot_space(kind, n, OrderingKind::Paper)?,
    ))
}

fn pair_name_index(name: PairName) -> usize {
    PairName::ALL.iter().position(|&p| p == name).expect("listed")
}

pub fn named_rule(rp: &RuleParams) -> Result<ScoringMatrix> {
    let (family, p) = match rp {
        RuleParams::OrbitSeeds { kind, n, ordering, seeds } => {
            let outcomes = build_ballot_space(BallotKind::Cyclic, *n, *ordering)?;
            let ballots = build_ballot_space(*kind, *n, *ordering)?;
            return build_neutral_matrix("orbit_seeds", &outcomes, &ballots, seeds);
        }
        RuleParams::Family(family, p) => (*family, p),
    };
    if p.len() != family.arity() {
        return Err(Error::Arity {
            family: family.to_string(),
            expected: family.arity(),
            actual: p.len(),
        });
    }
    let name = if p.is_empty() {
        family.to_string()
    } else {
        let ps: Vec<String> = p.iter().map(format_q).collect();
        format!("{family}({})", ps.join(","))
    };
    let (outcomes, ballots) = reference_spaces(family.ballot_kind(), family.degree())?;
    match family {
        RuleFamily::Generic4 => {
            let seeds = GENERIC4_ANCHORS
                .iter()
                .zip(p)
                .map(|(o, v)| Seed::new("(ACBD)", o, v.clone()))
                .collect::<Result<Vec<_>>>()?;
            build_neutral_matrix(&name, &outcomes, &ballots, &seeds)
        }
        RuleFamily::RoloGeneric => rolo_generic(&name, &outcomes, &ballots, p),
        RuleFamily::RoloX1 => rolo_generic(&name, &outcomes, &ballots, &rolo_x1_params(&p[0])),
        RuleFamily::Rolo21 => rolo_generic(&name, &outcomes, &ballots, &rolo_x1_params(&q(2))),
        RuleFamily::Trad21 => {
            // two points when both the opposite pair and the adjacency hold, one for either alone
            let anchor = Ballot::parse("AB-DA")?;
            let seeds = outcomes
                .ballots()
                .iter()
                .map(|b| {
                    let Ballot::Cyclic(h) = b else { unreachable!() };
                    Seed {
                        ballot: anchor.clone(),
                        order: h.clone(),
                        value: q(trad_points(&anchor, h)),
                    }
                })
                .collect::<Vec<_>>();
            build_neutral_matrix(&name, &outcomes, &ballots, &seeds)
        }
        RuleFamily::Generic5 => {
            let entries = cell_matrix(&outcomes, &ballots, |h, g| {
                let class = classify_pair(h, g)?;
                let pn = class.name.expect("every n = 5 orbit is named");
                Ok(p[pair_name_index(pn)].clone())
            })?;
            ScoringMatrix::new(name, outcomes, ballots, entries)
        }
        RuleFamily::Distance5 => {
            let entries = cell_matrix(&outcomes, &ballots, |h, g| {
                Ok(p[transposition_distance(g, h)?].clone())
            })?;
            ScoringMatrix::new(name, outcomes, ballots, entries)
        }
        RuleFamily::AdjustedDistance5 => {
            let weights = [2, 1, 0, -1, -2];
            let entries = cell_matrix(&outcomes, &ballots, |h, g| {
                let class = classify_pair(h, g)?;
                if matches!(class.name, Some(PairName::Step | PairName::StepReversal)) {
                    return Ok(Q::zero());
                }
                Ok(q(weights[transposition_distance(g, h)?]))
            })?;
            ScoringMatrix::new(name, outcomes, ballots, entries)
        }
    }
}

fn rolo_x1_params(x: &Q) -> Vec<Q> {
    vec![x.clone(), q(0), q(1), q(0), q(0), q(1)]
}

fn rolo_generic(name: &str, outcomes: &BallotSpace, ballots: &BallotSpace, p: &[Q]) -> Result<ScoringMatrix> {
    let seeds = ROLO_ANCHORS
        .iter()
        .zip(p)
        .map(|(o, v)| Seed::new("A|D,C", o, v.clone()))
        .collect::<Result<Vec<_>>>()?;
    build_neutral_matrix(name, outcomes, ballots, &seeds)
}

fn trad_points(ballot: &Ballot, h: &CyclicOrder) -> i64 {
    let Ballot::Trad(t) = ballot else { return 0 };
    let (x, y) = t.opposite;
    let (z, w) = t.adjacency;
    let opposite = h.successor(h.successor(x)) == y;
    let adjacent = h.successor(z) == w;
    opposite as i64 + adjacent as i64
}

fn cell_matrix(
    outcomes: &BallotSpace,
    ballots: &BallotSpace,
    mut f: impl FnMut(&CyclicOrder, &CyclicOrder) -> Result<Q>,
) -> Result<Matrix> {
    (0..outcomes.len())
        .map(|h| {
            (0..ballots.len())
                .map(|g| {
                    let Ballot::Cyclic(gx) = ballots.get(g) else {
                        return Err(Error::SpaceMismatch("expected cyclic ballots".into()));
                    };
                    f(outcomes.order(h), gx)
                })
                .collect()
        })
        .collect()
}
