//! Tallies, kernels, effective spaces, catalog decompositions, scaling reports
//! and masking profiles.

use crate::ballots::{Ballot, BallotKind, BallotSpace};
use crate::cyclic_orders::{CyclicOrder, OrderingKind};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{format_q, format_vec, parse_q, q, Q};
use crate::representation::ActionSpace;
use crate::scoring::ScoringMatrix;
use crate::symmetric_group::Partition;
use num::{One, Signed, Zero};
use std::fmt::Write as _;

/// Ballot weights over a space. Entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    space: BallotSpace,
    weights: Vec<Q>,
}

impl Profile {
    pub fn new(space: BallotSpace, weights: Vec<Q>) -> Result<Self> {
        linalg::check_len(space.len(), weights.len())?;
        Ok(Profile { space, weights })
    }

    pub fn from_ints(space: BallotSpace, weights: &[i64]) -> Result<Self> {
        Profile::new(space, crate::rational::from_ints(weights))
    }

    pub fn zeros(space: BallotSpace) -> Self {
        let weights = vec![Q::zero(); space.len()];
        Profile { space, weights }
    }

    pub fn space(&self) -> &BallotSpace {
        &self.space
    }

    pub fn weights(&self) -> &[Q] {
        &self.weights
    }

    /// Lines `<ballot>\t<rational>`; `#` comments; omitted ballots are zero.
    pub fn parse(space: BallotSpace, text: &str) -> Result<Self> {
        let mut weights = vec![Q::zero(); space.len()];
        let mut seen = vec![false; space.len()];
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(ballot), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(Error::Parse(format!("profile line {}: expected <ballot> <weight>", lineno + 1)));
            };
            let i = space.parse_ballot(ballot)?;
            if seen[i] {
                return Err(Error::Parse(format!("profile line {}: ballot {ballot} repeated", lineno + 1)));
            }
            seen[i] = true;
            weights[i] = parse_q(value)?;
        }
        Ok(Profile { space, weights })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (b, w) in self.space.ballots().iter().zip(&self.weights) {
            let _ = writeln!(out, "{b}\t{}", format_q(w));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally {
    pub outcomes: Vec<CyclicOrder>,
    pub scores: Vec<Q>,
    /// Indices of every outcome attaining the maximum score.
    pub winners: Vec<usize>,
}

impl Tally {
    pub fn winner_orders(&self) -> Vec<CyclicOrder> {
        self.winners.iter().map(|&i| self.outcomes[i].clone()).collect()
    }

    /// One line per outcome: order, score, `*` for winners and `-` otherwise.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (i, (x, s)) in self.outcomes.iter().zip(&self.scores).enumerate() {
            let flag = if self.winners.contains(&i) { "*" } else { "-" };
            let _ = writeln!(out, "{x}\t{}\t{flag}", format_q(s));
        }
        out
    }
}

pub fn argmax(scores: &[Q]) -> Vec<usize> {
    let Some(best) = scores.iter().max() else {
        return Vec::new();
    };
    (0..scores.len()).filter(|&i| &scores[i] == best).collect()
}

pub fn tally(m: &ScoringMatrix, p: &Profile) -> Result<Tally> {
    if m.ballots() != p.space() {
        return Err(Error::SpaceMismatch(format!("rule expects {}, profile is over {}", m.ballots(), p.space())));
    }
    let scores = linalg::mat_vec(m.entries(), p.weights());
    let outcomes = (0..m.outcomes().len()).map(|i| m.outcomes().order(i).clone()).collect();
    Ok(Tally {
        winners: argmax(&scores),
        outcomes,
        scores,
    })
}

pub fn kernel_basis(m: &ScoringMatrix) -> Vec<Vec<Q>> {
    linalg::null_space(m.entries(), m.ballots().len())
}

/// Basis of the orthogonal complement of the kernel, i.e. the row space.
pub fn effective_basis(m: &ScoringMatrix) -> Vec<Vec<Q>> {
    linalg::row_space(m.entries())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub lambda: Partition,
    /// Vectors as listed; they span the entry but may be dependent.
    pub vectors: Vec<Vec<Q>>,
}

impl CatalogEntry {
    fn new(label: &str, lambda: &[usize], vectors: Vec<Vec<Q>>) -> Self {
        CatalogEntry {
            label: label.to_string(),
            lambda: Partition::new(lambda.to_vec()).expect("valid partition"),
            vectors,
        }
    }

    /// Indices of a greedily chosen independent subset of `vectors`.
    pub fn basis_indices(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut rows: Matrix = Vec::new();
        for (i, v) in self.vectors.iter().enumerate() {
            rows.push(v.clone());
            if linalg::rank(&rows) == rows.len() {
                chosen.push(i);
            } else {
                rows.pop();
            }
        }
        chosen
    }

    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.basis_indices().into_iter().map(|i| self.vectors[i].clone()).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis_indices().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceCatalog {
    pub space: BallotSpace,
    pub entries: Vec<CatalogEntry>,
}

fn rows<const N: usize, const M: usize>(a: &[[i64; N]; M]) -> Vec<Vec<Q>> {
    a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

fn ones(n: usize) -> Vec<Q> {
    vec![Q::one(); n]
}

fn pair_differences(len: usize) -> Vec<Vec<Q>> {
    (0..len / 2)
        .map(|k| {
            let mut v = vec![Q::zero(); len];
            v[2 * k] = q(1);
            v[2 * k + 1] = q(-1);
            v
        })
        .collect()
}

/// Invariant subspace tables for CO4, ROLO4 and CO5 under the reference orderings.
pub fn subspace_catalog(space: &BallotSpace) -> Result<SubspaceCatalog> {
    if space.ordering() != OrderingKind::Paper {
        return Err(Error::Unsupported(format!("no subspace catalog for {space}")));
    }
    let entries = match (space.kind(), space.degree()) {
        (BallotKind::Cyclic, 4) => vec![
            CatalogEntry::new("T", &[4], vec![ones(6)]),
            CatalogEntry::new(
                "non_adjacency",
                &[2, 2],
                rows(&[[2, 2, -1, -1, -1, -1], [-1, -1, 2, 2, -1, -1], [-1, -1, -1, -1, 2, 2]]),
            ),
            CatalogEntry::new("reversal", &[2, 1, 1], pair_differences(6)),
        ],
        (BallotKind::Rolo, 4) => {
            let w = rows(&ROLO4_W);
            let u = rows(&ROLO4_U);
            vec![
                CatalogEntry::new("T", &[4], vec![ones(24)]),
                CatalogEntry::new("v", &[2, 2], rows(&ROLO4_V)),
                CatalogEntry::new("w1", &[2, 1, 1], w[0..3].to_vec()),
                CatalogEntry::new("w2", &[2, 1, 1], w[3..6].to_vec()),
                CatalogEntry::new("w3", &[2, 1, 1], w[6..9].to_vec()),
                CatalogEntry::new("sign", &[1, 1, 1, 1], rows(&ROLO4_SIGN)),
                CatalogEntry::new("u1", &[3, 1], u[0..3].to_vec()),
                CatalogEntry::new("u2", &[3, 1], u[3..6].to_vec()),
                CatalogEntry::new("u3", &[3, 1], u[6..9].to_vec()),
            ]
        }
        (BallotKind::Cyclic, 5) => vec![
            CatalogEntry::new("T", &[5], vec![ones(24)]),
            CatalogEntry::new("sign", &[1, 1, 1, 1, 1], rows(&CO5_SIGN)),
            CatalogEntry::new("y", &[2, 2, 1], rows(&CO5_Y)),
            CatalogEntry::new("z", &[3, 2], rows(&CO5_Z)),
            CatalogEntry::new("pairs", &[3, 1, 1], pair_differences(24)),
        ],
        _ => return Err(Error::Unsupported(format!("no subspace catalog for {space}"))),
    };
    Ok(SubspaceCatalog {
        space: space.clone(),
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileComponent {
    pub label: String,
    pub lambda: Partition,
    /// One coefficient per listed vector; dependent vectors get zero.
    pub coefficients: Vec<Q>,
    pub component: Vec<Q>,
}

/// Unique expansion of a vector over the catalog's independent vectors.
pub fn decompose_vector(v: &[Q], catalog: &SubspaceCatalog) -> Result<Vec<ProfileComponent>> {
    linalg::check_len(catalog.space.len(), v.len())?;
    let picks: Vec<Vec<usize>> = catalog.entries.iter().map(CatalogEntry::basis_indices).collect();
    let basis: Vec<Vec<Q>> = catalog
        .entries
        .iter()
        .zip(&picks)
        .flat_map(|(e, idx)| idx.iter().map(|&i| e.vectors[i].clone()))
        .collect();
    if linalg::rank(&basis) < catalog.space.len() {
        return Err(Error::CatalogDoesNotSpan(format!(
            "rank {} in a space of dimension {}",
            linalg::rank(&basis),
            catalog.space.len()
        )));
    }
    let coords = linalg::coordinates(&basis, v)
        .ok_or_else(|| Error::CatalogDoesNotSpan("vector outside the catalog span".into()))?;
    let mut k = 0;
    let mut out = Vec::new();
    for (e, idx) in catalog.entries.iter().zip(&picks) {
        let mut coefficients = vec![Q::zero(); e.vectors.len()];
        let mut component = vec![Q::zero(); v.len()];
        for &i in idx {
            coefficients[i] = coords[k].clone();
            component = linalg::add(&component, &linalg::scale(&e.vectors[i], &coords[k]));
            k += 1;
        }
        out.push(ProfileComponent {
            label: e.label.clone(),
            lambda: e.lambda.clone(),
            coefficients,
            component,
        });
    }
    Ok(out)
}

pub fn decompose_profile(p: &Profile, catalog: &SubspaceCatalog) -> Result<Vec<ProfileComponent>> {
    if p.space() != &catalog.space {
        return Err(Error::SpaceMismatch(format!("profile over {}, catalog for {}", p.space(), catalog.space)));
    }
    decompose_vector(p.weights(), catalog)
}

pub fn components_to_tsv(components: &[ProfileComponent]) -> String {
    let mut out = String::from("label\tpartition\tcoefficients\tcomponent\n");
    for c in components {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            c.label,
            c.lambda,
            format_vec(&c.coefficients),
            format_vec(&c.component)
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageExpansion {
    pub image: Vec<Q>,
    /// Expansion of the image over the outcome catalog, when one exists.
    pub terms: Vec<ProfileComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalingAction {
    Annihilated,
    Scalar(Q),
    /// One expansion per listed vector.
    Mapped(Vec<ImageExpansion>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingEntry {
    pub label: String,
    pub lambda: Partition,
    pub action: ScalingAction,
}

impl ScalingEntry {
    /// The multiplier, counting annihilation as zero.
    pub fn scalar(&self) -> Option<Q> {
        match &self.action {
            ScalingAction::Annihilated => Some(Q::zero()),
            ScalingAction::Scalar(k) => Some(k.clone()),
            ScalingAction::Mapped(_) => None,
        }
    }
}

/// Eigenvalue of `M Mᵀ` on an outcome catalog entry, if every listed vector is an eigenvector with one value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutcomeEigen {
    pub label: String,
    pub lambda: Partition,
    pub value: Option<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingReport {
    pub rule_name: String,
    pub entries: Vec<ScalingEntry>,
    pub eigen: Vec<OutcomeEigen>,
}

impl ScalingReport {
    pub fn entry(&self, label: &str) -> Option<&ScalingEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn eigenvalue(&self, label: &str) -> Option<&Q> {
        self.eigen.iter().find(|e| e.label == label)?.value.as_ref()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# rule {}\n", self.rule_name);
        for e in &self.entries {
            match &e.action {
                ScalingAction::Annihilated => {
                    let _ = writeln!(out, "{}\t{}\tannihilated", e.label, e.lambda);
                }
                ScalingAction::Scalar(k) => {
                    let _ = writeln!(out, "{}\t{}\tscalar\t{}", e.label, e.lambda, format_q(k));
                }
                ScalingAction::Mapped(images) => {
                    let _ = writeln!(out, "{}\t{}\tmapped", e.label, e.lambda);
                    for (i, img) in images.iter().enumerate() {
                        let _ = writeln!(out, "  [{}]\t{}", i + 1, format_vec(&img.image));
                        for t in img.terms.iter().filter(|t| !linalg::is_zero_vec(&t.coefficients)) {
                            let _ = writeln!(out, "    {}\t{}", t.label, format_vec(&t.coefficients));
                        }
                    }
                }
            }
        }
        for e in &self.eigen {
            let value = e.value.as_ref().map_or_else(|| "none".to_string(), format_q);
            let _ = writeln!(out, "mmt\t{}\t{}\t{}", e.label, e.lambda, value);
        }
        out
    }
}

/// Common `k` with `images[i] == k * vectors[i]` for all `i`.
fn common_scalar(vectors: &[Vec<Q>], images: &[Vec<Q>]) -> Option<Q> {
    let mut k: Option<Q> = None;
    for (v, w) in vectors.iter().zip(images) {
        let ki = linalg::scalar_multiple(v, w)?;
        match &k {
            Some(prev) if *prev != ki => return None,
            _ => k = Some(ki),
        }
    }
    k
}

pub fn scaling_report(m: &ScoringMatrix, catalog: &SubspaceCatalog) -> Result<ScalingReport> {
    if m.ballots() != &catalog.space {
        return Err(Error::SpaceMismatch(format!("rule ballots are {}, catalog is for {}", m.ballots(), catalog.space)));
    }
    let same_space = m.ballots() == m.outcomes();
    let outcome_catalog = subspace_catalog(m.outcomes()).ok();
    let mut entries = Vec::new();
    for e in &catalog.entries {
        let images: Vec<Vec<Q>> = e.vectors.iter().map(|v| linalg::mat_vec(m.entries(), v)).collect();
        let action = if images.iter().all(|w| linalg::is_zero_vec(w)) {
            ScalingAction::Annihilated
        } else if let Some(k) = same_space.then(|| common_scalar(&e.vectors, &images)).flatten() {
            ScalingAction::Scalar(k)
        } else {
            let expansions = images
                .into_iter()
                .map(|image| {
                    let terms = match &outcome_catalog {
                        Some(c) => decompose_vector(&image, c)?,
                        None => Vec::new(),
                    };
                    Ok(ImageExpansion { image, terms })
                })
                .collect::<Result<Vec<_>>>()?;
            ScalingAction::Mapped(expansions)
        };
        entries.push(ScalingEntry {
            label: e.label.clone(),
            lambda: e.lambda.clone(),
            action,
        });
    }
    let mut eigen = Vec::new();
    if let Some(c) = &outcome_catalog {
        let mmt = linalg::mat_mul(m.entries(), &linalg::transpose(m.entries()));
        for e in &c.entries {
            let images: Vec<Vec<Q>> = e.vectors.iter().map(|v| linalg::mat_vec(&mmt, v)).collect();
            eigen.push(OutcomeEigen {
                label: e.label.clone(),
                lambda: e.lambda.clone(),
                value: common_scalar(&e.vectors, &images),
            });
        }
    }
    Ok(ScalingReport {
        rule_name: m.rule_name.clone(),
        entries,
        eigen,
    })
}

/// Basis of the part of the effective space lying in the isotypic component of `lambda`.
pub fn effective_isotypic_basis(m: &ScoringMatrix, lambda: &Partition) -> Result<Vec<Vec<Q>>> {
    isotypic_part(m.ballots(), &effective_basis(m), lambda)
}

/// Basis of the part of the kernel lying in the isotypic component of `lambda`.
pub fn kernel_isotypic_basis(m: &ScoringMatrix, lambda: &Partition) -> Result<Vec<Vec<Q>>> {
    isotypic_part(m.ballots(), &kernel_basis(m), lambda)
}

fn isotypic_part(space: &BallotSpace, basis: &[Vec<Q>], lambda: &Partition) -> Result<Vec<Vec<Q>>> {
    // the subspace is invariant, so projecting its spanning set spans the intersection
    let p = crate::representation::isotypic_projector(space, lambda)?;
    let projected: Matrix = basis.iter().map(|v| linalg::mat_vec(&p, v)).collect();
    Ok(linalg::row_space(&projected))
}

/// A profile electing `target` alone while putting extra weight on ballots favouring the decoys.
///
/// Start from `Mᵀ e_target`, add `magnitude` times the kernel projection of a
/// weighted indicator of the decoys' ballots, then shift by the least multiple of the all-ones
/// profile that clears negative entries.
pub fn masking_profile(
    m: &ScoringMatrix,
    target: &CyclicOrder,
    decoys: &[CyclicOrder],
    magnitude: &Q,
) -> Result<Profile> {
    if !magnitude.is_positive() {
        return Err(Error::MaskingInfeasible("magnitude must be positive".into()));
    }
    if decoys.contains(target) {
        return Err(Error::MaskingInfeasible(format!("target {target} is also a decoy")));
    }
    let outcomes = m.outcomes();
    let t = outcomes
        .index_of(&Ballot::Cyclic(target.clone()))
        .ok_or_else(|| Error::InvalidCyclicOrder(format!("{target} is not an outcome")))?;
    let rows = m.entries();
    if linalg::is_zero_vec(&rows[t]) {
        return Err(Error::MaskingInfeasible("the rule gives the target no points".into()));
    }
    if let Some(h) = (0..rows.len()).find(|&h| h != t && rows[h] == rows[t]) {
        return Err(Error::MaskingInfeasible(format!(
            "the rule cannot separate {target} from {}",
            outcomes.get(h)
        )));
    }
    let ballots = m.ballots();
    // earlier decoys weigh more, so reversal-closed decoy sets do not cancel
    let mut indicator = vec![Q::zero(); ballots.len()];
    for (g, slot) in indicator.iter_mut().enumerate() {
        let fav = ballots.favorite(g)?;
        if let Some(k) = decoys.iter().position(|d| *d == fav) {
            *slot = q((decoys.len() - k) as i64);
        }
    }
    let boost = project_onto_kernel(m, &indicator);
    if linalg::is_zero_vec(&boost) {
        return Err(Error::MaskingInfeasible("the kernel carries no decoy weight".into()));
    }
    let mut weights = linalg::add(&rows[t], &linalg::scale(&boost, magnitude));
    let shift = weights.iter().min().cloned().unwrap_or_else(Q::zero);
    if shift.is_negative() {
        weights = weights.into_iter().map(|w| w - &shift).collect();
    }
    Profile::new(ballots.clone(), weights)
}

/// Orthogonal projection onto the kernel: `v` minus its row-space part.
fn project_onto_kernel(m: &ScoringMatrix, v: &[Q]) -> Vec<Q> {
    let kernel = kernel_basis(m);
    if kernel.is_empty() {
        return vec![Q::zero(); v.len()];
    }
    // solve (K Kᵀ) c = K v, then return Kᵀ c
    let gram: Matrix = kernel
        .iter()
        .map(|a| kernel.iter().map(|b| linalg::dot(a, b)).collect())
        .collect();
    let rhs: Vec<Q> = kernel.iter().map(|a| linalg::dot(a, v)).collect();
    let coeffs = solve(&gram, &rhs);
    kernel
        .iter()
        .zip(&coeffs)
        .fold(vec![Q::zero(); v.len()], |acc, (k, c)| linalg::add(&acc, &linalg::scale(k, c)))
}

/// Solves a nonsingular square system.
fn solve(a: &Matrix, b: &[Q]) -> Vec<Q> {
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, x)| row.iter().cloned().chain(std::iter::once(x.clone())).collect())
        .collect();
    let (r, _) = linalg::rref(&aug);
    let n = a.len();
    r.iter().take(n).map(|row| row[n].clone()).collect()
}


const ROLO4_V: [[i64; 24]; 4] = [
    [2, 2, 2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
    [-1, -1, -1, -1, -1, -1, -1, -1, 2, 2, 2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1],
    [2, 2, -2, -2, 2, 2, -2, -2, 1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1, 2, 2, -2, -2, 2, 2, -2, -2, 1, 1, -1, -1, 1, 1, -1, -1],
];

const ROLO4_W: [[i64; 24]; 9] = [
    [1, 1, 1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, -1, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0],
    [1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 1, -1],
    [0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, -1, 1],
    [0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0],
    [-1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

const ROLO4_SIGN: [[i64; 24]; 1] = [
    [1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1],
];

const ROLO4_U: [[i64; 24]; 9] = [
    [1, 1, -1, -1, -1, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 1, 1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, -1, -1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0],
    [1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, -1, 1],
    [0, 0, -1, 1, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, -1, 1],
    [1, -1, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0],
];

const CO5_SIGN: [[i64; 24]; 1] = [
    [1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1],
];

const CO5_Y: [[i64; 24]; 5] = [
    [5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1],
    [-1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1],
    [-1, -1, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5],
    [-1, -1, -1, -1, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5, -1, -1],
    [-1, -1, -1, -1, -1, -1, -1, -1, 5, 5, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
];

const CO5_Z: [[i64; 24]; 5] = [
    [5, 5, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -5, -5, -1, -1, 1, 1, -1, -1],
    [1, 1, 5, 5, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, -5, -5, -1, -1, 1, 1, -1, -1, 1, 1],
    [1, 1, -1, -1, 5, 5, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, -5, -5],
    [-1, -1, 1, 1, 1, 1, -1, -1, 5, 5, 1, 1, -5, -5, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1, 1, 1, 5, 5, -1, -1, 1, 1, -1, -1, -5, -5, -1, -1, 1, 1],
];
