//! Permutation modules: characters, decomposition into irreducibles, and
//! isotypic projectors obtained by averaging over the whole group.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{q, Q};
use crate::symmetric_group::{
    all_permutations, big, cycle_type, enumerate_classes, factorial, CharacterTable,
    ClassFunction, Partition, Permutation,
};
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;

/// Projectors sum over all n! elements; this is the default ceiling on n.
pub const DEFAULT_MAX_DEGREE: usize = 7;

/// A permutation representation of S_n on the basis `0..dim`.
pub trait ActionSpace {
    fn degree(&self) -> usize;
    fn dim(&self) -> usize;
    /// Index of the basis element `sigma · i`.
    fn act_index(&self, sigma: &Permutation, i: usize) -> usize;

    /// The matrix of `sigma`: column `i` has a single one in row `sigma · i`.
    fn action_matrix(&self, sigma: &Permutation) -> Matrix {
        let d = self.dim();
        let mut m = linalg::zeros(d, d);
        for i in 0..d {
            m[self.act_index(sigma, i)][i] = Q::one();
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub degree: usize,
    pub space_dim: usize,
    /// Every partition of n, including those with multiplicity zero.
    pub rows: Vec<DecompositionRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionRow {
    pub partition: Partition,
    pub multiplicity: u64,
    pub dimension: u64,
}

impl DecompositionReport {
    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.rows
            .iter()
            .find(|r| &r.partition == lambda)
            .map_or(0, |r| r.multiplicity)
    }

    pub fn dimension(&self, lambda: &Partition) -> u64 {
        self.rows
            .iter()
            .find(|r| &r.partition == lambda)
            .map_or(0, |r| r.dimension)
    }

    pub fn total_dimension(&self) -> u64 {
        self.rows.iter().map(|r| r.multiplicity * r.dimension).sum()
    }

    /// TSV with one row per partition and a closing dimension check line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("partition\tmultiplicity\tdimension\ttotal\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                r.partition,
                r.multiplicity,
                r.dimension,
                r.multiplicity * r.dimension
            ));
        }
        let total = self.total_dimension();
        let status = if total == self.space_dim as u64 { "ok" } else { "MISMATCH" };
        out.push_str(&format!("# dimension sum {total} = {} {status}\n", self.space_dim));
        out
    }
}

/// `(1/n!) Σ_classes |C| χ1(C) χ2(C)`.
pub fn character_inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Q> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    let n = a.degree();
    let sum = enumerate_classes(n)
        .iter()
        .fold(Q::zero(), |acc, (mu, size)| acc + big(*size) * a.value(mu) * b.value(mu));
    Ok(sum / big(factorial(n)))
}

/// Character of a permutation module: fixed points of a class representative.
pub fn space_character<V: ActionSpace + ?Sized>(space: &V) -> ClassFunction {
    ClassFunction::from_fn(space.degree(), |mu| {
        let sigma = mu.representative();
        let fixed = (0..space.dim()).filter(|&i| space.act_index(&sigma, i) == i).count();
        q(fixed as i64)
    })
}

pub fn decompose_character(chi: &ClassFunction) -> Result<DecompositionReport> {
    let n = chi.degree();
    let table = CharacterTable::new(n);
    let mut rows = Vec::new();
    for lambda in table.partitions() {
        let m = character_inner_product(&table.character(lambda), chi)?;
        if !m.denom().is_one() || m < Q::zero() {
            return Err(Error::InvalidCharacter(format!(
                "multiplicity of {lambda} would be {}",
                crate::rational::format_q(&m)
            )));
        }
        let multiplicity: u64 = m.numer().try_into().map_err(|_| {
            Error::InvalidCharacter(format!("multiplicity of {lambda} is too large"))
        })?;
        rows.push(DecompositionRow {
            partition: lambda.clone(),
            multiplicity,
            dimension: table.dimension(lambda) as u64,
        });
    }
    let space_dim = chi.value(&Partition::ones(n));
    Ok(DecompositionReport {
        degree: n,
        space_dim: space_dim.to_integer().try_into().unwrap_or(0),
        rows,
    })
}

/// `P_λ = (dim λ / n!) Σ_g χ_λ(g) ρ(g)`.
pub fn isotypic_projector<V: ActionSpace + ?Sized>(space: &V, lambda: &Partition) -> Result<Matrix> {
    isotypic_projector_capped(space, lambda, DEFAULT_MAX_DEGREE)
}

pub fn isotypic_projector_capped<V: ActionSpace + ?Sized>(
    space: &V,
    lambda: &Partition,
    max_degree: usize,
) -> Result<Matrix> {
    let n = space.degree();
    if lambda.size() != n {
        return Err(Error::DegreeMismatch(lambda.size(), n));
    }
    if n > max_degree {
        return Err(Error::DegreeCap(n, max_degree));
    }
    let table = CharacterTable::new(n);
    Ok(projector_from_table(space, lambda, &table))
}

fn projector_from_table<V: ActionSpace + ?Sized>(
    space: &V,
    lambda: &Partition,
    table: &CharacterTable,
) -> Matrix {
    let n = space.degree();
    let d = space.dim();
    // integer accumulation first, one division at the end
    let mut acc = vec![vec![0i64; d]; d];
    let chi: BTreeMap<Partition, i64> =
        table.partitions().map(|mu| (mu.clone(), table.value(lambda, mu))).collect();
    for g in all_permutations(n) {
        let c = chi[&cycle_type(&g)];
        if c == 0 {
            continue;
        }
        for j in 0..d {
            acc[space.act_index(&g, j)][j] += c;
        }
    }
    let scale = Q::new(BigInt::from(table.dimension(lambda)), BigInt::from(factorial(n)));
    acc.into_iter()
        .map(|row| row.into_iter().map(|x| q(x) * &scale).collect())
        .collect()
}

/// Projectors for every partition of n, in partition order.
pub fn all_projectors<V: ActionSpace + ?Sized>(space: &V) -> Result<Vec<(Partition, Matrix)>> {
    let n = space.degree();
    if n > DEFAULT_MAX_DEGREE {
        return Err(Error::DegreeCap(n, DEFAULT_MAX_DEGREE));
    }
    let table = CharacterTable::new(n);
    Ok(table
        .partitions()
        .map(|l| (l.clone(), projector_from_table(space, l, &table)))
        .collect())
}

pub fn project_vector<V: ActionSpace + ?Sized>(
    v: &[Q],
    space: &V,
    lambda: &Partition,
) -> Result<Vec<Q>> {
    linalg::check_len(space.dim(), v.len())?;
    let p = isotypic_projector(space, lambda)?;
    Ok(linalg::mat_vec(&p, v))
}
