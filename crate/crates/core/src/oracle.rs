//! Brute-force ground truth: the literal Cayley graph on `n!` vertices.
//!
//! Vertices are permutations in one-line notation, indexed by their
//! lexicographic rank; `g` is joined to `g∘s` for every generator `s`.
//! The dense adjacency matrix goes through a floating point symmetric
//! eigensolver and the result is compared with the exact spectrum.

use std::collections::VecDeque;

use faer::{Mat, Side};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::spectra::{component_count, ConnectionSpec, CycleCharacterTable};

/// Largest `n` the oracle accepts unless the caller raises the limit.
pub const DEFAULT_LIMIT: usize = 7;

pub type Permutation = Vec<u8>;

fn factorials(n: usize) -> Vec<usize> {
    let mut f = vec![1usize; n + 1];
    for i in 1..=n {
        f[i] = f[i - 1] * i;
    }
    f
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations_lex(n: usize) -> Vec<Permutation> {
    let mut current: Permutation = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..current.len())
            .rev()
            .find(|&i| current[i - 1] < current[i])
        else {
            break;
        };
        let pivot = i - 1;
        let j = (pivot + 1..current.len())
            .rev()
            .find(|&j| current[j] > current[pivot])
            .expect("successor exists");
        current.swap(pivot, j);
        current[i..].reverse();
        out.push(current.clone());
    }
    out
}

/// Lexicographic rank via the Lehmer code.
pub fn rank(perm: &[u8], fact: &[usize]) -> usize {
    let n = perm.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        r += smaller * fact[n - 1 - i];
    }
    r
}

/// Cycle lengths of a permutation, longest first.
pub fn cycle_type(perm: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    Ok(())
}

/// Every permutation of cycle type `(k, 1^{n-k})` with `k ∈ I`, in lexicographic order.
pub fn enumerate_connection_set(spec: &ConnectionSpec, limit: usize) -> Result<Vec<Permutation>> {
    check_limit(spec.n(), limit)?;
    Ok(permutations_lex(spec.n())
        .into_iter()
        .filter(|perm| {
            let ct = cycle_type(perm);
            let k = ct[0];
            spec.contains(k) && ct[1..].iter().all(|&c| c == 1)
        })
        .collect())
}

pub struct PermutationGraph {
    pub n: usize,
    pub generators: Vec<Permutation>,
    /// `neighbors[v]` lists `rank(g_v ∘ s)` for every generator `s`.
    pub neighbors: Vec<Vec<u32>>,
}

impl PermutationGraph {
    pub fn build(spec: &ConnectionSpec, limit: usize) -> Result<Self> {
        let generators = enumerate_connection_set(spec, limit)?;
        let n = spec.n();
        let fact = factorials(n);
        let vertices = permutations_lex(n);
        let mut composed = vec![0u8; n];
        let neighbors = vertices
            .iter()
            .map(|g| {
                generators
                    .iter()
                    .map(|s| {
                        for (x, slot) in composed.iter_mut().enumerate() {
                            *slot = g[s[x] as usize];
                        }
                        rank(&composed, &fact) as u32
                    })
                    .collect()
            })
            .collect();
        Ok(PermutationGraph {
            n,
            generators,
            neighbors,
        })
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    pub fn degree(&self) -> usize {
        self.generators.len()
    }

    /// Inverse-closed generators, symmetric adjacency, empty diagonal, regular rows.
    pub fn is_well_formed(&self) -> bool {
        let fact = factorials(self.n);
        let ranks: Vec<usize> = self.generators.iter().map(|g| rank(g, &fact)).collect();
        let inverse_closed = self.generators.iter().all(|g| {
            let mut inv = vec![0u8; g.len()];
            for (i, &x) in g.iter().enumerate() {
                inv[x as usize] = i as u8;
            }
            ranks.contains(&rank(&inv, &fact))
        });
        let symmetric = self.neighbors.iter().enumerate().all(|(v, nbrs)| {
            nbrs.len() == self.degree()
                && nbrs
                    .iter()
                    .all(|&w| w as usize != v && self.neighbors[w as usize].contains(&(v as u32)))
        });
        inverse_closed && symmetric
    }

    pub fn to_dense(&self) -> Mat<f64> {
        let order = self.order();
        let mut m = Mat::<f64>::zeros(order, order);
        for (v, nbrs) in self.neighbors.iter().enumerate() {
            for &w in nbrs {
                m[(v, w as usize)] += 1.0;
            }
        }
        m
    }
}

/// All `n!` adjacency eigenvalues, descending.
pub fn numeric_spectrum(graph: &PermutationGraph) -> Result<Vec<f64>> {
    let dense = graph.to_dense();
    let eigenvalues = dense
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::Internal(format!("eigensolver failed: {e:?}")))?;
    let mut values: Vec<f64> = eigenvalues.into_iter().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Connected components by breadth-first search.
pub fn component_count_bfs(graph: &PermutationGraph) -> usize {
    let mut seen = vec![false; graph.order()];
    let mut components = 0;
    let mut queue = VecDeque::new();
    for start in 0..graph.order() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in &graph.neighbors[v] {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    components
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub n: usize,
    #[serde(rename = "I")]
    pub cycles: Vec<usize>,
    pub vertices: usize,
    pub degree: usize,
    pub tolerance: f64,
    pub max_deviation: f64,
    /// Index into the descending spectra where the deviation peaks.
    pub worst_position: usize,
    /// The partition whose exact eigenvalue sits at `worst_position`.
    pub worst_zeta: Option<Partition>,
    pub spectrum_matches: bool,
    pub components_bfs: usize,
    pub components_rule: usize,
    pub passed: bool,
}

pub fn default_tolerance(degree: usize) -> f64 {
    1e-6 * (degree as f64).max(1.0)
}

/// Character-side multiset `{λ_ζ^I repeated dim(ζ)^2 times}`, descending.
pub fn exact_multiset(table: &CycleCharacterTable, spec: &ConnectionSpec) -> Result<Vec<f64>> {
    Ok(labelled_multiset(table, spec)?
        .into_iter()
        .map(|(v, _)| v)
        .collect())
}

fn labelled_multiset(
    table: &CycleCharacterTable,
    spec: &ConnectionSpec,
) -> Result<Vec<(f64, Partition)>> {
    let mut values = Vec::new();
    for entry in table.full_spectrum(spec)? {
        let value = entry.eigenvalue.to_f64().expect("finite");
        let times = entry.multiplicity.to_usize().expect("fits at oracle sizes");
        values.extend(std::iter::repeat_n((value, entry.zeta), times));
    }
    values.sort_by(|a, b| b.0.total_cmp(&a.0));
    Ok(values)
}

pub fn compare_spectra_with(
    table: &CycleCharacterTable,
    spec: &ConnectionSpec,
    tolerance: Option<f64>,
    limit: usize,
) -> Result<OracleReport> {
    let graph = PermutationGraph::build(spec, limit)?;
    if !graph.is_well_formed() {
        return Err(Error::Internal(format!(
            "adjacency for {spec} is not a simple regular symmetric graph"
        )));
    }
    let tolerance = tolerance.unwrap_or_else(|| default_tolerance(graph.degree()));
    let numeric = numeric_spectrum(&graph)?;
    let exact = labelled_multiset(table, spec)?;
    let (mut max_deviation, mut worst_position) = (0.0f64, 0usize);
    if numeric.len() != exact.len() {
        max_deviation = f64::INFINITY;
    } else {
        for (i, (a, (b, _))) in numeric.iter().zip(&exact).enumerate() {
            let d = (a - b).abs();
            if d > max_deviation {
                max_deviation = d;
                worst_position = i;
            }
        }
    }
    let spectrum_matches = max_deviation <= tolerance;
    let worst_zeta = exact.get(worst_position).map(|(_, z)| z.clone());
    let components_bfs = component_count_bfs(&graph);
    let components_rule = component_count(spec);
    Ok(OracleReport {
        n: spec.n(),
        cycles: spec.cycles().iter().copied().collect(),
        vertices: graph.order(),
        degree: graph.degree(),
        tolerance,
        max_deviation,
        worst_position,
        worst_zeta,
        spectrum_matches,
        components_bfs,
        components_rule,
        passed: spectrum_matches && components_bfs == components_rule,
    })
}

pub fn compare_spectra(
    spec: &ConnectionSpec,
    tolerance: Option<f64>,
    limit: usize,
) -> Result<OracleReport> {
    check_limit(spec.n(), limit)?;
    compare_spectra_with(&CycleCharacterTable::new(spec.n()), spec, tolerance, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::class_size;
    use num_bigint::BigUint;

    fn spec(n: usize, set: &[usize]) -> ConnectionSpec {
        ConnectionSpec::new(n, set.iter().copied()).unwrap()
    }

    #[test]
    fn ranks_follow_lex_order() {
        let fact = factorials(5);
        for (i, perm) in permutations_lex(5).iter().enumerate() {
            assert_eq!(rank(perm, &fact), i);
        }
        assert_eq!(permutations_lex(4).len(), 24);
    }

    #[test]
    fn connection_set_sizes() {
        assert_eq!(
            enumerate_connection_set(&spec(4, &[4]), DEFAULT_LIMIT)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_connection_set(&spec(4, &[2, 3]), DEFAULT_LIMIT)
                .unwrap()
                .len(),
            14
        );
        let t = enumerate_connection_set(&spec(3, &[2]), DEFAULT_LIMIT).unwrap();
        assert_eq!(t, vec![vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]);
        for n in 2..=6 {
            for s in crate::spectra::all_connection_specs(n) {
                let count = enumerate_connection_set(&s, DEFAULT_LIMIT).unwrap().len();
                let expected: BigUint = s.cycles().iter().map(|&k| class_size(n, k).unwrap()).sum();
                assert_eq!(BigUint::from(count), expected);
            }
        }
    }

    #[test]
    fn refuses_large_n() {
        assert!(matches!(
            enumerate_connection_set(&spec(8, &[2]), DEFAULT_LIMIT),
            Err(Error::OracleLimit { n: 8, limit: 7 })
        ));
        assert!(compare_spectra(&spec(8, &[2]), None, DEFAULT_LIMIT).is_err());
    }

    #[test]
    fn transposition_graph_on_s4() {
        let g = PermutationGraph::build(&spec(4, &[2]), DEFAULT_LIMIT).unwrap();
        assert!(g.is_well_formed());
        let values = numeric_spectrum(&g).unwrap();
        let rounded: Vec<i64> = values.iter().map(|v| v.round() as i64).collect();
        let count = |x: i64| rounded.iter().filter(|&&v| v == x).count();
        assert_eq!(
            (count(6), count(2), count(0), count(-2), count(-6)),
            (1, 9, 4, 9, 1)
        );
        assert!((values[0] - 6.0).abs() < 1e-9);
    }

    #[test]
    fn s3_transpositions_spectrum() {
        let g = PermutationGraph::build(&spec(3, &[2]), DEFAULT_LIMIT).unwrap();
        let values = numeric_spectrum(&g).unwrap();
        let expected = [3.0, 0.0, 0.0, 0.0, 0.0, -3.0];
        for (a, b) in values.iter().zip(expected) {
            assert!((a - b).abs() < 1e-9, "{values:?}");
        }
    }

    #[test]
    fn components() {
        let bfs = |n, set: &[usize]| {
            component_count_bfs(&PermutationGraph::build(&spec(n, set), DEFAULT_LIMIT).unwrap())
        };
        assert_eq!(bfs(4, &[3]), 2);
        assert_eq!(bfs(4, &[2]), 1);
        assert_eq!(bfs(5, &[3, 4]), 1);
    }

    #[test]
    fn small_comparisons_pass() {
        let r = compare_spectra(&spec(4, &[2]), None, DEFAULT_LIMIT).unwrap();
        assert!(r.passed, "{r:?}");
        let r = compare_spectra(&spec(5, &[5]), None, DEFAULT_LIMIT).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.components_bfs, 2);
        let table = CycleCharacterTable::new(5);
        let exact = exact_multiset(&table, &spec(5, &[5])).unwrap();
        assert_eq!(exact.iter().filter(|&&v| v == 24.0).count(), 2);
    }
}
