//! Exact spectra of `Cay(S_n, C(n,I))`.
//!
//! The connection set is a union of full cycle classes, so the graph is
//! normal and every irreducible `ρ_ζ` contributes the eigenvalue
//!
//! ```text
//! λ_ζ^I = Σ_{k∈I} C(n,k)·(k-1)! · χ_ζ((k,1^{n-k})) / dim ρ_ζ
//! ```
//!
//! with multiplicity `(dim ρ_ζ)^2`. Only the normalized characters on the
//! single-cycle classes are ever needed, so [`CycleCharacterTable`] computes
//! them once per `n` and every subset `I` is then a cheap exact sum.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{exact_integer, CharacterEngine};
use crate::error::{Error, Result};
use crate::json;
use crate::partitions::{binomial, enumerate_partitions, factorial, Partition};

/// The pair `(n, I)` with `∅ ≠ I ⊆ {2, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConnectionSpec {
    n: usize,
    #[serde(rename = "I")]
    cycles: BTreeSet<usize>,
}

impl ConnectionSpec {
    /// Duplicate cycle lengths are tolerated; lengths outside `2..=n` are not.
    pub fn new(n: usize, cycles: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidConnectionSet {
                n,
                reason: "n must be at least 2".into(),
            });
        }
        let cycles: BTreeSet<usize> = cycles.into_iter().collect();
        if cycles.is_empty() {
            return Err(Error::InvalidConnectionSet {
                n,
                reason: "I must be non-empty".into(),
            });
        }
        if let Some(&k) = cycles.iter().find(|&&k| k < 2 || k > n) {
            return Err(Error::InvalidConnectionSet {
                n,
                reason: format!("cycle length {k} not in 2..={n}"),
            });
        }
        Ok(ConnectionSpec { n, cycles })
    }

    /// Bit `j` of `mask` selects cycle length `j + 2`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let cycles = (0..64).filter(|j| mask >> j & 1 == 1).map(|j| j + 2);
        ConnectionSpec::new(n, cycles)
    }

    pub fn mask(&self) -> u64 {
        self.cycles.iter().fold(0, |m, &k| m | 1 << (k - 2))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &BTreeSet<usize> {
        &self.cycles
    }

    pub fn contains(&self, k: usize) -> bool {
        self.cycles.contains(&k)
    }

    pub fn max(&self) -> usize {
        *self.cycles.iter().next_back().expect("non-empty")
    }

    pub fn all_odd(&self) -> bool {
        self.cycles.iter().all(|k| k % 2 == 1)
    }

    pub fn has_even(&self) -> bool {
        !self.all_odd()
    }

    /// `|C(n,I)|`.
    pub fn degree(&self) -> BigUint {
        self.cycles
            .iter()
            .map(|&k| class_size_unchecked(self.n, k))
            .sum()
    }
}

impl fmt::Display for ConnectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set: Vec<String> = self.cycles.iter().map(|k| k.to_string()).collect();
        write!(f, "n={} I={{{}}}", self.n, set.join(","))
    }
}

/// Every non-empty `I ⊆ {2, …, n}` in binary-counter order.
pub fn all_connection_specs(n: usize) -> impl Iterator<Item = ConnectionSpec> {
    let bits = n.saturating_sub(1) as u32;
    (1u64..(1u64 << bits))
        .map(move |mask| ConnectionSpec::from_mask(n, mask).expect("mask in range"))
}

/// Every `I` with `required ⊆ I ⊆ allowed` (restricted to `2..=n`), binary-counter order.
pub fn connection_specs_between(
    n: usize,
    required: &[usize],
    allowed: &[usize],
) -> Vec<ConnectionSpec> {
    let required_mask = required.iter().fold(0u64, |m, &k| m | 1 << (k - 2));
    let allowed_mask = allowed
        .iter()
        .filter(|&&k| (2..=n).contains(&k))
        .fold(0u64, |m, &k| m | 1 << (k - 2))
        | required_mask;
    let bits = n.saturating_sub(1) as u32;
    (1u64..(1u64 << bits))
        .filter(|m| m & required_mask == required_mask && m & !allowed_mask == 0)
        .map(|m| ConnectionSpec::from_mask(n, m).expect("mask in range"))
        .collect()
}

/// `|C(n,k)| = C(n,k)·(k-1)!`.
pub fn class_size(n: usize, k: usize) -> Result<BigUint> {
    if k < 2 || k > n {
        return Err(Error::CycleLengthOutOfRange { n, k });
    }
    Ok(class_size_unchecked(n, k))
}

fn class_size_unchecked(n: usize, k: usize) -> BigUint {
    binomial(n, k) * factorial(k - 1)
}

/// 2 when every cycle length is odd (the set generates `A_n`), else 1.
pub fn component_count(spec: &ConnectionSpec) -> usize {
    if spec.all_odd() {
        2
    } else {
        1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub zeta: Partition,
    #[serde(serialize_with = "json::decimal")]
    pub eigenvalue: BigInt,
    #[serde(skip)]
    pub dimension: BigUint,
    #[serde(serialize_with = "json::decimal")]
    pub multiplicity: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralSummary {
    pub n: usize,
    #[serde(rename = "I")]
    pub cycles: BTreeSet<usize>,
    #[serde(serialize_with = "json::decimal")]
    pub degree: BigUint,
    pub components: usize,
    #[serde(serialize_with = "json::decimal")]
    pub second_value: BigInt,
    pub attaining: Vec<Partition>,
    #[serde(serialize_with = "json::decimal")]
    pub second_multiplicity: BigUint,
    pub aldous: bool,
    /// `(k - λ₂) / 2`.
    #[serde(serialize_with = "json::ratio")]
    pub cheeger_lower: BigRational,
    /// `sqrt(2k(k - λ₂))` to 12 significant digits.
    pub cheeger_upper: String,
}

impl SpectralSummary {
    pub fn spectral_gap(&self) -> BigInt {
        BigInt::from(self.degree.clone()) - &self.second_value
    }
}

/// Normalized characters of every `ζ ⊢ n` on every single-cycle class.
pub struct CycleCharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    dimensions: Vec<BigUint>,
    /// `characters[z][k]` is `χ_ζ((k,1^{n-k}))` for `k` in `0..=n`; slots 0 and 1 hold the dimension.
    characters: Vec<Vec<BigInt>>,
    /// `terms[z][k] = |C(n,k)|·χ̃_ζ((k,1^{n-k}))`, meaningful for `k >= 2`.
    terms: Vec<Vec<BigRational>>,
}

impl CycleCharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let rows: Vec<(BigUint, Vec<BigInt>)> = partitions
            .par_iter()
            .map_init(CharacterEngine::new, |engine, zeta| {
                let dim = zeta.dimension();
                let chars = (0..=n)
                    .map(|k| {
                        if k < 2 {
                            BigInt::from(dim.clone())
                        } else {
                            let gamma = Partition::cycle_class(n, k).expect("k <= n");
                            engine.character(zeta, &gamma).expect("same size")
                        }
                    })
                    .collect();
                (dim, chars)
            })
            .collect();
        let class_sizes: Vec<BigInt> = (0..=n)
            .map(|k| {
                if k < 2 {
                    BigInt::zero()
                } else {
                    BigInt::from(class_size_unchecked(n, k))
                }
            })
            .collect();
        let (dimensions, characters): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let terms = dimensions
            .iter()
            .zip(&characters)
            .map(|(dim, chars): (&BigUint, &Vec<BigInt>)| {
                let dim = BigInt::from(dim.clone());
                chars
                    .iter()
                    .zip(&class_sizes)
                    .map(|(chi, size)| BigRational::new(chi * size, dim.clone()))
                    .collect()
            })
            .collect();
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        CycleCharacterTable {
            n,
            partitions,
            index,
            dimensions,
            characters,
            terms,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in canonical order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, zeta: &Partition) -> Option<usize> {
        self.index.get(zeta).copied()
    }

    pub fn dimension(&self, zeta: &Partition) -> Result<&BigUint> {
        Ok(&self.dimensions[self.lookup(zeta)?])
    }

    /// `χ_ζ((k,1^{n-k}))`.
    pub fn character(&self, zeta: &Partition, k: usize) -> Result<&BigInt> {
        if k > self.n {
            return Err(Error::CycleLengthOutOfRange { n: self.n, k });
        }
        Ok(&self.characters[self.lookup(zeta)?][k])
    }

    /// `χ̃_ζ((k,1^{n-k}))`.
    pub fn normalized(&self, zeta: &Partition, k: usize) -> Result<BigRational> {
        let z = self.lookup(zeta)?;
        if k > self.n {
            return Err(Error::CycleLengthOutOfRange { n: self.n, k });
        }
        Ok(BigRational::new(
            self.characters[z][k].clone(),
            BigInt::from(self.dimensions[z].clone()),
        ))
    }

    fn lookup(&self, zeta: &Partition) -> Result<usize> {
        self.index_of(zeta).ok_or(Error::SizeMismatch {
            left: zeta.size(),
            right: self.n,
        })
    }

    fn check_spec(&self, spec: &ConnectionSpec) -> Result<()> {
        if spec.n() != self.n {
            return Err(Error::SizeMismatch {
                left: spec.n(),
                right: self.n,
            });
        }
        Ok(())
    }

    /// `λ_ζ^I`, reduced and checked to be an integer.
    pub fn eigenvalue(&self, zeta: &Partition, spec: &ConnectionSpec) -> Result<BigInt> {
        self.check_spec(spec)?;
        self.eigenvalue_at(self.lookup(zeta)?, spec)
    }

    fn eigenvalue_at(&self, z: usize, spec: &ConnectionSpec) -> Result<BigInt> {
        let sum: BigRational = spec.cycles().iter().map(|&k| &self.terms[z][k]).sum();
        exact_integer(&sum).ok_or_else(|| {
            Error::Internal(format!(
                "eigenvalue of {} for {spec} is not an integer: {sum}",
                self.partitions[z]
            ))
        })
    }

    /// One entry per partition, eigenvalue descending, ties in canonical order.
    pub fn full_spectrum(&self, spec: &ConnectionSpec) -> Result<Vec<SpectrumEntry>> {
        self.check_spec(spec)?;
        let mut entries = self
            .partitions
            .iter()
            .enumerate()
            .map(|(z, zeta)| {
                Ok(SpectrumEntry {
                    zeta: zeta.clone(),
                    eigenvalue: self.eigenvalue_at(z, spec)?,
                    dimension: self.dimensions[z].clone(),
                    multiplicity: self.dimensions[z].pow(2),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        // stable sort keeps canonical order among ties
        entries.sort_by(|a, b| b.eigenvalue.cmp(&a.eigenvalue));
        Ok(entries)
    }

    pub fn strictly_second_largest(&self, spec: &ConnectionSpec) -> Result<SpectralSummary> {
        let spectrum = self.full_spectrum(spec)?;
        summarize(spec, &spectrum)
    }
}

/// Builds the summary from an already computed spectrum.
pub fn summarize(spec: &ConnectionSpec, spectrum: &[SpectrumEntry]) -> Result<SpectralSummary> {
    let degree = spec.degree();
    let degree_int = BigInt::from(degree.clone());
    let second_value = spectrum
        .iter()
        .map(|e| &e.eigenvalue)
        .filter(|&v| *v < degree_int)
        .max()
        .cloned()
        .ok_or_else(|| Error::Internal(format!("every eigenvalue equals the degree for {spec}")))?;
    let mut attaining: Vec<Partition> = spectrum
        .iter()
        .filter(|e| e.eigenvalue == second_value)
        .map(|e| e.zeta.clone())
        .collect();
    attaining.sort();
    let second_multiplicity = spectrum
        .iter()
        .filter(|e| e.eigenvalue == second_value)
        .map(|e| e.multiplicity.clone())
        .sum();
    let n = spec.n();
    let aldous = n >= 2 && attaining.contains(&Partition::hook(n, 1).expect("n >= 2"));
    let gap = &degree_int - &second_value;
    let cheeger_lower = BigRational::new(gap.clone(), BigInt::from(2));
    let upper =
        (2.0 * degree.to_f64().unwrap_or(f64::INFINITY) * gap.to_f64().unwrap_or(f64::INFINITY))
            .sqrt();
    Ok(SpectralSummary {
        n,
        cycles: spec.cycles().clone(),
        degree,
        components: component_count(spec),
        second_value,
        attaining,
        second_multiplicity,
        aldous,
        cheeger_lower,
        cheeger_upper: json::significant(upper, 12),
    })
}

pub fn eigenvalue(zeta: &Partition, spec: &ConnectionSpec) -> Result<BigInt> {
    if zeta.size() != spec.n() {
        return Err(Error::SizeMismatch {
            left: zeta.size(),
            right: spec.n(),
        });
    }
    let mut engine = CharacterEngine::new();
    let dim = BigInt::from(zeta.dimension());
    let mut sum = BigRational::zero();
    for &k in spec.cycles() {
        let chi = engine.character(zeta, &Partition::cycle_class(spec.n(), k)?)?;
        sum += BigRational::new(
            chi * BigInt::from(class_size_unchecked(spec.n(), k)),
            dim.clone(),
        );
    }
    exact_integer(&sum).ok_or_else(|| {
        Error::Internal(format!(
            "eigenvalue of {zeta} for {spec} is not an integer: {sum}"
        ))
    })
}

pub fn full_spectrum(spec: &ConnectionSpec) -> Result<Vec<SpectrumEntry>> {
    CycleCharacterTable::new(spec.n()).full_spectrum(spec)
}

pub fn strictly_second_largest(spec: &ConnectionSpec) -> Result<SpectralSummary> {
    CycleCharacterTable::new(spec.n()).strictly_second_largest(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn spec(n: usize, set: &[usize]) -> ConnectionSpec {
        ConnectionSpec::new(n, set.iter().copied()).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Counts permutations of `0..n` that are a single `k`-cycle.
    fn count_k_cycles(n: usize, k: usize) -> usize {
        fn rec(n: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, k: usize, count: &mut usize) {
            if perm.len() == n {
                let mut seen = vec![false; n];
                let mut lengths = Vec::new();
                for s in 0..n {
                    if !seen[s] {
                        let mut len = 0;
                        let mut x = s;
                        while !seen[x] {
                            seen[x] = true;
                            x = perm[x];
                            len += 1;
                        }
                        lengths.push(len);
                    }
                }
                if lengths.iter().filter(|&&l| l > 1).count() == 1 && lengths.contains(&k) {
                    *count += 1;
                }
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    perm.push(v);
                    rec(n, perm, used, k, count);
                    perm.pop();
                    used[v] = false;
                }
            }
        }
        let mut count = 0;
        rec(n, &mut Vec::new(), &mut vec![false; n], k, &mut count);
        count
    }

    #[test]
    fn spec_validation() {
        assert!(ConnectionSpec::new(5, []).is_err());
        assert!(ConnectionSpec::new(5, [1]).is_err());
        assert!(ConnectionSpec::new(5, [6]).is_err());
        assert!(ConnectionSpec::new(1, [2]).is_err());
        assert_eq!(spec(5, &[3, 3, 2]).cycles().len(), 2);
        let s = spec(9, &[3, 5, 9]);
        assert_eq!(ConnectionSpec::from_mask(9, s.mask()).unwrap(), s);
        assert_eq!(s.to_string(), "n=9 I={3,5,9}");
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(all_connection_specs(6).count(), 31);
        assert_eq!(
            all_connection_specs(2).collect::<Vec<_>>(),
            vec![spec(2, &[2])]
        );
        let b = connection_specs_between(7, &[6], &[2, 3, 4, 5, 6]);
        assert_eq!(b.len(), 16);
        assert!(b.iter().all(|s| s.contains(6) && !s.contains(7)));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(5, 2).unwrap(), BigUint::from(10u32));
        assert_eq!(
            class_size(4, 4).unwrap(),
            BigUint::from(count_k_cycles(4, 4))
        );
        assert_eq!(class_size(4, 4).unwrap(), BigUint::from(6u32));
        assert_eq!(
            class_size(7, 3).unwrap(),
            BigUint::from(count_k_cycles(7, 3))
        );
        assert_eq!(class_size(7, 3).unwrap(), BigUint::from(70u32));
        assert!(class_size(5, 1).is_err());
        assert!(class_size(5, 6).is_err());
    }

    #[test]
    fn single_eigenvalues() {
        for n in 3..9 {
            for s in all_connection_specs(n) {
                assert_eq!(eigenvalue(&p(&[n]), &s).unwrap(), BigInt::from(s.degree()));
            }
            for k in 2..=n {
                let s = spec(n, &[k]);
                let expected = BigRational::new(int(n as i64 - k as i64 - 1), int(n as i64 - 1))
                    * BigRational::from_integer(BigInt::from(class_size(n, k).unwrap()));
                assert_eq!(
                    eigenvalue(&Partition::hook(n, 1).unwrap(), &s).unwrap(),
                    expected.to_integer()
                );
            }
        }
        assert_eq!(eigenvalue(&p(&[3, 1]), &spec(4, &[2])).unwrap(), int(2));
    }

    #[test]
    fn transposition_graph_on_s4() {
        let entries = full_spectrum(&spec(4, &[2])).unwrap();
        let got: Vec<_> = entries
            .iter()
            .map(|e| (e.zeta.clone(), e.eigenvalue.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (p(&[4]), int(6)),
                (p(&[3, 1]), int(2)),
                (p(&[2, 2]), int(0)),
                (p(&[2, 1, 1]), int(-2)),
                (p(&[1, 1, 1, 1]), int(-6)),
            ]
        );
    }

    #[test]
    fn three_cycles_on_s4() {
        let entries = full_spectrum(&spec(4, &[3])).unwrap();
        let sign = entries.iter().find(|e| e.zeta == p(&[1, 1, 1, 1])).unwrap();
        assert_eq!(sign.eigenvalue, int(8));
        assert_eq!(component_count(&spec(4, &[3])), 2);
    }

    #[test]
    fn components_rule() {
        assert_eq!(component_count(&spec(9, &[3, 5])), 2);
        assert_eq!(component_count(&spec(9, &[2])), 1);
        assert_eq!(component_count(&spec(9, &[3, 4])), 1);
    }

    #[test]
    fn second_largest_examples() {
        let s = strictly_second_largest(&spec(8, &[7])).unwrap();
        assert_eq!(s.attaining, vec![p(&[5, 2, 1]), p(&[3, 2, 1, 1, 1])]);
        let s = strictly_second_largest(&spec(8, &[5, 7])).unwrap();
        assert_eq!(s.attaining, vec![p(&[7, 1]), p(&[2, 1, 1, 1, 1, 1, 1])]);
        let s = strictly_second_largest(&spec(7, &[2, 3])).unwrap();
        assert_eq!(s.attaining, vec![p(&[6, 1]), p(&[1; 7])]);
        assert_eq!(s.second_multiplicity, BigUint::from(37u32));
        assert!(s.aldous);
        assert!(s.second_value < BigInt::from(s.degree.clone()));
    }

    #[test]
    fn cheeger_bounds_from_gap() {
        // transpositions on S_4: degree 6, λ₂ = 2
        let s = strictly_second_largest(&spec(4, &[2])).unwrap();
        assert_eq!(s.cheeger_lower, BigRational::from_integer(int(2)));
        assert_eq!(
            s.cheeger_upper,
            json::significant((2.0f64 * 6.0 * 4.0).sqrt(), 12)
        );
        assert_eq!(s.spectral_gap(), int(4));
    }

    #[test]
    fn spectrum_invariants() {
        for n in 2..=9 {
            let table = CycleCharacterTable::new(n);
            for s in all_connection_specs(n) {
                let entries = table.full_spectrum(&s).unwrap();
                let total: BigUint = entries.iter().map(|e| e.multiplicity.clone()).sum();
                assert_eq!(total, factorial(n));
                let degree = BigInt::from(s.degree());
                let top: BigUint = entries
                    .iter()
                    .filter(|e| e.eigenvalue == degree)
                    .map(|e| e.multiplicity.clone())
                    .sum();
                assert_eq!(top, BigUint::from(component_count(&s)), "{s}");
                for e in &entries {
                    assert!(e.eigenvalue.magnitude() <= &s.degree());
                    let conj = table.eigenvalue(&e.zeta.conjugate(), &s).unwrap();
                    if s.all_odd() {
                        assert_eq!(conj, e.eigenvalue);
                    }
                    if s.cycles().iter().all(|k| k % 2 == 0) {
                        assert_eq!(conj, -e.eigenvalue.clone());
                    }
                }
            }
        }
    }

    #[test]
    fn mismatched_sizes_rejected() {
        let table = CycleCharacterTable::new(5);
        assert!(table.eigenvalue(&p(&[3, 1]), &spec(5, &[2])).is_err());
        assert!(table.full_spectrum(&spec(6, &[2])).is_err());
        assert!(eigenvalue(&p(&[3, 1]), &spec(5, &[2])).is_err());
    }

    #[test]
    fn serialized_summary_uses_strings() {
        let s = strictly_second_largest(&spec(8, &[7])).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert!(v["degree"].is_string());
        assert_eq!(
            v["attaining"],
            serde_json::json!([[5, 2, 1], [3, 2, 1, 1, 1]])
        );
        assert_eq!(v["I"], serde_json::json!([7]));
    }
}
