//! Predicted attaining partitions for the strictly second largest
//! eigenvalue, by case, and the harness that checks them against the exact
//! spectra.
//!
//! Cases are routed on `I ∩ {n-1, n}` first and then on parity:
//!
//! | block | condition                         | tags        |
//! |-------|-----------------------------------|-------------|
//! | A     | `n-1 ∉ I`, `n ∉ I`                | A1–A4       |
//! | B     | `n-1 ∈ I`, `n ∉ I`                | B1–B3       |
//! | C     | `n-1 ∉ I`, `n ∈ I`                | C1–C3       |
//! | D     | `{n-1, n} ⊆ I`                    | D1, D2      |
//!
//! Predictions only exist for `n >= 7`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;
use crate::partitions::Partition;
use crate::spectra::{
    all_connection_specs, component_count, connection_specs_between, ConnectionSpec,
    CycleCharacterTable, SpectralSummary,
};

pub const MIN_CLASSIFIED_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    A1,
    A2,
    A3,
    A4,
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
    D1,
    D2,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// How the computed attaining set is compared with `candidate_sets`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    /// The attaining set equals one of the candidate sets.
    EqualsOneOf,
    /// The attaining set lies inside the union of the candidate sets.
    WithinUnion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AldousClaim {
    Holds,
    Fails,
    Conditional,
}

#[derive(Clone, Debug, Serialize)]
pub struct Prediction {
    pub n: usize,
    #[serde(rename = "I")]
    pub cycles: Vec<usize>,
    pub case_tag: CaseTag,
    pub constraint: Constraint,
    pub candidate_sets: Vec<Vec<Partition>>,
    #[serde(serialize_with = "json::optional_decimal")]
    pub multiplicity: Option<BigUint>,
    pub aldous_claim: AldousClaim,
}

impl Prediction {
    /// Whether a computed attaining set satisfies the row.
    pub fn admits(&self, attaining: &[Partition]) -> bool {
        let mut got = attaining.to_vec();
        got.sort();
        match self.constraint {
            Constraint::EqualsOneOf => self.candidate_sets.iter().any(|set| {
                let mut want = set.clone();
                want.sort();
                want == got
            }),
            Constraint::WithinUnion => {
                !got.is_empty()
                    && got
                        .iter()
                        .all(|z| self.candidate_sets.iter().any(|set| set.contains(z)))
            }
        }
    }
}

fn shape(blocks: &[(usize, usize)]) -> Partition {
    Partition::from_blocks(blocks).expect("shape valid for n >= 7")
}

/// The named shapes that appear in predictions, instantiated at `n`.
struct Shapes {
    standard: Partition,
    sign: Partition,
    standard_conj: Partition,
    hook_two: Partition,
    hook_two_conj: Partition,
    three_two_one: Partition,
    three_two_one_conj: Partition,
    two_two: Partition,
}

impl Shapes {
    fn new(n: usize) -> Self {
        Shapes {
            standard: shape(&[(n - 1, 1), (1, 1)]),
            sign: shape(&[(1, n)]),
            standard_conj: shape(&[(2, 1), (1, n - 2)]),
            hook_two: shape(&[(n - 2, 1), (1, 2)]),
            hook_two_conj: shape(&[(3, 1), (1, n - 3)]),
            three_two_one: shape(&[(n - 3, 1), (2, 1), (1, 1)]),
            three_two_one_conj: shape(&[(3, 1), (2, 1), (1, n - 5)]),
            two_two: shape(&[(2, 2), (1, n - 4)]),
        }
    }
}

/// Routes `(n, I)` to its row. Total on every valid spec with `n >= 7`.
pub fn case_of(spec: &ConnectionSpec) -> Result<CaseTag> {
    let n = spec.n();
    if n < MIN_CLASSIFIED_N {
        return Err(Error::OutOfTheoremRange { n });
    }
    let n_even = n.is_multiple_of(2);
    let tag = match (spec.contains(n - 1), spec.contains(n)) {
        (false, false) => {
            if spec.all_odd() {
                CaseTag::A1
            } else if spec.cycles().iter().copied().eq([2, 3]) {
                CaseTag::A2
            } else if spec.max() % 2 == 1 {
                CaseTag::A3
            } else {
                CaseTag::A4
            }
        }
        (true, false) => match (n_even, spec.has_even()) {
            (true, true) => CaseTag::B1,
            (true, false) => CaseTag::B2,
            (false, _) => CaseTag::B3,
        },
        (false, true) => match (n_even, spec.has_even()) {
            (false, true) => CaseTag::C1,
            (false, false) => CaseTag::C2,
            (true, _) => CaseTag::C3,
        },
        (true, true) => {
            if n_even {
                CaseTag::D1
            } else {
                CaseTag::D2
            }
        }
    };
    Ok(tag)
}

pub fn predict(spec: &ConnectionSpec) -> Result<Prediction> {
    let tag = case_of(spec)?;
    let n = spec.n();
    let s = Shapes::new(n);
    let nm1 = BigUint::from(n - 1);
    let nm2 = BigUint::from(n - 2);
    let one = BigUint::from(1u32);
    use AldousClaim::*;
    use Constraint::*;
    let singletons = |parts: Vec<Partition>| parts.into_iter().map(|p| vec![p]).collect::<Vec<_>>();
    let (constraint, candidate_sets, multiplicity, aldous_claim) = match tag {
        CaseTag::A1 => (
            EqualsOneOf,
            vec![vec![s.standard, s.standard_conj]],
            Some(BigUint::from(2u32) * &nm1 * &nm1),
            Holds,
        ),
        CaseTag::A2 => (
            EqualsOneOf,
            vec![vec![s.standard, s.sign]],
            Some(&nm1 * &nm1 + &one),
            Holds,
        ),
        CaseTag::A3 => (EqualsOneOf, vec![vec![s.sign]], Some(one), Fails),
        CaseTag::A4 => (
            EqualsOneOf,
            vec![vec![s.standard]],
            Some(&nm1 * &nm1),
            Holds,
        ),
        CaseTag::B1 => (EqualsOneOf, vec![vec![s.sign]], Some(one), Fails),
        CaseTag::B2 => {
            let first = vec![s.standard, s.standard_conj];
            let second = vec![s.three_two_one, s.three_two_one_conj];
            let both = first.iter().chain(&second).cloned().collect();
            (EqualsOneOf, vec![first, second, both], None, Conditional)
        }
        CaseTag::B3 => (
            WithinUnion,
            singletons(vec![
                s.standard,
                s.three_two_one,
                s.two_two,
                s.standard_conj,
            ]),
            None,
            Conditional,
        ),
        CaseTag::C1 => (EqualsOneOf, vec![vec![s.sign]], Some(one), Fails),
        CaseTag::C2 => (
            EqualsOneOf,
            vec![vec![s.hook_two, s.hook_two_conj]],
            Some(&nm1 * &nm1 * &nm2 * &nm2 / BigUint::from(2u32)),
            Fails,
        ),
        CaseTag::C3 => (
            WithinUnion,
            singletons(vec![s.hook_two, s.standard_conj]),
            None,
            Fails,
        ),
        CaseTag::D1 => (
            WithinUnion,
            singletons(vec![s.sign, s.hook_two, s.standard_conj]),
            None,
            Fails,
        ),
        CaseTag::D2 => (
            WithinUnion,
            singletons(vec![s.sign, s.hook_two, s.hook_two_conj, s.two_two]),
            None,
            Fails,
        ),
    };
    Ok(Prediction {
        n,
        cycles: spec.cycles().iter().copied().collect(),
        case_tag: tag,
        constraint,
        candidate_sets,
        multiplicity,
        aldous_claim,
    })
}

/// The Aldous expectation read directly off the corollary conditions,
/// independent of the case routing. `None` where nothing is claimed.
pub fn expected_aldous(spec: &ConnectionSpec) -> Option<bool> {
    let n = spec.n();
    if n < MIN_CLASSIFIED_N {
        return None;
    }
    let has_nm1 = spec.contains(n - 1);
    let has_n = spec.contains(n);
    if !has_nm1 && !has_n {
        let pair = spec.cycles().iter().copied().eq([2, 3]);
        return Some(pair || spec.all_odd() || spec.max().is_multiple_of(2));
    }
    if has_n {
        return Some(false);
    }
    // n-1 ∈ I, n ∉ I: only the even-n case with an even cycle length is settled
    if n.is_multiple_of(2) && spec.has_even() {
        return Some(false);
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    #[serde(rename = "I")]
    pub cycles: Vec<usize>,
    pub case_tag: CaseTag,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub attaining: Vec<Partition>,
    #[serde(serialize_with = "json::decimal")]
    pub second_value: BigInt,
    #[serde(serialize_with = "json::decimal")]
    pub computed_multiplicity: BigUint,
    #[serde(serialize_with = "json::optional_decimal")]
    pub predicted_multiplicity: Option<BigUint>,
    pub aldous: bool,
}

fn list(parts: &[Partition]) -> String {
    let items: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

/// Compares the exact spectrum of `spec` with its prediction.
pub fn verify_with(
    table: &CycleCharacterTable,
    spec: &ConnectionSpec,
) -> Result<VerificationReport> {
    let prediction = predict(spec)?;
    let spectrum = table.full_spectrum(spec)?;
    let summary: SpectralSummary = crate::spectra::summarize(spec, &spectrum)?;
    let mut checks = Vec::new();

    let alternatives: Vec<String> = prediction.candidate_sets.iter().map(|s| list(s)).collect();
    checks.push(Check {
        name: "attaining_set",
        passed: prediction.admits(&summary.attaining),
        detail: format!(
            "computed {} vs {:?} of [{}]",
            list(&summary.attaining),
            prediction.constraint,
            alternatives.join(" | ")
        ),
    });

    if let Some(expected) = &prediction.multiplicity {
        checks.push(Check {
            name: "multiplicity",
            passed: *expected == summary.second_multiplicity,
            detail: format!(
                "computed {} vs predicted {expected}",
                summary.second_multiplicity
            ),
        });
    }

    let degree = BigInt::from(summary.degree.clone());
    let top: BigUint = spectrum
        .iter()
        .filter(|e| e.eigenvalue == degree)
        .map(|e| e.multiplicity.clone())
        .sum();
    let components = component_count(spec);
    checks.push(Check {
        name: "degree_multiplicity",
        passed: top == BigUint::from(components),
        detail: format!("degree eigenvalue multiplicity {top}, components {components}"),
    });

    match expected_aldous(spec) {
        Some(expected) => checks.push(Check {
            name: "aldous",
            passed: expected == summary.aldous,
            detail: format!("computed {} vs expected {expected}", summary.aldous),
        }),
        None => checks.push(Check {
            name: "aldous",
            passed: true,
            detail: format!("no claim; computed {}", summary.aldous),
        }),
    }
    let claim_consistent = match prediction.aldous_claim {
        AldousClaim::Holds => summary.aldous,
        AldousClaim::Fails => !summary.aldous,
        AldousClaim::Conditional => true,
    };
    checks.push(Check {
        name: "aldous_claim",
        passed: claim_consistent,
        detail: format!("{:?} for {}", prediction.aldous_claim, prediction.case_tag),
    });

    Ok(VerificationReport {
        n: spec.n(),
        cycles: prediction.cycles.clone(),
        case_tag: prediction.case_tag,
        passed: checks.iter().all(|c| c.passed),
        checks,
        attaining: summary.attaining,
        second_value: summary.second_value,
        computed_multiplicity: summary.second_multiplicity,
        predicted_multiplicity: prediction.multiplicity,
        aldous: summary.aldous,
    })
}

pub fn verify(spec: &ConnectionSpec) -> Result<VerificationReport> {
    if spec.n() < MIN_CLASSIFIED_N {
        return Err(Error::OutOfTheoremRange { n: spec.n() });
    }
    verify_with(&CycleCharacterTable::new(spec.n()), spec)
}

/// Every non-empty `I` at `n`, ordered by `I` as a bitmask.
pub fn verify_all(table: &CycleCharacterTable) -> Result<Vec<VerificationReport>> {
    let specs: Vec<ConnectionSpec> = all_connection_specs(table.n()).collect();
    specs.par_iter().map(|s| verify_with(table, s)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureKind {
    /// `n` odd, `{n-1} ⊆ I ⊆ {2..n-1}`:
    /// `λ(n-3,2,1) < max{λ(n-1,1), λ(2^2,1^{n-4})}`.
    ThreeTwoOneBelowStandard,
    /// `n` odd, `{n-1, n} ⊆ I`:
    /// `λ(3,1^{n-3}) < max{λ(1^n), λ(n-2,1^2), λ(2^2,1^{n-4})}`.
    HookConjugateBelowSign,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureEntry {
    pub conjecture: ConjectureKind,
    pub n: usize,
    #[serde(rename = "I")]
    pub cycles: Vec<usize>,
    pub holds: bool,
    #[serde(serialize_with = "json::decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "json::decimal")]
    pub rhs_max: BigInt,
}

/// Evaluates both conjectured strict inequalities at odd `n >= 7`; empty otherwise.
pub fn check_conjectures_with(table: &CycleCharacterTable) -> Result<Vec<ConjectureEntry>> {
    let n = table.n();
    if n < MIN_CLASSIFIED_N || n.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let s = Shapes::new(n);
    let mut out = Vec::new();
    let lower: Vec<usize> = (2..n - 1).collect();
    for spec in connection_specs_between(n, &[n - 1], &lower) {
        let lhs = table.eigenvalue(&s.three_two_one, &spec)?;
        let rhs = table
            .eigenvalue(&s.standard, &spec)?
            .max(table.eigenvalue(&s.two_two, &spec)?);
        out.push(ConjectureEntry {
            conjecture: ConjectureKind::ThreeTwoOneBelowStandard,
            n,
            cycles: spec.cycles().iter().copied().collect(),
            holds: lhs < rhs,
            lhs,
            rhs_max: rhs,
        });
    }
    for spec in connection_specs_between(n, &[n - 1, n], &lower) {
        let lhs = table.eigenvalue(&s.hook_two_conj, &spec)?;
        let rhs = [&s.sign, &s.hook_two, &s.two_two]
            .into_iter()
            .map(|z| table.eigenvalue(z, &spec))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .expect("three values");
        out.push(ConjectureEntry {
            conjecture: ConjectureKind::HookConjugateBelowSign,
            n,
            cycles: spec.cycles().iter().copied().collect(),
            holds: lhs < rhs,
            lhs,
            rhs_max: rhs,
        });
    }
    Ok(out)
}

pub fn check_conjectures(n: usize) -> Result<Vec<ConjectureEntry>> {
    if n < MIN_CLASSIFIED_N || n.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    check_conjectures_with(&CycleCharacterTable::new(n))
}

#[derive(Clone, Debug, Serialize)]
pub struct SingleClassRecord {
    pub n: usize,
    pub k: usize,
    pub standard_attains: bool,
    #[serde(serialize_with = "json::decimal")]
    pub second_value: BigInt,
    #[serde(serialize_with = "json::decimal")]
    pub formula_value: BigInt,
    pub passed: bool,
}

/// For each `2 <= k <= n-2`: the standard representation attains the
/// strictly second largest eigenvalue of `Cay(S_n, C(n,{k}))`, and that
/// eigenvalue equals `(n-k-1)/(n-1)·C(n,k)·(k-1)!` exactly.
pub fn single_class_check_with(table: &CycleCharacterTable) -> Result<Vec<SingleClassRecord>> {
    let n = table.n();
    if n < 4 {
        return Err(Error::OutOfTheoremRange { n });
    }
    let standard = Partition::hook(n, 1)?;
    (2..=n - 2)
        .map(|k| {
            let spec = ConnectionSpec::new(n, [k])?;
            let summary = table.strictly_second_largest(&spec)?;
            let numerator =
                BigInt::from(n - k - 1) * BigInt::from(crate::spectra::class_size(n, k)?);
            let denominator = BigInt::from(n - 1);
            if &numerator % &denominator != BigInt::from(0) {
                return Err(Error::Internal(format!(
                    "formula value not integral at n={n}, k={k}"
                )));
            }
            let formula_value = numerator / denominator;
            let standard_attains = summary.attaining.contains(&standard);
            Ok(SingleClassRecord {
                n,
                k,
                standard_attains,
                passed: standard_attains && summary.second_value == formula_value,
                second_value: summary.second_value,
                formula_value,
            })
        })
        .collect()
}

pub fn single_class_check(n: usize) -> Result<Vec<SingleClassRecord>> {
    single_class_check_with(&CycleCharacterTable::new(n))
}
