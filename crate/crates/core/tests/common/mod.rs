//! Shared expectations for the integration tests.
//!
//! The support tables below list, for one fixed class, every irreducible
//! with a nonzero character together with its dimension formula and
//! character value. Parametrized rows are instantiated for every `m` that
//! makes the shape a legal partition.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use sn_spectra::characters::{
    character_on_n_cycle, character_on_n_minus_1_cycle, closed_form_character, CharacterEngine,
    TableShape,
};
use sn_spectra::partitions::{enumerate_partitions, Partition};
use sn_spectra::spectra::ConnectionSpec;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn blocks(b: &[(usize, usize)]) -> Partition {
    Partition::from_blocks(b).unwrap()
}

pub fn spec(n: usize, set: &[usize]) -> ConnectionSpec {
    ConnectionSpec::new(n, set.iter().copied()).unwrap()
}

pub fn fact(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i))
}

/// `num / den`, asserting exact division.
pub fn exact_div(num: BigUint, den: BigUint) -> BigUint {
    assert!(
        &num % &den == BigUint::from(0u32),
        "{num} is not divisible by {den}"
    );
    num / den
}

fn u(v: usize) -> BigUint {
    BigUint::from(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportRow {
    pub dimension: BigUint,
    pub character: BigInt,
}

fn insert(
    table: &mut BTreeMap<Partition, SupportRow>,
    zeta: Partition,
    dimension: BigUint,
    character: BigInt,
) {
    let row = SupportRow {
        dimension,
        character,
    };
    if let Some(previous) = table.insert(zeta.clone(), row.clone()) {
        assert_eq!(previous, row, "conflicting rows for {zeta}");
    }
}

/// Nonzero characters on `(n-3,1^3)`, as absolute values. Valid for `n >= 8`.
pub fn support_on_n_minus_3(n: usize) -> BTreeMap<Partition, SupportRow> {
    assert!(n >= 8);
    let mut t = BTreeMap::new();
    let mut pair = |a: Partition, b: Partition, dim: BigUint, chi: i64| {
        insert(&mut t, a, dim.clone(), BigInt::from(chi));
        insert(&mut t, b, dim, BigInt::from(chi));
    };
    pair(blocks(&[(n, 1)]), blocks(&[(1, n)]), u(1), 1);
    pair(
        blocks(&[(n - 1, 1), (1, 1)]),
        blocks(&[(2, 1), (1, n - 2)]),
        u(n - 1),
        2,
    );
    pair(
        blocks(&[(n - 2, 1), (1, 2)]),
        blocks(&[(3, 1), (1, n - 3)]),
        u((n - 1) * (n - 2) / 2),
        1,
    );
    pair(
        blocks(&[(n - 3, 1), (2, 1), (1, 1)]),
        blocks(&[(3, 1), (2, 1), (1, n - 5)]),
        exact_div(u(n * (n - 2) * (n - 4)), u(3)),
        1,
    );
    pair(
        blocks(&[(n - 3, 1), (3, 1)]),
        blocks(&[(2, 3), (1, n - 6)]),
        exact_div(u(n * (n - 1) * (n - 5)), u(6)),
        2,
    );
    pair(
        blocks(&[(n - 4, 1), (2, 2)]),
        blocks(&[(3, 2), (1, n - 6)]),
        exact_div(u(n * (n - 1) * (n - 4) * (n - 5)), u(12)),
        1,
    );
    for m in 5..=n - 3 {
        let dim = exact_div(
            fact(n),
            u(3 * (n - 3) * (n - m + 1) * (n - m - 1) * (m - 1) * (m - 3))
                * fact(m - 5)
                * fact(n - m - 3),
        );
        insert(
            &mut t,
            blocks(&[(n - m, 1), (3, 1), (2, 1), (1, m - 5)]),
            dim,
            BigInt::from(2),
        );
    }
    for m in 4..=n - 4 {
        let dim = exact_div(
            fact(n),
            u(6 * (n - 3) * (n - m) * (n - m - 1) * (n - m - 2) * m)
                * fact(m - 4)
                * fact(n - m - 4),
        );
        insert(
            &mut t,
            blocks(&[(n - m, 1), (4, 1), (1, m - 4)]),
            dim,
            BigInt::from(1),
        );
    }
    for m in 6..=n - 2 {
        let dim = exact_div(
            fact(n),
            u(6 * (n - 3) * (n - m + 2) * (m - 2) * (m - 3) * (m - 4))
                * fact(m - 6)
                * fact(n - m - 2),
        );
        insert(
            &mut t,
            blocks(&[(n - m, 1), (2, 3), (1, m - 6)]),
            dim,
            BigInt::from(1),
        );
    }
    t
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Nonzero characters on `(n-2,1^2)`, signed. Valid for `n >= 7`.
pub fn support_on_n_minus_2(n: usize) -> BTreeMap<Partition, SupportRow> {
    assert!(n >= 7);
    let mut t = BTreeMap::new();
    insert(&mut t, blocks(&[(n, 1)]), u(1), BigInt::from(1));
    insert(&mut t, blocks(&[(1, n)]), u(1), BigInt::from(sign(n - 3)));
    insert(
        &mut t,
        blocks(&[(n - 1, 1), (1, 1)]),
        u(n - 1),
        BigInt::from(1),
    );
    insert(
        &mut t,
        blocks(&[(2, 1), (1, n - 2)]),
        u(n - 1),
        BigInt::from(sign(n - 3)),
    );
    insert(
        &mut t,
        blocks(&[(n - 2, 1), (2, 1)]),
        u(n * (n - 3) / 2),
        BigInt::from(-1),
    );
    insert(
        &mut t,
        blocks(&[(2, 2), (1, n - 4)]),
        u(n * (n - 3) / 2),
        BigInt::from(sign(n - 2)),
    );
    for m in 3..=n - 3 {
        let dim = exact_div(
            fact(n),
            u(2 * m * (n - 2) * (n - m) * (n - m - 1)) * fact(m - 3) * fact(n - m - 3),
        );
        insert(
            &mut t,
            blocks(&[(n - m, 1), (3, 1), (1, m - 3)]),
            dim,
            BigInt::from(sign(m - 2)),
        );
    }
    for m in 4..=n - 2 {
        let dim = exact_div(
            fact(n),
            u(2 * (m - 1) * (m - 2) * (n - 2) * (n - m + 1)) * fact(m - 4) * fact(n - m - 2),
        );
        insert(
            &mut t,
            blocks(&[(n - m, 1), (2, 2), (1, m - 4)]),
            dim,
            BigInt::from(sign(m - 2)),
        );
    }
    t
}

/// Removable corners of `zeta`, computed from the row lengths alone.
pub fn corner_removals(zeta: &Partition) -> Vec<Partition> {
    let parts = zeta.parts();
    (0..parts.len())
        .filter(|&i| i + 1 == parts.len() || parts[i] > parts[i + 1])
        .map(|i| {
            let mut q = parts.to_vec();
            q[i] -= 1;
            q.retain(|&x| x > 0);
            Partition::new(q).unwrap()
        })
        .collect()
}

/// Drops one part equal to 1.
pub fn drop_fixed_point(gamma: &Partition) -> Option<Partition> {
    let parts = gamma.parts();
    let pos = parts.iter().rposition(|&x| x == 1)?;
    let mut q = parts.to_vec();
    q.remove(pos);
    Some(Partition::new(q).unwrap())
}

/// Conjugate twist, branching rule and `|chi| <= dim` over every pair of
/// partitions of each `n <= max_n`. Returns the number of pairs checked.
pub fn check_conjugation_branching_bounds(max_n: usize) -> usize {
    let mut engine = CharacterEngine::new();
    let mut count = 0;
    for n in 1..=max_n {
        let parts = enumerate_partitions(n);
        for zeta in &parts {
            let dim = BigInt::from(zeta.dimension());
            let conj = zeta.conjugate();
            let corners = corner_removals(zeta);
            for gamma in &parts {
                let chi = engine.character(zeta, gamma).unwrap();
                assert!(
                    chi.magnitude() <= dim.magnitude(),
                    "bound: {zeta} on {gamma}"
                );
                let chi_conj = engine.character(&conj, gamma).unwrap();
                assert_eq!(
                    chi_conj,
                    chi.clone() * gamma.sign_of_class(),
                    "conjugate: {zeta} on {gamma}"
                );
                if let Some(smaller) = drop_fixed_point(gamma) {
                    let sum: BigInt = corners
                        .iter()
                        .map(|z| engine.character(z, &smaller).unwrap())
                        .sum();
                    assert_eq!(chi, sum, "branching: {zeta} on {gamma}");
                }
                count += 1;
            }
        }
    }
    count
}

pub fn check_identity_dimension(max_n: usize) -> usize {
    let mut engine = CharacterEngine::new();
    let mut count = 0;
    for n in 1..=max_n {
        let identity = Partition::from_blocks(&[(1, n)]).unwrap();
        for zeta in enumerate_partitions(n) {
            assert_eq!(
                engine.character(&zeta, &identity).unwrap(),
                BigInt::from(zeta.dimension()),
                "{zeta}"
            );
            count += 1;
        }
    }
    count
}

/// Closed forms on `n`- and `(n-1)`-cycles for every shape, and the eight
/// tabulated shapes on every `(k,1^{n-k})`.
pub fn check_cycle_closed_forms(max_n: usize) -> usize {
    let mut engine = CharacterEngine::new();
    let mut count = 0;
    for n in 3..=max_n {
        let full = Partition::cycle_class(n, n).unwrap();
        let almost = Partition::cycle_class(n, n - 1).unwrap();
        for zeta in enumerate_partitions(n) {
            assert_eq!(
                character_on_n_cycle(&zeta),
                engine.character(&zeta, &full).unwrap(),
                "{zeta} on n-cycle"
            );
            assert_eq!(
                character_on_n_minus_1_cycle(&zeta).unwrap(),
                engine.character(&zeta, &almost).unwrap(),
                "{zeta} on (n-1)-cycle"
            );
            count += 2;
        }
        for shape in TableShape::ALL {
            let Ok(zeta) = shape.partition(n) else {
                continue;
            };
            for k in 1..=n {
                let gamma = Partition::cycle_class(n, k).unwrap();
                assert_eq!(
                    closed_form_character(shape, &gamma).unwrap(),
                    engine.character(&zeta, &gamma).unwrap(),
                    "{shape:?} at n={n} on {gamma}"
                );
                count += 1;
            }
        }
    }
    count
}

/// Compares the nonzero characters on the class of a single `k`-cycle against `expected`. `absolute` compares `|chi|`.
pub fn check_support(
    n: usize,
    k: usize,
    expected: &BTreeMap<Partition, SupportRow>,
    absolute: bool,
) {
    let mut engine = CharacterEngine::new();
    let gamma = Partition::cycle_class(n, k).unwrap();
    let mut unexpected = Vec::new();
    for zeta in enumerate_partitions(n) {
        let chi = engine.character(&zeta, &gamma).unwrap();
        match expected.get(&zeta) {
            Some(row) => {
                let got = if absolute {
                    BigInt::from(chi.magnitude().clone())
                } else {
                    chi.clone()
                };
                assert_eq!(got, row.character, "n={n}: character of {zeta}");
                assert_eq!(
                    zeta.dimension(),
                    row.dimension,
                    "n={n}: dimension of {zeta}"
                );
            }
            None if !chi.is_zero() => unexpected.push(format!("{zeta} -> {chi}")),
            None => {}
        }
    }
    assert!(
        unexpected.is_empty(),
        "n={n} k={k}: nonzero outside the table: {unexpected:?}"
    );
}

/// Both support tables for `n` in `8..=max_n`. Returns the number of rows.
pub fn check_support_tables(max_n: usize) -> usize {
    let mut rows = 0;
    for n in 8..=max_n {
        let t3 = support_on_n_minus_3(n);
        check_support(n, n - 3, &t3, true);
        let t4 = support_on_n_minus_2(n);
        check_support(n, n - 2, &t4, false);
        rows += t3.len() + t4.len();
    }
    rows
}
