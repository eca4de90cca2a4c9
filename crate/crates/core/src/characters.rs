//! Irreducible characters of `S_n` by the Murnaghan–Nakayama recursion.
//!
//! `χ_ζ(γ)` is computed by peeling the largest cycle `m` off `γ` and summing
//! `(-1)^ht · χ_μ(γ minus m)` over every `m`-border strip `ζ/μ`. Subproblems
//! repeat heavily across a spectrum sweep, so a [`CharacterEngine`] keeps a
//! memo table keyed by the `(ζ, γ)` pair. An engine is meant to be owned by
//! one thread; share results, not engines.
//!
//! The closed forms in this module (hook classes on full cycles, the
//! `(n-1)`-cycle rule and the low-degree polynomial table) are cross-checks
//! for the recursion and are never used as the default path.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Default)]
pub struct CharacterEngine {
    memo: HashMap<(Partition, Partition), BigInt>,
    hits: u64,
}

impl CharacterEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ_ζ(γ)`; both partitions must have the same size.
    pub fn character(&mut self, zeta: &Partition, gamma: &Partition) -> Result<BigInt> {
        if zeta.size() != gamma.size() {
            return Err(Error::SizeMismatch {
                left: zeta.size(),
                right: gamma.size(),
            });
        }
        Ok(self.recurse(zeta, gamma))
    }

    /// `χ_ζ(γ) / dim ρ_ζ` as a reduced rational.
    pub fn normalized_character(
        &mut self,
        zeta: &Partition,
        gamma: &Partition,
    ) -> Result<BigRational> {
        let value = self.character(zeta, gamma)?;
        let dim = BigInt::from(zeta.dimension());
        Ok(BigRational::new(value, dim))
    }

    /// Number of memoized `(ζ, γ)` entries.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn memo_hits(&self) -> u64 {
        self.hits
    }

    fn recurse(&mut self, zeta: &Partition, gamma: &Partition) -> BigInt {
        let Some(m) = gamma.first() else {
            return BigInt::one();
        };
        // trivial rep: skip the table
        if zeta.len() == 1 {
            return BigInt::one();
        }
        let key = (zeta.clone(), gamma.clone());
        if let Some(v) = self.memo.get(&key) {
            self.hits += 1;
            return v.clone();
        }
        let rest = gamma.without_first();
        let mut total = BigInt::zero();
        for strip in zeta.border_strip_removals(m) {
            let sub = self.recurse(&strip.remainder, &rest);
            if strip.height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// One-shot character evaluation with a private memo table.
pub fn character(zeta: &Partition, gamma: &Partition) -> Result<BigInt> {
    CharacterEngine::new().character(zeta, gamma)
}

pub fn normalized_character(zeta: &Partition, gamma: &Partition) -> Result<BigRational> {
    CharacterEngine::new().normalized_character(zeta, gamma)
}

/// `χ_ζ((n))`: `(-1)^m` on the hook `(n-m, 1^m)`, zero elsewhere.
pub fn character_on_n_cycle(zeta: &Partition) -> BigInt {
    match zeta.hook_leg() {
        Some(m) if m % 2 == 0 => BigInt::one(),
        Some(_) => -BigInt::one(),
        None => BigInt::zero(),
    }
}

/// `χ_ζ((n-1, 1))` for `n >= 3`.
pub fn character_on_n_minus_1_cycle(zeta: &Partition) -> Result<BigInt> {
    let n = zeta.size();
    if n < 3 {
        return Err(Error::CycleLengthOutOfRange {
            n,
            k: n.saturating_sub(1),
        });
    }
    let sign = |e: usize| {
        if e.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    if zeta.len() == 1 {
        return Ok(BigInt::one());
    }
    if zeta.first() == Some(1) {
        return Ok(sign(n - 2));
    }
    // (n-m, 2, 1^{m-2}) with 2 <= m <= n-2
    let parts = zeta.parts();
    if parts.len() >= 2 && parts[1] == 2 && parts[2..].iter().all(|&p| p == 1) {
        let m = n - parts[0];
        if (2..=n - 2).contains(&m) {
            return Ok(sign(m - 1));
        }
    }
    Ok(BigInt::zero())
}

/// The eight low-degree shapes whose characters are polynomials in the
/// cycle counts `c_1, …, c_4` of the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableShape {
    /// `(n)`
    Trivial,
    /// `(n-1,1)`
    Standard,
    /// `(n-2,2)`
    TwoRowTwo,
    /// `(n-2,1^2)`
    HookTwo,
    /// `(n-3,3)`
    TwoRowThree,
    /// `(n-3,2,1)`
    ThreeTwoOne,
    /// `(n-3,1^3)`
    HookThree,
    /// `(n-4,2,1^2)`
    FourTwoOneOne,
}

impl TableShape {
    pub const ALL: [TableShape; 8] = [
        TableShape::Trivial,
        TableShape::Standard,
        TableShape::TwoRowTwo,
        TableShape::HookTwo,
        TableShape::TwoRowThree,
        TableShape::ThreeTwoOne,
        TableShape::HookThree,
        TableShape::FourTwoOneOne,
    ];

    fn label(self) -> &'static str {
        match self {
            TableShape::Trivial => "(n)",
            TableShape::Standard => "(n-1,1)",
            TableShape::TwoRowTwo => "(n-2,2)",
            TableShape::HookTwo => "(n-2,1^2)",
            TableShape::TwoRowThree => "(n-3,3)",
            TableShape::ThreeTwoOne => "(n-3,2,1)",
            TableShape::HookThree => "(n-3,1^3)",
            TableShape::FourTwoOneOne => "(n-4,2,1^2)",
        }
    }

    /// The shape instantiated at `n`, if it is a partition there.
    pub fn partition(self, n: usize) -> Result<Partition> {
        let undefined = Error::ShapeUndefined {
            shape: self.label(),
            n,
        };
        let (head, tail): (usize, &[usize]) = match self {
            TableShape::Trivial => (0, &[]),
            TableShape::Standard => (1, &[1]),
            TableShape::TwoRowTwo => (2, &[2]),
            TableShape::HookTwo => (2, &[1, 1]),
            TableShape::TwoRowThree => (3, &[3]),
            TableShape::ThreeTwoOne => (3, &[2, 1]),
            TableShape::HookThree => (3, &[1, 1, 1]),
            TableShape::FourTwoOneOne => (4, &[2, 1, 1]),
        };
        if n <= head || n - head < tail.first().copied().unwrap_or(1) {
            return Err(undefined);
        }
        let mut parts = vec![n - head];
        parts.extend_from_slice(tail);
        Partition::new(parts).map_err(|_| undefined)
    }

    /// Dimension as a polynomial in `n`.
    pub fn dimension_formula(self, n: usize) -> Result<BigUint> {
        self.partition(n)?;
        let n = BigRational::from_integer(BigInt::from(n));
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        let value = match self {
            TableShape::Trivial => r(1),
            TableShape::Standard => &n - r(1),
            TableShape::TwoRowTwo => &n * (&n - r(3)) / r(2),
            TableShape::HookTwo => (&n - r(1)) * (&n - r(2)) / r(2),
            TableShape::TwoRowThree => &n * (&n - r(1)) * (&n - r(5)) / r(6),
            TableShape::ThreeTwoOne => &n * (&n - r(2)) * (&n - r(4)) / r(3),
            TableShape::HookThree => (&n - r(1)) * (&n - r(2)) * (&n - r(3)) / r(6),
            TableShape::FourTwoOneOne => &n * (&n - r(2)) * (&n - r(3)) * (&n - r(5)) / r(8),
        };
        exact_integer(&value)
            .and_then(|v| v.to_biguint())
            .ok_or_else(|| {
                Error::Internal(format!(
                    "dimension of {} at n not a natural number",
                    self.label()
                ))
            })
    }

    /// Evaluates the closed-form character on class `γ`.
    pub fn character(self, gamma: &Partition) -> Result<BigInt> {
        self.partition(gamma.size())?;
        let c = |i: usize| BigRational::from_integer(BigInt::from(gamma.multiplicity(i)));
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        let (c1, c2, c3, c4) = (c(1), c(2), c(3), c(4));
        let value = match self {
            TableShape::Trivial => r(1),
            TableShape::Standard => &c1 - r(1),
            TableShape::TwoRowTwo => &c1 * (&c1 - r(3)) / r(2) + &c2,
            TableShape::HookTwo => (&c1 - r(1)) * (&c1 - r(2)) / r(2) - &c2,
            TableShape::TwoRowThree => {
                &c1 * (&c1 - r(1)) * (&c1 - r(5)) / r(6) + (&c1 - r(1)) * &c2 + &c3
            }
            TableShape::ThreeTwoOne => &c1 * (&c1 - r(2)) * (&c1 - r(4)) / r(3) - &c3,
            TableShape::HookThree => {
                (&c1 - r(1)) * (&c1 - r(2)) * (&c1 - r(3)) / r(6) - (&c1 - r(1)) * &c2 + &c3
            }
            TableShape::FourTwoOneOne => {
                &c1 * (&c1 - r(2)) * (&c1 - r(3)) * (&c1 - r(5)) / r(8)
                    - (&c1 * &c1 - r(3) * &c1 - r(1)) * &c2 / r(2)
                    - &c2 * &c2 / r(2)
                    + &c4
            }
        };
        exact_integer(&value).ok_or_else(|| {
            Error::Internal(format!(
                "closed form {} is not integral at {gamma}",
                self.label()
            ))
        })
    }
}

impl fmt::Display for TableShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `closed_form_character(shape, γ)`.
pub fn closed_form_character(shape: TableShape, gamma: &Partition) -> Result<BigInt> {
    shape.character(gamma)
}

pub(crate) fn exact_integer(value: &BigRational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// `|χ| <= dim` check used by callers that hold both numbers.
pub fn within_dimension_bound(value: &BigInt, dimension: &BigUint) -> bool {
    value.abs() <= BigInt::from(dimension.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn basic_values() {
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), int(-1));
        for gamma in enumerate_partitions(6) {
            assert_eq!(character(&p(&[6]), &gamma).unwrap(), int(1));
        }
        // c1 = 4, c2 = 1: 4·1/2 + 1
        assert_eq!(
            character(&p(&[4, 2]), &p(&[2, 1, 1, 1, 1])).unwrap(),
            int(3)
        );
        assert_eq!(
            character(&Partition::empty(), &Partition::empty()).unwrap(),
            int(1)
        );
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(matches!(
            character(&p(&[2, 1]), &p(&[2])),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn normalized_on_cycle_classes() {
        for n in 4..10usize {
            let sign = p(&vec![1; n]);
            let standard = Partition::hook(n, 1).unwrap();
            for k in 2..=n {
                let gamma = Partition::cycle_class(n, k).unwrap();
                let s = if (k - 1) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    normalized_character(&sign, &gamma).unwrap(),
                    BigRational::from_integer(int(s))
                );
                let expected = BigRational::new(int(n as i64 - k as i64 - 1), int(n as i64 - 1));
                assert_eq!(normalized_character(&standard, &gamma).unwrap(), expected);
            }
            let hook2 = Partition::hook(n, 2).unwrap();
            let gamma = Partition::cycle_class(n, n - 1).unwrap();
            assert!(normalized_character(&hook2, &gamma).unwrap().is_zero());
        }
    }

    #[test]
    fn full_cycle_rule() {
        for n in 4..12usize {
            assert_eq!(
                character_on_n_cycle(&Partition::hook(n, 2).unwrap()),
                int(1)
            );
            assert_eq!(character_on_n_cycle(&p(&[n - 2, 2])), int(0));
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(character_on_n_cycle(&p(&vec![1; n])), int(sign));
            let mut engine = CharacterEngine::new();
            for zeta in enumerate_partitions(n) {
                assert_eq!(
                    character_on_n_cycle(&zeta),
                    engine.character(&zeta, &p(&[n])).unwrap(),
                    "{zeta}"
                );
            }
        }
    }

    #[test]
    fn long_cycle_rule() {
        for n in 4..12usize {
            assert_eq!(character_on_n_minus_1_cycle(&p(&[n])).unwrap(), int(1));
            assert_eq!(
                character_on_n_minus_1_cycle(&p(&[n - 2, 2])).unwrap(),
                int(-1)
            );
            assert_eq!(
                character_on_n_minus_1_cycle(&Partition::hook(n, 2).unwrap()).unwrap(),
                int(0)
            );
            let gamma = Partition::cycle_class(n, n - 1).unwrap();
            let mut engine = CharacterEngine::new();
            for zeta in enumerate_partitions(n) {
                assert_eq!(
                    character_on_n_minus_1_cycle(&zeta).unwrap(),
                    engine.character(&zeta, &gamma).unwrap(),
                    "{zeta}"
                );
            }
        }
        assert!(character_on_n_minus_1_cycle(&p(&[2])).is_err());
    }

    #[test]
    fn closed_form_examples() {
        for n in 4..10usize {
            let ones = p(&vec![1; n]);
            let expected = (n * (n - 3) / 2) as i64;
            assert_eq!(
                TableShape::TwoRowTwo.character(&ones).unwrap(),
                int(expected)
            );
        }
        for gamma in enumerate_partitions(7) {
            let c1 = gamma.multiplicity(1) as i64;
            assert_eq!(TableShape::Standard.character(&gamma).unwrap(), int(c1 - 1));
        }
        for n in 6..12i64 {
            let gamma = Partition::cycle_class(n as usize, 3).unwrap();
            let expected = (n - 3) * (n - 5) * (n - 7) / 3 - 1;
            assert_eq!(
                TableShape::ThreeTwoOne.character(&gamma).unwrap(),
                int(expected)
            );
        }
        assert!(matches!(
            TableShape::TwoRowThree.character(&p(&[1, 1, 1, 1, 1])),
            Err(Error::ShapeUndefined { .. })
        ));
        assert!(TableShape::TwoRowThree.partition(6).is_ok());
        assert!(TableShape::FourTwoOneOne.partition(5).is_err());
    }

    #[test]
    fn closed_form_dimensions_match_hook_formula() {
        for n in 1..15 {
            for shape in TableShape::ALL {
                if let Ok(zeta) = shape.partition(n) {
                    assert_eq!(
                        shape.dimension_formula(n).unwrap(),
                        zeta.dimension(),
                        "{shape} at {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn memo_is_reused() {
        let mut engine = CharacterEngine::new();
        for zeta in enumerate_partitions(9) {
            for gamma in enumerate_partitions(9) {
                engine.character(&zeta, &gamma).unwrap();
            }
        }
        assert!(engine.memo_len() > 0);
        assert!(engine.memo_hits() > 0);
    }
}
