//! Finite checks of the inequalities that drive the classification.
//!
//! Each check evaluates one family of character or eigenvalue comparisons
//! over its full hypothesis range at a fixed `n` and records a witness for
//! every violated instance. Thresholds on `n` and parity are part of each
//! family's hypothesis; families that do not apply at `n` are skipped.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::partitions::{factorial, Partition};
use crate::spectra::{connection_specs_between, ConnectionSpec, CycleCharacterTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

impl Parity {
    fn admits(self, n: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => n % 2 == 1,
            Parity::Even => n.is_multiple_of(2),
        }
    }
}

type CheckFn = fn(&CycleCharacterTable, &mut Recorder) -> Result<()>;

pub struct InequalityFamily {
    pub name: &'static str,
    pub min_n: usize,
    pub parity: Parity,
    check: CheckFn,
}

impl InequalityFamily {
    pub fn applies(&self, n: usize) -> bool {
        n >= self.min_n && self.parity.admits(n)
    }

    pub fn run(&self, table: &CycleCharacterTable) -> Result<FamilyOutcome> {
        let mut rec = Recorder::default();
        let applicable = self.applies(table.n());
        if applicable {
            (self.check)(table, &mut rec)?;
        }
        Ok(FamilyOutcome {
            name: self.name,
            n: table.n(),
            applicable,
            cases: rec.cases,
            witnesses: rec.witnesses,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyOutcome {
    pub name: &'static str,
    pub n: usize,
    pub applicable: bool,
    pub cases: usize,
    pub witnesses: Vec<String>,
}

impl FamilyOutcome {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Default)]
pub struct Recorder {
    cases: usize,
    witnesses: Vec<String>,
}

impl Recorder {
    fn check(&mut self, holds: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !holds {
            self.witnesses.push(witness());
        }
    }
}

pub const FAMILIES: &[InequalityFamily] = &[
    InequalityFamily {
        name: "normalized_character_below_falling_ratio",
        min_n: 8,
        parity: Parity::Any,
        check: normalized_character_below_falling_ratio,
    },
    InequalityFamily {
        name: "standard_dominates_normalized_characters",
        min_n: 7,
        parity: Parity::Any,
        check: standard_dominates_normalized_characters,
    },
    InequalityFamily {
        name: "sign_beats_standard_for_odd_largest_cycle",
        min_n: 7,
        parity: Parity::Any,
        check: sign_beats_standard_for_odd_largest_cycle,
    },
    InequalityFamily {
        name: "standard_beats_sign_for_even_largest_cycle",
        min_n: 7,
        parity: Parity::Any,
        check: standard_beats_sign_for_even_largest_cycle,
    },
    InequalityFamily {
        name: "sign_standard_gap_with_n_minus_one_cycles",
        min_n: 8,
        parity: Parity::Even,
        check: sign_standard_gap_with_n_minus_one_cycles,
    },
    InequalityFamily {
        name: "long_hooks_vanish_or_are_dominated",
        min_n: 7,
        parity: Parity::Any,
        check: long_hooks,
    },
    InequalityFamily {
        name: "hook_eigenvalues_with_full_cycles",
        min_n: 7,
        parity: Parity::Any,
        check: hook_eigenvalues_with_full_cycles,
    },
    InequalityFamily {
        name: "two_row_hooks_dominated_on_short_cycles",
        min_n: 7,
        parity: Parity::Any,
        check: two_row_hooks_dominated_on_short_cycles,
    },
    InequalityFamily {
        name: "two_row_hooks_on_n_minus_one_cycles",
        min_n: 7,
        parity: Parity::Any,
        check: two_row_hooks_on_n_minus_one_cycles,
    },
    InequalityFamily {
        name: "three_two_one_dominates_two_row_hooks",
        min_n: 7,
        parity: Parity::Any,
        check: three_two_one_dominates_two_row_hooks,
    },
    InequalityFamily {
        name: "sign_standard_gap_with_full_cycles",
        min_n: 7,
        parity: Parity::Odd,
        check: sign_standard_gap_with_full_cycles,
    },
    InequalityFamily {
        name: "standard_beats_sign_with_full_cycles",
        min_n: 8,
        parity: Parity::Even,
        check: standard_beats_sign_with_full_cycles,
    },
    InequalityFamily {
        name: "two_hook_dominates_non_hooks_with_full_cycles",
        min_n: 9,
        parity: Parity::Any,
        check: two_hook_dominates_non_hooks_with_full_cycles,
    },
    InequalityFamily {
        name: "sign_versus_standard_with_both_long_cycles",
        min_n: 7,
        parity: Parity::Odd,
        check: sign_versus_standard_with_both_long_cycles,
    },
    InequalityFamily {
        name: "two_hook_beats_two_row_hooks_with_both_long_cycles",
        min_n: 7,
        parity: Parity::Any,
        check: two_hook_beats_two_row_hooks_with_both_long_cycles,
    },
    InequalityFamily {
        name: "standard_conjugate_below_standard",
        min_n: 4,
        parity: Parity::Any,
        check: standard_conjugate_below_standard,
    },
];

/// Runs every family at `table.n()`, in declaration order.
pub fn run_all(table: &CycleCharacterTable) -> Result<Vec<FamilyOutcome>> {
    FAMILIES.iter().map(|f| f.run(table)).collect()
}

fn hook(n: usize, m: usize) -> Partition {
    Partition::hook(n, m).expect("0 <= m < n")
}

/// `(n-m, 2, 1^{m-2})`, for `2 <= m <= n-2`.
fn two_row_hook(n: usize, m: usize) -> Partition {
    Partition::from_blocks(&[(n - m, 1), (2, 1), (1, m - 2)]).expect("2 <= m <= n-2")
}

fn shape(blocks: &[(usize, usize)]) -> Partition {
    Partition::from_blocks(blocks).expect("valid shape")
}

fn is_named_exception(zeta: &Partition, n: usize) -> bool {
    *zeta == hook(n, 0) || *zeta == hook(n, n - 1) || *zeta == hook(n, 1) || *zeta == hook(n, n - 2)
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn int(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn fact(n: usize) -> BigInt {
    BigInt::from(factorial(n))
}

fn range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

struct Lambda<'a> {
    table: &'a CycleCharacterTable,
}

impl Lambda<'_> {
    fn of(&self, zeta: &Partition, spec: &ConnectionSpec) -> Result<BigInt> {
        self.table.eigenvalue(zeta, spec)
    }
}

fn normalized_character_below_falling_ratio(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    for k in 2..=n - 3 {
        let bound = ratio((n - k) * (n - k - 1), n * (n - 1));
        for zeta in t.partitions().iter().filter(|z| !is_named_exception(z, n)) {
            let value = t.normalized(zeta, k)?;
            rec.check(value < bound, || {
                format!("n={n} k={k} zeta={zeta}: {value} >= {bound}")
            });
        }
    }
    Ok(())
}

fn standard_dominates_normalized_characters(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let std = hook(n, 1);
    for k in 2..=n - 2 {
        let top = t.normalized(&std, k)?;
        for zeta in t.partitions().iter().filter(|z| !is_named_exception(z, n)) {
            let value = t.normalized(zeta, k)?;
            rec.check(value < top, || {
                format!("n={n} k={k} zeta={zeta}: {value} >= {top}")
            });
        }
    }
    Ok(())
}

fn sign_beats_standard_for_odd_largest_cycle(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let (sign, std) = (hook(n, n - 1), hook(n, 1));
    for spec in connection_specs_between(n, &[], &range(2, n - 1)) {
        let pair = spec.cycles().iter().copied().eq([2, 3]);
        if !pair && spec.max() % 2 == 0 {
            continue;
        }
        let (s, d) = (lam.of(&sign, &spec)?, lam.of(&std, &spec)?);
        if pair {
            rec.check(s == d, || format!("{spec}: sign {s} != standard {d}"));
        } else {
            rec.check(s > d, || format!("{spec}: sign {s} <= standard {d}"));
        }
    }
    Ok(())
}

fn standard_beats_sign_for_even_largest_cycle(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let (sign, std) = (hook(n, n - 1), hook(n, 1));
    for spec in connection_specs_between(n, &[], &range(2, n - 1)) {
        if spec.max() % 2 == 1 {
            continue;
        }
        let (s, d) = (lam.of(&sign, &spec)?, lam.of(&std, &spec)?);
        rec.check(d > s, || format!("{spec}: standard {d} <= sign {s}"));
    }
    Ok(())
}

fn sign_standard_gap_with_n_minus_one_cycles(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let (sign, std) = (hook(n, n - 1), hook(n, 1));
    // gap > n(n-5)(n-3)!/3, compared after scaling by 3
    let bound = int(n * (n - 5)) * fact(n - 3);
    for spec in connection_specs_between(n, &[n - 1], &range(2, n - 1)) {
        let gap = lam.of(&sign, &spec)? - lam.of(&std, &spec)?;
        rec.check(int(3) * &gap > bound, || {
            format!("{spec}: 3·gap {} <= {bound}", int(3) * &gap)
        });
    }
    Ok(())
}

fn long_hooks(t: &CycleCharacterTable, rec: &mut Recorder) -> Result<()> {
    let n = t.n();
    for k in [n - 3, n - 2, n - 1] {
        for m in 3..=n - 4 {
            let value = t.normalized(&hook(n, m), k)?;
            rec.check(value.is_zero(), || {
                format!("n={n} k={k} m={m}: hook character {value} != 0")
            });
        }
    }
    let (three, two) = (hook(n, 3), hook(n, 2));
    for k in 2..=n - 4 {
        let mid = t.normalized(&three, k)?;
        let top = t.normalized(&two, k)?;
        rec.check(mid < top, || {
            format!("n={n} k={k}: (n-3,1^3) {mid} >= (n-2,1^2) {top}")
        });
        for m in 4..=n.saturating_sub(5) {
            let value = t.normalized(&hook(n, m), k)?;
            rec.check(value < mid, || {
                format!("n={n} k={k} m={m}: {value} >= (n-3,1^3) {mid}")
            });
        }
    }
    Ok(())
}

fn hook_eigenvalues_with_full_cycles(t: &CycleCharacterTable, rec: &mut Recorder) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let two_conj = hook(n, n - 3);
    let std_conj = hook(n, n - 2);
    let allowed_top = [1, 2, n - 3, n - 2, n - 1];
    let full_but_one = ConnectionSpec::new(n, (2..=n - 2).chain([n]))?;
    let full = ConnectionSpec::new(n, 2..=n)?;
    for spec in connection_specs_between(n, &[n], &range(2, n)) {
        let hooks: Vec<BigInt> = (1..n)
            .map(|m| lam.of(&hook(n, m), &spec))
            .collect::<Result<_>>()?;
        let best = hooks.iter().max().expect("n >= 2").clone();
        let attained: Vec<usize> = (1..n).filter(|&m| hooks[m - 1] == best).collect();
        rec.check(attained.iter().all(|m| allowed_top.contains(m)), || {
            format!("{spec}: hook maximum attained at m={attained:?}")
        });

        let (l_two, l_std) = (&hooks[1], &hooks[0]);
        let equal_expected = spec == full_but_one || spec == full;
        rec.check(l_two >= l_std && ((l_two == l_std) == equal_expected), || {
            format!("{spec}: (n-2,1^2) {l_two} vs standard {l_std}, equality expected {equal_expected}")
        });

        if n.is_multiple_of(2) && equal_expected {
            let l_std_conj = lam.of(&std_conj, &spec)?;
            rec.check(l_std_conj > *l_std && l_std == l_two, || {
                format!("{spec}: (2,1^(n-2)) {l_std_conj}, standard {l_std}, (n-2,1^2) {l_two}")
            });
        }

        let l_two_conj = lam.of(&two_conj, &spec)?;
        let only_odd = spec
            .cycles()
            .iter()
            .filter(|&&k| k != n - 1 && k != n - 2)
            .all(|k| k % 2 == 1);
        rec.check(*l_two >= l_two_conj && ((*l_two == l_two_conj) == only_odd), || {
            format!("{spec}: (n-2,1^2) {l_two} vs (3,1^(n-3)) {l_two_conj}, equality expected {only_odd}")
        });
    }
    Ok(())
}

fn two_row_hooks_dominated_on_short_cycles(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let mid_shape = two_row_hook(n, 3);
    let top_shape = two_row_hook(n, 2);
    for k in 2..=n - 5 {
        let mid = t.normalized(&mid_shape, k)?;
        let top = t.normalized(&top_shape, k)?;
        rec.check(mid < top, || {
            format!("n={n} k={k}: (n-3,2,1) {mid} >= (n-2,2) {top}")
        });
        for m in 4..=n - 4 {
            let value = t.normalized(&two_row_hook(n, m), k)?;
            rec.check(value < mid, || {
                format!("n={n} k={k} m={m}: {value} >= (n-3,2,1) {mid}")
            });
        }
    }
    Ok(())
}

fn two_row_hooks_on_n_minus_one_cycles(t: &CycleCharacterTable, rec: &mut Recorder) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let mid_shape = two_row_hook(n, 3);
    let mid = t.normalized(&mid_shape, n - 1)?;
    let top = t.normalized(&two_row_hook(n, 2), n - 1)?.abs();
    rec.check(mid < top, || {
        format!("n={n}: (n-3,2,1) {mid} >= |(n-2,2)| {top}")
    });
    let specs = connection_specs_between(n, &[n - 1], &[n - 4, n - 3, n - 1]);
    for m in 4..=n - 4 {
        let zeta = two_row_hook(n, m);
        let value = t.normalized(&zeta, n - 1)?;
        rec.check(value < mid, || {
            format!("n={n} m={m}: {value} >= (n-3,2,1) {mid}")
        });
        for spec in &specs {
            let (l, l_mid) = (lam.of(&zeta, spec)?, lam.of(&mid_shape, spec)?);
            rec.check(l < l_mid, || {
                format!("{spec} zeta={zeta}: {l} >= (n-3,2,1) {l_mid}")
            });
        }
    }
    Ok(())
}

fn three_two_one_dominates_two_row_hooks(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    for m in 3..=n - 3 {
        let value = t.normalized(&two_row_hook(n, m), n - 2)?;
        rec.check(value.is_zero(), || {
            format!("n={n} m={m}: character on (n-2,1^2) is {value}")
        });
    }
    for m in 2..=n - 2 {
        let value = t.normalized(&two_row_hook(n, m), n)?;
        rec.check(value.is_zero(), || {
            format!("n={n} m={m}: character on the n-cycle is {value}")
        });
    }
    let mid_shape = two_row_hook(n, 3);
    let family: Vec<Partition> = (4..=n - 4).map(|m| two_row_hook(n, m)).collect();
    for spec in connection_specs_between(n, &[n - 1], &range(2, n)) {
        let l_mid = lam.of(&mid_shape, &spec)?;
        for zeta in &family {
            let l = lam.of(zeta, &spec)?;
            rec.check(l < l_mid, || {
                format!("{spec} zeta={zeta}: {l} >= (n-3,2,1) {l_mid}")
            });
        }
    }
    Ok(())
}

fn with_full_cycle_specs(n: usize) -> Vec<ConnectionSpec> {
    let mut allowed = range(2, n - 2);
    allowed.push(n);
    connection_specs_between(n, &[n], &allowed)
}

fn sign_standard_gap_with_full_cycles(t: &CycleCharacterTable, rec: &mut Recorder) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let (sign, std) = (hook(n, n - 1), hook(n, 1));
    // gap > n(n-2)!/2, compared after scaling by 2
    let bound = int(n) * fact(n - 2);
    for spec in with_full_cycle_specs(n) {
        let gap = lam.of(&sign, &spec)? - lam.of(&std, &spec)?;
        rec.check(int(2) * &gap > bound, || {
            format!("{spec}: 2·gap {} <= {bound}", int(2) * &gap)
        });
    }
    Ok(())
}

fn standard_beats_sign_with_full_cycles(t: &CycleCharacterTable, rec: &mut Recorder) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let (sign, std) = (hook(n, n - 1), hook(n, 1));
    for spec in with_full_cycle_specs(n) {
        let (s, d) = (lam.of(&sign, &spec)?, lam.of(&std, &spec)?);
        rec.check(d > s, || format!("{spec}: standard {d} <= sign {s}"));
    }
    Ok(())
}

fn two_hook_dominates_non_hooks_with_full_cycles(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let two = hook(n, 2);
    let two_two = shape(&[(2, 2), (1, n - 4)]);
    let others: Vec<&Partition> = t
        .partitions()
        .iter()
        .filter(|z| z.hook_leg().is_none() && **z != two_two)
        .collect();
    for spec in with_full_cycle_specs(n) {
        let top = lam.of(&two, &spec)?;
        for zeta in &others {
            let l = lam.of(zeta, &spec)?;
            rec.check(l < top, || {
                format!("{spec} zeta={zeta}: {l} >= (n-2,1^2) {top}")
            });
        }
    }
    Ok(())
}

fn sign_versus_standard_with_both_long_cycles(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let (sign, std) = (hook(n, n - 1), hook(n, 1));
    let bare = ConnectionSpec::new(n, [n - 1, n])?;
    let with_pair = ConnectionSpec::new(n, [2, 3, n - 1, n])?;
    for spec in connection_specs_between(n, &[n - 1, n], &range(2, n)) {
        let (s, d) = (lam.of(&sign, &spec)?, lam.of(&std, &spec)?);
        if spec == bare || spec == with_pair {
            rec.check(s == d, || format!("{spec}: sign {s} != standard {d}"));
            continue;
        }
        let rest_max = spec
            .cycles()
            .iter()
            .copied()
            .filter(|&k| k < n - 1)
            .max()
            .expect("non-bare");
        if rest_max % 2 == 1 {
            rec.check(s > d, || format!("{spec}: sign {s} <= standard {d}"));
        } else {
            rec.check(d > s, || format!("{spec}: standard {d} <= sign {s}"));
        }
    }
    Ok(())
}

fn two_hook_beats_two_row_hooks_with_both_long_cycles(
    t: &CycleCharacterTable,
    rec: &mut Recorder,
) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let two = hook(n, 2);
    let ms: Vec<usize> = if n.is_multiple_of(2) {
        vec![2, 3, n - 3, n - 2]
    } else {
        vec![2, 3, n - 3]
    };
    for spec in connection_specs_between(n, &[n - 1, n], &range(2, n)) {
        let top = lam.of(&two, &spec)?;
        for &m in &ms {
            let l = lam.of(&two_row_hook(n, m), &spec)?;
            rec.check(top > l, || format!("{spec} m={m}: (n-2,1^2) {top} <= {l}"));
        }
    }
    Ok(())
}

fn standard_conjugate_below_standard(t: &CycleCharacterTable, rec: &mut Recorder) -> Result<()> {
    let n = t.n();
    let lam = Lambda { table: t };
    let (std, std_conj) = (hook(n, 1), hook(n, n - 2));
    for spec in connection_specs_between(n, &[], &range(2, n - 1)) {
        let (d, c) = (lam.of(&std, &spec)?, lam.of(&std_conj, &spec)?);
        let strict = spec.cycles().iter().any(|&k| k % 2 == 0 && k < n - 1);
        let holds = if strict { c < d } else { c <= d };
        rec.check(holds, || {
            format!("{spec}: (2,1^(n-2)) {c} vs standard {d}, strict {strict}")
        });
    }
    Ok(())
}
