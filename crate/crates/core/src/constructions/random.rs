use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abgroup::FpGroup;
use crate::complex::{Complex, Convention, Support};
use crate::snf::IntMatrix;
use crate::{Error, Modulus, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomShape {
    /// Sum of discs `ℤ/m -id→ ℤ/m` placed inside `lo..=hi`, zero outside.
    Window { lo: i64, hi: i64 },
    /// Period-2 sum of strands `·d`, `·(m/d)` over random divisors `d` of `m`.
    Periodic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomComplexParams {
    pub shape: RandomShape,
    /// Number of discs or strands; `0` gives the zero complex.
    pub summands: usize,
    pub convention: Convention,
}

/// Unimodular `U` with its inverse, built from random elementary operations.
fn unimodular(n: usize, rng: &mut ChaCha8Rng) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n == 0 {
        return (u, inv);
    }
    for _ in 0..3 * n {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        match rng.gen_range(0..4) {
            0 if a != b => {
                u.swap_rows(a, b);
                inv.swap_cols(a, b);
            }
            1 => {
                u.negate_row(a);
                inv.negate_col(a);
            }
            _ if a != b => {
                let k = BigInt::from(rng.gen_range(-3i64..=3));
                u.add_row_multiple(a, b, &k);
                inv.add_col_multiple(b, a, &-k);
            }
            _ => {}
        }
    }
    (u, inv)
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// A seeded exact complex of free `ℤ/m`-modules: discs or divisor strands,
/// conjugated degreewise by random unimodular changes of basis.
pub fn random_exact_complex(m: Modulus, seed: u64, params: RandomComplexParams) -> Result<Complex> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modulus = BigInt::from(m);
    let complex = match params.shape {
        RandomShape::Window { lo, hi } => {
            if hi < lo {
                return Err(Error::Shape(format!("empty window {lo}..{hi}")));
            }
            // a disc at n spans degrees n and n-1
            let mut tops = Vec::new();
            if hi > lo {
                for _ in 0..params.summands {
                    tops.push(rng.gen_range(lo + 1..=hi));
                }
            }
            let rank = |n: i64| tops.iter().filter(|&&t| t == n || t - 1 == n).count();
            let degrees: Vec<i64> = (lo..=hi).collect();
            let changes: BTreeMap<i64, (IntMatrix, IntMatrix)> =
                degrees.iter().map(|&n| (n, unimodular(rank(n), &mut rng))).collect();
            let mut diffs = BTreeMap::new();
            for n in lo + 1..=hi {
                // basis of cell n: discs touching n in order of `tops`
                let src: Vec<usize> = tops.iter().enumerate().filter(|(_, &t)| t == n || t - 1 == n).map(|(k, _)| k).collect();
                let tgt: Vec<usize> =
                    tops.iter().enumerate().filter(|(_, &t)| t == n - 1 || t - 1 == n - 1).map(|(k, _)| k).collect();
                let d = IntMatrix::from_fn(tgt.len(), src.len(), |r, c| {
                    BigInt::from((tops[src[c]] == n && tgt[r] == src[c]) as i64)
                });
                let conj = &(&changes[&(n - 1)].0 * &d) * &changes[&n].1;
                diffs.insert(n, conj.reduce_mod(&modulus));
            }
            let cells = degrees.iter().map(|&n| Arc::new(FpGroup::free(m, rank(n)))).collect();
            Complex::new(
                Convention::Homological,
                m,
                Support::Window { lo, hi, zero_outside: true },
                cells,
                diffs,
            )?
        }
        RandomShape::Periodic => {
            let divs = divisors(m);
            let k = params.summands;
            let ds: Vec<u64> = (0..k).map(|_| divs[rng.gen_range(0..divs.len())]).collect();
            let (u0, u0inv) = unimodular(k, &mut rng);
            let (u1, u1inv) = unimodular(k, &mut rng);
            let even = IntMatrix::diagonal(k, k, &ds);
            let odd = IntMatrix::diagonal(k, k, &ds.iter().map(|d| m / d).collect::<Vec<_>>());
            let d0 = &(&u1 * &even) * &u0inv;
            let d1 = &(&u0 * &odd) * &u1inv;
            let cell = Arc::new(FpGroup::free(m, k));
            Complex::new(
                Convention::Homological,
                m,
                Support::Periodic { period: 2 },
                vec![cell.clone(), cell],
                BTreeMap::from([(0, d0.reduce_mod(&modulus)), (1, d1.reduce_mod(&modulus))]),
            )?
        }
    };
    if !complex.is_exact()? {
        return Err(Error::InvalidComplex {
            degree: 0,
            reason: "generated complex is not exact".into(),
        });
    }
    Ok(match params.convention {
        Convention::Homological => complex,
        Convention::Cohomological => complex.reindexed(),
    })
}
