//! Seeded verification suites. Every suite compares the library against an
//! independent oracle (brute force, determinant formulas, or a second route
//! through the algebra) and reports each failed check.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abgroup::{hom_group, tensor_group, FpGroup, GroupType};
use crate::bicomplex::{Bicomplex, Bidegree, Direction};
use crate::complex::{hom_from_module, hom_into_module, Complex, Convention};
use crate::constructions::{
    hom_bicomplex, random_exact_complex, tensor_bicomplex, zprime_witness, zsecond_witness, RandomComplexParams,
    RandomShape,
};
use crate::snf::{smith_normal_form, IntMatrix};
use crate::tate::{TateKind, TateSetup};
use crate::{Modulus, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Smith normal form against the gcd-of-minors formula.
    Snf,
    /// Hom and ⊗ of small groups against brute-force counting.
    Groups,
    /// Core invariant and the diagonal shift on random bicomplexes.
    Chase,
    /// Cocycle/Hom identifications compose to the identity.
    Witness,
    /// Core invariant against the two Hom-of-cycles descriptions.
    Triple,
    /// Tate balance for random modules.
    Balance,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Snf,
        Suite::Groups,
        Suite::Chase,
        Suite::Witness,
        Suite::Triple,
        Suite::Balance,
    ];

    pub fn default_cases(self) -> usize {
        match self {
            Suite::Snf => 500,
            Suite::Groups => group_list().len(),
            Suite::Chase => 50,
            Suite::Witness | Suite::Triple | Suite::Balance => 20,
        }
    }
}

/// A deliberate corruption applied to generated inputs, used to show that
/// suites can fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Adds 1 to one entry of a differential of every generated complex.
    CorruptDifferential,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    pub checks: usize,
    /// Checks that involved a nonzero homology class or group, as a
    /// guard against suites that only ever see zero.
    pub nontrivial: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    nontrivial: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Runs one case; an error counts as a failed check.
    fn case(&mut self, label: String, f: impl FnOnce(&mut Tally) -> Result<()>) {
        if let Err(e) = f(self) {
            self.checks += 1;
            self.failures.push(format!("{label}: {e}"));
        }
    }
}

pub fn run_suite(suite: Suite, seed: u64, cases: usize, fault: Fault) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    match suite {
        Suite::Snf => snf_suite(&mut rng, cases, &mut t),
        Suite::Groups => groups_suite(cases, &mut t),
        Suite::Chase => chase_suite(&mut rng, cases, fault, &mut t),
        Suite::Witness => witness_suite(&mut rng, cases, fault, &mut t),
        Suite::Triple => triple_suite(&mut rng, cases, fault, &mut t),
        Suite::Balance => balance_suite(&mut rng, cases, fault, &mut t),
    }
    SuiteReport {
        suite,
        seed,
        cases,
        checks: t.checks,
        nontrivial: t.nontrivial,
        failures: t.failures,
    }
}

/// Adds 1 to entry `(0,0)` of the first nonempty stored differential,
/// starting from degree 0. A complex without such an entry is returned as is.
pub fn corrupt(c: &Complex) -> Result<Complex> {
    let mut diffs = c.stored_diffs();
    let mut keys: Vec<i64> = diffs.keys().copied().collect();
    keys.sort_by_key(|n| (n.abs(), *n));
    if let Some(n) = keys.into_iter().find(|n| diffs[n].rows() > 0 && diffs[n].cols() > 0) {
        let m = diffs.get_mut(&n).expect("key listed");
        m[(0, 0)] += 1;
    }
    Complex::new_unchecked(c.convention(), c.modulus(), c.support(), c.stored_cells().to_vec(), diffs)
}

// ---------------------------------------------------------------- snf

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let (r, c) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
    IntMatrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-9i64..=9)))
}

/// Fraction-free determinant; exact for the small entries used here.
fn bareiss(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// gcd of all `k×k` minors for `k = 1..=min(rows, cols)`.
fn minor_gcds(a: &IntMatrix) -> Vec<i128> {
    let entries: Vec<Vec<i128>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| x.to_i128().expect("small entry")).collect())
        .collect();
    (1..=a.rows().min(a.cols()))
        .map(|k| {
            let cols = combinations(a.cols(), k);
            let mut g = 0i128;
            for rows in combinations(a.rows(), k) {
                for cs in &cols {
                    let sub = rows.iter().map(|&r| cs.iter().map(|&c| entries[r][c]).collect()).collect();
                    g = g.gcd(&bareiss(sub));
                }
            }
            g
        })
        .collect()
}

fn snf_suite(rng: &mut ChaCha8Rng, cases: usize, t: &mut Tally) {
    for case in 0..cases {
        let a = random_matrix(rng);
        let s = smith_normal_form(&a);
        let label = || format!("matrix {case} {a:?}");
        let (r, c) = a.shape();
        t.check(&(&s.u * &a) * &s.v == s.d, || format!("{}: D ≠ U·A·V", label()));
        t.check(&s.u * &s.u_inv == IntMatrix::identity(r), || format!("{}: U·U⁻¹ ≠ I", label()));
        t.check(&s.v * &s.v_inv == IntMatrix::identity(c), || format!("{}: V·V⁻¹ ≠ I", label()));
        t.check(s.u.is_unimodular() && s.v.is_unimodular(), || format!("{}: not unimodular", label()));
        let off_diagonal_zero = (0..r).all(|i| (0..c).all(|j| i == j || s.d[(i, j)].is_zero()));
        t.check(off_diagonal_zero, || format!("{}: D is not diagonal", label()));
        let diag = s.diagonal();
        let chain = diag.iter().all(|d| !d.is_negative())
            && diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() });
        t.check(chain, || format!("{}: diagonal {diag:?} is not a divisibility chain", label()));
        let mut product = BigInt::from(1);
        for (k, g) in minor_gcds(&a).into_iter().enumerate() {
            product *= &diag[k];
            t.check(product.abs() == BigInt::from(g), || {
                format!("{}: d₁⋯d{} = {product} but minors give {g}", label(), k + 1)
            });
        }
    }
}

// ---------------------------------------------------------------- groups

/// A group given by generators and relator columns, used both by the
/// library and by the brute-force counter.
struct Presented {
    label: &'static str,
    modulus: Modulus,
    rank: usize,
    /// One relator per entry, `rank` coefficients each.
    relators: Vec<Vec<i64>>,
    /// Cyclic orders when the presentation is diagonal.
    cyclic: Option<Vec<u64>>,
}

impl Presented {
    fn cyclic(label: &'static str, orders: &[u64]) -> Self {
        let rank = orders.len();
        let relators = (0..rank)
            .map(|k| (0..rank).map(|i| if i == k { orders[k] as i64 } else { 0 }).collect())
            .collect();
        Presented {
            label,
            modulus: 0,
            rank,
            relators,
            cyclic: Some(orders.to_vec()),
        }
    }

    fn skew(label: &'static str, modulus: Modulus, rank: usize, relators: &[&[i64]]) -> Self {
        Presented {
            label,
            modulus,
            rank,
            relators: relators.iter().map(|r| r.to_vec()).collect(),
            cyclic: None,
        }
    }

    fn group(&self) -> Arc<FpGroup> {
        let cols: Vec<Vec<BigInt>> =
            self.relators.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Arc::new(FpGroup::new(self.modulus, self.rank, IntMatrix::from_columns(self.rank, &cols)).expect("list entry"))
    }

    /// Relators with the ring's `m·eᵢ` made explicit.
    fn all_relators(&self) -> Vec<Vec<i64>> {
        let mut rels = self.relators.clone();
        if self.modulus > 0 {
            for i in 0..self.rank {
                rels.push((0..self.rank).map(|k| if k == i { self.modulus as i64 } else { 0 }).collect());
            }
        }
        rels
    }

    /// `|Hom(G, ℤ/h)|` by trying every assignment of generators.
    fn count_maps_to_cyclic(&self, h: u64) -> u64 {
        if h == 1 {
            return 1;
        }
        let rels = self.all_relators();
        let h = h as i64;
        let mut x = vec![0i64; self.rank];
        let mut count = 0;
        loop {
            if rels.iter().all(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>().rem_euclid(h) == 0) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == self.rank {
                    return count;
                }
                x[k] += 1;
                if x[k] < h {
                    break;
                }
                x[k] = 0;
                k += 1;
            }
        }
    }
}

fn group_list() -> Vec<Presented> {
    vec![
        Presented::cyclic("0", &[]),
        Presented::cyclic("Z/2", &[2]),
        Presented::cyclic("Z/3", &[3]),
        Presented::cyclic("Z/4", &[4]),
        Presented::cyclic("Z/6", &[6]),
        Presented::cyclic("Z/8", &[8]),
        Presented::cyclic("Z/12", &[12]),
        Presented::cyclic("Z/64", &[64]),
        Presented::cyclic("Z/2+Z/2", &[2, 2]),
        Presented::cyclic("Z/2+Z/4", &[2, 4]),
        Presented::cyclic("Z/4+Z/4", &[4, 4]),
        Presented::cyclic("Z/3+Z/9", &[3, 9]),
        Presented::cyclic("Z/2+Z/2+Z/2", &[2, 2, 2]),
        Presented::cyclic("Z/2+Z/3 (split)", &[2, 3]),
        Presented::skew("<a,b | 2a, 4a+6b>", 0, 2, &[&[2, 0], &[4, 6]]),
        Presented::skew("<a,b,c | a+b, 2b+2c, 3a+3c>", 0, 3, &[&[1, 1, 0], &[0, 2, 2], &[3, 0, 3]]),
        Presented::skew("<a,b | 2a+6b> over Z/8", 8, 2, &[&[2, 6]]),
        Presented::skew("<a,b,c | a-b, b-c> over Z/4", 4, 3, &[&[1, -1, 0], &[0, 1, -1]]),
        Presented::skew("<a | 10a, 4a>", 0, 1, &[&[10], &[4]]),
    ]
}

fn product_of_gcds(factors: &[BigInt], k: u64) -> BigInt {
    let k = BigInt::from(k);
    factors.iter().map(|d| d.gcd(&k)).product()
}

fn groups_suite(cases: usize, t: &mut Tally) {
    let list = group_list();
    let mut counts: HashMap<(usize, u64), u64> = HashMap::new();
    let mut count = |g: usize, h: u64| *counts.entry((g, h)).or_insert_with(|| list[g].count_maps_to_cyclic(h));
    for (gi, g) in list.iter().enumerate().take(cases) {
        let group = g.group();
        for h in list.iter().filter(|h| h.cyclic.is_some()) {
            let orders = h.cyclic.as_ref().expect("filtered");
            let target = h.group();
            let label = format!("{} vs {}", g.label, h.label);

            // Hom(G, H)[k] = Hom(G, H[k]) with H[k] = ⊕ ℤ/gcd(hₜ, k)
            let hom = hom_group(&group, &target);
            let brute: u64 = orders.iter().map(|&o| count(gi, o)).product();
            let order = hom.group().order().expect("finite");
            t.check(order == BigInt::from(brute), || format!("{label}: |Hom| = {order}, brute force {brute}"));
            // G ⊗ H is detected by |Hom(G⊗H, ℤ/k)| = |Hom(G, Hom(H, ℤ/k))|
            let tensor = tensor_group(&group, &target);
            for k in 1..=64 {
                let brute_hom: u64 = orders.iter().map(|&o| count(gi, o.gcd(&k))).product();
                let hom_k = product_of_gcds(hom.group().invariant_factors(), k);
                t.check(hom_k == BigInt::from(brute_hom), || {
                    format!("{label}: Hom(G,H)[{k}] has {hom_k} elements, brute force {brute_hom}")
                });
                let dual = product_of_gcds(tensor.group().invariant_factors(), k);
                t.check(dual == BigInt::from(brute_hom), || {
                    format!("{label}: |Hom(G⊗H, Z/{k})| = {dual}, brute force {brute_hom}")
                });
            }
        }
    }
}

// ---------------------------------------------------------------- bicomplexes

const MODULI: [Modulus; 4] = [4, 8, 9, 12];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairKind {
    Hom,
    Tensor,
}

fn random_complex(rng: &mut ChaCha8Rng, m: Modulus, convention: Convention) -> Result<Complex> {
    // windowed exact complexes of free modules are contractible, so most
    // cases are periodic to keep the core invariant nonzero
    let shape = if rng.gen_ratio(7, 8) {
        RandomShape::Periodic
    } else {
        RandomShape::Window { lo: -2, hi: 2 }
    };
    let params = RandomComplexParams {
        shape,
        summands: rng.gen_range(1..=3),
        convention,
    };
    random_exact_complex(m, rng.gen(), params)
}

struct Instance {
    label: String,
    c: Complex,
    d: Complex,
    bicomplex: Bicomplex,
}

fn random_instance(rng: &mut ChaCha8Rng, case: usize, kind: PairKind, fault: Fault) -> Result<Instance> {
    let m = MODULI[rng.gen_range(0..MODULI.len())];
    let mut c = random_complex(rng, m, Convention::Homological)?;
    let d = match kind {
        PairKind::Hom => random_complex(rng, m, Convention::Cohomological)?,
        PairKind::Tensor => random_complex(rng, m, Convention::Homological)?,
    };
    if fault == Fault::CorruptDifferential {
        c = corrupt(&c)?;
    }
    let bicomplex = match kind {
        PairKind::Hom => hom_bicomplex(&c, &d)?,
        PairKind::Tensor => tensor_bicomplex(&c, &d)?,
    };
    Ok(Instance {
        label: format!("case {case} ({kind:?}, m={m})"),
        c,
        d,
        bicomplex,
    })
}

fn sample_bidegrees(rng: &mut ChaCha8Rng, n: usize) -> Vec<Bidegree> {
    (0..n).map(|_| (rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect()
}

fn chase_suite(rng: &mut ChaCha8Rng, cases: usize, fault: Fault, t: &mut Tally) {
    for case in 0..cases {
        let kind = if case % 2 == 0 { PairKind::Hom } else { PairKind::Tensor };
        let mut case_rng = ChaCha8Rng::seed_from_u64(rng.gen());
        t.case(format!("case {case}"), |t| {
            let inst = random_instance(&mut case_rng, case, kind, fault)?;
            let x = &inst.bicomplex;
            for (i, j) in sample_bidegrees(&mut case_rng, 5) {
                let at = format!("{} at ({i},{j})", inst.label);
                t.check(x.core_equality_check(i, j)?, || format!("{at}: d'(Z'') ≠ d''(Z')"));
                let (a, b) = (x.core_homology(i, j)?, x.core_homology_via_dsecond(i, j)?);
                t.check(a.group().group_type() == b.group().group_type(), || {
                    format!("{at}: the two quotients differ")
                });
                let gens = x.core_generators(i, j)?;
                t.nontrivial += gens.iter().filter(|g| !g.is_zero()).count();
                for dir in [Direction::Plus, Direction::Minus] {
                    for g in &gens {
                        let there = x.diagonal_shift(g, dir)?;
                        let back = x.diagonal_shift(&there, dir.reversed())?;
                        t.check(back == *g, || format!("{at}: {dir:?} shift does not round-trip"));
                        t.check(x.shift_is_well_defined(g, dir, 3, &mut case_rng)?, || {
                            format!("{at}: {dir:?} shift depends on the representative")
                        });
                    }
                    for a in &gens {
                        let b = &gens[case_rng.gen_range(0..gens.len())];
                        let sum = x.diagonal_shift(&a.add(b)?, dir)?;
                        let parts = x.diagonal_shift(a, dir)?.add(&x.diagonal_shift(b, dir)?)?;
                        t.check(sum == parts, || format!("{at}: {dir:?} shift is not additive"));
                    }
                }
            }
            Ok(())
        });
    }
}

fn witness_suite(rng: &mut ChaCha8Rng, cases: usize, fault: Fault, t: &mut Tally) {
    for case in 0..cases {
        let mut case_rng = ChaCha8Rng::seed_from_u64(rng.gen());
        t.case(format!("case {case}"), |t| {
            let inst = random_instance(&mut case_rng, case, PairKind::Hom, fault)?;
            for ij in sample_bidegrees(&mut case_rng, 5) {
                let at = format!("{} at {ij:?}", inst.label);
                let w = zprime_witness(&inst.c, &inst.d, ij)?;
                t.nontrivial += usize::from(!w.hom.is_trivial());
                t.check(w.is_isomorphism()?, || format!("{at}: ker d' witness is not inverse"));
                t.check(zsecond_witness(&inst.c, &inst.d, ij)?.is_isomorphism()?, || {
                    format!("{at}: ker d'' witness is not inverse")
                });
            }
            Ok(())
        });
    }
}

fn triple_suite(rng: &mut ChaCha8Rng, cases: usize, fault: Fault, t: &mut Tally) {
    for case in 0..cases {
        let mut case_rng = ChaCha8Rng::seed_from_u64(rng.gen());
        t.case(format!("case {case}"), |t| {
            let inst = random_instance(&mut case_rng, case, PairKind::Hom, fault)?;
            for (i, j) in sample_bidegrees(&mut case_rng, 5) {
                let at = format!("{} at ({i},{j})", inst.label);
                let core = inst.bicomplex.core_homology(i, j)?.group().group_type();
                let cycles_below = inst.c.cycles(i - 1)?.as_group().0;
                let via_source = hom_from_module(&cycles_below, &inst.d)?.homology_type(j)?;
                let cocycles = inst.d.cycles(j)?.as_group().0;
                let via_target = hom_into_module(&inst.c, &cocycles)?.homology_type(i)?;
                let same_degree = inst.c.cycles(i)?.as_group().0;
                let via_same = hom_from_module(&same_degree, &inst.d)?.homology_type(j)?;
                t.check(core == via_source && core == via_target, || {
                    format!("{at}: core {core}, Hom(Z_(i-1)C, D) {via_source}, Hom(C, Z^j D) {via_target}")
                });
                t.nontrivial += usize::from(!core.is_trivial());
                t.check(core == via_same, || format!("{at}: core {core}, Hom(Z_i C, D) {via_same}"));
            }
            Ok(())
        });
    }
}

// ---------------------------------------------------------------- balance

fn random_module(rng: &mut ChaCha8Rng, m: Modulus) -> Arc<FpGroup> {
    let divisors: Vec<u64> = (2..=m).filter(|d| m % d == 0).collect();
    let orders: Vec<u64> = (0..rng.gen_range(1..=2)).map(|_| divisors[rng.gen_range(0..divisors.len())]).collect();
    Arc::new(FpGroup::cyclic(m, &orders))
}

fn setup(m: Modulus, left: &Arc<FpGroup>, right: &Arc<FpGroup>, fault: Fault) -> Result<TateSetup> {
    let s = TateSetup::new(m, left, right)?;
    match fault {
        Fault::None => Ok(s),
        Fault::CorruptDifferential => TateSetup::from_resolutions(
            m,
            left.clone(),
            right.clone(),
            corrupt(s.left_resolution())?,
            s.right_projective().clone(),
            s.right_injective().clone(),
        ),
    }
}

fn balance_case(
    t: &mut Tally,
    s: &TateSetup,
    label: &str,
    degrees: std::ops::RangeInclusive<i64>,
    expect: Option<&GroupType>,
) -> Result<()> {
    for kind in [TateKind::Ext, TateKind::Tor] {
        let report = s.balance_report(kind, degrees.clone())?;
        for row in &report.rows {
            let at = format!("{label} {kind:?} n={}", row.degree);
            t.check(row.pass, || {
                format!(
                    "{at}: routes {} / {}, corners {} / {}, walk {}",
                    row.first_route, row.second_route, row.first_corner, row.second_corner, row.walk_ok
                )
            });
            t.nontrivial += usize::from(!row.first_route.is_trivial());
            if let Some(e) = expect {
                t.check(&row.first_route == e && &row.second_route == e, || format!("{at}: expected {e}"));
            }
        }
    }
    Ok(())
}

fn balance_suite(rng: &mut ChaCha8Rng, cases: usize, fault: Fault, t: &mut Tally) {
    let z2 = Arc::new(FpGroup::cyclic(4, &[2]));
    t.case("Z/4, Z/2, Z/2".into(), |t| {
        let s = setup(4, &z2, &z2, fault)?;
        balance_case(t, &s, "Z/4, Z/2, Z/2", -3..=3, Some(&GroupType::cyclic(2)))
    });
    for case in 0..cases {
        let mut case_rng = ChaCha8Rng::seed_from_u64(rng.gen());
        let m = MODULI[case_rng.gen_range(0..MODULI.len())];
        let (left, right) = (random_module(&mut case_rng, m), random_module(&mut case_rng, m));
        let label = format!("case {case} (m={m}, {}, {})", left.group_type(), right.group_type());
        t.case(label.clone(), |t| {
            let s = setup(m, &left, &right, fault)?;
            balance_case(t, &s, &label, -2..=2, None)?;
            // free modules are projective and injective over ℤ/m
            let free = Arc::new(FpGroup::free(m, 1));
            let zero = GroupType::trivial();
            balance_case(t, &setup(m, &free, &right, fault)?, &format!("{label} free left"), -1..=1, Some(&zero))?;
            balance_case(t, &setup(m, &left, &free, fault)?, &format!("{label} free right"), -1..=1, Some(&zero))
        });
    }
}
