//! Divisor lattices, gcd/lcm subset expansions and generalised totients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::engine::{sum_over_chains_unchecked, sum_over_maxima, PosetSum};
use crate::error::{check_cap, Error, Result};
use crate::poset::FinitePoset;
use crate::subset::Subset;

/// Largest `n` accepted by the factorisation routines.
pub const MAX_N: u64 = 1_000_000;
/// Bound on `d(n)` for lattice operations.
pub const LATTICE_DIVISOR_CAP: usize = 64;
/// Bound on `d(n)` for subset sums over divisors.
pub const SUBSET_DIVISOR_CAP: usize = 22;
/// Bound on `d(n)` for direct chain enumeration.
pub const CHAIN_DIVISOR_CAP: usize = 12;
/// Bound on the prime bound of [`zeta_reciprocal`].
pub const ZETA_PRIME_CAP: u64 = 10_000_000;

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if n > MAX_N {
        return Err(Error::cap(
            "n",
            usize::try_from(n).unwrap_or(usize::MAX),
            MAX_N as usize,
        ));
    }
    Ok(())
}

/// Prime factorisation by trial division, as `(p, e)` with `p` increasing.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    check_n(n)?;
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut out = vec![1];
    for (p, e) in factorize(n)? {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for &d in &out {
            let mut q = d;
            for _ in 0..=e {
                next.push(q);
                q *= p;
            }
        }
        out = next;
    }
    out.sort_unstable();
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

/// `(-1)^k` if `n` is a product of `k` distinct primes, else 0.
pub fn classical_mobius(n: u64) -> Result<i64> {
    let f = factorize(n)?;
    if f.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if f.len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Primes `p ≤ bound`, by sieve.
pub fn primes_up_to(bound: u64) -> Result<Vec<u64>> {
    check_cap(
        "prime bound",
        usize::try_from(bound).unwrap_or(usize::MAX),
        ZETA_PRIME_CAP as usize,
    )?;
    let b = bound as usize;
    if b < 2 {
        return Ok(Vec::new());
    }
    let mut composite = vec![false; b + 1];
    let mut out = Vec::new();
    for i in 2..=b {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= b {
                composite[j] = true;
                j += i;
            }
        }
    }
    Ok(out)
}

/// `n#`, the product of the primes `p ≤ n`.
pub fn primorial(n: u64) -> Result<BigInt> {
    Ok(primes_up_to(n)?.into_iter().fold(BigInt::one(), |acc, p| acc * p))
}

fn gcd_all(values: impl Iterator<Item = u64>) -> u64 {
    values.fold(0, |acc, v| acc.gcd(&v))
}

fn lcm_all(values: impl Iterator<Item = u64>) -> u64 {
    values.fold(1, |acc, v| acc.lcm(&v))
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The lattice `L_n` of positive divisors of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorLattice {
    n: u64,
    divisors: Vec<u64>,
    primes: Vec<u64>,
    squarefree: bool,
}

impl DivisorLattice {
    pub fn new(n: u64) -> Result<Self> {
        let f = factorize(n)?;
        let divisors = divisors(n)?;
        check_cap("number of divisors", divisors.len(), LATTICE_DIVISOR_CAP)?;
        Ok(DivisorLattice {
            n,
            divisors,
            primes: f.iter().map(|&(p, _)| p).collect(),
            squarefree: f.iter().all(|&(_, e)| e == 1),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// `P_n`.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `P_n^* = {n/p : p ∈ P_n}`.
    pub fn coprimes(&self) -> Vec<u64> {
        self.star(&self.primes)
    }

    /// `A^* = {n/a : a ∈ A}`.
    pub fn star(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&x| self.n / x).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    pub fn is_prime(&self) -> bool {
        self.primes.len() == 1 && self.divisors.len() == 2
    }

    /// Divisors other than those listed in `drop`.
    pub fn without(&self, drop: &[u64]) -> Vec<u64> {
        self.divisors
            .iter()
            .copied()
            .filter(|d| !drop.contains(d))
            .collect()
    }

    /// `L_n ∖ {1, n}`.
    pub fn interior(&self) -> Vec<u64> {
        self.without(&[1, self.n])
    }
}

fn pick(values: &[u64], a: Subset) -> impl Iterator<Item = u64> + '_ {
    a.iter().map(move |i| values[i])
}

fn divisibility_poset(values: &[u64], reversed: bool) -> Result<FinitePoset> {
    let labels = values.iter().map(|v| v.to_string()).collect();
    FinitePoset::from_leq(labels, |a, b| {
        if reversed {
            values[a].is_multiple_of(values[b])
        } else {
            values[b].is_multiple_of(values[a])
        }
    })
}

/// Which of the two dual expansions to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcdVariant {
    /// Signed count of the subsets with `gcd(A) = 1`.
    Eq12,
    /// Signed count of the subsets with `lcm(A) = n`.
    Eq19,
}

/// The expansion of `μ(n)` and each equal intermediate sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdExpansion {
    /// Sum over all subsets of the domain (`L_n ∖ {1, n}`, or the modified domain).
    pub value: i64,
    /// Same sum through the poset-maxima reduction onto `P_n^*` (resp. `P_n`).
    pub reduced: i64,
    /// `Σ_{A ⊆ P_n^*, gcd(A) = 1} (-1)^{|A|}`; `None` for `n = 1`, where
    /// `gcd(∅) = 0` leaves nothing equal to 1.
    pub over_coprimes: Option<i64>,
    /// `Σ_{A ⊆ P_n, gcd(A^*) = 1} (-1)^{|A|}`; `None` for `n = 1`.
    pub over_primes_star: Option<i64>,
    /// `Σ_{A ⊆ P_n, lcm(A) = n} (-1)^{|A|}`.
    pub over_primes_lcm: i64,
    pub mobius: i64,
    /// Cancellation along comparable pairs held, when checked.
    pub cancellation_holds: Option<bool>,
}

impl GcdExpansion {
    pub fn holds(&self) -> bool {
        let m = self.mobius;
        self.value == m
            && self.reduced == m
            && self.over_coprimes.is_none_or(|v| v == m)
            && self.over_primes_star.is_none_or(|v| v == m)
            && self.over_primes_lcm == m
            && self.cancellation_holds != Some(false)
    }
}

fn signed_count(values: &[u64], pred: impl Fn(Subset) -> bool) -> i64 {
    Subset::full(values.len())
        .subsets()
        .filter(|&a| pred(a))
        .map(|a| sign(a.len()))
        .sum()
}

/// The gcd or lcm subset expansion of `μ(n)`.
///
/// Prime `n` (and, for [`GcdVariant::Eq12`], `n = 1`) needs
/// `modified_domain`, which replaces `L_n ∖ {1, n}` by `L_n ∖ {n}` for the gcd
/// form and by `L_n ∖ {1}` for the lcm form.
pub fn gcd_expansion(n: u64, variant: GcdVariant, modified_domain: bool) -> Result<GcdExpansion> {
    let l = DivisorLattice::new(n)?;
    check_cap("number of divisors", l.divisors().len(), SUBSET_DIVISOR_CAP)?;
    if !modified_domain && l.is_prime() {
        return Err(Error::precondition(
            "n is not prime",
            format!("{n} is prime; use the modified domain"),
        ));
    }
    if variant == GcdVariant::Eq12 && n == 1 {
        return Err(Error::precondition("n > 1", "the gcd expansion needs n > 1"));
    }
    let domain = match (modified_domain, variant) {
        (false, _) => l.interior(),
        (true, GcdVariant::Eq12) => l.without(&[n]),
        (true, GcdVariant::Eq19) => l.without(&[1]),
    };
    let (f, reversed): (_, bool) = match variant {
        GcdVariant::Eq12 => (
            (|d: &[u64], a: Subset, _n: u64| gcd_all(pick(d, a)) == 1) as fn(&[u64], Subset, u64) -> bool,
            false,
        ),
        GcdVariant::Eq19 => (
            (|d: &[u64], a: Subset, n: u64| lcm_all(pick(d, a)) == n) as fn(&[u64], Subset, u64) -> bool,
            true,
        ),
    };
    let term = |a: Subset| if f(&domain, a, n) { sign(a.len()) } else { 0 };
    let value: i64 = Subset::full(domain.len()).subsets().map(term).sum();
    let poset = divisibility_poset(&domain, reversed)?;
    let PosetSum {
        value: reduced,
        cancellation,
        ..
    } = sum_over_maxima(&term, &poset)?;

    let primes = l.primes().to_vec();
    let coprimes = l.coprimes();
    let over_coprimes = (n > 1).then(|| signed_count(&coprimes, |a| gcd_all(pick(&coprimes, a)) == 1));
    let over_primes_star =
        (n > 1).then(|| signed_count(&primes, |a| gcd_all(pick(&primes, a).map(|p| n / p)) == 1));
    let over_primes_lcm = signed_count(&primes, |a| lcm_all(pick(&primes, a)) == n);
    Ok(GcdExpansion {
        value,
        reduced,
        over_coprimes,
        over_primes_star,
        over_primes_lcm,
        mobius: classical_mobius(n)?,
        cancellation_holds: cancellation.map(|c| c.holds()),
    })
}

/// A multiplicative function `h` with `h(1) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicative {
    /// `n ↦ n^k`; `k = 1` is the identity.
    Power(i32),
    /// `n ↦ (-1)^Ω(n)`.
    Liouville,
    /// Euler's totient.
    Totient,
    /// The classical Möbius function.
    Mobius,
}

impl Multiplicative {
    pub const IDENTITY: Multiplicative = Multiplicative::Power(1);

    pub fn is_completely_multiplicative(self) -> bool {
        matches!(self, Multiplicative::Power(_) | Multiplicative::Liouville)
    }

    pub fn eval(self, n: u64) -> Result<BigRational> {
        let f = factorize(n)?;
        Ok(match self {
            Multiplicative::Power(k) => {
                let base = BigRational::from_integer(BigInt::from(n));
                if k >= 0 {
                    num_traits::pow(base, k as usize)
                } else {
                    num_traits::pow(base.recip(), k.unsigned_abs() as usize)
                }
            }
            Multiplicative::Liouville => {
                let omega: u32 = f.iter().map(|&(_, e)| e).sum();
                BigRational::from_integer(BigInt::from(sign(omega as usize)))
            }
            Multiplicative::Totient => {
                let phi: u64 = f.iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product();
                BigRational::from_integer(BigInt::from(phi))
            }
            Multiplicative::Mobius => BigRational::from_integer(BigInt::from(classical_mobius(n)?)),
        })
    }
}

impl core::str::FromStr for Multiplicative {
    type Err = Error;

    /// `identity`, `power:k`, `liouville`, `totient` or `mobius`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(Multiplicative::IDENTITY),
            "liouville" => Ok(Multiplicative::Liouville),
            "totient" => Ok(Multiplicative::Totient),
            "mobius" => Ok(Multiplicative::Mobius),
            _ => s
                .strip_prefix("power:")
                .and_then(|k| k.parse().ok())
                .map(Multiplicative::Power)
                .ok_or_else(|| Error::InvalidInput(format!("unknown function `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TotientMethod {
    /// `h(n) ∏_{p | n} (1 - 1/h(p))`.
    Product,
    /// `Σ_{d | n} h(d) μ(n/d)`.
    DivisorSum,
    /// `h(n)` minus the gcd subset sum over the divisors.
    SubsetSum,
    /// `h(n)` minus the same sum over the chains of `L_n ∖ {n}`.
    ChainSum,
}

/// `φ_h(n)` by one method, with the product/Möbius-sum identity alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Totient {
    pub value: BigRational,
    /// `∏_{p | n} (1 - 1/h(p))` and `Σ_{d | n} μ(d)/h(d)`.
    pub product_identity: (BigRational, BigRational),
}

impl Totient {
    pub fn identity_holds(&self) -> bool {
        self.product_identity.0 == self.product_identity.1
    }
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The subset domain for the gcd and lcm sums: `L_n ∖ {1, n}`, or with
/// `modified_domain`, `L_n` without only the endpoint `drop`.
fn subset_domain(l: &DivisorLattice, modified_domain: bool, drop: u64) -> Result<Vec<u64>> {
    check_cap("number of divisors", l.divisors().len(), SUBSET_DIVISOR_CAP)?;
    if modified_domain {
        Ok(l.without(&[drop]))
    } else if l.is_prime() {
        Err(Error::precondition(
            "n is not prime",
            format!("{} is prime; use the modified domain", l.n()),
        ))
    } else {
        Ok(l.interior())
    }
}

/// `Σ_{∅ ≠ A ⊆ D} (-1)^{|A|-1} h(gcd A)` over the divisors `D`, optionally only
/// over `gcd(A) > 1`.
fn gcd_subset_sum(domain: &[u64], h: Multiplicative, only_nontrivial_gcd: bool) -> Result<BigRational> {
    let table = fold_table(domain, 0, |a, b| a.gcd(&b));
    let mut by_value: BTreeMap<u64, i64> = BTreeMap::new();
    for (bits, &g) in table.iter().enumerate().skip(1) {
        if only_nontrivial_gcd && g == 1 {
            continue;
        }
        *by_value.entry(g).or_default() -= sign(bits.count_ones() as usize);
    }
    weighted(by_value, h)
}

fn weighted(by_value: BTreeMap<u64, i64>, h: Multiplicative) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for (v, c) in by_value {
        if c != 0 {
            total += rational(c) * h.eval(v)?;
        }
    }
    Ok(total)
}

/// `table[A] = op(... op(init, a_1) ..., a_k)` for every subset `A` of `values`.
fn fold_table(values: &[u64], init: u64, op: impl Fn(u64, u64) -> u64) -> Vec<u64> {
    let mut table = vec![init; 1 << values.len()];
    for bits in 1..table.len() {
        let low = bits.trailing_zeros() as usize;
        table[bits] = op(table[bits & (bits - 1)], values[low]);
    }
    table
}

/// `φ_h(n) = h(n) ∏_{p | n} (1 - 1/h(p))`.
pub fn totient_h(n: u64, h: Multiplicative, method: TotientMethod, modified_domain: bool) -> Result<Totient> {
    let l = DivisorLattice::new(n)?;
    if !(l.is_squarefree() || h.is_completely_multiplicative()) {
        return Err(Error::precondition(
            "n squarefree or h completely multiplicative",
            format!("{n} is not squarefree and {h:?} is not completely multiplicative"),
        ));
    }
    let mut inverse_h_p = Vec::new();
    for &p in l.primes() {
        let hp = h.eval(p)?;
        if hp.is_zero() {
            return Err(Error::precondition(
                "h(p) ≠ 0 for every prime p",
                format!("h({p}) = 0"),
            ));
        }
        inverse_h_p.push(hp.recip());
    }
    let product = inverse_h_p
        .iter()
        .fold(BigRational::one(), |acc, r| acc * (BigRational::one() - r));
    let mut mu_sum = BigRational::zero();
    for &d in l.divisors() {
        let mu = classical_mobius(d)?;
        if mu != 0 {
            mu_sum += rational(mu) / h.eval(d)?;
        }
    }
    let hn = h.eval(n)?;
    let value = match method {
        TotientMethod::Product => &hn * &product,
        TotientMethod::DivisorSum => {
            let mut s = BigRational::zero();
            for &d in l.divisors() {
                let mu = classical_mobius(n / d)?;
                if mu != 0 {
                    s += h.eval(d)? * rational(mu);
                }
            }
            s
        }
        TotientMethod::SubsetSum => {
            let domain = subset_domain(&l, modified_domain, n)?;
            &hn - gcd_subset_sum(&domain, h, false)?
        }
        TotientMethod::ChainSum => {
            let domain = l.without(&[n]);
            check_cap("number of divisors", domain.len(), SUBSET_DIVISOR_CAP)?;
            // Reversed divisibility makes gcd the join.
            let poset = divisibility_poset(&domain, true)?;
            let f = |a: Subset| -> BigRational {
                if a.is_empty() {
                    return BigRational::zero();
                }
                let g = gcd_all(pick(&domain, a));
                rational(-sign(a.len())) * h.eval(g).expect("divisor within range")
            };
            &hn - sum_over_chains_unchecked(&f, &poset)?
        }
    };
    Ok(Totient {
        value,
        product_identity: (product, mu_sum),
    })
}

/// For non-squarefree `n` and completely multiplicative `h`: the gcd subset sum
/// and the same sum restricted to `gcd(A) > 1`.
pub fn totient_restricted_gcd(
    n: u64,
    h: Multiplicative,
    modified_domain: bool,
) -> Result<(BigRational, BigRational)> {
    let l = DivisorLattice::new(n)?;
    if l.is_squarefree() || !h.is_completely_multiplicative() {
        return Err(Error::precondition(
            "n not squarefree and h completely multiplicative",
            format!("n = {n}, h = {h:?}"),
        ));
    }
    let domain = subset_domain(&l, modified_domain, n)?;
    Ok((
        gcd_subset_sum(&domain, h, false)?,
        gcd_subset_sum(&domain, h, true)?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseMethod {
    /// `∏_{p | n} (1 - h(p))`.
    Product,
    /// `Σ_{d | n} h(d) μ(d)`.
    DivisorSum,
    /// `Σ_A (-1)^{|A|} h(lcm A)` over subsets of the divisors.
    SubsetSum,
    /// The same sum over the chains of `L_n ∖ {1}`.
    ChainSum,
}

fn lcm_subset_sum(domain: &[u64], h: Multiplicative, below_n: Option<u64>) -> Result<BigRational> {
    let table = fold_table(domain, 1, |a, b| a.lcm(&b));
    let mut by_value: BTreeMap<u64, i64> = BTreeMap::new();
    for (bits, &m) in table.iter().enumerate() {
        if below_n == Some(m) {
            continue;
        }
        *by_value.entry(m).or_default() += sign(bits.count_ones() as usize);
    }
    weighted(by_value, h)
}

/// The Dirichlet inverse of `φ_h`, `∏_{p | n} (1 - h(p))`.
pub fn dirichlet_inverse_totient(
    n: u64,
    h: Multiplicative,
    method: InverseMethod,
    modified_domain: bool,
) -> Result<BigRational> {
    let l = DivisorLattice::new(n)?;
    match method {
        InverseMethod::Product => {
            let mut acc = BigRational::one();
            for &p in l.primes() {
                acc *= BigRational::one() - h.eval(p)?;
            }
            Ok(acc)
        }
        InverseMethod::DivisorSum => {
            let mut s = BigRational::zero();
            for &d in l.divisors() {
                let mu = classical_mobius(d)?;
                if mu != 0 {
                    s += h.eval(d)? * rational(mu);
                }
            }
            Ok(s)
        }
        InverseMethod::SubsetSum => {
            let domain = subset_domain(&l, modified_domain, 1)?;
            lcm_subset_sum(&domain, h, None)
        }
        InverseMethod::ChainSum => {
            let domain = l.without(&[1]);
            check_cap("number of divisors", domain.len(), SUBSET_DIVISOR_CAP)?;
            if domain.is_empty() {
                return Ok(BigRational::one());
            }
            let poset = divisibility_poset(&domain, false)?;
            let f = |a: Subset| -> BigRational {
                rational(sign(a.len())) * h.eval(lcm_all(pick(&domain, a))).expect("divisor within range")
            };
            sum_over_chains_unchecked(&f, &poset)
        }
    }
}

/// For non-squarefree `n`: the lcm subset sum and the same sum restricted to
/// `lcm(A) < n`.
pub fn inverse_restricted_lcm(
    n: u64,
    h: Multiplicative,
    modified_domain: bool,
) -> Result<(BigRational, BigRational)> {
    let l = DivisorLattice::new(n)?;
    if l.is_squarefree() {
        return Err(Error::precondition(
            "n not squarefree",
            format!("{n} is squarefree"),
        ));
    }
    let domain = subset_domain(&l, modified_domain, 1)?;
    Ok((
        lcm_subset_sum(&domain, h, None)?,
        lcm_subset_sum(&domain, h, Some(n))?,
    ))
}

/// Chain coefficients: for each divisor `d`, the signed count of the chains of
/// `L_n ∖ {n}` with minimum `d` (paired with `-μ(n/d)`) and of the chains of
/// `L_n ∖ {1}` with maximum `d` (paired with `μ(d)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCoefficients {
    /// `(d, Σ (-1)^{|A|-1}, -μ(n/d))` for `d ∈ L_n ∖ {n}`.
    pub gcd_side: Vec<(u64, i64, i64)>,
    /// `(d, Σ (-1)^{|A|}, μ(d))` for `d ∈ L_n ∖ {1}`.
    pub lcm_side: Vec<(u64, i64, i64)>,
}

impl ChainCoefficients {
    pub fn holds(&self) -> bool {
        self.gcd_side
            .iter()
            .chain(&self.lcm_side)
            .all(|&(_, a, b)| a == b)
    }
}

/// Enumerates chains of a divisor list directly, grouping by their minimum or
/// maximum element.
pub fn chain_coefficients(n: u64) -> Result<ChainCoefficients> {
    let l = DivisorLattice::new(n)?;
    check_cap("number of divisors", l.divisors().len(), CHAIN_DIVISOR_CAP)?;
    let is_chain = |d: &[u64], a: Subset| {
        let v: Vec<u64> = pick(d, a).collect();
        v.windows(2).all(|w| w[1] % w[0] == 0)
    };
    let lower = l.without(&[n]);
    let mut gcd_side = Vec::new();
    for (i, &d) in lower.iter().enumerate() {
        let s: i64 = Subset::full(lower.len())
            .subsets()
            .filter(|&a| a.min() == Some(i) && is_chain(&lower, a))
            .map(|a| -sign(a.len()))
            .sum();
        gcd_side.push((d, s, -classical_mobius(n / d)?));
    }
    let upper = l.without(&[1]);
    let mut lcm_side = Vec::new();
    for (i, &d) in upper.iter().enumerate() {
        let s: i64 = Subset::full(upper.len())
            .subsets()
            .filter(|&a| a.max() == Some(i) && is_chain(&upper, a))
            .map(|a| sign(a.len()))
            .sum();
        lcm_side.push((d, s, classical_mobius(d)?));
    }
    Ok(ChainCoefficients { gcd_side, lcm_side })
}

/// `∏_{p ≤ bound} (1 - p^{-s})`, with `6/π²` alongside when `s = 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaReciprocal {
    pub value: f64,
    pub reference: Option<f64>,
}

impl ZetaReciprocal {
    pub fn error(&self) -> Option<f64> {
        self.reference.map(|r| libm::fabs(self.value - r))
    }
}

pub fn zeta_reciprocal(s: f64, prime_bound: u64) -> Result<ZetaReciprocal> {
    if s.is_nan() || s <= 1.0 {
        return Err(Error::InvalidInput(format!("s = {s} must exceed 1")));
    }
    if prime_bound < 2 {
        return Err(Error::InvalidInput("the prime bound must be at least 2".into()));
    }
    let value = primes_up_to(prime_bound)?
        .into_iter()
        .fold(1.0, |acc, p| acc * (1.0 - libm::pow(p as f64, -s)));
    let reference = (s == 2.0).then(|| 6.0 / (core::f64::consts::PI * core::f64::consts::PI));
    Ok(ZetaReciprocal { value, reference })
}

/// `φ_h(N)/h(N)` for `N = bound#` and `h(n) = n^s`, both as
/// `1 + N^{-s} Σ_{A ⊆ L_N ∖ {1, N}} (-1)^{|A|} gcd(A)^s` and as the product
/// `∏_{p ≤ bound} (1 - p^{-s})`.
pub fn zeta_primorial_exact(prime_bound: u64, s: u32) -> Result<(BigRational, BigRational)> {
    let primes = primes_up_to(prime_bound)?;
    check_cap("number of primes", primes.len(), 4)?;
    let n: u64 = primes.iter().product();
    let h = Multiplicative::Power(s as i32);
    let product = primes.iter().fold(BigRational::one(), |acc, &p| {
        acc * (BigRational::one() - h.eval(p).expect("small prime").recip())
    });
    if primes.len() < 2 {
        // `N` is 1 or prime; the domain `L_N ∖ {1, N}` is empty.
        return Ok((product.clone(), product));
    }
    let l = DivisorLattice::new(n)?;
    let sum = gcd_subset_sum(&l.interior(), h, false)?;
    let subset = BigRational::one() - sum / h.eval(n)?;
    Ok((subset, product))
}

/// Which of the two complexes to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// Nonempty subsets of `L_n ∖ {1, n}` with `gcd(A) > 1`.
    S,
    /// Nonempty subsets of `L_n ∖ {1, n}` with `lcm(A) < n`.
    T,
}

/// An abstract simplicial complex on labelled vertices; faces are nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractComplex {
    vertices: Vec<u64>,
    faces: Vec<Subset>,
}

impl AbstractComplex {
    /// Checks downward closure.
    pub fn new(vertices: Vec<u64>, mut faces: Vec<Subset>) -> Result<Self> {
        check_cap("complex vertices", vertices.len(), SUBSET_DIVISOR_CAP)?;
        let all = Subset::full(vertices.len());
        faces.sort_unstable();
        faces.dedup();
        let mut present = vec![false; 1 << vertices.len()];
        for &f in &faces {
            if f.is_empty() || !f.is_subset_of(all) {
                return Err(Error::InvalidInput(
                    "faces must be nonempty subsets of the vertices".into(),
                ));
            }
            present[f.bits() as usize] = true;
        }
        // Closure under removing one vertex implies closure under subsets.
        for &f in &faces {
            if f.len() > 1 && f.iter().any(|v| !present[f.without(v).bits() as usize]) {
                return Err(Error::InvalidInput(format!(
                    "not downward closed: a face of {:?} is missing",
                    pick(&vertices, f).collect::<Vec<_>>()
                )));
            }
        }
        Ok(AbstractComplex { vertices, faces })
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Subset] {
        &self.faces
    }

    /// Faces as vertex labels.
    pub fn face_labels(&self) -> Vec<Vec<u64>> {
        self.faces
            .iter()
            .map(|&f| pick(&self.vertices, f).collect())
            .collect()
    }

    /// Largest face size minus one; `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.faces.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    /// `Σ_{A ∈ 𝒜} (-1)^{|A|-1}`.
    pub fn euler_characteristic(&self) -> i64 {
        self.truncated(usize::MAX)
    }

    fn truncated(&self, r: usize) -> i64 {
        self.faces
            .iter()
            .filter(|f| f.len() <= r)
            .map(|f| -sign(f.len()))
            .sum()
    }

    /// `(-1)^r Σ_{|A| ≤ r} (-1)^{|A|-1} ≤ (-1)^r` for every `r` in
    /// `1..=dim + 1`, as `(r, truncated sum, holds)`.
    pub fn bonferroni(&self) -> Vec<(usize, i64, bool)> {
        let top = (self.dimension() + 1).max(1) as usize;
        (1..=top)
            .map(|r| {
                let t = self.truncated(r);
                (r, t, sign(r) * t <= sign(r))
            })
            .collect()
    }

    pub fn bonferroni_holds(&self) -> bool {
        self.bonferroni().iter().all(|&(_, _, ok)| ok)
    }
}

pub fn build_complex(n: u64, kind: ComplexKind) -> Result<AbstractComplex> {
    let l = DivisorLattice::new(n)?;
    check_cap("number of divisors", l.divisors().len(), SUBSET_DIVISOR_CAP)?;
    let vertices = l.interior();
    let table = match kind {
        ComplexKind::S => fold_table(&vertices, 0, |a, b| a.gcd(&b)),
        ComplexKind::T => fold_table(&vertices, 1, |a, b| a.lcm(&b)),
    };
    let faces = (1..table.len())
        .filter(|&bits| match kind {
            ComplexKind::S => table[bits] > 1,
            ComplexKind::T => table[bits] < n,
        })
        .map(|bits| Subset(bits as u64))
        .collect();
    AbstractComplex::new(vertices, faces)
}

/// Whether `A ↦ A^*` maps the faces of `𝒮_n` onto those of `𝒯_n`.
pub fn star_isomorphism(n: u64) -> Result<bool> {
    let s = build_complex(n, ComplexKind::S)?;
    let t = build_complex(n, ComplexKind::T)?;
    let mut mapped: Vec<Vec<u64>> = s
        .face_labels()
        .into_iter()
        .map(|f| {
            let mut g: Vec<u64> = f.into_iter().map(|a| n / a).collect();
            g.sort_unstable();
            g
        })
        .collect();
    mapped.sort();
    let mut target = t.face_labels();
    target.sort();
    Ok(mapped == target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn mobius_values() {
        assert_eq!(classical_mobius(30).unwrap(), -1);
        assert_eq!(classical_mobius(12).unwrap(), 0);
        assert_eq!(classical_mobius(1).unwrap(), 1);
        assert!(classical_mobius(0).is_err());
    }

    #[test]
    fn divisor_basics() {
        assert_eq!(divisors(12).unwrap(), [1, 2, 3, 4, 6, 12]);
        let l = DivisorLattice::new(30).unwrap();
        assert_eq!(l.interior(), [2, 3, 5, 6, 10, 15]);
        assert_eq!(l.coprimes(), [15, 10, 6]);
        assert!(l.is_squarefree());
        assert!(DivisorLattice::new(7).unwrap().is_prime());
        assert!(!DivisorLattice::new(1).unwrap().is_prime());
    }

    #[test]
    fn gcd_expansions() {
        let e = gcd_expansion(30, GcdVariant::Eq12, false).unwrap();
        assert_eq!(e.value, -1);
        assert!(e.holds());
        let e = gcd_expansion(12, GcdVariant::Eq19, false).unwrap();
        assert_eq!(e.value, 0);
        assert!(e.holds());
        let e = gcd_expansion(4, GcdVariant::Eq12, true).unwrap();
        assert_eq!(e.value, 0);
        assert!(e.holds());
        assert!(matches!(
            gcd_expansion(7, GcdVariant::Eq12, false),
            Err(Error::Precondition { .. })
        ));
        assert_eq!(gcd_expansion(7, GcdVariant::Eq19, true).unwrap().value, -1);
        assert_eq!(gcd_expansion(1, GcdVariant::Eq19, false).unwrap().value, 1);
    }

    #[test]
    fn totients() {
        let id = Multiplicative::IDENTITY;
        for m in [
            TotientMethod::Product,
            TotientMethod::DivisorSum,
            TotientMethod::SubsetSum,
            TotientMethod::ChainSum,
        ] {
            assert_eq!(totient_h(12, id, m, false).unwrap().value, r(4, 1));
            assert_eq!(totient_h(30, id, m, false).unwrap().value, r(8, 1));
            assert_eq!(totient_h(1, id, m, false).unwrap().value, r(1, 1));
        }
        assert!(totient_h(12, id, TotientMethod::Product, false)
            .unwrap()
            .identity_holds());
        assert!(matches!(
            totient_h(12, Multiplicative::Totient, TotientMethod::Product, false),
            Err(Error::Precondition { .. })
        ));
        assert!(totient_h(7, id, TotientMethod::SubsetSum, false).is_err());
        assert_eq!(
            totient_h(7, id, TotientMethod::SubsetSum, true).unwrap().value,
            r(6, 1)
        );
        let inv = Multiplicative::Power(-1);
        assert_eq!(
            totient_h(6, inv, TotientMethod::Product, false).unwrap().value,
            r(1, 3)
        );
    }

    #[test]
    fn restrictions() {
        let (a, b) = totient_restricted_gcd(12, Multiplicative::IDENTITY, false).unwrap();
        assert_eq!(a, b);
        let (a, b) = inverse_restricted_lcm(12, Multiplicative::IDENTITY, false).unwrap();
        assert_eq!(a, b);
        assert!(inverse_restricted_lcm(30, Multiplicative::IDENTITY, false).is_err());
    }

    #[test]
    fn dirichlet_inverse() {
        let id = Multiplicative::IDENTITY;
        for m in [
            InverseMethod::Product,
            InverseMethod::DivisorSum,
            InverseMethod::SubsetSum,
            InverseMethod::ChainSum,
        ] {
            assert_eq!(dirichlet_inverse_totient(6, id, m, false).unwrap(), r(2, 1));
            assert_eq!(dirichlet_inverse_totient(1, id, m, false).unwrap(), r(1, 1));
            assert_eq!(dirichlet_inverse_totient(4, id, m, false).unwrap(), r(-1, 1));
        }
    }

    #[test]
    fn chains() {
        let c = chain_coefficients(12).unwrap();
        assert!(c.holds());
        assert_eq!(c.gcd_side.len(), 5);
        assert!(chain_coefficients(30).unwrap().holds());
    }

    #[test]
    fn zeta_and_primorial() {
        let z = zeta_reciprocal(2.0, 13).unwrap();
        assert!((z.value - 0.618).abs() < 0.001);
        assert_eq!(zeta_reciprocal(2.0, 2).unwrap().value, 0.75);
        assert!(zeta_reciprocal(1.0, 10).is_err());
        assert_eq!(primorial(10).unwrap(), BigInt::from(210));
        assert_eq!(primorial(1).unwrap(), BigInt::from(1));
        assert_eq!(primorial(2).unwrap(), BigInt::from(2));
        let (a, b) = zeta_primorial_exact(7, 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn complexes() {
        let s = build_complex(12, ComplexKind::S).unwrap();
        let t = build_complex(12, ComplexKind::T).unwrap();
        assert_eq!(s.euler_characteristic(), 1);
        assert_eq!(t.euler_characteristic(), 1);
        assert!(s.bonferroni_holds() && t.bonferroni_holds());
        assert_eq!(s.bonferroni()[0], (1, 4, true));
        assert!(star_isomorphism(12).unwrap());
        let s4 = build_complex(4, ComplexKind::S).unwrap();
        assert_eq!(s4.face_labels(), [vec![2]]);
        assert_eq!(s4.euler_characteristic(), 1);
        assert!(AbstractComplex::new(vec![1, 2], vec![Subset::from_indices([0, 1])]).is_err());
    }
}
