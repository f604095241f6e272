//! Brute-force verification: count truncated arcs on the curve over a
//! small prime field and compare with the predicted class specialization.
//!
//! A *primitive jet* of order `k` is a pair of polynomials
//! `(x(t), y(t))` over `F_p`, truncated mod `t^k`, with zero constant
//! terms and nonvanishing linear part, such that `f(x(t), y(t)) = 0 mod
//! t^k`. Their number equals the Hilbert class `H_k` specialized at
//! `L = p` times `(p - 1) p^(k-2)` (the reparametrizations), which is what
//! [`crate::zeta::HilbTable::jet_prediction`] computes.
//!
//! The search enumerates coefficient pairs level by level with two exact
//! cutoffs. Writing `d` for the multiplicity of the reduced curve and
//! `c_j` for the `t^j`-coefficient of `f(x(t), y(t))`, a prefix of `i`
//! coefficient pairs determines `c_j` for all `j <= i + d - 1` (every
//! monomial of `f` is a product of at least `d` series, so a later
//! coefficient can only enter at order `i + d` or beyond). Hence:
//!
//! * as soon as a determined `c_j` is nonzero, the whole subtree is dead;
//! * as soon as `i + d - 1 >= k - 1`, every remaining coefficient pair is
//!   free and the subtree contributes exactly `p^(2(k-1-i))`.
//!
//! The declared search space `p^(2(k-1))` is checked against a caller
//! budget before any work happens. Workers partition the nonzero linear
//! parts `(a_1, b_1)`; the count is a sum, so the partition cannot change
//! the result.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::curve::CurvePoly;
use crate::error::{Error, Result};
use crate::zeta::HilbTable;

/// Default cap on the declared search space `p^(2(k-1))`.
pub const DEFAULT_JET_BUDGET: u128 = 1_000_000_000;

/// One comparison between a brute-force count and the predicted value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetCountReport {
    pub prime: u64,
    pub k: u64,
    /// Number of primitive jets found by enumeration.
    pub raw_count: u128,
    /// `H_k(p) * (p - 1) * p^(k-2)`.
    pub predicted: BigInt,
    pub matches: bool,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn checked_pow_u128(base: u64, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

/// The curve reduced mod `p`: monomials `(x-exp, y-exp, coefficient)` and
/// the multiplicity of the reduction at the origin.
struct ModCurve {
    monos: Vec<(u32, u32, u64)>,
    mult: u64,
    max_x: u32,
    max_y: u32,
}

fn reduce_curve(curve: &CurvePoly, p: u64) -> Result<ModCurve> {
    let pb = BigInt::from(p);
    let mut monos = Vec::new();
    for (i, j, c) in curve.poly().terms() {
        if c.denom().mod_floor(&pb).to_u64() == Some(0) {
            return Err(Error::BadReduction { prime: p });
        }
        let num = c.numer().mod_floor(&pb).to_u64().expect("residue fits");
        let den = c.denom().mod_floor(&pb).to_u64().expect("residue fits");
        let v = ((num as u128 * powmod(den, p - 2, p) as u128) % p as u128) as u64;
        if v != 0 {
            monos.push((i, j, v));
        }
    }
    if monos.is_empty() {
        // The whole curve vanishes mod p; counts would be meaningless.
        return Err(Error::BadReduction { prime: p });
    }
    let mult = monos.iter().map(|&(i, j, _)| (i + j) as u64).min().unwrap();
    let max_x = monos.iter().map(|&(i, _, _)| i).max().unwrap();
    let max_y = monos.iter().map(|&(_, j, _)| j).max().unwrap();
    Ok(ModCurve {
        monos,
        mult,
        max_x,
        max_y,
    })
}

/// `a * b mod p`, truncated to `len` coefficients.
fn mul_trunc(a: &[u64], b: &[u64], p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for (i, &ai) in a.iter().enumerate().take(len) {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(len - i) {
            if bj == 0 {
                continue;
            }
            let idx = i + j;
            out[idx] = ((out[idx] as u128 + ai as u128 * bj as u128) % p as u128) as u64;
        }
    }
    out
}

/// Truncated powers `base^0 .. base^max` of a series.
fn power_table(base: &[u64], max: u32, p: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut one = vec![0u64; len];
    if len > 0 {
        one[0] = 1;
    }
    out.push(one);
    for e in 1..=max as usize {
        let next = mul_trunc(&out[e - 1], &base[..len.min(base.len())], p, len);
        out.push(next);
    }
    out
}

/// `f(x(t), y(t)) mod (p, t^len)`.
fn compose(c: &ModCurve, x: &[u64], y: &[u64], p: u64, len: usize) -> Vec<u64> {
    let xp = power_table(x, c.max_x, p, len);
    let yp = power_table(y, c.max_y, p, len);
    let mut out = vec![0u64; len];
    for &(i, j, coef) in &c.monos {
        let prod = mul_trunc(&xp[i as usize], &yp[j as usize], p, len);
        for (o, v) in out.iter_mut().zip(prod) {
            *o = ((*o as u128 + coef as u128 * v as u128) % p as u128) as u64;
        }
    }
    out
}

struct SearchCtx<'a> {
    curve: &'a ModCurve,
    p: u64,
    /// Contact order: jets live mod `t^k`.
    k: usize,
}

/// Count the jets extending the coefficients `x[1..=level]`, `y[1..=level]`.
fn dfs(ctx: &SearchCtx<'_>, level: usize, x: &mut [u64], y: &mut [u64]) -> u128 {
    let last = ctx.k - 1;
    let determined = last.min(level + ctx.curve.mult as usize - 1);
    let f = compose(ctx.curve, x, y, ctx.p, determined + 1);
    if f[1..].iter().any(|&c| c != 0) {
        return 0;
    }
    if determined >= last {
        return checked_pow_u128(ctx.p, 2 * (last - level) as u32)
            .expect("tail within the checked budget");
    }
    let mut total = 0u128;
    for a in 0..ctx.p {
        x[level + 1] = a;
        for b in 0..ctx.p {
            y[level + 1] = b;
            total += dfs(ctx, level + 1, x, y);
        }
    }
    x[level + 1] = 0;
    y[level + 1] = 0;
    total
}

/// Count primitive jets of contact order `k >= 2` on the curve over `F_p`.
///
/// `budget` caps the declared search space `p^(2(k-1))`; `jobs` is the
/// number of worker threads.
pub fn count_primitive_jets(
    curve: &CurvePoly,
    prime: u64,
    k: u64,
    budget: u128,
    jobs: usize,
) -> Result<u128> {
    assert!(k >= 2, "jet counts start at contact order 2");
    if !is_prime(prime) {
        return Err(Error::CompositeCharacteristic { q: prime });
    }
    let space = checked_pow_u128(prime, 2 * (k as u32 - 1));
    match space {
        Some(s) if s <= budget => {}
        _ => {
            return Err(Error::BudgetExceeded {
                needed: space.unwrap_or(u128::MAX),
                budget,
            })
        }
    }
    let reduced = reduce_curve(curve, prime)?;
    let ctx = SearchCtx {
        curve: &reduced,
        p: prime,
        k: k as usize,
    };
    // Linear parts (a_1, b_1) != (0, 0) are encoded as 1 .. p^2 and
    // strided across workers.
    let pairs = prime * prime;
    let workers = jobs.max(1).min(pairs as usize - 1);
    let count_slice = |start: u64| -> u128 {
        let mut total = 0u128;
        let mut x = vec![0u64; ctx.k];
        let mut y = vec![0u64; ctx.k];
        let mut v = start;
        while v < pairs {
            x[1] = v / prime;
            y[1] = v % prime;
            total += dfs(&ctx, 1, &mut x, &mut y);
            v += workers as u64;
        }
        total
    };
    if workers == 1 {
        return Ok(count_slice(1));
    }
    let count_slice = &count_slice;
    let total = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| scope.spawn(move || count_slice(1 + w as u64)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker")).sum()
    });
    Ok(total)
}

/// Compare brute-force counts against the table predictions for every
/// requested prime and every order `2 <= k <= k_max`.
pub fn verify(
    curve: &CurvePoly,
    table: &HilbTable,
    primes: &[u64],
    k_max: u64,
    jobs: usize,
    budget: u128,
) -> Result<Vec<JetCountReport>> {
    let mut out = Vec::new();
    for &p in primes {
        for k in 2..=k_max {
            let raw_count = count_primitive_jets(curve, p, k, budget, jobs)?;
            let predicted = table.jet_prediction(k)?.eval_int(&BigInt::from(p))?;
            let matches = BigInt::from(raw_count) == predicted;
            out.push(JetCountReport {
                prime: p,
                k,
                raw_count,
                predicted,
                matches,
            });
        }
    }
    Ok(out)
}
