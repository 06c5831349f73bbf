//! Closed-form counts for 3 x n Latin rectangles.
//!
//! Three independent routes to the same numbers:
//!
//! * [`riordan_l3`]: Riordan's count of reduced rectangles (first row fixed),
//! * [`aps_g`]: the Athreya–Pranesachar–Singhi chromatic polynomial of `K3 □ Kn`,
//! * [`thm3_g`]: an alternating sum over the graphs `G(n, k, l)`, each counted
//!   in closed form by [`g_npq_closed`] from generalized derangements.
//!
//! Every entry point requires `lambda >= n >= 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinatorics::{binom, factorial, falling, gen_binom, gen_derangement};
use crate::error::{Error, Result};
use crate::graph::SplitParams;

/// A problem instance: `n` columns over `lambda` symbols, `lambda >= n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectParams {
    pub n: u64,
    pub lambda: u64,
}

impl RectParams {
    pub fn new(n: u64, lambda: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if lambda < n {
            return Err(Error::invalid(format!(
                "need lambda >= n, got n={n}, lambda={lambda}"
            )));
        }
        Ok(RectParams { n, lambda })
    }
}

/// Summation indices of one `A * B^2` term of `g(n, k, l, lambda)`.
///
/// `t1` colors of the merged vertices come from the colors on the `k` split
/// columns, `t2` from the colors on the `l` merged columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermIndices {
    pub k: u64,
    pub l: u64,
    pub t1: u64,
    pub t2: u64,
}

impl TermIndices {
    pub fn new(k: u64, l: u64, t1: u64, t2: u64) -> Result<Self> {
        if t1 > k.min(l) || t2 > l - t1 {
            return Err(Error::invalid(format!(
                "need t1 <= min(k, l) and t2 <= l - t1, got k={k}, l={l}, t1={t1}, t2={t2}"
            )));
        }
        Ok(TermIndices { k, l, t1, t2 })
    }

    pub fn n(&self) -> u64 {
        self.k + self.l
    }

    /// `min(k, l)`, the upper bound on `t1`.
    pub fn b(&self) -> u64 {
        self.k.min(self.l)
    }

    /// All valid `(t1, t2)` pairs for a split, in ascending order.
    pub fn range(k: u64, l: u64) -> impl Iterator<Item = TermIndices> {
        (0..=k.min(l)).flat_map(move |t1| (0..=l - t1).map(move |t2| TermIndices { k, l, t1, t2 }))
    }
}

fn check_lambda(lambda: u64, n: u64) -> Result<()> {
    if lambda < n {
        return Err(Error::invalid(format!(
            "need lambda >= n, got n={n}, lambda={lambda}"
        )));
    }
    Ok(())
}

fn signed(term: BigInt, negative: bool) -> BigInt {
    if negative {
        -term
    } else {
        term
    }
}

/// Number of 3 x n Latin rectangles on `1..=n` whose first row is `1, ..., n`.
///
/// `n! * sum_{k+j<=n} 2^j/j! * k! * C(-3(k+1), n-k-j)`, with `n!/j!` folded
/// into a falling factorial so no intermediate leaves the integers.
pub fn riordan_l3(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut total = BigInt::zero();
    for j in 0..=n {
        let mut inner = BigInt::zero();
        for k in 0..=n - j {
            let upper = -3 * (k as i64 + 1);
            inner += factorial(k) * gen_binom(upper, n - k - j);
        }
        total += (BigInt::one() << j) * falling(n, n - j) * inner;
    }
    Ok(total)
}

/// Chromatic polynomial of `K3 □ Kn` at `lambda` in the Athreya–Pranesachar–Singhi form.
///
/// The sum over `alpha + beta + gamma = n` is accumulated as an integer with
/// `n!` pulled inside (`n!/(alpha! gamma!)` is integral); the division by
/// `((lambda-n)!)^3` comes last and must be exact.
pub fn aps_g(n: u64, lambda: u64) -> Result<BigInt> {
    let RectParams { n, lambda } = RectParams::new(n, lambda)?;
    let free = lambda - n;
    let n_fact = factorial(n);
    let mut sum = BigInt::zero();
    for alpha in 0..=n {
        let sq = factorial(free + alpha).pow(2);
        for beta in 0..=n - alpha {
            let gamma = n - alpha - beta;
            let term = &sq
                * (&n_fact / (factorial(alpha) * factorial(gamma)))
                * (BigInt::one() << gamma)
                * binom(3 * free + 3 * alpha + beta + 2, beta as i64);
            sum += signed(term, beta % 2 == 1);
        }
    }
    let numerator = factorial(lambda) * sum;
    let denominator = factorial(free).pow(3);
    let (quotient, remainder) = numerator.div_rem(&denominator);
    assert!(
        remainder.is_zero(),
        "APS prefactor division left a remainder at n={n}, lambda={lambda}"
    );
    Ok(quotient)
}

/// Ways to color the `l` merged vertices for one choice of `(t1, t2)`:
/// `C(k,t1) C(l,t2) C(lambda-n, l-t1-t2) D(l,l,t2)`.
pub fn term_a(lambda: u64, k: u64, l: u64, t1: u64, t2: u64) -> Result<BigInt> {
    let idx = TermIndices::new(k, l, t1, t2)?;
    let n = idx.n();
    check_lambda(lambda, n)?;
    Ok(binom(k, t1 as i64)
        * binom(l, t2 as i64)
        * binom(lambda - n, (l - t1 - t2) as i64)
        * gen_derangement(l, l, t2)?)
}

/// Ways to color one of the two split rows of `k` vertices once `t1` is fixed:
/// `sum_{t3=0}^{k-t1} C(k-t1,t3) C(lambda-n+t1, k-t3) D(k,k,t3)`.
pub fn term_b(lambda: u64, k: u64, l: u64, t1: u64) -> Result<BigInt> {
    if t1 > k.min(l) {
        return Err(Error::invalid(format!(
            "need t1 <= min(k, l), got k={k}, l={l}, t1={t1}"
        )));
    }
    let n = k + l;
    check_lambda(lambda, n)?;
    let mut total = BigInt::zero();
    for t3 in 0..=k - t1 {
        total += binom(k - t1, t3 as i64)
            * binom(lambda - n + t1, (k - t3) as i64)
            * gen_derangement(k, k, t3)?;
    }
    Ok(total)
}

/// Number of proper `lambda`-colorings of `G(n, k, l)` with `k + l = n`.
pub fn g_npq_closed(n: u64, k: u64, l: u64, lambda: u64) -> Result<BigInt> {
    if k + l != n {
        return Err(Error::invalid(format!(
            "need k + l = n, got n={n}, k={k}, l={l}"
        )));
    }
    check_lambda(lambda, n)?;
    let mut sum = BigInt::zero();
    for t1 in 0..=k.min(l) {
        let b = term_b(lambda, k, l, t1)?;
        let b_sq = &b * &b;
        for t2 in 0..=l - t1 {
            sum += term_a(lambda, k, l, t1, t2)? * &b_sq;
        }
    }
    Ok(falling(lambda, n) * sum)
}

/// `g(n, lambda) = sum_{l=0}^{n} (-1)^l C(n,l) g(n, n-l, l, lambda)`.
pub fn thm3_g(n: u64, lambda: u64) -> Result<BigInt> {
    let RectParams { n, lambda } = RectParams::new(n, lambda)?;
    let mut total = BigInt::zero();
    for l in 0..=n {
        let term = binom(n, l as i64) * g_npq_closed(n, n - l, l, lambda)?;
        total += signed(term, l % 2 == 1);
    }
    Ok(total)
}

/// `sum_{q=0}^{m} C(m,q) (-1)^q g(n, m-q, q, lambda)` with `g` supplied by the caller.
///
/// Independent of `m` in `1..=n` whenever `g_eval` counts colorings of
/// `G(n, p, q)` correctly; each value then equals the count for `G(n)`.
pub fn theorem2_sum<F>(n: u64, m: u64, lambda: u64, mut g_eval: F) -> Result<BigInt>
where
    F: FnMut(SplitParams, u64) -> Result<BigInt>,
{
    if m < 1 || m > n {
        return Err(Error::invalid(format!(
            "need 1 <= m <= n, got n={n}, m={m}"
        )));
    }
    let mut total = BigInt::zero();
    for q in 0..=m {
        let params = SplitParams::new(n as usize, (m - q) as usize, q as usize)?;
        let term = binom(m, q as i64) * g_eval(params, lambda)?;
        total += signed(term, q % 2 == 1);
    }
    Ok(total)
}
