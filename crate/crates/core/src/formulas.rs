//! Exact evaluation of the closed-form counts, bounds and thresholds for
//! Kneser-type graphs, plus the greedy colouring of generalized Kneser graphs.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chromatic::Coloring;
use crate::error::{Error, Result};
use crate::families::{generalized_kneser, subsets};

/// Exact binomial coefficient. Zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial in `u128`, saturating; for size guards only.
pub(crate) fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn domain(msg: String) -> Error {
    Error::Precondition(msg)
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn signed(x: BigUint) -> BigInt {
    BigInt::from(x)
}

/// χ(KG(m, n)) = m − 2n + 2.
pub fn kneser_chi(m: i64, n: i64) -> Result<i64> {
    if n < 1 || m < 2 * n - 1 {
        return Err(domain(format!("kneser_chi needs m >= 2n-1, n >= 1; got ({m},{n})")));
    }
    Ok(m - 2 * n + 2)
}

/// Largest independent set of KG(m, n): C(m−1, n−1).
pub fn ekr_bound(m: i64, n: i64) -> Result<BigUint> {
    if n < 1 || m < n {
        return Err(domain(format!("ekr_bound needs m >= n >= 1; got ({m},{n})")));
    }
    Ok(binomial(m - 1, n - 1))
}

/// Largest free independent set of KG(m, n) for m > 2n:
/// C(m−1, n−1) − C(m−n−1, n−1).
pub fn hilton_milner_free_bound(m: i64, n: i64) -> Result<BigUint> {
    if n < 1 || m <= 2 * n {
        return Err(domain(format!("hilton_milner_free_bound needs m > 2n; got ({m},{n})")));
    }
    Ok(binomial(m - 1, n - 1) - binomial(m - n - 1, n - 1))
}

/// Independent sets of KG(m, n, s) have at most C(m−s−1, n−s−1) members
/// when m ≥ (s+2)(n−s).
pub fn frankl_bound(m: i64, n: i64, s: i64) -> Result<BigUint> {
    if !(n > s && s >= 0) {
        return Err(domain(format!("frankl_bound needs n > s >= 0; got ({m},{n},{s})")));
    }
    if m < (s + 2) * (n - s) {
        return Err(domain(format!(
            "frankl_bound needs m >= (s+2)(n-s) = {}; got m = {m}",
            (s + 2) * (n - s)
        )));
    }
    Ok(binomial(m - s - 1, n - s - 1))
}

/// Free independent sets of KG(m, n, s) have at most
/// C(2n, s+2)·C(m−s−2, n−s−2) members.
pub fn genkneser_free_bound(m: i64, n: i64, s: i64) -> Result<BigUint> {
    if !(m >= n && n > s && s >= 0) {
        return Err(domain(format!(
            "genkneser_free_bound needs m >= n > s >= 0; got ({m},{n},{s})"
        )));
    }
    Ok(binomial(2 * n, s + 2) * binomial(m - s - 2, n - s - 2))
}

/// χ(M^t(KG(m, n, s))) ≤ C(m, s+1) + t.
pub fn genkneser_chi_upper(m: i64, s: i64, t: i64) -> Result<BigUint> {
    if m < 0 || s < 0 || t < 0 || s + 1 > m {
        return Err(domain(format!(
            "genkneser_chi_upper needs m > s >= 0, t >= 0; got ({m},{s},{t})"
        )));
    }
    Ok(binomial(m, s + 1) + BigUint::from(t as u64))
}

/// |V(SG(m, n))| = C(m−n−1, n−1)·m/n; the division must be exact.
pub fn schrijver_count(m: i64, n: i64) -> Result<BigUint> {
    if n < 1 || m < 2 * n {
        return Err(domain(format!("schrijver_count needs m >= 2n >= 2; got ({m},{n})")));
    }
    let num = binomial(m - n - 1, n - 1) * BigUint::from(m as u64);
    let den = BigUint::from(n as u64);
    if !(&num % &den).is_zero() {
        return Err(domain(format!("C(m-n-1,n-1)*m/n is not integral for ({m},{n})")));
    }
    Ok(num / den)
}

/// Which value of `k` to use in the Mycielski threshold inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KVariant {
    /// k = min{2^{t+1} − 2, 2^t + 3}, as in the theorem statement.
    Statement,
    /// k = min{2^{t+1} − 2, 2^t + 2}, as set in the proof.
    Proof,
}

impl KVariant {
    pub fn k(self, t: u32) -> BigInt {
        let a: BigInt = (BigInt::one() << (t + 1)) - 2;
        let b: BigInt = (BigInt::one() << t)
            + match self {
                KVariant::Statement => 3,
                KVariant::Proof => 2,
            };
        a.min(b)
    }
}

/// 2n²(n−1) + min{2^{t+1}−2, 2^t+3}·n − min{0, 2n−t−3}.
pub fn mycielski_threshold(n: i64, t: u32) -> Result<BigInt> {
    if n < 1 {
        return Err(domain(format!("mycielski_threshold needs n >= 1; got {n}")));
    }
    let k = KVariant::Statement.k(t);
    let base = big(2 * n * n * (n - 1));
    let corr = big((2 * n - t as i64 - 3).min(0));
    Ok(base + k * n - corr)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinalInequality {
    pub k: String,
    /// C(m−1,n−1) − C(m−n−1,n−1).
    pub free_bound: String,
    /// n·C(m−2,n−2).
    pub double_count: String,
    /// C(m,n) − k·C(m−1,n−1), the numerator of the right-hand side.
    pub rhs_numerator: String,
    /// 2(m−2n+2+t), the denominator of the right-hand side.
    pub rhs_denominator: String,
    /// n·C(m−2,n−2) ≤ rhs.
    pub holds: bool,
    /// C(m−1,n−1) − C(m−n−1,n−1) ≤ n·C(m−2,n−2).
    pub double_counting_holds: bool,
    /// C(m−1,n−1) − C(m−n−1,n−1) ≤ rhs, the inequality the argument needs.
    pub direct_holds: bool,
}

/// Evaluates the threshold inequality
/// `n·C(m−2,n−2) ≤ (C(m,n) − k·C(m−1,n−1)) / (2(m−2n+2+t))`
/// exactly, by cross-multiplication, together with the double-counting
/// bound that links it to the free-set bound.
pub fn final_inequality_check(m: i64, n: i64, t: u32, variant: KVariant) -> Result<FinalInequality> {
    if n < 2 || m < 2 * n {
        return Err(domain(format!(
            "final_inequality_check needs m >= 2n, n >= 2; got ({m},{n})"
        )));
    }
    let k = variant.k(t);
    let free = signed(binomial(m - 1, n - 1)) - signed(binomial(m - n - 1, n - 1));
    let dc = big(n) * signed(binomial(m - 2, n - 2));
    let num = signed(binomial(m, n)) - &k * signed(binomial(m - 1, n - 1));
    let den = big(2 * (m - 2 * n + 2 + t as i64));
    // den > 0 because m >= 2n.
    let holds = &dc * &den <= num;
    let direct_holds = &free * &den <= num;
    Ok(FinalInequality {
        k: k.to_string(),
        free_bound: free.to_string(),
        double_count: dc.to_string(),
        rhs_numerator: num.to_string(),
        rhs_denominator: den.to_string(),
        holds,
        double_counting_holds: free <= dc,
        direct_holds,
    })
}

/// Double counting: C(m−1,n−1) − C(m−n−1,n−1) ≤ n·C(m−2,n−2).
pub fn double_counting_holds(m: i64, n: i64) -> bool {
    signed(binomial(m - 1, n - 1)) - signed(binomial(m - n - 1, n - 1)) <= big(n) * signed(binomial(m - 2, n - 2))
}

/// Colours each vertex A of KG(m, n, s) by the lexicographically least
/// (s+1)-subset of A, i.e. its s+1 smallest elements. Colour ids are
/// assigned in order of first appearance.
pub fn genkneser_greedy_coloring(m: usize, n: usize, s: usize) -> Result<Coloring> {
    let g = generalized_kneser(m, n, s)?;
    let masks = subsets(m, n)?;
    let mut palette: Vec<u64> = Vec::new();
    let assignment = masks
        .iter()
        .map(|&a| {
            let mut b = 0u64;
            let mut rest = a;
            for _ in 0..=s {
                let low = rest & rest.wrapping_neg();
                b |= low;
                rest &= !low;
            }
            match palette.iter().position(|&p| p == b) {
                Some(i) => i,
                None => {
                    palette.push(b);
                    palette.len() - 1
                }
            }
        })
        .collect();
    let coloring = Coloring::new(assignment, palette.len());
    coloring.validate(&g)?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), u(10));
        assert_eq!(binomial(2, 1), u(2));
        assert_eq!(binomial(10, 0), u(1));
        assert_eq!(binomial(3, 5), u(0));
        assert_eq!(binomial(3, -1), u(0));
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
        assert_eq!(binomial_u128(5, 2), 10);
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![u(1)];
        for n in 1..60i64 {
            let mut next = vec![u(1)];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(u(1));
            for (k, v) in next.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), v);
            }
            row = next;
        }
    }

    #[test]
    fn kneser_values() {
        assert_eq!(kneser_chi(5, 2).unwrap(), 3);
        assert_eq!(kneser_chi(8, 4).unwrap(), 2);
        assert_eq!(kneser_chi(7, 3).unwrap(), 3);
        assert!(kneser_chi(4, 3).is_err());
        assert_eq!(ekr_bound(5, 2).unwrap(), u(4));
        assert_eq!(hilton_milner_free_bound(5, 2).unwrap(), u(2));
        assert_eq!(hilton_milner_free_bound(7, 2).unwrap(), u(2));
        assert!(hilton_milner_free_bound(4, 2).is_err());
    }

    #[test]
    fn frankl_values() {
        assert_eq!(frankl_bound(6, 3, 1).unwrap(), u(4));
        assert_eq!(frankl_bound(8, 3, 1).unwrap(), u(6));
        // (m, n, n-1): domain is m >= n+1
        assert!(frankl_bound(4, 4, 3).is_err());
        assert_eq!(frankl_bound(5, 4, 3).unwrap(), u(1));
        assert!(frankl_bound(5, 3, 1).is_err());
    }

    #[test]
    fn genkneser_values() {
        assert_eq!(genkneser_free_bound(6, 3, 1).unwrap(), u(20));
        assert_eq!(genkneser_chi_upper(6, 1, 0).unwrap(), u(15));
        assert_eq!(genkneser_chi_upper(5, 0, 2).unwrap(), u(7));
    }

    #[test]
    fn schrijver_counts() {
        assert_eq!(schrijver_count(5, 2).unwrap(), u(5));
        assert_eq!(schrijver_count(6, 2).unwrap(), u(9));
        assert_eq!(schrijver_count(7, 3).unwrap(), u(7));
        assert!(schrijver_count(5, 3).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(mycielski_threshold(2, 0).unwrap(), big(8));
        assert_eq!(mycielski_threshold(3, 1).unwrap(), big(42));
        for t in 0..6u32 {
            let k = KVariant::Statement.k(t);
            assert_eq!(mycielski_threshold(1, t).unwrap(), k + t as i64 + 1);
        }
        for n in 1..6 {
            assert!(mycielski_threshold(n, 0).unwrap() >= big(2 * n * n * (n - 1)));
        }
    }

    #[test]
    fn k_variants() {
        assert_eq!(KVariant::Statement.k(0), big(0));
        assert_eq!(KVariant::Statement.k(2), big(6));
        assert_eq!(KVariant::Statement.k(3), big(11));
        assert_eq!(KVariant::Proof.k(3), big(10));
    }

    #[test]
    fn final_inequality_at_m8() {
        for v in [KVariant::Statement, KVariant::Proof] {
            let r = final_inequality_check(8, 2, 0, v).unwrap();
            assert!(r.holds && r.double_counting_holds && r.direct_holds);
        }
        assert!(final_inequality_check(3, 2, 0, KVariant::Proof).is_err());
    }

    #[test]
    fn greedy_colorings() {
        let c = genkneser_greedy_coloring(5, 2, 0).unwrap();
        assert!(c.k <= 5);
        let c = genkneser_greedy_coloring(6, 3, 1).unwrap();
        assert!(c.k <= 15);
    }
}
