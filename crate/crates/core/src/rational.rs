use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A non-negative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RationalRepr", try_from = "RationalRepr")]
pub struct Rational {
    num: u64,
    den: u64,
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: u64,
    den: u64,
}

impl From<Rational> for RationalRepr {
    fn from(r: Rational) -> Self {
        RationalRepr { num: r.num, den: r.den }
    }
}

impl TryFrom<RationalRepr> for Rational {
    type Error = String;

    fn try_from(r: RationalRepr) -> Result<Self, String> {
        Rational::checked_new(r.num, r.den).ok_or_else(|| "zero denominator".to_string())
    }
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Rational {
        Self::checked_new(num, den).expect("zero denominator")
    }

    pub fn checked_new(num: u64, den: u64) -> Option<Rational> {
        if den == 0 {
            return None;
        }
        let g = num.gcd(&den).max(1);
        Some(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(n: u64) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }

    pub fn floor(&self) -> u64 {
        self.num / self.den
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Rational::new(self.num * other.num, self.den * other.den)
    }

    /// The mediant `(a+c)/(b+d)`, reduced.
    pub fn mediant(&self, other: &Rational) -> Rational {
        Rational::new(self.num + other.num, self.den + other.den)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl std::str::FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}"));
        match s.split_once('/') {
            Some((a, b)) => Rational::checked_new(parse(a)?, parse(b)?).ok_or_else(|| "zero denominator".into()),
            None => Ok(Rational::integer(parse(s)?)),
        }
    }
}

/// Reduced fractions strictly between two Farey neighbours `lo < hi`
/// (`hi.num·lo.den − lo.num·hi.den = 1`) whose numerator is at most `cap`,
/// in ascending order.
///
/// This is an in-order walk of the Stern–Brocot subtree between `lo` and
/// `hi`. Every node's descendants have larger numerators, so subtrees whose
/// root exceeds the cap are skipped whole.
#[derive(Debug, Clone)]
pub struct SternBrocotRange {
    cap: u64,
    // (node, right bound of its right subtree)
    stack: Vec<(Rational, Rational)>,
}

impl SternBrocotRange {
    pub fn new(lo: Rational, hi: Rational, cap: u64) -> Self {
        assert_eq!(
            hi.num as i128 * lo.den as i128 - lo.num as i128 * hi.den as i128,
            1,
            "bounds must be Farey neighbours"
        );
        assert!(lo.num > 0, "lower bound must be positive");
        let mut it = SternBrocotRange { cap, stack: Vec::new() };
        it.descend_left(lo, hi);
        it
    }

    /// Fractions in the open interval `(k-1, k)` with numerator ≤ `cap`.
    /// Needs `k ≥ 2`; below 1 the capped set is infinite.
    pub fn unit_interval(k: u64, cap: u64) -> Self {
        assert!(k >= 2);
        Self::new(Rational::integer(k - 1), Rational::integer(k), cap)
    }

    fn descend_left(&mut self, lo: Rational, mut hi: Rational) {
        loop {
            // neighbours' mediant is already reduced
            let m = Rational {
                num: lo.num + hi.num,
                den: lo.den + hi.den,
            };
            if m.num > self.cap {
                break;
            }
            self.stack.push((m, hi));
            hi = m;
        }
    }
}

impl Iterator for SternBrocotRange {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let (m, hi) = self.stack.pop()?;
        self.descend_left(m, hi);
        Some(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Oracle: every p/q in (k-1, k) with p <= cap, gcd 1, sorted.
    fn brute(k: u64, cap: u64) -> Vec<Rational> {
        let mut v = Vec::new();
        for p in 1..=cap {
            for q in 1..=p {
                if p.gcd(&q) == 1 && (k - 1) * q < p && p < k * q {
                    v.push(Rational::new(p, q));
                }
            }
        }
        v.sort();
        v
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rational::new(10, 4).to_string(), "5/2");
        assert_eq!(Rational::new(6, 2).to_string(), "3");
        assert_eq!("7/3".parse::<Rational>().unwrap(), Rational::new(7, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert_eq!(
            serde_json::to_string(&Rational::new(5, 2)).unwrap(),
            r#"{"num":5,"den":2}"#
        );
    }

    #[test]
    fn ordering_and_ceil() {
        assert!(Rational::new(7, 3) < Rational::new(5, 2));
        assert_eq!(Rational::new(7, 3).ceil(), 3);
        assert_eq!(Rational::new(6, 3).ceil(), 2);
    }

    #[test]
    fn small_range() {
        let v: Vec<String> = SternBrocotRange::unit_interval(3, 8).map(|r| r.to_string()).collect();
        assert_eq!(v, ["7/3", "5/2", "8/3"]);
    }

    proptest! {
        #[test]
        fn matches_enumeration(k in 2u64..6, cap in 1u64..40) {
            let got: Vec<Rational> = SternBrocotRange::unit_interval(k, cap).collect();
            prop_assert_eq!(got, brute(k, cap));
        }
    }
}
