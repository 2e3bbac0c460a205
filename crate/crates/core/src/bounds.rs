//! Exact closed-form size bounds for vertex-k-maximal r-uniform hypergraphs.
//!
//! Everything here is exact: binomials in arbitrary precision, and the
//! quantities involving `n/k` as arbitrary-precision rationals. No floating
//! point is used anywhere in this module.
//!
//! The convention `C(n, k) = 0` whenever `k > n` or an argument is negative
//! is centralized in [`binom`]; every formula in the crate goes through it
//! (or through its word-sized internal twin, which implements the same
//! convention and is cross-checked against it in tests).

use num::{BigInt, BigRational, BigUint, One, Zero};
use serde::Serialize;

use crate::error::{HgError, Result};

fn binom_generic<T>(n: u64, k: u64) -> T
where
    T: From<u64> + std::ops::Mul<Output = T> + std::ops::Div<Output = T>,
{
    let k = k.min(n - k);
    let mut res = T::from(1u64);
    for i in 0..k {
        // exact at every step: the running value is C(n, i+1)
        res = res * T::from(n - i) / T::from(i + 1);
    }
    res
}

/// Binomial coefficient with the zero convention for out-of-range arguments.
pub fn binom(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binom_generic(n as u64, k as u64)
    }
}

/// Word-sized binomial for the in-memory kernels (vertex counts stay <= 64,
/// where `C(64, 32)` still fits in a u128 with room to spare).
pub(crate) fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        0
    } else {
        binom_generic(n as u64, k as u64)
    }
}

/// `binom_u128` narrowed to usize; callers guarantee desk-scale arguments.
pub(crate) fn binom_usize(n: usize, k: usize) -> usize {
    usize::try_from(binom_u128(n, k)).expect("binomial exceeds usize")
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(HgError::ParameterRange(msg.to_string()))
    }
}

/// Minimum possible size of a vertex-k-maximal r-uniform hypergraph on `n`
/// vertices: `C(n,r) - C(n-k,r)`.
pub fn lower_bound(n: usize, k: usize, r: usize) -> Result<BigUint> {
    require(k >= 2 && r >= 2, "lower_bound needs k, r >= 2")?;
    require(n >= k + 1, "lower_bound needs n >= k+1")?;
    Ok(binom(n as i64, r as i64) - binom(n as i64 - k as i64, r as i64))
}

/// Conjectured maximum size, `C(n,r) - C(n-k,r) + (n/k - 2) * C(k,r)`,
/// as an exact rational (`n/k` is not rounded).
pub fn conjectured_upper(n: usize, k: usize, r: usize) -> Result<BigRational> {
    require(k >= 2 && r >= 2, "conjectured_upper needs k, r >= 2")?;
    let base = BigInt::from(binom(n as i64, r as i64)) - BigInt::from(binom(n as i64 - k as i64, r as i64));
    let ratio = BigRational::new(BigInt::from(n), BigInt::from(k)) - BigRational::from(BigInt::from(2));
    Ok(BigRational::from(base) + ratio * BigRational::from(BigInt::from(binom(k as i64, r as i64))))
}

/// Size of the lower-extremal construction; equals [`lower_bound`].
pub fn hl_size(n: usize, k: usize, r: usize) -> Result<BigUint> {
    lower_bound(n, k, r)
}

/// Decompose `n = p*k + q` with `1 <= q <= k`.
pub(crate) fn block_decomposition(n: usize, k: usize) -> (usize, usize) {
    let q = if n % k == 0 { k } else { n % k };
    ((n - q) / k, q)
}

/// Size of the upper-extremal construction:
/// `C(n,r) - C(n-k,r) + (p-2) * C(k,r) + C(q,r)` where `n = p*k + q`,
/// `1 <= q <= k`.
pub fn hu_size(n: usize, k: usize, r: usize) -> Result<BigUint> {
    require(k >= 2 && r >= 2, "hu_size needs k, r >= 2")?;
    require(n >= 2 * k, "hu_size needs n >= 2k")?;
    let (p, q) = block_decomposition(n, k);
    let base = BigInt::from(binom(n as i64, r as i64)) - BigInt::from(binom(n as i64 - k as i64, r as i64))
        + (BigInt::from(p) - BigInt::from(2)) * BigInt::from(binom(k as i64, r as i64))
        + BigInt::from(binom(q as i64, r as i64));
    Ok(base.to_biguint().expect("construction size is nonnegative"))
}

/// Graph-case (`r = 2`) size bound for the upper construction:
/// `(3/2) * (k - 1/3) * (n - k)` as an exact rational.
pub fn gnk_bound(n: usize, k: usize) -> Result<BigRational> {
    require(k >= 2, "gnk_bound needs k >= 2")?;
    require(n >= 2 * k, "gnk_bound needs n >= 2k")?;
    let three_halves = BigRational::new(BigInt::from(3), BigInt::from(2));
    let k_term = BigRational::from(BigInt::from(k)) - BigRational::new(BigInt::one(), BigInt::from(3));
    Ok(three_halves * k_term * BigRational::from(BigInt::from(n as i64 - k as i64)))
}

/// One grid cell of exact bound values.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsRecord {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// `C(n,r) - C(n-k,r)`, rendered as a decimal integer.
    pub lower: String,
    /// Size of the lower construction (always equals `lower`).
    pub hl: String,
    /// Size of the upper construction; absent when `n < 2k`.
    pub hu: Option<String>,
    /// Conjectured maximum, rendered exactly (`p/q` when fractional).
    pub conj_upper: String,
    /// Whether `k` divides `n` (the equality case of the upper bound).
    pub divides: bool,
    /// Graph-case bound, only for `r = 2` and `n >= 2k`.
    pub gnk: Option<String>,
}

/// Assemble the record for one `(n, k, r)` cell.
pub fn bounds_record(n: usize, k: usize, r: usize) -> Result<BoundsRecord> {
    let lower = lower_bound(n, k, r)?;
    let hu = if n >= 2 * k {
        Some(hu_size(n, k, r)?.to_string())
    } else {
        None
    };
    let gnk = if r == 2 && n >= 2 * k {
        Some(gnk_bound(n, k)?.to_string())
    } else {
        None
    };
    Ok(BoundsRecord {
        n,
        k,
        r,
        lower: lower.to_string(),
        hl: hl_size(n, k, r)?.to_string(),
        hu,
        conj_upper: conjectured_upper(n, k, r)?.to_string(),
        divides: n % k == 0,
        gnk,
    })
}

/// CSV rendering of a bounds grid; one row per record.
pub fn bounds_csv(records: &[BoundsRecord]) -> String {
    let mut out = String::from("n,k,r,lower,hl,hu,conj_upper,divides\n");
    for rec in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            rec.n,
            rec.k,
            rec.r,
            rec.lower,
            rec.hl,
            rec.hu.as_deref().unwrap_or(""),
            rec.conj_upper,
            rec.divides
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn big(v: u64) -> BigUint {
        BigUint::from_u64(v).unwrap()
    }

    #[test]
    fn binom_basics() {
        assert_eq!(binom(5, 3), big(10));
        assert_eq!(binom(3, 5), BigUint::zero());
        assert_eq!(binom(7, 0), BigUint::one());
        assert_eq!(binom(-2, 1), BigUint::zero());
        assert_eq!(binom(4, -1), BigUint::zero());
    }

    #[test]
    fn binom_matches_factorial_oracle() {
        // factorial-based oracle, exact in BigUint
        let fact = |m: u64| (1..=m).map(BigUint::from).product::<BigUint>().max(BigUint::one());
        for n in 0..=20i64 {
            for k in 0..=n {
                let expect = fact(n as u64) / (fact(k as u64) * fact((n - k) as u64));
                assert_eq!(binom(n, k), expect, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binom_u128_agrees_with_bigint() {
        for n in 0..=64usize {
            for k in 0..=64usize {
                assert_eq!(
                    BigUint::from(binom_u128(n, k)),
                    binom(n as i64, k as i64),
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(lower_bound(7, 2, 3).unwrap(), big(25)); // 35 - 10
        // second term vanishes at n = k+1
        for k in 2..=5usize {
            for r in 2..=4usize {
                assert_eq!(
                    lower_bound(k + 1, k, r).unwrap(),
                    binom((k + 1) as i64, r as i64)
                );
            }
        }
        assert!(lower_bound(5, 1, 3).is_err());
        assert!(lower_bound(4, 4, 2).is_err());
    }

    #[test]
    fn graph_case_identity() {
        // C(n,2) - C(n-k,2) = (n-k)k + k(k-1)/2
        for n in 3..=30usize {
            for k in 2..n {
                let lhs = lower_bound(n, k, 2).unwrap();
                let rhs = big(((n - k) * k + k * (k - 1) / 2) as u64);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn conjectured_upper_values() {
        let v = conjectured_upper(8, 2, 3).unwrap();
        assert_eq!(v, BigRational::from(BigInt::from(36)));
        let v = conjectured_upper(9, 2, 2).unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(35), BigInt::from(2)));
        assert_eq!(v.to_string(), "35/2");
        // k < r: the extra term vanishes
        for n in 5..=12usize {
            for (k, r) in [(2usize, 3usize), (2, 4), (3, 4)] {
                if n < k + 1 {
                    continue;
                }
                assert_eq!(
                    conjectured_upper(n, k, r).unwrap(),
                    BigRational::from(BigInt::from(lower_bound(n, k, r).unwrap())),
                );
            }
        }
    }

    #[test]
    fn hu_size_values_and_equality_cases() {
        assert_eq!(hu_size(8, 2, 3).unwrap(), big(36));
        assert_eq!(hu_size(9, 2, 2).unwrap(), big(17));
        for n in 4..=30usize {
            for k in 2..=n / 2 {
                for r in 2..=4usize {
                    let hu = BigRational::from(BigInt::from(hu_size(n, k, r).unwrap()));
                    let conj = conjectured_upper(n, k, r).unwrap();
                    assert!(hu <= conj, "n={n} k={k} r={r}");
                    if n % k == 0 {
                        assert_eq!(hu, conj, "n={n} k={k} r={r}");
                    } else if k >= r {
                        // strict only where the correction term C(k,r) is
                        // nonzero; for k < r both sides are the lower bound
                        assert!(hu < conj, "n={n} k={k} r={r}");
                    } else {
                        assert_eq!(hu, conj, "n={n} k={k} r={r}");
                    }
                    let lower = BigRational::from(BigInt::from(lower_bound(n, k, r).unwrap()));
                    assert!(lower <= hu, "n={n} k={k} r={r}");
                }
            }
        }
    }

    #[test]
    fn graph_upper_bound_dominates() {
        // hu_size(n,k,2) <= (3/2)(k - 1/3)(n - k), equality iff k | n
        for n in 4..=30usize {
            for k in 2..=n / 2 {
                let hu = BigRational::from(BigInt::from(hu_size(n, k, 2).unwrap()));
                let bound = gnk_bound(n, k).unwrap();
                assert!(hu <= bound, "n={n} k={k}");
                assert_eq!(hu == bound, n % k == 0, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn csv_layout() {
        let recs = vec![bounds_record(9, 2, 2).unwrap()];
        let csv = bounds_csv(&recs);
        assert_eq!(
            csv,
            "n,k,r,lower,hl,hu,conj_upper,divides\n9,2,2,15,15,17,35/2,false\n"
        );
    }
}
