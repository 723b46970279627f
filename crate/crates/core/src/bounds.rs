//! Closed-form upper bounds, evaluated exactly with overflow checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn pow(base: u64, exp: u64, what: &'static str) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::BoundOverflow(what))?;
    base.checked_pow(exp).ok_or(Error::BoundOverflow(what))
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// `R(n) <= 2^(2n-3)` for `n >= 2`.
pub fn ramsey_bound(n: u64) -> Result<u64> {
    require(n >= 2, "ramsey bound needs n >= 2")?;
    pow(2, 2 * n - 3, "2^(2n-3)")
}

/// `R_m(n) <= 1 + (m^(mn-2m+1) - 1)/(m-1)` for `m, n >= 2`.
pub fn multicolor_ramsey_bound(n: u64, m: u64) -> Result<u64> {
    require(n >= 2 && m >= 2, "multicolor ramsey bound needs n, m >= 2")?;
    let exp = m
        .checked_mul(n)
        .and_then(|mn| (mn + 1).checked_sub(2 * m))
        .ok_or(Error::BoundOverflow("m^(mn-2m+1)"))?;
    Ok(1 + (pow(m, exp, "m^(mn-2m+1)")? - 1) / (m - 1))
}

/// `R'(n) <= 2^(n-2)` for `n >= 2`.
pub fn pair_bound(n: u64) -> Result<u64> {
    require(n >= 2, "pair bound needs n >= 2")?;
    pow(2, n - 2, "2^(n-2)")
}

/// `R'_m(m+k) <= 1 + sum_{j<k} m^j = 1 + (m^k - 1)/(m-1)`; the sum is empty
/// at `k = 0`.
pub fn family_bound_k(m: u64, k: u64) -> Result<u64> {
    require(m >= 2, "family bound needs m >= 2")?;
    Ok(1 + (pow(m, k, "m^k")? - 1) / (m - 1))
}

/// [`family_bound_k`] addressed by target `n = m + k`. Targets below `m` are
/// met by a single vertex, so they get the `k = 0` value.
pub fn family_bound(n: u64, m: u64) -> Result<u64> {
    family_bound_k(m, n.saturating_sub(m))
}

/// The four closed forms at one `(n, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundFormulas {
    /// `2^(2n-3)`
    pub ramsey: u64,
    /// `1 + (m^(mn-2m+1) - 1)/(m-1)`
    pub multicolor_ramsey: u64,
    /// `2^(n-2)`
    pub pair: u64,
    /// `1 + (m^k - 1)/(m-1)` with `k = n - m`
    pub family: u64,
}

pub fn bound_formulas(n: u64, m: u64) -> Result<BoundFormulas> {
    Ok(BoundFormulas {
        ramsey: ramsey_bound(n)?,
        multicolor_ramsey: multicolor_ramsey_bound(n, m)?,
        pair: pair_bound(n)?,
        family: family_bound(n, m)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(ramsey_bound(3).unwrap(), 8);
        assert_eq!(pair_bound(4).unwrap(), 4);
        assert_eq!(pair_bound(2).unwrap(), 1);
        assert_eq!(family_bound_k(3, 0).unwrap(), 1);
        assert_eq!(family_bound_k(3, 2).unwrap(), 5);
        assert_eq!(family_bound(5, 3).unwrap(), 5);
        assert_eq!(family_bound(2, 3).unwrap(), 1);
        // R_3(3) <= 1 + (3^4 - 1)/2
        assert_eq!(multicolor_ramsey_bound(3, 3).unwrap(), 41);
    }

    #[test]
    fn two_color_forms_coincide() {
        for n in 2..=10 {
            assert_eq!(multicolor_ramsey_bound(n, 2).unwrap(), ramsey_bound(n).unwrap());
            // m = 2: family bound at target 2n-1 is the same number
            assert_eq!(family_bound(2 * n - 1, 2).unwrap(), ramsey_bound(n).unwrap());
        }
    }

    #[test]
    fn closed_form_matches_geometric_sum() {
        for m in 2..=8u64 {
            for k in 0..=12 {
                let sum: u64 = 1 + (0..k).map(|j| m.pow(j as u32)).sum::<u64>();
                assert_eq!(family_bound_k(m, k).unwrap(), sum);
            }
        }
    }

    #[test]
    fn domain_and_overflow() {
        assert!(matches!(ramsey_bound(1), Err(Error::InvalidParameter(_))));
        assert!(matches!(multicolor_ramsey_bound(3, 1), Err(Error::InvalidParameter(_))));
        assert!(matches!(ramsey_bound(40), Err(Error::BoundOverflow(_))));
        assert_eq!(ramsey_bound(33).unwrap(), 1 << 63);
        assert!(matches!(multicolor_ramsey_bound(20, 8), Err(Error::BoundOverflow(_))));
        assert!(bound_formulas(3, 2).is_ok());
    }
}
