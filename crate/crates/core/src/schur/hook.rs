use num_bigint::BigInt;

use super::SchurVector;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `s_(m,1^a) * s_(n,1^b)` from the six-sum closed form.
///
/// The sums count fillings of the second hook whose first-column cells sit
/// below the first hook, so they need `b >= 1`. When `b = 0` the factors are
/// swapped.
pub fn hook_product_closed_form(m: i64, a: i64, n: i64, b: i64) -> Result<SchurVector> {
    validate(m, a, n, b)?;
    if b == 0 {
        Ok(six_sums(n, b, m, a))
    } else {
        Ok(six_sums(m, a, n, b))
    }
}

/// The six sums taken literally, without swapping, dropping summands whose
/// shape is not a partition. Wrong when `b = 0` and `n >= 2`.
pub fn hook_product_six_sums(m: i64, a: i64, n: i64, b: i64) -> Result<SchurVector> {
    validate(m, a, n, b)?;
    Ok(six_sums(m, a, n, b))
}

fn validate(m: i64, a: i64, n: i64, b: i64) -> Result<()> {
    if m < 1 || n < 1 || a < 0 || b < 0 {
        return Err(Error::InvalidParams(format!("hook product needs m,n >= 1 and a,b >= 0, got ({m},{a},{n},{b})")));
    }
    if a + b == 0 {
        return Err(Error::UsePieri);
    }
    Ok(())
}

fn six_sums(m: i64, a: i64, n: i64, b: i64) -> SchurVector {
    let mut out = SchurVector::zero();
    let mut add = |first: i64, second: i64, twos: i64, ones: i64| {
        if let Ok(p) = Partition::from_blocks(&[(first, 1), (second, 1), (2, twos), (1, ones)]) {
            out.add_term(p, BigInt::from(1));
        }
    };

    for j in 0..=m.min(n - 1) {
        add(m + n - j, j + 1, 0, a + b - 1);
    }
    for r in 1..=a.min(b - 1) {
        for j in 1..=m.min(n - 1) {
            add(m + n - j, j + 1, r, a + b - 2 * r - 1);
        }
    }
    for r in 0..=(a - 1).min(b - 1) {
        for j in 1..=m.min(n) {
            add(m + n - j + 1, j + 1, r, a + b - 2 * r - 2);
        }
    }
    for j in 0..=(m - 1).min(n - 1) {
        add(m + n - j - 1, j + 1, 0, a + b);
    }
    for r in 1..=a.min(b) {
        for j in 1..=(m - 1).min(n - 1) {
            add(m + n - j - 1, j + 1, r, a + b - 2 * r);
        }
    }
    for r in 0..=(a - 1).min(b) {
        for j in 1..=(m - 1).min(n) {
            add(m + n - j, j + 1, r, a + b - 2 * r - 1);
        }
    }
    out
}
