/// Reduces a signed integer to its residue in `0..modulus`.
pub(crate) fn residue(value: i64, modulus: u32) -> u32 {
    value.rem_euclid(i64::from(modulus)) as u32
}

/// Representative of `value` mod `modulus` in the half-open range `(-m/2, m/2]`.
pub(crate) fn symmetric(value: u32, modulus: u32) -> i64 {
    let v = i64::from(value % modulus);
    let m = i64::from(modulus);
    if 2 * v > m {
        v - m
    } else {
        v
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        assert_eq!(residue(-1, 10), 9);
        assert_eq!(residue(23, 10), 3);
        assert_eq!(residue(-23, 10), 7);
        assert_eq!(symmetric(9, 10), -1);
        assert_eq!(symmetric(5, 10), 5);
        assert_eq!(symmetric(6, 10), -4);
        assert_eq!(symmetric(0, 7), 0);
        assert_eq!(symmetric(4, 7), -3);
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(6, gcd(2, 4)), 2);
        assert_eq!(gcd(13, 0), 13);
        assert_eq!(gcd(0, 0), 0);
    }
}
