//! Permutation signs.

/// Sign of a permutation of `0..p.len()` given in one-line notation.
pub fn permutation_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Sign of the permutation that sorts `xs` (entries assumed distinct).
pub fn inversion_sign<T: Ord>(xs: &[T]) -> i32 {
    let mut inv = 0usize;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
        assert_eq!(permutation_sign(&[1, 2, 3, 0]), -1);
        assert_eq!(permutation_sign(&[]), 1);
    }

    #[test]
    fn inversions_agree_with_cycles() {
        // sorting [2,0,1] is the inverse of the 3-cycle
        assert_eq!(inversion_sign(&[2, 0, 1]), 1);
        assert_eq!(inversion_sign(&[1, 0]), -1);
        assert_eq!(inversion_sign(&[3, 2, 1, 0]), 1);
    }
}
