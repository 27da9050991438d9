use num_integer::Integer;

/// Integer kernel of the map `(m, n) -> (m a_i + n b_i)_i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IntRelation {
    /// Primitive generator with `m > 0` or `(m, n) = (0, 1)`.
    Generator(i64, i64),
    NoRelation,
    /// Every pair is a relation (no rows, or only zero rows).
    AllRelations,
}

/// Normalizes `(m, n)` to the primitive representative with `m > 0`, or
/// `(0, 1)`.
pub fn normalize_pair(m: i64, n: i64) -> (i64, i64) {
    let g = m.gcd(&n);
    if g == 0 {
        return (0, 0);
    }
    let (m, n) = (m / g, n / g);
    if m < 0 || (m == 0 && n < 0) {
        (-m, -n)
    } else {
        (m, n)
    }
}

pub fn integer_residue_relation(rows: &[(i64, i64)]) -> IntRelation {
    let Some(&(a, b)) = rows.iter().find(|&&(a, b)| a != 0 || b != 0) else {
        return IntRelation::AllRelations;
    };
    // Rank 1 iff every row is proportional to (a, b).
    if rows.iter().any(|&(c, d)| a as i128 * d as i128 != b as i128 * c as i128) {
        return IntRelation::NoRelation;
    }
    let (m, n) = normalize_pair(b, -a);
    IntRelation::Generator(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(integer_residue_relation(&[(1, -1), (2, -2)]), IntRelation::Generator(1, 1));
        assert_eq!(integer_residue_relation(&[(1, 0)]), IntRelation::Generator(0, 1));
        assert_eq!(integer_residue_relation(&[(1, 2), (2, 1)]), IntRelation::NoRelation);
        assert_eq!(integer_residue_relation(&[]), IntRelation::AllRelations);
        assert_eq!(integer_residue_relation(&[(0, 0)]), IntRelation::AllRelations);
        assert_eq!(integer_residue_relation(&[(2, 4)]), IntRelation::Generator(2, -1));
    }
}
