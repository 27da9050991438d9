use crate::error::{Error, Result};
use crate::numberfield::AlgNum;
use crate::ratfunc::RatFunc;
use crate::summability::{is_summable_with, solve_multiplicative};

use super::descriptor::{Constraint, GroupDescriptor, ParityCase, Shape};
use super::diagonal::log_residues;

type K = AlgNum;

/// `(G, H)` for `sigma^2(y) + r y = 0` with imprimitive difference group.
pub fn classify_imprimitive_pair(r: &RatFunc<K>, max_degree: usize) -> Result<(GroupDescriptor, GroupDescriptor)> {
    if r.is_zero() {
        return Err(Error::Precondition("r must be nonzero".into()));
    }
    let q = log_residues(r, 1, max_degree)?;
    let shape = Shape::ImprimitiveDihedral;
    if q.is_empty() {
        let c = r.num().lc();
        if let Some(m) = c.root_of_unity_order() {
            let case = ParityCase::of(m);
            let cs = vec![Constraint::DetTorsionDihedral { m, case }];
            let comps = 2 * if m % 2 == 1 { m } else { m / 2 };
            let g = GroupDescriptor {
                cases: vec!["dihedral-determinant-torsion"],
                ..GroupDescriptor::new(shape, cs.clone(), Some(comps))
            };
            return Ok((g, GroupDescriptor::new(shape, cs, Some(comps))));
        }
        let g = GroupDescriptor {
            cases: vec!["dihedral-determinant-delta-constant"],
            ..GroupDescriptor::new(shape, vec![Constraint::DeltaConstDet], Some(2))
        };
        return Ok((g, GroupDescriptor::new(shape, vec![], Some(2))));
    }
    let g = GroupDescriptor { cases: vec!["dihedral-full"], ..GroupDescriptor::new(shape, vec![], Some(2)) };
    Ok((g, GroupDescriptor::new(shape, vec![], Some(2))))
}

pub fn classify_imprimitive(r: &RatFunc<K>) -> Result<GroupDescriptor> {
    Ok(classify_imprimitive_pair(r, crate::factor::DEFAULT_MAX_DEGREE)?.0)
}

/// `(G, H)` when the difference group contains `SL_2`.
pub fn classify_large_pair(b: &RatFunc<K>, max_degree: usize) -> Result<(GroupDescriptor, GroupDescriptor)> {
    if b.is_zero() {
        return Err(Error::Precondition("b must be nonzero".into()));
    }
    let shape = Shape::Sl2Extension;
    if let Some((c, _)) = solve_multiplicative(b, 1, max_degree)? {
        if let Some(m) = c.root_of_unity_order() {
            let cs = vec![Constraint::DetTorsion(m)];
            let g = GroupDescriptor {
                cases: vec!["large-determinant-torsion"],
                ..GroupDescriptor::new(shape, cs.clone(), Some(m))
            };
            return Ok((g, GroupDescriptor::new(shape, cs, Some(m))));
        }
    }
    if is_summable_with(&b.log_derivative()?, max_degree)? {
        let g = GroupDescriptor {
            cases: vec!["large-determinant-delta-constant"],
            ..GroupDescriptor::new(shape, vec![Constraint::DeltaConstDet], Some(1))
        };
        return Ok((g, GroupDescriptor::new(shape, vec![], Some(1))));
    }
    let g = GroupDescriptor { cases: vec!["large-full"], ..GroupDescriptor::new(shape, vec![], Some(1)) };
    Ok((g, GroupDescriptor::new(shape, vec![], Some(1))))
}

pub fn classify_large(b: &RatFunc<K>) -> Result<GroupDescriptor> {
    Ok(classify_large_pair(b, crate::factor::DEFAULT_MAX_DEGREE)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn kx(n: &[i64], d: &[i64]) -> RatFunc<K> {
        RatFunc::new(Poly::from_ints(n).embed(), Poly::from_ints(d).embed())
    }

    #[test]
    fn imprimitive_examples() {
        let g = classify_imprimitive(&kx(&[1, 1], &[0, 2])).unwrap();
        assert_eq!(g.constraints, vec![Constraint::DeltaConstDet]);
        let g = classify_imprimitive(&kx(&[-1, -1], &[0, 1])).unwrap();
        assert_eq!(g.constraints, vec![Constraint::DetTorsionDihedral { m: 2, case: ParityCase::C }]);
        let g = classify_imprimitive(&RatFunc::x()).unwrap();
        assert_eq!(g.constraints, vec![Constraint::FullGroup]);
    }

    #[test]
    fn large_examples() {
        assert_eq!(classify_large(&RatFunc::one()).unwrap().constraints, vec![Constraint::DetTorsion(1)]);
        assert_eq!(classify_large(&RatFunc::from_int(2)).unwrap().constraints, vec![Constraint::DeltaConstDet]);
        assert_eq!(classify_large(&RatFunc::x()).unwrap().constraints, vec![Constraint::FullGroup]);
    }
}
