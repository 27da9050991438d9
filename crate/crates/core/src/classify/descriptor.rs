use std::fmt;

use crate::numberfield::AlgNum;
use crate::ratfunc::RatFunc;
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Shape {
    Diagonalizable,
    TriangularReducible,
    ImprimitiveDihedral,
    Sl2Extension,
    ScalarOrTrivial,
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::Diagonalizable => "Diagonalizable",
            Shape::TriangularReducible => "TriangularReducible",
            Shape::ImprimitiveDihedral => "ImprimitiveDihedral",
            Shape::Sl2Extension => "Sl2Extension",
            Shape::ScalarOrTrivial => "ScalarOrTrivial",
        }
    }
}

/// Which of the three determinant patterns a finite dihedral determinant
/// group follows: `m` odd, `4 | m`, or `m = 2 mod 4`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ParityCase {
    A,
    B,
    C,
}

impl ParityCase {
    pub fn of(m: u32) -> Self {
        if m % 2 == 1 {
            ParityCase::A
        } else if m % 4 == 0 {
            ParityCase::B
        } else {
            ParityCase::C
        }
    }

    pub fn letter(&self) -> &'static str {
        match self {
            ParityCase::A => "a",
            ParityCase::B => "b",
            ParityCase::C => "c",
        }
    }
}

/// `sum_i c_i delta^i` with constant coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearDeltaOp {
    pub coeffs: Vec<AlgNum>,
}

impl LinearDeltaOp {
    pub fn new(mut coeffs: Vec<AlgNum>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        LinearDeltaOp { coeffs }
    }

    pub fn identity() -> Self {
        LinearDeltaOp { coeffs: vec![AlgNum::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn apply(&self, f: &RatFunc<AlgNum>) -> RatFunc<AlgNum> {
        let mut acc = RatFunc::zero();
        let mut d = f.clone();
        for c in &self.coeffs {
            if !c.is_zero() {
                acc = &acc + &d.scale(c);
            }
            d = d.derivative();
        }
        acc
    }
}

impl fmt::Display for LinearDeltaOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Constraint {
    TorsionAlpha(u32),
    TorsionLambda(u32),
    TorsionLink { e: u32, g_m: u32, g_n: u32 },
    MonomialTorsion(i64, i64),
    DeltaConstAlpha,
    DeltaConstLambda,
    DeltaConstMonomial(i64, i64),
    UnipotentFull,
    UnipotentTrivial,
    UnipotentEmbedding(LinearDeltaOp),
    DetTorsionDihedral { m: u32, case: ParityCase },
    DeltaConstDet,
    DetTorsion(u32),
    FullGroup,
}

impl Constraint {
    pub fn kind(&self) -> &'static str {
        match self {
            Constraint::TorsionAlpha(_) => "TorsionAlpha",
            Constraint::TorsionLambda(_) => "TorsionLambda",
            Constraint::TorsionLink { .. } => "TorsionLink",
            Constraint::MonomialTorsion(..) => "MonomialTorsion",
            Constraint::DeltaConstAlpha => "DeltaConstAlpha",
            Constraint::DeltaConstLambda => "DeltaConstLambda",
            Constraint::DeltaConstMonomial(..) => "DeltaConstMonomial",
            Constraint::UnipotentFull => "UnipotentFull",
            Constraint::UnipotentTrivial => "UnipotentTrivial",
            Constraint::UnipotentEmbedding(_) => "UnipotentEmbedding",
            Constraint::DetTorsionDihedral { .. } => "DetTorsionDihedral",
            Constraint::DeltaConstDet => "DeltaConstDet",
            Constraint::DetTorsion(_) => "DetTorsion",
            Constraint::FullGroup => "FullGroup",
        }
    }

    /// True for constraints that only make sense for the differential group.
    pub fn is_differential(&self) -> bool {
        matches!(
            self,
            Constraint::DeltaConstAlpha
                | Constraint::DeltaConstLambda
                | Constraint::DeltaConstMonomial(..)
                | Constraint::DeltaConstDet
                | Constraint::UnipotentTrivial
                | Constraint::UnipotentEmbedding(_)
        )
    }

    pub fn is_unipotent(&self) -> bool {
        matches!(
            self,
            Constraint::UnipotentFull | Constraint::UnipotentTrivial | Constraint::UnipotentEmbedding(_)
        )
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::TorsionAlpha(m) | Constraint::TorsionLambda(m) | Constraint::DetTorsion(m) => {
                write!(f, "{}({m})", self.kind())
            }
            Constraint::TorsionLink { e, g_m, g_n } => write!(f, "TorsionLink({e}, {g_m}, {g_n})"),
            Constraint::MonomialTorsion(m, n) | Constraint::DeltaConstMonomial(m, n) => {
                write!(f, "{}({m}, {n})", self.kind())
            }
            Constraint::UnipotentEmbedding(l) => write!(f, "UnipotentEmbedding({l})"),
            Constraint::DetTorsionDihedral { m, case } => {
                write!(f, "DetTorsionDihedral({m}, {})", case.letter())
            }
            _ => f.write_str(self.kind()),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct GroupDescriptor {
    pub shape: Shape,
    pub constraints: Vec<Constraint>,
    /// Number of connected components, when determined.
    pub components: Option<u32>,
    /// Which cases of the classification fired, in order.
    pub cases: Vec<&'static str>,
}

impl GroupDescriptor {
    pub fn new(shape: Shape, mut constraints: Vec<Constraint>, components: Option<u32>) -> Self {
        if constraints.is_empty() {
            constraints.push(Constraint::FullGroup);
        }
        GroupDescriptor { shape, constraints, components, cases: Vec::new() }
    }

    pub fn has(&self, c: &Constraint) -> bool {
        self.constraints.contains(c)
    }

    pub fn has_kind(&self, kind: &str) -> bool {
        self.constraints.iter().any(|c| c.kind() == kind)
    }

    pub fn unipotent(&self) -> Option<&Constraint> {
        self.constraints.iter().find(|c| c.is_unipotent())
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.constraints.iter().map(|c| c.to_string()).collect();
        write!(f, "{} {{{}}}", self.shape.name(), cs.join(", "))
    }
}

/// The algebraic shadow of a differential descriptor: delta-constraints are
/// dropped and any unipotent constraint becomes the full unipotent radical.
pub fn delta_erasure(g: &GroupDescriptor) -> GroupDescriptor {
    let mut out: Vec<Constraint> = Vec::new();
    for c in &g.constraints {
        let c = match c {
            Constraint::UnipotentTrivial | Constraint::UnipotentEmbedding(_) => Constraint::UnipotentFull,
            c if c.is_differential() => continue,
            Constraint::FullGroup => continue,
            c => c.clone(),
        };
        if !out.contains(&c) {
            out.push(c);
        }
    }
    GroupDescriptor { cases: Vec::new(), ..GroupDescriptor::new(g.shape, out, g.components) }
}

/// Descriptor equality ignoring case tags.
pub fn same_group(a: &GroupDescriptor, b: &GroupDescriptor) -> bool {
    a.shape == b.shape && a.constraints == b.constraints && a.components == b.components
}
