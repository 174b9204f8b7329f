use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;

use crate::boolean_group::C64;
use crate::error::{Error, Result};

/// An element of a finite-dimensional *-algebra, realised as a square
/// complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    m: DMatrix<C64>,
}

impl AlgebraElement {
    pub fn from_matrix(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::dimension(m.nrows(), m.ncols()));
        }
        Ok(AlgebraElement { m })
    }

    pub fn identity(dim: usize) -> Self {
        AlgebraElement {
            m: DMatrix::identity(dim, dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            m: DMatrix::zeros(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn adjoint(&self) -> Self {
        AlgebraElement {
            m: self.m.adjoint(),
        }
    }

    /// Operator norm (largest singular value).
    pub fn norm(&self) -> f64 {
        if self.m.iter().all(|z| z.re == 0.0 && z.im == 0.0) {
            return 0.0;
        }
        self.m.singular_values().max()
    }

    pub fn scale(&self, s: C64) -> Self {
        AlgebraElement { m: &self.m * s }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }

    /// `max(‖x − x*‖, ‖x − x²‖)`.
    pub fn projection_defect(&self) -> f64 {
        let sa = (self - &self.adjoint()).norm();
        let idem = (self - &(self * self)).norm();
        sa.max(idem)
    }

    pub fn is_projection(&self, tol: f64) -> bool {
        self.projection_defect() <= tol
    }

    /// `W x W*`.
    pub fn conjugate_by(&self, w: &DMatrix<C64>) -> Self {
        AlgebraElement {
            m: w * &self.m * w.adjoint(),
        }
    }
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            m: &self.m + &rhs.m,
        }
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            m: &self.m - &rhs.m,
        }
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            m: &self.m * &rhs.m,
        }
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        AlgebraElement { m: self.m + rhs.m }
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        AlgebraElement { m: self.m - rhs.m }
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement { m: -self.m }
    }
}
