//! 2x2 integer matrices acting on homogeneous polynomials.

use core::fmt;
use core::ops::Mul;

/// An element of PGL2(Z) stored as a literal integer matrix (a b; c d).
/// No projective sign quotient is applied anywhere: compositions multiply the
/// matrices as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1, 0, 0, 1);
    /// Swap of the two variables: (0 1; 1 0).
    pub const EPSILON: Mat2 = Mat2::new(0, 1, 1, 0);
    /// Inversion: (0 -1; 1 0).
    pub const S: Mat2 = Mat2::new(0, -1, 1, 0);
    /// Order-three element: (1 -1; 1 0).
    pub const U: Mat2 = Mat2::new(1, -1, 1, 0);
    /// Translation: (1 1; 0 1).
    pub const T: Mat2 = Mat2::new(1, 1, 0, 1);
    /// Lower translation: (1 0; 1 1).
    pub const T_PRIME: Mat2 = Mat2::new(1, 0, 1, 1);

    /// Build a matrix; the determinant must be nonzero.
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        assert!(a * d - b * c != 0, "matrix must be invertible");
        Mat2 { a, b, c, d }
    }

    pub const fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::mul(&self, &rhs)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}
