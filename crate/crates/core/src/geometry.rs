//! Small fixed-size point and vector types.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A point or vector in the plane. Serializes as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[F; 2]", into = "[F; 2]")]
pub struct Point2<F: Scalar> {
    pub x: F,
    pub y: F,
}

/// A point or vector in space. Serializes as `[x, y, z]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[F; 3]", into = "[F; 3]")]
pub struct Point3<F: Scalar> {
    pub x: F,
    pub y: F,
    pub z: F,
}

pub type Vector2<F> = Point2<F>;
pub type Vector3<F> = Point3<F>;

impl<F: Scalar> From<[F; 2]> for Point2<F> {
    fn from([x, y]: [F; 2]) -> Self {
        Self { x, y }
    }
}

impl<F: Scalar> From<Point2<F>> for [F; 2] {
    fn from(p: Point2<F>) -> Self {
        [p.x, p.y]
    }
}

impl<F: Scalar> From<[F; 3]> for Point3<F> {
    fn from([x, y, z]: [F; 3]) -> Self {
        Self { x, y, z }
    }
}

impl<F: Scalar> From<Point3<F>> for [F; 3] {
    fn from(p: Point3<F>) -> Self {
        [p.x, p.y, p.z]
    }
}

impl<F: Scalar> Point2<F> {
    pub fn new(x: F, y: F) -> Self {
        Self { x, y }
    }

    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero())
    }

    /// Unit vector at `angle` radians.
    pub fn polar(radius: F, angle: F) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(radius * c, radius * s)
    }

    pub fn dot(self, other: Self) -> F {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> F {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> F {
        (self - other).norm()
    }

    /// Rotates about the origin by `angle` radians (counter-clockwise).
    pub fn rotate(self, angle: F) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn extend(self, z: F) -> Point3<F> {
        Point3::new(self.x, self.y, z)
    }
}

impl<F: Scalar> Point3<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero(), F::zero())
    }

    pub fn dot(self, other: Self) -> F {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(self) -> F {
        self.dot(self)
    }

    pub fn norm(self) -> F {
        self.norm_squared().sqrt()
    }

    pub fn distance(self, other: Self) -> F {
        (self - other).norm()
    }

    /// Returns `None` for vectors shorter than `F::epsilon()`.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        (n > F::epsilon()).then(|| self * (F::one() / n))
    }

    pub fn is_zero(self) -> bool {
        self.x == F::zero() && self.y == F::zero() && self.z == F::zero()
    }
}

macro_rules! impl_vector_ops {
    ($ty:ident { $($field:ident),+ }) => {
        impl<F: Scalar> Add for $ty<F> {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Self { $($field: self.$field + rhs.$field),+ }
            }
        }

        impl<F: Scalar> AddAssign for $ty<F> {
            fn add_assign(&mut self, rhs: Self) {
                $(self.$field += rhs.$field;)+
            }
        }

        impl<F: Scalar> Sub for $ty<F> {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                Self { $($field: self.$field - rhs.$field),+ }
            }
        }

        impl<F: Scalar> Neg for $ty<F> {
            type Output = Self;
            fn neg(self) -> Self {
                Self { $($field: -self.$field),+ }
            }
        }

        impl<F: Scalar> Mul<F> for $ty<F> {
            type Output = Self;
            fn mul(self, rhs: F) -> Self {
                Self { $($field: self.$field * rhs),+ }
            }
        }
    };
}

impl_vector_ops!(Point2 { x, y });
impl_vector_ops!(Point3 { x, y, z });

/// Coordinate access used by the generic writers.
pub trait Coordinates<F: Scalar>: Copy {
    const DIM: usize;
    fn coords(&self) -> Vec<F>;
}

impl<F: Scalar> Coordinates<F> for Point2<F> {
    const DIM: usize = 2;
    fn coords(&self) -> Vec<F> {
        vec![self.x, self.y]
    }
}

impl<F: Scalar> Coordinates<F> for Point3<F> {
    const DIM: usize = 3;
    fn coords(&self) -> Vec<F> {
        vec![self.x, self.y, self.z]
    }
}
