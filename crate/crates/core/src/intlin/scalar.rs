use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arithmetic needed by the eliminations; every operation may fail on overflow.
pub(crate) trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    /// Truncated quotient.
    fn quot(&self, d: &Self) -> Self;
    /// Nearest-integer quotient, ties toward zero.
    fn round_quot(&self, d: &Self) -> Self;
    /// Floor quotient for `d > 0`.
    fn floor_quot(&self, d: &Self) -> Self;
    fn divides(&self, x: &Self) -> bool;
    /// `self - q * x`
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn quot(&self, d: &Self) -> Self {
        // Callers keep entries below 2^62 in magnitude, so i64::MIN / -1 cannot occur.
        self.wrapping_div(*d)
    }
    fn round_quot(&self, d: &Self) -> Self {
        let (q, r) = (self.wrapping_div(*d), self.wrapping_rem(*d));
        if r.unsigned_abs() * 2 > d.unsigned_abs() {
            if (r < 0) == (*d < 0) {
                q + 1
            } else {
                q - 1
            }
        } else {
            q
        }
    }
    fn floor_quot(&self, d: &Self) -> Self {
        self.div_floor(d)
    }
    fn divides(&self, x: &Self) -> bool {
        *self != 0 && x.wrapping_rem(*self) == 0
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        // Stay clear of i64::MIN so negation and division never overflow.
        q.checked_mul(*x).and_then(|p| self.checked_sub(p)).filter(|v| v.unsigned_abs() < 1 << 62)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn round_quot(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        if r.magnitude() * 2u32 > *d.magnitude() {
            if Signed::is_negative(&r) == Signed::is_negative(d) {
                q + 1
            } else {
                q - 1
            }
        } else {
            q
        }
    }
    fn floor_quot(&self, d: &Self) -> Self {
        self.div_floor(d)
    }
    fn divides(&self, x: &Self) -> bool {
        !Zero::is_zero(self) && Zero::is_zero(&(x % self))
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
}
