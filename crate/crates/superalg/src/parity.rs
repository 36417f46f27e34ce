use std::fmt;
use std::ops::Add;

/// Degree mod 2 of a homogeneous quantity (element, monomial or derivation).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parity(u8);

impl Parity {
    pub const EVEN: Parity = Parity(0);
    pub const ODD: Parity = Parity(1);

    pub fn from_u32(n: u32) -> Parity {
        Parity((n % 2) as u8)
    }

    pub fn is_even(self) -> bool {
        self.0 == 0
    }

    pub fn is_odd(self) -> bool {
        self.0 == 1
    }

    pub fn flipped(self) -> Parity {
        Parity(self.0 ^ 1)
    }

    pub fn as_u8(self) -> u8 {
        self.0
    }

    /// The Koszul factor (-1)^{p q} picked up when two homogeneous
    /// quantities of these parities are swapped.
    pub fn koszul_sign(self, other: Parity) -> i64 {
        if self.0 & other.0 == 1 {
            -1
        } else {
            1
        }
    }

    /// (-1)^{p} for a single parity exponent.
    pub fn sign(self) -> i64 {
        if self.0 == 1 {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity((self.0 + rhs.0) % 2)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_even() { "even" } else { "odd" })
    }
}

impl fmt::Debug for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parity classification of an element of the superalgebra.
///
/// The zero element is homogeneous of every parity, which keeps
/// sign-dependent formulas total without special cases at call sites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParityClass {
    Zero,
    Homogeneous(Parity),
    Inhomogeneous,
}

impl ParityClass {
    pub fn has_parity(self, p: Parity) -> bool {
        match self {
            ParityClass::Zero => true,
            ParityClass::Homogeneous(q) => q == p,
            ParityClass::Inhomogeneous => false,
        }
    }

    pub fn is_homogeneous(self) -> bool {
        !matches!(self, ParityClass::Inhomogeneous)
    }

    /// The parity, with `default` standing in for the zero element.
    pub fn parity_or(self, default: Parity) -> Option<Parity> {
        match self {
            ParityClass::Zero => Some(default),
            ParityClass::Homogeneous(p) => Some(p),
            ParityClass::Inhomogeneous => None,
        }
    }
}
