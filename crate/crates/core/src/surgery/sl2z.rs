use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::SurgeryError;

/// `[[p, q], [r, s]]` with `ps − qr = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[[i64; 2]; 2]", into = "[[i64; 2]; 2]")]
pub struct SL2Z {
    p: i64,
    q: i64,
    r: i64,
    s: i64,
}

impl SL2Z {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<Self, SurgeryError> {
        let det = p as i128 * s as i128 - q as i128 * r as i128;
        if det != 1 {
            return Err(SurgeryError::Determinant { det });
        }
        Ok(SL2Z { p, q, r, s })
    }

    pub const fn identity() -> Self {
        SL2Z {
            p: 1,
            q: 0,
            r: 0,
            s: 1,
        }
    }

    pub fn entries(&self) -> (i64, i64, i64, i64) {
        (self.p, self.q, self.r, self.s)
    }

    pub fn p(&self) -> i64 {
        self.p
    }
    pub fn q(&self) -> i64 {
        self.q
    }
    pub fn r(&self) -> i64 {
        self.r
    }
    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn inverse(&self) -> Self {
        SL2Z {
            p: self.s,
            q: -self.q,
            r: -self.r,
            s: self.p,
        }
    }

    /// `−τ`, also of determinant one.
    pub fn negated(&self) -> Self {
        SL2Z {
            p: -self.p,
            q: -self.q,
            r: -self.r,
            s: -self.s,
        }
    }

    pub fn checked_mul(&self, rhs: &SL2Z) -> Option<SL2Z> {
        let e = |a: i64, b: i64, c: i64, d: i64| a.checked_mul(b)?.checked_add(c.checked_mul(d)?);
        Some(SL2Z {
            p: e(self.p, rhs.p, self.q, rhs.r)?,
            q: e(self.p, rhs.q, self.q, rhs.s)?,
            r: e(self.r, rhs.p, self.s, rhs.r)?,
            s: e(self.r, rhs.q, self.s, rhs.s)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == SL2Z::identity()
    }
}

impl Default for SL2Z {
    fn default() -> Self {
        SL2Z::identity()
    }
}

impl Mul for SL2Z {
    type Output = SL2Z;
    fn mul(self, rhs: SL2Z) -> SL2Z {
        self.checked_mul(&rhs).expect("SL(2,Z) product overflow")
    }
}

impl TryFrom<[[i64; 2]; 2]> for SL2Z {
    type Error = SurgeryError;
    fn try_from(m: [[i64; 2]; 2]) -> Result<Self, Self::Error> {
        SL2Z::new(m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

impl From<SL2Z> for [[i64; 2]; 2] {
    fn from(t: SL2Z) -> Self {
        [[t.p, t.q], [t.r, t.s]]
    }
}

impl fmt::Display for SL2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.p, self.q, self.r, self.s)
    }
}
