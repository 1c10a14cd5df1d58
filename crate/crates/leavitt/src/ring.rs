//! Exact involutive integral-domain coefficients: arbitrary-precision
//! integers (trivial involution) and Gaussian integers (conjugation).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("mixed coefficient rings")]
    MixedRings,
    #[error("invalid scalar literal `{0}`")]
    Parse(String),
}

/// Which coefficient ring a value or element lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum RingKind {
    Int,
    Gauss,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Int => write!(f, "int"),
            RingKind::Gauss => write!(f, "gauss"),
        }
    }
}

/// A scalar from ℤ or ℤ[i].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RingScalar {
    Int(BigInt),
    Gauss { re: BigInt, im: BigInt },
}

impl RingScalar {
    pub fn kind(&self) -> RingKind {
        match self {
            RingScalar::Int(_) => RingKind::Int,
            RingScalar::Gauss { .. } => RingKind::Gauss,
        }
    }

    pub fn zero(kind: RingKind) -> RingScalar {
        match kind {
            RingKind::Int => RingScalar::Int(BigInt::zero()),
            RingKind::Gauss => RingScalar::Gauss { re: BigInt::zero(), im: BigInt::zero() },
        }
    }

    pub fn one(kind: RingKind) -> RingScalar {
        match kind {
            RingKind::Int => RingScalar::Int(BigInt::one()),
            RingKind::Gauss => RingScalar::Gauss { re: BigInt::one(), im: BigInt::zero() },
        }
    }

    pub fn from_i64(kind: RingKind, n: i64) -> RingScalar {
        match kind {
            RingKind::Int => RingScalar::Int(BigInt::from(n)),
            RingKind::Gauss => RingScalar::Gauss { re: BigInt::from(n), im: BigInt::zero() },
        }
    }

    pub fn gauss(re: i64, im: i64) -> RingScalar {
        RingScalar::Gauss { re: BigInt::from(re), im: BigInt::from(im) }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingScalar::Int(n) => n.is_zero(),
            RingScalar::Gauss { re, im } => re.is_zero() && im.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == RingScalar::one(self.kind())
    }

    pub fn add(&self, other: &RingScalar) -> Result<RingScalar, CoeffError> {
        match (self, other) {
            (RingScalar::Int(a), RingScalar::Int(b)) => Ok(RingScalar::Int(a + b)),
            (RingScalar::Gauss { re: a, im: b }, RingScalar::Gauss { re: c, im: d }) => {
                Ok(RingScalar::Gauss { re: a + c, im: b + d })
            }
            _ => Err(CoeffError::MixedRings),
        }
    }

    pub fn mul(&self, other: &RingScalar) -> Result<RingScalar, CoeffError> {
        match (self, other) {
            (RingScalar::Int(a), RingScalar::Int(b)) => Ok(RingScalar::Int(a * b)),
            (RingScalar::Gauss { re: a, im: b }, RingScalar::Gauss { re: c, im: d }) => {
                Ok(RingScalar::Gauss { re: a * c - b * d, im: a * d + b * c })
            }
            _ => Err(CoeffError::MixedRings),
        }
    }

    pub fn neg(&self) -> RingScalar {
        match self {
            RingScalar::Int(a) => RingScalar::Int(-a),
            RingScalar::Gauss { re, im } => RingScalar::Gauss { re: -re, im: -im },
        }
    }

    /// The ring involution: identity on ℤ, conjugation on ℤ[i].
    pub fn conj(&self) -> RingScalar {
        match self {
            RingScalar::Int(a) => RingScalar::Int(a.clone()),
            RingScalar::Gauss { re, im } => RingScalar::Gauss { re: re.clone(), im: -im },
        }
    }

    /// Parses `-3`, `2+3i`, `2-3i`, `i`, `-i`, `3i`.
    pub fn parse(kind: RingKind, input: &str) -> Result<RingScalar, CoeffError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(CoeffError::Parse(input.to_string()));
        }
        let bad = || CoeffError::Parse(input.to_string());
        match kind {
            RingKind::Int => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(RingScalar::Int(n))
            }
            RingKind::Gauss => {
                if let Some(body) = s.strip_suffix('i') {
                    // Pure imaginary or a+bi; find the split sign after the
                    // leading character so `-2-3i` parses.
                    if let Some(split) = find_split(body) {
                        let re: BigInt = body[..split].parse().map_err(|_| bad())?;
                        let imtok = &body[split..];
                        let im = parse_signed_unit(imtok).ok_or_else(bad)?;
                        Ok(RingScalar::Gauss { re, im })
                    } else {
                        let im = parse_signed_unit(body).ok_or_else(bad)?;
                        Ok(RingScalar::Gauss { re: BigInt::zero(), im })
                    }
                } else {
                    let re: BigInt = s.parse().map_err(|_| bad())?;
                    Ok(RingScalar::Gauss { re, im: BigInt::zero() })
                }
            }
        }
    }
}

fn find_split(body: &str) -> Option<usize> {
    body.char_indices()
        .skip(1)
        .find(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i)
}

fn parse_signed_unit(tok: &str) -> Option<BigInt> {
    match tok {
        "" | "+" => Some(BigInt::one()),
        "-" => Some(-BigInt::one()),
        _ => tok.parse().ok(),
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingScalar::Int(n) => write!(f, "{n}"),
            RingScalar::Gauss { re, im } => {
                if im.is_zero() {
                    return write!(f, "{re}");
                }
                let unit_im = im.abs().is_one();
                if re.is_zero() {
                    return if unit_im {
                        write!(f, "{}i", if im.is_negative() { "-" } else { "" })
                    } else {
                        write!(f, "{im}i")
                    };
                }
                let sign = if im.is_negative() { "-" } else { "+" };
                if unit_im {
                    write!(f, "{re}{sign}i")
                } else {
                    write!(f, "{re}{sign}{}i", im.abs())
                }
            }
        }
    }
}
