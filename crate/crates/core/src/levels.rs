//! Levels on a simple factor, dual levels, signs and the translation
//! lattice `Q̌_κ`.
//!
//! A level is stored by its offset from the critical level in basic-level
//! units: `κ = (-h^∨ + o) κ_b`. Rational offsets are exact rationals;
//! irrational offsets are monomials `c · ξ^e` in one fixed transcendental
//! `ξ`, which is closed under the operations needed here (negation, scaling
//! and the inversion that computes the dual level).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{self, fmt_q, q, QMat, Q};
use crate::rootdata::RootDatum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    /// `κ - κ_c = o · κ_b` with `o` rational.
    Rational(Q),
    /// `κ - κ_c = coef · ξ^exponent · κ_b`, `coef ≠ 0`, `exponent ≠ 0`.
    Irrational { coef: Q, exponent: i32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    Critical,
}

impl Level {
    pub fn critical() -> Self {
        Level::Rational(Q::zero())
    }

    /// `(-h^∨ + p/q) κ_b`.
    pub fn from_offset(p: i64, q_: i64) -> Self {
        Level::Rational(Q::new(p, q_))
    }

    /// The generic irrational level `ξ κ_b` shifted from critical.
    pub fn irrational() -> Self {
        Level::Irrational {
            coef: Q::from_integer(1),
            exponent: 1,
        }
    }

    /// `κ = k κ_b` for a rational multiple `k` of the basic level.
    pub fn from_multiple(k: Q, datum: &RootDatum) -> Result<Self> {
        let hv = datum.require_simple()?.dual_coxeter_number;
        Ok(Level::Rational(k + q(hv)))
    }

    /// Rational multiple `k` with `κ = k κ_b`, when rational.
    pub fn multiple(&self, datum: &RootDatum) -> Result<Option<Q>> {
        let hv = datum.require_simple()?.dual_coxeter_number;
        Ok(match self {
            Level::Rational(o) => Some(*o - q(hv)),
            Level::Irrational { .. } => None,
        })
    }

    pub fn offset(&self) -> Option<Q> {
        match self {
            Level::Rational(o) => Some(*o),
            Level::Irrational { .. } => None,
        }
    }

    /// Reduced `(p, q)` with `q > 0` for rational levels.
    pub fn p_q(&self) -> Option<(i64, i64)> {
        self.offset().map(|o| (*o.numer(), *o.denom()))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Level::Rational(_))
    }

    pub fn is_critical(&self) -> bool {
        matches!(self, Level::Rational(o) if o.is_zero())
    }

    pub fn sign(&self) -> Sign {
        classify_sign(self)
    }

    /// Reflection about the critical level, `κ ↦ 2κ_c - κ`.
    pub fn reflect(&self) -> Self {
        match *self {
            Level::Rational(o) => Level::Rational(-o),
            Level::Irrational { coef, exponent } => Level::Irrational {
                coef: -coef,
                exponent,
            },
        }
    }

    /// Shift by the integral level `m κ_b`.
    pub fn shift(&self, m: i64) -> Self {
        match *self {
            Level::Rational(o) => Level::Rational(o + q(m)),
            // ξ^e + m is not a monomial; irrational shifts keep the regime
            irr => irr,
        }
    }

    /// `(κ - κ_c)(β̌, β̌) / 2` for a coroot of basic half-norm `norm`, in the
    /// form `(rational, irrational coefficient)`.
    pub fn half_norm(&self, norm: i64) -> (Q, Q) {
        match *self {
            Level::Rational(o) => (o * q(norm), Q::zero()),
            Level::Irrational { coef, .. } => (Q::zero(), coef * q(norm)),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Level::Rational(o) => json!({
                "kind": "rational",
                "offset": fmt_q(o),
                "p": o.numer(),
                "q": o.denom(),
                "literal": self.to_string(),
                "sign": classify_sign(self),
            }),
            Level::Irrational { coef, exponent } => json!({
                "kind": "irrational",
                "coefficient": fmt_q(coef),
                "exponent": exponent,
                "literal": self.to_string(),
                "sign": classify_sign(self),
            }),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Rational(o) if o.is_zero() => write!(f, "-h"),
            Level::Rational(o) if o.is_negative() => write!(f, "-h-{}", fmt_q(&-*o)),
            Level::Rational(o) => write!(f, "-h+{}", fmt_q(o)),
            Level::Irrational { coef, exponent } => {
                if *coef == Q::from_integer(1) && *exponent == 1 {
                    write!(f, "irr")
                } else {
                    write!(f, "irr*{}^{}", fmt_q(coef), exponent)
                }
            }
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    /// Literal syntax: `-h+p/q`, `-h-p/q`, `-h`, `irr`, `irr*c` and
    /// `irr*c^e`. The offset is measured from the critical level in
    /// basic-level units.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::Parse(format!("bad level literal `{s}` (expected -h+p/q or irr)"));
        if let Some(rest) = t.strip_prefix("irr") {
            if rest.is_empty() {
                return Ok(Level::irrational());
            }
            let rest = rest.strip_prefix('*').ok_or_else(err)?;
            let (c, e) = match rest.split_once('^') {
                Some((c, e)) => (c, e.parse::<i32>().map_err(|_| err())?),
                None => (rest, 1),
            };
            let coef = linalg::parse_q(c).ok_or_else(err)?;
            if coef.is_zero() || e == 0 {
                return Err(err());
            }
            return Ok(Level::Irrational { coef, exponent: e });
        }
        let rest = t.strip_prefix("-h").ok_or_else(err)?;
        if rest.is_empty() {
            return Ok(Level::critical());
        }
        let (sign, body) = if let Some(b) = rest.strip_prefix('+') {
            (1, b)
        } else if let Some(b) = rest.strip_prefix('-') {
            (-1, b)
        } else {
            return Err(err());
        };
        let o = linalg::parse_q(body).ok_or_else(err)?;
        Ok(Level::Rational(o * q(sign)))
    }
}

pub fn classify_sign(level: &Level) -> Sign {
    match level {
        Level::Rational(o) if o.is_zero() => Sign::Critical,
        Level::Rational(o) if o.is_positive() => Sign::Positive,
        Level::Rational(_) => Sign::Negative,
        Level::Irrational { .. } => Sign::Negative,
    }
}

/// The dual level on the Langlands dual datum:
/// `(-h^∨ + p/q) κ_b ↦ (-h^∨_ǧ + q/(p r)) κ̌_b`.
pub fn dual_level(level: &Level, datum: &RootDatum) -> Result<Level> {
    let r = datum.require_simple()?.lacing_number;
    match *level {
        Level::Rational(o) if o.is_zero() => Err(Error::Critical),
        Level::Rational(o) => Ok(Level::Rational(o.recip() / q(r))),
        Level::Irrational { coef, exponent } => Ok(Level::Irrational {
            coef: coef.recip() / q(r),
            exponent: -exponent,
        }),
    }
}

/// Per-factor dual levels for a product datum.
pub fn dual_levels(levels: &[Level], datum: &RootDatum) -> Result<Vec<Level>> {
    if levels.len() != datum.factors().len() {
        return Err(Error::Dimension {
            expected: datum.factors().len(),
            got: levels.len(),
        });
    }
    levels
        .iter()
        .zip(datum.factors())
        .map(|(l, f)| match *l {
            Level::Rational(o) if o.is_zero() => Err(Error::Critical),
            Level::Rational(o) => Ok(Level::Rational(o.recip() / q(f.lacing_number))),
            Level::Irrational { coef, exponent } => Ok(Level::Irrational {
                coef: coef.recip() / q(f.lacing_number),
                exponent: -exponent,
            }),
        })
        .collect()
}

/// A level `κ'` is integral when `κ'` maps every coroot into the root
/// lattice, i.e. `m · b_i ∈ ℤ` for `κ' = m κ_b`.
pub fn is_integral_multiple(m: Q, datum: &RootDatum) -> bool {
    datum
        .simple_norms()
        .iter()
        .all(|b| (m * q(*b)).is_integer())
}

/// `Q̌_κ = {λ̌ ∈ Q̌ : (κ - κ_c)(λ̌) ∈ Q}` with a basis `d_i α̌_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationLattice {
    /// Multipliers `d_i`; `0` means the direction is absent.
    pub multipliers: Vec<i64>,
    /// Basis vectors in fundamental-coweight coordinates.
    pub basis: Vec<Vec<i64>>,
    /// `[Q̌ : Q̌_κ]`, when finite.
    pub index: Option<i64>,
}

impl TranslationLattice {
    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    /// Membership for a coweight in fundamental coordinates.
    pub fn contains(&self, datum: &RootDatum, mu: &[i64]) -> bool {
        let d = datum.coweight_to_coroot_coords(&linalg::qvec(mu));
        d.iter().zip(&self.multipliers).all(|(x, m)| {
            if !x.is_integer() {
                return false;
            }
            let x = x.to_integer();
            if *m == 0 {
                x == 0
            } else {
                x.mod_floor(m) == 0
            }
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "multipliers": self.multipliers,
            "basis": self.basis,
            "index": self.index,
        })
    }
}

pub fn translation_lattice(level: &Level, datum: &RootDatum) -> TranslationLattice {
    let n = datum.rank();
    let multipliers: Vec<i64> = match level {
        Level::Rational(o) => (0..n)
            .map(|i| (*o * q(datum.simple_norms()[i])).denom().abs())
            .collect(),
        Level::Irrational { .. } => vec![0; n],
    };
    let basis: Vec<Vec<i64>> = multipliers
        .iter()
        .enumerate()
        .filter(|(_, m)| **m != 0)
        .map(|(i, m)| {
            datum
                .simple_coroot_coweight(i)
                .iter()
                .map(|x| x * m)
                .collect()
        })
        .collect();
    let index = if multipliers.contains(&0) {
        None
    } else {
        Some(multipliers.iter().product())
    };
    TranslationLattice {
        multipliers,
        basis,
        index,
    }
}

/// `(κ - κ_c)` applied to a coroot-lattice element, returned in
/// fundamental-weight coordinates (rational part only; irrational levels
/// return the coefficient of `ξ^e`).
pub fn shifted_form_map(level: &Level, datum: &RootDatum, mu: &[i64]) -> Vec<Q> {
    let coef = match level {
        Level::Rational(o) => *o,
        Level::Irrational { coef, .. } => *coef,
    };
    basic_map(datum, &linalg::qvec(mu))
        .into_iter()
        .map(|x| x * coef)
        .collect()
}

/// `κ_b : 𝔱 → 𝔱*` in fundamental coordinates on both sides.
pub fn basic_map(datum: &RootDatum, mu: &[Q]) -> Vec<Q> {
    // κ_b(α̌_i) = b_i α_i
    let d = datum.coweight_to_coroot_coords(mu);
    let n = datum.rank();
    let mut out = vec![Q::zero(); n];
    for i in 0..n {
        let coeff = d[i] * q(datum.simple_norms()[i]);
        if coeff.is_zero() {
            continue;
        }
        for (j, a) in datum.simple_root_weight(i).iter().enumerate() {
            out[j] += coeff * q(*a);
        }
    }
    out
}

/// Gram matrix of `κ - κ_c` for a rational level.
pub fn shifted_gram(level: &Level, datum: &RootDatum) -> Option<QMat> {
    level.offset().map(|o| {
        datum
            .basic_form()
            .scaled(o, crate::rootdata::FormName::General)
            .gram
    })
}
