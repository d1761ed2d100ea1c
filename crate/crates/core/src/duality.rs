//! The isomorphism of Coxeter systems `W_{g,κ} ≅ W_{ǧ,κ̌}`.
//!
//! An element `w t^{λ̌}` with `λ̌ ∈ Q̌_κ` goes to `w t^{(κ - κ_c)(λ̌)}`, where
//! `W_f` is shared by both sides and `κ - κ_c` is taken at the positive
//! member of `{κ, -κ}` (the two integral Weyl groups coincide). Weights of
//! `g` are the coweights of the dual datum, so the image translation is
//! already in the dual group's coordinates.

use serde_json::json;

use crate::affweyl::{ExtAffineWeylElement, FiniteWeyl, DEFAULT_BALL_CAP};
use crate::error::{Error, Result};
use crate::intweyl::{self, IntegralWeylGroup};
use crate::levels::{self, Level};
use crate::linalg::{self, Q};
use crate::rootdata::RootDatum;

/// Order of an element of `W̃`, or `None` when infinite. An element whose
/// finite part has order `k` has infinite order exactly when its `k`-th
/// power is a nonzero translation.
pub fn element_order(x: &ExtAffineWeylElement) -> Option<usize> {
    let mut y = x.clone();
    for k in 1..=128 {
        if y.finite.is_identity() {
            return if y.translation.iter().all(|v| *v == 0) {
                Some(k)
            } else {
                None
            };
        }
        y = y.mul(x);
    }
    unreachable!("finite Weyl group elements have order at most 128 in supported ranks")
}

/// Coxeter matrix of a generator list; `0` encodes `∞`.
pub fn coxeter_matrix(gens: &[ExtAffineWeylElement]) -> Vec<Vec<usize>> {
    gens.iter()
        .map(|s| {
            gens.iter()
                .map(|t| element_order(&s.mul(t)).unwrap_or(0))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct DualityMap {
    pub group: IntegralWeylGroup,
    pub dual_group: IntegralWeylGroup,
    pub dual_datum: RootDatum,
    pub level: Level,
    pub dual_level: Level,
    /// `|o|` for `κ - κ_c = o κ_b`; `None` at irrational levels.
    scale: Option<Q>,
}

impl DualityMap {
    pub fn new(datum: &RootDatum, level: &Level) -> Result<Self> {
        datum.require_simple()?;
        let dual_level = levels::dual_level(level, datum)?;
        let dual_datum = datum.langlands_dual();
        Ok(DualityMap {
            group: intweyl::integral_weyl_group(datum, level)?,
            dual_group: intweyl::integral_weyl_group(&dual_datum, &dual_level)?,
            dual_datum,
            level: *level,
            dual_level,
            scale: level.offset().map(linalg::abs_q),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        self.group.datum()
    }

    /// `(κ - κ_c)(λ̌)` at the positive representative, as a dual coweight.
    pub fn map_translation(&self, mu: &[i64]) -> Result<Vec<i64>> {
        if !self.group.translation_lattice.contains(self.datum(), mu) {
            return Err(Error::NotMember(format!(
                "translation {mu:?} not in the integral lattice"
            )));
        }
        let Some(o) = self.scale else {
            return Ok(vec![0; mu.len()]);
        };
        let image: Vec<Q> = levels::basic_map(self.datum(), &linalg::qvec(mu))
            .into_iter()
            .map(|x| x * o)
            .collect();
        linalg::integral(&image).ok_or_else(|| Error::NotMember("image not integral".into()))
    }

    pub fn map(&self, x: &ExtAffineWeylElement) -> Result<ExtAffineWeylElement> {
        Ok(ExtAffineWeylElement::new(
            x.finite.dualize(self.datum()),
            self.map_translation(&x.translation)?,
        ))
    }

    /// The same construction from the dual side, which inverts `map`.
    pub fn inverse(&self) -> Result<DualityMap> {
        DualityMap::new(&self.dual_datum, &self.dual_level)
    }
}

pub fn duality_map(
    datum: &RootDatum,
    level: &Level,
    x: &ExtAffineWeylElement,
) -> Result<ExtAffineWeylElement> {
    DualityMap::new(datum, level)?.map(x)
}

#[derive(Debug, Clone)]
pub struct IsoReport {
    pub type_label: String,
    pub level: Level,
    pub dual_level: Level,
    pub generators_match: bool,
    pub coxeter_matrix: Vec<Vec<usize>>,
    pub dual_coxeter_matrix: Vec<Vec<usize>>,
    pub lattice_bijection: bool,
    pub lengths_checked: usize,
    pub lengths_preserved: bool,
}

impl IsoReport {
    pub fn success(&self) -> bool {
        self.generators_match
            && self.coxeter_matrix == self.dual_coxeter_matrix
            && self.lattice_bijection
            && self.lengths_preserved
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": self.type_label,
            "level": self.level.to_json(),
            "dual_level": self.dual_level.to_json(),
            "generators_match": self.generators_match,
            "coxeter_matrix": self.coxeter_matrix,
            "dual_coxeter_matrix": self.dual_coxeter_matrix,
            "coxeter_matrices_equal": self.coxeter_matrix == self.dual_coxeter_matrix,
            "lattice_bijection": self.lattice_bijection,
            "lengths_checked": self.lengths_checked,
            "lengths_preserved": self.lengths_preserved,
            "success": self.success(),
        })
    }
}

/// Checks generator correspondence, Coxeter matrices, the lattice bijection
/// `Q̌_κ ≅ Q_κ̌` and preservation of intrinsic length on words of length at
/// most `ball`.
pub fn verify_coxeter_iso(level: &Level, datum: &RootDatum, ball: usize) -> Result<IsoReport> {
    verify_coxeter_iso_capped(level, datum, ball, DEFAULT_BALL_CAP)
}

pub fn verify_coxeter_iso_capped(
    level: &Level,
    datum: &RootDatum,
    ball: usize,
    cap: usize,
) -> Result<IsoReport> {
    let m = DualityMap::new(datum, level)?;
    let back = m.inverse()?;
    let images: Vec<ExtAffineWeylElement> = m
        .group
        .simple_reflections
        .iter()
        .map(|s| m.map(s))
        .collect::<Result<_>>()?;
    let generators_match = images == m.dual_group.simple_reflections;

    // lattice bijection on bases, checked in both directions
    let n = datum.rank();
    let forward = m.group.translation_lattice.basis.iter().all(|b| {
        m.map_translation(b)
            .map(|img| {
                m.dual_group
                    .translation_lattice
                    .contains(&m.dual_datum, &img)
            })
            .unwrap_or(false)
    });
    let backward = m.dual_group.translation_lattice.basis.iter().all(|b| {
        back.map_translation(b)
            .map(|img| m.group.translation_lattice.contains(datum, &img))
            .unwrap_or(false)
    });
    let round_trip = (0..n).all(|i| {
        let x = ExtAffineWeylElement::new(FiniteWeyl::simple(datum, i), vec![0; n]);
        let Ok(y) = m.map(&x) else { return false };
        back.map(&y).map(|z| z == x).unwrap_or(false)
    }) && m.group.translation_lattice.basis.iter().all(|b| {
        m.map_translation(b)
            .and_then(|img| back.map_translation(&img))
            .map(|z| &z == b)
            .unwrap_or(false)
    });

    let words = m.group.words_up_to(ball, cap)?;
    let mut lengths_preserved = true;
    for x in &words {
        let l1 = m.group.intrinsic_length(x);
        let l2 = m.dual_group.intrinsic_length(&m.map(x)?);
        if l1 != l2 || l1 == usize::MAX {
            lengths_preserved = false;
        }
    }

    Ok(IsoReport {
        type_label: datum.label(),
        level: *level,
        dual_level: m.dual_level,
        generators_match,
        coxeter_matrix: coxeter_matrix(&m.group.simple_reflections),
        dual_coxeter_matrix: coxeter_matrix(&m.dual_group.simple_reflections),
        lattice_bijection: forward && backward && round_trip,
        lengths_checked: words.len(),
        lengths_preserved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanType;

    #[test]
    fn b2_matches_c2() {
        let d = RootDatum::build(CartanType::B(2));
        let r = verify_coxeter_iso(&Level::from_offset(1, 2), &d, 4).unwrap();
        assert!(r.success(), "{:?}", r.to_json());
        assert_eq!(r.dual_level.to_string(), "-h+1");
    }

    #[test]
    fn affine_a1_has_infinite_bond() {
        let d = RootDatum::build(CartanType::A(1));
        let r = verify_coxeter_iso(&Level::from_offset(2, 3), &d, 5).unwrap();
        assert_eq!(r.coxeter_matrix, vec![vec![1, 0], vec![0, 1]]);
        assert!(r.success());
    }

    #[test]
    fn g2_orders() {
        let d = RootDatum::build(CartanType::G2);
        let r = verify_coxeter_iso(&Level::from_offset(1, 1), &d, 3).unwrap();
        let m = &r.coxeter_matrix;
        assert_eq!(m[0][1], 6);
        let mut offdiag: Vec<usize> = vec![m[0][2], m[1][2]];
        offdiag.sort();
        assert_eq!(offdiag, vec![2, 3]);
        assert!(r.success());
    }

    #[test]
    fn negative_and_irrational_levels() {
        for t in [CartanType::C(3), CartanType::F4] {
            let d = RootDatum::build(t);
            for level in [
                Level::from_offset(-5, 4),
                Level::from_offset(-1, 3),
                Level::irrational(),
            ] {
                let r = verify_coxeter_iso(&level, &d, 2).unwrap();
                assert!(r.success(), "{t} {level}: {:?}", r.to_json());
            }
        }
    }

    #[test]
    fn translations_outside_lattice_rejected() {
        let d = RootDatum::build(CartanType::A(1));
        let x = ExtAffineWeylElement::translation(vec![2]);
        assert!(duality_map(&d, &Level::from_offset(1, 2), &x).is_err());
        let y = ExtAffineWeylElement::translation(vec![4]);
        // t^{2α̌} ↦ t^{α} = t^{2ω}
        assert_eq!(
            duality_map(&d, &Level::from_offset(1, 2), &y)
                .unwrap()
                .translation,
            vec![2]
        );
    }
}
