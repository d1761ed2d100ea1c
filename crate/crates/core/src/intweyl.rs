//! Integral Weyl groups `W_{g,κ} ⊆ W̃` and their twisted versions `W_λ`.
//!
//! Affine coroots are compared additively through `(α̌, n·b(α̌))`, where
//! `b(α̌) = κ_b(α̌, α̌)/2`; this is the coefficient of `𝟙` up to the level
//! factor, so sums of affine coroots are sums in these coordinates.

use std::collections::HashSet;

use num_traits::Zero;
use serde_json::json;

use crate::affweyl::{AffineCoroot, AffineWeylGroup, ExtAffineWeylElement};
use crate::error::{Error, Result};
use crate::levels::{self, Level, TranslationLattice};
use crate::linalg::{self, fmt_q, Q};
use crate::rootdata::RootDatum;

/// `⟨α̌_cl, λ⟩ + n (κ - κ_c)(α̌, α̌)/2 ∈ ℤ`.
pub fn is_integral_coroot(datum: &RootDatum, a: &AffineCoroot, la: &[Q], level: &Level) -> bool {
    let (r, x) = a.pair(datum, level, la);
    x.is_zero() && r.is_integer()
}

/// The additive coordinate `n · b(α̌)`.
fn height_n(datum: &RootDatum, a: &AffineCoroot) -> i64 {
    a.n * datum.coroot_norm(&a.classical)
}

#[derive(Debug, Clone)]
pub struct IntegralWeylGroup {
    pub ambient: AffineWeylGroup,
    pub level: Level,
    /// Weights in fundamental-weight coordinates; zero in the main case.
    pub twist: Vec<Q>,
    pub simple_coroots: Vec<AffineCoroot>,
    pub simple_reflections: Vec<ExtAffineWeylElement>,
    pub translation_lattice: TranslationLattice,
}

impl IntegralWeylGroup {
    pub fn datum(&self) -> &RootDatum {
        self.ambient.datum()
    }

    pub fn rank(&self) -> usize {
        self.simple_reflections.len()
    }

    pub fn is_integral(&self, a: &AffineCoroot) -> bool {
        is_integral_coroot(self.datum(), a, &self.twist, &self.level)
    }

    /// Elements of word length at most `bound` over the simple reflections.
    pub fn words_up_to(&self, bound: usize, cap: usize) -> Result<HashSet<ExtAffineWeylElement>> {
        let id = self.ambient.identity();
        let mut seen = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        for _ in 0..bound {
            let mut next = Vec::new();
            for x in &frontier {
                for s in &self.simple_reflections {
                    let y = x.mul(s);
                    if seen.insert(y.clone()) {
                        if seen.len() > cap {
                            return Err(Error::BallCap { cap });
                        }
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(seen)
    }

    /// Membership by the semidirect-product description `W_f ⋉ Q̌_κ`.
    pub fn contains_by_lattice(&self, x: &ExtAffineWeylElement) -> bool {
        self.translation_lattice
            .contains(self.datum(), &x.translation)
    }

    /// Length in the Coxeter system of this group: the number of its positive
    /// coroots made negative by `x⁻¹`. Requires `x` in the group.
    pub fn intrinsic_length(&self, x: &ExtAffineWeylElement) -> usize {
        // word length by greedy descents over the simple reflections
        let mut y = x.clone();
        let mut len = 0;
        loop {
            let step = self
                .simple_reflections
                .iter()
                .zip(&self.simple_coroots)
                .find(|(_, a)| {
                    // s is a left descent of y iff y⁻¹(a) < 0
                    !y.inverse().act_coroot(self.datum(), a).is_positive()
                });
            match step {
                Some((s, _)) => {
                    y = s.mul(&y);
                    len += 1;
                }
                None => {
                    return if y.is_identity() { len } else { usize::MAX };
                }
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let d = self.datum();
        json!({
            "type": d.label(),
            "level": self.level.to_json(),
            "twist": self.twist.iter().map(fmt_q).collect::<Vec<_>>(),
            "generators": self.simple_coroots.iter().zip(&self.simple_reflections).map(|(a, s)| json!({
                "coroot": a.to_json(),
                "element": s.to_json(d),
            })).collect::<Vec<_>>(),
            "translation_lattice": self.translation_lattice.to_json(),
        })
    }
}

/// The extra affine coroot of `W_{g,κ}` for a rational level with
/// denominator `q`: `(θ̌_s, -q)` when `(q, r) = 1` and `(θ̌_l, -q/r)` when
/// `r | q`, returned as the positive representative.
pub fn extra_coroot(datum: &RootDatum, q: i64) -> Result<AffineCoroot> {
    let f = datum.require_simple()?;
    let r = f.lacing_number;
    let g = linalg::gcd(q, r);
    let a = if g == 1 {
        AffineCoroot::new(f.theta_s_check.clone(), -q)
    } else if g == r {
        AffineCoroot::new(f.theta_l_check.clone(), -q / r)
    } else {
        return Err(Error::Invalid(format!(
            "gcd({q}, {r}) is neither 1 nor {r}"
        )));
    };
    Ok(a.positive_representative())
}

/// `W_{g,κ}` at `λ = 0`.
pub fn integral_weyl_group(datum: &RootDatum, level: &Level) -> Result<IntegralWeylGroup> {
    datum.require_simple()?;
    let n = datum.rank();
    let mut coroots: Vec<AffineCoroot> = (0..n)
        .map(|i| {
            let mut d = vec![0; n];
            d[i] = 1;
            AffineCoroot::new(d, 0)
        })
        .collect();
    if let Some((_, q)) = level.p_q() {
        coroots.push(extra_coroot(datum, q)?);
    }
    let simple_reflections = coroots.iter().map(|a| a.reflection(datum)).collect();
    Ok(IntegralWeylGroup {
        ambient: AffineWeylGroup::new(datum),
        level: *level,
        twist: vec![Q::zero(); n],
        simple_coroots: coroots,
        simple_reflections,
        translation_lattice: levels::translation_lattice(level, datum),
    })
}

/// Positive integral affine coroots with `0 ≤ n ≤ n_bound`.
pub fn integral_coroots_for_twist(
    datum: &RootDatum,
    la: &[Q],
    level: &Level,
    n_bound: i64,
) -> Vec<AffineCoroot> {
    let mut out = Vec::new();
    for n in 0..=n_bound {
        for d in datum.positive_coroots() {
            for sign in [1, -1] {
                if n == 0 && sign < 0 {
                    continue;
                }
                let a = AffineCoroot::new(d.iter().map(|x| x * sign).collect(), n);
                if is_integral_coroot(datum, &a, la, level) {
                    out.push(a);
                }
            }
        }
    }
    out
}

/// Whether a positive integral coroot is a sum of two positive integral
/// coroots. Exact: a summand of `(α̌, n)` has `|n'| b' ≤ n b`, so every
/// candidate summand is enumerated.
fn is_decomposable(datum: &RootDatum, a: &AffineCoroot, la: &[Q], level: &Level) -> bool {
    let m = height_n(datum, a);
    // a positive summand has 0 ≤ n' ≤ n' b' ≤ m
    for b in integral_coroots_for_twist(datum, la, level, m.max(0)) {
        let mb = height_n(datum, &b);
        if mb > m {
            continue;
        }
        let cl: Vec<i64> = a
            .classical
            .iter()
            .zip(&b.classical)
            .map(|(x, y)| x - y)
            .collect();
        if datum.coroot_position(&cl).is_none()
            && datum
                .coroot_position(&cl.iter().map(|x| -x).collect::<Vec<_>>())
                .is_none()
        {
            continue;
        }
        let norm = datum.coroot_norm(&cl);
        if (m - mb) % norm != 0 {
            continue;
        }
        let c = AffineCoroot::new(cl, (m - mb) / norm);
        if c.is_positive() && is_integral_coroot(datum, &c, la, level) {
            return true;
        }
    }
    false
}

/// The simple members of the integral positive coroots with `n ≤ n_bound`.
pub fn simple_integral_coroots(
    datum: &RootDatum,
    la: &[Q],
    level: &Level,
    n_bound: i64,
) -> Vec<AffineCoroot> {
    integral_coroots_for_twist(datum, la, level, n_bound)
        .into_iter()
        .filter(|a| !is_decomposable(datum, a, la, level))
        .collect()
}

/// `W_λ` for a rational twist, generated by the simple integral coroots
/// found with `n ≤ n_bound`.
pub fn integral_weyl_group_for_twist(
    datum: &RootDatum,
    la: &[Q],
    level: &Level,
    n_bound: i64,
) -> Result<IntegralWeylGroup> {
    datum.require_simple()?;
    if la.len() != datum.rank() {
        return Err(Error::Dimension {
            expected: datum.rank(),
            got: la.len(),
        });
    }
    let coroots = simple_integral_coroots(datum, la, level, n_bound);
    let simple_reflections = coroots.iter().map(|a| a.reflection(datum)).collect();
    Ok(IntegralWeylGroup {
        ambient: AffineWeylGroup::new(datum),
        level: *level,
        twist: la.to_vec(),
        simple_coroots: coroots,
        simple_reflections,
        translation_lattice: levels::translation_lattice(level, datum),
    })
}

/// On the ball of radius `bound`, compare the subgroup generated by the
/// simple reflections with `{x : translation(x) ∈ Q̌_κ}`. Returns the two
/// counts and whether the sets agree.
pub fn generation_check(
    g: &IntegralWeylGroup,
    bound: usize,
    cap: usize,
) -> Result<(usize, usize, bool)> {
    let ball = g.ambient.enumerate_ball(bound)?;
    // integral coroots are ambient-positive, so intrinsic length never
    // exceeds ambient length and words of length ≤ bound suffice
    let words = g.words_up_to(bound, cap)?;
    let by_words: HashSet<&ExtAffineWeylElement> =
        ball.iter().filter(|x| words.contains(*x)).collect();
    let by_lattice: HashSet<&ExtAffineWeylElement> =
        ball.iter().filter(|x| g.contains_by_lattice(x)).collect();
    Ok((by_words.len(), by_lattice.len(), by_words == by_lattice))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::rootdata::CartanType;

    #[test]
    fn a1_integrality_every_fourth() {
        let d = RootDatum::build(CartanType::A(1));
        let level = Level::from_offset(3, 4);
        for n in -12..=12 {
            let a = AffineCoroot::new(vec![1], n);
            assert_eq!(is_integral_coroot(&d, &a, &[q(0)], &level), n % 4 == 0);
        }
    }

    #[test]
    fn irrational_only_finite() {
        let d = RootDatum::build(CartanType::B(2));
        let level = Level::irrational();
        assert!(is_integral_coroot(
            &d,
            &AffineCoroot::new(vec![1, 1], 0),
            &[q(0), q(0)],
            &level
        ));
        assert!(!is_integral_coroot(
            &d,
            &AffineCoroot::new(vec![1, 1], 2),
            &[q(0), q(0)],
            &level
        ));
        let g = integral_weyl_group(&d, &level).unwrap();
        assert_eq!(g.rank(), 2);
        let twisted = integral_coroots_for_twist(&d, &[Q::new(1, 3), q(0)], &level, 4);
        assert!(twisted.iter().all(|a| a.n == 0));
    }

    #[test]
    fn extra_generator_cases() {
        let a1 = RootDatum::build(CartanType::A(1));
        let g = integral_weyl_group(&a1, &Level::from_offset(2, 5)).unwrap();
        assert_eq!(g.simple_reflections[1].translation, vec![-10]);
        let b2 = RootDatum::build(CartanType::B(2));
        let f = b2.factors()[0].clone();
        let g = integral_weyl_group(&b2, &Level::from_offset(1, 4)).unwrap();
        assert_eq!(
            g.simple_coroots[2].positive_representative(),
            AffineCoroot::new(f.theta_l_check.iter().map(|x| -x).collect(), 2)
        );
        let g = integral_weyl_group(&b2, &Level::from_offset(1, 3)).unwrap();
        assert_eq!(
            g.simple_coroots[2],
            AffineCoroot::new(f.theta_s_check.iter().map(|x| -x).collect(), 3)
        );
    }

    #[test]
    fn generators_are_integral_involutions() {
        for t in [
            CartanType::A(2),
            CartanType::B(3),
            CartanType::C(3),
            CartanType::G2,
            CartanType::F4,
        ] {
            let d = RootDatum::build(t);
            for (p, qq) in [(1, 1), (1, 2), (2, 3), (5, 6), (-1, 4)] {
                let level = Level::from_offset(p, qq);
                let g = integral_weyl_group(&d, &level).unwrap();
                for (s, a) in g.simple_reflections.iter().zip(&g.simple_coroots) {
                    assert!(s.mul(s).is_identity());
                    assert!(g.is_integral(a), "{t} {a}");
                    assert!(g.contains_by_lattice(s));
                }
            }
        }
    }

    #[test]
    fn twist_zero_reproduces_generators() {
        for t in [CartanType::A(2), CartanType::B(2), CartanType::G2] {
            let d = RootDatum::build(t);
            for (p, qq) in [(1, 2), (1, 3), (2, 5), (1, 6)] {
                let level = Level::from_offset(p, qq);
                let g = integral_weyl_group(&d, &level).unwrap();
                let zero = vec![q(0); d.rank()];
                let mut found = simple_integral_coroots(&d, &zero, &level, 8);
                found.sort();
                let mut expected = g.simple_coroots.clone();
                expected.sort();
                assert_eq!(found, expected, "{t} {p}/{qq}");
            }
        }
    }

    #[test]
    fn half_weight_twist_is_proper() {
        let d = RootDatum::build(CartanType::A(1));
        let level = Level::from_offset(1, 1);
        let all = integral_coroots_for_twist(&d, &[q(0)], &level, 6);
        let some = integral_coroots_for_twist(&d, &[Q::new(1, 2)], &level, 6);
        assert!(some.len() < all.len());
        // at offset 1/2 exactly the odd n survive
        let half = integral_coroots_for_twist(&d, &[Q::new(1, 2)], &Level::from_offset(1, 2), 6);
        assert!(half.iter().all(|a| a.n % 2 == 1));
        assert_eq!(half.len(), 6);
    }

    #[test]
    fn generation_on_small_balls() {
        for (t, p, qq) in [
            (CartanType::A(1), 1, 3),
            (CartanType::A(2), 1, 2),
            (CartanType::B(2), 1, 2),
            (CartanType::B(2), 1, 3),
        ] {
            let d = RootDatum::build(t);
            let g = integral_weyl_group(&d, &Level::from_offset(p, qq)).unwrap();
            let (a, b, ok) = generation_check(&g, 6, 1_000_000).unwrap();
            assert!(ok, "{t}: {a} vs {b}");
        }
    }

    #[test]
    fn intrinsic_length_of_generators() {
        let d = RootDatum::build(CartanType::B(2));
        let g = integral_weyl_group(&d, &Level::from_offset(1, 2)).unwrap();
        for s in &g.simple_reflections {
            assert_eq!(g.intrinsic_length(s), 1);
        }
        let x = g.simple_reflections[0].mul(&g.simple_reflections[2]);
        assert_eq!(g.intrinsic_length(&x), 2);
    }

    #[test]
    fn not_simple_rejected() {
        let d = RootDatum::product(&[CartanType::A(1), CartanType::A(1)]);
        assert!(integral_weyl_group(&d, &Level::from_offset(1, 2)).is_err());
    }
}
