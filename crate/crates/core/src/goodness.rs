//! Good levels: the bad-prime table and an independent alcove lattice-point
//! oracle, plus antidominant weights with prescribed stabilizers.
//!
//! At a negative rational level `(-h^∨ + p/q)κ_b` the substitution
//! `ν = -λ - ρ` turns antidominance into membership of `ν` in the alcove
//! `ν_i ≥ 0`, `Σ c_i ν_i ≤ P` with vertices `0` and `(P/c_i) ω_i`. Here `c`
//! is the coefficient vector of `θ̌_s` when `(q, r) = 1` and of `θ̌_l` when
//! `r | q`, and `P` ranges over the positive integers with `P ≡ -p (mod q)`
//! (shifting by an integral level). A face of the alcove is recorded as a
//! bitmask over the vertices, bit 0 for the vertex `0` and bit `i + 1` for
//! `(P/c_i) ω_i`.

use serde_json::json;

use crate::affweyl::AffWeight;
use crate::error::{Error, Result};
use crate::intweyl::{self, IntegralWeylGroup};
use crate::levels::Level;
use crate::linalg::{self, q, Q};
use crate::rootdata::{CartanType, RootDatum};

/// The number `n(g)` whose prime factors are the bad primes.
pub fn bad_prime_product(ty: CartanType) -> i64 {
    match ty {
        CartanType::A(_) => 1,
        CartanType::B(_) | CartanType::C(_) | CartanType::D(_) => 2,
        CartanType::E(8) => 30,
        CartanType::E(_) | CartanType::F4 | CartanType::G2 => 6,
    }
}

pub fn is_good_table(level: &Level, datum: &RootDatum) -> Result<bool> {
    let f = datum.require_simple()?;
    if level.is_critical() {
        return Err(Error::Critical);
    }
    Ok(match level.p_q() {
        None => true,
        Some((_, q)) => linalg::gcd(q, bad_prime_product(f.cartan_type)) == 1,
    })
}

/// Coefficients `c_i` of the dominant coroot bounding the alcove.
pub fn alcove_coefficients(datum: &RootDatum, q: i64) -> Result<Vec<i64>> {
    let f = datum.require_simple()?;
    Ok(if linalg::gcd(q, f.lacing_number) == 1 {
        f.theta_s_check.clone()
    } else {
        f.theta_l_check.clone()
    })
}

/// The alcove for one choice of `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveModel {
    pub coefficients: Vec<i64>,
    pub p: i64,
}

impl AlcoveModel {
    pub fn rank(&self) -> usize {
        self.coefficients.len()
    }

    pub fn vertices(&self) -> Vec<Vec<Q>> {
        let n = self.rank();
        let mut out = vec![vec![q(0); n]];
        for (i, c) in self.coefficients.iter().enumerate() {
            let mut v = vec![q(0); n];
            v[i] = Q::new(self.p, *c);
            out.push(v);
        }
        out
    }

    /// All nonempty faces as vertex bitmasks, in increasing order.
    pub fn faces(&self) -> Vec<u32> {
        (1..(1u32 << (self.rank() + 1))).collect()
    }

    /// Whether `ν` lies in the relative interior of `face`.
    pub fn in_face_interior(&self, face: u32, nu: &[Q]) -> bool {
        let total: Q = self
            .coefficients
            .iter()
            .zip(nu)
            .map(|(c, x)| q(*c) * x)
            .sum();
        let coords_ok = nu.iter().enumerate().all(|(i, x)| {
            if face & (1 << (i + 1)) != 0 {
                *x > q(0)
            } else {
                *x == q(0)
            }
        });
        let wall_ok = if face & 1 != 0 {
            total < q(self.p)
        } else {
            total == q(self.p)
        };
        coords_ok && wall_ok
    }
}

/// Generators of `W_{g,κ}` (finite `0..n`, extra `n`) fixing the interior of
/// `face`.
pub fn face_stabilizer(face: u32, rank: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..rank).filter(|i| face & (1 << (i + 1)) == 0).collect();
    if face & 1 == 0 {
        out.push(rank);
    }
    out
}

/// The face whose stabilizer is the given generator subset.
pub fn face_of_stabilizer(stab: &[usize], rank: usize) -> Result<u32> {
    if let Some(bad) = stab.iter().find(|i| **i > rank) {
        return Err(Error::Invalid(format!(
            "generator index {bad} out of range"
        )));
    }
    let mut face = 0u32;
    for i in 0..rank {
        if !stab.contains(&i) {
            face |= 1 << (i + 1);
        }
    }
    if !stab.contains(&rank) {
        face |= 1;
    }
    if face == 0 {
        return Err(Error::Invalid(
            "the full generator set is not a finite parabolic".into(),
        ));
    }
    Ok(face)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceStatus {
    /// A lattice point `ν` in the face interior for alcove parameter `p`.
    Witness {
        p: i64,
        nu: Vec<i64>,
    },
    /// No admissible `P` works: `divisor > 1` divides every `c_i` on the
    /// face and `q`, hence every lattice point's `P`, but not `p`.
    Obstruction {
        divisor: i64,
    },
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCertificate {
    pub face: u32,
    pub stabilizer: Vec<usize>,
    pub status: FaceStatus,
}

impl FaceCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        let status = match &self.status {
            FaceStatus::Witness { p, nu } => json!({"kind": "witness", "p": p, "nu": nu}),
            FaceStatus::Obstruction { divisor } => {
                json!({"kind": "obstruction", "divisor": divisor})
            }
            FaceStatus::Inconclusive => json!({"kind": "inconclusive"}),
        };
        json!({"face": self.face, "stabilizer": self.stabilizer, "status": status})
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Good,
    Bad,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Good => "good",
            Verdict::Bad => "bad",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub verdict: Verdict,
    /// `fast-path` when one `P` served every face, `scan` otherwise,
    /// `irrational` when no search was needed.
    pub method: &'static str,
    pub width: i64,
    pub faces: Vec<FaceCertificate>,
}

impl OracleReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "verdict": self.verdict.as_str(),
            "method": self.method,
            "width": self.width,
            "faces": self.faces.iter().map(FaceCertificate::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Default search width `q · lcm(c) · (rank + 2)`.
pub fn default_width(datum: &RootDatum, level: &Level) -> Result<i64> {
    let Some((_, qq)) = level.p_q() else {
        return Ok(0);
    };
    let c = alcove_coefficients(datum, qq)?;
    let l = c.iter().fold(1, |acc, x| linalg::lcm(acc, *x));
    Ok(qq * l * (datum.rank() as i64 + 2))
}

/// `(p, q)` of the negative representative of the level.
fn negative_pq(level: &Level) -> Result<Option<(i64, i64)>> {
    if level.is_critical() {
        return Err(Error::Critical);
    }
    Ok(level
        .p_q()
        .map(|(p, qq)| if p > 0 { (-p, qq) } else { (p, qq) }))
}

/// Admissible alcove parameters `P ≤ width`, increasing.
fn candidates(p: i64, qq: i64, width: i64) -> impl Iterator<Item = i64> {
    let first = (-p).rem_euclid(qq);
    let first = if first == 0 { qq } else { first };
    (0..)
        .map(move |k| first + k * qq)
        .take_while(move |x| *x <= width)
}

/// Direct lattice-point search for one face.
fn scan_face(c: &[i64], face: u32, p: i64, qq: i64, width: i64) -> FaceStatus {
    let n = c.len();
    let support: Vec<usize> = (0..n).filter(|i| face & (1 << (i + 1)) != 0).collect();
    let base: i64 = support.iter().map(|i| c[*i]).sum();
    if face & 1 != 0 {
        // ν = Σ_{support} ω_i is interior once P exceeds its height
        return match candidates(p, qq, width).find(|x| *x > base) {
            Some(pp) => {
                let nu = (0..n).map(|i| i64::from(support.contains(&i))).collect();
                FaceStatus::Witness { p: pp, nu }
            }
            None => FaceStatus::Inconclusive,
        };
    }
    // Σ c_i ν_i = P with ν_i ≥ 1 on the support: coin problem on P - base
    let span = (width - base).max(0) as usize;
    let mut last: Vec<Option<usize>> = vec![None; span + 1];
    let mut reach = vec![false; span + 1];
    reach[0] = true;
    for x in 1..=span {
        for i in &support {
            let ci = c[*i] as usize;
            if ci <= x && reach[x - ci] {
                reach[x] = true;
                last[x] = Some(*i);
                break;
            }
        }
    }
    for pp in candidates(p, qq, width) {
        let rest = pp - base;
        if rest < 0 || !reach[rest as usize] {
            continue;
        }
        let mut nu = vec![0i64; n];
        for i in &support {
            nu[*i] = 1;
        }
        let mut x = rest as usize;
        while x > 0 {
            let i = last[x].expect("reachable");
            nu[i] += 1;
            x -= c[i] as usize;
        }
        return FaceStatus::Witness { p: pp, nu };
    }
    let g = support.iter().fold(0, |acc, i| linalg::gcd(acc, c[*i]));
    let d = linalg::gcd(g, qq);
    if d > 1 {
        FaceStatus::Obstruction { divisor: d }
    } else {
        FaceStatus::Inconclusive
    }
}

/// One `P` with `N = gcd(P / c_i) > rank`, so that every face has an
/// interior point that is a `1/N`-convex combination of the vertices.
fn fast_path(c: &[i64], p: i64, qq: i64, width: i64) -> Option<Vec<FaceCertificate>> {
    let n = c.len();
    let pp = candidates(p, qq, width).find(|x| {
        c.iter().all(|ci| x % ci == 0)
            && c.iter().fold(0, |acc, ci| linalg::gcd(acc, x / ci)) > n as i64
    })?;
    let big_n = c.iter().fold(0, |acc, ci| linalg::gcd(acc, pp / ci));
    let faces = (1..(1u32 << (n + 1)))
        .map(|face| {
            let verts: Vec<usize> = (0..=n).filter(|v| face & (1 << v) != 0).collect();
            let k = verts.len() as i64;
            // the first vertex carries weight 1 - (k-1)/N, the others 1/N
            let nu = (0..n)
                .map(|i| {
                    if face & (1 << (i + 1)) == 0 {
                        return 0;
                    }
                    let unit = pp / c[i] / big_n;
                    if verts[0] == i + 1 {
                        unit * (big_n - k + 1)
                    } else {
                        unit
                    }
                })
                .collect();
            FaceCertificate {
                face,
                stabilizer: face_stabilizer(face, n),
                status: FaceStatus::Witness { p: pp, nu },
            }
        })
        .collect();
    Some(faces)
}

/// Decide goodness by searching lattice points in every face of the alcove.
/// Witnesses and obstructions are proofs; anything else is inconclusive.
pub fn is_good_alcove_oracle(
    level: &Level,
    datum: &RootDatum,
    width: Option<i64>,
) -> Result<OracleReport> {
    datum.require_simple()?;
    let Some((p, qq)) = negative_pq(level)? else {
        return Ok(OracleReport {
            verdict: Verdict::Good,
            method: "irrational",
            width: 0,
            faces: Vec::new(),
        });
    };
    let width = match width {
        Some(w) => w,
        None => default_width(datum, level)?,
    };
    let c = alcove_coefficients(datum, qq)?;
    let n = c.len();
    let (method, faces) = match fast_path(&c, p, qq, width) {
        Some(f) => ("fast-path", f),
        None => (
            "scan",
            (1..(1u32 << (n + 1)))
                .map(|face| FaceCertificate {
                    face,
                    stabilizer: face_stabilizer(face, n),
                    status: scan_face(&c, face, p, qq, width),
                })
                .collect(),
        ),
    };
    for f in &faces {
        if let FaceStatus::Witness { p: pp, nu } = &f.status {
            let model = AlcoveModel {
                coefficients: c.clone(),
                p: *pp,
            };
            debug_assert!(model.in_face_interior(f.face, &linalg::qvec(nu)));
        }
    }
    let verdict = if faces
        .iter()
        .any(|f| matches!(f.status, FaceStatus::Obstruction { .. }))
    {
        Verdict::Bad
    } else if faces
        .iter()
        .all(|f| matches!(f.status, FaceStatus::Witness { .. }))
    {
        Verdict::Good
    } else {
        Verdict::Inconclusive
    };
    Ok(OracleReport {
        verdict,
        method,
        width,
        faces,
    })
}

/// An antidominant weight with prescribed stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntidominantWitness {
    /// `λ` in fundamental-weight coordinates.
    pub weight: Vec<i64>,
    /// `κ'` as an integer multiple of `κ_b`.
    pub shift: i64,
    /// The level `κ + κ'`.
    pub level: Level,
    pub stabilizer: Vec<usize>,
}

impl AntidominantWitness {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "weight": self.weight,
            "shift": self.shift,
            "level": self.level.to_json(),
            "stabilizer": self.stabilizer,
        })
    }
}

/// Generators of `g` fixing `λ` under the dot action at `level`.
pub fn fixing_generators(g: &IntegralWeylGroup, la: &[i64], level: &Level) -> Vec<usize> {
    let w = AffWeight::rational(linalg::qvec(la));
    g.simple_reflections
        .iter()
        .enumerate()
        .filter(|(_, s)| g.ambient.dot_action(s, &w, level) == w)
        .map(|(i, _)| i)
        .collect()
}

/// `⟨λ + ρ, a⟩ ≤ 0` for every simple coroot of `g`, at `level`.
pub fn is_antidominant(g: &IntegralWeylGroup, la: &[i64], level: &Level) -> bool {
    let d = g.datum();
    let lr: Vec<Q> = la.iter().zip(d.rho()).map(|(a, b)| q(*a) + b).collect();
    g.simple_coroots.iter().all(|a| {
        let (r, x) = a.pair(d, level, &lr);
        x == q(0) && r <= q(0)
    })
}

/// Given generator indices of `W_{g,κ}` (finite `0..n`, extra `n`), returns
/// `λ ∈ Λ_{G_s}` and an integral shift `κ'` with `λ` antidominant at
/// `κ + κ'` and dot-stabilizer generated exactly by `stab`.
pub fn antidominant_weight_with_stabilizer(
    stab: &[usize],
    level: &Level,
    datum: &RootDatum,
    width: Option<i64>,
) -> Result<AntidominantWitness> {
    let g = intweyl::integral_weyl_group(datum, level)?;
    let n = datum.rank();
    let mut stab: Vec<usize> = stab.to_vec();
    stab.sort_unstable();
    stab.dedup();
    let (nu, shift, new_level) = match negative_pq(level)? {
        None => {
            if stab.iter().any(|i| *i >= n) {
                return Err(Error::Invalid(format!(
                    "generator index out of range for W_f of rank {n}"
                )));
            }
            let nu: Vec<i64> = (0..n).map(|i| i64::from(!stab.contains(&i))).collect();
            (nu, 0, *level)
        }
        Some((p, qq)) => {
            let face = face_of_stabilizer(&stab, n)?;
            let c = alcove_coefficients(datum, qq)?;
            let width = match width {
                Some(w) => w,
                None => default_width(datum, level)?,
            };
            match scan_face(&c, face, p, qq, width) {
                FaceStatus::Witness { p: pp, nu } => {
                    let (p0, _) = level.p_q().expect("rational");
                    // new offset -P/q; shift m = (-P - p0)/q
                    let m = (-pp - p0) / qq;
                    (nu, m, level.shift(m))
                }
                other => {
                    return Err(Error::NotGood(format!(
                        "no antidominant weight for face {face:#b} ({other:?})"
                    )))
                }
            }
        }
    };
    let rho = datum.rho();
    let weight: Vec<i64> = nu
        .iter()
        .zip(&rho)
        .map(|(x, r)| -x - r.to_integer())
        .collect();
    let fixed = fixing_generators(&g, &weight, &new_level);
    if !is_antidominant(&g, &weight, &new_level) || fixed != stab {
        return Err(Error::Invalid(format!(
            "witness check failed: fixed {fixed:?}, requested {stab:?}"
        )));
    }
    Ok(AntidominantWitness {
        weight,
        shift,
        level: new_level,
        stabilizer: fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        assert_eq!(bad_prime_product(CartanType::A(5)), 1);
        assert_eq!(bad_prime_product(CartanType::E(8)), 30);
        assert_eq!(bad_prime_product(CartanType::G2), 6);
        let e8 = RootDatum::build(CartanType::E(8));
        assert!(is_good_table(&Level::from_offset(-1, 7), &e8).unwrap());
        let d4 = RootDatum::build(CartanType::D(4));
        assert!(!is_good_table(&Level::from_offset(1, 2), &d4).unwrap());
        assert!(is_good_table(&Level::irrational(), &d4).unwrap());
        assert_eq!(is_good_table(&Level::critical(), &d4), Err(Error::Critical));
    }

    #[test]
    fn a1_always_good() {
        let d = RootDatum::build(CartanType::A(1));
        for qq in 1..=12 {
            let r = is_good_alcove_oracle(&Level::from_offset(-1, qq), &d, None).unwrap();
            assert_eq!(r.verdict, Verdict::Good, "q={qq}");
        }
    }

    #[test]
    fn c2_q2_bad_b2_q3_good() {
        let c2 = RootDatum::build(CartanType::C(2));
        let r = is_good_alcove_oracle(&Level::from_offset(-1, 2), &c2, None).unwrap();
        assert_eq!(r.verdict, Verdict::Bad);
        let b2 = RootDatum::build(CartanType::B(2));
        let r = is_good_alcove_oracle(&Level::from_offset(-2, 3), &b2, None).unwrap();
        assert_eq!(r.verdict, Verdict::Good);
    }

    #[test]
    fn f4_needs_wide_window() {
        let d = RootDatum::build(CartanType::F4);
        let r = is_good_alcove_oracle(&Level::from_offset(-1, 1), &d, None).unwrap();
        assert_eq!(r.verdict, Verdict::Good);
        // q · (rank + 2) is too narrow here
        let narrow = is_good_alcove_oracle(&Level::from_offset(-1, 1), &d, Some(6)).unwrap();
        assert_eq!(narrow.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn witnesses_are_interior() {
        let d = RootDatum::build(CartanType::B(3));
        let r = is_good_alcove_oracle(&Level::from_offset(-4, 5), &d, None).unwrap();
        let c = alcove_coefficients(&d, 5).unwrap();
        for f in &r.faces {
            let FaceStatus::Witness { p, nu } = &f.status else {
                panic!()
            };
            let model = AlcoveModel {
                coefficients: c.clone(),
                p: *p,
            };
            assert!(model.in_face_interior(f.face, &linalg::qvec(nu)));
            assert_eq!(p.rem_euclid(5), 4);
        }
    }

    #[test]
    fn minus_rho_for_full_finite_stabilizer() {
        let d = RootDatum::build(CartanType::A(2));
        let w = antidominant_weight_with_stabilizer(&[0, 1], &Level::from_offset(-7, 1), &d, None)
            .unwrap();
        assert_eq!(w.weight, vec![-1, -1]);
    }

    #[test]
    fn single_wall_witness() {
        let d = RootDatum::build(CartanType::A(2));
        let level = Level::from_offset(-1, 4);
        let w = antidominant_weight_with_stabilizer(&[0], &level, &d, None).unwrap();
        let lr: Vec<i64> = w.weight.iter().map(|x| x + 1).collect();
        assert_eq!(lr[0], 0);
        assert!(lr[1] < 0);
        assert_eq!(w.stabilizer, vec![0]);
    }

    #[test]
    fn irrational_trivial_stabilizer() {
        let d = RootDatum::build(CartanType::B(2));
        let w = antidominant_weight_with_stabilizer(&[], &Level::irrational(), &d, None).unwrap();
        assert_eq!(w.weight, vec![-2, -2]);
        assert!(w.stabilizer.is_empty());
    }

    #[test]
    fn every_face_has_witness_at_good_level() {
        for t in [CartanType::B(2), CartanType::G2, CartanType::A(3)] {
            let d = RootDatum::build(t);
            let level = Level::from_offset(-3, 7);
            let n = d.rank();
            for face in 1..(1u32 << (n + 1)) {
                let stab = face_stabilizer(face, n);
                let w = antidominant_weight_with_stabilizer(&stab, &level, &d, None).unwrap();
                assert_eq!(w.stabilizer, stab, "{t}");
                assert!(w.level.sign() == crate::levels::Sign::Negative);
            }
        }
    }

    #[test]
    fn bad_level_refuses() {
        let d = RootDatum::build(CartanType::B(2));
        let level = Level::from_offset(-1, 2);
        let c = alcove_coefficients(&d, 2).unwrap();
        let face = (0..=d.rank())
            .map(|i| 1u32 << i)
            .find(|f| f & 1 == 0 && c[f.trailing_zeros() as usize - 1] % 2 == 0)
            .unwrap();
        let stab = face_stabilizer(face, d.rank());
        assert!(matches!(
            antidominant_weight_with_stabilizer(&stab, &level, &d, None),
            Err(Error::NotGood(_))
        ));
    }
}
