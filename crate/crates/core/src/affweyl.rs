//! The extended affine Weyl group `W̃ = W_f ⋉ Λ̌` of an adjoint datum.
//!
//! An element `(w, λ̌)` stands for `w t^{λ̌}`, so that
//! `(w₁, λ̌₁)(w₂, λ̌₂) = (w₁w₂, w₂⁻¹(λ̌₁) + λ̌₂)`. Translations are integer
//! vectors in fundamental-coweight coordinates.
//!
//! Length uses the closed form
//! `ℓ(w t^{λ̌}) = Σ_{α>0} |⟨λ̌, α⟩ + χ(w(α) < 0)|`, and the affine simple
//! reflection of each simple factor is `s_θ̌ t^{-θ̌}` for the dominant short
//! coroot `θ̌`. The affine coroot `(β̌, n)` has reflection `s_β̌ t^{nβ̌}` and
//! is positive when `n > 0`, or `n = 0` and `β̌ > 0`; with these choices the
//! inversion count of every element equals its length.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::levels::{self, Level};
use crate::linalg::{self, fmt_q, q, IMat, Q};
use crate::rootdata::RootDatum;

pub const DEFAULT_BALL_CAP: usize = 1_000_000;

/// A finite Weyl group element, stored as its matrices on
/// fundamental-coweight coordinates (column-vector convention).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeyl {
    cow: IMat,
    cow_inv: IMat,
}

impl FiniteWeyl {
    pub fn identity(n: usize) -> Self {
        FiniteWeyl {
            cow: linalg::identity(n),
            cow_inv: linalg::identity(n),
        }
    }

    pub fn rank(&self) -> usize {
        self.cow.len()
    }

    pub fn is_identity(&self) -> bool {
        self.cow == linalg::identity(self.rank())
    }

    /// Simple reflection `s_i`.
    pub fn simple(datum: &RootDatum, i: usize) -> Self {
        let n = datum.rank();
        let mut c = vec![0; n];
        c[i] = 1;
        Self::reflection_of_root(datum, &c)
    }

    /// Reflection `s_β` for a root in simple-root coordinates.
    pub fn reflection_of_root(datum: &RootDatum, c: &[i64]) -> Self {
        let d = datum
            .coroot_of_root(c)
            .expect("reflection needs a root of the datum");
        let bv = datum.coroot_to_coweight(&d);
        let n = datum.rank();
        // μ ↦ μ - ⟨β, μ⟩ β̌
        let m: IMat = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j) - bv[i] * c[j]).collect())
            .collect();
        FiniteWeyl {
            cow: m.clone(),
            cow_inv: m,
        }
    }

    /// Reflection `s_β̌` for a coroot in simple-coroot coordinates.
    pub fn reflection_of_coroot(datum: &RootDatum, d: &[i64]) -> Self {
        let c = datum
            .root_of_coroot(d)
            .expect("reflection needs a coroot of the datum");
        Self::reflection_of_root(datum, &c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        FiniteWeyl {
            cow: linalg::mat_mul(&self.cow, &other.cow),
            cow_inv: linalg::mat_mul(&other.cow_inv, &self.cow_inv),
        }
    }

    pub fn inverse(&self) -> Self {
        FiniteWeyl {
            cow: self.cow_inv.clone(),
            cow_inv: self.cow.clone(),
        }
    }

    pub fn act_coweight(&self, mu: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.cow, mu)
    }

    pub fn act_coweight_q(&self, mu: &[Q]) -> Vec<Q> {
        linalg::qmat_vec(&linalg::to_q(&self.cow), mu)
    }

    pub fn act_coweight_inv(&self, mu: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.cow_inv, mu)
    }

    /// Action on a coroot in simple-coroot coordinates.
    pub fn act_coroot(&self, datum: &RootDatum, d: &[i64]) -> Vec<i64> {
        let mu = self.act_coweight(&datum.coroot_to_coweight(d));
        linalg::integral(&datum.coweight_to_coroot_coords(&linalg::qvec(&mu)))
            .expect("Weyl group preserves the coroot lattice")
    }

    /// Action on a root in simple-root coordinates.
    pub fn act_root(&self, datum: &RootDatum, c: &[i64]) -> Vec<i64> {
        let la = self.act_weight(datum, &linalg::qvec(&datum.root_to_weight(c)));
        linalg::integral(&datum.weight_to_root_coords(&la))
            .expect("Weyl group preserves the root lattice")
    }

    /// Matrix on fundamental-weight coordinates.
    pub fn weight_matrix(&self, datum: &RootDatum) -> IMat {
        // (wλ)_i = ⟨λ, w⁻¹ α̌_i⟩
        let n = datum.rank();
        (0..n)
            .map(|i| {
                let mu = linalg::mat_vec(&self.cow_inv, &datum.simple_coroot_coweight(i));
                linalg::integral(&datum.coweight_to_coroot_coords(&linalg::qvec(&mu)))
                    .expect("integral coroot")
            })
            .collect()
    }

    pub fn act_weight(&self, datum: &RootDatum, la: &[Q]) -> Vec<Q> {
        linalg::qmat_vec(&linalg::to_q(&self.weight_matrix(datum)), la)
    }

    /// The same element viewed in the Weyl group of the dual datum, whose
    /// coweights are the weights of `datum`.
    pub fn dualize(&self, datum: &RootDatum) -> Self {
        FiniteWeyl {
            cow: self.weight_matrix(datum),
            cow_inv: self.inverse().weight_matrix(datum),
        }
    }

    /// `w(α) < 0`, for a positive root in simple-root coordinates.
    fn sends_negative(&self, c: &[i64], inv_rho: &[i64]) -> bool {
        // ⟨wα, ρ̌⟩ = ⟨α, w⁻¹ρ̌⟩
        linalg::dot(c, inv_rho) < 0
    }

    fn inv_rho(&self) -> Vec<i64> {
        self.cow_inv.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn length(&self, datum: &RootDatum) -> usize {
        let v = self.inv_rho();
        datum
            .positive_roots()
            .iter()
            .filter(|c| self.sends_negative(c, &v))
            .count()
    }

    /// Lexicographically least reduced word, 0-based simple indices.
    pub fn reduced_word(&self, datum: &RootDatum) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        let mut len = w.length(datum);
        while len > 0 {
            let (i, next) = (0..datum.rank())
                .map(|i| (i, FiniteWeyl::simple(datum, i).mul(&w)))
                .find(|(_, x)| x.length(datum) < len)
                .expect("nontrivial element has a left descent");
            word.push(i);
            w = next;
            len -= 1;
        }
        word
    }

    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Self {
        word.iter()
            .fold(FiniteWeyl::identity(datum.rank()), |acc, &i| {
                acc.mul(&FiniteWeyl::simple(datum, i))
            })
    }
}

/// All elements of `W_f`, by breadth-first closure. Errors above `cap`.
pub fn enumerate_finite_weyl(datum: &RootDatum, cap: usize) -> Result<Vec<FiniteWeyl>> {
    let n = datum.rank();
    let gens: Vec<FiniteWeyl> = (0..n).map(|i| FiniteWeyl::simple(datum, i)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([FiniteWeyl::identity(n)]);
    seen.insert(FiniteWeyl::identity(n));
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let x = w.mul(s);
            if seen.insert(x.clone()) {
                if seen.len() > cap {
                    return Err(Error::BallCap { cap });
                }
                queue.push_back(x);
            }
        }
        out.push(w);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineWeylElement {
    pub finite: FiniteWeyl,
    /// Translation part in fundamental-coweight coordinates.
    pub translation: Vec<i64>,
}

impl ExtAffineWeylElement {
    pub fn identity(n: usize) -> Self {
        ExtAffineWeylElement {
            finite: FiniteWeyl::identity(n),
            translation: vec![0; n],
        }
    }

    pub fn translation(mu: Vec<i64>) -> Self {
        ExtAffineWeylElement {
            finite: FiniteWeyl::identity(mu.len()),
            translation: mu,
        }
    }

    pub fn finite(w: FiniteWeyl) -> Self {
        let n = w.rank();
        ExtAffineWeylElement {
            finite: w,
            translation: vec![0; n],
        }
    }

    pub fn new(finite: FiniteWeyl, translation: Vec<i64>) -> Self {
        ExtAffineWeylElement {
            finite,
            translation,
        }
    }

    pub fn rank(&self) -> usize {
        self.translation.len()
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.translation.iter().all(|x| *x == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let moved = other.finite.act_coweight_inv(&self.translation);
        ExtAffineWeylElement {
            finite: self.finite.mul(&other.finite),
            translation: moved
                .iter()
                .zip(&other.translation)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        // (w t^λ)⁻¹ = t^{-λ} w⁻¹ = w⁻¹ t^{-w(λ)}
        let wl = self.finite.act_coweight(&self.translation);
        ExtAffineWeylElement {
            finite: self.finite.inverse(),
            translation: wl.iter().map(|x| -x).collect(),
        }
    }

    /// Action on an affine coroot: `w t^λ (β̌, n) = (wβ̌, n - ⟨β, λ⟩)`.
    pub fn act_coroot(&self, datum: &RootDatum, a: &AffineCoroot) -> AffineCoroot {
        let root = datum.root_of_coroot(&a.classical).expect("coroot");
        let shift = linalg::dot(&root, &self.translation);
        AffineCoroot {
            classical: self.finite.act_coroot(datum, &a.classical),
            n: a.n - shift,
        }
    }

    /// `w(α̌_cl)` for the Weyl part acting on a coweight.
    pub fn to_text(&self, datum: &RootDatum) -> String {
        let word = self.finite.reduced_word(datum);
        let w: Vec<String> = word.iter().map(|i| i.to_string()).collect();
        let t: Vec<String> = self.translation.iter().map(|i| i.to_string()).collect();
        format!("w=[{}] t=({})", w.join(","), t.join(","))
    }

    pub fn parse_text(datum: &RootDatum, s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad element `{s}` (expected w=[..] t=(..))"));
        let s = s.trim();
        let (wpart, tpart) = s.split_once("t=").ok_or_else(err)?;
        let wbody = wpart
            .trim()
            .strip_prefix("w=[")
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(err)?;
        let tbody = tpart
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(err)?;
        let n = datum.rank();
        let word: Vec<usize> = if wbody.trim().is_empty() {
            Vec::new()
        } else {
            wbody
                .split(',')
                .map(|x| x.trim().parse::<usize>().ok().filter(|i| *i < n))
                .collect::<Option<_>>()
                .ok_or_else(err)?
        };
        let t: Vec<i64> = tbody
            .split(',')
            .map(|x| x.trim().parse::<i64>().ok())
            .collect::<Option<_>>()
            .ok_or_else(err)?;
        if t.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: t.len(),
            });
        }
        Ok(ExtAffineWeylElement {
            finite: FiniteWeyl::from_word(datum, &word),
            translation: t,
        })
    }

    pub fn to_json(&self, datum: &RootDatum) -> serde_json::Value {
        json!({
            "w": self.finite.reduced_word(datum),
            "t": self.translation,
            "text": self.to_text(datum),
        })
    }
}

/// An affine real coroot `α̌_n`, enumerated as `Φ̌_f × ℤ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineCoroot {
    /// Classical part in simple-coroot coordinates.
    pub classical: Vec<i64>,
    pub n: i64,
}

impl AffineCoroot {
    pub fn new(classical: Vec<i64>, n: i64) -> Self {
        AffineCoroot { classical, n }
    }

    pub fn negate(&self) -> Self {
        AffineCoroot {
            classical: self.classical.iter().map(|x| -x).collect(),
            n: -self.n,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.n == 0
    }

    pub fn is_positive(&self) -> bool {
        self.n > 0 || (self.n == 0 && self.classical.iter().all(|x| *x >= 0))
    }

    pub fn positive_representative(&self) -> Self {
        if self.is_positive() {
            self.clone()
        } else {
            self.negate()
        }
    }

    /// The reflection `s_β̌ t^{nβ̌}`.
    pub fn reflection(&self, datum: &RootDatum) -> ExtAffineWeylElement {
        let bv = datum.coroot_to_coweight(&self.classical);
        ExtAffineWeylElement {
            finite: FiniteWeyl::reflection_of_coroot(datum, &self.classical),
            translation: bv.iter().map(|x| x * self.n).collect(),
        }
    }

    /// `⟨α̌_n, λ⟩ = ⟨λ, α̌⟩ + n (κ - κ_c)(α̌, α̌)/2`, as
    /// `(rational part, coefficient of the irrational unit)`.
    pub fn pair(&self, datum: &RootDatum, level: &Level, la: &[Q]) -> (Q, Q) {
        let base = datum.weight_coroot_pairing(la, &self.classical);
        let (r, x) = level.half_norm(datum.coroot_norm(&self.classical));
        (base + r * q(self.n), x * q(self.n))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "classical": self.classical, "n": self.n })
    }
}

impl fmt::Display for AffineCoroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.classical.iter().map(|x| x.to_string()).collect();
        write!(f, "({};{})", c.join(","), self.n)
    }
}

/// A weight with an optional component along the irrational unit:
/// `base + ξ^e · irr`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffWeight {
    pub base: Vec<Q>,
    pub irr: Vec<Q>,
}

impl AffWeight {
    pub fn rational(base: Vec<Q>) -> Self {
        let n = base.len();
        AffWeight {
            base,
            irr: vec![Q::zero(); n],
        }
    }

    pub fn is_rational(&self) -> bool {
        self.irr.iter().all(|x| x.is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "base": self.base.iter().map(fmt_q).collect::<Vec<_>>(),
            "irrational": self.irr.iter().map(fmt_q).collect::<Vec<_>>(),
        })
    }
}

/// Generator of the Coxeter system `(W, S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    /// `0..n` are the finite simple reflections; `n + k` is the affine
    /// reflection of simple factor `k`.
    pub id: usize,
    pub element: ExtAffineWeylElement,
}

/// The extended affine Weyl group of an adjoint root datum.
#[derive(Debug, Clone)]
pub struct AffineWeylGroup {
    datum: RootDatum,
    gens: Vec<Generator>,
    omega: Vec<ExtAffineWeylElement>,
    cap: usize,
}

impl AffineWeylGroup {
    pub fn new(datum: &RootDatum) -> Self {
        let n = datum.rank();
        let mut gens: Vec<Generator> = (0..n)
            .map(|i| Generator {
                id: i,
                element: ExtAffineWeylElement::finite(FiniteWeyl::simple(datum, i)),
            })
            .collect();
        for (k, f) in datum.factors().iter().enumerate() {
            let theta = AffineCoroot::new(f.theta_s_check.clone(), -1);
            gens.push(Generator {
                id: n + k,
                element: theta.reflection(datum),
            });
        }
        let mut g = AffineWeylGroup {
            datum: datum.clone(),
            gens,
            omega: Vec::new(),
            cap: DEFAULT_BALL_CAP,
        };
        g.omega = g.compute_omega();
        g
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, id: usize) -> &ExtAffineWeylElement {
        &self.gens[id].element
    }

    pub fn identity(&self) -> ExtAffineWeylElement {
        ExtAffineWeylElement::identity(self.rank())
    }

    fn check(&self, x: &ExtAffineWeylElement) -> Result<()> {
        if x.rank() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                got: x.rank(),
            });
        }
        Ok(())
    }

    pub fn multiply(
        &self,
        x: &ExtAffineWeylElement,
        y: &ExtAffineWeylElement,
    ) -> Result<ExtAffineWeylElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.mul(y))
    }

    pub fn inverse(&self, x: &ExtAffineWeylElement) -> Result<ExtAffineWeylElement> {
        self.check(x)?;
        Ok(x.inverse())
    }

    pub fn length(&self, x: &ExtAffineWeylElement) -> usize {
        let v = x.finite.inv_rho();
        self.datum
            .positive_roots()
            .iter()
            .map(|c| {
                let chi = i64::from(x.finite.sends_negative(c, &v));
                (linalg::dot(c, &x.translation) + chi).unsigned_abs() as usize
            })
            .sum()
    }

    /// Length as the number of positive affine coroots sent negative by
    /// `x⁻¹`; an independent route to the same number.
    pub fn inversion_count(&self, x: &ExtAffineWeylElement, n_bound: i64) -> usize {
        let xi = x.inverse();
        let mut count = 0;
        for d in self.datum.positive_coroots() {
            for sign in [1i64, -1] {
                let cl: Vec<i64> = d.iter().map(|v| v * sign).collect();
                for n in 0..=n_bound {
                    let a = AffineCoroot::new(cl.clone(), n);
                    if !a.is_positive() {
                        continue;
                    }
                    if !xi.act_coroot(&self.datum, &a).is_positive() {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    fn compute_omega(&self) -> Vec<ExtAffineWeylElement> {
        let n = self.rank();
        let mut reps: Vec<Vec<i64>> = vec![vec![0; n]];
        let mut queue = VecDeque::from([vec![0; n]]);
        while let Some(v) = queue.pop_front() {
            for j in 0..n {
                let mut u = v.clone();
                u[j] += 1;
                let new = reps.iter().all(|r| {
                    let diff: Vec<i64> = u.iter().zip(r).map(|(a, b)| a - b).collect();
                    !self.datum.is_in_coroot_lattice(&diff)
                });
                if new {
                    reps.push(u.clone());
                    queue.push_back(u);
                }
            }
        }
        let mut out: Vec<ExtAffineWeylElement> = reps
            .into_iter()
            .map(|r| self.descend(ExtAffineWeylElement::translation(r)))
            .collect();
        out.sort();
        out
    }

    /// Multiply on the right by descents until length zero.
    fn descend(&self, mut x: ExtAffineWeylElement) -> ExtAffineWeylElement {
        let mut len = self.length(&x);
        while len > 0 {
            let next = self
                .gens
                .iter()
                .map(|g| x.mul(&g.element))
                .find(|y| self.length(y) < len)
                .expect("positive length has a right descent");
            x = next;
            len -= 1;
        }
        x
    }

    /// The length-zero elements `Ω`.
    pub fn omega(&self) -> &[ExtAffineWeylElement] {
        &self.omega
    }

    /// The `Ω`-component of `x`, i.e. the unique length-zero element of `xW`.
    pub fn omega_part(&self, x: &ExtAffineWeylElement) -> ExtAffineWeylElement {
        self.descend(x.clone())
    }

    pub fn is_right_descent(&self, x: &ExtAffineWeylElement, id: usize) -> bool {
        self.length(&x.mul(self.generator(id))) < self.length(x)
    }

    pub fn is_left_descent(&self, x: &ExtAffineWeylElement, id: usize) -> bool {
        self.length(&self.generator(id).mul(x)) < self.length(x)
    }

    /// Lexicographically least reduced word `x = s_{g1} ⋯ s_{gk} ω`.
    pub fn reduced_word(&self, x: &ExtAffineWeylElement) -> (Vec<usize>, ExtAffineWeylElement) {
        let mut y = x.clone();
        let mut len = self.length(&y);
        let mut word = Vec::new();
        while len > 0 {
            let g = self
                .gens
                .iter()
                .find(|g| self.length(&g.element.mul(&y)) < len)
                .expect("left descent");
            word.push(g.id);
            y = g.element.mul(&y);
            len -= 1;
        }
        (word, y)
    }

    pub fn from_word(&self, word: &[usize], omega: &ExtAffineWeylElement) -> ExtAffineWeylElement {
        word.iter()
            .fold(self.identity(), |acc, &g| acc.mul(self.generator(g)))
            .mul(omega)
    }

    /// Bruhat order: same `Ω`-component and comparable `W`-parts. Decided
    /// by the lifting property on right descents.
    pub fn bruhat_leq(&self, x: &ExtAffineWeylElement, y: &ExtAffineWeylElement) -> bool {
        let mut x = x.clone();
        let mut y = y.clone();
        let mut lx = self.length(&x);
        let mut ly = self.length(&y);
        loop {
            if lx > ly {
                return false;
            }
            if ly == 0 {
                return x == y;
            }
            let g = self
                .gens
                .iter()
                .find(|g| self.length(&y.mul(&g.element)) < ly)
                .expect("right descent");
            let xs = x.mul(&g.element);
            let lxs = self.length(&xs);
            if lxs < lx {
                x = xs;
                lx = lxs;
            }
            y = y.mul(&g.element);
            ly -= 1;
        }
    }

    /// Bruhat order through the subword property on the canonical reduced
    /// word of `y`. Exponential in `ℓ(y)`.
    pub fn bruhat_leq_subword(&self, x: &ExtAffineWeylElement, y: &ExtAffineWeylElement) -> bool {
        self.subword_products(y).contains(x)
    }

    /// All products of subwords of the reduced word of `y`, times its `Ω` part.
    pub fn subword_products(&self, y: &ExtAffineWeylElement) -> HashSet<ExtAffineWeylElement> {
        let (word, omega) = self.reduced_word(y);
        let mut acc: HashSet<ExtAffineWeylElement> = HashSet::from([self.identity()]);
        for g in &word {
            let s = self.generator(*g);
            let next: Vec<_> = acc.iter().map(|z| z.mul(s)).collect();
            acc.extend(next);
        }
        acc.into_iter().map(|z| z.mul(&omega)).collect()
    }

    /// Minimal-length representative of `x W_f`.
    pub fn min_coset_rep_right(&self, x: &ExtAffineWeylElement) -> ExtAffineWeylElement {
        self.walk_coset(x, &self.finite_ids(), true, true)
    }

    /// Minimal-length representative of `W_f x`.
    pub fn min_coset_rep_left(&self, x: &ExtAffineWeylElement) -> ExtAffineWeylElement {
        self.walk_coset(x, &self.finite_ids(), false, true)
    }

    pub fn max_coset_rep_right(&self, x: &ExtAffineWeylElement) -> ExtAffineWeylElement {
        self.walk_coset(x, &self.finite_ids(), true, false)
    }

    pub fn max_coset_rep_left(&self, x: &ExtAffineWeylElement) -> ExtAffineWeylElement {
        self.walk_coset(x, &self.finite_ids(), false, false)
    }

    fn finite_ids(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    /// Extremal representative of `x W_J` (`right`) or `W_J x`, for a set of
    /// generator ids generating a finite group; `down` selects the minimum.
    pub fn walk_coset(
        &self,
        x: &ExtAffineWeylElement,
        ids: &[usize],
        right: bool,
        down: bool,
    ) -> ExtAffineWeylElement {
        let mut y = x.clone();
        let mut len = self.length(&y);
        loop {
            let step = ids.iter().find_map(|&i| {
                let s = self.generator(i);
                let z = if right { y.mul(s) } else { s.mul(&y) };
                let lz = self.length(&z);
                let better = if down { lz < len } else { lz > len };
                better.then_some((z, lz))
            });
            match step {
                Some((z, lz)) => {
                    y = z;
                    len = lz;
                }
                None => return y,
            }
        }
    }

    /// Whether `x` is minimal in its coset `x W_f`.
    pub fn is_in_wf_minimal(&self, x: &ExtAffineWeylElement) -> bool {
        (0..self.rank()).all(|i| !self.is_right_descent(x, i))
    }

    /// Coset order on `W̃/W_f`: compare minimal representatives.
    pub fn coset_leq(&self, x: &ExtAffineWeylElement, y: &ExtAffineWeylElement) -> bool {
        self.bruhat_leq(&self.min_coset_rep_right(x), &self.min_coset_rep_right(y))
    }

    /// All elements of length at most `bound`, sorted by length and then
    /// by value. Errors when the ball would exceed the cap.
    pub fn enumerate_ball(&self, bound: usize) -> Result<Vec<ExtAffineWeylElement>> {
        let mut seen: HashSet<ExtAffineWeylElement> = self.omega.iter().cloned().collect();
        let mut layers: Vec<Vec<ExtAffineWeylElement>> = vec![self.omega.clone()];
        for k in 0..bound {
            let mut next = Vec::new();
            for x in &layers[k] {
                for g in &self.gens {
                    let y = x.mul(&g.element);
                    if !seen.contains(&y) && self.length(&y) == k + 1 {
                        seen.insert(y.clone());
                        if seen.len() > self.cap {
                            return Err(Error::BallCap { cap: self.cap });
                        }
                        next.push(y);
                    }
                }
            }
            next.sort();
            layers.push(next);
        }
        Ok(layers.into_iter().flatten().collect())
    }

    /// `x · λ` for the dot action at level `κ`: `W_f` acts by
    /// `w(λ+ρ) - ρ` and translations act through `κ - κ_c`.
    pub fn dot_action(&self, x: &ExtAffineWeylElement, la: &AffWeight, level: &Level) -> AffWeight {
        // x = w t^μ: first translate, then apply w
        let shift = levels::basic_map(&self.datum, &linalg::qvec(&x.translation));
        let (r, i) = level.half_norm(1);
        let mut base: Vec<Q> = la
            .base
            .iter()
            .zip(&shift)
            .map(|(a, s)| *a + *s * r)
            .collect();
        let irr: Vec<Q> = la
            .irr
            .iter()
            .zip(&shift)
            .map(|(a, s)| *a + *s * i)
            .collect();
        let rho = self.datum.rho();
        for (b, p) in base.iter_mut().zip(&rho) {
            *b += *p;
        }
        let wm = linalg::to_q(&x.finite.weight_matrix(&self.datum));
        let mut base = linalg::qmat_vec(&wm, &base);
        for (b, p) in base.iter_mut().zip(&rho) {
            *b -= *p;
        }
        AffWeight {
            base,
            irr: linalg::qmat_vec(&wm, &irr),
        }
    }

    /// Memoized neighbor table for a ball: `table[k][g]` is the index of
    /// `ball[k] · s_g` when it lies in the ball.
    pub fn neighbor_table(&self, ball: &[ExtAffineWeylElement]) -> Vec<Vec<Option<usize>>> {
        let index: HashMap<&ExtAffineWeylElement, usize> =
            ball.iter().enumerate().map(|(k, x)| (x, k)).collect();
        ball.iter()
            .map(|x| {
                self.gens
                    .iter()
                    .map(|g| index.get(&x.mul(&g.element)).copied())
                    .collect()
            })
            .collect()
    }
}

/// Translation part of `x` in simple-coroot coordinates, when in `Q̌`.
pub fn translation_in_coroot_lattice(
    datum: &RootDatum,
    x: &ExtAffineWeylElement,
) -> Option<Vec<i64>> {
    linalg::integral(&datum.coweight_to_coroot_coords(&linalg::qvec(&x.translation)))
}

pub fn q_vec_to_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanType;

    fn group(t: CartanType) -> AffineWeylGroup {
        AffineWeylGroup::new(&RootDatum::build(t))
    }

    /// Word length by breadth-first search over `S`, from `Ω`.
    fn bfs_lengths(g: &AffineWeylGroup, bound: usize) -> HashMap<ExtAffineWeylElement, usize> {
        let mut dist: HashMap<ExtAffineWeylElement, usize> =
            g.omega().iter().map(|o| (o.clone(), 0)).collect();
        let mut frontier: Vec<ExtAffineWeylElement> = g.omega().to_vec();
        for k in 1..=bound {
            let mut next = Vec::new();
            for x in &frontier {
                for s in g.generators() {
                    let y = x.mul(&s.element);
                    if !dist.contains_key(&y) {
                        dist.insert(y.clone(), k);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    #[test]
    fn translations_compose() {
        let g = group(CartanType::A(2));
        let a = ExtAffineWeylElement::translation(vec![1, -2]);
        let b = ExtAffineWeylElement::translation(vec![3, 1]);
        assert_eq!(a.mul(&b), ExtAffineWeylElement::translation(vec![4, -1]));
        for s in g.generators() {
            assert!(s.element.mul(&s.element).is_identity());
        }
    }

    #[test]
    fn affine_a1_reflection_is_involution() {
        let d = RootDatum::build(CartanType::A(1));
        let x = AffineCoroot::new(vec![1], -1).reflection(&d);
        assert!(x.mul(&x).is_identity());
        assert_eq!(x.translation, vec![-2]);
    }

    #[test]
    fn small_lengths() {
        let g = group(CartanType::A(1));
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.length(&ExtAffineWeylElement::translation(vec![2])), 2);
        for t in [CartanType::B(3), CartanType::G2, CartanType::A(3)] {
            let g = group(t);
            let d = g.datum();
            let w0 = enumerate_finite_weyl(d, 100_000)
                .unwrap()
                .into_iter()
                .max_by_key(|w| w.length(d))
                .unwrap();
            assert_eq!(
                g.length(&ExtAffineWeylElement::finite(w0)),
                d.num_positive_roots()
            );
        }
    }

    #[test]
    fn generators_have_length_one_and_omega_length_zero() {
        for t in [
            CartanType::A(2),
            CartanType::B(2),
            CartanType::G2,
            CartanType::D(4),
        ] {
            let g = group(t);
            for s in g.generators() {
                assert_eq!(g.length(&s.element), 1, "{t}");
            }
            assert_eq!(g.omega().len() as i64, g.datum().fundamental_group_order());
            for o in g.omega() {
                assert_eq!(g.length(o), 0);
            }
        }
    }

    #[test]
    fn closed_form_length_matches_bfs() {
        for t in [
            CartanType::A(1),
            CartanType::A(2),
            CartanType::B(2),
            CartanType::G2,
        ] {
            let g = group(t);
            let bfs = bfs_lengths(&g, 6);
            for (x, l) in &bfs {
                assert_eq!(g.length(x), *l, "{t} {}", x.to_text(g.datum()));
            }
        }
    }

    #[test]
    fn inversions_match_length() {
        let g = group(CartanType::B(2));
        for x in g.enumerate_ball(5).unwrap() {
            assert_eq!(g.inversion_count(&x, 12), g.length(&x));
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = group(CartanType::A(1));
        let s1 = g.generator(0).clone();
        let s0 = g.generator(1).clone();
        assert!(g.bruhat_leq(&s1, &s0.mul(&s1)));
        assert!(!g.bruhat_leq(&s0.mul(&s1), &s1));
        let ball = g.enumerate_ball(5).unwrap();
        let e = g.identity();
        for x in &ball {
            if g.omega_part(x) == e {
                assert!(g.bruhat_leq(&e, x));
            }
        }
    }

    #[test]
    fn bruhat_matches_subword() {
        let g = group(CartanType::A(2));
        let ball = g.enumerate_ball(5).unwrap();
        for y in &ball {
            let down = g.subword_products(y);
            for x in &ball {
                assert_eq!(g.bruhat_leq(x, y), down.contains(x));
            }
        }
    }

    #[test]
    fn different_omega_components_incomparable() {
        let g = group(CartanType::A(2));
        let om = g.omega();
        assert_eq!(om.len(), 3);
        assert!(!g.bruhat_leq(&om[0], &om[1]));
        assert!(!g.bruhat_leq(&om[1], &om[0]));
    }

    #[test]
    fn coset_reps() {
        let g = group(CartanType::A(1));
        let t = ExtAffineWeylElement::translation(vec![2]);
        let m = g.min_coset_rep_right(&t);
        assert_eq!(g.length(&m), 1);
        assert_eq!(g.min_coset_rep_right(&m), m);
        let wf = ExtAffineWeylElement::finite(FiniteWeyl::simple(g.datum(), 0));
        assert!(g.min_coset_rep_right(&wf).is_identity());
        assert!(g.is_in_wf_minimal(&m));
        assert!(!g.is_in_wf_minimal(&t));
    }

    #[test]
    fn ball_sizes_agree_with_length_filter() {
        for (t, bound) in [(CartanType::A(1), 3), (CartanType::A(2), 5)] {
            let g = group(t);
            let ball = g.enumerate_ball(bound).unwrap();
            let set: HashSet<_> = ball.iter().cloned().collect();
            assert_eq!(set.len(), ball.len());
            // a box of translations times W_f contains the ball
            let wf = enumerate_finite_weyl(g.datum(), 1000).unwrap();
            let r = bound as i64 + 1;
            let mut count = 0;
            let n = g.rank();
            let mut coords = vec![-r; n];
            loop {
                for w in &wf {
                    let x = ExtAffineWeylElement::new(w.clone(), coords.clone());
                    if g.length(&x) <= bound {
                        count += 1;
                        assert!(set.contains(&x));
                    }
                }
                let mut k = 0;
                while k < n {
                    coords[k] += 1;
                    if coords[k] <= r {
                        break;
                    }
                    coords[k] = -r;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
            assert_eq!(count, ball.len(), "{t}");
        }
    }

    #[test]
    fn ball_zero_is_omega() {
        let g = group(CartanType::A(1));
        let b = g.enumerate_ball(0).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.contains(&g.identity()));
    }

    #[test]
    fn ball_cap_errors() {
        let g = group(CartanType::A(2)).with_cap(10);
        assert_eq!(g.enumerate_ball(6), Err(Error::BallCap { cap: 10 }));
    }

    #[test]
    fn dot_action_basics() {
        let g = group(CartanType::B(2));
        let d = g.datum().clone();
        let level = Level::from_offset(3, 7);
        let minus_rho = AffWeight::rational(d.rho().iter().map(|x| -*x).collect());
        for i in 0..2 {
            assert_eq!(g.dot_action(g.generator(i), &minus_rho, &level), minus_rho);
        }
        let la = AffWeight::rational(vec![Q::new(1, 3), q(-2)]);
        assert_eq!(g.dot_action(&g.identity(), &la, &level), la);
    }

    #[test]
    fn affine_reflection_formula() {
        // s_α̌ · λ = λ - ⟨α̌, λ + ρ⟩ α_cl
        for t in [CartanType::A(1), CartanType::B(2)] {
            let g = group(t);
            let d = g.datum().clone();
            for level in [Level::from_offset(-2, 5), Level::from_offset(7, 3)] {
                for dv in d.positive_coroots() {
                    for n in -3..=3 {
                        let a = AffineCoroot::new(dv.clone(), n);
                        let x = a.reflection(&d);
                        let la: Vec<Q> =
                            (0..d.rank()).map(|i| Q::new(i as i64 * 3 - 2, 5)).collect();
                        let lr: Vec<Q> = la.iter().zip(d.rho()).map(|(a, b)| *a + b).collect();
                        let (c, _) = a.pair(&d, &level, &lr);
                        let root = d.root_to_weight(&d.root_of_coroot(dv).unwrap());
                        let expect: Vec<Q> =
                            la.iter().zip(&root).map(|(l, r)| *l - c * q(*r)).collect();
                        assert_eq!(
                            g.dot_action(&x, &AffWeight::rational(la.clone()), &level)
                                .base,
                            expect
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn element_text_round_trip() {
        let g = group(CartanType::A(2));
        for x in g.enumerate_ball(4).unwrap() {
            let s = x.to_text(g.datum());
            assert_eq!(ExtAffineWeylElement::parse_text(g.datum(), &s).unwrap(), x);
        }
        assert!(ExtAffineWeylElement::parse_text(g.datum(), "w=[5] t=(0,0)").is_err());
        assert!(ExtAffineWeylElement::parse_text(g.datum(), "w=[] t=(0)").is_err());
    }

    #[test]
    fn multiply_checks_rank() {
        let g = group(CartanType::A(2));
        let bad = ExtAffineWeylElement::identity(3);
        assert!(g.multiply(&g.identity(), &bad).is_err());
    }

    #[test]
    fn conjugating_reflections() {
        let g = group(CartanType::G2);
        let d = g.datum().clone();
        let a = AffineCoroot::new(d.positive_coroots()[3].clone(), -2);
        for x in g.enumerate_ball(3).unwrap() {
            let lhs = x.mul(&a.reflection(&d)).mul(&x.inverse());
            let rhs = x.act_coroot(&d, &a).reflection(&d);
            assert_eq!(lhs, rhs);
        }
    }
}
