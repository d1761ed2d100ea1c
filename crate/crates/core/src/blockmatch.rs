//! Blocks of `W̃` at the twist `λ = 0`: double cosets `W_λ \ W̃ / W_f`,
//! their minimal elements and stabilizers, and the matching of stabilizers
//! across level duality.
//!
//! `W̃` acts on `Λ̌` by letting `W_f` act through the `ρ̌`-shifted dot action
//! and `t^{λ̌}` act by translation by `-λ̌`, so that `x ↦ x·(-ρ̌)` identifies
//! `W̃/W_f` with `Λ̌`.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use serde_json::json;

use crate::affweyl::{
    enumerate_finite_weyl, AffWeight, AffineCoroot, AffineWeylGroup, ExtAffineWeylElement,
    FiniteWeyl, DEFAULT_BALL_CAP,
};
use crate::duality::DualityMap;
use crate::error::{Error, Result};
use crate::goodness;
use crate::intweyl::{self, IntegralWeylGroup};
use crate::levels::{Level, Sign};
use crate::linalg::{self, Q};
use crate::rootdata::RootDatum;

/// `x·(-ρ̌) = -w(λ̌) - ρ̌` for `x = w t^{λ̌}`, in fundamental-coweight
/// coordinates.
pub fn weight_of(x: &ExtAffineWeylElement) -> Vec<i64> {
    x.finite
        .act_coweight(&x.translation)
        .into_iter()
        .map(|v| -v - 1)
        .collect()
}

/// A translation whose coset `t W_f` has weight `nu`.
pub fn coset_of_weight(nu: &[i64]) -> ExtAffineWeylElement {
    ExtAffineWeylElement::translation(nu.iter().map(|v| -v - 1).collect())
}

/// Canonical label of the double coset `W_λ x W_f`. Two elements lie in the
/// same double coset iff their translation parts agree modulo `Q̌_κ` up to
/// `W_f`, so the label is the least reduced representative over the orbit.
fn double_coset_key(g: &IntegralWeylGroup, wf: &[FiniteWeyl], x: &ExtAffineWeylElement) -> Vec<Q> {
    let d = g.datum();
    let mult = &g.translation_lattice.multipliers;
    wf.iter()
        .map(|u| {
            let c = d.coweight_to_coroot_coords(&linalg::qvec(&u.act_coweight(&x.translation)));
            c.into_iter()
                .zip(mult)
                .map(|(v, m)| {
                    if *m == 0 {
                        v
                    } else {
                        let m = linalg::q(*m);
                        v - m * (v / m).floor()
                    }
                })
                .collect::<Vec<Q>>()
        })
        .min()
        .expect("W_f is nonempty")
}

#[derive(Debug, Clone)]
pub struct BlockDescriptor {
    /// The minimal element `y` of the double coset.
    pub minimal: ExtAffineWeylElement,
    pub length: usize,
    /// Elements of `W_λ y W_f` inside the ball, sorted by length.
    pub window: Vec<ExtAffineWeylElement>,
    /// Indices `i` into the simple reflections of `W_λ` with
    /// `y⁻¹ s_i y ∈ W_f`.
    pub stabilizer: Vec<usize>,
    /// `y·(-ρ̌)`.
    pub weight: Vec<i64>,
    /// `y` is the only element of minimal length and lies below every
    /// window element in the Bruhat order.
    pub unique_minimum: bool,
    /// `y⁻¹(α̌) > 0` for every simple coroot `α̌` of `W_λ`.
    pub positive: bool,
    /// The stabilizer subgroup `y W_f y⁻¹ ∩ W_λ` is generated by the simple
    /// reflections it contains.
    pub parabolic: bool,
}

impl BlockDescriptor {
    pub fn is_consistent(&self) -> bool {
        self.unique_minimum && self.positive && self.parabolic
    }

    pub fn to_json(&self, datum: &RootDatum) -> serde_json::Value {
        json!({
            "weight": self.weight,
            "y": self.minimal.to_text(datum),
            "length": self.length,
            "window_size": self.window.len(),
            "stabilizer": self.stabilizer,
            "unique_minimum": self.unique_minimum,
            "positive": self.positive,
            "parabolic": self.parabolic,
        })
    }
}

/// The subgroup generated by `gens`, which must be finite.
fn generated_group(gens: &[ExtAffineWeylElement], n: usize) -> HashSet<ExtAffineWeylElement> {
    let id = ExtAffineWeylElement::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = x.mul(s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// Shared state for block computations at one level.
#[derive(Debug, Clone)]
pub struct BlockContext {
    pub ambient: AffineWeylGroup,
    /// `W_λ = W_{g,-κ}`, the same subgroup as `W_{g,κ}`.
    pub group: IntegralWeylGroup,
    pub level: Level,
    finite: Vec<FiniteWeyl>,
}

impl BlockContext {
    pub fn new(datum: &RootDatum, level: &Level) -> Result<Self> {
        datum.require_simple()?;
        if level.is_critical() {
            return Err(Error::Critical);
        }
        let group = intweyl::integral_weyl_group(datum, &level.reflect())?;
        Ok(BlockContext {
            ambient: group.ambient.clone(),
            finite: enumerate_finite_weyl(datum, 100_000)?,
            group,
            level: *level,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.ambient = self.ambient.with_cap(cap);
        self
    }

    pub fn datum(&self) -> &RootDatum {
        self.ambient.datum()
    }

    pub fn key(&self, x: &ExtAffineWeylElement) -> Vec<Q> {
        double_coset_key(&self.group, &self.finite, x)
    }

    /// `{i : y⁻¹ s_i y ∈ W_f}`.
    pub fn stabilizer_of(&self, y: &ExtAffineWeylElement) -> Vec<usize> {
        let yi = y.inverse();
        self.group
            .simple_reflections
            .iter()
            .enumerate()
            .filter(|(_, s)| yi.mul(s).mul(y).translation.iter().all(|v| *v == 0))
            .map(|(i, _)| i)
            .collect()
    }

    fn is_parabolic(&self, y: &ExtAffineWeylElement, stab: &[usize]) -> bool {
        let n = self.datum().rank();
        let yi = y.inverse();
        let full: HashSet<ExtAffineWeylElement> = self
            .finite
            .iter()
            .map(|u| y.mul(&ExtAffineWeylElement::finite(u.clone())).mul(&yi))
            .filter(|z| self.group.contains_by_lattice(z))
            .collect();
        let gens: Vec<ExtAffineWeylElement> = stab
            .iter()
            .map(|&i| self.group.simple_reflections[i].clone())
            .collect();
        generated_group(&gens, n) == full
    }

    fn is_positive(&self, y: &ExtAffineWeylElement) -> bool {
        let yi = y.inverse();
        self.group
            .simple_coroots
            .iter()
            .all(|a| yi.act_coroot(self.datum(), a).is_positive())
    }

    /// Splits the ball of radius `bound` into double-coset windows.
    pub fn blocks(&self, bound: usize) -> Result<Vec<BlockDescriptor>> {
        let ball = self.ambient.enumerate_ball(bound)?;
        let mut windows: BTreeMap<Vec<Q>, Vec<ExtAffineWeylElement>> = BTreeMap::new();
        for x in ball {
            windows.entry(self.key(&x)).or_default().push(x);
        }
        let mut out: Vec<BlockDescriptor> = windows
            .into_values()
            .map(|window| self.describe(window))
            .collect();
        out.sort_by(|a, b| (a.length, &a.weight).cmp(&(b.length, &b.weight)));
        Ok(out)
    }

    /// The ball is closed under passing to shorter elements, so the
    /// minimum of a double coset meeting it always lies in the window.
    fn describe(&self, window: Vec<ExtAffineWeylElement>) -> BlockDescriptor {
        let lengths: Vec<usize> = window.iter().map(|x| self.ambient.length(x)).collect();
        let min_len = *lengths.iter().min().expect("windows are nonempty");
        let minima: Vec<&ExtAffineWeylElement> = window
            .iter()
            .zip(&lengths)
            .filter(|(_, l)| **l == min_len)
            .map(|(x, _)| x)
            .collect();
        let y = minima[0].clone();
        let unique_minimum =
            minima.len() == 1 && window.iter().all(|z| self.ambient.bruhat_leq(&y, z));
        let stabilizer = self.stabilizer_of(&y);
        BlockDescriptor {
            length: min_len,
            weight: weight_of(&y),
            unique_minimum,
            positive: self.is_positive(&y),
            parabolic: self.is_parabolic(&y, &stabilizer),
            stabilizer,
            minimal: y,
            window,
        }
    }
}

/// One descriptor per double coset `W_λ x W_f` meeting the ball of radius
/// `bound`, ordered by the length of the minimal element and then weight.
pub fn enumerate_blocks(
    datum: &RootDatum,
    level: &Level,
    bound: usize,
) -> Result<Vec<BlockDescriptor>> {
    BlockContext::new(datum, level)?.blocks(bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BlockMatch {
    pub block: BlockDescriptor,
    /// The Whittaker-side stabilizer transported to indices of the dual
    /// simple reflections.
    pub whittaker: Vec<usize>,
    /// Dual simple reflections fixing `y·(-ρ̌)` under the dual dot action.
    pub kac_moody: Vec<usize>,
    /// The weight is antidominant for the dual integral Weyl group.
    pub antidominant: bool,
    pub verdict: Verdict,
}

impl BlockMatch {
    pub fn to_json(&self, datum: &RootDatum) -> serde_json::Value {
        let mut v = self.block.to_json(datum);
        let m = v.as_object_mut().expect("block json is an object");
        m.insert("whittaker_stabilizer".into(), json!(self.whittaker));
        m.insert("kac_moody_stabilizer".into(), json!(self.kac_moody));
        m.insert("antidominant".into(), json!(self.antidominant));
        m.insert("verdict".into(), json!(self.verdict.as_str()));
        v
    }
}

#[derive(Debug, Clone)]
pub struct MatchReport {
    pub type_label: String,
    pub level: Level,
    pub dual_level: Level,
    pub bound: usize,
    pub blocks: Vec<BlockMatch>,
}

impl MatchReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.blocks.iter().filter(|b| b.verdict == v).count()
    }

    /// Every block is decided: the minimum of a double coset meeting the
    /// ball lies in the ball.
    pub fn verdict(&self) -> Verdict {
        if self.count(Verdict::Mismatch) > 0 {
            Verdict::Mismatch
        } else {
            Verdict::Match
        }
    }

    pub fn to_json(&self, datum: &RootDatum) -> serde_json::Value {
        json!({
            "type": self.type_label,
            "level": self.level.to_json(),
            "dual_level": self.dual_level.to_json(),
            "bound": self.bound,
            "blocks": self.blocks.iter().map(|b| b.to_json(datum)).collect::<Vec<_>>(),
            "summary": {
                "blocks": self.blocks.len(),
                "match": self.count(Verdict::Match),
                "mismatch": self.count(Verdict::Mismatch),
                "verdict": self.verdict().as_str(),
            },
        })
    }
}

/// Both sides of the level duality with the dual dot action.
#[derive(Debug, Clone)]
pub struct DualSide {
    pub blocks: BlockContext,
    pub map: DualityMap,
    pub dual_ambient: AffineWeylGroup,
}

impl DualSide {
    /// Requires a good negative level.
    pub fn new(datum: &RootDatum, level: &Level) -> Result<Self> {
        datum.require_simple()?;
        match level.sign() {
            Sign::Negative => {}
            Sign::Positive => {
                return Err(Error::NotNegative(format!(
                    "level {level} is positive; dualize first (its dual level is negative)"
                )))
            }
            Sign::Critical => return Err(Error::Critical),
        }
        if !goodness::is_good_table(level, datum)? {
            return Err(Error::NotGood(format!(
                "level {level} is not good for {}",
                datum.label()
            )));
        }
        let map = DualityMap::new(datum, level)?;
        Ok(DualSide {
            blocks: BlockContext::new(datum, level)?,
            dual_ambient: AffineWeylGroup::new(&map.dual_datum),
            map,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.blocks = self.blocks.with_cap(cap);
        self
    }

    pub fn dual_datum(&self) -> &RootDatum {
        &self.map.dual_datum
    }

    /// `s ⊙ ν` for the dual dot action at the dual level.
    pub fn dual_dot(&self, s: &ExtAffineWeylElement, nu: &[i64]) -> AffWeight {
        self.dual_ambient.dot_action(
            s,
            &AffWeight::rational(linalg::qvec(nu)),
            &self.map.dual_level,
        )
    }

    /// `⟨ν + ρ, a⟩` at the dual level for a dual affine coroot `a`.
    pub fn dual_pair(&self, a: &AffineCoroot, nu: &[i64]) -> (Q, Q) {
        let d = self.dual_datum();
        let shifted: Vec<Q> = linalg::qvec(nu)
            .iter()
            .zip(d.rho())
            .map(|(x, r)| *x + r)
            .collect();
        a.pair(d, &self.map.dual_level, &shifted)
    }

    pub fn is_antidominant(&self, nu: &[i64]) -> bool {
        self.map.dual_group.simple_coroots.iter().all(|a| {
            let (r, x) = self.dual_pair(a, nu);
            x.is_zero() && r <= Q::zero()
        })
    }

    pub fn kac_moody_stabilizer(&self, nu: &[i64]) -> Vec<usize> {
        let target = AffWeight::rational(linalg::qvec(nu));
        self.map
            .dual_group
            .simple_reflections
            .iter()
            .enumerate()
            .filter(|(_, s)| self.dual_dot(s, nu) == target)
            .map(|(j, _)| j)
            .collect()
    }

    /// Transports indices of `W_{g,κ}` simple reflections to indices of
    /// `W_{ǧ,κ̌}` simple reflections; `None` if some image is not simple.
    pub fn transport(&self, stab: &[usize]) -> Option<Vec<usize>> {
        let dual = &self.map.dual_group.simple_reflections;
        let mut out: Vec<usize> = stab
            .iter()
            .map(|&i| {
                let img = self.map.map(&self.map.group.simple_reflections[i]).ok()?;
                dual.iter().position(|s| *s == img)
            })
            .collect::<Option<_>>()?;
        out.sort_unstable();
        Some(out)
    }

    pub fn match_block(&self, block: BlockDescriptor) -> BlockMatch {
        let kac_moody = self.kac_moody_stabilizer(&block.weight);
        let antidominant = self.is_antidominant(&block.weight);
        let transported = self.transport(&block.stabilizer);
        let verdict = match &transported {
            Some(w) if *w == kac_moody && antidominant && block.is_consistent() => Verdict::Match,
            _ => Verdict::Mismatch,
        };
        BlockMatch {
            whittaker: transported.unwrap_or_default(),
            kac_moody,
            antidominant,
            verdict,
            block,
        }
    }

    pub fn report(&self, bound: usize) -> Result<MatchReport> {
        let blocks = self
            .blocks
            .blocks(bound)?
            .into_iter()
            .map(|b| self.match_block(b))
            .collect();
        Ok(MatchReport {
            type_label: self.blocks.datum().label(),
            level: self.blocks.level,
            dual_level: self.map.dual_level,
            bound,
            blocks,
        })
    }
}

/// Compares, block by block, the stabilizer `W_{g,-κ} ∩ y W_f y⁻¹` carried
/// across the duality with the dot-stabilizer of the antidominant weight
/// `y·(-ρ̌)` in `W_{ǧ,κ̌}`.
pub fn match_blocks(datum: &RootDatum, level: &Level, bound: usize) -> Result<MatchReport> {
    DualSide::new(datum, level)?.report(bound)
}

/// The three conditions compared in the proof of the Bruhat/dominance
/// compatibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruhatDominance {
    /// `x W_f ≤ s x W_f` in the Bruhat order on `W̃/W_f`.
    pub coset_bruhat: bool,
    /// `x·(-ρ̌) ≤ s·x·(-ρ̌)` in the affine dominance order.
    pub dominance: bool,
    /// `x⁻¹(a)` is positive or finite, `a` the positive affine coroot of
    /// `g` whose reflection is `s`.
    pub positive_or_finite: bool,
}

impl BruhatDominance {
    pub fn agree(&self) -> bool {
        self.coset_bruhat == self.dominance && self.dominance == self.positive_or_finite
    }
}

impl DualSide {
    /// The positive affine coroot of `g` whose reflection is `s`.
    pub fn reflection_coroot(&self, s: &ExtAffineWeylElement) -> Option<AffineCoroot> {
        let d = self.blocks.datum();
        let beta = d
            .positive_coroots()
            .iter()
            .find(|b| FiniteWeyl::reflection_of_coroot(d, b) == s.finite)?
            .clone();
        let bv = d.coroot_to_coweight(&beta);
        let k = bv.iter().position(|v| *v != 0)?;
        let n = s.translation[k] / bv[k];
        let a = AffineCoroot::new(beta, n);
        (a.reflection(d) == *s).then(|| a.positive_representative())
    }

    /// `s x` for the reflection of a dual affine coroot carried to `W̃`.
    pub fn transported_reflection(&self, gamma: &AffineCoroot) -> Result<ExtAffineWeylElement> {
        if !self.map.dual_group.is_integral(gamma) {
            return Err(Error::NotMember(format!(
                "{gamma} is not a coroot of the dual integral Weyl group"
            )));
        }
        self.map
            .inverse()?
            .map(&gamma.reflection(self.dual_datum()))
    }

    /// Evaluates the three conditions for `x` and the reflection of a
    /// positive dual affine coroot `gamma`.
    pub fn bruhat_dominance(
        &self,
        x: &ExtAffineWeylElement,
        gamma: &AffineCoroot,
    ) -> Result<BruhatDominance> {
        let gamma = gamma.positive_representative();
        let s = self.transported_reflection(&gamma)?;
        let g = &self.blocks.ambient;
        let coset_bruhat = g.coset_leq(x, &s.mul(x));

        // ŝ ⊙ ν - ν is a multiple of the root of ǧ attached to γ; the order
        // compares its sign along the positive affine root.
        let dd = self.dual_datum();
        let nu = weight_of(x);
        let moved = self.dual_dot(&gamma.reflection(dd), &nu);
        let diff: Vec<Q> = moved
            .base
            .iter()
            .zip(linalg::qvec(&nu))
            .map(|(a, b)| *a - b)
            .collect();
        let diff = dd.weight_to_root_coords(&diff);
        let root = dd
            .root_of_coroot(&gamma.classical)
            .ok_or_else(|| Error::Invalid(format!("{gamma} has no classical root")))?;
        let k = root
            .iter()
            .position(|v| *v != 0)
            .expect("roots are nonzero");
        let t = diff[k] / linalg::q(root[k]);
        let dominance = moved.is_rational() && t >= Q::zero();

        let a = self
            .reflection_coroot(&s)
            .ok_or_else(|| Error::Invalid("transported element is not a reflection".into()))?;
        let image = x.inverse().act_coroot(g.datum(), &a);
        let positive_or_finite = image.is_finite() || image.is_positive();
        Ok(BruhatDominance {
            coset_bruhat,
            dominance,
            positive_or_finite,
        })
    }

    /// Positive dual affine coroots in the dual integral Weyl group with
    /// `|n| ≤ n_bound`.
    pub fn dual_integral_coroots(&self, n_bound: i64) -> Vec<AffineCoroot> {
        let dd = self.dual_datum();
        let mut out = Vec::new();
        for b in dd.positive_coroots() {
            for sign in [1i64, -1] {
                let cl: Vec<i64> = b.iter().map(|v| v * sign).collect();
                for n in 0..=n_bound {
                    let a = AffineCoroot::new(cl.clone(), n);
                    if a.is_positive() && self.map.dual_group.is_integral(&a) {
                        out.push(a);
                    }
                }
            }
        }
        out
    }

    /// `weight_of(s x) = ŝ ⊙ weight_of(x)` for every dual simple reflection
    /// `ŝ` and every `x` in `elements`.
    pub fn intertwines(&self, elements: &[ExtAffineWeylElement]) -> Result<bool> {
        let back = self.map.inverse()?;
        for hat in &self.map.dual_group.simple_reflections {
            let s = back.map(hat)?;
            for x in elements {
                let lhs = AffWeight::rational(linalg::qvec(&weight_of(&s.mul(x))));
                if lhs != self.dual_dot(hat, &weight_of(x)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn bruhat_dominance_check(
    datum: &RootDatum,
    level: &Level,
    x: &ExtAffineWeylElement,
    gamma: &AffineCoroot,
) -> Result<BruhatDominance> {
    DualSide::new(datum, level)?.bruhat_dominance(x, gamma)
}

#[derive(Debug, Clone)]
pub struct ParahoricReport {
    pub subset: Vec<usize>,
    pub bound: usize,
    /// Elements of the ball satisfying the Whittaker-side conditions.
    pub whittaker: Vec<ExtAffineWeylElement>,
    /// Elements satisfying the Kac-Moody-side conditions.
    pub kac_moody: Vec<ExtAffineWeylElement>,
    /// Maximal elements of `W_𝓙 x W_f` with `x(Φ̌_f) ∩ Φ̌_𝓙 = ∅`.
    pub maximal: Vec<ExtAffineWeylElement>,
    /// Elements of the ball on which all conditions were decided. Every
    /// condition is a descent or coset test evaluated exactly, so this is
    /// the whole ball.
    pub core: usize,
    pub undecided: usize,
}

impl ParahoricReport {
    pub fn equal(&self) -> bool {
        self.whittaker == self.kac_moody && self.kac_moody == self.maximal
    }

    pub fn to_json(&self, datum: &RootDatum) -> serde_json::Value {
        let list =
            |v: &[ExtAffineWeylElement]| v.iter().map(|x| x.to_text(datum)).collect::<Vec<_>>();
        json!({
            "type": datum.label(),
            "subset": self.subset,
            "bound": self.bound,
            "whittaker": list(&self.whittaker),
            "kac_moody": list(&self.kac_moody),
            "maximal": list(&self.maximal),
            "core": self.core,
            "undecided": self.undecided,
            "equal": self.equal(),
        })
    }
}

struct Parahoric<'a> {
    g: &'a AffineWeylGroup,
    subset: &'a [usize],
}

impl Parahoric<'_> {
    fn shorter(&self, a: &ExtAffineWeylElement, b: &ExtAffineWeylElement) -> bool {
        self.g.length(a) < self.g.length(b)
    }

    fn descents(&self, x: &ExtAffineWeylElement) -> bool {
        let n = self.g.rank();
        self.subset
            .iter()
            .all(|&j| self.shorter(&self.g.generator(j).mul(x), x))
            && (0..n).all(|i| self.shorter(&x.mul(self.g.generator(i)), x))
    }

    /// `W_𝓙 a < W_𝓙 b` in the order on `W_𝓙 \ W̃`.
    fn left_coset_less(&self, a: &ExtAffineWeylElement, b: &ExtAffineWeylElement) -> bool {
        let ma = self.g.walk_coset(a, self.subset, false, true);
        let mb = self.g.walk_coset(b, self.subset, false, true);
        ma != mb && self.g.bruhat_leq(&ma, &mb)
    }

    fn whittaker(&self, x: &ExtAffineWeylElement) -> bool {
        self.descents(x)
            && (0..self.g.rank()).all(|i| self.left_coset_less(&x.mul(self.g.generator(i)), x))
    }

    fn kac_moody(&self, x: &ExtAffineWeylElement) -> bool {
        self.descents(x)
            && self.subset.iter().all(|&j| {
                let a = self.g.generator(j).mul(x);
                let ma = self.g.min_coset_rep_right(&a);
                let mx = self.g.min_coset_rep_right(x);
                ma != mx && self.g.bruhat_leq(&ma, &mx)
            })
    }

    /// No finite coroot is sent by `x` into the coroots of the Levi.
    fn avoids_levi(&self, x: &ExtAffineWeylElement) -> bool {
        let d = self.g.datum();
        d.positive_coroots().iter().all(|b| {
            let img = x.act_coroot(d, &AffineCoroot::new(b.clone(), 0));
            !(img.is_finite()
                && img
                    .classical
                    .iter()
                    .enumerate()
                    .all(|(k, v)| *v == 0 || self.subset.contains(&k)))
        })
    }

    fn maximal(&self, x: &ExtAffineWeylElement) -> bool {
        self.descents(x) && self.avoids_levi(x)
    }
}

/// Compares the three descriptions of the parahoric highest weights on the
/// ball of radius `bound`, for `subset` a set of finite simple indices.
pub fn parahoric_subset_check(
    datum: &RootDatum,
    subset: &[usize],
    bound: usize,
) -> Result<ParahoricReport> {
    parahoric_subset_check_capped(datum, subset, bound, DEFAULT_BALL_CAP)
}

pub fn parahoric_subset_check_capped(
    datum: &RootDatum,
    subset: &[usize],
    bound: usize,
    cap: usize,
) -> Result<ParahoricReport> {
    if let Some(&j) = subset.iter().find(|&&j| j >= datum.rank()) {
        return Err(Error::Invalid(format!(
            "index {j} is not a finite simple root"
        )));
    }
    let g = AffineWeylGroup::new(datum).with_cap(cap);
    let ball = g.enumerate_ball(bound)?;
    let p = Parahoric { g: &g, subset };
    let pick = |f: &dyn Fn(&ExtAffineWeylElement) -> bool| {
        ball.iter().filter(|x| f(x)).cloned().collect::<Vec<_>>()
    };
    Ok(ParahoricReport {
        subset: subset.to_vec(),
        bound,
        whittaker: pick(&|x| p.whittaker(x)),
        kac_moody: pick(&|x| p.kac_moody(x)),
        maximal: pick(&|x| p.maximal(x)),
        core: ball.len(),
        undecided: 0,
    })
}

/// `λ̌ ↦ -λ̌ - 2ρ̌`, in fundamental-coweight coordinates.
pub fn appendix_dual_weight(mu: &[i64]) -> Vec<i64> {
    mu.iter().map(|v| -v - 2).collect()
}

/// `2⟨ρ̌, ρ⟩`.
pub fn appendix_shift(datum: &RootDatum) -> i64 {
    let two_rho_check: Vec<Q> = datum
        .rho_check()
        .iter()
        .map(|v| *v * linalg::q(2))
        .collect();
    let v = datum
        .pairing(&datum.rho(), &two_rho_check)
        .expect("ρ and ρ̌ have the datum's rank");
    v.to_integer()
}
