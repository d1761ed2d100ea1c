//! Root data for simple types A–G and their finite products.
//!
//! Positive roots are produced by closing the simple roots under simple
//! reflections, with each root carrying its coroot along. Constants such as
//! the dual Coxeter number are read off the trace form of the adjoint
//! representation rather than transcribed from tables.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, fmt_q, q, IMat, QMat, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let bad = |why: &str| {
            Err(Error::InvalidType(
                format!("{letter}{rank}"),
                why.to_string(),
            ))
        };
        match letter.to_ascii_uppercase() {
            'A' if rank >= 1 => Ok(Self::A(rank)),
            'B' if rank >= 2 => Ok(Self::B(rank)),
            'C' if rank >= 2 => Ok(Self::C(rank)),
            'D' if rank >= 3 => Ok(Self::D(rank)),
            'E' if (6..=8).contains(&rank) => Ok(Self::E(rank)),
            'F' if rank == 4 => Ok(Self::F4),
            'G' if rank == 2 => Ok(Self::G2),
            'A' => bad("type A needs rank >= 1"),
            'B' | 'C' => bad("types B and C need rank >= 2"),
            'D' => bad("type D needs rank >= 3"),
            'E' => bad("type E exists in ranks 6, 7, 8"),
            'F' => bad("type F exists in rank 4 only"),
            'G' => bad("type G exists in rank 2 only"),
            _ => bad("unknown Cartan letter"),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Self::A(_) => 'A',
            Self::B(_) => 'B',
            Self::C(_) => 'C',
            Self::D(_) => 'D',
            Self::E(_) => 'E',
            Self::F4 => 'F',
            Self::G2 => 'G',
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Self::A(n) | Self::B(n) | Self::C(n) | Self::D(n) | Self::E(n) => n,
            Self::F4 => 4,
            Self::G2 => 2,
        }
    }

    /// Type of the Langlands dual root system.
    pub fn dual(self) -> Self {
        match self {
            Self::B(n) => Self::C(n),
            Self::C(n) => Self::B(n),
            t => t,
        }
    }

    /// Bourbaki Cartan matrix with `a_ij = ⟨α_j, α̌_i⟩`.
    pub fn cartan_matrix(self) -> IMat {
        let n = self.rank();
        let mut a = linalg::identity(n);
        for row in a.iter_mut() {
            for x in row.iter_mut() {
                *x *= 2;
            }
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self {
            Self::A(_) | Self::B(_) | Self::C(_) => (0..n - 1).for_each(|i| link(i, i + 1)),
            Self::D(_) => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            Self::E(_) => {
                link(0, 2);
                link(1, 3);
                (2..n - 1).for_each(|i| link(i, i + 1));
            }
            Self::F4 => (0..3).for_each(|i| link(i, i + 1)),
            Self::G2 => link(0, 1),
        }
        match self {
            // α_n short
            Self::B(_) => a[n - 1][n - 2] = -2,
            // α_n long
            Self::C(_) => a[n - 2][n - 1] = -2,
            Self::F4 => a[2][1] = -2,
            Self::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty Cartan type".into()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::Parse(format!("bad Cartan type `{s}`")))?;
        CartanType::new(letter, rank)
    }
}

/// Constants attached to one simple factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorConstants {
    pub cartan_type: CartanType,
    /// Index range of the factor's simple roots.
    pub range: std::ops::Range<usize>,
    pub dual_coxeter_number: i64,
    pub coxeter_number: i64,
    pub lacing_number: i64,
    /// Dominant short coroot, simple-coroot coordinates (the `n_i`).
    pub theta_s_check: Vec<i64>,
    /// Dominant long coroot, simple-coroot coordinates (the `m_i`).
    pub theta_l_check: Vec<i64>,
    /// Dominant short root, simple-root coordinates.
    pub theta_s: Vec<i64>,
    /// Dominant long root, simple-root coordinates.
    pub theta_l: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormName {
    Basic,
    Killing,
    Critical,
    General,
}

/// A symmetric bilinear form on the coweight space, Gram matrix in the
/// fundamental-coweight basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub name: FormName,
    pub gram: QMat,
}

impl BilinearForm {
    pub fn eval(&self, x: &[Q], y: &[Q]) -> Q {
        linalg::qdot(x, &linalg::qmat_vec(&self.gram, y))
    }

    pub fn scaled(&self, c: Q, name: FormName) -> Self {
        BilinearForm {
            name,
            gram: self
                .gram
                .iter()
                .map(|r| r.iter().map(|x| *x * c).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    types: Vec<CartanType>,
    /// True when this is the Langlands dual of the Bourbaki datum for `types`.
    dualized: bool,
    cartan: IMat,
    cartan_inv: QMat,
    pos_roots: Vec<Vec<i64>>,
    pos_coroots: Vec<Vec<i64>>,
    coroot_index: HashMap<Vec<i64>, usize>,
    root_index: HashMap<Vec<i64>, usize>,
    /// `κ_b(α̌_i, α̌_i) / 2` for each simple coroot.
    simple_norms: Vec<i64>,
    factors: Vec<FactorConstants>,
}

impl RootDatum {
    pub fn build(ty: CartanType) -> Self {
        Self::product(&[ty])
    }

    /// Validating constructor from a type letter and rank.
    pub fn build_root_datum(letter: char, rank: usize) -> Result<Self> {
        Ok(Self::build(CartanType::new(letter, rank)?))
    }

    /// Product of simple factors, as a block-diagonal datum.
    pub fn product(types: &[CartanType]) -> Self {
        let n: usize = types.iter().map(|t| t.rank()).sum();
        let mut cartan = vec![vec![0i64; n]; n];
        let mut off = 0;
        for t in types {
            let a = t.cartan_matrix();
            for i in 0..t.rank() {
                for j in 0..t.rank() {
                    cartan[off + i][off + j] = a[i][j];
                }
            }
            off += t.rank();
        }
        Self::from_cartan(types.to_vec(), false, cartan)
    }

    fn from_cartan(types: Vec<CartanType>, dualized: bool, cartan: IMat) -> Self {
        let n = cartan.len();
        let cartan_inv =
            linalg::inverse(&linalg::to_q(&cartan)).expect("Cartan matrix is invertible");
        let (pos_roots, pos_coroots) = close_positive_roots(&cartan);
        let coroot_index = pos_coroots
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();
        let root_index = pos_roots
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();
        let simple_norms = symmetrize(&cartan);
        let mut datum = RootDatum {
            types,
            dualized,
            cartan,
            cartan_inv,
            pos_roots,
            pos_coroots,
            coroot_index,
            root_index,
            simple_norms,
            factors: Vec::new(),
        };
        let mut off = 0;
        let mut factors = Vec::new();
        for t in datum.types.clone() {
            let range = off..off + t.rank();
            factors.push(datum.factor_constants(t, range));
            off += t.rank();
        }
        debug_assert_eq!(off, n);
        datum.factors = factors;
        datum
    }

    fn factor_constants(&self, t: CartanType, range: std::ops::Range<usize>) -> FactorConstants {
        let in_factor = |v: &[i64]| {
            v.iter()
                .enumerate()
                .any(|(i, x)| *x != 0 && range.contains(&i))
        };
        let roots: Vec<usize> = (0..self.pos_roots.len())
            .filter(|&k| in_factor(&self.pos_roots[k]))
            .collect();
        let min_norm = range.clone().map(|i| self.simple_norms[i]).min().unwrap();
        let max_norm = range.clone().map(|i| self.simple_norms[i]).max().unwrap();
        let lacing = max_norm / min_norm;
        // dual Coxeter number from Killing = 2 h^∨ κ_b on any coroot
        let i0 = range.start;
        let killing = self.killing_on_simple(i0);
        let basic = q(2 * self.simple_norms[i0]);
        let hv = killing / (q(2) * basic);
        debug_assert!(hv.is_integer());
        let coxeter = roots
            .iter()
            .map(|&k| self.pos_roots[k].iter().sum::<i64>())
            .max()
            .unwrap()
            + 1;
        let dominant_coroots: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&k| {
                let mu = self.coroot_to_coweight(&self.pos_coroots[k]);
                mu.iter().all(|x| *x >= 0)
            })
            .collect();
        let dominant_roots: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&k| {
                let la = self.root_to_weight(&self.pos_roots[k]);
                la.iter().all(|x| *x >= 0)
            })
            .collect();
        let pick = |list: &[usize], want_short_coroot: bool, coroot: bool| -> usize {
            // long roots pair with short coroots
            let norms: Vec<i64> = list
                .iter()
                .map(|&k| self.coroot_norm(&self.pos_coroots[k]))
                .collect();
            let target = if want_short_coroot {
                *norms.iter().min().unwrap()
            } else {
                *norms.iter().max().unwrap()
            };
            let _ = coroot;
            list[norms.iter().position(|x| *x == target).unwrap()]
        };
        let ts_check = pick(&dominant_coroots, true, true);
        let tl_check = pick(&dominant_coroots, false, true);
        // short root <-> long coroot
        let ts_root = pick(&dominant_roots, false, false);
        let tl_root = pick(&dominant_roots, true, false);
        FactorConstants {
            cartan_type: if self.dualized { t.dual() } else { t },
            range,
            dual_coxeter_number: hv.to_integer(),
            coxeter_number: coxeter,
            lacing_number: lacing,
            theta_s_check: self.pos_coroots[ts_check].clone(),
            theta_l_check: self.pos_coroots[tl_check].clone(),
            theta_s: self.pos_roots[ts_root].clone(),
            theta_l: self.pos_roots[tl_root].clone(),
        }
    }

    fn killing_on_simple(&self, i: usize) -> Q {
        // Killing(x, x) = Σ_{α ∈ Φ} ⟨α, x⟩²
        let s: i64 = self
            .pos_roots
            .iter()
            .map(|c| {
                let p: i64 = c
                    .iter()
                    .enumerate()
                    .map(|(k, ck)| ck * self.cartan[i][k])
                    .sum();
                p * p
            })
            .sum();
        q(2 * s)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn types(&self) -> Vec<CartanType> {
        self.factors.iter().map(|f| f.cartan_type).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn require_simple(&self) -> Result<&FactorConstants> {
        if self.is_simple() {
            Ok(&self.factors[0])
        } else {
            Err(Error::NotSimple(self.factors.len()))
        }
    }

    pub fn factors(&self) -> &[FactorConstants] {
        &self.factors
    }

    pub fn factor_of(&self, i: usize) -> usize {
        self.factors
            .iter()
            .position(|f| f.range.contains(&i))
            .unwrap()
    }

    pub fn label(&self) -> String {
        self.types()
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn cartan(&self) -> &IMat {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &QMat {
        &self.cartan_inv
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    /// Positive coroots in simple-coroot coordinates; entry `k` is the
    /// coroot of `positive_roots()[k]`.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.pos_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.pos_roots.len()
    }

    pub fn simple_norms(&self) -> &[i64] {
        &self.simple_norms
    }

    /// Index of a positive coroot, or `None`.
    pub fn coroot_position(&self, d: &[i64]) -> Option<usize> {
        self.coroot_index.get(d).copied()
    }

    pub fn root_position(&self, c: &[i64]) -> Option<usize> {
        self.root_index.get(c).copied()
    }

    /// Root attached to a (positive or negative) coroot.
    pub fn root_of_coroot(&self, d: &[i64]) -> Option<Vec<i64>> {
        if let Some(k) = self.coroot_position(d) {
            return Some(self.pos_roots[k].clone());
        }
        let neg: Vec<i64> = d.iter().map(|x| -x).collect();
        self.coroot_position(&neg)
            .map(|k| self.pos_roots[k].iter().map(|x| -x).collect())
    }

    pub fn coroot_of_root(&self, c: &[i64]) -> Option<Vec<i64>> {
        if let Some(k) = self.root_position(c) {
            return Some(self.pos_coroots[k].clone());
        }
        let neg: Vec<i64> = c.iter().map(|x| -x).collect();
        self.root_position(&neg)
            .map(|k| self.pos_coroots[k].iter().map(|x| -x).collect())
    }

    /// `κ_b(β̌, β̌) / 2` for a coroot in simple-coroot coordinates.
    pub fn coroot_norm(&self, d: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..n {
                s += d[i] * d[j] * self.simple_norms[j] * self.cartan[i][j];
            }
        }
        s / 2
    }

    /// Simple root `α_i` in weight coordinates (column `i` of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Vec<i64> {
        self.cartan.iter().map(|row| row[i]).collect()
    }

    /// Simple coroot `α̌_i` in coweight coordinates (row `i`).
    pub fn simple_coroot_coweight(&self, i: usize) -> Vec<i64> {
        self.cartan[i].clone()
    }

    pub fn root_to_weight(&self, c: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.cartan, c)
    }

    pub fn coroot_to_coweight(&self, d: &[i64]) -> Vec<i64> {
        linalg::vec_mat(d, &self.cartan)
    }

    /// Coweight (fundamental-coweight coordinates) to simple-coroot coordinates.
    pub fn coweight_to_coroot_coords(&self, mu: &[Q]) -> Vec<Q> {
        linalg::qvec_qmat(mu, &self.cartan_inv)
    }

    /// Weight (fundamental-weight coordinates) to simple-root coordinates.
    pub fn weight_to_root_coords(&self, la: &[Q]) -> Vec<Q> {
        linalg::qmat_vec(&self.cartan_inv, la)
    }

    pub fn is_in_coroot_lattice(&self, mu: &[i64]) -> bool {
        linalg::integral(&self.coweight_to_coroot_coords(&linalg::qvec(mu))).is_some()
    }

    pub fn is_in_root_lattice(&self, la: &[i64]) -> bool {
        linalg::integral(&self.weight_to_root_coords(&linalg::qvec(la))).is_some()
    }

    /// `⟨λ, μ̌⟩` for a weight and a coweight in fundamental coordinates.
    pub fn pairing(&self, la: &[Q], mu: &[Q]) -> Result<Q> {
        let n = self.rank();
        for v in [la.len(), mu.len()] {
            if v != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: v,
                });
            }
        }
        let mut s = Q::zero();
        for i in 0..n {
            for j in 0..n {
                s += la[i] * self.cartan_inv[j][i] * mu[j];
            }
        }
        Ok(s)
    }

    /// `⟨α, β̌⟩` for a root and coroot in simple coordinates.
    pub fn root_coroot_pairing(&self, c: &[i64], d: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for k in 0..n {
            for l in 0..n {
                s += c[k] * d[l] * self.cartan[l][k];
            }
        }
        s
    }

    /// `⟨α, μ̌⟩` for a root (simple coordinates) and an integer coweight.
    pub fn root_coweight_pairing(&self, c: &[i64], mu: &[i64]) -> i64 {
        linalg::dot(c, mu)
    }

    /// `⟨λ, β̌⟩` for a weight and a coroot (simple coordinates).
    pub fn weight_coroot_pairing(&self, la: &[Q], d: &[i64]) -> Q {
        la.iter()
            .zip(d)
            .fold(Q::zero(), |acc, (x, y)| acc + x * q(*y))
    }

    pub fn rho(&self) -> Vec<Q> {
        vec![Q::one(); self.rank()]
    }

    pub fn rho_check(&self) -> Vec<Q> {
        vec![Q::one(); self.rank()]
    }

    /// Positive coroot test for a coweight given in fundamental coordinates.
    pub fn is_positive_coroot_vector(&self, mu: &[i64]) -> bool {
        let d = self.coweight_to_coroot_coords(&linalg::qvec(mu));
        d.iter().all(|x| *x >= Q::zero()) && d.iter().any(|x| *x > Q::zero())
    }

    pub fn root_lattice_basis(&self) -> QMat {
        (0..self.rank())
            .map(|i| linalg::qvec(&self.simple_root_weight(i)))
            .collect()
    }

    pub fn coroot_lattice_basis(&self) -> QMat {
        (0..self.rank())
            .map(|i| linalg::qvec(&self.simple_coroot_coweight(i)))
            .collect()
    }

    pub fn weight_lattice_basis(&self) -> QMat {
        linalg::to_q(&linalg::identity(self.rank()))
    }

    pub fn coweight_lattice_basis(&self) -> QMat {
        linalg::to_q(&linalg::identity(self.rank()))
    }

    /// Basic form `κ_b` with `min κ_b(α̌_i, α̌_i) = 2` on every factor.
    pub fn basic_form(&self) -> BilinearForm {
        let n = self.rank();
        let g: QMat = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| q(self.simple_norms[j] * self.cartan[i][j]))
                    .collect()
            })
            .collect();
        BilinearForm {
            name: FormName::Basic,
            gram: congruence(&self.cartan_inv, &g),
        }
    }

    /// Trace form of the adjoint representation restricted to the torus.
    pub fn killing_form(&self) -> BilinearForm {
        let n = self.rank();
        let mut gram = vec![vec![Q::zero(); n]; n];
        // ⟨α, ω̌_i⟩ is the i-th simple-root coordinate of α
        for c in &self.pos_roots {
            for i in 0..n {
                for j in 0..n {
                    gram[i][j] += q(2 * c[i] * c[j]);
                }
            }
        }
        BilinearForm {
            name: FormName::Killing,
            gram,
        }
    }

    pub fn critical_form(&self) -> BilinearForm {
        self.killing_form()
            .scaled(Q::new(-1, 2), FormName::Critical)
    }

    /// The Langlands dual datum: roots and coroots exchanged.
    pub fn langlands_dual(&self) -> Self {
        Self::from_cartan(
            self.types.clone(),
            !self.dualized,
            linalg::transpose(&self.cartan),
        )
    }

    /// `Σ_{α̌ > 0} ht(α̌)`, which equals `2⟨ρ̌, ρ⟩`.
    pub fn sum_of_coroot_heights(&self) -> i64 {
        self.pos_coroots.iter().map(|d| d.iter().sum::<i64>()).sum()
    }

    /// Order of the fundamental group `Λ̌_{ad} / Q̌`.
    pub fn fundamental_group_order(&self) -> i64 {
        linalg::determinant(&self.cartan).abs()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let constants: Vec<serde_json::Value> = self
            .factors
            .iter()
            .map(|f| {
                serde_json::json!({
                    "type": f.cartan_type.to_string(),
                    "simple_indices": f.range.clone().collect::<Vec<_>>(),
                    "dual_coxeter_number": f.dual_coxeter_number,
                    "coxeter_number": f.coxeter_number,
                    "lacing_number": f.lacing_number,
                    "theta_s_check": f.theta_s_check,
                    "theta_l_check": f.theta_l_check,
                    "theta_s": f.theta_s,
                    "theta_l": f.theta_l,
                })
            })
            .collect();
        let rho: Vec<String> = self.rho().iter().map(fmt_q).collect();
        serde_json::json!({
            "type": self.label(),
            "rank": self.rank(),
            "cartan_matrix": self.cartan,
            "roots": self.pos_roots,
            "coroots": self.pos_coroots,
            "constants": {
                "factors": constants,
                "num_positive_roots": self.pos_roots.len(),
                "simple_coroot_norms": self.simple_norms,
                "rho": rho,
                "rho_check": rho,
                "fundamental_group_order": self.fundamental_group_order(),
            },
        })
    }
}

/// `P G P^T`.
fn congruence(p: &QMat, g: &QMat) -> QMat {
    let n = p.len();
    let mut out = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Q::zero();
            for k in 0..n {
                for l in 0..n {
                    s += p[i][k] * g[k][l] * p[j][l];
                }
            }
            out[i][j] = s;
        }
    }
    out
}

/// Positive roots and aligned coroots by closure under simple reflections.
fn close_positive_roots(a: &IMat) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = a.len();
    let unit = |i: usize| -> Vec<i64> { (0..n).map(|k| i64::from(k == i)).collect() };
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        seen.insert(unit(i));
        queue.push_back((unit(i), unit(i)));
    }
    while let Some((c, d)) = queue.pop_front() {
        for i in 0..n {
            if c == unit(i) {
                continue;
            }
            // s_i β = β - ⟨β, α̌_i⟩ α_i ; s_i β̌ = β̌ - ⟨α_i, β̌⟩ α̌_i
            let pb: i64 = (0..n).map(|k| c[k] * a[i][k]).sum();
            let pd: i64 = (0..n).map(|l| d[l] * a[l][i]).sum();
            let mut c2 = c.clone();
            c2[i] -= pb;
            let mut d2 = d.clone();
            d2[i] -= pd;
            if seen.insert(c2.clone()) {
                queue.push_back((c2, d2));
            }
        }
        pairs.push((c, d));
    }
    pairs.sort_by(|x, y| {
        let hx: i64 = x.0.iter().sum();
        let hy: i64 = y.0.iter().sum();
        hx.cmp(&hy).then_with(|| y.0.cmp(&x.0))
    });
    pairs.into_iter().unzip()
}

/// Half squared lengths of simple coroots under the basic form, normalized
/// so the short coroots of each component have value 1.
fn symmetrize(a: &IMat) -> Vec<i64> {
    let n = a.len();
    let mut b: Vec<Option<Q>> = vec![None; n];
    for start in 0..n {
        if b[start].is_some() {
            continue;
        }
        b[start] = Some(Q::one());
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j != i && a[i][j] != 0 && b[j].is_none() {
                    // b_j a_ij = b_i a_ji
                    b[j] = Some(b[i].unwrap() * q(a[j][i]) / q(a[i][j]));
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        let min = comp.iter().map(|&i| b[i].unwrap()).min().unwrap();
        for &i in &comp {
            b[i] = Some(b[i].unwrap() / min);
        }
    }
    b.into_iter()
        .map(|x| {
            let x = x.unwrap();
            debug_assert!(x.is_integer());
            x.to_integer()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(CartanType::A(n));
            if n >= 2 {
                out.push(CartanType::B(n));
                out.push(CartanType::C(n));
            }
            if n >= 3 {
                out.push(CartanType::D(n));
            }
        }
        for n in 6..=max_rank.min(8) {
            out.push(CartanType::E(n));
        }
        if max_rank >= 4 {
            out.push(CartanType::F4);
        }
        out.push(CartanType::G2);
        out
    }

    #[test]
    fn a1_constants() {
        let d = RootDatum::build(CartanType::A(1));
        let f = &d.factors()[0];
        assert_eq!(d.num_positive_roots(), 1);
        assert_eq!(f.dual_coxeter_number, 2);
        assert_eq!(f.lacing_number, 1);
        assert_eq!(f.theta_s_check, vec![1]);
        assert_eq!(f.theta_l_check, vec![1]);
    }

    #[test]
    fn g2_constants() {
        let d = RootDatum::build(CartanType::G2);
        let f = &d.factors()[0];
        assert_eq!(d.num_positive_roots(), 6);
        assert_eq!(f.lacing_number, 3);
        assert_eq!(f.dual_coxeter_number, 4);
        assert_eq!(f.coxeter_number, 6);
        // α_1 short in Bourbaki labeling
        assert_eq!(f.theta_l, vec![3, 2]);
        assert_eq!(f.theta_s, vec![2, 1]);
    }

    #[test]
    fn rank_zero_rejected() {
        assert!(RootDatum::build_root_datum('A', 0).is_err());
        assert!(RootDatum::build_root_datum('D', 2).is_err());
        assert!(RootDatum::build_root_datum('E', 5).is_err());
        assert!("Q3".parse::<CartanType>().is_err());
    }

    #[test]
    fn cartan_pairing_invariant() {
        for t in all_types_up_to(8) {
            let d = RootDatum::build(t);
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    let la = linalg::qvec(&d.simple_root_weight(i));
                    let mu = linalg::qvec(&d.simple_coroot_coweight(j));
                    assert_eq!(d.pairing(&la, &mu).unwrap(), q(d.cartan()[j][i]), "{t}");
                }
            }
        }
    }

    #[test]
    fn theta_coefficients_positive() {
        for t in all_types_up_to(8) {
            let d = RootDatum::build(t);
            let f = &d.factors()[0];
            assert!(f.theta_s_check.iter().all(|x| *x >= 1), "{t}");
            assert!(f.theta_l_check.iter().all(|x| *x >= 1), "{t}");
        }
    }

    #[test]
    fn root_count_matches_coxeter_number() {
        for t in all_types_up_to(8) {
            let d = RootDatum::build(t);
            let f = &d.factors()[0];
            assert_eq!(
                d.num_positive_roots() as i64 * 2,
                f.coxeter_number * t.rank() as i64,
                "{t}"
            );
            assert_eq!(d.positive_roots().len(), d.positive_coroots().len());
        }
    }

    #[test]
    fn critical_is_minus_hv_times_basic() {
        for t in all_types_up_to(8) {
            let d = RootDatum::build(t);
            let hv = d.factors()[0].dual_coxeter_number;
            let kc = d.critical_form();
            let kb = d.basic_form();
            assert_eq!(kc, kb.scaled(q(-hv), FormName::Critical), "{t}");
            // minimum coroot length two
            let min = (0..d.rank())
                .map(|i| 2 * d.simple_norms()[i])
                .min()
                .unwrap();
            assert_eq!(min, 2);
            for dv in d.positive_coroots() {
                let mu = linalg::qvec(&d.coroot_to_coweight(dv));
                assert_eq!(kc.eval(&mu, &mu) / kb.eval(&mu, &mu), q(-hv));
            }
        }
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        let d = RootDatum::build(CartanType::F4);
        for i in 0..4 {
            let mu = linalg::qvec(&d.simple_coroot_coweight(i));
            assert_eq!(d.pairing(&d.rho(), &mu).unwrap(), Q::one());
        }
    }

    #[test]
    fn highest_root_heights() {
        // ⟨θ_l, ρ̌⟩ = h - 1, ⟨ρ, θ̌_s⟩ = h^∨ - 1, and ⟨θ_s, ρ̌⟩ = h^∨ - 1 of the dual
        for t in all_types_up_to(8) {
            let d = RootDatum::build(t);
            let f = &d.factors()[0];
            let dual_h = RootDatum::build(t.dual()).factors()[0].dual_coxeter_number;
            let rho_check = d.rho_check();
            let pair = |c: &[i64]| {
                d.pairing(&linalg::qvec(&d.root_to_weight(c)), &rho_check)
                    .unwrap()
            };
            assert_eq!(pair(&f.theta_l), q(f.coxeter_number - 1), "{t}");
            assert_eq!(pair(&f.theta_s), q(dual_h - 1), "{t}");
            let cow = linalg::qvec(&d.coroot_to_coweight(&f.theta_s_check));
            assert_eq!(
                d.pairing(&d.rho(), &cow).unwrap(),
                q(f.dual_coxeter_number - 1),
                "{t}"
            );
        }
    }

    #[test]
    fn dual_transposes() {
        let b2 = RootDatum::build(CartanType::B(2));
        let c2 = RootDatum::build(CartanType::C(2));
        let dual = b2.langlands_dual();
        assert_eq!(dual.cartan(), c2.cartan());
        assert_eq!(dual.types(), vec![CartanType::C(2)]);
        let mut a = dual.positive_roots().to_vec();
        let mut b = b2.positive_coroots().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        let f4 = RootDatum::build(CartanType::F4);
        assert_eq!(f4.langlands_dual().langlands_dual(), f4);
        let a3 = RootDatum::build(CartanType::A(3));
        assert_eq!(a3.langlands_dual().cartan(), a3.cartan());
    }

    #[test]
    fn products_are_block_diagonal() {
        let d = RootDatum::product(&[CartanType::A(1), CartanType::G2]);
        assert_eq!(d.rank(), 3);
        assert_eq!(d.num_positive_roots(), 7);
        assert_eq!(d.factors()[1].lacing_number, 3);
        assert!(d.require_simple().is_err());
    }

    #[test]
    fn pairing_dimension_checked() {
        let d = RootDatum::build(CartanType::A(2));
        assert!(d.pairing(&[q(1)], &[q(1), q(0)]).is_err());
    }
}
