//! Generalized partitions (Young frames with negative columns) and the
//! group data that selects which of them label corepresentations.

use crate::field::Poly;
use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i32>),
    #[error("conjugate partition needs non-negative parts: {0:?}")]
    NegativeParts(Vec<i32>),
    #[error("cannot parse partition '{0}'")]
    Parse(String),
    #[error("expected {expected} parts, got {got}")]
    Length { expected: usize, got: usize },
    #[error("invalid group: {0}")]
    Group(String),
}

/// λ = (λ₁ ≥ … ≥ λ_N), λ_i ∈ ℤ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenPartition {
    parts: Vec<i32>,
}

/// One signed cell of a frame: (row, column, sign, content = column − row).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
    pub sign: i32,
    pub content: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    /// |λ| = Σ λ_i.
    pub size: i64,
    /// c(λ) = Σ sgn(x) c(x).
    pub content: i64,
    /// n(λ) = Σ (i−1) λ_i.
    pub n: i64,
    /// n(λ′) and λ′, only for non-negative parts.
    pub n_conj: Option<i64>,
    pub conjugate: Option<Vec<i32>>,
}

impl GenPartition {
    pub fn new(parts: Vec<i32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(GenPartition { parts })
    }

    pub fn zero(n: usize) -> Self {
        GenPartition { parts: vec![0; n] }
    }

    /// (k^N).
    pub fn rectangle(n: usize, k: i32) -> Self {
        GenPartition { parts: vec![k; n] }
    }

    /// (1, 0, …, 0, −1).
    pub fn adjoint(n: usize) -> Self {
        let mut parts = vec![0; n];
        parts[0] = 1;
        parts[n - 1] -= 1;
        GenPartition { parts }
    }

    /// Parses "2,-1"; missing trailing parts are filled with zeros when that
    /// keeps the sequence decreasing.
    pub fn parse(s: &str, n: usize) -> Result<Self, PartitionError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts: Vec<i32> = t
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| x.trim().parse::<i32>().map_err(|_| PartitionError::Parse(s.to_string())))
            .collect::<Result<_, _>>()?;
        if parts.len() > n {
            return Err(PartitionError::Length { expected: n, got: parts.len() });
        }
        parts.resize(n, 0);
        GenPartition::new(parts)
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&x| x == 0)
    }

    /// Member of P_{++} (all parts ≥ 0).
    pub fn is_nonnegative(&self) -> bool {
        self.parts.last().is_none_or(|&x| x >= 0)
    }

    /// |λ|.
    pub fn size(&self) -> i64 {
        self.parts.iter().map(|&x| x as i64).sum()
    }

    /// Number of cells, counting negative columns.
    pub fn box_count(&self) -> i64 {
        self.parts.iter().map(|&x| x.unsigned_abs() as i64).sum()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i0, &l) in self.parts.iter().enumerate() {
            let i = i0 as i32 + 1;
            if l > 0 {
                for j in 1..=l {
                    out.push(Cell { row: i, col: j, sign: 1, content: j - i });
                }
            } else {
                for j in (l + 1)..=0 {
                    out.push(Cell { row: i, col: j, sign: -1, content: j - i });
                }
            }
        }
        out
    }

    pub fn stats(&self) -> Stats {
        let cells = self.cells();
        let content = cells.iter().map(|c| (c.sign * c.content) as i64).sum();
        let n = self.parts.iter().enumerate().map(|(i, &l)| i as i64 * l as i64).sum();
        let conjugate = self.conjugate().ok();
        let n_conj = conjugate.as_ref().map(|_| self.parts.iter().map(|&l| l as i64 * (l as i64 - 1) / 2).sum());
        Stats { size: self.size(), content, n, n_conj, conjugate }
    }

    /// λ′ (column lengths), for non-negative parts.
    pub fn conjugate(&self) -> Result<Vec<i32>, PartitionError> {
        if !self.is_nonnegative() {
            return Err(PartitionError::NegativeParts(self.parts.clone()));
        }
        let m = self.parts.first().copied().unwrap_or(0).max(0);
        Ok((1..=m).map(|j| self.parts.iter().filter(|&&l| l >= j).count() as i32).collect())
    }

    /// λ + (k^N).
    pub fn shift(&self, k: i32) -> Self {
        GenPartition { parts: self.parts.iter().map(|x| x + k).collect() }
    }

    fn col_len(&self, j: i32) -> i32 {
        self.parts.iter().filter(|&&l| l >= j).count() as i32
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Serialize for GenPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Gl,
    Sl,
    OOdd,
    OEven,
    SoOdd,
    SoEven,
    Sp,
}

impl Family {
    pub fn is_a_series(self) -> bool {
        matches!(self, Family::Gl | Family::Sl)
    }
}

/// A quantum group of type GL/SL/O/SO/Sp with its structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize) -> Result<Self, PartitionError> {
        let ok = match family {
            Family::Gl | Family::Sl => n >= 2,
            Family::OOdd | Family::SoOdd => n >= 3 && n % 2 == 1,
            Family::OEven | Family::SoEven | Family::Sp => n >= 3 && n % 2 == 0,
        };
        if ok {
            Ok(GroupSpec { family, n })
        } else {
            Err(PartitionError::Group(format!("{family:?} with N={n}")))
        }
    }

    pub fn gl(n: usize) -> Self {
        GroupSpec { family: Family::Gl, n }
    }

    pub fn sl(n: usize) -> Self {
        GroupSpec { family: Family::Sl, n }
    }

    /// CLI family name ("glq", "slq", "oq", "soq", "spq").
    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Gl => "glq",
            Family::Sl => "slq",
            Family::OOdd | Family::OEven => "oq",
            Family::SoOdd | Family::SoEven => "soq",
            Family::Sp => "spq",
        }
    }

    /// Builds from a CLI family name ("glq", "slq", "oq", "soq", "spq").
    pub fn from_name(name: &str, n: usize) -> Result<Self, PartitionError> {
        let odd = n % 2 == 1;
        let family = match name {
            "glq" => Family::Gl,
            "slq" => Family::Sl,
            "oq" if odd => Family::OOdd,
            "oq" => Family::OEven,
            "soq" if odd => Family::SoOdd,
            "soq" => Family::SoEven,
            "spq" => Family::Sp,
            _ => return Err(PartitionError::Group(name.to_string())),
        };
        Self::new(family, n)
    }

    /// ε = +1 (orthogonal, and A series by convention) or −1 (symplectic).
    pub fn epsilon(&self) -> i32 {
        if self.family == Family::Sp {
            -1
        } else {
            1
        }
    }

    /// d_i = q^{N+1−2i}, i = 1..N (A series).
    pub fn d(&self) -> Vec<Poly> {
        (1..=self.n as i32).map(|i| Poly::var_pow(0, self.n as i32 + 1 - 2 * i)).collect()
    }

    /// 𝔰 = tr D.
    pub fn s_trace(&self) -> Poly {
        self.d().iter().fold(Poly::zero(), |a, b| a.add(b))
    }

    /// 𝔯: q^N for the A series, εq^{N−ε} otherwise.
    pub fn r_const(&self) -> Poly {
        if self.family.is_a_series() {
            Poly::var_pow(0, self.n as i32)
        } else {
            let e = self.epsilon();
            Poly::var_pow(0, self.n as i32 - e).scale(&BigInt::from(e))
        }
    }

    /// Membership in P(𝒜).
    pub fn admits(&self, l: &GenPartition) -> bool {
        if l.len() != self.n {
            return false;
        }
        let nn = self.n as i32;
        match self.family {
            Family::Gl => true,
            Family::Sl => l.is_nonnegative() && l.parts()[self.n - 1] == 0,
            Family::OOdd | Family::OEven => l.is_nonnegative() && l.col_len(1) + l.col_len(2) <= nn,
            Family::SoOdd | Family::SoEven | Family::Sp => l.is_nonnegative() && l.col_len(1) <= nn / 2,
        }
    }

    /// Members of P(𝒜) inside the window, in lexicographically decreasing order.
    pub fn enumerate(&self, w: &Window) -> Vec<GenPartition> {
        let (lo, hi) = w.part_range(self);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.n);
        rec(self.n, lo, hi, &mut cur, &mut out);
        out.into_iter()
            .map(|p| GenPartition { parts: p })
            .filter(|l| w.max_boxes.is_none_or(|b| l.box_count() <= b as i64))
            .filter(|l| self.admits(l))
            .collect()
    }
}

fn rec(n: usize, lo: i32, hi: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    let top = cur.last().copied().unwrap_or(hi);
    for v in (lo..=top).rev() {
        cur.push(v);
        rec(n, lo, hi, cur, out);
        cur.pop();
    }
}

/// Enumeration bounds: total cell count and/or part magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Window {
    pub max_boxes: Option<u32>,
    pub max_abs_part: Option<i32>,
}

impl Window {
    pub fn boxes(b: u32) -> Self {
        Window { max_boxes: Some(b), max_abs_part: None }
    }

    pub fn parts(p: i32) -> Self {
        Window { max_boxes: None, max_abs_part: Some(p) }
    }

    fn part_range(&self, g: &GroupSpec) -> (i32, i32) {
        let b = match (self.max_boxes, self.max_abs_part) {
            (Some(b), Some(p)) => (b as i32).min(p),
            (Some(b), None) => b as i32,
            (None, Some(p)) => p,
            (None, None) => panic!("unbounded window"),
        };
        let lo = if g.family == Family::Gl { -b } else { 0 };
        (lo, b)
    }
}
