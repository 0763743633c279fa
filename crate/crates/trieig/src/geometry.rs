//! Triangle normalization and region classification.
//!
//! Every triangle is similar to one with vertices (0,0), (1,0), (a,b) whose
//! unit base is the shortest side. The remaining sides have lengths
//! `M = sqrt(a^2 + b^2)` and `N = sqrt((a-1)^2 + b^2)` with `1 <= M <= N`,
//! so `a <= 1/2` after reflecting if necessary. All bound computations work
//! in this frame; eigenvalues scale as `1/scale^2` back to the input.

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative collinearity threshold: twice-area below this times the squared
/// longest side is rejected.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// A triangle in the canonical frame, with cached derived quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Triangle {
    /// Abscissa of the apex. At most 1/2; nonpositive for obtuse triangles
    /// whose apex foot falls outside the base.
    pub a: f64,
    /// Ordinate of the apex, strictly positive.
    pub b: f64,
    /// Middle side length, `m^2 = a^2 + b^2`.
    pub m: f64,
    /// Longest side length, `n^2 = (a-1)^2 + b^2`.
    pub n: f64,
    /// Perimeter `1 + m + n`.
    pub perimeter: f64,
    /// Area `b / 2`.
    pub area: f64,
    /// Similarity factor mapping the canonical triangle back to the input.
    pub scale: f64,
}

impl Triangle {
    /// Normalizes an arbitrary non-degenerate triangle given by its vertices.
    ///
    /// The output depends only on the multiset of side lengths, so any
    /// relabeling or rigid motion of the input produces the same record.
    pub fn normalize(v1: [f64; 2], v2: [f64; 2], v3: [f64; 2]) -> Result<Self> {
        let d = |p: [f64; 2], q: [f64; 2]| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
        let mut sides = [d(v2, v3), d(v1, v3), d(v1, v2)];
        sides.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let [s, m_raw, n_raw] = sides;

        let twice_area = ((v2[0] - v1[0]) * (v3[1] - v1[1])
            - (v3[0] - v1[0]) * (v2[1] - v1[1]))
            .abs();
        if !(twice_area >= DEGENERACY_TOL * n_raw * n_raw) {
            return Err(Error::DegenerateTriangle(format!(
                "twice-area {twice_area:e} below {DEGENERACY_TOL:e} x (longest side)^2"
            )));
        }

        Ok(Self::from_sides_unchecked(m_raw / s, n_raw / s, s))
    }

    /// Builds the canonical triangle with side lengths `(1, m, n)`.
    ///
    /// Requires `1 <= m <= n < m + 1` (unit side shortest, strict triangle
    /// inequality). Inputs are sorted first, so `(m, n)` may be swapped.
    pub fn from_mn(m: f64, n: f64) -> Result<Self> {
        let (m, n) = if m <= n { (m, n) } else { (n, m) };
        if !(m >= 1.0) {
            return Err(Error::DegenerateTriangle(format!(
                "side m = {m} shorter than the unit base"
            )));
        }
        if !(n < m + 1.0 - DEGENERACY_TOL) {
            return Err(Error::DegenerateTriangle(format!(
                "sides (1, {m}, {n}) violate the triangle inequality"
            )));
        }
        Ok(Self::from_sides_unchecked(m, n, 1.0))
    }

    /// Canonical triangle from side lengths without the `m >= 1` check.
    ///
    /// Used by the certification grids, which evaluate the deficiency on
    /// frames where the unit side need not be shortest. Requires only the
    /// strict triangle inequality for sides `(1, m, n)`.
    pub(crate) fn from_mn_raw(m: f64, n: f64) -> Result<Self> {
        let hi = m.max(n).max(1.0);
        if !(1.0 + m + n - 2.0 * hi > 0.0) {
            return Err(Error::DegenerateTriangle(format!(
                "sides (1, {m}, {n}) violate the triangle inequality"
            )));
        }
        Ok(Self::from_sides_unchecked(m, n, 1.0))
    }

    fn from_sides_unchecked(m: f64, n: f64, scale: f64) -> Self {
        let a = (m * m - n * n + 1.0) / 2.0;
        let b = (m * m - a * a).sqrt();
        Self {
            a,
            b,
            m,
            n,
            perimeter: 1.0 + m + n,
            area: b / 2.0,
            scale,
        }
    }

    /// Vertices of the canonical frame.
    pub fn vertices(&self) -> [[f64; 2]; 3] {
        [[0.0, 0.0], [1.0, 0.0], [self.a, self.b]]
    }

    /// Apex angle between the sides of lengths `m` and `n`, opposite the base.
    pub fn apex_angle(&self) -> f64 {
        let c = (self.m * self.m + self.n * self.n - 1.0) / (2.0 * self.m * self.n);
        c.clamp(-1.0, 1.0).acos()
    }
}

/// The four classes the proof splits triangles into, keyed by `(m, n)`.
///
/// Regions are closed and overlap on shared edges and at `m = 15`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RegionCase {
    /// `n >= 2` and `m <= 15`.
    C3,
    /// `1 <= n <= 2` and `(n+1)/2 <= m <= 2`.
    C4,
    /// `1 <= n <= 2` and `1 <= m <= (n+1)/2`.
    C5,
    /// `m >= 15` (tall triangles, sector bound).
    C6,
}

impl RegionCase {
    /// All cases in a fixed order.
    pub const ALL: [RegionCase; 4] = [RegionCase::C3, RegionCase::C4, RegionCase::C5, RegionCase::C6];

    /// Whether the closed region contains `(m, n)`.
    pub fn contains(self, m: f64, n: f64) -> bool {
        match self {
            RegionCase::C3 => n >= 2.0 && m <= 15.0,
            RegionCase::C4 => (1.0..=2.0).contains(&n) && m >= (n + 1.0) / 2.0 && m <= 2.0,
            RegionCase::C5 => (1.0..=2.0).contains(&n) && (1.0..=(n + 1.0) / 2.0).contains(&m),
            RegionCase::C6 => m >= 15.0,
        }
    }

    /// Human-readable description of the region bounds.
    pub fn bounds_description(self) -> &'static str {
        match self {
            RegionCase::C3 => "N >= 2 and M <= 15",
            RegionCase::C4 => "1 <= N <= 2 and (N+1)/2 <= M <= 2",
            RegionCase::C5 => "1 <= N <= 2 and 1 <= M <= (N+1)/2",
            RegionCase::C6 => "M >= 15",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RegionCase::C3 => "C3",
            RegionCase::C4 => "C4",
            RegionCase::C5 => "C5",
            RegionCase::C6 => "C6",
        }
    }
}

impl std::fmt::Display for RegionCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RegionCase {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "C3" => Ok(RegionCase::C3),
            "C4" => Ok(RegionCase::C4),
            "C5" => Ok(RegionCase::C5),
            "C6" => Ok(RegionCase::C6),
            other => Err(format!("unknown region case `{other}`")),
        }
    }
}

/// Returns every case whose closed region contains the triangle's `(m, n)`.
///
/// The list is never empty: the four closed regions cover all valid pairs.
pub fn classify(t: &Triangle) -> Vec<RegionCase> {
    RegionCase::ALL
        .iter()
        .copied()
        .filter(|c| c.contains(t.m, t.n))
        .collect()
}

/// Rotated region coordinates `U = (M+N)/2 - 1`, `V = (N-M)/2`.
///
/// The equilateral triangle maps to the origin; `V = 0` is the isosceles
/// line `M = N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UvPoint {
    pub u: f64,
    pub v: f64,
}

impl UvPoint {
    /// Inverse map back to side lengths `(m, n)`.
    pub fn to_mn(self) -> (f64, f64) {
        (self.u + 1.0 - self.v, self.u + 1.0 + self.v)
    }
}

/// Maps side lengths to the rotated `(U, V)` coordinates.
pub fn to_uv(m: f64, n: f64) -> UvPoint {
    UvPoint {
        u: (m + n) / 2.0 - 1.0,
        v: (n - m) / 2.0,
    }
}

/// The similarity-invariant two-sided estimate `pi^2 L^2 / (16 A^2) <= lambda
/// <= pi^2 L^2 / (9 A^2)` evaluated in the canonical frame.
///
/// Callers working in the input frame rescale both values by `1/scale^2`.
pub fn isoperimetric_bounds(t: &Triangle) -> (f64, f64) {
    let base = std::f64::consts::PI.powi(2) * t.perimeter * t.perimeter / (t.area * t.area);
    (base / 16.0, base / 9.0)
}
