//! ADE Dynkin quivers, the diagram involution and Coxeter-transformation
//! machinery.
//!
//! Vertices are labelled `1..n`.  Type A is the path `1 - 2 - … - n`; type D
//! has the tail `1 - 2 - … - (n-2)` with fork tips `n-1` and `n` attached to
//! `n-2`; type E has the chain `1 - 3 - 4 - … - n` with vertex `2` attached
//! to vertex `4`.

use crate::error::Error;
use crate::linalg::IntMatrix;
use crate::Result;
use serde::Deserialize;

/// The three simply laced series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    D,
    E,
}

impl std::fmt::Display for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Series::A => write!(f, "A"),
            Series::D => write!(f, "D"),
            Series::E => write!(f, "E"),
        }
    }
}

/// An orientation of an ADE Dynkin tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinQuiver {
    pub series: Series,
    pub rank: usize,
    /// Directed arrows `(source, target)`, one per tree edge.
    pub arrows: Vec<(usize, usize)>,
}

/// Inline JSON description of a quiver: `{"series": "A", "rank": 5, "arrows": [[1,2],...]}`.
/// Omitted `arrows` selects the default orientation.
#[derive(Debug, Deserialize)]
pub struct QuiverConfig {
    pub series: String,
    pub rank: usize,
    #[serde(default)]
    pub arrows: Option<Vec<(usize, usize)>>,
}

/// Undirected edge set of the Dynkin tree for `(series, rank)`.
fn tree_edges(series: Series, rank: usize) -> Result<Vec<(usize, usize)>> {
    let bad = |msg: &str| Err(Error::NonDynkinShape(msg.to_string()));
    match series {
        Series::A => {
            if rank < 1 {
                return bad("type A needs rank >= 1");
            }
            Ok((1..rank).map(|i| (i, i + 1)).collect())
        }
        Series::D => {
            if rank < 4 {
                return bad("type D needs rank >= 4");
            }
            let mut e: Vec<_> = (1..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank - 1));
            e.push((rank - 2, rank));
            Ok(e)
        }
        Series::E => {
            if !(6..=8).contains(&rank) {
                return bad("type E needs rank in {6,7,8}");
            }
            let mut e = vec![(1, 3), (2, 4)];
            for i in 3..rank {
                e.push((i, i + 1));
            }
            Ok(e)
        }
    }
}

/// Default (paper) orientation: type A linear `1→2→…→n`, type D along the
/// tail with both fork arrows leaving the branch vertex, type E as in the
/// paper's `E_6` example (`1→3→4→5→6`, `2→4`) extended along the chain.
pub fn default_orientation(series: Series, rank: usize) -> Result<Vec<(usize, usize)>> {
    let edges = tree_edges(series, rank)?;
    // tree_edges already lists every edge as (closer to vertex 1, further),
    // except the E-branch edge which we orient 2→4 as in the paper.
    Ok(edges)
}

/// Validate and construct a Dynkin quiver from an explicit orientation.
pub fn build_dynkin(series: Series, rank: usize, orientation: &[(usize, usize)]) -> Result<DynkinQuiver> {
    let edges = tree_edges(series, rank)?;
    let norm = |(a, b): (usize, usize)| if a <= b { (a, b) } else { (b, a) };
    let mut seen = std::collections::HashSet::new();
    for &(s, t) in orientation {
        if s == t || s < 1 || t < 1 || s > rank || t > rank {
            return Err(Error::NonDynkinShape(format!("arrow {s}→{t} out of range")));
        }
        if !seen.insert(norm((s, t))) {
            return Err(Error::DuplicateEdge(s, t));
        }
        if !edges.contains(&norm((s, t))) {
            return Err(Error::NonDynkinShape(format!(
                "arrow {s}→{t} is not an edge of {series}{rank}"
            )));
        }
    }
    if seen.len() != edges.len() {
        return Err(Error::NonDynkinShape(format!(
            "orientation covers {} of {} tree edges",
            seen.len(),
            edges.len()
        )));
    }
    Ok(DynkinQuiver {
        series,
        rank,
        arrows: orientation.to_vec(),
    })
}

/// Build a quiver from the JSON config schema.
pub fn from_config(cfg: &QuiverConfig) -> Result<DynkinQuiver> {
    let series = match cfg.series.as_str() {
        "A" | "a" => Series::A,
        "D" | "d" => Series::D,
        "E" | "e" => Series::E,
        other => return Err(Error::Config(format!("unknown series {other:?}"))),
    };
    let arrows = match &cfg.arrows {
        Some(a) => a.clone(),
        None => default_orientation(series, cfg.rank)?,
    };
    build_dynkin(series, cfg.rank, &arrows)
}

/// Parse a short quiver name such as `A5`, `D4` or `E6` (default orientation).
pub fn from_short_name(name: &str) -> Result<DynkinQuiver> {
    let mut chars = name.chars();
    let series = match chars.next() {
        Some('A') | Some('a') => Series::A,
        Some('D') | Some('d') => Series::D,
        Some('E') | Some('e') => Series::E,
        _ => return Err(Error::Config(format!("cannot parse quiver name {name:?}"))),
    };
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Config(format!("cannot parse rank in {name:?}")))?;
    let arrows = default_orientation(series, rank)?;
    build_dynkin(series, rank, &arrows)
}

impl DynkinQuiver {
    /// Coxeter number of the underlying root system.
    pub fn coxeter_number(&self) -> usize {
        match (self.series, self.rank) {
            (Series::A, n) => n + 1,
            (Series::D, n) => 2 * n - 2,
            (Series::E, 6) => 12,
            (Series::E, 7) => 18,
            (Series::E, 8) => 30,
            _ => unreachable!("validated at construction"),
        }
    }

    /// Neighbours of `v` in the underlying tree.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(s, t) in &self.arrows {
            if s == v {
                out.push(t);
            } else if t == v {
                out.push(s);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn has_arrow(&self, s: usize, t: usize) -> bool {
        self.arrows.contains(&(s, t))
    }

    /// True when this is the standard linear orientation `1→2→…→n` of type A.
    pub fn is_standard_type_a(&self) -> bool {
        self.series == Series::A && (1..self.rank).all(|i| self.has_arrow(i, i + 1))
    }
}

/// The diagram involution `φ`, as a vertex map with `φ∘φ = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    /// `map[v-1]` is `φ(v)` for vertices `1..=n`.
    map: Vec<usize>,
}

impl Involution {
    pub fn identity(rank: usize) -> Self {
        Involution {
            map: (1..=rank).collect(),
        }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

/// The type-determined involution: `i ↦ n+1−i` for `A_n`, the fork-tip swap
/// for `D_odd`, the long-arm swap for `E_6`, and the identity otherwise.
///
/// For the types with a nontrivial involution the orientation must admit the
/// shift exponents `N(i)`; otherwise `OrientationNotPhiCompatible` is raised.
pub fn involution(q: &DynkinQuiver) -> Result<Involution> {
    let n = q.rank;
    let phi = match q.series {
        Series::A => Involution {
            map: (1..=n).map(|i| n + 1 - i).collect(),
        },
        Series::D => {
            if n % 2 == 1 {
                // swap the two fork tips
                let mut map: Vec<usize> = (1..=n).collect();
                map[n - 2] = n;
                map[n - 1] = n - 1;
                Involution { map }
            } else {
                Involution::identity(n)
            }
        }
        Series::E => {
            if n == 6 {
                // 1↔6, 3↔5, fix 2 and 4
                Involution {
                    map: vec![6, 2, 5, 4, 3, 1],
                }
            } else {
                Involution::identity(n)
            }
        }
    };
    debug_assert!((1..=n).all(|v| phi.apply(phi.apply(v)) == v));
    if !phi.is_identity() {
        // the shift exponents must exist for this orientation
        let cox = CoxeterData::new(q);
        for i in 1..=n {
            if cox.shift_exponent(q, &phi, i).is_err() {
                return Err(Error::OrientationNotPhiCompatible);
            }
        }
    }
    Ok(phi)
}

/// Cartan and Coxeter matrices of `KQ`, acting on dimension vectors.
#[derive(Debug, Clone)]
pub struct CoxeterData {
    /// `cartan[i][j] = #` directed paths `i → j` (0-indexed).
    pub cartan: IntMatrix,
    /// Coxeter transformation `Φ = −Cᵀ·C⁻¹`.
    pub coxeter: IntMatrix,
    /// `Φ⁻¹`, used by the inverse Auslander–Reiten step.
    pub coxeter_inv: IntMatrix,
    /// `proj_roots[i]` is the dimension vector of `P_{i+1}` (the i-th column
    /// of the Cartan matrix).
    pub proj_roots: Vec<Vec<i64>>,
}

impl CoxeterData {
    pub fn new(q: &DynkinQuiver) -> Self {
        let n = q.rank;
        // reachability: paths i→j along arrows; at most one path in a tree
        let mut c = IntMatrix::zero(n, n);
        for i in 1..=n {
            // BFS from i along arrows
            let mut reach = vec![false; n + 1];
            reach[i] = true;
            let mut stack = vec![i];
            while let Some(v) = stack.pop() {
                for &(s, t) in &q.arrows {
                    if s == v && !reach[t] {
                        reach[t] = true;
                        stack.push(t);
                    }
                }
            }
            for j in 1..=n {
                if reach[j] {
                    c.set(i - 1, j - 1, 1);
                }
            }
        }
        let c_inv = c.inverse_unimodular();
        let coxeter = c.transpose().mul(&c_inv).neg();
        let coxeter_inv = coxeter.inverse_unimodular();
        let proj_roots = (0..n).map(|i| c.column(i)).collect();
        CoxeterData {
            cartan: c,
            coxeter,
            coxeter_inv,
            proj_roots,
        }
    }

    /// One inverse-AR step on a (positive root, shift) pair.
    fn inverse_ar_step(&self, r: &[i64], s: i64) -> Result<(Vec<i64>, i64)> {
        let r2 = self.coxeter_inv.matvec(r);
        if r2.iter().all(|&x| x >= 0) && r2.iter().any(|&x| x > 0) {
            Ok((r2, s))
        } else if r2.iter().all(|&x| x <= 0) && r2.iter().any(|&x| x < 0) {
            Ok((r2.iter().map(|&x| -x).collect(), s + 1))
        } else {
            Err(Error::ConventionFailure(format!(
                "mixed-sign root {r2:?} in inverse-AR iteration"
            )))
        }
    }

    /// Least `N ≥ 1` with `τ^{−N} P_{φ(i)} = P_i[1]`.
    pub fn shift_exponent(&self, q: &DynkinQuiver, phi: &Involution, i: usize) -> Result<usize> {
        let target: &Vec<i64> = &self.proj_roots[i - 1];
        let mut r = self.proj_roots[phi.apply(i) - 1].clone();
        let mut s: i64 = 0;
        let limit = 2 * q.coxeter_number();
        for step in 1..=limit {
            let (r2, s2) = self.inverse_ar_step(&r, s)?;
            r = r2;
            s = s2;
            if s == 1 && &r == target {
                return Ok(step);
            }
            if s > 1 {
                break;
            }
        }
        Err(Error::ConventionFailure(format!(
            "no N within {limit} steps for vertex {i}"
        )))
    }

    /// Iterate the inverse-AR step `steps` times from `(dim P_i, 0)`.
    pub fn iterate_from_projective(&self, i: usize, steps: usize) -> Result<(Vec<i64>, i64)> {
        let mut r = self.proj_roots[i - 1].clone();
        let mut s = 0i64;
        for _ in 0..steps {
            let (r2, s2) = self.inverse_ar_step(&r, s)?;
            r = r2;
            s = s2;
        }
        Ok((r, s))
    }
}

/// `N(i)` for every vertex, via the inverse-AR iteration.
pub fn compute_shift_exponent(q: &DynkinQuiver, i: usize) -> Result<usize> {
    let phi = involution(q)?;
    let cox = CoxeterData::new(q);
    cox.shift_exponent(q, &phi, i)
}
