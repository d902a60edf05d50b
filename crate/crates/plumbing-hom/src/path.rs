//! Paths in a graded quiver and homogeneous linear combinations of them.
//!
//! Arrows inside a [`Path`] are stored in application order: `arrows[0]` is
//! applied first.  The paper writes compositions right-to-left, so display
//! reverses the stored order.

use crate::error::Error;
use crate::quiver::GradedQuiver;
use crate::{Coef, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A composable sequence of arrow ids with cached endpoints and degree.
/// The empty sequence is the idempotent `e_i` at `source == target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
    pub degree: i64,
}

impl Path {
    pub fn idempotent(vertex: usize) -> Self {
        Path {
            arrows: Vec::new(),
            source: vertex,
            target: vertex,
            degree: 0,
        }
    }

    /// Build a path from arrow ids in application order, validating
    /// composability against the quiver.
    pub fn from_arrows(quiver: &GradedQuiver, arrows: Vec<usize>, start: usize) -> Result<Self> {
        let mut at = start;
        let mut degree = 0;
        for &id in &arrows {
            let a = quiver
                .arrows
                .get(id)
                .ok_or_else(|| Error::Config(format!("unknown arrow id {id}")))?;
            if a.source != at {
                return Err(Error::NotComposable(format!(
                    "arrow {} starts at {} but path is at {}",
                    a.name, a.source, at
                )));
            }
            at = a.target;
            degree += a.degree;
        }
        Ok(Path {
            arrows,
            source: start,
            target: at,
            degree,
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ earlier`: `earlier` is applied first.
    pub fn compose(&self, earlier: &Path) -> Result<Path> {
        if earlier.target != self.source {
            return Err(Error::NotComposable(format!(
                "cannot compose: earlier path ends at {} but later starts at {}",
                earlier.target, self.source
            )));
        }
        let mut arrows = earlier.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Ok(Path {
            arrows,
            source: earlier.source,
            target: self.target,
            degree: self.degree + earlier.degree,
        })
    }

    /// Extend by one arrow applied after this path.
    pub fn extend(&self, quiver: &GradedQuiver, arrow_id: usize) -> Path {
        let a = &quiver.arrows[arrow_id];
        debug_assert_eq!(a.source, self.target);
        let mut arrows = self.arrows.clone();
        arrows.push(arrow_id);
        Path {
            arrows,
            source: self.source,
            target: a.target,
            degree: self.degree + a.degree,
        }
    }

    /// Render in the paper's right-to-left order, e.g. `u(2,3) u(1,2)`.
    pub fn display(&self, quiver: &GradedQuiver) -> String {
        if self.arrows.is_empty() {
            return format!("e({})", self.source);
        }
        self.arrows
            .iter()
            .rev()
            .map(|&id| quiver.arrows[id].name.clone())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A homogeneous rational linear combination of paths with common endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    pub source: usize,
    pub target: usize,
    pub degree: i64,
    pub terms: BTreeMap<Path, Coef>,
}

impl GradedElement {
    pub fn zero(source: usize, target: usize, degree: i64) -> Self {
        GradedElement {
            source,
            target,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(path: Path) -> Self {
        let mut terms = BTreeMap::new();
        let (source, target, degree) = (path.source, path.target, path.degree);
        terms.insert(path, Coef::from_integer(1.into()));
        GradedElement {
            source,
            target,
            degree,
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c * path`, checking homogeneity.
    pub fn add_term(&mut self, path: Path, c: Coef) -> Result<()> {
        if path.source != self.source || path.target != self.target || path.degree != self.degree {
            return Err(Error::NonHomogeneous(format!(
                "path {}→{} degree {} in element {}→{} degree {}",
                path.source, path.target, path.degree, self.source, self.target, self.degree
            )));
        }
        let entry = self.terms.entry(path).or_insert_with(Coef::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            // look up again to remove; borrow rules force the two-step dance
            let dead: Vec<Path> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
        Ok(())
    }

    pub fn scaled(&self, c: &Coef) -> Self {
        if c.is_zero() {
            return GradedElement::zero(self.source, self.target, self.degree);
        }
        GradedElement {
            source: self.source,
            target: self.target,
            degree: self.degree,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn add(&mut self, other: &GradedElement) -> Result<()> {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone())?;
        }
        Ok(())
    }

    pub fn display(&self, quiver: &GradedQuiver) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (p, c) in &self.terms {
            let body = p.display(quiver);
            if c == &Coef::from_integer(1.into()) {
                parts.push(body);
            } else if c == &Coef::from_integer((-1).into()) {
                parts.push(format!("-{body}"));
            } else {
                parts.push(format!("{c}·{body}"));
            }
        }
        parts.join(" + ")
    }
}
