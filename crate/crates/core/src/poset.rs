//! Finite posets viewed as categories: between two elements there is one
//! morphism when they are comparable and none otherwise. Determination of
//! a morphism x -> y by an object or a class of objects is decided both
//! through the order-theoretic criterion and by exhausting the raw
//! definition; the two must agree.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct FinitePoset {
    elements: Vec<String>,
    le: Vec<bool>, // n*n, le[a*n+b] == true iff a <= b
}

impl FinitePoset {
    /// Builds a poset from covering/less-equal pairs; the reflexive and
    /// transitive closure is taken, then antisymmetry is validated.
    pub fn new(elements: Vec<String>, pairs: &[(String, String)]) -> Result<FinitePoset> {
        let n = elements.len();
        let mut seen = std::collections::HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if seen.insert(e.clone(), i).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate element {e:?}")));
            }
        }
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (a, b) in pairs {
            let ia = *seen
                .get(a)
                .ok_or_else(|| Error::InvalidPoset(format!("unknown element {a:?}")))?;
            let ib = *seen
                .get(b)
                .ok_or_else(|| Error::InvalidPoset(format!("unknown element {b:?}")))?;
            le[ia * n + ib] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if le[i * n + j] && le[j * n + i] {
                    return Err(Error::InvalidPoset(format!(
                        "antisymmetry fails between {:?} and {:?}",
                        elements[i], elements[j]
                    )));
                }
            }
        }
        Ok(FinitePoset { elements, le })
    }

    /// The chain 0 < 1 < ... < n-1.
    pub fn chain(n: usize) -> FinitePoset {
        let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<(String, String)> =
            (1..n).map(|i| ((i - 1).to_string(), i.to_string())).collect();
        FinitePoset::new(elements, &pairs).expect("a chain is a poset")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.elements.len() + b]
    }

    /// The candidate set {c : c not <= x, c <= y}.
    pub fn determinator_candidates(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        if !self.le(x, y) {
            return Err(Error::Unsupported(format!(
                "no morphism: {:?} is not <= {:?}",
                self.elements[x], self.elements[y]
            )));
        }
        Ok((0..self.len()).filter(|&c| !self.le(c, x) && self.le(c, y)).collect())
    }

    /// Minimal elements of a subset.
    pub fn minimal_elements(&self, set: &[usize]) -> Vec<usize> {
        set.iter()
            .copied()
            .filter(|&m| set.iter().all(|&o| o == m || !self.le(o, m)))
            .collect()
    }

    /// The minimum of a subset, when it exists.
    pub fn minimum(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().find(|&m| set.iter().all(|&o| self.le(m, o)))
    }

    fn criterion_object_determines(&self, x: usize, y: usize, c: usize) -> Result<bool> {
        if x == y {
            return Ok(true);
        }
        let cand = self.determinator_candidates(x, y)?;
        Ok(match self.minimum(&cand) {
            Some(m) => c == m,
            None => false,
        })
    }

    fn exhaustive_object_determines(&self, x: usize, y: usize, c: usize) -> bool {
        // alpha': x' -> y factors through alpha: x -> y iff x' <= x;
        // condition (2) for the object c reads: c <= x' implies c <= x
        (0..self.len())
            .filter(|&xp| self.le(xp, y))
            .all(|xp| {
                let cond2 = !self.le(c, xp) || self.le(c, x);
                !cond2 || self.le(xp, x)
            })
    }

    /// Whether the morphism x -> y is right determined by the object c.
    /// Decided by the unique-minimum criterion and re-checked against the
    /// raw definition; a disagreement is an internal error.
    pub fn object_determines(&self, x: usize, y: usize, c: usize) -> Result<bool> {
        if !self.le(x, y) {
            return Err(Error::Unsupported(format!(
                "no morphism: {:?} is not <= {:?}",
                self.elements[x], self.elements[y]
            )));
        }
        let fast = self.criterion_object_determines(x, y, c)?;
        let slow = self.exhaustive_object_determines(x, y, c);
        if fast != slow {
            return Err(Error::Internal(format!(
                "criterion and definition disagree on ({}, {}, {})",
                self.elements[x], self.elements[y], self.elements[c]
            )));
        }
        Ok(fast)
    }

    /// Whether the morphism x -> y is right determined by the class d,
    /// checked exhaustively against the raw definition.
    pub fn class_determined(&self, x: usize, y: usize, d: &[usize]) -> Result<bool> {
        if !self.le(x, y) {
            return Err(Error::Unsupported(format!(
                "no morphism: {:?} is not <= {:?}",
                self.elements[x], self.elements[y]
            )));
        }
        Ok((0..self.len())
            .filter(|&xp| self.le(xp, y))
            .all(|xp| {
                let cond2 = d.iter().all(|&c| !self.le(c, xp) || self.le(c, x));
                !cond2 || self.le(xp, x)
            }))
    }
}
