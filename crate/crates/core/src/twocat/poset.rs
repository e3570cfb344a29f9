use std::fmt::Write;

use super::cube::n_over_leq;
use super::TwoCategory;
use crate::simplexcat::MonotoneMap;
use crate::sset::dot_id;

/// A finite poset with its order stored as a dense relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset<T> {
    pub elements: Vec<T>,
    pub labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl<T: Clone + PartialEq> FinitePoset<T> {
    pub fn from_relation(elements: Vec<T>, labels: Vec<String>, rel: impl Fn(&T, &T) -> bool) -> Self {
        let leq = elements.iter().map(|a| elements.iter().map(|b| rel(a, b)).collect()).collect();
        Self { elements, labels, leq }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn position(&self, x: &T) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    /// Reflexivity, antisymmetry and transitivity, exhaustively.
    pub fn check_partial_order(&self) -> Result<(), String> {
        let n = self.len();
        for a in 0..n {
            if !self.leq[a][a] {
                return Err(format!("{} is not below itself", self.labels[a]));
            }
            for b in 0..n {
                if a != b && self.leq[a][b] && self.leq[b][a] {
                    return Err(format!("{} and {} are mutually below each other", self.labels[a], self.labels[b]));
                }
                if !self.leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if self.leq[b][c] && !self.leq[a][c] {
                        return Err(format!("{} ≤ {} ≤ {} but not {} ≤ {}", self.labels[a], self.labels[b], self.labels[c], self.labels[a], self.labels[c]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Covering relations `a < b` with nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", dot_id(name)).unwrap();
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(out, "  p{i} [label={}];", dot_id(l)).unwrap();
        }
        for (a, b) in self.hasse() {
            writeln!(out, "  p{a} -> p{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `[1] × P`, elements ordered with the `0` copy first.
    pub fn interval_product(&self) -> FinitePoset<(usize, T)> {
        let mut elements = Vec::with_capacity(2 * self.len());
        let mut labels = Vec::with_capacity(2 * self.len());
        for e in 0..2 {
            for (x, l) in self.elements.iter().zip(&self.labels) {
                elements.push((e, x.clone()));
                labels.push(format!("{e}x{l}"));
            }
        }
        let n = self.len();
        let leq = (0..2 * n).map(|a| (0..2 * n).map(|b| a / n <= b / n && self.leq[a % n][b % n]).collect()).collect();
        FinitePoset { elements, labels, leq }
    }
}

/// A poset as a 2-category with at most one morphism `(a, b)` between any
/// two elements and discrete homs.
impl<T: Clone + PartialEq> TwoCategory for FinitePoset<T> {
    type Obj = usize;
    type Mor = (usize, usize);

    fn objects(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }
    fn hom(&self, x: &usize, y: &usize) -> Vec<(usize, usize)> {
        if self.leq[*x][*y] {
            vec![(*x, *y)]
        } else {
            Vec::new()
        }
    }
    fn source(&self, f: &(usize, usize)) -> usize {
        f.0
    }
    fn target(&self, f: &(usize, usize)) -> usize {
        f.1
    }
    fn identity(&self, x: &usize) -> (usize, usize) {
        (*x, *x)
    }
    fn compose(&self, f: &(usize, usize), g: &(usize, usize)) -> (usize, usize) {
        (f.0, g.1)
    }
    fn leq(&self, f: &(usize, usize), g: &(usize, usize)) -> bool {
        f == g
    }
    fn obj_label(&self, x: &usize) -> String {
        self.labels[*x].clone()
    }
    fn mor_label(&self, f: &(usize, usize)) -> String {
        format!("{}<={}", self.labels[f.0], self.labels[f.1])
    }
}

/// `ℕ_{/[n]}` on the maps `[m] -> [n]` with `m <= max_obj`, ordered by
/// [`n_over_leq`]. Elements are listed by `m`, then lexicographically.
pub fn n_over_slice(n: usize, max_obj: usize) -> FinitePoset<MonotoneMap> {
    let elements: Vec<MonotoneMap> = (0..=max_obj).flat_map(|m| MonotoneMap::all(m, n)).collect();
    let labels = elements.iter().map(MonotoneMap::label).collect();
    FinitePoset::from_relation(elements, labels, n_over_leq)
}
