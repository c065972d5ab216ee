//! Formal rational combinations of canonical graphs.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{GraphError, Result};
use crate::graph::{Canon, DecoratedGraph, Parity};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphTerm {
    pub coefficient: Rational,
    pub graph: DecoratedGraph,
}

/// Sparse vector over the canonical basis. Terms are kept sorted by the
/// canonical graph, which fixes the output order everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphVector {
    parity: Parity,
    terms: BTreeMap<DecoratedGraph, Rational>,
}

impl GraphVector {
    pub fn zero(parity: Parity) -> Self {
        GraphVector { parity, terms: BTreeMap::new() }
    }

    /// `1 * g`, canonicalized.
    pub fn from_graph(g: &DecoratedGraph) -> Result<Self> {
        let mut v = GraphVector::zero(g.parity());
        v.add_graph(&Rational::one(), g)?;
        Ok(v)
    }

    pub fn from_terms<'a, I>(parity: Parity, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, &'a DecoratedGraph)>,
    {
        let mut v = GraphVector::zero(parity);
        for (c, g) in terms {
            v.add_graph(&c, g)?;
        }
        Ok(v)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DecoratedGraph, &Rational)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> Vec<GraphTerm> {
        self.terms
            .iter()
            .map(|(g, c)| GraphTerm { coefficient: c.clone(), graph: g.clone() })
            .collect()
    }

    pub fn coefficient(&self, g: &DecoratedGraph) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    /// Add `c * g` for an arbitrary (possibly non-canonical) graph.
    pub fn add_graph(&mut self, c: &Rational, g: &DecoratedGraph) -> Result<()> {
        self.check_parity(g.parity())?;
        match g.canonicalize()? {
            Canon::Zero => {}
            Canon::Graph { graph, sign } => self.add_canonical(&(c * int(sign as i64)), graph),
        }
        Ok(())
    }

    /// Add `c * g` for a graph already in canonical form.
    pub fn add_canonical(&mut self, c: &Rational, g: DecoratedGraph) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(g.parity(), self.parity);
        match self.terms.entry(g) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &GraphVector) -> Result<()> {
        self.check_parity(other.parity)?;
        for (g, x) in &other.terms {
            self.add_canonical(&(c * x), g.clone());
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> GraphVector {
        let mut out = GraphVector::zero(self.parity);
        if c.is_zero() {
            return out;
        }
        for (g, x) in &self.terms {
            out.terms.insert(g.clone(), x * c);
        }
        out
    }

    /// `lambda * a + mu * b`.
    pub fn combine(a: &GraphVector, b: &GraphVector, lambda: &Rational, mu: &Rational) -> Result<Self> {
        if a.parity != b.parity {
            return Err(GraphError::ParityMismatch { expected: a.parity, found: b.parity });
        }
        let mut out = a.scale(lambda);
        out.add_scaled(mu, b)?;
        Ok(out)
    }

    /// Common `(order, degree)` of all terms, `None` for the zero vector.
    pub fn bidegree(&self) -> Result<Option<(i64, i64)>> {
        let mut it = self.terms.keys().map(DecoratedGraph::bidegree);
        let first = match it.next() {
            None => return Ok(None),
            Some(b) => b,
        };
        if it.all(|b| b == first) {
            Ok(Some(first))
        } else {
            Err(GraphError::Inhomogeneous)
        }
    }

    /// Terms whose graph satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&DecoratedGraph) -> bool) -> GraphVector {
        GraphVector {
            parity: self.parity,
            terms: self
                .terms
                .iter()
                .filter(|(g, _)| keep(g))
                .map(|(g, c)| (g.clone(), c.clone()))
                .collect(),
        }
    }

    /// Rescale so that the first nonzero coefficient is +1.
    pub fn normalized(&self) -> GraphVector {
        match self.terms.values().next() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }

    fn check_parity(&self, p: Parity) -> Result<()> {
        if p != self.parity {
            Err(GraphError::ParityMismatch { expected: self.parity, found: p })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for GraphVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){g}")?;
        }
        Ok(())
    }
}
