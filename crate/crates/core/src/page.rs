//! Planar pages, curves up to homology, and vanishing-cycle factorizations.
//!
//! A page is the disk with `n` holes. A simple closed curve on it is recorded
//! by its winding vector: which holes it encloses. The homological
//! invariants computed elsewhere in the crate only depend on these vectors,
//! so isotopy classes are not modeled.

use serde::{Deserialize, Serialize};

use crate::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Page {
    pub holes: usize,
}

/// Homology class of an essential simple closed curve: a 0/1 winding
/// number per hole, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve {
    winding: Vec<bool>,
}

impl Curve {
    pub fn new(winding: Vec<bool>) -> Result<Self> {
        if !winding.iter().any(|&w| w) {
            return Err(Error::Invalid(
                "curve encloses no hole; it is not homologically essential".into(),
            ));
        }
        Ok(Curve { winding })
    }

    /// Curve enclosing exactly the listed holes, on a page with `holes` holes.
    pub fn enclosing(holes: usize, which: &[usize]) -> Result<Self> {
        let mut w = vec![false; holes];
        for &h in which {
            if h >= holes {
                return Err(Error::Invalid(format!("hole {h} out of range for {holes} holes")));
            }
            w[h] = true;
        }
        Curve::new(w)
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        Curve::new(bits.iter().map(|&b| b != 0).collect())
    }

    pub fn holes(&self) -> usize {
        self.winding.len()
    }

    pub fn winding(&self) -> &[bool] {
        &self.winding
    }

    pub fn bits(&self) -> Vec<u8> {
        self.winding.iter().map(|&w| u8::from(w)).collect()
    }

    fn same_page(&self, other: &Curve) -> Result<()> {
        if self.holes() != other.holes() {
            return Err(Error::PageMismatch {
                left: self.holes(),
                right: other.holes(),
            });
        }
        Ok(())
    }

    /// `self ≻ other`: no hole where `other` winds more than `self`.
    pub fn dominates(&self, other: &Curve) -> Result<bool> {
        self.same_page(other)?;
        Ok(self.winding.iter().zip(&other.winding).all(|(&a, &b)| a || !b))
    }

    /// No hole is enclosed by both curves.
    pub fn separated(&self, other: &Curve) -> Result<bool> {
        self.same_page(other)?;
        Ok(!self.winding.iter().zip(&other.winding).any(|(&a, &b)| a && b))
    }
}

/// A planar page with an ordered list of vanishing cycles. Cycles are
/// identified by position: equal winding vectors are still distinct cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    page: Page,
    cycles: Vec<Curve>,
}

impl Factorization {
    pub fn new(page: Page, cycles: Vec<Curve>) -> Result<Self> {
        for (i, c) in cycles.iter().enumerate() {
            if c.holes() != page.holes {
                return Err(Error::Invalid(format!(
                    "cycle {i} has {} winding entries on a page with {} holes",
                    c.holes(),
                    page.holes
                )));
            }
        }
        Ok(Factorization { page, cycles })
    }

    /// Convenience constructor from 0/1 rows.
    pub fn from_bits<R: AsRef<[u8]>>(holes: usize, rows: &[R]) -> Result<Self> {
        let cycles = rows
            .iter()
            .map(|r| Curve::from_bits(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Factorization::new(Page { holes }, cycles)
    }

    pub fn page(&self) -> Page {
        self.page
    }

    pub fn holes(&self) -> usize {
        self.page.holes
    }

    pub fn cycles(&self) -> &[Curve] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Parse the JSON form `{"holes": n, "cycles": [[0|1, ...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let raw: RawFactorization = serde_json::from_str(text)?;
        raw.validate()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RawFactorization {
            holes: self.page.holes,
            cycles: self.cycles.iter().map(Curve::bits).collect(),
        })
        .expect("plain data serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactorization {
    holes: usize,
    cycles: Vec<Vec<u8>>,
}

impl RawFactorization {
    fn validate(self) -> Result<Factorization, ParseError> {
        let n = self.holes;
        let mut cycles = Vec::with_capacity(self.cycles.len());
        for (i, row) in self.cycles.into_iter().enumerate() {
            if row.len() != n {
                return Err(ParseError::at_path(
                    format!("cycles[{i}]"),
                    format!("expected {n} winding entries, found {}", row.len()),
                ));
            }
            if let Some(j) = row.iter().position(|&b| b > 1) {
                return Err(ParseError::at_path(
                    format!("cycles[{i}][{j}]"),
                    format!("winding numbers are 0 or 1, found {}", row[j]),
                ));
            }
            let curve = Curve::from_bits(&row).map_err(|_| {
                ParseError::at_path(
                    format!("cycles[{i}]"),
                    "all-zero winding vector is not an essential curve",
                )
            })?;
            cycles.push(curve);
        }
        Ok(Factorization {
            page: Page { holes: n },
            cycles,
        })
    }
}

/// Result of [`boundary_multitwist`]; `degenerate` is set for the one-boundary
/// page (the disk), which carries no essential curves at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiTwist {
    pub factorization: Factorization,
    pub degenerate: bool,
}

/// The boundary multi-twist on the planar surface with `b` boundary
/// components (the disk with `b - 1` holes): one curve parallel to the outer
/// boundary and one around each hole.
pub fn boundary_multitwist(b: usize) -> Result<MultiTwist> {
    if b == 0 {
        return Err(Error::Invalid("a page needs at least one boundary component".into()));
    }
    let n = b - 1;
    let page = Page { holes: n };
    if n == 0 {
        return Ok(MultiTwist {
            factorization: Factorization::new(page, Vec::new())?,
            degenerate: true,
        });
    }
    let mut cycles = vec![Curve::new(vec![true; n])?];
    for h in 0..n {
        cycles.push(Curve::enclosing(n, &[h])?);
    }
    Ok(MultiTwist {
        factorization: Factorization::new(page, cycles)?,
        degenerate: false,
    })
}
