use crate::error::{Error, Result};

use super::{Digraph, SimpleGraph};

/// An orientation of a [`SimpleGraph`]: one boolean per canonical edge.
/// Bit `i = false` orients edge `(u, v)` (with `u < v`) as the arc `u -> v`,
/// `true` as `v -> u`. Bits are packed into a `u64`, edge `i` at bit `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    base: SimpleGraph,
    bits: u64,
}

impl Orientation {
    pub fn new(base: SimpleGraph, bits: u64) -> Result<Self> {
        let m = base.edge_count();
        if m < 64 && bits >> m != 0 {
            return Err(Error::Parameter(format!(
                "orientation bits exceed the {m} canonical edges"
            )));
        }
        Ok(Orientation { base, bits })
    }

    pub fn from_bools(base: SimpleGraph, flags: &[bool]) -> Result<Self> {
        if flags.len() != base.edge_count() {
            return Err(Error::Parameter(format!(
                "expected {} orientation bits, got {}",
                base.edge_count(),
                flags.len()
            )));
        }
        let bits = flags
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i));
        Ok(Orientation { base, bits })
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn materialize(&self) -> Digraph {
        let arcs: Vec<(usize, usize)> = self
            .base
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                if self.bits >> i & 1 == 0 {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect();
        Digraph::new(self.base.n(), &arcs).unwrap()
    }
}

/// Orients `g` by the given per-edge flags (canonical edge order).
pub fn orient(g: &SimpleGraph, flags: &[bool]) -> Result<Digraph> {
    Ok(Orientation::from_bools(g.clone(), flags)?.materialize())
}

/// Recovers the orientation bitstring of a digraph that orients `g`.
/// Errors if `d` is not an orientation of `g`.
pub fn orientation_bits_of(g: &SimpleGraph, d: &Digraph) -> Result<u64> {
    if d.n() != g.n() || d.arc_count() != g.edge_count() {
        return Err(Error::Parameter(
            "digraph does not have one arc per base edge".into(),
        ));
    }
    let mut bits = 0u64;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match (d.arc(u, v), d.arc(v, u)) {
            (true, false) => {}
            (false, true) => bits |= 1 << i,
            _ => {
                return Err(Error::Parameter(format!(
                    "edge ({u}, {v}) is not oriented exactly one way"
                )))
            }
        }
    }
    Ok(bits)
}
