//! The action of path generators on basis vectors `ξ_x` indexed by infinite
//! paths: `S_η ξ_x = ξ_{ηx}` when `r(x) = s(η)`, and
//! `S_η^* ξ_y = ξ_{σ^{d(η)}(y)}` when `y(0, d(η)) = η`; zero otherwise.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::factorization::{KGraph, Path};
use crate::periodicity::PeriodicityTuple;

use super::infinite::EventuallyPeriodicPath;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisImage {
    Basis(EventuallyPeriodicPath),
    Zero,
}

impl BasisImage {
    pub fn is_zero(&self) -> bool {
        matches!(self, BasisImage::Zero)
    }
}

pub fn rep_apply(g: &KGraph, eta: &Path, x: &EventuallyPeriodicPath) -> Result<BasisImage> {
    if x.range() != eta.source() {
        return Ok(BasisImage::Zero);
    }
    Ok(BasisImage::Basis(x.prepend(g, eta)?))
}

pub fn rep_apply_adjoint(g: &KGraph, eta: &Path, y: &EventuallyPeriodicPath) -> Result<BasisImage> {
    let d = eta.degree();
    if y.segment(g, &Degree::zero(d.rank()), d)? != *eta {
        return Ok(BasisImage::Zero);
    }
    Ok(BasisImage::Basis(y.shift(g, d)?))
}

/// The two-term element `S_{μα} S_{μα}^* - S_{να} S_{μα}^*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepElement {
    mu_alpha: Path,
    nu_alpha: Path,
}

impl RepElement {
    /// Needs a common source and different degrees.
    pub fn new(mu_alpha: Path, nu_alpha: Path) -> Result<Self> {
        if mu_alpha.source() != nu_alpha.source() {
            return Err(Error::MalformedElement("the two paths need a common source"));
        }
        if mu_alpha.degree() == nu_alpha.degree() {
            return Err(Error::MalformedElement("the two paths need different degrees"));
        }
        Ok(RepElement { mu_alpha, nu_alpha })
    }

    pub fn from_tuple(g: &KGraph, t: &PeriodicityTuple) -> Result<Self> {
        Self::new(t.mu_alpha(g)?, t.nu_alpha(g)?)
    }

    pub fn mu_alpha(&self) -> &Path {
        &self.mu_alpha
    }

    pub fn nu_alpha(&self) -> &Path {
        &self.nu_alpha
    }

    /// `d(μα) != d(να)`; always true for a constructed element.
    pub fn degrees_differ(&self) -> bool {
        self.mu_alpha.degree() != self.nu_alpha.degree()
    }

    /// Whether the element sends `ξ_x` to zero.
    pub fn annihilates(&self, g: &KGraph, x: &EventuallyPeriodicPath) -> Result<bool> {
        let BasisImage::Basis(z) = rep_apply_adjoint(g, &self.mu_alpha, x)? else {
            return Ok(true);
        };
        let (BasisImage::Basis(first), BasisImage::Basis(second)) = (
            rep_apply(g, &self.mu_alpha, &z)?,
            rep_apply(g, &self.nu_alpha, &z)?,
        ) else {
            unreachable!("z ranges at the common source");
        };
        first.same_path(g, &second)
    }
}

/// True when the element kills every sample.
pub fn verify_annihilation(g: &KGraph, a: &RepElement, samples: &[EventuallyPeriodicPath]) -> Result<bool> {
    for x in samples {
        if !a.annihilates(g, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}
