use alloc::vec::Vec;
use core::fmt;

use crate::arith::Elem;
use crate::binforms::{act, proportional, BinaryForm, Mat2};
use crate::error::{Error, Result};

/// One transformation in a descent certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// f ↦ act(A, f)
    Mat(Mat2),
    /// f ↦ f(λx, μz) with λⁿ = x, μⁿ = y, up to a scalar; needs the support of f in one class mod n.
    Torus { x: Elem, y: Elem, n: u32 },
}

impl Step {
    pub fn apply(&self, f: &BinaryForm) -> Result<BinaryForm> {
        match self {
            Step::Mat(a) => act(a, f),
            Step::Torus { x, y, n } => {
                let n = *n as usize;
                let big_n = f.degree();
                let supp = f.support();
                let e = supp.first().map(|&j| j % n).unwrap_or(0);
                if supp.iter().any(|&j| j % n != e) {
                    return Err(Error::Inconsistent(alloc::string::String::from(
                        "torus power on a non-cyclic support",
                    )));
                }
                let c = f
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| {
                        if c.is_zero() {
                            c.clone()
                        } else {
                            c * &x.pow((j / n) as i64) * y.pow(((big_n - j) / n) as i64)
                        }
                    })
                    .collect();
                Ok(BinaryForm::new(c))
            }
        }
    }

    /// The step undoing this one, up to scalar.
    pub fn inverse(&self) -> Result<Step> {
        Ok(match self {
            Step::Mat(a) => Step::Mat(a.inv()?),
            Step::Torus { x, y, n } => Step::Torus { x: x.inv(), y: y.inv(), n: *n },
        })
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Mat(a) => write!(f, "act {a}"),
            Step::Torus { x, y, n } => write!(f, "torus^(1/{n}) ({x}, {y})"),
        }
    }
}

pub fn apply_chain(chain: &[Step], f: &BinaryForm) -> Result<BinaryForm> {
    chain.iter().try_fold(f.clone(), |g, s| s.apply(&g))
}

/// Whether the chain carries f onto a multiple of target.
pub fn chain_reaches(chain: &[Step], f: &BinaryForm, target: &BinaryForm) -> bool {
    match apply_chain(chain, f) {
        Ok(g) => {
            let t = match g.tower().join(target.tower()) {
                Some(t) => t,
                None => return false,
            };
            proportional(&g.lift(&t), &target.lift(&t)).is_some()
        }
        Err(_) => false,
    }
}

/// Undo the trailing Möbius steps of a chain.
pub fn strip_trailing_mats(chain: &[Step], f: &BinaryForm) -> Result<BinaryForm> {
    let mut g = f.clone();
    for s in chain.iter().rev() {
        match s {
            Step::Mat(_) => g = s.inverse()?.apply(&g)?,
            Step::Torus { .. } => break,
        }
    }
    Ok(g)
}

pub fn collect(parts: &[&[Step]]) -> Vec<Step> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}
