use alloc::format;
use core::fmt;

use crate::binforms::Shape;
use crate::error::{Error, Result};
use crate::invariants::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupType {
    C2n,
    C2xCn,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::C2n => "C2n",
            GroupType::C2xCn => "C2xCn",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseDescriptor {
    pub group_type: GroupType,
    pub n: u32,
    pub m: usize,
    pub shape: Shape,
    pub genus: usize,
    pub always_descends: bool,
    /// I_{2, m/2 − 1}, generic strata only.
    pub obstruction_label: Option<Label>,
    /// g and n both odd: a non-hyperelliptic descent always exists.
    pub conic_eligible: bool,
}

pub fn classify_case(shape: Shape, n: u32, m: usize, g: usize) -> Result<CaseDescriptor> {
    if n < 2 || m < 1 {
        return Err(Error::Inconsistent(format!("n = {n}, m = {m}")));
    }
    let core = n as usize * m;
    let deg = match shape {
        Shape::CcForm => core,
        Shape::CForm1 => core + 1,
        Shape::CForm2 => core + 2,
    };
    if deg != 2 * g + 2 {
        return Err(Error::Inconsistent(format!(
            "{shape} with n = {n}, m = {m} has degree {deg}, not 2g + 2 = {}",
            2 * g + 2
        )));
    }
    let group_type = if shape == Shape::CcForm && n.is_multiple_of(2) { GroupType::C2xCn } else { GroupType::C2n };
    let always_descends = match shape {
        Shape::CForm1 => true,
        Shape::CForm2 | Shape::CcForm => m % 2 == 1,
    };
    let obstruction_label = if always_descends { None } else { Some(Label::I2(m / 2 - 1)) };
    let conic_eligible = !always_descends && g % 2 == 1 && n % 2 == 1;
    Ok(CaseDescriptor { group_type, n, m, shape, genus: g, always_descends, obstruction_label, conic_eligible })
}
