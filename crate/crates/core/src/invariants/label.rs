use core::fmt;

/// A lattice or generic monomial: its degree and an ordinal among equal degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub deg: u32,
    pub ord: u32,
}

impl Key {
    pub fn new(deg: u32) -> Key {
        Key { deg, ord: 0 }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ord == 0 {
            write!(f, "{}", self.deg)
        } else {
            write!(f, "{}#{}", self.deg, self.ord)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// a_ℓ
    J1,
    /// a_{m−i} a_i
    J2(usize),
    J(Key),
    I1,
    I2(usize),
    /// J_t + J'_t
    ISum(Key),
    /// J_t J'_t
    IProd(Key),
    /// J_s J'_t + J'_s J_t
    IMix(Key, Key),
}

impl Label {
    pub fn parse(s: &str) -> Option<Label> {
        let key = |t: &str| -> Option<Key> {
            match t.split_once('#') {
                Some((d, o)) => Some(Key { deg: d.parse().ok()?, ord: o.parse().ok()? }),
                None => Some(Key::new(t.parse().ok()?)),
            }
        };
        let (head, rest) = s.split_once('_')?;
        let parts: alloc::vec::Vec<&str> = rest.split(',').collect();
        match (head, parts.as_slice()) {
            ("J", ["1"]) => Some(Label::J1),
            ("I", ["1"]) => Some(Label::I1),
            ("J", ["2", i]) => Some(Label::J2(i.parse().ok()?)),
            ("I", ["2", i]) => Some(Label::I2(i.parse().ok()?)),
            ("J", [t]) => Some(Label::J(key(t)?)),
            ("I", [s, t, "1"]) if s == t => Some(Label::ISum(key(t)?)),
            ("I", [s, t, "2"]) if s == t => Some(Label::IProd(key(t)?)),
            ("I", [s, t]) => Some(Label::IMix(key(s)?, key(t)?)),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::J1 => write!(f, "J_1"),
            Label::J2(i) => write!(f, "J_2,{i}"),
            Label::J(k) => write!(f, "J_{k}"),
            Label::I1 => write!(f, "I_1"),
            Label::I2(i) => write!(f, "I_2,{i}"),
            Label::ISum(k) => write!(f, "I_{k},{k},1"),
            Label::IProd(k) => write!(f, "I_{k},{k},2"),
            Label::IMix(s, t) => write!(f, "I_{s},{t}"),
        }
    }
}
