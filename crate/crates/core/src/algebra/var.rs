use std::fmt;

/// A variable identifier. The namespace lives in the high byte, the index
/// payload in the low bits, so the derived order is the fixed enumeration
/// used for monomial ordering.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(u32);

const TAG_SHIFT: u32 = 24;
const PAYLOAD: u32 = (1 << TAG_SHIFT) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    /// The leg variable `Y`.
    Y,
    /// `X_C` for a nonempty subset, stored as a bitmask (bit `i-1` for `i`).
    XSet(u32),
    /// `Z_{ij}` with `1 <= j <= i`.
    Z(u8, u8),
    /// Single-index `Z_i` used by Igusa functions.
    Zi(u8),
    /// `x_i`.
    Lx(u8),
    /// `y_i`.
    Ly(u8),
    /// `t_i`.
    T(u8),
    /// The coarse variable `X`.
    X,
    /// Residue field cardinality `q`.
    Q,
    /// `u`, standing for `q^{-s}`.
    U,
}

impl Var {
    fn make(tag: u32, payload: u32) -> Var {
        debug_assert!(payload <= PAYLOAD);
        Var((tag << TAG_SHIFT) | payload)
    }

    pub fn y() -> Var {
        Var::make(0, 0)
    }

    /// `X_C`; `mask` must be nonzero.
    pub fn x_set(mask: u32) -> Var {
        assert!(mask != 0, "X_C needs a nonempty subset");
        // Order by size first, then by the mask itself.
        let size = mask.count_ones();
        Var::make(1, (size << 16) | mask)
    }

    pub fn x_of(set: &[usize]) -> Var {
        Var::x_set(set.iter().fold(0, |m, &i| m | (1 << (i - 1))))
    }

    pub fn z(i: usize, j: usize) -> Var {
        assert!(1 <= j && j <= i, "Z_{{ij}} needs 1 <= j <= i");
        Var::make(2, ((i as u32) << 8) | j as u32)
    }

    pub fn zi(i: usize) -> Var {
        Var::make(3, i as u32)
    }

    pub fn lx(i: usize) -> Var {
        Var::make(4, i as u32)
    }

    pub fn ly(i: usize) -> Var {
        Var::make(5, i as u32)
    }

    pub fn t(i: usize) -> Var {
        Var::make(6, i as u32)
    }

    pub fn big_x() -> Var {
        Var::make(7, 0)
    }

    pub fn q() -> Var {
        Var::make(8, 0)
    }

    pub fn u() -> Var {
        Var::make(9, 0)
    }

    pub fn kind(self) -> Kind {
        let p = self.0 & PAYLOAD;
        match self.0 >> TAG_SHIFT {
            0 => Kind::Y,
            1 => Kind::XSet(p & 0xffff),
            2 => Kind::Z((p >> 8) as u8, (p & 0xff) as u8),
            3 => Kind::Zi(p as u8),
            4 => Kind::Lx(p as u8),
            5 => Kind::Ly(p as u8),
            6 => Kind::T(p as u8),
            7 => Kind::X,
            8 => Kind::Q,
            _ => Kind::U,
        }
    }

    /// Bitmask of `C` when this is `X_C`.
    pub fn set_mask(self) -> Option<u32> {
        match self.kind() {
            Kind::XSet(m) => Some(m),
            _ => None,
        }
    }
}

pub fn mask_elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            Kind::Y => write!(f, "Y"),
            Kind::XSet(m) => {
                let parts: Vec<String> = mask_elements(m).iter().map(|i| i.to_string()).collect();
                write!(f, "X_{{{}}}", parts.join(","))
            }
            Kind::Z(i, j) => write!(f, "Z_{{{},{}}}", i, j),
            Kind::Zi(i) => write!(f, "Z_{}", i),
            Kind::Lx(i) => write!(f, "x_{}", i),
            Kind::Ly(i) => write!(f, "y_{}", i),
            Kind::T(i) => write!(f, "t_{}", i),
            Kind::X => write!(f, "X"),
            Kind::Q => write!(f, "q"),
            Kind::U => write!(f, "u"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(Var::x_of(&[1, 3]).to_string(), "X_{1,3}");
        assert_eq!(Var::z(3, 1).to_string(), "Z_{3,1}");
        assert_eq!(Var::lx(1).to_string(), "x_1");
        assert_eq!(Var::ly(2).to_string(), "y_2");
        assert_eq!(Var::t(1).to_string(), "t_1");
        assert_eq!(Var::zi(2).to_string(), "Z_2");
        assert_eq!(Var::y().to_string(), "Y");
    }

    #[test]
    fn roundtrip_kind() {
        assert_eq!(Var::x_of(&[2, 3]).set_mask(), Some(0b110));
        assert_eq!(Var::z(4, 2).kind(), Kind::Z(4, 2));
    }
}
