//! The three Dirichlet characters that drive every Lambert series in the
//! crate: the odd characters mod 3 and mod 4, and the even character mod 6.

/// A real Dirichlet character given by its period and value table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: &'static str,
    pub period: u32,
    /// values[r] is chi(n) for n = r (mod period)
    pub values: &'static [i8],
}

/// chi_{-3}: 1, -1, 0 on residues 1, 2, 0 mod 3.
pub const CHI_M3: CharacterTable = CharacterTable {
    name: "chi_-3",
    period: 3,
    values: &[0, 1, -1],
};

/// chi_{-4}: 1, 0, -1, 0 on residues 1, 2, 3, 0 mod 4.
pub const CHI_M4: CharacterTable = CharacterTable {
    name: "chi_-4",
    period: 4,
    values: &[0, 1, 0, -1],
};

/// Conductor-6 character: chi(1) = 1, chi(5) = -1, zero elsewhere.
pub const CHI_6: CharacterTable = CharacterTable {
    name: "chi_6",
    period: 6,
    values: &[0, 1, 0, 0, 0, -1],
};

impl CharacterTable {
    #[inline]
    pub fn eval(&self, n: i64) -> i64 {
        let r = n.rem_euclid(self.period as i64) as usize;
        self.values[r] as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_values() {
        assert_eq!(CHI_M3.eval(1), 1);
        assert_eq!(CHI_M3.eval(2), -1);
        assert_eq!(CHI_M3.eval(3), 0);
        assert_eq!(CHI_M3.eval(7), 1);
        assert_eq!(CHI_M4.eval(3), -1);
        assert_eq!(CHI_M4.eval(2), 0);
        assert_eq!(CHI_6.eval(5), -1);
        assert_eq!(CHI_6.eval(1), 1);
        assert_eq!(CHI_6.eval(2), 0);
        assert_eq!(CHI_6.eval(3), 0);
    }

    #[test]
    fn characters_are_totally_multiplicative() {
        for chi in [&CHI_M3, &CHI_M4, &CHI_6] {
            for a in 1..30i64 {
                for b in 1..30i64 {
                    assert_eq!(chi.eval(a * b), chi.eval(a) * chi.eval(b), "{}", chi.name);
                }
            }
        }
    }
}
