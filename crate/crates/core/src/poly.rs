use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Laurent polynomial with integer coefficients in one variable.
/// The variable name is supplied at print time, not stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, serde::Serialize)]
pub struct LaurentPoly {
    /// exponent -> coefficient, zero coefficients never stored
    pub terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Substitute x -> x^k (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (&e, &c) in &self.terms {
            out.add_term(e * k, c);
        }
        out
    }

    /// True if every exponent is divisible by k.
    pub fn exponents_divisible_by(&self, k: i64) -> bool {
        self.terms.keys().all(|e| e % k == 0)
    }

    /// Render with the given variable name, highest exponent first.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (&e, &c) in self.terms.iter().rev() {
            let mag = c.abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag == 1 && e != 0 { String::new() } else { mag.to_string() };
            let var_part = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if coeff_part.is_empty() && var_part.is_empty() {
                out.push('1');
            } else {
                out.push_str(&coeff_part);
                out.push_str(&var_part);
            }
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e, &c) in &self.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_render() {
        let a = LaurentPoly::monomial(2, 1);
        let b = LaurentPoly::monomial(-2, -1);
        let s = &a + &b;
        assert_eq!(s.render("A"), "A^2 - A^-2");
        let p = &s * &s;
        assert_eq!(p.render("A"), "A^4 - 2 + A^-4");
        assert!((&p - &p).is_zero());
        assert_eq!(LaurentPoly::one().render("t"), "1");
        assert_eq!(LaurentPoly::monomial(1, -3).render("t"), "-3t");
    }

    #[test]
    fn substitution() {
        let p = LaurentPoly::monomial(-4, 1);
        assert!(p.exponents_divisible_by(4));
        assert_eq!(p.substitute_power(1).render("A"), "A^-4");
        // A^-4 with A-exponents divided by -4 gives t
        let mut t = LaurentPoly::zero();
        for (&e, &c) in &p.terms {
            t.add_term(e / -4, c);
        }
        assert_eq!(t.render("t"), "t");
    }
}
