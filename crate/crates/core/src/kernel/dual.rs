use super::Rational;
use num::Zero;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A dual number re + eps·ε with ε² = 0, used for exact first-order variations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual {
    /// Value part.
    pub re: Rational,
    /// First-order part.
    pub eps: Rational,
}

impl Dual {
    /// re + eps·ε.
    pub fn new(re: Rational, eps: Rational) -> Self {
        Dual { re, eps }
    }

    /// A constant with no first-order part.
    pub fn constant(re: Rational) -> Self {
        Dual {
            re,
            eps: Rational::zero(),
        }
    }

    /// Multiplicative inverse; panics when the value part is zero.
    pub fn recip(&self) -> Self {
        let inv = self.re.recip();
        Dual {
            eps: -(&self.eps * &inv * &inv),
            re: inv,
        }
    }
}

impl Add for &Dual {
    type Output = Dual;
    fn add(self, o: &Dual) -> Dual {
        Dual::new(&self.re + &o.re, &self.eps + &o.eps)
    }
}

impl Sub for &Dual {
    type Output = Dual;
    fn sub(self, o: &Dual) -> Dual {
        Dual::new(&self.re - &o.re, &self.eps - &o.eps)
    }
}

impl Mul for &Dual {
    type Output = Dual;
    fn mul(self, o: &Dual) -> Dual {
        Dual::new(&self.re * &o.re, &self.re * &o.eps + &self.eps * &o.re)
    }
}

impl Div for &Dual {
    type Output = Dual;
    fn div(self, o: &Dual) -> Dual {
        let inv = o.re.recip();
        let re = &self.re * &inv;
        let eps = (&self.eps - &re * &o.eps) * &inv;
        Dual::new(re, eps)
    }
}

impl Neg for &Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-&self.re, -&self.eps)
    }
}
