//! Fixed-point complex numbers and complex balls over big integers.
//!
//! A value at precision `p` is `(re + i·im) / 2^p`. A [`Ball`] adds a
//! radius `rad / 2^p` that upper-bounds the distance to the true value.
//! Every rounding step widens the radius, so enclosures are rigorous.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct Fx {
    pub re: BigInt,
    pub im: BigInt,
}

fn scaled_from_f64(x: f64, prec: u32) -> BigInt {
    let r = BigRational::from_float(x).unwrap_or_else(BigRational::zero);
    let s = r * BigRational::from_integer(BigInt::one() << prec as usize);
    s.floor().to_integer()
}

impl Fx {
    pub fn zero() -> Self {
        Fx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn from_int(v: &BigInt, prec: u32) -> Self {
        Fx {
            re: v << prec as usize,
            im: BigInt::zero(),
        }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Fx {
            re: scaled_from_f64(re, prec),
            im: scaled_from_f64(im, prec),
        }
    }

    pub fn to_f64(&self, prec: u32) -> (f64, f64) {
        let scale = 2f64.powi(-(prec as i32));
        let conv = |v: &BigInt| {
            // Shift down first so huge mantissas stay finite.
            let extra = v.bits().saturating_sub(900) as usize;
            let shifted: BigInt = v >> extra;
            shifted.to_f64().unwrap_or(0.0) * scale * 2f64.powi(extra as i32)
        };
        (conv(&self.re), conv(&self.im))
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Fx, prec: u32) -> Fx {
        let p = prec as usize;
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> p,
            im: (&self.re * &o.im + &self.im * &o.re) >> p,
        }
    }

    /// Quotient; `None` when the divisor is zero at this precision.
    pub fn div(&self, o: &Fx, prec: u32) -> Option<Fx> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let p = prec as usize;
        Some(Fx {
            re: ((&self.re * &o.re + &self.im * &o.im) << p) / &den,
            im: ((&self.im * &o.re - &self.re * &o.im) << p) / &den,
        })
    }

    /// Upper bound on the modulus, in ulps.
    pub fn mag_upper(&self) -> BigInt {
        self.re.abs() + self.im.abs()
    }

    /// Lower bound on the modulus, in ulps.
    pub fn mag_lower(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
}

/// Complex disc: centre `c` and radius `rad`, both in ulps of `2^-prec`.
#[derive(Clone, Debug)]
pub struct Ball {
    pub c: Fx,
    pub rad: BigInt,
    pub prec: u32,
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = (a / b, a % b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

impl Ball {
    pub fn exact(c: Fx, prec: u32) -> Self {
        Ball {
            c,
            rad: BigInt::zero(),
            prec,
        }
    }

    pub fn from_int(v: &BigInt, prec: u32) -> Self {
        Ball::exact(Fx::from_int(v, prec), prec)
    }

    pub fn one(prec: u32) -> Self {
        Ball::from_int(&BigInt::one(), prec)
    }

    pub fn zero(prec: u32) -> Self {
        Ball::from_int(&BigInt::zero(), prec)
    }

    pub fn add(&self, o: &Ball) -> Ball {
        Ball {
            c: self.c.add(&o.c),
            rad: &self.rad + &o.rad,
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        Ball {
            c: self.c.sub(&o.c),
            rad: &self.rad + &o.rad,
            prec: self.prec,
        }
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        let p = self.prec;
        let c = self.c.mul(&o.c, p);
        let m1 = self.c.mag_upper();
        let m2 = o.c.mag_upper();
        let cross = &m1 * &o.rad + &m2 * &self.rad + &self.rad * &o.rad;
        let scale = BigInt::one() << p as usize;
        let rad = ceil_div(&cross, &scale) + 2;
        Ball { c, rad, prec: p }
    }

    pub fn pow(&self, e: u32) -> Ball {
        let mut acc = Ball::one(self.prec);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplies by an exact rational.
    pub fn scale(&self, x: &BigRational) -> Ball {
        let n = x.numer();
        let d = x.denom();
        let c = Fx {
            re: (&self.c.re * n) / d,
            im: (&self.c.im * n) / d,
        };
        let rad = ceil_div(&(&self.rad * n.abs()), d) + 2;
        Ball {
            c,
            rad,
            prec: self.prec,
        }
    }

    pub fn mag_upper(&self) -> BigInt {
        self.c.mag_upper() + &self.rad
    }

    pub fn mag_lower(&self) -> BigInt {
        let v = self.c.mag_lower() - &self.rad;
        if v.is_negative() {
            BigInt::zero()
        } else {
            v
        }
    }

    /// True when the exact real number `v` lies in the disc.
    pub fn contains_int(&self, v: &BigInt) -> bool {
        let dx = &self.c.re - (v << self.prec as usize);
        let dy = &self.c.im;
        &dx * &dx + dy * dy <= &self.rad * &self.rad
    }

    /// Width of the enclosure in units of 1, as an f64 (diagnostics only).
    pub fn width(&self) -> f64 {
        let w = Fx {
            re: &self.rad * 2,
            im: BigInt::zero(),
        };
        w.to_f64(self.prec).0
    }

    /// The unique integer enclosed, if the disc has diameter below 1/2
    /// and meets the real axis at exactly one integer.
    pub fn unique_integer(&self) -> Option<BigInt> {
        let quarter = BigInt::one() << (self.prec as usize).saturating_sub(2);
        if self.rad >= quarter {
            return None;
        }
        let half = BigInt::one() << (self.prec as usize - 1);
        let nearest = (&self.c.re + &half) >> self.prec as usize;
        if self.contains_int(&nearest) {
            Some(nearest)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_product_encloses() {
        let p = 64;
        let a = Ball::exact(Fx::from_f64(1.5, -0.25, p), p);
        let b = Ball::exact(Fx::from_f64(-2.0, 0.5, p), p);
        let c = a.mul(&b);
        let (re, im) = c.c.to_f64(p);
        assert!((re - (-3.0 + 0.125)).abs() < 1e-12);
        assert!((im - (0.75 + 0.5)).abs() < 1e-12);
    }

    #[test]
    fn integer_extraction() {
        let p = 80;
        let b = Ball::from_int(&BigInt::from(-7), p);
        assert_eq!(b.unique_integer(), Some(BigInt::from(-7)));
        let wide = Ball {
            rad: BigInt::one() << 79,
            ..b
        };
        assert_eq!(wide.unique_integer(), None);
    }

    #[test]
    fn division_roundtrip() {
        let p = 100;
        let a = Fx::from_f64(3.0, 4.0, p);
        let b = Fx::from_f64(1.0, -2.0, p);
        let q = a.div(&b, p).unwrap();
        let back = q.mul(&b, p);
        assert!((&back.re - &a.re).abs() < BigInt::from(16));
        assert!((&back.im - &a.im).abs() < BigInt::from(16));
    }
}
