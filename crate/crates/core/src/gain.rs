//! Unit-modulus complex gains stored by angle.
//!
//! A [`UnitGain`] is `e^{i pi a}` with the angle `a` kept in units of pi and
//! normalized into `(-1, 1]`. Angles built from a rational multiple of pi are
//! exact rationals and stay exact under products and conjugation; anything
//! else falls back to an `f64` angle.

use core::cmp::Ordering;
use core::f64::consts::{FRAC_1_SQRT_2, PI};
use core::fmt;
use core::iter::Product;
use core::ops::{Mul, Neg};

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Two gains with a float angle are equal when both `|dRe|` and `|dIm|` are
/// at most this value.
pub const GAIN_TOLERANCE: f64 = 1e-9;

/// Ties in `|angle|` (units of pi) closer than this are treated as exact ties
/// by the lexicographic comparator on float angles.
const ANGLE_TIE: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
enum Angle {
    Exact(Ratio<i64>),
    Approx(f64),
}

#[derive(Clone, Copy, Debug)]
pub struct UnitGain {
    angle: Angle,
}

fn normalize_exact(r: Ratio<i64>) -> Ratio<i64> {
    let two = Ratio::from_integer(2);
    let mut a = r % two;
    if a <= -Ratio::from_integer(1) {
        a += two;
    } else if a > Ratio::from_integer(1) {
        a -= two;
    }
    a
}

fn normalize_approx(x: f64) -> f64 {
    let mut a = x % 2.0;
    if a <= -1.0 {
        a += 2.0;
    } else if a > 1.0 {
        a -= 2.0;
    }
    a
}

impl UnitGain {
    pub fn one() -> Self {
        Self::from_ratio(Ratio::from_integer(0))
    }

    pub fn minus_one() -> Self {
        Self::from_ratio(Ratio::from_integer(1))
    }

    /// `e^{i pi/2}`.
    pub fn i() -> Self {
        Self::from_ratio(Ratio::new(1, 2))
    }

    /// `e^{i pi p/q}`.
    ///
    /// # Panics
    ///
    /// Panics if `q == 0`.
    pub fn pi_fraction(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator in pi fraction");
        Self::from_ratio(Ratio::new(p, q))
    }

    pub fn from_ratio(angle: Ratio<i64>) -> Self {
        Self { angle: Angle::Exact(normalize_exact(angle)) }
    }

    /// `e^{i x}` for an angle given in radians.
    pub fn from_radians(x: f64) -> Self {
        Self { angle: Angle::Approx(normalize_approx(x / PI)) }
    }

    /// Gain with the given angle in units of pi, stored as a float.
    pub fn from_pi_units(a: f64) -> Self {
        Self { angle: Angle::Approx(normalize_approx(a)) }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.angle, Angle::Exact(_))
    }

    /// Canonical angle in units of pi when it is an exact rational.
    pub fn exact_angle(&self) -> Option<Ratio<i64>> {
        match self.angle {
            Angle::Exact(r) => Some(r),
            Angle::Approx(_) => None,
        }
    }

    /// Canonical angle in units of pi, in `(-1, 1]`.
    pub fn angle(&self) -> f64 {
        match self.angle {
            Angle::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            Angle::Approx(a) => a,
        }
    }

    pub fn radians(&self) -> f64 {
        self.angle() * PI
    }

    /// `(cos, sin)` of the angle, exact for multiples of pi/4 and pi/6 with
    /// the obvious closed forms.
    pub fn cos_sin(&self) -> (f64, f64) {
        if let Angle::Exact(r) = self.angle {
            let (p, q) = (*r.numer(), *r.denom());
            let half_sqrt3 = libm::sqrt(3.0) / 2.0;
            // Reference angle values for p/q in (-1, 1]; sin takes the sign of p.
            let base = match q {
                1 => Some(if p == 0 { (1.0, 0.0) } else { (-1.0, 0.0) }),
                2 => Some((0.0, 1.0)),
                3 => Some(if p.abs() == 1 { (0.5, half_sqrt3) } else { (-0.5, half_sqrt3) }),
                4 => Some(if p.abs() == 1 {
                    (FRAC_1_SQRT_2, FRAC_1_SQRT_2)
                } else {
                    (-FRAC_1_SQRT_2, FRAC_1_SQRT_2)
                }),
                6 => Some(if p.abs() == 1 { (half_sqrt3, 0.5) } else { (-half_sqrt3, 0.5) }),
                _ => None,
            };
            if let Some((c, s)) = base {
                return (c, if p < 0 { -s } else { s });
            }
        }
        let t = self.radians();
        (libm::cos(t), libm::sin(t))
    }

    pub fn re(&self) -> f64 {
        self.cos_sin().0
    }

    pub fn im(&self) -> f64 {
        self.cos_sin().1
    }

    pub fn to_complex(&self) -> Complex64 {
        let (c, s) = self.cos_sin();
        Complex64::new(c, s)
    }

    pub fn conj(&self) -> Self {
        match self.angle {
            Angle::Exact(r) => Self::from_ratio(-r),
            Angle::Approx(a) => Self::from_pi_units(-a),
        }
    }

    /// Multiplicative inverse; equal to the conjugate on the unit circle.
    pub fn inv(&self) -> Self {
        self.conj()
    }

    pub fn is_one(&self) -> bool {
        self.eq_gain(&Self::one())
    }

    /// Gain equality: exact for two rational angles, otherwise within
    /// [`GAIN_TOLERANCE`] on both real and imaginary parts.
    pub fn eq_gain(&self, other: &Self) -> bool {
        match (self.angle, other.angle) {
            (Angle::Exact(a), Angle::Exact(b)) => a == b,
            _ => {
                let (c1, s1) = self.cos_sin();
                let (c2, s2) = other.cos_sin();
                (c1 - c2).abs() <= GAIN_TOLERANCE && (s1 - s2).abs() <= GAIN_TOLERANCE
            }
        }
    }

    /// Lexicographic order on `(Re, Im)`.
    ///
    /// Evaluated on angles: `a < b` iff `|angle a| > |angle b|`, or the
    /// magnitudes tie and `angle a < angle b`. Cosine is strictly decreasing
    /// in `|angle|` on `[0, pi]`, and at equal cosine the negative angle has
    /// the smaller sine.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        if self.eq_gain(other) {
            return Ordering::Equal;
        }
        match (self.angle, other.angle) {
            (Angle::Exact(a), Angle::Exact(b)) => match b.abs().cmp(&a.abs()) {
                Ordering::Equal => a.cmp(&b),
                ord => ord,
            },
            _ => {
                let (a, b) = (self.angle(), other.angle());
                let (ma, mb) = (a.abs(), b.abs());
                if (ma - mb).abs() <= ANGLE_TIE {
                    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
                } else {
                    mb.partial_cmp(&ma).unwrap_or(Ordering::Equal)
                }
            }
        }
    }

    /// Total order by canonical angle; used to keep gain sets sorted.
    pub(crate) fn angle_cmp(&self, other: &Self) -> Ordering {
        match (self.angle, other.angle) {
            (Angle::Exact(a), Angle::Exact(b)) => a.cmp(&b),
            _ => self.angle().total_cmp(&other.angle()),
        }
    }
}

/// Product of a sequence of gains; the empty product is `1`.
pub fn gain_product<'a, I>(gains: I) -> UnitGain
where
    I: IntoIterator<Item = &'a UnitGain>,
{
    gains.into_iter().fold(UnitGain::one(), |acc, g| acc * *g)
}

impl Default for UnitGain {
    fn default() -> Self {
        Self::one()
    }
}

impl Mul for UnitGain {
    type Output = UnitGain;

    fn mul(self, rhs: UnitGain) -> UnitGain {
        match (self.angle, rhs.angle) {
            (Angle::Exact(a), Angle::Exact(b)) => Self::from_ratio(a + b),
            _ => Self::from_pi_units(self.angle() + rhs.angle()),
        }
    }
}

impl Neg for UnitGain {
    type Output = UnitGain;

    fn neg(self) -> UnitGain {
        self * UnitGain::minus_one()
    }
}

impl Product for UnitGain {
    fn product<I: Iterator<Item = UnitGain>>(iter: I) -> Self {
        iter.fold(UnitGain::one(), |acc, g| acc * g)
    }
}

/// Gain equality, see [`UnitGain::eq_gain`].
impl PartialEq for UnitGain {
    fn eq(&self, other: &Self) -> bool {
        self.eq_gain(other)
    }
}

/// Formats as the graph-file token: `+1`, `-1`, `pi:p/q` or `rad:x`.
impl fmt::Display for UnitGain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.angle {
            Angle::Exact(r) if r.is_zero() => f.write_str("+1"),
            Angle::Exact(r) if r == Ratio::from_integer(1) => f.write_str("-1"),
            Angle::Exact(r) => write!(f, "pi:{}/{}", r.numer(), r.denom()),
            Angle::Approx(a) => write!(f, "rad:{:?}", a * PI),
        }
    }
}
