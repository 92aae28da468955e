//! Extended-precision reference implementation for tests.
//!
//! Fixed-point reals with `PREC` fractional bits (about 115 decimal digits)
//! on top of `num-bigint`. Everything here is independent of the library:
//! its own exp, ln, π, Stirling log-gamma with exact Bernoulli numbers, and
//! its own summation of the power series. Only the coefficient recurrence
//! β_{k+1} = β_k (x/2)² / ((k+a)(k+b)) is the same mathematics as the fast
//! path, written out again here.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub const PREC: u64 = 384;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fx(pub BigInt);

impl Fx {
    pub fn zero() -> Fx {
        Fx(BigInt::zero())
    }

    pub fn one() -> Fx {
        Fx(BigInt::one() << PREC)
    }

    pub fn int(i: i64) -> Fx {
        Fx(BigInt::from(i) << PREC)
    }

    pub fn ratio(n: i64, d: i64) -> Fx {
        Fx((BigInt::from(n) << PREC) / BigInt::from(d))
    }

    /// Exact conversion (every finite double is a dyadic rational).
    pub fn f(v: f64) -> Fx {
        assert!(v.is_finite());
        if v == 0.0 {
            return Fx::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, e) = if exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp - 1075)
        };
        let m = BigInt::from(mant) * sign;
        let shift = PREC as i64 + e;
        Fx(if shift >= 0 {
            m << shift as u64
        } else {
            m >> (-shift) as u64
        })
    }

    pub fn to_f64(&self) -> f64 {
        // Keep 80 significant bits before the (single) rounding to double.
        let bits = self.0.bits() as i64;
        let drop = (bits - 80).max(0);
        let top = (&self.0 >> drop as u64).to_f64().unwrap();
        top * 2f64.powi((drop - PREC as i64) as i32)
    }

    pub fn abs(&self) -> Fx {
        Fx(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn half(&self) -> Fx {
        Fx(&self.0 >> 1u64)
    }

    /// Approximate base-2 exponent (for stopping rules).
    pub fn log2_mag(&self) -> i64 {
        self.0.bits() as i64 - PREC as i64
    }

    pub fn sqrt(&self) -> Fx {
        assert!(!self.is_negative());
        Fx((&self.0 << PREC).sqrt())
    }

    pub fn recip(&self) -> Fx {
        Fx::one() / self.clone()
    }

    pub fn powi(&self, n: u32) -> Fx {
        (0..n).fold(Fx::one(), |acc, _| acc * self.clone())
    }

    /// Parses a plain decimal literal such as "-12.345".
    pub fn from_decimal(s: &str) -> Fx {
        let (neg, s) = s.strip_prefix('-').map_or((false, s), |r| (true, r));
        let (i, f) = s.split_once('.').unwrap_or((s, ""));
        let digits: BigInt = format!("{i}{f}").parse().unwrap();
        let v = Fx((digits << PREC) / BigInt::from(10).pow(f.len() as u32));
        if neg {
            -v
        } else {
            v
        }
    }

    /// Decimal string with `digits` fractional digits (truncated).
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = (self.0.abs() * BigInt::from(10).pow(digits as u32)) >> PREC;
        let s = scaled.to_string();
        let s = format!("{:0>width$}", s, width = digits + 1);
        let (i, f) = s.split_at(s.len() - digits);
        format!("{}{i}.{f}", if self.is_negative() { "-" } else { "" })
    }
}

impl Add for Fx {
    type Output = Fx;
    fn add(self, o: Fx) -> Fx {
        Fx(self.0 + o.0)
    }
}

impl Sub for Fx {
    type Output = Fx;
    fn sub(self, o: Fx) -> Fx {
        Fx(self.0 - o.0)
    }
}

impl Mul for Fx {
    type Output = Fx;
    fn mul(self, o: Fx) -> Fx {
        Fx((self.0 * o.0) >> PREC)
    }
}

impl Div for Fx {
    type Output = Fx;
    fn div(self, o: Fx) -> Fx {
        Fx((self.0 << PREC) / o.0)
    }
}

impl Neg for Fx {
    type Output = Fx;
    fn neg(self) -> Fx {
        Fx(-self.0)
    }
}

impl PartialOrd for Fx {
    fn partial_cmp(&self, o: &Fx) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Fx {
    fn cmp(&self, o: &Fx) -> Ordering {
        self.0.cmp(&o.0)
    }
}

/// Σ_{k≥0} (-1)^k / ((2k+1) q^(2k+1)).
fn atan_inv(q: i64) -> Fx {
    let q = BigInt::from(q);
    let q2 = &q * &q;
    let mut power = (BigInt::one() << PREC) / &q;
    let mut sum = BigInt::zero();
    let mut k = 0i64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &q2;
        k += 1;
    }
    Fx(sum)
}

pub fn pi() -> Fx {
    static PI: OnceLock<Fx> = OnceLock::new();
    PI.get_or_init(|| Fx::int(16) * atan_inv(5) - Fx::int(4) * atan_inv(239))
        .clone()
}

/// 2 atanh(z) = 2 Σ z^(2k+1)/(2k+1), for |z| ≤ 1/3.
fn two_atanh(z: Fx) -> Fx {
    let z2 = z.clone() * z.clone();
    let mut power = z;
    let mut sum = Fx::zero();
    let mut k = 0i64;
    while !power.0.is_zero() {
        sum = sum + Fx(&power.0 / BigInt::from(2 * k + 1));
        power = power * z2.clone();
        k += 1;
    }
    Fx(sum.0 * 2)
}

pub fn ln2() -> Fx {
    static LN2: OnceLock<Fx> = OnceLock::new();
    LN2.get_or_init(|| two_atanh(Fx::ratio(1, 3))).clone()
}

pub fn exp(x: Fx) -> Fx {
    let n = (x.to_f64() / std::f64::consts::LN_2).round() as i64;
    let r = x - Fx::int(n) * ln2();
    let mut term = Fx::one();
    let mut sum = Fx::zero();
    let mut k = 1i64;
    while !term.0.is_zero() {
        sum = sum + term.clone();
        term = Fx((term * r.clone()).0 / BigInt::from(k));
        k += 1;
    }
    Fx(if n >= 0 {
        sum.0 << n as u64
    } else {
        sum.0 >> (-n) as u64
    })
}

pub fn ln(x: Fx) -> Fx {
    assert!(x.0.is_positive(), "ln of non-positive value");
    // x = 2^n m with m in [1, 2).
    let n = x.0.bits() as i64 - 1 - PREC as i64;
    let m = Fx(if n >= 0 { &x.0 >> n as u64 } else { &x.0 << (-n) as u64 });
    let z = (m.clone() - Fx::one()) / (m + Fx::one());
    Fx::int(n) * ln2() + two_atanh(z)
}

pub fn pow(base: Fx, e: Fx) -> Fx {
    exp(e * ln(base))
}

pub fn sinh(x: Fx) -> Fx {
    (exp(x.clone()) - exp(-x)).half()
}

pub fn cosh(x: Fx) -> Fx {
    (exp(x.clone()) + exp(-x)).half()
}

/// Exact rationals, only for the Bernoulli numbers.
#[derive(Clone)]
struct Q {
    n: BigInt,
    d: BigInt,
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    a = a.abs();
    b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

impl Q {
    fn new(n: BigInt, d: BigInt) -> Q {
        let g = gcd(n.clone(), d.clone());
        let (mut n, mut d) = (n / &g, d / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Q { n, d }
    }

    fn add(&self, o: &Q) -> Q {
        Q::new(&self.n * &o.d + &o.n * &self.d, &self.d * &o.d)
    }

    fn scale(&self, c: &BigInt) -> Q {
        Q::new(&self.n * c, self.d.clone())
    }
}

const STIRLING_TERMS: usize = 40;
const STIRLING_SHIFT: f64 = 100.0;

/// B_0 … B_{2·STIRLING_TERMS} from Σ_{j<m+1} C(m+1, j) B_j = 0.
fn bernoulli() -> &'static [Q] {
    static B: OnceLock<Vec<Q>> = OnceLock::new();
    B.get_or_init(|| {
        let n = 2 * STIRLING_TERMS;
        let mut b: Vec<Q> = vec![Q::new(BigInt::one(), BigInt::one())];
        for m in 1..=n {
            let mut acc = Q::new(BigInt::zero(), BigInt::one());
            let mut binom = BigInt::one(); // C(m+1, j)
            for (j, bj) in b.iter().enumerate() {
                acc = acc.add(&bj.scale(&binom));
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            b.push(Q::new(-acc.n, acc.d * BigInt::from(m + 1)));
        }
        b
    })
}

/// ln Γ(z) for z > 0: shift to z ≥ 100, then Stirling with 40 Bernoulli terms.
pub fn ln_gamma(z: Fx) -> Fx {
    assert!(z.0.is_positive(), "ln_gamma needs z > 0");
    let zf = z.to_f64();
    let shift = if zf < STIRLING_SHIFT {
        (STIRLING_SHIFT - zf).ceil() as i64
    } else {
        0
    };
    let mut prod = Fx::one();
    let mut log_prod = Fx::zero();
    for i in 0..shift {
        prod = prod * (z.clone() + Fx::int(i));
        // Keep the running product moderate.
        if prod.log2_mag() > 200 {
            log_prod = log_prod + ln(prod);
            prod = Fx::one();
        }
    }
    log_prod = log_prod + ln(prod);
    let w = z + Fx::int(shift);
    let half_ln_2pi = ln(Fx::int(2) * pi()).half();
    let mut s = (w.clone() - Fx::ratio(1, 2)) * ln(w.clone()) - w.clone() + half_ln_2pi;
    let b = bernoulli();
    let w2 = w.clone() * w.clone();
    let mut wpow = w; // w^(2k−1)
    for k in 1..=STIRLING_TERMS {
        let b2k = &b[2 * k];
        let denom = &b2k.d * BigInt::from((2 * k) * (2 * k - 1));
        let coeff = Fx((&b2k.n << PREC) / denom);
        s = s + coeff / wpow.clone();
        wpow = wpow * w2.clone();
    }
    s - log_prod
}

pub fn gamma(z: Fx) -> Fx {
    exp(ln_gamma(z))
}

/// Σ_{k≥0} (x/2)^(e+2k) / (Γ(k+a) Γ(k+b)) for a, b > 0, and optionally its
/// x-derivative.
pub fn hyper_sum(x: f64, e: Fx, a: Fx, b: Fx, derivative: bool) -> Fx {
    assert!(x > 0.0);
    let h = Fx::f(x).half();
    let h2 = h.clone() * h.clone();
    let mut term = exp(e.clone() * ln(h) - ln_gamma(a.clone()) - ln_gamma(b.clone()));
    let xinv = Fx::f(x).recip();
    let mut sum = Fx::zero();
    let mut k = 0i64;
    loop {
        let contrib = if derivative {
            term.clone() * (e.clone() + Fx::int(2 * k)) * xinv.clone()
        } else {
            term.clone()
        };
        sum = sum + contrib.clone();
        let kf = k as f64;
        if kf > x && (contrib.0.is_zero() || contrib.abs().log2_mag() < sum.abs().log2_mag() - 260) {
            break;
        }
        let ka = Fx::int(k) + a.clone();
        let kb = Fx::int(k) + b.clone();
        term = term * h2.clone() / (ka * kb);
        k += 1;
    }
    sum
}

fn fx_half_sum(u: f64, v: f64, c: i64) -> Fx {
    (Fx::f(u) + Fx::f(v) + Fx::int(c)).half()
}

/// t̃_{μ,ν}(x), (μ, ν) in the positivity region.
pub fn t_tilde(mu: f64, nu: f64, x: f64) -> Fx {
    hyper_sum(
        x,
        Fx::f(mu) + Fx::one(),
        fx_half_sum(mu, -nu, 3),
        fx_half_sum(mu, nu, 3),
        false,
    )
}

pub fn t_tilde_prime(mu: f64, nu: f64, x: f64) -> Fx {
    hyper_sum(
        x,
        Fx::f(mu) + Fx::one(),
        fx_half_sum(mu, -nu, 3),
        fx_half_sum(mu, nu, 3),
        true,
    )
}

/// L_ν(x) for ν > −3/2.
pub fn struve_l(nu: f64, x: f64) -> Fx {
    hyper_sum(
        x,
        Fx::f(nu) + Fx::one(),
        Fx::ratio(3, 2),
        Fx::f(nu) + Fx::ratio(3, 2),
        false,
    )
}

/// I_ν(x) for ν > −1.
pub fn bessel_i(nu: f64, x: f64) -> Fx {
    hyper_sum(x, Fx::f(nu), Fx::one(), Fx::f(nu) + Fx::one(), false)
}

/// |fast − exact| ≤ claimed error, decided in extended precision.
pub fn within(fast: f64, abs_err: f64, exact: &Fx) -> bool {
    (Fx::f(fast) - exact.clone()).abs() <= Fx::f(abs_err)
}

/// |fast/exact − 1| as a double.
pub fn rel_diff(fast: f64, exact: &Fx) -> f64 {
    ((Fx::f(fast) - exact.clone()) / exact.clone()).abs().to_f64()
}
