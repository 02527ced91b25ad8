//! Scalar types and small vector helpers.
//!
//! `Rat` is always kept in reduced canonical form by `num-rational`
//! (positive denominator, gcd(num, den) = 1), so equality and ordering are
//! exact and hashable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(int(num), int(den))
}

pub fn qvec(coords: &[i64]) -> Vec<Rat> {
    coords.iter().map(|&c| rat_int(c)).collect()
}

pub fn zvec(coords: &[i64]) -> Vec<Int> {
    coords.iter().map(|&c| int(c)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn dot_zq(a: &[Int], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += Rat::from_integer(x.clone()) * y;
    }
    acc
}

pub fn dot_zz(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn int_to_rat(a: &[Int]) -> Vec<Rat> {
    a.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Clears denominators and divides by the content, preserving direction.
///
/// Returns the zero vector unchanged.
pub fn primitive_direction(a: &[Rat]) -> Vec<Int> {
    if a.iter().all(|x| x.is_zero()) {
        return vec![Int::zero(); a.len()];
    }
    let mut lcm = Int::one();
    for x in a {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = a.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = Int::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    ints.iter().map(|v| v / &g).collect()
}

/// Primitive integer vector from an integer vector (divide by gcd of entries).
pub fn primitive_int(a: &[Int]) -> Vec<Int> {
    if a.iter().all(|x| x.is_zero()) {
        return a.to_vec();
    }
    let mut g = Int::zero();
    for v in a {
        g = g.gcd(v);
    }
    a.iter().map(|v| v / &g).collect()
}

/// Lexicographic comparison of rational vectors.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Largest integer `k` with `k <= q`.
pub fn floor(q: &Rat) -> Int {
    q.floor().to_integer()
}

/// Smallest integer `k` with `k >= q`.
pub fn ceil(q: &Rat) -> Int {
    q.ceil().to_integer()
}

/// Smallest dyadic `k / 2^level >= q`.
pub fn ceil_dyadic(q: &Rat, level: u32) -> Rat {
    let pow = Int::from(2u32).pow(level);
    let scaled = q * Rat::from_integer(pow.clone());
    Rat::new(ceil(&scaled), pow)
}

/// Best-effort exact conversion of an `f64` to a rational.
///
/// Panics on non-finite input; every finite `f64` is exactly representable.
pub fn rat_from_f64(x: f64) -> Rat {
    assert!(x.is_finite(), "cannot convert non-finite float to rational");
    Rat::from_float(x).expect("finite float converts exactly")
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    // Good enough for the float-only consumers; exact when representable.
    let n = q.numer();
    let d = q.denom();
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(nf), Ok(df)) if df.is_finite() && nf.is_finite() => nf / df,
        _ => {
            // Fall back through a scaled representation for huge entries.
            let fq = q.to_f64_lossy();
            fq
        }
    }
}

trait ToF64Lossy {
    fn to_f64_lossy(&self) -> f64;
}

impl ToF64Lossy for Rat {
    fn to_f64_lossy(&self) -> f64 {
        let digits = 30usize;
        let scale = Int::from(10u32).pow(digits as u32);
        let scaled = (self.numer() * &scale) / self.denom();
        let s = scaled.to_string().parse::<f64>().unwrap_or(f64::NAN);
        s / 1e30
    }
}

pub fn abs(q: &Rat) -> Rat {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_direction_reduces() {
        let v = vec![rat(2, 3), rat(-4, 3), rat_int(2)];
        assert_eq!(primitive_direction(&v), zvec(&[1, -2, 3]));
    }

    #[test]
    fn ceil_dyadic_decreases_with_level() {
        let q = rat(1, 3);
        let mut prev = ceil_dyadic(&q, 0);
        for level in 1..10 {
            let cur = ceil_dyadic(&q, level);
            assert!(cur <= prev && cur >= q);
            prev = cur;
        }
    }

    #[test]
    fn rat_f64_roundtrip() {
        let q = rat(-7, 16);
        assert_eq!(rat_from_f64(rat_to_f64(&q)), q);
    }
}
