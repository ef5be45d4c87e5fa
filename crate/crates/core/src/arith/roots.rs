//! Rational roots of integer polynomials by p-adic lifting.
//!
//! For a square-free primitive `g ∈ ℤ[y]` with `g(0) ≠ 0`, every rational root
//! `a/b` has `|a| ≤ |g(0)|` and `0 < b ≤ |lc(g)|`. Each simple root modulo a
//! good prime `p` is lifted by Newton's iteration until `p^k > 2·|g(0)|·|lc(g)|`,
//! then rational reconstruction recovers the only possible candidate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::BigRat;

fn mod_u64(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod_u64(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` by `b` over `𝔽_p`; `b` nonzero and trimmed.
fn rem_mod(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let lead_inv = inv_mod_u64(*b.last().expect("nonzero"), p);
    trim(&mut a);
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let f = a.last().copied().expect("nonempty") * lead_inv % p;
        for (i, bi) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - f * bi % p) % p;
        }
        trim(&mut a);
    }
    a
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem_mod(a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `g` evaluated at `x` modulo `m`.
fn eval_mod(g: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// The fraction `a/b` with `a ≡ b·r (mod m)`, `|a| ≤ n_bound`, `0 < b ≤ d_bound`.
fn reconstruct(r: &BigInt, m: &BigInt, n_bound: &BigInt, d_bound: &BigInt) -> Option<BigRat> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > n_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > d_bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRat::new(r1, t1))
}

/// Whether `a/b` is a root of `g`, checked exactly as `Σ gᵢ aⁱ b^{n-i} = 0`.
fn is_root(g: &[BigInt], q: &BigRat) -> bool {
    let (a, b) = (q.numer(), q.denom());
    let n = g.len() - 1;
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    let mut terms = Vec::with_capacity(g.len());
    for _ in 0..=n {
        terms.push(bpow.clone());
        bpow *= b;
    }
    let mut apow = BigInt::one();
    for (i, c) in g.iter().enumerate() {
        acc += c * &apow * &terms[n - i];
        apow *= a;
    }
    acc.is_zero()
}

/// Distinct rational roots of a square-free integer polynomial (ascending
/// coefficients) with nonzero constant term.
pub(crate) fn squarefree_rational_roots(g: &[BigInt]) -> Vec<BigRat> {
    let n = g.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![BigRat::new(-g[0].clone(), g[1].clone())];
    }
    let lead = g[n].abs();
    let tail = g[0].abs();
    let deriv: Vec<BigInt> = g.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();

    // a prime not dividing the leading coefficient that keeps g square-free
    let p = (3u64..)
        .filter(|&p| is_prime(p))
        .find(|&p| {
            if mod_u64(&lead, p) == 0 {
                return false;
            }
            let gp: Vec<u64> = g.iter().map(|c| mod_u64(c, p)).collect();
            let dp: Vec<u64> = deriv.iter().map(|c| mod_u64(c, p)).collect();
            gcd_degree_mod(gp, dp, p) == 0
        })
        .expect("some prime is good for a square-free polynomial");

    let gp: Vec<u64> = g.iter().map(|c| mod_u64(c, p)).collect();
    let roots_mod_p = (0..p).filter(|&x| gp.iter().rev().fold(0u64, |acc, c| (acc * x + c) % p) == 0);

    let bound = BigInt::from(2) * &lead * &tail;
    let mut out = Vec::new();
    for r0 in roots_mod_p {
        let mut m = BigInt::from(p);
        let mut r = BigInt::from(r0);
        while m <= bound {
            m = &m * &m;
            let d = eval_mod(&deriv, &r, &m);
            let Some(dinv) = inverse_mod(&d, &m) else { break };
            r = (&r - eval_mod(g, &r, &m) * dinv).mod_floor(&m);
        }
        if let Some(q) = reconstruct(&r, &m, &tail, &lead) {
            if is_root(g, &q) {
                out.push(q);
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn finds_roots_with_large_denominators() {
        // (1728y - 1)(7y + 3)(y^2 + 1)
        let mul = |a: &[BigInt], b: &[BigInt]| {
            let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        };
        let g2 = mul(&mul(&ints(&[-1, 1728]), &ints(&[3, 7])), &ints(&[1, 0, 1]));
        let roots = squarefree_rational_roots(&g2);
        assert_eq!(
            roots,
            vec![BigRat::new((-3).into(), 7.into()), BigRat::new(1.into(), 1728.into())]
        );
    }

    #[test]
    fn no_rational_roots() {
        assert!(squarefree_rational_roots(&ints(&[-2, 0, 1])).is_empty());
        assert!(squarefree_rational_roots(&ints(&[1, 1, 1])).is_empty());
    }

    #[test]
    fn reconstruction_bounds() {
        let m = BigInt::from(10007);
        // 3/5 mod 10007
        let r = (BigInt::from(3) * inverse_mod(&BigInt::from(5), &m).unwrap()).mod_floor(&m);
        let q = reconstruct(&r, &m, &BigInt::from(10), &BigInt::from(10)).unwrap();
        assert_eq!(q, BigRat::new(3.into(), 5.into()));
    }
}
