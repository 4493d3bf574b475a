//! Exact rational roots of rational polynomials.
//!
//! The primary route is the rational root theorem on the integer-cleared
//! polynomial: every root `a/b` in lowest terms has `a | a_0` and `b | a_n`.
//! Enumerating divisors needs the factorizations of the trailing and leading
//! coefficients, so it is only attempted within a factoring budget. Past the
//! budget the search switches to p-adic lifting: the rational roots of `P`
//! are `y / a_n` for the integer roots `y` of the monic polynomial
//! `a_n^(n-1) P(y / a_n)`, and each integer root is recovered by Hensel-lifting
//! a simple root modulo a small prime until the modulus exceeds twice the
//! Cauchy root bound. Both routes confirm every candidate by exact evaluation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, RationalPolynomial};
use crate::error::{Error, Result};

/// Tuning for [`RootSearch::rational_roots`].
#[derive(Debug, Clone)]
pub struct RootSearch {
    /// Largest |coefficient| the divisor route will factor by trial division.
    pub factor_budget: u64,
    /// Largest number of `±a/b` candidates the divisor route will test.
    pub max_candidates: usize,
}

impl Default for RootSearch {
    fn default() -> Self {
        RootSearch {
            factor_budget: 1_000_000_000_000,
            max_candidates: 20_000,
        }
    }
}

/// All rational roots of `p` with multiplicities collapsed.
pub fn poly_rational_roots(p: &RationalPolynomial) -> Result<BTreeSet<Rational>> {
    RootSearch::default().rational_roots(p)
}

impl RootSearch {
    pub fn rational_roots(&self, p: &RationalPolynomial) -> Result<BTreeSet<Rational>> {
        let (mut roots, ints) = prepare(p)?;
        if ints.len() <= 1 {
            return Ok(roots);
        }
        if ints.len() <= 3 {
            roots.extend(low_degree_roots(&ints));
            return Ok(roots);
        }
        match self.roots_by_divisors(&ints) {
            Some(found) => roots.extend(found),
            None => roots.extend(roots_by_lifting(&ints)?),
        }
        Ok(roots)
    }

    /// Divisor enumeration only; `Ok(None)` when the budget is exceeded.
    pub fn rational_roots_by_divisors(
        &self,
        p: &RationalPolynomial,
    ) -> Result<Option<BTreeSet<Rational>>> {
        let (mut roots, ints) = prepare(p)?;
        if ints.len() <= 1 {
            return Ok(Some(roots));
        }
        match self.roots_by_divisors(&ints) {
            Some(found) => {
                roots.extend(found);
                Ok(Some(roots))
            }
            None => Ok(None),
        }
    }

    fn roots_by_divisors(&self, ints: &[BigInt]) -> Option<BTreeSet<Rational>> {
        let trailing = divisors(&ints[0].abs(), self.factor_budget)?;
        let leading = divisors(&ints[ints.len() - 1].abs(), self.factor_budget)?;
        if trailing.len() * leading.len() * 2 > self.max_candidates {
            return None;
        }
        let mut found = BTreeSet::new();
        for a in &trailing {
            for b in &leading {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for num in [a.clone(), -a] {
                    if eval_homogeneous(ints, &num, b).is_zero() {
                        found.insert(Rational::new(num, b.clone()));
                    }
                }
            }
        }
        Some(found)
    }
}

/// Rational roots via p-adic lifting, with no factoring at all.
pub fn rational_roots_by_lifting(p: &RationalPolynomial) -> Result<BTreeSet<Rational>> {
    let (mut roots, ints) = prepare(p)?;
    if ints.len() > 1 {
        roots.extend(roots_by_lifting(&ints)?);
    }
    Ok(roots)
}

/// Square-free primitive integer form with the root at zero split off.
fn prepare(p: &RationalPolynomial) -> Result<(BTreeSet<Rational>, Vec<BigInt>)> {
    if p.is_zero() {
        return Err(Error::Domain(
            "rational roots of the zero polynomial".into(),
        ));
    }
    let mut roots = BTreeSet::new();
    let mut p = p.clone();
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.insert(Rational::zero());
        p = RationalPolynomial::new(p.coeffs()[zeros..].to_vec());
    }
    if p.degree().unwrap_or(0) >= 2 {
        let g = p.gcd(&p.derivative())?;
        if g.degree().unwrap_or(0) > 0 {
            p = p.div_rem(&g)?.0;
        }
    }
    Ok((roots, p.to_primitive_integer()?))
}

fn low_degree_roots(ints: &[BigInt]) -> Vec<Rational> {
    match ints.len() {
        2 => vec![Rational::new(-&ints[0], ints[1].clone())],
        3 => {
            let (c, b, a) = (&ints[0], &ints[1], &ints[2]);
            let disc = Rational::from_integer(b * b - BigInt::from(4) * a * c);
            if disc.is_negative() {
                return Vec::new();
            }
            match disc.sqrt() {
                Ok(Some(s)) => {
                    let two_a = Rational::from_integer(a * 2);
                    let mb = Rational::from_integer(-b);
                    vec![(&mb + &s) / &two_a, (&mb - &s) / &two_a]
                }
                _ => Vec::new(),
            }
        }
        _ => Vec::new(),
    }
}

/// `sum a_i num^i den^(n-i)`, zero exactly when `num/den` is a root.
fn eval_homogeneous(ints: &[BigInt], num: &BigInt, den: &BigInt) -> BigInt {
    let n = ints.len() - 1;
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    // Horner in num, carrying powers of den from the top coefficient down
    for (k, a) in ints.iter().enumerate().rev() {
        if k == n {
            acc = a.clone();
        } else {
            den_pow *= den;
            acc = acc * num + a * &den_pow;
        }
    }
    acc
}

/// Positive divisors of `n`, or `None` when `n` exceeds the factoring budget.
fn divisors(n: &BigInt, budget: u64) -> Option<Vec<BigInt>> {
    let mut n = n.to_u64().filter(|&v| v <= budget)?;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    Some(divs)
}

fn roots_by_lifting(ints: &[BigInt]) -> Result<Vec<Rational>> {
    let n = ints.len() - 1;
    let lead = &ints[n];
    // monic Q(y) = lead^(n-1) P(y / lead)
    let mut monic = Vec::with_capacity(n + 1);
    let mut lead_pow = BigInt::one();
    let mut pows = vec![BigInt::one(); n];
    for slot in pows.iter_mut().rev() {
        *slot = lead_pow.clone();
        lead_pow *= lead;
    }
    for (i, a) in ints.iter().take(n).enumerate() {
        monic.push(a * &pows[i]);
    }
    monic.push(BigInt::one());

    let bound = monic[..n].iter().map(|c| c.abs()).max().unwrap_or_default() + 1;
    let target = bound * 2;
    let deriv: Vec<BigInt> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i)
        .collect();

    let prime = (3u64..)
        .step_by(2)
        .filter(|&p| is_prime(p))
        .take(20_000)
        .find(|&p| simple_roots_mod(&monic, &deriv, p).is_some())
        .ok_or_else(|| Error::Invariant("no prime with simple roots found".into()))?;
    let simple = simple_roots_mod(&monic, &deriv, prime).unwrap_or_default();

    let mut out = Vec::new();
    for r0 in simple {
        let mut modulus = BigInt::from(prime);
        let mut r = BigInt::from(r0);
        while modulus <= target {
            modulus = &modulus * &modulus;
            let fr = eval_mod(&monic, &r, &modulus);
            let dr = eval_mod(&deriv, &r, &modulus);
            let inv = mod_inverse(&dr, &modulus)
                .ok_or_else(|| Error::Invariant("derivative not invertible during lift".into()))?;
            r = (r - fr * inv).mod_floor(&modulus);
        }
        let half = &modulus / 2;
        let y = if r > half { r - &modulus } else { r };
        if eval_int(&monic, &y).is_zero() {
            out.push(Rational::new(y, lead.clone()));
        }
    }
    Ok(out)
}

/// Roots of `poly` modulo `p`, or `None` if any root is not simple.
fn simple_roots_mod(poly: &[BigInt], deriv: &[BigInt], p: u64) -> Option<Vec<u64>> {
    let pm = BigInt::from(p);
    let reduce = |cs: &[BigInt]| -> Vec<u64> {
        cs.iter()
            .map(|c| c.mod_floor(&pm).to_u64().unwrap_or(0))
            .collect()
    };
    let f = reduce(poly);
    let df = reduce(deriv);
    let eval = |cs: &[u64], x: u64| -> u64 {
        cs.iter()
            .rev()
            .fold(0u128, |acc, &c| (acc * x as u128 + c as u128) % p as u128) as u64
    };
    let mut roots = Vec::new();
    for x in 0..p {
        if eval(&f, x) == 0 {
            if eval(&df, x) == 0 {
                return None;
            }
            roots.push(x);
        }
    }
    Some(roots)
}

fn eval_mod(cs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    cs.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn eval_int(cs: &[BigInt], x: &BigInt) -> BigInt {
    cs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::new(cs.iter().map(|&c| z(c)).collect())
    }

    fn set(v: &[Rational]) -> BTreeSet<Rational> {
        v.iter().cloned().collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            poly_rational_roots(&poly(&[6, -5, 1])).unwrap(),
            set(&[z(2), z(3)])
        );
        assert_eq!(
            poly_rational_roots(&poly(&[-1, 2])).unwrap(),
            set(&[q(1, 2)])
        );
        assert_eq!(poly_rational_roots(&poly(&[1, 0, 1])).unwrap(), set(&[]));
        assert_eq!(poly_rational_roots(&poly(&[-2, 0, 1])).unwrap(), set(&[]));
        assert!(poly_rational_roots(&RationalPolynomial::zero()).is_err());
        assert_eq!(poly_rational_roots(&poly(&[5])).unwrap(), set(&[]));
    }

    #[test]
    fn zero_and_repeated_roots() {
        // x^2 (x - 3)^3 (2x + 1)
        let p = RationalPolynomial::from_roots(&[z(0), z(0), z(3), z(3), z(3), q(-1, 2)]);
        let expected = set(&[z(0), z(3), q(-1, 2)]);
        assert_eq!(poly_rational_roots(&p).unwrap(), expected);
        assert_eq!(rational_roots_by_lifting(&p).unwrap(), expected);
    }

    #[test]
    fn lifting_handles_large_coefficients() {
        let big = Rational::new(
            "123456789012345678901234567".parse::<BigInt>().unwrap(),
            "98765432109876543".parse::<BigInt>().unwrap(),
        );
        let p = RationalPolynomial::from_roots(&[big.clone(), q(-7, 3), z(11)])
            * RationalPolynomial::new(vec![z(1), z(0), z(1)]);
        let roots = poly_rational_roots(&p).unwrap();
        assert_eq!(roots, set(&[big, q(-7, 3), z(11)]));
    }

    #[test]
    fn divisor_route_declines_over_budget() {
        let search = RootSearch {
            factor_budget: 100,
            max_candidates: 1000,
        };
        let p = RationalPolynomial::from_roots(&[z(101), z(3), z(1), z(2)]);
        assert_eq!(search.rational_roots_by_divisors(&p).unwrap(), None);
        assert_eq!(
            search.rational_roots(&p).unwrap(),
            set(&[z(101), z(3), z(1), z(2)])
        );
    }

    fn arb_root() -> impl Strategy<Value = Rational> {
        (-60i64..60, 1i64..30).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn planted_roots_found(roots in proptest::collection::vec(arb_root(), 1..=6),
                               scale in (1i64..50, 1i64..50)) {
            let p = RationalPolynomial::from_roots(&roots).scale(&q(scale.0, scale.1));
            let expected: BTreeSet<Rational> = roots.iter().cloned().collect();
            prop_assert_eq!(poly_rational_roots(&p).unwrap(), expected.clone());
            prop_assert_eq!(rational_roots_by_lifting(&p).unwrap(), expected);
        }

        #[test]
        fn planted_roots_with_irreducible_factor(roots in proptest::collection::vec(arb_root(), 1..=4),
                                                 c in 2i64..40) {
            // x^2 + c has no rational roots
            let p = RationalPolynomial::from_roots(&roots)
                * RationalPolynomial::new(vec![z(c), z(0), z(1)]);
            let expected: BTreeSet<Rational> = roots.iter().cloned().collect();
            prop_assert_eq!(poly_rational_roots(&p).unwrap(), expected.clone());
            prop_assert_eq!(rational_roots_by_lifting(&p).unwrap(), expected);
        }

        #[test]
        fn gcd_exposes_common_root(r in arb_root(),
                                   a in proptest::collection::vec(arb_root(), 0..3),
                                   b in proptest::collection::vec(arb_root(), 0..3)) {
            let mut ra = a.clone(); ra.push(r.clone());
            let mut rb = b.clone(); rb.push(r.clone());
            let pa = RationalPolynomial::from_roots(&ra);
            let pb = RationalPolynomial::from_roots(&rb);
            let g = pa.gcd(&pb).unwrap();
            prop_assert!(poly_rational_roots(&g).unwrap().contains(&r));
        }
    }
}
