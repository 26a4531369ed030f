//! Integer factorisation for lattice indices.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 100_000;

/// Prime factorisation as `prime -> exponent`. `0` and `1` have no factors.
pub fn prime_factors(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return out;
    }
    let mut n = n.clone();
    let mut d = 2u32;
    while d < TRIAL_LIMIT && BigUint::from(d) * BigUint::from(d) <= n {
        let bd = BigUint::from(d);
        while (&n % &bd).is_zero() {
            *out.entry(bd.clone()).or_insert(0) += 1;
            n /= &bd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let f = pollard_rho(&m);
        stack.push(&m / &f);
        stack.push(f);
    }
    out
}

/// Miller-Rabin with the first twelve prime bases; deterministic below
/// 3.3e24 and overwhelmingly reliable above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    let bases = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in bases {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let nm1 = n - 1u32;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'outer: for b in bases {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigUint::from(2u32), BigUint::from(2u32), BigUint::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if d != *n {
            return d;
        }
        c += 1u32;
    }
}

/// Convenience for small values.
pub fn prime_factors_u64(n: u64) -> Vec<u64> {
    prime_factors(&BigUint::from(n))
        .into_keys()
        .map(|p| p.to_u64().expect("fits"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_small_and_large() {
        assert_eq!(prime_factors_u64(256), vec![2]);
        assert_eq!(prime_factors_u64(360), vec![2, 3, 5]);
        assert!(prime_factors_u64(1).is_empty());
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let f = prime_factors(&(&p * &q * 4u32));
        assert_eq!(f.get(&p), Some(&1));
        assert_eq!(f.get(&q), Some(&1));
        assert_eq!(f.get(&BigUint::from(2u32)), Some(&2));
    }
}
