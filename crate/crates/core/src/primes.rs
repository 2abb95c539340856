//! Prime generation for sweeps.

/// Odd and even primes in `lo..=hi` by a sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2)..=hi).filter(|&k| !composite[k as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    #[test]
    fn small_ranges() {
        assert_eq!(primes_in(0, 20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_in(5, 13), vec![5, 7, 11, 13]);
        assert!(primes_in(24, 28).is_empty());
        assert!(primes_in(10, 2).is_empty());
    }

    #[test]
    fn agrees_with_miller_rabin() {
        let sieved = primes_in(1, 5000);
        let tested: Vec<u64> = (1..=5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, tested);
    }
}
