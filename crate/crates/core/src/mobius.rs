//! Linear (Euler) sieve for the Möbius function.
//!
//! mu(n) is +1 on 1, -1 on primes, 0 on numbers with a square factor, and
//! otherwise (-1)^r for a squarefree product of r distinct primes. The sieve
//! touches every integer once via its smallest prime factor, so construction
//! is O(limit). Storage is one signed byte per entry plus a transient
//! composite bitset (1/8 byte per entry) and the prime list.

use crate::error::{Error, Result};

/// Hard ceiling on sieve size: 1e9 entries is ~1 GiB of mu values.
pub const MAX_SIEVE_ENTRIES: u64 = 1_000_000_000;

/// Sieved mu values for 1..=limit. Immutable once built; share freely
/// across threads.
pub struct MobiusTable {
    values: Vec<i8>, // index 0 is padding
}

/// Build the table for all n in 1..=limit.
pub fn build_sieve(limit: u64) -> Result<MobiusTable> {
    if limit == 0 || limit > MAX_SIEVE_ENTRIES {
        return Err(Error::SieveLimit {
            limit,
            ceiling: MAX_SIEVE_ENTRIES,
            mib: limit >> 20,
        });
    }
    let n = limit as usize;
    let mut values = vec![0i8; n + 1];
    values[1] = 1;

    let mut composite = vec![0u64; n / 64 + 1];
    let is_composite = |bits: &[u64], i: usize| bits[i >> 6] & (1 << (i & 63)) != 0;

    // generous upper bound on pi(n) for the prime list capacity
    let cap = if n > 100 {
        (n as f64 / (n as f64).ln() * 1.2) as usize
    } else {
        32
    };
    let mut primes: Vec<u32> = Vec::with_capacity(cap);

    for i in 2..=n {
        if !is_composite(&composite, i) {
            primes.push(i as u32);
            values[i] = -1;
        }
        for &p in &primes {
            let p = p as usize;
            let Some(ip) = i.checked_mul(p) else { break };
            if ip > n {
                break;
            }
            composite[ip >> 6] |= 1 << (ip & 63);
            if i % p == 0 {
                values[ip] = 0;
                break;
            }
            values[ip] = -values[i];
        }
    }

    Ok(MobiusTable { values })
}

impl MobiusTable {
    /// Largest n this table covers.
    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// mu(n) for 1 <= n <= limit.
    pub fn mu(&self, n: u64) -> Result<i8> {
        if n == 0 || n > self.limit() {
            return Err(Error::OutOfRange {
                n,
                limit: self.limit(),
            });
        }
        Ok(self.values[n as usize])
    }

    /// Raw values, 1-indexed (entry 0 is padding and always 0... except it
    /// is never read).
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// Iterate (n, mu(n)) over the squarefree n only.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (u64, i8)> + '_ {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &m)| m != 0)
            .map(|(n, &m)| (n as u64, m))
    }
}
