//! Deterministic prime generation.
//!
//! A segmented sieve of Eratosthenes stores only odd candidates. Segments are
//! independent once the base primes up to `√hi` are known, so they are sieved
//! through [`Exec`].

use crate::error::{Result, ZetaError};
use crate::exec::Exec;

/// Integers covered by one sieve segment.
const SEGMENT_SPAN: u64 = 1 << 18;

/// Default memory cap for a [`PrimeStream`], in bytes.
pub const DEFAULT_MEMORY_CAP: usize = 256 << 20;

/// Primes `≤ limit` by a plain odd-only sieve; used for base primes.
fn small_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let half = (limit / 2 + 1) as usize;
    // index i stands for 2i + 1
    let mut composite = vec![false; half];
    composite[0] = true;
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut out = vec![2];
    out.extend(
        composite
            .iter()
            .enumerate()
            .filter(|(i, &c)| !c && (2 * *i as u64 + 1) <= limit)
            .map(|(i, _)| 2 * i as u64 + 1),
    );
    out
}

/// Primes in `[lo, hi]` using odd base primes (2 is handled by the caller).
fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let start = if lo <= 3 { 3 } else { lo | 1 };
    if start > hi {
        return Vec::new();
    }
    let count = ((hi - start) / 2 + 1) as usize;
    // index i stands for start + 2i
    let mut composite = vec![false; count];
    for &p in base.iter().skip(1) {
        if p * p > hi {
            break;
        }
        let mut m = (start.max(p * p)).div_ceil(p) * p;
        if m % 2 == 0 {
            m += p;
        }
        let mut idx = ((m - start) / 2) as usize;
        while idx < count {
            composite[idx] = true;
            idx += p as usize;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| start + 2 * i as u64)
        .collect()
}

/// All primes in `[lo, hi]`, ascending.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    primes_between_with(lo, hi, Exec::default())
}

/// [`primes_between`] with an explicit execution strategy.
pub fn primes_between_with(lo: u64, hi: u64, exec: Exec) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let base = small_sieve(hi.isqrt());
    let mut segments = Vec::new();
    let mut a = lo;
    loop {
        let b = a.saturating_add(SEGMENT_SPAN - 1).min(hi);
        segments.push((a, b));
        if b == hi {
            break;
        }
        a = b + 1;
    }
    let mut out = Vec::new();
    if lo <= 2 {
        out.push(2);
    }
    for block in exec.map(&segments, |&(a, b)| sieve_segment(a, b, &base)) {
        out.extend(block);
    }
    out
}

/// All primes `≤ n`, ascending; empty for `n < 2`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    primes_between(0, n)
}

/// Upper estimate of `π(x)` (Rosser–Schoenfeld style), for memory planning.
fn prime_count_upper(x: u64) -> u64 {
    if x < 17 {
        return 7;
    }
    let xf = x as f64;
    (1.26 * xf / xf.ln()).ceil() as u64
}

/// Incremental generator of primes in increasing order starting at 2.
///
/// Owns a buffer with the primes of the most recent sieve block. Asking past
/// `sieve_bound` sieves the next block up to at least twice the bound.
#[derive(Debug, Clone)]
pub struct PrimeStream {
    sieve_bound: u64,
    emitted: u64,
    block: Vec<u64>,
    cursor: usize,
    memory_cap: usize,
}

impl Default for PrimeStream {
    fn default() -> Self {
        Self::new()
    }
}

impl PrimeStream {
    pub fn new() -> Self {
        Self::with_memory_cap(DEFAULT_MEMORY_CAP)
    }

    /// Stream whose sieve blocks may not exceed `bytes` of storage.
    pub fn with_memory_cap(bytes: usize) -> Self {
        PrimeStream {
            sieve_bound: 0,
            emitted: 0,
            block: Vec::new(),
            cursor: 0,
            memory_cap: bytes,
        }
    }

    /// Every prime `≤ sieve_bound` has been produced by the sieve.
    pub fn sieve_bound(&self) -> u64 {
        self.sieve_bound
    }

    /// Primes handed out so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn next_prime(&mut self) -> Result<u64> {
        while self.cursor == self.block.len() {
            self.grow()?;
        }
        let p = self.block[self.cursor];
        self.cursor += 1;
        self.emitted += 1;
        Ok(p)
    }

    fn grow(&mut self) -> Result<()> {
        let lo = self.sieve_bound + 1;
        let hi = self.sieve_bound.saturating_mul(2).max(1024);
        let primes_bytes = (prime_count_upper(hi)
            - prime_count_upper(lo).min(prime_count_upper(hi))) as usize
            * std::mem::size_of::<u64>();
        let sieve_bytes = ((hi - lo) / 2) as usize;
        let need = primes_bytes + sieve_bytes.min(SEGMENT_SPAN as usize);
        if need > self.memory_cap {
            return Err(ZetaError::Resource(format!(
                "sieving to {hi} needs about {need} bytes, cap is {}",
                self.memory_cap
            )));
        }
        self.block = primes_between(lo, hi);
        self.cursor = 0;
        self.sieve_bound = hi;
        Ok(())
    }
}

impl Iterator for PrimeStream {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        self.next_prime().ok()
    }
}

/// Advances `stream` and returns its next prime.
pub fn next_prime(stream: &mut PrimeStream) -> Result<u64> {
    stream.next_prime()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(0), Vec::<u64>::new());
        assert_eq!(primes_up_to(3), vec![2, 3]);
        assert_eq!(primes_up_to(9), vec![2, 3, 5, 7]);
    }

    #[test]
    fn segments_join_without_gaps() {
        let lo = SEGMENT_SPAN - 50;
        let hi = 3 * SEGMENT_SPAN + 17;
        let all = primes_up_to(hi);
        let part: Vec<u64> = all.iter().copied().filter(|&p| p >= lo).collect();
        assert_eq!(primes_between(lo, hi), part);
        assert_eq!(primes_up_to(1_000_000).len(), 78_498);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = primes_between_with(0, 2_000_000, Exec::Sequential);
        let b = primes_between_with(0, 2_000_000, Exec::Parallel);
        assert_eq!(a, b);
    }

    #[test]
    fn stream_starts_at_two() {
        let mut s = PrimeStream::new();
        assert_eq!(s.next_prime().unwrap(), 2);
        assert_eq!(s.next_prime().unwrap(), 3);
        let mut last = 0;
        for _ in 2..25 {
            last = s.next_prime().unwrap();
        }
        assert_eq!(last, 97);
        assert_eq!(s.emitted(), 25);
    }

    #[test]
    fn stream_respects_memory_cap() {
        let mut s = PrimeStream::with_memory_cap(4096);
        let mut err = None;
        for _ in 0..100_000 {
            if let Err(e) = s.next_prime() {
                err = Some(e);
                break;
            }
        }
        assert!(matches!(err, Some(ZetaError::Resource(_))));
    }
}
