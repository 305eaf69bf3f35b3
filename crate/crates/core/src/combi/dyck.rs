//! Dyck words, their primes, and the half-length-graded specialization.
//!
//! A Dyck word is a balanced word over `{a, b}` whose prefixes never close
//! more than they open. The *primes* are the words `a·u·b` with `u` Dyck;
//! they freely generate the Dyck language, and there are `Catalan(n-1)`
//! primes of length `2n`.

use std::sync::{Arc, OnceLock};

use crate::codes::dyck_rho;
use crate::freealg::{Alphabet, NcSeries, Word};
use crate::rational::rat;
use crate::{Error, Result};

/// All Dyck words of the given length as 0/1 vectors (0 = `a`, 1 = `b`),
/// in lexicographic order. Odd lengths give the empty list.
pub fn dyck_words_raw(len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(len);
    fn rec(remaining: usize, open: usize, buf: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if remaining == 0 {
            if open == 0 {
                out.push(buf.clone());
            }
            return;
        }
        if open < remaining {
            buf.push(0);
            rec(remaining - 1, open + 1, buf, out);
            buf.pop();
        }
        if open > 0 {
            buf.push(1);
            rec(remaining - 1, open - 1, buf, out);
            buf.pop();
        }
    }
    if len.is_multiple_of(2) {
        rec(len, 0, &mut buf, &mut out);
    }
    out
}

/// The prime Dyck words of the given length over `{a, b}`, sorted. There
/// are `Catalan(len/2 - 1)` of them; odd lengths give none.
pub fn dyck_primes(len: u32) -> Vec<Word> {
    if len < 2 || !len.is_multiple_of(2) {
        return Vec::new();
    }
    let inner = dyck_words_raw(len as usize - 2);
    let mut out: Vec<Word> = inner
        .into_iter()
        .map(|u| {
            let mut ids = Vec::with_capacity(len as usize);
            ids.push(0);
            ids.extend(u.iter().map(|&x| x as u32));
            ids.push(1);
            Word::from_ids(ids)
        })
        .collect();
    out.sort();
    out
}

/// The alphabet of letter pairs `{aa, ab, ba, bb}`, each of weight 1 — the
/// ambient alphabet for the half-length grading `ρ`.
pub fn pair_alphabet() -> Arc<Alphabet> {
    static CACHE: OnceLock<Arc<Alphabet>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            Alphabet::new([("aa", 1), ("ab", 1), ("ba", 1), ("bb", 1)]).expect("pair alphabet")
        })
        .clone()
}

/// Prime Dyck words of half-length `rho`, re-encoded over the pair
/// alphabet (every prime has even length, so the pairing is exact).
pub fn dyck_primes_paired(rho: u32) -> Vec<Word> {
    let mut out: Vec<Word> = dyck_primes(2 * rho)
        .into_iter()
        .map(|w| pair_word(w.ids()))
        .collect();
    out.sort();
    out
}

fn pair_word(ids: &[u32]) -> Word {
    debug_assert!(ids.len().is_multiple_of(2));
    let paired = ids
        .chunks(2)
        .map(|pair| pair[0] * 2 + pair[1])
        .collect::<Vec<_>>();
    Word::from_ids(paired)
}

/// The noncommutative power sum `Φ_n` of the half-length-graded Dyck
/// specialization: `n` times the weight-`n` part of `log σ`, where `σ` is
/// the characteristic series of the Dyck monoid.
pub fn dyck_phi(n: u32) -> Result<NcSeries> {
    if n == 0 {
        return Err(Error::InvalidArgument("need n ≥ 1".into()));
    }
    let code = dyck_rho();
    let sigma = code.sigma_series(n)?;
    let phi = sigma.log()?.graded_part(n)?;
    Ok(phi.scale(&rat(n as i64)))
}
