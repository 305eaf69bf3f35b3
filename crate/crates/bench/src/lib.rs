//! Shared input builders for the benchmark targets.

use std::sync::Arc;

use wittcode::freealg::{Alphabet, NcSeries, Word};
use wittcode::rational::ratio;

/// A dense-ish random series over `{a, b}`: every word of length ≤ 4 with
/// a small deterministic coefficient.
pub fn dense_series(truncation: u32) -> NcSeries {
    let alphabet: Arc<Alphabet> = Alphabet::binary();
    let mut out = NcSeries::zero(alphabet, truncation);
    let mut state = 0x9e37u64;
    for len in 0..=4u32 {
        for index in 0..(1u32 << len) {
            let ids: Vec<u32> = (0..len).map(|b| (index >> b) & 1).collect();
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let num = ((state >> 33) % 9) as i64 - 4;
            if num != 0 {
                out.add_term(Word::from_ids(ids), ratio(num, 1 + (len as i64 % 3)))
                    .unwrap();
            }
        }
    }
    out
}
