// Copyright 2026 Fixnet Developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Duplicate detection over recent zero-flow signatures.

/// Result of checking one signature against the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DupOutcome {
    /// No match; the signature was recorded.
    Fresh,
    /// Matched the entry `position` steps from the newest (1 = newest).
    Match { position: usize },
    /// Matched, and the match count passed its limit: diversify now.
    Diversify { position: usize },
}

/// Wraparound list of the `sLim` latest signatures plus per-arc zero counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DupMemory {
    slots: Vec<Vec<bool>>,
    first: usize,
    sum_zero: Vec<u64>,
    n_match: usize,
    lim_match: usize,
    pub recover: u64,
    pub max_recover: u64,
    pub s_max: usize,
}

impl DupMemory {
    /// Seeds the ring with `zero_now` in the newest slot; the counts start
    /// from the same signature.
    pub fn new(zero_now: &[bool], s_lim: usize, lim_match: usize) -> Self {
        assert!(s_lim >= 1);
        let mut slots = vec![vec![false; zero_now.len()]; s_lim];
        slots[0].copy_from_slice(zero_now);
        DupMemory {
            slots,
            first: 0,
            sum_zero: zero_now.iter().map(|&z| z as u64).collect(),
            n_match: 0,
            lim_match,
            recover: 0,
            max_recover: 0,
            s_max: 0,
        }
    }

    pub fn s_lim(&self) -> usize {
        self.slots.len()
    }

    pub fn n_match(&self) -> usize {
        self.n_match
    }

    pub fn sum_zero(&self) -> &[u64] {
        &self.sum_zero
    }

    /// Ring contents from newest to oldest.
    pub fn newest_first(&self) -> impl Iterator<Item = &[bool]> + '_ {
        let s_lim = self.slots.len();
        (0..s_lim).map(move |k| self.slots[(self.first + k) % s_lim].as_slice())
    }

    /// Looks for `zero_now` among the stored signatures, newest first.
    /// Without a match the signature is counted and overwrites the oldest
    /// slot.
    pub fn check(&mut self, zero_now: &[bool]) -> DupOutcome {
        let s_lim = self.slots.len();
        let position = (0..s_lim)
            .find(|k| self.slots[(self.first + k) % s_lim] == zero_now)
            .map(|k| k + 1);
        if let Some(position) = position {
            self.n_match += 1;
            if self.n_match > self.lim_match {
                self.s_max = self.s_max.max(position);
                self.n_match = 0;
                return DupOutcome::Diversify { position };
            }
            return DupOutcome::Match { position };
        }
        if self.n_match > 0 {
            self.recover += 1;
            self.max_recover = self.max_recover.max(self.recover);
            self.n_match = 0;
        }
        for (s, &z) in self.sum_zero.iter_mut().zip(zero_now) {
            *s += z as u64;
        }
        let last = (self.first + s_lim - 1) % s_lim;
        self.slots[last].copy_from_slice(zero_now);
        self.first = last;
        DupOutcome::Fresh
    }

    /// Re-initializes the ring after a diversification. Counts are cleared
    /// only when `pass` is a multiple of `zero_refresh`.
    pub fn restart(&mut self, zero_now: &[bool], pass: usize, zero_refresh: usize) {
        self.first = 0;
        self.slots[0].copy_from_slice(zero_now);
        for slot in &mut self.slots[1..] {
            slot.fill(false);
        }
        if pass.is_multiple_of(zero_refresh) {
            self.sum_zero.fill(0);
        }
    }
}
