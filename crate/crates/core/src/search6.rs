//! Exhaustive check of all six-qubit staircase Toffoli circuits.
//!
//! A staircase circuit on six qubits is fixed by the subset of the 20 gates
//! `TOF_{i,j,k}` (`i < j < k`) it uses, so the search runs over 20-bit
//! masks. Truth tables of the six output coordinates are held bit-sliced in
//! six `u64` words; bit `x` of word `q` is coordinate `q + 1` of the image of
//! basis state `x`, so one Toffoli is a single AND and XOR.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::pauli::PauliSubgroup;
use crate::permgate::{low_degree_mask, mobius_word, Circuit, Gate, PermutationGate};

pub const N: usize = 6;
pub const GATE_COUNT: usize = 20;
pub const TOTAL_MASKS: u32 = 1 << GATE_COUNT;
pub const CHUNK: u32 = 1 << 12;

/// `(i, j, k)` for every Toffoli with `i < j < k ≤ 6`, sorted by `(k, j, i)`.
/// Bit `b` of a mask selects `UNIVERSE[b]`.
pub const UNIVERSE: [(usize, usize, usize); GATE_COUNT] = universe();

const fn universe() -> [(usize, usize, usize); GATE_COUNT] {
    let mut out = [(0, 0, 0); GATE_COUNT];
    let mut idx = 0;
    let mut k = 3;
    while k <= N {
        let mut j = 2;
        while j < k {
            let mut i = 1;
            while i < j {
                out[idx] = (i, j, k);
                idx += 1;
                i += 1;
            }
            j += 1;
        }
        k += 1;
    }
    out
}

/// The candidate subgroups, tried in this order.
pub const CERT_SUBGROUPS: [[&str; 6]; 5] = [
    ["Z1", "Z2", "Z3Z4", "X3X4", "X5", "X6"],
    ["Z1", "Z2", "Z3", "Z4Z5", "X4X5", "X6"],
    ["Z1", "Z2", "Z3Z5", "Z4", "X3X5", "X6"],
    ["Z1", "Z2", "Z3Z5", "Z4Z5", "X3X4X5", "X6"],
    ["Z1", "Z2", "Z3Z4", "Z5", "X3X4", "X6"],
];

/// Parses the candidate subgroups and checks each is maximal abelian.
pub fn cert_subgroups() -> Vec<PauliSubgroup> {
    CERT_SUBGROUPS
        .iter()
        .map(|gens| {
            let g = PauliSubgroup::parse(N, gens).expect("certificate subgroup is abelian");
            assert!(g.is_maximal(), "certificate subgroup {g} is not maximal");
            g
        })
        .collect()
}

/// `(u, v)` bit masks over coordinates (bit `q` is qubit `q + 1`) for each
/// generator `XᵘZᵛ` of each subgroup.
fn cert_generators() -> [[(u8, u8); 6]; 5] {
    let mut out = [[(0, 0); 6]; 5];
    for (s, group) in cert_subgroups().iter().enumerate() {
        for (g, p) in group.generators().iter().enumerate() {
            let to_mask = |v: crate::f2::F2Vector| v.ones().fold(0u8, |m, i| m | 1 << i);
            out[s][g] = (to_mask(p.x()), to_mask(p.z()));
        }
    }
    out
}

pub fn circuit6(mask: u32) -> Circuit {
    sequence_circuit(&gate_indices(mask))
}

fn sequence_circuit(order: &[usize]) -> Circuit {
    let gates = order
        .iter()
        .map(|&b| {
            let (i, j, k) = UNIVERSE[b];
            Gate::tof(i, j, k)
        })
        .collect();
    Circuit::new(N, gates).expect("universe gates are valid")
}

/// Selected gate indices in canonical order.
pub fn gate_indices(mask: u32) -> Vec<usize> {
    (0..GATE_COUNT).filter(|b| mask >> b & 1 == 1).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct Slices([u64; N]);

impl Slices {
    const IDENTITY: Slices = Slices(identity_words());

    #[inline]
    fn run(mut self, order: impl Iterator<Item = usize>) -> Self {
        for b in order {
            let (i, j, k) = UNIVERSE[b];
            self.0[k - 1] ^= self.0[i - 1] & self.0[j - 1];
        }
        self
    }

    #[inline]
    fn flip(mut self, coords: u8) -> Self {
        for q in 0..N {
            if coords >> q & 1 == 1 {
                self.0[q] = !self.0[q];
            }
        }
        self
    }

    fn to_permutation(self) -> PermutationGate {
        let table = (0..64)
            .map(|x| {
                (0..N).fold(0u32, |acc, q| {
                    acc | ((self.0[q] >> x & 1) as u32) << (N - 1 - q)
                })
            })
            .collect();
        PermutationGate::from_table(N, table).expect("Toffoli circuits are bijections")
    }
}

const fn identity_words() -> [u64; N] {
    let mut w = [0u64; N];
    let mut q = 0;
    while q < N {
        let mut x = 0;
        while x < 64 {
            if (x >> (N - 1 - q)) & 1 == 1 {
                w[q] |= 1 << x;
            }
            x += 1;
        }
        q += 1;
    }
    w
}

const LINEAR: u64 = low_degree_mask(1);
const QUADRATIC: u64 = low_degree_mask(2);

#[inline]
fn degree_at_most(word: u64, mask: u64) -> bool {
    mobius_word(word) & !mask == 0
}

pub fn build_perm6(mask: u32) -> PermutationGate {
    Slices::IDENTITY
        .run(gate_indices(mask).into_iter())
        .to_permutation()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    NotC3,
    C3MismatchFree,
    /// Index into [`CERT_SUBGROUPS`] of the first subgroup that works.
    C3Certified(usize),
    C3Uncertified,
}

/// Classifies the circuit of `mask` with gates applied in canonical order.
pub fn check_one(mask: u32) -> Classification {
    Checker::new().classify(&gate_indices(mask))
}

/// Classifies the given gate sequence (indices into [`UNIVERSE`], applied in
/// this order).
pub fn classify_sequence(order: &[usize]) -> Classification {
    Checker::new().classify(order)
}

struct Checker {
    certs: [[(u8, u8); 6]; 5],
}

impl Checker {
    fn new() -> Self {
        Self {
            certs: cert_generators(),
        }
    }

    fn classify(&self, order: &[usize]) -> Classification {
        let inv = Slices::IDENTITY.run(order.iter().rev().copied());
        // πZⱼπ⁻¹ is Clifford iff coordinate j of π⁻¹ has degree ≤ 2.
        if !inv.0.iter().all(|&w| degree_at_most(w, QUADRATIC)) {
            return Classification::NotC3;
        }
        // πXⱼπ⁻¹ : v ↦ π(π⁻¹(v) + eⱼ) must be affine.
        for q in 0..N {
            let conj = inv.flip(1 << q).run(order.iter().copied());
            if !conj.0.iter().all(|&w| degree_at_most(w, LINEAR)) {
                return Classification::NotC3;
            }
        }

        let (mut controls, mut targets) = (0u8, 0u8);
        for &b in order {
            let (i, j, k) = UNIVERSE[b];
            controls |= 1 << (i - 1) | 1 << (j - 1);
            targets |= 1 << (k - 1);
        }
        if controls & targets == 0 {
            return Classification::C3MismatchFree;
        }

        for (s, gens) in self.certs.iter().enumerate() {
            if gens
                .iter()
                .all(|&(u, v)| self.conjugate_is_pauli(&inv, order, u, v))
            {
                return Classification::C3Certified(s);
            }
        }
        Classification::C3Uncertified
    }

    /// `πXᵘZᵛπ⁻¹` splits as `(πXᵘπ⁻¹)(πZᵛπ⁻¹)`; it is Pauli iff the first
    /// factor is a translation and `v·π⁻¹` is affine.
    fn conjugate_is_pauli(&self, inv: &Slices, order: &[usize], u: u8, v: u8) -> bool {
        if u != 0 {
            let conj = inv.flip(u).run(order.iter().copied());
            let ok = (0..N).all(|q| {
                let d = conj.0[q] ^ Slices::IDENTITY.0[q];
                d == 0 || d == u64::MAX
            });
            if !ok {
                return false;
            }
        }
        let combined = (0..N)
            .filter(|q| v >> q & 1 == 1)
            .fold(0u64, |acc, q| acc ^ inv.0[q]);
        degree_at_most(combined, LINEAR)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub total: u64,
    pub c3_count: u64,
    /// Masks in C₃ whose circuit is mismatch-free.
    pub mismatch_free_count: u64,
    /// Per candidate subgroup, how many masks it certified first.
    pub certified_by: [u64; 5],
    /// Masks in C₃ that neither test accepted.
    pub failures: Vec<u32>,
    pub wall_time_secs: f64,
    pub thread_count: usize,
}

impl SearchReport {
    fn empty() -> Self {
        Self {
            total: 0,
            c3_count: 0,
            mismatch_free_count: 0,
            certified_by: [0; 5],
            failures: Vec::new(),
            wall_time_secs: 0.0,
            thread_count: 0,
        }
    }

    fn record(&mut self, mask: u32, c: Classification) {
        self.total += 1;
        match c {
            Classification::NotC3 => return,
            Classification::C3MismatchFree => self.mismatch_free_count += 1,
            Classification::C3Certified(s) => self.certified_by[s] += 1,
            Classification::C3Uncertified => self.failures.push(mask),
        }
        self.c3_count += 1;
    }

    fn merge(&mut self, other: SearchReport) {
        self.total += other.total;
        self.c3_count += other.c3_count;
        self.mismatch_free_count += other.mismatch_free_count;
        for (a, b) in self.certified_by.iter_mut().zip(other.certified_by) {
            *a += b;
        }
        self.failures.extend(other.failures);
    }

    pub fn certified_count(&self) -> u64 {
        self.certified_by.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SearchError {
    #[error("{} C3 staircase masks were not certified (first: {:#07x})", .masks.len(), .masks[0])]
    CertificationFailure {
        masks: Vec<u32>,
        report: Box<SearchReport>,
    },
    #[error("thread count must be at least 1")]
    NoThreads,
}

/// Classifies masks `range` and tallies the results.
pub fn search_range(range: std::ops::Range<u32>) -> SearchReport {
    let checker = Checker::new();
    let mut report = SearchReport::empty();
    for mask in range {
        report.record(mask, checker.classify(&gate_indices(mask)));
    }
    report
}

/// Runs every mask across `threads` workers. Chunks of [`CHUNK`] masks are
/// dealt round-robin, so the counts do not depend on the thread count.
pub fn run_search(threads: usize) -> Result<SearchReport, SearchError> {
    run_masks(threads, TOTAL_MASKS)
}

/// [`run_search`] restricted to masks `0..limit`.
pub fn run_masks(threads: usize, limit: u32) -> Result<SearchReport, SearchError> {
    if threads == 0 {
        return Err(SearchError::NoThreads);
    }
    cert_subgroups();
    let start = Instant::now();
    let chunks = limit.div_ceil(CHUNK);
    let mut report = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads as u32)
            .map(|w| {
                scope.spawn(move || {
                    let mut local = SearchReport::empty();
                    for c in (w..chunks).step_by(threads) {
                        let lo = c * CHUNK;
                        local.merge(search_range(lo..(lo + CHUNK).min(limit)));
                    }
                    local
                })
            })
            .collect();
        let mut total = SearchReport::empty();
        for w in workers {
            total.merge(w.join().expect("search worker panicked"));
        }
        total
    });
    report.failures.sort_unstable();
    report.wall_time_secs = start.elapsed().as_secs_f64();
    report.thread_count = threads;
    if report.failures.is_empty() {
        Ok(report)
    } else {
        Err(SearchError::CertificationFailure {
            masks: report.failures.clone(),
            report: Box::new(report),
        })
    }
}

/// `k` distinct masks drawn uniformly with a seeded generator.
pub fn sample_masks(k: usize, seed: u64) -> Vec<u32> {
    let mut rng = StdRng::seed_from_u64(seed);
    rand::seq::index::sample(&mut rng, TOTAL_MASKS as usize, k.min(TOTAL_MASKS as usize))
        .into_iter()
        .map(|m| m as u32)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub sampled: usize,
    pub c3_sampled: usize,
    /// Masks where the direct semi-Clifford test disagreed.
    pub disagreements: Vec<u32>,
}

/// Compares the classification of sampled C₃ masks with the general
/// semi-Clifford test.
pub fn cross_check(masks: impl IntoIterator<Item = u32>) -> CrossCheck {
    let checker = Checker::new();
    let mut out = CrossCheck {
        sampled: 0,
        c3_sampled: 0,
        disagreements: Vec::new(),
    };
    for mask in masks {
        out.sampled += 1;
        let c = checker.classify(&gate_indices(mask));
        if c == Classification::NotC3 {
            continue;
        }
        out.c3_sampled += 1;
        let certified = c != Classification::C3Uncertified;
        let semi = crate::decomp::is_semi_clifford(&build_perm6(mask)).is_some();
        if certified != semi {
            out.disagreements.push(mask);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgate::SignedPermGate;

    fn mask_of(gates: &[(usize, usize, usize)]) -> u32 {
        gates
            .iter()
            .map(|g| 1u32 << UNIVERSE.iter().position(|u| u == g).unwrap())
            .sum()
    }

    #[test]
    fn universe_is_sorted_by_target() {
        assert_eq!(UNIVERSE[0], (1, 2, 3));
        assert_eq!(UNIVERSE[19], (4, 5, 6));
        let mut sorted = UNIVERSE;
        sorted.sort_by_key(|&(i, j, k)| (k, j, i));
        assert_eq!(sorted, UNIVERSE);
        assert!(crate::permgate::is_staircase(&circuit6(TOTAL_MASKS - 1)));
    }

    #[test]
    fn subgroups_are_maximal() {
        assert_eq!(cert_subgroups().len(), 5);
    }

    #[test]
    fn build_examples() {
        assert!(build_perm6(0).is_identity());
        let tof = PermutationGate::from_circuit(&Circuit::parse("qubits 6\nTOF 1 2 3").unwrap());
        assert_eq!(build_perm6(1), tof.unwrap());
        let m = mask_of(&[(1, 2, 3), (3, 4, 5)]);
        assert_eq!(
            build_perm6(m),
            PermutationGate::from_circuit(&circuit6(m)).unwrap()
        );
    }

    #[test]
    fn classification_examples() {
        assert_eq!(check_one(0), Classification::C3MismatchFree);
        assert_eq!(
            check_one(mask_of(&[(1, 2, 3), (3, 4, 5)])),
            Classification::NotC3
        );
        let m = mask_of(&[(1, 2, 4), (1, 3, 4), (1, 2, 3)]);
        let scalar = crate::permgate::is_c3(&SignedPermGate::from(build_perm6(m)));
        assert_eq!(check_one(m) != Classification::NotC3, scalar);
    }

    #[test]
    fn partial_run_is_thread_independent() {
        let a = run_masks(1, 3 * CHUNK + 100).unwrap();
        let b = run_masks(3, 3 * CHUNK + 100).unwrap();
        assert_eq!(a.total, u64::from(3 * CHUNK + 100));
        assert_eq!(
            (a.c3_count, a.mismatch_free_count, a.certified_by),
            (b.c3_count, b.mismatch_free_count, b.certified_by)
        );
        assert!(matches!(run_masks(0, 10), Err(SearchError::NoThreads)));
    }
}
