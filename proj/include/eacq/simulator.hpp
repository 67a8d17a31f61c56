#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>

#include "eacq/code.hpp"
#include "eacq/correction.hpp"
#include "eacq/pauli.hpp"

namespace eacq {

// A stabilizer state on the sender's n qubits plus the receiver's e qubits,
// tracked exactly: `gens` holds n + e independent, pairwise-commuting
// generator rows and `signs` one measured-sign bit per row. Pauli noise
// never changes the generators, only their signs, so the whole lifecycle is
// sign bookkeeping; a global phase of the underlying state vector has no
// representation here and is therefore unobservable.
//
// Row layout for encoded states: the s + 2e extended h_quantum rows first,
// then the q extended logical-Z rows.
struct StabState {
  std::size_t n_alice = 0;  // noisy qubits (leading columns)
  std::size_t n_bob = 0;    // noiseless entangled halves (trailing columns)
  SympMat gens;
  BitVec signs;

  std::size_t num_qubits() const { return n_alice + n_bob; }
};

// Encoded state for a classical index (c bits) and a Z-basis logical
// payload (q bits): the extended h_quantum rows carry the signs of
// codeword_sign_vector(code, index), the logical-Z rows carry the payload
// bits, and consequently every stabilizer generator of S_Q has sign zero.
// Throws Error on wrong argument lengths or if the assembled generator set
// is rank-deficient (an inconsistent code object).
StabState encode(const EacqCode& code, const BitVec& classical_index,
                 const BitVec& logical_bits);

// Applies a Pauli error on the sender's qubits: the sign of each generator
// flips exactly when it anticommutes with the error. Accepts a vector over
// n qubits, or over n + e qubits if its receiver support is empty; anything
// touching the receiver's columns throws (those qubits are noiseless by
// assumption). The phase of a PauliOp is ignored: conjugation by a Pauli is
// insensitive to it.
void apply_error(StabState& state, const SympVec& err);
void apply_error(StabState& state, const PauliOp& err);

// Current signs of the stabilizer generators of S_Q, i.e. the syndrome the
// receiver extracts by measuring them. Equals h_classical times the signs
// of the h_quantum rows, is zero on a freshly encoded state, and after an
// error equals syndrome(code, error). Deterministic: Pauli noise never
// creates indefinite measurement outcomes. Throws if the state's shape
// does not match the code's.
BitVec measure_syndrome(const StabState& state, const EacqCode& code);

// Decodes the state back to (classical index, logical payload): classical
// bit j is the sign of the readout generator at readout_rows[j] (the
// kernel-coordinate convention of codeword_sign_vector), logical bit k the
// sign of logical-Z row k. Requires a zero syndrome — recover first —
// otherwise throws.
std::pair<BitVec, BitVec> readout(const StabState& state,
                                  const EacqCode& code);

enum class NoiseModel {
  Depolarizing,  // each sender qubit independently hit with prob p,
                 // the letter X, Y or Z uniform
};

struct ChannelSpec {
  NoiseModel model = NoiseModel::Depolarizing;
  double p = 0.0;          // per-qubit error probability in [0, 1]
  std::uint64_t seed = 0;  // stream seed recorded in CSV output
};

// Outcome of one encode -> error -> syndrome -> decode -> recover ->
// readout cycle. When the syndrome is absent from the table (table_hit
// false) no recovery is applied, readout is skipped, and both ok flags are
// false. Otherwise the looked-up recovery zeroes the syndrome by
// construction and the flags compare readout exactly against the encoded
// (index, payload).
struct TrialResult {
  PauliOp injected_error;
  BitVec syndrome;
  PauliOp recovery;  // identity when table_hit is false
  bool table_hit = false;
  bool classical_ok = false;
  bool quantum_ok = false;
};

struct TrialStats {
  std::size_t trials = 0;
  std::size_t classical_failures = 0;
  std::size_t quantum_failures = 0;
};

// Identifier of the trial RNG scheme, recorded in CSV output so runs are
// reproducible across implementations. "splitmix64-v1" means:
//   mix(z)   = splitmix64 output scramble: z ^= z >> 30;
//              z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
//              z *= 0x94D049BB133111EB; return z ^ (z >> 31)
//   stream t = splitmix64 with initial state
//              mix(seed XOR (t + 1) * 0x9E3779B97F4A7C15)
//   next()   = state += 0x9E3779B97F4A7C15; return mix(state)
//   uniform double in [0,1) = (next() >> 11) * 2^-53
// and each trial draws, in order: its c index bits (next() & 1 each), its
// q payload bits (next() & 1 each), then per sender qubit 0..n-1 one
// uniform double u and, only if u < p, one letter next() % 3
// (0 -> X, 1 -> Y, 2 -> Z).
extern const char* const kRngId;

// Runs trial number `trial_index` of the stream defined by (ch.seed,
// trial_index): a uniformly random (index, payload) pair through the full
// cycle against the given decode table.
TrialResult run_trial(const EacqCode& code, const DecodeTable& table,
                      const ChannelSpec& ch, std::uint64_t trial_index);

// Aggregates trials 0..trials-1. A trial counts as a classical / quantum
// failure when the corresponding ok flag is false; a syndrome miss counts
// as both. Results are bit-identical for identical (code, table, ch,
// trials) regardless of `threads`.
TrialStats run_trials(const EacqCode& code, const DecodeTable& table,
                      const ChannelSpec& ch, std::size_t trials,
                      unsigned threads = 1);

// CSV contract: header `p,trials,classical_failures,quantum_failures,
// seed,rng_id`, one data row per run_trials call.
void write_trials_csv_header(std::ostream& out);
void write_trials_csv_row(std::ostream& out, const ChannelSpec& ch,
                          const TrialStats& stats);

}  // namespace eacq
