#include "eacq/simulator.hpp"

#include <algorithm>
#include <ostream>
#include <thread>
#include <vector>

namespace eacq {

namespace {

// Number of h_quantum rows of a code, i.e. where the logical-Z rows start
// in an encoded state's layout.
std::size_t group_rows(const EacqCode& code) {
  return code.params.s + 2 * code.params.e;
}

void check_state_shape(const StabState& state, const EacqCode& code) {
  const CodeParams& p = code.params;
  if (state.n_alice != p.n || state.n_bob != p.e ||
      state.gens.num_rows() != p.n + p.e ||
      state.signs.size() != p.n + p.e)
    throw Error("stabilizer state does not match the code's shape");
}

// --- trial RNG ("splitmix64-v1", documented in the header) ---

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct SplitMix {
  std::uint64_t state = 0;
  std::uint64_t next() {
    state += kGolden;
    return mix64(state);
  }
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

SplitMix trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
  return SplitMix{mix64(seed ^ ((trial_index + 1) * kGolden))};
}

void check_channel(const ChannelSpec& ch) {
  if (ch.model != NoiseModel::Depolarizing)
    throw Error("unknown noise model");
  if (!(ch.p >= 0.0 && ch.p <= 1.0))
    throw Error("channel probability must lie in [0, 1]");
}

}  // namespace

StabState encode(const EacqCode& code, const BitVec& classical_index,
                 const BitVec& logical_bits) {
  const CodeParams& p = code.params;
  if (classical_index.size() != p.c)
    throw Error("classical index must have c bits");
  if (logical_bits.size() != p.q)
    throw Error("logical payload must have q bits");

  StabState state;
  state.n_alice = p.n;
  state.n_bob = p.e;
  state.gens = code.h_quantum_ext;
  for (std::size_t k = 0; k < p.q; ++k)
    state.gens.append_row(code.logical_z_ext.row(k));

  BitVec group_signs = codeword_sign_vector(code, classical_index);
  state.signs = BitVec(p.n + p.e);
  for (std::size_t j = 0; j < group_signs.size(); ++j)
    state.signs.set(j, group_signs.get(j));
  for (std::size_t k = 0; k < p.q; ++k)
    state.signs.set(group_signs.size() + k, logical_bits.get(k));

  if (state.gens.num_rows() != p.n + p.e ||
      rank(state.gens) != p.n + p.e)
    throw Error("encoded generator set is rank-deficient");
  return state;
}

void apply_error(StabState& state, const SympVec& err) {
  std::size_t n = state.n_alice;
  std::size_t total = n + state.n_bob;
  SympVec full(total);
  if (err.num_qubits() == total) {
    for (std::size_t i = n; i < total; ++i)
      if (err.z.get(i) || err.x.get(i))
        throw Error("errors cannot touch the receiver's qubits");
    full = err;
  } else if (err.num_qubits() == n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (err.z.get(i)) full.z.set(i, true);
      if (err.x.get(i)) full.x.set(i, true);
    }
  } else {
    throw Error("error width matches neither n nor n + e");
  }
  for (std::size_t j = 0; j < state.gens.num_rows(); ++j)
    if (symplectic_product(state.gens.row(j), full))
      state.signs.flip(j);
}

void apply_error(StabState& state, const PauliOp& err) {
  apply_error(state, err.v);
}

BitVec measure_syndrome(const StabState& state, const EacqCode& code) {
  check_state_shape(state, code);
  std::size_t rows = group_rows(code);
  BitVec group_signs(rows);
  for (std::size_t j = 0; j < rows; ++j)
    group_signs.set(j, state.signs.get(j));
  BitVec syn(code.h_classical.num_rows());
  for (std::size_t i = 0; i < syn.size(); ++i)
    syn.set(i, code.h_classical.row(i).dot(group_signs) != 0);
  return syn;
}

std::pair<BitVec, BitVec> readout(const StabState& state,
                                  const EacqCode& code) {
  BitVec syn = measure_syndrome(state, code);
  if (!syn.is_zero())
    throw Error("readout requires a zero syndrome: recover first");
  const CodeParams& p = code.params;
  BitVec classical(p.c);
  for (std::size_t j = 0; j < p.c; ++j)
    classical.set(j, state.signs.get(code.readout_rows[j]));
  BitVec logical(p.q);
  std::size_t offset = group_rows(code);
  for (std::size_t k = 0; k < p.q; ++k)
    logical.set(k, state.signs.get(offset + k));
  return {classical, logical};
}

const char* const kRngId = "splitmix64-v1";

TrialResult run_trial(const EacqCode& code, const DecodeTable& table,
                      const ChannelSpec& ch, std::uint64_t trial_index) {
  check_channel(ch);
  const CodeParams& p = code.params;
  SplitMix rng = trial_stream(ch.seed, trial_index);

  BitVec index(p.c);
  for (std::size_t j = 0; j < p.c; ++j)
    index.set(j, rng.next() & 1);
  BitVec payload(p.q);
  for (std::size_t k = 0; k < p.q; ++k)
    payload.set(k, rng.next() & 1);
  SympVec err(p.n);
  for (std::size_t qubit = 0; qubit < p.n; ++qubit) {
    if (rng.uniform() >= ch.p)
      continue;
    switch (rng.next() % 3) {
      case 0: err.x.set(qubit, true); break;                          // X
      case 1: err.z.set(qubit, true); err.x.set(qubit, true); break;  // Y
      default: err.z.set(qubit, true); break;                         // Z
    }
  }

  StabState state = encode(code, index, payload);
  apply_error(state, err);

  TrialResult result;
  result.injected_error = PauliOp{0, err};
  result.syndrome = measure_syndrome(state, code);
  std::optional<SympVec> recovery = lookup(table, result.syndrome);
  if (!recovery) {
    result.recovery = PauliOp::identity(p.n);
    return result;  // counted as both failures by the caller
  }
  result.table_hit = true;
  result.recovery = PauliOp{0, *recovery};
  apply_error(state, *recovery);
  auto [classical, logical] = readout(state, code);
  result.classical_ok = classical == index;
  result.quantum_ok = logical == payload;
  return result;
}

TrialStats run_trials(const EacqCode& code, const DecodeTable& table,
                      const ChannelSpec& ch, std::size_t trials,
                      unsigned threads) {
  check_channel(ch);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    TrialStats local;
    for (std::size_t t = begin; t < end; ++t) {
      TrialResult r = run_trial(code, table, ch, t);
      ++local.trials;
      if (!r.classical_ok) ++local.classical_failures;
      if (!r.quantum_ok) ++local.quantum_failures;
    }
    return local;
  };

  if (threads <= 1 || trials < 2 * threads)
    return run_range(0, trials);

  std::vector<TrialStats> parts(threads);
  std::vector<std::thread> workers;
  std::size_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    std::size_t begin = std::min<std::size_t>(w * chunk, trials);
    std::size_t end = std::min<std::size_t>(begin + chunk, trials);
    workers.emplace_back(
        [&, begin, end, w] { parts[w] = run_range(begin, end); });
  }
  for (std::thread& w : workers)
    w.join();
  TrialStats total;
  for (const TrialStats& part : parts) {
    total.trials += part.trials;
    total.classical_failures += part.classical_failures;
    total.quantum_failures += part.quantum_failures;
  }
  return total;
}

void write_trials_csv_header(std::ostream& out) {
  out << "p,trials,classical_failures,quantum_failures,seed,rng_id\n";
}

void write_trials_csv_row(std::ostream& out, const ChannelSpec& ch,
                          const TrialStats& stats) {
  out << ch.p << ',' << stats.trials << ',' << stats.classical_failures
      << ',' << stats.quantum_failures << ',' << ch.seed << ',' << kRngId
      << '\n';
}

}  // namespace eacq
