#include "eacq/correction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "eacq/pauli.hpp"

namespace eacq {

namespace {

// Errors are enumerated as a support set plus a letter code per support
// qubit. Letter codes are b = z<<1 | x, i.e. 1 = X, 2 = Z, 3 = Y; XOR of
// codes is the product letter. Canonical enumeration order: weight
// ascending, support sets lexicographic, letters counting X < Z < Y with
// the last support position varying fastest.

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_support(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> pos(k);
  if (k == 0) {
    fn(pos);
    return;
  }
  if (k > n) return;
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    fn(pos);
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == i - 1 + n - k) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

// Visits every letter assignment over k support positions.
template <typename Fn>
void for_each_letters(std::size_t k, Fn&& fn) {
  std::vector<int> letter(k, 1);
  while (true) {
    fn(letter);
    std::size_t i = k;
    while (i > 0 && letter[i - 1] == 3) --i;
    if (i == 0) return;
    ++letter[i - 1];
    std::fill(letter.begin() + i, letter.end(), 1);
  }
}

SympVec to_error(std::size_t n, const std::vector<std::size_t>& pos,
                 const std::vector<int>& letter) {
  SympVec v(n);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (letter[i] >> 1) v.z.set(pos[i], true);
    if (letter[i] & 1) v.x.set(pos[i], true);
  }
  return v;
}

BitVec to_flat(std::size_t n, const std::vector<std::size_t>& pos,
               const std::vector<int>& letter) {
  BitVec b(2 * n);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (letter[i] >> 1) b.set(pos[i], true);
    if (letter[i] & 1) b.set(n + pos[i], true);
  }
  return b;
}

// Syndrome contribution of each single-qubit letter, as packed bit vectors
// over the stabilizer generators.
std::vector<std::array<BitVec, 3>> contribution_table(const EacqCode& code) {
  const std::size_t n = code.params.n;
  const std::size_t width = code.g_quantum.num_rows();
  std::vector<std::array<BitVec, 3>> tab(
      n, {BitVec(width), BitVec(width), BitVec(width)});
  for (std::size_t i = 0; i < width; ++i) {
    const SympVec& g = code.g_quantum.row(i);
    for (std::size_t q = 0; q < n; ++q) {
      bool gz = g.z.get(q), gx = g.x.get(q);
      for (int b = 1; b <= 3; ++b) {
        bool anti = (gz && (b & 1)) ^ (gx && (b >> 1));
        if (anti) tab[q][b - 1].set(i, true);
      }
    }
  }
  return tab;
}

// Number of errors of weight <= w on n qubits, as a double (overflow-safe
// cost estimate).
double enumeration_cost(std::size_t n, std::size_t w) {
  double total = 0.0, binom = 1.0, pow3 = 1.0;
  for (std::size_t k = 1; k <= w; ++k) {
    binom = binom * static_cast<double>(n - k + 1) / static_cast<double>(k);
    pow3 *= 3.0;
    total += binom * pow3;
  }
  return total;
}

void require_sender_error(const EacqCode& code, const SympVec& error) {
  if (error.num_qubits() != code.params.n)
    throw Error("error acts on " + std::to_string(error.num_qubits()) +
                " qubits, code has " + std::to_string(code.params.n));
}

DistanceResult direct_search(const EacqCode& code, std::size_t max_weight,
                             bool want_witness, unsigned threads) {
  const std::size_t n = code.params.n;
  auto contrib = contribution_table(code);
  RowSolver radical(code.radical_basis.to_bitmat());
  const std::size_t width = code.g_quantum.num_rows();

  for (std::size_t k = 1; k <= max_weight; ++k) {
    // Partition support sets by first position so results merge
    // deterministically regardless of thread count.
    std::vector<std::optional<BitVec>> best_per_thread(threads);
    std::vector<bool> hit_per_thread(threads, false);
    auto worker = [&](unsigned tid) {
      BitVec syn(width);
      std::optional<BitVec> best;
      bool hit = false;
      for_each_support(n, k, [&](const std::vector<std::size_t>& pos) {
        if (pos[0] % threads != tid) return;
        for_each_letters(k, [&](const std::vector<int>& letter) {
          if (hit && !want_witness) return;
          BitVec s(width);
          for (std::size_t i = 0; i < k; ++i)
            s.xor_in(contrib[pos[i]][letter[i] - 1]);
          if (!s.is_zero()) return;
          BitVec flat = to_flat(n, pos, letter);
          if (radical.contains(flat)) return;
          hit = true;
          if (!best || flat.lex_less(*best)) best = flat;
        });
      });
      best_per_thread[tid] = best;
      hit_per_thread[tid] = hit;
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
      for (auto& th : pool) th.join();
    }
    std::optional<BitVec> best;
    bool hit = false;
    for (unsigned tid = 0; tid < threads; ++tid) {
      hit = hit || hit_per_thread[tid];
      if (best_per_thread[tid] &&
          (!best || best_per_thread[tid]->lex_less(*best)))
        best = best_per_thread[tid];
    }
    if (hit) {
      DistanceResult res;
      res.distance = k;
      res.exhaustive = true;
      res.searched_weight = k;
      if (want_witness && best) res.witness = SympVec::from_bits(*best);
      return res;
    }
  }
  return DistanceResult{max_weight + 1, false, max_weight, std::nullopt};
}

struct HalfError {
  std::uint64_t key;
  std::vector<std::uint16_t> support;  // qubit<<2 | letter, qubits ascending
};

DistanceResult mitm_search(const EacqCode& code, std::size_t max_weight,
                           bool want_witness, unsigned threads) {
  const std::size_t n = code.params.n;
  const std::size_t width = code.g_quantum.num_rows();
  const std::size_t half = (max_weight + 1) / 2;

  // Any zero-syndrome error of weight <= max_weight splits into two
  // support-disjoint halves of weight <= half with equal syndromes, so
  // collecting syndrome collisions among all weight <= half errors (the
  // empty error included) finds every violation.
  std::vector<std::array<std::uint64_t, 3>> ctab(n, {0, 0, 0});
  for (std::size_t i = 0; i < width; ++i) {
    const SympVec& g = code.g_quantum.row(i);
    for (std::size_t q = 0; q < n; ++q) {
      bool gz = g.z.get(q), gx = g.x.get(q);
      for (int b = 1; b <= 3; ++b) {
        bool anti = (gz && (b & 1)) ^ (gx && (b >> 1));
        if (anti) ctab[q][b - 1] |= std::uint64_t{1} << i;
      }
    }
  }

  double entries_estimate = enumeration_cost(n, half) + 1.0;
  if (entries_estimate > 1.6e8)
    throw Error("distance search too large: " +
                std::to_string(static_cast<long long>(entries_estimate)) +
                " half-weight errors");

  // Pass 1: syndrome keys only.
  std::vector<std::vector<std::uint64_t>> keys_per_thread(threads);
  auto pass1 = [&](unsigned tid) {
    auto& keys = keys_per_thread[tid];
    keys.reserve(static_cast<std::size_t>(entries_estimate / threads) + 16);
    if (tid == 0) keys.push_back(0);  // the empty error
    for (std::size_t k = 1; k <= half; ++k) {
      for_each_support(n, k, [&](const std::vector<std::size_t>& pos) {
        if (pos[0] % threads != tid) return;
        for_each_letters(k, [&](const std::vector<int>& letter) {
          std::uint64_t key = 0;
          for (std::size_t i = 0; i < k; ++i)
            key ^= ctab[pos[i]][letter[i] - 1];
          keys.push_back(key);
        });
      });
    }
  };
  if (threads == 1) {
    pass1(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(pass1, tid);
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> all_keys;
  all_keys.reserve(static_cast<std::size_t>(entries_estimate) + 16);
  for (auto& keys : keys_per_thread) {
    all_keys.insert(all_keys.end(), keys.begin(), keys.end());
    keys.clear();
    keys.shrink_to_fit();
  }
  std::sort(all_keys.begin(), all_keys.end());
  std::vector<std::uint64_t> dup_keys;
  for (std::size_t i = 0; i + 1 < all_keys.size();) {
    std::size_t j = i + 1;
    while (j < all_keys.size() && all_keys[j] == all_keys[i]) ++j;
    if (j - i >= 2) dup_keys.push_back(all_keys[i]);
    i = j;
  }
  all_keys.clear();
  all_keys.shrink_to_fit();

  DistanceResult miss{max_weight + 1, false, max_weight, std::nullopt};
  if (dup_keys.empty()) return miss;

  // Pass 2: re-enumerate, keeping only errors whose syndrome collides.
  std::vector<std::vector<HalfError>> cands_per_thread(threads);
  auto pass2 = [&](unsigned tid) {
    auto& cands = cands_per_thread[tid];
    if (tid == 0 &&
        std::binary_search(dup_keys.begin(), dup_keys.end(), std::uint64_t{0}))
      cands.push_back(HalfError{0, {}});
    for (std::size_t k = 1; k <= half; ++k) {
      for_each_support(n, k, [&](const std::vector<std::size_t>& pos) {
        if (pos[0] % threads != tid) return;
        for_each_letters(k, [&](const std::vector<int>& letter) {
          std::uint64_t key = 0;
          for (std::size_t i = 0; i < k; ++i)
            key ^= ctab[pos[i]][letter[i] - 1];
          if (!std::binary_search(dup_keys.begin(), dup_keys.end(), key)) return;
          HalfError he;
          he.key = key;
          he.support.reserve(k);
          for (std::size_t i = 0; i < k; ++i)
            he.support.push_back(
                static_cast<std::uint16_t>((pos[i] << 2) | letter[i]));
          cands.push_back(std::move(he));
        });
      });
    }
  };
  if (threads == 1) {
    pass2(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(pass2, tid);
    for (auto& th : pool) th.join();
  }
  std::vector<HalfError> cands;
  for (auto& c : cands_per_thread) {
    cands.insert(cands.end(), std::make_move_iterator(c.begin()),
                 std::make_move_iterator(c.end()));
    c.clear();
  }
  if (cands.size() > 5'000'000u)
    throw Error("distance search too dense: " + std::to_string(cands.size()) +
                " colliding half-weight errors");
  std::sort(cands.begin(), cands.end(), [](const HalfError& a, const HalfError& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.support < b.support;
  });

  RowSolver radical(code.radical_basis.to_bitmat());
  std::size_t best_weight = 0;
  std::optional<BitVec> best_flat;
  std::vector<std::uint16_t> merged;
  for (std::size_t lo = 0; lo < cands.size();) {
    std::size_t hi = lo + 1;
    while (hi < cands.size() && cands[hi].key == cands[lo].key) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) {
        // Combine the two halves; overlapping qubits multiply letter-wise.
        merged.clear();
        const auto& a = cands[i].support;
        const auto& b = cands[j].support;
        std::size_t ia = 0, ib = 0;
        while (ia < a.size() || ib < b.size()) {
          if (ib == b.size() || (ia < a.size() && (a[ia] >> 2) < (b[ib] >> 2))) {
            merged.push_back(a[ia++]);
          } else if (ia == a.size() || (b[ib] >> 2) < (a[ia] >> 2)) {
            merged.push_back(b[ib++]);
          } else {
            std::uint16_t q = a[ia] >> 2;
            int letter = (a[ia] & 3) ^ (b[ib] & 3);
            ++ia, ++ib;
            if (letter) merged.push_back(static_cast<std::uint16_t>((q << 2) | letter));
          }
        }
        std::size_t w = merged.size();
        if (w == 0 || w > max_weight) continue;
        if (best_flat && w > best_weight) continue;
        BitVec flat(2 * n);
        for (auto qb : merged) {
          if ((qb & 3) >> 1) flat.set(qb >> 2, true);
          if (qb & 1) flat.set(n + (qb >> 2), true);
        }
        if (radical.contains(flat)) continue;
        if (!best_flat || w < best_weight ||
            (w == best_weight && flat.lex_less(*best_flat))) {
          best_weight = w;
          best_flat = flat;
        }
      }
    }
    lo = hi;
  }

  if (!best_flat) return miss;
  DistanceResult res;
  res.distance = best_weight;
  res.exhaustive = true;
  res.searched_weight = best_weight;
  if (want_witness) res.witness = SympVec::from_bits(*best_flat);
  return res;
}

}  // namespace

const char* to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::Distinguishable: return "distinguishable";
    case ErrorClass::DegenerateQuantum: return "degenerate-quantum";
    case ErrorClass::DegenerateClassical: return "degenerate-classical";
    case ErrorClass::Uncorrectable: return "uncorrectable";
  }
  return "?";
}

BitVec syndrome(const EacqCode& code, const SympVec& error) {
  require_sender_error(code, error);
  const std::size_t width = code.g_quantum.num_rows();
  BitVec s(width);
  for (std::size_t i = 0; i < width; ++i) {
    const SympVec& g = code.g_quantum.row(i);
    s.set(i, (g.z.dot(error.x) ^ g.x.dot(error.z)) != 0);
  }
  return s;
}

ErrorClass classify_pair(const EacqCode& code, const SympVec& a,
                         const SympVec& b) {
  require_sender_error(code, a);
  require_sender_error(code, b);
  if (syndrome(code, a) != syndrome(code, b)) return ErrorClass::Distinguishable;
  BitVec diff = a.to_bits();
  diff.xor_in(b.to_bits());
  if (rowspace_contains(code.quantum_radical_basis.to_bitmat(), diff))
    return ErrorClass::DegenerateQuantum;
  if (rowspace_contains(code.radical_basis.to_bitmat(), diff))
    return ErrorClass::DegenerateClassical;
  return ErrorClass::Uncorrectable;
}

CorrectabilityResult check_correctable(const EacqCode& code,
                                       const std::vector<SympVec>& errors) {
  RowSolver radical(code.radical_basis.to_bitmat());
  std::unordered_map<BitVec, std::size_t, BitVecHash> representative;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    require_sender_error(code, errors[i]);
    BitVec s = syndrome(code, errors[i]);
    auto [it, inserted] = representative.emplace(s, i);
    if (inserted) continue;
    const SympVec& rep = errors[it->second];
    BitVec diff = rep.to_bits();
    diff.xor_in(errors[i].to_bits());
    if (!radical.contains(diff))
      return CorrectabilityResult{false, std::make_pair(rep, errors[i])};
  }
  return CorrectabilityResult{};
}

DistanceResult distance_search(const EacqCode& code, std::size_t max_weight,
                               bool want_witness, unsigned threads,
                               DistanceAlgorithm algorithm) {
  if (max_weight == 0) throw Error("distance search needs max_weight >= 1");
  if (threads == 0) threads = 1;
  const std::size_t n = code.params.n;
  const std::size_t width = code.g_quantum.num_rows();
  const std::size_t w = std::min(max_weight, n);

  if (algorithm == DistanceAlgorithm::MeetInMiddle && width > 64)
    throw Error("meet-in-the-middle needs at most 64 stabilizer generators, "
                "code has " + std::to_string(width));
  if (algorithm == DistanceAlgorithm::Auto) {
    bool small = enumeration_cost(n, w) <= 5e6;
    algorithm = (small || width > 64) ? DistanceAlgorithm::Direct
                                      : DistanceAlgorithm::MeetInMiddle;
  }
  if (algorithm == DistanceAlgorithm::Direct)
    return direct_search(code, w, want_witness, threads);
  return mitm_search(code, w, want_witness, threads);
}

DecodeTable build_decoder(const EacqCode& code, std::size_t t,
                          DecoderPolicy policy) {
  const std::size_t n = code.params.n;
  const std::size_t width = code.g_quantum.num_rows();
  if (width == 0)
    throw Error("decode table needs at least one stabilizer generator");

  DecodeTable table;
  table.code_id = code_hash(code);
  table.t = t;
  table.n_qubits = n;
  table.syndrome_bits = width;

  auto contrib = contribution_table(code);
  RowSolver radical(code.radical_basis.to_bitmat());

  for (std::size_t k = 0; k <= std::min(t, n); ++k) {
    for_each_support(n, k, [&](const std::vector<std::size_t>& pos) {
      for_each_letters(k, [&](const std::vector<int>& letter) {
        BitVec s(width);
        for (std::size_t i = 0; i < k; ++i)
          s.xor_in(contrib[pos[i]][letter[i] - 1]);
        SympVec v = to_error(n, pos, letter);
        auto it = table.entries.find(s);
        if (it == table.entries.end()) {
          table.entries.emplace(std::move(s), std::move(v));
          return;
        }
        BitVec diff = v.to_bits();
        diff.xor_in(it->second.to_bits());
        if (!radical.contains(diff) && policy == DecoderPolicy::Strict)
          throw Error(
              "errors " + format_pauli(PauliOp::from_symplectic(it->second)) +
              " and " + format_pauli(PauliOp::from_symplectic(v)) +
              " share a syndrome but are not degenerate: the code does not "
              "correct all errors of weight <= " + std::to_string(t));
        if (it->second.weight() == k && v.to_bits().lex_less(it->second.to_bits()))
          it->second = std::move(v);
      });
    });
  }
  return table;
}

std::optional<SympVec> lookup(const DecodeTable& table, const BitVec& syndrome) {
  if (syndrome.size() != table.syndrome_bits)
    throw Error("syndrome has " + std::to_string(syndrome.size()) +
                " bits, table expects " + std::to_string(table.syndrome_bits));
  auto it = table.entries.find(syndrome);
  if (it == table.entries.end()) return std::nullopt;
  return it->second;
}

void write_decode_table(std::ostream& out, const DecodeTable& table) {
  out << "decodetable v1 code " << table.code_id << " t " << table.t << "\n";
  std::vector<std::pair<BitVec, SympVec>> items(table.entries.begin(),
                                                table.entries.end());
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first.lex_less(b.first); });
  for (const auto& [syn, rec] : items)
    out << syn.to_string() << " "
        << format_pauli(PauliOp::from_symplectic(rec)) << "\n";
}

namespace {

[[noreturn]] void table_error(std::size_t line, const std::string& msg) {
  throw Error("decode table line " + std::to_string(line) + ": " + msg);
}

}  // namespace

DecodeTable read_decode_table(std::istream& in) {
  DecodeTable table;
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) table_error(1, "missing header");
  ++lineno;
  {
    std::istringstream hs(line);
    std::string tag, version, code_kw, t_kw;
    if (!(hs >> tag >> version >> code_kw >> table.code_id >> t_kw >> table.t) ||
        tag != "decodetable" || version != "v1" || code_kw != "code" ||
        t_kw != "t")
      table_error(lineno, "expected header 'decodetable v1 code <id> t <int>'");
    std::string rest;
    if (hs >> rest) table_error(lineno, "unexpected trailing token '" + rest + "'");
    if (table.code_id.size() != 16 ||
        table.code_id.find_first_not_of("0123456789abcdef") != std::string::npos)
      table_error(lineno, "code id must be 16 hex digits");
  }

  std::optional<BitVec> prev;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string syn_str, pauli_str, rest;
    if (!(ls >> syn_str >> pauli_str))
      table_error(lineno, "expected '<syndrome bits> <pauli>'");
    if (ls >> rest) table_error(lineno, "unexpected trailing token '" + rest + "'");
    BitVec syn;
    PauliOp rec;
    try {
      syn = BitVec::from_string(syn_str);
      rec = parse_pauli(pauli_str);
    } catch (const Error& e) {
      table_error(lineno, e.what());
    }
    if (rec.phase != 0)
      table_error(lineno, "recovery must be an unsigned pauli string");
    if (table.entries.empty()) {
      table.syndrome_bits = syn.size();
      table.n_qubits = rec.num_qubits();
    } else {
      if (syn.size() != table.syndrome_bits)
        table_error(lineno, "syndrome width changed");
      if (rec.num_qubits() != table.n_qubits)
        table_error(lineno, "pauli width changed");
      if (!prev->lex_less(syn))
        table_error(lineno, prev.value() == syn ? "duplicate syndrome"
                                                : "entries not sorted");
    }
    prev = syn;
    table.entries.emplace(std::move(syn), std::move(rec.v));
  }
  if (table.entries.empty()) table_error(lineno + 1, "decode table has no entries");
  return table;
}

DecodeTable read_decode_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_decode_table(in);
}

void write_decode_table_file(const std::string& path, const DecodeTable& table) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_decode_table(out, table);
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace eacq
