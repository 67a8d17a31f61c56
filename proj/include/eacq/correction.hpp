#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eacq/code.hpp"

namespace eacq {

// How two errors with respect to a code relate to each other. Only
// Uncorrectable pairs defeat decoding: pairs in either degenerate class act
// identically on every codeword (their difference lies in the radical of
// the full group, so it is a stabilizer element up to readout signs that it
// also leaves alone).
enum class ErrorClass {
  Distinguishable,      // different syndromes
  DegenerateQuantum,    // same syndrome, difference inside <S_Q>'s radical
  DegenerateClassical,  // same syndrome, difference only in the full radical
  Uncorrectable,        // same syndrome, difference outside the full radical
};

const char* to_string(ErrorClass c);

// Syndrome of a sender-side error (n qubits): bit i is the symplectic
// product with the i-th stabilizer generator (row i of g_quantum). Receiver
// qubits never overlap a sender-side error, so the products against the
// extended generators equal the products against the stored rows.
BitVec syndrome(const EacqCode& code, const SympVec& error);

ErrorClass classify_pair(const EacqCode& code, const SympVec& a,
                         const SympVec& b);

struct CorrectabilityResult {
  bool correctable = true;
  // When not correctable: a pair with equal syndromes whose difference lies
  // outside the radical.
  std::optional<std::pair<SympVec, SympVec>> witness;
};

// Checks whether a set of errors is simultaneously correctable, i.e. no two
// members form an Uncorrectable pair. Errors are bucketed by syndrome and
// compared against the first member of their bucket; because the radical is
// a subspace, this is equivalent to checking all pairs.
CorrectabilityResult check_correctable(const EacqCode& code,
                                       const std::vector<SympVec>& errors);

// Result of a minimum-distance search. The distance of a code is the least
// weight of a sender-side error that has zero syndrome but lies outside the
// radical of the full group (an undetected, logically acting error).
//
// If such an error of weight <= max_weight exists, `distance` is its exact
// minimum weight, `exhaustive` is true, and `witness` (when requested) is
// the lexicographically-least flat (z|x) vector among the minimum-weight
// violations. Otherwise `distance` = searched_weight + 1 is a lower bound
// and `exhaustive` is false.
struct DistanceResult {
  std::size_t distance = 0;
  bool exhaustive = false;
  std::size_t searched_weight = 0;
  std::optional<SympVec> witness;
};

enum class DistanceAlgorithm {
  Auto,          // direct for small enumerations, meet-in-the-middle otherwise
  Direct,        // enumerate every error of weight <= max_weight
  MeetInMiddle,  // match half-weight syndrome collisions (needs <= 64
                 // stabilizer generators)
};

DistanceResult distance_search(const EacqCode& code, std::size_t max_weight,
                               bool want_witness = true, unsigned threads = 1,
                               DistanceAlgorithm algorithm = DistanceAlgorithm::Auto);

// Syndrome -> recovery map covering every error of weight <= t. The stored
// recovery for a syndrome is the canonical representative: minimum weight,
// then lexicographically-least flat (z|x). Building the table proves
// t-correctability; it throws if two errors of weight <= t share a syndrome
// without being degenerate.
struct DecodeTable {
  std::string code_id;  // code_hash of the code the table was built for
  std::size_t t = 0;
  std::size_t n_qubits = 0;
  std::size_t syndrome_bits = 0;
  std::unordered_map<BitVec, SympVec, BitVecHash> entries;

  bool operator==(const DecodeTable& o) const {
    return code_id == o.code_id && t == o.t && n_qubits == o.n_qubits &&
           syndrome_bits == o.syndrome_bits && entries == o.entries;
  }
};

// Strict building (the default) refuses a table whenever two weight <= t
// errors share a syndrome without being degenerate: the resulting table
// would silently miscorrect one of them. BestEffort keeps the canonical
// representative anyway; decoding the other member of such a collision then
// leaves a nonzero residual (classify_pair(error, recovery) ==
// Uncorrectable), which callers must be prepared to detect or tolerate.
enum class DecoderPolicy {
  Strict,
  BestEffort,
};

DecodeTable build_decoder(const EacqCode& code, std::size_t t,
                          DecoderPolicy policy = DecoderPolicy::Strict);

// Recovery for a measured syndrome, or nothing if the syndrome is absent
// from the table (an error outside the covered set).
std::optional<SympVec> lookup(const DecodeTable& table, const BitVec& syndrome);

// --- decode table file format ("decodetable v1") ---
//
//   decodetable v1 code <16 hex digits> t <int>
//   <syndrome bits> <pauli letters>      (one line per entry, sorted by
//                                         syndrome bit string)
//
// Parsers validate widths, ordering and letters, reporting the offending
// line number.
void write_decode_table(std::ostream& out, const DecodeTable& table);
DecodeTable read_decode_table(std::istream& in);
DecodeTable read_decode_table_file(const std::string& path);
void write_decode_table_file(const std::string& path, const DecodeTable& table);

}  // namespace eacq
