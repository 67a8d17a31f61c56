#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eacq {

// Domain error thrown by every operation in this library on invalid input
// (dependent rows, dimension mismatches, infeasible parameter splits, ...).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense bit vector over GF(2), packed 64 bits per word.
// Invariant: bits past `size()` in the last word are always zero, so
// whole-word operations (xor, and/popcount) need no masking.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static BitVec from_string(const std::string& s);  // e.g. "10101000"
  static BitVec unit(std::size_t n, std::size_t i);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void xor_in(const BitVec& o);
  bool any() const;
  bool is_zero() const { return !any(); }
  std::size_t popcount() const;
  // Index of the first set bit, or size() if none.
  std::size_t first_set() const;
  // Parity of the AND with another vector (standard GF(2) dot product).
  int dot(const BitVec& o) const;

  std::string to_string() const;
  bool operator==(const BitVec& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  // Lexicographic comparison of the bit string (bit 0 most significant),
  // used for deterministic tie-breaking and sorted serialization.
  bool lex_less(const BitVec& o) const;

  std::uint64_t hash() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

// Dense GF(2) matrix: a list of equal-length BitVec rows.
class BitMat {
 public:
  BitMat() = default;
  BitMat(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVec(cols)) {}
  static BitMat identity(std::size_t n);
  static BitMat from_strings(const std::vector<std::string>& rows);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  void append_row(const BitVec& r);
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }
  bool operator==(const BitMat& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// Row-echelon solver: keeps an echelonized copy of a matrix together with
// the expression of each echelon row over the original rows, so that rank,
// rowspace membership and "write v as a combination of the rows" queries
// all come from one elimination.
class RowSolver {
 public:
  explicit RowSolver(const BitMat& m);
  std::size_t rank() const { return rows_.size(); }
  bool contains(const BitVec& v) const;
  // Coefficients a with a * M = v, if v lies in the rowspace.
  std::optional<BitVec> express(const BitVec& v) const;

 private:
  std::size_t ncols_ = 0;
  std::size_t nsrc_ = 0;
  std::vector<BitVec> rows_;    // echelon rows, pivot columns strictly increasing
  std::vector<BitVec> combos_;  // combos_[i] * M = rows_[i]
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const BitMat& m);
// Reduced row echelon form; `pivots` receives the pivot column of each row.
BitMat rref(const BitMat& m, std::vector<std::size_t>* pivots = nullptr);
// Basis of {v : M v^T = 0}, returned in reduced echelon form (canonical).
BitMat kernel(const BitMat& m);
BitMat matmul(const BitMat& a, const BitMat& b);
// Inverse of a square full-rank matrix; throws Error otherwise.
BitMat inverse(const BitMat& m);
bool rowspace_contains(const BitMat& m, const BitVec& v);

// Symplectic vector (z|x) describing a Pauli operator on n qubits modulo
// phase: bit i of z / x set means a Z / X factor on qubit i (both: Y).
struct SympVec {
  BitVec z, x;

  SympVec() = default;
  explicit SympVec(std::size_t n) : z(n), x(n) {}
  SympVec(BitVec z_in, BitVec x_in);

  // Parses "z-bits|x-bits", e.g. "110|010".
  static SympVec from_string(const std::string& s);

  std::size_t num_qubits() const { return z.size(); }
  // Number of qubits acted on non-trivially.
  std::size_t weight() const;
  bool is_zero() const { return z.is_zero() && x.is_zero(); }
  void xor_in(const SympVec& o);
  // Flat 2n-bit view (z half, then x half).
  BitVec to_bits() const;
  static SympVec from_bits(const BitVec& b);
  std::string to_string() const;  // "z|x"
  bool operator==(const SympVec& o) const { return z == o.z && x == o.x; }
  bool operator!=(const SympVec& o) const { return !(*this == o); }
};

// Symplectic product u (.) v = u.z * v.x + u.x * v.z (mod 2).
// Zero exactly when the corresponding Pauli operators commute.
int symplectic_product(const SympVec& u, const SympVec& v);

// Matrix of symplectic rows (all over the same number of qubits).
struct SympMat {
  std::vector<SympVec> rows;
  std::size_t n_qubits = 0;

  SympMat() = default;
  explicit SympMat(std::size_t n) : n_qubits(n) {}
  static SympMat from_strings(std::size_t n, const std::vector<std::string>& rows);

  std::size_t num_rows() const { return rows.size(); }
  void append_row(const SympVec& r);
  const SympVec& row(std::size_t i) const { return rows[i]; }
  BitMat to_bitmat() const;  // num_rows x 2n
  bool operator==(const SympMat& o) const {
    return n_qubits == o.n_qubits && rows == o.rows;
  }
};

// Gram matrix G[i][j] = row_i (.) row_j (symmetric, zero diagonal).
BitMat gram_matrix(const SympMat& m);

// Combination of symplectic rows: (coeffs * M) row by row.
SympMat matmul(const BitMat& coeffs, const SympMat& m);

std::size_t rank(const SympMat& m);
bool rowspace_contains(const SympMat& m, const SympVec& v);

// Result of the symplectic Gram-Schmidt procedure.
//
// The input rows are transformed, in input order, into `isotropic` rows
// (commuting with every output row) and hyperbolic `pairs` (u_k, v_k) with
// u_k (.) v_k = 1 and all other products zero. `transform` records the row
// operations: transform * input = [isotropic; u_1; v_1; u_2; v_2; ...].
struct GramSchmidtResult {
  SympMat isotropic;
  std::vector<std::pair<SympVec, SympVec>> pairs;
  BitMat transform;
};

// Deterministic symplectic Gram-Schmidt. Rows are processed in input order;
// when a row anticommutes with an earlier unpaired row, the two become a
// hyperbolic pair and are swept out of every remaining row.
// Throws Error if the input rows are linearly dependent.
GramSchmidtResult symplectic_gram_schmidt(const SympMat& m);

// Basis (in canonical reduced-echelon combination form) of the radical
// {v in rowspace(m) : v (.) w = 0 for all w in rowspace(m)}.
SympMat radical_basis(const SympMat& m);

}  // namespace eacq
