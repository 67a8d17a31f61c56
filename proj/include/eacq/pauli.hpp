#pragma once

#include <string>

#include "eacq/gf2.hpp"

namespace eacq {

// A Pauli operator on n qubits: i^phase times the Hermitian representative
// N_v of the symplectic vector v = (z|x).
//
// The Hermitian representative is N_(z|x) = i^{|z AND x|} Z^z X^x, so the
// per-qubit letters are (0,0) -> I, (1,0) -> Z, (0,1) -> X, (1,1) -> Y and
// products satisfy e.g. Z*X = -iY, X*Z = iY under this convention.
struct PauliOp {
  int phase = 0;  // exponent of i, modulo 4
  SympVec v;

  static PauliOp identity(std::size_t n) { return PauliOp{0, SympVec(n)}; }
  static PauliOp from_symplectic(const SympVec& v) { return PauliOp{0, v}; }

  std::size_t num_qubits() const { return v.num_qubits(); }
  std::size_t weight() const { return v.weight(); }
  bool operator==(const PauliOp& o) const { return phase == o.phase && v == o.v; }
};

PauliOp multiply(const PauliOp& a, const PauliOp& b);
bool commutes(const PauliOp& a, const PauliOp& b);

// Parses ['+'|'-']? 'i'? [IXYZ]+ ; anything else throws Error.
PauliOp parse_pauli(const std::string& s);

// Formats as the letter string, prefixed with "-" / "i" / "-i" for
// phases 2 / 1 / 3. format(parse(s)) == s for normalized inputs
// (no leading '+'), and parse(format(p)) == p always.
std::string format_pauli(const PauliOp& p);

}  // namespace eacq
