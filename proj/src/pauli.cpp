#include "eacq/pauli.hpp"

#include <bit>

namespace eacq {

namespace {

// popcount(a AND b) for two packed bit vectors of equal length.
std::size_t and_popcount(const BitVec& a, const BitVec& b) {
  std::size_t c = 0;
  const auto& aw = a.words();
  const auto& bw = b.words();
  for (std::size_t w = 0; w < aw.size(); ++w) c += std::popcount(aw[w] & bw[w]);
  return c;
}

}  // namespace

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
  if (a.num_qubits() != b.num_qubits()) throw Error("pauli qubit-count mismatch");
  SympVec w = a.v;
  w.xor_in(b.v);
  // N_u N_v = i^k N_{u+v} with
  // k = |z_u & x_u| + |z_v & x_v| + 2 |x_u & z_v| - |z_w & x_w|  (mod 4),
  // obtained by unwrapping the Hermitian phase factors and commuting
  // X^{x_u} past Z^{z_v}.
  std::size_t k = and_popcount(a.v.z, a.v.x) + and_popcount(b.v.z, b.v.x) +
                  2 * and_popcount(a.v.x, b.v.z) + 3 * and_popcount(w.z, w.x);
  return PauliOp{static_cast<int>((a.phase + b.phase + k) % 4), w};
}

bool commutes(const PauliOp& a, const PauliOp& b) {
  if (a.num_qubits() != b.num_qubits()) throw Error("pauli qubit-count mismatch");
  return symplectic_product(a.v, b.v) == 0;
}

PauliOp parse_pauli(const std::string& s) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < s.size() && s[pos] == 'i') {
    phase = (phase + 1) % 4;
    ++pos;
  }
  if (pos == s.size()) throw Error("empty pauli string");
  SympVec v(s.size() - pos);
  for (std::size_t i = pos; i < s.size(); ++i) {
    std::size_t q = i - pos;
    switch (s[i]) {
      case 'I': break;
      case 'Z': v.z.set(q, true); break;
      case 'X': v.x.set(q, true); break;
      case 'Y': v.z.set(q, true); v.x.set(q, true); break;
      default:
        throw Error("invalid pauli character '" + std::string(1, s[i]) +
                    "' at position " + std::to_string(i));
    }
  }
  return PauliOp{phase, v};
}

std::string format_pauli(const PauliOp& p) {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string s = prefix[((p.phase % 4) + 4) % 4];
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    bool z = p.v.z.get(q), x = p.v.x.get(q);
    s += z ? (x ? 'Y' : 'Z') : (x ? 'X' : 'I');
  }
  return s;
}

}  // namespace eacq
