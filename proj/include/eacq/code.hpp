#pragma once

#include <iosfwd>
#include <utility>

#include "eacq/gf2.hpp"
#include "eacq/pauli.hpp"

namespace eacq {

// Parameters of an entanglement-assisted, classically-enhanced code,
// written [[n, q:c, d; e]]:
//   n  physical qubits on the sender's side
//   q  logical qubits
//   c  classical bits, split as c = c1 + 2*c2
//   e  entangled pairs shared with the receiver
//   s  isotropic generators of the full group (n = s + e + q)
struct CodeParams {
  std::size_t n = 0, q = 0, c = 0, e = 0, s = 0, c1 = 0, c2 = 0;
};

// A code is the pair (S_Q, S_C): the quantum stabilizer S_Q is generated by
// the rows of g_quantum = h_classical * h_quantum, and the classical part
// S_C extends it to the full group generated by the rows of h_quantum.
//
// All derived members are produced deterministically by build():
//   radical_basis          basis of the radical of rowspace(h_quantum),
//                          i.e. <S_Q,I, S_C,I>  (s rows)
//   quantum_radical_basis  basis of the radical of rowspace(g_quantum),
//                          i.e. <S_Q,I>  (s - c1 rows)
//   classical_kernel       reduced-echelon kernel basis of h_classical
//                          (c rows); classical index bit j selects row j
//   readout_rows           pivot coordinates of that kernel basis
//   classical_readout_gens h_quantum rows at the pivot coordinates; their
//                          measured signs reproduce the classical index
//   logical_z / logical_x  q hyperbolic pairs commuting with rowspace(h_quantum)
//
// The *_ext members are the same generators extended over n + e qubits:
// isotropic content acts as identity on the receiver's qubits, and the k-th
// hyperbolic pair of h_quantum picks up Z / X on receiver qubit k. Receiver
// qubits occupy the trailing columns. Every extended h_quantum row commutes
// with every other, which is what makes signs measurable simultaneously.
struct EacqCode {
  CodeParams params;
  int d_claimed = -1;  // distance claim carried by catalog entries; -1 if none

  SympMat h_quantum;   // (s + 2e) x 2n
  BitMat h_classical;  // (s + 2e - c) x (s + 2e)
  SympMat g_quantum;   // h_classical * h_quantum

  SympMat radical_basis;
  SympMat quantum_radical_basis;
  BitMat classical_kernel;
  std::vector<std::size_t> readout_rows;
  SympMat classical_readout_gens;
  SympMat logical_z, logical_x;

  SympMat h_quantum_ext;
  SympMat g_quantum_ext;
  SympMat readout_ext;
  SympMat logical_z_ext, logical_x_ext;
};

// Constructs the code from its two parity-check matrices, deriving all
// parameters and validating the subgroup structure. Throws Error on
// dependent rows, dimension mismatches, or an infeasible classical split
// (h_classical selecting half of a hyperbolic pair).
EacqCode build(const SympMat& h_quantum, const BitMat& h_classical);

// The canonical classical selector with respect to generators ordered
// [isotropic_1..s, pairZ_1..e, pairX_1..e]: drops the first c1 isotropic
// generators and both members of the first c2 pairs. Its kernel has
// dimension c1 + 2*c2.
BitMat canonical_F(std::size_t s, std::size_t e, std::size_t c1, std::size_t c2);

// Sign vector y over the h_quantum rows encoding classical index i:
// y = sum_j index_j * classical_kernel row j, so h_classical * y^T = 0 and
// the coordinates of y at readout_rows equal the index bits.
BitVec codeword_sign_vector(const EacqCode& code, const BitVec& index);

// Reinterprets part of the quantum stabilizer of a c = 0 code as classical:
// the last `move_isotropic` isotropic generators and the last `move_pairs`
// hyperbolic pairs of the canonical Gram-Schmidt order move to S_C. The
// full group <S_Q, S_C> is unchanged, so n, q, s, e are preserved while
// c becomes move_isotropic + 2*move_pairs.
EacqCode enhance(const EacqCode& code, std::size_t move_isotropic,
                 std::size_t move_pairs);

// Absorbs S_C back into the stabilizer: the result is the c = 0 code whose
// stabilizer is the full rowspace of h_quantum.
EacqCode strip(const EacqCode& code);

// The stored logical operator pair (z rows, x rows).
std::pair<SympMat, SympMat> logical_operators(const EacqCode& code);

// --- code file format ("eacq v1") ---
//
//   eacq v1
//   n <int>  c1 <int>  c2 <int>
//   hq <z bits>|<x bits>     (s + 2e lines)
//   hc <bits>                (s + 2e - c lines)
//
// Parsers validate line counts and widths and report the offending line.
EacqCode read_code(std::istream& in);
EacqCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const EacqCode& code);
std::string code_to_string(const EacqCode& code);

// Stable 16-hex-digit hash of the canonical serialization, used to tie
// decode tables to the code they were built for.
std::string code_hash(const EacqCode& code);

}  // namespace eacq
