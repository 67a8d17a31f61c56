#pragma once

#include <string>
#include <vector>

#include "eacq/code.hpp"

namespace eacq {

// Nine-qubit block-phase stabilizer check matrix: six Z-pair rows (one per
// adjacent qubit pair inside each block of three) and two X-block rows
// spanning blocks 1-2 and 2-3. All rows commute.
SympMat shor_hq();

// Rank-5 parity-check matrices of two [8,3] binary classical codes.
BitMat classical_8_3_a();
BitMat classical_8_3_b();

// Narrow-sense binary BCH code of length 63 and designed distance 9, built
// over GF(2^6) with primitive polynomial x^6 + x + 1. The generator
// polynomial is the product of the minimal polynomials of alpha^1, alpha^3,
// alpha^5 and alpha^7 (whose cyclotomic cosets cover exponents 1..8); it
// has degree 24, so k = 39.
BitVec bch_63_39_9_generator();  // 25 coefficients, constant term first
BitMat bch_63_39_9();            // full-rank 24x63 parity-check matrix

// CSS-style entanglement-assisted code from a classical parity check h
// (r x n, independent rows): stabilizer rows (h|0) and (0|h), classical
// side empty. The ebit count e equals rank(h h^T); q = n - 2r + e.
EacqCode ea_css(const BitMat& h);

struct NamedCode {
  std::string name;     // CLI-addressable identifier
  std::string bracket;  // [[n, q:c, d; e]] with the construction's claimed d
  EacqCode code;
  std::string notes;    // construction provenance, free text
};

NamedCode eacq_9_1_3();
NamedCode eacq_8_1_3_1();
NamedCode ea_css_63_21_9();
NamedCode eacq_63_21_12();

// All built-in codes in construction order; built once per process.
const std::vector<NamedCode>& catalog();

// The catalog entry with this name, or nullptr.
const NamedCode* find_code(const std::string& name);

}  // namespace eacq
