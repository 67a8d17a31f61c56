#pragma once

// Frozen test fixtures: small check matrices whose structure (ranks, kernels,
// commutation pattern, Gram-Schmidt shape) was verified by hand. Unit tests
// assert against these exact values.

#include "eacq/gf2.hpp"

namespace fixtures {

// Nine-qubit repetition-of-repetition stabilizer checks (z|x over 9 qubits):
// six two-qubit ZZ checks and two six-qubit X checks. All rows commute.
inline eacq::SympMat nine_qubit_check() {
  return eacq::SympMat::from_strings(9, {
                                            "110000000|000000000",
                                            "011000000|000000000",
                                            "000110000|000000000",
                                            "000011000|000000000",
                                            "000000110|000000000",
                                            "000000011|000000000",
                                            "000000000|111111000",
                                            "000000000|000111111",
                                        });
}

// 5x8 selector splitting the nine-qubit group into stabilizer + readout.
// Rank 5; kernel dimension 3 with canonical basis
//   10100010 / 01101001 / 00010110  (pivots 0, 1, 3).
inline eacq::BitMat classical_check_a() {
  return eacq::BitMat::from_strings({
      "10101000",
      "00010100",
      "11100000",
      "10010010",
      "11111101",
  });
}

// Eight-qubit check matrix with exactly one anticommuting row pair: rows 7
// and 8 (1-indexed). Symplectic Gram-Schmidt keeps rows 1..6 isotropic and
// pairs the last two rows.
inline eacq::SympMat eight_qubit_check() {
  return eacq::SympMat::from_strings(8, {
                                            "11000000|00000000",
                                            "10100000|00000000",
                                            "00011000|00000000",
                                            "00010100|00000000",
                                            "00000011|00000000",
                                            "00000000|11111100",
                                            "00000001|00000000",
                                            "00000000|11100011",
                                        });
}

// 5x8 selector for the eight-qubit example. Rank 5; kernel dimension 3 with
// canonical basis 10001100 / 01101110 / 00010111 (pivots 0, 1, 3).
inline eacq::BitMat classical_check_b() {
  return eacq::BitMat::from_strings({
      "10101000",
      "01100000",
      "10110100",
      "00110010",
      "01101101",
  });
}

}  // namespace fixtures
