#include "eacq/catalog.hpp"

#include <cstdint>
#include <vector>

namespace eacq {
namespace {

/* GF(2^6) arithmetic. Elements are bit-packed polynomials of degree < 6
 * reduced modulo the primitive polynomial x^6 + x + 1 (0x43); x itself is
 * a generator of the multiplicative group (order 63). */
constexpr unsigned kPrimPoly = 0x43;
constexpr std::size_t kBlockLength = 63;

unsigned gf_mul(unsigned a, unsigned b) {
  unsigned r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & 0x40) a ^= kPrimPoly;
  }
  return r;
}

// alpha^0 .. alpha^62 for alpha = x.
std::vector<unsigned> alpha_powers() {
  std::vector<unsigned> p(kBlockLength);
  p[0] = 1;
  for (std::size_t i = 1; i < kBlockLength; ++i) p[i] = gf_mul(p[i - 1], 2);
  return p;
}

// {c, 2c, 4c, ...} mod 63.
std::vector<std::size_t> cyclotomic_coset(std::size_t c) {
  std::vector<std::size_t> out;
  std::size_t s = c % kBlockLength;
  do {
    out.push_back(s);
    s = (2 * s) % kBlockLength;
  } while (s != out.front());
  return out;
}

/* Minimal polynomial of alpha^c: the product over its cyclotomic coset of
 * (x + alpha^i). The conjugate closure forces every coefficient into the
 * base field. Coefficients are returned constant term first. */
std::vector<unsigned> minimal_polynomial(const std::vector<unsigned>& alpha,
                                         std::size_t c) {
  std::vector<unsigned> poly{1};
  for (std::size_t i : cyclotomic_coset(c)) {
    std::vector<unsigned> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] ^= poly[d];
      next[d] ^= gf_mul(poly[d], alpha[i]);
    }
    poly = std::move(next);
  }
  for (unsigned co : poly)
    if (co > 1)
      throw Error("minimal polynomial has a coefficient outside GF(2)");
  return poly;
}

std::vector<unsigned> poly_mul_gf2(const std::vector<unsigned>& a,
                                   const std::vector<unsigned>& b) {
  std::vector<unsigned> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
  return out;
}

// (x^63 + 1) / g, exact by construction (g divides x^63 + 1).
std::vector<unsigned> check_polynomial(const std::vector<unsigned>& g) {
  const std::size_t gdeg = g.size() - 1;
  std::vector<unsigned> rem(kBlockLength + 1, 0);
  rem[0] = rem[kBlockLength] = 1;
  std::vector<unsigned> h(kBlockLength - gdeg + 1, 0);
  for (std::size_t d = kBlockLength + 1; d-- > gdeg;) {
    if (!rem[d]) continue;
    std::size_t k = d - gdeg;
    h[k] = 1;
    for (std::size_t i = 0; i < g.size(); ++i) rem[k + i] ^= g[i];
  }
  for (unsigned co : rem)
    if (co) throw Error("check polynomial division left a remainder");
  return h;
}

std::vector<unsigned> bch_generator_coeffs() {
  auto alpha = alpha_powers();
  std::vector<unsigned> g{1};
  for (std::size_t c : {1u, 3u, 5u, 7u})
    g = poly_mul_gf2(g, minimal_polynomial(alpha, c));
  return g;
}

}  // namespace

SympMat shor_hq() {
  return SympMat::from_strings(
      9, {"110000000|000000000", "011000000|000000000", "000110000|000000000",
          "000011000|000000000", "000000110|000000000", "000000011|000000000",
          "000000000|111111000", "000000000|000111111"});
}

BitMat classical_8_3_a() {
  return BitMat::from_strings(
      {"10101000", "00010100", "11100000", "10010010", "11111101"});
}

BitMat classical_8_3_b() {
  return BitMat::from_strings(
      {"10101000", "01100000", "10110100", "00110010", "01101101"});
}

BitVec bch_63_39_9_generator() {
  auto g = bch_generator_coeffs();
  BitVec out(g.size());
  for (std::size_t d = 0; d < g.size(); ++d) out.set(d, g[d] != 0);
  return out;
}

/* Parity-check matrix of the cyclic code: row i holds the coefficients of
 * x^i * h~(x), where h~ is the reciprocal of the check polynomial
 * h = (x^63 + 1)/g. The leading coefficient of h puts a staircase of ones
 * in columns 0..23, so the 24 rows are independent by construction. */
BitMat bch_63_39_9() {
  auto g = bch_generator_coeffs();
  auto h = check_polynomial(g);
  const std::size_t hdeg = h.size() - 1;
  BitMat out(kBlockLength - hdeg, kBlockLength);
  for (std::size_t i = 0; i < out.num_rows(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      out.set(i, i + j, h[hdeg - j] != 0);
  return out;
}

EacqCode ea_css(const BitMat& h) {
  const std::size_t r = h.num_rows();
  const std::size_t n = h.num_cols();
  if (rank(h) != r) throw Error("classical parity check has dependent rows");
  SympMat hq(n);
  for (std::size_t i = 0; i < r; ++i) {
    SympVec zrow(n);
    zrow.z = h.row(i);
    hq.append_row(zrow);
  }
  for (std::size_t i = 0; i < r; ++i) {
    SympVec xrow(n);
    xrow.x = h.row(i);
    hq.append_row(xrow);
  }
  return build(hq, BitMat::identity(2 * r));
}

NamedCode eacq_9_1_3() {
  NamedCode nc;
  nc.name = "eacq-9-1-3";
  nc.bracket = "[[9,1:3,3;0]]";
  nc.code = build(shor_hq(), classical_8_3_a());
  nc.code.d_claimed = 3;
  nc.notes =
      "nine-qubit block stabilizer enhanced by the [8,3] classical check "
      "(variant a). The bracket records the construction's claimed "
      "distance; exhaustive search finds an undetected weight-2 error.";
  return nc;
}

NamedCode eacq_8_1_3_1() {
  NamedCode nc;
  nc.name = "eacq-8-1-3-1";
  nc.bracket = "[[8,1:3,3;1]]";
  nc.code = build(
      SympMat::from_strings(8, {"11000000|00000000", "10100000|00000000",
                                "00011000|00000000", "00010100|00000000",
                                "00000011|00000000", "00000000|11111100",
                                "00000001|00000000", "00000000|11100011"}),
      classical_8_3_b());
  nc.code.d_claimed = 3;
  nc.notes =
      "eight-qubit stabilizer using one ebit, enhanced by the [8,3] "
      "classical check (variant b). The bracket records the construction's "
      "claimed distance; exhaustive search finds an undetected weight-2 "
      "error.";
  return nc;
}

NamedCode ea_css_63_21_9() {
  NamedCode nc;
  nc.name = "ea-css-63-21-9";
  nc.bracket = "[[63,21,9;6]]";
  nc.code = ea_css(bch_63_39_9());
  nc.code.d_claimed = 9;
  nc.notes =
      "CSS-style doubling of the [63,39,9] BCH parity check; the six "
      "hyperbolic generator pairs consume six ebits.";
  return nc;
}

NamedCode eacq_63_21_12() {
  NamedCode nc;
  nc.name = "eacq-63-21-12";
  nc.bracket = "[[63,21:12,7;6]]";
  nc.code = enhance(ea_css(bch_63_39_9()), 0, 6);
  nc.code.d_claimed = 7;
  nc.notes =
      "the ea-css-63-21-9 code with all six hyperbolic pairs moved to the "
      "classical side, trading quantum syndrome bits for twelve classical "
      "bits.";
  return nc;
}

const std::vector<NamedCode>& catalog() {
  static const std::vector<NamedCode> codes = {
      eacq_9_1_3(), eacq_8_1_3_1(), ea_css_63_21_9(), eacq_63_21_12()};
  return codes;
}

const NamedCode* find_code(const std::string& name) {
  for (const auto& nc : catalog())
    if (nc.name == name) return &nc;
  return nullptr;
}

}  // namespace eacq
