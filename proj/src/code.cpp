#include "eacq/code.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace eacq {

namespace {

// First input-row index involved in a transform row, for error messages.
std::size_t first_support(const BitVec& combo) { return combo.first_set(); }

// Trivial extension of a sender-side row: identity on the receiver's e qubits.
SympVec extend_vec(const SympVec& r, std::size_t e) {
  std::size_t n = r.num_qubits();
  SympVec v(n + e);
  for (std::size_t i = 0; i < n; ++i) {
    if (r.z.get(i)) v.z.set(i, true);
    if (r.x.get(i)) v.x.set(i, true);
  }
  return v;
}

SympMat extend_rows(const SympMat& alice, std::size_t e) {
  SympMat out(alice.n_qubits + e);
  for (const auto& r : alice.rows) out.append_row(extend_vec(r, e));
  return out;
}

}  // namespace

EacqCode build(const SympMat& h_quantum, const BitMat& h_classical) {
  EacqCode code;
  std::size_t n = h_quantum.n_qubits;
  std::size_t m = h_quantum.num_rows();
  if (m == 0) throw Error("h_quantum must have at least one row");
  if (h_classical.num_cols() != m) {
    throw Error("h_classical has " + std::to_string(h_classical.num_cols()) +
                " columns but h_quantum has " + std::to_string(m) + " rows");
  }
  if (h_classical.num_rows() > m) {
    throw Error("h_classical has more rows than h_quantum");
  }
  if (rank(h_quantum) != m) throw Error("h_quantum rows are not independent");
  if (rank(h_classical) != h_classical.num_rows()) {
    throw Error("h_classical rows are not independent");
  }

  GramSchmidtResult gs = symplectic_gram_schmidt(h_quantum);
  std::size_t s = gs.isotropic.num_rows();
  std::size_t e = gs.pairs.size();
  std::size_t c = m - h_classical.num_rows();

  SympMat g_quantum = matmul(h_classical, h_quantum);
  GramSchmidtResult gsq = symplectic_gram_schmidt(g_quantum);
  std::size_t s_q = gsq.isotropic.num_rows();
  std::size_t e_q = gsq.pairs.size();
  if (s_q > s) {
    // The classical rows keep one member of a hyperbolic pair quantum while
    // the other leaves the stabilizer; no subgroup split of the required
    // form exists. Identify a broken pair for the message.
    std::string where;
    SympMat gspan = g_quantum;
    for (std::size_t k = 0; k < e; ++k) {
      bool u_in = rowspace_contains(gspan, gs.pairs[k].first);
      bool v_in = rowspace_contains(gspan, gs.pairs[k].second);
      if (u_in != v_in) {
        std::size_t iu = first_support(gs.transform.row(s + 2 * k));
        std::size_t iv = first_support(gs.transform.row(s + 2 * k + 1));
        where = " (h_quantum rows " + std::to_string(iu + 1) + " and " +
                std::to_string(iv + 1) + " form a split pair)";
        break;
      }
    }
    throw Error("h_classical splits a hyperbolic pair of h_quantum" + where);
  }
  std::size_t c1 = s - s_q;
  std::size_t c2 = e - e_q;

  code.params = CodeParams{n, n - s - e, c, e, s, c1, c2};
  code.h_quantum = h_quantum;
  code.h_classical = h_classical;
  code.g_quantum = g_quantum;

  code.radical_basis = radical_basis(h_quantum);
  code.quantum_radical_basis = radical_basis(g_quantum);

  BitMat ker = kernel(h_classical);
  code.classical_kernel = ker;
  for (std::size_t i = 0; i < ker.num_rows(); ++i) {
    code.readout_rows.push_back(ker.row(i).first_set());
  }
  code.classical_readout_gens = SympMat(n);
  for (std::size_t r : code.readout_rows) {
    code.classical_readout_gens.append_row(h_quantum.rows[r]);
  }

  // Logical operators: a hyperbolic basis of the symplectic complement of
  // rowspace(h_quantum), taken modulo its radical. The complement is the
  // kernel of the z/x-swapped flat matrix.
  BitMat swapped(0, 2 * n);
  for (const auto& r : h_quantum.rows) {
    SympVec sw(r.x, r.z);
    swapped.append_row(sw.to_bits());
  }
  BitMat comp = kernel(swapped);
  // Extend the radical to a basis of the complement; the extra vectors
  // represent the logical degrees of freedom.
  BitMat stack = code.radical_basis.to_bitmat();
  SympMat gs_input(n);
  for (std::size_t i = 0; i < code.radical_basis.num_rows(); ++i) {
    gs_input.append_row(code.radical_basis.rows[i]);
  }
  for (std::size_t i = 0; i < comp.num_rows(); ++i) {
    if (!rowspace_contains(stack, comp.row(i))) {
      stack.append_row(comp.row(i));
      gs_input.append_row(SympVec::from_bits(comp.row(i)));
    }
  }
  GramSchmidtResult gsl = symplectic_gram_schmidt(gs_input);
  if (gsl.pairs.size() != code.params.q) {
    throw Error("internal error: logical pair extraction found " +
                std::to_string(gsl.pairs.size()) + " pairs, expected " +
                std::to_string(code.params.q));
  }
  code.logical_z = SympMat(n);
  code.logical_x = SympMat(n);
  for (const auto& pr : gsl.pairs) {
    code.logical_z.append_row(pr.first);
    code.logical_x.append_row(pr.second);
  }

  // Extended generators over n + e qubits: express the canonical
  // Gram-Schmidt rows with their receiver-side halves, then map back to the
  // original row basis through the inverse transform.
  SympMat canon_ext(n + e);
  for (std::size_t i = 0; i < s; ++i) {
    canon_ext.append_row(extend_vec(gs.isotropic.rows[i], e));
  }
  for (std::size_t k = 0; k < e; ++k) {
    SympVec u = extend_vec(gs.pairs[k].first, e);
    u.z.set(n + k, true);
    SympVec v = extend_vec(gs.pairs[k].second, e);
    v.x.set(n + k, true);
    canon_ext.append_row(u);
    canon_ext.append_row(v);
  }
  code.h_quantum_ext = matmul(inverse(gs.transform), canon_ext);
  code.g_quantum_ext = matmul(h_classical, code.h_quantum_ext);
  code.readout_ext = SympMat(n + e);
  for (std::size_t r : code.readout_rows) {
    code.readout_ext.append_row(code.h_quantum_ext.rows[r]);
  }
  code.logical_z_ext = extend_rows(code.logical_z, e);
  code.logical_x_ext = extend_rows(code.logical_x, e);
  return code;
}

BitMat canonical_F(std::size_t s, std::size_t e, std::size_t c1, std::size_t c2) {
  if (c1 > s) throw Error("c1 exceeds the number of isotropic generators");
  if (c2 > e) throw Error("c2 exceeds the number of hyperbolic pairs");
  std::size_t m = s + 2 * e;
  BitMat f(s - c1 + 2 * (e - c2), m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < s - c1; ++i) f.set(r++, c1 + i, true);
  for (std::size_t k = 0; k < e - c2; ++k) f.set(r++, s + c2 + k, true);
  for (std::size_t k = 0; k < e - c2; ++k) f.set(r++, s + e + c2 + k, true);
  return f;
}

BitVec codeword_sign_vector(const EacqCode& code, const BitVec& index) {
  if (index.size() != code.params.c) {
    throw Error("index has " + std::to_string(index.size()) + " bits, expected " +
                std::to_string(code.params.c));
  }
  BitVec y(code.h_quantum.num_rows());
  for (std::size_t j = 0; j < index.size(); ++j) {
    if (index.get(j)) y.xor_in(code.classical_kernel.row(j));
  }
  return y;
}

EacqCode enhance(const EacqCode& code, std::size_t move_isotropic,
                 std::size_t move_pairs) {
  if (code.params.c != 0) throw Error("enhance requires a c = 0 input code");
  GramSchmidtResult gs = symplectic_gram_schmidt(code.h_quantum);
  std::size_t s = gs.isotropic.num_rows();
  std::size_t e = gs.pairs.size();
  if (move_isotropic > s) {
    throw Error("cannot move " + std::to_string(move_isotropic) +
                " isotropic generators; only " + std::to_string(s) + " exist");
  }
  if (move_pairs > e) {
    throw Error("cannot move " + std::to_string(move_pairs) +
                " hyperbolic pairs; only " + std::to_string(e) + " exist");
  }
  // Re-express the code over the canonical generator order
  // [isotropic; pair Z halves; pair X halves] and select everything except
  // the moved tail.
  SympMat hq(code.h_quantum.n_qubits);
  for (std::size_t i = 0; i < s; ++i) hq.append_row(gs.isotropic.rows[i]);
  for (std::size_t k = 0; k < e; ++k) hq.append_row(gs.pairs[k].first);
  for (std::size_t k = 0; k < e; ++k) hq.append_row(gs.pairs[k].second);
  BitMat sel(s - move_isotropic + 2 * (e - move_pairs), s + 2 * e);
  std::size_t r = 0;
  for (std::size_t i = 0; i < s - move_isotropic; ++i) sel.set(r++, i, true);
  for (std::size_t k = 0; k < e - move_pairs; ++k) sel.set(r++, s + k, true);
  for (std::size_t k = 0; k < e - move_pairs; ++k) sel.set(r++, s + e + k, true);
  return build(hq, sel);
}

EacqCode strip(const EacqCode& code) {
  return build(code.h_quantum, BitMat::identity(code.h_quantum.num_rows()));
}

std::pair<SympMat, SympMat> logical_operators(const EacqCode& code) {
  return {code.logical_z, code.logical_x};
}

EacqCode read_code(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error("line " + std::to_string(lineno) + ": " + msg);
  };

  ++lineno;
  if (!std::getline(in, line) || line != "eacq v1") {
    throw fail("expected header 'eacq v1'");
  }
  ++lineno;
  if (!std::getline(in, line)) throw fail("expected 'n <int>  c1 <int>  c2 <int>'");
  std::istringstream hdr(line);
  std::string kn, kc1, kc2;
  long n = -1, c1 = -1, c2 = -1;
  hdr >> kn >> n >> kc1 >> c1 >> kc2 >> c2;
  if (hdr.fail() || kn != "n" || kc1 != "c1" || kc2 != "c2" || n < 1 || c1 < 0 || c2 < 0) {
    throw fail("expected 'n <int>  c1 <int>  c2 <int>'");
  }

  SympMat hq(static_cast<std::size_t>(n));
  BitMat hc;
  bool seen_hc = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag, bits;
    ls >> tag >> bits;
    if (ls.fail() || !(ls >> std::ws).eof()) throw fail("expected '<hq|hc> <bits>'");
    if (tag == "hq") {
      if (seen_hc) throw fail("hq row after hc rows");
      if (bits.size() != static_cast<std::size_t>(2 * n + 1)) {
        throw fail("hq row must have " + std::to_string(2 * n) +
                   " bits and a '|' separator");
      }
      SympVec v;
      try {
        v = SympVec::from_string(bits);
      } catch (const Error& err) {
        throw fail(err.what());
      }
      if (v.num_qubits() != static_cast<std::size_t>(n)) {
        throw fail("hq halves must each have " + std::to_string(n) + " bits");
      }
      hq.append_row(v);
    } else if (tag == "hc") {
      seen_hc = true;
      if (bits.size() != hq.num_rows()) {
        throw fail("hc row must have " + std::to_string(hq.num_rows()) + " bits");
      }
      try {
        hc.append_row(BitVec::from_string(bits));
      } catch (const Error& err) {
        throw fail(err.what());
      }
    } else {
      throw fail("unknown row tag '" + tag + "'");
    }
  }
  ++lineno;
  std::size_t c = static_cast<std::size_t>(c1) + 2 * static_cast<std::size_t>(c2);
  if (hq.num_rows() == 0) throw fail("no hq rows");
  if (hq.num_rows() < c || hc.num_rows() != hq.num_rows() - c) {
    throw fail("expected " + std::to_string(hq.num_rows() >= c ? hq.num_rows() - c : 0) +
               " hc rows for c1 + 2*c2 = " + std::to_string(c) + ", found " +
               std::to_string(hc.num_rows()));
  }
  if (hc.num_rows() == 0) hc = BitMat(0, hq.num_rows());

  EacqCode code = build(hq, hc);
  if (code.params.c1 != static_cast<std::size_t>(c1) ||
      code.params.c2 != static_cast<std::size_t>(c2)) {
    std::string extra;
    BitMat g = gram_matrix(code.g_quantum);
    for (std::size_t i = 0; i < g.num_rows() && extra.empty(); ++i) {
      for (std::size_t j = i + 1; j < g.num_cols(); ++j) {
        if (g.get(i, j)) {
          extra = "; g_quantum rows " + std::to_string(i + 1) + " and " +
                  std::to_string(j + 1) + " anticommute";
          break;
        }
      }
    }
    throw Error("declared c1/c2 (" + std::to_string(c1) + "," + std::to_string(c2) +
                ") do not match derived (" + std::to_string(code.params.c1) + "," +
                std::to_string(code.params.c2) + ")" + extra);
  }
  return code;
}

EacqCode read_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return read_code(f);
}

void write_code(std::ostream& out, const EacqCode& code) {
  out << "eacq v1\n";
  out << "n " << code.params.n << "  c1 " << code.params.c1 << "  c2 "
      << code.params.c2 << "\n";
  for (const auto& r : code.h_quantum.rows) out << "hq " << r.to_string() << "\n";
  for (std::size_t i = 0; i < code.h_classical.num_rows(); ++i) {
    out << "hc " << code.h_classical.row(i).to_string() << "\n";
  }
}

std::string code_to_string(const EacqCode& code) {
  std::ostringstream os;
  write_code(os, code);
  return os.str();
}

std::string code_hash(const EacqCode& code) {
  std::string text = code_to_string(code);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace eacq
