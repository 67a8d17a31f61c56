#include "eacq/gf2.hpp"

#include <algorithm>
#include <bit>

namespace eacq {

BitVec BitVec::from_string(const std::string& s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') v.set(i, true);
    else if (s[i] != '0') throw Error("invalid bit character '" + std::string(1, s[i]) + "'");
  }
  return v;
}

BitVec BitVec::unit(std::size_t n, std::size_t i) {
  BitVec v(n);
  v.set(i, true);
  return v;
}

void BitVec::xor_in(const BitVec& o) {
  if (o.size_ != size_) throw Error("BitVec size mismatch in xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
}

bool BitVec::any() const {
  for (std::uint64_t w : words_) if (w) return true;
  return false;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::size_t BitVec::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
  }
  return size_;
}

int BitVec::dot(const BitVec& o) const {
  if (o.size_ != size_) throw Error("BitVec size mismatch in dot");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
  return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) if (get(i)) s[i] = '1';
  return s;
}

bool BitVec::lex_less(const BitVec& o) const {
  if (size_ != o.size_) return size_ < o.size_;
  for (std::size_t i = 0; i < size_; ++i) {
    bool a = get(i), b = o.get(i);
    if (a != b) return b;  // '0' < '1'
  }
  return false;
}

std::uint64_t BitVec::hash() const {
  // FNV-1a over the words plus the length.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(size_);
  for (std::uint64_t w : words_) mix(w);
  return h;
}

BitMat BitMat::identity(std::size_t n) {
  BitMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMat BitMat::from_strings(const std::vector<std::string>& rows) {
  BitMat m;
  for (const auto& s : rows) m.append_row(BitVec::from_string(s));
  return m;
}

void BitMat::append_row(const BitVec& r) {
  if (rows_.empty()) cols_ = r.size();
  else if (r.size() != cols_) throw Error("row length mismatch");
  rows_.push_back(r);
}

RowSolver::RowSolver(const BitMat& m) : ncols_(m.num_cols()), nsrc_(m.num_rows()) {
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    BitVec r = m.row(i);
    BitVec combo = BitVec::unit(nsrc_ == 0 ? 1 : nsrc_, nsrc_ == 0 ? 0 : i);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (r.get(pivots_[k])) {
        r.xor_in(rows_[k]);
        combo.xor_in(combos_[k]);
      }
    }
    std::size_t p = r.first_set();
    if (p == r.size()) continue;  // dependent row
    // Back-substitute to keep pivot columns clear above as well (reduced form).
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k].get(p)) {
        rows_[k].xor_in(r);
        combos_[k].xor_in(combo);
      }
    }
    // Insert keeping pivot columns sorted.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, r);
    combos_.insert(combos_.begin() + pos, combo);
    pivots_.insert(pivots_.begin() + pos, p);
  }
}

bool RowSolver::contains(const BitVec& v) const {
  if (v.size() != ncols_) throw Error("vector length mismatch in rowspace query");
  BitVec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (r.get(pivots_[k])) r.xor_in(rows_[k]);
  }
  return r.is_zero();
}

std::optional<BitVec> RowSolver::express(const BitVec& v) const {
  if (v.size() != ncols_) throw Error("vector length mismatch in rowspace query");
  BitVec r = v;
  BitVec combo(nsrc_ == 0 ? 1 : nsrc_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (r.get(pivots_[k])) {
      r.xor_in(rows_[k]);
      combo.xor_in(combos_[k]);
    }
  }
  if (!r.is_zero()) return std::nullopt;
  if (nsrc_ == 0) return BitVec(0);
  return combo;
}

std::size_t rank(const BitMat& m) { return RowSolver(m).rank(); }

BitMat rref(const BitMat& m, std::vector<std::size_t>* pivots) {
  std::vector<BitVec> rows;
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    BitVec r = m.row(i);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (r.get(piv[k])) r.xor_in(rows[k]);
    }
    std::size_t p = r.first_set();
    if (p == r.size()) continue;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].get(p)) rows[k].xor_in(r);
    }
    std::size_t pos = 0;
    while (pos < piv.size() && piv[pos] < p) ++pos;
    rows.insert(rows.begin() + pos, r);
    piv.insert(piv.begin() + pos, p);
  }
  BitMat res;
  for (const auto& r : rows) res.append_row(r);
  if (res.num_rows() == 0) res = BitMat(0, m.num_cols());
  if (pivots) *pivots = piv;
  return res;
}

BitMat kernel(const BitMat& m) {
  std::vector<std::size_t> piv;
  BitMat r = rref(m, &piv);
  std::size_t n = m.num_cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : piv) is_pivot[p] = true;
  BitMat basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(n);
    v.set(f, true);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (r.get(i, f)) v.set(piv[i], true);
    }
    basis.append_row(v);
  }
  if (basis.num_rows() == 0) return BitMat(0, n);
  // Canonicalize: the returned basis is itself in reduced echelon form.
  return rref(basis, nullptr);
}

BitMat matmul(const BitMat& a, const BitMat& b) {
  if (a.num_cols() != b.num_rows()) throw Error("matmul dimension mismatch");
  BitMat out(a.num_rows(), b.num_cols());
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    for (std::size_t k = 0; k < a.num_cols(); ++k) {
      if (a.get(i, k)) out.row(i).xor_in(b.row(k));
    }
  }
  return out;
}

BitMat inverse(const BitMat& m) {
  if (m.num_rows() != m.num_cols()) throw Error("inverse requires a square matrix");
  RowSolver solver(m);
  if (solver.rank() != m.num_rows()) throw Error("matrix is singular");
  BitMat inv(m.num_rows(), m.num_rows());
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    // Row i of the inverse satisfies row * M = e_i.
    inv.row(i) = *solver.express(BitVec::unit(m.num_cols(), i));
  }
  return inv;
}

bool rowspace_contains(const BitMat& m, const BitVec& v) {
  return RowSolver(m).contains(v);
}

SympVec::SympVec(BitVec z_in, BitVec x_in) : z(std::move(z_in)), x(std::move(x_in)) {
  if (z.size() != x.size()) throw Error("z and x halves differ in length");
}

SympVec SympVec::from_string(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw Error("missing '|' separator in symplectic row");
  return SympVec(BitVec::from_string(s.substr(0, bar)),
                 BitVec::from_string(s.substr(bar + 1)));
}

std::size_t SympVec::weight() const {
  std::size_t c = 0;
  const auto& zw = z.words();
  const auto& xw = x.words();
  for (std::size_t w = 0; w < zw.size(); ++w) c += std::popcount(zw[w] | xw[w]);
  return c;
}

void SympVec::xor_in(const SympVec& o) {
  z.xor_in(o.z);
  x.xor_in(o.x);
}

BitVec SympVec::to_bits() const {
  std::size_t n = num_qubits();
  BitVec b(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (z.get(i)) b.set(i, true);
    if (x.get(i)) b.set(n + i, true);
  }
  return b;
}

SympVec SympVec::from_bits(const BitVec& b) {
  if (b.size() % 2 != 0) throw Error("flat symplectic vector must have even length");
  std::size_t n = b.size() / 2;
  SympVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (b.get(i)) v.z.set(i, true);
    if (b.get(n + i)) v.x.set(i, true);
  }
  return v;
}

std::string SympVec::to_string() const {
  return z.to_string() + "|" + x.to_string();
}

int symplectic_product(const SympVec& u, const SympVec& v) {
  return u.z.dot(v.x) ^ u.x.dot(v.z);
}

SympMat SympMat::from_strings(std::size_t n, const std::vector<std::string>& strs) {
  SympMat m(n);
  for (const auto& s : strs) m.append_row(SympVec::from_string(s));
  return m;
}

void SympMat::append_row(const SympVec& r) {
  if (rows.empty() && n_qubits == 0) n_qubits = r.num_qubits();
  if (r.num_qubits() != n_qubits) throw Error("symplectic row qubit-count mismatch");
  rows.push_back(r);
}

BitMat SympMat::to_bitmat() const {
  BitMat m(0, 2 * n_qubits);
  for (const auto& r : rows) m.append_row(r.to_bits());
  if (m.num_rows() == 0) m = BitMat(0, 2 * n_qubits);
  return m;
}

BitMat gram_matrix(const SympMat& m) {
  std::size_t k = m.num_rows();
  BitMat g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (symplectic_product(m.rows[i], m.rows[j])) {
        g.set(i, j, true);
        g.set(j, i, true);
      }
    }
  }
  return g;
}

SympMat matmul(const BitMat& coeffs, const SympMat& m) {
  if (coeffs.num_cols() != m.num_rows()) throw Error("matmul dimension mismatch");
  SympMat out(m.n_qubits);
  for (std::size_t i = 0; i < coeffs.num_rows(); ++i) {
    SympVec acc(m.n_qubits);
    for (std::size_t k = 0; k < coeffs.num_cols(); ++k) {
      if (coeffs.get(i, k)) acc.xor_in(m.rows[k]);
    }
    out.append_row(acc);
  }
  return out;
}

std::size_t rank(const SympMat& m) { return rank(m.to_bitmat()); }

bool rowspace_contains(const SympMat& m, const SympVec& v) {
  if (v.num_qubits() != m.n_qubits) throw Error("qubit-count mismatch in rowspace query");
  return rowspace_contains(m.to_bitmat(), v.to_bits());
}

GramSchmidtResult symplectic_gram_schmidt(const SympMat& m) {
  std::size_t k = m.num_rows();
  if (rank(m) != k) throw Error("symplectic gram-schmidt requires independent rows");

  struct Working {
    SympVec v;
    BitVec combo;  // expression over the input rows
  };
  std::vector<Working> unpaired;
  std::vector<std::pair<Working, Working>> pairs;

  for (std::size_t i = 0; i < k; ++i) {
    Working w{m.rows[i], BitVec::unit(k, i)};
    // Sweep against the pairs formed so far, making w commute with both members.
    for (auto& pr : pairs) {
      if (symplectic_product(w.v, pr.second.v)) {
        w.v.xor_in(pr.first.v);
        w.combo.xor_in(pr.first.combo);
      }
      if (symplectic_product(w.v, pr.first.v)) {
        w.v.xor_in(pr.second.v);
        w.combo.xor_in(pr.second.combo);
      }
    }
    // Pair with the first earlier unpaired row it anticommutes with.
    std::size_t mate = unpaired.size();
    for (std::size_t u = 0; u < unpaired.size(); ++u) {
      if (symplectic_product(unpaired[u].v, w.v)) { mate = u; break; }
    }
    if (mate == unpaired.size()) {
      unpaired.push_back(std::move(w));
      continue;
    }
    Working u = std::move(unpaired[mate]);
    unpaired.erase(unpaired.begin() + mate);
    // Later unpaired rows may also anticommute with w; adding u fixes them
    // without disturbing their other products.
    for (auto& other : unpaired) {
      if (symplectic_product(other.v, w.v)) {
        other.v.xor_in(u.v);
        other.combo.xor_in(u.combo);
      }
    }
    pairs.push_back({std::move(u), std::move(w)});
  }

  GramSchmidtResult res;
  res.isotropic = SympMat(m.n_qubits);
  BitMat transform(0, k);
  for (auto& w : unpaired) {
    res.isotropic.append_row(w.v);
    transform.append_row(w.combo);
  }
  for (auto& pr : pairs) {
    res.pairs.push_back({pr.first.v, pr.second.v});
    transform.append_row(pr.first.combo);
    transform.append_row(pr.second.combo);
  }
  if (transform.num_rows() == 0) transform = BitMat(0, k);
  res.transform = transform;
  return res;
}

SympMat radical_basis(const SympMat& m) {
  // v = a * M lies in the radical iff a * Gram(M) = 0, so a canonical kernel
  // basis of the Gram matrix yields a canonical radical basis.
  BitMat g = gram_matrix(m);
  BitMat ker = kernel(g);
  return matmul(ker, m);
}

}  // namespace eacq
