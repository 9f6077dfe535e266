#pragma once

#include <map>
#include <vector>

#include "char_engine.hpp"

namespace repring {

namespace detail {

// Sparse vector in (C^{2l})^{(x)k}; a basis tuple is packed base 2l.
using TensorVec = std::map<long, Rational>;

struct SparseOp {
  std::vector<std::tuple<int, int, int>> entries;  // (row, col, coefficient)
};

// Basis order e_1, e_{-1}, e_2, e_{-2}, ...
inline int pos_index(int i) { return 2 * (i - 1); }
inline int neg_index(int i) { return 2 * (i - 1) + 1; }

inline std::vector<SparseOp> so_raising(int l) {
  std::vector<SparseOp> ops;
  for (int i = 1; i < l; ++i) {
    ops.push_back({{{pos_index(i), pos_index(i + 1), 1}, {neg_index(i + 1), neg_index(i), -1}}});
  }
  ops.push_back({{{pos_index(l - 1), neg_index(l), 1}, {pos_index(l), neg_index(l - 1), -1}}});
  return ops;
}

inline SparseOp transpose_op(const SparseOp& op) {
  SparseOp t;
  for (auto [r, c, x] : op.entries) t.entries.emplace_back(c, r, x);
  return t;
}

class TensorSpace {
 public:
  TensorSpace(int l, int k) : l_(l), k_(k), dim_(2 * l) {}

  std::vector<int> digits(long idx) const {
    std::vector<int> d(k_);
    for (int p = k_ - 1; p >= 0; --p) {
      d[p] = static_cast<int>(idx % dim_);
      idx /= dim_;
    }
    return d;
  }
  long pack(const std::vector<int>& d) const {
    long idx = 0;
    for (int x : d) idx = idx * dim_ + x;
    return idx;
  }
  Weight weight(long idx) const {
    Weight w(l_, 0);
    for (int x : digits(idx)) w[x / 2] += x % 2 ? -1 : 1;
    return w;
  }
  long size() const {
    long s = 1;
    for (int i = 0; i < k_; ++i) s *= dim_;
    return s;
  }

  TensorVec apply(const SparseOp& op, const TensorVec& v) const {
    TensorVec out;
    for (const auto& [idx, c] : v) {
      auto d = digits(idx);
      for (int p = 0; p < k_; ++p) {
        for (auto [r, col, x] : op.entries) {
          if (d[p] != col) continue;
          auto e = d;
          e[p] = r;
          out[pack(e)] += c * x;
        }
      }
    }
    prune(out);
    return out;
  }

  // chi acts on every factor: swap e_l and e_{-l}.
  TensorVec chi(const TensorVec& v) const {
    TensorVec out;
    for (const auto& [idx, c] : v) {
      auto d = digits(idx);
      for (auto& x : d) {
        if (x == pos_index(l_)) {
          x = neg_index(l_);
        } else if (x == neg_index(l_)) {
          x = pos_index(l_);
        }
      }
      out[pack(d)] += c;
    }
    return out;
  }

  static void prune(TensorVec& v) {
    for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
  }

 private:
  int l_, k_, dim_;
};

// Reduced echelon basis of a subspace; pivots are packed tuple indices.
class EchelonBasis {
 public:
  // Reduce v against the basis; returns the residue.
  TensorVec reduce(TensorVec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto it = v.find(pivots_[k]);
      if (it == v.end()) continue;
      Rational c = it->second;
      for (const auto& [idx, x] : rows_[k]) v[idx] -= c * x;
      TensorSpace::prune(v);
    }
    return v;
  }

  bool insert(const TensorVec& v) {
    TensorVec r = reduce(v);
    if (r.empty()) return false;
    long piv = r.begin()->first;
    Rational lead = r.begin()->second;
    for (auto& kv : r) kv.second /= lead;
    for (auto& row : rows_) {
      auto it = row.find(piv);
      if (it == row.end()) continue;
      Rational c = it->second;
      for (const auto& [idx, x] : r) row[idx] -= c * x;
      TensorSpace::prune(row);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }

  // Coordinate of v (assumed in the span) on basis row k.
  Rational coordinate(const TensorVec& v, std::size_t k) const {
    auto it = v.find(pivots_[k]);
    return it == v.end() ? Rational(0) : it->second;
  }

  std::size_t size() const { return rows_.size(); }
  const TensorVec& row(std::size_t k) const { return rows_[k]; }

 private:
  std::vector<TensorVec> rows_;
  std::vector<long> pivots_;
};

}  // namespace detail

// Twining character of the SO(2l) irreducible with self-chi weight lambda,
// computed from an explicit highest-weight submodule of a tensor power of the
// defining representation. Same variable convention as twining_folded.
inline MLaurent twining_bruteforce(int l, const Weight& lambda) {
  if (l < 2 || l > 3) throw usage_error("twining_bruteforce supports l = 2, 3");
  auto check = label_validate(GroupSpec{Family::SO, 2 * l}, lambda);
  if (!check || lambda.back() != 0) throw usage_error("twining_bruteforce needs a self-chi dominant weight");
  const int k = partition_size(lambda);
  if (k > 4) throw usage_error("twining_bruteforce is capped at |lambda| <= 4");

  MLaurent like(torus_variables(GroupSpec{Family::SO, 2 * l}));
  if (k == 0) return MLaurent::constant(like, 1);

  detail::TensorSpace space(l, k);
  auto raising = detail::so_raising(l);
  std::vector<detail::SparseOp> lowering;
  for (const auto& op : raising) lowering.push_back(detail::transpose_op(op));

  // Highest-weight vectors: kernel of all raising operators on the lambda weight space.
  std::vector<long> cols;
  for (long idx = 0; idx < space.size(); ++idx) {
    if (space.weight(idx) == lambda) cols.push_back(idx);
  }
  std::map<std::pair<int, long>, std::size_t> row_of;
  RMatrix m;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t i = 0; i < raising.size(); ++i) {
      for (const auto& [idx, x] : space.apply(raising[i], {{cols[c], 1}})) {
        auto key = std::make_pair(static_cast<int>(i), idx);
        auto it = row_of.find(key);
        if (it == row_of.end()) {
          it = row_of.emplace(key, m.size()).first;
          m.emplace_back(cols.size(), Rational(0));
        }
        m[it->second][c] += x;
      }
    }
  }
  // Nullspace by row reduction.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    Rational lead = m[rank][c];
    for (auto& x : m[rank]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < cols.size(); ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free_col)) != pivot_col.end()) ++free_col;
  if (free_col >= cols.size()) throw std::logic_error("no highest-weight vector of the requested weight");
  detail::TensorVec hw{{cols[free_col], 1}};
  for (std::size_t r = 0; r < rank; ++r) {
    if (m[r][free_col] != 0) hw[cols[pivot_col[r]]] = -m[r][free_col];
  }
  // Make the generating vector a chi-eigenvector so the module is chi-stable.
  detail::TensorVec sym = hw;
  for (const auto& [idx, x] : space.chi(hw)) sym[idx] += x;
  detail::TensorSpace::prune(sym);
  if (!sym.empty()) hw = sym;

  // Span the module by lowering operators, one echelon basis per weight space.
  std::map<Weight, detail::EchelonBasis> spaces;
  std::vector<std::pair<Weight, detail::TensorVec>> queue{{lambda, hw}};
  spaces[lambda].insert(hw);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& f : lowering) {
      detail::TensorVec v = space.apply(f, queue[q].second);
      if (v.empty()) continue;
      Weight w = space.weight(v.begin()->first);
      if (spaces[w].insert(v)) queue.emplace_back(w, v);
    }
  }

  MLaurent out(like.variable_list());
  for (const auto& [w, basis] : spaces) {
    if (w.back() != 0) continue;
    Rational tr = 0;
    for (std::size_t r = 0; r < basis.size(); ++r) tr += basis.coordinate(space.chi(basis.row(r)), r);
    if (tr.get_den() != 1) throw std::logic_error("non-integral twining trace");
    Exponents e(l, 0);
    std::copy(w.begin(), w.end() - 1, e.begin() + 1);
    out.add_term(e, tr.get_num());
  }
  return out;
}

}  // namespace repring
