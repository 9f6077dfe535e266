#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace repring {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponents = std::vector<int>;

// Bad input from a caller (mismatched groups, malformed labels, ...).
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline long long total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0LL);
}

// Descending deg-lex, so map iteration yields the leading term first.
struct DegLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

inline Rational rational_pow(const Rational& x, long e) {
  if (e == 0) return 1;
  Rational base = x;
  if (e < 0) {
    if (base == 0) throw usage_error("negative power of zero");
    base = 1 / base;
    e = -e;
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

namespace detail {

// "c*" prefix for a term whose sign has already been written.
inline void write_magnitude(std::ostream& os, const Integer& c, bool has_rest) {
  Integer a = abs(c);
  if (!has_rest) {
    os << a;
  } else if (a != 1) {
    os << a << '*';
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// MLaurent

class MLaurent {
 public:
  using Variables = std::shared_ptr<const std::vector<std::string>>;
  using Terms = std::map<Exponents, Integer, DegLexGreater>;

  MLaurent() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit MLaurent(std::vector<std::string> vars)
      : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {}
  explicit MLaurent(Variables vars) : vars_(std::move(vars)) {}

  static MLaurent constant(const MLaurent& like, const Integer& c) {
    MLaurent r(like.vars_);
    r.add_term(Exponents(like.nvars(), 0), c);
    return r;
  }
  static MLaurent constant(std::vector<std::string> vars, const Integer& c) {
    return constant(MLaurent(std::move(vars)), c);
  }
  static MLaurent monomial(Variables vars, Exponents e, const Integer& c = 1) {
    MLaurent r(std::move(vars));
    r.add_term(e, c);
    return r;
  }
  static MLaurent variable(Variables vars, std::size_t i, int power = 1) {
    Exponents e(vars->size(), 0);
    e.at(i) = power;
    return monomial(std::move(vars), std::move(e));
  }

  const Variables& variable_list() const { return vars_; }
  const std::vector<std::string>& variables() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Exponents& e, const Integer& c) {
    if (e.size() != nvars()) throw usage_error("exponent vector length does not match variables");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool same_variables(const MLaurent& o) const {
    return vars_ == o.vars_ || *vars_ == *o.vars_;
  }
  void require_compatible(const MLaurent& o) const {
    if (!same_variables(o)) throw usage_error("Laurent polynomials over different variable lists");
  }

  MLaurent& operator+=(const MLaurent& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MLaurent& operator-=(const MLaurent& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MLaurent& operator*=(const Integer& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= c;
    }
    return *this;
  }

  friend MLaurent operator+(MLaurent a, const MLaurent& b) { return a += b; }
  friend MLaurent operator-(MLaurent a, const MLaurent& b) { return a -= b; }
  friend MLaurent operator-(MLaurent a) { return a *= Integer(-1); }
  friend MLaurent operator*(MLaurent a, const Integer& c) { return a *= c; }
  friend MLaurent operator*(const Integer& c, MLaurent a) { return a *= c; }

  friend MLaurent operator*(const MLaurent& a, const MLaurent& b) {
    a.require_compatible(b);
    MLaurent r(a.vars_);
    Exponents e(a.nvars());
    Integer prod;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        prod = ca * cb;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          r.terms_.emplace(e, prod);
        } else {
          it->second += prod;
        }
      }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
      it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
    }
    return r;
  }
  MLaurent& operator*=(const MLaurent& o) { return *this = *this * o; }

  friend bool operator==(const MLaurent& a, const MLaurent& b) {
    return a.same_variables(b) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MLaurent& a, const MLaurent& b) { return !(a == b); }

  MLaurent pow(unsigned n) const {
    MLaurent r = constant(*this, 1), base = *this;
    while (n) {
      if (n & 1u) r *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw usage_error("evaluation point has wrong length");
    for (const auto& v : point) {
      if (v == 0) throw usage_error("evaluation at a zero coordinate");
    }
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) t *= rational_pow(point[i], e[i]);
      }
      s += t;
    }
    return s;
  }

  Rational eval(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> p;
    for (const auto& v : *vars_) {
      auto it = point.find(v);
      if (it == point.end()) throw usage_error("no value for variable " + v);
      p.push_back(it->second);
    }
    return eval(p);
  }

  // Substitute each variable by a Laurent polynomial over another variable list.
  MLaurent substitute(const std::vector<MLaurent>& images, const MLaurent& like) const {
    if (images.size() != nvars()) throw usage_error("substitution has wrong length");
    MLaurent r(like.vars_);
    for (const auto& [e, c] : terms_) {
      MLaurent t = constant(like, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) {
          t *= images[i].pow(static_cast<unsigned>(e[i]));
        } else if (e[i] < 0) {
          const auto& img = images[i];
          if (img.size() != 1) throw usage_error("negative power of a non-monomial");
          auto [ie, ic] = *img.terms().begin();
          if (abs(ic) != 1) throw usage_error("negative power of a non-unit monomial");
          Exponents inv(ie.size());
          for (std::size_t k = 0; k < ie.size(); ++k) inv[k] = -ie[k];
          t *= monomial(like.vars_, inv, ic).pow(static_cast<unsigned>(-e[i]));
        }
      }
      r += t;
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::ostringstream mono;
      bool any = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) mono << '*';
        any = true;
        mono << (*vars_)[i];
        if (e[i] != 1) mono << '^' << e[i];
      }
      detail::write_magnitude(os, c, any);
      os << mono.str();
    }
    return os.str();
  }

 private:
  Variables vars_;
  Terms terms_;
};

inline MLaurent mlaurent_mul(const MLaurent& a, const MLaurent& b) { return a * b; }

inline Rational mlaurent_eval(const MLaurent& f, const std::map<std::string, Rational>& point) {
  return f.eval(point);
}

inline std::vector<std::string> numbered_variables(const std::string& stem, int count) {
  std::vector<std::string> v;
  for (int i = 1; i <= count; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

// e_0..e_d of an alphabet, by the usual one-letter-at-a-time recursion.
inline std::vector<MLaurent> elementary_symmetric_all(const std::vector<MLaurent>& alphabet,
                                                      const MLaurent& like, int dmax) {
  std::vector<MLaurent> e(static_cast<std::size_t>(dmax) + 1, MLaurent(like.variable_list()));
  e[0] = MLaurent::constant(like, 1);
  for (const auto& x : alphabet) {
    for (int k = dmax; k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e;
}

inline MLaurent elementary_symmetric(const std::vector<MLaurent>& alphabet, const MLaurent& like,
                                     int d) {
  if (d < 0) return MLaurent(like.variable_list());
  return elementary_symmetric_all(alphabet, like, d)[d];
}

// ---------------------------------------------------------------------------
// QScalar: element of Z[q^{1/2}, q^{-1/2}], keyed by twice the exponent.

class QScalar {
 public:
  using Terms = std::map<int, Integer, std::greater<int>>;

  QScalar() = default;
  QScalar(long c) { add(0, c); }  // NOLINT implicit on purpose
  QScalar(const Integer& c) { add(0, c); }  // NOLINT

  static QScalar half_power(int twice_exponent, const Integer& c = 1) {
    QScalar r;
    r.add(twice_exponent, c);
    return r;
  }
  static QScalar q_power(int exponent, const Integer& c = 1) { return half_power(2 * exponent, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int twice_exponent, const Integer& c) {
    if (c == 0) return;
    auto& slot = terms_[twice_exponent];
    slot += c;
    if (slot == 0) terms_.erase(twice_exponent);
  }

  QScalar& operator+=(const QScalar& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  QScalar& operator-=(const QScalar& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator-(const QScalar& a) { return QScalar() - a; }
  friend QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
    }
    return r;
  }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  // Value at q = 1.
  Integer at_one() const {
    Integer s = 0;
    for (const auto& kv : terms_) s += kv.second;
    return s;
  }

  bool single_term() const { return terms_.size() == 1; }
  bool negative_single() const { return single_term() && terms_.begin()->second < 0; }

  static std::string power_text(int twice_exponent) {
    if (twice_exponent == 0) return "";
    if (twice_exponent == 2) return "q";
    if (twice_exponent % 2 == 0) return "q^" + std::to_string(twice_exponent / 2);
    return "q^(" + std::to_string(twice_exponent) + "/2)";
  }

  // Text with the sign of a single-term scalar dropped; used after a separator.
  std::string magnitude_text(bool followed_by_factor) const {
    std::ostringstream os;
    auto [k, c] = *terms_.begin();
    std::string p = power_text(k);
    if (p.empty()) {
      detail::write_magnitude(os, c, followed_by_factor);
    } else {
      if (abs(c) != 1) os << abs(c) << '*';
      os << p;
      if (followed_by_factor) os << '*';
    }
    return os.str();
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string p = power_text(k);
      if (p.empty()) {
        os << abs(c);
      } else {
        if (abs(c) != 1) os << abs(c) << '*';
        os << p;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Univariate integer polynomials and rational generating functions.

using UPoly = std::vector<Integer>;  // coefficient of t^i at index i

inline void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_add(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  upoly_trim(a);
  return a;
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  upoly_trim(r);
  return r;
}

inline UPoly upoly_monomial(int k, const Integer& c = 1) {
  UPoly p(static_cast<std::size_t>(k) + 1);
  p[k] = c;
  upoly_trim(p);
  return p;
}

// 1 - t^k
inline UPoly one_minus_t(int k) {
  UPoly p = upoly_monomial(k, -1);
  p[0] += 1;
  upoly_trim(p);
  return p;
}

inline std::string upoly_to_string(const UPoly& p, const std::string& var = "t") {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Integer& c = p[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    detail::write_magnitude(os, c, i != 0);
    if (i == 1) os << var;
    if (i > 1) os << var << '^' << i;
  }
  return first ? "0" : os.str();
}

struct RationalGF {
  UPoly numerator;
  std::vector<int> denominator;  // factors (1 - t^k)

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << upoly_to_string(numerator) << ")/(";
    for (std::size_t i = 0; i < denominator.size(); ++i) {
      if (i) os << '*';
      os << "(1 - t";
      if (denominator[i] != 1) os << '^' << denominator[i];
      os << ')';
    }
    os << ')';
    return os.str();
  }
};

inline std::vector<Integer> gf_expand(const RationalGF& g, int rmax) {
  if (rmax < 0) throw usage_error("rmax must be nonnegative");
  std::vector<Integer> c(static_cast<std::size_t>(rmax) + 1, 0);
  for (std::size_t i = 0; i < g.numerator.size() && i <= static_cast<std::size_t>(rmax); ++i) {
    c[i] = g.numerator[i];
  }
  for (int k : g.denominator) {
    if (k < 1) throw usage_error("denominator exponents must be positive");
    // multiply by 1/(1 - t^k): running sum with stride k
    for (int i = k; i <= rmax; ++i) c[i] += c[i - k];
  }
  return c;
}

// ---------------------------------------------------------------------------
// Dense linear algebra over Q and determinants over Laurent polynomials.

using RMatrix = std::vector<std::vector<Rational>>;

// Row-reduces in place and returns the rank.
inline std::size_t rational_rank(RMatrix m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline RMatrix rational_identity(std::size_t n) {
  RMatrix m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RMatrix rational_mul(const RMatrix& a, const RMatrix& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  RMatrix r(n, std::vector<Rational>(p, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  }
  return r;
}

inline RMatrix rational_inverse(RMatrix m) {
  std::size_t n = m.size();
  RMatrix inv = rational_identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw usage_error("singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rational d = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

inline Rational rational_det(RMatrix m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

using LMatrix = std::vector<std::vector<MLaurent>>;

inline LMatrix laurent_matrix(std::size_t n, const MLaurent& like) {
  return LMatrix(n, std::vector<MLaurent>(n, MLaurent(like.variable_list())));
}

inline LMatrix laurent_mul(const LMatrix& a, const LMatrix& b, const MLaurent& like) {
  std::size_t n = a.size();
  LMatrix r = laurent_matrix(n, like);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!b[j][k].is_zero()) r[i][k] += a[i][j] * b[j][k];
      }
    }
  }
  return r;
}

inline LMatrix laurent_transpose(const LMatrix& a) {
  LMatrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = a[j][i];
  }
  return r;
}

namespace detail {

inline MLaurent laurent_det_rec(const LMatrix& m, std::vector<std::size_t>& rows,
                                std::vector<bool>& used_cols, std::size_t depth,
                                const MLaurent& like) {
  if (depth == rows.size()) return MLaurent::constant(like, 1);
  MLaurent sum(like.variable_list());
  std::size_t r = rows[depth];
  int sign = 1;
  for (std::size_t c = 0; c < used_cols.size(); ++c) {
    if (used_cols[c]) continue;
    if (!m[r][c].is_zero()) {
      used_cols[c] = true;
      MLaurent minor = laurent_det_rec(m, rows, used_cols, depth + 1, like);
      used_cols[c] = false;
      if (!minor.is_zero()) {
        MLaurent t = m[r][c] * minor;
        if (sign < 0) t = -t;
        sum += t;
      }
    }
    sign = -sign;  // position among the unused columns
  }
  return sum;
}

}  // namespace detail

// Laplace expansion; the matrices used here are small and sparse.
inline MLaurent laurent_det(const LMatrix& m, const MLaurent& like) {
  std::vector<std::size_t> rows(m.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<bool> used(m.size(), false);
  return detail::laurent_det_rec(m, rows, used, 0, like);
}

inline LMatrix laurent_submatrix(const LMatrix& m, const std::vector<std::size_t>& idx) {
  LMatrix r;
  for (auto i : idx) {
    std::vector<MLaurent> row;
    for (auto j : idx) row.push_back(m[i][j]);
    r.push_back(std::move(row));
  }
  return r;
}

// Sum of the principal d x d minors, i.e. e_d of the eigenvalues.
inline MLaurent principal_minor_sum(const LMatrix& m, int d, const MLaurent& like) {
  std::size_t n = m.size();
  MLaurent s(like.variable_list());
  if (d < 0 || static_cast<std::size_t>(d) > n) return s;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) idx.push_back(i);
    }
    s += laurent_det(laurent_submatrix(m, idx), like);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return s;
}

namespace detail {

inline MLaurent pfaffian_rec(const LMatrix& m, std::vector<std::size_t> idx, const MLaurent& like) {
  if (idx.empty()) return MLaurent::constant(like, 1);
  std::size_t i = idx[0];
  MLaurent sum(like.variable_list());
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::size_t j = idx[k];
    if (m[i][j].is_zero()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < idx.size(); ++t) {
      if (t != k) rest.push_back(idx[t]);
    }
    MLaurent term = m[i][j] * pfaffian_rec(m, rest, like);
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace detail

inline MLaurent laurent_pfaffian(const LMatrix& m, const MLaurent& like) {
  if (m.size() % 2) return MLaurent(like.variable_list());
  std::vector<std::size_t> idx(m.size());
  std::iota(idx.begin(), idx.end(), 0);
  return detail::pfaffian_rec(m, idx, like);
}

}  // namespace repring
