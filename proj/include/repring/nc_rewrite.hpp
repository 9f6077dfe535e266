#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "exact.hpp"

namespace repring {

using Word = std::vector<int>;

// Shortlex: shorter words first, then lexicographic by letter index.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Alphabet = std::shared_ptr<const std::vector<std::string>>;

inline Alphabet make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

class NCPoly {
 public:
  using Terms = std::map<Word, QScalar, ShortLex>;

  explicit NCPoly(Alphabet a) : alphabet_(std::move(a)) {}

  static NCPoly word(Alphabet a, Word w, const QScalar& c = QScalar(1)) {
    NCPoly p(std::move(a));
    p.add(std::move(w), c);
    return p;
  }
  static NCPoly scalar(Alphabet a, const QScalar& c) { return word(std::move(a), {}, c); }

  const Alphabet& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QScalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar() : it->second;
  }

  void add(Word w, const QScalar& c) {
    for (int x : w) {
      if (x < 0 || x >= static_cast<int>(alphabet_->size())) throw usage_error("letter outside the alphabet");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void require_compatible(const NCPoly& o) const {
    if (alphabet_ != o.alphabet_ && *alphabet_ != *o.alphabet_) throw usage_error("NC polynomials over different alphabets");
  }

  NCPoly& operator+=(const NCPoly& o) {
    require_compatible(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    require_compatible(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const QScalar& c, NCPoly a) {
    NCPoly r(a.alphabet_);
    for (auto& [w, x] : a.terms_) r.add(w, c * x);
    return r;
  }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.require_compatible(b);
    NCPoly r(a.alphabet_);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add(std::move(w), ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return *a.alphabet_ == *b.alphabet_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  std::string word_text(const Word& w) const {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += '.';
      s += (*alphabet_)[w[i]];
    }
    return s;
  }

  // Canonical text: shortlex term order, dot-separated words.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string wt = word_text(w);
      if (c.single_term()) {
        bool neg = c.negative_single();
        if (first) {
          if (neg) os << '-';
        } else {
          os << (neg ? " - " : " + ");
        }
        os << c.magnitude_text(!wt.empty()) << wt;
      } else {
        if (!first) os << " + ";
        os << '(' << c.to_string() << ')';
        if (!wt.empty()) os << '*' << wt;
      }
      first = false;
    }
    return os.str();
  }

 private:
  Alphabet alphabet_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Parsing the canonical text (and anything written in the same grammar).

namespace detail {

class NCParser {
 public:
  NCParser(const std::string& text, Alphabet a) : s_(text), a_(std::move(a)) {}

  NCPoly parse() {
    NCPoly p = expression();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw usage_error("polynomial '" + s_ + "' at position " + std::to_string(i_) + ": " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  NCPoly expression() {
    NCPoly p(a_);
    bool neg = eat('-');
    NCPoly t = term();
    p += neg ? QScalar(-1) * t : t;
    while (true) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        break;
      }
    }
    return p;
  }

  NCPoly term() {
    NCPoly t = factor();
    while (eat('*')) t = t * factor();
    return t;
  }

  long integer() {
    std::size_t start = i_;
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
    std::size_t d = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (d == i_) {
      i_ = start;
      fail("expected an integer");
    }
    long v = std::stol(s_.substr(d, i_ - d));
    return neg ? -v : v;
  }

  NCPoly factor() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      NCPoly p = expression();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t d = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return NCPoly::scalar(a_, QScalar(Integer(s_.substr(d, i_ - d))));
    }
    std::string name = identifier();
    if (name == "q") {
      int twice = 2;
      if (eat('^')) {
        skip();
        if (eat('(')) {
          skip();
          long num = integer();
          if (!eat('/')) fail("expected '/'");
          skip();
          long den = integer();
          if (!eat(')')) fail("expected ')'");
          if (den != 1 && den != 2) fail("q exponents must be multiples of 1/2");
          twice = static_cast<int>(den == 2 ? num : 2 * num);
        } else {
          twice = static_cast<int>(2 * integer());
        }
      }
      return NCPoly::scalar(a_, QScalar::half_power(twice));
    }
    Word w{letter(name)};
    while (i_ < s_.size() && s_[i_] == '.') {
      ++i_;
      w.push_back(letter(identifier()));
    }
    return NCPoly::word(a_, w);
  }

  std::string identifier() {
    skip();
    std::size_t start = i_;
    if (i_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[i_]))) fail("expected a generator or scalar");
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return s_.substr(start, i_ - start);
  }

  int letter(const std::string& name) {
    const auto& v = *a_;
    auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) fail("unknown generator '" + name + "'");
    return static_cast<int>(it - v.begin());
  }

  std::string s_;
  Alphabet a_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline NCPoly parse_ncpoly(const std::string& text, const Alphabet& a) { return detail::NCParser(text, a).parse(); }

// ---------------------------------------------------------------------------
// Rewriting.

struct Rule {
  Word lhs;
  NCPoly rhs;
};

struct NCPresentation {
  Alphabet alphabet;
  std::vector<Rule> rules;

  void add_rule(Word lhs, NCPoly rhs) {
    for (const auto& [w, c] : rhs.terms()) {
      if (!ShortLex()(w, lhs)) throw usage_error("rule does not decrease the word order");
    }
    rules.push_back({std::move(lhs), std::move(rhs)});
  }
};

enum class ReduceStrategy { LeftmostFirst, Random };

namespace detail {

struct Occurrence {
  std::size_t rule, pos;
};

inline std::vector<Occurrence> occurrences(const Word& w, const NCPresentation& pres, bool first_only) {
  std::vector<Occurrence> out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t r = 0; r < pres.rules.size(); ++r) {
      const Word& l = pres.rules[r].lhs;
      if (p + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(p))) {
        out.push_back({r, p});
        if (first_only) return out;
      }
    }
  }
  return out;
}

inline NCPoly apply_at(const Word& w, const QScalar& c, const NCPresentation& pres, const Occurrence& o) {
  const Rule& rule = pres.rules[o.rule];
  Word pre(w.begin(), w.begin() + static_cast<long>(o.pos));
  Word post(w.begin() + static_cast<long>(o.pos + rule.lhs.size()), w.end());
  return c * (NCPoly::word(pres.alphabet, pre) * rule.rhs * NCPoly::word(pres.alphabet, post));
}

}  // namespace detail

inline NCPoly reduce(const NCPoly& p, const NCPresentation& pres,
                     ReduceStrategy strategy = ReduceStrategy::LeftmostFirst, std::uint64_t seed = 1) {
  p.require_compatible(NCPoly(pres.alphabet));
  std::mt19937_64 rng(seed);
  NCPoly done(pres.alphabet), work = p;
  while (!work.is_zero()) {
    auto it = std::prev(work.terms().end());  // largest word first
    Word w = it->first;
    QScalar c = it->second;
    work -= NCPoly::word(pres.alphabet, w, c);
    auto occ = detail::occurrences(w, pres, strategy == ReduceStrategy::LeftmostFirst);
    if (occ.empty()) {
      done.add(w, c);
      continue;
    }
    const auto& o = strategy == ReduceStrategy::LeftmostFirst
                        ? occ.front()
                        : occ[std::uniform_int_distribution<std::size_t>(0, occ.size() - 1)(rng)];
    work += detail::apply_at(w, c, pres, o);
  }
  return done;
}

inline bool is_normal(const Word& w, const NCPresentation& pres) {
  return detail::occurrences(w, pres, true).empty();
}

struct Ambiguity {
  Word word;
  NCPoly first, second;
};

// Overlap and inclusion ambiguities of the rule left sides, up to a word length cap.
inline std::vector<Ambiguity> overlap_check(const NCPresentation& pres, std::size_t degree_cap) {
  std::vector<Ambiguity> bad;
  auto resolve = [&](const Word& w, const detail::Occurrence& a, const detail::Occurrence& b) {
    NCPoly x = reduce(detail::apply_at(w, QScalar(1), pres, a), pres);
    NCPoly y = reduce(detail::apply_at(w, QScalar(1), pres, b), pres);
    if (x != y) bad.push_back({w, x, y});
  };
  for (std::size_t i = 0; i < pres.rules.size(); ++i) {
    for (std::size_t j = 0; j < pres.rules.size(); ++j) {
      const Word& u = pres.rules[i].lhs;
      const Word& v = pres.rules[j].lhs;
      // suffix of u equals prefix of v
      for (std::size_t k = 1; k < u.size() && k < v.size(); ++k) {
        if (!std::equal(u.end() - static_cast<long>(k), u.end(), v.begin())) continue;
        Word w = u;
        w.insert(w.end(), v.begin() + static_cast<long>(k), v.end());
        if (w.size() > degree_cap) continue;
        resolve(w, {i, 0}, {j, u.size() - k});
      }
      // v strictly inside u
      if (i != j && v.size() < u.size() && u.size() <= degree_cap) {
        for (std::size_t p = 0; p + v.size() <= u.size(); ++p) {
          if (std::equal(v.begin(), v.end(), u.begin() + static_cast<long>(p))) resolve(u, {i, 0}, {j, p});
        }
      }
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------
// The quantum exterior algebra of O_q(3).

inline NCPresentation exterior_Oq3() {
  NCPresentation pres{make_alphabet({"y1", "y2", "y3"}), {}};
  auto a = pres.alphabet;
  const QScalar q = QScalar::q_power(1);
  const QScalar h = QScalar::half_power(1) - QScalar::half_power(-1);
  pres.add_rule({0, 0}, NCPoly(a));
  pres.add_rule({1, 0}, NCPoly::word(a, {0, 1}, -q));
  pres.add_rule({1, 1}, NCPoly::word(a, {0, 2}, h));
  pres.add_rule({2, 0}, NCPoly::word(a, {0, 2}, QScalar(-1)));
  pres.add_rule({2, 1}, NCPoly::word(a, {1, 2}, -q));
  pres.add_rule({2, 2}, NCPoly(a));
  return pres;
}

// Generators u^i_j, named u{i}_{j}, in row-major order.
inline Alphabet u_alphabet(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) names.push_back("u" + std::to_string(i) + "_" + std::to_string(j));
  }
  return make_alphabet(std::move(names));
}

inline int u_index(int n, int i, int j) { return (i - 1) * n + (j - 1); }

// Trace of the coaction on the degree-2 part: sum over the basis pairs (i, j)
// of the y_i y_j coefficient of y_s y_t against u^s_i u^t_j.
inline NCPoly rho2_Oq3() {
  NCPresentation ext = exterior_Oq3();
  Alphabet u = u_alphabet(3);
  NCPoly rho(u);
  const std::vector<Word> basis{{0, 1}, {1, 2}, {0, 2}};
  for (const auto& b : basis) {
    for (int s = 0; s < 3; ++s) {
      for (int t = 0; t < 3; ++t) {
        QScalar c = reduce(NCPoly::word(ext.alphabet, {s, t}), ext).coefficient(b);
        if (c.is_zero()) continue;
        rho.add({u_index(3, s + 1, b[0] + 1), u_index(3, t + 1, b[1] + 1)}, c);
      }
    }
  }
  return rho;
}

inline NCPoly dq_Oq3() { return parse_ncpoly("u1_1.u3_3 + q^(1/2)*u2_1.u2_3 + q*u3_1.u1_3", u_alphabet(3)); }

// ---------------------------------------------------------------------------
// Quantum matrices. For y = u^k_l before x = u^i_j in row-major order:
//   same row or same column:  x y -> q^-1 y x
//   k < i, l > j:             x y -> y x
//   k < i, l < j:             x y -> y x - (q - q^-1) u^k_j u^i_l

inline void add_quantum_matrix_rules(NCPresentation& pres, int n, int offset) {
  const auto& a = pres.alphabet;
  const QScalar q = QScalar::q_power(1), qi = QScalar::q_power(-1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          int x = offset + u_index(n, i, j), y = offset + u_index(n, k, l);
          if (y >= x) continue;
          if (k == i || l == j) {
            pres.add_rule({x, y}, NCPoly::word(a, {y, x}, qi));
          } else if (l > j) {
            pres.add_rule({x, y}, NCPoly::word(a, {y, x}));
          } else {
            NCPoly r = NCPoly::word(a, {y, x});
            r -= NCPoly::word(a, {offset + u_index(n, k, j), offset + u_index(n, i, l)}, q - qi);
            pres.add_rule({x, y}, r);
          }
        }
      }
    }
  }
}

inline NCPresentation quantum_matrix_presentation(int n) {
  if (n < 1) throw usage_error("quantum matrices need N >= 1");
  NCPresentation pres{u_alphabet(n), {}};
  add_quantum_matrix_rules(pres, n, 0);
  return pres;
}

namespace detail {

inline int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  }
  return inv;
}

}  // namespace detail

// [I|J] = sum over permutations s of (-q)^inv(s) u^{I1}_{J s1} ... u^{Im}_{J sm}.
inline NCPoly quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols, int n) {
  if (rows.size() != cols.size()) throw usage_error("quantum minor needs |I| = |J|");
  for (const auto* v : {&rows, &cols}) {
    for (std::size_t k = 0; k < v->size(); ++k) {
      if ((*v)[k] < 1 || (*v)[k] > n || (k && (*v)[k] <= (*v)[k - 1])) {
        throw usage_error("minor indices must be increasing in 1..N");
      }
    }
  }
  Alphabet a = u_alphabet(n);
  NCPoly p(a);
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = detail::inversions(perm);
    Word w;
    for (std::size_t k = 0; k < rows.size(); ++k) w.push_back(u_index(n, rows[k], cols[perm[k]]));
    p.add(w, QScalar::q_power(inv, inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

inline std::vector<std::vector<int>> subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline NCPoly principal_minor_sum(int n, int m) {
  NCPoly p(u_alphabet(n));
  for (const auto& j : subsets(n, m)) p += quantum_minor(j, j, n);
  return p;
}

// Doubled alphabet for the tensor square: L-tagged letters, then R-tagged.
inline Alphabet tensor_alphabet(int n) {
  std::vector<std::string> names;
  const Alphabet u = u_alphabet(n);
  for (const char* side : {"L", "R"}) {
    for (const auto& s : *u) names.push_back(side + s);
  }
  return make_alphabet(std::move(names));
}

inline NCPresentation tensor_presentation(int n) {
  NCPresentation pres{tensor_alphabet(n), {}};
  add_quantum_matrix_rules(pres, n, 0);
  add_quantum_matrix_rules(pres, n, n * n);
  return pres;
}

// Delta(u^i_j) = sum_k u^i_k (x) u^k_j; words are kept as all L letters then all R letters.
inline NCPoly comultiply(const NCPoly& p, int n) {
  if (static_cast<int>(p.alphabet()->size()) != n * n || *p.alphabet() != *u_alphabet(n)) {
    throw usage_error("comultiply expects a polynomial over the u alphabet");
  }
  Alphabet t = tensor_alphabet(n);
  NCPoly out(t);
  for (const auto& [w, c] : p.terms()) {
    const std::size_t m = w.size();
    std::vector<int> ks(m, 1);
    while (true) {
      Word left, right;
      for (std::size_t s = 0; s < m; ++s) {
        int i = w[s] / n + 1, j = w[s] % n + 1;
        left.push_back(u_index(n, i, ks[s]));
        right.push_back(n * n + u_index(n, ks[s], j));
      }
      left.insert(left.end(), right.begin(), right.end());
      out.add(left, c);
      std::size_t s = 0;
      while (s < m && ks[s] == n) ks[s++] = 1;
      if (s == m) break;
      ++ks[s];
    }
  }
  return out;
}

// Product in the tensor square, keeping words in L-then-R form.
inline NCPoly tensor_mul(const NCPoly& a, const NCPoly& b, int n) {
  a.require_compatible(b);
  NCPoly out(a.alphabet());
  auto split = [&](const Word& w) {
    auto mid = std::find_if(w.begin(), w.end(), [&](int x) { return x >= n * n; });
    if (std::any_of(mid, w.end(), [&](int x) { return x < n * n; })) throw usage_error("word not in L-then-R form");
    return std::make_pair(Word(w.begin(), mid), Word(mid, w.end()));
  };
  for (const auto& [wa, ca] : a.terms()) {
    auto [la, ra] = split(wa);
    for (const auto& [wb, cb] : b.terms()) {
      auto [lb, rb] = split(wb);
      Word w = la;
      w.insert(w.end(), lb.begin(), lb.end());
      w.insert(w.end(), ra.begin(), ra.end());
      w.insert(w.end(), rb.begin(), rb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

inline NCPoly flip(const NCPoly& t, int n) {
  NCPoly out(t.alphabet());
  for (const auto& [w, c] : t.terms()) {
    Word l, r;
    for (int x : w) (x < n * n ? l : r).push_back(x);
    Word f;
    for (int x : r) f.push_back(x - n * n);
    for (int x : l) f.push_back(x + n * n);
    out.add(f, c);
  }
  return out;
}

inline bool cocommutativity_check(const NCPoly& p, int n) {
  NCPresentation pres = tensor_presentation(n);
  NCPoly d = reduce(comultiply(p, n), pres);
  return d == reduce(flip(d, n), pres);
}

inline int qtrace_exponent(int n, const std::vector<int>& j) {
  int s = 0;
  for (int i : j) s += i;
  return static_cast<int>(j.size()) * (n + 1) - 2 * s;
}

inline NCPoly qtrace_omega(int n, int m) {
  if (m < 1 || m > n) throw usage_error("qtrace_omega needs 1 <= m <= N");
  NCPoly p(u_alphabet(n));
  for (const auto& j : subsets(n, m)) p += QScalar::q_power(qtrace_exponent(n, j)) * quantum_minor(j, j, n);
  return p;
}

// q = 1 and u^i_j -> entry (i, j) of a commuting matrix.
inline MLaurent specialize_matrix(const NCPoly& p, const std::vector<std::vector<MLaurent>>& m, const MLaurent& like) {
  const int n = static_cast<int>(m.size());
  if (static_cast<int>(p.alphabet()->size()) != n * n) throw usage_error("matrix size does not match the alphabet");
  MLaurent out(like.variable_list());
  for (const auto& [w, c] : p.terms()) {
    MLaurent t = MLaurent::constant(like, c.at_one());
    for (int x : w) t *= m[x / n][x % n];
    out += t;
  }
  return out;
}

inline Rational specialize_matrix(const NCPoly& p, const RMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (static_cast<int>(p.alphabet()->size()) != n * n) throw usage_error("matrix size does not match the alphabet");
  Rational out = 0;
  for (const auto& [w, c] : p.terms()) {
    Rational t = c.at_one();
    for (int x : w) t *= m[x / n][x % n];
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Golden files.

inline std::string default_data_dir() {
#ifdef REPRING_DATA_DIR
  return REPRING_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string read_golden(const std::string& name, const std::string& dir = default_data_dir()) {
  std::ifstream in(dir + "/golden/" + name);
  if (!in) throw usage_error("cannot read golden file " + dir + "/golden/" + name);
  std::string line, all;
  while (std::getline(in, line)) {
    if (!all.empty()) all += '\n';
    all += line;
  }
  return all;
}

}  // namespace repring
