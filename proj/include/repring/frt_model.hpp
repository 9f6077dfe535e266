#pragma once

#include <random>
#include <string>
#include <vector>

#include "coc_ring.hpp"
#include "detail/parallel.hpp"

namespace repring {

// Element of A(G)^coc through its image under iota: degree r -> O(G)^coc part.
struct GradedCoc {
  GroupSpec group;
  std::map<int, CocElement> components;

  static GradedCoc zero(const GroupSpec& g) { return GradedCoc{g, {}}; }
  static GradedCoc unit(const GroupSpec& g) { return homogeneous(0, CocElement::unit(g)); }
  static GradedCoc homogeneous(int degree, const CocElement& x) {
    GradedCoc r{x.group, {}};
    if (!x.is_zero()) r.components.emplace(degree, x);
    return r;
  }

  bool is_zero() const { return components.empty(); }

  GradedCoc& operator+=(const GradedCoc& o) {
    if (o.group != group) throw usage_error("graded elements of different groups");
    for (const auto& [r, x] : o.components) {
      auto it = components.find(r);
      if (it == components.end()) {
        components.emplace(r, x);
      } else {
        it->second += x;
        if (it->second.is_zero()) components.erase(it);
      }
    }
    return *this;
  }
  GradedCoc& operator-=(const GradedCoc& o) { return *this += Integer(-1) * o; }
  friend GradedCoc operator+(GradedCoc a, const GradedCoc& b) { return a += b; }
  friend GradedCoc operator-(GradedCoc a, const GradedCoc& b) { return a -= b; }
  friend GradedCoc operator*(const Integer& c, GradedCoc a) {
    if (c == 0) a.components.clear();
    for (auto& kv : a.components) kv.second = c * kv.second;
    return a;
  }
  friend bool operator==(const GradedCoc& a, const GradedCoc& b) {
    return a.group == b.group && a.components == b.components;
  }

  std::string to_string() const {
    if (components.empty()) return "0";
    std::string s;
    for (const auto& [r, x] : components) {
      if (!s.empty()) s += " + ";
      s += "(" + x.to_string() + ")*z^" + std::to_string(r);
    }
    return s;
  }
};

inline void check_graded_support(const GradedCoc& x) {
  for (const auto& [r, c] : x.components) {
    auto support = p_r_support(x.group, r);
    for (const auto& [lab, m] : c.coords) {
      if (!support.count(lab)) {
        throw std::logic_error("degree " + std::to_string(r) + " component outside P_r: " + lab.to_string());
      }
    }
  }
}

inline GradedCoc graded_mul(const GradedCoc& a, const GradedCoc& b) {
  if (a.group != b.group) throw usage_error("graded_mul: elements of different groups");
  GradedCoc r = GradedCoc::zero(a.group);
  for (const auto& [da, xa] : a.components) {
    for (const auto& [db, xb] : b.components) r += GradedCoc::homogeneous(da + db, coc_mul(xa, xb));
  }
  check_graded_support(r);
  return r;
}

// Degree of D: 2, except N for SL where D is rho_N.
inline int d_degree(const GroupSpec& g) { return g.family == Family::SL ? g.n : 2; }

// index 0 is D, index d is rho_d.
inline GradedCoc iota_generator(const GroupSpec& g, int index) {
  if (g.family == Family::GL || g.family == Family::SO) {
    throw usage_error("the graded model covers SL, Sp and O only");
  }
  if (index < 0 || index > g.n) throw usage_error("no generator rho_" + std::to_string(index));
  if (index == 0) return GradedCoc::homogeneous(d_degree(g), CocElement::unit(g));
  return GradedCoc::homogeneous(index, sigma_in_basis(g, index));
}

// ---------------------------------------------------------------------------
// Monomials in D, rho_1..rho_N.

using GenWord = std::vector<int>;  // [0] exponent of D, [i] exponent of rho_i

inline int word_degree(const GenWord& w, int d_deg = 2) {
  int s = d_deg * w[0];
  for (std::size_t i = 1; i < w.size(); ++i) s += static_cast<int>(i) * w[i];
  return s;
}

inline std::string word_to_string(const GenWord& w) {
  std::string s;
  auto factor = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (std::size_t i = w.size() - 1; i >= 1; --i) factor("rho" + std::to_string(i), w[i]);
  factor("D", w[0]);
  return s.empty() ? "1" : s;
}

inline GenWord parse_word(const std::string& text, int n) {
  GenWord w(n + 1, 0);
  if (text == "1") return w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string::npos) end = text.size();
    std::string f = text.substr(pos, end - pos);
    int e = 1;
    auto caret = f.find('^');
    auto bad = [&](const std::string& why) {
      throw usage_error("word '" + text + "' at position " + std::to_string(pos) + ": " + why);
    };
    if (caret != std::string::npos) {
      try {
        e = std::stoi(f.substr(caret + 1));
      } catch (const std::exception&) {
        bad("bad exponent");
      }
      if (e < 0) bad("negative exponent");
      f = f.substr(0, caret);
    }
    if (f == "D") {
      w[0] += e;
    } else if (f.rfind("rho", 0) == 0 && f.size() > 3 &&
               std::all_of(f.begin() + 3, f.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int i = std::stoi(f.substr(3));
      if (i < 1 || i > n) bad("index out of range");
      w[i] += e;
    } else {
      bad("expected D or rho<i>");
    }
    pos = end + 1;
  }
  return w;
}

// All exponent vectors over the given weights with weighted degree exactly `degree`.
inline std::vector<std::vector<int>> weighted_monomials(const std::vector<int>& weights, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == weights.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e * weights[i] <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e * weights[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

inline std::vector<GenWord> all_words(int n, int degree) {
  std::vector<int> weights{2};
  for (int i = 1; i <= n; ++i) weights.push_back(i);
  return weighted_monomials(weights, degree);
}

// ---------------------------------------------------------------------------
// The basis B(N) and the rewriting onto it.

namespace detail {

struct BnShape {
  int n, l;
  int low_max;   // largest low index allowed next to a high factor
  int a_max;     // largest a in rho_{N-a} D^b
  bool high(int i) const { return i >= l + 1; }
};

inline BnShape bn_shape(int n) {
  if (n < 3) throw usage_error("B(N) needs N >= 3");
  int l = n / 2;
  return n % 2 ? BnShape{n, l, l, l} : BnShape{n, l, l - 1, l - 1};
}

}  // namespace detail

inline bool in_bn(const GenWord& w, int n) {
  auto s = detail::bn_shape(n);
  int highs = 0, hi = 0;
  for (int i = s.l + 1; i <= n; ++i) {
    highs += w[i];
    if (w[i]) hi = i;
  }
  if (highs == 0) return true;
  if (highs > 1) return false;
  const int a = n - hi, b = w[0];
  for (int i = 1; i <= s.l; ++i) {
    if (!w[i]) continue;
    if (i > s.low_max) return false;
    if (a > 0 && i >= a - b && i < a) return false;
  }
  return a == 0 || (a <= s.a_max && b < a);
}

inline std::vector<GenWord> bn_enumerate(int n, int degree) {
  detail::bn_shape(n);
  if (degree < 0) throw usage_error("degree must be nonnegative");
  std::vector<GenWord> out;
  for (auto& w : all_words(n, degree)) {
    if (in_bn(w, n)) out.push_back(w);
  }
  return out;
}

struct Rewrite {
  int type = 0;
  GenWord from, to;  // exponent deltas removed / added
};

// Every rewrite applicable to w, in the order the reduction argument uses them.
inline std::vector<Rewrite> applicable_rewrites(const GenWord& w, int n) {
  auto s = detail::bn_shape(n);
  std::vector<Rewrite> out;
  auto unit = [&](int i) {
    GenWord v(n + 1, 0);
    if (i >= 0) v[i] = 1;
    return v;
  };
  auto rho = [&](int i) { return i == 0 ? GenWord(n + 1, 0) : unit(i); };
  auto sum = [](GenWord a, const GenWord& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  };
  auto d_pow = [&](int k) {
    GenWord v(n + 1, 0);
    v[0] = k;
    return v;
  };
  const int top = n - s.l - 1;  // rho_{N-i} is high for i <= top
  // two high factors: rho_{N-i} rho_{N-j} -> rho_i rho_j D^{N-i-j}
  for (int i = 0; i <= top; ++i) {
    for (int j = i; j <= top; ++j) {
      GenWord need = sum(unit(n - i), unit(n - j));
      bool ok = true;
      for (int k = 0; k <= n; ++k) ok = ok && w[k] >= need[k];
      if (ok) out.push_back({1, need, sum(sum(rho(i), rho(j)), d_pow(n - i - j))});
    }
  }
  // N = 2l: rho_{N-i} rho_l -> rho_i rho_l D^{l-i}
  if (n % 2 == 0 && w[s.l] > 0) {
    for (int i = 0; i < s.l; ++i) {
      if (w[n - i] > 0) out.push_back({2, sum(unit(n - i), unit(s.l)), sum(sum(rho(i), unit(s.l)), d_pow(s.l - i))});
    }
  }
  // rho_{N-j} D^j -> rho_j rho_N
  for (int j = 1; j <= s.a_max; ++j) {
    if (w[n - j] > 0 && w[0] >= j) out.push_back({3, sum(unit(n - j), d_pow(j)), sum(unit(j), unit(n))});
  }
  // rho_{N-j} rho_i D^{j-i} -> rho_j rho_{N-i}
  for (int j = 2; j <= s.a_max; ++j) {
    for (int i = 1; i < j; ++i) {
      if (w[n - j] > 0 && w[i] > 0 && w[0] >= j - i) {
        out.push_back({4, sum(sum(unit(n - j), unit(i)), d_pow(j - i)), sum(unit(j), unit(n - i))});
      }
    }
  }
  return out;
}

using WordCombination = std::map<GenWord, Integer>;

enum class RewriteStrategy { Fixed, Random };

inline WordCombination bn_normal_form(const WordCombination& input, int n,
                                      RewriteStrategy strategy = RewriteStrategy::Fixed, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  WordCombination done, work = input;
  for (auto& [w, c] : work) {
    if (static_cast<int>(w.size()) != n + 1) throw usage_error("word has the wrong number of generators");
  }
  long guard = 0;
  while (!work.empty()) {
    if (++guard > 1000000) throw std::logic_error("B(N) rewriting did not terminate");
    auto it = work.begin();
    GenWord w = it->first;
    Integer c = it->second;
    work.erase(it);
    if (c == 0) continue;
    if (in_bn(w, n)) {
      done[w] += c;
      if (done[w] == 0) done.erase(w);
      continue;
    }
    auto rules = applicable_rewrites(w, n);
    if (rules.empty()) throw std::logic_error("word outside B(N) with no applicable rewrite: " + word_to_string(w));
    const Rewrite& r = strategy == RewriteStrategy::Fixed
                           ? rules.front()
                           : rules[std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(rng)];
    for (int k = 0; k <= n; ++k) w[k] += r.to[k] - r.from[k];
    work[w] += c;
  }
  return done;
}

inline WordCombination bn_normal_form(const GenWord& w, int n, RewriteStrategy strategy = RewriteStrategy::Fixed,
                                      std::uint64_t seed = 1) {
  return bn_normal_form(WordCombination{{w, 1}}, n, strategy, seed);
}

// Torus model of the iota image of a word: the class function of its (single) degree.
inline ClassFunction iota_class_function(const GroupSpec& g, const GenWord& w) {
  ClassFunction f = class_function_constant(g, 1);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i]) f = f * exterior_class_function(g, static_cast<int>(i)).pow(w[i]);
  }
  return f;
}

inline GradedCoc iota_word(const GroupSpec& g, const GenWord& w) {
  GradedCoc x = GradedCoc::unit(g);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (int e = 0; e < w[i]; ++e) x = graded_mul(x, iota_generator(g, static_cast<int>(i)));
  }
  return x;
}

inline GradedCoc iota_combination(const GroupSpec& g, const WordCombination& c) {
  GradedCoc x = GradedCoc::zero(g);
  for (const auto& [w, k] : c) x += k * iota_word(g, w);
  return x;
}

// ---------------------------------------------------------------------------
// Hilbert series.

inline RationalGF hilbert_closed(const GroupSpec& g) {
  const int l = g.half();
  RationalGF gf;
  switch (g.family) {
    case Family::SL:
      gf.numerator = {1};
      for (int i = 1; i <= g.n; ++i) gf.denominator.push_back(i);
      return gf;
    case Family::Sp:
      gf.numerator = {1};
      gf.denominator.push_back(2);
      for (int i = 1; i <= l; ++i) gf.denominator.push_back(i);
      return gf;
    case Family::O: {
      const int n = g.n;
      const int amax = n % 2 ? l : l - 1;
      UPoly sum;
      for (int a = 1; a <= amax; ++a) {
        for (int b = 0; b < a; ++b) {
          UPoly term = upoly_monomial(n - a + 2 * b);
          for (int k = a - b; k <= a - 1; ++k) term = upoly_mul(term, one_minus_t(k));  // empty when b = 0
          sum = upoly_add(sum, term);
        }
      }
      sum = upoly_mul(sum, one_minus_t(2));
      UPoly num = upoly_add({1}, upoly_monomial(n));
      if (n % 2 == 0) {
        num = upoly_add({1}, upoly_mul(upoly_monomial(n), one_minus_t(l)));
        sum = upoly_mul(sum, one_minus_t(l));
      }
      gf.numerator = upoly_add(num, sum);
      gf.denominator.push_back(2);
      for (int i = 1; i <= l; ++i) gf.denominator.push_back(i);
      return gf;
    }
    default:
      throw usage_error("no closed Hilbert series for " + g.to_string());
  }
}

// Dimension of the degree-r part by counting basis monomials.
inline Integer hilbert_enumeration(const GroupSpec& g, int r) {
  std::vector<int> weights;
  switch (g.family) {
    case Family::SL:
      for (int i = 1; i <= g.n; ++i) weights.push_back(i);
      break;
    case Family::Sp:
      weights.push_back(2);
      for (int i = 1; i <= g.half(); ++i) weights.push_back(i);
      break;
    case Family::O:
      return static_cast<long>(bn_enumerate(g.n, r).size());
    default:
      throw usage_error("no graded model for " + g.to_string());
  }
  return static_cast<long>(weighted_monomials(weights, r).size());
}

struct HilbertRow {
  int degree = 0;
  Integer closed_form, enumeration, peter_weyl;
  bool ok() const { return closed_form == enumeration && enumeration == peter_weyl; }
};

inline std::vector<HilbertRow> hilbert_compare(const GroupSpec& g, int rmax) {
  if (rmax < 0) throw usage_error("rmax must be nonnegative");
  auto closed = gf_expand(hilbert_closed(g), rmax);
  // P_r is built incrementally, so warm the cache in order before fanning out.
  p_r_support(g, rmax);
  return detail::parallel_map(static_cast<std::size_t>(rmax) + 1, [&](std::size_t r) {
    HilbertRow row;
    row.degree = static_cast<int>(r);
    row.closed_form = closed[r];
    row.enumeration = hilbert_enumeration(g, row.degree);
    row.peter_weyl = static_cast<long>(p_r_support(g, row.degree).size());
    return row;
  });
}

inline std::string hilbert_tsv(const std::vector<HilbertRow>& rows) {
  std::ostringstream os;
  os << "degree\tclosed_form\tenumeration\tpeter_weyl\tok\n";
  for (const auto& r : rows) {
    os << r.degree << '\t' << r.closed_form << '\t' << r.enumeration << '\t' << r.peter_weyl << '\t'
       << (r.ok() ? "true" : "false") << '\n';
  }
  return os.str();
}

// (rho_N - D^l, rho_N + D^l) for O(2l).
inline std::pair<GradedCoc, GradedCoc> zero_divisor_witness(int n) {
  if (n < 3) throw usage_error("O(N) needs N >= 3");
  if (n % 2) throw usage_error("zero divisor witness needs even N");
  GroupSpec g = make_group(Family::O, n);
  GenWord rho_n(n + 1, 0), d_l(n + 1, 0);
  rho_n[n] = 1;
  d_l[0] = n / 2;
  GradedCoc a = iota_word(g, rho_n), b = iota_word(g, d_l);
  return {a - b, a + b};
}

}  // namespace repring
