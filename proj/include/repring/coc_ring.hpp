#pragma once

#include <random>
#include <string>
#include <vector>

#include "char_engine.hpp"

namespace repring {

// Element of O(G)^coc in the basis of irreducible traces.
struct CocElement {
  GroupSpec group;
  std::map<RepLabel, Integer> coords;

  static CocElement zero(const GroupSpec& g) { return CocElement{g, {}}; }
  static CocElement unit(const GroupSpec& g) { return basis(trivial_label(g)); }
  static CocElement basis(const RepLabel& label, const Integer& c = 1) {
    CocElement x{label.group, {}};
    x.add(label, c);
    return x;
  }

  bool is_zero() const { return coords.empty(); }

  void add(const RepLabel& label, const Integer& c) {
    if (label.group != group) throw usage_error("label of a different group");
    if (c == 0) return;
    auto it = coords.find(label);
    if (it == coords.end()) {
      coords.emplace(label, c);
    } else {
      it->second += c;
      if (it->second == 0) coords.erase(it);
    }
  }

  CocElement& operator+=(const CocElement& o) {
    if (o.group != group) throw usage_error("coc elements of different groups");
    for (const auto& [k, c] : o.coords) add(k, c);
    return *this;
  }
  CocElement& operator-=(const CocElement& o) {
    if (o.group != group) throw usage_error("coc elements of different groups");
    for (const auto& [k, c] : o.coords) add(k, -c);
    return *this;
  }
  friend CocElement operator+(CocElement a, const CocElement& b) { return a += b; }
  friend CocElement operator-(CocElement a, const CocElement& b) { return a -= b; }
  friend CocElement operator*(const Integer& c, CocElement a) {
    if (c == 0) a.coords.clear();
    for (auto& kv : a.coords) kv.second *= c;
    return a;
  }
  friend bool operator==(const CocElement& a, const CocElement& b) {
    return a.group == b.group && a.coords == b.coords;
  }
  friend bool operator!=(const CocElement& a, const CocElement& b) { return !(a == b); }

  std::string to_string() const {
    if (coords.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
      const auto& [lab, c] = *it;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (abs(c) != 1) os << abs(c) << '*';
      os << '[' << lab.to_string() << ']';
    }
    return os.str();
  }
};

inline CocElement coc_mul(const CocElement& a, const CocElement& b) {
  if (a.group != b.group) throw usage_error("coc_mul: elements of different groups");
  CocElement r = CocElement::zero(a.group);
  for (const auto& [x, cx] : a.coords) {
    for (const auto& [y, cy] : b.coords) {
      for (const auto& [z, m] : tensor_decompose(x, y)) r.add(z, cx * cy * m);
    }
  }
  return r;
}

inline CocElement coc_pow(const CocElement& x, unsigned n) {
  CocElement r = CocElement::unit(x.group);
  for (unsigned i = 0; i < n; ++i) r = coc_mul(r, x);
  return r;
}

// Torus model: the class function with these trace coordinates.
inline ClassFunction torus_model(const CocElement& x) {
  ClassFunction f = class_function_constant(x.group, 0);
  for (const auto& [lab, c] : x.coords) f += c * class_function_of(lab);
  return f;
}

inline CocElement coc_from_class_function(const ClassFunction& f, const GroupSpec& g,
                                          PeelMode mode = PeelMode::Virtual) {
  CocElement x = CocElement::zero(g);
  for (const auto& [lab, c] : peel_decompose(f, g, mode)) x.add(lab, c);
  return x;
}

inline CocElement sigma_in_basis(const GroupSpec& g, int d) {
  if (d < 1 || d > g.n) throw usage_error("sigma_in_basis: degree out of range");
  return coc_from_class_function(exterior_class_function(g, d), g, PeelMode::Genuine);
}

// ---------------------------------------------------------------------------
// Generators.

struct Generator {
  std::string name;
  int degree = 0;
  CocElement value;
};

// Generating set of the theorem for each family. GL includes s_N, whose
// inverse is the label (-1,...,-1).
inline std::vector<Generator> coc_generators(const GroupSpec& g) {
  std::vector<Generator> gens;
  auto s = [&](int d) { return Generator{"s" + std::to_string(d), d, sigma_in_basis(g, d)}; };
  const int l = g.half();
  switch (g.family) {
    case Family::GL:
      for (int d = 1; d <= g.n; ++d) gens.push_back(s(d));
      break;
    case Family::SL:
      for (int d = 1; d < g.n; ++d) gens.push_back(s(d));
      break;
    case Family::Sp:
      for (int d = 1; d <= l; ++d) gens.push_back(s(d));
      break;
    case Family::SO:
      if (g.n % 2) {
        for (int d = 1; d <= l; ++d) gens.push_back(s(d));
      } else {
        for (int d = 1; d < l; ++d) gens.push_back(s(d));
        Weight w(l, 1);
        gens.push_back({"s" + std::to_string(l) + "_0", l, CocElement::basis(RepLabel{g, w})});
        gens.push_back({"s" + std::to_string(l) + "_1", l, CocElement::basis(RepLabel{g, chi_weight(w)})});
      }
      break;
    case Family::O:
      for (int d = 1; d <= l; ++d) gens.push_back(s(d));
      gens.push_back(s(g.n));
      break;
  }
  return gens;
}

inline std::vector<std::string> generator_names(const GroupSpec& g) {
  std::vector<std::string> names;
  for (const auto& gen : coc_generators(g)) names.push_back(gen.name);
  return names;
}

// Commutative (Laurent for GL's s_N) polynomial in the generators.
using GeneratorPolynomial = MLaurent;

namespace detail {

// Weight used to order labels; O labels use the SO weight, then plain before associated.
inline std::tuple<long long, Weight, int> label_key(const RepLabel& lab) {
  const auto& g = lab.group;
  if (g.family == Family::O) {
    OData d = o_data(lab);
    int assoc = column_length(lab.data, 1) > g.half() ? 1 : 0;
    return {total_degree(d.so_weight), d.so_weight, assoc};
  }
  Weight w = highest_weight(lab);
  return {total_degree(w), w, 0};
}

struct GeneratorCache {
  GroupSpec group;
  std::vector<Generator> gens;
  CocElement gl_inverse;
  std::map<std::pair<std::size_t, int>, CocElement> powers;

  explicit GeneratorCache(const GroupSpec& g) : group(g), gens(coc_generators(g)), gl_inverse(CocElement::zero(g)) {
    if (g.family == Family::GL) gl_inverse = CocElement::basis(RepLabel{g, Weight(g.n, -1)});
  }

  const CocElement& power(std::size_t i, int e) {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    CocElement v = CocElement::unit(group);
    if (e > 0) {
      v = coc_mul(power(i, e - 1), gens[i].value);
    } else if (e < 0) {
      if (group.family != Family::GL || i + 1 != gens.size()) throw usage_error("negative generator exponent");
      v = coc_mul(power(i, e + 1), gl_inverse);
    }
    return powers.emplace(key, std::move(v)).first->second;
  }

  CocElement monomial(const Exponents& e) {
    CocElement v = CocElement::unit(group);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) v = coc_mul(v, power(i, e[i]));
    }
    return v;
  }
};

}  // namespace detail

// Exponents of the generator monomial whose leading label is `label`.
inline Exponents generator_exponents_for(const RepLabel& label) {
  const auto& g = label.group;
  const int l = g.half();
  Exponents e;
  auto columns = [](const Weight& w, int upto) {
    Exponents c(upto, 0);
    for (int d = 1; d <= upto; ++d) {
      int next = d < static_cast<int>(w.size()) ? w[d] : 0;
      c[d - 1] = w[d - 1] - next;
    }
    return c;
  };
  switch (g.family) {
    case Family::GL: {
      Weight w = label.data;
      e = columns(w, g.n - 1);
      e.push_back(w.back());
      break;
    }
    case Family::SL:
      e = label.data;
      break;
    case Family::Sp:
      e = columns(label.data, l);
      break;
    case Family::SO:
      if (g.n % 2) {
        e = columns(label.data, l);
      } else {
        Weight w = label.data;
        int last = w.back();
        w.back() = 0;
        e = columns(w, l - 1);
        e.back() -= std::abs(last);
        e.push_back(last > 0 ? last : 0);
        e.push_back(last < 0 ? -last : 0);
      }
      break;
    case Family::O: {
      OData d = o_data(label);
      e = columns(d.so_weight, l);
      e.push_back(column_length(label.data, 1) > l ? 1 : 0);
      break;
    }
  }
  return e;
}

inline CocElement evaluate_generators(const GeneratorPolynomial& p, const GroupSpec& g) {
  detail::GeneratorCache cache(g);
  if (p.variables() != generator_names(g)) throw usage_error("polynomial is not over this group's generators");
  CocElement x = CocElement::zero(g);
  for (const auto& [e, c] : p.terms()) x += c * cache.monomial(e);
  return x;
}

inline GeneratorPolynomial express_in_generators(const CocElement& x) {
  const GroupSpec& g = x.group;
  detail::GeneratorCache cache(g);
  std::vector<std::string> names;
  for (const auto& gen : cache.gens) names.push_back(gen.name);
  GeneratorPolynomial out(names);
  CocElement rem = x;
  for (int guard = 0; !rem.is_zero(); ++guard) {
    if (guard > 100000) throw std::logic_error("express_in_generators did not terminate");
    auto lead = std::max_element(rem.coords.begin(), rem.coords.end(), [](const auto& a, const auto& b) {
      return detail::label_key(a.first) < detail::label_key(b.first);
    });
    RepLabel lab = lead->first;
    Integer c = lead->second;
    Exponents e = generator_exponents_for(lab);
    CocElement m = cache.monomial(e);
    auto it = m.coords.find(lab);
    if (it == m.coords.end() || it->second != 1) throw std::logic_error("generator monomial has the wrong leading label");
    out.add_term(e, c);
    rem -= c * m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relations, checked on exact torus models.

struct RelationCheck {
  std::string id;
  std::string statement;
  bool holds = false;
  ClassFunction residue;
};

inline std::vector<std::string> relation_ids(const GroupSpec& g) {
  if (g.family == Family::O) {
    if (g.n % 2) return {"iii"};
    return {"v.a", "v.b", "dual"};
  }
  if (g.family == Family::SO && g.n % 2 == 0) return {"vi", "vi.appendix"};
  return {};
}

inline RelationCheck verify_relation(const GroupSpec& g, const std::string& id) {
  auto ids = relation_ids(g);
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw usage_error("relation '" + id + "' does not apply to " + g.to_string());
  }
  auto sigma = [&](int d) { return exterior_class_function(g, d); };
  const int l = g.half();
  const ClassFunction one = class_function_constant(g, 1);
  RelationCheck r{id, {}, false, one};
  if (id == "iii" || id == "v.a") {
    r.statement = "s" + std::to_string(g.n) + "^2 = 1";
    r.residue = sigma(g.n).pow(2) - one;
  } else if (id == "v.b") {
    r.statement = "s" + std::to_string(l) + "*s" + std::to_string(g.n) + " = s" + std::to_string(l);
    r.residue = sigma(l) * sigma(g.n) - sigma(l);
  } else if (id == "dual") {
    r.statement = "s" + std::to_string(g.n) + "-r = s_r*s" + std::to_string(g.n) + " for r = 1.." + std::to_string(l);
    r.residue = class_function_constant(g, 0);
    for (int k = 1; k <= l; ++k) {
      auto d = sigma(g.n - k) - sigma(k) * sigma(g.n);
      if (!d.is_zero()) {
        r.residue = d;
        break;
      }
    }
  } else {
    auto [s0, s1] = so2l_halfexterior(l);
    ClassFunction diff{s0 - s1, std::nullopt};
    ClassFunction a = sigma(l), b = sigma(l);
    if (id == "vi") {
      r.statement = "(s_l0 - s_l1)^2 = (s_l + 2 sum s_i)(s_l + 2 sum (-1)^(l-i) s_i)";
      for (int i = 0; i < l; ++i) {
        a += Integer(2) * sigma(i);
        b += Integer((l - i) % 2 ? -2 : 2) * sigma(i);
      }
      r.residue = diff.pow(2) - a * b;
    } else {
      r.statement = "(s_l0 - s_l1)^2 = (-1)^l (s_l + 2 sum s_i)((-1)^l s_l + 2 sum (-1)^i s_i)";
      Integer sl = l % 2 ? -1 : 1;
      b = sl * sigma(l);
      for (int i = 0; i < l; ++i) {
        a += Integer(2) * sigma(i);
        b += Integer(i % 2 ? -2 : 2) * sigma(i);
      }
      r.residue = diff.pow(2) - sl * (a * b);
    }
  }
  r.holds = r.residue.is_zero();
  return r;
}

// Pf(JA - A^T J) restricted to the torus diag(z1, 1/z1, ...) of SO(2l).
inline MLaurent pfaffian_diff(int l) {
  if (l < 2) throw usage_error("pfaffian_diff needs l >= 2");
  GroupSpec g{Family::SO, 2 * l};
  MLaurent like(torus_variables(g));
  LMatrix a = slice_matrix(g, false);
  LMatrix j = laurent_matrix(2 * l, like);
  for (int i = 0; i < l; ++i) {
    j[2 * i][2 * i + 1] = MLaurent::constant(like, 1);
    j[2 * i + 1][2 * i] = MLaurent::constant(like, 1);
  }
  LMatrix ja = laurent_mul(j, a, like), atj = laurent_mul(laurent_transpose(a), j, like);
  LMatrix s = laurent_matrix(2 * l, like);
  for (int r = 0; r < 2 * l; ++r) {
    for (int c = 0; c < 2 * l; ++c) s[r][c] = ja[r][c] - atj[r][c];
  }
  return laurent_pfaffian(s, like);
}

// Pf^2 = (-1)^l det(A+I) det(A-I) on the torus.
inline bool pfaffian_identity_holds(int l) {
  GroupSpec g{Family::SO, 2 * l};
  MLaurent like(torus_variables(g));
  LMatrix plus = slice_matrix(g, false), minus = plus;
  for (int i = 0; i < 2 * l; ++i) {
    plus[i][i] += MLaurent::constant(like, 1);
    minus[i][i] -= MLaurent::constant(like, 1);
  }
  MLaurent rhs = laurent_det(plus, like) * laurent_det(minus, like);
  if (l % 2) rhs = -rhs;
  return pfaffian_diff(l).pow(2) == rhs;
}

// ---------------------------------------------------------------------------
// Algebraic independence of the claimed basis monomials.

struct BasisMonomial {
  std::string name;
  int degree = 0;
  ClassFunction value;
};

namespace detail {

inline void monomials_rec(const std::vector<std::pair<std::string, ClassFunction>>& gens, const std::vector<int>& deg,
                          std::size_t i, int budget, std::string name, int used, ClassFunction value,
                          std::vector<BasisMonomial>& out) {
  if (i == gens.size()) {
    out.push_back({name.empty() ? "1" : name, used, value});
    return;
  }
  for (int e = 0; e * deg[i] <= budget; ++e) {
    std::string n = name;
    if (e > 0) {
      if (!n.empty()) n += "*";
      n += gens[i].first + (e > 1 ? "^" + std::to_string(e) : "");
    }
    monomials_rec(gens, deg, i + 1, budget - e * deg[i], n, used + e * deg[i], value, out);
    value = value * gens[i].second;
  }
}

}  // namespace detail

// Monomials of weighted degree <= cap in the given generators, each times every multiplier.
inline std::vector<BasisMonomial> monomials_upto(const GroupSpec& g,
                                                 const std::vector<std::pair<std::string, int>>& gens,
                                                 const std::vector<ClassFunction>& values, int cap,
                                                 const BasisMonomial& multiplier) {
  std::vector<std::pair<std::string, ClassFunction>> gv;
  std::vector<int> deg;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    gv.emplace_back(gens[i].first, values[i]);
    deg.push_back(gens[i].second);
  }
  std::vector<BasisMonomial> out;
  if (multiplier.degree > cap) return out;
  detail::monomials_rec(gv, deg, 0, cap - multiplier.degree, "", 0, class_function_constant(g, 1), out);
  for (auto& m : out) {
    m.degree += multiplier.degree;
    m.value = m.value * multiplier.value;
    if (multiplier.name != "1") m.name = m.name == "1" ? multiplier.name : multiplier.name + "*" + m.name;
  }
  return out;
}

// Monomials the theorem claims form a basis, up to weighted degree `cap`.
inline std::vector<BasisMonomial> theorem_basis(const GroupSpec& g, int cap) {
  const int l = g.half();
  auto sigma = [&](int d) { return exterior_class_function(g, d); };
  std::vector<std::pair<std::string, int>> gens;
  std::vector<ClassFunction> values;
  auto use = [&](int d) {
    gens.emplace_back("s" + std::to_string(d), d);
    values.push_back(sigma(d));
  };
  int top = g.family == Family::GL ? g.n : (g.family == Family::SL ? g.n - 1 : l);
  for (int d = 1; d <= top; ++d) use(d);
  BasisMonomial one{"1", 0, class_function_constant(g, 1)};
  auto out = monomials_upto(g, gens, values, cap, one);
  if (g.family == Family::SO && g.n % 2 == 0) {
    auto [s0, s1] = so2l_halfexterior(l);
    auto more = monomials_upto(g, gens, values, cap, {"pf", l, ClassFunction{s0 - s1, std::nullopt}});
    out.insert(out.end(), more.begin(), more.end());
  } else if (g.family == Family::O) {
    BasisMonomial sn{"s" + std::to_string(g.n), g.n, sigma(g.n)};
    if (g.n % 2 == 0) {
      gens.pop_back();
      values.pop_back();
    }
    auto more = monomials_upto(g, gens, values, cap, sn);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

struct IndependenceReport {
  std::size_t monomials = 0;
  std::size_t rank = 0;
  bool exact_fallback = false;
  bool independent = false;
};

inline IndependenceReport independence_check(const GroupSpec& g, const std::vector<BasisMonomial>& monos,
                                             std::uint64_t seed = 20240601) {
  IndependenceReport rep;
  rep.monomials = monos.size();
  if (monos.empty()) {
    rep.independent = true;
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 97), den(1, 13), sgn(0, 1);
  const std::size_t vars = torus_variable_names(so_part(g)).size();
  RMatrix m;
  const bool has_z = monos.front().value.on_z.has_value();
  for (int slice = 0; slice < (has_z ? 2 : 1); ++slice) {
    for (std::size_t p = 0; p < monos.size() + 3; ++p) {
      std::vector<Rational> pt(vars);
      for (auto& x : pt) {
        x = Rational(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
        x.canonicalize();
      }
      std::vector<Rational> row;
      for (const auto& mono : monos) row.push_back(slice ? mono.value.on_z->eval(pt) : mono.value.on_y.eval(pt));
      m.push_back(std::move(row));
    }
  }
  rep.rank = rational_rank(m);
  if (rep.rank < monos.size()) {
    // Exact re-check on the coefficient vectors.
    rep.exact_fallback = true;
    std::map<std::pair<int, Exponents>, std::size_t> col;
    RMatrix c(monos.size());
    auto place = [&](int slice, const MLaurent& f, std::size_t row) {
      for (const auto& [e, x] : f.terms()) {
        auto key = std::make_pair(slice, e);
        auto it = col.emplace(key, col.size()).first;
        if (c[row].size() <= it->second) c[row].resize(it->second + 1, Rational(0));
        c[row][it->second] = x;
      }
    };
    for (std::size_t i = 0; i < monos.size(); ++i) {
      place(0, monos[i].value.on_y, i);
      if (monos[i].value.on_z) place(1, *monos[i].value.on_z, i);
    }
    for (auto& row : c) row.resize(col.size(), Rational(0));
    rep.rank = rational_rank(c);
  }
  rep.independent = rep.rank == monos.size();
  return rep;
}

inline IndependenceReport independence_check(const GroupSpec& g, int degree_cap, std::uint64_t seed = 20240601) {
  return independence_check(g, theorem_basis(g, degree_cap), seed);
}

}  // namespace repring
