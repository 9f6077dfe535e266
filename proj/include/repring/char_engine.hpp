#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "detail/cache.hpp"
#include "root_data.hpp"

namespace repring {

using WeightMultiset = std::map<Weight, long long>;
using Decomposition = std::map<RepLabel, Integer>;

struct not_a_character : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Torus restriction of a class function. on_z is present exactly for O(N):
// the one-flipped-block slice for O(2l), the -1 times Y slice for O(2l+1).
struct ClassFunction {
  MLaurent on_y;
  std::optional<MLaurent> on_z;

  bool is_zero() const { return on_y.is_zero() && (!on_z || on_z->is_zero()); }

  ClassFunction& operator+=(const ClassFunction& o) {
    on_y += o.on_y;
    if (on_z.has_value() != o.on_z.has_value()) throw usage_error("mixing O(N) and connected class functions");
    if (on_z) *on_z += *o.on_z;
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    on_y -= o.on_y;
    if (on_z.has_value() != o.on_z.has_value()) throw usage_error("mixing O(N) and connected class functions");
    if (on_z) *on_z -= *o.on_z;
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.on_z.has_value() != b.on_z.has_value()) throw usage_error("mixing O(N) and connected class functions");
    ClassFunction r{a.on_y * b.on_y, std::nullopt};
    if (a.on_z) r.on_z = *a.on_z * *b.on_z;
    return r;
  }
  friend ClassFunction operator*(const Integer& c, ClassFunction a) {
    a.on_y *= c;
    if (a.on_z) *a.on_z *= c;
    return a;
  }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.on_y == b.on_y && a.on_z == b.on_z;
  }
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

  ClassFunction pow(unsigned n) const {
    ClassFunction r{on_y.pow(n), std::nullopt};
    if (on_z) r.on_z = on_z->pow(n);
    return r;
  }
};

using OChar = ClassFunction;

inline ClassFunction class_function_constant(const GroupSpec& g, const Integer& c) {
  MLaurent one = MLaurent::constant(MLaurent(torus_variables(so_part(g))), c);
  ClassFunction f{one, std::nullopt};
  if (g.family == Family::O) f.on_z = one;
  return f;
}

// ---------------------------------------------------------------------------
// Weyl orbits and Freudenthal.

inline std::vector<Weight> weyl_orbit(RootType t, const Weight& w) {
  std::set<Weight> out;
  Weight a = w;
  bool has_zero = false;
  int negatives = 0;
  if (t != RootType::A) {
    for (auto& x : a) {
      if (x < 0) ++negatives;
      if (x == 0) has_zero = true;
      x = std::abs(x);
    }
  }
  std::sort(a.begin(), a.end());
  do {
    if (t == RootType::A) {
      out.insert(a);
      continue;
    }
    std::vector<int> nz;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0) nz.push_back(static_cast<int>(i));
    }
    for (unsigned mask = 0; mask < (1u << nz.size()); ++mask) {
      if (t == RootType::D && !has_zero && __builtin_popcount(mask) % 2 != negatives % 2) continue;
      Weight v = a;
      for (std::size_t k = 0; k < nz.size(); ++k) {
        if (mask & (1u << k)) v[nz[k]] = -v[nz[k]];
      }
      out.insert(v);
    }
  } while (std::next_permutation(a.begin(), a.end()));
  return {out.begin(), out.end()};
}

// Dominant weights below hw. Subtracting a positive root and staying dominant
// reaches all of them (Stembridge's description of the dominance order).
inline std::vector<Weight> dominant_weights_below(RootType t, const Weight& hw) {
  auto roots = positive_roots(t, static_cast<int>(hw.size()));
  std::set<Weight> seen{hw};
  std::vector<Weight> order{hw};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& a : roots) {
      Weight v = order[k];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= a[i];
      if (is_dominant(t, v) && seen.insert(v).second) order.push_back(v);
    }
  }
  return order;
}

namespace detail {

inline std::map<Weight, long long> freudenthal_dominant(RootType t, const Weight& hw) {
  const int len = static_cast<int>(hw.size());
  const auto roots = positive_roots(t, len);
  const Weight rho2 = two_rho(t, len);
  auto norm2 = [&](const Weight& m) {
    long long s = 0;
    for (int i = 0; i < len; ++i) {
      long long x = 2LL * m[i] + rho2[i];
      s += x * x;
    }
    return s;
  };
  auto doms = dominant_weights_below(t, hw);
  std::stable_sort(doms.begin(), doms.end(),
                   [&](const Weight& a, const Weight& b) { return norm2(a) > norm2(b); });
  std::map<Weight, long long> mult;
  const long long top = norm2(hw);
  for (const auto& mu : doms) {
    if (mu == hw) {
      mult[mu] = 1;
      continue;
    }
    long long num = 0;
    for (const auto& a : roots) {
      Weight v = mu;
      while (true) {
        for (int i = 0; i < len; ++i) v[i] += a[i];
        Weight d = reduce_to_chamber(t, v).weight;
        auto it = mult.find(d);
        if (it == mult.end()) break;
        num += it->second * dot(v, a);
      }
    }
    long long den = top - norm2(mu);
    if (den <= 0 || (8 * num) % den != 0) throw std::logic_error("Freudenthal recursion is not integral");
    mult[mu] = 8 * num / den;
  }
  return mult;
}

inline detail::SharedCache<std::pair<int, Weight>, std::map<Weight, long long>>& dominant_cache() {
  static detail::SharedCache<std::pair<int, Weight>, std::map<Weight, long long>> c;
  return c;
}

inline detail::SharedCache<std::pair<int, Weight>, WeightMultiset>& multiset_cache() {
  static detail::SharedCache<std::pair<int, Weight>, WeightMultiset> c;
  return c;
}

}  // namespace detail

inline std::shared_ptr<const std::map<Weight, long long>> dominant_multiplicities(RootType t, const Weight& hw) {
  return detail::dominant_cache().get({static_cast<int>(t), hw},
                                      [&] { return detail::freudenthal_dominant(t, hw); });
}

inline std::shared_ptr<const WeightMultiset> weight_multiset(RootType t, const Weight& hw) {
  return detail::multiset_cache().get({static_cast<int>(t), hw}, [&] {
    WeightMultiset out;
    for (const auto& [mu, m] : *dominant_multiplicities(t, hw)) {
      for (const auto& v : weyl_orbit(t, mu)) out[v] = m;
    }
    return out;
  });
}

inline WeightMultiset freudenthal(const RepLabel& label) {
  if (!label.group.connected()) throw usage_error("freudenthal: use ochar_of_label for O(N)");
  return *weight_multiset(label.group.root_type(), highest_weight(label));
}

// Character of the connected irreducible with highest weight hw (for O(N),
// of the SO(N) irreducible).
inline MLaurent character_of_weight(const GroupSpec& g, const Weight& hw) {
  static detail::SharedCache<std::pair<GroupSpec, Weight>, MLaurent> cache;
  GroupSpec c = so_part(g);
  return *cache.get({c, hw}, [&] {
    MLaurent chi(torus_variables(c));
    for (const auto& [w, m] : *weight_multiset(c.root_type(), hw)) {
      chi.add_term(weight_to_exponents(c, w), Integer(static_cast<long>(m)));
    }
    return chi;
  });
}

inline MLaurent weyl_character(const RepLabel& label) {
  if (!label.group.connected()) throw usage_error("weyl_character: use ochar_of_label for O(N)");
  return character_of_weight(label.group, highest_weight(label));
}

// ---------------------------------------------------------------------------
// Klimyk.

// Highest weights (with multiplicity) of V(a) (x) V(b) for a connected group.
inline std::map<Weight, Integer> klimyk(const GroupSpec& g, Weight a, Weight b) {
  RootType t = g.root_type();
  if (weyl_dimension(g, a) < weyl_dimension(g, b)) std::swap(a, b);
  std::map<Weight, Integer> acc;
  Weight v(a.size());
  for (const auto& [k, d] : *weight_multiset(t, b)) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + k[i];
    Reduction r = dominance_reduce(g, v);
    if (r.boundary) continue;
    acc[normalize_weight(g, r.weight)] += static_cast<long>(r.sign * d);
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second < 0) throw std::logic_error("Klimyk produced a negative multiplicity");
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  }
  return acc;
}

namespace detail {

inline Weight drop_last(const Weight& w) { return Weight(w.begin(), w.end() - 1); }

inline Decomposition o_tensor(const RepLabel& a, const RepLabel& b) {
  const GroupSpec g = a.group, so = so_part(g);
  const int l = g.n / 2;
  OData A = o_data(a), B = o_data(b);
  Decomposition out;
  if (g.n % 2) {
    for (const auto& [k, m] : klimyk(so, A.so_weight, B.so_weight)) out[o_label(g, k, A.sign * B.sign)] += m;
    return out;
  }
  auto comps = [](const OData& d) {
    std::vector<Weight> c{d.so_weight};
    if (d.kind == OKind::Induced) c.push_back(chi_weight(d.so_weight));
    return c;
  };
  std::map<Weight, Integer> so_mult;
  for (const auto& x : comps(A)) {
    for (const auto& y : comps(B)) {
      for (const auto& [k, m] : klimyk(so, x, y)) so_mult[k] += m;
    }
  }
  // The chi-twisted traces multiply; for self-chi factors they are C_{l-1}
  // characters, so their product decomposes by Klimyk for Sp(2l-2).
  std::map<Weight, Integer> twin;
  if (A.kind == OKind::SelfChi && B.kind == OKind::SelfChi) {
    GroupSpec sp{Family::Sp, 2 * (l - 1)};
    for (const auto& [k, c] : klimyk(sp, drop_last(A.so_weight), drop_last(B.so_weight))) {
      twin[k] = A.sign * B.sign * c;
    }
  }
  std::size_t used = 0;
  for (const auto& [k, m] : so_mult) {
    if (k.back() < 0) {
      if (so_mult.at(chi_weight(k)) != m) throw std::logic_error("O(2l) product is not chi-symmetric");
      continue;
    }
    if (k.back() > 0) {
      out[o_label(g, k, 0)] += m;
      continue;
    }
    Integer c = 0;
    auto it = twin.find(drop_last(k));
    if (it != twin.end()) {
      c = it->second;
      ++used;
    }
    Integer plus = m + c, minus = m - c;
    if (plus < 0 || minus < 0 || plus % 2 != 0) throw std::logic_error("inconsistent twining multiplicities");
    if (plus != 0) out[o_label(g, k, 1)] += plus / 2;
    if (minus != 0) out[o_label(g, k, -1)] += minus / 2;
  }
  if (used != twin.size()) throw std::logic_error("twining constituent without an SO constituent");
  return out;
}

}  // namespace detail

inline Decomposition tensor_decompose(const RepLabel& a, const RepLabel& b) {
  if (a.group != b.group) throw usage_error("tensor_decompose: labels of different groups");
  static detail::SharedCache<std::tuple<GroupSpec, std::vector<int>, std::vector<int>>, Decomposition> cache;
  const RepLabel& x = a.data <= b.data ? a : b;
  const RepLabel& y = a.data <= b.data ? b : a;
  return *cache.get({a.group, x.data, y.data}, [&] {
    if (a.group.family == Family::O) return detail::o_tensor(x, y);
    Decomposition out;
    for (const auto& [w, m] : klimyk(a.group, highest_weight(x), highest_weight(y))) {
      out[label_from_weight(a.group, w)] += m;
    }
    return out;
  });
}

// ---------------------------------------------------------------------------
// Exterior powers and the O(N) torus slices.

// Eigenvalue alphabet of the defining representation on the torus.
inline std::vector<MLaurent> torus_alphabet(const GroupSpec& g) {
  GroupSpec c = so_part(g);
  auto vars = torus_variables(c);
  std::vector<MLaurent> alpha;
  const int k = static_cast<int>(vars->size());
  if (c.family == Family::GL) {
    for (int i = 0; i < k; ++i) alpha.push_back(MLaurent::variable(vars, i));
  } else if (c.family == Family::SL) {
    for (int i = 0; i < k; ++i) alpha.push_back(MLaurent::variable(vars, i));
    alpha.push_back(MLaurent::monomial(vars, Exponents(k, -1)));
  } else {
    for (int i = 0; i < k; ++i) {
      alpha.push_back(MLaurent::variable(vars, i));
      alpha.push_back(MLaurent::variable(vars, i, -1));
    }
    if (c.n % 2) alpha.push_back(MLaurent::constant(MLaurent(vars), 1));
  }
  return alpha;
}

// Explicit slice matrices in the basis e_1, e_{-1}, e_2, e_{-2}, ... (, e_0).
inline LMatrix slice_matrix(const GroupSpec& g, bool z_slice) {
  GroupSpec c = so_part(g);
  if (c.family != Family::SO) throw usage_error("slice matrices are for orthogonal groups");
  MLaurent like(torus_variables(c));
  const int l = c.n / 2;
  LMatrix m = laurent_matrix(c.n, like);
  for (int i = 0; i < l; ++i) {
    m[2 * i][2 * i] = MLaurent::variable(like.variable_list(), i);
    m[2 * i + 1][2 * i + 1] = MLaurent::variable(like.variable_list(), i, -1);
  }
  if (c.n % 2) m[c.n - 1][c.n - 1] = MLaurent::constant(like, 1);
  if (!z_slice) return m;
  if (c.n % 2) {
    for (auto& row : m) {
      for (auto& x : row) x = -x;
    }
    return m;
  }
  std::swap(m[0][0], m[0][1]);
  std::swap(m[1][1], m[1][0]);
  return m;
}

inline MLaurent exterior_char(const GroupSpec& g, int d) {
  if (d < 1 || d > g.n) throw usage_error("exterior power degree out of range");
  MLaurent like(torus_variables(so_part(g)));
  return elementary_symmetric(torus_alphabet(g), like, d);
}

inline ClassFunction exterior_class_function(const GroupSpec& g, int d) {
  if (d < 0 || d > g.n) throw usage_error("exterior power degree out of range");
  static detail::SharedCache<std::pair<GroupSpec, int>, ClassFunction> cache;
  return *cache.get({g, d}, [&] {
    if (d == 0) return class_function_constant(g, 1);
    if (g.family != Family::O) return ClassFunction{exterior_char(g, d), std::nullopt};
    MLaurent like(torus_variables(so_part(g)));
    return ClassFunction{principal_minor_sum(slice_matrix(g, false), d, like),
                         principal_minor_sum(slice_matrix(g, true), d, like)};
  });
}

inline OChar exterior_ochar(const GroupSpec& g, int d) {
  if (g.family != Family::O) throw usage_error("exterior_ochar expects O(N)");
  return exterior_class_function(g, d);
}

// Characters of the SO(2l) weights (1,...,1) and (1,...,1,-1).
inline std::pair<MLaurent, MLaurent> so2l_halfexterior(int l) {
  if (l < 2) throw usage_error("so2l_halfexterior needs l >= 2");
  GroupSpec g{Family::SO, 2 * l};
  Weight w(l, 1);
  return {character_of_weight(g, w), character_of_weight(g, chi_weight(w))};
}

// Twining character of a self-chi SO(2l) weight by folding D_l to C_{l-1},
// written in the Z-slice variables (z_1 drops out, x_i = z_{i+1}).
inline MLaurent twining_folded(int l, const Weight& mu) {
  if (l < 2 || static_cast<int>(mu.size()) != l || mu.back() != 0) {
    throw usage_error("twining_folded needs a self-chi weight of length l >= 2");
  }
  GroupSpec sp{Family::Sp, 2 * (l - 1)};
  MLaurent folded = character_of_weight(sp, Weight(mu.begin(), mu.end() - 1));
  MLaurent like(torus_variables(GroupSpec{Family::SO, 2 * l}));
  std::vector<MLaurent> images;
  for (int i = 1; i < l; ++i) images.push_back(MLaurent::variable(like.variable_list(), i));
  return folded.substitute(images, like);
}

inline OChar ochar_of_label(const RepLabel& label) {
  const GroupSpec& g = label.group;
  if (g.family != Family::O) throw usage_error("ochar_of_label expects an O(N) label");
  static detail::SharedCache<RepLabel, OChar> cache;
  return *cache.get(label, [&] {
    OData d = o_data(label);
    MLaurent y = character_of_weight(g, d.so_weight);
    switch (d.kind) {
      case OKind::Odd:
        return OChar{y, d.sign * y};
      case OKind::SelfChi:
        return OChar{y, d.sign * twining_folded(g.n / 2, d.so_weight)};
      case OKind::Induced:
      default:
        return OChar{y + character_of_weight(g, chi_weight(d.so_weight)), MLaurent(y.variable_list())};
    }
  });
}

// Class function of any label.
inline ClassFunction class_function_of(const RepLabel& label) {
  if (label.group.family == Family::O) return ochar_of_label(label);
  return ClassFunction{weyl_character(label), std::nullopt};
}

// ---------------------------------------------------------------------------
// Peel-off decomposition.

enum class PeelMode { Genuine, Virtual };

inline Decomposition peel_decompose(const MLaurent& f, const GroupSpec& g, PeelMode mode = PeelMode::Genuine) {
  if (!g.connected()) throw usage_error("peel_decompose: O(N) input must be an OChar");
  MLaurent rem = f;
  if (!rem.same_variables(MLaurent(torus_variables(g)))) throw usage_error("character over the wrong torus variables");
  Decomposition out;
  while (!rem.is_zero()) {
    std::optional<std::pair<Weight, Integer>> lead;
    for (const auto& [e, c] : rem.terms()) {
      Weight w = exponents_to_weight(g, e);
      if (is_dominant(g, w)) {
        lead.emplace(w, c);
        break;
      }
    }
    if (!lead) throw not_a_character("remainder has no dominant monomial");
    auto& [w, c] = *lead;
    if (mode == PeelMode::Genuine && c < 0) throw not_a_character("negative multiplicity");
    rem -= c * character_of_weight(g, w);
    out[label_from_weight(g, w)] += c;
  }
  return out;
}

inline Decomposition peel_decompose(const OChar& f, const GroupSpec& g, PeelMode mode = PeelMode::Genuine) {
  if (g.connected()) {
    if (f.on_z) throw usage_error("peel_decompose: unexpected Z-slice data for a connected group");
    return peel_decompose(f.on_y, g, mode);
  }
  if (!f.on_z) throw usage_error("peel_decompose: O(N) input needs the Z-slice value");
  const int l = g.n / 2;
  MLaurent y = f.on_y, z = *f.on_z;
  if (!y.same_variables(MLaurent(torus_variables(so_part(g))))) throw usage_error("character over the wrong torus variables");
  Decomposition out;
  auto record = [&](const RepLabel& lab, const Integer& m) {
    if (m == 0) return;
    if (mode == PeelMode::Genuine && m < 0) throw not_a_character("negative multiplicity");
    out[lab] += m;
  };
  while (!y.is_zero()) {
    std::optional<std::pair<Weight, Integer>> lead;
    for (const auto& [e, c] : y.terms()) {
      if (is_dominant(RootType::B, e)) {
        lead.emplace(e, c);
        break;
      }
    }
    if (!lead) throw not_a_character("remainder has no dominant monomial");
    const Weight mu = lead->first;
    const Integer m = lead->second;
    if (g.n % 2 == 0 && mu.back() > 0) {
      record(o_label(g, mu, 0), m);
      y -= m * (character_of_weight(g, mu) + character_of_weight(g, chi_weight(mu)));
      continue;
    }
    Exponents ze = mu;
    if (g.n % 2 == 0) {
      ze.assign(l, 0);
      std::copy(mu.begin(), mu.end() - 1, ze.begin() + 1);
    }
    Integer c = z.coefficient(ze);
    Integer plus = m + c, minus = m - c;
    if (plus % 2 != 0) throw not_a_character("Y and Z slices are inconsistent");
    plus /= 2;
    minus /= 2;
    record(o_label(g, mu, 1), plus);
    record(o_label(g, mu, -1), minus);
    OChar p = ochar_of_label(o_label(g, mu, 1)), q = ochar_of_label(o_label(g, mu, -1));
    y -= plus * p.on_y + minus * q.on_y;
    z -= plus * *p.on_z + minus * *q.on_z;
  }
  if (!z.is_zero()) throw not_a_character("Z-slice remainder is nonzero");
  return out;
}

// ---------------------------------------------------------------------------
// Labels occurring in tensor powers of the defining representation.

inline std::shared_ptr<const std::set<RepLabel>> p_r_support_ptr(const GroupSpec& g, int r) {
  static detail::SharedCache<std::pair<GroupSpec, int>, std::set<RepLabel>> cache;
  return cache.get({g, r}, [&] {
    std::set<RepLabel> out;
    if (r == 0) {
      out.insert(trivial_label(g));
      return out;
    }
    RepLabel v = vector_label(g);
    for (const auto& lab : *p_r_support_ptr(g, r - 1)) {
      for (const auto& [k, m] : tensor_decompose(lab, v)) out.insert(k);
    }
    return out;
  });
}

inline std::set<RepLabel> p_r_support(const GroupSpec& g, int r) {
  if (r < 0) throw usage_error("p_r_support needs r >= 0");
  return *p_r_support_ptr(g, r);
}

}  // namespace repring
