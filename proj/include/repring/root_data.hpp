#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exact.hpp"

namespace repring {

enum class Family { GL, SL, Sp, SO, O };
enum class RootType { A, B, C, D };

using Weight = std::vector<int>;

struct GroupSpec {
  Family family = Family::GL;
  int n = 1;

  // l for Sp/SO/O, N-1 for GL/SL
  int rank() const {
    return (family == Family::GL || family == Family::SL) ? n - 1 : n / 2;
  }
  int half() const { return n / 2; }
  bool connected() const { return family != Family::O; }
  bool type_a() const { return family == Family::GL || family == Family::SL; }

  RootType root_type() const {
    switch (family) {
      case Family::GL:
      case Family::SL:
        return RootType::A;
      case Family::Sp:
        return RootType::C;
      default:
        return n % 2 ? RootType::B : RootType::D;
    }
  }

  // Length of an epsilon-coordinate weight vector.
  int weight_length() const { return type_a() ? n : n / 2; }

  std::string to_string() const {
    static const char* names[] = {"GL", "SL", "Sp", "SO", "O"};
    return std::string(names[static_cast<int>(family)]) + "(" + std::to_string(n) + ")";
  }

  auto operator<=>(const GroupSpec&) const = default;
};

inline GroupSpec make_group(Family f, int n) {
  GroupSpec g{f, n};
  auto bad = [&](const std::string& why) { throw usage_error(g.to_string() + ": " + why); };
  switch (f) {
    case Family::GL:
      if (n < 1) bad("need n >= 1");
      break;
    case Family::SL:
      if (n < 2) bad("need n >= 2");
      break;
    case Family::Sp:
      if (n < 2 || n % 2) bad("need an even n >= 2");
      break;
    case Family::SO:
      if (n < 3) bad("need n >= 3");
      if (n % 2 == 0 && n / 2 < 2) bad("SO(2l) needs l >= 2");
      break;
    case Family::O:
      if (n < 3) bad("need n >= 3");
      break;
  }
  return g;
}

// Accepts GL(n), SL(n), Sp(2l), SO(n), O(n).
inline GroupSpec parse_group(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto open = s.find('(');
  if (open == std::string::npos || s.empty() || s.back() != ')') {
    throw usage_error("group spec '" + text + "': expected NAME(n)");
  }
  std::string name = s.substr(0, open), num = s.substr(open + 1, s.size() - open - 2);
  Family f;
  if (name == "GL") {
    f = Family::GL;
  } else if (name == "SL") {
    f = Family::SL;
  } else if (name == "Sp") {
    f = Family::Sp;
  } else if (name == "SO") {
    f = Family::SO;
  } else if (name == "O") {
    f = Family::O;
  } else {
    throw usage_error("group spec '" + text + "': unknown family '" + name + "'");
  }
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw usage_error("group spec '" + text + "' at position " + std::to_string(open + 1) +
                      ": expected a positive integer");
  }
  return make_group(f, std::stoi(num));
}

// Connected group whose torus and Weyl group the O(N) layer sits on.
inline GroupSpec so_part(const GroupSpec& g) {
  return g.family == Family::O ? GroupSpec{Family::SO, g.n} : g;
}

// ---------------------------------------------------------------------------
// Roots, rho and the Weyl group, in epsilon coordinates.

inline Weight unit_weight(int len, int i, int c = 1) {
  Weight w(len, 0);
  w[i] = c;
  return w;
}

inline std::vector<Weight> positive_roots(RootType t, int len) {
  std::vector<Weight> roots;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      Weight a(len, 0);
      a[i] = 1;
      a[j] = -1;
      roots.push_back(a);
      if (t != RootType::A) {
        a[j] = 1;
        roots.push_back(a);
      }
    }
    if (t == RootType::B) roots.push_back(unit_weight(len, i));
    if (t == RootType::C) roots.push_back(unit_weight(len, i, 2));
  }
  return roots;
}

inline std::vector<Weight> positive_roots(const GroupSpec& g) {
  return positive_roots(g.root_type(), g.weight_length());
}

inline std::vector<Weight> simple_roots(RootType t, int len) {
  std::vector<Weight> s;
  for (int i = 0; i + 1 < len; ++i) {
    Weight a(len, 0);
    a[i] = 1;
    a[i + 1] = -1;
    s.push_back(a);
  }
  if (len == 0) return s;
  if (t == RootType::B) s.push_back(unit_weight(len, len - 1));
  if (t == RootType::C) s.push_back(unit_weight(len, len - 1, 2));
  if (t == RootType::D && len >= 2) {
    Weight a(len, 0);
    a[len - 2] = 1;
    a[len - 1] = 1;
    s.push_back(a);
  }
  return s;
}

inline std::vector<Weight> simple_roots(const GroupSpec& g) {
  return simple_roots(g.root_type(), g.weight_length());
}

// 2*rho, which is integral for every type.
inline Weight two_rho(RootType t, int len) {
  Weight r(len);
  for (int i = 0; i < len; ++i) {
    switch (t) {
      case RootType::A:
        r[i] = 2 * (len - 1 - i);
        break;
      case RootType::B:
        r[i] = 2 * (len - i) - 1;
        break;
      case RootType::C:
        r[i] = 2 * (len - i);
        break;
      case RootType::D:
        r[i] = 2 * (len - 1 - i);
        break;
    }
  }
  return r;
}

inline long long dot(const Weight& a, const Weight& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

inline bool is_dominant(RootType t, const Weight& w) {
  int len = static_cast<int>(w.size());
  for (int i = 0; i + 1 < len; ++i) {
    if (w[i] < w[i + 1]) return false;
  }
  if (len == 0 || t == RootType::A) return true;
  if (t == RootType::D) return len < 2 || w[len - 2] >= std::abs(w[len - 1]);
  return w[len - 1] >= 0;
}

inline bool is_dominant(const GroupSpec& g, const Weight& w) { return is_dominant(g.root_type(), w); }

struct Reduction {
  Weight weight;
  int sign = 1;
  bool boundary = false;
};

// Dominant representative of the linear Weyl orbit, by sort plus sign
// normalisation. sign is det of the Weyl element used; boundary is set when
// the input has a nontrivial stabiliser (lies on a wall).
inline Reduction reduce_to_chamber(RootType t, Weight v) {
  int len = static_cast<int>(v.size());
  int flips = 0;
  if (t != RootType::A) {
    for (auto& x : v) {
      if (x < 0) {
        x = -x;
        ++flips;
      }
    }
  }
  int inversions = 0;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      if (v[i] < v[j]) ++inversions;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<int>());
  Reduction r;
  for (int i = 0; i + 1 < len; ++i) {
    if (v[i] == v[i + 1]) r.boundary = true;
  }
  if ((t == RootType::B || t == RootType::C) && len > 0 && v[len - 1] == 0) r.boundary = true;
  int sign = inversions % 2 ? -1 : 1;
  if (t == RootType::B || t == RootType::C) {
    if (flips % 2) sign = -sign;
  } else if (t == RootType::D && flips % 2) {
    // an odd number of flips is not in W(D): undo one on the smallest entry
    if (len > 0 && v[len - 1] != 0) v[len - 1] = -v[len - 1];
  }
  r.weight = std::move(v);
  r.sign = sign;
  return r;
}

enum class Action { Linear, Shifted };

inline Reduction dominance_reduce(const GroupSpec& g, const Weight& w, Action action = Action::Shifted) {
  RootType t = g.root_type();
  if (static_cast<int>(w.size()) != g.weight_length()) throw usage_error("weight has wrong length");
  if (action == Action::Linear) return reduce_to_chamber(t, w);
  Weight rho2 = two_rho(t, g.weight_length());
  Weight v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = 2 * w[i] + rho2[i];
  Reduction r = reduce_to_chamber(t, v);
  for (std::size_t i = 0; i < w.size(); ++i) r.weight[i] = (r.weight[i] - rho2[i]) / 2;
  return r;
}

// ---------------------------------------------------------------------------
// Labels.

struct RepLabel {
  GroupSpec group;
  std::vector<int> data;

  std::string to_string() const {
    if (data.empty()) return group.family == Family::O ? "()" : "";
    std::string s;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(data[i]);
    }
    return s;
  }

  auto operator<=>(const RepLabel&) const = default;
};

// Swap of the last two Dynkin labels.
inline std::vector<int> chi_dynkin(std::vector<int> a) {
  if (a.size() < 2) throw usage_error("chi needs at least two Dynkin labels");
  std::swap(a[a.size() - 1], a[a.size() - 2]);
  return a;
}

// Sign flip of the last epsilon coordinate.
inline Weight chi_weight(Weight w) {
  if (w.empty()) throw usage_error("chi of an empty weight");
  w.back() = -w.back();
  return w;
}

inline RepLabel chi_involution(const RepLabel& label) {
  const auto& g = label.group;
  if (g.family != Family::SO || g.n % 2) throw usage_error("chi is defined for SO(2l) labels only");
  return RepLabel{g, chi_weight(label.data)};
}

inline int partition_size(const std::vector<int>& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

// number of parts >= k, i.e. the length of column k
inline int column_length(const std::vector<int>& p, int k) {
  int c = 0;
  for (int x : p) {
    if (x >= k) ++c;
  }
  return c;
}

struct LabelCheck {
  std::optional<RepLabel> label;
  std::string violation;
  explicit operator bool() const { return label.has_value(); }
};

inline LabelCheck label_validate(const GroupSpec& g, std::vector<int> data) {
  auto reject = [](std::string why) { return LabelCheck{std::nullopt, std::move(why)}; };
  auto decreasing = [&](std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i) {
      if (data[i] < data[i + 1]) return false;
    }
    return true;
  };
  const int len = g.weight_length();
  switch (g.family) {
    case Family::GL:
      if (static_cast<int>(data.size()) != len) return reject("expected " + std::to_string(len) + " entries");
      if (!decreasing(data.size())) return reject("entries must be weakly decreasing");
      break;
    case Family::SL:
      if (static_cast<int>(data.size()) != g.n - 1) {
        return reject("expected " + std::to_string(g.n - 1) + " Dynkin labels");
      }
      for (int x : data) {
        if (x < 0) return reject("Dynkin labels must be nonnegative");
      }
      break;
    case Family::Sp:
    case Family::SO:
      if (static_cast<int>(data.size()) != len) return reject("expected " + std::to_string(len) + " entries");
      if (g.family == Family::SO && g.n % 2 == 0) {
        if (!decreasing(data.size() - 1)) return reject("entries must be weakly decreasing");
        if (data[len - 2] < std::abs(data[len - 1])) return reject("need l_{l-1} >= |l_l|");
      } else {
        if (!decreasing(data.size())) return reject("entries must be weakly decreasing");
        if (data.back() < 0) return reject("entries must be nonnegative");
      }
      break;
    case Family::O: {
      while (!data.empty() && data.back() == 0) data.pop_back();
      for (int x : data) {
        if (x <= 0) return reject("partition parts must be positive");
      }
      if (!decreasing(data.size())) return reject("partition must be weakly decreasing");
      int c1 = column_length(data, 1), c2 = column_length(data, 2);
      if (c1 + c2 > g.n) {
        return reject("first two columns have lengths " + std::to_string(c1) + "+" + std::to_string(c2) +
                      " > " + std::to_string(g.n));
      }
      break;
    }
  }
  return LabelCheck{RepLabel{g, std::move(data)}, {}};
}

inline RepLabel make_label(const GroupSpec& g, std::vector<int> data) {
  auto check = label_validate(g, data);
  if (!check) throw usage_error("invalid label for " + g.to_string() + ": " + check.violation);
  return *check.label;
}

// Comma separated integers; "()" or "" is the empty partition.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  if (s == "()" || s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
      throw usage_error("label '" + text + "' at position " + std::to_string(start) + ": expected an integer");
    }
    out.push_back(std::stoi(s.substr(start, pos - start)));
    if (pos == s.size()) break;
    if (s[pos] != ',') {
      throw usage_error("label '" + text + "' at position " + std::to_string(pos) + ": expected ','");
    }
    ++pos;
  }
  return out;
}

inline RepLabel parse_label(const GroupSpec& g, const std::string& text) {
  return make_label(g, parse_int_list(text));
}

inline RepLabel trivial_label(const GroupSpec& g) {
  if (g.family == Family::O) return RepLabel{g, {}};
  if (g.family == Family::SL) return RepLabel{g, std::vector<int>(g.n - 1, 0)};
  return RepLabel{g, std::vector<int>(g.weight_length(), 0)};
}

inline RepLabel vector_label(const GroupSpec& g) {
  if (g.family == Family::O) return RepLabel{g, {1}};
  if (g.family == Family::SL) {
    std::vector<int> a(g.n - 1, 0);
    a[0] = 1;
    return RepLabel{g, a};
  }
  return RepLabel{g, unit_weight(g.weight_length(), 0)};
}

// Highest weight in epsilon coordinates (SL normalised to last entry 0).
inline Weight highest_weight(const RepLabel& label) {
  const auto& g = label.group;
  if (g.family == Family::O) throw usage_error("O(N) labels have no single highest weight; use o_data");
  if (g.family != Family::SL) return label.data;
  Weight w(g.n, 0);
  for (int i = g.n - 2; i >= 0; --i) w[i] = w[i + 1] + label.data[i];
  return w;
}

// Label of a dominant weight of a connected group.
inline RepLabel label_from_weight(const GroupSpec& g, const Weight& w) {
  if (g.family == Family::O) throw usage_error("label_from_weight: connected groups only");
  if (g.family != Family::SL) return RepLabel{g, w};
  std::vector<int> a(g.n - 1);
  for (int i = 0; i + 1 < g.n; ++i) a[i] = w[i] - w[i + 1];
  return RepLabel{g, a};
}

inline Weight normalize_weight(const GroupSpec& g, Weight w) {
  if (g.family == Family::SL) {
    int last = w.back();
    for (auto& x : w) x -= last;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Torus variables.

inline std::vector<std::string> torus_variable_names(const GroupSpec& g) {
  switch (g.family) {
    case Family::GL:
      return numbered_variables("z", g.n);
    case Family::SL:
      return numbered_variables("z", g.n - 1);
    default:
      return numbered_variables("z", g.n / 2);
  }
}

inline MLaurent::Variables torus_variables(const GroupSpec& g) {
  return MLaurent(torus_variable_names(g)).variable_list();
}

// For SL(N) the last torus coordinate is (z_1...z_{N-1})^{-1}.
inline Exponents weight_to_exponents(const GroupSpec& g, const Weight& w) {
  if (g.family != Family::SL) return w;
  Exponents e(g.n - 1);
  for (int i = 0; i + 1 < g.n; ++i) e[i] = w[i] - w[g.n - 1];
  return e;
}

inline Weight exponents_to_weight(const GroupSpec& g, const Exponents& e) {
  if (g.family != Family::SL) return e;
  Weight w(e);
  w.push_back(0);
  return w;
}

// ---------------------------------------------------------------------------
// Dimensions.

inline Integer weyl_dimension_doubled(RootType t, const Weight& twice_weight) {
  int len = static_cast<int>(twice_weight.size());
  Weight rho2 = two_rho(t, len);
  Integer num = 1, den = 1;
  Weight shifted(len);
  for (int i = 0; i < len; ++i) shifted[i] = twice_weight[i] + rho2[i];
  for (const auto& a : positive_roots(t, len)) {
    num *= static_cast<long>(dot(shifted, a));
    den *= static_cast<long>(dot(rho2, a));
  }
  return num / den;
}

inline Integer weyl_dimension(const GroupSpec& g, const Weight& w) {
  Weight d(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) d[i] = 2 * w[i];
  return weyl_dimension_doubled(g.root_type(), d);
}

// ---------------------------------------------------------------------------
// O(N) labels versus SO(N) data (Weyl's parametrisation).

enum class OKind { Odd, SelfChi, Induced };

struct OData {
  Weight so_weight;  // B-dominant, nonnegative, length l
  OKind kind = OKind::Odd;
  int sign = 1;  // Odd: scalar of -I. SelfChi: sign of the twining character. Induced: 0.
};

inline OData o_data(const RepLabel& label) {
  const auto& g = label.group;
  if (g.family != Family::O) throw usage_error("o_data expects an O(N) label");
  const int n = g.n, l = n / 2;
  const auto& p = label.data;
  int c1 = column_length(p, 1);
  OData d;
  std::vector<int> parts = p;
  if (c1 > l) parts.resize(n - c1);  // associated partition: first column n - c1
  d.so_weight.assign(l, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) d.so_weight[i] = parts[i];
  if (n % 2) {
    d.kind = OKind::Odd;
    d.sign = partition_size(p) % 2 ? -1 : 1;
  } else if (c1 == l) {
    d.kind = OKind::Induced;
    d.sign = 0;
  } else {
    d.kind = OKind::SelfChi;
    d.sign = c1 < l ? 1 : -1;
  }
  return d;
}

// Inverse of o_data. For induced weights (last entry > 0 in even rank) the sign is ignored.
inline RepLabel o_label(const GroupSpec& g, const Weight& so_weight, int sign) {
  const int n = g.n, l = n / 2;
  std::vector<int> p;
  for (int x : so_weight) {
    if (x < 0) throw usage_error("o_label expects a nonnegative SO weight");
    if (x > 0) p.push_back(x);
  }
  int c1 = static_cast<int>(p.size());
  bool plain;
  if (n % 2) {
    plain = (partition_size(p) % 2 ? -1 : 1) == sign;
  } else {
    plain = c1 == l || sign > 0;
  }
  if (!plain) p.resize(n - c1, 1);
  return RepLabel{g, p};
}

inline Integer dimension(const RepLabel& label) {
  const auto& g = label.group;
  if (g.family != Family::O) return weyl_dimension(g, highest_weight(label));
  OData d = o_data(label);
  Integer dim = weyl_dimension(so_part(g), d.so_weight);
  return d.kind == OKind::Induced ? Integer(2 * dim) : dim;
}

// Epsilon-degree used for size caps: |lambda| for partitions, sum of |entries| otherwise.
inline int label_size(const RepLabel& label) {
  if (label.group.family == Family::O) return partition_size(label.data);
  Weight w = highest_weight(label);
  int s = 0;
  for (int x : w) s += std::abs(x);
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration of label sets.

namespace detail {

inline void partitions_rec(int remaining, int max_part, int max_parts, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int x = std::min(remaining, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions_rec(remaining - x, x, max_parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Partitions of size <= max_size with at most max_parts parts.
inline std::vector<std::vector<int>> partitions_upto(int max_size, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::partitions_rec(max_size, max_size, max_parts, cur, out);
  return out;
}

inline std::vector<RepLabel> enumerate_labels(const GroupSpec& g, int max_size) {
  std::set<RepLabel> out;
  const int len = g.weight_length();
  switch (g.family) {
    case Family::O:
      for (auto& p : partitions_upto(max_size, g.n)) {
        auto c = label_validate(g, p);
        if (c) out.insert(*c.label);
      }
      break;
    case Family::SL:
      for (auto& p : partitions_upto(max_size, g.n - 1)) {
        Weight w(g.n, 0);
        std::copy(p.begin(), p.end(), w.begin());
        out.insert(label_from_weight(g, w));
      }
      break;
    case Family::GL:
      // split the size between the positive and negative halves
      for (auto& pos : partitions_upto(max_size, len)) {
        for (auto& neg : partitions_upto(max_size - partition_size(pos), len - static_cast<int>(pos.size()))) {
          Weight w(len, 0);
          std::copy(pos.begin(), pos.end(), w.begin());
          for (std::size_t i = 0; i < neg.size(); ++i) w[len - 1 - i] = -neg[i];
          out.insert(RepLabel{g, w});
        }
      }
      break;
    default:
      for (auto& p : partitions_upto(max_size, len)) {
        Weight w(len, 0);
        std::copy(p.begin(), p.end(), w.begin());
        out.insert(RepLabel{g, w});
        if (g.family == Family::SO && g.n % 2 == 0 && w[len - 1] > 0) out.insert(RepLabel{g, chi_weight(w)});
      }
      break;
  }
  return {out.begin(), out.end()};
}

// Dynkin labels to doubled epsilon coordinates.
inline Weight dynkin_to_doubled(RootType t, const std::vector<int>& a, int len) {
  Weight w(len, 0);
  int r = static_cast<int>(a.size());
  switch (t) {
    case RootType::A:
      for (int i = len - 2; i >= 0; --i) w[i] = w[i + 1] + 2 * a[i];
      break;
    case RootType::C:
      for (int i = 0; i < r; ++i) {
        for (int k = 0; k <= i; ++k) w[k] += 2 * a[i];
      }
      break;
    case RootType::B:
      for (int i = 0; i + 1 < r; ++i) {
        for (int k = 0; k <= i; ++k) w[k] += 2 * a[i];
      }
      for (int k = 0; k < len; ++k) w[k] += a[r - 1];
      break;
    case RootType::D:
      for (int i = 0; i + 2 < r; ++i) {
        for (int k = 0; k <= i; ++k) w[k] += 2 * a[i];
      }
      for (int k = 0; k < len; ++k) w[k] += a[r - 2] + a[r - 1];
      w[len - 1] += -2 * a[r - 2];
      break;
  }
  return w;
}

// All connected-group highest weights (integral, i.e. non-spin) of dimension
// <= max_dim, found by growing Dynkin labels: dimension is increasing in each.
inline std::vector<Weight> dominant_weights_by_dim(RootType t, int len, const Integer& max_dim) {
  int r = t == RootType::A ? len - 1 : len;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack{std::vector<int>(r, 0)};
  std::vector<Weight> out;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    if (!seen.insert(a).second) continue;
    Weight d = dynkin_to_doubled(t, a, len);
    if (weyl_dimension_doubled(t, d) > max_dim) continue;
    bool integral = std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
    if (integral) {
      Weight w(len);
      for (int i = 0; i < len; ++i) w[i] = d[i] / 2;
      out.push_back(w);
    }
    for (int i = 0; i < r; ++i) {
      auto b = a;
      ++b[i];
      stack.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Labels of dimension <= max_dim. GL(N) is cut to determinant twists -1, 0, 1.
inline std::vector<RepLabel> enumerate_labels_by_dim(const GroupSpec& g, const Integer& max_dim) {
  std::set<RepLabel> out;
  if (g.family == Family::O) {
    auto so = so_part(g);
    for (const auto& mu : dominant_weights_by_dim(so.root_type(), so.weight_length(), max_dim)) {
      if (g.n % 2 == 0 && mu.back() < 0) continue;
      for (int s : {1, -1}) {
        RepLabel lab = o_label(g, mu, s);
        if (dimension(lab) <= max_dim) out.insert(lab);
      }
    }
  } else if (g.family == Family::GL) {
    for (const auto& mu : dominant_weights_by_dim(RootType::A, g.n, max_dim)) {
      for (int k : {-1, 0, 1}) {
        Weight w = mu;
        for (auto& x : w) x += k;
        out.insert(RepLabel{g, w});
      }
    }
  } else {
    for (const auto& mu : dominant_weights_by_dim(g.root_type(), g.weight_length(), max_dim)) {
      out.insert(label_from_weight(g, mu));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace repring
