#include <catch_amalgamated.hpp>

#include "repring/char_engine.hpp"
#include "repring/twining.hpp"

using namespace repring;

namespace {

// Weyl alternant A(2w + 2rho) at a rational point, summed over the signed
// permutation group of the given type. Independent of Freudenthal.
Rational alternant(RootType t, const Weight& doubled, const std::vector<Rational>& z) {
  const int len = static_cast<int>(doubled.size());
  std::vector<int> p(len);
  std::iota(p.begin(), p.end(), 0);
  Rational s = 0;
  do {
    int inv = 0;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) inv += p[i] > p[j];
    }
    for (int mask = 0; mask < (1 << len); ++mask) {
      int flips = __builtin_popcount(mask);
      if (t == RootType::A && mask) continue;
      if (t == RootType::D && flips % 2) continue;
      int sign = inv % 2 ? -1 : 1;
      if ((t == RootType::B || t == RootType::C) && flips % 2) sign = -sign;
      Rational term = sign;
      for (int i = 0; i < len; ++i) {
        int e = (mask >> i & 1 ? -1 : 1) * doubled[p[i]];
        // doubled exponents: evaluate at z^(1/2) by squaring the point
        term *= rational_pow(z[i], e);
      }
      s += term;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

MLaurent product_character(const RepLabel& a, const RepLabel& b) {
  return weyl_character(a) * weyl_character(b);
}

}  // namespace

TEST_CASE("Freudenthal multiplicities") {
  auto sl3 = make_group(Family::SL, 3);
  auto adj = freudenthal(make_label(sl3, {1, 1}));
  int zero = 0, ones = 0;
  for (const auto& [w, m] : adj) {
    if (w == Weight{1, 1, 1}) {
      CHECK(m == 2);
      ++zero;
    } else {
      CHECK(m == 1);
      ++ones;
    }
  }
  CHECK(zero == 1);
  CHECK(ones == 6);
  auto s = freudenthal(make_label(make_group(Family::SL, 2), {5}));
  CHECK(s.size() == 6);
}

TEST_CASE("Freudenthal mass and orbit constancy") {
  for (auto g : {make_group(Family::Sp, 6), make_group(Family::SO, 7), make_group(Family::SO, 6),
                 make_group(Family::SL, 4)}) {
    for (const auto& lab : enumerate_labels(g, 4)) {
      auto wm = freudenthal(lab);
      long long mass = 0;
      for (const auto& [w, m] : wm) {
        mass += m;
        for (const auto& v : weyl_orbit(g.root_type(), w)) CHECK(wm.at(v) == m);
      }
      CHECK(Integer(static_cast<long>(mass)) == dimension(lab));
      CHECK(wm.at(highest_weight(lab)) == 1);
    }
  }
}

TEST_CASE("Weyl characters") {
  auto so5 = make_group(Family::SO, 5);
  CHECK(weyl_character(vector_label(so5)).to_string() == "z1 + z2 + 1 + z2^-1 + z1^-1");
  CHECK(weyl_character(make_label(make_group(Family::SL, 2), {2})).to_string() == "z1^2 + 1 + z1^-2");
}

TEST_CASE("character equals alternant ratio") {
  // Evaluate at squares so the doubled alternant exponents stay integral.
  std::vector<Rational> pt{Rational(2), Rational(3), Rational(7, 2)};
  for (auto g : {make_group(Family::Sp, 4), make_group(Family::SO, 5), make_group(Family::SO, 6),
                 make_group(Family::Sp, 6)}) {
    auto t = g.root_type();
    const int len = g.weight_length();
    std::vector<Rational> z(pt.begin(), pt.begin() + len), zsq;
    for (auto& x : z) zsq.push_back(x * x);
    Weight rho2 = two_rho(t, len);
    for (const auto& lab : enumerate_labels(g, 3)) {
      Weight d(len);
      for (int i = 0; i < len; ++i) d[i] = 2 * lab.data[i] + rho2[i];
      Rational ratio = alternant(t, d, z) / alternant(t, rho2, z);
      CHECK(weyl_character(lab).eval(zsq) == ratio);
    }
  }
}

TEST_CASE("tensor products") {
  auto sl2 = make_group(Family::SL, 2);
  Decomposition want{{make_label(sl2, {2}), 1}, {make_label(sl2, {0}), 1}};
  CHECK(tensor_decompose(vector_label(sl2), vector_label(sl2)) == want);
  auto sp4 = make_group(Family::Sp, 4);
  Decomposition want2{{make_label(sp4, {2, 0}), 1}, {make_label(sp4, {1, 1}), 1}, {trivial_label(sp4), 1}};
  CHECK(tensor_decompose(vector_label(sp4), vector_label(sp4)) == want2);
  auto so7 = make_group(Family::SO, 7);
  auto a = make_label(so7, {2, 1, 0});
  CHECK(tensor_decompose(a, trivial_label(so7)) == Decomposition{{a, 1}});
  CHECK_THROWS_AS(tensor_decompose(a, vector_label(sp4)), usage_error);
}

TEST_CASE("dimension bilinearity and peel oracle") {
  for (auto g : {make_group(Family::SL, 3), make_group(Family::GL, 3), make_group(Family::Sp, 4),
                 make_group(Family::SO, 5), make_group(Family::SO, 6), make_group(Family::SO, 4),
                 make_group(Family::O, 4), make_group(Family::O, 5)}) {
    auto labels = enumerate_labels_by_dim(g, 20);
    for (const auto& a : labels) {
      for (const auto& b : labels) {
        auto dec = tensor_decompose(a, b);
        Integer total = 0;
        for (const auto& [k, m] : dec) {
          CHECK(m > 0);
          total += m * dimension(k);
        }
        CHECK(total == dimension(a) * dimension(b));
        auto peeled = g.connected() ? peel_decompose(product_character(a, b), g)
                                    : peel_decompose(ochar_of_label(a) * ochar_of_label(b), g);
        CHECK(peeled == dec);
      }
    }
  }
}

TEST_CASE("exterior powers") {
  auto sp2 = make_group(Family::Sp, 2);
  CHECK(exterior_char(sp2, 1).to_string() == "z1 + z1^-1");
  auto sl3 = make_group(Family::SL, 3);
  CHECK(exterior_char(sl3, 3).to_string() == "1");
  auto o4 = make_group(Family::O, 4);
  auto e1 = exterior_class_function(o4, 1);
  CHECK(e1.on_z->to_string() == "z2 + z2^-1");
  CHECK_THROWS_AS(exterior_char(sp2, 3), usage_error);
  auto sp4 = make_group(Family::Sp, 4);
  Decomposition want{{make_label(sp4, {1, 1}), 1}, {trivial_label(sp4), 1}};
  CHECK(peel_decompose(exterior_char(sp4, 2), sp4) == want);
}

TEST_CASE("half exterior powers") {
  for (int l = 2; l <= 4; ++l) {
    auto g = make_group(Family::SO, 2 * l);
    auto [s0, s1] = so2l_halfexterior(l);
    CHECK(s0 + s1 == exterior_char(g, l));
    MLaurent like(torus_variables(g));
    MLaurent prod = MLaurent::constant(like, 1);
    for (int i = 0; i < l; ++i) {
      prod *= MLaurent::variable(like.variable_list(), i) - MLaurent::variable(like.variable_list(), i, -1);
    }
    CHECK((s0 - s1 == prod || s0 - s1 == -prod));
    Integer binom = 1;
    for (int i = 1; i <= l; ++i) binom = binom * (l + i) / i;
    CHECK(weyl_dimension(g, Weight(l, 1)) * 2 == binom);
  }
}

TEST_CASE("O(N) class functions") {
  auto o3 = make_group(Family::O, 3);
  auto v = ochar_of_label(vector_label(o3));
  CHECK(v.on_y.to_string() == "z1 + 1 + z1^-1");
  CHECK(*v.on_z == -v.on_y);
  auto o4 = make_group(Family::O, 4);
  CHECK(ochar_of_label(make_label(o4, {1, 1})).on_z->is_zero());
  auto w = ochar_of_label(vector_label(o4));
  CHECK(w.on_y.to_string() == "z1 + z2 + z2^-1 + z1^-1");
  CHECK(w.on_z->to_string() == "z2 + z2^-1");
  // O-characters of exterior powers agree with the slice-matrix computation
  for (int n = 3; n <= 7; ++n) {
    auto g = make_group(Family::O, n);
    for (int d = 1; d <= n; ++d) {
      auto f = exterior_class_function(g, d);
      auto dec = peel_decompose(f, g);
      REQUIRE(dec.size() == 1);
      CHECK(dec.begin()->second == 1);
      CHECK(ochar_of_label(dec.begin()->first) == f);
    }
  }
}

TEST_CASE("peel rejects non-characters") {
  auto sl2 = make_group(Family::SL, 2);
  auto f = -weyl_character(vector_label(sl2));
  CHECK_THROWS_AS(peel_decompose(f, sl2), not_a_character);
  auto dec = peel_decompose(f, sl2, PeelMode::Virtual);
  CHECK(dec.at(vector_label(sl2)) == -1);
  MLaurent like(torus_variables(sl2));
  CHECK_THROWS_AS(peel_decompose(MLaurent::variable(like.variable_list(), 0), sl2), not_a_character);
}

TEST_CASE("ochar products peel with nonnegative multiplicities") {
  for (int n : {4, 6}) {
    auto g = make_group(Family::O, n);
    auto labels = enumerate_labels(g, 2);
    for (const auto& a : labels) {
      for (const auto& b : labels) {
        auto dec = peel_decompose(ochar_of_label(a) * ochar_of_label(b), g);
        for (const auto& [k, m] : dec) CHECK(m > 0);
      }
    }
  }
}

TEST_CASE("P_r support") {
  auto sl2 = make_group(Family::SL, 2);
  CHECK(p_r_support(sl2, 2) == std::set<RepLabel>{make_label(sl2, {0}), make_label(sl2, {2})});
  CHECK(p_r_support(make_group(Family::Sp, 6), 0).size() == 1);
  auto o3 = make_group(Family::O, 3);
  CHECK(p_r_support(o3, 2) ==
        std::set<RepLabel>{trivial_label(o3), make_label(o3, {1, 1}), make_label(o3, {2})});
}

TEST_CASE("twining characters: folding against brute force") {
  CHECK(twining_bruteforce(2, {0, 0}).to_string() == "1");
  for (int l = 2; l <= 3; ++l) {
    auto g = make_group(Family::SO, 2 * l);
    for (const auto& lab : enumerate_labels(g, l == 2 ? 3 : 2)) {
      if (lab.data.back() != 0) continue;
      CHECK(twining_bruteforce(l, lab.data) == twining_folded(l, lab.data));
    }
  }
  // l = 2 vector: the twining trace is the A1 character in the second variable
  CHECK(twining_bruteforce(2, {1, 0}).to_string() == "z2 + z2^-1");
  CHECK_THROWS_AS(twining_bruteforce(2, {5, 0}), usage_error);
}
