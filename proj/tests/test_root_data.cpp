#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "repring/char_engine.hpp"

using namespace repring;

TEST_CASE("simple roots") {
  using W = std::vector<Weight>;
  CHECK(simple_roots(make_group(Family::Sp, 4)) == W{{1, -1}, {0, 2}});
  CHECK(simple_roots(make_group(Family::SO, 6)) == W{{1, -1, 0}, {0, 1, -1}, {0, 1, 1}});
  CHECK(simple_roots(make_group(Family::SL, 2)) == W{{1, -1}});
  for (auto g : {make_group(Family::SO, 7), make_group(Family::Sp, 6), make_group(Family::GL, 4)}) {
    CHECK(static_cast<int>(simple_roots(g).size()) == g.rank());
  }
}

TEST_CASE("group validation") {
  CHECK_THROWS_AS(make_group(Family::Sp, 3), usage_error);
  CHECK_THROWS_AS(make_group(Family::O, 2), usage_error);
  CHECK_THROWS_AS(make_group(Family::SO, 2), usage_error);
  CHECK(parse_group("SO(5)") == GroupSpec{Family::SO, 5});
  CHECK(parse_group(" O(4) ").family == Family::O);
  CHECK_THROWS_AS(parse_group("XY(3)"), usage_error);
}

TEST_CASE("dominance reduction") {
  auto b2 = make_group(Family::SO, 5);
  auto r = dominance_reduce(b2, {-1, 0}, Action::Linear);
  CHECK(r.weight == Weight{1, 0});
  auto same = dominance_reduce(b2, {2, 1});
  CHECK(same.weight == Weight{2, 1});
  CHECK(same.sign == 1);
  CHECK_FALSE(same.boundary);
  // A1 with w + rho = 0
  auto sl2 = make_group(Family::SL, 2);
  CHECK(dominance_reduce(sl2, {0, 1}).boundary);
}

TEST_CASE("reduced weight is dominant and in the orbit") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (auto t : {RootType::A, RootType::B, RootType::C, RootType::D}) {
    for (int len = 2; len <= 3; ++len) {
      for (int trial = 0; trial < 40; ++trial) {
        Weight w(len);
        for (auto& x : w) x = d(rng);
        auto r = reduce_to_chamber(t, w);
        CHECK(is_dominant(t, r.weight));
        auto orbit = weyl_orbit(t, r.weight);
        CHECK(std::find(orbit.begin(), orbit.end(), w) != orbit.end());
      }
    }
  }
}

TEST_CASE("shifted reduction sign matches the alternant") {
  // Sign of w in W(D3) sending (2w+2rho) to the chamber: brute force over signed
  // permutations with an even number of sign changes.
  const RootType t = RootType::D;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    Weight v(3);
    for (auto& x : v) x = d(rng);
    auto r = reduce_to_chamber(t, v);
    if (r.boundary) continue;
    std::array<int, 3> p{0, 1, 2};
    int found = 0;
    do {
      for (int mask = 0; mask < 8; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        Weight u(3);
        for (int i = 0; i < 3; ++i) u[i] = (mask >> i & 1 ? -1 : 1) * v[p[i]];
        if (u != r.weight) continue;
        int inv = 0;
        for (int i = 0; i < 3; ++i) {
          for (int j = i + 1; j < 3; ++j) inv += p[i] > p[j];
        }
        found = inv % 2 ? -1 : 1;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(found == r.sign);
  }
}

TEST_CASE("chi involution") {
  CHECK(chi_dynkin({1, 2, 3}) == std::vector<int>{1, 3, 2});
  CHECK(chi_weight({1, 1, 1}) == Weight{1, 1, -1});
  auto so6 = make_group(Family::SO, 6);
  for (const auto& lab : enumerate_labels(so6, 4)) {
    auto c = chi_involution(lab);
    CHECK(label_validate(so6, c.data));
    CHECK(chi_involution(c) == lab);
  }
  CHECK_THROWS_AS(chi_involution(vector_label(make_group(Family::SO, 5))), usage_error);
}

TEST_CASE("label validation") {
  auto o3 = make_group(Family::O, 3);
  CHECK(label_validate(o3, {2, 1}));
  auto bad = label_validate(o3, {2, 1, 1});
  CHECK_FALSE(bad);
  CHECK(bad.violation.find("3+1") != std::string::npos);
  CHECK(label_validate(make_group(Family::SL, 2), {5}));
  CHECK_FALSE(label_validate(make_group(Family::SO, 5), {1, 2}));
  CHECK(label_validate(make_group(Family::SO, 4), {1, -1}));
  CHECK_FALSE(label_validate(make_group(Family::Sp, 4), {1, -1}));
  CHECK_THROWS_AS(parse_label(o3, "2,x"), usage_error);
}

TEST_CASE("O labels round trip through SO data") {
  for (int n = 3; n <= 7; ++n) {
    auto g = make_group(Family::O, n);
    for (const auto& lab : enumerate_labels(g, 6)) {
      OData d = o_data(lab);
      CHECK(o_label(g, d.so_weight, d.sign) == lab);
    }
  }
}

TEST_CASE("decompositions stay inside P(G)") {
  for (auto g : {make_group(Family::O, 4), make_group(Family::SO, 6), make_group(Family::Sp, 4),
                 make_group(Family::GL, 3)}) {
    auto labels = enumerate_labels(g, 2);
    for (const auto& a : labels) {
      for (const auto& b : labels) {
        for (const auto& [k, m] : tensor_decompose(a, b)) CHECK(label_validate(g, k.data));
      }
    }
  }
}

TEST_CASE("weyl dimensions") {
  CHECK(dimension(make_label(make_group(Family::SO, 5), {1, 1})) == 10);
  CHECK(dimension(make_label(make_group(Family::Sp, 4), {1, 1})) == 5);
  CHECK(dimension(make_label(make_group(Family::SL, 3), {1, 1})) == 8);
  CHECK(dimension(make_label(make_group(Family::O, 4), {1, 1})) == 6);
  CHECK(dimension(make_label(make_group(Family::O, 3), {1, 1, 1})) == 1);
}
