#include <catch_amalgamated.hpp>

#include "repring/coc_ring.hpp"

using namespace repring;

namespace {

CocElement b(const GroupSpec& g, std::vector<int> data) { return CocElement::basis(make_label(g, std::move(data))); }

std::vector<GroupSpec> round_trip_groups() {
  std::vector<GroupSpec> gs;
  for (int n = 2; n <= 4; ++n) gs.push_back(make_group(Family::SL, n));
  gs.push_back(make_group(Family::GL, 2));
  gs.push_back(make_group(Family::GL, 3));
  for (int n : {4, 6}) gs.push_back(make_group(Family::Sp, n));
  for (int n : {4, 5, 6, 7}) gs.push_back(make_group(Family::SO, n));
  for (int n = 3; n <= 6; ++n) gs.push_back(make_group(Family::O, n));
  return gs;
}

}  // namespace

TEST_CASE("products in the trace basis") {
  auto sl2 = make_group(Family::SL, 2);
  CHECK(coc_mul(b(sl2, {1}), b(sl2, {1})) == b(sl2, {2}) + b(sl2, {0}));
  auto o3 = make_group(Family::O, 3);
  CHECK(coc_mul(b(o3, {1}), b(o3, {1})) == b(o3, {}) + b(o3, {1, 1}) + b(o3, {2}));
  auto x = b(o3, {2, 1}) + Integer(3) * b(o3, {1, 1, 1});
  CHECK(coc_mul(x, CocElement::unit(o3)) == x);
  CHECK_THROWS_AS(coc_mul(x, CocElement::unit(sl2)), usage_error);
}

TEST_CASE("ring axioms and faithfulness of the torus model") {
  for (auto g : {make_group(Family::SO, 6), make_group(Family::O, 4), make_group(Family::O, 5),
                 make_group(Family::Sp, 4), make_group(Family::GL, 2)}) {
    auto labels = enumerate_labels(g, 2);
    for (const auto& x : labels) {
      for (const auto& y : labels) {
        auto a = CocElement::basis(x), c = CocElement::basis(y);
        auto ac = coc_mul(a, c);
        CHECK(ac == coc_mul(c, a));
        CHECK(torus_model(ac) == torus_model(a) * torus_model(c));
        for (const auto& [k, m] : ac.coords) CHECK(m > 0);
      }
    }
    auto s1 = sigma_in_basis(g, 1), s2 = sigma_in_basis(g, 2);
    CHECK(coc_mul(coc_mul(s1, s2), s1) == coc_mul(s1, coc_mul(s2, s1)));
  }
}

TEST_CASE("exterior powers in the trace basis") {
  auto sp4 = make_group(Family::Sp, 4);
  CHECK(sigma_in_basis(sp4, 2) == b(sp4, {1, 1}) + b(sp4, {0, 0}));
  for (int n = 2; n <= 5; ++n) {
    auto g = make_group(Family::SL, n);
    for (int d = 1; d < n; ++d) {
      std::vector<int> dyn(n - 1, 0);
      dyn[d - 1] = 1;
      CHECK(sigma_in_basis(g, d) == b(g, dyn));
    }
  }
  auto so5 = make_group(Family::SO, 5);
  CHECK(sigma_in_basis(so5, 2) == b(so5, {1, 1}));
  CHECK_THROWS_AS(sigma_in_basis(so5, 6), usage_error);
}

TEST_CASE("expressing basis elements in the generators") {
  auto sl2 = make_group(Family::SL, 2);
  CHECK(express_in_generators(b(sl2, {2})).to_string() == "s1^2 - 1");
  CHECK(express_in_generators(CocElement::unit(sl2)).to_string() == "1");
  auto so5 = make_group(Family::SO, 5);
  CHECK(express_in_generators(b(so5, {1, 1})).to_string() == "s2");
  auto gl2 = make_group(Family::GL, 2);
  CHECK(express_in_generators(b(gl2, {0, -1})).to_string() == "s1*s2^-1");
  auto o4 = make_group(Family::O, 4);
  CHECK(express_in_generators(b(o4, {1, 1, 1})).to_string() == "s1*s4");
}

TEST_CASE("generation round trip") {
  for (const auto& g : round_trip_groups()) {
    for (const auto& lab : enumerate_labels(g, 4)) {
      auto x = CocElement::basis(lab);
      CHECK(evaluate_generators(express_in_generators(x), g) == x);
    }
  }
}

TEST_CASE("relations") {
  for (int n : {5, 7}) CHECK(verify_relation(make_group(Family::O, n), "iii").holds);
  for (int n : {4, 6}) {
    auto g = make_group(Family::O, n);
    for (const auto& id : relation_ids(g)) CHECK(verify_relation(g, id).holds);
  }
  for (int l : {2, 3, 4}) {
    auto g = make_group(Family::SO, 2 * l);
    CHECK(verify_relation(g, "vi").holds);
    CHECK(verify_relation(g, "vi.appendix").holds);
  }
  CHECK_THROWS_AS(verify_relation(make_group(Family::Sp, 4), "vi"), usage_error);
}

TEST_CASE("SO(4) relation by hand") {
  // (p^2-4)(q^2-4) = (4+pq)^2 - 4(p+q)^2 with p, q the two A1 variables
  auto g = make_group(Family::SO, 4);
  MLaurent like(torus_variables(g));
  auto v = like.variable_list();
  auto p = MLaurent::variable(v, 0) + MLaurent::variable(v, 0, -1);
  auto q = MLaurent::variable(v, 1) + MLaurent::variable(v, 1, -1);
  auto four = MLaurent::constant(like, 4);
  CHECK((p * p - four) * (q * q - four) == (four + p * q).pow(2) - Integer(4) * (p + q).pow(2));
  auto [s0, s1] = so2l_halfexterior(2);
  CHECK((s0 - s1).pow(2) == (p * p - four) * (q * q - four));
}

TEST_CASE("Pfaffian element") {
  for (int l : {2, 3}) {
    auto g = make_group(Family::SO, 2 * l);
    MLaurent like(torus_variables(g));
    MLaurent want = MLaurent::constant(like, 1);
    for (int i = 0; i < l; ++i) {
      want *= MLaurent::variable(like.variable_list(), i, -1) - MLaurent::variable(like.variable_list(), i);
    }
    auto pf = pfaffian_diff(l);
    CHECK(pf == want);
    auto [s0, s1] = so2l_halfexterior(l);
    CHECK((pf == s0 - s1 || pf == s1 - s0));
    CHECK(pfaffian_identity_holds(l));
  }
}

TEST_CASE("algebraic independence") {
  CHECK(independence_check(make_group(Family::SL, 3), 4).independent);
  auto sp4 = make_group(Family::Sp, 4);
  std::vector<BasisMonomial> one_gen{{"s1", 1, exterior_class_function(sp4, 1)}};
  CHECK(independence_check(sp4, one_gen).independent);
  auto rep = independence_check(make_group(Family::O, 4), 4);
  CHECK(rep.independent);
  CHECK(rep.monomials == 10);
  for (auto g : {make_group(Family::SO, 6), make_group(Family::O, 5), make_group(Family::O, 6)}) {
    CHECK(independence_check(g, 6).independent);
  }
  // a dependent set is detected, including by the exact fallback
  auto o4 = make_group(Family::O, 4);
  std::vector<BasisMonomial> dep{{"s2", 2, exterior_class_function(o4, 2)},
                                 {"s2*s4", 6, exterior_class_function(o4, 2) * exterior_class_function(o4, 4)}};
  auto d = independence_check(o4, dep);
  CHECK_FALSE(d.independent);
  CHECK(d.exact_fallback);
}
