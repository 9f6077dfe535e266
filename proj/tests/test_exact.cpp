#include <catch_amalgamated.hpp>

#include <random>

#include "repring/exact.hpp"

using namespace repring;

namespace {

MLaurent random_laurent(std::mt19937& rng, const MLaurent& like) {
  std::uniform_int_distribution<int> ex(-2, 2), co(-5, 5), n(0, 4);
  MLaurent f(like.variable_list());
  int terms = n(rng);
  for (int k = 0; k < terms; ++k) {
    Exponents e(like.nvars());
    for (auto& x : e) x = ex(rng);
    f.add_term(e, co(rng));
  }
  return f;
}

// Naive convolution over a plain map, independent of MLaurent's product.
std::map<Exponents, Integer> convolve(const MLaurent& a, const MLaurent& b) {
  std::map<Exponents, Integer> out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("laurent product of z + 1/z with itself") {
  MLaurent like(std::vector<std::string>{"z"});
  auto z = MLaurent::variable(like.variable_list(), 0);
  auto zi = MLaurent::variable(like.variable_list(), 0, -1);
  auto s = z + zi;
  CHECK((s * s).to_string() == "z^2 + 2 + z^-2");
  CHECK(s * MLaurent::constant(like, 1) == s);
}

TEST_CASE("laurent product matches naive convolution") {
  MLaurent like(numbered_variables("z", 2));
  auto v = like.variable_list();
  auto a = MLaurent::variable(v, 0) - MLaurent::variable(v, 0, -1);
  auto b = MLaurent::variable(v, 1) - MLaurent::variable(v, 1, -1);
  auto ab = a * b;
  auto sq = ab * ab;
  auto naive = convolve(ab, ab);
  REQUIRE(naive.size() == sq.size());
  for (const auto& [e, c] : naive) CHECK(sq.coefficient(e) == c);
}

TEST_CASE("variable list mismatch is a usage error") {
  MLaurent a = MLaurent::constant(std::vector<std::string>{"x"}, 1);
  MLaurent b = MLaurent::constant(std::vector<std::string>{"y"}, 1);
  CHECK_THROWS_AS(a * b, usage_error);
}

TEST_CASE("ring laws and evaluation homomorphism on random inputs") {
  std::mt19937 rng(7);
  MLaurent like(numbered_variables("z", 3));
  std::vector<Rational> pt{Rational(2), Rational(-1, 3), Rational(5, 2)};
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_laurent(rng, like), g = random_laurent(rng, like), h = random_laurent(rng, like);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
    CHECK((f + g).eval(pt) == f.eval(pt) + g.eval(pt));
  }
}

TEST_CASE("evaluation") {
  MLaurent like(std::vector<std::string>{"z"});
  auto f = MLaurent::variable(like.variable_list(), 0) + MLaurent::variable(like.variable_list(), 0, -1);
  CHECK(mlaurent_eval(f, {{"z", Rational(2)}}) == Rational(5, 2));
  CHECK(MLaurent::constant(like, 7).eval(std::vector<Rational>{Rational(3)}) == 7);
  CHECK_THROWS_AS(f.eval(std::vector<Rational>{Rational(0)}), usage_error);

  MLaurent two(numbered_variables("z", 2));
  auto v = two.variable_list();
  std::vector<MLaurent> alpha{MLaurent::variable(v, 0), MLaurent::variable(v, 0, -1), MLaurent::variable(v, 1),
                              MLaurent::variable(v, 1, -1)};
  auto e2 = elementary_symmetric(alpha, two, 2);
  Rational x = 2, y = 3;
  CHECK(e2.eval(std::vector<Rational>{x, y}) == 2 + (x + 1 / x) * (y + 1 / y));
}

TEST_CASE("text form is deg-lex with caret exponents") {
  MLaurent like(numbered_variables("z", 2));
  MLaurent f(like.variable_list());
  f.add_term({-1, 3}, 2);
  f.add_term({0, 0}, -1);
  f.add_term({1, 0}, 1);
  CHECK(f.to_string() == "2*z1^-1*z2^3 + z1 - 1");
}

TEST_CASE("q scalars") {
  QScalar q = QScalar::q_power(1), h = QScalar::half_power(1), hi = QScalar::half_power(-1);
  CHECK((h - hi).to_string() == "q^(1/2) - q^(-1/2)");
  CHECK(((h - hi) * (h - hi)).to_string() == "q - 2 + q^-1");
  CHECK((h * h) == q);
  CHECK(QScalar::half_power(3).to_string() == "q^(3/2)");
  CHECK((q - QScalar(1)).at_one() == 0);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> ex(-4, 4), co(-3, 3);
  for (int t = 0; t < 30; ++t) {
    QScalar a, b, c;
    for (int k = 0; k < 3; ++k) {
      a.add(ex(rng), co(rng));
      b.add(ex(rng), co(rng));
      c.add(ex(rng), co(rng));
    }
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("generating function expansion") {
  using V = std::vector<Integer>;
  CHECK(gf_expand(RationalGF{{1}, {1, 2}}, 6) == V{1, 1, 2, 2, 3, 3, 4});
  CHECK(gf_expand(RationalGF{{1}, {1}}, 3) == V{1, 1, 1, 1});
  CHECK(gf_expand(RationalGF{{1, 0, 1, 1, -1}, {1, 2}}, 3) == V{1, 1, 3, 4});
  CHECK_THROWS_AS(gf_expand(RationalGF{{1}, {1}}, -1), usage_error);
}

TEST_CASE("expansion satisfies the denominator recurrence") {
  RationalGF g{{1, 2, 0, -1}, {1, 3, 4}};
  const int rmax = 30;
  auto c = gf_expand(g, rmax);
  UPoly den{1};
  for (int k : g.denominator) den = upoly_mul(den, one_minus_t(k));
  for (int n = static_cast<int>(g.numerator.size()); n <= rmax; ++n) {
    Integer s = 0;
    for (std::size_t i = 0; i < den.size() && static_cast<int>(i) <= n; ++i) s += den[i] * c[n - i];
    CHECK(s == 0);
  }
}

TEST_CASE("rational linear algebra") {
  RMatrix m{{1, 2}, {2, 4}};
  CHECK(rational_rank(m) == 1);
  RMatrix a{{2, 1}, {1, 1}};
  CHECK(rational_det(a) == 1);
  CHECK(rational_mul(a, rational_inverse(a)) == rational_identity(2));
}

TEST_CASE("laurent determinant and pfaffian") {
  MLaurent like(std::vector<std::string>{"z"});
  auto z = MLaurent::variable(like.variable_list(), 0);
  LMatrix m = laurent_matrix(2, like);
  m[0][0] = z;
  m[1][1] = MLaurent::variable(like.variable_list(), 0, -1);
  CHECK(laurent_det(m, like) == MLaurent::constant(like, 1));
  LMatrix s = laurent_matrix(4, like);
  // Pf of the standard 4x4 skew form with entries a12, a34 = z, 1 is z
  s[0][1] = z;
  s[1][0] = -z;
  s[2][3] = MLaurent::constant(like, 1);
  s[3][2] = MLaurent::constant(like, -1);
  CHECK(laurent_pfaffian(s, like) == z);
  CHECK(laurent_pfaffian(s, like).pow(2) == laurent_det(s, like));
}
