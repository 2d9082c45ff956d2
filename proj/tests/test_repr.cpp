#include <random>

#include "chevlab/repr.hpp"
#include "doctest.h"

using namespace chevlab;

namespace {

const SystemType kTypes[] = {SystemType::A2, SystemType::C2, SystemType::G2};

}  // namespace

TEST_CASE("dimensions and blocks") {
  CHECK(Representation::standard(SystemType::A2)->dim() == 3);
  CHECK(Representation::standard(SystemType::C2)->dim() == 4);
  auto g2 = Representation::standard(SystemType::G2);
  CHECK(g2->dim() == 21);
  CHECK(g2->blocks() == std::vector<std::size_t>{7, 14});
}

TEST_CASE("x(a1) in SL3 is the elementary transvection") {
  auto rep = Representation::standard(SystemType::A2);
  Ring P = Ring::parse("Z[xi]");
  auto g = x(rep, {1, 0}, RingElement::parse(P, "xi"));
  Matrix want = Matrix::identity(P, 3);
  want.at(0, 1) = P.parse_value("xi");
  CHECK(g.matrix() == want);
  CHECK(x(rep, {1, 0}, RingElement::from_int(P, 0)).is_identity());
}

TEST_CASE("additivity and inverses hold symbolically") {
  Ring P = Ring::parse("Z[xi,zeta]");
  auto xi = RingElement::parse(P, "xi"), zeta = RingElement::parse(P, "zeta");
  for (auto t : kTypes) {
    auto rep = Representation::standard(t);
    for (const auto& a : rep->system().roots()) {
      CHECK(x(rep, a, xi) * x(rep, a, zeta) == x(rep, a, xi + zeta));
      CHECK((x(rep, a, xi) * x(rep, a, -xi)).is_identity());
    }
  }
}

TEST_CASE("root vectors sit in their weight spaces") {
  for (auto t : kTypes) {
    auto rep = Representation::standard(t);
    for (const auto& a : rep->system().roots()) {
      const IntMatrix& e = rep->nilpotent(a);
      for (std::size_t i = 0; i < rep->dim(); ++i)
        for (std::size_t j = 0; j < rep->dim(); ++j)
          if (e(i, j)) CHECK(rep->entry_root(i, j) == a);
    }
  }
}

TEST_CASE("G2 divided powers reach the cube") {
  auto rep = Representation::standard(SystemType::G2);
  // short roots act with nilpotency order 4 on the adjoint block (strings of length 4)
  CHECK(rep->divided_powers({1, 0}).size() == 4);
  CHECK(rep->divided_powers({3, 2}).size() == 3);
}

TEST_CASE("C2 generators preserve the symplectic form") {
  auto rep = Representation::standard(SystemType::C2);
  Ring P = Ring::parse("Z[xi]");
  Matrix J = Matrix::from_int(P, rep->symplectic_form());
  for (const auto& a : rep->system().roots()) {
    Matrix g = x(rep, a, RingElement::parse(P, "xi")).matrix();
    Matrix gt(P, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) gt.at(i, j) = g.at(j, i);
    CHECK(gt * J * g == J);
  }
}

TEST_CASE("z generators") {
  Ring P = Ring::parse("Z[xi,eta]");
  auto xi = RingElement::parse(P, "xi"), eta = RingElement::parse(P, "eta");
  auto zero = RingElement::from_int(P, 0);
  Ideal X = Ideal::parse(P, "xi");
  for (auto t : kTypes) {
    auto rep = Representation::standard(t);
    for (const auto& a : rep->system().roots()) {
      CHECK(z(rep, a, xi, zero) == x(rep, a, xi));
      CHECK(z(rep, a, zero, eta).is_identity());
      CHECK(congruence_level_test(z(rep, a, xi, eta), X));
    }
  }
}

TEST_CASE("reduction and congruence tests over Z/8") {
  auto rep = Representation::standard(SystemType::A2);
  Ring R = Ring::integers_mod(8);
  Ideal I = Ideal::parse(R, "2");
  auto two = RingElement::from_int(R, 2), one = RingElement::from_int(R, 1);
  CHECK(reduce_mod(x(rep, {1, 0}, two), I).is_identity());
  CHECK(congruence_level_test(x(rep, {1, 0}, two), I));
  CHECK_FALSE(congruence_level_test(x(rep, {1, 0}, one), I));
  CHECK_FALSE(central_mod_test(x(rep, {1, 0}, one), I));
  CHECK(central_mod_test(x(rep, {1, 1}, two), I));

  Ring R27 = Ring::integers_mod(27);
  auto c2 = Representation::standard(SystemType::C2);
  CHECK(reduce_mod(x(c2, {2, 1}, RingElement::from_int(R27, 3)), Ideal::parse(R27, "3")).is_identity());
}

TEST_CASE("reduction is multiplicative and level is a subgroup property") {
  Ring R = Ring::integers_mod(8);
  Ideal I = Ideal::parse(R, "2");
  std::mt19937_64 rng(11);
  for (auto t : {SystemType::A2, SystemType::C2}) {
    auto rep = Representation::standard(t);
    const auto& roots = rep->system().roots();
    auto random_word = [&](bool level) {
      GroupElement g = GroupElement::identity(rep, R);
      for (int k = 0; k < 5; ++k) {
        std::int64_t c = static_cast<std::int64_t>(rng() % 8);
        if (level) c = 2 * (c % 4);
        g = g * x(rep, roots[rng() % roots.size()], RingElement::from_int(R, c));
      }
      return g;
    };
    for (int trial = 0; trial < 100; ++trial) {
      auto g = random_word(false), h = random_word(false);
      CHECK(reduce_mod(g * h, I) == reduce_mod(g, I) * reduce_mod(h, I));
      auto u = random_word(true), v = random_word(true);
      CHECK(congruence_level_test(u, I));
      CHECK(congruence_level_test(u * v, I));
      CHECK(congruence_level_test(g, I) == reduce_mod(g, I).is_identity());
    }
  }
}

TEST_CASE("unipotent coordinates recover a product") {
  auto rep = Representation::standard(SystemType::G2);
  Ring P = Ring::parse("Z[s,t]");
  std::vector<Root> roots{{1, 1}, {2, 1}, {3, 1}, {3, 2}};
  std::vector<std::string> coeffs{"s", "s*t+2", "-t^2", "3*s"};
  Matrix m = Matrix::identity(P, rep->dim());
  for (std::size_t k = 0; k < roots.size(); ++k) m = m * rep->x(roots[k], P.parse_value(coeffs[k]), P);
  auto c = unipotent_coordinates(*rep, m, roots);
  for (std::size_t k = 0; k < roots.size(); ++k) CHECK(P.format(c[k]) == P.format(P.parse_value(coeffs[k])));
  Matrix bad = m * rep->x({-1, 0}, P.parse_value("s"), P);
  CHECK_THROWS_AS(unipotent_coordinates(*rep, bad, roots), Error);
}

TEST_CASE("reparametrization flips one-parameter subgroups") {
  auto rep = Representation::standard(SystemType::C2);
  std::vector<int> eps(rep->system().size(), 1);
  eps[rep->system().index({1, 1})] = -1;
  auto flipped = rep->reparametrized(eps);
  Ring R = Ring::integers_mod(9);
  auto t = RingElement::from_int(R, 4);
  CHECK(x(flipped, {1, 1}, t) == x(rep, {1, 1}, -t));
  CHECK(x(flipped, {1, 0}, t) == x(rep, {1, 0}, t));
}
