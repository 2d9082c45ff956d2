#include "chevlab/factorizer.hpp"
#include "doctest.h"

using namespace chevlab;

namespace {

RingElement el(const Ring& R, std::int64_t v) { return RingElement::from_int(R, v); }

}  // namespace

TEST_CASE("symbolic main lemma, all cases") {
  for (auto c : {MainLemmaCase::A2, MainLemmaCase::C2Long, MainLemmaCase::C2Short, MainLemmaCase::G2Short}) {
    CAPTURE(to_string(c));
    auto s = symbolic_main_lemma(c);
    auto chk = check_factorization(s.factorization, s.I, s.J);
    CHECK(chk.product_equal);
    CHECK(chk.certificates_valid);
    CHECK(chk.factor_count >= 1);
    CHECK(chk.factor_count <= 3);
  }
}

TEST_CASE("symbolic main lemma, every root instance") {
  for (auto t : {SystemType::A2, SystemType::C2, SystemType::G2})
    for (const auto& [c, a] : main_lemma_instances(t)) {
      CAPTURE(a.name());
      auto s = symbolic_main_lemma(t, c, a);
      CHECK(check_factorization(s.factorization, s.I, s.J).ok());
    }
}

TEST_CASE("main lemma edge cases") {
  Ring R = Ring::parse("Z/9");
  Ideal I = Ideal::parse(R, "3"), J = Ideal::parse(R, "3");
  auto f = main_lemma_word(SystemType::A2, MainLemmaCase::A2, Root{1, 1}, el(R, 0), el(R, 3), el(R, 1), I, J);
  CHECK(f.factors.empty());
  CHECK(check_factorization(f, I, J).ok());
  // a simple root of A2 is not a sum of two roots in the required way
  bool mismatch = false;
  try {
    main_lemma_word(SystemType::C2, MainLemmaCase::C2Long, Root{1, 0}, el(R, 3), el(R, 3), el(R, 1), I, J);
  } catch (const Error& e) {
    mismatch = e.code() == ErrorCode::CaseMismatch;
  }
  CHECK(mismatch);
}

TEST_CASE("g2 short roots over Z/9, exhaustive over I=J=(3)") {
  Ring R = Ring::parse("Z/9");
  Ideal I = Ideal::parse(R, "3"), J = Ideal::parse(R, "3");
  const auto& rs = RootSystem::get(SystemType::G2);
  std::size_t n = 0;
  for (const auto& a : rs.roots()) {
    if (rs.is_long(a)) continue;
    for (const auto& xi : enumerate_ideal(I))
      for (const auto& zeta : enumerate_ideal(J))
        for (const auto& eta : enumerate_elements(R)) {
          auto f = main_lemma_word(SystemType::G2, MainLemmaCase::G2Short, a, xi, zeta, eta, I, J);
          CHECK(check_factorization(f, I, J).ok());
          ++n;
        }
  }
  CHECK(n == 486);
}

TEST_CASE("unit decompositions") {
  auto one = [](const std::vector<std::pair<RingElement, RingElement>>& d) {
    RingElement s = el(d.front().first.ring(), 0);
    for (const auto& [t, r] : d) s = s + r * (t * t - t);
    return s.is_one();
  };
  auto z9 = unit_decompose(Ring::parse("Z/9"));
  REQUIRE(z9.size() == 1);
  CHECK(z9[0].first.to_string() == "2");
  CHECK(z9[0].second.to_string() == "5");
  CHECK(one(z9));
  auto z27 = unit_decompose(Ring::parse("Z/27"));
  REQUIRE(z27.size() == 1);
  CHECK(z27[0].first.to_string() == "2");
  CHECK(z27[0].second.to_string() == "14");
  CHECK(one(z27));
  CHECK(one(unit_decompose(Ring::parse("Z/15"))));
  CHECK_THROWS_AS(unit_decompose(Ring::parse("Z/4")), Error);
  CHECK_THROWS_AS(unit_decompose(Ring::parse("Z/6")), Error);
}

TEST_CASE("long root decomposition, C2 symbolic") {
  Ring P = Ring::parse("Z[xi]");
  Ideal I = Ideal::parse(P, "xi");
  auto xi = RingElement::parse(P, "xi");
  const auto& rs = RootSystem::get(SystemType::C2);
  for (const auto& b : rs.roots()) {
    if (rs.is_long(b)) continue;
    auto d = long_root_decomposition(SystemType::C2, b, xi, I);
    CAPTURE(b.name());
    CHECK(check_long_root(SystemType::C2, d, xi, I).ok());
    CHECK(d.term_lengths.at(0) <= 3);
  }
}

TEST_CASE("long root decomposition, G2 over Z/9") {
  Ring R = Ring::parse("Z/9");
  Ideal I = Ideal::parse(R, "3");
  const auto& rs = RootSystem::get(SystemType::G2);
  for (const auto& b : rs.roots()) {
    if (rs.is_long(b)) continue;
    for (const auto& xi : enumerate_ideal(I)) {
      auto d = long_root_decomposition(SystemType::G2, b, xi, I);
      CAPTURE(b.name());
      CHECK(check_long_root(SystemType::G2, d, xi, I).ok());
      for (auto n : d.term_lengths) CHECK(n <= 6);
    }
  }
}

TEST_CASE("long root errors") {
  Ring R = Ring::parse("Z/4");
  Ideal I = Ideal::parse(R, "2");
  CHECK_THROWS_AS(long_root_decomposition(SystemType::A2, Root{1, 0}, el(R, 2), I), Error);
  CHECK_THROWS_AS(long_root_decomposition(SystemType::C2, Root{0, 1}, el(R, 2), I), Error);
  try {
    long_root_decomposition(SystemType::G2, Root{1, 0}, el(R, 2), I);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResidueFieldF2);
  }
}

TEST_CASE("relative generator count") {
  Ring R = Ring::parse("Z/8");
  auto g = relative_generators(SystemType::A2, Ideal::parse(R, "2"));
  CHECK(g.size() == 192);  // 6 roots * 4 * 8
}

TEST_CASE("mixed generators and condition (*)") {
  Ring R = Ring::parse("Z/9");
  auto m = mixed_commutator_generators(SystemType::C2, Ideal::parse(R, "3"), Ideal::parse(R, "3"));
  CHECK(m.generators.size() == 3 * 8 * 3 * 3 * 9);
  CHECK(m.condition.holds());
  CHECK(m.warning.empty());
  Ring R4 = Ring::parse("Z/4");
  auto m4 = mixed_commutator_generators(SystemType::G2, Ideal::parse(R4, "2"), Ideal::parse(R4, "2"));
  CHECK(!m4.condition.holds());
  CHECK(!m4.warning.empty());
  CHECK(condition_star(SystemType::A2, R4).holds());
}

TEST_CASE("levi commutators stay at level IJ") {
  struct Run {
    SystemType t;
    const char* ring;
    const char* i;
    const char* j;
  };
  for (auto run : {Run{SystemType::A2, "Z/8", "2", "4"}, Run{SystemType::C2, "Z/27", "3", "9"},
                   Run{SystemType::G2, "Z/27", "3", "3"}}) {
    Ring R = Ring::parse(run.ring);
    Ideal I = Ideal::parse(R, run.i), J = Ideal::parse(R, run.j);
    for (int r : {1, 2})
      for (bool minus : {false, true}) {
        auto rep = levi_commutator_check(ParabolicData::make(run.t, r), I, J, 60, minus, 7);
        CHECK(rep.violations == 0);
      }
  }
}

TEST_CASE("levi check is deterministic") {
  Ring R = Ring::parse("Z/8");
  Ideal I = Ideal::parse(R, "2");
  auto P = ParabolicData::make(SystemType::A2, 1);
  auto a = levi_commutator_check(P, I, I, 30, false, 11);
  auto b = levi_commutator_check(P, I, I, 30, false, 11);
  CHECK(a.violations == b.violations);
  CHECK(P.u_roots.size() == 2);
  CHECK(P.levi_roots.size() == 2);
}
