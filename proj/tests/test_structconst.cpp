#include <cstdlib>

#include "chevlab/structconst.hpp"
#include "doctest.h"

using namespace chevlab;

namespace {

const StructureConstantTable& table(SystemType t) {
  static const StructureConstantTable a2 = compute_table(Representation::standard(SystemType::A2));
  static const StructureConstantTable c2 = compute_table(Representation::standard(SystemType::C2));
  static const StructureConstantTable g2 = compute_table(Representation::standard(SystemType::G2));
  return t == SystemType::A2 ? a2 : t == SystemType::C2 ? c2 : g2;
}

std::vector<std::int64_t> values(const std::vector<StructureConstant>& cs) {
  std::vector<std::int64_t> out;
  for (const auto& c : cs) out.push_back(c.n);
  return out;
}

}  // namespace

TEST_CASE("steinberg suites pass") {
  struct Want {
    SystemType t;
    std::size_t add, pairs;
  };
  for (auto w : {Want{SystemType::A2, 6, 24}, Want{SystemType::C2, 8, 48}, Want{SystemType::G2, 12, 120}}) {
    auto rep = Representation::standard(w.t);
    auto report = verify_steinberg(rep);
    CHECK(report.additivity.size() == w.add);
    CHECK(report.commutators.size() == w.pairs);
    CHECK(report.all_pass());
  }
}

TEST_CASE("constant magnitudes") {
  for (const auto& c : table(SystemType::A2).entries()) CHECK(std::abs(c.n) == 1);
  for (const auto& c : table(SystemType::C2).entries()) CHECK((std::abs(c.n) == 1 || std::abs(c.n) == 2));
  for (const auto& c : table(SystemType::G2).entries()) CHECK((std::abs(c.n) >= 1 && std::abs(c.n) <= 3));
  // |N_{ab11}| = p + 1 for the a-string through b
  for (auto t : {SystemType::A2, SystemType::C2, SystemType::G2}) {
    const auto& rs = RootSystem::get(t);
    for (const auto& c : table(t).entries())
      if (c.i == 1 && c.j == 1) CHECK(std::abs(c.n) == rs.root_string(c.alpha, c.beta).first + 1);
  }
}

TEST_CASE("table lookups and errors") {
  const auto& t = table(SystemType::A2);
  CHECK_THROWS_AS(t.get({1, 0}, {-1, 0}, 1, 1), Error);
  CHECK_THROWS_AS(t.get({1, 0}, {1, 1}, 1, 1), Error);
  Ring R = Ring::integers_mod(8);
  CHECK(chevalley_commutator_word(t, {1, 0}, {0, 1}, RingElement::from_int(R, 0), RingElement::from_int(R, 3)).empty());
  CHECK_THROWS_AS(
      chevalley_commutator_word(t, {1, 0}, {-1, 0}, RingElement::from_int(R, 1), RingElement::from_int(R, 1)), Error);
}

TEST_CASE("G2 constants depend on the product order") {
  const auto& rep = table(SystemType::G2).rep();
  Root beta{0, 1}, gamma{1, 0};
  auto up = pair_constants(rep, beta, gamma, ProductOrder::IncreasingHeight);
  auto down = pair_constants(rep, beta, gamma, ProductOrder::DecreasingHeight);
  // found by symbolic extraction; (i, j) = (1,1), (1,2), (1,3), (2,3) resp. reversed
  CHECK(values(up) == std::vector<std::int64_t>{-1, -1, -1, 1});
  CHECK(values(down) == std::vector<std::int64_t>{-2, -1, -1, -1});
}

TEST_CASE("normalized constants match the displayed forms") {
  auto a2 = normalize_signs(table(SystemType::A2), MainLemmaCase::A2);
  CHECK(a2.beta == Root{1, 0});
  CHECK(a2.gamma == Root{0, 1});
  CHECK(values(a2.displayed) == std::vector<std::int64_t>{1});

  for (auto c : {MainLemmaCase::C2Long, MainLemmaCase::C2Short}) {
    auto sn = normalize_signs(table(SystemType::C2), c);
    CHECK(values(sn.displayed) == std::vector<std::int64_t>{1, 1});
    CHECK(sn.order == ProductOrder::IncreasingHeight);
    // [x_b(s), x_g(t)] = x_{b+g}(st) x_{b+2g}(st^2)
    Ring P = Ring::parse("Z[s,t]");
    auto s = RingElement::parse(P, "s"), t = RingElement::parse(P, "t");
    Word w = commutator(Word::x(sn.beta, s), Word::x(sn.gamma, t));
    Word rhs = Word::x(sn.beta + sn.gamma, s * t) * Word::x(sn.beta + sn.gamma * 2, s * t * t);
    CHECK(w.evaluate(sn.rep) == rhs.evaluate(sn.rep));
  }

  auto g2 = normalize_signs(table(SystemType::G2), MainLemmaCase::G2Short);
  CHECK(g2.order == ProductOrder::DecreasingHeight);
  std::vector<std::pair<int, int>> ij;
  for (const auto& c : g2.displayed) ij.emplace_back(c.i, c.j);
  CHECK(ij == std::vector<std::pair<int, int>>{{2, 3}, {1, 3}, {1, 2}, {1, 1}});
  CHECK(values(g2.displayed) == std::vector<std::int64_t>{2, 1, 1, 1});

  // auxiliary relation [x_a(s), x_{b+2g}(t)] = x_{2b+3g}(3st)
  auto norm_table = compute_table(g2.rep);
  CHECK(norm_table.get(g2.alpha, g2.beta + g2.gamma * 2, 1, 1) == 3);
}

TEST_CASE("normalization re-verifies the steinberg relations") {
  for (auto c : {MainLemmaCase::A2, MainLemmaCase::C2Long, MainLemmaCase::C2Short, MainLemmaCase::G2Short}) {
    auto sn = normalize_signs(table(RootSystem::home_system(c)), c);
    CHECK(verify_steinberg(sn.rep).all_pass());
  }
}

TEST_CASE("every main lemma instance normalizes") {
  for (auto t : {SystemType::A2, SystemType::C2, SystemType::G2})
    for (const auto& [c, a] : main_lemma_instances(t)) CHECK_NOTHROW(normalize_signs(table(t), c, a));
}
