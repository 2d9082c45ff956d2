#include "chevlab/subgroupenum.hpp"
#include "doctest.h"

using namespace chevlab;

namespace {

Ideal id(const Ring& R, const char* s) { return Ideal::parse(R, s); }

}  // namespace

TEST_CASE("trivial closures") {
  Ambient amb(SystemType::A2, Ring::parse("Z/8"));
  auto H = closure(amb, std::vector<ModElem>{}, 10);
  CHECK(H.size() == 1);
  auto K = commutator_subgroup(amb, evaluate_all(amb, elementary_generators(SystemType::A2, id(amb.ring(), "2"))),
                               {}, 10);
  CHECK(K.size() == 1);
  auto N = normal_closure(amb, {}, {amb.identity()}, 10);
  CHECK(N.size() == 1);
}

TEST_CASE("inverse and membership arithmetic") {
  for (auto t : {SystemType::A2, SystemType::C2}) {
    Ring R = Ring::parse("Z/9");
    Ambient amb(t, R);
    auto gs = evaluate_all(amb, relative_generators(t, id(R, "3")));
    for (std::size_t k = 0; k + 1 < gs.size(); k += 7) {
      ModElem g = amb.mul(gs[k], gs[k + 1]);
      CHECK(amb.mul(g, amb.inverse(g)) == amb.identity());
      CHECK(amb.in_group(g));
      CHECK(amb.congruent_identity(g, 3));
    }
  }
}

TEST_CASE("G2 is rejected") {
  CHECK_THROWS_AS(Ambient(SystemType::G2, Ring::parse("Z/9")), Error);
}

TEST_CASE("A2 over Z/8: level-2 kernel has 2^16 elements") {
  Ring R = Ring::parse("Z/8");
  Ambient amb(SystemType::A2, R);
  auto G = enumerate_congruence_subgroup(amb, id(R, "2"), Bounds{});
  CHECK(G.size() == 65536);
  // oracle: every candidate I + 2M with det 1, counted independently
  std::size_t count = 0;
  for (std::uint32_t m = 0; m < (1u << 18); ++m) {
    ModElem g{};
    for (std::size_t i = 0; i < 9; ++i) g[i] = static_cast<std::uint8_t>((((m >> (2 * i)) & 3) * 2 + (i % 4 == 0)) % 8);
    count += amb.in_group(g);
  }
  CHECK(count == 65536);
  auto E = closure(amb, elementary_generators(SystemType::A2, id(R, "2")), 1 << 17);
  CHECK(E.size() <= 65536);
  CHECK(E.subset_of(G));
  CHECK(closure_audit(E));
}

TEST_CASE("relative subgroup is the normal closure (A2, Z/8)") {
  Ring R = Ring::parse("Z/8");
  Ambient amb(SystemType::A2, R);
  auto seeds = evaluate_all(amb, elementary_generators(SystemType::A2, id(R, "2")));
  auto conj = evaluate_all(amb, elementary_generators(SystemType::A2, Ideal::unit(R)));
  auto N = normal_closure(amb, seeds, conj, 1 << 17);
  auto Z = closure(amb, relative_generators(SystemType::A2, id(R, "2")), 1 << 17);
  CHECK(N.same_set(Z));
}

TEST_CASE("commutator subgroups at small level") {
  Ring R9 = Ring::parse("Z/9");
  Ambient c2(SystemType::C2, R9);
  auto e3 = evaluate_all(c2, elementary_generators(SystemType::C2, id(R9, "3")));
  CHECK(commutator_subgroup(c2, e3, e3, 100).size() == 1);

  Ring R8 = Ring::parse("Z/8");
  Ambient a2(SystemType::A2, R8);
  auto e2 = evaluate_all(a2, elementary_generators(SystemType::A2, id(R8, "2")));
  auto H = commutator_subgroup(a2, e2, e2, 1 << 17);
  CHECK(H.size() > 1);
  for (const auto& e : H.elements()) CHECK(a2.congruent_identity(e, 4));
}

TEST_CASE("C2 over Z/27: relative closure stays at level 3") {
  Ring R = Ring::parse("Z/27");
  Ambient amb(SystemType::C2, R);
  auto G = enumerate_congruence_subgroup(amb, id(R, "9"), Bounds{});
  CHECK(G.size() == 59049);
  auto E = closure(amb, elementary_generators(SystemType::C2, id(R, "9")), 100000);
  CHECK(E.subset_of(G));
}

TEST_CASE("centres and full congruence subgroups") {
  Ring R8 = Ring::parse("Z/8");
  Ambient a2(SystemType::A2, R8);
  std::size_t order = 0;
  auto z = center_of_quotient(a2, id(R8, "2"), 1000, &order);
  CHECK(order == 168);
  CHECK(z.size() == 1);
  CHECK(enumerate_full_congruence(a2, id(R8, "2"), Bounds{}).size() == 65536);

  Ring R9 = Ring::parse("Z/9");
  Ambient c2(SystemType::C2, R9);
  auto zc = center_of_quotient(c2, id(R9, "3"), 100000, &order);
  CHECK(order == 51840);
  CHECK(zc.size() == 2);
  CHECK(enumerate_congruence_subgroup(c2, id(R9, "3"), Bounds{}).size() == 59049);
  CHECK(enumerate_full_congruence(c2, id(R9, "3"), Bounds{}).size() == 118098);
}

TEST_CASE("bounds are reported, not crashed through") {
  Ring R = Ring::parse("Z/8");
  Ambient amb(SystemType::A2, R);
  try {
    closure(amb, elementary_generators(SystemType::A2, id(R, "2")), 100);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
  CHECK_THROWS_AS(enumerate_congruence_subgroup(amb, Ideal::unit(R), Bounds{}), Error);
}

TEST_CASE("theorem checks at small scale") {
  Ring R = Ring::parse("Z/9");
  Ideal I = id(R, "3");
  for (auto st : {Statement::T1, Statement::O1, Statement::O2}) {
    auto r = verify_theorem(st, SystemType::C2, I, I, Bounds{});
    CAPTURE(to_string(st));
    CHECK(r.verdict);
  }
  auto t1 = verify_theorem(Statement::T1, SystemType::A2, Ideal::zero(R), I, Bounds{});
  CHECK(t1.verdict);
  CHECK(t1.cardinalities.front().second == 1);
  CHECK_THROWS_AS(verify_theorem(Statement::T1, SystemType::G2, I, I, Bounds{}), Error);
  CHECK(parse_statement("O2") == Statement::O2);
}
