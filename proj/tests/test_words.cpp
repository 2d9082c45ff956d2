#include <random>

#include "chevlab/words.hpp"
#include "doctest.h"

using namespace chevlab;

namespace {

Word random_word(std::mt19937_64& rng, const Ring& R, const RootSystem& rs, int depth = 1) {
  Word w(R);
  int len = static_cast<int>(rng() % 4);
  for (int k = 0; k < len; ++k) {
    const Root& a = rs.roots()[rng() % rs.size()];
    auto c = RingElement::from_int(R, static_cast<std::int64_t>(rng() % R.modulus()));
    switch (rng() % (depth > 0 ? 4 : 2)) {
      case 0: w = w * Word::x(a, c); break;
      case 1: w = w * Word::z(a, c, RingElement::from_int(R, static_cast<std::int64_t>(rng() % 3))); break;
      case 2: w = w * Word(R, {Symbol::inverse(Symbol::x(a, c.value()))}); break;
      default: w = w * conjugate(random_word(rng, R, rs, depth - 1), random_word(rng, R, rs, depth - 1)); break;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("evaluation basics") {
  auto rep = Representation::standard(SystemType::A2);
  Ring P = Ring::parse("Z[xi,zeta]");
  auto xi = RingElement::parse(P, "xi"), zeta = RingElement::parse(P, "zeta");
  CHECK(Word(P).evaluate(rep).is_identity());
  Root a{1, 0}, b{0, 1};
  auto conj = conjugate(Word::x(a, xi), Word::x(b, zeta)).evaluate(rep);
  CHECK(conj == x(rep, b, zeta) * x(rep, a, xi) * x(rep, b, -zeta));
  auto opp = commutator(Word::x(a, xi), Word::x(-a, zeta)).evaluate(rep);
  CHECK_FALSE(opp.is_identity());
  // not a product over roots: the (1,1) entry carries a torus part
  CHECK(opp.matrix().at(0, 0) != P.one());
}

TEST_CASE("serialization round-trips") {
  Ring P = Ring::parse("Z[xi,zeta,eta]");
  const char* text = "(conj (x a1 xi) (z a2 zeta eta))";
  Word w = Word::parse(P, text);
  CHECK(w.to_string() == text);
  CHECK(Word(P).to_string() == "(word)");
  CHECK(Word::parse(P, "(word)").empty());
  std::string nested = "(word (x -a1-a2 -xi*zeta^2+3*eta) (inv (z 3a1+2a2 xi 1)) (conj (word) (word (x a1 1) (x a2 2))))";
  CHECK(Word::parse(P, nested).to_string() == nested);
  CHECK_THROWS_AS(Word::parse(P, "(y a1 xi)"), Error);
  CHECK_THROWS_AS(Word::parse(P, "(x a1 xi"), Error);

  std::mt19937_64 rng(3);
  Ring R = Ring::integers_mod(8);
  const auto& rs = RootSystem::get(SystemType::G2);
  for (int k = 0; k < 200; ++k) {
    Word u = random_word(rng, R, rs, 2);
    CHECK(Word::parse(R, u.to_string()) == u);
  }
}

TEST_CASE("evaluate is a homomorphism and reduction preserves value") {
  Ring R = Ring::integers_mod(8);
  std::mt19937_64 rng(5);
  for (auto t : {SystemType::A2, SystemType::C2}) {
    auto rep = Representation::standard(t);
    for (int k = 0; k < 100; ++k) {
      Word u = random_word(rng, R, rep->system()), v = random_word(rng, R, rep->system());
      CHECK((u * v).evaluate(rep) == u.evaluate(rep) * v.evaluate(rep));
      CHECK((u * v).reduced().evaluate(rep) == (u * v).evaluate(rep));
      CHECK((u * u.inverse()).evaluate(rep).is_identity());
      CHECK((u * u.inverse()).reduced().empty());
      CHECK(commutator(u, Word(R)).reduced().empty());
    }
  }
}

TEST_CASE("commutator identities") {
  Ring R = Ring::integers_mod(8);
  std::mt19937_64 rng(9);
  auto rep = Representation::standard(SystemType::C2);
  for (int k = 0; k < 100; ++k) {
    Word a = random_word(rng, R, rep->system()), b = random_word(rng, R, rep->system()),
         c = random_word(rng, R, rep->system());
    // [x, yz] = [x, y] . ^y[x, z]
    CHECK(commutator(a, b * c).evaluate(rep) ==
          (commutator(a, b) * conjugate(commutator(a, c), b)).evaluate(rep));
    // [xy, z] = ^x[y, z] . [x, z]
    CHECK(commutator(a * b, c).evaluate(rep) ==
          (conjugate(commutator(b, c), a) * commutator(a, c)).evaluate(rep));
  }
}

TEST_CASE("specialization through map") {
  Ring P = Ring::parse("Z[xi,zeta]");
  Ring R = Ring::integers_mod(9);
  std::vector<RingElement> img{RingElement::from_int(R, 3), RingElement::from_int(R, 4)};
  auto rep = Representation::standard(SystemType::G2);
  Word w = Word::parse(P, "(word (x a1 xi) (conj (z a2 zeta xi*zeta) (x 3a1+a2 zeta^2)))");
  Word ws = w.map(R, [&](const Value& v) { return specialize(RingElement(P, v), R, img).value(); });
  Word direct = Word::parse(R, "(word (x a1 3) (conj (z a2 4 3) (x 3a1+a2 7)))");
  CHECK(ws == direct);
  std::vector<Root> want{{1, 0}, {0, 1}, {3, 1}};
  CHECK(w.roots() == want);
}

TEST_CASE("certificates") {
  auto rep = Representation::standard(SystemType::A2);
  Ring R = Ring::integers_mod(8);
  Ideal I = Ideal::parse(R, "2"), J = Ideal::parse(R, "4");
  auto c = [&](int v) { return RingElement::from_int(R, v); };
  Root a{1, 0}, b{0, 1};

  CHECK(validate_certificate(Certificate::gen_of_ei(), Word::x(a, c(2)), I, J, rep));
  CHECK_FALSE(validate_certificate(Certificate::gen_of_ei(), Word::x(a, c(1)), I, J, rep));

  Word ga = Word::x(a, c(2)), gb = Word::x(-a, c(4));
  Word comm = commutator(ga, gb);
  auto gc = Certificate::gen_commutator(ga, gb);
  CHECK(validate_certificate(gc, comm, I, J, rep));
  CHECK_FALSE(validate_certificate(Certificate::gen_commutator(Word::x(a, c(1)), gb), comm, I, J, rep));

  Word conj = conjugate(comm, Word::x(b, c(1)));
  CHECK(validate_certificate(Certificate::conjugate_of(gc, Word::x(b, c(1))), conj, I, J, rep));
  CHECK_FALSE(validate_certificate(Certificate::conjugate_of(gc, Word::x(b, c(3))), conj, I, J, rep));

  Ring P = Ring::parse("Z[xi,zeta,eta]");
  Ideal X = Ideal::parse(P, "xi"), Zt = Ideal::parse(P, "zeta");
  Word lvl = Word::x(a, RingElement::parse(P, "xi*zeta*eta"));
  CHECK(validate_certificate(Certificate::level_element(X * Zt), lvl, X, Zt, rep));
  CHECK_FALSE(validate_certificate(Certificate::level_element(X * Zt), Word::x(a, RingElement::parse(P, "xi*eta")), X,
                                   Zt, rep));

  auto prod = Certificate::product_of({{comm, gc}, {conj, Certificate::conjugate_of(gc, Word::x(b, c(1)))}});
  CHECK(validate_certificate(prod, comm * conj, I, J, rep));
  CHECK_FALSE(validate_certificate(prod, conj * Word::x(a, c(1)), I, J, rep));
}
