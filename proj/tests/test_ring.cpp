#include <random>

#include "chevlab/ring.hpp"
#include "doctest.h"

using namespace chevlab;

TEST_CASE("ring specs parse and print") {
  CHECK(Ring::parse("Z").to_string() == "Z");
  CHECK(Ring::parse("Z/8").modulus() == 8);
  CHECK(Ring::parse("Z[xi,zeta,eta]").variables().size() == 3);
  CHECK(Ring::parse("Z/9[t]").to_string() == "Z/9[t]");
  CHECK_THROWS_AS(Ring::parse("Z/1"), Error);
  CHECK_THROWS_AS(Ring::parse("Q"), Error);
  try {
    Ring::parse("Z/1");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRingSpec);
  }
}

TEST_CASE("residue arithmetic") {
  Ring R = Ring::integers_mod(8);
  auto a = RingElement::from_int(R, 5), b = RingElement::from_int(R, 7);
  CHECK((a + b).to_string() == "4");
  CHECK((a * b).to_string() == "3");
  CHECK((-a).to_string() == "3");
  CHECK(RingElement::from_int(R, -1).to_string() == "7");
  CHECK_THROWS_AS(a + RingElement::from_int(Ring::integers_mod(9), 1), Error);
}

TEST_CASE("polynomials") {
  Ring P = Ring::parse("Z[xi,zeta,eta]");
  auto f = RingElement::parse(P, "(xi+zeta)^2 - 2*xi*zeta");
  CHECK(f == RingElement::parse(P, "zeta^2+xi^2"));
  CHECK(f.to_string() == "xi^2+zeta^2");
  CHECK(RingElement::parse(P, "-xi*zeta^2+3*eta").to_string() == "-xi*zeta^2+3*eta");
  CHECK((f - f).is_zero());
  CHECK_THROWS_AS(RingElement::parse(P, "xi+t"), Error);

  Ring P9 = Ring::parse("Z/9[t]");
  CHECK(RingElement::parse(P9, "3*t*3").is_zero());
}

TEST_CASE("polynomial ring laws on random elements") {
  Ring P = Ring::parse("Z/27[u,v]");
  std::mt19937_64 rng(7);
  auto random_poly = [&] {
    Value acc = P.zero();
    for (int k = 0; k < 4; ++k) {
      Value t = P.from_int(static_cast<std::int64_t>(rng() % 27));
      t = P.mul(t, P.pow(P.variable(0), rng() % 3));
      t = P.mul(t, P.pow(P.variable(1), rng() % 3));
      acc = P.add(acc, t);
    }
    return RingElement(P, acc);
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(RingElement::parse(P, a.to_string()) == a);
  }
}

TEST_CASE("ideals") {
  Ring R = Ring::integers_mod(8);
  Ideal I = Ideal::parse(R, "2"), J = Ideal::parse(R, "4");
  CHECK((I * J).is_zero());
  CHECK((I * I) == J);
  CHECK(I.contains(RingElement::from_int(R, 6)));
  CHECK_FALSE(I.contains(RingElement::from_int(R, 3)));
  CHECK(enumerate_ideal(I).size() == 4);
  CHECK(Ideal::parse(R, "6") == I);
  CHECK(Ideal::parse(R, "3").is_unit());

  Ring P = Ring::parse("Z[xi,zeta,eta]");
  Ideal X = Ideal::parse(P, "xi"), Zt = Ideal::parse(P, "zeta");
  Ideal XZ = X * Zt;
  CHECK(XZ.to_string() == "(xi*zeta)");
  CHECK(XZ.contains(RingElement::parse(P, "xi*zeta*eta - 4*xi^2*zeta")));
  CHECK_FALSE(XZ.contains(RingElement::parse(P, "xi*eta")));
  CHECK_THROWS_AS(Ideal::parse(P, "xi+zeta"), Error);
}

TEST_CASE("quotients") {
  Ring R = Ring::integers_mod(27);
  Quotient q = quotient(Ideal::parse(R, "3"));
  CHECK(q.target.to_string() == "Z/3");
  CHECK(q(R.from_int(17)) == q.target.from_int(2));
  CHECK_THROWS_AS(quotient(Ideal::unit(R)), Error);

  Ring P = Ring::parse("Z[xi,zeta]");
  Quotient qp = quotient(Ideal::parse(P, "xi"));
  CHECK(qp.target.to_string() == "Z[zeta]");
  CHECK(q.target.format(q(R.from_int(26))) == "2");
  CHECK(qp.target.format(qp(P.parse_value("xi*zeta+zeta^2+1"))) == "zeta^2+1");
  CHECK_THROWS_AS(quotient(Ideal::parse(P, "xi*zeta")), Error);
}

TEST_CASE("specialization is a homomorphism") {
  Ring P = Ring::parse("Z[xi,zeta]");
  Ring R = Ring::integers_mod(9);
  std::vector<RingElement> img{RingElement::from_int(R, 3), RingElement::from_int(R, 5)};
  auto f = RingElement::parse(P, "xi^2*zeta - 7*zeta + 1");
  auto g = RingElement::parse(P, "xi + zeta^3");
  CHECK(specialize(f * g, R, img) == specialize(f, R, img) * specialize(g, R, img));
  CHECK(specialize(f, R, img).to_string() == "2");  // 45 - 35 + 1
}

TEST_CASE("condition predicates") {
  CHECK(theta_condition_holds(Ring::integers_mod(9)));
  CHECK(theta_condition_holds(Ring::integers_mod(27)));
  CHECK_FALSE(theta_condition_holds(Ring::integers_mod(8)));
  CHECK(has_residue_field_F2(Ring::integers_mod(8)));
  CHECK_FALSE(has_residue_field_F2(Ring::integers_mod(27)));
  CHECK(has_residue_field_F2(Ring::integers()));
  CHECK_THROWS_AS(theta_condition_holds(Ring::integers()), Error);
}

TEST_CASE("integer overflow is detected") {
  Ring Zr = Ring::integers();
  Value big = Zr.from_int(std::int64_t(1) << 40);
  CHECK_THROWS_AS(Zr.mul(big, big), Error);
}
