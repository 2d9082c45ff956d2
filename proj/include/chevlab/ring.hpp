#pragma once

// Exact commutative rings: Z, Z/n, and polynomial rings over either.
//
// A Ring is a cheap shared handle. Arithmetic is done on raw Values through
// the Ring so that matrices can store entries without a per-entry owner;
// RingElement pairs a Value with its Ring for the checked public API.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chevlab/error.hpp"

namespace chevlab {

inline constexpr std::size_t kMaxVariables = 8;

struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exp{};

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  // Graded lexicographic: higher total degree is greater, ties broken
  // lexicographically with the first variable most significant.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;
};

struct Term {
  Monomial mono;
  std::int64_t coeff = 0;
  bool operator==(const Term&) const = default;
};

// Canonical representation of a ring element. Scalar rings use `scalar`
// (an integer, or a residue in [0,n)); polynomial rings use `terms`, sorted
// by decreasing monomial with no zero coefficients.
struct Value {
  std::int64_t scalar = 0;
  std::vector<Term> terms;
  bool operator==(const Value&) const = default;
};

class Ring {
 public:
  enum class Kind { Integers, IntegersMod, Polynomial };

  static Ring integers();
  static Ring integers_mod(std::int64_t n);
  static Ring polynomial(const Ring& base, std::vector<std::string> variables);

  // "Z", "Z/8", "Z[xi,zeta,eta]", "Z/9[t]".
  static Ring parse(std::string_view spec);

  Kind kind() const;
  // 0 for Z and Z[...]; n for Z/n and Z/n[...].
  std::int64_t modulus() const;
  const std::vector<std::string>& variables() const;
  Ring base() const;
  bool is_polynomial() const { return kind() == Kind::Polynomial; }
  bool is_finite() const { return kind() == Kind::IntegersMod; }
  std::uint64_t cardinality() const;
  std::string to_string() const;

  bool operator==(const Ring& other) const;

  Value zero() const;
  Value one() const;
  Value from_int(std::int64_t v) const;
  Value variable(std::size_t index) const;
  std::size_t variable_index(std::string_view name) const;

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;
  Value scale(const Value& a, std::int64_t k) const;
  Value pow(const Value& a, unsigned k) const;
  bool is_zero(const Value& a) const;
  bool is_one(const Value& a) const;

  // Exact division by an integer constant; returns false if it does not divide.
  bool divide_exact(const Value& a, std::int64_t k, Value& out) const;

  std::string format(const Value& a) const;
  Value parse_value(std::string_view text) const;

  // Reduce an integer into this ring's coefficient domain.
  std::int64_t reduce(std::int64_t v) const;

 private:
  struct Data;
  explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class RingElement {
 public:
  RingElement(Ring ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {}
  static RingElement from_int(const Ring& ring, std::int64_t v) { return {ring, ring.from_int(v)}; }
  static RingElement parse(const Ring& ring, std::string_view text) { return {ring, ring.parse_value(text)}; }

  const Ring& ring() const { return ring_; }
  const Value& value() const { return value_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement pow(unsigned k) const { return {ring_, ring_.pow(value_, k)}; }

  bool is_zero() const { return ring_.is_zero(value_); }
  bool is_one() const { return ring_.is_one(value_); }
  std::string to_string() const { return ring_.format(value_); }

  bool operator==(const RingElement& o) const { return ring_ == o.ring_ && value_ == o.value_; }

 private:
  RingElement checked(const RingElement& o) const;
  Ring ring_;
  Value value_;
};

// Finitely generated ideal. Normal forms:
//   Z      -- a single generator g >= 0;
//   Z/n    -- a single generator d dividing n (d == n is the zero ideal);
//   R[...] -- generators are single terms c*m (constants, variables and
//             monomials), kept free of redundant generators.
class Ideal {
 public:
  static Ideal generated(const Ring& ring, const std::vector<RingElement>& gens);
  static Ideal principal(const RingElement& g) { return generated(g.ring(), {g}); }
  static Ideal zero(const Ring& ring) { return generated(ring, {}); }
  static Ideal unit(const Ring& ring) { return generated(ring, {RingElement(ring, ring.one())}); }
  // Comma separated generator expressions: "2", "xi", "3,t".
  static Ideal parse(const Ring& ring, std::string_view spec);

  const Ring& ring() const { return ring_; }
  std::vector<RingElement> generators() const;
  bool contains(const RingElement& x) const;
  bool contains(const Ideal& other) const;
  bool is_zero() const;
  bool is_unit() const;
  Ideal operator*(const Ideal& other) const;
  std::string to_string() const;

  // Generator of the normal form for Z/n ideals (d | n).
  std::int64_t residue_generator() const;
  const std::vector<Term>& term_generators() const { return terms_; }

  bool operator==(const Ideal& o) const { return ring_ == o.ring_ && scalar_ == o.scalar_ && terms_ == o.terms_; }

 private:
  Ideal(Ring ring) : ring_(std::move(ring)) {}
  void normalize();
  Ring ring_;
  std::int64_t scalar_ = 0;  // scalar rings
  std::vector<Term> terms_;  // polynomial rings
};

// A ring homomorphism R -> R/I for the quotients we can represent.
struct Quotient {
  Ring target;
  Ring source;
  Ideal ideal;
  Value operator()(const Value& v) const;
};

// R/I for Z/n by (d), Z by (g), and polynomial rings by ideals generated by
// variables and at most one constant. Throws UnrepresentableQuotient otherwise
// (including the zero ring R/R).
Quotient quotient(const Ideal& ideal);

// Evaluate a polynomial at the given images of its variables (a ring
// homomorphism from the polynomial ring into `target`). Coefficients are
// mapped through Z -> target.
RingElement specialize(const RingElement& f, const Ring& target, std::span<const RingElement> images);

std::vector<RingElement> enumerate_elements(const Ring& ring);
std::vector<RingElement> enumerate_ideal(const Ideal& ideal);

bool has_residue_field_F2(const Ring& ring);
// Exhaustive check that every theta lies in theta^2 R + 2 theta R; finite rings only.
bool theta_condition_holds(const Ring& ring);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);  // 0 if not a unit

}  // namespace chevlab
