#include "chevlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace chevlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::UnsupportedIdealShape: return "UnsupportedIdealShape";
    case ErrorCode::InfiniteRing: return "InfiniteRing";
    case ErrorCode::InvalidRingSpec: return "InvalidRingSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::OppositeRoots: return "OppositeRoots";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::ExtractionFailure: return "ExtractionFailure";
    case ErrorCode::NormalizationImpossible: return "NormalizationImpossible";
    case ErrorCode::UnrepresentableQuotient: return "UnrepresentableQuotient";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::NotShortRoot: return "NotShortRoot";
    case ErrorCode::ResidueFieldF2: return "ResidueFieldF2";
    case ErrorCode::UnitDecompositionFailed: return "UnitDecompositionFailed";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) return 0;
  return ((t % n) + n) % n;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

}  // namespace

// ---------------------------------------------------------------- Monomial

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(exp[i]) + other.exp[i];
    if (e > 255) throw Error(ErrorCode::Overflow, "monomial exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (auto c = exp[i] <=> other.exp[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------------- Ring

struct Ring::Data {
  std::int64_t modulus = 0;
  std::vector<std::string> variables;
};

Ring Ring::integers() {
  static const Ring z(std::make_shared<Data>());
  return z;
}

Ring Ring::integers_mod(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidRingSpec, "Z/n requires n >= 2, got " + std::to_string(n));
  if (n > (std::int64_t(1) << 40)) throw Error(ErrorCode::InvalidRingSpec, "modulus too large");
  auto d = std::make_shared<Data>();
  d->modulus = n;
  return Ring(std::move(d));
}

Ring Ring::polynomial(const Ring& base, std::vector<std::string> variables) {
  if (base.is_polynomial()) throw Error(ErrorCode::InvalidRingSpec, "polynomial base must be Z or Z/n");
  if (variables.empty()) throw Error(ErrorCode::InvalidRingSpec, "polynomial ring needs at least one variable");
  if (variables.size() > kMaxVariables) throw Error(ErrorCode::InvalidRingSpec, "too many variables");
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const auto& v = variables[i];
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw Error(ErrorCode::InvalidRingSpec, "bad variable name '" + v + "'");
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Error(ErrorCode::InvalidRingSpec, "bad variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (variables[j] == v) throw Error(ErrorCode::InvalidRingSpec, "duplicate variable '" + v + "'");
  }
  auto d = std::make_shared<Data>();
  d->modulus = base.modulus();
  d->variables = std::move(variables);
  return Ring(std::move(d));
}

Ring Ring::parse(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s[0] != 'Z') throw Error(ErrorCode::InvalidRingSpec, "ring spec must start with Z: '" + s + "'");
  std::size_t pos = 1;
  Ring base = integers();
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error(ErrorCode::InvalidRingSpec, "missing modulus in '" + s + "'");
    base = integers_mod(std::stoll(s.substr(start, pos - start)));
  }
  if (pos == s.size()) return base;
  if (s[pos] != '[' || s.back() != ']') throw Error(ErrorCode::InvalidRingSpec, "malformed ring spec '" + s + "'");
  std::vector<std::string> vars;
  std::string inner = s.substr(pos + 1, s.size() - pos - 2);
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) vars.push_back(item);
  return polynomial(base, std::move(vars));
}

Ring::Kind Ring::kind() const {
  if (!d_->variables.empty()) return Kind::Polynomial;
  return d_->modulus == 0 ? Kind::Integers : Kind::IntegersMod;
}

std::int64_t Ring::modulus() const { return d_->modulus; }
const std::vector<std::string>& Ring::variables() const { return d_->variables; }

Ring Ring::base() const {
  if (!is_polynomial()) return *this;
  return d_->modulus == 0 ? integers() : integers_mod(d_->modulus);
}

std::uint64_t Ring::cardinality() const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteRing, to_string() + " is infinite");
  return static_cast<std::uint64_t>(d_->modulus);
}

std::string Ring::to_string() const {
  std::string s = d_->modulus == 0 ? "Z" : "Z/" + std::to_string(d_->modulus);
  if (is_polynomial()) {
    s += "[";
    for (std::size_t i = 0; i < d_->variables.size(); ++i) s += (i ? "," : "") + d_->variables[i];
    s += "]";
  }
  return s;
}

bool Ring::operator==(const Ring& other) const {
  return d_ == other.d_ || (d_->modulus == other.d_->modulus && d_->variables == other.d_->variables);
}

std::int64_t Ring::reduce(std::int64_t v) const {
  const std::int64_t n = d_->modulus;
  if (n == 0) return v;
  v %= n;
  return v < 0 ? v + n : v;
}

Value Ring::zero() const { return {}; }

Value Ring::one() const { return from_int(1); }

Value Ring::from_int(std::int64_t v) const {
  Value out;
  v = reduce(v);
  if (is_polynomial()) {
    if (v != 0) out.terms.push_back({Monomial{}, v});
  } else {
    out.scalar = v;
  }
  return out;
}

Value Ring::variable(std::size_t index) const {
  if (index >= d_->variables.size()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Value out;
  Term t;
  t.mono.exp[index] = 1;
  t.coeff = 1;
  out.terms.push_back(t);
  return out;
}

std::size_t Ring::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < d_->variables.size(); ++i)
    if (d_->variables[i] == name) return i;
  throw Error(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "' in " + to_string());
}

namespace {

std::int64_t coeff_add(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n == 0) return checked_add(a, b);
  std::int64_t r = a + b;
  return r >= n ? r - n : r;
}

std::int64_t coeff_mul(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n == 0) return checked_mul(a, b);
  return mulmod(a, b, n);
}

std::int64_t coeff_neg(std::int64_t a, std::int64_t n) {
  if (n == 0) {
    if (a == INT64_MIN) throw Error(ErrorCode::Overflow, "negation overflow");
    return -a;
  }
  return a == 0 ? 0 : n - a;
}

// Sort (descending) and combine like terms.
void canonicalize(std::vector<Term>& terms, std::int64_t n) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = terms[i];
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].mono == acc.mono; ++j) acc.coeff = coeff_add(acc.coeff, terms[j].coeff, n);
    if (acc.coeff != 0) terms[out++] = acc;
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Value Ring::add(const Value& a, const Value& b) const {
  const std::int64_t n = d_->modulus;
  if (!is_polynomial()) return {coeff_add(a.scalar, b.scalar, n), {}};
  Value out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].mono > b.terms[j].mono)) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].mono > a.terms[i].mono) {
      out.terms.push_back(b.terms[j++]);
    } else {
      std::int64_t c = coeff_add(a.terms[i].coeff, b.terms[j].coeff, n);
      if (c != 0) out.terms.push_back({a.terms[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Value Ring::neg(const Value& a) const {
  const std::int64_t n = d_->modulus;
  if (!is_polynomial()) return {coeff_neg(a.scalar, n), {}};
  Value out = a;
  for (auto& t : out.terms) t.coeff = coeff_neg(t.coeff, n);
  return out;
}

Value Ring::sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

Value Ring::mul(const Value& a, const Value& b) const {
  const std::int64_t n = d_->modulus;
  if (!is_polynomial()) return {coeff_mul(a.scalar, b.scalar, n), {}};
  if (a.terms.empty() || b.terms.empty()) return {};
  Value out;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) out.terms.push_back({s.mono * t.mono, coeff_mul(s.coeff, t.coeff, n)});
  canonicalize(out.terms, n);
  return out;
}

Value Ring::scale(const Value& a, std::int64_t k) const { return mul(a, from_int(k)); }

Value Ring::pow(const Value& a, unsigned k) const {
  Value result = one();
  Value base = a;
  while (k) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k) base = mul(base, base);
  }
  return result;
}

bool Ring::is_zero(const Value& a) const { return is_polynomial() ? a.terms.empty() : a.scalar == 0; }

bool Ring::is_one(const Value& a) const { return a == one(); }

bool Ring::divide_exact(const Value& a, std::int64_t k, Value& out) const {
  const std::int64_t n = d_->modulus;
  if (k == 0) return false;
  auto div_coeff = [&](std::int64_t c, std::int64_t& q) {
    if (n == 0) {
      if (c % k != 0) return false;
      q = c / k;
      return true;
    }
    std::int64_t inv = mod_inverse(reduce(k), n);
    if (inv == 0) return false;
    q = mulmod(c, inv, n);
    return true;
  };
  out = a;
  if (!is_polynomial()) return div_coeff(a.scalar, out.scalar);
  for (auto& t : out.terms)
    if (!div_coeff(t.coeff, t.coeff)) return false;
  return true;
}

std::string Ring::format(const Value& a) const {
  if (!is_polynomial()) return std::to_string(a.scalar);
  if (a.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const Term& t = a.terms[i];
    std::int64_t c = t.coeff;
    bool negative = c < 0;
    if (negative) s += "-";
    else if (i) s += "+";
    std::uint64_t mag = negative ? std::uint64_t(0) - std::uint64_t(c) : std::uint64_t(c);
    std::string mono;
    for (std::size_t v = 0; v < d_->variables.size(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += d_->variables[v];
      if (t.mono.exp[v] > 1) mono += "^" + std::to_string(t.mono.exp[v]);
    }
    if (mono.empty()) s += std::to_string(mag);
    else if (mag == 1) s += mono;
    else s += std::to_string(mag) + "*" + mono;
  }
  return s;
}

namespace {

class ExprParser {
 public:
  ExprParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, msg + " in '" + std::string(text_) + "' at " + std::to_string(pos_));
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) v = ring_.add(v, term());
      else if (accept('-')) v = ring_.sub(v, term());
      else return v;
    }
  }
  Value term() {
    Value v = unary();
    while (accept('*')) v = ring_.mul(v, unary());
    return v;
  }
  Value unary() {
    if (accept('-')) return ring_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }
  Value power() {
    Value v = atom();
    if (accept('^')) {
      skip();
      std::int64_t e = integer();
      if (e < 0 || e > 255) fail("bad exponent");
      v = ring_.pow(v, static_cast<unsigned>(e));
    }
    return v;
  }
  std::int64_t integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::int64_t v = 0;
    for (std::size_t i = start; i < pos_; ++i) v = checked_add(checked_mul(v, 10), text_[i] - '0');
    return v;
  }
  Value atom() {
    skip();
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return ring_.from_int(integer());
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("unexpected character");
    return ring_.variable(ring_.variable_index(text_.substr(start, pos_ - start)));
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Value Ring::parse_value(std::string_view text) const { return ExprParser(*this, text).parse(); }

// ------------------------------------------------------------- RingElement

RingElement RingElement::checked(const RingElement& o) const {
  if (!(ring_ == o.ring_))
    throw Error(ErrorCode::MixedRings, "operands live in " + ring_.to_string() + " and " + o.ring_.to_string());
  return o;
}

RingElement RingElement::operator+(const RingElement& o) const {
  checked(o);
  return {ring_, ring_.add(value_, o.value_)};
}
RingElement RingElement::operator-(const RingElement& o) const {
  checked(o);
  return {ring_, ring_.sub(value_, o.value_)};
}
RingElement RingElement::operator*(const RingElement& o) const {
  checked(o);
  return {ring_, ring_.mul(value_, o.value_)};
}
RingElement RingElement::operator-() const { return {ring_, ring_.neg(value_)}; }

// ------------------------------------------------------------------- Ideal

Ideal Ideal::generated(const Ring& ring, const std::vector<RingElement>& gens) {
  Ideal I(ring);
  for (const auto& g : gens) {
    if (!(g.ring() == ring))
      throw Error(ErrorCode::MixedRings, "ideal generator in " + g.ring().to_string() + ", ideal in " + ring.to_string());
    if (ring.is_polynomial()) {
      if (g.value().terms.size() > 1)
        throw Error(ErrorCode::UnsupportedIdealShape,
                    "polynomial ideal generators must be single terms, got " + g.to_string());
      if (!g.value().terms.empty()) I.terms_.push_back(g.value().terms.front());
    } else {
      I.scalar_ = gcd64(I.scalar_, g.value().scalar);
    }
  }
  I.normalize();
  return I;
}

Ideal Ideal::parse(const Ring& ring, std::string_view spec) {
  std::vector<RingElement> gens;
  std::string item;
  std::stringstream ss{std::string(spec)};
  while (std::getline(ss, item, ',')) gens.push_back(RingElement::parse(ring, item));
  if (gens.empty()) throw Error(ErrorCode::ParseError, "empty ideal spec");
  return generated(ring, gens);
}

void Ideal::normalize() {
  const std::int64_t n = ring_.modulus();
  if (!ring_.is_polynomial()) {
    scalar_ = n == 0 ? (scalar_ < 0 ? -scalar_ : scalar_) : gcd64(scalar_, n);
    if (n != 0 && scalar_ == 0) scalar_ = n;
    return;
  }
  for (auto& t : terms_) t.coeff = n == 0 ? (t.coeff < 0 ? -t.coeff : t.coeff) : gcd64(t.coeff, n);
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.coeff < b.coeff;
  });
  std::vector<Term> kept;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < terms_.size() && !redundant; ++j) {
      if (i == j) continue;
      const Term& a = terms_[i];
      const Term& b = terms_[j];
      if (b.mono.divides(a.mono) && a.coeff % b.coeff == 0) {
        // Equal generators: keep the first occurrence only.
        redundant = !(a == b) || j < i;
      }
    }
    if (!redundant) kept.push_back(terms_[i]);
  }
  terms_ = std::move(kept);
}

std::vector<RingElement> Ideal::generators() const {
  if (!ring_.is_polynomial()) return {RingElement(ring_, ring_.from_int(scalar_))};
  std::vector<RingElement> out;
  for (const auto& t : terms_) out.emplace_back(ring_, Value{0, {t}});
  if (out.empty()) out.emplace_back(ring_, ring_.zero());
  return out;
}

std::int64_t Ideal::residue_generator() const { return scalar_; }

bool Ideal::contains(const RingElement& x) const {
  if (!(x.ring() == ring_))
    throw Error(ErrorCode::MixedRings, "element in " + x.ring().to_string() + ", ideal in " + ring_.to_string());
  const std::int64_t n = ring_.modulus();
  if (!ring_.is_polynomial()) {
    if (scalar_ == 0) return x.value().scalar == 0;
    return x.value().scalar % scalar_ == 0;
  }
  for (const auto& t : x.value().terms) {
    std::int64_t d = n;
    for (const auto& g : terms_)
      if (g.mono.divides(t.mono)) d = gcd64(d, g.coeff);
    if (d == 0) return false;
    if (t.coeff % d != 0) return false;
  }
  return true;
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const {
  if (!ring_.is_polynomial()) return ring_.modulus() == 0 ? scalar_ == 0 : scalar_ == ring_.modulus();
  return terms_.empty();
}

bool Ideal::is_unit() const { return contains(RingElement(ring_, ring_.one())); }

Ideal Ideal::operator*(const Ideal& other) const {
  if (!(ring_ == other.ring_))
    throw Error(ErrorCode::MixedRings, "ideal product of " + ring_.to_string() + " and " + other.ring_.to_string());
  Ideal P(ring_);
  const std::int64_t n = ring_.modulus();
  if (!ring_.is_polynomial()) {
    if (n == 0) P.scalar_ = checked_mul(scalar_, other.scalar_);
    else P.scalar_ = static_cast<std::int64_t>((static_cast<__int128>(scalar_) * other.scalar_) % n);
  } else {
    for (const auto& a : terms_)
      for (const auto& b : other.terms_) {
        std::int64_t c = n == 0 ? checked_mul(a.coeff, b.coeff) : mulmod(a.coeff, b.coeff, n);
        if (c != 0) P.terms_.push_back({a.mono * b.mono, c});
      }
  }
  P.normalize();
  return P;
}

std::string Ideal::to_string() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + gens[i].to_string();
  return s + ")";
}

// ---------------------------------------------------------------- Quotient

Value Quotient::operator()(const Value& v) const {
  if (!source.is_polynomial()) return target.from_int(v.scalar);
  // Variables surviving the quotient, in source order.
  std::vector<int> remap(source.variables().size(), -1);
  std::size_t next = 0;
  for (std::size_t i = 0; i < source.variables().size(); ++i) {
    bool killed = false;
    for (const auto& g : ideal.term_generators())
      if (g.mono.degree() == 1 && g.mono.exp[i] == 1) killed = true;
    if (!killed) remap[i] = static_cast<int>(next++);
  }
  Value out = target.zero();
  for (const auto& t : v.terms) {
    bool dropped = false;
    Monomial m;
    for (std::size_t i = 0; i < source.variables().size(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (remap[i] < 0) {
        dropped = true;
        break;
      }
      m.exp[static_cast<std::size_t>(remap[i])] = t.mono.exp[i];
    }
    if (dropped) continue;
    Value term = target.from_int(t.coeff);
    if (target.is_polynomial() && !term.terms.empty()) term.terms.front().mono = m;
    out = target.add(out, term);
  }
  return out;
}

Quotient quotient(const Ideal& ideal) {
  const Ring& R = ideal.ring();
  if (ideal.is_unit()) throw Error(ErrorCode::UnrepresentableQuotient, "quotient by the unit ideal is the zero ring");
  if (ideal.is_zero()) return {R, R, ideal};
  if (!R.is_polynomial()) return {Ring::integers_mod(ideal.residue_generator()), R, ideal};

  std::int64_t constant = 0;
  std::vector<std::string> remaining;
  std::vector<bool> killed(R.variables().size(), false);
  for (const auto& g : ideal.term_generators()) {
    if (g.mono.is_one()) {
      constant = g.coeff;
    } else if (g.mono.degree() == 1 && g.coeff == 1) {
      for (std::size_t i = 0; i < killed.size(); ++i)
        if (g.mono.exp[i]) killed[i] = true;
    } else {
      throw Error(ErrorCode::UnrepresentableQuotient,
                  "quotient of " + R.to_string() + " by " + ideal.to_string() + " is not representable");
    }
  }
  for (std::size_t i = 0; i < killed.size(); ++i)
    if (!killed[i]) remaining.push_back(R.variables()[i]);
  Ring base = constant == 0 ? R.base() : Ring::integers_mod(constant);
  Ring target = remaining.empty() ? base : Ring::polynomial(base, remaining);
  return {target, R, ideal};
}

RingElement specialize(const RingElement& f, const Ring& target, std::span<const RingElement> images) {
  const Ring& R = f.ring();
  if (!R.is_polynomial()) return RingElement::from_int(target, f.value().scalar);
  if (images.size() != R.variables().size())
    throw Error(ErrorCode::InvalidArgument, "specialize: need one image per variable");
  for (const auto& img : images)
    if (!(img.ring() == target)) throw Error(ErrorCode::MixedRings, "specialize: image outside target ring");
  Value acc = target.zero();
  for (const auto& t : f.value().terms) {
    Value term = target.from_int(t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono.exp[i]) term = target.mul(term, target.pow(images[i].value(), t.mono.exp[i]));
    acc = target.add(acc, term);
  }
  return {target, acc};
}

std::vector<RingElement> enumerate_elements(const Ring& ring) {
  if (!ring.is_finite()) throw Error(ErrorCode::InfiniteRing, ring.to_string() + " cannot be enumerated");
  std::vector<RingElement> out;
  out.reserve(ring.cardinality());
  for (std::int64_t v = 0; v < ring.modulus(); ++v) out.push_back(RingElement::from_int(ring, v));
  return out;
}

std::vector<RingElement> enumerate_ideal(const Ideal& ideal) {
  std::vector<RingElement> out;
  for (auto& x : enumerate_elements(ideal.ring()))
    if (ideal.contains(x)) out.push_back(std::move(x));
  return out;
}

bool has_residue_field_F2(const Ring& ring) {
  switch (ring.kind()) {
    case Ring::Kind::Integers: return true;
    case Ring::Kind::IntegersMod: return ring.modulus() % 2 == 0;
    case Ring::Kind::Polynomial: return has_residue_field_F2(ring.base());
  }
  return true;
}

bool theta_condition_holds(const Ring& ring) {
  if (!ring.is_finite())
    throw Error(ErrorCode::InfiniteRing, "theta condition is only decided for finite rings, not " + ring.to_string());
  const std::int64_t n = ring.modulus();
  for (std::int64_t theta = 0; theta < n; ++theta) {
    std::int64_t d = gcd64(gcd64(mulmod(theta, theta, n), mulmod(2, theta, n)), n);
    if (theta % d != 0) return false;
  }
  return true;
}

}  // namespace chevlab
