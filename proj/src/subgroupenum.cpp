#include "chevlab/subgroupenum.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace chevlab {

std::size_t ModKeyHash::operator()(ModKey k) const noexcept {
  std::uint64_t x = static_cast<std::uint64_t>(k) ^ (static_cast<std::uint64_t>(k >> 64) * 0x9E3779B97F4A7C15ULL);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  return static_cast<std::size_t>(x ^ (x >> 31));
}

Ambient::Ambient(SystemType type, const Ring& R) : type_(type), ring_(R) {
  if (type == SystemType::G2) throw Error(ErrorCode::UnsupportedType, kG2OutOfScale);
  if (R.kind() != Ring::Kind::IntegersMod)
    throw Error(ErrorCode::InfiniteRing, "enumeration needs Z/n, got " + R.to_string());
  n_ = R.modulus();
  if (n_ > 255) throw Error(ErrorCode::InvalidArgument, "modulus above 255 not supported for enumeration");
  rep_ = Representation::standard(type);
  dim_ = rep_->dim();
  form_ = rep_->symplectic_form();
}

ModElem Ambient::identity() const { return scalar(1); }

ModElem Ambient::scalar(std::int64_t s) const {
  ModElem e{};
  for (std::size_t i = 0; i < dim_; ++i) e[i * dim_ + i] = static_cast<std::uint8_t>(ring_.reduce(s));
  return e;
}

ModElem Ambient::from_matrix(const Matrix& m) const {
  if (!(m.ring() == ring_)) throw Error(ErrorCode::MixedRings, "matrix over " + m.ring().to_string());
  ModElem e{};
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) e[i * dim_ + j] = static_cast<std::uint8_t>(m.at(i, j).scalar);
  return e;
}

ModElem Ambient::evaluate(const Word& w) const { return from_matrix(w.evaluate(rep_).matrix()); }

ModElem Ambient::mul(const ModElem& a, const ModElem& b) const {
  ModElem c{};
  const std::size_t d = dim_;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      unsigned s = 0;
      for (std::size_t k = 0; k < d; ++k) s += unsigned(a[i * d + k]) * b[k * d + j];
      c[i * d + j] = static_cast<std::uint8_t>(s % n_);
    }
  return c;
}

ModElem Ambient::inverse(const ModElem& a) const {
  ModElem r{};
  auto m = [&](std::size_t i, std::size_t j) { return std::int64_t(a[i * dim_ + j]); };
  if (type_ == SystemType::A2) {
    // adjugate; determinant is 1
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        r[i * 3 + j] = static_cast<std::uint8_t>(ring_.reduce(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)));
      }
    return r;
  }
  // g^T J g = J  =>  g^-1 = -J g^T J
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l) s += form_(i, k) * m(l, k) * form_(l, j);
      r[i * dim_ + j] = static_cast<std::uint8_t>(ring_.reduce(-s));
    }
  return r;
}

ModKey Ambient::key(const ModElem& a) const {
  ModKey k = 0;
  for (std::size_t i = 0; i < dim_ * dim_; ++i) k = k * static_cast<ModKey>(n_) + a[i];
  return k;
}

bool Ambient::congruent_identity(const ModElem& a, std::int64_t d) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if ((std::int64_t(a[i * dim_ + j]) - (i == j ? 1 : 0)) % d != 0) return false;
  return true;
}

bool Ambient::in_group(const ModElem& a) const {
  auto m = [&](std::size_t i, std::size_t j) { return std::int64_t(a[i * dim_ + j]); };
  if (type_ == SystemType::A2) {
    std::int64_t det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return ring_.reduce(det) == 1;
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l) s += m(k, i) * form_(k, l) * m(l, j);
      if (ring_.reduce(s - form_(i, j)) != 0) return false;
    }
  return true;
}

std::string Ambient::format(const ModElem& a) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dim_; ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? " " : "") << int(a[i * dim_ + j]);
  }
  os << ']';
  return os.str();
}

EnumeratedSubgroup::EnumeratedSubgroup(const Ambient& amb) : amb_(&amb) { insert_raw(amb.identity()); }

void EnumeratedSubgroup::insert_raw(const ModElem& g) {
  if (keys_.insert(amb_->key(g)).second) elements_.push_back(g);
}

bool EnumeratedSubgroup::same_set(const EnumeratedSubgroup& o) const { return size() == o.size() && subset_of(o); }

bool EnumeratedSubgroup::subset_of(const EnumeratedSubgroup& o) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const ModElem& e) { return o.contains(e); });
}

bool EnumeratedSubgroup::add_generator(const ModElem& g, std::size_t bound) {
  if (contains(g)) return false;
  gens_.push_back(g);
  auto push = [&](const ModElem& e) {
    if (!keys_.insert(amb_->key(e)).second) return;
    elements_.push_back(e);
    if (elements_.size() > bound)
      throw Error(ErrorCode::BoundExceeded, "closure passed " + std::to_string(bound) + " elements (partial count " +
                                                std::to_string(elements_.size()) + ")");
  };
  const std::size_t old = elements_.size();
  for (std::size_t k = 0; k < old; ++k) push(amb_->mul(elements_[k], g));
  for (std::size_t k = old; k < elements_.size(); ++k) {
    const ModElem e = elements_[k];
    for (const auto& s : gens_) push(amb_->mul(e, s));
  }
  return true;
}

std::vector<ModElem> dedupe(const Ambient& amb, const std::vector<ModElem>& gs) {
  std::unordered_set<ModKey, ModKeyHash> seen;
  std::vector<ModElem> out;
  for (const auto& g : gs)
    if (seen.insert(amb.key(g)).second) out.push_back(g);
  return out;
}

std::vector<ModElem> evaluate_all(const Ambient& amb, const std::vector<Word>& ws) {
  std::vector<ModElem> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(amb.evaluate(w));
  return dedupe(amb, out);
}

EnumeratedSubgroup closure(const Ambient& amb, const std::vector<ModElem>& gens, std::size_t bound) {
  EnumeratedSubgroup H(amb);
  for (const auto& g : gens) H.add_generator(g, bound);
  return H;
}

EnumeratedSubgroup closure(const Ambient& amb, const std::vector<Word>& gens, std::size_t bound) {
  return closure(amb, evaluate_all(amb, gens), bound);
}

namespace {

// Finite group: closing the generators under conjugation is enough.
void close_under_conjugation(const Ambient& amb, EnumeratedSubgroup& H, const std::vector<ModElem>& conjugators,
                             std::size_t bound) {
  std::vector<std::pair<ModElem, ModElem>> cs;
  for (const auto& c : dedupe(amb, conjugators)) cs.emplace_back(c, amb.inverse(c));
  for (std::size_t i = 0; i < H.generators().size(); ++i) {
    const ModElem s = H.generators()[i];
    for (const auto& [c, ci] : cs) {
      ModElem t = amb.mul(amb.mul(c, s), ci);
      if (!H.contains(t)) H.add_generator(t, bound);
    }
  }
}

}  // namespace

EnumeratedSubgroup normal_closure(const Ambient& amb, const std::vector<ModElem>& seeds,
                                  const std::vector<ModElem>& conjugators, std::size_t bound) {
  EnumeratedSubgroup H = closure(amb, seeds, bound);
  close_under_conjugation(amb, H, conjugators, bound);
  return H;
}

EnumeratedSubgroup commutator_subgroup(const Ambient& amb, const std::vector<ModElem>& H,
                                       const std::vector<ModElem>& K, std::size_t bound) {
  auto h = dedupe(amb, H), k = dedupe(amb, K);
  std::vector<ModElem> hi, ki;
  for (const auto& g : h) hi.push_back(amb.inverse(g));
  for (const auto& g : k) ki.push_back(amb.inverse(g));
  EnumeratedSubgroup N(amb);
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < k.size(); ++b) {
      ModElem c = amb.mul(amb.mul(h[a], k[b]), amb.mul(hi[a], ki[b]));
      if (!N.contains(c)) N.add_generator(c, bound);
    }
  std::vector<ModElem> conj = h;
  conj.insert(conj.end(), k.begin(), k.end());
  close_under_conjugation(amb, N, conj, bound);
  return N;
}

namespace {

std::int64_t level_of(const Ambient& amb, const Ideal& I) {
  if (!(I.ring() == amb.ring())) throw Error(ErrorCode::MixedRings, "ideal over " + I.ring().to_string());
  return I.residue_generator();
}

std::uint64_t checked_pow(std::uint64_t b, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (r > cap / std::max<std::uint64_t>(b, 1)) return cap + 1;
    r *= b;
  }
  return r;
}

}  // namespace

EnumeratedSubgroup enumerate_congruence_subgroup(const Ambient& amb, const Ideal& I, const Bounds& b) {
  const std::int64_t n = amb.modulus(), d = level_of(amb, I);
  const std::size_t dim = amb.dim();
  const std::int64_t q = n / d;
  std::uint64_t candidates = checked_pow(q, dim * dim, b.candidates);
  if (candidates > b.candidates)
    throw Error(ErrorCode::BoundExceeded, "G(R," + I.to_string() + ") needs " + std::to_string(q) + "^" +
                                              std::to_string(dim * dim) + " candidates, bound is " +
                                              std::to_string(b.candidates));
  // every column is e_k + d m, m in (Z/q)^dim
  std::vector<std::vector<std::uint8_t>> cols;
  std::vector<std::uint8_t> m(dim, 0);
  for (std::uint64_t idx = 0; idx < checked_pow(q, dim, b.candidates); ++idx) {
    std::int64_t t = static_cast<std::int64_t>(idx);
    for (std::size_t i = 0; i < dim; ++i) {
      m[i] = static_cast<std::uint8_t>((t % q) * d);
      t /= q;
    }
    cols.push_back(m);
  }
  EnumeratedSubgroup G(amb);
  ModElem g{};
  const IntMatrix& J = amb.rep()->symplectic_form();
  const bool symplectic = amb.type() == SystemType::C2;
  auto omega = [&](std::size_t a, std::size_t c) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t l = 0; l < dim; ++l) s += g[k * dim + a] * J(k, l) * g[l * dim + c];
    return amb.ring().reduce(s);
  };
  std::function<void(std::size_t)> rec = [&](std::size_t col) {
    if (col == dim) {
      if (symplectic || amb.in_group(g)) {
        G.insert_raw(g);
        if (G.size() > b.elements)
          throw Error(ErrorCode::BoundExceeded, "G(R," + I.to_string() + ") passed " + std::to_string(b.elements) +
                                                    " elements");
      }
      return;
    }
    for (const auto& c : cols) {
      for (std::size_t i = 0; i < dim; ++i) g[i * dim + col] = static_cast<std::uint8_t>((c[i] + (i == col)) % n);
      bool ok = true;
      if (symplectic)
        for (std::size_t a = 0; a < col && ok; ++a) ok = omega(a, col) == amb.ring().reduce(J(a, col));
      if (ok) rec(col + 1);
    }
  };
  rec(0);
  return G;
}

std::vector<ModElem> center_of_quotient(const Ambient& amb, const Ideal& I, std::size_t bound,
                                        std::size_t* quotient_order) {
  const std::int64_t d = level_of(amb, I);
  if (d == 1) throw Error(ErrorCode::UnrepresentableQuotient, "R/R is the zero ring");
  Ring Q = Ring::integers_mod(d);
  Ambient qa(amb.type(), Q);
  std::vector<Word> gens;
  for (const auto& a : RootSystem::get(amb.type()).roots())
    for (std::int64_t t = 1; t < d; ++t) gens.push_back(Word::x(a, RingElement::from_int(Q, t)));
  auto gs = evaluate_all(qa, gens);
  EnumeratedSubgroup G = closure(qa, gs, bound);
  if (quotient_order) *quotient_order = G.size();
  std::vector<ModElem> out;
  for (const auto& e : G.elements())
    if (std::all_of(gs.begin(), gs.end(), [&](const ModElem& s) { return qa.mul(e, s) == qa.mul(s, e); }))
      out.push_back(e);
  return out;
}

EnumeratedSubgroup enumerate_full_congruence(const Ambient& amb, const Ideal& I, const Bounds& b) {
  const std::int64_t n = amb.modulus(), d = level_of(amb, I);
  const std::size_t dim = amb.dim();
  auto centre = center_of_quotient(amb, I, b.elements);
  EnumeratedSubgroup K = enumerate_congruence_subgroup(amb, I, b);
  EnumeratedSubgroup C(amb);
  for (const auto& c : centre) {
    std::int64_t lambda = c[0];
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (c[i * dim + j] != (i == j ? lambda : 0))
          throw Error(ErrorCode::UnsupportedType, "centre of G(R/I) is not scalar");
    std::optional<ModElem> lift;
    for (std::int64_t L = lambda; L < n && !lift; L += d) {
      ModElem s = amb.scalar(L);
      if (!amb.in_group(s)) continue;
      Matrix sm(amb.ring(), dim);
      for (std::size_t i = 0; i < dim; ++i) sm.at(i, i) = amb.ring().from_int(L);
      if (central_mod_test(GroupElement(amb.rep(), sm), I)) lift = s;
    }
    if (!lift) throw Error(ErrorCode::UnsupportedType, "no scalar lift of a central element");
    for (const auto& k : K.elements()) {
      C.insert_raw(amb.mul(*lift, k));
      if (C.size() > b.elements)
        throw Error(ErrorCode::BoundExceeded, "C(R," + I.to_string() + ") passed " + std::to_string(b.elements));
    }
  }
  C.set_generators(C.elements());
  return C;
}

bool closure_audit(const EnumeratedSubgroup& H) {
  const Ambient& amb = H.ambient();
  for (const auto& s : H.elements())
    for (const auto& g : H.generators())
      if (!H.contains(amb.mul(s, g))) return false;
  return true;
}

std::vector<Word> elementary_generators(SystemType type, const Ideal& I) {
  std::vector<Word> out;
  for (const auto& a : RootSystem::get(type).roots())
    for (const auto& xi : enumerate_ideal(I))
      if (!xi.is_zero()) out.push_back(Word::x(a, xi));
  return out;
}

std::string_view to_string(Statement s) {
  switch (s) {
    case Statement::T1: return "T1";
    case Statement::T2: return "T2";
    case Statement::T3: return "T3";
    case Statement::O1: return "O1";
    case Statement::O2: return "O2";
  }
  return "?";
}

Statement parse_statement(std::string_view s) {
  for (auto st : {Statement::T1, Statement::T2, Statement::T3, Statement::O1, Statement::O2})
    if (to_string(st) == s) return st;
  throw Error(ErrorCode::InvalidArgument, "unknown statement '" + std::string(s) + "'");
}

namespace {

std::string fnv_hash(const Ambient& amb, const std::vector<std::vector<ModElem>>& lists) {
  std::uint64_t h = 1469598103934665603ULL;
  auto eat = [&](std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ULL;
  };
  for (const auto& l : lists) {
    for (const auto& g : l)
      for (std::size_t i = 0; i < amb.dim() * amb.dim(); ++i) eat(g[i]);
    eat(0xff);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

TheoremReport verify_theorem(Statement stmt, SystemType type, const Ideal& I, const Ideal& J, const Bounds& b) {
  if (!(I.ring() == J.ring())) throw Error(ErrorCode::MixedRings, "ideals of different rings");
  const Ring& R = I.ring();
  Ambient amb(type, R);
  TheoremReport rep{stmt, type, R.to_string(), I.to_string(), J.to_string(), false, {}, {}, "", "", {}};
  rep.condition_star = condition_star(type, R).summary();

  auto clock = [] { return std::chrono::steady_clock::now(); };
  auto t0 = clock();
  auto lap = [&](const std::string& name) {
    auto t = clock();
    rep.timings.emplace_back(name, std::chrono::duration<double>(t - t0).count());
    t0 = t;
  };
  auto card = [&](const std::string& name, std::size_t v) { rep.cardinalities.emplace_back(name, v); };
  auto check = [&](const std::string& name, bool v) { rep.checks.push_back({name, v}); };

  const Ideal IJ = I * J;
  const std::int64_t ij = IJ.residue_generator();
  auto EI = evaluate_all(amb, elementary_generators(type, I));
  auto EJ = evaluate_all(amb, elementary_generators(type, J));
  std::vector<std::vector<ModElem>> hashed{EI, EJ};
  auto level_ok = [&](const EnumeratedSubgroup& H) {
    return std::all_of(H.elements().begin(), H.elements().end(),
                       [&](const ModElem& e) { return amb.congruent_identity(e, ij); });
  };
  auto audited = [&](const std::string& name, const EnumeratedSubgroup& H) {
    card(name, H.size());
    check("closure audit " + name, closure_audit(H));
  };

  switch (stmt) {
    case Statement::T1: {
      auto ERI = evaluate_all(amb, relative_generators(type, I));
      auto ERJ = evaluate_all(amb, relative_generators(type, J));
      hashed.push_back(ERI);
      hashed.push_back(ERJ);
      auto lhs = commutator_subgroup(amb, EI, EJ, b.elements);
      lap("[E(I),E(J)]");
      auto rhs = commutator_subgroup(amb, ERI, ERJ, b.elements);
      lap("[E(R,I),E(R,J)]");
      auto sym = commutator_subgroup(amb, EJ, EI, b.elements);
      lap("[E(J),E(I)]");
      audited("[E(I),E(J)]", lhs);
      audited("[E(R,I),E(R,J)]", rhs);
      check("[E(I),E(J)] = [E(R,I),E(R,J)]", lhs.same_set(rhs));
      check("[E(I),E(J)] = [E(J),E(I)]", lhs.same_set(sym));
      check("[E(I),E(J)] inside G(R,IJ)", level_ok(lhs));
      try {
        auto G = enumerate_congruence_subgroup(amb, IJ, b);
        lap("G(R,IJ)");
        card("G(R,IJ)", G.size());
        check("[E(R,I),E(R,J)] inside G(R,IJ)", rhs.subset_of(G));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundExceeded) throw;
      }
      if (condition_star(type, R).holds()) {
        auto mixed = mixed_commutator_generators(type, I, J);
        std::vector<Word> ws;
        for (const auto& g : mixed.generators) ws.push_back(g.word);
        auto mg = evaluate_all(amb, ws);
        hashed.push_back(mg);
        auto M = closure(amb, mg, b.elements);
        lap("mixed generators");
        card("<mixed generators>", M.size());
        check("<mixed generators> = [E(R,I),E(R,J)]", M.same_set(rhs));
      }
      break;
    }
    case Statement::T2: {
      std::size_t qorder = 0;
      auto centre = center_of_quotient(amb, J, b.elements, &qorder);
      card("G(R/J)", qorder);
      card("centre of G(R/J)", centre.size());
      auto C = enumerate_full_congruence(amb, J, b);
      card("C(R,J)", C.size());
      lap("C(R,J)");
      auto lhs = commutator_subgroup(amb, EI, C.elements(), b.elements);
      lap("[E(I),C(R,J)]");
      auto rhs = commutator_subgroup(amb, EI, EJ, b.elements);
      lap("[E(I),E(J)]");
      audited("[E(I),C(R,J)]", lhs);
      audited("[E(I),E(J)]", rhs);
      check("[E(I),C(R,J)] = [E(I),E(J)]", lhs.same_set(rhs));
      check("[E(I),E(J)] inside G(R,IJ)", level_ok(rhs));
      break;
    }
    case Statement::T3: {
      auto C = enumerate_full_congruence(amb, I, b);
      card("C(R,I)", C.size());
      lap("C(R,I)");
      auto E = closure(amb, EI, b.elements);
      lap("E(I)");
      audited("E(I)", E);
      // c E c^-1 is generated by the conjugated generators; same size, so
      // containment is equality
      bool normal = true;
      for (const auto& c : C.elements()) {
        ModElem ci = amb.inverse(c);
        for (const auto& s : E.generators())
          if (!E.contains(amb.mul(amb.mul(c, s), ci))) {
            normal = false;
            break;
          }
        if (!normal) break;
      }
      lap("conjugation");
      check("c E(I) c^-1 = E(I) for all c in C(R,I)", normal);
      break;
    }
    case Statement::O1: {
      auto ERIJ = evaluate_all(amb, relative_generators(type, IJ));
      hashed.push_back(ERIJ);
      auto E = closure(amb, ERIJ, b.elements);
      lap("E(R,IJ)");
      auto lhs = commutator_subgroup(amb, EI, EJ, b.elements);
      lap("[E(I),E(J)]");
      audited("E(R,IJ)", E);
      audited("[E(I),E(J)]", lhs);
      check("E(R,IJ) inside [E(I),E(J)]", E.subset_of(lhs));
      break;
    }
    case Statement::O2: {
      auto lhs = commutator_subgroup(amb, EI, EJ, b.elements);
      lap("[E(I),E(J)]");
      audited("[E(I),E(J)]", lhs);
      auto X = evaluate_all(amb, elementary_generators(type, Ideal::unit(R)));
      card("x_a(t) conjugators", X.size());
      bool stable = true;
      for (const auto& x : X) {
        ModElem xi = amb.inverse(x);
        for (const auto& e : lhs.elements())
          if (!lhs.contains(amb.mul(amb.mul(x, e), xi))) {
            stable = false;
            break;
          }
        if (!stable) break;
      }
      lap("conjugation");
      check("[E(I),E(J)] stable under every x_a(t)", stable);
      break;
    }
  }
  rep.generator_hash = fnv_hash(amb, hashed);
  rep.verdict = std::all_of(rep.checks.begin(), rep.checks.end(), [](const NamedCheck& c) { return c.pass; });
  return rep;
}

}  // namespace chevlab
