#include "chevlab/factorizer.hpp"

#include <map>
#include <mutex>
#include <random>

#include "chevlab/parallel.hpp"

namespace chevlab {

namespace {

int dot(const std::array<int, 2>& h, const Root& r) { return h[0] * r.c1 + h[1] * r.c2; }

const SignNormalization& normalization_for(SystemType type, MainLemmaCase c, const Root& alpha) {
  static std::mutex m;
  static std::map<std::tuple<int, int, int, int>, SignNormalization> cache;
  std::lock_guard<std::mutex> lock(m);
  auto k = std::make_tuple(static_cast<int>(type), static_cast<int>(c), alpha.c1, alpha.c2);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, normalize_signs(standard_table(type), c, alpha)).first;
  return it->second;
}

Word letters_word(const Ring& R, const std::vector<Root>& roots, const std::vector<Value>& coeffs) {
  Word w(R);
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (!R.is_zero(coeffs[k])) w = w * Word(R, {Symbol::x(roots[k], coeffs[k])});
  return w;
}

}  // namespace

std::vector<Word> relative_generators(SystemType type, const Ideal& I) {
  const Ring& R = I.ring();
  auto ideal = enumerate_ideal(I);
  auto ring = enumerate_elements(R);
  std::vector<Word> out;
  out.reserve(RootSystem::get(type).size() * ideal.size() * ring.size());
  for (const auto& a : RootSystem::get(type).roots())
    for (const auto& xi : ideal)
      for (const auto& eta : ring) out.push_back(Word::z(a, xi, eta));
  return out;
}

std::string ConditionStar::summary() const {
  if (!required) return "not required";
  std::string s = holds() ? "holds" : "fails";
  s += residue_field_F2 ? "; residue field F2 present" : "; no residue field F2";
  if (theta) s += *theta ? "; theta condition true" : "; theta condition false";
  else s += "; theta condition undecided (infinite ring)";
  return s;
}

ConditionStar condition_star(SystemType type, const Ring& R) {
  ConditionStar c;
  c.required = type != SystemType::A2;
  c.residue_field_F2 = has_residue_field_F2(R);
  if (R.is_finite()) c.theta = theta_condition_holds(R);
  return c;
}

MixedGenerators mixed_commutator_generators(SystemType type, const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw Error(ErrorCode::MixedRings, "ideals of different rings");
  const Ring& R = I.ring();
  auto iv = enumerate_ideal(I), jv = enumerate_ideal(J), rv = enumerate_elements(R);
  MixedGenerators out;
  out.condition = condition_star(type, R);
  if (!out.condition.holds())
    out.warning = "condition (*) fails for " + R.to_string() + " (" + out.condition.summary() +
                  "); the generating set is listed but not claimed to generate";
  const Ideal IJ = I * J;
  for (int bullet = 1; bullet <= 3; ++bullet)
    for (const auto& a : RootSystem::get(type).roots())
      for (const auto& xi : iv)
        for (const auto& zeta : jv)
          for (const auto& eta : rv) {
            MixedGenerator g{bullet, Word(R), std::nullopt};
            if (bullet == 1) {
              g.word = commutator(Word::x(a, xi), Word::z(a, zeta, eta));
            } else if (bullet == 2) {
              g.word = commutator(Word::x(a, xi), Word::x(-a, zeta));
              g.certificate = Certificate::gen_commutator(Word::x(a, xi), Word::x(-a, zeta));
            } else {
              g.word = Word::z(a, xi * zeta, eta);
              g.certificate = Certificate::level_element(IJ);
            }
            out.generators.push_back(std::move(g));
          }
  return out;
}

CertifiedFactorization main_lemma_word(SystemType type, MainLemmaCase c, const Root& alpha, const RingElement& xi,
                                       const RingElement& zeta, const RingElement& eta, const Ideal& I,
                                       const Ideal& J) {
  const RootSystem& rs = RootSystem::get(type);
  rs.require(alpha);
  const Ring& R = xi.ring();
  if (!(zeta.ring() == R) || !(eta.ring() == R) || !(I.ring() == R) || !(J.ring() == R))
    throw Error(ErrorCode::MixedRings, "main lemma inputs live in different rings");
  std::pair<Root, Root> bg;
  try {
    bg = rs.decompose_for_case(alpha, c);
  } catch (const Error& e) {
    throw Error(ErrorCode::CaseMismatch, e.what());
  }
  const auto [beta, gamma] = bg;
  const SignNormalization& sn = normalization_for(type, c, alpha);
  const RepPtr& rep = sn.rep;

  CertifiedFactorization f{c, alpha, beta, gamma, sn, commutator(Word::x(alpha, xi), Word::z(alpha, zeta, eta)), {},
                           Word(R), ""};
  if (xi.is_zero() || zeta.is_zero() || eta.is_zero()) {
    f.identity = "target is trivially 1";
    return f;
  }

  const RingElement one = RingElement::from_int(R, 1);
  // x_a(-xi) = [x_p(a), x_q(b)] T
  Root p = c == MainLemmaCase::A2 ? beta : gamma;
  Root q = c == MainLemmaCase::A2 ? gamma : beta;
  RingElement b = c == MainLemmaCase::A2 ? -xi : xi;
  Word xp = Word::x(p, one), xq = Word::x(q, b);
  Word lead = commutator(xp, xq);

  auto tail_roots = product_roots(rs, beta, gamma, ProductOrder::IncreasingHeight);
  Matrix tm = (lead.inverse() * Word::x(alpha, -xi)).evaluate(rep).matrix();
  std::vector<Value> tc;
  try {
    tc = unipotent_coordinates(*rep, tm, tail_roots);
  } catch (const Error& e) {
    throw Error(ErrorCode::SignMismatch, "x_" + alpha.name() + "(-xi) is not [x_" + p.name() + "(1), x_" + q.name() +
                                             "(" + b.to_string() + ")] times a tail: " + e.what());
  }
  std::vector<Root> t_roots;
  std::vector<Value> t_coeffs;
  for (std::size_t k = 0; k < tail_roots.size(); ++k) {
    if (tail_roots[k] == alpha) {
      if (!R.is_zero(tc[k]))
        throw Error(ErrorCode::SignMismatch, "[x_" + p.name() + "(1), x_" + q.name() + "(" + b.to_string() +
                                                 ")] has x_" + alpha.name() + "-coefficient " +
                                                 R.format(R.sub(R.neg(xi.value()), tc[k])) + ", expected " +
                                                 (-xi).to_string());
      continue;
    }
    t_roots.push_back(tail_roots[k]);
    t_coeffs.push_back(tc[k]);
  }
  f.tail = letters_word(R, t_roots, t_coeffs);
  f.identity = "x_" + alpha.name() + "(-" + xi.to_string() + ")=[x_" + p.name() + "(1),x_" + q.name() + "(" +
               b.to_string() + ")]" + (f.tail.empty() ? "" : "*" + f.tail.to_string());

  // Residues of conjugation by z = z_a(zeta, eta). The functional h vanishes
  // on alpha, so z lies in the Levi factor and the residues stay in the
  // unipotent radicals on either side.
  std::array<int, 2> h{alpha.c2, -alpha.c1};
  if (dot(h, p) < 0) h = {-h[0], -h[1]};
  auto side = [&](int sgn) {
    std::vector<Root> out;
    for (const auto& r : rs.roots())
      if (dot(h, r) * sgn > 0) out.push_back(r);
    return out;
  };
  const Matrix zm = Word::z(alpha, zeta, eta).evaluate(rep).matrix();
  const Matrix zinv = Word::z(alpha, -zeta, eta).evaluate(rep).matrix();
  auto residue = [&](const Word& u, int sgn) {
    Matrix m = u.inverse().evaluate(rep).matrix() * zm * u.evaluate(rep).matrix() * zinv;
    auto roots = side(sgn);
    return letters_word(R, roots, unipotent_coordinates(*rep, m, roots));
  };
  Word w = residue(xp, 1);
  Word v = residue(xq, -1);
  Word zres(R);
  if (!f.tail.empty()) {
    int sgn = dot(h, t_roots.front()) > 0 ? 1 : -1;
    for (const auto& r : t_roots)
      if (dot(h, r) * sgn <= 0) throw Error(ErrorCode::ExtractionFailure, "tail roots on both sides of alpha");
    zres = residue(f.tail, sgn);
  }

  const Ideal IJ = I * J;
  if (!w.empty()) {
    Word y = xq * v;
    Word word = conjugate(conjugate(commutator(w, y), xp), Word::x(alpha, xi));
    Certificate cert = Certificate::conjugate_of(
        Certificate::conjugate_of(Certificate::gen_commutator(w, y), xp), Word::x(alpha, xi));
    f.factors.emplace_back(std::move(word), std::move(cert));
  }
  if (!v.empty()) {
    Word word = conjugate(commutator(xp, v), xq);
    Certificate cert = Certificate::conjugate_of(Certificate::level_element(IJ), xq);
    if (!f.tail.empty()) {
      word = conjugate(word, f.tail.inverse());
      cert = Certificate::conjugate_of(cert, f.tail.inverse());
    }
    f.factors.emplace_back(std::move(word), std::move(cert));
  }
  if (!zres.empty()) f.factors.emplace_back(zres, Certificate::level_element(IJ));
  return f;
}

SymbolicMainLemma symbolic_main_lemma(SystemType type, MainLemmaCase c, const Root& alpha) {
  static const Ring P = Ring::parse("Z[xi,zeta,eta]");
  Ideal I = Ideal::parse(P, "xi"), J = Ideal::parse(P, "zeta");
  auto f = main_lemma_word(type, c, alpha, RingElement::parse(P, "xi"), RingElement::parse(P, "zeta"),
                           RingElement::parse(P, "eta"), I, J);
  return {std::move(f), I, J};
}

SymbolicMainLemma symbolic_main_lemma(MainLemmaCase c) {
  return symbolic_main_lemma(RootSystem::home_system(c), c, RootSystem::canonical_root(c));
}

FactorizationCheck check_factorization(const CertifiedFactorization& f, const Ideal& I, const Ideal& J) {
  FactorizationCheck out;
  out.factor_count = f.factors.size();
  Word all(f.target.ring());
  for (const auto& [w, c] : f.factors) all = all * w;
  out.product_equal = all.evaluate(f.rep()) == f.target.evaluate(f.rep());
  out.certificates_valid = true;
  for (const auto& [w, c] : f.factors)
    if (!validate_certificate(c, w, I, J, f.rep())) out.certificates_valid = false;
  return out;
}

std::vector<std::pair<RingElement, RingElement>> unit_decompose(const Ring& R) {
  if (!R.is_finite()) throw Error(ErrorCode::InfiniteRing, "unit decomposition needs a finite ring, got " + R.to_string());
  if (has_residue_field_F2(R))
    throw Error(ErrorCode::ResidueFieldF2, R.to_string() + " has residue field F2, every theta^2-theta is a non-unit");
  const std::int64_t n = R.modulus();
  auto u = [&](std::int64_t t) { return R.reduce(t * t - t); };
  for (std::int64_t t = 0; t < n; ++t)
    if (std::int64_t inv = mod_inverse(u(t), n))
      return {{RingElement::from_int(R, t), RingElement::from_int(R, inv)}};
  if (n <= 4096)
    for (std::int64_t t1 = 0; t1 < n; ++t1)
      for (std::int64_t t2 = t1 + 1; t2 < n; ++t2) {
        if (gcd64(gcd64(u(t1), u(t2)), n) != 1) continue;
        for (std::int64_t r1 = 0; r1 < n; ++r1)
          for (std::int64_t r2 = 0; r2 < n; ++r2)
            if (R.reduce(r1 * u(t1) + r2 * u(t2)) == 1)
              return {{RingElement::from_int(R, t1), RingElement::from_int(R, r1)},
                      {RingElement::from_int(R, t2), RingElement::from_int(R, r2)}};
      }
  throw Error(ErrorCode::UnitDecompositionFailed, "no decomposition with at most two terms in " + R.to_string());
}

LongRootDecomposition long_root_decomposition(SystemType type, const Root& beta, const RingElement& xi,
                                              const Ideal& I) {
  const RootSystem& rs = RootSystem::get(type);
  rs.require(beta);
  if (type == SystemType::A2 || rs.is_long(beta))
    throw Error(ErrorCode::NotShortRoot, beta.name() + " is not a short root of " + std::string(to_string(type)));
  const Ring& R = xi.ring();
  if (!(I.ring() == R)) throw Error(ErrorCode::MixedRings, "ideal and coefficient rings differ");
  if (!I.contains(xi)) throw Error(ErrorCode::InvalidArgument, xi.to_string() + " is not in " + I.to_string());
  if (type == SystemType::G2 && has_residue_field_F2(R))
    throw Error(ErrorCode::ResidueFieldF2, R.to_string() + " has residue field F2");

  auto rep = Representation::standard(type);
  const auto& table = standard_table(type);
  LongRootDecomposition d{beta, Word(R), {}, {}, ""};
  if (xi.is_zero()) return d;
  const RingElement one = RingElement::from_int(R, 1);

  // alpha long, gamma short with beta = alpha + gamma (C2) or alpha + 2 gamma (G2)
  const int mult = type == SystemType::C2 ? 1 : 2;
  std::optional<std::pair<Root, Root>> ag;
  for (const auto& g : rs.roots()) {
    if (rs.is_long(g)) continue;
    Root a = beta - g * mult;
    if (!rs.contains(a) || !rs.is_long(a)) continue;
    if (!rs.contains(a + g * 2) || !rs.contains(beta + g)) continue;
    if (type == SystemType::G2 && !(rs.contains(a + g) && rs.contains(beta * 2 - g))) continue;
    ag = std::make_pair(a, g);
    break;
  }
  if (!ag) throw Error(ErrorCode::NoDecomposition, "no long/short pair for " + beta.name());
  const auto [alpha, gamma] = *ag;

  if (type == SystemType::C2) {
    // x_a(xi') ^{x_g(1)}x_a(-xi') = x_beta(xi) x_{beta+g}(*)
    auto s = RingElement::from_int(R, table.get(alpha, gamma, 1, 1) < 0 ? -1 : 1);
    RingElement xp = s * xi;
    Word P = Word::x(alpha, xp) * conjugate(Word::x(alpha, -xp), Word::x(gamma, one));
    Matrix m = (P.inverse() * Word::x(beta, xi)).evaluate(rep).matrix();
    std::vector<Root> rest{beta + gamma};
    d.word = P * letters_word(R, rest, unipotent_coordinates(*rep, m, rest));
    d.term_lengths.push_back(d.word.size());
    d.identity = "x_" + beta.name() + "(xi)=x_" + alpha.name() + "(" + (s.is_one() ? "" : "-") + "xi)*^{x_" +
                 gamma.name() + "(1)}x_" + alpha.name() + "(" + (s.is_one() ? "-" : "") + "xi)*x_" +
                 (beta + gamma).name() + "(c)";
    return d;
  }

  d.units = unit_decompose(R);
  auto s = RingElement::from_int(R, table.get(alpha, gamma, 1, 2) < 0 ? -1 : 1);
  for (const auto& [theta, r] : d.units) {
    RingElement xp = s * xi * r;
    RingElement part = xi * r * (theta * theta - theta);
    Word y = Word::x(alpha, xp) * conjugate(Word::x(alpha, -xp), Word::x(gamma, theta));
    Word zinv = conjugate(Word::x(alpha, xp * theta), Word::x(gamma, one)) * Word::x(alpha, -(xp * theta));
    Matrix m = (y.inverse() * Word::x(beta, part) * zinv.inverse()).evaluate(rep).matrix();
    std::vector<Root> middle{beta + gamma, beta * 2 - gamma};
    Word term = y * letters_word(R, middle, unipotent_coordinates(*rep, m, middle)) * zinv;
    d.term_lengths.push_back(term.size());
    d.word = d.word * term;
  }
  d.identity = "x_" + beta.name() + "(xi r(theta^2-theta))=[x_" + alpha.name() + "(xi'),x_" + gamma.name() +
               "(theta)]*x_" + (beta + gamma).name() + "(c1)*x_" + (beta * 2 - gamma).name() + "(c2)*[x_" +
               alpha.name() + "(xi' theta),x_" + gamma.name() + "(1)]^-1";
  return d;
}

LongRootCheck check_long_root(SystemType type, const LongRootDecomposition& d, const RingElement& xi, const Ideal& I) {
  const RootSystem& rs = RootSystem::get(type);
  auto rep = Representation::standard(type);
  const Ring& R = xi.ring();
  LongRootCheck out;
  out.evaluates = d.word.evaluate(rep) == x(rep, d.beta, xi);
  out.long_letters_only = true;
  out.coefficients_in_ideal = true;
  auto check_x = [&](const Symbol& s) {
    if (s.kind != Symbol::Kind::X || !rs.is_long(s.root)) {
      out.long_letters_only = false;
      return;
    }
    if (!I.contains(RingElement(R, s.c1))) out.coefficients_in_ideal = false;
  };
  for (const auto& s : d.word.letters()) {
    if (s.kind == Symbol::Kind::Conj) {
      for (const auto& t : s.base->letters()) check_x(t);
    } else {
      check_x(s);
    }
  }
  return out;
}

ParabolicData ParabolicData::make(SystemType type, int r) {
  if (r != 1 && r != 2) throw Error(ErrorCode::InvalidArgument, "simple root index must be 1 or 2");
  ParabolicData P;
  P.system = &RootSystem::get(type);
  P.r = r;
  Root ar = r == 1 ? Root{1, 0} : Root{0, 1};
  for (const auto& a : P.system->roots()) {
    if (a == ar || a == -ar) continue;
    (P.system->is_positive(a) ? P.u_roots : P.u_minus_roots).push_back(a);
  }
  P.levi_roots = {ar, -ar};
  return P;
}

LeviReport levi_commutator_check(const ParabolicData& P, const Ideal& I, const Ideal& J, std::size_t samples,
                                 bool minus, std::uint64_t seed) {
  if (!(I.ring() == J.ring())) throw Error(ErrorCode::MixedRings, "ideals of different rings");
  const Ring& R = I.ring();
  auto rep = Representation::standard(P.system->type());
  auto iv = enumerate_ideal(I), jv = enumerate_ideal(J);
  const Ideal IJ = I * J;
  const auto& roots = minus ? P.u_minus_roots : P.u_roots;

  std::vector<std::string> found(samples);
  parallel_for(samples, [&](std::size_t k) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + k);
    Word l(R), u(R);
    for (std::size_t n = rng() % 5; n > 0; --n) l = l * Word::x(P.levi_roots[rng() % 2], iv[rng() % iv.size()]);
    for (std::size_t n = 1 + rng() % 4; n > 0; --n) u = u * Word::x(roots[rng() % roots.size()], jv[rng() % jv.size()]);
    Matrix m = commutator(l, u).evaluate(rep).matrix();
    try {
      auto c = unipotent_coordinates(*rep, m, roots);
      for (std::size_t j = 0; j < c.size(); ++j)
        if (!IJ.contains(RingElement(R, c[j]))) {
          found[k] = "sample " + std::to_string(k) + ": coefficient of x_" + roots[j].name() + " is " + R.format(c[j]) +
                     ", not in " + IJ.to_string();
          return;
        }
    } catch (const Error& e) {
      found[k] = "sample " + std::to_string(k) + ": " + e.what();
    }
  });

  LeviReport rep_out{P.system->type(), P.r, minus, samples, 0, {}};
  for (const auto& s : found)
    if (!s.empty()) {
      ++rep_out.violations;
      if (rep_out.examples.size() < 5) rep_out.examples.push_back(s);
    }
  return rep_out;
}

}  // namespace chevlab
