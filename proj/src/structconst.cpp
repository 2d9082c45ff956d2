#include "chevlab/structconst.hpp"

#include <algorithm>

namespace chevlab {

namespace {

const Ring& symbolic_ring() {
  static const Ring P = Ring::parse("Z[s,t]");
  return P;
}

std::tuple<int, int, int, int, int, int> key(const Root& a, const Root& b, int i, int j) {
  return {a.c1, a.c2, b.c1, b.c2, i, j};
}

int sign(std::int64_t v) { return v < 0 ? -1 : 1; }

// Displayed constants per case, keyed by (i, j).
std::vector<std::tuple<int, int, std::int64_t>> displayed_constants(MainLemmaCase c) {
  switch (c) {
    case MainLemmaCase::A2: return {{1, 1, 1}};
    case MainLemmaCase::C2Long:
    case MainLemmaCase::C2Short: return {{1, 1, 1}, {1, 2, 1}};
    case MainLemmaCase::G2Short: return {{1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 2}};
  }
  return {};
}

bool matches(const std::vector<StructureConstant>& got, const std::vector<std::tuple<int, int, std::int64_t>>& want,
             bool up_to_sign) {
  if (got.size() != want.size()) return false;
  for (const auto& [i, j, n] : want) {
    auto it = std::find_if(got.begin(), got.end(), [&](const StructureConstant& s) { return s.i == i && s.j == j; });
    if (it == got.end()) return false;
    if (up_to_sign ? (it->n != n && it->n != -n) : it->n != n) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ProductOrder o) {
  return o == ProductOrder::IncreasingHeight ? "increasing-height" : "decreasing-height";
}

StructureConstantTable::StructureConstantTable(RepPtr rep, std::vector<StructureConstant> entries)
    : rep_(std::move(rep)), entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& e = entries_[k];
    index_[key(e.alpha, e.beta, e.i, e.j)] = k;
  }
}

std::int64_t StructureConstantTable::get(const Root& a, const Root& b, int i, int j) const {
  const RootSystem& rs = rep_->system();
  rs.require(a);
  rs.require(b);
  if (a == -b) throw Error(ErrorCode::OppositeRoots, "no constant for " + a.name() + ", " + b.name());
  auto it = index_.find(key(a, b, i, j));
  if (it == index_.end())
    throw Error(ErrorCode::NotARoot, std::to_string(i) + "(" + a.name() + ")+" + std::to_string(j) + "(" + b.name() +
                                         ") is not a root");
  return entries_[it->second].n;
}

std::vector<StructureConstant> StructureConstantTable::pair(const Root& a, const Root& b) const {
  std::vector<StructureConstant> out;
  for (const auto& r : product_roots(rep_->system(), a, b, ProductOrder::IncreasingHeight)) {
    auto [i, j] = *coordinates_in(r, a, b);
    out.push_back({a, b, i, j, get(a, b, i, j)});
  }
  return out;
}

std::vector<Root> product_roots(const RootSystem& rs, const Root& a, const Root& b, ProductOrder order) {
  std::vector<Root> out;
  if (a == b || a == -b) return out;
  for (auto [i, j] : rs.commutator_terms(a, b)) out.push_back(a * i + b * j);
  if (order == ProductOrder::DecreasingHeight) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<StructureConstant> pair_constants(const Representation& rep, const Root& a, const Root& b,
                                              ProductOrder order) {
  const Ring& P = symbolic_ring();
  const RootSystem& rs = rep.system();
  if (a == -b) throw Error(ErrorCode::OppositeRoots, a.name() + " and " + b.name());
  Value s = P.variable(0), t = P.variable(1);
  Matrix m = rep.x(a, s, P) * rep.x(b, t, P) * rep.x(a, P.neg(s), P) * rep.x(b, P.neg(t), P);
  auto roots = product_roots(rs, a, b, order);
  auto coeffs = unipotent_coordinates(rep, m, roots);
  std::vector<StructureConstant> out;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto [i, j] = *coordinates_in(roots[k], a, b);
    const Value& c = coeffs[k];
    bool ok = c.terms.size() == 1 && c.terms[0].mono.exp[0] == i && c.terms[0].mono.exp[1] == j &&
              c.terms[0].mono.degree() == static_cast<unsigned>(i + j);
    if (!ok)
      throw Error(ErrorCode::ExtractionFailure, "coefficient of x_" + roots[k].name() + " in [x_" + a.name() +
                                                    "(s), x_" + b.name() + "(t)] is " + P.format(c));
    out.push_back({a, b, i, j, c.terms[0].coeff});
  }
  return out;
}

StructureConstantTable compute_table(const RepPtr& rep) {
  std::vector<StructureConstant> all;
  const auto& roots = rep->system().roots();
  for (const auto& a : roots)
    for (const auto& b : roots) {
      if (a == b || a == -b) continue;
      auto pc = pair_constants(*rep, a, b, ProductOrder::IncreasingHeight);
      all.insert(all.end(), pc.begin(), pc.end());
    }
  return StructureConstantTable(rep, std::move(all));
}

const StructureConstantTable& standard_table(SystemType type) {
  static const StructureConstantTable a2 = compute_table(Representation::standard(SystemType::A2));
  static const StructureConstantTable c2 = compute_table(Representation::standard(SystemType::C2));
  static const StructureConstantTable g2 = compute_table(Representation::standard(SystemType::G2));
  switch (type) {
    case SystemType::A2: return a2;
    case SystemType::C2: return c2;
    case SystemType::G2: return g2;
  }
  return a2;
}

Word chevalley_commutator_word(const StructureConstantTable& table, const Root& a, const Root& b,
                               const RingElement& s, const RingElement& t) {
  if (!(s.ring() == t.ring())) throw Error(ErrorCode::MixedRings, "commutator coefficients");
  const RootSystem& rs = table.rep().system();
  rs.require(a);
  rs.require(b);
  if (a == -b) throw Error(ErrorCode::OppositeRoots, "commutator formula does not apply to " + a.name() + ", " + b.name());
  Word w(s.ring());
  if (a == b) return w;
  for (const auto& c : table.pair(a, b)) {
    RingElement coeff = RingElement::from_int(s.ring(), c.n) * s.pow(c.i) * t.pow(c.j);
    if (!coeff.is_zero()) w = w * Word::x(a * c.i + b * c.j, coeff);
  }
  return w;
}

SignNormalization normalize_signs(const StructureConstantTable& table, MainLemmaCase c) {
  return normalize_signs(table, c, RootSystem::canonical_root(c));
}

SignNormalization normalize_signs(const StructureConstantTable& table, MainLemmaCase c, const Root& alpha) {
  const RootSystem& rs = table.rep().system();
  auto [beta, gamma] = rs.decompose_for_case(alpha, c);
  const auto want = displayed_constants(c);
  for (auto order : {ProductOrder::IncreasingHeight, ProductOrder::DecreasingHeight}) {
    auto got = order == ProductOrder::IncreasingHeight ? table.pair(beta, gamma)
                                                       : pair_constants(table.rep(), beta, gamma, order);
    if (!matches(got, want, true)) continue;
    std::vector<int> signs(rs.size(), 1);
    for (const auto& k : got) {
      std::int64_t target = 0;
      for (const auto& [i, j, n] : want)
        if (i == k.i && j == k.j) target = n;
      signs[rs.index(beta * k.i + gamma * k.j)] = sign(k.n) * sign(target);
    }
    RepPtr rep = table.rep().reparametrized(signs);
    auto displayed = pair_constants(*rep, beta, gamma, order);
    if (!matches(displayed, want, false))
      throw Error(ErrorCode::NormalizationImpossible, "reparametrization did not reach the displayed constants");
    return {c, alpha, beta, gamma, rep->signs(), order, displayed, rep};
  }
  throw Error(ErrorCode::NormalizationImpossible, std::string(to_string(c)) + " constants for (" + beta.name() + ", " +
                                                      gamma.name() + ") differ in absolute value from the display");
}

std::vector<std::pair<MainLemmaCase, Root>> main_lemma_instances(SystemType type) {
  const RootSystem& rs = RootSystem::get(type);
  std::vector<std::pair<MainLemmaCase, Root>> out;
  for (const auto& a : rs.roots()) {
    MainLemmaCase c = MainLemmaCase::A2;
    if (type == SystemType::C2) c = rs.is_long(a) ? MainLemmaCase::C2Long : MainLemmaCase::C2Short;
    if (type == SystemType::G2) c = rs.is_long(a) ? MainLemmaCase::A2 : MainLemmaCase::G2Short;
    out.emplace_back(c, a);
  }
  return out;
}

GlobalNormalization find_global_normalization(const StructureConstantTable& table,
                                              const std::vector<std::pair<MainLemmaCase, Root>>& instances) {
  const RootSystem& rs = table.rep().system();
  if (table.rep().signs() != std::vector<int>(rs.size(), 1))
    throw Error(ErrorCode::InvalidArgument, "global normalization expects the standard parametrization");
  // Each constraint: eps_d * eps_b^i * eps_g^j = required sign.
  struct Constraint {
    std::size_t d, b, g;
    int i, j, want;
  };
  std::vector<Constraint> cons;
  for (const auto& [c, alpha] : instances) {
    SignNormalization sn = normalize_signs(table, c, alpha);
    auto base = pair_constants(table.rep(), sn.beta, sn.gamma, sn.order);
    for (const auto& k : base)
      cons.push_back({rs.index(sn.beta * k.i + sn.gamma * k.j), rs.index(sn.beta), rs.index(sn.gamma), k.i, k.j,
                      sign(k.n)});
  }
  GlobalNormalization out;
  out.instances = instances;
  const std::size_t n = rs.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto eps = [&](std::size_t k) { return (mask >> k) & 1u ? -1 : 1; };
    bool ok = std::all_of(cons.begin(), cons.end(), [&](const Constraint& c) {
      int v = eps(c.d) * (c.i % 2 ? eps(c.b) : 1) * (c.j % 2 ? eps(c.g) : 1);
      return v == c.want;
    });
    if (ok) {
      out.exists = true;
      for (std::size_t k = 0; k < n; ++k) out.signs.push_back(eps(k));
      break;
    }
  }
  return out;
}

bool SteinbergReport::all_pass() const {
  auto ok = [](const RelationResult& r) { return r.pass; };
  return std::all_of(additivity.begin(), additivity.end(), ok) &&
         std::all_of(commutators.begin(), commutators.end(), ok);
}

SteinbergReport verify_steinberg(const RepPtr& rep) {
  const Ring& P = symbolic_ring();
  const auto& roots = rep->system().roots();
  SteinbergReport report{rep->type(), {}, {}};
  RingElement s(P, P.variable(0)), t(P, P.variable(1));
  for (const auto& a : roots) {
    bool pass = x(rep, a, s) * x(rep, a, t) == x(rep, a, s + t);
    report.additivity.push_back({"x_" + a.name() + "(s)x_" + a.name() + "(t)=x_" + a.name() + "(s+t)", pass});
  }
  std::optional<StructureConstantTable> table;
  std::string failure;
  try {
    table = compute_table(rep);
  } catch (const Error& e) {
    failure = e.what();
  }
  for (const auto& a : roots)
    for (const auto& b : roots) {
      if (a == b || a == -b) continue;
      std::string name = "[x_" + a.name() + "(s),x_" + b.name() + "(t)]";
      bool pass = false;
      if (table) {
        Word rhs = chevalley_commutator_word(*table, a, b, s, t);
        Word lhs = commutator(Word::x(a, s), Word::x(b, t));
        pass = lhs.evaluate(rep) == rhs.evaluate(rep);
      } else {
        name += " (" + failure + ")";
      }
      report.commutators.push_back({name, pass});
    }
  return report;
}

}  // namespace chevlab
