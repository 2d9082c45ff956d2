#include "chevlab/repr.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace chevlab {

namespace {

IntMatrix unit(std::size_t dim, std::initializer_list<std::tuple<std::size_t, std::size_t, std::int64_t>> entries) {
  IntMatrix m(dim);
  for (auto [i, j, v] : entries) m(i, j) = v;
  return m;
}

[[noreturn]] void construction_failure(const std::string& what) {
  throw Error(ErrorCode::ExtractionFailure, "representation construction: " + what);
}

IntMatrix divide_or_fail(const IntMatrix& m, std::int64_t k, const std::string& what) {
  IntMatrix out;
  if (!m.divide_exact(k, out)) construction_failure(what + " is not integral");
  return out;
}

// Root vectors for every root (indexed like rs.roots()), grown from the
// simple ones by e_{d} = [e_ai, e_{d-ai}] / (p+1).
std::vector<IntMatrix> chevalley_basis(const RootSystem& rs, const IntMatrix& e1, const IntMatrix& e2,
                                       const IntMatrix& f1, const IntMatrix& f2) {
  const Root a1{1, 0}, a2{0, 1};
  std::vector<IntMatrix> e(rs.size());
  e[rs.index(a1)] = e1;
  e[rs.index(a2)] = e2;
  e[rs.index(-a1)] = f1;
  e[rs.index(-a2)] = f2;
  for (const auto& d : rs.positive_roots()) {
    if (d.height() < 2) continue;
    Root ai = rs.contains(d - a1) && rs.is_positive(d - a1) ? a1 : a2;
    Root rest = d - ai;
    if (!rs.contains(rest)) construction_failure("no simple predecessor for " + d.name());
    int p = rs.root_string(ai, rest).first;
    IntMatrix E = divide_or_fail(bracket(e[rs.index(ai)], e[rs.index(rest)]), p + 1, "e_" + d.name());
    IntMatrix F = divide_or_fail(bracket(e[rs.index(-ai)], e[rs.index(-rest)]), p + 1, "e_-" + d.name());
    IntMatrix h = bracket(E, F);
    IntMatrix he = bracket(h, E);
    if (he == E * 2) {
    } else if (he == E * -2) {
      F = F * -1;
    } else {
      construction_failure("[e, f] is not a coroot for " + d.name());
    }
    e[rs.index(d)] = E;
    e[rs.index(-d)] = F;
  }
  return e;
}

// The adjoint module on the basis (e_d for d in roots(), h1, h2).
std::vector<IntMatrix> adjoint_block(const RootSystem& rs, const std::vector<IntMatrix>& e) {
  std::vector<IntMatrix> basis = e;
  basis.push_back(bracket(e[rs.index({1, 0})], e[rs.index({-1, 0})]));
  basis.push_back(bracket(e[rs.index({0, 1})], e[rs.index({0, -1})]));
  const std::size_t n = basis.size(), d = e[0].dim();

  std::vector<std::pair<std::size_t, std::size_t>> piv;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    bool found = false;
    for (std::size_t i = 0; i < d && !found; ++i)
      for (std::size_t j = 0; j < d && !found; ++j)
        if (e[r](i, j) != 0) {
          piv.emplace_back(i, j);
          found = true;
        }
  }
  const IntMatrix& h1 = basis[n - 2];
  const IntMatrix& h2 = basis[n - 1];
  // two diagonal positions on which h1, h2 are independent
  std::size_t p = 0, q = 0;
  std::int64_t det = 0;
  for (std::size_t a = 0; a < d && det == 0; ++a)
    for (std::size_t b = a + 1; b < d && det == 0; ++b)
      if ((det = h1(a, a) * h2(b, b) - h1(b, b) * h2(a, a)) != 0) {
        p = a;
        q = b;
      }
  if (det == 0) construction_failure("degenerate Cartan subalgebra");

  auto coords = [&](IntMatrix m) {
    std::vector<std::int64_t> c(n, 0);
    for (std::size_t r = 0; r < rs.size(); ++r) {
      auto [i, j] = piv[r];
      if (m(i, j) % e[r](i, j) != 0) construction_failure("adjoint coordinates");
      c[r] = m(i, j) / e[r](i, j);
      m = m - e[r] * c[r];
    }
    std::int64_t an = m(p, p) * h2(q, q) - m(q, q) * h2(p, p);
    std::int64_t bn = h1(p, p) * m(q, q) - h1(q, q) * m(p, p);
    if (an % det || bn % det) construction_failure("adjoint coordinates");
    c[n - 2] = an / det;
    c[n - 1] = bn / det;
    m = m - h1 * c[n - 2] - h2 * c[n - 1];
    if (!m.is_zero()) construction_failure("adjoint coordinates do not reconstruct");
    return c;
  };

  std::vector<IntMatrix> ad;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    IntMatrix a(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto c = coords(bracket(e[r], basis[k]));
      for (std::size_t j = 0; j < n; ++j) a(j, k) = c[j];
    }
    ad.push_back(a);
  }
  return ad;
}

}  // namespace

std::shared_ptr<const Representation> Representation::standard(SystemType type) {
  static const auto build = [](SystemType t) {
    std::shared_ptr<Representation> r(new Representation());
    r->system_ = &RootSystem::get(t);
    const RootSystem& rs = *r->system_;
    switch (t) {
      case SystemType::A2: {
        IntMatrix e1 = unit(3, {{0, 1, 1}}), e2 = unit(3, {{1, 2, 1}});
        r->e_ = chevalley_basis(rs, e1, e2, e1.transpose(), e2.transpose());
        r->blocks_ = {3};
        break;
      }
      case SystemType::C2: {
        IntMatrix e1 = unit(4, {{0, 1, 1}, {2, 3, -1}}), e2 = unit(4, {{1, 2, 1}});
        r->e_ = chevalley_basis(rs, e1, e2, e1.transpose(), e2.transpose());
        r->blocks_ = {4};
        r->form_ = unit(4, {{0, 3, 1}, {1, 2, 1}, {2, 1, -1}, {3, 0, -1}});
        break;
      }
      case SystemType::G2: {
        IntMatrix e1 = unit(7, {{0, 1, 1}, {2, 3, 2}, {3, 4, 1}, {5, 6, 1}});
        IntMatrix f1 = unit(7, {{1, 0, 1}, {3, 2, 1}, {4, 3, 2}, {6, 5, 1}});
        IntMatrix e2 = unit(7, {{1, 2, 1}, {4, 5, 1}});
        auto small = chevalley_basis(rs, e1, e2, f1, e2.transpose());
        auto ad = adjoint_block(rs, small);
        for (std::size_t k = 0; k < small.size(); ++k) r->e_.push_back(IntMatrix::direct_sum(small[k], ad[k]));
        r->blocks_ = {7, 14};
        break;
      }
    }
    r->dim_ = r->e_.front().dim();
    r->signs_.assign(rs.size(), 1);
    r->finish();
    return std::shared_ptr<const Representation>(r);
  };
  static const RepPtr a2 = build(SystemType::A2);
  static const RepPtr c2 = build(SystemType::C2);
  static const RepPtr g2 = build(SystemType::G2);
  switch (type) {
    case SystemType::A2: return a2;
    case SystemType::C2: return c2;
    case SystemType::G2: return g2;
  }
  return a2;
}

void Representation::finish() {
  const RootSystem& rs = *system_;
  h_[0].assign(dim_, 0);
  h_[1].assign(dim_, 0);
  for (int s = 0; s < 2; ++s) {
    Root a = s == 0 ? Root{1, 0} : Root{0, 1};
    IntMatrix h = bracket(nilpotent(a), nilpotent(-a));
    if (!h.is_diagonal()) construction_failure("Cartan element not diagonal");
    for (std::size_t i = 0; i < dim_; ++i) h_[s][i] = h(i, i);
  }

  entry_roots_.assign(dim_ * dim_, -1);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      std::array<int, 2> w{static_cast<int>(h_[0][i] - h_[0][j]), static_cast<int>(h_[1][i] - h_[1][j])};
      for (std::size_t r = 0; r < rs.size(); ++r)
        if (rs.coroot_pairings(rs.roots()[r]) == w) entry_roots_[i * dim_ + j] = static_cast<int>(r);
    }

  powers_.clear();
  pivots_.clear();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const IntMatrix& e = e_[r];
    const Root& a = rs.roots()[r];
    std::vector<IntMatrix> pw{IntMatrix::identity(dim_)};
    for (std::int64_t k = 1;; ++k) {
      if (k > static_cast<std::int64_t>(dim_)) construction_failure("e_" + a.name() + " is not nilpotent");
      IntMatrix next = divide_or_fail(pw.back() * e, k, "divided power of e_" + a.name());
      if (next.is_zero()) break;
      pw.push_back(std::move(next));
    }
    powers_.push_back(std::move(pw));

    bool found = false;
    for (std::size_t i = 0; i < dim_ && !found; ++i)
      for (std::size_t j = 0; j < dim_ && !found; ++j) {
        if (e(i, j) == 0) continue;
        if (entry_roots_[i * dim_ + j] != static_cast<int>(r))
          construction_failure("e_" + a.name() + " has an entry of the wrong weight");
        if (std::abs(e(i, j)) == 1) {
          pivots_.emplace_back(i, j);
          found = true;
        }
      }
    if (!found) construction_failure("e_" + a.name() + " has no unit entry");

    if (form_.dim() != 0 && !(e.transpose() * form_ + form_ * e).is_zero())
      construction_failure("e_" + a.name() + " does not preserve the symplectic form");
  }
}

std::optional<Root> Representation::entry_root(std::size_t row, std::size_t col) const {
  int r = entry_roots_[row * dim_ + col];
  if (r < 0) return std::nullopt;
  return system_->roots()[static_cast<std::size_t>(r)];
}

std::shared_ptr<const Representation> Representation::reparametrized(const std::vector<int>& signs) const {
  if (signs.size() != system_->size()) throw Error(ErrorCode::InvalidArgument, "sign vector has wrong length");
  std::shared_ptr<Representation> r(new Representation(*this));
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] != 1 && signs[k] != -1) throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1");
    r->signs_[k] *= signs[k];
    if (signs[k] == 1) continue;
    r->e_[k] = r->e_[k] * -1;
    for (std::size_t p = 1; p < r->powers_[k].size(); p += 2) r->powers_[k][p] = r->powers_[k][p] * -1;
  }
  return r;
}

Matrix Representation::x(const Root& a, const Value& xi, const Ring& ring) const {
  Matrix m = Matrix::identity(ring, dim_);
  if (ring.is_zero(xi)) return m;
  const auto& pw = divided_powers(a);
  Value t = xi;
  for (std::size_t k = 1; k < pw.size(); ++k) {
    m.add_scaled(t, pw[k]);
    if (k + 1 < pw.size()) t = ring.mul(t, xi);
  }
  return m;
}

GroupElement x(const RepPtr& rep, const Root& a, const RingElement& xi) {
  return {rep, rep->x(a, xi.value(), xi.ring())};
}

GroupElement z(const RepPtr& rep, const Root& a, const RingElement& xi, const RingElement& eta) {
  if (!(xi.ring() == eta.ring())) throw Error(ErrorCode::MixedRings, "z generator coefficients");
  return x(rep, -a, eta) * x(rep, a, xi) * x(rep, -a, -eta);
}

GroupElement reduce_mod(const GroupElement& g, const Ideal& ideal) {
  if (!(g.ring() == ideal.ring())) throw Error(ErrorCode::MixedRings, "reduce_mod");
  Quotient q = quotient(ideal);
  return {g.rep_ptr(), g.matrix().map(q.target, q)};
}

bool congruence_level_test(const GroupElement& g, const Ideal& ideal) {
  const Matrix& m = g.matrix();
  const Ring& R = g.ring();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Value v = i == j ? R.sub(m.at(i, j), R.one()) : m.at(i, j);
      if (!R.is_zero(v) && !ideal.contains(RingElement(R, v))) return false;
    }
  return true;
}

bool central_mod_test(const GroupElement& g, const Ideal& ideal) {
  GroupElement h = reduce_mod(g, ideal);
  const auto elements = enumerate_elements(h.ring());
  for (const auto& a : h.rep().system().roots())
    for (const auto& t : elements) {
      GroupElement u = x(h.rep_ptr(), a, t);
      if (!(h * u == u * h)) return false;
    }
  return true;
}

std::optional<std::array<int, 2>> positive_functional(const std::vector<Root>& roots) {
  for (int s = 1; s <= 8; ++s)
    for (int a = -s; a <= s; ++a)
      for (int b : {s - std::abs(a), std::abs(a) - s}) {
        bool ok = std::all_of(roots.begin(), roots.end(), [&](const Root& r) { return a * r.c1 + b * r.c2 > 0; });
        if (ok) return std::array<int, 2>{a, b};
      }
  return std::nullopt;
}

std::vector<Value> unipotent_coordinates(const Representation& rep, const Matrix& m, const std::vector<Root>& roots) {
  const Ring& R = m.ring();
  std::vector<Value> c(roots.size(), R.zero());
  if (roots.empty()) {
    if (!m.is_identity()) throw Error(ErrorCode::ExtractionFailure, "matrix is not the identity");
    return c;
  }
  auto h = positive_functional(roots);
  if (!h) throw Error(ErrorCode::ExtractionFailure, "roots do not lie in an open half-plane");
  for (const auto& r : roots) rep.system().require(r);

  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  auto level = [&](std::size_t k) { return (*h)[0] * roots[k].c1 + (*h)[1] * roots[k].c2; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return level(a) < level(b); });

  auto product = [&] {
    Matrix p = Matrix::identity(R, rep.dim());
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (!R.is_zero(c[k])) p = p * rep.x(roots[k], c[k], R);
    return p;
  };
  for (std::size_t k : order) {
    Matrix p = product();
    auto [i, j] = rep.pivot(roots[k]);
    Value diff = R.sub(m.at(i, j), p.at(i, j));
    c[k] = R.scale(diff, rep.nilpotent(roots[k])(i, j));
  }
  if (!(product() == m)) throw Error(ErrorCode::ExtractionFailure, "matrix does not factor over the given roots");
  return c;
}

}  // namespace chevlab
