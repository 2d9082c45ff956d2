#pragma once

// Integer matrix representations of the rank-2 elementary Chevalley groups.
//
//   A2: natural SL3, e_a1 = E01, e_a2 = E12.
//   C2: natural Sp4 on (v1, v2, v-2, v-1), e_a1 = E01 - E23, e_a2 = E12.
//   G2: 7-dim module plus the 14-dim adjoint module, block diagonal.
//
// All root vectors are generated from the simple ones by brackets, so the
// result is a Chevalley basis; divided powers are integral and checked.

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "chevlab/matrix.hpp"
#include "chevlab/rootsystem.hpp"

namespace chevlab {

class Representation {
 public:
  static std::shared_ptr<const Representation> standard(SystemType type);

  const RootSystem& system() const { return *system_; }
  SystemType type() const { return system_->type(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }

  const IntMatrix& nilpotent(const Root& a) const { return e_[system_->index(a)]; }
  // divided_powers(a)[k] = e_a^k / k!, k = 0..max; index 0 is the identity.
  const std::vector<IntMatrix>& divided_powers(const Root& a) const { return powers_[system_->index(a)]; }
  // Diagonal of [e_ai, e_-ai] for the simple roots.
  const std::array<std::vector<std::int64_t>, 2>& cartan_diagonals() const { return h_; }

  // Root whose weight is that of matrix entry (row, col), if any.
  std::optional<Root> entry_root(std::size_t row, std::size_t col) const;
  // A position where e_a has entry +1 or -1; every such entry has weight a.
  std::pair<std::size_t, std::size_t> pivot(const Root& a) const { return pivots_[system_->index(a)]; }

  // x_a(xi) -> x_a(eps_a xi); signs indexed like system().roots().
  std::shared_ptr<const Representation> reparametrized(const std::vector<int>& signs) const;
  const std::vector<int>& signs() const { return signs_; }

  // Gram matrix of the invariant alternating form (C2 only, else empty).
  const IntMatrix& symplectic_form() const { return form_; }

  Matrix x(const Root& a, const Value& xi, const Ring& ring) const;

 private:
  Representation() = default;

  const RootSystem* system_ = nullptr;
  std::size_t dim_ = 0;
  std::vector<std::size_t> blocks_;
  std::vector<IntMatrix> e_;
  std::vector<std::vector<IntMatrix>> powers_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
  std::vector<int> entry_roots_;
  std::array<std::vector<std::int64_t>, 2> h_;
  std::vector<int> signs_;
  IntMatrix form_;

  void finish();
};

using RepPtr = std::shared_ptr<const Representation>;

class GroupElement {
 public:
  GroupElement(RepPtr rep, Matrix m) : rep_(std::move(rep)), m_(std::move(m)) {}
  static GroupElement identity(RepPtr rep, const Ring& ring) {
    std::size_t d = rep->dim();
    return {std::move(rep), Matrix::identity(ring, d)};
  }

  const Representation& rep() const { return *rep_; }
  const RepPtr& rep_ptr() const { return rep_; }
  const Ring& ring() const { return m_.ring(); }
  const Matrix& matrix() const { return m_; }

  GroupElement operator*(const GroupElement& o) const { return {rep_, m_ * o.m_}; }
  bool is_identity() const { return m_.is_identity(); }
  bool operator==(const GroupElement& o) const { return m_ == o.m_; }

 private:
  RepPtr rep_;
  Matrix m_;
};

GroupElement x(const RepPtr& rep, const Root& a, const RingElement& xi);
// x_{-a}(eta) x_a(xi) x_{-a}(-eta)
GroupElement z(const RepPtr& rep, const Root& a, const RingElement& xi, const RingElement& eta);

GroupElement reduce_mod(const GroupElement& g, const Ideal& ideal);
bool congruence_level_test(const GroupElement& g, const Ideal& ideal);
// reduce_mod(g, I) commutes with every x_a(t), t in R/I.
bool central_mod_test(const GroupElement& g, const Ideal& ideal);

// Coordinates c with prod_{d in roots, in the given order} x_d(c_d) == m.
// Throws ExtractionFailure when m is not such a product.
std::vector<Value> unipotent_coordinates(const Representation& rep, const Matrix& m,
                                         const std::vector<Root>& roots);

// Integral linear functional positive on every root of the set.
std::optional<std::array<int, 2>> positive_functional(const std::vector<Root>& roots);

}  // namespace chevlab
