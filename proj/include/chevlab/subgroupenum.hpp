#pragma once

// Brute-force subgroup enumeration over Z/n for A2 (3x3) and C2 (4x4).
//
// Elements are stored as small residue matrices keyed by their base-n
// encoding. Closures grow incrementally: a generator is only added when it
// is not already a member, and then only the new cosets are expanded.
// G2 (21x21, kernels of order 3^14 and up) is rejected with UnsupportedType.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "chevlab/factorizer.hpp"

namespace chevlab {

using ModElem = std::array<std::uint8_t, 16>;
using ModKey = unsigned __int128;

struct ModKeyHash {
  std::size_t operator()(ModKey k) const noexcept;
};

// G(type, Z/n) in the standard representation.
class Ambient {
 public:
  Ambient(SystemType type, const Ring& R);

  SystemType type() const { return type_; }
  const Ring& ring() const { return ring_; }
  const RepPtr& rep() const { return rep_; }
  std::size_t dim() const { return dim_; }
  std::int64_t modulus() const { return n_; }

  ModElem identity() const;
  ModElem scalar(std::int64_t s) const;
  ModElem from_matrix(const Matrix& m) const;
  ModElem evaluate(const Word& w) const;
  ModElem mul(const ModElem& a, const ModElem& b) const;
  ModElem inverse(const ModElem& a) const;
  ModElem conj(const ModElem& g, const ModElem& by) const { return mul(mul(by, g), inverse(by)); }
  ModElem commutator(const ModElem& a, const ModElem& b) const {
    return mul(mul(a, b), mul(inverse(a), inverse(b)));
  }
  ModKey key(const ModElem& a) const;
  std::uint8_t at(const ModElem& a, std::size_t i, std::size_t j) const { return a[i * dim_ + j]; }
  // g == 1 mod d
  bool congruent_identity(const ModElem& a, std::int64_t d) const;
  // Determinant 1 (A2) or preserves the symplectic form (C2).
  bool in_group(const ModElem& a) const;
  std::string format(const ModElem& a) const;

 private:
  SystemType type_;
  Ring ring_;
  RepPtr rep_;
  std::size_t dim_;
  std::int64_t n_;
  IntMatrix form_;
};

class EnumeratedSubgroup {
 public:
  explicit EnumeratedSubgroup(const Ambient& amb);

  const Ambient& ambient() const { return *amb_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ModElem>& elements() const { return elements_; }
  // Generators actually used by the closure (redundant ones are skipped).
  const std::vector<ModElem>& generators() const { return gens_; }
  bool contains(const ModElem& g) const { return keys_.count(amb_->key(g)) > 0; }
  bool same_set(const EnumeratedSubgroup& o) const;
  bool subset_of(const EnumeratedSubgroup& o) const;

  // Adds g and closes under right multiplication by all generators.
  // Returns false if g was already a member.
  bool add_generator(const ModElem& g, std::size_t bound);
  // Adds an element without closing; used for direct enumerations.
  void insert_raw(const ModElem& g);
  void set_generators(std::vector<ModElem> g) { gens_ = std::move(g); }

 private:
  const Ambient* amb_;
  std::vector<ModElem> elements_;
  std::unordered_set<ModKey, ModKeyHash> keys_;
  std::vector<ModElem> gens_;
};

struct Bounds {
  std::size_t elements = 1000000;
  std::uint64_t candidates = 100000000;
};

// Distinct elements, in first-occurrence order.
std::vector<ModElem> dedupe(const Ambient& amb, const std::vector<ModElem>& gs);
std::vector<ModElem> evaluate_all(const Ambient& amb, const std::vector<Word>& ws);

EnumeratedSubgroup closure(const Ambient& amb, const std::vector<ModElem>& gens, std::size_t bound);
EnumeratedSubgroup closure(const Ambient& amb, const std::vector<Word>& gens, std::size_t bound);
EnumeratedSubgroup normal_closure(const Ambient& amb, const std::vector<ModElem>& seeds,
                                  const std::vector<ModElem>& conjugators, std::size_t bound);
// Normal closure in <H, K> of the commutators [h, k] of generators.
EnumeratedSubgroup commutator_subgroup(const Ambient& amb, const std::vector<ModElem>& H,
                                       const std::vector<ModElem>& K, std::size_t bound);

// G(R, I) by listing 1 + d M and filtering.
EnumeratedSubgroup enumerate_congruence_subgroup(const Ambient& amb, const Ideal& I, const Bounds& b);
// Centre of G(R/I), found by brute centralizer of the elementary closure.
std::vector<ModElem> center_of_quotient(const Ambient& amb, const Ideal& I, std::size_t bound,
                                        std::size_t* quotient_order = nullptr);
// C(R, I): scalar lifts of the centre of G(R/I) times G(R, I).
EnumeratedSubgroup enumerate_full_congruence(const Ambient& amb, const Ideal& I, const Bounds& b);

// True if s * g stays inside for every element s and generator g.
bool closure_audit(const EnumeratedSubgroup& H);

// x_a(xi), a in Phi, xi in I nonzero.
std::vector<Word> elementary_generators(SystemType type, const Ideal& I);

// T1  [E(I),E(J)] = [E(R,I),E(R,J)]
// T2  [E(I),C(R,J)] = [E(I),E(J)]
// T3  E(I) is normal in C(R,I)
// O1  E(R,IJ) <= [E(I),E(J)]
// O2  [E(I),E(J)] is normalized by every x_a(t), t in R
enum class Statement { T1, T2, T3, O1, O2 };
std::string_view to_string(Statement s);
Statement parse_statement(std::string_view s);

struct NamedCheck {
  std::string name;
  bool pass = false;
};

struct TheoremReport {
  Statement stmt;
  SystemType system;
  std::string ring, ideal_i, ideal_j;
  bool verdict = false;
  std::vector<std::pair<std::string, std::size_t>> cardinalities;
  std::vector<NamedCheck> checks;  // the verdict is the conjunction
  std::string condition_star;
  std::string generator_hash;  // FNV-1a of the generator lists
  std::vector<std::pair<std::string, double>> timings;  // seconds, not part of the verdict
};

// G2 throws UnsupportedType: its smallest usable congruence kernels are out
// of reach for brute force.
TheoremReport verify_theorem(Statement stmt, SystemType type, const Ideal& I, const Ideal& J, const Bounds& b);

inline constexpr const char* kG2OutOfScale =
    "G2 subgroup enumeration is out of desk scale: the smallest congruence kernel allowed by condition (*) "
    "has about 3^14 elements of 21x21 matrices; G2 is covered by the symbolic checks and the finite-ring "
    "evaluation of its factorizations";

}  // namespace chevlab
