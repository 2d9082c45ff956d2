#pragma once

// Structure constants N_{a b i j} of the Chevalley commutator formula
//
//   [x_a(s), x_b(t)] = prod x_{ia+jb}(N_{abij} s^i t^j),
//
// read off the representation by factoring the symbolic commutator over
// Z[s,t]. The product is taken in increasing height (ties by coordinates);
// for G2 the constants depend on that order.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "chevlab/repr.hpp"
#include "chevlab/words.hpp"

namespace chevlab {

enum class ProductOrder { IncreasingHeight, DecreasingHeight };
std::string_view to_string(ProductOrder o);

struct StructureConstant {
  Root alpha, beta;
  int i = 0, j = 0;
  std::int64_t n = 0;
};

class StructureConstantTable {
 public:
  StructureConstantTable(RepPtr rep, std::vector<StructureConstant> entries);

  const Representation& rep() const { return *rep_; }
  const RepPtr& rep_ptr() const { return rep_; }
  const std::vector<StructureConstant>& entries() const { return entries_; }
  // Throws NotARoot if i*a + j*b is not a root, OppositeRoots if a = -b.
  std::int64_t get(const Root& a, const Root& b, int i, int j) const;
  // Constants for one ordered pair, in product order.
  std::vector<StructureConstant> pair(const Root& a, const Root& b) const;

 private:
  RepPtr rep_;
  std::vector<StructureConstant> entries_;
  std::map<std::tuple<int, int, int, int, int, int>, std::size_t> index_;
};

// Product order of the roots i*a + j*b.
std::vector<Root> product_roots(const RootSystem& rs, const Root& a, const Root& b, ProductOrder order);

// Constants of one pair, extracted in the given order.
std::vector<StructureConstant> pair_constants(const Representation& rep, const Root& a, const Root& b,
                                              ProductOrder order);

StructureConstantTable compute_table(const RepPtr& rep);
// Table of the standard representation, computed once.
const StructureConstantTable& standard_table(SystemType type);

// Right-hand side of the commutator formula for [x_a(s), x_b(t)].
Word chevalley_commutator_word(const StructureConstantTable& table, const Root& a, const Root& b,
                               const RingElement& s, const RingElement& t);

struct SignNormalization {
  MainLemmaCase main_case;
  Root alpha, beta, gamma;
  std::vector<int> signs;  // indexed like system().roots()
  ProductOrder order;
  std::vector<StructureConstant> displayed;  // (beta, gamma) constants after normalization
  RepPtr rep;                                // the reparametrized representation
};

// Chooses x_d(t) -> x_d(eps_d t) so that the (beta, gamma) constants of the
// case come out as displayed: A2 N11 = 1; C2 N11 = N12 = 1;
// G2 (N11, N12, N13, N23) = (1, 1, 1, 2). The table order is tried first,
// then decreasing height. Throws NormalizationImpossible if neither works.
SignNormalization normalize_signs(const StructureConstantTable& table, MainLemmaCase c);
SignNormalization normalize_signs(const StructureConstantTable& table, MainLemmaCase c, const Root& alpha);

// Whether one sign vector satisfies the displayed constants for several
// (case, alpha) instances of the same system at once.
struct GlobalNormalization {
  bool exists = false;
  std::vector<int> signs;
  std::vector<std::pair<MainLemmaCase, Root>> instances;
};
GlobalNormalization find_global_normalization(const StructureConstantTable& table,
                                              const std::vector<std::pair<MainLemmaCase, Root>>& instances);

// Every (case, alpha) instance of the Main Lemma for a system.
std::vector<std::pair<MainLemmaCase, Root>> main_lemma_instances(SystemType type);

struct RelationResult {
  std::string relation;
  bool pass = false;
};

struct SteinbergReport {
  SystemType system;
  std::vector<RelationResult> additivity;
  std::vector<RelationResult> commutators;
  bool all_pass() const;
};

// Additivity for every root and the commutator formula for every ordered
// non-opposite pair, symbolically over Z[s,t].
SteinbergReport verify_steinberg(const RepPtr& rep);

}  // namespace chevlab
