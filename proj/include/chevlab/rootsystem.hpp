#pragma once

// Rank-2 root systems A2, C2, G2.
//
// Roots are stored by their coordinates in the basis of simple roots
// (a1, a2); the Gram matrix of each type fixes lengths and angles.
//   A2: a1, a2 of equal length.
//   C2: a1 short, a2 long; positive roots a1, a2, a1+a2, 2a1+a2.
//   G2: a1 short, a2 long; positive roots a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chevlab/error.hpp"

namespace chevlab {

enum class SystemType { A2, C2, G2 };

std::string_view to_string(SystemType t);
SystemType parse_system_type(std::string_view s);

struct Root {
  int c1 = 0;
  int c2 = 0;

  Root operator+(const Root& o) const { return {c1 + o.c1, c2 + o.c2}; }
  Root operator-(const Root& o) const { return {c1 - o.c1, c2 - o.c2}; }
  Root operator-() const { return {-c1, -c2}; }
  Root operator*(int k) const { return {k * c1, k * c2}; }
  int height() const { return c1 + c2; }

  // "a1", "-a1-a2", "3a1+2a2".
  std::string name() const;
  static Root parse(std::string_view text);

  auto operator<=>(const Root&) const = default;
};

// The case split of the Main Lemma.
enum class MainLemmaCase { A2, C2Long, C2Short, G2Short };

std::string_view to_string(MainLemmaCase c);
MainLemmaCase parse_case(std::string_view s);

class RootSystem {
 public:
  static const RootSystem& get(SystemType type);

  SystemType type() const { return type_; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::pair<Root, Root> simple_roots() const { return {Root{1, 0}, Root{0, 1}}; }
  std::size_t size() const { return roots_.size(); }

  bool contains(const Root& r) const;
  std::size_t index(const Root& r) const;  // throws NotARoot
  void require(const Root& r) const;       // throws NotARoot

  int inner(const Root& a, const Root& b) const;
  // <a, b^vee> = 2(a,b)/(b,b)
  int pairing(const Root& a, const Root& b) const;
  // Cartan integers of a against the simple coroots.
  std::array<int, 2> coroot_pairings(const Root& a) const;

  bool is_long(const Root& r) const;
  bool is_positive(const Root& r) const { return r.c1 > 0 || (r.c1 == 0 && r.c2 > 0); }

  // (p, q): largest p with beta - p alpha in the system, largest q with beta + q alpha.
  std::pair<int, int> root_string(const Root& alpha, const Root& beta) const;

  // Roots i*alpha + j*beta with i, j >= 1, in the fixed product order
  // (increasing height, ties by coordinates).
  std::vector<std::pair<int, int>> commutator_terms(const Root& alpha, const Root& beta) const;

  // Sort by increasing height, then lexicographic coordinates.
  std::vector<Root> ordered(std::vector<Root> roots) const;

  // beta, gamma with alpha = beta + gamma (A2, C2Short, G2Short) or
  // alpha = beta + 2 gamma (C2Long); see the header comment of the cpp.
  std::pair<Root, Root> decompose_for_case(const Root& alpha, MainLemmaCase c) const;

  // Canonical root for each Main Lemma case in its home system.
  static Root canonical_root(MainLemmaCase c);
  static SystemType home_system(MainLemmaCase c);

 private:
  RootSystem(SystemType type, std::array<std::array<int, 2>, 2> gram, std::vector<Root> positive);

  SystemType type_;
  std::array<std::array<int, 2>, 2> gram_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
};

// Solve v = i*a + j*b over the integers; nullopt if not an integral combination.
std::optional<std::pair<int, int>> coordinates_in(const Root& v, const Root& a, const Root& b);

}  // namespace chevlab
