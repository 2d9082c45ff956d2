#include "chevlab/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace chevlab {

std::string_view to_string(SystemType t) {
  switch (t) {
    case SystemType::A2: return "A2";
    case SystemType::C2: return "C2";
    case SystemType::G2: return "G2";
  }
  return "?";
}

SystemType parse_system_type(std::string_view s) {
  if (s == "A2") return SystemType::A2;
  if (s == "C2" || s == "B2") return SystemType::C2;
  if (s == "G2") return SystemType::G2;
  throw Error(ErrorCode::UnsupportedType, "unknown root system '" + std::string(s) + "'");
}

std::string_view to_string(MainLemmaCase c) {
  switch (c) {
    case MainLemmaCase::A2: return "A2";
    case MainLemmaCase::C2Long: return "C2Long";
    case MainLemmaCase::C2Short: return "C2Short";
    case MainLemmaCase::G2Short: return "G2Short";
  }
  return "?";
}

MainLemmaCase parse_case(std::string_view s) {
  if (s == "A2") return MainLemmaCase::A2;
  if (s == "C2Long") return MainLemmaCase::C2Long;
  if (s == "C2Short") return MainLemmaCase::C2Short;
  if (s == "G2Short") return MainLemmaCase::G2Short;
  throw Error(ErrorCode::InvalidArgument, "unknown Main Lemma case '" + std::string(s) + "'");
}

std::string Root::name() const {
  if (c1 == 0 && c2 == 0) return "0";
  std::string s;
  auto part = [&](int c, const char* sym) {
    if (c == 0) return;
    if (c < 0) s += "-";
    else if (!s.empty()) s += "+";
    int m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m);
    s += sym;
  };
  part(c1, "a1");
  part(c2, "a2");
  return s;
}

Root Root::parse(std::string_view text) {
  Root r;
  std::size_t pos = 0;
  auto fail = [&] { throw Error(ErrorCode::ParseError, "bad root name '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    int coeff = 0;
    bool has_digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = coeff * 10 + (text[pos] - '0');
      has_digits = true;
      ++pos;
    }
    if (!has_digits) coeff = 1;
    if (pos + 2 > text.size() || text[pos] != 'a') fail();
    char idx = text[pos + 1];
    pos += 2;
    if (idx == '1') r.c1 += sign * coeff;
    else if (idx == '2') r.c2 += sign * coeff;
    else fail();
  }
  return r;
}

std::optional<std::pair<int, int>> coordinates_in(const Root& v, const Root& a, const Root& b) {
  int det = a.c1 * b.c2 - a.c2 * b.c1;
  if (det == 0) return std::nullopt;
  int i_num = v.c1 * b.c2 - v.c2 * b.c1;
  int j_num = a.c1 * v.c2 - a.c2 * v.c1;
  if (i_num % det != 0 || j_num % det != 0) return std::nullopt;
  return std::make_pair(i_num / det, j_num / det);
}

RootSystem::RootSystem(SystemType type, std::array<std::array<int, 2>, 2> gram, std::vector<Root> positive)
    : type_(type), gram_(gram), positive_(ordered(std::move(positive))) {
  roots_ = positive_;
  for (const auto& r : positive_) roots_.push_back(-r);
}

const RootSystem& RootSystem::get(SystemType type) {
  static const RootSystem a2(SystemType::A2, {{{2, -1}, {-1, 2}}}, {{1, 0}, {0, 1}, {1, 1}});
  static const RootSystem c2(SystemType::C2, {{{1, -1}, {-1, 2}}}, {{1, 0}, {0, 1}, {1, 1}, {2, 1}});
  static const RootSystem g2(SystemType::G2, {{{2, -3}, {-3, 6}}},
                             {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
  switch (type) {
    case SystemType::A2: return a2;
    case SystemType::C2: return c2;
    case SystemType::G2: return g2;
  }
  return a2;
}

bool RootSystem::contains(const Root& r) const {
  return std::find(roots_.begin(), roots_.end(), r) != roots_.end();
}

std::size_t RootSystem::index(const Root& r) const {
  auto it = std::find(roots_.begin(), roots_.end(), r);
  if (it == roots_.end())
    throw Error(ErrorCode::NotARoot, r.name() + " is not a root of " + std::string(to_string(type_)));
  return static_cast<std::size_t>(it - roots_.begin());
}

void RootSystem::require(const Root& r) const { (void)index(r); }

int RootSystem::inner(const Root& a, const Root& b) const {
  return a.c1 * (gram_[0][0] * b.c1 + gram_[0][1] * b.c2) + a.c2 * (gram_[1][0] * b.c1 + gram_[1][1] * b.c2);
}

int RootSystem::pairing(const Root& a, const Root& b) const { return 2 * inner(a, b) / inner(b, b); }

std::array<int, 2> RootSystem::coroot_pairings(const Root& a) const {
  return {pairing(a, Root{1, 0}), pairing(a, Root{0, 1})};
}

bool RootSystem::is_long(const Root& r) const {
  int longest = 0;
  for (const auto& s : positive_) longest = std::max(longest, inner(s, s));
  return inner(r, r) == longest;
}

std::pair<int, int> RootSystem::root_string(const Root& alpha, const Root& beta) const {
  require(alpha);
  require(beta);
  if (alpha == beta || alpha == -beta)
    throw Error(ErrorCode::OppositeRoots, "root string of " + alpha.name() + " through " + beta.name());
  int p = 0, q = 0;
  while (contains(beta - alpha * (p + 1))) ++p;
  while (contains(beta + alpha * (q + 1))) ++q;
  return {p, q};
}

std::vector<Root> RootSystem::ordered(std::vector<Root> roots) const {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    return std::make_tuple(a.height(), a.c1, a.c2) < std::make_tuple(b.height(), b.c1, b.c2);
  });
  return roots;
}

std::vector<std::pair<int, int>> RootSystem::commutator_terms(const Root& alpha, const Root& beta) const {
  std::vector<Root> rs;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (contains(alpha * i + beta * j)) rs.push_back(alpha * i + beta * j);
  std::vector<std::pair<int, int>> out;
  for (const auto& r : ordered(rs)) out.push_back(*coordinates_in(r, alpha, beta));
  return out;
}

Root RootSystem::canonical_root(MainLemmaCase c) {
  switch (c) {
    case MainLemmaCase::A2: return {1, 1};
    case MainLemmaCase::C2Long: return {2, 1};
    case MainLemmaCase::C2Short: return {1, 1};
    case MainLemmaCase::G2Short: return {1, 1};
  }
  return {1, 1};
}

SystemType RootSystem::home_system(MainLemmaCase c) {
  switch (c) {
    case MainLemmaCase::A2: return SystemType::A2;
    case MainLemmaCase::C2Long:
    case MainLemmaCase::C2Short: return SystemType::C2;
    case MainLemmaCase::G2Short: return SystemType::G2;
  }
  return SystemType::A2;
}

// Candidate pairs are ranked by the number of non-simple roots among
// (beta, gamma), then by descending coordinates, so that a1+a2 in A2
// decomposes as (a1, a2) and the C2/G2 cases land on (a2, a1).
std::pair<Root, Root> RootSystem::decompose_for_case(const Root& alpha, MainLemmaCase c) const {
  require(alpha);
  auto mismatch = [&](const std::string& why) {
    return Error(ErrorCode::NoDecomposition, std::string(to_string(c)) + " case does not apply to " + alpha.name() +
                                                  " in " + std::string(to_string(type_)) + ": " + why);
  };
  switch (c) {
    case MainLemmaCase::A2:
      if (type_ == SystemType::C2) throw mismatch("C2 has no A2 subsystem");
      if (!is_long(alpha)) throw mismatch("root is short");
      break;
    case MainLemmaCase::C2Long:
      if (type_ != SystemType::C2) throw mismatch("system is not C2");
      if (!is_long(alpha)) throw mismatch("root is short");
      break;
    case MainLemmaCase::C2Short:
      if (type_ != SystemType::C2) throw mismatch("system is not C2");
      if (is_long(alpha)) throw mismatch("root is long");
      break;
    case MainLemmaCase::G2Short:
      if (type_ != SystemType::G2) throw mismatch("system is not G2");
      if (is_long(alpha)) throw mismatch("root is long");
      break;
  }

  auto is_simple = [](const Root& r) { return r == Root{1, 0} || r == Root{0, 1}; };
  std::vector<std::pair<Root, Root>> candidates;
  for (const auto& beta : roots_) {
    for (const auto& gamma : roots_) {
      switch (c) {
        case MainLemmaCase::A2:
          if (beta + gamma == alpha && is_long(beta) && is_long(gamma)) candidates.emplace_back(beta, gamma);
          break;
        case MainLemmaCase::C2Long:
          if (beta + gamma * 2 == alpha && is_long(beta) && !is_long(gamma) && contains(beta + gamma))
            candidates.emplace_back(beta, gamma);
          break;
        case MainLemmaCase::C2Short:
          if (beta + gamma == alpha && is_long(beta) && !is_long(gamma) && contains(beta + gamma * 2))
            candidates.emplace_back(beta, gamma);
          break;
        case MainLemmaCase::G2Short:
          if (beta + gamma == alpha && is_long(beta) && !is_long(gamma) && contains(beta + gamma * 2) &&
              contains(beta + gamma * 3) && contains(beta * 2 + gamma * 3))
            candidates.emplace_back(beta, gamma);
          break;
      }
    }
  }
  if (candidates.empty()) throw mismatch("no root pair found");
  auto rank = [&](const std::pair<Root, Root>& p) {
    int non_simple = (is_simple(p.first) ? 0 : 1) + (is_simple(p.second) ? 0 : 1);
    return std::make_tuple(non_simple, -p.first.c1, -p.first.c2, -p.second.c1, -p.second.c2);
  };
  return *std::min_element(candidates.begin(), candidates.end(),
                           [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
}

}  // namespace chevlab
