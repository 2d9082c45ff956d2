#pragma once

// Constructive content: generator families of relative and mixed
// commutator subgroups, Main Lemma factorizations, long-root
// decompositions, and the sampled Levi commutator check.

#include <optional>
#include <string>
#include <vector>

#include "chevlab/structconst.hpp"
#include "chevlab/words.hpp"

namespace chevlab {

// z_a(xi, eta) for every root a, xi in I, eta in R.
std::vector<Word> relative_generators(SystemType type, const Ideal& I);

struct ConditionStar {
  bool required = false;  // C2 and G2 only
  bool residue_field_F2 = false;
  std::optional<bool> theta;  // only decided for finite rings
  bool holds() const { return !required || (!residue_field_F2 && theta.value_or(false)); }
  std::string summary() const;
};
ConditionStar condition_star(SystemType type, const Ring& R);

struct MixedGenerator {
  int bullet = 0;  // 1: [x_a(xi), z_a(zeta, eta)], 2: [x_a(xi), x_-a(zeta)], 3: z_a(xi zeta, eta)
  Word word;
  std::optional<Certificate> certificate;  // empty: pending the Main Lemma
};

struct MixedGenerators {
  std::vector<MixedGenerator> generators;
  ConditionStar condition;
  std::string warning;  // set when condition (*) fails
};

// One entry per bullet for every (a, xi, zeta, eta) with xi in I, zeta in J,
// eta in R, so each bullet has |Phi| |I| |J| |R| entries.
MixedGenerators mixed_commutator_generators(SystemType type, const Ideal& I, const Ideal& J);

struct CertifiedFactorization {
  MainLemmaCase main_case;
  Root alpha, beta, gamma;
  SignNormalization normalization;
  Word target;  // [x_a(xi), z_a(zeta, eta)]
  std::vector<std::pair<Word, Certificate>> factors;
  Word tail;    // T with x_a(-xi) = C T, C the leading commutator
  std::string identity;  // the rewriting used, in words

  RepPtr rep() const { return normalization.rep; }
};

// Factorizes [x_a(xi), z_a(zeta, eta)] into conjugates of generator
// commutators of E(I), E(J) and elements of level IJ, for xi in I, zeta in J.
// Everything is expressed in the sign-normalized representation of the
// (case, alpha) instance. The A2 case also covers long roots of G2.
CertifiedFactorization main_lemma_word(SystemType type, MainLemmaCase c, const Root& alpha, const RingElement& xi,
                                       const RingElement& zeta, const RingElement& eta, const Ideal& I,
                                       const Ideal& J);

// The universal instance over Z[xi,zeta,eta] with I = (xi), J = (zeta).
struct SymbolicMainLemma {
  CertifiedFactorization factorization;
  Ideal I, J;
};
SymbolicMainLemma symbolic_main_lemma(SystemType type, MainLemmaCase c, const Root& alpha);
SymbolicMainLemma symbolic_main_lemma(MainLemmaCase c);

struct FactorizationCheck {
  bool product_equal = false;
  bool certificates_valid = false;
  std::size_t factor_count = 0;
  bool ok() const { return product_equal && certificates_valid; }
};
FactorizationCheck check_factorization(const CertifiedFactorization& f, const Ideal& I, const Ideal& J);

// Pairs (theta, r) with sum r (theta^2 - theta) = 1; minimal length.
std::vector<std::pair<RingElement, RingElement>> unit_decompose(const Ring& R);

struct LongRootDecomposition {
  Root beta;
  Word word;
  std::vector<std::size_t> term_lengths;  // letters per unit-decomposition term
  std::vector<std::pair<RingElement, RingElement>> units;  // G2 only
  std::string identity;
};

// A word in long-root letters (possibly conjugated by elementary words)
// with coefficients in I evaluating to x_beta(xi), beta short.
LongRootDecomposition long_root_decomposition(SystemType type, const Root& beta, const RingElement& xi,
                                              const Ideal& I);

struct LongRootCheck {
  bool evaluates = false;
  bool long_letters_only = false;
  bool coefficients_in_ideal = false;
  bool ok() const { return evaluates && long_letters_only && coefficients_in_ideal; }
};
LongRootCheck check_long_root(SystemType type, const LongRootDecomposition& d, const RingElement& xi, const Ideal& I);

struct ParabolicData {
  const RootSystem* system = nullptr;
  int r = 1;  // simple root index, 1 or 2
  std::vector<Root> u_roots, u_minus_roots, levi_roots;

  static ParabolicData make(SystemType type, int r);
};

struct LeviReport {
  SystemType system;
  int r = 1;
  bool minus = false;
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few violations
};

// Samples pairs (l, u): l a product of at most four level-I generators of
// the Levi factor, u a product of level-J generators of U_r (or U_r^-).
// Each [l, u] must factor over the same unipotent radical with coefficients
// in IJ. Sample k uses its own generator seeded from (seed, k).
LeviReport levi_commutator_check(const ParabolicData& P, const Ideal& I, const Ideal& J, std::size_t samples,
                                 bool minus, std::uint64_t seed);

}  // namespace chevlab
