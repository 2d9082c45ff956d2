#pragma once

// Words over elementary generators and membership certificates.
//
// A word stores symbols, not matrices, so one word can be evaluated in any
// representation and re-specialized into other coefficient rings.
//
// Text form:
//   (x ROOT C)  (z ROOT C1 C2)  (inv SYM)  (conj BASE BY)
// where BASE and BY are words. A one-letter word is written as its symbol,
// anything else as (word S1 S2 ...); the empty word is (word).

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chevlab/repr.hpp"

namespace chevlab {

class Word;

struct Symbol {
  enum class Kind { X, Z, Inverse, Conj };

  Kind kind = Kind::X;
  Root root;
  Value c1, c2;
  std::shared_ptr<const Symbol> inner;    // Inverse
  std::shared_ptr<const Word> base, by;   // Conj: by * base * by^-1

  static Symbol x(const Root& a, Value c);
  static Symbol z(const Root& a, Value xi, Value eta);
  static Symbol inverse(const Symbol& s);
  static Symbol conj(const Word& base, const Word& by);

  bool operator==(const Symbol& o) const;
};

class Word {
 public:
  explicit Word(Ring ring) : ring_(std::move(ring)) {}
  Word(Ring ring, std::vector<Symbol> letters) : ring_(std::move(ring)), letters_(std::move(letters)) {}

  static Word x(const Root& a, const RingElement& c);
  static Word z(const Root& a, const RingElement& xi, const RingElement& eta);
  static Word parse(const Ring& ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  const std::vector<Symbol>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  // Cancels adjacent inverse pairs and drops letters that are trivially 1.
  Word reduced() const;

  GroupElement evaluate(const RepPtr& rep) const;
  std::string to_string() const;

  // Push every coefficient through a ring homomorphism into `target`.
  Word map(const Ring& target, const std::function<Value(const Value&)>& f) const;
  // Every root occurring in an X or Z letter, including inside Conj.
  std::vector<Root> roots() const;

  bool operator==(const Word& o) const { return ring_ == o.ring_ && letters_ == o.letters_; }

 private:
  Ring ring_;
  std::vector<Symbol> letters_;
};

Word commutator(const Word& a, const Word& b);
Word conjugate(const Word& base, const Word& by);

struct Certificate {
  enum class Tag { GenOfEI, GenCommutator, LevelElement, ConjugateOf, ProductOf };

  Tag tag = Tag::GenOfEI;
  std::shared_ptr<const Word> a, b;                // GenCommutator
  std::optional<Ideal> ideal;                      // LevelElement
  std::shared_ptr<const Certificate> inner;        // ConjugateOf
  std::shared_ptr<const Word> by;                  // ConjugateOf
  std::vector<std::pair<Word, Certificate>> parts; // ProductOf

  static Certificate gen_of_ei();
  static Certificate gen_commutator(const Word& a, const Word& b);
  static Certificate level_element(const Ideal& k);
  static Certificate conjugate_of(const Certificate& inner, const Word& by);
  static Certificate product_of(std::vector<std::pair<Word, Certificate>> parts);

  std::string to_string() const;
};

std::string_view to_string(Certificate::Tag t);

// Leaf checks:
//   GenOfEI        one letter x(a, c) with c in I;
//   GenCommutator  w evaluates to [a, b], a is a word of x-letters over I and
//                  b over J (or the other way round);
//   LevelElement   K within IJ and w congruent to 1 mod K;
//   ConjugateOf    w is one conj letter whose conjugator is `by`, inner checks
//                  out on its base;
//   ProductOf      parts check out and their product evaluates to w.
bool validate_certificate(const Certificate& c, const Word& w, const Ideal& I, const Ideal& J, const RepPtr& rep);

}  // namespace chevlab
