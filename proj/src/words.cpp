#include "chevlab/words.hpp"

#include <cctype>

namespace chevlab {

Symbol Symbol::x(const Root& a, Value c) {
  Symbol s;
  s.kind = Kind::X;
  s.root = a;
  s.c1 = std::move(c);
  return s;
}

Symbol Symbol::z(const Root& a, Value xi, Value eta) {
  Symbol s;
  s.kind = Kind::Z;
  s.root = a;
  s.c1 = std::move(xi);
  s.c2 = std::move(eta);
  return s;
}

Symbol Symbol::inverse(const Symbol& inner) {
  Symbol s;
  s.kind = Kind::Inverse;
  s.inner = std::make_shared<const Symbol>(inner);
  return s;
}

Symbol Symbol::conj(const Word& base, const Word& by) {
  Symbol s;
  s.kind = Kind::Conj;
  s.base = std::make_shared<const Word>(base);
  s.by = std::make_shared<const Word>(by);
  return s;
}

bool Symbol::operator==(const Symbol& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::X: return root == o.root && c1 == o.c1;
    case Kind::Z: return root == o.root && c1 == o.c1 && c2 == o.c2;
    case Kind::Inverse: return *inner == *o.inner;
    case Kind::Conj: return *base == *o.base && *by == *o.by;
  }
  return false;
}

namespace {

Symbol invert(const Ring& R, const Symbol& s) {
  switch (s.kind) {
    case Symbol::Kind::X: return Symbol::x(s.root, R.neg(s.c1));
    case Symbol::Kind::Z: return Symbol::z(s.root, R.neg(s.c1), s.c2);
    case Symbol::Kind::Inverse: return *s.inner;
    case Symbol::Kind::Conj: return Symbol::conj(s.base->inverse(), *s.by);
  }
  return s;
}

bool trivially_one(const Ring& R, const Symbol& s) {
  switch (s.kind) {
    case Symbol::Kind::X:
    case Symbol::Kind::Z: return R.is_zero(s.c1);
    case Symbol::Kind::Inverse: return trivially_one(R, *s.inner);
    case Symbol::Kind::Conj: return s.base->empty();
  }
  return false;
}

}  // namespace

Word Word::x(const Root& a, const RingElement& c) { return Word(c.ring(), {Symbol::x(a, c.value())}); }

Word Word::z(const Root& a, const RingElement& xi, const RingElement& eta) {
  if (!(xi.ring() == eta.ring())) throw Error(ErrorCode::MixedRings, "z letter coefficients");
  return Word(xi.ring(), {Symbol::z(a, xi.value(), eta.value())});
}

Word Word::operator*(const Word& o) const {
  if (!(ring_ == o.ring_))
    throw Error(ErrorCode::MixedRings, "word product over " + ring_.to_string() + " and " + o.ring_.to_string());
  Word out = *this;
  out.letters_.insert(out.letters_.end(), o.letters_.begin(), o.letters_.end());
  return out;
}

Word Word::inverse() const {
  Word out(ring_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(invert(ring_, *it));
  return out;
}

Word Word::reduced() const {
  std::vector<Symbol> out;
  auto push = [&](Symbol s) {
    if (trivially_one(ring_, s)) return;
    if (!out.empty() && invert(ring_, out.back()) == s) {
      out.pop_back();
      return;
    }
    out.push_back(std::move(s));
  };
  for (const auto& s0 : letters_) {
    Symbol s = s0.kind == Symbol::Kind::Inverse ? invert(ring_, *s0.inner) : s0;
    if (s.kind == Symbol::Kind::Conj) {
      Word base = s.base->reduced(), by = s.by->reduced();
      if (by.empty()) {
        for (const auto& t : base.letters_) push(t);
        continue;
      }
      s = Symbol::conj(base, by);
    }
    push(std::move(s));
  }
  return Word(ring_, std::move(out));
}

namespace {

Matrix eval_symbol(const Ring& R, const RepPtr& rep, const Symbol& s);

Matrix eval_letters(const Ring& R, const RepPtr& rep, const std::vector<Symbol>& letters) {
  Matrix m = Matrix::identity(R, rep->dim());
  bool first = true;
  for (const auto& s : letters) {
    if (first) {
      m = eval_symbol(R, rep, s);
      first = false;
    } else {
      m = m * eval_symbol(R, rep, s);
    }
  }
  return m;
}

Matrix eval_symbol(const Ring& R, const RepPtr& rep, const Symbol& s) {
  switch (s.kind) {
    case Symbol::Kind::X: return rep->x(s.root, s.c1, R);
    case Symbol::Kind::Z:
      return rep->x(-s.root, s.c2, R) * rep->x(s.root, s.c1, R) * rep->x(-s.root, R.neg(s.c2), R);
    case Symbol::Kind::Inverse: return eval_symbol(R, rep, invert(R, *s.inner));
    case Symbol::Kind::Conj:
      return eval_letters(R, rep, s.by->letters()) * eval_letters(R, rep, s.base->letters()) *
             eval_letters(R, rep, s.by->inverse().letters());
  }
  return Matrix::identity(R, rep->dim());
}

}  // namespace

GroupElement Word::evaluate(const RepPtr& rep) const { return {rep, eval_letters(ring_, rep, letters_)}; }

namespace {

void print_symbol(const Ring& R, const Symbol& s, std::string& out);

void print_word(const Ring& R, const Word& w, std::string& out) {
  if (w.size() == 1) {
    print_symbol(R, w.letters()[0], out);
    return;
  }
  out += "(word";
  for (const auto& s : w.letters()) {
    out += ' ';
    print_symbol(R, s, out);
  }
  out += ')';
}

void print_symbol(const Ring& R, const Symbol& s, std::string& out) {
  switch (s.kind) {
    case Symbol::Kind::X: out += "(x " + s.root.name() + " " + R.format(s.c1) + ")"; break;
    case Symbol::Kind::Z:
      out += "(z " + s.root.name() + " " + R.format(s.c1) + " " + R.format(s.c2) + ")";
      break;
    case Symbol::Kind::Inverse:
      out += "(inv ";
      print_symbol(R, *s.inner, out);
      out += ')';
      break;
    case Symbol::Kind::Conj:
      out += "(conj ";
      print_word(R, *s.base, out);
      out += ' ';
      print_word(R, *s.by, out);
      out += ')';
      break;
  }
}

class WordParser {
 public:
  WordParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Word parse() {
    Word w = word();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  std::string_view atom() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected atom");
    return text_.substr(start, pos_ - start);
  }

  Word word() {
    std::size_t save = pos_;
    expect('(');
    if (atom() == "word") {
      std::vector<Symbol> letters;
      while (!peek(')')) letters.push_back(symbol());
      expect(')');
      return Word(ring_, std::move(letters));
    }
    pos_ = save;
    return Word(ring_, {symbol()});
  }

  Symbol symbol() {
    expect('(');
    std::string_view head = atom();
    Symbol s;
    if (head == "x") {
      Root r = Root::parse(atom());
      s = Symbol::x(r, ring_.parse_value(atom()));
    } else if (head == "z") {
      Root r = Root::parse(atom());
      Value a = ring_.parse_value(atom());
      s = Symbol::z(r, a, ring_.parse_value(atom()));
    } else if (head == "inv") {
      s = Symbol::inverse(symbol());
    } else if (head == "conj") {
      Word base = word();
      s = Symbol::conj(base, word());
    } else {
      fail("unknown symbol head '" + std::string(head) + "'");
    }
    expect(')');
    return s;
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

Symbol map_symbol(const Ring& target, const Symbol& s, const std::function<Value(const Value&)>& f) {
  switch (s.kind) {
    case Symbol::Kind::X: return Symbol::x(s.root, f(s.c1));
    case Symbol::Kind::Z: return Symbol::z(s.root, f(s.c1), f(s.c2));
    case Symbol::Kind::Inverse: return Symbol::inverse(map_symbol(target, *s.inner, f));
    case Symbol::Kind::Conj: return Symbol::conj(s.base->map(target, f), s.by->map(target, f));
  }
  return s;
}

void collect_roots(const Symbol& s, std::vector<Root>& out) {
  switch (s.kind) {
    case Symbol::Kind::X:
    case Symbol::Kind::Z: out.push_back(s.root); break;
    case Symbol::Kind::Inverse: collect_roots(*s.inner, out); break;
    case Symbol::Kind::Conj:
      for (const auto& t : s.base->letters()) collect_roots(t, out);
      for (const auto& t : s.by->letters()) collect_roots(t, out);
      break;
  }
}

}  // namespace

std::string Word::to_string() const {
  std::string out;
  print_word(ring_, *this, out);
  return out;
}

Word Word::parse(const Ring& ring, std::string_view text) { return WordParser(ring, text).parse(); }

Word Word::map(const Ring& target, const std::function<Value(const Value&)>& f) const {
  Word out(target);
  for (const auto& s : letters_) out.letters_.push_back(map_symbol(target, s, f));
  return out;
}

std::vector<Root> Word::roots() const {
  std::vector<Root> out;
  for (const auto& s : letters_) collect_roots(s, out);
  return out;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word conjugate(const Word& base, const Word& by) { return Word(base.ring(), {Symbol::conj(base, by)}); }

// ------------------------------------------------------------ certificates

std::string_view to_string(Certificate::Tag t) {
  switch (t) {
    case Certificate::Tag::GenOfEI: return "GenOfEI";
    case Certificate::Tag::GenCommutator: return "GenCommutator";
    case Certificate::Tag::LevelElement: return "LevelElement";
    case Certificate::Tag::ConjugateOf: return "ConjugateOf";
    case Certificate::Tag::ProductOf: return "ProductOf";
  }
  return "?";
}

Certificate Certificate::gen_of_ei() { return {}; }

Certificate Certificate::gen_commutator(const Word& a, const Word& b) {
  Certificate c;
  c.tag = Tag::GenCommutator;
  c.a = std::make_shared<const Word>(a);
  c.b = std::make_shared<const Word>(b);
  return c;
}

Certificate Certificate::level_element(const Ideal& k) {
  Certificate c;
  c.tag = Tag::LevelElement;
  c.ideal = k;
  return c;
}

Certificate Certificate::conjugate_of(const Certificate& inner, const Word& by) {
  Certificate c;
  c.tag = Tag::ConjugateOf;
  c.inner = std::make_shared<const Certificate>(inner);
  c.by = std::make_shared<const Word>(by);
  return c;
}

Certificate Certificate::product_of(std::vector<std::pair<Word, Certificate>> parts) {
  Certificate c;
  c.tag = Tag::ProductOf;
  c.parts = std::move(parts);
  return c;
}

std::string Certificate::to_string() const {
  switch (tag) {
    case Tag::GenOfEI: return "(GenOfEI)";
    case Tag::GenCommutator: return "(GenCommutator " + a->to_string() + " " + b->to_string() + ")";
    case Tag::LevelElement: return "(LevelElement " + ideal->to_string() + ")";
    case Tag::ConjugateOf: return "(ConjugateOf " + inner->to_string() + " " + by->to_string() + ")";
    case Tag::ProductOf: {
      std::string s = "(ProductOf";
      for (const auto& [w, c] : parts) s += " " + c.to_string();
      return s + ")";
    }
  }
  return "()";
}

namespace {

// Every letter is x(d, c) (possibly inverted) with c in K.
bool letters_in(const Word& w, const Ideal& K) {
  for (const auto& s0 : w.letters()) {
    const Symbol& s = s0.kind == Symbol::Kind::Inverse ? *s0.inner : s0;
    if (s.kind != Symbol::Kind::X) return false;
    if (!K.contains(RingElement(w.ring(), s.c1))) return false;
  }
  return true;
}

}  // namespace

bool validate_certificate(const Certificate& c, const Word& w, const Ideal& I, const Ideal& J, const RepPtr& rep) {
  if (!(w.ring() == I.ring()) || !(w.ring() == J.ring())) return false;
  switch (c.tag) {
    case Certificate::Tag::GenOfEI: {
      if (w.size() != 1 || w.letters()[0].kind != Symbol::Kind::X) return false;
      return I.contains(RingElement(w.ring(), w.letters()[0].c1));
    }
    case Certificate::Tag::GenCommutator: {
      if (!c.a || !c.b) return false;
      bool levels = (letters_in(*c.a, I) && letters_in(*c.b, J)) || (letters_in(*c.a, J) && letters_in(*c.b, I));
      if (!levels) return false;
      return w.evaluate(rep) == commutator(*c.a, *c.b).evaluate(rep);
    }
    case Certificate::Tag::LevelElement: {
      if (!c.ideal || !(I * J).contains(*c.ideal)) return false;
      return congruence_level_test(w.evaluate(rep), *c.ideal);
    }
    case Certificate::Tag::ConjugateOf: {
      if (!c.inner || !c.by) return false;
      if (w.size() != 1 || w.letters()[0].kind != Symbol::Kind::Conj) return false;
      const Symbol& s = w.letters()[0];
      if (!(*s.by == *c.by)) return false;
      return validate_certificate(*c.inner, *s.base, I, J, rep);
    }
    case Certificate::Tag::ProductOf: {
      Word all(w.ring());
      for (const auto& [part, cert] : c.parts) {
        if (!validate_certificate(cert, part, I, J, rep)) return false;
        all = all * part;
      }
      return all.evaluate(rep) == w.evaluate(rep);
    }
  }
  return false;
}

}  // namespace chevlab
