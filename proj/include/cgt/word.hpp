#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgt/error.hpp"

namespace cgt {

// Arbitrary-precision integer used for exponents and ring coefficients.
// Amalgam rewriting multiplies exponents by n/m per step, so they can grow
// geometrically even when the input word is short.
using Int = boost::multiprecision::cpp_int;

// A generator symbol: a base name, an optional integer index for families
// like z_0, z_1, ..., and a primed flag used by doubled presentations.
struct Gen {
  std::string name;
  std::optional<long> index;
  bool primed = false;

  Gen() = default;
  explicit Gen(std::string n) : name(std::move(n)) {}
  Gen(std::string n, long i) : name(std::move(n)), index(i) {}
  Gen(std::string n, std::optional<long> i, bool p)
      : name(std::move(n)), index(i), primed(p) {}

  Gen prime() const { return Gen(name, index, true); }
  Gen with_index(long i) const { return Gen(name, i, primed); }

  // Total order: name, then index (indexless first), then primed flag.
  friend bool operator==(const Gen& a, const Gen& b) {
    return a.name == b.name && a.index == b.index && a.primed == b.primed;
  }
  friend bool operator!=(const Gen& a, const Gen& b) { return !(a == b); }
  friend bool operator<(const Gen& a, const Gen& b) {
    if (a.name != b.name) return a.name < b.name;
    if (a.index != b.index) {
      if (!a.index) return true;
      if (!b.index) return false;
      return *a.index < *b.index;
    }
    return a.primed < b.primed;
  }

  std::string str() const;
};

// One maximal run g^e of a freely reduced word; e is never zero.
struct Syllable {
  Gen gen;
  Int exp;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
  friend bool operator<(const Syllable& a, const Syllable& b) {
    if (!(a.gen == b.gen)) return a.gen < b.gen;
    return a.exp < b.exp;
  }
};

// A freely reduced word in syllable form. The class maintains the invariant
// that exponents are nonzero and adjacent syllables use distinct generators,
// so value equality is equality in the free group.
class Word {
 public:
  Word() = default;

  static Word gen(const Gen& g, const Int& exp = 1);
  // Concatenates and freely reduces.
  static Word from_syllables(std::vector<Syllable> syls);

  const std::vector<Syllable>& syllables() const { return syls_; }
  bool empty() const { return syls_.empty(); }
  std::size_t size() const { return syls_.size(); }
  // Total letter count, i.e. the sum of |exponent| over syllables.
  Int letter_length() const;

  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);
  Word inv() const;
  Word pow(const Int& k) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.syls_ == b.syls_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    return a.syls_ < b.syls_;
  }

  Int exponent_sum(const Gen& g) const;
  // Generators occurring in the word, sorted, without duplicates.
  std::vector<Gen> support() const;
  bool contains(const Gen& g) const;

  // Replaces every generator by its image; every generator occurring in the
  // word must be mapped.
  Word substitute(const std::map<Gen, Word>& images) const;
  // Adds delta to the index of every generator whose name matches family.
  // Indexless generators of that name are not touched.
  Word shift_indices(const std::string& family, long delta) const;

  std::string str() const;
  static Word parse(const std::string& text);

 private:
  std::vector<Syllable> syls_;
};

inline Word operator^(const Word& w, const Int& k) { return w.pow(k); }

// conj(a, w) = a w a^-1
Word conj(const Word& a, const Word& w);
// comm(a, b) = a b a^-1 b^-1
Word comm(const Word& a, const Word& b);

// Convenience for tests and builders: parse a word literal.
inline Word W(const std::string& text) { return Word::parse(text); }

}  // namespace cgt
