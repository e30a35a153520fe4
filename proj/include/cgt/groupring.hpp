#pragma once

#include <map>
#include <memory>
#include <string>

#include "cgt/oracle.hpp"

namespace cgt {

// Element of the integral group ring Z[G]. Keys are canonical normal-form
// words of the backing oracle, so coefficient collection is exact equality
// in G. Operations between elements of different groups are errors.
class RingElt {
 public:
  explicit RingElt(OraclePtr oracle);
  static RingElt term(OraclePtr oracle, const Word& w, const Int& c = 1);
  static RingElt one(OraclePtr oracle) { return term(oracle, Word()); }

  const std::map<Word, Int>& terms() const { return terms_; }
  const OraclePtr& oracle() const { return oracle_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Word& w) const;  // canonicalizes w first
  Int augmentation() const;        // sum of coefficients

  RingElt& operator+=(const RingElt& rhs);
  RingElt& operator-=(const RingElt& rhs);
  RingElt operator+(const RingElt& rhs) const;
  RingElt operator-(const RingElt& rhs) const;
  RingElt operator*(const RingElt& rhs) const;
  RingElt operator*(const Int& c) const;
  RingElt operator-() const;
  bool operator==(const RingElt& rhs) const;
  bool operator!=(const RingElt& rhs) const { return !(*this == rhs); }

  // Re-canonicalizes every key through a different oracle for the same
  // underlying group (e.g. an image view versus its inner oracle).
  RingElt rebased(OraclePtr oracle) const;

  // Sorted "coef*<word>" terms joined by " + "; "0" when zero.
  std::string str() const;

 private:
  OraclePtr oracle_;
  std::map<Word, Int> terms_;

  void add_term(const Word& canonical, const Int& c);
  void check_same_group(const RingElt& rhs) const;
};

inline RingElt operator*(const Int& c, const RingElt& a) { return a * c; }

// Twisted Laurent polynomial over Z[H]: a finite map degree -> coefficient
// recording the decomposition ZG = ZH[x^{+-1}]. Purely additive container;
// products are taken in ZG and re-decomposed.
class SkewLaurent {
 public:
  explicit SkewLaurent(OraclePtr coeff_oracle);
  static SkewLaurent term(long degree, const RingElt& coeff);

  const std::map<long, RingElt>& coeffs() const { return coeffs_; }
  const OraclePtr& coeff_oracle() const { return oracle_; }
  bool is_zero() const { return coeffs_.empty(); }
  RingElt coeff(long degree) const;  // zero element when absent
  long lo_degree() const;            // error on the zero element
  long hi_degree() const;
  long length() const;               // hi - lo; error on the zero element

  SkewLaurent& operator+=(const SkewLaurent& rhs);
  SkewLaurent operator+(const SkewLaurent& rhs) const;
  SkewLaurent operator-(const SkewLaurent& rhs) const;
  SkewLaurent operator-() const;
  bool operator==(const SkewLaurent& rhs) const;
  bool operator!=(const SkewLaurent& rhs) const { return !(*this == rhs); }

  // Left module action of Z[H] on every coefficient.
  SkewLaurent left_mul(const RingElt& h) const;

  // "(<coeff>)x^i" terms joined by " + " in ascending degree; "0" when zero.
  std::string str() const;

 private:
  OraclePtr oracle_;
  std::map<long, RingElt> coeffs_;

  void set_coeff(long degree, RingElt c);
  friend class SkewRing;
};

// The decomposition ZG = ZH[x^{+-1}] for G = BS(m,n) = H x| <x>, where H is
// the kernel of the x-exponent map, generated by y_i = x^i y x^{-i} for i in
// the window [lo, hi]. Coefficients live in Z[H] with keys canonicalized by
// the chain-of-amalgams oracle for H (relation y_{i+1}^m = y_i^n).
class SkewRing {
 public:
  SkewRing(std::shared_ptr<const BsOracle> group, long lo, long hi);

  const std::shared_ptr<const BsOracle>& group() const { return group_; }
  const OraclePtr& coeff_oracle() const { return h_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }

  // Factors a canonical G-word as h * x^i with h in the window's y_i family;
  // returns (i, canonical H-key). Errors when a base letter falls outside
  // the window.
  std::pair<long, Word> factor_key(const Word& w) const;

  // a may be over the BS oracle itself or over an image view whose inner
  // oracle is the BS oracle (keys agree in both cases).
  SkewLaurent to_skew(const RingElt& a) const;
  RingElt from_skew(const SkewLaurent& s) const;

 private:
  std::shared_ptr<const BsOracle> group_;
  OraclePtr h_;
  long lo_, hi_;
};

}  // namespace cgt
