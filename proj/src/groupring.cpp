#include "cgt/groupring.hpp"

#include <sstream>

namespace cgt {

// ------------------------------------------------------------------ RingElt

RingElt::RingElt(OraclePtr oracle) : oracle_(std::move(oracle)) {
  if (!oracle_) fail("ring element: missing oracle");
}

RingElt RingElt::term(OraclePtr oracle, const Word& w, const Int& c) {
  RingElt out(std::move(oracle));
  if (c != 0) out.add_term(out.oracle_->nf(w).word, c);
  return out;
}

Int RingElt::coeff(const Word& w) const {
  auto it = terms_.find(oracle_->nf(w).word);
  return it == terms_.end() ? Int(0) : it->second;
}

Int RingElt::augmentation() const {
  Int s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

void RingElt::add_term(const Word& canonical, const Int& c) {
  auto it = terms_.find(canonical);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(canonical, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void RingElt::check_same_group(const RingElt& rhs) const {
  if (oracle_ == rhs.oracle_) return;
  const std::string a = oracle_->describe(), b = rhs.oracle_->describe();
  if (a != b)
    fail("ring elements use different groups: ", a, " vs ", b);
}

RingElt& RingElt::operator+=(const RingElt& rhs) {
  check_same_group(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

RingElt& RingElt::operator-=(const RingElt& rhs) {
  check_same_group(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

RingElt RingElt::operator+(const RingElt& rhs) const {
  RingElt out = *this;
  out += rhs;
  return out;
}

RingElt RingElt::operator-(const RingElt& rhs) const {
  RingElt out = *this;
  out -= rhs;
  return out;
}

RingElt RingElt::operator*(const RingElt& rhs) const {
  check_same_group(rhs);
  RingElt out(oracle_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : rhs.terms_)
      out.add_term(oracle_->nf(wa * wb).word, ca * cb);
  return out;
}

RingElt RingElt::operator*(const Int& c) const {
  RingElt out(oracle_);
  if (c == 0) return out;
  for (const auto& [w, coef] : terms_) out.terms_.emplace(w, coef * c);
  return out;
}

RingElt RingElt::operator-() const { return *this * Int(-1); }

bool RingElt::operator==(const RingElt& rhs) const {
  check_same_group(rhs);
  return terms_ == rhs.terms_;
}

RingElt RingElt::rebased(OraclePtr oracle) const {
  RingElt out(std::move(oracle));
  for (const auto& [w, c] : terms_) out.add_term(out.oracle_->nf(w).word, c);
  return out;
}

std::string RingElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << c << '*' << w.str();
    first = false;
  }
  return os.str();
}

// -------------------------------------------------------------- SkewLaurent

SkewLaurent::SkewLaurent(OraclePtr coeff_oracle)
    : oracle_(std::move(coeff_oracle)) {
  if (!oracle_) fail("skew element: missing coefficient oracle");
}

SkewLaurent SkewLaurent::term(long degree, const RingElt& coeff) {
  SkewLaurent out(coeff.oracle());
  out.set_coeff(degree, coeff);
  return out;
}

RingElt SkewLaurent::coeff(long degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? RingElt(oracle_) : it->second;
}

long SkewLaurent::lo_degree() const {
  if (coeffs_.empty()) fail("skew element: zero element has no degrees");
  return coeffs_.begin()->first;
}

long SkewLaurent::hi_degree() const {
  if (coeffs_.empty()) fail("skew element: zero element has no degrees");
  return coeffs_.rbegin()->first;
}

long SkewLaurent::length() const { return hi_degree() - lo_degree(); }

void SkewLaurent::set_coeff(long degree, RingElt c) {
  if (c.is_zero())
    coeffs_.erase(degree);
  else
    coeffs_.insert_or_assign(degree, std::move(c));
}

SkewLaurent& SkewLaurent::operator+=(const SkewLaurent& rhs) {
  for (const auto& [d, c] : rhs.coeffs_) set_coeff(d, coeff(d) + c);
  return *this;
}

SkewLaurent SkewLaurent::operator+(const SkewLaurent& rhs) const {
  SkewLaurent out = *this;
  out += rhs;
  return out;
}

SkewLaurent SkewLaurent::operator-(const SkewLaurent& rhs) const {
  return *this + (-rhs);
}

SkewLaurent SkewLaurent::operator-() const {
  SkewLaurent out(oracle_);
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, -c);
  return out;
}

bool SkewLaurent::operator==(const SkewLaurent& rhs) const {
  if (coeffs_.size() != rhs.coeffs_.size()) return false;
  auto it = rhs.coeffs_.begin();
  for (const auto& [d, c] : coeffs_) {
    if (d != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

SkewLaurent SkewLaurent::left_mul(const RingElt& h) const {
  SkewLaurent out(oracle_);
  for (const auto& [d, c] : coeffs_) out.set_coeff(d, h * c);
  return out;
}

std::string SkewLaurent::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    if (!first) os << " + ";
    os << '(' << c.str() << ")x^" << d;
    first = false;
  }
  return os.str();
}

// ----------------------------------------------------------------- SkewRing

SkewRing::SkewRing(std::shared_ptr<const BsOracle> group, long lo, long hi)
    : group_(std::move(group)), lo_(lo), hi_(hi) {
  if (!group_) fail("skew ring: missing group oracle");
  if (lo_ > hi_) fail("skew ring: lo > hi");
  if (group_->base().index)
    fail("skew ring: base generator must be indexless");
  // H = ker(G -> Z) is the chain of amalgams over y_i = x^i y x^{-i} with
  // y_{i+1}^m = y_i^n.
  h_ = std::make_shared<ChainAmalgamOracle>(group_->base().name, group_->n(),
                                            group_->m(), lo_, hi_);
}

std::pair<long, Word> SkewRing::factor_key(const Word& w) const {
  const Gen& x = group_->stable();
  const Gen& y = group_->base();
  std::vector<Syllable> hsyls;
  long k = 0;  // running x-prefix exponent
  for (const auto& s : w.syllables()) {
    if (s.gen == x) {
      if (s.exp < -1000000 || s.exp > 1000000)
        fail("skew factorization: x-exponent ", s.exp, " out of range");
      k += static_cast<long>(s.exp);
    } else if (s.gen == y) {
      if (k < lo_ || k > hi_)
        fail("skew factorization: base letter at x-offset ", k,
             " falls outside the window [", lo_, ", ", hi_, "]");
      hsyls.push_back({Gen(y.name, k), s.exp});
    } else {
      fail("skew factorization: unknown generator '", s.gen.str(), "'");
    }
  }
  return {k, h_->nf(Word::from_syllables(std::move(hsyls))).word};
}

SkewLaurent SkewRing::to_skew(const RingElt& a) const {
  // Accept elements over the BS oracle or over an image view of it; the
  // stored keys are identical in both cases.
  const Oracle* base = a.oracle().get();
  if (auto* img = dynamic_cast<const ImageOracle*>(base))
    base = img->inner().get();
  if (base->describe() != group_->describe())
    fail("skew ring: element is over ", a.oracle()->describe(), ", not ",
         group_->describe());
  SkewLaurent out(h_);
  for (const auto& [w, c] : a.terms()) {
    auto [degree, key] = factor_key(w);
    out.set_coeff(degree,
                  out.coeff(degree) + RingElt::term(h_, key, c));
  }
  return out;
}

RingElt SkewRing::from_skew(const SkewLaurent& s) const {
  const Gen& x = group_->stable();
  const Gen& y = group_->base();
  RingElt out(group_);
  for (const auto& [d, c] : s.coeffs()) {
    for (const auto& [h, coef] : c.terms()) {
      std::vector<Syllable> syls;
      for (const auto& syl : h.syllables()) {
        long i = *syl.gen.index;
        syls.push_back({x, i});
        syls.push_back({y, syl.exp});
        syls.push_back({x, -i});
      }
      syls.push_back({x, d});
      out += RingElt::term(group_, Word::from_syllables(std::move(syls)),
                           coef);
    }
  }
  return out;
}

}  // namespace cgt
