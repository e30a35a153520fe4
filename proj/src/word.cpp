#include "cgt/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cgt {

std::string Gen::str() const {
  std::ostringstream os;
  os << name;
  if (index) os << '_' << *index;
  if (primed) os << '\'';
  return os.str();
}

Word Word::gen(const Gen& g, const Int& exp) {
  Word w;
  if (exp != 0) w.syls_.push_back({g, exp});
  return w;
}

Word Word::from_syllables(std::vector<Syllable> syls) {
  Word w;
  for (auto& s : syls) {
    if (s.exp == 0) continue;
    if (!w.syls_.empty() && w.syls_.back().gen == s.gen) {
      w.syls_.back().exp += s.exp;
      if (w.syls_.back().exp == 0) w.syls_.pop_back();
    } else {
      w.syls_.push_back(std::move(s));
    }
  }
  return w;
}

Int Word::letter_length() const {
  Int n = 0;
  for (const auto& s : syls_) n += abs(s.exp);
  return n;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& s : rhs.syls_) {
    if (!syls_.empty() && syls_.back().gen == s.gen) {
      syls_.back().exp += s.exp;
      if (syls_.back().exp == 0) syls_.pop_back();
    } else {
      syls_.push_back(s);
    }
  }
  return *this;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  w *= rhs;
  return w;
}

Word Word::inv() const {
  Word w;
  w.syls_.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
    w.syls_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(const Int& k) const {
  if (k == 0 || syls_.empty()) return Word();
  if (syls_.size() == 1) return gen(syls_[0].gen, syls_[0].exp * k);
  // Multi-syllable powers are only used with small exponents; guard against
  // accidental blowup.
  if (abs(k) > 1000000) fail("word power ", k, " too large for a ",
                             syls_.size(), "-syllable base");
  Word w;
  Word base = k > 0 ? *this : inv();
  for (Int i = abs(k); i > 0; --i) w *= base;
  return w;
}

Int Word::exponent_sum(const Gen& g) const {
  Int n = 0;
  for (const auto& s : syls_)
    if (s.gen == g) n += s.exp;
  return n;
}

std::vector<Gen> Word::support() const {
  std::vector<Gen> out;
  for (const auto& s : syls_) {
    bool seen = false;
    for (const auto& g : out)
      if (g == s.gen) { seen = true; break; }
    if (!seen) out.push_back(s.gen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Word::contains(const Gen& g) const {
  for (const auto& s : syls_)
    if (s.gen == g) return true;
  return false;
}

Word Word::substitute(const std::map<Gen, Word>& images) const {
  Word out;
  for (const auto& s : syls_) {
    auto it = images.find(s.gen);
    if (it == images.end())
      fail("substitute: no image for generator '", s.gen.str(), "'");
    out *= it->second.pow(s.exp);
  }
  return out;
}

Word Word::shift_indices(const std::string& family, long delta) const {
  std::vector<Syllable> syls = syls_;
  for (auto& s : syls)
    if (s.gen.name == family && s.gen.index)
      s.gen.index = *s.gen.index + delta;
  return from_syllables(std::move(syls));
}

std::string Word::str() const {
  if (syls_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syls_) {
    if (!first) os << ' ';
    first = false;
    os << s.gen.str();
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

namespace {

// Reads a decimal integer (with optional leading '-') starting at i.
Int parse_int(const std::string& t, std::size_t& i, const char* what) {
  std::size_t start = i;
  if (i < t.size() && t[i] == '-') ++i;
  std::size_t digits = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == digits)
    fail("word literal: expected ", what, " at col ", start + 1);
  return Int(t.substr(start, i - start));
}

}  // namespace

Word Word::parse(const std::string& text) {
  std::vector<Syllable> syls;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (text[i] == '1') {
      ++i;
      if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
        fail("word literal: unexpected character '", text[i],
             "' after identity token at col ", i + 1);
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(text[i])))
      fail("word literal: unexpected character '", text[i], "' at col ", col);
    std::size_t start = i;
    while (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    Gen g(text.substr(start, i - start));
    if (i < n && text[i] == '_') {
      ++i;
      Int idx = parse_int(text, i, "index");
      if (idx < -1000000000 || idx > 1000000000)
        fail("word literal: index out of range at col ", col);
      g.index = static_cast<long>(idx);
    }
    if (i < n && text[i] == '\'') {
      g.primed = true;
      ++i;
    }
    Int exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      exp = parse_int(text, i, "exponent");
      if (exp == 0) fail("word literal: exponent 0 at col ", col);
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      fail("word literal: unexpected character '", text[i], "' at col ",
           i + 1);
    syls.push_back({std::move(g), std::move(exp)});
  }
  return from_syllables(std::move(syls));
}

Word conj(const Word& a, const Word& w) { return a * w * a.inv(); }

Word comm(const Word& a, const Word& b) {
  return a * b * a.inv() * b.inv();
}

}  // namespace cgt
