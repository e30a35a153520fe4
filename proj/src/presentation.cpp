#include "cgt/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cgt {

bool Presentation::has_gen(const Gen& g) const {
  return std::find(gens.begin(), gens.end(), g) != gens.end();
}

Word cyclically_reduce(Word w) {
  while (w.size() >= 2) {
    const auto& syls = w.syllables();
    const Syllable& first = syls.front();
    const Syllable& last = syls.back();
    if (!(first.gen == last.gen)) break;
    std::vector<Syllable> mid(syls.begin() + 1, syls.end() - 1);
    if (first.exp + last.exp != 0)
      mid.push_back({first.gen, first.exp + last.exp});
    w = Word::from_syllables(std::move(mid));
  }
  return w;
}

Presentation make_presentation(std::vector<Gen> gens,
                               std::vector<Word> relators) {
  std::set<Gen> seen;
  for (const auto& g : gens)
    if (!seen.insert(g).second)
      fail("presentation: duplicate generator '", g.str(), "'");
  Presentation p{std::move(gens), {}};
  for (auto& r : relators) {
    for (const auto& g : r.support())
      if (!p.has_gen(g))
        fail("presentation: relator uses unknown generator '", g.str(), "'");
    Word reduced = cyclically_reduce(std::move(r));
    if (reduced.empty()) fail("presentation: identity relator");
    p.relators.push_back(std::move(reduced));
  }
  return p;
}

Int euler_char(const Presentation& p) {
  return Int(1) - Int(p.gens.size()) + Int(p.relators.size());
}

Presentation tietze_add_gen(const Presentation& p, const Gen& g,
                            const Word& def) {
  if (p.has_gen(g))
    fail("tietze_add_gen: generator '", g.str(), "' already present");
  for (const auto& h : def.support())
    if (!p.has_gen(h))
      fail("tietze_add_gen: definition uses unknown generator '", h.str(),
           "'");
  Presentation out = p;
  out.gens.push_back(g);
  out.relators.push_back(cyclically_reduce(Word::gen(g) * def.inv()));
  return out;
}

namespace {

// Locates the unique syllable of `g` in the relator and checks it is a
// single letter; returns its index.
std::size_t eliminable_syllable(const Word& r, const Gen& g,
                                std::size_t relator_index) {
  std::size_t pos = r.size();
  std::size_t occurrences = 0;
  const auto& syls = r.syllables();
  for (std::size_t i = 0; i < syls.size(); ++i) {
    if (syls[i].gen == g) {
      ++occurrences;
      pos = i;
    }
  }
  if (occurrences != 1)
    fail("tietze_remove_gen: relator ", relator_index, " contains '", g.str(),
         "' in ", occurrences, " syllables, need exactly 1");
  if (syls[pos].exp != 1 && syls[pos].exp != -1)
    fail("tietze_remove_gen: relator ", relator_index, " contains '", g.str(),
         "' with exponent ", syls[pos].exp, ", need +-1");
  return pos;
}

Word elimination_image(const Word& r, const Gen& g,
                       std::size_t relator_index) {
  const std::size_t pos = eliminable_syllable(r, g, relator_index);
  const auto& syls = r.syllables();
  // Cyclic rest after the g-letter: syls[pos+1..] then syls[..pos-1].
  std::vector<Syllable> rest(syls.begin() + pos + 1, syls.end());
  rest.insert(rest.end(), syls.begin(), syls.begin() + pos);
  Word w = Word::from_syllables(std::move(rest));
  // r ~ g^e · w, so g = w^-1 when e = +1 and g = w when e = -1.
  return syls[pos].exp == 1 ? w.inv() : w;
}

std::map<Gen, Word> identity_map_without(const std::vector<Gen>& gens,
                                         const Gen& g, const Word& image) {
  std::map<Gen, Word> m;
  for (const auto& h : gens) m[h] = Word::gen(h);
  m[g] = image;
  return m;
}

}  // namespace

Word tietze_elimination_image(const Presentation& p, const Gen& g,
                              std::size_t defining_relator_index) {
  if (!p.has_gen(g))
    fail("tietze_remove_gen: unknown generator '", g.str(), "'");
  if (defining_relator_index >= p.relators.size())
    fail("tietze_remove_gen: relator index ", defining_relator_index,
         " out of range");
  return elimination_image(p.relators[defining_relator_index], g,
                           defining_relator_index);
}

Presentation tietze_remove_gen(const Presentation& p, const Gen& g,
                               std::size_t defining_relator_index) {
  const Word image = tietze_elimination_image(p, g, defining_relator_index);
  const auto sub = identity_map_without(p.gens, g, image);
  Presentation out;
  for (const auto& h : p.gens)
    if (!(h == g)) out.gens.push_back(h);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == defining_relator_index) continue;
    Word r = cyclically_reduce(p.relators[i].substitute(sub));
    if (!r.empty()) out.relators.push_back(std::move(r));
  }
  return out;
}

namespace {

bool same_up_to_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a == b) return true;
  const auto& syls = a.syllables();
  for (std::size_t k = 1; k < syls.size(); ++k) {
    std::vector<Syllable> rot(syls.begin() + k, syls.end());
    rot.insert(rot.end(), syls.begin(), syls.begin() + k);
    if (Word::from_syllables(std::move(rot)) == b) return true;
  }
  return false;
}

}  // namespace

Presentation tietze_rewrite_relator(const Presentation& p, std::size_t index,
                                    const Word& new_word,
                                    const std::map<Gen, Word>& defs) {
  if (index >= p.relators.size())
    fail("tietze_rewrite_relator: relator index ", index, " out of range");
  // defs values must not mention defs keys, so that eliminating the keys by
  // substitution is a retraction.
  for (const auto& [g, d] : defs) {
    if (!p.has_gen(g))
      fail("tietze_rewrite_relator: unknown generator '", g.str(), "'");
    for (const auto& [h, unused] : defs)
      if (d.contains(h))
        fail("tietze_rewrite_relator: definition of '", g.str(),
             "' mentions defined generator '", h.str(), "'");
  }
  // Each definition must be certified by a stored relator (other than the
  // one being rewritten) matching g·d^-1 up to rotation and inversion.
  for (const auto& [g, d] : defs) {
    const Word cert = cyclically_reduce(Word::gen(g) * d.inv());
    bool backed = false;
    for (std::size_t i = 0; i < p.relators.size() && !backed; ++i) {
      if (i == index) continue;
      backed = same_up_to_rotation(p.relators[i], cert) ||
               same_up_to_rotation(p.relators[i], cert.inv());
    }
    if (!backed)
      fail("tietze_rewrite_relator: no stored relator certifies '", g.str(),
           "' = ", d.str());
  }
  for (const auto& h : new_word.support())
    if (!p.has_gen(h))
      fail("tietze_rewrite_relator: new relator uses unknown generator '",
           h.str(), "'");
  // Retraction check: with every defined generator replaced by its
  // definition, old and new relator must agree as free words. This is sound
  // and complete for equivalence modulo the certifying relators.
  std::map<Gen, Word> sigma;
  for (const auto& h : p.gens) sigma[h] = Word::gen(h);
  for (const auto& [g, d] : defs) sigma[g] = d;
  if (!(new_word.substitute(sigma) == p.relators[index].substitute(sigma)))
    fail("tietze_rewrite_relator: '", new_word.str(),
         "' is not equivalent to relator ", index,
         " modulo the given definitions");
  Word stored = cyclically_reduce(new_word);
  if (stored.empty())
    fail("tietze_rewrite_relator: new relator is the identity");
  Presentation out = p;
  out.relators[index] = std::move(stored);
  return out;
}

Presentation tietze_invert_relator(const Presentation& p, std::size_t index) {
  if (index >= p.relators.size())
    fail("tietze_invert_relator: relator index ", index, " out of range");
  Presentation out = p;
  out.relators[index] = cyclically_reduce(p.relators[index].inv());
  return out;
}

std::vector<std::vector<Int>> abelianization_matrix(const Presentation& p) {
  std::vector<std::vector<Int>> m;
  m.reserve(p.relators.size());
  for (const auto& r : p.relators) {
    std::vector<Int> row;
    row.reserve(p.gens.size());
    for (const auto& g : p.gens) row.push_back(r.exponent_sum(g));
    m.push_back(std::move(row));
  }
  return m;
}

Presentation bs(long m, long n) {
  if (m <= 0 || n <= 0) fail("bs: m and n must be positive");
  Gen x("x"), y("y");
  Word r = Word::gen(x) * Word::gen(y, m) * Word::gen(x, -1) * Word::gen(y, -n);
  return make_presentation({x, y}, {r});
}

Presentation trefoil() {
  Gen x("x"), y("y");
  return make_presentation({x, y}, {Word::gen(x, 2) * Word::gen(y, -3)});
}

Presentation gbar() {
  Gen x("x"), z("z");
  Word r = Word::gen(z, -1) * comm(Word::gen(x), Word::gen(z)).pow(2);
  return make_presentation({x, z}, {r});
}

Presentation hbar_window(long lo, long hi) {
  if (lo > hi) fail("hbar_window: lo > hi");
  Word tmpl = Word::gen(Gen("z", 0)) *
              (Word::gen(Gen("z", 1)) * Word::gen(Gen("z", 0), -1)).pow(-2);
  return staggered_window({tmpl}, lo, hi);
}

Presentation staggered_window(const std::vector<Word>& templates, long lo,
                              long hi) {
  if (lo > hi) fail("staggered_window: lo > hi");
  std::vector<Word> relators;
  std::set<Gen> support;
  for (long i = lo; i <= hi; ++i) {
    for (const auto& t : templates) {
      std::vector<Syllable> syls = t.syllables();
      for (auto& s : syls)
        if (s.gen.index) s.gen.index = *s.gen.index + i;
      Word r = Word::from_syllables(std::move(syls));
      for (const auto& g : r.support()) support.insert(g);
      relators.push_back(std::move(r));
    }
  }
  return make_presentation({support.begin(), support.end()},
                           std::move(relators));
}

bool check_hom(const Presentation& source, const std::map<Gen, Word>& images,
               const Oracle& target_oracle) {
  for (const auto& g : source.gens)
    if (!images.count(g))
      fail("check_hom: no image for generator '", g.str(), "'");
  for (const auto& r : source.relators)
    if (!target_oracle.is_trivial(r.substitute(images))) return false;
  return true;
}

bool check_hom(const GroupHom& h) {
  if (!h.target_oracle) fail("check_hom: missing target oracle");
  return check_hom(h.source, h.images, *h.target_oracle);
}

GroupHom make_group_hom(Presentation source, Presentation target,
                        std::map<Gen, Word> images, OraclePtr target_oracle) {
  GroupHom h{std::move(source), std::move(target), std::move(images),
             std::move(target_oracle)};
  if (!check_hom(h))
    fail("make_group_hom: a source relator has nontrivial image");
  return h;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Gen> gens;
  std::vector<Word> relators;
  bool saw_gens = false;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    try {
      if (line.rfind("gens:", 0) == 0) {
        if (saw_gens) fail("duplicate gens line");
        saw_gens = true;
        Word w = Word::parse(line.substr(5));
        for (const auto& s : w.syllables()) {
          if (s.exp != 1) fail("generator list entry with exponent");
          gens.push_back(s.gen);
        }
      } else if (line.rfind("rel:", 0) == 0) {
        relators.push_back(Word::parse(line.substr(4)));
      } else {
        fail("expected 'gens:' or 'rel:'");
      }
    } catch (const Error& e) {
      fail("presentation file line ", lineno, ": ", e.what());
    }
  }
  if (!saw_gens) fail("presentation file: missing gens line");
  return make_presentation(std::move(gens), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : p.gens) os << ' ' << g.str();
  os << '\n';
  for (const auto& r : p.relators) os << "rel: " << r.str() << '\n';
  return os.str();
}

}  // namespace cgt
