#include "cgt/complexes.hpp"

#include <map>
#include <utility>

#include "cgt/error.hpp"

namespace cgt {

TwoComplex two_complex(Presentation p) {
  TwoComplex k;
  k.one_cells = p.gens.size();
  k.two_cells = p.relators.size();
  k.chi = euler_char(p);
  k.presentation = std::move(p);
  return k;
}

Word prime_word(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (const auto& s : w.syllables()) out.push_back({s.gen.prime(), s.exp});
  return Word::from_syllables(std::move(out));
}

Presentation double_presentation(const Presentation& p,
                                 const std::vector<Word>& ids) {
  for (const auto& g : p.gens)
    if (g.primed)
      fail("double: presentation already uses the primed generator '",
           g.str(), "'");
  for (const auto& w : ids) {
    if (w.empty()) fail("double: empty identification word");
    for (const auto& g : w.support())
      if (!p.has_gen(g))
        fail("double: identification word '", w.str(),
             "' uses '", g.str(), "', which is not a generator");
  }
  std::vector<Gen> gens = p.gens;
  for (const auto& g : p.gens) gens.push_back(g.prime());
  std::vector<Word> relators = p.relators;
  for (const auto& r : p.relators) relators.push_back(prime_word(r));
  for (const auto& w : ids) relators.push_back(w * prime_word(w).inv());
  return make_presentation(std::move(gens), std::move(relators));
}

Int chi_level_formula(const Int& chi_min, std::size_t genset_size) {
  return 2 * chi_min - 1 + Int(genset_size);
}

std::pair<Word, Word> trefoil_genset(long i) {
  if (i < 0) fail("trefoil genset: negative level ", i);
  return {Word::gen(Gen("x"), 2 * i + 1), Word::gen(Gen("y"), 3 * i + 1)};
}

bool verify_doubled_quotient(const Presentation& p_doubled, const Oracle& o) {
  std::map<Gen, Word> collapse;
  for (const auto& g : p_doubled.gens)
    collapse.emplace(g, Word::gen(Gen(g.name, g.index, false)));
  return check_hom(p_doubled, collapse, o);
}

}  // namespace cgt
