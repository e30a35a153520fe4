#include "cgt/fox.hpp"

#include <algorithm>

#include "cgt/error.hpp"

namespace cgt {

namespace {

// Cap on the letters expanded out of a single syllable; keeps a runaway
// exponent from allocating the matching number of ring terms.
constexpr long kFoxSyllableBudget = 65536;

}  // namespace

const RingElt& FoxVector::wrt(const Gen& g) const {
  auto it = rows.find(g);
  if (it == rows.end())
    fail("fox vector for '", source.str(), "' has no row for '", g.str(),
         "'");
  return it->second;
}

RingElt fox_derive(const Word& w, const Gen& g, OraclePtr o) {
  if (!o) fail("fox derivative: missing oracle");
  RingElt out(o);
  Word prefix;
  for (const auto& s : w.syllables()) {
    if (s.gen == g) {
      if (s.exp > kFoxSyllableBudget || s.exp < -kFoxSyllableBudget)
        fail("fox derivative: syllable ", s.gen.str(), "^", s.exp.str(),
             " exceeds the ", kFoxSyllableBudget, "-term budget");
      if (s.exp > 0) {
        for (Int j = 0; j < s.exp; ++j)
          out += RingElt::term(o, prefix * Word::gen(g, j));
      } else {
        for (Int j = -1; j >= s.exp; --j)
          out -= RingElt::term(o, prefix * Word::gen(g, j));
      }
    }
    prefix *= Word::gen(s.gen, s.exp);
  }
  return out;
}

FoxVector fox_vector(const Word& w, const std::vector<Gen>& gens,
                     OraclePtr o) {
  if (!o) fail("fox vector: missing oracle");
  for (const auto& g : w.support())
    if (std::find(gens.begin(), gens.end(), g) == gens.end())
      fail("fox vector: '", w.str(), "' uses generator '", g.str(),
           "' outside the basis");
  FoxVector out{w, {}};
  for (const auto& g : gens) out.rows.emplace(g, fox_derive(w, g, o));
  RingElt lhs(o);
  for (const auto& [g, d] : out.rows)
    lhs += d * (RingElt::term(o, Word::gen(g)) - RingElt::one(o));
  if (lhs != RingElt::term(o, w) - RingElt::one(o))
    fail("fox identity violated for '", w.str(), "' over ", o->describe());
  return out;
}

std::vector<FoxVector> jacobian(const Presentation& p, OraclePtr o) {
  std::vector<FoxVector> rows;
  rows.reserve(p.relators.size());
  for (const auto& r : p.relators) rows.push_back(fox_vector(r, p.gens, o));
  return rows;
}

SkewLaurent relation_module_element(const Word& r, const std::string& family,
                                    OraclePtr o) {
  if (!o) fail("relation module: missing oracle");
  const std::vector<Gen> zs = r.support();
  for (const auto& g : zs)
    if (g.name != family || !g.index || g.primed)
      fail("relation module: generator '", g.str(),
           "' is not in the indexed family '", family, "'");
  if (!o->is_trivial(r))
    fail("relation module: '", r.str(), "' is not a relator of ",
         o->describe());
  // The identity check inside fox_vector is exactly the boundary condition
  // here: r is trivial, so sum_i (dr/dz_i)(z_i - 1) must come out zero.
  FoxVector fv = fox_vector(r, zs, o);
  OraclePtr co = o;
  if (auto img = std::dynamic_pointer_cast<const ImageOracle>(o))
    co = img->inner();
  SkewLaurent out(co);
  for (const auto& g : zs) {
    const RingElt& d = fv.wrt(g);
    if (d.is_zero()) continue;
    out += SkewLaurent::term(*g.index, co == o ? d : d.rebased(co));
  }
  return out;
}

}  // namespace cgt
