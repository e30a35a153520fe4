#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgt/groupring.hpp"
#include "cgt/oracle.hpp"
#include "cgt/presentation.hpp"
#include "cgt/word.hpp"

namespace cgt {

// Fox derivative rows of one word, all over the same oracle. Construction
// (via fox_vector) verifies the fundamental identity
//   sum_g (dw/dg)(g - 1) = w - 1   in Z[G],
// so a FoxVector in hand is a machine-checked derivative.
struct FoxVector {
  Word source;
  std::map<Gen, RingElt> rows;

  const RingElt& wrt(const Gen& g) const;  // error when g has no row
};

// Fox derivative dw/dg with coefficients projected into Z[G] by the oracle.
// Defining rules: dg/dg = 1, d(g^-1)/dg = -g^-1, dh/dg = 0 for h != g, and
// the product rule d(uv) = du + u*dv. Syllables expand with the closed form
// d(g^k)/dg = 1 + g + ... + g^(k-1) for k > 0 and -(g^-1 + ... + g^k) for
// k < 0; exponents past the term budget are an error rather than a stall.
RingElt fox_derive(const Word& w, const Gen& g, OraclePtr o);

// Componentwise fox_derive over gens, which must cover w's support. The
// fundamental identity is checked before returning.
FoxVector fox_vector(const Word& w, const std::vector<Gen>& gens, OraclePtr o);

// One row per relator of p, each over p.gens.
std::vector<FoxVector> jacobian(const Presentation& p, OraclePtr o);

// Relation-module image of a relator over an indexed family: coefficient at
// degree i is dr/dz_i where z_i is family_i, rebased onto the inner oracle
// when o is an image view. r must be trivial in the group (not-a-relator
// error otherwise); the boundary sum_i (dr/dz_i)(z_i - 1) = 0 is verified
// via the fundamental identity before returning.
SkewLaurent relation_module_element(const Word& r, const std::string& family,
                                    OraclePtr o);

}  // namespace cgt
