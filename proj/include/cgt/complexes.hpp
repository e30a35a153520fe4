#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cgt/oracle.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

// Cell counts of the presentation 2-complex: one vertex, a 1-cell per
// generator, a 2-cell per relator, so chi = 1 - |gens| + |relators|.
struct TwoComplex {
  Presentation presentation;
  std::size_t vertices = 1;
  std::size_t one_cells = 0;
  std::size_t two_cells = 0;
  Int chi = 0;
};

TwoComplex two_complex(Presentation p);

// Every generator in w replaced by its primed copy.
Word prime_word(const Word& w);

// The double of p along the given identification words: generators are the
// originals followed by their primed copies, relators are the originals,
// their primed copies, and one relator w·(w')^-1 per identification word w.
// Identification words must be nonempty words in the generators of p, and p
// itself must be unprimed.
Presentation double_presentation(const Presentation& p,
                                 const std::vector<Word>& ids);

// Euler characteristic of a double over a generating set of the given size
// when the halves realize the minimum: 2·chi_min - 1 + genset_size.
Int chi_level_formula(const Int& chi_min, std::size_t genset_size);

// The generating pair (x^(2i+1), y^(3i+1)) of the trefoil group
// <x, y | x^2 = y^3>, defined for i >= 0.
std::pair<Word, Word> trefoil_genset(long i);

// True iff collapsing primes (g' -> g) sends every relator of p_doubled to
// the identity of the group judged by o, i.e. the doubled presentation still
// maps onto the original group.
bool verify_doubled_quotient(const Presentation& p_doubled, const Oracle& o);

}  // namespace cgt
