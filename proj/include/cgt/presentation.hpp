#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgt/oracle.hpp"
#include "cgt/word.hpp"

namespace cgt {

// A finite presentation. Relators are stored freely and cyclically reduced
// (cyclic reduction merges a shared boundary generator into the trailing
// syllable and never rotates otherwise, so builders' relator spellings are
// preserved). Identity relators are rejected at construction and silently
// dropped when a Tietze substitution trivializes a relator.
struct Presentation {
  std::vector<Gen> gens;
  std::vector<Word> relators;

  bool has_gen(const Gen& g) const;
};

Presentation make_presentation(std::vector<Gen> gens,
                               std::vector<Word> relators);

// g^a w g^b at the boundary becomes w g^(a+b); a full cancellation drops
// both syllables. Single-syllable words are left alone.
Word cyclically_reduce(Word w);

Int euler_char(const Presentation& p);

// Appends generator g and defining relator g·def^-1.
Presentation tietze_add_gen(const Presentation& p, const Gen& g,
                            const Word& def);

// Eliminates g using the named defining relator, which must contain g in
// exactly one syllable with exponent +-1 (i.e. be g·w^-1 up to cyclic
// rotation and inversion, w free of g). Every other relator has g replaced
// by w; the defining relator is deleted and g dropped.
Presentation tietze_remove_gen(const Presentation& p, const Gen& g,
                               std::size_t defining_relator_index);

// The word w that tietze_remove_gen would substitute for g.
Word tietze_elimination_image(const Presentation& p, const Gen& g,
                              std::size_t defining_relator_index);

// Replaces relator `index` by new_word, checking a certificate that the two
// are equivalent modulo the presentation's other relators: each defs entry
// (g, d) must be backed by a stored relator equal to g·d^-1 up to
// syllable-level cyclic rotation and inversion (and distinct from `index`),
// no defs value may mention a defs key, and eliminating the defs keys by
// substitution must send new_word and the old relator to the same free
// word. Fails with an invalid-certificate error otherwise.
Presentation tietze_rewrite_relator(const Presentation& p, std::size_t index,
                                    const Word& new_word,
                                    const std::map<Gen, Word>& defs);

// Replaces relator `index` by its inverse (same normal closure).
Presentation tietze_invert_relator(const Presentation& p, std::size_t index);

// |relators| x |gens| exponent-sum matrix, columns in gens order.
std::vector<std::vector<Int>> abelianization_matrix(const Presentation& p);

// Named presentations.
Presentation bs(long m, long n);           // <x,y | x y^m x^-1 y^-n>
Presentation trefoil();                     // <x,y | x^2 y^-3>
Presentation gbar();                        // <x,z | z^-1 (x z x^-1 z^-1)^2>
// <z_lo..z_{hi+1} | z_i (z_{i+1} z_i^-1)^-2 for i in [lo,hi]>
Presentation hbar_window(long lo, long hi);
// Instantiates each template word at every index in [lo,hi] by shifting all
// indexed generators; generators are the union of relator supports.
Presentation staggered_window(const std::vector<Word>& templates, long lo,
                              long hi);

struct GroupHom {
  Presentation source;
  Presentation target;
  std::map<Gen, Word> images;
  OraclePtr target_oracle;
};

// True iff every source relator maps to a trivial word of the target.
bool check_hom(const Presentation& source, const std::map<Gen, Word>& images,
               const Oracle& target_oracle);
bool check_hom(const GroupHom& h);

// Validating constructor: throws unless check_hom passes.
GroupHom make_group_hom(Presentation source, Presentation target,
                        std::map<Gen, Word> images, OraclePtr target_oracle);

// Text format: one `gens: x y z_0` line, `rel: <word>` lines, `#` comments.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

}  // namespace cgt
