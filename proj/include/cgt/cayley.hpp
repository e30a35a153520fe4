#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cgt/fox.hpp"
#include "cgt/oracle.hpp"
#include "cgt/word.hpp"

namespace cgt {

// A radius-bounded ball of a Cayley graph. Vertices are canonical normal
// forms discovered by BFS from the identity (step words and their inverses,
// in the given order), so two builds with the same inputs are identical.
// Edges are the pairs (source, gen index) whose BOTH endpoints lie in the
// ball; the target of (v, i) is nf(v * gens[i]).
struct CayleyBall {
  using Edge = std::pair<Word, std::size_t>;  // (source vertex, gen index)

  OraclePtr oracle;
  std::vector<Word> gens;
  long radius = 0;
  std::vector<Word> vertices;                 // BFS discovery order
  std::map<Word, std::size_t> vertex_index;   // vertex -> position
  std::map<Word, Word> path_from_identity;    // BFS-shortest witness word
  std::vector<Edge> edges;                    // vertex order x gen order
  std::map<Edge, Word> edge_target;

  bool has_vertex(const Word& canonical) const {
    return vertex_index.count(canonical) != 0;
  }
};

// Signed integer combination of ball edges. Chains from different balls do
// not mix; the ball outlives its chains.
struct EdgeChain {
  const CayleyBall* ball = nullptr;
  std::map<CayleyBall::Edge, Int> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  EdgeChain& operator+=(const EdgeChain& rhs);
  EdgeChain& operator-=(const EdgeChain& rhs);
  EdgeChain operator+(const EdgeChain& rhs) const;
  EdgeChain operator-(const EdgeChain& rhs) const;
  EdgeChain operator-() const;
  bool operator==(const EdgeChain& rhs) const;
  bool operator!=(const EdgeChain& rhs) const { return !(*this == rhs); }
};

// BFS ball construction; errors once the vertex count would pass the budget.
CayleyBall build_ball(OraclePtr o, std::vector<Word> gens, long radius,
                      std::size_t budget = 1000000);

// Walks w letter by letter from the identity; an inverse letter contributes
// -1 to the forward edge it traverses. Errors (naming the first escaping
// prefix) when the path leaves the ball. Every letter of w must be a
// single-generator ball label.
EdgeChain lift_word(const CayleyBall& ball, const Word& w);

// Sum of coef * (target - source) per edge, as a vertex -> coefficient map
// with zero entries dropped. Empty iff the chain is a cycle.
std::map<Word, Int> boundary(const EdgeChain& c);

// Left-translates every edge source by f; errors when an endpoint leaves
// the ball.
EdgeChain translate(const EdgeChain& c, const Word& f);

// Edge (h, z_i) receives the coefficient of h in the z_i row. Every group
// element in the rows must be a ball vertex (and the edge must exist),
// otherwise a support-outside-ball error is raised.
EdgeChain fox_to_chain(const CayleyBall& ball, const FoxVector& v);

// Inverse transport: row g collects coef * h over the edges labelled g. The
// returned vector carries an identity source word (the natural reading for
// cycles); compare rows, not sources.
FoxVector chain_to_fox(const EdgeChain& c);

// Decomposes a cycle into closed walks: repeatedly starts at the earliest
// BFS vertex with an unused edge copy, follows the smallest unused copy
// until first return, and pairs each closed-walk word s with the BFS path
// word f to its start vertex. The reassembly
//   sum_j fox_to_chain(fox_vector(f_j s_j f_j^-1)) == c
// is checked before returning. Errors on non-cycles.
std::vector<std::pair<Word, Word>> cycle_to_relators(const EdgeChain& c);

// Graphviz text form, vertices labelled by word literals.
std::string to_dot(const CayleyBall& ball);

}  // namespace cgt
