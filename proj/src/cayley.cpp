#include "cgt/cayley.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cgt/error.hpp"

namespace cgt {

namespace {

void check_same_ball(const EdgeChain& a, const EdgeChain& b) {
  if (a.ball && b.ball && a.ball != b.ball)
    fail("edge chains belong to different balls");
}

void add_coeff(EdgeChain& c, const CayleyBall::Edge& e, const Int& v) {
  if (v == 0) return;
  auto [it, fresh] = c.coeffs.emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c.coeffs.erase(it);
  }
}

// Ball labels as plain generators; every label must be a one-letter word.
std::vector<Gen> label_gens(const CayleyBall& ball) {
  std::vector<Gen> out;
  out.reserve(ball.gens.size());
  for (const auto& w : ball.gens) {
    if (w.size() != 1 || w.syllables()[0].exp != 1)
      fail("ball generator '", w.str(),
           "' is not a single-generator label");
    out.push_back(w.syllables()[0].gen);
  }
  return out;
}

}  // namespace

EdgeChain& EdgeChain::operator+=(const EdgeChain& rhs) {
  check_same_ball(*this, rhs);
  if (!ball) ball = rhs.ball;
  for (const auto& [e, v] : rhs.coeffs) add_coeff(*this, e, v);
  return *this;
}

EdgeChain& EdgeChain::operator-=(const EdgeChain& rhs) {
  check_same_ball(*this, rhs);
  if (!ball) ball = rhs.ball;
  for (const auto& [e, v] : rhs.coeffs) add_coeff(*this, e, -v);
  return *this;
}

EdgeChain EdgeChain::operator+(const EdgeChain& rhs) const {
  EdgeChain out = *this;
  out += rhs;
  return out;
}

EdgeChain EdgeChain::operator-(const EdgeChain& rhs) const {
  EdgeChain out = *this;
  out -= rhs;
  return out;
}

EdgeChain EdgeChain::operator-() const {
  EdgeChain out{ball, {}};
  for (const auto& [e, v] : coeffs) out.coeffs.emplace(e, -v);
  return out;
}

bool EdgeChain::operator==(const EdgeChain& rhs) const {
  check_same_ball(*this, rhs);
  return coeffs == rhs.coeffs;
}

CayleyBall build_ball(OraclePtr o, std::vector<Word> gens, long radius,
                      std::size_t budget) {
  if (!o) fail("ball: missing oracle");
  if (radius < 0) fail("ball: negative radius");
  for (const auto& g : gens)
    if (g.empty()) fail("ball: identity step word");
  CayleyBall ball;
  ball.oracle = std::move(o);
  ball.gens = std::move(gens);
  ball.radius = radius;

  const Word id;
  ball.vertices.push_back(id);
  ball.vertex_index.emplace(id, 0);
  ball.path_from_identity.emplace(id, Word());
  std::deque<std::pair<Word, long>> queue = {{id, 0}};
  while (!queue.empty()) {
    auto [v, depth] = queue.front();
    queue.pop_front();
    if (depth == radius) continue;
    for (const auto& g : ball.gens) {
      for (const Word& step : {g, g.inv()}) {
        Word nv = ball.oracle->nf(v * step).word;
        if (ball.vertex_index.count(nv)) continue;
        if (ball.vertices.size() >= budget)
          fail("ball: vertex budget ", budget, " exceeded at radius ",
               depth + 1);
        ball.vertex_index.emplace(nv, ball.vertices.size());
        ball.vertices.push_back(nv);
        ball.path_from_identity.emplace(
            nv, ball.path_from_identity.at(v) * step);
        queue.emplace_back(nv, depth + 1);
      }
    }
  }
  for (const auto& v : ball.vertices) {
    for (std::size_t i = 0; i < ball.gens.size(); ++i) {
      Word t = ball.oracle->nf(v * ball.gens[i]).word;
      if (!ball.has_vertex(t)) continue;
      CayleyBall::Edge e{v, i};
      ball.edges.push_back(e);
      ball.edge_target.emplace(std::move(e), std::move(t));
    }
  }
  return ball;
}

EdgeChain lift_word(const CayleyBall& ball, const Word& w) {
  std::map<Gen, std::size_t> by_gen;
  const std::vector<Gen> labels = label_gens(ball);
  for (std::size_t i = 0; i < labels.size(); ++i)
    by_gen.emplace(labels[i], i);

  EdgeChain out{&ball, {}};
  Word pos;     // canonical current vertex
  Word prefix;  // literal prefix, for error reporting
  for (const auto& s : w.syllables()) {
    auto it = by_gen.find(s.gen);
    if (it == by_gen.end())
      fail("lift: letter '", s.gen.str(), "' is not a ball generator");
    const int dir = s.exp > 0 ? 1 : -1;
    for (Int k = 0; k != s.exp; k += dir) {
      Word next = ball.oracle->nf(pos * Word::gen(s.gen, dir)).word;
      prefix *= Word::gen(s.gen, dir);
      const Word& src = dir > 0 ? pos : next;
      if (!ball.has_vertex(next) ||
          !ball.edge_target.count({src, it->second}))
        fail("lift: prefix '", prefix.str(), "' leaves the radius-",
             ball.radius, " ball");
      add_coeff(out, {src, it->second}, dir);
      pos = std::move(next);
    }
  }
  return out;
}

std::map<Word, Int> boundary(const EdgeChain& c) {
  if (!c.ball && !c.is_zero()) fail("edge chain has no ball");
  std::map<Word, Int> out;
  auto add = [&out](const Word& v, const Int& k) {
    auto [it, fresh] = out.emplace(v, k);
    if (!fresh) {
      it->second += k;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [e, v] : c.coeffs) {
    add(c.ball->edge_target.at(e), v);
    add(e.first, -v);
  }
  return out;
}

EdgeChain translate(const EdgeChain& c, const Word& f) {
  if (c.is_zero()) return c;
  if (!c.ball) fail("edge chain has no ball");
  const CayleyBall& ball = *c.ball;
  EdgeChain out{&ball, {}};
  for (const auto& [e, v] : c.coeffs) {
    Word src = ball.oracle->nf(f * e.first).word;
    if (!ball.has_vertex(src) || !ball.edge_target.count({src, e.second}))
      fail("translate: edge at '", src.str(), "' leaves the ball");
    add_coeff(out, {std::move(src), e.second}, v);
  }
  return out;
}

EdgeChain fox_to_chain(const CayleyBall& ball, const FoxVector& v) {
  std::map<Gen, std::size_t> by_gen;
  const std::vector<Gen> labels = label_gens(ball);
  for (std::size_t i = 0; i < labels.size(); ++i)
    by_gen.emplace(labels[i], i);

  EdgeChain out{&ball, {}};
  for (const auto& [g, row] : v.rows) {
    if (row.is_zero()) continue;
    auto it = by_gen.find(g);
    if (it == by_gen.end())
      fail("fox_to_chain: no ball generator labelled '", g.str(), "'");
    for (const auto& [h, coef] : row.terms()) {
      CayleyBall::Edge e{h, it->second};
      if (!ball.has_vertex(h) || !ball.edge_target.count(e))
        fail("fox_to_chain: support '", h.str(),
             "' falls outside the ball");
      add_coeff(out, e, coef);
    }
  }
  return out;
}

FoxVector chain_to_fox(const EdgeChain& c) {
  if (!c.ball) fail("edge chain has no ball");
  const CayleyBall& ball = *c.ball;
  const std::vector<Gen> labels = label_gens(ball);
  FoxVector out{Word(), {}};
  for (const auto& g : labels) out.rows.emplace(g, RingElt(ball.oracle));
  for (const auto& [e, v] : c.coeffs)
    out.rows.at(labels[e.second]) +=
        RingElt::term(ball.oracle, e.first, v);
  return out;
}

std::vector<std::pair<Word, Word>> cycle_to_relators(const EdgeChain& c) {
  if (c.is_zero()) return {};
  if (!c.ball) fail("edge chain has no ball");
  const CayleyBall& ball = *c.ball;
  if (!boundary(c).empty()) fail("cycle decomposition: chain is not a cycle");
  const std::vector<Gen> labels = label_gens(ball);

  // Directed copies, negative coefficients traversed as formal inverses.
  struct Copy {
    std::size_t to;
    std::size_t gen;
    int sign;
    bool used = false;
  };
  std::vector<std::vector<Copy>> out_copies(ball.vertices.size());
  for (const auto& [e, v] : c.coeffs) {
    std::size_t s = ball.vertex_index.at(e.first);
    std::size_t t = ball.vertex_index.at(ball.edge_target.at(e));
    const Int n = v > 0 ? v : -v;
    for (Int k = 0; k < n; ++k) {
      if (v > 0)
        out_copies[s].push_back({t, e.second, 1});
      else
        out_copies[t].push_back({s, e.second, -1});
    }
  }
  for (auto& lst : out_copies)
    std::sort(lst.begin(), lst.end(), [](const Copy& a, const Copy& b) {
      if (a.gen != b.gen) return a.gen < b.gen;
      return a.sign > b.sign;
    });

  auto next_unused = [&](std::size_t v) -> Copy* {
    for (auto& cp : out_copies[v])
      if (!cp.used) return &cp;
    return nullptr;
  };

  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t v0 = 0; v0 < out_copies.size(); ++v0) {
    while (Copy* first = next_unused(v0)) {
      Word s;
      std::size_t cur = v0;
      Copy* step = first;
      do {
        step->used = true;
        s *= Word::gen(labels[step->gen], step->sign);
        cur = step->to;
        step = cur == v0 ? nullptr : next_unused(cur);
        if (cur != v0 && !step)
          fail("cycle decomposition: walk stuck away from its start");
      } while (cur != v0);
      pairs.emplace_back(ball.path_from_identity.at(ball.vertices[v0]),
                         std::move(s));
    }
  }

  EdgeChain reassembled{&ball, {}};
  for (const auto& [f, s] : pairs)
    reassembled += fox_to_chain(
        ball, fox_vector(f * s * f.inv(), labels, ball.oracle));
  if (reassembled != c)
    fail("cycle decomposition: reassembly does not reproduce the chain");
  return pairs;
}

std::string to_dot(const CayleyBall& ball) {
  std::ostringstream os;
  os << "digraph ball {\n";
  for (const auto& v : ball.vertices) os << "  \"" << v.str() << "\";\n";
  for (const auto& e : ball.edges)
    os << "  \"" << e.first.str() << "\" -> \""
       << ball.edge_target.at(e).str() << "\" [label=\""
       << ball.gens[e.second].str() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cgt
