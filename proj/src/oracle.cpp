#include "cgt/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cgt {

namespace {

// Euclidean quotient/remainder for positive divisor: emod in [0, d).
Int emod(const Int& a, long d) {
  Int r = a % d;
  if (r < 0) r += d;
  return r;
}

Int ediv(const Int& a, long d) { return (a - emod(a, d)) / d; }

int sgn(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

void check_distinct(const std::vector<Gen>& gens, const char* what) {
  std::set<Gen> seen;
  for (const auto& g : gens)
    if (!seen.insert(g).second)
      fail(what, ": duplicate generator '", g.str(), "'");
}

std::string join_gens(const std::vector<Gen>& gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ',';
    out += g.str();
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- FreeOracle

FreeOracle::FreeOracle(std::vector<Gen> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) fail("free oracle: no generators");
  check_distinct(gens_, "free oracle");
}

NormalForm FreeOracle::nf(const Word& w) const {
  for (const auto& s : w.syllables())
    if (std::find(gens_.begin(), gens_.end(), s.gen) == gens_.end())
      fail("unknown generator '", s.gen.str(), "' for ", describe());
  return {w, "free", 0, static_cast<long>(w.size())};
}

std::string FreeOracle::describe() const { return "free:" + join_gens(gens_); }

// ------------------------------------------------------------------ BsOracle

BsOracle::BsOracle(long m, long n, Gen stable, Gen base)
    : m_(m), n_(n), stable_(std::move(stable)), base_(std::move(base)) {
  if (m_ <= 0 || n_ <= 0) fail("bs oracle: m and n must be positive");
  if (stable_ == base_) fail("bs oracle: stable and base coincide");
}

NormalForm BsOracle::nf(const Word& w) const {
  // Run-length view: base^{y0} stable^{b_0} base^{a_0} ... with b_j != 0.
  struct Seg {
    Int b, a;
  };
  Int y0 = 0;
  std::vector<Seg> segs;
  Int stable_letters = 0;
  for (const auto& s : w.syllables()) {
    if (s.gen == base_) {
      (segs.empty() ? y0 : segs.back().a) += s.exp;
    } else if (s.gen == stable_) {
      segs.push_back({s.exp, 0});
      stable_letters += abs(s.exp);
    } else {
      fail("unknown generator '", s.gen.str(), "' for ", describe());
    }
  }
  if (stable_letters > 100000)
    fail("bs normal form: ", stable_letters,
         " stable letters exceed the reduction budget of 100000");

  // Merges runs separated by a zero base exponent (cascading).
  auto renormalize = [&]() {
    std::vector<Seg> out;
    Int lead = y0;
    for (auto& seg : segs) {
      Int b = seg.b;
      while (b != 0 && !out.empty() && out.back().a == 0) {
        b += out.back().b;
        out.pop_back();
      }
      if (b == 0) {
        (out.empty() ? lead : out.back().a) += seg.a;
      } else {
        out.push_back({b, seg.a});
      }
    }
    y0 = lead;
    segs = std::move(out);
  };

  // Phase 1: eliminate pinches stable base^(km) stable^-1 -> base^(kn) and
  // stable^-1 base^(kn) stable -> base^(km), leftmost first, whole batches
  // of nested pinches at a time.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j + 1 < segs.size(); ++j) {
      const int s1 = sgn(segs[j].b), s2 = sgn(segs[j + 1].b);
      if (s1 == s2) continue;
      const long div = s1 > 0 ? m_ : n_;
      const long mul = s1 > 0 ? n_ : m_;
      const Int cap = std::min(abs(segs[j].b), abs(segs[j + 1].b));
      Int t = 0;
      Int a = segs[j].a;
      while (t < cap) {
        if (a == 0) {
          t = cap;
          break;
        }
        if (a % div != 0) break;
        a = a / div * mul;
        ++t;
      }
      if (t == 0) continue;
      segs[j].a = a;
      segs[j].b -= s1 * t;
      segs[j + 1].b -= s2 * t;
      renormalize();
      changed = true;
      break;
    }
  }

  // Phase 2: canonicalize right to left. After each letter the following
  // base exponent is reduced into [0, m) (after stable^+1) or [0, n) (after
  // stable^-1); the carry moves left and the leading exponent absorbs it.
  // Phase 1 guarantees this never creates a new pinch.
  std::vector<Syllable> rev;
  Int e = 0;
  long letters = 0;
  for (std::size_t jj = segs.size(); jj-- > 0;) {
    e += segs[jj].a;
    const int s = sgn(segs[jj].b);
    const long div = s > 0 ? m_ : n_;
    const long mul = s > 0 ? n_ : m_;
    Int cnt = abs(segs[jj].b);
    letters += static_cast<long>(cnt);
    while (cnt > 0) {
      if (e == 0) {
        rev.push_back({stable_, Int(s) * cnt});
        break;
      }
      Int r = emod(e, div);
      if (r != 0) rev.push_back({base_, r});
      rev.push_back({stable_, s});
      e = (e - r) / div * mul;
      --cnt;
    }
  }
  e += y0;
  if (e != 0) rev.push_back({base_, e});
  std::reverse(rev.begin(), rev.end());
  return {Word::from_syllables(std::move(rev)), "bs", 0, letters};
}

std::string BsOracle::describe() const {
  std::ostringstream os;
  os << "bs:" << m_ << ',' << n_ << ':' << stable_.str() << ','
     << base_.str();
  return os.str();
}

// ------------------------------------------------------- CyclicAmalgamOracle

CyclicAmalgamOracle::CyclicAmalgamOracle(Gen a, Gen b, long m, long n)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) fail("cyclic amalgam: generators coincide");
  if (m == 0 || n == 0) fail("cyclic amalgam: m and n must be nonzero");
  inv_a_ = m < 0;
  inv_b_ = n < 0;
  m_ = m < 0 ? -m : m;
  n_ = n < 0 ? -n : n;
}

NormalForm CyclicAmalgamOracle::nf(const Word& w) const {
  // Left-to-right stack reduction in (Z/m) * (Z/n), accumulating the central
  // power c^t with c = a^m = b^n.
  std::vector<std::pair<int, Int>> st;  // (side 0 = a / 1 = b, exp in (0,mod))
  Int t = 0;
  for (const auto& s : w.syllables()) {
    int side;
    Int e = s.exp;
    if (s.gen == a_) {
      side = 0;
      if (inv_a_) e = -e;
    } else if (s.gen == b_) {
      side = 1;
      if (inv_b_) e = -e;
    } else {
      fail("unknown generator '", s.gen.str(), "' for ", describe());
    }
    if (!st.empty() && st.back().first == side) {
      e += st.back().second;
      st.pop_back();
    }
    const long mod = side == 0 ? m_ : n_;
    Int r = emod(e, mod);
    t += (e - r) / mod;
    if (r != 0) st.emplace_back(side, std::move(r));
  }
  // Render c^t on the b side so a two-generator chain window produces the
  // identical word.
  std::vector<Syllable> syls;
  if (t != 0) syls.push_back({b_, Int(n_) * t * (inv_b_ ? -1 : 1)});
  for (auto& [side, r] : st) {
    if (side == 0)
      syls.push_back({a_, inv_a_ ? Int(-r) : r});
    else
      syls.push_back({b_, inv_b_ ? Int(-r) : r});
  }
  return {Word::from_syllables(std::move(syls)), "amalgam", t,
          static_cast<long>(st.size())};
}

std::string CyclicAmalgamOracle::describe() const {
  std::ostringstream os;
  os << "amalgam:" << (inv_a_ ? -m_ : m_) << ',' << (inv_b_ ? -n_ : n_) << ':'
     << a_.str() << ',' << b_.str();
  return os.str();
}

// -------------------------------------------------------- ChainAmalgamOracle

// Normal form of G[lo, level]: c^t s1 s2 ... sk with c = u_level^q =
// u_{level-1}^p, the si alternating between u_level^r (0 < r < q) and
// canonical coset representatives of <u_{level-1}^p> in G[lo, level-1]. At
// the base level the form is just an exponent of u_lo.
struct ChainAmalgamOracle::Form {
  long level = 0;
  Int c = 0;
  struct Item {
    bool is_b = false;
    Int r = 0;
    std::shared_ptr<Form> sub;
  };
  std::vector<Item> items;

  bool trivial() const { return c == 0 && items.empty(); }

  // Chain parameters shared by the recursion. The memo caches reduce()
  // results within one nf() call: the pinch pass and the final sweep ask for
  // the same sub-reductions repeatedly, and without the cache that repeat
  // doubles the work per level.
  struct Ctx {
    std::string family;
    long p, q, lo;
    Gen gen_at(long i) const { return Gen(family, i); }
    using Key = std::pair<long, std::vector<std::pair<long, Int>>>;
    mutable std::map<Key, Form> memo;
  };

  static Form reduce(const Ctx& cx, long level, std::vector<Syllable> in);
  static Form reduce_impl(const Ctx& cx, long level, std::vector<Syllable> in);
  static std::pair<Int, Form> factor_p(const Ctx& cx, const Form& f);
  static void materialize(const Ctx& cx, const Form& f,
                          std::vector<Syllable>& out);
};

using ChainForm = ChainAmalgamOracle::Form;

ChainForm ChainForm::reduce(const Ctx& cx, long level,
                            std::vector<Syllable> in) {
  if (level == cx.lo) {
    Int e = 0;
    for (const auto& s : in) e += s.exp;
    return {cx.lo, e, {}};
  }
  Ctx::Key key{level, {}};
  key.second.reserve(in.size());
  for (const auto& s : in) key.second.emplace_back(*s.gen.index, s.exp);
  if (auto it = cx.memo.find(key); it != cx.memo.end()) return it->second;
  Form out = reduce_impl(cx, level, std::move(in));
  cx.memo.emplace(std::move(key), out);
  return out;
}

ChainForm ChainForm::reduce_impl(const Ctx& cx, long level,
                                 std::vector<Syllable> in) {
  // Levels above the highest index present contribute no b-blocks: the word
  // is a single a-block there, and reducing it collapses to a factor_p wrap.
  // Jump straight to the content and wrap, so an oversized window costs a
  // linear pass instead of one recursion per empty level.
  long top = cx.lo;
  for (const auto& s : in)
    if (*s.gen.index > top) top = *s.gen.index;
  if (top < level) {
    Form g = reduce(cx, top, std::move(in));
    for (long l = top; l < level; ++l) {
      auto [t, rep] = factor_p(cx, g);
      Form wrap{l + 1, std::move(t), {}};
      if (!rep.trivial())
        wrap.items.push_back(
            {false, 0, std::make_shared<Form>(std::move(rep))});
      g = std::move(wrap);
    }
    return g;
  }
  // Alternating b-blocks (u_level powers) and a-blocks (lower indices).
  struct Block {
    bool is_b;
    Int e;
    std::vector<Syllable> syls;
  };
  std::vector<Block> blocks;
  for (auto& s : in) {
    const bool isb = *s.gen.index == level;
    if (!blocks.empty() && blocks.back().is_b == isb) {
      if (isb)
        blocks.back().e += s.exp;
      else
        blocks.back().syls.push_back(std::move(s));
    } else if (isb) {
      blocks.push_back({true, s.exp, {}});
    } else {
      blocks.push_back({false, Int(0), {std::move(s)}});
    }
  }
  // Pinch elimination: rewrite blocks that lie in the edge group across to
  // the other side whenever that merges neighbours; drop trivial blocks.
  // Every rewrite shrinks the block count, so this terminates.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < blocks.size() && !changed; ++i) {
      Block& bl = blocks[i];
      if (bl.is_b) {
        if (bl.e == 0) {
          blocks.erase(blocks.begin() + i);
          if (i > 0 && i < blocks.size()) {
            auto& left = blocks[i - 1].syls;
            left.insert(left.end(), blocks[i].syls.begin(),
                        blocks[i].syls.end());
            blocks.erase(blocks.begin() + i);
          }
          changed = true;
        } else if (bl.e % cx.q == 0 && blocks.size() > 1) {
          Syllable repl{cx.gen_at(level - 1), Int(cx.p) * (bl.e / cx.q)};
          blocks[i] = Block{false, Int(0), {repl}};
          if (i + 1 < blocks.size() && !blocks[i + 1].is_b) {
            auto& cur = blocks[i].syls;
            cur.insert(cur.end(), blocks[i + 1].syls.begin(),
                       blocks[i + 1].syls.end());
            blocks.erase(blocks.begin() + i + 1);
          }
          if (i > 0 && !blocks[i - 1].is_b) {
            auto& left = blocks[i - 1].syls;
            left.insert(left.end(), blocks[i].syls.begin(),
                        blocks[i].syls.end());
            blocks.erase(blocks.begin() + i);
          }
          changed = true;
        }
      } else {
        Form f = reduce(cx, level - 1, bl.syls);
        if (f.trivial()) {
          blocks.erase(blocks.begin() + i);
          if (i > 0 && i < blocks.size()) {
            blocks[i - 1].e += blocks[i].e;
            blocks.erase(blocks.begin() + i);
          }
          changed = true;
        } else {
          auto [t, rep] = factor_p(cx, f);
          if (rep.trivial() && blocks.size() > 1) {
            blocks[i] = Block{true, Int(cx.q) * t, {}};
            if (i + 1 < blocks.size() && blocks[i + 1].is_b) {
              blocks[i].e += blocks[i + 1].e;
              blocks.erase(blocks.begin() + i + 1);
            }
            if (i > 0 && blocks[i - 1].is_b) {
              blocks[i - 1].e += blocks[i].e;
              blocks.erase(blocks.begin() + i);
            }
            changed = true;
          }
        }
      }
    }
  }
  // Right-to-left sweep: peel the edge power off each block and hand it to
  // the block on the left; the leftover is the form's c exponent. The pinch
  // pass above guarantees the leftover item of each block is nontrivial.
  Form out{level, 0, {}};
  Int carry = 0;
  for (std::size_t i = blocks.size(); i-- > 0;) {
    Block& bl = blocks[i];
    if (bl.is_b) {
      Int e = bl.e + Int(cx.q) * carry;
      carry = ediv(e, cx.q);
      Int r = emod(e, cx.q);
      if (r != 0)
        out.items.insert(out.items.begin(), {true, std::move(r), nullptr});
    } else {
      std::vector<Syllable> syls = std::move(bl.syls);
      if (carry != 0)
        syls.push_back({cx.gen_at(level - 1), Int(cx.p) * carry});
      Form f = reduce(cx, level - 1, std::move(syls));
      auto [t, rep] = factor_p(cx, f);
      carry = std::move(t);
      if (!rep.trivial())
        out.items.insert(out.items.begin(),
                         {false, 0, std::make_shared<Form>(std::move(rep))});
    }
  }
  out.c = std::move(carry);
  return out;
}

// Splits f as (u_level^p)^t * rep where rep is the canonical coset
// representative of <u_level^p>: its leading edge exponent is reduced mod p.
std::pair<Int, ChainForm> ChainForm::factor_p(const Ctx& cx, const Form& f) {
  if (f.level == cx.lo)
    return {ediv(f.c, cx.p), Form{cx.lo, emod(f.c, cx.p), {}}};
  Int e = Int(cx.q) * f.c;
  std::size_t skip = 0;
  if (!f.items.empty() && f.items.front().is_b) {
    e += f.items.front().r;
    skip = 1;
  }
  Int t = ediv(e, cx.p);
  Int e0 = emod(e, cx.p);
  Form rep{f.level, ediv(e0, cx.q), {}};
  Int r0 = emod(e0, cx.q);
  if (r0 != 0) rep.items.push_back({true, std::move(r0), nullptr});
  rep.items.insert(rep.items.end(), f.items.begin() + skip, f.items.end());
  return {std::move(t), std::move(rep)};
}

void ChainForm::materialize(const Ctx& cx, const Form& f,
                            std::vector<Syllable>& out) {
  if (f.level == cx.lo) {
    if (f.c != 0) out.push_back({cx.gen_at(cx.lo), f.c});
    return;
  }
  if (f.c != 0) out.push_back({cx.gen_at(f.level), Int(cx.q) * f.c});
  for (const auto& it : f.items) {
    if (it.is_b)
      out.push_back({cx.gen_at(f.level), it.r});
    else
      materialize(cx, *it.sub, out);
  }
}

ChainAmalgamOracle::ChainAmalgamOracle(std::string family, long p, long q,
                                       long lo, long hi)
    : family_(std::move(family)), p_(p), q_(q), lo_(lo), hi_(hi) {
  if (family_.empty()) fail("chain amalgam: empty family name");
  if (p_ <= 0 || q_ <= 0) fail("chain amalgam: p and q must be positive");
  if (lo_ > hi_) fail("chain amalgam: lo > hi");
}

NormalForm ChainAmalgamOracle::nf(const Word& w) const {
  for (const auto& s : w.syllables()) {
    if (s.gen.name != family_ || !s.gen.index || s.gen.primed)
      fail("unknown generator '", s.gen.str(), "' for ", describe());
    if (*s.gen.index < lo_ || *s.gen.index > hi_)
      fail("window exceeded: generator '", s.gen.str(), "' outside [", lo_,
           ", ", hi_, "] of ", describe());
  }
  Form::Ctx cx{family_, p_, q_, lo_, {}};
  Form f = Form::reduce(cx, hi_, w.syllables());
  std::vector<Syllable> syls;
  Form::materialize(cx, f, syls);
  return {Word::from_syllables(std::move(syls)), "chain", f.c,
          static_cast<long>(f.items.size())};
}

std::vector<Gen> ChainAmalgamOracle::generators() const {
  std::vector<Gen> out;
  for (long i = lo_; i <= hi_; ++i) out.push_back(gen_at(i));
  return out;
}

std::string ChainAmalgamOracle::describe() const {
  std::ostringstream os;
  os << "chain:" << p_ << ',' << q_ << ':' << lo_ << ".." << hi_ << ':'
     << family_;
  return os.str();
}

// --------------------------------------------------------------- ImageOracle

ImageOracle::ImageOracle(OraclePtr inner, std::vector<Gen> gens,
                         std::map<Gen, Word> images)
    : inner_(std::move(inner)), gens_(std::move(gens)),
      images_(std::move(images)) {
  if (!inner_) fail("image oracle: missing inner oracle");
  if (gens_.empty()) fail("image oracle: no generators");
  check_distinct(gens_, "image oracle");
  for (const auto& g : gens_)
    if (!images_.count(g))
      fail("image oracle: no image for generator '", g.str(), "'");
  for (const auto& [g, unused] : images_)
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      fail("image oracle: image for undeclared generator '", g.str(), "'");
}

NormalForm ImageOracle::nf(const Word& w) const {
  // Inner-alphabet generators pass through, so nf is idempotent on its own
  // output.
  std::map<Gen, Word> sub = images_;
  for (const auto& g : inner_->generators()) sub.emplace(g, Word::gen(g));
  for (const auto& s : w.syllables())
    if (!sub.count(s.gen))
      fail("unknown generator '", s.gen.str(), "' for ", describe());
  return inner_->nf(w.substitute(sub));
}

std::string ImageOracle::describe() const {
  std::ostringstream os;
  os << "image(" << inner_->describe() << ";";
  bool first = true;
  for (const auto& [g, im] : images_) {
    os << (first ? " " : ", ") << g.str() << " -> " << im.str();
    first = false;
  }
  os << ")";
  return os.str();
}

// ------------------------------------------------------- membership, witness

std::optional<Int> in_cyclic_subgroup(const Oracle& o, const Word& w,
                                      const Word& g, const Int& k) {
  if (k <= 0) fail("in_cyclic_subgroup: k must be positive");
  if (g.size() != 1 || g.syllables()[0].exp != 1)
    fail("in_cyclic_subgroup: g must be a single generator, got '", g.str(),
         "'");
  const Gen gg = g.syllables()[0].gen;

  auto single_power = [&](const Word& nfw) -> std::optional<Int> {
    if (nfw.empty()) return Int(0);
    if (nfw.size() == 1 && nfw.syllables()[0].gen == gg &&
        nfw.syllables()[0].exp % k == 0)
      return nfw.syllables()[0].exp / k;
    return std::nullopt;
  };

  // Candidate-and-verify via a homomorphism to Z that is injective on <g>:
  // phi pins the only possible exponent, the oracle confirms it.
  auto candidate_verify = [&](const Int& phi_w,
                              const Int& phi_g) -> std::optional<Int> {
    const Int d = k * phi_g;
    if (phi_w % d != 0) return std::nullopt;
    Int t = phi_w / d;
    if (!o.is_trivial(w * g.pow(-k * t))) return std::nullopt;
    return t;
  };

  if (auto* bso = dynamic_cast<const BsOracle*>(&o)) {
    if (!(gg == bso->base()) && !(gg == bso->stable()))
      fail("in_cyclic_subgroup: '", gg.str(), "' is not a generator of ",
           o.describe());
    return single_power(o.nf(w).word);
  }
  if (auto* ca = dynamic_cast<const CyclicAmalgamOracle*>(&o)) {
    // phi(a) = n, phi(b) = m (signs as constructed) kills a^m = b^n.
    const long phi_a = ca->signed_n();
    const long phi_b = ca->signed_m();
    const Word nfw = o.nf(w).word;
    Int phi_w = 0;
    for (const auto& s : nfw.syllables())
      phi_w += s.exp * (s.gen == ca->a() ? phi_a : phi_b);
    if (gg == ca->a()) return candidate_verify(phi_w, Int(phi_a));
    if (gg == ca->b()) return candidate_verify(phi_w, Int(phi_b));
    fail("in_cyclic_subgroup: '", gg.str(), "' is not a generator of ",
         o.describe());
  }
  if (auto* ch = dynamic_cast<const ChainAmalgamOracle*>(&o)) {
    // phi(u_i) = p^(i-lo) q^(hi-i) satisfies q phi(u_{i+1}) = p phi(u_i).
    auto weight = [&](long i) {
      Int v = 1;
      for (long j = ch->lo(); j < i; ++j) v *= ch->p();
      for (long j = i; j < ch->hi(); ++j) v *= ch->q();
      return v;
    };
    if (gg.name != ch->family() || !gg.index || *gg.index < ch->lo() ||
        *gg.index > ch->hi())
      fail("in_cyclic_subgroup: '", gg.str(), "' is not a generator of ",
           o.describe());
    Int phi_w = 0;
    for (const auto& s : w.syllables()) phi_w += s.exp * weight(*s.gen.index);
    return candidate_verify(phi_w, weight(*gg.index));
  }
  if (dynamic_cast<const FreeOracle*>(&o)) return single_power(o.nf(w).word);
  fail("in_cyclic_subgroup: unsupported oracle kind ", o.describe());
}

bool witness_generation(const Oracle& o, const Word& target,
                        const std::vector<Word>& sub_gens,
                        const Word& witness) {
  std::vector<Gen> letters;
  for (const auto& s : witness.syllables())
    if (std::find(letters.begin(), letters.end(), s.gen) == letters.end())
      letters.push_back(s.gen);
  if (letters.size() > sub_gens.size())
    fail("witness_generation: arity mismatch: witness uses ", letters.size(),
         " distinct letters but ", sub_gens.size(),
         " subgroup generators were given");
  std::map<Gen, Word> images;
  for (std::size_t i = 0; i < letters.size(); ++i)
    images[letters[i]] = sub_gens[i];
  return o.equal(witness.substitute(images), target);
}

// ---------------------------------------------------------------- descriptor

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

long parse_long(const std::string& s, const std::string& desc) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail("group descriptor '", desc, "': bad integer '", s, "'");
  }
}

Gen parse_gen(const std::string& s, const std::string& desc) {
  Word w;
  try {
    w = Word::parse(s);
  } catch (const Error& e) {
    fail("group descriptor '", desc, "': ", e.what());
  }
  if (w.size() != 1 || w.syllables()[0].exp != 1)
    fail("group descriptor '", desc, "': '", s, "' is not a single generator");
  return w.syllables()[0].gen;
}

std::vector<Gen> parse_gen_list(const std::string& s, const std::string& desc,
                                std::size_t expect) {
  std::vector<Gen> gens;
  for (const auto& part : split(s, ',')) gens.push_back(parse_gen(part, desc));
  if (expect != 0 && gens.size() != expect)
    fail("group descriptor '", desc, "': expected ", expect,
         " generators, got ", gens.size());
  return gens;
}

}  // namespace

OraclePtr parse_group_descriptor(const std::string& desc) {
  auto parts = split(desc, ':');
  const std::string& head = parts[0];
  if (head == "free") {
    if (parts.size() != 2)
      fail("group descriptor '", desc, "': expected free:<gens>");
    return std::make_shared<FreeOracle>(parse_gen_list(parts[1], desc, 0));
  }
  if (head == "bs") {
    if (parts.size() < 2 || parts.size() > 3)
      fail("group descriptor '", desc, "': expected bs:m,n[:stable,base]");
    auto nums = split(parts[1], ',');
    if (nums.size() != 2)
      fail("group descriptor '", desc, "': expected bs:m,n[:stable,base]");
    std::vector<Gen> gens = {Gen("x"), Gen("y")};
    if (parts.size() == 3) gens = parse_gen_list(parts[2], desc, 2);
    return std::make_shared<BsOracle>(parse_long(nums[0], desc),
                                      parse_long(nums[1], desc), gens[0],
                                      gens[1]);
  }
  if (head == "amalgam") {
    if (parts.size() < 2 || parts.size() > 3)
      fail("group descriptor '", desc, "': expected amalgam:m,n[:a,b]");
    auto nums = split(parts[1], ',');
    if (nums.size() != 2)
      fail("group descriptor '", desc, "': expected amalgam:m,n[:a,b]");
    std::vector<Gen> gens = {Gen("a"), Gen("b")};
    if (parts.size() == 3) gens = parse_gen_list(parts[2], desc, 2);
    return std::make_shared<CyclicAmalgamOracle>(gens[0], gens[1],
                                                 parse_long(nums[0], desc),
                                                 parse_long(nums[1], desc));
  }
  if (head == "chain") {
    if (parts.size() < 3 || parts.size() > 4)
      fail("group descriptor '", desc, "': expected chain:p,q:lo..hi[:family]");
    auto nums = split(parts[1], ',');
    if (nums.size() != 2)
      fail("group descriptor '", desc, "': expected chain:p,q:lo..hi[:family]");
    auto range = parts[2].find("..");
    if (range == std::string::npos)
      fail("group descriptor '", desc, "': expected window lo..hi");
    long lo = parse_long(parts[2].substr(0, range), desc);
    long hi = parse_long(parts[2].substr(range + 2), desc);
    std::string family = parts.size() == 4 ? parts[3] : "u";
    return std::make_shared<ChainAmalgamOracle>(family,
                                                parse_long(nums[0], desc),
                                                parse_long(nums[1], desc), lo,
                                                hi);
  }
  fail("unknown group descriptor '", desc,
       "': expected free:, bs:, amalgam: or chain:");
}

}  // namespace cgt
