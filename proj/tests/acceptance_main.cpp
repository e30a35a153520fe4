// Acceptance gate: ten criteria, one pass/fail line each, exit 0 iff all
// pass. Every check is exact (integer/rational arithmetic, no tolerances).
#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgt/cayley.hpp"
#include "cgt/complexes.hpp"
#include "cgt/error.hpp"
#include "cgt/fox.hpp"
#include "cgt/groupring.hpp"
#include "cgt/presentation.hpp"
#include "cgt/scenarios.hpp"
#include "test_util.hpp"

using namespace cgt;
using boost::multiprecision::cpp_rational;
using testutil::make_rng;
using testutil::random_word;

namespace {

std::string describe_failure(const ScenarioReport& r) {
  for (const auto& s : r.steps)
    if (!s.ok())
      return s.desc + ": expected " + s.expected + ", got " + s.actual;
  return "";
}

bool scenario_passes(const std::string& id, std::string& note) {
  ScenarioReport r = run_scenario(id);
  if (!r.pass) note = describe_failure(r);
  return r.pass;
}

// ---------------------------------------------------------- criterion 5

RingElt random_elt(std::mt19937_64& rng, OraclePtr o,
                   const std::vector<Gen>& gens, int max_terms) {
  RingElt out(o);
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    out += RingElt::term(o, random_word(rng, gens, 4, 2), c);
  }
  return out;
}

bool fox_identity_suite(std::string& note) {
  struct Family {
    std::string name;
    OraclePtr o;
    std::vector<Gen> gens;
  };
  std::vector<Family> families;
  families.push_back({"free",
                      std::make_shared<FreeOracle>(std::vector<Gen>{
                          Gen("a"), Gen("b"), Gen("c")}),
                      {Gen("a"), Gen("b"), Gen("c")}});
  families.push_back(
      {"bs", std::make_shared<BsOracle>(2, 3), {Gen("x"), Gen("y")}});
  families.push_back({"amalgam",
                      std::make_shared<CyclicAmalgamOracle>(Gen("a"), Gen("b"),
                                                            3, 2),
                      {Gen("a"), Gen("b")}});
  {
    std::vector<Gen> ugens;
    for (long i = 0; i <= 3; ++i) ugens.push_back(Gen("u", i));
    families.push_back(
        {"chain", std::make_shared<ChainAmalgamOracle>("u", 3, 2, 0, 3),
         ugens});
  }
  {
    auto h = std::make_shared<ChainAmalgamOracle>("y", 3, 2, 0, 2);
    std::vector<Gen> zs;
    std::map<Gen, Word> imgs;
    for (long i = 0; i <= 2; ++i) {
      zs.push_back(Gen("z", i));
      imgs.emplace(zs.back(), Word::gen(Gen("y", i), 4));
    }
    families.push_back(
        {"image", std::make_shared<ImageOracle>(h, zs, imgs), zs});
  }

  auto rng = make_rng();
  for (const auto& fam : families) {
    for (int trial = 0; trial < 1000; ++trial) {
      Word w = random_word(rng, fam.gens, 5, 3);
      RingElt lhs(fam.o);
      for (const auto& g : fam.gens)
        lhs += fox_derive(w, g, fam.o) *
               (RingElt::term(fam.o, Word::gen(g)) - RingElt::one(fam.o));
      RingElt rhs =
          RingElt::term(fam.o, w) - RingElt::one(fam.o);
      if (lhs != rhs) {
        note = fam.name + " family, word '" + w.str() +
               "': sum of derivatives times (g-1) is " + lhs.str() +
               ", not " + rhs.str();
        return false;
      }
    }
  }
  note = "5000 words, 1000 per family (free, bs, amalgam, chain, image)";
  return true;
}

// ---------------------------------------------------------- criterion 6

bool length_additivity_suite(std::string& note) {
  auto bso = std::make_shared<BsOracle>(2, 3);
  SkewRing ring(bso, -64, 64);
  std::vector<Gen> gens = {Gen("x"), Gen("y")};
  auto rng = make_rng();
  int verified = 0;
  for (int trial = 0; trial < 1200 && verified < 1000; ++trial) {
    RingElt a = random_elt(rng, bso, gens, 3);
    RingElt b = random_elt(rng, bso, gens, 3);
    if (a.is_zero() || b.is_zero()) continue;
    SkewLaurent sa = ring.to_skew(a);
    SkewLaurent sb = ring.to_skew(b);
    long hi = sa.hi_degree() + sb.hi_degree();
    long lo = sa.lo_degree() + sb.lo_degree();
    // extreme products, formed in the group ring and re-decomposed
    RingElt ta = ring.from_skew(
        SkewLaurent::term(sa.hi_degree(), sa.coeff(sa.hi_degree())));
    RingElt tb = ring.from_skew(
        SkewLaurent::term(sb.hi_degree(), sb.coeff(sb.hi_degree())));
    SkewLaurent top = ring.to_skew(ta * tb);
    RingElt ua = ring.from_skew(
        SkewLaurent::term(sa.lo_degree(), sa.coeff(sa.lo_degree())));
    RingElt ub = ring.from_skew(
        SkewLaurent::term(sb.lo_degree(), sb.coeff(sb.lo_degree())));
    SkewLaurent bot = ring.to_skew(ua * ub);
    if (top.is_zero() || bot.is_zero()) continue;  // unverified pair
    if (top.lo_degree() != hi || top.hi_degree() != hi ||
        bot.lo_degree() != lo || bot.hi_degree() != lo) {
      note = "extreme product landed at an unexpected degree";
      return false;
    }
    SkewLaurent prod = ring.to_skew(a * b);
    if (prod.length() != sa.length() + sb.length()) {
      note = "pair with l(a)=" + std::to_string(sa.length()) +
             ", l(b)=" + std::to_string(sb.length()) +
             " multiplied to length " + std::to_string(prod.length());
      return false;
    }
    ++verified;
  }
  if (verified < 1000) {
    note = "only " + std::to_string(verified) +
           " pairs had verified nonzero extreme products";
    return false;
  }
  note = std::to_string(verified) + " pairs, extreme products verified";
  return true;
}

// ---------------------------------------------------------- criterion 8

// Affine certificate: x acts by t -> (3/2)t, y by t -> t+1. A homomorphism
// image distinct from the identity proves nontriviality in bs(2,3).
struct Affine {
  cpp_rational scale = 1, shift = 0;
  bool identity() const { return scale == 1 && shift == 0; }
};

Affine affine_of(const std::vector<int>& letters) {
  // letters: 0 = x, 1 = x^-1, 2 = y, 3 = y^-1; composition acts leftmost
  // outermost, matching word concatenation.
  Affine out;
  auto apply = [&](cpp_rational s, cpp_rational c) {
    out.shift = out.scale * c + out.shift;
    out.scale = out.scale * s;
  };
  for (int l : letters) {
    switch (l) {
      case 0: apply(cpp_rational(3, 2), 0); break;
      case 1: apply(cpp_rational(2, 3), 0); break;
      case 2: apply(1, 1); break;
      default: apply(1, -1); break;
    }
  }
  return out;
}

Word word_of(const std::vector<int>& letters) {
  Word w;
  for (int l : letters) {
    switch (l) {
      case 0: w *= W("x"); break;
      case 1: w *= W("x^-1"); break;
      case 2: w *= W("y"); break;
      default: w *= W("y^-1"); break;
    }
  }
  return w;
}

std::vector<Word> letter_rotations(const Word& r) {
  std::vector<Word> letters;
  const Word rw = r;
  for (const auto& s : rw.syllables()) {
    long step = s.exp > 0 ? 1 : -1;
    for (Int k = 0; k != s.exp; k += step)
      letters.push_back(Word::gen(s.gen, step));
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Word rot;
    for (std::size_t j = 0; j < letters.size(); ++j)
      rot *= letters[(i + j) % letters.size()];
    out.push_back(rot);
  }
  return out;
}

// Bounded proof search: can w be freely reduced to the empty word after
// inserting at most `depth` conjugate-free copies of relator rotations?
// States are freely reduced words capped at `cap` letters.
bool insertion_search(const Word& w, const std::vector<Word>& rotations,
                      int depth, long cap) {
  auto prefixes = [](const Word& v) {
    std::vector<Word> out = {Word()};
    Word acc;
    const Word vv = v;
    for (const auto& s : vv.syllables()) {
      long step = s.exp > 0 ? 1 : -1;
      for (Int k = 0; k != s.exp; k += step) {
        acc *= Word::gen(s.gen, step);
        out.push_back(acc);
      }
    }
    return out;
  };
  std::set<Word> seen = {w};
  std::deque<std::pair<Word, int>> queue = {{w, 0}};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (cur.empty()) return true;
    if (d == depth) continue;
    for (const Word& pre : prefixes(cur)) {
      Word suf = pre.inv() * cur;
      for (const Word& rot : rotations) {
        Word next = pre * rot * suf;
        if (next.letter_length() > cap) continue;
        if (seen.insert(next).second) queue.push_back({next, d + 1});
      }
    }
  }
  return false;
}

bool oracle_cross_validation(std::string& note) {
  BsOracle bso(2, 3);
  Word r = W("x y^2 x^-1 y^-3");
  std::vector<Word> rotations = letter_rotations(r);
  for (const Word& rot : letter_rotations(r.inv()))
    rotations.push_back(rot);

  // the search itself must certify known relator consequences ...
  for (const Word& probe : {r, r.inv(), W("y^-3 x y^2 x^-1")})
    if (!insertion_search(probe, rotations, 2, 13)) {
      note = "insertion search missed the relator consequence '" +
             probe.str() + "'";
      return false;
    }
  // ... and must not certify a nontrivial word
  if (insertion_search(W("x"), rotations, 2, 13)) {
    note = "insertion search 'proved' x trivial";
    return false;
  }

  long checked = 0, residual = 0;
  std::vector<Word> certified_nontrivial;
  std::vector<std::vector<int>> layer = {{}};
  for (int len = 0; len <= 6; ++len) {
    for (const auto& letters : layer) {
      ++checked;
      Word w = word_of(letters);
      bool oracle_trivial = bso.is_trivial(w);
      bool free_trivial = w.empty();
      Affine img = affine_of(letters);
      if (free_trivial) {
        if (!oracle_trivial || !img.identity()) {
          note = "freely trivial word judged nontrivial";
          return false;
        }
        continue;
      }
      if (!img.identity()) {
        if (oracle_trivial) {
          note = "oracle killed '" + w.str() +
                 "' but its affine image is not the identity";
          return false;
        }
        if (checked % 113 == 0 && certified_nontrivial.size() < 48)
          certified_nontrivial.push_back(w);
        continue;
      }
      ++residual;
      bool provable = insertion_search(w, rotations, 2, 13);
      if (provable != oracle_trivial) {
        note = "disagreement on '" + w.str() + "': insertion search says " +
               (provable ? "trivial" : "nontrivial") + ", oracle says " +
               (oracle_trivial ? "trivial" : "nontrivial");
        return false;
      }
    }
    if (len == 6) break;
    std::vector<std::vector<int>> next;
    next.reserve(layer.size() * 4);
    for (const auto& letters : layer)
      for (int l = 0; l < 4; ++l) {
        auto ext = letters;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    layer = std::move(next);
  }
  if (checked != 5461) {
    note = "expected 5461 words, saw " + std::to_string(checked);
    return false;
  }
  // search soundness sweep: it must not "prove" certified-nontrivial words
  for (const Word& w : certified_nontrivial)
    if (insertion_search(w, rotations, 2, 13)) {
      note = "insertion search 'proved' the nontrivial word '" + w.str() +
             "' trivial";
      return false;
    }

  // chain-of-amalgams vs. two-generator amalgam on two-index windows
  auto rng = make_rng();
  long agreements = 0;
  for (long lo : {-1L, 0L, 2L}) {
    ChainAmalgamOracle chain("u", 3, 2, lo, lo + 1);
    CyclicAmalgamOracle cyc(Gen("u", lo), Gen("u", lo + 1), 3, 2);
    std::vector<Gen> gens = {Gen("u", lo), Gen("u", lo + 1)};
    for (int trial = 0; trial < 3400; ++trial) {
      Word w = random_word(rng, gens, 8, 4);
      if (chain.is_trivial(w) != cyc.is_trivial(w)) {
        note = "window [" + std::to_string(lo) + ", " +
               std::to_string(lo + 1) + "]: oracles disagree on '" +
               w.str() + "'";
        return false;
      }
      ++agreements;
    }
  }
  std::ostringstream os;
  os << checked << " short words cross-checked (" << residual
     << " adjudicated by insertion search, soundness sweep over "
     << certified_nontrivial.size() << " nontrivial words), " << agreements
     << " chain/amalgam agreements";
  note = os.str();
  return true;
}

// --------------------------------------------------------- criterion 9

bool chi_criterion(std::string& note) {
  if (!scenario_passes("thm4.3-chi", note)) return false;
  if (!scenario_passes("thm4.4-chi", note)) return false;
  note = "chi = 1 for the doubled presentation and all six levels";
  return true;
}

// --------------------------------------------------------- criterion 10

const char* kHonestStatement =
    "not machine-verified: the non-generation conclusion, stable freeness\n"
    "        and non-freeness of the rank-one relation module, and the\n"
    "        homotopy-type distinctness of the doubled complexes rest on\n"
    "        infinite or non-constructive arguments (zero-divisor-free\n"
    "        kernel group ring, module classification) with no finite\n"
    "        certificate; this suite substitutes exact finite checks plus\n"
    "        the negative controls below.";

bool negative_controls(std::string& note) {
  BsOracle bso(2, 3);
  Presentation k = double_presentation(bs(2, 3), {W("x"), W("y^4")});
  if (!verify_doubled_quotient(k, bso)) {
    note = "honest double failed its own quotient check";
    return false;
  }
  Presentation bad = k;
  bad.relators[2] = W("x y'^-1");  // corrupt the x = x' identification
  if (verify_doubled_quotient(bad, bso)) {
    note = "corrupted identification passed verify_doubled_quotient";
    return false;
  }
  std::map<Gen, Word> honest = {{Gen("x"), W("x")}, {Gen("y"), W("y")}};
  std::map<Gen, Word> fake = {{Gen("x"), W("x")}, {Gen("y"), W("x")}};
  if (!check_hom(bs(2, 3), honest, bso)) {
    note = "identity map rejected by check_hom";
    return false;
  }
  if (check_hom(bs(2, 3), fake, bso)) {
    note = "false homomorphism candidate passed check_hom";
    return false;
  }
  ScenarioContext corrupt{true};
  if (all_pass(run_all(corrupt))) {
    note = "corrupted oracle left every scenario green";
    return false;
  }
  note = "corrupted identification, false homomorphism and corrupted "
         "oracle all rejected";
  return true;
}

}  // namespace

int main() {
  struct Row {
    std::string name;
    bool ok;
    double ms;
    std::string note;
  };
  std::vector<Row> rows;
  auto run = [&](const std::string& name,
                 const std::function<bool(std::string&)>& fn) {
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok;
    try {
      ok = fn(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("unexpected error: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rows.push_back({name, ok, ms, note});
  };

  run("1  generation of bs(2,3) by {x, y^4}",
      [](std::string& n) { return scenario_passes("gen-xz", n); });
  run("2  tietze chain onto the u-generators (windows 1..4)",
      [](std::string& n) { return scenario_passes("lemma2.1-tietze", n); });
  run("3  commutator alive upstairs, dead downstairs",
      [](std::string& n) {
        return scenario_passes("lemma2.1-commutator", n);
      });
  run("4  relator image has skew length one and zero boundary",
      [](std::string& n) { return scenario_passes("thm1.1-beta", n); });
  run("5  fox fundamental identity on random words", fox_identity_suite);
  run("6  skew-laurent length additivity", length_additivity_suite);
  run("7  cycle decomposition reassembles exactly",
      [](std::string& n) {
        return scenario_passes("lemma3.2-roundtrip", n);
      });
  run("8  oracle cross-validation", oracle_cross_validation);
  run("9  doubled complexes have chi = 1 and map back", chi_criterion);
  run("10 negative controls for the non-verifiable claims",
      negative_controls);

  bool all_ok = true;
  double total = 0;
  for (const auto& row : rows) {
    all_ok = all_ok && row.ok;
    total += row.ms;
    std::cout << (row.ok ? "PASS  " : "FAIL  ") << row.name << "  ("
              << static_cast<long>(row.ms) << " ms)";
    if (!row.note.empty()) std::cout << "\n        " << row.note;
    std::cout << "\n";
  }
  std::cout << "        " << kHonestStatement << "\n";
  std::cout << (all_ok ? "PASS" : "FAIL") << "  total "
            << static_cast<long>(total) << " ms\n";
  return all_ok ? 0 : 1;
}
