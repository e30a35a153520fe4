#include "cgt/scenarios.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <utility>

#include "cgt/cayley.hpp"
#include "cgt/complexes.hpp"
#include "cgt/error.hpp"
#include "cgt/fox.hpp"
#include "cgt/groupring.hpp"
#include "cgt/presentation.hpp"
#include "json.hpp"

namespace cgt {

OraclePtr ScenarioContext::bs_oracle() const {
  if (corrupt)
    return std::make_shared<FreeOracle>(std::vector<Gen>{Gen("x"), Gen("y")});
  return std::make_shared<BsOracle>(2, 3);
}

namespace {

std::string show(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void step(ScenarioReport& rep, std::string desc, std::string expected,
          std::string actual) {
  rep.steps.push_back(
      {std::move(desc), std::move(expected), std::move(actual)});
}

// ------------------------------------------------------------------ gen-xz

// y = (x^2 z x^-1 z^-1 x^-1)(z x z^-1 x^-1) with z = y^4: the first factor
// is y^3, the second y^-2.
void s_gen_xz(const ScenarioContext& cx, ScenarioReport& rep) {
  auto o = cx.bs_oracle();
  std::vector<Word> sub = {W("x"), W("y^4")};
  bool hit = witness_generation(*o, W("y"), sub,
                                W("s^2 t s^-1 t^-1 s^-1 t s t^-1 s^-1"));
  step(rep, "witness word in {x, y^4} evaluates to y", "true", show(hit));
  bool miss = witness_generation(*o, W("y"), sub, W("s t s^-1 t^-1"));
  step(rep, "the plain commutator does not evaluate to y", "false",
       show(miss));
}

// --------------------------------------------------------- lemma2.1-tietze

// Rewrites <z_0..z_{n+1} | z_i = (z_{i+1} z_i^-1)^2> onto the generators
// u_i = z_{i+1} z_i^-1: add each u_i, restate relator i as z_i u_i^-2,
// eliminate the z_i in increasing order (z_{n+1} last, via the evolved
// definition u_n^3 z_{n+1}^-1), and invert the survivors.
Presentation lemma21_chain(long n) {
  Presentation p = hbar_window(0, n);
  auto zg = [](long i) { return Gen("z", i); };
  auto ug = [](long i) { return Gen("u", i); };
  auto udef = [&](long i) {
    return Word::gen(zg(i + 1)) * Word::gen(zg(i), -1);
  };
  for (long i = 0; i <= n; ++i) p = tietze_add_gen(p, ug(i), udef(i));
  for (long i = 0; i <= n; ++i)
    p = tietze_rewrite_relator(p, static_cast<std::size_t>(i),
                               Word::gen(zg(i)) * Word::gen(ug(i), -2),
                               {{ug(i), udef(i)}});
  auto find_relator = [&](const Word& w) -> std::size_t {
    for (std::size_t k = 0; k < p.relators.size(); ++k)
      if (p.relators[k] == w) return k;
    fail("tietze chain: expected relator '", w.str(), "' is absent");
  };
  for (long i = 0; i <= n; ++i) {
    std::size_t k = find_relator(Word::gen(zg(i)) * Word::gen(ug(i), -2));
    p = tietze_remove_gen(p, zg(i), k);
  }
  std::size_t k =
      find_relator(Word::gen(ug(n), 3) * Word::gen(zg(n + 1), -1));
  p = tietze_remove_gen(p, zg(n + 1), k);
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    p = tietze_invert_relator(p, j);
  return p;
}

void s_lemma21_tietze(const ScenarioContext&, ScenarioReport& rep) {
  for (long n = 1; n <= 4; ++n) {
    std::vector<Gen> ugens;
    std::vector<Word> urels;
    for (long i = 0; i <= n; ++i) ugens.push_back(Gen("u", i));
    for (long i = 0; i < n; ++i)
      urels.push_back(Word::gen(Gen("u", i + 1), 2) *
                      Word::gen(Gen("u", i), -3));
    std::string expected =
        format_presentation(make_presentation(ugens, urels));
    step(rep, "window 0.." + show(n) + " rewrites onto the u_i", expected,
         format_presentation(lemma21_chain(n)));
  }
}

// ----------------------------------------------------- lemma2.1-commutator

void s_lemma21_commutator(const ScenarioContext& cx, ScenarioReport& rep) {
  CyclicAmalgamOracle cyc(Gen("u", 0), Gen("u", 1), 3, 2);
  Word c = comm(W("u_0"), W("u_1"));
  step(rep, "[u_0, u_1] is trivial in <u_0, u_1 | u_0^3 = u_1^2>", "false",
       show(cyc.is_trivial(c)));
  auto o = cx.bs_oracle();
  Word image = comm(W("y^2"), W("x y^2 x^-1"));
  step(rep, "its image [y^2, x y^2 x^-1] is trivial in bs(2,3)", "true",
       show(o->is_trivial(image)));
}

// --------------------------------------------------------- lemma2.2-cyclic

void s_lemma22_cyclic(const ScenarioContext&, ScenarioReport& rep) {
  Gen z0("z", 0), z1("z", 1), t("t");
  Word e0 = Word::gen(z0, -1) *
            (Word::gen(z1) * Word::gen(z0, -1)).pow(2);
  Presentation p = make_presentation({z0, z1}, {e0});
  Word tdef = Word::gen(z1) * Word::gen(z0, -1);
  p = tietze_add_gen(p, t, tdef);
  p = tietze_rewrite_relator(p, 0, Word::gen(t, 2) * Word::gen(z0, -1),
                             {{t, tdef}});
  step(rep, "z_0 eliminates to", "t^2",
       tietze_elimination_image(p, z0, 0).str());
  p = tietze_remove_gen(p, z0, 0);
  step(rep, "z_1 eliminates to", "t^3",
       tietze_elimination_image(p, z1, 0).str());
  p = tietze_remove_gen(p, z1, 0);
  step(rep, "surviving presentation is free of rank one",
       format_presentation(make_presentation({t}, {})),
       format_presentation(p));
  std::map<Gen, Word> imgs = {{z0, W("t^2")}, {z1, W("t^3")}};
  step(rep, "e_0 dies under z_0 = t^2, z_1 = t^3", "1",
       e0.substitute(imgs).str());
}

// --------------------------------------------------------- lemma2.2-images

void s_lemma22_images(const ScenarioContext& cx, ScenarioReport& rep) {
  auto o = cx.bs_oracle();
  auto zi = [](long j) {
    return conj(Word::gen(Gen("x"), j), Word::gen(Gen("y"), 4));
  };
  for (long i = -2; i <= 2; ++i) {
    Word c = comm(zi(i), zi(i + 1));
    Word d = zi(i).pow(-3) * zi(i + 1).pow(2);
    Word e = zi(i).inv() * (zi(i + 1) * zi(i).inv()).pow(2);
    std::string at = "_" + show(i) + " maps to a trivial element";
    step(rep, "c" + at, "true", show(o->is_trivial(c)));
    step(rep, "d" + at, "true", show(o->is_trivial(d)));
    step(rep, "e" + at, "true", show(o->is_trivial(e)));
  }
}

// ------------------------------------------------------------ thm1.1-beta

void s_thm11_beta(const ScenarioContext&, ScenarioReport& rep) {
  auto h = std::make_shared<ChainAmalgamOracle>("y", 3, 2, 0, 1);
  std::vector<Gen> zs = {Gen("z", 0), Gen("z", 1)};
  std::map<Gen, Word> imgs = {{zs[0], Word::gen(Gen("y", 0), 4)},
                              {zs[1], Word::gen(Gen("y", 1), 4)}};
  auto view = std::make_shared<ImageOracle>(h, zs, imgs);
  Word r = W("z_1^2 z_0^-3");
  SkewLaurent beta = relation_module_element(r, "z", view);
  step(rep, "skew-Laurent length of the image of z_1^2 z_0^-3", "1",
       show(beta.length()));
  step(rep, "x-degree range", "[0, 1]",
       "[" + show(beta.lo_degree()) + ", " + show(beta.hi_degree()) + "]");
  step(rep, "top coefficient", "1*1 + 1*y_1^4", beta.coeff(1).str());
  FoxVector fv = fox_vector(r, zs, view);
  RingElt b(view);
  for (const auto& g : zs)
    b += fv.wrt(g) *
         (RingElt::term(view, Word::gen(g)) - RingElt::one(view));
  step(rep, "boundary of the fox row", "0", b.str());
}

// ------------------------------------------------------ lemma3.2-roundtrip

void s_lemma32_roundtrip(const ScenarioContext& cx, ScenarioReport& rep) {
  auto o = cx.bs_oracle();
  std::vector<Gen> gens = {Gen("x"), Gen("y")};
  CayleyBall ball = build_ball(o, {W("x"), W("y")}, 6);
  Word rel = W("x y^2 x^-1 y^-3");
  EdgeChain c = lift_word(ball, rel);
  step(rep, "the lifted relator closes up", "true",
       show(boundary(c).empty()));

  auto pairs = cycle_to_relators(c);
  step(rep, "one closed path recovered", "1", show(pairs.size()));
  step(rep, "based at", "1", pairs.empty() ? "-" : pairs[0].first.str());
  step(rep, "tracing", rel.str(),
       pairs.empty() ? "-" : pairs[0].second.str());

  EdgeChain two = c + translate(c, W("x^2"));
  auto p2 = cycle_to_relators(two);
  step(rep, "two translated copies split into", "2", show(p2.size()));
  step(rep, "second conjugator", "x^2",
       p2.size() > 1 ? p2[1].first.str() : "-");
  EdgeChain back(&ball, {});
  for (const auto& [f, s] : p2)
    back += fox_to_chain(ball,
                         fox_vector(f * s * f.inv(), gens, ball.oracle));
  step(rep, "fox images of the recovered conjugates reassemble the cycle",
       "true", show(back == two));
}

// ------------------------------------------------------------- thm4.3-chi

void s_thm43_chi(const ScenarioContext& cx, ScenarioReport& rep) {
  Presentation k = double_presentation(bs(2, 3), {W("x"), W("y^4")});
  step(rep, "relators of the doubled presentation", "4",
       show(k.relators.size()));
  step(rep, "chi", "1", show(euler_char(k)));
  step(rep, "chi level formula at (0, 2)", "1",
       show(chi_level_formula(0, 2)));
  auto o = cx.bs_oracle();
  step(rep, "collapsing the primes maps onto the group", "true",
       show(verify_doubled_quotient(k, *o)));
}

// ------------------------------------------------------------- thm4.4-chi

void s_thm44_chi(const ScenarioContext&, ScenarioReport& rep) {
  CyclicAmalgamOracle trefo(Gen("x"), Gen("y"), 2, 3);
  for (long i = 0; i <= 5; ++i) {
    auto [a, b] = trefoil_genset(i);
    Presentation ki = double_presentation(trefoil(), {a, b});
    step(rep, "chi of the double along {" + a.str() + ", " + b.str() + "}",
         "1", show(euler_char(ki)));
    step(rep, "level " + show(i) + " collapse maps onto the trefoil group",
         "true", show(verify_doubled_quotient(ki, trefo)));
  }
  step(rep, "chi level formula at (0, 2)", "1",
       show(chi_level_formula(0, 2)));
}

using ScenarioFn = void (*)(const ScenarioContext&, ScenarioReport&);

const std::vector<std::pair<std::string, ScenarioFn>>& catalog() {
  static const std::vector<std::pair<std::string, ScenarioFn>> entries = {
      {"gen-xz", s_gen_xz},
      {"lemma2.1-tietze", s_lemma21_tietze},
      {"lemma2.1-commutator", s_lemma21_commutator},
      {"lemma2.2-cyclic", s_lemma22_cyclic},
      {"lemma2.2-images", s_lemma22_images},
      {"thm1.1-beta", s_thm11_beta},
      {"lemma3.2-roundtrip", s_lemma32_roundtrip},
      {"thm4.3-chi", s_thm43_chi},
      {"thm4.4-chi", s_thm44_chi},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : catalog()) out.push_back(id);
    return out;
  }();
  return ids;
}

ScenarioReport run_scenario(const std::string& id,
                            const ScenarioContext& ctx) {
  for (const auto& [name, fn] : catalog()) {
    if (name != id) continue;
    ScenarioReport rep;
    rep.id = id;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(ctx, rep);
    } catch (const Error& e) {
      step(rep, "unexpected error", "none", e.what());
    }
    auto end = std::chrono::steady_clock::now();
    rep.ms = std::chrono::duration<double, std::milli>(end - start).count();
    rep.pass = true;
    for (const auto& s : rep.steps)
      if (!s.ok()) rep.pass = false;
    return rep;
  }
  fail("unknown scenario id '", id, "'");
}

std::vector<ScenarioReport> run_all(const ScenarioContext& ctx) {
  std::vector<ScenarioReport> out;
  for (const auto& id : scenario_ids()) out.push_back(run_scenario(id, ctx));
  return out;
}

bool all_pass(const std::vector<ScenarioReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

std::string report_text(const std::vector<ScenarioReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  ("
       << static_cast<long>(r.ms * 1000) / 1000.0 << " ms)\n";
    if (!r.pass)
      for (const auto& s : r.steps)
        if (!s.ok())
          os << "      " << s.desc << ": expected " << s.expected << ", got "
             << s.actual << "\n";
  }
  return os.str();
}

std::string report_json(const std::vector<ScenarioReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : r.steps)
      steps.push_back(
          {{"desc", s.desc}, {"expected", s.expected}, {"actual", s.actual}});
    arr.push_back({{"id", r.id},
                   {"status", r.pass ? "pass" : "fail"},
                   {"steps", std::move(steps)},
                   {"ms", r.ms}});
  }
  return arr.dump(2);
}

}  // namespace cgt
