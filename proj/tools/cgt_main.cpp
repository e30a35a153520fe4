#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgt/cayley.hpp"
#include "cgt/complexes.hpp"
#include "cgt/error.hpp"
#include "cgt/fox.hpp"
#include "cgt/groupring.hpp"
#include "cgt/presentation.hpp"
#include "cgt/scenarios.hpp"
#include "json.hpp"

namespace {

using namespace cgt;

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) pos = s.size();
    std::string piece = s.substr(start, pos - start);
    if (!piece.empty()) parts.push_back(piece);
    start = pos + 1;
  }
  return parts;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '", path, "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail("cannot write '", out_path, "'");
  out << text;
}

Gen single_gen(const std::string& s) {
  Word w = Word::parse(s);
  if (w.size() != 1 || w.syllables().front().exp != 1)
    fail("'", s, "' is not a single generator");
  return w.syllables().front().gen;
}

nlohmann::json row_json(const RingElt& row) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : row.terms())
    terms.push_back(
        nlohmann::json::array({c.convert_to<long long>(), w.str()}));
  return terms;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word rewriting, fox calculus and cayley-ball toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  auto* verify = app.add_subcommand("verify", "run the scenario catalog");
  std::string v_id;
  bool v_all = false, v_json = false, v_corrupt = false;
  verify->add_option("id", v_id, "single scenario id (default: all)");
  verify->add_flag("--all", v_all, "run the whole catalog");
  verify->add_flag("--json", v_json, "machine-readable report");
  verify->add_flag("--corrupt-oracle", v_corrupt,
                   "fault injection: a free oracle stands in for bs(2,3)");
  verify->callback([&] {
    ScenarioContext cx;
    cx.corrupt = v_corrupt;
    std::vector<ScenarioReport> reports;
    if (v_id.empty() || v_all)
      reports = run_all(cx);
    else
      reports = {run_scenario(v_id, cx)};
    if (v_json)
      std::cout << report_json(reports) << "\n";
    else
      std::cout << report_text(reports);
    if (!all_pass(reports)) rc = 1;
  });

  auto* nf = app.add_subcommand("nf", "canonical form of a word");
  std::string n_group, n_word;
  nf->add_option("--group", n_group, "group descriptor, e.g. bs:2,3")
      ->required();
  nf->add_option("word", n_word, "word literal")->required();
  nf->callback([&] {
    auto o = parse_group_descriptor(n_group);
    std::cout << o->nf(Word::parse(n_word)).word.str() << "\n";
  });

  auto* fox = app.add_subcommand("fox", "fox derivatives of a word");
  std::string f_group, f_word, f_wrt;
  bool f_json = false;
  fox->add_option("--group", f_group, "group descriptor")->required();
  fox->add_option("--word", f_word, "word literal")->required();
  fox->add_option("--wrt", f_wrt, "single generator to derive by");
  fox->add_flag("--json", f_json, "emit {generator: [[coef, word], ...]}");
  fox->callback([&] {
    auto o = parse_group_descriptor(f_group);
    Word w = Word::parse(f_word);
    if (!f_wrt.empty()) {
      RingElt row = fox_derive(w, single_gen(f_wrt), o);
      if (f_json) {
        nlohmann::json out = {{single_gen(f_wrt).str(), row_json(row)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << row.str() << "\n";
      }
      return;
    }
    FoxVector fv = fox_vector(w, o->generators(), o);
    if (f_json) {
      nlohmann::json out = nlohmann::json::object();
      for (const auto& [g, row] : fv.rows) out[g.str()] = row_json(row);
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& [g, row] : fv.rows)
        std::cout << g.str() << ": " << row.str() << "\n";
    }
  });

  auto* ball = app.add_subcommand("ball", "bfs ball of a cayley graph");
  std::string b_group, b_gens;
  long b_radius = 0;
  std::size_t b_budget = 1000000;
  bool b_stats = false, b_dot = false;
  ball->add_option("--group", b_group, "group descriptor")->required();
  ball->add_option("--gens", b_gens, "step words, ';'-separated")->required();
  ball->add_option("--radius", b_radius, "ball radius")->required();
  ball->add_option("--budget", b_budget, "vertex cap");
  ball->add_flag("--stats", b_stats, "print vertex/edge counts");
  ball->add_flag("--dot", b_dot, "emit the graph in dot format");
  ball->callback([&] {
    auto o = parse_group_descriptor(b_group);
    std::vector<Word> steps;
    for (const auto& s : split_list(b_gens, ';'))
      steps.push_back(Word::parse(s));
    CayleyBall bb = build_ball(o, steps, b_radius, b_budget);
    if (b_stats || !b_dot) {
      std::cout << "vertices: " << bb.vertices.size() << "\n"
                << "edges: " << bb.edges.size() << "\n";
    }
    if (b_dot) std::cout << to_dot(bb);
  });

  auto* chi = app.add_subcommand("chi", "euler characteristic of a file");
  std::string c_file;
  chi->add_option("file", c_file, "presentation file")->required();
  chi->callback([&] {
    Presentation p = parse_presentation(slurp(c_file));
    std::cout << euler_char(p) << "\n";
  });

  auto* dbl = app.add_subcommand("double", "double a presentation");
  std::string d_file, d_ids, d_out;
  dbl->add_option("file", d_file, "presentation file")->required();
  dbl->add_option("--ids", d_ids, "identification words, ';'-separated");
  dbl->add_option("--out", d_out, "output file (default stdout)");
  dbl->callback([&] {
    Presentation p = parse_presentation(slurp(d_file));
    std::vector<Word> ids;
    for (const auto& s : split_list(d_ids, ';')) ids.push_back(Word::parse(s));
    emit(d_out, format_presentation(double_presentation(p, ids)));
  });

  auto* ki = app.add_subcommand("trefoil-ki", "doubled trefoil presentation");
  long k_i = 0;
  std::string k_out;
  ki->add_option("--i", k_i, "level")->required();
  ki->add_option("--out", k_out, "output file (default stdout)");
  ki->callback([&] {
    auto [a, b] = trefoil_genset(k_i);
    emit(k_out,
         format_presentation(double_presentation(trefoil(), {a, b})));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
