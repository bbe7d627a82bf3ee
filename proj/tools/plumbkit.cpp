// plumbkit: command-line front end for the lens-space plumbing calculus.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plumbkit/analysis.hpp"
#include "plumbkit/conditions.hpp"
#include "plumbkit/contfrac.hpp"
#include "plumbkit/duality.hpp"
#include "plumbkit/embeddings.hpp"
#include "plumbkit/fillings.hpp"
#include "plumbkit/graphs.hpp"
#include "plumbkit/lattice.hpp"

using json = nlohmann::ordered_json;
using namespace plumbkit;

namespace {

constexpr const char* kVersion = "0.1.0";

LensSpace parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw CLI::ValidationError("expected a fraction p/q");
  long long p = std::stoll(text.substr(0, slash));
  long long q = std::stoll(text.substr(slash + 1));
  return LensSpace(p, q);
}

std::vector<LensSpace> parse_fraction_list(const std::string& text) {
  std::vector<LensSpace> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!piece.empty()) out.push_back(parse_fraction(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("expected p/q[,p/q...]");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!piece.empty()) out.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::vector<int>> parse_ext_lists(const std::string& text) {
  std::vector<std::vector<int>> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t bar = text.find('|', start);
    std::string piece = text.substr(start, bar == std::string::npos ? bar : bar - start);
    if (!piece.empty()) out.push_back(parse_int_list(piece));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

Convention parse_convention(const std::string& s) {
  if (s == "plumbing") return Convention::Plumbing;
  if (s == "dual") return Convention::Dual;
  throw CLI::ValidationError("--convention must be plumbing or dual");
}

std::string chain_to_string(const ChainWeights& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

json matrix_to_json(const GramMatrix& g) {
  json rows = json::array();
  for (const auto& row : g.m) rows.push_back(row);
  return rows;
}

void print_matrix(const GramMatrix& g) {
  for (const auto& row : g.m) {
    std::string line;
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) line += ',';
      line += std::to_string(row[j]);
    }
    std::cout << line << "\n";
  }
}

json report_shell(const std::string& command) {
  json r;
  r["command"] = command;
  r["version"] = kVersion;
  return r;
}

std::string vertex_str(VertexId v) {
  return "(" + std::to_string(v.comp) + "," + std::to_string(v.pos) + ")";
}

int default_threads() {
  if (const char* env = std::getenv("PLUMBKIT_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

std::string classification_str(const Classification& c) {
  switch (c.kind) {
    case EmbeddingKind::Standard: return "standard";
    case EmbeddingKind::SemiStandard:
      return "semi-standard at " + (c.at ? vertex_str(*c.at) : std::string("?"));
    case EmbeddingKind::Neither: return "neither";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plumbkit: lens-space plumbing graphs, dual lattice embeddings and filling counts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  bool json_out = false;
  bool strict = false;
  int threads = default_threads();
  app.add_flag("--json", json_out, "machine-readable output");
  app.add_flag("--strict", strict, "exit 1 when a check fails");
  app.add_option("--threads", threads, "worker threads (default $PLUMBKIT_THREADS or 1)");

  std::string frac_arg, graph_arg, side = "plumbing", convention = "plumbing";
  std::string bad_arg, badpos_arg, left_arg, right_arg;
  bool adjusted = false, show = false, no_bad = false, appendix = false;
  int max_dim = -1, k_arg = 1, case_arg = 0, class_arg = 0;
  int max_weight = 0, max_vertices = 0;

  auto* cmd_expand = app.add_subcommand("expand", "negative continued fraction of p/q");
  cmd_expand->add_option("fraction", frac_arg, "p/q")->required();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a chain a1,a2,... to p/q");
  cmd_eval->add_option("chain", graph_arg, "a1,a2,...")->required();

  auto* cmd_dual = app.add_subcommand("dual", "dual plumbing graph");
  cmd_dual->add_option("graph", graph_arg)->required();
  cmd_dual->add_flag("--adjusted", adjusted, "print adjusted weights");
  cmd_dual->add_option("--convention", convention, "plumbing|dual (default plumbing)");

  auto* cmd_gram = app.add_subcommand("gram", "intersection form of a graph");
  cmd_gram->add_option("graph", graph_arg)->required();
  cmd_gram->add_option("--convention", convention, "plumbing|dual (default plumbing)");

  auto* cmd_check = app.add_subcommand("check", "forbidden configurations / Working Conditions");
  cmd_check->add_option("graph", graph_arg)->required();
  cmd_check->add_option("--side", side, "plumbing (17 configurations) or dual (Working Conditions)");
  cmd_check->add_flag("--no-bad", no_bad, "dual side: additionally reject bad vertices");

  auto* cmd_embed = app.add_subcommand("embed", "enumerate lattice embedding classes of a dual graph");
  cmd_embed->add_option("graph", graph_arg)->required();
  cmd_embed->add_option("--max-dim", max_dim, "largest ambient dimension");
  cmd_embed->add_flag("--show", show, "print the vectors");

  auto* cmd_complement = app.add_subcommand("complement", "orthogonal complement of an embedding class");
  cmd_complement->add_option("graph", graph_arg)->required();
  cmd_complement->add_option("--class", class_arg, "class index as listed by embed")->required();

  auto* cmd_allconfig = app.add_subcommand("allconfig", "batch embedding classification");
  cmd_allconfig->add_option("--case", case_arg, "built-in case 1..13");
  cmd_allconfig->add_option("--bad", bad_arg, "bad part weights, e.g. 2,4,2");
  cmd_allconfig->add_option("--bad-pos", badpos_arg, "1-based bad positions, e.g. 2");
  cmd_allconfig->add_option("--left", left_arg, "left extensions, |-separated chains");
  cmd_allconfig->add_option("--right", right_arg, "right extensions, |-separated chains");

  auto* cmd_xk = app.add_subcommand("xk", "Property X_k for a connected sum of lens spaces");
  cmd_xk->add_option("lens", frac_arg, "p/q[,p/q...]")->required();
  cmd_xk->add_option("--k", k_arg, "the k in X_k")->required();

  auto* cmd_mine = app.add_subcommand("mine", "minimal forbidden configurations within bounds");
  cmd_mine->add_option("--k", k_arg)->required();
  cmd_mine->add_option("--max-weight", max_weight)->required();
  cmd_mine->add_option("--max-vertices", max_vertices)->required();

  auto* cmd_fillings = app.add_subcommand("fillings", "minimal symplectic filling count");
  cmd_fillings->add_option("fraction", frac_arg, "p/q")->required();

  auto* cmd_verify = app.add_subcommand("verify", "reproduce the published batch counts");
  cmd_verify->add_flag("--appendix", appendix, "run only the 13 batch cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    bool failed_check = false;

    if (*cmd_expand) {
      LensSpace l = parse_fraction(frac_arg);
      ChainWeights c = expand(l.p, l.q);
      if (json_out) {
        json r = report_shell("expand");
        r["inputs"] = {{"p", l.p}, {"q", l.q}};
        r["results"] = {{"chain", c}};
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << chain_to_string(c) << "\n";
      }
    } else if (*cmd_eval) {
      std::vector<int> entries = parse_int_list(graph_arg);
      auto [p, q] = evaluate(ChainWeights(entries.begin(), entries.end()));
      if (json_out) {
        json r = report_shell("eval");
        r["inputs"] = {{"chain", entries}};
        r["results"] = {{"p", p}, {"q", q}};
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << p << "/" << q << "\n";
      }
    } else if (*cmd_dual) {
      LinearGraph g = parse_graph(graph_arg, parse_convention(convention));
      LinearGraph d = dualize(g);
      if (json_out) {
        json r = report_shell("dual");
        r["inputs"] = {{"graph", format_graph(g)}};
        r["results"]["dual"] = format_graph(d);
        json adj = json::array();
        for (const auto& comp : adjusted_weights(d).adjusted) adj.push_back(comp);
        r["results"]["adjusted"] = adj;
        std::cout << r.dump(2) << "\n";
      } else if (adjusted) {
        auto view = adjusted_weights(d);
        std::string out;
        for (size_t c = 0; c < view.adjusted.size(); ++c) {
          if (c) out += ';';
          for (size_t p = 0; p < view.adjusted[c].size(); ++p) {
            if (p) out += ',';
            out += std::to_string(view.adjusted[c][p]);
          }
        }
        std::cout << out << "\n";
      } else {
        std::cout << format_graph(d) << "\n";
      }
    } else if (*cmd_gram) {
      LinearGraph g = parse_graph(graph_arg, parse_convention(convention));
      GramMatrix gm = gram_of_graph(g);
      if (json_out) {
        json r = report_shell("gram");
        r["inputs"] = {{"graph", format_graph(g)}};
        r["results"] = {{"matrix", matrix_to_json(gm)}};
        std::cout << r.dump(2) << "\n";
      } else {
        print_matrix(gm);
      }
    } else if (*cmd_check) {
      json r = report_shell("check");
      if (side == "plumbing") {
        LinearGraph g = parse_graph(graph_arg, Convention::Plumbing);
        auto [passed, hits] = check_17(g);
        failed_check = !passed;
        if (json_out) {
          r["inputs"] = {{"graph", format_graph(g)}, {"side", "plumbing"}};
          json jh = json::array();
          for (const auto& h : hits)
            jh.push_back({{"config", std::string(1, h.id)}, {"subset", h.subset}});
          r["results"] = {{"passed", passed}, {"hits", jh}};
          std::cout << r.dump(2) << "\n";
        } else if (passed) {
          std::cout << "passed\n";
        } else {
          for (const auto& h : hits) {
            std::cout << "hit (" << h.id << ") at";
            for (int v : h.subset) std::cout << " " << v;
            std::cout << "\n";
          }
        }
      } else if (side == "dual") {
        LinearGraph g = parse_graph(graph_arg, Convention::Dual);
        WCReport wc = check_working_conditions(g, no_bad);
        failed_check = !wc.passed;
        if (json_out) {
          r["inputs"] = {{"graph", format_graph(g)}, {"side", "dual"}};
          json jv = json::array();
          for (const auto& v : wc.violations) {
            json w = json::array();
            for (VertexId x : v.witness) w.push_back({x.comp, x.pos});
            jv.push_back({{"condition", v.condition}, {"witness", w}});
          }
          r["results"] = {{"passed", wc.passed}, {"violations", jv}};
          std::cout << r.dump(2) << "\n";
        } else if (wc.passed) {
          std::cout << "passed\n";
        } else {
          for (const auto& v : wc.violations) {
            std::cout << "violates " << v.condition << " at";
            for (VertexId x : v.witness) std::cout << " " << vertex_str(x);
            std::cout << "\n";
          }
        }
      } else {
        throw CLI::ValidationError("--side must be plumbing or dual");
      }
    } else if (*cmd_embed) {
      LinearGraph g = parse_graph(graph_arg, Convention::Dual);
      auto classes = enumerate_embeddings(g, max_dim);
      if (json_out) {
        json r = report_shell("embed");
        r["inputs"] = {{"graph", format_graph(g)}, {"max_dim", max_dim}};
        json jc = json::array();
        for (const auto& e : classes) {
          json item;
          item["dim"] = e.dim;
          item["classification"] = classification_str(classify(e));
          item["vectors"] = e.vectors;
          jc.push_back(item);
        }
        r["results"] = {{"count", classes.size()}, {"classes", jc}};
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << classes.size() << " classes\n";
        for (size_t i = 0; i < classes.size(); ++i) {
          std::cout << "class " << i << ": dim " << classes[i].dim << ", "
                    << classification_str(classify(classes[i])) << "\n";
          if (show)
            for (const auto& v : classes[i].vectors) {
              std::cout << "  (";
              for (size_t j = 0; j < v.size(); ++j) std::cout << (j ? "," : "") << v[j];
              std::cout << ")\n";
            }
        }
      }
    } else if (*cmd_complement) {
      LinearGraph g = parse_graph(graph_arg, Convention::Dual);
      auto classes = enumerate_embeddings(g, -1);
      if (class_arg < 0 || class_arg >= static_cast<int>(classes.size()))
        throw CLI::ValidationError("--class out of range; embed lists " +
                                   std::to_string(classes.size()) + " classes");
      GramMatrix comp = complement(classes[class_arg]);
      if (json_out) {
        json r = report_shell("complement");
        r["inputs"] = {{"graph", format_graph(g)}, {"class", class_arg}};
        r["results"] = {{"rank", comp.rank()}, {"matrix", matrix_to_json(comp)}};
        std::cout << r.dump(2) << "\n";
      } else {
        print_matrix(comp);
      }
    } else if (*cmd_allconfig) {
      AllConfigReport report;
      json inputs;
      if (case_arg > 0) {
        if (case_arg > static_cast<int>(appendix_cases().size()))
          throw CLI::ValidationError("--case must be 1..13");
        const AppendixCase& c = appendix_cases()[case_arg - 1];
        report = all_config(c.bad, c.bad_pos, c.lefts, c.rights, threads);
        inputs = {{"case", case_arg}};
      } else {
        if (bad_arg.empty() || badpos_arg.empty())
          throw CLI::ValidationError("need --case or --bad/--bad-pos/--left/--right");
        report = all_config(parse_int_list(bad_arg), parse_int_list(badpos_arg),
                            parse_ext_lists(left_arg), parse_ext_lists(right_arg), threads);
        inputs = {{"bad", bad_arg}, {"bad_pos", badpos_arg}, {"left", left_arg}, {"right", right_arg}};
      }
      if (json_out) {
        json r = report_shell("allconfig");
        r["inputs"] = inputs;
        r["results"] = {{"total", report.total},
                        {"standard", report.standard},
                        {"semi_standard", report.semi_standard},
                        {"neither", report.neither}};
        json jc = json::array();
        for (const auto& pc : report.configs)
          jc.push_back({{"weights", pc.weights},
                        {"total", pc.total},
                        {"standard", pc.standard},
                        {"semi_standard", pc.semi_standard},
                        {"neither", pc.neither}});
        r["results"]["configs"] = jc;
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << "Total number of embeddings:" << report.total << "\n"
                  << "Total number of embeddings that are standard in the extended bad part:"
                  << report.standard << "\n"
                  << "Total number of embeddings that are semi-standard in the extended bad part:"
                  << report.semi_standard << "\n"
                  << "Total number of embeddings that are neither in the extended bad part:"
                  << report.neither << "\n";
      }
    } else if (*cmd_xk) {
      std::vector<LensSpace> lens = parse_fraction_list(frac_arg);
      XkVerdict v = property_xk(lens, k_arg);
      failed_check = !v.satisfies;
      if (json_out) {
        json r = report_shell("xk");
        json jl = json::array();
        for (const LensSpace& l : lens) jl.push_back({{"p", l.p}, {"q", l.q}});
        r["inputs"] = {{"lens_spaces", jl}, {"k", k_arg}};
        r["results"] = {{"n_k", v.n_k}, {"satisfies", v.satisfies}};
        if (v.witness) {
          r["results"]["witness_dim"] = v.witness->dim;
          r["results"]["witness"] = v.witness->vectors;
        }
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << (v.satisfies ? "satisfies" : "fails") << " X_" << k_arg
                  << " (n_k = " << v.n_k << ")\n";
        if (v.witness) std::cout << "witness dimension " << v.witness->dim << "\n";
      }
    } else if (*cmd_mine) {
      auto found = mine_forbidden(k_arg, max_weight, max_vertices);
      if (json_out) {
        json r = report_shell("mine");
        r["inputs"] = {{"k", k_arg}, {"max_weight", max_weight}, {"max_vertices", max_vertices}};
        json jf = json::array();
        for (const auto& g : found) jf.push_back(format_graph(g));
        r["results"] = {{"count", found.size()}, {"configurations", jf}};
        std::cout << r.dump(2) << "\n";
      } else {
        for (const auto& g : found) std::cout << format_graph(g) << "\n";
      }
    } else if (*cmd_fillings) {
      LensSpace l = parse_fraction(frac_arg);
      FillingCount fc = count_fillings(l);
      std::string pi1 = "undefined";
      try {
        pi1 = filling_pi1(l) == FillingPi1::Z2 ? "Z/2" : "trivial";
      } catch (const std::invalid_argument&) {
      }
      LinearGraph dual = chain(expand(l.p, l.p - l.q), Convention::Dual);
      ChainWeights dual_chain(dual.components[0].begin(), dual.components[0].end());
      json tuples = json::array();
      for (VertexId x : bad_vertices(dual)) {
        AdmissibleTuple t = bad_vertex_tuple(dual_chain, x.pos + 1);
        tuples.push_back({{"bad_vertex", x.pos + 1}, {"tuple", t.entries}});
      }
      if (json_out) {
        json r = report_shell("fillings");
        r["inputs"] = {{"p", l.p}, {"q", l.q}};
        r["results"] = {{"count", fc.count},
                        {"n_L", fc.n_l},
                        {"reduced", fc.reduced},
                        {"q_squared_is_one_mod_p", fc.q_squared_one},
                        {"q_is_one_mod_p", l.q == 1},
                        {"symmetric_pattern", fc.has_symmetric_pattern},
                        {"pi1", pi1},
                        {"tuples", tuples}};
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << "count " << fc.count << ", n(L) " << fc.n_l
                  << (fc.reduced ? ", reduced" : ", not reduced") << ", pi1 " << pi1 << "\n";
        for (const auto& t : tuples) {
          std::cout << "bad vertex " << t["bad_vertex"] << ": tuple";
          for (const auto& e : t["tuple"]) std::cout << " " << e;
          std::cout << "\n";
        }
      }
    } else if (*cmd_verify) {
      (void)appendix;
      auto start = std::chrono::steady_clock::now();
      auto results = verify_appendix(threads);
      int matches = 0;
      json jc = json::array();
      for (const auto& r : results) {
        matches += r.match ? 1 : 0;
        if (json_out) {
          jc.push_back({{"case", r.number},
                        {"total", r.report.total},
                        {"standard", r.report.standard},
                        {"semi_standard", r.report.semi_standard},
                        {"neither", r.report.neither},
                        {"published",
                         {r.published[0], r.published[1], r.published[2], r.published[3]}},
                        {"match", r.match}});
        } else {
          std::cout << "case " << r.number << ": total " << r.report.total << "/" << r.published[0]
                    << " standard " << r.report.standard << "/" << r.published[1] << " semi "
                    << r.report.semi_standard << "/" << r.published[2] << " neither "
                    << r.report.neither << "/" << r.published[3]
                    << (r.match ? "  MATCH" : "  MISMATCH") << "\n";
        }
      }
      failed_check = matches != static_cast<int>(results.size());
      if (json_out) {
        json r = report_shell("verify");
        r["inputs"] = {{"appendix", true}};
        r["results"] = {{"cases", jc},
                        {"matches", matches},
                        {"out_of", results.size()}};
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << matches << "/" << results.size() << " cases match\n";
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        std::cerr << "elapsed " << elapsed << " ms\n";
      }
    }

    return (strict && failed_check) ? 1 : 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
