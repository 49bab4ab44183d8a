#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "egdiff/classes.hpp"
#include "egdiff/complement.hpp"
#include "egdiff/degree_sequence.hpp"
#include "egdiff/errors.hpp"
#include "egdiff/matrix.hpp"
#include "egdiff/posets.hpp"
#include "egdiff/realize.hpp"

namespace {

using egdiff::DegreeSequence;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSizeCap = 4;

constexpr std::size_t kHardLimitCeiling = 12;
constexpr std::size_t kDefaultLimit = 9;

struct Options {
  bool json = false;
  bool quiet = false;
  std::optional<std::size_t> limit;
};

// Every failure while turning text into a DegreeSequence is a parse error.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_values(const std::string& text) {
  std::vector<std::int64_t> values;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw parse_error("cannot parse '" + token + "' as an integer degree");
    }
    token.clear();
  };
  for (const char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return values;
}

DegreeSequence parse_sequence(const std::string& text) {
  try {
    return DegreeSequence(parse_values(text));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::size_t resolve_limit(const Options& opts) {
  if (opts.limit) return *opts.limit;
  if (const char* env = std::getenv("EGDIFF_LIMIT")) {
    try {
      const long long v = std::stoll(env);
      if (v >= 1 && v <= static_cast<long long>(kHardLimitCeiling)) {
        return static_cast<std::size_t>(v);
      }
    } catch (const std::exception&) {
    }
    if (!opts.quiet) {
      std::cerr << "note: ignoring invalid EGDIFF_LIMIT='" << env << "'\n";
    }
  }
  return kDefaultLimit;
}

std::string join(const std::vector<std::int64_t>& values, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

std::string paren_list(const std::vector<std::int64_t>& values) {
  return "(" + join(values, ',') + ")";
}

json delta_report(const DegreeSequence& d) {
  json out;
  out["m"] = egdiff::modified_durfee(d);
  out["delta"] = egdiff::principal_differences(d).values;
  out["delta_star"] = d.empty() ? json(nullptr) : json(egdiff::max_difference(d));
  out["graphical"] = egdiff::is_graphical_full(d);
  return out;
}

void print_delta(const DegreeSequence& d, bool as_json, std::ostream& os) {
  const json report = delta_report(d);
  if (as_json) {
    os << report.dump() << '\n';
    return;
  }
  os << "m=" << report["m"].get<std::size_t>()
     << " Δ=" << paren_list(report["delta"].get<std::vector<std::int64_t>>())
     << " Δ*=";
  if (report["delta_star"].is_null()) {
    os << '-';
  } else {
    os << report["delta_star"].get<std::int64_t>();
  }
  os << " graphical=" << (report["graphical"].get<bool>() ? "true" : "false") << '\n';
}

json classify_report(const DegreeSequence& d) {
  json out;
  out["split"] = egdiff::is_split(d);
  out["threshold"] = egdiff::is_threshold(d);
  out["weakly_threshold"] = egdiff::is_weakly_threshold(d);
  out["splittance"] = egdiff::splittance(d);
  return out;
}

void print_classify(const DegreeSequence& d, bool as_json, std::ostream& os) {
  const json report = classify_report(d);
  if (as_json) {
    os << report.dump() << '\n';
    return;
  }
  auto flag = [&](const char* key) { return report[key].get<bool>() ? "true" : "false"; };
  os << "split=" << flag("split") << " threshold=" << flag("threshold")
     << " weakly_threshold=" << flag("weakly_threshold")
     << " splittance=" << report["splittance"].get<std::int64_t>() << '\n';
}

json matrix_to_json(const egdiff::IntMatrix& m, const std::string& kind) {
  json rows = json::array();
  for (std::size_t i = 1; i <= m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"kind", kind}, {"n", m.rows}, {"star_diagonal", true}, {"rows", rows}};
}

json graph_to_json(const egdiff::Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
  return json{{"n", g.n}, {"edges", edges}};
}

std::string graph_line(const egdiff::Graph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i > 0) out << ' ';
    out << g.edges[i].first << '-' << g.edges[i].second;
  }
  return out.str();
}

void require_graphical_input(const DegreeSequence& d) {
  if (!egdiff::is_graphical_full(d)) {
    throw std::invalid_argument("input sequence is not graphical");
  }
}

// ---- batch ----------------------------------------------------------------

json batch_line_report(const std::string& analysis, const DegreeSequence& d) {
  if (analysis == "delta") return delta_report(d);
  if (analysis == "classify") return classify_report(d);
  if (analysis == "complement") {
    return json{{"complement", egdiff::complement_sequence(d).terms()}};
  }
  return json{{"sigma", egdiff::sigma_prefix(d)}};
}

std::string batch_line_csv(const std::string& analysis, const json& report) {
  std::ostringstream out;
  out << "ok";
  if (analysis == "delta") {
    out << ",m=" << report["m"].get<std::size_t>()
        << ",delta=(" << join(report["delta"].get<std::vector<std::int64_t>>(), ' ') << ")"
        << ",delta_star=";
    if (report["delta_star"].is_null()) {
      out << '-';
    } else {
      out << report["delta_star"].get<std::int64_t>();
    }
    out << ",graphical=" << (report["graphical"].get<bool>() ? "true" : "false");
  } else if (analysis == "classify") {
    auto flag = [&](const char* key) { return report[key].get<bool>() ? "true" : "false"; };
    out << ",split=" << flag("split") << ",threshold=" << flag("threshold")
        << ",weakly_threshold=" << flag("weakly_threshold")
        << ",splittance=" << report["splittance"].get<std::int64_t>();
  } else if (analysis == "complement") {
    out << ",complement=(" << join(report["complement"].get<std::vector<std::int64_t>>(), ' ')
        << ")";
  } else {
    out << ",sigma=(" << join(report["sigma"].get<std::vector<std::int64_t>>(), ' ') << ")";
  }
  return out.str();
}

int run_batch(const std::string& path, const std::string& analysis, const Options& opts) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitParse;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string failure;
    json report;
    try {
      const DegreeSequence d = parse_sequence(line);
      if (analysis == "classify") require_graphical_input(d);
      report = batch_line_report(analysis, d);
    } catch (const std::exception& e) {
      failure = e.what();
      for (char& c : failure) {
        if (c == ',' || c == '\n') c = ';';
      }
    }
    if (opts.json) {
      json out{{"line", lineno}};
      if (failure.empty()) {
        out.update(report);
      } else {
        out["error"] = failure;
      }
      std::cout << out.dump() << '\n';
    } else if (failure.empty()) {
      std::cout << lineno << ',' << batch_line_csv(analysis, report) << '\n';
    } else {
      std::cout << lineno << ",error," << failure << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erdos-Gallai difference toolkit for degree sequences"};
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opts.json, "emit machine-readable JSON");
    sub->add_flag("--quiet", opts.quiet, "suppress notes on stderr");
    sub->add_option("--limit", opts.limit,
                    "size cap for enumeration-backed commands (default " +
                        std::to_string(kDefaultLimit) + ", or EGDIFF_LIMIT; ceiling " +
                        std::to_string(kHardLimitCeiling) + ")")
        ->check(CLI::Range(std::size_t{1}, kHardLimitCeiling));
    return sub;
  };

  std::string seq_text;
  std::string seq_text2;
  std::string matrix_kind = "F";
  std::string batch_path;
  std::string batch_analysis = "delta";

  CLI::App* delta = add_common(app.add_subcommand("delta", "m(d), Δ(d), Δ*, graphicality"));
  delta->add_option("sequence", seq_text, "degree sequence, e.g. 6,5,3,3,3,1,1,1,1")->required();

  CLI::App* classify = add_common(app.add_subcommand("classify", "split/threshold flags and splittance"));
  classify->add_option("sequence", seq_text)->required();

  CLI::App* matrix = add_common(app.add_subcommand("matrix", "corrected Ferrers diagram F or difference matrix M"));
  matrix->add_option("sequence", seq_text)->required();
  matrix->add_option("--which", matrix_kind, "F or M")->check(CLI::IsMember({"F", "M"}));

  CLI::App* sigma_cmd = add_common(app.add_subcommand("sigma", "row prefix sums of M(d)"));
  sigma_cmd->add_option("sequence", seq_text)->required();

  CLI::App* complement_cmd = add_common(app.add_subcommand("complement", "complementary degree sequence"));
  complement_cmd->add_option("sequence", seq_text)->required();

  CLI::App* dominance = add_common(app.add_subcommand("dominance", "majorization test d >= e"));
  dominance->add_option("d", seq_text)->required();
  dominance->add_option("e", seq_text2)->required();

  CLI::App* rao = add_common(app.add_subcommand("rao", "induced-subgraph order test e <= d"));
  rao->add_option("e", seq_text)->required();
  rao->add_option("d", seq_text2)->required();

  CLI::App* chain = add_common(app.add_subcommand("chain", "unit-transformation chain from d down to e"));
  chain->add_option("d", seq_text)->required();
  chain->add_option("e", seq_text2)->required();

  CLI::App* realize = add_common(app.add_subcommand("realize", "one realization as an edge list"));
  realize->add_option("sequence", seq_text)->required();

  CLI::App* enumerate = add_common(app.add_subcommand("enumerate", "all labeled realizations"));
  enumerate->add_option("sequence", seq_text)->required();

  CLI::App* forcible = add_common(app.add_subcommand("forcible", "forcibly (non)adjacent pairs"));
  forcible->add_option("sequence", seq_text)->required();

  CLI::App* batch = add_common(app.add_subcommand("batch", "run one analysis per input line"));
  batch->add_option("file", batch_path, "file with one sequence per line")->required();
  batch->add_option("analysis", batch_analysis, "delta|classify|complement|sigma")
      ->check(CLI::IsMember({"delta", "classify", "complement", "sigma"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (batch->parsed()) return run_batch(batch_path, batch_analysis, opts);

    DegreeSequence a;
    DegreeSequence b;
    try {
      a = parse_sequence(seq_text);
      b = parse_sequence(seq_text2);
    } catch (const parse_error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitParse;
    }

    if (delta->parsed()) {
      print_delta(a, opts.json, std::cout);
    } else if (classify->parsed()) {
      print_classify(a, opts.json, std::cout);
    } else if (matrix->parsed()) {
      if (matrix_kind == "F") {
        const auto f = egdiff::ferrers(a);
        std::cout << (opts.json ? matrix_to_json(f.entries, "F").dump() + "\n"
                                : egdiff::to_display(f));
      } else {
        const auto m = egdiff::difference_matrix(a);
        std::cout << (opts.json ? matrix_to_json(m.entries, "M").dump() + "\n"
                                : egdiff::to_display(m));
      }
    } else if (sigma_cmd->parsed()) {
      const auto prefix = egdiff::sigma_prefix(a);
      if (opts.json) {
        std::cout << json{{"sigma", prefix}}.dump() << '\n';
      } else {
        std::cout << join(prefix, ',') << '\n';
      }
    } else if (complement_cmd->parsed()) {
      const auto dbar = egdiff::complement_sequence(a);
      if (opts.json) {
        std::cout << json{{"complement", dbar.terms()}}.dump() << '\n';
      } else {
        std::cout << join(dbar.terms(), ',') << '\n';
      }
    } else if (dominance->parsed()) {
      const bool result = egdiff::dominates(a, b);
      if (opts.json) {
        std::cout << json{{"dominates", result}}.dump() << '\n';
      } else {
        std::cout << (result ? "true" : "false") << '\n';
      }
    } else if (rao->parsed()) {
      const bool result = egdiff::rao_leq(a, b, resolve_limit(opts));
      if (opts.json) {
        std::cout << json{{"rao_leq", result}}.dump() << '\n';
      } else {
        std::cout << (result ? "true" : "false") << '\n';
      }
    } else if (chain->parsed()) {
      const auto steps = egdiff::muirhead_chain(a, b);
      if (opts.json) {
        json out = json::array();
        for (const auto& step : steps) out.push_back(step.terms());
        std::cout << json{{"chain", out}}.dump() << '\n';
      } else {
        for (const auto& step : steps) std::cout << join(step.terms(), ',') << '\n';
      }
    } else if (realize->parsed()) {
      const auto g = egdiff::havel_hakimi(a);
      if (opts.json) {
        std::cout << graph_to_json(g).dump() << '\n';
      } else {
        std::cout << egdiff::to_edge_list(g);
      }
    } else if (enumerate->parsed()) {
      require_graphical_input(a);
      const auto graphs = egdiff::enumerate_labeled_realizations(a, resolve_limit(opts));
      if (opts.json) {
        json out = json::array();
        for (const auto& g : graphs) out.push_back(graph_to_json(g)["edges"]);
        std::cout << json{{"count", graphs.size()}, {"graphs", out}}.dump() << '\n';
      } else {
        std::cout << "count=" << graphs.size() << '\n';
        for (const auto& g : graphs) std::cout << graph_line(g) << '\n';
      }
    } else if (forcible->parsed()) {
      const auto pairs = egdiff::forcible_pairs(a, resolve_limit(opts));
      if (opts.json) {
        json out = json::array();
        for (const auto& p : pairs) {
          out.push_back(json{{"i", p.i},
                             {"j", p.j},
                             {"kind", p.kind == egdiff::ForcedKind::adjacent ? "adjacent"
                                                                             : "nonadjacent"},
                             {"trivial", p.trivial}});
        }
        std::cout << json{{"pairs", out}}.dump() << '\n';
      } else {
        for (const auto& p : pairs) {
          std::cout << p.i << ' ' << p.j << ' '
                    << (p.kind == egdiff::ForcedKind::adjacent ? "forced-adjacent"
                                                               : "forced-nonadjacent")
                    << (p.trivial ? " trivial" : "") << '\n';
        }
      }
    }
    return kExitOk;
  } catch (const egdiff::size_cap_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
}
