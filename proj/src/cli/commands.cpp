#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "report.hpp"
#include "unimod/arthur.hpp"
#include "unimod/enumerate.hpp"
#include "unimod/errors.hpp"
#include "unimod/lattice.hpp"
#include "unimod/param_parser.hpp"
#include "unimod/theta.hpp"

namespace unimod::cli {

namespace {

constexpr const char* kGrammar = R"(Parameter grammar (whitespace is ignored):
  param    := summand ("+" summand)*
  summand  := label ("[" d "]")?        no brackets means d = 1
  label    := "1" | "D" k ("." i)? ("!0" | "!nz")?
"1" is the trivial representation, "Dk" the level-one eigenform of weight k
(".i" picks the i-th one when dim S_k > 1), "!0" / "!nz" force L(1/2) to
vanish / not vanish. Example: "D12[4]+1[7]+1".)";

struct Globals {
  std::string catalog_path;
  bool deterministic = false;
  std::optional<unsigned> threads;
  std::optional<std::size_t> max_vectors;
};

struct ThetaArgs {
  std::vector<std::string> names;
  std::string list;
  std::size_t degree = 1;
  long bound = 2;
  std::string tsv;
};

struct ParamArgs {
  std::string text;
  int m = 0;
  int max_weight = 22;
  std::string epsilon_table;
  bool assume_nonvanishing = false;
  bool kv = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string key_values(const std::vector<std::pair<std::string, std::string>>& rows, bool kv) {
  std::string out;
  if (kv) {
    for (const auto& [k, v] : rows) out += k + "=" + v + "\n";
    return out;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

std::string signed_text(long v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

class Session {
 public:
  Session(const Globals& globals, RunReport& report) : globals_(globals), report_(report) {
    if (globals.threads) options_.threads = *globals.threads;
    if (globals.max_vectors) options_.max_vectors = *globals.max_vectors;
  }

  const Catalog& catalog() {
    if (!globals_.catalog_path.empty() && !loaded_) loaded_ = std::make_unique<Catalog>(Catalog::load(globals_.catalog_path));
    const Catalog& cat = loaded_ ? *loaded_ : Catalog::builtin();
    report_.catalog = cat.source() + " version " + cat.version();
    return cat;
  }

  int lattice(const std::string& name, std::optional<std::size_t> all_rank) {
    const Catalog& cat = catalog();
    std::vector<std::string> names;
    if (all_rank) {
      names = cat.names_of_rank(*all_rank);
      if (names.empty()) throw std::invalid_argument("no catalog lattice has rank " + std::to_string(*all_rank));
    } else if (!name.empty()) {
      names.push_back(name);
    } else {
      throw std::invalid_argument("lattice: give a NAME or --all-rank N");
    }
    TextTable table({"lattice", "rank", "det", "even_unimodular", "min_norm", "kissing", "roots", "expected_roots"});
    for (const auto& n : names) {
      Lattice lat = cat.lattice(n);
      annotate(lat, options_);
      const LatticeSpec& spec = cat.spec(n);
      const long roots = lat.min_norm == 2 ? *lat.kissing_number : 0;
      table.add({n, std::to_string(lat.rank()), determinant(lat.gram.as_matrix()).get_str(),
                 is_even_unimodular(lat.gram) ? "yes" : "no", std::to_string(*lat.min_norm),
                 std::to_string(*lat.kissing_number), std::to_string(roots),
                 spec.expected_roots ? std::to_string(*spec.expected_roots) : "-"});
    }
    report_.body = table.render();
    return kOk;
  }

  std::vector<Lattice> lattices(const ThetaArgs& args) {
    const Catalog& cat = catalog();
    std::vector<std::string> tokens = args.names;
    std::stringstream list(args.list);
    for (std::string t; std::getline(list, t, ',');)
      if (!t.empty()) tokens.push_back(t);
    std::vector<Lattice> out;
    for (const auto& t : tokens) {
      if (t.size() > 3 && t.rfind("all", 0) == 0 && t.find_first_not_of("0123456789", 3) == std::string::npos) {
        for (const auto& n : cat.names_of_rank(std::stoul(t.substr(3)))) out.push_back(cat.lattice(n));
        continue;
      }
      Lattice lat = cat.lattice(t);
      lat.name = t;
      out.push_back(std::move(lat));
    }
    if (out.empty()) throw std::invalid_argument("no lattices given (use names or --lattices a,b or all24)");
    return out;
  }

  int theta(const std::string& mode, const ThetaArgs& args) {
    const std::vector<Lattice> lats = lattices(args);
    if (mode == "table") {
      const ThetaTable table = theta_table(lats, args.degree, args.bound, options_);
      const std::string tsv = table.to_tsv();
      if (!args.tsv.empty()) {
        std::ofstream f(args.tsv);
        if (!f) throw std::invalid_argument("cannot write '" + args.tsv + "'");
        f << tsv;
      }
      report_.body = tsv;
      return kOk;
    }
    if (mode == "rank") {
      const ThetaTable table = theta_table(lats, args.degree, args.bound, options_);
      if (!args.tsv.empty()) {
        std::ofstream f(args.tsv);
        if (!f) throw std::invalid_argument("cannot write '" + args.tsv + "'");
        f << table.to_tsv();
      }
      const std::size_t rank = exact_rank(table.matrix());
      report_.body = key_values({{"lattices", std::to_string(lats.size())},
                                 {"degree", std::to_string(args.degree)},
                                 {"bound", std::to_string(args.bound)},
                                 {"columns", std::to_string(table.columns.size())},
                                 {"rank", std::to_string(rank)}},
                                false);
      if (rank < lats.size())
        report_.body += "# note: a rank deficit inside a finite window is evidence of a kernel, not a proof\n";
      return kOk;
    }
    if (lats.size() != 2) throw std::invalid_argument("theta diff needs exactly two lattices");
    const auto diff = first_difference(lats[0], lats[1], args.degree, args.bound, options_);
    if (!diff) {
      report_.body = "witness  none (degree " + std::to_string(args.degree) + ", bound " +
                     std::to_string(args.bound) + ")\n";
      return kOk;
    }
    report_.body = key_values({{"witness", diff->s.serialize()},
                               {"count " + lats[0].name, diff->first.get_str()},
                               {"count " + lats[1].name, diff->second.get_str()}},
                              false);
    return kOk;
  }

  AnalysisOptions analysis_options(const ParamArgs& args) {
    AnalysisOptions opts;
    opts.assume_central_nonvanishing = args.assume_nonvanishing;
    if (!args.epsilon_table.empty()) opts.epsilon = parse_epsilon_table(read_file(args.epsilon_table));
    return opts;
  }

  int param(const std::string& mode, const ParamArgs& args) {
    const AnalysisOptions opts = analysis_options(args);
    if (mode == "scan") return scan(args, opts);
    const ArthurParameter psi = parse_parameter(args.text, args.m, &report_.warnings);
    if (mode == "validate") {
      const auto violations = validate(psi);
      std::vector<std::pair<std::string, std::string>> rows{{"parameter", format(psi)},
                                                             {"m", std::to_string(psi.m)},
                                                             {"valid", violations.empty() ? "yes" : "no"}};
      for (std::size_t i = 0; i < violations.size(); ++i)
        rows.emplace_back("violation." + std::to_string(i + 1), violations[i].message);
      report_.body = key_values(rows, args.kv);
      return violations.empty() ? kOk : kInvalid;
    }
    return analyze_one(psi, args, opts);
  }

  int analyze_one(const ArthurParameter& psi, const ParamArgs& args, const AnalysisOptions& opts) {
    const ParameterAnalysis a = analyze(psi, opts);
    std::vector<std::pair<std::string, std::string>> rows{{"parameter", format(psi)}, {"m", std::to_string(psi.m)}};
    if (!a.violations.empty()) {
      rows.emplace_back("valid", "no");
      for (std::size_t i = 0; i < a.violations.size(); ++i)
        rows.emplace_back("violation." + std::to_string(i + 1), a.violations[i].message);
      report_.body = key_values(rows, args.kv);
      return kInvalid;
    }
    report_.assumptions = a.assumptions;
    rows.emplace_back("valid", "yes");
    std::vector<std::string> i0;
    for (std::size_t i : a.i_zero) i0.push_back(std::to_string(i + 1));
    rows.emplace_back("I0", "{" + join(i0, ",") + "}");
    for (const auto& [i, c] : a.chi_values) rows.emplace_back("chi(s_" + std::to_string(i + 1) + ")", signed_text(c));
    std::string cond;
    switch (a.condition.status) {
      case ArthurCondition::Status::Satisfied: cond = "satisfied"; break;
      case ArthurCondition::Status::Violated: cond = "violated: " + a.condition.detail; break;
      case ArthurCondition::Status::Unknown: cond = "unknown: " + a.condition.detail; break;
    }
    rows.emplace_back("condition", cond);
    rows.emplace_back("multiplicity", to_string(a.multiplicity));
    for (const auto& [t, o] : a.profile.orders)
      rows.emplace_back("order(t=" + std::to_string(t) + ")", o.known() ? signed_text(*o.value) : "unknown");
    std::vector<std::string> ts;
    for (long t : a.g.zeros_and_poles) ts.push_back(std::to_string(t));
    rows.emplace_back("T", "{" + join(ts, ",") + "}");
    rows.emplace_back("t*", a.g.t_star ? std::to_string(*a.g.t_star) + (a.g.pole ? " (pole)" : " (zero)") : "-");
    rows.emplace_back("g", a.g.g ? std::to_string(*a.g.g) : "unknown: " + a.g.reason);
    if (a.classification) {
      rows.emplace_back("case", to_string(a.classification->tag));
      rows.emplace_back("case_bound", a.classification->description);
      if (a.g.g) rows.emplace_back("case_agrees", a.classification->agrees(*a.g.g) ? "yes" : "no");
    }
    report_.body = key_values(rows, args.kv);
    return kOk;
  }

  int scan(const ParamArgs& args, const AnalysisOptions& opts) {
    const auto params = enumerate_parameters(args.m, args.max_weight);
    TextTable table({"parameter", "multiplicity", "t*", "g", "case", "agrees"});
    std::optional<long> max_g, max_discrete;
    std::string kv;
    for (const auto& psi : params) {
      const ParameterAnalysis a = analyze(psi, opts);
      for (const auto& s : a.assumptions)
        if (std::find(report_.assumptions.begin(), report_.assumptions.end(), s) == report_.assumptions.end())
          report_.assumptions.push_back(s);
      const std::string g = a.g.g ? std::to_string(*a.g.g) : "unknown";
      const std::string t = a.g.t_star ? std::to_string(*a.g.t_star) : "-";
      const std::string tag = a.classification ? to_string(a.classification->tag) : "-";
      const std::string agrees = (a.g.g && a.classification) ? (a.classification->agrees(*a.g.g) ? "yes" : "no") : "-";
      table.add({format(psi), to_string(a.multiplicity), t, g, tag, agrees});
      kv += "param=" + format(psi) + " multiplicity=" + to_string(a.multiplicity) + " t_star=" + t + " g=" + g +
            " case=" + tag + " agrees=" + agrees + "\n";
      if (a.g.g) {
        max_g = std::max(max_g.value_or(*a.g.g), *a.g.g);
        if (a.multiplicity != Multiplicity::NotDiscrete) max_discrete = std::max(max_discrete.value_or(*a.g.g), *a.g.g);
      }
    }
    const std::string all = max_g ? std::to_string(*max_g) : "-";
    const std::string discrete = max_discrete ? std::to_string(*max_discrete) : "-";
    if (args.kv) {
      report_.body = kv + "count=" + std::to_string(params.size()) + "\nmax_g=" + all + "\nmax_g_discrete=" + discrete + "\n";
    } else {
      report_.body = table.render() + "\n" +
                     key_values({{"count", std::to_string(params.size())}, {"max g", all}, {"max g (discrete)", discrete}},
                                false) +
                     "# labels: trivial and level-one eigenforms of weight <= " + std::to_string(args.max_weight) +
                     "; higher-rank cuspidal labels are not enumerated\n";
    }
    return kOk;
  }

 private:
  const Globals& globals_;
  RunReport& report_;
  EnumOptions options_;
  std::unique_ptr<Catalog> loaded_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even unimodular lattices, theta series windows and Arthur parameters", "unimod"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--catalog", globals.catalog_path, "Lattice catalog file (default: built-in)");
  app.add_flag("--deterministic", globals.deterministic, "Omit the wall-time line");
  app.add_option("--threads", globals.threads, "Worker threads (default: THETA_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-vectors", globals.max_vectors, "Short-vector capacity (default: THETA_MAX_VECTORS or 1e8)")
      ->check(CLI::PositiveNumber);

  auto* lattice = app.add_subcommand("lattice", "Rank, determinant, minimum, kissing number and root count");
  std::string lattice_name;
  std::optional<std::size_t> all_rank;
  lattice->add_option("name", lattice_name, "Catalog name, e.g. E8, D16+, Niemeier(A1^24), Leech");
  lattice->add_option("--all-rank", all_rank, "Every catalog lattice of this rank");

  auto* theta = app.add_subcommand("theta", "Theta coefficient windows r_L(S)");
  theta->require_subcommand(1);
  ThetaArgs theta_args;
  std::string theta_mode;
  const std::pair<const char*, const char*> theta_modes[] = {
      {"table", "Counts r_L(S) for every index matrix S in the window"},
      {"rank", "Rank of the count matrix over Q"},
      {"diff", "First S where two lattices' counts differ"}};
  for (auto [mode, about] : theta_modes) {
    auto* sub = theta->add_subcommand(mode, about);
    sub->add_option("names", theta_args.names, "Lattice names");
    sub->add_option("--lattices", theta_args.list, "Comma-separated names; all24 means every rank-24 entry");
    sub->add_option("--degree", theta_args.degree, "Degree g")->required();
    sub->add_option("--bound", theta_args.bound, "Largest diagonal entry of S (even)");
    if (std::string(mode) != "diff") sub->add_option("--tsv", theta_args.tsv, "Also write the table to this file");
    sub->callback([&theta_mode, mode] { theta_mode = mode; });
  }

  auto* param = app.add_subcommand("param", "Standard parameters: validation, L-profile, g");
  param->require_subcommand(1);
  param->footer(kGrammar);
  ParamArgs param_args;
  std::string param_mode;
  const std::pair<const char*, const char*> param_modes[] = {
      {"validate", "Check dimension, infinitesimal character, mod-4 rule, distinct summands"},
      {"analyze", "I0, chi, Arthur condition, multiplicity, L-profile, T, t*, g and case"},
      {"scan", "Every valid parameter over the built-in labels, with g"}};
  for (auto [mode, about] : param_modes) {
    auto* sub = param->add_subcommand(mode, about);
    const bool scan = std::string(mode) == "scan";
    if (!scan) sub->add_option("parameter", param_args.text, "Parameter, e.g. \"D12[12]\"")->required();
    sub->add_option("--m", param_args.m, "Rank m (a multiple of 8)")->required();
    if (scan) sub->add_option("--max-weight", param_args.max_weight, "Largest eigenform weight (<= 30)");
    sub->add_option("--epsilon-table", param_args.epsilon_table, "File of 'labelA labelB +1|-1' lines");
    sub->add_flag("--assume-central-nonvanishing", param_args.assume_nonvanishing,
                  "Treat unresolved central values L(1/2) as nonzero");
    sub->add_flag("--kv", param_args.kv, "key=value output");
    sub->footer(kGrammar);
    sub->callback([&param_mode, mode] { param_mode = mode; });
  }

  std::vector<std::string> argv_storage{"unimod"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    CLI::App* deepest = &app;
    while (!deepest->get_subcommands().empty()) deepest = deepest->get_subcommands().front();
    out << deepest->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "unimod: " << e.what() << "\n";
    return kUsage;
  }

  RunReport report;
  report.command = "unimod";
  for (const auto& a : args) report.command += " " + shell_quote(a);
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    Session session(globals, report);
    if (lattice->parsed())
      code = session.lattice(lattice_name, all_rank);
    else if (theta->parsed())
      code = session.theta(theta_mode, theta_args);
    else
      code = session.param(param_mode, param_args);
  } catch (const UnknownName& e) {
    err << "unimod: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "unimod: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundTooSmall& e) {
    err << "unimod: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "unimod: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityExceeded& e) {
    err << "unimod: " << e.what() << "\n";
    return kCapacity;
  } catch (const LatticeInvariantError& e) {
    err << "unimod: " << e.what() << "\n";
    return kInvalid;
  } catch (const CatalogFormatError& e) {
    err << "unimod: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidParameter& e) {
    err << "unimod: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "unimod: " << e.what() << "\n";
    return kFailure;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << report.render(globals.deterministic);
  return code;
}

}  // namespace unimod::cli
