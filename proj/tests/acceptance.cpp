// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are checked alongside exact results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "oracles.hpp"
#include "unimod/arthur.hpp"
#include "unimod/enumerate.hpp"
#include "unimod/lattice.hpp"
#include "unimod/param_parser.hpp"
#include "unimod/theta.hpp"

using namespace unimod;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

long root_count(const Lattice& l) { return long(count_by_norm(l, 2).at(2)); }

std::vector<Lattice> load(const std::vector<std::string>& names) {
  std::vector<Lattice> out;
  for (const auto& n : names) out.push_back(builtin(n));
  return out;
}

std::string cli_out(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

// Degree at which the rank-16 theta table first separates; filled by
// criterion 3 and compared against the parameter side in criterion 4.
long g16_theta = -1;

Outcome catalog_integrity() {
  Outcome o;
  const Catalog& cat = Catalog::builtin();
  o.require(cat.names().size() == 27, "expected 27 lattices");
  for (const auto& name : cat.names()) {
    const Lattice& l = cat.lattice(name);
    o.require(is_even_unimodular(l.gram), name + " is not even unimodular");
    if (l.rank() != 24) continue;
    // Niemeier: one Coxeter number h shared by all components, 24 h roots.
    const auto& spec = cat.spec(name);
    long want = 0;
    if (spec.scale == 1) {
      const int h = spec.components.front().coxeter_number();
      for (const auto& c : spec.components) o.require(c.coxeter_number() == h, name + " mixed Coxeter numbers");
      want = 24L * h;
    }
    o.require(root_count(l) == want, name + " root count");
  }
  o.require(root_count(cat.lattice("Leech")) == 0, "Leech has roots");
  o.require(cat.resolve("E8^3") == "Niemeier(E8^3)", "E8^3 alias");
  o.require(cat.names_of_rank(24).size() == 24, "24 rank-24 entries");
  return o;
}

Outcome g8() {
  Outcome o;
  o.require(theta_rank({builtin("E8")}, 0, 2) == 1, "degree-0 rank");
  int code = 0;
  const std::string out = cli_out({"param", "analyze", "1[7]+1", "--m", "8", "--kv", "--deterministic"}, code);
  o.require(code == 0, "param analyze exit code");
  o.require(out.find("\ng=0\n") != std::string::npos, "g != 0");
  return o;
}

Outcome g16_theta_side() {
  Outcome o;
  const auto pair = load({"E8^2", "D16+"});
  for (std::size_t g = 1; g <= 3; ++g) {
    o.require(theta_rank(pair, g, 2) == 1, "rank at degree " + std::to_string(g) + " bound 2");
    o.require(!first_difference(pair[0], pair[1], g, 2), "witness at degree " + std::to_string(g));
  }
  for (std::size_t g = 1; g <= 2; ++g) o.require(theta_rank(pair, g, 4) == 1, "rank at degree " + std::to_string(g) + " bound 4");
  o.require(theta_rank(pair, 4, 2) == 2, "rank at degree 4");
  const auto w = first_difference(pair[0], pair[1], 4, 2);
  o.require(w.has_value(), "no witness at degree 4");
  if (w) {
    o.detail = "witness " + w->s.serialize() + ": " + w->first.get_str() + " vs " + w->second.get_str();
    if (o.pass) g16_theta = 4;
  }
  return o;
}

Outcome g16_parameter_side() {
  Outcome o;
  const auto list = enumerate_parameters(16, 12);
  std::vector<std::pair<std::string, long>> got;
  long max_g = -1;
  for (const auto& psi : list) {
    const auto g = g_of(psi);
    got.push_back({format(psi), g.g.value_or(-1)});
    max_g = std::max(max_g, g.g.value_or(-1));
  }
  o.require(got == std::vector<std::pair<std::string, long>>{{"1[15]+1", 0}, {"D12[4]+1[7]+1", 4}},
            "scan result");
  o.require(max_g == 4, "max g");
  o.require(max_g == g16_theta, "theta side disagrees");
  return o;
}

Outcome g24() {
  Outcome o;
  const auto a = analyze(parse_parameter("D12[12]", 24));
  o.require(a.g.zeros_and_poles.empty(), "T not empty");
  o.require(a.g.g == 12, "g != 12");
  o.require(a.multiplicity == Multiplicity::Two, "multiplicity != 2");
  o.require(a.condition.status == ArthurCondition::Status::Satisfied, "condition");
  const auto z = analyze(parse_parameter("D12!0[12]", 24));
  o.require(z.g.g == 18, "forced zero g != 18");

  const auto all = load(Catalog::builtin().names_of_rank(24));
  const std::size_t r1 = theta_rank(all, 1, 4);
  const std::size_t r2 = theta_rank(all, 2, 2);
  o.require(r1 == 2, "rank at degree 1 bound 4");
  o.require(r2 >= r1, "rank decreased");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("ranks ") + std::to_string(r1) + ", " + std::to_string(r2);
  return o;
}

Outcome main_theorem() {
  Outcome o;
  std::size_t checked = 0;
  for (int m : {8, 16, 24, 32})
    for (const auto& psi : enumerate_parameters(m, 22)) {
      const std::string name = format(psi) + " (m=" + std::to_string(m) + ")";
      const auto g = g_of(psi);
      if (!g.g) {
        o.require(false, name + ": g unknown");
        continue;
      }
      ++checked;
      if (g.t_star) o.require(m / 2 - *g.t_star >= 0, name + ": t* > m/2");
      o.require(*g.g <= 3 * m / 4, name + ": g > 3m/4");
      o.require(classify(psi).agrees(*g.g), name + ": classify disagrees");
    }
  o.require(g_of(parse_parameter("D16[16]", 32)).g == 16, "D16[16] g != 16");
  if (o.pass) o.detail = std::to_string(checked) + " parameters";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& [name, model] :
       {std::pair{std::string("E8"), oracle::e8(4)}, std::pair{std::string("Niemeier(A1^24)"), oracle::a1_24(4)}}) {
    const Lattice l = builtin(name);
    const auto idx = short_vectors(l, 4);
    std::map<std::pair<long, long>, std::map<long, std::uint64_t>> pairs;
    std::size_t columns = 0;
    for (std::size_t g = 1; g <= 2; ++g)
      for (const auto& s : enumerate_index_matrices(g, 4)) {
        std::uint64_t want = 0;
        if (g == 1) {
          auto it = model.by_norm.find(s(0, 0).get_si());
          want = it == model.by_norm.end() ? 0 : it->second.size();
        } else {
          const auto key = std::pair{s(0, 0).get_si(), s(1, 1).get_si()};
          if (!pairs.count(key)) pairs[key] = oracle::pair_counts(model, key.first, key.second);
          auto it = pairs[key].find(s(0, 1).get_si());
          want = it == pairs[key].end() ? 0 : it->second;
        }
        o.require(count_representations(l, s, idx) == want, name + " " + s.serialize());
        ++columns;
      }
    o.detail += (o.detail.empty() ? "" : ", ") + name + ": " + std::to_string(columns) + " columns";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto pair = load({"E8^2", "D16+"});
  std::string first;
  for (unsigned threads : {1u, 2u, 8u}) {
    EnumOptions opts;
    opts.threads = threads;
    const std::string tsv = theta_table(pair, 4, 2, opts).to_tsv();
    if (first.empty())
      first = tsv;
    else
      o.require(tsv == first, "table differs at " + std::to_string(threads) + " threads");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "catalog integrity", 60, catalog_integrity},
      {2, "g8 = 0 via theta and parameters", 1, g8},
      {3, "g16 = 4 via theta (E8^2 vs D16+)", 600, g16_theta_side},
      {4, "g16 = 4 via parameter scan", 1, g16_parameter_side},
      {5, "g24 = 12 via parameters, rank-24 theta window", 1800, g24},
      {6, "main-theorem property suite", 10, main_theorem},
      {7, "oracle equivalence on E8 and Niemeier(A1^24)", 300, oracle_equivalence},
      {8, "determinism across 1, 2 and 8 threads", 1800, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.require(false, "time limit " + std::to_string(int(c.limit_seconds)) + " s exceeded");
    failures += !o.pass;
    std::printf("criterion %d: %s  %s  [%.2f s]%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
