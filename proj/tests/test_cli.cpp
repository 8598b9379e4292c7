#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"
#include "unimod/theta.hpp"

using namespace unimod;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("lattice reports") {
  const auto e8 = run({"lattice", "E8", "--deterministic"});
  CHECK(e8.code == cli::kOk);
  CHECK(contains(e8.out, "# unimod lattice E8 --deterministic\n"));
  CHECK(contains(e8.out, "# catalog: <builtin> version 1\n"));
  CHECK(contains(e8.out, "# assumptions: none\n"));
  CHECK(contains(e8.out, "E8       8     1    yes              2         240      240    240"));
  CHECK_FALSE(contains(e8.out, "wall time"));

  const auto timed = run({"lattice", "E8"});
  CHECK(contains(timed.out, "# wall time: "));

  const auto rank16 = run({"lattice", "--all-rank", "16", "--deterministic"});
  CHECK(rank16.code == cli::kOk);
  CHECK(contains(rank16.out, "E8^2"));
  CHECK(contains(rank16.out, "D16+"));
}

TEST_CASE("unknown lattice names exit 2 and list the valid names") {
  const auto r = run({"lattice", "Nope"});
  CHECK(r.code == cli::kUsage);
  CHECK(contains(r.err, "Nope"));
  CHECK(contains(r.err, "Leech"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"theta", "rank", "--lattices", "E8"}).code == cli::kUsage);  // --degree missing
  CHECK(run({"theta", "rank", "--lattices", "E8", "--degree", "1", "--bound", "3"}).code == cli::kUsage);
  CHECK(run({"param", "analyze", "D24[4]", "--m", "32"}).code == cli::kUsage);
  CHECK(run({"param", "analyze", "1[15", "--m", "16"}).code == cli::kUsage);
  CHECK(run({"theta", "table", "E8", "D16+", "--degree", "1"}).code == cli::kUsage);
}

TEST_CASE("help exits 0 and documents the grammar") {
  const auto r = run({"param", "--help"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "label    := \"1\" | \"D\" k"));
  CHECK(contains(r.out, "Arthur condition"));
}

TEST_CASE("capacity errors exit 3") {
  const auto r = run({"--max-vectors", "10", "lattice", "E8"});
  CHECK(r.code == cli::kCapacity);
  CHECK(contains(r.err, "--max-vectors"));
  CHECK(run({"theta", "rank", "--lattices", "E8", "--degree", "1", "--bound", "2", "--max-vectors", "10"}).code ==
        cli::kCapacity);
}

TEST_CASE("theta commands") {
  const auto rank = run({"theta", "rank", "--lattices", "E8^2,D16+", "--degree", "3", "--bound", "2"});
  CHECK(rank.code == cli::kOk);
  CHECK(contains(rank.out, "rank      1\n"));
  CHECK(contains(rank.out, "columns   68\n"));

  const auto none = run({"theta", "diff", "E8^2", "D16+", "--degree", "3", "--bound", "2", "--deterministic"});
  CHECK(none.code == cli::kOk);
  CHECK(contains(none.out, "witness  none"));

  const auto diff = run({"theta", "diff", "E8^2", "D16+", "--degree", "4", "--bound", "2", "--deterministic"});
  CHECK(diff.code == cli::kOk);
  CHECK(contains(diff.out, "[[2,-1,-1,-1],[-1,2,0,0],[-1,0,2,0],[-1,0,0,2]]"));
  CHECK(contains(diff.out, "7257600"));
  CHECK(contains(diff.out, "2096640"));

  const auto all = run({"theta", "rank", "--lattices", "all24", "--degree", "1", "--bound", "2"});
  CHECK(all.code == cli::kOk);
  CHECK(contains(all.out, "lattices  24\n"));
  CHECK(contains(all.out, "rank      2\n"));
}

TEST_CASE("theta table writes the TSV file") {
  const std::string path = "test_cli_table.tsv";
  const auto r = run({"theta", "table", "E8^2", "D16+", "--degree", "2", "--bound", "2", "--tsv", path});
  CHECK(r.code == cli::kOk);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == theta_table({builtin("E8^2"), builtin("D16+")}, 2, 2).to_tsv());
  std::remove(path.c_str());
}

TEST_CASE("deterministic output does not depend on the thread count") {
  const std::vector<std::string> base{"theta", "table", "E8^2", "D16+", "--degree", "3", "--bound", "2",
                                      "--deterministic"};
  auto with = [&](const std::string& t) {
    auto args = base;
    args.push_back("--threads");
    args.push_back(t);
    return run(args);
  };
  // Everything after the command echo must match.
  auto body = [](const Run& r) { return r.out.substr(r.out.find('\n')); };
  const auto one = with("1");
  CHECK(one.code == cli::kOk);
  CHECK(body(with("2")) == body(one));
  CHECK(body(with("8")) == body(one));
}

TEST_CASE("param commands") {
  const auto a = run({"param", "analyze", "D12[12]", "--m", "24", "--kv", "--deterministic"});
  CHECK(a.code == cli::kOk);
  CHECK(contains(a.out, "\ng=12\n"));
  CHECK(contains(a.out, "\nmultiplicity=2\n"));
  CHECK(contains(a.out, "\ncondition=satisfied\n"));
  CHECK(contains(a.out, "\nT={}\n"));
  CHECK(contains(a.out, "# assumptions: none\n"));

  const auto z = run({"param", "analyze", "D12!0[12]", "--m", "24", "--kv", "--deterministic"});
  CHECK(contains(z.out, "\ng=18\n"));
  CHECK(contains(z.out, "# assumption: "));

  const auto g8 = run({"param", "analyze", "1[7]+1", "--m", "8", "--kv", "--deterministic"});
  CHECK(contains(g8.out, "\ng=0\n"));

  const auto bad = run({"param", "validate", "1[16]", "--m", "16"});
  CHECK(bad.code == cli::kInvalid);
  CHECK(contains(bad.out, "valid        no"));

  const auto scan = run({"param", "scan", "--m", "16", "--max-weight", "12", "--deterministic"});
  CHECK(scan.code == cli::kOk);
  CHECK(contains(scan.out, "1[15]+1        1             8   0  TrivialBigD  yes"));
  CHECK(contains(scan.out, "D12[4]+1[7]+1  1             4   4  TrivialBigD  yes"));
  CHECK(contains(scan.out, "max g             4\n"));

  const auto scan24 = run({"param", "scan", "--m", "24", "--deterministic"});
  CHECK(contains(scan24.out, "max g (discrete)  12\n"));
}

TEST_CASE("epsilon tables and assumptions are reported") {
  const std::string path = "test_cli_eps.txt";
  {
    std::ofstream f(path);
    f << "D12 D16 -1\n";
  }
  const auto r = run({"param", "analyze", "D12[12]", "--m", "24", "--epsilon-table", path, "--deterministic"});
  CHECK(r.code == cli::kOk);
  std::remove(path.c_str());
  CHECK(run({"param", "analyze", "D12[12]", "--m", "24", "--epsilon-table", "/nonexistent/eps"}).code ==
        cli::kUsage);
  const auto assume = run({"param", "analyze", "D12[12]", "--m", "24", "--assume-central-nonvanishing",
                           "--deterministic"});
  CHECK(assume.code == cli::kOk);
}

TEST_CASE("report rendering") {
  cli::TextTable t({"a", "long"});
  t.add({"xyz", "1"});
  CHECK(t.render() == "a    long\nxyz  1\n");
  cli::RunReport r;
  r.command = "unimod x";
  r.assumptions = {"one"};
  r.warnings = {"w"};
  r.body = "body";
  r.seconds = 1.5;
  CHECK(r.render(true) == "# unimod x\n# assumption: one\n# warning: w\nbody\n");
  CHECK(r.render(false) == "# unimod x\n# assumption: one\n# warning: w\nbody\n# wall time: 1.500 s\n");
  CHECK(cli::shell_quote("D12[12]") == "'D12[12]'");
  CHECK(cli::shell_quote("E8") == "E8");
  CHECK(cli::shell_quote("it's") == "'it'\\''s'");
}
