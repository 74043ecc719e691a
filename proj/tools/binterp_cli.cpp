// Reproduction CLI: approximation errors, round-trip mapping errors and full
// table sweeps, written as CSV.

#include "binterp/harness/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

using namespace binterp;
using namespace binterp::harness;

struct Options {
  std::string fn = "f1";
  long n = 17;
  std::string method = "ppi";
  int degree = 3;
  int st = 3;
  double eps0 = 0.01;
  double eps1 = 1.0;
  long refine = 0;
  int table = 1;
  std::string out;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--fn", o.fn, "test function f1..f6")->required();
  cmd->add_option("--n", o.n, "points per axis")->required()->check(CLI::Range(2L, 1L << 20));
  cmd->add_option("--method", o.method, "dbi, ppi or pchip")
      ->check(CLI::IsMember({"dbi", "ppi", "pchip"}));
  cmd->add_option("--degree", o.degree, "target polynomial degree")->check(CLI::Range(1, 64));
  cmd->add_option("--st", o.st, "stencil policy 1|2|3")->check(CLI::Range(1, 3));
  cmd->add_option("--eps0", o.eps0, "bound relaxation without extremum")->check(CLI::NonNegativeNumber);
  cmd->add_option("--eps1", o.eps1, "bound relaxation with extremum")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", o.out, "output CSV path (default: stdout)");
}

ExperimentSpec to_spec(const Options& o) {
  ExperimentSpec spec;
  spec.fn = parse_function(o.fn);
  spec.n = o.n;
  spec.scheme = parse_scheme(o.method);
  spec.config.degree = o.degree;
  spec.config.policy = policy_from_int(o.st);
  spec.config.eps0 = o.eps0;
  spec.config.eps1 = o.eps1;
  spec.refine = o.refine;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data-bounded and positivity-preserving interpolation experiments"};
  app.require_subcommand(1);
  Options o;

  auto* approx = app.add_subcommand("approx", "L2 error of approximating a test function");
  add_common(approx, o);

  auto* roundtrip = app.add_subcommand("roundtrip", "mesh-to-mesh round-trip mapping error");
  add_common(roundtrip, o);
  roundtrip->add_option("--refine", o.refine, "points inserted per interval")
      ->check(CLI::IsMember({0L, 1L, 3L}));

  auto* table = app.add_subcommand("table", "full sweep behind a results table");
  table->add_option("--id", o.table, "table id 1..7")->required()->check(CLI::Range(1, 7));
  table->add_option("--out", o.out, "output CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<ResultRow> rows;
    if (*approx) {
      rows.push_back(run_approximation(to_spec(o)));
    } else if (*roundtrip) {
      rows.push_back(run_roundtrip(to_spec(o)));
    } else {
      rows = run_table(o.table);
    }

    if (o.out.empty()) {
      write_csv(std::cout, rows);
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + o.out);
      write_csv(file, rows);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
