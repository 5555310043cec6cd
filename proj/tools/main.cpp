// Command-line front end: single verifications, grid sweeps, table
// generation, asymptotic comparisons, machine-readable reports.
//
// Exit codes: 0 success, 1 mathematical failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mordell/asympt.hpp"
#include "mordell/errors.hpp"
#include "mordell/identities.hpp"
#include "mordell/io.hpp"

namespace {

using namespace mordell;

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

bool parse_double_list(const std::string& text, std::vector<double>& out,
                       const char* flag) {
  for (const std::string& item : split_list(text)) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      std::cerr << "error: " << flag << ": '" << item
                << "' is not a real number\n";
      return false;
    }
  }
  return true;
}

bool parse_int_list(const std::string& text, std::vector<int>& out,
                    const char* flag) {
  for (const std::string& item : split_list(text)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      std::cerr << "error: " << flag << ": '" << item
                << "' is not an integer\n";
      return false;
    }
  }
  return true;
}

bool parse_complex_list(const std::string& text, std::vector<Complex>& out) {
  for (const std::string& item : split_list(text)) {
    auto v = io::parse_complex(item);
    if (!v) {
      std::cerr << "error: --z: '" << item
                << "' does not match the complex literal grammar a, bi, a+bi "
                   "or a-bi (no spaces)\n";
      return false;
    }
    out.push_back(*v);
  }
  return true;
}

struct VerifyOptions {
  std::string identity;
  std::string alphas = "1";
  std::string zs = "0";
  std::string ks = "0";
  std::string qs;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  double quad_rel_tol = 0.0;
  std::string format = "pretty";
  int parallelism = 1;
};

int run_verify(const VerifyOptions& opt) {
  identities::Identity id;
  if (!identities::identity_from_name(opt.identity, id)) {
    std::cerr << "error: unknown identity '" << opt.identity
              << "'; expected one of erf1, erf2, ram-theta, char-even, "
                 "char-odd, mrram-limit, h-transform, j-transform, exact-cor, "
                 "exact-neg, exact-full, ramtran-i, ramtran-iii\n";
    return kExitUsage;
  }
  std::vector<double> alphas;
  std::vector<Complex> zs;
  std::vector<int> ks, qs;
  if (!parse_double_list(opt.alphas, alphas, "--alpha")) return kExitUsage;
  if (!parse_complex_list(opt.zs, zs)) return kExitUsage;
  if (!parse_int_list(opt.ks, ks, "--k")) return kExitUsage;
  if (!opt.qs.empty() && !parse_int_list(opt.qs, qs, "--q")) return kExitUsage;
  if (qs.empty()) qs.push_back(id == identities::Identity::char_even ? 5 : 3);

  std::vector<identities::IdentityCase> jobs;
  for (double a : alphas)
    for (Complex z : zs)
      for (int k : ks)
        for (int q : qs) {
          identities::IdentityCase c;
          c.id = id;
          c.alpha = a;
          c.z = z;
          c.k = k;
          c.q = q;
          c.rel_tol = opt.rel_tol;
          c.abs_tol = opt.abs_tol;
          if (opt.quad_rel_tol > 0.0) c.cfg.rel_tol = opt.quad_rel_tol;
          jobs.push_back(c);
        }

  // every job validates before any evaluation starts
  for (const identities::IdentityCase& c : jobs) {
    try {
      c.validate();
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  std::vector<identities::VerificationRecord> records(jobs.size());
  int par = std::max(1, opt.parallelism);
  if (par == 1 || jobs.size() < 2) {
    for (std::size_t i = 0; i < jobs.size(); ++i)
      records[i] = identities::verify(jobs[i]);
  } else {
    std::size_t n = std::min<std::size_t>(par, jobs.size());
    std::vector<std::future<void>> futs;
    for (std::size_t w = 0; w < n; ++w)
      futs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < jobs.size(); i += n)
          records[i] = identities::verify(jobs[i]);
      }));
    for (auto& f : futs) f.get();
  }

  bool all_passed = true;
  if (opt.format == "csv") std::cout << io::verify_csv_header() << "\n";
  for (const auto& rec : records) {
    all_passed = all_passed && rec.passed;
    if (opt.format == "json")
      std::cout << io::to_json(rec) << "\n";
    else if (opt.format == "csv")
      std::cout << io::to_csv_row(rec) << "\n";
    else
      std::cout << io::to_pretty(rec);
    if (!rec.passed) {
      for (const auto& s : rec.sides)
        if (!s.error.empty())
          std::cerr << "side '" << s.label << "' failed: " << s.error << "\n";
    }
  }
  return all_passed ? kExitPass : kExitMathFail;
}

struct TableOptions {
  std::string table = "ramanujan-near";
  std::string ks = "1,2,3,4,5,6,7,8,9,10";
  std::string alphas = "0.0000009,0.000007,1.5,2.378,9361.79";
  std::string format = "csv";
  bool compare_golden = false;
  int parallelism = 1;
  double quad_rel_tol = 0.0;
};

int run_table(const TableOptions& opt) {
  if (opt.table != "ramanujan-near") {
    std::cerr << "error: unknown table '" << opt.table
              << "'; only 'ramanujan-near' is available\n";
    return kExitUsage;
  }
  std::vector<int> ks;
  std::vector<double> alphas;
  if (!parse_int_list(opt.ks, ks, "--k")) return kExitUsage;
  if (!parse_double_list(opt.alphas, alphas, "--alpha")) return kExitUsage;
  for (int k : ks)
    if (k < 0 || k > 12) {
      std::cerr << "error: --k: k must lie in [0, 12]\n";
      return kExitUsage;
    }
  for (double a : alphas)
    if (!(a > 0.0)) {
      std::cerr << "error: --alpha: alpha must be positive\n";
      return kExitUsage;
    }

  quad::QuadConfig cfg;
  // six printed digits need ~1e-7; 1e-10 leaves headroom without fighting
  // the rounding floor of the high-degree integrands
  cfg.rel_tol = opt.quad_rel_tol > 0.0 ? opt.quad_rel_tol : 1e-10;
  cfg.max_refinements = 20;
  std::vector<asympt::Table1Cell> cells;
  try {
    cells = asympt::table1(ks, alphas, cfg, opt.parallelism);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto find_golden = [](const asympt::Table1Cell& cell)
      -> const asympt::Table1Golden* {
    for (const auto& g : asympt::table1_golden())
      if (g.k == cell.k && std::abs(g.alpha - cell.alpha) <=
                               1e-12 * std::max(1.0, std::abs(g.alpha)))
        return &g;
    return nullptr;
  };

  bool all_match = true;
  if (opt.format == "json" && !opt.compare_golden) {
    std::cout << io::table_json(cells) << "\n";
  } else if (opt.format == "pretty" && !opt.compare_golden) {
    for (const auto& c : cells)
      std::printf("k=%-3d alpha=%-12g lhs=%.9g rhs=%.9g\n", c.k, c.alpha,
                  c.lhs, c.rhs);
  } else {
    std::cout << io::table_csv_header(opt.compare_golden) << "\n";
    for (const auto& c : cells) {
      if (!opt.compare_golden) {
        std::cout << io::table_csv_row(c) << "\n";
        continue;
      }
      const asympt::Table1Golden* g = find_golden(c);
      if (!g) {
        std::cout << io::table_csv_row(c) << ",,,\n";
        continue;
      }
      bool lhs_ok = std::abs(c.lhs - g->lhs) <= asympt::print_tolerance_6sig(g->lhs);
      bool rhs_ok = std::abs(c.rhs - g->rhs) <= asympt::print_tolerance_6sig(g->rhs);
      all_match = all_match && lhs_ok && rhs_ok;
      std::cout << io::table_csv_row(c, *g, lhs_ok, rhs_ok) << "\n";
    }
  }
  return all_match ? kExitPass : kExitMathFail;
}

struct AsymptOptions {
  std::string series;
  double alpha = 0.0;
  std::string z = "0";
  int terms = 4;
  bool optimal = false;
  bool force = false;
  std::string format = "pretty";
  double quad_rel_tol = 0.0;
};

int run_asympt(const AsymptOptions& opt) {
  std::vector<Complex> zlist;
  if (!parse_complex_list(opt.z, zlist) || zlist.size() != 1) return kExitUsage;
  Complex z = zlist[0];
  if (!(opt.alpha > 0.0)) {
    std::cerr << "error: alpha must be positive\n";
    return kExitUsage;
  }
  quad::QuadConfig cfg;
  cfg.rel_tol = opt.quad_rel_tol > 0.0 ? opt.quad_rel_tol : 1e-13;
  cfg.abs_tol = 1e-18;
  cfg.max_refinements = 24;

  auto regime_gate = [&](bool violated, const char* message) {
    if (violated && !opt.force) {
      std::cerr << "warning: " << message << "\n"
                << "pass --force to evaluate anyway\n";
      return true;
    }
    if (violated)
      std::cerr << "warning: " << message << " (forced)\n";
    return false;
  };

  asympt::AsymptoticExpansion exp;
  Complex reference;
  try {
    if (opt.series == "i" || opt.series == "k" || opt.series == "theta") {
      if (regime_gate(opt.alpha > 1.0,
                      "the small-alpha expansions are documented for alpha <= 1"))
        return kExitUsage;
      if (opt.series == "i") {
        exp = opt.optimal ? asympt::i_series_optimal(z, opt.alpha)
                          : asympt::i_series(z, opt.alpha, opt.terms);
        reference = asympt::i_reference(z, opt.alpha, cfg);
      } else if (opt.series == "k") {
        exp = asympt::k_series(z, opt.alpha, opt.terms);
        reference = asympt::k_reference(z, opt.alpha, cfg);
      } else {
        exp = opt.optimal ? asympt::theta_series_optimal(z, opt.alpha)
                          : asympt::theta_series(z, opt.alpha, opt.terms);
        reference = asympt::theta_reference(z, opt.alpha, cfg);
      }
    } else if (opt.series == "oloa") {
      if (z.imag() != 0.0) {
        std::cerr << "error: the oloa series requires real z in (-1, 1)\n";
        return kExitUsage;
      }
      if (regime_gate(opt.alpha < 10.0,
                      "the oloa expansion is documented for alpha >= 10"))
        return kExitUsage;
      exp = asympt::oloa_general(z, opt.alpha, opt.terms);
      reference = asympt::oloa_reference(z.real(), opt.alpha, cfg);
    } else if (opt.series == "oloa-z0") {
      if (regime_gate(opt.alpha < 5.0,
                      "the oloa z=0 expansion is documented for alpha >= 5"))
        return kExitUsage;
      exp = asympt::oloa_z0(opt.alpha, std::min(opt.terms, 4));
      reference = asympt::oloa_z0_reference(opt.alpha, cfg);
    } else {
      std::cerr << "error: unknown series '" << opt.series
                << "'; expected i, k, theta, oloa or oloa-z0\n";
      return kExitUsage;
    }
  } catch (const DegenerateSeriesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFail;
  }

  Complex partial = exp.evaluate(opt.alpha);
  double gap = std::abs(partial - reference);

  if (opt.format == "json") {
    std::string out = "{\"series\":\"" + opt.series + "\"";
    out += ",\"alpha\":" + io::format_double(opt.alpha);
    out += ",\"z\":{\"re\":" + io::format_double(z.real()) +
           ",\"im\":" + io::format_double(z.imag()) + "}";
    out += ",\"terms\":[";
    for (std::size_t i = 0; i < exp.terms.size(); ++i) {
      const auto& t = exp.terms[i];
      if (i) out += ',';
      out += "{\"re\":" + io::format_double(t.coefficient.real());
      out += ",\"im\":" + io::format_double(t.coefficient.imag());
      out += ",\"exponent\":" + io::format_double(t.exponent);
      out += ",\"log_power\":" + std::to_string(t.log_power);
      out += ",\"value_re\":" + io::format_double(t.at(opt.alpha).real());
      out += ",\"value_im\":" + io::format_double(t.at(opt.alpha).imag());
      out += "}";
    }
    out += "],\"partial_sum\":{\"re\":" + io::format_double(partial.real()) +
           ",\"im\":" + io::format_double(partial.imag()) + "}";
    out += ",\"reference\":{\"re\":" + io::format_double(reference.real()) +
           ",\"im\":" + io::format_double(reference.imag()) + "}";
    out += ",\"gap\":" + io::format_double(gap);
    out += ",\"first_omitted\":" + io::format_double(exp.first_omitted_magnitude);
    out += ",\"truncation_index\":" + std::to_string(exp.truncation_index);
    out += "}";
    std::cout << out << "\n";
  } else {
    std::printf("series %s  alpha=%g  z=%s\n", opt.series.c_str(), opt.alpha,
                io::format_complex(z).c_str());
    std::printf("%-4s %-24s %-10s %s\n", "m", "coefficient", "exponent",
                "value(alpha)");
    for (std::size_t i = 0; i < exp.terms.size(); ++i) {
      const auto& t = exp.terms[i];
      std::string coeff = io::format_complex(t.coefficient);
      if (t.log_power == 1) coeff += " * log(alpha)";
      std::printf("%-4zu %-24s %-10g %s\n", i, coeff.c_str(), t.exponent,
                  io::format_complex(t.at(opt.alpha)).c_str());
    }
    std::printf("partial sum          = %s\n", io::format_complex(partial).c_str());
    std::printf("quadrature reference = %s\n", io::format_complex(reference).c_str());
    std::printf("gap                  = %g\n", gap);
    std::printf("first omitted        = %g  (truncation index %d)\n",
                exp.first_omitted_magnitude, exp.truncation_index);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of error-function, Mordell-integral "
               "and Xi-function transformations"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "evaluate every member of an identity and check residuals");
  verify->add_option("--identity", vopt.identity, "identity name")->required();
  verify->add_option("--alpha", vopt.alphas, "alpha value or comma list");
  verify->add_option("--z", vopt.zs, "complex z (a+bi literal) or comma list");
  verify->add_option("--k", vopt.ks, "k index or comma list");
  verify->add_option("--q", vopt.qs, "character modulus or comma list");
  verify->add_option("--rel-tol", vopt.rel_tol, "relative residual tolerance");
  verify->add_option("--abs-tol", vopt.abs_tol,
                     "absolute residual tolerance (overrides the default)");
  verify->add_option("--quad-rel-tol", vopt.quad_rel_tol,
                     "quadrature relative tolerance");
  verify->add_option("--format", vopt.format, "pretty | json | csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  verify->add_option("--parallelism", vopt.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);

  TableOptions topt;
  CLI::App* table = app.add_subcommand(
      "table", "generate the Ramanujan approximation table");
  table->add_option("--table", topt.table, "table name (ramanujan-near)");
  table->add_option("--k", topt.ks, "row indices, comma list");
  table->add_option("--alpha", topt.alphas, "columns, comma list");
  table->add_option("--format", topt.format, "csv | json | pretty")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  table->add_flag("--compare-paper", topt.compare_golden,
                  "diff against the embedded golden table; exit 1 on mismatch");
  table->add_option("--parallelism", topt.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  table->add_option("--quad-rel-tol", topt.quad_rel_tol,
                    "quadrature relative tolerance");

  AsymptOptions aopt;
  CLI::App* asympt_cmd = app.add_subcommand(
      "asympt", "compare an asymptotic expansion against quadrature");
  asympt_cmd->add_option("--series", aopt.series, "i | k | theta | oloa | oloa-z0")
      ->required();
  asympt_cmd->add_option("--alpha", aopt.alpha, "evaluation point")->required();
  asympt_cmd->add_option("--z", aopt.z, "complex z (a+bi literal)");
  asympt_cmd->add_option("--terms", aopt.terms, "number of series terms")
      ->check(CLI::PositiveNumber);
  asympt_cmd->add_flag("--optimal", aopt.optimal,
                       "truncate at the smallest-magnitude term");
  asympt_cmd->add_flag("--force", aopt.force, "evaluate outside the documented regime");
  asympt_cmd->add_option("--format", aopt.format, "pretty | json")
      ->check(CLI::IsMember({"pretty", "json"}));
  asympt_cmd->add_option("--quad-rel-tol", aopt.quad_rel_tol,
                         "quadrature relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(vopt);
    if (table->parsed()) return run_table(topt);
    if (asympt_cmd->parsed()) return run_asympt(aopt);
  } catch (const mordell::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFail;
  }
  return kExitUsage;
}
