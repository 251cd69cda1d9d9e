#include "polyeuler/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyeuler/audit.hpp"
#include "polyeuler/classical.hpp"
#include "polyeuler/errors.hpp"
#include "polyeuler/multifamily.hpp"
#include "polyeuler/polyfamily.hpp"
#include "polyeuler/polylog.hpp"

namespace polyeuler::cli {

std::size_t default_order() {
  if (const char* env = std::getenv("POLYEULER_ORDER")) {
    try {
      std::size_t pos = 0;
      const std::string text(env);
      const unsigned long v = std::stoul(text, &pos);
      if (pos == text.size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed POLYEULER_ORDER='" << env << "'\n";
  }
  return 10;
}

namespace {

/// Runs CLI11 parsing and maps its errors onto our exit codes.
std::optional<int> parse_args(CLI::App& app, int argc, char** argv) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return std::nullopt;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeqArgs {
  std::string family;
  std::size_t order = 10;
  std::optional<int> k;
  std::optional<std::string> ks;
  std::optional<std::string> x;
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  std::optional<std::string> gamma;
  std::string convention = "genocchi";
  std::optional<unsigned> rows;
  std::optional<unsigned> cols;
  std::string format = "plain";
};

int require_k(const SeqArgs& a) {
  if (!a.k) throw UsageError(a.family + " requires --k");
  return *a.k;
}

KVector require_ks(const SeqArgs& a) {
  if (!a.ks) throw UsageError(a.family + " requires --ks");
  return KVector::parse(*a.ks);
}

Rational x_or_zero(const SeqArgs& a) { return a.x ? Rational::parse(*a.x) : Rational(0); }

std::optional<LogParams> log_params(const SeqArgs& a, bool need_gamma) {
  if (!a.alpha && !a.beta && !a.gamma) {
    if (need_gamma) throw UsageError(a.family + " requires --alpha, --beta and --gamma");
    return std::nullopt;
  }
  if (!a.alpha || !a.beta) throw UsageError("--alpha and --beta must be given together");
  LogParams p{Rational::parse(*a.alpha), Rational::parse(*a.beta), std::nullopt};
  if (a.gamma) p.gamma = Rational::parse(*a.gamma);
  if (need_gamma && !p.gamma) throw UsageError(a.family + " requires --gamma");
  return p;
}

std::vector<Rational> compute_sequence(const SeqArgs& a) {
  const std::string& f = a.family;
  if (f == "bernoulli") return bernoulli_numbers(a.order);
  if (f == "euler") {
    if (a.convention == "genocchi") return euler_numbers(a.order, EulerConvention::GenocchiType);
    if (a.convention == "secant") return euler_numbers(a.order, EulerConvention::SecantType);
    throw UsageError("unknown convention '" + a.convention + "' (expected genocchi or secant)");
  }
  if (f == "poly-bernoulli") return poly_bernoulli(require_k(a), x_or_zero(a), a.order);
  if (f == "poly-euler") return poly_euler(require_k(a), x_or_zero(a), a.order);
  if (f == "poly-euler-sasaki") return poly_euler_sasaki(require_k(a), a.order);
  if (f == "multi-poly-bernoulli") return multi_poly_bernoulli(require_ks(a), a.order);
  if (f == "multi-poly-euler") {
    const KVector ks = require_ks(a);
    const auto params = log_params(a, false);
    if (!params) return multi_poly_euler(ks, x_or_zero(a), a.order);
    if (params->gamma) {
      if (ks.depth() != 1) throw UsageError("--gamma needs a single index in --ks");
      return poly_euler_abc(ks[0], x_or_zero(a), *params, a.order);
    }
    return multi_poly_euler_xab(ks, x_or_zero(a), *params, a.order);
  }
  if (f == "poly-euler-abc") return poly_euler_abc(require_k(a), x_or_zero(a), *log_params(a, true), a.order);
  throw UsageError("unknown family '" + f + "'");
}

void print_sequence(const std::vector<Rational>& values, const std::string& format) {
  if (format == "plain") {
    for (std::size_t n = 0; n < values.size(); ++n) std::cout << n << '\t' << values[n] << '\n';
  } else if (format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n) std::cout << n << ',' << values[n] << '\n';
  } else {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < values.size(); ++n) out.push_back({{"n", n}, {"value", values[n].str()}});
    std::cout << out.dump() << '\n';
  }
}

void print_lonesum(unsigned rows, unsigned cols, std::uint64_t count, const std::string& format) {
  if (format == "plain") {
    std::cout << count << '\n';
  } else if (format == "csv") {
    std::cout << "rows,cols,count\n" << rows << ',' << cols << ',' << count << '\n';
  } else {
    nlohmann::ordered_json out{{"rows", rows}, {"cols", cols}, {"count", count}};
    std::cout << out.dump() << '\n';
  }
}

}  // namespace

int polyseq_main(int argc, char** argv) {
  CLI::App app{"Exact sequences of Bernoulli/Euler-type numbers and polynomials", "polyseq"};
  SeqArgs a;
  a.order = default_order();
  app.add_option("family", a.family,
                 "bernoulli | euler | poly-bernoulli | poly-euler | poly-euler-sasaki | multi-poly-bernoulli | "
                 "multi-poly-euler | poly-euler-abc | lonesum")
      ->required();
  app.add_option("--n", a.order, "Largest index (truncation order)");
  app.add_option("--k", a.k, "Polylogarithm index");
  app.add_option("--ks", a.ks, "Comma-separated polylogarithm indices, e.g. 2,1,-1");
  app.add_option("--x", a.x, "Rational argument x");
  app.add_option("--alpha", a.alpha, "ln a as a rational");
  app.add_option("--beta", a.beta, "ln b as a rational");
  app.add_option("--gamma", a.gamma, "ln c as a rational");
  app.add_option("--convention", a.convention, "Euler convention: genocchi | secant");
  app.add_option("--rows", a.rows, "Rows for lonesum");
  app.add_option("--cols", a.cols, "Columns for lonesum");
  app.add_option("--format", a.format, "plain | csv | json")->check(CLI::IsMember({"plain", "csv", "json"}));
  if (auto code = parse_args(app, argc, argv)) return *code;

  try {
    if (a.family == "lonesum") {
      if (!a.rows || !a.cols) throw UsageError("lonesum requires --rows and --cols");
      print_lonesum(*a.rows, *a.cols, lonesum_count(*a.rows, *a.cols), a.format);
      return kExitOk;
    }
    const auto values = compute_sequence(a);
    std::cerr << "# order=" << a.order << '\n';
    print_sequence(values, a.format);
  } catch (const UsageError& e) {
    std::cerr << "polyseq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "polyseq: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int polyverify_main(int argc, char** argv) {
  CLI::App app{"Audit one registered identity by exact coefficient comparison", "polyverify"};
  std::string identity;
  AuditConfig config;
  config.order = default_order();
  std::optional<std::string> variant;
  app.add_option("identity", identity, "Identity id, e.g. thm2 or eq2-power-sum")->required();
  app.add_option("--order", config.order, "Truncation order");
  app.add_option("--seed", config.seed, "Seed for sampled parameters");
  app.add_option("--variant", variant, "Run only this variant");
  if (auto code = parse_args(app, argc, argv)) return *code;

  std::vector<const IdentityCase*> cases;
  try {
    cases = find_cases(identity, variant ? std::optional<std::string_view>(*variant) : std::nullopt);
  } catch (const UnknownIdentity& e) {
    std::cerr << "polyverify: " << e.what() << "\nknown identities:";
    std::string last;
    for (const auto& c : registry()) {
      if (c.id != last) std::cerr << ' ' << c.id;
      last = c.id;
    }
    std::cerr << '\n';
    return kExitUsage;
  }
  std::cerr << "# order=" << config.order << " seed=" << config.seed << '\n';
  bool unexpected = false;
  for (const auto* c : cases) {
    const auto entry = run_identity(*c, config);
    std::cout << summary_line(entry) << '\n';
    if (!entry.notes.empty()) std::cout << "  " << entry.notes << '\n';
    unexpected = unexpected || entry.unexpected();
  }
  return unexpected ? kExitUnexpectedFailure : kExitOk;
}

int polyaudit_main(int argc, char** argv) {
  CLI::App app{"Run every registered identity and emit a JSON report", "polyaudit"};
  AuditConfig config;
  config.order = default_order();
  std::optional<std::string> out_path;
  app.add_option("--order", config.order, "Truncation order");
  app.add_option("--seed", config.seed, "Seed for sampled parameters");
  app.add_option("--out", out_path, "Report file (default: standard output)");
  if (auto code = parse_args(app, argc, argv)) return *code;

  std::ofstream file;
  if (out_path) {
    file.open(*out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "polyaudit: cannot write '" << *out_path << "'\n";
      return kExitUsage;
    }
  }
  const AuditReport report = run_all(config);
  std::ostream& summary = out_path ? std::cout : std::cerr;
  summary << "# order=" << report.order << " seed=" << report.seed << '\n';
  for (const auto& e : report.entries) summary << summary_line(e) << '\n';

  const std::string json = to_json(report);
  if (out_path) {
    file << json;
    file.close();
    if (!file) {
      std::cerr << "polyaudit: failed writing '" << *out_path << "'\n";
      return kExitUsage;
    }
  } else {
    std::cout << json;
  }
  return report.has_unexpected() ? kExitUnexpectedFailure : kExitOk;
}

}  // namespace polyeuler::cli
