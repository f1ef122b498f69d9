// dsum: exact tableau-count sums, their high-precision asymptotic
// predictions, and the ratio/quadrature verification protocol.
//
// Every invocation prints a single JSON envelope on stdout (or raw CSV when
// requested); diagnostics go to stderr. Exit codes: 0 success, 2 usage,
// 3 resource budget, 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dsum/asymptotics.hpp"
#include "dsum/errors.hpp"
#include "dsum/partition.hpp"
#include "dsum/sums.hpp"
#include "dsum/tableaux.hpp"
#include "dsum/verify.hpp"
#include "dsum/version.hpp"

using json = nlohmann::ordered_json;
using namespace dsum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;
constexpr int kDigits = 40;

long default_precision() {
  if (const char* env = std::getenv("DSUM_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= kMinPrecision && v <= 1'000'000) return v;
    std::cerr << "warning: ignoring invalid DSUM_PRECISION='" << env << "'\n";
  }
  return kDefaultPrecision;
}

struct CommonOpts {
  long precision = default_precision();
  unsigned threads = 0;  // scheduling only; never part of the envelope
  double budget = 1e6;

  void attach(CLI::App* cmd) {
    cmd->add_option("--precision", precision, "working precision in bits")
        ->check(CLI::Range(static_cast<long>(kMinPrecision), 1'000'000L))
        ->capture_default_str();
    cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    cmd->add_option("--budget", budget, "max shapes an enumeration may visit")
        ->capture_default_str();
  }

  SumOptions sum_options() const { return SumOptions{budget, threads, 64}; }
};

class Emitter {
 public:
  Emitter(std::string command, long precision)
      : command_(std::move(command)),
        precision_(precision),
        start_(std::chrono::steady_clock::now()) {}

  json& params() { return params_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void emit(json result) const {
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
    json env;
    env["command"] = command_;
    env["parameters"] = params_;
    env["result"] = std::move(result);
    env["precision_bits"] = precision_;
    if (seed_) env["seed"] = *seed_;
    env["version"] = std::string(kVersion);
    env["wall_time_ms"] = ms;
    std::cout << env.dump(2) << "\n";
  }

 private:
  std::string command_;
  long precision_;
  json params_;
  std::optional<std::uint64_t> seed_;
  std::chrono::steady_clock::time_point start_;
};

json query_json(const SumQuery& q) {
  return json{{"d", q.d}, {"s", q.s}, {"alpha", q.alpha.literal}, {"m", q.m}};
}

std::vector<std::uint64_t> parse_m_list(const std::string& list, const std::string& range) {
  std::vector<std::uint64_t> ms;
  if (!list.empty()) {
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t comma = list.find(',', pos);
      std::string tok = list.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw std::invalid_argument("--m: empty entry in list");
      ms.push_back(std::stoull(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (!range.empty()) {
    // LO:HI:MULT, geometric
    std::size_t c1 = range.find(':');
    std::size_t c2 = range.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("--m-range must be LO:HI:MULT");
    std::uint64_t lo = std::stoull(range.substr(0, c1));
    std::uint64_t hi = std::stoull(range.substr(c1 + 1, c2 - c1 - 1));
    std::uint64_t mult = std::stoull(range.substr(c2 + 1));
    if (mult < 2) throw std::invalid_argument("--m-range: MULT must be >= 2");
    for (std::uint64_t m = lo; m <= hi; m *= mult) ms.push_back(m);
  }
  if (ms.empty()) throw std::invalid_argument("one of --m or --m-range is required");
  return ms;
}

int run_count(const std::string& shape_text, const std::string& route,
              const CommonOpts& opts) {
  Emitter out("count", opts.precision);
  out.params() = {{"shape", shape_text}, {"route", route}};
  Partition shape = Partition::parse(shape_text);
  json result;
  result["shape"] = shape.to_string();
  int exit_code = kExitOk;
  if (route == "all") {
    ExactCount hook = f_hook(shape);
    ExactCount frob = f_frobenius(shape);
    ExactCount rec = f_recursive(shape);
    result["values"] = {{"hook", hook.get_str()},
                        {"frobenius", frob.get_str()},
                        {"recursive", rec.get_str()}};
    bool agree = hook == frob && hook == rec;
    result["agree"] = agree;
    if (!agree) {
      std::cerr << "error: counting routes disagree\n";
      exit_code = kExitVerification;
    }
  } else {
    ExactCount value = route == "hook"        ? f_hook(shape)
                       : route == "frobenius" ? f_frobenius(shape)
                                              : f_recursive(shape);
    result["value"] = value.get_str();
  }
  out.emit(result);
  return exit_code;
}

int run_tsum(const SumQuery& q, const CommonOpts& opts) {
  Emitter out("tsum", opts.precision);
  out.params() = query_json(q);
  out.params()["budget"] = opts.budget;
  json result;
  result["query"] = query_json(q);
  if (q.alpha.is_integer) {
    result["path"] = "exact";
    result["value"] = t_sum_exact(q, opts.sum_options()).get_str();
  } else {
    Real v = t_sum_real(q, opts.precision, opts.sum_options());
    result["path"] = "real";
    result["value"] = v.to_string(kDigits);
    result["relative_error_bound"] = v.error_budget();
  }
  out.emit(result);
  return kExitOk;
}

int run_asym(const SumQuery& q, const CommonOpts& opts) {
  Emitter out("asym", opts.precision);
  out.params() = query_json(q);
  json result = t_asymptote(q, opts.precision).to_json(kDigits);
  result["query"] = query_json(q);
  out.emit(result);
  return kExitOk;
}

int run_ratio(const SumQuery& q_template, const std::string& m_list,
              const std::string& m_range, const std::string& format, bool assert_trend,
              const CommonOpts& opts) {
  auto ms = parse_m_list(m_list, m_range);
  RatioReport report = ratio_table(q_template, ms, opts.precision, opts.sum_options());

  if (format == "csv") {
    std::cout << report.to_csv();
  } else {
    Emitter out("ratio", opts.precision);
    out.params() = {{"d", q_template.d},
                    {"s", q_template.s},
                    {"alpha", q_template.alpha.literal},
                    {"m_values", ms},
                    {"assert_trend", assert_trend},
                    {"budget", opts.budget}};
    out.emit(report.to_json(kDigits));
  }
  if (assert_trend && !report.trend_decreasing) {
    std::cerr << "error: |ratio - 1| is not strictly decreasing\n";
    return kExitVerification;
  }
  return kExitOk;
}

int run_selberg(std::uint32_t d, std::uint32_t s, const Alpha& alpha,
                const std::string& mode, std::uint64_t samples, std::uint64_t seed,
                const CommonOpts& opts) {
  Emitter out("selberg", opts.precision);
  out.params() = {{"d", d}, {"s", s}, {"alpha", alpha.literal}, {"mode", mode}};
  json result;
  int exit_code = kExitOk;
  std::optional<Real> closed;
  if (mode == "closed" || mode == "both") {
    closed = selberg_constant(d, s, alpha, opts.precision);
    result["closed_form"] = closed->to_string(kDigits);
  }
  if (mode == "mc" || mode == "both") {
    out.params()["samples"] = samples;
    out.params()["seed"] = seed;
    out.set_seed(seed);
    QuadratureResult mc =
        quadrature_selberg(d, s, alpha, samples, seed, opts.precision, {opts.threads});
    result.update(mc.to_json(kDigits));
    if (closed) {
      double z = 0.0;
      Real diff = mc.estimate - *closed;
      if (mc.standard_error.is_zero()) {
        z = abs(diff).to_double() < 1e-30 ? 0.0 : std::numeric_limits<double>::infinity();
      } else {
        z = (diff / mc.standard_error).to_double();
      }
      result["z_score"] = z;
      if (!(std::abs(z) <= 4.0)) {
        std::cerr << "error: quadrature is " << z
                  << " standard errors from the closed form\n";
        exit_code = kExitVerification;
      }
    }
  }
  out.emit(result);
  return exit_code;
}

int run_enumerate(std::uint32_t d, std::uint32_t s, std::uint64_t m, bool count_only,
                  const CommonOpts& opts) {
  Emitter out("enumerate", opts.precision);
  out.params() = {
      {"d", d}, {"s", s}, {"m", m}, {"count_only", count_only}, {"budget", opts.budget}};
  json result;
  if (count_only) {
    result["count"] = family_count(s, m).get_str();
  } else {
    double estimate = count_partitions_atmost(m, s);
    if (!(estimate <= opts.budget))
      throw BudgetError("enumerate refused: estimated " + format_quantity(estimate) +
                            " shapes exceeds the budget of " + format_quantity(opts.budget),
                        estimate, opts.budget);
    json shapes = json::array();
    BlockFamilyEnumerator family(d, s, m);
    std::uint64_t count = 0;
    while (auto shape = family.next()) {
      shapes.push_back(shape->to_string());
      ++count;
    }
    result["count"] = count;
    result["shapes"] = std::move(shapes);
  }
  out.emit(result);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic tableau-count sums"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "standard tableau count of one shape");
  std::string shape_text;
  std::string route = "hook";
  CommonOpts count_opts;
  count->add_option("--shape", shape_text, "partition literal, e.g. [3,3,1,1]")->required();
  count->add_option("--route", route, "hook|frobenius|recursive|all")
      ->check(CLI::IsMember({"hook", "frobenius", "recursive", "all"}))
      ->capture_default_str();
  count_opts.attach(count);

  auto add_query = [](CLI::App* cmd, std::uint32_t& d, std::uint32_t& s,
                      std::string& alpha, std::uint64_t* m) {
    cmd->add_option("-d,--d", d, "block multiplicity")->required();
    cmd->add_option("-s,--s", s, "strip width (max parts of the base shape)")->required();
    cmd->add_option("-a,--alpha", alpha, "positive decimal exponent")->required();
    if (m) cmd->add_option("-m,--m", *m, "base size")->required();
  };

  auto* tsum = app.add_subcommand("tsum", "exact (or high-precision) sum value");
  std::uint32_t td = 1, ts = 1;
  std::string ta;
  std::uint64_t tm = 1;
  CommonOpts tsum_opts;
  add_query(tsum, td, ts, ta, &tm);
  tsum_opts.attach(tsum);

  auto* asym = app.add_subcommand("asym", "asymptotic prediction of the sum");
  std::uint32_t ad = 1, as = 1;
  std::string aa;
  std::uint64_t am = 1;
  CommonOpts asym_opts;
  add_query(asym, ad, as, aa, &am);
  asym_opts.attach(asym);

  auto* ratio = app.add_subcommand("ratio", "exact/prediction convergence table");
  std::uint32_t rd = 1, rs = 1;
  std::string ra, r_mlist, r_mrange, r_format = "json";
  bool r_assert = false;
  CommonOpts ratio_opts;
  add_query(ratio, rd, rs, ra, nullptr);
  ratio->add_option("--m", r_mlist, "comma-separated m values, strictly increasing");
  ratio->add_option("--m-range", r_mrange, "geometric range LO:HI:MULT");
  ratio->add_option("--format", r_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  ratio->add_flag("--assert-trend", r_assert, "exit 4 unless |ratio-1| strictly decreases");
  ratio_opts.attach(ratio);

  auto* selberg = app.add_subcommand("selberg", "limit constant: closed form and quadrature");
  std::uint32_t sd = 1, ss = 1;
  std::string sa, s_mode = "closed";
  std::uint64_t s_samples = 1'000'000, s_seed = 1;
  CommonOpts selberg_opts;
  add_query(selberg, sd, ss, sa, nullptr);
  selberg->add_option("--mode", s_mode, "closed|mc|both")
      ->check(CLI::IsMember({"closed", "mc", "both"}))
      ->capture_default_str();
  selberg->add_option("--samples", s_samples, "Monte-Carlo sample count")
      ->capture_default_str();
  selberg->add_option("--seed", s_seed, "Monte-Carlo seed")->capture_default_str();
  selberg_opts.attach(selberg);

  auto* enumerate = app.add_subcommand("enumerate", "dump the block family shapes");
  std::uint32_t ed = 1, es = 1;
  std::uint64_t em = 1;
  bool e_count_only = false;
  CommonOpts enum_opts;
  enumerate->add_option("-d,--d", ed, "block multiplicity")->required();
  enumerate->add_option("-s,--s", es, "strip width")->required();
  enumerate->add_option("-m,--m", em, "base size")->required();
  enumerate->add_flag("--count-only", e_count_only, "print the exact family size only");
  enum_opts.attach(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(count)) return run_count(shape_text, route, count_opts);
    if (app.got_subcommand(tsum))
      return run_tsum({td, ts, Alpha::parse(ta), tm}, tsum_opts);
    if (app.got_subcommand(asym))
      return run_asym({ad, as, Alpha::parse(aa), am}, asym_opts);
    if (app.got_subcommand(ratio))
      return run_ratio({rd, rs, Alpha::parse(ra), 1}, r_mlist, r_mrange, r_format,
                       r_assert, ratio_opts);
    if (app.got_subcommand(selberg))
      return run_selberg(sd, ss, Alpha::parse(sa), s_mode, s_samples, s_seed,
                         selberg_opts);
    if (app.got_subcommand(enumerate))
      return run_enumerate(ed, es, em, e_count_only, enum_opts);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
