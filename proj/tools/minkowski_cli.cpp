// Command-line front end: sequences, q values, moments, recurrence
// coefficients and their diagnostics.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minkowski/cache.hpp"
#include "minkowski/farey.hpp"
#include "minkowski/measure.hpp"
#include "minkowski/moments.hpp"
#include "minkowski/qfunc.hpp"
#include "minkowski/recurrence.hpp"

namespace fs = std::filesystem;
using namespace minkowski;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

using Parameters = std::vector<std::pair<std::string, std::string>>;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& bytes) {
  const auto pos = bytes.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && bytes[pos] == '{';
}

void write_manifest(const fs::path& out, const std::string& command, const Parameters& params,
                    int digits, double seconds) {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  auto& p = doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) p[key] = value;
  doc["tool_version"] = MINKOWSKI_VERSION;
  doc["digits"] = digits;
  doc["wall_time_seconds"] = seconds;
  write_file_atomically(out.string() + ".manifest.json", doc.dump(2) + "\n");
}

// Writes `bytes` to `out` plus its manifest, or to stdout when `out` is empty.
void emit(const std::string& out, const std::string& bytes, const std::string& command,
          const Parameters& params, int digits, const Stopwatch& clock) {
  if (out.empty()) {
    std::cout << bytes;
    return;
  }
  const fs::path path(out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_file_atomically(path, bytes);
  write_manifest(path, command, params, digits, clock.seconds());
}

std::string resolve_format(const std::string& format, const std::string& out) {
  if (!format.empty()) return format;
  return fs::path(out).extension() == ".json" ? "json" : "csv";
}

// Exact decimal expansion of a dyadic rational.
std::string dyadic_decimal(const DyadicValue& v) {
  const unsigned long j = v.exponent();
  mpz_class scaled = v.value().num();
  mpz_class five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, j);
  scaled *= five;
  std::string digits = scaled.get_str();
  if (digits.size() <= j) digits.insert(0, j + 1 - digits.size(), '0');
  if (j == 0) return digits;
  std::string out = digits.substr(0, digits.size() - j) + "." + digits.substr(digits.size() - j);
  return out;
}

std::string format_general(const BigReal& x, int digits) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Rg", digits, x.get()) < 0) return "nan";
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

// ---------------------------------------------------------------- seq

struct SeqArgs {
  int level = 1;
  std::string format;
  std::string out;
};

int run_seq(const SeqArgs& a) {
  Stopwatch clock;
  const MinkowskiSequence seq = minkowski_sequence(a.level);
  const std::string format = resolve_format(a.format, a.out);
  std::ostringstream buf;
  if (format == "json") {
    write_sequence_json(buf, seq);
  } else {
    write_sequence_csv(buf, seq);
  }
  emit(a.out, buf.str(), "seq", {{"N", std::to_string(a.level)}, {"format", format}}, 0, clock);
  return 0;
}

// ---------------------------------------------------------------- q

struct QArgs {
  std::string x;
  int digits = 50;
};

int run_q(const QArgs& a) {
  const bool decimal = a.x.find_first_of(".eE") != std::string::npos;
  if (!decimal) {
    const DyadicValue v = q_rational(Rational::parse(a.x));
    std::cout << v.value().to_string() << '\n' << dyadic_decimal(v) << '\n';
    return 0;
  }
  const PrecisionContext ctx(a.digits);
  const BigReal x = BigReal::parse(a.x, ctx);
  std::cout << format_general(q_real(x, ctx), a.digits) << '\n';
  return 0;
}

// ---------------------------------------------------------------- moments

struct MomentArgs {
  std::string variant = "A";
  int size = 500;
  int terms = 400;
  int digits = 400;
  std::string out;
  std::string cache_dir;
  bool no_cache = false;
  bool cond = false;
};

int run_moments(const MomentArgs& a) {
  Stopwatch clock;
  const PrecisionContext ctx(a.digits);
  const MomentSystem variant = a.variant == "B" ? MomentSystem::kB : MomentSystem::kA;
  const MomentProvenance provenance{
      a.variant == "B" ? MomentSource::kSystemB : MomentSource::kSystemA, a.size, a.terms, a.digits};
  const MomentCache cache(a.cache_dir.empty() ? default_cache_dir() : fs::path(a.cache_dir));

  std::optional<std::string> bytes;
  if (!a.no_cache) bytes = cache.lookup(provenance);
  const bool hit = bytes.has_value();
  if (!hit) {
    const MomentVector m = solve_moments({variant, a.size, a.terms}, ctx);
    if (a.no_cache) {
      std::ostringstream buf;
      write_moments_json(buf, m);
      bytes = buf.str();
    } else {
      bytes = cache.store(m);
    }
  }
  std::istringstream in(*bytes);
  const MomentVector m = read_moments_json(in, ctx);

  std::cout << "cache: " << (a.no_cache ? "disabled" : (hit ? "hit" : "miss")) << '\n';
  if (!a.no_cache) std::cout << "cache_file: " << cache.path_for(provenance).string() << '\n';
  std::cout << "m1: " << m[1].to_fixed(std::min(a.digits, 140)) << '\n';
  std::cout << "m1_nines: " << m1_accuracy_digits(m, ctx) << '\n';
  if (a.cond) {
    const LinearSystem sys = assemble_system(variant, a.size, a.terms, ctx);
    std::cout << "cond_inf: " << cond_inf(sys.matrix, ctx).to_string(6) << '\n';
  }
  if (!a.out.empty()) {
    emit(a.out, *bytes, "moments",
         {{"variant", a.variant},
          {"K", std::to_string(a.size)},
          {"terms", std::to_string(a.terms)},
          {"digits", std::to_string(a.digits)}},
         a.digits, clock);
  }
  return 0;
}

// ---------------------------------------------------------------- recur

struct RecurArgs {
  std::string method;
  int level = 0;
  std::string moments_file;
  int n_max = 40;
  int digits = 0;
  std::string format;
  std::string out;
};

int run_recur(const RecurArgs& a) {
  Stopwatch clock;
  Parameters params{{"method", a.method}};
  RecurrenceCoefficients rc;
  int digits = a.digits;
  if (a.method == "stieltjes") {
    if (a.level == 0) throw InvalidArgument("--method stieltjes needs --N");
    if (digits == 0) digits = 100;
    const PrecisionContext ctx(digits);
    rc = stieltjes(empirical_measure(a.level), a.n_max, ctx);
    params.emplace_back("N", std::to_string(a.level));
  } else {
    if (a.moments_file.empty()) throw InvalidArgument("--method chebyshev needs --moments-file");
    if (digits == 0) digits = 400;
    const PrecisionContext ctx(digits);
    std::istringstream in(read_file(a.moments_file));
    rc = chebyshev(read_moments_json(in, ctx), a.n_max, ctx);
    params.emplace_back("moments_file", a.moments_file);
  }
  const std::string format = resolve_format(a.format, a.out);
  params.emplace_back("n_max", std::to_string(a.n_max));
  params.emplace_back("digits", std::to_string(digits));
  params.emplace_back("format", format);

  std::ostringstream buf;
  if (format == "json") {
    write_coefficients_json(buf, rc);
  } else {
    write_coefficients_csv(buf, rc);
  }
  emit(a.out, buf.str(), "recur", params, digits, clock);
  if (!a.out.empty()) std::cout << "trusted_prefix: " << rc.trusted_prefix << '\n';
  return 0;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string coeffs_file;
  std::string report;
  std::vector<int> zeros;
  int digits = 100;
};

int run_analyze(const AnalyzeArgs& a) {
  Stopwatch clock;
  const std::string bytes = read_file(a.coeffs_file);
  std::istringstream in(bytes);
  RecurrenceCoefficients rc;
  if (looks_like_json(bytes)) {
    rc = read_coefficients_json(in);
  } else {
    rc = read_coefficients_csv(in, PrecisionContext(a.digits));
  }
  const PrecisionContext ctx(std::max(rc.digits, 10));

  const std::vector<BigReal> g = geometric_means(rc);
  const NevaiReport nevai = nevai_diagnostics(rc);
  std::vector<BigReal> a2(rc.a2.begin(), rc.a2.begin() + static_cast<std::ptrdiff_t>(nevai.count));

  nlohmann::ordered_json doc;
  doc["trusted_prefix"] = rc.trusted_prefix;
  doc["count"] = nevai.count;
  doc["arithmetic_mean"] = nevai.mean.to_string();
  doc["geometric_mean"] = nevai.geometric_mean.to_string();
  doc["min_a2"] = nevai.min.to_string();
  doc["max_a2"] = nevai.max.to_string();
  doc["max_b_deviation"] = nevai.max_b_deviation.to_string();
  doc["capacity_squared"] = nevai.capacity_squared.to_string();
  doc["nevai_limit"] = nevai.nevai_limit.to_string();
  auto& gj = doc["geometric_means"] = nlohmann::ordered_json::array();
  for (const BigReal& v : g) gj.push_back(v.to_string());
  auto& rj = doc["running_mean"] = nlohmann::ordered_json::array();
  for (const BigReal& v : nevai.running_mean) rj.push_back(v.to_string());
  auto& zj = doc["zeros"] = nlohmann::ordered_json::object();
  for (int n : a.zeros) {
    auto& list = zj[std::to_string(n)] = nlohmann::ordered_json::array();
    for (const BigReal& z : jacobi_zeros(rc, static_cast<std::size_t>(n), ctx)) list.push_back(z.to_string());
  }
  const std::string report = doc.dump(2) + "\n";

  Parameters params{{"coeffs_file", a.coeffs_file}, {"digits", std::to_string(a.digits)}};
  std::string zeros_text;
  for (int n : a.zeros) zeros_text += (zeros_text.empty() ? "" : ",") + std::to_string(n);
  params.emplace_back("zeros", zeros_text);

  if (a.report.empty()) {
    std::cout << report;
    return 0;
  }
  emit(a.report, report, "analyze", params, rc.digits, clock);
  const fs::path base = fs::path(a.report).replace_extension();
  std::ostringstream a2_plot;
  write_plot_data(a2_plot, "a2_k", a2, 1);
  write_file_atomically(base.string() + "-a2.csv", a2_plot.str());
  std::ostringstream g_plot;
  write_plot_data(g_plot, "g_k", g, 1);
  write_file_atomically(base.string() + "-g.csv", g_plot.str());
  std::cout << "count: " << nevai.count << '\n'
            << "arithmetic_mean: " << nevai.mean.to_string(25) << '\n'
            << "geometric_mean: " << nevai.geometric_mean.to_string(25) << '\n';
  return 0;
}

// ---------------------------------------------------------------- measure

struct MeasureArgs {
  int level = 1;
  std::string out;
};

int run_measure(const MeasureArgs& a) {
  Stopwatch clock;
  std::ostringstream buf;
  write_measure_csv(buf, empirical_measure(a.level));
  emit(a.out, buf.str(), "measure", {{"N", std::to_string(a.level)}}, 0, clock);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recurrence coefficients for the Minkowski question mark measure"};
  app.set_version_flag("--version", MINKOWSKI_VERSION);
  app.require_subcommand(1);

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Write the Minkowski sequence M_N");
  seq_cmd->add_option("--N", seq.level, "Level")->required();
  seq_cmd->add_option("--format", seq.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  seq_cmd->add_option("--out", seq.out, "Output file (stdout if omitted)");

  QArgs q;
  auto* q_cmd = app.add_subcommand("q", "Evaluate the question mark function");
  q_cmd->add_option("x", q.x, "p/q or a decimal in [0, 1]")->required();
  q_cmd->add_option("--digits", q.digits, "Decimal digits for real input");

  MomentArgs mom;
  auto* mom_cmd = app.add_subcommand("moments", "Solve a truncated moment system");
  mom_cmd->add_option("--variant", mom.variant, "A or B")->check(CLI::IsMember({"A", "B"}));
  mom_cmd->add_option("--K", mom.size, "System size");
  mom_cmd->add_option("--terms", mom.terms, "Series terms");
  mom_cmd->add_option("--digits", mom.digits, "Working precision");
  mom_cmd->add_option("--out", mom.out, "Copy of the moment file");
  mom_cmd->add_option("--cache-dir", mom.cache_dir, "Cache directory");
  mom_cmd->add_flag("--no-cache", mom.no_cache, "Bypass the cache");
  mom_cmd->add_flag("--cond", mom.cond, "Also print cond_inf of the matrix");

  RecurArgs rec;
  auto* rec_cmd = app.add_subcommand("recur", "Compute recurrence coefficients");
  rec_cmd->add_option("--method", rec.method, "stieltjes or chebyshev")
      ->required()
      ->check(CLI::IsMember({"stieltjes", "chebyshev"}));
  rec_cmd->add_option("--N", rec.level, "Level of the empirical measure");
  rec_cmd->add_option("--moments-file", rec.moments_file, "Moment file");
  rec_cmd->add_option("--n-max", rec.n_max, "Highest index");
  rec_cmd->add_option("--digits", rec.digits, "Working precision");
  rec_cmd->add_option("--format", rec.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  rec_cmd->add_option("--out", rec.out, "Output file (stdout if omitted)");

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "Geometric means, Nevai diagnostics and zeros");
  an_cmd->add_option("--coeffs-file", an.coeffs_file, "Coefficient file (CSV or JSON)")->required();
  an_cmd->add_option("--report", an.report, "Report file (stdout if omitted)");
  an_cmd->add_option("--zeros", an.zeros, "Degrees whose zeros are reported");
  an_cmd->add_option("--digits", an.digits, "Precision for CSV input");

  MeasureArgs meas;
  auto* meas_cmd = app.add_subcommand("measure", "Write the empirical measure q_N");
  meas_cmd->add_option("--N", meas.level, "Level")->required();
  meas_cmd->add_option("--out", meas.out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: UsageError: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*seq_cmd) return run_seq(seq);
    if (*q_cmd) return run_q(q);
    if (*mom_cmd) return run_moments(mom);
    if (*rec_cmd) return run_recur(rec);
    if (*an_cmd) return run_analyze(an);
    if (*meas_cmd) return run_measure(meas);
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return e.category() == ErrorCategory::kInput ? kExitUsage : kExitNumeric;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: IOError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
