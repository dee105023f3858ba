#include "minkowski/recurrence.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace minkowski {

namespace {

constexpr mpfr_prec_t kAccumulatorGuardBits = 64;

PrecisionContext context_of(const RecurrenceCoefficients& rc) {
  return PrecisionContext(std::max(rc.digits, 10));
}

BigReal half(const PrecisionContext& ctx) { return BigReal::pow2(-1, ctx); }

}  // namespace

std::string to_string(RecurrenceMethod method) {
  switch (method) {
    case RecurrenceMethod::kStieltjes: return "stieltjes";
    case RecurrenceMethod::kChebyshev: return "chebyshev";
    case RecurrenceMethod::kExternal: return "external";
  }
  return "external";
}

RecurrenceMethod recurrence_method_from_string(const std::string& text) {
  if (text == "stieltjes") return RecurrenceMethod::kStieltjes;
  if (text == "chebyshev") return RecurrenceMethod::kChebyshev;
  if (text == "external") return RecurrenceMethod::kExternal;
  throw ParseError("unknown recurrence method '" + text + "'");
}

// ---------------------------------------------------------------- Stieltjes

RecurrenceCoefficients stieltjes(const DiscreteMeasure& mu, int n_max, const PrecisionContext& ctx) {
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  const std::size_t n = mu.size();
  if (static_cast<std::size_t>(n_max) >= n) {
    throw DegreeTooLarge("n_max = " + std::to_string(n_max) + " needs more than " + std::to_string(n) +
                         " nodes");
  }
  const mpfr_prec_t wide = ctx.bits() + kAccumulatorGuardBits;

  std::vector<BigReal> x;
  std::vector<BigReal> w;
  x.reserve(n);
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(BigReal::from_rational(mu.nodes()[i], ctx));
    w.push_back(BigReal::from_rational(mu.weights()[i], ctx));
  }
  // Values of pi_{k-1}, pi_k at the nodes.
  std::vector<BigReal> prev(n, BigReal(ctx));
  std::vector<BigReal> cur(n, BigReal(1, ctx));

  RecurrenceCoefficients rc;
  rc.method = RecurrenceMethod::kStieltjes;
  rc.source = mu.level() ? "empirical N=" + std::to_string(*mu.level()) : "custom measure";
  rc.digits = ctx.digits();

  BigReal norm(ctx), prev_norm(ctx), b(ctx), a2(ctx);
  BigReal s0(wide), s1(wide), sq(wide), tmp(wide);
  BigReal next(ctx), tmp_ctx(ctx);
  for (int k = 0; k <= n_max; ++k) {
    mpfr_set_zero(s0.get(), 1);
    mpfr_set_zero(s1.get(), 1);
    for (std::size_t i = 0; i < n; ++i) {
      mpfr_sqr(sq.get(), cur[i].get(), MPFR_RNDN);
      mpfr_mul(sq.get(), sq.get(), w[i].get(), MPFR_RNDN);
      mpfr_add(s0.get(), s0.get(), sq.get(), MPFR_RNDN);
      mpfr_mul(tmp.get(), sq.get(), x[i].get(), MPFR_RNDN);
      mpfr_add(s1.get(), s1.get(), tmp.get(), MPFR_RNDN);
    }
    mpfr_set(norm.get(), s0.get(), MPFR_RNDN);
    if (norm.sign() <= 0) {
      throw LostOrthogonality("squared norm of pi_" + std::to_string(k) + " is not positive");
    }
    mpfr_div(b.get(), s1.get(), s0.get(), MPFR_RNDN);
    rc.b.push_back(b);
    if (k > 0) {
      mpfr_div(a2.get(), norm.get(), prev_norm.get(), MPFR_RNDN);
      rc.a2.push_back(a2);
    } else {
      mpfr_set_zero(a2.get(), 1);
    }
    if (k == n_max) break;
    // pi_{k+1} = (x - b_k) pi_k - a_k^2 pi_{k-1}
    for (std::size_t i = 0; i < n; ++i) {
      mpfr_sub(tmp_ctx.get(), x[i].get(), b.get(), MPFR_RNDN);
      mpfr_mul(next.get(), tmp_ctx.get(), cur[i].get(), MPFR_RNDN);
      mpfr_mul(tmp_ctx.get(), a2.get(), prev[i].get(), MPFR_RNDN);
      mpfr_sub(next.get(), next.get(), tmp_ctx.get(), MPFR_RNDN);
      mpfr_swap(prev[i].get(), cur[i].get());
      mpfr_swap(cur[i].get(), next.get());
    }
    prev_norm = norm;
  }
  rc.trusted_prefix = rc.length();
  return rc;
}

// ---------------------------------------------------------------- Chebyshev

RecurrenceCoefficients chebyshev(const MomentVector& m, int n_max, const PrecisionContext& ctx) {
  return chebyshev(m, n_max, ctx, ChebyshevOptions{});
}

RecurrenceCoefficients chebyshev(const MomentVector& m, int n_max, const PrecisionContext& ctx,
                                 const ChebyshevOptions& options) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  const auto needed = static_cast<std::size_t>(2 * n_max + 1);
  if (m.size() < needed) {
    throw InsufficientMoments("n_max = " + std::to_string(n_max) + " needs m_0..m_" +
                              std::to_string(2 * n_max) + ", got " + std::to_string(m.size()) +
                              " moments");
  }
  if (m[0].sign() <= 0) throw InvalidArgument("m_0 must be positive");
  // Use one extra moment when present, which yields b_{n_max}.
  const std::size_t last = m.size() > needed ? needed : needed - 1;  // highest l

  RecurrenceCoefficients rc;
  rc.method = RecurrenceMethod::kChebyshev;
  rc.source = "moments " + to_string(m.provenance.source) + " K=" + std::to_string(m.provenance.size);
  rc.digits = ctx.digits();

  // Rolling rows sigma_{k-2,.}, sigma_{k-1,.}, sigma_{k,.} indexed by l.
  std::vector<BigReal> older(last + 1, BigReal(ctx));
  std::vector<BigReal> old(last + 1, BigReal(ctx));
  std::vector<BigReal> cur(last + 1, BigReal(ctx));
  for (std::size_t l = 0; l <= last; ++l) mpfr_set(old[l].get(), m[l].get(), MPFR_RNDN);

  BigReal b_prev = m[1] / m[0];
  BigReal a2_prev(ctx);  // a_0^2 := 0
  rc.b.push_back(b_prev);
  std::size_t stopped_at = 0;
  BigReal tmp(ctx), ratio_cur(ctx), ratio_old(ctx);
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n_max); ++k) {
    for (std::size_t l = k; l + k <= last; ++l) {
      mpfr_mul(tmp.get(), b_prev.get(), old[l].get(), MPFR_RNDN);
      mpfr_sub(cur[l].get(), old[l + 1].get(), tmp.get(), MPFR_RNDN);
      mpfr_mul(tmp.get(), a2_prev.get(), older[l].get(), MPFR_RNDN);
      mpfr_sub(cur[l].get(), cur[l].get(), tmp.get(), MPFR_RNDN);
    }
    if (cur[k].sign() <= 0) {
      stopped_at = k;
      break;
    }
    BigReal a2 = cur[k] / old[k - 1];
    rc.a2.push_back(a2);
    if (k + 1 + k <= last) {
      mpfr_div(ratio_cur.get(), cur[k + 1].get(), cur[k].get(), MPFR_RNDN);
      mpfr_div(ratio_old.get(), old[k].get(), old[k - 1].get(), MPFR_RNDN);
      BigReal b(ctx);
      mpfr_sub(b.get(), ratio_cur.get(), ratio_old.get(), MPFR_RNDN);
      rc.b.push_back(b);
      b_prev = std::move(b);
    }
    a2_prev = std::move(a2);
    std::swap(older, old);
    std::swap(old, cur);
  }

  rc.trusted_prefix = stopped_at > 0 ? std::min(stopped_at, rc.length()) : rc.length();
  if (options.symmetric) {
    rc.trusted_prefix = std::min(rc.trusted_prefix,
                                 trusted_prefix_scan(rc, pow10(options.tolerance_exponent, ctx)));
  }
  return rc;
}

// ---------------------------------------------------------------- evaluation

BigReal eval_monic(const RecurrenceCoefficients& rc, std::size_t n, const BigReal& x,
                   const PrecisionContext& ctx) {
  if (n >= rc.trusted_prefix) {
    throw DegreeTooLarge("P_" + std::to_string(n) + " needs trusted_prefix > " + std::to_string(n) +
                         ", have " + std::to_string(rc.trusted_prefix));
  }
  BigReal prev(ctx);
  BigReal cur(1, ctx);
  BigReal next(ctx), tmp(ctx);
  for (std::size_t k = 0; k < n; ++k) {
    mpfr_sub(tmp.get(), x.get(), rc.b[k].get(), MPFR_RNDN);
    mpfr_mul(next.get(), tmp.get(), cur.get(), MPFR_RNDN);
    if (k > 0) {
      mpfr_mul(tmp.get(), rc.a2[k - 1].get(), prev.get(), MPFR_RNDN);
      mpfr_sub(next.get(), next.get(), tmp.get(), MPFR_RNDN);
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return cur;
}

std::vector<BigReal> geometric_means(const RecurrenceCoefficients& rc) {
  if (rc.trusted_prefix < 1) throw InvalidArgument("geometric_means needs trusted_prefix >= 1");
  const PrecisionContext ctx = context_of(rc);
  std::vector<BigReal> out;
  BigReal log_sum(ctx);
  for (std::size_t k = 1; k < rc.trusted_prefix; ++k) {
    log_sum += log(rc.a2[k - 1]);
    out.push_back(exp(log_sum / static_cast<long>(k)));
  }
  return out;
}

std::vector<BigReal> jacobi_zeros(const RecurrenceCoefficients& rc, std::size_t n,
                                  const PrecisionContext& ctx) {
  if (n < 1) throw InvalidArgument("jacobi_zeros needs n >= 1");
  if (n >= rc.trusted_prefix) {
    throw DegreeTooLarge("zeros of P_" + std::to_string(n) + " need trusted_prefix > " +
                         std::to_string(n));
  }
  std::vector<BigReal> diag(rc.b.begin(), rc.b.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<BigReal> off;
  off.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) off.push_back(sqrt(rc.a2[k - 1]));
  return tridiag_eigenvalues(diag, off, ctx);
}

std::size_t trusted_prefix_scan(const RecurrenceCoefficients& rc, const BigReal& tol) {
  const std::size_t len = rc.length();
  if (len == 0) return 0;
  const BigReal center = BigReal::pow2(-1, PrecisionContext(std::max(rc.digits, 10)));
  for (std::size_t k = 0; k < len; ++k) {
    if (abs(rc.b[k] - center) > tol) return k;
    if (k > 0 && rc.a2[k - 1].sign() <= 0) return k;
  }
  return len;
}

std::size_t trusted_prefix_scan(const RecurrenceCoefficients& rc) {
  const PrecisionContext ctx = context_of(rc);
  return trusted_prefix_scan(rc, pow10(-20, ctx));
}

NevaiReport nevai_diagnostics(const RecurrenceCoefficients& rc) {
  if (rc.trusted_prefix < 5) throw InvalidArgument("nevai_diagnostics needs trusted_prefix >= 5");
  const PrecisionContext ctx = context_of(rc);
  const std::size_t count = rc.trusted_prefix - 1;
  NevaiReport report{
      .count = count,
      .running_mean = {},
      .mean = BigReal(ctx),
      .min = rc.a2[0],
      .max = rc.a2[0],
      .geometric_mean = BigReal(ctx),
      .max_b_deviation = BigReal(ctx),
      .capacity_squared = BigReal::pow2(-4, ctx),
      .nevai_limit = BigReal::pow2(-2, ctx),
  };
  BigReal sum(ctx);
  BigReal log_sum(ctx);
  for (std::size_t k = 1; k <= count; ++k) {
    const BigReal& a2 = rc.a2[k - 1];
    sum += a2;
    log_sum += log(a2);
    report.running_mean.push_back(sum / static_cast<long>(k));
    if (a2 < report.min) report.min = a2;
    if (a2 > report.max) report.max = a2;
  }
  report.mean = report.running_mean.back();
  report.geometric_mean = exp(log_sum / static_cast<long>(count));
  for (std::size_t k = 0; k <= count; ++k) {
    BigReal dev = abs(rc.b[k] - half(ctx));
    if (dev > report.max_b_deviation) report.max_b_deviation = dev;
  }
  return report;
}

// ---------------------------------------------------------------- I/O

void write_coefficients_csv(std::ostream& out, const RecurrenceCoefficients& rc) {
  out << "k,b_k,a2_k\n";
  const std::size_t rows = std::max(rc.b.size(), rc.a2.size() + 1);
  for (std::size_t k = 0; k < rows; ++k) {
    out << k << ',';
    if (k < rc.b.size()) out << rc.b[k].to_string();
    out << ',';
    if (k >= 1 && k - 1 < rc.a2.size()) out << rc.a2[k - 1].to_string();
    out << '\n';
  }
}

RecurrenceCoefficients read_coefficients_csv(std::istream& in, const PrecisionContext& ctx) {
  std::string line;
  if (!std::getline(in, line) || line != "k,b_k,a2_k") {
    throw ParseError("coefficient CSV must start with the header k,b_k,a2_k");
  }
  RecurrenceCoefficients rc;
  rc.method = RecurrenceMethod::kExternal;
  rc.source = "csv";
  rc.digits = ctx.digits();
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() == 2) fields.emplace_back();
    if (fields.size() != 3) throw ParseError("coefficient row '" + line + "' needs 3 fields");
    if (fields[0] != std::to_string(expected)) {
      throw ParseError("coefficient rows must be numbered 0, 1, 2, ... (row '" + line + "')");
    }
    if (!fields[1].empty()) {
      if (rc.b.size() != expected) throw ParseError("gap in b_k column at k = " + fields[0]);
      rc.b.push_back(BigReal::parse(fields[1], ctx));
    }
    if (expected >= 1 && !fields[2].empty()) {
      if (rc.a2.size() + 1 != expected) throw ParseError("gap in a2_k column at k = " + fields[0]);
      rc.a2.push_back(BigReal::parse(fields[2], ctx));
    }
    ++expected;
  }
  rc.trusted_prefix = trusted_prefix_scan(rc);
  return rc;
}

void write_coefficients_json(std::ostream& out, const RecurrenceCoefficients& rc) {
  nlohmann::ordered_json doc;
  doc["provenance"] = {
      {"method", to_string(rc.method)},
      {"source", rc.source},
      {"digits", rc.digits},
  };
  doc["trusted_prefix"] = rc.trusted_prefix;
  auto& b = doc["b"] = nlohmann::ordered_json::array();
  for (const BigReal& v : rc.b) b.push_back(v.to_string());
  auto& a2 = doc["a2"] = nlohmann::ordered_json::array();
  for (const BigReal& v : rc.a2) a2.push_back(v.to_string());
  out << doc.dump(2) << '\n';
}

RecurrenceCoefficients read_coefficients_json(std::istream& in) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    RecurrenceCoefficients rc;
    const auto& prov = doc.at("provenance");
    rc.method = recurrence_method_from_string(prov.at("method").get<std::string>());
    rc.source = prov.at("source").get<std::string>();
    rc.digits = prov.at("digits").get<int>();
    const PrecisionContext ctx(std::max(rc.digits, 10));
    for (const auto& v : doc.at("b")) rc.b.push_back(BigReal::parse(v.get<std::string>(), ctx));
    for (const auto& v : doc.at("a2")) rc.a2.push_back(BigReal::parse(v.get<std::string>(), ctx));
    rc.trusted_prefix = doc.at("trusted_prefix").get<std::size_t>();
    if (rc.trusted_prefix > rc.length()) throw ParseError("trusted_prefix exceeds the coefficient count");
    return rc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed coefficient file: ") + e.what());
  }
}

void write_plot_data(std::ostream& out, const std::string& value_name,
                     const std::vector<BigReal>& values, std::size_t first_index) {
  out << "k," << value_name << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) out << first_index + i << ',' << values[i].to_string() << '\n';
}

}  // namespace minkowski
