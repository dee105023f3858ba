#include "minkowski/moments.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>

namespace minkowski {

std::string to_string(MomentSource source) {
  switch (source) {
    case MomentSource::kSystemA: return "A";
    case MomentSource::kSystemB: return "B";
    case MomentSource::kDiscrete: return "discrete";
    case MomentSource::kExternal: return "external";
  }
  return "external";
}

MomentSource moment_source_from_string(const std::string& text) {
  if (text == "A") return MomentSource::kSystemA;
  if (text == "B") return MomentSource::kSystemB;
  if (text == "discrete") return MomentSource::kDiscrete;
  if (text == "external") return MomentSource::kExternal;
  throw ParseError("unknown moment source '" + text + "'");
}

// ---------------------------------------------------------------- series

BigReal c_series(int k, int terms, const PrecisionContext& ctx) {
  if (k < 0) throw InvalidArgument("c_series needs k >= 0");
  if (terms < 1) throw InvalidArgument("c_series needs at least one term");
  BigReal sum(ctx);
  BigReal term(ctx);
  // Smallest terms first.
  for (long n = terms; n >= 1; --n) {
    mpfr_ui_pow_ui(term.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
    mpfr_div_2ui(term.get(), term.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  return sum;
}

BigReal d_series(int k, int terms, const PrecisionContext& ctx) {
  return c_series(k, terms, ctx) * 2L - BigReal(1, ctx);
}

SeriesCache::SeriesCache(int terms, const PrecisionContext& ctx) : terms_(terms), ctx_(ctx) {
  if (terms < 1) throw InvalidArgument("series needs at least one term");
}

const BigReal& SeriesCache::c(int k) {
  auto it = values_.find(k);
  if (it == values_.end()) it = values_.emplace(k, c_series(k, terms_, ctx_)).first;
  return it->second;
}

// ---------------------------------------------------------------- systems

LinearSystem assemble_system(MomentSystem variant, int size, int terms,
                             const PrecisionContext& ctx) {
  if (size < 2) throw InvalidArgument("moment system size must be at least 2");
  SeriesCache series(terms, ctx);
  const auto K = static_cast<std::size_t>(size);
  LinearSystem sys{Matrix::identity(K, ctx), std::vector<BigReal>(K, BigReal(ctx))};

  // Coefficient of m_k in row s is sign(k) * e_{k+s} * C(k+s-1, k), where
  // e = c (variant A, sign (-1)^k) or e = d (variant B, sign +1).
  auto coefficient = [&](int index) -> BigReal {
    return variant == MomentSystem::kA ? series.c(index) : series.d(index);
  };

  mpz_class binom;
  BigReal entry(ctx);
  for (int s = 1; s <= size; ++s) {
    sys.rhs[s - 1] = coefficient(s);  // k = 0: C(s-1, 0) m_0 = 1
    for (int k = 1; k <= size; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + s - 1),
                   static_cast<unsigned long>(k));
      mpfr_set_z(entry.get(), binom.get_mpz_t(), MPFR_RNDN);
      mpfr_mul(entry.get(), entry.get(), coefficient(k + s).get(), MPFR_RNDN);
      const bool add = variant == MomentSystem::kA && k % 2 == 1;
      BigReal& cell = sys.matrix(s - 1, k - 1);
      if (add) {
        mpfr_add(cell.get(), cell.get(), entry.get(), MPFR_RNDN);
      } else {
        mpfr_sub(cell.get(), cell.get(), entry.get(), MPFR_RNDN);
      }
    }
  }
  return sys;
}

MomentVector solve_moments(const MomentSolveOptions& options, const PrecisionContext& ctx) {
  LinearSystem sys = assemble_system(options.variant, options.size, options.terms, ctx);
  std::vector<BigReal> unknowns = solve_dense(sys.matrix, sys.rhs, ctx);
  MomentVector out;
  out.values.reserve(unknowns.size() + 1);
  out.values.emplace_back(1, ctx);
  for (BigReal& v : unknowns) out.values.push_back(std::move(v));
  out.provenance = {options.variant == MomentSystem::kA ? MomentSource::kSystemA : MomentSource::kSystemB,
                    options.size, options.terms, ctx.digits()};
  return out;
}

// ---------------------------------------------------------------- checks

int m1_accuracy_digits(const MomentVector& m, const PrecisionContext& ctx) {
  if (m.size() < 2) throw InsufficientMoments("m_1 is missing");
  // Count the digits that agree with 1/2 written as 0.4999... or 0.5000...
  const std::string text = m[1].to_fixed(ctx.digits() + 5);
  if (text.rfind("0.4", 0) == 0) {
    std::size_t i = 3;
    while (i < text.size() && text[i] == '9') ++i;
    return static_cast<int>(i - 3);
  }
  if (text.rfind("0.5", 0) == 0) {
    std::size_t i = 3;
    while (i < text.size() && text[i] == '0') ++i;
    return static_cast<int>(i - 3);
  }
  return 0;
}

MomentReport validate_moments(const MomentVector& m, const BigReal& m1_tolerance,
                              const PrecisionContext& ctx) {
  MomentReport report{.hankel_determinants = {}, .m1_error = BigReal(ctx)};
  if (m.size() == 0) return report;
  report.m0_is_one = m[0] == BigReal(1, ctx);
  if (m.size() > 1) {
    report.m1_error = abs(m[1] - BigReal(1, ctx) / 2L);
    report.m1_within_tolerance = report.m1_error <= m1_tolerance;
  }
  report.nonincreasing = true;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k].sign() <= 0 || (k > 0 && m[k] > m[k - 1])) {
      report.nonincreasing = false;
      break;
    }
  }
  const std::size_t max_order = std::min<std::size_t>(6, (m.size() + 1) / 2);
  report.hankel_positive = max_order > 0;
  for (std::size_t n = 1; n <= max_order; ++n) {
    Matrix hankel(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) hankel(i, j) = m[i + j];
    }
    report.hankel_determinants.push_back(determinant(hankel, ctx));
    if (report.hankel_determinants.back().sign() <= 0) report.hankel_positive = false;
  }
  return report;
}

// ---------------------------------------------------------------- JSON

void write_moments_json(std::ostream& out, const MomentVector& m) {
  nlohmann::ordered_json doc;
  doc["provenance"] = {
      {"source", to_string(m.provenance.source)},
      {"size", m.provenance.size},
      {"series_terms", m.provenance.series_terms},
      {"digits", m.provenance.digits},
  };
  auto& values = doc["values"] = nlohmann::ordered_json::array();
  for (const BigReal& v : m.values) values.push_back(v.to_string());
  out << doc.dump(2) << '\n';
}

MomentVector read_moments_json(std::istream& in, const PrecisionContext& ctx) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    MomentVector m;
    const auto& prov = doc.at("provenance");
    m.provenance.source = moment_source_from_string(prov.at("source").get<std::string>());
    m.provenance.size = prov.at("size").get<int>();
    m.provenance.series_terms = prov.at("series_terms").get<int>();
    m.provenance.digits = prov.at("digits").get<int>();
    for (const auto& v : doc.at("values")) m.values.push_back(BigReal::parse(v.get<std::string>(), ctx));
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed moment file: ") + e.what());
  }
}

}  // namespace minkowski
