// Python bindings. Exact values cross the boundary as "p/q" strings and
// multiprecision reals as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "minkowski/errors.hpp"
#include "minkowski/farey.hpp"
#include "minkowski/measure.hpp"
#include "minkowski/moments.hpp"
#include "minkowski/qfunc.hpp"
#include "minkowski/recurrence.hpp"

namespace py = pybind11;
using namespace minkowski;

namespace {

std::vector<std::string> strings(const std::vector<BigReal>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

MomentSystem system_from_string(const std::string& variant) {
  if (variant == "A") return MomentSystem::kA;
  if (variant == "B") return MomentSystem::kB;
  throw InvalidArgument("variant must be A or B, got " + variant);
}

py::dict coefficients_dict(const RecurrenceCoefficients& rc) {
  py::dict d;
  d["b"] = strings(rc.b);
  d["a2"] = strings(rc.a2);
  d["trusted_prefix"] = rc.trusted_prefix;
  d["method"] = to_string(rc.method);
  d["digits"] = rc.digits;
  return d;
}

RecurrenceCoefficients coefficients_from(const std::vector<std::string>& b, const std::vector<std::string>& a2,
                                         int digits) {
  const PrecisionContext ctx(digits);
  RecurrenceCoefficients rc;
  for (const auto& v : b) rc.b.push_back(BigReal::parse(v, ctx));
  for (const auto& v : a2) rc.a2.push_back(BigReal::parse(v, ctx));
  rc.digits = digits;
  rc.trusted_prefix = rc.length();
  return rc;
}

}  // namespace

PYBIND11_MODULE(minkowski_op, m) {
  m.doc() = "Minkowski question mark function and the recurrence coefficients of its measure";
  m.attr("__version__") = MINKOWSKI_VERSION;

  static py::exception<Error> numeric_error(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string message = e.kind() + ": " + e.what();
      if (e.category() == ErrorCategory::kNumeric) {
        py::set_error(numeric_error, message.c_str());
      } else {
        PyErr_SetString(PyExc_ValueError, message.c_str());
      }
    }
  });

  m.def(
      "q", [](const std::string& x) { return q_rational(Rational::parse(x)).value().to_string(); }, py::arg("x"),
      "Exact ?(x) for a rational x = \"p/q\" in [0, 1].");
  m.def(
      "q_real",
      [](const std::string& x, int digits) {
        const PrecisionContext ctx(digits);
        return q_real(BigReal::parse(x, ctx), ctx).to_string();
      },
      py::arg("x"), py::arg("digits") = 50);
  m.def(
      "minkowski_sequence",
      [](int level) {
        std::vector<std::string> out;
        for (const auto& r : minkowski_sequence(level).points) out.push_back(r.to_string());
        return out;
      },
      py::arg("level"), "Points of the level-N Minkowski sequence as \"p/q\" strings.");
  m.def(
      "solve_moments",
      [](const std::string& variant, int size, int terms, int digits) {
        const PrecisionContext ctx(digits);
        return strings(solve_moments({system_from_string(variant), size, terms}, ctx).values);
      },
      py::arg("variant") = "A", py::arg("size") = 500, py::arg("terms") = 400, py::arg("digits") = 400,
      "Moments m_0..m_K of the ?-measure.");
  m.def(
      "stieltjes",
      [](int level, int n_max, int digits) {
        const PrecisionContext ctx(digits);
        return coefficients_dict(stieltjes(empirical_measure(level), n_max, ctx));
      },
      py::arg("level"), py::arg("n_max"), py::arg("digits") = 100);
  m.def(
      "chebyshev",
      [](const std::vector<std::string>& moments, int n_max, int digits) {
        const PrecisionContext ctx(digits);
        MomentVector mv;
        for (const auto& v : moments) mv.values.push_back(BigReal::parse(v, ctx));
        mv.provenance = {MomentSource::kExternal, static_cast<int>(moments.size()) - 1, 0, digits};
        return coefficients_dict(chebyshev(mv, n_max, ctx));
      },
      py::arg("moments"), py::arg("n_max"), py::arg("digits") = 400);
  m.def(
      "geometric_means",
      [](const std::vector<std::string>& b, const std::vector<std::string>& a2, int digits) {
        return strings(geometric_means(coefficients_from(b, a2, digits)));
      },
      py::arg("b"), py::arg("a2"), py::arg("digits") = 100);
  m.def(
      "jacobi_zeros",
      [](const std::vector<std::string>& b, const std::vector<std::string>& a2, std::size_t n, int digits) {
        const PrecisionContext ctx(digits);
        return strings(jacobi_zeros(coefficients_from(b, a2, digits), n, ctx));
      },
      py::arg("b"), py::arg("a2"), py::arg("n"), py::arg("digits") = 100);
}
