#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobstat/checks.hpp"
#include "frobstat/cumulants.hpp"
#include "frobstat/curves.hpp"
#include "frobstat/exponential_family.hpp"
#include "frobstat/frobenius.hpp"
#include "frobstat/learning.hpp"
#include "frobstat/paracomplex.hpp"

namespace py = pybind11;
using namespace frobstat;

namespace {

py::array_t<double> tensor3_array(const Tensor3& t) {
  const int n = t.dim();
  py::array_t<double> out({n, n, n});
  auto view = out.mutable_unchecked<3>();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) view(a, b, c) = t(a, b, c);
  return out;
}

py::array_t<double> tensor4_array(const Tensor4& t) {
  const int n = t.dim();
  py::array_t<double> out({n, n, n, n});
  auto view = out.mutable_unchecked<4>();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) view(a, b, c, d) = t(a, b, c, d);
  return out;
}

py::array_t<double> dense_array(const DenseTensor& t) {
  std::vector<py::ssize_t> shape(t.rank(), t.dim());
  py::array_t<double> out(shape);
  std::copy(t.data().begin(), t.data().end(), out.mutable_data());
  return out;
}

Curve curve_from_py(const std::vector<double>& s, const std::vector<Vec>& points) {
  return Curve(s, points);
}

py::dict curve_dict(const Curve& c) {
  py::list s;
  py::list points;
  for (int i = 0; i < c.size(); ++i) {
    s.append(c.s[i]);
    points.append(c.points[i]);
  }
  py::dict d;
  d["s"] = std::move(s);
  d["points"] = std::move(points);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite exponential families: tensors, curvature, cumulants, learning";

  py::register_exception<Error>(m, "FrobstatError");

  py::class_<ExponentialFamily>(m, "ExponentialFamily")
      .def_readonly("omega_size", &ExponentialFamily::omega_size)
      .def_readonly("n", &ExponentialFamily::n)
      .def_readonly("stats", &ExponentialFamily::stats);

  py::class_<Curve>(m, "Curve")
      .def(py::init(&curve_from_py), py::arg("s"), py::arg("points"))
      .def_property_readonly("s", [](const Curve& c) { return c.s; })
      .def_property_readonly("points", [](const Curve& c) { return c.points; })
      .def("__len__", &Curve::size);

  m.def("build_family", &build_family, py::arg("omega_size"), py::arg("stats"));
  m.def("log_partition", &log_partition);
  m.def("density",
        [](const ExponentialFamily& f, const Vec& beta) { return density(f, beta).rho; });
  m.def("score_matrix", [](const ExponentialFamily& f, const Vec& beta) {
    return score_matrix(f, beta).d_ell;
  });
  m.def("fisher_metric", [](const ExponentialFamily& f, const Vec& beta) {
    const MetricTensor g = fisher_metric(f, beta);
    return py::make_tuple(g.g, g.g_inv);
  });
  m.def("skewness_tensor", [](const ExponentialFamily& f, const Vec& beta) {
    return tensor3_array(skewness_tensor(f, beta).t);
  });
  m.def("quartic_cumulant", [](const ExponentialFamily& f, const Vec& beta) {
    return tensor4_array(quartic_cumulant(f, beta).kappa4);
  });
  m.def("expectation_params", &expectation_params);
  m.def("invert_expectation", &invert_expectation, py::arg("family"), py::arg("eta"),
        py::arg("beta_init"));
  m.def("dual_potential", &dual_potential);
  m.def("kl_divergence", [](const Vec& p, const Vec& q) {
    return kl_divergence(ProbabilityVector(p), ProbabilityVector(q));
  });

  m.def("mixed_tensor", [](const ExponentialFamily& f, const Vec& beta) {
    return tensor3_array(mixed_tensor(fisher_metric(f, beta), skewness_tensor(f, beta)).t_bar);
  });
  m.def("circle_product", [](const ExponentialFamily& f, const Vec& beta, const Vec& u,
                             const Vec& v) {
    return circle_product(u, v, mixed_tensor(fisher_metric(f, beta), skewness_tensor(f, beta)));
  });
  m.def("associativity_residual", [](const ExponentialFamily& f, const Vec& beta) {
    return associativity_residual(fisher_metric(f, beta),
                                  mixed_tensor(fisher_metric(f, beta), skewness_tensor(f, beta)));
  });
  m.def("christoffels", [](const ExponentialFamily& f, const Vec& beta, double alpha) {
    return tensor3_array(christoffels(f, beta, alpha).gamma);
  });
  m.def("metric_compatibility_residual", &metric_compatibility_residual,
        py::arg("family"), py::arg("beta"), py::arg("alpha"), py::arg("h") = 1e-4);
  m.def("curvature", [](const ExponentialFamily& f, const Vec& beta, double alpha) {
    return tensor4_array(curvature(f, beta, alpha).r);
  });
  m.def("curvature_fd",
        [](const ExponentialFamily& f, const Vec& beta, double alpha, double h) {
          return tensor4_array(curvature_fd(f, beta, alpha, h).r);
        },
        py::arg("family"), py::arg("beta"), py::arg("alpha"), py::arg("h") = 1e-4);
  m.def("flatness_residual", &flatness_residual);
  m.def("wdvv_residual", [](const ExponentialFamily& f, const Vec& beta) {
    return wdvv_residual(fisher_metric(f, beta), skewness_tensor(f, beta));
  });
  m.def("potential_consistency", &potential_consistency, py::arg("family"),
        py::arg("beta"), py::arg("h") = 1e-3);
  m.def("hessian_consistency", &hessian_consistency, py::arg("family"), py::arg("beta"),
        py::arg("h") = 1e-4);

  m.def("gws_tensor", [](const ExponentialFamily& f, const Vec& beta, int order) {
    return dense_array(gws_tensor(f, beta, order).y);
  });
  m.def("gws_contract",
        [](const ExponentialFamily& f, const Vec& beta, int order,
           const std::vector<Vec>& vectors) {
          return gws_contract(gws_tensor(f, beta, order), vectors);
        });
  m.def("expansion_residual", &expansion_residual, py::arg("family"), py::arg("beta0"),
        py::arg("delta"), py::arg("order_max"));

  m.def("pc_mul", [](std::pair<double, double> a, std::pair<double, double> b) {
    const ParacomplexNumber r = pc_mul({a.first, a.second}, {b.first, b.second});
    return std::make_pair(r.re, r.im);
  });
  m.def("split", [](std::pair<double, double> x) {
    const ParaSplit s = split({x.first, x.second});
    return std::make_pair(s.plus, s.minus);
  });
  m.def("unsplit", [](std::pair<double, double> s) {
    const ParacomplexNumber x = unsplit({s.first, s.second});
    return std::make_pair(x.re, x.im);
  });

  m.def("e_geodesic", &e_geodesic, py::arg("family"), py::arg("beta0"), py::arg("beta1"),
        py::arg("steps") = 33);
  m.def("m_geodesic", &m_geodesic, py::arg("family"), py::arg("beta0"), py::arg("beta1"),
        py::arg("steps") = 33);
  m.def("geodesic_residual", &geodesic_residual);
  m.def("fiber_split", [](const Curve& a, const Curve& b) {
    SplitCurve sc = fiber_split(a, b);
    return py::make_tuple(sc.gamma_plus, sc.gamma_minus);
  });
  m.def("fiber_unsplit", [](const Curve& plus, const Curve& minus) {
    auto [a, b] = fiber_unsplit(SplitCurve{plus, minus});
    return py::make_tuple(a, b);
  });
  m.def("project_curve", &project_curve, py::arg("curve"), py::arg("family"),
        py::arg("p_ref"), py::arg("axes") = std::vector<int>{});
  m.def("intersection_count", [](const Curve& a, const Curve& b, double tol) {
    const IntersectionResult r = intersection_count(a, b, tol);
    py::dict d;
    d["count"] = r.count;
    d["coincident"] = r.coincident;
    return d;
  });

  m.def(
      "learn",
      [](const ExponentialFamily& f, const Vec& beta_init, const Vec& target,
         const std::string& method, double step, double tol, int max_iter) {
        const LearnMethod lm =
            method == "newton" ? LearnMethod::newton : LearnMethod::natural_gradient;
        const LearningTrace trace = learn(f, beta_init, target, lm, step, tol, max_iter);
        py::list iterates;
        for (const auto& it : trace.iterates)
          iterates.append(py::make_tuple(it.beta, it.kl));
        py::dict d;
        d["iterates"] = std::move(iterates);
        d["converged"] = trace.converged;
        d["beta_final"] = trace.beta_final;
        d["eta_target"] = trace.eta_target;
        d["intersections"] = trace.intersections;
        d["coincident"] = trace.coincident;
        d["gamma_plus"] = curve_dict(trace.gamma_plus);
        d["gamma_minus"] = curve_dict(trace.gamma_minus);
        d["gamma_minus_projected"] = curve_dict(trace.gamma_minus_projected);
        return d;
      },
      py::arg("family"), py::arg("beta_init"), py::arg("target"),
      py::arg("method") = "newton", py::arg("step") = 1.0, py::arg("tol") = 1e-12,
      py::arg("max_iter") = 50);

  m.def("run_check_suite", [](const ExponentialFamily& f, const Vec& beta) {
    const CheckReport report = run_check_suite(f, beta);
    py::list items;
    for (const CheckItem& item : report.items) {
      py::dict d;
      d["name"] = item.name;
      d["value"] = item.value;
      d["threshold"] = item.threshold;
      d["relation"] = item.relation;
      d["pass"] = item.passed;
      d["status"] = item.status;
      d["note"] = item.note;
      items.append(std::move(d));
    }
    py::dict out;
    out["checks"] = std::move(items);
    out["overall"] = report.overall;
    return out;
  });
}
