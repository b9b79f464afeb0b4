#include "qrv/classifier.hpp"
#include "qrv/cli.hpp"
#include "qrv/report_io.hpp"
#include "qrv/scenarios.hpp"
#include "qrv/version.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <optional>
#include <utility>

namespace py = pybind11;
using namespace qrv;

namespace {

ScalarFunction1 wrap1(std::function<double(double)> fn, std::string label) {
  return ScalarFunction1{std::move(fn), std::move(label)};
}

ScalarFunction2 wrap2(std::function<double(double, double)> fn, std::string label) {
  return ScalarFunction2{std::move(fn), std::move(label)};
}

std::optional<std::pair<Eigen::Index, Eigen::Index>> factor_dims_of(const State& psi) {
  if (!psi.factor_dims()) return std::nullopt;
  return std::make_pair(psi.factor_dims()->d1, psi.factor_dims()->d2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum vs classical random-variable laws of F(A, B)";
  m.attr("__version__") = kVersion;

  py::class_<Operator>(m, "Operator", "Dense operator on a finite-dimensional Hilbert space")
      .def(py::init<Matrix>(), py::arg("entries"))
      .def_static("identity", &Operator::identity, py::arg("dim"))
      .def_static("zero", &Operator::zero, py::arg("dim"))
      .def_static("diagonal", &Operator::diagonal, py::arg("diag"))
      .def_property_readonly("dim", &Operator::dim)
      .def_property_readonly("matrix", &Operator::matrix)
      .def("adjoint", &Operator::adjoint)
      .def("trace", &Operator::trace)
      .def("frobenius_norm", &Operator::frobenius_norm)
      .def("hermiticity_defect", &Operator::hermiticity_defect)
      .def("is_hermitian", &Operator::is_hermitian, py::arg("tol") = 1e-12)
      .def("is_projector", &Operator::is_projector, py::arg("tol") = 1e-10)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__rmul__", [](const Operator& op, Complex scalar) { return scalar * op; })
      .def("__repr__", [](const Operator& op) {
        return "<qrvlab.Operator dim=" + std::to_string(op.dim()) + ">";
      });

  py::class_<State>(m, "State", "Normalized pure state, optionally bipartite-tagged")
      .def(py::init([](Vector amplitudes, std::optional<std::pair<int, int>> factor_dims) {
             if (factor_dims) {
               return State(std::move(amplitudes),
                            FactorDims{factor_dims->first, factor_dims->second});
             }
             return State(std::move(amplitudes));
           }),
           py::arg("amplitudes"), py::arg("factor_dims") = std::nullopt)
      .def_static(
          "normalized",
          [](Vector amplitudes, std::optional<std::pair<int, int>> factor_dims) {
            State state = State::normalized(std::move(amplitudes));
            if (factor_dims) return state.with_factor_dims(factor_dims->first, factor_dims->second);
            return state;
          },
          py::arg("amplitudes"), py::arg("factor_dims") = std::nullopt)
      .def_property_readonly("dim", &State::dim)
      .def_property_readonly("amplitudes", &State::amplitudes)
      .def_property_readonly("factor_dims", &factor_dims_of)
      .def("with_factor_dims", &State::with_factor_dims, py::arg("d1"), py::arg("d2"))
      .def("__repr__", [](const State& psi) {
        return "<qrvlab.State dim=" + std::to_string(psi.dim()) + ">";
      });

  m.def("tensor_product",
        py::overload_cast<const Operator&, const Operator&>(&tensor_product), py::arg("a"),
        py::arg("b"));
  m.def("tensor_product", py::overload_cast<const State&, const State&>(&tensor_product),
        py::arg("chi"), py::arg("zeta"));
  m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
  m.def("commutator_norm", &commutator_norm, py::arg("a"), py::arg("b"));
  m.def("expectation", &expectation, py::arg("psi"), py::arg("a"));
  m.def("real_expectation", &real_expectation, py::arg("psi"), py::arg("a"));

  py::class_<DiscreteDistribution>(m, "DiscreteDistribution",
                                   "Finite law: ascending support, weights summing to one")
      .def_static("from_points", &DiscreteDistribution::from_points, py::arg("values"),
                  py::arg("weights"), py::arg("merge_tol") = 0.0)
      .def_static("point_mass", &DiscreteDistribution::point_mass, py::arg("value"))
      .def_property_readonly("values",
                             [](const DiscreteDistribution& d) { return d.values(); })
      .def_property_readonly("weights",
                             [](const DiscreteDistribution& d) { return d.weights(); })
      .def("__len__", &DiscreteDistribution::size)
      .def("total_mass", &DiscreteDistribution::total_mass)
      .def("moment", &DiscreteDistribution::moment, py::arg("n"))
      .def("mean", &DiscreteDistribution::mean)
      .def("variance", &DiscreteDistribution::variance)
      .def("__repr__", [](const DiscreteDistribution& d) {
        return "<qrvlab.DiscreteDistribution points=" + std::to_string(d.size()) + ">";
      });

  m.def("total_variation", &total_variation, py::arg("a"), py::arg("b"),
        py::arg("snap_tol") = -1.0);
  m.def("wasserstein1", &wasserstein1, py::arg("a"), py::arg("b"));
  m.def(
      "align_supports",
      [](const DiscreteDistribution& a, const DiscreteDistribution& b, double snap_tol) {
        const AlignedSupport s = align_supports(a, b, snap_tol);
        return py::make_tuple(s.values, s.weights_a, s.weights_b);
      },
      py::arg("a"), py::arg("b"), py::arg("snap_tol") = -1.0);

  py::class_<SpectralBranch>(m, "SpectralBranch")
      .def_readonly("eigenvalue", &SpectralBranch::eigenvalue)
      .def_readonly("projector", &SpectralBranch::projector)
      .def_readonly("multiplicity", &SpectralBranch::multiplicity);

  py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
      .def_property_readonly("dim", &SpectralDecomposition::dim)
      .def_property_readonly("branches",
                             [](const SpectralDecomposition& d) { return d.branches(); })
      .def_property_readonly("tolerance", &SpectralDecomposition::tolerance)
      .def("eigenvalues", &SpectralDecomposition::eigenvalues)
      .def("reconstruct", &SpectralDecomposition::reconstruct)
      .def("__len__", &SpectralDecomposition::size);

  m.def("decompose", &decompose, py::arg("a"), py::arg("eps_eig") = -1.0);
  m.def(
      "operator_function",
      [](const SpectralDecomposition& d, std::function<double(double)> g, std::string label) {
        return operator_function(d, wrap1(std::move(g), std::move(label)));
      },
      py::arg("decomposition"), py::arg("g"), py::arg("label") = "g");
  m.def(
      "joint_function_projectors",
      [](const SpectralDecomposition& da, const SpectralDecomposition& db,
         std::function<double(double, double)> f, std::string label, double eps_bin) {
        return joint_function_projectors(da, db, wrap2(std::move(f), std::move(label)), eps_bin);
      },
      py::arg("decomp_a"), py::arg("decomp_b"), py::arg("f"), py::arg("label") = "f",
      py::arg("eps_bin") = -1.0);

  m.def("observable_distribution", &observable_distribution, py::arg("psi"),
        py::arg("decomposition"));
  m.def("qm_distribution_of_function", &qm_distribution_of_function, py::arg("psi"), py::arg("c"),
        py::arg("eps_eig") = -1.0);

  py::enum_<Factor>(m, "Factor").value("First", Factor::First).value("Second", Factor::Second);
  m.def("marginal_distribution", &marginal_distribution, py::arg("psi"), py::arg("decomposition"),
        py::arg("which"));

  py::class_<SchmidtDecomposition>(m, "SchmidtDecomposition")
      .def_readonly("coefficients", &SchmidtDecomposition::coefficients)
      .def_readonly("left", &SchmidtDecomposition::left)
      .def_readonly("right", &SchmidtDecomposition::right)
      .def_readonly("rank", &SchmidtDecomposition::rank);
  m.def("schmidt", &schmidt, py::arg("psi"));

  m.def("qm_moment", &qm_moment, py::arg("psi"), py::arg("c"), py::arg("n"));
  m.def("qm_free_particle_variance", &qm_free_particle_variance, py::arg("psi"), py::arg("x"),
        py::arg("p"), py::arg("t"), py::arg("mass"));

  m.def(
      "pushforward",
      [](const DiscreteDistribution& rho, std::function<double(double)> h, std::string label,
         double eps_bin) { return pushforward(rho, wrap1(std::move(h), std::move(label)), eps_bin); },
      py::arg("rho"), py::arg("h"), py::arg("label") = "h", py::arg("eps_bin") = -1.0);
  m.def(
      "independent_combine",
      [](const DiscreteDistribution& rho, const DiscreteDistribution& pi,
         std::function<double(double, double)> f, std::string label, double eps_bin) {
        return independent_combine(rho, pi, wrap2(std::move(f), std::move(label)), eps_bin);
      },
      py::arg("rho"), py::arg("pi"), py::arg("f"), py::arg("label") = "f",
      py::arg("eps_bin") = -1.0);
  m.def(
      "dependent_combine",
      [](const DiscreteDistribution& rho, std::function<double(double)> g,
         std::function<double(double, double)> f, std::string label, double eps_bin) {
        return dependent_combine(rho, wrap1(std::move(g), "g"),
                                 wrap2(std::move(f), std::move(label)), eps_bin);
      },
      py::arg("rho"), py::arg("g"), py::arg("f"), py::arg("label") = "f",
      py::arg("eps_bin") = -1.0);
  m.def("rv_moment", &rv_moment, py::arg("sigma"), py::arg("n"));
  m.def("rv_variance", &rv_variance, py::arg("sigma"));
  m.def(
      "sample_oracle",
      [](const DiscreteDistribution& rho, const DiscreteDistribution& pi,
         std::function<double(double, double)> f, std::size_t n_samples, std::uint64_t seed,
         double eps_bin) {
        return sample_oracle(rho, pi, wrap2(std::move(f), "f"), n_samples, seed, eps_bin);
      },
      py::arg("rho"), py::arg("pi"), py::arg("f"), py::arg("n_samples"), py::arg("seed"),
      py::arg("eps_bin") = -1.0);

  py::enum_<CaseBranch>(m, "CaseBranch")
      .value("NonCommuting", CaseBranch::NonCommuting)
      .value("CommutingFunctional", CaseBranch::CommutingFunctional)
      .value("TensorFactorizable", CaseBranch::TensorFactorizable)
      .value("TensorEntangled", CaseBranch::TensorEntangled);
  py::enum_<PredictedRelation>(m, "PredictedRelation")
      .value("EqualExpected", PredictedRelation::EqualExpected)
      .value("GenericallyUnequal", PredictedRelation::GenericallyUnequal);
  m.def("predicted_relation", &predicted_relation, py::arg("branch"));

  py::class_<FunctionalTable>(m, "FunctionalTable")
      .def_readonly("pairs", &FunctionalTable::pairs)
      .def("lookup", &FunctionalTable::lookup, py::arg("a"), py::arg("tol"));

  py::class_<CaseLabel>(m, "CaseLabel")
      .def_readonly("branch", &CaseLabel::branch)
      .def_readonly("relation", &CaseLabel::relation)
      .def_readonly("dependence", &CaseLabel::dependence)
      .def_readonly("b_of_a", &CaseLabel::b_of_a)
      .def_readonly("schmidt_rank", &CaseLabel::schmidt_rank);

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("commutator_rel", &Tolerances::commutator_rel)
      .def_readwrite("eig", &Tolerances::eig)
      .def_readwrite("bin", &Tolerances::bin)
      .def_readwrite("snap", &Tolerances::snap)
      .def_readwrite("equal_w1", &Tolerances::equal_w1)
      .def_readwrite("functional", &Tolerances::functional)
      .def_readwrite("eigvec", &Tolerances::eigvec)
      .def_readwrite("c_check", &Tolerances::c_check);

  py::class_<ComparisonSettings>(m, "ComparisonSettings")
      .def(py::init<>())
      .def_readwrite("tol", &ComparisonSettings::tol)
      .def_readwrite("oracle_seed", &ComparisonSettings::oracle_seed)
      .def_readwrite("oracle_samples", &ComparisonSettings::oracle_samples);

  py::class_<OracleCheck>(m, "OracleCheck")
      .def_readonly("seed", &OracleCheck::seed)
      .def_readonly("samples", &OracleCheck::samples)
      .def_readonly("tv_vs_exact", &OracleCheck::tv_vs_exact);

  py::class_<ComparisonReport>(m, "ComparisonReport")
      .def_readonly("label", &ComparisonReport::label)
      .def_readonly("function_label", &ComparisonReport::function_label)
      .def_readonly("sigma_qm", &ComparisonReport::sigma_qm)
      .def_readonly("sigma_rv", &ComparisonReport::sigma_rv)
      .def_readonly("sigma_rv_independent", &ComparisonReport::sigma_rv_independent)
      .def_readonly("tv", &ComparisonReport::tv)
      .def_readonly("w1", &ComparisonReport::w1)
      .def_readonly("moments_qm", &ComparisonReport::moments_qm)
      .def_readonly("moments_rv", &ComparisonReport::moments_rv)
      .def_readonly("commutator_abs", &ComparisonReport::commutator_abs)
      .def_readonly("commutator_rel", &ComparisonReport::commutator_rel)
      .def_readonly("exceptional_equality", &ComparisonReport::exceptional_equality)
      .def_readonly("exceptional_reason", &ComparisonReport::exceptional_reason)
      .def_readonly("verdict_consistent", &ComparisonReport::verdict_consistent)
      .def_readonly("oracle", &ComparisonReport::oracle)
      .def_readonly("details", &ComparisonReport::details)
      .def("to_json",
           [](const ComparisonReport& report) { return report_to_json(report).dump(2); });

  m.def("classify", &classify, py::arg("a"), py::arg("b"), py::arg("psi"),
        py::arg("tol") = Tolerances{});
  m.def(
      "run_comparison",
      [](const Operator& a, const Operator& b, std::function<double(double, double)> f,
         const State& psi, const Operator& c, std::string label,
         const ComparisonSettings& settings) {
        return run_comparison(a, b, wrap2(std::move(f), std::move(label)), psi, c, settings);
      },
      py::arg("a"), py::arg("b"), py::arg("f"), py::arg("psi"), py::arg("c"),
      py::arg("label") = "f", py::arg("settings") = ComparisonSettings{});

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("id", &ScenarioConfig::id)
      .def_readwrite("dim", &ScenarioConfig::dim)
      .def_readwrite("t_over_m", &ScenarioConfig::t_over_m)
      .def_readwrite("alpha", &ScenarioConfig::alpha)
      .def_readwrite("squeeze", &ScenarioConfig::squeeze)
      .def_readwrite("rotation", &ScenarioConfig::rotation)
      .def_readwrite("grid_length", &ScenarioConfig::grid_length)
      .def_readwrite("tol", &ScenarioConfig::tol)
      .def_readwrite("seed", &ScenarioConfig::seed)
      .def_readwrite("samples", &ScenarioConfig::samples);

  m.def("scenario_ids", [] {
    std::vector<std::string> ids;
    for (const auto& info : scenario_registry()) ids.push_back(info.id);
    return ids;
  });
  m.def("run_scenario", &run_scenario, py::arg("config"));
  m.def(
      "build_fock_xp",
      [](int n) {
        QuadraturePair q = build_fock_xp(n);
        return py::make_tuple(q.x, q.p);
      },
      py::arg("n"));
  m.def(
      "build_grid_xp",
      [](int n, double length) {
        QuadraturePair q = build_grid_xp(n, length);
        return py::make_tuple(q.x, q.p);
      },
      py::arg("n"), py::arg("length"));
  m.def("fock_vacuum", &fock_vacuum, py::arg("n"));
  m.def("fock_coherent", &fock_coherent, py::arg("n"), py::arg("alpha"));
  m.def(
      "squeezed_rotated_state",
      [](const Operator& x, const Operator& p, double squeeze, double rotation) {
        return squeezed_rotated_state(QuadraturePair{x, p}, squeeze, rotation);
      },
      py::arg("x"), py::arg("p"), py::arg("squeeze"), py::arg("rotation"));
  m.def("grid_gaussian", &grid_gaussian, py::arg("n"), py::arg("length"), py::arg("sigma"),
        py::arg("center") = 0.0, py::arg("momentum") = 0.0);

  m.def("list_scenarios_text", &list_scenarios_text);
}
