#include "qrv/report_io.hpp"

#include <cstdio>

namespace qrv {

namespace {

using nlohmann::ordered_json;

ordered_json distribution_to_json(const DiscreteDistribution& d) {
  ordered_json j;
  j["values"] = d.values();
  j["weights"] = d.weights();
  return j;
}

ordered_json tolerances_to_json(const Tolerances& tol) {
  ordered_json j;
  j["commutator_rel"] = tol.commutator_rel;
  j["eig"] = tol.eig;
  j["bin"] = tol.bin;
  j["snap"] = tol.snap;
  j["equal_w1"] = tol.equal_w1;
  j["functional"] = tol.functional;
  j["eigvec"] = tol.eigvec;
  j["c_check"] = tol.c_check;
  return j;
}

}  // namespace

std::string format_full_precision(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

ordered_json report_to_json(const ComparisonReport& report) {
  ordered_json j;
  j["case"] = to_string(report.label.branch);
  j["predicted_relation"] = to_string(report.label.relation);
  if (report.label.dependence) {
    j["dependence_direction"] = report.label.b_of_a ? "b_of_a" : "a_of_b";
    ordered_json table = ordered_json::array();
    for (const auto& [key, value] : report.label.dependence->pairs) {
      table.push_back({key, value});
    }
    j["dependence_table"] = std::move(table);
  }
  if (report.label.schmidt_rank) j["schmidt_rank"] = *report.label.schmidt_rank;
  j["function"] = report.function_label;
  j["sigma_qm"] = distribution_to_json(report.sigma_qm);
  j["sigma_rv"] = distribution_to_json(report.sigma_rv);
  if (report.sigma_rv_independent) {
    j["sigma_rv_independent"] = distribution_to_json(*report.sigma_rv_independent);
  }
  j["tv"] = report.tv;
  j["w1"] = report.w1;
  j["moments_qm"] = report.moments_qm;
  j["moments_rv"] = report.moments_rv;
  j["commutator_abs"] = report.commutator_abs;
  j["commutator_rel"] = report.commutator_rel;
  j["exceptional_equality"] = report.exceptional_equality;
  if (report.exceptional_equality) j["exceptional_reason"] = report.exceptional_reason;
  j["verdict_consistent"] = report.verdict_consistent;
  j["oracle"] = {{"seed", report.oracle.seed},
                 {"samples", report.oracle.samples},
                 {"tv_vs_exact", report.oracle.tv_vs_exact}};
  j["tolerances"] = tolerances_to_json(report.tolerances);
  ordered_json details = ordered_json::object();
  for (const auto& [name, value] : report.details) details[name] = value;
  j["details"] = std::move(details);
  return j;
}

std::string distributions_csv(const DiscreteDistribution& sigma_qm,
                              const DiscreteDistribution& sigma_rv, double snap_tol) {
  const AlignedSupport shared = align_supports(sigma_qm, sigma_rv, snap_tol);
  std::string out = "value,weight_qm,weight_rv\n";
  for (std::size_t i = 0; i < shared.values.size(); ++i) {
    out += format_full_precision(shared.values[i]);
    out += ',';
    out += format_full_precision(shared.weights_a[i]);
    out += ',';
    out += format_full_precision(shared.weights_b[i]);
    out += '\n';
  }
  return out;
}

}  // namespace qrv
