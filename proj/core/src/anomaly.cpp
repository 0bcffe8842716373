#include "cuspscan/anomaly.hpp"

#include <algorithm>

namespace cusp {

namespace {

int jacobian_rank(const JacobianMatrix& j, const TauAssignment& tau) {
  return tau.empty() ? minor_rank(j) : evaluated_rank(j, tau);
}

}  // namespace

std::vector<int> locate_complete_cusps(const SubgroupSpec& h, const TauAssignment& tau) {
  const JacobianMatrix j = jacobian(h);
  const int base = jacobian_rank(j, tau);
  if (base >= h.n)
    throw InputError("locate_complete_cusps: tangent space is zero-dimensional");
  std::vector<int> out;
  for (int i = 0; i < h.n; ++i) {
    // x_i vanishes on ker J iff the tau-free row e_i lies in the row space.
    if (jacobian_rank(j.with_unit_row(i), tau) == base) out.push_back(i + 1);
  }
  return out;
}

AnomalyReport classify(const SubgroupSpec& h, const TauAssignment& tau) {
  if (!tau.empty() && static_cast<int>(tau.size()) != h.n)
    throw InputError("classify: tau assignment length mismatch");
  AnomalyReport r;
  r.subgroup = h;
  r.codim = h.codim();
  r.jacobian_rank = jacobian_rank(jacobian(h), tau);
  r.first_order_dim = h.n - r.jacobian_rank;
  if (r.codim <= h.n)
    r.anomalous = r.first_order_dim > 0 && r.jacobian_rank < r.codim;
  else
    r.anomalous = r.first_order_dim > 0;
  if (r.first_order_dim > 0) r.complete_cusps = locate_complete_cusps(h, tau);
  if (r.anomalous) {
    r.b = b_value(h, r.first_order_dim).b;
    // Guaranteed nonempty under the declared independence hypothesis.
    if (tau.empty() && r.complete_cusps.empty()) r.counterexample = true;
  }
  return r;
}

}  // namespace cusp
