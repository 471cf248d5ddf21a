#pragma once

#include <stdexcept>
#include <string>

namespace ptd {

// A level request whose binding bracket is non-positive: nothing to normalize.
struct no_bound_state_error : std::runtime_error {
  double bracket;
  no_bound_state_error(const std::string& what, double bracket_)
      : std::runtime_error(what), bracket(bracket_) {}
};

// An identity or observable that does not exist for the given state
// (e.g. a vanishing Hellmann-Feynman divisor).
struct inapplicable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A norm or expectation integral with a non-integrable endpoint.
struct divergent_integral_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input polynomial data outside the shapes the solver supports.
struct unsupported_shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Quadrature that failed to reach the requested tolerance; carries the
// best estimate obtained before giving up.
struct tolerance_not_met_error : std::runtime_error {
  double best_estimate;
  tolerance_not_met_error(const std::string& what, double best)
      : std::runtime_error(what), best_estimate(best) {}
};

// Eigenvalue search that ran out of states below threshold; carries the
// largest node count seen while scanning.
struct eigenvalue_not_found_error : std::runtime_error {
  int max_nodes_seen;
  eigenvalue_not_found_error(const std::string& what, int max_nodes)
      : std::runtime_error(what), max_nodes_seen(max_nodes) {}
};

}  // namespace ptd
