#pragma once

#include <stdexcept>
#include <string>

namespace zetaphase {

// Two error families, mirrored by the CLI exit codes: domain_violation means
// the caller asked for something outside a routine's contract (exit 2),
// search_failure means a numerical search or cross-check broke down on valid
// input (exit 3). Everything thrown by this library derives from one of them.

struct domain_violation : std::domain_error {
  using std::domain_error::domain_error;
};

struct search_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation at a pole (gamma at nonpositive integers, zeta at s = 1).
struct pole_error : domain_violation {
  using domain_violation::domain_violation;
};

// Argument outside the supported evaluation box or range cap.
struct box_error : domain_violation {
  using domain_violation::domain_violation;
};

// A requested accuracy cannot be met with the term budget given.
struct insufficient_terms_error : domain_violation {
  using domain_violation::domain_violation;
};

// Evaluation requested too close to a zero ordinate for a contour route.
struct near_zero_error : domain_violation {
  using domain_violation::domain_violation;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct quadrature_error : search_failure {
  using search_failure::search_failure;
};

// A sign bracket that theory guarantees was not found, or a root left it.
struct bracket_error : search_failure {
  using search_failure::search_failure;
};

// Both derivative formulas for the phase slope lost all precision; the
// point behaves like a multiple zero of Z.
struct degenerate_point_error : search_failure {
  using search_failure::search_failure;
};

// The phase failed to increase where it is expected to be monotone.
struct monotonicity_error : search_failure {
  using search_failure::search_failure;
};

// Contour count did not settle to an integer after perturbation retries.
struct winding_error : search_failure {
  using search_failure::search_failure;
};

// Two independent routes to the same quantity disagree beyond tolerance.
struct cross_check_error : search_failure {
  using search_failure::search_failure;
};

// Zero multiplicity could not be decided from the available jets.
struct indeterminate_error : search_failure {
  using search_failure::search_failure;
};

}  // namespace zetaphase
