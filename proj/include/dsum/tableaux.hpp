#pragma once

#include "dsum/bigint.hpp"
#include "dsum/partition.hpp"

namespace dsum {

/// Number of standard Young tableaux of the given shape, by the hook length
/// formula: n! / product of hook lengths. The hook product must divide n!
/// exactly; a nonzero remainder throws std::logic_error.
ExactCount f_hook(const Partition& shape);

/// The same count by the Young-Frobenius determinant form: with k parts and
/// shifted parts l_i = part_i + k - i, the count is
/// n! * prod_{i<j}(l_i - l_j) / prod_i l_i!. All arithmetic exact.
ExactCount f_frobenius(const Partition& shape);

struct RecursionBudget {
  /// Cap on the reachable sub-shape count, estimated by the bounding-box
  /// binomial C(first_part + length, length). The memo lives only for the
  /// duration of one evaluation, so concurrent calls share nothing.
  double max_states = 1e7;
};

/// Independent recursive route: the count of a shape is the sum of the
/// counts over shapes with one corner cell removed, memoized. This is the
/// in-library oracle for the closed forms above; it is meant for testing,
/// not production paths, and refuses shapes whose sub-shape lattice exceeds
/// the budget.
ExactCount f_recursive(const Partition& shape, const RecursionBudget& budget = {});

}  // namespace dsum
