#ifndef EDGECERT_PROOF_LOG_HPP_
#define EDGECERT_PROOF_LOG_HPP_

#include <string>

#include "edgecert/prover.hpp"

namespace edgecert {

/// Human-readable proof log: the starting data, one section per checked
/// stage with exact fractions and 5-place approximations, and a final
/// "Success: existence proven" or "Failed: unable to verify ..." line.
std::string render_proof_log(const ProofReport& report);

/// "[['a', 'b'], ['b', 'c']]"
std::string format_label_lists(const std::vector<std::vector<std::string>>& lists);

/// "[p / q, r / s]"
std::string format_point(const Point& p);

}  // namespace edgecert

#endif  // EDGECERT_PROOF_LOG_HPP_
