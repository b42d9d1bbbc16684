#ifndef CALEX_COMMANDS_HPP
#define CALEX_COMMANDS_HPP

#include <optional>
#include <string>

#include "calex/cgroup.hpp"
#include "calex/checks.hpp"
#include "calex/involution.hpp"
#include "calex/realize.hpp"
#include "calex/report.hpp"

namespace calex {

struct ComputeOptions {
    std::optional<int> central_power;    // also report the integral module
    std::optional<int> property_degree;  // curve degree for the property block
};

ReportNode cmd_compute(const CPresentation& g, const std::string& input_desc,
                       const ComputeOptions& opt = {});

ReportNode cmd_realize(const IntPoly& target, const std::string& target_text, RealizeMode mode,
                       const RealizeOptions& opt = {});

ReportNode cmd_decompose(const IntMatrix& m);

ReportNode cmd_check(const IntPoly& p, const std::string& target_text,
                     std::optional<int> components, std::optional<int> degree,
                     std::optional<unsigned long> betti_n);

ReportNode cmd_demo(unsigned long seed);

/// Smallest reasonable curve degree consistent with property (iii)/(v) for a
/// given nonzero delta; used when the caller supplies none.
int witness_degree(const IntPoly& delta);

}  // namespace calex

#endif
