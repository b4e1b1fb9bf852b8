#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "descriptor.hpp"

namespace hsd::cli {

// Exit codes: 0 success, 1 verification/check failure, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int cmd_eval(const MapDescriptor& desc, cplx z, const RunConfig& cfg, std::ostream& out);

int cmd_norm(const MapDescriptor& desc, const RunConfig& cfg, std::optional<double> expect,
             double expect_tol, std::ostream& out);

int cmd_order(double lambda, std::optional<double> R_sup, const RunConfig& cfg,
              std::ostream& out);

int cmd_extremal(double lambda, double R, const RunConfig& cfg, bool norm_check,
                 std::ostream& out);

int cmd_heatmap(const MapDescriptor& desc, const RunConfig& cfg, std::ostream& out);

int cmd_verify(const std::string& suite, std::ostream& out);

}  // namespace hsd::cli
