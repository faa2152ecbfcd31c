#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dualcat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kDomainTruncation = 3,
};

/// One row of `generate` output.
struct OutputRecord {
  double x{0.0};
  double y{0.0};
  double w{0.0};
  double z{0.0};
  double yp{0.0};
  double zp{0.0};
  double kappa_re{0.0};
  double kappa_du{0.0};
  double char_res_re{0.0};
  double char_res_du{0.0};
  double admis_res{0.0};

  bool operator==(const OutputRecord&) const = default;
};

inline constexpr std::string_view kCsvHeader =
    "x,y,w,z,yp,zp,kappa_re,kappa_du,char_res_re,char_res_du,admis_res";

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records);

/// Parses `write_csv` output; throws std::runtime_error on malformed input.
std::vector<OutputRecord> parse_csv(std::istream& in);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualcat::cli
