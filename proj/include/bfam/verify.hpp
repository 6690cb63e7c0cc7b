#ifndef BFAM_VERIFY_HPP
#define BFAM_VERIFY_HPP

#include <string>
#include <vector>

namespace bfam {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Suite names accepted by `verify`: spectral, conservation, sign,
/// characteristics, growth, continuation, all.
const std::vector<std::string>& suite_names();

/// Runs one named verification bundle at the reference resolution
/// (n = 256, dt = 1e-4 unless a check states otherwise).
std::vector<CheckResult> run_suite(const std::string& suite);

/// Prints one verdict line per check; returns 0 if all passed, 1 otherwise.
int report_results(const std::vector<CheckResult>& results, bool quiet);

} // namespace bfam

#endif
