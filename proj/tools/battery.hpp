#ifndef UMBRAL_TOOLS_BATTERY_HPP
#define UMBRAL_TOOLS_BATTERY_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace umbral::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    /// Measured quantities, "name=value".
    std::vector<std::string> details;
    /// Failed expectations; empty when pass.
    std::vector<std::string> failures;
};

CriterionResult classical_hahn_case();
CriterionResult q_classical_case();
CriterionResult krall_jacobi_case();
CriterionResult elliptic_suite();
CriterionResult structural_battery(std::uint64_t seed);
CriterionResult negative_controls(std::uint64_t seed);

/// All six criteria in order; independent criteria run concurrently
/// when parallel is set.
std::vector<CriterionResult> run_battery(std::uint64_t seed, bool parallel);

std::string format_line(const CriterionResult& r);
bool all_pass(const std::vector<CriterionResult>& results);
void write_summary(const std::vector<CriterionResult>& results, const std::string& path);

/// σ(z) = z exp(-Σ_{k>=2} c_k z^{2k} / ((2k-1) 2k)) from the Laurent
/// coefficients c_k of ℘; independent of the Taylor double series.
/// Converges inside the disc bounded by the nearest nonzero lattice point.
std::complex<double> sigma_laurent_oracle(std::complex<double> z, std::complex<double> g2,
                                          std::complex<double> g3, int max_k = 120);

} // namespace umbral::acceptance

#endif // UMBRAL_TOOLS_BATTERY_HPP
