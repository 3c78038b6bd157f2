#ifndef HEATANSATZ_VERIFY_HPP
#define HEATANSATZ_VERIFY_HPP

#include <heatansatz/grpoly.hpp>

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace heatansatz
{

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Random homogeneous polynomial of degree -2 * weight in y_1 .. y_weight
/// (or another family) with small integer coefficients.
GradedPoly random_homogeneous(Family family, unsigned weight, std::mt19937_64& rng, unsigned max_terms = 6);

std::vector<CheckResult> verify_operators();
std::vector<CheckResult> verify_ansatz();
std::vector<CheckResult> verify_dynsys();
std::vector<CheckResult> verify_solution();

/// "operators", "ansatz", "dynsys", "solution" or "all".
/// Throws std::invalid_argument for other names.
std::vector<CheckResult> run_suite(std::string_view name);

} // namespace heatansatz

#endif
