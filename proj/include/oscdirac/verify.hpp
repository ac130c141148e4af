#pragma once

#include <string>
#include <vector>

namespace oscdirac {

/// One verification check: pass iff measured <= threshold.
struct Check {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

Check make_check(const std::string& name, double measured, double threshold);
bool all_pass(const std::vector<Check>& checks);

std::vector<Check> verify_group(unsigned seed);
std::vector<Check> verify_clifford();
std::vector<Check> verify_reps(int trunc);
std::vector<Check> verify_dirac(int trunc);
std::vector<Check> verify_lattice();
std::vector<Check> verify_theta(unsigned seed);

std::vector<Check> verify_suite(const std::string& suite, int trunc, unsigned seed);

}  // namespace oscdirac
