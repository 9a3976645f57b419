// Acceptance gate: every committed claim maps to one or more registry
// experiments; a criterion passes only when each of its experiments reports
// pass (uncertain counts as failure here). One line per criterion.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "tklab/experiments.hpp"

using namespace tklab;

namespace {

struct Criterion {
    const char* claim;
    std::vector<const char*> experiments;
};

const std::vector<Criterion> criteria = {
    {"the order-7 branch kernel has the documented degree-3 representation and "
     "Blaschke pair (1 +/- 2i)/5",
     {"kernel_z_7_2"}},
    {"half-integer kernels have dimension max(0, (n-1)/2) for n = 1, 3, 5, 7, 9",
     {"dim_half_integer"}},
    {"the plus-minus-one symbol has a certified trivial kernel at two section sizes",
     {"pm_one_symbol"}},
    {"twenty random conjugate-Blaschke symbols give kernel dimension equal to the zero count",
     {"dim_random_blaschke"}},
    {"the conjugation is an isometric involution on polynomial, Blaschke and atomic kernels",
     {"conjugation_suite_K_z5", "conjugation_suite_K_B", "conjugation_suite_atomic"}},
    {"certificate and direct factorisation routes agree on twelve maximality instances",
     {"maximal_agreement"}},
    {"Crofoot multipliers act isometrically for Blaschke and point-mass inner functions",
     {"crofoot_isometry_B", "crofoot_isometry_E"}},
    {"conjugation eigenfunctions in the degree-five space carry eigenvalues +1 and -1",
     {"eigenfunction_K_z5"}},
    {"outer maximal functions exist in ten kernels and reflect under the conjugation",
     {"outer_maximal_family"}},
    {"Wiener-Hopf splitting reconstructs fifty Blaschke products and spans their model spaces",
     {"wiener_hopf_blaschke"}},
    {"squared-outer rigidity probes classify invertible, boundary-zero and kernel cases",
     {"rigidity_probes"}},
    {"backward shifts of zero-at-origin kernel elements stay in the kernel",
     {"backward_shift_invariance"}},
};

} // namespace

int main() {
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        bool ok = true;
        std::string detail;
        for (const char* id : c.experiments) {
            try {
                auto r = run_experiment(id);
                if (r.status != Status::Pass) {
                    ok = false;
                    detail += std::string(" [") + id + ": " + to_string(r.status) + "]";
                }
            } catch (const std::exception& e) {
                ok = false;
                detail += std::string(" [") + id + ": " + e.what() + "]";
            }
        }
        if (!ok) ++failed;
        std::printf("%s  %2zu  %s%s\n", ok ? "PASS" : "FAIL", i + 1, c.claim, detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
