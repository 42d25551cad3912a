// Acceptance suite: runs each acceptance criterion end to end and prints one
// pass/fail line per criterion. Every tolerance and runtime budget is pinned
// here. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>

#include "progen/verify.hpp"

using namespace progen;

namespace {

constexpr uint64_t kSeed = 20240801;  // the fixed, documented master seed

struct Outcome {
    int failures = 0;
    int criteria_failed = 0;
};

double now_s() {
    using clock = std::chrono::steady_clock;
    static auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void run(Outcome& out, int number, const char* title, const std::string& suite_id,
         double budget_seconds) {
    double t0 = now_s();
    bool pass = false;
    std::string detail;
    size_t checks = 0, fails = 0;
    try {
        VerifyReport rep = run_verify_suite(suite_id, kSeed);
        checks = rep.items.size();
        fails = rep.failures();
        pass = rep.all_pass();
        if (!pass) {
            for (const auto& i : rep.items)
                if (!i.pass) {
                    detail = i.invariant + " :: " + i.instance;
                    break;
                }
        }
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double dt = now_s() - t0;
    bool in_budget = dt <= budget_seconds;
    bool ok = pass && in_budget;
    std::printf("%s criterion %2d: %s (%zu checks, %zu failed, %.1f s%s)\n", ok ? "PASS" : "FAIL",
                number, title, checks, fails, dt,
                in_budget ? "" : " OVER TIME BUDGET");
    if (!detail.empty()) std::printf("      first failure: %s\n", detail.c_str());
    if (!ok) ++out.criteria_failed;
    out.failures += static_cast<int>(fails);
    std::fflush(stdout);
}

}  // namespace

int main() {
    Outcome out;
    std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(kSeed));
    run(out, 1, "generation-probability oracle (corpus <= 48, k <= 3)", "genprob-oracle", 60);
    run(out, 2, "module product-formula oracle (>= 20 modules)", "module-genprob-oracle", 120);
    run(out, 3, "d(N) formula = brute force = least positive k", "d-formula", 60);
    run(out, 4, "PMSMG sandwich with enumeration of m_k", "pmsmg", 300);
    run(out, 5, "minimal-resolution identity vs bar path", "resolution-identity", 300);
    run(out, 6, "h1 = delta + h' decomposition (>= 15 pairs)", "h1-decomposition", 600);
    run(out, 7, "coprime vanishing (A5 mod 7, S3 mod 5)", "coprime-vanishing", 300);
    run(out, 8, "Frattini/Schur cover facts for SL(2,5) -> A5", "frattini-schur", 600);
    run(out, 9, "H^2 ratio bound on the double cover at p = 2", "h2-ratio", 900);
    run(out, 10, "normal-generation product inequality (order <= 16)", "normal-gen-product", 300);
    run(out, 11, "tower dichotomy for A5^m, m = 1..4", "tower-dichotomy", 600);
    run(out, 12, "Monte-Carlo within 4 sigma (10^4 trials)", "mc-consistency", 300);
    std::printf("%d of 12 criteria failed (%d individual check failures)\n", out.criteria_failed,
                out.failures);
    return out.criteria_failed;
}
