// Acceptance suite: end-to-end checks of the whole pipeline at desk scale.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.
// All value comparisons are exact rational equality; stated runtime bounds
// are enforced.

#include "hh/hurwitz.hpp"
#include "hh/identities.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace hh;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> body;
};

bool check_eq(const Rational& got, const Rational& want, const std::string& what,
              std::string& msg) {
    if (got == want) return true;
    msg = what + ": got " + rational_str(got) + ", want " + rational_str(want);
    return false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Oracle soundness on the hand-derived values, under one second.
bool c1_oracle_soundness(std::string& msg) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = check_eq(hurwitz_oracle(0, Partition({3})), 1, "H^0_(3)", msg) &&
              check_eq(hurwitz_oracle(0, Partition({2, 1})), 4, "H^0_(2,1)", msg) &&
              check_eq(hurwitz_oracle(1, Partition({3})), 9, "H^1_(3)", msg);
    for (unsigned g = 0; ok && g <= 2; ++g)
        ok = check_eq(hurwitz_oracle(g, Partition({2})), Rational(1, 2),
                      "H^" + std::to_string(g) + "_(2)", msg);
    const double dt = seconds_since(t0);
    if (ok && dt >= 1.0) {
        msg = "runtime " + std::to_string(dt) + "s >= 1s";
        return false;
    }
    return ok;
}

// 2. Fast path == oracle on every profile of d <= 4 up to g = 3, plus d = 3 up
//    to g = 6, inside two minutes. The d = 4, g = 3 enumerations are above the
//    default budget, so this raises it explicitly.
bool c2_fast_equals_oracle(std::string& msg) {
    const auto t0 = std::chrono::steady_clock::now();
    MonodromyOptions opts;
    opts.budget = 4'000'000'000ULL; // covers 6^12 at d = 4
    for (unsigned d = 1; d <= 4; ++d) {
        for (const auto& eta : partitions_of(d)) {
            const unsigned gmax = d == 3 ? 6 : 3;
            for (unsigned g = 0; g <= gmax; ++g) {
                const Rational fast = hurwitz_fast(g, eta);
                const Rational oracle = hurwitz_oracle(g, eta, opts);
                if (fast != oracle) {
                    msg = "mismatch at d=" + std::to_string(d) + " eta=" + eta.str() +
                          " g=" + std::to_string(g) + ": cutjoin " + rational_str(fast) +
                          " vs oracle " + rational_str(oracle);
                    return false;
                }
            }
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 120.0) {
        msg = "runtime " + std::to_string(dt) + "s >= 120s";
        return false;
    }
    return true;
}

// 3. Computed H_(d)(u) equals the SSV closed form through u^12 for d = 2..5.
bool c3_ssv(std::string& msg) {
    for (unsigned d = 2; d <= 5; ++d) {
        if (hurwitz_series(Partition({d}), 12) != one_part_series_closed(d, 12)) {
            msg = "one-part series differs from closed form at d=" + std::to_string(d);
            return false;
        }
    }
    return true;
}

// 4. The signed all-profiles relation vanishes identically for d = 2..4.
bool c4_heta(std::string& msg) {
    for (unsigned d = 2; d <= 4; ++d) {
        const IdentityReport rep = verify_heta(d, 12);
        if (!rep.passed) {
            msg = "residual nonzero at d=" + std::to_string(d) +
                  " (certified order " + std::to_string(rep.certified_order) + ")";
            return false;
        }
    }
    return true;
}

// 5. Master relation, both Hurwitz sources, d = 1..5.
bool c5_master(std::string& msg) {
    for (unsigned d = 1; d <= 5; ++d) {
        if (!verify_master(d, 12, HurwitzSource::fast).passed) {
            msg = "computed-source residual nonzero at d=" + std::to_string(d);
            return false;
        }
        if (!verify_master(d, 12, HurwitzSource::closed).passed) {
            msg = "closed-source residual nonzero at d=" + std::to_string(d);
            return false;
        }
    }
    return true;
}

// 6. D(u) recovered from Hurwitz numbers equals ln(d sin(u/2)/sin(du/2)).
bool c6_bpa(std::string& msg) {
    for (unsigned d = 1; d <= 5; ++d) {
        const IdentityReport rep = verify_bpa(d, 12);
        if (!rep.passed) {
            msg = "recovered D differs at d=" + std::to_string(d);
            return false;
        }
    }
    return true;
}

// 7. sum_i D_i == T exactly at N = 12, and T(0) = 1/d.
bool c7_dlf(std::string& msg) {
    for (unsigned d = 1; d <= 5; ++d) {
        if (!verify_dlf(d, 12).passed) {
            msg = "sum of D_i differs from T at d=" + std::to_string(d);
            return false;
        }
        if (!check_eq(t_series(d, 12).coeff(0), Rational(1, d),
                      "T constant term at d=" + std::to_string(d), msg))
            return false;
    }
    return true;
}

// 8. Hodge-integral table: d = 2 values, d = 1 column zero.
bool c8_hodge(std::string& msg) {
    if (!check_eq(hurwitz_hodge_integral(2, 1, 1).value, Rational(1, 4), "(d=2,g=1,i=1)", msg))
        return false;
    if (!check_eq(hurwitz_hodge_integral(2, 2, 1).value, Rational(1, 8), "(d=2,g=2,i=1)", msg))
        return false;
    for (unsigned g = 1; g <= 5; ++g)
        if (!check_eq(hurwitz_hodge_integral(1, g, 1).value, 0,
                      "(d=1,g=" + std::to_string(g) + ",i=1)", msg))
            return false;
    return true;
}

// 9. Power-series core property suite, under ten seconds.
bool c9_series_core(std::string& msg) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    const auto random_series = [&](std::size_t order) {
        std::vector<Rational> c(order + 1);
        for (auto& x : c) x = Rational(num(rng), den(rng));
        return TruncatedSeries(order, std::move(c));
    };

    for (int trial = 0; trial < 25; ++trial) {
        TruncatedSeries a = random_series(10);
        TruncatedSeries b = random_series(10);
        TruncatedSeries c = random_series(10);
        if (add(add(a, b), c) != add(a, add(b, c)) || mul(a, b) != mul(b, a) ||
            mul(mul(a, b), c) != mul(a, mul(b, c)) ||
            mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            msg = "ring axiom failed on random series, trial " + std::to_string(trial);
            return false;
        }
        TruncatedSeries z = sub(a, TruncatedSeries::monomial(a.coeff(0), 0, 10));
        if (log(exp(z)) != z) {
            msg = "log(exp(S)) != S on random series, trial " + std::to_string(trial);
            return false;
        }
        TruncatedSeries w = add(z, TruncatedSeries::one(10));
        if (exp(log(w)) != w) {
            msg = "exp(log(S)) != S on random series, trial " + std::to_string(trial);
            return false;
        }
    }

    const TruncatedSeries sin2 = pow_int(sin_scaled(1, 12), 2);
    const TruncatedSeries cos =
        sub(TruncatedSeries::one(12), scale(pow_int(sin_scaled(Rational(1, 2), 12), 2), 2));
    if (add(sin2, pow_int(cos, 2)) != TruncatedSeries::one(12)) {
        msg = "sin^2 + cos^2 != 1 at N = 12";
        return false;
    }

    const double dt = seconds_since(t0);
    if (dt >= 10.0) {
        msg = "runtime " + std::to_string(dt) + "s >= 10s";
        return false;
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"oracle soundness (hand-derived Hurwitz numbers, < 1 s)", c1_oracle_soundness},
        {"cut-and-join equals oracle (d<=4 g<=3; d=3 g<=6; < 2 min)", c2_fast_equals_oracle},
        {"computed H_(d)(u) equals SSV closed form, d=2..5, N=12", c3_ssv},
        {"all-profiles sine relation vanishes, d=2..4, N=12", c4_heta},
        {"master relation, computed and closed sources, d=1..5, N=12", c5_master},
        {"D(u) from Hurwitz data equals ln(d sin(u/2)/sin(du/2)), d=1..5", c6_bpa},
        {"sum of D_i equals T and T(0) = 1/d, d=1..5, N=12", c7_dlf},
        {"Hodge integrals: d=2 gives 1/4, 1/8; d=1 column zero", c8_hodge},
        {"power-series core properties (< 10 s)", c9_series_core},
    };

    const auto suite_start = std::chrono::steady_clock::now();
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string msg;
        bool ok = false;
        try {
            ok = criteria[i].body(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        std::printf("[%zu/%zu] %-62s %s (%.2f s)\n", i + 1, criteria.size(),
                    criteria[i].name.c_str(), ok ? "PASS" : "FAIL", seconds_since(t0));
        if (!ok) {
            std::printf("        %s\n", msg.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed, total %.2f s\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(),
                seconds_since(suite_start));
    return failures == 0 ? 0 : 1;
}
