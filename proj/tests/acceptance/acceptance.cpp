// Acceptance checks 1-10. Usage: burgess_acceptance [--criterion N]...
// Prints one PASS/FAIL line per criterion; exit status 1 if any failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "burgess/coeffs.hpp"
#include "burgess/expsums.hpp"
#include "burgess/lscan.hpp"
#include "burgess/oscillatory.hpp"
#include "burgess/parallel.hpp"
#include "burgess/poisson.hpp"
#include "burgess/reductions.hpp"
#include "burgess/report_io.hpp"

using namespace burgess;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr u64 kSeed = 0xB00B5;

Outcome identity_suite() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = run_all_suites(100, kSeed, 1);
    const double elapsed = seconds_since(t0);
    std::map<std::string, int> seen, failed;
    double worst = 0;
    for (const auto& r : reports) {
        std::string name(to_string(r.tag == IdentityTag::DiagonalDegen ? IdentityTag::CdaggerBsum : r.tag));
        ++seen[name];
        if (!r.pass) ++failed[name];
        if (r.tag == IdentityTag::Reciprocity) {
            o.require(r.abs_err == 0.0, "reciprocity not exact");
        } else {
            worst = std::max(worst, std::abs(r.rhs) < 1.0 ? r.abs_err : r.rel_err);
        }
    }
    o.require(seen.size() == 6, "expected six suites");
    for (const auto& [name, n] : seen) {
        o.require(n >= 100, name + " ran " + std::to_string(n) + " tuples");
        if (failed.count(name)) o.require(false, name + " failed " + std::to_string(failed[name]));
    }
    o.require(worst <= 1e-8, "worst error " + fmt("%.3g", worst));
    o.require(elapsed <= 300, "runtime " + fmt("%.1f", elapsed) + " s");
    o.note(std::to_string(reports.size()) + " tuples, worst error " + fmt("%.2e", worst) + ", " +
           fmt("%.1f", elapsed) + " s");
    return o;
}

Outcome weil_scan_check() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto Ms = primes_in_range(3, 499);
    const auto summaries = weil_scan(Ms, 50, kSeed, 1);
    const double elapsed = seconds_since(t0);
    double worst = 0;
    i64 degenerate = 0;
    for (const auto& s : summaries) {
        o.require(s.records.size() == 50, "M=" + std::to_string(s.M) + " short of trials");
        for (const auto& r : s.records) o.require(!r.degenerate, "degenerate record kept");
        worst = std::max(worst, s.ratio_max);
        degenerate += s.degenerate_count;
    }
    o.require(worst <= 4.0, "max ratio " + fmt("%.3f", worst));

    // The diagonal r1 = r2, c1 l2 = c2 l1 gives a degenerate chi(Q1/Q2).
    auto rng = stream_rng(kSeed, 2);
    int flagged = 0;
    const int diagonal_cases = 60;
    for (int t = 0; t < diagonal_cases; ++t) {
        const auto k = random_case(IdentityTag::DiagonalDegen, rng);
        const auto q = cdagger_quadratics(k);
        const RationalCharSumSpec spec(build_character(k.M, k.chi), {q.q1[0], q.q1[1], q.q1[2]},
                                       {q.q2[0], q.q2[1], q.q2[2]}, {0});
        flagged += spec.degenerate() ? 1 : 0;
    }
    o.require(flagged == diagonal_cases, "diagonal detection " + std::to_string(flagged) + "/" +
                                             std::to_string(diagonal_cases));
    o.require(elapsed <= 60, "runtime " + fmt("%.1f", elapsed) + " s");
    o.note(std::to_string(Ms.size()) + " primes, max ratio " + fmt("%.3f", worst) + ", " +
           std::to_string(degenerate) + " degenerate draws excluded, diagonal flagged " + std::to_string(flagged) +
           "/" + std::to_string(diagonal_cases) + ", " + fmt("%.2f", elapsed) + " s");
    return o;
}

Outcome kloosterman_weil() {
    Outcome o;
    auto rng = stream_rng(kSeed, 3);
    double worst = 0;
    int count = 0;
    for (i64 c : primes_up_to(499)) {
        for (int t = 0; t < 20;) {
            const i64 a = uniform_int(rng, 0, 10 * c), b = uniform_int(rng, 0, 10 * c);
            if (gcd(a * b, c) != 1) continue;
            ++t;
            ++count;
            const double ratio = std::abs(kloosterman(a, b, c)) / (2 * std::sqrt(static_cast<double>(c)));
            worst = std::max(worst, ratio);
            o.require(std::abs(kloosterman(a, b, c)) <= 2 * std::sqrt(static_cast<double>(c)) + 1e-9,
                      "S(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + ")");
        }
    }
    o.note(std::to_string(count) + " sums, max |S|/(2 sqrt c) = " + fmt("%.6f", worst));
    return o;
}

Outcome gauss_magnitude() {
    Outcome o;
    double worst = 0;
    int count = 0;
    for (i64 q : primes_in_range(3, 499)) {
        const auto group = MultiplicativeGroupTable::build(q);
        for (i64 k = 1; k <= q - 2; ++k) {
            const double dev = std::abs(gauss_sum(DirichletCharacter(group, k)).magnitude() - std::sqrt(double(q)));
            worst = std::max(worst, dev);
            ++count;
        }
    }
    o.require(worst < 1e-9, "max deviation " + fmt("%.3g", worst));
    o.note(std::to_string(count) + " characters, max ||g| - sqrt q| = " + fmt("%.2e", worst));
    return o;
}

Outcome lvalue_cross() {
    Outcome o;
    double worst = 0;
    int count = 0;
    for (i64 M : primes_in_range(3, 101)) {
        const auto group = MultiplicativeGroupTable::build(M);
        for (i64 k = 1; k <= M - 2; ++k) {
            const DirichletCharacter chi(group, k);
            worst = std::max(worst, std::abs(central_value_oracle(chi).value - central_value_smoothed(chi).value));
            ++count;
        }
    }
    o.require(worst <= 1e-6, "max difference " + fmt("%.3g", worst));
    o.note(std::to_string(count) + " characters, max |hurwitz - smoothed| = " + fmt("%.2e", worst));
    return o;
}

Outcome tau_check() {
    Outcome o;
    // Dense expansion of q prod (1 - q^n)^24 to q^3.
    std::vector<Int128> dense(4, 0);
    dense[1] = 1;
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int d = 3; d >= n; --d) dense[static_cast<std::size_t>(d)] -= dense[static_cast<std::size_t>(d - n)];
        }
    }
    const auto tau = compute_tau(100000);
    o.require(dense[2] == -24 && dense[3] == 252, "dense expansion");
    o.require(tau[2] == -24 && tau[3] == 252, "tau(2), tau(3)");

    // Rebuild tau(n), n <= 100, from prime values only.
    std::vector<Int128> rebuilt(101, 0);
    rebuilt[1] = 1;
    for (i64 n = 2; n <= 100; ++n) {
        const i64 p = prime_factors(n).front();
        i64 pk = 1;
        int e = 0;
        while (n % (pk * p) == 0) {
            pk *= p;
            ++e;
        }
        Int128 prev = 1, cur = tau[p];
        Int128 p11 = 1;
        for (int i = 0; i < 11; ++i) p11 *= p;
        for (int i = 1; i < e; ++i) {
            const Int128 next = tau[p] * cur - p11 * prev;
            prev = cur;
            cur = next;
        }
        rebuilt[static_cast<std::size_t>(n)] = cur * rebuilt[static_cast<std::size_t>(n / pk)];
    }
    int mismatches = 0;
    for (i64 n = 1; n <= 100; ++n) mismatches += rebuilt[static_cast<std::size_t>(n)] != tau[n];
    o.require(mismatches == 0, std::to_string(mismatches) + " Hecke mismatches");

    double worst = 0;
    for (i64 p : primes_up_to(100000)) worst = std::max(worst, std::abs(tau.normalized(p)));
    o.require(worst <= 2.0, "Deligne ratio " + fmt("%.4f", worst));
    o.note("tau(2) = " + int128_to_string(tau[2]) + ", tau(3) = " + int128_to_string(tau[3]) +
           ", n <= 100 rebuilt exactly, max |tau(p)/p^5.5| = " + fmt("%.4f", worst));
    return o;
}

Outcome offdiag_check() {
    Outcome o;
    const i64 M = 10007, N = M, L = 4;
    const double p = 2.0 * std::ceil(static_cast<double>(L * N) / static_cast<double>(M));
    const auto at = offdiag_tail_report(p, M, L, N, 1000, 11);
    const auto low = offdiag_tail_report(p / 100.0, M, L, N, 1000, 11);
    o.require(at.bound < 1e-12, "7a: bound " + fmt("%.3g", at.bound) + " at p = " + fmt("%.0f", p) + " (x1 = " +
                                    fmt("%.2f", at.x1) + ") is not < 1e-12");
    o.require(low.bound > 1e-3, "7b: bound " + fmt("%.3g", low.bound) + " at p/100");
    o.note("p = " + fmt("%.0f", p) + ": bound " + fmt("%.3g", at.bound) + "; p/100: bound " +
           fmt("%.3g", low.bound));
    return o;
}

Outcome stationary_phase_check() {
    Outcome o;
    double previous = INFINITY;
    std::string errors;
    for (double n : {400.0, 800.0, 1600.0, 3200.0}) {
        OscillatoryIntegralSpec s;
        s.n = n;
        s.R = 9 * n;
        s.l = 3;
        s.c = 1;
        s.M = 5;
        s.p = 3;
        s.r = 1;
        const auto t = stationary_phase_terms(s);
        o.require(t.y0 >= 1.0 && t.y0 <= 2.0, "y0 outside [1,2]");
        o.require(std::abs(t.second_derivative) >= 100.0, "phi'' below 100");
        const cplx lead = t.value();
        const double rel = std::abs(oscillatory_integral(s, t.sign) - lead) / std::abs(lead);
        o.require(rel <= 0.2, "relative error " + fmt("%.3g", rel));
        o.require(rel < previous, "not monotone at n = " + fmt("%.0f", n));
        previous = rel;
        errors += (errors.empty() ? "" : ", ") + fmt("%.2e", rel);
    }
    o.note("relative errors " + errors);
    return o;
}

Outcome burgess_check() {
    Outcome o;
    const auto primes = log_spaced_primes(100, 20000, 60);
    BurgessScanOptions opts;
    opts.chars_per_M = 3;
    opts.seed = kSeed;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = burgess_scan(primes, opts);
    const double elapsed = seconds_since(t0);
    const auto again = burgess_scan(primes, opts);
    std::ostringstream a, b;
    write_burgess_report(a, rep, OutputFormat::Json);
    write_burgess_report(b, again, OutputFormat::Json);

    o.require(rep.L_fit.slope.has_value() && rep.S_fit.slope.has_value(), "slopes undefined");
    o.require(rep.L_gate(), "L slope above 1/4");
    o.require(rep.S_gate(), "S slope above 1/2");
    o.require(a.str() == b.str(), "rerun differs");
    o.require(elapsed <= 600, "runtime " + fmt("%.1f", elapsed) + " s");
    if (rep.L_fit.slope && rep.S_fit.slope) {
        o.note(std::to_string(primes.size()) + " primes, L slope " + fmt("%.4f", *rep.L_fit.slope) +
               " (3/16 distance " + fmt("%+.4f", *rep.L_fit.slope - BurgessScanReport::kBurgessL) + "), S slope " +
               fmt("%.4f", *rep.S_fit.slope) + " (3/8 distance " +
               fmt("%+.4f", *rep.S_fit.slope - BurgessScanReport::kBurgessS) + "), " + fmt("%.1f", elapsed) + " s");
    }
    return o;
}

Outcome poisson_cases() {
    Outcome o;
    const auto p1 = poisson_check({SmoothWindow::bump(), 100.0, 0.0}, 0, 1);
    const auto p2 = poisson_check({SmoothWindow::bump(), 0.4, 0.0}, 0, 1);
    const auto p3 = poisson_check({SmoothWindow::plateau(), 30.0, 0.0}, 1, 3);
    for (const auto* r : {&p1, &p2, &p3}) o.require(r->discrepancy <= 1e-9, "discrepancy " + fmt("%.3g", r->discrepancy));
    o.require(p2.lhs == 0.0, "empty class has nonzero left side");
    o.note("discrepancies " + fmt("%.2e", p1.discrepancy) + ", " + fmt("%.2e", p2.discrepancy) + ", " +
           fmt("%.2e", p3.discrepancy));
    return o;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria = {
    {"identity suites", identity_suite},
    {"Weil scan", weil_scan_check},
    {"Kloosterman Weil bound", kloosterman_weil},
    {"Gauss sum magnitude", gauss_magnitude},
    {"L-value cross-oracle", lvalue_cross},
    {"tau correctness", tau_check},
    {"off-diagonal negligibility", offdiag_check},
    {"stationary phase", stationary_phase_check},
    {"Burgess consistency scan", burgess_check},
    {"Poisson checker", poisson_cases},
};

}  // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (selected.empty()) {
        for (int i = 1; i <= static_cast<int>(kCriteria.size()); ++i) selected.push_back(i);
    }
    bool all = true;
    for (int id : selected) {
        if (id < 1 || id > static_cast<int>(kCriteria.size())) {
            std::fprintf(stderr, "unknown criterion %d\n", id);
            return 2;
        }
        const auto& [name, check] = kCriteria[static_cast<std::size_t>(id - 1)];
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d %-28s %s  %s\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
