// Acceptance suite: runs every headline result end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "galcover/cli.hpp"
#include "galcover/covers.hpp"
#include "support/oracles.hpp"

using namespace galcover;

namespace {

const std::vector<u64> kPrimesP = {2, 3, 5, 7, 11, 13, 17, 19, 23};
const std::vector<u64> kPrimesL = {2, 3, 5, 7, 11, 13};

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& fn) {
    bool ok = false;
    std::string note;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("%s criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number,
                what.c_str(), note.c_str());
    if (!ok)
        ++failures;
}

struct BinaryResult {
    int status;
    std::string out;
};

BinaryResult run_binary(const std::string& args) {
    std::string cmd = std::string(GALCOVER_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int main() {
    criterion(1, "factor --p 7 --l 2 returns exactly the two cubic factors", [] {
        BinaryResult r = run_binary("factor --p 7 --l 2");
        if (r.status != 0 || r.out != "t^3 + t^2 + 1\nt^3 + t + 1\n")
            return false;
        Factorization f = factor(cyclotomic_mod(7, 2));
        return f.factors.size() == 2 &&
               f.factors[0].factor == PolyFp(2, {1, 0, 1, 1}) &&
               f.factors[1].factor == PolyFp(2, {1, 1, 0, 1}) &&
               f.factors[0].multiplicity == 1 && f.factors[1].multiplicity == 1;
    });

    criterion(2, "orders 3 and 2; cyclotomic factor degree/count grid in under 5 s", [] {
        BinaryResult a = run_binary("order --l 2 --p 7");
        BinaryResult b = run_binary("order --l 2 --p 3");
        if (a.status != 0 || a.out != "3\n" || b.status != 0 || b.out != "2\n")
            return false;
        const auto start = std::chrono::steady_clock::now();
        for (u64 p : kPrimesP)
            for (u64 l : kPrimesL) {
                if (p == l)
                    continue;
                const u64 ord = ord_mod(l, p);
                Factorization f = factor(cyclotomic_mod(p, l));
                if (f.factors.size() != (p - 1) / ord)
                    return false;
                for (const auto& part : f.factors)
                    if (static_cast<u64>(part.factor.degree()) != ord ||
                        part.multiplicity != 1)
                        return false;
            }
        return seconds_since(start) < 5.0;
    });

    criterion(3, "torsion minimal polynomial t^2+t+1 at p=3; cubic blocks at p=7", [] {
        if (minimal_polynomial(tau_on_torsion({3, 2, 2}).matrix) !=
            PolyFp(2, {1, 1, 1}))
            return false;
        auto parts = primary_decomposition(tau_on_torsion({7, 2, 2}).matrix);
        return parts.size() == 2 && parts[0].first == PolyFp(2, {1, 0, 1, 1}) &&
               parts[1].first == PolyFp(2, {1, 1, 0, 1}) &&
               parts[0].second.dim() == 3 && parts[1].second.dim() == 3;
    });

    criterion(4, "genus grid: closed form equals Riemann-Hurwitz, p<=23, s<=11", [] {
        for (u64 p : kPrimesP)
            for (u64 s = 1; s <= 11; ++s) {
                if (s % p == 0)
                    continue;
                const u64 g = artin_schreier_genus(p, s);
                if (g != (p - 1) * (s - 1) / 2)
                    return false;
                if (g != rh_genus_from_filtration(ramification_filtration(p, s)))
                    return false;
            }
        return true;
    });

    criterion(5, "jump grid: valuation s+1, coefficient -1/s, p<=13, prime s<=11", [] {
        for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
            for (u64 s : {2ull, 3ull, 5ull, 7ull, 11ull}) {
                if (s == p)
                    continue;
                JumpSeriesResult r = ramification_jump_series_check(p, s, 2 * s + 2);
                if (r.valuation != s + 1)
                    return false;
                if (r.leading_coeff != -FpElem(s, p).inverse())
                    return false;
            }
        return true;
    });

    criterion(6, "minimal genus values, each recomputed via the unramified route", [] {
        // minimal_genus cross-checks the two routes internally on every call;
        // the expected values are fixed here as well.
        if (minimal_genus(3, 2) != 1)
            return false;
        if (minimal_genus(7, 2) != 17)
            return false;
        if (minimal_genus(5, 2) != 17)
            return false;
        if (minimal_genus(5, 11) != 12)
            return false;
        for (u64 l : {3ull, 5ull, 7ull})
            if (minimal_genus(2, l) != 1)
                return false;
        // Explicit second route, independent of the closed form.
        if (unramified_cover_genus(artin_schreier_genus(7, 2), 2, ord_mod(2, 7)) != 17)
            return false;
        if (unramified_cover_genus(artin_schreier_genus(5, 2), 11, ord_mod(11, 5)) != 12)
            return false;
        return unramified_cover_genus(artin_schreier_genus(2, 3), 7, 1) == 1;
    });

    criterion(7, "class-count bounds match brute-force enumeration in under 10 s", [] {
        const auto start = std::chrono::steady_clock::now();
        if (class_count_bound(7, 2) != 2)
            return false;
        if (class_count_bound(3, 2) != 1)
            return false;
        if (class_count_bound(2, 3) != 4) // l + 1
            return false;
        struct Case {
            u64 p, l, expected;
        };
        for (Case c : {Case{7, 2, 2}, Case{3, 2, 1}, Case{2, 3, 4}}) {
            TauAction tau = tau_on_torsion({c.p, c.l, minimal_genus_exponent(c.p)});
            const u64 d = c.p == 2 ? 1 : ord_mod(c.l, c.p);
            auto slow =
                invariant_subspaces_of_dim(tau.matrix, d, SubspaceSearchMode::brute_force);
            if (slow.size() != c.expected)
                return false;
        }
        return seconds_since(start) < 10.0;
    });

    criterion(8, "quasi-p: canonical groups pass, direct products fail with closure p", [] {
        SemidirectDescriptor g1(2, 2, 3, order_p_element_glb(2, 2, 3).value());
        QuasiPResult r1 = quasi_p_check(g1);
        if (!r1.quasi_p || r1.closure_size != 12)
            return false;
        SemidirectDescriptor g2(2, 3, 7, order_p_element_glb(2, 3, 7).value());
        QuasiPResult r2 = quasi_p_check(g2);
        if (!r2.quasi_p || r2.closure_size != 56)
            return false;
        for (const auto& lbp : std::vector<std::array<u64, 3>>{
                 {2, 2, 3}, {2, 3, 7}, {3, 1, 2}, {5, 1, 3}, {3, 2, 5}}) {
            SemidirectDescriptor direct(lbp[0], lbp[1], lbp[2],
                                        MatrixFp::identity(lbp[1], lbp[0]));
            QuasiPResult r = quasi_p_check(direct);
            if (r.quasi_p || r.closure_size != lbp[2])
                return false;
        }
        return true;
    });

    criterion(9, "no eigenvalue 1 on the torsion action over the whole grid", [] {
        for (u64 p : kPrimesP)
            for (u64 l : kPrimesL) {
                if (p == l)
                    continue;
                // s = 2 for odd p; p = 2 needs s = 3 (s must avoid p).
                const u64 s = minimal_genus_exponent(p);
                if (has_eigenvalue_one(tau_on_torsion({p, l, s}).matrix))
                    return false;
            }
        return true;
    });

    criterion(10, "report --p 7 --l 2 --json --seed 0 is byte-identical across runs", [] {
        BinaryResult a = run_binary("report --p 7 --l 2 --json --seed 0");
        BinaryResult b = run_binary("report --p 7 --l 2 --json --seed 0");
        return a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    });

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
