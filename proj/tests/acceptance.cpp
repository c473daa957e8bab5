// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "braidq/braidq.hpp"

using namespace braidq;

namespace {

const double kPi = std::numbers::pi;

BraidWord W(const char* text, int strands) { return parse_braid_word(text, strands); }

double max_entry_diff(const CVector& a, const CVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_entry_diff(const CMatrix& a, const CMatrix& b) { return max_entry_diff(a.data(), b.data()); }

CVector scaled(Complex z, const CVector& v) {
    CVector out = v;
    for (auto& x : out) x *= z;
    return out;
}

BraidWord random_word(std::mt19937_64& rng, int strands, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> idx(1, strands - 1);
    std::bernoulli_distribution neg(0.5);
    std::vector<GeneratorLetter> letters;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) letters.push_back({idx(rng), neg(rng) ? -1 : 1});
    return BraidWord(strands, letters);
}

// tau = 4 det(rho_1) - C^2(1,2) - C^2(1,3), computed from reduced density matrices only.
double residual_tangle(const PureState& s) {
    const DensityMatrix rho = density(s);
    const CMatrix r1 = partial_trace(rho, {1}).matrix();
    const double one_vs_rest = 4.0 * std::abs(r1(0, 0) * r1(1, 1) - r1(0, 1) * r1(1, 0));
    const double c12 = concurrence_mixed2(partial_trace(rho, {1, 2}));
    const double c13 = concurrence_mixed2(partial_trace(rho, {1, 3}));
    return one_vs_rest - c12 * c12 - c13 * c13;
}

struct Check {
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

Check criterion1() {
    Check c;
    const std::vector<std::pair<std::string, Representation>> reps{
        {"b2", b2_rep(1.0)}, {"ge", ge_rep(1.0)}, {"jones", jones_rep()}};
    for (const auto& [name, rep] : reps) {
        const auto r = verify_relations(rep, 1e-12);
        c.require(r.passed && r.max_residual <= 1e-12, name + " max residual " + sci(r.max_residual));
    }
    return c;
}

Check criterion2() {
    Check c;
    for (double theta : {0.0, 1.0, kPi / 4}) {
        const CMatrix m = evaluate(b2_rep(theta), W("s1 s1", 2));
        const CMatrix expected = std::polar(1.0, 2.0 * theta) * CMatrix::identity(4);
        const double d = max_entry_diff(m, expected);
        c.require(d <= 1e-12, "s1 s1 at theta " + sci(theta) + " differs by " + sci(d));
    }
    const PureState out = apply(b2_rep(1.0).generator(1), basis_state("00"));
    const double ov = std::abs(overlap(named_state("bell"), out));
    c.require(std::abs(ov - 1.0) <= 1e-12, "|<bell|s1|00>| = " + sci(ov));
    return c;
}

Check criterion3() {
    Check c;
    c.require(closure_check(ge_rep(1.0), W("(s1 s2)^3", 3)).closes, "(s1 s2)^3 does not close");
    for (double theta : {0.0, 0.3, 1.0, 2.0}) {
        const PureState out = apply(evaluate(ge_rep(theta), W("s1 s2", 3)), basis_state("000"));
        const double d = max_entry_diff(out.amplitudes(), scaled(std::polar(1.0, 2.0 * theta), named_state("phi").amplitudes()));
        c.require(d <= 1e-12, "s1 s2|000> vs e^{2i theta}|phi> at theta " + sci(theta) + ": " + sci(d));
    }
    return c;
}

Check criterion4() {
    Check c;
    c.require(closure_check(jones_rep(), W("(s1 s2^-1)^3", 3)).closes, "(s1 s2^-1)^3 does not close");
    const PureState out = apply(evaluate(jones_rep(), W("s1 s2^-1", 3)), basis_state("000"));
    CVector expected(8, 0.0);
    expected[0] = expected[7] = Complex(0.5, 0.5);
    const double d = max_entry_diff(out.amplitudes(), expected);
    c.require(d <= 1e-12, "s1 s2^-1|000> differs by " + sci(d));
    return c;
}

Check criterion5() {
    Check c;
    for (const auto& e : residual_profile(named_state("ghz")).entries) {
        c.require(std::abs(e.probability - 0.5) <= 1e-12 && e.concurrence && *e.concurrence <= 1e-10,
                  "ghz entry " + std::to_string(e.qubit) + "/" + std::to_string(e.outcome));
    }
    for (const auto& e : residual_profile(named_state("phi")).entries) {
        c.require(std::abs(e.probability - 0.5) <= 1e-12 && e.concurrence && *e.concurrence >= 1.0 - 1e-10,
                  "phi entry " + std::to_string(e.qubit) + "/" + std::to_string(e.outcome));
    }
    return c;
}

Check criterion6() {
    Check c;
    const PureState ghz = named_state("ghz");
    const PureState phi = named_state("phi");
    const PureState image = apply_local(ghz, {lu_factor_v(), lu_factor_v(), lu_factor_v()});
    const double signed_diff = max_entry_diff(image.amplitudes(), scaled(-1.0, phi.amplitudes()));
    c.require(signed_diff <= 1e-12, "V|GHZ> = -|phi> fails, max |diff| " + sci(signed_diff) + " (V|GHZ> - |phi>: " +
                                        sci(max_entry_diff(image.amplitudes(), phi.amplitudes())) + ")");
    const double inv = max_difference(invariant_table(ghz), invariant_table(phi));
    c.require(inv <= 1e-10, "invariants differ by " + sci(inv));
    return c;
}

Check criterion7() {
    Check c;
    const struct {
        const char* text;
        int strands, components, exponent;
    } cases[] = {{"s1 s1", 2, 2, 2}, {"s1 s2^-1 s1 s2^-1 s1 s2^-1", 3, 3, 0}, {"(s1 s2)^3", 3, 3, 6}};
    for (const auto& k : cases) {
        const BraidWord w = W(k.text, k.strands);
        c.require(cycle_count(permutation_image(w)) == k.components, std::string(k.text) + " components");
        c.require(exponent_sum(w) == k.exponent, std::string(k.text) + " exponent sum");
    }
    return c;
}

Check criterion8() {
    Check c;
    const double tol = 1e-9;
    std::mt19937_64 rng(8);
    int failures = 0;

    const std::vector<Representation> reps{b2_rep(1.0), ge_rep(1.0), jones_rep()};
    for (const auto& rep : reps) {
        for (int t = 0; t < 200; ++t) {
            const BraidWord a = random_word(rng, rep.strands(), 10);
            const BraidWord b = random_word(rng, rep.strands(), 10);
            if (frobenius_distance(evaluate(rep, concat(a, b)), evaluate(rep, a) * evaluate(rep, b)) > tol) ++failures;
        }
    }
    c.require(failures == 0, std::to_string(failures) + " homomorphism failures");

    failures = 0;
    std::bernoulli_distribution flip(0.5);
    for (int t = 0; t < 100; ++t) {
        const Representation& rep = t % 2 ? reps[1] : reps[2];
        const BraidWord pre = random_word(rng, 3, 6), post = random_word(rng, 3, 6);
        const bool fwd = flip(rng);
        const BraidWord lhs = concat(concat(pre, W(fwd ? "s1 s2 s1" : "s2 s1 s2", 3)), post);
        const BraidWord rhs = concat(concat(pre, W(fwd ? "s2 s1 s2" : "s1 s2 s1", 3)), post);
        if (frobenius_distance(evaluate(rep, lhs), evaluate(rep, rhs)) > tol) ++failures;
    }
    c.require(failures == 0, std::to_string(failures) + " braiding rewrite failures");

    failures = 0;
    for (int t = 0; t < 200; ++t) {
        const PureState s = random_state(3, rng);
        for (int k = 1; k <= 3; ++k) {
            double total = 0.0;
            for (int b = 0; b <= 1; ++b) {
                try {
                    const auto m = measure_qubit(s, k, b);
                    total += m.probability;
                    if (std::abs(vector_norm(m.post_state.amplitudes()) - 1.0) > tol) ++failures;
                } catch (const ImpossibleOutcome&) {
                }
            }
            if (std::abs(total - 1.0) > tol) ++failures;
        }
    }
    c.require(failures == 0, std::to_string(failures) + " measurement completeness failures");

    failures = 0;
    const std::vector<std::vector<int>> cuts{{1}, {2}, {3}};
    for (int t = 0; t < 100; ++t) {
        const PureState s = random_state(3, rng);
        const PureState u = apply_local(s, {random_unitary2(rng), random_unitary2(rng), random_unitary2(rng)});
        if (max_difference(invariant_table(s), invariant_table(u)) > tol) ++failures;
        for (const auto& cut : cuts) {
            const auto a = schmidt_coefficients(s, cut), b = schmidt_coefficients(u, cut);
            if (a.size() != b.size()) {
                ++failures;
                continue;
            }
            for (std::size_t i = 0; i < a.size(); ++i)
                if (std::abs(a[i] - b[i]) > tol) ++failures;
        }
    }
    c.require(failures == 0, std::to_string(failures) + " local-unitary invariance failures");
    return c;
}

Check criterion9() {
    Check c;
    const struct {
        const char* name;
        double expected;
    } fixed[] = {{"ghz", 1.0}, {"phi", 1.0}, {"w", 0.0}};
    for (const auto& f : fixed) {
        const PureState s = named_state(f.name);
        const double closed = three_tangle(s), oracle = residual_tangle(s);
        c.require(std::abs(closed - oracle) <= 1e-8 && std::abs(closed - f.expected) <= 1e-8,
                  std::string(f.name) + ": tangle " + sci(closed) + ", oracle " + sci(oracle));
    }
    std::mt19937_64 rng(9);
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
        const PureState s = random_state(3, rng);
        if (std::abs(three_tangle(s) - residual_tangle(s)) > 1e-8) ++failures;
    }
    c.require(failures == 0, std::to_string(failures) + " random-state mismatches");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"relation verification (b2, ge, jones; residual <= 1e-12)", criterion1},
        {"B2 closure phase and Bell state from s1|00>", criterion2},
        {"ge: (s1 s2)^3 closes, s1 s2|000> = e^{2i theta}|phi>", criterion3},
        {"jones: (s1 s2^-1)^3 closes, s1 s2^-1|000> = ((1+i)/2)(|000>+|111>)", criterion4},
        {"residual profiles of GHZ (0) and phi (1)", criterion5},
        {"V|GHZ> = -|phi> with sign; GHZ and phi invariants agree", criterion6},
        {"closure components and exponent sums", criterion7},
        {"randomized property suites at 1e-9", criterion8},
        {"three-tangle vs residual-tangle oracle within 1e-8", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %zu: %s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first);
        for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
        if (!c.ok) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
