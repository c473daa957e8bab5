// commands.hpp
// Subcommands of the braidq command line tool. Each command writes its result
// to `out` (text or a single JSON document) and diagnostics to `err`, and
// returns the process exit code: 0 success, 1 check failed, 2 usage/input error.

#pragma once

#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "braidq/braidq.hpp"
#include "braidq/io.hpp"

namespace braidq::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
    std::string command;
    std::string rep_name;
    double theta = 1.0;
    std::string word_text;
    int strands = 0;  // 0: taken from the representation or inferred from the word
    std::string state_input;
    double tolerance = kDefaultTol;
    std::string output_format = "text";
    unsigned seed = 0;
    std::string factors = "v";
    bool diagram = false;
    bool ascii_only = false;
};

// Raised for bad user input; reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string fmt(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

inline std::string fmt(const Complex& z) {
    std::string s = fmt(z.real(), 6);
    const double im = z.imag();
    s += (im < 0 || std::signbit(im)) ? " - " : " + ";
    s += fmt(std::abs(im), 6) + "i";
    return s;
}

inline bool json_output(const RunConfig& c) { return c.output_format == "json"; }

inline void validate(const RunConfig& c) {
    if (!(c.tolerance > 0)) throw UsageError("--tol must be positive");
    if (c.strands != 0 && (c.strands < 2 || c.strands > 8)) throw UsageError("--strands must be in [2, 8]");
    if (c.output_format != "json" && c.output_format != "text") throw UsageError("--format must be json or text");
}

inline Representation load_rep(const RunConfig& c, std::ostream& err) {
    if (c.rep_name.empty()) throw UsageError("--rep is required (b2, ge or jones)");
    Representation rep = representation_by_name(c.rep_name, c.theta);
    if (c.strands != 0 && c.strands != rep.strands()) {
        throw UsageError("--strands " + std::to_string(c.strands) + " does not match representation '" + rep.name() +
                         "' on " + std::to_string(rep.strands()) + " strands");
    }
    for (const auto& w : rep.warnings()) err << "warning: " << w << "\n";
    return rep;
}

// Strand count for commands without a representation: --strands, or one more
// than the largest generator index in the text (at least 2).
inline int infer_strands(const RunConfig& c) {
    if (c.strands != 0) return c.strands;
    int highest = 1;
    const BraidWord w = parse_braid_word(c.word_text, 9);
    for (const auto& l : w.letters()) highest = std::max(highest, l.index);
    return std::min(highest + 1, 8);
}

inline PureState load_state(const RunConfig& c, int qubits) {
    if (c.state_input.empty()) return basis_state(std::string(static_cast<std::size_t>(qubits), '0'));
    PureState s = [&] {
        if (c.state_input.front() == '@') {
            json j = read_json_file(c.state_input.substr(1));
            if (j.is_object() && j.contains("state")) j = j.at("state");
            return state_from_json(j);
        }
        return basis_state(c.state_input);
    }();
    if (s.qubits() != qubits) {
        throw UsageError("state has " + std::to_string(s.qubits()) + " qubits, representation acts on " +
                         std::to_string(qubits));
    }
    return s;
}

inline json parameters_json(const Representation& rep) {
    json p = json::object();
    for (const auto& [k, v] : rep.parameters()) p[k] = v.imag() == 0.0 ? json(v.real()) : to_json(v);
    return p;
}

inline void print_matrix(std::ostream& out, const CMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << fmt(m(i, j));
        out << "]\n";
    }
}

inline std::vector<CMatrix> load_factors(const RunConfig& c) {
    if (c.factors == "v") return {lu_factor_v(), lu_factor_v(), lu_factor_v()};
    if (c.factors == "identity") return {CMatrix::identity(2), CMatrix::identity(2), CMatrix::identity(2)};
    if (c.factors == "random-unitary") {
        std::mt19937_64 rng(c.seed);
        return {random_unitary2(rng), random_unitary2(rng), random_unitary2(rng)};
    }
    if (!c.factors.empty() && c.factors.front() == '@') {
        const json j = read_json_file(c.factors.substr(1));
        // A single 2x2 matrix is used on every qubit; otherwise a list of three.
        if (j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[0][0].is_array() &&
            !j[0][0].empty() && j[0][0][0].is_number()) {
            const CMatrix f = matrix_from_json(j);
            return {f, f, f};
        }
        if (!j.is_array() || j.size() != 3) throw UsageError("--factors file must hold one 2x2 matrix or a list of three");
        return {matrix_from_json(j[0]), matrix_from_json(j[1]), matrix_from_json(j[2])};
    }
    throw UsageError("--factors must be v, identity, random-unitary or @file.json");
}

}  // namespace detail

inline int cmd_relations(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Representation rep = detail::load_rep(c, err);
    const RelationReport report = verify_relations(rep, c.tolerance);
    if (detail::json_output(c)) {
        out << json{{"command", "relations"},
                    {"representation", rep.name()},
                    {"strands", rep.strands()},
                    {"parameters", detail::parameters_json(rep)},
                    {"report", to_json(report)}}
                   .dump(2)
            << "\n";
    } else {
        out << "representation: " << rep.name() << " (B" << rep.strands() << ", dimension " << rep.dimension() << ")\n";
        if (report.far_commutation.empty() && report.braiding.empty()) {
            out << "no defining relations to check on " << rep.strands() << " strands\n";
        }
        for (const auto& r : report.far_commutation) {
            out << "far commutation s" << r.i << " s" << r.j << ": residual " << detail::fmt(r.residual, 3) << "\n";
        }
        for (const auto& r : report.braiding) {
            out << "braiding s" << r.i << " s" << r.i + 1 << " s" << r.i << " = s" << r.i + 1 << " s" << r.i << " s"
                << r.i + 1 << ": residual " << detail::fmt(r.residual, 3) << "\n";
        }
        out << "max residual " << detail::fmt(report.max_residual, 3) << " (tol " << detail::fmt(report.tolerance, 3)
            << "): " << (report.passed ? "PASS" : "FAIL") << "\n";
    }
    return report.passed ? kOk : kCheckFailed;
}

inline int cmd_eval(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Representation rep = detail::load_rep(c, err);
    const BraidWord w = parse_braid_word(c.word_text, rep.strands());
    const CMatrix m = evaluate(rep, w);
    const ClosureResult closure = closure_check(rep, w, c.tolerance);
    if (detail::json_output(c)) {
        out << json{{"command", "eval"},
                    {"representation", rep.name()},
                    {"parameters", detail::parameters_json(rep)},
                    {"word", render(w)},
                    {"matrix", to_json(m)},
                    {"unitary", is_unitary(m, c.tolerance)},
                    {"closes", closure.closes},
                    {"phase", closure.phase ? json(*closure.phase) : json(nullptr)}}
                   .dump(2)
            << "\n";
    } else {
        out << "representation: " << rep.name() << "\nword: " << (w.empty() ? "(identity)" : render(w)) << "\n";
        out << "matrix (" << m.rows() << "x" << m.cols() << "):\n";
        detail::print_matrix(out, m);
        out << "closes: " << (closure.closes ? "true" : "false");
        if (closure.phase) out << " (phase " << detail::fmt(*closure.phase) << " rad)";
        out << "\n";
    }
    return kOk;
}

inline int cmd_entangle(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Representation rep = detail::load_rep(c, err);
    const BraidWord w = parse_braid_word(c.word_text, rep.strands());
    const PureState input = detail::load_state(c, rep.strands());
    const PureState result = apply(evaluate(rep, w), input);

    json matches = json::array();
    std::string best;
    for (const char* name : {"ghz", "phi", "bell"}) {
        const PureState target = named_state(name);
        if (target.qubits() != result.qubits()) continue;
        const double mod = std::abs(overlap(target, result));
        const bool match = mod >= 1.0 - c.tolerance;
        if (match && best.empty()) best = name;
        matches.push_back({{"name", name}, {"overlap", mod}, {"match", match}});
    }

    json analysis = json::object();
    if (result.qubits() == 3) {
        analysis["residual_profile"] = to_json(residual_profile(result));
        analysis["three_tangle"] = three_tangle(result);
        analysis["invariants"] = to_json(invariant_table(result));
    } else if (result.qubits() == 2) {
        analysis["concurrence"] = concurrence_pure2(result);
        analysis["entropy_qubit1"] = vn_entropy(partial_trace(density(result), {1}));
    }

    if (detail::json_output(c)) {
        out << json{{"command", "entangle"},
                    {"representation", rep.name()},
                    {"word", render(w)},
                    {"input", to_json(input)},
                    {"state", to_json(result)},
                    {"matches", matches},
                    {"match", best.empty() ? json(nullptr) : json(best)},
                    {"analysis", analysis}}
                   .dump(2)
            << "\n";
        return kOk;
    }

    out << "representation: " << rep.name() << "\nword: " << (w.empty() ? "(identity)" : render(w)) << "\n";
    out << "output amplitudes:\n";
    for (std::size_t i = 0; i < result.dimension(); ++i) {
        if (std::abs(result[i]) < 1e-12) continue;
        std::string bits;
        for (int k = result.qubits() - 1; k >= 0; --k) bits += ((i >> k) & 1U) ? '1' : '0';
        out << "  |" << bits << ">: " << detail::fmt(result[i]) << "\n";
    }
    for (const auto& m : matches) {
        out << "overlap with " << m["name"].get<std::string>() << ": " << detail::fmt(m["overlap"].get<double>())
            << (m["match"].get<bool>() ? "  (match up to phase)" : "") << "\n";
    }
    if (result.qubits() == 3) {
        out << "three-tangle: " << detail::fmt(analysis["three_tangle"].get<double>()) << "\n";
        out << "residual profile (measure qubit k, outcome b -> concurrence of remaining pair):\n";
        for (const auto& e : residual_profile(result).entries) {
            out << "  qubit " << e.qubit << " outcome " << e.outcome << ": p = " << detail::fmt(e.probability, 6)
                << ", C = " << (e.concurrence ? detail::fmt(*e.concurrence, 6) : std::string("n/a")) << "\n";
        }
    } else if (result.qubits() == 2) {
        out << "concurrence: " << detail::fmt(analysis["concurrence"].get<double>()) << "\n";
    }
    return kOk;
}

/// Applies local factors (by default v (x) v (x) v) to GHZ and compares the
/// image with phi: signed equality with -|phi>, equality up to phase, the
/// local-unitary invariants, and the computational-basis residual profiles.
inline int cmd_lu_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    (void)err;
    const std::vector<CMatrix> factors = detail::load_factors(c);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].rows() != 2 || factors[k].cols() != 2 || !is_unitary(factors[k], c.tolerance)) {
            throw UsageError("factor " + std::to_string(k + 1) + " is not a 2x2 unitary");
        }
    }
    const PureState ghz = named_state("ghz");
    const PureState phi = named_state("phi");
    const PureState image = apply_local(ghz, factors);

    CVector minus_phi = phi.amplitudes();
    for (auto& a : minus_phi) a = -a;
    double signed_distance = 0.0;
    for (std::size_t i = 0; i < minus_phi.size(); ++i) signed_distance = std::max(signed_distance, std::abs(image[i] - minus_phi[i]));
    const Complex ov_phi = overlap(phi, image);
    const bool phi_up_to_phase = std::abs(ov_phi) >= 1.0 - c.tolerance;
    const bool is_default = c.factors == "v";
    const bool signed_ok = signed_distance <= 1e-12;

    const InvariantTable t_ghz = invariant_table(ghz);
    const InvariantTable t_image = invariant_table(image);
    const InvariantTable t_phi = invariant_table(phi);
    const double lu_diff = max_difference(t_ghz, t_image);
    const double ghz_phi_diff = max_difference(t_ghz, t_phi);
    const bool invariants_ok = lu_diff <= c.tolerance;

    const ResidualProfile p_ghz = residual_profile(ghz);
    const ResidualProfile p_phi = residual_profile(phi);
    const ResidualProfile p_image = residual_profile(image);

    const bool passed = invariants_ok && (!is_default || signed_ok);

    if (detail::json_output(c)) {
        json fs = json::array();
        for (const auto& f : factors) fs.push_back(to_json(f));
        out << json{{"command", "lu-check"},
                    {"factors", fs},
                    {"image", to_json(image)},
                    {"signed_equal_minus_phi", {{"checked", is_default}, {"max_abs_diff", signed_distance}, {"holds", signed_ok}}},
                    {"phi_up_to_phase", {{"holds", phi_up_to_phase}, {"phase", phi_up_to_phase ? json(std::arg(ov_phi)) : json(nullptr)}}},
                    {"image_equals_ghz", std::abs(std::abs(overlap(ghz, image)) - 1.0) <= c.tolerance},
                    {"invariants", {{"ghz", to_json(t_ghz)}, {"image", to_json(t_image)}, {"phi", to_json(t_phi)}}},
                    {"invariant_max_diff", {{"ghz_vs_image", lu_diff}, {"ghz_vs_phi", ghz_phi_diff}}},
                    {"residual_profiles", {{"ghz", to_json(p_ghz)}, {"image", to_json(p_image)}, {"phi", to_json(p_phi)}}},
                    {"passed", passed}}
                   .dump(2)
            << "\n";
        return passed ? kOk : kCheckFailed;
    }

    out << "local factors: " << c.factors << "\n";
    if (is_default) {
        out << "V|GHZ> = -|phi> (sign included): " << (signed_ok ? "holds" : "does NOT hold")
            << " (max |diff| " << detail::fmt(signed_distance, 3) << ")\n";
    }
    out << "V|GHZ> equals |phi> up to phase: " << (phi_up_to_phase ? "yes" : "no");
    if (phi_up_to_phase) out << " (phase " << detail::fmt(std::arg(ov_phi), 6) << " rad)";
    out << "\n\n";

    out << "local-unitary invariants          GHZ        V|GHZ>     phi\n";
    auto row = [&](const std::string& label, double a, double b, double p) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %-30s %-10.6f %-10.6f %.6f\n", label.c_str(), a, b, p);
        out << buf;
    };
    for (std::size_t k = 0; k < 3; ++k) {
        row("entropy S(" + std::to_string(k + 1) + ") [bits]", t_ghz.entropies[k], t_image.entropies[k], t_phi.entropies[k]);
    }
    const char* pairs[] = {"C(1,2)", "C(1,3)", "C(2,3)"};
    for (std::size_t k = 0; k < 3; ++k) {
        row(std::string("concurrence ") + pairs[k], t_ghz.concurrences[k], t_image.concurrences[k], t_phi.concurrences[k]);
    }
    row("three-tangle", t_ghz.three_tangle, t_image.three_tangle, t_phi.three_tangle);
    out << "max invariant difference GHZ vs V|GHZ>: " << detail::fmt(lu_diff, 3) << "\n\n";

    out << "computational-basis residual profiles (concurrence after measuring qubit k):\n";
    out << "  qubit/outcome   GHZ        phi\n";
    for (std::size_t i = 0; i < p_ghz.entries.size(); ++i) {
        const auto& g = p_ghz.entries[i];
        const auto& p = p_phi.entries[i];
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %d/%d             %-10.6f %.6f\n", g.qubit, g.outcome, g.concurrence.value_or(0.0),
                      p.concurrence.value_or(0.0));
        out << buf;
    }
    out << "invariants agree under local unitaries; the measurement profiles do not.\n";
    out << (passed ? "PASS" : "FAIL") << "\n";
    return passed ? kOk : kCheckFailed;
}

inline int cmd_links(const RunConfig& c, std::ostream& out, std::ostream&) {
    const int n = detail::infer_strands(c);
    const BraidWord w = parse_braid_word(c.word_text, n);
    const ClosureSummary s = summarize_closure(w);
    const bool trivial = free_reduce(w).empty();
    if (detail::json_output(c)) {
        json j{{"command", "links"},
               {"word", render(w)},
               {"strands", n},
               {"components", s.components},
               {"exponent_sum", s.exponent_sum},
               {"named_match", s.named_match ? json(*s.named_match) : json(nullptr)},
               {"freely_trivial", trivial}};
        if (c.diagram) j["diagram"] = render_braid_ascii(w, c.ascii_only);
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "word: " << (w.empty() ? "(identity)" : render(w)) << " on " << n << " strands\n";
    out << "closure components: " << s.components << "\n";
    out << "exponent sum: " << s.exponent_sum << "\n";
    if (s.named_match) {
        out << "word matches: " << *s.named_match << "\n";
    } else if (trivial) {
        out << "word is freely trivial: closure is the " << n << "-component unlink\n";
    } else {
        out << "word matches: none\n";
    }
    if (c.diagram) out << render_braid_ascii(w, c.ascii_only);
    return kOk;
}

inline int cmd_render(const RunConfig& c, std::ostream& out, std::ostream&) {
    const int n = detail::infer_strands(c);
    const BraidWord w = parse_braid_word(c.word_text, n);
    const std::string diagram = render_braid_ascii(w, c.ascii_only);
    if (detail::json_output(c)) {
        out << json{{"command", "render"}, {"word", render(w)}, {"strands", n}, {"diagram", diagram}}.dump(2) << "\n";
    } else {
        out << diagram;
    }
    return kOk;
}

/// Runs one command; any input error is reported on `err` with exit code 2.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        detail::validate(c);
        if (c.command == "relations") return cmd_relations(c, out, err);
        if (c.command == "eval") return cmd_eval(c, out, err);
        if (c.command == "entangle") return cmd_entangle(c, out, err);
        if (c.command == "lu-check") return cmd_lu_check(c, out, err);
        if (c.command == "links") return cmd_links(c, out, err);
        if (c.command == "render") return cmd_render(c, out, err);
        throw UsageError("unknown command '" + c.command + "'");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace braidq::cli
