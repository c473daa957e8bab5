// link_analysis.hpp
// Closure bookkeeping for braid words: link component counts, recognition of
// the registered example words, and text diagrams.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidq/braid_word.hpp"

namespace braidq {

struct ClosureSummary {
    int components = 0;
    int exponent_sum = 0;
    std::optional<std::string> named_match;  // the word matches, not a proof of link equivalence
};

struct RegisteredWord {
    std::string name;
    int strands;
    std::string text;
};

inline const std::vector<RegisteredWord>& registered_words() {
    static const std::vector<RegisteredWord> words{
        {"hopf", 2, "s1 s1"},
        {"borromean_word", 3, "s1 s2^-1 s1 s2^-1 s1 s2^-1"},
        {"nus_word", 3, "(s1 s2)^3"},
    };
    return words;
}

/// Components of the closure are the cycles of the permutation image. The
/// name is assigned by literal comparison of the freely reduced word with the
/// registered words.
inline ClosureSummary summarize_closure(const BraidWord& w) {
    ClosureSummary out;
    out.components = cycle_count(permutation_image(w));
    out.exponent_sum = exponent_sum(w);
    const BraidWord reduced = free_reduce(w);
    for (const auto& r : registered_words()) {
        if (r.strands != w.strands()) continue;
        if (reduced == parse_braid_word(r.text, r.strands)) {
            out.named_match = r.name;
            break;
        }
    }
    return out;
}

/// Draws the braid top to bottom, one three-row band per letter. sigma_i
/// crosses the strand at position i over the one at i+1; the under strand is
/// left broken at the crossing point.
inline std::string render_braid_ascii(const BraidWord& w, bool ascii_only = false) {
    if (w.strands() > 8) throw BraidError("render_braid_ascii: at most 8 strands");
    if (w.size() > 64) throw BraidError("render_braid_ascii: at most 64 letters");

    const std::string bar = ascii_only ? "|" : "│";
    const std::string down_right = ascii_only ? "\\" : "╲";
    const std::string down_left = ascii_only ? "/" : "╱";

    const int n = w.strands();
    const std::size_t width = static_cast<std::size_t>(4 * (n - 1) + 1);
    using Row = std::vector<std::string>;
    auto blank = [&] { return Row(width, " "); };
    auto bars = [&](int skip) {
        Row r = blank();
        for (int k = 1; k <= n; ++k)
            if (skip == 0 || (k != skip && k != skip + 1)) r[static_cast<std::size_t>(4 * (k - 1))] = bar;
        return r;
    };
    auto join = [](const Row& r) {
        std::string s;
        for (const auto& c : r) s += c;
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + "\n";
    };

    std::string out = "# " + std::to_string(n) + " strands, " + std::to_string(w.size()) +
                      " crossings; s_i: strand i passes over strand i+1, s_i^-1: under\n";
    Row labels = blank();
    for (int k = 1; k <= n; ++k) labels[static_cast<std::size_t>(4 * (k - 1))] = std::to_string(k);
    out += join(labels);
    out += join(bars(0));
    for (const auto& l : w.letters()) {
        const auto x = static_cast<std::size_t>(4 * (l.index - 1));
        Row top = bars(l.index), mid = bars(l.index), bottom = bars(l.index);
        top[x + 1] = down_right;
        top[x + 3] = down_left;
        mid[x + 2] = l.sign > 0 ? down_right : down_left;
        bottom[x + 1] = down_left;
        bottom[x + 3] = down_right;
        out += join(top) + join(mid) + join(bottom) + join(bars(0));
    }
    return out;
}

}  // namespace braidq
