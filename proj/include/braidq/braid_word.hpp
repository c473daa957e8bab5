// braid_word.hpp
// Braid words over n strands, free-group word algebra, and the projection of
// B_n onto the symmetric group S_n used for link closure bookkeeping.
//
// Strand and generator indices are 1-based, as in sigma_1, sigma_2.

#pragma once

#include <cctype>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidq {

struct GeneratorLetter {
    int index = 1;  // i of sigma_i, >= 1
    int sign = 1;   // +1 or -1

    GeneratorLetter inverted() const { return {index, -sign}; }
    friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

class BraidError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Syntax or range error in braid word text; position is a byte offset.
class ParseError : public BraidError {
public:
    ParseError(const std::string& what, std::size_t position)
        : BraidError(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class BraidWord {
public:
    explicit BraidWord(int strands) : strands_(strands) {
        if (strands < 2) throw BraidError("BraidWord: need at least 2 strands");
    }

    BraidWord(int strands, std::vector<GeneratorLetter> letters) : BraidWord(strands) {
        for (const auto& l : letters) check_letter(l);
        letters_ = std::move(letters);
    }

    static BraidWord identity(int strands) { return BraidWord(strands); }

    int strands() const { return strands_; }
    const std::vector<GeneratorLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    void check_letter(const GeneratorLetter& l) const {
        if (l.index < 1 || l.index > strands_ - 1) {
            throw BraidError("generator index " + std::to_string(l.index) + " out of range 1.." +
                             std::to_string(strands_ - 1));
        }
        if (l.sign != 1 && l.sign != -1) throw BraidError("exponent sign must be +1 or -1");
    }

    int strands_;
    std::vector<GeneratorLetter> letters_;
};

namespace detail {

// Recursive-descent parser for
//   word  := item*
//   item  := atom power?
//   atom  := ("s" | "σ") integer | "(" word ")"
//   power := "^" signed-integer
class WordParser {
public:
    WordParser(std::string_view text, int strands) : text_(text), strands_(strands) {}

    std::vector<GeneratorLetter> parse() {
        auto letters = parse_word();
        skip_space();
        if (pos_ < text_.size()) {
            throw ParseError(text_[pos_] == ')' ? "unmatched ')'" : "unexpected character '" + std::string(1, text_[pos_]) + "'",
                             pos_);
        }
        return letters;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_sigma() const {
        // U+03C3 GREEK SMALL LETTER SIGMA is 0xCF 0x83 in UTF-8.
        return pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xCF &&
               static_cast<unsigned char>(text_[pos_ + 1]) == 0x83;
    }

    long parse_unsigned(const char* what) {
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) throw ParseError(std::string(what) + " too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
        return value;
    }

    std::vector<GeneratorLetter> parse_word() {
        std::vector<GeneratorLetter> out;
        for (;;) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] == ')') return out;
            auto item = parse_item();
            out.insert(out.end(), item.begin(), item.end());
        }
    }

    std::vector<GeneratorLetter> parse_item() {
        std::vector<GeneratorLetter> atom;
        const char c = text_[pos_];
        if (c == 's' || c == 'S' || at_sigma()) {
            const std::size_t start = pos_;
            pos_ += (c == 's' || c == 'S') ? 1 : 2;
            const long index = parse_unsigned("generator index");
            if (index < 1 || index > strands_ - 1) {
                throw ParseError("generator index " + std::to_string(index) + " out of range 1.." +
                                     std::to_string(strands_ - 1),
                                 start);
            }
            atom.push_back({static_cast<int>(index), 1});
        } else if (c == '(') {
            const std::size_t open = pos_++;
            atom = parse_word();
            if (pos_ >= text_.size()) throw ParseError("unclosed '('", open);
            ++pos_;  // ')'
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
        }

        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_space();
            int sign = 1;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
            }
            const long k = parse_unsigned("exponent");
            return power(atom, sign * k);
        }
        return atom;
    }

    static std::vector<GeneratorLetter> power(const std::vector<GeneratorLetter>& w, long k) {
        std::vector<GeneratorLetter> base = w;
        if (k < 0) {
            base.assign(w.rbegin(), w.rend());
            for (auto& l : base) l.sign = -l.sign;
            k = -k;
        }
        std::vector<GeneratorLetter> out;
        out.reserve(base.size() * static_cast<std::size_t>(k));
        for (long r = 0; r < k; ++r) out.insert(out.end(), base.begin(), base.end());
        return out;
    }

    std::string_view text_;
    int strands_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses braid word text such as "s1 s2^-1", "(s1 s2)^3" or "σ1 σ2".
/// Powers and parenthesised groups are expanded eagerly; (w)^-k is the
/// inverse of w repeated k times and any ^0 expands to nothing.
inline BraidWord parse_braid_word(std::string_view text, int strands) {
    if (strands < 2) throw BraidError("parse_braid_word: need at least 2 strands");
    return BraidWord(strands, detail::WordParser(text, strands).parse());
}

// ASCII form, e.g. "s1 s2^-1". Identity renders as "".
inline std::string render(const BraidWord& w) {
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(l.index);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw BraidError("concat: strand counts differ");
    std::vector<GeneratorLetter> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

inline BraidWord inverse(const BraidWord& w) {
    std::vector<GeneratorLetter> letters;
    letters.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(it->inverted());
    return BraidWord(w.strands(), std::move(letters));
}

// Free cancellation of sigma_i sigma_i^-1 pairs only; the braid relation is never applied.
inline BraidWord free_reduce(const BraidWord& w) {
    std::vector<GeneratorLetter> stack;
    for (const auto& l : w.letters()) {
        if (!stack.empty() && stack.back() == l.inverted()) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return BraidWord(w.strands(), std::move(stack));
}

inline int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (const auto& l : w.letters()) s += l.sign;
    return s;
}

class Permutation {
public:
    explicit Permutation(int size) : images_(static_cast<std::size_t>(size)) {
        if (size < 1) throw BraidError("Permutation: size must be positive");
        std::iota(images_.begin(), images_.end(), 1);
    }

    // images[k] is the image of point k+1; must be a bijection of 1..n.
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        if (n < 1) throw BraidError("Permutation: size must be positive");
        std::vector<bool> seen(images_.size(), false);
        for (int x : images_) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) {
                throw BraidError("Permutation: images are not a bijection of 1.." + std::to_string(n));
            }
            seen[static_cast<std::size_t>(x - 1)] = true;
        }
    }

    static Permutation identity(int size) { return Permutation(size); }

    // Adjacent transposition s_i exchanging i and i+1.
    static Permutation transposition(int size, int i) {
        if (i < 1 || i >= size) throw BraidError("transposition index out of range");
        Permutation p(size);
        std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t k = 0; k < images_.size(); ++k) inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
        return Permutation(std::move(inv));
    }

    bool is_identity() const {
        for (std::size_t k = 0; k < images_.size(); ++k)
            if (images_[k] != static_cast<int>(k + 1)) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Product of two permutations with the left operand acting first:
/// result(x) = q(p(x)). This is the rule that makes
/// (1 2 3 4 -> 3 1 2 4)(1 2 3 4 -> 1 3 2 4) = (1 2 3 4 -> 2 1 3 4).
inline Permutation compose_permutations(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw BraidError("compose_permutations: size mismatch");
    std::vector<int> out(static_cast<std::size_t>(p.size()));
    for (int x = 1; x <= p.size(); ++x) out[static_cast<std::size_t>(x - 1)] = q(p(x));
    return Permutation(std::move(out));
}

// sigma_i^{+1} and sigma_i^{-1} both map to s_i; letters compose in word order.
inline Permutation permutation_image(const BraidWord& w) {
    Permutation p = Permutation::identity(w.strands());
    for (const auto& l : w.letters()) {
        p = compose_permutations(p, Permutation::transposition(w.strands(), l.index));
    }
    return p;
}

// Disjoint cycles, fixed points included.
inline int cycle_count(const Permutation& p) {
    std::vector<bool> visited(static_cast<std::size_t>(p.size()), false);
    int cycles = 0;
    for (int start = 1; start <= p.size(); ++start) {
        if (visited[static_cast<std::size_t>(start - 1)]) continue;
        ++cycles;
        for (int x = start; !visited[static_cast<std::size_t>(x - 1)]; x = p(x)) visited[static_cast<std::size_t>(x - 1)] = true;
    }
    return cycles;
}

}  // namespace braidq
