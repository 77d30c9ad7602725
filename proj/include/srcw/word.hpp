#ifndef SRCW_WORD_HPP
#define SRCW_WORD_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace srcw {

/// Finite word over the two-letter alphabet {a, b}. May be empty.
class Word {
public:
    Word() = default;

    /// Parses a plain string; any character other than 'a' or 'b' is an error.
    static Word parse(const std::string& text) {
        for (char c : text)
            if (c != 'a' && c != 'b')
                throw std::invalid_argument("word may only contain 'a' and 'b'");
        Word w;
        w.text_ = text;
        return w;
    }

    const std::string& str() const { return text_; }
    std::size_t size() const { return text_.size(); }
    bool empty() const { return text_.empty(); }
    char operator[](std::size_t i) const { return text_[i]; }

    /// 0 for 'a', 1 for 'b'.
    int letter(std::size_t i) const { return text_[i] == 'a' ? 0 : 1; }

    /// Image under the a<->b swap.
    Word mirrored() const {
        Word w;
        w.text_.reserve(text_.size());
        for (char c : text_) w.text_.push_back(c == 'a' ? 'b' : 'a');
        return w;
    }

    bool operator==(const Word& o) const { return text_ == o.text_; }
    bool operator<(const Word& o) const { return text_ < o.text_; }

private:
    std::string text_;
};

enum class WordClass { T1, T2, T3, T4 };

inline const char* to_string(WordClass c) {
    switch (c) {
        case WordClass::T1: return "T1";
        case WordClass::T2: return "T2";
        case WordClass::T3: return "T3";
        case WordClass::T4: return "T4";
    }
    return "?";
}

/// T1: x^k (k >= 0).  T2: x^k y (k >= 1).  T3: x^l y^k (l >= 1, k >= 2).
/// T4: everything else.  x, y range over both letter orders.
inline WordClass classify(const Word& w) {
    const std::string& s = w.str();
    if (s.empty()) return WordClass::T1;
    std::size_t run = 1;
    while (run < s.size() && s[run] == s[0]) ++run;
    if (run == s.size()) return WordClass::T1;
    // s = x^run followed by at least one opposite letter
    std::size_t rest = s.size() - run;
    char y = s[run];
    for (std::size_t i = run; i < s.size(); ++i)
        if (s[i] != y) return WordClass::T4;
    if (rest == 1) return WordClass::T2;
    return WordClass::T3;
}

inline std::set<Word> prefixes(const Word& w) {
    std::set<Word> out;
    for (std::size_t len = 0; len <= w.size(); ++len)
        out.insert(Word::parse(w.str().substr(0, len)));
    return out;
}

inline std::set<Word> suffixes(const Word& w) {
    std::set<Word> out;
    for (std::size_t start = 0; start <= w.size(); ++start)
        out.insert(Word::parse(w.str().substr(start)));
    return out;
}

inline std::set<Word> factors(const Word& w) {
    std::set<Word> out;
    out.insert(Word());
    for (std::size_t start = 0; start < w.size(); ++start)
        for (std::size_t len = 1; start + len <= w.size(); ++len)
            out.insert(Word::parse(w.str().substr(start, len)));
    return out;
}

/// Literal evaluation of the two sufficient conditions for SRCW
/// NP-completeness on strongly connected graphs:
///   1. w = x wbar x (first letter equals last letter);
///   2. w = x wbar y with x != y, and for some k,l >= 1:
///      x^k y^l x is a factor of w, x^{k+1} is not, y^{l+1} is not.
/// Reports the statement as written; the operational incompleteness check for
/// D(w) lives with the sink devices and may disagree (w = abab).
inline bool theorem10_applicable(const Word& w) {
    if (classify(w) != WordClass::T4)
        throw std::invalid_argument("theorem10_applicable requires a T4 word");
    char x = w[0];
    char last = w[w.size() - 1];
    if (x == last) return true;
    char y = last;
    auto fac = factors(w);
    auto has = [&](const std::string& s) { return fac.count(Word::parse(s)) > 0; };
    // factor lengths are bounded by |w|, so k and l need not range further
    for (std::size_t k = 1; k <= w.size(); ++k) {
        if (has(std::string(k + 1, x))) continue;
        for (std::size_t l = 1; l + k + 1 <= w.size(); ++l) {
            if (has(std::string(l + 1, y))) continue;
            std::string probe = std::string(k, x) + std::string(l, y) + x;
            if (has(probe)) return true;
        }
    }
    return false;
}

}  // namespace srcw

#endif  // SRCW_WORD_HPP
