#pragma once

#include <string>
#include <string_view>

namespace annot {

namespace detail {

// Working state for one stemming pass. Indices follow the classic
// formulation: k is the last character of the current word, j marks the end
// of the stem left by the most recent successful suffix match.
class PorterRun {
public:
    explicit PorterRun(std::string_view word) : b_(word), k_(static_cast<int>(word.size()) - 1) {}

    std::string run() {
        if (k_ <= 1) return b_; // words of length <= 2 are left alone
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5();
        return b_;
    }

private:
    std::string b_;
    int k_ = -1;
    int j_ = 0;

    bool cons(int i) const {
        switch (b_[static_cast<std::size_t>(i)]) {
            case 'a': case 'e': case 'i': case 'o': case 'u': return false;
            case 'y': return i == 0 ? true : !cons(i - 1);
            default: return true;
        }
    }

    // Number of consonant-vowel-consonant transitions ("measure") in b[0..j].
    int measure() const {
        int n = 0;
        int i = 0;
        for (;;) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        for (;;) {
            for (;;) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            for (;;) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_cons(int i) const {
        return i >= 1 && b_[static_cast<std::size_t>(i)] == b_[static_cast<std::size_t>(i - 1)] &&
               cons(i);
    }

    // consonant-vowel-consonant ending at i, last consonant not w, x or y.
    bool ends_cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        const char c = b_[static_cast<std::size_t>(i)];
        return c != 'w' && c != 'x' && c != 'y';
    }

    // Suffix test; on success j is set to the end of the remaining stem.
    bool ends(std::string_view s) {
        const int len = static_cast<int>(s.size());
        if (len > k_ + 1) return false;
        if (b_.compare(static_cast<std::size_t>(k_ + 1 - len), static_cast<std::size_t>(len), s) != 0)
            return false;
        j_ = k_ - len;
        return true;
    }

    void set_to(std::string_view s) {
        b_.replace(static_cast<std::size_t>(j_ + 1), std::string::npos, s);
        k_ = j_ + static_cast<int>(s.size());
    }

    void chop_to_stem() {
        b_.resize(static_cast<std::size_t>(j_ + 1));
        k_ = j_;
    }

    void replace_if_measure(std::string_view s) {
        if (measure() > 0) set_to(s);
    }

    // Plurals and -ed / -ing.
    void step1a() {
        if (b_[static_cast<std::size_t>(k_)] != 's') return;
        if (ends("sses")) {
            set_to("ss");
        } else if (ends("ies")) {
            set_to("i");
        } else if (b_[static_cast<std::size_t>(k_ - 1)] != 's') {
            b_.pop_back();
            --k_;
        }
    }

    void step1b() {
        if (ends("eed")) {
            if (measure() > 0) {
                b_.pop_back();
                --k_;
            }
            return;
        }
        if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            chop_to_stem();
            if (ends("at")) {
                set_to("ate");
            } else if (ends("bl")) {
                set_to("ble");
            } else if (ends("iz")) {
                set_to("ize");
            } else if (double_cons(k_)) {
                const char c = b_[static_cast<std::size_t>(k_)];
                if (c != 'l' && c != 's' && c != 'z') {
                    b_.pop_back();
                    --k_;
                }
            } else {
                j_ = k_;
                if (measure() == 1 && ends_cvc(k_)) set_to("e");
            }
        }
    }

    // Terminal y to i when the stem holds a vowel.
    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
    }

    struct Rule {
        std::string_view suffix;
        std::string_view replacement;
    };

    // First matching suffix ends the step whether or not the measure
    // condition lets the replacement happen.
    void apply_rules(const Rule* rules, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (ends(rules[i].suffix)) {
                replace_if_measure(rules[i].replacement);
                return;
            }
        }
    }

    void step2() {
        static constexpr Rule rules[] = {
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
            {"izer", "ize"},    {"bli", "ble"},     {"alli", "al"},   {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"},
            {"logi", "log"},
        };
        apply_rules(rules, sizeof(rules) / sizeof(rules[0]));
    }

    void step3() {
        static constexpr Rule rules[] = {
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        };
        apply_rules(rules, sizeof(rules) / sizeof(rules[0]));
    }

    // Drops residual suffixes when the stem is long enough (measure > 1).
    void step4() {
        static constexpr std::string_view suffixes[] = {
            "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
            "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
        };
        for (std::string_view s : suffixes) {
            if (!ends(s)) continue;
            if (s == "ion") {
                if (j_ < 0) return;
                const char c = b_[static_cast<std::size_t>(j_)];
                if (c != 's' && c != 't') continue; // -ion only after s or t
            }
            if (measure() > 1) chop_to_stem();
            return;
        }
    }

    // Final -e removal and -ll reduction.
    void step5() {
        j_ = k_;
        if (b_[static_cast<std::size_t>(k_)] == 'e') {
            const int a = measure();
            if (a > 1 || (a == 1 && !ends_cvc(k_ - 1))) {
                b_.pop_back();
                --k_;
            }
        }
        j_ = k_;
        if (b_[static_cast<std::size_t>(k_)] == 'l' && double_cons(k_) && measure() > 1) {
            b_.pop_back();
            --k_;
        }
    }
};

} // namespace detail

/// Stems one lowercase token with the Porter algorithm (steps 1a through 5b,
/// reference-implementation behavior: length <= 2 words untouched, step 2
/// uses bli -> ble and logi -> log).
inline std::string porter_stem(std::string_view token) {
    return detail::PorterRun(token).run();
}

} // namespace annot
