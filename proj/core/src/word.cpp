#include "stringc/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace stringc {

std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.sign != 1 && l.sign != -1) {
            throw BadWord("letter sign must be +1 or -1");
        }
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

std::int64_t Word::max_generator() const {
    std::int64_t m = -1;
    for (const Letter& l : letters_) {
        m = std::max(m, static_cast<std::int64_t>(l.gen));
    }
    return m;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> cat = a.letters();
    cat.insert(cat.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(cat));
}

Word inverse(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        out.push_back(inverse(*it));
    }
    return Word(std::move(out));
}

Word word_power(const Word& w, std::int64_t e) {
    const Word base = e < 0 ? inverse(w) : w;
    std::uint64_t reps = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    std::vector<Letter> cat;
    cat.reserve(base.size() * reps);
    for (std::uint64_t i = 0; i < reps; ++i) {
        cat.insert(cat.end(), base.letters().begin(), base.letters().end());
    }
    return Word(std::move(cat));
}

Word word_conjugate(const Word& w, const Word& c) {
    return inverse(c) * w * c;
}

Word word_commutator(const Word& x, const Word& y) {
    return inverse(x) * inverse(y) * x * y;
}

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

} // namespace

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
    if (names_.empty()) {
        throw BadWord("presentation needs at least one generator");
    }
    std::set<std::string> seen;
    for (const std::string& n : names_) {
        if (!is_identifier(n)) {
            throw BadWord("generator name '" + n + "' is not an identifier");
        }
        if (!seen.insert(n).second) {
            throw BadWord("duplicate generator name '" + n + "'");
        }
    }
    for (Word& r : relators) {
        if (r.max_generator() >= static_cast<std::int64_t>(names_.size())) {
            throw BadWord("relator uses a generator outside the alphabet");
        }
        if (!r.empty()) {
            relators_.push_back(std::move(r));
        }
    }
}

Word GeneratorMap::apply(const Word& w) const {
    std::vector<Letter> out;
    for (const Letter& l : w.letters()) {
        if (l.gen >= images_.size()) {
            throw BadWord("word uses a generator with no image under the map");
        }
        const Word& img = images_[l.gen];
        if (l.sign > 0) {
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
                out.push_back(inverse(*it));
            }
        }
    }
    return Word(std::move(out));
}

} // namespace stringc
