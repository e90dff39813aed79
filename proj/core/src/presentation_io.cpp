#include "stringc/presentation_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>

#include "stringc/errors.hpp"

namespace stringc {

namespace {

struct Token {
    enum Kind { Name, Int, LParen, RParen, LBracket, RBracket, Comma, Caret, Prime, End };
    Kind kind = End;
    std::string text;
    std::int64_t value = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Name, s.substr(i, j - i), 0});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            std::int64_t v = 0;
            auto res = std::from_chars(s.data() + i, s.data() + j, v);
            if (res.ec != std::errc{})
                throw ParseError("integer out of range: " + s.substr(i, j - i));
            out.push_back({Token::Int, s.substr(i, j - i), v});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        case '[': k = Token::LBracket; break;
        case ']': k = Token::RBracket; break;
        case ',': k = Token::Comma; break;
        case '^': k = Token::Caret; break;
        case '\'': k = Token::Prime; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), 0});
        ++i;
    }
    out.push_back({Token::End, "", 0});
    return out;
}

class WordParser {
  public:
    WordParser(std::vector<Token> tokens, const std::vector<std::string>& names)
        : toks_(std::move(tokens)) {
        for (std::size_t i = 0; i < names.size(); ++i)
            index_[names[i]] = static_cast<std::uint32_t>(i);
    }

    Word parse() {
        Word w = product();
        if (peek().kind != Token::End)
            throw ParseError("unexpected '" + peek().text + "' after a word");
        return w;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    bool starts_atom(const Token& t) const {
        return t.kind == Token::Name || t.kind == Token::Int || t.kind == Token::LParen ||
               t.kind == Token::LBracket;
    }

    Word product() {
        Word w;
        if (!starts_atom(peek()))
            throw ParseError("expected a word, found '" + peek().text + "'");
        while (starts_atom(peek()))
            w = w * term();
        return w;
    }

    Word term() {
        Word w = atom();
        for (;;) {
            if (peek().kind == Token::Prime) {
                take();
                w = inverse(w);
            } else if (peek().kind == Token::Caret) {
                take();
                if (peek().kind == Token::Int) {
                    w = word_power(w, take().value);
                } else if (peek().kind == Token::LParen) {
                    take();
                    Word c = product();
                    expect(Token::RParen, ")");
                    w = word_conjugate(w, c);
                } else {
                    throw ParseError("expected an exponent or (word) after '^'");
                }
            } else {
                break;
            }
        }
        return w;
    }

    Word atom() {
        const Token& t = take();
        switch (t.kind) {
        case Token::Name: {
            auto it = index_.find(t.text);
            if (it == index_.end())
                throw ParseError("unknown generator '" + t.text + "'");
            return Word::generator(it->second);
        }
        case Token::Int:
            if (t.value == 1)
                return Word();
            throw ParseError("unexpected integer '" + t.text + "' in a word");
        case Token::LParen: {
            Word w = product();
            expect(Token::RParen, ")");
            return w;
        }
        case Token::LBracket: {
            Word a = product();
            expect(Token::Comma, ",");
            Word b = product();
            expect(Token::RBracket, "]");
            return word_commutator(a, b);
        }
        default:
            throw ParseError("expected a word, found '" + t.text + "'");
        }
    }

    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k)
            throw ParseError(std::string("expected '") + what + "', found '" + peek().text +
                             "'");
        take();
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, std::uint32_t> index_;
};

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

} // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& generator_names) {
    return WordParser(tokenize(text), generator_names).parse();
}

std::string print_word(const Word& w, const std::vector<std::string>& generator_names) {
    if (w.empty())
        return "1";
    std::string out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i])
            ++j;
        if (ls[i].gen >= generator_names.size())
            throw BadWord("letter outside the named generators");
        if (!out.empty())
            out += ' ';
        out += generator_names[ls[i].gen];
        if (ls[i].sign < 0)
            out += '\'';
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

Presentation parse_presentation(const std::string& text) {
    std::vector<std::string> names;
    bool have_gens = false;
    std::vector<std::pair<std::size_t, std::string>> relator_lines;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        if (line.rfind("gens:", 0) == 0) {
            if (have_gens)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": generators listed twice");
            std::istringstream ns(line.substr(5));
            std::string n;
            while (ns >> n)
                names.push_back(n);
            if (names.empty())
                throw ParseError("line " + std::to_string(lineno) + ": no generators named");
            have_gens = true;
        } else if (line.rfind("rel:", 0) == 0) {
            if (!have_gens)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": relator before the generator list");
            relator_lines.emplace_back(lineno, line.substr(4));
        } else {
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'gens:' or 'rel:'");
        }
    }
    if (!have_gens)
        throw ParseError("no generator list found");

    std::vector<Word> relators;
    for (const auto& [ln, body] : relator_lines) {
        try {
            relators.push_back(parse_word(body, names));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(ln) + ": " + e.what());
        }
    }
    return Presentation(std::move(names), std::move(relators));
}

std::string print_presentation(const Presentation& p) {
    std::string out = "gens:";
    for (const auto& n : p.generator_names())
        out += " " + n;
    out += "\n";
    for (const Word& w : p.relators())
        out += "rel: " + print_word(w, p.generator_names()) + "\n";
    return out;
}

} // namespace stringc
