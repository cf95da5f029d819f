#include "hallinv/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hallinv/error.hpp"

namespace hallinv {

namespace {

void push_reduced(std::vector<Syllable>& out, Syllable s)
{
    if (s.exp == 0) return;
    if (!out.empty() && out.back().gen == s.gen) {
        out.back().exp += s.exp;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back(s);
}

} // namespace

Word::Word(std::vector<Syllable> syllables)
{
    for (auto s : syllables) {
        if (s.gen < 0) throw InputError("negative generator index");
        push_reduced(syl_, s);
    }
}

Word Word::letter(int gen, long exp) { return Word({{gen, exp}}); }

std::size_t Word::length() const
{
    std::size_t n = 0;
    for (auto s : syl_) n += static_cast<std::size_t>(std::labs(s.exp));
    return n;
}

int Word::max_generator() const
{
    int m = -1;
    for (auto s : syl_) m = std::max(m, s.gen);
    return m;
}

std::vector<Syllable> Word::letters() const
{
    std::vector<Syllable> out;
    out.reserve(length());
    for (auto s : syl_) {
        long e = s.exp > 0 ? 1 : -1;
        for (long k = 0; k < std::labs(s.exp); ++k) out.push_back({s.gen, e});
    }
    return out;
}

std::vector<long> Word::exponent_sums(std::size_t n) const
{
    std::vector<long> v(std::max<std::size_t>(n, max_generator() + 1), 0);
    for (auto s : syl_) v[s.gen] += s.exp;
    return v;
}

Word word_multiply(const Word& u, const Word& v)
{
    std::vector<Syllable> out = u.syllables();
    for (auto s : v.syllables()) push_reduced(out, s);
    return Word(std::move(out));
}

Word word_inverse(const Word& u)
{
    std::vector<Syllable> out;
    out.reserve(u.size());
    for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) out.push_back({it->gen, -it->exp});
    return Word(std::move(out));
}

Word word_power(const Word& u, long e)
{
    Word base = e < 0 ? word_inverse(u) : u;
    Word r;
    for (long k = 0; k < std::labs(e); ++k) r = word_multiply(r, base);
    return r;
}

Word word_commutator(const Word& u, const Word& v)
{
    return word_multiply(word_multiply(u, v), word_multiply(word_inverse(u), word_inverse(v)));
}

Word word_conjugate(const Word& u, const Word& v)
{
    return word_multiply(word_multiply(word_inverse(v), u), v);
}

Word substitute(const Word& w, const std::vector<Word>& images)
{
    Word r;
    for (auto s : w.syllables()) {
        if (s.gen >= static_cast<int>(images.size())) throw InputError("substitution missing generator image");
        r = word_multiply(r, word_power(images[s.gen], s.exp));
    }
    return r;
}

void Presentation::validate() const
{
    if (generators.empty()) throw InputError("empty generator list");
    std::vector<std::string> sorted = generators;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("duplicate generator name");
    for (const auto& r : relators)
        if (r.max_generator() >= static_cast<int>(generators.size()))
            throw InputError("relator uses undeclared generator index");
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Name, Int, Colon, Comma, Semi, Star, Caret, LBrack, RBrack, LParen, RParen, Range, Minus, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip();
            if (i_ >= s_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            int l = line_, c = col_;
            char ch = s_[i_];
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string t;
                while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) t += take();
                out.push_back({Tok::Name, t, l, c});
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string t;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t += take();
                out.push_back({Tok::Int, t, l, c});
            } else if (ch == '.' && i_ + 1 < s_.size() && s_[i_ + 1] == '.') {
                take();
                take();
                out.push_back({Tok::Range, "..", l, c});
            } else {
                Tok k;
                switch (ch) {
                case ':': k = Tok::Colon; break;
                case ',': k = Tok::Comma; break;
                case ';': k = Tok::Semi; break;
                case '*': k = Tok::Star; break;
                case '^': k = Tok::Caret; break;
                case '[': k = Tok::LBrack; break;
                case ']': k = Tok::RBrack; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case '-': k = Tok::Minus; break;
                default: {
                    std::ostringstream m;
                    m << "line " << l << ", column " << c << ": unexpected character '" << ch << "'";
                    throw InputError(m.str());
                }
                }
                take();
                out.push_back({k, std::string(1, ch), l, c});
            }
        }
    }

private:
    char take()
    {
        char c = s_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip()
    {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& msg)
{
    std::ostringstream m;
    m << "line " << t.line << ", column " << t.col << ": " << msg;
    throw InputError(m.str());
}

std::pair<std::string, long> split_index(const std::string& name)
{
    std::size_t k = name.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
    if (k == name.size() || k == 0) return {name, -1};
    return {name.substr(0, k), std::stol(name.substr(k))};
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    Presentation presentation()
    {
        Presentation p;
        keyword("gens");
        p.generators = generator_list();
        for (std::size_t i = 0; i < p.generators.size(); ++i) {
            if (index_.count(p.generators[i])) fail(peek(), "duplicate generator '" + p.generators[i] + "'");
            index_[p.generators[i]] = static_cast<int>(i);
        }
        if (p.generators.empty()) fail(peek(), "empty generator list");
        while (peek().kind == Tok::Semi) next();
        keyword("rels");
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Semi) {
                next();
                continue;
            }
            p.relators.push_back(word());
            if (peek().kind == Tok::Comma) {
                next();
                if (peek().kind == Tok::End) fail(peek(), "expected relator after ','");
            } else if (peek().kind != Tok::End && peek().kind != Tok::Semi) {
                fail(peek(), "expected ',' between relators");
            }
        }
        return p;
    }

    Word single_word(const std::vector<std::string>& gens)
    {
        for (std::size_t i = 0; i < gens.size(); ++i) index_[gens[i]] = static_cast<int>(i);
        Word w = word();
        if (peek().kind != Tok::End) fail(peek(), "trailing input after word");
        return w;
    }

private:
    const Token& peek() const { return t_[pos_]; }
    const Token& next() { return t_[pos_++]; }

    void expect(Tok k, const std::string& what)
    {
        if (peek().kind != k) fail(peek(), "expected " + what);
        next();
    }

    void keyword(const std::string& kw)
    {
        if (peek().kind != Tok::Name || peek().text != kw) fail(peek(), "expected '" + kw + ":'");
        next();
        expect(Tok::Colon, "':' after '" + kw + "'");
    }

    bool at_keyword(const std::string& kw) const
    {
        return peek().kind == Tok::Name && peek().text == kw && t_[pos_ + 1].kind == Tok::Colon;
    }

    std::vector<std::string> generator_list()
    {
        std::vector<std::string> out;
        while (peek().kind == Tok::Name && !at_keyword("rels")) {
            const Token& first = next();
            if (peek().kind == Tok::Range) {
                next();
                if (peek().kind != Tok::Name) fail(peek(), "expected generator name after '..'");
                const Token& last = next();
                auto [pa, a] = split_index(first.text);
                auto [pb, b] = split_index(last.text);
                if (a < 0 || b < 0 || pa != pb || b < a) fail(first, "malformed range '" + first.text + ".." + last.text + "'");
                for (long k = a; k <= b; ++k) out.push_back(pa + std::to_string(k));
            } else {
                out.push_back(first.text);
            }
            if (peek().kind == Tok::Comma) next();
            else break;
        }
        return out;
    }

    Word word()
    {
        Word w = factor();
        while (peek().kind == Tok::Star) {
            next();
            w = word_multiply(w, factor());
        }
        return w;
    }

    Word factor()
    {
        Word base;
        if (peek().kind == Tok::LBrack) {
            next();
            Word u = word();
            expect(Tok::Comma, "',' in commutator");
            Word v = word();
            expect(Tok::RBrack, "']'");
            base = word_commutator(u, v);
        } else {
            base = atom();
        }
        if (peek().kind == Tok::Caret) {
            next();
            bool neg = false;
            if (peek().kind == Tok::Minus) {
                next();
                neg = true;
            }
            if (peek().kind != Tok::Int) fail(peek(), "expected integer exponent");
            long e = std::stol(next().text);
            base = word_power(base, neg ? -e : e);
        }
        return base;
    }

    Word atom()
    {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            next();
            Word w = word();
            expect(Tok::RParen, "')'");
            return w;
        }
        if (t.kind == Tok::Int && t.text == "1") {
            next();
            return Word();
        }
        if (t.kind != Tok::Name) fail(t, "expected generator, '(' or '['");
        auto it = index_.find(t.text);
        if (it == index_.end()) fail(t, "undeclared generator '" + t.text + "'");
        next();
        return Word::letter(it->second);
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
    std::map<std::string, int> index_;
};

} // namespace

Presentation parse_presentation(const std::string& text)
{
    Parser parser(Lexer(text).run());
    return parser.presentation();
}

Word parse_word(const std::string& text, const std::vector<std::string>& generators)
{
    Parser parser(Lexer(text).run());
    return parser.single_word(generators);
}

std::string render_word(const Word& w, const std::vector<std::string>& generators)
{
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& s = w.syllables()[i];
        if (i) out += '*';
        out += generators.at(s.gen);
        if (s.exp != 1) out += '^' + std::to_string(s.exp);
    }
    return out;
}

std::string render_presentation(const Presentation& p)
{
    std::string out = "gens: ";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out += ", ";
        out += p.generators[i];
    }
    out += "\nrels: ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i) out += ",\n  ";
        out += render_word(p.relators[i], p.generators);
    }
    out += '\n';
    return out;
}

// ---------------------------------------------------------------- families

namespace groups {

namespace {

void positive(int n, const char* what)
{
    if (n <= 0) throw InputError(std::string(what) + " must be positive");
}

std::vector<std::string> numbered(const std::string& prefix, int n)
{
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace

Presentation free(int n)
{
    positive(n, "free group rank");
    return {numbered("x", n), {}};
}

Presentation product_of_frees(const std::vector<int>& ranks)
{
    static const char* letters[] = {"x", "y", "u", "v", "w", "a", "b", "c"};
    if (ranks.empty()) throw InputError("product needs at least one factor");
    if (ranks.size() > std::size(letters)) throw InputError("too many factors");
    Presentation p;
    std::vector<std::pair<int, int>> blocks;
    for (std::size_t f = 0; f < ranks.size(); ++f) {
        positive(ranks[f], "free factor rank");
        int start = static_cast<int>(p.generators.size());
        for (auto& n : numbered(letters[f], ranks[f])) p.generators.push_back(n);
        blocks.emplace_back(start, start + ranks[f]);
    }
    for (std::size_t f = 0; f < blocks.size(); ++f)
        for (std::size_t g = f + 1; g < blocks.size(); ++g)
            for (int i = blocks[f].first; i < blocks[f].second; ++i)
                for (int j = blocks[g].first; j < blocks[g].second; ++j)
                    p.relators.push_back(word_commutator(Word::letter(i), Word::letter(j)));
    return p;
}

Presentation orientable_surface(int genus)
{
    positive(genus, "genus");
    Presentation p{numbered("x", 2 * genus), {}};
    Word r;
    for (int i = 0; i < genus; ++i)
        r = word_multiply(r, word_commutator(Word::letter(2 * i), Word::letter(2 * i + 1)));
    p.relators.push_back(r);
    return p;
}

Presentation nonorientable_surface(int n)
{
    positive(n, "nonorientable genus");
    Presentation p{numbered("x", n), {}};
    Word r;
    for (int i = 0; i < n; ++i) r = word_multiply(r, Word::letter(i, 2));
    p.relators.push_back(r);
    return p;
}

Presentation free_abelian(int n)
{
    positive(n, "rank");
    Presentation p{numbered("x", n), {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.relators.push_back(word_commutator(Word::letter(i), Word::letter(j)));
    return p;
}

Presentation direct_product_with_Z(const Presentation& p)
{
    p.validate();
    Presentation q = p;
    std::string z = "z";
    while (std::find(q.generators.begin(), q.generators.end(), z) != q.generators.end()) z += "_";
    int zi = static_cast<int>(q.generators.size());
    q.generators.push_back(z);
    for (int i = 0; i < zi; ++i) q.relators.push_back(word_commutator(Word::letter(zi), Word::letter(i)));
    return q;
}

} // namespace groups

} // namespace hallinv
