#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hallinv/braids.hpp"
#include "hallinv/error.hpp"
#include "hallinv/presentation.hpp"

using namespace hallinv;

TEST_SUITE("presentations") {

TEST_CASE("words are freely reduced")
{
    Word w({{0, 2}, {0, -2}, {1, 1}, {1, 2}});
    CHECK(w.syllables() == std::vector<Syllable>{{1, 3}});
    Word u = word_multiply(Word::letter(0), word_inverse(Word::letter(0)));
    CHECK(u.empty());
    CHECK(word_power(Word::letter(2, 3), -2) == Word::letter(2, -6));
    CHECK(word_power(word_multiply(Word::letter(0), Word::letter(1)), 0).empty());
}

TEST_CASE("commutator and conjugate")
{
    Word a = Word::letter(0), b = Word::letter(1);
    Word c = word_commutator(a, b);
    CHECK(c.length() == 4);
    CHECK(c.exponent_sums(2) == std::vector<long>{0, 0});
    CHECK(word_conjugate(a, b) == Word({{1, -1}, {0, 1}, {1, 1}}));
    CHECK(word_commutator(a, a).empty());
}

TEST_CASE("substitution")
{
    Word w = parse_word("x*y*x^-1", {"x", "y"});
    Word img = substitute(w, {parse_word("y", {"x", "y"}), parse_word("x*y", {"x", "y"})});
    CHECK(render_word(img, {"x", "y"}) == "y*x");
}

TEST_CASE("parse basic presentation")
{
    Presentation p = parse_presentation("gens: a, b\nrels: a^2, b^3, (a*b)^5");
    CHECK(p.num_generators() == 2);
    CHECK(p.num_relators() == 3);
    CHECK(p.relators[2].length() == 10);
}

TEST_CASE("parse ranges, commutators, comments and identity")
{
    Presentation p = parse_presentation("# surface\ngens: a1..a2, b1..b2\nrels: [a1,a2]*[b1,b2]; 1");
    CHECK(p.generators == std::vector<std::string>{"a1", "a2", "b1", "b2"});
    REQUIRE(p.num_relators() == 2);
    CHECK(p.relators[0].length() == 8);
    CHECK(p.relators[1].empty());
    CHECK(p.relators[0] == groups::orientable_surface(2).relators[0]);
}

TEST_CASE("render round trip")
{
    for (const auto& name : {"F3", "S2", "N3", "Z2", "F2xF1", "A2134", "non_fano"}) {
        Presentation p = fixture(name);
        CHECK(parse_presentation(render_presentation(p)) == p);
    }
}

TEST_CASE("parse errors name a position")
{
    auto message = [](const std::string& text) {
        try {
            parse_presentation(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("gens: a\nrels: b").find("line 2") != std::string::npos);
    CHECK(message("gens: a\nrels: b").find("undeclared") != std::string::npos);
    CHECK(message("gens: a, a\nrels: a").find("duplicate") != std::string::npos);
    CHECK(message("gens: a\nrels: a^").find("exponent") != std::string::npos);
    CHECK(message("gens: a\nrels: a, ").find("relator") != std::string::npos);
    CHECK(message("gens: a\nrels: a $").find("unexpected character") != std::string::npos);
    CHECK(message("gens: a1..b2\nrels: 1").find("range") != std::string::npos);
    CHECK(message("rels: a").find("gens") != std::string::npos);
}

TEST_CASE("standard families")
{
    CHECK(groups::free(3).num_relators() == 0);
    CHECK(groups::free_abelian(3).num_relators() == 3);
    CHECK(groups::nonorientable_surface(3).num_relators() == 1);
    CHECK(groups::nonorientable_surface(3).relators[0].length() == 6);
    CHECK(groups::product_of_frees({2, 1}).num_generators() == 3);
    CHECK(groups::product_of_frees({2, 2}).num_relators() == 4);
    CHECK(groups::direct_product_with_Z(groups::free(2)).num_relators() == 2);
    CHECK_THROWS_AS(groups::free(0), InputError);
    CHECK_THROWS_AS(groups::orientable_surface(-1), InputError);
}

TEST_CASE("validate rejects out-of-range generators")
{
    Presentation p{{"a"}, {Word::letter(1)}};
    CHECK_THROWS_AS(p.validate(), InputError);
}

TEST_CASE("frozen arrangement fixtures match their builders")
{
    namespace fs = std::filesystem;
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(HALLINV_PRESENTATIONS_DIR)) {
        if (entry.path().extension() != ".txt") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        std::string name = entry.path().stem().string();
        CAPTURE(name);
        CHECK(parse_presentation(ss.str()) == fixture(name));
        ++seen;
    }
    CHECK(seen >= 19);
}

}
