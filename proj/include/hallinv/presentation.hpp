#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hallinv {

struct Syllable {
    int gen = 0;
    long exp = 0;
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Freely reduced element of a free group: adjacent syllables have distinct
// generators and no exponent is zero.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Syllable> syllables);

    static Word letter(int gen, long exp = 1);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    std::size_t size() const { return syl_.size(); }
    std::size_t length() const;   // number of letters
    int max_generator() const;    // -1 for the empty word

    // Letters expanded as (gen, +-1).
    std::vector<Syllable> letters() const;

    // Exponent sum of each generator, padded to n entries.
    std::vector<long> exponent_sums(std::size_t n) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Syllable> syl_;
};

Word word_multiply(const Word& u, const Word& v);
Word word_inverse(const Word& u);
Word word_power(const Word& u, long e);
Word word_commutator(const Word& u, const Word& v);   // u v u^-1 v^-1
Word word_conjugate(const Word& u, const Word& v);    // v^-1 u v

// Replace each generator i by images[i].
Word substitute(const Word& w, const std::vector<Word>& images);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::size_t num_generators() const { return generators.size(); }
    std::size_t num_relators() const { return relators.size(); }
    void validate() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

Presentation parse_presentation(const std::string& text);
Word parse_word(const std::string& text, const std::vector<std::string>& generators);

std::string render_word(const Word& w, const std::vector<std::string>& generators);
std::string render_presentation(const Presentation& p);

namespace groups {

Presentation free(int n);
// F_{n1} x ... x F_{nk}; generators of the i-th factor are named by letter.
Presentation product_of_frees(const std::vector<int>& ranks);
Presentation orientable_surface(int genus);
Presentation nonorientable_surface(int n);
Presentation free_abelian(int n);
Presentation direct_product_with_Z(const Presentation& p);

} // namespace groups

} // namespace hallinv
