#include "hallinv/fox.hpp"

#include <sstream>

#include "hallinv/error.hpp"

namespace hallinv {

FreeRingElement FreeRingElement::from_word(const Word& w, long c)
{
    FreeRingElement e;
    e.add(w, c);
    return e;
}

void FreeRingElement::add(const Word& w, long c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long FreeRingElement::augmentation() const
{
    long s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

FreeRingElement operator+(FreeRingElement a, const FreeRingElement& b)
{
    for (const auto& [w, c] : b.terms_) a.add(w, c);
    return a;
}

FreeRingElement operator-(FreeRingElement a, const FreeRingElement& b)
{
    for (const auto& [w, c] : b.terms_) a.add(w, -c);
    return a;
}

FreeRingElement operator*(const FreeRingElement& a, const FreeRingElement& b)
{
    FreeRingElement r;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) r.add(word_multiply(u, v), c * d);
    return r;
}

FreeRingElement fox_derivative(const Word& w, int j)
{
    FreeRingElement d;
    std::vector<Syllable> prefix;
    for (auto letter : w.letters()) {
        if (letter.gen == j && letter.exp > 0) d.add(Word(prefix), 1);
        if (!prefix.empty() && prefix.back().gen == letter.gen) {
            prefix.back().exp += letter.exp;
            if (prefix.back().exp == 0) prefix.pop_back();
        } else {
            prefix.push_back(letter);
        }
        if (letter.gen == j && letter.exp < 0) d.add(Word(prefix), -1);
    }
    return d;
}

IntMatrix augmentation_jacobian(const Presentation& p)
{
    IntMatrix j(p.num_relators(), p.num_generators());
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
        auto e = p.relators[i].exponent_sums(p.num_generators());
        for (std::size_t k = 0; k < p.num_generators(); ++k) j(i, k) = e[k];
    }
    return j;
}

namespace {
long pmod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

long AbelStructure::b1(long q) const
{
    if (q == 0) return static_cast<long>(free_rank);
    return static_cast<long>(rank_mod(q));
}

std::size_t AbelStructure::rank_mod(long p) const
{
    std::size_t n = free_rank;
    for (auto e : torsion)
        if (e % p == 0) ++n;
    return n;
}

std::vector<long> AbelStructure::reduce(std::vector<long> coords) const
{
    for (std::size_t i = 0; i < torsion.size(); ++i) coords[free_rank + i] = pmod(coords[free_rank + i], torsion[i]);
    return coords;
}

std::vector<long> AbelStructure::image(const std::vector<long>& x) const
{
    std::vector<long> y(num_coordinates(), 0);
    for (std::size_t j = 0; j < num_generators && j < x.size(); ++j) {
        if (x[j] == 0) continue;
        for (std::size_t c = 0; c < y.size(); ++c) y[c] += x[j] * chi[j][c];
    }
    return reduce(std::move(y));
}

AbelStructure abelianization(const Presentation& p)
{
    std::size_t l = p.num_generators();
    SmithForm snf = smith_normal_form(augmentation_jacobian(p), true);
    const IntMatrix& V = *snf.V;
    const IntMatrix& Vi = *snf.V_inverse;
    AbelStructure a;
    a.num_generators = l;
    a.free_rank = snf.coker_free_rank;
    std::vector<std::size_t> cols;
    for (std::size_t c = snf.rank; c < l; ++c) cols.push_back(c);
    for (std::size_t c = 0; c < snf.rank; ++c) {
        if (snf.divisors[c] > 1) {
            cols.push_back(c);
            a.torsion.push_back(to_int64(snf.divisors[c]));
        }
    }
    a.chi.assign(l, std::vector<long>(cols.size(), 0));
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t k = 0; k < cols.size(); ++k) a.chi[j][k] = to_int64(V(j, cols[k]));
    for (auto& row : a.chi) row = a.reduce(row);
    for (auto c : cols) {
        std::vector<long> w(l);
        for (std::size_t j = 0; j < l; ++j) w[j] = to_int64(Vi(c, j));
        a.basis_words.push_back(std::move(w));
    }
    for (const auto& r : p.relators) {
        auto img = a.image(r.exponent_sums(l));
        for (auto v : img) require(v == 0, "abelianization: relator has nonzero image");
    }
    return a;
}

void LaurentElement::add(const Key& k, long c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long LaurentElement::augmentation() const
{
    long s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

AlexanderMatrix alexander_matrix(const Presentation& p) { return alexander_matrix(p, abelianization(p)); }

AlexanderMatrix alexander_matrix(const Presentation& p, const AbelStructure& abel)
{
    AlexanderMatrix a;
    a.abel = abel;
    a.rows = p.num_relators();
    a.cols = p.num_generators();
    a.entries.resize(a.rows * a.cols);
    std::size_t l = p.num_generators();
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            auto d = fox_derivative(p.relators[i], static_cast<int>(j));
            LaurentElement& e = a.entries[i * a.cols + j];
            for (const auto& [w, c] : d.terms()) e.add(abel.image(w.exponent_sums(l)), c);
        }
    return a;
}

FieldMatrix evaluate(const AlexanderMatrix& a, const FieldHandle& K, const std::vector<FieldElement>& values)
{
    if (values.size() != a.abel.num_coordinates()) throw InputError("character has the wrong number of coordinates");
    for (const auto& v : values) K->check_owner(v);
    std::vector<FieldElement> inverses;
    for (const auto& v : values) inverses.push_back(K->inv(v));
    FieldMatrix m(a.rows, a.cols, K->zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            FieldElement sum = K->zero();
            for (const auto& [key, c] : a.at(i, j).terms()) {
                FieldElement term = K->from_int(c);
                for (std::size_t k = 0; k < key.size(); ++k) {
                    if (key[k] > 0) term = K->mul(term, values[k].pow(key[k]));
                    else if (key[k] < 0) term = K->mul(term, inverses[k].pow(-key[k]));
                }
                sum = K->add(sum, term);
            }
            m(i, j) = sum;
        }
    return m;
}

namespace {
std::string tuple(const std::vector<long>& v, std::size_t from, std::size_t to)
{
    std::string s = "(";
    for (std::size_t k = from; k < to; ++k) {
        if (k > from) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}
} // namespace

std::string render_alexander(const AlexanderMatrix& a)
{
    std::ostringstream o;
    std::size_t n = a.abel.free_rank, h = a.abel.num_coordinates();
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            o << "(" << i << "," << j << "): ";
            const auto& terms = a.at(i, j).terms();
            if (terms.empty()) o << "0";
            bool first = true;
            for (const auto& [key, c] : terms) {
                if (!first) o << " + ";
                first = false;
                o << c << " * t^" << tuple(key, 0, n) << " * s^" << tuple(key, n, h);
            }
            o << "\n";
        }
    return o.str();
}

} // namespace hallinv
