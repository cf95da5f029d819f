#include "hallinv/braids.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hallinv/error.hpp"

namespace hallinv {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : strands_(strands), letters_(std::move(letters))
{
    if (strands_ < 1) throw InputError("a braid needs at least one strand");
    for (const auto& l : letters_) {
        if (l.index < 1 || l.index >= strands_)
            throw InputError("braid generator sigma_" + std::to_string(l.index) + " out of range for " + std::to_string(strands_) + " strands");
        if (l.sign != 1 && l.sign != -1) throw InputError("braid letter sign must be +1 or -1");
    }
}

BraidWord BraidWord::inverse() const
{
    std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.sign = -l.sign;
    return BraidWord(strands_, out);
}

BraidWord BraidWord::power(int e) const
{
    BraidWord base = e < 0 ? inverse() : *this;
    BraidWord out(strands_);
    for (int i = 0; i < std::abs(e); ++i) out = out * base;
    return out;
}

std::string BraidWord::str() const
{
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        os << (i ? " " : "") << "s" << letters_[i].index;
        if (letters_[i].sign < 0) os << "^-1";
    }
    return os.str();
}

BraidWord operator*(const BraidWord& a, const BraidWord& b)
{
    if (a.strands_ != b.strands_) throw InputError("braids on different numbers of strands");
    std::vector<BraidLetter> out = a.letters_;
    for (const auto& l : b.letters_) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord(a.strands_, out);
}

FreeAutomorphism FreeAutomorphism::identity(int k)
{
    FreeAutomorphism f;
    f.rank = k;
    for (int i = 0; i < k; ++i) f.images.push_back(Word::letter(i));
    return f;
}

Word FreeAutomorphism::apply(const Word& w) const
{
    if (w.max_generator() >= rank) throw InputError("word uses a generator outside the free group");
    return substitute(w, images);
}

FreeAutomorphism FreeAutomorphism::after(const FreeAutomorphism& other) const
{
    if (rank != other.rank) throw InputError("automorphisms of free groups of different ranks");
    FreeAutomorphism f;
    f.rank = rank;
    for (const auto& w : other.images) f.images.push_back(apply(w));
    return f;
}

IntMatrix FreeAutomorphism::abelianized() const
{
    IntMatrix m(rank, rank);
    for (int i = 0; i < rank; ++i) {
        auto e = images[i].exponent_sums(rank);
        for (int j = 0; j < rank; ++j) m(i, j) = e[j];
    }
    return m;
}

namespace {

FreeAutomorphism elementary(int k, int i, int sign, bool opposite)
{
    FreeAutomorphism f = FreeAutomorphism::identity(k);
    int a = i - 1, b = i;
    if (opposite) sign = -sign;
    if (sign > 0) {
        f.images[a] = Word({{a, 1}, {b, 1}, {a, -1}});
        f.images[b] = Word::letter(a);
    } else {
        f.images[a] = Word::letter(b);
        f.images[b] = Word({{b, -1}, {a, 1}, {b, 1}});
    }
    return f;
}

BraidWord slide(int from, int to, int k, int sign)
{
    // moves the strand at position from down to position to
    std::vector<BraidLetter> letters;
    for (int i = from - 1; i >= to; --i) letters.push_back({i, sign});
    return BraidWord(k, letters);
}

} // namespace

FreeAutomorphism artin_action(const BraidWord& b, const BraidConventions& c)
{
    int k = b.strands();
    FreeAutomorphism out = FreeAutomorphism::identity(k);
    for (const auto& l : b.letters()) {
        FreeAutomorphism e = elementary(k, l.index, l.sign, c.opposite_artin);
        out = c.reverse_composition ? e.after(out) : out.after(e);
    }
    return out;
}

BraidWord pure_generator(int i, int j, int k)
{
    if (!(1 <= i && i < j && j <= k)) throw InputError("pure braid generator A_ij needs 1 <= i < j <= k");
    BraidWord c = slide(j, i + 1, k, 1);
    return c * BraidWord(k, {{i, 1}, {i, 1}}) * c.inverse();
}

BraidWord full_twist(const std::vector<int>& I, int k, const BraidConventions& conv)
{
    std::vector<int> s = I;
    std::sort(s.begin(), s.end());
    if (s.size() < 2 || std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("full twist needs at least two distinct strands");
    if (s.front() < 1 || s.back() > k) throw InputError("full twist strand out of range");
    int sign = conv.underpass_twists ? -1 : 1;
    int base = s.front();
    int m = static_cast<int>(s.size());
    BraidWord c(k);
    for (int t = 1; t < m; ++t) c = c * slide(s[t], base + t, k, sign);
    std::vector<BraidLetter> row;
    for (int i = base; i < base + m - 1; ++i) row.push_back({i, 1});
    BraidWord delta2 = BraidWord(k, row).power(m);
    return c * delta2 * c.inverse();
}

BraidWord conjugate_braid(const BraidWord& a, const BraidWord& b)
{
    if (a.strands() != b.strands()) throw InputError("conjugating braids on different numbers of strands");
    return b.inverse() * a * b;
}

std::vector<int> parse_permutation(const std::string& digits)
{
    std::vector<int> tau;
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0') throw InputError("permutation must be a string of digits 1..9");
        tau.push_back(ch - '0');
    }
    std::vector<int> sorted = tau;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) throw InputError("'" + digits + "' is not a permutation of 1..n");
    return tau;
}

BraidWord xi_from_permutation(const std::vector<int>& tau)
{
    int n = static_cast<int>(tau.size());
    std::vector<int> sorted = tau;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1) throw InputError("not a permutation of 1..n");
    if (n < 2) throw InputError("horizontal arrangements need at least two planes");
    std::vector<int> inv(n + 1);
    for (int i = 0; i < n; ++i) inv[tau[i]] = i + 1;
    BraidWord xi(n - 1);
    for (int j = 2; j <= n - 1; ++j)
        for (int i = 1; i < j; ++i)
            if (inv[i] > inv[j]) xi = xi * pure_generator(i, j, n - 1);
    return xi;
}

namespace {

std::vector<std::string> x_names(int k)
{
    std::vector<std::string> g;
    for (int i = 1; i <= k; ++i) g.push_back("x" + std::to_string(i));
    return g;
}

void add_central(Presentation& p)
{
    int z = static_cast<int>(p.generators.size());
    p.generators.push_back("z");
    for (int g = 0; g < z; ++g) p.relators.push_back(word_commutator(Word::letter(z), Word::letter(g)));
}

} // namespace

Presentation semidirect_presentation(const std::vector<FreeAutomorphism>& phis, bool add_central_Z)
{
    if (phis.empty()) throw InputError("semidirect product needs at least one automorphism");
    int k = phis[0].rank;
    for (const auto& f : phis)
        if (f.rank != k) throw InputError("automorphisms of free groups of different ranks");
    Presentation p;
    p.generators = x_names(k);
    int m = static_cast<int>(phis.size());
    for (int j = 1; j <= m; ++j) p.generators.push_back(m == 1 ? std::string("y") : "y" + std::to_string(j));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < k; ++i) {
            Word y = Word::letter(k + j);
            Word lhs = word_multiply(word_multiply(y, Word::letter(i)), word_inverse(y));
            p.relators.push_back(word_multiply(lhs, word_inverse(phis[j].images[i])));
        }
    if (add_central_Z) add_central(p);
    return p;
}

Presentation braid_monodromy_presentation(const std::vector<FreeAutomorphism>& alphas, bool add_central_Z)
{
    if (alphas.empty()) throw InputError("braid monodromy needs at least one braid");
    int k = alphas[0].rank;
    Presentation p;
    p.generators = x_names(k);
    for (const auto& a : alphas) {
        if (a.rank != k) throw InputError("braids on different numbers of strands");
        for (int i = 0; i < k; ++i) {
            Word r = word_multiply(a.images[i], Word::letter(i, -1));
            if (!r.empty()) p.relators.push_back(r);
        }
    }
    if (add_central_Z) add_central(p);
    return p;
}

Presentation pure_braid_presentation(int k, const BraidConventions& c)
{
    if (k < 2) throw InputError("pure braid presentation needs at least two strands");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= k; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    auto index = [&](int i, int j) {
        return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) - pairs.begin());
    };
    Presentation p;
    for (auto [i, j] : pairs) p.generators.push_back("A" + std::to_string(i) + std::to_string(j));
    auto A = [&](int i, int j, long e = 1) { return Word::letter(index(i, j), e); };
    auto cat = [](std::initializer_list<Word> ws) {
        Word out;
        for (const auto& w : ws) out = word_multiply(out, w);
        return out;
    };
    auto braid_of = [&](const Word& w) {
        BraidWord b(k);
        for (const auto& s : w.letters()) {
            auto [i, j] = pairs[s.gen];
            b = b * pure_generator(i, j, k).power(static_cast<int>(s.exp));
        }
        return b;
    };
    FreeAutomorphism id = FreeAutomorphism::identity(k);
    for (auto [r, s] : pairs)
        for (auto [i, j] : pairs) {
            if (!(s < j)) continue;
            Word rhs;
            if (s < i || (i < r && s < j))
                rhs = A(i, j);
            else if (s == i)
                rhs = cat({A(r, j), A(i, j), A(r, j, -1)});
            else if (i == r)
                rhs = cat({A(r, j), A(s, j), A(i, j), A(s, j, -1), A(r, j, -1)});
            else if (r < i && i < s)
                rhs = cat({A(r, j), A(s, j), A(r, j, -1), A(s, j, -1), A(i, j), A(s, j), A(r, j), A(s, j, -1), A(r, j, -1)});
            else
                continue;
            Word rel = word_multiply(cat({A(r, s, -1), A(i, j), A(r, s)}), word_inverse(rhs));
            if (!(artin_action(braid_of(rel), c) == id)) throw InvariantError("pure braid relation fails under the Artin action");
            p.relators.push_back(rel);
        }
    return p;
}

Presentation horizontal_arrangement(const std::vector<int>& tau, const BraidConventions& c)
{
    BraidWord xi = xi_from_permutation(tau);
    return semidirect_presentation({artin_action(xi.power(2), c)}, false);
}

Presentation non_fano_arrangement(const BraidConventions& c)
{
    const int k = 6;
    auto A = [&](int i, int j) { return pure_generator(i, j, k); };
    std::vector<BraidWord> alphas = {
        full_twist({3, 4, 5}, k, c),
        conjugate_braid(full_twist({1, 2, 5}, k, c), A(3, 5) * A(4, 5)),
        conjugate_braid(A(1, 4), A(3, 4)),
        full_twist({1, 3, 6}, k, c),
        conjugate_braid(full_twist({2, 4, 6}, k, c), A(3, 4) * A(3, 6)),
    };
    std::vector<FreeAutomorphism> acts;
    for (const auto& b : alphas) acts.push_back(artin_action(b, c));
    return braid_monodromy_presentation(acts, true);
}

Presentation deleted_B3_arrangement(const BraidConventions& c)
{
    const int k = 4;
    auto A = [&](int i, int j) { return pure_generator(i, j, k); };
    std::vector<BraidWord> alphas = {
        A(2, 3),
        conjugate_braid(A(1, 3), A(2, 3)) * A(2, 4),
        conjugate_braid(A(1, 4), A(2, 4)),
    };
    std::vector<FreeAutomorphism> acts;
    for (const auto& b : alphas) acts.push_back(artin_action(b, c));
    return semidirect_presentation(acts, true);
}

namespace {

int parse_positive(const std::string& s, const std::string& name)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw InputError("unknown fixture '" + name + "'");
    int v = std::stoi(s);
    if (v < 1) throw InputError("fixture '" + name + "' needs a positive parameter");
    return v;
}

} // namespace

Presentation fixture(const std::string& name, const BraidConventions& c)
{
    if (name == "braid_arrangement") return pure_braid_presentation(4, c);
    if (name == "non_fano") return non_fano_arrangement(c);
    if (name == "deleted_B3") return deleted_B3_arrangement(c);
    if (name.size() >= 2 && name[0] == 'A') return horizontal_arrangement(parse_permutation(name.substr(1)), c);
    if (name.size() >= 2 && name[0] == 'F') {
        std::vector<int> ranks;
        std::string rest = name;
        std::size_t pos = 0;
        while (pos < rest.size()) {
            if (rest[pos] != 'F') throw InputError("unknown fixture '" + name + "'");
            std::size_t next = rest.find('x', pos);
            std::string num = rest.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
            ranks.push_back(parse_positive(num, name));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return ranks.size() == 1 ? groups::free(ranks[0]) : groups::product_of_frees(ranks);
    }
    if (name.size() >= 2 && name[0] == 'S') return groups::orientable_surface(parse_positive(name.substr(1), name));
    if (name.size() >= 2 && name[0] == 'N') return groups::nonorientable_surface(parse_positive(name.substr(1), name));
    if (name.size() >= 2 && name[0] == 'Z') return groups::free_abelian(parse_positive(name.substr(1), name));
    throw InputError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names()
{
    return {"braid_arrangement", "non_fano", "deleted_B3"};
}

} // namespace hallinv
