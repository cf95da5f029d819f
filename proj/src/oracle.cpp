#include "hallinv/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "hallinv/error.hpp"
#include "hallinv/fox.hpp"
#include "hallinv/linalg.hpp"

namespace hallinv {

namespace {

using u64 = unsigned long long;

u64 checked_mul(u64 a, u64 b)
{
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw InfeasibleError("homomorphism count exceeds 64 bits");
    return r;
}

u64 checked_add(u64 a, u64 b)
{
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) throw InfeasibleError("homomorphism count exceeds 64 bits");
    return r;
}

struct PairHash {
    std::size_t operator()(const std::pair<u64, u64>& k) const { return std::hash<u64>()(k.first * 1000003ULL ^ k.second); }
};

class Counter {
public:
    Counter(const Presentation& p, const FiniteGroupTable& t, HomMode mode, const OracleOptions& opts)
        : p_(p), t_(t), mode_(mode), opts_(opts)
    {
        n_ = static_cast<int>(p.generators.size());
        if (mode_ != HomMode::All && t.order() > 64)
            throw InputError("surjectivity and transitivity checks need a target of order at most 64");
        if (mode_ == HomMode::Transitive && t.permutations().empty())
            throw InputError("transitive counting needs a permutation group target");
        long emax = 1;
        for (const auto& r : p.relators)
            for (const auto& s : r.syllables()) emax = std::max(emax, std::abs(s.exp));
        emax_ = emax;
        pw_.assign(t.order(), std::vector<int>(2 * emax + 1));
        for (int a = 0; a < t.order(); ++a)
            for (long e = -emax; e <= emax; ++e) pw_[a][e + emax] = t.pow(a, e);
        for (const auto& r : p.relators)
            if (!r.empty()) relators_.push_back(&r);
    }

    BigInt run()
    {
        if (relators_.size() <= 1) return segment_dp();
        return backtrack();
    }

private:
    int power(int a, long e) const { return pw_[a][e + emax_]; }

    void tick(u64 k = 1)
    {
        nodes_ += k;
        if (nodes_ > opts_.budget) throw InfeasibleError("homomorphism search exceeded its budget of " + std::to_string(opts_.budget) + " assignments");
    }

    u64 elem_mask(int a)
    {
        auto it = elem_cache_.find(a);
        if (it != elem_cache_.end()) return it->second;
        return elem_cache_[a] = t_.closure(1ULL << a);
    }

    u64 join(u64 a, u64 b)
    {
        if ((a | b) == a) return a;
        if ((a | b) == b) return b;
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = join_cache_.find(key);
        if (it != join_cache_.end()) return it->second;
        return join_cache_[key] = t_.closure(a | b);
    }

    bool accept(u64 mask)
    {
        if (mode_ == HomMode::All) return true;
        u64 full = t_.order() == 64 ? ~0ULL : ((1ULL << t_.order()) - 1);
        if (mode_ == HomMode::Epi) return mask == full;
        auto it = transitive_cache_.find(mask);
        if (it != transitive_cache_.end()) return it->second;
        const auto& perms = t_.permutations();
        std::size_t k = perms[0].size();
        std::vector<char> seen(k, 0);
        std::vector<int> orbit{0};
        seen[0] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (int a = 0; a < t_.order(); ++a)
                if (mask >> a & 1ULL) {
                    int y = perms[a][orbit[i]];
                    if (!seen[y]) {
                        seen[y] = 1;
                        orbit.push_back(y);
                    }
                }
        return transitive_cache_[mask] = orbit.size() == k;
    }

    int eval(const Word& w, const std::vector<int>& img) const
    {
        int v = t_.identity();
        for (const auto& s : w.syllables()) v = t_.mul(v, power(img[s.gen], s.exp));
        return v;
    }

    BigInt segment_dp()
    {
        bool masks = mode_ != HomMode::All;
        std::vector<Syllable> syl;
        if (!relators_.empty()) syl = relators_[0]->syllables();
        std::vector<int> last(n_, -1);
        for (std::size_t i = 0; i < syl.size(); ++i) last[syl[i].gen] = static_cast<int>(i);

        using State = std::unordered_map<std::pair<u64, u64>, u64, PairHash>;
        State states{{{static_cast<u64>(t_.identity()), masks ? 1ULL << t_.identity() : 0ULL}, 1}};

        auto combine = [&](const State& seg) {
            State next;
            for (const auto& [k1, c1] : states)
                for (const auto& [k2, c2] : seg) {
                    tick();
                    u64 v = static_cast<u64>(t_.mul(static_cast<int>(k1.first), static_cast<int>(k2.first)));
                    u64 m = masks ? join(k1.second, k2.second) : 0;
                    auto& slot = next[{v, m}];
                    slot = checked_add(slot, checked_mul(c1, c2));
                }
            states = std::move(next);
        };

        std::size_t i = 0;
        while (i < syl.size()) {
            std::size_t end = static_cast<std::size_t>(last[syl[i].gen]);
            for (std::size_t j = i; j <= end; ++j) end = std::max(end, static_cast<std::size_t>(last[syl[j].gen]));
            std::vector<int> gens;
            for (std::size_t j = i; j <= end; ++j)
                if (std::find(gens.begin(), gens.end(), syl[j].gen) == gens.end()) gens.push_back(syl[j].gen);
            State seg;
            std::vector<int> img(n_, t_.identity());
            std::vector<int> digits(gens.size(), 0);
            while (true) {
                tick();
                for (std::size_t g = 0; g < gens.size(); ++g) img[gens[g]] = digits[g];
                int v = t_.identity();
                for (std::size_t j = i; j <= end; ++j) v = t_.mul(v, power(img[syl[j].gen], syl[j].exp));
                u64 m = 0;
                if (masks) {
                    m = 1ULL << t_.identity();
                    for (int g : gens) m = join(m, elem_mask(img[g]));
                }
                ++seg[{static_cast<u64>(v), m}];
                std::size_t d = 0;
                while (d < digits.size() && ++digits[d] == t_.order()) digits[d++] = 0;
                if (d == digits.size()) break;
            }
            combine(seg);
            i = end + 1;
        }

        std::size_t free_gens = 0;
        for (int g = 0; g < n_; ++g)
            if (last[g] < 0) ++free_gens;
        if (!masks) {
            BigInt total = 0;
            for (const auto& [k, c] : states)
                if (static_cast<int>(k.first) == t_.identity()) total += BigInt(std::to_string(c));
            return total * ipow(t_.order(), free_gens);
        }
        State single;
        for (int a = 0; a < t_.order(); ++a) ++single[{static_cast<u64>(t_.identity()), elem_mask(a)}];
        for (std::size_t f = 0; f < free_gens; ++f) combine(single);
        BigInt total = 0;
        for (const auto& [k, c] : states)
            if (static_cast<int>(k.first) == t_.identity() && accept(k.second)) total += BigInt(std::to_string(c));
        return total;
    }

    BigInt backtrack()
    {
        std::vector<std::vector<char>> uses(relators_.size(), std::vector<char>(n_, 0));
        std::vector<long> occurrences(n_, 0);
        for (std::size_t r = 0; r < relators_.size(); ++r)
            for (const auto& s : relators_[r]->syllables()) {
                uses[r][s.gen] = 1;
                ++occurrences[s.gen];
            }
        std::vector<char> assigned(n_, 0);
        std::vector<int> order;
        std::vector<std::vector<std::size_t>> completes;
        std::vector<char> done(relators_.size(), 0);
        int free_tail = 0;
        while (static_cast<int>(order.size()) < n_) {
            int best = -1;
            std::size_t best_complete = 0;
            for (int g = 0; g < n_; ++g) {
                if (assigned[g]) continue;
                std::size_t c = 0;
                for (std::size_t r = 0; r < relators_.size(); ++r) {
                    if (done[r] || !uses[r][g]) continue;
                    bool all = true;
                    for (int h = 0; h < n_ && all; ++h)
                        if (uses[r][h] && h != g && !assigned[h]) all = false;
                    if (all) ++c;
                }
                if (best < 0 || c > best_complete || (c == best_complete && occurrences[g] > occurrences[best])) {
                    best = g;
                    best_complete = c;
                }
            }
            assigned[best] = 1;
            order.push_back(best);
            std::vector<std::size_t> now;
            for (std::size_t r = 0; r < relators_.size(); ++r) {
                if (done[r]) continue;
                bool all = true;
                for (int h = 0; h < n_ && all; ++h)
                    if (uses[r][h] && !assigned[h]) all = false;
                if (all) {
                    done[r] = 1;
                    now.push_back(r);
                }
            }
            completes.push_back(now);
            if (occurrences[best] == 0) ++free_tail;
        }
        bool masks = mode_ != HomMode::All;
        int depth_limit = masks ? n_ : n_ - free_tail;

        std::vector<int> img(n_, t_.identity());
        std::vector<u64> mask(n_ + 1, 0);
        mask[0] = masks ? 1ULL << t_.identity() : 0;
        u64 count = 0;
        std::function<void(int)> rec = [&](int d) {
            if (d == depth_limit) {
                if (!masks || accept(mask[d])) ++count;
                return;
            }
            int g = order[d];
            for (int a = 0; a < t_.order(); ++a) {
                tick();
                img[g] = a;
                bool ok = true;
                for (std::size_t r : completes[d])
                    if (eval(*relators_[r], img) != t_.identity()) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                if (masks) mask[d + 1] = join(mask[d], elem_mask(a));
                rec(d + 1);
            }
            img[g] = t_.identity();
        };
        rec(0);
        BigInt total(std::to_string(count));
        if (!masks) total *= ipow(t_.order(), static_cast<unsigned long>(free_tail));
        return total;
    }

    const Presentation& p_;
    const FiniteGroupTable& t_;
    HomMode mode_;
    OracleOptions opts_;
    int n_ = 0;
    long emax_ = 1;
    std::vector<std::vector<int>> pw_;
    std::vector<const Word*> relators_;
    u64 nodes_ = 0;
    std::unordered_map<int, u64> elem_cache_;
    std::unordered_map<std::pair<u64, u64>, u64, PairHash> join_cache_;
    std::unordered_map<u64, bool> transitive_cache_;
};

} // namespace

BigInt hom_count(const Presentation& p, const FiniteGroupTable& t, HomMode mode, const OracleOptions& opts)
{
    p.validate();
    return Counter(p, t, mode, opts).run();
}

BigInt aut_order(const FiniteGroupTable& t)
{
    int n = t.order();
    std::vector<int> elems(n);
    for (int a = 0; a < n; ++a) elems[a] = a;
    std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) { return t.element_order(a) > t.element_order(b); });
    std::vector<int> gens;
    std::vector<int> sub = t.closure_of(gens);
    for (int x : elems) {
        if (static_cast<int>(sub.size()) == n) break;
        if (std::binary_search(sub.begin(), sub.end(), x)) continue;
        gens.push_back(x);
        sub = t.closure_of(gens);
    }
    std::vector<int> parent(n, -1), via(n, -1), bfs{t.identity()};
    parent[t.identity()] = t.identity();
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (std::size_t g = 0; g < gens.size(); ++g) {
            int y = t.mul(bfs[i], gens[g]);
            if (parent[y] < 0) {
                parent[y] = bfs[i];
                via[y] = static_cast<int>(g);
                bfs.push_back(y);
            }
        }
    std::vector<int> ord(n);
    for (int a = 0; a < n; ++a) ord[a] = t.element_order(a);
    std::vector<int> img(gens.size(), 0);
    BigInt count = 0;
    std::vector<int> phi(n);
    std::vector<char> hit(n);
    std::function<void(std::size_t)> search = [&](std::size_t g) {
        if (g == gens.size()) {
            phi[t.identity()] = t.identity();
            for (std::size_t i = 1; i < bfs.size(); ++i) phi[bfs[i]] = t.mul(phi[parent[bfs[i]]], img[via[bfs[i]]]);
            std::fill(hit.begin(), hit.end(), 0);
            for (int x : phi) {
                if (hit[x]) return;
                hit[x] = 1;
            }
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (phi[t.mul(x, y)] != t.mul(phi[x], phi[y])) return;
            ++count;
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (ord[c] != ord[gens[g]]) continue;
            img[g] = c;
            search(g + 1);
        }
    };
    search(0);
    return count;
}

BigInt delta_oracle(const Presentation& p, const FiniteGroupTable& t, const OracleOptions& opts)
{
    return exact_div(hom_count(p, t, HomMode::Epi, opts), aut_order(t));
}

BigInt subgroup_count_oracle(const Presentation& p, int k, const OracleOptions& opts)
{
    if (k < 1) throw InputError("subgroup index must be positive");
    if (k == 1) return 1;
    return exact_div(hom_count(p, symmetric_group(k), HomMode::Transitive, opts), factorial(k - 1));
}

long CoverHomology::betti_mod(long q) const
{
    if (q == 0) return betti;
    long b = betti;
    for (const auto& d : torsion)
        if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(q))) ++b;
    return b;
}

CoverHomology cover_homology(const Presentation& p, const std::vector<std::vector<int>>& action)
{
    p.validate();
    std::size_t ell = p.generators.size();
    if (action.size() != ell) throw InputError("coset action needs one permutation per generator");
    if (ell == 0) throw InputError("coset action needs at least one generator");
    std::size_t k = action[0].size();
    if (k == 0) throw InputError("coset action on an empty set");
    std::vector<std::vector<int>> inverse(ell, std::vector<int>(k, -1));
    for (std::size_t j = 0; j < ell; ++j) {
        if (action[j].size() != k) throw InputError("coset permutations have different degrees");
        for (std::size_t a = 0; a < k; ++a) {
            int b = action[j][a];
            if (b < 0 || b >= static_cast<int>(k) || inverse[j][b] >= 0) throw InputError("coset action entry is not a permutation");
            inverse[j][b] = static_cast<int>(a);
        }
    }
    auto act = [&](int a, const Word& w) {
        for (const auto& s : w.syllables()) {
            const auto& perm = s.exp > 0 ? action[s.gen] : inverse[s.gen];
            for (long e = 0; e < std::abs(s.exp); ++e) a = perm[a];
        }
        return a;
    };
    {
        std::vector<char> seen(k, 0);
        std::vector<int> orbit{0};
        seen[0] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (std::size_t j = 0; j < ell; ++j) {
                int y = action[j][orbit[i]];
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        if (orbit.size() != k) throw InputError("coset action is not transitive");
    }
    for (const auto& r : p.relators)
        for (std::size_t a = 0; a < k; ++a)
            if (act(static_cast<int>(a), r) != static_cast<int>(a)) throw InputError("coset action does not satisfy the relators");

    std::size_t m = p.relators.size();
    IntMatrix J(m * k, ell * k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < ell; ++j) {
            FreeRingElement d = fox_derivative(p.relators[i], static_cast<int>(j));
            for (const auto& [w, c] : d.terms())
                for (std::size_t a = 0; a < k; ++a) {
                    std::size_t b = static_cast<std::size_t>(act(static_cast<int>(a), w));
                    J(i * k + a, j * k + b) += c;
                }
        }
    SmithForm s = smith_normal_form(J);
    CoverHomology out;
    out.betti = static_cast<long>(s.coker_free_rank) - static_cast<long>(k - 1);
    out.torsion = s.torsion();
    return out;
}

std::vector<std::vector<int>> regular_cyclic_action(const std::vector<long>& lambda, long N)
{
    if (N < 1) throw InputError("cyclic order must be positive");
    std::vector<std::vector<int>> out;
    for (long l : lambda) {
        std::vector<int> perm(N);
        long shift = ((l % N) + N) % N;
        for (long a = 0; a < N; ++a) perm[a] = static_cast<int>((a + shift) % N);
        out.push_back(perm);
    }
    return out;
}

} // namespace hallinv
