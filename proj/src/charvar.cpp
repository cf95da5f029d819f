#include "hallinv/charvar.hpp"

#include <numeric>
#include <mutex>
#include <thread>

#include "hallinv/error.hpp"

namespace hallinv {

namespace {

long pmod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body)
{
    if (threads <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex mu;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += threads) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<long> small_long_coords(const FieldElement& v)
{
    if (v.field()->finite()) return v.residues();
    std::vector<long> out;
    for (const auto& c : v.rationals()) {
        require(c.get_den() == 1, "root of unity with non-integral coordinates");
        out.push_back(to_int64(c.get_num()));
    }
    return out;
}

} // namespace

std::vector<FieldElement> Character::values() const
{
    std::vector<FieldElement> v = free_values;
    v.insert(v.end(), torsion_values.begin(), torsion_values.end());
    return v;
}

bool Character::is_trivial() const
{
    for (const auto& v : values())
        if (!v.is_one()) return false;
    return true;
}

long element_order(const FieldElement& v)
{
    if (v.is_zero()) throw InputError("zero has no multiplicative order");
    const Field& K = *v.field();
    std::uint64_t bound = K.finite() ? K.size() - 1 : static_cast<std::uint64_t>(std::lcm(2L, K.cyclotomic_order()));
    for (auto d : divisors(bound))
        if (v.pow(static_cast<long>(d)).is_one()) return static_cast<long>(d);
    return 0;
}

long Character::order() const
{
    long o = 1;
    for (const auto& v : values()) {
        long e = element_order(v);
        if (e == 0) return 0;
        o = std::lcm(o, e);
    }
    return o;
}

Character trivial_character(const AbelStructure& abel, const FieldHandle& K)
{
    return {K, std::vector<FieldElement>(abel.free_rank, K->one()), std::vector<FieldElement>(abel.torsion.size(), K->one())};
}

Character make_character(const AbelStructure& abel, const FieldHandle& K, std::vector<FieldElement> free_values,
                         std::vector<FieldElement> torsion_values)
{
    if (free_values.size() != abel.free_rank || torsion_values.size() != abel.torsion.size())
        throw InputError("character has the wrong number of coordinates");
    for (const auto& v : free_values) {
        K->check_owner(v);
        if (v.is_zero()) throw InputError("character value is zero");
    }
    for (std::size_t i = 0; i < torsion_values.size(); ++i) {
        K->check_owner(torsion_values[i]);
        if (!torsion_values[i].pow(abel.torsion[i]).is_one())
            throw InputError("torsion coordinate is not an e-th root of unity");
    }
    return {K, std::move(free_values), std::move(torsion_values)};
}

FieldMatrix evaluate(const AlexanderMatrix& a, const Character& t)
{
    if (t.free_values.size() != a.abel.free_rank || t.torsion_values.size() != a.abel.torsion.size())
        throw InputError("character does not match the abelianization");
    return evaluate(a, t.field, t.values());
}

long depth(const AlexanderMatrix& a, const Character& t)
{
    return static_cast<long>(corank_over_field(evaluate(a, t), t.field)) - 1;
}

// ---------------------------------------------------------------- RootEvaluator

RootEvaluator::RootEvaluator(const AlexanderMatrix& a, FieldHandle K, long M, long root_power)
    : abel_(&a.abel), rows_(a.rows), cols_(a.cols), K_(std::move(K)), M_(M)
{
    if (M < 1) throw InputError("root order must be positive");
    if (std::gcd(root_power, M) != 1) throw InputError("root power must be coprime to the root order");
    zeta_ = primitive_root_of_unity(K_, M).pow(root_power);
    FieldElement z = K_->one();
    for (long k = 0; k < M; ++k) {
        power_coords_.push_back(small_long_coords(z));
        z = K_->mul(z, zeta_);
    }
    entries_.resize(rows_ * cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (const auto& [key, c] : a.entries[i].terms()) entries_[i].push_back({c, key});
}

FieldMatrix RootEvaluator::evaluate(const std::vector<long>& exps) const
{
    if (exps.size() != abel_->num_coordinates()) throw InputError("exponent vector has the wrong length");
    std::size_t s = static_cast<std::size_t>(K_->degree());
    FieldMatrix m(rows_, cols_, K_->zero());
    std::vector<long> bins(M_);
    std::vector<long> coords(s);
    for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
        const auto& terms = entries_[idx];
        if (terms.empty()) continue;
        std::fill(bins.begin(), bins.end(), 0);
        for (const auto& t : terms) {
            long e = 0;
            for (std::size_t c = 0; c < exps.size(); ++c)
                if (exps[c] && t.key[c]) e += exps[c] * pmod(t.key[c], M_);
            bins[e % M_] += t.coef;
        }
        std::fill(coords.begin(), coords.end(), 0);
        for (long k = 0; k < M_; ++k) {
            if (!bins[k]) continue;
            const auto& pc = power_coords_[k];
            for (std::size_t i = 0; i < s; ++i) coords[i] += bins[k] * pc[i];
        }
        m(idx / cols_, idx % cols_) = K_->from_coordinates(coords);
    }
    return m;
}

long RootEvaluator::depth(const std::vector<long>& exps) const
{
    return static_cast<long>(corank_over_field(evaluate(exps), K_)) - 1;
}

Character RootEvaluator::character(const std::vector<long>& exps) const
{
    std::vector<FieldElement> fv, tv;
    for (std::size_t c = 0; c < exps.size(); ++c) {
        FieldElement v = zeta_.pow(pmod(exps[c], M_));
        if (c < abel_->free_rank) fv.push_back(v);
        else tv.push_back(v);
    }
    return make_character(*abel_, K_, std::move(fv), std::move(tv));
}

// ---------------------------------------------------------------- enumeration

namespace {

std::vector<std::size_t> eligible_coordinates(const AbelStructure& abel, long p)
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < abel.num_coordinates(); ++c) {
        long e = abel.coordinate_order(c);
        if (e == 0 || e % p == 0) out.push_back(c);
    }
    return out;
}

std::size_t checked_power(long p, std::size_t n)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (r > (std::size_t{1} << 40) / static_cast<std::size_t>(p)) throw InfeasibleError("too many characters to enumerate");
        r *= static_cast<std::size_t>(p);
    }
    return r;
}

} // namespace

std::vector<std::vector<long>> order_p_exponents(const AbelStructure& abel, long p)
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw InputError("p must be prime");
    auto elig = eligible_coordinates(abel, p);
    std::size_t total = checked_power(p, elig.size());
    std::vector<std::vector<long>> out;
    out.reserve(total - 1);
    for (std::size_t i = 1; i < total; ++i) {
        std::vector<long> e(abel.num_coordinates(), 0);
        std::size_t x = i;
        for (auto c : elig) {
            e[c] = static_cast<long>(x % p);
            x /= p;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Character> enumerate_order_p_characters(const AbelStructure& abel, long p, const FieldHandle& K)
{
    if (K->characteristic() == p) throw InputError("field characteristic equals p");
    FieldElement zeta = primitive_root_of_unity(K, p);
    std::vector<Character> out;
    for (const auto& e : order_p_exponents(abel, p)) {
        std::vector<FieldElement> fv, tv;
        for (std::size_t c = 0; c < e.size(); ++c) {
            FieldElement v = zeta.pow(e[c]);
            if (c < abel.free_rank) fv.push_back(v);
            else tv.push_back(v);
        }
        out.push_back(make_character(abel, K, std::move(fv), std::move(tv)));
    }
    return out;
}

// ---------------------------------------------------------------- beta

BigInt BettiDistribution::total() const
{
    BigInt s = 0;
    for (const auto& [d, c] : counts) s += c;
    return s;
}

BigInt BettiDistribution::at(long d) const
{
    auto it = counts.find(d);
    return it == counts.end() ? BigInt(0) : it->second;
}

long BettiDistribution::max_depth() const
{
    long m = 0;
    for (const auto& [d, c] : counts)
        if (c != 0) m = std::max(m, d);
    return m;
}

void BettiDistribution::validate() const
{
    for (const auto& [d, c] : counts) require(d >= 0 && c >= 0, "negative entry in Betti distribution");
    BigInt expect = exact_div(ipow(p, n_p) - 1, BigInt(p - 1));
    require(total() == expect, "Betti distribution does not sum to (p^n-1)/(p-1)");
}

std::vector<long> order_p_depths(const AlexanderMatrix& a, long prime, long q, const BetaOptions& opts)
{
    if (prime == q) throw InputError("q must differ from p");
    FieldHandle K = sufficiently_large_field(prime, q);
    RootEvaluator ev(a, K, prime, opts.root_power);
    auto exps = order_p_exponents(a.abel, prime);
    std::vector<long> depths(exps.size());
    parallel_for(exps.size(), opts.threads, [&](std::size_t i) { depths[i] = ev.depth(exps[i]); });
    return depths;
}

BettiDistribution beta_distribution(const Presentation& p, long prime, long q, const BetaOptions& opts)
{
    return beta_distribution(alexander_matrix(p), prime, q, opts);
}

BettiDistribution beta_distribution(const AlexanderMatrix& a, long prime, long q, const BetaOptions& opts)
{
    auto depths = order_p_depths(a, prime, q, opts);
    auto elig = eligible_coordinates(a.abel, prime);
    // Galois orbits: index of t^j is obtained digitwise.
    for (std::size_t i = 0; i < depths.size(); ++i) {
        require(depths[i] >= 0, "nontrivial character with negative depth");
        std::size_t idx = i + 1;
        for (long j = 2; j < prime; ++j) {
            std::size_t x = idx, out = 0, place = 1;
            for (std::size_t k = 0; k < elig.size(); ++k) {
                out += ((x % prime) * j % prime) * place;
                x /= prime;
                place *= prime;
            }
            require(depths[out - 1] == depths[i], "depth is not constant on a Galois orbit");
        }
    }
    BettiDistribution b;
    b.p = prime;
    b.q = q;
    b.n_p = elig.size();
    std::map<long, long> raw;
    for (auto d : depths) ++raw[d];
    BigInt total = exact_div(ipow(prime, b.n_p) - 1, BigInt(prime - 1));
    BigInt rest = total;
    for (const auto& [d, c] : raw) {
        if (d == 0) continue;
        b.counts[d] = exact_div(BigInt(c), BigInt(prime - 1));
        rest -= b.counts[d];
    }
    b.counts[0] = rest;
    require(rest == exact_div(BigInt(raw[0]), BigInt(prime - 1)), "depth-zero count disagrees with the sum identity");
    b.validate();
    return b;
}

// ---------------------------------------------------------------- covers

namespace {

std::vector<long> coordinate_exponents(const AbelStructure& abel, const std::vector<long>& images, long N)
{
    std::vector<long> a(abel.num_coordinates(), 0);
    for (std::size_t c = 0; c < a.size(); ++c) {
        long s = 0;
        for (std::size_t j = 0; j < images.size(); ++j) s = pmod(s + pmod(abel.basis_words[c][j], N) * images[j], N);
        a[c] = s;
    }
    return a;
}

void check_cyclic_epi(const Presentation& p, const std::vector<long>& images, long N)
{
    if (N < 1) throw InputError("cyclic quotient order must be positive");
    if (images.size() != p.num_generators()) throw InputError("need one image per generator");
    long g = N;
    for (auto v : images) g = std::gcd(g, pmod(v, N));
    if (g != 1 && N != 1) throw InputError("map to Z_N is not surjective");
    for (const auto& r : p.relators) {
        auto e = r.exponent_sums(p.num_generators());
        long s = 0;
        for (std::size_t j = 0; j < e.size(); ++j) s = pmod(s + pmod(e[j], N) * pmod(images[j], N), N);
        if (s != 0) throw InputError("map to Z_N does not kill every relator");
    }
}

} // namespace

long b1_cover_cyclic(const Presentation& p, const std::vector<long>& images, long N, long q)
{
    return b1_cover_cyclic(alexander_matrix(p), p, images, N, q);
}

long b1_cover_cyclic(const AlexanderMatrix& a, const Presentation& p, const std::vector<long>& images, long N, long q)
{
    check_cyclic_epi(p, images, N);
    long result = a.abel.b1(q);
    if (N == 1) return result;
    FieldHandle K = sufficiently_large_field(N, q);
    RootEvaluator ev(a, K, N);
    std::vector<long> norm(images.size());
    for (std::size_t j = 0; j < images.size(); ++j) norm[j] = pmod(images[j], N);
    auto base = coordinate_exponents(a.abel, norm, N);
    for (auto k : divisors(static_cast<std::uint64_t>(N))) {
        if (k == 1) continue;
        long step = N / static_cast<long>(k);
        std::vector<long> e(base.size());
        for (std::size_t c = 0; c < e.size(); ++c) e[c] = base[c] * step % N;
        result += static_cast<long>(euler_phi(k)) * ev.depth(e);
    }
    return result;
}

long b1_cover_abelian(const Presentation& p, const std::vector<std::vector<long>>& images,
                      const std::vector<long>& orders, long q)
{
    std::size_t r = orders.size();
    if (images.size() != p.num_generators()) throw InputError("need one image per generator");
    for (auto c : orders)
        if (c < 1) throw InputError("cyclic factor orders must be positive");
    for (const auto& im : images)
        if (im.size() != r) throw InputError("image has the wrong number of components");
    long order = 1, E = 1;
    for (auto c : orders) {
        order *= c;
        E = std::lcm(E, c);
    }
    auto index_of = [&](const std::vector<long>& v) {
        long idx = 0;
        for (std::size_t i = 0; i < r; ++i) idx = idx * orders[i] + pmod(v[i], orders[i]);
        return idx;
    };
    auto element = [&](long idx) {
        std::vector<long> v(r);
        for (std::size_t i = r; i-- > 0;) {
            v[i] = idx % orders[i];
            idx /= orders[i];
        }
        return v;
    };
    for (const auto& rel : p.relators) {
        std::vector<long> s(r, 0);
        auto e = rel.exponent_sums(p.num_generators());
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::size_t i = 0; i < r; ++i) s[i] = pmod(s[i] + e[j] % orders[i] * images[j][i], orders[i]);
        if (index_of(s) != 0) throw InputError("map to the abelian group does not kill every relator");
    }
    // surjectivity by closure
    std::vector<char> reached(order, 0);
    std::vector<long> frontier{0};
    reached[0] = 1;
    while (!frontier.empty()) {
        long cur = frontier.back();
        frontier.pop_back();
        auto v = element(cur);
        for (const auto& im : images) {
            std::vector<long> w(r);
            for (std::size_t i = 0; i < r; ++i) w[i] = pmod(v[i] + im[i], orders[i]);
            long idx = index_of(w);
            if (!reached[idx]) {
                reached[idx] = 1;
                frontier.push_back(idx);
            }
        }
    }
    for (auto x : reached)
        if (!x) throw InputError("map to the abelian group is not surjective");

    AlexanderMatrix a = alexander_matrix(p);
    long result = a.abel.b1(q);
    if (order == 1) return result;
    FieldHandle K = sufficiently_large_field(E, q);
    RootEvaluator ev(a, K, E);
    // g[c][i]: i-th component of the image of basis element c
    std::vector<std::vector<long>> g(a.abel.num_coordinates(), std::vector<long>(r, 0));
    for (std::size_t c = 0; c < g.size(); ++c)
        for (std::size_t i = 0; i < r; ++i) {
            long s = 0;
            for (std::size_t j = 0; j < images.size(); ++j)
                s = pmod(s + pmod(a.abel.basis_words[c][j], orders[i]) * pmod(images[j][i], orders[i]), orders[i]);
            g[c][i] = s;
        }
    std::vector<char> seen(order, 0);
    for (long idx = 1; idx < order; ++idx) {
        if (seen[idx]) continue;
        auto rho = element(idx);
        long o = 1;
        for (std::size_t i = 0; i < r; ++i) o = std::lcm(o, orders[i] / std::gcd(rho[i], orders[i]));
        for (long u = 1; u < o; ++u) {
            if (std::gcd(u, o) != 1) continue;
            std::vector<long> w(r);
            for (std::size_t i = 0; i < r; ++i) w[i] = rho[i] * u % orders[i];
            seen[index_of(w)] = 1;
        }
        std::vector<long> e(g.size(), 0);
        for (std::size_t c = 0; c < g.size(); ++c) {
            long s = 0;
            for (std::size_t i = 0; i < r; ++i) s = pmod(s + rho[i] * (E / orders[i]) % E * g[c][i], E);
            e[c] = s;
        }
        result += static_cast<long>(euler_phi(static_cast<std::uint64_t>(o))) * ev.depth(e);
    }
    return result;
}

long max_depth_dividing(const AlexanderMatrix& a, long k, long q)
{
    if (k < 2) throw InputError("k must be at least 2");
    FieldHandle K = sufficiently_large_field(k, q);
    RootEvaluator ev(a, K, k);
    std::size_t n = a.abel.num_coordinates();
    std::vector<long> steps(n);
    std::size_t total = 1;
    for (std::size_t c = 0; c < n; ++c) {
        long e = a.abel.coordinate_order(c);
        steps[c] = e == 0 ? 1 : k / std::gcd(k, e);
        long choices = k / steps[c];
        if (total > 2'000'000 / static_cast<std::size_t>(choices)) throw InfeasibleError("too many characters for max depth");
        total *= static_cast<std::size_t>(choices);
    }
    long best = -1;
    for (std::size_t i = 1; i < total; ++i) {
        std::vector<long> e(n);
        std::size_t x = i;
        for (std::size_t c = 0; c < n; ++c) {
            long choices = k / steps[c];
            e[c] = static_cast<long>(x % choices) * steps[c];
            x /= choices;
        }
        best = std::max(best, ev.depth(e));
    }
    return best;
}

BoundsReport check_bounds_congruence(const CoverBounds& c)
{
    if (c.index < 1) throw InputError("cover index must be positive");
    BoundsReport r;
    r.lower = c.b1_group;
    r.upper = c.b1_group + (c.index - 1) * (c.generators - 1);
    long D = 0;
    for (auto p : prime_factors(static_cast<std::uint64_t>(c.index))) D = std::gcd(D, static_cast<long>(p) - 1);
    r.modulus = D;
    if (c.depth_bound) r.sharpened_upper = c.b1_group + (c.index - 1) * *c.depth_bound;
    if (c.b1_cover < r.lower) throw InvariantError("cover Betti number below the lower bound");
    if (c.index > 1 && c.b1_cover > r.upper) throw InvariantError("cover Betti number above the generator bound");
    if (r.sharpened_upper && c.index > 1 && c.b1_cover > *r.sharpened_upper)
        throw InvariantError("cover Betti number above the depth bound");
    if (D > 0 && pmod(c.b1_cover - c.b1_group, D) != 0) throw InvariantError("cover Betti number violates the congruence");
    return r;
}

} // namespace hallinv
