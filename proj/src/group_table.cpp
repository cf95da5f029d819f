#include "hallinv/group_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hallinv/error.hpp"

namespace hallinv {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> mul, std::string name)
    : mul_(std::move(mul)), name_(std::move(name))
{
    int n = order();
    if (n == 0) throw InputError("group table is empty");
    for (const auto& row : mul_) {
        if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw InputError("group table entry out of range");
    }
    id_ = -1;
    for (int e = 0; e < n && id_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
        if (ok) id_ = e;
    }
    if (id_ < 0) throw InputError("group table has no identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == id_ && mul_[b][a] == id_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw InputError("group table element without inverse");
    }
    if (n <= 128) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw InputError("group table is not associative");
    }
}

FiniteGroupTable FiniteGroupTable::from_permutations(const std::vector<std::vector<int>>& gens, std::string name)
{
    if (gens.empty()) throw InputError("need at least one permutation");
    std::size_t k = gens[0].size();
    for (const auto& g : gens) {
        if (g.size() != k) throw InputError("permutations of different degrees");
        std::vector<int> s = g;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < k; ++i)
            if (s[i] != static_cast<int>(i)) throw InputError("not a permutation");
    }
    // (a*b)(x) = b(a(x)): apply a first
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(k);
        for (std::size_t x = 0; x < k; ++x) c[x] = b[a[x]];
        return c;
    };
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            auto c = compose(elems[i], g);
            if (!index.count(c)) {
                index[c] = static_cast<int>(elems.size());
                elems.push_back(c);
            }
        }
    std::size_t n = elems.size();
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = index.at(compose(elems[a], elems[b]));
    FiniteGroupTable t(std::move(mul), std::move(name));
    t.perms_ = std::move(elems);
    return t;
}

int FiniteGroupTable::pow(int a, long e) const
{
    if (e < 0) {
        a = inv_[a];
        e = -e;
    }
    int r = id_;
    for (long i = 0; i < e; ++i) r = mul_[r][a];
    return r;
}

int FiniteGroupTable::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != id_; x = mul_[x][a]) ++k;
    return k;
}

bool FiniteGroupTable::is_abelian() const
{
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < a; ++b)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

std::vector<int> FiniteGroupTable::closure_of(const std::vector<int>& elements) const
{
    std::vector<char> in(order(), 0);
    std::vector<int> list{id_};
    in[id_] = 1;
    for (std::size_t i = 0; i < list.size(); ++i)
        for (int g : elements) {
            int y = mul_[list[i]][g];
            if (!in[y]) {
                in[y] = 1;
                list.push_back(y);
            }
        }
    std::sort(list.begin(), list.end());
    return list;
}

unsigned long long FiniteGroupTable::closure(unsigned long long mask) const
{
    if (order() > 64) throw InputError("subgroup masks need a group of order at most 64");
    std::vector<int> gens;
    for (int a = 0; a < order(); ++a)
        if (mask >> a & 1ULL) gens.push_back(a);
    unsigned long long out = 0;
    for (int x : closure_of(gens)) out |= 1ULL << x;
    return out;
}

FiniteGroupTable cyclic_group(int n)
{
    if (n < 1) throw InputError("cyclic group order must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return FiniteGroupTable(std::move(mul), "Z" + std::to_string(n));
}

FiniteGroupTable abelian_group(const std::vector<int>& orders)
{
    if (orders.empty()) return cyclic_group(1);
    FiniteGroupTable t = cyclic_group(orders[0]);
    std::string name = t.name();
    for (std::size_t i = 1; i < orders.size(); ++i) {
        t = direct_product(t, cyclic_group(orders[i]));
        name += "+Z" + std::to_string(orders[i]);
    }
    std::vector<std::vector<int>> mul(t.order(), std::vector<int>(t.order()));
    for (int a = 0; a < t.order(); ++a)
        for (int b = 0; b < t.order(); ++b) mul[a][b] = t.mul(a, b);
    return FiniteGroupTable(std::move(mul), name);
}

FiniteGroupTable symmetric_group(int k)
{
    if (k < 1) throw InputError("symmetric group degree must be positive");
    std::vector<std::vector<int>> gens;
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    if (k == 1) return FiniteGroupTable::from_permutations({id}, "S1");
    std::vector<int> t = id;
    std::swap(t[0], t[1]);
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = (i + 1) % k;
    return FiniteGroupTable::from_permutations({t, c}, "S" + std::to_string(k));
}

FiniteGroupTable alternating_group(int k)
{
    if (k < 3) {
        std::vector<int> id(std::max(k, 1));
        std::iota(id.begin(), id.end(), 0);
        return FiniteGroupTable::from_permutations({id}, "A" + std::to_string(k));
    }
    std::vector<std::vector<int>> gens;
    for (int i = 2; i < k; ++i) {
        std::vector<int> g(k);
        std::iota(g.begin(), g.end(), 0);
        g[0] = 1;
        g[1] = i;
        g[i] = 0;
        gens.push_back(g);
    }
    return FiniteGroupTable::from_permutations(gens, "A" + std::to_string(k));
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b)
{
    int n = a.order() * b.order();
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            mul[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
    return FiniteGroupTable(std::move(mul), a.name() + "x" + b.name());
}

bool isomorphic(const FiniteGroupTable& a, const FiniteGroupTable& b)
{
    if (a.order() != b.order()) return false;
    int n = a.order();
    std::vector<int> oa(n), ob(n);
    for (int x = 0; x < n; ++x) {
        oa[x] = a.element_order(x);
        ob[x] = b.element_order(x);
    }
    {
        auto sa = oa, sb = ob;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // greedy generating set of a, with BFS words
    std::vector<int> gens;
    std::vector<int> sub = a.closure_of(gens);
    for (int x = 0; x < n && static_cast<int>(sub.size()) < n; ++x) {
        if (std::binary_search(sub.begin(), sub.end(), x)) continue;
        gens.push_back(x);
        sub = a.closure_of(gens);
    }
    std::vector<int> parent(n, -1), via(n, -1), bfs{a.identity()};
    parent[a.identity()] = a.identity();
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (std::size_t g = 0; g < gens.size(); ++g) {
            int y = a.mul(bfs[i], gens[g]);
            if (parent[y] < 0) {
                parent[y] = bfs[i];
                via[y] = static_cast<int>(g);
                bfs.push_back(y);
            }
        }
    std::vector<int> img(gens.size(), 0);
    std::function<bool(std::size_t)> search = [&](std::size_t g) -> bool {
        if (g == gens.size()) {
            std::vector<int> phi(n, -1);
            phi[a.identity()] = b.identity();
            for (std::size_t i = 1; i < bfs.size(); ++i) phi[bfs[i]] = b.mul(phi[parent[bfs[i]]], img[via[bfs[i]]]);
            std::vector<char> hit(n, 0);
            for (int x : phi) {
                if (hit[x]) return false;
                hit[x] = 1;
            }
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
            return true;
        }
        for (int c = 0; c < n; ++c) {
            if (ob[c] != oa[gens[g]]) continue;
            img[g] = c;
            if (search(g + 1)) return true;
        }
        return false;
    };
    return search(0);
}

} // namespace hallinv
