#pragma once

// Brute-force reference computations. Nothing here calls into the library:
// every value is recomputed from the definitions over a bounded window.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Vec = std::vector<Int>;

/// member[x] for 0 <= x < limit, by the coin-change recurrence.
inline std::vector<char> members(const Vec& gens, Int limit) {
    std::vector<char> m(static_cast<std::size_t>(limit), 0);
    if (limit > 0) m[0] = 1;
    for (Int x = 1; x < limit; ++x)
        for (Int g : gens)
            if (g <= x && m[static_cast<std::size_t>(x - g)]) {
                m[static_cast<std::size_t>(x)] = 1;
                break;
            }
    return m;
}

/// Gaps of the semigroup generated by gens (gcd 1). Past max(gens)
/// consecutive members everything is in.
inline Vec gaps(const Vec& gens) {
    const Int run = *std::max_element(gens.begin(), gens.end());
    Vec out;
    std::vector<char> m{1};
    Int streak = 1;
    for (Int x = 1; streak < run; ++x) {
        bool in = false;
        for (Int g : gens)
            if (g <= x && m[static_cast<std::size_t>(x - g)]) in = true;
        m.push_back(in);
        if (in) ++streak;
        else {
            streak = 0;
            out.push_back(x);
        }
    }
    return out;
}

inline Int frobenius(const Vec& gens) {
    const Vec g = gaps(gens);
    return g.empty() ? -1 : g.back();
}

/// Minimal generators read off a membership table valid up to limit.
inline Vec minimal_generators(const std::vector<char>& in, Int limit) {
    Vec gens;
    for (Int x = 1; x < limit; ++x) {
        if (!in[static_cast<std::size_t>(x)]) continue;
        bool decomposable = false;
        for (Int y = 1; y < x && !decomposable; ++y)
            decomposable = in[static_cast<std::size_t>(y)] && in[static_cast<std::size_t>(x - y)];
        if (!decomposable) gens.push_back(x);
    }
    return gens;
}

/// Is {0} ∪ (N \ gaps) closed under addition? gaps must be sorted.
inline bool gap_set_closed(const Vec& gapset) {
    if (gapset.empty()) return true;
    const Int f = gapset.back();
    std::vector<char> in(static_cast<std::size_t>(f + 1), 1);
    for (Int g : gapset) in[static_cast<std::size_t>(g)] = 0;
    for (Int a = 1; a <= f; ++a)
        for (Int b = a; a + b <= f; ++b)
            if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(a + b)])
                return false;
    return true;
}

/// Number of numerical semigroups with Frobenius number f >= 1, by running
/// over all subsets of [1, f-1] as candidate gap sets.
inline std::uint64_t count_frobenius(Int f) {
    std::uint64_t count = 0;
    const Int n = f - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Vec g;
        for (Int i = 0; i < n; ++i)
            if (mask >> i & 1) g.push_back(i + 1);
        g.push_back(f);
        count += gap_set_closed(g);
    }
    return count;
}

/// Number of numerical semigroups of genus g. Every gap is below 2g.
inline std::uint64_t count_genus(Int g) {
    if (g == 0) return 1;
    std::uint64_t count = 0;
    const Int n = 2 * g - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != g) continue;
        Vec gs;
        for (Int i = 0; i < n; ++i)
            if (mask >> i & 1) gs.push_back(i + 1);
        count += gap_set_closed(gs);
    }
    return count;
}

/// All nonnegative integer vectors z with sum z_i gens_i = n.
inline std::vector<Vec> factorizations(Int n, const Vec& gens) {
    std::vector<Vec> out;
    Vec z(gens.size(), 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int rest) {
        if (i == gens.size()) {
            if (rest == 0) out.push_back(z);
            return;
        }
        for (Int k = 0; k * gens[i] <= rest; ++k) {
            z[i] = k;
            rec(i + 1, rest - k * gens[i]);
        }
        z[i] = 0;
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline Int length(const Vec& z) { return std::accumulate(z.begin(), z.end(), Int{0}); }

inline Int distance(const Vec& a, const Vec& b) {
    Int pa = 0, pb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Int c = std::min(a[i], b[i]);
        pa += a[i] - c;
        pb += b[i] - c;
    }
    return std::max(pa, pb);
}

/// Smallest N such that the graph on zs joining factorizations at distance
/// <= N is connected (Kruskal bottleneck).
inline Int catenary(const std::vector<Vec>& zs) {
    if (zs.size() <= 1) return 0;
    std::vector<std::tuple<Int, std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j) edges.emplace_back(distance(zs[i], zs[j]), i, j);
    std::sort(edges.begin(), edges.end());
    std::vector<std::size_t> parent(zs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t comps = zs.size();
    for (const auto& [d, i, j] : edges) {
        const auto a = find(i), b = find(j);
        if (a == b) continue;
        parent[a] = b;
        if (--comps == 1) return d;
    }
    return 0;
}

/// Sorted distinct lengths.
inline Vec lengths(const std::vector<Vec>& zs) {
    std::set<Int> ls;
    for (const auto& z : zs) ls.insert(length(z));
    return Vec(ls.begin(), ls.end());
}

inline Vec delta(const std::vector<Vec>& zs) {
    const Vec ls = lengths(zs);
    std::set<Int> d;
    for (std::size_t i = 1; i < ls.size(); ++i) d.insert(ls[i] - ls[i - 1]);
    return Vec(d.begin(), d.end());
}

/// Congruence generated by the relations, restricted to the fiber zs of one
/// element: is the graph of single relation moves z = a + u -> a + v
/// connected?
inline bool fiber_connected(const std::vector<Vec>& zs, const std::vector<std::pair<Vec, Vec>>& relations) {
    if (zs.size() <= 1) return true;
    std::map<Vec, std::size_t> index;
    for (std::size_t i = 0; i < zs.size(); ++i) index[zs[i]] = i;
    std::vector<char> seen(zs.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vec z = zs[stack.back()];
        stack.pop_back();
        for (const auto& [l, r] : relations)
            for (int dir = 0; dir < 2; ++dir) {
                const Vec& from = dir ? r : l;
                const Vec& to = dir ? l : r;
                Vec w = z;
                bool ok = true;
                for (std::size_t i = 0; i < w.size() && ok; ++i) {
                    if (w[i] < from[i]) ok = false;
                    else w[i] += to[i] - from[i];
                }
                if (!ok) continue;
                const auto it = index.find(w);
                if (it != index.end() && !seen[it->second]) {
                    seen[it->second] = 1;
                    ++reached;
                    stack.push_back(it->second);
                }
            }
    }
    return reached == zs.size();
}

/// omega(n) from the definition: the least N such that whenever n divides
/// (in the semigroup order) a sum of atoms, some at most N of those atoms
/// already do. Sums are searched up to `sum_limit`.
inline Int omega(Int n, const Vec& gens, const std::vector<char>& in, Int sum_limit) {
    auto divides = [&](Int total) {
        const Int d = total - n;
        return d >= 0 && (d >= static_cast<Int>(in.size()) || in[static_cast<std::size_t>(d)]);
    };
    Int best = 0;
    const std::size_t p = gens.size();
    Vec x(p, 0);
    // Every multiset of atoms with sum <= sum_limit.
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int total) {
        if (i == p) {
            if (!divides(total)) return;
            // least size of a sub-multiset that still dominates n
            Int least = length(x);
            Vec y(p, 0);
            std::function<void(std::size_t, Int, Int)> sub = [&](std::size_t j, Int s, Int size) {
                if (size >= least) return;
                if (j == p) {
                    if (divides(s)) least = size;
                    return;
                }
                for (Int k = 0; k <= x[j]; ++k) sub(j + 1, s + k * gens[j], size + k);
            };
            sub(0, 0, 0);
            best = std::max(best, least);
            return;
        }
        for (Int k = 0; total + k * gens[i] <= sum_limit; ++k) {
            x[i] = k;
            rec(i + 1, total + k * gens[i]);
        }
        x[i] = 0;
    };
    rec(0, 0);
    return best;
}

inline Int gcd_all(const Vec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g;
}

} // namespace oracle
