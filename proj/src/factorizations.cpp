#include "sgps/factorizations.hpp"

#include <algorithm>
#include <numeric>

#include "sgps/presentations.hpp"

namespace sgps {

namespace {

void require_same_dimension(std::span<const Factorization> set) {
    for (const auto& z : set)
        if (z.size() != set.front().size())
            fail(ErrorKind::DimensionMismatch, "factorizations have different lengths");
}

IntList sorted_unique(IntList v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

IntList deltas_of(const IntList& sorted_lengths) {
    IntList out;
    for (std::size_t i = 1; i < sorted_lengths.size(); ++i) out.push_back(sorted_lengths[i] - sorted_lengths[i - 1]);
    return sorted_unique(std::move(out));
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

std::vector<Factorization> factorizations(Int n, std::span<const Int> gens) {
    for (Int g : gens)
        if (g <= 0) fail(ErrorKind::InvalidArgument, "generators must be positive");
    std::vector<Factorization> out;
    if (n < 0) return out;
    const std::size_t e = gens.size();
    require_window(checked_mul(n + 1, static_cast<Int>(e) + 1), "factorization table");

    // reach[i][r]: r is a nonnegative combination of gens[i..e).
    std::vector<std::vector<char>> reach(e + 1, std::vector<char>(static_cast<std::size_t>(n + 1), 0));
    reach[e][0] = 1;
    for (std::size_t i = e; i-- > 0;) {
        for (Int r = 0; r <= n; ++r) {
            const auto ur = static_cast<std::size_t>(r);
            reach[i][ur] = reach[i + 1][ur] || (r >= gens[i] && reach[i][ur - static_cast<std::size_t>(gens[i])]);
        }
    }
    if (!reach[0][static_cast<std::size_t>(n)]) return out;

    Factorization z(e, 0);
    auto descend = [&](auto&& self, std::size_t i, Int rest) -> void {
        if (i == e) {
            out.push_back(z);
            return;
        }
        for (Int k = rest / gens[i]; k >= 0; --k) {
            const Int r = rest - k * gens[i];
            if (!reach[i + 1][static_cast<std::size_t>(r)]) continue;
            z[i] = k;
            self(self, i + 1, r);
        }
        z[i] = 0;
    };
    descend(descend, 0, n);
    return out;
}

std::vector<Factorization> factorizations(Int n, const NumericalSemigroup& s) {
    return factorizations(n, std::span<const Int>(s.minimal_generators()));
}

Int length(const Factorization& z) { return std::accumulate(z.begin(), z.end(), Int{0}); }

LengthStats length_stats(Int n, const NumericalSemigroup& s) {
    if (!s.contains(n)) fail(ErrorKind::NotInSemigroup, "element is not in the semigroup");
    return length_stats_of_set(factorizations(n, s));
}

LengthStats length_stats_of_set(std::span<const Factorization> set) {
    if (set.empty()) fail(ErrorKind::InvalidArgument, "empty set of factorizations");
    LengthStats out;
    out.denumerant = static_cast<Int>(set.size());
    IntList all;
    for (const auto& z : set) all.push_back(length(z));
    const Int longest = *std::max_element(all.begin(), all.end());
    out.max_denumerant = std::count(all.begin(), all.end(), longest);
    out.lengths = sorted_unique(std::move(all));
    out.delta = deltas_of(out.lengths);
    out.elasticity = out.lengths.front() == 0 ? Rational(1) : Rational(out.lengths.back(), out.lengths.front());
    return out;
}

Int distance(const Factorization& a, const Factorization& b) {
    if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "factorizations have different lengths");
    Int left = 0, right = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Int common = std::min(a[i], b[i]);
        left += a[i] - common;
        right += b[i] - common;
    }
    return std::max(left, right);
}

Int catenary_of_set(std::span<const Factorization> set) {
    if (set.empty()) fail(ErrorKind::InvalidArgument, "empty set of factorizations");
    require_same_dimension(set);
    // The catenary degree is the bottleneck weight of a minimum spanning tree
    // of the complete graph weighted by distance.
    struct Edge {
        Int weight;
        std::size_t a, b;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) edges.push_back({distance(set[i], set[j]), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.weight < y.weight; });
    DisjointSets sets(set.size());
    std::size_t joined = 1;
    Int result = 0;
    for (const auto& edge : edges) {
        if (joined == set.size()) break;
        if (sets.unite(edge.a, edge.b)) {
            result = edge.weight;
            ++joined;
        }
    }
    return result;
}

Int tame_of_set(std::span<const Factorization> set) {
    if (set.empty()) fail(ErrorKind::InvalidArgument, "empty set of factorizations");
    require_same_dimension(set);
    Int result = 0;
    for (std::size_t i = 0; i < set.front().size(); ++i) {
        std::vector<const Factorization*> using_i;
        for (const auto& z : set)
            if (z[i] > 0) using_i.push_back(&z);
        if (using_i.empty()) continue;
        for (const auto& z : set) {
            if (z[i] > 0) continue;
            Int best = std::numeric_limits<Int>::max();
            for (const auto* w : using_i) best = std::min(best, distance(z, *w));
            result = std::max(result, best);
        }
    }
    return result;
}

IntList delta_set_up_to(const NumericalSemigroup& s, Int bound) {
    if (bound < 0) return {};
    require_window(bound + 1, "Delta set bound");
    const auto& gens = s.minimal_generators();
    std::vector<IntList> lengths(static_cast<std::size_t>(bound + 1));
    lengths[0] = {0};
    IntList out;
    for (Int x = 1; x <= bound; ++x) {
        IntList here;
        for (Int g : gens) {
            if (g > x) break;
            for (Int l : lengths[static_cast<std::size_t>(x - g)]) here.push_back(l + 1);
        }
        here = sorted_unique(std::move(here));
        for (Int d : deltas_of(here)) out.push_back(d);
        lengths[static_cast<std::size_t>(x)] = std::move(here);
    }
    return sorted_unique(std::move(out));
}

FactorizationProfile semigroup_factorization_profile(const NumericalSemigroup& s, Int delta_bound) {
    FactorizationProfile out;
    out.delta_bound = delta_bound;
    out.elasticity = Rational(s.minimal_generators().back(), s.multiplicity());
    for (Int b : betti_elements(s)) {
        const auto zs = factorizations(b, s);
        out.catenary_degree = std::max(out.catenary_degree, catenary_of_set(zs));
        const auto delta = length_stats(b, s).delta;
        if (!delta.empty()) out.delta_max = std::max(out.delta_max, delta.back());
    }
    for (Int p : primitive_elements(s)) {
        const auto zs = factorizations(p, s);
        out.tame_degree = std::max(out.tame_degree, tame_of_set(zs));
    }
    out.delta_set = delta_set_up_to(s, delta_bound);
    return out;
}

namespace {

// A bullet of n is a generator multiset x with n <=_S phi(x) such that
// removing any single generator breaks the dominance. Dominance is closed
// upwards, so every bullet is reached by adding one generator to a
// non-dominating multiset. Non-dominating multisets satisfy phi(x) - n <= F,
// i.e. phi(x) <= n + F, and a bullet adds one generator to that, so every
// bullet has phi(x) <= n + F + max generator (below n + conductor + max
// generator). The search below never leaves that range.
Int omega_of_element(const NumericalSemigroup& s, Int n) {
    const auto& gens = s.minimal_generators();
    const std::size_t e = gens.size();
    auto dominates = [&](Int sum) { return s.contains(sum - n); };
    Int best = 0;
    Factorization x(e, 0);
    auto search = [&](auto&& self, std::size_t first, Int sum, Int size) -> void {
        for (std::size_t i = first; i < e; ++i) {
            const Int next = sum + gens[i];
            ++x[i];
            if (dominates(next)) {
                bool minimal = true;
                for (std::size_t j = 0; j < e && minimal; ++j)
                    if (x[j] > 0 && dominates(next - gens[j])) minimal = false;
                if (minimal) best = std::max(best, size + 1);
            } else {
                self(self, i, next, size + 1);
            }
            --x[i];
        }
    };
    if (dominates(0)) return 0;
    search(search, 0, 0, 0);
    return best;
}

} // namespace

Int omega_primality(const NumericalSemigroup& s, std::optional<Int> n) {
    if (n) {
        if (!s.contains(*n)) fail(ErrorKind::NotInSemigroup, "element is not in the semigroup");
        return omega_of_element(s, *n);
    }
    Int best = 0;
    for (Int g : s.minimal_generators()) best = std::max(best, omega_of_element(s, g));
    return best;
}

} // namespace sgps
