#include "sgps/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sgps {

namespace {

std::size_t root_of(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

void require_member(const NumericalSemigroup& s, Int n) {
    if (!s.contains(n)) fail(ErrorKind::NotInSemigroup, "element is not in the semigroup");
}

// Splits a set of factorizations into classes of the transitive closure of
// "z and z' share a nonzero coordinate". Returns a class index per entry.
std::vector<std::size_t> support_classes(const std::vector<Factorization>& zs) {
    std::vector<std::size_t> parent(zs.size());
    std::iota(parent.begin(), parent.end(), 0);
    if (zs.empty()) return parent;
    const std::size_t e = zs.front().size();
    for (std::size_t i = 0; i < e; ++i) {
        std::size_t first = zs.size();
        for (std::size_t k = 0; k < zs.size(); ++k) {
            if (zs[k][i] == 0) continue;
            if (first == zs.size()) first = k;
            else parent[root_of(parent, k)] = root_of(parent, first);
        }
    }
    for (std::size_t k = 0; k < zs.size(); ++k) parent[k] = root_of(parent, k);
    return parent;
}

} // namespace

ElementGraph element_graph(const NumericalSemigroup& s, Int n) {
    require_member(s, n);
    const auto& gens = s.minimal_generators();
    ElementGraph g;
    g.element = n;
    for (Int a : gens)
        if (s.contains(n - a)) g.vertices.push_back(a);
    const std::size_t v = g.vertices.size();
    std::vector<std::size_t> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (s.contains(n - g.vertices[i] - g.vertices[j])) {
                g.edges.emplace_back(g.vertices[i], g.vertices[j]);
                parent[root_of(parent, j)] = root_of(parent, i);
            }
    std::vector<std::size_t> slot(v, v);
    for (std::size_t i = 0; i < v; ++i) {
        const std::size_t r = root_of(parent, i);
        if (slot[r] == v) {
            slot[r] = g.components.size();
            g.components.emplace_back();
        }
        g.components[slot[r]].push_back(g.vertices[i]);
    }
    return g;
}

IntList betti_elements(const NumericalSemigroup& s) {
    // A Betti element n has vertices in two components; writing n = w + n_i
    // for a suitable vertex n_i puts w in Ap(S, m), so candidates are finite.
    std::set<Int> candidates;
    for (Int w : s.apery().elements)
        for (Int g : s.minimal_generators()) candidates.insert(w + g);
    IntList out;
    for (Int n : candidates)
        if (!element_graph(s, n).connected()) out.push_back(n);
    return out;
}

std::vector<Relation> minimal_presentation(const NumericalSemigroup& s) {
    std::vector<Relation> out;
    for (Int b : betti_elements(s)) {
        // Lexicographically decreasing, so the first member of each class
        // is its representative.
        const auto zs = factorizations(b, s);
        const auto cls = support_classes(zs);
        std::vector<std::size_t> seen;
        std::vector<const Factorization*> reps;
        for (std::size_t k = 0; k < zs.size(); ++k) {
            if (std::find(seen.begin(), seen.end(), cls[k]) != seen.end()) continue;
            seen.push_back(cls[k]);
            reps.push_back(&zs[k]);
        }
        for (std::size_t k = 1; k < reps.size(); ++k) out.push_back({*reps.front(), *reps[k]});
    }
    return out;
}

std::vector<IntList> shaded_set(const NumericalSemigroup& s, Int n) {
    require_member(s, n);
    const auto& gens = s.minimal_generators();
    // Downward closed: if n - sum(B) is in S then so is n - sum(A) for A in B.
    std::vector<IntList> out;
    IntList current;
    auto grow = [&](auto&& self, std::size_t first, Int rest) -> void {
        out.push_back(current);
        for (std::size_t i = first; i < gens.size(); ++i) {
            if (!s.contains(rest - gens[i])) continue;
            current.push_back(gens[i]);
            self(self, i + 1, rest - gens[i]);
            current.pop_back();
        }
    };
    grow(grow, 0, n);
    std::sort(out.begin(), out.end(), [](const IntList& a, const IntList& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

IntList primitive_elements(const NumericalSemigroup& s) {
    // Minimal solutions of sum x_i n_i - sum y_i n_i = 0 by the
    // Contejean-Devie completion: grow vectors one unit at a time, only in
    // directions that move the defect toward zero, and drop any vector
    // dominating a solution already found. Dickson's lemma bounds the search.
    const auto& gens = s.minimal_generators();
    const std::size_t e = gens.size();
    const std::size_t width = 2 * e;
    IntList coeff(width);
    for (std::size_t i = 0; i < e; ++i) {
        coeff[i] = gens[i];
        coeff[i + e] = -gens[i];
    }
    struct Node {
        IntList v;
        Int defect;
        bool operator<(const Node& o) const { return v < o.v; }
    };
    std::vector<IntList> basis;
    auto dominated = [&](const IntList& v) {
        return std::any_of(basis.begin(), basis.end(), [&](const IntList& b) {
            for (std::size_t k = 0; k < width; ++k)
                if (v[k] < b[k]) return false;
            return true;
        });
    };
    std::set<Node> frontier;
    for (std::size_t k = 0; k < width; ++k) {
        IntList v(width, 0);
        v[k] = 1;
        frontier.insert({std::move(v), coeff[k]});
    }
    while (!frontier.empty()) {
        for (const auto& node : frontier)
            if (node.defect == 0) basis.push_back(node.v);
        std::set<Node> next;
        for (const auto& node : frontier) {
            if (node.defect == 0) continue;
            for (std::size_t k = 0; k < width; ++k) {
                if ((coeff[k] > 0) == (node.defect > 0)) continue;
                Node child{node.v, node.defect + coeff[k]};
                ++child.v[k];
                if (!dominated(child.v)) next.insert(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    IntList out;
    for (const auto& b : basis) {
        Int value = 0;
        for (std::size_t i = 0; i < e; ++i) value += b[i] * gens[i];
        out.push_back(value);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PresentationFlags presentation_flags(const NumericalSemigroup& s) {
    PresentationFlags flags{true, true};
    // Unique up to swapping sides iff no Betti element leaves a choice of
    // representative or of spanning tree, i.e. each has two factorizations.
    for (Int b : betti_elements(s))
        if (factorizations(b, s).size() != 2) flags.uniquely_presented = false;
    for (const auto& rel : minimal_presentation(s))
        for (std::size_t i = 0; i < rel.lhs.size(); ++i)
            if (rel.lhs[i] == rel.rhs[i]) flags.generic = false;
    return flags;
}

} // namespace sgps
