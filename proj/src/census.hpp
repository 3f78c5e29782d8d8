#pragma once

// Internal tree walks shared by the census operations. A semigroup is carried
// as a membership table `mask` for [0, mask.size()); every integer at or past
// the end of the table is an element.

#include <functional>
#include <vector>

#include "sgps/constructions.hpp"
#include "sgps/parallel.hpp"

namespace sgps::detail {

using Mask = std::vector<char>;

inline bool member(const Mask& mask, Int z) {
    return z >= 0 && (z >= static_cast<Int>(mask.size()) || mask[static_cast<std::size_t>(z)]);
}

inline Int mask_multiplicity(const Mask& mask) {
    Int m = 1;
    while (!member(mask, m)) ++m;
    return m;
}

inline Int mask_frobenius(const Mask& mask) {
    for (Int z = static_cast<Int>(mask.size()) - 1; z >= 0; --z)
        if (!mask[static_cast<std::size_t>(z)]) return z;
    return -1;
}

inline Int mask_genus(const Mask& mask) {
    Int g = 0;
    for (char b : mask) g += !b;
    return g;
}

/// Minimal generators of the semigroup described by `mask`.
IntList mask_generators(const Mask& mask);

/// Pseudo-Frobenius numbers read off the table ({-1} for N).
IntList mask_pseudo_frobenius(const Mask& mask);

/// x < multiplicity is a special gap: x + s and 2x are elements for every
/// nonzero element s.
bool special_below_multiplicity(const Mask& mask, Int x, Int m);

/// Walks every semigroup with Frobenius number f (f >= 1) by adjoining special
/// gaps below the multiplicity, starting from {0} u (f, inf). `allow(mask, x)`
/// may veto an adjunction, pruning the subtree below it. Each subtree of the
/// root runs on its own sink from `make`; the root is handed to the first sink.
template <class Sink>
std::vector<Sink> frobenius_walk(Int f, const std::function<bool(const Mask&, Int)>& allow,
                                 const std::function<Sink()>& make) {
    Mask root(static_cast<std::size_t>(f + 1), 0);
    root[0] = 1;
    IntList children;
    for (Int x = f; x >= 1; --x)
        if (x != f && special_below_multiplicity(root, x, f + 1) && allow(root, x)) children.push_back(x);

    auto walk = [&](auto&& self, Mask& mask, Int m, Sink& sink) -> void {
        sink(mask);
        for (Int x = m - 1; x >= 1; --x) {
            if (x == f || !special_below_multiplicity(mask, x, m) || !allow(mask, x)) continue;
            mask[static_cast<std::size_t>(x)] = 1;
            self(self, mask, x, sink);
            mask[static_cast<std::size_t>(x)] = 0;
        }
    };
    std::vector<Sink> sinks = parallel_map<Sink>(children.size(), [&](std::size_t i) {
        Sink sink = make();
        Mask mask = root;
        mask[static_cast<std::size_t>(children[i])] = 1;
        walk(walk, mask, children[i], sink);
        return sink;
    });
    Sink first = make();
    first(root);
    sinks.insert(sinks.begin(), std::move(first));
    return sinks;
}

struct CollectSink {
    std::vector<Mask> masks;
    std::function<bool(const Mask&)> keep;
    void operator()(const Mask& mask) {
        if (!keep || keep(mask)) masks.push_back(mask);
    }
};

/// Converts tables to semigroups and sorts them in census order.
EnumerationResult materialize(std::vector<Mask> masks);

} // namespace sgps::detail
