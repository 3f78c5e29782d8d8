#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "sgps/constructions.hpp"
#include "sgps/error.hpp"
#include "sgps/semigroup.hpp"

namespace test {

using sgps::Int;
using sgps::IntList;
using sgps::NumericalSemigroup;

inline NumericalSemigroup ns(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }

template <class F>
std::optional<sgps::ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const sgps::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

/// Deterministic random instances: seeds base, base+1, ...
inline std::vector<NumericalSemigroup> random_instances(std::size_t count, Int max_gens, Int bound, std::uint64_t base = 1) {
    std::vector<NumericalSemigroup> out;
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(sgps::random_semigroup(max_gens, bound, base + i));
    return out;
}

/// Random instances with conductor at most c_max.
inline std::vector<NumericalSemigroup> small_instances(std::size_t count, Int c_max, std::uint64_t base = 1) {
    std::vector<NumericalSemigroup> out;
    for (std::uint64_t seed = base; out.size() < count; ++seed) {
        auto s = sgps::random_semigroup(4, c_max, seed);
        if (s.conductor() <= c_max) out.push_back(s);
    }
    return out;
}

} // namespace test
