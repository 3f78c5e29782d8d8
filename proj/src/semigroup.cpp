#include "sgps/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <utility>

namespace sgps {

struct NumericalSemigroup::Cache {
    AperyList apery;

    std::once_flag small_once;
    IntList small;
    IntList gaps;
};

bool PMInequality::satisfied_by(Int x) const {
    if (x < 0) return false;
    const __int128 lhs = (static_cast<__int128>(alpha) * x) % beta;
    return lhs <= static_cast<__int128>(gamma) * x;
}

IntList AperyList::sorted() const {
    IntList out = elements;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Int gcd_of(std::span<const Int> values) {
    Int g = 0;
    for (Int v : values) g = std::gcd(g, v);
    return g;
}

// Shortest paths on Z/mZ with an edge r -> r+g of weight g per generator.
IntList apery_by_dijkstra(const IntList& gens, Int m) {
    require_window(m, "multiplicity");
    constexpr Int inf = std::numeric_limits<Int>::max();
    IntList dist(static_cast<std::size_t>(m), inf);
    using Item = std::pair<Int, Int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (Int g : gens) {
            const Int nd = checked_add(d, g);
            const Int nr = (r + g % m) % m;
            if (nd < dist[static_cast<std::size_t>(nr)]) {
                dist[static_cast<std::size_t>(nr)] = nd;
                queue.emplace(nd, nr);
            }
        }
    }
    return dist;
}

bool apery_member(const IntList& ap, Int m, Int z) {
    if (z < 0) return false;
    return z >= ap[static_cast<std::size_t>(z % m)];
}

} // namespace

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(IntList{1}, IntList{0}) {}

NumericalSemigroup::NumericalSemigroup(IntList gens, IntList apery)
    : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    cache_->apery.modulus = gens_.front();
    cache_->apery.elements = std::move(apery);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> input) {
    if (input.empty()) fail(ErrorKind::EmptyInput, "empty generator list");
    for (Int g : input)
        if (g <= 0) fail(ErrorKind::InvalidArgument, "generators must be positive");
    if (gcd_of(input) != 1) fail(ErrorKind::NotCoprime, "generators not coprime");

    IntList gens(input.begin(), input.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const Int m = gens.front();
    IntList ap = apery_by_dijkstra(gens, m);

    // A generator g != m is redundant when g - h is in S for a smaller
    // candidate h; candidates are the generators lying in Ap(m).
    IntList minimal{m};
    for (std::size_t i = 1; i < gens.size(); ++i) {
        const Int g = gens[i];
        if (ap[static_cast<std::size_t>(g % m)] != g) continue;
        bool redundant = false;
        for (Int h : minimal) {
            if (h != m && apery_member(ap, m, g - h)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    return NumericalSemigroup(std::move(minimal), std::move(ap));
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<char> mask) {
    // Elements beyond the table are members; find the multiplicity first.
    const Int size = static_cast<Int>(mask.size());
    Int m = 1;
    while (m < size && !mask[static_cast<std::size_t>(m)]) ++m;
    Int conductor = size;
    while (conductor > 0 && (conductor - 1 >= size || mask[static_cast<std::size_t>(conductor - 1)]))
        --conductor;
    const Int window = checked_add(conductor, m);
    require_window(window, "conductor");
    auto member = [&](Int z) { return z >= 0 && (z >= size || mask[static_cast<std::size_t>(z)]); };

    IntList ap(static_cast<std::size_t>(m), -1);
    Int found = 0;
    for (Int z = 0; found < m; ++z) {
        if (member(z) && ap[static_cast<std::size_t>(z % m)] < 0) {
            ap[static_cast<std::size_t>(z % m)] = z;
            ++found;
        }
    }
    IntList gens;
    for (Int z = 1; z < window; ++z) {
        if (!member(z)) continue;
        bool decomposes = false;
        for (Int h : gens) {
            if (member(z - h)) {
                decomposes = true;
                break;
            }
        }
        if (!decomposes) gens.push_back(z);
    }
    if (gens.empty()) gens.push_back(1);
    NumericalSemigroup s(std::move(gens), std::move(ap));
    return s;
}

NumericalSemigroup NumericalSemigroup::from_gap_data(GapDataKind kind, std::span<const Int> data) {
    if (!std::is_sorted(data.begin(), data.end()) ||
        std::adjacent_find(data.begin(), data.end()) != data.end())
        fail(ErrorKind::InvalidArgument, "data must be strictly increasing");
    if (!data.empty() && data.front() < 0) fail(ErrorKind::InvalidArgument, "data must be nonnegative");

    switch (kind) {
    case GapDataKind::Gaps:
    case GapDataKind::FundamentalGaps: {
        const ErrorKind bad = ErrorKind::InvalidGapSet;
        if (!data.empty() && data.front() == 0) fail(bad, "0 cannot be a gap");
        IntList gap_list(data.begin(), data.end());
        if (kind == GapDataKind::FundamentalGaps) {
            // Gaps are exactly the divisors of fundamental gaps.
            std::vector<char> is_gap(data.empty() ? 1 : static_cast<std::size_t>(data.back() + 1), 0);
            for (Int f : data)
                for (Int d = 1; d * d <= f; ++d)
                    if (f % d == 0) is_gap[static_cast<std::size_t>(d)] = is_gap[static_cast<std::size_t>(f / d)] = 1;
            gap_list.clear();
            for (std::size_t i = 1; i < is_gap.size(); ++i)
                if (is_gap[i]) gap_list.push_back(static_cast<Int>(i));
        }
        const Int top = gap_list.empty() ? 0 : gap_list.back() + 1;
        require_window(top, "gap set");
        std::vector<char> mask(static_cast<std::size_t>(top), 1);
        for (Int g : gap_list) mask[static_cast<std::size_t>(g)] = 0;
        // The complement must be closed under addition: no gap is a sum of
        // two positive non-gaps.
        for (Int g : gap_list)
            for (Int s = 1; s <= g / 2; ++s)
                if (mask[static_cast<std::size_t>(s)] && mask[static_cast<std::size_t>(g - s)])
                    fail(bad, "complement of the gap set is not closed under addition");
        NumericalSemigroup s = from_membership(std::move(mask));
        if (kind == GapDataKind::FundamentalGaps &&
            fundamental_gaps(s) != IntList(data.begin(), data.end()))
            fail(bad, "list is not the set of fundamental gaps of a numerical semigroup");
        return s;
    }
    case GapDataKind::SmallElements: {
        const ErrorKind bad = ErrorKind::InvalidSmallElements;
        if (data.empty() || data.front() != 0) fail(bad, "small elements must start at 0");
        const Int c = data.back();
        if (c > 0 && std::binary_search(data.begin(), data.end(), c - 1))
            fail(bad, "last small element must be the conductor");
        require_window(c + 1, "small elements");
        std::vector<char> mask(static_cast<std::size_t>(c + 1), 0);
        for (Int x : data) mask[static_cast<std::size_t>(x)] = 1;
        for (Int x : data)
            for (Int y : data) {
                if (x == 0 || y < x) continue;
                if (x + y < c && !mask[static_cast<std::size_t>(x + y)])
                    fail(bad, "small elements are not closed under addition");
            }
        return from_membership(std::move(mask));
    }
    }
    fail(ErrorKind::InvalidArgument, "unknown gap data kind");
}

NumericalSemigroup NumericalSemigroup::from_apery(std::span<const Int> apery) {
    if (apery.empty()) fail(ErrorKind::EmptyInput, "empty Apery list");
    const Int n = static_cast<Int>(apery.size());
    require_window(n, "Apery list");
    IntList by_residue(static_cast<std::size_t>(n), -1);
    for (Int w : apery) {
        if (w < 0) fail(ErrorKind::InvalidApery, "Apery elements must be nonnegative");
        Int& slot = by_residue[static_cast<std::size_t>(w % n)];
        if (slot >= 0) fail(ErrorKind::InvalidApery, "two Apery elements share a residue class");
        slot = w;
    }
    if (by_residue[0] != 0) fail(ErrorKind::InvalidApery, "0 must belong to the Apery set");

    IntList gens{n};
    for (Int w : apery)
        if (w != 0) gens.push_back(w);
    NumericalSemigroup s = from_generators(gens);
    if (apery_set(s, n).elements != by_residue)
        fail(ErrorKind::InvalidApery, "list is not the Apery set of the semigroup it generates");
    return s;
}

NumericalSemigroup NumericalSemigroup::from_inequality(Int alpha, Int beta, Int gamma) {
    if (alpha <= 0 || beta <= 0 || gamma <= 0)
        fail(ErrorKind::InvalidArgument, "inequality parameters must be positive");
    PMInequality pm{alpha, beta, gamma};
    // gamma * x >= beta forces membership, so the conductor is at most ceil(beta/gamma).
    const Int bound = (beta + gamma - 1) / gamma;
    require_window(bound + 1, "inequality conductor bound");
    std::vector<char> mask(static_cast<std::size_t>(bound + 1));
    for (Int x = 0; x <= bound; ++x) mask[static_cast<std::size_t>(x)] = pm.satisfied_by(x);
    NumericalSemigroup s = from_membership(std::move(mask));
    s.pm_ = pm;
    return s;
}

NumericalSemigroup NumericalSemigroup::from_interval(Rational lo, Rational hi) {
    if (lo <= 0) fail(ErrorKind::InvalidArgument, "interval must lie in the positive rationals");
    if (lo >= hi) fail(ErrorKind::EmptyInterval, "interval is empty");
    // [a/b, c/d] gives the inequality (bc)x mod (ac) <= (bc - ad)x.
    const Int a = lo.numerator(), b = lo.denominator();
    const Int c = hi.numerator(), d = hi.denominator();
    const Int alpha = checked_mul(b, c);
    const Int beta = checked_mul(a, c);
    const Int gamma = checked_sub(alpha, checked_mul(a, d));
    return from_inequality(alpha, beta, gamma);
}

NumericalSemigroup NumericalSemigroup::from_subadditive(std::span<const Int> values) {
    if (values.empty()) fail(ErrorKind::EmptyInput, "empty function table");
    const Int p = static_cast<Int>(values.size());
    auto f = [&](Int x) { return values[static_cast<std::size_t>((x % p + p - 1) % p)]; };
    if (values.back() != 0) fail(ErrorKind::NotSubadditive, "f(p) must be 0");
    for (Int v : values)
        if (v < 0) fail(ErrorKind::NotSubadditive, "values must be nonnegative");
    for (Int i = 1; i <= p; ++i)
        for (Int j = i; j <= p; ++j)
            if (f(i + j) > checked_add(f(i), f(j)))
                fail(ErrorKind::NotSubadditive, "function is not subadditive");
    const Int top = *std::max_element(values.begin(), values.end());
    require_window(top + 1, "subadditive function");
    std::vector<char> mask(static_cast<std::size_t>(top + 1));
    for (Int x = 0; x <= top; ++x) mask[static_cast<std::size_t>(x)] = (x == 0) || f(x) <= x;
    return from_membership(std::move(mask));
}

bool NumericalSemigroup::contains(Int z) const {
    if (z < 0) return false;
    if (pm_) return pm_->satisfied_by(z);
    return apery_member(cache_->apery.elements, cache_->apery.modulus, z);
}

const AperyList& NumericalSemigroup::apery() const { return cache_->apery; }

const IntList& NumericalSemigroup::small_elements() const {
    std::call_once(cache_->small_once, [this] {
        const Int c = conductor();
        require_window(c + 1, "conductor");
        for (Int z = 0; z <= c; ++z) {
            if (contains(z)) cache_->small.push_back(z);
            else cache_->gaps.push_back(z);
        }
    });
    return cache_->small;
}

const IntList& NumericalSemigroup::gaps() const {
    small_elements();
    return cache_->gaps;
}

Int NumericalSemigroup::frobenius() const { return selmer_frobenius(cache_->apery); }
Int NumericalSemigroup::conductor() const { return frobenius() + 1; }
Int NumericalSemigroup::genus() const { return selmer_genus(cache_->apery); }

std::vector<char> NumericalSemigroup::membership(Int size) const {
    require_window(size, "membership table");
    std::vector<char> mask(static_cast<std::size_t>(size));
    for (Int z = 0; z < size; ++z) mask[static_cast<std::size_t>(z)] = contains(z);
    return mask;
}

std::string NumericalSemigroup::to_string() const {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < gens_.size(); ++i) out << (i ? "," : "") << gens_[i];
    out << '>';
    return out.str();
}

bool census_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.genus() != b.genus()) return a.genus() < b.genus();
    return a.small_elements() < b.small_elements();
}

void census_sort(std::vector<NumericalSemigroup>& list) {
    std::sort(list.begin(), list.end(), census_less);
}

AperyList apery_set(const NumericalSemigroup& s, Int n) {
    if (n <= 0 || !s.contains(n)) fail(ErrorKind::NotInSemigroup, "modulus is not a nonzero element");
    if (n == s.multiplicity()) return s.apery();
    require_window(n, "Apery modulus");
    AperyList out{n, IntList(static_cast<std::size_t>(n), -1)};
    Int found = 0;
    for (Int z = 0; found < n; ++z) {
        Int& slot = out.elements[static_cast<std::size_t>(z % n)];
        if (slot < 0 && s.contains(z)) {
            slot = z;
            ++found;
        }
    }
    return out;
}

Int selmer_frobenius(const AperyList& ap) {
    return *std::max_element(ap.elements.begin(), ap.elements.end()) - ap.modulus;
}

Int selmer_genus(const AperyList& ap) {
    __int128 total = 0;
    for (Int w : ap.elements) total += w;
    const __int128 n = ap.modulus;
    return static_cast<Int>((total - n * (n - 1) / 2) / n);
}

IntList fundamental_gaps(const NumericalSemigroup& s) {
    IntList out;
    for (Int g : s.gaps())
        if (s.contains(2 * g) && s.contains(3 * g)) out.push_back(g);
    return out;
}

IntList pseudo_frobenius(const NumericalSemigroup& s) {
    if (s.is_whole()) return {-1};
    IntList out;
    for (Int g : s.gaps()) {
        bool maximal = std::all_of(s.minimal_generators().begin(), s.minimal_generators().end(),
                                   [&](Int n) { return s.contains(g + n); });
        if (maximal) out.push_back(g);
    }
    return out;
}

IntList special_gaps(const NumericalSemigroup& s) {
    IntList out;
    for (Int g : pseudo_frobenius(s))
        if (g > 0 && s.contains(2 * g)) out.push_back(g);
    return out;
}

Int type(const NumericalSemigroup& s) { return static_cast<Int>(pseudo_frobenius(s).size()); }

BasicInvariants basic_invariants(const NumericalSemigroup& s) {
    return {s.multiplicity(), s.embedding_dimension(), s.frobenius(),
            s.conductor(),    s.genus(),               type(s)};
}

Descriptors descriptors(const NumericalSemigroup& s) {
    return {s.minimal_generators(), s.small_elements(), s.gaps(),
            fundamental_gaps(s),    pseudo_frobenius(s), special_gaps(s)};
}

KunzCoords kunz_coordinates(const NumericalSemigroup& s) {
    if (s.is_whole()) fail(ErrorKind::NotApplicable, "Kunz coordinates are undefined for N");
    const Int m = s.multiplicity();
    KunzCoords out{m, {}};
    for (Int i = 1; i < m; ++i) out.coords.push_back((s.apery().elements[static_cast<std::size_t>(i)] - i) / m);
    return out;
}

std::vector<KunzInequality> kunz_polytope(Int m) {
    if (m < 2) fail(ErrorKind::InvalidArgument, "Kunz polytope needs multiplicity at least 2");
    const std::size_t dim = static_cast<std::size_t>(m - 1);
    std::vector<KunzInequality> out;
    for (Int i = 1; i < m; ++i) {
        KunzInequality ineq{IntList(dim, 0), 1};
        ineq.coeffs[static_cast<std::size_t>(i - 1)] = 1;
        out.push_back(std::move(ineq));
    }
    for (Int i = 1; i < m; ++i) {
        for (Int j = i; j < m; ++j) {
            if (i + j == m) continue;
            KunzInequality ineq{IntList(dim, 0), 0};
            ineq.coeffs[static_cast<std::size_t>(i - 1)] += 1;
            ineq.coeffs[static_cast<std::size_t>(j - 1)] += 1;
            if (i + j < m) {
                ineq.coeffs[static_cast<std::size_t>(i + j - 1)] -= 1;
            } else {
                ineq.coeffs[static_cast<std::size_t>(i + j - m - 1)] -= 1;
                ineq.bound = -1;
            }
            out.push_back(std::move(ineq));
        }
    }
    return out;
}

IntList first_elements(const NumericalSemigroup& s, Int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
    IntList out;
    for (Int z = 0; static_cast<Int>(out.size()) < n; ++z)
        if (s.contains(z)) out.push_back(z);
    return out;
}

} // namespace sgps
