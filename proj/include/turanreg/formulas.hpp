#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "census.hpp"
#include "graph.hpp"

namespace turanreg {

enum class FamilyKind {
    triangle,          // K3
    odd_cycle,         // the single cycle C_{2l-1}
    odd_cycle_family,  // all of C3, C5, ..., C_{2l-1}
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::triangle;
    std::size_t ell = 2;

    static FamilySpec triangle() { return {FamilyKind::triangle, 2}; }
    static FamilySpec odd_cycle(std::size_t l) { return checked({FamilyKind::odd_cycle, l}); }
    static FamilySpec odd_cycle_family(std::size_t l) { return checked({FamilyKind::odd_cycle_family, l}); }

    /// Length of the longest forbidden cycle, 2l-1.
    std::size_t longest_cycle() const { return 2 * ell - 1; }

    std::string name() const {
        switch (kind) {
            case FamilyKind::triangle: return "K3";
            case FamilyKind::odd_cycle: return "C" + std::to_string(longest_cycle());
            case FamilyKind::odd_cycle_family: return "C3..C" + std::to_string(longest_cycle());
        }
        return "?";
    }

private:
    static FamilySpec checked(FamilySpec f) {
        if (f.ell < 2) throw std::invalid_argument("family parameter l must be at least 2");
        return f;
    }
};

struct ClosedForm {
    Count value = 0;
    bool exact = false;  // false: valid only for sufficiently large n
};

/// Closed-form regular Turan number: n/2 for even n, 2*floor(n/(2l+1)) for odd n.
/// Exact for the triangle at every n; for l >= 3 the formula is only known
/// to hold once n is large enough.
inline ClosedForm exr_closed_form(std::size_t n, const FamilySpec& fam) {
    if (n < 3) throw std::invalid_argument("exr_closed_form needs n >= 3");
    const std::size_t l = fam.kind == FamilyKind::triangle ? 2 : fam.ell;
    if (l < 2) throw std::invalid_argument("family parameter l must be at least 2");
    ClosedForm out;
    out.value = n % 2 == 0 ? n / 2 : 2 * (n / (2 * l + 1));
    out.exact = l == 2;
    return out;
}

/// k3(G) + k3(complement) + (1/2) sum deg(v)(n-1-deg(v)) - C(n,3); zero for every graph.
inline std::int64_t goodman_defect(const Graph& g) {
    const auto n = g.order();
    const auto comp = complement(g);
    std::uint64_t twice_mixed = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto d = g.degree(v);
        twice_mixed += d * (n - 1 - d);
    }
    // A triple that is neither a triangle nor independent is counted at exactly two of its vertices.
    auto lhs = static_cast<std::int64_t>(count_cliques(g, 3) + count_cliques(comp, 3) + twice_mixed / 2);
    return lhs - static_cast<std::int64_t>(binomial(n, 3));
}

/// Number of 5-cycles in the complement of the disjoint union of stars
/// K_{1,a_i}, on exactly n = sum (a_i + 1) vertices, by inclusion-exclusion
/// over the removed star edges. Sums over i != j run over ordered pairs.
inline Count c5_star_forest_count(std::size_t n, const std::vector<std::size_t>& parts) {
    std::size_t used = 0, big_a = 0;
    for (auto a : parts) {
        if (a < 1) throw std::invalid_argument("star sizes must be at least 1");
        used += a + 1;
        big_a += a;
    }
    if (used != n)
        throw std::invalid_argument("star forest covers " + std::to_string(used) + " vertices, expected " +
                                    std::to_string(n));
    using I = __int128;
    I total = I(12) * binomial(n, 5);
    total -= I(6) * big_a * (n >= 2 ? binomial(n - 2, 3) : 0);
    I pairs_in_star = 0;
    for (auto a : parts) pairs_in_star += binomial(a, 2);
    total += I(2) * pairs_in_star * (n >= 3 ? binomial(n - 3, 2) : 0);
    I cross_edges = 0, cross_path_edge = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (i == j) continue;
            cross_edges += I(parts[i]) * parts[j];
            cross_path_edge += I(binomial(parts[i], 2)) * parts[j];
        }
    total += I(2) * cross_edges * (static_cast<I>(n) - 4);
    total -= I(2) * cross_path_edge;
    if (total < 0) throw std::logic_error("negative 5-cycle count");
    return static_cast<Count>(total);
}

/// Maximum number of 5-cycles in a graph on r+2 vertices with maximum degree r.
inline Count ex_c5_closed_form(std::size_t r) {
    if (r < 6) throw std::invalid_argument("ex_c5_closed_form needs r >= 6");
    if (r % 2 == 1) return 12 * binomial(r + 1, 5);
    return static_cast<Count>(r) * (r * r - 4) * (r * r - 5 * r + 9) / 10;
}

/// n = a(r+1) + b with 0 <= b <= r.
struct GLSParams {
    std::size_t n = 0, r = 0, a = 0, b = 0;
};

inline GLSParams gls_params(std::size_t n, std::size_t r) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    return {n, r, n / (r + 1), n % (r + 1)};
}

/// (a C(r+1,2) + C(b,2), floor(nr/2)); the critical regime is low < m <= high.
inline std::pair<Count, Count> gls_critical_range(std::size_t n, std::size_t r) {
    auto p = gls_params(n, r);
    return {p.a * binomial(r + 1, 2) + binomial(p.b, 2), n * r / 2};
}

/// True when (n, k) lies in the window 2 floor(n/5) < k <= 2 floor(n/4) with n odd and k even.
inline bool in_supersaturation_window(std::size_t n, std::size_t k) {
    return n % 2 == 1 && k % 2 == 0 && 2 * (n / 5) < k && k <= 2 * (n / 4);
}

/// Conjectured minimum triangle count (k/2)(k/2 - q - 1) of a k-regular graph
/// on n = 2p+1 vertices, q = p - k.
inline Count conj55_bound(std::size_t n, std::size_t k) {
    if (n % 2 == 0) throw std::invalid_argument("conj55_bound needs odd n");
    if (k % 2 == 1) throw std::invalid_argument("conj55_bound needs even k");
    if (!in_supersaturation_window(n, k))
        throw std::invalid_argument("k=" + std::to_string(k) + " outside (2*floor(n/5), 2*floor(n/4)] for n=" +
                                    std::to_string(n));
    const std::size_t p = (n - 1) / 2;
    const std::size_t q = p - k;
    const std::size_t h = k / 2;
    return h * (h - q - 1);
}

}  // namespace turanreg
