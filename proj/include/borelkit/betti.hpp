#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "borelkit/ideal.hpp"

namespace borelkit {

/// Small abstract simplicial complex with explicitly stored faces, each face a
/// bitmask over the vertex set. The empty face (mask 0) is present whenever the
/// complex is nonempty; downward closure is checked at construction.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, std::vector<std::uint32_t> faces);

    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<std::uint32_t>& faces() const noexcept { return faces_; }
    bool empty() const noexcept { return faces_.empty(); }

private:
    int vertex_count_ = 0;
    std::vector<std::uint32_t> faces_;  // sorted by (popcount, value)
};

/// Upper Koszul complex of the ideal at multidegree a: the faces are the
/// squarefree variable subsets s with x^a / x^s in I. Empty when x^a is not
/// in I.
SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& a);

/// Reduced homology dimensions over the rationals; entry k is dim of the
/// reduced homology in dimension k-1, so entry 0 reports the empty-face
/// dimension. Empty vector for the empty complex. Ranks are computed by
/// fraction-free integer elimination; no floating point.
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& complex);

/// Graded Betti numbers of the ideal (not of the quotient ring).
struct BettiTable {
    /// (homological index i, internal degree j) -> beta_{i,j}.
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> entries;
    /// Homology is taken over the rationals.
    int characteristic = 0;

    std::int64_t beta(std::int64_t i, std::int64_t j) const;
    std::int64_t regularity() const;  // max j - i over nonzero entries
};

inline constexpr std::int64_t kDefaultBettiBudget = 200'000;

/// Number of multidegrees the table computation would visit: the divisor count
/// of lcm(G(I)).
std::int64_t multidegree_budget(const MonomialIdeal& ideal);

/// Full graded Betti table via reduced homology of upper Koszul complexes at
/// every divisor of lcm(G(I)). Rejects zero and unit ideals, and inputs whose
/// multidegree count exceeds the budget.
BettiTable betti_table(const MonomialIdeal& ideal, std::int64_t budget = kDefaultBettiBudget);

/// reg(I) = max{j - i : beta_{i,j} != 0}, straight off the table.
std::int64_t regularity_oracle(const MonomialIdeal& ideal,
                               std::int64_t budget = kDefaultBettiBudget);

/// Conventional grid: rows are j - i, columns are i, "." for absent entries.
std::string render_betti_grid(const BettiTable& table);

}  // namespace borelkit
