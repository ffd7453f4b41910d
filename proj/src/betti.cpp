#include "borelkit/betti.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace borelkit {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Int64Overflow {};

std::int64_t mulc(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Int64Overflow{};
    }
    return out;
}

std::int64_t subc(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw Int64Overflow{};
    }
    return out;
}

BigInt mulc(const BigInt& a, const BigInt& b) { return a * b; }
BigInt subc(const BigInt& a, const BigInt& b) { return a - b; }

// Bareiss fraction-free elimination; every division below is exact, so the
// rank is computed over the rationals without ever leaving the integers.
template <class Scalar>
int fraction_free_rank(std::vector<Scalar> m, int rows, int cols) {
    auto at = [&](int r, int c) -> Scalar& {
        return m[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + c];
    };
    int rank = 0;
    Scalar prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        if (pivot != rank) {
            for (int c = col; c < cols; ++c) {
                std::swap(at(pivot, c), at(rank, c));
            }
        }
        const Scalar p = at(rank, col);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                at(r, c) = subc(mulc(at(r, c), p), mulc(at(r, col), at(rank, c))) / prev;
            }
            at(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

// Boundary matrix from faces with p vertices down to faces with p - 1
// vertices, entries in {-1, 0, 1} with the usual alternating signs.
template <class Scalar>
std::vector<Scalar> boundary_matrix(const std::vector<std::uint32_t>& upper,
                                    const std::vector<std::uint32_t>& lower) {
    std::vector<Scalar> m(lower.size() * upper.size(), Scalar(0));
    for (std::size_t c = 0; c < upper.size(); ++c) {
        std::uint32_t face = upper[c];
        int position = 0;
        for (std::uint32_t bits = face; bits != 0; bits &= bits - 1, ++position) {
            std::uint32_t sub = face & ~(bits & (0u - bits));
            auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            std::size_t r = static_cast<std::size_t>(it - lower.begin());
            m[r * upper.size() + c] = (position % 2 == 0) ? Scalar(1) : Scalar(-1);
        }
    }
    return m;
}

int boundary_rank(const std::vector<std::uint32_t>& upper,
                  const std::vector<std::uint32_t>& lower) {
    if (upper.empty() || lower.empty()) {
        return 0;
    }
    int rows = static_cast<int>(lower.size());
    int cols = static_cast<int>(upper.size());
    try {
        return fraction_free_rank(boundary_matrix<std::int64_t>(upper, lower), rows, cols);
    } catch (const Int64Overflow&) {
        // Rare: big complexes make Bareiss intermediates outgrow 64 bits.
        return fraction_free_rank(boundary_matrix<BigInt>(upper, lower), rows, cols);
    }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::uint32_t> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
    if (vertex_count_ < 0 || vertex_count_ > 31) {
        throw Error("simplicial complex supports up to 31 vertices");
    }
    std::sort(faces_.begin(), faces_.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a);
        int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    for (std::uint32_t face : faces_) {
        if (face >> vertex_count_) {
            throw Error("face uses a vertex outside the complex");
        }
        for (std::uint32_t bits = face; bits != 0; bits &= bits - 1) {
            std::uint32_t sub = face & ~(bits & (0u - bits));
            if (!std::binary_search(faces_.begin(), faces_.end(), sub,
                                    [](std::uint32_t a, std::uint32_t b) {
                                        int pa = std::popcount(a);
                                        int pb = std::popcount(b);
                                        return pa != pb ? pa < pb : a < b;
                                    })) {
                throw std::logic_error("simplicial complex is not downward closed");
            }
        }
    }
}

SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& a) {
    int n = ideal.ring().nvars();
    if (a.nvars() != n) {
        throw ContextMismatchError("multidegree does not belong to this ring");
    }
    if (n > 31) {
        throw Error("koszul complex supports up to 31 variables");
    }
    std::vector<std::uint32_t> faces;
    if (!ideal.contains(a)) {
        return SimplicialComplex(n, std::move(faces));
    }
    std::uint32_t support = 0;
    for (int i = 1; i <= n; ++i) {
        if (a.exponent(i) > 0) {
            support |= 1u << (i - 1);
        }
    }
    // Subsets of the support; variables absent from a can never divide x^a.
    std::uint32_t sub = support;
    for (;;) {
        std::vector<std::int64_t> exp(a.exponents());
        for (std::uint32_t bits = sub; bits != 0; bits &= bits - 1) {
            exp[static_cast<std::size_t>(std::countr_zero(bits))] -= 1;
        }
        if (ideal.contains(Monomial(exp))) {
            faces.push_back(sub);
        }
        if (sub == 0) {
            break;
        }
        sub = (sub - 1) & support;
    }
    // The constructor re-checks downward closure; a violation here would be an
    // internal error since membership is monotone under multiplication.
    return SimplicialComplex(n, std::move(faces));
}

std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& complex) {
    std::vector<std::int64_t> dims;
    if (complex.empty()) {
        return dims;
    }
    int max_p = std::popcount(complex.faces().back());
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(max_p) + 1);
    for (std::uint32_t face : complex.faces()) {
        by_size[static_cast<std::size_t>(std::popcount(face))].push_back(face);
    }
    // ranks[p] = rank of the boundary map leaving faces with p vertices.
    std::vector<int> ranks(static_cast<std::size_t>(max_p) + 2, 0);
    for (int p = 1; p <= max_p; ++p) {
        ranks[static_cast<std::size_t>(p)] =
            boundary_rank(by_size[static_cast<std::size_t>(p)],
                          by_size[static_cast<std::size_t>(p - 1)]);
    }
    dims.resize(static_cast<std::size_t>(max_p) + 1, 0);
    for (int p = 0; p <= max_p; ++p) {
        std::int64_t dim = static_cast<std::int64_t>(by_size[static_cast<std::size_t>(p)].size()) -
                           ranks[static_cast<std::size_t>(p)] -
                           ranks[static_cast<std::size_t>(p) + 1];
        if (dim < 0) {
            throw std::logic_error("negative homology dimension");
        }
        dims[static_cast<std::size_t>(p)] = dim;
    }
    return dims;
}

std::int64_t BettiTable::beta(std::int64_t i, std::int64_t j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

std::int64_t BettiTable::regularity() const {
    if (entries.empty()) {
        throw Error("regularity of an empty Betti table");
    }
    std::int64_t reg = INT64_MIN;
    for (const auto& [key, value] : entries) {
        if (value != 0) {
            reg = std::max(reg, key.second - key.first);
        }
    }
    return reg;
}

std::int64_t multidegree_budget(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        return 0;
    }
    Monomial top = ideal.generators().front();
    for (const Monomial& g : ideal.generators()) {
        top = lcm(top, g);
    }
    __int128 count = 1;
    for (std::int64_t e : top.exponents()) {
        count *= static_cast<__int128>(e) + 1;
        if (count > static_cast<__int128>(INT64_MAX)) {
            return INT64_MAX;
        }
    }
    return static_cast<std::int64_t>(count);
}

BettiTable betti_table(const MonomialIdeal& ideal, std::int64_t budget) {
    if (ideal.is_zero() || ideal.is_unit()) {
        throw DegenerateIdealError("Betti table needs a nonzero, non-unit ideal");
    }
    std::int64_t count = multidegree_budget(ideal);
    if (count > budget) {
        throw BudgetExceededError("Betti computation would visit " + std::to_string(count) +
                                  " multidegrees, budget is " + std::to_string(budget));
    }
    Monomial top = ideal.generators().front();
    for (const Monomial& g : ideal.generators()) {
        top = lcm(top, g);
    }
    int n = ideal.ring().nvars();
    BettiTable table;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
    for (;;) {
        Monomial multidegree{std::vector<std::int64_t>(a)};
        if (ideal.contains(multidegree)) {
            auto dims = reduced_homology_dims(koszul_complex(ideal, multidegree));
            for (std::size_t k = 0; k < dims.size(); ++k) {
                if (dims[k] > 0) {
                    table.entries[{static_cast<std::int64_t>(k), multidegree.degree()}] +=
                        dims[k];
                }
            }
        }
        // mixed-radix increment below lcm(G(I))
        int pos = 0;
        while (pos < n && a[static_cast<std::size_t>(pos)] ==
                              top.exponents()[static_cast<std::size_t>(pos)]) {
            a[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) {
            break;
        }
        a[static_cast<std::size_t>(pos)] += 1;
    }
    return table;
}

std::int64_t regularity_oracle(const MonomialIdeal& ideal, std::int64_t budget) {
    return betti_table(ideal, budget).regularity();
}

std::string render_betti_grid(const BettiTable& table) {
    if (table.entries.empty()) {
        return "(empty)\n";
    }
    std::int64_t imin = INT64_MAX, imax = INT64_MIN;
    std::int64_t rmin = INT64_MAX, rmax = INT64_MIN;
    for (const auto& [key, value] : table.entries) {
        if (value == 0) {
            continue;
        }
        imin = std::min(imin, key.first);
        imax = std::max(imax, key.first);
        rmin = std::min(rmin, key.second - key.first);
        rmax = std::max(rmax, key.second - key.first);
    }
    imin = std::min<std::int64_t>(imin, 0);
    int width = 1;
    for (const auto& [key, value] : table.entries) {
        width = std::max(width, static_cast<int>(std::to_string(value).size()));
    }
    width = std::max(width, static_cast<int>(std::to_string(imax).size()));
    int label = static_cast<int>(std::max(std::to_string(rmin).size(),
                                          std::to_string(rmax).size())) + 1;
    std::ostringstream out;
    out << std::string(static_cast<std::size_t>(label), ' ');
    for (std::int64_t i = imin; i <= imax; ++i) {
        out << " " << std::string(static_cast<std::size_t>(width) -
                                  std::to_string(i).size(), ' ')
            << i;
    }
    out << "\n";
    for (std::int64_t r = rmin; r <= rmax; ++r) {
        std::string lab = std::to_string(r) + ":";
        out << std::string(static_cast<std::size_t>(label) - lab.size(), ' ') << lab;
        for (std::int64_t i = imin; i <= imax; ++i) {
            std::int64_t b = table.beta(i, r + i);
            std::string cell = b == 0 ? "." : std::to_string(b);
            out << " " << std::string(static_cast<std::size_t>(width) - cell.size(), ' ')
                << cell;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace borelkit
