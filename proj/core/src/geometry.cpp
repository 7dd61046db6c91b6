#include "varsamp/geometry.hpp"

#include <algorithm>

namespace varsamp {

namespace {

// Reduced column echelon form, in place. Returns the pivot row of each
// surviving column; columns are permuted/scaled/combined so that column j has
// a 1 at its pivot row, zeros above it and zeros at every other pivot row.
std::vector<std::size_t> column_echelon(std::vector<std::vector<FieldElement>>& cols, std::size_t n) {
    std::vector<std::size_t> pivot_rows;
    std::size_t next_col = 0;
    for (std::size_t row = 0; row < n && next_col < cols.size(); ++row) {
        std::size_t found = cols.size();
        for (std::size_t j = next_col; j < cols.size(); ++j) {
            if (!cols[j][row].is_zero()) {
                found = j;
                break;
            }
        }
        if (found == cols.size()) continue;
        std::swap(cols[next_col], cols[found]);
        FieldElement scale = inv(cols[next_col][row]);
        for (FieldElement& x : cols[next_col]) x = x * scale;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j == next_col || cols[j][row].is_zero()) continue;
            FieldElement factor = cols[j][row];
            for (std::size_t i = 0; i < n; ++i) cols[j][i] -= factor * cols[next_col][i];
        }
        pivot_rows.push_back(row);
        ++next_col;
    }
    return pivot_rows;
}

} // namespace

AffineSubspace::AffineSubspace(std::vector<FieldElement> base,
                               std::vector<std::vector<FieldElement>> basis_columns)
    : base_(std::move(base)), columns_(std::move(basis_columns)) {
    const std::size_t n = base_.size();
    const std::size_t k = columns_.size();
    if (n == 0 || k == 0 || k > n) throw BadDimensions("need 1 <= k <= n");
    std::uint64_t p = base_[0].modulus();
    for (const FieldElement& x : base_)
        if (x.modulus() != p) throw MixedFields("base coordinates from different fields");
    for (const auto& col : columns_) {
        if (col.size() != n) throw BadDimensions("basis column has wrong length");
        for (const FieldElement& x : col)
            if (x.modulus() != p) throw MixedFields("basis entries from different fields");
    }
    auto copy = columns_;
    if (column_echelon(copy, n).size() != k)
        throw BadDimensions("basis columns are linearly dependent");
}

std::vector<FieldElement> AffineSubspace::point_at(const std::vector<FieldElement>& t) const {
    if (t.size() != dim()) throw DimensionMismatch("parameter vector has wrong length");
    std::vector<FieldElement> out = base_;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (t[j].is_zero()) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += columns_[j][i] * t[j];
    }
    return out;
}

std::vector<std::uint64_t> AffineSubspace::canonical_key() const {
    const std::size_t n = ambient_dim();
    auto cols = columns_;
    std::vector<std::size_t> pivots = column_echelon(cols, n);
    // Zero the base point at every pivot row: within a coset that choice is
    // unique and gives the lex-smallest representative.
    std::vector<FieldElement> rep = base_;
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        FieldElement v = rep[pivots[j]];
        if (v.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) rep[i] -= v * cols[j][i];
    }
    std::vector<std::uint64_t> key;
    key.reserve(n * (cols.size() + 1));
    for (const auto& col : cols)
        for (const FieldElement& x : col) key.push_back(x.value());
    for (const FieldElement& x : rep) key.push_back(x.value());
    return key;
}

bool contains(const AffineSubspace& a, const std::vector<FieldElement>& x) {
    const std::size_t n = a.ambient_dim();
    if (x.size() != n) throw DimensionMismatch("point has wrong length");
    // Gaussian elimination on [B | x - base]: consistent iff no pivot lands in
    // the last column.
    std::vector<std::vector<FieldElement>> cols;
    cols.reserve(a.dim() + 1);
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.column(j));
    std::vector<FieldElement> rhs(n, Field(a.field_modulus()).zero());
    for (std::size_t i = 0; i < n; ++i) rhs[i] = x[i] - a.base()[i];
    cols.push_back(std::move(rhs));
    std::vector<std::size_t> pivots = column_echelon(cols, n);
    // rank([B | rhs]) == rank(B) == dim  <=>  rhs in span(B)
    return pivots.size() == a.dim();
}

AffineSubspace sample_affine_subspace(const Field& field, std::size_t n, std::size_t k,
                                      RandomSource& rng) {
    if (k < 1 || k > n) throw BadDimensions("need 1 <= k <= n");
    for (;;) {
        std::vector<std::vector<FieldElement>> cols(k);
        for (auto& col : cols) {
            col.reserve(n);
            for (std::size_t i = 0; i < n; ++i) col.push_back(rand_element(field, rng));
        }
        auto probe = cols;
        if (column_echelon(probe, n).size() != k) continue; // redraw the whole tuple
        std::vector<FieldElement> base;
        base.reserve(n);
        for (std::size_t i = 0; i < n; ++i) base.push_back(rand_element(field, rng));
        return AffineSubspace(std::move(base), std::move(cols));
    }
}

BigInt count_linear_subspaces(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k > n) throw BadDimensions("k exceeds n");
    BigInt num = 1, den = 1;
    BigInt Q = q;
    for (std::size_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(Q, static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(Q, static_cast<unsigned>(k - i)) - 1;
    }
    return num / den; // exact
}

BigInt count_affine_subspaces(std::size_t n, std::size_t k, std::uint64_t q) {
    return count_linear_subspaces(n, k, q) *
           boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k));
}

std::vector<AffineSubspace> enumerate_affine_subspaces(const Field& field, std::size_t n,
                                                       std::size_t k, std::uint64_t cap) {
    if (k < 1 || k > n) throw BadDimensions("need 1 <= k <= n");
    const std::uint64_t q = field.modulus();
    if (boost::multiprecision::pow(BigInt(q), static_cast<unsigned>((k + 1) * n)) > cap)
        throw TooLarge("enumeration guard q^((k+1)n) exceeds the cap");

    std::vector<AffineSubspace> out;

    // Pivot-row combinations r_1 < ... < r_k.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    auto advance_pivots = [&]() -> bool {
        std::size_t i = k;
        while (i-- > 0) {
            if (pivots[i] < n - k + i) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        std::vector<bool> is_pivot(n, false);
        for (std::size_t r : pivots) is_pivot[r] = true;
        // Free slots: column j is free at rows below its pivot that are not
        // pivot rows themselves.
        std::vector<std::pair<std::size_t, std::size_t>> free_slots; // (col, row)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t r = pivots[j] + 1; r < n; ++r)
                if (!is_pivot[r]) free_slots.emplace_back(j, r);

        std::vector<std::uint64_t> assign(free_slots.size(), 0);
        bool more_bases = true;
        while (more_bases) {
            std::vector<std::vector<FieldElement>> cols(
                k, std::vector<FieldElement>(n, field.zero()));
            for (std::size_t j = 0; j < k; ++j) cols[j][pivots[j]] = field.one();
            for (std::size_t s = 0; s < free_slots.size(); ++s)
                cols[free_slots[s].first][free_slots[s].second] = field.element(assign[s]);

            // Coset representatives: zero at pivot rows, arbitrary elsewhere.
            std::vector<std::size_t> non_pivot;
            for (std::size_t r = 0; r < n; ++r)
                if (!is_pivot[r]) non_pivot.push_back(r);
            std::vector<std::uint64_t> coset(non_pivot.size(), 0);
            bool more_cosets = true;
            while (more_cosets) {
                std::vector<FieldElement> base(n, field.zero());
                for (std::size_t s = 0; s < non_pivot.size(); ++s)
                    base[non_pivot[s]] = field.element(coset[s]);
                out.emplace_back(std::move(base), cols);

                more_cosets = false;
                for (std::size_t s = 0; s < coset.size(); ++s) {
                    if (++coset[s] < q) {
                        more_cosets = true;
                        break;
                    }
                    coset[s] = 0;
                }
                if (coset.empty()) break;
            }

            more_bases = false;
            for (std::size_t s = 0; s < assign.size(); ++s) {
                if (++assign[s] < q) {
                    more_bases = true;
                    break;
                }
                assign[s] = 0;
            }
            if (assign.empty()) break;
        }
    } while (advance_pivots());

    return out;
}

} // namespace varsamp
