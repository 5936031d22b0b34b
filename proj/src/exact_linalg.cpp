#include "mixlap/exact_linalg.hpp"

#include <utility>
#include <vector>

namespace mixlap {

namespace {

using Grid = std::vector<std::vector<EisensteinInt>>;

Grid copy_entries(const ExactMatrix& m) {
    Grid grid(static_cast<std::size_t>(m.row_count()));
    for (int i = 0; i < m.row_count(); ++i) {
        grid[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.col_count()));
        for (int j = 0; j < m.col_count(); ++j)
            grid[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    }
    return grid;
}

}  // namespace

EisensteinInt det(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = static_cast<std::size_t>(m.row_count());
    if (n == 0) return EisensteinInt(1);

    Grid a = copy_entries(m);
    bool negate = false;
    EisensteinInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return EisensteinInt(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = EisensteinInt::exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = EisensteinInt(0);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

EisensteinInt det_cofactor_expansion(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
    if (m.row_count() > 8)
        throw std::invalid_argument("det_cofactor_expansion: dimension too large");

    // Recursive expansion along the first remaining row, on index subsets.
    struct Expander {
        const ExactMatrix& m;
        EisensteinInt run(const std::vector<int>& rows, const std::vector<int>& cols) {
            if (rows.empty()) return EisensteinInt(1);
            EisensteinInt total(0);
            bool negate = false;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                const EisensteinInt& entry = m.at(rows[0], cols[j]);
                if (!entry.is_zero()) {
                    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
                    std::vector<int> sub_cols;
                    sub_cols.reserve(cols.size() - 1);
                    for (std::size_t t = 0; t < cols.size(); ++t)
                        if (t != j) sub_cols.push_back(cols[t]);
                    const EisensteinInt term = entry * run(sub_rows, sub_cols);
                    total += negate ? -term : term;
                }
                negate = !negate;
            }
            return total;
        }
    };
    std::vector<int> rows, cols;
    for (int i = 0; i < m.row_count(); ++i) rows.push_back(i);
    for (int j = 0; j < m.col_count(); ++j) cols.push_back(j);
    return Expander{m}.run(rows, cols);
}

EisensteinInt cofactor(const ExactMatrix& m, int row_label, int col_label) {
    if (!m.is_square()) throw std::invalid_argument("cofactor: matrix is not square");
    const int i = m.row_position(row_label);
    const int j = m.col_position(col_label);
    const EisensteinInt minor = det(delete_submatrix(m, {row_label}, {col_label}));
    return ((i + j) % 2 == 0) ? minor : -minor;
}

int rank(const ExactMatrix& m) {
    const std::size_t rows = static_cast<std::size_t>(m.row_count());
    const std::size_t cols = static_cast<std::size_t>(m.col_count());
    Grid a = copy_entries(m);
    std::size_t r = 0;
    EisensteinInt prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = EisensteinInt::exact_div(a[i][j] * a[r][c] - a[i][c] * a[r][j], prev);
            a[i][c] = EisensteinInt(0);
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

bool is_hermitian(const ExactMatrix& m) {
    if (!m.is_square()) return false;
    for (int i = 0; i < m.row_count(); ++i)
        for (int j = i; j < m.col_count(); ++j)
            if (m.at(i, j) != m.at(j, i).conj()) return false;
    return true;
}

}  // namespace mixlap
