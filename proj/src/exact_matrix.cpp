#include "mixlap/exact_matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mixlap {

ExactMatrix::ExactMatrix(std::vector<int> row_labels, std::vector<int> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(row_labels_.size() * col_labels_.size()) {}

int ExactMatrix::row_position(int label) const {
    auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
    if (it == row_labels_.end()) throw unknown_label_error(label);
    return static_cast<int>(it - row_labels_.begin());
}

int ExactMatrix::col_position(int label) const {
    auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
    if (it == col_labels_.end()) throw unknown_label_error(label);
    return static_cast<int>(it - col_labels_.begin());
}

namespace {

// Display width: the only multibyte character in play is ω (two bytes).
std::size_t display_width(const std::string& s) {
    return s.size() - static_cast<std::size_t>(std::count(s.begin(), s.end(), '\xcf'));
}

std::string render_grid(const ExactMatrix& m,
                        const std::function<std::string(const EisensteinInt&)>& cell) {
    std::vector<std::string> cells(static_cast<std::size_t>(m.row_count()) *
                                   static_cast<std::size_t>(m.col_count()));
    std::size_t width = 1;
    for (int i = 0; i < m.row_count(); ++i) {
        for (int j = 0; j < m.col_count(); ++j) {
            auto& s = cells[static_cast<std::size_t>(i) * m.col_count() + j];
            s = cell(m.at(i, j));
            width = std::max(width, display_width(s));
        }
    }
    std::ostringstream out;
    for (int i = 0; i < m.row_count(); ++i) {
        out << "[";
        for (int j = 0; j < m.col_count(); ++j) {
            const auto& s = cells[static_cast<std::size_t>(i) * m.col_count() + j];
            out << std::string(width - display_width(s) + (j ? 2 : 0), ' ') << s;
        }
        out << " ]\n";
    }
    return out.str();
}

}  // namespace

std::string ExactMatrix::to_text() const {
    return render_grid(*this, [](const EisensteinInt& x) { return x.to_string(); });
}

std::string ExactMatrix::to_complex_text() const {
    return render_grid(*this,
                       [](const EisensteinInt& x) { return x.to_complex_string(); });
}

ExactMatrix select_submatrix(const ExactMatrix& m, std::vector<int> rows,
                             std::vector<int> cols) {
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    std::vector<int> rpos, cpos;
    rpos.reserve(rows.size());
    cpos.reserve(cols.size());
    for (int r : rows) rpos.push_back(m.row_position(r));
    for (int c : cols) cpos.push_back(m.col_position(c));

    ExactMatrix out(std::move(rows), std::move(cols));
    for (std::size_t i = 0; i < rpos.size(); ++i)
        for (std::size_t j = 0; j < cpos.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rpos[i], cpos[j]);
    return out;
}

ExactMatrix delete_submatrix(const ExactMatrix& m, const std::vector<int>& rows,
                             const std::vector<int>& cols) {
    for (int r : rows) m.row_position(r);  // validate
    for (int c : cols) m.col_position(c);
    std::vector<int> keep_rows, keep_cols;
    for (int label : m.row_labels())
        if (std::find(rows.begin(), rows.end(), label) == rows.end())
            keep_rows.push_back(label);
    for (int label : m.col_labels())
        if (std::find(cols.begin(), cols.end(), label) == cols.end())
            keep_cols.push_back(label);
    return select_submatrix(m, keep_rows, keep_cols);
}

ExactMatrix multiply_conj_transpose(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.col_labels() != b.col_labels())
        throw std::invalid_argument("multiply_conj_transpose: column labels differ");
    ExactMatrix out(a.row_labels(), b.row_labels());
    for (int i = 0; i < a.row_count(); ++i) {
        for (int j = 0; j < b.row_count(); ++j) {
            EisensteinInt sum;
            for (int k = 0; k < a.col_count(); ++k) sum += a.at(i, k) * b.at(j, k).conj();
            out.at(i, j) = sum;
        }
    }
    return out;
}

std::vector<EisensteinInt> multiply_vector(const ExactMatrix& a,
                                           const std::vector<EisensteinInt>& x) {
    if (x.size() != static_cast<std::size_t>(a.col_count()))
        throw std::invalid_argument("multiply_vector: size mismatch");
    std::vector<EisensteinInt> out(static_cast<std::size_t>(a.row_count()));
    for (int i = 0; i < a.row_count(); ++i) {
        EisensteinInt sum;
        for (int k = 0; k < a.col_count(); ++k) sum += a.at(i, k) * x[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(i)] = sum;
    }
    return out;
}

}  // namespace mixlap
