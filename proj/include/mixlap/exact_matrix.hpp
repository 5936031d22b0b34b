#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mixlap/eisenstein.hpp"

namespace mixlap {

class unknown_label_error : public std::invalid_argument {
public:
    explicit unknown_label_error(int label)
        : std::invalid_argument("unknown row/column label " + std::to_string(label)) {}
};

/**
 * Dense rectangular matrix over Z[ω] with row and column index labels
 * (vertex ids or edge ids). Submatrix extraction works on labels, so minors
 * keep track of which vertices/edges they refer to.
 */
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::vector<int> row_labels, std::vector<int> col_labels);

    int row_count() const { return static_cast<int>(row_labels_.size()); }
    int col_count() const { return static_cast<int>(col_labels_.size()); }
    bool is_square() const { return row_count() == col_count(); }

    const std::vector<int>& row_labels() const { return row_labels_; }
    const std::vector<int>& col_labels() const { return col_labels_; }

    /// 0-based position of a label; throws unknown_label_error if absent.
    int row_position(int label) const;
    int col_position(int label) const;

    EisensteinInt& at(int row, int col) {
        return entries_[static_cast<std::size_t>(row) * col_labels_.size() +
                        static_cast<std::size_t>(col)];
    }
    const EisensteinInt& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * col_labels_.size() +
                        static_cast<std::size_t>(col)];
    }

    bool operator==(const ExactMatrix&) const = default;

    /// Pretty grid with "a+bω" cells, labels on the margins.
    std::string to_text() const;
    /// Same grid rendered with complex values to six decimal places.
    std::string to_complex_text() const;

private:
    std::vector<int> row_labels_;
    std::vector<int> col_labels_;
    std::vector<EisensteinInt> entries_;
};

/// A[α,β]: rows/columns selected by label, ordered ascending.
ExactMatrix select_submatrix(const ExactMatrix& m, std::vector<int> rows,
                             std::vector<int> cols);

/// A(α,β): rows/columns deleted by label.
ExactMatrix delete_submatrix(const ExactMatrix& m, const std::vector<int>& rows,
                             const std::vector<int>& cols);

/// A · B*, where B* is the conjugate transpose; column labels must agree.
ExactMatrix multiply_conj_transpose(const ExactMatrix& a, const ExactMatrix& b);

/// Matrix-vector product A·x with x indexed like the column labels.
std::vector<EisensteinInt> multiply_vector(const ExactMatrix& a,
                                           const std::vector<EisensteinInt>& x);

}  // namespace mixlap
