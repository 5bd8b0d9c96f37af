#ifndef MFK_MATRIX_HPP
#define MFK_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mfk/poly.hpp"

namespace mfk {

// Rectangular matrix of polynomials; a map of free modules acting on column
// vectors by left multiplication.  Zero rows/columns are allowed so the zero
// object and empty generating sets need no special cases.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(Ctx ctx, std::size_t rows, std::size_t cols); // zero-filled

    static RingMatrix identity(const Ctx& ctx, std::size_t n);
    static RingMatrix scalar(const Ctx& ctx, std::size_t n, const Poly& c); // c * I
    static RingMatrix from_rows(const Ctx& ctx, const std::vector<std::vector<Poly>>& rows);
    static RingMatrix from_columns(const Ctx& ctx, std::size_t rows,
                                   const std::vector<std::vector<Poly>>& cols);

    const Ctx& context() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Poly& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Poly value);

    std::vector<Poly> column(std::size_t j) const;
    RingMatrix columns(const std::vector<std::size_t>& indices) const;
    RingMatrix with_column_appended(const std::vector<Poly>& col) const;
    RingMatrix top_rows(std::size_t k) const;

    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix operator-() const;
    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix scale(const Poly& c) const;
    RingMatrix transpose() const;

    // [*this | o] and [*this ; o]
    RingMatrix hcat(const RingMatrix& o) const;
    RingMatrix vcat(const RingMatrix& o) const;

    // Block matrix assembly; every row of `blocks` must have equal heights,
    // every column equal widths.
    static RingMatrix block(const std::vector<std::vector<RingMatrix>>& blocks);

    // Kronecker product: (A ⊗ B)(vec X) = vec(B X A^T).
    RingMatrix kron(const RingMatrix& o) const;

    // Column-major flattening into a single column, and its inverse.
    RingMatrix vec() const;
    static RingMatrix unvec(const RingMatrix& column, std::size_t rows, std::size_t cols);

    bool is_zero() const;
    bool operator==(const RingMatrix& o) const;
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    // One line per row, entries separated by ", " (the bundle row format).
    std::vector<std::string> row_strings() const;
    std::string str() const;

private:
    Ctx ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> entries_; // row-major

    void check_same_shape(const RingMatrix& o, const char* where) const;
};

} // namespace mfk

#endif
