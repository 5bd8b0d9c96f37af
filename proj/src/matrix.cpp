#include "mfk/matrix.hpp"

#include <sstream>

namespace mfk {

RingMatrix::RingMatrix(Ctx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
      entries_(rows * cols, Poly::zero(ctx_)) {}

RingMatrix RingMatrix::identity(const Ctx& ctx, std::size_t n) {
    return scalar(ctx, n, Poly::constant(ctx, 1));
}

RingMatrix RingMatrix::scalar(const Ctx& ctx, std::size_t n, const Poly& c) {
    RingMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
    return m;
}

RingMatrix RingMatrix::from_rows(const Ctx& ctx, const std::vector<std::vector<Poly>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    RingMatrix m(ctx, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

RingMatrix RingMatrix::from_columns(const Ctx& ctx, std::size_t rows,
                                    const std::vector<std::vector<Poly>>& cols) {
    RingMatrix m(ctx, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeError("column of wrong height");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

const Poly& RingMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    return entries_[i * cols_ + j];
}

void RingMatrix::set(std::size_t i, std::size_t j, Poly value) {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    if (!value.context()) throw ValidationError("entry without ring context");
    require_compatible(*ctx_, *value.context(), "matrix entry");
    entries_[i * cols_ + j] = std::move(value);
}

std::vector<Poly> RingMatrix::column(std::size_t j) const {
    std::vector<Poly> col;
    col.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) col.push_back(at(i, j));
    return col;
}

RingMatrix RingMatrix::columns(const std::vector<std::size_t>& indices) const {
    RingMatrix m(ctx_, rows_, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) m.set(i, j, at(i, indices[j]));
    return m;
}

RingMatrix RingMatrix::with_column_appended(const std::vector<Poly>& col) const {
    if (col.size() != rows_) throw ShapeError("appended column of wrong height");
    RingMatrix m(ctx_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
        m.set(i, cols_, col[i]);
    }
    return m;
}

RingMatrix RingMatrix::top_rows(std::size_t k) const {
    if (k > rows_) throw ShapeError("top_rows: too many rows requested");
    RingMatrix m(ctx_, k, cols_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    return m;
}

void RingMatrix::check_same_shape(const RingMatrix& o, const char* where) const {
    require_compatible(*ctx_, *o.ctx_, where);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError(std::string(where) + ": shape mismatch");
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    check_same_shape(o, "matrix add");
    RingMatrix m(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + o.entries_[k];
    return m;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    check_same_shape(o, "matrix sub");
    RingMatrix m(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - o.entries_[k];
    return m;
}

RingMatrix RingMatrix::operator-() const {
    RingMatrix m(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    require_compatible(*ctx_, *o.ctx_, "matrix mul");
    if (cols_ != o.rows_) throw ShapeError("matrix mul: inner dimensions differ");
    RingMatrix m(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Poly& b = o.at(k, j);
                if (b.is_zero()) continue;
                m.entries_[i * o.cols_ + j] = m.entries_[i * o.cols_ + j] + a * b;
            }
        }
    }
    return m;
}

RingMatrix RingMatrix::scale(const Poly& c) const {
    RingMatrix m(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] * c;
    return m;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix m(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

RingMatrix RingMatrix::hcat(const RingMatrix& o) const {
    require_compatible(*ctx_, *o.ctx_, "hcat");
    if (rows_ != o.rows_) throw ShapeError("hcat: row counts differ");
    RingMatrix m(ctx_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
        for (std::size_t j = 0; j < o.cols_; ++j) m.set(i, cols_ + j, o.at(i, j));
    }
    return m;
}

RingMatrix RingMatrix::vcat(const RingMatrix& o) const {
    require_compatible(*ctx_, *o.ctx_, "vcat");
    if (cols_ != o.cols_) throw ShapeError("vcat: column counts differ");
    RingMatrix m(ctx_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(rows_ + i, j, o.at(i, j));
    return m;
}

RingMatrix RingMatrix::block(const std::vector<std::vector<RingMatrix>>& blocks) {
    if (blocks.empty()) throw ShapeError("block: empty layout");
    RingMatrix result;
    bool first_row = true;
    for (const auto& row : blocks) {
        if (row.empty()) throw ShapeError("block: empty row");
        RingMatrix strip = row[0];
        for (std::size_t j = 1; j < row.size(); ++j) strip = strip.hcat(row[j]);
        result = first_row ? strip : result.vcat(strip);
        first_row = false;
    }
    return result;
}

RingMatrix RingMatrix::kron(const RingMatrix& o) const {
    require_compatible(*ctx_, *o.ctx_, "kron");
    RingMatrix m(ctx_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Poly& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l) {
                    const Poly& b = o.at(k, l);
                    if (b.is_zero()) continue;
                    m.set(i * o.rows_ + k, j * o.cols_ + l, a * b);
                }
        }
    return m;
}

RingMatrix RingMatrix::vec() const {
    RingMatrix m(ctx_, rows_ * cols_, 1);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) m.set(j * rows_ + i, 0, at(i, j));
    return m;
}

RingMatrix RingMatrix::unvec(const RingMatrix& column, std::size_t rows, std::size_t cols) {
    if (column.cols() != 1 || column.rows() != rows * cols)
        throw ShapeError("unvec: wrong length");
    RingMatrix m(column.context(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, column.at(j * rows + i, 0));
    return m;
}

bool RingMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

std::vector<std::string> RingMatrix::row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::ostringstream os;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        out.push_back(os.str());
    }
    return out;
}

std::string RingMatrix::str() const {
    std::ostringstream os;
    os << "[" << rows_ << "x" << cols_ << "]";
    for (const auto& r : row_strings()) os << "\n  " << r;
    return os.str();
}

} // namespace mfk
