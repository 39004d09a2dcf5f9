#include "orthocoord/matrix.hpp"

#include <sstream>

#include "orthocoord/error.hpp"

namespace orthocoord {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::MalformedInput, std::string("shape mismatch in ") + op);
    if (a.field() != b.field()) throw Error(ErrorKind::MalformedInput, std::string("field mismatch in ") + op);
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::unit(Field field, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(std::move(field), n, n);
    m(i, j) = 1;
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.front().size() : 0;
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::MalformedInput, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.front().size() : 0;
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::MalformedInput, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::column_vector(Field field, const std::vector<Scalar>& entries) {
    Matrix m(field, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
    require_same_shape(*this, other, "addition");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    require_same_shape(*this, other, "subtraction");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], other.data_[i]);
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.neg(data_[i]);
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw Error(ErrorKind::MalformedInput, "shape mismatch in multiplication");
    if (field_ != other.field_) throw Error(ErrorKind::MalformedInput, "field mismatch in multiplication");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (field_.is_zero(a)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Scalar& b = other(k, j);
                if (field_.is_zero(b)) continue;
                out(i, j) = field_.add(out(i, j), field_.mul(a, b));
            }
        }
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(s, data_[i]);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::conj_transpose(Involution sigma) const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = field_.conj((*this)(i, j), sigma);
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ && data_ == other.data_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!field_.is_zero(x)) return false;
    return true;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix m = *this;
    if (pivots) pivots->clear();
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < cols_ && lead_row < rows_; ++col) {
        std::size_t pivot = lead_row;
        while (pivot < rows_ && field_.is_zero(m(pivot, col))) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != lead_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(lead_row, j));
        Scalar scale = field_.inv(m(lead_row, col));
        for (std::size_t j = col; j < cols_; ++j) m(lead_row, j) = field_.mul(scale, m(lead_row, j));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead_row || field_.is_zero(m(i, col))) continue;
            Scalar factor = m(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                m(i, j) = field_.sub(m(i, j), field_.mul(factor, m(lead_row, j)));
        }
        if (pivots) pivots->push_back(col);
        ++lead_row;
    }
    return m;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

Scalar Matrix::determinant() const {
    if (!is_square()) throw Error(ErrorKind::MalformedInput, "determinant of a non-square matrix");
    Matrix m = *this;
    Scalar det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && field_.is_zero(m(pivot, col))) ++pivot;
        if (pivot == rows_) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(col, j));
            det = field_.neg(det);
        }
        det = field_.mul(det, m(col, col));
        Scalar inv = field_.inv(m(col, col));
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (field_.is_zero(m(i, col))) continue;
            Scalar factor = field_.mul(m(i, col), inv);
            for (std::size_t j = col; j < cols_; ++j) m(i, j) = field_.sub(m(i, j), field_.mul(factor, m(col, j)));
        }
    }
    return det;
}

std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) return std::nullopt;
    if (rows_ == 0) return *this;
    Matrix aug = hconcat(identity(field_, rows_));
    std::vector<std::size_t> pivots;
    Matrix r = aug.rref(&pivots);
    if (pivots.size() < rows_ || pivots.back() >= cols_) return std::nullopt;
    return r.block(0, cols_, rows_, cols_);
}

Matrix Matrix::nullspace() const {
    std::vector<std::size_t> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix basis(field_, cols_, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::size_t fc = free_cols[f];
        basis(fc, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], f) = field_.neg(r(i, fc));
    }
    return basis;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    if (rhs.rows_ != rows_) throw Error(ErrorKind::MalformedInput, "shape mismatch in solve");
    Matrix aug = hconcat(rhs);
    std::vector<std::size_t> pivots;
    Matrix r = aug.rref(&pivots);
    for (auto p : pivots)
        if (p >= cols_) return std::nullopt;
    Matrix x(field_, cols_, rhs.cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) x(pivots[i], j) = r(i, cols_ + j);
    return x;
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }
Matrix Matrix::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::MalformedInput, "block out of range");
    Matrix out(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

Matrix Matrix::hconcat(const Matrix& right) const {
    if (rows_ != right.rows_) throw Error(ErrorKind::MalformedInput, "row mismatch in hconcat");
    Matrix out(field_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
    }
    return out;
}

Matrix Matrix::vconcat(const Matrix& below) const {
    if (cols_ != below.cols_) throw Error(ErrorKind::MalformedInput, "column mismatch in vconcat");
    Matrix out(field_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = below(i, j);
    return out;
}

Matrix Matrix::vectorized() const {
    Matrix out(field_, rows_ * cols_, 1);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) out(j * rows_ + i, 0) = (*this)(i, j);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << field_.format((*this)(i, j));
        }
    }
    os << "]";
    return os.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    return out;
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long range) {
    Matrix m(field, rows, cols);
    if (field.is_rational()) {
        std::uniform_int_distribution<long> dist(-range, range);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(dist(rng));
    } else {
        std::uniform_int_distribution<std::uint64_t> dist(0, field.order() - 1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(static_cast<unsigned long>(dist(rng)));
    }
    return m;
}

Matrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng, long range) {
    for (;;) {
        Matrix m = random_matrix(field, n, n, rng, range);
        if (!field.is_zero(m.determinant())) return m;
    }
}

}  // namespace orthocoord
