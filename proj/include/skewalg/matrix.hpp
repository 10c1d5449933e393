#pragma once

#include "scalar.hpp"

#include <optional>
#include <vector>

namespace skewalg {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> vec_zero(typename K::Field f, size_t n)
{
    return Vec<K>(n, K::zero(f));
}

template <class K>
void vec_add_scaled(Vec<K>& dst, const Vec<K>& src, const K& c)
{
    if (dst.size() != src.size())
        fail(ErrorCode::ShapeError, "vector length mismatch");
    for (size_t i = 0; i < dst.size(); ++i)
        dst[i] += src[i] * c;
}

template <class K>
bool vec_is_zero(const Vec<K>& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

template <class K>
Vec<K> vec_scale(Vec<K> v, const K& c)
{
    for (auto& x : v)
        x *= c;
    return v;
}

// Dense row-major exact matrix.
template <class K>
class Mat {
public:
    using Field = typename K::Field;

    Mat() = default;

    Mat(Field f, size_t rows, size_t cols)
        : fld_(f), rows_(rows), cols_(cols), e_(rows * cols, K::zero(f))
    {
    }

    static Mat zero(Field f, size_t rows, size_t cols) { return Mat(f, rows, cols); }

    static Mat identity(Field f, size_t n)
    {
        Mat m(f, n, n);
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = K::one(f);
        return m;
    }

    static Mat from_rows(Field f, const std::vector<Vec<K>>& rows)
    {
        size_t c = rows.empty() ? 0 : rows[0].size();
        Mat m(f, rows.size(), c);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c)
                fail(ErrorCode::ShapeError, "ragged rows");
            for (size_t j = 0; j < c; ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static Mat from_cols(Field f, const std::vector<Vec<K>>& cols)
    {
        size_t r = cols.empty() ? 0 : cols[0].size();
        Mat m(f, r, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != r)
                fail(ErrorCode::ShapeError, "ragged columns");
            for (size_t i = 0; i < r; ++i)
                m.at(i, j) = cols[j][i];
        }
        return m;
    }

    Field field() const { return fld_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    K& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Vec<K> row(size_t i) const
    {
        Vec<K> r(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
        return r;
    }

    Vec<K> col(size_t j) const
    {
        Vec<K> c;
        c.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i)
            c.push_back(at(i, j));
        return c;
    }

    void set_row(size_t i, const Vec<K>& v)
    {
        for (size_t j = 0; j < cols_; ++j)
            at(i, j) = v[j];
    }

    void set_col(size_t j, const Vec<K>& v)
    {
        for (size_t i = 0; i < rows_; ++i)
            at(i, j) = v[i];
    }

    bool is_zero() const
    {
        for (const auto& x : e_)
            if (!x.is_zero())
                return false;
        return true;
    }

    bool operator==(const Mat& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != o.e_[i])
                return false;
        return true;
    }

    Mat operator+(const Mat& o) const
    {
        check_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] += o.e_[i];
        return r;
    }

    Mat operator-(const Mat& o) const
    {
        check_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] -= o.e_[i];
        return r;
    }

    Mat operator*(const Mat& o) const
    {
        if (cols_ != o.rows_)
            fail(ErrorCode::ShapeError, "matrix product shape mismatch");
        Mat r(fld_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero())
                    continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    Mat scaled(const K& c) const
    {
        Mat r = *this;
        for (auto& x : r.e_)
            x *= c;
        return r;
    }

    Vec<K> apply(const Vec<K>& v) const
    {
        if (v.size() != cols_)
            fail(ErrorCode::ShapeError, "matrix-vector shape mismatch");
        Vec<K> r = vec_zero<K>(fld_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero())
                    r[i] += at(i, j) * v[j];
        return r;
    }

    Mat transpose() const
    {
        Mat r(fld_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    K trace() const
    {
        K t = K::zero(fld_);
        for (size_t i = 0; i < rows_ && i < cols_; ++i)
            t += at(i, i);
        return t;
    }

    // Stack o below this.
    Mat vstack(const Mat& o) const
    {
        if (cols_ != o.cols_)
            fail(ErrorCode::ShapeError, "vstack column mismatch");
        Mat r(fld_, rows_ + o.rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                r.at(i, j) = at(i, j);
        for (size_t i = 0; i < o.rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    Mat hstack(const Mat& o) const
    {
        if (rows_ != o.rows_)
            fail(ErrorCode::ShapeError, "hstack row mismatch");
        Mat r(fld_, rows_, cols_ + o.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j)
                r.at(i, j) = at(i, j);
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    struct Rref {
        Mat matrix;
        std::vector<size_t> pivots;
        size_t rank = 0;
    };

    Rref rref() const
    {
        Mat m = *this;
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t sel = rows_;
            for (size_t i = r; i < rows_; ++i)
                if (!m.at(i, c).is_zero()) {
                    sel = i;
                    break;
                }
            if (sel == rows_)
                continue;
            if (sel != r)
                for (size_t j = 0; j < cols_; ++j)
                    std::swap(m.at(r, j), m.at(sel, j));
            K piv = m.at(r, c).inv();
            for (size_t j = c; j < cols_; ++j)
                m.at(r, j) *= piv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, c).is_zero())
                    continue;
                K f = m.at(i, c);
                for (size_t j = c; j < cols_; ++j)
                    m.at(i, j) -= f * m.at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return Rref{std::move(m), std::move(pivots), r};
    }

    size_t rank() const { return rref().rank; }

    // Basis of the right null space {x : Ax = 0}. Free variables set to the
    // standard unit pattern, so the basis is canonical.
    std::vector<Vec<K>> kernel_basis() const
    {
        auto rr = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : rr.pivots)
            is_pivot[c] = true;
        std::vector<Vec<K>> basis;
        for (size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c])
                continue;
            Vec<K> v = vec_zero<K>(fld_, cols_);
            v[c] = K::one(fld_);
            for (size_t r = 0; r < rr.pivots.size(); ++r)
                v[rr.pivots[r]] = -rr.matrix.at(r, c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    const std::vector<K>& data() const { return e_; }

private:
    void check_same_shape(const Mat& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            fail(ErrorCode::ShapeError, "matrix shape mismatch");
    }

    Field fld_;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<K> e_;
};

// Solve a·x = b for one particular solution; free variables are set to zero,
// so the answer is deterministic. Returns nothing when inconsistent.
template <class K>
std::optional<Mat<K>> solve(const Mat<K>& a, const Mat<K>& b)
{
    if (a.rows() != b.rows())
        fail(ErrorCode::ShapeError, "solve: row mismatch");
    auto rr = a.hstack(b).rref();
    size_t n = a.cols();
    // Any pivot in the b-columns means an inconsistent row.
    for (size_t c : rr.pivots)
        if (c >= n)
            return std::nullopt;
    Mat<K> x(a.field(), n, b.cols());
    for (size_t r = 0; r < rr.pivots.size(); ++r)
        for (size_t j = 0; j < b.cols(); ++j)
            x.at(rr.pivots[r], j) = rr.matrix.at(r, n + j);
    return x;
}

template <class K>
std::optional<Vec<K>> solve_vec(const Mat<K>& a, const Vec<K>& b)
{
    auto x = solve(a, Mat<K>::from_cols(a.field(), {b}));
    if (!x)
        return std::nullopt;
    return x->col(0);
}

// A subspace of k^n held as an rref row basis; bases are canonical, so two
// subspaces are equal iff their matrices are equal.
template <class K>
class Subspace {
public:
    using Field = typename K::Field;

    Subspace() = default;

    Subspace(Field f, size_t ambient) : fld_(f), ambient_(ambient), basis_(f, 0, ambient) {}

    static Subspace from_vectors(Field f, size_t ambient, const std::vector<Vec<K>>& vs)
    {
        Subspace s(f, ambient);
        if (vs.empty())
            return s;
        auto rr = Mat<K>::from_rows(f, vs).rref();
        Mat<K> b(f, rr.rank, ambient);
        for (size_t i = 0; i < rr.rank; ++i)
            b.set_row(i, rr.matrix.row(i));
        s.basis_ = std::move(b);
        s.pivots_ = std::move(rr.pivots);
        return s;
    }

    static Subspace full(Field f, size_t ambient)
    {
        Subspace s(f, ambient);
        s.basis_ = Mat<K>::identity(f, ambient);
        for (size_t i = 0; i < ambient; ++i)
            s.pivots_.push_back(i);
        return s;
    }

    Field field() const { return fld_; }
    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Mat<K>& basis_matrix() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    std::vector<Vec<K>> basis_vectors() const
    {
        std::vector<Vec<K>> vs;
        for (size_t i = 0; i < basis_.rows(); ++i)
            vs.push_back(basis_.row(i));
        return vs;
    }

    // Reduce v by the rref rows; the residue is zero iff v lies in the span.
    Vec<K> reduce(Vec<K> v) const
    {
        for (size_t r = 0; r < pivots_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (c.is_zero())
                continue;
            K f = c;
            for (size_t j = 0; j < ambient_; ++j)
                v[j] -= f * basis_.at(r, j);
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

    // Coordinates of v in the rref basis (v must be in the span).
    Vec<K> coords(const Vec<K>& v) const
    {
        Vec<K> c = vec_zero<K>(fld_, dim());
        Vec<K> w = v;
        for (size_t r = 0; r < pivots_.size(); ++r) {
            K f = w[pivots_[r]];
            c[r] = f;
            if (f.is_zero())
                continue;
            for (size_t j = 0; j < ambient_; ++j)
                w[j] -= f * basis_.at(r, j);
        }
        if (!vec_is_zero(w))
            fail(ErrorCode::ShapeError, "coords: vector not in subspace");
        return c;
    }

    bool operator==(const Subspace& o) const
    {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    Field fld_;
    size_t ambient_ = 0;
    Mat<K> basis_;
    std::vector<size_t> pivots_;
};

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b)
{
    if (a.ambient() != b.ambient())
        fail(ErrorCode::ShapeError, "subspace sum: ambient mismatch");
    auto vs = a.basis_vectors();
    for (auto& v : b.basis_vectors())
        vs.push_back(v);
    return Subspace<K>::from_vectors(a.field(), a.ambient(), vs);
}

// Intersection of a family of subspaces, each given by a spanning set.
// Pairwise: x in U∩V written over the stacked bases, solved by kernel.
template <class K>
std::vector<Vec<K>> subspace_intersect(typename K::Field f, size_t ambient,
                                       const std::vector<std::vector<Vec<K>>>& spans)
{
    if (spans.empty())
        return Subspace<K>::full(f, ambient).basis_vectors();
    for (const auto& sp : spans)
        for (const auto& v : sp)
            if (v.size() != ambient)
                fail(ErrorCode::ShapeError, "subspace_intersect: dimension mismatch");
    Subspace<K> acc = Subspace<K>::from_vectors(f, ambient, spans[0]);
    for (size_t s = 1; s < spans.size() && acc.dim() > 0; ++s) {
        Subspace<K> other = Subspace<K>::from_vectors(f, ambient, spans[s]);
        // columns: coefficients on acc basis, then on other basis
        Mat<K> lhs(f, ambient, acc.dim() + other.dim());
        for (size_t j = 0; j < acc.dim(); ++j)
            for (size_t i = 0; i < ambient; ++i)
                lhs.at(i, j) = acc.basis_matrix().at(j, i);
        for (size_t j = 0; j < other.dim(); ++j)
            for (size_t i = 0; i < ambient; ++i)
                lhs.at(i, acc.dim() + j) = -other.basis_matrix().at(j, i);
        std::vector<Vec<K>> meet;
        for (auto& ker : lhs.kernel_basis()) {
            Vec<K> v = vec_zero<K>(f, ambient);
            for (size_t j = 0; j < acc.dim(); ++j)
                vec_add_scaled(v, acc.basis_matrix().row(j), ker[j]);
            meet.push_back(std::move(v));
        }
        acc = Subspace<K>::from_vectors(f, ambient, meet);
    }
    return acc.basis_vectors();
}

} // namespace skewalg
