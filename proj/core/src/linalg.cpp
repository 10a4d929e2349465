#include "chopf/linalg.hpp"

#include <utility>

#include "chopf/errors.hpp"

namespace chopf {

Matrix identity_matrix(std::size_t n)
{
    Matrix m(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = Scalar(1);
    return m;
}

std::size_t rank(Matrix m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        const Scalar inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero())
                continue;
            const Scalar f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero())
                    m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Matrix inverse(const Matrix& m)
{
    const std::size_t n = m.size();
    Matrix a = m;
    Matrix inv = identity_matrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c].is_zero())
            ++pivot;
        if (pivot == n)
            throw DomainError("singular matrix");
        std::swap(a[pivot], a[c]);
        std::swap(inv[pivot], inv[c]);
        const Scalar s = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero())
                continue;
            const Scalar f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::vector<Scalar> row_times(const std::vector<Scalar>& v, const Matrix& m)
{
    std::vector<Scalar> out(m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (!m[i][j].is_zero())
                out[j] += v[i] * m[i][j];
    }
    return out;
}

} // namespace chopf
