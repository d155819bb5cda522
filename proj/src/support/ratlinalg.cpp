#include "dioph/support/ratlinalg.hpp"

#include "dioph/errors.hpp"

namespace dioph {

RatVector solve_linear(RatMatrix a, RatVector b) {
    const size_t n = a.size();
    if (n == 0) return {};
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InvalidParameters("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            mpq_class f = a[row][col] / a[col][col];
            for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    RatVector x(n);
    for (size_t i = n; i-- > 0;) {
        mpq_class s = b[i];
        for (size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

RatVector kernel_vector(RatMatrix a, size_t cols) {
    const size_t rows = a.size();
    if (cols != rows + 1) throw InvalidParameters("kernel_vector expects cols == rows + 1");
    // Move the last column to the right-hand side and solve.
    RatVector b(rows);
    RatMatrix m(rows, RatVector(rows));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < rows; ++j) m[i][j] = a[i][j];
        b[i] = -a[i][cols - 1];
    }
    RatVector x = solve_linear(std::move(m), std::move(b));
    x.push_back(1);
    return x;
}

}  // namespace dioph
