#include "kohn/covector.hpp"

namespace kohn {

Covector gradient(const Polynomial& f) {
    Covector cv(f.nvars());
    for (int j = 0; j < f.nvars(); ++j) cv.coeffs[static_cast<size_t>(j)] = partial_derivative(f, j);
    return cv;
}

bool proportional(const Covector& a, const Covector& b) {
    if (a.nvars() != b.nvars()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    // Locate the first slot nonzero in either; the ratio there must carry.
    size_t pivot = 0;
    while (pivot < a.coeffs.size() && a.coeffs[pivot].is_zero() && b.coeffs[pivot].is_zero()) ++pivot;
    const Polynomial& pa = a.coeffs[pivot];
    const Polynomial& pb = b.coeffs[pivot];
    if (pa.is_zero() != pb.is_zero()) return false;
    if (!proportional(pa, pb)) return false;
    GaussianRational ratio = pa.terms().begin()->second / pb.terms().begin()->second;
    for (size_t j = pivot + 1; j < a.coeffs.size(); ++j) {
        if (a.coeffs[j] != ratio * b.coeffs[j]) return false;
    }
    return true;
}

namespace {

Polynomial det_recursive(const std::vector<Covector>& rows, std::vector<int>& cols, size_t row,
                         int nvars) {
    if (cols.size() == 1) return rows[row].coeffs[static_cast<size_t>(cols[0])];
    Polynomial acc(nvars);
    for (size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& entry = rows[row].coeffs[static_cast<size_t>(cols[k])];
        if (entry.is_zero()) continue;
        int col = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        Polynomial minor = det_recursive(rows, cols, row + 1, nvars);
        cols.insert(cols.begin() + static_cast<long>(k), col);
        Polynomial contrib = entry * minor;
        if (k % 2 == 0)
            acc = acc + contrib;
        else
            acc = acc - contrib;
    }
    return acc;
}

} // namespace

Polynomial jacobian_determinant(const std::vector<Covector>& rows) {
    if (rows.empty()) throw std::invalid_argument("jacobian_determinant: no rows");
    int n = rows[0].nvars();
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("jacobian_determinant: need exactly n rows over n variables");
    for (const auto& r : rows)
        if (r.nvars() != n) throw std::invalid_argument("jacobian_determinant: row width mismatch");
    std::vector<int> cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<size_t>(j)] = j;
    return det_recursive(rows, cols, 0, n);
}

} // namespace kohn
