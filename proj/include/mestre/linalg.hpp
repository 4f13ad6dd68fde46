#ifndef MESTRE_LINALG_HPP
#define MESTRE_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "mestre/rat.hpp"

namespace mestre {

// Exact Gaussian elimination over a field; enough for the 3x3 inverses in
// quotient rings and the Sylvester-matrix test oracle.
template <Field F>
F det_gauss(std::vector<std::vector<F>> m) {
    const size_t n = m.size();
    F d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && is_zero(m[piv][c])) ++piv;
        if (piv == n) return F(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = F(-d);
        }
        d = F(d * m[c][c]);
        F inv = F(F(1) / m[c][c]);
        for (size_t r = c + 1; r < n; ++r) {
            if (is_zero(m[r][c])) continue;
            F f = F(m[r][c] * inv);
            for (size_t k = c; k < n; ++k) m[r][k] = F(m[r][k] - f * m[c][k]);
        }
    }
    return d;
}

template <Field F>
std::vector<F> solve_linear(std::vector<std::vector<F>> m, std::vector<F> b) {
    const size_t n = m.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && is_zero(m[piv][c])) ++piv;
        if (piv == n) throw std::invalid_argument("solve_linear: singular system");
        std::swap(m[piv], m[c]);
        std::swap(b[piv], b[c]);
        F inv = F(F(1) / m[c][c]);
        for (size_t k = c; k < n; ++k) m[c][k] = F(m[c][k] * inv);
        b[c] = F(b[c] * inv);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(m[r][c])) continue;
            F f = m[r][c];
            for (size_t k = c; k < n; ++k) m[r][k] = F(m[r][k] - f * m[c][k]);
            b[r] = F(b[r] - f * b[c]);
        }
    }
    return b;
}

}  // namespace mestre

#endif
