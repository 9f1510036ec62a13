#pragma once
// Semistandard tableaux counts: GL_n representation dimensions by direct enumeration.

#include <functional>
#include <vector>

namespace oracle {

// Number of semistandard Young tableaux of the given partition with entries 1..n.
inline long ssyt_count(const std::vector<int>& shape, int n)
{
    std::vector<std::vector<int>> t;
    for (int len : shape) t.emplace_back(len, 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    long count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            fill(k + 1);
        }
    };
    fill(0);
    return count;
}

// Monomials of degree m in n variables.
inline long monomials(int n, int m) { return ssyt_count({m}, n); }

}  // namespace oracle
