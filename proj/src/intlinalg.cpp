#include "twloop/intlinalg.hpp"

#include <numeric>

namespace twl {

IMat identity_matrix(int n)
{
    IMat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat transpose(const IMat& a)
{
    if (a.empty()) return {};
    IMat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IMat mat_mul(const IMat& a, const IMat& b)
{
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    IMat c(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            i64 x = a[i][t];
            if (!x) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += x * b[t][j];
        }
    return c;
}

Vec mat_vec(const IMat& a, const Vec& v)
{
    Vec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

Vec vec_mat(const Vec& v, const IMat& a)
{
    Vec out(a.empty() ? 0 : a[0].size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * a[i][j];
    return out;
}

Vec kernel_vector(const IMat& a)
{
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == Rational(0)) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = 0; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == Rational(0)) continue;
            Rational f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (cols - r != 1) throw DomainError("matrix does not have corank one");

    int free_col = 0;
    {
        std::vector<bool> is_pivot(cols, false);
        for (int c : pivot_col) is_pivot[c] = true;
        while (is_pivot[free_col]) ++free_col;
    }
    std::vector<Rational> x(cols, Rational(0));
    x[free_col] = 1;
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = -m[i][free_col];

    i64 den = 1;
    for (const auto& q : x) den = std::lcm(den, q.denominator());
    Vec v(cols);
    i64 g = 0;
    for (int j = 0; j < cols; ++j) {
        v[j] = (x[j] * den).numerator();
        g = std::gcd(g, v[j] < 0 ? -v[j] : v[j]);
    }
    for (auto& e : v) e /= g;
    for (i64 e : v) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& f : v) f = -f;
        break;
    }
    return v;
}

namespace {

void col_op(IMat& d, IMat& v, IMat& vinv, int dst, int src, i64 f)
{
    // column dst += f * column src, tracked in v; vinv gets the inverse row op
    for (auto& row : d) row[dst] += f * row[src];
    for (auto& row : v) row[dst] += f * row[src];
    for (std::size_t j = 0; j < vinv[src].size(); ++j) vinv[src][j] -= f * vinv[dst][j];
}

void col_swap(IMat& d, IMat& v, IMat& vinv, int a, int b)
{
    for (auto& row : d) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
    std::swap(vinv[a], vinv[b]);
}

void col_neg(IMat& d, IMat& v, IMat& vinv, int a)
{
    for (auto& row : d) row[a] = -row[a];
    for (auto& row : v) row[a] = -row[a];
    for (auto& e : vinv[a]) e = -e;
}

}  // namespace

SmithForm smith_form(const IMat& generators, int cols)
{
    IMat d = generators;
    for (auto& row : d)
        if (static_cast<int>(row.size()) != cols) throw DomainError("generator length mismatch");
    const int rows = static_cast<int>(d.size());
    IMat v = identity_matrix(cols), vinv = identity_matrix(cols);

    for (int t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            int pr = -1, pc = -1;
            i64 best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    i64 a = d[i][j] < 0 ? -d[i][j] : d[i][j];
                    if (a && (best == 0 || a < best)) best = a, pr = i, pc = j;
                }
            if (pr < 0) goto done;
            std::swap(d[pr], d[t]);
            if (pc != t) col_swap(d, v, vinv, pc, t);

            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                i64 q = d[i][t] / d[t][t];
                if (q)
                    for (int j = 0; j < cols; ++j) d[i][j] -= q * d[t][j];
                if (d[i][t]) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                i64 q = d[t][j] / d[t][t];
                if (q) col_op(d, v, vinv, j, t, -q);
                if (d[t][j]) clean = false;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (d[i][j] % d[t][t]) { bad = i; break; }
            if (bad < 0) break;
            for (int j = 0; j < cols; ++j) d[t][j] += d[bad][j];
        }
        if (d[t][t] < 0) col_neg(d, v, vinv, t);
    }
done:
    SmithForm s;
    s.cols = cols;
    s.d.assign(cols, 0);
    for (int t = 0; t < std::min(rows, cols); ++t) s.d[t] = d[t][t];
    s.v = v;
    s.v_inv = vinv;
    return s;
}

std::vector<i64> SmithForm::invariants() const
{
    std::vector<i64> out;
    for (i64 x : d)
        if (x != 1) out.push_back(x);
    return out;
}

Vec SmithForm::quotient_class(const Vec& x) const
{
    Vec y = vec_mat(x, v);
    Vec out;
    for (int i = 0; i < cols; ++i) {
        if (d[i] == 1) continue;
        if (d[i] == 0) {
            out.push_back(y[i]);
        } else {
            i64 r = y[i] % d[i];
            if (r < 0) r += d[i];
            out.push_back(r);
        }
    }
    return out;
}

bool SmithForm::contains(const Vec& x) const
{
    Vec y = vec_mat(x, v);
    for (int i = 0; i < cols; ++i) {
        if (d[i] == 0 && y[i] != 0) return false;
        if (d[i] > 1 && y[i] % d[i] != 0) return false;
    }
    return true;
}

i64 SmithForm::order() const
{
    i64 o = 1;
    for (i64 x : d) {
        if (x == 0) return 0;
        o *= x;
    }
    return o;
}

}  // namespace twl
