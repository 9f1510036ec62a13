#include "twloop/lattice.hpp"

#include <algorithm>

namespace twl {

Subspace::Subspace(const Field* f, int dim, std::vector<std::vector<int>> rows) : f_(f), dim_(dim), rows_(std::move(rows))
{
    for (const auto& r : rows_)
        if (static_cast<int>(r.size()) != dim_) throw DomainError("subspace row has the wrong length");
    reduce();
}

void Subspace::reduce()
{
    auto& m = rows_;
    pivots_.clear();
    int r = 0;
    for (int c = 0; c < dim_ && r < static_cast<int>(m.size()); ++c) {
        int p = r;
        while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
        if (p == static_cast<int>(m.size())) continue;
        std::swap(m[p], m[r]);
        int inv = f_->inv(m[r][c]);
        for (int& x : m[r]) x = f_->mul(x, inv);
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || m[i][c] == 0) continue;
            int k = m[i][c];
            for (int j = 0; j < dim_; ++j) m[i][j] = f_->sub(m[i][j], f_->mul(k, m[r][j]));
        }
        pivots_.push_back(c);
        ++r;
    }
    m.resize(r);
}

bool Subspace::contains(const std::vector<int>& v) const
{
    std::vector<int> x = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int k = x[pivots_[i]];
        if (!k) continue;
        for (int j = 0; j < dim_; ++j) x[j] = f_->sub(x[j], f_->mul(k, rows_[i][j]));
    }
    return std::all_of(x.begin(), x.end(), [](int c) { return c == 0; });
}

bool Subspace::contains(const Subspace& o) const
{
    for (const auto& r : o.rows_)
        if (!contains(r)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const
{
    auto rows = rows_;
    rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
    return Subspace(f_, dim_, std::move(rows));
}

int Subspace::intersection_rank(const Subspace& o) const { return rank() + o.rank() - sum(o).rank(); }

Subspace Subspace::perp(const std::vector<std::vector<int>>& form) const
{
    // x B y = 0 for all rows y: linear conditions on x given by the vectors B y
    std::vector<std::vector<int>> conds;
    for (const auto& y : rows_) {
        std::vector<int> c(dim_, 0);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (form[i][j] && y[j]) c[i] = f_->add(c[i], f_->mul(form[i][j], y[j]));
        conds.push_back(std::move(c));
    }
    Subspace cs(f_, dim_, conds);
    // null space of the condition matrix (rows in RREF)
    std::vector<std::vector<int>> basis;
    std::vector<bool> is_pivot(dim_, false);
    for (int p : cs.pivots_) is_pivot[p] = true;
    for (int free = 0; free < dim_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> x(dim_, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < cs.rows_.size(); ++i) x[cs.pivots_[i]] = f_->neg(cs.rows_[i][free]);
        basis.push_back(std::move(x));
    }
    return Subspace(f_, dim_, std::move(basis));
}

Lattice::Lattice(const Field* f, int n, int box, Subspace s) : f_(f), n_(n), box_(box), s_(std::move(s)) {}

Lattice Lattice::from_columns(const SMat& m, int box)
{
    const int n = static_cast<int>(m.size());
    const Field* f = m[0][0].field();
    const int dim = 2 * box * n;
    std::vector<std::vector<int>> rows;
    for (int col = 0; col < n; ++col) {
        i64 lo = Series::kExact;
        for (int a = 0; a < n; ++a) {
            const Series& x = m[a][col];
            if (!x.exact() && x.precision() < box)
                throw PrecisionError("lattice generator known only below u^" + std::to_string(x.precision()));
            if (!x.is_zero_known()) lo = std::min(lo, x.low());
        }
        if (lo == Series::kExact) continue;
        if (lo < -box) throw PrecisionError("lattice does not fit in the box u^-" + std::to_string(box));
        for (i64 shift = 0; lo + shift < box; ++shift) {
            std::vector<int> v(dim, 0);
            for (int a = 0; a < n; ++a) {
                const Series& x = m[a][col];
                for (i64 e = x.low(); e < x.high(); ++e) {
                    i64 k = e + shift;
                    if (k < box) v[(k + box) * n + a] = x.coeff(e);
                }
            }
            rows.push_back(std::move(v));
        }
    }
    Lattice out(f, n, box, Subspace(f, dim, std::move(rows)));
    // certify u^box O^n in L through the volume
    i64 ord_det = smat_det(m).ord();
    if (out.dim() != box * n - ord_det)
        throw PrecisionError("box u^" + std::to_string(box) + " too small to contain the lattice's u^N-multiple");
    return out;
}

Lattice Lattice::diagonal(const Field* f, const Vec& exponents, int box)
{
    const int n = static_cast<int>(exponents.size());
    SMat m(n, std::vector<Series>(n, Series::zero(f)));
    for (int a = 0; a < n; ++a) m[a][a] = Series::monomial(f, 1, exponents[a]);
    return from_columns(m, box);
}

bool Lattice::contains(const Lattice& o) const
{
    if (o.box_ != box_ || o.n_ != n_) throw DomainError("lattices live in different boxes");
    return s_.contains(o.s_);
}

int Lattice::intersection_dim(const Lattice& o) const
{
    if (o.box_ != box_ || o.n_ != n_) throw DomainError("lattices live in different boxes");
    return s_.intersection_rank(o.s_);
}

Lattice Lattice::shifted(int k) const
{
    const int dim = 2 * box_ * n_;
    std::vector<std::vector<int>> rows;
    for (const auto& r : s_.rows()) {
        std::vector<int> v(dim, 0);
        for (int i = 0; i < dim; ++i) {
            if (!r[i]) continue;
            int e = i / n_ - box_ + k, a = i % n_;
            if (e < -box_) throw PrecisionError("shifted lattice leaves the box");
            if (e < box_) v[(e + box_) * n_ + a] = r[i];
        }
        rows.push_back(std::move(v));
    }
    // u^k (u^N O) = u^(N+k) O; for k < 0 the layers u^(N+k)..u^(N-1) must be added
    for (int e = box_ + k; e < box_; ++e)
        for (int a = 0; a < n_; ++a) {
            std::vector<int> v(dim, 0);
            v[(e + box_) * n_ + a] = 1;
            rows.push_back(std::move(v));
        }
    return Lattice(f_, n_, box_, Subspace(f_, dim, std::move(rows)));
}

Lattice Lattice::rebox(int box) const
{
    const int dim = 2 * box * n_;
    std::vector<std::vector<int>> rows;
    for (const auto& r : s_.rows()) {
        std::vector<int> v(dim, 0);
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            if (!r[i]) continue;
            int e = i / n_ - box_, a = i % n_;
            if (e < -box) throw PrecisionError("lattice does not fit the smaller box");
            if (e < box) v[(e + box) * n_ + a] = r[i];
        }
        rows.push_back(std::move(v));
    }
    for (int e = box_; e < box; ++e)
        for (int a = 0; a < n_; ++a) {
            std::vector<int> v(dim, 0);
            v[(e + box) * n_ + a] = 1;
            rows.push_back(std::move(v));
        }
    Lattice out(f_, n_, box, Subspace(f_, dim, std::move(rows)));
    if (box < box_ && out.volume() != volume()) throw PrecisionError("lattice does not contain u^N O^n for the smaller box");
    return out;
}

bool Lattice::u_stable() const
{
    Lattice s = shifted(1);
    return contains(s);
}

Lattice Lattice::hermitian_dual() const
{
    // B(u^i e_a, u^j e_b) = (-1)^j when b = n-1-a and i + j = -1
    const int dim = 2 * box_ * n_;
    std::vector<std::vector<int>> form(dim, std::vector<int>(dim, 0));
    for (int i = -box_; i < box_; ++i) {
        int j = -1 - i;
        if (j < -box_ || j >= box_) continue;
        for (int a = 0; a < n_; ++a) {
            int b = n_ - 1 - a;
            form[index(i, a)][index(j, b)] = (j % 2 == 0) ? 1 : f_->neg(1);
        }
    }
    return Lattice(f_, n_, box_, s_.perp(form));
}

}  // namespace twl
