#pragma once

#include <vector>

#include "twloop/series.hpp"

namespace twl {

// Row-reduced echelon span over GF(q).
class Subspace {
public:
    Subspace() = default;
    Subspace(const Field* f, int dim, std::vector<std::vector<int>> rows);

    int ambient() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const Field* field() const { return f_; }

    bool contains(const std::vector<int>& v) const;
    bool contains(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    int intersection_rank(const Subspace& o) const;
    // { x : sum_ij x_i B_ij y_j = 0 for all y in this }
    Subspace perp(const std::vector<std::vector<int>>& form) const;

    bool operator==(const Subspace& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }
    bool operator<(const Subspace& o) const { return rows_ < o.rows_; }

private:
    const Field* f_ = nullptr;
    int dim_ = 0;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
    void reduce();
};

// An O-lattice L in K'^n with u^N O^n in L in u^-N O^n, stored as the subspace
// L / u^N O^n of u^-N O^n / u^N O^n  (basis u^k e_a, k in [-N, N), index (k+N) n + a).
// This is the u-adic layering of a Hermite normal form.
class Lattice {
public:
    Lattice() = default;
    Lattice(const Field* f, int n, int box, Subspace s);

    // O-span of the columns of m (exact Laurent polynomial entries).  Throws
    // PrecisionError when the span does not fit the box.
    static Lattice from_columns(const SMat& m, int box);
    // span{u^p_a e_a}
    static Lattice diagonal(const Field* f, const Vec& exponents, int box);

    int n() const { return n_; }
    int box() const { return box_; }
    const Subspace& space() const { return s_; }
    const Field* field() const { return f_; }

    // [L : u^N O^n]
    int dim() const { return s_.rank(); }
    // [L : O^n] (may be negative)
    int volume() const { return dim() - box_ * n_; }
    int index(int k, int a) const { return (k + box_) * n_ + a; }

    bool contains(const Lattice& o) const;  // o in this
    bool operator==(const Lattice& o) const { return box_ == o.box_ && s_ == o.s_; }
    bool operator<(const Lattice& o) const { return s_ < o.s_; }
    int intersection_dim(const Lattice& o) const;
    Lattice shifted(int k) const;  // u^k L
    Lattice rebox(int box) const;
    bool u_stable() const;
    // hermitian dual for phi(e_i, e_j) = delta_{i, n+1-j}, u-bar = -u
    Lattice hermitian_dual() const;

private:
    const Field* f_ = nullptr;
    int n_ = 0, box_ = 0;
    Subspace s_;
};

}  // namespace twl
