#pragma once

#include "twloop/common.hpp"

namespace twl {

IMat identity_matrix(int n);
IMat transpose(const IMat& a);
IMat mat_mul(const IMat& a, const IMat& b);
Vec mat_vec(const IMat& a, const Vec& v);
Vec vec_mat(const Vec& v, const IMat& a);

// Primitive integer vector spanning the one-dimensional kernel of a (a*v = 0),
// normalized so that its first nonzero entry is positive.
Vec kernel_vector(const IMat& a);

// Smith form of a k x l generator matrix G (rows generate a sublattice of Z^l):
// there are unimodular U, V with U*G*V = diag(d).  Only V is kept; it is what
// the quotient map Z^l -> Z^l / rowspan(G) needs.
struct SmithForm {
    int cols = 0;
    std::vector<i64> d;  // length cols; 0 means a free factor Z
    IMat v;              // cols x cols, unimodular
    IMat v_inv;

    // Invariant factors different from 1, i.e. the nontrivial cyclic factors.
    std::vector<i64> invariants() const;
    // Class of x in the quotient, one entry per nontrivial factor.
    Vec quotient_class(const Vec& x) const;
    bool contains(const Vec& x) const;
    // Order of the quotient, or 0 when infinite.
    i64 order() const;
};

SmithForm smith_form(const IMat& generators, int cols);

}  // namespace twl
