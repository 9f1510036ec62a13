#pragma once

#include <limits>
#include <string>
#include <vector>

#include "twloop/field.hpp"

namespace twl {

// sum_j c_j u^(v+j) + O(u^ap) over GF(q).  Coefficients past the stored ones
// and below ap are zero.  ap = kExact marks a Laurent polynomial.
class Series {
public:
    static constexpr i64 kExact = std::numeric_limits<i64>::max() / 4;

    Series() = default;
    Series(const Field* f, i64 v, std::vector<int> coeffs, i64 ap = kExact);
    static Series zero(const Field* f, i64 ap = kExact) { return Series(f, 0, {}, ap); }
    static Series constant(const Field* f, int c, i64 ap = kExact) { return Series(f, 0, {c}, ap); }
    static Series monomial(const Field* f, int c, i64 e, i64 ap = kExact) { return Series(f, e, {c}, ap); }

    const Field* field() const { return f_; }
    i64 precision() const { return ap_; }
    bool exact() const { return ap_ >= kExact; }
    // coefficient of u^e; throws PrecisionError when e >= precision
    int coeff(i64 e) const;
    // lowest and one-past-highest stored exponent with a nonzero coefficient
    i64 low() const { return v_; }
    i64 high() const { return v_ + static_cast<i64>(c_.size()); }
    bool is_zero_known() const { return c_.empty(); }  // zero up to the precision

    // valuation; PrecisionError when every known coefficient vanishes
    i64 ord() const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series scaled(int c) const;
    Series shifted(i64 k) const;  // u^k * f
    // inverse of a unit; for exact input rel_prec sets the number of known terms
    Series inverse(i64 rel_prec = 16) const;
    // u -> -u
    Series conj() const;
    Series truncated(i64 ap) const;
    // equal up to the smaller of the two precisions
    bool agrees(const Series& o) const;

    std::string to_string(char var = 'u') const;

private:
    const Field* f_ = nullptr;
    i64 v_ = 0;
    std::vector<int> c_;
    i64 ap_ = kExact;
    void normalize();
};

// "u^-1 + 2*u^0 - u^2 + O(u^5)"; the variable may be u or t.
Series parse_series(const Field* f, const std::string& text, i64 default_precision = Series::kExact);

using SMat = std::vector<std::vector<Series>>;
SMat smat_identity(const Field* f, int n);
SMat smat_mul(const SMat& a, const SMat& b);
Series smat_det(const SMat& a);
SMat smat_conj(const SMat& a);
SMat smat_transpose(const SMat& a);
bool smat_agrees(const SMat& a, const SMat& b);

}  // namespace twl
