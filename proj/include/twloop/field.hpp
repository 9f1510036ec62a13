#pragma once

#include <string>
#include <vector>

#include "twloop/common.hpp"

namespace twl {

// GF(q) for a small prime power q, by lookup tables.  Elements are 0..q-1; for
// q = p^k they are base-p digit strings of polynomials modulo a fixed monic
// irreducible of degree k.
class Field {
public:
    explicit Field(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return k_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const;
    int from_int(i64 v) const;  // image of an integer under Z -> F_p -> F_q

private:
    int q_, p_, k_;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace twl
