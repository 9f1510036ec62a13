#include "twloop/field.hpp"

namespace twl {

namespace {

std::vector<int> digits(int x, int p, int k)
{
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p)
{
    int x = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
    return x;
}

// product of two polynomials of degree < k modulo the monic poly (coefficients modulus[0..k-1], leading 1)
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& modulus, int p)
{
    const int k = static_cast<int>(a.size());
    std::vector<int> prod(2 * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int deg = 2 * k - 1; deg >= k; --deg) {
        int c = prod[deg];
        if (!c) continue;
        prod[deg] = 0;
        for (int i = 0; i < k; ++i) prod[deg - k + i] = ((prod[deg - k + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(k);
    return prod;
}

// trial division by every monic polynomial of degree <= k/2
bool is_irreducible(const std::vector<int>& modulus, int p, int k)
{
    for (int d = 1; d <= k / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int c = 0; c < count; ++c) {
            std::vector<int> g = digits(c, p, d);
            g.push_back(1);  // monic of degree d
            // long division of modulus(with leading 1) by g
            std::vector<int> r = modulus;
            r.push_back(1);
            for (int deg = k; deg >= d; --deg) {
                int lead = r[deg];
                if (!lead) continue;
                for (int i = 0; i <= d; ++i) r[deg - d + i] = ((r[deg - d + i] - lead * g[i]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (r[i]) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int q) : q_(q)
{
    if (q < 2 || q > 256) throw DomainError("field size must be a prime power between 2 and 256");
    p_ = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p_ = d;
            break;
        }
    k_ = 0;
    for (int x = q; x > 1; x /= p_) {
        if (x % p_) throw DomainError("field size " + std::to_string(q) + " is not a prime power");
        ++k_;
    }
    std::vector<int> modulus(k_, 0);
    if (k_ > 1) {
        bool found = false;
        for (int c = 0; c < q && !found; ++c) {
            modulus = digits(c, p_, k_);
            if (modulus[0] != 0 && is_irreducible(modulus, p_, k_)) found = true;
        }
        if (!found) throw DomainError("no irreducible polynomial found");
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a, p_, k_);
        std::vector<int> dn(k_);
        for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = undigits(dn, p_);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b, p_, k_);
            std::vector<int> s(k_);
            for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = undigits(s, p_);
            mul_[a * q + b] = k_ == 1 ? (a * b) % p_ : undigits(polymulmod(da, db, modulus, p_), p_);
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul(a, b) == 1) inv_[a] = b;
}

int Field::inv(int a) const
{
    if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

int Field::from_int(i64 v) const
{
    i64 r = v % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
}

}  // namespace twl
