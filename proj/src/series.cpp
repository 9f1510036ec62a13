#include "twloop/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>

namespace twl {

namespace {

i64 sat_add(i64 a, i64 b)
{
    if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
    return std::min(a + b, Series::kExact);
}

}  // namespace

Series::Series(const Field* f, i64 v, std::vector<int> coeffs, i64 ap) : f_(f), v_(v), c_(std::move(coeffs)), ap_(ap)
{
    if (!f_) throw DomainError("series needs a field");
    for (int& c : c_)
        if (c < 0 || c >= f_->q()) throw DomainError("series coefficient outside the field");
    normalize();
}

void Series::normalize()
{
    if (!exact() && high() > ap_) c_.resize(static_cast<std::size_t>(std::max<i64>(0, ap_ - v_)));
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        v_ = 0;
        return;
    }
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        v_ += static_cast<i64>(lead);
    }
}

int Series::coeff(i64 e) const
{
    if (e >= ap_) throw PrecisionError("coefficient of u^" + std::to_string(e) + " is beyond the working precision");
    if (e < v_ || e >= high()) return 0;
    return c_[static_cast<std::size_t>(e - v_)];
}

i64 Series::ord() const
{
    if (c_.empty()) throw PrecisionError("valuation undecidable: every coefficient below u^" + std::to_string(ap_) + " vanishes");
    return v_;
}

Series Series::operator+(const Series& o) const
{
    if (f_ != o.f_ && f_ && o.f_) throw DomainError("series over different fields");
    const Field* f = f_ ? f_ : o.f_;
    i64 ap = std::min(ap_, o.ap_);
    if (c_.empty() && o.c_.empty()) return Series(f, 0, {}, ap);
    i64 lo = c_.empty() ? o.v_ : (o.c_.empty() ? v_ : std::min(v_, o.v_));
    i64 hi = std::max(high(), o.high());
    if (ap < kExact) hi = std::min(hi, ap);
    if (hi <= lo) return Series(f, 0, {}, ap);
    std::vector<int> c(static_cast<std::size_t>(hi - lo), 0);
    for (i64 e = lo; e < hi; ++e) {
        int a = (e >= v_ && e < high()) ? c_[e - v_] : 0;
        int b = (e >= o.v_ && e < o.high()) ? o.c_[e - o.v_] : 0;
        c[e - lo] = f->add(a, b);
    }
    return Series(f, lo, std::move(c), ap);
}

Series Series::operator-() const
{
    std::vector<int> c = c_;
    for (int& x : c) x = f_->neg(x);
    return Series(f_, v_, std::move(c), ap_);
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const
{
    const Field* f = f_ ? f_ : o.f_;
    // an unknown-valued factor is at least O(u^ap)
    i64 va = c_.empty() ? ap_ : v_;
    i64 vb = o.c_.empty() ? o.ap_ : o.v_;
    i64 ap = std::min(sat_add(ap_, vb), sat_add(o.ap_, va));
    if (c_.empty() || o.c_.empty()) return Series(f, 0, {}, ap);
    std::vector<int> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = f->add(c[i + j], f->mul(c_[i], o.c_[j]));
    }
    return Series(f, v_ + o.v_, std::move(c), ap);
}

Series Series::scaled(int k) const
{
    std::vector<int> c = c_;
    for (int& x : c) x = f_->mul(x, k);
    return Series(f_, v_, std::move(c), ap_);
}

Series Series::shifted(i64 k) const { return Series(f_, v_ + k, c_, exact() ? kExact : ap_ + k); }

Series Series::inverse(i64 rel_prec) const
{
    i64 k = ord();
    i64 n = exact() ? rel_prec : ap_ - k;
    if (n <= 0) throw PrecisionError("no known terms of the inverse");
    // unit part g = c_0 + c_1 u + ..., solve g h = 1 term by term
    std::vector<int> h(static_cast<std::size_t>(n), 0);
    int c0inv = f_->inv(c_[0]);
    for (i64 i = 0; i < n; ++i) {
        int acc = i == 0 ? 1 : 0;
        for (i64 j = 1; j <= i && j < static_cast<i64>(c_.size()); ++j) acc = f_->sub(acc, f_->mul(c_[j], h[i - j]));
        h[i] = f_->mul(acc, c0inv);
    }
    return Series(f_, -k, std::move(h), -k + n);
}

Series Series::conj() const
{
    std::vector<int> c = c_;
    for (std::size_t j = 0; j < c.size(); ++j)
        if ((v_ + static_cast<i64>(j)) % 2 != 0) c[j] = f_->neg(c[j]);
    return Series(f_, v_, std::move(c), ap_);
}

Series Series::truncated(i64 ap) const { return Series(f_, v_, c_, std::min(ap, ap_)); }

bool Series::agrees(const Series& o) const
{
    i64 ap = std::min(ap_, o.ap_);
    Series d = (*this - o).truncated(ap);
    return d.is_zero_known();
}

std::string Series::to_string(char var) const
{
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j]) continue;
        if (!out.empty()) out += " + ";
        if (c_[j] != 1) out += std::to_string(c_[j]) + "*";
        out += std::string(1, var) + "^" + std::to_string(v_ + static_cast<i64>(j));
    }
    if (out.empty()) out = "0";
    if (!exact()) out += " + O(" + std::string(1, var) + "^" + std::to_string(ap_) + ")";
    return out;
}

Series parse_series(const Field* f, const std::string& text, i64 default_precision)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty series spec");
    static const std::regex term_re(
        "^([+-]?)(?:([0-9]+)\\*?)?(?:([ut])(?:\\^(-?[0-9]+))?)?$");
    static const std::regex big_o("^O\\(([ut])\\^(-?[0-9]+)\\)$");
    // split on + and - that start a term (not the sign of an exponent)
    std::vector<std::string> terms;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == '+' || c == '-') && i > start && depth == 0 && s[i - 1] != '^') {
            terms.push_back(s.substr(start, i - start));
            start = c == '+' ? i + 1 : i;
        }
    }
    terms.push_back(s.substr(start));
    Series acc = Series::zero(f, default_precision);
    for (const std::string& t0 : terms) {
        std::string t = t0;
        if (!t.empty() && t[0] == '+') t = t.substr(1);
        std::smatch m;
        if (std::regex_match(t, m, big_o)) {
            acc = acc.truncated(std::stoll(m[2].str()));
            continue;
        }
        if (t.empty() || !std::regex_match(t, m, term_re) || (!m[2].matched && !m[3].matched))
            throw DomainError("bad series term '" + t0 + "' in '" + text + "'");
        i64 coef = m[2].matched ? std::stoll(m[2].str()) : 1;
        if (m[1].str() == "-") coef = -coef;
        i64 e = 0;
        if (m[3].matched) e = m[4].matched ? std::stoll(m[4].str()) : 1;
        acc = acc + Series::monomial(f, f->from_int(coef), e);
    }
    return acc;
}

SMat smat_identity(const Field* f, int n)
{
    SMat m(n, std::vector<Series>(n, Series::zero(f)));
    for (int i = 0; i < n; ++i) m[i][i] = Series::constant(f, 1);
    return m;
}

SMat smat_mul(const SMat& a, const SMat& b)
{
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    const Field* f = a[0][0].field();
    SMat c(n, std::vector<Series>(m, Series::zero(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t) c[i][j] = c[i][j] + a[i][t] * b[t][j];
    return c;
}

Series smat_det(const SMat& a)
{
    const int n = static_cast<int>(a.size());
    const Field* f = a[0][0].field();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Series det = Series::zero(f);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Series term = Series::constant(f, 1);
        for (int i = 0; i < n; ++i) term = term * a[i][perm[i]];
        det = inversions % 2 ? det - term : det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

SMat smat_conj(const SMat& a)
{
    SMat c = a;
    for (auto& row : c)
        for (auto& x : row) x = x.conj();
    return c;
}

SMat smat_transpose(const SMat& a)
{
    SMat t(a[0].size(), std::vector<Series>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

bool smat_agrees(const SMat& a, const SMat& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!a[i][j].agrees(b[i][j])) return false;
    return true;
}

}  // namespace twl
