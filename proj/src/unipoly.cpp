#include "recipchow/unipoly.hpp"

#include <sstream>

#include "recipchow/errors.hpp"
#include "recipchow/matrix.hpp"

namespace recipchow {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigRat& UniPoly::leading() const {
    if (c_.empty()) throw input_error("leading coefficient of zero polynomial");
    return c_.back();
}

BigRat UniPoly::eval(const BigRat& x) const {
    BigRat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<BigRat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<BigRat> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<BigRat> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<BigRat> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const BigRat& s) const {
    std::vector<BigRat> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
    return UniPoly(std::move(d));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw input_error("polynomial division by zero");
    std::vector<BigRat> rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<BigRat> quot(c_.size() - dd);
    BigRat lead_inv = divisor.leading().inverse();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        BigRat f = rem[i] * lead_inv;
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse());
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) return *this;
    UniPoly g = gcd(*this, derivative());
    UniPoly q = divmod(g).first;
    return q.scaled(q.leading().inverse());
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRat& c = c_[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        BigRat a = c.abs();
        if (i == 0 || !a.is_one()) os << a.str();
        if (i > 0) {
            if (!a.is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

int sign_at_plus_inf(const UniPoly& p) { return p.leading().sign(); }

int sign_at_minus_inf(const UniPoly& p) {
    int s = p.leading().sign();
    return (p.degree() % 2 == 0) ? s : -s;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int sturm_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw input_error("root count of zero polynomial");
    UniPoly q = p.squarefree_part();
    if (q.degree() <= 0) return 0;
    std::vector<UniPoly> seq{q, q.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        UniPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
        seq.push_back(-r);
    }
    std::vector<int> lo, hi;
    for (const UniPoly& s : seq) {
        if (s.is_zero()) continue;
        lo.push_back(sign_at_minus_inf(s));
        hi.push_back(sign_at_plus_inf(s));
    }
    return sign_changes(lo) - sign_changes(hi);
}

BigRat sylvester_resultant(const std::vector<BigRat>& f, const std::vector<BigRat>& g) {
    if (f.size() < 2 || g.size() < 2)
        throw input_error("resultant needs forms of degree at least one");
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    RatMatrix s(m + n, m + n);
    // Row i of the first block holds f shifted by i; columns are coefficients
    // of s^(m+n-1-j) t^j in the products.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s.at(i, i + j) = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s.at(n + i, i + j) = g[n - j];
    return det_exact(s);
}

} // namespace recipchow
