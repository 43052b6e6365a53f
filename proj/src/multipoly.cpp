#include "recipchow/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "recipchow/errors.hpp"

namespace recipchow {

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const BigRat& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exps(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
    MultiPoly p(std::move(vars));
    if (index >= p.vars_.size()) throw input_error("variable index out of range");
    Exps e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, BigRat(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exps exps, const BigRat& c) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.vars_.size()) throw input_error("exponent vector length mismatch");
    p.add_term(exps, c);
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw input_error("unknown variable '" + name + "'");
}

void MultiPoly::add_term(const Exps& e, const BigRat& c) {
    if (e.size() != vars_.size()) throw input_error("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exps& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(std::size_t var) const {
    if (var >= vars_.size()) throw input_error("variable index out of range");
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = std::accumulate(e.begin(), e.end(), 0L);
        if (d < 0) d = t;
        else if (t != d) return false;
    }
    return true;
}

const std::pair<const Exps, BigRat>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw input_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void MultiPoly::check_same_vars(const MultiPoly& other) const {
    if (vars_ != other.vars_) throw input_error("incompatible variable tables");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    MultiPoly r(a.vars_);
    Exps e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const BigRat& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(vars_, BigRat(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
    if (var >= vars_.size()) throw input_error("variable index out of range");
    check_same_vars(value);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exps rest = e;
        int32_t k = rest[var];
        rest[var] = 0;
        MultiPoly t = monomial(vars_, rest, c);
        if (k > 0) t = t * value.pow(static_cast<unsigned>(k));
        r = r + t;
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const BigRat& value) const {
    if (var >= vars_.size()) throw input_error("variable index out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exps rest = e;
        int32_t k = rest[var];
        rest[var] = 0;
        r.add_term(rest, c * value.pow(static_cast<unsigned>(k)));
    }
    return r;
}

template <typename Scalar>
static Scalar evaluate_impl(const std::map<Exps, BigRat, GrlexLess>& terms,
                            const std::vector<Scalar>& point, std::size_t nvars) {
    if (point.size() != nvars) throw input_error("evaluation point dimension mismatch");
    Scalar total(0);
    for (const auto& [e, c] : terms) {
        Scalar t(0);
        t = t + Scalar(c);
        for (std::size_t i = 0; i < nvars; ++i)
            for (int32_t k = 0; k < e[i]; ++k) t = t * point[i];
        total = total + t;
    }
    return total;
}

BigRat MultiPoly::evaluate(const std::vector<BigRat>& point) const {
    return evaluate_impl<BigRat>(terms_, point, vars_.size());
}

GaussianRat MultiPoly::evaluate(const std::vector<GaussianRat>& point) const {
    if (point.size() != vars_.size()) throw input_error("evaluation point dimension mismatch");
    GaussianRat total;
    for (const auto& [e, c] : terms_) {
        GaussianRat t(BigRat(1), BigRat(0));
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int32_t k = 0; k < e[i]; ++k) t = t * point[i];
        total = total + GaussianRat(c, BigRat(0)) * t;
    }
    return total;
}

MultiPoly MultiPoly::divide_by_monomial(const Exps& mono) const {
    if (mono.size() != vars_.size()) throw input_error("exponent vector length mismatch");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exps q(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < mono[i]) throw input_error("term not divisible by monomial");
            q[i] = e[i] - mono[i];
        }
        r.terms_.emplace(q, c);
    }
    return r;
}

std::pair<int, int> MultiPoly::bidegree(const std::vector<std::size_t>& group_a,
                                        const std::vector<std::size_t>& group_b) const {
    int da = is_zero() ? -1 : 0, db = da;
    for (const auto& [e, c] : terms_) {
        int ta = 0, tb = 0;
        for (std::size_t i : group_a) ta += e.at(i);
        for (std::size_t i : group_b) tb += e.at(i);
        da = std::max(da, ta);
        db = std::max(db, tb);
    }
    return {da, db};
}

BigRat MultiPoly::content() const {
    if (terms_.empty()) return BigRat(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    mpq_class q(num_gcd, den_lcm);
    q.canonicalize();
    return BigRat(q);
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    BigRat c = content();
    if (leading_term().second.sign() < 0) c = -c;
    return scaled(c.inverse());
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        BigRat a = c.abs();
        bool has_vars = std::any_of(e.begin(), e.end(), [](int32_t k) { return k > 0; });
        if (!has_vars || !a.is_one()) os << a.str();
        bool printed = !has_vars || !a.is_one();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

} // namespace recipchow
