#include "recipchow/rational.hpp"

#include <ostream>

namespace recipchow {

BigRat BigRat::parse(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw input_error("malformed rational literal: '" + s + "'");
    if (q.get_den() == 0) throw input_error("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return BigRat(q);
}

BigRat BigRat::pow(unsigned e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return BigRat(r);
}

bool BigRat::square_root(BigRat* root) const {
    if (sign() < 0) return false;
    if (!mpz_perfect_square_p(v_.get_num_mpz_t()) || !mpz_perfect_square_p(v_.get_den_mpz_t()))
        return false;
    mpq_class r;
    mpz_sqrt(r.get_num_mpz_t(), v_.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), v_.get_den_mpz_t());
    if (root) *root = BigRat(r);
    return true;
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.v_; }

std::string GaussianRat::str() const {
    if (im.is_zero()) return re.str();
    std::string s = re.is_zero() ? "" : re.str();
    if (im.sign() > 0 && !s.empty()) s += "+";
    s += im.str() + "*i";
    return s;
}

} // namespace recipchow
