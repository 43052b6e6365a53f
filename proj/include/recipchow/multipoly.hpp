#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recipchow/rational.hpp"

namespace recipchow {

using Exps = std::vector<int32_t>;

/// Graded lexicographic order on exponent vectors: compare total degree
/// first, then the exponent vectors entrywise. Serialization walks terms
/// from the leading one down, so this order is part of the output contract.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

/// Sparse multivariate polynomial over a named variable table, with exact
/// rational coefficients. Stored coefficients are never zero.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(std::vector<std::string> vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(std::vector<std::string> vars, const BigRat& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
    static MultiPoly monomial(std::vector<std::string> vars, Exps exps, const BigRat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, BigRat, GrlexLess>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::size_t var_index(const std::string& name) const; // throws if unknown

    void add_term(const Exps& e, const BigRat& c);

    int total_degree() const; // -1 for the zero polynomial
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;

    /// Leading term in graded-lex order.
    const std::pair<const Exps, BigRat>& leading_term() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const BigRat& c) const;
    MultiPoly pow(unsigned e) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
    MultiPoly substitute(std::size_t var, const BigRat& value) const;

    BigRat evaluate(const std::vector<BigRat>& point) const;
    GaussianRat evaluate(const std::vector<GaussianRat>& point) const;

    /// Divides every term by the given monomial; throws input_error if some
    /// term is not divisible.
    MultiPoly divide_by_monomial(const Exps& mono) const;

    /// (max degree in the first variable group, max degree in the second).
    std::pair<int, int> bidegree(const std::vector<std::size_t>& group_a,
                                 const std::vector<std::size_t>& group_b) const;

    /// Positive rational c such that (1/c) * poly has coprime integer
    /// coefficients. Zero polynomial has content 0.
    BigRat content() const;

    /// Content 1 and positive leading coefficient.
    MultiPoly normalized() const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exps, BigRat, GrlexLess> terms_;

    void check_same_vars(const MultiPoly& other) const;
};

} // namespace recipchow
