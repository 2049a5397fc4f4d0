#pragma once

#include <functional>
#include <vector>

#include "jetbracket/rational.hpp"

namespace jetbracket {

/// Symmetric spatial multi-index in exponent-vector form: entry d counts
/// derivatives in direction x_{d+1}. Concatenation of multi-indices is
/// componentwise addition, so |a + b| = |a| + |b| by construction.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int dims) : exp_(dims, 0) {}
    explicit MultiIndex(std::vector<int> exponents) : exp_(std::move(exponents)) {}
    MultiIndex(std::initializer_list<int> exponents) : exp_(exponents) {}

    /// e_dir (0-based direction).
    static MultiIndex unit(int dims, int dir);

    int dims() const { return static_cast<int>(exp_.size()); }
    int order() const;
    int operator[](int d) const { return exp_[d]; }
    int& operator[](int d) { return exp_[d]; }
    const std::vector<int>& exponents() const { return exp_; }

    bool is_zero() const { return order() == 0; }

    MultiIndex operator+(const MultiIndex& o) const;
    /// Componentwise difference; requires o <= *this.
    MultiIndex operator-(const MultiIndex& o) const;
    /// o <= *this componentwise.
    bool contains(const MultiIndex& o) const;

    bool operator==(const MultiIndex& o) const { return exp_ == o.exp_; }
    bool operator!=(const MultiIndex& o) const { return exp_ != o.exp_; }

private:
    std::vector<int> exp_;
};

/// (|a|, exponents) ordering: total order used for canonical forms.
int cmp_graded_lex(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return cmp_graded_lex(a, b) < 0;
    }
};

/// All tau with tau <= sigma componentwise, in graded-lex order.
std::vector<MultiIndex> subindices(const MultiIndex& sigma);

/// Product of per-direction binomials: the coefficient of D_tau(a) D_{sigma-tau}
/// in the Leibniz expansion of D_sigma (a · ).
Integer choose(const MultiIndex& sigma, const MultiIndex& tau);

/// Visits every ordered splitting sigma = parts[0] + ... + parts[r-1] together
/// with its exact multinomial coefficient.
void for_each_composition(const MultiIndex& sigma, int r,
                          const std::function<void(const std::vector<MultiIndex>&, const Integer&)>& visit);

}  // namespace jetbracket
