#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "germ2d/error.hpp"

namespace germ2d {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string rat_str(const Rat& q);

// Element of Q(i).  cpp_rational keeps lowest terms / positive denominator.
struct GaussRat {
    Rat re, im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }
    GaussRat conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat inverse() const {
        Rat n = norm2();
        if (n == 0) fail(ErrorCode::DivisionByZero, "division by zero in Q(i)");
        return {re / n, -im / n};
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }

    std::string str() const;
};

// Exact field element: Gaussian rational, or a residue modulo the r-th
// cyclotomic polynomial with Gaussian-rational coordinates.  Orders are kept
// with 4 ∤ r so that Phi_r stays irreducible over Q(i); zeta(4m) with m odd is
// rewritten into the order-m extension, zeta(8k) is rejected.
class Scalar {
public:
    Scalar() : order_(1), c_(1) {}
    Scalar(long v) : order_(1), c_(1) { c_[0] = GaussRat(Rat(v)); }
    Scalar(const Int& v) : order_(1), c_(1) { c_[0] = GaussRat(Rat(v)); }
    Scalar(const Rat& v) : order_(1), c_(1) { c_[0] = GaussRat(v); }
    Scalar(const GaussRat& v) : order_(1), c_(1) { c_[0] = v; }

    static Scalar imaginary_unit() { return Scalar(GaussRat(Rat(0), Rat(1))); }
    static Scalar gauss(const Rat& re, const Rat& im) { return Scalar(GaussRat(re, im)); }
    static Scalar zeta(unsigned r);

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }
    bool is_gaussian() const { return order_ == 1; }
    bool is_rational() const { return order_ == 1 && c_[0].is_rational(); }

    // order-1 accessors
    const GaussRat& gaussian() const;
    Rat rational() const;

    unsigned cyclo_order() const { return order_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(long e) const;
    Scalar conj() const;

    // |x|^2 as an exact rational, when it lies in Q.
    std::optional<Rat> abs2() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    // promote both operands into a common representation
    static void align(Scalar& a, Scalar& b);
    void reduce_and_demote();

    unsigned order_;            // 1 for Q(i), else r with 4 ∤ r
    std::vector<GaussRat> c_;   // length 1, or phi(r), residue mod Phi_r
};

enum class Cmp { Less, Equal, Greater };

// |lambda| against 1; nullopt when the comparison is not decidable in-field.
std::optional<Cmp> modulus_compare(const Scalar& lambda);

// least r with lambda^r = 1, if lambda is a root of unity
std::optional<unsigned> root_of_unity_order(const Scalar& lambda);

// exact decision of lambda^n == d
bool power_equals(const Scalar& lambda, unsigned n, const Int& d);

// exact k-th root in the working field, when one exists and we can find it
std::optional<Scalar> nth_root(const Scalar& a, unsigned k);

unsigned euler_phi(unsigned n);
const std::vector<Int>& cyclotomic_poly(unsigned n); // dense, monic, degree phi(n)

} // namespace germ2d
