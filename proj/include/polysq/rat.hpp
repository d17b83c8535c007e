#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace polysq {

// Arbitrary-precision rational, always stored reduced with positive denominator.
// Thin wrapper over GMP's mpq_class that canonicalizes on every construction,
// so the reduced-form invariant cannot be broken from outside.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d);

    // Exact value of a finite double (binary fraction). Throws on NaN/inf.
    static Rat from_double(double x);
    // Parses "p/q", "p", or a plain decimal like "-1.25" (exact).
    static Rat parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    double to_double() const { return v_.get_d(); }
    std::string str() const;  // "p/q", or "p" when q == 1

    bool is_integer() const { return v_.get_den() == 1; }
    // Checked conversion; throws if not an integer fitting in int64.
    std::int64_t to_int64() const;

    mpz_class floor() const;
    Rat frac() const { return *this - Rat(floor()); }  // in [0,1)
    Rat abs() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    int sign() const { return sgn(v_); }

  private:
    mpq_class v_;
};

// Dense rational matrix, row-major.
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivots;  // ascending pivot column indices
};

// Unique reduced row echelon form, exact arithmetic.
// Pivot selection: first row with a nonzero entry in column order.
RrefResult rref(const RatMatrix& m);

// Basis of { v : m v = 0 }; size == cols - rank. Exactly in the kernel.
std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& m);

// Best rational approximation of x with denominator <= qmax (qmax >= 1).
// Minimizes |x - p/q|; ties broken toward the smaller denominator, then the
// smaller (signed) numerator. Stern-Brocot mediant descent plus an exhaustive
// sweep over the final denominator band.
Rat best_rational_approx(double x, std::uint64_t qmax);
Rat best_rational_approx(const Rat& x, std::uint64_t qmax);

}  // namespace polysq
