#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace mixlap {

using Int = mpz_class;

class division_by_zero_error : public std::domain_error {
public:
    division_by_zero_error() : std::domain_error("exact_div: division by zero") {}
};

class non_divisible_error : public std::domain_error {
public:
    non_divisible_error() : std::domain_error("exact_div: operands are not divisible") {}
};

/**
 * EisensteinInt: exact element a + b·ω of Z[ω], where ω = (1+√3i)/2 is a
 * primitive sixth root of unity satisfying ω² = ω − 1 and ω̄ = 1 − ω.
 *
 * Every entry of the Hermitian (quasi-)Laplacian constructions lies in this
 * ring: the constants in play are 0, ±1, ±ω and ±ω̄ = ±(1 − ω).
 * Components are arbitrary-precision integers; determinants of matrices with
 * unit-bounded entries overflow 64-bit integers already around n = 15.
 */
class EisensteinInt {
public:
    EisensteinInt() : a_(0), b_(0) {}
    EisensteinInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}
    EisensteinInt(long value) : a_(value), b_(0) {}  // rational integers embed as a + 0ω

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    static EisensteinInt omega() { return EisensteinInt(0, 1); }
    static EisensteinInt omega_bar() { return EisensteinInt(1, -1); }

    /// ω^k for any integer k (the six units of Z[ω] are exactly ω^0..ω^5).
    static EisensteinInt unit_power(long k) {
        static const long table[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
        long r = k % 6;
        if (r < 0) r += 6;
        return EisensteinInt(table[r][0], table[r][1]);
    }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_real() const { return b_ == 0; }
    bool is_unit() const { return norm() == 1; }

    bool operator==(const EisensteinInt& other) const {
        return a_ == other.a_ && b_ == other.b_;
    }
    bool operator!=(const EisensteinInt& other) const { return !(*this == other); }

    EisensteinInt operator+(const EisensteinInt& other) const {
        return EisensteinInt(a_ + other.a_, b_ + other.b_);
    }
    EisensteinInt operator-(const EisensteinInt& other) const {
        return EisensteinInt(a_ - other.a_, b_ - other.b_);
    }
    EisensteinInt operator-() const { return EisensteinInt(-a_, -b_); }

    /// Multiplication closes via the defining relation ω² = ω − 1.
    EisensteinInt operator*(const EisensteinInt& other) const {
        return EisensteinInt(a_ * other.a_ - b_ * other.b_,
                             a_ * other.b_ + b_ * other.a_ + b_ * other.b_);
    }

    EisensteinInt& operator+=(const EisensteinInt& other) {
        a_ += other.a_;
        b_ += other.b_;
        return *this;
    }
    EisensteinInt& operator-=(const EisensteinInt& other) {
        a_ -= other.a_;
        b_ -= other.b_;
        return *this;
    }
    EisensteinInt& operator*=(const EisensteinInt& other) {
        *this = *this * other;
        return *this;
    }

    /// Complex conjugate: conj(a + bω) = (a + b) − bω, since ω̄ = 1 − ω.
    EisensteinInt conj() const { return EisensteinInt(a_ + b_, -b_); }

    /// Squared complex modulus a² + ab + b²; nonnegative, zero iff zero.
    Int norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    /**
     * Exact quotient q with q·y = x, via x·conj(y) divided componentwise by
     * norm(y). Throws division_by_zero_error when y = 0 and
     * non_divisible_error when y does not divide x in Z[ω]. Fraction-free
     * elimination guarantees divisibility, so a failure there signals an
     * implementation bug and must surface loudly.
     */
    static EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& y) {
        if (y.is_zero()) throw division_by_zero_error();
        const Int ny = y.norm();
        const EisensteinInt p = x * y.conj();
        Int qa, ra, qb, rb;
        mpz_tdiv_qr(qa.get_mpz_t(), ra.get_mpz_t(), p.a_.get_mpz_t(), ny.get_mpz_t());
        mpz_tdiv_qr(qb.get_mpz_t(), rb.get_mpz_t(), p.b_.get_mpz_t(), ny.get_mpz_t());
        if (ra != 0 || rb != 0) throw non_divisible_error();
        return EisensteinInt(std::move(qa), std::move(qb));
    }

    /// x^e for e >= 0 by repeated squaring.
    static EisensteinInt pow(EisensteinInt base, unsigned long e) {
        EisensteinInt result(1);
        while (e > 0) {
            if (e & 1UL) result *= base;
            base *= base;
            e >>= 1UL;
        }
        return result;
    }

    /**
     * Lossy rendering a + b·(0.5 + (√3/2)i) in double precision, for reports
     * only — never used in computation. Faithful while both components stay
     * within the exact-integer range of a double (|·| < 2^53).
     */
    std::complex<double> to_complex() const {
        const double sqrt3_half = 0.86602540378443864676;
        const double ad = a_.get_d();
        const double bd = b_.get_d();
        return {ad + 0.5 * bd, bd * sqrt3_half};
    }

    /// Exact textual rendering like "0", "-2", "ω", "1-ω", "2+3ω".
    std::string to_string() const {
        if (a_ == 0 && b_ == 0) return "0";
        std::string out;
        if (a_ != 0 || b_ == 0) out += a_.get_str();
        if (b_ != 0) {
            if (b_ > 0 && !out.empty()) out += "+";
            if (b_ == -1) out += "-";
            else if (b_ != 1) out += b_.get_str();
            out += "ω";
        }
        return out;
    }

    /// Complex rendering "x±yi" with six decimal places.
    std::string to_complex_string() const {
        const std::complex<double> z = to_complex();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", z.real(), z.imag());
        return buf;
    }

private:
    Int a_;
    Int b_;
};

inline EisensteinInt operator*(long lhs, const EisensteinInt& rhs) {
    return EisensteinInt(lhs) * rhs;
}

}  // namespace mixlap
