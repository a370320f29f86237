#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace twc {

// Error type for precondition violations anywhere in the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ground field: the rationals, or a prime field F_p with p < 2^31.
struct Field {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    std::uint32_t p = 0;

    static Field rationals() { return Field{Kind::rational, 0}; }
    static Field prime(std::uint32_t p);

    bool operator==(const Field&) const = default;
    std::string str() const;                 // "Q" or "Fp:<p>"
    static Field parse(const std::string&);  // inverse of str()
};

// Exact field element. Rationals are GMP-backed, prime fields are
// 64-bit residues; no floating point anywhere.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(long long n, const Field& f);
    static Scalar of_fraction(long long num, long long den, const Field& f);
    // Accepts "n" or "n/d" with optional sign.
    static Scalar parse(const std::string& text, const Field& f);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;  // throws Error on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    Scalar(mpq_class q) : v_(std::move(q)) {}
    Scalar(std::uint64_t r, std::uint32_t p) : v_(r % p), p_(p) {}

    const mpq_class& q() const { return std::get<mpq_class>(v_); }
    std::uint64_t r() const { return std::get<std::uint64_t>(v_); }
    bool rational() const { return v_.index() == 0; }
    void check_same(const Scalar& o) const;

    std::variant<mpq_class, std::uint64_t> v_;
    std::uint32_t p_ = 0;  // prime when v_ holds a residue
};

}  // namespace twc
