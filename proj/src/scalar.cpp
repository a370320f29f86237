#include "twc/scalar.hpp"

namespace twc {

Field Field::prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31)) throw Error("field prime must satisfy 2 <= p < 2^31");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error("field modulus " + std::to_string(p) + " is not prime");
    return Field{Kind::prime, p};
}

std::string Field::str() const {
    return kind == Kind::rational ? "Q" : "Fp:" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) return prime(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
    throw Error("bad field spec '" + s + "' (expected Q or Fp:<prime>)");
}

Scalar Scalar::zero(const Field& f) {
    return f.kind == Field::Kind::rational ? Scalar(mpq_class(0)) : Scalar(0, f.p);
}

Scalar Scalar::one(const Field& f) {
    return f.kind == Field::Kind::rational ? Scalar(mpq_class(1)) : Scalar(1, f.p);
}

Scalar Scalar::of_int(long long n, const Field& f) {
    if (f.kind == Field::Kind::rational) {
        mpq_class q;
        q = mpz_class(std::to_string(n));
        return Scalar(q);
    }
    long long m = n % static_cast<long long>(f.p);
    if (m < 0) m += f.p;
    return Scalar(static_cast<std::uint64_t>(m), f.p);
}

Scalar Scalar::of_fraction(long long num, long long den, const Field& f) {
    if (den == 0) throw Error("zero denominator");
    return of_int(num, f) / of_int(den, f);
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return of_int(std::stoll(text), f);
        return of_fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)), f);
    } catch (const std::invalid_argument&) {
        throw Error("bad scalar literal '" + text + "'");
    } catch (const std::out_of_range&) {
        throw Error("scalar literal out of range '" + text + "'");
    }
}

Field Scalar::field() const {
    return rational() ? Field::rationals() : Field{Field::Kind::prime, p_};
}

bool Scalar::is_zero() const { return rational() ? q() == 0 : r() == 0; }
bool Scalar::is_one() const { return rational() ? q() == 1 : r() == 1; }

void Scalar::check_same(const Scalar& o) const {
    if (v_.index() != o.v_.index() || p_ != o.p_) throw Error("mixed-field scalar arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (rational()) return Scalar(mpq_class(q() + o.q()));
    return Scalar((r() + o.r()) % p_, p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    if (rational()) return Scalar(mpq_class(q() - o.q()));
    return Scalar((r() + p_ - o.r()) % p_, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (rational()) return Scalar(mpq_class(q() * o.q()));
    return Scalar((r() * o.r()) % p_, p_);  // p < 2^31, no overflow in u64
}

Scalar Scalar::operator-() const {
    if (rational()) return Scalar(mpq_class(-q()));
    return Scalar(r() == 0 ? 0 : p_ - r(), p_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("division by zero");
    if (rational()) return Scalar(mpq_class(1 / q()));
    // extended Euclid; invariant t0*a == r0, t1*a == r1 (mod p)
    long long m = static_cast<long long>(p_);
    long long r0 = m, r1 = static_cast<long long>(r()), t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long qt = r0 / r1;
        r0 -= qt * r1;
        std::swap(r0, r1);
        t0 -= qt * t1;
        std::swap(t0, t1);
    }
    long long x = t0 % m;
    if (x < 0) x += m;
    return Scalar(static_cast<std::uint64_t>(x), p_);
}

bool Scalar::operator==(const Scalar& o) const {
    if (v_.index() != o.v_.index() || p_ != o.p_) return false;
    return rational() ? q() == o.q() : r() == o.r();
}

std::string Scalar::str() const {
    if (rational()) return q().get_str();
    return std::to_string(r());
}

}  // namespace twc
