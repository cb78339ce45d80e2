#ifndef APOLAR_FIELD_HPP
#define APOLAR_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace apolar {

// Every coefficient in the library is an mpq_class.  Over the rationals it is
// kept in lowest terms (gmpxx canonicalizes after each operation); over Z/p it
// is an integer in [0, p).  The Field object performs the arithmetic so that a
// polynomial never needs to know which case it is in.
using Scalar = mpq_class;

class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    bool is_prime() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    // Maps an arbitrary rational into the field.  Throws std::domain_error if
    // the denominator is divisible by p.
    Scalar from(const Scalar& v) const;
    Scalar from_int(long v) const { return from(Scalar(v)); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    // Representative in (-p/2, p/2], used for display of prime-field values.
    Scalar symmetric(const Scalar& a) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

} // namespace apolar

#endif
