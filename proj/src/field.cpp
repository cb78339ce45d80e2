#include "apolar/field.hpp"

#include <stdexcept>

namespace apolar {

namespace {

bool is_probable_prime(std::uint32_t p)
{
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_probable_prime(p))
        throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    // Products of two residues are formed in mpz, so any 32-bit prime is fine.
    return Field(p);
}

std::string Field::name() const
{
    return p_ == 0 ? "QQ" : "ZZ/" + std::to_string(p_);
}

Scalar Field::from(const Scalar& v) const
{
    if (p_ == 0) return v;
    mpz_class pm(p_);
    mpz_class num = v.get_num() % pm;
    mpz_class den = v.get_den() % pm;
    if (den == 0)
        throw std::domain_error("Field::from: denominator vanishes modulo " + std::to_string(p_));
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
    mpz_class r = (num * dinv) % pm;
    if (r < 0) r += pm;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0) return a + b;
    mpz_class r = a.get_num() + b.get_num();
    if (r >= p_) r -= p_;
    return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0) return a - b;
    mpz_class r = a.get_num() - b.get_num();
    if (r < 0) r += p_;
    return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % p_;
    return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const
{
    if (p_ == 0) return -a;
    if (a == 0) return a;
    return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const
{
    if (a == 0) throw std::domain_error("Field::inv: division by zero");
    if (p_ == 0) return Scalar(1) / a;
    mpz_class r;
    mpz_class pm(p_);
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pm.get_mpz_t());
    return Scalar(r);
}

Scalar Field::symmetric(const Scalar& a) const
{
    if (p_ == 0) return a;
    if (a.get_num() * 2 > p_) return Scalar(a.get_num() - p_);
    return a;
}

} // namespace apolar
