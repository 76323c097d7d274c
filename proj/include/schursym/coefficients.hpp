/*
   Copyright 2026 The schursym Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SCHURSYM_COEFFICIENTS_HPP
#define SCHURSYM_COEFFICIENTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace schursym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exact division leaves a remainder. Callers treat it as a
/// falsified integrality statement, never as a recoverable condition.
class IntegralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element of the prime field F_p for an odd prime p fixed at construction.
/// A default-constructed value is the zero of an unspecified field and adopts
/// the modulus of the first operand it meets.
class ModP {
public:
    ModP() = default;
    ModP(std::int64_t value, std::uint32_t modulus);

    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t value() const noexcept { return value_; }

    ModP inverse() const;

    ModP& operator+=(const ModP& rhs);
    ModP& operator-=(const ModP& rhs);
    ModP& operator*=(const ModP& rhs);
    ModP& operator/=(const ModP& rhs) { return *this *= rhs.inverse(); }
    ModP operator-() const;

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend bool operator==(const ModP& a, const ModP& b) { return a.value_ == b.value_; }

private:
    void adopt(const ModP& rhs);

    std::uint32_t value_ = 0;
    std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t p);

inline bool is_zero(const Integer& c) { return sgn(c) == 0; }
inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const ModP& c) { return c.value() == 0; }

/// a / d, throwing IntegralityError when d does not divide a in the ring.
Integer exact_quotient(const Integer& a, const Integer& d);
Rational exact_quotient(const Rational& a, const Rational& d);
ModP exact_quotient(const ModP& a, const ModP& d);

/// Integer-valued rational to Integer; throws IntegralityError otherwise.
Integer to_integer(const Rational& q);

std::string to_string(const Integer& c);
/// "p/q", or "p" for integral values.
std::string to_string(const Rational& c);
std::string to_string(const ModP& c);

Integer factorial(unsigned k);

} // namespace schursym

#endif // SCHURSYM_COEFFICIENTS_HPP
