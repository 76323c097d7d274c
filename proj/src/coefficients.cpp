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

#include "schursym/coefficients.hpp"

namespace schursym {

ModP::ModP(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    if (modulus < 3 || !is_prime(modulus)) throw std::invalid_argument("F_p requires an odd prime p");
    std::int64_t v = value % static_cast<std::int64_t>(modulus);
    if (v < 0) v += modulus;
    value_ = static_cast<std::uint32_t>(v);
}

void ModP::adopt(const ModP& rhs) {
    if (modulus_ == 0) {
        modulus_ = rhs.modulus_;
    } else if (rhs.modulus_ != 0 && rhs.modulus_ != modulus_) {
        throw std::invalid_argument("mixing elements of different prime fields");
    }
}

ModP ModP::inverse() const {
    if (value_ == 0) throw IntegralityError("division by zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = value_;
    std::uint32_t e = modulus_ - 2;
    while (e) {
        if (e & 1u) result = result * base % modulus_;
        base = base * base % modulus_;
        e >>= 1u;
    }
    ModP out;
    out.modulus_ = modulus_;
    out.value_ = static_cast<std::uint32_t>(result);
    return out;
}

ModP& ModP::operator+=(const ModP& rhs) {
    adopt(rhs);
    if (modulus_ == 0) return *this;
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) + rhs.value_) % modulus_);
    return *this;
}

ModP& ModP::operator-=(const ModP& rhs) {
    adopt(rhs);
    if (modulus_ == 0) return *this;
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) + modulus_ - rhs.value_) % modulus_);
    return *this;
}

ModP& ModP::operator*=(const ModP& rhs) {
    adopt(rhs);
    if (modulus_ == 0) return *this;
    value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * rhs.value_ % modulus_);
    return *this;
}

ModP ModP::operator-() const {
    ModP out = *this;
    if (value_ != 0) out.value_ = modulus_ - value_;
    return out;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Integer exact_quotient(const Integer& a, const Integer& d) {
    if (sgn(d) == 0) throw IntegralityError("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
        throw IntegralityError("inexact division: " + a.get_str() + " / " + d.get_str());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

Rational exact_quotient(const Rational& a, const Rational& d) {
    if (sgn(d) == 0) throw IntegralityError("division by zero");
    return Rational(a / d);
}

ModP exact_quotient(const ModP& a, const ModP& d) { return a / d; }

Integer to_integer(const Rational& q) {
    if (q.get_den() != 1) throw IntegralityError("non-integral coefficient " + q.get_str());
    return q.get_num();
}

std::string to_string(const Integer& c) { return c.get_str(); }

std::string to_string(const Rational& c) {
    Rational canonical = c;
    canonical.canonicalize();
    return canonical.get_str();
}

std::string to_string(const ModP& c) { return std::to_string(c.value()); }

Integer factorial(unsigned k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

} // namespace schursym
