/*
* Copyright 2026 the gpaley authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#ifndef GPALEY_COMMON_HPP
#define GPALEY_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpaley {

struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct AmbientTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};
struct InvalidSubfieldDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInSubfield : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OrderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MixedOrders : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConjugatePair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct VInBaseField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FieldTowersIncompatible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConjugateFactors : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotConjugateGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAVertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TooLargeForExhaustive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RadicalMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational with int64 parts; enough for main terms q * prod gcd/(d*d_i)
// at desk scale.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rational operator*(const Rational& o) const {
        Rational a(num, o.den), b(o.num, den);  // cross-reduce first
        return Rational(a.num * b.num, a.den * b.den);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num * o.den - o.num * den, den * o.den);
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// splitmix64 with the standard mixing constants; the single PRNG used for
// seeded v-set and grid generation so runs are reproducible across languages.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // unbiased-enough for desk scale ranges (bound << 2^64)
    uint64_t below(uint64_t bound) { return next() % bound; }
};

inline long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

inline long long powmod(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = static_cast<long long>((__int128)r * b % m);
        b = static_cast<long long>((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

}  // namespace gpaley

#endif
