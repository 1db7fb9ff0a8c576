/**
 * Copyright 2026 The homsym authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "homsym/numeric.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace homsym {

namespace {

std::vector<Complex> compute_unit_roots(int n) {
    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        // Pin the quadrant values, the sums defining the residue projectors
        // must cancel to ~1e-12.
        if (4 * k % n == 0) {
            switch (4 * k / n) {
                case 0: roots[k] = {1.0, 0.0}; continue;
                case 1: roots[k] = {0.0, 1.0}; continue;
                case 2: roots[k] = {-1.0, 0.0}; continue;
                case 3: roots[k] = {0.0, -1.0}; continue;
                default: break;
            }
        }
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
        roots[k] = {std::cos(angle), std::sin(angle)};
    }
    return roots;
}

} // namespace

std::vector<Complex> unit_roots(int n) {
    if (n < 1)
        throw PreconditionError("unit_roots: n must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<Complex>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_unit_roots(n)).first;
    return it->second;
}

Complex unit_root(int n, long long k) {
    const auto roots = unit_roots(n);
    long long r = k % n;
    if (r < 0)
        r += n;
    return roots[static_cast<std::size_t>(r)];
}

double factorial_as_double(int n) {
    if (n < 0)
        throw PreconditionError("factorial of a negative number");
    if (n > 170)
        throw PreconditionError("factorial overflows double precision beyond 170!");
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

double sqrt_factorial(int n) { return std::sqrt(factorial_as_double(n)); }

Complex complex_pow(Complex base, int exponent) {
    if (exponent < 0)
        throw PreconditionError("complex_pow: negative exponent");
    Complex result{1.0, 0.0};
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

} // namespace homsym
