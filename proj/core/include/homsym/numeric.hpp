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

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "homsym/layout.hpp"

namespace homsym {

/// Neumaier-compensated accumulator. Reductions over amplitude maps use it so
/// that results are independent of summation grouping down to ~1e-16.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum {
public:
    void add(const Complex& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

/// n-th roots of unity, omega^k for k = 0..n-1. Quadrant values (+-1, +-i)
/// are exact; the rest come from cos/sin of the reduced angle.
std::vector<Complex> unit_roots(int n);

/// omega^k with k reduced modulo n.
Complex unit_root(int n, long long k);

double factorial_as_double(int n);
double sqrt_factorial(int n);

/// Integer power of a complex scalar by repeated squaring.
Complex complex_pow(Complex base, int exponent);

} // namespace homsym
