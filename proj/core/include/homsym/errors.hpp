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

#include <stdexcept>
#include <string>

namespace homsym {

/// Violated precondition or malformed argument (wrong mode layout, a
/// non-unitary matrix handed to a builder, a probe outside the symmetry
/// class an estimator requires, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal numerical identity failed its tolerance. These checks guard
/// relations that hold exactly in the underlying algebra; tripping one means
/// a bug, not an unlucky input.
class IdentityError : public std::runtime_error {
public:
    explicit IdentityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace homsym
