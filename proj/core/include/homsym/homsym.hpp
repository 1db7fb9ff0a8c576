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

#include "homsym/detection.hpp"
#include "homsym/errors.hpp"
#include "homsym/fock.hpp"
#include "homsym/layout.hpp"
#include "homsym/linops.hpp"
#include "homsym/metrology.hpp"
#include "homsym/numeric.hpp"
#include "homsym/oracle.hpp"
#include "homsym/symmetry.hpp"
#include "homsym/tolerances.hpp"
#include "homsym/verify.hpp"
