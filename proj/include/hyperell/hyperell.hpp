// Copyright 2026 The hyperell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERELL_HYPERELL_HPP
#define HYPERELL_HYPERELL_HPP

#include "hyperell/elliptic.hpp"
#include "hyperell/errors.hpp"
#include "hyperell/formulae.hpp"
#include "hyperell/gamma.hpp"
#include "hyperell/hyperelliptic.hpp"
#include "hyperell/lauricella.hpp"
#include "hyperell/quadrature.hpp"
#include "hyperell/reduction.hpp"
#include "hyperell/report.hpp"
#include "hyperell/singular.hpp"
#include "hyperell/verify.hpp"

#endif  // HYPERELL_HYPERELL_HPP
