// Copyright 2026 The stabtest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "stabtest/caps.hpp"
#include "stabtest/cover.hpp"
#include "stabtest/errors.hpp"
#include "stabtest/f2.hpp"
#include "stabtest/harness.hpp"
#include "stabtest/io.hpp"
#include "stabtest/lagrangian.hpp"
#include "stabtest/pauli.hpp"
#include "stabtest/sampler.hpp"
#include "stabtest/spectra.hpp"
#include "stabtest/stabilizer.hpp"
#include "stabtest/state.hpp"
#include "stabtest/subspace.hpp"
#include "stabtest/symplectic.hpp"
#include "stabtest/transform.hpp"
#include "stabtest/weyl.hpp"
