// Copyright 2026 The fuzclose authors
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
//
// Umbrella header: the whole library.

#pragma once

#include "fuzclose/closure.hpp"
#include "fuzclose/comorphism.hpp"
#include "fuzclose/error.hpp"
#include "fuzclose/examples.hpp"
#include "fuzclose/fuzzy.hpp"
#include "fuzclose/generate.hpp"
#include "fuzclose/io.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/report.hpp"
#include "fuzclose/tensor.hpp"
#include "fuzclose/topology.hpp"
#include "fuzclose/variable.hpp"
