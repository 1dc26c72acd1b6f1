// Copyright 2026 The epiq Authors
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

#include "epiq/born.hpp"
#include "epiq/effect.hpp"
#include "epiq/epistemic.hpp"
#include "epiq/error.hpp"
#include "epiq/experiments.hpp"
#include "epiq/groups.hpp"
#include "epiq/hilbert.hpp"
#include "epiq/inference.hpp"
#include "epiq/measurement.hpp"
#include "epiq/random.hpp"
#include "epiq/spin.hpp"
#include "epiq/tolerance.hpp"
