// Copyright 2026 The gadsim Authors
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

#include "gadsim/config.hpp"
#include "gadsim/error.hpp"
#include "gadsim/expsim.hpp"
#include "gadsim/gad.hpp"
#include "gadsim/optics.hpp"
#include "gadsim/rng.hpp"
#include "gadsim/smallmat.hpp"
#include "gadsim/thermal.hpp"
