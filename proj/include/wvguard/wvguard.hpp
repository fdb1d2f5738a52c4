// Copyright 2026 The wvguard Authors
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

// Umbrella header.
#pragma once

#include "wvguard/arrangement.hpp"
#include "wvguard/completion.hpp"
#include "wvguard/errors.hpp"
#include "wvguard/generators.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/guards.hpp"
#include "wvguard/io.hpp"
#include "wvguard/oracle.hpp"
#include "wvguard/pipeline.hpp"
#include "wvguard/polygon.hpp"
#include "wvguard/set_cover.hpp"
#include "wvguard/svg.hpp"
#include "wvguard/visibility.hpp"
#include "wvguard/weak_visibility.hpp"
#include "wvguard/wv_polygon.hpp"
