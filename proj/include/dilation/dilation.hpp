// Copyright 2026 The dilation Authors
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

#include "dilation/bounds.hpp"
#include "dilation/closed_curve.hpp"
#include "dilation/error.hpp"
#include "dilation/generators.hpp"
#include "dilation/graph.hpp"
#include "dilation/halving.hpp"
#include "dilation/io.hpp"
#include "dilation/metrics.hpp"
#include "dilation/point.hpp"
