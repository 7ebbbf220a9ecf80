// Copyright 2026 The leo-lab Authors
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

#pragma once

#include "leolab/experiments.hpp"

#include <span>
#include <string>

namespace leolab {

/// Fidelity-vs-tau scatter with polylines, fixed 800x500 viewBox, y in
/// [0, 1]. LEO series are blue, free evolution red, leo-with-id green;
/// marker shape distinguishes experiments.
std::string render_svg(std::span<const FidelitySeries> series,
                       const std::string &title = "Protected-subspace fidelity");

} // namespace leolab
