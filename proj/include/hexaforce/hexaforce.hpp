// Copyright 2026 The Hexaforce Authors.
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

#ifndef HEXAFORCE_HEXAFORCE_HPP_
#define HEXAFORCE_HEXAFORCE_HPP_

#include "hexaforce/altcycles.hpp"
#include "hexaforce/clique.hpp"
#include "hexaforce/edge_set.hpp"
#include "hexaforce/error.hpp"
#include "hexaforce/forcing.hpp"
#include "hexaforce/generator.hpp"
#include "hexaforce/hexcore.hpp"
#include "hexaforce/hitting_set.hpp"
#include "hexaforce/matchings.hpp"
#include "hexaforce/parallel.hpp"
#include "hexaforce/render.hpp"
#include "hexaforce/serialize.hpp"

#endif  // HEXAFORCE_HEXAFORCE_HPP_
