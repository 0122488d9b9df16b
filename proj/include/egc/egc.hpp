/*
 * Copyright 2026 The eternal-colouring Authors
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

#include "egc/audit.hpp"
#include "egc/bitset.hpp"
#include "egc/color_plan.hpp"
#include "egc/experiment.hpp"
#include "egc/game.hpp"
#include "egc/graph.hpp"
#include "egc/partitions.hpp"
#include "egc/play.hpp"
#include "egc/rational.hpp"
#include "egc/rng.hpp"
#include "egc/solver.hpp"
#include "egc/strategies/alice_paper.hpp"
#include "egc/strategies/baseline.hpp"
#include "egc/strategies/bob_general.hpp"
#include "egc/strategies/bob_odd.hpp"
#include "egc/strategies/registry.hpp"
#include "egc/strategy.hpp"
#include "egc/transcript.hpp"
