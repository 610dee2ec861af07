// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include "wavelab/analysis_kernels.hpp"
#include "wavelab/gas_model.hpp"
#include "wavelab/interaction_engine.hpp"
#include "wavelab/io_format.hpp"
#include "wavelab/parallel.hpp"
#include "wavelab/prng.hpp"
#include "wavelab/riemann_solver.hpp"
#include "wavelab/root_finding.hpp"
#include "wavelab/transition_atlas.hpp"
#include "wavelab/verify.hpp"
#include "wavelab/wave_curves.hpp"
#include "wavelab/wave_kernels.hpp"

namespace wavelab {

inline constexpr const char* version = "0.1.0";

}  // namespace wavelab
