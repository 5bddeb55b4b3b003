// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace photonic {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace photonic
