// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apbound {

// Exit codes: 0 success, 2 invalid arguments, 3 verification failure,
// 4 resource-cap exceeded.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv);

}  // namespace apbound
