// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace apbound {

enum class OutputFormat { text, csv, json };

struct RunConfig {
  int enumeration_cap = 24;  // brute force refuses n beyond this; hard max 32
  int thread_count = 1;
  std::string output;  // empty means stdout
  OutputFormat format = OutputFormat::text;

  void validate() const;
};

// Defaults for the CLI: the file named by APBOUND_CONFIG (JSON with any of
// the keys "cap", "threads", "output", "format"), if set, else built-ins.
RunConfig load_default_config();

}  // namespace apbound
