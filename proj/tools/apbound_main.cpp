// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/cli.hpp"

int main(int argc, char** argv) { return apbound::dispatch(argc, argv); }
