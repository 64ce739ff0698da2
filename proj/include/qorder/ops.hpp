// Copyright 2026 the qorder authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qorder {

//! Arithmetic-operation tally. Comparators report their cost through a
//! caller-owned counter instead of global state, so concurrent invocations
//! never share anything. Counted operations are +, -, *, /, sqrt and
//! negation; sign tests, copies and comparisons are free.
struct OpCount {
  long long n = 0;
};

inline void tick(OpCount* c) {
  if (c != nullptr) ++c->n;
}

}  // namespace qorder
