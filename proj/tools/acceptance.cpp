/*
 * Copyright 2026 The jetreduce Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs the reference criteria and prints one line per criterion.
// Exit status is the number of failed criteria (capped at 125).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "jetreduce/regression.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  if (ids.empty())
    for (int k = 1; k <= jetreduce::kCriterionCount; ++k) ids.push_back(k);

  auto start = std::chrono::steady_clock::now();
  int failed = 0;
  jetreduce::run_criteria(ids, [&](const jetreduce::CriterionResult& r) {
    if (!r.pass) ++failed;
    std::cout << jetreduce::format_result(r) << std::endl;
  });
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu criteria, %d failed, %.3f s total\n", ids.size(), failed, total);
  return failed > 125 ? 125 : failed;
}
