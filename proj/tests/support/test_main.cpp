#include <gtest/gtest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace {
std::uint64_t g_seed = 20240611;
}

std::uint64_t oracle::seed() { return g_seed; }

int main(int argc, char** argv) {
  std::vector<char*> args;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      args.push_back(argv[i]);
    }
  }
  int n = static_cast<int>(args.size());
  testing::InitGoogleTest(&n, args.data());
  std::printf("random seed %llu\n", static_cast<unsigned long long>(g_seed));
  return RUN_ALL_TESTS();
}
