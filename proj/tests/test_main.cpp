#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include <gtest/gtest.h>

#include "support/generators.hpp"

// Accepts --seed N or --seed=N in addition to the usual gtest flags.
int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    std::string value;
    if (a == "--seed" && i + 1 < argc)
      value = argv[++i];
    else if (a.rfind("--seed=", 0) == 0)
      value = a.substr(7);
    else {
      std::cerr << "unknown argument: " << a << '\n';
      return 2;
    }
    try {
      gen::seed() = std::stoull(value);
    } catch (const std::exception&) {
      std::cerr << "bad seed: " << value << '\n';
      return 2;
    }
  }
  std::cout << "property test seed: " << gen::seed() << '\n';
  return RUN_ALL_TESTS();
}
