// Run the free-tree campaign up to a given order and print it as JSON.
#include <cstdlib>
#include <iostream>

#include "lafr/lafr.hpp"

int main(int argc, char** argv) {
  const std::size_t n_max = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;
  const auto result = lafr::campaign_trees(n_max);
  std::cout << lafr::to_json(result).dump(2) << "\n";
  return result.ok() ? 0 : 1;
}
