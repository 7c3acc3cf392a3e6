#include <iostream>

#include "heatlab/acceptance.hpp"

int main() {
  const auto results = heatlab::acceptance::run_all();
  heatlab::acceptance::print_table(std::cout, results);
  return heatlab::acceptance::all_passed(results) ? 0 : 1;
}
