// Runs the acceptance criteria and prints one PASS/FAIL line each.
//   acceptance            run everything
//   acceptance 2 7        run the listed criteria only
//   acceptance --list     print the criteria without running them

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

#include "forest_trees/acceptance.hpp"

namespace ac = forest_trees::acceptance;

int main(int argc, char** argv) {
  std::vector<ac::Outcome> outcomes;
  if (argc > 1 && std::string_view(argv[1]) == "--list") {
    for (const ac::Criterion& c : ac::criteria())
      std::cout << c.id << "  " << c.title << "  (budget " << c.budget.count() << " s)\n";
    return 0;
  }
  if (argc == 1) {
    outcomes = ac::run_all();
  } else {
    for (int i = 1; i < argc; ++i) outcomes.push_back(ac::run(std::atoi(argv[i])));
  }
  bool all = true;
  for (const ac::Outcome& o : outcomes) {
    std::cout << ac::format(o) << std::endl;
    all = all && o.pass();
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
