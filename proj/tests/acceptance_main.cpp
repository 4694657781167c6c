// Runs acceptance criteria 1-9 and prints one line per criterion.
// Exit status 0 iff every criterion that ran passed.
#include <iostream>
#include <set>

#include "CLI11.hpp"

#include "deltatab/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "run only these criteria (4, 5 and 6 share one sweep)");
  CLI11_PARSE(app, argc, argv);

  deltatab::acceptance::AcceptanceOptions opts;
  opts.only = std::set<int>(only.begin(), only.end());
  bool all = true;
  deltatab::acceptance::run_all(opts, [&](const deltatab::acceptance::CriterionResult& r) {
    all = all && r.pass;
    std::cout << deltatab::acceptance::format_result(r) << std::endl;
  });
  return all ? 0 : 1;
}
