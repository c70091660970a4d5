// Decide revival on a few small graphs and print the reports.
#include <iostream>

#include "lafr/lafr.hpp"

int main() {
  using namespace lafr;
  for (const Graph& g : {path_graph(3), cycle_graph(6), double_cone(complete_graph(3))}) {
    const auto report = analyze(g);
    std::cout << to_text(report) << "\n";
  }

  // One pair, with the amplitudes at the earliest time.
  const auto d = decide_proper_lafr(cycle_graph(4), 0, 2);
  const auto amp = amplitudes_at(*d.phase);
  std::cout << "C4 (0,2): " << to_string(d.status) << " at " << d.earliest_time->to_string() << ", |beta|^2 = "
            << std::norm(amp.beta) << (*d.is_pst ? " (perfect state transfer)" : "") << "\n";
}
