// Sweeps every connection diagram of a small shape and tabulates the
// validity verdict against regularity of the fused limit.

#include <iostream>

#include "hookfusion/ribbon.hpp"

using namespace hookfusion;

int main(int argc, char** argv) {
  Partition shape = Partition::parse(argc > 1 ? argv[1] : "2,2");
  const auto edges = ConnectionDiagram::all_edges(shape);
  int agree = 0, total = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << edges.size()); ++mask) {
    ConnectionDiagram d(column_tableau(shape));
    for (size_t i = 0; i < edges.size(); ++i)
      if (mask & (uint32_t{1} << i)) d.add_edge(edges[i].first, edges[i].second);
    Verdict v = validity_check(d);
    FullLimitResult res = full_limit(d);
    ++total;
    if (v.valid == res.outcome.regular()) ++agree;
    std::cout << (v.valid ? "valid  " : "invalid") << " -> "
              << (res.outcome.regular() ? "regular" : "pole") << "\n";
  }
  std::cout << agree << "/" << total << " diagrams agree\n";
  return agree == total ? 0 : 1;
}
