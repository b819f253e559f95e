// Fuses the diagonal matrix element of a shape over its principal hooks
// and cross-checks it against the exchange recurrence.

#include <iostream>

#include "hookfusion/fusion.hpp"
#include "hookfusion/json_io.hpp"

using namespace hookfusion;

int main(int argc, char** argv) {
  Partition shape = Partition::parse(argc > 1 ? argv[1] : "3,3,2");
  StandardTableau t = hook_tableau(shape);
  std::cout << "shape " << shape.str() << ", hook tableau " << t.str() << "\n";
  AlgebraElement<Rat> fused = fuse(t, "hook");
  AlgebraElement<Rat> oracle = dme_any(t);
  std::cout << "terms: " << fused.size() << "\n";
  std::cout << "agrees with the recurrence: " << (fused == oracle ? "yes" : "NO") << "\n";
  std::cout << "identity coefficient: " << fused.identity_coeff().str() << "\n";
  return fused == oracle ? 0 : 1;
}
