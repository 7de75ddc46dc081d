// Build y^3 = 3cy + alpha over F7 whose Galois closure is k(x, sqrt(x^2 - 3))
// and which is totally ramified exactly at x = 2 and x = -2, then check it.
#include <cstdio>

#include "cubica/analyzer.hpp"
#include "cubica/descent.hpp"

using namespace cubica;

int main() {
  Field F = Field::prime(7);
  QuadraticModel closure = QuadraticModel::kummer(Poly::from_ints(F, {-3, 0, 1}));
  std::vector<Place> T{Place::finite(Poly::from_ints(F, {-2, 1})), Place::finite(Poly::from_ints(F, {2, 1}))};

  if (!exists_descent(closure, T)) {
    std::puts("no descent");
    return 1;
  }
  int bad = 0;
  for (const auto& r : enumerate_descents(closure, T)) {
    RamificationReport R = analyze(r.model);
    std::printf("%-40s case=%s total=%s partial=%s genus=%d\n", r.model.to_string().c_str(), r.case_tag.c_str(),
                to_string(R.total).c_str(), to_string(R.partial).c_str(), R.genus);
    if (R.total != PlaceSet(T.begin(), T.end())) ++bad;
    if (!(purely_cubic_closure(r.model) == closure.cls())) ++bad;
  }
  std::printf("serre_count(2, 2) = %s\n", serre_count(2, 2).get_str().c_str());
  return bad ? 1 : 0;
}
