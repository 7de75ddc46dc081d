// The genus-2 cover attached to the point (1, 2) of v^2 = u^8 + 4u^6 + 4u^4 - 5.
#include <cstdio>

#include "cubica/parshin.hpp"

using namespace cubica;

int main() {
  Field Q = Field::rationals();
  EtaleCover C(Poly::from_ints(Q, {-5, 0, 0, 0, 4, 0, 4, 0, 1}));
  ParshinCover R = parshin_cover(C, AffinePoint{Q.from_int(1), Q.from_int(2)});

  std::printf("X:      y^2 = %s\n", R.X.to_string().c_str());
  std::printf("3E:     %s\n", R.threeE.to_string().c_str());
  std::printf("P~:     %s\n", R.Pt.to_string().c_str());
  std::printf("P:      %s\n", R.P.to_string().c_str());
  std::printf("lambda: %s\n", R.lambda.to_string().c_str());
  std::printf("z^3 = 3*%s*z + %s\n", R.lambda.to_string().c_str(), R.alpha.to_string().c_str());
  std::printf("genus X = %d, genus Y = %d\n", R.genus_X, R.genus_Y);
  return R.divisor_ok && R.closure_ok && R.branch_ok ? 0 : 1;
}
