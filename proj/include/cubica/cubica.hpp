#ifndef CUBICA_CUBICA_HPP
#define CUBICA_CUBICA_HPP

// Everything except the JSON layer (json_io.hpp, jobs.hpp), which pulls in
// nlohmann/json.

#include "analyzer.hpp"
#include "bitwist.hpp"
#include "descent.hpp"
#include "factor.hpp"
#include "field.hpp"
#include "function_field.hpp"
#include "mumford.hpp"
#include "parshin.hpp"
#include "pure_cubic.hpp"
#include "quadratic.hpp"

#endif  // CUBICA_CUBICA_HPP
