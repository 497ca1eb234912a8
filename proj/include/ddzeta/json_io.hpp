// JSON serialization with decimal-string payloads (never binary floats),
// stable key order, byte-identical across repeated runs.
#ifndef DDZETA_JSON_IO_HPP
#define DDZETA_JSON_IO_HPP

#include <json.hpp>

#include "ddzeta/continuation.hpp"
#include "ddzeta/limits.hpp"

namespace ddzeta {

using Json = nlohmann::ordered_json;

Json to_json(const Real& x, int digits);
Json to_json(const Complex& z, int digits);
Json to_json(const EvalResult& r, const EvalParams& p);
Json to_json(const SingularExpansion& e, int digits);
Json to_json(const std::vector<SingularityMatch>& matches);

}  // namespace ddzeta

#endif
