#ifndef DDZETA_ERRORS_HPP
#define DDZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ddzeta {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroProximityError : std::domain_error {
  using std::domain_error::domain_error;
};

struct RegionError : std::domain_error {
  using std::domain_error::domain_error;
};

struct CutoffError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  long line = 0;
  ParseError(const std::string& what, long line_no)
      : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

struct OrderingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroTableMissingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularCollisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ddzeta

#endif
