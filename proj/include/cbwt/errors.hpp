#pragma once

#include <stdexcept>
#include <string>

namespace cbwt {

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class AlphabetError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized index or input text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cbwt
