#ifndef MVK_ERRORS_HPP
#define MVK_ERRORS_HPP

#include <stdexcept>

namespace mvk {

// Bad user-supplied data: malformed files, grammar violations, broken
// preconditions.  The CLI maps these to exit code 2.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; seeing one of these is a bug.  Exit code 3.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace mvk

#endif
