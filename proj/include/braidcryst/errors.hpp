#ifndef BRAIDCRYST_ERRORS_HPP
#define BRAIDCRYST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidcryst {

// A certified property failed to hold at runtime. This never fires on valid
// input; it indicates a bug and maps to a distinct CLI exit code.
class verification_error : public std::runtime_error {
  public:
    explicit verification_error(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace braidcryst

#endif
