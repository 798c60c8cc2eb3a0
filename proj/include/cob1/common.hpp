#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cob1 {

// Orientation convention for the singular locus: SO = each branch point
// carries a sign, O = branch points are unoriented and counts live mod 2.
enum class Mode { SO, O };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

// Covering data that failed structural or semantic validation. Carries the
// full list of violations so callers can report all of them at once.
class InvalidDataError : public std::runtime_error {
public:
    explicit InvalidDataError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// A class vector outside the index-2 image subgroup (the even-parity
// condition on the entries of even type).
class NotInImageError : public std::runtime_error {
public:
    explicit NotInImageError(const std::string& what);
};

} // namespace cob1
