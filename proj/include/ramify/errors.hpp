#ifndef RAMIFY_ERRORS_HPP
#define RAMIFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramify {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// An answer would depend on digits beyond the stored absolute precision.
struct precision_too_low : error {
    explicit precision_too_low(const std::string& msg) : error(msg) {}
};

// Operands belong to different base-field configurations.
struct config_mismatch : error {
    explicit config_mismatch(const std::string& msg) : error(msg) {}
};

struct not_a_unit : error {
    explicit not_a_unit(const std::string& msg) : error(msg) {}
};

// Partition weights disagree where they must match.
struct weight_mismatch : error {
    explicit weight_mismatch(const std::string& msg) : error(msg) {}
};

// Combinatorial enumeration beyond the supported weight cap.
struct cap_exceeded : error {
    explicit cap_exceeded(const std::string& msg) : error(msg) {}
};

struct too_many_parts : error {
    explicit too_many_parts(const std::string& msg) : error(msg) {}
};

struct part_out_of_range : error {
    explicit part_out_of_range(const std::string& msg) : error(msg) {}
};

// A theorem's hypothesis does not hold for the given inputs.
struct hypothesis_violated : error {
    explicit hypothesis_violated(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

}  // namespace ramify

#endif
