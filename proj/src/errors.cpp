#include "nilmult/errors.hpp"

#include <utility>

namespace nilmult {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

MissingData::MissingData(std::string field)
    : Error("missing data: " + field), field_(std::move(field)) {}

}  // namespace nilmult
