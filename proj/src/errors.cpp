#include "posetlie/errors.hpp"

namespace posetlie {

ParseError::ParseError(std::size_t line, const std::string& what)
  : Error("line " + std::to_string(line) + ": " + what)
  , line_(line)
{
}

BoundExceeded::BoundExceeded(std::size_t size, std::size_t bound)
  : Error("|B| = " + std::to_string(size) + " exceeds the enumeration bound " +
          std::to_string(bound))
  , size_(size)
  , bound_(bound)
{
}

NotClosed::NotClosed(const std::string& what, std::size_t first, std::size_t second)
  : Error(what)
  , first_(first)
  , second_(second)
{
}

} // namespace posetlie
