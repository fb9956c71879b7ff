// error.hpp
//
// Exception types shared by every module. Each carries a coarse kind so the
// CLI can map failures onto exit codes without string matching.

#pragma once

#include <stdexcept>
#include <string>

namespace gbz {

enum class ErrorKind {
  kDomain,    // argument outside the mathematical domain of the operation
  kRange,     // argument exceeds the extent of a precomputed table
  kSize,      // requested table larger than the configured cap
  kCoverage,  // zero table does not reach the requested height
  kParse,     // malformed input text
  kOrder,     // zero ordinates not strictly increasing
  kEmpty,     // input file holds no data
  kIo,        // filesystem or network failure
  kCorrupt,   // cache file fails revalidation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define GBZ_DEFINE_ERROR(Name, Kind)                                       \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

GBZ_DEFINE_ERROR(DomainError, kDomain)
GBZ_DEFINE_ERROR(RangeError, kRange)
GBZ_DEFINE_ERROR(SizeError, kSize)
GBZ_DEFINE_ERROR(CoverageError, kCoverage)
GBZ_DEFINE_ERROR(ParseError, kParse)
GBZ_DEFINE_ERROR(OrderError, kOrder)
GBZ_DEFINE_ERROR(EmptyFileError, kEmpty)
GBZ_DEFINE_ERROR(IoError, kIo)
GBZ_DEFINE_ERROR(CorruptCacheError, kCorrupt)

#undef GBZ_DEFINE_ERROR

}  // namespace gbz
