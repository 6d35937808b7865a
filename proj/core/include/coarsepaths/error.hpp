#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coarsepaths {

enum class ErrorCode : std::uint8_t {
  SelfLoop,
  Disconnected,
  RootMissing,
  DuplicateEdgeId,
  DuplicateVertex,
  VertexMissing,
  ParseError,
  UnknownFormat,
  Overflow,
  EndpointMismatch,
  NotAPath,
  EmptyIntersection,
  FlipNotSimple,
  NotTransitive,
  NotMember,
  CyclesNotDisjoint,
  CycleTooLong,
  BadSpec,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an enumeration would exceed its configured cap.
class OverflowError : public Error {
 public:
  OverflowError(std::string what_overflowed, std::size_t cap)
      : Error(ErrorCode::Overflow,
              what_overflowed + " exceeded cap of " + std::to_string(cap)),
        subject_(std::move(what_overflowed)),
        cap_(cap) {}

  const std::string& subject() const noexcept { return subject_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::string subject_;
  std::size_t cap_;
};

}  // namespace coarsepaths
