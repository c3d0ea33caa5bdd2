#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fintopo {

// Base of every domain error raised by the library. kind() is a stable
// machine-readable tag; the CLI serializes it into {"error": {...}}.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class UnknownPointError : public Error {
 public:
  explicit UnknownPointError(const std::string& id)
      : Error("UnknownPoint", "unknown point: \"" + id + "\""), id_(id) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class MapSpaceMismatchError : public Error {
 public:
  explicit MapSpaceMismatchError(const std::string& message)
      : Error("MapSpaceMismatch", message) {}
};

// An exhaustive computation was asked for an instance above its size cap.
class OracleTooLargeError : public Error {
 public:
  OracleTooLargeError(std::size_t size, std::size_t limit)
      : Error("OracleTooLarge", "instance size " + std::to_string(size) +
                                    " exceeds oracle limit " +
                                    std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

class EnumerationTooLargeError : public Error {
 public:
  EnumerationTooLargeError(std::string count, std::size_t limit)
      : Error("EnumerationTooLarge", "exact map count " + count +
                                         " exceeds requested limit " +
                                         std::to_string(limit)),
        count_(std::move(count)),
        limit_(limit) {}

  // Decimal string; the count may not fit any machine integer.
  const std::string& count() const noexcept { return count_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string count_;
  std::size_t limit_;
};

class EmptyWindowError : public Error {
 public:
  EmptyWindowError(long lo, long hi)
      : Error("EmptyWindow", "empty window: lo = " + std::to_string(lo) +
                                 " > hi = " + std::to_string(hi)) {}
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& what_requested, std::size_t limit)
      : Error("SizeLimit",
              what_requested + " exceeds limit " + std::to_string(limit)),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class EmptyCodomainError : public Error {
 public:
  EmptyCodomainError()
      : Error("EmptyCodomain",
              "cannot map a nonempty space into an empty one") {}
};

// Malformed input file or JSON document.
class JsonFormatError : public Error {
 public:
  explicit JsonFormatError(const std::string& message)
      : Error("JsonFormat", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("Io", message) {}
};

}  // namespace fintopo
