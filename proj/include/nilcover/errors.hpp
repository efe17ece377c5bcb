#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilcover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when enumerating a group by closure would exceed the element cap.
class ClosureCapExceeded : public Error {
 public:
  ClosureCapExceeded(std::size_t cap, std::size_t reached)
      : Error("closure cap of " + std::to_string(cap) +
              " elements exceeded (order is at least " +
              std::to_string(reached) + ")"),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t lower_bound() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

/// Raised when a group is too large for pair classification.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, std::size_t order, const std::string& what)
      : Error(what + ": group order " + std::to_string(order) +
              " exceeds cap " + std::to_string(cap)),
        cap_(cap),
        order_(order) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t order() const noexcept { return order_; }

 private:
  std::size_t cap_;
  std::size_t order_;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class Insoluble : public Error {
 public:
  using Error::Error;
};

class ElementNotInGroup : public Error {
 public:
  using Error::Error;
};

/// A construction whose existence is guaranteed by theory could not be built.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

/// A clique computation ran out of its time budget before deciding.
class Timeout : public Error {
 public:
  Timeout(const std::string& what, std::size_t lower_bound)
      : Error(what), lower_bound_(lower_bound) {}

  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t lower_bound_;
};

}  // namespace nilcover
