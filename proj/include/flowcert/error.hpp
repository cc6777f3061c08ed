#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flowcert {

enum class ErrorKind {
  invalid_group,
  invalid_element,
  not_a_flow,
  shape,
  invalid_permutation,
  not_implemented,
  capacity,
  invalid_exchange,
  containment,
  invalid_move,
  precondition,
  internal_invariant,
  invalid_transformation,
  invalid_fiber,
  incompatible,
  parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Carries the offending zero-sum violation.
class NotAFlowError : public Error {
 public:
  NotAFlowError(std::uint32_t sum, const std::string& what)
      : Error(ErrorKind::not_a_flow, what), sum_(sum) {}
  std::uint32_t sum() const noexcept { return sum_; }

 private:
  std::uint32_t sum_;
};

class InvalidExchangeError : public Error {
 public:
  InvalidExchangeError(std::uint32_t sum_f, std::uint32_t sum_g,
                       const std::string& what)
      : Error(ErrorKind::invalid_exchange, what), sum_f_(sum_f), sum_g_(sum_g) {}
  std::uint32_t sum_f() const noexcept { return sum_f_; }
  std::uint32_t sum_g() const noexcept { return sum_g_; }

 private:
  std::uint32_t sum_f_;
  std::uint32_t sum_g_;
};

/// Raised when an enumeration would exceed a configured cap. `required` is
/// the computed size (saturated at UINT64_MAX), `where` names the location
/// (degree, fiber) so callers can report partial sweeps.
class CapacityError : public Error {
 public:
  CapacityError(std::uint64_t required, std::uint64_t cap, std::string where)
      : Error(ErrorKind::capacity,
              "capacity exceeded at " + where + ": need " +
                  std::to_string(required) + ", cap " + std::to_string(cap)),
        required_(required),
        cap_(cap),
        where_(std::move(where)) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }
  const std::string& where() const noexcept { return where_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
  std::string where_;
};

// Row-indexed load failure (row < 0 when not row specific).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, long row, long col, const std::string& what)
      : Error(kind, what), row_(row), col_(col) {}
  long row() const noexcept { return row_; }
  long col() const noexcept { return col_; }

 private:
  long row_;
  long col_;
};

}  // namespace flowcert
