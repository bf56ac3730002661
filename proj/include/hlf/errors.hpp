#pragma once

#include <stdexcept>
#include <string>

namespace hlf {

// Error taxonomy shared by all modules. The CLI maps kinds to exit codes
// (usage/config/parse -> 2, resource -> 3), so every throw site picks the
// kind deliberately.
enum class errc {
  invalid_genus,
  invalid_type,
  invalid_vector,
  integrality,       // exact-rational signature is not an integer
  unsupported_base,  // ruled base genus < 2
  domain,            // argument outside an operation's documented domain
  parse,             // token-level failure, carries a byte offset
  semantic,          // well-formed input violating a range constraint
  config,            // bad profile file / unknown rule id
  resource,          // checked-integer overflow or exhaustion
  usage,             // bad CLI flags
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : error(errc::parse, what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

}  // namespace hlf
