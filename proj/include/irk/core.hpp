#ifndef IRK_CORE_HPP
#define IRK_CORE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace irk {

/// Raised on malformed user input: bad element syntax, mixed-algebra
/// operands, size-guard violations, inconsistent assignments. CLI exit 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a built-in consistency assertion fails. This signals a bug
/// in an algebra instance, never bad input. CLI exit 3.
class InternalError : public std::runtime_error {
public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

enum class Family : std::uint8_t { sym, dual_sym };

std::string family_name(Family f);

/// Value identity of an algebra instance. Two instances with equal ids are
/// the same algebra; their elements interoperate.
struct AlgebraId {
  Family family;
  int n;

  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

std::string to_string(const AlgebraId& id);

/// A member of a concrete finite inverse algebra. Stores the owning
/// algebra's id and a canonical flat code; equality is structural and the
/// total order (id, then lexicographic code) drives every "first witness"
/// and report-ordering rule in the library.
class Element {
public:
  Element() = default;
  Element(AlgebraId id, std::vector<std::int32_t> code)
      : id_(id), code_(std::move(code)) {}

  const AlgebraId& owner() const { return id_; }
  const std::vector<std::int32_t>& code() const { return code_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.id_ == b.id_ && a.code_ == b.code_;
  }
  friend auto operator<=>(const Element& a, const Element& b) {
    if (auto c = a.id_ <=> b.id_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

private:
  AlgebraId id_{Family::sym, 0};
  std::vector<std::int32_t> code_;
};

}  // namespace irk

#endif  // IRK_CORE_HPP
