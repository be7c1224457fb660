#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace flagsh {

enum class Outcome { Yes, No, Unknown };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

inline constexpr std::size_t kDefaultSearchBudget = 100'000;

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t budget = 0;
};

/// Outcome of a budgeted search. `Yes` always carries a certificate; `No`
/// means the move grammar was exhausted; `Unknown` means the budget ran out.
template <class Certificate>
struct SearchVerdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<Certificate> certificate;
  SearchStats stats;

  bool yes() const noexcept { return outcome == Outcome::Yes; }
  bool no() const noexcept { return outcome == Outcome::No; }
};

/// Result of replaying a certificate; on failure names the first bad step.
struct CheckResult {
  bool ok = true;
  std::size_t step = 0;
  std::string reason;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::size_t step, std::string reason) { return {false, step, std::move(reason)}; }
  explicit operator bool() const noexcept { return ok; }
};

}  // namespace flagsh
