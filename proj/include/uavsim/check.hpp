#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uavsim {

enum class InjectedFault {
  None,
  /// Stress runs execute with the local deadline switched off while the
  /// cap check still expects it.
  FallbackIgnored,
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast self-check: A3 and detector oracle equivalence, Poisson rate smoke
/// test and the fallback cap. Prints one line per check.
std::vector<CheckResult> run_checks(std::ostream& out,
                                    InjectedFault fault = InjectedFault::None);

}  // namespace uavsim
