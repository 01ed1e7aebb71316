#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "flagcurv/flag_manifold.hpp"

namespace flagcurv {

/// Invariant almost complex structure: one sign per isotropy summand.
/// J X_a = eps_a i X_a with eps on a positive root given by its summand
/// and eps_{-a} = -eps_a.
class AlmostComplexStructure {
public:
  AlmostComplexStructure() = default;
  explicit AlmostComplexStructure(std::vector<int> signs);

  /// Accepts "+,+,-", "++-", "(+,+,-)" and "+ + -".
  static AlmostComplexStructure parse(std::string_view text);
  /// All 2^n structures, all-plus first, in binary order on the minus signs.
  static std::vector<AlmostComplexStructure> enumerate(int summands);

  int size() const { return static_cast<int>(signs_.size()); }
  int sign(int summand) const { return signs_.at(static_cast<std::size_t>(summand - 1)); }
  const std::vector<int>& signs() const { return signs_; }
  AlmostComplexStructure conjugate() const;
  std::string str() const;  // "(+,+,-)"

  /// eps of a complementary root of d.
  int epsilon(const FlagDecomposition& d, const Root& r) const;

  friend bool operator==(const AlmostComplexStructure&, const AlmostComplexStructure&) = default;

private:
  std::vector<int> signs_;
};

enum class TripleType { ZeroThree, OneTwo };

std::string to_string(TripleType t);

/// The eps values of (a, b, c) of a canonical triple, negative member included.
std::array<int, 3> triple_signs(const AlmostComplexStructure& J, const Triple& t);

/// (0,3) iff the three eps values of the members agree.
TripleType triple_type(const AlmostComplexStructure& J, const Triple& t);

}  // namespace flagcurv
