#pragma once

#include <compare>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagcurv/rational.hpp"

namespace flagcurv {

enum class Family { A, B, C, D, E, F, G };

/// Cartan type of a simple Lie algebra, e.g. {Family::F, 4}.
struct RootFamily {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument when the rank is not allowed for the family.
  void validate() const;
  std::string str() const;  // "F4"
  /// Parses "A3", "e8", "G2".
  static RootFamily parse(std::string_view text);

  friend bool operator==(const RootFamily&, const RootFamily&) = default;
};

/// Integer coordinates of a root over the simple roots.
class Root {
public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  static Root simple(int rank, int index);  // 0-based index

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coeffs() const { return c_; }
  int height() const;
  bool is_positive() const;  // all coefficients >= 0 and not zero
  bool is_zero() const;
  std::string str() const;  // "[1,2,2,0]"

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b) { return a + (-b); }
  friend Root operator*(int n, const Root& a);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.c_ <=> b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const Root& r) { return os << r.str(); }

private:
  std::vector<int> c_;
};

/// A simple root system with exact Killing-dual inner products.
///
/// Simple roots are numbered as in Bourbaki, except G2 where alpha1 is the
/// long root and alpha2 the short one (highest root 2a1 + 3a2).
/// The inner product is normalised by sum_{g in roots} <l,g><m,g> = <l,m>,
/// i.e. it is the form dual to the Cartan-Killing form.
class RootSystem {
public:
  explicit RootSystem(RootFamily spec);

  const RootFamily& family() const { return family_; }
  int rank() const { return family_.rank; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const Matrix& gram_killing() const { return gram_; }
  /// Sorted by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Positive roots followed by their negatives.
  std::vector<Root> all_roots() const;
  const Root& highest_root() const { return positive_.back(); }

  bool is_root(const Root& r) const;
  Rational inner(const Root& a, const Root& b) const;

private:
  RootFamily family_;
  IntMatrix cartan_;
  Matrix gram_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystem build_root_system(const RootFamily& spec);

/// Cached shared instance; root systems are immutable.
RootSystemPtr shared_root_system(const RootFamily& spec);

/// Length of the alpha-string through beta: beta + n*alpha is a root
/// exactly for -p <= n <= q. Throws when beta = +-alpha.
std::pair<int, int> root_string(const RootSystem& rs, const Root& alpha, const Root& beta);

/// Coefficient of each simple root (0-based) in the highest root.
std::vector<int> coefficient_heights(const RootSystem& rs);

/// Checks sum_g <a_i,g><a_j,g> == <a_i,a_j> exactly for every pair of simple roots.
bool killing_identity_holds(const RootSystem& rs);

}  // namespace flagcurv
