#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcurv/root_system.hpp"

namespace flagcurv {

/// A generalized flag manifold G/K given by the simple roots removed from Theta.
struct FlagSpec {
  RootFamily root_system;
  std::vector<int> removed;  // 1-based simple-root indices, sorted
  std::string name;          // display name, e.g. "G2/U(2)"
  std::string slug;          // CLI handle, e.g. "G2/U2"

  void validate() const;
};

enum class FlagKind { TwoSummand, ThreeTypeI, ThreeTypeII, Other };

std::string to_string(FlagKind kind);
FlagKind parse_flag_kind(std::string_view text);

struct Summand {
  int index = 0;                  // 1-based
  std::vector<int> coefficient_tuple;  // coefficients on the removed roots
  std::vector<Root> roots;
  int real_dimension() const { return 2 * static_cast<int>(roots.size()); }
};

/// Zero-sum triple a + b + c = 0 of complementary roots, stored canonically:
/// a, b positive with a < b, c negative.
struct Triple {
  Root a, b, c;
  std::array<int, 3> summands{};  // summand index of |a|, |b|, |c|
  std::array<int, 3> pattern{};   // summands, sorted

  friend bool operator==(const Triple&, const Triple&) = default;
};

class FlagDecomposition {
public:
  FlagDecomposition(FlagSpec spec, RootSystemPtr rs, std::vector<Root> complementary,
                    std::vector<Summand> summands, FlagKind kind);

  const FlagSpec& spec() const { return spec_; }
  const RootSystem& root_system() const { return *rs_; }
  RootSystemPtr root_system_ptr() const { return rs_; }
  const std::vector<Root>& complementary_positive() const { return complementary_; }
  const std::vector<Summand>& summands() const { return summands_; }
  int summand_count() const { return static_cast<int>(summands_.size()); }
  FlagKind kind() const { return kind_; }
  std::vector<int> dimensions() const;
  int dimension() const;

  /// 1-based summand index of a complementary root (sign ignored); 0 if the root is in K.
  int summand_of(const Root& r) const;
  /// Coefficients of r on the removed simple roots.
  std::vector<int> coefficient_tuple(const Root& r) const;

private:
  FlagSpec spec_;
  RootSystemPtr rs_;
  std::vector<Root> complementary_;
  std::vector<Summand> summands_;
  FlagKind kind_;
};

FlagDecomposition decompose(const FlagSpec& spec);

/// Every zero-sum triple of complementary roots, once, in canonical form.
std::vector<Triple> enumerate_triples(const FlagDecomposition& d);

/// Descriptor of a catalog entry plus the table it reproduces.
struct CatalogEntry {
  FlagSpec spec;
  std::string table;  // "Table 1", "Table 3" or "Table 4"
  std::string parameters;  // e.g. "l=4,m=1"; empty for exceptional flags
};

/// Two-summand flags (Table 1), Type I (Table 3) and Type II (Table 4)
/// families at representative parameters.
const std::vector<CatalogEntry>& catalog();

/// Resolves a catalog slug, a parameterised family handle such as
/// "SU(n+2):n=3", or a raw "F4:2" / "A3:2,3" address.
/// Throws std::out_of_range for unknown names.
FlagSpec resolve_flag(std::string_view name);

/// Parameterised Type II and two-summand families.
FlagSpec su_three_blocks(int l, int m, int n);
FlagSpec so_even_u1_ul1(int l);

}  // namespace flagcurv
