#include "flagcurv/almost_complex.hpp"

#include <cctype>
#include <stdexcept>

namespace flagcurv {

AlmostComplexStructure::AlmostComplexStructure(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("almost complex structure signs must be +1 or -1");
}

AlmostComplexStructure AlmostComplexStructure::parse(std::string_view text) {
  std::vector<int> signs;
  for (char c : text) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else if (c != ',' && c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed sign string '" + std::string(text) + "'");
    }
  }
  if (signs.empty()) throw std::invalid_argument("empty sign string");
  return AlmostComplexStructure(std::move(signs));
}

std::vector<AlmostComplexStructure> AlmostComplexStructure::enumerate(int summands) {
  std::vector<AlmostComplexStructure> out;
  for (unsigned mask = 0; mask < (1u << summands); ++mask) {
    std::vector<int> s(static_cast<std::size_t>(summands), 1);
    for (int i = 0; i < summands; ++i)
      if (mask & (1u << i)) s[static_cast<std::size_t>(i)] = -1;
    out.emplace_back(std::move(s));
  }
  return out;
}

AlmostComplexStructure AlmostComplexStructure::conjugate() const {
  std::vector<int> s(signs_);
  for (int& v : s) v = -v;
  return AlmostComplexStructure(std::move(s));
}

std::string AlmostComplexStructure::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i) out += ',';
    out += signs_[i] > 0 ? '+' : '-';
  }
  return out + ")";
}

int AlmostComplexStructure::epsilon(const FlagDecomposition& d, const Root& r) const {
  const int idx = d.summand_of(r);
  if (idx == 0) throw std::invalid_argument("epsilon: root " + r.str() + " is not complementary");
  return r.is_positive() ? sign(idx) : -sign(idx);
}

std::string to_string(TripleType t) { return t == TripleType::ZeroThree ? "(0,3)" : "(1,2)"; }

std::array<int, 3> triple_signs(const AlmostComplexStructure& J, const Triple& t) {
  // canonical: a, b positive, c negative
  return {J.sign(t.summands[0]), J.sign(t.summands[1]), -J.sign(t.summands[2])};
}

TripleType triple_type(const AlmostComplexStructure& J, const Triple& t) {
  const auto e = triple_signs(J, t);
  return (e[0] == e[1] && e[1] == e[2]) ? TripleType::ZeroThree : TripleType::OneTwo;
}

}  // namespace flagcurv
