#include "flagcurv/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace flagcurv {

void RootFamily::validate() const {
  const auto bad = [this](const char* rule) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                std::string(1, "ABCDEFG"[static_cast<int>(family)]) + ": " + rule);
  };
  switch (family) {
    case Family::A: if (rank < 1) bad("A needs rank >= 1"); break;
    case Family::B: if (rank < 2) bad("B needs rank >= 2"); break;
    case Family::C: if (rank < 2) bad("C needs rank >= 2"); break;
    case Family::D: if (rank < 3) bad("D needs rank >= 3"); break;
    case Family::E: if (rank < 6 || rank > 8) bad("E needs rank 6, 7 or 8"); break;
    case Family::F: if (rank != 4) bad("F needs rank 4"); break;
    case Family::G: if (rank != 2) bad("G needs rank 2"); break;
  }
}

std::string RootFamily::str() const {
  return std::string(1, "ABCDEFG"[static_cast<int>(family)]) + std::to_string(rank);
}

RootFamily RootFamily::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed root family: '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string_view digits = text.substr(1);
  if (letter < 'A' || letter > 'G' ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("malformed root family: '" + std::string(text) + "'");
  RootFamily f{static_cast<Family>(letter - 'A'), std::stoi(std::string(digits))};
  f.validate();
  return f;
}

Root Root::simple(int rank, int index) {
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  c.at(static_cast<std::size_t>(index)) = 1;
  return Root(std::move(c));
}

int Root::height() const {
  int h = 0;
  for (int v : c_) h += v;
  return h;
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(c_.begin(), c_.end(), [](int v) { return v >= 0; });
}

bool Root::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

std::string Root::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

Root Root::operator-() const {
  std::vector<int> c(c_);
  for (int& v : c) v = -v;
  return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b) {
  if (a.c_.size() != b.c_.size()) throw std::invalid_argument("Root: rank mismatch");
  std::vector<int> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return Root(std::move(c));
}

Root operator*(int n, const Root& a) {
  std::vector<int> c(a.c_);
  for (int& v : c) v *= n;
  return Root(std::move(c));
}

namespace {

// Symmetric form on simple roots with long roots of squared length 2.
Matrix standard_gram(const RootFamily& f) {
  const int n = f.rank;
  Matrix b = Matrix::Constant(n, n, Rational(0));
  const auto link = [&b](int i, int j, const Rational& v) {
    b(i, j) = v;
    b(j, i) = v;
  };
  switch (f.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) b(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) b(i, i) = 2;
      b(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) b(i, i) = 1;
      b(n - 1, n - 1) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, Rational(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) b(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) b(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      b(0, 0) = 2;
      b(1, 1) = 2;
      b(2, 2) = 1;
      b(3, 3) = 1;
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Rational(-1, 2));
      break;
    case Family::G:
      b(0, 0) = 2;
      b(1, 1) = Rational(2, 3);
      link(0, 1, -1);
      break;
  }
  return b;
}

}  // namespace

RootSystem::RootSystem(RootFamily spec) : family_(spec) {
  family_.validate();
  const int n = family_.rank;
  const Matrix b = standard_gram(family_);

  cartan_ = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational a = Rational(2) * b(i, j) / b(j, j);
      if (!a.is_integer()) throw std::logic_error("non-integral Cartan entry");
      cartan_(i, j) = static_cast<int>(a.num().get_si());
    }

  // Closure of the simple roots under simple reflections, positive part only.
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root s = Root::simple(n, i);
    index_.emplace(s, 0);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const Root beta = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      int pairing = 0;
      for (int i = 0; i < n; ++i) pairing += beta[i] * cartan_(i, j);
      const Root image = beta - pairing * Root::simple(n, j);
      if (image.is_positive() && index_.emplace(image, 0).second) queue.push_back(image);
    }
  }
  positive_.reserve(index_.size());
  for (const auto& [root, unused] : index_) positive_.push_back(root);
  std::sort(positive_.begin(), positive_.end(), [](const Root& x, const Root& y) {
    return x.height() != y.height() ? x.height() < y.height() : x < y;
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);

  // Rescale so that sum_g (a_0,g)^2 = (a_0,a_0); the identity for other pairs
  // follows from irreducibility and is checked by killing_identity_holds.
  const Root a0 = Root::simple(n, 0);
  const auto raw = [&](const Root& x, const Root& y) {
    Rational s(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x[i] != 0 && y[j] != 0) s += Rational(x[i] * y[j]) * b(i, j);
    return s;
  };
  Rational total(0);
  for (const Root& g : positive_) {
    const Rational v = raw(a0, g);
    total += Rational(2) * v * v;
  }
  const Rational scale = total / b(0, 0);
  gram_ = b / scale;
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out(positive_);
  for (const Root& r : positive_) out.push_back(-r);
  return out;
}

bool RootSystem::is_root(const Root& r) const {
  if (r.rank() != rank() || r.is_zero()) return false;
  return r.is_positive() ? index_.count(r) != 0 : index_.count(-r) != 0;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s(0);
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0) s += Rational(a[i] * b[j]) * gram_(i, j);
  }
  return s;
}

RootSystem build_root_system(const RootFamily& spec) { return RootSystem(spec); }

RootSystemPtr shared_root_system(const RootFamily& spec) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, RootSystemPtr> cache;
  spec.validate();
  const std::pair<int, int> key{static_cast<int>(spec.family), spec.rank};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_shared<const RootSystem>(spec)).first;
  return it->second;
}

std::pair<int, int> root_string(const RootSystem& rs, const Root& alpha, const Root& beta) {
  if (beta == alpha || beta == -alpha)
    throw std::invalid_argument("root_string: beta must differ from +-alpha");
  if (!rs.is_root(alpha) || !rs.is_root(beta))
    throw std::invalid_argument("root_string: arguments must be roots");
  int p = 0;
  while (rs.is_root(beta - (p + 1) * alpha)) ++p;
  int q = 0;
  while (rs.is_root(beta + (q + 1) * alpha)) ++q;
  return {p, q};
}

std::vector<int> coefficient_heights(const RootSystem& rs) { return rs.highest_root().coeffs(); }

bool killing_identity_holds(const RootSystem& rs) {
  const int n = rs.rank();
  const auto roots = rs.all_roots();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Root ai = Root::simple(n, i);
      const Root aj = Root::simple(n, j);
      Rational sum(0);
      for (const Root& g : roots) sum += rs.inner(ai, g) * rs.inner(aj, g);
      if (sum != rs.inner(ai, aj)) return false;
    }
  return true;
}

}  // namespace flagcurv
