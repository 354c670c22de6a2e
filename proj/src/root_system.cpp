#include "rootsmith/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace rootsmith {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t weyl_order_of(CartanType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      return factorial(n + 1);
    case Family::B:
    case Family::C:
      return (std::uint64_t{1} << n) * factorial(n);
    case Family::D:
      return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  return 0;
}

std::vector<std::vector<Coord>> cartan_matrix_of(CartanType t) {
  const int n = t.rank;
  std::vector<std::vector<Coord>> c(n, std::vector<Coord>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // alpha_n is the short root.
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;
      break;
    case Family::C:
      // alpha_n is the long root.
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      c[n - 1][n - 2] = -1;
      break;
    case Family::D:
      for (int i = 0; i + 3 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 2);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      // Chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4.
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case Family::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

std::vector<Coord> symmetrizers_of(CartanType t) {
  const int n = t.rank;
  std::vector<Coord> d(n, 1);
  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d[0] = d[1] = 2;
      break;
    case Family::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

Coord height(const RootCoords& v) {
  return std::accumulate(v.begin(), v.end(), Coord{0});
}

}  // namespace

bool CartanType::admissible() const {
  switch (family) {
    case Family::A:
      return rank >= 1;
    case Family::B:
      return rank >= 2;
    case Family::C:
      return rank >= 3;
    case Family::D:
      return rank >= 4;
    case Family::E:
      return rank >= 6 && rank <= 8;
    case Family::F:
      return rank == 4;
    case Family::G:
      return rank == 2;
  }
  return false;
}

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2)
    throw std::invalid_argument("cannot parse Cartan type '" +
                                std::string(label) + "'");
  const char fam = static_cast<char>(std::toupper(label.front()));
  if (fam < 'A' || fam > 'G')
    throw std::invalid_argument("unknown family in Cartan type '" +
                                std::string(label) + "'");
  int rank = 0;
  const auto* begin = label.data() + 1;
  const auto* end = label.data() + label.size();
  const auto [ptr, ec] = std::from_chars(begin, end, rank);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument("cannot parse rank in Cartan type '" +
                                std::string(label) + "'");
  const CartanType t{static_cast<Family>(fam), rank};
  if (!t.admissible())
    throw std::invalid_argument("inadmissible Cartan type '" +
                                std::string(label) + "'");
  return t;
}

std::string CartanType::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::size_t RootSystem::CoordsHash::operator()(
    const RootCoords& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const Coord c : v) {
    h ^= static_cast<std::size_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

RootSystem RootSystem::build(CartanType t) {
  if (!t.admissible())
    throw std::invalid_argument("inadmissible Cartan type '" + t.label() + "'");
  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_matrix_of(t);
  rs.d_ = symmetrizers_of(t);
  rs.weyl_order_ = weyl_order_of(t);
  const int n = t.rank;
  rs.gram_.assign(n, std::vector<Coord>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram_[i][j] = rs.d_[i] * rs.cartan_[i][j];

  // Orbit of the simple roots under the simple reflections.
  std::unordered_map<RootCoords, RootIndex, CoordsHash> seen;
  std::deque<RootCoords> work;
  std::vector<RootCoords> all;
  for (int i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    seen.emplace(e, 0);
    work.push_back(e);
    all.push_back(std::move(e));
  }
  while (!work.empty()) {
    const RootCoords v = std::move(work.front());
    work.pop_front();
    for (int i = 0; i < n; ++i) {
      Coord pair = 0;
      for (int j = 0; j < n; ++j) pair += rs.cartan_[i][j] * v[j];
      RootCoords w = v;
      w[i] -= pair;
      if (seen.emplace(w, 0).second) {
        work.push_back(w);
        all.push_back(std::move(w));
      }
    }
  }

  std::vector<RootCoords> positives;
  for (const auto& v : all) {
    const bool nonneg = std::all_of(v.begin(), v.end(),
                                    [](Coord c) { return c >= 0; });
    const bool nonpos = std::all_of(v.begin(), v.end(),
                                    [](Coord c) { return c <= 0; });
    if (!nonneg && !nonpos)
      throw std::logic_error("root with mixed coefficient signs");
    if (nonneg) positives.push_back(v);
  }
  if (positives.size() * 2 != all.size())
    throw std::logic_error("positive roots do not split the system in half");
  std::sort(positives.begin(), positives.end(),
            [](const RootCoords& a, const RootCoords& b) {
              const Coord ha = height(a), hb = height(b);
              return ha != hb ? ha < hb : a < b;
            });

  rs.positive_count_ = static_cast<RootIndex>(positives.size());
  rs.roots_ = positives;
  for (const auto& v : positives) {
    RootCoords neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(),
                   [](Coord c) { return -c; });
    rs.roots_.push_back(std::move(neg));
  }
  const std::size_t count = rs.roots_.size();
  for (std::size_t i = 0; i < count; ++i)
    rs.index_.emplace(rs.roots_[i], static_cast<RootIndex>(i));

  rs.simple_idx_.resize(n);
  for (int i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    rs.simple_idx_[i] = rs.index_.at(e);
  }

  rs.norms_.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    rs.norms_[i] = rs.inner(rs.roots_[i], rs.roots_[i]);
  const auto [mn, mx] = std::minmax_element(
      rs.norms_.begin(), rs.norms_.begin() + rs.positive_count_);
  rs.simply_laced_ = (*mn == *mx);

  rs.coroots_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    RootCoords cv(n);
    for (int j = 0; j < n; ++j) {
      const Coord num = rs.roots_[i][j] * 2 * rs.d_[j];
      if (num % rs.norms_[i] != 0)
        throw std::logic_error("non-integral coroot coordinate");
      cv[j] = num / rs.norms_[i];
    }
    rs.coroots_[i] = std::move(cv);
  }

  rs.inner_table_.resize(count * count);
  rs.pairing_table_.resize(count * count);
  rs.refl_table_.resize(count * count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const Coord ip = rs.inner(rs.roots_[a], rs.roots_[b]);
      rs.inner_table_[a * count + b] = ip;
      if ((2 * ip) % rs.norms_[a] != 0)
        throw std::logic_error("non-crystallographic pairing");
      const Coord pair = 2 * ip / rs.norms_[a];
      rs.pairing_table_[a * count + b] = pair;
      RootCoords im = rs.roots_[b];
      for (int j = 0; j < n; ++j) im[j] -= pair * rs.roots_[a][j];
      const auto it = rs.index_.find(im);
      if (it == rs.index_.end())
        throw std::logic_error("reflection left the root system");
      rs.refl_table_[a * count + b] = it->second;
    }
  }
  return rs;
}

Coord RootSystem::inner(const RootCoords& x, const RootCoords& y) const {
  const std::size_t n = gram_.size();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("dimension mismatch");
  Coord total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Coord row = 0;
    for (std::size_t j = 0; j < n; ++j) row += gram_[i][j] * y[j];
    total += x[i] * row;
  }
  return total;
}

Coord RootSystem::cartan_pairing(const RootCoords& beta,
                                 RootIndex alpha) const {
  const Coord two_ip = 2 * inner(roots_.at(alpha), beta);
  if (two_ip % norms_.at(alpha) != 0)
    throw std::logic_error("non-integral Cartan pairing");
  return two_ip / norms_.at(alpha);
}

RootCoords RootSystem::reflect(RootIndex alpha, const RootCoords& v) const {
  const Coord pair = cartan_pairing(v, alpha);
  RootCoords out = v;
  const RootCoords& a = roots_.at(alpha);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= pair * a[j];
  return out;
}

std::optional<RootIndex> RootSystem::root_index(
    const RootCoords& coords) const {
  if (coords.size() != static_cast<std::size_t>(rank())) return std::nullopt;
  const auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace rootsmith
